use std::fs;
use std::io::Write;
use std::path::Path;

use cdindex::algebra::{ab_to_cd, CdMonomial};
use cdindex::analysis::{
    cubical_property_suite, scan_balance, scan_divisibility, scan_identities, scan_inequalities,
    scan_maxima, scan_products, scan_unimodal, scan_unimodal_suite, ScanReport, Table,
};
use cdindex::dual::free_decompose;
use cdindex::lattice::{
    boolean_cd_index, boolean_table, cubical_table, subspace_ab_index, BooleanMethod,
};
use cdindex::oracle::{
    ab_index_chain_weights, ab_index_from_flags, build_boolean_capped, build_cube_capped,
    dehn_sommerville_check, dehn_sommerville_instances, flag_f_vector, flag_h_vector,
    is_eulerian, mask_ranks, RankedPoset,
};
use cdindex::verify::{verify as run_suite, Suite};

use crate::config::Config;
use crate::error::CliError;
use crate::{ExportFormat, ExportWhat, FamilyArg, MethodArg, ScanArgs, ScanKind, ScanParams, SuiteArg};

type Out<'a> = &'a mut dyn Write;

fn emit(out: Out, text: impl AsRef<str>) -> Result<(), CliError> {
    writeln!(out, "{}", text.as_ref()).map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

fn pretty_json(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn check_rank(cfg: &Config, rank: usize) -> Result<(), CliError> {
    if rank > cfg.max_rank {
        return Err(CliError::RankCap {
            requested: rank,
            cap: cfg.max_rank,
        });
    }
    Ok(())
}

pub fn load_cache(cfg: &Config) -> Result<(), CliError> {
    if let Some(dir) = cfg.cache_dir.as_deref().filter(|d| d.is_dir()) {
        boolean_table().load(dir)?;
        cubical_table().load(dir)?;
    }
    Ok(())
}

fn save_cache(cfg: &Config, boolean: bool, rank: usize) -> Result<(), CliError> {
    if let Some(dir) = &cfg.cache_dir {
        let table = if boolean { boolean_table() } else { cubical_table() };
        table.save(dir, rank)?;
    }
    Ok(())
}

pub fn index(
    cfg: &Config,
    out: Out,
    family: FamilyArg,
    rank: usize,
    method: MethodArg,
    json: bool,
) -> Result<(), CliError> {
    check_rank(cfg, rank)?;
    let poly = match family {
        FamilyArg::Subspace => {
            let p = subspace_ab_index(rank);
            return emit(out, if json { pretty_json(&p.to_json()) } else { p.to_string() });
        }
        FamilyArg::Cubical => {
            if rank == 0 {
                return Err(CliError::Usage("cubical ranks start at 1".into()));
            }
            if method != MethodArg::Ghat {
                return Err(CliError::Usage("--method applies to the Boolean family only".into()));
            }
            let p = cubical_table().poly(rank);
            save_cache(cfg, false, rank)?;
            p
        }
        FamilyArg::Boolean => match method {
            MethodArg::Ghat => {
                let p = boolean_table().poly(rank);
                save_cache(cfg, true, rank)?;
                p
            }
            MethodArg::Purtill => boolean_cd_index(rank, BooleanMethod::Purtill),
            MethodArg::Phi => boolean_cd_index(rank, BooleanMethod::Phi),
        },
    };
    if json {
        emit(out, serde_json::to_string(&poly).expect("polynomials serialize"))
    } else {
        emit(out, poly.to_string())
    }
}

fn parse_monomial(s: &str) -> Result<CdMonomial, CliError> {
    Ok(s.parse::<CdMonomial>()?)
}

pub fn coefficient(cfg: &Config, out: Out, monomial: &str, cubical: bool) -> Result<(), CliError> {
    let m = parse_monomial(monomial)?;
    if cubical && m.is_e() {
        return Err(CliError::Usage("γ is not defined on e".into()));
    }
    check_rank(cfg, (m.degree() + 1) as usize)?;
    let v = if cubical { cdindex::lattice::gamma(&m) } else { cdindex::lattice::beta(&m) };
    emit(out, v.to_string())
}

fn suite_of(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Core => Suite::Core,
        SuiteArg::Coalgebra => Suite::Coalgebra,
        SuiteArg::Dual => Suite::Dual,
        SuiteArg::Lattice => Suite::Lattice,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Cubical => Suite::Cubical,
    }
}

fn report_out(out: Out, reports: &[ScanReport], json: bool) -> Result<(), CliError> {
    if json {
        let v: Vec<serde_json::Value> = reports.iter().map(ScanReport::to_json).collect();
        emit(out, pretty_json(&serde_json::Value::Array(v)))?;
    } else {
        for r in reports {
            emit(out, r.render())?;
        }
    }
    let failed: u64 = reports.iter().map(ScanReport::theorem_failures).sum();
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    Ok(())
}

pub fn verify(out: Out, suite: Option<SuiteArg>, max_degree: usize, json: bool) -> Result<(), CliError> {
    let suites: Vec<Suite> = match suite {
        Some(s) => vec![suite_of(s)],
        None => Suite::ALL.to_vec(),
    };
    let reports: Vec<ScanReport> = suites.into_iter().map(|s| run_suite(s, max_degree)).collect();
    report_out(out, &reports, json)
}

fn run_scan(kind: ScanKind, p: &ScanParams) -> Result<ScanReport, CliError> {
    Ok(match kind {
        ScanKind::Identities => scan_identities(p.max_degree),
        ScanKind::Inequalities => scan_inequalities(p.max_degree),
        ScanKind::Unimodal => match (p.i, p.j, p.l) {
            (Some(i), Some(j), Some(l)) => {
                if j <= i || l == 0 {
                    return Err(CliError::Usage("unimodal family needs j > i and l ≥ 1".into()));
                }
                scan_unimodal(i as u32, j as u32, l)
            }
            (None, None, None) => scan_unimodal_suite(p.max_degree),
            _ => return Err(CliError::Usage("give all of --i, --j, --l or none".into())),
        },
        ScanKind::Maxima => scan_maxima(p.min_degree.max(2), p.max_degree),
        ScanKind::Balance => scan_balance(p.max_degree),
        ScanKind::Divisibility => {
            let rank = p.rank.unwrap_or(13);
            if rank == 0 || p.modulus == 0 {
                return Err(CliError::Usage("rank and modulus must be positive".into()));
            }
            scan_divisibility(rank, p.modulus)
        }
        ScanKind::Products => scan_products(p.max_degree),
        ScanKind::Cubical => cubical_property_suite(p.max_degree),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub fn scan(out: Out, args: &ScanArgs, json: bool, path: Option<&Path>) -> Result<(), CliError> {
    let report = run_scan(args.kind, &args.params)?;
    if let Some(p) = path {
        write_file(p, &pretty_json(&report.to_json()))?;
    }
    report_out(out, std::slice::from_ref(&report), json)
}

fn load_poset(cfg: &Config, spec: &str, rank: Option<usize>) -> Result<(RankedPoset, Option<(bool, usize)>), CliError> {
    let need = |what: &str| rank.ok_or_else(|| CliError::Usage(format!("--rank is required for {what}")));
    match spec {
        "boolean" => {
            let n = need("boolean")?;
            Ok((build_boolean_capped(n, cfg.oracle_boolean_rank)?, Some((true, n))))
        }
        "cube" => {
            let n = need("cube")?;
            if n == 0 {
                return Err(CliError::Usage("cube face lattices have rank ≥ 1".into()));
            }
            Ok((build_cube_capped(n - 1, cfg.oracle_cube_dimension)?, Some((false, n))))
        }
        _ => {
            let path = spec
                .strip_prefix("file:")
                .ok_or_else(|| CliError::Usage(format!("unknown poset `{spec}`")))?;
            let text = fs::read_to_string(path).map_err(|e| CliError::io(Path::new(path), e))?;
            let p = RankedPoset::from_text(&text)?;
            if let Some(n) = rank.filter(|&n| n != p.rank_of_poset()) {
                return Err(CliError::Usage(format!("{path} has rank {}, not {n}", p.rank_of_poset())));
            }
            Ok((p, None))
        }
    }
}

fn set_name(mask: usize) -> String {
    let parts: Vec<String> = mask_ranks(mask).iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn oracle(cfg: &Config, out: Out, spec: &str, rank: Option<usize>, compare: bool) -> Result<(), CliError> {
    let (poset, known) = load_poset(cfg, spec, rank)?;
    let n = poset.rank_of_poset();
    emit(out, format!("poset: {spec}, rank {n}, {} elements", poset.len()))?;
    let eulerian = is_eulerian(&poset);
    emit(out, format!("eulerian: {}", if eulerian { "yes" } else { "no" }))?;
    let f = flag_f_vector(&poset)?;
    let h = flag_h_vector(&f)?;
    let mut table = Table::new(&["S", "f_S", "h_S"]);
    for mask in 0..1usize << f.n() {
        table.push(vec![set_name(mask), f.get(mask).to_string(), h.get(mask).to_string()]);
    }
    emit(out, table.render().trim_end())?;
    let ab = ab_index_from_flags(&poset)?;
    emit(out, format!("ab-index: {ab}"))?;
    let chains_agree = ab_index_chain_weights(&poset)? == ab;
    emit(out, format!("chain weights agree: {}", if chains_agree { "yes" } else { "no" }))?;
    let cd = ab_to_cd(&ab);
    match &cd {
        Ok(p) => emit(out, format!("cd-index: {p}"))?,
        Err(_) => emit(out, "cd-index: none (the ab-index is not a polynomial in c, d)")?,
    }
    let instances = dehn_sommerville_instances(f.n());
    let holding = instances
        .iter()
        .filter(|i| dehn_sommerville_check(&f, i).unwrap_or(false))
        .count();
    emit(out, format!("dehn-sommerville: {holding}/{} instances hold", instances.len()))?;
    let mut failures = u64::from(!chains_agree);
    if compare {
        let Some((boolean, r)) = known else {
            return Err(CliError::Usage("--compare needs a boolean or cube poset".into()));
        };
        let expected = if boolean { boolean_table() } else { cubical_table() }.poly(r);
        let matches = cd.as_ref().is_ok_and(|p| *p == expected);
        emit(out, format!("compare: {}", if matches { "matches the algebraic index" } else { "MISMATCH" }))?;
        failures += u64::from(!matches) + (instances.len() - holding) as u64;
    }
    if failures > 0 {
        return Err(CliError::ChecksFailed(failures));
    }
    Ok(())
}

pub fn decompose(out: Out, monomial: &str, json: bool) -> Result<(), CliError> {
    let m = parse_monomial(monomial)?;
    let d = free_decompose(&m)?;
    if json {
        emit(out, pretty_json(&d.to_json()))
    } else {
        emit(out, d.to_string())
    }
}

fn checks_table(r: &ScanReport) -> Table {
    let mut t = Table::new(&["check", "kind", "checked", "holds", "equal", "fail"]);
    for c in &r.checks {
        t.push(vec![
            c.name.clone(),
            format!("{:?}", c.kind).to_lowercase(),
            c.checked.to_string(),
            c.holds.to_string(),
            c.equalities.to_string(),
            c.failures.to_string(),
        ]);
    }
    t
}

#[allow(clippy::too_many_arguments)]
pub fn export(
    cfg: &Config,
    what: ExportWhat,
    format: ExportFormat,
    path: &Path,
    family: FamilyArg,
    scan_kind: Option<ScanKind>,
    params: &ScanParams,
) -> Result<(), CliError> {
    let text = match what {
        ExportWhat::Table => {
            let rank = params
                .rank
                .ok_or_else(|| CliError::Usage("--rank is required for a table".into()))?;
            check_rank(cfg, rank)?;
            let poly = match family {
                FamilyArg::Boolean => boolean_table().poly(rank),
                FamilyArg::Cubical if rank >= 1 => cubical_table().poly(rank),
                _ => return Err(CliError::Usage("tables exist for boolean and cubical ranks ≥ 1".into())),
            };
            match format {
                ExportFormat::Json => serde_json::to_string_pretty(&poly).expect("serializes"),
                ExportFormat::Csv => {
                    let mut t = Table::new(&["list", "word", "coefficient"]);
                    for (m, c) in poly.terms() {
                        t.push(vec![m.to_list_string(), m.to_string(), c.to_string()]);
                    }
                    t.to_csv()
                }
            }
        }
        ExportWhat::Report => {
            let kind = scan_kind.ok_or_else(|| CliError::Usage("--scan is required for a report".into()))?;
            let r = run_scan(kind, params)?;
            match format {
                ExportFormat::Json => pretty_json(&r.to_json()),
                ExportFormat::Csv => r.table.clone().unwrap_or_else(|| checks_table(&r)).to_csv(),
            }
        }
    };
    write_file(path, &text)
}
