//! Serde representations. Monomials travel as exponent lists (`[]` is `e`),
//! coefficients as decimal strings, terms in canonical order.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::CdMonomial;
use super::poly::CdPolynomial;
use super::tensor::TensorElement;

#[derive(Serialize, Deserialize)]
struct TermRepr {
    list: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    degree: i64,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TensorTermRepr {
    left: Vec<u32>,
    right: Vec<u32>,
    coeff: String,
}

fn parse_coeff<E: serde::de::Error>(s: &str) -> Result<BigInt, E> {
    s.parse()
        .map_err(|_| E::custom(format!("bad coefficient `{s}`")))
}

impl Serialize for CdMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.exponents().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CdMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(CdMonomial::from_exponents(Vec::<u32>::deserialize(d)?))
    }
}

impl Serialize for CdPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            degree: self.degree().unwrap_or(0),
            terms: self
                .terms()
                .map(|(m, c)| TermRepr {
                    list: m.exponents().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CdPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let mut p = CdPolynomial::zero();
        for t in repr.terms {
            p.add_term(CdMonomial::from_exponents(t.list), parse_coeff(&t.coeff)?);
        }
        if !p.is_zero() && p.degree() != Some(repr.degree) {
            return Err(D::Error::custom("degree field does not match terms"));
        }
        Ok(p)
    }
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TensorTermRepr> = self
            .terms()
            .map(|((l, r), c)| TensorTermRepr {
                left: l.exponents().to_vec(),
                right: r.exponents().to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TensorTermRepr>::deserialize(d)?;
        let mut t = TensorElement::zero();
        for x in terms {
            t.add_term(
                CdMonomial::from_exponents(x.left),
                CdMonomial::from_exponents(x.right),
                parse_coeff(&x.coeff)?,
            );
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_schema() {
        let mut p = CdPolynomial::zero();
        p.add_list(&[2], 1);
        p.add_list(&[0, 0], 1);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "degree": 2,
                "terms": [
                    {"list": [0, 0], "coeff": "1"},
                    {"list": [2], "coeff": "1"}
                ]
            })
        );
        let back: CdPolynomial = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn zero_and_e() {
        let z = serde_json::to_string(&CdPolynomial::zero()).unwrap();
        assert_eq!(z, r#"{"degree":0,"terms":[]}"#);
        let e = serde_json::to_string(&CdPolynomial::e()).unwrap();
        assert_eq!(e, r#"{"degree":-1,"terms":[{"list":[],"coeff":"1"}]}"#);
    }

    #[test]
    fn tensor_schema() {
        let t = TensorElement::term(CdMonomial::e(), CdMonomial::one(), -3);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"[{"left":[],"right":[0],"coeff":"-3"}]"#);
        let back: TensorElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
