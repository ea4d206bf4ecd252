//! The ω map and cd partial order, plus exhaustive scans of the identities
//! and inequalities satisfied by `β` and `γ`.

pub mod lists;
mod balance;
mod cubical;
mod divisibility;
mod identities;
mod inequalities;
mod maxima;
mod omega;
mod products;
mod report;
mod unimodal;

pub use identities::{
    identity_moves, scan_identities, search_equal_beta, Coincidence, ExplainedClasses, PairSearch,
};
pub use inequalities::scan_inequalities;
pub use omega::{
    alternating_sum_beta, boolean_ab_index, cd_order_covers, cd_order_down_set, cd_rank,
    is_valid_ab, omega,
};
pub use report::{
    classify, CheckKind, CheckTally, Counterexample, Functional, Instance, Param, Relation,
    ScanReport, Status, Table, Witness,
};
pub use unimodal::{
    is_reverse_unimodal, scan_unimodal, scan_unimodal_suite, unimodal_list, unimodal_list_degree,
    unimodal_sequence,
};
pub use maxima::{find_maxima, scan_maxima, small_degree_maxima, theorem_maxima};
pub use balance::{balanced_lists, scan_balance, BalancePair};
pub use divisibility::{divisible_classes, scan_divisibility, DivisibleClass};
pub use cubical::cubical_property_suite;
pub use products::scan_products;
