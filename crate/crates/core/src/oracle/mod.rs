//! Brute-force poset computations used as an independent check on the
//! algebraic formulas: explicit lattices, flag vectors, chain weights and
//! the Eulerian relations.

mod eulerian;
mod flags;
mod poset;

pub use eulerian::{
    chain_element, dehn_sommerville_check, dehn_sommerville_instances, dehn_sommerville_sides,
    dehn_sommerville_via_bullet, euler_relation_identity, is_eulerian, mobius, mobius_row,
    DsInstance,
};
pub use flags::{
    ab_index_chain_weights, ab_index_from_flags, ab_index_from_h, flag_f_vector, flag_h_vector,
    mask_ranks, rank_mask, FlagHVector, FlagVector,
};
pub use poset::{
    build_boolean, build_boolean_capped, build_cube, build_cube_capped, build_subspace, BitSet,
    OracleCaps, RankedPoset,
};
