//! The cd-indices of the Boolean and cubical lattices, the ab-index of the
//! subspace lattice, Euler numbers, and the `β`/`γ` coefficient tables.

mod boolean;
mod cubical;
mod euler;
mod subspace;
mod table;

pub use boolean::{
    boolean_cd_index, boolean_sequence, boolean_sequence_with_base, phi_sequences, BooleanMethod,
    PhiBase, PhiPair,
};
pub use cubical::{cubical_cd_index, cubical_sequence};
pub use euler::euler_numbers;
pub use subspace::{subspace_ab_index, subspace_sequence};
pub use table::{
    beta, beta_list, beta_poly, boolean_table, cubical_table, gamma, gamma_poly, Family,
    IndexTable, Rank,
};
