//! Unital commutative algebras and their Kähler differentials.

mod algebra;
mod kaehler;

pub use algebra::{CommAlgebra, CommBuilder};
pub use kaehler::{
    add_tensor, comm_invariants, gamma_a, hochschild_h1, i_a, is_cyclic_cocycle, ja_and_square,
    kaehler, sym_into, t_spaces, wedge_into, CommInvariants, Hochschild, Kaehler,
};
