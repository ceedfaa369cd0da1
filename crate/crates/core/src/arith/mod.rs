//! Square-class arithmetic: quadratic Hilbert symbols, conic points and
//! cyclic algebras.

mod conic;
mod cyclic_algebra;
mod hilbert;

pub use conic::{solve_conic, solve_conic_bounded, DEFAULT_HEIGHT_CAP};
pub use cyclic_algebra::CyclicAlgebra;
pub use hilbert::{
    hilbert_symbol, hilbert_symbol_local, local_symbols, prime_divisors, relevant_places, Place, SymbolValue,
};
