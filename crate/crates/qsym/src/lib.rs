//! Type A and type B quasisymmetric functions in basis coordinates, the peak
//! functions `K_S` and `K_{S'}`, their monomial and fundamental expansions,
//! truncated-variable realizations and the bipartite product identities.

mod basis;
mod bipartite;
mod coalgebra;
mod expand;
mod peaks;
mod realize;

pub use basis::{Basis, QIndex, QsymExpansion};
pub use bipartite::{bipartite_check, bipartite_report, BipartiteFlavor, BipartiteReport, Side};
pub use coalgebra::{coalgebra_constants, CoalgebraFamily};
pub use expand::{delta_expansion, gamma_expansion, k_function, ExpansionBasis, Flavor};
pub use peaks::{fibonacci, interior_peak_sets, left_peak_sets, peak_basis_rank, sign_peak_sets, SignPeakSet};
pub use realize::{realize_direct, specialization_check, truncate_realize, Specialization};

use peaklab_algebra::AlgebraError;
use peaklab_arith::ArithError;
use peaklab_order::OrderError;
use peaklab_perm::PermError;
use peaklab_poset::PosetError;
use thiserror::Error;

/// Largest `m` accepted by the truncated realizations.
pub const MAX_VARIABLES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QsymError {
    #[error("invalid index {index} for basis {basis} at n = {n}")]
    InvalidIndex { basis: &'static str, n: usize, index: String },
    #[error("{0}")]
    WrongGroup(String),
    #[error("{what} = {value} exceeds the limit {limit}")]
    Guard { what: &'static str, value: usize, limit: usize },
    #[error("unknown tag {0:?}")]
    UnknownTag(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, QsymError>;

pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(QsymError::Guard { what, value, limit });
    }
    Ok(())
}
