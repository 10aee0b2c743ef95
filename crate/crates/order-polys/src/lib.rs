//! Order polynomials for chains of permutations, in closed form and from
//! generating functions, plus the peak and Eulerian polynomial identities
//! they imply.

mod kinds;
mod peak;
mod poly;
mod recip;

pub use kinds::{OrderPolyKind, PeakPolyKind};
pub use peak::{identity_check_43, peak_polynomial, Identity43};
pub use poly::{
    enriched_b_poly, enriched_gf, enriched_gf_a, enriched_gf_b, enriched_interior_poly, enriched_left_poly,
    oracle_mismatch, order_polynomial, order_polynomial_a, order_polynomial_b, order_polynomial_from_oracle,
    u_substitution, OracleMismatch,
};
pub use recip::{reciprocity_check, vanishing_check};

use peaklab_arith::ArithError;
use peaklab_perm::{GroupKind, PermError};
use peaklab_poset::PosetError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("kind {kind} needs a permutation from {expected}")]
    KindMismatch { kind: OrderPolyKind, expected: GroupKind },
    #[error("unknown kind tag {0:?}")]
    UnknownKind(String),
    #[error("{0} has no enriched generating function")]
    NotEnriched(OrderPolyKind),
    #[error("n must be at least 1")]
    EmptyPermutation,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, OrderError>;
