//! Group algebras `Q[S_n]` and `Q[B_n]`, the structure polynomials built
//! from descent and peak classes, and checks of their multiplication rules.

mod constants;
mod cyclic;
mod elem;
mod family;
mod group;
mod linalg;
mod refined;
mod structure;
mod table;
mod verify;

pub use constants::{structure_constants, ConstancyViolation, StructureConstants, TensorEntry};
pub use cyclic::{cyclic_isomorphism, cyclic_isomorphism_check, CyclicIsomorphism};
pub use elem::{ga_multiply, GAElem, GAPoly};
pub use family::{class_sum, classes, Class, ClassFamily, ClassLabel, ClassSum};
pub use group::Group;
pub use linalg::{in_span, multiplicative_closure, span_rank, Closure, RowSpace};
pub use refined::{refined_decomposition, Named, RefinedDecomposition, Refinement, Relation};
pub use structure::{class_expansion, idempotents, structure_polynomial, ClassTerm, StructureFamily};
pub use table::{cell_products, check_cell, table_one, CellResult, TableCell, TABLE_FAMILIES};
pub use verify::{
    theorem, theorems, verify_identity, verify_theorem, Arg, Counterexample, Equality, Factor, GridMode, Route,
    Theorem, Verification,
};

use peaklab_arith::ArithError;
use peaklab_order::OrderError;
use peaklab_perm::{GroupKind, PermError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("group algebra elements from different groups")]
    GroupMismatch,
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} is not defined on {group}")]
    WrongGroup { family: &'static str, group: GroupKind },
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
