//! Exact linear algebra and structure checks for graded symmetric cellular algebras.
//!
//! Everything here works over `alloc` only, so the crate builds without `std`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod builders;
pub mod cellular;
pub mod dual;
pub mod ideals;
pub mod instance;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod subspace;
pub mod trace;
pub mod verify;

pub use algebra::{Algebra, AlgebraError, Element, Involution};
pub use linalg::{LinalgError, Matrix};
pub use scalar::{Field, FieldError, Scalar};
pub use subspace::Subspace;
pub use cellular::{CellDatum, CellError, CellIndex, Member};
pub use report::{Entry, Report, Verdict};
pub use trace::{TraceError, TraceForm};
pub use dual::{DualBasis, KError};
pub use ideals::{IdealFamily, SemisimpleVerdict};
pub use instance::Instance;
pub use builders::BuildError;
pub use verify::{verify_all, verify_claim, UnknownClaim, CLAIMS};
