//! Exact computations in the descent algebras `D_n` of the symmetric groups
//! over the rationals and prime fields.

pub mod algebra;
pub mod cartan;
pub mod combinatorics;
pub mod error;
pub mod field;
pub mod idempotents;
pub mod linalg;
pub mod morphisms;
pub mod oracle;
pub mod quiver;

pub use algebra::{Algebra, ClassFunction, DescentElement, StructureTable};
pub use combinatorics::{Composition, Partition};
pub use error::{Error, Result};
pub use field::{Characteristic, Field, PrimeField, Rational, Rationals};
pub use linalg::{Matrix, Subspace};
pub use quiver::{MultiGraph, Quiver};
