//! Quiver algebras, abstract structure-constant algebras and quiver presentations.

mod element;
mod path_algebra;
mod presentation;
mod quiver;
mod structure;

pub use element::Element;
pub use path_algebra::{build_path_algebra, BasicAlgebra};
pub use presentation::{algebra_from_structure_constants, quiver_presentation, Presentation};
pub use quiver::{Arrow, Path, Quiver, Relation};
pub use structure::{Idempotents, StructureAlgebra};
