//! Bounded complexes of projectives: homotopy classes of maps, minimization, and
//! Krull-Schmidt decomposition in the homotopy category.

mod homology;
mod homotopy;
mod minimize;
mod proj_complex;
mod split;

pub use homology::{homology, homology_profile};
pub use homotopy::{homotopy_hom, homotopy_hom_dim, HomotopyHom};
pub use minimize::{minimize, Minimized};
pub use proj_complex::{ChainMap, ProjComplex, Validation};
pub use split::{
    decompose_complex, end_k_structure, iso_indecomposable_complex, lift_strict_idempotent, split_idempotent,
    ComplexDecomposition, Summand,
};
