//! Representations of bound quivers: hom spaces, radical layers, the Nakayama functor on
//! projectives, Krull-Schmidt decomposition and minimal approximations.

mod approx;
mod decompose;
mod hom;
mod nakayama;
mod projective;
mod representation;
mod structure;

pub use approx::{left_approximation, right_approximation, Approximation};
pub use decompose::{decompose, end_structure, is_isomorphic, iso_indecomposable, Decomposition};
pub use hom::{hom_dim, hom_space, HomCoords};
pub use nakayama::{nakayama_hom, nakayama_on_projectives, projective_labels, ProjectiveLabels};
pub use projective::{
    generator_images, hom_matrix_to_map, injective, injective_sum, map_from_generators, map_to_hom_matrix,
    projective, projective_sum, simple, unit_vector, HomMatrix,
};
pub use representation::{ModuleMap, Representation, Subspaces};
pub use structure::{dims_of, loewy_layers, radical, radical_of, radical_series, socle, top, whole};
