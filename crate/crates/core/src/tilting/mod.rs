//! Maximal ν-stable modules, tilting verification, the approximation construction,
//! endomorphism algebras of tilting complexes and the induced stable equivalence on objects.

mod construct;
mod endalg;
mod ideal;
mod nust;
mod stable;
mod verify;

pub use construct::{construct_tpq, Constructed};
pub use endalg::{end_algebra, end_algebra_unchecked, EndAlgebra};
pub use ideal::{presentations_match, PresentationMatch};
pub use nust::{
    check_add_nu_equal, compare_add_nu, maximal_nu_stable, nu_permutation, AddNuComparison, ConditionWitness,
    NuStableReport, ProjectiveEntry,
};
pub use stable::{
    check_iterated_nu_stable, check_simple_images, f_homology, homology_profile, stable_image, SimpleImage,
    StableImageCertificate,
};
pub use verify::{self_orthogonality, verify_tilting, GenerationStatus, TiltingReport};
