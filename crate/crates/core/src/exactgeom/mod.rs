//! Exact projective linear algebra over the rationals.

pub mod linalg;
pub mod point;
pub mod projection;
pub mod projectivity;
pub mod rng;
pub mod scalar;
pub mod subspace;

pub use point::ProjPoint;
pub use projection::{project_point, project_subspace, Projection};
pub use projectivity::{
    adapted_alignment, coordinate_blocks, is_frame, projectivity_from_frames, standard_frame,
    Projectivity,
};
pub use rng::{derive_seed, Rng};
pub use scalar::Scalar;
pub use subspace::{meet, sample_generic_subspace, span, span2, LinearSubspace, Spannable};
