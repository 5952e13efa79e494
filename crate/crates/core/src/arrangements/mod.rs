//! Configurations of linear spaces and the Hilbert functions of their (fat) ideals.

pub mod config;
pub mod hilbert;
pub mod rank;

pub use config::{
    pairwise_general, sample_configuration, sample_shape, weight_of, Component, ComponentShape,
    Configuration, WeightVector,
};
pub use hilbert::{
    condition_matrix, generic_hilbert, hilbert_function, ideal_dimension, ideal_dimension_with,
    normalizing_projectivity, vanishing_conditions, ConditionMatrix, HilbertEvidence,
    HilbertOptions, IdealReport,
};
pub use rank::{RankBackend, RankReport};
