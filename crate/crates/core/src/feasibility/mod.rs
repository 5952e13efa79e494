//! Feasibility of weight vectors: rules, certificates, witnesses and atlases.

pub mod atlas;
pub mod certificate;
pub mod classify;
pub mod rules;
pub mod witness;

pub use atlas::{atlas, atlas_with, enumerate_weights, Atlas, AtlasCounts, AtlasRow};
pub use certificate::{Certificate, ProjectionStep, Status, Verdict};
pub use classify::{classify, classify_all_rules, Classifier, ClassifyOptions, RULE_ORDER};
pub use rules::{
    check_bezout, check_codim2_table, check_counting, check_homogeneous, check_known_tables,
    check_parameter_count, check_segre_iff, projection_children, segre_bound, segre_pattern,
};
pub use witness::{build_witness, verify_witness, ComponentCheck, Witness, WitnessReport};
