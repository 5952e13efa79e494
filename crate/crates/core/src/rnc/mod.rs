//! Rational curves given by binary forms, and rational normal curves in particular.

pub mod binary_form;
pub mod curve;

pub use binary_form::{gcd, gcd2, param, param_q, BinaryForm, ParamPoint};
pub use curve::{
    apply_projectivity, check_maximal_intersection, evaluate, intersection_degree, is_rnc, project_curve, restrict_form,
    rnc_through_points, rnc_with_assigned_preimages, standard_rnc, RationalCurve,
};
