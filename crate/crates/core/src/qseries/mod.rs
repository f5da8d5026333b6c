//! The q-objects of the expansion as exact truncated series in `w = z^2`.

pub mod closed_form;
pub mod wseries;

pub use closed_form::{
    b_closed_form, bracket_simplification_check, c_closed_form, partial_exponent, q_bracket,
    q_factorial, trig_series, QTrigSpec, TrigKind, EXPONENT_BOUND,
};
pub use wseries::{series_arith, series_divide, SeriesOp, WSeries};
