//! Continued fraction expansion of `w b_0 / b_{-1}`, convergents, and the
//! verifier for the q-tangent identity.

pub mod convergent;
pub mod expand;
pub mod verify;

pub use convergent::{convergent, convergent_value, convergent_bottom_up};
pub use expand::{expand, CFExpansion};
pub use verify::{
    initial_pair, tangent_expansion, target_series, verify_expansion, verify_identity,
    PartialCheck, RemainderCheck, VerificationReport,
};
