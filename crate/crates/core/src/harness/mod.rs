//! Exhaustive enumeration and the verification scripts.

pub mod canon;
pub mod enumerate;
pub mod folk;
pub mod random;
pub mod verify;

pub use enumerate::{enumerate_intersecting, EnumerationFilter};
pub use verify::{verify, Statement, VerificationReport, VerifyParams};
