//! Exact computations around the ternary Golay code and the Mathieu group
//! 2M12: the Todd modules of 2M12, 2M11 and 2M10, the special 3-groups they
//! give rise to, Sp4(3) and UT3(q) automorphism data, and strongly
//! p-embedded subgroups of small groups.
//!
//! Every construction is checked by exhaustive enumeration. The `cli`
//! registry collects the checks and the `verify` binary runs them.

pub mod cli;
mod error;
pub mod gf;
pub mod golay;
pub mod group;
pub mod linalg;
pub mod mathieu;
pub mod monomial;
pub mod pgroups;
pub mod sp4ut3;
pub mod strongemb;

pub use error::Error;
