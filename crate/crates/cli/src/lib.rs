//! Session runner for `lctop`: JSON sessions in, JSON reports out.
//!
//! The session and report formats are described in `SCHEMA.md` at the crate
//! root.

pub mod report;
pub mod run;
pub mod selftest;
pub mod session;

pub use report::{ErrorKind, Report};
pub use run::{run_enumerate, run_session, RunConfig};
pub use session::{Session, SessionError};
