//! Input parsing, output records and command implementations behind the
//! `bisep` binary.
//!
//! Input files hold either explicit points, one `a:b,c:d` per line for
//! `[a:b]×[c:d]`, or a grid of `0`/`1` rows whose cell `(t,u)` becomes the
//! point `P_t × Q_u` under a coordinate scheme (`# scheme: <name>`, default
//! `generic`). Lines starting with `#` are comments.

pub mod commands;
pub mod error;
pub mod input;
pub mod output;

pub use error::CliError;
