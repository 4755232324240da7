//! Library side of the command-line front end.

mod export;
mod parse;
mod stats;
mod verify;

pub use export::{export_dot, export_json, load_json};
pub use parse::{parse_config, parse_permutation, parse_subsequence};
pub use stats::{cmd_stats, random_permutation, StatsReport};
pub use verify::{cmd_verify, cmd_verify_all, VerifyAllSummary, VerifyReport, VERIFY_ALL_MAX_N};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Process exit status for an error surfaced by a subcommand.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::EmptyPermutation
        | Error::DuplicateValue(_)
        | Error::ValueOutOfRange { .. }
        | Error::DimensionMismatch { .. }
        | Error::NotAVertex(_)
        | Error::NotIncreasing(_)
        | Error::NotACycle
        | Error::SizeLimit { .. }
        | Error::TooLarge { .. }
        | Error::Parse(_)
        | Error::IllegalCharacter(_)
        | Error::WrongLength { .. }
        | Error::InvalidArgument(_)
        | Error::InvalidGraph(_) => EXIT_USAGE,
        Error::NotAbsorbing
        | Error::UniquenessViolated(_)
        | Error::FirstBlockNotU
        | Error::BrokenPath
        | Error::Unreachable(_) => EXIT_VERIFICATION_FAILED,
    }
}
