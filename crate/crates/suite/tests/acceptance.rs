//! Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;

fn main() -> ExitCode {
    if exsuper_suite::run() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
