use std::process::ExitCode;

use hurwitz_cli::verify::VerifyCli;

fn main() -> ExitCode {
    hurwitz_cli::main_for::<VerifyCli>()
}
