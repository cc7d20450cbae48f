use std::process::ExitCode;

use hurwitz_cli::wop::WopCli;

fn main() -> ExitCode {
    hurwitz_cli::main_for::<WopCli>()
}
