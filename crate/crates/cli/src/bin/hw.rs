use std::process::ExitCode;

use hurwitz_cli::hw::HwCli;

fn main() -> ExitCode {
    hurwitz_cli::main_for::<HwCli>()
}
