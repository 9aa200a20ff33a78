use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(fpd::cli::run())
}
