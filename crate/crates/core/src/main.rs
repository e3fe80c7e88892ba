use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(cyclens::cli::run(std::env::args()) as u8)
}
