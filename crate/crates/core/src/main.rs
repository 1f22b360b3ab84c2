use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::init();
    let outcome = std::panic::catch_unwind(|| shiftq::cli::run_args(std::env::args_os()));
    let Ok(outcome) = outcome else {
        return ExitCode::from(1);
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status as u8)
}
