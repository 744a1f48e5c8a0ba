use std::process::ExitCode;

fn main() -> ExitCode {
    regpoly::cli::run()
}
