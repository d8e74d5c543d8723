use std::process::ExitCode;

fn main() -> ExitCode {
    dsdim::cli::main_with_args(std::env::args_os())
}
