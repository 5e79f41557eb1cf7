use std::process::ExitCode;

fn main() -> ExitCode {
    let result = witnesslab::cli::dispatch(std::env::args_os());
    println!("{}", result.stdout());
    if let Some(diag) = result.stderr() {
        eprintln!("{}", diag.trim_end());
    }
    ExitCode::from(result.exit_code() as u8)
}
