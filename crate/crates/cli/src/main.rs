use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = hlysa_cli::run_args(std::env::args_os());
    if code == 2 {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
