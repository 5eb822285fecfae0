use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = redei_berge_cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
