use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = Vec::new();
    let code = vsl_cli::run(std::env::args_os(), &mut out);
    let mut stream: Box<dyn Write> = if code == vsl_cli::EXIT_INPUT {
        Box::new(std::io::stderr())
    } else {
        Box::new(std::io::stdout())
    };
    let _ = stream.write_all(&out);
    ExitCode::from(code as u8)
}
