use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = entmat_cli::run(
        std::env::args_os(),
        std::env::var_os("ENTMAT_CACHE").map(Into::into),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code)
}
