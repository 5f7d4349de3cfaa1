use std::io::IsTerminal;

use schreier_core::cli::{run, Io};

fn main() {
    let color = std::io::stdout().is_terminal()
        && std::env::var("SCHREIER_COLOR").map_or(true, |v| v != "0");
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = run(
        std::env::args_os(),
        &mut Io {
            out: &mut out,
            err: &mut err,
            color,
        },
    );
    std::process::exit(code);
}
