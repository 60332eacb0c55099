use std::io::{self, BufWriter, Write};

fn main() {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = planar_lattices::cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    let flushed = out.flush();
    std::process::exit(if code == 0 && flushed.is_err() { 2 } else { code });
}
