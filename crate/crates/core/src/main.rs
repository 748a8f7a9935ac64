use clap::Parser;

use cellscope::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(&cli, &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
