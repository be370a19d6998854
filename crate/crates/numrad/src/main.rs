use clap::Parser;

fn main() {
    let cli = numrad::cli::Cli::parse();
    let code = numrad::cli::run(&cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
