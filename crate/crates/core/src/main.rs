use clap::Parser;

fn main() {
    let cli = fsing::cli::Cli::parse();
    std::process::exit(fsing::cli::main_with(cli));
}
