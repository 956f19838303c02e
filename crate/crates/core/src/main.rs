use clap::Parser;

fn main() -> std::process::ExitCode {
    let cli = exthamming::cli::Cli::parse();
    std::process::ExitCode::from(exthamming::cli::run(cli))
}
