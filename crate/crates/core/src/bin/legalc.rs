fn main() -> std::process::ExitCode {
    legalc_core::cli::run(std::env::args_os()).into()
}
