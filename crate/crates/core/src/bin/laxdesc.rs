fn main() -> std::process::ExitCode {
    laxdesc::frontend::cli::run(std::env::args_os())
}
