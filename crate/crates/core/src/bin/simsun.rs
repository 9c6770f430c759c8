fn main() -> std::process::ExitCode {
    simsun::cli::run()
}
