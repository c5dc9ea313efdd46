fn main() -> std::process::ExitCode {
    ziegler_core::cli::main()
}
