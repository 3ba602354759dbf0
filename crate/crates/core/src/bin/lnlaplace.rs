fn main() -> std::process::ExitCode {
    lnlaplace::cli::main_entry()
}
