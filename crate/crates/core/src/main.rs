fn main() {
    std::process::exit(trialg::cli::main_with_args(std::env::args_os()));
}
