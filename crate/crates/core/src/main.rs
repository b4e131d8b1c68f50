fn main() {
    std::process::exit(ptb_cr::cli::run_from_args(std::env::args_os()));
}
