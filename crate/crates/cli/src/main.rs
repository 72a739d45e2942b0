fn main() {
    std::process::exit(dqe_cli::main_with_args(std::env::args_os()));
}
