fn main() {
    std::process::exit(weyl_core::cli::run(std::env::args_os()));
}
