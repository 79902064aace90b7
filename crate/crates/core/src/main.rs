fn main() {
    std::process::exit(symdisc::cli::run(std::env::args_os()));
}
