fn main() {
    std::process::exit(netmend_cli::run(std::env::args_os()));
}
