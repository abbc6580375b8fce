fn main() {
    std::process::exit(sstgroups_cli::run(std::env::args_os()));
}
