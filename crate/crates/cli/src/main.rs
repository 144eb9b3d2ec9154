fn main() {
    std::process::exit(cyclepack::run(std::env::args_os()));
}
