fn main() {
    std::process::exit(quartic_trig::cli::main());
}
