fn main() {
    std::process::exit(gatesynth::cli::run());
}
