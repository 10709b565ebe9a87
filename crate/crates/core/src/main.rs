fn main() {
    std::process::exit(quintic_moduli::cli::main_entry());
}
