fn main() {
    eprintln!("dgt: not yet wired up");
    std::process::exit(2);
}
