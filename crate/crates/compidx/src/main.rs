fn main() {
    // a panic is an internal invariant violation, not a usage error
    let code = std::panic::catch_unwind(compidx::cli::run).unwrap_or(3);
    std::process::exit(code);
}
