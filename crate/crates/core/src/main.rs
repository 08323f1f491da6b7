fn main() {
    std::process::exit(lie_torsion::cli::main_with_args(std::env::args_os()));
}
