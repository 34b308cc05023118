fn main() {
    std::process::exit(hilbert_points::cli::run(std::env::args_os()));
}
