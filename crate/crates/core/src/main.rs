fn main() {
    std::process::exit(horadam::cli::run(std::env::args_os()));
}
