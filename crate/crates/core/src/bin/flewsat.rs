fn main() {
    let report = flewsat::cli::run(std::env::args_os());
    print!("{report}");
    std::process::exit(report.exit);
}
