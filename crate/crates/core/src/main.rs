fn main() {
    std::process::exit(metric_betweenness::cli::main());
}
