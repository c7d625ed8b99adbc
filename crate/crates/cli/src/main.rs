fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let (code, out) = imtw_cli::run(std::env::args());
    println!("{out}");
    std::process::exit(code);
}
