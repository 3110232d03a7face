fn main() {
    let out = graphcx::cli::run(std::env::args_os());
    if !out.stdout.is_empty() {
        println!("{}", out.stdout.trim_end());
    }
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr.trim_end());
    }
    std::process::exit(out.code);
}
