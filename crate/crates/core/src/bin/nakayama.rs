use std::io::Write;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("NAKAYAMA_LOG")).init();
    let out = nakayama::cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
