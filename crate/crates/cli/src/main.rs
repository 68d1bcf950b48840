fn main() {
    // Die quietly on closed pipes (e.g. `polybound ... | head`) instead of
    // panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(polybound_cli::run(std::env::args_os()));
}
