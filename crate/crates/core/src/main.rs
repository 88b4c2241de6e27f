fn main() {
    // default SIGPIPE handling so `planar-center ... | head` exits quietly
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(planar_center::cli::run());
}
