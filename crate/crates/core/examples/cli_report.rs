//! Drive the command-line front end in-process; the JSON report goes to
//! stdout and the exit code is returned.

fn main() {
    let code = cyclo_schur::cli::run([
        "cyclo-schur", "verify", "structure", "--n", "2", "--r", "2", "--p", "(2)", "--field", "fp:5", "--q", "2", "--Q", "1,2",
    ]);
    eprintln!("exit code {code}");
}
