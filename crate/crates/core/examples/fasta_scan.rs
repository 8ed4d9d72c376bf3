//! Runs the command-line front end over a FASTA file in-process.
//!
//! `cargo run --example fasta_scan -- [PATH]`; without a path a small
//! built-in file is used.

use std::io::Write;

fn main() -> std::io::Result<()> {
    let mut temp = None;
    let path = match std::env::args().nth(1) {
        Some(p) => p,
        None => {
            let mut f = tempfile::NamedTempFile::new()?;
            writeln!(f, ">hairpin\nGGATCCttaGGATCC\n>plain\nACGTTTGCA\n>stem loop\nACGCGT")?;
            let p = f.path().display().to_string();
            temp = Some(f);
            p
        }
    };
    for form in ["suffix", "prefix", "alternating"] {
        let out = minperiod::cli::run([
            "minperiod", "detect", "--input", &path, "--fasta", "--form", form, "--morphism",
            "watson-crick", "--format", "tsv",
        ]);
        eprint!("{}", out.stderr);
        println!("# {form}\n{}", out.stdout);
    }
    drop(temp);
    Ok(())
}
