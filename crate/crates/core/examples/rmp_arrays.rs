//! Right and left minimal period arrays of a word.
//!
//! `cargo run --example rmp_arrays -- [WORD] [K] [S]`

use minperiod::{compute_lmp, compute_rmp, Word};

fn main() -> minperiod::Result<()> {
    let mut args = std::env::args().skip(1);
    let word = Word::new(args.next().unwrap_or_else(|| "0100101001".into()));
    let k: usize = args.next().map_or(2, |a| a.parse().expect("K is an integer"));
    let s: usize = args.next().map_or(0, |a| a.parse().expect("S is an integer"));

    let rmp = compute_rmp(&word, s, k)?;
    let lmp = compute_lmp(&word, s, k)?;
    println!("word {word}, k={k}, s={s}");
    println!("{:>4} {:>4} {:>5} {:>5}", "i", "w[i]", "rmp", "lmp");
    for i in 1..=word.len() {
        println!(
            "{i:>4} {:>4} {:>5} {:>5}",
            word.raw()[i - 1] as char,
            rmp[i].to_string(),
            lmp[i].to_string()
        );
    }
    Ok(())
}
