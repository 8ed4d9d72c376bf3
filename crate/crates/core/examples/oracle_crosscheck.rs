//! Differential check of the linear-time engine against brute force on
//! random words.

use minperiod::oracle::{lmp_oracle, rmp_oracle};
use minperiod::{compute_lmp, compute_rmp, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> minperiod::Result<()> {
    let rounds: usize = std::env::args().nth(1).map_or(2000, |a| a.parse().expect("rounds"));
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut mismatches = 0;
    for _ in 0..rounds {
        let sigma = rng.gen_range(1..=4u8);
        let n = rng.gen_range(1..=200);
        let word = Word::new((0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect::<Vec<_>>());
        let (k, s) = (rng.gen_range(2..=5), rng.gen_range(0..=3));
        if compute_rmp(&word, s, k)? != rmp_oracle(&word, s, k)
            || compute_lmp(&word, s, k)? != lmp_oracle(&word, s, k)
        {
            mismatches += 1;
            println!("mismatch: {word} k={k} s={s}");
        }
    }
    println!("{rounds} random words, {mismatches} mismatches");
    Ok(())
}
