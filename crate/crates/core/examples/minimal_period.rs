//! Minimal k-th power period of a word, read from its suffix tree.

use std::sync::Arc;

use minperiod::{compute_mp_traced, SuffixTree, Word};

fn main() -> minperiod::Result<()> {
    let word = Word::new(std::env::args().nth(1).unwrap_or_else(|| "0100101001".into()));
    let codes: Vec<u16> = word.codes().iter().map(|&c| c as u16).collect();
    let tree = SuffixTree::build(Arc::from(codes), word.sigma(), 1, word.len())?;

    for k in 2..=4 {
        for s in 0..=4 {
            let (mp, trace) = compute_mp_traced(&tree, s, k)?;
            println!(
                "mp_{s}^{k}({word}) = {mp:>3}   (climbed {}, {} leaves under h)",
                trace.climb, trace.leaves_under_h
            );
        }
    }
    Ok(())
}
