//! Builds a suffix tree annotated with `mp_s^k(τ(v))` on every node and
//! prints it as Graphviz DOT.
//!
//! `cargo run --example suffix_tree_dot -- 0100101001 | dot -Tsvg > tree.svg`

use minperiod::{RmpEngine, Word};

fn main() -> minperiod::Result<()> {
    let word = Word::new(std::env::args().nth(1).unwrap_or_else(|| "0100101001".into()));
    let outcome = RmpEngine::new(&word, 0, 2).keep_tree(true).run()?;
    let tree = outcome.tree.expect("tree was kept");
    let alphabet = word.alphabet().clone();
    print!(
        "{}",
        tree.to_dot(|c| (alphabet.symbol(c as u8) as char).to_string())
    );
    eprintln!(
        "{} nodes, {} leaves, {} construction steps",
        tree.node_count(),
        tree.leaf_count(),
        tree.work()
    );
    Ok(())
}
