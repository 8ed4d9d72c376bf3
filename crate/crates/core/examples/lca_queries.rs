//! Longest common prefixes of suffixes through lowest common ancestors.

use std::sync::Arc;

use minperiod::{build_index, lca, SuffixTree, Word};

fn main() -> minperiod::Result<()> {
    let word = Word::new(std::env::args().nth(1).unwrap_or_else(|| "abaababaabaab".into()));
    let codes: Vec<u16> = word.codes().iter().map(|&c| c as u16).collect();
    let tree = SuffixTree::build(Arc::from(codes), word.sigma(), 1, word.len())?;
    let index = build_index(&tree, tree.root())?;
    println!("{word}: {} nodes, Euler tour of {}", index.node_count(), index.tour().len());

    let n = word.len();
    for i in 1..=n {
        let row: Vec<String> = (1..=n)
            .map(|j| {
                let a = lca(&index, tree.leaf(i).unwrap(), tree.leaf(j).unwrap()).unwrap();
                // a leaf's depth counts the terminal
                let d = if tree.is_leaf(a) { tree.depth(a) - 1 } else { tree.depth(a) };
                format!("{d:>3}")
            })
            .collect();
        println!("{i:>3} |{}", row.join(""));
    }
    Ok(())
}
