//! Scans DNA for hairpin-like pseudo-powers: `x^{k-1}φ(x)`, `φ(x)x^{k-1}` and
//! `xφ(x)xφ(x)…` with `|x| > s` under Watson-Crick complementarity.

use minperiod::{detect, InvolutionMap, PseudoForm, Word};

fn main() -> minperiod::Result<()> {
    let wc = InvolutionMap::watson_crick();
    let samples = [
        "ACGCGT",
        "ACGTAC",
        "GGATCCTTAGGATCC",
        "AAAAAAAACCCCCCCC",
        "TTGACGTCAATTGACGTCAA",
    ];
    for raw in samples {
        let word = Word::new(raw);
        for form in [PseudoForm::Suffix, PseudoForm::Prefix, PseudoForm::Alternating] {
            for (k, s) in [(2, 0), (2, 2), (3, 0)] {
                let d = detect(&word, &wc, form, k, s)?;
                let hit = match d.witness() {
                    Some(w) => format!("x = {} at {}", String::from_utf8_lossy(&w.x), w.position),
                    None => "-".into(),
                };
                println!("{raw:<22} {:<12} k={k} s={s}  {:<5} {hit}", form.to_string(), d.verdict());
            }
        }
    }
    Ok(())
}
