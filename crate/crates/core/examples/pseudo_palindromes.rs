//! Maximal pseudo-palindrome radius at every center under an involution.

use minperiod::{apply_antimorphism, compute_cmp, InvolutionMap, Word};

fn main() -> minperiod::Result<()> {
    let mut args = std::env::args().skip(1);
    let word = Word::new(args.next().unwrap_or_else(|| "TTGCATGCAAGG".into()));
    let phi = match args.next().as_deref() {
        Some("mirror") => InvolutionMap::mirror(),
        _ => InvolutionMap::watson_crick(),
    };

    println!("w      = {word}");
    println!("φ(w)   = {}", apply_antimorphism(&word, &phi)?);
    let cmp = compute_cmp(&word, &phi)?;
    for (center, &radius) in cmp.as_slice().iter().enumerate() {
        if radius > 0 {
            let factor = word.factor(center - radius + 1, center + radius);
            println!(
                "center {center:>3}: radius {radius}, {}",
                String::from_utf8_lossy(factor)
            );
        }
    }
    Ok(())
}
