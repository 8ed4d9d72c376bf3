//! Antimorphic involutions: a letter complement composed with reversal.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Letter-complement table over raw byte symbols.
///
/// Applying the involution to a word reverses it and complements every
/// letter, so `φ(uv) = φ(v)φ(u)`.
#[derive(Clone, PartialEq, Eq)]
pub struct InvolutionMap {
    complement: [Option<u8>; 256],
}

impl InvolutionMap {
    /// Identity complement: `φ` is plain reversal.
    pub fn mirror() -> Self {
        let mut complement = [None; 256];
        for (b, slot) in complement.iter_mut().enumerate() {
            *slot = Some(b as u8);
        }
        InvolutionMap { complement }
    }

    /// A↔T, C↔G.
    pub fn watson_crick() -> Self {
        Self::from_pairs([(b'A', b'T'), (b'C', b'G')])
    }

    /// Symmetric pairs; `(a, b)` maps `a → b` and `b → a`.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u8, u8)>) -> Self {
        let mut complement = [None; 256];
        for (a, b) in pairs {
            complement[a as usize] = Some(b);
            complement[b as usize] = Some(a);
        }
        InvolutionMap { complement }
    }

    /// One-directional entries, as given. The result is not checked.
    pub fn from_table(entries: impl IntoIterator<Item = (u8, u8)>) -> Self {
        let mut complement = [None; 256];
        for (a, b) in entries {
            complement[a as usize] = Some(b);
        }
        InvolutionMap { complement }
    }

    /// Parses one pair per line, two whitespace-separated single-byte
    /// symbols (`A T` means A↔T). Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let sym = |s: &str| -> Option<u8> {
                match s.as_bytes() {
                    [b] => Some(*b),
                    _ => None,
                }
            };
            match fields.as_slice() {
                [a, b] => match (sym(a), sym(b)) {
                    (Some(a), Some(b)) => pairs.push((a, b)),
                    _ => {
                        return Err(Error::InvalidMorphism(format!(
                            "line {}: symbols must be single bytes",
                            lineno + 1
                        )))
                    }
                },
                _ => {
                    return Err(Error::InvalidMorphism(format!(
                        "line {}: expected two symbols",
                        lineno + 1
                    )))
                }
            }
        }
        if pairs.is_empty() {
            return Err(Error::InvalidMorphism("no pairs".into()));
        }
        let map = Self::from_pairs(pairs);
        validate_involution(&map).map_err(|v| Error::InvalidMorphism(v.to_string()))?;
        Ok(map)
    }

    pub fn complement(&self, symbol: u8) -> Option<u8> {
        self.complement[symbol as usize]
    }

    /// Complemented bytes of `raw` in reverse order.
    pub fn apply_raw(&self, raw: &[u8]) -> Result<Vec<u8>> {
        raw.iter()
            .rev()
            .map(|&b| {
                self.complement(b).ok_or(Error::UnknownLetter {
                    letter: b as char,
                })
            })
            .collect()
    }

    /// Checks that every letter of `raw` has a complement.
    pub fn covers(&self, raw: &[u8]) -> Result<()> {
        match raw.iter().find(|&&b| self.complement(b).is_none()) {
            Some(&b) => Err(Error::UnknownLetter { letter: b as char }),
            None => Ok(()),
        }
    }

    fn mapped(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.complement
            .iter()
            .enumerate()
            .filter_map(|(a, b)| b.map(|b| (a as u8, b)))
    }
}

impl fmt::Debug for InvolutionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == InvolutionMap::mirror() {
            return f.write_str("InvolutionMap(mirror)");
        }
        f.debug_map()
            .entries(self.mapped().map(|(a, b)| (a as char, b as char)))
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvolutionViolation {
    pub letter: u8,
    pub image: u8,
    pub back: Option<u8>,
}

impl fmt::Display for InvolutionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.back {
            Some(b) => write!(
                f,
                "{} -> {} -> {}, not an involution",
                self.letter as char, self.image as char, b as char
            ),
            None => write!(
                f,
                "{} -> {} but {} has no complement",
                self.letter as char, self.image as char, self.image as char
            ),
        }
    }
}

/// Checks `complement(complement(a)) = a` on every mapped letter, in byte
/// order, reporting the first violation.
pub fn validate_involution(phi: &InvolutionMap) -> Result<(), InvolutionViolation> {
    for (a, b) in phi.mapped() {
        let back = phi.complement(b);
        if back != Some(a) {
            return Err(InvolutionViolation {
                letter: a,
                image: b,
                back,
            });
        }
    }
    Ok(())
}

/// `φ(w)`: reverse, then complement each letter.
pub fn apply_antimorphism(word: &Word, phi: &InvolutionMap) -> Result<Word> {
    Ok(Word::new(phi.apply_raw(word.raw())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn watson_crick_example() {
        let w = Word::new("ACG");
        let out = apply_antimorphism(&w, &InvolutionMap::watson_crick()).unwrap();
        assert_eq!(out, Word::new("CGT"));
    }

    #[test]
    fn empty_and_mirror() {
        let wc = InvolutionMap::watson_crick();
        assert_eq!(apply_antimorphism(&Word::new(""), &wc).unwrap(), Word::new(""));
        let m = InvolutionMap::mirror();
        assert_eq!(apply_antimorphism(&Word::new("010"), &m).unwrap(), Word::new("010"));
        assert_eq!(apply_antimorphism(&Word::new("0011"), &m).unwrap(), Word::new("1100"));
    }

    #[test]
    fn unknown_letter() {
        let err = apply_antimorphism(&Word::new("ACGN"), &InvolutionMap::watson_crick());
        assert_eq!(err, Err(Error::UnknownLetter { letter: 'N' }));
    }

    #[test]
    fn validation_verdicts() {
        assert!(validate_involution(&InvolutionMap::watson_crick()).is_ok());
        assert!(validate_involution(&InvolutionMap::mirror()).is_ok());
        let cycle = InvolutionMap::from_table([(b'A', b'C'), (b'C', b'G'), (b'G', b'A')]);
        let v = validate_involution(&cycle).unwrap_err();
        assert_eq!(v.letter, b'A');
        let dangling = InvolutionMap::from_table([(b'A', b'C')]);
        assert_eq!(validate_involution(&dangling).unwrap_err().back, None);
    }

    #[test]
    fn parse_pairs() {
        let m = InvolutionMap::parse("# dna\nA T\nC G\n\n").unwrap();
        assert_eq!(m, InvolutionMap::watson_crick());
        assert!(InvolutionMap::parse("A\n").is_err());
        assert!(InvolutionMap::parse("AB C\n").is_err());
        assert!(InvolutionMap::parse("").is_err());
        // conflicting lines break the involution
        assert!(InvolutionMap::parse("A C\nC G\n").is_err());
    }

    proptest! {
        #[test]
        fn antimorphism_is_self_inverse(s in "[ACGT]{0,40}") {
            let wc = InvolutionMap::watson_crick();
            let w = Word::new(&s);
            let once = apply_antimorphism(&w, &wc).unwrap();
            prop_assert_eq!(apply_antimorphism(&once, &wc).unwrap(), w);
        }

        #[test]
        fn antimorphism_reverses_concatenation(u in "[ACGT]{0,20}", v in "[ACGT]{0,20}") {
            let wc = InvolutionMap::watson_crick();
            let uv = wc.apply_raw(format!("{u}{v}").as_bytes()).unwrap();
            let mut vu = wc.apply_raw(v.as_bytes()).unwrap();
            vu.extend(wc.apply_raw(u.as_bytes()).unwrap());
            prop_assert_eq!(uv, vu);
        }
    }
}
