//! Pseudo-palindromes and special pseudo-powers under an antimorphic
//! involution `φ`.
//!
//! The centralized maximal pseudo-palindrome array `cmp[i]` (for
//! `0 <= i <= n`) is the largest `m <= min(i, n-i)` with
//! `φ(w[i-m+1..i]) = w[i+1..i+m]`. It is read off the suffix tree of
//! `w·£·φ(w)`: the suffix at `i+1` meets `φ(w[1..i])` (the suffix at
//! `2n-i+2`) in a common prefix of exactly that length.
//!
//! Three factor shapes are detected, each with `|x| > s`:
//!
//! | form          | shape                              | test                          |
//! |---------------|------------------------------------|-------------------------------|
//! | `Suffix`      | `x^(k-1) φ(x)`                     | `lmp[i] <= cmp[i]` (exp. k-1) |
//! | `Prefix`      | `φ(x) x^(k-1)`                     | `rmp[i] <= cmp[i-1]`          |
//! | `Alternating` | `x φ(x) x φ(x) ...` (`k` blocks)   | `k-1` strided `cmp >= |x|`    |

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::InvolutionMap;
use crate::lca::build_index;
use crate::period::{Period, PeriodArray};
use crate::rmp::{compute_lmp, compute_rmp};
use crate::suffix_tree::SuffixTree;
use crate::word::{Alphabet, Word};

/// Maximal pseudo-palindrome radius at each center `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CmpArray(Vec<usize>);

impl CmpArray {
    pub fn new(entries: Vec<usize>) -> Self {
        CmpArray(entries)
    }

    /// Entry at center `i`, `0 <= i <= n`.
    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Suffix tree of `w·£·φ(w)` plus LCA depths per center.
pub fn compute_cmp(word: &Word, phi: &InvolutionMap) -> Result<CmpArray> {
    phi.covers(word.raw())?;
    let n = word.len();
    if n <= 1 {
        return Ok(CmpArray(vec![0; n + 1]));
    }
    let image = phi.apply_raw(word.raw())?;
    let joint = Alphabet::from_symbols(&[word.raw(), &image].concat());
    let separator = joint.size() as u16;
    let code = |b: &u8| joint.code(*b).expect("joint alphabet covers both words") as u16;
    let text: Vec<u16> = word
        .raw()
        .iter()
        .map(code)
        .chain(std::iter::once(separator))
        .chain(image.iter().map(code))
        .collect();
    let len = text.len();
    let tree = SuffixTree::build(Arc::from(text), joint.size() + 1, 1, len)?;
    let index = build_index(&tree, tree.root())?;

    let mut cmp = vec![0; n + 1];
    for (i, slot) in cmp.iter_mut().enumerate().take(n).skip(1) {
        let a = tree.leaf(i + 1).expect("leaf in range");
        let b = tree.leaf(2 * n - i + 2).expect("leaf in range");
        *slot = tree.depth(index.lca(a, b)?);
    }
    Ok(CmpArray(cmp))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PseudoForm {
    /// `x^(k-1) φ(x)`
    Suffix,
    /// `φ(x) x^(k-1)`
    Prefix,
    /// `(x φ(x))^(k/2)`, or `(x φ(x))^⌊k/2⌋ x` for odd `k`
    Alternating,
}

impl fmt::Display for PseudoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PseudoForm::Suffix => "suffix",
            PseudoForm::Prefix => "prefix",
            PseudoForm::Alternating => "alternating",
        })
    }
}

impl FromStr for PseudoForm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "suffix" => Ok(PseudoForm::Suffix),
            "prefix" => Ok(PseudoForm::Prefix),
            "alternating" => Ok(PseudoForm::Alternating),
            other => Err(format!("unknown form {other:?}")),
        }
    }
}

/// A detected factor: its 1-based start, and `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub position: usize,
    pub x: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detection {
    Found(Witness),
    NotFound,
}

impl Detection {
    pub fn is_found(&self) -> bool {
        matches!(self, Detection::Found(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Detection::Found(w) => Some(w),
            Detection::NotFound => None,
        }
    }

    /// `"found"` or `"none"`.
    pub fn verdict(&self) -> &'static str {
        if self.is_found() {
            "found"
        } else {
            "none"
        }
    }

    /// Answer to "does the word avoid the form?": `"NO"` when a factor
    /// exists.
    pub fn avoids(&self) -> &'static str {
        if self.is_found() {
            "NO"
        } else {
            "YES"
        }
    }
}

fn check_args(word: &Word, phi: &InvolutionMap, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidExponent { k, min: 2 });
    }
    phi.covers(word.raw())
}

/// Period arrays with exponent `e >= 1`. Exponent 1 has the closed form
/// `s + 1` wherever the read direction leaves room for it.
fn periods(word: &Word, s: usize, e: usize, leftward: bool) -> Result<PeriodArray> {
    if e >= 2 {
        return if leftward {
            compute_lmp(word, s, e)
        } else {
            compute_rmp(word, s, e)
        };
    }
    let n = word.len();
    Ok((1..=n)
        .map(|i| {
            let room = if leftward { i } else { n - i + 1 };
            if room > s {
                Period::Finite(s + 1)
            } else {
                Period::Infinite
            }
        })
        .collect::<Vec<_>>()
        .into())
}

/// Factor `x^(k-1) φ(x)` with `|x| > s`.
pub fn detect_suffix_form(
    word: &Word,
    phi: &InvolutionMap,
    k: usize,
    s: usize,
) -> Result<Detection> {
    check_args(word, phi, k)?;
    if word.is_empty() {
        return Ok(Detection::NotFound);
    }
    let lmp = periods(word, s, k - 1, true)?;
    let cmp = compute_cmp(word, phi)?;
    for i in 1..=word.len() {
        if let Period::Finite(m) = lmp[i] {
            if m <= cmp.get(i) {
                return Ok(Detection::Found(Witness {
                    position: i + 1 - (k - 1) * m,
                    x: word.factor(i + 1 - m, i).to_vec(),
                }));
            }
        }
    }
    Ok(Detection::NotFound)
}

/// Factor `φ(x) x^(k-1)` with `|x| > s`.
pub fn detect_prefix_form(
    word: &Word,
    phi: &InvolutionMap,
    k: usize,
    s: usize,
) -> Result<Detection> {
    check_args(word, phi, k)?;
    if word.is_empty() {
        return Ok(Detection::NotFound);
    }
    let rmp = periods(word, s, k - 1, false)?;
    let cmp = compute_cmp(word, phi)?;
    for i in 1..=word.len() {
        if let Period::Finite(m) = rmp[i] {
            if m <= cmp.get(i - 1) {
                return Ok(Detection::Found(Witness {
                    position: i - m,
                    x: word.factor(i, i + m - 1).to_vec(),
                }));
            }
        }
    }
    Ok(Detection::NotFound)
}

/// Factor `x φ(x) x ...` of `k` blocks with `|x| > s`.
pub fn detect_alternating_form(
    word: &Word,
    phi: &InvolutionMap,
    k: usize,
    s: usize,
) -> Result<Detection> {
    detect_alternating_form_counted(word, phi, k, s).map(|(d, _)| d)
}

/// As [`detect_alternating_form`], also returning the number of `cmp`
/// comparisons made by the scan.
pub fn detect_alternating_form_counted(
    word: &Word,
    phi: &InvolutionMap,
    k: usize,
    s: usize,
) -> Result<(Detection, u64)> {
    check_args(word, phi, k)?;
    let cmp = compute_cmp(word, phi)?;
    let mut ops = 0;
    let found = alternating_scan(&cmp, word.len(), k, s, &mut ops);
    let detection = match found {
        Some((center, d)) => Detection::Found(Witness {
            position: center + 1 - d,
            x: word.factor(center + 1 - d, center).to_vec(),
        }),
        None => Detection::NotFound,
    };
    Ok((detection, ops))
}

/// For each stride `d > s` and offset `i < d`, looks for `k-1` consecutive
/// centers `i + jd` with `cmp >= d`. Returns the first center of the run
/// and `d`.
fn alternating_scan(
    cmp: &CmpArray,
    n: usize,
    k: usize,
    s: usize,
    ops: &mut u64,
) -> Option<(usize, usize)> {
    for d in s + 1..=n / k {
        for i in 0..d {
            let mut consecutive = 0;
            for j in 1..(n - i) / d {
                *ops += 1;
                if cmp.get(i + j * d) >= d {
                    consecutive += 1;
                } else {
                    consecutive = 0;
                }
                if consecutive >= k - 1 {
                    let first = i + (j + 2 - k) * d;
                    return Some((first, d));
                }
            }
        }
    }
    None
}

/// Dispatches on `form`.
pub fn detect(
    word: &Word,
    phi: &InvolutionMap,
    form: PseudoForm,
    k: usize,
    s: usize,
) -> Result<Detection> {
    match form {
        PseudoForm::Suffix => detect_suffix_form(word, phi, k, s),
        PseudoForm::Prefix => detect_prefix_form(word, phi, k, s),
        PseudoForm::Alternating => detect_alternating_form(word, phi, k, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{cmp_oracle, detect_oracle, has_form};

    fn wc() -> InvolutionMap {
        InvolutionMap::watson_crick()
    }

    #[test]
    fn cmp_examples() {
        let m = InvolutionMap::mirror();
        assert_eq!(
            compute_cmp(&Word::new("0100101001"), &m).unwrap().as_slice(),
            &[0, 0, 0, 3, 0, 0, 0, 0, 2, 0, 0]
        );
        assert_eq!(compute_cmp(&Word::new("a"), &m).unwrap().as_slice(), &[0, 0]);
        assert_eq!(
            compute_cmp(&Word::new("ACGT"), &wc()).unwrap().as_slice(),
            &[0, 0, 2, 0, 0]
        );
        assert_eq!(compute_cmp(&Word::new(""), &m).unwrap().as_slice(), &[0]);
        assert_eq!(
            compute_cmp(&Word::new("ACGU"), &wc()),
            Err(Error::UnknownLetter { letter: 'U' })
        );
    }

    #[test]
    fn pseudo_square() {
        let w = Word::new("ACGCGT");
        let d = detect_suffix_form(&w, &wc(), 2, 0).unwrap();
        let x = &d.witness().unwrap().x;
        let at = d.witness().unwrap().position - 1;
        assert!(has_form(&w.raw()[at..at + 2 * x.len()], x.len(), 2, &wc(), PseudoForm::Suffix));
        assert_eq!(
            detect_suffix_form(&w, &wc(), 2, 2).unwrap(),
            Detection::Found(Witness {
                position: 1,
                x: b"ACG".to_vec()
            })
        );
        assert_eq!(d.avoids(), "NO");
        assert_eq!(detect_suffix_form(&w, &wc(), 2, 3).unwrap(), Detection::NotFound);
        let alt = detect_alternating_form(&w, &wc(), 2, 2).unwrap();
        assert_eq!(alt.witness().unwrap().x, b"ACG");
    }

    #[test]
    fn pseudo_cube() {
        let d = detect_alternating_form(&Word::new("ACGTAC"), &wc(), 3, 0).unwrap();
        assert_eq!(
            d,
            Detection::Found(Witness {
                position: 1,
                x: b"AC".to_vec()
            })
        );
    }

    #[test]
    fn prefix_form() {
        let d = detect_prefix_form(&Word::new("CGTACG"), &wc(), 2, 0).unwrap();
        let w = d.witness().unwrap();
        let factor = &b"CGTACG"[w.position - 1..w.position - 1 + 2 * w.x.len()];
        assert!(has_form(factor, w.x.len(), 2, &wc(), PseudoForm::Prefix));
        assert_eq!(
            detect_prefix_form(&Word::new("AAAA"), &wc(), 2, 0).unwrap(),
            Detection::NotFound
        );
    }

    #[test]
    fn distinct_letters_have_no_forms() {
        let m = InvolutionMap::mirror();
        let w = Word::new("abcdefgh");
        for k in 2..=4 {
            for form in [PseudoForm::Suffix, PseudoForm::Prefix, PseudoForm::Alternating] {
                assert!(!detect(&w, &m, form, k, 0).unwrap().is_found());
            }
        }
    }

    #[test]
    fn argument_errors() {
        let w = Word::new("ACGT");
        assert!(matches!(
            detect_suffix_form(&w, &wc(), 1, 0),
            Err(Error::InvalidExponent { .. })
        ));
        assert!(matches!(
            detect_prefix_form(&Word::new("ACGN"), &wc(), 2, 0),
            Err(Error::UnknownLetter { letter: 'N' })
        ));
    }

    #[test]
    fn witnesses_have_their_form() {
        let phi = wc();
        let letters = b"ACGT";
        for n in 1..=8usize {
            for code in 0..4usize.pow(n as u32) {
                let raw: Vec<u8> = (0..n).map(|t| letters[code / 4usize.pow(t as u32) % 4]).collect();
                let w = Word::new(&raw);
                assert_eq!(compute_cmp(&w, &phi).unwrap(), cmp_oracle(&w, &phi));
                for k in 2..=3 {
                    for form in [PseudoForm::Suffix, PseudoForm::Prefix, PseudoForm::Alternating] {
                        let got = detect(&w, &phi, form, k, 0).unwrap();
                        let want = detect_oracle(&w, &phi, k, 0, form);
                        assert_eq!(got.is_found(), want.is_some(), "{w:?} {form} k={k}");
                        if let Some(wit) = got.witness() {
                            let p = wit.x.len();
                            let f = &raw[wit.position - 1..wit.position - 1 + k * p];
                            assert!(has_form(f, p, k, &phi, form), "{w:?} {form} k={k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn scan_counts_full_grid_when_absent() {
        // φ maps {A, C} into {T, G}, so cmp is all zero.
        let w = Word::new("ACCACAACCA".repeat(10));
        let (d, ops) = detect_alternating_form_counted(&w, &wc(), 2, 0).unwrap();
        assert_eq!(d, Detection::NotFound);
        let n = w.len();
        let expected: u64 = (1..=n / 2)
            .flat_map(|d| (0..d).map(move |i| ((n - i) / d).saturating_sub(1) as u64))
            .sum();
        assert_eq!(ops, expected);
    }
}
