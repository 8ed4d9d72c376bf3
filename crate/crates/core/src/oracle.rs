//! Brute-force reference implementations.
//!
//! Everything here works directly on raw bytes by definition and shares no
//! code with the suffix-tree engine. Intended for small inputs and
//! cross-checking.

use crate::involution::InvolutionMap;
use crate::period::{Period, PeriodArray};
use crate::pseudo::{CmpArray, PseudoForm};
use crate::word::Word;

/// `mp_s^k` of a byte string: scan `m = s+1 ..= n/k`.
pub fn mp_of(w: &[u8], s: usize, k: usize) -> Period {
    let n = w.len();
    if k == 0 {
        return Period::Infinite;
    }
    for m in s + 1..=n / k {
        if (m..k * m).all(|t| w[t] == w[t - m]) {
            return Period::Finite(m);
        }
    }
    Period::Infinite
}

pub fn mp_oracle(word: &Word, s: usize, k: usize) -> Period {
    mp_of(word.raw(), s, k)
}

pub fn rmp_oracle(word: &Word, s: usize, k: usize) -> PeriodArray {
    let w = word.raw();
    (0..w.len()).map(|i| mp_of(&w[i..], s, k)).collect::<Vec<_>>().into()
}

pub fn lmp_oracle(word: &Word, s: usize, k: usize) -> PeriodArray {
    let w = word.raw();
    (1..=w.len())
        .map(|i| {
            let prefix_rev: Vec<u8> = w[..i].iter().rev().copied().collect();
            mp_of(&prefix_rev, s, k)
        })
        .collect::<Vec<_>>()
        .into()
}

/// Center expansion: largest `m <= min(i, n-i)` with
/// `φ(w[i-m+1..i]) = w[i+1..i+m]`.
pub fn cmp_oracle(word: &Word, phi: &InvolutionMap) -> CmpArray {
    let w = word.raw();
    let n = w.len();
    let entries = (0..=n)
        .map(|i| {
            let mut m = 0;
            while m < i.min(n - i) && phi.complement(w[i - m - 1]) == Some(w[i + m]) {
                m += 1;
            }
            m
        })
        .collect();
    CmpArray::new(entries)
}

/// Does `f` (of length `k·p`) have the requested shape with `|x| = p`?
pub fn has_form(f: &[u8], p: usize, k: usize, phi: &InvolutionMap, form: PseudoForm) -> bool {
    let x = match form {
        PseudoForm::Suffix | PseudoForm::Alternating => &f[..p],
        PseudoForm::Prefix => &f[f.len() - p..],
    };
    let Ok(fx) = phi.apply_raw(x) else {
        return false;
    };
    let block = |b: usize| &f[b * p..(b + 1) * p];
    (0..k).all(|b| {
        let expect: &[u8] = match form {
            PseudoForm::Suffix if b == k - 1 => &fx,
            PseudoForm::Prefix if b == 0 => &fx,
            PseudoForm::Alternating if b % 2 == 1 => &fx,
            _ => x,
        };
        block(b) == expect
    })
}

/// First factor of the requested form with `|x| > s`, scanning start
/// positions then lengths. Returns the 1-based start and `|x|`.
pub fn detect_oracle(
    word: &Word,
    phi: &InvolutionMap,
    k: usize,
    s: usize,
    form: PseudoForm,
) -> Option<(usize, usize)> {
    let w = word.raw();
    let n = w.len();
    for start in 0..n {
        for p in s + 1..=(n - start) / k.max(1) {
            if has_form(&w[start..start + k * p], p, k, phi, form) {
                return Some((start + 1, p));
            }
        }
    }
    None
}
