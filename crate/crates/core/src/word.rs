//! Words over a discovered byte alphabet.

use std::fmt;

const NO_CODE: u16 = u16::MAX;

/// Bijection between raw byte symbols and dense letter codes `0..σ`.
///
/// Codes are assigned in increasing byte order, so two words with the same
/// symbol set share a coding.
#[derive(Clone)]
pub struct Alphabet {
    symbols: Vec<u8>,
    codes: [u16; 256],
}

impl Alphabet {
    pub fn from_symbols(raw: &[u8]) -> Self {
        let mut seen = [false; 256];
        for &b in raw {
            seen[b as usize] = true;
        }
        let mut symbols = Vec::new();
        let mut codes = [NO_CODE; 256];
        for (b, _) in seen.iter().enumerate().filter(|(_, &s)| s) {
            codes[b] = symbols.len() as u16;
            symbols.push(b as u8);
        }
        Alphabet { symbols, codes }
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn code(&self, symbol: u8) -> Option<u8> {
        match self.codes[symbol as usize] {
            NO_CODE => None,
            c => Some(c as u8),
        }
    }

    pub fn symbol(&self, code: u8) -> u8 {
        self.symbols[code as usize]
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.symbols.iter().map(|&b| b as char))
            .finish()
    }
}

/// A word `w = a_1 a_2 ... a_n`, kept both as raw bytes and as dense codes.
#[derive(Clone)]
pub struct Word {
    raw: Vec<u8>,
    codes: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(raw: impl AsRef<[u8]>) -> Self {
        let raw = raw.as_ref().to_vec();
        let alphabet = Alphabet::from_symbols(&raw);
        let codes = raw
            .iter()
            .map(|&b| alphabet.code(b).expect("symbol was just registered"))
            .collect();
        Word {
            raw,
            codes,
            alphabet,
        }
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    pub fn raw(&self) -> &[u8] {
        &self.raw
    }

    pub fn codes(&self) -> &[u8] {
        &self.codes
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Alphabet size σ.
    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    /// The factor `w[p..q]` (1-based, inclusive). Empty when `p > q`.
    pub fn factor(&self, p: usize, q: usize) -> &[u8] {
        if p > q || p == 0 {
            return &[];
        }
        &self.raw[p - 1..q.min(self.len())]
    }

    /// Letter codes widened for suffix-tree texts, which reserve codes
    /// beyond σ for terminals and separators.
    pub(crate) fn text(&self) -> Vec<u16> {
        self.codes.iter().map(|&c| c as u16).collect()
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.raw == other.raw
    }
}

impl Eq for Word {}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", String::from_utf8_lossy(&self.raw))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.raw))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word::new(s)
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word::new(s)
    }
}

/// `w^R = a_n ... a_2 a_1`.
pub fn reverse(word: &Word) -> Word {
    let mut raw = word.raw.clone();
    raw.reverse();
    let codes = word.codes.iter().rev().copied().collect();
    Word {
        raw,
        codes,
        alphabet: word.alphabet.clone(),
    }
}
