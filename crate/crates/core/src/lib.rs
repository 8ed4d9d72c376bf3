//! Minimal local periods of k-th powers at every position of a word.
//!
//! For a word `w`, exponent `k >= 2` and lower bound `s >= 0`, the minimal
//! period `mp(w)` is the smallest `m > s` such that the prefix of `w` of
//! length `k * m` is the k-th power of `w[1..m]`, or infinity if there is
//! none. This crate computes
//!
//! * `rmp[i] = mp(w[i..n])` for every position (the right array), and
//! * `lmp[i] = mp(reverse(w[1..i]))` (the left array)
//!
//! in `O(k * n)` time by running Weiner's suffix tree construction while
//! annotating every node with the minimal period of its path label and
//! answering the hard positions from short-lived windowed suffix trees.
//!
//! The arrays, together with a centralized pseudo-palindrome array, are used
//! to detect pseudo-power factors such as `x^(k-1) φ(x)` under an
//! antimorphic involution `φ` (Watson-Crick complementarity for DNA).
//!
//! ```
//! use minperiod::{compute_rmp, Period, Word};
//!
//! let w = Word::new("0100101001");
//! let rmp = compute_rmp(&w, 0, 2).unwrap();
//! assert_eq!(rmp.get(1), Period::Finite(3));
//! assert_eq!(rmp.get(2), Period::Infinite);
//! ```
//!
//! Positions are 1-based in every public API.

pub mod cli;
pub mod error;
pub mod involution;
pub mod lca;
pub mod mp;
pub mod oracle;
pub mod period;
pub mod pseudo;
pub mod rmp;
pub mod suffix_tree;
pub mod word;

pub use error::{Error, Result};
pub use involution::{apply_antimorphism, validate_involution, InvolutionMap, InvolutionViolation};
pub use lca::{build_index, lca, LcaIndex};
pub use mp::{compute_mp, compute_mp_traced, MpTrace};
pub use period::{Period, PeriodArray};
pub use pseudo::{
    compute_cmp, detect, detect_alternating_form, detect_alternating_form_counted, detect_prefix_form, detect_suffix_form, CmpArray,
    Detection, PseudoForm, Witness,
};
pub use rmp::{annotate_split, compute_lmp, compute_rmp, split_period, MpCall, RmpEngine, RmpOutcome, RmpStats};
pub use suffix_tree::{Extension, NodeId, PathLabel, SplitInfo, StructureViolation, SuffixTree};
pub use word::{reverse, Word};
