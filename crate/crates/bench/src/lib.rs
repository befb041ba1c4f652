//! Shared inputs for the benchmarks.

use skein_core::{parse_braid, HeckeElement, Partition};

pub fn braid(text: &str, width: usize) -> HeckeElement {
    HeckeElement::from_braid(&parse_braid(text, Some(width)).expect("valid braid")).expect("valid width")
}

pub fn partition(text: &str) -> Partition {
    text.parse().expect("valid partition")
}

/// A dense element of `H_n`: the full twist on `n` strands.
pub fn full_twist(n: usize) -> HeckeElement {
    let half: Vec<String> = (1..n).flat_map(|k| (k..n).rev().map(|i| i.to_string())).collect();
    let word = [half.clone(), half].concat().join(" ");
    braid(&word, n)
}
