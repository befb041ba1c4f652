//! Permutations of `{1..n}` with their Coxeter combinatorics, and braid words.
//!
//! Composition convention: `(p * q)(j) = p(q(j))`, so right multiplication by
//! the simple transposition `s_i` swaps positions `i` and `i + 1` of the
//! one-line notation. Appending `σ_i` to the bottom of a braid corresponds to
//! right multiplication by `s_i`.

use std::fmt;

use thiserror::Error;

/// Widths above this do not fit the packed representation.
pub const MAX_PERMUTATION_WIDTH: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("malformed token {0:?}")]
    MalformedToken(String),
    #[error("generator index 0 is not allowed")]
    ZeroIndex,
    #[error("generator index {index} is out of range for width {width}")]
    IndexOutOfRange { index: usize, width: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("width {0} exceeds the supported maximum of {MAX_PERMUTATION_WIDTH}")]
    TooWide(usize),
}

/// A permutation of `{1..n}` stored as 4-bit nibbles, position 1 in the most
/// significant nibble. For equal widths the derived order is the
/// lexicographic order of one-line notation.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    width: u8,
    code: u64,
}

impl Permutation {
    #[inline]
    fn shift(pos: usize) -> u32 {
        4 * (15 - pos as u32)
    }

    /// Zero-based image of zero-based position.
    #[inline]
    fn raw(&self, pos: usize) -> usize {
        ((self.code >> Self::shift(pos)) & 0xf) as usize
    }

    #[inline]
    fn with_raw(mut self, pos: usize, val: usize) -> Self {
        let sh = Self::shift(pos);
        self.code = (self.code & !(0xf << sh)) | ((val as u64) << sh);
        self
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_PERMUTATION_WIDTH, "permutation width {n} too large");
        (0..n).fold(Permutation { width: n as u8, code: 0 }, |p, i| p.with_raw(i, i))
    }

    /// From one-line notation with values `1..=n`.
    pub fn from_images(images: &[usize]) -> Result<Self, BraidError> {
        let n = images.len();
        if n > MAX_PERMUTATION_WIDTH {
            return Err(BraidError::TooWide(n));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(BraidError::NotAPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(images
            .iter()
            .enumerate()
            .fold(Permutation { width: n as u8, code: 0 }, |p, (i, &x)| p.with_raw(i, x - 1)))
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn image(&self, i: usize) -> usize {
        self.raw(i - 1) + 1
    }

    pub fn images(&self) -> Vec<usize> {
        (0..self.width()).map(|i| self.raw(i) + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.width()).all(|i| self.raw(i) == i)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.width();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.raw(i) > self.raw(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self * s_i` together with the change in length (`+1` or `-1`).
    #[inline]
    pub fn mul_transposition(&self, i: usize) -> (Permutation, i8) {
        debug_assert!(i >= 1 && i < self.width());
        let (a, b) = (self.raw(i - 1), self.raw(i));
        let p = self.with_raw(i - 1, b).with_raw(i, a);
        (p, if a < b { 1 } else { -1 })
    }

    /// `s_i * self` together with the change in length.
    pub fn left_mul_transposition(&self, i: usize) -> (Permutation, i8) {
        let n = self.width();
        let (mut pa, mut pb) = (0, 0);
        for k in 0..n {
            if self.raw(k) == i - 1 {
                pa = k;
            } else if self.raw(k) == i {
                pb = k;
            }
        }
        let p = self.with_raw(pa, i).with_raw(pb, i - 1);
        (p, if pa < pb { 1 } else { -1 })
    }

    /// `(self * other)(j) = self(other(j))`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.width, other.width, "width mismatch");
        (0..self.width()).fold(*self, |p, j| p.with_raw(j, self.raw(other.raw(j))))
    }

    pub fn inverse(&self) -> Permutation {
        (0..self.width()).fold(*self, |p, j| p.with_raw(self.raw(j), j))
    }

    pub fn has_descent(&self, i: usize) -> bool {
        self.raw(i - 1) > self.raw(i)
    }

    /// Largest `i` with `π(i) > π(i+1)`.
    pub fn max_descent(&self) -> Option<usize> {
        (1..self.width()).rev().find(|&i| self.has_descent(i))
    }

    /// A reduced word `i_1 .. i_k` with `self = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = *self;
        let mut word = Vec::with_capacity(p.length());
        while let Some(i) = p.max_descent() {
            word.push(i);
            p = p.mul_transposition(i).0;
        }
        word.reverse();
        word
    }

    /// Block sum: `self` on `1..m`, `other` shifted onto `m+1..m+n`.
    pub fn tensor(&self, other: &Permutation) -> Permutation {
        let m = self.width();
        let n = m + other.width();
        assert!(n <= MAX_PERMUTATION_WIDTH, "tensor width {n} too large");
        let mut p = Permutation { width: n as u8, code: self.code };
        for j in 0..other.width() {
            p = p.with_raw(m + j, m + other.raw(j));
        }
        p
    }

    /// Same permutation with a fixed point appended.
    pub fn extend(&self) -> Permutation {
        self.tensor(&Permutation::identity(1))
    }

    /// Drop the last position; requires that it is a fixed point.
    pub fn restrict(&self) -> Permutation {
        let n = self.width();
        debug_assert!(n >= 1 && self.raw(n - 1) == n - 1);
        let mut p = self.with_raw(n - 1, 0);
        p.width -= 1;
        p
    }

    pub fn fixes_last(&self) -> bool {
        let n = self.width();
        n == 0 || self.raw(n - 1) == n - 1
    }

    /// Factor `p = α · s_n · β` with `α, β` fixing `n + 1` and lengths adding
    /// up, where `β` is the minimal-length coset representative moving `n + 1`
    /// into place. Returns `None` if `p` fixes `n + 1`. The returned factors
    /// have width `n`.
    pub fn coset_split(&self) -> Option<(Permutation, Permutation)> {
        if self.fixes_last() {
            return None;
        }
        let n1 = self.width();
        let n = n1 - 1;
        let k = (0..n1).find(|&j| self.raw(j) == n).expect("value n+1 present") + 1;
        // p = α s_n s_{n-1} ... s_k, with α = p s_k s_{k+1} ... s_n
        let mut alpha = *self;
        for i in k..=n {
            alpha = alpha.mul_transposition(i).0;
        }
        let mut beta = Permutation::identity(n1);
        for i in (k..n).rev() {
            beta = beta.mul_transposition(i).0;
        }
        Some((alpha.restrict(), beta.restrict()))
    }

    /// Alternative factorization with `α` the minimal-length representative,
    /// obtained by splitting the inverse.
    pub fn coset_split_left(&self) -> Option<(Permutation, Permutation)> {
        let (a, b) = self.inverse().coset_split()?;
        Some((b.inverse(), a.inverse()))
    }

    /// All permutations of width `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation::from_images(&cur).expect("valid permutation"));
            // next permutation in lexicographic order
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// The longest element, `i -> n + 1 - i`.
    pub fn longest(n: usize) -> Permutation {
        let images: Vec<usize> = (1..=n).rev().collect();
        Permutation::from_images(&images).expect("valid permutation")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    /// One-line notation; digits are concatenated for widths below ten.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.width == 0 {
            return write!(f, "()");
        }
        let sep = if self.width() < 10 { "" } else { " " };
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// A word in the generators `σ_i^{±1}` of the braid group on `width` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    width: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(width: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        for &l in &letters {
            let index = l.unsigned_abs() as usize;
            if index == 0 {
                return Err(BraidError::ZeroIndex);
            }
            if index >= width {
                return Err(BraidError::IndexOutOfRange { index, width });
            }
        }
        Ok(BraidWord { width, letters })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The inverse braid: reversed word with every letter inverted.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            width: self.width,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Positive word spelling the positive permutation braid of `p`.
    pub fn positive_permutation(p: &Permutation) -> BraidWord {
        BraidWord {
            width: p.width(),
            letters: p.reduced_word().into_iter().map(|i| i as i32).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parse whitespace-separated letters: signed integers (`1 -2 1`) or
/// `s<i>` / `s<i>'` for `σ_i` / `σ_i^{-1}`. The width defaults to one more
/// than the largest index.
pub fn parse_braid(text: &str, width: Option<usize>) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let bad = || BraidError::MalformedToken(tok.to_string());
        let letter: i32 = if let Some(rest) = tok.strip_prefix('s') {
            let (digits, inverse) = match rest.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (rest, false),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let i: i32 = digits.parse().map_err(|_| bad())?;
            if inverse {
                -i
            } else {
                i
            }
        } else {
            tok.parse().map_err(|_| bad())?
        };
        if letter == 0 {
            return Err(BraidError::ZeroIndex);
        }
        letters.push(letter);
    }
    let max = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
    let width = width.unwrap_or(max + 1);
    BraidWord::new(width, letters)
}
