//! Signed and unsigned permutation words, descent statistics and the two
//! simsun membership predicates.
//!
//! A signed word `π(1)…π(n)` is always read with an implicit leading sentinel
//! `π(0) = 0`. The sentinel is never stored. Statistics that look at it say so:
//! [`SignedWord::des_b`] and [`SignedWord::has_double_descent`] include it,
//! while the unsigned statistics ([`UnsignedWord::des_a`] and the type-A
//! double-descent test inside [`UnsignedWord::is_simsun`]) do not.
//! [`UnsignedWord::lpk`] uses the sentinel only as the left neighbour of the
//! first entry.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("entry {0} is zero")]
    ZeroEntry(i64),
    #[error("entry {entry} out of range for length {n}")]
    OutOfRange { entry: i64, n: usize },
    #[error("absolute value {0} appears more than once")]
    Repeated(i64),
    #[error("cannot parse {0:?} as a word entry")]
    Parse(String),
    #[error("k = {k} out of range 0..={n}")]
    KOutOfRange { k: usize, n: usize },
}

/// Parity of the number of negative entries of a signed word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityClass {
    /// Even number of negatives (the subgroup `Dₙ`).
    D,
    /// Odd number of negatives (`Tₙ = Bₙ \ Dₙ`).
    T,
}

/// Sign of the first letter `π(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FirstSign {
    Positive,
    Negative,
    Empty,
}

/// A signed permutation in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord {
    entries: Vec<i32>,
}

/// An ordinary permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnsignedWord {
    entries: Vec<i32>,
}

fn check_letters(entries: &[i64], allow_negative: bool) -> Result<(), WordError> {
    let n = entries.len();
    let mut seen = vec![false; n + 1];
    for &e in entries {
        if e == 0 {
            return Err(WordError::ZeroEntry(e));
        }
        if e < 0 && !allow_negative {
            return Err(WordError::OutOfRange { entry: e, n });
        }
        let a = e.unsigned_abs() as usize;
        if a > n {
            return Err(WordError::OutOfRange { entry: e, n });
        }
        if seen[a] {
            return Err(WordError::Repeated(a as i64));
        }
        seen[a] = true;
    }
    Ok(())
}

fn parse_entries(s: &str) -> Result<Vec<i64>, WordError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| WordError::Parse(tok.to_string()))
        })
        .collect()
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[i32]) -> fmt::Result {
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

impl SignedWord {
    pub fn new(entries: Vec<i32>) -> Result<Self, WordError> {
        let wide: Vec<i64> = entries.iter().map(|&e| e as i64).collect();
        check_letters(&wide, true)?;
        Ok(Self { entries })
    }

    /// Wraps entries already known to form a signed permutation.
    pub(crate) fn from_trusted(entries: Vec<i32>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Type-B descents, counting `i = 0` against the sentinel.
    pub fn des_b(&self) -> usize {
        des_b(&self.entries)
    }

    /// True iff `π(i−1) > π(i) > π(i+1)` for some `1 ≤ i ≤ n−1`, with `π(0) = 0`.
    pub fn has_double_descent(&self) -> bool {
        has_signed_double_descent(&self.entries, self.len())
    }

    /// Drops the letters `±n, ±(n−1), …, ±(n−k+1)`.
    pub fn remove_top(&self, k: usize) -> Result<SignedWord, WordError> {
        let n = self.len();
        if k > n {
            return Err(WordError::KOutOfRange { k, n });
        }
        let keep = (n - k) as u32;
        Ok(Self {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|e| e.unsigned_abs() <= keep)
                .collect(),
        })
    }

    pub fn is_simsun(&self) -> bool {
        is_signed_simsun(&self.entries)
    }

    pub fn parity_class(&self) -> ParityClass {
        parity_class(&self.entries)
    }

    pub fn first_sign(&self) -> FirstSign {
        first_sign(&self.entries)
    }

    pub fn all_positive(&self) -> bool {
        self.entries.iter().all(|&e| e > 0)
    }

    /// The unsigned word obtained by forgetting signs.
    pub fn abs(&self) -> UnsignedWord {
        UnsignedWord {
            entries: self.entries.iter().map(|e| e.abs()).collect(),
        }
    }
}

impl UnsignedWord {
    pub fn new(entries: Vec<i32>) -> Result<Self, WordError> {
        let wide: Vec<i64> = entries.iter().map(|&e| e as i64).collect();
        check_letters(&wide, false)?;
        Ok(Self { entries })
    }

    pub(crate) fn from_trusted(entries: Vec<i32>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn des_a(&self) -> usize {
        des_a(&self.entries)
    }

    /// Left peaks `π(i−1) < π(i) > π(i+1)` for `1 ≤ i ≤ n−1`, with `π(0) = 0`.
    pub fn lpk(&self) -> usize {
        lpk(&self.entries)
    }

    /// Subsequence of the letters `≤ k`.
    pub fn restrict(&self, k: usize) -> Result<UnsignedWord, WordError> {
        let n = self.len();
        if k > n {
            return Err(WordError::KOutOfRange { k, n });
        }
        Ok(Self {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|&e| e as usize <= k)
                .collect(),
        })
    }

    pub fn is_simsun(&self) -> bool {
        is_unsigned_simsun(&self.entries)
    }

    pub fn to_signed(&self) -> SignedWord {
        SignedWord {
            entries: self.entries.clone(),
        }
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.entries)
    }
}

impl fmt::Display for UnsignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.entries)
    }
}

fn narrow(entries: Vec<i64>) -> Result<Vec<i32>, WordError> {
    entries
        .into_iter()
        .map(|e| i32::try_from(e).map_err(|_| WordError::Parse(e.to_string())))
        .collect()
}

impl FromStr for SignedWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wide = parse_entries(s)?;
        check_letters(&wide, true)?;
        Ok(Self {
            entries: narrow(wide)?,
        })
    }
}

impl FromStr for UnsignedWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wide = parse_entries(s)?;
        check_letters(&wide, false)?;
        Ok(Self {
            entries: narrow(wide)?,
        })
    }
}

// Slice-level statistics. The enumeration hot loops call these directly.

pub(crate) fn des_a(w: &[i32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

pub(crate) fn des_b(w: &[i32]) -> usize {
    let head = usize::from(w.first().is_some_and(|&e| e < 0));
    head + des_a(w)
}

pub(crate) fn lpk(w: &[i32]) -> usize {
    let n = w.len();
    (0..n.saturating_sub(1))
        .filter(|&i| {
            let left = if i == 0 { 0 } else { w[i - 1] };
            left < w[i] && w[i] > w[i + 1]
        })
        .count()
}

/// Double descent with sentinel among the letters of absolute value `≤ keep`.
fn has_signed_double_descent(w: &[i32], keep: usize) -> bool {
    let keep = keep as u32;
    let (mut a, mut b) = (None::<i32>, 0i32);
    for &c in w.iter().filter(|e| e.unsigned_abs() <= keep) {
        if let Some(a) = a {
            if a > b && b > c {
                return true;
            }
        }
        a = Some(b);
        b = c;
    }
    false
}

/// Type-A double descent (no sentinel) among the letters `≤ keep`.
fn has_unsigned_double_descent(w: &[i32], keep: usize) -> bool {
    let keep = keep as i32;
    let mut window = [0i32; 3];
    let mut seen = 0usize;
    for &c in w.iter().filter(|&&e| e <= keep) {
        window = [window[1], window[2], c];
        seen += 1;
        if seen >= 3 && window[0] > window[1] && window[1] > window[2] {
            return true;
        }
    }
    false
}

pub(crate) fn is_signed_simsun(w: &[i32]) -> bool {
    (0..=w.len()).all(|keep| !has_signed_double_descent(w, keep))
}

pub(crate) fn is_unsigned_simsun(w: &[i32]) -> bool {
    (0..=w.len()).all(|keep| !has_unsigned_double_descent(w, keep))
}

pub(crate) fn parity_class(w: &[i32]) -> ParityClass {
    if w.iter().filter(|&&e| e < 0).count() % 2 == 0 {
        ParityClass::D
    } else {
        ParityClass::T
    }
}

pub(crate) fn first_sign(w: &[i32]) -> FirstSign {
    match w.first() {
        None => FirstSign::Empty,
        Some(&e) if e > 0 => FirstSign::Positive,
        Some(_) => FirstSign::Negative,
    }
}
