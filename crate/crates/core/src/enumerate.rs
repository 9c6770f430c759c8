//! Exhaustive enumeration of `𝔖ₙ` and `Bₙ`, class filters, and brute-force
//! descent polynomials. Everything in [`crate::triangles`] is checked against
//! the counts produced here.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use rug::Integer;
use thiserror::Error;

use crate::permcore::{self, FirstSign, ParityClass, SignedWord, UnsignedWord};
use crate::poly::IntPoly;

/// Environment variable that overrides both enumeration caps.
pub const MAX_N_ENV: &str = "SIMSUN_MAX_N";

const DEFAULT_SIGNED_CAP: usize = 9;
const DEFAULT_UNSIGNED_CAP: usize = 10;
// letters are tracked in a u64 bitmask
const HARD_CAP: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("n = {n} exceeds the enumeration cap {cap} (set {MAX_N_ENV} to override)")]
    CapExceeded { n: usize, cap: usize },
    #[error("{0} is not a permutation class")]
    NotAWordClass(Family),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Which set of words is enumerated and which statistic is recorded.
///
/// The `+` families contain the empty word (its first letter is not negative),
/// so that row 0 matches the initial conditions `R₀⁺ = D₀⁺ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Type-A simsun permutations, `des_A`.
    Rs,
    Rb,
    RbPlus,
    RbMinus,
    Rd,
    RdPlus,
    RdMinus,
    Rt,
    RtPlus,
    RtMinus,
    /// All of `𝔖ₙ`, `des_A`.
    EulerianA,
    /// All of `Dₙ`, `des_B`: the numbers `E(n,k)`.
    EulerianD,
    /// All of `Tₙ`, `des_B`: the numbers `Ẽ(n,k)`.
    EulerianT,
    /// All of `𝔖ₙ`, `lpk`.
    LeftPeakW,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Rs,
        Family::Rb,
        Family::RbPlus,
        Family::RbMinus,
        Family::Rd,
        Family::RdPlus,
        Family::RdMinus,
        Family::Rt,
        Family::RtPlus,
        Family::RtMinus,
        Family::EulerianA,
        Family::EulerianD,
        Family::EulerianT,
        Family::LeftPeakW,
    ];

    /// The nine signed simsun classes.
    pub const SIGNED_SIMSUN: [Family; 9] = [
        Family::Rb,
        Family::RbPlus,
        Family::RbMinus,
        Family::Rd,
        Family::RdPlus,
        Family::RdMinus,
        Family::Rt,
        Family::RtPlus,
        Family::RtMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rs => "RS",
            Family::Rb => "RB",
            Family::RbPlus => "RB+",
            Family::RbMinus => "RB-",
            Family::Rd => "RD",
            Family::RdPlus => "RD+",
            Family::RdMinus => "RD-",
            Family::Rt => "RT",
            Family::RtPlus => "RT+",
            Family::RtMinus => "RT-",
            Family::EulerianA => "EulerianA",
            Family::EulerianD => "EulerianD",
            Family::EulerianT => "EulerianT",
            Family::LeftPeakW => "LeftPeakW",
        }
    }

    /// Ambient set is `Bₙ` (rather than `𝔖ₙ`).
    pub fn is_signed(self) -> bool {
        !matches!(self, Family::Rs | Family::EulerianA | Family::LeftPeakW)
    }

    /// Simsun classes are listed word by word; the Eulerian and left-peak
    /// families only make sense as counts.
    pub fn is_word_class(self) -> bool {
        !matches!(
            self,
            Family::EulerianA | Family::EulerianD | Family::EulerianT | Family::LeftPeakW
        )
    }

    /// Membership test for a signed word (families over `Bₙ` only).
    pub fn contains_signed(self, w: &[i32]) -> bool {
        let sign_ok = |want_negative: bool| {
            (permcore::first_sign(w) == FirstSign::Negative) == want_negative
        };
        let parity = || permcore::parity_class(w);
        match self {
            Family::EulerianD => parity() == ParityClass::D,
            Family::EulerianT => parity() == ParityClass::T,
            Family::Rs | Family::EulerianA | Family::LeftPeakW => false,
            _ => {
                if !permcore::is_signed_simsun(w) {
                    return false;
                }
                match self {
                    Family::Rb => true,
                    Family::RbPlus => sign_ok(false),
                    Family::RbMinus => sign_ok(true),
                    Family::Rd => parity() == ParityClass::D,
                    Family::RdPlus => parity() == ParityClass::D && sign_ok(false),
                    Family::RdMinus => parity() == ParityClass::D && sign_ok(true),
                    Family::Rt => parity() == ParityClass::T,
                    Family::RtPlus => parity() == ParityClass::T && sign_ok(false),
                    Family::RtMinus => parity() == ParityClass::T && sign_ok(true),
                    _ => unreachable!(),
                }
            }
        }
    }

    /// Membership test for an unsigned word (families over `𝔖ₙ` only).
    pub fn contains_unsigned(self, w: &[i32]) -> bool {
        match self {
            Family::Rs => permcore::is_unsigned_simsun(w),
            Family::EulerianA | Family::LeftPeakW => true,
            _ => false,
        }
    }

    /// The statistic recorded for a member word.
    pub fn statistic(self, w: &[i32]) -> usize {
        match self {
            Family::Rs | Family::EulerianA => permcore::des_a(w),
            Family::LeftPeakW => permcore::lpk(w),
            _ => permcore::des_b(w),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown class {0:?}")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    /// Accepts the canonical names plus the short triangle names
    /// (`R`, `R+`, `D-`, `S`, `A`, `E`, `Et`, `W`, …).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let f = match s {
            "RS" | "S" => Family::Rs,
            "RB" | "R" => Family::Rb,
            "RB+" | "R+" => Family::RbPlus,
            "RB-" | "R-" => Family::RbMinus,
            "RD" | "D" => Family::Rd,
            "RD+" | "D+" => Family::RdPlus,
            "RD-" | "D-" => Family::RdMinus,
            "RT" | "T" => Family::Rt,
            "RT+" | "T+" => Family::RtPlus,
            "RT-" | "T-" => Family::RtMinus,
            "EulerianA" | "A" => Family::EulerianA,
            "EulerianD" | "E" => Family::EulerianD,
            "EulerianT" | "Et" => Family::EulerianT,
            "LeftPeakW" | "W" => Family::LeftPeakW,
            other => return Err(UnknownFamily(other.to_string())),
        };
        Ok(f)
    }
}

/// One row of one class: `Σ_{π} x^{stat(π)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentPolynomial {
    pub family: Family,
    pub n: usize,
    pub poly: IntPoly,
}

impl DescentPolynomial {
    pub fn new(family: Family, n: usize, poly: IntPoly) -> Self {
        debug_assert!(poly.all_nonnegative());
        Self { family, n, poly }
    }

    pub fn count(&self) -> Integer {
        self.poly.total()
    }
}

/// Largest `n` accepted by the exhaustive streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub signed: usize,
    pub unsigned: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            signed: DEFAULT_SIGNED_CAP,
            unsigned: DEFAULT_UNSIGNED_CAP,
        }
    }
}

impl Caps {
    /// Defaults, with both caps replaced by `SIMSUN_MAX_N` when it is set.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Self::uniform(n),
            None => Self::default(),
        }
    }

    pub fn uniform(n: usize) -> Self {
        let n = n.min(HARD_CAP);
        Self {
            signed: n,
            unsigned: n,
        }
    }

    /// `CapExceeded` when `n` is above the relevant cap.
    pub fn check(self, n: usize, signed: bool) -> Result<(), EnumerateError> {
        let cap = if signed { self.signed } else { self.unsigned }.min(HARD_CAP);
        if n > cap {
            Err(EnumerateError::CapExceeded { n, cap })
        } else {
            Ok(())
        }
    }
}

/// Lexicographic successor restricted to positions `fixed..`, under the order
/// `−n < ⋯ < −1 < 1 < ⋯ < n` (or `1 < ⋯ < n` when unsigned).
fn advance(w: &mut [i32], fixed: usize, signed: bool) -> bool {
    let n = w.len() as i32;
    let mut free: u64 = 0;
    for i in (fixed..w.len()).rev() {
        free |= 1 << w[i].unsigned_abs();
        let next = (w[i] + 1..=n)
            .filter(|&v| v != 0 && (signed || v > 0))
            .find(|v| free & (1 << v.unsigned_abs()) != 0);
        if let Some(v) = next {
            w[i] = v;
            free &= !(1 << v.unsigned_abs());
            fill_minimal(&mut w[i + 1..], free, signed);
            return true;
        }
    }
    false
}

/// Writes the lexicographically smallest arrangement of the free letters.
fn fill_minimal(tail: &mut [i32], free: u64, signed: bool) {
    let mut letters: Vec<i32> = (1..64).filter(|a| free & (1 << a) != 0).collect();
    if signed {
        letters.reverse();
        letters.iter_mut().for_each(|a| *a = -*a);
    }
    tail.copy_from_slice(&letters);
}

fn full_mask(n: usize) -> u64 {
    ((1u64 << (n + 1)) - 1) & !1
}

/// Lexicographically first word (with `first` pinned when given) and the
/// number of pinned positions.
fn initial_word(n: usize, signed: bool, first: Option<i32>) -> (Vec<i32>, usize) {
    let mut w = vec![0i32; n];
    match first {
        Some(a) => {
            w[0] = a;
            fill_minimal(&mut w[1..], full_mask(n) & !(1 << a.unsigned_abs()), signed);
            (w, 1)
        }
        None => {
            fill_minimal(&mut w, full_mask(n), signed);
            (w, 0)
        }
    }
}

/// Visits every word with the given first letter (or every word when `first`
/// is `None`) in lexicographic order.
fn visit_words(n: usize, signed: bool, first: Option<i32>, mut f: impl FnMut(&[i32])) {
    let (mut w, fixed) = initial_word(n, signed, first);
    loop {
        f(&w);
        if !advance(&mut w, fixed, signed) {
            break;
        }
    }
}

/// Lexicographic stream of signed words, optionally with a fixed first letter.
#[derive(Debug, Clone)]
pub struct SignedWords {
    word: Vec<i32>,
    fixed: usize,
    pending: bool,
}

impl SignedWords {
    fn new(n: usize, first: Option<i32>) -> Self {
        let (word, fixed) = initial_word(n, true, first);
        Self {
            word,
            fixed,
            pending: true,
        }
    }
}

impl Iterator for SignedWords {
    type Item = SignedWord;

    fn next(&mut self) -> Option<SignedWord> {
        if !self.pending {
            return None;
        }
        let out = SignedWord::from_trusted(self.word.clone());
        self.pending = advance(&mut self.word, self.fixed, true);
        Some(out)
    }
}

/// Lexicographic stream of `𝔖ₙ`.
#[derive(Debug, Clone)]
pub struct UnsignedWords {
    word: Vec<i32>,
    pending: bool,
}

impl Iterator for UnsignedWords {
    type Item = UnsignedWord;

    fn next(&mut self) -> Option<UnsignedWord> {
        if !self.pending {
            return None;
        }
        let out = UnsignedWord::from_trusted(self.word.clone());
        self.pending = advance(&mut self.word, 0, false);
        Some(out)
    }
}

pub fn stream_symmetric(n: usize, caps: Caps) -> Result<UnsignedWords, EnumerateError> {
    caps.check(n, false)?;
    Ok(UnsignedWords {
        word: (1..=n as i32).collect(),
        pending: true,
    })
}

pub fn stream_hyperoctahedral(n: usize, caps: Caps) -> Result<SignedWords, EnumerateError> {
    caps.check(n, true)?;
    Ok(SignedWords::new(n, None))
}

/// The words of `Bₙ` whose first letter is `first`; the partitions over all
/// `first ∈ ±[n]` cover `Bₙ` (for `n ≥ 1`).
pub fn stream_hyperoctahedral_from(
    n: usize,
    first: i32,
    caps: Caps,
) -> Result<SignedWords, EnumerateError> {
    caps.check(n, true)?;
    assert!(first != 0 && first.unsigned_abs() as usize <= n, "first letter out of range");
    Ok(SignedWords::new(n, Some(first)))
}

/// First letters in enumeration order; `[None]` for `n = 0`.
fn partitions(n: usize, signed: bool) -> Vec<Option<i32>> {
    if n == 0 {
        return vec![None];
    }
    let n = n as i32;
    let neg = (-n..=-1).filter(|_| signed);
    neg.chain(1..=n).map(Some).collect()
}

fn bump(hist: &mut Vec<Integer>, k: usize) {
    if hist.len() <= k {
        hist.resize(k + 1, Integer::new());
    }
    hist[k] += 1u32;
}

fn merge_into(acc: &mut Vec<Integer>, other: Vec<Integer>) {
    if acc.len() < other.len() {
        acc.resize(other.len(), Integer::new());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
}

/// Families recorded by [`BruteForce::signed_profile`].
pub const PROFILE_FAMILIES: [Family; 11] = [
    Family::Rb,
    Family::RbPlus,
    Family::RbMinus,
    Family::Rd,
    Family::RdPlus,
    Family::RdMinus,
    Family::Rt,
    Family::RtPlus,
    Family::RtMinus,
    Family::EulerianD,
    Family::EulerianT,
];

/// All signed descent polynomials of one length from a single pass over `Bₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedProfile {
    pub n: usize,
    rows: Vec<IntPoly>,
}

impl SignedProfile {
    pub fn get(&self, family: Family) -> Option<&IntPoly> {
        PROFILE_FAMILIES
            .iter()
            .position(|&f| f == family)
            .map(|i| &self.rows[i])
    }
}

fn profile_slot(w: &[i32], hists: &mut [Vec<Integer>]) {
    use Family::*;
    let des = permcore::des_b(w);
    let parity = permcore::parity_class(w);
    let negative_head = permcore::first_sign(w) == FirstSign::Negative;
    let slot = |f: Family| PROFILE_FAMILIES.iter().position(|&g| g == f).unwrap();
    let eulerian = if parity == ParityClass::D { EulerianD } else { EulerianT };
    bump(&mut hists[slot(eulerian)], des);
    if !permcore::is_signed_simsun(w) {
        return;
    }
    let (whole, signed_part) = match (parity, negative_head) {
        (ParityClass::D, false) => (Rd, RdPlus),
        (ParityClass::D, true) => (Rd, RdMinus),
        (ParityClass::T, false) => (Rt, RtPlus),
        (ParityClass::T, true) => (Rt, RtMinus),
    };
    let rb_part = if negative_head { RbMinus } else { RbPlus };
    for f in [Rb, rb_part, whole, signed_part] {
        bump(&mut hists[slot(f)], des);
    }
}

/// Brute-force driver: enumeration caps plus the worker count used to fan out
/// over first-letter partitions. Results do not depend on `jobs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForce {
    pub caps: Caps,
    pub jobs: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self {
            caps: Caps::default(),
            jobs: 1,
        }
    }
}

impl BruteForce {
    pub fn new(caps: Caps, jobs: usize) -> Self {
        Self {
            caps,
            jobs: jobs.max(1),
        }
    }

    /// Runs `work` on every partition and merges the per-partition results.
    fn fan_out<T, W, M>(&self, parts: Vec<Option<i32>>, work: W, merge: M) -> Result<T, EnumerateError>
    where
        T: Send + Default,
        W: Fn(Option<i32>) -> T + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        if self.jobs <= 1 {
            return Ok(parts.into_iter().map(&work).fold(T::default(), &merge));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| EnumerateError::Pool(e.to_string()))?;
        Ok(pool.install(|| {
            parts
                .into_par_iter()
                .map(&work)
                .reduce(T::default, &merge)
        }))
    }

    pub fn brute_polynomial(&self, family: Family, n: usize) -> Result<DescentPolynomial, EnumerateError> {
        let signed = family.is_signed();
        self.caps.check(n, signed)?;
        let hist = self.fan_out(
            partitions(n, signed),
            |first| {
                let mut hist = Vec::new();
                visit_words(n, signed, first, |w| {
                    let member = if signed {
                        family.contains_signed(w)
                    } else {
                        family.contains_unsigned(w)
                    };
                    if member {
                        bump(&mut hist, family.statistic(w));
                    }
                });
                hist
            },
            |mut a, b| {
                merge_into(&mut a, b);
                a
            },
        )?;
        Ok(DescentPolynomial::new(family, n, IntPoly::from_coeffs(hist)))
    }

    pub fn brute_count(&self, family: Family, n: usize) -> Result<Integer, EnumerateError> {
        Ok(self.brute_polynomial(family, n)?.count())
    }

    /// One pass over `Bₙ` filling every family of [`PROFILE_FAMILIES`].
    pub fn signed_profile(&self, n: usize) -> Result<SignedProfile, EnumerateError> {
        self.caps.check(n, true)?;
        let empty = || vec![Vec::new(); PROFILE_FAMILIES.len()];
        let hists = self.fan_out(
            partitions(n, true),
            |first| {
                let mut hists = empty();
                visit_words(n, true, first, |w| profile_slot(w, &mut hists));
                hists
            },
            |mut a: Vec<Vec<Integer>>, b| {
                if a.is_empty() {
                    return b;
                }
                for (x, y) in a.iter_mut().zip(b) {
                    merge_into(x, y);
                }
                a
            },
        )?;
        let hists = if hists.is_empty() { empty() } else { hists };
        Ok(SignedProfile {
            n,
            rows: hists.into_iter().map(IntPoly::from_coeffs).collect(),
        })
    }

    /// Members of a word class in lexicographic order.
    pub fn list_words(&self, family: Family, n: usize) -> Result<Vec<String>, EnumerateError> {
        if !family.is_word_class() {
            return Err(EnumerateError::NotAWordClass(family));
        }
        if family.is_signed() {
            Ok(stream_hyperoctahedral(n, self.caps)?
                .filter(|w| family.contains_signed(w.entries()))
                .map(|w| w.to_string())
                .collect())
        } else {
            Ok(stream_symmetric(n, self.caps)?
                .filter(|w| family.contains_unsigned(w.entries()))
                .map(|w| w.to_string())
                .collect())
        }
    }
}

/// Convenience wrapper with default caps and a single worker.
pub fn brute_polynomial(family: Family, n: usize) -> Result<DescentPolynomial, EnumerateError> {
    BruteForce::default().brute_polynomial(family, n)
}

pub fn brute_count(family: Family, n: usize) -> Result<Integer, EnumerateError> {
    BruteForce::default().brute_count(family, n)
}

/// Generates `𝓡𝓑ₙ` by growing words one letter at a time.
///
/// Removing `±n` from a signed simsun word leaves a signed simsun word, so
/// every member of `𝓡𝓑ₙ` has a unique parent in `𝓡𝓑ₙ₋₁`. A child inserts
/// `±m` (`m` = parent length + 1) into a slot of the parent:
///
/// * `+m` may go at the end, or before a letter that is not a descent top;
///   otherwise `m > π(j) > π(j+1)` would be a double descent.
/// * `−m` may go right after the sentinel, or after a letter that is not a
///   descent bottom (the sentinel counts as the left neighbour of `π(1)`).
///
/// Words are produced depth first, so memory stays `O(n²)`.
#[derive(Debug, Clone)]
pub struct InsertionStream {
    n: usize,
    stack: Vec<Vec<i32>>,
}

pub fn insertion_stream_rb(n: usize) -> InsertionStream {
    InsertionStream {
        n,
        stack: vec![Vec::new()],
    }
}

fn children(parent: &[i32]) -> Vec<Vec<i32>> {
    let m = parent.len();
    let letter = m as i32 + 1;
    let with = |slot: usize, v: i32| {
        let mut w = Vec::with_capacity(m + 1);
        w.extend_from_slice(&parent[..slot]);
        w.push(v);
        w.extend_from_slice(&parent[slot..]);
        w
    };
    let mut out = Vec::new();
    for slot in 0..=m {
        let before_descent_top = slot + 1 < m && parent[slot] > parent[slot + 1];
        if !before_descent_top {
            out.push(with(slot, letter));
        }
        let after_descent_bottom = match slot {
            0 => false,
            1 => parent[0] < 0,
            _ => parent[slot - 2] > parent[slot - 1],
        };
        if !after_descent_bottom {
            out.push(with(slot, -letter));
        }
    }
    out
}

impl Iterator for InsertionStream {
    type Item = SignedWord;

    fn next(&mut self) -> Option<SignedWord> {
        while let Some(w) = self.stack.pop() {
            if w.len() == self.n {
                return Some(SignedWord::from_trusted(w));
            }
            let mut kids = children(&w);
            kids.reverse();
            self.stack.extend(kids);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn symmetric_stream_sizes() {
        let caps = Caps::default();
        let zero: Vec<_> = stream_symmetric(0, caps).unwrap().collect();
        assert_eq!(zero, vec![UnsignedWord::empty()]);
        assert_eq!(stream_symmetric(3, caps).unwrap().count(), 6);
        let mut five = stream_symmetric(5, caps).unwrap();
        assert_eq!(five.next().unwrap().to_string(), "1,2,3,4,5");
        assert_eq!(five.count(), 119);
    }

    #[test]
    fn hyperoctahedral_stream_sizes() {
        let caps = Caps::default();
        assert_eq!(stream_hyperoctahedral(2, caps).unwrap().count(), 8);
        assert_eq!(stream_hyperoctahedral(0, caps).unwrap().count(), 1);
        assert_eq!(stream_hyperoctahedral(3, caps).unwrap().count(), 48);
    }

    #[test]
    fn streams_are_sorted_and_distinct() {
        let caps = Caps::default();
        let words: Vec<_> = stream_hyperoctahedral(4, caps)
            .unwrap()
            .map(|w| w.entries().to_vec())
            .collect();
        assert_eq!(words.len(), 384);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(words[0], vec![-4, -3, -2, -1]);
        let perms: Vec<_> = stream_symmetric(5, caps)
            .unwrap()
            .map(|w| w.entries().to_vec())
            .collect();
        assert!(perms.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn partitions_cover_the_group() {
        let caps = Caps::default();
        let mut all = Vec::new();
        for first in [-3, -2, -1, 1, 2, 3] {
            all.extend(stream_hyperoctahedral_from(3, first, caps).unwrap());
        }
        let whole: Vec<_> = stream_hyperoctahedral(3, caps).unwrap().collect();
        assert_eq!(all, whole);
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps { signed: 3, unsigned: 4 };
        assert_eq!(
            stream_hyperoctahedral(4, caps).unwrap_err(),
            EnumerateError::CapExceeded { n: 4, cap: 3 }
        );
        assert!(stream_symmetric(4, caps).is_ok());
        let brute = BruteForce::new(caps, 1);
        assert!(brute.brute_polynomial(Family::Rb, 4).is_err());
    }

    #[test]
    fn brute_polynomial_examples() {
        assert_eq!(brute_polynomial(Family::Rb, 2).unwrap().poly, poly(&[1, 6]));
        assert_eq!(brute_polynomial(Family::Rd, 4).unwrap().poly, poly(&[1, 36, 62]));
        assert_eq!(brute_polynomial(Family::RbMinus, 3).unwrap().poly, poly(&[0, 7, 9]));
    }

    #[test]
    fn brute_count_examples() {
        assert_eq!(brute_count(Family::Rb, 2).unwrap(), 7);
        assert_eq!(brute_count(Family::Rs, 4).unwrap(), 16);
        assert_eq!(brute_count(Family::Rb, 0).unwrap(), 1);
    }

    #[test]
    fn row_zero_conventions() {
        for (f, want) in [
            (Family::RbPlus, 1),
            (Family::RbMinus, 0),
            (Family::RdPlus, 1),
            (Family::RtPlus, 0),
            (Family::Rt, 0),
            (Family::EulerianD, 1),
            (Family::EulerianT, 0),
        ] {
            assert_eq!(brute_count(f, 0).unwrap(), want, "{f}");
        }
    }

    #[test]
    fn listed_rb2() {
        let listed: BTreeSet<String> = ["1,2", "1,-2", "2,1", "-2,1", "-1,2", "2,-1", "-2,-1"]
            .into_iter()
            .map(String::from)
            .collect();
        let got: BTreeSet<String> = BruteForce::default()
            .list_words(Family::Rb, 2)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(got, listed);
    }

    #[test]
    fn list_words_rejects_count_families() {
        assert_eq!(
            BruteForce::default().list_words(Family::EulerianD, 2),
            Err(EnumerateError::NotAWordClass(Family::EulerianD))
        );
    }

    #[test]
    fn insertion_small_cases() {
        let zero: Vec<_> = insertion_stream_rb(0).collect();
        assert_eq!(zero, vec![SignedWord::empty()]);
        let one: BTreeSet<String> = insertion_stream_rb(1).map(|w| w.to_string()).collect();
        assert_eq!(one, BTreeSet::from(["1".to_string(), "-1".to_string()]));
        assert_eq!(insertion_stream_rb(2).count(), 7);
    }

    #[test]
    fn insertion_matches_filter() {
        for n in 0..=6 {
            let grown: Vec<SignedWord> = insertion_stream_rb(n).collect();
            let set: BTreeSet<_> = grown.iter().cloned().collect();
            assert_eq!(set.len(), grown.len(), "duplicates at n={n}");
            let filtered: BTreeSet<_> = stream_hyperoctahedral(n, Caps::default())
                .unwrap()
                .filter(|w| w.is_simsun())
                .collect();
            assert_eq!(set, filtered, "n={n}");
        }
    }

    #[test]
    fn profile_agrees_with_single_family_runs() {
        let brute = BruteForce::default();
        for n in 0..=4 {
            let profile = brute.signed_profile(n).unwrap();
            for f in PROFILE_FAMILIES {
                assert_eq!(
                    profile.get(f).unwrap(),
                    &brute.brute_polynomial(f, n).unwrap().poly,
                    "{f} n={n}"
                );
            }
        }
    }

    #[test]
    fn job_count_does_not_change_results() {
        let one = BruteForce::new(Caps::default(), 1).signed_profile(5).unwrap();
        let three = BruteForce::new(Caps::default(), 3).signed_profile(5).unwrap();
        assert_eq!(one, three);
        let a = BruteForce::new(Caps::default(), 4).brute_polynomial(Family::Rs, 6).unwrap();
        let b = brute_polynomial(Family::Rs, 6).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn family_names_roundtrip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("R+".parse::<Family>().unwrap(), Family::RbPlus);
        assert_eq!("W".parse::<Family>().unwrap(), Family::LeftPeakW);
        assert!("Q".parse::<Family>().is_err());
    }
}
