//! Truncated nested sums for multiple zeta, zeta-star, Hurwitz and t-values.
//!
//! Every evaluator sums over indices drawn from an arithmetic progression of
//! `N` bases `b_i = offset + step * i` (`i = 0..N`):
//!
//! * `mzv`, `mzsv`: `b_i = 1 + i`, i.e. `1..=N`;
//! * Hurwitz variants: `b_i = x + i`;
//! * direct t-values: `b_i = 1 + 2i`, the odd numbers.
//!
//! The depth-`r` sum is built one layer at a time from prefix sums, so the
//! cost is `O(r N)` rather than `O(N^r)`. With `x = 1` the Hurwitz bases are
//! bit-identical to the plain ones, so both evaluators return the same
//! result at equal truncation.

mod summation;

use std::num::NonZeroUsize;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word_algebra::{Composition, Word, WordPoly};

pub use summation::CompensatedSum;

pub const DEFAULT_TRUNCATION: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Number of terms per summation index.
    pub truncation: u64,
    /// Hurwitz shift `x`; ignored by the plain and t-value evaluators.
    pub shift: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            truncation: DEFAULT_TRUNCATION,
            shift: 1.0,
        }
    }
}

impl EvalConfig {
    pub fn new(truncation: u64) -> Self {
        Self {
            truncation,
            ..Self::default()
        }
    }

    pub fn with_shift(self, shift: f64) -> Self {
        Self { shift, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.truncation == 0 {
            return Err(Error::ZeroTruncation);
        }
        if !(self.shift.is_finite() && self.shift > 0.0) {
            return Err(Error::InvalidShift(self.shift));
        }
        Ok(())
    }
}

/// A truncated value and an estimate of the neglected tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub tail_bound: f64,
}

impl EvalResult {
    pub const ONE: EvalResult = EvalResult {
        value: 1.0,
        tail_bound: 0.0,
    };
}

/// Which family of nested sums a word is mapped to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ZetaKind {
    Mzv,
    Mzsv,
    HurwitzMzv,
    HurwitzMzsv,
}

impl ZetaKind {
    pub fn is_star(self) -> bool {
        matches!(self, ZetaKind::Mzsv | ZetaKind::HurwitzMzsv)
    }

    pub fn is_hurwitz(self) -> bool {
        matches!(self, ZetaKind::HurwitzMzv | ZetaKind::HurwitzMzsv)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TKind {
    Plain,
    Star,
}

#[derive(Debug, Clone, Copy)]
struct Lattice {
    offset: f64,
    step: f64,
    len: usize,
}

impl Lattice {
    #[inline]
    fn base(&self, i: usize) -> f64 {
        self.offset + self.step * i as f64
    }
}

#[inline]
fn inverse_power(base: f64, exponent: u32) -> f64 {
    match i32::try_from(exponent) {
        Ok(e) => base.powi(e).recip(),
        Err(_) => base.powf(-f64::from(exponent)),
    }
}

/// Nested sum over `b_{i_1} <(=) b_{i_2} <(=) ... <(=) b_{i_r}` of
/// `prod b_{i_j}^{-a_j}`.
///
/// Tail estimate: the outermost sum past the last base is bounded by an
/// integral, with the inner sums held at their truncated value and a factor
/// of 2 for the inner tails:
/// `2 * C * b_last^(1 - a_r) / (step * (a_r - 1))`.
fn nested_sum(parts: &[u32], strict: bool, lattice: Lattice) -> EvalResult {
    let Some((&last, inner)) = parts.split_last() else {
        return EvalResult::ONE;
    };
    let n = lattice.len;

    // prefix[i] = depth-j sum with all indices <= i.
    let mut prefix: Vec<f64> = Vec::new();
    for (layer, &a) in inner.iter().enumerate() {
        let mut next = Vec::with_capacity(n);
        let mut acc = CompensatedSum::new();
        for i in 0..n {
            let weight = if layer == 0 {
                1.0
            } else if strict {
                if i == 0 {
                    0.0
                } else {
                    prefix[i - 1]
                }
            } else {
                prefix[i]
            };
            acc.add(inverse_power(lattice.base(i), a) * weight);
            next.push(acc.value());
        }
        prefix = next;
    }

    let mut acc = CompensatedSum::new();
    for i in 0..n {
        let weight = if inner.is_empty() {
            1.0
        } else if strict {
            if i == 0 {
                0.0
            } else {
                prefix[i - 1]
            }
        } else {
            prefix[i]
        };
        acc.add(inverse_power(lattice.base(i), last) * weight);
    }

    let inner_total = prefix.last().copied().unwrap_or(1.0);
    let b_last = lattice.base(n - 1);
    let a = f64::from(last);
    let tail_bound = 2.0 * inner_total * b_last.powf(1.0 - a) / (lattice.step * (a - 1.0));

    EvalResult {
        value: acc.value(),
        tail_bound,
    }
}

fn check_admissible(alpha: &Composition) -> Result<()> {
    if alpha.last().is_some_and(|a| a < 2) {
        return Err(Error::Inadmissible {
            word: Word::from(alpha.clone()),
        });
    }
    Ok(())
}

fn lattice_len(cfg: &EvalConfig) -> Result<usize> {
    cfg.validate()?;
    usize::try_from(cfg.truncation).map_err(|_| Error::OutOfRange {
        name: "truncation",
        value: cfg.truncation,
        min: 1,
    })
}

/// Evaluates `alpha` in the requested family. The empty composition maps to
/// 1 with zero tail.
pub fn evaluate(alpha: &Composition, kind: ZetaKind, cfg: &EvalConfig) -> Result<EvalResult> {
    check_admissible(alpha)?;
    let len = lattice_len(cfg)?;
    let offset = if kind.is_hurwitz() { cfg.shift } else { 1.0 };
    Ok(nested_sum(
        alpha.parts(),
        !kind.is_star(),
        Lattice {
            offset,
            step: 1.0,
            len,
        },
    ))
}

/// `sum_{1 <= k_1 < ... < k_r <= N} k_1^{-a_1} ... k_r^{-a_r}`
pub fn mzv(alpha: &Composition, cfg: &EvalConfig) -> Result<EvalResult> {
    evaluate(alpha, ZetaKind::Mzv, cfg)
}

/// As [`mzv`] with `k_1 <= ... <= k_r`.
pub fn mzsv(alpha: &Composition, cfg: &EvalConfig) -> Result<EvalResult> {
    evaluate(alpha, ZetaKind::Mzsv, cfg)
}

/// `sum_{0 <= k_1 < ... < k_r < N} (k_1 + x)^{-a_1} ... (k_r + x)^{-a_r}`
pub fn hurwitz_mzv(alpha: &Composition, cfg: &EvalConfig) -> Result<EvalResult> {
    evaluate(alpha, ZetaKind::HurwitzMzv, cfg)
}

/// As [`hurwitz_mzv`] with non-strict inequalities.
pub fn hurwitz_mzsv(alpha: &Composition, cfg: &EvalConfig) -> Result<EvalResult> {
    evaluate(alpha, ZetaKind::HurwitzMzsv, cfg)
}

/// Multiple t-value `2^{-|alpha|} zeta(alpha; 1/2)` (or its star analogue).
/// `cfg.shift` is ignored.
pub fn t_value(alpha: &Composition, kind: TKind, cfg: &EvalConfig) -> Result<EvalResult> {
    let half = cfg.with_shift(0.5);
    let zeta_kind = match kind {
        TKind::Plain => ZetaKind::HurwitzMzv,
        TKind::Star => ZetaKind::HurwitzMzsv,
    };
    let h = evaluate(alpha, zeta_kind, &half)?;
    let scale = 2f64.powi(-(alpha.weight() as i32));
    Ok(EvalResult {
        value: h.value * scale,
        tail_bound: h.tail_bound * scale,
    })
}

/// The t-value summed directly over odd denominators
/// `(2k_1 - 1)^{-a_1} ... (2k_r - 1)^{-a_r}`, `1 <= k_j <= N`.
pub fn t_value_direct(alpha: &Composition, kind: TKind, cfg: &EvalConfig) -> Result<EvalResult> {
    check_admissible(alpha)?;
    let len = lattice_len(cfg)?;
    Ok(nested_sum(
        alpha.parts(),
        kind == TKind::Plain,
        Lattice {
            offset: 1.0,
            step: 2.0,
            len,
        },
    ))
}

fn coefficient_f64(c: &num_rational::BigRational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

fn combine(terms: &[(f64, EvalResult)]) -> EvalResult {
    let mut value = CompensatedSum::new();
    let mut tail = CompensatedSum::new();
    for (c, r) in terms {
        value.add(c * r.value);
        tail.add(c.abs() * r.tail_bound);
    }
    EvalResult {
        value: value.value(),
        tail_bound: tail.value(),
    }
}

fn evaluate_word(word: &Word, kind: ZetaKind, cfg: &EvalConfig) -> Result<EvalResult> {
    evaluate(word.as_composition(), kind, cfg)
}

/// Linear extension of the chosen evaluator: `sum coeff * eval(word)`, with
/// tail `sum |coeff| * tail(word)`. Terms are combined in canonical word
/// order.
pub fn evaluate_poly(p: &WordPoly, kind: ZetaKind, cfg: &EvalConfig) -> Result<EvalResult> {
    cfg.validate()?;
    let terms = p
        .iter()
        .map(|(w, c)| Ok((coefficient_f64(c), evaluate_word(w, kind, cfg)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(combine(&terms))
}

/// [`evaluate_poly`] with words spread over `threads` workers. The result is
/// identical to the sequential one: words are evaluated independently and
/// combined in canonical order.
pub fn evaluate_poly_parallel(
    p: &WordPoly,
    kind: ZetaKind,
    cfg: &EvalConfig,
    threads: NonZeroUsize,
) -> Result<EvalResult> {
    cfg.validate()?;
    let words: Vec<(&Word, &num_rational::BigRational)> = p.iter().collect();
    if words.is_empty() {
        return Ok(combine(&[]));
    }
    if let Some((w, _)) = words.iter().find(|(w, _)| !w.is_admissible()) {
        return Err(Error::Inadmissible { word: (*w).clone() });
    }
    let chunk = words.len().div_ceil(threads.get());
    let results: Vec<Result<Vec<(f64, EvalResult)>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = words
            .chunks(chunk)
            .map(|slice| {
                scope.spawn(move || {
                    slice
                        .iter()
                        .map(|(w, c)| Ok((coefficient_f64(c), evaluate_word(w, kind, cfg)?)))
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("evaluation worker panicked"))
            .collect()
    });
    let mut terms = Vec::with_capacity(words.len());
    for r in results {
        terms.extend(r?);
    }
    Ok(combine(&terms))
}

/// True when `|a - b|` is within the summed tail bounds plus a small
/// rounding allowance relative to the magnitudes involved.
pub fn agree_within_tails(a: &EvalResult, b: &EvalResult) -> bool {
    let rounding = 64.0 * f64::EPSILON * a.value.abs().max(b.value.abs()).max(1.0);
    (a.value - b.value).abs() <= a.tail_bound + b.tail_bound + rounding
}

/// Product of independent evaluations; the tail of `x*y` is bounded by
/// `|x| t_y + |y| t_x + t_x t_y`.
pub fn product_of(a: &EvalResult, b: &EvalResult) -> EvalResult {
    EvalResult {
        value: a.value * b.value,
        tail_bound: a.value.abs() * b.tail_bound
            + b.value.abs() * a.tail_bound
            + a.tail_bound * b.tail_bound,
    }
}

/// `x^k` with the tail propagated through repeated [`product_of`].
pub fn power_of(x: &EvalResult, k: u32) -> EvalResult {
    (0..k).fold(EvalResult::ONE, |acc, _| product_of(&acc, x))
}
