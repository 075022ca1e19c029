//! Closed forms for powers of a single letter `z_n`.
//!
//! The k-fold product of `z_n` with itself expands as a sum over all
//! compositions `a = (a_1, ..., a_r)` of `k`:
//!
//! ```text
//! z_n * ... * z_n  =  sum_a  multinomial(k; a)              z_{n a_1} ... z_{n a_r}
//! z_n ⋆ ... ⋆ z_n  =  sum_a  multinomial(k; a) (-1)^(k-r)   z_{n a_1} ... z_{n a_r}
//! ```
//!
//! The functions here build those sums directly, without calling the
//! product recursion, so they can be checked against [`power`](super::power).

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{compositions, ProductKind, Word, WordPoly};
use crate::combinatorics::multinomial;
use crate::error::{Error, Result};

fn require_at_least(name: &'static str, value: u32, min: u32) -> Result<()> {
    if value < min {
        return Err(Error::OutOfRange {
            name,
            value: value.into(),
            min: min.into(),
        });
    }
    Ok(())
}

/// Builds the power of `z_n` from the multinomial closed form.
pub fn expand_power_closed_form(n: u32, k: u32, kind: ProductKind) -> Result<WordPoly> {
    require_at_least("n", n, 1)?;
    require_at_least("k", k, 1)?;

    let mut out = WordPoly::zero();
    for alpha in compositions(k) {
        let mut coeff = multinomial(k, &alpha)?;
        if kind == ProductKind::Star && (k as usize - alpha.depth()) % 2 == 1 {
            coeff = -coeff;
        }
        let word = Word::from(alpha.scaled(n)?);
        out.add_term(word, BigRational::from_integer(coeff));
    }
    Ok(out)
}

/// Multiplies `w` by the letter `z_n` positionally: `z_n` inserted into each
/// of the `r + 1` gaps, plus (harmonic) or minus (star) each of the `r` words
/// with one subscript raised by `n`.
///
/// Every subscript of `w` must be a multiple of `n`.
pub fn lemma1_step(w: &Word, n: u32, kind: ProductKind) -> Result<WordPoly> {
    require_at_least("n", n, 1)?;
    let subs = w.subscripts();
    if let Some((position, &subscript)) = subs.iter().enumerate().find(|(_, &s)| s % n != 0) {
        return Err(Error::NotMultiple {
            subscript,
            position,
            n,
        });
    }

    let one = BigRational::from_integer(BigInt::from(1));
    let merge_coeff = match kind {
        ProductKind::Harmonic => one.clone(),
        ProductKind::Star => -one.clone(),
    };

    let mut out = WordPoly::zero();
    for gap in 0..=subs.len() {
        let mut parts = Vec::with_capacity(subs.len() + 1);
        parts.extend_from_slice(&subs[..gap]);
        parts.push(n);
        parts.extend_from_slice(&subs[gap..]);
        out.add_term(Word::from_parts_unchecked(parts), one.clone());
    }
    for pos in 0..subs.len() {
        let mut parts = subs.to_vec();
        parts[pos] += n;
        out.add_term(Word::from_parts_unchecked(parts), merge_coeff.clone());
    }
    Ok(out)
}
