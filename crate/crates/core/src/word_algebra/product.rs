use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Word, WordPoly};
use crate::error::{Error, Result};

/// Which quasi-shuffle product to use. They differ only in the sign of the
/// merge term `z_{j+k}(u . v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    /// The harmonic (stuffle) product `*`, merge sign `+1`.
    Harmonic,
    /// The star product, merge sign `-1`.
    Star,
}

impl ProductKind {
    pub const ALL: [ProductKind; 2] = [ProductKind::Harmonic, ProductKind::Star];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Harmonic => "harmonic",
            ProductKind::Star => "star",
        }
    }

    pub(crate) fn merge_is_negative(self) -> bool {
        matches!(self, ProductKind::Star)
    }
}

impl std::str::FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "harmonic" => Ok(ProductKind::Harmonic),
            "star" => Ok(ProductKind::Star),
            other => Err(format!(
                "unknown product kind {other:?} (expected harmonic|star)"
            )),
        }
    }
}

/// Walks the recursion tree of
/// `z_j u . z_k v = z_j(u . z_k v) + z_k(z_j u . v) +- z_{j+k}(u . v)`,
/// emitting one signed word per leaf.
fn quasi_shuffle_into(
    u: &[u32],
    v: &[u32],
    negative_merge: bool,
    prefix: &mut Vec<u32>,
    negative: bool,
    out: &mut BTreeMap<Vec<u32>, BigInt>,
) {
    if u.is_empty() || v.is_empty() {
        let mut word = prefix.clone();
        word.extend_from_slice(u);
        word.extend_from_slice(v);
        let delta = if negative {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        *out.entry(word).or_insert_with(BigInt::zero) += delta;
        return;
    }

    prefix.push(u[0]);
    quasi_shuffle_into(&u[1..], v, negative_merge, prefix, negative, out);
    prefix.pop();

    prefix.push(v[0]);
    quasi_shuffle_into(u, &v[1..], negative_merge, prefix, negative, out);
    prefix.pop();

    prefix.push(u[0] + v[0]);
    quasi_shuffle_into(
        &u[1..],
        &v[1..],
        negative_merge,
        prefix,
        negative ^ negative_merge,
        out,
    );
    prefix.pop();
}

/// Word-level product of the requested kind.
pub fn product(u: &Word, v: &Word, kind: ProductKind) -> WordPoly {
    let mut counts = BTreeMap::new();
    let mut prefix = Vec::with_capacity(u.depth() + v.depth());
    quasi_shuffle_into(
        u.subscripts(),
        v.subscripts(),
        kind.merge_is_negative(),
        &mut prefix,
        false,
        &mut counts,
    );
    counts
        .into_iter()
        .map(|(parts, c)| {
            (
                Word::from_parts_unchecked(parts),
                BigRational::from_integer(c),
            )
        })
        .collect()
}

pub fn harmonic_product(u: &Word, v: &Word) -> WordPoly {
    product(u, v, ProductKind::Harmonic)
}

pub fn star_product(u: &Word, v: &Word) -> WordPoly {
    product(u, v, ProductKind::Star)
}

/// Bilinear extension of [`product`] to word polynomials.
pub fn poly_product(a: &WordPoly, b: &WordPoly, kind: ProductKind) -> WordPoly {
    let mut out = WordPoly::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let coeff = ca * cb;
            for (w, c) in product(wa, wb, kind).iter() {
                out.add_term(w.clone(), c * &coeff);
            }
        }
    }
    out
}

/// `z_n . z_n . ... . z_n` (`k` factors) by repeated multiplication. `k = 0`
/// gives the unit polynomial.
pub fn power(n: u32, k: u32, kind: ProductKind) -> Result<WordPoly> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0,
            min: 1,
        });
    }
    let letter = WordPoly::from_word(Word::letter(n));
    let mut acc = WordPoly::unit();
    for _ in 0..k {
        acc = poly_product(&acc, &letter, kind);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(parts: &[u32]) -> Word {
        Word::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, &[u32])]) -> WordPoly {
        terms
            .iter()
            .map(|&(c, p)| (w(p), BigRational::from_integer(c.into())))
            .collect()
    }

    #[test]
    fn unit_laws() {
        let v = w(&[2, 3]);
        for kind in ProductKind::ALL {
            assert_eq!(product(&Word::unit(), &v, kind), poly(&[(1, &[2, 3])]));
            assert_eq!(product(&v, &Word::unit(), kind), poly(&[(1, &[2, 3])]));
        }
    }

    #[test]
    fn single_letter_products() {
        assert_eq!(
            harmonic_product(&w(&[2]), &w(&[2])),
            poly(&[(2, &[2, 2]), (1, &[4])])
        );
        assert_eq!(
            harmonic_product(&w(&[2]), &w(&[3])),
            poly(&[(1, &[2, 3]), (1, &[3, 2]), (1, &[5])])
        );
        assert_eq!(
            star_product(&w(&[2]), &w(&[2])),
            poly(&[(2, &[2, 2]), (-1, &[4])])
        );
        assert_eq!(
            star_product(&w(&[2]), &w(&[3])),
            poly(&[(1, &[2, 3]), (1, &[3, 2]), (-1, &[5])])
        );
    }

    #[test]
    fn bilinear_extension() {
        let three = BigRational::from_integer(3.into());
        let a = WordPoly::term(w(&[2]), three.clone());
        assert_eq!(
            poly_product(&a, &WordPoly::unit(), ProductKind::Harmonic),
            WordPoly::term(w(&[2]), three)
        );

        let a = poly(&[(1, &[2]), (1, &[3])]);
        let b = poly(&[(1, &[2])]);
        assert_eq!(
            poly_product(&a, &b, ProductKind::Harmonic),
            poly(&[
                (2, &[2, 2]),
                (1, &[4]),
                (1, &[2, 3]),
                (1, &[3, 2]),
                (1, &[5])
            ])
        );

        let half = BigRational::new(1.into(), 2.into());
        let h = WordPoly::term(w(&[2]), half);
        // (1/2)(1/2) * (2 z2 z2 + z4)
        let expected: WordPoly = [
            (w(&[2, 2]), BigRational::new(1.into(), 2.into())),
            (w(&[4]), BigRational::new(1.into(), 4.into())),
        ]
        .into_iter()
        .collect();
        assert_eq!(poly_product(&h, &h, ProductKind::Harmonic), expected);
    }

    #[test]
    fn small_powers() {
        assert_eq!(
            power(2, 0, ProductKind::Harmonic).unwrap(),
            WordPoly::unit()
        );
        assert_eq!(
            power(2, 2, ProductKind::Harmonic).unwrap(),
            poly(&[(2, &[2, 2]), (1, &[4])])
        );
        assert_eq!(
            power(2, 2, ProductKind::Star).unwrap(),
            poly(&[(2, &[2, 2]), (-1, &[4])])
        );
        assert!(power(0, 2, ProductKind::Star).is_err());
    }

    #[test]
    fn product_preserves_weight() {
        let u = w(&[1, 3, 2]);
        let v = w(&[2, 2]);
        for kind in ProductKind::ALL {
            let p = product(&u, &v, kind);
            assert_eq!(p.homogeneous_weight(), Some(u.weight() + v.weight()));
        }
    }
}
