#![allow(dead_code)]

use std::collections::BTreeMap;

use mzv_core::word_algebra::{ProductKind, Word, WordPoly};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn word(parts: &[u32]) -> Word {
    Word::new(parts.to_vec()).unwrap()
}

/// Quasi-shuffle by enumerating pairs of order-preserving injections
/// `[m] -> [l]`, `[n] -> [l]` whose images jointly cover `[l]`. A slot hit by
/// both words carries the sum of the two letters; each such merge contributes
/// a factor `-1` to the star product.
pub fn quasi_shuffle_oracle(u: &[u32], v: &[u32], kind: ProductKind) -> WordPoly {
    let (m, n) = (u.len(), v.len());
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for l in m.max(n)..=m + n {
        let full = (1u32 << l) - 1;
        for a in 0..=full {
            if a.count_ones() as usize != m {
                continue;
            }
            for b in 0..=full {
                if b.count_ones() as usize != n || a | b != full {
                    continue;
                }
                let (mut i, mut j) = (0, 0);
                let mut w = Vec::with_capacity(l);
                for slot in 0..l {
                    let mut s = 0;
                    if a >> slot & 1 == 1 {
                        s += u[i];
                        i += 1;
                    }
                    if b >> slot & 1 == 1 {
                        s += v[j];
                        j += 1;
                    }
                    w.push(s);
                }
                let merges = m + n - l;
                let sign = if kind == ProductKind::Star && merges % 2 == 1 {
                    -1
                } else {
                    1
                };
                *acc.entry(w).or_insert(0) += sign;
            }
        }
    }
    acc.into_iter()
        .map(|(w, c)| (Word::new(w).unwrap(), BigRational::from_integer(c.into())))
        .collect()
}

/// East, north and northeast lattice paths from `(0,0)` to `(m,n)`.
pub fn lattice_paths(m: u32, n: u32) -> u64 {
    if m == 0 || n == 0 {
        return 1;
    }
    lattice_paths(m - 1, n) + lattice_paths(m, n - 1) + lattice_paths(m - 1, n - 1)
}

/// Weak orderings of a `k`-set, grouped by number of blocks: every map
/// `[k] -> {0..k-1}` whose image is an initial segment `{0..r-1}`.
pub fn weak_orderings_by_blocks(k: u32) -> Vec<u64> {
    let mut counts = vec![0u64; k as usize + 1];
    let k = k as usize;
    let total = k.pow(k as u32);
    for code in 0..total.max(1) {
        let mut c = code;
        let mut seen = vec![false; k];
        for _ in 0..k {
            seen[c % k] = true;
            c /= k;
        }
        let r = seen.iter().take_while(|&&s| s).count();
        if seen[r..].iter().all(|&s| !s) {
            counts[r] += 1;
        }
    }
    counts
}

pub fn to_big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// pi to 40 significant digits.
pub const PI_LITERAL: &str = "3.141592653589793238462643383279502884197";

pub fn pi() -> f64 {
    PI_LITERAL.parse().unwrap()
}

pub fn zeta2() -> f64 {
    pi().powi(2) / 6.0
}

pub fn zeta4() -> f64 {
    pi().powi(4) / 90.0
}

/// From `z2 * z2 = 2 z2z2 + z4` evaluated with single zeta values.
pub fn zeta_2_2() -> f64 {
    (zeta2() * zeta2() - zeta4()) / 2.0
}

/// Splitting `k1 <= k2` into `k1 < k2` and `k1 = k2`.
pub fn zeta_star_2_2() -> f64 {
    zeta_2_2() + zeta4()
}
