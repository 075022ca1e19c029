//! Exact big-integer counts: multinomials, Stirling numbers of the second
//! kind, Delannoy and Fubini numbers, and the Fubini/Delannoy double-sum
//! identity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word_algebra::{compositions, Composition};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the division
    // is exact at every step.
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `k! / (a_1! a_2! ... a_r!)`. The parts of `alpha` must sum to `k`.
pub fn multinomial(k: u32, alpha: &Composition) -> Result<BigInt> {
    let sum = alpha.weight();
    if sum != u64::from(k) {
        return Err(Error::SumMismatch {
            expected: k.into(),
            actual: sum,
        });
    }
    let mut running = 0u32;
    let mut acc = BigInt::one();
    for &a in alpha.parts() {
        running += a;
        acc *= binomial(running, a);
    }
    Ok(acc)
}

/// Delannoy number `D(m, n)`: 1 on the axes, otherwise
/// `D(m-1, n) + D(m-1, n-1) + D(m, n-1)`.
pub fn delannoy(m: u32, n: u32) -> BigInt {
    let width = n as usize + 1;
    let mut row = vec![BigInt::one(); width];
    for _ in 1..=m {
        let mut next = vec![BigInt::one(); width];
        for j in 1..width {
            next[j] = &row[j] + &row[j - 1] + &next[j - 1];
        }
        row = next;
    }
    row.swap_remove(n as usize)
}

/// Stirling number of the second kind via
/// `S(k, r) = r S(k-1, r) + S(k-1, r-1)`. Zero when `r > k`; `S(0, 0) = 1`.
pub fn stirling2(k: u32, r: u32) -> BigInt {
    if r > k {
        return BigInt::zero();
    }
    let cols = r as usize + 1;
    let mut row = vec![BigInt::zero(); cols];
    row[0] = BigInt::one();
    for i in 1..=k as usize {
        let mut next = vec![BigInt::zero(); cols];
        for j in 1..cols.min(i + 1) {
            next[j] = &row[j] * j + &row[j - 1];
        }
        row = next;
    }
    row.swap_remove(r as usize)
}

/// `S(k, r)` from the alternating sum `sum_j (-1)^(r-j) C(r, j) j^k`, which
/// equals `r! S(k, r)`.
pub fn stirling2_inclusion_exclusion(k: u32, r: u32) -> BigInt {
    let mut total = BigInt::zero();
    for j in 0..=r {
        let term = binomial(r, j) * num_traits::pow(BigInt::from(j), k as usize);
        if (r - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total / factorial(r)
}

fn check_block_count(k: u32, r: u32) -> Result<()> {
    if r < 1 || r > k {
        return Err(Error::BlockCountOutOfRange { k, r });
    }
    Ok(())
}

/// `r! S(k, r)`, the number of surjections from a k-set onto an r-set.
pub fn surjection_count(k: u32, r: u32) -> Result<BigInt> {
    check_block_count(k, r)?;
    Ok(factorial(r) * stirling2(k, r))
}

/// The same count as [`surjection_count`], summed directly as the
/// multinomials of all depth-`r` compositions of `k`.
pub fn surjection_count_by_compositions(k: u32, r: u32) -> Result<BigInt> {
    check_block_count(k, r)?;
    let mut total = BigInt::zero();
    for alpha in compositions(k).filter(|a| a.depth() == r as usize) {
        total += multinomial(k, &alpha)?;
    }
    Ok(total)
}

/// Fubini (ordered Bell) number `sum_{r=1..k} r! S(k, r)`; `fubini(0) = 1`.
pub fn fubini(k: u32) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    (1..=k).map(|r| factorial(r) * stirling2(k, r)).sum()
}

/// Precomputed Stirling and Delannoy tables for callers that verify many
/// identities at once.
#[derive(Debug, Clone)]
pub struct Tables {
    size: usize,
    stirling: Vec<Vec<BigInt>>,
    delannoy: Vec<Vec<BigInt>>,
    factorial: Vec<BigInt>,
}

impl Tables {
    /// Tables covering every argument in `0..=max`.
    pub fn new(max: u32) -> Self {
        let size = max as usize + 1;

        let mut stirling = vec![vec![BigInt::zero(); size]; size];
        stirling[0][0] = BigInt::one();
        for k in 1..size {
            for r in 1..=k {
                stirling[k][r] = &stirling[k - 1][r] * r + &stirling[k - 1][r - 1];
            }
        }

        let mut delannoy = vec![vec![BigInt::one(); size]; size];
        for m in 1..size {
            for n in 1..size {
                delannoy[m][n] =
                    &delannoy[m - 1][n] + &delannoy[m - 1][n - 1] + &delannoy[m][n - 1];
            }
        }

        let mut factorial = vec![BigInt::one(); size];
        for i in 1..size {
            factorial[i] = &factorial[i - 1] * i;
        }

        Self {
            size,
            stirling,
            delannoy,
            factorial,
        }
    }

    pub fn max(&self) -> u32 {
        (self.size - 1) as u32
    }

    pub fn stirling2(&self, k: u32, r: u32) -> &BigInt {
        &self.stirling[k as usize][r as usize]
    }

    pub fn delannoy(&self, m: u32, n: u32) -> &BigInt {
        &self.delannoy[m as usize][n as usize]
    }

    pub fn factorial(&self, n: u32) -> &BigInt {
        &self.factorial[n as usize]
    }

    pub fn fubini(&self, k: u32) -> BigInt {
        if k == 0 {
            return BigInt::one();
        }
        (1..=k)
            .map(|r| self.factorial(r) * self.stirling2(k, r))
            .sum()
    }
}

/// Outcome of comparing two exact sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub equal: bool,
}

impl IdentityCheck {
    fn new(lhs: BigInt, rhs: BigInt) -> Self {
        let equal = lhs == rhs;
        Self { lhs, rhs, equal }
    }
}

/// One `(p, q)` summand of the Delannoy-weighted double sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTerm {
    pub p: u32,
    pub q: u32,
    /// `p! S(ell, p)`
    pub left: BigInt,
    /// `q! S(k - ell, q)`
    pub right: BigInt,
    pub delannoy: BigInt,
    pub product: BigInt,
}

fn check_split(k: u32, ell: u32) -> Result<()> {
    if ell < 1 || ell >= k {
        return Err(Error::SplitOutOfRange { k, ell });
    }
    Ok(())
}

/// Every summand of
/// `sum_{p=1..ell} sum_{q=1..k-ell} S(ell,p) S(k-ell,q) p! q! D(p,q)`.
pub fn split_terms_with(tables: &Tables, k: u32, ell: u32) -> Result<Vec<SplitTerm>> {
    check_split(k, ell)?;
    if k > tables.max() {
        return Err(Error::OutOfRange {
            name: "tables.max",
            value: tables.max().into(),
            min: k.into(),
        });
    }
    let rest = k - ell;
    let mut terms = Vec::with_capacity((ell * rest) as usize);
    for p in 1..=ell {
        let left = tables.factorial(p) * tables.stirling2(ell, p);
        for q in 1..=rest {
            let right = tables.factorial(q) * tables.stirling2(rest, q);
            let delannoy = tables.delannoy(p, q).clone();
            let product = &left * &right * &delannoy;
            terms.push(SplitTerm {
                p,
                q,
                left: left.clone(),
                right,
                delannoy,
                product,
            });
        }
    }
    Ok(terms)
}

pub fn split_terms(k: u32, ell: u32) -> Result<Vec<SplitTerm>> {
    check_split(k, ell)?;
    split_terms_with(&Tables::new(k), k, ell)
}

/// Compares `F(k)` with the Delannoy-weighted double sum split at `ell`.
pub fn verify_theorem3_with(tables: &Tables, k: u32, ell: u32) -> Result<IdentityCheck> {
    let rhs = split_terms_with(tables, k, ell)?
        .into_iter()
        .map(|t| t.product)
        .sum();
    Ok(IdentityCheck::new(tables.fubini(k), rhs))
}

pub fn verify_theorem3(k: u32, ell: u32) -> Result<IdentityCheck> {
    check_split(k, ell)?;
    verify_theorem3_with(&Tables::new(k), k, ell)
}

/// The even split `F(2k) = sum_{p,q<=k} S(k,p) S(k,q) p! q! D(p,q)`.
pub fn verify_corollary(k: u32) -> Result<IdentityCheck> {
    if k == 0 {
        return Err(Error::OutOfRange {
            name: "k",
            value: 0,
            min: 1,
        });
    }
    verify_theorem3(2 * k, k)
}
