use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered tuple of positive integers.
///
/// The same type serves as an argument list for a nested sum and as an
/// exponent pattern in a multinomial expansion. The empty composition is
/// allowed and has weight 0 and depth 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(position) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { position });
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Caller guarantees every part is nonzero.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn last(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Multiplies every part by `n`, giving `(n*a_1, ..., n*a_r)`.
    pub fn scaled(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                name: "n",
                value: 0,
                min: 1,
            });
        }
        Ok(Self {
            parts: self.parts.iter().map(|&p| p * n).collect(),
        })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Parses a comma-separated list of positive integers such as `"2,3"`.
/// Whitespace around the separators is ignored.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse {
                input: s.to_owned(),
                reason: "empty list".into(),
            });
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>().map_err(|e| Error::Parse {
                    input: s.to_owned(),
                    reason: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts).map_err(|e| Error::Parse {
            input: s.to_owned(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// Iterator over the compositions of a fixed total, in lexicographic order
/// of their parts: `(1,1,1), (1,2), (2,1), (3)` for a total of 3.
///
/// Produced by [`compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u32>>,
}

/// Enumerates all `2^(k-1)` compositions of `k`. For `k = 0` the single
/// empty composition is produced.
pub fn compositions(k: u32) -> Compositions {
    Compositions {
        current: Some(vec![1; k as usize]),
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.current.take()?;
        // Lexicographic successor: drop the last part, bump the one before it,
        // and refill the remainder with ones.
        if current.len() >= 2 {
            let mut succ = current.clone();
            let last = succ.pop().unwrap_or_default();
            if let Some(prev) = succ.last_mut() {
                *prev += 1;
            }
            succ.extend(std::iter::repeat_n(1, (last - 1) as usize));
            self.current = Some(succ);
        }
        Some(Composition::from_parts_unchecked(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts_of(k: u32) -> Vec<Vec<u32>> {
        compositions(k).map(Composition::into_parts).collect()
    }

    #[test]
    fn compositions_of_small_totals() {
        assert_eq!(parts_of(1), vec![vec![1]]);
        assert_eq!(
            parts_of(3),
            vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]
        );
        assert_eq!(parts_of(0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn compositions_count_and_order() {
        for k in 1..=12u32 {
            let all = parts_of(k);
            assert_eq!(all.len(), 1usize << (k - 1));
            assert!(all.windows(2).all(|w| w[0] < w[1]), "k = {k} not sorted");
            assert!(all.iter().all(|c| c.iter().sum::<u32>() == k));
        }
        assert_eq!(compositions(10).count(), 512);
    }

    #[test]
    fn parse_accepts_whitespace_and_rejects_zero() {
        let c: Composition = " 2, 3 ".parse().unwrap();
        assert_eq!(c.parts(), &[2, 3]);
        assert!("2,0".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert!("2,x".parse::<Composition>().is_err());
        assert!("-1".parse::<Composition>().is_err());
    }

    #[test]
    fn weight_depth_and_scaling() {
        let c = Composition::new(vec![1, 2, 4]).unwrap();
        assert_eq!(c.weight(), 7);
        assert_eq!(c.depth(), 3);
        assert_eq!(c.scaled(3).unwrap().parts(), &[3, 6, 12]);
        assert!(c.scaled(0).is_err());
        assert!(Composition::new(vec![0]).is_err());
        assert_eq!(Composition::empty().weight(), 0);
    }
}
