use std::cmp::Ordering;
use std::fmt;

use super::Composition;
use crate::error::Result;

/// A monomial `z_{s_1} z_{s_2} ... z_{s_r}` in the algebra generated by the
/// letters `z_s`, stored as the composition of its subscripts.
///
/// Words are totally ordered by weight first and then lexicographically by
/// subscripts. This is the canonical order used when iterating or rendering
/// a [`WordPoly`](super::WordPoly).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Composition);

impl Word {
    pub fn new(subscripts: Vec<u32>) -> Result<Self> {
        Composition::new(subscripts).map(Word)
    }

    /// The empty word, the unit of both products.
    pub fn unit() -> Self {
        Word(Composition::empty())
    }

    /// The single-letter word `z_s`. Panics if `s == 0`.
    pub fn letter(s: u32) -> Self {
        assert!(s > 0, "letter subscripts start at 1");
        Word(Composition::from_parts_unchecked(vec![s]))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        Word(Composition::from_parts_unchecked(parts))
    }

    pub fn subscripts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.weight()
    }

    pub fn depth(&self) -> usize {
        self.0.depth()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// The nested series attached to this word converges iff the word is
    /// empty or its last subscript is at least 2. The algebra itself never
    /// requires admissibility; only the numeric evaluators do.
    pub fn is_admissible(&self) -> bool {
        self.0.last().is_none_or(|s| s >= 2)
    }
}

impl From<Composition> for Word {
    fn from(c: Composition) -> Self {
        Word(c)
    }
}

impl From<Word> for Composition {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.subscripts().cmp(other.subscripts()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders `z2 z3`; the empty word renders as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (i, s) in self.subscripts().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "z{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(parts: &[u32]) -> Word {
        Word::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_order_is_weight_then_lex() {
        let mut words = vec![w(&[6]), w(&[4, 2]), w(&[2, 2, 2]), w(&[2, 4]), w(&[3])];
        words.sort();
        assert_eq!(
            words,
            vec![w(&[3]), w(&[2, 2, 2]), w(&[2, 4]), w(&[4, 2]), w(&[6])]
        );
        assert!(Word::unit() < w(&[1]));
    }

    #[test]
    fn admissibility_uses_last_subscript() {
        assert!(Word::unit().is_admissible());
        assert!(w(&[1, 2]).is_admissible());
        assert!(!w(&[2, 1]).is_admissible());
        assert!(!w(&[1]).is_admissible());
    }

    #[test]
    fn display() {
        assert_eq!(w(&[2, 3]).to_string(), "z2 z3");
        assert_eq!(Word::unit().to_string(), "1");
    }
}
