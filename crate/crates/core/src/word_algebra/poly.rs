use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Word;
use crate::error::{Error, Result};

/// A finite `Q`-linear combination of words.
///
/// Terms are kept in canonical word order and no stored coefficient is ever
/// zero, so structural equality is term-by-term coefficient equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<TermRecord>", try_from = "Vec<TermRecord>")]
pub struct WordPoly {
    terms: BTreeMap<Word, BigRational>,
}

impl WordPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 * (empty word)`.
    pub fn unit() -> Self {
        Self::from_word(Word::unit())
    }

    pub fn from_word(word: Word) -> Self {
        Self::term(word, BigRational::one())
    }

    pub fn term(word: Word, coeff: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coeff);
        p
    }

    /// Adds `coeff * word`, dropping the term if the coefficient cancels.
    pub fn add_term(&mut self, word: Word, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, word: &Word) -> Option<&BigRational> {
        self.terms.get(word)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    /// Sum of all coefficients, i.e. the number of words counted with
    /// multiplicity (and sign).
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Coefficient sums grouped by word depth.
    pub fn depth_layer_sums(&self) -> BTreeMap<usize, BigRational> {
        let mut layers: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (w, c) in &self.terms {
            *layers.entry(w.depth()).or_insert_with(BigRational::zero) += c;
        }
        layers
    }

    /// The common weight of all terms, or `None` if the polynomial is zero or
    /// mixes weights.
    pub fn homogeneous_weight(&self) -> Option<u64> {
        let mut weights = self.terms.keys().map(Word::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Serializable form: one record per term, canonical order.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(w, c)| TermRecord {
                word: w.subscripts().to_vec(),
                coeff: CoeffRecord {
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                },
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self> {
        let mut poly = Self::zero();
        for rec in records {
            let word = Word::new(rec.word.clone())?;
            poly.add_term(word, rec.coeff.to_rational()?);
        }
        Ok(poly)
    }
}

impl FromIterator<(Word, BigRational)> for WordPoly {
    fn from_iter<I: IntoIterator<Item = (Word, BigRational)>>(iter: I) -> Self {
        let mut poly = Self::zero();
        for (w, c) in iter {
            poly.add_term(w, c);
        }
        poly
    }
}

impl From<Word> for WordPoly {
    fn from(w: Word) -> Self {
        Self::from_word(w)
    }
}

impl Add for &WordPoly {
    type Output = WordPoly;

    fn add(self, rhs: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WordPoly {
    type Output = WordPoly;

    fn sub(self, rhs: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &WordPoly {
    type Output = WordPoly;

    fn neg(self) -> WordPoly {
        WordPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Text form `2*z2 z2 + 1*z4`; negative terms are joined with ` - `.
impl fmt::Display for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{magnitude}*{w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub word: Vec<u32>,
    pub coeff: CoeffRecord,
}

/// Exact rational coefficient; `den` is always positive and the fraction is
/// in lowest terms when produced by [`WordPoly::to_records`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub num: String,
    pub den: String,
}

impl CoeffRecord {
    pub fn to_rational(&self) -> Result<BigRational> {
        let parse = |field: &str, s: &str| {
            s.parse::<BigInt>().map_err(|e| Error::Parse {
                input: s.to_owned(),
                reason: format!("{field}: {e}"),
            })
        };
        let num = parse("num", &self.num)?;
        let den = parse("den", &self.den)?;
        if !den.is_positive() {
            return Err(Error::Parse {
                input: self.den.clone(),
                reason: "den must be a positive integer".into(),
            });
        }
        Ok(BigRational::new(num, den))
    }
}

impl From<WordPoly> for Vec<TermRecord> {
    fn from(p: WordPoly) -> Self {
        p.to_records()
    }
}

impl TryFrom<Vec<TermRecord>> for WordPoly {
    type Error = Error;

    fn try_from(records: Vec<TermRecord>) -> Result<Self> {
        WordPoly::from_records(&records)
    }
}
