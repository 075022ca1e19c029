//! The algebra `H^1` of words in the letters `z_1, z_2, ...` with rational
//! coefficients, and its two quasi-shuffle products.

mod composition;
mod expansion;
mod poly;
mod product;
mod word;

pub use composition::{compositions, Composition, Compositions};
pub use expansion::{expand_power_closed_form, lemma1_step};
pub use poly::{CoeffRecord, TermRecord, WordPoly};
pub use product::{harmonic_product, poly_product, power, product, star_product, ProductKind};
pub use word::Word;
