//! Noncommutative polynomials over Q(xi) and degree-lexicographic rewriting:
//! Diamond-Lemma completion up to a degree cap, quotient-basis enumeration
//! and structure-constant extraction.
//!
//! Words are compared by total letter weight first (all weights default to 1,
//! which is plain deglex), then lexicographically under the declared letter
//! precedence. Per-letter weights are what let the inhomogeneous relations of
//! the double and of the liftings point at their PBW leading words.

mod pres;
mod rewrite;

pub use pres::{parse_poly, parse_presentation, render_presentation, Presentation};
pub use rewrite::{MulTable, QuotientBasis, RewriteSystem, Rule};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exactmath::CycQ6;

/// A word in the free monoid, as letter indices into an [`Alphabet`].
pub type Word = Vec<u8>;

/// An ordered alphabet. Letters are listed in ascending precedence
/// (`names[0]` is the smallest letter) and carry positive weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    weights: Vec<u64>,
}

impl Alphabet {
    /// Alphabet with unit weights (plain deglex).
    pub fn new(names: &[&str]) -> Self {
        Alphabet {
            names: names.iter().map(|s| s.to_string()).collect(),
            weights: vec![1; names.len()],
        }
    }

    /// Alphabet with explicit per-letter weights (all must be positive).
    pub fn with_weights(names: &[&str], weights: &[u64]) -> Self {
        assert_eq!(names.len(), weights.len());
        assert!(weights.iter().all(|&w| w > 0), "letter weights must be positive");
        Alphabet {
            names: names.iter().map(|s| s.to_string()).collect(),
            weights: weights.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letter(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|i| i as u8)
    }

    pub fn name(&self, letter: u8) -> &str {
        &self.names[letter as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn word_weight(&self, w: &[u8]) -> u64 {
        w.iter().map(|&l| self.weights[l as usize]).sum()
    }

    /// Weighted deglex: total weight first, then left-to-right comparison of
    /// letter precedences. Words of equal weight are never proper prefixes of
    /// one another, so this is a total monoid order with DCC.
    pub fn cmp_words(&self, a: &[u8], b: &[u8]) -> Ordering {
        match self.word_weight(a).cmp(&self.word_weight(b)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (x, y) in a.iter().zip(b.iter()) {
            match x.cmp(y) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        a.len().cmp(&b.len())
    }

    pub fn render_word(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < w.len() {
            let mut run = 1;
            while i + run < w.len() && w[i + run] == w[i] {
                run += 1;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(self.name(w[i]));
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

/// A noncommutative polynomial: finitely many words with nonzero Q(xi)
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    pub terms: BTreeMap<Word, CycQ6>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new())
    }

    pub fn monomial(word: Word) -> Self {
        Self::term(word, CycQ6::one())
    }

    pub fn term(word: Word, coeff: CycQ6) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum word length among the terms (0 for constants and for zero).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, word: Word, coeff: &CycQ6) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &NCPoly, coeff: &CycQ6) {
        if coeff.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c * coeff));
        }
    }

    pub fn scale(&self, coeff: &CycQ6) -> NCPoly {
        let mut out = NCPoly::zero();
        out.add_assign_scaled(self, coeff);
        out
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &CycQ6::one());
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &(-CycQ6::one()));
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&(-CycQ6::one()))
    }

    /// Free-algebra product (concatenation of words).
    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, &(a * b));
            }
        }
        out
    }

    /// Leading term under the alphabet's order.
    pub fn leading<'a>(&'a self, alph: &Alphabet) -> Option<(&'a Word, &'a CycQ6)> {
        self.terms
            .iter()
            .max_by(|(u, _), (v, _)| alph.cmp_words(u, v))
    }

    pub fn render(&self, alph: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut words: Vec<&Word> = self.terms.keys().collect();
        words.sort_by(|a, b| alph.cmp_words(b, a));
        let mut out = String::new();
        for w in words {
            let c = &self.terms[w];
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("({}) {}", c.render(), alph.render_word(w)));
        }
        out
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({})*{:?}", c.render(), w))
            .collect();
        write!(f, "NCPoly[{}]", parts.join(" + "))
    }
}

/// Convenience: build a word from letter names, panicking on unknown letters.
pub fn word(alph: &Alphabet, names: &[&str]) -> Word {
    names
        .iter()
        .map(|n| alph.letter(n).unwrap_or_else(|| panic!("unknown letter `{n}`")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_deglex_orders_expected_pairs() {
        // The lifting order: y < z < x < b < a with y heavy and z = xy + 1.
        let alph = Alphabet::with_weights(&["y", "z", "x", "b", "a"], &[6, 7, 1, 1, 1]);
        let w = |s: &[&str]| word(&alph, s);
        // xy > z (tie on weight 7, x > z by precedence)
        assert_eq!(alph.cmp_words(&w(&["x", "y"]), &w(&["z"])), Ordering::Greater);
        // xz > y x^2 (tie on weight 8, x > y)
        assert_eq!(
            alph.cmp_words(&w(&["x", "z"]), &w(&["y", "x", "x"])),
            Ordering::Greater
        );
        // zy > y^2 x (tie on weight 13, z > y)
        assert_eq!(
            alph.cmp_words(&w(&["z", "y"]), &w(&["y", "y", "x"])),
            Ordering::Greater
        );
        // zy > b a^5 (weight 13 vs 6)
        assert_eq!(
            alph.cmp_words(&w(&["z", "y"]), &w(&["b", "a", "a", "a", "a", "a"])),
            Ordering::Greater
        );
        // y^3 > a^3 (weight 18 vs 3)
        assert_eq!(
            alph.cmp_words(&w(&["y", "y", "y"]), &w(&["a", "a", "a"])),
            Ordering::Greater
        );
    }

    #[test]
    fn poly_arithmetic_cancels() {
        let alph = Alphabet::new(&["a", "b"]);
        let ab = NCPoly::monomial(word(&alph, &["a", "b"]));
        let p = ab.add(&ab.neg());
        assert!(p.is_zero());
        let q = ab.mul(&ab);
        assert_eq!(q.degree(), 4);
    }
}
