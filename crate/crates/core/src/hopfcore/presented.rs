//! Building an [`FDHopf`] from a confluent presentation: the completed
//! rewriting system supplies the multiplication table, and the coalgebra
//! structure is extended multiplicatively from the generators.

use std::collections::HashMap;

use super::elem::{cv_unit, cv_zero, CoeffVec, PairVec};
use super::{pv_add_term, FDHopf};
use crate::exactmath::CycQ6;
use crate::freealg::{parse_poly, NCPoly, Presentation, RewriteSystem, Word};
use crate::Error;

/// Coalgebra data on generators: coproduct legs are free polynomials and are
/// reduced against the completed system at build time.
pub struct GeneratorData {
    /// (letter name, coproduct terms (left, right, coeff))
    pub comult: Vec<(String, Vec<(NCPoly, NCPoly, CycQ6)>)>,
    pub counit: Vec<(String, CycQ6)>,
    /// Antipode on generators; extended anti-multiplicatively when present.
    pub antipode: Option<Vec<(String, NCPoly)>>,
    /// Composite letters expanded before coalgebra extension (the lifting's
    /// auxiliary letter z = xy); pairs of (letter, expansion word).
    pub expand: Vec<(String, Vec<String>)>,
}

/// A Hopf algebra carried together with its presentation data, so callers can
/// address elements by words in the generators.
pub struct PresentedHopf {
    pub hopf: FDHopf,
    pub system: RewriteSystem,
    pub basis: Vec<Word>,
    index: HashMap<Word, usize>,
    /// Basis indices of the single-letter words, for `VerifyLevel::Generated`.
    pub generators: Vec<usize>,
}

impl PresentedHopf {
    pub fn build(pres: &Presentation, cap: usize, gen: &GeneratorData) -> Result<Self, Error> {
        let system = RewriteSystem::complete(&pres.relations, pres.alphabet.clone(), cap)?;
        if !system.completed || !system.all_ambiguities_checked {
            return Err(Error::CapExceeded { cap });
        }
        let qb = system.quotient_basis();
        if !qb.finite {
            return Err(Error::NotFinite(
                "quotient has irreducible words at the cap".into(),
            ));
        }
        let basis = qb.words;
        let index: HashMap<Word, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let mt = system.structure_constants(&basis)?;
        let dim = basis.len();
        let alph = &system.alphabet;

        let coords = |p: &NCPoly| -> Result<CoeffVec, Error> {
            let nf = system.reduce(p)?;
            let mut out = cv_zero();
            for (w, c) in &nf.terms {
                let i = *index
                    .get(w)
                    .ok_or_else(|| Error::Other("non-basis word in normal form".into()))?;
                out.push((i, c.clone()));
            }
            out.sort_by_key(|(i, _)| *i);
            Ok(out)
        };

        // Per-letter expanded spelling (identity except for composite letters).
        let mut expansion: Vec<Vec<u8>> = (0..alph.len()).map(|l| vec![l as u8]).collect();
        for (name, spelled) in &gen.expand {
            let l = alph
                .letter(name)
                .ok_or_else(|| Error::Parse(format!("unknown letter `{name}`")))?;
            expansion[l as usize] = spelled
                .iter()
                .map(|n| {
                    alph.letter(n)
                        .ok_or_else(|| Error::Parse(format!("unknown letter `{n}`")))
                })
                .collect::<Result<_, _>>()?;
        }

        // Reduce the generator coproducts to coordinates.
        let mut gen_comult: Vec<Option<Vec<(CoeffVec, CoeffVec, CycQ6)>>> = vec![None; alph.len()];
        for (name, terms) in &gen.comult {
            let l = alph
                .letter(name)
                .ok_or_else(|| Error::Parse(format!("unknown letter `{name}`")))?;
            let mut reduced = Vec::with_capacity(terms.len());
            for (left, right, c) in terms {
                reduced.push((coords(left)?, coords(right)?, c.clone()));
            }
            gen_comult[l as usize] = Some(reduced);
        }
        let mut gen_counit: Vec<Option<CycQ6>> = vec![None; alph.len()];
        for (name, c) in &gen.counit {
            let l = alph
                .letter(name)
                .ok_or_else(|| Error::Parse(format!("unknown letter `{name}`")))?;
            gen_counit[l as usize] = Some(c.clone());
        }

        let unit = coords(&NCPoly::one())?;
        let unit_idx = unit[0].0;

        let mul_cv = |x: &CoeffVec, y: &CoeffVec| -> CoeffVec {
            let mut out = cv_zero();
            for (i, a) in x {
                for (j, b) in y {
                    super::elem::cv_add_scaled(&mut out, &mt.table[*i][*j], &(a * b));
                }
            }
            out
        };

        // Comultiplication, multiplicatively over the expanded letters.
        let mut comult: Vec<PairVec> = Vec::with_capacity(dim);
        for w in &basis {
            let mut cur: PairVec = vec![(unit_idx, unit_idx, CycQ6::one())];
            for &l in w {
                for &el in &expansion[l as usize] {
                    let dl = gen_comult[el as usize]
                        .as_ref()
                        .ok_or_else(|| Error::Other(format!("no coproduct for letter {el}")))?;
                    let mut next: PairVec = Vec::new();
                    for (i, j, c) in &cur {
                        for (p, q, d) in dl {
                            let left = mul_cv(&cv_unit(*i), p);
                            let right = mul_cv(&cv_unit(*j), q);
                            let cd = c * d;
                            for (u, cu) in &left {
                                for (v, cvv) in &right {
                                    pv_add_term(&mut next, *u, *v, &(&cd * &(cu * cvv)));
                                }
                            }
                        }
                    }
                    cur = next;
                }
            }
            comult.push(cur);
        }

        // Counit, multiplicatively.
        let mut counit = Vec::with_capacity(dim);
        for w in &basis {
            let mut c = CycQ6::one();
            for &l in w {
                for &el in &expansion[l as usize] {
                    let gc = gen_counit[el as usize]
                        .as_ref()
                        .ok_or_else(|| Error::Other(format!("no counit for letter {el}")))?;
                    c = &c * gc;
                }
            }
            counit.push(c);
        }

        // Antipode, anti-multiplicatively.
        let antipode = match &gen.antipode {
            None => None,
            Some(list) => {
                let mut gen_s: Vec<Option<CoeffVec>> = vec![None; alph.len()];
                for (name, p) in list {
                    let l = alph
                        .letter(name)
                        .ok_or_else(|| Error::Parse(format!("unknown letter `{name}`")))?;
                    gen_s[l as usize] = Some(coords(p)?);
                }
                let mut s_table = Vec::with_capacity(dim);
                for w in &basis {
                    let mut spelled: Vec<u8> = Vec::new();
                    for &l in w {
                        spelled.extend_from_slice(&expansion[l as usize]);
                    }
                    let mut acc = cv_unit(unit_idx);
                    for &el in spelled.iter().rev() {
                        let sl = gen_s[el as usize]
                            .as_ref()
                            .ok_or_else(|| Error::Other(format!("no antipode for letter {el}")))?;
                        acc = mul_cv(&acc, sl);
                    }
                    s_table.push(acc);
                }
                Some(s_table)
            }
        };

        let labels: Vec<String> = basis.iter().map(|w| alph.render_word(w)).collect();
        let generators: Vec<usize> = (0..alph.len())
            .filter_map(|l| index.get(&vec![l as u8]).copied())
            .collect();

        let hopf = FDHopf {
            dim,
            labels,
            mult: mt.table,
            unit,
            comult,
            counit,
            antipode,
        };
        Ok(PresentedHopf {
            hopf,
            system,
            basis,
            index,
            generators,
        })
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of a free polynomial after reduction.
    pub fn coords(&self, p: &NCPoly) -> Result<CoeffVec, Error> {
        let nf = self.system.reduce(p)?;
        let mut out = cv_zero();
        for (w, c) in &nf.terms {
            let i = *self
                .index
                .get(w)
                .ok_or_else(|| Error::Other("non-basis word in normal form".into()))?;
            out.push((i, c.clone()));
        }
        out.sort_by_key(|(i, _)| *i);
        Ok(out)
    }

    /// Coordinates of an element written in the presentation syntax,
    /// e.g. `"b a^2"` or `"(xi) a + 1"`.
    pub fn element(&self, expr: &str) -> Result<CoeffVec, Error> {
        let p = parse_poly(expr, &self.system.alphabet)?;
        self.coords(&p)
    }
}
