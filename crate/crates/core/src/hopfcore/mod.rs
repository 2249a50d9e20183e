//! Finite-dimensional bialgebras and Hopf algebras by structure constants,
//! exhaustive axiom verification, and the builders for the 12-dimensional
//! Hopf algebra C, its dual model A1, and the Drinfeld double D.
//!
//! Multiplication is stored densely (a table of sparse coefficient vectors),
//! comultiplication sparsely as basis-pair triples; coproducts of monomial
//! bases only have a few terms.

mod analysis;
mod builders;
mod double;
mod elem;
mod presented;

pub use analysis::{dual_hopf, grouplike_count, grouplikes, integrals, skew_primitives, verify_morphism};
pub use builders::{build_a1, build_c, build_z6, c_presentation, a1_presentation, double_presentation};
pub use double::{build_double, build_double_formula, double_agreement};
pub use elem::{
    cv_add_scaled, cv_from_dense, cv_get, cv_is_zero, cv_neg, cv_scale, cv_sub, cv_term, cv_to_dense,
    cv_unit, cv_zero, pv_add_scaled, pv_add_term, pv_is_zero, CoeffVec, PairVec,
};
pub use presented::PresentedHopf;

use serde::Serialize;

use crate::exactmath::CycQ6;
use crate::report::VerifyReport;

/// A finite-dimensional (bi/Hopf) algebra by structure constants.
#[derive(Clone, Serialize)]
pub struct FDHopf {
    pub dim: usize,
    pub labels: Vec<String>,
    /// `mult[i][j]` = coordinates of `e_i * e_j`.
    pub mult: Vec<Vec<CoeffVec>>,
    pub unit: CoeffVec,
    /// `comult[i]` = coproduct of `e_i` as (left, right, coeff) triples.
    pub comult: Vec<PairVec>,
    pub counit: Vec<CycQ6>,
    /// Antipode as images of basis elements, when available.
    pub antipode: Option<Vec<CoeffVec>>,
}

/// How much of the axiom suite to brute-force.
///
/// `Exhaustive` checks associativity on all basis triples and the bialgebra
/// compatibility on all basis pairs. `Generated` checks both on all tuples
/// whose first factor is one of the listed algebra generators, together with
/// the factorization property that every basis element is generator * basis
/// element; a short induction then covers all tuples, so the verdict is still
/// a complete proof. Use it for the 216- and 432-dimensional objects.
#[derive(Clone, Debug)]
pub enum VerifyLevel {
    Exhaustive,
    Generated(Vec<usize>),
}

impl FDHopf {
    pub fn mul(&self, x: &CoeffVec, y: &CoeffVec) -> CoeffVec {
        let mut out = cv_zero();
        for (i, a) in x {
            for (j, b) in y {
                cv_add_scaled(&mut out, &self.mult[*i][*j], &(a * b));
            }
        }
        out
    }

    pub fn comult_elem(&self, x: &CoeffVec) -> PairVec {
        let mut out = Vec::new();
        for (i, a) in x {
            pv_add_scaled(&mut out, &self.comult[*i], a);
        }
        out
    }

    pub fn counit_elem(&self, x: &CoeffVec) -> CycQ6 {
        let mut out = CycQ6::zero();
        for (i, a) in x {
            out += &(&self.counit[*i] * a);
        }
        out
    }

    pub fn antipode_elem(&self, x: &CoeffVec) -> Option<CoeffVec> {
        let s = self.antipode.as_ref()?;
        let mut out = cv_zero();
        for (i, a) in x {
            cv_add_scaled(&mut out, &s[*i], a);
        }
        Some(out)
    }

    /// Product in H (x) H of two sparse tensors.
    pub fn pair_mul(&self, x: &PairVec, y: &PairVec) -> PairVec {
        let mut out = Vec::new();
        for (i1, j1, c1) in x {
            for (i2, j2, c2) in y {
                let left = &self.mult[*i1][*i2];
                let right = &self.mult[*j1][*j2];
                let c = c1 * c2;
                for (u, cu) in left {
                    for (v, cv) in right {
                        pv_add_term(&mut out, *u, *v, &(&c * &(cu * cv)));
                    }
                }
            }
        }
        out
    }

    pub fn label_of(&self, v: &CoeffVec) -> String {
        if v.is_empty() {
            return "0".into();
        }
        v.iter()
            .map(|(i, c)| format!("({}) {}", c.render(), self.labels[*i]))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Run the axiom suite; every failure carries its first counterexample.
    pub fn verify(&self, level: &VerifyLevel) -> VerifyReport {
        let mut rep = VerifyReport::default();
        self.check_unit(&mut rep);
        self.check_assoc(&mut rep, level);
        self.check_counit(&mut rep);
        self.check_coassoc(&mut rep);
        self.check_bialgebra(&mut rep, level);
        match &self.antipode {
            Some(_) => self.check_antipode(&mut rep),
            None => rep.push("antipode", true, "skipped: no antipode supplied"),
        }
        rep
    }

    fn check_unit(&self, rep: &mut VerifyReport) {
        for i in 0..self.dim {
            let e = cv_unit(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                rep.push("unit", false, format!("unit law fails at {}", self.labels[i]));
                return;
            }
        }
        rep.push("unit", true, "");
    }

    fn generator_factorizations(&self, gens: &[usize]) -> Option<Vec<Option<(usize, usize)>>> {
        // fact[i] = Some((g, j)) with e_g * e_j == e_i; unit is exempt.
        let unit_idx = if self.unit.len() == 1 && self.unit[0].1.is_one() {
            self.unit[0].0
        } else {
            return None;
        };
        let mut fact: Vec<Option<(usize, usize)>> = vec![None; self.dim];
        fact[unit_idx] = Some((unit_idx, unit_idx));
        for &g in gens {
            for j in 0..self.dim {
                let p = &self.mult[g][j];
                if p.len() == 1 && p[0].1.is_one() {
                    let i = p[0].0;
                    if fact[i].is_none() && i != unit_idx {
                        fact[i] = Some((g, j));
                    }
                }
            }
        }
        if fact.iter().all(Option::is_some) {
            Some(fact)
        } else {
            None
        }
    }

    fn check_assoc(&self, rep: &mut VerifyReport, level: &VerifyLevel) {
        let firsts: Vec<usize> = match level {
            VerifyLevel::Exhaustive => (0..self.dim).collect(),
            VerifyLevel::Generated(gens) => {
                match self.generator_factorizations(gens) {
                    Some(_) => {}
                    None => {
                        rep.push(
                            "associativity",
                            false,
                            "a basis element does not factor as generator * basis element",
                        );
                        return;
                    }
                }
                gens.clone()
            }
        };
        for &i in &firsts {
            for j in 0..self.dim {
                let ij = self.mult[i][j].clone();
                for k in 0..self.dim {
                    let lhs = self.mul(&ij, &cv_unit(k));
                    let rhs = self.mul(&cv_unit(i), &self.mult[j][k]);
                    if lhs != rhs {
                        rep.push(
                            "associativity",
                            false,
                            format!(
                                "({},{},{}) = ({},{},{})",
                                i, j, k, self.labels[i], self.labels[j], self.labels[k]
                            ),
                        );
                        return;
                    }
                }
            }
        }
        rep.push("associativity", true, "");
    }

    fn check_counit(&self, rep: &mut VerifyReport) {
        for i in 0..self.dim {
            let mut left = cv_zero();
            let mut right = cv_zero();
            for (u, v, c) in &self.comult[i] {
                cv_add_scaled(&mut left, &cv_unit(*v), &(&self.counit[*u] * c));
                cv_add_scaled(&mut right, &cv_unit(*u), &(&self.counit[*v] * c));
            }
            let e = cv_unit(i);
            if left != e || right != e {
                rep.push("counit", false, format!("counit law fails at {}", self.labels[i]));
                return;
            }
        }
        rep.push("counit", true, "");
    }

    fn check_coassoc(&self, rep: &mut VerifyReport) {
        for i in 0..self.dim {
            // triples (u, v, w): (Delta (x) id) Delta vs (id (x) Delta) Delta
            let mut lhs: Vec<(usize, usize, usize, CycQ6)> = Vec::new();
            let mut rhs: Vec<(usize, usize, usize, CycQ6)> = Vec::new();
            for (u, v, c) in &self.comult[i] {
                for (p, q, d) in &self.comult[*u] {
                    add_triple(&mut lhs, *p, *q, *v, &(c * d));
                }
                for (p, q, d) in &self.comult[*v] {
                    add_triple(&mut rhs, *u, *p, *q, &(c * d));
                }
            }
            lhs.sort_by_key(|(a, b, c, _)| (*a, *b, *c));
            rhs.sort_by_key(|(a, b, c, _)| (*a, *b, *c));
            if lhs != rhs {
                rep.push(
                    "coassociativity",
                    false,
                    format!("fails at {}", self.labels[i]),
                );
                return;
            }
        }
        rep.push("coassociativity", true, "");
    }

    fn check_bialgebra(&self, rep: &mut VerifyReport, level: &VerifyLevel) {
        let unit_pair = {
            let mut p = Vec::new();
            for (i, a) in &self.unit {
                for (j, b) in &self.unit {
                    pv_add_term(&mut p, *i, *j, &(a * b));
                }
            }
            p
        };
        if self.comult_elem(&self.unit) != unit_pair {
            rep.push("bialgebra", false, "Delta(1) != 1 (x) 1");
            return;
        }
        let firsts: Vec<usize> = match level {
            VerifyLevel::Exhaustive => (0..self.dim).collect(),
            VerifyLevel::Generated(gens) => {
                if self.generator_factorizations(gens).is_none() {
                    rep.push(
                        "bialgebra",
                        false,
                        "a basis element does not factor as generator * basis element",
                    );
                    return;
                }
                gens.clone()
            }
        };
        for &i in &firsts {
            let di = &self.comult[i];
            for j in 0..self.dim {
                let prod = &self.mult[i][j];
                let lhs = self.comult_elem(prod);
                let rhs = self.pair_mul(di, &self.comult[j]);
                if lhs != rhs {
                    rep.push(
                        "bialgebra",
                        false,
                        format!("Delta(m) != Delta*Delta at ({}, {})", self.labels[i], self.labels[j]),
                    );
                    return;
                }
                let eps = self.counit_elem(prod);
                if eps != &self.counit[i] * &self.counit[j] {
                    rep.push(
                        "bialgebra",
                        false,
                        format!("eps(m) != eps*eps at ({}, {})", self.labels[i], self.labels[j]),
                    );
                    return;
                }
            }
        }
        rep.push("bialgebra", true, "");
    }

    fn check_antipode(&self, rep: &mut VerifyReport) {
        for i in 0..self.dim {
            let mut left = cv_zero();
            let mut right = cv_zero();
            for (u, v, c) in &self.comult[i] {
                let su = self.antipode_elem(&cv_unit(*u)).unwrap();
                let sv = self.antipode_elem(&cv_unit(*v)).unwrap();
                cv_add_scaled(&mut left, &self.mul(&su, &cv_unit(*v)), c);
                cv_add_scaled(&mut right, &self.mul(&cv_unit(*u), &sv), c);
            }
            let target = cv_scale(&self.unit, &self.counit[i]);
            if left != target || right != target {
                rep.push(
                    "antipode",
                    false,
                    format!("S-axiom fails at {}", self.labels[i]),
                );
                return;
            }
        }
        rep.push("antipode", true, "");
    }
}

fn add_triple(acc: &mut Vec<(usize, usize, usize, CycQ6)>, a: usize, b: usize, c: usize, v: &CycQ6) {
    if v.is_zero() {
        return;
    }
    match acc.iter_mut().find(|(x, y, z, _)| (*x, *y, *z) == (a, b, c)) {
        Some(entry) => {
            entry.3 += v;
            if entry.3.is_zero() {
                acc.retain(|(x, y, z, _)| (*x, *y, *z) != (a, b, c));
            }
        }
        None => acc.push((a, b, c, v.clone())),
    }
}
