//! Structural analysis of a finite-dimensional Hopf algebra: skew-primitive
//! spaces, grouplikes (with an exact count certificate over the algebraic
//! closure), integrals and unimodularity, duals, and morphism verification.

use std::collections::HashMap;

use super::elem::{cv_add_scaled, cv_from_dense, cv_get, cv_unit, cv_zero, CoeffVec};
use super::FDHopf;
use crate::exactmath::{CycQ6, Mat};
use crate::report::VerifyReport;
use crate::Error;

/// Basis of P_{g,h}(H) = { x : Delta(x) = x (x) g + h (x) x } for grouplike
/// basis elements g, h. The trivial skew-primitive g - h is included.
pub fn skew_primitives(h: &FDHopf, g: usize, hh: usize) -> Result<Vec<CoeffVec>, Error> {
    for idx in [g, hh] {
        if h.comult[idx] != vec![(idx, idx, CycQ6::one())] {
            return Err(Error::NotGrouplike(idx));
        }
    }
    // Rows indexed by the (u, v) pairs that appear in any constraint.
    let mut rows: HashMap<(usize, usize), Vec<(usize, CycQ6)>> = HashMap::new();
    let mut push = |u: usize, v: usize, col: usize, c: CycQ6| {
        if !c.is_zero() {
            rows.entry((u, v)).or_default().push((col, c));
        }
    };
    for i in 0..h.dim {
        for (u, v, c) in &h.comult[i] {
            push(*u, *v, i, c.clone());
        }
        push(i, g, i, -CycQ6::one());
        push(hh, i, i, -CycQ6::one());
    }
    let mut keys: Vec<(usize, usize)> = rows.keys().copied().collect();
    keys.sort();
    let mat = Mat::from_fn(keys.len(), h.dim, |r, c| {
        rows[&keys[r]]
            .iter()
            .filter(|(col, _)| *col == c)
            .fold(CycQ6::zero(), |acc, (_, v)| acc + v)
    });
    let (_, kernel) = mat.rank_kernel();
    Ok(kernel.into_iter().map(|v| cv_from_dense(&v)).collect())
}

/// Incremental row space in reduced echelon form.
struct RowSpace {
    dim: usize,
    rows: Vec<Vec<CycQ6>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    fn new(dim: usize) -> Self {
        RowSpace {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span (in place) and return it.
    fn reduce(&self, mut v: Vec<CycQ6>) -> Vec<CycQ6> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &(&f * r);
                    }
                }
            }
        }
        v
    }

    /// Insert a vector; returns true if the rank grew.
    fn insert(&mut self, v: Vec<CycQ6>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (row, &q) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &(&f * r);
                    }
                }
                let _ = q;
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// The number of grouplike elements of H over the algebraic closure.
///
/// Grouplikes correspond to characters of the dual algebra H*, and in
/// characteristic zero their number equals the dimension of the semisimple
/// quotient of the abelianization of H*, which is the rank of its trace form.
pub fn grouplike_count(h: &FDHopf) -> usize {
    let dim = h.dim;
    // Dual multiplication: m*[i][j] = sum_k Delta(e_k)_{(i,j)} e^k, sparse.
    let mut dual_mult: HashMap<(usize, usize), CoeffVec> = HashMap::new();
    for k in 0..dim {
        for (u, v, c) in &h.comult[k] {
            let entry = dual_mult.entry((*u, *v)).or_default();
            cv_add_scaled(entry, &cv_unit(k), c);
        }
    }
    let dmul_basis = |i: usize, j: usize| -> CoeffVec {
        dual_mult.get(&(i, j)).cloned().unwrap_or_default()
    };
    let dmul = |x: &CoeffVec, y: &CoeffVec| -> CoeffVec {
        let mut out = cv_zero();
        for (i, a) in x {
            for (j, b) in y {
                cv_add_scaled(&mut out, &dmul_basis(*i, *j), &(a * b));
            }
        }
        out
    };

    // Ideal generated by commutators of H*.
    let mut ideal = RowSpace::new(dim);
    for i in 0..dim {
        for j in 0..i {
            let mut v = dmul_basis(i, j);
            cv_add_scaled(&mut v, &dmul_basis(j, i), &-CycQ6::one());
            if !v.is_empty() {
                ideal.insert(super::elem::cv_to_dense(&v, dim));
            }
        }
    }
    loop {
        let snapshot: Vec<Vec<CycQ6>> = ideal.rows.clone();
        let mut grew = false;
        for row in &snapshot {
            let rv = cv_from_dense(row);
            for l in 0..dim {
                let e = cv_unit(l);
                for prod in [dmul(&rv, &e), dmul(&e, &rv)] {
                    if !prod.is_empty() && ideal.insert(super::elem::cv_to_dense(&prod, dim)) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }

    // Quotient B = H*/ideal on the free (non-pivot) coordinates.
    let mut is_pivot = vec![false; dim];
    for &p in &ideal.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..dim).filter(|i| !is_pivot[*i]).collect();
    let q = free.len();
    if q == 0 {
        return 0;
    }
    let project = |x: &CoeffVec| -> Vec<CycQ6> {
        let reduced = ideal.reduce(super::elem::cv_to_dense(x, dim));
        free.iter().map(|&f| reduced[f].clone()).collect()
    };
    // Quotient products of the free basis elements.
    let mut qmul: Vec<Vec<Vec<CycQ6>>> = vec![vec![Vec::new(); q]; q];
    for (a, &fa) in free.iter().enumerate() {
        for (b, &fb) in free.iter().enumerate() {
            qmul[a][b] = project(&dmul_basis(fa, fb));
        }
    }
    // Left-multiplication trace of an element z (in quotient coordinates).
    let tr_left = |z: &[CycQ6]| -> CycQ6 {
        let mut t = CycQ6::zero();
        for b in 0..q {
            // coefficient of free-basis b in z * e_b
            let mut c = CycQ6::zero();
            for (a, za) in z.iter().enumerate() {
                if !za.is_zero() {
                    c += &(za * &qmul[a][b][b]);
                }
            }
            t += &c;
        }
        t
    };
    let gram = Mat::from_fn(q, q, |a, b| tr_left(&qmul[a][b]));
    gram.rank()
}

/// Grouplikes found among the basis elements, plus the exact count over the
/// algebraic closure. `certified` is true when the two numbers agree, i.e.
/// the basis scan found everything.
pub struct Grouplikes {
    pub found: Vec<usize>,
    pub count: usize,
    pub certified: bool,
}

pub fn grouplikes(h: &FDHopf) -> Grouplikes {
    let found: Vec<usize> = (0..h.dim)
        .filter(|&i| h.comult[i] == vec![(i, i, CycQ6::one())] && h.counit[i].is_one())
        .collect();
    let count = grouplike_count(h);
    let certified = found.len() == count;
    Grouplikes {
        found,
        count,
        certified,
    }
}

/// Left and right integral spaces and the unimodularity verdict.
pub struct Integrals {
    pub left: Vec<CoeffVec>,
    pub right: Vec<CoeffVec>,
    pub unimodular: bool,
}

/// Solve x*t = eps(x) t (left) and t*x = eps(x) t (right). It suffices to
/// impose the constraints for algebra generators when they are known.
pub fn integrals(h: &FDHopf, generators: Option<&[usize]>) -> Integrals {
    let idxs: Vec<usize> = match generators {
        Some(g) => g.to_vec(),
        None => (0..h.dim).collect(),
    };
    let solve = |left: bool| -> Vec<CoeffVec> {
        let mut blocks: Vec<Mat> = Vec::new();
        for &g in &idxs {
            let m = Mat::from_fn(h.dim, h.dim, |i, j| {
                let prod = if left { &h.mult[g][j] } else { &h.mult[j][g] };
                let mut v = cv_get(prod, i);
                if i == j {
                    v -= &h.counit[g];
                }
                v
            });
            blocks.push(m);
        }
        let mut stacked = blocks[0].clone();
        for b in &blocks[1..] {
            stacked = stacked.vstack(b);
        }
        let (_, kernel) = stacked.rank_kernel();
        kernel.iter().map(|v| cv_from_dense(v)).collect()
    };
    let left = solve(true);
    let right = solve(false);
    // Equal spans iff stacking does not increase the rank.
    let span_rank = |vs: &[CoeffVec]| -> Mat {
        Mat::from_fn(vs.len(), h.dim, |r, c| cv_get(&vs[r], c))
    };
    let l = span_rank(&left);
    let r = span_rank(&right);
    let unimodular = if left.len() == right.len() {
        let both = l.vstack(&r);
        both.rank() == l.rank()
    } else {
        false
    };
    Integrals {
        left,
        right,
        unimodular,
    }
}

/// The dual Hopf algebra on the dual basis: multiplication is the transpose
/// of the comultiplication and vice versa.
pub fn dual_hopf(h: &FDHopf) -> FDHopf {
    let dim = h.dim;
    let mut mult = vec![vec![cv_zero(); dim]; dim];
    for k in 0..dim {
        for (u, v, c) in &h.comult[k] {
            cv_add_scaled(&mut mult[*u][*v], &cv_unit(k), c);
        }
    }
    let mut comult = vec![Vec::new(); dim];
    for i in 0..dim {
        for j in 0..dim {
            for (k, c) in &h.mult[i][j] {
                super::elem::pv_add_term(&mut comult[*k], i, j, c);
            }
        }
    }
    let unit = cv_from_dense(&h.counit);
    let counit: Vec<CycQ6> = (0..dim).map(|i| cv_get(&h.unit, i)).collect();
    let antipode = h.antipode.as_ref().map(|s| {
        (0..dim)
            .map(|i| {
                let mut out = cv_zero();
                for (j, col) in s.iter().enumerate() {
                    let c = cv_get(col, i);
                    if !c.is_zero() {
                        out.push((j, c));
                    }
                }
                out.sort_by_key(|(j, _)| *j);
                out
            })
            .collect()
    });
    FDHopf {
        dim,
        labels: h.labels.iter().map(|l| format!("({l})^*")).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    }
}

/// Check that the matrix phi (columns = images of H1's basis) is a bialgebra
/// isomorphism H1 -> H2.
pub fn verify_morphism(phi: &Mat, h1: &FDHopf, h2: &FDHopf) -> VerifyReport {
    let mut rep = VerifyReport::default();
    if phi.rows != h2.dim || phi.cols != h1.dim {
        rep.push("shape", false, "matrix shape does not match the two algebras");
        return rep;
    }
    let apply = |x: &CoeffVec| -> CoeffVec {
        let mut out = cv_zero();
        for (i, c) in x {
            for r in 0..h2.dim {
                let v = &phi[(r, *i)] * c;
                if !v.is_zero() {
                    cv_add_scaled(&mut out, &cv_unit(r), &v);
                }
            }
        }
        out
    };
    // unit and counit
    let unit_ok = apply(&h1.unit) == h2.unit;
    rep.push("unit preserved", unit_ok, "");
    let mut counit_ok = true;
    let mut detail = String::new();
    for i in 0..h1.dim {
        if h2.counit_elem(&apply(&cv_unit(i))) != h1.counit[i] {
            counit_ok = false;
            detail = format!("counit differs at {}", h1.labels[i]);
            break;
        }
    }
    rep.push("counit preserved", counit_ok, detail);
    // algebra map
    let mut alg_ok = true;
    let mut detail = String::new();
    'alg: for i in 0..h1.dim {
        let pi = apply(&cv_unit(i));
        for j in 0..h1.dim {
            let lhs = apply(&h1.mult[i][j]);
            let rhs = h2.mul(&pi, &apply(&cv_unit(j)));
            if lhs != rhs {
                alg_ok = false;
                detail = format!("algebra map fails at ({}, {})", h1.labels[i], h1.labels[j]);
                break 'alg;
            }
        }
    }
    rep.push("algebra map", alg_ok, detail);
    // coalgebra map
    let mut coalg_ok = true;
    let mut detail = String::new();
    for i in 0..h1.dim {
        let mut lhs: Vec<(usize, usize, CycQ6)> = Vec::new();
        for (u, v, c) in &h1.comult[i] {
            for (p, cp) in &apply(&cv_unit(*u)) {
                for (q, cq) in &apply(&cv_unit(*v)) {
                    super::elem::pv_add_term(&mut lhs, *p, *q, &(&(c * cp) * cq));
                }
            }
        }
        let rhs = h2.comult_elem(&apply(&cv_unit(i)));
        let mut rhs = rhs.clone();
        rhs.sort_by_key(|(a, b, _)| (*a, *b));
        lhs.sort_by_key(|(a, b, _)| (*a, *b));
        if lhs != rhs {
            coalg_ok = false;
            detail = format!("coalgebra map fails at {}", h1.labels[i]);
            break;
        }
    }
    rep.push("coalgebra map", coalg_ok, detail);
    rep.push("bijective", phi.inverse().is_some(), "");
    rep
}
