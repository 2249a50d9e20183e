//! Sparse coefficient vectors over a fixed basis: the working representation
//! for Hopf-algebra elements. Entries are sorted by basis index and never
//! zero.

use crate::exactmath::CycQ6;

pub type CoeffVec = Vec<(usize, CycQ6)>;

pub fn cv_zero() -> CoeffVec {
    Vec::new()
}

pub fn cv_unit(i: usize) -> CoeffVec {
    vec![(i, CycQ6::one())]
}

pub fn cv_term(i: usize, c: CycQ6) -> CoeffVec {
    if c.is_zero() {
        Vec::new()
    } else {
        vec![(i, c)]
    }
}

pub fn cv_is_zero(v: &CoeffVec) -> bool {
    v.is_empty()
}

/// `a += c * b`, keeping the sortedness/no-zero invariants.
pub fn cv_add_scaled(a: &mut CoeffVec, b: &CoeffVec, c: &CycQ6) {
    if c.is_zero() || b.is_empty() {
        return;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    *a = out;
}

pub fn cv_scale(v: &CoeffVec, c: &CycQ6) -> CoeffVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn cv_neg(v: &CoeffVec) -> CoeffVec {
    v.iter().map(|(i, x)| (*i, -x)).collect()
}

pub fn cv_sub(a: &CoeffVec, b: &CoeffVec) -> CoeffVec {
    let mut out = a.clone();
    cv_add_scaled(&mut out, b, &-CycQ6::one());
    out
}

pub fn cv_get(v: &CoeffVec, i: usize) -> CycQ6 {
    match v.binary_search_by_key(&i, |(k, _)| *k) {
        Ok(p) => v[p].1.clone(),
        Err(_) => CycQ6::zero(),
    }
}

/// Dense-to-sparse conversion.
pub fn cv_from_dense(dense: &[CycQ6]) -> CoeffVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn cv_to_dense(v: &CoeffVec, dim: usize) -> Vec<CycQ6> {
    let mut out = vec![CycQ6::zero(); dim];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Sparse tensors over basis pairs, used for coproduct values.
pub type PairVec = Vec<(usize, usize, CycQ6)>;

pub fn pv_add_scaled(a: &mut PairVec, b: &PairVec, c: &CycQ6) {
    if c.is_zero() {
        return;
    }
    for (i, j, x) in b {
        pv_add_term(a, *i, *j, &(x * c));
    }
}

pub fn pv_add_term(a: &mut PairVec, i: usize, j: usize, c: &CycQ6) {
    if c.is_zero() {
        return;
    }
    match a.binary_search_by_key(&(i, j), |(p, q, _)| (*p, *q)) {
        Ok(pos) => {
            a[pos].2 += c;
            if a[pos].2.is_zero() {
                a.remove(pos);
            }
        }
        Err(pos) => a.insert(pos, (i, j, c.clone())),
    }
}

pub fn pv_is_zero(a: &PairVec) -> bool {
    a.is_empty()
}
