//! Dense exact linear algebra over Q(xi): rank, kernel, solve, Kronecker
//! products. Plain Gaussian elimination with rational normalization; the
//! matrices this artifact produces stay below ~2100 x 2100.
//!
//! Tensor-basis convention, used uniformly everywhere: `e_i (x) e_j` maps to
//! index `i*dim_second + j`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::cyc::CycQ6;

/// Dense matrix over Q(xi), row major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CycQ6>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![CycQ6::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CycQ6::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycQ6) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Row-major construction from a flat list of entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<CycQ6>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Mat {
            rows,
            cols,
            data: entries,
        }
    }

    pub fn diag(entries: &[CycQ6]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycQ6::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &CycQ6) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> CycQ6 {
        assert_eq!(self.rows, self.cols);
        let mut t = CycQ6::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    pub fn pow(&self, e: u32) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product in the fixed basis order `e_i (x) e_j -> i*dimB + j`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(i * other.rows + k, j * other.cols + l)] = a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycQ6]) -> Vec<CycQ6> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = CycQ6::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns (rref rows, pivot column indices).
    fn rref(&self) -> (Vec<Vec<CycQ6>>, Vec<usize>) {
        let mut rows: Vec<Vec<CycQ6>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            // Prefer a pivot with small coordinates to limit coefficient growth.
            let mut best: Option<(usize, u64)> = None;
            for (i, row) in rows.iter().enumerate().skip(r) {
                if !row[c].is_zero() {
                    let sz = entry_size(&row[c]);
                    if best.map_or(true, |(_, s)| sz < s) {
                        best = Some((i, sz));
                    }
                }
            }
            let Some((p, _)) = best else { continue };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                        if !p.is_zero() {
                            *x -= &(&f * p);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        (rows, pivots)
    }

    /// Exact rank and a basis of the right kernel.
    ///
    /// Every returned vector is annihilated exactly and the set is linearly
    /// independent; `rank + kernel.len() == cols`.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<CycQ6>>) {
        let (rows, pivots) = self.rref();
        let rank = pivots.len();
        let mut kernel = Vec::with_capacity(self.cols - rank);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![CycQ6::zero(); self.cols];
            v[free] = CycQ6::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[r][free];
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = CycQ6::one();
        }
        let (rows, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| rows[i][n + j].clone()))
    }

    /// Solve `A x = b`; returns one solution if the system is consistent.
    pub fn solve(&self, b: &[CycQ6]) -> Option<Vec<CycQ6>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (rows, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![CycQ6::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = rows[r][self.cols].clone();
        }
        Some(x)
    }

    /// Vertical stack of two matrices with identical column counts.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

fn entry_size(x: &CycQ6) -> u64 {
    (x.r0.numer().bits()
        + x.r0.denom().bits()
        + x.r1.numer().bits()
        + x.r1.denom().bits()) as u64
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = CycQ6;
    fn index(&self, (i, j): (usize, usize)) -> &CycQ6 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycQ6 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in Mat * Mat");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for Mat {
    type Output = Mat;
    fn mul(self, rhs: Mat) -> Mat {
        &self * &rhs
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].render()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity() {
        for n in [1, 2, 5] {
            let (rank, kernel) = Mat::identity(n).rank_kernel();
            assert_eq!(rank, n);
            assert!(kernel.is_empty());
        }
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let (rank, kernel) = Mat::zeros(3, 3).rank_kernel();
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 3);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        // Rows: (1, xi, 0), (xi, xi^2, 0) -- rank 1 over Q(xi).
        let m = Mat::from_entries(
            2,
            3,
            vec![
                CycQ6::one(),
                CycQ6::xi(),
                CycQ6::zero(),
                CycQ6::xi(),
                CycQ6::xi_pow(2),
                CycQ6::zero(),
            ],
        );
        let (rank, kernel) = m.rank_kernel();
        assert_eq!(rank, 1);
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(m.mul_vec(v).iter().all(CycQ6::is_zero));
        }
    }

    #[test]
    fn kron_identities() {
        assert_eq!(Mat::identity(2).kron(&Mat::identity(3)), Mat::identity(6));
        let a = Mat::diag(&[CycQ6::xi(), CycQ6::xi_pow(2)]);
        let b = Mat::diag(&[CycQ6::one(), -CycQ6::one()]);
        let expect = Mat::diag(&[
            CycQ6::xi(),
            -CycQ6::xi(),
            CycQ6::xi_pow(2),
            -CycQ6::xi_pow(2),
        ]);
        assert_eq!(a.kron(&b), expect);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat::from_entries(
            2,
            2,
            vec![
                CycQ6::one(),
                CycQ6::xi(),
                CycQ6::from_int(2),
                CycQ6::xi_pow(4),
            ],
        );
        let inv = m.inverse().expect("invertible");
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_small() -> impl Strategy<Value = CycQ6> {
            (-3i64..4, -3i64..4)
                .prop_map(|(a, b)| CycQ6::from_int(a) + CycQ6::from_int(b) * CycQ6::xi())
        }

        fn arb_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
            proptest::collection::vec(arb_small(), rows * cols)
                .prop_map(move |v| Mat::from_entries(rows, cols, v))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn rank_nullity(m in arb_mat(3, 4)) {
                let (rank, kernel) = m.rank_kernel();
                prop_assert_eq!(rank + kernel.len(), 4);
                for v in &kernel {
                    prop_assert!(m.mul_vec(v).iter().all(CycQ6::is_zero));
                }
            }

            #[test]
            fn kron_rank_is_multiplicative(a in arb_mat(2, 3), b in arb_mat(3, 2)) {
                prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
            }
        }
    }
}
