//! Dense linear algebra over GF(3): rank, kernels, Jordan partitions of
//! unipotent maps, symplectic and quadratic forms, projective points.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::gf::{F3, F9};
use crate::Error;

pub type VecF3 = Vec<F3>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatF3 {
    rows: usize,
    cols: usize,
    data: Vec<F3>,
}

impl MatF3 {
    pub fn zero(rows: usize, cols: usize) -> MatF3 {
        MatF3 { rows, cols, data: vec![F3::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> MatF3 {
        let mut m = MatF3::zero(n, n);
        for k in 0..n {
            m.set(k, k, F3::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F3>]) -> MatF3 {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        MatF3 { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> MatF3 {
        let v: Vec<Vec<F3>> = rows.iter().map(|r| r.iter().map(|&x| F3::new(x)).collect()).collect();
        MatF3::from_rows(&v)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<F3>]) -> MatF3 {
        MatF3::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F3 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F3) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> VecF3 {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> VecF3 {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> MatF3 {
        let mut t = MatF3::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F3]) -> VecF3 {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut s = 0u32;
                for c in 0..self.cols {
                    s += self.get(r, c).value() as u32 * v[c].value() as u32;
                }
                F3::new(s as i64)
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> MatF3 {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = MatF3::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (MatF3, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&k| !m.get(k, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let s = m.get(r, c);
            m.scale_row(r, s);
            for k in 0..m.rows {
                if k != r {
                    let f = m.get(k, c);
                    if !f.is_zero() {
                        m.add_row_multiple(k, r, -f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: F3) {
        for c in 0..self.cols {
            let v = self.get(r, c) * s;
            self.set(r, c, v);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, f: F3) {
        for c in 0..self.cols {
            let v = self.get(dst, c) + f * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : m·v = 0}`.
    pub fn kernel(&self) -> Vec<VecF3> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F3::ZERO; self.cols];
                v[f] = F3::ONE;
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(k, f);
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<F3, Error> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut d = F3::ONE;
        for c in 0..n {
            let Some(p) = (c..n).find(|&k| !m.get(k, c).is_zero()) else {
                return Ok(F3::ZERO);
            };
            if p != c {
                m.swap_rows(p, c);
                d = -d;
            }
            let piv = m.get(c, c);
            d = d * piv;
            for k in c + 1..n {
                let f = m.get(k, c) * piv;
                if !f.is_zero() {
                    m.add_row_multiple(k, c, -f);
                }
            }
        }
        Ok(d)
    }

    pub fn inverse(&self) -> Result<MatF3, Error> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = MatF3::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, F3::ONE);
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = MatF3::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Ok(inv)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl Mul for &MatF3 {
    type Output = MatF3;
    fn mul(self, rhs: &MatF3) -> MatF3 {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = MatF3::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut s = 0u32;
                for k in 0..self.cols {
                    s += self.get(r, k).value() as u32 * rhs.get(k, c).value() as u32;
                }
                out.set(r, c, F3::new(s as i64));
            }
        }
        out
    }
}

impl Add for &MatF3 {
    type Output = MatF3;
    fn add(self, rhs: &MatF3) -> MatF3 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatF3 {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl Sub for &MatF3 {
    type Output = MatF3;
    fn sub(self, rhs: &MatF3) -> MatF3 {
        self + &(-rhs)
    }
}

impl Neg for &MatF3 {
    type Output = MatF3;
    fn neg(self) -> MatF3 {
        MatF3 { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| -a).collect() }
    }
}

impl fmt::Display for MatF3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Square matrix of fixed size with entries stored as residues; the element
/// type used for matrix groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqMat<const N: usize>(pub [[u8; N]; N]);

impl<const N: usize> SqMat<N> {
    pub fn identity() -> Self {
        let mut m = [[0u8; N]; N];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = 1;
        }
        SqMat(m)
    }

    pub fn from_i64(rows: [[i64; N]; N]) -> Self {
        let mut m = [[0u8; N]; N];
        for r in 0..N {
            for c in 0..N {
                m[r][c] = rows[r][c].rem_euclid(3) as u8;
            }
        }
        SqMat(m)
    }

    pub fn from_mat(m: &MatF3) -> Self {
        assert_eq!((m.rows(), m.cols()), (N, N));
        let mut out = [[0u8; N]; N];
        for r in 0..N {
            for c in 0..N {
                out[r][c] = m.get(r, c).value();
            }
        }
        SqMat(out)
    }

    pub fn to_mat(&self) -> MatF3 {
        let rows: Vec<Vec<F3>> = self.0.iter().map(|r| r.iter().map(|&x| F3::new(x as i64)).collect()).collect();
        MatF3::from_rows(&rows)
    }

    pub fn get(&self, r: usize, c: usize) -> F3 {
        F3::new(self.0[r][c] as i64)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = [[0u8; N]; N];
        for r in 0..N {
            for c in 0..N {
                let mut s = 0u32;
                for k in 0..N {
                    s += self.0[r][k] as u32 * rhs.0[k][c] as u32;
                }
                out[r][c] = (s % 3) as u8;
            }
        }
        SqMat(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = [[0u8; N]; N];
        for r in 0..N {
            for c in 0..N {
                out[c][r] = self.0[r][c];
            }
        }
        SqMat(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.0;
        for row in out.iter_mut() {
            for x in row.iter_mut() {
                *x = (3 - *x) % 3;
            }
        }
        SqMat(out)
    }

    pub fn mul_vec(&self, v: &[F3]) -> VecF3 {
        (0..N)
            .map(|r| {
                let s: u32 = (0..N).map(|c| self.0[r][c] as u32 * v[c].value() as u32).sum();
                F3::new(s as i64)
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        Ok(SqMat::from_mat(&self.to_mat().inverse()?))
    }

    pub fn det(&self) -> F3 {
        self.to_mat().det().expect("square")
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Compact base-3 key, row-major.
    pub fn key(&self) -> u64 {
        let mut k = 0u64;
        for r in 0..N {
            for c in 0..N {
                k = k * 3 + self.0[r][c] as u64;
            }
        }
        k
    }
}

/// Partition of the dimension into Jordan block lengths of a unipotent map,
/// largest first.
pub fn jordan_partition(g: &MatF3) -> Result<Vec<usize>, Error> {
    if !g.is_square() {
        return Err(Error::Shape("Jordan partition of a non-square matrix".into()));
    }
    let n = g.rows();
    let nil = g - &MatF3::identity(n);
    let mut ranks = vec![n];
    let mut p = MatF3::identity(n);
    for _ in 0..n {
        p = &p * &nil;
        ranks.push(p.rank());
    }
    if ranks[n] != 0 {
        return Err(Error::NotUnipotent);
    }
    // #{parts ≥ k} = rank((g−1)^{k−1}) − rank((g−1)^k)
    let at_least: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut parts = Vec::new();
    for k in (1..=n).rev() {
        let exact = at_least[k - 1] - if k < n { at_least[k] } else { 0 };
        parts.extend(std::iter::repeat(k).take(exact));
    }
    Ok(parts)
}

/// Canonical representatives of the 1-spaces of F3^dim (first nonzero entry 1).
pub fn projective_points(dim: usize) -> Vec<VecF3> {
    all_vectors(dim).into_iter().filter(|v| v.iter().find(|x| !x.is_zero()) == Some(&F3::ONE)).collect()
}

/// All 3^dim vectors, in base-3 order with the first coordinate least significant.
pub fn all_vectors(dim: usize) -> Vec<VecF3> {
    let total = 3usize.pow(dim as u32);
    (0..total).map(|k| vector_from_index(k, dim)).collect()
}

pub fn vector_from_index(mut k: usize, dim: usize) -> VecF3 {
    let mut v = Vec::with_capacity(dim);
    for _ in 0..dim {
        v.push(F3::new((k % 3) as i64));
        k /= 3;
    }
    v
}

pub fn vector_index(v: &[F3]) -> usize {
    v.iter().rev().fold(0, |acc, x| acc * 3 + x.value() as usize)
}

/// Normalize a nonzero vector so its first nonzero entry is 1.
pub fn normalize(v: &[F3]) -> VecF3 {
    match v.iter().find(|x| !x.is_zero()) {
        Some(&lead) => v.iter().map(|&x| x * lead).collect(),
        None => v.to_vec(),
    }
}

pub fn dot(v: &[F3], w: &[F3]) -> F3 {
    let s: u32 = v.iter().zip(w).map(|(a, b)| a.value() as u32 * b.value() as u32).sum();
    F3::new(s as i64)
}

pub fn add_vec(v: &[F3], w: &[F3]) -> VecF3 {
    v.iter().zip(w).map(|(&a, &b)| a + b).collect()
}

pub fn sub_vec(v: &[F3], w: &[F3]) -> VecF3 {
    v.iter().zip(w).map(|(&a, &b)| a - b).collect()
}

pub fn scale_vec(s: F3, v: &[F3]) -> VecF3 {
    v.iter().map(|&a| s * a).collect()
}

/// Every subspace of F3^n of dimension k, each given by its RREF basis.
pub fn subspaces(n: usize, k: usize) -> Vec<Vec<VecF3>> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(n, k, 0, &mut pivots, &mut out);
    out
}

fn choose_pivots(n: usize, k: usize, start: usize, pivots: &mut Vec<usize>, out: &mut Vec<Vec<VecF3>>) {
    if pivots.len() == k {
        // free slots: (row r, column c) with c > pivot r and c not a pivot
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pr = pivots[r];
                (pr + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        for fill in 0..3usize.pow(slots.len() as u32) {
            let mut rows = vec![vec![F3::ZERO; n]; k];
            for r in 0..k {
                rows[r][pivots[r]] = F3::ONE;
            }
            let mut f = fill;
            for &(r, c) in &slots {
                rows[r][c] = F3::new((f % 3) as i64);
                f /= 3;
            }
            out.push(rows);
        }
        return;
    }
    for p in start..n {
        pivots.push(p);
        choose_pivots(n, k, p + 1, pivots, out);
        pivots.pop();
    }
}

/// All vectors in the span of `basis`.
pub fn span(basis: &[VecF3], dim: usize) -> Vec<VecF3> {
    let mut out = vec![vec![F3::ZERO; dim]];
    for b in basis {
        let prev = out.clone();
        for s in [F3::ONE, F3::MINUS_ONE] {
            out.extend(prev.iter().map(|v| add_vec(v, &scale_vec(s, b))));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Canonical RREF basis of the span of `vecs` (zero rows dropped).
pub fn span_basis(vecs: &[VecF3], dim: usize) -> Vec<VecF3> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let m = MatF3::from_rows(vecs);
    let (r, pivots) = m.rref();
    let _ = dim;
    (0..pivots.len()).map(|k| r.row(k)).collect()
}

/// The standard Gram matrix [[0,I],[−I,0]] of size 2m.
pub fn standard_symplectic(m: usize) -> MatF3 {
    let mut j = MatF3::zero(2 * m, 2 * m);
    for k in 0..m {
        j.set(k, m + k, F3::ONE);
        j.set(m + k, k, F3::MINUS_ONE);
    }
    j
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    gram: MatF3,
}

impl SymplecticForm {
    pub fn new(gram: MatF3) -> Result<SymplecticForm, Error> {
        if !gram.is_square() || gram.transpose() != -&gram {
            return Err(Error::Shape("Gram matrix is not antisymmetric".into()));
        }
        if gram.det()?.is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(SymplecticForm { gram })
    }

    pub fn standard(m: usize) -> SymplecticForm {
        SymplecticForm { gram: standard_symplectic(m) }
    }

    pub fn gram(&self) -> &MatF3 {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, v: &[F3], w: &[F3]) -> F3 {
        dot(v, &self.gram.mul_vec(w))
    }

    /// Number of totally isotropic subspaces of half the dimension.
    pub fn lagrangian_count(&self) -> usize {
        let n = self.dim();
        subspaces(n, n / 2)
            .iter()
            .filter(|b| b.iter().all(|v| b.iter().all(|w| self.eval(v, w).is_zero())))
            .count()
    }

    /// Columns form a basis in which the form has Gram matrix [[0,I],[−I,0]]:
    /// returns `P` with `Pᵀ·G·P = J`.
    pub fn symplectic_basis(&self) -> MatF3 {
        let n = self.dim();
        let m = n / 2;
        let mut es: Vec<VecF3> = Vec::new();
        let mut fs: Vec<VecF3> = Vec::new();
        let mut remaining: Vec<VecF3> = (0..n)
            .map(|k| {
                let mut v = vec![F3::ZERO; n];
                v[k] = F3::ONE;
                v
            })
            .collect();
        while es.len() < m {
            let e = remaining.remove(0);
            let pos = remaining.iter().position(|w| !self.eval(&e, w).is_zero()).expect("nondegenerate");
            let f0 = remaining.remove(pos);
            let c = self.eval(&e, &f0);
            let f = scale_vec(c, &f0); // c = c⁻¹ in F3
            // project the rest onto the complement of span(e, f)
            remaining = remaining
                .into_iter()
                .map(|w| {
                    let a = self.eval(&e, &w);
                    let b = self.eval(&f, &w);
                    // w − b(e,w)·f + b(f,w)·e, using b(e,f) = 1
                    add_vec(&sub_vec(&w, &scale_vec(a, &f)), &scale_vec(b, &e))
                })
                .collect();
            es.push(e);
            fs.push(f);
        }
        let mut cols = es;
        cols.extend(fs);
        MatF3::from_cols(&cols)
    }
}

/// `q(v) = vᵀ·U·v` with `U` upper triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    coeffs: MatF3,
}

impl QuadraticForm {
    pub fn new(coeffs: MatF3) -> Result<QuadraticForm, Error> {
        if !coeffs.is_square() {
            return Err(Error::Shape("quadratic form coefficients must be square".into()));
        }
        for r in 0..coeffs.rows() {
            for c in 0..r {
                if !coeffs.get(r, c).is_zero() {
                    return Err(Error::Shape("quadratic form coefficients must be upper triangular".into()));
                }
            }
        }
        Ok(QuadraticForm { coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn eval(&self, v: &[F3]) -> F3 {
        dot(v, &self.coeffs.mul_vec(v))
    }

    /// Polar form `q(v+w) − q(v) − q(w)`.
    pub fn polar(&self, v: &[F3], w: &[F3]) -> F3 {
        self.eval(&add_vec(v, w)) - self.eval(v) - self.eval(w)
    }
}

/// F3-matrix of multiplication by `x` on F9 in the basis {1, i}.
pub fn f9_block(x: F9) -> [[F3; 2]; 2] {
    [[x.re, -x.im], [x.im, x.re]]
}

/// Embed an n×n matrix over F9 as a 2n×2n matrix over F3; coordinate 2k is
/// the real part and 2k+1 the i-part of entry k.
pub fn embed_f9(m: &[Vec<F9>]) -> MatF3 {
    let n = m.len();
    let mut out = MatF3::zero(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let b = f9_block(m[r][c]);
            for a in 0..2 {
                for d in 0..2 {
                    out.set(2 * r + a, 2 * c + d, b[a][d]);
                }
            }
        }
    }
    out
}

pub fn f9_vec_to_f3(v: &[F9]) -> VecF3 {
    v.iter().flat_map(|x| [x.re, x.im]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> MatF3 {
        loop {
            let rows: Vec<VecF3> = (0..n).map(|_| (0..n).map(|_| F3::new(rng.gen_range(0..3))).collect()).collect();
            let m = MatF3::from_rows(&rows);
            if m.rank() == n {
                return m;
            }
        }
    }

    #[test]
    fn rank_kernel_basics() {
        let id = MatF3::identity(4);
        assert_eq!(id.rank(), 4);
        assert!(id.kernel().is_empty());
        let z = MatF3::zero(4, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().len(), 4);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = MatF3::from_i64(&[&[1, 2, 0, 1], &[0, 1, 1, 1], &[1, 0, 1, 2]]);
        let k = m.kernel();
        assert_eq!(m.rank() + k.len(), 4);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(jordan_partition(&MatF3::identity(6)).unwrap(), vec![1; 6]);
        // two blocks of length 3
        let mut g = MatF3::identity(6);
        for k in [0, 1, 3, 4] {
            g.set(k, k + 1, F3::ONE);
        }
        assert_eq!(jordan_partition(&g).unwrap(), vec![3, 3]);
        let nil = &g - &MatF3::identity(6);
        assert_eq!(nil.rank(), 4);
        assert!(jordan_partition(&(&MatF3::identity(2) + &MatF3::identity(2))).is_err());
    }

    #[test]
    fn jordan_is_conjugation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut g = MatF3::identity(6);
        for k in [0, 1, 3] {
            g.set(k, k + 1, F3::ONE);
        }
        let p = jordan_partition(&g).unwrap();
        assert_eq!(p, vec![3, 2, 1]);
        for _ in 0..100 {
            let h = random_invertible(6, &mut rng);
            let c = &(&h * &g) * &h.inverse().unwrap();
            let q = jordan_partition(&c).unwrap();
            assert_eq!(q, p);
            let fixed = (&c - &MatF3::identity(6)).kernel().len();
            assert_eq!(fixed, q.len());
        }
    }

    #[test]
    fn projective_point_counts() {
        assert_eq!(projective_points(1).len(), 1);
        assert_eq!(projective_points(4).len(), 40);
        let p6 = projective_points(6);
        assert_eq!(p6.len(), 364);
        let mut all: Vec<VecF3> = p6.iter().flat_map(|v| [v.clone(), scale_vec(F3::MINUS_ONE, v)]).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 728);
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(subspaces(4, 1).len(), 40);
        assert_eq!(subspaces(4, 2).len(), 130);
        assert_eq!(subspaces(4, 3).len(), 40);
    }

    #[test]
    fn lagrangians() {
        assert_eq!(SymplecticForm::standard(2).lagrangian_count(), 40);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let p = random_invertible(4, &mut rng);
            let g = &(&p.transpose() * &standard_symplectic(2)) * &p;
            let f = SymplecticForm::new(g).unwrap();
            assert_eq!(f.lagrangian_count(), 40);
            let b = f.symplectic_basis();
            assert_eq!(&(&b.transpose() * f.gram()) * &b, standard_symplectic(2));
        }
        assert!(matches!(SymplecticForm::new(MatF3::zero(4, 4)), Err(Error::DegenerateForm)));
    }

    #[test]
    fn minus_form_is_anisotropic_on_last_plane() {
        let q = QuadraticForm::new(MatF3::from_i64(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])).unwrap();
        for a in F3::all() {
            for b in F3::all() {
                if !(a.is_zero() && b.is_zero()) {
                    assert!(!q.eval(&[F3::ZERO, F3::ZERO, a, b]).is_zero());
                }
            }
        }
    }

    #[test]
    fn f9_embedding_is_multiplicative() {
        for x in F9::all() {
            for y in F9::all() {
                let mx = embed_f9(&[vec![x]]);
                let my = embed_f9(&[vec![y]]);
                assert_eq!(&mx * &my, embed_f9(&[vec![x * y]]));
                assert_eq!(mx.mul_vec(&f9_vec_to_f3(&[y])), f9_vec_to_f3(&[x * y]));
            }
        }
    }

    proptest! {
        #[test]
        fn inverse_roundtrip(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_invertible(5, &mut rng);
            prop_assert_eq!(&m * &m.inverse().unwrap(), MatF3::identity(5));
            prop_assert!(!m.det().unwrap().is_zero());
        }

        #[test]
        fn det_is_multiplicative(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rows = |rng: &mut ChaCha8Rng| -> MatF3 {
                let r: Vec<VecF3> = (0..4).map(|_| (0..4).map(|_| F3::new(rng.gen_range(0..3))).collect()).collect();
                MatF3::from_rows(&r)
            };
            let a = rows(&mut rng);
            let b = rows(&mut rng);
            prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
        }
    }
}
