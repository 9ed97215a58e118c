//! Vectors, matrices, and exact Gauss–Jordan elimination over Q(i).
//!
//! Elimination is the single primitive behind every rank, kernel, and
//! canonical-form computation in the crate. Pivot decisions are exact
//! nonzero tests on reduced scalars; there are no tolerances.
//!
//! Row reduction runs fraction-free (Bareiss–Jordan) over Gaussian integers
//! after clearing denominators row by row, with machine-word arithmetic that
//! falls back to big integers on overflow. Rational entries appear only in
//! the final normalization, so no intermediate gcd work is done. A plain
//! rational Gauss–Jordan is kept in the test module as an independent oracle.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::GaussianRational;

/// A coordinate vector over Q(i). The dimension is the entry count.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vector {
    entries: Vec<GaussianRational>,
}

impl Vector {
    pub fn new(entries: Vec<GaussianRational>) -> Self {
        Vector { entries }
    }

    pub fn zero(dim: usize) -> Self {
        Vector::new(vec![GaussianRational::zero(); dim])
    }

    /// Standard basis vector `e_k` (0-indexed). Panics if `k >= dim`.
    pub fn unit(dim: usize, k: usize) -> Self {
        assert!(k < dim, "unit index {k} out of range for dimension {dim}");
        let mut v = Vector::zero(dim);
        v.entries[k] = GaussianRational::one();
        v
    }

    /// Convenience constructor from Gaussian-integer coordinates `(re, im)`.
    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        Vector::new(
            coords
                .iter()
                .map(|&(a, b)| GaussianRational::from_ints(a, b))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Index of the first nonzero entry, if any.
    pub fn pivot(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }

    /// Inner product, linear in `self` and conjugate-linear in `other`:
    /// `⟨u,v⟩ = Σ_k u_k · conj(v_k)`. Panics on dimension mismatch.
    pub fn inner(&self, other: &Vector) -> GaussianRational {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        let mut acc = GaussianRational::zero();
        for (u, v) in self.entries.iter().zip(&other.entries) {
            if !u.is_zero() && !v.is_zero() {
                acc += &(u * &v.conj());
            }
        }
        acc
    }

    pub fn scale(&self, c: &GaussianRational) -> Vector {
        Vector::new(self.entries.iter().map(|e| e * c).collect())
    }

    /// `self − c·other` in place.
    pub fn sub_scaled(&mut self, c: &GaussianRational, other: &Vector) {
        assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a -= &(c * b);
            }
        }
    }

    /// Concatenation `(self | other)`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Vector::new(entries)
    }

    /// Splits into `(first n, rest)`.
    pub fn split_at(&self, n: usize) -> (Vector, Vector) {
        (
            Vector::new(self.entries[..n].to_vec()),
            Vector::new(self.entries[n..].to_vec()),
        )
    }
}

impl Index<usize> for Vector {
    type Output = GaussianRational;
    fn index(&self, k: usize) -> &GaussianRational {
        &self.entries[k]
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(self.entries.iter().map(|e| -e).collect())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A dense matrix over Q(i), row major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<GaussianRational>>,
}

impl Matrix {
    pub fn from_rows(data: Vec<Vec<GaussianRational>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        for r in &data {
            assert_eq!(r.len(), cols, "ragged matrix rows");
        }
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![GaussianRational::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for k in 0..n {
            m.data[k][k] = GaussianRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r]
    }

    /// Column `c` as a vector of coefficient entries.
    pub fn column(&self, c: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|r| self.data[r][c].clone()).collect()
    }

    /// Matrix–vector product where `x` is a coefficient vector of length
    /// `cols`.
    pub fn mul_coeffs(&self, x: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(x.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = GaussianRational::zero();
                for (a, b) in row.iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_hermitian(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in r..self.cols {
                if self.data[r][c] != self.data[c][r].conj() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact positive-definiteness test for a Hermitian matrix, by pivoted
    /// Schur-complement elimination: all pivots must be positive rationals.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_hermitian() {
            return false;
        }
        let mut m = self.data.clone();
        let n = self.rows;
        for k in 0..n {
            let pivot = m[k][k].clone();
            if !pivot.is_real() || !pivot.re().is_positive() {
                return false;
            }
            for r in (k + 1)..n {
                if m[r][k].is_zero() {
                    continue;
                }
                let factor = &m[r][k] / &pivot;
                for c in k..n {
                    let delta = &factor * &m[k][c];
                    let v = &m[r][c] - &delta;
                    m[r][c] = v;
                }
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        rref_in_place(&mut rows);
        rows.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.data {
            write!(f, "  [")?;
            for (k, e) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// Fraction-free elimination core
// ---------------------------------------------------------------------------

/// Internal Gaussian integer `a + b·i` with a machine-word fast path.
/// Promotion to big integers happens per operation on overflow, so values are
/// still arbitrary precision.
#[derive(Clone, PartialEq, Eq, Debug)]
enum Gi {
    S(i128, i128),
    B(BigInt, BigInt),
}

impl Gi {
    fn zero() -> Gi {
        Gi::S(0, 0)
    }

    fn one() -> Gi {
        Gi::S(1, 0)
    }

    fn is_zero(&self) -> bool {
        match self {
            Gi::S(a, b) => *a == 0 && *b == 0,
            Gi::B(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    fn big(&self) -> (BigInt, BigInt) {
        match self {
            Gi::S(a, b) => (BigInt::from(*a), BigInt::from(*b)),
            Gi::B(a, b) => (a.clone(), b.clone()),
        }
    }

    fn shrink(a: BigInt, b: BigInt) -> Gi {
        match (a.to_i128(), b.to_i128()) {
            (Some(x), Some(y)) => Gi::S(x, y),
            _ => Gi::B(a, b),
        }
    }

    fn from_bigs(a: BigInt, b: BigInt) -> Gi {
        Gi::shrink(a, b)
    }

    fn mul(&self, o: &Gi) -> Gi {
        if self.is_zero() || o.is_zero() {
            return Gi::zero();
        }
        if let (Gi::S(a, b), Gi::S(c, d)) = (self, o) {
            if let (Some(ac), Some(bd), Some(ad), Some(bc)) = (
                a.checked_mul(*c),
                b.checked_mul(*d),
                a.checked_mul(*d),
                b.checked_mul(*c),
            ) {
                if let (Some(re), Some(im)) = (ac.checked_sub(bd), ad.checked_add(bc)) {
                    return Gi::S(re, im);
                }
            }
        }
        let (a, b) = self.big();
        let (c, d) = o.big();
        Gi::shrink(&a * &c - &b * &d, &a * &d + &b * &c)
    }

    fn sub(&self, o: &Gi) -> Gi {
        if let (Gi::S(a, b), Gi::S(c, d)) = (self, o) {
            if let (Some(re), Some(im)) = (a.checked_sub(*c), b.checked_sub(*d)) {
                return Gi::S(re, im);
            }
        }
        let (a, b) = self.big();
        let (c, d) = o.big();
        Gi::shrink(a - c, b - d)
    }

    /// Exact division in Z[i]. The caller guarantees divisibility (Bareiss
    /// invariant); this is checked.
    fn exact_div(&self, o: &Gi) -> Gi {
        if self.is_zero() {
            return Gi::zero();
        }
        debug_assert!(!o.is_zero(), "exact_div by zero");
        if let (Gi::S(a, b), Gi::S(c, d)) = (self, o) {
            // (a+bi)(c-di) / (c²+d²)
            let norm = c.checked_mul(*c).and_then(|cc| {
                d.checked_mul(*d).and_then(|dd| cc.checked_add(dd))
            });
            let re = a
                .checked_mul(*c)
                .and_then(|ac| b.checked_mul(*d).and_then(|bd| ac.checked_add(bd)));
            let im = b
                .checked_mul(*c)
                .and_then(|bc| a.checked_mul(*d).and_then(|ad| bc.checked_sub(ad)));
            if let (Some(n), Some(re), Some(im)) = (norm, re, im) {
                debug_assert!(re % n == 0 && im % n == 0, "non-exact division");
                return Gi::S(re / n, im / n);
            }
        }
        let (a, b) = self.big();
        let (c, d) = o.big();
        let norm = &c * &c + &d * &d;
        let re = &a * &c + &b * &d;
        let im = &b * &c - &a * &d;
        debug_assert!(
            (&re % &norm).is_zero() && (&im % &norm).is_zero(),
            "non-exact division"
        );
        Gi::shrink(re / &norm, im / norm)
    }
}

/// Clears denominators of a rational row, returning an integral row with the
/// same span direction.
fn integral_row(row: &[GaussianRational]) -> Vec<Gi> {
    let mut lcm = BigInt::from(1);
    for e in row {
        for d in [e.re().denom(), e.im().denom()] {
            if !num_integer::Integer::is_multiple_of(&lcm, d) {
                lcm = num_integer::Integer::lcm(&lcm, d);
            }
        }
    }
    row.iter()
        .map(|e| {
            let re = e.re().numer() * (&lcm / e.re().denom());
            let im = e.im().numer() * (&lcm / e.im().denom());
            Gi::from_bigs(re, im)
        })
        .collect()
}

/// Fraction-free Gauss–Jordan (Bareiss). On return, the first `pivots.len()`
/// rows hold `p·RREF` where `p` is the final pivot value; remaining rows are
/// zero.
fn bareiss_jordan(m: &mut [Vec<Gi>], ncols: usize) -> (Vec<usize>, Gi) {
    let nrows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut is_pivot = vec![false; ncols];
    let mut prev = Gi::one();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(src) = (next_row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, src);
        let p = m[next_row][col].clone();
        for r in 0..nrows {
            if r == next_row {
                continue;
            }
            let f = std::mem::replace(&mut m[r][col], Gi::zero());
            for j in 0..ncols {
                if j == col || is_pivot[j] {
                    continue;
                }
                let num = p.mul(&m[r][j]).sub(&f.mul(&m[next_row][j]));
                m[r][j] = num.exact_div(&prev);
            }
        }
        pivots.push(col);
        is_pivot[col] = true;
        prev = p;
        next_row += 1;
        if next_row == nrows {
            break;
        }
    }
    // Pivot columns of pivot rows all carry the common scale `prev`.
    for (i, &c) in pivots.iter().enumerate() {
        m[i][c] = prev.clone();
    }
    (pivots, prev)
}

fn gi_over_pivot(num: &Gi, den: &Gi) -> GaussianRational {
    // num/den in Q(i): num·conj(den) / |den|², reduced by construction.
    let (a, b) = num.big();
    let (c, d) = den.big();
    let norm = &c * &c + &d * &d;
    let re = &a * &c + &b * &d;
    let im = &b * &c - &a * &d;
    GaussianRational::new(
        BigRational::new(re, norm.clone()),
        BigRational::new(im, norm),
    )
}

/// Reduced row echelon form in place. Zero rows are removed, pivots are
/// normalized to 1 and cleared above and below, and the surviving rows are
/// ordered by strictly increasing pivot column. Returns the pivot columns.
pub fn rref_in_place(rows: &mut Vec<Vec<GaussianRational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    for r in rows.iter() {
        assert_eq!(r.len(), ncols, "ragged rows");
    }
    let mut m: Vec<Vec<Gi>> = rows.iter().map(|r| integral_row(r)).collect();
    let (pivots, scale) = bareiss_jordan(&mut m, ncols);
    rows.clear();
    for (i, &c) in pivots.iter().enumerate() {
        let mut out = Vec::with_capacity(ncols);
        for j in 0..ncols {
            if j == c {
                out.push(GaussianRational::one());
            } else if m[i][j].is_zero() {
                out.push(GaussianRational::zero());
            } else {
                out.push(gi_over_pivot(&m[i][j], &scale));
            }
        }
        rows.push(out);
    }
    pivots
}

/// Basis of the solution space of the homogeneous system whose rows are the
/// given linear forms: `{x : Σ_j row[j]·x_j = 0 for every row}`.
///
/// The result rows are returned in canonical reduced echelon form.
pub fn nullspace(rows: &[Vec<GaussianRational>], ncols: usize) -> Vec<Vec<GaussianRational>> {
    let mut m: Vec<Vec<GaussianRational>> = rows.to_vec();
    for r in &m {
        assert_eq!(r.len(), ncols);
    }
    let pivots = rref_in_place(&mut m);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; ncols];
        for &p in &pivots {
            s[p] = true;
        }
        s
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![GaussianRational::zero(); ncols];
        v[free] = GaussianRational::one();
        for (r, &p) in pivots.iter().enumerate() {
            // x_p = −coef(free) after back substitution on the RREF row
            v[p] = -&m[r][free];
        }
        basis.push(v);
    }
    rref_in_place(&mut basis);
    basis
}

/// Solves `Σ_j x_j · columns[j] = rhs` exactly. Returns a particular solution
/// if the system is consistent; inconsistency is a result, not an error.
pub fn solve_columns(
    columns: &[Vec<GaussianRational>],
    rhs: &[GaussianRational],
) -> Option<Vec<GaussianRational>> {
    let m = rhs.len();
    for c in columns {
        assert_eq!(c.len(), m, "solve: column length mismatch");
    }
    let k = columns.len();
    // Augmented system [A | b] row reduced; read off one solution.
    let mut rows: Vec<Vec<GaussianRational>> = (0..m)
        .map(|r| {
            let mut row: Vec<GaussianRational> =
                columns.iter().map(|col| col[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let pivots = rref_in_place(&mut rows);
    if pivots.contains(&k) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![GaussianRational::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rows[r][k].clone();
    }
    Some(x)
}
