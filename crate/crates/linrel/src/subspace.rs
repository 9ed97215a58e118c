//! Canonically represented linear subspaces of C^n over Q(i).
//!
//! A subspace is stored as its reduced-echelon basis: each basis vector's
//! first nonzero entry (the pivot) is 1, pivot positions strictly increase
//! across the basis, and every pivot position is zero in all other basis
//! vectors. Two `Subspace` values are equal as sets iff their representations
//! are identical, so `==` is exact set equality.

use std::fmt;

use crate::linalg::{nullspace, rref_in_place, solve_columns, Matrix, Vector};
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceError {
    /// Operands live in coordinate spaces of different dimensions.
    AmbientMismatch { left: usize, right: usize },
    /// An operation required `V ⊆ U` and the containment fails.
    NotContained,
    /// A supplied Gram matrix is not an Hermitian positive-definite form.
    FormNotPositiveDefinite,
}

impl fmt::Display for SubspaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubspaceError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
            SubspaceError::NotContained => write!(f, "operand is not a subspace of the other"),
            SubspaceError::FormNotPositiveDefinite => {
                write!(f, "form is not Hermitian positive-definite")
            }
        }
    }
}

impl std::error::Error for SubspaceError {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    /// Span of the given vectors, in canonical form. Panics if a vector has
    /// the wrong length; that is a structural misuse, not a data error.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut rows: Vec<Vec<GaussianRational>> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.dim(), ambient, "span: vector length mismatch");
                v.entries().to_vec()
            })
            .collect();
        rref_in_place(&mut rows);
        Subspace {
            ambient,
            basis: rows.into_iter().map(Vector::new).collect(),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|k| Vector::unit(ambient, k)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), SubspaceError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coords_of(&self, v: &Vector) -> Option<Vec<GaussianRational>> {
        assert_eq!(v.dim(), self.ambient);
        let mut residue = v.clone();
        let mut coords = Vec::with_capacity(self.basis.len());
        // Pivot positions are zero in all other basis vectors, so the
        // coefficient of each basis vector can be read off directly.
        for b in &self.basis {
            let p = b.pivot().expect("canonical basis vectors are nonzero");
            let c = residue[p].clone();
            if !c.is_zero() {
                residue.sub_scaled(&c, b);
            }
            coords.push(c);
        }
        residue.is_zero().then_some(coords)
    }

    pub fn contains_vector(&self, v: &Vector) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Linear combination of the canonical basis with the given coefficients.
    pub fn from_coords(&self, coords: &[GaussianRational]) -> Vector {
        assert_eq!(coords.len(), self.basis.len());
        let mut v = Vector::zero(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                v = &v + &b.scale(c);
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check_ambient(other)?;
        let mut vectors: Vec<Vector> = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient, &vectors))
    }

    /// Intersection via the Zassenhaus block trick: reduce rows
    /// `[u|u]` for `u ∈ U` and `[v|0]` for `v ∈ V`; rows with zero left half
    /// carry the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check_ambient(other)?;
        let d = self.ambient;
        let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
        for u in &self.basis {
            let mut row = u.entries().to_vec();
            row.extend(u.entries().iter().cloned());
            rows.push(row);
        }
        for v in &other.basis {
            let mut row = v.entries().to_vec();
            row.extend(std::iter::repeat(GaussianRational::zero()).take(d));
            rows.push(row);
        }
        rref_in_place(&mut rows);
        let inter: Vec<Vector> = rows
            .iter()
            .filter(|row| row[..d].iter().all(|e| e.is_zero()))
            .map(|row| Vector::new(row[d..].to_vec()))
            .collect();
        Ok(Subspace::span(d, &inter))
    }

    /// Orthogonal complement in the ambient space under the standard inner
    /// product: `{v : ⟨v,u⟩ = 0 for all u ∈ self}`.
    pub fn orth_complement(&self) -> Subspace {
        // ⟨v,u⟩ = Σ v_k conj(u_k), so v annihilates the conjugated basis rows.
        let rows: Vec<Vec<GaussianRational>> = self
            .basis
            .iter()
            .map(|u| u.entries().iter().map(|e| e.conj()).collect())
            .collect();
        let ns = nullspace(&rows, self.ambient);
        Subspace {
            ambient: self.ambient,
            basis: ns.into_iter().map(Vector::new).collect(),
        }
    }

    /// Orthogonal complement of `sub` within `self`: the unique `W ⊆ self`
    /// with `sub ⊕ W = self` and `W ⊥ sub`. Requires `sub ⊆ self`.
    pub fn orth_complement_within(&self, sub: &Subspace) -> Result<Subspace, SubspaceError> {
        self.check_ambient(sub)?;
        if !self.contains(sub) {
            return Err(SubspaceError::NotContained);
        }
        // Solve in coordinates over self's basis: combos orthogonal to sub.
        let rows: Vec<Vec<GaussianRational>> = sub
            .basis
            .iter()
            .map(|v| self.basis.iter().map(|u| u.inner(v)).collect())
            .collect();
        let coeffs = nullspace(&rows, self.dim());
        let vectors: Vec<Vector> = coeffs.iter().map(|c| self.from_coords(c)).collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    /// Orthogonal complement of `sub` within `self` under an arbitrary
    /// Hermitian positive-definite form, supplied as the exact Gram matrix of
    /// the form on `self`'s canonical basis.
    pub fn gram_orth_complement_within(
        &self,
        sub: &Subspace,
        gram: &Matrix,
    ) -> Result<Subspace, SubspaceError> {
        self.check_ambient(sub)?;
        if !self.contains(sub) {
            return Err(SubspaceError::NotContained);
        }
        assert_eq!(gram.rows(), self.dim(), "Gram size must match basis");
        if !gram.is_positive_definite() {
            return Err(SubspaceError::FormNotPositiveDefinite);
        }
        // [u,v] = Σ_{a,b} c_a conj(d_b) G[a][b] for u = Σ c_a f_a, v = Σ d_b f_b.
        let mut rows = Vec::new();
        for v in &sub.basis {
            let d = self
                .coords_of(v)
                .expect("containment checked above");
            let row: Vec<GaussianRational> = (0..self.dim())
                .map(|a| {
                    let mut acc = GaussianRational::zero();
                    for (b, db) in d.iter().enumerate() {
                        if !db.is_zero() {
                            acc += &(gram.at(a, b) * &db.conj());
                        }
                    }
                    acc
                })
                .collect();
            rows.push(row);
        }
        let coeffs = nullspace(&rows, self.dim());
        let vectors: Vec<Vector> = coeffs.iter().map(|c| self.from_coords(c)).collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    /// `dim(self / sub)`. Errors when `sub ⊄ self` — never silently
    /// intersects.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize, SubspaceError> {
        self.check_ambient(sub)?;
        if !self.contains(sub) {
            return Err(SubspaceError::NotContained);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Exact orthogonal projection of `v` onto this subspace under the
    /// standard inner product.
    pub fn project(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.ambient);
        if self.basis.is_empty() {
            return Vector::zero(self.ambient);
        }
        // Solve G c = r with G[k][j] = ⟨w_j, w_k⟩ and r[k] = ⟨v, w_k⟩ so that
        // v − Σ c_j w_j ⊥ every w_k.
        let k = self.dim();
        let columns: Vec<Vec<GaussianRational>> = (0..k)
            .map(|j| (0..k).map(|row| self.basis[j].inner(&self.basis[row])).collect())
            .collect();
        let rhs: Vec<GaussianRational> = (0..k).map(|row| v.inner(&self.basis[row])).collect();
        let coeffs = solve_columns(&columns, &rhs)
            .expect("Gram matrix of independent vectors is invertible");
        self.from_coords(&coeffs)
    }

    /// Image of the subspace under a linear map given entrywise.
    pub fn map(&self, new_ambient: usize, f: impl Fn(&Vector) -> Vector) -> Subspace {
        let images: Vec<Vector> = self
            .basis
            .iter()
            .map(|v| {
                let w = f(v);
                assert_eq!(w.dim(), new_ambient);
                w
            })
            .collect();
        Subspace::span(new_ambient, &images)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (k, v) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v:?}")?;
        }
        write!(f, "}} in C^{}", self.ambient)
    }
}
