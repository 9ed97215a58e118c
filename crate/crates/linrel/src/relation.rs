//! Linear relations: subspaces of X ⊕ X viewed as multivalued operators.
//!
//! A linear relation `T` on `X = C^n` is a subspace of the doubled space
//! `X² = C^{2n}` with coordinates ordered `(x₁…x_n, y₁…y_n)`. `T(x)` is the
//! set `{y : (x,y) ∈ T}`, so `T` may be non-densely defined and multivalued.
//! In finite dimensions every relation is closed, so the adjoint is a true
//! involution and all the classical duality identities are exact here.
//!
//! The adjoint T* = {(f,g) : ⟨g,x⟩ = ⟨f,y⟩ for all (x,y) ∈ T} is computed as
//! a twisted orthogonal complement: under the first-linear inner product
//! convention, (f,g) ∈ T* ⇔ (g,−f) ⊥ T in X². Direct constraint solving is
//! kept in the test module as an independent oracle.

use std::fmt;

use crate::linalg::{nullspace, solve_columns, Vector};
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationError {
    /// Operands are relations on spaces of different dimension.
    SpaceDimMismatch { left: usize, right: usize },
    /// `∔` or `⊕` was requested for relations with nontrivial intersection.
    IntersectionNotTrivial,
    /// `⊕` was requested for graphs that are not orthogonal in X².
    NotOrthogonal,
    /// A vector lies outside the domain of the relation.
    NotInDomain,
    /// Deficiency indices are only defined for Hermitian relations.
    NotHermitian,
}

impl fmt::Display for RelationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationError::SpaceDimMismatch { left, right } => {
                write!(f, "space dimension mismatch: {left} vs {right}")
            }
            RelationError::IntersectionNotTrivial => {
                write!(f, "relations intersect nontrivially")
            }
            RelationError::NotOrthogonal => write!(f, "graphs are not orthogonal"),
            RelationError::NotInDomain => write!(f, "vector is not in the domain"),
            RelationError::NotHermitian => write!(f, "relation is not Hermitian"),
        }
    }
}

impl std::error::Error for RelationError {}

/// A linear relation on `C^n`, stored as the canonical graph subspace of
/// `C^{2n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearRelation {
    space_dim: usize,
    graph: Subspace,
}

/// Operator and pure multivalued parts of a relation: `T = T_s ⊕ T_∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArensParts {
    pub op_part: LinearRelation,
    pub multi_part: LinearRelation,
}

/// Deficiency indices `n±(T) = dim M_{±i}(T)` of an Hermitian relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeficiencyPair {
    pub n_plus: usize,
    pub n_minus: usize,
}

impl LinearRelation {
    /// The relation spanned by the given `(x, y)` pairs.
    pub fn from_pairs(space_dim: usize, pairs: &[(Vector, Vector)]) -> Self {
        let vectors: Vec<Vector> = pairs
            .iter()
            .map(|(x, y)| {
                assert_eq!(x.dim(), space_dim, "x-part has wrong length");
                assert_eq!(y.dim(), space_dim, "y-part has wrong length");
                x.concat(y)
            })
            .collect();
        LinearRelation {
            space_dim,
            graph: Subspace::span(2 * space_dim, &vectors),
        }
    }

    /// Wraps an existing subspace of `C^{2n}` as a relation.
    pub fn from_graph(space_dim: usize, graph: Subspace) -> Self {
        assert_eq!(graph.ambient_dim(), 2 * space_dim);
        LinearRelation { space_dim, graph }
    }

    /// The trivial relation `{(0,0)}`.
    pub fn zero(space_dim: usize) -> Self {
        LinearRelation {
            space_dim,
            graph: Subspace::zero(2 * space_dim),
        }
    }

    /// The full relation `X × X`.
    pub fn everything(space_dim: usize) -> Self {
        LinearRelation {
            space_dim,
            graph: Subspace::full(2 * space_dim),
        }
    }

    /// Graph of the matrix acting by `x ↦ M x`, with `M` given by columns.
    pub fn graph_of_columns(columns: &[Vector]) -> Self {
        let n = columns.len();
        let pairs: Vec<(Vector, Vector)> = (0..n)
            .map(|k| (Vector::unit(n, k), columns[k].clone()))
            .collect();
        LinearRelation::from_pairs(n, &pairs)
    }

    /// Graph of multiplication by a scalar on `C^n`.
    pub fn scalar_graph(space_dim: usize, c: &GaussianRational) -> Self {
        let pairs: Vec<(Vector, Vector)> = (0..space_dim)
            .map(|k| {
                let e = Vector::unit(space_dim, k);
                let ce = e.scale(c);
                (e, ce)
            })
            .collect();
        LinearRelation::from_pairs(space_dim, &pairs)
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    /// Dimension of the graph subspace.
    pub fn dim(&self) -> usize {
        self.graph.dim()
    }

    pub fn graph(&self) -> &Subspace {
        &self.graph
    }

    fn check_same_space(&self, other: &LinearRelation) -> Result<(), RelationError> {
        if self.space_dim != other.space_dim {
            return Err(RelationError::SpaceDimMismatch {
                left: self.space_dim,
                right: other.space_dim,
            });
        }
        Ok(())
    }

    fn split(&self, v: &Vector) -> (Vector, Vector) {
        v.split_at(self.space_dim)
    }

    /// Domain `D(T) = {x : (x,y) ∈ T for some y}`.
    pub fn domain(&self) -> Subspace {
        self.graph
            .map(self.space_dim, |v| v.split_at(self.space_dim).0)
    }

    /// Range `R(T) = {y : (x,y) ∈ T for some x}`.
    pub fn range(&self) -> Subspace {
        self.graph
            .map(self.space_dim, |v| v.split_at(self.space_dim).1)
    }

    /// Null space `N(T) = {x : (x,0) ∈ T}`.
    pub fn null_space(&self) -> Subspace {
        // Combinations of graph basis vectors with vanishing y-part; the
        // kernel lives in coefficient space, which keeps this cheap.
        let rows: Vec<Vec<GaussianRational>> = (0..self.space_dim)
            .map(|coord| {
                self.graph
                    .basis()
                    .iter()
                    .map(|b| b[self.space_dim + coord].clone())
                    .collect()
            })
            .collect();
        let coeffs = nullspace(&rows, self.graph.dim());
        let vectors: Vec<Vector> = coeffs
            .iter()
            .map(|c| self.graph.from_coords(c).split_at(self.space_dim).0)
            .collect();
        Subspace::span(self.space_dim, &vectors)
    }

    /// Multivalued part `T(0) = {y : (0,y) ∈ T}`.
    pub fn multi(&self) -> Subspace {
        // In canonical graph form, a combination has zero x-part iff it uses
        // only basis vectors whose pivot lies in the y-block.
        let vectors: Vec<Vector> = self
            .graph
            .basis()
            .iter()
            .filter(|b| b.pivot().map_or(false, |p| p >= self.space_dim))
            .map(|b| b.split_at(self.space_dim).1)
            .collect();
        Subspace::span(self.space_dim, &vectors)
    }

    /// `T(x)` as a coset: a representative together with `T(0)`. The
    /// representative is absent iff `x ∉ D(T)`.
    pub fn image_of(&self, x: &Vector) -> (Option<Vector>, Subspace) {
        assert_eq!(x.dim(), self.space_dim);
        let columns: Vec<Vec<GaussianRational>> = self
            .graph
            .basis()
            .iter()
            .map(|b| b.entries()[..self.space_dim].to_vec())
            .collect();
        let rep = solve_columns(&columns, x.entries()).map(|coeffs| {
            self.graph.from_coords(&coeffs).split_at(self.space_dim).1
        });
        (rep, self.multi())
    }

    /// `αT = {(x, αy) : (x,y) ∈ T}`.
    pub fn scalar_mul(&self, alpha: &GaussianRational) -> LinearRelation {
        let graph = self.graph.map(2 * self.space_dim, |v| {
            let (x, y) = self.split(v);
            x.concat(&y.scale(alpha))
        });
        LinearRelation::from_graph(self.space_dim, graph)
    }

    /// Coupled sum `T + A = {(x, y+z) : (x,y) ∈ T, (x,z) ∈ A}` per the
    /// relation calculus — not the elementwise sum of graphs.
    pub fn rel_sum(&self, other: &LinearRelation) -> Result<LinearRelation, RelationError> {
        self.check_same_space(other)?;
        let n = self.space_dim;
        // Coefficients (c, d) over the two graph bases subject to the shared
        // x constraints: x-part(T combo) = x-part(A combo).
        let kt = self.graph.dim();
        let ka = other.graph.dim();
        let rows: Vec<Vec<GaussianRational>> = (0..n)
            .map(|coord| {
                let mut row = Vec::with_capacity(kt + ka);
                for b in self.graph.basis() {
                    row.push(b[coord].clone());
                }
                for b in other.graph.basis() {
                    row.push(-&b[coord]);
                }
                row
            })
            .collect();
        let coeffs = nullspace(&rows, kt + ka);
        let vectors: Vec<Vector> = coeffs
            .iter()
            .map(|cd| {
                let t = self.graph.from_coords(&cd[..kt]);
                let a = other.graph.from_coords(&cd[kt..]);
                let (x, y) = self.split(&t);
                let (_, z) = other.split(&a);
                x.concat(&(&y + &z))
            })
            .collect();
        Ok(LinearRelation::from_graph(n, Subspace::span(2 * n, &vectors)))
    }

    /// `T − α = {(x, y − αx) : (x,y) ∈ T}`.
    pub fn shift(&self, alpha: &GaussianRational) -> LinearRelation {
        let graph = self.graph.map(2 * self.space_dim, |v| {
            let (x, y) = self.split(v);
            let mut w = y;
            w.sub_scaled(alpha, &x);
            x.concat(&w)
        });
        LinearRelation::from_graph(self.space_dim, graph)
    }

    /// `T⁻¹ = {(y,x) : (x,y) ∈ T}`.
    pub fn inverse(&self) -> LinearRelation {
        let graph = self.graph.map(2 * self.space_dim, |v| {
            let (x, y) = self.split(v);
            y.concat(&x)
        });
        LinearRelation::from_graph(self.space_dim, graph)
    }

    /// `T ∔ A`, defined when `T ∩ A = {(0,0)}`.
    pub fn direct_sum(&self, other: &LinearRelation) -> Result<LinearRelation, RelationError> {
        self.check_same_space(other)?;
        let inter = self.graph.intersect(&other.graph).expect("same ambient");
        if !inter.is_zero() {
            return Err(RelationError::IntersectionNotTrivial);
        }
        let graph = self.graph.sum(&other.graph).expect("same ambient");
        Ok(LinearRelation::from_graph(self.space_dim, graph))
    }

    /// `T ⊕ A`: the direct sum when additionally the graphs are orthogonal
    /// in X².
    pub fn orth_sum(&self, other: &LinearRelation) -> Result<LinearRelation, RelationError> {
        self.check_same_space(other)?;
        for u in self.graph.basis() {
            for v in other.graph.basis() {
                if !u.inner(v).is_zero() {
                    return Err(RelationError::NotOrthogonal);
                }
            }
        }
        self.direct_sum(other)
    }

    /// Product `AT = {(x,z) : (x,y) ∈ T, (y,z) ∈ A for some y}`, computed by
    /// one stacked kernel over the coefficient spaces of both graphs coupled
    /// through the middle vector — exact and polynomial, no iteration over
    /// representatives. `self` is `A`, the outer factor.
    pub fn product(&self, t: &LinearRelation) -> Result<LinearRelation, RelationError> {
        self.check_same_space(t)?;
        let n = self.space_dim;
        let kt = t.graph.dim();
        let ka = self.graph.dim();
        // y-part of the T combo must equal the x-part of the A combo.
        let rows: Vec<Vec<GaussianRational>> = (0..n)
            .map(|coord| {
                let mut row = Vec::with_capacity(kt + ka);
                for b in t.graph.basis() {
                    row.push(b[n + coord].clone());
                }
                for b in self.graph.basis() {
                    row.push(-&b[coord]);
                }
                row
            })
            .collect();
        let coeffs = nullspace(&rows, kt + ka);
        let vectors: Vec<Vector> = coeffs
            .iter()
            .map(|cd| {
                let tv = t.graph.from_coords(&cd[..kt]);
                let av = self.graph.from_coords(&cd[kt..]);
                let (x, _) = t.split(&tv);
                let (_, z) = self.split(&av);
                x.concat(&z)
            })
            .collect();
        Ok(LinearRelation::from_graph(n, Subspace::span(2 * n, &vectors)))
    }

    /// Adjoint `T* = {(f,g) : ⟨g,x⟩ = ⟨f,y⟩ for all (x,y) ∈ T}`, via the
    /// twisted orthogonal complement `(f,g) ∈ T* ⇔ (g,−f) ⊥ T`.
    pub fn adjoint(&self) -> LinearRelation {
        let n = self.space_dim;
        let complement = self.graph.orth_complement();
        let graph = complement.map(2 * n, |w| {
            let (a, b) = self.split(w);
            // (a,b) ⊥ T corresponds to (f,g) = (−b, a)
            (-&b).concat(&a)
        });
        LinearRelation::from_graph(n, graph)
    }

    /// Arens decomposition `T = T_s ⊕ T_∞` with `T_∞ = {0} × T(0)` and the
    /// operator part `T_s` orthogonal to `T_∞` in X². The defining
    /// properties are re-verified before returning; a failure would be an
    /// implementation bug, so it panics.
    pub fn arens_decompose(&self) -> ArensParts {
        let n = self.space_dim;
        let t0 = self.multi();
        let multi_graph = Subspace::span(
            2 * n,
            &t0.basis()
                .iter()
                .map(|y| Vector::zero(n).concat(y))
                .collect::<Vec<_>>(),
        );
        let op_graph = self
            .graph
            .orth_complement_within(&multi_graph)
            .expect("T_∞ is a subspace of T");
        let op_part = LinearRelation::from_graph(n, op_graph);
        let multi_part = LinearRelation::from_graph(n, multi_graph);
        assert!(
            op_part.multi().is_zero(),
            "operator part must be single-valued"
        );
        assert_eq!(op_part.domain(), self.domain(), "D(T_s) must equal D(T)");
        assert!(
            t0.orth_complement().contains(&op_part.range()),
            "R(T_s) must lie in T(0)^⊥"
        );
        assert_eq!(
            op_part
                .orth_sum(&multi_part)
                .expect("parts are orthogonal with trivial intersection"),
            *self,
            "T_s ⊕ T_∞ must reconstruct T"
        );
        ArensParts { op_part, multi_part }
    }

    /// Applies the operator part: the unique `y ∈ T(f)` with `y ⊥ T(0)`.
    pub fn apply_operator_part(&self, f: &Vector) -> Result<Vector, RelationError> {
        let (rep, t0) = self.image_of(f);
        let rep = rep.ok_or(RelationError::NotInDomain)?;
        Ok(&rep - &t0.project(&rep))
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint().graph.contains(&self.graph)
    }

    pub fn is_selfadjoint(&self) -> bool {
        self.adjoint() == *self
    }

    /// `M_λ(T) = N(T* − λ) = {f : (f, λf) ∈ T*}`.
    pub fn m_lambda(&self, lambda: &GaussianRational) -> Subspace {
        self.adjoint().shift(lambda).null_space()
    }

    /// Deficiency indices `(dim M_{+i}, dim M_{−i})`. Only defined for
    /// Hermitian relations.
    pub fn deficiency(&self) -> Result<DeficiencyPair, RelationError> {
        if !self.is_hermitian() {
            return Err(RelationError::NotHermitian);
        }
        let i = GaussianRational::i();
        Ok(DeficiencyPair {
            n_plus: self.m_lambda(&i).dim(),
            n_minus: self.m_lambda(&(-GaussianRational::i())).dim(),
        })
    }

    /// First von Neumann formula cross-check:
    /// `T* = T ∔ N̂₊ ∔ N̂₋` with `N̂± = {(f, ±i·f) : f ∈ M_{±i}}`,
    /// pairwise trivial intersections and matching dimension count.
    pub fn von_neumann_check(&self) -> Result<bool, RelationError> {
        if !self.is_hermitian() {
            return Err(RelationError::NotHermitian);
        }
        let n = self.space_dim;
        let adjoint = self.adjoint();
        let i = GaussianRational::i();
        let hat = |m: &Subspace, lam: &GaussianRational| -> LinearRelation {
            let pairs: Vec<(Vector, Vector)> = m
                .basis()
                .iter()
                .map(|f| (f.clone(), f.scale(lam)))
                .collect();
            LinearRelation::from_pairs(n, &pairs)
        };
        let n_plus = hat(&self.m_lambda(&i), &i);
        let n_minus = hat(&self.m_lambda(&(-i.clone())), &(-i.clone()));
        let Ok(partial) = self.direct_sum(&n_plus) else {
            return Ok(false);
        };
        let Ok(total) = partial.direct_sum(&n_minus) else {
            return Ok(false);
        };
        Ok(total == adjoint
            && self.dim() + n_plus.dim() + n_minus.dim() == 2 * n - self.dim())
    }
}

impl fmt::Debug for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearRelation(n={}, dim={}) {:?}",
            self.space_dim, self.graph.dim(), self.graph
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gi(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    fn v(coords: &[(i64, i64)]) -> Vector {
        Vector::from_ints(coords)
    }

    /// Multiplication by i on C¹.
    fn mult_by_i() -> LinearRelation {
        LinearRelation::scalar_graph(1, &GaussianRational::i())
    }

    /// G1 = span{(e1, e2)} on C².
    fn g1() -> LinearRelation {
        LinearRelation::from_pairs(2, &[(Vector::unit(2, 0), Vector::unit(2, 1))])
    }

    /// SA1 = graph(diag(1,2)) on C².
    fn sa1() -> LinearRelation {
        LinearRelation::graph_of_columns(&[v(&[(1, 0), (0, 0)]), v(&[(0, 0), (2, 0)])])
    }

    /// SA2 = span{(e1,e1), (0,e2)} on C².
    fn sa2() -> LinearRelation {
        LinearRelation::from_pairs(
            2,
            &[
                (Vector::unit(2, 0), Vector::unit(2, 0)),
                (Vector::zero(2), Vector::unit(2, 1)),
            ],
        )
    }

    /// M0 = {0} × C on C¹.
    fn m0() -> LinearRelation {
        LinearRelation::from_pairs(1, &[(Vector::zero(1), v(&[(1, 0)]))])
    }

    /// Adjoint computed by direct constraint solving — the independent
    /// oracle for the twisted-complement implementation.
    fn adjoint_oracle(t: &LinearRelation) -> LinearRelation {
        let n = t.space_dim();
        // Unknown w = (f,g): for each (x,y) in the graph basis,
        // ⟨g,x⟩ − ⟨f,y⟩ = 0, i.e. Σ_k conj(x_k)·g_k − conj(y_k)·f_k = 0.
        let rows: Vec<Vec<GaussianRational>> = t
            .graph()
            .basis()
            .iter()
            .map(|b| {
                let (x, y) = b.split_at(n);
                let mut row = Vec::with_capacity(2 * n);
                for k in 0..n {
                    row.push(-y[k].conj());
                }
                for k in 0..n {
                    row.push(x[k].conj());
                }
                row
            })
            .collect();
        let ns = nullspace(&rows, 2 * n);
        let vectors: Vec<Vector> = ns.into_iter().map(Vector::new).collect();
        LinearRelation::from_graph(n, Subspace::span(2 * n, &vectors))
    }

    #[test]
    fn construction_examples() {
        assert_eq!(mult_by_i().dim(), 1);
        assert_eq!(g1().dim(), 1);
        assert_eq!(LinearRelation::from_pairs(1, &[]).dim(), 0);
    }

    #[test]
    fn parts_of_g1() {
        let t = g1();
        assert_eq!(t.domain(), Subspace::span(2, &[Vector::unit(2, 0)]));
        assert_eq!(t.range(), Subspace::span(2, &[Vector::unit(2, 1)]));
        assert!(t.null_space().is_zero());
        assert!(t.multi().is_zero());
    }

    #[test]
    fn parts_of_pure_multivalued() {
        let t = m0();
        assert!(t.domain().is_zero());
        assert_eq!(t.range(), Subspace::full(1));
        assert_eq!(t.multi(), Subspace::full(1));
        assert_eq!(t.null_space(), Subspace::zero(1));
    }

    #[test]
    fn image_outside_domain_has_no_representative() {
        let (rep, coset) = g1().image_of(&Vector::unit(2, 1));
        assert!(rep.is_none());
        assert!(coset.is_zero());
    }

    #[test]
    fn image_inside_domain() {
        let (rep, _) = g1().image_of(&Vector::unit(2, 0));
        assert_eq!(rep.unwrap(), Vector::unit(2, 1));
    }

    #[test]
    fn algebra_examples() {
        // shift(mult-by-i, i) has graph {(x, 0)}
        let shifted = mult_by_i().shift(&GaussianRational::i());
        assert_eq!(
            shifted,
            LinearRelation::scalar_graph(1, &GaussianRational::zero())
        );
        // graph(2) + graph(3) = graph(5) on C¹
        let two = LinearRelation::scalar_graph(1, &gi(2, 0));
        let three = LinearRelation::scalar_graph(1, &gi(3, 0));
        let five = LinearRelation::scalar_graph(1, &gi(5, 0));
        assert_eq!(two.rel_sum(&three).unwrap(), five);
        // inverse swaps coordinates
        assert_eq!(
            g1().inverse(),
            LinearRelation::from_pairs(2, &[(Vector::unit(2, 1), Vector::unit(2, 0))])
        );
        // scalar multiple
        assert_eq!(
            two.scalar_mul(&gi(3, 0)),
            LinearRelation::scalar_graph(1, &gi(6, 0))
        );
    }

    #[test]
    fn rel_sum_couples_on_common_x() {
        // T = G1 (domain e1), A = span{(e2, e1)} (domain e2): common x = 0,
        // so T + A is the trivial relation, not the sum of graphs.
        let t = g1();
        let a = LinearRelation::from_pairs(2, &[(Vector::unit(2, 1), Vector::unit(2, 0))]);
        let s = t.rel_sum(&a).unwrap();
        assert_eq!(s, LinearRelation::zero(2));
    }

    #[test]
    fn product_examples() {
        let two = LinearRelation::scalar_graph(1, &gi(2, 0));
        let three = LinearRelation::scalar_graph(1, &gi(3, 0));
        assert_eq!(
            three.product(&two).unwrap(),
            LinearRelation::scalar_graph(1, &gi(6, 0))
        );
        // (X×{0}) ∘ ({0}×X) on C¹: T = {0}×X forces x = 0, A = X×{0} forces
        // z = 0, so the product is the zero relation.
        let t = m0();
        let a = m0().inverse();
        assert_eq!(a.product(&t).unwrap(), LinearRelation::zero(1));
    }

    #[test]
    fn product_of_g1_star_with_itself_is_everything() {
        // G1* = {(f,g) : g₁ = f₂}; the middle vector's free second
        // coordinate realizes any z₁, so G1*·G1* = C²×C².
        let star = g1().adjoint();
        let prod = star.product(&star).unwrap();
        assert_eq!(prod, LinearRelation::everything(2));
        // brute-force oracle over a spanning set: every (e_j, e_k) pair must
        // be reachable; dimension 4 certifies it.
        assert_eq!(prod.dim(), 4);
    }

    #[test]
    fn adjoint_examples() {
        // adjoint of mult-by-i is mult-by-(−i): solve ⟨g,x⟩ = ⟨f,ix⟩ ∀x
        assert_eq!(
            mult_by_i().adjoint(),
            LinearRelation::scalar_graph(1, &(-GaussianRational::i()))
        );
        // {0}×X and X×{0} are self-adjoint
        assert_eq!(m0().adjoint(), m0());
        let x0 = m0().inverse();
        assert_eq!(x0.adjoint(), x0);
        // G1* = {(f,g) : g₁ = f₂} has dimension 3 and contains the
        // defining constraint's solutions
        let star = g1().adjoint();
        assert_eq!(star.dim(), 3);
        assert!(star
            .graph()
            .contains_vector(&v(&[(0, 0), (1, 0), (1, 0), (0, 0)])));
        assert!(star
            .graph()
            .contains_vector(&v(&[(1, 0), (0, 0), (0, 0), (1, 0)])));
    }

    #[test]
    fn arens_examples() {
        // pure multivalued: op part trivial
        let parts = m0().arens_decompose();
        assert_eq!(parts.op_part, LinearRelation::zero(1));
        assert_eq!(parts.multi_part, m0());
        // graphs are single-valued: multi part trivial
        let parts = sa1().arens_decompose();
        assert_eq!(parts.op_part, sa1());
        assert_eq!(parts.multi_part, LinearRelation::zero(2));
        // SA2: (a·e1, a·e1 + b·e2) ⊥ (0, e2) forces b = 0
        let parts = sa2().arens_decompose();
        assert_eq!(
            parts.op_part,
            LinearRelation::from_pairs(2, &[(Vector::unit(2, 0), Vector::unit(2, 0))])
        );
        assert_eq!(
            parts.multi_part,
            LinearRelation::from_pairs(2, &[(Vector::zero(2), Vector::unit(2, 1))])
        );
    }

    #[test]
    fn operator_part_application() {
        // T = G1*: apply to e1 → (0,0) since the representative must be ⊥
        // span{e2} and have first coordinate f₂ = 0
        let star = g1().adjoint();
        assert_eq!(
            star.apply_operator_part(&Vector::unit(2, 0)).unwrap(),
            Vector::zero(2)
        );
        // T = SA2, f = e1 → e1 (projection kills the e2 coset)
        assert_eq!(
            sa2().apply_operator_part(&Vector::unit(2, 0)).unwrap(),
            Vector::unit(2, 0)
        );
        // single-valued graph: plain application
        assert_eq!(
            sa1().apply_operator_part(&Vector::unit(2, 1)).unwrap(),
            Vector::unit(2, 1).scale(&gi(2, 0))
        );
        // outside the domain
        assert_eq!(
            g1().apply_operator_part(&Vector::unit(2, 1)),
            Err(RelationError::NotInDomain)
        );
    }

    #[test]
    fn hermitian_and_selfadjoint_predicates() {
        assert!(sa1().is_hermitian());
        assert!(sa1().is_selfadjoint());
        assert!(g1().is_hermitian());
        assert!(!g1().is_selfadjoint());
        assert!(!mult_by_i().is_hermitian());
        assert!(sa2().is_selfadjoint());
    }

    #[test]
    fn m_lambda_and_deficiency() {
        // Z = {(0,0)} on C¹: T* = C², M_λ = C for every λ
        let z = LinearRelation::zero(1);
        for lam in [gi(0, 1), gi(0, 2), gi(1, 1)] {
            assert_eq!(z.m_lambda(&lam), Subspace::full(1));
        }
        assert_eq!(
            z.deficiency().unwrap(),
            DeficiencyPair { n_plus: 1, n_minus: 1 }
        );
        // G1: M_λ = {f : λf₁ = f₂}, one-dimensional for every λ
        let t = g1();
        for lam in [gi(0, 1), gi(2, 0), gi(1, 1)] {
            let m = t.m_lambda(&lam);
            assert_eq!(m.dim(), 1);
            assert!(m.contains_vector(&Vector::new(vec![
                GaussianRational::one(),
                lam.clone()
            ])));
        }
        assert_eq!(
            t.deficiency().unwrap(),
            DeficiencyPair { n_plus: 1, n_minus: 1 }
        );
        // self-adjoint: deficiency (0,0)
        assert_eq!(
            sa1().deficiency().unwrap(),
            DeficiencyPair { n_plus: 0, n_minus: 0 }
        );
        // non-Hermitian input is an explicit error
        assert_eq!(mult_by_i().deficiency(), Err(RelationError::NotHermitian));
    }

    #[test]
    fn von_neumann_formula() {
        assert!(LinearRelation::zero(1).von_neumann_check().unwrap());
        assert!(sa1().von_neumann_check().unwrap());
        assert!(g1().von_neumann_check().unwrap());
        assert_eq!(
            mult_by_i().von_neumann_check(),
            Err(RelationError::NotHermitian)
        );
    }

    #[test]
    fn direct_sum_preconditions() {
        let t = g1();
        assert_eq!(
            t.direct_sum(&t),
            Err(RelationError::IntersectionNotTrivial)
        );
        // non-orthogonal but independent graphs are rejected by ⊕
        let a = LinearRelation::from_pairs(
            2,
            &[(Vector::unit(2, 0), &Vector::unit(2, 1) + &Vector::unit(2, 0))],
        );
        assert_eq!(t.orth_sum(&a), Err(RelationError::NotOrthogonal));
        assert!(t.direct_sum(&a).is_ok());
    }

    // -- randomized properties ------------------------------------------------

    fn arb_relation(n: usize) -> impl Strategy<Value = LinearRelation> {
        proptest::collection::vec(
            proptest::collection::vec((-3i64..=3, -3i64..=3), 2 * n),
            0..=2 * n,
        )
        .prop_map(move |rows| {
            let vectors: Vec<Vector> = rows.iter().map(|r| Vector::from_ints(r)).collect();
            LinearRelation::from_graph(n, Subspace::span(2 * n, &vectors))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn adjoint_matches_constraint_oracle(t in arb_relation(3)) {
            prop_assert_eq!(t.adjoint(), adjoint_oracle(&t));
        }

        #[test]
        fn adjoint_is_involution_with_dim_count(t in arb_relation(3)) {
            let star = t.adjoint();
            prop_assert_eq!(t.dim() + star.dim(), 6);
            prop_assert_eq!(star.adjoint(), t.clone());
        }

        #[test]
        fn kernel_range_duality(t in arb_relation(3)) {
            let star = t.adjoint();
            prop_assert_eq!(star.multi(), t.domain().orth_complement());
            prop_assert_eq!(star.null_space(), t.range().orth_complement());
            prop_assert_eq!(star.domain(), t.multi().orth_complement());
        }

        #[test]
        fn arens_reconstruction(t in arb_relation(3)) {
            let parts = t.arens_decompose();
            prop_assert!(parts.op_part.multi().is_zero());
            prop_assert_eq!(parts.op_part.domain(), t.domain());
            let rebuilt = parts.op_part.orth_sum(&parts.multi_part).unwrap();
            prop_assert_eq!(rebuilt, t);
        }

        #[test]
        fn product_adjoint_antihomomorphism_containment(
            a in arb_relation(2),
            t in arb_relation(2),
        ) {
            let lhs = a.product(&t).unwrap().adjoint();
            let rhs = t.adjoint().product(&a.adjoint()).unwrap();
            // (AT)* ⊇ T*A*; equality can fail for relations.
            prop_assert!(lhs.graph().contains(rhs.graph()));
        }
    }
}
