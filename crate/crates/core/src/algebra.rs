//! Finite-dimensional algebras given by structure constants.
//!
//! `[b_i, b_j] = Σ_k c[i][j][k] b_k`. Nothing about the bracket is assumed: being
//! Leibniz or Lie is a computed predicate. Because every identity checked here
//! is multilinear, checking it on basis vectors is complete.

use std::fmt;

use crate::linalg::{sparse::SparseVec, LinalgError, Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("vector has length {found}, algebra has dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected {expected} basis labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("basis change matrix is singular")]
    SingularBasisChange,
    #[error("basis change matrix must be {dim}x{dim}")]
    BasisChangeShape { dim: usize },
    #[error("span of the given basis vectors is not closed under the bracket")]
    NotSubalgebra,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Default labels `e1..en` followed by `x`, `y` (then `x3`, `x4`, ... if needed).
pub fn default_labels(nilpotent_dim: usize, complement_dim: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=nilpotent_dim).map(|i| format!("e{i}")).collect();
    for k in 0..complement_dim {
        labels.push(match k {
            0 => "x".to_string(),
            1 => "y".to_string(),
            _ => format!("x{}", k + 1),
        });
    }
    labels
}

/// An algebra over Q given by its structure tensor.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    c: Vec<Rational>,
    table: Vec<SparseVec>,
}

/// Mutable builder; brackets not set are zero.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    dim: usize,
    labels: Vec<String>,
    c: Vec<Rational>,
}

impl AlgebraBuilder {
    pub fn labels(mut self, labels: Vec<String>) -> Self {
        self.labels = labels;
        self
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        assert!(i < self.dim && j < self.dim && k < self.dim, "basis index out of range");
        (i * self.dim + j) * self.dim + k
    }

    /// Sets `c[i][j][k] = v`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) -> &mut Self {
        let s = self.slot(i, j, k);
        self.c[s] = v;
        self
    }

    /// Adds `v` to `c[i][j][k]`.
    pub fn add(&mut self, i: usize, j: usize, k: usize, v: Rational) -> &mut Self {
        let s = self.slot(i, j, k);
        self.c[s] += v;
        self
    }

    /// Sets `[b_i, b_j] ∋ v b_k` and `[b_j, b_i] ∋ -v b_k`.
    pub fn antisym(&mut self, i: usize, j: usize, k: usize, v: Rational) -> &mut Self {
        let neg = -&v;
        self.set(i, j, k, v);
        self.set(j, i, k, neg)
    }

    pub fn build(self) -> Result<Algebra, AlgebraError> {
        Algebra::from_tensor(self.dim, self.labels, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// `terms[0]` is the whole algebra.
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    /// Minimal `k` with the `k`-th term zero (terms are numbered from 1).
    pub nil_index: Option<usize>,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

/// One nonzero value of the Leibniz defect `L(b_i, b_j, b_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Vec<Rational>,
}

impl Algebra {
    pub fn builder(dim: usize) -> AlgebraBuilder {
        AlgebraBuilder {
            dim,
            labels: default_labels(dim, 0),
            c: vec![Rational::ZERO; dim * dim * dim],
        }
    }

    pub fn abelian(dim: usize) -> Algebra {
        Algebra::builder(dim).build().expect("abelian algebra is well formed")
    }

    pub fn from_tensor(dim: usize, labels: Vec<String>, c: Vec<Rational>) -> Result<Self, AlgebraError> {
        if c.len() != dim * dim * dim {
            return Err(AlgebraError::LengthMismatch {
                expected: dim * dim * dim,
                found: c.len(),
            });
        }
        if labels.len() != dim {
            return Err(AlgebraError::LabelCount {
                expected: dim,
                found: labels.len(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(AlgebraError::DuplicateLabel(l.clone()));
            }
        }
        let table = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter(|&k| !c[ij * dim + k].is_zero())
                    .map(|k| (k, c[ij * dim + k].clone()))
                    .collect()
            })
            .collect();
        Ok(Self { dim, labels, c, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Algebra, AlgebraError> {
        Algebra::from_tensor(self.dim, labels, self.c.clone())
    }

    pub fn tensor(&self) -> &[Rational] {
        &self.c
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// `[b_i, b_j]` as a sparse vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    /// Every nonzero structure constant as `(i, j, k, c_ijk)`.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        (0..self.dim * self.dim).flat_map(move |ij| {
            self.table[ij]
                .iter()
                .map(move |(k, v)| (ij / self.dim, ij % self.dim, *k, v))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|t| t.is_empty())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::ZERO; self.dim];
        v[i] = Rational::ONE;
        v
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), AlgebraError> {
        if v.len() != self.dim {
            return Err(AlgebraError::LengthMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the bracket to arbitrary vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; self.dim];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let uv = ui * vj;
                for (k, c) in self.basis_bracket(i, j) {
                    out[*k] += &uv * c;
                }
            }
        }
        out
    }

    /// `[b_i, v]`.
    fn bracket_basis_left(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; self.dim];
        for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, c) in self.basis_bracket(i, j) {
                out[*k] += vj * c;
            }
        }
        out
    }

    /// `[v, b_j]`.
    fn bracket_basis_right(&self, v: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; self.dim];
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, c) in self.basis_bracket(i, j) {
                out[*k] += vi * c;
            }
        }
        out
    }

    /// Leibniz defect `[x,[y,z]] - [[x,y],z] + [[x,z],y]` on one basis triple.
    pub fn leibniz_defect(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let yz = self.bracket_basis_left(j, &self.basis_vector(k));
        let xy = self.bracket_basis_left(i, &self.basis_vector(j));
        let xz = self.bracket_basis_left(i, &self.basis_vector(k));
        let a = self.bracket_basis_left(i, &yz);
        let b = self.bracket_basis_right(&xy, k);
        let c = self.bracket_basis_right(&xz, j);
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a - b + c).collect()
    }

    /// Every basis triple with a nonzero Leibniz defect. Empty iff the algebra is Leibniz.
    pub fn leibniz_residual(&self) -> Vec<Residual> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let value = self.leibniz_defect(i, j, k);
                    if value.iter().any(|v| !v.is_zero()) {
                        out.push(Residual { i, j, k, value });
                    }
                }
            }
        }
        out
    }

    pub fn is_leibniz(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.leibniz_defect(i, j, k).iter().all(Rational::is_zero))))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (i..n).all(|j| (0..n).all(|k| *self.structure_constant(i, j, k) == -self.structure_constant(j, i, k)))
        })
    }

    /// Antisymmetric and Leibniz; for antisymmetric brackets the Leibniz identity is Jacobi.
    pub fn is_lie(&self) -> bool {
        self.is_antisymmetric() && self.is_leibniz()
    }

    /// Span of `[a, b]` over basis representatives of `a_space` and `b_space`.
    pub fn product_space(&self, a_space: &Subspace, b_space: &Subspace) -> Result<Subspace, AlgebraError> {
        if a_space.ambient_dim() != self.dim || b_space.ambient_dim() != self.dim {
            return Err(AlgebraError::LengthMismatch {
                expected: self.dim,
                found: a_space.ambient_dim().max(b_space.ambient_dim()),
            });
        }
        let mut prods = Vec::new();
        for a in a_space.basis_vectors() {
            for b in b_space.basis_vectors() {
                prods.push(self.bracket_unchecked(&a, &b));
            }
        }
        Ok(Subspace::span(self.dim, &prods)?)
    }

    pub fn series(&self, kind: SeriesKind) -> SeriesReport {
        let whole = Subspace::full(self.dim);
        let mut terms = vec![whole.clone()];
        loop {
            let last = terms.last().expect("non-empty series");
            if last.is_zero() {
                let k = terms.len();
                return SeriesReport {
                    kind,
                    terms,
                    stabilized: false,
                    nil_index: Some(k),
                };
            }
            let next = match kind {
                SeriesKind::LowerCentral => self.product_space(last, &whole),
                SeriesKind::Derived => self.product_space(last, last),
            }
            .expect("subspaces live in this algebra");
            if &next == last {
                return SeriesReport {
                    kind,
                    terms,
                    stabilized: true,
                    nil_index: None,
                };
            }
            terms.push(next);
        }
    }

    pub fn nil_index(&self) -> Option<usize> {
        self.series(SeriesKind::LowerCentral).nil_index
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nil_index().is_some()
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).nil_index.is_some()
    }

    /// Matrix of `v ↦ [v, u]` (column `j` is `[b_j, u]`).
    pub fn right_multiplication(&self, u: &[Rational]) -> Result<Matrix, AlgebraError> {
        self.check_len(u)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, v) in self.bracket_basis_left(j, u).into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        Ok(m)
    }

    /// Matrix of `v ↦ [u, v]`.
    pub fn left_multiplication(&self, u: &[Rational]) -> Result<Matrix, AlgebraError> {
        self.check_len(u)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, v) in self.bracket_basis_right(u, j).into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        Ok(m)
    }

    /// Null space of the stacked conditions `[z, b_i] = 0` and/or `[b_i, z] = 0`.
    fn annihilator(&self, left: bool, right: bool) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            // coefficient of z_m in component k
            for (enabled, z_first) in [(left, true), (right, false)] {
                if !enabled {
                    continue;
                }
                let mut block = vec![vec![Rational::ZERO; n]; n];
                for m in 0..n {
                    let terms = if z_first { self.basis_bracket(m, i) } else { self.basis_bracket(i, m) };
                    for (k, c) in terms {
                        block[*k][m] += c;
                    }
                }
                rows.extend(block);
            }
        }
        Matrix::from_rows(n, &rows).expect("uniform rows").null_space()
    }

    /// `{z : [z, b_i] = [b_i, z] = 0 for all i}`.
    pub fn center(&self) -> Subspace {
        self.annihilator(true, true)
    }

    /// `{z : [b_i, z] = 0 for all i}`.
    pub fn right_annihilator(&self) -> Subspace {
        self.annihilator(false, true)
    }

    /// `{z : [z, b_i] = 0 for all i}`.
    pub fn left_annihilator(&self) -> Subspace {
        self.annihilator(true, false)
    }

    /// Two-sided ideal test: `[s, L] ⊆ s` and `[L, s] ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        let whole = Subspace::full(self.dim);
        let right = self.product_space(s, &whole)?;
        let left = self.product_space(&whole, s)?;
        Ok(s.contains_subspace(&right)? && s.contains_subspace(&left)?)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        Ok(s.contains_subspace(&self.product_space(s, s)?)?)
    }

    /// The algebra restricted to the span of the given basis vectors, in that order.
    pub fn restrict_to(&self, indices: &[usize]) -> Result<Algebra, AlgebraError> {
        for &i in indices {
            if i >= self.dim {
                return Err(AlgebraError::IndexOutOfRange { index: i, dim: self.dim });
            }
        }
        let mut pos = vec![None; self.dim];
        for (p, &i) in indices.iter().enumerate() {
            pos[i] = Some(p);
        }
        let m = indices.len();
        let mut b = Algebra::builder(m).labels(indices.iter().map(|&i| self.labels[i].clone()).collect());
        for (pi, &i) in indices.iter().enumerate() {
            for (pj, &j) in indices.iter().enumerate() {
                for (k, v) in self.basis_bracket(i, j) {
                    match pos[*k] {
                        Some(pk) => {
                            b.set(pi, pj, pk, v.clone());
                        }
                        None => return Err(AlgebraError::NotSubalgebra),
                    }
                }
            }
        }
        b.build()
    }

    /// Transport along `g`: `(g*λ)(x, y) = g λ(g⁻¹x, g⁻¹y)`. Labels are kept.
    pub fn change_basis(&self, g: &Matrix) -> Result<Algebra, AlgebraError> {
        if g.rows() != self.dim || g.cols() != self.dim {
            return Err(AlgebraError::BasisChangeShape { dim: self.dim });
        }
        let h = g.inverse().map_err(|_| AlgebraError::SingularBasisChange)?;
        let n = self.dim;
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| h.column(j)).collect();
        let mut c = vec![Rational::ZERO; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let w = self.bracket_unchecked(&cols[i], &cols[j]);
                let gw = g.mul_vec(&w)?;
                for (k, v) in gw.into_iter().enumerate() {
                    c[(i * n + j) * n + k] = v;
                }
            }
        }
        Algebra::from_tensor(n, self.labels.clone(), c)
    }

    /// Human-readable nonzero products, e.g. `[e1,e2] = e3`.
    pub fn multiplication_table(&self) -> Vec<String> {
        let mut lines = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let t = self.basis_bracket(i, j);
                if !t.is_empty() {
                    lines.push(format!(
                        "[{},{}] = {}",
                        self.labels[i],
                        self.labels[j],
                        format_combination(t, &self.labels)
                    ));
                }
            }
        }
        lines
    }
}

/// Formats a sparse combination like `2e3 - 1/2e5`.
pub fn format_combination(terms: &[(usize, Rational)], labels: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (n, (k, v)) in terms.iter().enumerate() {
        let neg = v.is_negative();
        if n == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = v.abs();
        if !a.is_one() {
            if a.is_integer() {
                s.push_str(&a.to_string());
            } else {
                s.push_str(&format!("({a})"));
            }
        }
        s.push_str(&labels[*k]);
    }
    s
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}; {})", self.dim, self.multiplication_table().join("; "))
    }
}
