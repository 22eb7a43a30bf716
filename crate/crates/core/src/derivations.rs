//! Derivation algebras, right multiplications, nil-independence and
//! nilradical certificates.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraError, SeriesKind};
use crate::catalog::{CatalogError, Nilradical};
use crate::linalg::sparse::{sparse_collect, sparse_null_space, sparse_to_dense, SparseVec};
use crate::linalg::{qi, LinalgError, Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DerivationError {
    #[error("empty list of maps")]
    Empty,
    #[error("map acts on dimension {found}, expected {expected}")]
    DimMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range (dimension {dim})")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A linear endomorphism; column `j` is the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    m: Matrix,
}

impl LinearMap {
    pub fn new(m: Matrix) -> Result<Self, DerivationError> {
        if !m.is_square() {
            return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() }.into());
        }
        Ok(Self { m })
    }

    pub fn zero(dim: usize) -> Self {
        Self { m: Matrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        Self { m: Matrix::identity(dim) }
    }

    /// Inverse of [`LinearMap::to_vector`].
    pub fn from_vector(dim: usize, v: &[Rational]) -> Self {
        let mut m = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for k in 0..dim {
                m[(k, i)] = v[i * dim + k].clone();
            }
        }
        Self { m }
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn image(&self, j: usize) -> Vec<Rational> {
        self.m.column(j)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.m.mul_vec(v).expect("square map of matching size")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap { m: self.m.mul(&other.m).expect("same dimension") }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap { m: self.m.add(&other.m).expect("same dimension") }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap { m: self.m.sub(&other.m).expect("same dimension") }
    }

    pub fn scale(&self, s: &Rational) -> LinearMap {
        LinearMap { m: self.m.scale(s) }
    }

    pub fn commutator(&self, other: &LinearMap) -> LinearMap {
        self.compose(other).sub(&other.compose(self))
    }

    /// Coordinates laid out as `i * dim + k` = coefficient of `e_k` in the image of `e_i`,
    /// the same layout as a 1-cochain.
    pub fn to_vector(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut v = Vec::with_capacity(n * n);
        for i in 0..n {
            for k in 0..n {
                v.push(self.m[(k, i)].clone());
            }
        }
        v
    }

    pub fn is_nilpotent(&self) -> bool {
        is_nilpotent_map(self)
    }
}

/// `d^dim = 0`.
pub fn is_nilpotent_map(d: &LinearMap) -> bool {
    d.m.pow(d.dim() as u32).expect("square").is_zero()
}

/// Checks `d([e_i,e_j]) = [d e_i, e_j] + [e_i, d e_j]` on every basis pair.
pub fn is_derivation(a: &Algebra, d: &LinearMap) -> bool {
    first_derivation_failure(a, d).is_none()
}

/// First basis pair on which the derivation identity fails.
pub fn first_derivation_failure(a: &Algebra, d: &LinearMap) -> Option<(usize, usize)> {
    let n = a.dim();
    let images: Vec<Vec<Rational>> = (0..n).map(|i| d.image(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let bij = a.bracket_unchecked(&a.basis_vector(i), &a.basis_vector(j));
            let lhs = d.apply(&bij);
            let r1 = a.bracket_unchecked(&images[i], &a.basis_vector(j));
            let r2 = a.bracket_unchecked(&a.basis_vector(i), &images[j]);
            if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (x, y))| *l != x + y) {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct DerivationSpace {
    pub algebra_dim: usize,
    pub basis: Vec<LinearMap>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The span as a subspace of `Q^(dim²)`.
    pub fn as_subspace(&self) -> Subspace {
        let rows: Vec<Vec<Rational>> = self.basis.iter().map(LinearMap::to_vector).collect();
        Subspace::span(self.algebra_dim * self.algebra_dim, &rows).expect("uniform length")
    }

    pub fn contains(&self, d: &LinearMap) -> bool {
        self.as_subspace().contains(&d.to_vector()).unwrap_or(false)
    }
}

/// Sparse rows of the derivation system, one per `(i, j, k)`, over the unknowns
/// `D[p][k]` at column `p * dim + k`.
fn derivation_system(a: &Algebra) -> Vec<SparseVec> {
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut by_k: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            for (m, c) in a.basis_bracket(i, j) {
                for k in 0..n {
                    by_k.entry(k).or_default().push((m * n + k, c.clone()));
                }
            }
            for p in 0..n {
                for (k, c) in a.basis_bracket(p, j) {
                    by_k.entry(*k).or_default().push((i * n + p, -c));
                }
                for (k, c) in a.basis_bracket(i, p) {
                    by_k.entry(*k).or_default().push((j * n + p, -c));
                }
            }
            rows.extend(by_k.into_values().map(sparse_collect).filter(|r| !r.is_empty()));
        }
    }
    rows
}

pub fn derivation_space(a: &Algebra) -> DerivationSpace {
    let n = a.dim();
    let basis = sparse_null_space(n * n, derivation_system(a))
        .iter()
        .map(|v| LinearMap::from_vector(n, &sparse_to_dense(v, n * n)))
        .collect();
    DerivationSpace { algebra_dim: n, basis }
}

/// Right multiplications `R_{e_i}`, the inner derivations of a Leibniz algebra.
pub fn inner_derivations(a: &Algebra) -> Vec<LinearMap> {
    (0..a.dim())
        .map(|i| LinearMap { m: a.right_multiplication(&a.basis_vector(i)).expect("basis vector") })
        .collect()
}

/// Parametric derivation family: one map per named parameter.
struct ParamMaps {
    dim: usize,
    maps: BTreeMap<String, Matrix>,
    order: Vec<String>,
}

impl ParamMaps {
    fn new(dim: usize) -> Self {
        Self {
            dim,
            maps: BTreeMap::new(),
            order: Vec::new(),
        }
    }

    /// Adds `coef · p · e_target` to `d(e_source)` (1-based indices).
    fn add(&mut self, source: usize, target: usize, p: &str, coef: Rational) {
        if !self.maps.contains_key(p) {
            self.order.push(p.to_string());
            self.maps.insert(p.to_string(), Matrix::zeros(self.dim, self.dim));
        }
        let m = self.maps.get_mut(p).expect("inserted");
        m[(target - 1, source - 1)] += coef;
    }

    fn one(&mut self, source: usize, target: usize, p: &str) {
        self.add(source, target, p, qi(1));
    }

    fn into_list(self) -> Vec<(String, LinearMap)> {
        let mut maps = self.maps;
        self.order
            .into_iter()
            .map(|p| {
                let m = maps.remove(&p).expect("ordered");
                (p, LinearMap { m })
            })
            .collect()
    }
}

fn a(t: usize) -> String {
    format!("a{t}")
}

fn b(t: usize) -> String {
    format!("b{t}")
}

/// Sparse listing `(source, [(target, [(param, coef)])])` for the sporadic algebras.
type Listing = &'static [(usize, &'static [(usize, &'static [(&'static str, i64)])])];

const G1_7_LISTING: Listing = &[
    (1, &[(1, &[("a1", 1)]), (2, &[("a2", 1)]), (3, &[("a3", 1)]), (4, &[("a4", 1)]), (5, &[("a5", 1)]), (6, &[("a6", 1)]), (7, &[("a7", 1)])]),
    (2, &[(2, &[("a1", 2)]), (3, &[("b3", 1)]), (5, &[("b5", 1)]), (6, &[("b6", 1)]), (7, &[("b7", 1)])]),
    (3, &[(3, &[("a1", 3)]), (4, &[("b3", 1)]), (5, &[("a3", -1)]), (6, &[("b5", 1), ("a4", -1)]), (7, &[("a5", -1)])]),
    (4, &[(4, &[("a1", 4)]), (5, &[("b3", 1)]), (6, &[("a3", -1)]), (7, &[("a4", 1)])]),
    (5, &[(5, &[("a1", 5)]), (6, &[("b3", 1)]), (7, &[("a3", -1)])]),
    (6, &[(6, &[("a1", 6)])]),
    (7, &[(7, &[("a1", 7)])]),
];

const G2_9_LISTING: Listing = &[
    (1, &[(1, &[("a1", 1)]), (3, &[("a3", 1)]), (4, &[("a4", 1)]), (5, &[("a5", 1)]), (6, &[("a6", 1)]), (7, &[("a7", 1)]), (8, &[("a8", 1)]), (9, &[("a9", 1)])]),
    (2, &[(2, &[("a1", 2)]), (3, &[("b3", 1)]), (5, &[("a4", 1)]), (6, &[("a5", 1)]), (7, &[("b7", 1)]), (8, &[("b8", 1)]), (9, &[("b9", 1)])]),
    (3, &[(3, &[("a1", 3)]), (4, &[("b3", 1)]), (5, &[("a3", -1)]), (7, &[("a5", -2)]), (8, &[("b7", 1), ("a6", -5)]), (9, &[("a7", -1)])]),
    (4, &[(4, &[("a1", 4)]), (5, &[("b3", 1)]), (6, &[("a3", -1)]), (7, &[("a4", 2)]), (9, &[("a6", 1)])]),
    (5, &[(5, &[("a1", 5)]), (6, &[("b3", 1)]), (7, &[("a3", -3)]), (8, &[("a4", 2)]), (9, &[("a5", -1)])]),
    (6, &[(6, &[("a1", 6)]), (7, &[("b3", 1)]), (8, &[("a3", -5)]), (9, &[("a4", 1)])]),
    (7, &[(7, &[("a1", 7)]), (8, &[("b3", 1)]), (9, &[("a3", -1)])]),
    (8, &[(8, &[("a1", 8)])]),
    (9, &[(9, &[("a1", 9)])]),
];

const G3_11_LISTING: Listing = &[
    (1, &[(1, &[("a1", 1)]), (3, &[("a3", 1)]), (4, &[("a4", 1)]), (5, &[("a5", 1)]), (6, &[("a6", 1)]), (7, &[("a7", 1)]), (8, &[("a8", 1)]), (9, &[("a9", 1)]), (10, &[("a10", 1)]), (11, &[("a11", 1)])]),
    (2, &[(2, &[("a1", 2)]), (3, &[("b3", 1)]), (5, &[("a4", 1)]), (6, &[("a5", 1)]), (7, &[("b7", 1)]), (8, &[("a7", -1)]), (9, &[("b9", 1)]), (10, &[("b10", 1)]), (11, &[("b11", 1)])]),
    (3, &[(3, &[("a1", 3)]), (4, &[("b3", 1)]), (5, &[("a3", -1)]), (7, &[("a5", 1)]), (8, &[("b7", 1), ("a6", 1)]), (9, &[("b9", -1)]), (11, &[("a9", -1)])]),
    (4, &[(4, &[("a1", 4)]), (5, &[("b3", 1)]), (6, &[("a3", -1)]), (7, &[("a4", -1)]), (9, &[("a6", 1), ("b7", 1)]), (10, &[("a7", 1)]), (11, &[("a8", 1)])]),
    (5, &[(5, &[("a1", 5)]), (6, &[("b3", 1)]), (8, &[("a4", -1)]), (9, &[("a5", -1)]), (10, &[("b7", 1)]), (11, &[("a7", -1)])]),
    (6, &[(6, &[("a1", 6)]), (7, &[("b3", 1)]), (8, &[("a3", 1)]), (10, &[("a5", -1)]), (11, &[("a6", 1)])]),
    (7, &[(7, &[("a1", 7)]), (8, &[("b3", 1)]), (9, &[("a3", 1)]), (10, &[("a4", 1)]), (11, &[("a5", -1)])]),
    (8, &[(8, &[("a1", 8)]), (9, &[("b3", 1)]), (11, &[("a4", 1)])]),
    (9, &[(9, &[("a1", 9)]), (10, &[("b3", 1)]), (11, &[("a3", -1)])]),
    (10, &[(10, &[("a1", 10)])]),
    (11, &[(11, &[("a1", 11)])]),
];

fn from_listing(dim: usize, listing: Listing) -> ParamMaps {
    let mut p = ParamMaps::new(dim);
    for (source, terms) in listing {
        for (target, coeffs) in *terms {
            for (name, c) in *coeffs {
                p.add(*source, *target, name, qi(*c));
            }
        }
    }
    p
}

/// The parametrized derivations of a quasi-filiform algebra of maximum length,
/// one map per free parameter (that parameter 1, the rest 0).
pub fn parametric_derivations(family: Nilradical, n: usize) -> Result<Vec<(String, LinearMap)>, DerivationError> {
    family.check_n(n)?;
    let mut p = ParamMaps::new(n);
    match family {
        Nilradical::G1n1 => {
            let suppressed = |t: usize| t % 2 == 0 && t >= 4 && t <= n - 3;
            for t in 1..=n {
                p.one(1, t, &a(t));
            }
            for t in 2..=n {
                if !suppressed(t) {
                    p.one(2, t, &b(t));
                }
            }
            for i in 3..=n - 1 {
                p.add(i, i, "a1", qi(i as i64 - 2));
                p.one(i, i, "b2");
                for t in i + 1..=n - 1 {
                    if !suppressed(t - i + 2) {
                        p.one(i, t, &b(t - i + 2));
                    }
                }
                p.add(i, n, &a(n - i + 1), if i % 2 == 0 { qi(1) } else { qi(-1) });
            }
            p.add(n, n, "a1", qi(n as i64 - 4));
            p.add(n, n, "b2", qi(2));
        }
        Nilradical::G2n1 => {
            for t in 1..=n - 1 {
                p.one(1, t, &a(t));
            }
            for i in 2..=n - 1 {
                p.add(i, i, "a1", qi(i as i64 - 2));
                p.one(i, i, "b2");
                for t in i + 1..=n - 1 {
                    p.one(i, t, &b(t - i + 2));
                }
            }
            for t in 3..=n - 2 {
                p.add(n, t, &a(t - 1), qi(-1));
            }
            p.one(n, n - 1, "c");
            p.add(n, n, "a1", qi(2));
        }
        Nilradical::G3n1 => {
            p.one(1, 1, "a1");
            for t in 3..=n - 1 {
                p.one(1, t, &a(t));
            }
            p.add(2, 2, "a1", qi(3));
            for t in 3..=n - 1 {
                p.one(2, t, &b(t));
            }
            for i in 3..=n - 1 {
                p.add(i, i, "a1", qi(i as i64 + 1));
                // terms landing past e_{n-1} are dropped
                if i + 1 <= n - 1 {
                    p.one(i, i + 1, "b3");
                }
                if i + 2 <= n - 1 {
                    p.one(i, i + 2, "b4");
                }
                for j in i + 3..=n - 1 {
                    p.one(i, j, &b(j - i + 2));
                    p.add(i, j, &a(j - i), qi(-1));
                }
            }
            for t in 4..=n - 2 {
                p.add(n, t, &a(t - 1), qi(-1));
            }
            p.one(n, n - 1, "c");
            p.add(n, n, "a1", qi(2));
        }
        Nilradical::G1_7 => p = from_listing(7, G1_7_LISTING),
        Nilradical::G2_9 => p = from_listing(9, G2_9_LISTING),
        Nilradical::G3_11 => p = from_listing(11, G3_11_LISTING),
    }
    Ok(p.into_list())
}

#[derive(Debug, Clone)]
pub struct DerivationFormsReport {
    pub family: Nilradical,
    pub n: usize,
    pub parameters: Vec<String>,
    pub derivation_dim: usize,
    pub parametric_span_dim: usize,
    /// Parameters whose map fails the derivation identity, with the first failing pair.
    pub non_derivations: Vec<(String, (usize, usize))>,
    pub span_equal: bool,
}

impl DerivationFormsReport {
    pub fn parameter_count(&self) -> usize {
        self.parameters.len()
    }

    pub fn passed(&self) -> bool {
        self.non_derivations.is_empty()
            && self.span_equal
            && self.parametric_span_dim == self.parameter_count()
            && self.derivation_dim == self.parameter_count()
    }
}

/// Compares the parametrized derivations against the computed derivation space.
pub fn verify_derivation_forms(family: Nilradical, n: usize) -> Result<DerivationFormsReport, DerivationError> {
    let maps = parametric_derivations(family, n)?;
    let alg = crate::catalog::CatalogId::with_n(family.family(), n).build()?;
    let der = derivation_space(&alg);
    let non_derivations = maps
        .iter()
        .filter_map(|(name, d)| first_derivation_failure(&alg, d).map(|f| (name.clone(), f)))
        .collect();
    let rows: Vec<Vec<Rational>> = maps.iter().map(|(_, d)| d.to_vector()).collect();
    let span = Subspace::span(n * n, &rows)?;
    Ok(DerivationFormsReport {
        family,
        n,
        parameters: maps.into_iter().map(|(p, _)| p).collect(),
        derivation_dim: der.dim(),
        parametric_span_dim: span.dim(),
        non_derivations,
        span_equal: span == der.as_subspace(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilMethod {
    /// One of the maps is itself nilpotent.
    SingleNilpotent,
    /// The maps are linearly dependent, so a nontrivial combination is zero.
    LinearDependence,
    /// All maps upper (or all lower) triangular: decided exactly from the diagonals.
    Triangular,
    /// Randomized search for a nilpotent combination.
    Sampled,
}

#[derive(Debug, Clone)]
pub struct NilIndependence {
    pub independent: bool,
    pub method: NilMethod,
    /// Coefficients of a nilpotent combination when `independent` is false.
    pub witness: Option<Vec<Rational>>,
    pub trials: usize,
}

/// Coefficients of a linear dependence among the given vectors, if any.
fn dependence(vectors: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let len = vectors[0].len();
    let mut cols = Matrix::zeros(len, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            cols[(i, j)] = x.clone();
        }
    }
    cols.null_space().basis_vectors().next()
}

fn combination(maps: &[LinearMap], alpha: &[Rational]) -> LinearMap {
    maps.iter()
        .zip(alpha)
        .fold(LinearMap::zero(maps[0].dim()), |acc, (d, c)| acc.add(&d.scale(c)))
}

/// Decides whether no nonzero combination of `maps` is nilpotent.
pub fn nil_independent(maps: &[LinearMap], trials: usize, seed: u64) -> Result<NilIndependence, DerivationError> {
    let first = maps.first().ok_or(DerivationError::Empty)?;
    let dim = first.dim();
    if let Some(d) = maps.iter().find(|d| d.dim() != dim) {
        return Err(DerivationError::DimMismatch { expected: dim, found: d.dim() });
    }
    let m = maps.len();
    let unit = |i: usize| (0..m).map(|j| if i == j { qi(1) } else { qi(0) }).collect::<Vec<_>>();
    let verdict = |independent, method, witness, trials| NilIndependence { independent, method, witness, trials };

    if let Some(i) = maps.iter().position(is_nilpotent_map) {
        return Ok(verdict(false, NilMethod::SingleNilpotent, Some(unit(i)), 0));
    }
    let vectors: Vec<Vec<Rational>> = maps.iter().map(LinearMap::to_vector).collect();
    if let Some(w) = dependence(&vectors) {
        return Ok(verdict(false, NilMethod::LinearDependence, Some(w), 0));
    }
    let upper = maps.iter().all(|d| d.m.is_upper_triangular());
    let lower = maps.iter().all(|d| d.m.is_lower_triangular());
    if upper || lower {
        // a triangular map is nilpotent iff its diagonal vanishes
        let diagonals: Vec<Vec<Rational>> = maps
            .iter()
            .map(|d| (0..dim).map(|i| d.m[(i, i)].clone()).collect())
            .collect();
        let w = dependence(&diagonals);
        return Ok(verdict(w.is_none(), NilMethod::Triangular, w, 0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let alpha: Vec<Rational> = (0..m).map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
        if alpha.iter().all(Rational::is_zero) {
            continue;
        }
        if is_nilpotent_map(&combination(maps, &alpha)) {
            return Ok(verdict(false, NilMethod::Sampled, Some(alpha), trials));
        }
    }
    Ok(verdict(true, NilMethod::Sampled, None, trials))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilradicalCheck {
    Ideal,
    Nilpotent,
    ContainsDerivedAlgebra,
    ComplementNilIndependent,
}

#[derive(Debug, Clone)]
pub struct NilradicalReport {
    pub ideal: bool,
    pub nilpotent: bool,
    pub contains_derived_algebra: bool,
    /// Every `R_{x|N}` is a derivation of `N`.
    pub restrictions_are_derivations: bool,
    /// Every `R_{x|N}` is non-nilpotent.
    pub restrictions_non_nilpotent: bool,
    pub nil_independence: Option<NilIndependence>,
    pub restrictions: Vec<LinearMap>,
}

impl NilradicalReport {
    pub fn first_failure(&self) -> Option<NilradicalCheck> {
        if !self.ideal {
            Some(NilradicalCheck::Ideal)
        } else if !self.nilpotent {
            Some(NilradicalCheck::Nilpotent)
        } else if !self.contains_derived_algebra {
            Some(NilradicalCheck::ContainsDerivedAlgebra)
        } else if !self.restrictions_are_derivations
            || !self.nil_independence.as_ref().is_some_and(|r| r.independent)
        {
            Some(NilradicalCheck::ComplementNilIndependent)
        } else {
            None
        }
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }
}

/// Certifies that `span{e_i : i ∈ n_indices}` is the nilradical of `r`.
pub fn verify_nilradical(r: &Algebra, n_indices: &[usize], trials: usize, seed: u64) -> Result<NilradicalReport, DerivationError> {
    let dim = r.dim();
    if let Some(&index) = n_indices.iter().find(|&&i| i >= dim) {
        return Err(DerivationError::IndexOutOfRange { index, dim });
    }
    let n_space = Subspace::coordinate(dim, n_indices)?;
    let ideal = r.is_ideal(&n_space)?;
    let mut report = NilradicalReport {
        ideal,
        nilpotent: false,
        contains_derived_algebra: false,
        restrictions_are_derivations: false,
        restrictions_non_nilpotent: false,
        nil_independence: None,
        restrictions: Vec::new(),
    };
    let derived = &r.series(SeriesKind::Derived).terms[1];
    report.contains_derived_algebra = n_space.contains_subspace(derived)?;
    let Ok(n_alg) = r.restrict_to(n_indices) else {
        return Ok(report);
    };
    report.nilpotent = n_alg.is_nilpotent();
    if !ideal {
        return Ok(report);
    }
    let complement: Vec<usize> = (0..dim).filter(|i| !n_indices.contains(i)).collect();
    let restrictions: Vec<LinearMap> = complement
        .iter()
        .map(|&x| {
            let mut m = Matrix::zeros(n_indices.len(), n_indices.len());
            for (col, &j) in n_indices.iter().enumerate() {
                for (k, c) in r.basis_bracket(j, x) {
                    let row = n_indices.iter().position(|i| i == k).expect("N is an ideal");
                    m[(row, col)] = c.clone();
                }
            }
            LinearMap { m }
        })
        .collect();
    report.restrictions_are_derivations = restrictions.iter().all(|d| is_derivation(&n_alg, d));
    report.restrictions_non_nilpotent = restrictions.iter().all(|d| !is_nilpotent_map(d));
    report.nil_independence = if restrictions.is_empty() {
        None
    } else {
        Some(nil_independent(&restrictions, trials, seed)?)
    };
    report.restrictions = restrictions;
    Ok(report)
}
