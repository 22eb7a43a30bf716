//! ℤ-gradations in which every basis vector is homogeneous.

use crate::algebra::{Algebra, SeriesKind};
use crate::linalg::{Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradingError {
    #[error("expected {expected} weights, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weights are not compatible with the bracket at ({i}, {j}) -> {k}")]
    Incompatible { i: usize, j: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gradation {
    weights: Vec<i64>,
}

impl Gradation {
    pub fn new(a: &Algebra, weights: Vec<i64>) -> Result<Self, GradingError> {
        check(a, &weights)?;
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Distinct weights in increasing order.
    pub fn support(&self) -> Vec<i64> {
        let mut s = self.weights.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// `(max - min + 1, no empty component in between)`.
    pub fn length(&self) -> (usize, bool) {
        let s = self.support();
        match (s.first(), s.last()) {
            (Some(lo), Some(hi)) => {
                let len = (hi - lo + 1) as usize;
                (len, s.len() == len)
            }
            _ => (0, true),
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        Self {
            weights: self.weights.iter().map(|w| w * c).collect(),
        }
    }
}

fn check(a: &Algebra, weights: &[i64]) -> Result<(), GradingError> {
    if weights.len() != a.dim() {
        return Err(GradingError::LengthMismatch { expected: a.dim(), found: weights.len() });
    }
    for (i, j, k, _) in a.nonzero_constants() {
        if weights[k] != weights[i] + weights[j] {
            return Err(GradingError::Incompatible { i, j, k });
        }
    }
    Ok(())
}

pub fn verify_gradation(a: &Algebra, weights: &[i64]) -> bool {
    check(a, weights).is_ok()
}

pub fn gradation_length(a: &Algebra, weights: &[i64]) -> Result<(usize, bool), GradingError> {
    Ok(Gradation::new(a, weights.to_vec())?.length())
}

/// Basis of the space of rational weight functions `w` with
/// `w_k = w_i + w_j` whenever `c_ij^k ≠ 0`, returned per basis vector: entry
/// `i` lists `w(e_i)` for each function of the basis.
pub fn diagonal_weights(a: &Algebra) -> Vec<Vec<Rational>> {
    let dim = a.dim();
    let rows: Vec<Vec<Rational>> = a
        .nonzero_constants()
        .map(|(i, j, k, _)| {
            let mut r = vec![Rational::ZERO; dim];
            r[k] += Rational::from_integer(1);
            r[i] -= Rational::from_integer(1);
            r[j] -= Rational::from_integer(1);
            r
        })
        .collect();
    let null = if rows.is_empty() {
        Subspace::full(dim)
    } else {
        Matrix::from_rows(dim, &rows).expect("row width").null_space()
    };
    let basis: Vec<Vec<Rational>> = null.basis_vectors().collect();
    (0..dim).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect()
}

/// Basis vectors outside `L²`; their weights determine the rest.
pub fn generators(a: &Algebra) -> Vec<usize> {
    let series = a.series(SeriesKind::LowerCentral);
    let square = series.terms.get(1).cloned().unwrap_or_else(|| Subspace::zero(a.dim()));
    (0..a.dim())
        .filter(|&i| !square.contains(&a.basis_vector(i)).expect("same ambient"))
        .collect()
}

/// Fills unknown weights through the bracket. `None` on a conflict.
fn propagate(a: &Algebra, weights: &mut [Option<i64>]) -> Option<()> {
    loop {
        let mut changed = false;
        for (i, j, k, _) in a.nonzero_constants() {
            if let (Some(wi), Some(wj)) = (weights[i], weights[j]) {
                match weights[k] {
                    Some(wk) if wk != wi + wj => return None,
                    Some(_) => {}
                    None => {
                        weights[k] = Some(wi + wj);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Some(());
        }
    }
}

/// 1, 2, ..., b, 0, -1, ..., -b: positive gradations are met first.
fn candidate_values(b: i64) -> Vec<i64> {
    (1..=b).chain(std::iter::once(0)).chain((1..=b).map(|x| -x)).collect()
}

/// Exhaustive search over weights of the generators in `[-bound, bound]`,
/// enumerated lexicographically in the order `1, ..., bound, 0, -1, ..., -bound`. Returns
/// the first connected gradation of greatest length; stops early once the
/// length equals the dimension.
pub fn max_length_search(a: &Algebra, bound: i64) -> Option<Gradation> {
    let dim = a.dim();
    let values = candidate_values(bound.max(0));
    let mut best: Option<(usize, Gradation)> = None;
    let mut vars = generators(a);
    // basis vectors in L² that no product reaches also become variables
    {
        let mut probe = vec![None; dim];
        for &g in &vars {
            probe[g] = Some(0);
        }
        propagate(a, &mut probe)?;
        vars.extend((0..dim).filter(|&i| probe[i].is_none()));
        vars.sort_unstable();
    }
    let mut counter = vec![0usize; vars.len()];
    loop {
        let mut w = vec![None; dim];
        for (&v, &c) in vars.iter().zip(&counter) {
            w[v] = Some(values[c]);
        }
        if propagate(a, &mut w).is_some() {
            let weights: Vec<i64> = w.into_iter().map(|x| x.expect("all assigned")).collect();
            if let Ok(g) = Gradation::new(a, weights) {
                let (len, connected) = g.length();
                if connected && best.as_ref().map_or(true, |(l, _)| len > *l) {
                    best = Some((len, g));
                    if len == dim {
                        break;
                    }
                }
            }
        }
        // next assignment; the last variable moves fastest
        let mut p = vars.len();
        loop {
            if p == 0 {
                return best.map(|(_, g)| g);
            }
            p -= 1;
            counter[p] += 1;
            if counter[p] < values.len() {
                break;
            }
            counter[p] = 0;
        }
    }
    best.map(|(_, g)| g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogId;
    use crate::linalg::qi;

    fn build(s: &str) -> Algebra {
        s.parse::<CatalogId>().unwrap().build().unwrap()
    }

    fn heisenberg() -> Algebra {
        let mut b = Algebra::builder(3);
        b.antisym(0, 1, 2, qi(1));
        b.build().unwrap()
    }

    #[test]
    fn verification_examples() {
        let a = build("g1n1:n=5");
        assert!(!verify_gradation(&a, &[1, 3, 4, 5, 8]));
        assert!(verify_gradation(&a, &[1, 3, 4, 5, 7]));
        assert_eq!(gradation_length(&a, &[1, 3, 4, 5, 7]).unwrap(), (7, false));
        let b = build("g2n1:n=5");
        assert_eq!(gradation_length(&b, &[1, 3, 4, 5, 2]).unwrap(), (5, true));
        assert_eq!(gradation_length(&b, &[0; 5]).unwrap(), (1, true));
        assert_eq!(gradation_length(&Algebra::abelian(2), &[0, 2]).unwrap(), (3, false));
        assert!(matches!(gradation_length(&a, &[1, 2, 3, 4, 6]), Err(GradingError::Incompatible { .. })));
        assert!(!verify_gradation(&a, &[0; 4]));
    }

    #[test]
    fn heisenberg_search() {
        let g = max_length_search(&heisenberg(), 3).unwrap();
        assert_eq!(g.length(), (3, true));
        assert_eq!(g.weights(), &[1, 2, 3]);
    }

    #[test]
    fn searches_reach_the_dimension() {
        for (s, b) in [("g1n1:n=5", 8), ("g2n1:n=5", 10), ("g1_7", 10), ("g3n1:n=7", 14)] {
            let a = build(s);
            let g = max_length_search(&a, b).unwrap();
            assert_eq!(g.length(), (a.dim(), true), "{s}");
            assert!(verify_gradation(&a, g.weights()));
            let d = g.scaled(2);
            assert!(verify_gradation(&a, d.weights()));
            assert_eq!(d.length().0, (a.dim() - 1) * 2 + 1);
        }
    }

    #[test]
    fn bound_too_small_gives_shorter_result() {
        let a = build("g1n1:n=5");
        let g = max_length_search(&a, 0).unwrap();
        assert_eq!(g.length(), (1, true));
    }

    #[test]
    fn weight_space_of_filiform_chain() {
        let a = heisenberg();
        let w = diagonal_weights(&a);
        assert_eq!(w[0].len(), 2);
        assert_eq!(diagonal_weights(&Algebra::abelian(3))[0].len(), 3);
    }
}
