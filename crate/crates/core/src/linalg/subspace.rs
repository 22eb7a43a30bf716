use super::{LinalgError, Matrix, Rational};

/// A linear subspace of `Q^ambient_dim`, stored as the nonzero rows of its
/// reduced row echelon basis. Two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Span of arbitrary vectors (dependent or zero vectors allowed).
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(ambient_dim, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, _) = m.rref();
        Self {
            ambient_dim: m.cols(),
            basis: r.drop_zero_rows(),
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Result<Self, LinalgError> {
        let mut vecs = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= ambient_dim {
                return Err(LinalgError::IndexOutOfRange { index: i, bound: ambient_dim });
            }
            let mut v = vec![Rational::ZERO; ambient_dim];
            v[i] = Rational::ONE;
            vecs.push(v);
        }
        Self::span(ambient_dim, &vecs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = Vec<Rational>> + '_ {
        self.basis.row_vectors().map(|r| r.to_vec())
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.basis.pivot_columns()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let rows: Vec<Vec<Rational>> = self.basis_vectors().chain(other.basis_vectors()).collect();
        Subspace::span(self.ambient_dim, &rows)
    }

    /// Vectors orthogonal (standard dot product) to every basis vector.
    pub fn annihilator(&self) -> Subspace {
        self.basis.null_space()
    }

    /// Intersection as the null space of the stacked annihilator constraints.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let constraints = self.annihilator().sum(&other.annihilator())?;
        Ok(constraints.basis.null_space())
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::ShapeMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut rest = v.to_vec();
        for (row, p) in self.basis.row_vectors().zip(self.pivot_columns()) {
            let f = rest[p].clone();
            if f.is_zero() {
                continue;
            }
            for (r, b) in rest.iter_mut().zip(row) {
                if !b.is_zero() {
                    *r -= &f * b;
                }
            }
        }
        Ok(rest.iter().all(Rational::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        for v in other.basis_vectors() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(self == other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(n: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::ZERO; n];
        v[i] = Rational::ONE;
        v
    }

    #[test]
    fn lattice_examples() {
        let s1 = Subspace::span(3, &[e(3, 0)]).unwrap();
        let s2 = Subspace::span(3, &[e(3, 1)]).unwrap();
        assert_eq!(s1.sum(&s2).unwrap().dim(), 2);

        let a = Subspace::coordinate(3, &[0, 1]).unwrap();
        let b = Subspace::coordinate(3, &[1, 2]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), Subspace::coordinate(3, &[1]).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(LinalgError::AmbientMismatch { .. })));
        assert!(a.intersect(&b).is_err());
        assert!(a.equals(&b).is_err());
    }

    #[test]
    fn zero_vectors_do_not_count() {
        let s = Subspace::span(2, &[vec![Rational::ZERO; 2], vec![Rational::from(3), Rational::ZERO]]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s, Subspace::coordinate(2, &[0]).unwrap());
    }

    fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace)> {
        let n = 5usize;
        let vecs = || proptest::collection::vec(proptest::collection::vec(-2i64..3, n), 0..5);
        (vecs(), vecs()).prop_map(move |(a, b)| {
            let to = |vs: Vec<Vec<i64>>| -> Vec<Vec<Rational>> {
                vs.into_iter().map(|v| v.into_iter().map(Rational::from).collect()).collect()
            };
            (Subspace::span(n, &to(a)).unwrap(), Subspace::span(n, &to(b)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn grassmann_identity((a, b) in subspace_pair()) {
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(a.contains_subspace(&i).unwrap());
            prop_assert!(b.contains_subspace(&i).unwrap());
            prop_assert!(s.contains_subspace(&a).unwrap());
        }

        #[test]
        fn equality_matches_mutual_containment((a, b) in subspace_pair()) {
            let mutual = a.contains_subspace(&b).unwrap() && b.contains_subspace(&a).unwrap();
            prop_assert_eq!(a.equals(&b).unwrap(), mutual);
        }
    }
}
