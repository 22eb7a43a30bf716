//! Sparse row elimination for the tall, mostly-empty systems produced by
//! derivation and cochain constraints.

use std::collections::BTreeMap;

use super::{Matrix, Rational};

/// Sparse vector as `(index, value)` pairs, strictly increasing in index, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &[(usize, Rational)], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Collects unsorted, possibly repeated `(index, value)` terms into a `SparseVec`.
pub fn sparse_collect(terms: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (i, v) in terms {
        if v.is_zero() {
            continue;
        }
        *acc.entry(i).or_default() += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a - f * b`.
fn axpy(a: &[(usize, Rational)], f: &Rational, b: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(f * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale(v: &mut [(usize, Rational)], f: &Rational) {
    for (_, x) in v.iter_mut() {
        *x = &*x * f;
    }
}

/// Incrementally built row echelon basis (leading entries normalized to 1).
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_of: BTreeMap<usize, usize>,
}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_of: BTreeMap::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Self::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates leading entries until the leading column has no pivot.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, coeff)) = v.first() {
            match self.pivot_of.get(lead) {
                Some(&r) => {
                    let f = coeff.clone();
                    v = axpy(&v, &f, &self.rows[r]);
                }
                None => break,
            }
        }
        v
    }

    /// Adds `v`; returns true iff it was independent of the current rows.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((lead, coeff)) = v.first().cloned() else {
            return false;
        };
        scale(&mut v, &coeff.recip().expect("nonzero lead"));
        self.pivot_of.insert(lead, self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Rows of the reduced row echelon form, ordered by pivot column.
    pub fn rref_rows(&self) -> Vec<SparseVec> {
        let order: Vec<(usize, usize)> = self.pivot_of.iter().map(|(&c, &r)| (c, r)).collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for &(pivot, r) in order.iter().rev() {
            let mut row = self.rows[r].clone();
            loop {
                let hit = row
                    .iter()
                    .skip(1)
                    .find(|(c, _)| done.contains_key(c))
                    .map(|(c, v)| (*c, v.clone()));
                match hit {
                    Some((c, f)) => row = axpy(&row, &f, &done[&c]),
                    None => break,
                }
            }
            done.insert(pivot, row);
        }
        done.into_values().collect()
    }

    /// Basis of `{x : r·x = 0 for every row r}`, one vector per free column.
    pub fn null_space_vectors(&self) -> Vec<SparseVec> {
        let rref = self.rref_rows();
        let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for c in 0..self.ncols {
            if !self.pivot_of.contains_key(&c) {
                by_free.insert(c, vec![(c, Rational::ONE)]);
            }
        }
        for (row, &p) in rref.iter().zip(&pivots) {
            for (c, v) in row.iter().skip(1) {
                if let Some(vec) = by_free.get_mut(c) {
                    vec.push((p, -v));
                }
            }
        }
        by_free
            .into_values()
            .map(|mut v| {
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect()
    }

    pub fn to_dense(&self) -> Matrix {
        let rows: Vec<Vec<Rational>> = self.rref_rows().iter().map(|r| sparse_to_dense(r, self.ncols)).collect();
        Matrix::from_rows(self.ncols, &rows).expect("uniform rows")
    }
}

/// Rank of the matrix whose rows are given sparsely. Rows are processed
/// shortest first, which keeps fill-in down on constraint systems.
pub fn sparse_rank(ncols: usize, mut rows: Vec<SparseVec>) -> usize {
    rows.sort_by_key(|r| (r.len(), r.first().map(|x| x.0)));
    let mut e = EchelonBasis::new(ncols);
    for r in rows {
        if e.rank() == ncols {
            break;
        }
        e.insert(r);
    }
    e.rank()
}

/// Kernel basis of a sparse row system.
pub fn sparse_null_space(ncols: usize, mut rows: Vec<SparseVec>) -> Vec<SparseVec> {
    rows.sort_by_key(|r| (r.len(), r.first().map(|x| x.0)));
    let mut e = EchelonBasis::new(ncols);
    for r in rows {
        if e.rank() == ncols {
            break;
        }
        e.insert(r);
    }
    e.null_space_vectors()
}
