//! Incremental sparse echelon basis.
//!
//! Rows are kept in insertion order. Each row has a pivot column carrying a 1,
//! and every row is zero on the pivots of the rows inserted before it, so a
//! single forward sweep reduces any vector against any prefix of the basis.
//! Prefixes are what make nested subspaces (filtration stages) cheap.

use super::Rational;
use crate::error::{check_dim, Result};

/// Sparse vector: `(index, value)` pairs, strictly increasing index, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    entries: SparseVec,
}

#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<Row>,
}

/// Outcome of reducing a vector against a prefix of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Multiplier of each basis row in the prefix (length = prefix).
    pub coeffs: Vec<Rational>,
    /// What is left; zero iff the vector lies in the prefix span.
    pub residual: SparseVec,
}

impl Reduction {
    pub fn in_span(&self) -> bool {
        self.residual.is_empty()
    }
}

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &[(usize, Rational)], dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn row(&self, k: usize) -> &SparseVec {
        &self.rows[k].entries
    }

    pub fn pivot(&self, k: usize) -> usize {
        self.rows[k].pivot
    }

    fn check(&self, v: &[(usize, Rational)]) -> Result<()> {
        if let Some(&(i, _)) = v.iter().find(|(i, _)| *i >= self.dim) {
            check_dim(self.dim, i + 1)?;
        }
        Ok(())
    }

    /// Reduces `v` against the first `prefix` rows.
    pub fn reduce(&self, v: &[(usize, Rational)], prefix: usize) -> Result<Reduction> {
        self.check(v)?;
        let mut work = dense_from_sparse(v, self.dim);
        let coeffs = self.reduce_dense(&mut work, prefix);
        Ok(Reduction { coeffs, residual: sparse_from_dense(&work) })
    }

    /// In-place forward sweep; returns the multipliers.
    pub fn reduce_dense(&self, work: &mut [Rational], prefix: usize) -> Vec<Rational> {
        let prefix = prefix.min(self.rows.len());
        let mut coeffs = Vec::with_capacity(prefix);
        for row in &self.rows[..prefix] {
            let c = work[row.pivot].clone();
            if !c.is_zero() {
                for (i, x) in &row.entries {
                    work[*i] = work[*i].sub_mul(&c, x);
                }
            }
            coeffs.push(c);
        }
        coeffs
    }

    /// Whether `v` lies in the span of the first `prefix` rows.
    pub fn contains(&self, v: &[(usize, Rational)], prefix: usize) -> Result<bool> {
        self.check(v)?;
        let mut work = dense_from_sparse(v, self.dim);
        self.reduce_dense(&mut work, prefix);
        Ok(work.iter().all(Rational::is_zero))
    }

    /// Appends `v` if it is independent of the current rows; returns whether a
    /// row was added.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> Result<bool> {
        self.check(v)?;
        if self.is_full() {
            return Ok(false);
        }
        let mut work = dense_from_sparse(v, self.dim);
        self.reduce_dense(&mut work, self.rows.len());
        let residual = sparse_from_dense(&work);
        let Some(pivot) = residual
            .iter()
            .min_by_key(|(i, x)| (x.pivot_weight(), *i))
            .map(|(i, _)| *i)
        else {
            return Ok(false);
        };
        let inv = work[pivot].recip();
        let entries = residual.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
        self.rows.push(Row { pivot, entries });
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn prefix_membership() {
        let mut b = EchelonBasis::new(3);
        assert!(b.insert(&[(0, q(1)), (1, q(1))]).unwrap());
        assert!(!b.insert(&[(0, q(2)), (1, q(2))]).unwrap());
        assert!(b.insert(&[(1, q(1)), (2, q(-1))]).unwrap());
        let v = vec![(0, q(1)), (2, q(1))];
        assert!(b.contains(&v, 2).unwrap());
        assert!(!b.contains(&v, 1).unwrap());
        let red = b.reduce(&v, 2).unwrap();
        assert!(red.in_span());
        assert_eq!(red.coeffs.len(), 2);
        assert!(b.reduce(&[(3, q(1))], 2).is_err());
    }

    proptest! {
        #[test]
        fn rank_matches_dense(rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 6), 1..8)) {
            let mut b = EchelonBasis::new(6);
            for r in &rows {
                let v: Vec<Rational> = r.iter().map(|&x| q(x)).collect();
                b.insert(&sparse_from_dense(&v)).unwrap();
            }
            let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap();
            prop_assert_eq!(b.len(), m.rank());
            // reconstruction from multipliers
            for r in &rows {
                let v: Vec<Rational> = r.iter().map(|&x| q(x)).collect();
                let red = b.reduce(&sparse_from_dense(&v), b.len()).unwrap();
                prop_assert!(red.in_span());
                let mut back = vec![Rational::zero(); 6];
                for (k, c) in red.coeffs.iter().enumerate() {
                    for (i, x) in b.row(k) {
                        back[*i] += c * x;
                    }
                }
                prop_assert_eq!(back, v);
            }
        }
    }
}
