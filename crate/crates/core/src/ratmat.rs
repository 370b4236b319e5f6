//! Dense symmetric matrices over exact rationals.

use crate::error::{Error, Result};
use crate::rat::Rat;
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    dim: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zero(dim: usize) -> RatMat {
        RatMat {
            dim,
            data: vec![Rat::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> RatMat {
        let mut m = RatMat::zero(dim);
        for i in 0..dim {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<RatMat> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        Ok(RatMat {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.dim + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn scale(&self, c: &Rat) -> RatMat {
        RatMat {
            dim: self.dim,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &RatMat) -> Result<RatMat> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch("matrix sizes differ".into()));
        }
        Ok(RatMat {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn add_diagonal(&self, shift: &Rat) -> RatMat {
        let mut out = self.clone();
        for i in 0..self.dim {
            let v = out.get(i, i) + shift;
            out.set(i, i, v);
        }
        out
    }

    /// B Q Bᵀ for an integer basis matrix B given by columns.
    pub fn congruence_by_int_columns(&self, cols: &[Vec<i64>]) -> Result<RatMat> {
        let dim = cols.len();
        if dim != self.dim {
            return Err(Error::DimensionMismatch(
                "basis column count differs from matrix dimension".into(),
            ));
        }
        let n = if dim == 0 { 0 } else { cols[0].len() };
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch("ragged basis columns".into()));
        }
        // out[a][b] = sum_{i,j} B[a][i] Q[i][j] B[b][j], with B[a][i] = cols[i][a].
        let mut out = RatMat::zero(n);
        for i in 0..dim {
            for j in 0..dim {
                let q = self.get(i, j);
                if q.is_zero() {
                    continue;
                }
                for a in 0..n {
                    let bi = cols[i][a];
                    if bi == 0 {
                        continue;
                    }
                    for b in 0..n {
                        let bj = cols[j][b];
                        if bj == 0 {
                            continue;
                        }
                        let add = q * Rat::from_integer(BigInt::from(bi * bj));
                        let v = out.get(a, b) + add;
                        out.set(a, b, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Least common multiple of all entry denominators, and the matrix scaled
    /// to integers by it: self = N / lcm.
    pub fn to_integer_scaled(&self) -> (Vec<BigInt>, BigInt) {
        let mut lcm = BigInt::one();
        for x in &self.data {
            lcm = lcm.lcm(x.denom());
        }
        let ints = self
            .data
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        (ints, lcm)
    }

    /// Exact positive-semidefiniteness test by rational LDLᵀ with symmetric
    /// (diagonal) pivoting: pivot on a maximal positive diagonal entry; a
    /// negative diagonal refutes; once the remaining diagonal is all zero the
    /// remaining block must vanish entirely.
    pub fn is_psd(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::AsymmetricInput(format!(
                "{}x{} matrix",
                self.dim, self.dim
            )));
        }
        let n = self.dim;
        let mut a = self.clone();
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            // Pick the largest diagonal among active indices.
            let mut best: Option<usize> = None;
            for &i in &active {
                if best.is_none() || a.get(i, i) > a.get(best.unwrap(), best.unwrap()) {
                    best = Some(i);
                }
            }
            let p = best.unwrap();
            let pivot = a.get(p, p).clone();
            if pivot.is_negative() {
                return Ok(false);
            }
            if pivot.is_zero() {
                // PSD requires the whole remaining block to be zero.
                for &i in &active {
                    for &j in &active {
                        if !a.get(i, j).is_zero() {
                            return Ok(false);
                        }
                    }
                }
                return Ok(true);
            }
            active.retain(|&i| i != p);
            // Schur complement update on the active block.
            let col: Vec<(usize, Rat)> = active
                .iter()
                .map(|&i| (i, a.get(i, p).clone()))
                .collect();
            for (i, ci) in &col {
                for (j, cj) in &col {
                    let v = a.get(*i, *j) - ci * cj / &pivot;
                    a.set(*i, *j, v);
                }
            }
        }
        Ok(true)
    }
}
