//! Type automorphism groups, flag orbits, and the orbit-sum / orbit-difference
//! change of basis that splits each pair-density quadratic form into two
//! orthogonal diagonal blocks.

use crate::error::{Error, Result};
use crate::flags::{FlagBasis, PairDensityTensor, TypeSigma};
use crate::hypergraph::Permutation;
use crate::mask::Mask;
use crate::rat::{rat_u64, Rat};
use crate::ratmat::RatMat;
use num::{BigInt, Zero};
use std::collections::HashMap;

/// The automorphism group Γ_σ of a type: label permutations α for which the
/// relabeled type is isomorphic to the type as a flag, i.e. the edge-set
/// automorphisms of the underlying graph.
pub fn type_automorphisms(sigma: &TypeSigma) -> Vec<Permutation> {
    sigma.graph().automorphisms()
}

/// Symmetry-adapted integer basis over the flag index space: orbit indicator
/// sums (`plus_vectors`) and anchored differences within each orbit
/// (`minus_vectors`).
#[derive(Clone, Debug)]
pub struct OrbitBasis {
    sigma: TypeSigma,
    m: usize,
    pub plus_vectors: Vec<Vec<i64>>,
    pub minus_vectors: Vec<Vec<i64>>,
    pub orbit_assignment: Vec<usize>,
}

impl OrbitBasis {
    pub fn sigma(&self) -> &TypeSigma {
        &self.sigma
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn basis_len(&self) -> usize {
        self.orbit_assignment.len()
    }

    /// Columns of the change-of-basis matrix B: plus vectors then minus
    /// vectors.
    pub fn columns(&self) -> Vec<Vec<i64>> {
        self.plus_vectors
            .iter()
            .chain(self.minus_vectors.iter())
            .cloned()
            .collect()
    }

    /// Assembles the raw-coordinate matrix B Q' Bᵀ from block coordinates.
    pub fn to_raw(&self, q_block: &RatMat) -> Result<RatMat> {
        q_block.congruence_by_int_columns(&self.columns())
    }
}

/// The action of α on a flag: relabel the labeled vertices by α and
/// re-identify the result in the basis. Returns the permutation of flag
/// indices induced by each group element.
fn action_table(basis: &FlagBasis, group: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    let s = basis.sigma().s();
    let m = basis.m();
    let canon: Vec<Mask> = basis.flags().iter().map(|f| f.canonical_mask()).collect();
    let mut index: HashMap<Mask, usize> = HashMap::new();
    for (i, c) in canon.iter().enumerate() {
        index.insert(*c, i);
    }
    let mut table = Vec::with_capacity(group.len());
    for alpha in group {
        if alpha.n() != s {
            return Err(Error::DimensionMismatch(
                "group element size differs from the type size".into(),
            ));
        }
        let mut perm: Vec<usize> = (0..m).collect();
        for (v, slot) in perm.iter_mut().enumerate().take(s) {
            *slot = alpha.apply(v + 1) - 1;
        }
        let mut row = Vec::with_capacity(basis.len());
        for f in basis.flags() {
            let moved = f.compact().apply_perm(&perm).canonical_with_fixed(s);
            let idx = index.get(&moved.mask).ok_or_else(|| {
                Error::Internal("group action left the flag basis".into())
            })?;
            row.push(*idx);
        }
        table.push(row);
    }
    Ok(table)
}

/// Partition of the flag basis into Γ_σ-orbits, with the plus/minus basis.
/// The lowest-index flag of each orbit anchors its difference vectors.
pub fn flag_orbits(basis: &FlagBasis, group: &[Permutation]) -> Result<OrbitBasis> {
    let n = basis.len();
    let table = action_table(basis, group)?;
    let mut orbit_assignment = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if orbit_assignment[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        orbit_assignment[start] = id;
        while let Some(i) = stack.pop() {
            members.push(i);
            for row in &table {
                let j = row[i];
                if orbit_assignment[j] == usize::MAX {
                    orbit_assignment[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    let mut plus_vectors = Vec::with_capacity(orbits.len());
    let mut minus_vectors = Vec::new();
    for orbit in &orbits {
        let mut v = vec![0i64; n];
        for &i in orbit {
            v[i] = 1;
        }
        plus_vectors.push(v);
        let anchor = orbit[0];
        for &other in &orbit[1..] {
            let mut w = vec![0i64; n];
            w[anchor] = 1;
            w[other] = -1;
            minus_vectors.push(w);
        }
    }
    Ok(OrbitBasis {
        sigma: basis.sigma().clone(),
        m: basis.m(),
        plus_vectors,
        minus_vectors,
        orbit_assignment,
    })
}

/// Exact check that every plus/minus pair is orthogonal under every host
/// matrix: vᵀ M_H w = 0.
pub fn orthogonality_check(
    basis: &FlagBasis,
    orbit_basis: &OrbitBasis,
    tensor: &PairDensityTensor,
) -> Result<bool> {
    if basis.len() != orbit_basis.basis_len() {
        return Err(Error::DimensionMismatch(
            "orbit basis built for a different flag basis".into(),
        ));
    }
    for h in 0..tensor.graphs().len() {
        let counts = tensor.counts(h);
        for v in &orbit_basis.plus_vectors {
            for w in &orbit_basis.minus_vectors {
                let mut acc: i128 = 0;
                for &(a, b, c) in &counts.entries {
                    let va = v[a as usize] as i128;
                    let wb = w[b as usize] as i128;
                    if va != 0 && wb != 0 {
                        acc += va * wb * c as i128;
                    }
                }
                if acc != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Signed integer pair counts in the transformed basis, per host graph.
#[derive(Clone, Debug)]
pub struct BlockTensor {
    pub plus_len: usize,
    pub minus_len: usize,
    mats: Vec<Vec<(u32, u32, i64)>>,
    totals: Vec<u64>,
}

impl BlockTensor {
    pub fn dim(&self) -> usize {
        self.plus_len + self.minus_len
    }

    pub fn graphs_len(&self) -> usize {
        self.mats.len()
    }

    pub fn entries(&self, h_index: usize) -> &[(u32, u32, i64)] {
        &self.mats[h_index]
    }

    pub fn total(&self, h_index: usize) -> u64 {
        self.totals[h_index]
    }

    pub fn entry(&self, h_index: usize, i: usize, j: usize) -> Rat {
        let num: i64 = self.mats[h_index]
            .iter()
            .filter(|&&(a, b, _)| a as usize == i && b as usize == j)
            .map(|&(_, _, c)| c)
            .sum();
        Rat::new(BigInt::from(num), BigInt::from(self.totals[h_index]))
    }

    /// c_H computed in transformed coordinates.
    pub fn c_h(&self, q_block: &RatMat, h_index: usize) -> Result<Rat> {
        if q_block.dim() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimension {} differs from transformed basis size {}",
                q_block.dim(),
                self.dim()
            )));
        }
        let mut acc = Rat::zero();
        for &(i, j, c) in &self.mats[h_index] {
            acc += q_block.get(i as usize, j as usize) * Rat::from_integer(BigInt::from(c));
        }
        Ok(acc / Rat::from_integer(BigInt::from(self.totals[h_index])))
    }
}

/// Per host graph, Bᵀ M_H B where B stacks the plus then minus vectors as
/// columns. The plus/minus cross blocks must vanish exactly and are stored as
/// structural zeros; a nonzero cross entry means the orthogonality premise
/// failed.
pub fn block_transform(
    tensor: &PairDensityTensor,
    orbit_basis: &OrbitBasis,
) -> Result<BlockTensor> {
    let cols = orbit_basis.columns();
    let d = cols.len();
    if d != orbit_basis.basis_len() || d != tensor.basis().len() {
        return Err(Error::DimensionMismatch(
            "orbit basis does not match the tensor's flag basis".into(),
        ));
    }
    let p = orbit_basis.plus_vectors.len();
    let mut mats = Vec::with_capacity(tensor.graphs().len());
    let mut totals = Vec::with_capacity(tensor.graphs().len());
    for h in 0..tensor.graphs().len() {
        let counts = tensor.counts(h);
        let mut out: Vec<(u32, u32, i64)> = Vec::new();
        for (i, ci) in cols.iter().enumerate() {
            for (j, cj) in cols.iter().enumerate() {
                let mut acc: i128 = 0;
                for &(a, b, c) in &counts.entries {
                    let va = ci[a as usize] as i128;
                    let wb = cj[b as usize] as i128;
                    if va != 0 && wb != 0 {
                        acc += va * wb * c as i128;
                    }
                }
                if acc != 0 {
                    let cross = (i < p) != (j < p);
                    if cross {
                        return Err(Error::Internal(
                            "plus/minus cross block is nonzero; orthogonality failed".into(),
                        ));
                    }
                    out.push((i as u32, j as u32, acc as i64));
                }
            }
        }
        mats.push(out);
        totals.push(counts.total);
    }
    Ok(BlockTensor {
        plus_len: p,
        minus_len: orbit_basis.minus_vectors.len(),
        mats,
        totals,
    })
}

/// The exact total mass rat for a block tensor row, handy for audits.
pub fn block_total(tensor: &BlockTensor, h_index: usize) -> Rat {
    rat_u64(1, 1) * Rat::from_integer(BigInt::from(tensor.total(h_index)))
}
