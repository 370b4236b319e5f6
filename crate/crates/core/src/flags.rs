//! Types, flags, flag bases, and exact pair-density data.
//!
//! A flag is a graph whose first s vertices are labeled; the labeled part is
//! always kept in the normalized position 1..s, so flag isomorphism is graph
//! isomorphism fixing those vertices pointwise. The pair expectation of two
//! flags in a host graph H averages over *all* injective placements of the
//! labels into H together with two extensions disjoint outside the labels;
//! placements that do not induce the type contribute zero, which is what
//! makes the semidefinite bound sound.

use crate::comb::{binomial, falling, for_each_combination, for_each_injection};
use crate::enumerate::{augment_admissible, ForbiddenFamily};
use crate::error::{Error, Result};
use crate::hypergraph::{Compact, Hypergraph};
use crate::mask::Mask;
use crate::rat::{rat_u64, Rat};
use crate::ratmat::RatMat;
use num::{BigInt, Zero};
use rayon::prelude::*;
use std::collections::HashMap;

/// A fully labeled graph: vertex i carries label i for every i in 1..s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeSigma {
    graph: Hypergraph,
}

impl TypeSigma {
    pub fn new(graph: Hypergraph) -> TypeSigma {
        TypeSigma { graph }
    }

    pub fn edgeless(r: usize, s: usize) -> TypeSigma {
        TypeSigma {
            graph: Hypergraph::empty(r, s),
        }
    }

    pub fn s(&self) -> usize {
        self.graph.n()
    }

    pub fn r(&self) -> usize {
        self.graph.r()
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn is_admissible(&self, family: &ForbiddenFamily) -> bool {
        family.is_admissible(&self.graph)
    }

    pub(crate) fn compact(&self) -> Compact {
        Compact::from_hypergraph(&self.graph)
    }
}

/// A graph with its first `labeled` vertices distinguished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    graph: Hypergraph,
    labeled: usize,
}

impl Flag {
    pub fn new(graph: Hypergraph, labeled: usize) -> Result<Flag> {
        if labeled > graph.n() {
            return Err(Error::InvalidFlag(format!(
                "{} labeled vertices on a {}-vertex graph",
                labeled,
                graph.n()
            )));
        }
        Ok(Flag { graph, labeled })
    }

    /// Construction that checks the labeled part equals `sigma` exactly
    /// (labels are significant, not just up to isomorphism).
    pub fn with_type(graph: Hypergraph, sigma: &TypeSigma) -> Result<Flag> {
        let flag = Flag::new(graph, sigma.s())?;
        if flag.type_of()? != *sigma {
            return Err(Error::InvalidFlag(
                "labeled part does not equal the claimed type".into(),
            ));
        }
        Ok(flag)
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    /// Number of labeled vertices s.
    pub fn s(&self) -> usize {
        self.labeled
    }

    /// Total order m = |V|.
    pub fn m(&self) -> usize {
        self.graph.n()
    }

    /// The induced labeled subgraph on vertices 1..s.
    pub fn type_of(&self) -> Result<TypeSigma> {
        let verts: Vec<usize> = (1..=self.labeled).collect();
        Ok(TypeSigma::new(self.graph.induced_subgraph(&verts)?))
    }

    pub(crate) fn compact(&self) -> Compact {
        Compact::from_hypergraph(&self.graph)
    }

    pub(crate) fn canonical_mask(&self) -> Mask {
        self.compact().canonical_with_fixed(self.labeled).mask
    }

    /// All edge masks obtained by permuting the unlabeled vertices; the set
    /// of masks a host graph can present for this flag.
    pub(crate) fn variant_masks(&self) -> Vec<Mask> {
        let cg = self.compact();
        let m = self.m();
        let s = self.labeled;
        let free: Vec<usize> = (s..m).collect();
        let mut out = Vec::new();
        for_each_injection(&free, m - s, |images| {
            let mut perm: Vec<usize> = (0..m).collect();
            for (i, &img) in images.iter().enumerate() {
                perm[s + i] = img;
            }
            out.push(cg.apply_perm(&perm).mask);
        });
        out.sort_by(|a, b| a.colex_cmp(b));
        out.dedup();
        out
    }
}

/// σ-flag isomorphism: an edge-preserving bijection that is the identity on
/// the labeled vertices.
pub fn flag_isomorphic(a: &Flag, b: &Flag) -> Result<bool> {
    if a.s() != b.s() || a.m() != b.m() {
        return Err(Error::DimensionMismatch(format!(
            "flag shapes differ: ({}, {}) vs ({}, {})",
            a.s(),
            a.m(),
            b.s(),
            b.m()
        )));
    }
    if a.graph.r() != b.graph.r() {
        return Err(Error::UniformityMismatch("flag uniformities differ".into()));
    }
    Ok(a.canonical_mask() == b.canonical_mask())
}

/// The complete list of admissible σ-flags of order m up to flag isomorphism,
/// in a fixed deterministic order (edge count, then edge list).
#[derive(Clone, Debug)]
pub struct FlagBasis {
    sigma: TypeSigma,
    m: usize,
    flags: Vec<Flag>,
}

impl FlagBasis {
    pub fn sigma(&self) -> &TypeSigma {
        &self.sigma
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Index lookup table covering every mask under which a basis flag can
    /// appear when unlabeled vertices are read off in an arbitrary order.
    pub(crate) fn lookup(&self) -> FlagLookup {
        let mut map = HashMap::new();
        for (i, f) in self.flags.iter().enumerate() {
            for mask in f.variant_masks() {
                let prev = map.insert(mask, i as u32);
                debug_assert!(prev.is_none(), "flags share a variant mask");
            }
        }
        FlagLookup {
            s: self.sigma.s(),
            m: self.m,
            sigma_mask: self.sigma.compact().mask,
            map,
        }
    }

    /// Position of a flag in the basis, by flag isomorphism.
    pub fn index_of(&self, flag: &Flag) -> Option<usize> {
        let target = flag.canonical_mask();
        self.flags
            .iter()
            .position(|f| f.canonical_mask() == target)
    }
}

pub(crate) struct FlagLookup {
    pub s: usize,
    pub m: usize,
    pub sigma_mask: Mask,
    map: HashMap<Mask, u32>,
}

impl FlagLookup {
    #[inline]
    pub fn get(&self, mask: &Mask) -> Option<u32> {
        self.map.get(mask).copied()
    }

    pub fn dim(&self) -> usize {
        self.map.values().copied().max().map_or(0, |m| m as usize + 1)
    }
}

/// Enumerates the admissible σ-flags of order m up to isomorphism by vertex
/// augmentation above the type, mirroring the graph enumerator but fixing the
/// labeled prefix.
pub fn enumerate_flags(
    sigma: &TypeSigma,
    m: usize,
    family: &ForbiddenFamily,
) -> Result<FlagBasis> {
    let s = sigma.s();
    if sigma.r() != family.r() {
        return Err(Error::UniformityMismatch(
            "type and family uniformities differ".into(),
        ));
    }
    if m < s {
        return Err(Error::InvalidType(format!("m = {m} below type size {s}")));
    }
    if !sigma.is_admissible(family) {
        return Err(Error::InvalidType(
            "type graph contains a forbidden member".into(),
        ));
    }
    let members = family.cooked_members();
    let mut level = vec![sigma.compact()];
    for k in s + 1..=m {
        level = augment_admissible(&level, &members, k, s);
    }
    let mut flags: Vec<Flag> = level
        .iter()
        .map(|c| Flag {
            graph: c.to_hypergraph(),
            labeled: s,
        })
        .collect();
    flags.sort_by(|a, b| {
        (a.graph.edge_count(), a.graph.edges()).cmp(&(b.graph.edge_count(), b.graph.edges()))
    });
    Ok(FlagBasis {
        sigma: sigma.clone(),
        m,
        flags,
    })
}

/// p(H; G): probability that a random |V(H)|-subset of V(G) induces a
/// subgraph isomorphic to H.
pub fn subgraph_density(h: &Hypergraph, g: &Hypergraph) -> Result<Rat> {
    if h.r() != g.r() {
        return Err(Error::UniformityMismatch(
            "density of a graph with different uniformity".into(),
        ));
    }
    let l = h.n();
    if l > g.n() {
        return Err(Error::DimensionMismatch(format!(
            "subgraph order {} exceeds host order {}",
            l,
            g.n()
        )));
    }
    let target = Compact::from_hypergraph(h).canonical_with_fixed(0).mask;
    let gc = Compact::from_hypergraph(g);
    let pool: Vec<usize> = (0..g.n()).collect();
    let mut hits = 0u64;
    for_each_combination(&pool, l, |subset| {
        let induced = gc.induced_relabeled(subset);
        if induced.canonical_with_fixed(0).mask == target {
            hits += 1;
        }
    });
    Ok(rat_u64(hits, binomial(g.n(), l)))
}

/// p(F, θ; G): probability that a random m-set containing im(θ) induces a
/// flag isomorphic to F, for an explicit injective θ (1-based vertices of G).
pub fn flag_density(f: &Flag, theta: &[usize], g: &Hypergraph) -> Result<Rat> {
    let s = f.s();
    let m = f.m();
    if theta.len() != s {
        return Err(Error::DimensionMismatch(format!(
            "theta has {} entries for a type of size {s}",
            theta.len()
        )));
    }
    let mut seen = vec![false; g.n()];
    for &v in theta {
        if v < 1 || v > g.n() || seen[v - 1] {
            return Err(Error::InvalidSubset(format!("theta {theta:?} is not injective into the host")));
        }
        seen[v - 1] = true;
    }
    if g.n() < m {
        return Err(Error::DimensionMismatch(
            "host too small for the flag order".into(),
        ));
    }
    let variants: Vec<Mask> = f.variant_masks();
    let gc = Compact::from_hypergraph(g);
    let theta0: Vec<usize> = theta.iter().map(|&v| v - 1).collect();
    let rest: Vec<usize> = (0..g.n()).filter(|v| !theta0.contains(v)).collect();
    let mut hits = 0u64;
    let mut verts = theta0.clone();
    for_each_combination(&rest, m - s, |ext| {
        verts.truncate(s);
        verts.extend_from_slice(ext);
        let mask = gc.induced_relabeled(&verts).mask;
        if variants.binary_search_by(|probe| probe.colex_cmp(&mask)).is_ok() {
            hits += 1;
        }
    });
    Ok(rat_u64(hits, binomial(g.n() - s, m - s)))
}

/// Ordered-pair counts for one host graph: entry (a, b) counts the tuples
/// (θ, V_a, V_b) realizing flags a and b; `total` counts all tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseCounts {
    pub entries: Vec<(u32, u32, u64)>,
    pub total: u64,
}

impl SparseCounts {
    pub fn count(&self, a: u32, b: u32) -> u64 {
        self.entries
            .iter()
            .find(|&&(x, y, _)| x == a && y == b)
            .map(|&(_, _, c)| c)
            .unwrap_or(0)
    }

    pub fn entry(&self, a: u32, b: u32) -> Rat {
        rat_u64(self.count(a, b), self.total)
    }

    pub fn sum(&self) -> Rat {
        rat_u64(self.entries.iter().map(|e| e.2).sum(), self.total)
    }
}

/// Core tuple enumeration: for every injective θ: [s] -> V(H) and every
/// ordered pair of (m-s)-extensions V_a, V_b with V_a ∩ V_b = im(θ), record
/// which basis flags the two induced flags are.
pub(crate) fn sparse_pair_counts(h: &Compact, lookup: &FlagLookup) -> Result<SparseCounts> {
    let l = h.n;
    let s = lookup.s;
    let m = lookup.m;
    if l + s < 2 * m {
        return Err(Error::DimensionMismatch(format!(
            "host order {l} below 2m - s = {}",
            2 * m - s
        )));
    }
    let dim = lookup.dim();
    let mut dense = vec![0u64; dim * dim];
    let ext = m - s;
    let pool: Vec<usize> = (0..l).collect();
    let mut verts: Vec<usize> = Vec::with_capacity(m);
    let mut missing_flag = false;
    for_each_injection(&pool, s, |theta| {
        // Placements not inducing the type contribute no counts.
        if h.induced_relabeled(theta).mask != lookup.sigma_mask {
            return;
        }
        let rest: Vec<usize> = pool.iter().copied().filter(|v| !theta.contains(v)).collect();
        // Flag index of every extension subset, plus its bitmask over `rest`.
        let mut subsets: Vec<(u32, u32)> = Vec::new(); // (index, rest-bitmask)
        for_each_combination(&(0..rest.len()).collect::<Vec<_>>(), ext, |ids| {
            verts.clear();
            verts.extend_from_slice(theta);
            for &i in ids {
                verts.push(rest[i]);
            }
            let mask = h.induced_relabeled(&verts).mask;
            match lookup.get(&mask) {
                Some(idx) => {
                    let bits: u32 = ids.iter().map(|&i| 1u32 << i).sum();
                    subsets.push((idx, bits));
                }
                None => missing_flag = true,
            }
        });
        if missing_flag {
            return;
        }
        for &(a, bits_a) in &subsets {
            for &(b, bits_b) in &subsets {
                if bits_a & bits_b == 0 {
                    dense[a as usize * dim + b as usize] += 1;
                }
            }
        }
    });
    if missing_flag {
        return Err(Error::Internal(
            "induced flag missing from basis; host graph is not admissible".into(),
        ));
    }
    let total = falling(l, s) * binomial(l - s, ext) * binomial(l - m, ext);
    let mut entries = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            let c = dense[a * dim + b];
            if c > 0 {
                entries.push((a as u32, b as u32, c));
            }
        }
    }
    Ok(SparseCounts { entries, total })
}

/// E over θ of p(F_a, F_b, θ; H): exact rational.
pub fn pair_expectation(
    fa: &Flag,
    fb: &Flag,
    sigma: &TypeSigma,
    h: &Hypergraph,
) -> Result<Rat> {
    if fa.s() != sigma.s() || fb.s() != sigma.s() || fa.m() != fb.m() {
        return Err(Error::DimensionMismatch(
            "flag shapes disagree with the type".into(),
        ));
    }
    let fa_checked = Flag::with_type(fa.graph().clone(), sigma)?;
    let fb_checked = Flag::with_type(fb.graph().clone(), sigma)?;
    let s = sigma.s();
    let m = fa.m();
    let l = h.n();
    if l + s < 2 * m {
        return Err(Error::DimensionMismatch(format!(
            "host order {l} below 2m - s = {}",
            2 * m - s
        )));
    }
    let va: Vec<Mask> = fa_checked.variant_masks();
    let vb: Vec<Mask> = fb_checked.variant_masks();
    let hc = Compact::from_hypergraph(h);
    let sigma_mask = sigma.compact().mask;
    let ext = m - s;
    let pool: Vec<usize> = (0..l).collect();
    let mut hits = 0u64;
    let mut verts: Vec<usize> = Vec::with_capacity(m);
    for_each_injection(&pool, s, |theta| {
        if hc.induced_relabeled(theta).mask != sigma_mask {
            return;
        }
        let rest: Vec<usize> = pool.iter().copied().filter(|v| !theta.contains(v)).collect();
        let mut tag: Vec<(bool, bool, u32)> = Vec::new();
        for_each_combination(&(0..rest.len()).collect::<Vec<_>>(), ext, |ids| {
            verts.clear();
            verts.extend_from_slice(theta);
            for &i in ids {
                verts.push(rest[i]);
            }
            let mask = hc.induced_relabeled(&verts).mask;
            let in_a = va.binary_search_by(|p| p.colex_cmp(&mask)).is_ok();
            let in_b = vb.binary_search_by(|p| p.colex_cmp(&mask)).is_ok();
            let bits: u32 = ids.iter().map(|&i| 1u32 << i).sum();
            tag.push((in_a, in_b, bits));
        });
        for &(in_a, _, bits_a) in &tag {
            if !in_a {
                continue;
            }
            for &(_, in_b, bits_b) in &tag {
                if in_b && bits_a & bits_b == 0 {
                    hits += 1;
                }
            }
        }
    });
    let total = falling(l, s) * binomial(l - s, ext) * binomial(l - m, ext);
    Ok(rat_u64(hits, total))
}

/// Fraction of injective placements of the type's labels that induce the
/// type; the exact total mass of a pair-count matrix.
pub fn type_embedding_probability(sigma: &TypeSigma, h: &Hypergraph) -> Result<Rat> {
    let s = sigma.s();
    if h.n() < s {
        return Err(Error::DimensionMismatch("host smaller than type".into()));
    }
    let hc = Compact::from_hypergraph(h);
    let sigma_mask = sigma.compact().mask;
    let pool: Vec<usize> = (0..h.n()).collect();
    let mut hits = 0u64;
    for_each_injection(&pool, s, |theta| {
        if hc.induced_relabeled(theta).mask == sigma_mask {
            hits += 1;
        }
    });
    Ok(rat_u64(hits, falling(h.n(), s)))
}

/// The exact pair-density tensor for a list of same-order host graphs.
#[derive(Clone, Debug)]
pub struct PairDensityTensor {
    sigma: TypeSigma,
    m: usize,
    basis: FlagBasis,
    graphs: Vec<Hypergraph>,
    mats: Vec<SparseCounts>,
}

pub fn pair_density_tensor(
    sigma: &TypeSigma,
    m: usize,
    graphs: &[Hypergraph],
    family: &ForbiddenFamily,
) -> Result<PairDensityTensor> {
    let basis = enumerate_flags(sigma, m, family)?;
    let s = sigma.s();
    for g in graphs {
        if g.n() + s < 2 * m {
            return Err(Error::DimensionMismatch(format!(
                "graph order {} below 2m - s = {}",
                g.n(),
                2 * m - s
            )));
        }
    }
    let lookup = basis.lookup();
    let mats: Result<Vec<SparseCounts>> = graphs
        .par_iter()
        .map(|g| sparse_pair_counts(&Compact::from_hypergraph(g), &lookup))
        .collect();
    Ok(PairDensityTensor {
        sigma: sigma.clone(),
        m,
        basis,
        graphs: graphs.to_vec(),
        mats: mats?,
    })
}

impl PairDensityTensor {
    pub fn sigma(&self) -> &TypeSigma {
        &self.sigma
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn basis(&self) -> &FlagBasis {
        &self.basis
    }

    pub fn graphs(&self) -> &[Hypergraph] {
        &self.graphs
    }

    pub fn counts(&self, h_index: usize) -> &SparseCounts {
        &self.mats[h_index]
    }

    pub fn entry(&self, h_index: usize, a: usize, b: usize) -> Rat {
        self.mats[h_index].entry(a as u32, b as u32)
    }

    /// Symmetry check for one host matrix.
    pub fn is_symmetric(&self, h_index: usize) -> bool {
        let m = &self.mats[h_index];
        m.entries
            .iter()
            .all(|&(a, b, c)| m.count(b, a) == c)
    }

    /// c_H(σ, m, Q) = Σ over ordered flag pairs of q_ab E[p(F_a, F_b, θ; H)].
    pub fn c_h(&self, q: &RatMat, h_index: usize) -> Result<Rat> {
        if q.dim() != self.basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimension {} differs from basis size {}",
                q.dim(),
                self.basis.len()
            )));
        }
        let counts = &self.mats[h_index];
        let mut acc = Rat::zero();
        for &(a, b, c) in &counts.entries {
            acc += q.get(a as usize, b as usize) * Rat::from_integer(BigInt::from(c));
        }
        Ok(acc / Rat::from_integer(BigInt::from(counts.total)))
    }

    /// c_H against a host located by isomorphism.
    pub fn c_h_for_graph(&self, q: &RatMat, h: &Hypergraph) -> Result<Rat> {
        let target = h.canonical_form();
        let idx = self
            .graphs
            .iter()
            .position(|g| g.canonical_form() == target)
            .ok_or_else(|| Error::DegenerateInput("graph not present in the tensor".into()))?;
        self.c_h(q, idx)
    }

    /// Audit dump: one block per host graph, rows `a b p/q`.
    pub fn dump_text(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.mats.iter().enumerate() {
            out.push_str(&format!("H {i}\n"));
            for &(a, b, c) in &m.entries {
                out.push_str(&format!("{a} {b} {}\n", rat_u64(c, m.total)));
            }
        }
        out
    }
}

/// The trivial averaging bound: the maximum density over the list.
pub fn averaging_bound(graphs: &[Hypergraph]) -> Result<Rat> {
    if graphs.is_empty() {
        return Err(Error::DegenerateInput("empty graph list".into()));
    }
    let mut best: Option<Rat> = None;
    for g in graphs {
        let d = g.density()?;
        if best.as_ref().map_or(true, |b| d > *b) {
            best = Some(d);
        }
    }
    Ok(best.unwrap())
}

/// Sampled finite positivity: for PSD rational Q and a fixed injective θ, the
/// vector of single-flag densities satisfies pᵀQp >= 0. Used by tests.
pub fn flag_vector(basis: &FlagBasis, theta: &[usize], g: &Hypergraph) -> Result<Vec<Rat>> {
    basis
        .flags()
        .iter()
        .map(|f| flag_density(f, theta, g))
        .collect()
}

pub fn quadratic_form(q: &RatMat, v: &[Rat]) -> Result<Rat> {
    if q.dim() != v.len() {
        return Err(Error::DimensionMismatch("vector length".into()));
    }
    let mut acc = Rat::zero();
    for i in 0..v.len() {
        if v[i].is_zero() {
            continue;
        }
        for j in 0..v.len() {
            if !v[j].is_zero() {
                acc += q.get(i, j) * &v[i] * &v[j];
            }
        }
    }
    Ok(acc)
}
