//! Exact representation, isomorphism, canonical forms, and densities of
//! r-uniform hypergraphs on small vertex sets.
//!
//! Vertices are 1-based in the public type and in the text format; the
//! internal engine works 0-based over edge bitmasks indexed by colex rank.

use crate::comb::{binomial, subset_rank, subset_unrank};
use crate::error::{Error, Result};
use crate::mask::{Mask, MASK_BITS};
use crate::rat::{rat_u64, Rat};
use std::cmp::Ordering;
use std::fmt;

/// A bijection on {1..n}, stored as the image vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::DegenerateInput(format!(
                    "not a bijection on 1..{n}: {images:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// (self ∘ other)(v) = self(other(v)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: (1..=self.n()).map(|v| self.apply(other.apply(v))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub(crate) fn from_zero_based(images: &[usize]) -> Permutation {
        Permutation {
            images: images.iter().map(|&v| v + 1).collect(),
        }
    }
}

/// An r-uniform hypergraph on vertices {1..n}. Edges are stored sorted
/// ascending, the edge list sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates and normalizes the edge list. Sizes are capped at n <= 12
    /// with at most 256 possible edges; larger graphs are out of scope.
    pub fn new(r: usize, n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        if r == 0 {
            return Err(Error::DegenerateInput("uniformity r must be positive".into()));
        }
        if n == 0 {
            return Err(Error::DegenerateInput("vertex count must be positive".into()));
        }
        if n > 12 || binomial(n, r) as usize > MASK_BITS {
            return Err(Error::ResourceLimit(format!(
                "graphs with n = {n}, r = {r} exceed the supported size"
            )));
        }
        let mut norm: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for e in edges {
            let mut e = e.clone();
            e.sort_unstable();
            e.dedup();
            if e.len() != r {
                return Err(Error::DegenerateInput(format!(
                    "edge {e:?} does not have {r} distinct vertices"
                )));
            }
            if e[0] < 1 || e[r - 1] > n {
                return Err(Error::DegenerateInput(format!(
                    "edge {e:?} leaves the vertex range 1..{n}"
                )));
            }
            norm.push(e);
        }
        norm.sort();
        let before = norm.len();
        norm.dedup();
        if norm.len() != before {
            return Err(Error::DegenerateInput("duplicate edge".into()));
        }
        Ok(Hypergraph { r, n, edges: norm })
    }

    pub fn empty(r: usize, n: usize) -> Self {
        Hypergraph::new(r, n, &[]).expect("empty graph within size limits")
    }

    pub fn complete(r: usize, n: usize) -> Self {
        let mut edges = Vec::new();
        let mut pick = vec![0usize; r];
        fn rec(
            start: usize,
            depth: usize,
            r: usize,
            n: usize,
            pick: &mut [usize],
            out: &mut Vec<Vec<usize>>,
        ) {
            if depth == r {
                out.push(pick.to_vec());
                return;
            }
            for v in start..=n {
                pick[depth] = v;
                rec(v + 1, depth + 1, r, n, pick, out);
            }
        }
        rec(1, 0, r, n, &mut pick, &mut edges);
        Hypergraph::new(r, n, &edges).expect("complete graph within size limits")
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// |E| / C(n, r) as an exact rational.
    pub fn density(&self) -> Result<Rat> {
        if self.n < self.r {
            return Err(Error::DegenerateInput(format!(
                "density undefined for n = {} < r = {}",
                self.n, self.r
            )));
        }
        Ok(rat_u64(self.edges.len() as u64, binomial(self.n, self.r)))
    }

    /// Restriction to a vertex subset, relabeled 1..|subset| preserving the
    /// relative order of the kept vertices.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Hypergraph> {
        let mut sub = subset.to_vec();
        sub.sort_unstable();
        sub.dedup();
        if sub.len() != subset.len() {
            return Err(Error::InvalidSubset("repeated vertex in subset".into()));
        }
        if sub.iter().any(|&v| v < 1 || v > self.n) {
            return Err(Error::InvalidSubset(format!(
                "subset {subset:?} leaves the vertex range 1..{}",
                self.n
            )));
        }
        let pos = |v: usize| sub.binary_search(&v).ok();
        let mut edges = Vec::new();
        for e in &self.edges {
            let mapped: Option<Vec<usize>> = e.iter().map(|&v| pos(v).map(|i| i + 1)).collect();
            if let Some(m) = mapped {
                edges.push(m);
            }
        }
        Hypergraph::new(self.r, sub.len(), &edges)
    }

    /// Canonical representative of the isomorphism class: the colex-minimal
    /// edge set over all vertex relabelings. Two graphs are isomorphic exactly
    /// when their canonical forms are equal.
    pub fn canonical_form(&self) -> Hypergraph {
        let cg = Compact::from_hypergraph(self);
        cg.canonical_with_fixed(0).to_hypergraph()
    }

    /// True when an edge-preserving vertex bijection exists. Graphs of
    /// different uniformity or order are never isomorphic.
    pub fn is_isomorphic(&self, other: &Hypergraph) -> bool {
        if self.r != other.r || self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        self.canonical_form() == other.canonical_form()
    }

    /// Not-necessarily-induced containment: an injection of V(f) into V(self)
    /// mapping every edge of f onto an edge of self.
    pub fn contains_subgraph(&self, f: &Hypergraph) -> bool {
        if self.r != f.r || f.n > self.n || f.edges.len() > self.edges.len() {
            return false;
        }
        let g = Compact::from_hypergraph(self);
        let fc = CookedGraph::new(&Compact::from_hypergraph(f));
        g.contains(&fc, None)
    }

    /// All edge-set-preserving permutations of {1..n}.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let cg = Compact::from_hypergraph(self);
        cg.automorphisms_with_fixed(0)
            .iter()
            .map(|p| Permutation::from_zero_based(p))
            .collect()
    }

    /// Parses the multi-graph text format: blocks separated by `---` lines,
    /// each block a `r n` header followed by one edge per line; `#` comments
    /// and blank lines are ignored.
    pub fn parse_all(text: &str) -> Result<Vec<Hypergraph>> {
        let mut out = Vec::new();
        let mut block: Vec<&str> = Vec::new();
        let mut flush = |block: &mut Vec<&str>, out: &mut Vec<Hypergraph>| -> Result<()> {
            if block.is_empty() {
                return Ok(());
            }
            out.push(parse_block(block)?);
            block.clear();
            Ok(())
        };
        for raw in text.lines() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            if line == "---" {
                flush(&mut block, &mut out)?;
            } else {
                block.push(line);
            }
        }
        flush(&mut block, &mut out)?;
        Ok(out)
    }

    pub fn parse_single(text: &str) -> Result<Hypergraph> {
        let graphs = Hypergraph::parse_all(text)?;
        match graphs.len() {
            1 => Ok(graphs.into_iter().next().unwrap()),
            k => Err(Error::Parse(format!("expected exactly one graph, found {k}"))),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.r, self.n);
        for e in &self.edges {
            let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn list_to_text(graphs: &[Hypergraph]) -> String {
        graphs
            .iter()
            .map(|g| g.to_text())
            .collect::<Vec<_>>()
            .join("---\n")
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn strip_comment(line: &str) -> &str {
    let line = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    line.trim()
}

fn parse_block(lines: &[&str]) -> Result<Hypergraph> {
    let header: Vec<usize> = lines[0]
        .split_whitespace()
        .map(|w| {
            w.parse()
                .map_err(|_| Error::Parse(format!("bad header `{}`", lines[0])))
        })
        .collect::<Result<_>>()?;
    if header.len() != 2 {
        return Err(Error::Parse(format!(
            "expected `r n` header, got `{}`",
            lines[0]
        )));
    }
    let (r, n) = (header[0], header[1]);
    let mut edges = Vec::new();
    for line in &lines[1..] {
        let edge: Vec<usize> = line
            .split_whitespace()
            .map(|w| {
                w.parse()
                    .map_err(|_| Error::Parse(format!("bad edge `{line}`")))
            })
            .collect::<Result<_>>()?;
        edges.push(edge);
    }
    Hypergraph::new(r, n, &edges)
}

// ---------------------------------------------------------------------------
// Internal compact engine.
// ---------------------------------------------------------------------------

/// 0-based bitmask form of a hypergraph; the workhorse for canonicalization,
/// automorphisms, containment, and enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Compact {
    pub n: usize,
    pub r: usize,
    pub mask: Mask,
}

impl Compact {
    pub fn empty(r: usize, n: usize) -> Compact {
        Compact {
            n,
            r,
            mask: Mask::ZERO,
        }
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Compact {
        let mut mask = Mask::ZERO;
        let mut buf = vec![0usize; h.r];
        for e in &h.edges {
            for (b, &v) in buf.iter_mut().zip(e.iter()) {
                *b = v - 1;
            }
            mask.set(subset_rank(&buf));
        }
        Compact {
            n: h.n,
            r: h.r,
            mask,
        }
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.r, self.n, &self.edge_list_one_based())
            .expect("compact graph is always valid")
    }

    pub fn edge_list_zero_based(&self) -> Vec<Vec<usize>> {
        self.mask
            .iter_ones()
            .map(|rank| subset_unrank(rank, self.r))
            .collect()
    }

    pub fn edge_list_one_based(&self) -> Vec<Vec<usize>> {
        let mut edges: Vec<Vec<usize>> = self
            .edge_list_zero_based()
            .into_iter()
            .map(|e| e.iter().map(|&v| v + 1).collect())
            .collect();
        edges.sort();
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in self.edge_list_zero_based() {
            for v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    #[inline]
    pub fn has_edge_sorted(&self, edge: &[usize]) -> bool {
        self.mask.test(subset_rank(edge))
    }

    /// Relabels vertices through `perm` (0-based image vector).
    pub fn apply_perm(&self, perm: &[usize]) -> Compact {
        let mut mask = Mask::ZERO;
        let mut buf = vec![0usize; self.r];
        for e in self.edge_list_zero_based() {
            for (b, &v) in buf.iter_mut().zip(e.iter()) {
                *b = perm[v];
            }
            buf.sort_unstable();
            mask.set(subset_rank(&buf));
        }
        Compact {
            n: self.n,
            r: self.r,
            mask,
        }
    }

    /// Induced subgraph where `verts[i]` becomes vertex i. `verts` need not be
    /// sorted; this is how flags pin their labeled part.
    pub fn induced_relabeled(&self, verts: &[usize]) -> Compact {
        let k = verts.len();
        let mut mask = Mask::ZERO;
        let mut old = vec![0usize; self.r];
        let idx: Vec<usize> = (0..k).collect();
        crate::comb::for_each_combination(&idx, self.r, |s| {
            for (o, &i) in old.iter_mut().zip(s.iter()) {
                *o = verts[i];
            }
            old.sort_unstable();
            if self.has_edge_sorted(&old) {
                mask.set(subset_rank(s));
            }
        });
        Compact {
            n: k,
            r: self.r,
            mask,
        }
    }

    /// Colex-minimal edge mask over all relabelings fixing vertices 0..fixed
    /// pointwise. Orderly depth-first search: after placing k vertices,
    /// exactly the edges of colex rank < C(k, r) are determined, so prefix
    /// comparison against the incumbent prunes soundly.
    pub fn canonical_with_fixed(&self, fixed: usize) -> Compact {
        debug_assert!(fixed <= self.n);
        let n = self.n;
        if self.mask.is_zero() {
            return *self;
        }
        let prefix_bits: Vec<usize> = (0..=n).map(|k| binomial(k, self.r) as usize).collect();

        struct Dfs<'a> {
            g: &'a Compact,
            prefix_bits: &'a [usize],
            fixed: usize,
            phi: Vec<usize>,
            used: Vec<bool>,
            tuple: Vec<usize>,
            best: Option<Mask>,
        }
        impl Dfs<'_> {
            /// Determined edge bits gained by placing old vertex `v` at slot `k`.
            fn new_bits(&mut self, k: usize, v: usize) -> Mask {
                let r = self.g.r;
                let mut add = Mask::ZERO;
                if k + 1 < r {
                    return add;
                }
                let slots: Vec<usize> = (0..k).collect();
                let g = self.g;
                let phi = &self.phi;
                let tuple = &mut self.tuple;
                crate::comb::for_each_combination(&slots, r - 1, |s| {
                    for (t, &slot) in tuple.iter_mut().zip(s.iter()) {
                        *t = phi[slot];
                    }
                    tuple[r - 1] = v;
                    tuple.sort_unstable();
                    if g.has_edge_sorted(tuple) {
                        add.set(subset_rank(s) + binomial(k, r) as usize);
                    }
                });
                add
            }

            fn rec(&mut self, k: usize, prefix: Mask) {
                let n = self.g.n;
                if k == n {
                    let better = match &self.best {
                        None => true,
                        Some(b) => prefix.colex_cmp(b) == Ordering::Less,
                    };
                    if better {
                        self.best = Some(prefix);
                    }
                    return;
                }
                if k < self.fixed {
                    let add = self.new_bits(k, k);
                    self.phi[k] = k;
                    self.used[k] = true;
                    self.rec(k + 1, prefix.union(&add));
                    self.used[k] = false;
                    return;
                }
                let mut cands: Vec<(usize, Mask)> = Vec::with_capacity(n - k);
                for v in 0..n {
                    if !self.used[v] {
                        let next = prefix.union(&self.new_bits(k, v));
                        cands.push((v, next));
                    }
                }
                cands.sort_by(|a, b| a.1.colex_cmp(&b.1).then(a.0.cmp(&b.0)));
                for (v, next) in cands {
                    if let Some(b) = &self.best {
                        let cut = self.prefix_bits[k + 1];
                        if next.colex_cmp(&b.low_bits(cut)) == Ordering::Greater {
                            continue;
                        }
                    }
                    self.phi[k] = v;
                    self.used[v] = true;
                    self.rec(k + 1, next);
                    self.used[v] = false;
                }
            }
        }

        let mut dfs = Dfs {
            g: self,
            prefix_bits: &prefix_bits,
            fixed,
            phi: vec![0; n],
            used: vec![false; n],
            tuple: vec![0; self.r],
            best: None,
        };
        dfs.rec(0, Mask::ZERO);
        Compact {
            n,
            r: self.r,
            mask: dfs.best.expect("search visits at least one labeling"),
        }
    }

    /// All permutations fixing 0..fixed pointwise that preserve the edge set.
    pub fn automorphisms_with_fixed(&self, fixed: usize) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = Vec::new();
        let mut sigma = vec![0usize; n];
        let mut used = vec![false; n];

        fn ok_so_far(g: &Compact, sigma: &[usize], k: usize) -> bool {
            if k + 1 < g.r {
                return true;
            }
            let slots: Vec<usize> = (0..k).collect();
            let mut dom = vec![0usize; g.r];
            let mut img = vec![0usize; g.r];
            let mut good = true;
            crate::comb::for_each_combination(&slots, g.r - 1, |s| {
                if !good {
                    return;
                }
                for i in 0..g.r - 1 {
                    dom[i] = s[i];
                    img[i] = sigma[s[i]];
                }
                dom[g.r - 1] = k;
                img[g.r - 1] = sigma[k];
                img.sort_unstable();
                if g.has_edge_sorted(&dom) != g.has_edge_sorted(&img) {
                    good = false;
                }
            });
            good
        }

        fn rec(
            g: &Compact,
            k: usize,
            fixed: usize,
            sigma: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if k == g.n {
                out.push(sigma.clone());
                return;
            }
            let candidates: Vec<usize> = if k < fixed {
                vec![k]
            } else {
                (0..g.n).filter(|&v| !used[v]).collect()
            };
            for v in candidates {
                if used[v] {
                    continue;
                }
                sigma[k] = v;
                used[v] = true;
                if ok_so_far(g, sigma, k) {
                    rec(g, k + 1, fixed, sigma, used, out);
                }
                used[v] = false;
            }
        }

        rec(self, 0, fixed, &mut sigma, &mut used, &mut out);
        out
    }

    /// True when `f` embeds into self mapping edges onto edges. When
    /// `required` is given, only embeddings whose image covers that vertex
    /// count.
    pub fn contains(&self, f: &CookedGraph, required: Option<usize>) -> bool {
        if f.cg.r != self.r || f.cg.n > self.n {
            return false;
        }
        let g_deg = self.degrees();
        match required {
            None => {
                let mut img = vec![usize::MAX; f.cg.n];
                let mut used = vec![false; self.n];
                self.embed_from(f, &g_deg, &mut img, &mut used, 0)
            }
            Some(w) => {
                for u in 0..f.cg.n {
                    if f.degrees[u] > g_deg[w] {
                        continue;
                    }
                    let mut img = vec![usize::MAX; f.cg.n];
                    let mut used = vec![false; self.n];
                    img[u] = w;
                    used[w] = true;
                    if f.check_vertex(self, &img, u)
                        && self.embed_from(f, &g_deg, &mut img, &mut used, 0)
                    {
                        return true;
                    }
                }
                false
            }
        }
    }

    /// Embedding search seeded by mapping one edge of `f` onto `g_edge`; any
    /// forbidden copy that uses `g_edge` is found this way.
    pub fn contains_seeded(&self, f: &CookedGraph, g_edge: &[usize]) -> bool {
        if f.cg.r != self.r || f.cg.n > self.n {
            return false;
        }
        let g_deg = self.degrees();
        let mut orders: Vec<Vec<usize>> = Vec::new();
        crate::comb::for_each_injection(g_edge, g_edge.len(), |p| orders.push(p.to_vec()));
        for f_edge in &f.edges {
            for ord in &orders {
                let mut img = vec![usize::MAX; f.cg.n];
                let mut used = vec![false; self.n];
                let mut feasible = true;
                for (i, &fv) in f_edge.iter().enumerate() {
                    if f.degrees[fv] > g_deg[ord[i]] {
                        feasible = false;
                        break;
                    }
                    img[fv] = ord[i];
                    used[ord[i]] = true;
                }
                if !feasible {
                    continue;
                }
                for &fv in f_edge {
                    if !f.check_vertex(self, &img, fv) {
                        feasible = false;
                        break;
                    }
                }
                if feasible && self.embed_from(f, &g_deg, &mut img, &mut used, 0) {
                    return true;
                }
            }
        }
        false
    }

    fn embed_from(
        &self,
        f: &CookedGraph,
        g_deg: &[usize],
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        pos: usize,
    ) -> bool {
        if pos == f.order.len() {
            return true;
        }
        let u = f.order[pos];
        if img[u] != usize::MAX {
            return self.embed_from(f, g_deg, img, used, pos + 1);
        }
        for g_v in 0..self.n {
            if used[g_v] || g_deg[g_v] < f.degrees[u] {
                continue;
            }
            img[u] = g_v;
            used[g_v] = true;
            let ok = f.check_vertex(self, img, u) && self.embed_from(f, g_deg, img, used, pos + 1);
            img[u] = usize::MAX;
            used[g_v] = false;
            if ok {
                return true;
            }
        }
        false
    }
}

/// A compact graph with precomputed edge lists, adjacency, degrees, and a
/// search order that front-loads constraint checks during embedding.
#[derive(Clone, Debug)]
pub(crate) struct CookedGraph {
    pub cg: Compact,
    pub edges: Vec<Vec<usize>>,
    pub edges_at: Vec<Vec<usize>>,
    pub degrees: Vec<usize>,
    pub order: Vec<usize>,
    pub has_isolated_vertex: bool,
}

impl CookedGraph {
    pub fn new(cg: &Compact) -> CookedGraph {
        let edges = cg.edge_list_zero_based();
        let mut edges_at: Vec<Vec<usize>> = vec![Vec::new(); cg.n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                edges_at[v].push(i);
            }
        }
        let degrees: Vec<usize> = edges_at.iter().map(|l| l.len()).collect();
        let has_isolated_vertex = degrees.iter().any(|&d| d == 0);
        // Greedy order maximizing edges that become fully assigned early.
        let mut order: Vec<usize> = Vec::with_capacity(cg.n);
        let mut chosen = vec![false; cg.n];
        for _ in 0..cg.n {
            let mut best_v = usize::MAX;
            let mut best_key = (0usize, 0usize);
            for v in 0..cg.n {
                if chosen[v] {
                    continue;
                }
                let closed = edges
                    .iter()
                    .filter(|e| e.contains(&v) && e.iter().all(|&u| u == v || chosen[u]))
                    .count();
                let key = (closed, degrees[v]);
                if best_v == usize::MAX || key > best_key {
                    best_v = v;
                    best_key = key;
                }
            }
            chosen[best_v] = true;
            order.push(best_v);
        }
        CookedGraph {
            cg: *cg,
            edges,
            edges_at,
            degrees,
            order,
            has_isolated_vertex,
        }
    }

    /// All edges at `u` whose vertices are fully assigned must map onto edges
    /// of `g`.
    fn check_vertex(&self, g: &Compact, img: &[usize], u: usize) -> bool {
        let mut buf = vec![0usize; self.cg.r];
        'edges: for &ei in &self.edges_at[u] {
            for (b, &fv) in buf.iter_mut().zip(self.edges[ei].iter()) {
                if img[fv] == usize::MAX {
                    continue 'edges;
                }
                *b = img[fv];
            }
            buf.sort_unstable();
            if !g.has_edge_sorted(&buf) {
                return false;
            }
        }
        true
    }
}


#[cfg(test)]
mod tests {
    use super::testutil::{h2, k4_minus};
    use super::*;
    use crate::rat::rat;

    #[test]
    fn construction_validates() {
        assert!(Hypergraph::new(3, 4, &[vec![1, 2]]).is_err());
        assert!(Hypergraph::new(3, 4, &[vec![1, 2, 5]]).is_err());
        assert!(Hypergraph::new(3, 4, &[vec![1, 2, 2]]).is_err());
        assert!(Hypergraph::new(3, 4, &[vec![1, 2, 3], vec![3, 2, 1]]).is_err());
        assert!(Hypergraph::new(0, 4, &[]).is_err());
        assert!(Hypergraph::new(3, 13, &[]).is_err());
        let g = Hypergraph::new(3, 5, &[vec![5, 2, 1], vec![1, 2, 3]]).unwrap();
        assert_eq!(g.edges(), &[vec![1, 2, 3], vec![1, 2, 5]]);
    }

    #[test]
    fn density_examples() {
        assert_eq!(h2().density().unwrap(), rat(1, 2));
        assert_eq!(Hypergraph::empty(3, 5).density().unwrap(), rat(0, 1));
        assert_eq!(Hypergraph::complete(3, 4).density().unwrap(), rat(1, 1));
        assert!(Hypergraph::empty(3, 2).density().is_err());
    }

    #[test]
    fn induced_examples() {
        let h = h2();
        let s = h.induced_subgraph(&[1, 3, 4]).unwrap();
        assert_eq!(s.n(), 3);
        assert_eq!(s.edges(), &[vec![1, 2, 3]]);
        let all = h.induced_subgraph(&[1, 2, 3, 4]).unwrap();
        assert_eq!(all, h);
        let k5 = Hypergraph::complete(3, 5);
        for sub in [[1, 2, 3, 4], [2, 3, 4, 5], [1, 2, 4, 5]] {
            assert_eq!(
                k5.induced_subgraph(&sub).unwrap(),
                Hypergraph::complete(3, 4)
            );
        }
        assert!(h.induced_subgraph(&[1, 7]).is_err());
        assert!(h.induced_subgraph(&[1, 1]).is_err());
    }

    #[test]
    fn canonical_is_idempotent_and_iso_invariant() {
        let graphs = [
            k4_minus(),
            h2(),
            Hypergraph::empty(3, 4),
            Hypergraph::complete(3, 5),
        ];
        for g in &graphs {
            let c = g.canonical_form();
            assert_eq!(c.canonical_form(), c);
            assert_eq!(c.edge_count(), g.edge_count());
        }
        let g = k4_minus();
        for perm in crate::comb::all_permutations(4) {
            let mapped: Vec<Vec<usize>> = g
                .edges()
                .iter()
                .map(|e| e.iter().map(|&v| perm[v - 1] + 1).collect())
                .collect();
            let h = Hypergraph::new(3, 4, &mapped).unwrap();
            assert_eq!(h.canonical_form(), g.canonical_form());
        }
    }

    #[test]
    fn three_sparse_graphs_have_distinct_canonical_forms() {
        let h0 = Hypergraph::empty(3, 4);
        let h1 = Hypergraph::new(3, 4, &[vec![1, 2, 3]]).unwrap();
        let c0 = h0.canonical_form();
        let c1 = h1.canonical_form();
        let c2 = h2().canonical_form();
        assert_ne!(c0, c1);
        assert_ne!(c0, c2);
        assert_ne!(c1, c2);
    }

    #[test]
    fn isomorphism_examples() {
        let f2 = Hypergraph::new(
            3,
            5,
            &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5], vec![3, 4, 5]],
        )
        .unwrap();
        let f3 = Hypergraph::new(
            3,
            5,
            &[
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![1, 4, 5],
                vec![3, 4, 5],
            ],
        )
        .unwrap();
        assert!(!f2.is_isomorphic(&f3));
        let relabeled =
            Hypergraph::new(3, 4, &[vec![2, 3, 4], vec![1, 2, 4], vec![1, 3, 4]]).unwrap();
        assert!(k4_minus().is_isomorphic(&relabeled));
        let e1 = Hypergraph::new(3, 4, &[vec![1, 2, 3]]).unwrap();
        assert!(!e1.is_isomorphic(&h2()));
    }

    #[test]
    fn containment_examples() {
        assert!(Hypergraph::complete(3, 4).contains_subgraph(&k4_minus()));
        assert!(!h2().contains_subgraph(&k4_minus()));
        let g = Hypergraph::new(3, 5, &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]]).unwrap();
        assert!(g.contains_subgraph(&k4_minus()));
        let bigger = Hypergraph::new(
            3,
            5,
            &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 4, 5]],
        )
        .unwrap();
        assert!(bigger.contains_subgraph(&k4_minus()));
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(Hypergraph::empty(3, 2).automorphisms().len(), 2);
        let single = Hypergraph::new(3, 3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(single.automorphisms().len(), 6);
        let auts = h2().automorphisms();
        assert_eq!(auts.len(), 4);
        assert!(auts.contains(&Permutation::identity(4)));
        for a in &auts {
            for b in &auts {
                assert!(auts.contains(&a.compose(b)));
            }
            assert!(auts.contains(&a.inverse()));
        }
    }

    #[test]
    fn automorphism_count_divides_factorial() {
        for g in [k4_minus(), h2(), Hypergraph::complete(3, 5)] {
            let count = g.automorphisms().len();
            let fact: usize = (1..=g.n()).product();
            assert_eq!(fact % count, 0);
        }
    }

    #[test]
    fn text_format_roundtrip() {
        let text = "# family\n3 4\n1 2 3\n1 2 4\n\n---\n3 5\n1 2 3 # an edge\n---\n";
        let graphs = Hypergraph::parse_all(text).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].edge_count(), 2);
        assert_eq!(graphs[1].n(), 5);
        let round = Hypergraph::parse_all(&Hypergraph::list_to_text(&graphs)).unwrap();
        assert_eq!(round, graphs);
        assert!(Hypergraph::parse_single("3 4\n1 2 3\n---\n3 4\n").is_err());
        assert!(Hypergraph::parse_all("nonsense").is_err());
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
    }
}
