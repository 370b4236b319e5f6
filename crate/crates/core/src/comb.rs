//! Small combinatorial helpers: binomials, subset ranking, and allocation-free
//! enumeration of combinations and injections over index ranges.

/// Binomial coefficient as u64. Sizes here stay far below overflow range
/// (n <= 64 in every caller).
pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Falling factorial n * (n-1) * ... * (n-k+1).
pub(crate) fn falling(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).map(|i| (n - i) as u64).product()
}

/// Colex rank of a strictly increasing 0-based k-subset: sum of C(c_i, i+1).
/// Ranks of all subsets with maximum element < t occupy exactly 0..C(t, k).
pub(crate) fn subset_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c, i + 1) as usize)
        .sum()
}

/// Inverse of `subset_rank` for k-subsets of 0..n.
pub(crate) fn subset_unrank(mut rank: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for i in (1..=k).rev() {
        // Largest c with C(c, i) <= rank.
        let mut c = i - 1;
        while binomial(c + 1, i) as usize <= rank {
            c += 1;
        }
        out[i - 1] = c;
        rank -= binomial(c, i) as usize;
    }
    out
}

/// Calls `f` on every strictly increasing k-subset of `pool` (preserving pool
/// order). `pool` must be duplicate-free.
pub(crate) fn for_each_combination<F: FnMut(&[usize])>(pool: &[usize], k: usize, mut f: F) {
    if k > pool.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf = vec![0usize; k];
    loop {
        for (b, &i) in buf.iter_mut().zip(idx.iter()) {
            *b = pool[i];
        }
        f(&buf);
        // Advance the index vector.
        let mut j = k;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if idx[j] != j + pool.len() - k {
                break;
            }
        }
        if idx[j] == j + pool.len() - k {
            return;
        }
        idx[j] += 1;
        for t in j + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Calls `f` on every injective map [k] -> pool, presented as the image tuple.
pub(crate) fn for_each_injection<F: FnMut(&[usize])>(pool: &[usize], k: usize, mut f: F) {
    if k > pool.len() {
        return;
    }
    let n = pool.len();
    let mut chosen = vec![0usize; k];
    let mut used = vec![false; n];
    fn rec<F: FnMut(&[usize])>(
        pool: &[usize],
        k: usize,
        depth: usize,
        chosen: &mut [usize],
        used: &mut [bool],
        f: &mut F,
    ) {
        if depth == k {
            f(chosen);
            return;
        }
        for i in 0..pool.len() {
            if !used[i] {
                used[i] = true;
                chosen[depth] = pool[i];
                rec(pool, k, depth + 1, chosen, used, f);
                used[i] = false;
            }
        }
    }
    rec(pool, k, 0, &mut chosen, &mut used, &mut f);
}

/// All permutations of 0..n as image vectors.
pub(crate) fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let pool: Vec<usize> = (0..n).collect();
    for_each_injection(&pool, n, |p| out.push(p.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(12, 3), 220);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(falling(7, 3), 210);
    }

    #[test]
    fn rank_unrank_roundtrip() {
        for n in 3..9 {
            for k in 1..=3.min(n) {
                let mut seen = vec![false; binomial(n, k) as usize];
                let pool: Vec<usize> = (0..n).collect();
                for_each_combination(&pool, k, |s| {
                    let r = subset_rank(s);
                    assert!(!seen[r]);
                    seen[r] = true;
                    assert_eq!(subset_unrank(r, k), s);
                });
                assert!(seen.iter().all(|&b| b));
            }
        }
    }

    #[test]
    fn colex_rank_nesting() {
        // Subsets with max element < t fill ranks 0..C(t,k).
        for t in 3..8 {
            let pool: Vec<usize> = (0..t).collect();
            let mut max_rank = 0;
            for_each_combination(&pool, 3, |s| max_rank = max_rank.max(subset_rank(s)));
            assert_eq!(max_rank + 1, binomial(t, 3) as usize);
        }
    }

    #[test]
    fn injection_count() {
        let pool = [2usize, 5, 7, 9];
        let mut count = 0;
        for_each_injection(&pool, 2, |_| count += 1);
        assert_eq!(count, 12);
        assert_eq!(all_permutations(4).len(), 24);
    }
}
