//! Fixed-width bit sets indexing r-subsets of a vertex set by colex rank.

use std::cmp::Ordering;

pub(crate) const MASK_BITS: usize = 256;
const WORDS: usize = MASK_BITS / 64;

/// Edge set of a small hypergraph as a 256-bit set. Bit `i` stands for the
/// r-subset of colex rank `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub(crate) struct Mask {
    w: [u64; WORDS],
}

impl Mask {
    pub const ZERO: Mask = Mask { w: [0; WORDS] };

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < MASK_BITS);
        self.w[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn test(&self, i: usize) -> bool {
        debug_assert!(i < MASK_BITS);
        self.w[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn count_ones(&self) -> u32 {
        self.w.iter().map(|x| x.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.w == [0; WORDS]
    }

    /// Intersection with the low `bits` positions.
    pub fn low_bits(&self, bits: usize) -> Mask {
        debug_assert!(bits <= MASK_BITS);
        let mut out = Mask::ZERO;
        for k in 0..WORDS {
            let lo = k * 64;
            if bits <= lo {
                break;
            }
            let take = (bits - lo).min(64);
            let m = if take == 64 { !0u64 } else { (1u64 << take) - 1 };
            out.w[k] = self.w[k] & m;
        }
        out
    }

    /// Order in which a set of r-subsets is "colex smaller": at the lowest
    /// rank where the two sets differ, the smaller set is the one containing
    /// that subset. Total order on equal-cardinality edge sets matching
    /// lexicographic comparison of their colex-sorted edge lists.
    pub fn colex_cmp(&self, other: &Mask) -> Ordering {
        for k in 0..WORDS {
            let x = self.w[k] ^ other.w[k];
            if x != 0 {
                let bit = x.trailing_zeros();
                return if self.w[k] >> bit & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..WORDS).flat_map(move |k| {
            let mut word = self.w[k];
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let bit = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(k * 64 + bit)
                }
            })
        })
    }

    pub fn union(&self, other: &Mask) -> Mask {
        let mut out = *self;
        for k in 0..WORDS {
            out.w[k] |= other.w[k];
        }
        out
    }

    pub fn difference(&self, other: &Mask) -> Mask {
        let mut out = *self;
        for k in 0..WORDS {
            out.w[k] &= !other.w[k];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_test_count() {
        let mut m = Mask::ZERO;
        m.set(0);
        m.set(63);
        m.set(64);
        m.set(255);
        assert!(m.test(0) && m.test(63) && m.test(64) && m.test(255));
        assert!(!m.test(1) && !m.test(254));
        assert_eq!(m.count_ones(), 4);
        assert_eq!(m.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 255]);
    }

    #[test]
    fn colex_order_matches_listwise_rule() {
        // {0,1} vs {0,2}: first difference at rank 1, owned by the left set.
        let mut a = Mask::ZERO;
        a.set(0);
        a.set(1);
        let mut b = Mask::ZERO;
        b.set(0);
        b.set(2);
        assert_eq!(a.colex_cmp(&b), Ordering::Less);
        assert_eq!(b.colex_cmp(&a), Ordering::Greater);
        assert_eq!(a.colex_cmp(&a), Ordering::Equal);
        // Difference across word boundaries.
        let mut c = Mask::ZERO;
        c.set(130);
        let mut d = Mask::ZERO;
        d.set(131);
        assert_eq!(c.colex_cmp(&d), Ordering::Less);
    }

    #[test]
    fn low_bits_truncates() {
        let mut m = Mask::ZERO;
        m.set(3);
        m.set(70);
        let t = m.low_bits(64);
        assert!(t.test(3) && !t.test(70));
        assert_eq!(m.low_bits(256), m);
        assert!(m.low_bits(0).is_zero());
    }
}
