//! Small helpers for bit vectors stored as `u64` word slices.

pub const WORD_BITS: usize = 64;

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub fn test_bit(words: &[u64], i: usize) -> bool {
    words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

#[inline]
pub fn set_bit(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline]
pub fn clear_bit(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
}

#[inline]
pub fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn and_popcount(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

pub fn and_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

pub fn andnot_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

/// Iterates the positions of set bits in ascending order.
pub fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let tz = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD_BITS + tz)
        })
    })
}

/// Mask with the low `n` bits set, split over words.
pub fn low_mask(n: usize, words: usize) -> Vec<u64> {
    let mut out = vec![0u64; words];
    for (wi, word) in out.iter_mut().enumerate() {
        let lo = wi * WORD_BITS;
        if n >= lo + WORD_BITS {
            *word = u64::MAX;
        } else if n > lo {
            *word = (1u64 << (n - lo)) - 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_iteration() {
        let mut w = vec![0u64; 2];
        for i in [0, 3, 63, 64, 100] {
            set_bit(&mut w, i);
        }
        assert_eq!(iter_ones(&w).collect::<Vec<_>>(), vec![0, 3, 63, 64, 100]);
        assert_eq!(popcount(&w), 5);
        assert!(test_bit(&w, 63));
        clear_bit(&mut w, 63);
        assert!(!test_bit(&w, 63));
    }

    #[test]
    fn masks() {
        assert_eq!(low_mask(0, 1), vec![0]);
        assert_eq!(low_mask(64, 1), vec![u64::MAX]);
        assert_eq!(low_mask(65, 2), vec![u64::MAX, 1]);
    }
}
