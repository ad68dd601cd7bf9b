//! Fixed-width bit vectors used for edge sets and vertex sets.
//!
//! Kept deliberately small: the hot loops (matching enumeration, flip
//! neighbor lookup, forcing search) only need set/test/xor/iterate over
//! a few machine words.

/// A fixed-width set of small integers backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    nbits: usize,
    words: Box<[u64]>,
}

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        let nwords = nbits.div_ceil(64);
        BitSet {
            nbits,
            words: vec![0u64; nwords].into_boxed_slice(),
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, iter: I) -> Self {
        let mut s = Self::new(nbits);
        for i in iter {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i >> 6] ^= 1 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (w, o) in self.words.iter_mut().zip(other.words.iter()) {
            *w ^= o;
        }
    }

    pub fn xor(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True if every bit of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(s, o)| s & !o == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(s, o)| s & o != 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Lowest set bit, if any.
    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((wi << 6) + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Lowest CLEAR bit below capacity, if any.
    pub fn first_missing(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                let bit = (wi << 6) + (!w).trailing_zeros() as usize;
                if bit < self.nbits {
                    return Some(bit);
                }
                return None;
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some((wi << 6) + b)
                }
            })
        })
    }

    /// Stable 64-bit fingerprint of the contents (splitmix-style mixing).
    ///
    /// Identical across runs and platforms. Collisions are possible; callers
    /// that need exact identity must compare the sets themselves.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0x243F_6A88_85A3_08D3 ^ (self.nbits as u64);
        for &w in self.words.iter() {
            h ^= w;
            h = h.wrapping_mul(0x9E37_79B9_7F4A_7C15);
            h ^= h >> 31;
        }
        h
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
