//! Word-packed bit set helpers shared by the incidence and GF(2) types.

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn get(words: &[u64], bit: usize) -> bool {
    words[bit / WORD_BITS] >> (bit % WORD_BITS) & 1 == 1
}

#[inline]
pub(crate) fn set(words: &mut [u64], bit: usize, value: bool) {
    let mask = 1u64 << (bit % WORD_BITS);
    if value {
        words[bit / WORD_BITS] |= mask;
    } else {
        words[bit / WORD_BITS] &= !mask;
    }
}

#[inline]
pub(crate) fn toggle(words: &mut [u64], bit: usize) {
    words[bit / WORD_BITS] ^= 1u64 << (bit % WORD_BITS);
}

pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn lowest(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
}

/// Lowest set bit of `a & b`.
pub(crate) fn lowest_of_and(a: &[u64], b: &[u64]) -> Option<usize> {
    a.iter()
        .zip(b)
        .enumerate()
        .find(|(_, (x, y))| **x & **y != 0)
        .map(|(i, (x, y))| i * WORD_BITS + (x & y).trailing_zeros() as usize)
}

pub(crate) fn count_of_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

pub(crate) fn and_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= *s;
    }
}

pub(crate) fn xor_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

/// Fills `words` with the first `bits` bits set and the rest clear.
pub(crate) fn fill_prefix(words: &mut [u64], bits: usize) {
    for (i, w) in words.iter_mut().enumerate() {
        let lo = i * WORD_BITS;
        *w = if bits >= lo + WORD_BITS {
            u64::MAX
        } else if bits <= lo {
            0
        } else {
            (1u64 << (bits - lo)) - 1
        };
    }
}

/// Iterator over the set bits of a word slice, in increasing order.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + tz);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}
