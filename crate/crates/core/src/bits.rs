//! Dense membership bitmap over a finite window `[0, len)`.

#[derive(Clone, Debug, Default)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn valid_mask(&self, word: usize) -> u64 {
        let end = self.len - word * 64;
        if end >= 64 {
            u64::MAX
        } else {
            (1u64 << end) - 1
        }
    }

    /// Is there a set bit `t` with `t + shift < len` whose image `t + shift`
    /// is clear? Word-level shift-and-mask, no per-bit loop.
    pub(crate) fn shift_escapes(&self, shift: usize) -> bool {
        if shift >= self.len {
            return false;
        }
        let q = shift / 64;
        let r = shift % 64;
        for w in q..self.words.len() {
            let lo = self.words[w - q];
            let shifted = if r == 0 {
                lo
            } else {
                let carry = if w > q {
                    self.words[w - q - 1] >> (64 - r)
                } else {
                    0
                };
                (lo << r) | carry
            };
            if shifted & !self.words[w] & self.valid_mask(w) != 0 {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_escapes(members: &[bool], shift: usize) -> bool {
        (0..members.len())
            .filter(|&t| members[t] && t + shift < members.len())
            .any(|t| !members[t + shift])
    }

    #[test]
    fn shift_escapes_matches_naive_across_word_boundaries() {
        let len = 150;
        let members: Vec<bool> = (0..len).map(|i| (i * 7 + i / 3) % 5 != 1).collect();
        let mut bits = Bits::zeros(len);
        for (i, &m) in members.iter().enumerate() {
            if m {
                bits.set(i);
            }
        }
        for shift in 0..len + 3 {
            assert_eq!(
                bits.shift_escapes(shift),
                naive_escapes(&members, shift),
                "shift {shift}"
            );
        }
    }

    #[test]
    fn empty_window() {
        let bits = Bits::zeros(0);
        assert!(!bits.get(0));
        assert!(!bits.shift_escapes(1));
    }
}
