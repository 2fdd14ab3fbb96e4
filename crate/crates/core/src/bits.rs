//! Plain word-packed bitset rows. Small graphs only need one word; the
//! representation stays correct for any number of vertices.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(bits: usize) -> Self {
        BitRow {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn and(&self, other: &BitRow) -> BitRow {
        debug_assert_eq!(self.words.len(), other.words.len());
        BitRow {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn and_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Iterates set bits in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip_across_word_boundary() {
        let mut row = BitRow::zeros(130);
        for i in [0, 1, 63, 64, 65, 127, 128, 129] {
            assert!(!row.get(i));
            row.set(i);
            assert!(row.get(i));
        }
        assert_eq!(row.count(), 8);
        assert_eq!(row.ones().collect::<Vec<_>>(), vec![0, 1, 63, 64, 65, 127, 128, 129]);
        row.clear(64);
        assert!(!row.get(64));
        assert_eq!(row.first_one(), Some(0));
    }

    #[test]
    fn and_is_intersection() {
        let mut a = BitRow::zeros(70);
        let mut b = BitRow::zeros(70);
        a.set(3);
        a.set(69);
        b.set(69);
        b.set(5);
        assert_eq!(a.and(&b).ones().collect::<Vec<_>>(), vec![69]);
        a.and_assign(&b);
        assert_eq!(a.ones().collect::<Vec<_>>(), vec![69]);
    }
}
