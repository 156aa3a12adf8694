//! Dense square boolean matrix packed into `u64` words, one padded row per
//! vertex. Padding bits past `size` are always zero, so derived equality is
//! pointwise equality.

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    size: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(size: usize) -> Self {
        let words_per_row = size.div_ceil(WORD_BITS);
        BitMatrix {
            size,
            words_per_row,
            words: vec![0; words_per_row * size],
        }
    }

    #[inline]
    pub(crate) fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub(crate) fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.size && col < self.size);
        let word = self.words[row * self.words_per_row + col / WORD_BITS];
        word >> (col % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: bool) {
        debug_assert!(row < self.size && col < self.size);
        let word = &mut self.words[row * self.words_per_row + col / WORD_BITS];
        let mask = 1u64 << (col % WORD_BITS);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// `row[dst] |= row[src]`.
    pub(crate) fn union_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            let bits = self.words[src * w + k];
            self.words[dst * w + k] |= bits;
        }
    }

    /// Column indices set in `row`, ascending.
    pub(crate) fn iter_row(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        let w = self.words_per_row;
        self.words[row * w..(row + 1) * w]
            .iter()
            .enumerate()
            .flat_map(|(k, &word)| {
                let mut rest = word;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        return None;
                    }
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * WORD_BITS + bit)
                })
            })
    }

    /// True when `row` of `self` and `other_row` of `other` share a set column.
    pub(crate) fn rows_intersect(&self, row: usize, other: &BitMatrix, other_row: usize) -> bool {
        debug_assert_eq!(self.size, other.size);
        let w = self.words_per_row;
        (0..w).any(|k| self.words[row * w + k] & other.words[other_row * w + k] != 0)
    }

    /// True when every column set in `sub` is also set in `sup`.
    pub(crate) fn row_subset(&self, sub: usize, sup: usize) -> bool {
        let w = self.words_per_row;
        (0..w).all(|k| self.words[sub * w + k] & !self.words[sup * w + k] == 0)
    }

    pub(crate) fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.size);
        for r in 0..self.size {
            for c in self.iter_row(r) {
                t.set(c, r, true);
            }
        }
        t
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix({})", self.size)?;
        for r in 0..self.size {
            for c in 0..self.size {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
