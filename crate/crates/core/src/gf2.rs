//! Dense linear algebra over the two-element field.
//!
//! Matrices pack each row into 64-bit words, so every row operation is a
//! word-wide XOR. All arithmetic is exact; there are no tolerances anywhere.
//! Elimination always pivots on the leftmost nonzero column with the topmost
//! available row, so ranks, kernel bases and solutions are reproducible
//! across runs. Large eliminations parallelize over row blocks internally,
//! which does not change the result: the XOR updates of distinct rows
//! commute.

use rayon::prelude::*;
use std::fmt;
use std::ops::Mul;

const WORD_BITS: usize = 64;

/// Row/word volume above which elimination fans out over rayon.
const PARALLEL_WORDS: usize = 1 << 18;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A vector over GF(2), packed 64 bits per word.
///
/// Padding bits beyond `len` in the last word are kept at zero, so equality
/// and hashing can work directly on the words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor_assign: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }

    fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

/// A dense matrix over GF(2) with bit-packed rows.
///
/// Invariants: every entry is 0 or 1 by construction; padding bits beyond
/// `cols` in the last word of each row are always zero; empty shapes are
/// permitted. Values are immutable in spirit — every public operation leaves
/// its inputs untouched — so concurrent use from multiple threads is safe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Gf2Matrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Gf2Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Stacks bit vectors as rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "from_rows: row {i} has wrong length");
            m.data[i * m.stride..(i + 1) * m.stride].copy_from_slice(r.words());
        }
        m
    }

    /// Stacks the rows of `self` on top of the rows of `other`.
    ///
    /// # Panics
    ///
    /// Panics if the column counts differ.
    pub fn vstack(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        let mut m = Gf2Matrix::zeros(self.rows + other.rows, self.cols);
        m.data[..self.data.len()].copy_from_slice(&self.data);
        m.data[self.data.len()..].copy_from_slice(&other.data);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        let mask = 1u64 << (j % WORD_BITS);
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        self.data[i * self.stride + j / WORD_BITS] ^= 1u64 << (j % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Copies row `i` out as a vector.
    pub fn row(&self, i: usize) -> BitVec {
        BitVec {
            len: self.cols,
            words: self.row_words(i).to_vec(),
        }
    }

    /// Indices of the set bits of row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(i).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * self.stride);
        head[lo * self.stride..(lo + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    ///
    /// # Panics
    ///
    /// Panics unless `self.cols == other.rows`.
    pub fn multiply(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(
            self.cols, other.rows,
            "multiply: shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.row_ones(i) {
                let (dst, src) = (i * out.stride, k * other.stride);
                for w in 0..other.stride {
                    out.data[dst + w] ^= other.data[src + w];
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * x`.
    ///
    /// # Panics
    ///
    /// Panics unless `x.len() == self.cols`.
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols, "mul_vec: shape mismatch");
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            let parity = self
                .row_words(i)
                .iter()
                .zip(x.words())
                .fold(0u64, |acc, (a, b)| acc ^ (a & b));
            if parity.count_ones() & 1 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// In-place row echelon form. With `reduced` the result is the RREF.
    /// Returns the pivot columns in ascending order; their count is the rank.
    fn row_reduce(&mut self, reduced: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        if self.rows == 0 || self.cols == 0 {
            return pivots;
        }
        let stride = self.stride;
        let parallel = self.rows * stride >= PARALLEL_WORDS;
        let mut pivot_row = vec![0u64; stride];
        for col in 0..self.cols {
            let rank = pivots.len();
            let Some(found) = (rank..self.rows).find(|&i| self.get(i, col)) else {
                continue;
            };
            self.swap_rows(rank, found);
            pivot_row.copy_from_slice(self.row_words(rank));
            let word = col / WORD_BITS;
            let mask = 1u64 << (col % WORD_BITS);
            let start = if reduced { 0 } else { rank + 1 };
            let eliminate = |(i, row): (usize, &mut [u64])| {
                if i != rank && row[word] & mask != 0 {
                    for (a, b) in row.iter_mut().zip(&pivot_row) {
                        *a ^= b;
                    }
                }
            };
            if parallel {
                self.data
                    .par_chunks_mut(stride)
                    .enumerate()
                    .skip(start)
                    .for_each(eliminate);
            } else {
                self.data
                    .chunks_mut(stride)
                    .enumerate()
                    .skip(start)
                    .for_each(eliminate);
            }
            pivots.push(col);
            if pivots.len() == self.rows {
                break;
            }
        }
        pivots
    }

    /// GF(2) rank. The input is not modified.
    pub fn rank(&self) -> usize {
        self.clone().row_reduce(false).len()
    }

    /// Basis of the right null space `{x : self * x = 0}`, one vector per
    /// row. The basis is in reduced echelon form with respect to the free
    /// columns, ascending, so it is reproducible. The number of rows equals
    /// `cols - rank`.
    pub fn kernel_basis(&self) -> Gf2Matrix {
        let mut work = self.clone();
        let pivots = work.row_reduce(true);
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&j| !pivot_set[j]).collect();
        let mut basis = Gf2Matrix::zeros(free.len(), self.cols);
        for (bi, &f) in free.iter().enumerate() {
            basis.set(bi, f, true);
            for (pi, &p) in pivots.iter().enumerate() {
                if work.get(pi, f) {
                    basis.set(bi, p, true);
                }
            }
        }
        basis
    }

    /// Solves `self * x = b`, returning a deterministic solution (all free
    /// variables zero) or `None` if the system is inconsistent.
    ///
    /// # Panics
    ///
    /// Panics unless `b.len() == self.rows`.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        assert_eq!(b.len(), self.rows, "solve: shape mismatch");
        let mut aug = Gf2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            let dst = i * aug.stride;
            for (w, &v) in self.row_words(i).iter().enumerate() {
                aug.data[dst + w] = v;
            }
            if b.get(i) {
                aug.set(i, self.cols, true);
            }
        }
        let pivots = aug.row_reduce(true);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = BitVec::zeros(self.cols);
        for (pi, &p) in pivots.iter().enumerate() {
            if aug.get(pi, self.cols) {
                x.set(p, true);
            }
        }
        Some(x)
    }
}

impl Mul for &Gf2Matrix {
    type Output = Gf2Matrix;

    fn mul(self, other: &Gf2Matrix) -> Gf2Matrix {
        self.multiply(other)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
