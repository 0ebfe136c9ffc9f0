//! Shared helpers for the benchmarks: deterministic pseudo-random inputs
//! without pulling an RNG crate into the workspace.

use mod2cohom::{Gf2Matrix, RingElement, RingPresentation};

/// xorshift64 bit stream; good enough to fill bench matrices.
pub struct BitStream {
    state: u64,
}

impl BitStream {
    pub fn new(seed: u64) -> Self {
        BitStream { state: seed | 1 }
    }

    pub fn bit(&mut self) -> bool {
        self.state ^= self.state << 13;
        self.state ^= self.state >> 7;
        self.state ^= self.state << 17;
        self.state & 1 == 1
    }
}

pub fn random_gf2(seed: u64, rows: usize, cols: usize) -> Gf2Matrix {
    let mut stream = BitStream::new(seed);
    Gf2Matrix::from_fn(rows, cols, |_, _| stream.bit())
}

/// A pseudo-random homogeneous element of the given degree.
pub fn random_element(seed: u64, p: &RingPresentation, degree: usize) -> RingElement {
    let mut stream = BitStream::new(seed);
    RingElement::from_monomials(p.basis(degree).into_iter().filter(|_| stream.bit()))
}
