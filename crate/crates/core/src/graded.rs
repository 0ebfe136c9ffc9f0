//! Dimension counts for the exterior, symmetric and divided-power functors,
//! and a closed-form Hilbert series used as a fast independent cross-check.
//!
//! Counts are arbitrary-precision: dimensions grow quickly with rank, and a
//! cheap `BigUint` is better than a silent overflow. Binomials are computed
//! multiplicatively. At finite type the divided-power functor is the graded
//! dual of the symmetric one, so `sym_dim` serves for both.

use crate::abelian::{FgAbGroup, ModTwoTriple};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Per-degree dimensions of a graded vector space, index = degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedDims {
    pub dims: Vec<BigUint>,
}

impl GradedDims {
    pub fn get(&self, degree: usize) -> &BigUint {
        &self.dims[degree]
    }

    /// # Panics
    ///
    /// Panics if the count does not fit a `usize`.
    pub fn as_usize(&self, degree: usize) -> usize {
        self.dims[degree]
            .to_usize()
            .expect("graded dimension overflows usize")
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }
}

/// Binomial coefficient C(n, k), computed multiplicatively.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        let (q, rem) = acc.div_rem(&BigUint::from(i + 1));
        debug_assert!(rem.is_zero());
        acc = q;
    }
    acc
}

/// Dimension of the k-th exterior power of an r-dimensional space: C(r, k).
pub fn lambda_dim(rank: usize, k: usize) -> BigUint {
    binomial(rank, k)
}

/// Dimension of the i-th symmetric (equivalently divided) power of an
/// s-dimensional space: C(s+i-1, i). For s = 0 this is 1 in degree 0 and 0
/// above.
pub fn sym_dim(s: usize, i: usize) -> BigUint {
    if s == 0 {
        return if i == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    binomial(s + i - 1, i)
}

/// The per-degree dimensions determined by the mod-2 carrier alone:
/// dims[n] = sum over i of C(r, n-2i) * C(s+i-1, i). Only (r, s) matter; the
/// torsion-to-quotient map does not enter.
pub fn predicted_dims(triple: &ModTwoTriple, max_degree: usize) -> GradedDims {
    let (r, s) = (triple.r(), triple.s());
    let dims = (0..=max_degree)
        .map(|n| {
            (0..=n / 2)
                .map(|i| lambda_dim(r, n - 2 * i) * sym_dim(s, i))
                .sum()
        })
        .collect();
    GradedDims { dims }
}

/// Coefficients of (1+t)^free_rank / (1-t)^(number of even factors), the
/// closed-form Hilbert series of the cohomology of the group. Expanded by
/// polynomial multiplication followed by iterated prefix sums (one per
/// division by 1-t), a route independent of the binomial sums above.
pub fn hilbert_series_oracle(group: &FgAbGroup, max_degree: usize) -> GradedDims {
    let even = group
        .invariant_factors()
        .iter()
        .filter(|d| d.is_even())
        .count();
    let mut coeffs = vec![BigUint::zero(); max_degree + 1];
    coeffs[0] = BigUint::one();
    for _ in 0..group.free_rank() {
        // multiply by (1 + t)
        for n in (1..=max_degree).rev() {
            let lower = coeffs[n - 1].clone();
            coeffs[n] += lower;
        }
    }
    for _ in 0..even {
        // divide by (1 - t): running prefix sum
        for n in 1..=max_degree {
            let lower = coeffs[n - 1].clone();
            coeffs[n] += lower;
        }
    }
    GradedDims { dims: coeffs }
}
