//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is stored as a free rank together with the chain of invariant
//! factors d1 | d2 | ... (each at least 2). Canonicalization goes through an
//! exact big-integer Smith normal form, so adversarial presentations cannot
//! overflow. The module also computes the mod-2 carrier of a group: the
//! dimensions of A/2 and of the 2-torsion subgroup, plus the natural map
//! between them induced by inclusion and reduction.
//!
//! Canonical basis conventions, frozen for the whole workspace:
//! - group generators: torsion generators in invariant-factor order, then
//!   free generators;
//! - the A/2 basis: images of the even-torsion generators first (in factor
//!   order), then the free generators;
//! - the 2-torsion basis: the elements d/2 of the even factors, same order.
//!
//! With these bases the inclusion-then-reduction map sends the generator d/2
//! of an even factor to (d/2) mod 2, which is odd exactly when d ≡ 2 (mod 4):
//! write d = 2m; m is odd iff d is not divisible by 4. So the matrix of the
//! map is a 0/1 partial diagonal with a 1 exactly at the factors d ≡ 2 (mod 4).

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense integer matrix with exact big-integer entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = IntMatrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "from_rows: ragged row {i}");
            for (j, &e) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(e));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        self.data[i * self.cols + j] = value;
    }

    pub fn multiply(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "multiply: shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * other.get(k, j);
                    out.data[i * other.cols + j] += t;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_sub_scaled(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] -= t;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_sub_scaled(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] -= t;
        }
    }

    /// row[dst] += row[src]
    fn row_add(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let t = self.data[src * self.cols + j].clone();
            self.data[dst * self.cols + j] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let cell = &mut self.data[i * self.cols + j];
            *cell = -std::mem::take(cell);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Result of a Smith normal form computation: `u * input * v = d` with
/// unimodular `u`, `v` and `d` diagonal, non-negative, each entry dividing
/// the next.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

/// Exact Smith normal form over the integers.
///
/// Pivots on the entry of minimal absolute value of the trailing submatrix;
/// every reduction is an exact integer division with remainder, so the pivot
/// magnitude strictly decreases whenever a pass leaves residue and the loop
/// terminates.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);

    for k in 0..n {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    let e = d.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => e.magnitude() < d.get(pi, pj).magnitude(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut dirty = false;
            for i in k + 1..rows {
                if d.get(i, k).is_zero() {
                    continue;
                }
                let q = d.get(i, k) / d.get(k, k);
                if !q.is_zero() {
                    d.row_sub_scaled(i, k, &q);
                    u.row_sub_scaled(i, k, &q);
                }
                if !d.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if d.get(k, j).is_zero() {
                    continue;
                }
                let q = d.get(k, j) / d.get(k, k);
                if !q.is_zero() {
                    d.col_sub_scaled(j, k, &q);
                    v.col_sub_scaled(j, k, &q);
                }
                if !d.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // Pull any entry not divisible by the pivot into row k; the next
            // pass then shrinks the pivot to a smaller residue.
            let pivot_val = d.get(k, k).clone();
            let mut bad_row = None;
            'find: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(d.get(i, j) % &pivot_val).is_zero() {
                        bad_row = Some(i);
                        break 'find;
                    }
                }
            }
            match bad_row {
                Some(i) => {
                    d.row_add(k, i);
                    u.row_add(k, i);
                }
                None => break,
            }
        }
    }

    for k in 0..n {
        if d.get(k, k).sign() == Sign::Minus {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    Snf { u, d, v }
}

/// A finitely generated abelian group in canonical invariant-factor form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FgAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup {
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        FgAbGroup::from_parts(0, vec![BigInt::from(order)])
    }

    /// Builds the canonical form of `Z^free_rank + sum of Z/f`. The factors
    /// may be arbitrary integers: zeros count toward the free rank, units are
    /// dropped, and the rest is rewritten into a divisor chain.
    pub fn from_parts(free_rank: usize, factors: Vec<BigInt>) -> Self {
        let mut free = free_rank;
        let mut torsion: Vec<BigInt> = Vec::new();
        for f in factors {
            if f.is_zero() {
                free += 1;
            } else {
                let a = f.abs();
                if a > BigInt::one() {
                    torsion.push(a);
                }
            }
        }
        let chained = torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
        if !chained {
            let snf = smith_normal_form(&IntMatrix::diagonal(&torsion));
            torsion = (0..torsion.len())
                .map(|k| snf.d.get(k, k).clone())
                .filter(|e| e > &BigInt::one())
                .collect();
        }
        FgAbGroup {
            free_rank: free,
            invariant_factors: torsion,
        }
    }

    /// The cokernel of a relation matrix: each row of `relations` is one
    /// relation among `cols` generators. Zero rows are allowed; an empty
    /// matrix presents a free group.
    pub fn from_presentation(relations: &IntMatrix) -> Self {
        let snf = smith_normal_form(relations);
        let n = relations.rows().min(relations.cols());
        let mut nonzero = 0;
        let mut factors = Vec::new();
        for k in 0..n {
            let e = snf.d.get(k, k);
            if !e.is_zero() {
                nonzero += 1;
                if e > &BigInt::one() {
                    factors.push(e.clone());
                }
            }
        }
        FgAbGroup {
            free_rank: relations.cols() - nonzero,
            invariant_factors: factors,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Number of elements, or `None` for a group of positive free rank.
    pub fn order(&self) -> Option<BigUint> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigUint::one();
        for d in &self.invariant_factors {
            o *= d.magnitude();
        }
        Some(o)
    }

    /// Orders of the canonical generators: the invariant factors followed by
    /// one zero per free generator.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        let mut orders = self.invariant_factors.clone();
        orders.extend(std::iter::repeat_n(BigInt::zero(), self.free_rank));
        orders
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors = self.invariant_factors.clone();
        factors.extend(other.invariant_factors.iter().cloned());
        FgAbGroup::from_parts(self.free_rank + other.free_rank, factors)
    }

    fn even_factor_indices(&self) -> Vec<usize> {
        self.invariant_factors
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_even())
            .map(|(i, _)| i)
            .collect()
    }

    /// The pair of mod-2 invariants with the natural map between them, in
    /// the canonical bases described in the module docs.
    pub fn mod_two_triple(&self) -> ModTwoTriple {
        let even = self.even_factor_indices();
        let s = even.len();
        let r = self.free_rank + s;
        let four = BigInt::from(4);
        let two = BigInt::from(2);
        let mut beta = Gf2Matrix::zeros(r, s);
        for (j, &fi) in even.iter().enumerate() {
            if self.invariant_factors[fi].mod_floor(&four) == two {
                beta.set(j, j, true);
            }
        }
        ModTwoTriple::new(r, s, beta)
    }

    /// Parses the shared group grammar `Z^k x Z/d1 x Z/d2 ...` with `x` or
    /// `*` as separators; whitespace is ignored. The result is canonical.
    pub fn parse(spec: &str) -> Result<FgAbGroup> {
        let mut terms: Vec<(String, usize)> = Vec::new();
        let mut term = String::new();
        let mut term_start = 0;
        for (pos, ch) in spec.char_indices() {
            if ch.is_whitespace() {
                continue;
            }
            if ch == 'x' || ch == '*' {
                terms.push((std::mem::take(&mut term), term_start));
                term_start = pos + ch.len_utf8();
            } else {
                if term.is_empty() {
                    term_start = pos;
                }
                term.push(ch);
            }
        }
        terms.push((term, term_start));

        let mut free = 0usize;
        let mut factors = Vec::new();
        for (t, pos) in terms {
            let err = || Error::SpecParse {
                token: t.clone(),
                position: pos,
            };
            if t == "Z" {
                free += 1;
            } else if let Some(k) = t.strip_prefix("Z^") {
                free += k.parse::<usize>().map_err(|_| err())?;
            } else if let Some(d) = t.strip_prefix("Z/") {
                let d: BigUint = d.parse().map_err(|_| err())?;
                factors.push(BigInt::from(d));
            } else {
                return Err(err());
            }
        }
        Ok(FgAbGroup::from_parts(free, factors))
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "Z^0");
        }
        let mut terms = Vec::new();
        match self.free_rank {
            0 => {}
            1 => terms.push("Z".to_string()),
            k => terms.push(format!("Z^{k}")),
        }
        for d in &self.invariant_factors {
            terms.push(format!("Z/{d}"));
        }
        write!(f, "{}", terms.join(" x "))
    }
}

/// Parses the plain-text relation matrix format: first `rows cols`, then the
/// entries row by row, all whitespace separated.
pub fn parse_relation_matrix(text: &str) -> Result<IntMatrix> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::RelationParse(format!("missing {what}")))?
            .parse()
            .map_err(|_| Error::RelationParse(format!("bad {what}")))
    };
    let rows = next_usize("row count")?;
    let cols = next_usize("column count")?;
    let mut m = IntMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let tok = tokens
                .next()
                .ok_or_else(|| Error::RelationParse(format!("expected {rows}x{cols} entries")))?;
            let e: BigInt = tok
                .parse()
                .map_err(|_| Error::RelationParse(format!("bad integer `{tok}`")))?;
            m.set(i, j, e);
        }
    }
    if tokens.next().is_some() {
        return Err(Error::RelationParse(format!(
            "trailing data after {rows}x{cols} entries"
        )));
    }
    Ok(m)
}

/// The pair (dim A/2, dim 2-torsion) together with the GF(2) matrix of the
/// natural map from the 2-torsion subgroup to A/2, in canonical bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModTwoTriple {
    r: usize,
    s: usize,
    beta: Gf2Matrix,
}

impl ModTwoTriple {
    /// # Panics
    ///
    /// Panics unless `beta` is `r x s` with `s <= r`.
    pub fn new(r: usize, s: usize, beta: Gf2Matrix) -> Self {
        assert!(s <= r, "2-torsion dimension exceeds dim A/2");
        assert_eq!((beta.rows(), beta.cols()), (r, s), "beta shape mismatch");
        ModTwoTriple { r, s, beta }
    }

    /// Dimension of A/2.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Dimension of the 2-torsion subgroup.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn beta(&self) -> &Gf2Matrix {
        &self.beta
    }
}

/// A homomorphism between canonical groups, given by the integer matrix of
/// images of the source generators. Columns follow the source generator
/// order, rows the target generator order (torsion first, then free).
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Validates that every source relation is respected: for a source
    /// generator of order d, the image multiplied by d must vanish in the
    /// target.
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<GroupHom> {
        let src_orders = source.generator_orders();
        let tgt_orders = target.generator_orders();
        if matrix.rows() != tgt_orders.len() || matrix.cols() != src_orders.len() {
            return Err(Error::InvalidHom(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                tgt_orders.len(),
                src_orders.len()
            )));
        }
        for (j, d) in src_orders.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            for (t, e) in tgt_orders.iter().enumerate() {
                let v = d * matrix.get(t, j);
                let ok = if e.is_zero() {
                    v.is_zero()
                } else {
                    (&v % e).is_zero()
                };
                if !ok {
                    return Err(Error::InvalidHom(format!(
                        "entry ({t},{j}) violates the order-{d} relation of the source generator"
                    )));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(a: &FgAbGroup) -> GroupHom {
        let n = a.generator_orders().len();
        GroupHom {
            source: a.clone(),
            target: a.clone(),
            matrix: IntMatrix::identity(n),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self` after `first`: the composite `self ∘ first`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target != self.source {
            return Err(Error::InvalidHom(
                "composition mismatch: inner target differs from outer source".into(),
            ));
        }
        GroupHom::new(
            first.source.clone(),
            self.target.clone(),
            self.matrix.multiply(&first.matrix),
        )
    }

    /// The two GF(2) maps induced on the mod-2 carrier: the map of mod-2
    /// quotients and the map of 2-torsion subgroups, in canonical bases.
    /// They fit in a commuting square with the natural 2-torsion-to-quotient
    /// maps of the two groups.
    pub fn induced_on_triple(&self) -> InducedTriple {
        let a = &self.source;
        let b = &self.target;
        let even_a = a.even_factor_indices();
        let even_b = b.even_factor_indices();
        let (sa, sb) = (even_a.len(), even_b.len());
        let ra = sa + a.free_rank;
        let rb = sb + b.free_rank;

        // column/row index in the hom matrix of the generator behind each
        // A/2 basis vector: even torsion first, then free
        let src_gen = |j: usize| {
            if j < sa {
                even_a[j]
            } else {
                a.invariant_factors.len() + (j - sa)
            }
        };
        let tgt_gen = |i: usize| {
            if i < sb {
                even_b[i]
            } else {
                b.invariant_factors.len() + (i - sb)
            }
        };

        let quotient_map = Gf2Matrix::from_fn(rb, ra, |i, j| {
            self.matrix.get(tgt_gen(i), src_gen(j)).is_odd()
        });

        let two = BigInt::from(2);
        let mut torsion_map = Gf2Matrix::zeros(sb, sa);
        for (j, &fj) in even_a.iter().enumerate() {
            let half_d = &a.invariant_factors[fj] / &two;
            for (t, &ft) in even_b.iter().enumerate() {
                let e = &b.invariant_factors[ft];
                let half_e = e / &two;
                // the image of the 2-torsion generator d/2 has component
                // (d/2)·m mod e, which is 0 or e/2
                let v = (&half_d * self.matrix.get(ft, fj)).mod_floor(e);
                if v == half_e {
                    torsion_map.set(t, j, true);
                }
            }
        }

        InducedTriple {
            quotient_map,
            torsion_map,
        }
    }
}

/// The pair of GF(2) matrices a homomorphism induces on the mod-2 carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedTriple {
    /// Map of mod-2 quotients A/2 -> B/2.
    pub quotient_map: Gf2Matrix,
    /// Map of 2-torsion subgroups.
    pub torsion_map: Gf2Matrix,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Bareiss fraction-free determinant, used only to certify unimodularity.
    fn det(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        assert_eq!(n, m.cols());
        if n == 0 {
            return BigInt::one();
        }
        let mut a = m.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, val);
                }
            }
            prev = a.get(k, k).clone();
        }
        a.get(n - 1, n - 1) * sign
    }

    fn assert_snf_certificate(m: &IntMatrix, snf: &Snf) {
        assert_eq!(snf.u.multiply(m).multiply(&snf.v), snf.d);
        assert_eq!(det(&snf.u).abs(), BigInt::one());
        assert_eq!(det(&snf.v).abs(), BigInt::one());
        let n = m.rows().min(m.cols());
        for k in 0..n {
            assert!(snf.d.get(k, k).sign() != Sign::Minus);
        }
        // off-diagonal zero and divisor chain
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        for k in 1..n {
            let prev = snf.d.get(k - 1, k - 1);
            let cur = snf.d.get(k, k);
            if !prev.is_zero() {
                assert!((cur % prev).is_zero(), "divisor chain broken at {k}");
            } else {
                assert!(cur.is_zero());
            }
        }
    }

    #[test]
    fn snf_single_entry() {
        let m = IntMatrix::from_rows(&[vec![6]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d.get(0, 0), &big(6));
        assert_snf_certificate(&m, &snf);
    }

    #[test]
    fn snf_coprime_diagonal_merges() {
        let m = IntMatrix::diagonal(&[big(2), big(3)]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d.get(0, 0), &big(1));
        assert_eq!(snf.d.get(1, 1), &big(6));
        assert_snf_certificate(&m, &snf);
    }

    #[test]
    fn snf_random_matrices_satisfy_defining_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let rows = rng.gen_range(0..=5);
            let cols = rng.gen_range(0..=5);
            let m = IntMatrix::from_rows(
                &(0..rows)
                    .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
                    .collect::<Vec<_>>(),
            );
            // from_rows of zero rows loses cols; rebuild explicitly
            let m = if rows == 0 {
                IntMatrix::zeros(0, cols)
            } else {
                m
            };
            let snf = smith_normal_form(&m);
            assert_snf_certificate(&m, &snf);
        }
    }

    #[test]
    fn presentation_of_free_group() {
        let g = FgAbGroup::from_presentation(&IntMatrix::zeros(0, 2));
        assert_eq!(g, FgAbGroup::free(2));
    }

    #[test]
    fn presentation_merges_coprime_factors() {
        let g = FgAbGroup::from_presentation(&IntMatrix::diagonal(&[big(2), big(3)]));
        assert_eq!(g, FgAbGroup::cyclic(6));
    }

    #[test]
    fn presentation_already_in_normal_form() {
        let g = FgAbGroup::from_presentation(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(g.free_rank(), 0);
        assert_eq!(g.invariant_factors(), &[big(2), big(4)]);
    }

    #[test]
    fn presentation_invariant_under_unimodular_shuffles() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let m = IntMatrix::from_rows(
                &(0..rows)
                    .map(|_| (0..cols).map(|_| rng.gen_range(-6..=6)).collect())
                    .collect::<Vec<_>>(),
            );
            let base = FgAbGroup::from_presentation(&m);
            // apply a few random elementary row/column operations
            let mut t = m.clone();
            for _ in 0..6 {
                match rng.gen_range(0..4) {
                    0 => {
                        let (a, b) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
                        t.swap_rows(a, b);
                    }
                    1 => {
                        let (a, b) = (rng.gen_range(0..cols), rng.gen_range(0..cols));
                        t.swap_cols(a, b);
                    }
                    2 => {
                        let (a, b) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
                        if a != b {
                            let q = big(rng.gen_range(-3..=3));
                            t.row_sub_scaled(a, b, &q);
                        }
                    }
                    _ => {
                        let (a, b) = (rng.gen_range(0..cols), rng.gen_range(0..cols));
                        if a != b {
                            let q = big(rng.gen_range(-3..=3));
                            t.col_sub_scaled(a, b, &q);
                        }
                    }
                }
            }
            assert_eq!(FgAbGroup::from_presentation(&t), base);
        }
    }

    #[test]
    fn triple_of_z2() {
        let t = FgAbGroup::cyclic(2).mod_two_triple();
        assert_eq!((t.r(), t.s()), (1, 1));
        assert!(t.beta().get(0, 0));
    }

    #[test]
    fn triple_of_z4() {
        let t = FgAbGroup::cyclic(4).mod_two_triple();
        assert_eq!((t.r(), t.s()), (1, 1));
        assert!(!t.beta().get(0, 0));
    }

    #[test]
    fn triple_of_z6_matches_z2() {
        // 3 = 6/2 is odd, so the torsion generator survives reduction
        let t = FgAbGroup::cyclic(6).mod_two_triple();
        assert_eq!((t.r(), t.s()), (1, 1));
        assert!(t.beta().get(0, 0));
        assert_eq!(t, FgAbGroup::cyclic(2).mod_two_triple());
    }

    #[test]
    fn triple_ignores_odd_torsion() {
        let g = FgAbGroup::from_parts(1, vec![big(3), big(9)]);
        let t = g.mod_two_triple();
        assert_eq!((t.r(), t.s()), (1, 0));
    }

    #[test]
    fn triple_beta_outside_pairing_is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let g = random_group(&mut rng);
            let t = g.mod_two_triple();
            assert!(t.s() <= t.r());
            for i in 0..t.r() {
                for j in 0..t.s() {
                    if i != j {
                        assert!(!t.beta().get(i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn direct_sum_examples() {
        let z2z4 = FgAbGroup::cyclic(2).direct_sum(&FgAbGroup::cyclic(4));
        assert_eq!(z2z4.invariant_factors(), &[big(2), big(4)]);

        let z6 = FgAbGroup::cyclic(2).direct_sum(&FgAbGroup::cyclic(3));
        assert_eq!(z6, FgAbGroup::cyclic(6));

        let a = FgAbGroup::from_parts(2, vec![big(4), big(12)]);
        assert_eq!(a.direct_sum(&FgAbGroup::trivial()), a);
    }

    #[test]
    fn direct_sum_is_additive_on_the_triple() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..100 {
            let a = random_group(&mut rng);
            let b = random_group(&mut rng);
            let (ta, tb) = (a.mod_two_triple(), b.mod_two_triple());
            let t = a.direct_sum(&b).mod_two_triple();
            assert_eq!(t.r(), ta.r() + tb.r());
            assert_eq!(t.s(), tb.s() + ta.s());
            // the diagonal bits match as a multiset after canonical reordering
            let mut expected: Vec<bool> = (0..ta.s())
                .map(|j| ta.beta().get(j, j))
                .chain((0..tb.s()).map(|j| tb.beta().get(j, j)))
                .collect();
            let mut got: Vec<bool> = (0..t.s()).map(|j| t.beta().get(j, j)).collect();
            expected.sort_unstable();
            got.sort_unstable();
            assert_eq!(expected, got);
        }
    }

    fn random_group(rng: &mut ChaCha8Rng) -> FgAbGroup {
        const POOL: [i64; 6] = [2, 3, 4, 6, 8, 12];
        let free = rng.gen_range(0..=2);
        let torsion = rng.gen_range(0..=3);
        let factors = (0..torsion)
            .map(|_| big(POOL[rng.gen_range(0..POOL.len())]))
            .collect();
        FgAbGroup::from_parts(free, factors)
    }

    fn random_hom(rng: &mut ChaCha8Rng, a: &FgAbGroup, b: &FgAbGroup) -> GroupHom {
        let src = a.generator_orders();
        let tgt = b.generator_orders();
        let mut m = IntMatrix::zeros(tgt.len(), src.len());
        for (j, d) in src.iter().enumerate() {
            for (t, e) in tgt.iter().enumerate() {
                let entry = if d.is_zero() {
                    // free source generator maps anywhere
                    if e.is_zero() {
                        big(rng.gen_range(-4..=4))
                    } else {
                        big(rng.gen_range(0..e.to_string().parse::<i64>().unwrap()))
                    }
                } else if e.is_zero() {
                    big(0)
                } else {
                    // image must be killed by d: a multiple of e/gcd(d,e)
                    let d: i64 = d.to_string().parse().unwrap();
                    let e: i64 = e.to_string().parse().unwrap();
                    let step = e / d.gcd(&e);
                    big(step * rng.gen_range(0..e / step))
                };
                m.set(t, j, entry);
            }
        }
        GroupHom::new(a.clone(), b.clone(), m).expect("constructed hom is valid")
    }

    #[test]
    fn induced_maps_of_doubling_into_z4() {
        let f = GroupHom::new(
            FgAbGroup::cyclic(2),
            FgAbGroup::cyclic(4),
            IntMatrix::from_rows(&[vec![2]]),
        )
        .unwrap();
        let ind = f.induced_on_triple();
        assert!(!ind.quotient_map.get(0, 0), "2 reduces to 0 mod 2");
        assert!(
            ind.torsion_map.get(0, 0),
            "1 -> 2 matches the 2-torsion generators"
        );
        // both composites of the naturality square vanish here
        let beta_a = FgAbGroup::cyclic(2).mod_two_triple().beta().clone();
        let beta_b = FgAbGroup::cyclic(4).mod_two_triple().beta().clone();
        assert_eq!(
            ind.quotient_map.multiply(&beta_a),
            beta_b.multiply(&ind.torsion_map)
        );
    }

    #[test]
    fn induced_maps_of_identity() {
        let a = FgAbGroup::from_parts(1, vec![big(2), big(4), big(3)]);
        let ind = GroupHom::identity(&a).induced_on_triple();
        let t = a.mod_two_triple();
        assert_eq!(ind.quotient_map, Gf2Matrix::identity(t.r()));
        assert_eq!(ind.torsion_map, Gf2Matrix::identity(t.s()));
    }

    #[test]
    fn induced_maps_of_doubling_on_z() {
        let f = GroupHom::new(
            FgAbGroup::free(1),
            FgAbGroup::free(1),
            IntMatrix::from_rows(&[vec![2]]),
        )
        .unwrap();
        let ind = f.induced_on_triple();
        assert!(!ind.quotient_map.get(0, 0));
        assert_eq!(ind.torsion_map.rows(), 0);
        assert_eq!(ind.torsion_map.cols(), 0);
    }

    #[test]
    fn invalid_hom_is_rejected() {
        // Z/4 -> Z/2 sending 1 -> 1 is fine, but Z/2 -> Z/4 sending 1 -> 1
        // breaks the order-2 relation
        let err = GroupHom::new(
            FgAbGroup::cyclic(2),
            FgAbGroup::cyclic(4),
            IntMatrix::from_rows(&[vec![1]]),
        );
        assert!(matches!(err, Err(Error::InvalidHom(_))));
    }

    #[test]
    fn naturality_square_on_random_homs() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..500 {
            let a = random_group(&mut rng);
            let b = random_group(&mut rng);
            let f = random_hom(&mut rng, &a, &b);
            let ind = f.induced_on_triple();
            let (ta, tb) = (a.mod_two_triple(), b.mod_two_triple());
            assert_eq!(
                ind.quotient_map.multiply(ta.beta()),
                tb.beta().multiply(&ind.torsion_map),
                "square fails for {a} -> {b}"
            );
        }
    }

    #[test]
    fn induced_maps_respect_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..200 {
            let a = random_group(&mut rng);
            let b = random_group(&mut rng);
            let c = random_group(&mut rng);
            let f = random_hom(&mut rng, &a, &b);
            let g = random_hom(&mut rng, &b, &c);
            let gf = g.compose(&f).unwrap();
            let (i_f, i_g, i_gf) = (
                f.induced_on_triple(),
                g.induced_on_triple(),
                gf.induced_on_triple(),
            );
            assert_eq!(
                i_gf.quotient_map,
                i_g.quotient_map.multiply(&i_f.quotient_map)
            );
            assert_eq!(i_gf.torsion_map, i_g.torsion_map.multiply(&i_f.torsion_map));
        }
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(FgAbGroup::parse("Z/2").unwrap(), FgAbGroup::cyclic(2));
        assert_eq!(
            FgAbGroup::parse("Z^2 x Z/2 x Z/4").unwrap(),
            FgAbGroup::from_parts(2, vec![big(2), big(4)])
        );
        assert_eq!(
            FgAbGroup::parse(" Z * Z/6 ").unwrap(),
            FgAbGroup::from_parts(1, vec![big(6)])
        );
        // canonicalization folds coprime factors
        assert_eq!(FgAbGroup::parse("Z/2 x Z/3").unwrap(), FgAbGroup::cyclic(6));
        assert_eq!(FgAbGroup::parse("Z^0").unwrap(), FgAbGroup::trivial());
        assert_eq!(FgAbGroup::parse("Z/0").unwrap(), FgAbGroup::free(1));
        assert_eq!(FgAbGroup::parse("Z/1").unwrap(), FgAbGroup::trivial());
    }

    #[test]
    fn parse_errors_carry_token_and_position() {
        let err = FgAbGroup::parse("Z/2 x Q/3").unwrap_err();
        assert_eq!(
            err,
            Error::SpecParse {
                token: "Q/3".into(),
                position: 6
            }
        );
        assert!(FgAbGroup::parse("").is_err());
        assert!(FgAbGroup::parse("Z/2 x").is_err());
        assert!(FgAbGroup::parse("Z/-4").is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..50 {
            let g = random_group(&mut rng);
            assert_eq!(FgAbGroup::parse(&g.to_string()).unwrap(), g);
        }
        assert_eq!(
            FgAbGroup::parse(&FgAbGroup::trivial().to_string()).unwrap(),
            FgAbGroup::trivial()
        );
    }

    #[test]
    fn relation_matrix_text_format() {
        let m = parse_relation_matrix("2 2\n2 0\n0 4\n").unwrap();
        assert_eq!(
            FgAbGroup::from_presentation(&m).invariant_factors(),
            &[big(2), big(4)]
        );
        assert_eq!(
            FgAbGroup::from_presentation(&parse_relation_matrix("0 3").unwrap()),
            FgAbGroup::free(3)
        );
        assert!(parse_relation_matrix("2 2\n1 2 3").is_err());
        assert!(parse_relation_matrix("2 2\n1 2 3 4 5").is_err());
        assert!(parse_relation_matrix("x").is_err());
    }
}
