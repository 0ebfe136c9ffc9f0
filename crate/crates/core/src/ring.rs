//! The mod-2 cohomology ring of a finitely generated abelian group, as an
//! exact monomial normal-form algebra.
//!
//! The ring is generated by one degree-1 generator `x_i` per basis vector of
//! (A/2)^v and one degree-2 generator `y_j` per basis vector of the dual of
//! the 2-torsion subgroup, subject only to the rewrite rules
//! `x_i^2 = <i-th row of the torsion-to-quotient matrix, y>`. Since the
//! relations involve nothing but squares of degree-1 generators, eager
//! rewriting during multiplication is confluent and no general Groebner
//! machinery is needed: normal-form monomials simply keep every x-exponent
//! at most 1.
//!
//! Monomial order, frozen for reproducibility: total y-degree ascending,
//! then the y-exponent vector lexicographically, then the x-exponent vector
//! lexicographically.

use crate::abelian::{FgAbGroup, GroupHom, ModTwoTriple};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Gf2Matrix};
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// A normal-form monomial: x-exponents (each 0 or 1) and y-exponents.
/// Degree = |x| + 2 * sum(y).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    x: Vec<u8>,
    y: Vec<u32>,
}

impl Monomial {
    pub fn new(x: Vec<u8>, y: Vec<u32>) -> Self {
        assert!(x.iter().all(|&e| e <= 1), "x-exponents must be 0 or 1");
        Monomial { x, y }
    }

    pub fn one(r: usize, s: usize) -> Self {
        Monomial {
            x: vec![0; r],
            y: vec![0; s],
        }
    }

    pub fn x_exponents(&self) -> &[u8] {
        &self.x
    }

    pub fn y_exponents(&self) -> &[u32] {
        &self.y
    }

    pub fn degree(&self) -> usize {
        self.x_degree() + 2 * self.y_degree()
    }

    pub fn x_degree(&self) -> usize {
        self.x.iter().map(|&e| e as usize).sum()
    }

    pub fn y_degree(&self) -> usize {
        self.y.iter().map(|&e| e as usize).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y_degree()
            .cmp(&other.y_degree())
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.x.iter().enumerate() {
            if e == 1 {
                parts.push(format!("x{}", i + 1));
            }
        }
        for (j, &e) in self.y.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("y{}", j + 1)),
                _ => parts.push(format!("y{}^{}", j + 1, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A sum of distinct normal-form monomials; GF(2) coefficients are implicit.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RingElement {
    terms: BTreeSet<Monomial>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn from_monomial(m: Monomial) -> Self {
        RingElement {
            terms: BTreeSet::from([m]),
        }
    }

    pub fn from_monomials(monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut e = RingElement::zero();
        for m in monomials {
            e.toggle(m);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Adds one monomial in characteristic 2: present twice means absent.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// GF(2) addition: the symmetric difference of the supports.
    pub fn add_assign(&mut self, other: &RingElement) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// The set of degrees appearing in the support: empty for zero, a
    /// singleton for a homogeneous element.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.iter().map(Monomial::degree).collect()
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        let degrees = self.degrees();
        match degrees.len() {
            1 => degrees.into_iter().next(),
            _ => None,
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // leading terms first: total degree descending, then monomial order
        let mut sorted: Vec<&Monomial> = self.terms.iter().collect();
        sorted.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        let rendered: Vec<String> = sorted.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// All exponent vectors of the given length summing to `total`,
/// lexicographically ascending: the degree-`total` monomial basis of the
/// symmetric algebra on `vars` variables.
pub(crate) fn multisets(vars: usize, total: u32) -> Vec<Vec<u32>> {
    fn go(pos: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = remaining;
            out.push(cur.clone());
            cur[pos] = 0;
            return;
        }
        for e in 0..=remaining {
            cur[pos] = e;
            go(pos + 1, remaining - e, cur, out);
        }
        cur[pos] = 0;
    }
    if vars == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    go(0, total, &mut vec![0; vars], &mut out);
    out
}

/// All 0/1 vectors of the given length with exactly `weight` ones,
/// lexicographically ascending.
pub(crate) fn subsets(vars: usize, weight: usize) -> Vec<Vec<u8>> {
    fn go(pos: usize, remaining: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if remaining > cur.len() - pos {
            return;
        }
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        cur[pos] = 0;
        go(pos + 1, remaining, cur, out);
        if remaining > 0 {
            cur[pos] = 1;
            go(pos + 1, remaining - 1, cur, out);
            cur[pos] = 0;
        }
    }
    let mut out = Vec::new();
    if weight > vars {
        return out;
    }
    go(0, weight, &mut vec![0; vars], &mut out);
    out
}

/// Expands a product of GF(2)-linear forms in `s` variables into the set of
/// exponent vectors with odd coefficient.
pub(crate) fn expand_linear_forms(forms: &[&BitVec], s: usize) -> BTreeSet<Vec<u32>> {
    let mut acc = BTreeSet::from([vec![0u32; s]]);
    for form in forms {
        let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
        for base in &acc {
            for j in form.ones() {
                let mut cand = base.clone();
                cand[j] += 1;
                if !next.remove(&cand) {
                    next.insert(cand);
                }
            }
        }
        acc = next;
    }
    acc
}

/// The presentation of the cohomology ring attached to a mod-2 carrier:
/// degree-1 generators x1..xr, degree-2 generators y1..ys, and one rewrite
/// rule per x expressing its square in the y's. Immutable after
/// construction; every operation is pure, so concurrent use is safe.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    triple: ModTwoTriple,
    /// squares[i] holds the y-coordinates of x_i^2: the i-th row of the
    /// torsion-to-quotient matrix, equivalently the i-th column of its
    /// transpose (the dual map).
    squares: Vec<BitVec>,
}

impl RingPresentation {
    pub fn for_group(a: &FgAbGroup) -> Self {
        Self::from_triple(a.mod_two_triple())
    }

    pub fn from_triple(triple: ModTwoTriple) -> Self {
        let squares = (0..triple.r()).map(|i| triple.beta().row(i)).collect();
        RingPresentation { triple, squares }
    }

    pub fn triple(&self) -> &ModTwoTriple {
        &self.triple
    }

    /// Number of degree-1 generators.
    pub fn degree_one_count(&self) -> usize {
        self.triple.r()
    }

    /// Number of degree-2 generators.
    pub fn degree_two_count(&self) -> usize {
        self.triple.s()
    }

    /// The y-coordinates of x_i^2.
    pub fn square_rule(&self, i: usize) -> &BitVec {
        &self.squares[i]
    }

    pub fn one(&self) -> RingElement {
        RingElement::from_monomial(Monomial::one(self.triple.r(), self.triple.s()))
    }

    pub fn x_gen(&self, i: usize) -> RingElement {
        assert!(i < self.triple.r());
        let mut m = Monomial::one(self.triple.r(), self.triple.s());
        m.x[i] = 1;
        RingElement::from_monomial(m)
    }

    pub fn y_gen(&self, j: usize) -> RingElement {
        RingElement::from_monomial(self.y_power(j, 1))
    }

    fn y_power(&self, j: usize, e: u32) -> Monomial {
        assert!(j < self.triple.s());
        let mut m = Monomial::one(self.triple.r(), self.triple.s());
        m.y[j] = e;
        m
    }

    /// Exact product in the quotient ring, in normal form. Whenever an
    /// x-exponent reaches 2 the square is rewritten into its y-linear form
    /// and the product expanded linearly.
    pub fn multiply(&self, u: &RingElement, v: &RingElement) -> RingElement {
        let mut acc = RingElement::zero();
        for a in u.terms() {
            for b in v.terms() {
                self.mul_monomials_into(a, b, &mut acc);
            }
        }
        acc
    }

    fn mul_monomials_into(&self, a: &Monomial, b: &Monomial, acc: &mut RingElement) {
        let (r, s) = (self.triple.r(), self.triple.s());
        assert!(
            a.x.len() == r && b.x.len() == r && a.y.len() == s && b.y.len() == s,
            "monomial does not belong to this presentation"
        );
        let mut x = vec![0u8; r];
        let mut carries = Vec::new();
        for (i, slot) in x.iter_mut().enumerate() {
            match a.x[i] + b.x[i] {
                0 => {}
                1 => *slot = 1,
                _ => carries.push(i),
            }
        }
        let y: Vec<u32> = a.y.iter().zip(&b.y).map(|(p, q)| p + q).collect();
        if carries.is_empty() {
            acc.toggle(Monomial { x, y });
            return;
        }
        let forms: Vec<&BitVec> = carries.iter().map(|&i| &self.squares[i]).collect();
        for inc in expand_linear_forms(&forms, s) {
            let mut yy = y.clone();
            for (t, e) in yy.iter_mut().zip(&inc) {
                *t += e;
            }
            acc.toggle(Monomial {
                x: x.clone(),
                y: yy,
            });
        }
    }

    /// Raises an element to a small power by repeated multiplication.
    pub fn power(&self, u: &RingElement, e: u32) -> RingElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.multiply(&acc, u);
        }
        acc
    }

    /// All normal-form monomials of the given degree, in the frozen order:
    /// y-degree ascending, then y-exponents lexicographically, then
    /// x-exponents lexicographically.
    pub fn basis(&self, degree: usize) -> Vec<Monomial> {
        let (r, s) = (self.triple.r(), self.triple.s());
        let mut out = Vec::new();
        for i in 0..=degree / 2 {
            let k = degree - 2 * i;
            for alpha in multisets(s, i as u32) {
                for eps in subsets(r, k) {
                    out.push(Monomial {
                        x: eps,
                        y: alpha.clone(),
                    });
                }
            }
        }
        out
    }

    /// Dimension of the degree-n part, counted by enumerating the monomial
    /// basis.
    pub fn dim(&self, degree: usize) -> usize {
        self.basis(degree).len()
    }

    /// The filtration of the degree-n part by total y-degree: stage i is
    /// spanned by the monomials with y-degree at least i, which realizes the
    /// powers of the ideal generated by the degree-2 generators.
    pub fn filtration(&self, degree: usize) -> FiltrationReport {
        let top = degree / 2 + 1;
        let mut quotient_dims = vec![0usize; top];
        for m in self.basis(degree) {
            quotient_dims[m.y_degree()] += 1;
        }
        let mut phi_dims = vec![0usize; top + 1];
        for i in (0..top).rev() {
            phi_dims[i] = phi_dims[i + 1] + quotient_dims[i];
        }
        FiltrationReport {
            degree,
            phi_dims,
            quotient_dims,
        }
    }

    /// The total square of one monomial: the product over its factors of
    /// Sq(x_i) = x_i + x_i^2 (rewritten into the y's) and
    /// Sq(y_j^a) = sum over bit-submasks t of a of y_j^(a+t), which is
    /// (y_j + y_j^2)^a reduced mod 2.
    fn total_square(&self, m: &Monomial) -> RingElement {
        let mut acc = self.one();
        for i in 0..m.x.len() {
            if m.x[i] == 0 {
                continue;
            }
            let mut factor = self.x_gen(i);
            for j in self.squares[i].ones() {
                factor.toggle(self.y_power(j, 1));
            }
            acc = self.multiply(&acc, &factor);
        }
        for j in 0..m.y.len() {
            let a = m.y[j];
            if a == 0 {
                continue;
            }
            let mut factor = RingElement::zero();
            let mut t = a;
            loop {
                factor.toggle(self.y_power(j, a + t));
                if t == 0 {
                    break;
                }
                t = (t - 1) & a;
            }
            acc = self.multiply(&acc, &factor);
        }
        acc
    }

    /// The k-th Steenrod square of a homogeneous element: the degree-(d+k)
    /// component of the multiplicative total square.
    pub fn sq(&self, k: usize, u: &RingElement) -> Result<RingElement> {
        if u.is_zero() {
            return Ok(RingElement::zero());
        }
        let Some(d) = u.homogeneous_degree() else {
            return Err(Error::NonHomogeneous);
        };
        let mut out = RingElement::zero();
        for m in u.terms() {
            for t in self.total_square(m).terms() {
                if t.degree() == d + k {
                    out.toggle(t.clone());
                }
            }
        }
        Ok(out)
    }

    /// Rank of the squaring map from degree 1 to degree 2, computed by
    /// actually squaring each degree-1 generator in the ring.
    pub fn squaring_rank(&self) -> usize {
        let basis2 = self.basis(2);
        let index: HashMap<&Monomial, usize> =
            basis2.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = Gf2Matrix::zeros(basis2.len(), self.triple.r());
        for i in 0..self.triple.r() {
            let xi = self.x_gen(i);
            for m in self.multiply(&xi, &xi).terms() {
                mat.set(index[m], i, true);
            }
        }
        mat.rank()
    }

    /// The matrix whose cokernel is the degree-n part of the ring, built on
    /// explicit monomial bases of two free symmetric algebras.
    ///
    /// Rows: pairs (b, c) with b a degree-i monomial in the r quotient
    /// variables and c a degree-j monomial in the s torsion variables,
    /// i + 2j = n, enumerated with j ascending and then (b, c)
    /// lexicographically.
    ///
    /// Columns: triples (a, b, c) for the components 2k + l + 2m = n with
    /// k >= 1, enumerated lexicographically in (k, l, m) and then in
    /// (a, b, c); `a` lives in a degree-2 copy of the quotient variables.
    /// The column of (a, b, c) is Frobenius(a)·b ⊗ c plus
    /// b ⊗ (k-th symmetric power of the dual torsion map applied to a)·c,
    /// where the Frobenius squares every variable of a.
    pub fn cokernel_matrix(&self, degree: usize) -> Gf2Matrix {
        let (r, s) = (self.triple.r(), self.triple.s());
        let mut target: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
        for j in 0..=degree / 2 {
            let i = (degree - 2 * j) as u32;
            for b in multisets(r, i) {
                for c in multisets(s, j as u32) {
                    target.push((b.clone(), c));
                }
            }
        }
        let index: HashMap<&(Vec<u32>, Vec<u32>), usize> =
            target.iter().enumerate().map(|(i, t)| (t, i)).collect();

        let mut columns: Vec<Vec<usize>> = Vec::new();
        for k in 1..=degree / 2 {
            for l in 0..=degree - 2 * k {
                let rest = degree - 2 * k - l;
                if !rest.is_multiple_of(2) {
                    continue;
                }
                let m_deg = rest / 2;
                for a in multisets(r, k as u32) {
                    let frobenius: Vec<u32> = a.iter().map(|&e| 2 * e).collect();
                    let mut forms: Vec<&BitVec> = Vec::new();
                    for (i, &e) in a.iter().enumerate() {
                        for _ in 0..e {
                            forms.push(&self.squares[i]);
                        }
                    }
                    let torsion_parts = expand_linear_forms(&forms, s);
                    for b in multisets(r, l as u32) {
                        for c in multisets(s, m_deg as u32) {
                            // the two summands land in different row blocks
                            // (torsion degree m vs m + k), so no cancellation
                            // happens across them
                            let mut bits = Vec::new();
                            let fb: Vec<u32> =
                                frobenius.iter().zip(&b).map(|(p, q)| p + q).collect();
                            bits.push(index[&(fb, c.clone())]);
                            for w in &torsion_parts {
                                let wc: Vec<u32> = w.iter().zip(&c).map(|(p, q)| p + q).collect();
                                bits.push(index[&(b.clone(), wc)]);
                            }
                            columns.push(bits);
                        }
                    }
                }
            }
        }

        let mut matrix = Gf2Matrix::zeros(target.len(), columns.len());
        for (col, bits) in columns.iter().enumerate() {
            for &row in bits {
                matrix.flip(row, col);
            }
        }
        matrix
    }

    /// Dimension of the degree-n part computed as the corank of the
    /// presentation matrix above: an independent route that never enumerates
    /// normal-form monomials.
    pub fn cokernel_dim(&self, degree: usize) -> usize {
        let m = self.cokernel_matrix(degree);
        m.rows() - m.rank()
    }
}

/// Dimensions of the y-adic filtration stages of one fixed degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiltrationReport {
    pub degree: usize,
    /// phi_dims[i] = dimension of stage i; weakly decreasing, 0 at index
    /// degree/2 + 1.
    pub phi_dims: Vec<usize>,
    /// quotient_dims[i] = dimension of stage i modulo stage i+1.
    pub quotient_dims: Vec<usize>,
}

/// The contravariant map of cohomology rings induced by a group
/// homomorphism: inputs live in the ring of the map's target group, outputs
/// in the ring of its source group.
#[derive(Clone, Debug)]
pub struct RingMap {
    domain: RingPresentation,
    codomain: RingPresentation,
    x_images: Vec<RingElement>,
    y_images: Vec<RingElement>,
}

/// Builds the induced ring map of a group homomorphism. The degree-1
/// generators map along the dual of the induced quotient map, the degree-2
/// generators along the dual of the induced torsion map; the naturality
/// square of the two carriers makes this well defined on the quotient ring.
pub fn cohomology_map(f: &GroupHom) -> RingMap {
    let domain = RingPresentation::for_group(f.target());
    let codomain = RingPresentation::for_group(f.source());
    let induced = f.induced_on_triple();
    let x_images = (0..domain.degree_one_count())
        .map(|i| {
            let mut e = RingElement::zero();
            for j in induced.quotient_map.row_ones(i) {
                e.add_assign(&codomain.x_gen(j));
            }
            e
        })
        .collect();
    let y_images = (0..domain.degree_two_count())
        .map(|t| {
            let mut e = RingElement::zero();
            for j in induced.torsion_map.row_ones(t) {
                e.add_assign(&codomain.y_gen(j));
            }
            e
        })
        .collect();
    RingMap {
        domain,
        codomain,
        x_images,
        y_images,
    }
}

impl RingMap {
    pub fn domain(&self) -> &RingPresentation {
        &self.domain
    }

    pub fn codomain(&self) -> &RingPresentation {
        &self.codomain
    }

    /// Applies the map: generator images extended multiplicatively, with
    /// normal-form reduction along the way.
    pub fn apply(&self, u: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for m in u.terms() {
            let mut acc = self.codomain.one();
            for (i, &e) in m.x_exponents().iter().enumerate() {
                if e == 1 {
                    acc = self.codomain.multiply(&acc, &self.x_images[i]);
                }
            }
            for (j, &e) in m.y_exponents().iter().enumerate() {
                if e > 0 {
                    let p = self.codomain.power(&self.y_images[j], e);
                    acc = self.codomain.multiply(&acc, &p);
                }
            }
            out.add_assign(&acc);
        }
        out
    }
}

/// Graded dimensions plus the rank of the degree-1 squaring map for two
/// groups. Equal carrier dimensions force equal graded dimensions, so a
/// differing squaring rank certifies that the rings are not isomorphic even
/// when every graded piece matches.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessReport {
    pub max_degree: usize,
    pub dims_left: Vec<usize>,
    pub dims_right: Vec<usize>,
    pub dims_agree: bool,
    pub squaring_rank_left: usize,
    pub squaring_rank_right: usize,
    pub squaring_ranks_agree: bool,
    /// True when some invariant separates the two rings.
    pub distinguished: bool,
}

pub fn ring_isomorphism_witness(a: &FgAbGroup, b: &FgAbGroup, max_degree: usize) -> WitnessReport {
    let pa = RingPresentation::for_group(a);
    let pb = RingPresentation::for_group(b);
    let dims_left: Vec<usize> = (0..=max_degree).map(|n| pa.dim(n)).collect();
    let dims_right: Vec<usize> = (0..=max_degree).map(|n| pb.dim(n)).collect();
    let dims_agree = dims_left == dims_right;
    let squaring_rank_left = pa.squaring_rank();
    let squaring_rank_right = pb.squaring_rank();
    let squaring_ranks_agree = squaring_rank_left == squaring_rank_right;
    WitnessReport {
        max_degree,
        dims_left,
        dims_right,
        dims_agree,
        squaring_rank_left,
        squaring_rank_right,
        squaring_ranks_agree,
        distinguished: !dims_agree || !squaring_ranks_agree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::predicted_dims;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring_of(spec: &str) -> RingPresentation {
        RingPresentation::for_group(&FgAbGroup::parse(spec).unwrap())
    }

    fn random_element(rng: &mut ChaCha8Rng, p: &RingPresentation, degree: usize) -> RingElement {
        RingElement::from_monomials(p.basis(degree).into_iter().filter(|_| rng.gen_bool(0.5)))
    }

    #[test]
    fn presentation_of_z2_is_a_polynomial_ring_in_disguise() {
        let p = ring_of("Z/2");
        assert_eq!((p.degree_one_count(), p.degree_two_count()), (1, 1));
        assert!(p.square_rule(0).get(0), "x^2 = y");
    }

    #[test]
    fn presentation_of_higher_two_power_cyclic_groups() {
        for spec in ["Z/4", "Z/8", "Z/16"] {
            let p = ring_of(spec);
            assert_eq!((p.degree_one_count(), p.degree_two_count()), (1, 1));
            assert!(p.square_rule(0).is_zero(), "x^2 = 0 for {spec}");
        }
    }

    #[test]
    fn presentation_of_the_integers() {
        let p = ring_of("Z");
        assert_eq!((p.degree_one_count(), p.degree_two_count()), (1, 0));
        assert!(p.square_rule(0).is_zero());
    }

    #[test]
    fn squares_of_generators() {
        let p = ring_of("Z/2");
        assert_eq!(p.multiply(&p.x_gen(0), &p.x_gen(0)), p.y_gen(0));

        let p = ring_of("Z/4");
        assert!(p.multiply(&p.x_gen(0), &p.x_gen(0)).is_zero());
    }

    #[test]
    fn square_of_a_sum_keeps_only_the_z2_contribution() {
        let p = ring_of("Z/2 x Z/4");
        let u = p.x_gen(0).add(&p.x_gen(1));
        // cross terms cancel in characteristic 2, x1^2 = y1, x2^2 = 0
        assert_eq!(p.multiply(&u, &u), p.y_gen(0));
    }

    #[test]
    fn dims_match_the_counting_formula() {
        let p = ring_of("Z/2");
        for n in 0..=10 {
            assert_eq!(p.dim(n), 1);
        }
        assert_eq!(ring_of("Z/2 x Z/4").dim(3), 4);
        let trivial = ring_of("Z^0");
        assert_eq!(trivial.dim(0), 1);
        for n in 1..=6 {
            assert_eq!(trivial.dim(n), 0);
        }
    }

    #[test]
    fn dims_depend_only_on_the_carrier_dimensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for _ in 0..50 {
            let r = rng.gen_range(0..=4);
            let s = rng.gen_range(0..=r);
            let beta1 = Gf2Matrix::from_fn(r, s, |_, _| rng.gen_bool(0.5));
            let beta2 = Gf2Matrix::from_fn(r, s, |_, _| rng.gen_bool(0.5));
            let p1 = RingPresentation::from_triple(ModTwoTriple::new(r, s, beta1));
            let p2 = RingPresentation::from_triple(ModTwoTriple::new(r, s, beta2));
            for n in 0..=8 {
                assert_eq!(p1.dim(n), p2.dim(n));
                assert_eq!(p1.dim(n), predicted_dims(p1.triple(), n).as_usize(n));
            }
        }
    }

    #[test]
    fn basis_examples() {
        let b = ring_of("Z/2").basis(3);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "x1*y1");

        let b = ring_of("Z/4").basis(2);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "y1");

        let p = RingPresentation::from_triple(ModTwoTriple::new(2, 0, Gf2Matrix::zeros(2, 0)));
        let b = p.basis(2);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "x1*x2");
    }

    #[test]
    fn basis_order_is_the_documented_one() {
        let p = ring_of("Z/2 x Z/4");
        let rendered: Vec<String> = p.basis(2).iter().map(|m| m.to_string()).collect();
        assert_eq!(rendered, ["x1*x2", "y2", "y1"]);
        let mut sorted = p.basis(2);
        sorted.sort();
        assert_eq!(sorted, p.basis(2), "basis comes out in monomial order");
    }

    #[test]
    fn filtration_examples() {
        let p = ring_of("Z/2 x Z/4");
        let rep = p.filtration(2);
        assert_eq!(rep.quotient_dims, [1, 2]);
        assert_eq!(rep.phi_dims, [3, 2, 0]);

        let rep = p.filtration(0);
        assert_eq!(rep.quotient_dims, [1]);

        let rep = ring_of("Z/4").filtration(4);
        assert_eq!(rep.quotient_dims, [0, 0, 1]);
    }

    #[test]
    fn steenrod_on_generators() {
        let p = ring_of("Z/4");
        assert!(p.sq(1, &p.x_gen(0)).unwrap().is_zero());

        let p = ring_of("Z/2");
        assert_eq!(p.sq(1, &p.x_gen(0)).unwrap(), p.y_gen(0));

        let p = ring_of("Z/2 x Z/4");
        for j in 0..2 {
            let y = p.y_gen(j);
            assert!(p.sq(1, &y).unwrap().is_zero());
            assert_eq!(p.sq(2, &y).unwrap(), p.multiply(&y, &y));
        }
    }

    #[test]
    fn steenrod_unstable_axioms_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let p = ring_of("Z/2 x Z/4 x Z/8");
        for _ in 0..60 {
            let d = rng.gen_range(0..=5);
            let u = random_element(&mut rng, &p, d);
            assert_eq!(p.sq(0, &u).unwrap(), u, "Sq^0 is the identity");
            assert_eq!(
                p.sq(d, &u).unwrap(),
                p.multiply(&u, &u),
                "the top square is squaring"
            );
            for k in d + 1..=d + 3 {
                assert!(
                    p.sq(k, &u).unwrap().is_zero(),
                    "squares above the degree vanish"
                );
            }
            let sq1 = p.sq(1, &u).unwrap();
            assert!(
                p.sq(1, &sq1).unwrap().is_zero(),
                "Sq^1 composed with itself vanishes"
            );
        }
    }

    #[test]
    fn cartan_formula_and_derivation_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        let p = ring_of("Z/2 x Z/4");
        for _ in 0..40 {
            let (du, dv) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
            let u = random_element(&mut rng, &p, du);
            let v = random_element(&mut rng, &p, dv);
            let uv = p.multiply(&u, &v);
            for k in 0..=du + dv + 1 {
                let mut rhs = RingElement::zero();
                for i in 0..=k {
                    let a = p.sq(i, &u).unwrap();
                    let b = p.sq(k - i, &v).unwrap();
                    rhs.add_assign(&p.multiply(&a, &b));
                }
                assert_eq!(p.sq(k, &uv).unwrap(), rhs, "Cartan fails at k={k}");
            }
            // k = 1 case read as a derivation
            let lhs = p.sq(1, &uv).unwrap();
            let rhs = p
                .multiply(&p.sq(1, &u).unwrap(), &v)
                .add(&p.multiply(&u, &p.sq(1, &v).unwrap()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn sq_rejects_mixed_degrees() {
        let p = ring_of("Z/2");
        let mixed = p.x_gen(0).add(&p.y_gen(0));
        assert_eq!(p.sq(1, &mixed), Err(Error::NonHomogeneous));
        assert!(p.sq(3, &RingElement::zero()).unwrap().is_zero());
    }

    #[test]
    fn multiplication_is_commutative_associative_unital() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let p = ring_of("Z/2 x Z/4 x Z/8");
        for _ in 0..1000 {
            let (du, dv, dw) = (
                rng.gen_range(0..=6),
                rng.gen_range(0..=6),
                rng.gen_range(0..=6),
            );
            let u = random_element(&mut rng, &p, du);
            let v = random_element(&mut rng, &p, dv);
            let w = random_element(&mut rng, &p, dw);
            assert_eq!(p.multiply(&u, &v), p.multiply(&v, &u));
            assert_eq!(
                p.multiply(&p.multiply(&u, &v), &w),
                p.multiply(&u, &p.multiply(&v, &w))
            );
            assert_eq!(p.multiply(&u, &p.one()), u);
        }
    }

    #[test]
    fn filtration_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        let p = ring_of("Z/2 x Z/4");
        for _ in 0..200 {
            let (d1, d2) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
            let (i, j) = (rng.gen_range(0..=d1 / 2), rng.gen_range(0..=d2 / 2));
            let u = RingElement::from_monomials(
                p.basis(d1)
                    .into_iter()
                    .filter(|m| m.y_degree() >= i)
                    .filter(|_| rng.gen_bool(0.5)),
            );
            let v = RingElement::from_monomials(
                p.basis(d2)
                    .into_iter()
                    .filter(|m| m.y_degree() >= j)
                    .filter(|_| rng.gen_bool(0.5)),
            );
            for m in p.multiply(&u, &v).terms() {
                assert!(m.y_degree() >= i + j, "product fell out of the filtration");
            }
        }
    }

    #[test]
    fn induced_map_of_identity_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(79);
        let g = FgAbGroup::parse("Z x Z/2 x Z/12").unwrap();
        let map = cohomology_map(&GroupHom::identity(&g));
        for _ in 0..20 {
            let d = rng.gen_range(0..=5);
            let u = random_element(&mut rng, map.domain(), d);
            assert_eq!(map.apply(&u), u);
        }
    }

    #[test]
    fn induced_map_of_doubling_into_z4() {
        use crate::abelian::IntMatrix;
        let f = GroupHom::new(
            FgAbGroup::cyclic(2),
            FgAbGroup::cyclic(4),
            IntMatrix::from_rows(&[vec![2]]),
        )
        .unwrap();
        let map = cohomology_map(&f);
        // degree 1 dies, the degree-2 generator survives
        assert!(map.apply(&map.domain().x_gen(0)).is_zero());
        assert_eq!(map.apply(&map.domain().y_gen(0)), map.codomain().y_gen(0));
        let y3 = map.domain().power(&map.domain().y_gen(0), 3);
        assert_eq!(
            map.apply(&y3),
            map.codomain().power(&map.codomain().y_gen(0), 3)
        );
    }

    #[test]
    fn induced_map_of_projection_from_z() {
        use crate::abelian::IntMatrix;
        let f = GroupHom::new(
            FgAbGroup::free(1),
            FgAbGroup::cyclic(2),
            IntMatrix::from_rows(&[vec![1]]),
        )
        .unwrap();
        let map = cohomology_map(&f);
        assert_eq!(map.apply(&map.domain().x_gen(0)), map.codomain().x_gen(0));
        // y = x^2 upstairs must land on x^2 = 0 downstairs
        assert!(map.apply(&map.domain().y_gen(0)).is_zero());
        let x = map.domain().x_gen(0);
        let x_squared = map.domain().multiply(&x, &x);
        assert_eq!(x_squared, map.domain().y_gen(0));
        assert!(map.apply(&x_squared).is_zero());
    }

    #[test]
    fn cokernel_dimensions_match_the_ring() {
        let p = ring_of("Z/2 x Z/4");
        let m = p.cokernel_matrix(2);
        assert_eq!((m.rows(), m.cols()), (5, 2));
        assert_eq!(m.rank(), 2);
        assert_eq!(p.cokernel_dim(2), 3);
        assert_eq!(p.cokernel_dim(2), p.dim(2));

        assert_eq!(ring_of("Z").cokernel_dim(2), 0);

        for spec in ["Z/2", "Z x Z/6", "Z^2 x Z/4 x Z/8"] {
            let p = ring_of(spec);
            assert_eq!(p.cokernel_dim(0), 1, "{spec}");
            assert_eq!(p.cokernel_dim(1), p.degree_one_count(), "{spec}");
        }
    }

    #[test]
    fn witness_separates_z2_from_z4() {
        let report = ring_isomorphism_witness(&FgAbGroup::cyclic(2), &FgAbGroup::cyclic(4), 10);
        assert!(report.dims_agree);
        assert_eq!(report.squaring_rank_left, 1);
        assert_eq!(report.squaring_rank_right, 0);
        assert!(report.distinguished);
    }

    #[test]
    fn witness_is_reflexive_and_canonical() {
        let a = FgAbGroup::parse("Z/2 x Z/4").unwrap();
        let same = ring_isomorphism_witness(&a, &a, 6);
        assert!(!same.distinguished);

        let b = FgAbGroup::parse("Z/4 x Z/2").unwrap();
        let canon = ring_isomorphism_witness(&a, &b, 6);
        assert_eq!(canon, same, "canonicalization makes the reports identical");
    }

    #[test]
    fn element_rendering() {
        let p = ring_of("Z/2 x Z/4");
        let first = Monomial::new(vec![1, 0], vec![0, 3]);
        let second = Monomial::new(vec![0, 1], vec![0, 0]);
        let e = RingElement::from_monomials([first, second]);
        assert_eq!(e.to_string(), "x1*y2^3 + x2");
        assert_eq!(RingElement::zero().to_string(), "0");
        assert_eq!(p.one().to_string(), "1");
    }
}
