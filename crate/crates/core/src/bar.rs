//! Independent ground truth: cochain-level group cohomology of a finite
//! abelian group over GF(2), with juxtaposition cup products and an integral
//! lift for the degree-raising coefficient operation.
//!
//! Degree-n cochains are functions from n-tuples of group elements to GF(2),
//! stored as bit vectors. Tuples are enumerated mixed-radix with the
//! leftmost component fastest, and elements of the group itself the same
//! way over the cyclic factors; both enumerations are frozen so every
//! matrix this module builds is reproducible.
//!
//! Everything here recomputes cohomology from scratch - ranks of explicit
//! differential matrices, coboundary tests by linear solving - precisely so
//! that it shares no code path with the ring-side computations it checks.
//! Memory is guarded by a configurable budget (default 2 GiB); groups with
//! free rank have no finite bar complex and are rejected.

use crate::abelian::FgAbGroup;
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Gf2Matrix};
use crate::ring::{Monomial, RingPresentation};
use crate::DEFAULT_BAR_BUDGET_BYTES;
use num_traits::ToPrimitive;

/// A finite abelian group presented as a product of cyclic factors; elements
/// are indices into the mixed-radix enumeration of residue tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    orders: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
}

impl FiniteGroup {
    /// # Panics
    ///
    /// Panics if any cyclic order is below 2. An empty list is the trivial
    /// group.
    pub fn new(orders: Vec<usize>) -> Result<FiniteGroup> {
        assert!(orders.iter().all(|&m| m >= 2), "cyclic orders must be >= 2");
        let mut strides = Vec::with_capacity(orders.len());
        let mut order = 1usize;
        for &m in &orders {
            strides.push(order);
            order = order
                .checked_mul(m)
                .ok_or_else(|| Error::OrderTooLarge(format!("product of {orders:?}")))?;
        }
        Ok(FiniteGroup {
            orders,
            strides,
            order,
        })
    }

    pub fn from_group(a: &FgAbGroup) -> Result<FiniteGroup> {
        if a.free_rank() > 0 {
            return Err(Error::InfiniteGroup(a.free_rank()));
        }
        let orders = a
            .invariant_factors()
            .iter()
            .map(|d| {
                d.to_usize()
                    .ok_or_else(|| Error::OrderTooLarge(d.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::new(orders)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Residue of element `e` at cyclic factor `i`.
    pub fn residue(&self, e: usize, i: usize) -> usize {
        (e / self.strides[i]) % self.orders[i]
    }

    /// Componentwise modular addition.
    pub fn add(&self, x: usize, y: usize) -> usize {
        let mut out = 0;
        for i in 0..self.orders.len() {
            let sum = (self.residue(x, i) + self.residue(y, i)) % self.orders[i];
            out += sum * self.strides[i];
        }
        out
    }
}

/// A GF(2)-valued function on n-tuples of group elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarCochain {
    degree: usize,
    group_order: usize,
    values: BitVec,
}

impl BarCochain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &BitVec {
        &self.values
    }

    pub fn get(&self, tuple: usize) -> bool {
        self.values.get(tuple)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    /// GF(2) sum of two cochains of the same degree over the same group.
    pub fn add(&self, other: &BarCochain) -> BarCochain {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        assert_eq!(self.group_order, other.group_order, "group mismatch");
        let mut values = self.values.clone();
        values.xor_assign(&other.values);
        BarCochain {
            degree: self.degree,
            group_order: self.group_order,
            values,
        }
    }
}

/// The bar cochain complex of a finite abelian group with GF(2)
/// coefficients, with a memory budget for the differential matrices.
/// Immutable after construction; matrix construction may parallelize
/// internally through the GF(2) layer but stays deterministic.
#[derive(Clone, Debug)]
pub struct BarComplex {
    group: FiniteGroup,
    budget_bytes: u64,
}

/// Cocycle representatives for the canonical ring generators: one character
/// per even cyclic factor in degree 1 and one carry cocycle per even cyclic
/// factor in degree 2, both in factor order, matching the canonical bases of
/// the mod-2 carrier.
#[derive(Clone, Debug)]
pub struct CanonicalCocycles {
    pub x_classes: Vec<BarCochain>,
    pub y_classes: Vec<BarCochain>,
}

impl BarComplex {
    pub fn new(group: FiniteGroup) -> BarComplex {
        BarComplex {
            group,
            budget_bytes: DEFAULT_BAR_BUDGET_BYTES,
        }
    }

    pub fn with_budget(group: FiniteGroup, budget_bytes: u64) -> BarComplex {
        BarComplex {
            group,
            budget_bytes,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn budget_bytes(&self) -> u64 {
        self.budget_bytes
    }

    fn wide_tuple_count(&self, degree: usize) -> u128 {
        (self.group.order() as u128)
            .checked_pow(degree as u32)
            .unwrap_or(u128::MAX)
    }

    /// Number of degree-n basis tuples, if the corresponding bit vector fits
    /// the budget.
    pub fn cochain_dim(&self, degree: usize) -> Result<usize> {
        let cells = self.wide_tuple_count(degree);
        let bytes = cells.div_ceil(64) * 8;
        if bytes > self.budget_bytes as u128 {
            return Err(Error::BudgetExceeded {
                group_order: self.group.order(),
                degree,
                cells,
                needed_bytes: bytes,
                budget_bytes: self.budget_bytes,
            });
        }
        Ok(cells as usize)
    }

    /// Budget gate for the degree-n differential matrix, which has
    /// |G|^(n+1) rows and |G|^n columns. The estimate covers the working
    /// copy that rank elimination takes.
    fn matrix_dims(&self, degree: usize) -> Result<(usize, usize)> {
        let rows = self.wide_tuple_count(degree + 1);
        let cols = self.wide_tuple_count(degree);
        let bytes = rows * (cols.div_ceil(64) * 8) * 2;
        if bytes > self.budget_bytes as u128 {
            return Err(Error::BudgetExceeded {
                group_order: self.group.order(),
                degree: degree + 1,
                cells: rows,
                needed_bytes: bytes,
                budget_bytes: self.budget_bytes,
            });
        }
        Ok((rows as usize, cols as usize))
    }

    pub fn zero_cochain(&self, degree: usize) -> Result<BarCochain> {
        let dim = self.cochain_dim(degree)?;
        Ok(BarCochain {
            degree,
            group_order: self.group.order(),
            values: BitVec::zeros(dim),
        })
    }

    /// The unit of the cup product: the degree-0 cochain with value 1.
    pub fn unit_cochain(&self) -> BarCochain {
        let mut values = BitVec::zeros(1);
        values.set(0, true);
        BarCochain {
            degree: 0,
            group_order: self.group.order(),
            values,
        }
    }

    pub fn cochain_from_values(&self, degree: usize, values: BitVec) -> Result<BarCochain> {
        let dim = self.cochain_dim(degree)?;
        assert_eq!(values.len(), dim, "value vector has the wrong length");
        Ok(BarCochain {
            degree,
            group_order: self.group.order(),
            values,
        })
    }

    /// Visits the n+2 faces of an (n+1)-tuple: drop the first component,
    /// merge each adjacent pair, drop the last component. The sign passed
    /// along is the one the integral differential would carry.
    fn for_each_face(&self, tuple: usize, tuple_len: usize, mut visit: impl FnMut(usize, i32)) {
        let g = self.group.order();
        let n = tuple_len - 1;
        visit(tuple / g, 1);
        let mut pow = 1usize;
        let mut sign = 1i32;
        for _ in 1..=n {
            sign = -sign;
            let low = tuple % pow;
            let rest = tuple / pow;
            let a = rest % g;
            let b = (rest / g) % g;
            let high = rest / (g * g);
            visit(low + (self.group.add(a, b) + high * g) * pow, sign);
            pow *= g;
        }
        visit(tuple % pow, -sign);
    }

    /// The simplicial coboundary: (df)(g1..g_{n+1}) is the GF(2) sum of f
    /// over the faces.
    pub fn differential(&self, f: &BarCochain) -> Result<BarCochain> {
        assert_eq!(f.group_order, self.group.order(), "group mismatch");
        let out_dim = self.cochain_dim(f.degree + 1)?;
        let mut values = BitVec::zeros(out_dim);
        for t in 0..out_dim {
            let mut parity = false;
            self.for_each_face(t, f.degree + 1, |face, _| parity ^= f.values.get(face));
            if parity {
                values.set(t, true);
            }
        }
        Ok(BarCochain {
            degree: f.degree + 1,
            group_order: f.group_order,
            values,
        })
    }

    /// The matrix of the degree-n coboundary, rows indexed by (n+1)-tuples
    /// and columns by n-tuples. Coinciding faces cancel mod 2.
    pub fn differential_matrix(&self, degree: usize) -> Result<Gf2Matrix> {
        let (rows, cols) = self.matrix_dims(degree)?;
        let mut m = Gf2Matrix::zeros(rows, cols);
        for t in 0..rows {
            self.for_each_face(t, degree + 1, |face, _| m.flip(t, face));
        }
        Ok(m)
    }

    /// dim H^n = dim ker(d_n) - rank(d_{n-1}), both ranks taken of explicit
    /// matrices.
    pub fn cohomology_dim(&self, degree: usize) -> Result<usize> {
        let dim_n = self.cochain_dim(degree)?;
        let rank_n = self.differential_matrix(degree)?.rank();
        let rank_below = if degree == 0 {
            0
        } else {
            self.differential_matrix(degree - 1)?.rank()
        };
        Ok(dim_n - rank_n - rank_below)
    }

    /// Juxtaposition product: (f cup h)(g1..g_{p+q}) =
    /// f(g1..g_p) * h(g_{p+1}..g_{p+q}).
    ///
    /// # Panics
    ///
    /// Panics if the cochains belong to groups of different orders.
    pub fn cup(&self, f: &BarCochain, h: &BarCochain) -> BarCochain {
        assert_eq!(f.group_order, self.group.order(), "group mismatch");
        assert_eq!(h.group_order, self.group.order(), "group mismatch");
        let g = self.group.order();
        let left = g.checked_pow(f.degree as u32).expect("cup overflow");
        let out_dim = left.checked_mul(h.values.len()).expect("cup overflow");
        let mut values = BitVec::zeros(out_dim);
        for i in 0..out_dim {
            if f.values.get(i % left) && h.values.get(i / left) {
                values.set(i, true);
            }
        }
        BarCochain {
            degree: f.degree + h.degree,
            group_order: f.group_order,
            values,
        }
    }

    /// Representatives for the canonical generators. Each character reduces
    /// one even residue mod 2; each degree-2 representative is the carry
    /// cocycle c(a, b) = floor((a_i + b_i) / m_i) mod 2 of one even factor.
    pub fn canonical_cocycles(&self) -> Result<CanonicalCocycles> {
        let g = self.group.order();
        let dim1 = self.cochain_dim(1)?;
        let dim2 = self.cochain_dim(2)?;
        let even: Vec<usize> = (0..self.group.orders().len())
            .filter(|&i| self.group.orders()[i].is_multiple_of(2))
            .collect();
        let mut x_classes = Vec::new();
        let mut y_classes = Vec::new();
        for &i in &even {
            let m = self.group.orders()[i];
            let mut x = BitVec::zeros(dim1);
            for e in 0..g {
                if self.group.residue(e, i) % 2 == 1 {
                    x.set(e, true);
                }
            }
            x_classes.push(BarCochain {
                degree: 1,
                group_order: g,
                values: x,
            });
            let mut y = BitVec::zeros(dim2);
            for pair in 0..dim2 {
                let (a, b) = (pair % g, pair / g);
                let carry = (self.group.residue(a, i) + self.group.residue(b, i)) / m;
                if carry % 2 == 1 {
                    y.set(pair, true);
                }
            }
            y_classes.push(BarCochain {
                degree: 2,
                group_order: g,
                values: y,
            });
        }
        Ok(CanonicalCocycles {
            x_classes,
            y_classes,
        })
    }

    /// Cup-product representative of a normal-form ring monomial: the x
    /// factors ascending, then the y factors with multiplicity.
    pub fn monomial_cochain(&self, m: &Monomial, reps: &CanonicalCocycles) -> BarCochain {
        let mut acc = self.unit_cochain();
        for (i, &e) in m.x_exponents().iter().enumerate() {
            if e == 1 {
                acc = self.cup(&acc, &reps.x_classes[i]);
            }
        }
        for (j, &e) in m.y_exponents().iter().enumerate() {
            for _ in 0..e {
                acc = self.cup(&acc, &reps.y_classes[j]);
            }
        }
        acc
    }

    /// Whether `f` is a coboundary, decided by solving against the explicit
    /// differential matrix one degree down.
    pub fn is_coboundary(&self, f: &BarCochain) -> Result<bool> {
        if f.degree == 0 {
            return Ok(f.values.is_zero());
        }
        let m = self.differential_matrix(f.degree - 1)?;
        Ok(m.solve(&f.values).is_some())
    }

    /// The degree-raising coefficient operation on a cocycle: lift the 0/1
    /// values to the integers mod 4, apply the signed integral differential,
    /// halve, reduce mod 2. The input must be a cocycle; the output is one.
    pub fn bockstein(&self, f: &BarCochain) -> Result<BarCochain> {
        if !self.differential(f)?.is_zero() {
            return Err(Error::NotACocycle);
        }
        let out_dim = self.cochain_dim(f.degree + 1)?;
        let mut values = BitVec::zeros(out_dim);
        for t in 0..out_dim {
            let mut sum = 0i32;
            self.for_each_face(t, f.degree + 1, |face, sign| {
                if f.values.get(face) {
                    sum += sign;
                }
            });
            let residue = sum.rem_euclid(4);
            debug_assert!(residue % 2 == 0, "differential of a mod-2 cocycle is even");
            if residue == 2 {
                values.set(t, true);
            }
        }
        Ok(BarCochain {
            degree: f.degree + 1,
            group_order: f.group_order,
            values,
        })
    }
}

/// One degree of the span check: the classes of the ring's monomial basis,
/// taken modulo coboundaries, must span a space of exactly the ring's
/// dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanCheck {
    pub degree: usize,
    pub expected: usize,
    pub actual: usize,
    pub ok: bool,
}

/// Outcome of checking the ring presentation inside the bar complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationCertificate {
    pub max_degree: usize,
    /// d(representative) = 0 for each degree-1 generator.
    pub x_cocycle_ok: Vec<bool>,
    /// d(representative) = 0 for each degree-2 generator.
    pub y_cocycle_ok: Vec<bool>,
    /// Generator classes are linearly independent modulo coboundaries.
    pub classes_independent: bool,
    /// x_i cup x_i agrees with its rewrite rule up to a coboundary.
    pub relation_ok: Vec<bool>,
    pub span_checks: Vec<SpanCheck>,
    pub passed: bool,
}

/// Checks, inside the bar complex of a finite group, that the canonical
/// cocycles satisfy exactly the ring's rewrite rules and that their cup
/// monomials span each degree up to `max_degree` with the ring's dimension.
pub fn verify_relations(
    a: &FgAbGroup,
    max_degree: usize,
    budget_bytes: u64,
) -> Result<RelationCertificate> {
    let ring = RingPresentation::for_group(a);
    let complex = BarComplex::with_budget(FiniteGroup::from_group(a)?, budget_bytes);
    let reps = complex.canonical_cocycles()?;
    let g = complex.group().order();

    let mut x_cocycle_ok = Vec::new();
    for f in &reps.x_classes {
        x_cocycle_ok.push(complex.differential(f)?.is_zero());
    }
    let mut y_cocycle_ok = Vec::new();
    for f in &reps.y_classes {
        y_cocycle_ok.push(complex.differential(f)?.is_zero());
    }

    // independence: in degree 1 there are no nonzero coboundaries, in
    // degree 2 quotient by the image of the first differential
    let r = ring.degree_one_count();
    let s = ring.degree_two_count();
    let x_rows: Vec<BitVec> = reps.x_classes.iter().map(|f| f.values.clone()).collect();
    let x_rank = Gf2Matrix::from_rows(g, &x_rows).rank();
    let image_rows = complex.differential_matrix(1)?.transpose();
    let y_rows: Vec<BitVec> = reps.y_classes.iter().map(|f| f.values.clone()).collect();
    let y_stack = image_rows.vstack(&Gf2Matrix::from_rows(g * g, &y_rows));
    let y_rank = y_stack.rank() - image_rows.rank();
    let classes_independent = x_rank == r && y_rank == s;

    // x_i cup x_i plus its y-linear rewrite must bound
    let mut relation_ok = Vec::new();
    for i in 0..r {
        let mut residual = complex.cup(&reps.x_classes[i], &reps.x_classes[i]);
        for j in ring.square_rule(i).ones() {
            residual = residual.add(&reps.y_classes[j]);
        }
        relation_ok.push(complex.is_coboundary(&residual)?);
    }

    // span of cup monomials modulo coboundaries, degree by degree
    let mut span_checks = Vec::new();
    for n in 0..=max_degree {
        let expected = ring.dim(n);
        let monomials = ring.basis(n);
        let rows: Vec<BitVec> = monomials
            .iter()
            .map(|m| complex.monomial_cochain(m, &reps).values.clone())
            .collect();
        let dim_n = complex.cochain_dim(n)?;
        let mono_matrix = Gf2Matrix::from_rows(dim_n, &rows);
        let actual = if n == 0 {
            mono_matrix.rank()
        } else {
            let image = complex.differential_matrix(n - 1)?.transpose();
            image.vstack(&mono_matrix).rank() - image.rank()
        };
        span_checks.push(SpanCheck {
            degree: n,
            expected,
            actual,
            ok: expected == actual,
        });
    }

    let passed = x_cocycle_ok.iter().all(|&b| b)
        && y_cocycle_ok.iter().all(|&b| b)
        && classes_independent
        && relation_ok.iter().all(|&b| b)
        && span_checks.iter().all(|c| c.ok);
    Ok(RelationCertificate {
        max_degree,
        x_cocycle_ok,
        y_cocycle_ok,
        classes_independent,
        relation_ok,
        span_checks,
        passed,
    })
}
