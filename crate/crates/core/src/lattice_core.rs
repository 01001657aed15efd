//! Exact integer linear algebra: dense big-integer matrices, Smith normal
//! form with unimodular transforms, matrix powers and orders, and the
//! cokernel/kernel data of an integer map.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::pre(format!(
                "{} entries given for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from nested rows.
    ///
    /// Panics if the rows have different lengths.
    pub fn from_rows<R, T>(rows: R) -> Self
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut entries = Vec::new();
        let mut nrows = 0;
        let mut ncols = None;
        for row in rows {
            let before = entries.len();
            entries.extend(row.into_iter().map(Into::into));
            let width = entries.len() - before;
            match ncols {
                None => ncols = Some(width),
                Some(c) => assert_eq!(c, width, "ragged rows in IntMatrix::from_rows"),
            }
            nrows += 1;
        }
        Self {
            rows: nrows,
            cols: ncols.unwrap_or(0),
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal_from<T: Into<BigInt>>(rows: usize, cols: usize, diag: impl IntoIterator<Item = T>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.into_iter().enumerate().take(rows.min(cols)) {
            m.entries[i * cols + i] = d.into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.entries[i * self.cols + j] = value.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries `(i, i)` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn negated(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// True when every off-diagonal entry is zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * factor;
            self.entries[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * factor;
            self.entries[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[r * self.cols + j];
            *e = -std::mem::take(e);
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on incompatible shapes; use [`IntMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("incompatible matrix shapes")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero invariant factors, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with row transform `u` and column transform `v`.
///
/// The diagonal of `d` is nonnegative and each entry divides the next;
/// zeros come last.
pub fn snf(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let e = d.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| e.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d.get(t, t).clone();
            let mut cleared = true;
            for i in t + 1..rows {
                let q = d.get(i, t) / &pivot;
                if !q.is_zero() {
                    let neg = -q;
                    d.add_row_multiple(i, t, &neg);
                    u.add_row_multiple(i, t, &neg);
                }
                cleared &= d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = d.get(t, j) / &pivot;
                if !q.is_zero() {
                    let neg = -q;
                    d.add_col_multiple(j, t, &neg);
                    v.add_col_multiple(j, t, &neg);
                }
                cleared &= d.get(t, j).is_zero();
            }
            if !cleared {
                continue;
            }

            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> SmithDecomposition {
    SmithDecomposition { u, d, v }
}

/// Exact `k`-th power by repeated squaring. `matrix_pow(m, 0)` is the identity.
pub fn matrix_pow(m: &IntMatrix, k: u64) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut result = IntMatrix::identity(m.rows());
    let mut base = m.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    Ok(result)
}

/// The order of an element of some group, as far as it is known.
///
/// `Bounded { lower, upper }` means `lower` divides the order and the order
/// divides `upper`; `lower | upper` always holds. `Ambiguous` carries at
/// least two candidates. Use the checked constructors to build those two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderResult {
    Infinite,
    Finite(BigUint),
    Bounded { lower: BigUint, upper: BigUint },
    Ambiguous(BTreeSet<BigUint>),
}

impl OrderResult {
    pub fn finite(m: impl Into<BigUint>) -> Self {
        OrderResult::Finite(m.into())
    }

    pub fn bounded(lower: impl Into<BigUint>, upper: impl Into<BigUint>) -> Result<Self> {
        let (lower, upper) = (lower.into(), upper.into());
        if lower.is_zero() || upper.is_zero() || !upper.is_multiple_of(&lower) {
            return Err(Error::pre(format!(
                "bounds must be positive with lower | upper (got {lower}, {upper})"
            )));
        }
        Ok(OrderResult::Bounded { lower, upper })
    }

    pub fn ambiguous<T: Into<BigUint>>(candidates: impl IntoIterator<Item = T>) -> Result<Self> {
        let set: BTreeSet<BigUint> = candidates.into_iter().map(Into::into).collect();
        if set.len() < 2 || set.iter().any(Zero::is_zero) {
            return Err(Error::pre(
                "ambiguous order needs at least two positive candidates",
            ));
        }
        Ok(OrderResult::Ambiguous(set))
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, OrderResult::Infinite)
    }

    pub fn is_valid(&self) -> bool {
        match self {
            OrderResult::Infinite => true,
            OrderResult::Finite(m) => !m.is_zero(),
            OrderResult::Bounded { lower, upper } => {
                !lower.is_zero() && !upper.is_zero() && upper.is_multiple_of(lower)
            }
            OrderResult::Ambiguous(c) => c.len() >= 2 && !c.iter().any(Zero::is_zero),
        }
    }

    /// Every order this result allows is a multiple of `m`.
    pub fn divisible_by(&self, m: &BigUint) -> bool {
        match self {
            OrderResult::Infinite => false,
            OrderResult::Finite(x) => x.is_multiple_of(m),
            OrderResult::Bounded { lower, .. } => lower.is_multiple_of(m),
            OrderResult::Ambiguous(c) => c.iter().all(|x| x.is_multiple_of(m)),
        }
    }
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderResult::Infinite => write!(f, "infinite"),
            OrderResult::Finite(m) => write!(f, "{m}"),
            OrderResult::Bounded { lower, upper } => {
                write!(f, "divisible by {lower}, divides {upper}")
            }
            OrderResult::Ambiguous(c) => {
                let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
                write!(f, "one of {{{}}}", parts.join(", "))
            }
        }
    }
}

/// Order of a unimodular square matrix.
///
/// A matrix `M != I` with `(M - I)^2 = 0` satisfies `M^k = I + k(M - I)` and
/// is reported `Infinite` without searching. Otherwise powers are searched up
/// to `search_bound`; if none hits the identity the result is
/// [`Error::OrderExceedsBound`].
pub fn matrix_order(m: &IntMatrix, search_bound: u64) -> Result<OrderResult> {
    let det = m.determinant()?;
    if det.magnitude() != &BigUint::one() {
        return Err(Error::NotUnimodular { det });
    }
    let n = m.rows();
    let id = IntMatrix::identity(n);
    if m.is_identity() {
        return Ok(OrderResult::finite(1u32));
    }
    let nil = m.checked_sub(&id)?;
    if (&nil * &nil).is_zero() {
        return Ok(OrderResult::Infinite);
    }
    let mut power = m.clone();
    for k in 1..=search_bound {
        if power.is_identity() {
            return Ok(OrderResult::finite(k));
        }
        power = &power * m;
    }
    Err(Error::OrderExceedsBound {
        bound: search_bound,
    })
}

/// Finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s` in
/// invariant-factor form: every `d_i >= 2` and `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroupDescriptor {
    free_rank: usize,
    torsion: Vec<BigUint>,
}

impl AbelianGroupDescriptor {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/order`; order 0 gives `Z`, order 1 the trivial group.
    pub fn cyclic(order: impl Into<BigUint>) -> Self {
        Self::from_cyclic_orders(0, [order.into()])
    }

    /// Canonical form of `Z^free_rank ⊕ (⊕ Z/o)` for arbitrary orders `o`.
    pub fn from_cyclic_orders(free_rank: usize, orders: impl IntoIterator<Item = BigUint>) -> Self {
        let orders: Vec<BigInt> = orders
            .into_iter()
            .map(|o| BigInt::from_biguint(Sign::Plus, o))
            .collect();
        let k = orders.len();
        let diag = IntMatrix::diagonal_from(k, k, orders);
        let (coker, _) = coker_ker(&diag);
        Self {
            free_rank: free_rank + coker.free_rank,
            torsion: coker.torsion,
        }
    }

    /// Validates an explicit invariant-factor list.
    pub fn from_invariant_factors(free_rank: usize, torsion: Vec<BigUint>) -> Result<Self> {
        let chain_ok = torsion.iter().all(|d| d >= &BigUint::from(2u32))
            && torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        if !chain_ok {
            return Err(Error::pre(
                "torsion coefficients must be >= 2 and form a divisibility chain",
            ));
        }
        Ok(Self { free_rank, torsion })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<BigUint> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Cokernel `Z^rows / im(M)` and the rank of the integer kernel of `M`.
pub fn coker_ker(m: &IntMatrix) -> (AbelianGroupDescriptor, usize) {
    let smith = snf(m);
    let factors = smith.invariant_factors();
    let rank = factors.len();
    let torsion = factors
        .into_iter()
        .filter(|d| !d.is_one())
        .map(|d| d.magnitude().clone())
        .collect();
    (
        AbelianGroupDescriptor {
            free_rank: m.rows() - rank,
            torsion,
        },
        m.cols() - rank,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew_a3() -> IntMatrix {
        IntMatrix::from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    }

    fn check_decomposition(m: &IntMatrix) -> SmithDecomposition {
        let s = snf(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.determinant().unwrap().magnitude(), &BigUint::one());
        assert_eq!(s.v.determinant().unwrap().magnitude(), &BigUint::one());
        s
    }

    #[test]
    fn snf_examples() {
        let s = check_decomposition(&IntMatrix::from_rows([[0, 1], [-1, 0]]));
        assert_eq!(s.d, IntMatrix::identity(2));

        let s = check_decomposition(&IntMatrix::from_rows([[2]]));
        assert_eq!(s.d, IntMatrix::from_rows([[2]]));

        let s = check_decomposition(&skew_a3());
        assert_eq!(s.d, IntMatrix::diagonal_from(3, 3, [1, 1, 0]));
    }

    #[test]
    fn snf_needs_divisibility_fix() {
        // diag(2, 3) is not in normal form; the chain is (1, 6)
        let s = check_decomposition(&IntMatrix::from_rows([[2, 0], [0, 3]]));
        assert_eq!(s.d.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn snf_degenerate_shapes() {
        let s = check_decomposition(&IntMatrix::zeros(0, 3));
        assert_eq!(s.rank(), 0);
        let s = check_decomposition(&IntMatrix::zeros(2, 3));
        assert_eq!(s.rank(), 0);
        let s = check_decomposition(&IntMatrix::from_rows([[4, 6, 8]]));
        assert_eq!(s.d, IntMatrix::from_rows([[2, 0, 0]]));
    }

    #[test]
    fn pow_examples() {
        let id = IntMatrix::identity(2);
        assert_eq!(matrix_pow(&id, 5).unwrap(), id);
        let m = IntMatrix::from_rows([[-1, 1], [0, 1]]);
        assert_eq!(matrix_pow(&m, 2).unwrap(), id);
        assert_eq!(matrix_pow(&m, 0).unwrap(), id);
        let u = IntMatrix::from_rows([[1, -1], [0, 1]]);
        assert_eq!(
            matrix_pow(&u, 3).unwrap(),
            IntMatrix::from_rows([[1, -3], [0, 1]])
        );
        assert!(matches!(
            matrix_pow(&IntMatrix::zeros(2, 3), 2),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn order_examples() {
        let m = IntMatrix::from_rows([[-1, 1], [0, 1]]);
        assert_eq!(matrix_order(&m, 10).unwrap(), OrderResult::finite(2u32));
        let u = IntMatrix::from_rows([[1, -1], [0, 1]]);
        assert_eq!(matrix_order(&u, 10).unwrap(), OrderResult::Infinite);
        let id = IntMatrix::identity(2);
        assert_eq!(matrix_order(&id, 1).unwrap(), OrderResult::finite(1u32));
    }

    #[test]
    fn order_errors() {
        let m = IntMatrix::from_rows([[2, 0], [0, 1]]);
        assert_eq!(
            matrix_order(&m, 10),
            Err(Error::NotUnimodular { det: BigInt::from(2) })
        );
        // rotation by 60 degrees in the hexagonal lattice has order 6
        let r6 = IntMatrix::from_rows([[1, -1], [1, 0]]);
        assert_eq!(matrix_order(&r6, 6).unwrap(), OrderResult::finite(6u32));
        assert_eq!(
            matrix_order(&r6, 5),
            Err(Error::OrderExceedsBound { bound: 5 })
        );
        // hyperbolic: neither certificate nor search resolves it
        let hyp = IntMatrix::from_rows([[2, 1], [1, 1]]);
        assert!(matches!(
            matrix_order(&hyp, 50),
            Err(Error::OrderExceedsBound { .. })
        ));
    }

    #[test]
    fn coker_examples() {
        let (c, k) = coker_ker(&IntMatrix::from_rows([[0, 1], [-1, 0]]));
        assert!(c.is_trivial());
        assert_eq!(k, 0);
        let (c, k) = coker_ker(&IntMatrix::from_rows([[2]]));
        assert_eq!(c, AbelianGroupDescriptor::cyclic(2u32));
        assert_eq!(k, 0);
        let (c, k) = coker_ker(&skew_a3());
        assert_eq!(c, AbelianGroupDescriptor::free(1));
        assert_eq!(k, 1);
    }

    #[test]
    fn descriptor_canonical_form() {
        let g = AbelianGroupDescriptor::from_cyclic_orders(
            1,
            [2u32, 3, 1, 0].map(BigUint::from),
        );
        assert_eq!(g.free_rank(), 2);
        assert_eq!(g.torsion(), &[BigUint::from(6u32)]);
        assert_eq!(g.to_string(), "Z^2 ⊕ Z/6");
        assert_eq!(
            AbelianGroupDescriptor::from_cyclic_orders(0, [2u32, 2].map(BigUint::from)).to_string(),
            "Z/2 ⊕ Z/2"
        );
        assert!(AbelianGroupDescriptor::from_invariant_factors(0, vec![2u32.into(), 3u32.into()]).is_err());
        assert!(AbelianGroupDescriptor::from_invariant_factors(0, vec![1u32.into()]).is_err());
        assert_eq!(AbelianGroupDescriptor::trivial().order(), Some(BigUint::one()));
        assert_eq!(AbelianGroupDescriptor::free(1).order(), None);
    }

    #[test]
    fn order_result_constructors() {
        assert!(OrderResult::bounded(6u32, 384u32).is_ok());
        assert!(OrderResult::bounded(5u32, 384u32).is_err());
        assert!(OrderResult::ambiguous([4u32]).is_err());
        assert!(OrderResult::ambiguous([4u32, 8]).unwrap().is_valid());
        assert_eq!(OrderResult::ambiguous([8u32, 4]).unwrap().to_string(), "one of {4, 8}");
    }

    #[test]
    fn determinant_values() {
        assert_eq!(
            IntMatrix::from_rows([[-2, 1], [1, -2]]).determinant().unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            IntMatrix::from_rows([[0, 1, 2], [1, 0, 3], [4, -3, 8]]).determinant().unwrap(),
            BigInt::from(-2)
        );
    }
}
