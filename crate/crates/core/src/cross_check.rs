//! Exact checks of the cross-product facts behind the isotopy `τ^2 ≃ id`
//! for `n = 2, 6`.
//!
//! The isotopy uses only that `u × v` is bilinear, antisymmetric, orthogonal
//! to both factors and has `|u × v|^2 = |u|^2 |v|^2 - (u·v)^2`; in particular
//! `u, v, u × v` are independent whenever `u ⊥ v` are nonzero, and a rotation
//! in the plane of `(u × v, v)` fixes `u`. All identities are checked in exact
//! rational arithmetic; only the rotation check uses floats.
//!
//! The product on `R^7` comes from the octonion table with
//! `e1e2 = e3, e1e4 = e5, e1e7 = e6, e2e4 = e6, e2e5 = e7, e3e4 = e7, e3e6 = e5`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Oriented lines `(a, b, c)`, 1-based, meaning `e_a × e_b = e_c`.
pub const R3_TRIPLES: [(usize, usize, usize); 1] = [(1, 2, 3)];
pub const R7_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
];

const PRE_TOL: f64 = 1e-12;
pub const ROTATION_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalVector {
    coords: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if !matches!(coords.len(), 3 | 7) {
            return Err(Error::pre(format!(
                "cross products exist in dimensions 3 and 7, got {}",
                coords.len()
            )));
        }
        Ok(Self { coords })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(vec![BigRational::zero(); dim])
    }

    /// `e_i`, 1-based.
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        let mut v = Self::zero(dim)?;
        if i == 0 || i > dim {
            return Err(Error::pre(format!("basis index {i} out of range")));
        }
        v.coords[i - 1] = BigRational::from_integer(1.into());
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Integer numerators over the least common denominator.
    fn integral(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coords
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let nums = self
            .coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (nums, den)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &Self) -> Result<BigRational> {
        self.check_dim(other)?;
        let (a, ad) = self.integral();
        let (b, bd) = other.integral();
        let num = a.iter().zip(&b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y);
        Ok(BigRational::new(num, ad * bd))
    }

    pub fn norm_sq(&self) -> BigRational {
        let (a, d) = self.integral();
        let num = a.iter().fold(BigInt::zero(), |acc, x| acc + x * x);
        BigRational::new(num, &d * &d)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self {
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A bilinear product on `R^3` or `R^7` given by structure constants
/// `e_i × e_j = ±e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossProduct {
    dim: usize,
    table: Vec<Option<(i8, usize)>>,
}

impl CrossProduct {
    /// Builds the table from oriented lines `(a, b, c)`: `e_a × e_b = e_c`
    /// with its cyclic rotations and their negatives. Later lines overwrite
    /// earlier ones where they overlap.
    pub fn from_triples(dim: usize, triples: &[(usize, usize, usize)]) -> Result<Self> {
        if !matches!(dim, 3 | 7) {
            return Err(Error::pre(format!("no cross product in dimension {dim}")));
        }
        let mut table = vec![None; dim * dim];
        for &(a, b, c) in triples {
            if [a, b, c].iter().any(|&x| x == 0 || x > dim) {
                return Err(Error::pre(format!("triple ({a}, {b}, {c}) out of range")));
            }
            let (a, b, c) = (a - 1, b - 1, c - 1);
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                table[x * dim + y] = Some((1, z));
                table[y * dim + x] = Some((-1, z));
            }
        }
        Ok(Self { dim, table })
    }

    pub fn standard(dim: usize) -> Result<Self> {
        match dim {
            3 => Self::from_triples(3, &R3_TRIPLES),
            7 => Self::from_triples(7, &R7_TRIPLES),
            _ => Err(Error::pre(format!("no cross product in dimension {dim}"))),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `e_i × e_j` as `(sign, k)` with 0-based `k`, or `None` for zero.
    pub fn basis_product(&self, i: usize, j: usize) -> Option<(i8, usize)> {
        self.table[i * self.dim + j]
    }

    pub fn cross(&self, u: &RationalVector, v: &RationalVector) -> Result<RationalVector> {
        u.check_dim(v)?;
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: u.dim(),
            });
        }
        // work on integer numerators over a common denominator
        let (un, ud) = u.integral();
        let (vn, vd) = v.integral();
        let mut out = vec![BigInt::zero(); self.dim];
        for (i, ui) in un.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in vn.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                if let Some((s, k)) = self.basis_product(i, j) {
                    let t = ui * vj;
                    if s > 0 {
                        out[k] += t;
                    } else {
                        out[k] -= t;
                    }
                }
            }
        }
        let den = ud * vd;
        RationalVector::new(
            out.into_iter()
                .map(|x| BigRational::new(x, den.clone()))
                .collect(),
        )
    }

    pub fn cross_f64(&self, u: &[f64], v: &[f64]) -> Result<Vec<f64>> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        let mut out = vec![0.0; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                if let Some((s, k)) = self.basis_product(i, j) {
                    out[k] += f64::from(s) * u[i] * v[j];
                }
            }
        }
        Ok(out)
    }
}

/// Cross product with the standard table of the vectors' dimension.
pub fn cross(u: &RationalVector, v: &RationalVector) -> Result<RationalVector> {
    u.check_dim(v)?;
    CrossProduct::standard(u.dim())?.cross(u, v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Bilinearity,
    Antisymmetry,
    OrthogonalToFirst,
    OrthogonalToSecond,
    Lagrange,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Bilinearity => "(au + bw) × v = a(u × v) + b(w × v), u × (av + bw) = a(u × v) + b(u × w)",
            Identity::Antisymmetry => "u × v = -(v × u)",
            Identity::OrthogonalToFirst => "u · (u × v) = 0",
            Identity::OrthogonalToSecond => "v · (u × v) = 0",
            Identity::Lagrange => "|u × v|^2 = |u|^2 |v|^2 - (u · v)^2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub identity: Identity,
    pub u: RationalVector,
    pub v: RationalVector,
    pub w: RationalVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    pub dim: usize,
    pub samples: usize,
    pub first_failure: Option<Counterexample>,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=6);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Pseudorandom rational vector with small numerators and denominators.
pub fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> RationalVector {
    RationalVector {
        coords: (0..dim).map(|_| random_rational(rng)).collect(),
    }
}

/// First identity violated by `product` on `(u, v, w)` with scalars `a, b`.
pub fn first_violation(
    product: &CrossProduct,
    u: &RationalVector,
    v: &RationalVector,
    w: &RationalVector,
    a: &BigRational,
    b: &BigRational,
) -> Result<Option<Identity>> {
    let x = |p: &RationalVector, q: &RationalVector| product.cross(p, q);
    let uv = x(u, v)?;

    let left = x(&u.scale(a).add(&w.scale(b))?, v)?;
    let right = uv.scale(a).add(&x(w, v)?.scale(b))?;
    let left2 = x(u, &v.scale(a).add(&w.scale(b))?)?;
    let right2 = uv.scale(a).add(&x(u, w)?.scale(b))?;
    if left != right || left2 != right2 {
        return Ok(Some(Identity::Bilinearity));
    }
    if uv != x(v, u)?.neg() {
        return Ok(Some(Identity::Antisymmetry));
    }
    if !u.dot(&uv)?.is_zero() {
        return Ok(Some(Identity::OrthogonalToFirst));
    }
    if !v.dot(&uv)?.is_zero() {
        return Ok(Some(Identity::OrthogonalToSecond));
    }
    let uv_dot = u.dot(v)?;
    if uv.norm_sq() != u.norm_sq() * v.norm_sq() - &uv_dot * &uv_dot {
        return Ok(Some(Identity::Lagrange));
    }
    Ok(None)
}

/// Checks the five identities on `sample_count` pseudorandom triples.
pub fn verify_with(product: &CrossProduct, sample_count: usize, seed: u64) -> Result<CrossReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = product.dim();
    for _ in 0..sample_count {
        let u = random_vector(&mut rng, dim);
        let v = random_vector(&mut rng, dim);
        let w = random_vector(&mut rng, dim);
        let a = random_rational(&mut rng);
        let b = random_rational(&mut rng);
        if let Some(identity) = first_violation(product, &u, &v, &w, &a, &b)? {
            return Ok(CrossReport {
                dim,
                samples: sample_count,
                first_failure: Some(Counterexample { identity, u, v, w }),
            });
        }
    }
    Ok(CrossReport {
        dim,
        samples: sample_count,
        first_failure: None,
    })
}

pub fn verify_cross_identities(dim: usize, sample_count: usize, seed: u64) -> Result<CrossReport> {
    if sample_count == 0 {
        return Err(Error::pre("need at least one sample"));
    }
    verify_with(&CrossProduct::standard(dim)?, sample_count, seed)
}

/// Gram determinant of `(u, v, u × v)`; nonzero iff they are independent.
pub fn independence_witness(
    product: &CrossProduct,
    u: &RationalVector,
    v: &RationalVector,
) -> Result<BigRational> {
    let w = product.cross(u, v)?;
    let vs = [u, v, &w];
    let mut g: [[BigRational; 3]; 3] = Default::default();
    for (i, row) in g.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = vs[i].dot(vs[j])?;
        }
    }
    let det = &g[0][0] * (&g[1][1] * &g[2][2] - &g[1][2] * &g[2][1])
        - &g[0][1] * (&g[1][0] * &g[2][2] - &g[1][2] * &g[2][0])
        + &g[0][2] * (&g[1][0] * &g[2][1] - &g[1][1] * &g[2][0]);
    Ok(det)
}

/// A sample `(u, v, w)` on which `u × (v × w) = v(u·w) - w(u·v)` fails.
pub fn find_triple_product_violation(
    product: &CrossProduct,
    sample_count: usize,
    seed: u64,
) -> Result<Option<[RationalVector; 3]>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = product.dim();
    for _ in 0..sample_count {
        let u = random_vector(&mut rng, dim);
        let v = random_vector(&mut rng, dim);
        let w = random_vector(&mut rng, dim);
        let lhs = product.cross(&u, &product.cross(&v, &w)?)?;
        let rhs = v.scale(&u.dot(&w)?).sub(&w.scale(&u.dot(&v)?))?;
        if lhs != rhs {
            return Ok(Some([u, v, w]));
        }
    }
    Ok(None)
}

fn dot_f64(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rotates `x` by `theta` in the plane of `(a, b)`, positively oriented from
/// `a` towards `b`, fixing the orthogonal complement.
pub fn plane_rotation(a: &[f64], b: &[f64], theta: f64, x: &[f64]) -> Result<Vec<f64>> {
    if a.len() != b.len() || a.len() != x.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: x.len(),
        });
    }
    let na = dot_f64(a, a).sqrt();
    if na < PRE_TOL {
        return Err(Error::pre("rotation plane is degenerate"));
    }
    let p: Vec<f64> = a.iter().map(|t| t / na).collect();
    let pb = dot_f64(b, &p);
    let q: Vec<f64> = b.iter().zip(&p).map(|(t, s)| t - pb * s).collect();
    let nq = dot_f64(&q, &q).sqrt();
    if nq < PRE_TOL {
        return Err(Error::pre("rotation plane is degenerate"));
    }
    let q: Vec<f64> = q.iter().map(|t| t / nq).collect();
    let (xp, xq) = (dot_f64(x, &p), dot_f64(x, &q));
    let (c, s) = (theta.cos(), theta.sin());
    Ok((0..x.len())
        .map(|i| x[i] + (c - 1.0) * (xp * p[i] + xq * q[i]) + s * (xp * q[i] - xq * p[i]))
        .collect())
}

/// Whether the rotation by `theta` in the plane of `(u × v, v)` fixes `u`,
/// for unit `u` orthogonal to nonzero `v`.
pub fn rotation_fixes_orthogonal(u: &[f64], v: &[f64], theta: f64) -> Result<bool> {
    rotation_fixes_orthogonal_with(&CrossProduct::standard(u.len())?, u, v, theta)
}

pub fn rotation_fixes_orthogonal_with(
    product: &CrossProduct,
    u: &[f64],
    v: &[f64],
    theta: f64,
) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    if (dot_f64(u, u).sqrt() - 1.0).abs() > PRE_TOL {
        return Err(Error::pre("u must be a unit vector"));
    }
    if dot_f64(u, v).abs() > PRE_TOL {
        return Err(Error::pre("u and v must be orthogonal"));
    }
    if dot_f64(v, v).sqrt() < PRE_TOL {
        return Err(Error::pre("v must be nonzero"));
    }
    let uxv = product.cross_f64(u, v)?;
    let image = plane_rotation(&uxv, v, theta, u)?;
    Ok(image.iter().zip(u).all(|(a, b)| (a - b).abs() <= ROTATION_TOL))
}

/// A unit `u`, an orthogonal `v` and an angle, drawn from `rng`.
pub fn random_rotation_input(rng: &mut ChaCha8Rng, dim: usize) -> (Vec<f64>, Vec<f64>, f64) {
    let mut draw = || -> Vec<f64> { (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect() };
    let mut u = draw();
    while dot_f64(&u, &u) < 1e-2 {
        u = draw();
    }
    let nu = dot_f64(&u, &u).sqrt();
    u.iter_mut().for_each(|t| *t /= nu);
    let mut v = draw();
    loop {
        let uv = dot_f64(&u, &v);
        v.iter_mut().zip(&u).for_each(|(t, s)| *t -= uv * s);
        if dot_f64(&v, &v) > 1e-2 {
            break;
        }
        v = draw();
    }
    let scale = rng.gen_range(0.1..10.0);
    v.iter_mut().for_each(|t| *t *= scale);
    let theta = rng.gen_range(0.0..std::f64::consts::TAU);
    (u, v, theta)
}

/// Number of random valid inputs on which the rotation fails to fix `u`.
pub fn count_rotation_failures(dim: usize, sample_count: usize, seed: u64) -> Result<usize> {
    let product = CrossProduct::standard(dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..sample_count {
        let (u, v, theta) = random_rotation_input(&mut rng, dim);
        if !rotation_fixes_orthogonal_with(&product, &u, &v, theta)? {
            failures += 1;
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(dim: usize, i: usize) -> RationalVector {
        RationalVector::basis(dim, i).unwrap()
    }

    #[test]
    fn basis_products() {
        assert_eq!(cross(&e(3, 1), &e(3, 2)).unwrap(), e(3, 3));
        assert_eq!(cross(&e(7, 1), &e(7, 4)).unwrap(), e(7, 5));
        assert_eq!(cross(&e(7, 2), &e(7, 4)).unwrap(), e(7, 6));
        assert_eq!(cross(&e(7, 3), &e(7, 4)).unwrap(), e(7, 7));
        assert_eq!(cross(&e(7, 4), &e(7, 1)).unwrap(), e(7, 5).neg());
        let u = RationalVector::from_integers(&[1, -2, 3, 0, 5, 1, 2]).unwrap();
        assert!(cross(&u, &u).unwrap().is_zero());
    }

    #[test]
    fn every_pair_of_distinct_units_multiplies_to_a_unit() {
        let p = CrossProduct::standard(7).unwrap();
        for i in 0..7 {
            assert!(p.basis_product(i, i).is_none());
            for j in (0..7).filter(|&j| j != i) {
                let (_, k) = p.basis_product(i, j).unwrap();
                assert!(k != i && k != j);
            }
        }
    }

    #[test]
    fn dimension_errors() {
        assert!(RationalVector::from_integers(&[1, 2]).is_err());
        assert!(matches!(
            cross(&e(3, 1), &e(7, 1)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(CrossProduct::standard(5).is_err());
    }

    #[test]
    fn identities_hold() {
        assert!(verify_cross_identities(3, 200, 1).unwrap().passed());
        assert!(verify_cross_identities(7, 200, 1).unwrap().passed());
        assert!(verify_cross_identities(7, 0, 1).is_err());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut bad = R7_TRIPLES;
        bad[6] = (3, 5, 6);
        let p = CrossProduct::from_triples(7, &bad).unwrap();
        let report = verify_with(&p, 200, 1).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn rotation_examples() {
        assert!(rotation_fixes_orthogonal(&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], std::f64::consts::FRAC_PI_3).unwrap());
        let mut u = [0.0; 7];
        let mut v = [0.0; 7];
        u[0] = 1.0;
        v[3] = 1.0;
        assert!(rotation_fixes_orthogonal(&u, &v, std::f64::consts::TAU * 0.37).unwrap());
        assert!(rotation_fixes_orthogonal(&[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0], 1.0).is_err());
        assert!(rotation_fixes_orthogonal(&[2.0, 0.0, 0.0], &[0.0, 1.0, 0.0], 1.0).is_err());
        assert!(rotation_fixes_orthogonal(&[1.0, 0.0, 0.0], &[0.0, 0.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn rotation_in_the_uv_plane_moves_u() {
        let u = [1.0, 0.0, 0.0];
        let v = [0.0, 2.0, 0.0];
        let image = plane_rotation(&u, &v, std::f64::consts::FRAC_PI_2, &u).unwrap();
        assert!((image[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn independence() {
        let p = CrossProduct::standard(7).unwrap();
        let det = independence_witness(&p, &e(7, 1), &e(7, 4)).unwrap();
        assert!(!det.is_zero());
        let det = independence_witness(&p, &e(7, 1), &e(7, 1)).unwrap();
        assert!(det.is_zero());
    }
}
