//! Action of the Dehn twist on `H_n(D*S^n, B; Z)`.
//!
//! Basis `{[S^n], [D]}`: the zero section and the cotangent fibre over the
//! basepoint, with boundary `[B]` the fibre sphere. Every compactly supported
//! self-equivalence fixes `[B]`, so the action has the shape
//! `[[epsilon, A], [0, 1]]`, where `epsilon = ±1` is the variation sign.
//!
//! Orientation conventions are fixed: `<[D], [S^n]> = 1` and, for even `n`,
//! `<[S^n], [S^n]> = 2(-1)^(n/2)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lattice_core::{matrix_order, IntMatrix, OrderResult};

/// Default half-width of the brute-force search for the off-diagonal entry.
pub const DEFAULT_A_RANGE: u64 = 16;

/// Search bound handed to [`matrix_order`]; twist actions have order 1, 2 or infinity.
const ORDER_SEARCH_BOUND: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// `(-1)^e`
    pub fn pow_neg_one(e: u64) -> Self {
        if e % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelativeTwistAction {
    n: u64,
    epsilon: Sign,
    a: BigInt,
}

impl RelativeTwistAction {
    pub fn new(n: u64, epsilon: Sign, a: impl Into<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::pre("sphere dimension must be at least 1"));
        }
        Ok(Self {
            n,
            epsilon,
            a: a.into(),
        })
    }

    pub fn identity(n: u64) -> Result<Self> {
        Self::new(n, Sign::Plus, 0)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// `[[epsilon, A], [0, 1]]`
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows([
            [BigInt::from(self.epsilon.value()), self.a.clone()],
            [BigInt::from(0), BigInt::one()],
        ])
    }

    pub fn is_identity(&self) -> bool {
        self.epsilon == Sign::Plus && self.a == BigInt::from(0)
    }
}

impl fmt::Display for RelativeTwistAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix())
    }
}

/// Twist action: `epsilon = (-1)^(n+1)`, `A = (-1)^((n+1)(n+2)/2)`.
pub fn twist_matrix(n: u64) -> Result<RelativeTwistAction> {
    if n == 0 {
        return Err(Error::pre("sphere dimension must be at least 1"));
    }
    let epsilon = Sign::pow_neg_one(n + 1);
    // (n+1)(n+2)/2 mod 2 only depends on n mod 4
    let a = Sign::pow_neg_one(((n % 4 + 1) * (n % 4 + 2)) / 2);
    RelativeTwistAction::new(n, epsilon, a.value())
}

/// Order of the twist's action on relative homology.
pub fn homological_order(n: u64) -> Result<OrderResult> {
    let action = twist_matrix(n)?;
    matrix_order(&action.matrix(), ORDER_SEARCH_BOUND)
}

/// `<[S^n], [S^n]> = 2(-1)^(n/2)` for even `n`.
pub fn self_intersection(n: u64) -> Result<i64> {
    require_even(n)?;
    Ok(2 * Sign::pow_neg_one(n / 2).value())
}

/// Whether `[[epsilon, A], [0, 1]]` preserves `<[D], [S^n]> = 1`, i.e.
/// `(2(-1)^(n/2) A + 1) epsilon = 1`.
pub fn pairing_constraint(epsilon: Sign, a: &BigInt, n: u64) -> Result<bool> {
    let s = self_intersection(n)?;
    let image_pairing: BigInt = (a * s + 1) * epsilon.value();
    Ok(image_pairing.is_one())
}

/// All actions `(epsilon, A)` with `|A| <= a_range` that preserve the
/// intersection pairing, sorted with the identity first.
pub fn enumerate_homology_actions(n: u64, a_range: u64) -> Result<Vec<RelativeTwistAction>> {
    require_even(n)?;
    if a_range < 1 {
        return Err(Error::pre("A range must be at least 1"));
    }
    let bound = i128::from(a_range);
    let mut found = Vec::new();
    for epsilon in [Sign::Plus, Sign::Minus] {
        for a in -bound..=bound {
            let a = BigInt::from(a);
            if pairing_constraint(epsilon, &a, n)? {
                found.push(RelativeTwistAction::new(n, epsilon, a)?);
            }
        }
    }
    found.sort_by_key(|act| !act.is_identity());
    Ok(found)
}

fn require_even(n: u64) -> Result<()> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::pre(format!(
            "sphere dimension must be a positive even integer, got {n}"
        )));
    }
    Ok(())
}
