//! Bounds on the order of the Dehn twist in the almost-complex mapping class
//! group of `T*S^n`, `n` even.
//!
//! That group is `π_1` of the homotopy orbit space of compactly supported
//! almost-complex structures under `Diff_c(T*S^n)`. The standard complex
//! structure and the space of structures themselves have no representation
//! here: everything below is arithmetic on the group orders that feed the
//! bounds.
//!
//! Upper bound: `π_1(AC_c)` sits in an exact sequence between
//! `π_{2n+1}(O(2n)/U(n))` (order `2·n!` or `n!`) and `π_{n+1}(O/U)` (Bott
//! periodicity), so its order divides `2·n!`. Since `τ^8` is smoothly trivial,
//! the twist's order divides `2^3 · 2·n! = 16·n!`.
//!
//! Lower bound: for `k ≡ ±1 mod 8` the open book `X_{τ^k}` is the standard
//! sphere carrying the almost-contact class `(k-1)/2 ∈ Z/d(n)`. If the order
//! is `m`, then `τ ~ τ^{1+jm}` for every `j`; choosing `jm ≡ 0 mod 8` forces
//! `jm/2 ≡ 0 mod d(n)`, which makes `m` a multiple of `n!/4`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice_core::{AbelianGroupDescriptor, OrderResult};

pub const CITE_BOTT: &str = "Bott, the stable homotopy of the classical groups";
pub const CITE_O_MOD_U: &str = "O/U ≃ Ω^2(Z × BO), so π_i(O/U) = π_{i+1}(O)";
pub const CITE_HARRIS: &str = "Harris, some calculations of homotopy groups of symmetric spaces";
pub const CITE_USTILOVSKY: &str =
    "Ustilovsky, infinitely many contact structures on S^{4m+1} (after Morita)";

/// Largest sphere dimension accepted by [`ac_consistent_orders`].
pub const MAX_CONSISTENT_N: u64 = 8;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `π_i(O)`: `Z/2, Z/2, 0, Z, 0, 0, 0, Z` for `i mod 8 = 0, ..., 7`.
pub fn pi_o(i: u64) -> AbelianGroupDescriptor {
    match i % 8 {
        0 | 1 => AbelianGroupDescriptor::cyclic(2u32),
        3 | 7 => AbelianGroupDescriptor::free(1),
        _ => AbelianGroupDescriptor::trivial(),
    }
}

/// `π_i(O/U) = π_{i+1}(O)`.
pub fn pi_o_mod_u(i: u64) -> Result<AbelianGroupDescriptor> {
    if i == 0 {
        return Err(Error::pre("π_i(O/U) is tabulated for i >= 1"));
    }
    Ok(pi_o(i + 1))
}

fn require_even(n: u64) -> Result<()> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::pre(format!(
            "sphere dimension must be even and at least 2, got {n}"
        )));
    }
    Ok(())
}

/// Order of `π_{2n+1}(O(2n)/U(n))`: `2·n!` if `4 | n`, else `n!`.
pub fn harris_order(n: u64) -> Result<BigUint> {
    require_even(n)?;
    let f = factorial(n);
    Ok(if n % 4 == 0 { f * 2u32 } else { f })
}

/// The bound `2·n!` on the order of `π_1(AC_c(T*S^n))`.
pub fn ac_pi1_bound(n: u64) -> Result<BigUint> {
    require_even(n)?;
    Ok(factorial(n) * 2u32)
}

/// `|π_{2n+1}(O(2n)/U(n))| · |π_{n+1}(O/U)|`, the bound read straight off the
/// exact sequence. It always divides [`ac_pi1_bound`].
pub fn ac_pi1_sequence_bound(n: u64) -> Result<BigUint> {
    let harris = harris_order(n)?;
    let bott = pi_o_mod_u(n + 1)?
        .order()
        .ok_or_else(|| Error::pre("π_{n+1}(O/U) is infinite for odd n"))?;
    Ok(harris * bott)
}

/// `d(n)` with `π_{2n+1}(SO(2n+1)/U(n)) ≅ Z/d(n)`: `n!` if `4 | n`, else `n!/2`.
pub fn contact_modulus(n: u64) -> Result<BigUint> {
    require_even(n)?;
    let f = factorial(n);
    Ok(if n % 4 == 0 { f } else { f / 2u32 })
}

/// An almost-contact structure on `S^{2n+1}`, as a residue mod `d(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContactClass {
    residue: BigUint,
    modulus: BigUint,
}

impl ContactClass {
    pub fn new(residue: BigUint, modulus: BigUint) -> Result<Self> {
        if modulus.is_zero() || residue >= modulus {
            return Err(Error::pre("contact class residue must lie in [0, d)"));
        }
        Ok(Self { residue, modulus })
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }
}

impl fmt::Display for ContactClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// Class of the almost-contact structure on `X_{τ^k} ≅ S^{2n+1}`, defined
/// only for `k ≡ ±1 mod 8`: `(k-1)/2 mod d(n)`.
pub fn ustilovsky_class(k: impl Into<BigUint>, n: u64) -> Result<ContactClass> {
    let k = k.into();
    let d = contact_modulus(n)?;
    let r = (&k % 8u32).to_u64_digits().first().copied().unwrap_or(0);
    if k.is_zero() || !(r == 1 || r == 7) {
        return Err(Error::pre(format!(
            "almost-contact class is only known for positive k ≡ ±1 mod 8, got {k}"
        )));
    }
    let residue = ((k - 1u32) / 2u32) % &d;
    ContactClass::new(residue, d)
}

/// `Bounded(n!/4, 16·n!)`; for `n = 2` the lower bound is the smooth order 2.
pub fn ac_order_bounds(n: u64) -> Result<OrderResult> {
    require_even(n)?;
    let upper = factorial(n) * 16u32;
    let lower = if n == 2 {
        BigUint::from(2u32)
    } else {
        factorial(n) / 4u32
    };
    OrderResult::bounded(lower, upper)
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&p| (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0))
        .collect()
}

/// Exponent of the prime `p` in `n!`.
pub fn legendre_exponent(n: u64, p: u64) -> u32 {
    let mut e = 0;
    let mut q = p;
    while q <= n {
        e += (n / q) as u32;
        q = match q.checked_mul(p) {
            Some(x) => x,
            None => break,
        };
    }
    e
}

/// Prime factorization of `2^extra_twos · n!` as `(p, exponent)` pairs.
pub fn factorial_factorization(n: u64, extra_twos: u32) -> Vec<(u64, u32)> {
    let mut f: Vec<(u64, u32)> = primes_up_to(n)
        .into_iter()
        .map(|p| (p, legendre_exponent(n, p)))
        .collect();
    match f.first_mut() {
        Some((2, e)) => *e += extra_twos,
        _ if extra_twos > 0 => f.insert(0, (2, extra_twos)),
        _ => {}
    }
    f
}

/// All positive divisors of a factored integer, sorted.
pub fn divisors(factorization: &[(u64, u32)]) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for &(p, e) in factorization {
        let p = BigUint::from(p);
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut x = d.clone();
            next.push(x.clone());
            for _ in 0..e {
                x *= &p;
                next.push(x.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Even divisors `m` of `16·n!` compatible with the almost-contact classes
/// of the open books: with `j = 8 / gcd(m, 8)`, `jm/2 ≡ 0 mod d(n)`.
pub fn ac_consistent_orders(n: u64) -> Result<Vec<BigUint>> {
    if !(4..=MAX_CONSISTENT_N).contains(&n) || n % 2 != 0 {
        return Err(Error::pre(format!(
            "consistent orders are enumerated for even 4 <= n <= {MAX_CONSISTENT_N}, got {n}"
        )));
    }
    let d = contact_modulus(n)?;
    let eight = BigUint::from(8u32);
    let survivors = divisors(&factorial_factorization(n, 4))
        .into_iter()
        .filter(|m| m.is_even())
        .filter(|m| {
            let j = &eight / m.gcd(&eight);
            ((j * m) / 2u32).is_multiple_of(&d)
        })
        .collect();
    Ok(survivors)
}
