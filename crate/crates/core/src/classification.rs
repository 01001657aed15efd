//! Orders of the Dehn twist in the compactly supported symplectic, smooth,
//! topological and homotopical mapping class groups of `T*S^n`, together
//! with the imported facts the classification rests on: which Kervaire
//! spheres are standard, the targets of the Kauffman–Krylov extensions, and
//! the Milnor–Spanier restriction on fibre homotopy trivial sphere bundles.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lattice_core::{AbelianGroupDescriptor, OrderResult};

pub const CITE_HHR: &str =
    "Hill–Hopkins–Ravenel, nonexistence of elements of Kervaire invariant one";
pub const CITE_KERVAIRE_LOW: &str =
    "Kervaire sphere standard in dimensions 5, 13, 29, 61 (Kervaire invariant one elements in stems 6, 14, 30, 62)";
pub const CITE_SEIDEL_GRADED: &str = "Seidel, graded Lagrangian submanifolds: twist has infinite order";
pub const CITE_KRONHEIMER: &str =
    "Seidel, Lagrangian two-spheres can be symplectically knotted (attributed to Kronheimer); cross-product isotopy extends to n = 6";
pub const CITE_KK: &str = "Kauffman–Krylov, kernel of the monodromy of Brieskorn singularities";
pub const CITE_ARNOLD_ACTION: &str =
    "Picard–Lefschetz action on H_n(D*S^n, B; Z) (Arnold, Singularities of differentiable maps)";
pub const CITE_MILNOR_SPANIER: &str =
    "Milnor–Spanier, spherical fibrations over S^m fibre homotopy trivial only for m = 1, 3, 7";
pub const CITE_OPEN_BOOK: &str =
    "open book X_{τ^k} ≅ ∂(A_{k-1} plumbing of D*S^{n+1}); τ^4 represents the Kervaire sphere in Θ_{2n+1}";
pub const CITE_ALEXANDER: &str = "Alexander trick: τ^4 is supported in a disc, hence topologically trivial";
pub const CITE_THETA13: &str = "Θ_13 ≅ Z/3 (Kervaire–Milnor)";

/// Mapping class groups, from most to least structured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Symp,
    AlmostComplex,
    Diff,
    Homeo,
    HAut,
}

impl Category {
    /// Position along `Symp → Diff → Homeo → HAut`; `None` for `AlmostComplex`.
    pub fn forgetful_rank(self) -> Option<u8> {
        match self {
            Category::Symp => Some(0),
            Category::Diff => Some(1),
            Category::Homeo => Some(2),
            Category::HAut => Some(3),
            Category::AlmostComplex => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Category::Symp => "symp",
            Category::AlmostComplex => "almost-complex",
            Category::Diff => "diff",
            Category::Homeo => "homeo",
            Category::HAut => "haut",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "symp" => Ok(Category::Symp),
            "almost-complex" | "ac" => Ok(Category::AlmostComplex),
            "diff" => Ok(Category::Diff),
            "homeo" => Ok(Category::Homeo),
            "haut" => Ok(Category::HAut),
            other => Err(Error::pre(format!("unknown category '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KervaireStatus {
    Trivial,
    Nontrivial,
    Unknown,
}

impl fmt::Display for KervaireStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KervaireStatus::Trivial => "trivial",
            KervaireStatus::Nontrivial => "nontrivial",
            KervaireStatus::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KervaireEntry {
    pub status: KervaireStatus,
    pub citation: &'static str,
}

/// Which Kervaire spheres (dimensions `≡ 1 mod 4`, at least 5) are standard.
///
/// Dimensions not listed are nontrivial, order 2 in `Θ_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KervaireTable {
    trivial: Vec<u64>,
    unknown: Vec<u64>,
}

impl Default for KervaireTable {
    fn default() -> Self {
        Self {
            trivial: vec![5, 13, 29, 61],
            unknown: vec![125],
        }
    }
}

impl KervaireTable {
    pub fn new(trivial: Vec<u64>, unknown: Vec<u64>) -> Self {
        Self { trivial, unknown }
    }

    pub fn lookup(&self, dim: u64) -> Result<KervaireEntry> {
        if dim < 5 || dim % 4 != 1 {
            return Err(Error::pre(format!(
                "Kervaire spheres are tabulated in dimensions 1 mod 4 from 5, got {dim}"
            )));
        }
        let entry = if self.trivial.contains(&dim) {
            KervaireEntry {
                status: KervaireStatus::Trivial,
                citation: CITE_KERVAIRE_LOW,
            }
        } else if self.unknown.contains(&dim) {
            KervaireEntry {
                status: KervaireStatus::Unknown,
                citation: CITE_HHR,
            }
        } else {
            KervaireEntry {
                status: KervaireStatus::Nontrivial,
                citation: CITE_HHR,
            }
        };
        Ok(entry)
    }
}

pub fn kervaire_status(dim: u64) -> Result<KervaireStatus> {
    Ok(KervaireTable::default().lookup(dim)?.status)
}

/// An order together with the facts it was read off from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classified {
    pub order: OrderResult,
    pub provenance: Vec<String>,
}

pub fn twist_order(cat: Category, n: u64) -> Result<OrderResult> {
    Ok(classify_twist(&KervaireTable::default(), cat, n)?.order)
}

/// Order of `[τ]` in the mapping class group `cat`, with provenance.
pub fn classify_twist(table: &KervaireTable, cat: Category, n: u64) -> Result<Classified> {
    if n < 2 {
        return Err(Error::pre(format!("sphere dimension must be at least 2, got {n}")));
    }
    if cat == Category::AlmostComplex {
        return Err(Error::pre(
            "almost-complex orders are only bounded; use the almost-complex bounds",
        ));
    }
    let done = |order: OrderResult, cites: &[&str]| {
        Ok(Classified {
            order,
            provenance: cites.iter().map(|s| s.to_string()).collect(),
        })
    };
    if n % 2 == 1 {
        return done(OrderResult::Infinite, &[CITE_ARNOLD_ACTION]);
    }
    let low = n == 2 || n == 6;
    match cat {
        Category::Symp => done(OrderResult::Infinite, &[CITE_SEIDEL_GRADED]),
        // the n = 2, 6 clause takes precedence over the Kervaire clause
        Category::Diff if low => done(OrderResult::finite(2u32), &[CITE_KRONHEIMER]),
        Category::Diff => {
            let entry = table.lookup(2 * n + 1)?;
            let order = match entry.status {
                KervaireStatus::Trivial => OrderResult::finite(4u32),
                KervaireStatus::Nontrivial => OrderResult::finite(8u32),
                KervaireStatus::Unknown => OrderResult::ambiguous([4u32, 8])?,
            };
            done(order, &[CITE_KK, CITE_OPEN_BOOK, CITE_MILNOR_SPANIER, entry.citation])
        }
        Category::Homeo | Category::HAut if low => {
            done(OrderResult::finite(2u32), &[CITE_KRONHEIMER])
        }
        Category::Homeo | Category::HAut => done(
            OrderResult::finite(4u32),
            &[CITE_ALEXANDER, CITE_OPEN_BOOK, CITE_MILNOR_SPANIER],
        ),
        Category::AlmostComplex => unreachable!(),
    }
}

/// Target of `χ_r` in the extension describing the variation kernel of
/// `π_0 Diff_c(T*S^n)`, `n` even.
pub fn chi_r_target(n: u64) -> Result<AbelianGroupDescriptor> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::pre(format!(
            "χ_r target is tabulated for even n >= 4, got {n}"
        )));
    }
    Ok(if n == 6 {
        AbelianGroupDescriptor::trivial()
    } else if n % 8 == 0 {
        AbelianGroupDescriptor::from_cyclic_orders(0, [2u32, 2].map(BigUint::from))
    } else {
        AbelianGroupDescriptor::cyclic(2u32)
    })
}

/// Target of the variation homomorphism: the units `{±1}` of `Z`.
pub fn var_target() -> AbelianGroupDescriptor {
    AbelianGroupDescriptor::cyclic(2u32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta13Fact {
    pub group: AbelianGroupDescriptor,
    /// `τ^2` lies in `Θ_13` and squares to the trivial `τ^4`, so it is trivial.
    pub tau_squared_trivial: bool,
}

/// Elements `x` of `Z/m` with `2x = 0`.
pub fn two_torsion(m: u64) -> Vec<u64> {
    (0..m).filter(|x| (2 * x) % m == 0).collect()
}

pub fn theta13_fact() -> Theta13Fact {
    const THETA13_ORDER: u64 = 3;
    Theta13Fact {
        group: AbelianGroupDescriptor::cyclic(THETA13_ORDER),
        tau_squared_trivial: two_torsion(THETA13_ORDER) == [0],
    }
}

/// Whether a spherical fibration over `S^base_dim` with fibre of the same
/// dimension could be fibre homotopy trivial.
pub fn fibre_homotopy_trivial_possible(base_dim: u64) -> bool {
    matches!(base_dim, 1 | 3 | 7)
}
