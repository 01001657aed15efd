//! A_l chain plumbings of disc cotangent bundles of spheres.
//!
//! The plumbing of `l` copies of `D*S^m` along a path is the Milnor fibre of
//! the A_l singularity. Its middle homology is `Z^l`, spanned by the
//! vanishing cycles `e_1, ..., e_l`, and the intersection form is symmetric
//! for even `m` and skew for odd `m`. For the boundaries
//! `X_{τ^k} = ∂(A_{k-1} plumbing of D*S^{n+1})` with `n` even the form is
//! skew, and the boundary is a homotopy sphere exactly when the form is
//! unimodular; it is then told apart by the Arf invariant of the mod-2
//! quadratic refinement that takes the value 1 on every vanishing cycle.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::classification::{KervaireStatus, KervaireTable};
use crate::error::{Error, Result};
use crate::lattice_core::{coker_ker, AbelianGroupDescriptor, IntMatrix};
use crate::twist_action::Sign;

/// Largest rank accepted by the exhaustive Arf scan (2^24 evaluations).
pub const MAX_ARF_RANK: usize = 24;

/// Vanishing cycles carry `q(e_i) = 1`.
pub const VANISHING_CYCLE_Q: bool = true;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    Skew,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearLattice {
    gram: IntMatrix,
    symmetry: Symmetry,
}

impl BilinearLattice {
    pub fn new(gram: IntMatrix, symmetry: Symmetry) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        let ok = match symmetry {
            Symmetry::Symmetric => gram.transpose() == gram,
            Symmetry::Skew => {
                gram.transpose() == gram.negated() && gram.diagonal().iter().all(Zero::is_zero)
            }
        };
        if !ok {
            return Err(Error::pre(format!(
                "Gram matrix is not {}",
                match symmetry {
                    Symmetry::Symmetric => "symmetric",
                    Symmetry::Skew => "skew with zero diagonal",
                }
            )));
        }
        Ok(Self { gram, symmetry })
    }

    /// The rank-0 lattice of the empty plumbing.
    pub fn empty(symmetry: Symmetry) -> Self {
        Self {
            gram: IntMatrix::zeros(0, 0),
            symmetry,
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.gram.determinant()?.magnitude() == &1u32.into())
    }
}

/// Intersection lattice of the A_l plumbing of `D*S^m`.
///
/// `<e_i, e_{i+1}> = 1`; self-intersections are `2(-1)^(m/2)` for even `m`
/// and the form is skew for odd `m`.
pub fn a_chain_lattice(l: usize, m: u64) -> Result<BilinearLattice> {
    a_chain_lattice_with_sign(l, m, Sign::Plus)
}

/// As [`a_chain_lattice`], with `<e_i, e_{i+1}> = sign` in the skew case.
pub fn a_chain_lattice_with_sign(l: usize, m: u64, sign: Sign) -> Result<BilinearLattice> {
    if l == 0 {
        return Err(Error::pre(
            "A_l chain needs l >= 1; use BilinearLattice::empty for the empty plumbing",
        ));
    }
    if m < 2 {
        return Err(Error::pre("plumbed sphere dimension must be at least 2"));
    }
    let mut gram = IntMatrix::zeros(l, l);
    let symmetry = if m % 2 == 0 {
        let diag = 2 * Sign::pow_neg_one(m / 2).value();
        for i in 0..l {
            gram.set(i, i, diag);
        }
        for i in 0..l - 1 {
            gram.set(i, i + 1, 1);
            gram.set(i + 1, i, 1);
        }
        Symmetry::Symmetric
    } else {
        let s = sign.value();
        for i in 0..l - 1 {
            gram.set(i, i + 1, s);
            gram.set(i + 1, i, -s);
        }
        Symmetry::Skew
    };
    BilinearLattice::new(gram, symmetry)
}

/// Mod-2 quadratic refinement `q` of a skew lattice, fixed by its values on
/// the basis and `q(x + y) = q(x) + q(y) + <x, y>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRefinement {
    lattice: BilinearLattice,
    q_basis: Vec<bool>,
}

impl QuadraticRefinement {
    pub fn new(lattice: BilinearLattice, q_basis: Vec<bool>) -> Result<Self> {
        if lattice.symmetry() != Symmetry::Skew {
            return Err(Error::pre("quadratic refinement needs a skew lattice"));
        }
        if q_basis.len() != lattice.rank() {
            return Err(Error::DimensionMismatch {
                left: lattice.rank(),
                right: q_basis.len(),
            });
        }
        Ok(Self { lattice, q_basis })
    }

    /// The refinement with `q(e_i) = 1` on every vanishing cycle.
    pub fn vanishing_cycles(lattice: BilinearLattice) -> Result<Self> {
        let r = lattice.rank();
        Self::new(lattice, vec![VANISHING_CYCLE_Q; r])
    }

    pub fn lattice(&self) -> &BilinearLattice {
        &self.lattice
    }

    /// Row `i` of the Gram matrix mod 2, as a bitmask over the basis.
    fn pairing_masks(&self) -> Vec<u64> {
        let g = self.lattice.gram();
        (0..self.lattice.rank())
            .map(|i| {
                (0..self.lattice.rank())
                    .filter(|&j| g.get(i, j).is_odd())
                    .fold(0u64, |m, j| m | (1 << j))
            })
            .collect()
    }

    /// `q` at the vector whose mod-2 coordinates are the bits of `x`.
    pub fn value(&self, x: u64) -> bool {
        let masks = self.pairing_masks();
        let mut q = false;
        for i in 0..self.q_basis.len() {
            if x >> i & 1 == 1 {
                q ^= self.q_basis[i];
                // <e_i, e_j> for j < i, each unordered pair counted once
                let lower = x & ((1u64 << i) - 1);
                q ^= (masks[i] & lower).count_ones() % 2 == 1;
            }
        }
        q
    }

    /// Number of vectors in `(Z/2)^rank` with `q = 0` and with `q = 1`.
    pub fn value_counts(&self) -> Result<(u64, u64)> {
        let rank = self.lattice.rank();
        if rank > MAX_ARF_RANK {
            return Err(Error::ArfTooLarge {
                rank,
                max: MAX_ARF_RANK,
            });
        }
        let masks = self.pairing_masks();
        // Gray-code walk: flipping e_i changes q by q(e_i) + <x, e_i>
        let mut x = 0u64;
        let mut q = false;
        let mut zeros = 1u64;
        for step in 1u64..(1 << rank) {
            let i = step.trailing_zeros() as usize;
            q ^= self.q_basis[i] ^ ((x & masks[i]).count_ones() % 2 == 1);
            x ^= 1 << i;
            if !q {
                zeros += 1;
            }
        }
        Ok((zeros, (1u64 << rank) - zeros))
    }

    /// Arf invariant by majority vote: 0 iff more vectors have `q = 0`.
    pub fn arf(&self) -> Result<u8> {
        let rank = self.lattice.rank();
        if rank > MAX_ARF_RANK {
            return Err(Error::ArfTooLarge {
                rank,
                max: MAX_ARF_RANK,
            });
        }
        if self.lattice.gram().determinant()?.is_even() {
            return Err(Error::ArfDegenerate { rank });
        }
        let (zeros, ones) = self.value_counts()?;
        Ok(if zeros > ones { 0 } else { 1 })
    }
}

/// Arf invariant of the skew A_l form with `q = 1` on the vanishing cycles.
pub fn arf_a_chain(l: usize) -> Result<u8> {
    if l % 2 == 1 {
        return Err(Error::ArfDegenerate { rank: l });
    }
    // any odd plumbed dimension gives the same skew form
    QuadraticRefinement::vanishing_cycles(a_chain_lattice(l, 3)?)?.arf()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryHomology {
    pub h_n: AbelianGroupDescriptor,
    pub h_n_plus_1: AbelianGroupDescriptor,
}

impl BoundaryHomology {
    pub fn is_homology_sphere(&self) -> bool {
        self.h_n.is_trivial() && self.h_n_plus_1.is_trivial()
    }
}

/// Middle homology of the boundary of a plumbing with intersection form
/// `lattice`: `H_n = coker(gram)` and `H_{n+1} = ker(gram)`.
pub fn boundary_homology(lattice: &BilinearLattice) -> BoundaryHomology {
    let (coker, ker_rank) = coker_ker(lattice.gram());
    BoundaryHomology {
        h_n: coker,
        h_n_plus_1: AbelianGroupDescriptor::free(ker_rank),
    }
}

fn require_open_book(k: u64, n: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::pre(format!("twist power must be at least 2, got {k}")));
    }
    if n < 2 || n % 2 != 0 {
        return Err(Error::pre(format!(
            "sphere dimension must be even and at least 2, got {n}"
        )));
    }
    Ok(())
}

fn open_book_lattice(k: u64, n: u64) -> Result<BilinearLattice> {
    let l = usize::try_from(k - 1).map_err(|_| Error::pre("twist power too large"))?;
    a_chain_lattice(l, n + 1)
}

/// Homology of `X_{τ^k} = ∂(A_{k-1} plumbing of D*S^{n+1})` in degrees `n`, `n+1`.
pub fn open_book_boundary_homology(k: u64, n: u64) -> Result<BoundaryHomology> {
    require_open_book(k, n)?;
    Ok(boundary_homology(&open_book_lattice(k, n)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SphereType {
    NotASphere,
    StandardSphere,
    KervaireSphere,
    SphereOfUnknownClass,
}

impl fmt::Display for SphereType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SphereType::NotASphere => "not a sphere",
            SphereType::StandardSphere => "standard sphere",
            SphereType::KervaireSphere => "Kervaire sphere",
            SphereType::SphereOfUnknownClass => "homotopy sphere of unknown class",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryInvariants {
    pub h_n: AbelianGroupDescriptor,
    pub h_n_plus_1: AbelianGroupDescriptor,
    pub sphere_type: SphereType,
    /// Arf invariant of the boundary's plumbing, when the boundary is a homotopy sphere.
    pub arf: Option<u8>,
    pub note: Option<String>,
}

pub fn boundary_sphere_type(k: u64, n: u64) -> Result<BoundaryInvariants> {
    boundary_sphere_type_with(&KervaireTable::default(), k, n)
}

/// Sphere type of `X_{τ^k}`, resolving Arf-one boundaries against `table`.
pub fn boundary_sphere_type_with(
    table: &KervaireTable,
    k: u64,
    n: u64,
) -> Result<BoundaryInvariants> {
    let BoundaryHomology { h_n, h_n_plus_1 } = open_book_boundary_homology(k, n)?;
    if !(h_n.is_trivial() && h_n_plus_1.is_trivial()) {
        return Ok(BoundaryInvariants {
            h_n,
            h_n_plus_1,
            sphere_type: SphereType::NotASphere,
            arf: None,
            note: None,
        });
    }
    let arf = QuadraticRefinement::vanishing_cycles(open_book_lattice(k, n)?)?.arf()?;
    let dim = 2 * n + 1;
    let (sphere_type, note) = if arf == 0 {
        (SphereType::StandardSphere, None)
    } else {
        let entry = table.lookup(dim)?;
        match entry.status {
            KervaireStatus::Nontrivial => (SphereType::KervaireSphere, None),
            KervaireStatus::Trivial => (
                SphereType::StandardSphere,
                Some(format!(
                    "Arf invariant 1, but the Kervaire sphere of dimension {dim} is standard ({})",
                    entry.citation
                )),
            ),
            KervaireStatus::Unknown => (
                SphereType::SphereOfUnknownClass,
                Some(format!(
                    "Arf invariant 1; whether the Kervaire sphere of dimension {dim} is standard is open ({})",
                    entry.citation
                )),
            ),
        }
    };
    Ok(BoundaryInvariants {
        h_n,
        h_n_plus_1,
        sphere_type,
        arf: Some(arf),
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn chain_grams() {
        assert_eq!(
            a_chain_lattice(2, 3).unwrap().gram(),
            &IntMatrix::from_rows([[0, 1], [-1, 0]])
        );
        assert_eq!(
            a_chain_lattice(3, 5).unwrap().gram(),
            &IntMatrix::from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
        );
        let a2 = a_chain_lattice(2, 2).unwrap();
        assert_eq!(a2.gram(), &IntMatrix::from_rows([[-2, 1], [1, -2]]));
        assert_eq!(a2.symmetry(), Symmetry::Symmetric);
        assert_eq!(a2.gram().determinant().unwrap(), BigInt::from(3));
        assert!(a_chain_lattice(0, 3).is_err());
        assert!(a_chain_lattice(2, 1).is_err());
        assert_eq!(BilinearLattice::empty(Symmetry::Skew).rank(), 0);
    }

    #[test]
    fn lattice_validation() {
        assert!(BilinearLattice::new(IntMatrix::from_rows([[0, 1], [1, 0]]), Symmetry::Skew).is_err());
        assert!(BilinearLattice::new(IntMatrix::from_rows([[1, 1], [-1, 0]]), Symmetry::Skew).is_err());
        assert!(BilinearLattice::new(IntMatrix::from_rows([[0, 1], [2, 0]]), Symmetry::Symmetric).is_err());
    }

    #[test]
    fn boundary_homology_examples() {
        let b = open_book_boundary_homology(3, 4).unwrap();
        assert!(b.is_homology_sphere());
        for k in [2, 4] {
            let b = open_book_boundary_homology(k, 4).unwrap();
            assert_eq!(b.h_n, AbelianGroupDescriptor::free(1));
            assert_eq!(b.h_n_plus_1, AbelianGroupDescriptor::free(1));
        }
        assert!(open_book_boundary_homology(1, 4).is_err());
        assert!(open_book_boundary_homology(3, 5).is_err());
    }

    #[test]
    fn symmetric_boundary_homology_is_available() {
        // A_2 in even middle dimension: boundary is a Z/3 homology lens space
        let b = boundary_homology(&a_chain_lattice(2, 2).unwrap());
        assert_eq!(b.h_n, AbelianGroupDescriptor::cyclic(3u32));
        assert!(b.h_n_plus_1.is_trivial());
    }

    #[test]
    fn arf_examples() {
        assert_eq!(arf_a_chain(2).unwrap(), 1);
        assert_eq!(arf_a_chain(6).unwrap(), 0);
        assert_eq!(arf_a_chain(8).unwrap(), 0);
        assert_eq!(arf_a_chain(3), Err(Error::ArfDegenerate { rank: 3 }));
        assert_eq!(
            arf_a_chain(26),
            Err(Error::ArfTooLarge { rank: 26, max: MAX_ARF_RANK })
        );
    }

    #[test]
    fn rank_two_value_table() {
        let q = QuadraticRefinement::vanishing_cycles(a_chain_lattice(2, 3).unwrap()).unwrap();
        let values: Vec<bool> = (0..4).map(|x| q.value(x)).collect();
        assert_eq!(values, vec![false, true, true, true]);
        assert_eq!(q.value_counts().unwrap(), (1, 3));
    }

    #[test]
    fn gray_walk_matches_direct_evaluation() {
        for l in [2usize, 4, 6] {
            let q = QuadraticRefinement::vanishing_cycles(a_chain_lattice(l, 3).unwrap()).unwrap();
            let zeros = (0..1u64 << l).filter(|&x| !q.value(x)).count() as u64;
            assert_eq!(q.value_counts().unwrap(), (zeros, (1 << l) - zeros));
        }
    }

    #[test]
    fn arf_of_hyperbolic_plane_with_zero_refinement() {
        let q = QuadraticRefinement::new(a_chain_lattice(2, 3).unwrap(), vec![false, true]).unwrap();
        assert_eq!(q.arf().unwrap(), 0);
    }

    #[test]
    fn sphere_type_examples() {
        assert_eq!(boundary_sphere_type(3, 8).unwrap().sphere_type, SphereType::KervaireSphere);
        assert_eq!(boundary_sphere_type(9, 4).unwrap().sphere_type, SphereType::StandardSphere);
        assert_eq!(boundary_sphere_type(6, 4).unwrap().sphere_type, SphereType::NotASphere);
    }

    #[test]
    fn sphere_type_resolves_against_table() {
        // dim 13: Kervaire sphere is standard
        let b = boundary_sphere_type(3, 6).unwrap();
        assert_eq!(b.sphere_type, SphereType::StandardSphere);
        assert_eq!(b.arf, Some(1));
        assert!(b.note.is_some());
        // dim 125: open
        let b = boundary_sphere_type(3, 62).unwrap();
        assert_eq!(b.sphere_type, SphereType::SphereOfUnknownClass);
    }
}
