use dehn_core::bott_ac::{
    ac_consistent_orders, ac_order_bounds, contact_modulus, divisors, factorial,
    factorial_factorization, harris_order, pi_o, pi_o_mod_u, ustilovsky_class,
};
use dehn_core::classification::{
    fibre_homotopy_trivial_possible, twist_order, Category,
};
use dehn_core::lattice_core::{coker_ker, matrix_order, matrix_pow, snf};
use dehn_core::plumbing::{
    a_chain_lattice, a_chain_lattice_with_sign, arf_a_chain, boundary_homology, BilinearLattice,
    QuadraticRefinement, Symmetry,
};
use dehn_core::twist_action::{enumerate_homology_actions, homological_order, Sign};
use dehn_core::{IntMatrix, OrderResult};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn matrix_strategy(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
            IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

/// Product of elementary matrices together with its inverse.
fn unimodular_strategy(n: usize) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    prop::collection::vec((0..n, 0..n, -3i64..=3), 0..12).prop_map(move |ops| {
        let mut p = IntMatrix::identity(n);
        let mut p_inv = IntMatrix::identity(n);
        for (i, j, f) in ops.into_iter().filter(|(i, j, _)| i != j) {
            let mut e = IntMatrix::identity(n);
            e.set(i, j, f);
            let mut e_inv = IntMatrix::identity(n);
            e_inv.set(i, j, -f);
            p = &e * &p;
            p_inv = &p_inv * &e_inv;
        }
        (p, p_inv)
    })
}

fn is_unit(x: &BigInt) -> bool {
    x.magnitude().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_round_trip(m in matrix_strategy(8)) {
        let s = snf(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert!(is_unit(&s.u.determinant().unwrap()));
        prop_assert!(is_unit(&s.v.determinant().unwrap()));
        prop_assert!(s.d.is_diagonal());
        let diag = s.d.diagonal();
        prop_assert!(diag.iter().all(|d| d >= &BigInt::zero()));
        for w in diag.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]) || (w[0].is_zero() && w[1].is_zero()));
        }
    }

    #[test]
    fn pow_is_additive(m in matrix_strategy(3).prop_filter("square", |m| m.is_square()), a in 0u64..6, b in 0u64..6) {
        let lhs = matrix_pow(&m, a + b).unwrap();
        let rhs = &matrix_pow(&m, a).unwrap() * &matrix_pow(&m, b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn order_is_minimal((p, p_inv) in unimodular_strategy(3), which in 0usize..4) {
        // block sum of a finite-order 2x2 block with 1
        let blocks = [
            [[1, -1], [1, 0]],   // order 6
            [[0, -1], [1, 0]],   // order 4
            [[0, -1], [1, -1]],  // order 3
            [[-1, 1], [0, 1]],   // twist for even n, order 2
        ];
        let b = blocks[which];
        let r = IntMatrix::from_rows([[b[0][0], b[0][1], 0], [b[1][0], b[1][1], 0], [0, 0, 1]]);
        let m = &(&p * &r) * &p_inv;
        let order = matrix_order(&m, 24).unwrap();
        let OrderResult::Finite(k) = order else { panic!("expected finite order") };
        let k: u64 = k.try_into().unwrap();
        prop_assert!(matrix_pow(&m, k).unwrap().is_identity());
        for j in 1..k {
            prop_assert!(!matrix_pow(&m, j).unwrap().is_identity());
        }
    }

    #[test]
    fn coker_ker_unimodular_invariance(
        m in prop::collection::vec(-9i64..=9, 16),
        (p, _) in unimodular_strategy(4),
        (q, _) in unimodular_strategy(4),
    ) {
        let m = IntMatrix::new(4, 4, m.into_iter().map(BigInt::from).collect()).unwrap();
        let moved = &(&p * &m) * &q;
        prop_assert_eq!(coker_ker(&m), coker_ker(&moved));
    }
}

#[test]
fn unipotent_odd_twists_are_certified() {
    for n in (1..=41).step_by(2) {
        assert_eq!(homological_order(n).unwrap(), OrderResult::Infinite);
    }
}

#[test]
fn enumeration_independent_of_range() {
    for n in (2..=20).step_by(2) {
        let base = enumerate_homology_actions(n, 1).unwrap();
        for r in [2, 5, 16, 64] {
            assert_eq!(enumerate_homology_actions(n, r).unwrap(), base);
        }
    }
}

#[test]
fn skew_chain_unimodular_iff_even() {
    for l in 1..=20usize {
        let lat = a_chain_lattice(l, 5).unwrap();
        let (coker, ker) = coker_ker(lat.gram());
        assert_eq!(coker.is_trivial() && ker == 0, l % 2 == 0, "l = {l}");
        assert_eq!(lat.is_unimodular().unwrap(), l % 2 == 0);
    }
}

#[test]
fn skew_sign_convention_is_irrelevant() {
    for l in 1..=14usize {
        let plus = a_chain_lattice_with_sign(l, 3, Sign::Plus).unwrap();
        let minus = a_chain_lattice_with_sign(l, 3, Sign::Minus).unwrap();
        assert_eq!(boundary_homology(&plus), boundary_homology(&minus));
        if l % 2 == 0 {
            let arf = |lat| QuadraticRefinement::vanishing_cycles(lat).unwrap().arf().unwrap();
            assert_eq!(arf(plus), arf(minus));
        }
    }
}

#[test]
fn arf_invariant_under_chain_reversal() {
    for l in (2..=14usize).step_by(2) {
        let g = a_chain_lattice(l, 3).unwrap();
        let mut rev = IntMatrix::zeros(l, l);
        for i in 0..l {
            for j in 0..l {
                rev.set(i, j, g.gram().get(l - 1 - i, l - 1 - j).clone());
            }
        }
        let rev = BilinearLattice::new(rev, Symmetry::Skew).unwrap();
        let arf = QuadraticRefinement::vanishing_cycles(rev).unwrap().arf().unwrap();
        assert_eq!(arf, arf_a_chain(l).unwrap());
    }
}

#[test]
fn bott_periodicity() {
    for i in 0..=64 {
        assert_eq!(pi_o(i + 8), pi_o(i));
        if i >= 1 {
            assert_eq!(pi_o_mod_u(i + 8).unwrap(), pi_o_mod_u(i).unwrap());
        }
    }
}

#[test]
fn harris_and_contact_tables_agree() {
    for n in (2..=20).step_by(2) {
        let d = contact_modulus(n).unwrap();
        let h = harris_order(n).unwrap();
        assert!(h.is_multiple_of(&d));
        assert_eq!(h / &d, BigUint::from(2u32));
    }
}

#[test]
fn contact_class_period() {
    for n in (2..=20).step_by(2) {
        let d = contact_modulus(n).unwrap();
        for k in [1u32, 7, 9, 15, 17, 23] {
            let k = BigUint::from(k);
            let shifted = &k + &d * 2u32;
            // 8 | 2d except at n = 2, where the shift can leave the ±1 mod 8 classes
            let r = (&shifted % 8u32).to_u64_digits().first().copied().unwrap_or(0);
            if r == 1 || r == 7 {
                assert_eq!(
                    ustilovsky_class(shifted, n).unwrap(),
                    ustilovsky_class(k, n).unwrap()
                );
            }
        }
    }
}

#[test]
fn ac_bounds_consistent_with_smooth_order() {
    for n in (4..=20).step_by(2) {
        let OrderResult::Bounded { lower, upper } = ac_order_bounds(n).unwrap() else {
            panic!("bounded expected")
        };
        assert!(upper.is_multiple_of(&lower));
        let smooth = match twist_order(Category::Diff, n).unwrap() {
            OrderResult::Finite(m) => vec![m],
            OrderResult::Ambiguous(c) => c.into_iter().collect(),
            other => panic!("unexpected {other:?}"),
        };
        for s in smooth {
            assert!(upper.is_multiple_of(&s.lcm(&lower)));
        }
    }
}

#[test]
fn consistent_orders_are_multiples_of_the_lower_bound() {
    for n in [4u64, 6, 8] {
        let all = divisors(&factorial_factorization(n, 4));
        let set = ac_consistent_orders(n).unwrap();
        assert!(!set.is_empty());
        let lower = factorial(n) / 4u32;
        for m in &set {
            assert!(all.contains(m));
            assert!(m.is_multiple_of(&lower));
        }
        assert!(set.contains(&(factorial(n) * 16u32)));
    }
}

#[test]
fn classification_monotone_and_milnor_spanier() {
    for n in (2..=64).step_by(2) {
        let homeo = twist_order(Category::Homeo, n).unwrap();
        let haut = twist_order(Category::HAut, n).unwrap();
        assert_eq!(homeo, haut);
        let OrderResult::Finite(top) = homeo else { panic!() };
        let diff = twist_order(Category::Diff, n).unwrap();
        assert!(diff.is_finite());
        assert!(diff.divisible_by(&top));
        assert!(diff.divisible_by(&BigUint::from(2u32)));
        assert_eq!(top == BigUint::from(2u32), fibre_homotopy_trivial_possible(n + 1));
    }
}
