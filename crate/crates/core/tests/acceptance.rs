//! Acceptance suite: the worked examples reproduced bit-exactly plus the
//! exhaustive formula-vs-oracle sweeps at small degree. All comparisons are
//! exact; one test per criterion prints its own pass/fail line via the
//! harness.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use permod::brauer::m_values;
use permod::complexity::{complexity_ext_square, complexity_sym_power, complexity_young};
use permod::oracle::{
    build_pm, conjugate_groups, max_rank_ext_power, orbit_decompose_square,
};
use permod::partitions::{partitions_of, rank_young, Composition, Partition};
use permod::powers::is_projective_ext_power;
use permod::scott::{
    digit_sequences, enumerate_m_lambda, is_young_pm, scott_class_key, scott_decomposition,
    NatMatrix, NatSeq, PowerKind,
};
use permod::tabloids::dim_perm_module;
use permod::verify::{
    check_brauer_monotonicity, check_classification, check_complexity_vs_oracle,
    check_dominance_partial_order, check_donkin_self, check_double_cosets,
    check_fixed_point_routes, check_max_complexity_orbit, check_max_rank_shapes,
    check_orbit_stabilizer, check_padic_roundtrip, check_padic_uniqueness,
    check_pm_vs_stabilizers, check_qr_split, check_s_lambda, check_scott_keys_vs_conjugacy,
    check_square_orbits, check_thm_b,
};
use permod::young::{thm_b_ext_partitions, thm_b_quantities, thm_b_sym_partition};
use permod::Caps;

fn pt(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn mat(rows: &[&[u64]]) -> NatMatrix {
    NatMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn criterion_1_scott_multiplicities_for_2_1_1() {
    let caps = Caps::default();
    let l = pt(&[2, 1, 1]);

    let sym = scott_decomposition(&l, PowerKind::Sym, 2, &caps).unwrap();
    let mults: Vec<u64> = sym.iter().map(|c| c.multiplicity).collect();
    assert_eq!(mults, vec![1, 3, 1, 1]);
    let members: Vec<Vec<&str>> = sym
        .iter()
        .map(|c| c.members.iter().map(|m| m.label.as_str()).collect())
        .collect();
    assert_eq!(
        members,
        vec![vec!["M1"], vec!["M2", "M5", "M7"], vec!["M3"], vec!["M6"]]
    );

    let ext = scott_decomposition(&l, PowerKind::Ext, 2, &caps).unwrap();
    let mults: Vec<u64> = ext.iter().map(|c| c.multiplicity).collect();
    assert_eq!(mults, vec![1, 2, 1, 1]);
    let members: Vec<Vec<&str>> = ext
        .iter()
        .map(|c| c.members.iter().map(|m| m.label.as_str()).collect())
        .collect();
    assert_eq!(members, vec![vec!["M1"], vec!["M2", "M5"], vec!["M3"], vec!["M6"]]);

    // the labels refer to this exact matrix enumeration
    let ms = enumerate_m_lambda(&l, &caps).unwrap();
    assert_eq!(ms[1], mat(&[&[1, 1, 0], &[1, 0, 0], &[0, 0, 1]])); // M2
    assert_eq!(ms[4], mat(&[&[1, 0, 1], &[0, 1, 0], &[1, 0, 0]])); // M5
    assert_eq!(ms[2], mat(&[&[1, 1, 0], &[0, 0, 1], &[1, 0, 0]])); // M3
    assert_eq!(ms[5], mat(&[&[0, 1, 1], &[1, 0, 0], &[1, 0, 0]])); // M6
}

#[test]
fn criterion_2_digit_sequences_and_nonconjugacy_in_s10() {
    let caps = Caps::default();
    let m1 = mat(&[&[2, 1, 2], &[1, 2, 0], &[2, 0, 0]]);
    let m2 = mat(&[&[0, 2, 2], &[2, 0, 1], &[2, 1, 0]]);

    let (d1, u1, t1) = digit_sequences(&m1, 2);
    let (d2, u2, t2) = digit_sequences(&m2, 2);
    assert_eq!(d1, NatSeq::new(vec![0, 2]));
    assert_eq!(d2, NatSeq::new(vec![0]));
    assert_eq!(u1, NatSeq::new(vec![1, 1]));
    assert_eq!(u2, NatSeq::new(vec![1, 2]));
    assert_eq!(t1, NatSeq::new(vec![2, 4]));
    assert_eq!(t2, NatSeq::new(vec![2, 4]));

    assert!(!is_young_pm(&m1, 2));
    assert!(!is_young_pm(&m2, 2));
    assert_ne!(scott_class_key(&m1, 2), scott_class_key(&m2, 2));

    let p1 = build_pm(&m1, 2, &caps).unwrap();
    let p2 = build_pm(&m2, 2, &caps).unwrap();
    assert_eq!(p1.order(), 32);
    assert_eq!(p2.order(), 32);
    assert!(!conjugate_groups(&p1, &p2, &caps).unwrap());
}

#[test]
fn criterion_3_quantities_for_5_4_2_at_p3() {
    let l = pt(&[5, 4, 2]);
    let q = thm_b_quantities(&l, 6, 3).unwrap();
    assert_eq!(q.d_la, 1);
    assert_eq!(q.e_la, 8);
    let (q_l, r_l) = permod::partitions::qr_split(&l, 3);
    assert_eq!(q_l.parts(), &[3, 3, 0]);
    assert_eq!(r_l.parts(), &[2, 1, 2]);
    assert_eq!(q.r_la_a.parts(), &[2]);
    assert_eq!(q.lambda_a.parts(), &[5, 3, 0]);
    assert_eq!(thm_b_sym_partition(&l, 6, 3).unwrap(), pt(&[8, 3]));
}

#[test]
fn criterion_4_projective_eighth_exterior_power_of_3_2() {
    let caps = Caps::default();
    let l = pt(&[3, 2]);
    let m = m_values(&l, 3, &caps).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].0, BigUint::from(1u32));
    assert!(is_projective_ext_power(&l, 8, 3, &caps).unwrap());
    // every elementary abelian 3-subgroup of S_5 has zero Brauer quotient
    assert_eq!(max_rank_ext_power(&l, 8, 3, &caps).unwrap(), 0);
}

#[test]
fn criterion_5_exterior_square_partitions_of_3_3_2() {
    let caps = Caps::default();
    let l = pt(&[3, 3, 2]);
    let collect = |p: u64| -> Vec<Partition> {
        thm_b_ext_partitions(&l, p, &caps).unwrap().into_iter().collect()
    };
    assert_eq!(collect(2), vec![pt(&[2, 2, 2, 2]), pt(&[4, 2, 2])]);
    assert_eq!(collect(3), vec![pt(&[5, 3])]);
    assert_eq!(collect(5), vec![pt(&[2, 2, 2, 1, 1]), pt(&[3, 2, 1, 1, 1])]);
}

#[test]
fn criterion_6_complexity_examples() {
    assert_eq!(complexity_sym_power(&pt(&[2, 2]), 2, 2).unwrap(), 2);
    assert_eq!(complexity_ext_square(&pt(&[2, 2]), 2).unwrap(), 2);
    assert_eq!(complexity_sym_power(&pt(&[5, 1]), 4, 2).unwrap(), 3);
    assert_eq!(complexity_young(&pt(&[4, 2]), 2).unwrap(), 3);
}

#[test]
fn criterion_7a_7b_complexity_and_projectivity_vs_oracle() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_complexity_vs_oracle(n, p, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_7c_double_cosets_match_matrices() {
    let caps = Caps::default();
    for n in 2..=6 {
        check_double_cosets(n, &caps).unwrap();
    }
}

#[test]
fn criterion_7d_7e_orbit_counts_and_hom_dims() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_square_orbits(n, p, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_7f_scott_keys_agree_with_group_conjugacy() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_scott_keys_vs_conjugacy(n, p, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_8_dimension_conservation() {
    let caps = Caps::default();
    for n in 2..=6u64 {
        for l in partitions_of(n) {
            let d = dim_perm_module(&Composition::from(&l)).to_u64().unwrap();
            let sym = orbit_decompose_square(&l, PowerKind::Sym, 2, &caps).unwrap();
            let total: u64 = sym.iter().map(|o| o.orbit_size).sum();
            assert_eq!(total, d * (d + 1) / 2, "sym dimension at {l}");
            if l.len() >= 2 {
                let ext = orbit_decompose_square(&l, PowerKind::Ext, 2, &caps).unwrap();
                let total: u64 = ext.iter().map(|o| o.orbit_size).sum();
                assert_eq!(total, d * (d - 1) / 2, "ext dimension at {l}");
            }
        }
    }
}

#[test]
fn criterion_9_padic_roundtrip_to_30() {
    check_padic_roundtrip(30, &[2, 3, 5]).unwrap();
}

#[test]
fn criterion_9_padic_uniqueness_to_12() {
    check_padic_uniqueness(12, &[2, 3, 5]).unwrap();
}

#[test]
fn criterion_9_dominance_partial_order_to_10() {
    check_dominance_partial_order(10).unwrap();
}

#[test]
fn criterion_9_orbit_stabilizer_to_6() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_orbit_stabilizer(n, p, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_9_donkin_self_membership() {
    let caps = Caps::default();
    check_donkin_self(8, &[2, 3], &caps).unwrap();
}

#[test]
fn criterion_9_scott_membership_of_s_lambda_to_12() {
    let caps = Caps::default();
    check_s_lambda(12, &[2, 3, 5], &caps).unwrap();
}

#[test]
fn criterion_9_ext_square_below_sym_square() {
    for n in 2..=20u64 {
        for l in partitions_of(n) {
            if l.len() < 2 {
                continue;
            }
            for p in [2, 3, 5] {
                let ext = complexity_ext_square(&l, p).unwrap();
                let sym = complexity_sym_power(&l, 2, p).unwrap();
                assert!(ext <= sym, "c(Λ²M^{l}) > c(S²M^{l}) at p={p}");
                assert!(sym <= n / p);
                assert!(complexity_young(&l, p).unwrap() <= rank_young(&l, p));
            }
        }
    }
}

#[test]
fn criterion_9_qr_split_identities() {
    check_qr_split(12, &[2, 3, 5]).unwrap();
}

#[test]
fn criterion_9_fixed_point_routes() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_fixed_point_routes(n, p, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_9_brauer_monotonicity_and_ext_le_sym() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_brauer_monotonicity(n, p, 4, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_9_pm_conjugate_to_pair_stabilizer_sylows() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_pm_vs_stabilizers(n, p, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_9_max_complexity_pattern_orbits() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_max_complexity_orbit(n, p, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_9_maximal_rank_elementary_abelian_shapes() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_max_rank_shapes(n, p, &caps).unwrap();
        }
    }
}

#[test]
fn criterion_9_classification_vs_basis_orbits() {
    let caps = Caps::default();
    for n in 2..=6 {
        for p in [2, 3] {
            check_classification(n, p, 6, &caps).unwrap();
        }
    }
}

// The double-coset bijection holds one degree past the criterion scale.
#[test]
fn double_cosets_to_degree_7() {
    let caps = Caps::default();
    check_double_cosets(7, &caps).unwrap();
}

// Theorem-level sweep behind criteria 3 and 5: the distinguished partition
// data for symmetric powers and exterior squares at every λ ⊢ n ≤ 8.
#[test]
fn distinguished_partitions_sweep_to_8() {
    let caps = Caps::default();
    check_thm_b(8, 6, &[2, 3], &caps).unwrap();
}

// Worked complexity value through the exhaustive route.
#[test]
fn ext_square_oracle_value_for_2_2() {
    let caps = Caps::default();
    assert_eq!(max_rank_ext_power(&pt(&[2, 2]), 2, 2, &caps).unwrap(), 2);
}

// Brauer quotients of the eighth exterior power vanish classwise, not just
// for the standard cyclic subgroup (extends criterion 4).
#[test]
fn projectivity_sweep_small() {
    let caps = Caps::default();
    for n in 2..=5u64 {
        for l in partitions_of(n) {
            let d = dim_perm_module(&Composition::from(&l));
            for p in [2u64, 3] {
                for a in 2..=4u64 {
                    if BigUint::from(a) > d {
                        continue;
                    }
                    let formula = is_projective_ext_power(&l, a, p, &caps).unwrap();
                    let oracle = max_rank_ext_power(&l, a, p, &caps).unwrap() == 0;
                    assert_eq!(formula, oracle, "ext projectivity at {l}, a={a}, p={p}");
                }
            }
        }
    }
}

// The full exterior-power Brauer dimensions stay zero on all elementary
// abelians for the worked projective example even at other exponents where
// the criterion says otherwise.
#[test]
fn ext_power_brauer_dimensions_for_3_2() {
    let caps = Caps::default();
    let l = pt(&[3, 2]);
    let f1 = permod::tabloids::standard_subgroup(5, 3, permod::tabloids::StandardSubgroup::F, 1, &caps)
        .unwrap();
    let nonzero: Vec<u64> = (2..=10)
        .filter(|&a| {
            !permod::brauer::dim_brauer_ext_power(&l, a, &f1, &caps).unwrap().is_zero()
        })
        .collect();
    // subset sums of the orbit sizes [1, 3, 3, 3] reach 3,4,6,7,9,10 but not 8
    assert_eq!(nonzero, vec![3, 4, 6, 7, 9, 10]);
}
