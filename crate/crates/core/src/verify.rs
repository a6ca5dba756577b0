//! The cross-check battery: every closed-form result gets recomputed by an
//! independent brute-force route at small degree and compared exactly.
//!
//! Each check returns `Ok(())` or a message describing the first mismatch.
//! `run_battery` packages the checks into a pass/fail report; the
//! acceptance test suite calls the same functions at its own scales.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::brauer::{dim_brauer_ext_power, dim_brauer_perm, dim_brauer_sym_power};
use crate::caps::Caps;
use crate::complexity::{complexity_ext_square, complexity_sym_power, complexity_young};
use crate::oracle::{
    build_pm, conjugate_element_sets, conjugate_groups, count_power_orbits, double_cosets,
    elementary_abelian_subgroups, matrix_to_pair, orbit_decompose_square, sn_elements,
    subgroup_closure, sylow_subgroup,
};
use crate::partitions::{
    dominance_leq, padic_expansion, partitions_of, qr_split, rank_young, s_lambda, Composition,
    Partition,
};
use crate::powers::{classify_ext_power, is_projective_ext_power, is_projective_sym_power, ModuleLabel};
use crate::scott::{
    enumerate_m_lambda, scott_class_key, symmetric_and_pairs, hom_dims, NatMatrix, PowerKind,
};
use crate::tabloids::{
    dim_perm_module, enumerate_tabloids, fixed_tabloids, k_times_h, orbit_of, standard_subgroup,
    GeneratedPSubgroup, StandardSubgroup, Tabloid,
};
use crate::young::{donkin_test, thm_b_ext_partitions, thm_b_sym_partition};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

type Check = std::result::Result<(), String>;

fn fail(msg: String) -> Check {
    Err(msg)
}

fn lift(e: Error) -> String {
    e.to_string()
}

/// p-adic expansions reconstruct their partition and have p-restricted
/// layers, for all λ ⊢ n ≤ n_max.
pub fn check_padic_roundtrip(n_max: u64, primes: &[u64]) -> Check {
    for n in 1..=n_max {
        for l in partitions_of(n) {
            for &p in primes {
                let e = padic_expansion(&l, p).map_err(lift)?;
                if e.reconstruct() != l {
                    return fail(format!("expansion of {l} at p={p} does not reconstruct"));
                }
                for layer in e.layers() {
                    if !layer.is_p_restricted(p) {
                        return fail(format!("layer {layer} of {l} not {p}-restricted"));
                    }
                }
                if let Some(top) = e.layers().last() {
                    if top.is_empty() {
                        return fail(format!("top layer of {l} at p={p} is empty"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// No partition of n ≤ n_max admits two distinct p-restricted layer
/// sequences, by exhaustive enumeration of candidate layer tuples.
pub fn check_padic_uniqueness(n_max: u64, primes: &[u64]) -> Check {
    for &p in primes {
        // all p-restricted partitions by size
        let restricted: Vec<Vec<Partition>> = (0..=n_max)
            .map(|m| {
                partitions_of(m)
                    .into_iter()
                    .filter(|x| x.is_p_restricted(p))
                    .collect()
            })
            .collect();
        for n in 1..=n_max {
            for l in partitions_of(n) {
                let mut found = 0u64;
                let mut layers: Vec<Partition> = Vec::new();
                count_layer_decompositions(&l, p, 1, &restricted, &mut layers, &mut found);
                if found != 1 {
                    return fail(format!(
                        "{l} at p={p} has {found} layer decompositions, expected 1"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn count_layer_decompositions(
    target: &Partition,
    p: u64,
    power: u64,
    restricted: &[Vec<Partition>],
    layers: &mut Vec<Partition>,
    found: &mut u64,
) {
    let remaining = target.size()
        - layers
            .iter()
            .enumerate()
            .map(|(i, x)| p.pow(i as u32) * x.size())
            .sum::<u64>();
    if remaining == 0 {
        // valid iff current sum reconstructs and the top layer is nonempty
        if layers.last().is_some_and(|l| !l.is_empty()) && reassemble(layers, p) == *target {
            *found += 1;
        }
        return;
    }
    // every layer from here on contributes a multiple of `power`
    if remaining % power != 0 {
        return;
    }
    let max_size = remaining / power;
    for size in 0..=max_size {
        for layer in &restricted[size as usize] {
            layers.push(layer.clone());
            count_layer_decompositions(target, p, power * p, restricted, layers, found);
            layers.pop();
        }
    }
}

fn reassemble(layers: &[Partition], p: u64) -> Partition {
    let mut acc = Composition::empty();
    let mut power = 1u64;
    for layer in layers {
        acc = acc.sum_with(&Composition::from(layer).scale(power));
        power *= p;
    }
    acc.rearrange()
}

/// Dominance is reflexive, antisymmetric and transitive on partitions of
/// each n ≤ n_max.
pub fn check_dominance_partial_order(n_max: u64) -> Check {
    for n in 1..=n_max {
        let all = partitions_of(n);
        for a in &all {
            if !dominance_leq(a, a).map_err(lift)? {
                return fail(format!("dominance not reflexive at {a}"));
            }
            for b in &all {
                let ab = dominance_leq(a, b).map_err(lift)?;
                let ba = dominance_leq(b, a).map_err(lift)?;
                if ab && ba && a != b {
                    return fail(format!("dominance not antisymmetric at {a}, {b}"));
                }
                if !ab {
                    continue;
                }
                for c in &all {
                    if dominance_leq(b, c).map_err(lift)? && !dominance_leq(a, c).map_err(lift)? {
                        return fail(format!("dominance not transitive at {a}, {b}, {c}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// |q_λ| = p · rank(S_λ) and the q/r split reassembles λ.
pub fn check_qr_split(n_max: u64, primes: &[u64]) -> Check {
    for n in 1..=n_max {
        for l in partitions_of(n) {
            for &p in primes {
                let (q, r) = qr_split(&l, p);
                if q.size() != p * rank_young(&l, p) {
                    return fail(format!("|q_λ| ≠ p·rank at {l}, p={p}"));
                }
                if q.sum_with(&r).rearrange() != l {
                    return fail(format!("q + r ≠ λ at {l}, p={p}"));
                }
            }
        }
    }
    Ok(())
}

/// s(λ) is always a Scott partition and always a Young-summand label of
/// M^λ.
pub fn check_s_lambda(n_max: u64, primes: &[u64], caps: &Caps) -> Check {
    for n in 1..=n_max {
        for l in partitions_of(n) {
            for &p in primes {
                let s = s_lambda(&l, p).map_err(lift)?;
                if !crate::young::is_scott_partition(&s, p).map_err(lift)? {
                    return fail(format!("s({l}) = {s} is not a Scott partition at p={p}"));
                }
                if !donkin_test(&s, &l, p, caps).map_err(lift)? {
                    return fail(format!("Y^{s} is not a summand of M^{l} at p={p}"));
                }
            }
        }
    }
    Ok(())
}

fn standard_family(n: usize, p: u64, caps: &Caps) -> Result<Vec<GeneratedPSubgroup>> {
    let mut groups = Vec::new();
    for m in 0..=(n as u64 / p) as usize {
        groups.push(standard_subgroup(n, p, StandardSubgroup::E, m, caps)?);
    }
    for i in 1..=(n as u64 / p) as usize {
        groups.push(standard_subgroup(n, p, StandardSubgroup::F, i, caps)?);
    }
    if p == 2 {
        for s in 0..=n / 4 {
            groups.push(standard_subgroup(n, p, StandardSubgroup::K, s, caps)?);
        }
        if n % 2 == 0 {
            for x in 0..=n / 4 {
                groups.push(standard_subgroup(n, p, StandardSubgroup::H, x, caps)?);
                groups.push(k_times_h(n, x, caps)?);
            }
        }
    }
    Ok(groups)
}

/// |orbit| · |stabilizer within P| = |P| for every tabloid and every group
/// of the standard families, all shapes of n.
pub fn check_orbit_stabilizer(n: u64, p: u64, caps: &Caps) -> Check {
    for l in partitions_of(n) {
        let shape = Composition::from(&l);
        let tabloids = enumerate_tabloids(&shape, caps).map_err(lift)?;
        for group in standard_family(n as usize, p, caps).map_err(lift)? {
            for t in &tabloids {
                let orbit = orbit_of(t, &group).map_err(lift)?;
                let stab = group.elements().iter().filter(|g| &t.act(g) == t).count();
                if orbit.len() * stab != group.order() as usize {
                    return fail(format!(
                        "orbit-stabilizer fails for {t} under a group of order {}",
                        group.order()
                    ));
                }
            }
        }
    }
    Ok(())
}

/// The fixed-tabloid list, the orbit-insertion count and a direct scan all
/// agree, for all shapes of n and the standard subgroup families.
pub fn check_fixed_point_routes(n: u64, p: u64, caps: &Caps) -> Check {
    for l in partitions_of(n) {
        let shape = Composition::from(&l);
        let tabloids = enumerate_tabloids(&shape, caps).map_err(lift)?;
        for group in standard_family(n as usize, p, caps).map_err(lift)? {
            let listed = fixed_tabloids(&shape, &group, caps).map_err(lift)?;
            let counted = dim_brauer_perm(&l, &group).map_err(lift)?;
            let scanned: Vec<&Tabloid> = tabloids
                .iter()
                .filter(|t| group.generators().iter().all(|g| t.act(g) == **t))
                .collect();
            if BigUint::from(listed.len()) != counted || scanned.len() != listed.len() {
                return fail(format!(
                    "fixed-point routes disagree at {l}: list {}, count {counted}, scan {}",
                    listed.len(),
                    scanned.len()
                ));
            }
        }
    }
    Ok(())
}

/// Vanishing is monotone along the standard chains E_1 ≤ E_2 ≤ ... and the
/// exterior Brauer dimension vanishes wherever the symmetric one does.
pub fn check_brauer_monotonicity(n: u64, p: u64, a_max: u64, caps: &Caps) -> Check {
    let b = (n / p) as usize;
    for l in partitions_of(n) {
        let mut prev_zero = false;
        for m in 1..=b {
            let e = standard_subgroup(n as usize, p, StandardSubgroup::E, m, caps).map_err(lift)?;
            let dim = dim_brauer_perm(&l, &e).map_err(lift)?;
            if prev_zero && !dim.is_zero() {
                return fail(format!("vanishing not monotone on E-chain at {l}, m={m}"));
            }
            prev_zero = dim.is_zero();
        }
        let d = dim_perm_module(&Composition::from(&l));
        for group in elementary_abelian_subgroups(n as usize, p, caps).map_err(lift)? {
            for a in 2..=a_max {
                if BigUint::from(a) > d {
                    continue;
                }
                let ext = dim_brauer_ext_power(&l, a, &group, caps).map_err(lift)?;
                let sym = dim_brauer_sym_power(&l, a, &group, caps).map_err(lift)?;
                if !ext.is_zero() && sym.is_zero() {
                    return fail(format!(
                        "ext quotient nonzero but sym zero at {l}, a={a}, rank {}",
                        group.rank()
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Closed-form complexities of S²M^λ and Λ²M^λ equal the largest rank of
/// an elementary abelian subgroup with nonzero Brauer quotient, and the
/// projectivity tests agree with that rank being zero.
pub fn check_complexity_vs_oracle(n: u64, p: u64, caps: &Caps) -> Check {
    let groups = elementary_abelian_subgroups(n as usize, p, caps).map_err(lift)?;
    for l in partitions_of(n) {
        let d = dim_perm_module(&Composition::from(&l));
        let mut max_sym = 0u64;
        let mut max_ext = 0u64;
        for group in &groups {
            if group.is_trivial() {
                continue;
            }
            if !dim_brauer_sym_power(&l, 2, group, caps).map_err(lift)?.is_zero() {
                max_sym = max_sym.max(group.rank());
            }
            if d >= BigUint::from(2u32)
                && !dim_brauer_ext_power(&l, 2, group, caps).map_err(lift)?.is_zero()
            {
                max_ext = max_ext.max(group.rank());
            }
        }
        let sym_formula = complexity_sym_power(&l, 2, p).map_err(lift)?;
        if sym_formula != max_sym {
            return fail(format!(
                "c(S²M^{l}) formula {sym_formula} ≠ oracle {max_sym} at p={p}"
            ));
        }
        if is_projective_sym_power(&l, 2, p) != (max_sym == 0) {
            return fail(format!("sym projectivity disagrees with oracle at {l}, p={p}"));
        }
        if l.len() >= 2 {
            let ext_formula = complexity_ext_square(&l, p).map_err(lift)?;
            if ext_formula != max_ext {
                return fail(format!(
                    "c(Λ²M^{l}) formula {ext_formula} ≠ oracle {max_ext} at p={p}"
                ));
            }
            if is_projective_ext_power(&l, 2, p, caps).map_err(lift)? != (max_ext == 0) {
                return fail(format!("ext projectivity disagrees with oracle at {l}, p={p}"));
            }
        }
    }
    Ok(())
}

/// The James–Kerber scan over S_n produces exactly the row/column-sum
/// matrices.
pub fn check_double_cosets(n: u64, caps: &Caps) -> Check {
    for l in partitions_of(n) {
        if l.len() < 2 {
            continue;
        }
        let scanned = double_cosets(&l, caps).map_err(lift)?;
        let direct: BTreeSet<NatMatrix> =
            enumerate_m_lambda(&l, caps).map_err(lift)?.into_iter().collect();
        if scanned != direct {
            return fail(format!("double cosets disagree with matrices at {l}"));
        }
    }
    Ok(())
}

/// Orbit counts of the squared bases are 1 + |S_λ| + |N_λ| (sym) and
/// |S_λ| + |N_λ| (ext); orbit sizes sum to the power dimension; hom
/// dimensions match the orbit counts.
pub fn check_square_orbits(n: u64, p: u64, caps: &Caps) -> Check {
    for l in partitions_of(n) {
        if l.len() < 2 {
            continue;
        }
        let matrices = enumerate_m_lambda(&l, caps).map_err(lift)?;
        let (sym_ms, n_reps) = symmetric_and_pairs(&matrices);
        let s_count = sym_ms.len() as u64;
        let n_count = n_reps.len() as u64;
        let d = dim_perm_module(&Composition::from(&l));

        let sym_orbits = orbit_decompose_square(&l, PowerKind::Sym, p, caps).map_err(lift)?;
        if sym_orbits.len() as u64 != 1 + s_count + n_count {
            return fail(format!(
                "sym orbit count {} ≠ 1+{s_count}+{n_count} at {l}",
                sym_orbits.len()
            ));
        }
        let total: BigUint = sym_orbits.iter().map(|o| BigUint::from(o.orbit_size)).sum();
        if total * 2u32 != &d * (&d + 1u32) {
            return fail(format!("sym orbit sizes do not sum to d(d+1)/2 at {l}"));
        }

        let ext_orbits = orbit_decompose_square(&l, PowerKind::Ext, p, caps).map_err(lift)?;
        if ext_orbits.len() as u64 != s_count + n_count {
            return fail(format!(
                "ext orbit count {} ≠ {s_count}+{n_count} at {l}",
                ext_orbits.len()
            ));
        }
        let total: BigUint = ext_orbits.iter().map(|o| BigUint::from(o.orbit_size)).sum();
        if total * 2u32 != &d * (&d - 1u32) {
            return fail(format!("ext orbit sizes do not sum to d(d-1)/2 at {l}"));
        }

        let (hom_sym, hom_ext) = hom_dims(&l, p, caps).map_err(lift)?;
        if hom_sym != sym_orbits.len() as u64 {
            return fail(format!("hom dim (sym) ≠ orbit count at {l}"));
        }
        if p == 2 && hom_ext != Some(ext_orbits.len() as u64) {
            return fail(format!("hom dim (ext) ≠ orbit count at {l}, p=2"));
        }
        if p > 2 && hom_ext != Some(n_count) {
            return fail(format!("hom dim (ext) ≠ |N_λ| at {l}, p={p}"));
        }
    }
    Ok(())
}

/// Key equality of the members of M_λ ∪ {D_λ} coincides with actual
/// S_n-conjugacy of the constructed groups P_M.
pub fn check_scott_keys_vs_conjugacy(n: u64, p: u64, caps: &Caps) -> Check {
    for l in partitions_of(n) {
        if l.len() < 2 {
            continue;
        }
        let mut members = enumerate_m_lambda(&l, caps).map_err(lift)?;
        members.push(NatMatrix::diagonal(l.parts()));
        let built: Vec<GeneratedPSubgroup> = members
            .iter()
            .map(|m| build_pm(m, p, caps))
            .collect::<Result<_>>()
            .map_err(lift)?;
        let keys: Vec<_> = members.iter().map(|m| scott_class_key(m, p)).collect();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let by_key = keys[i] == keys[j];
                let by_group = conjugate_groups(&built[i], &built[j], caps).map_err(lift)?;
                if by_key != by_group {
                    return fail(format!(
                        "key equality ({by_key}) and conjugacy ({by_group}) disagree \
                         for {} vs {} at {l}, p={p}",
                        members[i], members[j]
                    ));
                }
            }
        }
    }
    Ok(())
}

/// For every M in S_λ ∪ N_λ, P_M is conjugate to a Sylow p-subgroup of the
/// stabilizer of the basis pair attached to M; the diagonal matrix pairs
/// with the row stabilizer.
pub fn check_pm_vs_stabilizers(n: u64, p: u64, caps: &Caps) -> Check {
    let all = sn_elements(n as usize);
    for l in partitions_of(n) {
        if l.len() < 2 {
            continue;
        }
        let matrices = enumerate_m_lambda(&l, caps).map_err(lift)?;
        let (sym_ms, n_reps) = symmetric_and_pairs(&matrices);
        for m in sym_ms.iter().chain(&n_reps) {
            let (t, gt) = matrix_to_pair(&l, m).map_err(lift)?;
            let stab: Vec<_> = all
                .iter()
                .filter(|g| {
                    let a = t.act(g);
                    let b = gt.act(g);
                    (a == t && b == gt) || (a == gt && b == t)
                })
                .cloned()
                .collect();
            let sylow = sylow_subgroup(&stab, p, n as usize, caps).map_err(lift)?;
            let pm = build_pm(m, p, caps).map_err(lift)?;
            if !conjugate_groups(&sylow, &pm, caps).map_err(lift)? {
                return fail(format!(
                    "P_M not conjugate to a Sylow of the pair stabilizer for {m} at {l}"
                ));
            }
        }
        // diagonal: K(t ⊙ t) is the row stabilizer, a Young subgroup
        let t = Tabloid::row_reading(&Composition::from(&l));
        let stab: Vec<_> = all.iter().filter(|g| t.act(g) == t).cloned().collect();
        let sylow = sylow_subgroup(&stab, p, n as usize, caps).map_err(lift)?;
        let pm = build_pm(&NatMatrix::diagonal(l.parts()), p, caps).map_err(lift)?;
        if !conjugate_groups(&sylow, &pm, caps).map_err(lift)? {
            return fail(format!("diagonal P_M not conjugate to Sylow of S_λ at {l}"));
        }
    }
    Ok(())
}

/// For r̄_λ = (p−1, 1): the size-p basis multisets of S^p M^λ with rowwise
/// common-intersection pattern q_λ form a single orbit of the predicted
/// size n!/(p!·(λ_u−p+1)!·(λ_v−1)!·∏λ_i!) whose stabilizer is conjugate to
/// the Young subgroup S_{q_λ ∪ (p)}.
pub fn check_max_complexity_orbit(n: u64, p: u64, caps: &Caps) -> Check {
    for l in partitions_of(n) {
        let (q, r) = qr_split(&l, p);
        if r.rearrange() != Partition::new(vec![p - 1, 1]).unwrap() {
            continue;
        }
        let shape = Composition::from(&l);
        let tabloids = enumerate_tabloids(&shape, caps).map_err(lift)?;
        let mut hits: Vec<Vec<usize>> = Vec::new();
        let mut multiset = Vec::with_capacity(p as usize);
        collect_pattern_multisets(&tabloids, q.parts(), p as usize, 0, &mut multiset, &mut hits);

        let parts = l.parts();
        let u = parts.iter().position(|&x| x % p == p - 1).unwrap();
        let v = parts.iter().rposition(|&x| x % p == 1).unwrap();
        let mut denom = crate::arith::factorial(p);
        denom *= crate::arith::factorial(parts[u] + 1 - p);
        denom *= crate::arith::factorial(parts[v] - 1);
        for (i, &x) in parts.iter().enumerate() {
            if i != u && i != v {
                denom *= crate::arith::factorial(x);
            }
        }
        let expected = crate::arith::factorial(n) / denom;
        if BigUint::from(hits.len()) != expected {
            return fail(format!(
                "pattern-orbit size {} ≠ expected {expected} at {l}, p={p}",
                hits.len()
            ));
        }
        // single orbit: the multiset stabilizer has order n!/|hits|
        let first = &hits[0];
        let all = sn_elements(n as usize);
        let reference: Vec<&Tabloid> = first.iter().map(|&i| &tabloids[i]).collect();
        let stab: Vec<_> = all
            .iter()
            .filter(|g| {
                let mut moved: Vec<Tabloid> = reference.iter().map(|t| t.act(g)).collect();
                moved.sort();
                moved.iter().zip(&reference).all(|(a, b)| &a == b)
            })
            .cloned()
            .collect();
        if BigUint::from(stab.len()) * BigUint::from(hits.len()) != crate::arith::factorial(n) {
            return fail(format!("pattern set is not a single orbit at {l}, p={p}"));
        }
        // stabilizer conjugate to the Young subgroup S_{q̄ ∪ (p)}
        let mu = q.union(&Composition::new(vec![p]));
        let young = young_subgroup_elements(&mu, n as usize, caps).map_err(lift)?;
        if !conjugate_element_sets(&stab, &young, n as usize, caps).map_err(lift)? {
            return fail(format!("pattern stabilizer not conjugate to S_{mu} at {l}"));
        }
    }
    Ok(())
}

// Size-k index multisets (non-decreasing) whose rowwise common
// intersections have exactly the target sizes.
fn collect_pattern_multisets(
    tabloids: &[Tabloid],
    target: &[u64],
    k: usize,
    lo: usize,
    multiset: &mut Vec<usize>,
    hits: &mut Vec<Vec<usize>>,
) {
    if multiset.len() == k {
        let phi_matches = (0..target.len()).all(|row| {
            let first = &tabloids[multiset[0]].rows()[row];
            let common = first
                .iter()
                .filter(|x| {
                    multiset[1..]
                        .iter()
                        .all(|&j| tabloids[j].rows()[row].contains(x))
                })
                .count() as u64;
            common == target[row]
        });
        if phi_matches {
            hits.push(multiset.clone());
        }
        return;
    }
    for i in lo..tabloids.len() {
        multiset.push(i);
        collect_pattern_multisets(tabloids, target, k, i, multiset, hits);
        multiset.pop();
    }
}

fn young_subgroup_elements(mu: &Partition, n: usize, caps: &Caps) -> Result<Vec<crate::tabloids::Permutation>> {
    let mut gens = Vec::new();
    let mut next = 1usize;
    for &part in mu.parts() {
        for k in 0..part.saturating_sub(1) as usize {
            gens.push(crate::tabloids::Permutation::from_cycles(
                n,
                &[vec![next + k, next + k + 1]],
            )?);
        }
        next += part as usize;
    }
    subgroup_closure(&gens, n, caps)
}

/// Every maximal-rank elementary abelian subgroup (rank n/p, for p | n) is
/// conjugate to E_{n/p} when p > 2, and to some K_ℓ × H_ℓ when p = 2.
pub fn check_max_rank_shapes(n: u64, p: u64, caps: &Caps) -> Check {
    if n % p != 0 {
        return Ok(());
    }
    let b = (n / p) as usize;
    let mut references = Vec::new();
    if p > 2 {
        references.push(standard_subgroup(n as usize, p, StandardSubgroup::E, b, caps).map_err(lift)?);
    } else {
        for ell in 0..=(n / 4) as usize {
            references.push(k_times_h(n as usize, ell, caps).map_err(lift)?);
        }
    }
    for group in elementary_abelian_subgroups(n as usize, p, caps).map_err(lift)? {
        if group.rank() != b as u64 {
            continue;
        }
        let mut matched = false;
        for reference in &references {
            if conjugate_groups(&group, reference, caps).map_err(lift)? {
                matched = true;
                break;
            }
        }
        if !matched {
            return fail(format!(
                "a rank-{b} elementary abelian subgroup matches no reference shape at n={n}, p={p}"
            ));
        }
    }
    Ok(())
}

/// An exterior power classified as indecomposable spans a single S_n-orbit
/// of basis vectors, and the isomorphism labels carry consistent data.
pub fn check_classification(n: u64, p: u64, a_max: u64, caps: &Caps) -> Check {
    use num_traits::ToPrimitive;
    for l in partitions_of(n) {
        let d = dim_perm_module(&Composition::from(&l));
        let d_small = match d.to_u64() {
            Some(v) => v,
            None => continue,
        };
        for a in 2..=a_max.min(d_small) {
            let label = classify_ext_power(&l, a, p).map_err(lift)?;
            let orbits = count_power_orbits(&l, a, PowerKind::Ext, caps).map_err(lift)?;
            if label != ModuleLabel::Decomposable && orbits != BigUint::from(1u32) {
                return fail(format!(
                    "Λ^{a}M^{l} classified {label} but has {orbits} basis orbits (p={p})"
                ));
            }
            if a == d_small
                && !matches!(label, ModuleLabel::Trivial | ModuleLabel::Sign)
            {
                return fail(format!("top power of M^{l} must be trivial or sign, got {label}"));
            }
            match &label {
                ModuleLabel::Young { alpha } => {
                    if alpha.size() != n {
                        return fail(format!("Young label size mismatch at {l}, a={a}"));
                    }
                }
                ModuleLabel::SignedYoung { alpha, beta }
                    if alpha.size() + beta.size() != n || beta.size() % p != 0 =>
                {
                    return fail(format!("signed label invalid at {l}, a={a}"));
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// The distinguished symmetric-power partition is a Young-summand label of
/// the right permutation module and has the right Young complexity; every
/// exterior-square partition has the right Young complexity.
pub fn check_thm_b(n_max: u64, a_max: u64, primes: &[u64], caps: &Caps) -> Check {
    for n in 1..=n_max {
        for l in partitions_of(n) {
            for &p in primes {
                for a in 2..=a_max {
                    let mu = thm_b_sym_partition(&l, a, p).map_err(lift)?;
                    let q = crate::young::thm_b_quantities(&l, a, p).map_err(lift)?;
                    let eta = q
                        .lambda_a
                        .union(&Composition::from(&Partition::rect(p, q.d_la as usize)));
                    if !donkin_test(&mu, &eta, p, caps).map_err(lift)? {
                        return fail(format!("Y^{mu} not a summand of M^{eta} ({l}, a={a}, p={p})"));
                    }
                    let young_c = complexity_young(&mu, p).map_err(lift)?;
                    let power_c = complexity_sym_power(&l, a, p).map_err(lift)?;
                    if young_c != power_c {
                        return fail(format!(
                            "c(Y^{mu}) = {young_c} ≠ c(S^{a}M^{l}) = {power_c} at p={p}"
                        ));
                    }
                }
                if l.len() >= 2 {
                    let target = complexity_ext_square(&l, p).map_err(lift)?;
                    let mus = thm_b_ext_partitions(&l, p, caps).map_err(lift)?;
                    if mus.is_empty() {
                        return fail(format!("no exterior-square partition found for {l}, p={p}"));
                    }
                    for mu in mus {
                        let young_c = complexity_young(&mu, p).map_err(lift)?;
                        if young_c != target {
                            return fail(format!(
                                "c(Y^{mu}) = {young_c} ≠ c(Λ²M^{l}) = {target} at p={p}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Y^λ | M^λ always.
pub fn check_donkin_self(n_max: u64, primes: &[u64], caps: &Caps) -> Check {
    for n in 1..=n_max {
        for l in partitions_of(n) {
            for &p in primes {
                if !donkin_test(&l, &l, p, caps).map_err(lift)? {
                    return fail(format!("Y^{l} ∤ M^{l} at p={p}"));
                }
            }
        }
    }
    Ok(())
}

fn report(name: &str, outcome: Check) -> CheckReport {
    match outcome {
        Ok(()) => CheckReport { name: name.to_string(), pass: true, detail: String::new() },
        Err(detail) => CheckReport { name: name.to_string(), pass: false, detail },
    }
}

/// Runs the full battery with every degree-indexed check at degrees
/// 2..=n_max and p ∈ {2, 3}. Intended scale is n_max ≤ 6.
pub fn run_battery(n_max: u64, caps: &Caps) -> Vec<CheckReport> {
    let primes = [2u64, 3, 5];
    let small_primes = [2u64, 3];
    let mut out = vec![
        report("p-adic round-trip", check_padic_roundtrip(n_max.max(12), &primes)),
        report("p-adic uniqueness", check_padic_uniqueness(n_max.min(12), &primes)),
        report("dominance partial order", check_dominance_partial_order(n_max.max(8))),
        report("q/r split identities", check_qr_split(n_max.max(12), &primes)),
        report("s(λ) Scott membership", check_s_lambda(n_max.max(10), &primes, caps)),
        report("Donkin self-membership", check_donkin_self(n_max.max(8), &small_primes, caps)),
        report(
            "distinguished-partition complexities",
            check_thm_b(n_max, 6, &small_primes, caps),
        ),
    ];
    for n in 2..=n_max {
        out.push(report(
            &format!("double cosets = matrices (n={n})"),
            check_double_cosets(n, caps),
        ));
        for p in small_primes {
            out.push(report(
                &format!("max-complexity pattern orbit (n={n}, p={p})"),
                check_max_complexity_orbit(n, p, caps),
            ));
            out.push(report(
                &format!("orbit-stabilizer (n={n}, p={p})"),
                check_orbit_stabilizer(n, p, caps),
            ));
            out.push(report(
                &format!("fixed-point routes (n={n}, p={p})"),
                check_fixed_point_routes(n, p, caps),
            ));
            out.push(report(
                &format!("Brauer monotonicity (n={n}, p={p})"),
                check_brauer_monotonicity(n, p, 4, caps),
            ));
            out.push(report(
                &format!("complexity vs oracle (n={n}, p={p})"),
                check_complexity_vs_oracle(n, p, caps),
            ));
            out.push(report(
                &format!("square orbits and hom dims (n={n}, p={p})"),
                check_square_orbits(n, p, caps),
            ));
            out.push(report(
                &format!("Scott keys vs conjugacy (n={n}, p={p})"),
                check_scott_keys_vs_conjugacy(n, p, caps),
            ));
            out.push(report(
                &format!("P_M vs pair stabilizers (n={n}, p={p})"),
                check_pm_vs_stabilizers(n, p, caps),
            ));
            out.push(report(
                &format!("maximal-rank shapes (n={n}, p={p})"),
                check_max_rank_shapes(n, p, caps),
            ));
            out.push(report(
                &format!("classification vs orbits (n={n}, p={p})"),
                check_classification(n, p, 6, caps),
            ));
        }
    }
    out
}
