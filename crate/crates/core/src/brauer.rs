//! Dimension counting for Brauer quotients of M^λ and of its symmetric and
//! exterior powers with respect to p-subgroups.
//!
//! For a p-permutation module with permuted basis B, the Brauer quotient
//! with respect to P is spanned by the P-fixed basis vectors. For S^a and
//! Λ^a the permuted bases are the size-a multisets (resp. sets) of basis
//! vectors, so the quotient dimensions are counts of P-stable multisets and
//! sets. Stability means the (multi)set is a union of whole P-orbits with
//! multiplicities, which reduces every count here to integer compositions
//! over the orbit-size multiset; nothing of size C(d+a-1, a) is ever
//! materialized.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::error::{domain, Result};
use crate::partitions::{Composition, Partition};
use crate::tabloids::{
    dim_perm_module, enumerate_tabloids, standard_subgroup, GeneratedPSubgroup, StandardSubgroup,
    Tabloid,
};

fn big_binomial(n: &BigUint, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        let i_big = BigUint::from(i);
        if *n <= i_big {
            return BigUint::zero();
        }
        acc *= n - &i_big;
        acc /= i + 1;
    }
    acc
}

fn big_multiset(n: &BigUint, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n.is_zero() {
        return BigUint::zero();
    }
    big_binomial(&(n + BigUint::from(k - 1)), k)
}

/// Counts the ways to insert orbits of the given sizes into the rows of
/// `shape` so that every row is filled exactly. Orbits of equal size are
/// interchangeable, so the count is a product of multinomial choices summed
/// over the distributions; this is also |T(λ)^P| when the sizes are the
/// point-orbit sizes of P.
pub fn orbit_insertion_count(shape: &Composition, orbit_sizes: &[u64]) -> BigUint {
    let mut by_size: BTreeMap<u64, u64> = BTreeMap::new();
    for &s in orbit_sizes {
        *by_size.entry(s).or_insert(0) += 1;
    }
    let sizes: Vec<(u64, u64)> = by_size.into_iter().collect();
    let mut remaining: Vec<u64> = shape.parts().to_vec();
    let mut memo: HashMap<(usize, Vec<u64>), BigUint> = HashMap::new();
    insertion_rec(&sizes, 0, &mut remaining, &mut memo)
}

fn insertion_rec(
    sizes: &[(u64, u64)],
    idx: usize,
    remaining: &mut Vec<u64>,
    memo: &mut HashMap<(usize, Vec<u64>), BigUint>,
) -> BigUint {
    if idx == sizes.len() {
        return if remaining.iter().all(|&r| r == 0) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let key = (idx, remaining.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (size, count) = sizes[idx];
    let mut total = BigUint::zero();
    // distribute `count` orbits of `size` over the rows
    #[allow(clippy::too_many_arguments)]
    fn distribute(
        sizes: &[(u64, u64)],
        idx: usize,
        row: usize,
        left: u64,
        size: u64,
        choose_from: u64,
        factor: BigUint,
        remaining: &mut Vec<u64>,
        memo: &mut HashMap<(usize, Vec<u64>), BigUint>,
        total: &mut BigUint,
    ) {
        if row == remaining.len() {
            if left == 0 {
                *total += factor * insertion_rec(sizes, idx + 1, remaining, memo);
            }
            return;
        }
        let max_here = (remaining[row] / size).min(left);
        for k in 0..=max_here {
            let f = factor.clone() * crate::arith::binomial(choose_from, k);
            remaining[row] -= k * size;
            distribute(
                sizes,
                idx,
                row + 1,
                left - k,
                size,
                choose_from - k,
                f,
                remaining,
                memo,
                total,
            );
            remaining[row] += k * size;
        }
    }
    distribute(
        sizes,
        idx,
        0,
        count,
        size,
        count,
        BigUint::one(),
        remaining,
        memo,
        &mut total,
    );
    memo.insert(key, total.clone());
    total
}

/// dim M^λ(P) = |T(λ)^P|, the number of tabloids whose rows are unions of
/// P-orbits.
pub fn dim_brauer_perm(l: &Partition, group: &GeneratedPSubgroup) -> Result<BigUint> {
    if l.size() as usize != group.degree() {
        return domain(format!(
            "partition of {} does not match group degree {}",
            l.size(),
            group.degree()
        ));
    }
    let sizes: Vec<u64> = group.point_orbits().iter().map(|o| o.len() as u64).collect();
    Ok(orbit_insertion_count(&Composition::from(l), &sizes))
}

/// Sizes of the P-orbits on the tabloids of shape λ.
pub fn tabloid_orbit_sizes(
    l: &Partition,
    group: &GeneratedPSubgroup,
    caps: &Caps,
) -> Result<Vec<u64>> {
    let shape = Composition::from(l);
    let tabloids = enumerate_tabloids(&shape, caps)?;
    let index: HashMap<&Tabloid, usize> =
        tabloids.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut seen = vec![false; tabloids.len()];
    let mut sizes = Vec::new();
    for start in 0..tabloids.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut frontier = vec![start];
        let mut size = 1u64;
        while let Some(i) = frontier.pop() {
            for g in group.generators() {
                let j = index[&tabloids[i].act(g)];
                if !seen[j] {
                    seen[j] = true;
                    size += 1;
                    frontier.push(j);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    Ok(sizes)
}

fn grouped(sizes: &[u64]) -> Vec<(u64, u64)> {
    let mut by_size: BTreeMap<u64, u64> = BTreeMap::new();
    for &s in sizes {
        *by_size.entry(s).or_insert(0) += 1;
    }
    by_size.into_iter().collect()
}

/// Number of P-stable multisets of total size `a` over orbits of the given
/// sizes: the x^a coefficient of ∏_s (1 - x^s)^{-c_s}.
pub fn stable_multiset_count(orbit_sizes: &[u64], a: u64) -> BigUint {
    let a = a as usize;
    let mut dp = vec![BigUint::zero(); a + 1];
    dp[0] = BigUint::one();
    for (size, count) in grouped(orbit_sizes) {
        let s = size as usize;
        let mut next = vec![BigUint::zero(); a + 1];
        for j in 0..=a {
            if dp[j].is_zero() {
                continue;
            }
            let mut m = 0u64;
            while j + (m as usize) * s <= a {
                let ways = crate::arith::multiset_coefficient(count, m);
                next[j + m as usize * s] += &dp[j] * ways;
                m += 1;
            }
        }
        dp = next;
    }
    dp[a].clone()
}

/// Number of P-stable sets of total size `a`: the x^a coefficient of
/// ∏_s (1 + x^s)^{c_s}.
pub fn stable_set_count(orbit_sizes: &[u64], a: u64) -> BigUint {
    let a = a as usize;
    let mut dp = vec![BigUint::zero(); a + 1];
    dp[0] = BigUint::one();
    for (size, count) in grouped(orbit_sizes) {
        let s = size as usize;
        let mut next = vec![BigUint::zero(); a + 1];
        for j in 0..=a {
            if dp[j].is_zero() {
                continue;
            }
            let mut m = 0u64;
            while j + (m as usize) * s <= a && m <= count {
                let ways = crate::arith::binomial(count, m);
                next[j + m as usize * s] += &dp[j] * ways;
                m += 1;
            }
        }
        dp = next;
    }
    dp[a].clone()
}

/// dim (S^a M^λ)(P): the number of P-stable size-a multisets of tabloids,
/// equivalently C(f+a-1, a) plus the count of stable multisets whose support
/// is not fixed pointwise (f = dim M^λ(P)).
pub fn dim_brauer_sym_power(
    l: &Partition,
    a: u64,
    group: &GeneratedPSubgroup,
    caps: &Caps,
) -> Result<BigUint> {
    if l.size() as usize != group.degree() {
        return domain("partition size does not match group degree");
    }
    if group.is_trivial() {
        let d = dim_perm_module(&Composition::from(l));
        return Ok(big_multiset(&d, a));
    }
    let sizes = tabloid_orbit_sizes(l, group, caps)?;
    Ok(stable_multiset_count(&sizes, a))
}

/// dim (Λ^a M^λ)(P): the number of P-stable size-a sets of tabloids,
/// equivalently C(f, a) plus the count of stable sets not contained in the
/// fixed tabloids. Requires a ≤ dim M^λ.
pub fn dim_brauer_ext_power(
    l: &Partition,
    a: u64,
    group: &GeneratedPSubgroup,
    caps: &Caps,
) -> Result<BigUint> {
    if l.size() as usize != group.degree() {
        return domain("partition size does not match group degree");
    }
    let d = dim_perm_module(&Composition::from(l));
    if BigUint::from(a) > d {
        return domain(format!("Λ^{a} needs a ≤ dim M^λ = {d}"));
    }
    if group.is_trivial() {
        return Ok(big_binomial(&d, a));
    }
    let sizes = tabloid_orbit_sizes(l, group, caps)?;
    Ok(stable_set_count(&sizes, a))
}

/// The pairs (m_{λ,i}, m̄_{λ,i}) for i = 1..⌊n/p⌋, where m_{λ,i} is the
/// Brauer-quotient dimension with respect to the cyclic group F_i and
/// m̄_{λ,i} its complement in dim M^λ.
pub fn m_values(l: &Partition, p: u64, caps: &Caps) -> Result<Vec<(BigUint, BigUint)>> {
    let n = l.size();
    if n < p {
        return domain(format!("m-values need n ≥ p, got n = {n}, p = {p}"));
    }
    let d = dim_perm_module(&Composition::from(l));
    let b = (n / p) as usize;
    let mut out = Vec::with_capacity(b);
    for i in 1..=b {
        let f_i = standard_subgroup(n as usize, p, StandardSubgroup::F, i, caps)?;
        let m = dim_brauer_perm(l, &f_i)?;
        let complement = &d - &m;
        out.push((m, complement));
    }
    Ok(out)
}
