//! Young-module summand membership, the Young–Scott test, and the
//! distinguished-partition constructions attached to symmetric powers,
//! exterior squares and p-th powers.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, nu_p};
use crate::caps::Caps;
use crate::complexity::{complexity_ext_square, complexity_young};
use crate::error::{domain, resource, Result};
use crate::partitions::{
    dominance_leq, padic_expansion, partitions_of, qr_split, rank_young, s_lambda, Composition,
    Partition,
};

/// Y^ν | M^μ (Donkin's criterion): with ν = Σ pⁱ ν(i) the p-adic expansion,
/// true iff there are compositions σ[i] of |ν(i)| with rearrangement
/// dominated by ν(i) whose weighted componentwise sum Σ pⁱ σ[i] is exactly μ.
///
/// Decided by backtracking over the ways to split each part of μ as
/// Σ pⁱ c_i. The per-layer dominance constraints are maintained
/// incrementally as budgets Σ_j max(c_{i,j} − t, 0) ≤ Σ_s max(ν(i)_s − t, 0)
/// for every threshold t, which makes the prune exact; a node cap guards
/// pathological inputs.
pub fn donkin_test(nu: &Partition, mu: &Partition, p: u64, caps: &Caps) -> Result<bool> {
    if nu.size() != mu.size() {
        return domain(format!(
            "summand test compares partitions of equal size, got |{nu}| ≠ |{mu}|"
        ));
    }
    if nu.is_empty() {
        return Ok(true);
    }
    let expansion = padic_expansion(nu, p)?;
    let layers: Vec<&[u64]> = expansion.layers().iter().map(|l| l.parts()).collect();
    // budgets[i][t] = Σ_s max(ν(i)_s − t, 0) for 0 ≤ t < ν(i)_1
    let mut budgets: Vec<Vec<i64>> = layers
        .iter()
        .map(|parts| {
            let cap = parts.first().copied().unwrap_or(0);
            (0..cap)
                .map(|t| parts.iter().map(|&s| s.saturating_sub(t) as i64).sum())
                .collect()
        })
        .collect();
    let caps_per_layer: Vec<u64> =
        layers.iter().map(|parts| parts.first().copied().unwrap_or(0)).collect();
    let powers: Vec<u64> = (0..layers.len()).scan(1u64, |acc, _| {
        let v = *acc;
        *acc *= p;
        Some(v)
    })
    .collect();

    let mut nodes = 0u64;
    let found = search_parts(
        mu.parts(),
        0,
        &powers,
        &caps_per_layer,
        &mut budgets,
        &mut nodes,
        caps.donkin_nodes,
    )?;
    Ok(found)
}

fn search_parts(
    mu: &[u64],
    j: usize,
    powers: &[u64],
    layer_caps: &[u64],
    budgets: &mut Vec<Vec<i64>>,
    nodes: &mut u64,
    node_cap: u64,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > node_cap {
        return resource(format!("summand search passed {node_cap} nodes"));
    }
    if j == mu.len() {
        // all layer sizes must be consumed exactly
        return Ok(budgets.iter().all(|b| b.first().is_none_or(|&t0| t0 == 0)));
    }
    split_part(mu, j, mu[j], powers.len(), powers, layer_caps, budgets, nodes, node_cap)
}

#[allow(clippy::too_many_arguments)]
fn split_part(
    mu: &[u64],
    j: usize,
    rem: u64,
    layer: usize,
    powers: &[u64],
    layer_caps: &[u64],
    budgets: &mut Vec<Vec<i64>>,
    nodes: &mut u64,
    node_cap: u64,
) -> Result<bool> {
    if layer == 0 {
        if rem != 0 {
            return Ok(false);
        }
        return search_parts(mu, j + 1, powers, layer_caps, budgets, nodes, node_cap);
    }
    let i = layer - 1;
    let max_c = layer_caps[i].min(rem / powers[i]);
    for c in 0..=max_c {
        let mut ok = true;
        for t in 0..c {
            budgets[i][t as usize] -= (c - t) as i64;
            if budgets[i][t as usize] < 0 {
                ok = false;
            }
        }
        if ok
            && split_part(
                mu,
                j,
                rem - c * powers[i],
                layer - 1,
                powers,
                layer_caps,
                budgets,
                nodes,
                node_cap,
            )?
        {
            for t in 0..c {
                budgets[i][t as usize] += (c - t) as i64;
            }
            return Ok(true);
        }
        for t in 0..c {
            budgets[i][t as usize] += (c - t) as i64;
        }
    }
    Ok(false)
}

/// All ν ⊢ n with Y^ν | M^μ: exactly the ν dominating μ that pass the
/// membership test.
pub fn list_young_summands(mu: &Partition, p: u64, caps: &Caps) -> Result<BTreeSet<Partition>> {
    if !is_prime(p) {
        return domain(format!("p = {p} is not prime"));
    }
    let mut out = BTreeSet::new();
    for nu in partitions_of(mu.size()) {
        if dominance_leq(mu, &nu)? && donkin_test(&nu, mu, p, caps)? {
            out.insert(nu);
        }
    }
    Ok(out)
}

/// True iff Y^λ is a Scott module: every p-adic layer has the shape
/// ((p−1)^m, b) with 0 ≤ b < p − 1.
pub fn is_scott_partition(l: &Partition, p: u64) -> Result<bool> {
    if l.is_empty() {
        return Ok(true);
    }
    let expansion = padic_expansion(l, p)?;
    Ok(expansion.layers().iter().all(|layer| {
        let parts = layer.parts();
        parts.is_empty()
            || (parts[..parts.len() - 1].iter().all(|&x| x == p - 1)
                && parts[parts.len() - 1] < p)
    }))
}

/// The quantities d_{λ,a}, e_{λ,a}, r_{λ,a} and λ^a.
///
/// d is min{ν_p(a), ⌊n/p⌋ − rank(S_λ)}; e = n − pd; r_{λ,a} is r_λ with pd
/// boxes removed right-to-left, bottom-to-top; λ^a = q_λ + r_{λ,a} is a
/// composition of e.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThmBQuantities {
    pub d_la: u64,
    pub e_la: u64,
    pub r_la_a: Composition,
    pub lambda_a: Composition,
}

pub fn thm_b_quantities(l: &Partition, a: u64, p: u64) -> Result<ThmBQuantities> {
    if a < 2 {
        return domain(format!("power needs a ≥ 2, got {a}"));
    }
    if l.is_empty() {
        return domain("quantities need a nonempty partition");
    }
    if !is_prime(p) {
        return domain(format!("p = {p} is not prime"));
    }
    let n = l.size();
    let d = (nu_p(a, p) as u64).min(n / p - rank_young(l, p));
    let e = n - p * d;
    let (q, r) = qr_split(l, p);
    let mut r_parts: Vec<u64> = r.parts().to_vec();
    let mut to_remove = p * d;
    for part in r_parts.iter_mut().rev() {
        let take = to_remove.min(*part);
        *part -= take;
        to_remove -= take;
        if to_remove == 0 {
            break;
        }
    }
    debug_assert_eq!(to_remove, 0);
    let r_la_a = Composition::new(r_parts).trim();
    let lambda_a = q.sum_with(&r_la_a);
    Ok(ThmBQuantities { d_la: d, e_la: e, r_la_a, lambda_a })
}

/// The partition μ = s(λ^a ∪ (p^d)) with Y^μ | S^a M^λ and
/// c(Y^μ) = c(S^a M^λ).
pub fn thm_b_sym_partition(l: &Partition, a: u64, p: u64) -> Result<Partition> {
    let q = thm_b_quantities(l, a, p)?;
    let eta = q.lambda_a.union(&Composition::from(&Partition::rect(p, q.d_la as usize)));
    s_lambda(&eta, p)
}

// (λ_1, ..., λ_i − k, ..., λ_j − k, ...) ∪ tail, dropping zeros.
fn reduce_two(l: &Partition, i: usize, j: usize, k: u64, tail: &[u64]) -> Partition {
    let mut parts: Vec<u64> = l.parts().to_vec();
    parts[i] -= k;
    parts[j] -= k;
    parts.extend_from_slice(tail);
    Composition::new(parts).rearrange()
}

fn fold_qr(x: &Partition, p: u64) -> Result<Partition> {
    let (q, r) = qr_split(x, p);
    Ok(Composition::from(&r.rearrange())
        .sum_with(&Composition::from(&q.rearrange()))
        .rearrange())
}

/// All partitions μ with Y^μ | Λ² M^λ and c(Y^μ) = c(Λ² M^λ) produced by
/// the case analysis over index pairs. Requires λ ≠ (n).
///
/// For p > 2 each admissible pair (u, v) contributes r̄ + q̄ of the shape
/// obtained by stripping one box (when λ_u < p) or one p-strip (when
/// λ_v ≥ p) from rows u and v and appending (1²) or (p, p); when no pair is
/// admissible λ is two-row with λ_1 ≥ p > λ_2 and a single μ is built from
/// (λ_1 − 1, λ_2 − 1) ∪ (1²). For p = 2 with an odd part the result is every
/// Young summand of the admissible M^{λ_{i,j}} whose Young complexity
/// matches c(Λ² M^λ); with all parts even it is every s(λ_{i,j}).
pub fn thm_b_ext_partitions(l: &Partition, p: u64, caps: &Caps) -> Result<BTreeSet<Partition>> {
    if l.len() < 2 {
        return domain(format!("exterior square undefined for {l}"));
    }
    if !is_prime(p) {
        return domain(format!("p = {p} is not prime"));
    }
    let parts = l.parts();
    let ell = l.len();
    let mut out = BTreeSet::new();

    if p > 2 {
        for u in 0..ell {
            for v in u + 1..ell {
                if parts[u] < p {
                    let alpha = reduce_two(l, u, v, 1, &[1, 1]);
                    out.insert(fold_qr(&alpha, p)?);
                } else if parts[v] >= p {
                    let beta = reduce_two(l, u, v, p, &[p, p]);
                    out.insert(fold_qr(&beta, p)?);
                }
            }
        }
        if out.is_empty() {
            // ℓ = 2 with λ_1 ≥ p > λ_2
            let gamma = reduce_two(l, 0, 1, 1, &[1, 1]);
            out.insert(if parts[0] % p != 0 { fold_qr(&gamma, p)? } else { gamma });
        }
        return Ok(out);
    }

    let odd_parts = parts.iter().filter(|&&x| x % 2 != 0).count();
    if odd_parts > 0 {
        let target = complexity_ext_square(l, 2)?;
        for i in 0..ell {
            for j in i + 1..ell {
                if parts[i] % 2 == 0 && parts[j] % 2 == 0 {
                    continue;
                }
                let shape = reduce_two(l, i, j, 1, &[2]);
                for nu in list_young_summands(&shape, 2, caps)? {
                    if complexity_young(&nu, 2)? == target {
                        out.insert(nu);
                    }
                }
            }
        }
    } else {
        for i in 0..ell {
            for j in i + 1..ell {
                let shape = reduce_two(l, i, j, 2, &[4]);
                out.insert(s_lambda(&shape, 2)?);
            }
        }
    }
    Ok(out)
}

/// For λ with r̄_λ = (p−1, 1): the partition μ = q̄_λ ∪ (p) and the Young
/// labels ν with Y^ν | M^μ. Any maximal-complexity indecomposable summand
/// of S^p M^λ (or of Λ² M^λ when p = 2) is one of these Y^ν.
pub fn thm_c_partitions(
    l: &Partition,
    p: u64,
    caps: &Caps,
) -> Result<(Partition, BTreeSet<Partition>)> {
    if !is_prime(p) {
        return domain(format!("p = {p} is not prime"));
    }
    let (q, r) = qr_split(l, p);
    let r_bar = r.rearrange();
    let expected = Partition::new(vec![p - 1, 1])?;
    if r_bar != expected {
        return domain(format!(
            "this construction requires r̄_λ = ({},1), got {r_bar} for λ = {l}",
            p - 1
        ));
    }
    let mu = q.union(&Composition::new(vec![p]));
    let nus = list_young_summands(&mu, p, caps)?;
    Ok((mu, nus))
}
