//! Closed-form complexities of M^λ, Y^λ, S^a M^λ and Λ² M^λ, plus the
//! generic min{ν_p(a), r} value for powers of a projective module.

use crate::error::{domain, Result};
use crate::partitions::{padic_expansion, qr_split, rank_young, Partition};

pub use crate::arith::nu_p;

/// c(M^λ) = rank(S_λ) = Σ ⌊λ_i/p⌋.
pub fn complexity_perm(l: &Partition, p: u64) -> u64 {
    rank_young(l, p)
}

/// c(Y^λ) = (n − |λ(0)|)/p, read off the p-adic expansion.
pub fn complexity_young(l: &Partition, p: u64) -> Result<u64> {
    let expansion = padic_expansion(l, p)?;
    let n = l.size();
    Ok((n - expansion.layer(0).size()) / p)
}

/// c(S^a M^λ) for a ≥ 2.
pub fn complexity_sym_power(l: &Partition, a: u64, p: u64) -> Result<u64> {
    if a < 2 {
        return domain(format!("symmetric power needs a ≥ 2, got {a}"));
    }
    if l.is_empty() {
        return domain("complexity of a power needs a nonempty partition");
    }
    let r = rank_young(l, p);
    let u = nu_p(a, p) as u64;
    let b = l.size() / p;
    Ok(if u == 0 {
        r
    } else if u + r <= b {
        r + u
    } else {
        b
    })
}

/// c(Λ² M^λ). Undefined for λ = (n): dim M^{(n)} = 1.
pub fn complexity_ext_square(l: &Partition, p: u64) -> Result<u64> {
    if l.len() < 2 {
        return domain(format!("exterior square undefined for {l}"));
    }
    let r = rank_young(l, p);
    if p == 2 {
        let (_, r_l) = qr_split(l, 2);
        Ok(if r_l.nonzero_len() >= 2 { r + 1 } else { r })
    } else {
        let parts = l.parts();
        let two_row_drop = l.len() == 2 && parts[0] % p == 0 && parts[1] < p;
        Ok(if two_row_drop { r - 1 } else { r })
    }
}

/// c(S^a P) = c(Λ^a P) = min{ν_p(a), r} for a nonzero projective module
/// over any group of p-rank r. Pure arithmetic.
pub fn complexity_projective_power(r: u64, a: u64, p: u64) -> Result<u64> {
    if a < 2 {
        return domain(format!("power needs a ≥ 2, got {a}"));
    }
    Ok((nu_p(a, p) as u64).min(r))
}
