//! Projectivity tests for S^a M^λ and Λ^a M^λ and the complete
//! indecomposability classification of exterior powers.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, multinomial};
use crate::brauer::m_values;
use crate::caps::Caps;
use crate::error::{domain, Result};
use crate::partitions::{Composition, Partition};
use crate::tabloids::dim_perm_module;

/// What an indecomposable power is isomorphic to, or `Decomposable`.
///
/// `SignedYoung(alpha, beta)` is an opaque label: the pair is stored exactly
/// as written, with the second entry the one-part partition (pb) (empty when
/// b = 0); no signed-module structure is modeled behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ModuleLabel {
    Trivial,
    Sign,
    Young { alpha: Partition },
    SignedYoung { alpha: Partition, beta: Partition },
    PermModule { alpha: Partition },
    Decomposable,
    NotApplicable,
}

impl std::fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModuleLabel::Trivial => write!(f, "trivial module F"),
            ModuleLabel::Sign => write!(f, "sign module sgn"),
            ModuleLabel::Young { alpha } => write!(f, "Young module Y^{alpha}"),
            ModuleLabel::SignedYoung { alpha, beta } => {
                write!(f, "signed Young module Y({alpha}|{beta})")
            }
            ModuleLabel::PermModule { alpha } => write!(f, "permutation module M^{alpha}"),
            ModuleLabel::Decomposable => write!(f, "decomposable"),
            ModuleLabel::NotApplicable => write!(f, "not applicable"),
        }
    }
}

/// S^a M^λ is projective iff n < p, or p ∤ a and every part of λ is < p.
pub fn is_projective_sym_power(l: &Partition, a: u64, p: u64) -> bool {
    let n = l.size();
    n < p || (a % p != 0 && l.parts().iter().all(|&x| x < p))
}

/// Λ^a M^λ is projective iff for every i ≤ ⌊n/p⌋ and every decomposition
/// a = x + py with x, y ≥ 0, either m_{λ,i} < x or m̄_{λ,i} < py.
/// Requires 2 ≤ a ≤ dim M^λ.
pub fn is_projective_ext_power(l: &Partition, a: u64, p: u64, caps: &Caps) -> Result<bool> {
    if a < 2 {
        return domain(format!("exterior power needs a ≥ 2, got {a}"));
    }
    let d = dim_perm_module(&Composition::from(l));
    if BigUint::from(a) > d {
        return domain(format!("Λ^{a} needs a ≤ dim M^λ = {d}"));
    }
    let n = l.size();
    if n < p {
        return Ok(true);
    }
    for (m, m_bar) in m_values(l, p, caps)? {
        for y in 0..=a / p {
            let x = a - p * y;
            let m_ge_x = m >= BigUint::from(x);
            let bar_ge_py = m_bar >= BigUint::from(p * y);
            if m_ge_x && bar_ge_py {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The count f^λ of tabloids moved by a transposition: dim M^λ minus the
/// number of tabloids with 1 and 2 in the same row (n! when λ = (1^n)).
pub fn f_lambda(l: &Partition) -> BigUint {
    let n = l.size();
    let parts = l.parts();
    let c = parts.iter().rposition(|&x| x >= 2).map_or(0, |i| i + 1);
    if c == 0 {
        return factorial(n);
    }
    let mut fixed = BigUint::ZERO;
    for i in 0..c {
        // tabloids with a chosen pair in row i: multinomial of λ with λ_i − 2
        let mut reduced: Vec<u64> = parts.to_vec();
        reduced[i] -= 2;
        fixed += multinomial(&reduced);
    }
    dim_perm_module(&Composition::from(l)) - fixed
}

/// S^a M^λ (a ≥ 2) is indecomposable iff λ = (n).
pub fn is_indecomposable_sym_power(l: &Partition, _a: u64) -> bool {
    l.len() == 1
}

// Gill-type congruence for two-row shapes at p = 2: with 2^m ≤ n < 2^{m+1}
// and 2^{i-1} ≤ k < 2^i, require i ≤ m and k ≡ (n − 2^m)/2 (mod 2^{i-1}).
fn two_row_congruence(n: u64, k: u64) -> bool {
    debug_assert!(n % 2 == 0 && k >= 1);
    let m = 63 - n.leading_zeros() as u64;
    if m == 0 {
        return false;
    }
    let i = 64 - k.leading_zeros() as u64;
    if i > m {
        return false;
    }
    let modulus = 1u64 << (i - 1);
    k % modulus == ((n - (1 << m)) / 2) % modulus
}

/// Classifies Λ^a M^λ for 2 ≤ a ≤ d = dim M^λ.
///
/// The outcome is `Decomposable` except in four situations:
/// the top power a = d (one-dimensional, trivial or sign); the p = 2
/// two-row shapes at a = d − 1 satisfying the two-row congruence (a Young
/// module); and λ = (n − 1, 1) with a < n, where the power is a signed
/// Young module for odd p dividing n and a Young module for p = 2 with the
/// congruence on min{n − a, a}.
pub fn classify_ext_power(l: &Partition, a: u64, p: u64) -> Result<ModuleLabel> {
    if a < 2 {
        return domain(format!("exterior power needs a ≥ 2, got {a}"));
    }
    let d = dim_perm_module(&Composition::from(l));
    if BigUint::from(a) > d {
        return domain(format!("Λ^{a} needs a ≤ dim M^λ = {d}"));
    }
    let n = l.size();
    let parts = l.parts();

    if BigUint::from(a) == d {
        if p == 2 {
            return Ok(ModuleLabel::Trivial);
        }
        let f = f_lambda(l);
        return Ok(if (&f % 4u32) == BigUint::ZERO {
            ModuleLabel::Trivial
        } else {
            ModuleLabel::Sign
        });
    }

    let is_hook_two_row = l.len() == 2 && parts[1] == 1; // λ = (n-1, 1)
    if is_hook_two_row {
        // here d = n and a < d, so a < n
        if p > 2 {
            if n % p == 0 {
                let r = a % p;
                let b = a / p;
                let mut alpha = vec![n - a];
                alpha.extend(std::iter::repeat_n(1, r as usize));
                let beta = Partition::row(p * b);
                return Ok(ModuleLabel::SignedYoung {
                    alpha: Partition::new(alpha)?,
                    beta,
                });
            }
            return Ok(ModuleLabel::Decomposable);
        }
        if n % 2 == 0 && two_row_congruence(n, (n - a).min(a)) {
            let shape = Composition::new(vec![n - a, a]).rearrange();
            return Ok(ModuleLabel::Young { alpha: shape });
        }
        return Ok(ModuleLabel::Decomposable);
    }

    if p == 2
        && n % 2 == 0
        && l.len() == 2
        && BigUint::from(a) == &d - 1u32
        && two_row_congruence(n, parts[1])
    {
        return Ok(ModuleLabel::Young { alpha: l.clone() });
    }

    Ok(ModuleLabel::Decomposable)
}
