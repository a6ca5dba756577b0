//! Compositions, partitions and their exact arithmetic: dominance order,
//! p-adic expansions, the q/r digit splits, rearrangement, union, sum, the
//! p-rank of Young subgroups, and the Scott-partition construction `s(λ)`.
//!
//! A composition is any finite sequence of nonnegative integers; a partition
//! stores only strictly positive, non-increasing parts. The empty partition
//! of 0 is written `∅`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A finite sequence of nonnegative integers. Zero parts are kept; the sum
/// is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct Composition {
    parts: Vec<u64>,
    sum: u64,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Composition {
        let sum = parts.iter().sum();
        Composition { parts, sum }
    }

    pub fn empty() -> Composition {
        Composition::new(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.sum
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().filter(|&&x| x > 0).count()
    }

    /// Drop trailing zero parts.
    pub fn trim(&self) -> Composition {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition::new(parts)
    }

    /// The partition obtained by dropping zeros and sorting non-increasingly.
    pub fn rearrange(&self) -> Partition {
        let mut parts: Vec<u64> = self.parts.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts, sum: self.sum }
    }

    /// Componentwise sum, padding the shorter sequence with zeros.
    pub fn sum_with(&self, other: &Composition) -> Composition {
        let len = self.parts.len().max(other.parts.len());
        let parts = (0..len)
            .map(|i| {
                self.parts.get(i).copied().unwrap_or(0) + other.parts.get(i).copied().unwrap_or(0)
            })
            .collect();
        Composition::new(parts)
    }

    /// Scalar multiple `a·μ`.
    pub fn scale(&self, a: u64) -> Composition {
        Composition::new(self.parts.iter().map(|&x| a * x).collect())
    }

    /// `μ ∪ λ`: rearrangement of the concatenation.
    pub fn union(&self, other: &Composition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition::new(parts).rearrange()
    }
}

impl From<Vec<u64>> for Composition {
    fn from(parts: Vec<u64>) -> Self {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u64> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition::new(p.parts.clone())
    }
}

/// A partition: strictly positive non-increasing parts. `∅` is the unique
/// partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
    sum: u64,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Partition> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return domain(format!("parts not non-increasing: {:?}", parts));
            }
        }
        if parts.contains(&0) {
            return domain(format!("partition parts must be positive: {:?}", parts));
        }
        let sum = parts.iter().sum();
        Ok(Partition { parts, sum })
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new(), sum: 0 }
    }

    /// The one-row partition `(n)`; `∅` when n = 0.
    pub fn row(n: u64) -> Partition {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n], sum: n }
        }
    }

    /// The rectangle `(a^k)`.
    pub fn rect(a: u64, k: usize) -> Partition {
        if a == 0 || k == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![a; k], sum: a * k as u64 }
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.sum
    }

    /// Number of (nonzero) parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn union(&self, other: &Partition) -> Partition {
        Composition::from(self).union(&Composition::from(other))
    }

    /// True when the successive differences and the last part are all < p.
    pub fn is_p_restricted(&self, p: u64) -> bool {
        if self.parts.is_empty() {
            return true;
        }
        for w in self.parts.windows(2) {
            if w[0] - w[1] >= p {
                return false;
            }
        }
        *self.parts.last().unwrap() < p
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Partition> {
        Partition::new(parts)
    }
}

fn fmt_parts(parts: &[u64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "∅");
    }
    write!(f, "(")?;
    let mut i = 0;
    let mut first = true;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if !first {
            write!(f, ",")?;
        }
        first = false;
        if j - i >= 2 {
            write!(f, "{}^{}", parts[i], j - i)?;
        } else {
            write!(f, "{}", parts[i])?;
        }
        i = j;
    }
    write!(f, ")")
}

impl fmt::Display for Partition {
    /// Exponential form, e.g. `(4,2^2)`; `∅` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated decimal parts; "" or "∅" is the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            match piece.parse::<u64>() {
                Ok(v) => parts.push(v),
                Err(_) => return domain(format!("bad partition part {piece:?} in {s:?}")),
            }
        }
        Partition::new(parts)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            match piece.parse::<u64>() {
                Ok(v) => parts.push(v),
                Err(_) => return domain(format!("bad composition part {piece:?} in {s:?}")),
            }
        }
        Ok(Composition::new(parts))
    }
}

/// Dominance: true iff every prefix sum of `a` is at most the corresponding
/// prefix sum of `b`. Requires |a| = |b|.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return domain(format!(
            "dominance compares partitions of equal size, got |{a}| = {} and |{b}| = {}",
            a.size(),
            b.size()
        ));
    }
    let mut pa = 0u64;
    let mut pb = 0u64;
    for k in 0..a.parts.len().max(b.parts.len()) {
        pa += a.parts.get(k).copied().unwrap_or(0);
        pb += b.parts.get(k).copied().unwrap_or(0);
        if pa > pb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The p-adic expansion `λ = Σ pⁱ λ(i)` into p-restricted layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicExpansion {
    layers: Vec<Partition>,
    prime: u64,
}

impl PadicExpansion {
    /// Layer `λ(i)`; the empty partition past the top layer.
    pub fn layer(&self, i: usize) -> Partition {
        self.layers.get(i).cloned().unwrap_or_else(Partition::empty)
    }

    pub fn layers(&self) -> &[Partition] {
        &self.layers
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Componentwise `Σ pⁱ λ(i)`.
    pub fn reconstruct(&self) -> Partition {
        let mut acc = Composition::empty();
        let mut power = 1u64;
        for layer in &self.layers {
            acc = acc.sum_with(&Composition::from(layer).scale(power));
            power *= self.prime;
        }
        acc.rearrange()
    }
}

/// Computes the p-adic expansion of a nonempty partition.
///
/// Layer entries come from the base-p digits of the successive differences
/// d_j = λ_j − λ_{j+1}: the j-th part of λ(i) is the sum of the i-th digits
/// of d_j, d_{j+1}, .... Each layer is p-restricted by construction and the
/// layers reconstruct λ; uniqueness is exercised by the test suite.
pub fn padic_expansion(l: &Partition, p: u64) -> Result<PadicExpansion> {
    if !crate::arith::is_prime(p) {
        return domain(format!("p = {p} is not prime"));
    }
    if l.is_empty() {
        return domain("p-adic expansion needs a nonempty partition");
    }
    let ell = l.parts.len();
    let mut diffs: Vec<u64> = Vec::with_capacity(ell);
    for j in 0..ell {
        let next = if j + 1 < ell { l.parts[j + 1] } else { 0 };
        diffs.push(l.parts[j] - next);
    }
    let mut layers: Vec<Vec<u64>> = Vec::new();
    for (j, &d) in diffs.iter().enumerate() {
        let mut d = d;
        let mut i = 0;
        while d > 0 {
            let digit = d % p;
            d /= p;
            if digit > 0 {
                while layers.len() <= i {
                    layers.push(vec![0; ell]);
                }
                // digit_i(d_j) contributes to rows 1..=j of layer i
                for row in layers[i].iter_mut().take(j + 1) {
                    *row += digit;
                }
            }
            i += 1;
        }
    }
    let layers = layers
        .into_iter()
        .map(|mut parts| {
            while parts.last() == Some(&0) {
                parts.pop();
            }
            let sum = parts.iter().sum();
            Partition { parts, sum }
        })
        .collect();
    Ok(PadicExpansion { layers, prime: p })
}

/// Splits each part as λ_i = p·q_i + r_i and returns (q_λ, r_λ) with
/// q_λ = (pq_1, ..., pq_ℓ) and r_λ = (r_1, ..., r_ℓ).
pub fn qr_split(l: &Partition, p: u64) -> (Composition, Composition) {
    let q = Composition::new(l.parts.iter().map(|&x| x - x % p).collect());
    let r = Composition::new(l.parts.iter().map(|&x| x % p).collect());
    (q, r)
}

/// The p-rank of the Young subgroup S_λ: `Σ ⌊λ_i/p⌋`.
pub fn rank_young(l: &Partition, p: u64) -> u64 {
    l.parts.iter().map(|&x| x / p).sum()
}

/// The Scott partition s(λ).
///
/// Write each part in base p; the i-th digit layer λ[i] is a composition of
/// some size a_i(p−1) + b_i with 0 ≤ b_i < p−1, and the i-th output layer is
/// the rearrangement of ((p−1)^{a_i}, b_i). Then s(λ) = Σ pⁱ · layer_i.
pub fn s_lambda(l: &Partition, p: u64) -> Result<Partition> {
    if !crate::arith::is_prime(p) {
        return domain(format!("p = {p} is not prime"));
    }
    if l.is_empty() {
        return domain("s(λ) needs a nonempty partition");
    }
    let mut layer_sizes: Vec<u64> = Vec::new();
    for &part in &l.parts {
        let mut v = part;
        let mut i = 0;
        while v > 0 {
            if layer_sizes.len() <= i {
                layer_sizes.push(0);
            }
            layer_sizes[i] += v % p;
            v /= p;
            i += 1;
        }
    }
    let mut acc = Composition::empty();
    let mut power = 1u64;
    for &size in &layer_sizes {
        let a = size / (p - 1);
        let b = size % (p - 1);
        let mut parts = vec![p - 1; a as usize];
        if b > 0 {
            parts.push(b);
        }
        acc = acc.sum_with(&Composition::new(parts).scale(power));
        power *= p;
    }
    Ok(acc.rearrange())
}

/// All partitions of n, in descending lexicographic order.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    fn rec(remaining: u64, max: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let sum = current.iter().sum();
            out.push(Partition { parts: current.clone(), sum });
            return;
        }
        let hi = remaining.min(max);
        for next in (1..=hi).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_invariants() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(pt(&[5, 4, 2]).size(), 11);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&pt(&[1, 1, 1, 1]), &pt(&[2, 1, 1])).unwrap());
        assert!(dominance_leq(&pt(&[2, 2]), &pt(&[3, 1])).unwrap());
        assert!(!dominance_leq(&pt(&[3, 1]), &pt(&[2, 2])).unwrap());
        assert!(!dominance_leq(&pt(&[2]), &pt(&[1, 1])).unwrap());
        assert!(dominance_leq(&pt(&[2]), &pt(&[1, 1, 1])).is_err());
    }

    #[test]
    fn padic_examples() {
        let e = padic_expansion(&pt(&[3, 1]), 2).unwrap();
        assert_eq!(e.layer(0), pt(&[1, 1]));
        assert_eq!(e.layer(1), pt(&[1]));
        assert_eq!(e.reconstruct(), pt(&[3, 1]));

        let e = padic_expansion(&pt(&[4, 4]), 2).unwrap();
        assert_eq!(e.layer(0), Partition::empty());
        assert_eq!(e.layer(1), Partition::empty());
        assert_eq!(e.layer(2), pt(&[1, 1]));

        let e = padic_expansion(&pt(&[1]), 7).unwrap();
        assert_eq!(e.layers(), &[pt(&[1])]);
    }

    #[test]
    fn qr_examples() {
        let (q, r) = qr_split(&pt(&[5, 4, 2]), 3);
        assert_eq!(q.parts(), &[3, 3, 0]);
        assert_eq!(r.parts(), &[2, 1, 2]);
        let (q, r) = qr_split(&pt(&[3, 2]), 3);
        assert_eq!(q.parts(), &[3, 0]);
        assert_eq!(r.parts(), &[0, 2]);
        let (q, r) = qr_split(&pt(&[5, 5]), 5);
        assert_eq!(q.parts(), &[5, 5]);
        assert_eq!(r.parts(), &[0, 0]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_young(&pt(&[5, 4, 2]), 3), 2);
        assert_eq!(rank_young(&Partition::rect(1, 7), 3), 0);
        assert_eq!(rank_young(&pt(&[2, 2]), 2), 2);
    }

    #[test]
    fn s_lambda_examples() {
        assert_eq!(s_lambda(&pt(&[5, 3, 3]), 3).unwrap(), pt(&[8, 3]));
        assert_eq!(s_lambda(&pt(&[2, 1, 1]), 2).unwrap(), pt(&[3, 1]));
        assert_eq!(s_lambda(&pt(&[1]), 5).unwrap(), pt(&[1]));
    }

    #[test]
    fn compose_ops() {
        let u = Composition::new(vec![5, 3, 0]).union(&Composition::new(vec![3]));
        assert_eq!(u, pt(&[5, 3, 3]));
        assert_eq!(Composition::new(vec![2, 0, 3]).rearrange(), pt(&[3, 2]));
        let s = Composition::new(vec![3, 1]).sum_with(&Composition::new(vec![2]));
        assert_eq!(s.parts(), &[5, 1]);
        // ∅ is the identity for union and sum
        assert_eq!(Composition::empty().union(&Composition::new(vec![2, 1])), pt(&[2, 1]));
        assert_eq!(
            Composition::empty().sum_with(&Composition::new(vec![2, 1])).parts(),
            &[2, 1]
        );
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(pt(&[2, 2, 2, 2]).to_string(), "(2^4)");
        assert_eq!(pt(&[5, 4, 2]).to_string(), "(5,4,2)");
        assert_eq!(pt(&[3, 1, 1]).to_string(), "(3,1^2)");
        assert_eq!(Partition::empty().to_string(), "∅");
        assert_eq!("5,4,2".parse::<Partition>().unwrap(), pt(&[5, 4, 2]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert!("4,5".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        let sixes = partitions_of(6);
        assert_eq!(sixes[0], pt(&[6]));
        assert_eq!(sixes.last().unwrap(), &Partition::rect(1, 6));
    }
}
