//! Permutations of {1..n}, tabloids, group actions, orbits and fixed points.
//!
//! Points are 1-based in all text I/O and stored 0-based internally.
//! Permutations compose right to left: `(g * h)(x) = g(h(x))`, so the cycle
//! product "(1,2)(2,3)" parses to the 3-cycle (1,2,3).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::arith::multinomial;
use crate::caps::Caps;
use crate::error::{domain, resource, Error, Result};
use crate::partitions::Composition;

/// A permutation of {1..n}; `images[i]` is the image of point i+1, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return domain(format!("images {:?} are not a bijection of 1..={}", images, n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for k in 0..cycle.len() {
                let a = cycle[k];
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return domain(format!("cycle point out of range 1..={n}"));
                }
                if touched[a - 1] {
                    return domain(format!("cycles are not disjoint at point {a}"));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle decomposition on 1-based points, fixed points omitted, each
    /// cycle rotated to start at its minimum, cycles sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// 1-based points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&x| self.apply(x) != x).collect()
    }

    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for c in self.cycles() {
            order = lcm(order, c.len() as u64);
        }
        order
    }

    /// True when the order is a power of p (1 included).
    pub fn has_p_power_order(&self, p: u64) -> bool {
        let mut v = self.order();
        while v % p == 0 {
            v /= p;
        }
        v == 1
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses cycle notation without a fixed degree: the degree is the largest
/// point mentioned. `Permutation::from_str` is the degree-inferring variant;
/// use [`parse_permutation`] to pin the degree.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        let cycles = parse_cycles(s)?;
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        Permutation::from_cycles(n, &cycles)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() {
        return domain("empty permutation text; identity is \"()\"");
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return domain(format!("expected '(' in permutation text {s:?}"));
        }
        let close = match rest.find(')') {
            Some(i) => i,
            None => return domain(format!("unbalanced parentheses in {s:?}")),
        };
        let inner = &rest[1..close];
        if !inner.trim().is_empty() {
            let mut cycle = Vec::new();
            for piece in inner.split(',') {
                match piece.trim().parse::<usize>() {
                    Ok(v) if v >= 1 => cycle.push(v),
                    _ => return domain(format!("bad cycle entry {piece:?} in {s:?}")),
                }
            }
            if cycle.len() >= 2 {
                cycles.push(cycle);
            }
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Parses cycle notation at a fixed degree `n`.
pub fn parse_permutation(s: &str, n: usize) -> Result<Permutation> {
    let cycles = parse_cycles(s)?;
    Permutation::from_cycles(n, &cycles)
}

/// An ordered set-partition of {1..n}: row i holds `shape[i]` points, rows
/// stored sorted. Zero-size rows are kept so compositions act consistently.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Tabloid> {
        let mut rows = rows;
        for row in &mut rows {
            row.sort_unstable();
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n];
        for row in &rows {
            for &x in row {
                if x == 0 || x > n || seen[x - 1] {
                    return domain(format!("rows do not partition 1..={n}"));
                }
                seen[x - 1] = true;
            }
        }
        Ok(Tabloid { rows })
    }

    /// The row-reading tabloid `t^λ`: 1..shape_1 in row 1 and so on.
    pub fn row_reading(shape: &Composition) -> Tabloid {
        let mut rows = Vec::with_capacity(shape.len());
        let mut next = 1usize;
        for &size in shape.parts() {
            rows.push((next..next + size as usize).collect());
            next += size as usize;
        }
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn degree(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.len() as u64).collect())
    }

    /// Row index (0-based) containing the 1-based point `x`.
    pub fn row_of(&self, x: usize) -> usize {
        self.rows.iter().position(|r| r.binary_search(&x).is_ok()).unwrap()
    }

    pub fn act(&self, g: &Permutation) -> Tabloid {
        let mut rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&x| g.apply(x)).collect())
            .collect();
        for row in &mut rows {
            row.sort_unstable();
        }
        Tabloid { rows }
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Applies `g` to a tabloid (free-function form of [`Tabloid::act`]).
pub fn act(g: &Permutation, t: &Tabloid) -> Result<Tabloid> {
    if g.degree() != t.degree() {
        return domain(format!(
            "degree mismatch: permutation of degree {} on tabloid of degree {}",
            g.degree(),
            t.degree()
        ));
    }
    Ok(t.act(g))
}

/// The number of tabloids of the given shape.
pub fn dim_perm_module(shape: &Composition) -> BigUint {
    multinomial(shape.parts())
}

/// All tabloids of the given shape in lexicographic order (row 1 ascending,
/// then row 2, ...), which puts the row-reading tabloid first.
pub fn enumerate_tabloids(shape: &Composition, caps: &Caps) -> Result<Vec<Tabloid>> {
    let total = dim_perm_module(shape);
    if total > BigUint::from(caps.tabloids) {
        return resource(format!(
            "shape {shape} has {total} tabloids, over the cap of {}",
            caps.tabloids
        ));
    }
    let n = shape.size() as usize;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let available: Vec<usize> = (1..=n).collect();
    fill_rows(shape.parts(), 0, &available, &mut rows, &mut out);
    Ok(out)
}

fn fill_rows(
    shape: &[u64],
    idx: usize,
    available: &[usize],
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tabloid>,
) {
    if idx == shape.len() {
        out.push(Tabloid { rows: rows.clone() });
        return;
    }
    let k = shape[idx] as usize;
    // last row takes whatever is left
    if idx + 1 == shape.len() {
        rows.push(available.to_vec());
        out.push(Tabloid { rows: rows.clone() });
        rows.pop();
        return;
    }
    let mut chosen = Vec::with_capacity(k);
    choose_subset(available, k, 0, &mut chosen, &mut |subset| {
        let rest: Vec<usize> = available.iter().copied().filter(|x| !subset.contains(x)).collect();
        rows.push(subset.to_vec());
        fill_rows(shape, idx + 1, &rest, rows, out);
        rows.pop();
    });
}

fn choose_subset(
    pool: &[usize],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let needed = k - chosen.len();
    for i in start..=pool.len().saturating_sub(needed) {
        chosen.push(pool[i]);
        choose_subset(pool, k, i + 1, chosen, visit);
        chosen.pop();
    }
}

/// A p-subgroup of S_n given by generators, with its elements enumerated
/// eagerly. Construction rejects generator sets that do not generate a
/// p-group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedPSubgroup {
    generators: Vec<Permutation>,
    prime: u64,
    degree: usize,
    elements: Vec<Permutation>,
}

impl GeneratedPSubgroup {
    pub fn new(generators: Vec<Permutation>, p: u64, degree: usize, caps: &Caps) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return domain(format!("p = {p} is not prime"));
        }
        for g in &generators {
            if g.degree() != degree {
                return domain(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                ));
            }
            if !g.has_p_power_order(p) {
                return domain(format!("generator {g} does not have {p}-power order"));
            }
        }
        let elements = close_under_products(&generators, degree, caps.group_elements)?;
        let mut order = elements.len() as u64;
        while order % p == 0 {
            order /= p;
        }
        if order != 1 {
            return domain(format!(
                "generators span a group of order {}, not a {p}-group",
                elements.len()
            ));
        }
        Ok(GeneratedPSubgroup { generators, prime: p, degree, elements })
    }

    pub fn trivial(p: u64, degree: usize) -> Self {
        GeneratedPSubgroup {
            generators: Vec::new(),
            prime: p,
            degree,
            elements: vec![Permutation::identity(degree)],
        }
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_elementary_abelian(&self) -> bool {
        self.elements.iter().all(|g| {
            let o = g.order();
            (o == 1 || o == self.prime)
                && self.generators.iter().all(|h| g.compose(h) == h.compose(g))
        })
    }

    /// log_p of the order; the rank when the group is elementary abelian.
    pub fn rank(&self) -> u64 {
        let mut order = self.order();
        let mut rank = 0;
        while order % self.prime == 0 {
            order /= self.prime;
            rank += 1;
        }
        rank
    }

    /// Orbits of {1..n}, each sorted, ordered by minimum point.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        point_orbits_of(&self.generators, self.degree)
    }
}

/// Orbits of {1..n} under a generator list.
pub fn point_orbits_of(generators: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for start in 1..=degree {
        if seen[start - 1] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start - 1] = true;
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = g.apply(x);
                if !seen[y - 1] {
                    seen[y - 1] = true;
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

fn close_under_products(
    generators: &[Permutation],
    degree: usize,
    cap: usize,
) -> Result<Vec<Permutation>> {
    let mut elements: BTreeSet<Permutation> = BTreeSet::new();
    elements.insert(Permutation::identity(degree));
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
    while let Some(g) = frontier.pop() {
        for h in generators {
            let gh = h.compose(&g);
            if !elements.contains(&gh) {
                if elements.len() >= cap {
                    return resource(format!("group enumeration passed {cap} elements"));
                }
                elements.insert(gh.clone());
                frontier.push(gh);
            }
        }
    }
    Ok(elements.into_iter().collect())
}

/// Tabloids of the given shape fixed by every element of P: exactly those
/// whose rows are unions of P-orbits. Built directly by assigning orbits to
/// rows, not by filtering the full tabloid list.
pub fn fixed_tabloids(
    shape: &Composition,
    group: &GeneratedPSubgroup,
    caps: &Caps,
) -> Result<Vec<Tabloid>> {
    if shape.size() as usize != group.degree() {
        return domain(format!(
            "shape {shape} has size {} but the group acts on {} points",
            shape.size(),
            group.degree()
        ));
    }
    let orbits = group.point_orbits();
    let mut remaining: Vec<u64> = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    assign_orbits(&orbits, 0, &mut remaining, &mut rows, &mut out, caps.tabloids)?;
    out.sort();
    Ok(out)
}

fn assign_orbits(
    orbits: &[Vec<usize>],
    idx: usize,
    remaining: &mut [u64],
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tabloid>,
    cap: usize,
) -> Result<()> {
    if idx == orbits.len() {
        if out.len() >= cap {
            return resource(format!("fixed-tabloid enumeration passed {cap} entries"));
        }
        let mut built = rows.clone();
        for row in &mut built {
            row.sort_unstable();
        }
        out.push(Tabloid { rows: built });
        return Ok(());
    }
    let orbit = &orbits[idx];
    for i in 0..remaining.len() {
        if remaining[i] >= orbit.len() as u64 {
            remaining[i] -= orbit.len() as u64;
            rows[i].extend_from_slice(orbit);
            assign_orbits(orbits, idx + 1, remaining, rows, out, cap)?;
            let keep = rows[i].len() - orbit.len();
            rows[i].truncate(keep);
            remaining[i] += orbit.len() as u64;
        }
    }
    Ok(())
}

/// The P-orbit of a tabloid (closure under the generators).
pub fn orbit_of(t: &Tabloid, group: &GeneratedPSubgroup) -> Result<BTreeSet<Tabloid>> {
    if t.degree() != group.degree() {
        return domain("tabloid degree does not match group degree");
    }
    let mut orbit: BTreeSet<Tabloid> = BTreeSet::new();
    orbit.insert(t.clone());
    let mut frontier = vec![t.clone()];
    while let Some(u) = frontier.pop() {
        for g in group.generators() {
            let v = u.act(g);
            if orbit.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    Ok(orbit)
}

/// The standard p-subgroup families of S_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardSubgroup {
    /// E_m = ⟨s_1, ..., s_m⟩ with s_i the p-cycle on ((i-1)p, ip].
    E,
    /// K_s = ⟨k_{i,1}, k_{i,2} : i ≤ s⟩ on blocks of four points (p = 2).
    K,
    /// H_x = ⟨(4x+1,4x+2), (4x+3,4x+4), ...⟩, transpositions past 4x (p = 2).
    H,
    /// F_i = ⟨t_i⟩ with t_i the product of the first i standard p-cycles.
    F,
}

fn p_cycle(n: usize, p: u64, i: usize) -> Result<Permutation> {
    let start = (i - 1) * p as usize + 1;
    let cycle: Vec<usize> = (start..start + p as usize).collect();
    Permutation::from_cycles(n, &[cycle])
}

/// Builds E_m, K_s, H_x or F_i inside S_n. The index ranges are:
/// 0 ≤ pm ≤ n for E, 0 ≤ 4s ≤ n for K, 0 ≤ 4x ≤ n (with 2 | n) for H and
/// 1 ≤ i ≤ ⌊n/p⌋ for F. K and H require p = 2.
pub fn standard_subgroup(
    n: usize,
    p: u64,
    kind: StandardSubgroup,
    index: usize,
    caps: &Caps,
) -> Result<GeneratedPSubgroup> {
    if !crate::arith::is_prime(p) {
        return domain(format!("p = {p} is not prime"));
    }
    match kind {
        StandardSubgroup::E => {
            if index as u64 * p > n as u64 {
                return domain(format!("E_{index} needs {p}·{index} ≤ {n}"));
            }
            let gens: Result<Vec<_>> = (1..=index).map(|i| p_cycle(n, p, i)).collect();
            GeneratedPSubgroup::new(gens?, p, n, caps)
        }
        StandardSubgroup::K => {
            if p != 2 {
                return domain("K_s is a 2-subgroup; p must be 2");
            }
            if 4 * index > n {
                return domain(format!("K_{index} needs 4·{index} ≤ {n}"));
            }
            let mut gens = Vec::new();
            for i in 1..=index {
                let b = 4 * (i - 1);
                gens.push(Permutation::from_cycles(n, &[vec![b + 1, b + 2], vec![b + 3, b + 4]])?);
                gens.push(Permutation::from_cycles(n, &[vec![b + 1, b + 3], vec![b + 2, b + 4]])?);
            }
            GeneratedPSubgroup::new(gens, p, n, caps)
        }
        StandardSubgroup::H => {
            if p != 2 {
                return domain("H_x is a 2-subgroup; p must be 2");
            }
            if n % 2 != 0 {
                return domain("H_x needs an even degree");
            }
            if 4 * index > n {
                return domain(format!("H_{index} needs 4·{index} ≤ {n}"));
            }
            let y = (n - 4 * index) / 2;
            let mut gens = Vec::new();
            for i in 1..=y {
                let a = 4 * index + 2 * i - 1;
                gens.push(Permutation::from_cycles(n, &[vec![a, a + 1]])?);
            }
            GeneratedPSubgroup::new(gens, p, n, caps)
        }
        StandardSubgroup::F => {
            if index < 1 || index as u64 * p > n as u64 {
                return domain(format!("F_{index} needs 1 ≤ {index} ≤ ⌊{n}/{p}⌋"));
            }
            let cycles: Vec<Vec<usize>> = (1..=index)
                .map(|j| {
                    let start = (j - 1) * p as usize + 1;
                    (start..start + p as usize).collect()
                })
                .collect();
            let t = Permutation::from_cycles(n, &cycles)?;
            GeneratedPSubgroup::new(vec![t], p, n, caps)
        }
    }
}

/// K_ℓ × H_ℓ, the maximal-rank elementary abelian shapes at p = 2.
pub fn k_times_h(n: usize, ell: usize, caps: &Caps) -> Result<GeneratedPSubgroup> {
    let k = standard_subgroup(n, 2, StandardSubgroup::K, ell, caps)?;
    let h = standard_subgroup(n, 2, StandardSubgroup::H, ell, caps)?;
    let mut gens = k.generators().to_vec();
    gens.extend_from_slice(h.generators());
    GeneratedPSubgroup::new(gens, 2, n, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn shape(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn permutation_basics() {
        let g: Permutation = "(1,2,3)(4,5)".parse().unwrap();
        assert_eq!(g.degree(), 5);
        assert_eq!(g.apply(1), 2);
        assert_eq!(g.apply(4), 5);
        assert_eq!(g.order(), 6);
        assert_eq!(g.to_string(), "(1,2,3)(4,5)");
        assert_eq!(g.support(), vec![1, 2, 3, 4, 5]);

        // (1,2)(2,3) = (1,2,3): right factor applies first
        let a = parse_permutation("(1,2)", 3).unwrap();
        let b = parse_permutation("(2,3)", 3).unwrap();
        assert_eq!(a.compose(&b), parse_permutation("(1,2,3)", 3).unwrap());

        assert_eq!(parse_permutation("()", 4).unwrap(), Permutation::identity(4));
        assert!(parse_permutation("(1,2", 4).is_err());
        assert!(parse_permutation("(1,1)", 4).is_err());
    }

    #[test]
    fn tabloid_counts() {
        let caps = Caps::default();
        assert_eq!(enumerate_tabloids(&shape(&[2, 1]), &caps).unwrap().len(), 3);
        assert_eq!(enumerate_tabloids(&shape(&[2, 1, 1]), &caps).unwrap().len(), 12);
        assert_eq!(enumerate_tabloids(&shape(&[5]), &caps).unwrap().len(), 1);
        let all = enumerate_tabloids(&shape(&[2, 2]), &caps).unwrap();
        assert_eq!(all[0], Tabloid::row_reading(&shape(&[2, 2])));
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn action_examples() {
        let t = Tabloid::row_reading(&shape(&[2, 1]));
        let id = Permutation::identity(3);
        assert_eq!(act(&id, &t).unwrap(), t);
        let swap12 = parse_permutation("(1,2)", 3).unwrap();
        assert_eq!(act(&swap12, &t).unwrap(), t);
        let swap13 = parse_permutation("(1,3)", 3).unwrap();
        let moved = act(&swap13, &t).unwrap();
        assert_eq!(moved.rows(), &[vec![2, 3], vec![1]]);
        assert!(act(&Permutation::identity(4), &t).is_err());
    }

    #[test]
    fn fixed_tabloid_examples() {
        let caps = Caps::default();
        let f1 = standard_subgroup(5, 3, StandardSubgroup::F, 1, &caps).unwrap();
        let fixed = fixed_tabloids(&shape(&[3, 2]), &f1, &caps).unwrap();
        assert_eq!(fixed.len(), 1);
        assert_eq!(fixed[0], Tabloid::row_reading(&shape(&[3, 2])));

        let trivial = GeneratedPSubgroup::trivial(3, 5);
        let fixed = fixed_tabloids(&shape(&[3, 2]), &trivial, &caps).unwrap();
        assert_eq!(
            fixed.len() as u64,
            dim_perm_module(&shape(&[3, 2])).to_u64().unwrap()
        );

        let k1 = standard_subgroup(4, 2, StandardSubgroup::K, 1, &caps).unwrap();
        assert_eq!(fixed_tabloids(&shape(&[2, 2]), &k1, &caps).unwrap().len(), 0);

        // (1^n) with a nontrivial group has no fixed tabloids
        let f1 = standard_subgroup(4, 2, StandardSubgroup::F, 1, &caps).unwrap();
        assert_eq!(fixed_tabloids(&shape(&[1, 1, 1, 1]), &f1, &caps).unwrap().len(), 0);
    }

    #[test]
    fn orbit_examples() {
        let caps = Caps::default();
        let t = Tabloid::row_reading(&shape(&[3, 1, 1, 1]));
        let g = GeneratedPSubgroup::new(
            vec![parse_permutation("(4,5,6)", 6).unwrap()],
            3,
            6,
            &caps,
        )
        .unwrap();
        assert_eq!(orbit_of(&t, &g).unwrap().len(), 3);

        let fixed = Tabloid::row_reading(&shape(&[3, 2]));
        let f1 = standard_subgroup(5, 3, StandardSubgroup::F, 1, &caps).unwrap();
        assert_eq!(orbit_of(&fixed, &f1).unwrap().len(), 1);
    }

    #[test]
    fn standard_subgroup_examples() {
        let caps = Caps::default();
        let e2 = standard_subgroup(6, 3, StandardSubgroup::E, 2, &caps).unwrap();
        assert_eq!(e2.order(), 9);
        assert_eq!(e2.rank(), 2);
        assert!(e2.is_elementary_abelian());

        let k1 = standard_subgroup(4, 2, StandardSubgroup::K, 1, &caps).unwrap();
        assert_eq!(k1.order(), 4);
        assert_eq!(k1.rank(), 2);

        let e0 = standard_subgroup(6, 3, StandardSubgroup::E, 0, &caps).unwrap();
        assert!(e0.is_trivial());

        let f2 = standard_subgroup(6, 3, StandardSubgroup::F, 2, &caps).unwrap();
        assert_eq!(f2.order(), 3);
        assert_eq!(f2.point_orbits().len(), 2);

        // rank(H_x) = (n - 4x)/2
        let h0 = standard_subgroup(6, 2, StandardSubgroup::H, 0, &caps).unwrap();
        assert_eq!(h0.rank(), 3);

        assert!(standard_subgroup(6, 3, StandardSubgroup::E, 3, &caps).is_err());
        assert!(standard_subgroup(6, 3, StandardSubgroup::F, 0, &caps).is_err());
        assert!(standard_subgroup(6, 3, StandardSubgroup::K, 1, &caps).is_err());
    }

    #[test]
    fn p_group_invariant_enforced() {
        let caps = Caps::default();
        // two involutions generating S_3: rejected
        let a = parse_permutation("(1,2)", 3).unwrap();
        let b = parse_permutation("(2,3)", 3).unwrap();
        assert!(GeneratedPSubgroup::new(vec![a, b], 2, 3, &caps).is_err());
        // a 3-cycle is not a 2-element
        let c = parse_permutation("(1,2,3)", 3).unwrap();
        assert!(GeneratedPSubgroup::new(vec![c], 2, 3, &caps).is_err());
    }

    proptest! {
        // act(gh, t) = act(g, act(h, t))
        #[test]
        fn action_is_a_homomorphism(ga in 0usize..720, hb in 0usize..720, seed in 0usize..6) {
            let n = 6;
            let g = nth_permutation(n, ga);
            let h = nth_permutation(n, hb);
            let shapes = [vec![3u64, 2, 1], vec![4, 2], vec![2, 2, 2], vec![5, 1]];
            let t0 = Tabloid::row_reading(&Composition::new(shapes[seed % shapes.len()].clone()));
            let t = t0.act(&nth_permutation(n, seed * 97 % 720));
            prop_assert_eq!(t.act(&h).act(&g), t.act(&g.compose(&h)));
        }
    }

    fn nth_permutation(n: usize, mut k: usize) -> Permutation {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for i in (1..=n).rev() {
            images.push(pool.remove(k % i));
            k /= i;
        }
        Permutation::from_images(images).unwrap()
    }
}
