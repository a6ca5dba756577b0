//! Double-coset matrices, base-p digit sequences, the Young-p-subgroup
//! test, conjugacy keys for the groups P_M, and Scott-module multiplicities
//! in S² M^λ and Λ² M^λ.
//!
//! To each matrix M with row and column sums λ is attached a p-subgroup
//! P_M of S_n built from Sylow subgroups on disjoint blocks of sizes the
//! entries of M (with a block-swapping involution when p = 2 and M is
//! symmetric). S_n-conjugacy of these groups is decided entirely by digit
//! sequences: T′ for Young members, the pair (D, U) otherwise.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{domain, resource, Result};
use crate::partitions::Partition;

/// A square matrix of nonnegative integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u64>>", into = "Vec<Vec<u64>>")]
pub struct NatMatrix {
    side: usize,
    entries: Vec<u64>,
}

impl NatMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<NatMatrix> {
        let side = rows.len();
        if rows.iter().any(|r| r.len() != side) {
            return domain("matrix must be square");
        }
        Ok(NatMatrix { side, entries: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(parts: &[u64]) -> NatMatrix {
        let side = parts.len();
        let mut entries = vec![0; side * side];
        for (i, &x) in parts.iter().enumerate() {
            entries[i * side + i] = x;
        }
        NatMatrix { side, entries }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.side + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.side).map(|c| c.to_vec()).collect()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn transpose(&self) -> NatMatrix {
        let mut entries = vec![0; self.side * self.side];
        for i in 0..self.side {
            for j in 0..self.side {
                entries[j * self.side + i] = self.get(i, j);
            }
        }
        NatMatrix { side: self.side, entries }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.side).all(|i| (i + 1..self.side).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.side).all(|i| (0..self.side).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.side).map(|i| (0..self.side).map(|j| self.get(i, j)).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.side).map(|j| (0..self.side).map(|i| self.get(i, j)).sum()).collect()
    }
}

impl TryFrom<Vec<Vec<u64>>> for NatMatrix {
    type Error = crate::Error;

    fn try_from(rows: Vec<Vec<u64>>) -> Result<NatMatrix> {
        NatMatrix::new(rows)
    }
}

impl From<NatMatrix> for Vec<Vec<u64>> {
    fn from(m: NatMatrix) -> Self {
        m.rows()
    }
}

impl fmt::Display for NatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.side {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.side {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// A finite-support digit sequence indexed from 0, trailing zeros trimmed.
/// Printed ending with the last nonzero entry; "(0)" when all zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct NatSeq {
    digits: Vec<u64>,
}

impl NatSeq {
    pub fn new(digits: Vec<u64>) -> NatSeq {
        let mut digits = digits;
        while digits.last() == Some(&0) {
            digits.pop();
        }
        NatSeq { digits }
    }

    pub fn zero() -> NatSeq {
        NatSeq { digits: Vec::new() }
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn get(&self, k: usize) -> u64 {
        self.digits.get(k).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &NatSeq) -> NatSeq {
        let len = self.digits.len().max(other.digits.len());
        NatSeq::new((0..len).map(|k| self.get(k) + other.get(k)).collect())
    }

    /// True iff the sequence is (0^a, 1) for some a ≥ 0.
    pub fn is_unit_spike(&self) -> Option<usize> {
        if self.digits.last() == Some(&1) && self.digits.iter().sum::<u64>() == 1 {
            Some(self.digits.len() - 1)
        } else {
            None
        }
    }
}

impl From<Vec<u64>> for NatSeq {
    fn from(v: Vec<u64>) -> Self {
        NatSeq::new(v)
    }
}

impl From<NatSeq> for Vec<u64> {
    fn from(s: NatSeq) -> Self {
        s.digits
    }
}

impl fmt::Display for NatSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

fn digit_sum(values: impl Iterator<Item = u64>, p: u64) -> NatSeq {
    let mut digits: Vec<u64> = Vec::new();
    for mut v in values {
        let mut k = 0;
        while v > 0 {
            if digits.len() <= k {
                digits.resize(k + 1, 0);
            }
            digits[k] += v % p;
            v /= p;
            k += 1;
        }
    }
    NatSeq::new(digits)
}

/// The digit sequences (D, U, T): base-p digit counts over the diagonal,
/// the strict upper triangle, and all entries. For symmetric M,
/// T = D + 2U holds componentwise.
pub fn digit_sequences(m: &NatMatrix, p: u64) -> (NatSeq, NatSeq, NatSeq) {
    let side = m.side();
    let d = digit_sum((0..side).map(|i| m.get(i, i)), p);
    let u = digit_sum(
        (0..side).flat_map(|i| (i + 1..side).map(move |j| (i, j))).map(|(i, j)| m.get(i, j)),
        p,
    );
    let t = digit_sum(
        (0..side).flat_map(|i| (0..side).map(move |j| (i, j))).map(|(i, j)| m.get(i, j)),
        p,
    );
    (d, u, t)
}

/// Whether P_M is a Young p-subgroup of S_n. For p > 2 or non-symmetric M
/// (and for the diagonal matrix) this always holds; for p = 2 and symmetric
/// M it holds iff U(M) = (0^a, 1).
pub fn is_young_pm(m: &NatMatrix, p: u64) -> bool {
    if m.is_diagonal() || p > 2 || !m.is_symmetric() {
        return true;
    }
    let (_, u, _) = digit_sequences(m, 2);
    u.is_unit_spike().is_some()
}

/// The normalized sequence T′: for p = 2, symmetric M with U = (0^a, 1)
/// this is D + (0^{a+1}, 1); otherwise it is T. For the diagonal matrix
/// T′ = T. The k-th entry of T′ is the number of P_M-orbits of size p^{k-1}
/// whenever P_M is Young.
pub fn t_prime(m: &NatMatrix, p: u64) -> NatSeq {
    let (d, u, t) = digit_sequences(m, p);
    if p == 2 && m.is_symmetric() && !m.is_diagonal() {
        if let Some(a) = u.is_unit_spike() {
            let mut spike = vec![0u64; a + 2];
            spike[a + 1] = 1;
            return d.add(&NatSeq::new(spike));
        }
    }
    t
}

/// Canonical key for the S_n-conjugacy class of P_M: Young members key by
/// T′, the rest by the pair (D, U). Two members of the same M_λ ∪ {D_λ}
/// get equal keys iff their groups are S_n-conjugate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "KeyRepr", try_from = "KeyRepr")]
pub enum ScottClassKey {
    Young(NatSeq),
    General { d: NatSeq, u: NatSeq },
}

#[derive(Serialize, Deserialize)]
struct KeyRepr {
    young: bool,
    seq: Vec<Vec<u64>>,
}

impl From<ScottClassKey> for KeyRepr {
    fn from(k: ScottClassKey) -> KeyRepr {
        match k {
            ScottClassKey::Young(t) => KeyRepr { young: true, seq: vec![t.into()] },
            ScottClassKey::General { d, u } => KeyRepr { young: false, seq: vec![d.into(), u.into()] },
        }
    }
}

impl TryFrom<KeyRepr> for ScottClassKey {
    type Error = crate::Error;

    fn try_from(r: KeyRepr) -> Result<ScottClassKey> {
        let mut seqs = r.seq.into_iter().map(NatSeq::new);
        match (r.young, seqs.next(), seqs.next()) {
            (true, Some(t), None) => Ok(ScottClassKey::Young(t)),
            (false, Some(d), Some(u)) => Ok(ScottClassKey::General { d, u }),
            _ => domain("key needs one sequence when young, two otherwise"),
        }
    }
}

impl ScottClassKey {
    pub fn is_young(&self) -> bool {
        matches!(self, ScottClassKey::Young(_))
    }
}

impl fmt::Display for ScottClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScottClassKey::Young(t) => write!(f, "T'={t}"),
            ScottClassKey::General { d, u } => write!(f, "D={d}, U={u}"),
        }
    }
}

/// The conjugacy key of P_M (the diagonal matrix is allowed and keys as a
/// Young member by T = T′).
pub fn scott_class_key(m: &NatMatrix, p: u64) -> ScottClassKey {
    if is_young_pm(m, p) {
        ScottClassKey::Young(t_prime(m, p))
    } else {
        let (d, u, _) = digit_sequences(m, p);
        ScottClassKey::General { d, u }
    }
}

/// All non-diagonal ℓ×ℓ matrices with row and column sums λ, in descending
/// row-major lexicographic order. Empty for λ = (n).
pub fn enumerate_m_lambda(l: &Partition, caps: &Caps) -> Result<Vec<NatMatrix>> {
    let parts = l.parts();
    let side = parts.len();
    let mut out = Vec::new();
    if side <= 1 {
        return Ok(out);
    }
    let mut col_left: Vec<u64> = parts.to_vec();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    fill_matrix(parts, 0, &mut col_left, &mut rows, &mut out, caps.matrices)?;
    Ok(out)
}

fn fill_matrix(
    parts: &[u64],
    i: usize,
    col_left: &mut Vec<u64>,
    rows: &mut Vec<Vec<u64>>,
    out: &mut Vec<NatMatrix>,
    cap: usize,
) -> Result<()> {
    let side = parts.len();
    if i == side {
        if col_left.iter().all(|&c| c == 0) {
            let m = NatMatrix::new(rows.clone())?;
            if !m.is_diagonal() {
                if out.len() >= cap {
                    return resource(format!("matrix enumeration passed {cap} entries"));
                }
                out.push(m);
            }
        }
        return Ok(());
    }
    // enumerate the i-th row in descending lexicographic order
    let mut row = vec![0u64; side];
    descend_row(parts, i, 0, parts[i], col_left, &mut row, rows, out, cap)
}

#[allow(clippy::too_many_arguments)]
fn descend_row(
    parts: &[u64],
    i: usize,
    j: usize,
    left: u64,
    col_left: &mut Vec<u64>,
    row: &mut Vec<u64>,
    rows: &mut Vec<Vec<u64>>,
    out: &mut Vec<NatMatrix>,
    cap: usize,
) -> Result<()> {
    let side = parts.len();
    if j == side {
        if left == 0 {
            rows.push(row.clone());
            fill_matrix(parts, i + 1, col_left, rows, out, cap)?;
            rows.pop();
        }
        return Ok(());
    }
    let hi = left.min(col_left[j]);
    for v in (0..=hi).rev() {
        row[j] = v;
        col_left[j] -= v;
        descend_row(parts, i, j + 1, left - v, col_left, row, rows, out, cap)?;
        col_left[j] += v;
        row[j] = 0;
    }
    Ok(())
}

/// Splits M_λ into the symmetric members S_λ and one representative per
/// transpose pair N_λ. Representatives are the first of each pair in the
/// canonical enumeration order.
pub fn symmetric_and_pairs(matrices: &[NatMatrix]) -> (Vec<NatMatrix>, Vec<NatMatrix>) {
    let mut sym = Vec::new();
    let mut n_reps = Vec::new();
    let mut taken: std::collections::BTreeSet<NatMatrix> = std::collections::BTreeSet::new();
    for m in matrices {
        if m.is_symmetric() {
            sym.push(m.clone());
        } else if !taken.contains(m) {
            taken.insert(m.transpose());
            n_reps.push(m.clone());
        }
    }
    (sym, n_reps)
}

/// One Scott-module class in a decomposition: its conjugacy key, its
/// multiplicity, the member labels ("M1", ... with the diagonal last), and
/// a human description of the vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScottClass {
    pub key: ScottClassKey,
    pub multiplicity: u64,
    pub members: Vec<ScottMember>,
    pub vertex: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScottMember {
    pub label: String,
    pub matrix: NatMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerKind {
    Sym,
    Ext,
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerKind::Sym => write!(f, "sym"),
            PowerKind::Ext => write!(f, "ext"),
        }
    }
}

/// The Scott-module multiplicities of S² M^λ or Λ² M^λ.
///
/// For sym the relevant members are S_λ ∪ N_λ ∪ {D_λ}; for ext they are
/// S_λ ∪ N_λ at p = 2 and N_λ for p > 2 (empty exactly when p > 2 and
/// ℓ(λ) = 2: the exterior square then has no Scott summand at all). Each
/// key class contributes one Scott module with multiplicity the class size.
pub fn scott_decomposition(
    l: &Partition,
    kind: PowerKind,
    p: u64,
    caps: &Caps,
) -> Result<Vec<ScottClass>> {
    if !crate::arith::is_prime(p) {
        return domain(format!("p = {p} is not prime"));
    }
    if kind == PowerKind::Ext && l.len() < 2 {
        return domain(format!("exterior square undefined for {l}"));
    }
    let matrices = enumerate_m_lambda(l, caps)?;
    let (sym, n_reps) = symmetric_and_pairs(&matrices);
    let diagonal = NatMatrix::diagonal(l.parts());

    let mut members: Vec<(String, NatMatrix)> = Vec::new();
    for (idx, m) in matrices.iter().enumerate() {
        let in_scope = match kind {
            PowerKind::Sym => sym.contains(m) || n_reps.contains(m),
            PowerKind::Ext => {
                if p == 2 {
                    sym.contains(m) || n_reps.contains(m)
                } else {
                    n_reps.contains(m)
                }
            }
        };
        if in_scope {
            members.push((format!("M{}", idx + 1), m.clone()));
        }
    }
    if kind == PowerKind::Sym {
        members.push((format!("M{}", matrices.len() + 1), diagonal));
    }

    let mut classes: Vec<ScottClass> = Vec::new();
    let mut index_of: BTreeMap<ScottClassKey, usize> = BTreeMap::new();
    for (label, m) in members {
        let key = scott_class_key(&m, p);
        let entry = index_of.entry(key.clone()).or_insert_with(|| {
            classes.push(ScottClass {
                vertex: describe_vertex(&key, p),
                key,
                multiplicity: 0,
                members: Vec::new(),
            });
            classes.len() - 1
        });
        classes[*entry].multiplicity += 1;
        classes[*entry].members.push(ScottMember { label, matrix: m });
    }
    Ok(classes)
}

/// Human description of the vertex attached to a key: the T′ digits of a
/// Young key count the orbits of each p-power size, so they spell out a
/// Young subgroup shape.
fn describe_vertex(key: &ScottClassKey, p: u64) -> String {
    match key {
        ScottClassKey::Young(t) => {
            let mut parts: Vec<u64> = Vec::new();
            let mut size = 1u64;
            for k in 0..t.digits().len() {
                for _ in 0..t.get(k) {
                    parts.push(size);
                }
                size *= p;
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let shape = Partition::new(parts).expect("orbit sizes are positive");
            format!("Sylow {p}-subgroup of the Young subgroup S_{shape}")
        }
        ScottClassKey::General { d, u } => {
            format!("non-Young wreath-type 2-group with D={d}, U={u}")
        }
    }
}

/// dim Hom(F, S² M^λ) and dim Hom(F, Λ² M^λ): 1 + |S_λ| + |N_λ| for sym;
/// |N_λ| (p > 2) or |S_λ| + |N_λ| (p = 2) for ext, undefined at λ = (n).
pub fn hom_dims(l: &Partition, p: u64, caps: &Caps) -> Result<(u64, Option<u64>)> {
    let matrices = enumerate_m_lambda(l, caps)?;
    let (sym, n_reps) = symmetric_and_pairs(&matrices);
    let s = sym.len() as u64;
    let n_count = n_reps.len() as u64;
    let sym_dim = 1 + s + n_count;
    let ext_dim = if l.len() < 2 {
        None
    } else if p == 2 {
        Some(s + n_count)
    } else {
        Some(n_count)
    };
    Ok((sym_dim, ext_dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mat(rows: &[&[u64]]) -> NatMatrix {
        NatMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn enumeration_matches_worked_example() {
        let caps = Caps::default();
        let ms = enumerate_m_lambda(&pt(&[2, 1, 1]), &caps).unwrap();
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], mat(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
        assert_eq!(ms[1], mat(&[&[1, 1, 0], &[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(ms[2], mat(&[&[1, 1, 0], &[0, 0, 1], &[1, 0, 0]]));
        assert_eq!(ms[3], mat(&[&[1, 0, 1], &[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(ms[4], mat(&[&[1, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
        assert_eq!(ms[5], mat(&[&[0, 1, 1], &[1, 0, 0], &[1, 0, 0]]));

        assert_eq!(enumerate_m_lambda(&pt(&[3, 2]), &caps).unwrap().len(), 2);
        assert_eq!(
            enumerate_m_lambda(&pt(&[1, 1]), &caps).unwrap(),
            vec![mat(&[&[0, 1], &[1, 0]])]
        );
        assert!(enumerate_m_lambda(&pt(&[4]), &caps).unwrap().is_empty());
    }

    #[test]
    fn transpose_closure_and_pair_counts() {
        let caps = Caps::default();
        for n in 2..=7u64 {
            for l in crate::partitions::partitions_of(n) {
                if l.len() < 2 {
                    continue;
                }
                let ms = enumerate_m_lambda(&l, &caps).unwrap();
                let set: std::collections::BTreeSet<_> = ms.iter().cloned().collect();
                for m in &ms {
                    assert!(set.contains(&m.transpose()), "transpose closure at {l}");
                    assert_eq!(m.row_sums(), l.parts());
                    assert_eq!(m.col_sums(), l.parts());
                }
                let (sym, reps) = symmetric_and_pairs(&ms);
                assert_eq!(ms.len(), sym.len() + 2 * reps.len(), "|M_λ| = |S|+2|N| at {l}");
            }
        }
    }

    #[test]
    fn digit_sequence_examples() {
        // the two 3x10 matrices with equal T but different D, U
        let m1 = mat(&[&[2, 1, 2], &[1, 2, 0], &[2, 0, 0]]);
        let m2 = mat(&[&[0, 2, 2], &[2, 0, 1], &[2, 1, 0]]);
        let (d1, u1, t1) = digit_sequences(&m1, 2);
        let (d2, u2, t2) = digit_sequences(&m2, 2);
        assert_eq!(d1, NatSeq::new(vec![0, 2]));
        assert_eq!(d2, NatSeq::new(vec![0]));
        assert_eq!(u1, NatSeq::new(vec![1, 1]));
        assert_eq!(u2, NatSeq::new(vec![1, 2]));
        assert_eq!(t1, NatSeq::new(vec![2, 4]));
        assert_eq!(t1, t2);
        assert!(!is_young_pm(&m1, 2));
        assert!(!is_young_pm(&m2, 2));
        assert_ne!(scott_class_key(&m1, 2), scott_class_key(&m2, 2));

        // symmetric matrices satisfy T = D + 2U
        let (d, u, t) = digit_sequences(&m1, 2);
        assert_eq!(t, d.add(&u).add(&u));

        assert_eq!(d2.to_string(), "(0)");
        assert_eq!(t1.to_string(), "(2,4)");
    }

    #[test]
    fn t_prime_examples() {
        let m1 = mat(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(t_prime(&m1, 2), NatSeq::new(vec![0, 2]));
        let m2 = mat(&[&[1, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(t_prime(&m2, 2), NatSeq::new(vec![2, 1]));
        let d = NatMatrix::diagonal(&[2, 1, 1]);
        assert_eq!(t_prime(&d, 2), NatSeq::new(vec![2, 1]));
        assert!(is_young_pm(&d, 2));
        // non-symmetric at p = 2 keys by T
        let m3 = mat(&[&[1, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert!(is_young_pm(&m3, 2));
        assert_eq!(t_prime(&m3, 2), NatSeq::new(vec![4]));
        // keys are transpose-invariant
        assert_eq!(scott_class_key(&m3, 2), scott_class_key(&m3.transpose(), 2));
        // every matrix is Young for odd p
        let m1 = mat(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert!(is_young_pm(&m1, 3));
    }

    #[test]
    fn worked_decomposition() {
        let caps = Caps::default();
        let sym = scott_decomposition(&pt(&[2, 1, 1]), PowerKind::Sym, 2, &caps).unwrap();
        let mults: Vec<u64> = sym.iter().map(|c| c.multiplicity).collect();
        assert_eq!(mults, vec![1, 3, 1, 1]);
        let labels: Vec<Vec<&str>> = sym
            .iter()
            .map(|c| c.members.iter().map(|m| m.label.as_str()).collect())
            .collect();
        assert_eq!(
            labels,
            vec![vec!["M1"], vec!["M2", "M5", "M7"], vec!["M3"], vec!["M6"]]
        );

        let ext = scott_decomposition(&pt(&[2, 1, 1]), PowerKind::Ext, 2, &caps).unwrap();
        let mults: Vec<u64> = ext.iter().map(|c| c.multiplicity).collect();
        assert_eq!(mults, vec![1, 2, 1, 1]);
        let labels: Vec<Vec<&str>> = ext
            .iter()
            .map(|c| c.members.iter().map(|m| m.label.as_str()).collect())
            .collect();
        assert_eq!(labels, vec![vec!["M1"], vec!["M2", "M5"], vec!["M3"], vec!["M6"]]);

        // p > 2 with two rows: no Scott summands in the exterior square
        let ext = scott_decomposition(&pt(&[3, 1]), PowerKind::Ext, 3, &caps).unwrap();
        assert!(ext.is_empty());
    }

    #[test]
    fn hom_dim_examples() {
        let caps = Caps::default();
        assert_eq!(hom_dims(&pt(&[2, 1, 1]), 2, &caps).unwrap(), (6, Some(5)));
        assert_eq!(hom_dims(&pt(&[2, 2]), 2, &caps).unwrap(), (3, Some(2)));
        assert_eq!(hom_dims(&pt(&[5]), 3, &caps).unwrap(), (1, None));
        assert_eq!(hom_dims(&pt(&[3, 1]), 3, &caps).unwrap(), (2, Some(0)));
    }

    #[test]
    fn key_serialization_round_trips() {
        let young = ScottClassKey::Young(NatSeq::new(vec![2, 1]));
        let text = serde_json::to_string(&young).unwrap();
        assert_eq!(text, r#"{"young":true,"seq":[[2,1]]}"#);
        assert_eq!(serde_json::from_str::<ScottClassKey>(&text).unwrap(), young);

        let general =
            ScottClassKey::General { d: NatSeq::new(vec![0, 2]), u: NatSeq::new(vec![1, 1]) };
        let text = serde_json::to_string(&general).unwrap();
        assert_eq!(serde_json::from_str::<ScottClassKey>(&text).unwrap(), general);

        assert!(serde_json::from_str::<ScottClassKey>(r#"{"young":true,"seq":[]}"#).is_err());
    }

    #[test]
    fn vertex_descriptions() {
        let caps = Caps::default();
        let sym = scott_decomposition(&pt(&[2, 1, 1]), PowerKind::Sym, 2, &caps).unwrap();
        assert_eq!(sym[0].vertex, "Sylow 2-subgroup of the Young subgroup S_(2^2)");
        assert_eq!(sym[1].vertex, "Sylow 2-subgroup of the Young subgroup S_(2,1^2)");
        assert_eq!(sym[2].vertex, "Sylow 2-subgroup of the Young subgroup S_(1^4)");
        assert!(sym[3].vertex.starts_with("non-Young wreath-type 2-group"));
    }
}
