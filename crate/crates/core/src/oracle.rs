//! Brute-force verifiers. Everything here recomputes invariants from first
//! principles at small degree: full S_n scans for double cosets and
//! stabilizers, orbit decompositions of the squared tabloid bases,
//! exhaustive elementary-abelian subgroup search, explicit construction of
//! the block groups P_M, and a backtracking conjugacy test.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::caps::Caps;
use crate::error::{domain, resource, Result};
use crate::partitions::{partitions_of, Composition, Partition};
use crate::scott::{NatMatrix, PowerKind};
use crate::tabloids::{
    enumerate_tabloids, point_orbits_of, GeneratedPSubgroup, Permutation, Tabloid,
};

/// All elements of S_n in no particular order beyond determinism.
pub fn sn_elements(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut pool: Vec<usize> = (0..n).collect();
    let mut images: Vec<usize> = Vec::with_capacity(n);
    fn rec(pool: &mut Vec<usize>, images: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if pool.is_empty() {
            out.push(Permutation::from_images(images.clone()).unwrap());
            return;
        }
        for k in 0..pool.len() {
            let x = pool.remove(k);
            images.push(x);
            rec(pool, images, out);
            images.pop();
            pool.insert(k, x);
        }
    }
    rec(&mut pool, &mut images, &mut out);
    out
}

fn check_oracle_degree(n: usize, caps: &Caps) -> Result<()> {
    if n > caps.oracle_degree {
        return resource(format!(
            "full S_{n} scans are capped at degree {}",
            caps.oracle_degree
        ));
    }
    Ok(())
}

/// The blocks n_1^λ, ..., n_ℓ^λ of consecutive points with sizes λ.
fn standard_blocks(l: &Partition) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(l.len());
    let mut next = 1usize;
    for &part in l.parts() {
        out.push((next, next + part as usize));
        next += part as usize;
    }
    out
}

fn intersection_matrix(l: &Partition, g: &Permutation) -> NatMatrix {
    let blocks = standard_blocks(l);
    let ell = blocks.len();
    let mut rows = vec![vec![0u64; ell]; ell];
    for (j, &(lo, hi)) in blocks.iter().enumerate() {
        for x in lo..hi {
            let y = g.apply(x);
            let i = blocks.iter().position(|&(a, b)| a <= y && y < b).unwrap();
            rows[i][j] += 1;
        }
    }
    NatMatrix::new(rows).unwrap()
}

/// Intersection matrices of all non-identity double cosets of the Young
/// subgroup: scans S_n and buckets by matrix. Must coincide with the direct
/// row/column-sum enumeration.
pub fn double_cosets(l: &Partition, caps: &Caps) -> Result<BTreeSet<NatMatrix>> {
    let n = l.size() as usize;
    check_oracle_degree(n, caps)?;
    if l.len() < 2 {
        return Ok(BTreeSet::new());
    }
    let diagonal = NatMatrix::diagonal(l.parts());
    let mut out = BTreeSet::new();
    for g in sn_elements(n) {
        let m = intersection_matrix(l, &g);
        if m != diagonal {
            out.insert(m);
        }
    }
    Ok(out)
}

/// Builds one permutation whose double-coset intersection matrix is `m`:
/// the first a_{1,j} points of block j map into block 1, and so on.
pub fn matrix_to_permutation(l: &Partition, m: &NatMatrix) -> Result<Permutation> {
    if m.side() != l.len() || m.row_sums() != l.parts() || m.col_sums() != l.parts() {
        return domain(format!("matrix {m} does not have row and column sums {l}"));
    }
    let blocks = standard_blocks(l);
    let n = l.size() as usize;
    let mut images = vec![0usize; n];
    let mut next_slot: Vec<usize> = blocks.iter().map(|&(lo, _)| lo).collect();
    for (j, &(lo, _)) in blocks.iter().enumerate() {
        let mut x = lo;
        for (i, slot) in next_slot.iter_mut().enumerate() {
            for _ in 0..m.get(i, j) {
                images[x - 1] = *slot - 1;
                *slot += 1;
                x += 1;
            }
        }
    }
    Permutation::from_images(images)
}

/// The pair ({t^λ}, g{t^λ}) with g realizing the matrix `m`.
pub fn matrix_to_pair(l: &Partition, m: &NatMatrix) -> Result<(Tabloid, Tabloid)> {
    let g = matrix_to_permutation(l, m)?;
    let t = Tabloid::row_reading(&Composition::from(l));
    let gt = t.act(&g);
    Ok((t, gt))
}

/// One S_n-orbit of the squared tabloid basis: an unordered pair of
/// tabloids for the exterior square, an unordered pair with repetition for
/// the symmetric square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummand {
    pub kind: PowerKind,
    pub representative: (Tabloid, Tabloid),
    pub orbit_size: u64,
    pub stabilizer_order: u64,
    /// Point-orbit sizes of a Sylow p-subgroup of the stabilizer, sorted.
    pub sylow_orbit_sizes: Vec<u64>,
}

/// Decomposes the symmetric or exterior square basis into S_n-orbits and
/// computes each stabilizer (by direct scan) together with a Sylow
/// p-subgroup of it.
pub fn orbit_decompose_square(
    l: &Partition,
    kind: PowerKind,
    p: u64,
    caps: &Caps,
) -> Result<Vec<OrbitSummand>> {
    let n = l.size() as usize;
    check_oracle_degree(n, caps)?;
    let tabloids = enumerate_tabloids(&Composition::from(l), caps)?;
    let d = tabloids.len();
    let pair_count = if kind == PowerKind::Sym { d * (d + 1) / 2 } else { d * (d - 1) / 2 };
    if pair_count > caps.tabloids {
        return resource(format!("{pair_count} basis pairs exceed the cap"));
    }
    let index: HashMap<&Tabloid, usize> = tabloids.iter().enumerate().map(|(t, i)| (i, t)).collect();

    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(pair_count);
    for i in 0..d {
        let start = if kind == PowerKind::Sym { i } else { i + 1 };
        for j in start..d {
            pairs.push((i, j));
        }
    }
    let pair_index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &(i, j))| ((i, j), k)).collect();

    // generators of S_n: a transposition and an n-cycle
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![1, 2]]).unwrap());
    }
    if n > 2 {
        gens.push(Permutation::from_cycles(n, &[(1..=n).collect::<Vec<_>>()]).unwrap());
    }
    let apply_pair = |g: &Permutation, (i, j): (usize, usize)| -> (usize, usize) {
        let a = index[&tabloids[i].act(g)];
        let b = index[&tabloids[j].act(g)];
        (a.min(b), a.max(b))
    };

    let group_order = factorial(n as u64);
    let all = sn_elements(n);
    let mut seen = vec![false; pairs.len()];
    let mut out = Vec::new();
    for start in 0..pairs.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut frontier = vec![pairs[start]];
        let mut orbit_size = 1u64;
        while let Some(pq) = frontier.pop() {
            for g in &gens {
                let im = apply_pair(g, pq);
                let k = pair_index[&im];
                if !seen[k] {
                    seen[k] = true;
                    orbit_size += 1;
                    frontier.push(im);
                }
            }
        }
        let (i, j) = pairs[start];
        let stabilizer: Vec<Permutation> = all
            .iter()
            .filter(|g| apply_pair(g, (i, j)) == (i, j))
            .cloned()
            .collect();
        let sylow = sylow_subgroup(&stabilizer, p, n, caps)?;
        let mut sizes: Vec<u64> =
            sylow.point_orbits().iter().map(|o| o.len() as u64).collect();
        sizes.sort_unstable();
        debug_assert_eq!(
            BigUint::from(orbit_size) * BigUint::from(stabilizer.len()),
            group_order
        );
        out.push(OrbitSummand {
            kind,
            representative: (tabloids[i].clone(), tabloids[j].clone()),
            orbit_size,
            stabilizer_order: stabilizer.len() as u64,
            sylow_orbit_sizes: sizes,
        });
    }
    out.sort_by(|a, b| {
        (a.orbit_size, &a.representative).cmp(&(b.orbit_size, &b.representative))
    });
    Ok(out)
}

/// Closes a generator list into the full (sorted) element list of the
/// subgroup it generates.
pub fn subgroup_closure(seed: &[Permutation], n: usize, caps: &Caps) -> Result<Vec<Permutation>> {
    close_subgroup(seed, n, caps.group_elements)
}

/// Closes an element set under products.
fn close_subgroup(seed: &[Permutation], n: usize, cap: usize) -> Result<Vec<Permutation>> {
    let mut elements: BTreeSet<Permutation> = BTreeSet::new();
    elements.insert(Permutation::identity(n));
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(n)];
    while let Some(g) = frontier.pop() {
        for h in seed {
            let gh = h.compose(&g);
            if !elements.contains(&gh) {
                if elements.len() >= cap {
                    return resource(format!("subgroup closure passed {cap} elements"));
                }
                elements.insert(gh.clone());
                frontier.push(gh);
            }
        }
    }
    Ok(elements.into_iter().collect())
}

fn p_part(mut order: u64, p: u64) -> u64 {
    let mut part = 1;
    while order % p == 0 {
        order /= p;
        part *= p;
    }
    part
}

/// A Sylow p-subgroup of the group given by its element list, found by
/// growing a p-subgroup until it is maximal (maximal p-subgroups of a
/// finite group are Sylow).
pub fn sylow_subgroup(
    elements: &[Permutation],
    p: u64,
    n: usize,
    caps: &Caps,
) -> Result<GeneratedPSubgroup> {
    let target = p_part(elements.len() as u64, p);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current: Vec<Permutation> = vec![Permutation::identity(n)];
    let candidates: Vec<&Permutation> = elements
        .iter()
        .filter(|g| !g.is_identity() && g.has_p_power_order(p))
        .collect();
    while (current.len() as u64) < target {
        let mut grew = false;
        for &g in &candidates {
            if current.binary_search(g).is_ok() {
                continue;
            }
            let mut seed = gens.clone();
            seed.push(g.clone());
            let closed = close_subgroup(&seed, n, caps.group_elements)?;
            if p_part(closed.len() as u64, p) == closed.len() as u64 {
                gens = seed;
                current = closed;
                grew = true;
                break;
            }
        }
        if !grew {
            break;
        }
    }
    debug_assert_eq!(current.len() as u64, target);
    GeneratedPSubgroup::new(gens, p, n, caps)
}

/// All elementary abelian p-subgroups of S_n (the trivial group included),
/// deduplicated by element set.
pub fn elementary_abelian_subgroups(
    n: usize,
    p: u64,
    caps: &Caps,
) -> Result<Vec<GeneratedPSubgroup>> {
    let mut out = vec![GeneratedPSubgroup::trivial(p, n)];
    walk_elementary_abelians(n, p, caps, &mut |group| {
        out.push(group.clone());
        Ok(true)
    })?;
    Ok(out)
}

/// The largest rank of an elementary abelian p-subgroup satisfying the
/// predicate; 0 when only the trivial group does. The predicate must be
/// monotone vanishing (false on E forces false on every overgroup of E):
/// subgroups where it fails are not expanded further.
pub fn elementary_abelians_max_rank(
    n: usize,
    p: u64,
    predicate: &mut dyn FnMut(&GeneratedPSubgroup) -> Result<bool>,
    caps: &Caps,
) -> Result<u64> {
    let mut best = 0u64;
    walk_elementary_abelians(n, p, caps, &mut |group| {
        let keep = predicate(group)?;
        if keep {
            best = best.max(group.rank());
        }
        Ok(keep)
    })?;
    Ok(best)
}

fn perm_key(g: &Permutation) -> Vec<u8> {
    (1..=g.degree()).map(|x| g.apply(x) as u8).collect()
}

fn walk_elementary_abelians(
    n: usize,
    p: u64,
    caps: &Caps,
    visit: &mut dyn FnMut(&GeneratedPSubgroup) -> Result<bool>,
) -> Result<()> {
    check_oracle_degree(n, caps)?;
    let order_p: Vec<Permutation> = sn_elements(n)
        .into_iter()
        .filter(|g| !g.is_identity() && g.order() == p)
        .collect();
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    // frontier entries carry their generator list
    let mut frontier: Vec<Vec<Permutation>> = Vec::new();
    for x in &order_p {
        let group = GeneratedPSubgroup::new(vec![x.clone()], p, n, caps)?;
        let key: Vec<u8> = group.elements().iter().flat_map(perm_key).collect();
        if seen.insert(key) && visit(&group)? {
            frontier.push(vec![x.clone()]);
        }
    }
    while let Some(gens) = frontier.pop() {
        let base = GeneratedPSubgroup::new(gens.clone(), p, n, caps)?;
        for x in &order_p {
            if base.contains(x) {
                continue;
            }
            if !gens.iter().all(|g| g.compose(x) == x.compose(g)) {
                continue;
            }
            let mut bigger = gens.clone();
            bigger.push(x.clone());
            let group = GeneratedPSubgroup::new(bigger.clone(), p, n, caps)?;
            let key: Vec<u8> = group.elements().iter().flat_map(perm_key).collect();
            if seen.insert(key) {
                if seen.len() > caps.matrices {
                    return resource("elementary abelian enumeration passed the cap".to_string());
                }
                if visit(&group)? {
                    frontier.push(bigger);
                }
            }
        }
    }
    Ok(())
}

fn small_generating_set(
    elements: &[Permutation],
    n: usize,
    caps: &Caps,
) -> Result<Vec<Permutation>> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = 1usize;
    for g in elements {
        if g.is_identity() {
            continue;
        }
        let mut seed = gens.clone();
        seed.push(g.clone());
        let closed = close_subgroup(&seed, n, caps.group_elements)?;
        if closed.len() > span {
            span = closed.len();
            gens = seed;
            if span == elements.len() {
                break;
            }
        }
    }
    Ok(gens)
}

/// Whether some element of S_n conjugates the first group onto the second.
///
/// Works on arbitrary permutation groups given as element lists. Cheap
/// invariants (order, element cycle types, point-orbit sizes) are compared
/// first; then a point-image backtracker runs, constrained so that every
/// generator of the first group conjugates into the second.
pub fn conjugate_element_sets(
    a_elements: &[Permutation],
    b_elements: &[Permutation],
    n: usize,
    caps: &Caps,
) -> Result<bool> {
    if n > caps.conjugacy_degree {
        return resource(format!(
            "conjugacy backtracking capped at degree {}",
            caps.conjugacy_degree
        ));
    }
    if a_elements.len() != b_elements.len() {
        return Ok(false);
    }
    let type_multiset = |els: &[Permutation]| {
        let mut m: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for g in els {
            *m.entry(g.cycle_type()).or_insert(0) += 1;
        }
        m
    };
    if type_multiset(a_elements) != type_multiset(b_elements) {
        return Ok(false);
    }
    let orbit_sizes = |els: &[Permutation]| {
        let mut sizes: Vec<usize> =
            point_orbits_of(els, n).iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        sizes
    };
    if orbit_sizes(a_elements) != orbit_sizes(b_elements) {
        return Ok(false);
    }
    if a_elements.len() == 1 {
        return Ok(true);
    }

    let gens = small_generating_set(a_elements, n, caps)?;
    let a_orbit_of_point = point_orbit_size_table(a_elements, n);
    let b_orbit_of_point = point_orbit_size_table(b_elements, n);

    let mut image = vec![usize::MAX; n]; // 0-based partial map
    let mut used = vec![false; n];
    let b_set: BTreeSet<&Permutation> = b_elements.iter().collect();
    let candidates: Vec<Vec<&Permutation>> = gens.iter().map(|_| b_elements.iter().collect()).collect();
    let found = backtrack_conjugacy(
        0,
        n,
        &gens,
        &b_set,
        &a_orbit_of_point,
        &b_orbit_of_point,
        &mut image,
        &mut used,
        &candidates,
    );
    Ok(found)
}

fn point_orbit_size_table(elements: &[Permutation], n: usize) -> Vec<usize> {
    let orbits = point_orbits_of(elements, n);
    let mut table = vec![0usize; n];
    for orbit in orbits {
        for &x in &orbit {
            table[x - 1] = orbit.len();
        }
    }
    table
}

#[allow(clippy::too_many_arguments)]
fn backtrack_conjugacy(
    x: usize,
    n: usize,
    gens: &[Permutation],
    b_set: &BTreeSet<&Permutation>,
    a_orbit: &[usize],
    b_orbit: &[usize],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    candidates: &[Vec<&Permutation>],
) -> bool {
    if x == n {
        // image is a full bijection; verify every generator conjugates in
        let g = Permutation::from_images(image.clone()).unwrap();
        let g_inv = g.inverse();
        return gens.iter().all(|a| {
            let conj = g.compose(a).compose(&g_inv);
            b_set.contains(&conj)
        });
    }
    for y in 0..n {
        if used[y] || a_orbit[x] != b_orbit[y] {
            continue;
        }
        image[x] = y;
        used[y] = true;
        // refine candidate sets under the partial map
        let mut ok = true;
        let mut refined: Vec<Vec<&Permutation>> = Vec::with_capacity(gens.len());
        for (gi, a) in gens.iter().enumerate() {
            let filtered: Vec<&Permutation> = candidates[gi]
                .iter()
                .copied()
                .filter(|b| passes_partial(a, b, image))
                .collect();
            if filtered.is_empty() {
                ok = false;
                break;
            }
            refined.push(filtered);
        }
        if ok
            && backtrack_conjugacy(x + 1, n, gens, b_set, a_orbit, b_orbit, image, used, &refined)
        {
            return true;
        }
        image[x] = usize::MAX;
        used[y] = false;
    }
    false
}

// b is still a candidate for g a g^-1 given the partial point map.
fn passes_partial(a: &Permutation, b: &Permutation, image: &[usize]) -> bool {
    for (x0, &y0) in image.iter().enumerate() {
        if y0 == usize::MAX {
            continue;
        }
        let ax = a.apply(x0 + 1) - 1;
        let gax = image[ax];
        if gax != usize::MAX && b.apply(y0 + 1) - 1 != gax {
            return false;
        }
    }
    true
}

/// Conjugacy of two generated p-subgroups inside S_n.
pub fn conjugate_groups(
    a: &GeneratedPSubgroup,
    b: &GeneratedPSubgroup,
    caps: &Caps,
) -> Result<bool> {
    if a.degree() != b.degree() {
        return domain("conjugacy needs equal degrees".to_string());
    }
    conjugate_element_sets(a.elements(), b.elements(), a.degree(), caps)
}

// Sylow p-subgroup generators on the consecutive block [start, start+size).
fn sylow_generators_on_block(start: usize, size: u64, p: u64, n: usize) -> Vec<Permutation> {
    let mut gens = Vec::new();
    let mut chunks: Vec<(usize, u32)> = Vec::new(); // (chunk start, k) for size p^k
    let mut pos = start;
    let mut rem = size;
    let mut k = 0u32;
    let mut power = 1u64;
    while power * p <= rem.max(1) {
        power *= p;
        k += 1;
    }
    // carve chunks greedily from the largest p-power down
    while rem > 0 {
        while power > rem {
            power /= p;
            k -= 1;
        }
        chunks.push((pos, k));
        pos += power as usize;
        rem -= power;
    }
    for (chunk_start, k) in chunks {
        tower_generators(chunk_start, k, p, n, &mut gens);
    }
    gens
}

fn tower_generators(start: usize, k: u32, p: u64, n: usize, out: &mut Vec<Permutation>) {
    if k == 0 {
        return;
    }
    tower_generators(start, k - 1, p, n, out);
    let step = (p as usize).pow(k - 1);
    let cycles: Vec<Vec<usize>> = (0..step)
        .map(|i| (0..p as usize).map(|j| start + i + j * step).collect())
        .collect();
    out.push(Permutation::from_cycles(n, &cycles).unwrap());
}

/// Builds the block p-subgroup P_M with the canonical assignment of
/// consecutive points to matrix cells in row-major order: a fixed Sylow
/// p-subgroup on each cell block, and additionally, for p = 2 and
/// symmetric M, the upper-triangle Sylow factors conjugated across the
/// diagonal by the block-swapping involution e_M, with e_M adjoined.
pub fn build_pm(m: &NatMatrix, p: u64, caps: &Caps) -> Result<GeneratedPSubgroup> {
    let n = m.total() as usize;
    let side = m.side();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(side * side);
    let mut next = 1usize;
    for i in 0..side {
        for j in 0..side {
            let size = m.get(i, j) as usize;
            blocks.push((next..next + size).collect());
            next += size;
        }
    }
    let block = |i: usize, j: usize| -> &Vec<usize> { &blocks[i * side + j] };

    let mut gens: Vec<Permutation> = Vec::new();
    if p > 2 || !m.is_symmetric() {
        for i in 0..side {
            for j in 0..side {
                let b = block(i, j);
                if let Some(&start) = b.first() {
                    gens.extend(sylow_generators_on_block(start, b.len() as u64, p, n));
                }
            }
        }
        return GeneratedPSubgroup::new(gens, p, n, caps);
    }

    // p = 2 and M symmetric: diagonal Sylows, upper-cell Sylows and their
    // e_M-conjugates, then e_M itself
    let mut swap_cycles: Vec<Vec<usize>> = Vec::new();
    for i in 0..side {
        for j in i + 1..side {
            let upper = block(i, j);
            let lower = block(j, i);
            debug_assert_eq!(upper.len(), lower.len());
            for (&a, &b) in upper.iter().zip(lower) {
                swap_cycles.push(vec![a, b]);
            }
        }
    }
    let e_m = Permutation::from_cycles(n, &swap_cycles)?;
    for k in 0..side {
        let b = block(k, k);
        if let Some(&start) = b.first() {
            gens.extend(sylow_generators_on_block(start, b.len() as u64, 2, n));
        }
    }
    for i in 0..side {
        for j in i + 1..side {
            let b = block(i, j);
            if let Some(&start) = b.first() {
                let upper_gens = sylow_generators_on_block(start, b.len() as u64, 2, n);
                for g in &upper_gens {
                    gens.push(e_m.compose(g).compose(&e_m));
                }
                gens.extend(upper_gens);
            }
        }
    }
    if !e_m.is_identity() {
        gens.push(e_m);
    }
    GeneratedPSubgroup::new(gens, 2, n, caps)
}

/// Exhaustive complexity of Λ^a M^λ: the largest rank of an elementary
/// abelian p-subgroup with nonzero Brauer quotient. No closed form covers
/// a > 2, so this is the route the CLI takes there; the cost is exponential
/// in the degree.
pub fn max_rank_ext_power(l: &Partition, a: u64, p: u64, caps: &Caps) -> Result<u64> {
    let n = l.size() as usize;
    elementary_abelians_max_rank(
        n,
        p,
        &mut |group| {
            if group.is_trivial() {
                return Ok(true);
            }
            Ok(!crate::brauer::dim_brauer_ext_power(l, a, group, caps)?.is_zero())
        },
        caps,
    )
}

/// Number of S_n-orbits on size-a subsets (ext) or multisets (sym) of the
/// tabloid basis, by Burnside's lemma over the conjugacy classes of S_n.
pub fn count_power_orbits(
    l: &Partition,
    a: u64,
    kind: PowerKind,
    caps: &Caps,
) -> Result<BigUint> {
    let n = l.size() as usize;
    check_oracle_degree(n, caps)?;
    let tabloids = enumerate_tabloids(&Composition::from(l), caps)?;
    let index: HashMap<&Tabloid, usize> = tabloids.iter().enumerate().map(|(t, i)| (i, t)).collect();
    let mut total = BigUint::zero();
    for class in partitions_of(n as u64) {
        let rep = class_representative(&class, n);
        let class_size = conjugacy_class_size(&class);
        // cycle lengths of the representative acting on tabloids
        let perm: Vec<usize> = tabloids.iter().map(|t| index[&t.act(&rep)]).collect();
        let mut seen = vec![false; perm.len()];
        let mut lens: Vec<usize> = Vec::new();
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = perm[x];
            }
            lens.push(len);
        }
        let fixed = fixed_power_count(&lens, a as usize, kind);
        total += fixed * class_size;
    }
    let order = factorial(n as u64);
    debug_assert!((&total % &order).is_zero());
    Ok(total / order)
}

fn class_representative(class: &Partition, n: usize) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = 1usize;
    for &len in class.parts() {
        if len >= 2 {
            cycles.push((next..next + len as usize).collect::<Vec<_>>());
        }
        next += len as usize;
    }
    Permutation::from_cycles(n, &cycles).unwrap()
}

fn conjugacy_class_size(class: &Partition) -> BigUint {
    let n = class.size();
    let mut centralizer = BigUint::one();
    let mut mult: BTreeMap<u64, u64> = BTreeMap::new();
    for &len in class.parts() {
        *mult.entry(len).or_insert(0) += 1;
    }
    for (len, count) in mult {
        for _ in 0..count {
            centralizer *= len;
        }
        centralizer *= factorial(count);
    }
    factorial(n) / centralizer
}

// Number of a-subsets (ext) or a-multisets (sym) of a set permuted with the
// given cycle lengths that are invariant under the permutation: invariant
// (multi)sets are unions of whole cycles with multiplicities.
fn fixed_power_count(cycle_lens: &[usize], a: usize, kind: PowerKind) -> BigUint {
    let mut dp = vec![BigUint::zero(); a + 1];
    dp[0] = BigUint::one();
    for &len in cycle_lens {
        if len > a {
            continue;
        }
        match kind {
            PowerKind::Ext => {
                for j in (0..=a - len).rev() {
                    let add = dp[j].clone();
                    dp[j + len] += add;
                }
            }
            PowerKind::Sym => {
                // unbounded multiplicity: forward pass
                for j in 0..=a - len {
                    let add = dp[j].clone();
                    dp[j + len] += add;
                }
            }
        }
    }
    dp[a].clone()
}
