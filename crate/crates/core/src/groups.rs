//! Finite groups given by Cayley tables, structure-preserving maps between
//! them, and stock constructors (cyclic, abelian, symmetric, dihedral,
//! quaternion).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Orders up to this bound get an exhaustive associativity check; larger
/// tables are checked on a deterministic pseudo-random sample of triples
/// plus full verification on a generating set.
const FULL_ASSOC_CAP: usize = 512;
const ASSOC_SAMPLES: usize = 200_000;

/// A finite group on `{0, …, n-1}` with its full Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
    /// Orders of cyclic factors when built as a direct product of them;
    /// enables matrix-described endomorphisms.
    cyclic_factors: Option<Vec<usize>>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table"));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::NotAGroup("table not square over the universe"));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::NotAGroup("no identity"))?;
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            inv[x] = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or(Error::NotAGroup("missing inverse"))?;
        }
        if n <= FULL_ASSOC_CAP {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(Error::NotAGroup("associativity fails"));
                        }
                    }
                }
            }
        } else {
            // deterministic linear-congruential sample
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for _ in 0..ASSOC_SAMPLES {
                let (a, b, c) = (next() % n, next() % n, next() % n);
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup("associativity fails"));
                }
            }
        }
        Ok(FiniteGroup {
            table,
            identity,
            inv,
            labels: None,
            cyclic_factors: None,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order());
        self.labels = Some(labels);
        self
    }

    pub fn cyclic_factors(&self) -> Option<&[usize]> {
        self.cyclic_factors.as_deref()
    }

    pub fn conjugate(&self, x: usize, by: usize) -> usize {
        self.mul(self.mul(by, x), self.inv[by])
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv[a], self.inv[b]), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let mut result = self.identity;
        let (base, reps) = if k >= 0 {
            (a, k as u64)
        } else {
            (self.inv[a], (-k) as u64)
        };
        let mut reps = reps;
        let mut base = base;
        while reps > 0 {
            if reps & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            reps >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn center_set(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&z| (0..n).all(|x| self.table[z][x] == self.table[x][z]))
            .collect()
    }

    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut class: Vec<bool> = vec![false; self.order()];
        for g in 0..self.order() {
            class[self.conjugate(x, g)] = true;
        }
        (0..self.order()).filter(|&y| class[y]).collect()
    }

    /// Subgroup generated by a seed set, as a sorted element list.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut elements = vec![self.identity];
        let mut queue: Vec<usize> = Vec::new();
        for &s in seed {
            if !member[s] {
                member[s] = true;
                elements.push(s);
                queue.push(s);
            }
        }
        while let Some(x) = queue.pop() {
            let snapshot = elements.clone();
            for &y in &snapshot {
                for z in [self.mul(x, y), self.mul(y, x), self.inv[x]] {
                    if !member[z] {
                        member[z] = true;
                        elements.push(z);
                        queue.push(z);
                    }
                }
            }
        }
        elements.sort_unstable();
        elements
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if !set.contains(&self.identity) {
            return false;
        }
        set.iter()
            .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))) && set.contains(&self.inv[a]))
    }

    /// Subgroup generated by all commutators `[a,b]`, `a ∈ A`, `b ∈ B`.
    pub fn commutator_set(&self, a_set: &[usize], b_set: &[usize]) -> Vec<usize> {
        let mut seed = Vec::new();
        for &a in a_set {
            for &b in b_set {
                seed.push(self.commutator(a, b));
            }
        }
        self.subgroup_closure(&seed)
    }

    pub fn derived_subgroup_set(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.order()).collect();
        self.commutator_set(&all, &all)
    }

    pub fn is_solvable(&self) -> bool {
        let mut current: Vec<usize> = (0..self.order()).collect();
        loop {
            let next = self.commutator_set(&current, &current);
            if next.len() == current.len() {
                return current.len() == 1;
            }
            current = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        let all: Vec<usize> = (0..self.order()).collect();
        let mut current = all.clone();
        loop {
            let next = self.commutator_set(&all, &current);
            if next.len() == current.len() {
                return current.len() == 1;
            }
            current = next;
        }
    }

    /// Quotient by a normal subgroup: the coset group and the coset index of
    /// every element. Cosets are numbered by their least member.
    pub fn quotient_by_normal(&self, subgroup: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(subgroup) {
            return Err(Error::NotAGroup("quotient by a non-subgroup"));
        }
        for g in 0..self.order() {
            for &h in subgroup {
                if !subgroup.contains(&self.conjugate(h, g)) {
                    return Err(Error::NotAGroup("quotient by a non-normal subgroup"));
                }
            }
        }
        let n = self.order();
        let mut coset_rep = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_rep[g] == usize::MAX {
                for &h in subgroup {
                    coset_rep[self.mul(g, h)] = g;
                }
                reps.push(g);
            }
        }
        let index_of: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let coset_of: Vec<usize> = (0..n).map(|g| index_of[&coset_rep[g]]).collect();
        let table: Vec<Vec<usize>> = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[self.mul(a, b)]).collect())
            .collect();
        Ok((FiniteGroup::from_table(table)?, coset_of))
    }

    /// Direct product, encoding `(a, b)` as `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n1, n2) = (self.order(), other.order());
        let n = n1 * n2;
        let mut table = vec![vec![0usize; n]; n];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        table[a1 * n2 + b1][a2 * n2 + b2] =
                            self.mul(a1, a2) * n2 + other.mul(b1, b2);
                    }
                }
            }
        }
        let mut g = FiniteGroup::from_table(table).expect("product of groups");
        g.cyclic_factors = match (&self.cyclic_factors, &other.cyclic_factors) {
            (Some(a), Some(b)) => {
                let mut f = a.clone();
                f.extend_from_slice(b);
                Some(f)
            }
            _ => None,
        };
        g
    }

    /// All automorphisms, found by assigning images to a small generating
    /// set and validating the induced map.
    pub fn automorphisms(&self) -> Vec<GroupMap> {
        let n = self.order();
        let gens = self.small_generating_set();
        if gens.is_empty() {
            return vec![GroupMap::new(self, (0..n).collect()).unwrap()];
        }
        let orders: Vec<usize> = (0..n).map(|x| self.element_order(x)).collect();
        let mut result = Vec::new();
        let mut images = vec![usize::MAX; gens.len()];
        self.automorphism_search(&gens, &orders, 0, &mut images, &mut result);
        result
    }

    fn automorphism_search(
        &self,
        gens: &[usize],
        orders: &[usize],
        depth: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<GroupMap>,
    ) {
        if depth == gens.len() {
            if let Some(full) = self.extend_generator_map(gens, images) {
                if let Ok(map) = GroupMap::new(self, full) {
                    if map.is_automorphism() {
                        out.push(map);
                    }
                }
            }
            return;
        }
        for candidate in 0..self.order() {
            if orders[candidate] == orders[gens[depth]] {
                images[depth] = candidate;
                self.automorphism_search(gens, orders, depth + 1, images, out);
            }
        }
        images[depth] = usize::MAX;
    }

    /// Extends `gens[i] ↦ images[i]` to a total map by mirroring a closure
    /// of the group from its generators; None on inconsistency.
    fn extend_generator_map(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[self.identity] = self.identity;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for (i, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let fy = self.mul(map[x], images[i]);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    frontier.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        if map.iter().any(|&v| v == usize::MAX) {
            return None;
        }
        Some(map)
    }

    /// Group isomorphism test by generator-image backtracking: candidate
    /// images are filtered by element order and extended by mirroring the
    /// closure of the generators.
    pub fn is_isomorphic_to(&self, other: &FiniteGroup) -> bool {
        let n = self.order();
        if n != other.order() {
            return false;
        }
        let self_orders: Vec<usize> = (0..n).map(|x| self.element_order(x)).collect();
        let other_orders: Vec<usize> = (0..n).map(|x| other.element_order(x)).collect();
        {
            let mut a = self_orders.clone();
            let mut b = other_orders.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        let gens = self.small_generating_set();
        if gens.is_empty() {
            return true; // both trivial
        }
        let mut images = vec![usize::MAX; gens.len()];
        self.iso_search(other, &gens, &self_orders, &other_orders, 0, &mut images)
    }

    fn iso_search(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        self_orders: &[usize],
        other_orders: &[usize],
        depth: usize,
        images: &mut Vec<usize>,
    ) -> bool {
        let n = self.order();
        if depth == gens.len() {
            let map = match self.extend_generator_map_into(other, gens, images) {
                Some(map) => map,
                None => return false,
            };
            let mut used = vec![false; n];
            for &v in &map {
                if used[v] {
                    return false;
                }
                used[v] = true;
            }
            return (0..n).all(|x| {
                (0..n).all(|y| map[self.mul(x, y)] == other.mul(map[x], map[y]))
            });
        }
        for candidate in 0..n {
            if other_orders[candidate] == self_orders[gens[depth]] {
                images[depth] = candidate;
                if self.iso_search(other, gens, self_orders, other_orders, depth + 1, images) {
                    return true;
                }
            }
        }
        images[depth] = usize::MAX;
        false
    }

    fn extend_generator_map_into(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        map[self.identity] = other.identity;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for (i, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                let fy = other.mul(map[x], images[i]);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    frontier.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        if map.iter().any(|&v| v == usize::MAX) {
            return None;
        }
        Some(map)
    }

    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut closure = vec![self.identity];
        while closure.len() < self.order() {
            let next = (0..self.order())
                .filter(|x| closure.binary_search(x).is_err())
                .max_by_key(|&x| {
                    let mut g = gens.clone();
                    g.push(x);
                    self.subgroup_closure(&g).len()
                })
                .expect("proper subgroup misses an element");
            gens.push(next);
            closure = self.subgroup_closure(&gens);
        }
        gens
    }
}

/// A map between group universes that respects the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMap {
    images: Vec<usize>,
    is_automorphism: bool,
}

impl GroupMap {
    /// Validates `f(xy) = f(x)f(y)` exhaustively.
    pub fn new(group: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if images.len() != n || images.iter().any(|&x| x >= n) {
            return Err(Error::NotAutomorphism);
        }
        for x in 0..n {
            for y in 0..n {
                if images[group.mul(x, y)] != group.mul(images[x], images[y]) {
                    return Err(Error::NotAutomorphism);
                }
            }
        }
        let mut seen = vec![false; n];
        let mut bijective = true;
        for &v in &images {
            if seen[v] {
                bijective = false;
                break;
            }
            seen[v] = true;
        }
        Ok(GroupMap {
            images,
            is_automorphism: bijective,
        })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupMap {
            images: (0..group.order()).collect(),
            is_automorphism: true,
        }
    }

    /// `x ↦ x^k`; an endomorphism of any abelian group.
    pub fn power_map(group: &FiniteGroup, k: i64) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        GroupMap::new(group, (0..group.order()).map(|x| group.pow(x, k)).collect())
    }

    /// `x ↦ -x` on an abelian group.
    pub fn inversion(group: &FiniteGroup) -> Result<Self> {
        GroupMap::power_map(group, -1)
    }

    /// Endomorphism of a direct product of cyclic groups given by an integer
    /// matrix acting on coordinate columns: the `i`-th coordinate of the
    /// image is `Σ_j m[i][j] · x_j` reduced modulo the `i`-th factor order.
    pub fn from_matrix(group: &FiniteGroup, matrix: &[Vec<i64>]) -> Result<Self> {
        let factors = group
            .cyclic_factors()
            .ok_or(Error::NotAGroup("no cyclic factor structure"))?
            .to_vec();
        let k = factors.len();
        if matrix.len() != k || matrix.iter().any(|row| row.len() != k) {
            return Err(Error::NotAutomorphism);
        }
        let coords = |mut x: usize| -> Vec<usize> {
            let mut c = vec![0usize; k];
            for i in (0..k).rev() {
                c[i] = x % factors[i];
                x /= factors[i];
            }
            c
        };
        let encode = |c: &[usize]| -> usize {
            c.iter()
                .zip(&factors)
                .fold(0usize, |acc, (&ci, &fi)| acc * fi + ci)
        };
        let images = (0..group.order())
            .map(|x| {
                let c = coords(x);
                let image: Vec<usize> = (0..k)
                    .map(|i| {
                        let m = factors[i] as i64;
                        let v: i64 = (0..k).map(|j| matrix[i][j] * c[j] as i64).sum();
                        (v.rem_euclid(m)) as usize
                    })
                    .collect();
                encode(&image)
            })
            .collect();
        GroupMap::new(group, images)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_automorphism(&self) -> bool {
        self.is_automorphism
    }

    /// Order as a map under composition (automorphisms only).
    pub fn map_order(&self) -> usize {
        let p = Permutation::from_images(self.images.clone()).expect("automorphism");
        p.order() as usize
    }
}

/// The cyclic group of order `n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let mut g = FiniteGroup::from_table(table).expect("cyclic group");
    g.cyclic_factors = Some(vec![n]);
    g
}

/// Direct product of cyclic groups of the given orders.
pub fn abelian(factors: &[usize]) -> FiniteGroup {
    let mut g = cyclic(*factors.first().unwrap_or(&1));
    for &f in &factors[1.min(factors.len())..] {
        g = g.direct_product(&cyclic(f));
    }
    g
}

/// Symmetric group on `n` letters, elements ordered lexicographically by
/// their image arrays, labeled in cycle notation.
pub fn symmetric(n: usize) -> FiniteGroup {
    let mut perms: Vec<Permutation> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(Permutation::from_images(current.clone()).unwrap());
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index_of: HashMap<&Permutation, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let table = perms
        .iter()
        .map(|a| perms.iter().map(|b| index_of[&a.compose(b)]).collect())
        .collect();
    let labels = perms.iter().map(|p| p.to_string()).collect();
    FiniteGroup::from_table(table)
        .expect("symmetric group")
        .with_labels(labels)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Dihedral group of order `2n`: `0..n` are rotations `r^i`, `n..2n` are
/// reflections `s·r^i`, with `s r^i s = r^{-i}`.
pub fn dihedral_group(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let size = 2 * n;
    let mut table = vec![vec![0usize; size]; size];
    for a in 0..size {
        for b in 0..size {
            let (ea, ia) = (a / n, a % n);
            let (eb, ib) = (b / n, b % n);
            // s^ea r^ia · s^eb r^ib = s^{ea+eb} r^{(-1)^eb ia + ib}
            let e = (ea + eb) % 2;
            let i = if eb == 1 {
                (n - ia + ib) % n
            } else {
                (ia + ib) % n
            };
            table[a][b] = e * n + i;
        }
    }
    FiniteGroup::from_table(table).expect("dihedral group")
}

/// The quaternion group of order 8: `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion8() -> FiniteGroup {
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    // signed basis products: (index/2 gives 1,i,j,k; index%2 gives sign)
    let base = [
        [0, 1, 2, 3, 4, 5, 6, 7],
        [1, 0, 3, 2, 5, 4, 7, 6],
        [2, 3, 1, 0, 6, 7, 5, 4],
        [3, 2, 0, 1, 7, 6, 4, 5],
        [4, 5, 7, 6, 1, 0, 2, 3],
        [5, 4, 6, 7, 0, 1, 3, 2],
        [6, 7, 4, 5, 3, 2, 1, 0],
        [7, 6, 5, 4, 2, 3, 0, 1],
    ];
    let table = base.iter().map(|row| row.to_vec()).collect();
    FiniteGroup::from_table(table)
        .expect("quaternion group")
        .with_labels(labels.iter().map(|s| s.to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_abelian() {
        let z6 = cyclic(6);
        assert!(z6.is_abelian());
        assert_eq!(z6.element_order(1), 6);
        assert_eq!(z6.inv(2), 4);
        let z2z2 = abelian(&[2, 2]);
        assert!(z2z2.is_abelian());
        assert_eq!(z2z2.order(), 4);
        assert!((0..4).all(|x| z2z2.mul(x, x) == z2z2.identity()));
    }

    #[test]
    fn symmetric_groups() {
        let s3 = symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(s3.is_solvable());
        assert!(!s3.is_nilpotent());
        let s4 = symmetric(4);
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.derived_subgroup_set().len(), 12);
        assert!(s4.is_solvable());
        assert_eq!(s4.center_set(), vec![s4.identity()]);
    }

    #[test]
    fn dihedral_and_quaternion() {
        let d4 = dihedral_group(4);
        assert_eq!(d4.order(), 8);
        assert!(d4.is_nilpotent());
        assert_eq!(d4.center_set().len(), 2);
        let q8 = quaternion8();
        assert!(q8.is_nilpotent() && !q8.is_abelian());
        assert_eq!(q8.element_order(2), 4);
        assert_eq!(q8.mul(2, 4), 6); // i * j = k
        assert_eq!(q8.mul(4, 2), 7); // j * i = -k
        assert_eq!(q8.conjugacy_class(2), vec![2, 3]);
    }

    #[test]
    fn quotient_by_center() {
        let q8 = quaternion8();
        let (quot, coset_of) = q8.quotient_by_normal(&q8.center_set()).unwrap();
        assert_eq!(quot.order(), 4);
        assert!(quot.is_abelian());
        assert_eq!(coset_of[0], coset_of[1]);
        let s3 = symmetric(3);
        assert!(s3
            .quotient_by_normal(&s3.subgroup_closure(&[1]))
            .is_err());
    }

    #[test]
    fn group_maps() {
        let z5 = cyclic(5);
        let f = GroupMap::power_map(&z5, 2).unwrap();
        assert!(f.is_automorphism());
        assert_eq!(f.map_order(), 4);
        let neg = GroupMap::inversion(&z5).unwrap();
        assert_eq!(neg.apply(2), 3);
        // x ↦ 0 is an endomorphism but not an automorphism
        let zero = GroupMap::new(&z5, vec![0; 5]).unwrap();
        assert!(!zero.is_automorphism());
        // a non-homomorphism is rejected
        assert_eq!(
            GroupMap::new(&z5, vec![0, 1, 2, 4, 3]),
            Err(Error::NotAutomorphism)
        );
        let z6 = abelian(&[2, 3]);
        let m = GroupMap::from_matrix(&z6, &[vec![1, 0], vec![0, -1]]).unwrap();
        assert!(m.is_automorphism());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(cyclic(5).automorphisms().len(), 4);
        assert_eq!(cyclic(8).automorphisms().len(), 4);
        assert_eq!(abelian(&[2, 2]).automorphisms().len(), 6);
        assert_eq!(symmetric(3).automorphisms().len(), 6);
        assert_eq!(quaternion8().automorphisms().len(), 24);
    }

    #[test]
    fn group_isomorphism() {
        assert!(cyclic(6).is_isomorphic_to(&abelian(&[2, 3])));
        assert!(!cyclic(4).is_isomorphic_to(&abelian(&[2, 2])));
        assert!(symmetric(3).is_isomorphic_to(&dihedral_group(3)));
        assert!(!dihedral_group(4).is_isomorphic_to(&quaternion8()));
        assert!(!symmetric(4).is_isomorphic_to(&dihedral_group(12)));
        assert!(cyclic(1).is_isomorphic_to(&cyclic(1)));
    }

    #[test]
    fn rejects_non_groups() {
        // latin square without a two-sided identity
        let t = vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
        assert!(FiniteGroup::from_table(t).is_err());
        // identity present but associativity fails
        let bad = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        assert!(FiniteGroup::from_table(bad).is_err());
        assert!(FiniteGroup::from_table(vec![vec![1, 1], vec![1, 1]]).is_err());
    }
}
