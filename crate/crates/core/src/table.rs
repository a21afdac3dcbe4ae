//! The validated finite left quasigroup value and its structural operations.

use crate::congruence;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

/// A finite left quasigroup on the universe `{0, …, n-1}`, stored as its
/// multiplication table together with the materialized left division table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftQuasigroup {
    n: usize,
    mul: Vec<Vec<usize>>,
    ldiv: Vec<Vec<usize>>,
}

impl LeftQuasigroup {
    /// Validates a 0-based table: square, entries in range, every row a
    /// permutation. Left division is derived as the row-wise inverse.
    pub fn from_rows(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        for (r, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
            for (c, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(Error::EntryOutOfRange { row: r, col: c });
                }
            }
        }
        let mut ldiv = vec![vec![usize::MAX; n]; n];
        for (r, row) in mul.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if ldiv[r][x] != usize::MAX {
                    return Err(Error::RowNotPermutation(r));
                }
                ldiv[r][x] = c;
            }
        }
        Ok(LeftQuasigroup { n, mul, ldiv })
    }

    /// Validates a table whose entries are written `1..=n`, as in printed
    /// fixtures; conversion to the internal 0-based universe happens here.
    pub fn from_rows_one_based(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let mut mul = Vec::with_capacity(n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
            let mut shifted = Vec::with_capacity(n);
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::EntryOutOfRange { row: r, col: c });
                }
                shifted.push(x - 1);
            }
            mul.push(shifted);
        }
        LeftQuasigroup::from_rows(mul)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a][b]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.mul
    }

    /// Row `a` as a permutation (`L_a`).
    pub fn left_translation(&self, a: usize) -> Permutation {
        Permutation::from_images(self.mul[a].clone()).expect("validated row")
    }

    pub fn left_translations(&self) -> Vec<Permutation> {
        (0..self.n).map(|a| self.left_translation(a)).collect()
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.n).all(|a| self.mul[a][a] == a)
    }

    pub fn is_involutory(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul[a][self.mul[a][b]] == b))
    }

    /// Left distributivity `x*(y*z) = (x*y)*(x*z)`.
    pub fn is_rack(&self) -> bool {
        self.left_distributivity_witness().is_none()
    }

    pub fn left_distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    if self.mul[x][self.mul[y][z]] != self.mul[self.mul[x][y]][self.mul[x][z]] {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_quandle(&self) -> bool {
        self.is_idempotent() && self.is_rack()
    }

    pub fn is_projection(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul[a][b] == b))
    }

    /// All rows equal, i.e. `a*b = f(b)` for a single permutation `f`.
    pub fn is_permutation_lq(&self) -> bool {
        self.mul.iter().all(|row| *row == self.mul[0])
    }

    /// Smallest subuniverse containing `seed`: worklist closure under `*`
    /// and `\`, pairing new elements against everything seen so far.
    pub fn sg(&self, seed: &[usize]) -> Result<Vec<usize>> {
        for &x in seed {
            if x >= self.n {
                return Err(Error::PointOutOfRange(x));
            }
        }
        let mut in_set = vec![false; self.n];
        let mut members: Vec<usize> = Vec::new();
        let mut queue: Vec<usize> = Vec::new();
        for &x in seed {
            if !in_set[x] {
                in_set[x] = true;
                members.push(x);
                queue.push(x);
            }
        }
        while let Some(x) = queue.pop() {
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for z in [
                    self.mul[x][y],
                    self.mul[y][x],
                    self.ldiv[x][y],
                    self.ldiv[y][x],
                ] {
                    if !in_set[z] {
                        in_set[z] = true;
                        members.push(z);
                        queue.push(z);
                    }
                }
                i += 1;
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    pub fn is_closed(&self, set: &[usize]) -> bool {
        let mut in_set = vec![false; self.n];
        for &x in set {
            if x >= self.n {
                return false;
            }
            in_set[x] = true;
        }
        set.iter().all(|&a| {
            set.iter()
                .all(|&b| in_set[self.mul[a][b]] && in_set[self.ldiv[a][b]])
        })
    }

    /// Relabels a closed subuniverse to `{0, …, |S|-1}`, order-preserving.
    pub fn induced_sub(&self, set: &[usize]) -> Result<LeftQuasigroup> {
        if !self.is_closed(set) {
            return Err(Error::NotClosed);
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in sorted.iter().enumerate() {
            index[x] = i;
        }
        let mul = sorted
            .iter()
            .map(|&a| sorted.iter().map(|&b| index[self.mul[a][b]]).collect())
            .collect();
        LeftQuasigroup::from_rows(mul)
    }

    /// Componentwise product; element `(a, b)` is encoded as `a*|Q2| + b`.
    pub fn direct_product(&self, other: &LeftQuasigroup) -> LeftQuasigroup {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut mul = vec![vec![0; n]; n];
        for a1 in 0..n1 {
            for a2 in 0..n2 {
                for b1 in 0..n1 {
                    for b2 in 0..n2 {
                        mul[a1 * n2 + a2][b1 * n2 + b2] =
                            self.mul[a1][b1] * n2 + other.mul[a2][b2];
                    }
                }
            }
        }
        LeftQuasigroup::from_rows(mul).expect("componentwise rows are bijective")
    }

    /// Quotient by a congruence, with the element-to-block map. The
    /// compatibility law is re-checked here so hand-built partitions from the
    /// CLI cannot produce an ill-defined table.
    pub fn quotient(&self, alpha: &Partition) -> Result<(LeftQuasigroup, Vec<usize>)> {
        if alpha.n() != self.n || !congruence::is_congruence(self, alpha) {
            return Err(Error::NotACongruence);
        }
        let labels = alpha.block_labels();
        let blocks = alpha.blocks();
        let k = blocks.len();
        let mut mul = vec![vec![0; k]; k];
        for (i, bi) in blocks.iter().enumerate() {
            for (j, bj) in blocks.iter().enumerate() {
                mul[i][j] = labels[self.mul[bi[0]][bj[0]]];
            }
        }
        let q = LeftQuasigroup::from_rows(mul)?;
        Ok((q, labels))
    }

    /// Searches for a table-preserving bijection onto `other`.
    pub fn isomorphism_to(&self, other: &LeftQuasigroup) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        // per-element invariant: images must have matching local shape
        let profile = |q: &LeftQuasigroup, a: usize| {
            let lt = q.left_translation(a);
            (lt.cycle_type(), q.mul[a][a] == a, {
                // column multiset
                let mut col: Vec<usize> = (0..q.n).map(|x| q.mul[x][a]).collect();
                col.sort_unstable();
                col.dedup();
                col.len()
            })
        };
        let p1: Vec<_> = (0..self.n).map(|a| profile(self, a)).collect();
        let p2: Vec<_> = (0..self.n).map(|a| profile(other, a)).collect();
        {
            let mut s1 = p1.clone();
            let mut s2 = p2.clone();
            s1.sort();
            s2.sort();
            if s1 != s2 {
                return None;
            }
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        if self.iso_search(other, &p1, &p2, &mut map, &mut used, 0) {
            Some(map)
        } else {
            None
        }
    }

    fn iso_search(
        &self,
        other: &LeftQuasigroup,
        p1: &[(Vec<usize>, bool, usize)],
        p2: &[(Vec<usize>, bool, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        if next == self.n {
            return true;
        }
        'candidates: for image in 0..self.n {
            if used[image] || p1[next] != p2[image] {
                continue;
            }
            map[next] = image;
            used[image] = true;
            // consistency on every pair already assigned
            for a in 0..=next {
                for b in 0..=next {
                    let prod = self.mul[a][b];
                    if prod <= next && other.mul[map[a]][map[b]] != map[prod] {
                        map[next] = usize::MAX;
                        used[image] = false;
                        continue 'candidates;
                    }
                    if prod > next && used[other.mul[map[a]][map[b]]] {
                        // image already taken by a smaller element
                        let taken = other.mul[map[a]][map[b]];
                        if map[..=next].contains(&taken) {
                            map[next] = usize::MAX;
                            used[image] = false;
                            continue 'candidates;
                        }
                    }
                }
            }
            if self.iso_search(other, p1, p2, map, used, next + 1) {
                return true;
            }
            map[next] = usize::MAX;
            used[image] = false;
        }
        false
    }

    pub fn is_isomorphic(&self, other: &LeftQuasigroup) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// Applies a relabeling: `M'[p(a)][p(b)] = p(M[a][b])`.
    pub fn relabel(&self, p: &[usize]) -> LeftQuasigroup {
        let n = self.n;
        let mut mul = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                mul[p[a]][p[b]] = p[self.mul[a][b]];
            }
        }
        LeftQuasigroup::from_rows(mul).expect("relabeling preserves validity")
    }

    /// Row-major table bytes, used for deterministic ordering.
    pub fn flat(&self) -> Vec<usize> {
        self.mul.iter().flatten().copied().collect()
    }
}

/// Small structures shared by the test-suite, benchmarks and docs.
pub mod fixtures {
    use super::LeftQuasigroup;

    /// Dihedral quandle `R_n = aff(Z_n, -1)`: `x*y = 2x - y mod n`.
    pub fn dihedral(n: usize) -> LeftQuasigroup {
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (2 * a + n - b % n) % n).collect())
            .collect();
        LeftQuasigroup::from_rows(mul).unwrap()
    }

    /// Projection left quasigroup `P_n`.
    pub fn projection(n: usize) -> LeftQuasigroup {
        LeftQuasigroup::from_rows((0..n).map(|_| (0..n).collect()).collect()).unwrap()
    }

    /// The printed 4x4 superconnected non-latin table.
    pub fn t4() -> LeftQuasigroup {
        LeftQuasigroup::from_rows_one_based(vec![
            vec![1, 2, 3, 4],
            vec![2, 1, 3, 4],
            vec![3, 2, 1, 4],
            vec![4, 2, 3, 1],
        ])
        .unwrap()
    }

    /// The printed 9x9 table with the corrected fifth row.
    pub fn t9() -> LeftQuasigroup {
        LeftQuasigroup::from_rows_one_based(vec![
            vec![1, 3, 2, 7, 8, 9, 4, 5, 6],
            vec![3, 2, 1, 7, 8, 9, 4, 5, 6],
            vec![2, 1, 3, 7, 8, 9, 4, 5, 6],
            vec![7, 8, 9, 4, 6, 5, 1, 2, 3],
            vec![7, 8, 9, 6, 5, 4, 1, 2, 3],
            vec![7, 8, 9, 5, 4, 6, 1, 2, 3],
            vec![4, 5, 6, 1, 2, 3, 7, 9, 8],
            vec![4, 5, 6, 1, 2, 3, 9, 8, 7],
            vec![4, 5, 6, 1, 2, 3, 8, 7, 9],
        ])
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn accepts_reference_tables() {
        let q = t4();
        assert_eq!(q.order(), 4);
        assert!(!q.is_idempotent());
        assert!(!q.is_rack());
        let t = t9();
        assert!(t.is_idempotent());
        // idempotent but not left distributive: 1∗(4∗2) ≠ (1∗4)∗(1∗2)
        assert!(!t.is_rack());
        assert_eq!(t.left_distributivity_witness(), Some((0, 3, 1)));
        assert!(LeftQuasigroup::from_rows_one_based(vec![vec![1]]).is_ok());
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            LeftQuasigroup::from_rows_one_based(vec![vec![1, 1], vec![2, 2]]),
            Err(Error::RowNotPermutation(0))
        );
        assert_eq!(
            LeftQuasigroup::from_rows_one_based(vec![vec![1, 2], vec![1]]),
            Err(Error::NotSquare)
        );
        assert!(matches!(
            LeftQuasigroup::from_rows_one_based(vec![vec![1, 3], vec![2, 1]]),
            Err(Error::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn ldiv_roundtrip() {
        let q = dihedral(5);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(q.mul(a, q.ldiv(a, b)), b);
                assert_eq!(q.ldiv(a, q.mul(a, b)), b);
            }
        }
    }

    #[test]
    fn sg_closure() {
        // R_5 is generated by {0, 1}
        assert_eq!(dihedral(5).sg(&[1, 0]).unwrap(), vec![0, 1, 2, 3, 4]);
        // projection subalgebras are arbitrary subsets
        assert_eq!(projection(3).sg(&[2]).unwrap(), vec![2]);
        // inside the 4x4 fixture, {2,3} closes up on {0,2,3}: L_0 = id,
        // L_2 = (0 2), L_3 = (0 3) never produce 1
        assert_eq!(t4().sg(&[2, 3]).unwrap(), vec![0, 2, 3]);
        assert_eq!(dihedral(4).sg(&[0, 2]).unwrap(), vec![0, 2]);
        assert!(dihedral(5).sg(&[]).unwrap().is_empty());
    }

    #[test]
    fn sg_is_monotone_and_idempotent() {
        let q = t9();
        for a in 0..9 {
            for b in 0..9 {
                let s = q.sg(&[a, b]).unwrap();
                assert!(s.contains(&a) && s.contains(&b));
                assert_eq!(q.sg(&s).unwrap(), s);
            }
        }
    }

    #[test]
    fn induced_sub_examples() {
        let q = dihedral(4);
        assert_eq!(q.induced_sub(&[0, 1, 2, 3]).unwrap(), q);
        // {0, 2} inside R_4 carries the projection structure P_2
        let sub = q.induced_sub(&[0, 2]).unwrap();
        assert_eq!(sub, projection(2));
        assert_eq!(q.induced_sub(&[0, 1]), Err(Error::NotClosed));
        let single = t9().induced_sub(&[4]).unwrap();
        assert_eq!(single.order(), 1);
    }

    #[test]
    fn direct_products() {
        assert!(projection(2)
            .direct_product(&projection(2))
            .is_isomorphic(&projection(4)));
        let r3sq = dihedral(3).direct_product(&dihedral(3));
        assert!(r3sq.is_quandle());
        // every column of the product of latin tables is a permutation
        for b in 0..9 {
            let mut col: Vec<usize> = (0..9).map(|a| r3sq.mul(a, b)).collect();
            col.sort_unstable();
            assert_eq!(col, (0..9).collect::<Vec<_>>());
        }
    }

    #[test]
    fn quotient_examples() {
        let q = dihedral(4);
        let alpha = Partition::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let (f, map) = q.quotient(&alpha).unwrap();
        assert!(f.is_isomorphic(&projection(2)));
        assert_eq!(map, vec![0, 1, 0, 1]);

        let (same, _) = q.quotient(&Partition::singletons(4)).unwrap();
        assert!(same.is_isomorphic(&q));

        let bad = Partition::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(q.quotient(&bad), Err(Error::NotACongruence));

        let t = t9();
        let three = Partition::from_blocks(
            9,
            &[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]],
        )
        .unwrap();
        let (factor, _) = t.quotient(&three).unwrap();
        assert_eq!(factor.order(), 3);
        assert!(factor.is_quandle());
        // latin factor of size 3
        for b in 0..3 {
            let mut col: Vec<usize> = (0..3).map(|a| factor.mul(a, b)).collect();
            col.sort_unstable();
            assert_eq!(col, vec![0, 1, 2]);
        }
    }

    #[test]
    fn isomorphism_checks() {
        let q = t9();
        let id = q.isomorphism_to(&q).unwrap();
        assert_eq!(q.relabel(&id), q);
        assert!(!dihedral(4).is_isomorphic(&projection(4)));
        // R_4 under the relabeling x -> x+1 is still R_4
        let rel = dihedral(4).relabel(&[1, 2, 3, 0]);
        let iso = dihedral(4).isomorphism_to(&rel).unwrap();
        assert_eq!(dihedral(4).relabel(&iso), rel);
    }
}
