//! Congruence machinery: recognition, generation, the full lattice, the
//! named congruences (Cayley kernel, orbit, stabilizer, one-generated,
//! center) and two commutator implementations — the displacement-based
//! production path and an independent term-condition oracle.

use std::collections::BTreeSet;

use crate::displacement::DisplacementData;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::partition::{Partition, UnionFind};
use crate::table::LeftQuasigroup;

/// Order cap for the term-condition commutator oracle.
pub const TC_CAP: usize = 12;

/// Direct check of the compatibility law: `a α b` implies
/// `(a∗c) α (b∗c)`, `(c∗a) α (c∗b)`, `(a\c) α (b\c)`, `(c\a) α (c\b)`.
pub fn is_congruence(q: &LeftQuasigroup, p: &Partition) -> bool {
    let n = q.order();
    if p.n() != n {
        return false;
    }
    for a in 0..n {
        let b = p.rep(a);
        if b == a {
            continue;
        }
        for c in 0..n {
            if !p.same_block(q.mul(a, c), q.mul(b, c))
                || !p.same_block(q.mul(c, a), q.mul(c, b))
                || !p.same_block(q.ldiv(a, c), q.ldiv(b, c))
                || !p.same_block(q.ldiv(c, a), q.ldiv(c, b))
            {
                return false;
            }
        }
    }
    true
}

/// Least congruence containing the given pairs: merge, then propagate
/// through multiplication and division in both arguments to a fixpoint.
pub fn cgen(q: &LeftQuasigroup, pairs: &[(usize, usize)]) -> Partition {
    let n = q.order();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    while let Some((a, b)) = work.pop() {
        for c in 0..n {
            for (x, y) in [
                (q.mul(a, c), q.mul(b, c)),
                (q.mul(c, a), q.mul(c, b)),
                (q.ldiv(a, c), q.ldiv(b, c)),
                (q.ldiv(c, a), q.ldiv(c, b)),
            ] {
                if uf.union(x, y) {
                    work.push((x, y));
                }
            }
        }
    }
    uf.into_partition()
}

/// All congruences of a structure, as a finite lattice.
#[derive(Debug, Clone)]
pub struct CongruenceLattice {
    congruences: Vec<Partition>,
}

impl CongruenceLattice {
    pub fn congruences(&self) -> &[Partition] {
        &self.congruences
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.congruences.binary_search(p).is_ok()
    }
}

/// Every congruence is a join of principal congruences, so the lattice is
/// the join-closure of the principal ones together with the discrete one.
pub fn all_congruences(q: &LeftQuasigroup) -> CongruenceLattice {
    let n = q.order();
    let mut set: BTreeSet<Partition> = BTreeSet::new();
    set.insert(Partition::singletons(n));
    for a in 0..n {
        for b in (a + 1)..n {
            set.insert(cgen(q, &[(a, b)]));
        }
    }
    let mut worklist: Vec<Partition> = set.iter().cloned().collect();
    while let Some(p) = worklist.pop() {
        let joins: Vec<Partition> = set
            .iter()
            .map(|other| p.join(other))
            .filter(|j| !set.contains(j))
            .collect();
        for j in joins {
            if set.insert(j.clone()) {
                worklist.push(j);
            }
        }
    }
    CongruenceLattice {
        congruences: set.into_iter().collect(),
    }
}

/// The Cayley kernel: `a λ b` iff the rows of `a` and `b` coincide. Not a
/// congruence in general, hence the flag.
pub fn cayley_kernel(q: &LeftQuasigroup) -> (Partition, bool) {
    let n = q.order();
    let mut rep = Vec::with_capacity(n);
    for a in 0..n {
        let r = (0..a).find(|&b| q.rows()[a] == q.rows()[b]).unwrap_or(a);
        rep.push(r);
    }
    let p = Partition::from_labels(&rep);
    let flag = is_congruence(q, &p);
    (p, flag)
}

/// The orbit decomposition of the left multiplication group, always a
/// congruence with a projection factor.
pub fn orbit_congruence(data: &DisplacementData) -> Partition {
    let p = Partition::from_labels(&data.lmlt().orbit_reps());
    debug_assert!(is_congruence(data.structure(), &p));
    p
}

/// Partition of a quandle by equal point stabilizers in the displacement
/// group. Blocks are subquandles.
pub fn sigma_congruence(data: &DisplacementData) -> Result<Partition> {
    let q = data.structure();
    if !q.is_quandle() {
        return Err(Error::NotQuandle);
    }
    let n = q.order();
    let elements = data.dis().elements()?;
    let stabs: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            elements
                .iter()
                .enumerate()
                .filter(|(_, h)| h.apply(a) == a)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut rep = Vec::with_capacity(n);
    for a in 0..n {
        rep.push((0..a).find(|&b| stabs[a] == stabs[b]).unwrap_or(a));
    }
    let p = Partition::from_labels(&rep);
    debug_assert!(p.blocks().iter().all(|block| q.is_closed(block)));
    Ok(p)
}

/// Partition of a rack into one-generated subalgebras, contained in the
/// Cayley kernel.
pub fn ip_congruence(q: &LeftQuasigroup) -> Result<Partition> {
    if !q.is_rack() {
        return Err(Error::NotARack);
    }
    let n = q.order();
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(n);
    for a in 0..n {
        sets.push(q.sg(&[a])?);
    }
    for a in 0..n {
        for &b in &sets[a] {
            if sets[b] != sets[a] {
                return Err(Error::NotAPartition);
            }
        }
    }
    let mut rep = Vec::with_capacity(n);
    for a in 0..n {
        rep.push(sets[a][0]);
    }
    let p = Partition::from_labels(&rep);
    debug_assert!(p.leq(&cayley_kernel(q).0));
    debug_assert!(is_congruence(q, &p));
    Ok(p)
}

/// The center congruence of a quandle: `a ζ b` iff `L_a L_b^{-1}` is central
/// in the displacement group and `a`, `b` have equal displacement stabilizers.
pub fn center_congruence(data: &DisplacementData) -> Result<Partition> {
    let q = data.structure();
    if !q.is_quandle() {
        return Err(Error::NotQuandle);
    }
    let n = q.order();
    let sigma = sigma_congruence(data)?;
    let z = data.dis().center()?;
    let translations = q.left_translations();
    let mut rep = Vec::with_capacity(n);
    for a in 0..n {
        let r = (0..a)
            .find(|&b| {
                sigma.same_block(a, b)
                    && z.contains(&translations[a].compose(&translations[b].inverse()))
            })
            .unwrap_or(a);
        rep.push(r);
    }
    let p = Partition::from_labels(&rep);
    if !is_congruence(q, &p) {
        return Err(Error::NotACongruence);
    }
    Ok(p)
}

/// The displacement-group commutator of two congruences:
/// `{(a,b) : L_a L_b^{-1} ∈ [Dis_α, Dis_β]}`, met with `α ∧ β` so the result
/// sits below both arguments. Equal to the true commutator on superconnected
/// quandles; an upper approximation otherwise.
pub fn dis_commutator(
    data: &DisplacementData,
    alpha: &Partition,
    beta: &Partition,
) -> Result<Partition> {
    let q = data.structure();
    if !q.is_rack() {
        return Err(Error::NotARack);
    }
    let da = data.dis_alpha(alpha)?;
    let db = data.dis_alpha(beta)?;
    let comm = PermGroup::commutator_subgroup(data.lmlt(), &da, &db)?;
    Ok(displacement_kernel(q, &comm).meet(&alpha.meet(beta)))
}

/// `𝔠N = {(a,b) : L_a L_b^{-1} ∈ N}` for a subgroup `N` of the left
/// multiplication group, as a partition.
pub fn displacement_kernel(q: &LeftQuasigroup, n_group: &PermGroup) -> Partition {
    let n = q.order();
    let translations = q.left_translations();
    let mut rep = Vec::with_capacity(n);
    for a in 0..n {
        let r = (0..a)
            .find(|&b| n_group.contains(&translations[a].compose(&translations[b].inverse())))
            .unwrap_or(a);
        rep.push(r);
    }
    Partition::from_labels(&rep)
}

/// Independent term-condition commutator: the least congruence `δ` such
/// that for every matrix in the closure of the `α`/`β` generator matrices
/// under both operations, a `δ`-related top row forces a `δ`-related bottom
/// row. Quadratic in `|Q|²`, hence capped.
pub fn tc_commutator(
    q: &LeftQuasigroup,
    alpha: &Partition,
    beta: &Partition,
) -> Result<Partition> {
    let n = q.order();
    if n > TC_CAP {
        return Err(Error::OrderCapExceeded(n as u128));
    }
    if n == 0 {
        return Ok(Partition::singletons(0));
    }
    let matrices = matrix_closure(q, alpha, beta);
    let mut delta = Partition::singletons(n);
    loop {
        let mut fresh: Vec<(usize, usize)> = Vec::new();
        for &[x11, x12, x21, x22] in &matrices {
            if delta.same_block(x11, x12) && !delta.same_block(x21, x22) {
                fresh.push((x21, x22));
            }
        }
        if fresh.is_empty() {
            break;
        }
        for i in 0..n {
            fresh.push((i, delta.rep(i)));
        }
        delta = cgen(q, &fresh);
    }
    debug_assert!(delta.leq(&alpha.meet(beta)));
    Ok(delta)
}

/// Closure of the generator matrices (columns are `α`-pairs, rows are
/// `β`-pairs) under componentwise multiplication and division.
fn matrix_closure(q: &LeftQuasigroup, alpha: &Partition, beta: &Partition) -> Vec<[usize; 4]> {
    let n = q.order();
    let encode = |m: [usize; 4]| ((m[0] * n + m[1]) * n + m[2]) * n + m[3];
    let mut seen = vec![false; n * n * n * n];
    let mut members: Vec<[usize; 4]> = Vec::new();
    let push = |m: [usize; 4], seen: &mut Vec<bool>, members: &mut Vec<[usize; 4]>| {
        let code = encode(m);
        if !seen[code] {
            seen[code] = true;
            members.push(m);
        }
    };
    for a in 0..n {
        for b in 0..n {
            if alpha.same_block(a, b) {
                push([a, a, b, b], &mut seen, &mut members);
            }
            if beta.same_block(a, b) {
                push([a, b, a, b], &mut seen, &mut members);
            }
        }
    }
    let mut i = 0;
    while i < members.len() {
        let m = members[i];
        for j in 0..=i {
            let e = members[j];
            for (x, y) in [(m, e), (e, m)] {
                push(
                    [
                        q.mul(x[0], y[0]),
                        q.mul(x[1], y[1]),
                        q.mul(x[2], y[2]),
                        q.mul(x[3], y[3]),
                    ],
                    &mut seen,
                    &mut members,
                );
                push(
                    [
                        q.ldiv(x[0], y[0]),
                        q.ldiv(x[1], y[1]),
                        q.ldiv(x[2], y[2]),
                        q.ldiv(x[3], y[3]),
                    ],
                    &mut seen,
                    &mut members,
                );
            }
        }
        i += 1;
    }
    members
}

fn commutator_series(
    data: &DisplacementData,
    step: impl Fn(&Partition) -> Result<Partition>,
) -> Result<Vec<Partition>> {
    let q = data.structure();
    if !q.is_quandle() {
        return Err(Error::NotQuandle);
    }
    let mut series = vec![Partition::full(q.order())];
    loop {
        let last = series.last().unwrap();
        let next = step(last)?;
        if &next == last {
            break;
        }
        series.push(next.clone());
        if next.is_discrete() {
            break;
        }
    }
    Ok(series)
}

/// Derived series `γ⁰ = 1`, `γ^{k+1} = [γ^k, γ^k]` via the displacement
/// commutator.
pub fn derived_series_cong(data: &DisplacementData) -> Result<Vec<Partition>> {
    commutator_series(data, |p| dis_commutator(data, p, p))
}

/// Lower central series `γ_1 = 1`, `γ_{k+1} = [γ_k, 1]` via the displacement
/// commutator.
pub fn lcc_series_cong(data: &DisplacementData) -> Result<Vec<Partition>> {
    let top = Partition::full(data.structure().order());
    commutator_series(data, move |p| dis_commutator(data, p, &top))
}

fn series_length(series: &[Partition]) -> Option<usize> {
    series
        .last()
        .filter(|p| p.is_discrete())
        .map(|_| series.len() - 1)
}

/// Number of steps for the derived congruence series to reach the discrete
/// congruence, or None if it stalls. Uses the exact term-condition
/// commutator within its cap, and the displacement upper approximation
/// (which can only over-report) beyond it.
pub fn solvable_length(data: &DisplacementData) -> Result<Option<usize>> {
    let q = data.structure();
    if q.order() <= TC_CAP {
        let series = commutator_series(data, |p| tc_commutator(q, p, p))?;
        return Ok(series_length(&series));
    }
    Ok(series_length(&derived_series_cong(data)?))
}

/// Like [`solvable_length`], for the lower central series.
pub fn nilpotence_length(data: &DisplacementData) -> Result<Option<usize>> {
    let q = data.structure();
    if q.order() <= TC_CAP {
        let top = Partition::full(q.order());
        let series = commutator_series(data, |p| tc_commutator(q, p, &top))?;
        return Ok(series_length(&series));
    }
    Ok(series_length(&lcc_series_cong(data)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::fixtures::*;

    fn blocks(n: usize, b: &[&[usize]]) -> Partition {
        Partition::from_blocks(n, &b.iter().map(|v| v.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn congruence_recognition() {
        let r4 = dihedral(4);
        assert!(is_congruence(&r4, &Partition::singletons(4)));
        assert!(is_congruence(&r4, &Partition::full(4)));
        assert!(is_congruence(&r4, &blocks(4, &[&[0, 2], &[1, 3]])));
        assert!(!is_congruence(&r4, &blocks(4, &[&[0, 1], &[2, 3]])));
    }

    #[test]
    fn congruence_generation() {
        assert_eq!(cgen(&dihedral(4), &[]), Partition::singletons(4));
        // rows 0 and 2 of R_4 coincide and every translation keeps
        // {0,2} together, so the pair (0,2) generates a congruence with
        // two singleton blocks
        assert_eq!(
            cgen(&dihedral(4), &[(0, 2)]),
            blocks(4, &[&[0, 2], &[1], &[3]])
        );
        assert_eq!(
            cgen(&dihedral(4), &[(0, 2), (1, 3)]),
            blocks(4, &[&[0, 2], &[1, 3]])
        );
        assert_eq!(cgen(&dihedral(4), &[(0, 1)]), Partition::full(4));
        // R_5 is simple
        assert_eq!(cgen(&dihedral(5), &[(0, 1)]), Partition::full(5));
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(all_congruences(&projection(2)).len(), 2);
        assert_eq!(all_congruences(&dihedral(3)).len(), 2);
        // Con(R_4) = {0, {{0,2}}, {{1,3}}, λ, 1}
        let con_r4 = all_congruences(&dihedral(4));
        assert_eq!(con_r4.len(), 5);
        assert!(con_r4.contains(&blocks(4, &[&[0, 2], &[1, 3]])));
        assert!(con_r4.contains(&blocks(4, &[&[0, 2], &[1], &[3]])));
        assert!(con_r4.contains(&blocks(4, &[&[1, 3], &[0], &[2]])));
        // P_3: every partition of a 3-set is a congruence
        assert_eq!(all_congruences(&projection(3)).len(), 5);
        // every lattice member passes the recognition check
        let t9 = t9();
        for p in all_congruences(&t9).congruences() {
            assert!(is_congruence(&t9, p));
        }
    }

    #[test]
    fn cayley_kernel_examples() {
        let (l4, flag4) = cayley_kernel(&dihedral(4));
        assert_eq!(l4, blocks(4, &[&[0, 2], &[1, 3]]));
        assert!(flag4);
        let (l5, _) = cayley_kernel(&dihedral(5));
        assert!(l5.is_discrete());
        let (lp, flagp) = cayley_kernel(&projection(4));
        assert!(lp.is_full());
        assert!(flagp);
    }

    #[test]
    fn orbit_congruence_examples() {
        assert!(orbit_congruence(&DisplacementData::new(&dihedral(3))).is_full());
        assert!(orbit_congruence(&DisplacementData::new(&projection(4))).is_discrete());
        assert_eq!(
            orbit_congruence(&DisplacementData::new(&dihedral(4))),
            blocks(4, &[&[0, 2], &[1, 3]])
        );
    }

    /// R_3 with two projection points glued on: the displacement group is
    /// Sym({0,1,2}) and fixes 3 and 4, so those two points share their
    /// stabilizer while the dihedral points all differ.
    fn r3_plus_two_points() -> LeftQuasigroup {
        LeftQuasigroup::from_rows(vec![
            vec![0, 2, 1, 3, 4],
            vec![2, 1, 0, 3, 4],
            vec![1, 0, 2, 3, 4],
            vec![0, 1, 2, 3, 4],
            vec![0, 1, 2, 3, 4],
        ])
        .unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert!(sigma_congruence(&DisplacementData::new(&dihedral(3)))
            .unwrap()
            .is_full());
        assert!(sigma_congruence(&DisplacementData::new(&projection(4)))
            .unwrap()
            .is_full());
        // the isolated points are stabilized by all of Dis, the dihedral
        // points each by a different reflection
        let q = r3_plus_two_points();
        assert!(q.is_quandle());
        assert_eq!(
            sigma_congruence(&DisplacementData::new(&q)).unwrap(),
            blocks(5, &[&[0], &[1], &[2], &[3, 4]])
        );
        assert_eq!(
            sigma_congruence(&DisplacementData::new(&t4())),
            Err(Error::NotQuandle)
        );
        // the 9x9 fixture is idempotent but not a quandle
        assert_eq!(
            sigma_congruence(&DisplacementData::new(&t9())),
            Err(Error::NotQuandle)
        );
    }

    #[test]
    fn ip_examples() {
        // quandles: idempotence makes every one-generated subalgebra a point
        assert!(ip_congruence(&dihedral(5)).unwrap().is_discrete());
        // permutation rack (Z_4, +1): one generator reaches everything
        let z4 = LeftQuasigroup::from_rows(
            (0..4).map(|_| vec![1, 2, 3, 0]).collect(),
        )
        .unwrap();
        assert!(z4.is_rack() && !z4.is_quandle());
        assert!(ip_congruence(&z4).unwrap().is_full());
        // disjoint union of two copies of (Z_2, +1)
        let double = LeftQuasigroup::from_rows(vec![
            vec![1, 0, 2, 3],
            vec![1, 0, 2, 3],
            vec![0, 1, 3, 2],
            vec![0, 1, 3, 2],
        ])
        .unwrap();
        assert!(double.is_rack());
        assert_eq!(
            ip_congruence(&double).unwrap(),
            blocks(4, &[&[0, 1], &[2, 3]])
        );
        assert_eq!(ip_congruence(&t4()), Err(Error::NotARack));
    }

    #[test]
    fn center_congruence_examples() {
        assert!(center_congruence(&DisplacementData::new(&dihedral(4)))
            .unwrap()
            .is_full());
        assert!(center_congruence(&DisplacementData::new(&projection(3)))
            .unwrap()
            .is_full());
        let q = r3_plus_two_points();
        let data = DisplacementData::new(&q);
        let zeta = center_congruence(&data).unwrap();
        assert_eq!(zeta, blocks(5, &[&[0], &[1], &[2], &[3, 4]]));
        assert!(is_congruence(&q, &zeta));
        assert!(zeta.leq(&sigma_congruence(&data).unwrap()));
    }

    #[test]
    fn dis_commutator_examples() {
        let r3 = DisplacementData::new(&dihedral(3));
        let zero3 = Partition::singletons(3);
        let one3 = Partition::full(3);
        assert_eq!(dis_commutator(&r3, &zero3, &zero3).unwrap(), zero3);
        assert_eq!(dis_commutator(&r3, &one3, &one3).unwrap(), zero3);
        let r4 = DisplacementData::new(&dihedral(4));
        let zero4 = Partition::singletons(4);
        assert_eq!(dis_commutator(&r4, &zero4, &zero4).unwrap(), zero4);
        assert_eq!(
            dis_commutator(&DisplacementData::new(&t4()), &zero4, &zero4),
            Err(Error::NotARack)
        );
    }

    #[test]
    fn tc_commutator_examples() {
        let p4 = projection(4);
        let one = Partition::full(4);
        assert!(tc_commutator(&p4, &one, &one).unwrap().is_discrete());
        let r3 = dihedral(3);
        assert!(tc_commutator(&r3, &Partition::full(3), &Partition::full(3))
            .unwrap()
            .is_discrete());
        // monotonicity: a discrete argument forces a discrete commutator
        let t9 = t9();
        assert!(
            tc_commutator(&t9, &Partition::singletons(9), &Partition::full(9))
                .unwrap()
                .is_discrete()
        );
    }

    #[test]
    fn commutators_agree_on_superconnected_quandles() {
        // latin quandles are superconnected, where both commutator
        // implementations must coincide
        for q in [dihedral(3), dihedral(5), dihedral(9)] {
            let data = DisplacementData::new(&q);
            let lattice = all_congruences(&q);
            for alpha in lattice.congruences() {
                for beta in lattice.congruences() {
                    assert_eq!(
                        dis_commutator(&data, alpha, beta).unwrap(),
                        tc_commutator(&q, alpha, beta).unwrap(),
                        "alpha={alpha} beta={beta}"
                    );
                }
            }
        }
    }

    #[test]
    fn series_and_lengths() {
        let r3 = DisplacementData::new(&dihedral(3));
        assert_eq!(solvable_length(&r3).unwrap(), Some(1));
        let series = derived_series_cong(&r3).unwrap();
        assert_eq!(series.len(), 2);
        assert!(series[1].is_discrete());
        // projection quandles are abelian
        let p5 = DisplacementData::new(&projection(5));
        assert_eq!(nilpotence_length(&p5).unwrap(), Some(1));
        assert_eq!(solvable_length(&p5).unwrap(), Some(1));
        // R_9 = aff(Z_9, -1) is nilpotent
        let r9 = DisplacementData::new(&dihedral(9));
        assert!(nilpotence_length(&r9).unwrap().is_some());
        assert!(r9.dis().is_nilpotent().unwrap());
        // trivial quandle
        let p1 = DisplacementData::new(&projection(1));
        assert_eq!(solvable_length(&p1).unwrap(), Some(0));
    }
}
