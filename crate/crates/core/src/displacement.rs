//! The distinguished groups of a left quasigroup: the left multiplication
//! group, the displacement group, relative displacement groups, and the
//! induced action on congruence blocks.

use std::collections::{HashMap, HashSet};
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::group::{PermGroup, ELEMENT_ENUM_CAP};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::table::LeftQuasigroup;

/// Groups attached to one structure, with a per-congruence cache of the
/// relative data. Caches are write-once per key; recomputation is idempotent.
#[derive(Debug)]
pub struct DisplacementData {
    q: LeftQuasigroup,
    lmlt: PermGroup,
    dis: PermGroup,
    cache: RwLock<HashMap<Partition, RelativeData>>,
}

#[derive(Debug, Clone)]
pub struct RelativeData {
    pub dis_alpha: PermGroup,
    pub lmlt_kernel: PermGroup,
    pub dis_kernel: PermGroup,
}

/// `LMlt(Q)`, generated by the rows of the table.
pub fn lmlt(q: &LeftQuasigroup) -> PermGroup {
    PermGroup::generate(q.order().max(1), &q.left_translations()).expect("equal degrees")
}

/// `Dis(Q)`: the normal closure in `LMlt(Q)` of all `L_a L_b^{-1}`.
pub fn dis(q: &LeftQuasigroup) -> PermGroup {
    dis_in(q, &lmlt(q))
}

fn dis_in(q: &LeftQuasigroup, lmlt: &PermGroup) -> PermGroup {
    let translations = q.left_translations();
    let seeds: Vec<Permutation> = translations
        .iter()
        .skip(1)
        .map(|l| l.compose(&translations[0].inverse()))
        .collect();
    let closure = lmlt.normal_closure(&seeds).expect("same degree");
    // for racks the plain generated group already coincides
    debug_assert!(
        !q.is_rack() || {
            let plain = PermGroup::generate(q.order().max(1), &seeds).expect("same degree");
            plain.order() == closure.order()
        }
    );
    closure
}

impl DisplacementData {
    pub fn new(q: &LeftQuasigroup) -> Self {
        let lm = lmlt(q);
        let d = dis_in(q, &lm);
        DisplacementData {
            q: q.clone(),
            lmlt: lm,
            dis: d,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn structure(&self) -> &LeftQuasigroup {
        &self.q
    }

    pub fn lmlt(&self) -> &PermGroup {
        &self.lmlt
    }

    pub fn dis(&self) -> &PermGroup {
        &self.dis
    }

    fn relative(&self, alpha: &Partition) -> Result<RelativeData> {
        if let Some(hit) = self.cache.read().unwrap().get(alpha) {
            return Ok(hit.clone());
        }
        let computed = self.compute_relative(alpha)?;
        self.cache
            .write()
            .unwrap()
            .entry(alpha.clone())
            .or_insert_with(|| computed.clone());
        Ok(computed)
    }

    fn compute_relative(&self, alpha: &Partition) -> Result<RelativeData> {
        let n = self.q.order();
        let degree = n.max(1);
        let translations = self.q.left_translations();
        let mut seeds = Vec::new();
        for block in alpha.blocks() {
            let first = block[0];
            for &b in block.iter().skip(1) {
                seeds.push(translations[first].compose(&translations[b].inverse()));
            }
        }
        let dis_alpha = self.lmlt.normal_closure(&seeds)?;
        // kernels: elements moving every element within its own block
        let acts_trivially = |h: &Permutation| (0..n).all(|a| alpha.same_block(h.apply(a), a));
        let lmlt_kernel = PermGroup::from_elements(
            degree,
            self.lmlt.elements()?.iter().filter(|h| acts_trivially(h)),
        )?;
        let dis_kernel = PermGroup::from_elements(
            degree,
            self.dis.elements()?.iter().filter(|h| acts_trivially(h)),
        )?;
        Ok(RelativeData {
            dis_alpha,
            lmlt_kernel,
            dis_kernel,
        })
    }

    /// `Dis_α`: normal closure of `{L_a L_b^{-1} : a α b}` in `LMlt(Q)`.
    pub fn dis_alpha(&self, alpha: &Partition) -> Result<PermGroup> {
        Ok(self.relative(alpha)?.dis_alpha)
    }

    /// The kernels of the block action: `(LMlt^α, Dis^α)`.
    pub fn kernels(&self, alpha: &Partition) -> Result<(PermGroup, PermGroup)> {
        let rel = self.relative(alpha)?;
        Ok((rel.lmlt_kernel, rel.dis_kernel))
    }

    /// The block permutation induced by `h ∈ LMlt(Q)` on the blocks of `α`.
    pub fn pi_alpha(&self, alpha: &Partition, h: &Permutation) -> Result<Permutation> {
        if !self.lmlt.contains(h) {
            return Err(Error::NotInLMlt);
        }
        induced_block_permutation(alpha, h).ok_or(Error::NotACongruence)
    }
}

/// The permutation of block indices induced by `h`, if well defined.
pub fn induced_block_permutation(alpha: &Partition, h: &Permutation) -> Option<Permutation> {
    let labels = alpha.block_labels();
    let k = alpha.num_blocks();
    let mut images = vec![usize::MAX; k];
    for a in 0..alpha.n() {
        let from = labels[a];
        let to = labels[h.apply(a)];
        if images[from] == usize::MAX {
            images[from] = to;
        } else if images[from] != to {
            return None;
        }
    }
    Permutation::from_images(images).ok()
}

/// The action of a group on congruence blocks, with the per-element map.
pub fn quotient_action(g: &PermGroup, alpha: &Partition) -> Result<(PermGroup, BlockAction)> {
    let action = BlockAction {
        alpha: alpha.clone(),
    };
    let mut gens = Vec::new();
    for p in g.generators() {
        gens.push(action.image(p)?);
    }
    let group = PermGroup::generate(alpha.num_blocks().max(1), &gens)?;
    Ok((group, action))
}

/// Evaluates the block-permutation image of individual elements.
#[derive(Debug, Clone)]
pub struct BlockAction {
    alpha: Partition,
}

impl BlockAction {
    pub fn image(&self, p: &Permutation) -> Result<Permutation> {
        induced_block_permutation(&self.alpha, p).ok_or(Error::NotACongruence)
    }
}

/// Independent oracle for the displacement group: the set of products
/// `L_{x_1}^{k_1} … L_{x_m}^{k_m}` with exponent sum zero, computed by
/// breadth-first closure over (element, exponent sum) states.
///
/// The sum is tracked modulo the order of `L_0`, which is sound because
/// inserting `L_0^{±|L_0|}` shifts the sum by a full period without changing
/// the element.
pub fn dis_zero_sum_check(q: &LeftQuasigroup) -> Result<bool> {
    let n = q.order();
    if n == 0 {
        return Ok(true);
    }
    let lm = lmlt(q);
    if lm.order() > ELEMENT_ENUM_CAP {
        return Err(Error::OrderCapExceeded(lm.order()));
    }
    let translations = q.left_translations();
    let modulus = translations[0].order() as usize;
    let mut steps: Vec<(Permutation, usize)> = Vec::new();
    for t in &translations {
        steps.push((t.clone(), 1 % modulus));
        steps.push((t.inverse(), modulus - 1 % modulus));
    }
    let start = (Permutation::identity(n), 0usize);
    let mut seen: HashSet<(Permutation, usize)> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = vec![start];
    let mut zero_sum: HashSet<Permutation> = HashSet::new();
    zero_sum.insert(Permutation::identity(n));
    while let Some((h, s)) = queue.pop() {
        for (t, ds) in &steps {
            let nh = t.compose(&h);
            let ns = (s + ds) % modulus;
            let state = (nh, ns);
            if seen.insert(state.clone()) {
                if state.1 == 0 {
                    zero_sum.insert(state.0.clone());
                }
                queue.push(state);
            }
        }
    }
    let d = dis(q);
    if d.order() != zero_sum.len() as u128 {
        return Ok(false);
    }
    Ok(zero_sum.iter().all(|h| d.contains(h)))
}

/// Represents a connected quandle as a coset quandle over its displacement
/// group, returning the quandle and the verified isomorphism.
pub fn coset_representation(
    q: &LeftQuasigroup,
    a: usize,
) -> Result<(LeftQuasigroup, Vec<usize>)> {
    use crate::constructions::coset_quandle;
    use crate::groups::{FiniteGroup, GroupMap};

    if !q.is_quandle() {
        return Err(Error::NotQuandle);
    }
    if a >= q.order() {
        return Err(Error::PointOutOfRange(a));
    }
    let d = dis(q);
    if !d.is_transitive() && q.order() > 1 {
        return Err(Error::NotConnected);
    }
    let elements = d.elements()?;
    let index_of: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|x| {
            elements
                .iter()
                .map(|y| index_of[&x.compose(y)])
                .collect()
        })
        .collect();
    let group = FiniteGroup::from_table(table)?;
    let la = q.left_translation(a);
    let conj = GroupMap::new(
        &group,
        elements
            .iter()
            .map(|x| index_of[&la.conjugate(x)])
            .collect(),
    )?;
    let stabilizer: Vec<usize> = elements
        .iter()
        .enumerate()
        .filter(|(_, e)| e.apply(a) == a)
        .map(|(i, _)| i)
        .collect();
    let (coset, cosets) = coset_quandle(&group, &stabilizer, &conj)?;

    // natural bijection: x = g(a) corresponds to the coset of g
    let mut iso = vec![usize::MAX; q.order()];
    for (i, e) in elements.iter().enumerate() {
        let x = e.apply(a);
        let coset_index = cosets.coset_of(i);
        if iso[x] == usize::MAX {
            iso[x] = coset_index;
        } else if iso[x] != coset_index {
            return Err(Error::NotConnected);
        }
    }
    if iso.iter().any(|&v| v == usize::MAX) {
        return Err(Error::NotConnected);
    }
    for x in 0..q.order() {
        for y in 0..q.order() {
            if coset.mul(iso[x], iso[y]) != iso[q.mul(x, y)] {
                return Err(Error::NotQuandle);
            }
        }
    }
    Ok((coset, iso))
}
