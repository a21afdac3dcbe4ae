//! Permutation groups with a deterministic stabilizer chain.
//!
//! The chain is built by the classic Schreier–Sims procedure with no
//! randomization: base points are taken in increasing index order (or from an
//! explicit hint), so orders and transversals are reproducible across runs.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Above this order, exact operations that enumerate elements refuse to run.
pub const ELEMENT_ENUM_CAP: u128 = 100_000;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// point -> coset representative mapping `base` to the point.
    transversal: BTreeMap<usize, Permutation>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = BTreeMap::new();
        transversal.insert(base, Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal.clear();
        self.transversal
            .insert(self.base, Permutation::identity(degree));
        let mut queue = vec![self.base];
        while let Some(p) = queue.pop() {
            let rep = self.transversal[&p].clone();
            for g in &self.gens {
                let q = g.apply(p);
                if !self.transversal.contains_key(&q) {
                    self.transversal.insert(q, g.compose(&rep));
                    queue.push(q);
                }
            }
        }
    }
}

/// A finite permutation group given by generators, with a stabilizer chain.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: u128,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: 1,
        }
    }

    /// Builds the stabilizer chain for the group generated by `gens`.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::generate_with_base_hint(degree, gens, &[])
    }

    /// Like [`PermGroup::generate`], but seeds the base with the given points
    /// (in order) before falling back to smallest moved points.
    pub fn generate_with_base_hint(
        degree: usize,
        gens: &[Permutation],
        base_hint: &[usize],
    ) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::MixedDegrees);
            }
        }
        let mut levels: Vec<Level> = base_hint
            .iter()
            .map(|&b| Level::new(degree, b))
            .collect();
        for g in gens {
            add_generator(&mut levels, degree, g.clone());
        }
        let order = levels
            .iter()
            .map(|l| l.transversal.len() as u128)
            .product();
        Ok(PermGroup {
            degree,
            generators: gens.iter().filter(|g| !g.is_identity()).cloned().collect(),
            levels,
            order,
        })
    }

    /// Builds a group from a (possibly large) set of its elements, keeping
    /// only the elements that enlarge the group as generators.
    pub fn from_elements<'a, I>(degree: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut group = PermGroup::trivial(degree);
        let mut gens: Vec<Permutation> = Vec::new();
        for e in elements {
            if !e.is_identity() && !group.contains(e) {
                gens.push(e.clone());
                group = PermGroup::generate(degree, &gens)?;
            }
        }
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Membership by sifting through the chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        match self.strip(p) {
            Some(residue) => residue.is_identity(),
            None => false,
        }
    }

    fn strip(&self, p: &Permutation) -> Option<Permutation> {
        let mut h = p.clone();
        for level in &self.levels {
            let image = h.apply(level.base);
            match level.transversal.get(&image) {
                Some(rep) => h = rep.inverse().compose(&h),
                None => return None,
            }
        }
        Some(h)
    }

    /// All group elements in a deterministic order. Errors above the cap.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.elements_capped(ELEMENT_ENUM_CAP)
    }

    pub fn elements_capped(&self, cap: u128) -> Result<Vec<Permutation>> {
        if self.order > cap {
            return Err(Error::OrderCapExceeded(self.order));
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.transversal.len());
            for rep in level.transversal.values() {
                for e in &out {
                    next.push(rep.compose(e));
                }
            }
            out = next;
        }
        out.sort_unstable();
        debug_assert_eq!(out.len() as u128, self.order);
        Ok(out)
    }

    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange(point));
        }
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = vec![point];
        let mut orbit = vec![point];
        while let Some(p) = queue.pop() {
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                    queue.push(q);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// Orbit partition of the natural action, as a least-representative array.
    pub fn orbit_reps(&self) -> Vec<usize> {
        let mut rep: Vec<usize> = (0..self.degree).collect();
        for start in 0..self.degree {
            if rep[start] != start {
                continue;
            }
            let mut queue = vec![start];
            while let Some(p) = queue.pop() {
                for g in &self.generators {
                    let q = g.apply(p);
                    if rep[q] != start && rep[q] == q {
                        rep[q] = start;
                        queue.push(q);
                    }
                }
            }
        }
        rep
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// The stabilizer of a point, extracted from a chain rebased at it.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange(point));
        }
        let rebased =
            PermGroup::generate_with_base_hint(self.degree, &self.generators, &[point])?;
        let mut gens: Vec<Permutation> = Vec::new();
        for level in rebased.levels.iter().skip(1) {
            for g in &level.gens {
                if !gens.contains(g) {
                    gens.push(g.clone());
                }
            }
        }
        PermGroup::generate(self.degree, &gens)
    }

    /// Set-wise stabilizer of a block, by element enumeration under the cap.
    pub fn block_stabilizer(&self, block: &[usize]) -> Result<PermGroup> {
        for &p in block {
            if p >= self.degree {
                return Err(Error::PointOutOfRange(p));
            }
        }
        let in_block: HashSet<usize> = block.iter().copied().collect();
        let elements = self.elements()?;
        let kept = elements
            .iter()
            .filter(|g| block.iter().all(|&p| in_block.contains(&g.apply(p))));
        PermGroup::from_elements(self.degree, kept)
    }

    /// Smallest normal subgroup of `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut closure = PermGroup::trivial(self.degree);
        let mut queue: Vec<Permutation> = seeds.to_vec();
        while let Some(s) = queue.pop() {
            if s.is_identity() || closure.contains(&s) {
                continue;
            }
            gens.push(s.clone());
            closure = PermGroup::generate(self.degree, &gens)?;
            for g in &self.generators {
                queue.push(g.conjugate(&s));
            }
        }
        Ok(closure)
    }

    /// Elements commuting with every generator, by enumeration under the cap.
    pub fn center(&self) -> Result<PermGroup> {
        let elements = self.elements()?;
        let kept = elements
            .iter()
            .filter(|z| self.generators.iter().all(|g| g.compose(z) == z.compose(g)));
        PermGroup::from_elements(self.degree, kept)
    }

    /// `N_G(H)`, by enumeration of `G` under the cap. `H` must be a subgroup.
    pub fn normalizer(&self, subgroup: &PermGroup) -> Result<PermGroup> {
        let elements = self.elements()?;
        let kept = elements.iter().filter(|g| {
            subgroup
                .generators
                .iter()
                .all(|h| subgroup.contains(&g.conjugate(h)))
        });
        PermGroup::from_elements(self.degree, kept)
    }

    /// Largest normal subgroup of `G` contained in `H` (the core of `H`).
    pub fn normal_core(&self, subgroup: &PermGroup) -> Result<PermGroup> {
        let mut kept: Vec<Permutation> = subgroup.elements()?;
        loop {
            let in_set: HashSet<&Permutation> = kept.iter().collect();
            let next: Vec<Permutation> = kept
                .iter()
                .filter(|k| {
                    self.generators
                        .iter()
                        .all(|g| in_set.contains(&g.conjugate(k)))
                })
                .cloned()
                .collect();
            if next.len() == kept.len() {
                break;
            }
            kept = next;
        }
        PermGroup::from_elements(self.degree, kept.iter())
    }

    /// Commutator subgroup `[self, other]` inside `parent`: the normal closure
    /// in `parent` of the generator commutators.
    pub fn commutator_subgroup(parent: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
        let mut seeds = Vec::new();
        for x in &a.generators {
            for y in &b.generators {
                seeds.push(x.commutator(y));
            }
        }
        parent.normal_closure(&seeds)
    }

    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        PermGroup::commutator_subgroup(self, self, self)
    }

    /// `G ≥ G' ≥ G'' ≥ …`, stopping when the order stabilizes.
    pub fn derived_series(&self) -> Result<Vec<PermGroup>> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup()?;
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        Ok(series)
    }

    /// `G = γ_1 ≥ γ_2 = [G, γ_1] ≥ …`, stopping when the order stabilizes.
    pub fn lower_central_series(&self) -> Result<Vec<PermGroup>> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = PermGroup::commutator_subgroup(self, self, last)?;
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        Ok(series)
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.last().unwrap().is_trivial())
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.lower_central_series()?.last().unwrap().is_trivial())
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, g)| self.generators[i..].iter().all(|h| g.compose(h) == h.compose(g)))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }
}

fn add_generator(levels: &mut Vec<Level>, degree: usize, g: Permutation) {
    let (residue, depth) = strip_partial(levels, 0, &g);
    if residue.is_identity() {
        return;
    }
    if depth == levels.len() {
        let base = residue
            .images()
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x)
            .map(|(i, _)| i)
            .expect("non-identity residue moves a point");
        levels.push(Level::new(degree, base));
    }
    for level in levels.iter_mut().take(depth + 1) {
        level.gens.push(residue.clone());
    }
    for k in (0..=depth).rev() {
        close_level(levels, degree, k);
    }
}

fn strip_partial(levels: &[Level], start: usize, p: &Permutation) -> (Permutation, usize) {
    let mut h = p.clone();
    for (i, level) in levels.iter().enumerate().skip(start) {
        let image = h.apply(level.base);
        match level.transversal.get(&image) {
            Some(rep) => h = rep.inverse().compose(&h),
            None => return (h, i),
        }
    }
    (h, levels.len())
}

/// Re-establishes the chain condition at `level`: every Schreier generator of
/// the level must sift to the identity through the deeper levels.
fn close_level(levels: &mut Vec<Level>, degree: usize, level: usize) {
    loop {
        levels[level].rebuild_orbit(degree);
        let points: Vec<usize> = levels[level].transversal.keys().copied().collect();
        let mut dirty = false;
        'search: for &p in &points {
            let rep = levels[level].transversal[&p].clone();
            for gi in 0..levels[level].gens.len() {
                let g = levels[level].gens[gi].clone();
                let image = g.apply(p);
                let target = levels[level].transversal[&image].clone();
                let schreier = target.inverse().compose(&g).compose(&rep);
                if schreier.is_identity() {
                    continue;
                }
                let (residue, depth) = strip_partial(levels, level + 1, &schreier);
                if residue.is_identity() {
                    continue;
                }
                if depth == levels.len() {
                    let base = residue
                        .images()
                        .iter()
                        .enumerate()
                        .find(|&(i, &x)| i != x)
                        .map(|(i, _)| i)
                        .expect("non-identity residue moves a point");
                    levels.push(Level::new(degree, base));
                }
                for l in levels.iter_mut().take(depth + 1).skip(level + 1) {
                    l.gens.push(residue.clone());
                }
                for k in ((level + 1)..=depth).rev() {
                    close_level(levels, degree, k);
                }
                dirty = true;
                break 'search;
            }
        }
        if !dirty {
            return;
        }
    }
}
