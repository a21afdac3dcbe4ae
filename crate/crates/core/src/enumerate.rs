//! Isomorphism-free generation of small structures: canonical forms by
//! minimal-table search, class-constrained backtracking enumeration, a
//! naive brute-force oracle, and persisted corpus manifests.

use std::collections::HashMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::properties;
use crate::table::LeftQuasigroup;

/// Relabeling-search cap for canonical forms.
pub const CANONICAL_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureClass {
    LeftQuasigroup,
    Idempotent,
    Rack,
    Quandle,
    InvolutoryQuandle,
    Latin,
}

impl StructureClass {
    pub fn name(self) -> &'static str {
        match self {
            StructureClass::LeftQuasigroup => "left-quasigroup",
            StructureClass::Idempotent => "idempotent",
            StructureClass::Rack => "rack",
            StructureClass::Quandle => "quandle",
            StructureClass::InvolutoryQuandle => "involutory-quandle",
            StructureClass::Latin => "latin",
        }
    }

    pub fn matches(self, q: &LeftQuasigroup) -> bool {
        match self {
            StructureClass::LeftQuasigroup => true,
            StructureClass::Idempotent => q.is_idempotent(),
            StructureClass::Rack => q.is_rack(),
            StructureClass::Quandle => q.is_quandle(),
            StructureClass::InvolutoryQuandle => q.is_quandle() && q.is_involutory(),
            StructureClass::Latin => properties::is_latin(q),
        }
    }

    /// Enumeration cap. Left-distributive classes propagate rows and reach
    /// higher orders; the unconstrained classes are capped where the raw
    /// table space stays tractable.
    pub fn cap(self) -> usize {
        match self {
            StructureClass::LeftQuasigroup => 4,
            StructureClass::Idempotent => 5,
            StructureClass::Latin => 5,
            StructureClass::Rack => 6,
            StructureClass::Quandle | StructureClass::InvolutoryQuandle => 8,
        }
    }

    /// Brute-force oracle cap (full table space, leaf filtering only).
    pub fn oracle_cap(self) -> usize {
        match self {
            StructureClass::LeftQuasigroup => 3,
            // latin rows admit no per-row filter, so the oracle explores all
            // n!^n tables; order 5 would mean 120^5 of them
            StructureClass::Idempotent | StructureClass::Rack | StructureClass::Latin => 4,
            StructureClass::Quandle | StructureClass::InvolutoryQuandle => 5,
        }
    }

    fn uses_left_distributivity(self) -> bool {
        matches!(
            self,
            StructureClass::Rack | StructureClass::Quandle | StructureClass::InvolutoryQuandle
        )
    }

    fn row_ok(self, a: usize, images: &[usize]) -> bool {
        match self {
            StructureClass::LeftQuasigroup | StructureClass::Rack | StructureClass::Latin => true,
            StructureClass::Idempotent | StructureClass::Quandle => images[a] == a,
            StructureClass::InvolutoryQuandle => {
                images[a] == a && images.iter().enumerate().all(|(i, &v)| images[v] == i)
            }
        }
    }
}

impl FromStr for StructureClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left-quasigroup" | "lq" => Ok(StructureClass::LeftQuasigroup),
            "idempotent" => Ok(StructureClass::Idempotent),
            "rack" => Ok(StructureClass::Rack),
            "quandle" => Ok(StructureClass::Quandle),
            "involutory-quandle" | "involutory" => Ok(StructureClass::InvolutoryQuandle),
            "latin" => Ok(StructureClass::Latin),
            other => Err(Error::Parse(format!("unknown structure class '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EnumSpec {
    pub order: usize,
    pub class: StructureClass,
    pub canonical_only: bool,
}

/// Lexicographically least permutation with the given multiset of cycle
/// lengths: cycles laid out on consecutive blocks, shortest first.
fn min_perm_of_cycle_type(mut lengths: Vec<usize>) -> Permutation {
    lengths.sort_unstable();
    let n: usize = lengths.iter().sum();
    let mut images = vec![0usize; n];
    let mut start = 0;
    for len in lengths {
        for i in 0..len {
            images[start + i] = if i + 1 == len { start } else { start + i + 1 };
        }
        start += len;
    }
    Permutation::from_images(images).expect("valid cycle layout")
}

/// Lexicographically least multiplication table over all relabelings.
/// Permutation structures (all rows equal) short-circuit to the minimal
/// conjugate of their translation; everything else runs a pruned
/// backtracking search over element orderings.
pub fn canonical_form(q: &LeftQuasigroup) -> Result<LeftQuasigroup> {
    let n = q.order();
    if n > CANONICAL_CAP {
        return Err(Error::OrderCapExceeded(n as u128));
    }
    if n <= 1 {
        return Ok(q.clone());
    }
    if q.is_permutation_lq() {
        // the relabeled table is the table of the conjugated translation
        let minimal = min_perm_of_cycle_type(q.left_translation(0).cycle_type());
        return Ok(crate::constructions::permutation_lq(&minimal));
    }
    let mut best = q.flat();
    {
        // seed with the identity relabeling; the search only improves it
        let mut search = CanonicalSearch {
            q,
            n,
            to_new: vec![usize::MAX; n],
            to_old: vec![usize::MAX; n],
            best: &mut best,
        };
        search.descend(0);
    }
    let rows: Vec<Vec<usize>> = best.chunks(n).map(|r| r.to_vec()).collect();
    LeftQuasigroup::from_rows(rows)
}

struct CanonicalSearch<'a> {
    q: &'a LeftQuasigroup,
    n: usize,
    to_new: Vec<usize>,
    to_old: Vec<usize>,
    best: &'a mut Vec<usize>,
}

impl CanonicalSearch<'_> {
    fn descend(&mut self, depth: usize) {
        if depth == self.n {
            let mut flat = Vec::with_capacity(self.n * self.n);
            for r in 0..self.n {
                for c in 0..self.n {
                    flat.push(self.to_new[self.q.mul(self.to_old[r], self.to_old[c])]);
                }
            }
            if flat < *self.best {
                *self.best = flat;
            }
            return;
        }
        for orig in 0..self.n {
            if self.to_new[orig] != usize::MAX {
                continue;
            }
            self.to_new[orig] = depth;
            self.to_old[depth] = orig;
            if self.viable(depth + 1) {
                self.descend(depth + 1);
            }
            self.to_new[orig] = usize::MAX;
            self.to_old[depth] = usize::MAX;
        }
    }

    /// Whether the partial relabeling can still reach a table ≤ best.
    ///
    /// Entries must be compared in the lexicographic order of the full
    /// flattened table, stopping at the first one that is not yet pinned
    /// down.  Columns ≥ `assigned` are entirely unknown (the right operand
    /// has no preimage yet, so the entry can take any value), which means
    /// only the first `assigned` entries of row 0 can be compared before
    /// an unknown position is reached; an entry whose product element is
    /// unassigned is known to get a label ≥ `assigned`, which still allows
    /// a one-sided comparison there.
    fn viable(&self, assigned: usize) -> bool {
        for c in 0..assigned {
            let v = self.to_new[self.q.mul(self.to_old[0], self.to_old[c])];
            if v == usize::MAX {
                // entry ≥ assigned; prune only if certainly worse
                return assigned <= self.best[c];
            }
            match v.cmp(&self.best[c]) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if images.len() == n {
            out.push(Permutation::from_images(images.clone()).unwrap());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

/// Whether `p` is lexicographically least among its conjugates by
/// permutations fixing 0. Every isomorphism class has a representative
/// whose first row satisfies this, so restricting row 0 keeps the
/// enumeration exhaustive up to isomorphism.
fn is_stabilizer_minimal(p: &Permutation, stabilizer: &[Permutation]) -> bool {
    let n = p.degree();
    for tau in stabilizer {
        // conj = tau p tau^{-1}, compared lazily
        for i in 0..n {
            let conj_i = tau.apply(p.apply(tau.inverse().apply(i)));
            match conj_i.cmp(&p.apply(i)) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    true
}

/// A relabeling kept as `(images, inverse images)`.
type Sym = (Vec<usize>, Vec<usize>);

fn conjugate_row(tau: &Sym, row: &[usize]) -> Vec<usize> {
    let (t, t_inv) = tau;
    (0..row.len()).map(|i| t[row[t_inv[i]]]).collect()
}

/// Lazily compares `tau row tau^{-1}` with `row`.
fn conjugate_cmp(tau: &Sym, row: &[usize]) -> std::cmp::Ordering {
    let (t, t_inv) = tau;
    for i in 0..row.len() {
        match t[row[t_inv[i]]].cmp(&row[i]) {
            std::cmp::Ordering::Equal => {}
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

struct RowSearch<'a> {
    n: usize,
    class: StructureClass,
    candidates: &'a [Vec<Vec<usize>>], // per row index
    out: Vec<Vec<Vec<usize>>>,         // completed tables
}

impl RowSearch<'_> {
    /// `sym` holds the relabelings fixing every assigned row index and its
    /// row; a candidate conjugated below itself by one of them is skipped,
    /// since the smaller conjugate generates an isomorphic completion that
    /// the search reaches anyway.
    fn run(&mut self, rows: &mut Vec<Option<Vec<usize>>>, sym: &[Sym]) {
        let next = match rows.iter().position(|r| r.is_none()) {
            Some(a) => a,
            None => {
                let table: Vec<Vec<usize>> =
                    rows.iter().map(|r| r.clone().unwrap()).collect();
                self.out.push(table);
                return;
            }
        };
        'cand: for cand in &self.candidates[next] {
            for tau in sym {
                if tau.0[next] == next
                    && conjugate_cmp(tau, cand) == std::cmp::Ordering::Less
                {
                    continue 'cand;
                }
            }
            let mut branch = rows.clone();
            branch[next] = Some(cand.clone());
            let mut branch_sym: Vec<Sym> = sym
                .iter()
                .filter(|tau| tau.0[next] == next && conjugate_row(tau, cand) == *cand)
                .cloned()
                .collect();
            if self.consistent(&mut branch, &mut branch_sym, vec![next]) {
                self.run(&mut branch, &branch_sym);
            }
        }
    }

    /// Checks the partial table and, for left-distributive classes,
    /// propagates the forced rows `L_{a∗b} = L_aL_bL_a^{-1}` to a fixpoint,
    /// narrowing `sym` to the relabelings that still fix every row. `fresh`
    /// seeds the worklist with the newly assigned row indices; every pair
    /// involving a new row is examined in both orders, so all assigned
    /// pairs are eventually covered.
    fn consistent(
        &self,
        rows: &mut Vec<Option<Vec<usize>>>,
        sym: &mut Vec<Sym>,
        fresh: Vec<usize>,
    ) -> bool {
        let n = self.n;
        if self.class == StructureClass::Latin {
            for c in 0..n {
                let mut seen = vec![false; n];
                for row in rows.iter().flatten() {
                    if seen[row[c]] {
                        return false;
                    }
                    seen[row[c]] = true;
                }
            }
            return true;
        }
        if !self.class.uses_left_distributivity() {
            return true;
        }
        let mut queue = fresh;
        while let Some(f) = queue.pop() {
            let assigned: Vec<usize> = (0..n).filter(|&a| rows[a].is_some()).collect();
            for &other in &assigned {
                for (a, b) in [(f, other), (other, f)] {
                    let ra = rows[a].as_ref().unwrap().clone();
                    let rb = rows[b].as_ref().unwrap();
                    let target = ra[b]; // a∗b
                    // forced = L_a ∘ L_b ∘ L_a^{-1}
                    let mut inv_a = vec![0usize; n];
                    for (i, &v) in ra.iter().enumerate() {
                        inv_a[v] = i;
                    }
                    let forced: Vec<usize> = (0..n).map(|x| ra[rb[inv_a[x]]]).collect();
                    match &rows[target] {
                        Some(existing) => {
                            if *existing != forced {
                                return false;
                            }
                        }
                        None => {
                            if !self.class.row_ok(target, &forced) {
                                return false;
                            }
                            sym.retain(|tau| {
                                tau.0[target] == target
                                    && conjugate_row(tau, &forced) == forced
                            });
                            rows[target] = Some(forced);
                            queue.push(target);
                        }
                    }
                }
            }
        }
        true
    }
}

fn cheap_fingerprint(q: &LeftQuasigroup) -> Vec<Vec<usize>> {
    let n = q.order();
    let mut per: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            let mut v = q.left_translation(a).cycle_type();
            v.push(usize::from(q.mul(a, a) == a));
            let mut counts = vec![0usize; n];
            for b in 0..n {
                counts[q.mul(b, a)] += 1;
            }
            counts.sort_unstable();
            v.extend(counts);
            v.push(q.sg(&[a]).expect("valid seed").len());
            v
        })
        .collect();
    per.sort();
    per
}

/// Keeps one representative per isomorphism class, scanning in the given
/// (deterministic) order.
fn dedup_isomorphic(tables: Vec<LeftQuasigroup>) -> Vec<LeftQuasigroup> {
    let mut buckets: HashMap<Vec<Vec<usize>>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<LeftQuasigroup> = Vec::new();
    for q in tables {
        let fp = cheap_fingerprint(&q);
        let bucket = buckets.entry(fp).or_default();
        if !bucket.iter().any(|&i| reps[i].is_isomorphic(&q)) {
            bucket.push(reps.len());
            reps.push(q);
        }
    }
    reps
}

/// Enumerates one representative per isomorphism class. Output order is
/// deterministic (sorted by table bytes) regardless of worker count; with
/// `canonical_only` the representatives are canonical forms.
pub fn enumerate(spec: EnumSpec) -> Result<Vec<LeftQuasigroup>> {
    let n = spec.order;
    if n == 0 || n > spec.class.cap() {
        return Err(Error::OrderCapExceeded(n as u128));
    }
    let perms = all_permutations(n);
    let stabilizer: Vec<Permutation> = perms
        .iter()
        .filter(|p| p.apply(0) == 0)
        .cloned()
        .collect();
    let candidates: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|a| {
            perms
                .iter()
                .filter(|p| {
                    let images: Vec<usize> = (0..n).map(|i| p.apply(i)).collect();
                    spec.class.row_ok(a, &images)
                        && (a != 0 || is_stabilizer_minimal(p, &stabilizer))
                })
                .map(|p| (0..n).map(|i| p.apply(i)).collect())
                .collect()
        })
        .collect();
    // partition the search by first-row choice
    let mut raw: Vec<Vec<usize>> = candidates[0]
        .par_iter()
        .flat_map(|first| {
            let mut search = RowSearch {
                n,
                class: spec.class,
                candidates: &candidates,
                out: Vec::new(),
            };
            let mut rows: Vec<Option<Vec<usize>>> = vec![None; n];
            rows[0] = Some(first.clone());
            // relabelings fixing 0 and stabilizing the chosen first row
            let mut sym: Vec<Sym> = perms
                .iter()
                .filter(|p| p.apply(0) == 0)
                .map(|p| {
                    let images: Vec<usize> = (0..n).map(|i| p.apply(i)).collect();
                    let inverse: Vec<usize> = {
                        let mut inv = vec![0usize; n];
                        for (i, &v) in images.iter().enumerate() {
                            inv[v] = i;
                        }
                        inv
                    };
                    (images, inverse)
                })
                .filter(|tau| conjugate_row(tau, first) == *first)
                .collect();
            if search.consistent(&mut rows, &mut sym, vec![0]) {
                search.run(&mut rows, &sym);
            }
            search
                .out
                .into_par_iter()
                .map(|t| t.into_iter().flatten().collect::<Vec<usize>>())
        })
        .collect();
    raw.sort_unstable();
    raw.dedup();
    let tables: Vec<LeftQuasigroup> = raw
        .into_iter()
        .map(|flat| {
            let rows: Vec<Vec<usize>> = flat.chunks(n).map(|r| r.to_vec()).collect();
            LeftQuasigroup::from_rows(rows).expect("search emits valid rows")
        })
        .filter(|q| spec.class.matches(q))
        .collect();
    let reps = dedup_isomorphic(tables);
    let mut out = if spec.canonical_only {
        reps.into_iter()
            .map(|q| canonical_form(&q))
            .collect::<Result<Vec<_>>>()?
    } else {
        reps
    };
    out.sort_by_key(|q| q.flat());
    out.dedup_by_key(|q| q.flat());
    Ok(out)
}

/// Independent naive oracle: walks the full per-row candidate space with
/// no propagation and no symmetry reduction, filters by the class
/// predicate, and groups by isomorphism.
pub fn naive_enumerate(order: usize, class: StructureClass) -> Result<Vec<LeftQuasigroup>> {
    if order == 0 || order > class.oracle_cap() {
        return Err(Error::OrderCapExceeded(order as u128));
    }
    let n = order;
    let perms = all_permutations(n);
    let candidates: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|a| {
            perms
                .iter()
                .map(|p| (0..n).map(|i| p.apply(i)).collect::<Vec<usize>>())
                .filter(|images| class.row_ok(a, images))
                .collect()
        })
        .collect();
    let mut all: Vec<LeftQuasigroup> = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fn rec(
        n: usize,
        class: StructureClass,
        candidates: &[Vec<Vec<usize>>],
        rows: &mut Vec<Vec<usize>>,
        all: &mut Vec<LeftQuasigroup>,
    ) {
        if rows.len() == n {
            let q = LeftQuasigroup::from_rows(rows.clone()).expect("rows are permutations");
            if class.matches(&q) {
                all.push(q);
            }
            return;
        }
        for cand in &candidates[rows.len()] {
            rows.push(cand.clone());
            rec(n, class, candidates, rows, all);
            rows.pop();
        }
    }
    rec(n, class, &candidates, &mut rows, &mut all);
    let mut out = dedup_isomorphic(all);
    out.sort_by_key(|q| q.flat());
    Ok(out)
}

/// One corpus slice: every canonical table of a class at one order,
/// row-major and 1-based for interchange.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CorpusEntry {
    pub class: String,
    pub order: usize,
    pub count: usize,
    pub tables: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CorpusManifest {
    pub entries: Vec<CorpusEntry>,
}

impl CorpusEntry {
    pub fn structures(&self) -> Result<Vec<LeftQuasigroup>> {
        self.tables
            .iter()
            .map(|flat| {
                if flat.len() != self.order * self.order {
                    return Err(Error::NotSquare);
                }
                let rows: Vec<Vec<usize>> =
                    flat.chunks(self.order).map(|r| r.to_vec()).collect();
                LeftQuasigroup::from_rows_one_based(rows)
            })
            .collect()
    }
}

impl CorpusManifest {
    pub fn structures(&self) -> Result<Vec<LeftQuasigroup>> {
        let mut out = Vec::new();
        for entry in &self.entries {
            out.extend(entry.structures()?);
        }
        Ok(out)
    }
}

/// Enumerates a class for all orders up to `max_order` into a manifest.
pub fn corpus(max_order: usize, class: StructureClass) -> Result<CorpusManifest> {
    let mut entries = Vec::new();
    for order in 1..=max_order {
        let tables = enumerate(EnumSpec {
            order,
            class,
            canonical_only: true,
        })?;
        entries.push(CorpusEntry {
            class: class.name().to_string(),
            order,
            count: tables.len(),
            tables: tables
                .iter()
                .map(|q| q.flat().iter().map(|&v| v + 1).collect())
                .collect(),
        });
    }
    Ok(CorpusManifest { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::fixtures::*;

    fn count(order: usize, class: StructureClass) -> usize {
        enumerate(EnumSpec {
            order,
            class,
            canonical_only: true,
        })
        .unwrap()
        .len()
    }

    #[test]
    fn canonical_form_basics() {
        let p4 = projection(4);
        assert_eq!(canonical_form(&p4).unwrap().flat(), p4.flat());
        // idempotent as a map
        let c = canonical_form(&t9()).unwrap();
        assert_eq!(canonical_form(&c).unwrap().flat(), c.flat());
        // invariant under relabeling
        let r4 = dihedral(4);
        let relabeled = r4.relabel(&[2, 0, 3, 1]);
        assert_eq!(
            canonical_form(&r4).unwrap().flat(),
            canonical_form(&relabeled).unwrap().flat()
        );
        // conjugation quandle of transpositions of Sym(3) ≅ R_3
        let s3 = crate::groups::symmetric(3);
        let class = s3.conjugacy_class((0..6).find(|&x| s3.element_order(x) == 2).unwrap());
        let (conj, _) = crate::constructions::conj_quandle(&s3, &class).unwrap();
        assert_eq!(
            canonical_form(&conj).unwrap().flat(),
            canonical_form(&dihedral(3)).unwrap().flat()
        );
        assert!(matches!(
            canonical_form(&projection(13)),
            Err(Error::OrderCapExceeded(_))
        ));
    }

    #[test]
    fn enumeration_small_counts() {
        // quandles per order: 1, 1, 3, 7, 22
        assert_eq!(count(1, StructureClass::Quandle), 1);
        assert_eq!(count(2, StructureClass::Quandle), 1);
        assert_eq!(count(3, StructureClass::Quandle), 3);
        assert_eq!(count(4, StructureClass::Quandle), 7);
        // the only order-2 involutory quandle is the projection square
        let two = enumerate(EnumSpec {
            order: 2,
            class: StructureClass::InvolutoryQuandle,
            canonical_only: true,
        })
        .unwrap();
        assert_eq!(two.len(), 1);
        assert!(two[0].is_projection());
        assert!(matches!(
            enumerate(EnumSpec {
                order: 9,
                class: StructureClass::Quandle,
                canonical_only: true
            }),
            Err(Error::OrderCapExceeded(_))
        ));
    }

    #[test]
    fn oracle_agreement() {
        for class in [
            StructureClass::LeftQuasigroup,
            StructureClass::Idempotent,
            StructureClass::Rack,
            StructureClass::Quandle,
            StructureClass::InvolutoryQuandle,
            StructureClass::Latin,
        ] {
            for order in 1..=class.oracle_cap().min(4) {
                let fast = count(order, class);
                let naive = naive_enumerate(order, class).unwrap().len();
                assert_eq!(fast, naive, "count mismatch: {} order {order}", class.name());
            }
        }
    }

    #[test]
    fn emitted_tables_are_valid_and_distinct() {
        let quandles = enumerate(EnumSpec {
            order: 4,
            class: StructureClass::Quandle,
            canonical_only: true,
        })
        .unwrap();
        for q in &quandles {
            assert!(q.is_quandle());
        }
        for (i, a) in quandles.iter().enumerate() {
            for b in &quandles[i + 1..] {
                assert!(!a.is_isomorphic(b));
            }
        }
    }

    #[test]
    fn corpus_manifests_are_deterministic() {
        let a = corpus(4, StructureClass::Quandle).unwrap();
        let b = corpus(4, StructureClass::Quandle).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        // round-trip through structures
        let total: usize = a.entries.iter().map(|e| e.count).sum();
        assert_eq!(a.structures().unwrap().len(), total);
        assert_eq!(a.entries.last().unwrap().order, 4);
    }
}
