//! Partitions of `{0, …, n-1}` in least-representative form.

use std::fmt;

use crate::error::{Error, Result};

/// A partition canonicalized so that `rep[i]` is the least element of the
/// block of `i`. Cheap to compare and deterministic to print.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rep: Vec<usize>,
}

impl Partition {
    /// The discrete partition (every block a singleton).
    pub fn singletons(n: usize) -> Self {
        Partition {
            rep: (0..n).collect(),
        }
    }

    /// The one-block partition.
    pub fn full(n: usize) -> Self {
        Partition { rep: vec![0; n] }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut rep = vec![usize::MAX; n];
        for block in blocks {
            let least = *block.iter().min().ok_or(Error::NotAPartition)?;
            for &x in block {
                if x >= n || rep[x] != usize::MAX {
                    return Err(Error::NotAPartition);
                }
                rep[x] = least;
            }
        }
        if rep.iter().any(|&r| r == usize::MAX) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition { rep })
    }

    /// Canonicalizes an arbitrary block-label array.
    pub fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut rep = vec![usize::MAX; n];
        for i in 0..n {
            if rep[i] != usize::MAX {
                continue;
            }
            for j in i..n {
                if labels[j] == labels[i] {
                    rep[j] = i;
                }
            }
        }
        Partition { rep }
    }

    pub fn n(&self) -> usize {
        self.rep.len()
    }

    pub fn rep(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    pub fn is_discrete(&self) -> bool {
        self.rep.iter().enumerate().all(|(i, &r)| i == r)
    }

    pub fn is_full(&self) -> bool {
        self.rep.iter().all(|&r| r == 0)
    }

    /// Blocks sorted by their least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index_of = vec![usize::MAX; self.rep.len()];
        for (i, &r) in self.rep.iter().enumerate() {
            if r == i {
                index_of[i] = blocks.len();
                blocks.push(vec![i]);
            } else {
                blocks[index_of[r]].push(i);
            }
        }
        blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.rep.iter().enumerate().filter(|&(i, &r)| i == r).count()
    }

    /// Index of the block of `x` in the order of [`Partition::blocks`].
    pub fn block_index(&self, x: usize) -> usize {
        let r = self.rep[x];
        self.rep
            .iter()
            .enumerate()
            .take(r)
            .filter(|&(i, &s)| i == s)
            .count()
    }

    /// Block-index array, aligned with [`Partition::blocks`].
    pub fn block_labels(&self) -> Vec<usize> {
        let mut label_of_rep = vec![usize::MAX; self.rep.len()];
        let mut next = 0;
        for (i, &r) in self.rep.iter().enumerate() {
            if r == i {
                label_of_rep[i] = next;
                next += 1;
            }
        }
        self.rep.iter().map(|&r| label_of_rep[r]).collect()
    }

    /// Refinement order: `self ≤ other` iff every block of `self` is
    /// contained in a block of `other`.
    pub fn leq(&self, other: &Partition) -> bool {
        (0..self.rep.len()).all(|i| other.rep[i] == other.rep[self.rep[i]])
    }

    /// Lattice join in the partition lattice (transitive closure of the union).
    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.rep.len());
        for i in 0..self.rep.len() {
            uf.union(i, self.rep[i]);
            uf.union(i, other.rep[i]);
        }
        uf.into_partition()
    }

    /// Lattice meet: common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        let n = self.rep.len();
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (self.rep[i], other.rep[i])).collect();
        let mut rep = vec![usize::MAX; n];
        for i in 0..n {
            if rep[i] != usize::MAX {
                continue;
            }
            for j in i..n {
                if pairs[j] == pairs[i] {
                    rep[j] = i;
                }
            }
        }
        Partition { rep }
    }
}

impl fmt::Display for Partition {
    /// 1-based sorted block list, e.g. `{{1,2,3},{4,5,6},{7,8,9}}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (bi, block) in self.blocks().iter().enumerate() {
            if bi > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (i, x) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Plain union-find used to build partitions incrementally.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Merges the classes of `a` and `b`; returns false if already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so canonicalization stays cheap
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let rep = (0..n).map(|i| self.find(i)).collect();
        Partition { rep }
    }
}
