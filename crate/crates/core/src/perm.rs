//! Permutations of `{0, …, n-1}` in image-array form.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, …, n-1}`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image array, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::PointOutOfRange(x));
            }
            if seen[x] {
                return Err(Error::RowNotPermutation(0));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cyc in cycles {
            for i in 0..cyc.len() {
                let from = cyc[i];
                let to = cyc[(i + 1) % cyc.len()];
                if from >= degree || to >= degree {
                    return Err(Error::PointOutOfRange(from.max(to)));
                }
                images[from] = to;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Composition as functions: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `self * other * self^{-1}`.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        self.compose(other).compose(&self.inverse())
    }

    /// `self^{-1} * other^{-1} * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut result = Permutation::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            result = base.compose(&result);
        }
        result
    }

    /// Order of the permutation: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles_with_fixed()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x)
            .map(|(i, _)| i)
            .collect()
    }

    /// Nontrivial cycles, each rotated to start at its least point, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            cycles.push(cyc);
        }
        cycles
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles_with_fixed().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, e.g. `(0 2)(1 3)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // (a ∘ b)(1) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        let p = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        // shift by 2 on 4 points has order 2
        let q = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        assert_eq!(q.order(), 2);
        // 5-cycle c -> c+2 on Z_5 indices has order 5
        let r = Permutation::from_images(vec![2, 3, 4, 0, 1]).unwrap();
        assert_eq!(r.order(), 5);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn cycle_notation_display() {
        let p = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        assert_eq!(p.to_string(), "(0 2)(1 3)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }
}
