use std::borrow::Borrow;
use std::fmt;

use num_integer::Integer;

use super::GroupError;

/// A permutation of `{0, …, d−1}` stored as its image array.
///
/// Products are read left to right: `a.then(&b)` applies `a` first, so
/// `a.then(&b).image(i) == b.image(a.image(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection of `{0, …, len−1}`.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {x} of point {i} is out of range for degree {degree}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(GroupError::InvalidPermutation(format!(
                    "point {x} is hit twice"
                )));
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2], &[3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[a as usize], true) {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {a} appears in more than one cycle"
                    )));
                }
                images[a as usize] = b;
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub(crate) fn then_into(&self, other: &Permutation, out: &mut Vec<u32>) {
        out.clear();
        out.extend(self.images.iter().map(|&x| other.images[x as usize]));
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = 1`, the lcm of the cycle lengths.
    ///
    /// Panics if the order does not fit in a `u64`; elements of any group
    /// this crate enumerates are far below that.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| {
            let len = c.len() as u64;
            (acc / acc.gcd(&len))
                .checked_mul(len)
                .expect("permutation order overflows u64")
        })
    }

    /// Places `self` on points `offset..offset+d` of a larger set of size
    /// `degree`, fixing everything else.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = (offset as u32) + x;
        }
        Self {
            images: images.into_boxed_slice(),
        }
    }
}

impl Borrow<[u32]> for Permutation {
    fn borrow(&self) -> &[u32] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", &*self.images)
    }
}
