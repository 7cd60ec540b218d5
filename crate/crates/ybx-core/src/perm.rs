//! Permutations of the generator set, in image-array form.

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from its image array, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::MalformedTable(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "size mismatch in composition");
        Perm {
            images: (0..self.len()).map(|x| self.apply(other.apply(x))).collect(),
        }
    }

    /// Push-forward action on a coordinate vector: the result `w` satisfies
    /// `w[self(i)] = v[i]`.
    pub fn push_forward<T: Copy + Default>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.len(), v.len(), "size mismatch in action");
        let mut out = vec![T::default(); v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.apply(i)] = x;
        }
        out
    }

    /// Pull-back action, the push-forward by the inverse: `w[i] = v[self(i)]`.
    pub fn pull_back<T: Copy + Default>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.len(), v.len(), "size mismatch in action");
        (0..v.len()).map(|i| v[self.apply(i)]).collect()
    }

    /// Multiplicative order: least `k >= 1` with `self^k = id`.
    pub fn order(&self) -> u128 {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut ord: u128 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let f = Perm::new(vec![1, 2, 0]).unwrap();
        let g = Perm::new(vec![0, 2, 1]).unwrap();
        // (f ∘ g)(1) = f(g(1)) = f(2) = 0
        assert_eq!(f.compose(&g).apply(1), 0);
    }

    #[test]
    fn inverse_cancels() {
        let f = Perm::new(vec![2, 0, 3, 1]).unwrap();
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(f.inverse().compose(&f).is_identity());
    }

    #[test]
    fn push_forward_places_entries_at_images() {
        let f = Perm::new(vec![1, 2, 0]).unwrap();
        // basis vector e_0 moves to e_{f(0)} = e_1
        assert_eq!(f.push_forward(&[1usize, 0, 0]), vec![0, 1, 0]);
        // pull-back is the inverse action
        assert_eq!(f.pull_back(&f.push_forward(&[5i64, 7, 9])), vec![5, 7, 9]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![0, 2]).is_err());
    }

    #[test]
    fn order_of_three_cycle() {
        assert_eq!(Perm::new(vec![1, 2, 0]).unwrap().order(), 3);
        assert_eq!(Perm::identity(4).order(), 1);
        assert_eq!(Perm::new(vec![1, 0, 3, 4, 2]).unwrap().order(), 6);
    }
}
