//! Permutations of `{0, .., n-1}`.

use std::fmt;

use crate::error::{GyroError, Result};
use crate::table::Elem;

/// A bijection on `0..n`, stored as its image list.
///
/// Composition follows function notation: `f.compose(&g)` is `f ∘ g`,
/// i.e. `g` is applied first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    /// Checked constructor: `images` must contain each index exactly once.
    pub fn from_images(images: Vec<Elem>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(GyroError::OutOfRange { elem: x, order: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(GyroError::Malformed(format!(
                    "image {x} repeated in permutation"
                )));
            }
        }
        Ok(Self::from_images_unchecked(images.into_iter()))
    }

    pub(crate) fn from_images_unchecked(images: impl Iterator<Item = Elem>) -> Self {
        Perm {
            images: images.map(|x| x as u32).collect(),
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x] as Elem
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = Elem> + '_ {
        self.images.iter().map(|&x| x as Elem)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.images().collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Perm) -> Perm {
        self.compose(other).compose(&self.inverse())
    }

    /// Image of a set, sorted ascending.
    pub fn image_of_set(&self, set: &[Elem]) -> Vec<Elem> {
        let mut out: Vec<Elem> = set.iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images.iter()).finish()
    }
}
