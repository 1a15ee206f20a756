use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A face given by its strictly increasing 1-based vertex labels.
///
/// Ordering is lexicographic on the label sequence. The empty simplex is the
/// `(-1)`-dimensional face used by the augmentation map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    /// Checks that `labels` are nonzero and strictly increasing.
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if labels.first() == Some(&0) || labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing);
        }
        Ok(Simplex(labels))
    }

    /// Sorts the labels first; duplicates or a zero label are still errors.
    pub fn from_unsorted(labels: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut labels: Vec<u32> = labels.into_iter().collect();
        labels.sort_unstable();
        Simplex::new(labels)
    }

    pub(crate) fn from_sorted_unchecked(labels: Vec<u32>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        Simplex(labels)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Geometric dimension, `len - 1`.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, label: u32) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    /// The face obtained by dropping the vertex at `position`.
    pub fn without(&self, position: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(position);
        Simplex(v)
    }

    /// The simplex with `label` added; `None` if it is already present.
    pub fn with_vertex(&self, label: u32) -> Option<Simplex> {
        let pos = self.0.binary_search(&label).err()?;
        let mut v = self.0.clone();
        v.insert(pos, label);
        Some(Simplex(v))
    }

    /// Codimension-one faces, in the order of the removed position.
    pub fn boundary(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| self.without(i))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}
