//! Ground sets and bitset subsets over them.
//!
//! Every instance in this crate is small (a few dozen elements at most), so a
//! subset is a packed bit vector: one `u64` word inline for ground sets of up
//! to 64 elements, spilling to the heap beyond that.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use crate::{Error, Result};

/// An ordered set of distinct element labels. The ordering is fixed at
/// construction and defines the bit positions used by [`Subset`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// Shared handle to a ground set.
pub type Ground = Arc<GroundSet>;

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Ground>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Domain(format!("duplicate ground label {l:?}")));
            }
        }
        Ok(Arc::new(GroundSet { labels, index }))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn words(&self) -> usize {
        self.labels.len().div_ceil(64).max(1)
    }

    pub fn empty_subset(&self) -> Subset {
        Subset {
            words: smallvec![0; self.words()],
        }
    }

    pub fn full_subset(&self) -> Subset {
        let mut s = self.empty_subset();
        for i in 0..self.size() {
            s.insert(i);
        }
        s
    }

    pub fn subset_of_indices<I: IntoIterator<Item = usize>>(&self, it: I) -> Subset {
        let mut s = self.empty_subset();
        for i in it {
            debug_assert!(i < self.size());
            s.insert(i);
        }
        s
    }

    pub fn subset_of_labels<'a, I: IntoIterator<Item = &'a str>>(&self, it: I) -> Result<Subset> {
        let mut s = self.empty_subset();
        for l in it {
            match self.index_of(l) {
                Some(i) => s.insert(i),
                None => return Err(Error::Domain(format!("unknown element {l:?}"))),
            }
        }
        Ok(s)
    }

    /// Labels of `s` in ground order.
    pub fn labels_of(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn format_subset(&self, s: &Subset) -> String {
        let mut out = String::from("{");
        for (k, i) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[i]);
        }
        out.push('}');
        out
    }
}

/// A subset of a ground set, stored as packed bits in ground order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    words: SmallVec<[u64; 1]>,
}

impl Subset {
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn zip_with(&self, other: &Subset, f: impl Fn(u64, u64) -> u64) -> Subset {
        debug_assert_eq!(self.words.len(), other.words.len());
        Subset {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn union_assign(&mut self, other: &Subset) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn xor_assign(&mut self, other: &Subset) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).any(|(&a, &b)| a & b != 0)
    }

    pub fn without(&self, i: usize) -> Subset {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn with(&self, i: usize) -> Subset {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    /// Element indices in ascending ground order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn min_index(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Canonical comparison: by cardinality, then lexicographic on the sorted
    /// index sequence. Keeps every enumeration in the crate deterministic.
    pub fn cmp_canonical(&self, other: &Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
