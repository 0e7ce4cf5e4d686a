//! Dense probability tables over a box of multi-indices.

use crate::model::{iter_box, MultiIndex};

/// Values indexed by the box {k : 0 <= k <= kmax}, stored row-major with the
/// last coordinate fastest (the order of [`iter_box`]).
#[derive(Debug, Clone, PartialEq)]
pub struct PmfTable {
    kmax: MultiIndex,
    values: Vec<f64>,
}

impl PmfTable {
    pub fn new(kmax: MultiIndex, values: Vec<f64>) -> Self {
        let expect: usize = kmax.as_slice().iter().map(|&x| x as usize + 1).product();
        assert_eq!(values.len(), expect, "table size mismatch");
        PmfTable { kmax, values }
    }

    pub fn from_fn(kmax: &MultiIndex, mut f: impl FnMut(&MultiIndex) -> f64) -> Self {
        let values = iter_box(kmax).map(|k| f(&k)).collect();
        PmfTable::new(kmax.clone(), values)
    }

    pub fn kmax(&self) -> &MultiIndex {
        &self.kmax
    }

    pub fn index(&self, k: &MultiIndex) -> usize {
        debug_assert!(k.le(&self.kmax));
        let mut idx = 0usize;
        for i in 0..k.dim() {
            idx = idx * (self.kmax.get(i) as usize + 1) + k.get(i) as usize;
        }
        idx
    }

    pub fn get(&self, k: &MultiIndex) -> f64 {
        self.values[self.index(k)]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (MultiIndex, f64)> + '_ {
        iter_box(&self.kmax).zip(self.values.iter().copied())
    }
}
