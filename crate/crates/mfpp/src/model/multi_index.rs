//! Multi-indices k = (k_1, ..., k_m) of nonnegative integers with the
//! componentwise partial orders `<=` and the strict order `≺` (componentwise
//! `<=` and not equal).

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    k: Vec<u64>,
}

impl MultiIndex {
    pub fn new(k: Vec<u64>) -> Self {
        MultiIndex { k }
    }

    pub fn zeros(m: usize) -> Self {
        MultiIndex { k: vec![0; m] }
    }

    /// Unit vector e_i (0-based coordinate).
    pub fn unit(m: usize, i: usize) -> Self {
        let mut k = vec![0; m];
        k[i] = 1;
        MultiIndex { k }
    }

    pub fn dim(&self) -> usize {
        self.k.len()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.k[i]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.k
    }

    /// |k| = k_1 + ... + k_m.
    pub fn total(&self) -> u64 {
        self.k.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.k.iter().all(|&x| x == 0)
    }

    /// Componentwise k_i <= other_i.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.dim() == other.dim() && self.k.iter().zip(&other.k).all(|(a, b)| a <= b)
    }

    /// Strict partial order ≺: componentwise <= and not equal.
    pub fn prec(&self, other: &MultiIndex) -> bool {
        self.le(other) && self != other
    }

    /// k − other, or None if any component would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !other.le(self) {
            return None;
        }
        Some(MultiIndex::new(
            self.k.iter().zip(&other.k).map(|(a, b)| a - b).collect(),
        ))
    }

    /// k with coordinate i reduced by d, or None if it would go negative.
    pub fn shift_down(&self, i: usize, d: u64) -> Option<MultiIndex> {
        if self.k[i] < d {
            return None;
        }
        let mut k = self.k.clone();
        k[i] -= d;
        Some(MultiIndex::new(k))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.k.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Iterate over the box {k : 0 <= k <= kmax} in lexicographic order,
/// last coordinate fastest.
pub fn iter_box(kmax: &MultiIndex) -> BoxIter {
    BoxIter {
        kmax: kmax.as_slice().to_vec(),
        next: Some(vec![0; kmax.dim()]),
    }
}

/// Iterate over {k : |k| <= max_total} in the same lexicographic order.
pub fn iter_simplex(m: usize, max_total: u64) -> impl Iterator<Item = MultiIndex> {
    let kmax = MultiIndex::new(vec![max_total; m]);
    iter_box(&kmax).filter(move |k| k.total() <= max_total)
}

pub struct BoxIter {
    kmax: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for BoxIter {
    type Item = MultiIndex;

    fn next(&mut self) -> Option<MultiIndex> {
        let current = self.next.take()?;
        let out = MultiIndex::new(current.clone());
        let mut cur = current;
        // increment with carry, last coordinate fastest
        for i in (0..cur.len()).rev() {
            if cur[i] < self.kmax[i] {
                cur[i] += 1;
                self.next = Some(cur);
                return Some(out);
            }
            cur[i] = 0;
        }
        self.next = None;
        Some(out)
    }
}
