use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::Rational;

/// Sparse vector: entries sorted by index, no explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, Rational::one())],
        }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_entries<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut raw: Vec<(usize, Rational)> = iter.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    /// Trusts the caller: indices strictly increasing, values nonzero.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn lead(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn scale(&mut self, a: &Rational) {
        if a.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, v) in &mut self.entries {
            *v = &*v * a;
        }
    }

    pub fn scaled(&self, a: &Rational) -> Self {
        let mut out = self.clone();
        out.scale(a);
        out
    }

    /// `self += a * other` by sorted merge.
    pub fn axpy(&mut self, a: &Rational, other: &SparseVec) {
        if a.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut lhs = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut rhs = other.entries.iter().peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(lhs.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = rhs.next().unwrap();
                    out.push((*j, a * w));
                }
                (Some(_), Some(_)) => {
                    let (i, mut v) = lhs.next().unwrap();
                    let (_, w) = rhs.next().unwrap();
                    v.add_mul(a, w);
                    if !v.is_zero() {
                        out.push((i, v));
                    }
                }
                (Some(_), None) => out.push(lhs.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = rhs.next().unwrap();
                    out.push((*j, a * w));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn dot_dense(&self, dense: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, v) in &self.entries {
            acc.add_mul(v, &dense[*i]);
        }
        acc
    }

    /// Applies an index map to every entry and re-sorts.
    pub fn reindex(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::from_entries(self.entries.iter().map(|(i, v)| (map(*i), v.clone())))
    }
}

/// Dense scatter/gather accumulator reused across many sparse reductions.
pub(crate) struct Accumulator {
    values: Vec<Rational>,
    occupied: Vec<bool>,
    heap: BinaryHeap<Reverse<usize>>,
}

impl Accumulator {
    pub(crate) fn new(dim: usize) -> Self {
        Accumulator {
            values: vec![Rational::zero(); dim],
            occupied: vec![false; dim],
            heap: BinaryHeap::new(),
        }
    }

    pub(crate) fn load(&mut self, v: &SparseVec) {
        debug_assert!(self.heap.is_empty());
        for (i, x) in v.iter() {
            self.values[i] = x.clone();
            self.occupied[i] = true;
            self.heap.push(Reverse(i));
        }
    }

    /// Adds `a * v` skipping the leading entry of `v` (already consumed).
    pub(crate) fn axpy_tail(&mut self, a: &Rational, v: &SparseVec) {
        for (i, x) in v.iter().skip(1) {
            if !self.occupied[i] {
                self.occupied[i] = true;
                self.heap.push(Reverse(i));
            }
            self.values[i].add_mul(a, x);
        }
    }

    /// Pops the smallest occupied index with a nonzero value.
    pub(crate) fn pop_min(&mut self) -> Option<(usize, Rational)> {
        while let Some(Reverse(i)) = self.heap.pop() {
            self.occupied[i] = false;
            let v = std::mem::take(&mut self.values[i]);
            if !v.is_zero() {
                return Some((i, v));
            }
        }
        None
    }

    /// Drains everything left, sorted, into a sparse vector.
    pub(crate) fn drain_into(&mut self, out: &mut Vec<(usize, Rational)>) {
        while let Some(e) = self.pop_min() {
            out.push(e);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn from_entries_merges_and_prunes() {
        let v = SparseVec::from_entries([(3, q(1)), (1, q(2)), (3, q(-1)), (0, q(0))]);
        assert_eq!(v.entries(), &[(1, q(2))]);
    }

    proptest! {
        #[test]
        fn axpy_matches_dense(
            a in proptest::collection::vec(-3i64..4, 12),
            b in proptest::collection::vec(-3i64..4, 12),
            s in -3i64..4,
        ) {
            let da: Vec<Rational> = a.iter().map(|&x| q(x)).collect();
            let db: Vec<Rational> = b.iter().map(|&x| q(x)).collect();
            let mut va = SparseVec::from_dense(&da);
            va.axpy(&q(s), &SparseVec::from_dense(&db));
            let expect: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| q(x + s * y)).collect();
            prop_assert_eq!(va, SparseVec::from_dense(&expect));
        }
    }
}
