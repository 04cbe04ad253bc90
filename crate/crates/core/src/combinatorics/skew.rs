use std::fmt;
use std::str::FromStr;

use super::partition::parse_parts;
use super::{CombinatoricsError, Partition};

/// A skew shape `outer / inner`; cells are `(r, c)` with
/// `inner[r] <= c < outer[r]` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewPartition {
    outer: Partition,
    inner: Partition,
}

impl SkewPartition {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, CombinatoricsError> {
        if !outer.contains(&inner) {
            return Err(CombinatoricsError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewPartition { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewPartition {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn weight(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Half-open column range of row `r`.
    pub fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r)..self.outer.part(r)
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    pub fn is_cell(&self, r: usize, c: usize) -> bool {
        self.row_range(r).contains(&c)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.num_rows())
            .flat_map(|r| self.row_range(r).map(move |c| (r, c)))
            .collect()
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        let outer_c = self.outer.conjugate();
        let inner_c = self.inner.conjugate();
        (0..self.outer.part(0))
            .map(|c| outer_c.part(c) - inner_c.part(c))
            .collect()
    }

    /// Rows and columns exchanged.
    pub fn conjugate(&self) -> SkewPartition {
        SkewPartition {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Number of cells shared by the column spans of rows `r` and `r + 1`.
    pub fn row_overlap(&self, r: usize) -> usize {
        let a = self.row_range(r);
        let b = self.row_range(r + 1);
        b.end.min(a.end).saturating_sub(b.start.max(a.start))
    }
}

impl fmt::Display for SkewPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewPartition {
    type Err = CombinatoricsError;

    /// `p "/" p`; a bare partition is read as a straight shape.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            None => Ok(SkewPartition::straight(s.parse()?)),
            Some((o, i)) => {
                let outer = Partition::new(parse_parts(o, 0)?)?;
                let inner = Partition::new(parse_parts(i, o.len() + 1)?)?;
                SkewPartition::new(outer, inner)
            }
        }
    }
}
