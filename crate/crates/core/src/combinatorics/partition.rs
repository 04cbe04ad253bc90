use std::fmt;
use std::str::FromStr;

use super::CombinatoricsError;

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (zero beyond the length).
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().take_while(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// The partition with `row` (of length `len`) placed above every other.
    pub fn with_top_row(&self, len: usize) -> Option<Partition> {
        if self.part(0) > len {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(len);
        parts.extend_from_slice(&self.0);
        Partition::new(parts).ok()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_length_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.weight() as u128).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= ((row - j - 1) + (conj.part(j) - i - 1) + 1) as u128;
                let g = gcd(num, hooks);
                num /= g;
                hooks /= g;
            }
        }
        num / hooks
    }

    /// Sign of a permutation with this cycle type.
    pub fn cycle_type_sign(&self) -> i64 {
        let even_cycles = self.0.iter().filter(|&&c| c % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses `int ("," int)*` starting at byte `offset` of the original input.
pub(super) fn parse_parts(s: &str, offset: usize) -> Result<Vec<usize>, CombinatoricsError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    let mut pos = offset;
    for piece in s.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let t = piece.trim();
        let v = t.parse::<usize>().map_err(|_| CombinatoricsError::Parse {
            position: pos + lead,
            message: format!("expected a nonnegative integer, found {t:?}"),
        })?;
        parts.push(v);
        pos += piece.len() + 1;
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_parts(s, 0)?)
    }
}

/// All partitions of `m`, in decreasing lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Column lengths read off an explicit cell list.
    fn conjugate_by_cells(q: &Partition) -> Partition {
        let cells: Vec<(usize, usize)> = q
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let width = cells.iter().map(|&(_, c)| c + 1).max().unwrap_or(0);
        Partition::from_unsorted(
            (0..width)
                .map(|c| cells.iter().filter(|&&(_, cc)| cc == c).count())
                .collect(),
        )
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), conjugate_by_cells(&p(&[4, 2, 1])));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn conjugation_is_an_involution() {
        for m in 0..=12 {
            for q in partitions_of(m) {
                assert_eq!(q.conjugate().conjugate(), q);
                assert_eq!(q.conjugate(), conjugate_by_cells(&q));
            }
        }
    }

    #[test]
    fn trailing_zeros_are_ignored() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let q: Partition = "3, 2,2".parse().unwrap();
        assert_eq!(q, p(&[3, 2, 2]));
        assert_eq!(q.to_string(), "3,2,2");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        match "3,x".parse::<Partition>() {
            Err(CombinatoricsError::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|m| partitions_of(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[2, 1]).hook_length_dimension(), 2);
        assert_eq!(p(&[2, 2, 1]).hook_length_dimension(), 5);
        assert_eq!(p(&[3, 3, 1, 1, 1]).hook_length_dimension(), 120);
    }
}
