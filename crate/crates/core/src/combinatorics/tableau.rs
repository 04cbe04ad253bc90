use std::collections::HashMap;

use super::{Partition, SkewPartition};

/// A filling of a skew diagram; `rows[r]` lists row `r` left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewPartition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewPartition, rows: Vec<Vec<usize>>) -> Option<Self> {
        let fits = rows.len() == shape.num_rows()
            && rows.iter().enumerate().all(|(r, row)| row.len() == shape.row_len(r));
        fits.then_some(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at absolute diagram position `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        if !self.shape.is_cell(r, c) {
            return None;
        }
        Some(self.rows[r][c - self.shape.inner().part(r)])
    }

    pub fn is_row_semistandard(&self) -> bool {
        self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_row_semistandard()
            && self.shape.cells().into_iter().all(|(r, c)| {
                r == 0
                    || match (self.entry(r - 1, c), self.entry(r, c)) {
                        (Some(above), Some(here)) => above < here,
                        _ => true,
                    }
            })
    }

    /// `content[i]` = number of entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut out = vec![0; max];
        for &v in self.rows.iter().flatten() {
            out[v - 1] += 1;
        }
        out
    }
}

/// Row-major backtracking over semistandard fillings with entries in
/// `1..=max_entry`. `visit` receives the grid (indexed by absolute column).
fn fill_semistandard(shape: &SkewPartition, max_entry: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    let cells = shape.cells();
    let width = shape.outer().part(0);
    let mut grid = vec![vec![0usize; width]; shape.num_rows()];

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        shape: &SkewPartition,
        max_entry: usize,
        grid: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            visit(grid);
            return;
        };
        let mut lo = 1;
        if c > 0 && shape.is_cell(r, c - 1) {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 && shape.is_cell(r - 1, c) {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=max_entry {
            grid[r][c] = v;
            go(idx + 1, cells, shape, max_entry, grid, visit);
        }
        grid[r][c] = 0;
    }

    go(0, &cells, shape, max_entry, &mut grid, &mut visit);
}

/// All semistandard tableaux of `shape` with entries at most `max_entry`,
/// in row-major lexicographic order.
pub fn enumerate_sst(shape: &SkewPartition, max_entry: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    fill_semistandard(shape, max_entry, |grid| {
        let rows = (0..shape.num_rows())
            .map(|r| grid[r][shape.row_range(r)].to_vec())
            .collect();
        out.push(Tableau {
            shape: shape.clone(),
            rows,
        });
    });
    out
}

pub fn count_semistandard(shape: &SkewPartition, max_entry: usize) -> u64 {
    let mut n = 0;
    fill_semistandard(shape, max_entry, |_| n += 1);
    n
}

/// Dimension of the irreducible polynomial `GL_N`-module of highest weight
/// `p`, as the number of semistandard tableaux with entries `<= n_vars`.
pub fn weyl_dimension(p: &Partition, n_vars: usize) -> u64 {
    count_semistandard(&SkewPartition::straight(p.clone()), n_vars)
}

/// Number of standard tableaux of a skew shape, by removing outer corners.
pub fn count_standard(shape: &SkewPartition) -> u128 {
    fn go(outer: Vec<usize>, inner: &[usize], memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        let size: usize = outer.iter().sum::<usize>() - inner.iter().sum::<usize>();
        if size == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&outer) {
            return v;
        }
        let mut total = 0;
        for r in 0..outer.len() {
            let removable = outer[r] > inner.get(r).copied().unwrap_or(0)
                && outer.get(r + 1).copied().unwrap_or(0) < outer[r];
            if removable {
                let mut next = outer.clone();
                next[r] -= 1;
                total += go(next, inner, memo);
            }
        }
        memo.insert(outer, total);
        total
    }
    let outer = shape.outer().parts().to_vec();
    let inner: Vec<usize> = (0..outer.len()).map(|r| shape.inner().part(r)).collect();
    go(outer, &inner, &mut HashMap::new())
}

/// Kostka number: semistandard tableaux of `shape` with `content[i]`
/// entries equal to `i + 1`. Peels horizontal strips from the largest entry.
pub fn kostka_number(shape: &Partition, content: &[usize]) -> u64 {
    fn go(shape: Vec<usize>, content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
        let size: usize = shape.iter().sum();
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(size == 0);
        };
        if size != content.iter().sum::<usize>() {
            return 0;
        }
        let key = (shape.clone(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        // Remove a horizontal strip of size `last`: row r may lose at most
        // shape[r] - shape[r + 1] cells.
        let mut total = 0;
        let mut strip = vec![0usize; shape.len()];
        fn strips(
            r: usize,
            left: usize,
            shape: &[usize],
            strip: &mut Vec<usize>,
            out: &mut dyn FnMut(&[usize]),
        ) {
            if r == shape.len() {
                if left == 0 {
                    out(strip);
                }
                return;
            }
            let room = shape[r] - shape.get(r + 1).copied().unwrap_or(0);
            for take in 0..=room.min(left) {
                strip[r] = take;
                strips(r + 1, left - take, shape, strip, out);
            }
            strip[r] = 0;
        }
        let mut smaller = Vec::new();
        strips(0, last, &shape, &mut strip, &mut |s| {
            let mut next: Vec<usize> = shape.iter().zip(s).map(|(a, b)| a - b).collect();
            while next.last() == Some(&0) {
                next.pop();
            }
            smaller.push(next);
        });
        for next in smaller {
            total += go(next, rest, memo);
        }
        memo.insert(key, total);
        total
    }
    go(shape.parts().to_vec(), content, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partitions_of;

    fn skew(s: &str) -> SkewPartition {
        s.parse().unwrap()
    }

    /// Every filling in `1..=max` of every cell, filtered by the definition.
    fn brute_force_sst(shape: &SkewPartition, max: usize) -> Vec<Tableau> {
        let cells = shape.cells();
        let total = max.pow(cells.len() as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut rest = code;
            let mut rows: Vec<Vec<usize>> = (0..shape.num_rows()).map(|_| Vec::new()).collect();
            let mut vals = Vec::new();
            for _ in &cells {
                vals.push(rest % max + 1);
                rest /= max;
            }
            vals.reverse();
            for (&(r, _), v) in cells.iter().zip(vals) {
                rows[r].push(v);
            }
            let t = Tableau::new(shape.clone(), rows).unwrap();
            if t.is_semistandard() {
                out.push(t);
            }
        }
        out
    }

    #[test]
    fn small_enumerations() {
        let col = enumerate_sst(&skew("1,1"), 2);
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].rows(), &[vec![1], vec![2]]);
        let row = enumerate_sst(&skew("2"), 2);
        let rows: Vec<_> = row.iter().map(|t| t.rows()[0].clone()).collect();
        assert_eq!(rows, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        assert_eq!(enumerate_sst(&skew("2,1"), 3).len(), 8);
        assert_eq!(enumerate_sst(&skew(""), 3).len(), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for s in ["2,1", "2,2/1", "3,1/1", "2,2", "3,2,1/2,1", "1,1,1"] {
            let shape = skew(s);
            for max in 1..=3 {
                let fast = enumerate_sst(&shape, max);
                assert_eq!(fast, brute_force_sst(&shape, max), "{s} max={max}");
                let mut sorted = fast.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), fast.len());
            }
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(weyl_dimension(&p("1"), 7), 7);
        assert_eq!(weyl_dimension(&p("1,1"), 3), 3);
        assert_eq!(weyl_dimension(&p("2,1"), 3), 8);
    }

    /// prod_{i<j} (p_i - p_j + j - i) / (j - i)
    fn weyl_product(p: &Partition, n: usize) -> u64 {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..n {
            for j in i + 1..n {
                num *= (p.part(i) + j - i - p.part(j)) as u128;
                den *= (j - i) as u128;
            }
        }
        (num / den) as u64
    }

    #[test]
    fn weyl_dimension_matches_product_formula() {
        for m in 0..=8 {
            for p in partitions_of(m) {
                for n in 1..=6 {
                    let expect = if p.len() > n { 0 } else { weyl_product(&p, n) };
                    assert_eq!(weyl_dimension(&p, n), expect, "{p} N={n}");
                }
            }
        }
    }

    #[test]
    fn standard_counts() {
        for m in 0..=8 {
            for p in partitions_of(m) {
                assert_eq!(count_standard(&SkewPartition::straight(p.clone())), p.hook_length_dimension());
            }
        }
        // (2,1)/(1): two disconnected cells
        assert_eq!(count_standard(&skew("2,1/1")), 2);
    }

    #[test]
    fn kostka_matches_enumeration() {
        for m in 1..=6 {
            for shape in partitions_of(m) {
                let tabs = enumerate_sst(&SkewPartition::straight(shape.clone()), m);
                for content in partitions_of(m) {
                    let direct = tabs
                        .iter()
                        .filter(|t| {
                            let mut c = t.content();
                            c.resize(content.len().max(c.len()), 0);
                            let mut want = content.parts().to_vec();
                            want.resize(c.len(), 0);
                            c == want
                        })
                        .count() as u64;
                    assert_eq!(kostka_number(&shape, content.parts()), direct, "{shape} {content}");
                }
            }
        }
    }

    #[test]
    fn kostka_unitriangular() {
        let p: Partition = "3,2,1".parse().unwrap();
        assert_eq!(kostka_number(&p, p.parts()), 1);
        assert_eq!(kostka_number(&p, &[1; 6]), 16);
        assert_eq!(kostka_number(&"2,2".parse().unwrap(), &[3, 1]), 0);
    }
}
