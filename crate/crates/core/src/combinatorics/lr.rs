use std::collections::BTreeMap;

use super::{Partition, SkewPartition};

/// Backtracks over Littlewood-Richardson tableaux of `shape`: semistandard
/// fillings whose reverse reading word (rows top to bottom, each right to
/// left) is a lattice word. With `content` set, only that content counts.
fn walk_lr(shape: &SkewPartition, content: Option<&Partition>, mut visit: impl FnMut(&[usize])) {
    let order: Vec<(usize, usize)> = (0..shape.num_rows())
        .flat_map(|r| shape.row_range(r).rev().map(move |c| (r, c)))
        .collect();
    let width = shape.outer().part(0);
    let mut grid = vec![vec![0usize; width + 1]; shape.num_rows()];
    let max_value = content.map_or(shape.num_rows(), |p| p.len());
    let mut counts = vec![0usize; max_value + 1];

    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        order: &[(usize, usize)],
        shape: &SkewPartition,
        content: Option<&Partition>,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        max_value: usize,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let Some(&(r, c)) = order.get(idx) else {
            visit(&counts[..]);
            return;
        };
        let mut hi = max_value.min(r + 1);
        if shape.is_cell(r, c + 1) {
            hi = hi.min(grid[r][c + 1]);
        }
        let mut lo = 1;
        if r > 0 && shape.is_cell(r - 1, c) {
            lo = grid[r - 1][c] + 1;
        }
        for v in lo..=hi {
            if v > 1 && counts[v - 1] <= counts[v] {
                continue;
            }
            if let Some(p) = content {
                if counts[v] >= p.part(v - 1) {
                    continue;
                }
            }
            counts[v] += 1;
            grid[r][c] = v;
            go(idx + 1, order, shape, content, grid, counts, max_value, visit);
            counts[v] -= 1;
        }
        grid[r][c] = 0;
    }

    go(0, &order, shape, content, &mut grid, &mut counts, max_value, &mut visit);
}

/// `c^lambda_{mu, nu}` as a count of LR tableaux of shape `lambda/mu` and
/// content `nu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) {
        return 0;
    }
    let shape = SkewPartition::new(lambda.clone(), mu.clone()).expect("checked containment");
    let mut n = 0;
    walk_lr(&shape, Some(nu), |_| n += 1);
    n
}

/// Every content occurring among LR tableaux of `shape`, with its count.
pub fn lr_tableaux_by_content(shape: &SkewPartition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    walk_lr(shape, None, |counts| {
        let nu = Partition::new(counts[1..].to_vec()).expect("lattice content is a partition");
        *out.entry(nu).or_insert(0) += 1;
    });
    out
}

/// Multiplicity of each Specht module `S^nu` in the skew Specht module of
/// `shape`; zero multiplicities are omitted.
pub fn skew_specht_multiplicities(shape: &SkewPartition) -> BTreeMap<Partition, u64> {
    lr_tableaux_by_content(shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{count_standard, partitions_of, Tableau};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Enumerates every filling of `lambda/mu` with values in `1..=len(nu)`
    /// and checks the LR conditions directly from their definitions.
    fn brute_force_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) {
            return 0;
        }
        let shape = SkewPartition::new(lambda.clone(), mu.clone()).unwrap();
        let cells = shape.cells();
        let k = nu.len().max(1);
        let total = k.pow(cells.len() as u32);
        let mut count = 0;
        for code in 0..total {
            let mut rest = code;
            let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.num_rows()];
            for &(r, _) in &cells {
                rows[r].push(rest % k + 1);
                rest /= k;
            }
            let t = Tableau::new(shape.clone(), rows.clone()).unwrap();
            if !t.is_semistandard() {
                continue;
            }
            let mut content = vec![0; k];
            rows.iter().flatten().for_each(|&v| content[v - 1] += 1);
            if Partition::new(content).ok().as_ref() != Some(nu) {
                continue;
            }
            let word: Vec<usize> = rows.iter().flat_map(|row| row.iter().rev().copied()).collect();
            let mut seen = vec![0; k + 1];
            let lattice = word.iter().all(|&v| {
                seen[v] += 1;
                v == 1 || seen[v] <= seen[v - 1]
            });
            if lattice {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("1,1")), 1);
        assert_eq!(brute_force_lr(&p("2,1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coefficient(&p("2,2,1"), &Partition::empty(), &p("2,2,1")), 1);
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2"), &p("2")), 0);
    }

    #[test]
    fn skew_multiplicities() {
        let shape: SkewPartition = "2,1/1".parse().unwrap();
        let m = skew_specht_multiplicities(&shape);
        assert_eq!(m.len(), 2);
        assert_eq!(m[&p("2")], 1);
        assert_eq!(m[&p("1,1")], 1);
    }

    #[test]
    fn matches_brute_force_small() {
        for total in 0..=5 {
            for lambda in partitions_of(total) {
                for a in 0..=total {
                    for mu in partitions_of(a) {
                        for nu in partitions_of(total - a) {
                            assert_eq!(
                                lr_coefficient(&lambda, &mu, &nu),
                                brute_force_lr(&lambda, &mu, &nu),
                                "{lambda} {mu} {nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetries_up_to_six() {
        for total in 0..=6 {
            for lambda in partitions_of(total) {
                for a in 0..=total {
                    for mu in partitions_of(a) {
                        for nu in partitions_of(total - a) {
                            let c = lr_coefficient(&lambda, &mu, &nu);
                            assert_eq!(c, lr_coefficient(&lambda, &nu, &mu));
                            assert_eq!(
                                c,
                                lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate())
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn skew_dimension_identity() {
        for total in 1..=8 {
            for lambda in partitions_of(total) {
                for a in 0..total {
                    for mu in partitions_of(a).into_iter().filter(|mu| lambda.contains(mu)) {
                        let shape = SkewPartition::new(lambda.clone(), mu).unwrap();
                        let sum: u128 = skew_specht_multiplicities(&shape)
                            .iter()
                            .map(|(nu, &c)| c as u128 * nu.hook_length_dimension())
                            .sum();
                        assert_eq!(sum, count_standard(&shape), "{shape}");
                    }
                }
            }
        }
    }
}
