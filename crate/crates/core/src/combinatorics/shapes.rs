use super::{CombinatoricsError, Partition, SkewPartition};

fn check(n: usize, k: usize) -> Result<(), CombinatoricsError> {
    if n < 2 || k < 2 {
        return Err(CombinatoricsError::BadShapeParameters { n, k });
    }
    Ok(())
}

/// `(n, (n-1)^(k-1))`, of weight `(n-1)k + 1`.
pub fn make_lambda(n: usize, k: usize) -> Result<Partition, CombinatoricsError> {
    check(n, k)?;
    let mut parts = vec![n];
    parts.extend(std::iter::repeat_n(n - 1, k - 1));
    Partition::new(parts)
}

/// `(n+k-2, n+k-3, ..., n-1) / (k-2, k-2, k-3, ..., 1, 0)`: first row of
/// length `n`, every later row of length `n - 1`.
pub fn make_alpha(n: usize, k: usize) -> Result<SkewPartition, CombinatoricsError> {
    check(n, k)?;
    let outer: Vec<usize> = (0..k).map(|i| n + k - 2 - i).collect();
    let inner: Vec<usize> = (0..k).map(|i| if i == 0 { k - 2 } else { k - 1 - i }).collect();
    SkewPartition::new(Partition::new(outer)?, Partition::new(inner)?)
}

/// `(k^(n-1), k-1, ..., 1) / (k-1, ..., 2)`.
pub fn make_beta(n: usize, k: usize) -> Result<SkewPartition, CombinatoricsError> {
    check(n, k)?;
    let mut outer = vec![k; n - 1];
    outer.extend((1..k).rev());
    let inner: Vec<usize> = (2..k).rev().collect();
    SkewPartition::new(Partition::new(outer)?, Partition::new(inner)?)
}

/// Number of columns of a straight diagram.
pub fn min_column_count(p: &Partition) -> usize {
    p.part(0)
}

/// Whether some column of the diagram has at least `k` cells.
pub fn has_full_column(shape: &SkewPartition, k: usize) -> bool {
    shape.column_lengths().into_iter().any(|len| len >= k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_shapes() {
        assert_eq!(make_lambda(3, 3).unwrap(), p("3,2,2"));
        assert_eq!(make_lambda(3, 3).unwrap().weight(), 7);
        assert_eq!(make_lambda(5, 5).unwrap(), p("5,4,4,4,4"));
        assert_eq!(make_lambda(5, 5).unwrap().weight(), 21);
        assert_eq!(make_lambda(3, 3).unwrap().conjugate(), p("3,3,1"));
        assert!(make_lambda(1, 3).is_err());
        assert!(make_lambda(3, 1).is_err());
    }

    #[test]
    fn alpha_shapes() {
        assert_eq!(make_alpha(5, 5).unwrap().to_string(), "8,7,6,5,4/3,3,2,1");
        assert_eq!(make_alpha(4, 2).unwrap().to_string(), "4,3/");
        for n in 2..=7 {
            for k in 2..=7 {
                let a = make_alpha(n, k).unwrap();
                assert_eq!(a.row_len(0), n);
                assert!((1..k).all(|r| a.row_len(r) == n - 1));
                assert_eq!(a.row_overlap(0), n - 1);
                assert!((1..k - 1).all(|r| a.row_overlap(r) == n - 2));
                assert_eq!(a.weight(), (n - 1) * k + 1);
            }
        }
    }

    #[test]
    fn beta_shapes() {
        assert_eq!(make_beta(4, 4).unwrap().to_string(), "4,4,4,3,2,1/3,2");
        assert_eq!(make_beta(3, 4).unwrap().to_string(), "4,4,3,2,1/3,2");
        assert_eq!(make_beta(6, 2).unwrap().to_string(), "2,2,2,2,2,1/");
    }

    #[test]
    fn alpha_conjugates_to_beta() {
        for n in 2..=6 {
            for k in 2..=6 {
                assert_eq!(make_alpha(n, k).unwrap().conjugate(), make_beta(n, k).unwrap());
            }
        }
    }

    /// Column lengths counted cell by cell.
    fn full_column_by_cells(shape: &SkewPartition, k: usize) -> bool {
        let cells = shape.cells();
        (0..shape.outer().part(0)).any(|c| cells.iter().filter(|&&(_, cc)| cc == c).count() >= k)
    }

    #[test]
    fn full_columns() {
        assert!(has_full_column(&make_alpha(5, 5).unwrap(), 5));
        assert!(!has_full_column(&make_alpha(3, 4).unwrap(), 4));
        assert!(!full_column_by_cells(&make_alpha(3, 4).unwrap(), 4));
        for n in 2..=7 {
            for k in 2..=7 {
                let a = make_alpha(n, k).unwrap();
                assert_eq!(has_full_column(&a, k), full_column_by_cells(&a, k));
                if n >= k {
                    assert!(has_full_column(&a, k), "n={n} k={k}");
                }
            }
        }
        assert_eq!(min_column_count(&p("3,2,2,2")), 3);
    }
}
