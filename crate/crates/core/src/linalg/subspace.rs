use rayon::prelude::*;

use super::sparse::Accumulator;
use super::{LinalgError, LinearAction, Rational, SignedPermutation, SparseVec};

const NO_PIVOT: u32 = u32::MAX;

/// Incremental row-echelon form of a subspace of `Q^dim`.
///
/// Every stored row is monic at its leading index and that index is its
/// pivot; entries to the right are not reduced against later pivots. The
/// pivot of a row is always the smallest index it touches, so coordinate
/// order doubles as pivot preference: callers that want certain basis
/// vectors to survive in a quotient should put them last.
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
    acc: Accumulator,
}

impl Clone for Echelon {
    fn clone(&self) -> Self {
        Echelon {
            dim: self.dim,
            rows: self.rows.clone(),
            pivot_row: self.pivot_row.clone(),
            acc: Accumulator::new(self.dim),
        }
    }
}

/// Reusable scratch space for reductions against a fixed [`Echelon`].
pub struct Reducer<'a> {
    echelon: &'a Echelon,
    acc: Accumulator,
}

fn reduce(
    rows: &[SparseVec],
    pivot_row: &[u32],
    acc: &mut Accumulator,
    v: &SparseVec,
    full: bool,
) -> SparseVec {
    acc.load(v);
    let mut out = Vec::new();
    while let Some((i, x)) = acc.pop_min() {
        let r = pivot_row[i];
        if r == NO_PIVOT {
            out.push((i, x));
            if !full {
                acc.drain_into(&mut out);
                break;
            }
            continue;
        }
        let row = &rows[r as usize];
        // row is monic at i; the popped entry is eliminated by construction.
        acc.axpy_tail(&-x, row);
    }
    SparseVec::from_sorted_unchecked(out)
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        assert!(dim < NO_PIVOT as usize);
        Echelon {
            dim,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; dim],
            acc: Accumulator::new(dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the spanning set; returns `true` when the rank grows.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool, LinalgError> {
        check_dim(self.dim, v)?;
        let reduced = reduce(&self.rows, &self.pivot_row, &mut self.acc, v, false);
        let Some((lead, x)) = reduced.lead() else {
            return Ok(false);
        };
        let inv = x.recip();
        let mut row = reduced.clone();
        row.scale(&inv);
        self.pivot_row[lead] = self.rows.len() as u32;
        self.rows.push(row);
        Ok(true)
    }

    pub fn extend<'v, I>(&mut self, vectors: I) -> Result<(), LinalgError>
    where
        I: IntoIterator<Item = &'v SparseVec>,
    {
        for v in vectors {
            self.insert(v)?;
        }
        Ok(())
    }

    pub fn is_pivot(&self, index: usize) -> bool {
        self.pivot_row[index] != NO_PIVOT
    }

    /// Pivot indices in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.is_pivot(i)).collect()
    }

    /// Indices that are not pivots, increasing; they index a basis of the
    /// quotient by this subspace.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| !self.is_pivot(i)).collect()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn reducer(&self) -> Reducer<'_> {
        Reducer {
            echelon: self,
            acc: Accumulator::new(self.dim),
        }
    }

    /// Canonical reduced echelon form.
    pub fn into_basis(self) -> SubspaceBasis {
        let Echelon {
            dim,
            rows,
            pivot_row,
            mut acc,
        } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(rows[r].lead().unwrap().0));
        let mut reduced: Vec<Option<SparseVec>> = vec![None; rows.len()];
        for r in order {
            let row = &rows[r];
            let (lead, _) = row.lead().unwrap();
            acc.load(row);
            let mut out = Vec::with_capacity(row.nnz());
            while let Some((i, x)) = acc.pop_min() {
                let pr = pivot_row[i];
                if i == lead || pr == NO_PIVOT {
                    out.push((i, x));
                } else {
                    let other = reduced[pr as usize].as_ref().expect("processed later pivots first");
                    acc.axpy_tail(&-x, other);
                }
            }
            reduced[r] = Some(SparseVec::from_sorted_unchecked(out));
        }
        let mut vectors: Vec<SparseVec> = reduced.into_iter().map(Option::unwrap).collect();
        vectors.sort_by_key(|v| v.lead().unwrap().0);
        let pivots = vectors.iter().map(|v| v.lead().unwrap().0).collect();
        SubspaceBasis {
            ambient_dim: dim,
            vectors,
            pivots,
        }
    }

    /// Trace of each signed permutation on the quotient `Q^dim / span(self)`.
    ///
    /// For each surviving index `j` this builds the functional "coefficient
    /// of `e_j` in the normal form" by back-substitution over the echelon
    /// rows, then evaluates it on `sigma(e_j)` for every action at once.
    pub fn quotient_traces(&self, actions: &[SignedPermutation]) -> Vec<Rational> {
        for a in actions {
            assert_eq!(a.len(), self.dim);
        }
        let pivots = self.pivots();
        let survivors = self.non_pivots();
        let zero = || vec![Rational::zero(); actions.len()];
        survivors
            .par_iter()
            .fold(
                || (zero(), Vec::new()),
                |(mut acc, mut f), &j| {
                    if f.len() != self.dim {
                        f = vec![Rational::zero(); self.dim];
                    }
                    self.functional_into(j, &pivots, &mut f);
                    for (t, a) in acc.iter_mut().zip(actions) {
                        let v = &f[a.image(j)];
                        if !v.is_zero() {
                            if a.sign(j) < 0 {
                                *t -= v;
                            } else {
                                *t += v;
                            }
                        }
                    }
                    (acc, f)
                },
            )
            .map(|(acc, _)| acc)
            .reduce(zero, |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            })
    }

    /// Fills `f[i]` with the coefficient of `e_j` in the normal form of
    /// `e_i`, for every `i <= j` (entries above `j` are zero).
    fn functional_into(&self, j: usize, pivots: &[usize], f: &mut [Rational]) {
        for x in f.iter_mut() {
            *x = Rational::zero();
        }
        f[j] = Rational::one();
        let upto = pivots.partition_point(|&p| p < j);
        for &p in pivots[..upto].iter().rev() {
            let row = &self.rows[self.pivot_row[p] as usize];
            let mut acc = Rational::zero();
            for (q, c) in row.iter().skip(1) {
                if q > j {
                    break;
                }
                let fq = &f[q];
                if !fq.is_zero() {
                    acc.add_mul(c, fq);
                }
            }
            f[p] = -acc;
        }
    }
}

impl Reducer<'_> {
    /// Fully reduced representative: supported on non-pivot indices only.
    pub fn normal_form(&mut self, v: &SparseVec) -> SparseVec {
        reduce(&self.echelon.rows, &self.echelon.pivot_row, &mut self.acc, v, true)
    }

    pub fn contains(&mut self, v: &SparseVec) -> bool {
        self.normal_form(v).is_zero()
    }
}

fn check_dim(dim: usize, v: &SparseVec) -> Result<(), LinalgError> {
    match v.max_index() {
        Some(i) if i >= dim => Err(LinalgError::IndexOutOfRange { index: i, dim }),
        _ => Ok(()),
    }
}

/// A subspace in canonical reduced row-echelon form.
///
/// Two bases describe the same subspace iff they are equal as values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: (0..ambient_dim).map(SparseVec::unit).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_vectors<'v, I>(ambient_dim: usize, vectors: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = &'v SparseVec>,
    {
        let mut e = Echelon::new(ambient_dim);
        e.extend(vectors)?;
        Ok(e.into_basis())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &SparseVec) -> Result<Option<Vec<Rational>>, LinalgError> {
        check_dim(self.ambient_dim, v)?;
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut rest = v.clone();
        for (c, w) in coords.iter().zip(&self.vectors) {
            rest.axpy(&-c, w);
        }
        Ok(rest.is_zero().then_some(coords))
    }

    pub fn contains(&self, v: &SparseVec) -> Result<bool, LinalgError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinalgError> {
        self.same_ambient(other)?;
        SubspaceBasis::from_vectors(self.ambient_dim, self.vectors.iter().chain(&other.vectors))
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool, LinalgError> {
        self.same_ambient(other)?;
        for v in &self.vectors {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn same_ambient(&self, other: &SubspaceBasis) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

pub fn subspace_equal(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<bool, LinalgError> {
    a.same_ambient(b)?;
    Ok(a == b)
}

/// Trace of `action` restricted to the invariant subspace `w`.
///
/// In reduced echelon coordinates the coefficient of basis vector `i` in a
/// member `u` of `w` is `u[pivot_i]`, so the trace is a sum of those
/// diagonal coefficients once each image is confirmed to lie in `w`.
pub fn restricted_trace<A: LinearAction + ?Sized>(
    action: &A,
    w: &SubspaceBasis,
) -> Result<Rational, LinalgError> {
    if action.dim() != w.ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            expected: w.ambient_dim,
            found: action.dim(),
        });
    }
    let mut trace = Rational::zero();
    for (i, v) in w.vectors.iter().enumerate() {
        let image = action.apply(v);
        let coords = w
            .coordinates(&image)?
            .ok_or(LinalgError::NotInvariant { basis_index: i })?;
        trace += &coords[i];
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(xs: &[i64]) -> SparseVec {
        let d: Vec<Rational> = xs.iter().map(|&x| Rational::from_int(x)).collect();
        SparseVec::from_dense(&d)
    }

    #[test]
    fn scaling_gives_same_subspace() {
        let a = SubspaceBasis::from_vectors(2, [&vec_of(&[1, 0])]).unwrap();
        let b = SubspaceBasis::from_vectors(2, [&vec_of(&[2, 0])]).unwrap();
        let c = SubspaceBasis::from_vectors(2, [&vec_of(&[1, 1])]).unwrap();
        assert!(subspace_equal(&a, &a).unwrap());
        assert!(subspace_equal(&a, &b).unwrap());
        assert!(!subspace_equal(&c, &a).unwrap());
        let d = SubspaceBasis::zero(3);
        assert!(matches!(
            subspace_equal(&a, &d),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reduced_form_is_canonical() {
        let a = SubspaceBasis::from_vectors(
            3,
            [&vec_of(&[1, 2, 3]), &vec_of(&[0, 1, 1])],
        )
        .unwrap();
        let b = SubspaceBasis::from_vectors(
            3,
            [&vec_of(&[1, 3, 4]), &vec_of(&[2, 5, 7])],
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vectors()[0], vec_of(&[1, 0, 1]));
        assert_eq!(a.vectors()[1], vec_of(&[0, 1, 1]));
    }

    #[test]
    fn swap_trace_on_its_plane() {
        let swap = SignedPermutation::new(vec![1, 0, 2], vec![1, 1, 1]);
        let plane = SubspaceBasis::from_vectors(3, [&vec_of(&[1, 0, 0]), &vec_of(&[0, 1, 0])]).unwrap();
        assert_eq!(restricted_trace(&swap, &plane).unwrap(), Rational::zero());
        assert_eq!(restricted_trace(&swap, &SubspaceBasis::full(3)).unwrap(), Rational::one());
        assert_eq!(restricted_trace(&swap, &SubspaceBasis::zero(3)).unwrap(), Rational::zero());
        let line = SubspaceBasis::from_vectors(3, [&vec_of(&[1, 0, 0])]).unwrap();
        assert!(matches!(
            restricted_trace(&swap, &line),
            Err(LinalgError::NotInvariant { basis_index: 0 })
        ));
    }

    #[test]
    fn quotient_traces_match_normal_forms() {
        // span{(1,1,0,0),(0,0,1,1)} is stable under the double swap.
        let perm = SignedPermutation::new(vec![1, 0, 3, 2], vec![1, 1, 1, 1]);
        let mut e = Echelon::new(4);
        e.insert(&vec_of(&[1, -1, 0, 0])).unwrap();
        e.insert(&vec_of(&[0, 0, 1, -1])).unwrap();
        let traces = e.quotient_traces(std::slice::from_ref(&perm));
        let mut r = e.reducer();
        let direct: Rational = e
            .non_pivots()
            .into_iter()
            .map(|j| r.normal_form(&perm.apply_unit(j)).get(j))
            .sum();
        assert_eq!(traces[0], direct);
        assert_eq!(traces[0], Rational::from_int(2));
    }
}
