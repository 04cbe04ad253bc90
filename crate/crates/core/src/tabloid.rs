//! Column tabloids of shape `lambda(k)' = (k^(n-1), 1)`, the two families of
//! tabloid maps whose cokernel is `S^{alpha(n,k)'}`, and the map `h` onto
//! `Lie_n(m)` that sends a tabloid to the comb on its columns.
//!
//! Column 1 holds `n` labels and columns `2..=k` hold `n - 1` labels each.
//! Columns are alternating, so a tabloid is stored with every column sorted
//! and a sign.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::characters::{conjugacy_classes, decompose, CharacterError, ClassFunction};
use crate::combinatorics::{
    lr_coefficient, make_alpha, make_beta, partitions_of, skew_specht_multiplicities, CombinatoricsError, Partition,
};
use crate::lanke::{
    check_scale, multiplicities_from_fixed_points, permutation_sign, FixedPointSpace, LAnKeElement, LankeError,
    Multiplicities, QuotientModule, Tree, Twist, YoungBlocks,
};
use crate::linalg::{restricted_trace, LinalgError, LinearAction, Rational, SignedPermutation, SparseVec, SubspaceBasis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TabloidError {
    #[error("tabloid maps need at least two columns (k = {0})")]
    TooFewColumns(usize),
    #[error("columns {0:?} do not have lengths n, n-1, ..., n-1 on the labels 1..=m")]
    BadShape(Vec<Vec<u8>>),
    #[error("column pair ({s}, {next}) is out of range: need 2 <= s <= k-1 with k = {k}", next = s + 1)]
    BadColumnPair { s: usize, k: usize },
    #[error("expected a permutation of length {expected}, got {found}")]
    BadPermutation { expected: usize, found: usize },
    #[error(transparent)]
    Lanke(#[from] LankeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// A column tabloid in normal form: every column strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnTabloid {
    columns: Vec<Vec<u8>>,
}

impl ColumnTabloid {
    /// Sorts every column; the sign is the product of the sorting signs.
    /// `None` if some column repeats a label (the tabloid is then zero).
    pub fn normalize(mut columns: Vec<Vec<u8>>) -> Option<(ColumnTabloid, i8)> {
        let mut sign = 1i8;
        for col in &mut columns {
            for i in 0..col.len() {
                for j in i + 1..col.len() {
                    match col[i].cmp(&col[j]) {
                        std::cmp::Ordering::Greater => sign = -sign,
                        std::cmp::Ordering::Equal => return None,
                        std::cmp::Ordering::Less => {}
                    }
                }
            }
            col.sort_unstable();
        }
        Some((ColumnTabloid { columns }, sign))
    }

    /// Validates the shape `(n, n-1, ..., n-1)` on the labels `1..=m`, then
    /// normalizes.
    pub fn new(n: usize, columns: Vec<Vec<u8>>) -> Result<(ColumnTabloid, i8), TabloidError> {
        let m = columns.iter().map(Vec::len).sum::<usize>();
        let lengths_ok = !columns.is_empty()
            && columns.iter().enumerate().all(|(i, c)| c.len() == if i == 0 { n } else { n - 1 });
        let mut labels: Vec<u8> = columns.concat();
        labels.sort_unstable();
        if !lengths_ok || labels != (1..=m as u8).collect::<Vec<_>>() {
            return Err(TabloidError::BadShape(columns));
        }
        Ok(Self::normalize(columns).expect("labels are distinct"))
    }

    pub fn columns(&self) -> &[Vec<u8>] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &[u8] {
        &self.columns[i]
    }

    /// `sigma . t` with `perm` a permutation of `0..m`.
    pub fn permuted(&self, perm: &[usize]) -> (ColumnTabloid, i8) {
        let cols = self
            .columns
            .iter()
            .map(|c| c.iter().map(|&l| perm[l as usize - 1] as u8 + 1).collect())
            .collect();
        Self::normalize(cols).expect("a permutation keeps labels distinct")
    }
}

impl fmt::Display for ColumnTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for col in &self.columns {
            let labels: Vec<String> = col.iter().map(u8::to_string).collect();
            write!(f, "{}|", labels.join(" "))?;
        }
        Ok(())
    }
}

/// A rational combination of column tabloids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TabloidVector {
    terms: BTreeMap<ColumnTabloid, Rational>,
}

impl TabloidVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `c` times the tabloid with the given (unsorted) columns.
    pub fn add_columns(&mut self, c: &Rational, columns: Vec<Vec<u8>>) {
        let Some((t, s)) = ColumnTabloid::normalize(columns) else {
            return;
        };
        let c = if s < 0 { -c } else { c.clone() };
        let entry = self.terms.entry(t.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn terms(&self) -> &BTreeMap<ColumnTabloid, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn without(v: &[u8], i: usize) -> impl Iterator<Item = u8> + '_ {
    v.iter().enumerate().filter(move |&(p, _)| p != i).map(|(_, &x)| x)
}

/// `x (x) y - sum_i (-1)^(i-1) x_i y (x) x_1..^x_i..x_n` on columns 1 and 2.
pub fn omega_phi1(t: &ColumnTabloid) -> Result<TabloidVector, TabloidError> {
    if t.columns.len() < 2 {
        return Err(TabloidError::TooFewColumns(t.columns.len()));
    }
    let (x, y) = (&t.columns[0], &t.columns[1]);
    let mut out = TabloidVector::zero();
    out.add_columns(&Rational::one(), t.columns.clone());
    for i in 0..x.len() {
        let mut cols = t.columns.clone();
        cols[0] = std::iter::once(x[i]).chain(y.iter().copied()).collect();
        cols[1] = without(x, i).collect();
        let c = if i % 2 == 0 { -1 } else { 1 };
        out.add_columns(&Rational::from_int(c), cols);
    }
    Ok(out)
}

/// `(n-2) z (x) w + w (x) z + sum_{i,j} (-1)^(i+j+1) w_j z^z_i (x) z_i w^w_j`
/// on columns `s` and `s + 1` (1-based, `2 <= s <= k-1`).
pub fn omega_phi2(t: &ColumnTabloid, s: usize) -> Result<TabloidVector, TabloidError> {
    let k = t.columns.len();
    if s < 2 || s + 1 > k {
        return Err(TabloidError::BadColumnPair { s, k });
    }
    let (z, w) = (&t.columns[s - 1], &t.columns[s]);
    let n = z.len() + 1;
    let with = |a: Vec<u8>, b: Vec<u8>| {
        let mut cols = t.columns.clone();
        cols[s - 1] = a;
        cols[s] = b;
        cols
    };
    let mut out = TabloidVector::zero();
    out.add_columns(&Rational::from_int(n as i64 - 2), t.columns.clone());
    out.add_columns(&Rational::one(), with(w.clone(), z.clone()));
    for i in 0..z.len() {
        for j in 0..w.len() {
            // 1-based exponent i + j + 1 has the parity of 0-based i + j + 1.
            let c = if (i + j + 1) % 2 == 0 { 1 } else { -1 };
            let a = std::iter::once(w[j]).chain(without(z, i)).collect();
            let b = std::iter::once(z[i]).chain(without(w, j)).collect();
            out.add_columns(&Rational::from_int(c), with(a, b));
        }
    }
    Ok(out)
}

/// `h(t)`: the comb with column 1 as innermost bracket, then columns
/// `2..=k` in order.
pub fn map_h(t: &ColumnTabloid) -> Result<LAnKeElement, TabloidError> {
    let n = t.columns[0].len();
    let mut e = LAnKeElement::zero();
    e.add_tree(&Rational::one(), &Tree::comb(&t.columns), n)?;
    Ok(e)
}

/// The tabloid space `M^{lambda(k)'}` with a fixed basis order.
pub struct TabloidModule {
    n: usize,
    k: usize,
    basis: Vec<ColumnTabloid>,
    index: HashMap<ColumnTabloid, usize>,
}

fn subsets(items: &[u8], size: usize) -> Vec<Vec<u8>> {
    fn go(items: &[u8], size: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, size, 0, &mut Vec::new(), &mut out);
    out
}

impl TabloidModule {
    pub fn build(n: usize, k: usize) -> Result<Self, TabloidError> {
        let m = check_scale(n, k)?;
        if k < 2 {
            return Err(TabloidError::TooFewColumns(k));
        }
        let mut partial: Vec<(Vec<Vec<u8>>, Vec<u8>)> = vec![(Vec::new(), (1..=m as u8).collect())];
        for c in 0..k {
            let size = if c == 0 { n } else { n - 1 };
            partial = partial
                .into_iter()
                .flat_map(|(cols, rest)| {
                    subsets(&rest, size).into_iter().map(move |col| {
                        let left: Vec<u8> = rest.iter().copied().filter(|l| !col.contains(l)).collect();
                        let mut cols = cols.clone();
                        cols.push(col);
                        (cols, left)
                    })
                })
                .collect();
        }
        let basis: Vec<ColumnTabloid> = partial.into_iter().map(|(columns, _)| ColumnTabloid { columns }).collect();
        let index = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Ok(TabloidModule { n, k, basis, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        (self.n - 1) * self.k + 1
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ColumnTabloid] {
        &self.basis
    }

    pub fn index_of(&self, t: &ColumnTabloid) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// The tabloid with columns `[1..n], [n+1..2n-1], ...`.
    pub fn first_tabloid(&self) -> ColumnTabloid {
        self.basis[0].clone()
    }

    pub fn to_sparse(&self, v: &TabloidVector) -> SparseVec {
        SparseVec::from_entries(v.terms().iter().map(|(t, c)| (self.index[t], c.clone())))
    }

    pub fn permutation_action(&self, perm: &[usize]) -> Result<SignedPermutation, TabloidError> {
        if perm.len() != self.m() {
            return Err(TabloidError::BadPermutation {
                expected: self.m(),
                found: perm.len(),
            });
        }
        let (image, sign) = self
            .basis
            .iter()
            .map(|t| {
                let (u, s) = t.permuted(perm);
                (self.index[&u], s)
            })
            .unzip();
        Ok(SignedPermutation::new(image, sign))
    }

    /// Images of every basis tabloid under the first-column map and under
    /// the map on each column pair `(s, s+1)`, `2 <= s <= k-1`.
    pub fn map_images(&self) -> Result<Vec<SparseVec>, TabloidError> {
        let per_tabloid = self
            .basis
            .par_iter()
            .map(|t| -> Result<Vec<SparseVec>, TabloidError> {
                let mut out = vec![self.to_sparse(&omega_phi1(t)?)];
                for s in 2..self.k {
                    out.push(self.to_sparse(&omega_phi2(t, s)?));
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(per_tabloid.into_iter().flatten().filter(|v| !v.is_zero()).collect())
    }

    pub fn image_subspace(&self) -> Result<SubspaceBasis, TabloidError> {
        Ok(SubspaceBasis::from_vectors(self.dim(), &self.map_images()?)?)
    }

    /// Character of the cokernel as trace minus restricted trace on the
    /// image. Meant for small cases.
    pub fn cokernel_character_by_trace(&self) -> Result<ClassFunction, TabloidError> {
        let image = self.image_subspace()?;
        let mut values = BTreeMap::new();
        for class in conjugacy_classes(self.m()) {
            let a = self.permutation_action(&class.representative())?;
            values.insert(class.cycle_type, &a.trace() - &restricted_trace(&a, &image)?);
        }
        Ok(ClassFunction::new(self.m(), values)?)
    }

    /// Cokernel multiplicities from Young-subgroup fixed points.
    ///
    /// Under `S_alpha` a normalized tabloid's orbit sum vanishes for the
    /// trivial character iff some column holds two labels of one block, and
    /// never for the sign character; the representative relabels by
    /// occurrence, which keeps every column sorted.
    pub fn cokernel_multiplicities(&self) -> Result<Multiplicities, TabloidError> {
        let images = self.map_images()?;
        let mult = multiplicities_from_fixed_points(self.m(), |alpha, twist| {
            let blocks = YoungBlocks::new(alpha);
            let canon: Vec<Option<(ColumnTabloid, i8)>> =
                self.basis.iter().map(|t| canonical_tabloid(t, &blocks, twist)).collect();
            Ok(FixedPointSpace::from_orbits(alpha, twist, canon, &images)?.dim())
        })?;
        Ok(mult)
    }

    /// `h` in word coordinates of `q`, one image per basis tabloid.
    pub fn h_images(&self, q: &QuotientModule) -> Result<Vec<SparseVec>, TabloidError> {
        self.basis.iter().map(|t| Ok(q.to_sparse(&map_h(t)?)?)).collect()
    }

    /// Rank of `h` as a map into `Lie_n(m)`, by full elimination.
    pub fn h_rank(&self, q: &QuotientModule) -> Result<usize, TabloidError> {
        let mut e = q.echelon().clone();
        let before = e.rank();
        for v in self.h_images(q)? {
            e.insert(&v)?;
        }
        Ok(e.rank() - before)
    }
}

fn canonical_tabloid(t: &ColumnTabloid, blocks: &YoungBlocks, twist: Twist) -> Option<(ColumnTabloid, i8)> {
    if twist == Twist::Trivial {
        let repeats = t
            .columns
            .iter()
            .any(|c| c.windows(2).any(|w| blocks.block_of(w[0]) == blocks.block_of(w[1])));
        if repeats {
            return None;
        }
    }
    let mut next: Vec<u8> = (0..blocks.m()).map(|_| 0).collect();
    let mut image = vec![0u8; blocks.m() + 1];
    let mut starts = Vec::new();
    for l in 1..=blocks.m() as u8 {
        let b = blocks.block_of(l) as usize;
        if starts.len() == b {
            starts.push(l);
        }
    }
    for col in &t.columns {
        for &l in col {
            let b = blocks.block_of(l) as usize;
            image[l as usize] = starts[b] + next[b];
            next[b] += 1;
        }
    }
    let chi = match twist {
        Twist::Trivial => 1,
        Twist::Sign => permutation_sign(&image),
    };
    let (rep, s) = ColumnTabloid::normalize(
        t.columns
            .iter()
            .map(|c| c.iter().map(|&l| image[l as usize]).collect())
            .collect(),
    )?;
    Some((rep, s * chi))
}

/// Expected cokernel: `nu -> c^{outer}_{inner, nu'}` for the skew shape
/// `alpha(n,k)`.
pub fn expected_bridge_multiplicities(n: usize, k: usize) -> Result<Multiplicities, TabloidError> {
    let alpha = make_alpha(n, k)?;
    Ok(skew_specht_multiplicities(&alpha)
        .into_iter()
        .map(|(nu, c)| (nu.conjugate(), c))
        .collect())
}

/// The cokernel of the tabloid maps against the LR prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeComparison {
    pub n: usize,
    pub k: usize,
    pub cokernel: Multiplicities,
    pub expected: Multiplicities,
}

impl BridgeComparison {
    pub fn equal(&self) -> bool {
        self.cokernel == self.expected
    }
}

/// Computes the cokernel by restricted traces when `m <= 7` and by fixed
/// points otherwise.
pub fn quotient_character_vs_skew_specht(n: usize, k: usize) -> Result<BridgeComparison, TabloidError> {
    let module = TabloidModule::build(n, k)?;
    let cokernel = if module.m() <= 7 {
        decompose(&module.cokernel_character_by_trace()?)?
    } else {
        module.cokernel_multiplicities()?
    };
    Ok(BridgeComparison {
        n,
        k,
        cokernel,
        expected: expected_bridge_multiplicities(n, k)?,
    })
}

/// Checks that `h` kills the images of the tabloid maps. Exhaustive mode
/// checks every basis tabloid against the full elimination; otherwise only
/// the first tabloid is checked, which suffices because the tabloid space is
/// cyclic, the maps and `h` are equivariant and the relations are stable.
pub fn kernel_containment(
    module: &TabloidModule,
    q: &QuotientModule,
    exhaustive: bool,
) -> Result<ClauseResult, TabloidError> {
    let sources: Vec<ColumnTabloid> = if exhaustive {
        module.basis().to_vec()
    } else {
        vec![module.first_tabloid()]
    };
    let mut witnesses = Vec::new();
    for t in &sources {
        let mut images = vec![("phi1".to_string(), omega_phi1(t)?)];
        for s in 2..module.k() {
            images.push((format!("phi2[{s}]"), omega_phi2(t, s)?));
        }
        for (name, v) in images {
            let mut e = LAnKeElement::zero();
            for (u, c) in v.terms() {
                for (w, d) in map_h(u)?.terms() {
                    e.add_word(&(c * d), w.clone());
                }
            }
            let zero = if exhaustive { q.contains(&e)? } else { q.vanishes(&e)? };
            if !zero {
                witnesses.push(format!("{name} on {t}"));
            }
        }
    }
    Ok(ClauseResult {
        passed: witnesses.is_empty(),
        checked: sources.len(),
        witnesses,
    })
}

/// One clause of a verification: pass/fail plus what failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseResult {
    pub passed: bool,
    pub checked: usize,
    pub witnesses: Vec<String>,
}

/// One row of the multiplicity bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub nu: Partition,
    pub multiplicity: u64,
    pub bound: u64,
}

impl BoundRow {
    pub fn holds(&self) -> bool {
        self.multiplicity <= self.bound
    }
}

/// For every `nu |- m`: the multiplicity of `S^nu` in `rho_{n,k}` against
/// `c^lambda_{mu,nu}`, `lambda = (k^(n-1), k-1, ..., 1)`, `mu = (k-1, ..., 2)`.
pub fn multiplicity_bound(n: usize, k: usize) -> Result<Vec<BoundRow>, TabloidError> {
    let m = check_scale(n, k)?;
    let beta = make_beta(n, k)?;
    let rho = crate::lanke::rho_decomposition(n, k)?;
    Ok(partitions_of(m)
        .into_iter()
        .map(|nu| BoundRow {
            multiplicity: rho.get(&nu).copied().unwrap_or(0),
            bound: lr_coefficient(beta.outer(), beta.inner(), &nu),
            nu,
        })
        .collect())
}

/// Clause-by-clause check of the surjection from the skew Specht module and
/// of the column condition on `rho_{n,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTheoremReport {
    pub n: usize,
    pub k: usize,
    /// Images of the tabloid maps lie in the kernel of `h`.
    pub kernel_containment: ClauseResult,
    /// Every multiplicity in `rho_{n,k}` is at most the one in the skew
    /// Specht module.
    pub multiplicity_bound: ClauseResult,
    /// Every summand of `rho_{n,k}` has at least `k` columns.
    pub wide_summands: ClauseResult,
}

impl MainTheoremReport {
    pub fn passed(&self) -> bool {
        self.kernel_containment.passed && self.multiplicity_bound.passed && self.wide_summands.passed
    }
}

pub fn verify_main_theorem(n: usize, k: usize) -> Result<MainTheoremReport, TabloidError> {
    let module = TabloidModule::build(n, k)?;
    let q = QuotientModule::build(n, k)?;
    let kernel = kernel_containment(&module, &q, false)?;
    let rows = multiplicity_bound(n, k)?;
    let over: Vec<String> = rows
        .iter()
        .filter(|r| !r.holds())
        .map(|r| format!("{}: {} > {}", r.nu, r.multiplicity, r.bound))
        .collect();
    let narrow: Vec<String> = q
        .multiplicities()?
        .keys()
        .filter(|nu| nu.part(0) < k)
        .map(Partition::to_string)
        .collect();
    Ok(MainTheoremReport {
        n,
        k,
        kernel_containment: kernel,
        multiplicity_bound: ClauseResult {
            passed: over.is_empty(),
            checked: rows.len(),
            witnesses: over,
        },
        wide_summands: ClauseResult {
            passed: narrow.is_empty(),
            checked: q.multiplicities()?.len(),
            witnesses: narrow,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lanke::BracketedWord;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    fn t(cols: &[&[u8]]) -> ColumnTabloid {
        ColumnTabloid::normalize(cols.iter().map(|c| c.to_vec()).collect()).unwrap().0
    }

    #[test]
    fn normal_form_signs() {
        let (u, s) = ColumnTabloid::normalize(vec![vec![2, 1], vec![3]]).unwrap();
        assert_eq!((u.to_string(), s), ("|1 2|3|".to_string(), -1));
        let (v, s2) = ColumnTabloid::normalize(u.columns().to_vec()).unwrap();
        assert_eq!((v, s2), (u, 1));
        assert!(ColumnTabloid::normalize(vec![vec![1, 1], vec![3]]).is_none());
        assert!(ColumnTabloid::new(2, vec![vec![1, 2], vec![3]]).is_ok());
        assert!(ColumnTabloid::new(2, vec![vec![1, 2], vec![4]]).is_err());
        assert!(ColumnTabloid::new(3, vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn tabloid_counts() {
        for (n, k) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2)] {
            let m = (n - 1) * k + 1;
            let expect = factorial(m) / (factorial(n) * factorial(n - 1).pow(k as u32 - 1));
            assert_eq!(TabloidModule::build(n, k).unwrap().dim(), expect, "n = {n}, k = {k}");
        }
    }

    #[test]
    fn h_reads_combs() {
        let e = map_h(&t(&[&[1, 2], &[3]])).unwrap();
        let (w, s) = BracketedWord::normalize(&"[[1,2],3]".parse().unwrap(), 2).unwrap().unwrap();
        assert_eq!(s, -1);
        assert_eq!(e.terms().get(&w), Some(&Rational::from_int(-1)));
        assert_eq!(e.terms().len(), 1);
    }

    #[test]
    fn phi1_on_smallest_tabloid() {
        // |12|3| - (|13|2| - |23|1|)
        let v = omega_phi1(&t(&[&[1, 2], &[3]])).unwrap();
        let expect: BTreeMap<ColumnTabloid, Rational> = [
            (t(&[&[1, 2], &[3]]), Rational::one()),
            (t(&[&[1, 3], &[2]]), Rational::from_int(-1)),
            (t(&[&[2, 3], &[1]]), Rational::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(v.terms(), &expect);
    }

    #[test]
    fn phi2_coefficient_vanishes_for_binary() {
        let u = t(&[&[1, 2], &[3], &[4]]);
        let v = omega_phi2(&u, 2).unwrap();
        assert!(v.terms().get(&u).is_none_or(|c| c.is_zero()));
        assert!(omega_phi2(&u, 1).is_err());
        assert!(omega_phi2(&u, 3).is_err());
    }

    #[test]
    fn maps_are_equivariant() {
        let module = TabloidModule::build(3, 3).unwrap();
        let perm = [3, 0, 6, 1, 5, 2, 4];
        let act = module.permutation_action(&perm).unwrap();
        for b in module.basis().iter().step_by(11) {
            let (moved, s) = b.permuted(&perm);
            let sign = Rational::from_int(s as i64);
            let lhs = act.apply(&module.to_sparse(&omega_phi1(b).unwrap()));
            let rhs = module.to_sparse(&omega_phi1(&moved).unwrap()).scaled(&sign);
            assert_eq!(lhs, rhs);
            let lhs = act.apply(&module.to_sparse(&omega_phi2(b, 2).unwrap()));
            let rhs = module.to_sparse(&omega_phi2(&moved, 2).unwrap()).scaled(&sign);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn fixed_point_and_trace_routes_agree() {
        for (n, k) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
            let module = TabloidModule::build(n, k).unwrap();
            let by_trace = decompose(&module.cokernel_character_by_trace().unwrap()).unwrap();
            assert_eq!(module.cokernel_multiplicities().unwrap(), by_trace, "n = {n}, k = {k}");
        }
    }

    #[test]
    fn bridge_small() {
        let b = quotient_character_vs_skew_specht(2, 2).unwrap();
        assert!(b.equal());
        assert_eq!(b.cokernel, BTreeMap::from([("2,1".parse().unwrap(), 1)]));
    }

    #[test]
    fn bound_rows_for_two_brackets_are_a_delta() {
        let rows = multiplicity_bound(2, 2).unwrap();
        for r in rows {
            let target: Partition = "2,1".parse().unwrap();
            assert_eq!(r.bound, u64::from(r.nu == target));
            assert!(r.holds());
        }
    }

    #[test]
    fn first_tabloid_agrees_with_exhaustive_check() {
        for (n, k) in [(2, 3), (3, 3), (2, 4)] {
            let module = TabloidModule::build(n, k).unwrap();
            let q = QuotientModule::build(n, k).unwrap();
            let quick = kernel_containment(&module, &q, false).unwrap();
            let full = kernel_containment(&module, &q, true).unwrap();
            assert!(quick.passed && full.passed);
            assert_eq!((quick.checked, full.checked), (1, module.dim()));
        }
    }
}
