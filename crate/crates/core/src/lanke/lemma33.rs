use super::{check_scale, LAnKeElement, LankeError, QuotientModule, Tree};
use crate::linalg::Rational;

/// A choice of comb columns and a pair `(s, s+1)` of consecutive brackets,
/// `2 <= s <= k-1`: column 1 holds `n` labels, the others `n-1`; columns
/// `1..s-1` form `z_0`, column `s` is `z`, column `s+1` is `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma33Instance {
    pub n: usize,
    pub s: usize,
    pub columns: Vec<Vec<u8>>,
}

impl Lemma33Instance {
    pub fn new(n: usize, s: usize, columns: Vec<Vec<u8>>) -> Result<Self, LankeError> {
        let k = columns.len();
        let m = check_scale(n, k)?;
        if k < 3 || s < 2 || s > k - 1 {
            return Err(LankeError::BadInstance(format!("need 2 <= s <= k-1, got s = {s}, k = {k}")));
        }
        let sizes_ok = columns.iter().enumerate().all(|(i, c)| c.len() == if i == 0 { n } else { n - 1 });
        let mut labels: Vec<u8> = columns.concat();
        labels.sort_unstable();
        if !sizes_ok || labels != (1..=m as u8).collect::<Vec<_>>() {
            return Err(LankeError::BadInstance(format!("columns {columns:?} do not split 1..={m}")));
        }
        Ok(Lemma33Instance { n, s, columns })
    }

    /// Cuts `perm` (a permutation of `0..m`) into columns, shifting labels
    /// to `1..=m`.
    pub fn from_permutation(n: usize, k: usize, s: usize, perm: &[usize]) -> Result<Self, LankeError> {
        let m = check_scale(n, k)?;
        if perm.len() != m {
            return Err(LankeError::BadPermutation(perm.len()));
        }
        let labels: Vec<u8> = perm.iter().map(|&p| p as u8 + 1).collect();
        let mut columns = vec![labels[..n].to_vec()];
        columns.extend(labels[n..].chunks(n - 1).map(<[u8]>::to_vec));
        Self::new(n, s, columns)
    }

    /// The combination of combs
    /// `(n-2) C(z; w) + C(w; z) + sum_{i,j} (-1)^{i+j+1} C(w_j z\z_i; z_i w\w_j)`
    /// where `C(a; b)` puts `a` in bracket `s` and `b` in bracket `s+1`.
    pub fn element(&self) -> Result<LAnKeElement, LankeError> {
        let n = self.n;
        let (z, w) = (&self.columns[self.s - 1], &self.columns[self.s]);
        let comb_with = |a: Vec<u8>, b: Vec<u8>| -> Tree {
            let mut cols = self.columns.clone();
            cols[self.s - 1] = a;
            cols[self.s] = b;
            Tree::comb(&cols)
        };
        let mut e = LAnKeElement::zero();
        e.add_tree(&Rational::from_int(n as i64 - 2), &comb_with(z.clone(), w.clone()), n)?;
        e.add_tree(&Rational::one(), &comb_with(w.clone(), z.clone()), n)?;
        for i in 1..n {
            for j in 1..n {
                let sign = if (i + j + 1) % 2 == 0 { 1 } else { -1 };
                let mut a = vec![w[j - 1]];
                a.extend(z.iter().enumerate().filter(|&(p, _)| p != i - 1).map(|(_, &x)| x));
                let mut b = vec![z[i - 1]];
                b.extend(w.iter().enumerate().filter(|&(p, _)| p != j - 1).map(|(_, &x)| x));
                e.add_tree(&Rational::from_int(sign), &comb_with(a, b), n)?;
            }
        }
        Ok(e)
    }
}

/// Whether the instance's combination vanishes in `Lie_n(m)`.
pub fn check_lemma33(q: &QuotientModule, instance: &Lemma33Instance) -> Result<bool, LankeError> {
    if instance.n != q.n() || instance.columns.len() != q.k() {
        return Err(LankeError::BadInstance(format!(
            "instance is for n = {}, k = {}, module for n = {}, k = {}",
            instance.n,
            instance.columns.len(),
            q.n(),
            q.k()
        )));
    }
    q.vanishes(&instance.element()?)
}
