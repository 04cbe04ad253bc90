use std::collections::BTreeMap;
use std::fmt;

use super::DpError;
use crate::linalg::Rational;

/// A tensor product of divided-power monomials: factor `j` is an exponent
/// vector over the `N` variables, standing for `prod_i x_i^{(e_i)}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DPMonomial {
    factors: Vec<Vec<u32>>,
}

impl DPMonomial {
    /// Panics if the factors do not all have the same number of variables.
    pub fn new(factors: Vec<Vec<u32>>) -> Self {
        if let Some(first) = factors.first() {
            assert!(
                factors.iter().all(|f| f.len() == first.len()),
                "factors over different numbers of variables"
            );
        }
        DPMonomial { factors }
    }

    pub fn factors(&self) -> &[Vec<u32>] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> &[u32] {
        &self.factors[j]
    }

    pub fn num_vars(&self) -> usize {
        self.factors.first().map_or(0, Vec::len)
    }

    /// Degrees of the factors.
    pub fn shape(&self) -> Vec<usize> {
        self.factors.iter().map(|f| degree(f)).collect()
    }

    /// Multidegree: total exponent of each variable.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0; self.num_vars()];
        for f in &self.factors {
            for (wi, e) in w.iter_mut().zip(f) {
                *wi += e;
            }
        }
        w
    }
}

impl fmt::Display for DPMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, factor) in self.factors.iter().enumerate() {
            if j > 0 {
                write!(f, " ⊗ ")?;
            }
            if degree(factor) == 0 {
                write!(f, "()")?;
                continue;
            }
            for (i, &e) in factor.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "{}", i + 1)?,
                    _ => write!(f, "{}^({})", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

/// Rational combination of monomials sharing one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPVector {
    shape: Vec<usize>,
    num_vars: usize,
    terms: BTreeMap<DPMonomial, Rational>,
}

impl DPVector {
    pub fn zero(shape: Vec<usize>, num_vars: usize) -> Self {
        DPVector {
            shape,
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(m: DPMonomial) -> Self {
        let mut v = DPVector::zero(m.shape(), m.num_vars());
        v.terms.insert(m, Rational::one());
        v
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<DPMonomial, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &DPMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: DPMonomial, c: &Rational) -> Result<(), DpError> {
        if m.shape() != self.shape || m.num_vars() != self.num_vars {
            return Err(DpError::ShapeMismatch {
                expected: self.shape.clone(),
                found: m.shape(),
            });
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &DPVector) -> Result<(), DpError> {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), &(c * x))?;
        }
        Ok(())
    }

    pub fn scaled(&self, c: &Rational) -> DPVector {
        let mut out = DPVector::zero(self.shape.clone(), self.num_vars);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        }
        out
    }

    fn map_terms(
        &self,
        shape: Vec<usize>,
        mut f: impl FnMut(&DPMonomial, &mut dyn FnMut(DPMonomial, Rational)),
    ) -> DPVector {
        let mut out: BTreeMap<DPMonomial, Rational> = BTreeMap::new();
        for (m, x) in &self.terms {
            f(m, &mut |m2, c| {
                out.entry(m2).or_default().add_mul(x, &c);
            });
        }
        out.retain(|_, v| !v.is_zero());
        DPVector {
            shape,
            num_vars: self.num_vars,
            terms: out,
        }
    }
}

fn check_factor(v: &DPVector, factor: usize, span: usize) -> Result<(), DpError> {
    if factor + span > v.shape.len() {
        return Err(DpError::FactorOutOfRange {
            factor,
            factors: v.shape.len(),
        });
    }
    Ok(())
}

/// All exponent vectors `e <= bound` (entrywise) with `|e| = total`, in
/// increasing lexicographic order.
pub fn bounded_compositions(total: usize, bound: &[u32]) -> Vec<Vec<u32>> {
    fn go(total: usize, bound: &[u32], prefix: &mut Vec<u32>, room: usize, out: &mut Vec<Vec<u32>>) {
        let i = prefix.len();
        if i == bound.len() {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // remaining capacity after this slot must still fit the total
        let rest = room - bound[i] as usize;
        let lo = total.saturating_sub(rest);
        let hi = total.min(bound[i] as usize);
        for e in lo..=hi {
            prefix.push(e as u32);
            go(total - e, bound, prefix, rest, out);
            prefix.pop();
        }
    }
    let room = degree(bound);
    let mut out = Vec::new();
    if total <= room {
        go(total, bound, &mut Vec::with_capacity(bound.len()), room, &mut out);
    }
    out
}

/// All exponent vectors over `num_vars` variables of degree `total`.
pub fn compositions(total: usize, num_vars: usize) -> Vec<Vec<u32>> {
    bounded_compositions(total, &vec![total as u32; num_vars])
}

/// `prod_i C(e_i + f_i, e_i)`: the coefficient of `x^{(e)} x^{(f)}`.
pub(crate) fn product_coefficient(e: &[u32], f: &[u32]) -> Rational {
    // bounded by C(|e| + |f|, |e|), so u64 is plenty at the degrees used here
    let mut c: u64 = 1;
    for (&a, &b) in e.iter().zip(f) {
        c = c
            .checked_mul(num_integer::binomial((a + b) as u64, a as u64))
            .expect("binomial product overflow");
    }
    Rational::from(c)
}

/// Component `D(t1 + t2) -> D(t1) ⊗ D(t2)` of comultiplication on one
/// factor. Divided powers comultiply without binomials.
pub fn comultiply(v: &DPVector, factor: usize, split: (usize, usize)) -> Result<DPVector, DpError> {
    check_factor(v, factor, 1)?;
    let (t1, t2) = split;
    if t1 + t2 != v.shape[factor] {
        return Err(DpError::BadSplit {
            degree: v.shape[factor],
            split,
        });
    }
    let mut shape = v.shape.clone();
    shape.splice(factor..=factor, [t1, t2]);
    Ok(v.map_terms(shape, |m, emit| {
        let e = m.factor(factor);
        for left in bounded_compositions(t1, e) {
            let right: Vec<u32> = e.iter().zip(&left).map(|(a, b)| a - b).collect();
            let mut factors = m.factors.clone();
            factors.splice(factor..=factor, [left, right]);
            emit(DPMonomial { factors }, Rational::one());
        }
    }))
}

/// Multiplication `D(a) ⊗ D(b) -> D(a + b)` of factors `factor` and
/// `factor + 1`.
pub fn multiply(v: &DPVector, factor: usize) -> Result<DPVector, DpError> {
    check_factor(v, factor, 2)?;
    let mut shape = v.shape.clone();
    shape.splice(factor..factor + 2, [v.shape[factor] + v.shape[factor + 1]]);
    Ok(v.map_terms(shape, |m, emit| {
        let (e, f) = (m.factor(factor), m.factor(factor + 1));
        let c = product_coefficient(e, f);
        let sum: Vec<u32> = e.iter().zip(f).map(|(a, b)| a + b).collect();
        let mut factors = m.factors.clone();
        factors.splice(factor..factor + 2, [sum]);
        emit(DPMonomial { factors }, c);
    }))
}

/// Exchanges factors `factor` and `factor + 1`. Divided powers are even, so
/// there is no sign.
pub fn swap_factors(v: &DPVector, factor: usize) -> Result<DPVector, DpError> {
    check_factor(v, factor, 2)?;
    let mut shape = v.shape.clone();
    shape.swap(factor, factor + 1);
    Ok(v.map_terms(shape, |m, emit| {
        let mut factors = m.factors.clone();
        factors.swap(factor, factor + 1);
        emit(DPMonomial { factors }, Rational::one());
    }))
}

/// Monomial basis of `D(shape)` in `num_vars` variables, ordered
/// lexicographically by concatenated exponent vectors.
pub fn dp_basis(shape: &[usize], num_vars: usize) -> Vec<DPMonomial> {
    let mut out = vec![Vec::new()];
    for &a in shape {
        let comps = compositions(a, num_vars);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Vec<u32>>| {
                comps.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(|factors| DPMonomial { factors }).collect()
}

/// Basis monomials of `D(shape)` of a fixed multidegree, same order.
pub fn dp_basis_of_weight(shape: &[usize], weight: &[u32]) -> Vec<DPMonomial> {
    fn go(shape: &[usize], remaining: &[u32], prefix: &mut Vec<Vec<u32>>, out: &mut Vec<DPMonomial>) {
        let Some((&a, rest)) = shape.split_first() else {
            if remaining.iter().all(|&r| r == 0) {
                out.push(DPMonomial { factors: prefix.clone() });
            }
            return;
        };
        for e in bounded_compositions(a, remaining) {
            let left: Vec<u32> = remaining.iter().zip(&e).map(|(r, x)| r - x).collect();
            prefix.push(e);
            go(rest, &left, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if shape.iter().sum::<usize>() == degree(weight) {
        go(shape, weight, &mut Vec::new(), &mut out);
    }
    out
}

/// `dim D(shape) = prod_j C(a_j + N - 1, N - 1)`.
pub fn dp_dimension(shape: &[usize], num_vars: usize) -> u128 {
    if num_vars == 0 {
        return shape.iter().all(|&a| a == 0) as u128;
    }
    shape
        .iter()
        .map(|&a| num_integer::binomial((a + num_vars - 1) as u128, (num_vars - 1) as u128))
        .product()
}
