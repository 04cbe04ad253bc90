use std::collections::HashMap;

use rayon::prelude::*;

use super::tensor::{bounded_compositions, compositions, product_coefficient};
use super::{comultiply, dp_basis, dp_basis_of_weight, multiply, swap_factors, DPMonomial, DPVector, DpError};
use crate::linalg::{Rational, SparseRationalMatrix, SparseVec};

/// Two-rowed row-semistandard tableau with `a_i` ones and `b_i` twos in row
/// `i`; defines `phi_S : D(a1 + a2, b1 + b2) -> D(a1 + b1, a2 + b2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoRowTableauSpec {
    pub a1: usize,
    pub b1: usize,
    pub a2: usize,
    pub b2: usize,
}

impl TwoRowTableauSpec {
    pub fn new(a1: usize, b1: usize, a2: usize, b2: usize) -> Self {
        TwoRowTableauSpec { a1, b1, a2, b2 }
    }

    pub fn domain(&self) -> (usize, usize) {
        (self.a1 + self.a2, self.b1 + self.b2)
    }

    pub fn codomain(&self) -> (usize, usize) {
        (self.a1 + self.b1, self.a2 + self.b2)
    }
}

fn check_shape(v: &DPVector, shape: (usize, usize)) -> Result<(), DpError> {
    if v.shape() != [shape.0, shape.1] {
        return Err(DpError::ShapeMismatch {
            expected: vec![shape.0, shape.1],
            found: v.shape().to_vec(),
        });
    }
    Ok(())
}

/// `phi_S` as the literal composition: comultiply both factors, exchange the
/// middle two, multiply pairwise.
pub fn phi(spec: &TwoRowTableauSpec, v: &DPVector) -> Result<DPVector, DpError> {
    let TwoRowTableauSpec { a1, b1, a2, b2 } = *spec;
    check_shape(v, spec.domain())?;
    let v = comultiply(v, 0, (a1, a2))?;
    let v = comultiply(&v, 2, (b1, b2))?;
    let v = swap_factors(&v, 1)?;
    let v = multiply(&v, 2)?;
    multiply(&v, 0)
}

/// `theta_t : D(a, b) -> D(a - t, b + t)`: split `t` off the first factor and
/// multiply it into the second.
pub fn theta(t: usize, v: &DPVector) -> Result<DPVector, DpError> {
    let a = match v.shape() {
        [a, _] => *a,
        other => {
            return Err(DpError::ShapeMismatch {
                expected: vec![t, 0],
                found: other.to_vec(),
            })
        }
    };
    if t > a {
        return Err(DpError::BadTheta { t, a });
    }
    let v = comultiply(v, 0, (a - t, t))?;
    multiply(&v, 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Elementary {
    Phi(TwoRowTableauSpec),
    Theta(usize),
}

/// A rational combination of `phi_S` and `theta_t` maps between two fixed
/// two-factor spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPMap {
    domain: (usize, usize),
    codomain: (usize, usize),
    terms: Vec<(Rational, Elementary)>,
}

impl DPMap {
    pub fn phi(spec: TwoRowTableauSpec) -> Self {
        DPMap {
            domain: spec.domain(),
            codomain: spec.codomain(),
            terms: vec![(Rational::one(), Elementary::Phi(spec))],
        }
    }

    pub fn theta(t: usize, a: usize, b: usize) -> Result<Self, DpError> {
        if t > a {
            return Err(DpError::BadTheta { t, a });
        }
        Ok(DPMap {
            domain: (a, b),
            codomain: (a - t, b + t),
            terms: vec![(Rational::one(), Elementary::Theta(t))],
        })
    }

    /// `self + c * other`.
    pub fn plus(mut self, c: &Rational, other: &DPMap) -> Result<Self, DpError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(DpError::ShapeMismatch {
                expected: vec![self.domain.0, self.domain.1, self.codomain.0, self.codomain.1],
                found: vec![other.domain.0, other.domain.1, other.codomain.0, other.codomain.1],
            });
        }
        for (d, e) in &other.terms {
            self.terms.push((c * d, *e));
        }
        Ok(self)
    }

    pub fn domain(&self) -> (usize, usize) {
        self.domain
    }

    pub fn codomain(&self) -> (usize, usize) {
        self.codomain
    }

    /// Image of one basis monomial, by the closed form of each elementary
    /// map rather than the step-by-step composition.
    pub fn apply_monomial(&self, m: &DPMonomial) -> Vec<(DPMonomial, Rational)> {
        let (x, y) = (m.factor(0), m.factor(1));
        let mut out: HashMap<DPMonomial, Rational> = HashMap::new();
        let sub = |p: &[u32], q: &[u32]| -> Vec<u32> { p.iter().zip(q).map(|(a, b)| a - b).collect() };
        let add = |p: &[u32], q: &[u32]| -> Vec<u32> { p.iter().zip(q).map(|(a, b)| a + b).collect() };
        for (c, e) in &self.terms {
            match e {
                Elementary::Phi(s) => {
                    for x1 in bounded_compositions(s.a1, x) {
                        let x2 = sub(x, &x1);
                        for y1 in bounded_compositions(s.b1, y) {
                            let y2 = sub(y, &y1);
                            let coeff = &product_coefficient(&x1, &y1) * &product_coefficient(&x2, &y2);
                            let key = DPMonomial::new(vec![add(&x1, &y1), add(&x2, &y2)]);
                            out.entry(key).or_default().add_mul(c, &coeff);
                        }
                    }
                }
                Elementary::Theta(t) => {
                    for u in bounded_compositions(*t, x) {
                        let coeff = product_coefficient(&u, y);
                        let key = DPMonomial::new(vec![sub(x, &u), add(&u, y)]);
                        out.entry(key).or_default().add_mul(c, &coeff);
                    }
                }
            }
        }
        let mut terms: Vec<_> = out.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        terms.sort();
        terms
    }

    pub fn apply(&self, v: &DPVector) -> Result<DPVector, DpError> {
        check_shape(v, self.domain)?;
        let mut out = DPVector::zero(vec![self.codomain.0, self.codomain.1], v.num_vars());
        for (m, x) in v.terms() {
            for (m2, c) in self.apply_monomial(m) {
                out.add_term(m2, &(x * &c))?;
            }
        }
        Ok(out)
    }

    fn matrix_on(&self, domain: &[DPMonomial], codomain: &[DPMonomial]) -> SparseRationalMatrix {
        let index: HashMap<&DPMonomial, usize> = codomain.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let columns: Vec<SparseVec> = domain
            .par_iter()
            .map(|m| SparseVec::from_entries(self.apply_monomial(m).into_iter().map(|(m2, c)| (index[&m2], c))))
            .collect();
        SparseRationalMatrix::from_columns(codomain.len(), columns).expect("indices come from the codomain basis")
    }

    /// Matrix on the full monomial bases (see [`dp_basis`]).
    pub fn matrix(&self, num_vars: usize) -> SparseRationalMatrix {
        let domain = dp_basis(&[self.domain.0, self.domain.1], num_vars);
        let codomain = dp_basis(&[self.codomain.0, self.codomain.1], num_vars);
        self.matrix_on(&domain, &codomain)
    }

    /// The block between the weight spaces of multidegree `weight`.
    pub fn weight_block(&self, weight: &[u32]) -> SparseRationalMatrix {
        let domain = dp_basis_of_weight(&[self.domain.0, self.domain.1], weight);
        let codomain = dp_basis_of_weight(&[self.codomain.0, self.codomain.1], weight);
        self.matrix_on(&domain, &codomain)
    }

    /// Every multidegree over `num_vars` variables the map can touch.
    pub fn weights(&self, num_vars: usize) -> Vec<Vec<u32>> {
        compositions(self.domain.0 + self.domain.1, num_vars)
    }
}

/// `Phi_1 = phi_{S(1)} + (-1)^n phi_{S(2)}` on `D(n, n-1)`.
pub fn build_phi1(n: usize) -> Result<DPMap, DpError> {
    if n < 2 {
        return Err(DpError::DegreeTooSmall { n, min: 2 });
    }
    let s1 = DPMap::phi(TwoRowTableauSpec::new(n, 0, 0, n - 1));
    let s2 = DPMap::phi(TwoRowTableauSpec::new(1, n - 1, n - 1, 0));
    s1.plus(&sign(n), &s2)
}

/// `Phi_2 = (n-2) phi_{S(3)} + (-1)^{n-1} phi_{S(4)} + phi_{S(5)}` on
/// `D(n-1, n-1)`.
pub fn build_phi2(n: usize) -> Result<DPMap, DpError> {
    if n < 2 {
        return Err(DpError::DegreeTooSmall { n, min: 2 });
    }
    let s3 = TwoRowTableauSpec::new(n - 1, 0, 0, n - 1);
    let s4 = TwoRowTableauSpec::new(0, n - 1, n - 1, 0);
    let s5 = TwoRowTableauSpec::new(n - 2, 1, 1, n - 2);
    let zero = DPMap {
        domain: s3.domain(),
        codomain: s3.codomain(),
        terms: Vec::new(),
    };
    zero.plus(&Rational::from_int(n as i64 - 2), &DPMap::phi(s3))?
        .plus(&sign(n - 1), &DPMap::phi(s4))?
        .plus(&Rational::one(), &DPMap::phi(s5))
}

pub fn theta_map(t: usize, a: usize, b: usize) -> Result<DPMap, DpError> {
    DPMap::theta(t, a, b)
}

fn sign(e: usize) -> Rational {
    Rational::from_int(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// Outcome of comparing two column spaces inside the same `D(c, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageComparison {
    pub equal: bool,
    pub codomain_dim: usize,
    pub rank_left: usize,
    pub rank_right: usize,
    /// First multidegree where the images differ.
    pub witness: Option<Vec<u32>>,
}

impl ImageComparison {
    pub fn cokernel_dim_left(&self) -> usize {
        self.codomain_dim - self.rank_left
    }

    pub fn cokernel_dim_right(&self) -> usize {
        self.codomain_dim - self.rank_right
    }
}

/// Compares images weight space by weight space; both maps are torus
/// equivariant so the images split as direct sums over multidegrees.
pub fn compare_images(f: &DPMap, g: &DPMap, num_vars: usize) -> Result<ImageComparison, DpError> {
    if f.codomain != g.codomain {
        return Err(DpError::ShapeMismatch {
            expected: vec![f.codomain.0, f.codomain.1],
            found: vec![g.codomain.0, g.codomain.1],
        });
    }
    let weights = f.weights(num_vars);
    let blocks: Vec<(usize, usize, usize, bool)> = weights
        .par_iter()
        .map(|w| {
            let bf = f.weight_block(w).image_basis();
            let bg = g.weight_block(w).image_basis();
            (bf.ambient_dim(), bf.dim(), bg.dim(), bf == bg)
        })
        .collect();
    let witness = weights
        .iter()
        .zip(&blocks)
        .find(|(_, b)| !b.3)
        .map(|(w, _)| w.clone());
    Ok(ImageComparison {
        equal: witness.is_none(),
        codomain_dim: blocks.iter().map(|b| b.0).sum(),
        rank_left: blocks.iter().map(|b| b.1).sum(),
        rank_right: blocks.iter().map(|b| b.2).sum(),
        witness,
    })
}

/// `Im(Phi_2)` against `Im(theta_2 : D(n+1, n-3) -> D(n-1, n-1))`.
pub fn compare_phi2_theta2(n: usize, num_vars: usize) -> Result<ImageComparison, DpError> {
    if n < 3 {
        return Err(DpError::DegreeTooSmall { n, min: 3 });
    }
    if num_vars < 2 * n - 2 {
        return Err(DpError::TooFewVariables {
            num_vars,
            required: 2 * n - 2,
        });
    }
    compare_images(&build_phi2(n)?, &theta_map(2, n + 1, n - 3)?, num_vars)
}

pub fn images_equal_phi2_theta2(n: usize, num_vars: usize) -> Result<bool, DpError> {
    Ok(compare_phi2_theta2(n, num_vars)?.equal)
}

/// `Im(Phi_1)` against `Im(theta_1 : D(n+1, n-2) -> D(n, n-1))`.
pub fn compare_phi1_theta1(n: usize, num_vars: usize) -> Result<ImageComparison, DpError> {
    if n < 2 {
        return Err(DpError::DegreeTooSmall { n, min: 2 });
    }
    if num_vars < 2 * n - 1 {
        return Err(DpError::TooFewVariables {
            num_vars,
            required: 2 * n - 1,
        });
    }
    compare_images(&build_phi1(n)?, &theta_map(1, n + 1, n - 2)?, num_vars)
}

/// `q(t) = (-1)^t + t^2 + t - 1`.
pub fn q_value(t: usize) -> i64 {
    let t = t as i64;
    let s = if t % 2 == 0 { 1 } else { -1 };
    s + t * t + t - 1
}

fn block_trace(m: &SparseRationalMatrix) -> Rational {
    (0..m.ncols()).map(|i| m.get(i, i)).sum()
}

/// Scalar by which `Phi_2` acts on the summand `K_{(n-1+t, n-1-t)}` of
/// `D(n-1, n-1)`, read off from traces on two-variable weight spaces: the
/// weight `(n-1+t, n-1-t)` meets exactly the summands with index `>= t`, once
/// each.
pub fn phi2_eigenvalue(n: usize, t: usize) -> Result<Rational, DpError> {
    if n < 2 {
        return Err(DpError::DegreeTooSmall { n, min: 2 });
    }
    if t > n - 1 {
        return Err(DpError::BadTheta { t, a: n - 1 });
    }
    let map = build_phi2(n)?;
    let trace_at = |s: usize| -> Rational {
        if s > n - 1 {
            return Rational::zero();
        }
        block_trace(&map.weight_block(&[(n - 1 + s) as u32, (n - 1 - s) as u32]))
    };
    Ok(&trace_at(t) - &trace_at(t + 1))
}

/// Checks the closed form of `q` against both its unsimplified expression
/// and the eigenvalue of `Phi_2` computed from the map itself.
pub fn verify_q_formula(t: usize, n: usize) -> Result<bool, DpError> {
    let (ti, ni) = (t as i64, n as i64);
    let s = if t.is_multiple_of(2) { 1 } else { -1 };
    let unsimplified = ni - 2 + s + (ni - 1) * ti - (ti + 1) * (ni - 1 - ti);
    let eigen = phi2_eigenvalue(n, t)?;
    Ok(unsimplified == q_value(t) && eigen == Rational::from_int(q_value(t)))
}
