//! Irreducible characters of the symmetric group and decomposition of class
//! functions into irreducible multiplicities.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::combinatorics::{partitions_of, Partition};
use crate::linalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharacterError {
    #[error("weights differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("class function is missing a value on class {0}")]
    MissingClass(Partition),
    #[error("not a character: multiplicity of {partition} is {multiplicity}")]
    NonCharacter {
        partition: Partition,
        multiplicity: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: u128,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl ConjugacyClass {
    pub fn new(cycle_type: Partition) -> Self {
        let m = cycle_type.weight();
        let mut centralizer: u128 = 1;
        let mut run = 0;
        for (i, &c) in cycle_type.parts().iter().enumerate() {
            centralizer *= c as u128;
            run += 1;
            if cycle_type.parts().get(i + 1) != Some(&c) {
                centralizer *= factorial(run);
                run = 0;
            }
        }
        ConjugacyClass {
            size: factorial(m) / centralizer,
            cycle_type,
        }
    }

    /// Canonical representative: consecutive cycles `(1 2 .. c1)(c1+1 ..)`,
    /// returned as the image of each point of `0..m`.
    pub fn representative(&self) -> Vec<usize> {
        let mut image = Vec::with_capacity(self.cycle_type.weight());
        let mut start = 0;
        for &c in self.cycle_type.parts() {
            for i in 0..c {
                image.push(start + (i + 1) % c);
            }
            start += c;
        }
        image
    }
}

/// All conjugacy classes of `S_m`, indexed like [`partitions_of`].
pub fn conjugacy_classes(m: usize) -> Vec<ConjugacyClass> {
    partitions_of(m).into_iter().map(ConjugacyClass::new).collect()
}

type MemoKey = (Partition, Partition);

fn memo() -> &'static RwLock<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// First-column hook lengths ("beta numbers") of `p` padded to `len` rows.
fn beta_set(p: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| p.part(i) + len - 1 - i).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::new(beta.iter().enumerate().map(|(i, &b)| b + i + 1 - len).collect())
        .expect("distinct beta numbers give a partition")
}

/// Murnaghan-Nakayama: strip rim hooks of length `mu[0]` from `lambda`.
fn mn(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let r = mu.part(0);
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix of a partition");
    let beta = beta_set(lambda, lambda.len());
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // leg length = beads strictly between the two positions
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&from_beta_set(next), &rest);
    }
    memo().write().unwrap().insert(key, total);
    total
}

/// `chi^lambda` evaluated on the class of cycle type `mu`.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> Result<i64, CharacterError> {
    if lambda.weight() != mu.weight() {
        return Err(CharacterError::WeightMismatch(lambda.weight(), mu.weight()));
    }
    Ok(mn(lambda, mu))
}

/// A rational-valued class function on `S_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    m: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    /// Requires a value on every cycle type of `m`.
    pub fn new(m: usize, values: BTreeMap<Partition, Rational>) -> Result<Self, CharacterError> {
        let classes = partitions_of(m);
        for c in &classes {
            if !values.contains_key(c) {
                return Err(CharacterError::MissingClass(c.clone()));
            }
        }
        if let Some(extra) = values.keys().find(|p| p.weight() != m) {
            return Err(CharacterError::WeightMismatch(m, extra.weight()));
        }
        Ok(ClassFunction { m, values })
    }

    pub fn from_fn(m: usize, mut f: impl FnMut(&Partition) -> Rational) -> Self {
        let values = partitions_of(m).into_iter().map(|c| {
            let v = f(&c);
            (c, v)
        });
        ClassFunction {
            m,
            values: values.collect(),
        }
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        Self::from_fn(lambda.weight(), |mu| Rational::from_int(mn(lambda, mu)))
    }

    /// Character of the regular representation.
    pub fn regular(m: usize) -> Self {
        Self::from_fn(m, |mu| {
            if mu.parts().iter().all(|&c| c == 1) {
                Rational::from(factorial(m) as u64)
            } else {
                Rational::zero()
            }
        })
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn value(&self, cycle_type: &Partition) -> &Rational {
        &self.values[cycle_type]
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rational> {
        &self.values
    }

    /// Value at the identity.
    pub fn dimension(&self) -> Rational {
        self.values[&Partition::new(vec![1; self.m]).unwrap()].clone()
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, CharacterError> {
        if self.m != other.m {
            return Err(CharacterError::WeightMismatch(self.m, other.m));
        }
        Ok(ClassFunction::from_fn(self.m, |c| self.value(c) + other.value(c)))
    }

    pub fn scaled(&self, a: &Rational) -> ClassFunction {
        ClassFunction::from_fn(self.m, |c| self.value(c) * a)
    }
}

/// `(1/m!) sum_classes |C| f(C) g(C)`; characters here are real-valued.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Rational, CharacterError> {
    if f.m != g.m {
        return Err(CharacterError::WeightMismatch(f.m, g.m));
    }
    let mut total = Rational::zero();
    for class in conjugacy_classes(f.m) {
        let size = Rational::from(class.size as u64);
        total += &(&size * f.value(&class.cycle_type)) * g.value(&class.cycle_type);
    }
    Ok(&total / &Rational::from(factorial(f.m) as u64))
}

/// Multiplicity of every irreducible in `f`; zero entries are omitted.
///
/// Fails with [`CharacterError::NonCharacter`] if some multiplicity is not a
/// nonnegative integer, which means `f` did not come from a representation.
pub fn decompose(f: &ClassFunction) -> Result<BTreeMap<Partition, u64>, CharacterError> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(f.m) {
        let mult = inner_product(f, &ClassFunction::irreducible(&lambda))?;
        match mult.to_i64() {
            Some(0) => {}
            Some(v) if v > 0 => {
                out.insert(lambda, v as u64);
            }
            _ => {
                return Err(CharacterError::NonCharacter {
                    partition: lambda,
                    multiplicity: mult,
                })
            }
        }
    }
    Ok(out)
}

/// The class function `sum_lambda mult(lambda) chi^lambda`.
pub fn character_of(m: usize, multiplicities: &BTreeMap<Partition, u64>) -> ClassFunction {
    ClassFunction::from_fn(m, |mu| {
        let v: i64 = multiplicities
            .iter()
            .map(|(lambda, &c)| c as i64 * mn(lambda, mu))
            .sum();
        Rational::from_int(v)
    })
}
