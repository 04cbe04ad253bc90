use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::{LankeError, QuotientModule};
use crate::combinatorics::Partition;

pub type Multiplicities = BTreeMap<Partition, u64>;

fn memo() -> &'static Mutex<HashMap<(usize, usize), Multiplicities>> {
    static MEMO: OnceLock<Mutex<HashMap<(usize, usize), Multiplicities>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Irreducible multiplicities of `rho_{n,k}`, cached per process. For `n = 1`
/// this is `S^(1)` by convention.
pub fn rho_decomposition(n: usize, k: usize) -> Result<Multiplicities, LankeError> {
    if n == 1 {
        return Ok(BTreeMap::from([(Partition::new(vec![1]).unwrap(), 1)]));
    }
    if let Some(d) = memo().lock().unwrap().get(&(n, k)) {
        return Ok(d.clone());
    }
    let d = QuotientModule::build(n, k)?.multiplicities()?.clone();
    memo().lock().unwrap().insert((n, k), d.clone());
    Ok(d)
}

/// `rho_{n,k} = beta_{n,k} + gamma_{n,k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaGammaSplit {
    pub rho: Multiplicities,
    pub beta: Multiplicities,
    pub gamma: Multiplicities,
}

/// `beta_{n,k}` adds a row of length `k` on top of every summand of
/// `rho_{n-1,k}`; `gamma_{n,k}` is what remains of `rho_{n,k}`. Every summand
/// of `gamma` has at most `k-1` columns.
pub fn beta_gamma_split(n: usize, k: usize) -> Result<BetaGammaSplit, LankeError> {
    if n < 2 {
        return Err(LankeError::BadParameters { n, k });
    }
    let rho = rho_decomposition(n, k)?;
    let lower = rho_decomposition(n - 1, k)?;
    let mut beta = BTreeMap::new();
    for (lambda, &c) in &lower {
        let top = lambda.with_top_row(k).ok_or_else(|| LankeError::CannotPrepend {
            partition: lambda.clone(),
            k,
        })?;
        beta.insert(top, c);
    }
    let mut gamma = rho.clone();
    for (lambda, &c) in &beta {
        let have = gamma.get(lambda).copied().unwrap_or(0);
        if have < c {
            return Err(LankeError::NegativeMultiplicity(lambda.clone()));
        }
        if have == c {
            gamma.remove(lambda);
        } else {
            gamma.insert(lambda.clone(), have - c);
        }
    }
    if let Some(wide) = gamma.keys().find(|p| p.part(0) >= k) {
        return Err(LankeError::WideGammaSummand(wide.clone()));
    }
    Ok(BetaGammaSplit { rho, beta, gamma })
}
