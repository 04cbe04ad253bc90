use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::basis::gji_instances;
use super::isotypic::{multiplicities_from_fixed_points, young_split, FixedPointSpace, Twist};
use super::{check_scale, enumerate_basis, BracketedWord, LAnKeElement, LankeError, Multiplicities, Tree};
use crate::characters::{character_of, conjugacy_classes, ClassFunction};
use crate::combinatorics::Partition;
use crate::linalg::{restricted_trace, Echelon, LinearAction, Rational, SignedPermutation, SparseVec, SubspaceBasis};

/// `Lie_n(m)` as the span of normalized words modulo the generalized
/// Jacobi relations.
///
/// Words are indexed with the non-combs first and the combs last. Pivots of
/// the relation echelon form are leading indices, so the surviving indices,
/// which index a basis of the quotient, are as late as possible: they are all
/// combs exactly when the combs span.
///
/// The full echelon form is built on first use only. Up to `m = 8` it takes
/// well under a second; at `m = 10` several minutes. Multiplicities, the
/// character and comb spanning go through Young-subgroup fixed points
/// instead, which stay small at every supported size.
pub struct QuotientModule {
    n: usize,
    k: usize,
    words: Vec<BracketedWord>,
    index: HashMap<BracketedWord, usize>,
    comb_start: usize,
    relations: Vec<SparseVec>,
    echelon: OnceLock<Echelon>,
    fixed: Mutex<HashMap<(Partition, Twist), Arc<FixedPointSpace>>>,
    multiplicities: OnceLock<Multiplicities>,
}

impl QuotientModule {
    pub fn build(n: usize, k: usize) -> Result<Self, LankeError> {
        check_scale(n, k)?;
        let (mut combs, mut others): (Vec<_>, Vec<_>) = enumerate_basis(n, k)?.into_iter().partition(|w| w.is_comb());
        let comb_start = others.len();
        others.append(&mut combs);
        let words = others;
        let index: HashMap<BracketedWord, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let relations: Vec<SparseVec> = words
            .par_iter()
            .map(|w| -> Result<Vec<SparseVec>, LankeError> {
                gji_instances(w.tree())
                    .into_iter()
                    .map(|terms| sparse_from_trees(&index, n, terms.iter().map(|(c, t)| (*c, t))))
                    .collect()
            })
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .filter(|v| !v.is_zero())
            .collect();
        Ok(QuotientModule {
            n,
            k,
            words,
            index,
            comb_start,
            relations,
            echelon: OnceLock::new(),
            fixed: Mutex::new(HashMap::new()),
            multiplicities: OnceLock::new(),
        })
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

    /// Number of normalized words.
    pub fn ambient_dim(&self) -> usize {
        self.words.len()
    }

    /// Rank of the relations, by full elimination.
    pub fn relation_rank(&self) -> usize {
        self.echelon().rank()
    }

    /// `dim Lie_n(m)` by full elimination.
    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.relation_rank()
    }

    /// `dim Lie_n(m)` from the multiplicities, without full elimination.
    pub fn dim_from_multiplicities(&self) -> Result<u128, LankeError> {
        Ok(self
            .multiplicities()?
            .iter()
            .map(|(l, &c)| c as u128 * l.hook_length_dimension())
            .sum())
    }

    pub fn words(&self) -> &[BracketedWord] {
        &self.words
    }

    pub fn is_comb_index(&self, i: usize) -> bool {
        i >= self.comb_start
    }

    pub fn relations(&self) -> &[SparseVec] {
        &self.relations
    }

    /// Echelon form of all relations; built on first call.
    pub fn echelon(&self) -> &Echelon {
        self.echelon.get_or_init(|| {
            let mut e = Echelon::new(self.words.len());
            for r in &self.relations {
                e.insert(r).expect("relations live in the word space");
            }
            e
        })
    }

    /// Words whose classes form a basis of the quotient.
    pub fn quotient_basis(&self) -> Vec<&BracketedWord> {
        self.echelon().non_pivots().into_iter().map(|i| &self.words[i]).collect()
    }

    pub fn index_of(&self, w: &BracketedWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn to_sparse(&self, e: &LAnKeElement) -> Result<SparseVec, LankeError> {
        let entries = e
            .terms()
            .iter()
            .map(|(w, c)| {
                self.index_of(w)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| LankeError::NotInBasis(w.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseVec::from_entries(entries))
    }

    /// Whether `e` is zero in `Lie_n(m)`, by full elimination.
    pub fn contains(&self, e: &LAnKeElement) -> Result<bool, LankeError> {
        let v = self.to_sparse(e)?;
        Ok(self.echelon().reducer().contains(&v))
    }

    /// Looks for `e` in the span of the relations attached to words at most
    /// `radius` relation steps away from its support. `true` is a proof that
    /// `e` vanishes; `false` only means no certificate was found this close.
    pub fn certify_relation(&self, e: &LAnKeElement, radius: usize) -> Result<bool, LankeError> {
        let target = self.to_sparse(e)?;
        if target.is_zero() {
            return Ok(true);
        }
        let mut seen: HashSet<usize> = target.iter().map(|(i, _)| i).collect();
        let mut frontier: Vec<usize> = seen.iter().copied().collect();
        let mut local = Vec::new();
        for _ in 0..radius {
            let mut next = Vec::new();
            for &w in &frontier {
                for terms in gji_instances(self.words[w].tree()) {
                    let v = sparse_from_trees(&self.index, self.n, terms.iter().map(|(c, t)| (*c, t)))?;
                    next.extend(v.iter().map(|(i, _)| i).filter(|&i| seen.insert(i)));
                    local.push(v);
                }
            }
            frontier = next;
        }
        let mut support: Vec<usize> = seen.into_iter().collect();
        support.sort_unstable();
        let position: HashMap<usize, usize> = support.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut echelon = Echelon::new(support.len());
        for v in &local {
            echelon.insert(&v.reindex(|i| position[&i]))?;
        }
        let reduced = echelon.reducer().contains(&target.reindex(|i| position[&i]));
        Ok(reduced)
    }

    /// Decides whether `e` vanishes. Tries a local certificate, then a
    /// refutation through the fixed-point spaces, and only then falls back
    /// to full elimination.
    pub fn vanishes(&self, e: &LAnKeElement) -> Result<bool, LankeError> {
        for radius in 1..=3 {
            if self.certify_relation(e, radius)? {
                return Ok(true);
            }
        }
        let v = self.to_sparse(e)?;
        let (upper, lower) = young_split(self.m());
        for alpha in &upper {
            if !self.fixed_point_space(alpha, Twist::Trivial)?.projection_in_relations(&v) {
                return Ok(false);
            }
        }
        for lambda in &lower {
            if !self.fixed_point_space(&lambda.conjugate(), Twist::Sign)?.projection_in_relations(&v) {
                return Ok(false);
            }
        }
        self.contains(e)
    }

    /// `P(V)/P(R)` for the Young subgroup of `alpha`, cached.
    pub fn fixed_point_space(&self, alpha: &Partition, twist: Twist) -> Result<Arc<FixedPointSpace>, LankeError> {
        let key = (alpha.clone(), twist);
        if let Some(s) = self.fixed.lock().unwrap().get(&key) {
            return Ok(Arc::clone(s));
        }
        let space = Arc::new(FixedPointSpace::build(&self.words, &self.relations, self.n, alpha, twist)?);
        self.fixed.lock().unwrap().insert(key, Arc::clone(&space));
        Ok(space)
    }

    /// Irreducible multiplicities of `rho_{n,k}`, from fixed points.
    pub fn multiplicities(&self) -> Result<&Multiplicities, LankeError> {
        if let Some(m) = self.multiplicities.get() {
            return Ok(m);
        }
        let mult = multiplicities_from_fixed_points(self.m(), |alpha, twist| {
            Ok(self.fixed_point_space(alpha, twist)?.dim())
        })?;
        Ok(self.multiplicities.get_or_init(|| mult))
    }

    /// How the permutation `label l -> perm[l-1] + 1` acts on the words.
    pub fn permutation_action(&self, perm: &[usize]) -> Result<SignedPermutation, LankeError> {
        if perm.len() != self.m() {
            return Err(LankeError::BadPermutation(perm.len()));
        }
        let f = |l: u8| perm[l as usize - 1] as u8 + 1;
        let mut image = Vec::with_capacity(self.words.len());
        let mut sign = Vec::with_capacity(self.words.len());
        for w in &self.words {
            let (w2, s) = BracketedWord::normalize(&w.tree().relabel(&f), self.n)?.expect("relabelling keeps labels distinct");
            image.push(self.index[&w2]);
            sign.push(s);
        }
        Ok(SignedPermutation::new(image, sign))
    }

    fn class_actions(&self) -> Result<(Vec<crate::combinatorics::Partition>, Vec<SignedPermutation>), LankeError> {
        let classes = conjugacy_classes(self.m());
        let actions = classes
            .par_iter()
            .map(|c| self.permutation_action(&c.representative()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((classes.into_iter().map(|c| c.cycle_type).collect(), actions))
    }

    /// Character of `rho_{n,k}`, assembled from the multiplicities.
    pub fn character(&self) -> Result<ClassFunction, LankeError> {
        Ok(character_of(self.m(), self.multiplicities()?))
    }

    /// Character of `rho_{n,k}` from traces on the quotient basis of the
    /// full echelon form.
    pub fn character_by_quotient_trace(&self) -> Result<ClassFunction, LankeError> {
        let (types, actions) = self.class_actions()?;
        let traces = self.echelon().quotient_traces(&actions);
        let values = types.into_iter().zip(traces).collect();
        Ok(ClassFunction::new(self.m(), values)?)
    }

    /// The same character computed as the trace on all words minus the
    /// trace on the relation subspace. Needs the canonical echelon form of
    /// the relations, so it is meant for small cases.
    pub fn character_by_restricted_trace(&self) -> Result<ClassFunction, LankeError> {
        let r = self.relation_basis()?;
        let (types, actions) = self.class_actions()?;
        let mut values = BTreeMap::new();
        for (t, a) in types.into_iter().zip(&actions) {
            let v = &a.trace() - &restricted_trace(a, &r)?;
            values.insert(t, v);
        }
        Ok(ClassFunction::new(self.m(), values)?)
    }

    /// Canonical reduced echelon basis of the relation space.
    pub fn relation_basis(&self) -> Result<SubspaceBasis, LankeError> {
        Ok(SubspaceBasis::from_vectors(self.ambient_dim(), &self.relations)?)
    }

    /// `sigma` permutes the relation generators up to sign, hence fixes
    /// their span.
    pub fn relations_stable_under(&self, perm: &[usize]) -> Result<bool, LankeError> {
        let action = self.permutation_action(perm)?;
        let key = |v: &SparseVec| -> SparseVec {
            match v.lead() {
                Some((_, x)) if x.is_negative() => v.scaled(&Rational::from_int(-1)),
                _ => v.clone(),
            }
        };
        let set: HashSet<SparseVec> = self.relations.par_iter().map(key).collect();
        Ok(self.relations.par_iter().all(|r| set.contains(&key(&action.apply(r)))))
    }

    /// `sigma . R` and `R` have the same canonical echelon form.
    pub fn echelon_stable_under(&self, perm: &[usize]) -> Result<bool, LankeError> {
        let action = self.permutation_action(perm)?;
        let moved: Vec<SparseVec> = self.relations.iter().map(|r| action.apply(r)).collect();
        let a = self.relation_basis()?;
        let b = SubspaceBasis::from_vectors(self.ambient_dim(), &moved)?;
        Ok(a == b)
    }

    /// Every word is congruent to a combination of combs. The quotient
    /// `V/(R + combs)` is a module, and a nonzero module has a nonzero fixed
    /// vector for some Young subgroup in the split, so it suffices to check
    /// those fixed spaces.
    pub fn combs_span(&self) -> Result<bool, LankeError> {
        let combs: Vec<SparseVec> = (self.comb_start..self.words.len()).map(SparseVec::unit).collect();
        let (upper, lower) = young_split(self.m());
        let checks = upper
            .into_iter()
            .map(|a| (a, Twist::Trivial))
            .chain(lower.into_iter().map(|l| (l.conjugate(), Twist::Sign)));
        for (alpha, twist) in checks {
            if self.fixed_point_space(&alpha, twist)?.dim_modulo(&combs)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The same check read off the full echelon form: with combs indexed
    /// last, combs span iff every non-comb is a pivot.
    pub fn combs_span_by_elimination(&self) -> bool {
        let e = self.echelon();
        (0..self.comb_start).all(|i| e.is_pivot(i))
    }
}

pub(crate) fn sparse_from_trees<'t>(
    index: &HashMap<BracketedWord, usize>,
    n: usize,
    terms: impl Iterator<Item = (i64, &'t Tree)>,
) -> Result<SparseVec, LankeError> {
    let mut entries = Vec::new();
    for (c, t) in terms {
        if let Some((w, s)) = BracketedWord::normalize(t, n)? {
            let i = *index.get(&w).ok_or_else(|| LankeError::NotInBasis(w.to_string()))?;
            entries.push((i, Rational::from_int(c * s as i64)));
        }
    }
    Ok(SparseVec::from_entries(entries))
}

pub fn build_quotient(n: usize, k: usize) -> Result<QuotientModule, LankeError> {
    QuotientModule::build(n, k)
}

/// Character of `rho_{n,k}` on `Lie_n(m)`.
pub fn rho_character(n: usize, k: usize) -> Result<ClassFunction, LankeError> {
    QuotientModule::build(n, k)?.character()
}

pub fn check_comb_spanning(n: usize, k: usize) -> Result<bool, LankeError> {
    QuotientModule::build(n, k)?.combs_span()
}
