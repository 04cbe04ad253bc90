//! Multiplicities of `Lie_n(m)` from fixed points of Young subgroups.
//!
//! For a Young subgroup `S_alpha` and a linear character `chi` of it, the
//! averaging projector `P = |S_alpha|^-1 sum chi(g) g` maps the words onto the
//! span of their orbit sums, and `P(V/R) = P(V)/P(R)`. Its dimension is
//! `sum_lambda m_lambda K_{lambda,alpha}` for the trivial character and
//! `sum_lambda m_lambda K_{lambda',alpha}` for the sign character, so the
//! multiplicities follow by unitriangular elimination. The orbit spaces are
//! far smaller than the word space, which is what makes `m = 9, 10` cheap.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use super::{BracketedWord, LankeError, Multiplicities, Tree};
use crate::combinatorics::{kostka_number, partitions_of, Partition};
use crate::linalg::{Echelon, Rational, SparseVec};

/// The linear character of a Young subgroup being averaged against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    Trivial,
    Sign,
}

/// Labels `1..=m` cut into consecutive blocks of sizes `alpha`.
#[derive(Clone, Debug)]
pub struct YoungBlocks {
    block: Vec<u8>,
    start: Vec<u8>,
}

impl YoungBlocks {
    pub fn new(alpha: &Partition) -> Self {
        let mut block = vec![0];
        let mut start = Vec::new();
        for (b, &size) in alpha.parts().iter().enumerate() {
            start.push(block.len() as u8);
            block.extend(std::iter::repeat_n(b as u8, size));
        }
        YoungBlocks { block, start }
    }

    pub fn block_of(&self, label: u8) -> u8 {
        self.block[label as usize]
    }

    pub fn m(&self) -> usize {
        self.block.len() - 1
    }
}

struct Arranged {
    tree: Tree,
    key: Tree,
    sign: i8,
    dead: bool,
    leaves: usize,
}

/// Sorts every bracket by the block pattern of its arguments (stably, so
/// equal patterns keep their order) and records whether some pair of equal
/// sibling patterns forces the orbit sum to vanish.
fn arrange(t: &Tree, blocks: &YoungBlocks, twist: Twist) -> Arranged {
    match t {
        Tree::Leaf(l) => Arranged {
            tree: t.clone(),
            key: Tree::Leaf(blocks.block_of(*l)),
            sign: 1,
            dead: false,
            leaves: 1,
        },
        Tree::Bracket(children) => {
            let parts: Vec<Arranged> = children.iter().map(|c| arrange(c, blocks, twist)).collect();
            let mut sign: i8 = parts.iter().map(|p| p.sign).product();
            let mut dead = parts.iter().any(|p| p.dead);
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    if parts[i].key.cmp(&parts[j].key) == Ordering::Greater {
                        sign = -sign;
                    }
                }
            }
            let mut order: Vec<usize> = (0..parts.len()).collect();
            order.sort_by(|&a, &b| parts[a].key.cmp(&parts[b].key));
            // Swapping two siblings with the same pattern is a group element
            // acting by -1 on the word; the orbit sum survives only if the
            // character also gives -1, i.e. sign twist and an odd number of
            // swapped label pairs.
            for w in order.windows(2) {
                let (a, b) = (&parts[w[0]], &parts[w[1]]);
                if a.key == b.key && (twist == Twist::Trivial || a.leaves % 2 == 0) {
                    dead = true;
                }
            }
            let leaves = parts.iter().map(|p| p.leaves).sum();
            let mut slots: Vec<Option<Arranged>> = parts.into_iter().map(Some).collect();
            let (mut trees, mut keys) = (Vec::new(), Vec::new());
            for i in order {
                let p = slots[i].take().expect("each child is taken once");
                trees.push(p.tree);
                keys.push(p.key);
            }
            Arranged {
                tree: Tree::Bracket(trees),
                key: Tree::Bracket(keys),
                sign,
                dead,
                leaves,
            }
        }
    }
}

/// Sign of a permutation given as an image table.
pub fn permutation_sign(image: &[u8]) -> i8 {
    let mut seen = vec![false; image.len()];
    let mut sign = 1;
    for s in 0..image.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = image[i] as usize;
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// `P(e_t) = sign * P(e_rep)` for a canonical orbit representative `rep`, or
/// `None` when `P(e_t) = 0`. `t` need not be normalized but must be
/// multilinear in `1..=m`.
pub fn canonical_orbit(
    t: &Tree,
    n: usize,
    blocks: &YoungBlocks,
    twist: Twist,
) -> Result<Option<(BracketedWord, i8)>, LankeError> {
    let a = arrange(t, blocks, twist);
    if a.dead {
        return Ok(None);
    }
    // Relabel by first occurrence within each block.
    let mut next = blocks.start.clone();
    let mut image = vec![0u8; blocks.m() + 1];
    for l in a.tree.leaves() {
        let b = blocks.block_of(l) as usize;
        image[l as usize] = next[b];
        next[b] += 1;
    }
    let chi = match twist {
        Twist::Trivial => 1,
        Twist::Sign => permutation_sign(&image),
    };
    let relabelled = a.tree.relabel(&|l| image[l as usize]);
    let Some((w, s)) = BracketedWord::normalize(&relabelled, n)? else {
        return Ok(None);
    };
    Ok(Some((w, a.sign * s * chi)))
}

/// The space `P(V)/P(R)` for one Young subgroup and twist, kept around so
/// that further vectors can be projected and tested.
pub struct FixedPointSpace {
    alpha: Partition,
    twist: Twist,
    projection: Vec<Option<(usize, i8)>>,
    orbits: usize,
    echelon: Echelon,
}

impl FixedPointSpace {
    pub(crate) fn build(
        words: &[BracketedWord],
        relations: &[SparseVec],
        n: usize,
        alpha: &Partition,
        twist: Twist,
    ) -> Result<Self, LankeError> {
        let blocks = YoungBlocks::new(alpha);
        let canon = words
            .par_iter()
            .map(|w| canonical_orbit(w.tree(), n, &blocks, twist))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_orbits(alpha, twist, canon, relations)
    }

    /// Builds from the orbit representative of every basis vector
    /// (`P(e_i) = sign * P(e_rep)`, `None` when `P(e_i) = 0`) and generators
    /// of the subspace to divide by, in basis coordinates.
    pub fn from_orbits<K: Eq + std::hash::Hash>(
        alpha: &Partition,
        twist: Twist,
        canon: Vec<Option<(K, i8)>>,
        generators: &[SparseVec],
    ) -> Result<Self, LankeError> {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let projection: Vec<Option<(usize, i8)>> = canon
            .into_iter()
            .map(|c| {
                c.map(|(rep, s)| {
                    let len = ids.len();
                    (*ids.entry(rep).or_insert(len), s)
                })
            })
            .collect();
        let orbits = ids.len();
        let mut space = FixedPointSpace {
            alpha: alpha.clone(),
            twist,
            projection,
            orbits,
            echelon: Echelon::new(orbits),
        };
        // Generators in one orbit project to the same vector up to sign.
        let projected: HashSet<SparseVec> = generators
            .par_iter()
            .map(|r| sign_normalized(space.project(r)))
            .filter(|v| !v.is_zero())
            .collect();
        let mut projected: Vec<SparseVec> = projected.into_iter().collect();
        projected.sort_by_key(|v| (v.nnz(), v.lead().map(|(i, _)| i)));
        for v in &projected {
            space.echelon.insert(v)?;
        }
        Ok(space)
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    /// Number of orbit sums that survive the projector.
    pub fn orbit_count(&self) -> usize {
        self.orbits
    }

    pub fn relation_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// `dim P(V/R)`.
    pub fn dim(&self) -> usize {
        self.orbits - self.echelon.rank()
    }

    /// `P(v)` in orbit coordinates, `v` in word coordinates.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_entries(v.iter().filter_map(|(i, x)| {
            self.projection[i].map(|(o, s)| (o, if s < 0 { -x } else { x.clone() }))
        }))
    }

    /// Whether `P(v)` lies in `P(R)`. Necessary for `v` to lie in `R`.
    pub fn projection_in_relations(&self, v: &SparseVec) -> bool {
        self.echelon.reducer().contains(&self.project(v))
    }

    /// `dim P(V)/(P(R) + P(extra))` for an additional generating set.
    pub fn dim_modulo(&self, extra: &[SparseVec]) -> Result<usize, LankeError> {
        let mut e = self.echelon.clone();
        for v in extra {
            e.insert(&self.project(v))?;
        }
        Ok(self.orbits - e.rank())
    }
}

fn sign_normalized(v: SparseVec) -> SparseVec {
    match v.lead() {
        Some((_, x)) if x.is_negative() => v.scaled(&Rational::from_int(-1)),
        _ => v,
    }
}

/// Which partitions are read off from trivial fixed points (an up-set in
/// dominance) and which from sign fixed points of the conjugate (the
/// complementary down-set). The cut minimizes the largest orbit space.
pub fn young_split(m: usize) -> (Vec<Partition>, Vec<Partition>) {
    let order = |p: &Partition| -> u128 { p.parts().iter().map(|&a| (1..=a as u128).product::<u128>()).product() };
    let all = partitions_of(m);
    let mut thresholds: Vec<u128> = all.iter().map(order).collect();
    thresholds.sort_unstable();
    thresholds.dedup();
    let cost = |t: u128| -> u128 {
        // Cost is proportional to 1 / |subgroup|; compare via the maximum of
        // m! / |subgroup| over both halves.
        let full: u128 = (1..=m as u128).product();
        all.iter()
            .map(|p| {
                if order(p) >= t {
                    full / order(p)
                } else {
                    full / order(&p.conjugate())
                }
            })
            .max()
            .unwrap_or(0)
    };
    let best = thresholds.iter().copied().min_by_key(|&t| (cost(t), t)).unwrap_or(1);
    all.into_iter().partition(|p| order(p) >= best)
}

/// Solves for multiplicities given fixed-point dimensions. `fixed(alpha,
/// twist)` must return `dim P(M)` for the Young subgroup of `alpha`.
pub fn multiplicities_from_fixed_points(
    m: usize,
    mut fixed: impl FnMut(&Partition, Twist) -> Result<usize, LankeError>,
) -> Result<Multiplicities, LankeError> {
    let (upper, lower) = young_split(m);
    let mut mult: BTreeMap<Partition, i64> = BTreeMap::new();
    // `partitions_of` lists in decreasing lexicographic order, which refines
    // dominance: every mu dominating lambda comes first.
    for lambda in &upper {
        let mut d = fixed(lambda, Twist::Trivial)? as i64;
        for (mu, &c) in &mult {
            d -= c * kostka_number(mu, lambda.parts()) as i64;
        }
        if d < 0 {
            return Err(LankeError::InconsistentFixedPoints(lambda.clone()));
        }
        mult.insert(lambda.clone(), d);
    }
    let mut low: BTreeMap<Partition, i64> = BTreeMap::new();
    for lambda in lower.iter().rev() {
        let conj = lambda.conjugate();
        let mut d = fixed(&conj, Twist::Sign)? as i64;
        for (nu, &c) in &low {
            d -= c * kostka_number(&nu.conjugate(), conj.parts()) as i64;
        }
        if d < 0 {
            return Err(LankeError::InconsistentFixedPoints(lambda.clone()));
        }
        low.insert(lambda.clone(), d);
    }
    mult.extend(low);
    Ok(mult.into_iter().filter(|(_, c)| *c > 0).map(|(p, c)| (p, c as u64)).collect())
}
