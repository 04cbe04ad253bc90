use std::collections::HashMap;

use super::{check_scale, BracketedWord, LAnKeElement, LankeError, Tree};
use crate::linalg::Rational;

/// All normalized words with `k` brackets of arity `n` on the labels
/// `1..=m`, `m = (n-1)k + 1`, sorted.
pub fn enumerate_basis(n: usize, k: usize) -> Result<Vec<BracketedWord>, LankeError> {
    let m = check_scale(n, k)?;
    let mut memo = HashMap::new();
    let full = (1u32 << m) - 1;
    let mut words: Vec<BracketedWord> = trees_on(full, n, &mut memo)
        .into_iter()
        .map(BracketedWord::from_normalized)
        .collect();
    words.sort_unstable();
    Ok(words)
}

/// Normalized trees whose leaves are exactly the labels in `mask`
/// (bit `i` is label `i + 1`).
fn trees_on(mask: u32, n: usize, memo: &mut HashMap<u32, Vec<Tree>>) -> Vec<Tree> {
    if mask.count_ones() == 1 {
        return vec![Tree::Leaf(mask.trailing_zeros() as u8 + 1)];
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let mut out = Vec::new();
    for blocks in block_partitions(mask, n) {
        let options: Vec<Vec<Tree>> = blocks.iter().map(|&b| trees_on(b, n, memo)).collect();
        let mut choice = vec![0usize; n];
        'product: loop {
            let mut children: Vec<Tree> = choice.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect();
            // blocks are disjoint, so children are distinct and sorting
            // gives the normal form
            children.sort_unstable();
            out.push(Tree::Bracket(children));
            for pos in 0..n {
                choice[pos] += 1;
                if choice[pos] < options[pos].len() {
                    continue 'product;
                }
                choice[pos] = 0;
            }
            break;
        }
    }
    memo.insert(mask, out.clone());
    out
}

/// Unordered partitions of `mask` into `n` blocks whose sizes are
/// `1 mod (n-1)`, i.e. sizes of label sets of bracket trees.
fn block_partitions(mask: u32, n: usize) -> Vec<Vec<u32>> {
    fn ok_size(size: u32, n: usize) -> bool {
        n == 2 || (size as usize - 1).is_multiple_of(n - 1)
    }
    fn go(rest: u32, left: usize, n: usize, blocks: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            if rest == 0 {
                out.push(blocks.clone());
            }
            return;
        }
        if rest.count_ones() < left as u32 {
            return;
        }
        // the block containing the smallest remaining label comes next
        let low = rest & rest.wrapping_neg();
        let others = rest & !low;
        let mut sub = others;
        loop {
            let block = sub | low;
            if ok_size(block.count_ones(), n) {
                blocks.push(block);
                go(rest & !block, left - 1, n, blocks, out);
                blocks.pop();
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
    }
    let mut out = Vec::new();
    go(mask, n, n, &mut Vec::new(), &mut out);
    out
}

fn internal_paths(t: &Tree, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if let Tree::Bracket(c) = t {
        out.push(path.clone());
        for (i, child) in c.iter().enumerate() {
            path.push(i);
            internal_paths(child, path, out);
            path.pop();
        }
    }
}

fn subtree<'a>(t: &'a Tree, path: &[usize]) -> &'a Tree {
    path.iter().fold(t, |t, &i| match t {
        Tree::Bracket(c) => &c[i],
        Tree::Leaf(_) => unreachable!("paths only lead through brackets"),
    })
}

fn replace(t: &Tree, path: &[usize], new: Tree) -> Tree {
    match path.split_first() {
        None => new,
        Some((&i, rest)) => match t {
            Tree::Bracket(c) => {
                let mut c = c.clone();
                c[i] = replace(&c[i], rest, new);
                Tree::Bracket(c)
            }
            Tree::Leaf(_) => unreachable!("paths only lead through brackets"),
        },
    }
}

/// Generalized Jacobi instances inside `word`: for each bracket `P` and each
/// bracket argument `C = [x_1, ..., x_n]` of `P`, with `y` the other
/// arguments of `P`, the terms of
/// `[C, y] - sum_i [x_1, ..., [x_i, y], ..., x_n]` substituted for `P`.
pub(crate) fn gji_instances(word: &Tree) -> Vec<Vec<(i64, Tree)>> {
    let mut paths = Vec::new();
    internal_paths(word, &mut Vec::new(), &mut paths);
    let mut out = Vec::new();
    for path in paths {
        let Tree::Bracket(args) = subtree(word, &path) else {
            unreachable!()
        };
        for (a, c) in args.iter().enumerate() {
            let Tree::Bracket(xs) = c else { continue };
            let ys: Vec<Tree> = args.iter().enumerate().filter(|&(i, _)| i != a).map(|(_, t)| t.clone()).collect();
            let mut terms = Vec::with_capacity(xs.len() + 1);
            let mut lhs = vec![c.clone()];
            lhs.extend(ys.iter().cloned());
            terms.push((1, replace(word, &path, Tree::Bracket(lhs))));
            for i in 0..xs.len() {
                let mut inner = vec![xs[i].clone()];
                inner.extend(ys.iter().cloned());
                let mut new = xs.clone();
                new[i] = Tree::Bracket(inner);
                terms.push((-1, replace(word, &path, Tree::Bracket(new))));
            }
            out.push(terms);
        }
    }
    out
}

/// Every generalized Jacobi relation, one per (word, bracket, bracket
/// argument) instance. Redundant, which is harmless for spans.
pub fn gji_relations(n: usize, k: usize) -> Result<Vec<LAnKeElement>, LankeError> {
    let mut out = Vec::new();
    for w in enumerate_basis(n, k)? {
        for terms in gji_instances(w.tree()) {
            let mut e = LAnKeElement::zero();
            for (c, t) in terms {
                e.add_tree(&Rational::from_int(c), &t, n)?;
            }
            out.push(e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn small_bases() {
        let b: Vec<String> = enumerate_basis(2, 2).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(b, vec!["[1,[2,3]]", "[2,[1,3]]", "[3,[1,2]]"]);
        assert_eq!(enumerate_basis(3, 1).unwrap().len(), 1);
        assert_eq!(enumerate_basis(3, 2).unwrap().len(), factorial(5) / (factorial(3) * factorial(2)));
    }

    /// Independent count: sum over unlabelled shapes, by brute-force
    /// normalization of every labelling of a fixed shape list.
    #[test]
    fn basis_matches_brute_force() {
        for (n, k) in [(2, 3), (3, 2), (2, 4), (4, 2), (3, 3)] {
            let m = (n - 1) * k + 1;
            let basis: BTreeSet<BracketedWord> = enumerate_basis(n, k).unwrap().into_iter().collect();
            let mut seen = BTreeSet::new();
            // every word is a relabelling of some basis word's shape; relabel
            // the shapes by all permutations and normalize
            let shapes: BTreeSet<String> = basis.iter().map(|w| shape_of(w.tree())).collect();
            for shape in &shapes {
                let template: Tree = basis.iter().find(|w| &shape_of(w.tree()) == shape).unwrap().tree().clone();
                for perm in permutations(m) {
                    let t = template.relabel(&|l| perm[l as usize - 1] as u8 + 1);
                    if let Some((w, _)) = BracketedWord::normalize(&t, n).unwrap() {
                        seen.insert(w);
                    }
                }
            }
            assert_eq!(seen, basis, "n = {n}, k = {k}");
        }
    }

    fn shape_of(t: &Tree) -> String {
        match t {
            Tree::Leaf(_) => "x".into(),
            Tree::Bracket(c) => {
                let mut parts: Vec<String> = c.iter().map(shape_of).collect();
                parts.sort();
                format!("[{}]", parts.join(","))
            }
        }
    }

    fn permutations(m: usize) -> Vec<Vec<usize>> {
        if m == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(m - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, m - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn relation_counts() {
        assert_eq!(gji_relations(3, 2).unwrap().len(), 10);
        // classical Jacobi: each of the three words gives the same relation
        // up to sign
        let rels = gji_relations(2, 2).unwrap();
        assert_eq!(rels.len(), 3);
        for r in &rels {
            assert_eq!(r.terms().len(), 3);
        }
    }

    #[test]
    fn block_partitions_respect_sizes() {
        // 5 labels into 3 blocks of odd size: {3,1,1} splits
        let parts = block_partitions(0b11111, 3);
        assert_eq!(parts.len(), 10);
        assert!(parts.iter().all(|p| p.iter().map(|b| b.count_ones()).sum::<u32>() == 5));
    }
}
