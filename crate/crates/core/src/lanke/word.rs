use std::fmt;
use std::str::FromStr;

use super::LankeError;

/// An unnormalized bracket tree. The derived order (leaves before brackets,
/// leaves by label, brackets lexicographically by children) is the canonical
/// order used to sort the arguments of every bracket.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf(u8),
    Bracket(Vec<Tree>),
}

impl Tree {
    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            Tree::Leaf(l) => out.push(*l),
            Tree::Bracket(c) => c.iter().for_each(|t| t.collect_leaves(out)),
        }
    }

    pub fn num_brackets(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Bracket(c) => 1 + c.iter().map(Tree::num_brackets).sum::<usize>(),
        }
    }

    pub fn relabel(&self, f: &impl Fn(u8) -> u8) -> Tree {
        match self {
            Tree::Leaf(l) => Tree::Leaf(f(*l)),
            Tree::Bracket(c) => Tree::Bracket(c.iter().map(|t| t.relabel(f)).collect()),
        }
    }

    /// Left-nested comb: the first column is the innermost bracket and each
    /// later column is appended as the remaining arguments of a new bracket.
    pub fn comb(columns: &[Vec<u8>]) -> Tree {
        let mut it = columns.iter();
        let first = it.next().expect("a comb needs at least one column");
        let mut tree = Tree::Bracket(first.iter().map(|&l| Tree::Leaf(l)).collect());
        for col in it {
            let mut children = Vec::with_capacity(col.len() + 1);
            children.push(tree);
            children.extend(col.iter().map(|&l| Tree::Leaf(l)));
            tree = Tree::Bracket(children);
        }
        tree
    }

    /// Sorts every bracket in place; returns the accumulated sign, or 0 if
    /// some bracket has two equal arguments.
    fn normalize_in_place(&mut self, n: usize) -> Result<i8, LankeError> {
        let Tree::Bracket(children) = self else {
            return Ok(1);
        };
        if children.len() != n {
            return Err(LankeError::Arity {
                expected: n,
                found: children.len(),
            });
        }
        let mut sign = 1i8;
        for c in children.iter_mut() {
            sign *= c.normalize_in_place(n)?;
        }
        for i in 0..children.len() {
            for j in i + 1..children.len() {
                match children[i].cmp(&children[j]) {
                    std::cmp::Ordering::Greater => sign = -sign,
                    std::cmp::Ordering::Equal => sign = 0,
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        children.sort_unstable();
        Ok(sign)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(l) => write!(f, "{l}"),
            Tree::Bracket(c) => {
                write!(f, "[")?;
                for (i, t) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl FromStr for Tree {
    type Err = LankeError;

    /// Parses text such as `[[1,2,3],4,5]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(LankeError::Parse {
                position: bytes[pos].0,
                message: "trailing input".into(),
            });
        }
        Ok(tree)
    }
}

fn parse_tree(chars: &[(usize, char)], pos: &mut usize) -> Result<Tree, LankeError> {
    let err = |p: usize, m: &str| LankeError::Parse {
        position: chars.get(p).map_or(usize::MAX, |c| c.0),
        message: m.into(),
    };
    match chars.get(*pos) {
        Some((_, '[')) => {
            *pos += 1;
            let mut children = vec![parse_tree(chars, pos)?];
            loop {
                match chars.get(*pos) {
                    Some((_, ',')) => {
                        *pos += 1;
                        children.push(parse_tree(chars, pos)?);
                    }
                    Some((_, ']')) => {
                        *pos += 1;
                        return Ok(Tree::Bracket(children));
                    }
                    _ => return Err(err(*pos, "expected ',' or ']'")),
                }
            }
        }
        Some((_, c)) if c.is_ascii_digit() => {
            let start = *pos;
            while chars.get(*pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
                *pos += 1;
            }
            let text: String = chars[start..*pos].iter().map(|(_, c)| c).collect();
            text.parse::<u8>().map(Tree::Leaf).map_err(|_| err(start, "label out of range"))
        }
        _ => Err(err(*pos, "expected a label or '['")),
    }
}

/// A bracket tree in normal form: every bracket has its arguments sorted.
///
/// The sign produced by normalization lives with the caller (see
/// [`BracketedWord::normalize`]), so words can serve as basis keys.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketedWord(Tree);

impl BracketedWord {
    /// Normal form and sign of `tree` under skew-symmetry of an `n`-ary
    /// bracket; `None` when the word vanishes.
    pub fn normalize(tree: &Tree, n: usize) -> Result<Option<(BracketedWord, i8)>, LankeError> {
        let mut t = tree.clone();
        let sign = t.normalize_in_place(n)?;
        Ok((sign != 0).then_some((BracketedWord(t), sign)))
    }

    /// Normalized comb on the given columns (see [`Tree::comb`]).
    pub fn comb(columns: &[Vec<u8>], n: usize) -> Result<Option<(BracketedWord, i8)>, LankeError> {
        Self::normalize(&Tree::comb(columns), n)
    }

    pub fn tree(&self) -> &Tree {
        &self.0
    }

    pub(crate) fn from_normalized(tree: Tree) -> Self {
        BracketedWord(tree)
    }

    /// A comb has at most one bracket among the arguments of each bracket.
    pub fn is_comb(&self) -> bool {
        fn go(t: &Tree) -> bool {
            match t {
                Tree::Leaf(_) => true,
                Tree::Bracket(c) => {
                    let inner: Vec<&Tree> = c.iter().filter(|t| matches!(t, Tree::Bracket(_))).collect();
                    inner.len() <= 1 && inner.iter().all(|t| go(t))
                }
            }
        }
        go(&self.0)
    }
}

impl fmt::Display for BracketedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
