use super::{Rational, SparseVec};

/// A linear operator on `Q^dim`, applied to sparse vectors.
pub trait LinearAction {
    fn dim(&self) -> usize;

    fn apply_unit(&self, index: usize) -> SparseVec;

    fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in v.iter() {
            out.axpy(x, &self.apply_unit(i));
        }
        out
    }

    /// Ordinary trace on the whole space.
    fn trace(&self) -> Rational {
        (0..self.dim()).map(|i| self.apply_unit(i).get(i)).sum()
    }
}

/// `e_j -> sign[j] * e_{image[j]}`: how a permutation acts on a basis of
/// sign-normalized objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    image: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPermutation {
    /// Panics if `image` is not a permutation or the lengths differ.
    pub fn new(image: Vec<usize>, sign: Vec<i8>) -> Self {
        assert_eq!(image.len(), sign.len());
        let mut seen = vec![false; image.len()];
        for &i in &image {
            assert!(!seen[i], "not a permutation");
            seen[i] = true;
        }
        assert!(sign.iter().all(|s| *s == 1 || *s == -1));
        SignedPermutation { image, sign }
    }

    pub fn image(&self, j: usize) -> usize {
        self.image[j]
    }

    pub fn sign(&self, j: usize) -> i8 {
        self.sign[j]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }
}

impl LinearAction for SignedPermutation {
    fn dim(&self) -> usize {
        self.image.len()
    }

    fn apply_unit(&self, index: usize) -> SparseVec {
        SparseVec::from_sorted_unchecked(vec![(
            self.image[index],
            Rational::from_int(self.sign[index] as i64),
        )])
    }

    fn apply(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_entries(v.iter().map(|(i, x)| {
            let y = if self.sign[i] < 0 { -x } else { x.clone() };
            (self.image[i], y)
        }))
    }

    fn trace(&self) -> Rational {
        let t: i64 = (0..self.len())
            .filter(|&j| self.image[j] == j)
            .map(|j| self.sign[j] as i64)
            .sum();
        Rational::from_int(t)
    }
}
