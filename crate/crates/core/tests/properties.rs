use std::collections::BTreeMap;

use lanke_core::characters::{character_of, decompose};
use lanke_core::combinatorics::partitions_of;
use lanke_core::lanke::{build_quotient, check_lemma33, BracketedWord, Lemma33Instance, QuotientModule};
use lanke_core::linalg::{restricted_trace, LinearAction, Rational, SignedPermutation, SparseVec, SubspaceBasis};
use lanke_core::tabloid::{map_h, omega_phi1, omega_phi2, ColumnTabloid, TabloidModule};
use proptest::prelude::*;
use proptest::sample::Index;

fn permutation(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..m).collect::<Vec<_>>()).prop_shuffle()
}

fn sign_of(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `sigma` on `Q^m (+) Q^m`, twisted by the sign on the second copy.
fn doubled_action(perm: &[usize]) -> SignedPermutation {
    let m = perm.len();
    let s = sign_of(perm) as i8;
    let image = (0..2 * m).map(|i| if i < m { perm[i] } else { m + perm[i - m] }).collect();
    let sign = (0..2 * m).map(|i| if i < m { 1 } else { s }).collect();
    SignedPermutation::new(image, sign)
}

fn quotient(n: usize, k: usize) -> &'static QuotientModule {
    use std::sync::OnceLock;
    static Q33: OnceLock<QuotientModule> = OnceLock::new();
    static Q24: OnceLock<QuotientModule> = OnceLock::new();
    match (n, k) {
        (3, 3) => Q33.get_or_init(|| build_quotient(3, 3).unwrap()),
        (2, 4) => Q24.get_or_init(|| build_quotient(2, 4).unwrap()),
        _ => unreachable!(),
    }
}

fn tabloids(n: usize, k: usize) -> &'static TabloidModule {
    use std::sync::OnceLock;
    static T33: OnceLock<TabloidModule> = OnceLock::new();
    static T24: OnceLock<TabloidModule> = OnceLock::new();
    match (n, k) {
        (3, 3) => T33.get_or_init(|| TabloidModule::build(3, 3).unwrap()),
        (2, 4) => T24.get_or_init(|| TabloidModule::build(2, 4).unwrap()),
        _ => unreachable!(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Trace splits over an invariant decomposition. Each copy of `Q^m` is
    /// constants plus sum-zero vectors, so four invariant pieces in all.
    #[test]
    fn restricted_traces_add_up(perm in permutation(6)) {
        let m = perm.len();
        let action = doubled_action(&perm);
        let q = |v: i64| Rational::from_int(v);
        let constants = |off: usize| SparseVec::from_entries((0..m).map(|i| (off + i, q(1))));
        let differences = |off: usize| -> Vec<SparseVec> {
            (0..m - 1).map(|i| SparseVec::from_entries([(off + i, q(1)), (off + i + 1, q(-1))])).collect()
        };
        let pieces = [
            SubspaceBasis::from_vectors(2 * m, &[constants(0)]).unwrap(),
            SubspaceBasis::from_vectors(2 * m, &differences(0)).unwrap(),
            SubspaceBasis::from_vectors(2 * m, &[constants(m)]).unwrap(),
            SubspaceBasis::from_vectors(2 * m, &differences(m)).unwrap(),
        ];
        let total: Rational = pieces.iter().map(|w| restricted_trace(&action, w).unwrap()).sum();
        prop_assert_eq!(total, action.trace());
        let first = pieces[0].sum(&pieces[1]).unwrap();
        prop_assert_eq!(
            restricted_trace(&action, &first).unwrap(),
            &restricted_trace(&action, &pieces[0]).unwrap() + &restricted_trace(&action, &pieces[1]).unwrap()
        );
    }

    /// The action on normalized words is a homomorphism.
    #[test]
    fn word_action_composes(a in permutation(7), b in permutation(7)) {
        let q = quotient(3, 3);
        let (fa, fb) = (q.permutation_action(&a).unwrap(), q.permutation_action(&b).unwrap());
        let ab: Vec<usize> = (0..7).map(|i| a[b[i]]).collect();
        let fab = q.permutation_action(&ab).unwrap();
        for j in (0..q.ambient_dim()).step_by(13) {
            let v = SparseVec::unit(j);
            prop_assert_eq!(fa.apply(&fb.apply(&v)), fab.apply(&v));
        }
    }

    /// Normalizing twice changes nothing, and the sign is the parity of the
    /// shuffle applied to each column.
    #[test]
    fn tabloid_normal_form(perm in permutation(7), shuffles in proptest::collection::vec(permutation(3), 3)) {
        let (t, _) = ColumnTabloid::new(3, vec![vec![1, 2, 3], vec![4, 5], vec![6, 7]]).unwrap();
        let (moved, s) = t.permuted(&perm);
        let (again, s2) = ColumnTabloid::normalize(moved.columns().to_vec()).unwrap();
        prop_assert_eq!(&again, &moved);
        prop_assert_eq!(s2, 1);
        let mut expect = s as i64;
        let cols: Vec<Vec<u8>> = moved
            .columns()
            .iter()
            .zip(&shuffles)
            .map(|(c, sh)| {
                let sh: Vec<usize> = sh.iter().copied().filter(|&i| i < c.len()).collect();
                expect *= sign_of(&sh);
                sh.iter().map(|&i| c[i]).collect()
            })
            .collect();
        let (back, s3) = ColumnTabloid::normalize(cols).unwrap();
        prop_assert_eq!(back, moved);
        prop_assert_eq!(s3 as i64 * s as i64, expect);
    }

    /// The tabloid maps and `h` commute with the symmetric group.
    #[test]
    fn bridge_maps_are_equivariant(perm in permutation(7), pick in any::<Index>(), big in any::<bool>()) {
        let (n, k) = if big { (3, 3) } else { (2, 4) };
        let m = (n - 1) * k + 1;
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < m).collect();
        let module = tabloids(n, k);
        let q = quotient(n, k);
        let t = &module.basis()[pick.index(module.dim())];
        let act = module.permutation_action(&perm).unwrap();
        let (moved, s) = t.permuted(&perm);
        let sign = Rational::from_int(s as i64);
        let lhs = act.apply(&module.to_sparse(&omega_phi1(t).unwrap()));
        prop_assert_eq!(lhs, module.to_sparse(&omega_phi1(&moved).unwrap()).scaled(&sign));
        for col in 2..k {
            let lhs = act.apply(&module.to_sparse(&omega_phi2(t, col).unwrap()));
            prop_assert_eq!(lhs, module.to_sparse(&omega_phi2(&moved, col).unwrap()).scaled(&sign));
        }
        let word_act = q.permutation_action(&perm).unwrap();
        let lhs = word_act.apply(&q.to_sparse(&map_h(t).unwrap()).unwrap());
        let rhs = q.to_sparse(&map_h(&moved).unwrap()).unwrap().scaled(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_lemma_instances_vanish(perm in permutation(7)) {
        let inst = Lemma33Instance::from_permutation(3, 3, 2, &perm).unwrap();
        prop_assert!(check_lemma33(quotient(3, 3), &inst).unwrap());
        prop_assert!(quotient(3, 3).contains(&inst.element().unwrap()).unwrap());
    }

    #[test]
    fn decompose_inverts_character_of(m in 1usize..7, raw in proptest::collection::vec(0u64..3, 11)) {
        let mults: BTreeMap<_, _> = partitions_of(m)
            .into_iter()
            .zip(raw)
            .filter(|(_, c)| *c > 0)
            .collect();
        prop_assert_eq!(decompose(&character_of(m, &mults)).unwrap(), mults);
    }
}

#[test]
fn normal_form_examples() {
    let n = |s: &str, arity| BracketedWord::normalize(&s.parse().unwrap(), arity).unwrap();
    let (w, s) = n("[2,1,3]", 3).unwrap();
    assert_eq!((w.to_string(), s), ("[1,2,3]".into(), -1));
    let (a, sa) = n("[[1,2,3],[4,5,6],7]", 3).unwrap();
    let (b, sb) = n("[[4,5,6],[1,2,3],7]", 3).unwrap();
    assert_eq!(a, b);
    assert_eq!(sa * sb, -1);
    assert!(n("[[1,2],[1,2]]", 2).is_none());
}

#[test]
fn spanning_and_quotient_dimensions() {
    let q = quotient(3, 3);
    assert_eq!(q.dim() as u128, q.dim_from_multiplicities().unwrap());
    assert!(q.combs_span().unwrap());
    assert!(build_quotient(3, 1).unwrap().combs_span().unwrap());
}
