//! Property tests against independent oracles.

use lie_torsion::lie::{
    bracket, is_lyndon, lyndon_words, necklace_count, normal_form, Alphabet, Letter, LieElement,
    LieTree, LyndonWord,
};
use lie_torsion::powers::{expand_tree, nu, rho};
use lie_torsion::zlinalg::{integer_kernel, rank, smith_normal_form, IntMat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

mod common;
use common::minors_gcd;

fn matrix(max: usize) -> impl Strategy<Value = IntMat> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r).prop_map(move |rows| {
            IntMat::from_rows(
                c,
                rows.into_iter()
                    .map(|row| row.into_iter().map(BigInt::from).collect())
                    .collect(),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_divisors_form_a_chain(m in matrix(12)) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.divisors.len(), snf.rank);
        for d in &snf.divisors {
            prop_assert!(d.is_positive());
        }
        for w in snf.divisors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(snf.rank, rank(&m));
    }

    #[test]
    fn snf_matches_determinantal_divisors(m in matrix(6)) {
        let snf = smith_normal_form(&m);
        let mut prefix = BigInt::one();
        for k in 1..=m.rows().min(m.cols()) {
            let g = minors_gcd(&m, k);
            if k <= snf.rank {
                prefix *= &snf.divisors[k - 1];
                prop_assert_eq!(&g, &prefix);
            } else {
                prop_assert!(g.is_zero());
            }
        }
    }

    #[test]
    fn kernel_is_annihilated_and_full(m in matrix(8)) {
        let kernel = integer_kernel(&m);
        prop_assert_eq!(kernel.len() + rank(&m), m.cols());
        for v in &kernel {
            for i in 0..m.rows() {
                let dot: BigInt = m.row(i).iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert!(dot.is_zero());
            }
        }
        if !kernel.is_empty() {
            let k = IntMat::from_rows(m.cols(), kernel.clone());
            // saturated: the kernel lattice has trivial torsion in Z^n
            let snf = smith_normal_form(&k);
            prop_assert!(snf.divisors.iter().all(|d| d.is_one()));
        }
    }
}

fn element(alphabet_rank: u32, len: usize) -> impl Strategy<Value = LieElement<BigInt>> {
    let words = lyndon_words(
        &Alphabet::standard(alphabet_rank as usize),
        len as u32,
        |_| 1,
    )
    .into_iter()
    .filter(|w| w.len() == len)
    .collect::<Vec<LyndonWord>>();
    prop::collection::vec((prop::sample::select(words), -4i64..=4), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(w, c)| (w, BigInt::from(c)))
            .collect::<LieElement<BigInt>>()
    })
}

fn tree(depth: u32) -> impl Strategy<Value = LieTree> {
    let leaf = (0u32..3).prop_map(|l| LieTree::Gen(Letter(l)));
    leaf.prop_recursive(depth, 6, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| LieTree::bracket(a, b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn antisymmetry(a in element(3, 2), b in element(3, 3)) {
        prop_assert!((bracket(&a, &b) + bracket(&b, &a)).is_zero());
        prop_assert!(bracket(&a, &a).is_zero());
    }

    #[test]
    fn jacobi(a in element(3, 1), b in element(3, 2), c in element(3, 2)) {
        let j = bracket(&bracket(&a, &b), &c)
            + bracket(&bracket(&b, &c), &a)
            + bracket(&bracket(&c, &a), &b);
        prop_assert!(j.is_zero());
    }

    #[test]
    fn normal_form_embeds_like_the_tree(t in tree(3)) {
        prop_assume!(t.degree() <= 6);
        let nf: LieElement<BigInt> = normal_form(&Alphabet::standard(3), &t).unwrap();
        prop_assert_eq!(nu(&nf, t.degree()).unwrap(), expand_tree::<BigInt>(&t));
    }

    #[test]
    fn wever(e in element(3, 4)) {
        let back = rho(&nu(&e, 4).unwrap(), 4).unwrap();
        prop_assert_eq!(back, e.scale(&BigInt::from(4)));
    }
}

#[test]
fn lyndon_counts_follow_the_necklace_formula() {
    for r in 1..=3u64 {
        let max = 10;
        let words = lyndon_words(&Alphabet::standard(r as usize), max, |_| 1);
        for n in 1..=max {
            let count = words.iter().filter(|w| w.len() == n as usize).count();
            assert_eq!(
                BigInt::from(count),
                necklace_count(r, n),
                "rank {r}, length {n}"
            );
        }
        assert!(words.iter().all(|w| is_lyndon(w.letters())));
    }
}
