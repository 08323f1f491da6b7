//! Lattice-level check of `0 -> M^c(A) -> A ⊗ A^(c-1) -> A^c -> 0`.

use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;

use super::metabelian::{mu_monomial, normal_words};
use super::symmetric::{kappa, multisets, MixedElement, Multiset};
use crate::error::{Error, Result};
use crate::lie::{Alphabet, Letter};
use crate::zlinalg::{cokernel_structure, rank, IntMat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExactnessReport {
    pub c: usize,
    pub alphabet_rank: usize,
    pub degree_cut: u32,
    pub rank_metabelian: usize,
    pub rank_mixed: usize,
    pub rank_symmetric: usize,
    pub mu_injective: bool,
    pub normal_words_span: bool,
    pub kappa_surjective: bool,
    pub image_equals_kernel: bool,
    pub pass: bool,
}

fn row_of(e: &MixedElement<BigInt>, basis: &[(Letter, Multiset)]) -> Vec<BigInt> {
    basis.iter().map(|k| e.coefficient(k)).collect()
}

/// Checks exactness content by content over every multiset of `c` letters
/// whose weight is at most `degree_cut`.
pub fn check_exactness(c: usize, alphabet: &Alphabet, degree_cut: u32) -> Result<ExactnessReport> {
    if c < 2 {
        return Err(Error::DegreeTooSmall(c));
    }
    let mut report = ExactnessReport {
        c,
        alphabet_rank: alphabet.len(),
        degree_cut,
        rank_metabelian: 0,
        rank_mixed: 0,
        rank_symmetric: 0,
        mu_injective: true,
        normal_words_span: true,
        kappa_surjective: true,
        image_equals_kernel: true,
        pass: false,
    };
    let normals = normal_words(alphabet, c, |w| w <= degree_cut);
    for content in multisets(alphabet, c, |w| w <= degree_cut) {
        let mixed_basis: Vec<(Letter, Multiset)> = content
            .letters()
            .iter()
            .copied()
            .dedup()
            .map(|a| (a, content.without(a).unwrap()))
            .collect();
        let words: Vec<&Vec<Letter>> = normals
            .iter()
            .filter(|w| Multiset::new(w.to_vec()) == content)
            .collect();
        report.rank_mixed += mixed_basis.len();
        report.rank_symmetric += 1;
        report.rank_metabelian += words.len();

        let n = mixed_basis.len();
        let mu_rows: Vec<Vec<BigInt>> = words
            .iter()
            .map(|w| Ok(row_of(&mu_monomial(w)?, &mixed_basis)))
            .collect::<Result<_>>()?;
        let mu_mat = IntMat::from_rows(n, mu_rows.clone());
        if rank(&mu_mat) != words.len() {
            report.mu_injective = false;
        }

        // every left-normed monomial of this content lies in the span of
        // the normal-word images
        let all_rows: Vec<Vec<BigInt>> = content
            .letters()
            .iter()
            .copied()
            .permutations(c)
            .unique()
            .map(|p| Ok(row_of(&mu_monomial(&p)?, &mixed_basis)))
            .collect::<Result<_>>()?;
        let normal_lattice = cokernel_structure(&mu_mat, n)?;
        let full_lattice = cokernel_structure(&mu_mat.stack(&IntMat::from_rows(n, all_rows)), n)?;
        if normal_lattice != full_lattice {
            report.normal_words_span = false;
        }

        // kappa on this content is the all-ones column
        let kappa_col: Vec<BigInt> = mixed_basis
            .iter()
            .map(|(a, m)| kappa(&MixedElement::monomial((*a, m.clone()))).coefficient(&content))
            .collect();
        let kappa_mat = IntMat::from_rows(1, kappa_col.iter().map(|v| vec![v.clone()]).collect());
        if !cokernel_structure(&kappa_mat, 1)?.is_torsion_free()
            || cokernel_structure(&kappa_mat, 1)?.free_rank != 0
        {
            report.kappa_surjective = false;
        }

        let composite_zero = mu_rows.iter().all(|r| {
            r.iter().zip(&kappa_col).map(|(a, b)| a * b).sum::<BigInt>() == BigInt::from(0)
        });
        let saturated = normal_lattice.is_torsion_free();
        let ranks_add = words.len() + 1 == n;
        if !(composite_zero && saturated && ranks_add) {
            report.image_equals_kernel = false;
        }
    }
    report.pass = report.mu_injective
        && report.normal_words_span
        && report.kappa_surjective
        && report.image_equals_kernel;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_degree_three() {
        let r = check_exactness(3, &Alphabet::standard(2), 100).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(
            (r.rank_metabelian, r.rank_mixed, r.rank_symmetric),
            (2, 6, 4)
        );
    }

    #[test]
    fn rank_one_has_no_metabelian_part() {
        let r = check_exactness(2, &Alphabet::standard(1), 100).unwrap();
        assert!(r.pass);
        assert_eq!(
            (r.rank_metabelian, r.rank_mixed, r.rank_symmetric),
            (0, 1, 1)
        );
    }

    #[test]
    fn rank_two_degree_two() {
        let r = check_exactness(2, &Alphabet::standard(2), 100).unwrap();
        assert!(r.pass);
        assert_eq!(
            (r.rank_metabelian, r.rank_mixed, r.rank_symmetric),
            (1, 4, 3)
        );
    }

    #[test]
    fn degree_one_rejected() {
        assert!(check_exactness(1, &Alphabet::standard(2), 8).is_err());
    }
}
