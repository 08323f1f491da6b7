//! `B^p(V)` as a direct summand of `T^p(V)`: the subspace `W` built from
//! the `sigma_i` images and `B^p(V)`, compared with `Ker alpha` and
//! complemented by `Im beta`.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use serde::Serialize;

use super::maps::{alpha_map, beta_map, sigma_map};
use super::pbw::{pbw_classes, product};
use crate::coeff::{is_prime, Field, Fp};
use crate::error::{Error, Result};
use crate::lie::{lyndon_words_with, Alphabet, Letter, LieElement, LyndonWord};
use crate::powers::{eta, multisets, Embedding, MixedElement, Multiset, TensorElement};
use crate::zlinalg::field::{echelon_basis, in_span, left_kernel, rank};

/// Largest `(dim V)^p` accepted.
pub const MAX_TENSOR_DIM: usize = 1 << 14;

/// Basis of `B^p(V)`: the kernel of `eta_p` on the Lyndon basis of
/// `L^p(V)` over the prime field.
pub fn bp_space<F: Field>(p: usize, alphabet: &Alphabet) -> Result<Vec<LieElement<F>>> {
    let words = lyndon_words_with(alphabet, p, p as u32);
    let images: Vec<MixedElement<F>> = words
        .iter()
        .map(|w| {
            Ok(eta(&LieElement::<F>::monomial(w.clone()), p)?
                .mu_image()
                .clone())
        })
        .collect::<Result<_>>()?;
    let columns: BTreeMap<(Letter, Multiset), usize> = images
        .iter()
        .flat_map(|m| m.keys().cloned())
        .unique()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    let rows: Vec<Vec<F>> = images
        .iter()
        .map(|m| {
            let mut row = vec![F::zero(); columns.len()];
            for (k, c) in m.iter() {
                row[columns[k]] = c.clone();
            }
            row
        })
        .collect();
    let kernel = if columns.is_empty() {
        (0..words.len())
            .map(|i| {
                (0..words.len())
                    .map(|j| if i == j { F::one() } else { F::zero() })
                    .collect()
            })
            .collect()
    } else {
        left_kernel(&rows)
    };
    Ok(kernel
        .into_iter()
        .map(|v| {
            words
                .iter()
                .zip(v)
                .map(|(w, c)| (w.clone(), c))
                .collect::<LieElement<F>>()
        })
        .collect())
}

/// Dense coordinates on `T^p(V)` and on `V ⊗ S^(p-1)(V)`.
struct Coords {
    n: usize,
    p: usize,
    mixed: HashMap<(Letter, Multiset), usize>,
}

impl Coords {
    fn new(alphabet: &Alphabet, p: usize) -> Self {
        let mut mixed = HashMap::new();
        for a in alphabet.letters() {
            for m in multisets(alphabet, p - 1, |_| true) {
                let next = mixed.len();
                mixed.insert((a, m), next);
            }
        }
        Coords {
            n: alphabet.len(),
            p,
            mixed,
        }
    }

    fn tensor_dim(&self) -> usize {
        self.n.pow(self.p as u32)
    }

    fn tensor<F: Field>(&self, t: &TensorElement<F>) -> Vec<F> {
        let mut v = vec![F::zero(); self.tensor_dim()];
        for (w, c) in t.iter() {
            let i = w.0.iter().fold(0, |acc, l| acc * self.n + l.index());
            v[i] = v[i].clone() + c.clone();
        }
        v
    }

    fn mixed<F: Field>(&self, z: &MixedElement<F>) -> Vec<F> {
        let mut v = vec![F::zero(); self.mixed.len()];
        for (k, c) in z.iter() {
            v[self.mixed[k]] = c.clone();
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TypeSummary {
    pub kind: Vec<usize>,
    pub size: usize,
    /// Rank of `sigma_i` for interior types.
    pub sigma_rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SummandReport {
    pub prime: u64,
    pub dim: usize,
    pub tensor_dim: usize,
    pub types: Vec<TypeSummary>,
    pub pbw_is_basis: bool,
    pub bp_dim: usize,
    pub w_dim: usize,
    pub ker_alpha_dim: usize,
    pub im_beta_dim: usize,
    /// `alpha(beta(z)) = z` on a basis.
    pub alpha_beta_identity: bool,
    /// No interior type has `k_p > 0` or any `k_j >= p`.
    pub interior_types_below_p: bool,
    /// `sigma_i(c) ∈ X_i` and `sigma_i(c) ≡ c` modulo `X_(i+1)`.
    pub sigma_congruence: bool,
    pub sigma_injective: bool,
    /// Reordering PBW factors changes an element only modulo `X_(i+1)`.
    pub permutation_stability: bool,
    pub w_in_ker_alpha: bool,
    pub w_equals_ker_alpha: bool,
    /// The sigma images and `B^p(V)` are independent inside `W`.
    pub summands_independent: bool,
    /// `T^p(V) = W ⊕ Im beta`.
    pub direct_sum: bool,
    pub pass: bool,
}

/// Runs every check over `F_p`; `p` must be one of the supported primes.
pub fn check_summand(p: u64, dim: usize) -> Result<SummandReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    match p {
        2 => check_summand_in::<Fp<2>>(2, dim),
        3 => check_summand_in::<Fp<3>>(3, dim),
        5 => check_summand_in::<Fp<5>>(5, dim),
        7 => check_summand_in::<Fp<7>>(7, dim),
        11 => check_summand_in::<Fp<11>>(11, dim),
        13 => check_summand_in::<Fp<13>>(13, dim),
        _ => Err(Error::UnsupportedPrime(p)),
    }
}

pub const SUPPORTED_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

pub fn check_summand_in<F: Field>(p: u64, dim: usize) -> Result<SummandReport> {
    let pu = p as usize;
    if dim == 0 || dim.checked_pow(p as u32).is_none_or(|d| d > MAX_TENSOR_DIM) {
        return Err(Error::InvalidAlphabet(format!(
            "dimension {dim} with p = {p} exceeds the supported size"
        )));
    }
    let alphabet = Alphabet::standard(dim);
    let coords = Coords::new(&alphabet, pu);
    let mut emb = Embedding::<F>::new();
    let (order, classes) = pbw_classes(pu, &alphabet);
    let m = order.len();

    let expansions: Vec<Vec<Vec<F>>> = classes
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|e| coords.tensor(&e.expand(&mut emb)))
                .collect()
        })
        .collect();
    let all: Vec<Vec<F>> = expansions.iter().flatten().cloned().collect();
    let pbw_is_basis = all.len() == coords.tensor_dim() && rank(&all) == all.len();

    // X_i spanned by C_i, ..., C_m; tails[i] = X_(i+1) (1-based i)
    let tails: Vec<Vec<Vec<F>>> = (0..=m)
        .map(|i| echelon_basis(&expansions[i.min(m)..].concat()))
        .collect();

    let interior = |i: usize| i >= 2 && i < m;
    let interior_types_below_p = (2..m).all(|i| order.get(i).unwrap().iter().all(|&k| k < pu));

    let mut types = Vec::new();
    let mut sigma_rows = Vec::new();
    let mut sigma_congruence = true;
    let mut sigma_injective = true;
    let mut permutation_stability = true;
    for i in 1..=m {
        let class = &classes[i - 1];
        let mut sigma_rank = None;
        if interior(i) {
            let mut rows = Vec::new();
            for (e, c) in class.iter().zip(&expansions[i - 1]) {
                let s = coords.tensor(&sigma_map(&order, i, e, &mut emb)?);
                let diff: Vec<F> = s
                    .iter()
                    .zip(c)
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect();
                sigma_congruence &= in_span(&tails[i - 1], &s) && in_span(&tails[i], &diff);
                rows.push(s);
            }
            let r = rank(&rows);
            sigma_injective &= r == class.len();
            sigma_rank = Some(r);
            sigma_rows.extend(rows);
        }
        for (e, c) in class.iter().zip(&expansions[i - 1]) {
            for perm in e
                .factors
                .iter()
                .cloned()
                .permutations(e.factors.len())
                .unique()
            {
                let t = coords.tensor(&product(&mut emb, &perm));
                let diff: Vec<F> = t
                    .iter()
                    .zip(c)
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect();
                permutation_stability &= in_span(&tails[i], &diff);
            }
        }
        types.push(TypeSummary {
            kind: order.get(i).unwrap().to_vec(),
            size: class.len(),
            sigma_rank,
        });
    }

    let bp: Vec<Vec<F>> = bp_space::<F>(pu, &alphabet)?
        .iter()
        .map(|e| coords.tensor(&emb.embed(e)))
        .collect();
    let w_rows: Vec<Vec<F>> = sigma_rows.iter().chain(&bp).cloned().collect();
    let w_dim = rank(&w_rows);
    let summands_independent = w_dim == sigma_rows.len() + bp.len();

    let alpha_rows: Vec<Vec<F>> = (0..coords.tensor_dim())
        .map(|i| {
            let mut w = Vec::with_capacity(pu);
            let mut x = i;
            for _ in 0..pu {
                w.push(Letter((x % dim) as u32));
                x /= dim;
            }
            w.reverse();
            coords.mixed(&alpha_map(&TensorElement::<F>::word(&w)))
        })
        .collect();
    let ker_alpha_dim = coords.tensor_dim() - rank(&alpha_rows);
    let w_in_ker_alpha = w_rows.iter().all(|v| {
        let t: TensorElement<F> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (word_of(i, dim, pu), c.clone()))
            .collect();
        alpha_map(&t).is_zero()
    });
    let w_equals_ker_alpha = w_in_ker_alpha && w_dim == ker_alpha_dim;

    let mut alpha_beta_identity = true;
    let mut beta_rows = Vec::new();
    for key in coords.mixed.keys().sorted() {
        let z = MixedElement::<F>::monomial(key.clone());
        let b = beta_map(&z)?;
        alpha_beta_identity &= alpha_map(&b) == z;
        beta_rows.push(coords.tensor(&b));
    }
    let im_beta_dim = rank(&beta_rows);
    let combined: Vec<Vec<F>> = w_rows.iter().chain(&beta_rows).cloned().collect();
    let direct_sum =
        w_dim + im_beta_dim == coords.tensor_dim() && rank(&combined) == coords.tensor_dim();

    let pass = pbw_is_basis
        && alpha_beta_identity
        && interior_types_below_p
        && sigma_congruence
        && sigma_injective
        && permutation_stability
        && w_equals_ker_alpha
        && summands_independent
        && direct_sum;
    Ok(SummandReport {
        prime: p,
        dim,
        tensor_dim: coords.tensor_dim(),
        types,
        pbw_is_basis,
        bp_dim: bp.len(),
        w_dim,
        ker_alpha_dim,
        im_beta_dim,
        alpha_beta_identity,
        interior_types_below_p,
        sigma_congruence,
        sigma_injective,
        permutation_stability,
        w_in_ker_alpha,
        w_equals_ker_alpha,
        summands_independent,
        direct_sum,
        pass,
    })
}

fn word_of(mut i: usize, n: usize, p: usize) -> crate::powers::TensorWord {
    let mut w = vec![Letter(0); p];
    for slot in w.iter_mut().rev() {
        *slot = Letter((i % n) as u32);
        i /= n;
    }
    crate::powers::TensorWord(w)
}

/// Lyndon words of `L^p(V)`, exposed for dimension counts.
pub fn lie_power_words(p: usize, dim: usize) -> Vec<LyndonWord> {
    lyndon_words_with(&Alphabet::standard(dim), p, p as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_two_is_trivial() {
        let r = check_summand(2, 2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!((r.w_dim, r.ker_alpha_dim, r.im_beta_dim), (0, 0, 4));
    }

    #[test]
    fn prime_three_rank_two() {
        let r = check_summand(3, 2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(
            (r.tensor_dim, r.im_beta_dim, r.w_dim, r.bp_dim),
            (8, 6, 2, 0)
        );
    }

    #[test]
    fn bp_vanishes_below_four() {
        assert!(bp_space::<Fp<2>>(2, &Alphabet::standard(3))
            .unwrap()
            .is_empty());
        assert!(bp_space::<Fp<3>>(3, &Alphabet::standard(3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn errors() {
        assert_eq!(check_summand(4, 2), Err(Error::NotPrime(4)));
        assert_eq!(check_summand(17, 1), Err(Error::UnsupportedPrime(17)));
        assert!(check_summand(5, 9).is_err());
    }
}
