//! Metabelian Lie powers `M^c(A)`, represented by their injective image in
//! `A ⊗ A^(c-1)` under `mu`, and the maps `mu`, `lambda`, `eta`, `theta`.

use std::sync::atomic::{AtomicU64, Ordering};

use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;

use super::symmetric::{multisets, MixedElement, Multiset};
use crate::coeff::{exact_div, Coefficient};
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::lie::{
    evaluate_left_normed, left_normalize_element, Alphabet, BracketCache, LeftNormed, Letter,
    LieElement,
};

/// Element of `M^c(A)` stored as its `mu`-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabelianElement<R: Coefficient> {
    mu_image: MixedElement<R>,
    degree: usize,
}

/// `[b_1, b_2, ..., b_c]` with `b_1 > b_2 <= b_3 <= ... <= b_c`.
pub fn is_normal_word(word: &[Letter]) -> bool {
    word.len() >= 2 && word[0] > word[1] && word[1..].windows(2).all(|w| w[0] <= w[1])
}

/// Normal words of length `c` whose weight passes `keep`, grouped by content.
pub fn normal_words<F: Fn(u32) -> bool>(
    alphabet: &Alphabet,
    c: usize,
    keep: F,
) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for m in multisets(alphabet, c, keep) {
        let low = m.letters()[0];
        for first in m.letters().iter().copied().dedup() {
            if first <= low {
                continue;
            }
            let rest = m.without(first).unwrap();
            let mut w = vec![first];
            w.extend_from_slice(rest.letters());
            out.push(w);
        }
    }
    out
}

/// The `mu` formula on one left-normed monomial:
/// `[a_1, ..., a_c] -> a_1 ⊗ (a_2 ∘ ... ∘ a_c) - a_2 ⊗ (a_1 ∘ a_3 ∘ ... ∘ a_c)`.
pub fn mu_monomial<R: Coefficient>(seq: &[Letter]) -> Result<MixedElement<R>> {
    if seq.len() < 2 {
        return Err(Error::DegreeTooSmall(seq.len()));
    }
    let rest = &seq[2..];
    let mut first_tail = vec![seq[1]];
    first_tail.extend_from_slice(rest);
    let mut second_tail = vec![seq[0]];
    second_tail.extend_from_slice(rest);
    let mut out = MixedElement::monomial((seq[0], Multiset::new(first_tail)));
    out.add_term((seq[1], Multiset::new(second_tail)), -R::one());
    Ok(out)
}

/// `mu` on a combination of left-normed monomials of degree `c`.
pub fn mu<R: Coefficient>(ln: &LeftNormed<R>, c: usize) -> Result<MixedElement<R>> {
    if c < 2 {
        return Err(Error::DegreeTooSmall(c));
    }
    let mut out = MixedElement::zero();
    for (seq, coeff) in ln.iter() {
        if seq.len() != c {
            return Err(Error::Inhomogeneous(c, seq.len()));
        }
        out.add_scaled(&mu_monomial(seq)?, coeff);
    }
    Ok(out)
}

/// `lambda`: `a_1 ⊗ (a_2 ∘ ... ∘ a_c) -> sum_j [a_1, a_j, a_2, ..., â_j, ..., a_c]`.
pub fn lambda<R: Coefficient>(t: &MixedElement<R>, c: usize) -> Result<MetabelianElement<R>> {
    if c < 2 {
        return Err(Error::DegreeTooSmall(c));
    }
    let mut out = MixedElement::zero();
    for ((a1, m), coeff) in t.iter() {
        if m.len() + 1 != c {
            return Err(Error::Inhomogeneous(c, m.len() + 1));
        }
        let letters = m.letters();
        for j in 0..letters.len() {
            let mut seq = vec![*a1, letters[j]];
            seq.extend(
                letters
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &l)| l),
            );
            out.add_scaled(&mu_monomial(&seq)?, coeff);
        }
    }
    Ok(MetabelianElement::from_mu_image(out, c))
}

/// The projection `L^c(A) -> M^c(A)`.
pub fn eta<R: Coefficient>(e: &LieElement<R>, c: usize) -> Result<MetabelianElement<R>> {
    if c < 2 {
        return Err(Error::DegreeTooSmall(c));
    }
    e.expect_degree(c)?;
    let ln = left_normalize_element(e)?;
    Ok(MetabelianElement::from_mu_image(mu(&ln, c)?, c))
}

impl<R: Coefficient> MetabelianElement<R> {
    pub fn zero(degree: usize) -> Self {
        MetabelianElement {
            mu_image: MixedElement::zero(),
            degree,
        }
    }

    pub(crate) fn from_mu_image(mu_image: MixedElement<R>, degree: usize) -> Self {
        MetabelianElement { mu_image, degree }
    }

    /// Validated construction from `mu`-coordinates.
    pub fn from_mu_coordinates(mu_image: MixedElement<R>, degree: usize) -> Result<Self> {
        let m = MetabelianElement { mu_image, degree };
        m.normal_coordinates()?;
        Ok(m)
    }

    /// Class of the left-normed monomial `[a_1, ..., a_c]`.
    pub fn left_normed(seq: &[Letter]) -> Result<Self> {
        Ok(MetabelianElement {
            mu_image: mu_monomial(seq)?,
            degree: seq.len(),
        })
    }

    pub fn from_normal_coordinates(coords: &LeftNormed<R>, degree: usize) -> Result<Self> {
        Ok(MetabelianElement {
            mu_image: mu(coords, degree)?,
            degree,
        })
    }

    pub fn mu_image(&self) -> &MixedElement<R> {
        &self.mu_image
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.mu_image.is_zero()
    }

    pub fn scale(&self, r: &R) -> Self {
        MetabelianElement {
            mu_image: self.mu_image.scale(r),
            degree: self.degree,
        }
    }

    /// Coordinates in the basis of normal words.
    ///
    /// The term `b_1 ⊗ (b_2 ∘ ... ∘ b_c)` of a normal word has first factor
    /// above the minimum of the multiset, and no other normal word
    /// produces such a term, so coordinates are read off directly and then
    /// checked by re-applying `mu`.
    pub fn normal_coordinates(&self) -> Result<LeftNormed<R>> {
        let mut coords = LeftNormed::zero();
        for ((first, m), c) in self.mu_image.iter() {
            match m.min() {
                Some(low) if *first > low => {
                    let mut w = vec![*first];
                    w.extend_from_slice(m.letters());
                    coords.add_term(w, c.clone());
                }
                _ => {}
            }
        }
        if mu(&coords, self.degree.max(2))? != self.mu_image {
            return Err(Error::NotInMuImage);
        }
        Ok(coords)
    }
}

impl<R: Coefficient> std::ops::Add for MetabelianElement<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        MetabelianElement {
            mu_image: self.mu_image + rhs.mu_image,
            degree: self.degree,
        }
    }
}

impl<R: Coefficient> std::ops::Sub for MetabelianElement<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        MetabelianElement {
            mu_image: self.mu_image - rhs.mu_image,
            degree: self.degree,
        }
    }
}

static DIVISIONS: AtomicU64 = AtomicU64::new(0);
static VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Process-wide tally of exact divisions performed by [`divide_exactly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DivisionAudit {
    pub divisions: u64,
    pub violations: u64,
}

pub fn division_audit() -> DivisionAudit {
    DivisionAudit {
        divisions: DIVISIONS.load(Ordering::Relaxed),
        violations: VIOLATIONS.load(Ordering::Relaxed),
    }
}

/// Divides every coordinate by `divisor`, failing if one is not divisible.
pub fn divide_exactly(e: &LieElement<BigInt>, divisor: u64) -> Result<LieElement<BigInt>> {
    let d = BigInt::from(divisor);
    DIVISIONS.fetch_add(1, Ordering::Relaxed);
    let out: Result<LieElement<BigInt>> = e
        .iter()
        .map(|(w, c)| {
            exact_div(c, &d)
                .map(|q| (w.clone(), q))
                .ok_or_else(|| Error::IntegralityViolated {
                    coefficient: c.to_string(),
                    divisor,
                })
        })
        .collect();
    if out.is_err() {
        VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
    out
}

/// Double sum
/// `sum_sigma [a_1, a_sigma(2), ..., a_sigma(c)] - sum_tau [a_2, a_tau(1), a_tau(3), ..., a_tau(c)]`
/// before the division by `c`.
pub fn theta_numerator(
    cache: &mut BracketCache<BigInt>,
    seq: &[Letter],
) -> Result<LieElement<BigInt>> {
    let c = seq.len();
    if c < 2 {
        return Err(Error::DegreeTooSmall(c));
    }
    let mut terms = LeftNormed::zero();
    let others_of_first: Vec<Letter> = seq[1..].to_vec();
    let mut others_of_second = vec![seq[0]];
    others_of_second.extend_from_slice(&seq[2..]);
    for perm in (0..c - 1).permutations(c - 1) {
        let mut w = vec![seq[0]];
        w.extend(perm.iter().map(|&i| others_of_first[i]));
        terms.add_term(w, BigInt::from(1));
        let mut w = vec![seq[1]];
        w.extend(perm.iter().map(|&i| others_of_second[i]));
        terms.add_term(w, BigInt::from(-1));
    }
    Ok(evaluate_left_normed(cache, &terms))
}

/// `theta_c` on the left-normed monomial `[a_1, ..., a_c]`.
pub fn theta_monomial(
    cache: &mut BracketCache<BigInt>,
    seq: &[Letter],
) -> Result<LieElement<BigInt>> {
    let numerator = theta_numerator(cache, seq)?;
    divide_exactly(&numerator, seq.len() as u64)
}

/// `theta_c : M^c(A) -> L^c(A)`, extended linearly from normal words.
pub fn theta(m: &MetabelianElement<BigInt>) -> Result<LieElement<BigInt>> {
    theta_with(&mut BracketCache::new(), m)
}

pub fn theta_with(
    cache: &mut BracketCache<BigInt>,
    m: &MetabelianElement<BigInt>,
) -> Result<LieElement<BigInt>> {
    let coords = m.normal_coordinates()?;
    let mut out = LieElement::zero();
    for (w, c) in coords.iter() {
        out.add_scaled(&theta_monomial(cache, w)?, c);
    }
    Ok(out)
}

/// `c * theta_c(m)` without the final division, so it exists for every `m`.
pub fn theta_numerator_with(
    cache: &mut BracketCache<BigInt>,
    m: &MetabelianElement<BigInt>,
) -> Result<LieElement<BigInt>> {
    let coords = m.normal_coordinates()?;
    let mut out = LieElement::zero();
    for (w, c) in coords.iter() {
        out.add_scaled(&theta_numerator(cache, w)?, c);
    }
    Ok(out)
}

/// Normal-word coordinates as a plain combination, useful for printing.
pub fn format_normal<R: Coefficient>(
    coords: &Combination<Vec<Letter>, R>,
    alphabet: &Alphabet,
) -> String {
    coords.format_left_normed(alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{normal_form, LieTree};
    use crate::powers::symmetric::kappa;

    const A: Letter = Letter(0);
    const B: Letter = Letter(1);
    const C: Letter = Letter(2);
    const D: Letter = Letter(3);

    fn ms(v: &[Letter]) -> Multiset {
        Multiset::new(v.to_vec())
    }

    fn mixed(terms: &[(Letter, &[Letter], i64)]) -> MixedElement<BigInt> {
        terms
            .iter()
            .map(|(a, m, c)| ((*a, ms(m)), BigInt::from(*c)))
            .collect()
    }

    #[test]
    fn mu_examples() {
        let m = mu_monomial::<BigInt>(&[A, B]).unwrap();
        assert_eq!(m, mixed(&[(A, &[B], 1), (B, &[A], -1)]));
        // [y,x,x] -> y⊗(x∘x) - x⊗(y∘x) with x = A, y = B
        let m = mu_monomial::<BigInt>(&[B, A, A]).unwrap();
        assert_eq!(m, mixed(&[(B, &[A, A], 1), (A, &[B, A], -1)]));
        let two = LeftNormed::term(vec![A, B], BigInt::from(2));
        assert_eq!(mu(&two, 2).unwrap(), mixed(&[(A, &[B], 2), (B, &[A], -2)]));
        assert_eq!(mu_monomial::<BigInt>(&[A]), Err(Error::DegreeTooSmall(1)));
        assert!(kappa(&mu_monomial::<BigInt>(&[A, B]).unwrap()).is_zero());
    }

    #[test]
    fn lambda_examples() {
        let l = lambda(&mixed(&[(A, &[B], 1)]), 2).unwrap();
        assert_eq!(l, MetabelianElement::left_normed(&[A, B]).unwrap());
        let l = lambda(&mixed(&[(A, &[B, C], 1)]), 3).unwrap();
        let expected = MetabelianElement::left_normed(&[A, B, C]).unwrap()
            + MetabelianElement::left_normed(&[A, C, B]).unwrap();
        assert_eq!(l, expected);
        let m = MetabelianElement::<BigInt>::left_normed(&[A, B]).unwrap();
        let back = lambda(m.mu_image(), 2).unwrap();
        assert_eq!(back, m.scale(&BigInt::from(2)));
    }

    #[test]
    fn eta_examples() {
        let alpha = Alphabet::with_names(&["a", "b", "c", "d"]).unwrap();
        let e: LieElement<BigInt> =
            normal_form(&alpha, &LieTree::bracket(LieTree::Gen(A), LieTree::Gen(B))).unwrap();
        assert_eq!(
            eta(&e, 2).unwrap().mu_image(),
            &mixed(&[(A, &[B], 1), (B, &[A], -1)])
        );
        let t = LieTree::bracket(
            LieTree::bracket(LieTree::Gen(A), LieTree::Gen(B)),
            LieTree::bracket(LieTree::Gen(C), LieTree::Gen(D)),
        );
        let e: LieElement<BigInt> = normal_form(&alpha, &t).unwrap();
        assert!(eta(&e, 4).unwrap().is_zero());
        // eta_3([[y,x],y]) = y⊗(x∘y) - x⊗(y∘y) over x = A < y = B
        let t = LieTree::bracket(
            LieTree::bracket(LieTree::Gen(B), LieTree::Gen(A)),
            LieTree::Gen(B),
        );
        let e: LieElement<BigInt> = normal_form(&alpha, &t).unwrap();
        assert_eq!(
            eta(&e, 3).unwrap().mu_image(),
            &mixed(&[(B, &[A, B], 1), (A, &[B, B], -1)])
        );
    }

    #[test]
    fn theta_examples() {
        let alpha = Alphabet::with_names(&["a", "b", "c"]).unwrap();
        let mut cache = BracketCache::new();
        let t2 = theta_monomial(&mut cache, &[B, A]).unwrap();
        let ba: LieElement<BigInt> = normal_form(&alpha, &LieTree::left_normed(&[B, A])).unwrap();
        assert_eq!(t2, ba);
        let t3 = theta_monomial(&mut cache, &[C, A, B]).unwrap();
        let cab: LieElement<BigInt> =
            normal_form(&alpha, &LieTree::left_normed(&[C, A, B])).unwrap();
        assert_eq!(t3, cab);
        let m = MetabelianElement::left_normed(&[C, A, B]).unwrap();
        assert_eq!(eta(&theta(&m).unwrap(), 3).unwrap(), m);
    }

    #[test]
    fn theta_four_is_not_integral_on_three_letters() {
        // with x = A, y = B, z = C: the numerator of [y,x,x,z] has a coefficient -2
        let mut cache = BracketCache::new();
        let err = theta_monomial(&mut cache, &[B, A, A, C]).unwrap_err();
        assert!(matches!(err, Error::IntegralityViolated { divisor: 4, .. }));
        // two letters stay integral
        assert!(theta_monomial(&mut cache, &[B, A, A, B]).is_ok());
        assert!(theta_monomial(&mut cache, &[B, A, B, B]).is_ok());
        let m = MetabelianElement::left_normed(&[B, A, A, C]).unwrap();
        let numerator = theta_numerator_with(&mut cache, &m).unwrap();
        assert_eq!(eta(&numerator, 4).unwrap(), m.scale(&BigInt::from(8)));
    }

    #[test]
    fn normal_word_enumeration() {
        let alpha = Alphabet::standard(2);
        assert_eq!(normal_words(&alpha, 3, |_| true).len(), 2);
        assert_eq!(normal_words(&alpha, 2, |_| true), vec![vec![B, A]]);
        for w in normal_words(&Alphabet::standard(3), 4, |_| true) {
            assert!(is_normal_word(&w));
        }
        assert_eq!(normal_words(&Alphabet::standard(2), 5, |_| true).len(), 4);
    }

    #[test]
    fn normal_coordinates_roundtrip() {
        let m = MetabelianElement::<BigInt>::left_normed(&[A, B, C]).unwrap();
        let coords = m.normal_coordinates().unwrap();
        assert_eq!(
            MetabelianElement::from_normal_coordinates(&coords, 3).unwrap(),
            m
        );
        let bogus = mixed(&[(A, &[B, C], 1)]);
        assert_eq!(
            MetabelianElement::from_mu_coordinates(bogus, 3),
            Err(Error::NotInMuImage)
        );
    }
}
