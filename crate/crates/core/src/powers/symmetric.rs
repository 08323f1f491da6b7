//! Symmetric powers `A^c` and the mixed powers `A ⊗ A^(c-1)`.

use crate::coeff::Coefficient;
use crate::combination::Combination;
use crate::lie::{Alphabet, Letter};

/// A multiset of letters stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset(Vec<Letter>);

impl Multiset {
    pub fn new(mut letters: Vec<Letter>) -> Self {
        letters.sort_unstable();
        Multiset(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn with(&self, l: Letter) -> Multiset {
        let mut v = self.0.clone();
        let pos = v.partition_point(|&x| x <= l);
        v.insert(pos, l);
        Multiset(v)
    }

    /// Removes one occurrence of `l`.
    pub fn without(&self, l: Letter) -> Option<Multiset> {
        let pos = self.0.iter().position(|&x| x == l)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Multiset(v))
    }

    pub fn replace_at(&self, index: usize, l: Letter) -> Multiset {
        let mut v = self.0.clone();
        v[index] = l;
        Multiset::new(v)
    }

    fn format(&self, alphabet: &Alphabet) -> String {
        let names: Vec<&str> = self.0.iter().map(|&l| alphabet.name(l)).collect();
        names.join("∘")
    }
}

/// Element of the symmetric power.
pub type SymElement<R> = Combination<Multiset, R>;

/// Element of `A ⊗ A^(c-1)`, keyed by `(a_1, a_2 ∘ ... ∘ a_c)`.
pub type MixedElement<R> = Combination<(Letter, Multiset), R>;

pub fn format_sym<R: Coefficient>(e: &SymElement<R>, alphabet: &Alphabet) -> String {
    crate::lie::element::format_terms(e.iter().map(|(m, c)| (m.format(alphabet), c)))
}

pub fn format_mixed<R: Coefficient>(e: &MixedElement<R>, alphabet: &Alphabet) -> String {
    crate::lie::element::format_terms(
        e.iter()
            .map(|((a, m), c)| (format!("{}⊗({})", alphabet.name(*a), m.format(alphabet)), c)),
    )
}

/// The symmetrization `a_1 ⊗ (a_2 ∘ ... ∘ a_c) -> a_1 ∘ ... ∘ a_c`.
pub fn kappa<R: Coefficient>(t: &MixedElement<R>) -> SymElement<R> {
    t.map_linear(|(a, m)| SymElement::monomial(m.with(*a)))
}

/// All multisets of `size` letters whose alphabet weight passes `keep`.
pub fn multisets<F: Fn(u32) -> bool>(alphabet: &Alphabet, size: usize, keep: F) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec<F: Fn(u32) -> bool>(
        alphabet: &Alphabet,
        size: usize,
        start: u32,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Multiset>,
        keep: &F,
    ) {
        if cur.len() == size {
            if keep(alphabet.word_weight(cur)) {
                out.push(Multiset(cur.clone()));
            }
            return;
        }
        for i in start..alphabet.len() as u32 {
            cur.push(Letter(i));
            rec(alphabet, size, i, cur, out, keep);
            cur.pop();
        }
    }
    rec(alphabet, size, 0, &mut cur, &mut out, &keep);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn kappa_examples() {
        let a = Letter(0);
        let b = Letter(1);
        let t: MixedElement<BigInt> = MixedElement::monomial((a, Multiset::new(vec![b])));
        assert_eq!(kappa(&t), SymElement::monomial(Multiset::new(vec![a, b])));
        let t: MixedElement<BigInt> = MixedElement::monomial((a, Multiset::new(vec![b])))
            - MixedElement::monomial((b, Multiset::new(vec![a])));
        assert!(kappa(&t).is_zero());
        let t: MixedElement<BigInt> = MixedElement::monomial((a, Multiset::new(vec![a, a])));
        assert_eq!(
            kappa(&t),
            SymElement::monomial(Multiset::new(vec![a, a, a]))
        );
    }

    #[test]
    fn multiset_counts() {
        let alpha = Alphabet::standard(2);
        assert_eq!(multisets(&alpha, 3, |_| true).len(), 4);
        assert_eq!(multisets(&Alphabet::standard(3), 2, |_| true).len(), 6);
        let m = Multiset::new(vec![Letter(2), Letter(0)]);
        assert_eq!(
            m.with(Letter(1)).letters(),
            &[Letter(0), Letter(1), Letter(2)]
        );
        assert_eq!(m.without(Letter(2)).unwrap().letters(), &[Letter(0)]);
        assert!(m.without(Letter(1)).is_none());
    }
}
