//! Tensor powers `T^c(A)`, the embedding `nu` of the Lie power and the
//! left-normed projection `rho`.

use std::collections::HashMap;

use crate::coeff::Coefficient;
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::lie::{
    left_normed_product, Alphabet, BracketCache, Letter, LieElement, LieTree, LyndonWord,
};

/// A word `a_1 ⊗ ... ⊗ a_c` in the tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord(pub Vec<Letter>);

pub type TensorElement<R> = Combination<TensorWord, R>;

impl<R: Coefficient> Combination<TensorWord, R> {
    pub fn word(letters: &[Letter]) -> Self {
        Self::monomial(TensorWord(letters.to_vec()))
    }

    /// Concatenation product.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in self.iter() {
            for (v, b) in other.iter() {
                let mut w = u.0.clone();
                w.extend_from_slice(&v.0);
                out.add_term(TensorWord(w), a.clone() * b.clone());
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.product(other) - other.product(self)
    }

    pub fn degree(&self) -> Result<Option<usize>> {
        crate::lie::tree::check_homogeneous(self.keys().map(|w| w.0.len()))
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        crate::lie::element::format_terms(self.iter().map(|(w, c)| {
            let names: Vec<&str> = w.0.iter().map(|&l| alphabet.name(l)).collect();
            (names.join("⊗"), c)
        }))
    }
}

/// Tensor expansions of Lyndon monomials, memoized per word.
#[derive(Debug, Default)]
pub struct Embedding<R> {
    memo: HashMap<LyndonWord, TensorElement<R>>,
}

impl<R: Coefficient> Embedding<R> {
    pub fn new() -> Self {
        Embedding {
            memo: HashMap::new(),
        }
    }

    pub fn monomial(&mut self, w: &LyndonWord) -> TensorElement<R> {
        if let Some(t) = self.memo.get(w) {
            return t.clone();
        }
        let t = match w.standard_factorization() {
            Err(_) => TensorElement::word(w.letters()),
            Ok((u, v)) => {
                let tu = self.monomial(&u);
                let tv = self.monomial(&v);
                tu.commutator(&tv)
            }
        };
        self.memo.insert(w.clone(), t.clone());
        t
    }

    pub fn embed(&mut self, e: &LieElement<R>) -> TensorElement<R> {
        let mut out = TensorElement::zero();
        for (w, c) in e.iter() {
            let t = self.monomial(w);
            out.add_scaled(&t, c);
        }
        out
    }
}

/// The embedding `L^c(A) -> T^c(A)` of a homogeneous element of degree `c`.
pub fn nu<R: Coefficient>(e: &LieElement<R>, c: usize) -> Result<TensorElement<R>> {
    e.expect_degree(c)?;
    Ok(Embedding::new().embed(e))
}

/// The projection `a_1 ⊗ ... ⊗ a_c -> [a_1, ..., a_c]`.
pub fn rho<R: Coefficient>(t: &TensorElement<R>, c: usize) -> Result<LieElement<R>> {
    rho_with(&mut BracketCache::new(), t, c)
}

pub fn rho_with<R: Coefficient>(
    cache: &mut BracketCache<R>,
    t: &TensorElement<R>,
    c: usize,
) -> Result<LieElement<R>> {
    if let Some(d) = t.degree()? {
        if d != c {
            return Err(Error::Inhomogeneous(c, d));
        }
    }
    let mut out = LieElement::zero();
    for (w, coeff) in t.iter() {
        let term = left_normed_product(cache, &w.0);
        out.add_scaled(&term, coeff);
    }
    Ok(out)
}

/// Multilinear expansion of a bracket tree in the tensor ring, computed
/// directly from the tree without passing through the Lyndon basis.
pub fn expand_tree<R: Coefficient>(tree: &LieTree) -> TensorElement<R> {
    match tree {
        LieTree::Gen(l) => TensorElement::word(&[*l]),
        LieTree::Scaled(n, t) => expand_tree::<R>(t).scale(&R::from_bigint(n)),
        LieTree::Bracket(a, b) => expand_tree::<R>(a).commutator(&expand_tree(b)),
    }
}
