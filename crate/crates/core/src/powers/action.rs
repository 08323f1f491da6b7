//! Derivation action of a polynomial ring on generators, extended to every
//! power by the Leibniz rule.

use std::collections::HashMap;

use super::metabelian::MetabelianElement;
use super::symmetric::{MixedElement, Multiset, SymElement};
use super::tensor::{TensorElement, TensorWord};
use crate::coeff::Coefficient;
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::lie::{BracketCache, Letter, LieElement, LyndonWord};

/// Degree-one element: a combination of generators.
pub type Linear<R> = Combination<Letter, R>;

/// Action of each variable on each generator.
#[derive(Clone, Debug)]
pub struct ActionSpec<R: Coefficient> {
    variables: Vec<String>,
    /// `images[letter][variable]`
    images: Vec<Vec<Linear<R>>>,
}

impl<R: Coefficient> ActionSpec<R> {
    pub fn new(variables: Vec<String>, images: Vec<Vec<Linear<R>>>) -> Result<Self> {
        for row in &images {
            if row.len() != variables.len() {
                return Err(Error::UnknownVariable(row.len().min(variables.len())));
            }
        }
        Ok(ActionSpec { variables, images })
    }

    pub fn from_fn<F>(generators: usize, variables: &[&str], f: F) -> Self
    where
        F: Fn(Letter, usize) -> Linear<R>,
    {
        let images = (0..generators as u32)
            .map(|g| (0..variables.len()).map(|v| f(Letter(g), v)).collect())
            .collect();
        ActionSpec {
            variables: variables.iter().map(|s| s.to_string()).collect(),
            images,
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn act(&self, letter: Letter, var: usize) -> Result<&Linear<R>> {
        if var >= self.variables.len() {
            return Err(Error::UnknownVariable(var));
        }
        self.images
            .get(letter.index())
            .map(|row| &row[var])
            .ok_or(Error::UnknownLetter {
                letter: letter.0,
                size: self.images.len(),
            })
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var < self.variables.len() {
            Ok(())
        } else {
            Err(Error::UnknownVariable(var))
        }
    }
}

/// Types carrying the derivation action.
pub trait Derive<R: Coefficient>: Sized {
    fn derive(&self, var: usize, spec: &ActionSpec<R>) -> Result<Self>;
}

impl<R: Coefficient> Derive<R> for TensorElement<R> {
    fn derive(&self, var: usize, spec: &ActionSpec<R>) -> Result<Self> {
        spec.check_var(var)?;
        let mut out = TensorElement::zero();
        for (w, c) in self.iter() {
            for (i, &l) in w.0.iter().enumerate() {
                for (image, a) in spec.act(l, var)?.iter() {
                    let mut v = w.0.clone();
                    v[i] = *image;
                    out.add_term(TensorWord(v), c.clone() * a.clone());
                }
            }
        }
        Ok(out)
    }
}

fn derive_multiset<R: Coefficient>(
    m: &Multiset,
    var: usize,
    spec: &ActionSpec<R>,
) -> Result<Combination<Multiset, R>> {
    let mut out = Combination::zero();
    for (i, &l) in m.letters().iter().enumerate() {
        for (image, a) in spec.act(l, var)?.iter() {
            out.add_term(m.replace_at(i, *image), a.clone());
        }
    }
    Ok(out)
}

impl<R: Coefficient> Derive<R> for SymElement<R> {
    fn derive(&self, var: usize, spec: &ActionSpec<R>) -> Result<Self> {
        spec.check_var(var)?;
        let mut out = SymElement::zero();
        for (m, c) in self.iter() {
            out.add_scaled(&derive_multiset(m, var, spec)?, c);
        }
        Ok(out)
    }
}

impl<R: Coefficient> Derive<R> for MixedElement<R> {
    fn derive(&self, var: usize, spec: &ActionSpec<R>) -> Result<Self> {
        spec.check_var(var)?;
        let mut out = MixedElement::zero();
        for ((a, m), c) in self.iter() {
            for (image, r) in spec.act(*a, var)?.iter() {
                out.add_term((*image, m.clone()), c.clone() * r.clone());
            }
            for (m2, r) in derive_multiset(m, var, spec)?.iter() {
                out.add_term((*a, m2.clone()), c.clone() * r.clone());
            }
        }
        Ok(out)
    }
}

impl<R: Coefficient> Derive<R> for MetabelianElement<R> {
    fn derive(&self, var: usize, spec: &ActionSpec<R>) -> Result<Self> {
        // mu is a module map, so deriving the mu-image derives the class
        Ok(MetabelianElement::from_mu_image(
            self.mu_image().derive(var, spec)?,
            self.degree(),
        ))
    }
}

impl<R: Coefficient> Derive<R> for LieElement<R> {
    fn derive(&self, var: usize, spec: &ActionSpec<R>) -> Result<Self> {
        LieDeriver::new(spec).derive(self, var)
    }
}

/// Derivation of Lie elements with memoized monomial images; reuse one for
/// many elements over the same alphabet.
#[derive(Debug)]
pub struct LieDeriver<'a, R: Coefficient> {
    spec: &'a ActionSpec<R>,
    cache: BracketCache<R>,
    memo: HashMap<(LyndonWord, usize), LieElement<R>>,
}

impl<'a, R: Coefficient> LieDeriver<'a, R> {
    pub fn new(spec: &'a ActionSpec<R>) -> Self {
        LieDeriver {
            spec,
            cache: BracketCache::new(),
            memo: HashMap::new(),
        }
    }

    pub fn cache(&mut self) -> &mut BracketCache<R> {
        &mut self.cache
    }

    pub fn derive(&mut self, e: &LieElement<R>, var: usize) -> Result<LieElement<R>> {
        self.spec.check_var(var)?;
        let mut out = LieElement::zero();
        for (w, c) in e.iter() {
            let d = self.derive_word(w, var)?;
            out.add_scaled(&d, c);
        }
        Ok(out)
    }

    fn derive_word(&mut self, w: &LyndonWord, var: usize) -> Result<LieElement<R>> {
        let key = (w.clone(), var);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let result = match w.standard_factorization() {
            Err(_) => self
                .spec
                .act(w.letters()[0], var)?
                .map_linear(|l| LieElement::generator(*l)),
            Ok((u, v)) => {
                let pu = LieElement::monomial(u.clone());
                let pv = LieElement::monomial(v.clone());
                let du = self.derive_word(&u, var)?;
                let dv = self.derive_word(&v, var)?;
                self.cache.bracket(&du, &pv) + self.cache.bracket(&pu, &dv)
            }
        };
        self.memo.insert(key, result.clone());
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LyndonWord;
    use num_bigint::BigInt;

    /// A-generators u(0,0) < u(1,0) < u(2,0) on one variable x with
    /// u(s,0)·x = u(s+1,0), truncated at the top.
    fn shift_spec() -> ActionSpec<BigInt> {
        ActionSpec::from_fn(3, &["x"], |l, _| {
            if l.0 + 1 < 3 {
                Linear::monomial(Letter(l.0 + 1))
            } else {
                Linear::zero()
            }
        })
    }

    #[test]
    fn derive_generator_and_bracket() {
        let spec = shift_spec();
        let u0: LieElement<BigInt> = LieElement::generator(Letter(0));
        assert_eq!(
            u0.derive(0, &spec).unwrap(),
            LieElement::generator(Letter(1))
        );
        // [u0,u1]·x = [u1,u1] + [u0,u2] = [u0,u2]
        let w =
            LieElement::<BigInt>::monomial(LyndonWord::new(vec![Letter(0), Letter(1)]).unwrap());
        let expected =
            LieElement::<BigInt>::monomial(LyndonWord::new(vec![Letter(0), Letter(2)]).unwrap());
        assert_eq!(w.derive(0, &spec).unwrap(), expected);
        assert_eq!(u0.derive(1, &spec), Err(Error::UnknownVariable(1)));
    }

    #[test]
    fn derive_mixed_leibniz() {
        // (u⊗(u∘u))·y = u'⊗(u∘u) + 2 u⊗(u'∘u) with u' = u·y
        let spec: ActionSpec<BigInt> = ActionSpec::from_fn(2, &["y"], |l, _| {
            if l.0 == 0 {
                Linear::monomial(Letter(1))
            } else {
                Linear::zero()
            }
        });
        let u = Letter(0);
        let up = Letter(1);
        let t: MixedElement<BigInt> = MixedElement::monomial((u, Multiset::new(vec![u, u])));
        let expected: MixedElement<BigInt> = [
            ((up, Multiset::new(vec![u, u])), BigInt::from(1)),
            ((u, Multiset::new(vec![up, u])), BigInt::from(2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(t.derive(0, &spec).unwrap(), expected);
    }
}
