//! Finitely supported linear combinations with no zero coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use crate::coeff::Coefficient;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord, R> {
    terms: BTreeMap<K, R>,
}

impl<K: Ord, R> Default for Combination<K, R> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, R: Coefficient> Combination<K, R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(key: K) -> Self {
        Self::term(key, R::one())
    }

    pub fn term(key: K, coefficient: R) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coefficient);
        c
    }

    pub fn add_term(&mut self, key: K, coefficient: R) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coefficient;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &R) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone() * factor.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &R)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coefficient(&self, key: &K) -> R {
        self.terms.get(key).cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, factor: &R) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<K2, F>(&self, mut f: F) -> Combination<K2, R>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> Combination<K2, R>,
    {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn map_coefficients<R2: Coefficient, F: Fn(&R) -> R2>(&self, f: F) -> Combination<K, R2> {
        let mut out = Combination::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, R> {
        self.terms
    }
}

impl<K: Ord + Clone, R: Coefficient> FromIterator<(K, R)> for Combination<K, R> {
    fn from_iter<I: IntoIterator<Item = (K, R)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (k, r) in iter {
            c.add_term(k, r);
        }
        c
    }
}

impl<K: Ord + Clone, R: Coefficient> Add for Combination<K, R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone, R: Coefficient> Sub for Combination<K, R> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl<K: Ord + Clone, R: Coefficient> Neg for Combination<K, R> {
    type Output = Self;
    fn neg(self) -> Self {
        Combination {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}
