//! Elements of the free Lie ring in Lyndon coordinates and their bracket.

use std::collections::HashMap;

use super::alphabet::{Alphabet, Letter};
use super::lyndon::LyndonWord;
use crate::coeff::Coefficient;
use crate::combination::Combination;
use crate::error::{Error, Result};

/// Combination of standard-bracketed Lyndon monomials.
pub type LieElement<R> = Combination<LyndonWord, R>;

impl<R: Coefficient> Combination<LyndonWord, R> {
    pub fn generator(letter: Letter) -> Self {
        Self::monomial(LyndonWord::letter(letter))
    }

    /// Common length of all monomials; `None` for zero.
    pub fn degree(&self) -> Result<Option<usize>> {
        let mut lengths = self.keys().map(LyndonWord::len);
        let Some(first) = lengths.next() else {
            return Ok(None);
        };
        for l in lengths {
            if l != first {
                return Err(Error::Inhomogeneous(first, l));
            }
        }
        Ok(Some(first))
    }

    /// Checks homogeneity of length `c`; zero is accepted as any degree.
    pub fn expect_degree(&self, c: usize) -> Result<()> {
        match self.degree()? {
            Some(d) if d != c => Err(Error::Inhomogeneous(c, d)),
            _ => Ok(()),
        }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        let mut terms: Vec<_> = self.iter().collect();
        terms.sort_by_key(|(w, _)| w.len());
        format_terms(
            terms
                .into_iter()
                .map(|(w, c)| (w.bracketing_string(alphabet), c)),
        )
    }
}

pub(crate) fn format_terms<'a, R: Coefficient + 'a>(
    terms: impl Iterator<Item = (String, &'a R)>,
) -> String {
    let mut out = String::new();
    for (body, c) in terms {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('*');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Memo table for brackets of basis monomials. Reuse one across many
/// brackets over the same alphabet; it is not shared between threads.
#[derive(Debug, Default)]
pub struct BracketCache<R> {
    table: HashMap<(LyndonWord, LyndonWord), LieElement<R>>,
}

impl<R: Coefficient> BracketCache<R> {
    pub fn new() -> Self {
        BracketCache {
            table: HashMap::new(),
        }
    }

    /// Bilinear bracket of two elements, returned in Lyndon coordinates.
    pub fn bracket(&mut self, a: &LieElement<R>, b: &LieElement<R>) -> LieElement<R> {
        let mut out = LieElement::zero();
        for (u, cu) in a.iter() {
            for (v, cv) in b.iter() {
                let coeff = cu.clone() * cv.clone();
                match u.cmp(v) {
                    std::cmp::Ordering::Equal => {}
                    std::cmp::Ordering::Less => {
                        let t = self.basis_bracket(u, v);
                        out.add_scaled(&t, &coeff);
                    }
                    std::cmp::Ordering::Greater => {
                        let t = self.basis_bracket(v, u);
                        out.add_scaled(&t, &(-coeff));
                    }
                }
            }
        }
        out
    }

    /// `[P(u), P(v)]` for Lyndon words `u < v`.
    fn basis_bracket(&mut self, u: &LyndonWord, v: &LyndonWord) -> LieElement<R> {
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.table.get(&key) {
            return hit.clone();
        }
        let result = match u.right_factor() {
            Some(right) if right < v.letters() => {
                // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
                let (u1, u2) = u.standard_factorization().expect("length >= 2");
                let p1 = LieElement::monomial(u1.clone());
                let p2 = LieElement::monomial(u2.clone());
                let u2v = self.basis_bracket(&u2, v);
                let u1v = self.basis_bracket(&u1, v);
                let first = self.bracket(&p1, &u2v);
                let second = self.bracket(&p2, &u1v);
                first - second
            }
            _ => LieElement::monomial(LyndonWord::join(u, v)),
        };
        self.table.insert(key, result.clone());
        result
    }
}

/// Bracket of two Lie elements followed by normalization.
pub fn bracket<R: Coefficient>(a: &LieElement<R>, b: &LieElement<R>) -> LieElement<R> {
    BracketCache::new().bracket(a, b)
}

/// The basis monomial indexed by `w`.
pub fn bracketing<R: Coefficient>(w: &LyndonWord) -> LieElement<R> {
    LieElement::monomial(w.clone())
}

/// Left-normed product `[a_1, a_2, ..., a_c]` in Lyndon coordinates.
pub fn left_normed_product<R: Coefficient>(
    cache: &mut BracketCache<R>,
    letters: &[Letter],
) -> LieElement<R> {
    let mut iter = letters.iter();
    let Some(&first) = iter.next() else {
        return LieElement::zero();
    };
    let mut acc = LieElement::generator(first);
    for &l in iter {
        acc = cache.bracket(&acc, &LieElement::generator(l));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lw(s: &str) -> LyndonWord {
        LyndonWord::new(s.bytes().map(|b| Letter((b - b'x') as u32)).collect()).unwrap()
    }

    fn gen(c: char) -> LieElement<BigInt> {
        LieElement::generator(Letter((c as u8 - b'x') as u32))
    }

    #[test]
    fn bracket_examples() {
        let x = gen('x');
        let y = gen('y');
        assert_eq!(bracket(&x, &y), LieElement::monomial(lw("xy")));
        assert_eq!(bracket(&y, &x), -LieElement::monomial(lw("xy")));
        let xy = bracket(&x, &y);
        assert!(bracket(&xy, &xy).is_zero());
        assert_eq!(bracket(&x, &xy), LieElement::monomial(lw("xxy")));
    }

    #[test]
    fn nonstandard_bracket_rewrites() {
        // [[x,y],y] = P(xyy) since (x, y) is not followed by a smaller suffix
        let x = gen('x');
        let y = gen('y');
        let xy = bracket(&x, &y);
        assert_eq!(bracket(&xy, &y), LieElement::monomial(lw("xyy")));
        // [[x,y],[x,y,y]]: xy < xyy is Lyndon with right factor y > xyy
        let xyy = bracket(&xy, &y);
        assert_eq!(bracket(&xy, &xyy), LieElement::monomial(lw("xyxyy")));
    }

    #[test]
    fn degree_checks() {
        let x = gen('x');
        let e = x.clone() + LieElement::monomial(lw("xy"));
        assert!(e.degree().is_err());
        assert_eq!(x.degree().unwrap(), Some(1));
        assert_eq!(LieElement::<BigInt>::zero().degree().unwrap(), None);
        assert!(LieElement::<BigInt>::zero().expect_degree(4).is_ok());
    }

    #[test]
    fn formatting() {
        let a = Alphabet::standard(2);
        let e: LieElement<BigInt> =
            LieElement::monomial(lw("xy")) - LieElement::term(lw("xxy"), BigInt::from(2));
        assert_eq!(e.format(&a), "[x,y] - 2*[x,[x,y]]");
    }
}
