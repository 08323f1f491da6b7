//! Bracket trees, their normal form in the Lyndon basis, and left-normed
//! expansion.

use num_bigint::BigInt;

use super::alphabet::{Alphabet, Letter};
use super::element::{format_terms, BracketCache, LieElement};
use super::lyndon::LyndonWord;
use crate::coeff::Coefficient;
use crate::combination::Combination;
use crate::error::{Error, Result};

/// Unevaluated Lie expression over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LieTree {
    Gen(Letter),
    Bracket(Box<LieTree>, Box<LieTree>),
    Scaled(BigInt, Box<LieTree>),
}

impl LieTree {
    pub fn bracket(a: LieTree, b: LieTree) -> Self {
        LieTree::Bracket(Box::new(a), Box::new(b))
    }

    pub fn scaled(n: impl Into<BigInt>, t: LieTree) -> Self {
        LieTree::Scaled(n.into(), Box::new(t))
    }

    /// `[a_1, ..., a_c]` as a left-normed tree.
    pub fn left_normed(letters: &[Letter]) -> Self {
        let mut iter = letters.iter();
        let mut acc = LieTree::Gen(*iter.next().expect("nonempty left-normed product"));
        for &l in iter {
            acc = LieTree::bracket(acc, LieTree::Gen(l));
        }
        acc
    }

    /// Standard bracketing of a Lyndon word.
    pub fn from_lyndon(w: &LyndonWord) -> Self {
        match w.standard_factorization() {
            Err(_) => LieTree::Gen(w.letters()[0]),
            Ok((u, v)) => LieTree::bracket(Self::from_lyndon(&u), Self::from_lyndon(&v)),
        }
    }

    /// Number of generator occurrences. Trees are always homogeneous.
    pub fn degree(&self) -> usize {
        match self {
            LieTree::Gen(_) => 1,
            LieTree::Bracket(a, b) => a.degree() + b.degree(),
            LieTree::Scaled(_, t) => t.degree(),
        }
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<Letter>) {
        match self {
            LieTree::Gen(l) => out.push(*l),
            LieTree::Bracket(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
            LieTree::Scaled(_, t) => t.collect_letters(out),
        }
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        self.letters()
            .into_iter()
            .try_for_each(|l| alphabet.check(l))
    }
}

/// Lyndon coordinates of a bracket tree.
pub fn normal_form<R: Coefficient>(alphabet: &Alphabet, tree: &LieTree) -> Result<LieElement<R>> {
    tree.check_alphabet(alphabet)?;
    let mut cache = BracketCache::new();
    Ok(normal_form_with(&mut cache, tree))
}

pub fn normal_form_with<R: Coefficient>(
    cache: &mut BracketCache<R>,
    tree: &LieTree,
) -> LieElement<R> {
    match tree {
        LieTree::Gen(l) => LieElement::generator(*l),
        LieTree::Scaled(n, t) => normal_form_with(cache, t).scale(&R::from_bigint(n)),
        LieTree::Bracket(a, b) => {
            let a = normal_form_with(cache, a);
            if a.is_zero() {
                return a;
            }
            let b = normal_form_with(cache, b);
            cache.bracket(&a, &b)
        }
    }
}

/// Combination of left-normed monomials `[a_1, a_2, ..., a_c]`, keyed by
/// the letter sequence.
pub type LeftNormed<R> = Combination<Vec<Letter>, R>;

impl<R: Coefficient> Combination<Vec<Letter>, R> {
    pub fn format_left_normed(&self, alphabet: &Alphabet) -> String {
        format_terms(self.iter().map(|(w, c)| {
            let names: Vec<&str> = w.iter().map(|&l| alphabet.name(l)).collect();
            let body = if names.len() == 1 {
                names[0].to_string()
            } else {
                format!("[{}]", names.join(","))
            };
            (body, c)
        }))
    }
}

/// Rewrites a tree as left-normed monomials using
/// `[P,[Q1,Q2]] = [[P,Q1],Q2] - [[P,Q2],Q1]`. Monomials `[a,a,...]` and
/// brackets of a subtree with itself are dropped.
pub fn left_normalize<R: Coefficient>(tree: &LieTree) -> LeftNormed<R> {
    match tree {
        LieTree::Gen(l) => LeftNormed::monomial(vec![*l]),
        LieTree::Scaled(n, t) => left_normalize::<R>(t).scale(&R::from_bigint(n)),
        LieTree::Bracket(a, b) => {
            if a == b {
                return LeftNormed::zero();
            }
            right_multiply(left_normalize(a), b)
        }
    }
}

fn right_multiply<R: Coefficient>(acc: LeftNormed<R>, tree: &LieTree) -> LeftNormed<R> {
    if acc.is_zero() {
        return acc;
    }
    match tree {
        LieTree::Gen(l) => acc.map_linear(|w| {
            if w.len() == 1 && w[0] == *l {
                return LeftNormed::zero();
            }
            let mut w = w.clone();
            w.push(*l);
            LeftNormed::monomial(w)
        }),
        LieTree::Scaled(n, t) => right_multiply(acc, t).scale(&R::from_bigint(n)),
        LieTree::Bracket(q1, q2) => {
            if q1 == q2 {
                return LeftNormed::zero();
            }
            let first = right_multiply(right_multiply(acc.clone(), q1), q2);
            let second = right_multiply(right_multiply(acc, q2), q1);
            first - second
        }
    }
}

/// Left-normed expansion of a Lie element given in Lyndon coordinates.
pub fn left_normalize_element<R: Coefficient>(e: &LieElement<R>) -> Result<LeftNormed<R>> {
    e.degree()?;
    let mut out = LeftNormed::zero();
    for (w, c) in e.iter() {
        out.add_scaled(&left_normalize(&LieTree::from_lyndon(w)), c);
    }
    Ok(out)
}

/// Evaluates a combination of left-normed monomials back in Lyndon coordinates.
pub fn evaluate_left_normed<R: Coefficient>(
    cache: &mut BracketCache<R>,
    ln: &LeftNormed<R>,
) -> LieElement<R> {
    let mut out = LieElement::zero();
    for (w, c) in ln.iter() {
        let term = super::element::left_normed_product(cache, w);
        out.add_scaled(&term, c);
    }
    out
}

pub fn check_homogeneous(lengths: impl IntoIterator<Item = usize>) -> Result<Option<usize>> {
    let mut it = lengths.into_iter();
    let Some(first) = it.next() else {
        return Ok(None);
    };
    for l in it {
        if l != first {
            return Err(Error::Inhomogeneous(first, l));
        }
    }
    Ok(Some(first))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(c: char) -> LieTree {
        LieTree::Gen(Letter((c as u8 - b'a') as u32))
    }

    fn seq(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| Letter((b - b'a') as u32)).collect()
    }

    fn br(a: LieTree, b: LieTree) -> LieTree {
        LieTree::bracket(a, b)
    }

    #[test]
    fn normal_form_examples() {
        let alpha = Alphabet::with_names(&["x", "y"]).unwrap();
        let x = LieTree::Gen(Letter(0));
        let y = LieTree::Gen(Letter(1));
        let xy = LyndonWord::new(vec![Letter(0), Letter(1)]).unwrap();
        let xyy = LyndonWord::new(vec![Letter(0), Letter(1), Letter(1)]).unwrap();
        let e: LieElement<BigInt> = normal_form(&alpha, &br(y.clone(), x.clone())).unwrap();
        assert_eq!(e, -LieElement::monomial(xy));
        let e: LieElement<BigInt> = normal_form(&alpha, &br(x.clone(), x.clone())).unwrap();
        assert!(e.is_zero());
        let e: LieElement<BigInt> =
            normal_form(&alpha, &br(br(y.clone(), x.clone()), y.clone())).unwrap();
        assert_eq!(e, -LieElement::monomial(xyy));
        let stray = br(x, LieTree::Gen(Letter(5)));
        assert!(normal_form::<BigInt>(&alpha, &stray).is_err());
    }

    #[test]
    fn left_normalize_examples() {
        // [x,[x,y]] -> -[x,y,x]
        let t = br(g('a'), br(g('a'), g('b')));
        let ln: LeftNormed<BigInt> = left_normalize(&t);
        assert_eq!(ln, LeftNormed::term(seq("aba"), BigInt::from(-1)));
        let xy = br(g('a'), g('b'));
        assert!(left_normalize::<BigInt>(&br(xy.clone(), xy)).is_zero());
        let t = br(br(g('a'), g('b')), br(g('c'), g('d')));
        let expected: LeftNormed<BigInt> =
            LeftNormed::monomial(seq("abcd")) - LeftNormed::monomial(seq("abdc"));
        assert_eq!(left_normalize(&t), expected);
    }

    #[test]
    fn left_normalize_is_identity_on_left_normed_trees() {
        for s in ["ab", "bac", "abca", "cabd"] {
            let t = LieTree::left_normed(&seq(s));
            assert_eq!(left_normalize::<BigInt>(&t), LeftNormed::monomial(seq(s)));
        }
    }

    #[test]
    fn left_normalize_preserves_value() {
        let alpha = Alphabet::with_names(&["a", "b", "c", "d"]).unwrap();
        let trees = [
            br(g('a'), br(g('b'), br(g('c'), g('d')))),
            br(br(g('a'), g('c')), br(g('b'), br(g('a'), g('d')))),
            LieTree::scaled(3, br(g('d'), br(g('a'), g('b')))),
        ];
        for t in trees {
            let direct: LieElement<BigInt> = normal_form(&alpha, &t).unwrap();
            let ln = left_normalize::<BigInt>(&t);
            let mut cache = BracketCache::new();
            assert_eq!(evaluate_left_normed(&mut cache, &ln), direct);
        }
    }
}
