//! Lyndon words and their standard factorizations.

use std::cmp::Ordering;
use std::fmt;

use super::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// True when `word` is nonempty and strictly smaller than each of its
/// proper rotations.
pub fn is_lyndon(word: &[Letter]) -> bool {
    let n = word.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|i| {
        let rotated = word[i..].iter().chain(&word[..i]);
        word.iter().cmp(rotated) == Ordering::Less
    })
}

/// Start of the longest proper Lyndon suffix of a word of length at least 2.
fn longest_lyndon_suffix(word: &[Letter]) -> usize {
    (1..word.len())
        .find(|&i| is_lyndon(&word[i..]))
        .expect("the last letter is always a Lyndon suffix")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LyndonWord {
    letters: Vec<Letter>,
    split: Option<usize>,
}

impl LyndonWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if !is_lyndon(&letters) {
            return Err(Error::NotLyndon(letters.iter().map(|l| l.0).collect()));
        }
        Ok(Self::new_unchecked(letters))
    }

    fn new_unchecked(letters: Vec<Letter>) -> Self {
        let split = (letters.len() >= 2).then(|| longest_lyndon_suffix(&letters));
        LyndonWord { letters, split }
    }

    pub fn letter(l: Letter) -> Self {
        LyndonWord {
            letters: vec![l],
            split: None,
        }
    }

    /// `uv` for Lyndon words `u < v` whose standard factorization is `(u, v)`.
    pub(crate) fn join(u: &LyndonWord, v: &LyndonWord) -> Self {
        let mut letters = u.letters.clone();
        letters.extend_from_slice(&v.letters);
        debug_assert!(is_lyndon(&letters));
        debug_assert_eq!(longest_lyndon_suffix(&letters), u.len());
        LyndonWord {
            letters,
            split: Some(u.len()),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn split(&self) -> Option<usize> {
        self.split
    }

    pub fn is_letter(&self) -> bool {
        self.letters.len() == 1
    }

    /// `(u, v)` with `self = uv` and `v` the longest proper Lyndon suffix.
    pub fn standard_factorization(&self) -> Result<(LyndonWord, LyndonWord)> {
        let k = self.split.ok_or(Error::NoFactorization(self.len()))?;
        Ok((
            Self::new_unchecked(self.letters[..k].to_vec()),
            Self::new_unchecked(self.letters[k..].to_vec()),
        ))
    }

    /// Suffix in the standard factorization, without allocating.
    pub fn right_factor(&self) -> Option<&[Letter]> {
        self.split.map(|k| &self.letters[k..])
    }

    pub fn weight(&self, alphabet: &Alphabet) -> u32 {
        alphabet.word_weight(&self.letters)
    }

    /// Nested bracket rendering of the standard bracketing, e.g. `[x,[x,y]]`.
    pub fn bracketing_string(&self, alphabet: &Alphabet) -> String {
        match self.standard_factorization() {
            Err(_) => alphabet.name(self.letters[0]).to_string(),
            Ok((u, v)) => format!(
                "[{},{}]",
                u.bracketing_string(alphabet),
                v.bracketing_string(alphabet)
            ),
        }
    }
}

impl PartialOrd for LyndonWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LyndonWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters.cmp(&other.letters)
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.0.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// Lyndon words of total weight at most `max_weight`, sorted by weight and
/// then lexicographically.
pub fn lyndon_words<F>(alphabet: &Alphabet, max_weight: u32, weight_of: F) -> Vec<LyndonWord>
where
    F: Fn(Letter) -> u32,
{
    let weights: Vec<u32> = alphabet.letters().map(&weight_of).collect();
    assert!(
        weights.iter().all(|&w| w > 0),
        "weights must be positive on every generator"
    );
    let mut out = Vec::new();
    let mut word = Vec::new();
    extend_words(&weights, max_weight, 0, &mut word, &mut |w| {
        if is_lyndon(w) {
            out.push(w.to_vec());
        }
    });
    let mut out: Vec<(u32, LyndonWord)> = out
        .into_iter()
        .map(|w| {
            let weight = w.iter().map(|l| weights[l.index()]).sum();
            (weight, LyndonWord::new_unchecked(w))
        })
        .collect();
    out.sort();
    out.into_iter().map(|(_, w)| w).collect()
}

/// Lyndon words of exactly `length` letters and alphabet weight `weight`,
/// in lexicographic order.
pub fn lyndon_words_with(alphabet: &Alphabet, length: usize, weight: u32) -> Vec<LyndonWord> {
    let weights: Vec<u32> = alphabet.letters().map(|l| alphabet.weight(l)).collect();
    let mut out = Vec::new();
    let mut word = Vec::new();
    fixed_length(&weights, length, weight, &mut word, &mut |w| {
        if is_lyndon(w) {
            out.push(LyndonWord::new_unchecked(w.to_vec()));
        }
    });
    out
}

fn extend_words(
    weights: &[u32],
    budget: u32,
    used: u32,
    word: &mut Vec<Letter>,
    visit: &mut dyn FnMut(&[Letter]),
) {
    for (i, &w) in weights.iter().enumerate() {
        let letter = Letter(i as u32);
        // a Lyndon word starts with its smallest letter
        if let Some(&first) = word.first() {
            if letter < first {
                continue;
            }
        }
        if used + w > budget {
            continue;
        }
        word.push(letter);
        visit(word);
        extend_words(weights, budget, used + w, word, visit);
        word.pop();
    }
}

fn fixed_length(
    weights: &[u32],
    length: usize,
    remaining: u32,
    word: &mut Vec<Letter>,
    visit: &mut dyn FnMut(&[Letter]),
) {
    if word.len() == length {
        if remaining == 0 {
            visit(word);
        }
        return;
    }
    let slots_after = (length - word.len() - 1) as u32;
    for (i, &w) in weights.iter().enumerate() {
        let letter = Letter(i as u32);
        if let Some(&first) = word.first() {
            if letter < first {
                continue;
            }
        }
        // every later letter weighs at least 1
        if w + slots_after > remaining {
            continue;
        }
        word.push(letter);
        fixed_length(weights, length, remaining - w, word, visit);
        word.pop();
    }
}

/// Number of Lyndon words of length `n` on `rank` letters,
/// `(1/n) sum_{d | n} mobius(d) rank^(n/d)`.
pub fn necklace_count(rank: u64, n: u32) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    if n == 0 {
        return BigInt::from(0);
    }
    let total: BigInt = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| BigInt::from(mobius(d)) * num_traits::Pow::pow(&BigInt::from(rank), n / d))
        .sum();
    total / BigInt::from(n)
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            n /= f;
            if n.is_multiple_of(f) {
                return 0;
            }
            result = -result;
        }
        f += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| Letter((b - b'x') as u32)).collect()
    }

    fn lw(s: &str) -> LyndonWord {
        LyndonWord::new(w(s)).unwrap()
    }

    /// Longest proper suffix that is smaller than all its rotations, by
    /// scanning every suffix independently of the production helper.
    fn brute_force_split(word: &[Letter]) -> usize {
        let mut best = word.len();
        for i in (1..word.len()).rev() {
            let s = &word[i..];
            let ok = (1..s.len()).all(|r| {
                let rot: Vec<Letter> = s[r..].iter().chain(&s[..r]).copied().collect();
                s < rot.as_slice()
            });
            if ok {
                best = i;
            }
        }
        best
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&w("x")));
        assert!(is_lyndon(&w("xy")));
        assert!(is_lyndon(&w("xxyxy")));
        assert!(!is_lyndon(&w("yx")));
        assert!(!is_lyndon(&w("xyxy")));
        assert!(!is_lyndon(&w("xx")));
        assert!(!is_lyndon(&[]));
    }

    #[test]
    fn factorization_examples() {
        let (u, v) = lw("xy").standard_factorization().unwrap();
        assert_eq!((u.letters(), v.letters()), (&w("x")[..], &w("y")[..]));
        let (u, v) = lw("xxy").standard_factorization().unwrap();
        assert_eq!((u.letters(), v.letters()), (&w("x")[..], &w("xy")[..]));
        let (u, v) = lw("xxyxy").standard_factorization().unwrap();
        assert_eq!((u.letters(), v.letters()), (&w("xxy")[..], &w("xy")[..]));
        assert_eq!(
            lw("x").standard_factorization(),
            Err(Error::NoFactorization(1))
        );
    }

    #[test]
    fn factorization_matches_brute_force() {
        let a = Alphabet::standard(3);
        for word in lyndon_words(&a, 7, |_| 1) {
            if word.len() < 2 {
                continue;
            }
            let (u, v) = word.standard_factorization().unwrap();
            assert_eq!(u.len(), brute_force_split(word.letters()));
            assert!(is_lyndon(u.letters()) && is_lyndon(v.letters()));
            assert!(u < v);
        }
    }

    #[test]
    fn enumeration_examples() {
        let a = Alphabet::standard(2);
        let words: Vec<Vec<Letter>> = lyndon_words(&a, 2, |_| 1)
            .into_iter()
            .map(|l| l.letters().to_vec())
            .collect();
        assert_eq!(words, vec![w("x"), w("y"), w("xy")]);
        let one = Alphabet::standard(1);
        assert_eq!(lyndon_words(&one, 5, |_| 1).len(), 1);
        assert!(lyndon_words(&a, 0, |_| 1).is_empty());
        assert!(lyndon_words(&Alphabet::standard(0), 4, |_| 1).is_empty());
        let five = lyndon_words(&a, 5, |_| 1)
            .into_iter()
            .filter(|l| l.len() == 5)
            .count();
        assert_eq!(five, 6);
    }

    #[test]
    fn weighted_enumeration_is_sorted_by_weight() {
        let a = Alphabet::weighted(2, &[1, 2]).unwrap();
        let words = lyndon_words(&a, 5, |l| a.weight(l));
        let weights: Vec<u32> = words.iter().map(|l| l.weight(&a)).collect();
        let mut sorted = weights.clone();
        sorted.sort();
        assert_eq!(weights, sorted);
        assert!(weights.iter().all(|&x| x <= 5));
        let fixed = lyndon_words_with(&a, 3, 5);
        let from_all: Vec<_> = words
            .into_iter()
            .filter(|l| l.len() == 3 && l.weight(&a) == 5)
            .collect();
        assert_eq!(fixed, from_all);
    }

    #[test]
    fn bracketing_strings() {
        let a = Alphabet::standard(2);
        assert_eq!(lw("xxy").bracketing_string(&a), "[x,[x,y]]");
        assert_eq!(lw("xxyxy").bracketing_string(&a), "[[x,[x,y]],[x,y]]");
    }
}
