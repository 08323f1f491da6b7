//! The graded basis `u(s,t)` of `A = L'/L''` for the free Lie ring on
//! `x < y`, and its action by the polynomial ring on `x`, `y`.

use num_bigint::BigInt;

use crate::lie::{Alphabet, Generator, Letter};
use crate::powers::{ActionSpec, Linear};

/// `u(s,t) = [y, x, x^s, y^t]`, of bidegree `(s+1, t+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AGenerator {
    pub s: u32,
    pub t: u32,
}

impl AGenerator {
    pub fn new(s: u32, t: u32) -> Self {
        AGenerator { s, t }
    }

    pub fn degree(self) -> u32 {
        self.s + self.t + 2
    }

    pub fn bidegree(self) -> (u32, u32) {
        (self.s + 1, self.t + 1)
    }

    pub fn times_x(self) -> Self {
        AGenerator::new(self.s + 1, self.t)
    }

    pub fn times_y(self) -> Self {
        AGenerator::new(self.s, self.t + 1)
    }

    /// Position in the order by `(degree, s)`; independent of any cap.
    pub fn letter(self) -> Letter {
        let n = self.degree();
        Letter((n - 2) * (n - 1) / 2 + self.s)
    }

    pub fn from_letter(l: Letter) -> Self {
        let mut n = 2;
        while (n - 1) * n / 2 <= l.0 {
            n += 1;
        }
        let s = l.0 - (n - 2) * (n - 1) / 2;
        AGenerator::new(s, n - 2 - s)
    }

    pub fn name(self) -> String {
        format!("u({},{})", self.s, self.t)
    }
}

/// All `u(s,t)` with `s + t + 2 <= max_degree`, ordered by `(degree, s)`.
pub fn a_generators(max_degree: u32) -> Vec<AGenerator> {
    (2..=max_degree)
        .flat_map(|n| (0..=n - 2).map(move |s| AGenerator::new(s, n - 2 - s)))
        .collect()
}

/// Alphabet on [`a_generators`], graded by bidegree.
pub fn a_alphabet(max_degree: u32) -> Alphabet {
    let gens = a_generators(max_degree.max(2))
        .into_iter()
        .map(|g| {
            let (a, b) = g.bidegree();
            Generator::new(g.name(), vec![a, b]).expect("bidegree is positive")
        })
        .collect();
    Alphabet::new(gens).expect("names are distinct")
}

/// `u·x = u(s+1,t)`, `u·y = u(s,t+1)`, zero once the degree leaves the
/// alphabet.
pub fn a_action(max_degree: u32) -> ActionSpec<BigInt> {
    let count = a_generators(max_degree.max(2)).len();
    ActionSpec::from_fn(count, &["x", "y"], |l, var| {
        let g = AGenerator::from_letter(l);
        let image = if var == 0 { g.times_x() } else { g.times_y() };
        if image.degree() <= max_degree {
            Linear::monomial(image.letter())
        } else {
            Linear::zero()
        }
    })
}

/// Bidegree of a word over the `A` alphabet.
pub fn word_bidegree(word: &[Letter]) -> (u32, u32) {
    word.iter().fold((0, 0), |(a, b), &l| {
        let (da, db) = AGenerator::from_letter(l).bidegree();
        (a + da, b + db)
    })
}
