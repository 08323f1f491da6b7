use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator within its alphabet. The numeric order is the
/// alphabet's total order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    /// Degree in each ambient variable.
    pub multidegree: Vec<u32>,
}

impl Generator {
    pub fn new(name: impl Into<String>, multidegree: Vec<u32>) -> Result<Self> {
        let name = name.into();
        if !multidegree.iter().any(|&d| d > 0) {
            return Err(Error::InvalidAlphabet(format!(
                "generator {name} has no positive degree"
            )));
        }
        Ok(Generator { name, multidegree })
    }

    pub fn weight(&self) -> u32 {
        self.multidegree.iter().sum()
    }
}

/// Finite ordered set of generators. Construction order is the total order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    generators: Vec<Generator>,
}

impl Alphabet {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InvalidAlphabet(format!(
                    "duplicate generator {}",
                    g.name
                )));
            }
        }
        Ok(Alphabet { generators })
    }

    /// Unit-weight alphabet with the given names, ordered as listed.
    pub fn with_names(names: &[&str]) -> Result<Self> {
        Alphabet::new(
            names
                .iter()
                .map(|n| Generator::new(*n, vec![1]))
                .collect::<Result<_>>()?,
        )
    }

    /// Unit-weight alphabet `x < y < z` for rank up to 3, `g1 < g2 < ...` beyond.
    pub fn standard(rank: usize) -> Self {
        let names: Vec<String> = if rank <= 3 {
            ["x", "y", "z"][..rank]
                .iter()
                .map(|s| s.to_string())
                .collect()
        } else {
            (1..=rank).map(|i| format!("g{i}")).collect()
        };
        Alphabet::new(
            names
                .into_iter()
                .map(|n| Generator::new(n, vec![1]).unwrap())
                .collect(),
        )
        .unwrap()
    }

    /// Rank-`rank` alphabet whose `i`-th generator has weight `weights[i]`.
    pub fn weighted(rank: usize, weights: &[u32]) -> Result<Self> {
        let base = Alphabet::standard(rank);
        Alphabet::new(
            base.generators
                .into_iter()
                .zip(weights)
                .map(|(g, &w)| Generator::new(g.name, vec![w]))
                .collect::<Result<_>>()?,
        )
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.generators.len() as u32).map(Letter)
    }

    pub fn generator(&self, letter: Letter) -> &Generator {
        &self.generators[letter.index()]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.generators[letter.index()].name
    }

    pub fn weight(&self, letter: Letter) -> u32 {
        self.generators[letter.index()].weight()
    }

    pub fn word_weight(&self, word: &[Letter]) -> u32 {
        word.iter().map(|&l| self.weight(l)).sum()
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .map(|i| Letter(i as u32))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.generators.len()
    }

    pub fn check(&self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::UnknownLetter {
                letter: letter.0,
                size: self.len(),
            })
        }
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        word.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}
