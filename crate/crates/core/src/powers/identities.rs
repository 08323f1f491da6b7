//! Seeded randomized checks of the identities linking the power maps.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::action::{ActionSpec, Derive, Linear};
use super::metabelian::{
    divide_exactly, eta, lambda, mu, normal_words, theta_numerator, theta_numerator_with,
    MetabelianElement,
};
use super::symmetric::kappa;
use super::tensor::{expand_tree, nu, rho_with, Embedding};
use crate::coeff::factorial;
use crate::error::{Error, Result};
use crate::lie::{
    left_normalize_element, lyndon_words_with, normal_form_with, Alphabet, BracketCache, Letter,
    LieElement, LieTree, LyndonWord,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `rho(nu(e)) = c e`
    Wever,
    /// `mu(lambda(mu(m))) = c mu(m)`
    MuLambda,
    /// `eta(theta(m)) = (c-2)! m`
    EtaTheta,
    Antisymmetry,
    Jacobi,
    /// `nu(normal_form(t))` equals the direct tensor expansion of `t`
    Embedding,
    /// derivations commute with every map
    Equivariance,
    /// the theta formula on an arbitrary left-normed monomial agrees with
    /// theta of its class
    ThetaWellDefined,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Wever,
        Identity::MuLambda,
        Identity::EtaTheta,
        Identity::Antisymmetry,
        Identity::Jacobi,
        Identity::Embedding,
        Identity::Equivariance,
        Identity::ThetaWellDefined,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Wever => "wever",
            Identity::MuLambda => "mu-lambda",
            Identity::EtaTheta => "eta-theta",
            Identity::Antisymmetry => "antisymmetry",
            Identity::Jacobi => "jacobi",
            Identity::Embedding => "embedding",
            Identity::Equivariance => "equivariance",
            Identity::ThetaWellDefined => "theta-well-defined",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("unknown identity `{s}`"),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub identity: Identity,
    pub c: usize,
    pub rank: usize,
    pub trials: usize,
    pub seed: u64,
    pub degree_cut: u32,
    /// trials that had a nonzero input to test
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    /// theta numerators that were not divisible by `c`
    pub integrality_violations: usize,
    pub pass: bool,
}

/// Alphabet of the given rank with weights 1, 2, 3.
pub fn test_alphabet(rank: usize) -> Result<Alphabet> {
    if rank == 0 || rank > 3 {
        return Err(Error::InvalidAlphabet(format!("rank {rank} outside 1..=3")));
    }
    Alphabet::weighted(rank, &[1, 2, 3][..rank])
}

/// Lyndon words of length `c` and weight at most `cut`.
fn lyndon_pool(alphabet: &Alphabet, c: usize, cut: u32) -> Vec<LyndonWord> {
    (c as u32..=cut)
        .flat_map(|w| lyndon_words_with(alphabet, c, w))
        .collect()
}

fn coefficient(rng: &mut ChaCha8Rng) -> BigInt {
    let v: i64 = rng.gen_range(1..=5);
    BigInt::from(if rng.gen_bool(0.5) { v } else { -v })
}

/// Random combination of up to three pool elements.
fn random_lie(rng: &mut ChaCha8Rng, pool: &[LyndonWord]) -> LieElement<BigInt> {
    let mut e = LieElement::zero();
    if pool.is_empty() {
        return e;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let w = pool.choose(rng).unwrap().clone();
        e.add_term(w, coefficient(rng));
    }
    e
}

fn random_metabelian(
    rng: &mut ChaCha8Rng,
    words: &[Vec<Letter>],
    c: usize,
) -> Result<MetabelianElement<BigInt>> {
    let mut m = MetabelianElement::zero(c);
    if words.is_empty() {
        return Ok(m);
    }
    for _ in 0..rng.gen_range(1..=3) {
        let w = words.choose(rng).unwrap();
        m = m + MetabelianElement::left_normed(w)?.scale(&coefficient(rng));
    }
    Ok(m)
}

/// Random bracket tree with `c` leaves of total weight at most `cut`.
fn random_tree(rng: &mut ChaCha8Rng, alphabet: &Alphabet, c: usize, cut: u32) -> Option<LieTree> {
    let pool = lyndon_pool(alphabet, c, cut);
    let mut letters = pool.choose(rng)?.letters().to_vec();
    letters.shuffle(rng);
    Some(build_tree(rng, &letters))
}

fn build_tree(rng: &mut ChaCha8Rng, letters: &[Letter]) -> LieTree {
    if letters.len() == 1 {
        return LieTree::Gen(letters[0]);
    }
    let k = rng.gen_range(1..letters.len());
    LieTree::bracket(
        build_tree(rng, &letters[..k]),
        build_tree(rng, &letters[k..]),
    )
}

fn random_action(rng: &mut ChaCha8Rng, alphabet: &Alphabet) -> ActionSpec<BigInt> {
    let n = alphabet.len();
    let images: Vec<Vec<Linear<BigInt>>> = (0..n)
        .map(|_| {
            (0..2)
                .map(|_| {
                    (0..n as u32)
                        .map(|j| (Letter(j), BigInt::from(rng.gen_range(-2i64..=2))))
                        .collect()
                })
                .collect()
        })
        .collect();
    ActionSpec::new(vec!["x".into(), "y".into()], images).expect("well-formed action")
}

struct Run {
    checked: usize,
    failures: usize,
    first_failure: Option<String>,
    integrality_violations: usize,
}

impl Run {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn audit_division(&mut self, numerator: &LieElement<BigInt>, c: usize) {
        if divide_exactly(numerator, c as u64).is_err() {
            self.integrality_violations += 1;
        }
    }
}

/// Runs `trials` seeded checks of `identity` in degree `c` over the
/// weighted alphabet of the given rank, restricted to weight `degree_cut`.
pub fn check_identity(
    identity: Identity,
    c: usize,
    rank: usize,
    trials: usize,
    seed: u64,
    degree_cut: u32,
) -> Result<IdentityReport> {
    if c < 2 {
        return Err(Error::DegreeTooSmall(c));
    }
    let alphabet = test_alphabet(rank)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cache = BracketCache::<BigInt>::new();
    let pool = lyndon_pool(&alphabet, c, degree_cut);
    let words = normal_words(&alphabet, c, |w| w <= degree_cut);
    let cfact = BigInt::from(c as u64);
    let mut run = Run {
        checked: 0,
        failures: 0,
        first_failure: None,
        integrality_violations: 0,
    };

    for _ in 0..trials {
        match identity {
            Identity::Wever => {
                let e = random_lie(&mut rng, &pool);
                if e.is_zero() {
                    continue;
                }
                let back = rho_with(&mut cache, &nu(&e, c)?, c)?;
                run.record(back == e.scale(&cfact), || e.format(&alphabet));
            }
            Identity::MuLambda => {
                let m = random_metabelian(&mut rng, &words, c)?;
                if m.is_zero() {
                    continue;
                }
                let back = lambda(m.mu_image(), c)?;
                run.record(back == m.scale(&cfact), || {
                    format!("{:?}", m.normal_coordinates())
                });
            }
            Identity::EtaTheta => {
                let m = random_metabelian(&mut rng, &words, c)?;
                if m.is_zero() {
                    continue;
                }
                // compared after multiplying through by c
                let numerator = theta_numerator_with(&mut cache, &m)?;
                let back = eta(&numerator, c)?;
                let k = factorial(c as u64 - 2) * &cfact;
                run.record(back == m.scale(&k), || {
                    format!("{:?}", m.normal_coordinates())
                });
                run.audit_division(&numerator, c);
            }
            Identity::Antisymmetry => {
                let a = random_lie(&mut rng, &lyndon_pool(&alphabet, c / 2 + c % 2, degree_cut));
                let b = random_lie(&mut rng, &lyndon_pool(&alphabet, c / 2, degree_cut));
                let ab = cache.bracket(&a, &b);
                let ba = cache.bracket(&b, &a);
                let aa = cache.bracket(&a, &a);
                run.record((ab + ba).is_zero() && aa.is_zero(), || {
                    format!("{} | {}", a.format(&alphabet), b.format(&alphabet))
                });
            }
            Identity::Jacobi => {
                let sizes = [c.div_ceil(3), c / 3 + usize::from(c % 3 == 2), c / 3];
                let parts: Vec<LieElement<BigInt>> = sizes
                    .iter()
                    .map(|&s| random_lie(&mut rng, &lyndon_pool(&alphabet, s.max(1), degree_cut)))
                    .collect();
                let (a, b, d) = (&parts[0], &parts[1], &parts[2]);
                let inner = cache.bracket(a, b);
                let t1 = cache.bracket(&inner, d);
                let inner = cache.bracket(b, d);
                let t2 = cache.bracket(&inner, a);
                let inner = cache.bracket(d, a);
                let t3 = cache.bracket(&inner, b);
                run.record((t1 + t2 + t3).is_zero(), || {
                    format!(
                        "{} | {} | {}",
                        a.format(&alphabet),
                        b.format(&alphabet),
                        d.format(&alphabet)
                    )
                });
            }
            Identity::Embedding => {
                let Some(tree) = random_tree(&mut rng, &alphabet, c, degree_cut) else {
                    continue;
                };
                let nf = normal_form_with(&mut cache, &tree);
                let lhs = Embedding::new().embed(&nf);
                run.record(lhs == expand_tree::<BigInt>(&tree), || format!("{tree:?}"));
            }
            Identity::Equivariance => {
                let spec = random_action(&mut rng, &alphabet);
                let var = rng.gen_range(0..2);
                let e = random_lie(&mut rng, &pool);
                let m = random_metabelian(&mut rng, &words, c)?;
                if e.is_zero() && m.is_zero() {
                    continue;
                }
                let ok = equivariance_holds(&mut cache, &spec, var, &e, &m, c)?;
                run.record(ok, || e.format(&alphabet));
            }
            Identity::ThetaWellDefined => {
                let Some(w) = pool.choose(&mut rng) else {
                    continue;
                };
                let mut seq = w.letters().to_vec();
                seq.shuffle(&mut rng);
                let direct = theta_numerator(&mut cache, &seq)?;
                let via_class =
                    theta_numerator_with(&mut cache, &MetabelianElement::left_normed(&seq)?)?;
                run.record(direct == via_class, || alphabet.format_word(&seq));
                run.audit_division(&direct, c);
            }
        }
    }

    Ok(IdentityReport {
        identity,
        c,
        rank,
        trials,
        seed,
        degree_cut,
        checked: run.checked,
        failures: run.failures,
        first_failure: run.first_failure,
        integrality_violations: run.integrality_violations,
        pass: run.failures == 0,
    })
}

fn equivariance_holds(
    cache: &mut BracketCache<BigInt>,
    spec: &ActionSpec<BigInt>,
    var: usize,
    e: &LieElement<BigInt>,
    m: &MetabelianElement<BigInt>,
    c: usize,
) -> Result<bool> {
    let de = e.derive(var, spec)?;
    let t = nu(e, c)?;
    let nu_ok = nu(&de, c)? == t.derive(var, spec)?;
    let rho_ok =
        rho_with(cache, &t.derive(var, spec)?, c)? == rho_with(cache, &t, c)?.derive(var, spec)?;
    let eta_ok = eta(&de, c)? == eta(e, c)?.derive(var, spec)?;
    let ln = left_normalize_element(e)?;
    let mu_ok = mu(&left_normalize_element(&de)?, c)? == mu(&ln, c)?.derive(var, spec)?;
    let mixed = m.mu_image();
    let kappa_ok = kappa(&mixed.derive(var, spec)?) == kappa(mixed).derive(var, spec)?;
    let lambda_ok = lambda(&mixed.derive(var, spec)?, c)? == lambda(mixed, c)?.derive(var, spec)?;
    let theta_ok = theta_numerator_with(cache, &m.derive(var, spec)?)?
        == theta_numerator_with(cache, m)?.derive(var, spec)?;
    Ok(nu_ok && rho_ok && eta_ok && mu_ok && kappa_ok && lambda_ok && theta_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_small() {
        for id in Identity::ALL {
            for c in 2..=4 {
                let r = check_identity(id, c, 2, 20, 7, 8).unwrap();
                assert!(r.pass, "{id} c={c}: {:?}", r.first_failure);
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("nope".parse::<Identity>().is_err());
    }

    #[test]
    fn reports_are_seed_deterministic() {
        let a = check_identity(Identity::Wever, 4, 3, 10, 42, 8).unwrap();
        let b = check_identity(Identity::Wever, 4, 3, 10, 42, 8).unwrap();
        assert_eq!(a, b);
        assert!(a.checked > 0);
    }
}
