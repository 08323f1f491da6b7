//! The same augmentation quotient on the metabelian power `M^p(A)`, and the
//! comparison through `theta_p`.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::agen::{a_action, AGenerator};
use super::component::{action_rows, component_alphabet, LieComponent};
use super::theorem::{check_basis, theorem_element_with, theorem_indices};
use crate::coeff::is_prime;
use crate::error::{Error, Result};
use crate::lie::{BracketCache, Letter};
use crate::powers::{normal_words, theta_with, Derive, MetabelianElement};
use crate::zlinalg::{IntMat, Presentation};

/// Normal-word basis of `M^p(A)_d`.
#[derive(Clone, Debug)]
pub struct MetabelianComponent {
    pub p: usize,
    pub d: u32,
    pub basis: Vec<Vec<Letter>>,
    index: HashMap<Vec<Letter>, usize>,
}

impl MetabelianComponent {
    pub fn new(p: usize, d: u32) -> Self {
        let basis = if p >= 2 && d >= 2 * p as u32 {
            normal_words(&component_alphabet(d), p, |w| w == d)
        } else {
            Vec::new()
        };
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        MetabelianComponent { p, d, basis, index }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, m: &MetabelianElement<BigInt>) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::from(0); self.rank()];
        for (w, c) in m.normal_coordinates()?.iter() {
            let i = *self.index.get(w).ok_or(Error::NotInMuImage)?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Rows `b·x`, `b·y` for `b` in the basis of `M^p(A)_(d-1)`.
    pub fn relations(&self) -> Result<IntMat> {
        let source = MetabelianComponent::new(self.p, self.d.saturating_sub(1));
        let spec = a_action(self.d);
        let mut rows = Vec::new();
        for w in &source.basis {
            let m = MetabelianElement::left_normed(w)?;
            for var in 0..2 {
                rows.push(self.coordinates(&m.derive(var, &spec)?)?);
            }
        }
        Ok(IntMat::from_rows(self.rank(), rows))
    }
}

/// Class of `[v_y, v_x, u, ..., u]` in `M^p(A)`.
pub fn metabelian_element(p: usize, s: u32, t: u32) -> Result<MetabelianElement<BigInt>> {
    let u = AGenerator::new(s, t);
    let mut w = vec![u.times_y().letter(), u.times_x().letter()];
    w.extend(std::iter::repeat_n(u.letter(), p.saturating_sub(2)));
    MetabelianElement::left_normed(&w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BasisFlags {
    pub all_order_p: bool,
    pub independent: bool,
    pub spanning: bool,
}

impl BasisFlags {
    fn from_tuple((all_order_p, independent, spanning): (bool, bool, bool)) -> Self {
        BasisFlags {
            all_order_p,
            independent,
            spanning,
        }
    }

    pub fn pass(&self) -> bool {
        self.all_order_p && self.independent && self.spanning
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MetabelianTorsionReport {
    pub prime: usize,
    pub degree: u32,
    pub metabelian_rank: usize,
    pub metabelian_free_rank: usize,
    #[serde(serialize_with = "crate::json::big_ints")]
    pub metabelian_torsion: Vec<BigInt>,
    pub lie_torsion_rank: usize,
    pub ranks_agree: bool,
    /// The elements `[v_y, v_x, u, ..., u]` against the metabelian side.
    pub metabelian_basis: BasisFlags,
    /// Their `theta_p`-images against the Lie side.
    pub theta_image_basis: BasisFlags,
    /// Each image is a unit multiple of the matching theorem element
    /// modulo relations.
    pub theta_matches_theorem: bool,
    pub pass: bool,
}

pub fn metabelian_torsion_check(p: usize, d: u32) -> Result<MetabelianTorsionReport> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let mside = MetabelianComponent::new(p, d);
    let mpres = Presentation::new(mside.relations()?);
    let target = LieComponent::new(p, d);
    let lpres = Presentation::new(action_rows(
        &LieComponent::new(p, d.saturating_sub(1)),
        &target,
    ));

    let mut cache = BracketCache::new();
    let mut m_vectors = Vec::new();
    let mut theta_vectors = Vec::new();
    let mut theta_matches_theorem = true;
    for (s, t) in theorem_indices(p, d) {
        let m = metabelian_element(p, s, t)?;
        m_vectors.push(mside.coordinates(&m)?);
        let image = target.coordinates(&theta_with(&mut cache, &m)?);
        let reference = target.coordinates(&theorem_element_with(&mut cache, p, s, t)?);
        let unit_multiple = (1..p).any(|k| {
            let k = BigInt::from(k);
            let diff: Vec<BigInt> = image
                .iter()
                .zip(&reference)
                .map(|(a, b)| a - &k * b)
                .collect();
            lpres.is_trivial(&diff)
        });
        theta_matches_theorem &= unit_multiple;
        theta_vectors.push(image);
    }

    let mcok = mpres.cokernel();
    let lie_torsion_rank = lpres.cokernel().torsion_rank();
    let metabelian_basis = BasisFlags::from_tuple(check_basis(&mpres, p, &m_vectors));
    let theta_image_basis = BasisFlags::from_tuple(check_basis(&lpres, p, &theta_vectors));
    let ranks_agree = mcok.torsion_rank() == lie_torsion_rank;
    let pass =
        ranks_agree && metabelian_basis.pass() && theta_image_basis.pass() && theta_matches_theorem;
    Ok(MetabelianTorsionReport {
        prime: p,
        degree: d,
        metabelian_rank: mside.rank(),
        metabelian_free_rank: mcok.free_rank,
        metabelian_torsion: mcok.torsion.clone(),
        lie_torsion_rank,
        ranks_agree,
        metabelian_basis,
        theta_image_basis,
        theta_matches_theorem,
        pass,
    })
}
