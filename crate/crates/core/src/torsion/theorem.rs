//! The explicit torsion elements of order `p` and their verification.

use num_bigint::BigInt;
use num_traits::Pow;
use rayon::prelude::*;
use serde::Serialize;

use super::agen::AGenerator;
use super::component::{action_rows, blockwise_cokernel, LieComponent};
use crate::coeff::is_prime;
use crate::error::{Error, Result};
use crate::lie::{evaluate_left_normed, BracketCache, LeftNormed, Letter, LieElement};
use crate::powers::divide_exactly;
use crate::zlinalg::{ElementOrder, Presentation};

/// Left-normed numerator
/// `sum_i [v_y, u^i, v_x, u^(p-2-i)] - [v_x, u^i, v_y, u^(p-2-i)]` with
/// `u = u(s,t)`, `v_x = u(s+1,t)`, `v_y = u(s,t+1)`.
pub fn theorem_numerator(p: usize, s: u32, t: u32) -> LeftNormed<BigInt> {
    let u = AGenerator::new(s, t);
    let (ul, vx, vy) = (u.letter(), u.times_x().letter(), u.times_y().letter());
    let mut out = LeftNormed::zero();
    for i in 0..=p.saturating_sub(2) {
        let build = |first: Letter, second: Letter| {
            let mut w = vec![first];
            w.extend(std::iter::repeat_n(ul, i));
            w.push(second);
            w.extend(std::iter::repeat_n(ul, p - 2 - i));
            w
        };
        out.add_term(build(vy, vx), BigInt::from(1));
        out.add_term(build(vx, vy), BigInt::from(-1));
    }
    out
}

/// The numerator normalized and divided by `p`; of degree `p(s+t+2)+2`.
pub fn theorem_element(p: usize, s: u32, t: u32) -> Result<LieElement<BigInt>> {
    theorem_element_with(&mut BracketCache::new(), p, s, t)
}

pub fn theorem_element_with(
    cache: &mut BracketCache<BigInt>,
    p: usize,
    s: u32,
    t: u32,
) -> Result<LieElement<BigInt>> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let numerator = evaluate_left_normed(cache, &theorem_numerator(p, s, t));
    divide_exactly(&numerator, p as u64)
}

/// Index pairs `(s,t)` of the theorem elements living in degree `d`.
pub fn theorem_indices(p: usize, d: u32) -> Vec<(u32, u32)> {
    let p32 = p as u32;
    if p < 2 || d < 2 * p32 + 2 || !(d - 2).is_multiple_of(p32) {
        return Vec::new();
    }
    let k = (d - 2) / p32 - 2;
    (0..=k).map(|s| (s, k - s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremCheck {
    pub count: usize,
    pub all_order_p: bool,
    pub independent: bool,
    pub spanning: bool,
    pub integrality_passed: bool,
}

impl TheoremCheck {
    pub fn pass(&self) -> bool {
        self.all_order_p && self.independent && self.spanning && self.integrality_passed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorsionReport {
    pub prime: usize,
    pub degree: u32,
    pub lie_power_rank: usize,
    pub free_rank: usize,
    #[serde(serialize_with = "crate::json::big_ints")]
    pub torsion: Vec<BigInt>,
    pub blockwise_consistent: bool,
    /// Absent when `p` is not prime.
    pub theorem: Option<TheoremCheck>,
}

impl TorsionReport {
    pub fn torsion_rank(&self) -> usize {
        self.torsion.len()
    }

    pub fn pass(&self) -> bool {
        self.blockwise_consistent && self.theorem.as_ref().is_none_or(TheoremCheck::pass)
    }
}

/// Checks that vectors form a `Z_p`-basis of the torsion of `pres`.
pub(crate) fn check_basis(
    pres: &Presentation,
    p: usize,
    elements: &[Vec<BigInt>],
) -> (bool, bool, bool) {
    let pb = BigInt::from(p);
    let all_order_p = elements
        .iter()
        .all(|v| pres.order_of(v) == ElementOrder::Finite(pb.clone()));
    let independent = pres.subgroup_order(elements) == Some(Pow::pow(&pb, elements.len()));
    let spanning = pres.spans_torsion(elements);
    (all_order_p, independent, spanning)
}

/// Cokernel of `L^p(A)_d` with the theorem elements checked against it.
pub fn verify_theorem_degree(p: usize, d: u32) -> TorsionReport {
    let target = LieComponent::new(p, d);
    let source = LieComponent::new(p, d.saturating_sub(1));
    let pres = Presentation::new(action_rows(&source, &target));
    let cok = pres.cokernel().clone();
    let blockwise_consistent = cok.is_isomorphic_to(&blockwise_cokernel(p, d));

    let theorem = is_prime(p as u64).then(|| {
        let mut cache = BracketCache::new();
        let mut integrality_passed = true;
        let mut vectors = Vec::new();
        for (s, t) in theorem_indices(p, d) {
            match theorem_element_with(&mut cache, p, s, t) {
                Ok(e) => vectors.push(target.coordinates(&e)),
                Err(_) => integrality_passed = false,
            }
        }
        let (all_order_p, independent, spanning) = check_basis(&pres, p, &vectors);
        TheoremCheck {
            count: theorem_indices(p, d).len(),
            all_order_p,
            independent,
            spanning,
            integrality_passed,
        }
    });

    TorsionReport {
        prime: p,
        degree: d,
        lie_power_rank: target.rank(),
        free_rank: cok.free_rank,
        torsion: cok.torsion,
        blockwise_consistent,
        theorem,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorsionTable {
    pub prime: usize,
    /// Set for non-prime `p`, where no theorem is asserted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub degrees: Vec<TorsionReport>,
}

impl TorsionTable {
    pub fn pass(&self) -> bool {
        self.degrees.iter().all(TorsionReport::pass)
    }

    pub fn get(&self, d: u32) -> Option<&TorsionReport> {
        self.degrees.iter().find(|r| r.degree == d)
    }
}

pub const COMPOSITE_NOTE: &str = "composite modulus: no theorem asserted";

/// Reports for every degree in `2p..=max_degree`, computed in parallel.
pub fn torsion_report(p: usize, max_degree: u32) -> TorsionTable {
    let lo = 2 * p as u32;
    let degrees: Vec<TorsionReport> = (lo..=max_degree)
        .into_par_iter()
        .map(|d| verify_theorem_degree(p, d))
        .collect();
    TorsionTable {
        prime: p,
        note: (!is_prime(p as u64)).then(|| COMPOSITE_NOTE.to_string()),
        degrees,
    }
}
