//! The kernel `B^p(A)` of `L^p(A) -> M^p(A)` and freeness of its
//! augmentation quotient.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::agen::a_action;
use super::component::{graded_cokernel, LieComponent};
use crate::lie::LieElement;
use crate::powers::{eta, LieDeriver};
use crate::zlinalg::{cokernel_structure, integer_kernel, rank, IntMat};

/// Matrix of `eta_p` on the Lyndon basis of `L^p(A)_d`, in mu-coordinates.
fn eta_matrix(component: &LieComponent) -> IntMat {
    let images: Vec<_> = component
        .basis
        .iter()
        .map(|w| eta(&LieElement::<BigInt>::monomial(w.clone()), component.p).expect("homogeneous"))
        .collect();
    let mut columns = BTreeMap::new();
    for m in &images {
        for k in m.mu_image().keys() {
            let next = columns.len();
            columns.entry(k.clone()).or_insert(next);
        }
    }
    let rows = images
        .iter()
        .map(|m| {
            let mut row = vec![BigInt::from(0); columns.len()];
            for (k, c) in m.mu_image().iter() {
                row[columns[k]] = c.clone();
            }
            row
        })
        .collect();
    IntMat::from_rows(columns.len(), rows)
}

/// Saturated basis of `B^p(A)_d` in `L^p(A)_d` coordinates.
pub fn bp_kernel_basis(p: usize, d: u32) -> Vec<Vec<BigInt>> {
    if p < 2 {
        return Vec::new();
    }
    let component = LieComponent::new(p, d);
    if component.rank() == 0 {
        return Vec::new();
    }
    integer_kernel(&eta_matrix(&component).transpose())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BpDegree {
    pub degree: u32,
    pub lie_power_rank: usize,
    pub bp_rank: usize,
    pub relation_rank: usize,
    pub free_rank: usize,
    #[serde(serialize_with = "crate::json::big_ints")]
    pub torsion: Vec<BigInt>,
    /// Torsion divisors of the whole `L^p(A)` quotient in this degree.
    #[serde(serialize_with = "crate::json::big_ints")]
    pub full_torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BpReport {
    pub prime: usize,
    pub max_degree: u32,
    pub degrees: Vec<BpDegree>,
    /// Every component of `B^p(A)` in range is zero.
    pub vacuous: bool,
    pub torsion_free: bool,
    /// Every divisor of the full quotient equals `p`.
    pub exponent_exactly_p: bool,
    pub pass: bool,
}

fn bp_degree(p: usize, d: u32) -> BpDegree {
    let target = LieComponent::new(p, d);
    let source = LieComponent::new(p, d.saturating_sub(1));
    let b_target = bp_kernel_basis(p, d);
    let b_source = bp_kernel_basis(p, d.saturating_sub(1));
    let spec = a_action(d);
    let mut deriver = LieDeriver::new(&spec);
    let mut rows = Vec::new();
    for v in &b_source {
        let e = source.element(v);
        for var in 0..2 {
            let image = deriver.derive(&e, var).expect("variables x, y exist");
            rows.push(target.coordinates(&image));
        }
    }
    let relations = IntMat::from_rows(target.rank(), rows);
    // B^p(A)_d is saturated in L^p(A)_d, so torsion of B_d / relations is
    // the torsion of L_d / relations
    let cok = cokernel_structure(&relations, target.rank()).expect("target columns");
    let relation_rank = rank(&relations);
    BpDegree {
        degree: d,
        lie_power_rank: target.rank(),
        bp_rank: b_target.len(),
        relation_rank,
        free_rank: b_target.len() - relation_rank,
        torsion: cok.torsion,
        full_torsion: graded_cokernel(p, d).torsion,
    }
}

/// Freeness of `B^p(A) ⊗_U Z` in every degree up to `max_degree`.
pub fn bp_freeness_check(p: usize, max_degree: u32) -> BpReport {
    let degrees: Vec<BpDegree> = (2 * p as u32..=max_degree)
        .into_par_iter()
        .map(|d| bp_degree(p, d))
        .collect();
    let vacuous = degrees.iter().all(|r| r.bp_rank == 0);
    let torsion_free = degrees.iter().all(|r| r.torsion.is_empty());
    let pb = BigInt::from(p);
    let exponent_exactly_p = degrees
        .iter()
        .all(|r| r.full_torsion.iter().all(|t| *t == pb));
    BpReport {
        prime: p,
        max_degree,
        degrees,
        vacuous,
        torsion_free,
        exponent_exactly_p,
        pass: torsion_free && exponent_exactly_p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_are_vacuous() {
        for p in [2, 3] {
            let r = bp_freeness_check(p, 10);
            assert!(r.vacuous && r.pass, "{r:?}");
        }
    }

    #[test]
    fn degree_eleven_at_five_is_empty() {
        assert!(bp_kernel_basis(5, 11).is_empty());
        assert_eq!(LieComponent::new(5, 11).rank(), 2);
    }

    #[test]
    fn kernel_is_annihilated_by_eta() {
        let component = LieComponent::new(5, 13);
        for v in bp_kernel_basis(5, 13) {
            assert!(eta(&component.element(&v), 5).unwrap().is_zero());
        }
    }
}
