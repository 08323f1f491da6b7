//! Degree components of `L^p(A)` and their augmentation quotients.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use super::agen::{a_action, a_alphabet, word_bidegree};
use crate::lie::{lyndon_words_with, Alphabet, LieElement, LyndonWord};
use crate::powers::LieDeriver;
use crate::zlinalg::{cokernel_structure, CokernelStructure, IntMat};

/// Lyndon basis of `L^p(A)_d` with a coordinate lookup.
#[derive(Clone, Debug)]
pub struct LieComponent {
    pub p: usize,
    pub d: u32,
    pub basis: Vec<LyndonWord>,
    index: HashMap<LyndonWord, usize>,
}

impl LieComponent {
    pub fn new(p: usize, d: u32) -> Self {
        let basis = lie_power_basis(p, d);
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        LieComponent { p, d, basis, index }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a homogeneous element of this component.
    pub fn coordinates(&self, e: &LieElement<BigInt>) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(0); self.rank()];
        for (w, c) in e.iter() {
            let i = *self
                .index
                .get(w)
                .unwrap_or_else(|| panic!("word outside L^{}(A)_{}", self.p, self.d));
            v[i] = c.clone();
        }
        v
    }

    pub fn element(&self, coords: &[BigInt]) -> LieElement<BigInt> {
        self.basis
            .iter()
            .zip(coords)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }

    pub fn bidegree(&self, i: usize) -> (u32, u32) {
        word_bidegree(self.basis[i].letters())
    }
}

/// Lyndon words of length `p` over the `A` alphabet with degrees summing
/// to `d`.
pub fn lie_power_basis(p: usize, d: u32) -> Vec<LyndonWord> {
    if p == 0 || d < 2 * p as u32 {
        return Vec::new();
    }
    lyndon_words_with(&component_alphabet(d), p, d)
}

pub(crate) fn component_alphabet(d: u32) -> Alphabet {
    a_alphabet(d.max(2))
}

/// Rows `b·x`, `b·y` for the basis `b` of `L^p(A)_(d-1)`, in degree-`d`
/// coordinates.
pub fn action_matrix(p: usize, d: u32) -> IntMat {
    let target = LieComponent::new(p, d);
    action_rows(&LieComponent::new(p, d.saturating_sub(1)), &target)
}

pub(crate) fn action_rows(source: &LieComponent, target: &LieComponent) -> IntMat {
    let rows = images(source, target, |_| true);
    IntMat::from_rows(target.rank(), rows)
}

fn images<F: Fn(usize) -> bool>(
    source: &LieComponent,
    target: &LieComponent,
    keep: F,
) -> Vec<Vec<BigInt>> {
    let spec = a_action(target.d);
    let mut deriver = LieDeriver::new(&spec);
    let mut rows = Vec::new();
    for (i, w) in source.basis.iter().enumerate() {
        if !keep(i) {
            continue;
        }
        let e = LieElement::monomial(w.clone());
        for var in 0..2 {
            let image = deriver.derive(&e, var).expect("variables x, y exist");
            rows.push(target.coordinates(&image));
        }
    }
    rows
}

/// `L^p(A)_d / (L^p(A)_(d-1)·x + L^p(A)_(d-1)·y)`.
pub fn graded_cokernel(p: usize, d: u32) -> CokernelStructure {
    let m = action_matrix(p, d);
    cokernel_structure(&m, m.cols()).expect("matrix built on the target basis")
}

/// The same quotient computed one `(x,y)`-bidegree block at a time.
pub fn blockwise_cokernel(p: usize, d: u32) -> CokernelStructure {
    let target = LieComponent::new(p, d);
    let source = LieComponent::new(p, d.saturating_sub(1));
    let mut blocks: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for i in 0..target.rank() {
        blocks.entry(target.bidegree(i)).or_default().push(i);
    }
    let all = images(&source, &target, |_| true);
    let parts: Vec<CokernelStructure> = blocks
        .iter()
        .map(|(&(a, b), cols)| {
            let rows: Vec<Vec<BigInt>> = (0..source.rank())
                .flat_map(|i| {
                    let (sa, sb) = source.bidegree(i);
                    [((sa + 1, sb), 2 * i), ((sa, sb + 1), 2 * i + 1)]
                })
                .filter(|&(bd, _)| bd == (a, b))
                .map(|(_, r)| all[r].clone())
                .collect();
            let block = IntMat::from_rows(target.rank(), rows).select_cols(cols);
            cokernel_structure(&block, cols.len()).expect("block columns")
        })
        .collect();
    CokernelStructure::direct_sum(&parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torsion::agen::AGenerator;

    fn u(s: u32, t: u32) -> crate::lie::Letter {
        AGenerator::new(s, t).letter()
    }

    #[test]
    fn basis_examples() {
        let b = lie_power_basis(2, 6);
        let words: Vec<Vec<_>> = b.iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(
            words,
            vec![
                vec![u(0, 0), u(0, 2)],
                vec![u(0, 0), u(1, 1)],
                vec![u(0, 0), u(2, 0)],
                vec![u(0, 1), u(1, 0)],
            ]
        );
        assert!(lie_power_basis(2, 4).is_empty());
        assert!(lie_power_basis(5, 10).is_empty());
    }

    #[test]
    fn degree_six_matrix() {
        // rows: [u00,u01]·x, [u00,u01]·y, [u00,u10]·x, [u00,u10]·y
        let m = action_matrix(2, 6);
        assert_eq!(
            m,
            IntMat::from_i64(&[&[0, 1, 0, -1], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 1]])
        );
        let c = graded_cokernel(2, 6);
        assert_eq!((c.free_rank, c.torsion.clone()), (0, vec![BigInt::from(2)]));
        assert!(c.is_isomorphic_to(&blockwise_cokernel(2, 6)));
    }

    #[test]
    fn small_cokernels() {
        let m = action_matrix(2, 5);
        assert_eq!((m.rows(), m.cols()), (0, 2));
        let c = graded_cokernel(2, 5);
        assert_eq!((c.free_rank, c.torsion.len()), (2, 0));
        assert_eq!(graded_cokernel(3, 8).torsion, vec![BigInt::from(3)]);
    }
}
