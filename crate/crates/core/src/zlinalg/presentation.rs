use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMat;
use super::snf::{cokernel_structure, CokernelStructure};

/// A finitely presented abelian group `Z^n / <relations>`, queried by
/// augmenting the relation matrix and comparing invariants.
#[derive(Clone, Debug)]
pub struct Presentation {
    relations: IntMat,
    cokernel: CokernelStructure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(BigInt),
    Infinite,
}

impl Presentation {
    pub fn new(relations: IntMat) -> Self {
        let cokernel =
            cokernel_structure(&relations, relations.cols()).expect("square by construction");
        Presentation {
            relations,
            cokernel,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.relations.cols()
    }

    pub fn relations(&self) -> &IntMat {
        &self.relations
    }

    pub fn cokernel(&self) -> &CokernelStructure {
        &self.cokernel
    }

    /// Structure of the quotient by the subgroup generated by `elements`.
    pub fn quotient_by(&self, elements: &[Vec<BigInt>]) -> CokernelStructure {
        let mut m = self.relations.clone();
        for v in elements {
            m.push_row(v);
        }
        cokernel_structure(&m, self.ambient_rank()).expect("column count preserved")
    }

    /// Order of the subgroup generated by `elements`, or `None` when it is
    /// infinite.
    pub fn subgroup_order(&self, elements: &[Vec<BigInt>]) -> Option<BigInt> {
        let q = self.quotient_by(elements);
        if q.free_rank != self.cokernel.free_rank {
            return None;
        }
        let (quo, rem) = self.cokernel.torsion_order().div_rem(&q.torsion_order());
        debug_assert!(rem.is_zero());
        Some(quo)
    }

    pub fn order_of(&self, v: &[BigInt]) -> ElementOrder {
        match self.subgroup_order(&[v.to_vec()]) {
            Some(n) => ElementOrder::Finite(n),
            None => ElementOrder::Infinite,
        }
    }

    /// Whether `v` maps to zero in the quotient.
    pub fn is_trivial(&self, v: &[BigInt]) -> bool {
        self.order_of(v) == ElementOrder::Finite(BigInt::one())
    }

    /// Whether the images of `elements` generate the whole torsion subgroup.
    pub fn spans_torsion(&self, elements: &[Vec<BigInt>]) -> bool {
        let q = self.quotient_by(elements);
        q.free_rank == self.cokernel.free_rank && q.is_torsion_free()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn orders_in_z2_plus_z() {
        // Z^2 / <(2, 0)> = Z/2 + Z
        let p = Presentation::new(IntMat::from_i64(&[&[2, 0]]));
        assert_eq!(
            p.order_of(&ints(&[1, 0])),
            ElementOrder::Finite(BigInt::from(2))
        );
        assert_eq!(p.order_of(&ints(&[0, 1])), ElementOrder::Infinite);
        assert!(p.is_trivial(&ints(&[4, 0])));
        assert!(p.spans_torsion(&[ints(&[3, 0])]));
        assert!(!p.spans_torsion(&[ints(&[2, 0])]));
    }
}
