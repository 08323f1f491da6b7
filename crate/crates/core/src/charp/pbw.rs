//! PBW basis of `T^p(V)` built from Lyndon monomials, grouped by type.

use crate::coeff::Coefficient;
use crate::lie::{lyndon_words, Alphabet, LyndonWord};
use crate::powers::{Embedding, TensorElement};

/// Lyndon basis of `L^1(V) + ... + L^p(V)`, ordered by degree first.
pub fn lie_basis(alphabet: &Alphabet, p: usize) -> Vec<LyndonWord> {
    lyndon_words(alphabet, p as u32, |_| 1)
}

/// Product `b_1 b_2 ... b_k` of non-decreasing Lie basis elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwElement {
    pub factors: Vec<LyndonWord>,
    /// `k_j` = number of factors of degree `j`, for `j = 1..=p`.
    pub kind: Vec<usize>,
}

impl PbwElement {
    pub fn expand<R: Coefficient>(&self, emb: &mut Embedding<R>) -> TensorElement<R> {
        product(emb, &self.factors)
    }
}

pub(crate) fn product<R: Coefficient>(
    emb: &mut Embedding<R>,
    factors: &[LyndonWord],
) -> TensorElement<R> {
    factors.iter().fold(TensorElement::word(&[]), |acc, b| {
        acc.product(&emb.monomial(b))
    })
}

/// The types `omega_1 > ... > omega_m` in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeOrder {
    pub omega: Vec<Vec<usize>>,
}

impl TypeOrder {
    pub fn new(p: usize) -> Self {
        let mut omega = Vec::new();
        let mut cur = vec![0; p];
        fn rec(j: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if j == cur.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let deg = j + 1;
            for k in 0..=left / deg {
                cur[j] = k;
                rec(j + 1, left - k * deg, cur, out);
            }
            cur[j] = 0;
        }
        rec(0, p, &mut cur, &mut omega);
        omega.sort_by(|a, b| b.cmp(a));
        TypeOrder { omega }
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    /// 1-based position of a type.
    pub fn position(&self, kind: &[usize]) -> Option<usize> {
        self.omega.iter().position(|w| w == kind).map(|i| i + 1)
    }

    /// Type `omega_i`, 1-based.
    pub fn get(&self, i: usize) -> Option<&[usize]> {
        i.checked_sub(1)
            .and_then(|j| self.omega.get(j))
            .map(Vec::as_slice)
    }
}

/// PBW basis of `T^p(V)` in the order of the types, then of the factors.
pub fn pbw_basis(p: usize, alphabet: &Alphabet) -> Vec<PbwElement> {
    let basis = lie_basis(alphabet, p);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        basis: &[LyndonWord],
        start: usize,
        left: usize,
        p: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<PbwElement>,
    ) {
        if left == 0 {
            let factors: Vec<LyndonWord> = cur.iter().map(|&i| basis[i].clone()).collect();
            let mut kind = vec![0; p];
            for f in &factors {
                kind[f.len() - 1] += 1;
            }
            out.push(PbwElement { factors, kind });
            return;
        }
        for i in start..basis.len() {
            if basis[i].len() <= left {
                cur.push(i);
                rec(basis, i, left - basis[i].len(), p, cur, out);
                cur.pop();
            }
        }
    }
    rec(&basis, 0, p, p, &mut cur, &mut out);
    let order = TypeOrder::new(p);
    out.sort_by_key(|e| order.position(&e.kind));
    out
}

/// Basis grouped into classes `C_1, ..., C_m`.
pub fn pbw_classes(p: usize, alphabet: &Alphabet) -> (TypeOrder, Vec<Vec<PbwElement>>) {
    let order = TypeOrder::new(p);
    let mut classes = vec![Vec::new(); order.len()];
    for e in pbw_basis(p, alphabet) {
        let i = order.position(&e.kind).expect("every type is listed");
        classes[i - 1].push(e);
    }
    (order, classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_order_ends() {
        let o = TypeOrder::new(5);
        assert_eq!(o.omega.first().unwrap(), &vec![5, 0, 0, 0, 0]);
        assert_eq!(o.omega.last().unwrap(), &vec![0, 0, 0, 0, 1]);
        assert_eq!(o.len(), 7);
        assert_eq!(
            TypeOrder::new(3).omega,
            vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn class_sizes() {
        let (_, c) = pbw_classes(2, &Alphabet::standard(2));
        assert_eq!(c.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 1]);
        let (_, c) = pbw_classes(3, &Alphabet::standard(2));
        assert_eq!(c.iter().map(Vec::len).collect::<Vec<_>>(), vec![4, 2, 2]);
        let (_, c) = pbw_classes(2, &Alphabet::standard(1));
        assert_eq!(c.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 0]);
        for (p, n) in [(2, 4), (3, 3), (5, 2)] {
            assert_eq!(pbw_basis(p, &Alphabet::standard(n)).len(), n.pow(p as u32));
        }
    }
}
