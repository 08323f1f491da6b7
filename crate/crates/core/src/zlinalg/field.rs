//! Dense Gaussian elimination over a field.

use crate::coeff::Field;

/// Row echelon basis of the span of `rows`.
pub fn echelon_basis<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut basis: Vec<Vec<F>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        reduce(&basis, &pivots, &mut v);
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].inv().expect("nonzero pivot");
            v.iter_mut().for_each(|x| *x = x.clone() * inv.clone());
            // keep the basis fully reduced
            for b in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
            basis.push(v);
            pivots.push(p);
        }
    }
    basis
}

fn reduce<F: Field>(basis: &[Vec<F>], pivots: &[usize], v: &mut [F]) {
    for (b, &p) in basis.iter().zip(pivots) {
        if v[p].is_zero() {
            continue;
        }
        let f = v[p].clone();
        for (x, y) in v.iter_mut().zip(b) {
            *x = x.clone() - f.clone() * y.clone();
        }
    }
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    echelon_basis(rows).len()
}

/// Whether `v` lies in the span of `rows`.
pub fn in_span<F: Field>(rows: &[Vec<F>], v: &[F]) -> bool {
    let basis = echelon_basis(rows);
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    let mut w = v.to_vec();
    reduce(&basis, &pivots, &mut w);
    w.iter().all(|x| x.is_zero())
}

/// Basis of `{ c : sum_i c_i rows[i] = 0 }`.
pub fn left_kernel<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<F>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            v
        })
        .collect();
    echelon_basis(&augmented)
        .into_iter()
        .filter(|v| v[..width].iter().all(|x| x.is_zero()))
        .map(|v| v[width..].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;

    fn fp(v: &[u64]) -> Vec<Fp<3>> {
        v.iter().map(|&x| Fp::new(x)).collect()
    }

    #[test]
    fn rank_and_span_mod_3() {
        let rows = vec![fp(&[1, 2, 0]), fp(&[2, 1, 0]), fp(&[0, 0, 1])];
        assert_eq!(rank(&rows), 2);
        assert!(in_span(&rows, &fp(&[1, 2, 1])));
        assert!(!in_span(&rows, &fp(&[1, 0, 0])));
    }

    #[test]
    fn left_kernel_mod_3() {
        let rows = vec![fp(&[1, 2]), fp(&[2, 1]), fp(&[1, 1])];
        let k = left_kernel(&rows);
        assert_eq!(k.len(), 1);
        for c in k {
            for col in 0..2 {
                let s = c.iter().zip(&rows).fold(Fp::<3>::new(0), |acc, (k, r)| acc + *k * r[col]);
                assert_eq!(s.value(), 0);
            }
        }
    }
}
