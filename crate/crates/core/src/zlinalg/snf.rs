//! Smith normal form, integer kernels and cokernel structure.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMat;
use crate::error::{Error, Result};

/// Elementary divisor chain `d_1 | d_2 | ... | d_r` of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub divisors: Vec<BigInt>,
    pub rank: usize,
}

/// Free rank and invariant factors (all `> 1`) of a finitely generated
/// abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl CokernelStructure {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Minimal number of generators of the torsion subgroup.
    pub fn torsion_rank(&self) -> usize {
        self.torsion.len()
    }

    /// Prime-power elementary divisors, sorted. Two groups are isomorphic
    /// exactly when free ranks and these lists agree.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for d in &self.torsion {
            for (p, e) in factorize(d) {
                out.push(Pow::pow(&p, e));
            }
        }
        out.sort();
        out
    }

    pub fn is_isomorphic_to(&self, other: &CokernelStructure) -> bool {
        self.free_rank == other.free_rank
            && self.elementary_divisors() == other.elementary_divisors()
    }

    /// Direct sum of groups.
    pub fn direct_sum(parts: &[CokernelStructure]) -> CokernelStructure {
        let mut free_rank = 0;
        let mut primary: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
        for part in parts {
            free_rank += part.free_rank;
            for d in &part.torsion {
                for (p, e) in factorize(d) {
                    primary.entry(p).or_default().push(e);
                }
            }
        }
        // recombine prime powers into an invariant factor chain
        let longest = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![BigInt::one(); longest];
        for (p, mut exps) in primary {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (k, e) in exps.into_iter().enumerate() {
                torsion[longest - 1 - k] *= Pow::pow(&p, e);
            }
        }
        CokernelStructure { free_rank, torsion }
    }
}

trait Pow {
    fn pow(&self, e: u32) -> BigInt;
}

impl Pow for BigInt {
    fn pow(&self, e: u32) -> BigInt {
        num_traits::pow(self.clone(), e as usize)
    }
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

fn min_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], j1: usize, j2: usize) {
    if j1 != j2 {
        for row in a.iter_mut() {
            row.swap(j1, j2);
        }
    }
}

/// Smith normal form by pivoting on the entry of smallest absolute value.
pub fn smith_normal_form(m: &IntMat) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone().into_rows();
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        let Some((pi, pj)) = min_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    let (head, tail) = a.split_at_mut(i);
                    let pivot_row = &head[t];
                    for (x, p) in tail[0][t..].iter_mut().zip(&pivot_row[t..]) {
                        if !p.is_zero() {
                            *x -= &q * p;
                        }
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for row in a[t..].iter_mut() {
                        if !row[t].is_zero() {
                            let delta = &q * &row[t];
                            row[j] -= delta;
                        }
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // bring the smallest leftover of row/column t into the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                swap_cols(&mut a, t, best.1);
                continue;
            }
            let pivot = a[t][t].clone();
            let offending = (t + 1..rows).find(|&i| {
                a[i][t + 1..]
                    .iter()
                    .any(|v| !v.is_zero() && !(v % &pivot).is_zero())
            });
            match offending {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t][t..].iter_mut().zip(&tail[0][t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        divisors.push(a[t][t].abs());
        t += 1;
    }
    SnfResult {
        rank: divisors.len(),
        divisors,
    }
}

pub fn rank(m: &IntMat) -> usize {
    smith_normal_form(m).rank
}

/// Quotient of `Z^ambient_rank` by the row lattice of `relations`.
pub fn cokernel_structure(relations: &IntMat, ambient_rank: usize) -> Result<CokernelStructure> {
    if relations.cols() != ambient_rank {
        return Err(Error::ColumnMismatch {
            expected: ambient_rank,
            found: relations.cols(),
        });
    }
    let snf = smith_normal_form(relations);
    Ok(CokernelStructure {
        free_rank: ambient_rank - snf.rank,
        torsion: snf.divisors.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

/// Saturated basis of `{ v in Z^cols : m v = 0 }`.
///
/// Computed by unimodular row reduction of `[m^T | I]`; the identity part of
/// each zero row is a kernel vector, and unimodularity makes the basis
/// saturated.
pub fn integer_kernel(m: &IntMat) -> Vec<Vec<BigInt>> {
    let n = m.cols();
    let width = m.rows();
    let mut rows: Vec<(Vec<BigInt>, Vec<BigInt>)> = m
        .transpose()
        .into_rows()
        .into_iter()
        .enumerate()
        .map(|(i, left)| {
            let mut right = vec![BigInt::zero(); n];
            right[i] = BigInt::one();
            (left, right)
        })
        .collect();
    let mut r = 0;
    for col in 0..width {
        loop {
            let pivot = (r..n)
                .filter(|&i| !rows[i].0[col].is_zero())
                .min_by_key(|&i| rows[i].0[col].abs());
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..n {
                if rows[i].0[col].is_zero() {
                    continue;
                }
                let q = rows[i].0[col].div_floor(&rows[r].0[col]);
                let (head, tail) = rows.split_at_mut(i);
                let (pl, pr) = &head[r];
                let (il, ir) = &mut tail[0];
                for (x, y) in il.iter_mut().zip(pl) {
                    *x -= &q * y;
                }
                for (x, y) in ir.iter_mut().zip(pr) {
                    *x -= &q * y;
                }
                if !il[col].is_zero() {
                    done = false;
                }
            }
            if done {
                r += 1;
                break;
            }
        }
        if r == n {
            break;
        }
    }
    rows.into_iter()
        .skip(r)
        .map(|(_, mut v)| {
            if let Some(first) = v.iter().find(|x| !x.is_zero()) {
                if first.is_negative() {
                    v.iter_mut().for_each(|x| *x = -x.clone());
                }
            }
            v
        })
        .collect()
}
