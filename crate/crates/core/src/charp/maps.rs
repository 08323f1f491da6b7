//! The maps `sigma_i`, `alpha`, `beta` over a prime field.

use itertools::Itertools;

use super::pbw::{PbwElement, TypeOrder};
use crate::coeff::{factorial, Field};
use crate::error::{Error, Result};
use crate::lie::LieElement;
use crate::powers::{Embedding, MixedElement, Multiset, TensorElement, TensorWord};

/// `a_1 ⊗ a_2 ⊗ ... ⊗ a_p -> a_1 ⊗ (a_2 ∘ ... ∘ a_p)`.
pub fn alpha_map<F: Field>(t: &TensorElement<F>) -> MixedElement<F> {
    t.map_linear(|w| match w.0.split_first() {
        Some((a, rest)) => MixedElement::monomial((*a, Multiset::new(rest.to_vec()))),
        None => MixedElement::zero(),
    })
}

fn inverse_factorial<F: Field>(k: usize) -> Result<F> {
    F::from_bigint(&factorial(k as u64))
        .inv()
        .ok_or(Error::IndexOutOfRange {
            index: k,
            lo: 0,
            hi: 0,
        })
}

/// `a_1 ⊗ (a_2 ∘ ... ∘ a_p) -> (1/(p-1)!) sum_pi a_1 ⊗ a_pi(2) ⊗ ... ⊗ a_pi(p)`.
pub fn beta_map<F: Field>(z: &MixedElement<F>) -> Result<TensorElement<F>> {
    let mut out = TensorElement::zero();
    for ((a, m), c) in z.iter() {
        let k = m.len();
        let scale = inverse_factorial::<F>(k)? * c.clone();
        for perm in m.letters().iter().permutations(k) {
            let mut w = vec![*a];
            w.extend(perm.into_iter().copied());
            out.add_term(TensorWord(w), scale.clone());
        }
    }
    Ok(out)
}

/// Multilinear symmetrization: factors are grouped by degree (ascending),
/// each block summed over all orderings and divided by its factorial.
pub fn sigma_of_factors<F: Field>(
    emb: &mut Embedding<F>,
    factors: &[LieElement<F>],
) -> Result<TensorElement<F>> {
    let mut blocks: std::collections::BTreeMap<usize, Vec<&LieElement<F>>> = Default::default();
    for f in factors {
        match f.degree()? {
            Some(d) => blocks.entry(d).or_default().push(f),
            None => return Ok(TensorElement::zero()),
        }
    }
    let mut out = TensorElement::word(&[]);
    for block in blocks.values() {
        let k = block.len();
        let images: Vec<TensorElement<F>> = block.iter().map(|f| emb.embed(f)).collect();
        let mut sym = TensorElement::zero();
        for perm in (0..k).permutations(k) {
            let term = perm
                .iter()
                .fold(TensorElement::word(&[]), |acc, &i| acc.product(&images[i]));
            sym = sym + term;
        }
        out = out.product(&sym.scale(&inverse_factorial::<F>(k)?));
    }
    Ok(out)
}

/// `sigma_i` on the class of a PBW element of type `omega_i`,
/// `2 <= i <= m-1`.
pub fn sigma_map<F: Field>(
    order: &TypeOrder,
    i: usize,
    arg: &PbwElement,
    emb: &mut Embedding<F>,
) -> Result<TensorElement<F>> {
    let m = order.len();
    if i < 2 || i + 1 > m || order.get(i) != Some(arg.kind.as_slice()) {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 2,
            hi: m.saturating_sub(1),
        });
    }
    let factors: Vec<LieElement<F>> = arg
        .factors
        .iter()
        .map(|b| LieElement::monomial(b.clone()))
        .collect();
    sigma_of_factors(emb, &factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Fp;
    use crate::lie::{Letter, LyndonWord};

    type F3 = Fp<3>;
    const A: Letter = Letter(0);
    const B: Letter = Letter(1);
    const C: Letter = Letter(2);

    #[test]
    fn alpha_examples() {
        let t = TensorElement::<F3>::word(&[A, B, C]);
        assert_eq!(
            alpha_map(&t),
            MixedElement::monomial((A, Multiset::new(vec![B, C])))
        );
        let d = t - TensorElement::word(&[A, C, B]);
        assert!(alpha_map(&d).is_zero());
    }

    #[test]
    fn beta_examples() {
        let z = MixedElement::<F3>::monomial((A, Multiset::new(vec![B, C])));
        let expected: TensorElement<F3> = [
            (TensorWord(vec![A, B, C]), Fp::new(2)),
            (TensorWord(vec![A, C, B]), Fp::new(2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(beta_map(&z).unwrap(), expected);
        assert_eq!(alpha_map(&beta_map(&z).unwrap()), z);
        let z2 = MixedElement::<Fp<2>>::monomial((A, Multiset::new(vec![B])));
        assert_eq!(beta_map(&z2).unwrap(), TensorElement::word(&[A, B]));
    }

    #[test]
    fn sigma_on_middle_type() {
        let order = TypeOrder::new(3);
        let xy = LyndonWord::new(vec![A, B]).unwrap();
        let arg = PbwElement {
            factors: vec![LyndonWord::letter(A), xy.clone()],
            kind: vec![1, 1, 0],
        };
        let mut emb = Embedding::<F3>::new();
        let got = sigma_map(&order, 2, &arg, &mut emb).unwrap();
        assert_eq!(got, arg.expand(&mut emb));
        assert!(sigma_map(&order, 1, &arg, &mut emb).is_err());
        assert!(sigma_map(&order, 3, &arg, &mut emb).is_err());
    }

    #[test]
    fn sigma_scaling_at_five() {
        // 3! = 6 ≡ 1 mod 5, so the six-term symmetrization is unscaled
        let order = TypeOrder::new(5);
        let i = order.position(&[3, 1, 0, 0, 0]).unwrap();
        let xy = LyndonWord::new(vec![A, B]).unwrap();
        let arg = PbwElement {
            factors: vec![
                LyndonWord::letter(A),
                LyndonWord::letter(A),
                LyndonWord::letter(B),
                xy,
            ],
            kind: vec![3, 1, 0, 0, 0],
        };
        let mut emb = Embedding::<Fp<5>>::new();
        let got = sigma_map(&order, i, &arg, &mut emb).unwrap();
        let x = emb.monomial(&LyndonWord::letter(A));
        let y = emb.monomial(&LyndonWord::letter(B));
        let c = emb.monomial(&arg.factors[3]);
        let sym = x.product(&x).product(&y).scale(&Fp::new(2))
            + x.product(&y).product(&x).scale(&Fp::new(2))
            + y.product(&x).product(&x).scale(&Fp::new(2));
        assert_eq!(got, sym.product(&c));
    }

    mod equivariance {
        use super::*;
        use crate::charp::pbw::pbw_classes;
        use crate::powers::{ActionSpec, Derive, LieDeriver, Linear};

        /// `x·a = a + 2b`, `x·b = 3a`, `y·a = b`, `y·b = a + b`.
        fn action<F: Field>() -> ActionSpec<F> {
            let table = [[(1, 2), (0, 1)], [(3, 0), (1, 1)]];
            ActionSpec::from_fn(2, &["x", "y"], |l, v| {
                let (ca, cb) = table[l.index()][v];
                [(A, F::from_i64(ca)), (B, F::from_i64(cb))]
                    .into_iter()
                    .collect::<Linear<F>>()
            })
        }

        fn run<F: Field>(p: usize) {
            let alphabet = crate::lie::Alphabet::standard(2);
            let spec = action::<F>();
            let (order, classes) = pbw_classes(p, &alphabet);
            let mut emb = Embedding::<F>::new();
            for var in 0..2 {
                let mut deriver = LieDeriver::new(&spec);
                for i in 2..order.len() {
                    for e in &classes[i - 1] {
                        let factors: Vec<LieElement<F>> = e
                            .factors
                            .iter()
                            .map(|b| LieElement::monomial(b.clone()))
                            .collect();
                        let mut lhs = TensorElement::zero();
                        for j in 0..factors.len() {
                            let mut moved = factors.clone();
                            moved[j] = deriver.derive(&factors[j], var).unwrap();
                            lhs = lhs + sigma_of_factors(&mut emb, &moved).unwrap();
                        }
                        let rhs = sigma_map(&order, i, e, &mut emb)
                            .unwrap()
                            .derive(var, &spec)
                            .unwrap();
                        assert_eq!(lhs, rhs, "sigma_{i} on {e:?}");
                    }
                }
                for class in &classes {
                    for e in class {
                        let t = e.expand(&mut emb);
                        let z = alpha_map(&t);
                        assert_eq!(
                            alpha_map(&t.derive(var, &spec).unwrap()),
                            z.derive(var, &spec).unwrap()
                        );
                        assert_eq!(
                            beta_map(&z.derive(var, &spec).unwrap()).unwrap(),
                            beta_map(&z).unwrap().derive(var, &spec).unwrap()
                        );
                    }
                }
            }
        }

        #[test]
        fn maps_commute_with_derivations() {
            run::<Fp<2>>(2);
            run::<Fp<3>>(3);
            run::<Fp<5>>(5);
        }
    }
}
