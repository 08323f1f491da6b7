//! The maps between Lie powers, tensor powers and metabelian powers on
//! small inputs, including the degrees where division by c is not exact.

use lie_torsion::cli::parse_element;
use lie_torsion::lie::{Alphabet, BracketCache};
use lie_torsion::powers::{
    eta, lambda, normal_words, nu, rho, theta_monomial, theta_numerator, MetabelianElement,
};
use num_bigint::BigInt;

fn main() {
    let alphabet = Alphabet::with_names(&["x", "y", "z"]).unwrap();

    let e = parse_element("[y,x,x] + 2*[z,[x,y]]", &alphabet).unwrap();
    let t = nu(&e, 3).unwrap();
    println!("e            = {}", e.format(&alphabet));
    println!("nu(e)        = {}", t.format(&alphabet));
    println!("rho(nu(e))   = {}", rho(&t, 3).unwrap().format(&alphabet));

    let m = MetabelianElement::<BigInt>::left_normed(&[
        alphabet.letter("z").unwrap(),
        alphabet.letter("x").unwrap(),
        alphabet.letter("y").unwrap(),
    ])
    .unwrap();
    let back = lambda(m.mu_image(), 3).unwrap();
    println!(
        "lambda(mu([z,x,y])) = 3 * [z,x,y]: {}",
        back == m.scale(&BigInt::from(3))
    );

    let mut cache = BracketCache::new();
    for c in 2..=5 {
        let words = normal_words(&alphabet, c, |_| true);
        let mut exact = 0;
        let mut inexact = Vec::new();
        for w in &words {
            match theta_monomial(&mut cache, w) {
                Ok(th) => {
                    let m = MetabelianElement::left_normed(w).unwrap();
                    let k = (2..c as u64 - 1).product::<u64>().max(1);
                    assert_eq!(eta(&th, c).unwrap(), m.scale(&BigInt::from(k)));
                    exact += 1;
                }
                Err(_) => inexact.push(alphabet.format_word(w)),
            }
        }
        println!(
            "c = {c}: theta exact on {exact}/{} normal words; not divisible on {inexact:?}",
            words.len()
        );
    }

    let w: Vec<_> = ["y", "x", "x", "z"]
        .iter()
        .map(|n| alphabet.letter(n).unwrap())
        .collect();
    let numerator = theta_numerator(&mut cache, &w).unwrap();
    println!("4 * theta([y,x,x,z]) = {}", numerator.format(&alphabet));
}
