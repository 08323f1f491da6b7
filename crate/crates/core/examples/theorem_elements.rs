//! The explicit order-p elements in the generators u(s,t) and the check
//! that they form a basis of the torsion in their degree.

use lie_torsion::torsion::{a_alphabet, theorem_element, theorem_indices, verify_theorem_degree};

fn main() {
    for (p, d) in [(2, 6), (2, 8), (3, 8), (3, 11), (5, 12)] {
        let alphabet = a_alphabet(d);
        println!("p = {p}, degree {d}");
        for (s, t) in theorem_indices(p, d) {
            let e = theorem_element(p, s, t).expect("prime");
            println!("  (s,t) = ({s},{t}): {}", e.format(&alphabet));
        }
        let r = verify_theorem_degree(p, d);
        let check = r.theorem.as_ref().expect("torsion degree");
        println!(
            "  torsion {:?}; order p {}, independent {}, spanning {}",
            r.torsion, check.all_order_p, check.independent, check.spanning
        );
    }
}
