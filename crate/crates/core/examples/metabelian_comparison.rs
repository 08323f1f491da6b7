//! Torsion on the metabelian side against the Lie side, and theta_p
//! carrying one basis onto the other.

use lie_torsion::torsion::metabelian_torsion_check;

fn main() {
    for (p, d) in [(2, 6), (2, 8), (2, 10), (3, 8), (3, 11)] {
        let r = metabelian_torsion_check(p, d).expect("prime");
        println!(
            "p={p} d={d:>2}: M rank {:>3} free {:>3} torsion {:?} | Lie torsion rank {} | M basis {} theta image basis {} matches {} => {}",
            r.metabelian_rank,
            r.metabelian_free_rank,
            r.metabelian_torsion,
            r.lie_torsion_rank,
            r.metabelian_basis.pass(),
            r.theta_image_basis.pass(),
            r.theta_matches_theorem,
            if r.pass { "pass" } else { "FAIL" }
        );
    }
}
