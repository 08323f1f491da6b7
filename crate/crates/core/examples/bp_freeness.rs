//! Freeness of the augmentation quotient of `B^p(A)`, the part of `L^p(A)`
//! killed by the metabelian projection.

use lie_torsion::torsion::bp_freeness_check;

fn main() {
    for (p, max_degree) in [(2, 10), (3, 11), (5, 14)] {
        let r = bp_freeness_check(p, max_degree);
        let label = if r.vacuous { " (vacuous)" } else { "" };
        println!(
            "p = {p}: torsion free {}{label}, full quotient exponent p {}",
            r.torsion_free, r.exponent_exactly_p
        );
        for d in r.degrees.iter().filter(|d| d.bp_rank > 0) {
            println!(
                "  degree {:>2}: rank L {:>4}  rank B {:>3}  free {:>3}  torsion {:?}",
                d.degree, d.lie_power_rank, d.bp_rank, d.free_rank, d.torsion
            );
        }
    }
}
