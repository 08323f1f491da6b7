//! Seeded identity checks for every map and the exactness of the
//! metabelian sequence, over weighted alphabets of rank 1 to 3.

use lie_torsion::powers::{check_exactness, check_identity, test_alphabet, Identity};

fn main() {
    println!(
        "{:<20} {:>2} {:>4} {:>8} {:>8} {:>12}",
        "identity", "c", "rank", "checked", "failures", "non-integral"
    );
    for id in Identity::ALL {
        for c in 2..=5 {
            for rank in 1..=3 {
                let r = check_identity(id, c, rank, 50, 11, 8).expect("valid parameters");
                println!(
                    "{:<20} {:>2} {:>4} {:>8} {:>8} {:>12}",
                    id.name(),
                    c,
                    rank,
                    r.checked,
                    r.failures,
                    r.integrality_violations
                );
            }
        }
    }

    for c in 2..=5 {
        for rank in 1..=3 {
            let r = check_exactness(c, &test_alphabet(rank).unwrap(), 8).unwrap();
            println!(
                "exactness c={c} rank={rank}: M {} + A^{c} {} = A⊗A^{} {}  pass {}",
                r.rank_metabelian,
                r.rank_symmetric,
                c - 1,
                r.rank_mixed,
                r.pass
            );
        }
    }
}
