//! Torsion of the augmentation quotients for p = 2, 3, 5, with the
//! explicit order-p elements checked in every degree.

use lie_torsion::torsion::torsion_report;

fn main() {
    for (p, max_degree) in [(2, 10), (3, 11), (5, 12)] {
        let table = torsion_report(p, max_degree);
        println!("p = {p}");
        for r in &table.degrees {
            let theorem = r
                .theorem
                .as_ref()
                .map(|t| format!("elements {} pass {}", t.count, t.pass()))
                .unwrap_or_default();
            println!(
                "  degree {:>2}: rank {:>4}  free {:>4}  torsion {:?}  {}",
                r.degree, r.lie_power_rank, r.free_rank, r.torsion, theorem
            );
        }
    }
}
