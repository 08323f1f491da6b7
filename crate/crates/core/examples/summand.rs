//! Splitting of `T^p(V)` over `F_p` into `W` and the image of `beta`,
//! with `B^p(V)` inside `W`.

use lie_torsion::charp::check_summand;

fn main() -> Result<(), lie_torsion::Error> {
    for (p, dim) in [(2, 2), (2, 4), (3, 2), (3, 3), (5, 2)] {
        let r = check_summand(p, dim)?;
        println!(
            "p = {p}, dim V = {dim}: T {:>3} = W {:>3} + Im beta {:>3}; Ker alpha {:>3}; B^p {:>2}; pass {}",
            r.tensor_dim, r.w_dim, r.im_beta_dim, r.ker_alpha_dim, r.bp_dim, r.pass
        );
        for t in r.types.iter().filter(|t| t.sigma_rank.is_some()) {
            println!(
                "    type {:?}: {} elements, sigma rank {}",
                t.kind,
                t.size,
                t.sigma_rank.unwrap()
            );
        }
    }
    Ok(())
}
