//! Wall radii where a boundary coefficient vanishes, and the embedded-kernel count.
use landau_wall::landau::boundary_coeff;
use landau_wall::spectrum::{embedded_kernel_dim, special_radii};

fn main() -> landau_wall::Result<()> {
    for (n, m) in [(1, 0), (2, 0), (3, 2)] {
        for a in special_radii(1.0, n, m) {
            println!("n = {n}, m = {m}: a = {a:.15}  c = {:.2e}", boundary_coeff(1.0, a, n, m).to_real());
        }
    }
    for a in [1.0, 2.0_f64.sqrt(), 2.0] {
        println!("kernel dimension at Λ_1, a = {a:.6}: {}", embedded_kernel_dim(1.0, a, 1, 1e-10, 100)?);
    }
    Ok(())
}
