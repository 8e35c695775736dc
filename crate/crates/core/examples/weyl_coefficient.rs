//! The Weyl coefficient μ_m(E), its derivative, the regular remainder and the pole residue.
use landau_wall::landau::Params;
use landau_wall::weyl::{h_remainder, mu, mu_complex, mu_derivative, pole_residue, WeylSettings};
use num_complex::Complex64;

fn main() -> landau_wall::Result<()> {
    let p = Params::new(1.0, 1.1, -1.0)?;
    let s = WeylSettings::default();
    println!("    E        μ_0(E)           μ_0'(E)        terms");
    for e in [-5.0, 0.0, 0.9, 1.1, 2.0, 2.9, 3.1] {
        let v = mu(&p, 0, e, &s)?;
        let d = mu_derivative(&p, 0, e, &s)?;
        println!("{e:6.2}  {:15.10}  {:13.6e}  {}", v.value, d.value, v.n_used);
    }
    let z = mu_complex(&p, 0, Complex64::new(2.0, 0.1), &s)?;
    println!("\nμ_0(2 + 0.1i) = {:.12}", z.value);
    for m in [0, 5, 20, 60] {
        println!("h_0,{m}(Λ_0) = {:.6e}", h_remainder(&p, m, 0, 1.0, &s)?.value);
    }
    let r = pole_residue(&p, 2, 1, &s)?;
    println!("\nresidue at Λ_1, m = 2: c = {:.12e}, extrapolated {:.12e}", r.coefficient, r.extrapolated);
    Ok(())
}
