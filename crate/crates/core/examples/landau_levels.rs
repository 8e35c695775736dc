//! Landau levels, boundary coefficients and the resonance index.
use landau_wall::landau::{
    boundary_coeff, boundary_coeff_asymptotic, cyclotron_radius, landau_level, peak_radius, resonance_index,
};

fn main() {
    let (b, a) = (1.0, 1.1);
    for n in 0..4 {
        println!("Λ_{n} = {}  (cyclotron radius {:.4})", landau_level(b, n), cyclotron_radius(b, n));
    }
    println!("\n m   c_0m            c_1m            c_1m / asymptotic");
    for m in [0, 1, 2, 5, 10, 20, 40] {
        let c0 = boundary_coeff(b, a, 0, m);
        let c1 = boundary_coeff(b, a, 1, m);
        let ratio = c1.div(boundary_coeff_asymptotic(b, a, 1, m)).to_real();
        println!("{m:3}  {:.6e}  {:.6e}  {ratio:.6}", c0.to_real(), c1.to_real());
    }
    let res = resonance_index(1.0, 3.0, 0);
    println!("\nresonance index at a = 3: {} (nearest {})", res.value, res.nearest);
    for m in [3, 4] {
        println!("peak of 2πr|ψ_0,{m}|²: r = {:.6}", peak_radius(1.0, 0, m));
    }
}
