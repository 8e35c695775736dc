//! Normalised radial profile of a wall-bound state.
use landau_wall::landau::Params;
use landau_wall::spectrum::{solve_mode, BoundStateProfile, Gap, ScalarCondition};
use landau_wall::weyl::WeylSettings;

fn main() -> landau_wall::Result<()> {
    let a = 3.0_f64.sqrt();
    let p = Params::new(1.0, a, -3.0)?;
    let s = WeylSettings::default();
    let rec = solve_mode(&p, 1, &Gap::below_lowest(1.0), ScalarCondition::BirmanSchwinger, &s)?.expect("bound state");
    let prof = BoundStateProfile::from_record(&p, &rec, &s)?;
    println!("E = {:.12}, norm of the raw profile {:.6}", rec.energy, prof.norm);
    for i in 0..=16 {
        let r = 0.25 * f64::from(i);
        println!("r = {r:5.2}  w = {:+.8}", prof.at(r)?);
    }
    let d = 1e-5;
    let slope = |x: f64, y: f64| -> landau_wall::Result<f64> { Ok((prof.raw(y)? - prof.raw(x)?) / (y - x)) };
    let jump = slope(a, a + d)? - slope(a - d, a)?;
    println!("derivative jump {jump:.6}, α·w(a) = {:.6}", p.alpha * prof.raw(a)?);
    Ok(())
}
