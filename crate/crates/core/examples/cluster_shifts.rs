//! Eigenvalues accumulating at Λ_0 and their leading-order shifts.
use landau_wall::landau::Params;
use landau_wall::spectrum::{cluster, solve_mode, ClusterOptions, Gap, ScalarCondition};
use landau_wall::weyl::WeylSettings;

fn main() -> landau_wall::Result<()> {
    let p = Params::new(1.0, 1.1, -1.0)?;
    let s = WeylSettings::default();
    let records = cluster(&p, 0, ScalarCondition::PaperForm, &s, &ClusterOptions::for_field(1.0))?;
    println!(" m   shift           predicted       ratio");
    for r in &records {
        println!("{:2}  {:.6e}  {:.6e}  {:.6}", r.m, r.shift, r.predicted_shift, r.shift / r.predicted_shift);
    }
    // beyond the default stop rule the mode can still be solved directly
    let r = solve_mode(&p, 20, &Gap::above(1.0, 0), ScalarCondition::PaperForm, &s)?.expect("root");
    println!("m = 20: shift {:.6e}, ratio {:.6}", r.shift, r.shift / r.predicted_shift);
    Ok(())
}
