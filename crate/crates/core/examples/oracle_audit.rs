//! Finite-volume oracle against both forms of the scalar condition.
use landau_wall::landau::Params;
use landau_wall::oracle::{channel_audit, lowest_extrapolated, OracleGrid};
use landau_wall::spectrum::Gap;
use landau_wall::weyl::WeylSettings;

fn main() -> landau_wall::Result<()> {
    let free = Params::new(1.0, 1.1, 0.0)?;
    let grid = OracleGrid::default_for(&free, 1)?;
    for m in 0..4 {
        println!("α = 0, m = {m}: {:?}", lowest_extrapolated(1.0, 1.1, 0.0, m, &grid, 2)?);
    }
    let p = Params::new(1.0, 1.1, -1.0)?;
    let rep = channel_audit(&p, &[0, 1, 2, 3, 4, 5], &Gap::above(1.0, 0), &WeylSettings::default(), 5e-3)?;
    for m in &rep.modes {
        println!(
            "m = {}: oracle {:?}  paper {:?}  bs {:?}  -> {:?}",
            m.m, m.oracle.extrapolated, m.paper_root, m.bs_root, m.verdict
        );
    }
    println!("matching form: {:?}", rep.matching_form);
    Ok(())
}
