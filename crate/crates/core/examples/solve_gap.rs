//! One eigenvalue per mode and gap, under both forms of the scalar condition.
use landau_wall::landau::Params;
use landau_wall::spectrum::{solve_mode, Gap, ScalarCondition};
use landau_wall::weyl::WeylSettings;

fn main() -> landau_wall::Result<()> {
    let p = Params::new(1.0, 1.1, -1.0)?;
    let s = WeylSettings::default();
    for cond in [ScalarCondition::PaperForm, ScalarCondition::BirmanSchwinger] {
        println!("{cond} form");
        for gap in [Gap::below_lowest(1.0), Gap::above(1.0, 0), Gap::above(1.0, 1)] {
            for m in 0..4 {
                match solve_mode(&p, m, &gap, cond, &s)? {
                    Some(r) => println!(
                        "  gap {:2}  m = {m}  E = {:.12}  residual {:.1e}",
                        gap.n_gap, r.energy, r.residual
                    ),
                    None => println!("  gap {:2}  m = {m}  no eigenvalue", gap.n_gap),
                }
            }
        }
    }
    Ok(())
}
