//! The weighted Hardy–Hille identity for Σ_n c_{n,m} tⁿ.
use landau_wall::landau::hardy_hille_sum;
use landau_wall::weyl::WeylSettings;

fn main() -> landau_wall::Result<()> {
    let s = WeylSettings::default();
    for t in [0.3, 0.5, 0.7] {
        for m in [0, 1, 4] {
            let rule = hardy_hille_sum(1.0, 1.1, m, t, &s)?;
            println!(
                "t = {t}, m = {m}: series {:.15e}  closed {:.15e}  rel err {:.1e}  ({} terms)",
                rule.series,
                rule.closed_form,
                rule.relative_error(),
                rule.n_used
            );
        }
    }
    Ok(())
}
