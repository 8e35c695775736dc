//! Lowest bound state below Λ_0 as the field is switched on.
use landau_wall::oracle::small_b_track;

fn main() -> landau_wall::Result<()> {
    let grid: Vec<f64> = (1..=20).map(|i| 0.01 * f64::from(i)).collect();
    let track = small_b_track(1.1, -1.0, 0, &grid)?;
    println!("E(0) = {:?}", track.e0);
    for pt in &track.points {
        println!("B = {:.2}  E = {:?}", pt.b, pt.energy);
    }
    println!("E ≈ {:.6} + {:.6} B², min rise {:.3e}", track.intercept, track.quadratic, track.min_rise);
    Ok(())
}
