use landau_wall::landau::Params;
use landau_wall::oracle::*;
use landau_wall::spectrum::{Gap, ScalarCondition};
use landau_wall::weyl::WeylSettings;

#[test]
fn second_order_convergence() {
    let a = 1.1;
    for (alpha, m, lo, hi) in [(-1.0, 0, 1.0, 3.0), (-1.0, 2, 1.0, 3.0), (0.0, 1, 0.5, 1.5), (-1.0, 0, -2.0, 1.0)] {
        let g1 = OracleGrid::with_spacing(a, 0.02, 16.0).unwrap();
        let g2 = g1.refined(a).unwrap();
        let g3 = g2.refined(a).unwrap();
        let e: Vec<f64> = [g1, g2, g3]
            .iter()
            .map(|g| eigenvalues_in(&build_channel_raw(1.0, a, alpha, m, g).unwrap(), lo, hi)[0])
            .collect();
        let d1 = (e[0] - e[1]) / (g1.h * g1.h - g2.h * g2.h);
        let d2 = (e[1] - e[2]) / (g2.h * g2.h - g3.h * g3.h);
        // equal slopes in h² mean second order; the raw difference ratio is then ≈ 4
        assert!((d1 / d2 - 1.0).abs() < 0.05, "α={alpha} m={m}: {e:?}");
        assert!((e[0] - e[1]).abs() / (e[1] - e[2]).abs() >= 3.5);
    }
}

#[test]
fn jump_condition_at_the_wall() {
    let a = 1.1;
    let alpha = -1.0;
    let grid = OracleGrid::with_spacing(a, 0.002, 16.0).unwrap();
    let mat = build_channel_raw(1.0, a, alpha, 0, &grid).unwrap();
    let e = eigenvalues_in(&mat, 1.0, 3.0)[0];
    let u = radial_eigenvector(&mat, e);
    let i = grid.wall_index - 1;
    let jump = ((u[i + 1] - u[i]) - (u[i] - u[i - 1])) / grid.h;
    assert!(((jump - alpha * u[i]) / (alpha * u[i])).abs() < 0.02, "{jump} vs {}", alpha * u[i]);
}

#[test]
fn free_operator_has_an_empty_gap() {
    let p = Params::new(1.0, 1.1, 0.0).unwrap();
    let grid = OracleGrid::default_for(&p, 1).unwrap();
    for m in -3..=3 {
        let mat = build_channel(&p, m, &grid).unwrap();
        assert!(eigenvalues_in(&mat, 1.05, 2.95).is_empty(), "m={m}");
    }
}

#[test]
fn free_levels_recovered() {
    let p = Params::new(1.0, 1.1, 0.0).unwrap();
    let grid = OracleGrid::default_for(&p, 1).unwrap();
    for m in 0..4 {
        let ev = lowest_extrapolated(1.0, 1.1, 0.0, m, &grid, 2).unwrap();
        assert!((ev[0] - 1.0).abs() < 5e-3 && (ev[1] - 3.0).abs() < 5e-3);
    }
    // negative m starts at Λ_{|m|}
    let ev = lowest_extrapolated(1.0, 1.1, 0.0, -2, &grid, 1).unwrap();
    assert!((ev[0] - 5.0).abs() < 5e-3);
}

#[test]
fn audit_is_deterministic_and_decisive() {
    let p = Params::new(1.0, 1.1, -1.0).unwrap();
    let gap = Gap::above(1.0, 0);
    let one = channel_audit(&p, &[0, 1, 2, -2], &gap, &WeylSettings::default(), 5e-3).unwrap();
    let two = channel_audit(&p, &[0, 1, 2, -2], &gap, &WeylSettings::default(), 5e-3).unwrap();
    assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&two).unwrap());
    assert_eq!(one.matching_form, None, "both forms place a root for m = −2 where the channel has none");
    let plus = channel_audit(&p, &[0, 1, 2], &gap, &WeylSettings::default(), 5e-3).unwrap();
    assert_eq!(plus.matching_form, Some(ScalarCondition::BirmanSchwinger));
    let m1 = &plus.modes[1];
    assert!(m1.mirror_diff.unwrap() > 0.1, "channels ±1 differ in the full problem");
}

#[test]
fn small_field_rises_quadratically() {
    let grid: Vec<f64> = (1..=4).map(|i| 0.05 * f64::from(i)).collect();
    let t = small_b_track(1.1, -1.0, 0, &grid).unwrap();
    let e0 = t.e0.unwrap();
    assert!(e0 < 0.0);
    assert!(t.points.iter().all(|p| p.energy.unwrap() > e0));
    assert_eq!(t.evenness, 0.0);
    assert!(t.quadratic > 0.0);
    assert!(small_b_track(1.1, 1.0, 0, &grid).is_err());
}

#[test]
fn negative_channel_verdict() {
    let p = Params::new(1.0, 1.1, -1.0).unwrap();
    let r = channel_audit(&p, &[-2], &Gap::above(1.0, 0), &WeylSettings::default(), 5e-3).unwrap();
    assert!(r.modes[0].oracle.extrapolated.is_empty());
    assert_eq!(r.modes[0].verdict, Verdict::Neither);
}
