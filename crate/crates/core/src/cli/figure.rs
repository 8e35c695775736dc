//! Data files for the three published figures.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde_json::json;

use super::svg::{render, Series};
use super::table::Table;
use super::{write_file, CliResult, Format, RunConfig};
use crate::landau::{eigenfunction_radial, heuristic_radius, peak_radius, radial_probability, resonance_index, Params};
use crate::spectrum::{solve_mode_with, BoundStateProfile, EigenvalueRecord, Gap, ScalarCondition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureName {
    EigGap,
    FreeVsWall,
    Resonance,
}

pub const EIG_GAP_ALPHAS: [f64; 3] = [-0.5, -1.0, -1.5];
const EIG_GAP_M_MAX: i32 = 40;

fn save(cfg: &RunConfig, dir: &Path, stem: &str, table: &Table, out: &mut Vec<PathBuf>) -> CliResult<()> {
    let (ext, text) = match cfg.format {
        Format::Csv => ("csv", table.to_csv()),
        Format::Json => ("json", table.to_json(stem)),
    };
    let path = dir.join(format!("{stem}.{ext}"));
    write_file(&path, &text)?;
    out.push(path);
    Ok(())
}

fn save_svg(dir: &Path, stem: &str, svg: String, out: &mut Vec<PathBuf>) -> CliResult<()> {
    let path = dir.join(format!("{stem}.svg"));
    write_file(&path, &svg)?;
    out.push(path);
    Ok(())
}

/// Write the data of figure `name` into `dir` and return the written paths.
pub fn cmd_figure(cfg: &RunConfig, name: FigureName, dir: &Path, svg: bool) -> CliResult<Vec<PathBuf>> {
    let mut out = Vec::new();
    match name {
        FigureName::EigGap => eig_gap(cfg, dir, svg, &mut out)?,
        FigureName::FreeVsWall => free_vs_wall(cfg, dir, svg, &mut out)?,
        FigureName::Resonance => resonance(cfg, dir, svg, &mut out)?,
    }
    Ok(out)
}

fn eig_gap(cfg: &RunConfig, dir: &Path, svg: bool, out: &mut Vec<PathBuf>) -> CliResult<()> {
    let settings = cfg.settings()?;
    let opts = cfg.solve_options()?;
    let gap = Gap::above(1.0, 0);
    let mut series = Vec::new();
    for alpha in EIG_GAP_ALPHAS {
        let p = Params::new(1.0, 1.1, alpha)?;
        let mut t = Table::new(&["m", "E", "reference_level", "shift", "n_used", "residual"]);
        let mut pts = Vec::new();
        for m in 0..=EIG_GAP_M_MAX {
            let Some(r) = solve_mode_with(&p, m, &gap, cfg.condition, &settings, &opts)? else {
                continue;
            };
            if r.shift.abs() < 1e-13 {
                break;
            }
            t.push(vec![
                m.into(),
                r.energy.into(),
                r.reference_level.into(),
                r.shift.into(),
                r.n_used.into(),
                r.residual.into(),
            ]);
            pts.push((f64::from(m), r.energy));
        }
        t.meta("B", 1.0);
        t.meta("a", 1.1);
        t.meta("alpha", alpha);
        t.meta("condition", cfg.condition);
        t.meta("gap", gap);
        save(cfg, dir, &format!("eig-gap_alpha{alpha:+.1}"), &t, out)?;
        series.push(Series {
            label: format!("α = {alpha}"),
            points: pts,
        });
    }
    if svg {
        let title = format!("Eigenvalues in (Λ0, Λ1), B = 1, a = 1.1, {} form", cfg.condition);
        save_svg(dir, "eig-gap", render(&title, "m", "E", &series, true), out)?;
    }
    Ok(())
}

/// Lowest root of mode `m` scanning upward from below `Λ_0`.
fn lowest_root(p: &Params, m: i32, cond: ScalarCondition, cfg: &RunConfig) -> CliResult<Option<EigenvalueRecord>> {
    let settings = cfg.settings()?;
    let opts = cfg.solve_options()?;
    let mut gaps = vec![Gap::below_lowest(p.b)];
    gaps.extend((0..4).map(|n| Gap::above(p.b, n)));
    for gap in &gaps {
        if let Some(r) = solve_mode_with(p, m, gap, cond, &settings, &opts)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

fn radial_samples(r_max: f64, points: usize, extra: &[f64]) -> Vec<f64> {
    let mut rs: Vec<f64> = (0..points).map(|i| r_max * i as f64 / (points - 1) as f64).collect();
    rs.extend_from_slice(extra);
    rs.sort_by(f64::total_cmp);
    rs.dedup();
    rs
}

fn argmax(points: &[(f64, f64)]) -> f64 {
    points
        .iter()
        .copied()
        .fold((f64::NAN, f64::NEG_INFINITY), |best, (r, v)| if v > best.1 { (r, v) } else { best })
        .0
}

fn free_vs_wall(cfg: &RunConfig, dir: &Path, svg: bool, out: &mut Vec<PathBuf>) -> CliResult<()> {
    let (b, a, alpha, m) = (1.0, 3.0_f64.sqrt(), -3.0, 1);
    let p = Params::new(b, a, alpha)?;
    let rs = radial_samples(a + 6.0, 401, &[a]);
    let mut series = Vec::new();

    let mut free = Table::new(&["r", "value"]);
    let mut free_pts = Vec::new();
    for &r in &rs {
        let v = eigenfunction_radial(b, 0, m, r);
        free.push(vec![r.into(), v.into()]);
        free_pts.push((r, v));
    }
    free.meta("B", b);
    free.meta("n", 0);
    free.meta("m", m);
    save(cfg, dir, "free-vs-wall_free", &free, out)?;
    let mut summary = json!({ "B": b, "a": a, "alpha": alpha, "m": m, "free_argmax": argmax(&free_pts) });
    series.push(Series {
        label: "free ψ(0,1)".into(),
        points: free_pts,
    });

    let settings = cfg.settings()?;
    for (cond, stem) in [
        (ScalarCondition::PaperForm, "free-vs-wall_wall-paper"),
        (ScalarCondition::BirmanSchwinger, "free-vs-wall_wall-bs"),
    ] {
        let Some(rec) = lowest_root(&p, m, cond, cfg)? else {
            summary[cond.to_string()] = json!(null);
            continue;
        };
        let prof = BoundStateProfile::from_record(&p, &rec, &settings)?;
        let sign = prof.raw(a)?.signum();
        let mut t = Table::new(&["r", "value"]);
        let mut pts = Vec::new();
        for &r in &rs {
            let v = sign * prof.at(r)?;
            t.push(vec![r.into(), v.into()]);
            pts.push((r, v));
        }
        t.meta("B", b);
        t.meta("a", a);
        t.meta("alpha", alpha);
        t.meta("m", m);
        t.meta("condition", cond);
        t.meta("E", rec.energy);
        t.meta("n_gap", rec.n_gap);
        t.meta("n_used", rec.n_used);
        save(cfg, dir, stem, &t, out)?;
        summary[cond.to_string()] = json!({ "E": rec.energy, "n_gap": rec.n_gap, "argmax": argmax(&pts) });
        series.push(Series {
            label: format!("wall, {cond} form, E = {:.4}", rec.energy),
            points: pts,
        });
    }
    let path = dir.join("free-vs-wall.json");
    write_file(&path, &(serde_json::to_string_pretty(&summary).unwrap_or_default() + "\n"))?;
    out.push(path);
    if svg {
        let title = "Free (α = 0) vs wall (α = −3), B = 1, a = √3, m = 1";
        save_svg(dir, "free-vs-wall", render(title, "r", "radial profile", &series, false), out)?;
    }
    Ok(())
}

fn resonance(cfg: &RunConfig, dir: &Path, svg: bool, out: &mut Vec<PathBuf>) -> CliResult<()> {
    let (b, a, n) = (1.0, 3.0, 0);
    let mut series = Vec::new();
    let mut peaks = serde_json::Map::new();
    for m in [3, 4] {
        let peak = peak_radius(b, n, m);
        let rs = radial_samples(8.0, 1601, &[peak]);
        let top = radial_probability(b, n, m, peak);
        let mut t = Table::new(&["r", "value"]);
        let mut pts = Vec::new();
        for &r in &rs {
            let v = radial_probability(b, n, m, r) / top;
            t.push(vec![r.into(), v.into()]);
            pts.push((r, v));
        }
        t.meta("B", b);
        t.meta("n", n);
        t.meta("m", m);
        t.meta("peak_radius", peak);
        save(cfg, dir, &format!("resonance_m{m}"), &t, out)?;
        peaks.insert(
            format!("m{m}"),
            json!({ "argmax": argmax(&pts), "peak_radius": peak, "heuristic_radius": heuristic_radius(b, m) }),
        );
        series.push(Series {
            label: format!("n = 0, m = {m}"),
            points: pts,
        });
    }
    let res = resonance_index(b, a, n);
    let summary = json!({
        "B": b,
        "a": a,
        "resonance_index": res.value,
        "resonance_nearest": res.nearest,
        "peaks": peaks,
        "convention": "peak = argmax of 2πr|ψ|², equal to sqrt((2|m|+1)/B) for n = 0",
    });
    let path = dir.join("resonance.json");
    write_file(&path, &(serde_json::to_string_pretty(&summary).unwrap_or_default() + "\n"))?;
    out.push(path);
    if svg {
        let title = "Radial probability (n = 0, m = 3, 4), B = 1, wall at a = 3";
        save_svg(dir, "resonance", render(title, "r", "2πr|ψ|² (unit peak)", &series, false), out)?;
    }
    Ok(())
}
