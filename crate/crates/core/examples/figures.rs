//! Writes the data (and SVG renderings) of the three figures into `figures/`.
use std::path::Path;

use landau_wall::cli::{cmd_figure, FigureName, RunConfig};

fn main() {
    let cfg = RunConfig::default();
    for name in [FigureName::EigGap, FigureName::FreeVsWall, FigureName::Resonance] {
        match cmd_figure(&cfg, name, Path::new("figures"), true) {
            Ok(paths) => paths.iter().for_each(|p| println!("{}", p.display())),
            Err(e) => {
                eprintln!("{e}");
                std::process::exit(e.exit_code());
            }
        }
    }
}
