//! Built-in scan grids reproducing the published figures:
//!   fig1 - ground-state C_FS for both models over the full subcritical
//!          charge range Z = 1..68,
//!   fig2 - zeta for the S states n = 1..6 at Z in {10, 19, 37, 55},
//!   fig3 - zeta over (n, l, 0) for n <= 5 at Z = 19 and Z = 55.

use crate::options::RunOptions;
use crate::scan::{KgDensity, Measure, ModelChoice, Point, Row, ScanSpec};
use crate::svg::{line_chart, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartKind {
    CfsVsZ,
    ZetaVsN,
    ZetaVsL,
}

pub fn build(
    name: &str,
    options: RunOptions,
    kg_density: KgDensity,
) -> Result<(ScanSpec, ChartKind), String> {
    let (points, chart) = match name {
        "fig1" => {
            let points = (1..=68)
                .map(|z| Point {
                    z: z as f64,
                    n: 1,
                    l: 0,
                    m: 0,
                })
                .collect();
            (points, ChartKind::CfsVsZ)
        }
        "fig2" => {
            let mut points = Vec::new();
            for z in [10.0, 19.0, 37.0, 55.0] {
                for n in 1..=6u32 {
                    points.push(Point { z, n, l: 0, m: 0 });
                }
            }
            (points, ChartKind::ZetaVsN)
        }
        "fig3" => {
            let mut points = Vec::new();
            for z in [19.0, 55.0] {
                for n in 1..=5u32 {
                    for l in 0..n {
                        points.push(Point { z, n, l, m: 0 });
                    }
                }
            }
            (points, ChartKind::ZetaVsL)
        }
        other => return Err(format!("unknown preset '{other}' (expected fig1, fig2 or fig3)")),
    };
    Ok((
        ScanSpec {
            points,
            models: ModelChoice::Both,
            measures: Measure::all(),
            kg_density,
            options,
        },
        chart,
    ))
}

pub fn chart(kind: ChartKind, rows: &[Row]) -> String {
    match kind {
        ChartKind::CfsVsZ => {
            let mut kg = Vec::new();
            let mut sch = Vec::new();
            for r in rows {
                if let Some(c) = r.c_fs {
                    if r.model.starts_with("KG") {
                        kg.push((r.z, c));
                    } else {
                        sch.push((r.z, c));
                    }
                }
            }
            line_chart(
                "Ground-state Fisher-Shannon complexity",
                "nuclear charge Z",
                "C_FS",
                &[
                    Series {
                        label: "KG".into(),
                        points: kg,
                    },
                    Series {
                        label: "SCH".into(),
                        points: sch,
                    },
                ],
            )
        }
        ChartKind::ZetaVsN => {
            let mut by_z: Vec<(f64, Vec<(f64, f64)>)> = Vec::new();
            for r in rows {
                if let Some(zeta) = r.zeta_fs {
                    match by_z.iter_mut().find(|(z, _)| *z == r.z) {
                        Some((_, pts)) => pts.push((r.n as f64, zeta)),
                        None => by_z.push((r.z, vec![(r.n as f64, zeta)])),
                    }
                }
            }
            let series: Vec<Series> = by_z
                .into_iter()
                .map(|(z, points)| Series {
                    label: format!("Z = {z}"),
                    points,
                })
                .collect();
            line_chart(
                "Relative Fisher-Shannon ratio for S states",
                "principal quantum number n",
                "zeta_FS",
                &series,
            )
        }
        ChartKind::ZetaVsL => {
            let mut series: Vec<Series> = Vec::new();
            for r in rows {
                if let Some(zeta) = r.zeta_fs {
                    let label = format!("Z = {}, n = {}", r.z, r.n);
                    match series.iter_mut().find(|s| s.label == label) {
                        Some(s) => s.points.push((r.l as f64, zeta)),
                        None => series.push(Series {
                            label,
                            points: vec![(r.l as f64, zeta)],
                        }),
                    }
                }
            }
            line_chart(
                "Relative Fisher-Shannon ratio over (n, l, 0)",
                "orbital quantum number l",
                "zeta_FS",
                &series,
            )
        }
    }
}

/// Chart for ad-hoc scans: zeta against Z when present, else C_FS against Z.
pub fn scan_chart(rows: &[Row]) -> Result<String, String> {
    let has_zeta = rows.iter().any(|r| r.zeta_fs.is_some());
    if has_zeta {
        let mut series: Vec<Series> = Vec::new();
        for r in rows {
            if let Some(z) = r.zeta_fs {
                let label = format!("n={}, l={}, m={}", r.n, r.l, r.m);
                match series.iter_mut().find(|s| s.label == label) {
                    Some(s) => s.points.push((r.z, z)),
                    None => series.push(Series {
                        label,
                        points: vec![(r.z, z)],
                    }),
                }
            }
        }
        Ok(line_chart(
            "Relative Fisher-Shannon ratio",
            "nuclear charge Z",
            "zeta_FS",
            &series,
        ))
    } else {
        let mut series: Vec<Series> = Vec::new();
        for r in rows {
            if let Some(c) = r.c_fs {
                let label = format!("{} n={}, l={}, m={}", r.model, r.n, r.l, r.m);
                match series.iter_mut().find(|s| s.label == label) {
                    Some(s) => s.points.push((r.z, c)),
                    None => series.push(Series {
                        label,
                        points: vec![(r.z, c)],
                    }),
                }
            }
        }
        if series.is_empty() {
            return Err("no finite C_FS values to plot".into());
        }
        Ok(line_chart(
            "Fisher-Shannon complexity",
            "nuclear charge Z",
            "C_FS",
            &series,
        ))
    }
}
