//! CSV data for drawing a root system: real roots, imaginary lattice points and
//! samples of the conics on which the real roots lie.

use std::io::Write;

use anyhow::Result;
use num_traits::{Signed, ToPrimitive};

use rank2km::roots::{coords, is_long, real_roots};
use rank2km::CartanData;

/// Largest half-width of the box scanned for imaginary roots.
const MAX_BOX: i64 = 500;

pub fn write(cd: &CartanData, max_index: i64, samples: usize, out: &mut impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y", "kind"])?;
    let mut extent = 1i64;
    for r in real_roots(max_index) {
        let v = coords(cd, r);
        let kind = if is_long(cd, r) { "long_root" } else { "short_root" };
        w.write_record([v.x.to_string(), v.y.to_string(), kind.to_string()])?;
        let m = v.x.abs().max(v.y.abs()).to_i64().unwrap_or(i64::MAX);
        extent = extent.max(m.min(MAX_BOX));
    }
    let (a, b) = (cd.a(), cd.b());
    for x in -extent..=extent {
        for y in -extent..=extent {
            let q = a * x * x - a * b * x * y + b * y * y;
            if q <= 0 && (x, y) != (0, 0) {
                w.write_record([x.to_string(), y.to_string(), "imaginary_root".to_string()])?;
            }
        }
    }
    let mut curves = vec![("long_curve", a.max(b))];
    if a != b {
        curves.push(("short_curve", a.min(b)));
    }
    let (af, bf, e) = (a as f64, b as f64, extent as f64);
    for (kind, level) in curves {
        for i in 0..samples {
            let x = if samples == 1 { 0.0 } else { -e + 2.0 * e * i as f64 / (samples - 1) as f64 };
            // b y² - ab x y + (a x² - level) = 0
            let disc = (af * bf * x).powi(2) - 4.0 * bf * (af * x * x - level as f64);
            if disc < 0.0 {
                continue;
            }
            for s in [-1.0, 1.0] {
                let y = (af * bf * x + s * disc.sqrt()) / (2.0 * bf);
                w.write_record([format!("{x:.6}"), format!("{y:.6}"), kind.to_string()])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
