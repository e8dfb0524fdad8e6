//! Bit-exact CSV emission of sweep rows.

use crate::scenario::SweepRow;
use std::io::{self, Write};

/// The stable output schema. Treated as a golden constant.
pub const CSV_HEADER: &str = "iteration,weather,angle_deg,ground_distance_m,altitude_m,\
gamma_db_km,path_loss_db,weather_excess_db,sinr,spectral_eff_bps_hz,ee_bits_per_joule,\
coverage_radius_m";

/// Write the header and one line per row. Floats use Rust's shortest
/// round-trip formatting; a missing coverage radius is an empty field; the
/// line terminator is a single line feed.
pub fn write_csv<W: Write + ?Sized>(sink: &mut W, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(sink, "{CSV_HEADER}")?;
    for row in rows {
        let coverage = match row.coverage_radius_m {
            Some(r) => r.to_string(),
            None => String::new(),
        };
        writeln!(
            sink,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            row.iteration,
            row.weather,
            row.angle_deg,
            row.ground_distance_m,
            row.altitude_m,
            row.gamma_db_km,
            row.path_loss_db,
            row.weather_excess_db,
            row.sinr,
            row.spectral_eff,
            row.ee_bits_per_joule,
            coverage,
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_row(i: u32) -> SweepRow {
        SweepRow {
            iteration: i,
            weather: "rain".into(),
            angle_deg: 45.0,
            ground_distance_m: 120.0,
            altitude_m: 120.0,
            gamma_db_km: 5.8,
            path_loss_db: 107.67169604714091,
            weather_excess_db: 0.984,
            sinr: 2.5e4,
            spectral_eff: 14.6,
            ee_bits_per_joule: 1.46e7,
            coverage_radius_m: if i % 2 == 0 { Some(321.5) } else { None },
        }
    }

    #[test]
    fn empty_rows_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn line_count_is_rows_plus_header() {
        let rows: Vec<_> = (0..30).map(sample_row).collect();
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 31);
        assert!(!text.contains('\r'));
    }

    #[test]
    fn absent_coverage_is_empty_field() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[sample_row(1)]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(1).unwrap().ends_with(','));
    }

    #[test]
    fn numeric_fields_round_trip() {
        let rows: Vec<_> = (0..10).map(sample_row).collect();
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        for line in text.lines().skip(1) {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields.len(), 12);
            for (i, f) in fields.iter().enumerate() {
                if i == 1 || (i == 11 && f.is_empty()) {
                    continue;
                }
                let v: f64 = f.parse().expect("numeric field");
                assert!(v.is_finite());
            }
        }
        // shortest round-trip: the path loss parses back bit-exact
        let pl: f64 = text.lines().nth(1).unwrap().split(',').nth(6).unwrap().parse().unwrap();
        assert_eq!(pl, 107.67169604714091);
    }
}
