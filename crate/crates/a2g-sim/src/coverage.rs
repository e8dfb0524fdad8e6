//! Coverage-radius and optimal-altitude solving under a path-loss budget.
//!
//! The cell edge is the largest ground distance r at which the A2G path loss
//! stays within `pl_max_db`. Path loss is monotone increasing in r for the
//! supported parameter regimes, so the edge is found by bracketing plus
//! bisection; the altitude that maximizes the radius is found by a grid scan
//! refined with golden-section search.

use crate::channel::{path_loss, ChannelParams, LinkGeometry};
use crate::error::ModelError;

/// Radius search is capped at 100 km.
pub const RADIUS_BRACKET_MAX_M: f64 = 100_000.0;

/// A budget-constrained coverage problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageProblem {
    pub channel: ChannelParams,
    /// Weather specific attenuation γ in dB/km.
    pub gamma_db_km: f64,
    /// Maximum tolerable path loss in dB.
    pub pl_max_db: f64,
    /// Altitude search range [h_min, h_max] in m.
    pub altitude_range: (f64, f64),
    /// Radius solve tolerance in m.
    pub tolerance_m: f64,
}

impl CoverageProblem {
    pub fn new(
        channel: ChannelParams,
        gamma_db_km: f64,
        pl_max_db: f64,
        altitude_range: (f64, f64),
        tolerance_m: f64,
    ) -> Result<Self, ModelError> {
        if !(gamma_db_km >= 0.0) {
            return Err(ModelError::Domain {
                param: "gamma_db_km",
                value: gamma_db_km,
                requirement: "weather attenuation must be >= 0 dB/km",
            });
        }
        if !(pl_max_db > 0.0) {
            return Err(ModelError::Domain {
                param: "pl_max_db",
                value: pl_max_db,
                requirement: "path-loss budget must be > 0 dB",
            });
        }
        let (h_min, h_max) = altitude_range;
        if !(h_min >= 0.0 && h_min <= h_max) {
            return Err(ModelError::Domain {
                param: "altitude_range",
                value: h_min,
                requirement: "requires 0 <= h_min <= h_max",
            });
        }
        if !(tolerance_m > 0.0) {
            return Err(ModelError::Domain {
                param: "tolerance_m",
                value: tolerance_m,
                requirement: "tolerance must be > 0 m",
            });
        }
        Ok(Self {
            channel,
            gamma_db_km,
            pl_max_db,
            altitude_range,
            tolerance_m,
        })
    }
}

/// The altitude/radius pair returned by [`optimal_altitude`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageSolution {
    pub altitude_m: f64,
    pub radius_m: f64,
    pub path_loss_at_edge_db: f64,
}

fn pl_at(h: f64, r: f64, prob: &CoverageProblem) -> Result<f64, ModelError> {
    let geom = LinkGeometry::new(h, r)?;
    path_loss(&geom, &prob.channel, prob.gamma_db_km)
}

/// Largest ground distance r with path_loss(h, r) <= pl_max, or `None` when
/// even the nadir point exceeds the budget.
pub fn coverage_radius(h: f64, prob: &CoverageProblem) -> Result<Option<f64>, ModelError> {
    let (h_min, h_max) = prob.altitude_range;
    if !(h >= h_min && h <= h_max) {
        return Err(ModelError::Domain {
            param: "h",
            value: h,
            requirement: "altitude must lie within the problem's altitude_range",
        });
    }
    // r = 0 is valid geometry for h > 0; at h = 0 start a tolerance off nadir.
    let r_lo = if h > 0.0 { 0.0 } else { prob.tolerance_m };
    if pl_at(h, r_lo, prob)? > prob.pl_max_db {
        return Ok(None);
    }
    if pl_at(h, RADIUS_BRACKET_MAX_M, prob)? <= prob.pl_max_db {
        return Ok(Some(RADIUS_BRACKET_MAX_M));
    }

    // Invariant: PL(lo) <= pl_max < PL(hi).
    let mut lo = r_lo;
    let mut hi = RADIUS_BRACKET_MAX_M;
    while hi - lo > prob.tolerance_m {
        let mid = 0.5 * (lo + hi);
        if pl_at(h, mid, prob)? <= prob.pl_max_db {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Probe beyond the crossing; a feasible point past it means the loss is
    // not monotone and the bisection answer is not the largest radius.
    let mut probe = hi.max(prob.tolerance_m) * 2.0;
    while probe < RADIUS_BRACKET_MAX_M {
        if pl_at(h, probe, prob)? <= prob.pl_max_db {
            return Err(ModelError::NonMonotone { altitude_m: h });
        }
        probe *= 4.0;
    }

    Ok(Some(lo))
}

/// Grid-scan the altitude range for the radius-maximizing altitude, then
/// refine around the argmax with golden-section search. Ties go to the lowest
/// altitude.
pub fn optimal_altitude(
    prob: &CoverageProblem,
    grid_step_m: f64,
) -> Result<CoverageSolution, ModelError> {
    let (h_min, h_max) = prob.altitude_range;
    if h_min == h_max {
        return match coverage_radius(h_min, prob)? {
            Some(r) => Ok(CoverageSolution {
                altitude_m: h_min,
                radius_m: r,
                path_loss_at_edge_db: pl_at(h_min, r, prob)?,
            }),
            None => Err(ModelError::AllInfeasible),
        };
    }
    if !(grid_step_m > 0.0 && grid_step_m < h_max - h_min) {
        return Err(ModelError::Domain {
            param: "grid_step_m",
            value: grid_step_m,
            requirement: "grid step must be > 0 and smaller than the altitude range",
        });
    }

    let mut best: Option<(f64, f64)> = None; // (altitude, radius)
    let mut h = h_min;
    loop {
        if let Some(r) = coverage_radius(h, prob)? {
            let replace = match best {
                None => true,
                Some((_, r_best)) => r > r_best, // ascending scan keeps ties low
            };
            if replace {
                best = Some((h, r));
            }
        }
        if h >= h_max {
            break;
        }
        h = (h + grid_step_m).min(h_max);
    }
    let (h_star, r_star) = best.ok_or(ModelError::AllInfeasible)?;

    // Golden-section refinement on [h* - step, h* + step] clipped to range.
    let radius_of = |h: f64| -> Result<f64, ModelError> {
        Ok(coverage_radius(h, prob)?.unwrap_or(-1.0))
    };
    let mut a = (h_star - grid_step_m).max(h_min);
    let mut b = (h_star + grid_step_m).min(h_max);
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = radius_of(x1)?;
    let mut f2 = radius_of(x2)?;
    while b - a > prob.tolerance_m {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = radius_of(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = radius_of(x2)?;
        }
    }
    let (h_ref, r_ref) = if f1 > f2 { (x1, f1) } else { (x2, f2) };

    let (alt, radius) = if r_ref > r_star || (r_ref == r_star && h_ref < h_star) {
        (h_ref, r_ref)
    } else {
        (h_star, r_star)
    };
    Ok(CoverageSolution {
        altitude_m: alt,
        radius_m: radius,
        path_loss_at_edge_db: pl_at(alt, radius, prob)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn urban_problem(gamma: f64, pl_max: f64) -> CoverageProblem {
        CoverageProblem::new(
            ChannelParams::urban_28ghz(),
            gamma,
            pl_max,
            (0.0, 2000.0),
            1e-3,
        )
        .unwrap()
    }

    /// Exhaustive 0.1 m scan for the largest feasible radius; test-only oracle
    /// independent of the bisection path.
    fn scan_radius(h: f64, prob: &CoverageProblem) -> Option<f64> {
        let mut best = None;
        let mut r: f64 = if h > 0.0 { 0.0 } else { 0.1 };
        while r <= 5000.0 {
            let geom = LinkGeometry::new(h, r).unwrap();
            if path_loss(&geom, &prob.channel, prob.gamma_db_km).unwrap() <= prob.pl_max_db {
                best = Some(r);
            }
            r += 0.1;
        }
        best
    }

    #[test]
    fn radius_inverts_the_path_loss_example() {
        // pl_max set to PL(120, 120) must give back r ~ 120 m.
        let prob = urban_problem(0.0, 107.67169604714091);
        let r = coverage_radius(120.0, &prob).unwrap().unwrap();
        assert!((r - 120.0).abs() < 2.0 * prob.tolerance_m, "r = {r}");
    }

    #[test]
    fn infeasible_when_nadir_exceeds_budget() {
        // nadir loss at h = 120 is ~104 dB > 100
        let prob = urban_problem(0.0, 100.0);
        assert_eq!(coverage_radius(120.0, &prob).unwrap(), None);
    }

    #[test]
    fn altitude_outside_range_rejected() {
        let prob = urban_problem(0.0, 110.0);
        assert!(coverage_radius(3000.0, &prob).is_err());
    }

    #[test]
    fn edge_conditions_and_scan_agreement() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for i in 0..20 {
            let h = rng.gen_range(20.0..300.0);
            let gamma = rng.gen_range(0.0..50.0);
            let prob = urban_problem(gamma, 1.0); // placeholder budget
            let nadir = pl_at(h, 0.0, &prob).unwrap();
            let prob = urban_problem(gamma, nadir + rng.gen_range(1.0..15.0));
            let r = coverage_radius(h, &prob).unwrap().unwrap();
            assert!(pl_at(h, r, &prob).unwrap() <= prob.pl_max_db);
            assert!(pl_at(h, r + 2.0 * prob.tolerance_m, &prob).unwrap() > prob.pl_max_db);
            let scan = scan_radius(h, &prob).unwrap();
            assert!(
                (r - scan).abs() <= 0.1 + 2.0 * prob.tolerance_m,
                "case {i}: bisection {r} vs scan {scan}"
            );
        }
    }

    #[test]
    fn radius_monotone_in_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..30 {
            let h = rng.gen_range(40.0..250.0);
            let base = rng.gen_range(106.0..115.0);
            let lo = urban_problem(0.0, base);
            let hi = urban_problem(0.0, base + rng.gen_range(0.1..10.0));
            let r_lo = coverage_radius(h, &lo).unwrap().unwrap_or(0.0);
            let r_hi = coverage_radius(h, &hi).unwrap().unwrap_or(0.0);
            assert!(r_hi >= r_lo);
        }
    }

    #[test]
    fn radius_antitone_in_weather() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let h = rng.gen_range(40.0..200.0);
            let g_lo = rng.gen_range(0.0..20.0);
            let g_hi = g_lo + rng.gen_range(0.1..100.0);
            let r_lo = coverage_radius(h, &urban_problem(g_lo, 112.0))
                .unwrap()
                .unwrap_or(0.0);
            let r_hi = coverage_radius(h, &urban_problem(g_hi, 112.0))
                .unwrap()
                .unwrap_or(0.0);
            assert!(r_hi <= r_lo);
        }
    }

    #[test]
    fn fog_shrinks_the_cell() {
        let clear = urban_problem(0.0, 110.0);
        let fog = urban_problem(20.0, 110.0);
        let r_clear = coverage_radius(120.0, &clear).unwrap().unwrap();
        let r_fog = coverage_radius(120.0, &fog).unwrap().unwrap();
        assert!(r_fog < r_clear);
    }

    #[test]
    fn singleton_altitude_range() {
        let prob = CoverageProblem::new(
            ChannelParams::urban_28ghz(),
            0.0,
            110.0,
            (120.0, 120.0),
            1e-3,
        )
        .unwrap();
        let sol = optimal_altitude(&prob, 1.0).unwrap();
        assert_eq!(sol.altitude_m, 120.0);
        let direct = coverage_radius(120.0, &prob).unwrap().unwrap();
        assert!((sol.radius_m - direct).abs() < 1e-9);
    }

    #[test]
    fn all_infeasible_is_an_error() {
        let prob =
            CoverageProblem::new(ChannelParams::urban_28ghz(), 0.0, 90.0, (100.0, 300.0), 1e-3)
                .unwrap();
        assert_eq!(
            optimal_altitude(&prob, 10.0).unwrap_err(),
            ModelError::AllInfeasible
        );
    }

    #[test]
    fn optimal_altitude_beats_grid_neighbors() {
        let prob = urban_problem(0.0, 112.0);
        let sol = optimal_altitude(&prob, 5.0).unwrap();
        assert!(sol.path_loss_at_edge_db <= prob.pl_max_db + 1e-6);
        for dh in [-20.0, -5.0, 5.0, 20.0] {
            let h = (sol.altitude_m + dh).clamp(0.0, 2000.0);
            let r = coverage_radius(h, &prob).unwrap().unwrap_or(0.0);
            assert!(
                r <= sol.radius_m + 2.0 * prob.tolerance_m,
                "h = {h} gives r = {r} > {}",
                sol.radius_m
            );
        }
    }

    #[test]
    fn optimal_elevation_angle_invariant_to_budget() {
        // gamma = beta = 0 separates the angle terms from the distance term,
        // so the argmax elevation angle should not move with the budget.
        let ch = ChannelParams::new(9.61, 0.16, 1.0, 20.0, 28.0, 0.0).unwrap();
        let mut angles = Vec::new();
        for pl_max in [100.0, 110.0, 120.0] {
            let prob = CoverageProblem::new(ch, 0.0, pl_max, (1.0, 2000.0), 1e-3).unwrap();
            let sol = optimal_altitude(&prob, 2.0).unwrap();
            angles.push(sol.altitude_m.atan2(sol.radius_m).to_degrees());
        }
        for w in angles.windows(2) {
            assert!((w[0] - w[1]).abs() < 0.5, "angles {angles:?}");
        }
    }
}
