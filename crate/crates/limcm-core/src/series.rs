//! Length series indexed by Frobenius level, growth-exponent fitting, and the
//! DECAYS / BOUNDED / GROWS verdicts used by all asymptotic diagnostics.
//!
//! Series values are exact; only the least-squares fit is floating point.
//! Thresholds: fitted exponent <= -0.5 is DECAYS, |exponent| < 0.3 is BOUNDED,
//! >= 0.3 is GROWS, the remaining band is INCONCLUSIVE.

use num::{BigRational, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSeries {
    pub p: u32,
    pub label: String,
    pub points: Vec<(u32, u64)>,
}

impl LengthSeries {
    pub fn new(p: u32, label: impl Into<String>, points: Vec<(u32, u64)>) -> Self {
        let s = LengthSeries { p, label: label.into(), points };
        debug_assert!(s.points.windows(2).all(|w| w[0].0 < w[1].0));
        s
    }

    pub fn values(&self) -> Vec<u64> {
        self.points.iter().map(|&(_, v)| v).collect()
    }

    pub fn to_rational(&self) -> RatioSeries {
        RatioSeries {
            p: self.p,
            label: self.label.clone(),
            points: self
                .points
                .iter()
                .map(|&(n, v)| (n, BigRational::from_integer(v.into())))
                .collect(),
        }
    }
}

/// Exact rational series (for example a ratio of two length series).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSeries {
    pub p: u32,
    pub label: String,
    pub points: Vec<(u32, BigRational)>,
}

impl RatioSeries {
    pub fn strictly_decreasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].1 < w[0].1)
    }

    pub fn strictly_increasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].1 > w[0].1)
    }

    pub fn nonincreasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].1 <= w[0].1)
    }
}

/// Least-squares slope of log_p(value) against n over the last
/// max(2, count - 1) points. Zero values: a series whose final window value is
/// zero short-circuits to -inf; isolated interior zeros are skipped.
pub fn fit_exponent(p: u32, points: &[(u32, BigRational)]) -> f64 {
    if points.is_empty() {
        return f64::NEG_INFINITY;
    }
    let window = points.len().max(2) - 1;
    let window = window.max(2).min(points.len());
    let tail = &points[points.len() - window..];
    if tail.last().map(|(_, v)| v.is_zero()).unwrap_or(true) {
        return f64::NEG_INFINITY;
    }
    let pts: Vec<(f64, f64)> = tail
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(n, v)| {
            let x = *n as f64;
            let y = v.to_f64().expect("finite ratio").abs().ln() / (p as f64).ln();
            (x, y)
        })
        .collect();
    if pts.len() < 2 {
        return f64::INFINITY;
    }
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

pub fn fit_exponent_lengths(s: &LengthSeries) -> f64 {
    fit_exponent(s.p, &s.to_rational().points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthVerdict {
    Decays,
    Bounded,
    Grows,
    Inconclusive,
}

impl std::fmt::Display for GrowthVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GrowthVerdict::Decays => "DECAYS",
            GrowthVerdict::Bounded => "BOUNDED",
            GrowthVerdict::Grows => "GROWS",
            GrowthVerdict::Inconclusive => "INCONCLUSIVE",
        };
        f.write_str(s)
    }
}

pub fn classify_exponent(e: f64) -> GrowthVerdict {
    if e <= -0.5 {
        GrowthVerdict::Decays
    } else if e.abs() < 0.3 {
        GrowthVerdict::Bounded
    } else if e >= 0.3 {
        GrowthVerdict::Grows
    } else {
        GrowthVerdict::Inconclusive
    }
}

/// Ratio diagnostic: exact numerator/denominator series, exact ratios, the
/// fitted exponent of the ratio, and the threshold verdict.
#[derive(Debug, Clone)]
pub struct RatioDiagnostic {
    pub label: String,
    pub numerator: RatioSeries,
    pub denominator: RatioSeries,
    pub ratios: RatioSeries,
    pub fitted_exponent: f64,
    pub verdict: GrowthVerdict,
}

pub fn ratio_diagnostic(
    label: impl Into<String>,
    numerator: RatioSeries,
    denominator: RatioSeries,
) -> RatioDiagnostic {
    assert_eq!(numerator.points.len(), denominator.points.len());
    let label = label.into();
    let p = numerator.p;
    let ratios = RatioSeries {
        p,
        label: format!("{label} ratio"),
        points: numerator
            .points
            .iter()
            .zip(&denominator.points)
            .map(|((n, a), (_, b))| {
                assert!(!b.is_zero(), "zero denominator in ratio diagnostic");
                (*n, a / b)
            })
            .collect(),
    };
    let fitted_exponent = fit_exponent(p, &ratios.points);
    let verdict = classify_exponent(fitted_exponent);
    RatioDiagnostic { label, numerator, denominator, ratios, fitted_exponent, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exact_geometric() {
        // values p^{2n}: slope exactly 2
        let pts: Vec<(u32, BigRational)> =
            (1..=4).map(|n| (n, rat(9i64.pow(n), 1))).collect();
        let e = fit_exponent(3, &pts);
        assert!((e - 2.0).abs() < 1e-9, "{e}");
        assert_eq!(classify_exponent(e), GrowthVerdict::Grows);
    }

    #[test]
    fn all_zero_is_minus_infinity() {
        let pts: Vec<(u32, BigRational)> = (1..=3).map(|n| (n, rat(0, 1))).collect();
        assert_eq!(fit_exponent(2, &pts), f64::NEG_INFINITY);
        assert_eq!(classify_exponent(f64::NEG_INFINITY), GrowthVerdict::Decays);
    }

    #[test]
    fn near_linear_series() {
        // values 2 p^n - 1 at p = 2, n = 1..4. The closed form gives window
        // slopes log2(2 + 1/(2^{n+1}-1)), each slightly above 1 and decreasing
        // toward 1, so the fit lands just above the true exponent.
        let pts: Vec<(u32, BigRational)> =
            (1..=4).map(|n| (n, rat(2 * 2i64.pow(n) - 1, 1))).collect();
        let e = fit_exponent(2, &pts);
        assert!(e > 1.0 && e < 1.2, "{e}");
        assert_eq!(classify_exponent(e), GrowthVerdict::Grows);
    }

    #[test]
    fn too_few_points() {
        let pts = vec![(1u32, rat(5, 1))];
        // a single positive point cannot be fitted
        assert_eq!(fit_exponent(2, &pts), f64::INFINITY);
    }

    #[test]
    fn decay_thresholds() {
        assert_eq!(classify_exponent(-0.5), GrowthVerdict::Decays);
        assert_eq!(classify_exponent(-0.4), GrowthVerdict::Inconclusive);
        assert_eq!(classify_exponent(-0.2), GrowthVerdict::Bounded);
        assert_eq!(classify_exponent(0.2), GrowthVerdict::Bounded);
        assert_eq!(classify_exponent(0.3), GrowthVerdict::Grows);
    }
}
