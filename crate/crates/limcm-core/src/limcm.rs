//! The lim / weakly lim / strongly lim Cohen-Macaulay verdicts: ratio
//! diagnostics h_i(x; M_n) / alpha(M_n) over a range of Frobenius levels, with
//! advisory flags. Exact tables always ship with the verdict; finite data
//! cannot prove a limit.

use crate::error::{Error, Result};
use crate::family::{AlphaKind, ModuleFamily};
use crate::ideal;
use crate::module::Length;
use crate::poly::Polynomial;
use crate::series::{
    fit_exponent, ratio_diagnostic, GrowthVerdict, RatioDiagnostic, RatioSeries,
};
use num::{BigInt, BigRational, One, Zero};

#[derive(Debug, Clone)]
pub struct CMVerdict {
    pub p: u32,
    pub dim: i64,
    pub alpha: AlphaKind,
    pub levels: Vec<u32>,
    /// diagnostics for h_i / alpha, i = 1..=d
    pub per_i: Vec<RatioDiagnostic>,
    /// chi_1 / alpha diagnostic (weak condition)
    pub chi1: RatioDiagnostic,
    /// e((x); M_n) / l(H_0(x; M_n)), which tends to 1 exactly on weakly lim
    /// CM families
    pub mult_over_h0: RatioSeries,
    pub alpha_series: RatioSeries,
    pub h0_series: RatioSeries,
    pub lim_cm: bool,
    pub weakly_lim_cm: bool,
}

/// Per-i Koszul ratio diagnostics for the family against a verified system of
/// parameters; the lim flag requires every h_i/alpha (i >= 1) to decay, the
/// weak flag requires the chi_1 ratio to decay.
pub fn limcm_verdict(
    family: &dyn ModuleFamily,
    sop: &[Polynomial],
    levels: &[u32],
    alpha: AlphaKind,
) -> Result<CMVerdict> {
    let ring = family.ring();
    ideal::check_sop(ring, sop)?;
    if levels.len() < 2 {
        return Err(Error::Invalid("need at least two Frobenius levels".into()));
    }
    let d = ring.dim()?;
    let p = ring.p();

    let mut h_tables: Vec<Vec<BigRational>> = vec![Vec::new(); d as usize + 1];
    let mut chi1_vals: Vec<BigRational> = Vec::new();
    let mut chi_vals: Vec<BigRational> = Vec::new();
    let mut alphas: Vec<BigRational> = Vec::new();
    for &n in levels {
        let h = family.koszul_lengths(sop, n)?;
        for (i, len) in h.iter().enumerate() {
            match len {
                Length::Finite(v) => h_tables[i].push(BigRational::from_integer((*v).into())),
                Length::Infinite => {
                    return Err(Error::NotSop(format!(
                        "h_{i} is infinite at level {n}; the elements are not a system of parameters on the family"
                    )))
                }
            }
        }
        let chi1: BigRational = h
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, v)| {
                let sign = if (i - 1) % 2 == 0 { 1i64 } else { -1 };
                BigRational::from_integer(BigInt::from(sign * v.finite().unwrap() as i64))
            })
            .sum();
        // e((x); M_n) = chi(x; M_n) = h_0 - chi_1
        let h0 = h_tables[0].last().unwrap().clone();
        chi_vals.push(&h0 - &chi1);
        chi1_vals.push(chi1);
        alphas.push(family.alpha(alpha, sop, n)?);
    }

    let mk = |label: &str, vals: &[BigRational]| RatioSeries {
        p,
        label: label.to_string(),
        points: levels.iter().copied().zip(vals.iter().cloned()).collect(),
    };
    let alpha_series = mk(&format!("alpha = {alpha}"), &alphas);
    let h0_series = mk("h_0", &h_tables[0]);

    let mut per_i = Vec::new();
    for i in 1..=d as usize {
        per_i.push(ratio_diagnostic(
            format!("h_{i}/alpha"),
            mk(&format!("h_{i}"), &h_tables[i]),
            alpha_series.clone(),
        ));
    }
    let chi1_diag =
        ratio_diagnostic("chi_1/alpha", mk("chi_1", &chi1_vals), alpha_series.clone());

    let mult_over_h0 = RatioSeries {
        p,
        label: "e((x); M_n)/h_0".into(),
        points: levels
            .iter()
            .copied()
            .zip(chi_vals.iter().zip(&h_tables[0]).map(|(e, h0)| e / h0))
            .collect(),
    };

    let lim_cm = per_i.iter().all(|d| d.verdict == GrowthVerdict::Decays);
    let weakly_lim_cm = lim_cm || chi1_diag.verdict == GrowthVerdict::Decays;

    Ok(CMVerdict {
        p,
        dim: d,
        alpha,
        levels: levels.to_vec(),
        per_i,
        chi1: chi1_diag,
        mult_over_h0,
        alpha_series,
        h0_series,
        lim_cm,
        weakly_lim_cm,
    })
}

#[derive(Debug, Clone)]
pub struct StrongVerdict {
    pub p: u32,
    pub dim: i64,
    pub levels: Vec<u32>,
    /// diagnostics for l(H^j_m(M_n)) / nu(M_n), j < d
    pub per_j: Vec<RatioDiagnostic>,
    pub nu_series: RatioSeries,
    pub strongly_lim_cm: bool,
    /// true when some lower local cohomology had infinite length, making the
    /// finite-length surrogate inapplicable
    pub inconclusive: bool,
}

/// Strongly-lim-CM diagnostics: lower local cohomology lengths against nu.
pub fn strong_verdict(family: &dyn ModuleFamily, levels: &[u32]) -> Result<StrongVerdict> {
    let ring = family.ring();
    let d = ring.dim()?;
    let p = ring.p();
    if d < 1 {
        return Err(Error::Invalid("ring must have positive dimension".into()));
    }
    let jmax = (d - 1) as usize;

    let mut inconclusive = false;
    let mut lc_tables: Vec<Vec<BigRational>> = vec![Vec::new(); jmax + 1];
    let mut nus: Vec<BigRational> = Vec::new();
    for &n in levels {
        let lc = family.local_cohomology(n, jmax)?;
        for (j, len) in lc.iter().enumerate() {
            match len {
                Length::Finite(v) => lc_tables[j].push(BigRational::from_integer((*v).into())),
                Length::Infinite => {
                    inconclusive = true;
                    lc_tables[j].push(BigRational::zero());
                }
            }
        }
        nus.push(BigRational::from_integer(family.nu(n)?.into()));
    }
    let mk = |label: String, vals: &[BigRational]| RatioSeries {
        p,
        label,
        points: levels.iter().copied().zip(vals.iter().cloned()).collect(),
    };
    let nu_series = mk("nu".into(), &nus);
    let per_j: Vec<RatioDiagnostic> = (0..=jmax)
        .map(|j| {
            ratio_diagnostic(
                format!("l(H^{j}_m)/nu"),
                mk(format!("l(H^{j}_m)"), &lc_tables[j]),
                nu_series.clone(),
            )
        })
        .collect();
    let strongly_lim_cm =
        !inconclusive && per_j.iter().all(|d| d.verdict == GrowthVerdict::Decays);
    Ok(StrongVerdict { p, dim: d, levels: levels.to_vec(), per_j, nu_series, strongly_lim_cm, inconclusive })
}

#[derive(Debug, Clone)]
pub struct SopComparisonReport {
    pub levels: Vec<u32>,
    /// per i = 1..=d: (max over n of sigma_i(x)/sigma_i(y), max of the
    /// reciprocal); None when both sides vanish identically
    pub bounds: Vec<(Option<BigRational>, Option<BigRational>)>,
    pub pass: bool,
}

/// Bounded-ratio report for sigma_i(x; M_n) vs sigma_i(y; M_n) over two
/// verified systems of parameters. PASS when each direction is bounded with no
/// growth trend and zero sides only pair with zero sides.
pub fn sop_independence(
    family: &dyn ModuleFamily,
    x: &[Polynomial],
    y: &[Polynomial],
    levels: &[u32],
) -> Result<SopComparisonReport> {
    let ring = family.ring();
    ideal::check_sop(ring, x)?;
    ideal::check_sop(ring, y)?;
    let d = ring.dim()? as usize;
    let p = ring.p();

    let sigma = |elements: &[Polynomial], n: u32| -> Result<Vec<u64>> {
        let h = family.koszul_lengths(elements, n)?;
        let mut out = vec![0u64; d + 1];
        for i in (0..=d).rev() {
            let v = match h.get(i) {
                Some(Length::Finite(v)) => *v,
                _ => return Err(Error::NotSop("infinite Koszul homology".into())),
            };
            out[i] = v + if i + 1 <= d { out[i + 1] } else { 0 };
        }
        Ok(out)
    };

    let mut sx: Vec<Vec<u64>> = Vec::new();
    let mut sy: Vec<Vec<u64>> = Vec::new();
    for &n in levels {
        sx.push(sigma(x, n)?);
        sy.push(sigma(y, n)?);
    }

    let mut bounds = Vec::new();
    let mut pass = true;
    for i in 1..=d {
        let mut fwd: Option<BigRational> = None;
        let mut bwd: Option<BigRational> = None;
        let mut fwd_pts: Vec<(u32, BigRational)> = Vec::new();
        for (k, &n) in levels.iter().enumerate() {
            let (a, b) = (sx[k][i], sy[k][i]);
            match (a, b) {
                (0, 0) => {}
                (_, 0) | (0, _) => {
                    // one side vanishes while the other does not: unbounded
                    pass = false;
                }
                (a, b) => {
                    let r = BigRational::new(BigInt::from(a), BigInt::from(b));
                    fwd_pts.push((n, r.clone()));
                    fwd = Some(fwd.map_or(r.clone(), |m: BigRational| m.max(r.clone())));
                    let rr = r.recip();
                    bwd = Some(bwd.map_or(rr.clone(), |m: BigRational| m.max(rr)));
                }
            }
        }
        if fwd_pts.len() >= 2 {
            let e = fit_exponent(p, &fwd_pts);
            if e.abs() >= 0.3 && e.is_finite() {
                pass = false;
            }
        }
        bounds.push((fwd, bwd));
    }
    Ok(SopComparisonReport { levels: levels.to_vec(), bounds, pass })
}

/// Empirical constant for l(H_0(x; M_n))/rank(M_n): on weakly lim CM domain
/// families this stays within [1, C_x] and converges to e((x); R).
pub fn h0_over_rank_report(
    family: &dyn ModuleFamily,
    sop: &[Polynomial],
    levels: &[u32],
) -> Result<RatioSeries> {
    let ring = family.ring();
    ideal::check_sop(ring, sop)?;
    let p = ring.p();
    let mut points = Vec::new();
    for &n in levels {
        let h = family.koszul_lengths(sop, n)?;
        let h0 = match h[0] {
            Length::Finite(v) => BigRational::from_integer(v.into()),
            Length::Infinite => return Err(Error::NotSop("h_0 infinite".into())),
        };
        let rank = family
            .rank(n)?
            .ok_or_else(|| Error::Invalid("rank undefined on this family".into()))?;
        if rank.is_zero() {
            return Err(Error::Invalid("zero rank in h0/rank report".into()));
        }
        points.push((n, h0 / rank));
    }
    Ok(RatioSeries { p, label: "h_0/rank".into(), points })
}

/// The nu(M_n)/rank(M_n) series (bounded below by 1 on domain families).
pub fn nu_over_rank_report(family: &dyn ModuleFamily, levels: &[u32]) -> Result<RatioSeries> {
    let p = family.ring().p();
    let mut points = Vec::new();
    for &n in levels {
        let nu = BigRational::from_integer(family.nu(n)?.into());
        let rank = family
            .rank(n)?
            .ok_or_else(|| Error::Invalid("rank undefined on this family".into()))?;
        if rank.is_zero() {
            return Err(Error::Invalid("zero rank".into()));
        }
        points.push((n, nu / rank));
    }
    Ok(RatioSeries { p, label: "nu/rank".into(), points })
}

pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FrobeniusFamily;
    use crate::field::PrimeField;
    use crate::ring::GradedRing;

    #[test]
    fn regular_ring_is_lim_cm_with_zero_ratios() {
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &[],
        )
        .unwrap();
        let fam = FrobeniusFamily::of_ring(&r);
        let sop = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
        let v = limcm_verdict(&fam, &sop, &[1, 2, 3, 4], AlphaKind::Nu).unwrap();
        assert!(v.lim_cm);
        assert!(v.weakly_lim_cm);
        for d in &v.per_i {
            assert!(d.numerator.points.iter().all(|(_, v)| v.is_zero()));
        }
        // e/h_0 = 1 exactly on the regular control
        assert!(v.mult_over_h0.points.iter().all(|(_, v)| v.is_one()));
    }

    #[test]
    fn non_sop_rejected() {
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &[],
        )
        .unwrap();
        let fam = FrobeniusFamily::of_ring(&r);
        let bad = vec![r.parse("x").unwrap()];
        assert!(matches!(
            limcm_verdict(&fam, &bad, &[1, 2], AlphaKind::Nu),
            Err(Error::NotSop(_))
        ));
    }

    use num::One;
}
