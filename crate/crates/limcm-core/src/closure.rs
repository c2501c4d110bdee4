//! Asymptotic closure diagnostics from a module family and a size function:
//! exact colength-difference series, membership evidence verdicts, tight
//! closure witness checks, colon capture, monomial position, and the Dietz
//! axiom instance suite.
//!
//! At finite scale the closure of A in B is represented by testing candidate
//! elements, not by computing a closed submodule; verdicts are advisory and
//! always ship the exact evidence tables.

use crate::error::{Error, Result};
use crate::family::{AlphaKind, ModuleFamily};
use crate::groebner::Vector;
use crate::ideal::{self, Ideal};
use crate::module::{GradedModule, Length};
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use crate::series::{fit_exponent, RatioSeries};
use num::BigRational;

pub const DEFAULT_TRUNCATIONS: [u32; 3] = [2, 4, 8];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureOutcome {
    MemberEvidence,
    NonMember,
    NonMemberCertified { level: u32, witness: String },
    Inconclusive,
}

impl std::fmt::Display for ClosureOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClosureOutcome::MemberEvidence => write!(f, "MEMBER_EVIDENCE"),
            ClosureOutcome::NonMember => write!(f, "NON_MEMBER"),
            ClosureOutcome::NonMemberCertified { level, witness } => {
                write!(f, "NON_MEMBER_CERTIFIED(level={level}, witness={witness})")
            }
            ClosureOutcome::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// One truncation level's exact evidence: the two colength series and their
/// difference, with the fitted exponents and the threshold comparison.
#[derive(Debug, Clone)]
pub struct TruncationEvidence {
    pub t: Option<u32>,
    pub diff: RatioSeries,
    pub alpha: RatioSeries,
    pub diff_exponent: f64,
    pub alpha_exponent: f64,
    pub verdict: ClosureOutcome,
}

#[derive(Debug, Clone)]
pub struct ClosureVerdict {
    pub outcome: ClosureOutcome,
    pub evidence: Vec<TruncationEvidence>,
    pub truncations_used: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct ClosureParams {
    pub alpha: AlphaKind,
    pub levels: Vec<u32>,
    pub truncations: Vec<u32>,
}

impl ClosureParams {
    pub fn new(alpha: AlphaKind, levels: Vec<u32>) -> Self {
        ClosureParams { alpha, levels, truncations: DEFAULT_TRUNCATIONS.to_vec() }
    }
}

fn length_or_err(l: Length, what: &str) -> Result<u64> {
    l.finite().ok_or_else(|| Error::Invalid(format!("{what} has infinite length")))
}

fn combine(evidence: &[TruncationEvidence]) -> ClosureOutcome {
    if evidence.iter().any(|e| e.verdict == ClosureOutcome::NonMember) {
        return ClosureOutcome::NonMember;
    }
    if evidence.iter().all(|e| e.verdict == ClosureOutcome::MemberEvidence) {
        return ClosureOutcome::MemberEvidence;
    }
    ClosureOutcome::Inconclusive
}

fn judge(
    p: u32,
    t: Option<u32>,
    diffs: Vec<(u32, u64)>,
    alphas: Vec<(u32, BigRational)>,
) -> TruncationEvidence {
    let diff = RatioSeries {
        p,
        label: "colength difference".into(),
        points: diffs
            .iter()
            .map(|&(n, v)| (n, BigRational::from_integer(v.into())))
            .collect(),
    };
    let alpha = RatioSeries { p, label: "alpha".into(), points: alphas };
    let diff_exponent = fit_exponent(p, &diff.points);
    let alpha_exponent = fit_exponent(p, &alpha.points);
    let cutoff = alpha_exponent - 0.5;
    let verdict = if diff_exponent == f64::NEG_INFINITY {
        ClosureOutcome::MemberEvidence
    } else if (diff_exponent - cutoff).abs() < 0.3 {
        ClosureOutcome::Inconclusive
    } else if diff_exponent < cutoff {
        ClosureOutcome::MemberEvidence
    } else {
        ClosureOutcome::NonMember
    };
    TruncationEvidence { t, diff, alpha, diff_exponent, alpha_exponent, verdict }
}

/// Membership evidence for u in the closure of an ideal I inside R: the exact
/// difference series l(M_n x R/I_t) - l(M_n x R/(I_t + u)) per truncation
/// (single run with t = None when I is m-primary).
pub fn closure_diagnostic_ideal(
    family: &dyn ModuleFamily,
    ideal: &Ideal,
    u: &Polynomial,
    params: &ClosureParams,
) -> Result<ClosureVerdict> {
    let ring = family.ring();
    let p = ring.p();
    let m_primary = ideal.is_m_primary()?;
    let ts: Vec<Option<u32>> = if m_primary {
        vec![None]
    } else {
        params.truncations.iter().map(|&t| Some(t)).collect()
    };

    let sop_dummy: Vec<Polynomial> = Vec::new();
    let mut evidence = Vec::new();
    for t in &ts {
        let it = match t {
            None => ideal.clone(),
            Some(t) => ideal.sum(&Ideal::maximal(ring).power(*t)),
        };
        let it_u = it.add_gens(std::slice::from_ref(u));
        let mut diffs = Vec::new();
        let mut alphas = Vec::new();
        for &n in &params.levels {
            let a = length_or_err(
                family.tensor_colength(n, &it.quotient_module())?,
                "M_n x R/I",
            )?;
            let b = length_or_err(
                family.tensor_colength(n, &it_u.quotient_module())?,
                "M_n x R/(I+u)",
            )?;
            if b > a {
                return Err(Error::Invalid("colength difference went negative".into()));
            }
            diffs.push((n, a - b));
            alphas.push((n, family.alpha(params.alpha, &sop_dummy, n)?));
        }
        evidence.push(judge(p, *t, diffs, alphas));
    }
    Ok(ClosureVerdict {
        outcome: combine(&evidence),
        truncations_used: ts.iter().flatten().copied().collect(),
        evidence,
    })
}

/// Module form: membership evidence for u in the closure of A inside B, where
/// A is generated by vectors in B's generator coordinates.
pub fn closure_diagnostic_module(
    family: &dyn ModuleFamily,
    b: &GradedModule,
    a_gens: &[Vector],
    u: &Vector,
    params: &ClosureParams,
) -> Result<ClosureVerdict> {
    let ring = family.ring();
    let p = ring.p();
    let ba = b.quotient_by_submodule(a_gens);
    let finite = ba.length()?.is_finite();
    let ts: Vec<Option<u32>> = if finite {
        vec![None]
    } else {
        params.truncations.iter().map(|&t| Some(t)).collect()
    };

    let m_ideal = Ideal::maximal(ring);
    let sop_dummy: Vec<Polynomial> = Vec::new();
    let mut evidence = Vec::new();
    for t in &ts {
        let at_quot = match t {
            None => ba.clone(),
            Some(t) => ba.quotient_by_ideal(m_ideal.power(*t).gens()),
        };
        let atu_quot = at_quot.quotient_by_submodule(std::slice::from_ref(u));
        let mut diffs = Vec::new();
        let mut alphas = Vec::new();
        for &n in &params.levels {
            let a = length_or_err(family.tensor_colength(n, &at_quot)?, "M_n x B/A")?;
            let bb = length_or_err(family.tensor_colength(n, &atu_quot)?, "M_n x B/(A+u)")?;
            if bb > a {
                return Err(Error::Invalid("colength difference went negative".into()));
            }
            diffs.push((n, a - bb));
            alphas.push((n, family.alpha(params.alpha, &sop_dummy, n)?));
        }
        evidence.push(judge(p, *t, diffs, alphas));
    }
    Ok(ClosureVerdict {
        outcome: combine(&evidence),
        truncations_used: ts.iter().flatten().copied().collect(),
        evidence,
    })
}

/// Tight-closure witness check: c u^{p^n} in I^{[p^n]} for n = 0..=n_max. The
/// caller declares c a test element; a single bracket-colon failure certifies
/// non-membership exactly when the declaration is genuine.
#[derive(Debug, Clone)]
pub struct TightClosureReport {
    pub outcome: ClosureOutcome,
    pub per_level: Vec<(u32, bool)>,
}

pub fn tight_closure_check(
    ring: &GradedRing,
    u: &Polynomial,
    ideal: &Ideal,
    c: &Polynomial,
    n_max: u32,
) -> Result<TightClosureReport> {
    if c.is_zero() || ring.is_zero_in_ring(c)? {
        return Err(Error::Invalid("test element candidate is zero".into()));
    }
    let mut per_level = Vec::new();
    for n in 0..=n_max {
        let q = ring.p().pow(n) as u64;
        let uq = ring.pow(u, q);
        let cuq = ring.mul(c, &uq);
        let bn = ideal.bracket_power(n);
        let pass = bn.contains(&cuq)?;
        per_level.push((n, pass));
        if !pass {
            return Ok(TightClosureReport {
                outcome: ClosureOutcome::NonMemberCertified {
                    level: n,
                    witness: ring.display(c),
                },
                per_level,
            });
        }
    }
    Ok(TightClosureReport { outcome: ClosureOutcome::MemberEvidence, per_level })
}

/// Colon-capture: for a partial system of parameters x and exponents a, b,
/// every generator of (x_i^{a_i + b_i}) : prod x_i^{b_i} should receive
/// membership evidence in the closure of (x_i^{a_i}).
#[derive(Debug, Clone)]
pub struct CaptureReport {
    pub pass: bool,
    pub colon_gens: Vec<String>,
    pub per_element: Vec<(String, ClosureOutcome)>,
}

pub fn colon_capture_suite(
    family: &dyn ModuleFamily,
    x: &[Polynomial],
    a: &[u64],
    b: &[u64],
    params: &ClosureParams,
) -> Result<CaptureReport> {
    let ring = family.ring();
    ideal::check_partial_sop(ring, x)?;
    if a.len() != x.len() || b.len() != x.len() || a.iter().any(|&v| v == 0) {
        return Err(Error::Invalid("exponent lists must match x with positive a_i".into()));
    }
    let high: Vec<Polynomial> =
        x.iter().zip(a.iter().zip(b)).map(|(f, (&ai, &bi))| ring.pow(f, ai + bi)).collect();
    let mut mu = ring.one();
    for (f, &bi) in x.iter().zip(b) {
        mu = ring.mul(&mu, &ring.pow(f, bi));
    }
    let colon = Ideal::new(ring, high).colon_element(&mu)?;
    let target_gens: Vec<Polynomial> =
        x.iter().zip(a).map(|(f, &ai)| ring.pow(f, ai)).collect();
    let target = Ideal::new(ring, target_gens);

    // probe the reduced basis of the colon ideal (canonical element list)
    let mut per_element = Vec::new();
    let mut pass = true;
    let colon_gens: Vec<Polynomial> = colon.groebner_basis()?.to_vec();
    for g in &colon_gens {
        let v = closure_diagnostic_ideal(family, &target, g, params)?;
        if v.outcome != ClosureOutcome::MemberEvidence {
            pass = false;
        }
        per_element.push((ring.display(g), v.outcome));
    }
    Ok(CaptureReport {
        pass,
        colon_gens: colon_gens.iter().map(|g| ring.display(g)).collect(),
        per_element,
    })
}

/// Monomial-position check: (x_1 ... x_d)^{t-1} must stay outside the closure
/// of (x_1^t, ..., x_d^t).
#[derive(Debug, Clone)]
pub struct PositionReport {
    pub pass: bool,
    pub outcome: ClosureOutcome,
    pub element: String,
}

pub fn monomial_position_check(
    family: &dyn ModuleFamily,
    sop: &[Polynomial],
    t: u32,
    params: &ClosureParams,
) -> Result<PositionReport> {
    let ring = family.ring();
    ideal::check_sop(ring, sop)?;
    if t == 0 {
        return Err(Error::Invalid("t must be at least 1".into()));
    }
    let target_gens: Vec<Polynomial> = sop.iter().map(|f| ring.pow(f, t as u64)).collect();
    let target = Ideal::new(ring, target_gens);
    let mut u = ring.one();
    for f in sop {
        u = ring.mul(&u, &ring.pow(f, (t - 1) as u64));
    }
    let v = closure_diagnostic_ideal(family, &target, &u, params)?;
    Ok(PositionReport {
        pass: v.outcome == ClosureOutcome::NonMember,
        outcome: v.outcome,
        element: ring.display(&u),
    })
}

/// A finite evidence set: the pool elements that received membership evidence.
pub fn evidence_set_ideal(
    family: &dyn ModuleFamily,
    ideal: &Ideal,
    pool: &[Polynomial],
    params: &ClosureParams,
) -> Result<Vec<(String, ClosureOutcome)>> {
    let ring = family.ring();
    pool.iter()
        .map(|u| {
            Ok((ring.display(u), closure_diagnostic_ideal(family, ideal, u, params)?.outcome))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FrobeniusFamily;
    use crate::field::PrimeField;
    use num::Zero;

    fn params(levels: Vec<u32>) -> ClosureParams {
        ClosureParams::new(AlphaKind::Nu, levels)
    }

    #[test]
    fn member_of_ideal_gives_zero_difference() {
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &[],
        )
        .unwrap();
        let fam = FrobeniusFamily::of_ring(&r);
        let i = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        let u = r.parse("x^2").unwrap();
        let v = closure_diagnostic_ideal(&fam, &i, &u, &params(vec![1, 2, 3])).unwrap();
        assert_eq!(v.outcome, ClosureOutcome::MemberEvidence);
        assert!(v.evidence[0].diff.points.iter().all(|(_, d)| d.is_zero()));
    }

    #[test]
    fn regular_ring_closures_are_trivial() {
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &[],
        )
        .unwrap();
        let fam = FrobeniusFamily::of_ring(&r);
        let i = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        let u = r.parse("x").unwrap();
        let v = closure_diagnostic_ideal(&fam, &i, &u, &params(vec![1, 2, 3, 4])).unwrap();
        assert_eq!(v.outcome, ClosureOutcome::NonMember);
    }

    #[test]
    fn nonequi_example_x_is_captured() {
        // R = F_2[x,y,z]/(xy,xz), weights (1,2,1): x is in the closure of
        // (x^2 - y, z^t) for t = 2, 3 although it is not in the tight closure
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 2, 1],
            &["x*y", "x*z"],
        )
        .unwrap();
        let fam = FrobeniusFamily::of_ring(&r);
        let u = r.parse("x").unwrap();
        for t in [2u64, 3] {
            let i = Ideal::new(
                &r,
                vec![r.parse("x^2-y").unwrap(), r.pow(&r.parse("z").unwrap(), t)],
            );
            let v = closure_diagnostic_ideal(&fam, &i, &u, &params(vec![1, 2, 3, 4])).unwrap();
            assert_eq!(v.outcome, ClosureOutcome::MemberEvidence, "t = {t}");
        }
    }

    #[test]
    fn fermat_cubic_witness_check() {
        // p = 7 Fermat cubic: x * (z^2)^7 lies in (x, y)^{[7]}
        let r = GradedRing::new(
            PrimeField::new(7).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 1, 1],
            &["x^3+y^3+z^3"],
        )
        .unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let u = r.parse("z^2").unwrap();
        let c = r.parse("x").unwrap();
        let rep = tight_closure_check(&r, &u, &i, &c, 1).unwrap();
        assert_eq!(rep.outcome, ClosureOutcome::MemberEvidence);
        assert_eq!(rep.per_level, vec![(0, true), (1, true)]);
    }

    #[test]
    fn quadric_cone_certified_non_member() {
        // p = 3 quadric cone: x z^3 = x^2 y z is not in (x^3, y^3)
        let r = GradedRing::new(
            PrimeField::new(3).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 1, 1],
            &["z^2-x*y"],
        )
        .unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let u = r.parse("z").unwrap();
        let c = r.parse("x").unwrap();
        let rep = tight_closure_check(&r, &u, &i, &c, 1).unwrap();
        match rep.outcome {
            ClosureOutcome::NonMemberCertified { level, .. } => assert_eq!(level, 1),
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn member_passes_witness_check_at_every_level() {
        let r = GradedRing::new(
            PrimeField::new(3).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &[],
        )
        .unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let u = r.parse("x+y").unwrap();
        let c = r.parse("x").unwrap();
        let rep = tight_closure_check(&r, &u, &i, &c, 3).unwrap();
        assert_eq!(rep.outcome, ClosureOutcome::MemberEvidence);
        assert_eq!(rep.per_level.len(), 4);
    }

    #[test]
    fn monomial_position_regular() {
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &[],
        )
        .unwrap();
        let fam = FrobeniusFamily::of_ring(&r);
        let sop = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
        for t in [1u32, 2] {
            let rep =
                monomial_position_check(&fam, &sop, t, &params(vec![1, 2, 3, 4])).unwrap();
            assert!(rep.pass, "t = {t}: {:?}", rep.outcome);
        }
    }
}
