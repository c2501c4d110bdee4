//! Serre intersection multiplicities over a regular (polynomial) ambient ring
//! and their limit formula along Frobenius pushforward families.

use crate::complex;
use crate::error::{Error, Result};
use crate::frobenius;
use crate::ideal::{self, Ideal};
use crate::module::{GradedModule, Length};
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use num::{BigInt, BigRational, Signed};

/// A pair of ideals P, Q in a regular ambient ring T with P + Q primary to the
/// homogeneous maximal ideal; the quotients are declared domains by the
/// scenario (not verified).
#[derive(Debug, Clone)]
pub struct SerrePair {
    pub ambient: GradedRing,
    pub p_ideal: Ideal,
    pub q_ideal: Ideal,
    pub dim_p: i64,
    pub dim_q: i64,
    pub proper: bool,
}

impl SerrePair {
    pub fn new(ambient: &GradedRing, p_ideal: Ideal, q_ideal: Ideal) -> Result<Self> {
        if !ambient.is_polynomial_ring() {
            return Err(Error::Invalid("the ambient ring must be regular (no relations)".into()));
        }
        let sum = p_ideal.sum(&q_ideal);
        if !sum.is_m_primary()? {
            return Err(Error::NotMPrimary("P + Q is not m-primary".into()));
        }
        let dim_p = p_ideal.quotient_dim()?;
        let dim_q = q_ideal.quotient_dim()?;
        let proper = dim_p + dim_q == ambient.dim()?;
        Ok(SerrePair { ambient: ambient.clone(), p_ideal, q_ideal, dim_p, dim_q, proper })
    }
}

#[derive(Debug, Clone)]
pub struct SerreChiReport {
    pub tor: Vec<u64>,
    pub chi: i64,
    /// partial sums chi_i = sum_{j >= i} (-1)^{j-i} l(Tor_j)
    pub chi_partial: Vec<i64>,
}

/// chi(T/P, T/Q) = sum (-1)^i l(Tor_i) with exact Tor lengths for
/// 0 <= i <= dim T.
pub fn serre_chi(pair: &SerrePair) -> Result<SerreChiReport> {
    let d = pair.ambient.dim()? as usize;
    let m = pair.p_ideal.quotient_module();
    let n = pair.q_ideal.quotient_module();
    let tor_lengths = complex::tor_lengths(&m, &n, d)?;
    let mut tor = Vec::with_capacity(d + 1);
    for (i, l) in tor_lengths.iter().enumerate() {
        match l {
            Length::Finite(v) => tor.push(*v),
            Length::Infinite => {
                return Err(Error::NotMPrimary(format!("Tor_{i} has infinite length")))
            }
        }
    }
    let chi = tor
        .iter()
        .enumerate()
        .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum();
    let chi_partial: Vec<i64> = (0..=d)
        .map(|i| {
            tor[i..]
                .iter()
                .enumerate()
                .map(|(j, &v)| if j % 2 == 0 { v as i64 } else { -(v as i64) })
                .sum()
        })
        .collect();
    Ok(SerreChiReport { tor, chi, chi_partial })
}

/// chi(x; M) for a system of parameters of the ambient ring: equals the
/// Hilbert-Samuel multiplicity e((x); M) when dim M = dim R and 0 when
/// dim M < dim R. Cross-checked against the exact polynomial fit of
/// t -> l(M/(x)^t M).
pub fn koszul_multiplicity(
    ring: &GradedRing,
    sop: &[Polynomial],
    m: &GradedModule,
) -> Result<i64> {
    ideal::check_sop(ring, sop)?;
    let stats = complex::koszul_stats(ring, sop, m)?;
    let chi = stats
        .chi
        .ok_or_else(|| Error::NotSop("Koszul homology not of finite length".into()))?;
    let fit = m.hilbert_samuel_multiplicity(sop)? as i64;
    let dm = m.dimension()?;
    let dr = ring.dim()?;
    let expected = if dm < dr { 0 } else { fit };
    if chi != expected {
        return Err(Error::Invalid(format!(
            "Koszul Euler characteristic {chi} disagrees with the Hilbert-Samuel fit {expected}"
        )));
    }
    Ok(chi)
}

#[derive(Debug, Clone)]
pub struct PosLimitReport {
    pub chi: i64,
    /// per level n: exact l(M_n x N_n) / (rank(M_n) rank(N_n))
    pub terms: Vec<(u32, BigRational)>,
    /// |term - chi| per level
    pub gaps: Vec<(u32, BigRational)>,
    pub proper: bool,
    /// every term >= 1 (expected exactly when the dimensions are proper)
    pub all_terms_at_least_one: bool,
}

/// The limit formula: chi(T/P, T/Q) = lim l(M_n x N_n)/(rank M_n rank N_n)
/// with M_n, N_n the Frobenius pushforwards of the two quotients.
pub fn pos_limit_series(pair: &SerrePair, n_max: u32) -> Result<PosLimitReport> {
    let chi = serre_chi(pair)?.chi;
    let t = &pair.ambient;
    let p = t.p();
    let m0 = pair.p_ideal.quotient_module();
    let n0 = pair.q_ideal.quotient_module();
    let mut terms = Vec::new();
    let mut gaps = Vec::new();
    let chi_r = BigRational::from_integer(BigInt::from(chi));
    for n in 1..=n_max {
        let mn = frobenius::pushforward(&m0, n)?;
        let nn = frobenius::pushforward(&n0, n)?;
        let len = mn
            .tensor(&nn)
            .length()?
            .finite()
            .ok_or_else(|| Error::NotMPrimary("tensor of pushforwards not finite".into()))?;
        // rank(F^n_*(T/P)) over T/P is p^{n dim(T/P)} (perfect residue field)
        let denom = BigInt::from(p).pow((pair.dim_p + pair.dim_q) as u32 * n);
        let term = BigRational::new(BigInt::from(len), denom);
        gaps.push((n, (&term - &chi_r).abs()));
        terms.push((n, term));
    }
    let all_terms_at_least_one =
        terms.iter().all(|(_, t)| *t >= BigRational::from_integer(1.into()));
    Ok(PosLimitReport { chi, terms, gaps, proper: pair.proper, all_terms_at_least_one })
}

#[derive(Debug, Clone)]
pub struct TorBoundReport {
    /// per i: (lhs, rhs) with lhs = l(Tor_i(M_n, N_n)) and rhs the triple sum
    pub rows: Vec<(usize, u64, u64)>,
    pub pass: bool,
}

/// The multiple-Tor estimate behind the positivity proof: at level n, for each
/// i >= 1,
/// l(Tor_i(M_n, N_n)) <= sum_{r+s+t = d+i} l(Tor_t(H_r(x; M_n), H_s(y; N_n)))
/// where x lies in Q with images a sop on T/P and y lies in P with images a
/// sop on T/Q.
pub fn tor_bound_check(
    pair: &SerrePair,
    x: &[Polynomial],
    y: &[Polynomial],
    n: u32,
    i_max: usize,
) -> Result<TorBoundReport> {
    let t = &pair.ambient;
    let d = t.dim()? as usize;

    // validate the parameter choices
    for f in x {
        if !pair.q_ideal.contains(f)? {
            return Err(Error::Invalid("x must consist of elements of Q".into()));
        }
    }
    for f in y {
        if !pair.p_ideal.contains(f)? {
            return Err(Error::Invalid("y must consist of elements of P".into()));
        }
    }
    let on_p = pair.p_ideal.add_gens(x);
    if on_p.quotient_dim()? != 0 {
        return Err(Error::NotSop("x is not a system of parameters on T/P".into()));
    }
    let on_q = pair.q_ideal.add_gens(y);
    if on_q.quotient_dim()? != 0 {
        return Err(Error::NotSop("y is not a system of parameters on T/Q".into()));
    }

    let mn = frobenius::pushforward(&pair.p_ideal.quotient_module(), n)?;
    let nn = frobenius::pushforward(&pair.q_ideal.quotient_module(), n)?;

    let lhs_all = complex::tor_lengths(&mn, &nn, i_max)?;

    // Koszul homology modules of the pushforwards
    let kx = complex::koszul_complex(t, x)?;
    let ky = complex::koszul_complex(t, y)?;
    let mut hx: Vec<GradedModule> = Vec::new();
    for r in 0..=x.len() {
        hx.push(complex::homology(&kx, r, &mn)?.minimized()?);
    }
    let mut hy: Vec<GradedModule> = Vec::new();
    for s in 0..=y.len() {
        hy.push(complex::homology(&ky, s, &nn)?.minimized()?);
    }

    let mut rows = Vec::new();
    let mut pass = true;
    for i in 1..=i_max {
        let lhs = lhs_all[i]
            .finite()
            .ok_or_else(|| Error::NotMPrimary("Tor_i(M_n, N_n) infinite".into()))?;
        let mut rhs: u64 = 0;
        for r in 0..=x.len() {
            for s in 0..=y.len() {
                let ti = d + i;
                if r + s > ti || ti - r - s > d {
                    continue;
                }
                let tt = ti - r - s;
                if hx[r].ngens() == 0 || hy[s].ngens() == 0 {
                    continue;
                }
                let l = complex::tor_lengths(&hx[r], &hy[s], tt)?[tt]
                    .finite()
                    .ok_or_else(|| {
                        Error::NotMPrimary("triple-sum Tor term infinite".into())
                    })?;
                rhs += l;
            }
        }
        if lhs > rhs {
            pass = false;
        }
        rows.push((i, lhs, rhs));
    }
    Ok(TorBoundReport { rows, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn poly_ring(p: u64, vars: &[&str]) -> GradedRing {
        GradedRing::new(
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            vec![1; vars.len()],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn transversal_planes() {
        let t = poly_ring(2, &["a", "b", "c", "d"]);
        let pair = SerrePair::new(
            &t,
            Ideal::parse(&t, &["a", "b"]).unwrap(),
            Ideal::parse(&t, &["c", "d"]).unwrap(),
        )
        .unwrap();
        assert!(pair.proper);
        let rep = serre_chi(&pair).unwrap();
        assert_eq!(rep.tor, vec![1, 0, 0, 0, 0]);
        assert_eq!(rep.chi, 1);
    }

    #[test]
    fn plane_and_parabola() {
        let t = poly_ring(3, &["a", "b"]);
        let pair = SerrePair::new(
            &t,
            Ideal::parse(&t, &["a"]).unwrap(),
            Ideal::parse(&t, &["a+b^2"]).unwrap(),
        )
        .unwrap();
        let rep = serre_chi(&pair).unwrap();
        assert_eq!(rep.chi, 2);
        assert_eq!(rep.tor[1], 0);
    }

    #[test]
    fn deficient_dimension_vanishing() {
        let t = poly_ring(2, &["a", "b", "c"]);
        let pair = SerrePair::new(
            &t,
            Ideal::parse(&t, &["a", "b"]).unwrap(),
            Ideal::parse(&t, &["a", "c"]).unwrap(),
        )
        .unwrap();
        assert!(!pair.proper);
        let rep = serre_chi(&pair).unwrap();
        assert_eq!(rep.tor[..3], [1, 1, 0]);
        assert_eq!(rep.chi, 0);
    }

    #[test]
    fn koszul_multiplicity_cross_checks() {
        let r = poly_ring(5, &["x", "y"]);
        let m = GradedModule::ring_module(&r);
        let sop = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
        assert_eq!(koszul_multiplicity(&r, &sop, &m).unwrap(), 1);

        // (x + y) on k[x,y]/(xy): multiplicity 2
        let rn = GradedRing::new(
            PrimeField::new(5).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &["x*y"],
        )
        .unwrap();
        let mn = GradedModule::ring_module(&rn);
        let sop = vec![rn.parse("x+y").unwrap()];
        assert_eq!(koszul_multiplicity(&rn, &sop, &mn).unwrap(), 2);

        // dimension drop: chi = 0
        let r1 = poly_ring(5, &["x"]);
        let m1 = GradedModule::cyclic(&r1, &[r1.parse("x^2").unwrap()]);
        let sop1 = vec![r1.parse("x").unwrap()];
        assert_eq!(koszul_multiplicity(&r1, &sop1, &m1).unwrap(), 0);
    }

    #[test]
    fn pos_limit_parabola_is_constant_two() {
        let t = poly_ring(2, &["a", "b"]);
        let pair = SerrePair::new(
            &t,
            Ideal::parse(&t, &["a"]).unwrap(),
            Ideal::parse(&t, &["a+b^2"]).unwrap(),
        )
        .unwrap();
        let rep = pos_limit_series(&pair, 3).unwrap();
        assert_eq!(rep.chi, 2);
        for (n, term) in &rep.terms {
            assert_eq!(
                *term,
                BigRational::from_integer(2.into()),
                "term at n = {n}"
            );
        }
        assert!(rep.all_terms_at_least_one);
    }

    #[test]
    fn tor_bound_trivial_for_complete_intersections() {
        let t = poly_ring(2, &["a", "b", "c", "d"]);
        let pair = SerrePair::new(
            &t,
            Ideal::parse(&t, &["a", "b"]).unwrap(),
            Ideal::parse(&t, &["c", "d"]).unwrap(),
        )
        .unwrap();
        let x = vec![t.parse("c").unwrap(), t.parse("d").unwrap()];
        let y = vec![t.parse("a").unwrap(), t.parse("b").unwrap()];
        let rep = tor_bound_check(&pair, &x, &y, 1, 2).unwrap();
        assert!(rep.pass);
        for (_, lhs, _) in &rep.rows {
            assert_eq!(*lhs, 0);
        }
    }
}
