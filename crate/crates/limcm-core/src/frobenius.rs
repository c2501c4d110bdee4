//! Characteristic-p functors: bracket powers, the base-change (Peskine-Szpiro)
//! functor along Frobenius, the pushforward F^n_*, and Hilbert-Kunz data.

use crate::error::{Error, Result};
use crate::groebner::{VTerm, Vector};
use crate::ideal::Ideal;
use crate::module::{GradedModule, Length};
use crate::monomial;
use num::{BigInt, BigRational};

/// The functor M = Coker(r_ij) -> Coker(r_ij^{p^n}); degrees scale by p^n.
pub fn frobenius_functor(m: &GradedModule, n: u32) -> GradedModule {
    let q = m.ring().p().pow(n);
    let twists: Vec<i64> = m.gen_twists().iter().map(|t| t * q as i64).collect();
    let rels: Vec<Vector> = m
        .rels()
        .iter()
        .map(|v| Vector {
            terms: v
                .terms
                .iter()
                .map(|t| VTerm { pos: t.pos, exp: monomial::scale(&t.exp, q), coeff: t.coeff })
                .collect(),
        })
        .collect();
    GradedModule::from_parts(m.ring().clone(), twists, rels, m.scale())
}

/// The pushforward F^n_*(M): M viewed as an R-module through the n-th
/// Frobenius endomorphism. Constructed from the splitting of the ambient
/// polynomial ring over its q-th power subring on the monomial box [0,q)^v;
/// coefficients in F_p are their own q-th roots. The presentation is minimized
/// immediately. The result is graded at scale q * scale(M).
pub fn pushforward(m: &GradedModule, n: u32) -> Result<GradedModule> {
    if n == 0 {
        return Ok(m.clone());
    }
    let ring = m.ring();
    let p = ring.p();
    let q = p
        .checked_pow(n)
        .ok_or_else(|| Error::ResourceLimit("Frobenius level overflows".into()))?;
    let v = ring.nvars();
    let box_size = (q as u64)
        .checked_pow(v as u32)
        .ok_or_else(|| Error::ResourceLimit("pushforward box too large".into()))?;
    if box_size.saturating_mul(m.ngens() as u64) > 2_000_000 {
        return Err(Error::ResourceLimit(format!(
            "pushforward presentation would need {} generators",
            box_size * m.ngens() as u64
        )));
    }

    // enumerate the monomial box [0, q)^v in odometer order
    let mut boxes: Vec<Vec<u32>> = Vec::with_capacity(box_size as usize);
    let mut cur = vec![0u32; v];
    loop {
        boxes.push(cur.clone());
        let mut i = 0;
        loop {
            if i == v {
                break;
            }
            cur[i] += 1;
            if cur[i] < q {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
        if i == v {
            break;
        }
    }
    let box_index = |e: &[u32]| -> u32 {
        let mut idx = 0u64;
        for i in (0..v).rev() {
            idx = idx * q as u64 + e[i] as u64;
        }
        idx as u32
    };

    let f0 = m.ngens() as u32;
    let s = m.scale();
    let new_scale = s
        .checked_mul(q)
        .ok_or_else(|| Error::ResourceLimit("pushforward grading scale overflows".into()))?;
    let w = ring.weights();

    // twist of generator (e, i): s * wdeg(e) + twist_i (in 1/(s q) units)
    let mut twists: Vec<i64> = Vec::with_capacity(boxes.len() * f0 as usize);
    for e in &boxes {
        for i in 0..f0 as usize {
            twists.push(s as i64 * monomial::wdeg(w, e) as i64 + m.gen_twists()[i]);
        }
    }

    // source relations over the ambient ring: module relations plus ring
    // relation columns (the pushforward of a free R-module is not R-free)
    let mut source_rels: Vec<Vector> = m.rels().to_vec();
    source_rels.extend(ring.relation_columns(f0));

    let ctx = ring.gb_ctx();
    let mut rels: Vec<Vector> = Vec::with_capacity(source_rels.len() * boxes.len());
    for g in &source_rels {
        for e in &boxes {
            let mut terms: Vec<VTerm> = Vec::with_capacity(g.terms.len());
            for t in &g.terms {
                let a = monomial::mul(&t.exp, e);
                let mut b = vec![0u32; v];
                let mut r = vec![0u32; v];
                for k in 0..v {
                    b[k] = a[k] / q;
                    r[k] = a[k] % q;
                }
                terms.push(VTerm {
                    pos: box_index(&r) * f0 + t.pos,
                    exp: b,
                    coeff: t.coeff,
                });
            }
            let mut vec = Vector { terms };
            ctx.sort_vector(&mut vec);
            rels.push(vec);
        }
    }

    let big = GradedModule::from_parts(ring.clone(), twists, rels, new_scale);
    big.minimized()
}

#[derive(Debug, Clone)]
pub struct HilbertKunz {
    /// exact colengths length(M / I^{[p^n]} M) for n = 0..=n_max
    pub series: Vec<(u32, u64)>,
    pub p: u32,
    pub dim: i64,
    /// estimate at n_max: value / p^(d n_max)
    pub gamma: BigRational,
    /// estimate at n_max - 1 for convergence context
    pub gamma_prev: Option<BigRational>,
}

/// Exact Hilbert-Kunz colength series of M along bracket powers of I.
pub fn hilbert_kunz(m: &GradedModule, ideal: &Ideal, n_max: u32) -> Result<HilbertKunz> {
    if !ideal.is_m_primary()? {
        return Err(Error::NotMPrimary(format!("{ideal:?}")));
    }
    let ring = m.ring();
    let d = ring.dim()?;
    let p = ring.p();
    let mut series = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let bn = ideal.bracket_power(n);
        let qm = m.quotient_by_ideal(bn.gens());
        match qm.length()? {
            Length::Finite(val) => series.push((n, val)),
            Length::Infinite => {
                return Err(Error::NotMPrimary(
                    "bracket-power colength is infinite".into(),
                ))
            }
        }
    }
    let est = |n: u32, val: u64| -> BigRational {
        let denom = BigInt::from(p).pow(d as u32 * n);
        BigRational::new(BigInt::from(val), denom)
    };
    let gamma = est(n_max, series[n_max as usize].1);
    let gamma_prev = (n_max >= 1).then(|| est(n_max - 1, series[n_max as usize - 1].1));
    Ok(HilbertKunz { series, p, dim: d, gamma, gamma_prev })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::GradedRing;

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
    fn functor_fixes_ring_and_powers_relations() {
        let r = poly_ring(2, &["x"]);
        let free = GradedModule::ring_module(&r);
        let f = frobenius_functor(&free, 3);
        assert!(f.rels().is_empty());
        assert_eq!(f.ngens(), 1);

        // F^1(R/(x)) = R/(x^2) over F_2[x]
        let m = GradedModule::cyclic(&r, &[r.parse("x").unwrap()]);
        let fm = frobenius_functor(&m, 1);
        assert_eq!(fm.length().unwrap(), Length::Finite(2));
    }

    #[test]
    fn functor_powers_matrix_entries() {
        // F^1 over F_3[x,y] of Coker [x y; 0 x] has entries x^3, y^3
        let r = poly_ring(3, &["x", "y"]);
        let col1 = Vector {
            terms: vec![VTerm { pos: 0, exp: vec![1, 0], coeff: 1 }],
        };
        let col2 = Vector {
            terms: vec![
                VTerm { pos: 0, exp: vec![0, 1], coeff: 1 },
                VTerm { pos: 1, exp: vec![1, 0], coeff: 1 },
            ],
        };
        let m = GradedModule::from_parts(r.clone(), vec![0, 0], vec![col1, col2], 1);
        let fm = frobenius_functor(&m, 1);
        for col in fm.rels() {
            for t in &col.terms {
                assert!(t.exp.iter().all(|&e| e % 3 == 0));
            }
        }
    }

    #[test]
    fn pushforward_of_polynomial_ring_is_free() {
        // Kunz freeness: F^1_*(F_2[x]) is free of rank 2 with basis 1, x
        let r = poly_ring(2, &["x"]);
        let free = GradedModule::ring_module(&r);
        let pf = pushforward(&free, 1).unwrap();
        assert_eq!(pf.ngens(), 2);
        assert!(pf.rels().is_empty());
        assert_eq!(pf.scale(), 2);
        let rk = pf.rank_ratio().unwrap();
        assert_eq!(rk.ratio, BigRational::from(BigInt::from(2)));

        // rank(F^n_* R) = p^{nd} over F_3[x,y]
        let r2 = poly_ring(3, &["x", "y"]);
        let free2 = GradedModule::ring_module(&r2);
        let pf2 = pushforward(&free2, 1).unwrap();
        assert_eq!(pf2.ngens(), 9);
        assert!(pf2.rels().is_empty());
        assert_eq!(pf2.rank_ratio().unwrap().ratio, BigRational::from(BigInt::from(9)));
    }

    #[test]
    fn fermat_cubic_pushforward_nu() {
        // nu(F^1_* R) = l(R/(x^2,y^2,z^2)) = 8 for R = F_2[x,y,z]/(x^3+y^3+z^3)
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 1, 1],
            &["x^3+y^3+z^3"],
        )
        .unwrap();
        let m = GradedModule::ring_module(&r);
        let pf = pushforward(&m, 1).unwrap();
        assert_eq!(pf.min_generators().unwrap(), 8);

        // the bracket-power colength oracle
        let mm = Ideal::maximal(&r);
        let q = m.quotient_by_ideal(mm.bracket_power(1).gens());
        assert_eq!(q.length().unwrap(), Length::Finite(8));
    }

    #[test]
    fn hilbert_kunz_node() {
        // R = k[x,y]/(xy): series 2 p^n - 1
        for p in [2u64, 3] {
            let r = GradedRing::new(
                PrimeField::new(p).unwrap(),
                vec!["x".into(), "y".into()],
                vec![1, 1],
                &["x*y"],
            )
            .unwrap();
            let m = GradedModule::ring_module(&r);
            let hk = hilbert_kunz(&m, &Ideal::maximal(&r), 4).unwrap();
            for (n, val) in &hk.series {
                assert_eq!(*val, 2 * (p as u64).pow(*n) - 1);
            }
        }
    }

    #[test]
    fn hilbert_kunz_regular_control() {
        let r = poly_ring(2, &["x", "y"]);
        let m = GradedModule::ring_module(&r);
        let hk = hilbert_kunz(&m, &Ideal::maximal(&r), 3).unwrap();
        for (n, val) in &hk.series {
            assert_eq!(*val, 4u64.pow(*n));
        }
        assert_eq!(hk.gamma, BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn hilbert_kunz_rejects_non_primary() {
        let r = poly_ring(2, &["x", "y"]);
        let m = GradedModule::ring_module(&r);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert!(matches!(hilbert_kunz(&m, &i, 2), Err(Error::NotMPrimary(_))));
    }

    #[test]
    fn pushforward_koszul_identity() {
        // h_i(x; F^n_* M) = l(H_i(x^{[q]}; M)) since the residue field is perfect
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &["x*y"],
        )
        .unwrap();
        let m = GradedModule::ring_module(&r);
        let pf = pushforward(&m, 1).unwrap();
        let sop = vec![r.parse("x+y").unwrap()];
        let sop_sq = vec![r.parse("x^2+y^2").unwrap()];
        for i in 0..=1usize {
            let lhs = crate::complex::koszul_homology(&r, &sop, &pf, i)
                .unwrap()
                .length()
                .unwrap();
            let rhs = crate::complex::koszul_homology(&r, &sop_sq, &m, i)
                .unwrap()
                .length()
                .unwrap();
            assert_eq!(lhs, rhs, "identity fails at i = {i}");
        }
    }
}
