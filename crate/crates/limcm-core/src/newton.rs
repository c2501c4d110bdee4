//! Integral closure of monomial ideals: the monomials whose exponents lie in
//! the Newton polyhedron conv(exponents) + R^v_{>=0}, decided by exact
//! rational linear programming (phase-1 simplex with Bland's rule).

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{self, Exps};
use crate::poly::Polynomial;
use num::{BigRational, One, Signed, Zero};

/// Is b in conv(points) + R^v_{>=0}? Feasibility of
/// sum lambda_i a_i <= b, sum lambda_i = 1, lambda >= 0.
fn in_newton_polyhedron(points: &[Exps], b: &[u32]) -> bool {
    let r = points.len();
    let v = b.len();
    // standard form: [A | I_slack | I_artificial] x = rhs, minimize artificials.
    // rows 0..v: sum lambda_i a_ij + s_j = b_j; row v: sum lambda_i + t = 1.
    let rows = v + 1;
    let cols = r + v + 1; // lambdas, slacks, one artificial for the equality
    let mut a = vec![vec![BigRational::zero(); cols]; rows];
    let mut rhs = vec![BigRational::zero(); rows];
    for j in 0..v {
        for i in 0..r {
            a[j][i] = BigRational::from_integer(points[i][j].into());
        }
        a[j][r + j] = BigRational::one();
        rhs[j] = BigRational::from_integer(b[j].into());
    }
    for i in 0..r {
        a[v][i] = BigRational::one();
    }
    a[v][r + v] = BigRational::one();
    rhs[v] = BigRational::one();

    // phase-1 objective: minimize the artificial variable (column r + v)
    let art = r + v;
    let mut basis: Vec<usize> = (0..v).map(|j| r + j).collect();
    basis.push(art);

    // reduced costs for min t: c = e_art; z_j - c_j with current basis
    loop {
        // compute simplex multipliers implicitly: cost row = sum of rows whose
        // basic variable is artificial (cost 1), i.e. reduced cost of column k
        // is (sum over artificial-basic rows of a[row][k]) - c_k
        let mut red = vec![BigRational::zero(); cols];
        for (row, &bv) in basis.iter().enumerate() {
            if bv == art {
                for k in 0..cols {
                    red[k] += a[row][k].clone();
                }
            }
        }
        red[art] -= BigRational::one();
        // entering: smallest index with positive reduced cost (minimization of
        // t written as maximizing -t; equivalently pivot while some nonbasic
        // column can reduce the artificial objective)
        let entering = (0..cols).find(|&k| !basis.contains(&k) && red[k].is_positive());
        let Some(e) = entering else { break };
        // ratio test (Bland: smallest basis index among ties)
        let mut best: Option<(BigRational, usize)> = None;
        for row in 0..rows {
            if a[row][e].is_positive() {
                let ratio = &rhs[row] / &a[row][e];
                match &best {
                    None => best = Some((ratio, row)),
                    Some((br, brow)) => {
                        if ratio < *br || (ratio == *br && basis[row] < basis[*brow]) {
                            best = Some((ratio, row));
                        }
                    }
                }
            }
        }
        let Some((_, prow)) = best else { return false };
        // pivot
        let piv = a[prow][e].clone();
        for k in 0..cols {
            a[prow][k] = &a[prow][k] / &piv;
        }
        rhs[prow] = &rhs[prow] / &piv;
        for row in 0..rows {
            if row != prow && !a[row][e].is_zero() {
                let f = a[row][e].clone();
                for k in 0..cols {
                    let delta = &f * &a[prow][k];
                    a[row][k] = &a[row][k] - delta;
                }
                let delta = &f * &rhs[prow];
                rhs[row] = &rhs[row] - delta;
            }
        }
        basis[prow] = e;
    }
    // feasible iff the artificial variable ended at zero
    match basis.iter().position(|&bv| bv == art) {
        None => true,
        Some(row) => rhs[row].is_zero(),
    }
}

/// Minimal monomial generators of the integral closure of a monomial ideal
/// given by exponent vectors.
pub fn monomial_integral_closure_exps(gens: &[Exps]) -> Result<Vec<Exps>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let v = gens[0].len();
    let mut bound = vec![0u32; v];
    for g in gens {
        for j in 0..v {
            bound[j] = bound[j].max(g[j]);
        }
    }
    let box_size: u64 = bound.iter().map(|&b| b as u64 + 1).product();
    if box_size > 200_000 {
        return Err(Error::ResourceLimit("Newton polyhedron box too large".into()));
    }
    let mut members: Vec<Exps> = Vec::new();
    let mut cur = vec![0u32; v];
    loop {
        if in_newton_polyhedron(gens, &cur) {
            members.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == v {
                break;
            }
            cur[i] += 1;
            if cur[i] <= bound[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
        if i == v {
            break;
        }
    }
    // minimal elements under divisibility
    members.sort();
    let snapshot = members.clone();
    members.retain(|m| !snapshot.iter().any(|o| o != m && monomial::divides(o, m)));
    Ok(members)
}

/// Integral closure of a monomial ideal, exact via the Newton polyhedron.
pub fn integral_closure_monomial(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut exps: Vec<Exps> = Vec::new();
    for g in ideal.gens() {
        if g.is_zero() {
            continue;
        }
        if g.num_terms() != 1 {
            return Err(Error::Invalid(format!(
                "not a monomial ideal: generator {}",
                ring.display(g)
            )));
        }
        exps.push(g.terms[0].exp.clone());
    }
    let closure = monomial_integral_closure_exps(&exps)?;
    let gens: Vec<Polynomial> =
        closure.into_iter().map(|e| Polynomial::monomial(e, 1)).collect();
    Ok(Ideal::new(ring, gens))
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
    fn principal_ideal_is_closed() {
        let r = poly_ring(2, &["x", "y"]);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let c = integral_closure_monomial(&i).unwrap();
        assert!(c.equals(&i).unwrap());
    }

    #[test]
    fn squares_pick_up_the_mixed_term() {
        // (x^2, y^2) closure is (x^2, xy, y^2) since (xy)^2 = x^2 y^2
        let r = poly_ring(3, &["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        let c = integral_closure_monomial(&i).unwrap();
        let expect = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        assert!(c.equals(&expect).unwrap());
    }

    #[test]
    fn cubes() {
        let r = poly_ring(3, &["x", "y"]);
        let i = Ideal::parse(&r, &["x^3", "y^3"]).unwrap();
        let c = integral_closure_monomial(&i).unwrap();
        let expect = Ideal::parse(&r, &["x^3", "x^2*y", "x*y^2", "y^3"]).unwrap();
        assert!(c.equals(&expect).unwrap());
    }

    #[test]
    fn rejects_non_monomial() {
        let r = poly_ring(3, &["x", "y"]);
        let i = Ideal::parse(&r, &["x+y"]).unwrap();
        assert!(integral_closure_monomial(&i).is_err());
    }

    #[test]
    fn closure_respects_membership_oracle() {
        // x^a y^b is integral over I iff k(a,b) dominates a sum of k exponent
        // vectors for some k; spot-check against small power membership
        let r = poly_ring(3, &["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^2", "y^3", "z^4"]).unwrap();
        let c = integral_closure_monomial(&i).unwrap();
        // x y z is in the closure: (1,1,1) >= (1/2)(2,0,0)+(1/3)(0,3,0)+...
        // 1/2 + 1/3 + 1/6 = 1 with (1, 1, 2/3) <= (1,1,1)
        assert!(c.contains(&r.parse("x*y*z").unwrap()).unwrap());
        // y z is not: best coverage 1/3 + 1/4 < 1 leaves a gap
        assert!(!c.contains(&r.parse("y*z").unwrap()).unwrap());
    }
}
