//! Ideals of a GradedRing: membership via normal forms against the reduced
//! Groebner basis of the preimage ideal (generators plus ring relations),
//! colons, intersections, products, powers, and quotient dimension.

use crate::error::{Error, Result};
use crate::groebner::{self, Vector};
use crate::hilbert;
use crate::module::{self, GradedModule, Length};
use crate::monomial::Exps;
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use std::sync::{Arc, OnceLock};

struct IdealData {
    ring: GradedRing,
    gens: Vec<Polynomial>,
    gb: OnceLock<Result<Vec<Polynomial>>>,
}

/// An ideal of R = S/J, represented by generators; the cached reduced Groebner
/// basis is that of the preimage ideal (gens) + J in S, so normal forms are
/// canonical representatives in R/I.
#[derive(Clone)]
pub struct Ideal(Arc<IdealData>);

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.0.gens.iter().map(|g| self.0.ring.display(g)).collect();
        write!(f, "Ideal({})", gens.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &GradedRing, gens: Vec<Polynomial>) -> Self {
        Ideal(Arc::new(IdealData { ring: ring.clone(), gens, gb: OnceLock::new() }))
    }

    pub fn parse(ring: &GradedRing, texts: &[&str]) -> Result<Self> {
        let gens: Result<Vec<Polynomial>> = texts.iter().map(|t| ring.parse(t)).collect();
        Ok(Self::new(ring, gens?))
    }

    pub fn zero(ring: &GradedRing) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn maximal(ring: &GradedRing) -> Self {
        let gens = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.0.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.0.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.0.gens.iter().all(|g| g.is_homogeneous(self.0.ring.weights()))
    }

    /// Reduced Groebner basis of the preimage ideal in the ambient polynomial
    /// ring; canonical, idempotent, independent of generator order.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        self.0
            .gb
            .get_or_init(|| {
                let mut gens: Vec<Vector> =
                    self.0.gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
                gens.extend(self.0.ring.relation_columns(1));
                let gb = groebner::buchberger(&self.0.ring.gb_ctx(), &gens)?;
                Ok(gb.into_iter().map(|v| v.component(0)).collect())
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    fn gb_vectors(&self) -> Result<Vec<Vector>> {
        Ok(self.groebner_basis()?.iter().map(|g| Vector::from_poly(g, 0)).collect())
    }

    /// Unique remainder of f modulo the ideal; zero iff f is a member.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let gb = self.gb_vectors()?;
        let nf = groebner::normal_form(&self.0.ring.gb_ctx(), &Vector::from_poly(f, 0), &gb);
        Ok(nf.component(0))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.contains(&self.0.ring.one())?)
    }

    /// Leading exponents of the reduced basis.
    fn initial_exps(&self) -> Result<Vec<Exps>> {
        Ok(self
            .groebner_basis()?
            .iter()
            .map(|g| g.leading().unwrap().exp.clone())
            .collect())
    }

    /// Krull dimension of R/I (-1 for the unit ideal).
    pub fn quotient_dim(&self) -> Result<i64> {
        let leads = self.initial_exps()?;
        Ok(hilbert::dim_monomial(self.0.ring.nvars(), &leads))
    }

    /// Length of R/I when finite.
    pub fn quotient_length(&self) -> Result<Length> {
        let leads = self.initial_exps()?;
        Ok(match hilbert::count_standard_monomials(self.0.ring.nvars(), &leads) {
            Some(n) => Length::Finite(n),
            None => Length::Infinite,
        })
    }

    /// Primary to the homogeneous maximal ideal: proper with zero-dimensional
    /// quotient.
    pub fn is_m_primary(&self) -> Result<bool> {
        Ok(self.quotient_dim()? == 0)
    }

    pub fn quotient_module(&self) -> GradedModule {
        GradedModule::cyclic(&self.0.ring, &self.0.gens)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.0.gens.clone();
        gens.extend(other.0.gens.iter().cloned());
        Ideal::new(&self.0.ring, gens)
    }

    pub fn add_gens(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.0.gens.clone();
        gens.extend_from_slice(extra);
        Ideal::new(&self.0.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let r = &self.0.ring;
        let mut gens = Vec::new();
        for a in &self.0.gens {
            for b in &other.0.gens {
                gens.push(r.mul(a, b));
            }
        }
        Ideal::new(r, gens)
    }

    pub fn power(&self, t: u32) -> Ideal {
        let r = &self.0.ring;
        if t == 0 {
            return Ideal::new(r, vec![r.one()]);
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self);
            let mut seen = std::collections::HashSet::new();
            let gens: Vec<Polynomial> =
                acc.0.gens.iter().filter(|f| seen.insert((*f).clone())).cloned().collect();
            acc = Ideal::new(r, gens);
        }
        acc
    }

    /// I : f = {c : c f in I}.
    pub fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        let gens = module::colon_by_element(
            &self.0.ring,
            1,
            &self.0.gens.iter().map(|g| Vector::from_poly(g, 0)).collect::<Vec<_>>(),
            f,
        )?;
        Ok(Ideal::new(&self.0.ring, gens.iter().map(|v| v.component(0)).collect()))
    }

    /// I : J = intersection of I : f over generators f of J.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for f in other.gens() {
            let c = self.colon_element(f)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::new(&self.0.ring, vec![self.0.ring.one()])))
    }

    /// I intersect J via syzygies of the concatenated generator lists.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        let r = &self.0.ring;
        let mut all: Vec<Vector> =
            self.0.gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
        let na = all.len();
        all.extend(other.0.gens.iter().map(|g| Vector::from_poly(g, 0)));
        all.extend(r.relation_columns(1));
        let syz = groebner::syzygies(&r.gb_ctx(), &all, 1)?;
        let mut gens = Vec::new();
        for s in &syz {
            // value of the first block: sum over coordinates < na
            let mut val = Polynomial::zero();
            for t in &s.terms {
                if (t.pos as usize) < na {
                    let part = crate::poly::mul_term(
                        r.field(),
                        &self.0.gens[t.pos as usize],
                        &t.exp,
                        t.coeff,
                    );
                    val = r.add(&val, &part);
                }
            }
            if !val.is_zero() {
                gens.push(val);
            }
        }
        Ok(Ideal::new(r, gens))
    }

    /// Bracket power I^{[q]} with q = p^n: generated by g^q over the generators.
    pub fn bracket_power(&self, n: u32) -> Ideal {
        let q = self.0.ring.p().pow(n);
        let gens = self.0.gens.iter().map(|g| crate::poly::frobenius_pow(g, q)).collect();
        Ideal::new(&self.0.ring, gens)
    }
}

/// Validate that the images of `elements` form a system of parameters for R:
/// exactly dim R of them and the quotient is zero-dimensional.
pub fn check_sop(ring: &GradedRing, elements: &[Polynomial]) -> Result<()> {
    let d = ring.dim()?;
    if elements.len() as i64 != d {
        return Err(Error::NotSop(format!(
            "{} elements given but the ring has dimension {}",
            elements.len(),
            d
        )));
    }
    let i = Ideal::new(ring, elements.to_vec());
    let qd = i.quotient_dim()?;
    if qd != 0 {
        return Err(Error::NotSop(format!("quotient by the elements has dimension {qd}")));
    }
    Ok(())
}

/// Part of a system of parameters: dim R/(x_1..x_k) = dim R - k.
pub fn check_partial_sop(ring: &GradedRing, elements: &[Polynomial]) -> Result<()> {
    let d = ring.dim()?;
    let k = elements.len() as i64;
    if k > d {
        return Err(Error::NotSop("more elements than the ring dimension".into()));
    }
    let i = Ideal::new(ring, elements.to_vec());
    let qd = i.quotient_dim()?;
    if qd != d - k {
        return Err(Error::NotSop(format!(
            "quotient has dimension {qd}, expected {}",
            d - k
        )));
    }
    Ok(())
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
    fn membership_and_normal_forms() {
        let r = poly_ring(2, &["x", "y"]);
        let f = r.parse("x^2+x*y").unwrap();
        let i = Ideal::new(&r, vec![f.clone()]);
        // self membership
        assert!(i.contains(&f).unwrap());
        // NF(y, (x)) = y
        let j = Ideal::parse(&r, &["x"]).unwrap();
        let y = r.parse("y").unwrap();
        assert_eq!(j.normal_form(&y).unwrap(), y);
    }

    #[test]
    fn krull_dims() {
        let r = poly_ring(5, &["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x*y", "x*z"]).unwrap();
        assert_eq!(i.quotient_dim().unwrap(), 2);

        let r2 = poly_ring(5, &["x", "y"]);
        assert_eq!(Ideal::zero(&r2).quotient_dim().unwrap(), 2);
        assert_eq!(Ideal::maximal(&r2).quotient_dim().unwrap(), 0);
        let unit = Ideal::parse(&r2, &["1"]).unwrap();
        assert_eq!(unit.quotient_dim().unwrap(), -1);
    }

    #[test]
    fn colon_nonequi_example() {
        // R = F_2[x,y,z]/(xy, xz) with weights (1,2,1): (x^2 - y) : z = (x, y)
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 2, 1],
            &["x*y", "x*z"],
        )
        .unwrap();
        let i = Ideal::parse(&r, &["x^2-y"]).unwrap();
        let z = r.parse("z").unwrap();
        let c = i.colon_element(&z).unwrap();
        let expect = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(c.equals(&expect).unwrap());
    }

    #[test]
    fn colon_trivial_cases() {
        let r = poly_ring(3, &["x"]);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        // I : 1 = I
        let one = r.one();
        assert!(i.colon_element(&one).unwrap().equals(&i).unwrap());
        // (x^2) : x = (x)
        let x = r.parse("x").unwrap();
        let c = i.colon_element(&x).unwrap();
        assert!(c.equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());
    }

    #[test]
    fn bracket_powers() {
        let r = poly_ring(2, &["x", "y"]);
        let m = Ideal::maximal(&r);
        let b = m.bracket_power(1);
        assert!(b.equals(&Ideal::parse(&r, &["x^2", "y^2"]).unwrap()).unwrap());

        // Frobenius is additive: (x+y)^[2] = (x^2 + y^2)
        let i = Ideal::parse(&r, &["x+y"]).unwrap();
        let b = i.bracket_power(1);
        assert!(b.equals(&Ideal::parse(&r, &["x^2+y^2"]).unwrap()).unwrap());

        let r3 = poly_ring(3, &["x", "y"]);
        let i = Ideal::parse(&r3, &["x^2", "x*y"]).unwrap();
        let b = i.bracket_power(1);
        assert!(b.equals(&Ideal::parse(&r3, &["x^6", "x^3*y^3"]).unwrap()).unwrap());
    }

    #[test]
    fn sop_checks() {
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 2, 1],
            &["x*y", "x*z"],
        )
        .unwrap();
        assert_eq!(r.dim().unwrap(), 2);
        // x^2 - y, z is a sop even though z lies in a minimal prime
        let sop = vec![r.parse("x^2-y").unwrap(), r.parse("z").unwrap()];
        assert!(check_sop(&r, &sop).is_ok());
        let bad = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
        assert!(check_sop(&r, &bad).is_err());
    }

    #[test]
    fn intersections() {
        let r = poly_ring(3, &["x", "y"]);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let j = Ideal::parse(&r, &["y"]).unwrap();
        let k = i.intersect(&j).unwrap();
        assert!(k.equals(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());
    }
}
