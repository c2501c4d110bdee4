use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{self, GbCtx, Vector};
use crate::hilbert;
use crate::monomial::Exps;
use crate::parse;
use crate::poly::{self, Polynomial};
use std::sync::{Arc, OnceLock};

pub const DEFAULT_SPAIR_BUDGET: u64 = 2_000_000;

/// A quotient of a weighted polynomial ring over F_p by homogeneous relations,
/// with the weight-graded reverse lexicographic order fixed once and for all.
/// Cheap to clone; Groebner caches are write-once and shared.
#[derive(Clone)]
pub struct GradedRing(Arc<RingData>);

struct RingData {
    field: PrimeField,
    vars: Vec<String>,
    weights: Vec<u64>,
    relations: Vec<Polynomial>,
    declared_domain: bool,
    budget: u64,
    rel_gb: OnceLock<Result<Vec<Vector>>>,
    dim: OnceLock<Result<i64>>,
}

impl std::fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F_{}[{}]", self.0.field.p(), self.0.vars.join(","))?;
        if !self.0.relations.is_empty() {
            write!(f, "/({} relations)", self.0.relations.len())?;
        }
        Ok(())
    }
}

impl GradedRing {
    pub fn new(
        field: PrimeField,
        vars: Vec<String>,
        weights: Vec<u64>,
        relation_texts: &[&str],
    ) -> Result<Self> {
        let mut ring = Self::raw(field, vars, weights, Vec::new(), false, DEFAULT_SPAIR_BUDGET)?;
        let rels: Result<Vec<Polynomial>> =
            relation_texts.iter().map(|s| ring.parse(s)).collect();
        let rels = rels?;
        ring = Self::raw(
            field,
            ring.0.vars.clone(),
            ring.0.weights.clone(),
            rels,
            false,
            DEFAULT_SPAIR_BUDGET,
        )?;
        Ok(ring)
    }

    pub fn raw(
        field: PrimeField,
        vars: Vec<String>,
        weights: Vec<u64>,
        relations: Vec<Polynomial>,
        declared_domain: bool,
        budget: u64,
    ) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        if vars.len() != weights.len() {
            return Err(Error::Invalid("weights and variables must have equal length".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Invalid("variable weights must be positive".into()));
        }
        for v in &vars {
            let mut cs = v.chars();
            let head_ok = cs.next().map(|c| c.is_ascii_lowercase()).unwrap_or(false);
            if !head_ok || !cs.all(|c| c.is_ascii_alphanumeric()) {
                return Err(Error::Invalid(format!("invalid variable name `{v}`")));
            }
        }
        if vars.iter().collect::<std::collections::BTreeSet<_>>().len() != vars.len() {
            return Err(Error::Invalid("duplicate variable names".into()));
        }
        for r in &relations {
            if !r.is_homogeneous(&weights) {
                return Err(Error::NotHomogeneous(format!(
                    "relation {} is not homogeneous for the given weights",
                    poly::display(r, &vars)
                )));
            }
            if r.degree(&weights) == Some(0) {
                return Err(Error::Invalid("a relation may not be a nonzero constant".into()));
            }
        }
        Ok(GradedRing(Arc::new(RingData {
            field,
            vars,
            weights,
            relations,
            declared_domain,
            budget,
            rel_gb: OnceLock::new(),
            dim: OnceLock::new(),
        })))
    }

    /// Mark the quotient as a domain (a scenario declaration; never verified).
    pub fn declare_domain(&self) -> Self {
        GradedRing(Arc::new(RingData {
            field: self.0.field,
            vars: self.0.vars.clone(),
            weights: self.0.weights.clone(),
            relations: self.0.relations.clone(),
            declared_domain: true,
            budget: self.0.budget,
            rel_gb: OnceLock::new(),
            dim: OnceLock::new(),
        }))
    }

    pub fn with_budget(&self, budget: u64) -> Self {
        GradedRing(Arc::new(RingData {
            field: self.0.field,
            vars: self.0.vars.clone(),
            weights: self.0.weights.clone(),
            relations: self.0.relations.clone(),
            declared_domain: self.0.declared_domain,
            budget,
            rel_gb: OnceLock::new(),
            dim: OnceLock::new(),
        }))
    }

    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }

    pub fn p(&self) -> u32 {
        self.0.field.p()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.0.weights
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.0.relations
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.0.relations.is_empty()
    }

    pub fn is_declared_domain(&self) -> bool {
        // a polynomial ring is a domain outright
        self.0.declared_domain || self.is_polynomial_ring()
    }

    pub fn budget(&self) -> u64 {
        self.0.budget
    }

    pub fn gb_ctx(&self) -> GbCtx<'_> {
        GbCtx::new(&self.0.field, &self.0.weights, self.0.budget)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(text, &self.0.field, &self.0.weights, &self.0.vars)
    }

    pub fn display(&self, f: &Polynomial) -> String {
        poly::display(f, &self.0.vars)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(&self.0.field, 1, self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        let mut exp = vec![0u32; self.nvars()];
        exp[i] = 1;
        Polynomial::monomial(exp, 1)
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        poly::add(&self.0.field, &self.0.weights, f, g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        poly::sub(&self.0.field, &self.0.weights, f, g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        poly::neg(&self.0.field, f)
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        poly::mul(&self.0.field, &self.0.weights, f, g)
    }

    pub fn pow(&self, f: &Polynomial, e: u64) -> Polynomial {
        poly::pow(&self.0.field, &self.0.weights, f, e, self.nvars())
    }

    pub fn wdeg(&self, e: &Exps) -> u64 {
        crate::monomial::wdeg(&self.0.weights, e)
    }

    /// Reduced Groebner basis of the defining relations, as rank-1 vectors.
    pub fn relation_gb(&self) -> Result<&[Vector]> {
        self.0
            .rel_gb
            .get_or_init(|| {
                let gens: Vec<Vector> =
                    self.0.relations.iter().map(|r| Vector::from_poly(r, 0)).collect();
                groebner::buchberger(&self.gb_ctx(), &gens)
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Relation columns h * e_i for every defining relation h and 0 <= i < npos.
    pub fn relation_columns(&self, npos: u32) -> Vec<Vector> {
        let mut out = Vec::with_capacity(self.0.relations.len() * npos as usize);
        for i in 0..npos {
            for h in &self.0.relations {
                out.push(Vector::from_poly(h, i));
            }
        }
        out
    }

    /// Canonical representative of f in the quotient ring.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.is_polynomial_ring() {
            return Ok(f.clone());
        }
        let gb = self.relation_gb()?;
        let v = Vector::from_poly(f, 0);
        let nf = groebner::normal_form(&self.gb_ctx(), &v, gb);
        Ok(nf.component(0))
    }

    pub fn is_zero_in_ring(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Krull dimension of the quotient ring.
    pub fn dim(&self) -> Result<i64> {
        self.0
            .dim
            .get_or_init(|| {
                let gb = self.relation_gb()?;
                let leads: Vec<Exps> =
                    gb.iter().map(|g| g.leading().unwrap().exp.clone()).collect();
                Ok(hilbert::dim_monomial(self.nvars(), &leads))
            })
            .clone()
    }

    /// Numerator of the Hilbert series of the quotient ring (scale 1 units).
    pub fn hilbert_numerator(&self) -> Result<hilbert::SeriesPoly> {
        let gb = self.relation_gb()?;
        let leads: Vec<Exps> = gb.iter().map(|g| g.leading().unwrap().exp.clone()).collect();
        Ok(hilbert::numerator_monomial(&leads, &self.0.weights))
    }

    /// Leading coefficient data of the quotient ring's Hilbert series at u = 1,
    /// normalized for grading scale 1.
    pub fn graded_multiplicity(&self) -> Result<num::BigRational> {
        let numer = self.hilbert_numerator()?;
        let d = self.dim()?;
        if d < 0 {
            return Err(Error::Invalid("zero ring has no multiplicity".into()));
        }
        hilbert::series_leading_value(&numer, &self.0.weights, 1, d as usize)
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.vars == other.0.vars
                && self.0.weights == other.0.weights
                && self.0.relations == other.0.relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn poly_ring(p: u64, vars: &[&str]) -> GradedRing {
        GradedRing::new(
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            vec![1; vars.len()],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn polynomial_ring_dim() {
        let r = poly_ring(2, &["x", "y"]);
        assert_eq!(r.dim().unwrap(), 2);
    }

    #[test]
    fn quotient_reduce() {
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 1, 1],
            &["x^3+y^3+z^3"],
        )
        .unwrap();
        assert_eq!(r.dim().unwrap(), 2);
        let f = r.parse("x^3+y^3+z^3+x*y").unwrap();
        let red = r.reduce(&f).unwrap();
        assert_eq!(r.display(&red), "x*y");
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let err = GradedRing::new(
            PrimeField::new(3).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &["x^2-y"],
        );
        assert!(matches!(err, Err(Error::NotHomogeneous(_))));
        // but with weights (1,2) the same relation is homogeneous
        let ok = GradedRing::new(
            PrimeField::new(3).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 2],
            &["x^2-y"],
        );
        assert!(ok.is_ok());
    }
}
