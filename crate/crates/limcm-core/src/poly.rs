use crate::field::PrimeField;
use crate::monomial::{self, Exps};
use std::cmp::Ordering;

/// Sparse multivariate polynomial over F_p. Terms are kept sorted in strictly
/// descending monomial order (weighted grevlex) and never carry a zero coefficient,
/// so the representation is canonical for a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: Exps,
    pub coeff: u32,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(field: &PrimeField, c: i64, nvars: usize) -> Self {
        let c = field.reduce_i64(c);
        if c == 0 {
            return Self::zero();
        }
        Polynomial { terms: vec![Term { exp: vec![0; nvars], coeff: c }] }
    }

    pub fn monomial(exp: Exps, coeff: u32) -> Self {
        if coeff == 0 {
            return Self::zero();
        }
        Polynomial { terms: vec![Term { exp, coeff }] }
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Weighted degree of the polynomial (max over terms); None for 0.
    pub fn degree(&self, weights: &[u64]) -> Option<u64> {
        self.terms.iter().map(|t| monomial::wdeg(weights, &t.exp)).max()
    }

    pub fn is_homogeneous(&self, weights: &[u64]) -> bool {
        match self.terms.first() {
            None => true,
            Some(t0) => {
                let d = monomial::wdeg(weights, &t0.exp);
                self.terms.iter().all(|t| monomial::wdeg(weights, &t.exp) == d)
            }
        }
    }

    /// Build from an unsorted list of (exp, coeff) pairs, combining duplicates.
    pub fn from_terms(field: &PrimeField, weights: &[u64], mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| monomial::cmp_grevlex(weights, &b.exp, &a.exp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.exp == t.exp {
                    last.coeff = field.add(last.coeff, t.coeff);
                    if last.coeff == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            if t.coeff != 0 {
                out.push(t);
            }
        }
        Polynomial { terms: out }
    }
}

pub fn add(field: &PrimeField, weights: &[u64], f: &Polynomial, g: &Polynomial) -> Polynomial {
    let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < f.terms.len() && j < g.terms.len() {
        match monomial::cmp_grevlex(weights, &f.terms[i].exp, &g.terms[j].exp) {
            Ordering::Greater => {
                out.push(f.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(g.terms[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(f.terms[i].coeff, g.terms[j].coeff);
                if c != 0 {
                    out.push(Term { exp: f.terms[i].exp.clone(), coeff: c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f.terms[i..]);
    out.extend_from_slice(&g.terms[j..]);
    Polynomial { terms: out }
}

pub fn neg(field: &PrimeField, f: &Polynomial) -> Polynomial {
    Polynomial {
        terms: f.terms.iter().map(|t| Term { exp: t.exp.clone(), coeff: field.neg(t.coeff) }).collect(),
    }
}

pub fn sub(field: &PrimeField, weights: &[u64], f: &Polynomial, g: &Polynomial) -> Polynomial {
    add(field, weights, f, &neg(field, g))
}

pub fn scale(field: &PrimeField, f: &Polynomial, c: u32) -> Polynomial {
    if c == 0 {
        return Polynomial::zero();
    }
    Polynomial {
        terms: f
            .terms
            .iter()
            .filter_map(|t| {
                let cc = field.mul(t.coeff, c);
                (cc != 0).then(|| Term { exp: t.exp.clone(), coeff: cc })
            })
            .collect(),
    }
}

/// f * c * x^m
pub fn mul_term(field: &PrimeField, f: &Polynomial, m: &[u32], c: u32) -> Polynomial {
    if c == 0 {
        return Polynomial::zero();
    }
    Polynomial {
        terms: f
            .terms
            .iter()
            .filter_map(|t| {
                let cc = field.mul(t.coeff, c);
                (cc != 0).then(|| Term { exp: monomial::mul(&t.exp, m), coeff: cc })
            })
            .collect(),
    }
}

pub fn mul(field: &PrimeField, weights: &[u64], f: &Polynomial, g: &Polynomial) -> Polynomial {
    let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
    for a in &f.terms {
        for b in &g.terms {
            let c = field.mul(a.coeff, b.coeff);
            if c != 0 {
                terms.push(Term { exp: monomial::mul(&a.exp, &b.exp), coeff: c });
            }
        }
    }
    Polynomial::from_terms(field, weights, terms)
}

pub fn pow(field: &PrimeField, weights: &[u64], f: &Polynomial, mut e: u64, nvars: usize) -> Polynomial {
    let mut acc = Polynomial::constant(field, 1, nvars);
    let mut base = f.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(field, weights, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(field, weights, &base, &base);
        }
    }
    acc
}

/// q-th power for q a power of the characteristic: the Frobenius simply scales
/// exponent vectors by q (coefficients are fixed by x -> x^p in F_p).
pub fn frobenius_pow(f: &Polynomial, q: u32) -> Polynomial {
    Polynomial {
        terms: f.terms.iter().map(|t| Term { exp: monomial::scale(&t.exp, q), coeff: t.coeff }).collect(),
    }
}

pub fn make_monic(field: &PrimeField, f: &Polynomial) -> Polynomial {
    match f.leading() {
        None => Polynomial::zero(),
        Some(t) if t.coeff == 1 => f.clone(),
        Some(t) => scale(field, f, field.inv(t.coeff)),
    }
}

/// Evaluate f under a ring map sending variable i to images[i] (a polynomial
/// over the target ring).
pub fn substitute(
    field: &PrimeField,
    target_weights: &[u64],
    target_nvars: usize,
    f: &Polynomial,
    images: &[Polynomial],
) -> Polynomial {
    let mut acc = Polynomial::zero();
    for t in &f.terms {
        let mut term = Polynomial::constant(field, t.coeff as i64, target_nvars);
        for (i, &e) in t.exp.iter().enumerate() {
            if e > 0 {
                let p = pow(field, target_weights, &images[i], e as u64, target_nvars);
                term = mul(field, target_weights, &term, &p);
            }
        }
        acc = add(field, target_weights, &acc, &term);
    }
    acc
}

/// Render using the scenario grammar: explicit `*` between factors, `^` for powers.
pub fn display(f: &Polynomial, vars: &[String]) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in f.terms.iter().enumerate() {
        if k > 0 {
            out.push('+');
        }
        let mut factors: Vec<String> = Vec::new();
        if t.coeff != 1 || monomial::is_one(&t.exp) {
            factors.push(t.coeff.to_string());
        }
        for (i, &e) in t.exp.iter().enumerate() {
            if e == 1 {
                factors.push(vars[i].clone());
            } else if e > 1 {
                factors.push(format!("{}^{}", vars[i], e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
