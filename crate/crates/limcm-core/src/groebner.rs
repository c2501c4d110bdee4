//! Groebner machinery for submodules of free modules S^k over the ambient
//! weighted polynomial ring S = F_p[x_1..x_v]. Ideals are the k = 1 case.
//!
//! Vectors are flattened term lists (position, exponent, coefficient) sorted in
//! a global module order: an optional elimination block on positions, then
//! weighted grevlex on monomials, then position. Syzygies are computed by the
//! tag-column construction: append unit tags e_i to the generators, run
//! Buchberger with the tag block eliminated last, and read off basis elements
//! whose main block vanished.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{self, Exps};
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub pos: u32,
    pub exp: Exps,
    pub coeff: u32,
}

/// Element of a free module, terms sorted strictly descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    pub terms: Vec<VTerm>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    /// Single-position vector f * e_pos from a polynomial.
    pub fn from_poly(f: &crate::poly::Polynomial, pos: u32) -> Self {
        Vector {
            terms: f.terms.iter().map(|t| VTerm { pos, exp: t.exp.clone(), coeff: t.coeff }).collect(),
        }
    }

    /// Component at `pos` as a polynomial (terms already in descending order).
    pub fn component(&self, pos: u32) -> crate::poly::Polynomial {
        crate::poly::Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.pos == pos)
                .map(|t| crate::poly::Term { exp: t.exp.clone(), coeff: t.coeff })
                .collect(),
        }
    }

    pub fn positions(&self) -> Vec<u32> {
        let mut ps: Vec<u32> = self.terms.iter().map(|t| t.pos).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Shift all positions by `offset`.
    pub fn shifted(&self, offset: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm { pos: t.pos + offset, exp: t.exp.clone(), coeff: t.coeff })
                .collect(),
        }
    }

    /// Keep positions in [lo, hi) and renumber them to start at 0.
    pub fn restricted(&self, lo: u32, hi: u32, ctx: &GbCtx) -> Vector {
        let mut terms: Vec<VTerm> = self
            .terms
            .iter()
            .filter(|t| t.pos >= lo && t.pos < hi)
            .map(|t| VTerm { pos: t.pos - lo, exp: t.exp.clone(), coeff: t.coeff })
            .collect();
        terms.sort_by(|a, b| ctx.cmp_term(b, a));
        Vector { terms }
    }
}

/// Arithmetic + order context for the Groebner engine.
#[derive(Clone, Copy)]
pub struct GbCtx<'a> {
    pub field: &'a PrimeField,
    pub weights: &'a [u64],
    /// Positions < `main` form the dominant block; positions >= `main` are the
    /// eliminated tag block. Use `main = u32::MAX` for a single block.
    pub main: u32,
    /// Maximum number of S-pair reductions before giving up.
    pub budget: u64,
}

impl<'a> GbCtx<'a> {
    pub fn new(field: &'a PrimeField, weights: &'a [u64], budget: u64) -> Self {
        GbCtx { field, weights, main: u32::MAX, budget }
    }

    pub fn with_main(self, main: u32) -> Self {
        GbCtx { main, ..self }
    }

    #[inline]
    fn block(&self, pos: u32) -> u8 {
        if pos < self.main {
            0
        } else {
            1
        }
    }

    /// Module order: dominant block first, then weighted grevlex, then position
    /// (lower position is larger).
    pub fn cmp_term(&self, a: &VTerm, b: &VTerm) -> Ordering {
        match self.block(b.pos).cmp(&self.block(a.pos)) {
            Ordering::Equal => {}
            o => return o,
        }
        match monomial::cmp_grevlex(self.weights, &a.exp, &b.exp) {
            Ordering::Equal => b.pos.cmp(&a.pos),
            o => o,
        }
    }

    pub fn sort_vector(&self, v: &mut Vector) {
        v.terms.sort_by(|a, b| self.cmp_term(b, a));
    }

    pub fn add(&self, f: &Vector, g: &Vector) -> Vector {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            match self.cmp_term(&f.terms[i], &g.terms[j]) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(g.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(f.terms[i].coeff, g.terms[j].coeff);
                    if c != 0 {
                        out.push(VTerm { pos: f.terms[i].pos, exp: f.terms[i].exp.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        out.extend_from_slice(&g.terms[j..]);
        Vector { terms: out }
    }

    /// f + c * x^m * g
    pub fn add_scaled(&self, f: &Vector, g: &Vector, m: &[u32], c: u32) -> Vector {
        if c == 0 {
            return f.clone();
        }
        let scaled = Vector {
            terms: g
                .terms
                .iter()
                .map(|t| VTerm { pos: t.pos, exp: monomial::mul(&t.exp, m), coeff: self.field.mul(t.coeff, c) })
                .collect(),
        };
        self.add(f, &scaled)
    }

    pub fn scale(&self, f: &Vector, c: u32) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: f
                .terms
                .iter()
                .map(|t| VTerm { pos: t.pos, exp: t.exp.clone(), coeff: self.field.mul(t.coeff, c) })
                .collect(),
        }
    }

    pub fn make_monic(&self, f: &Vector) -> Vector {
        match f.leading() {
            None => Vector::zero(),
            Some(t) if t.coeff == 1 => f.clone(),
            Some(t) => self.scale(f, self.field.inv(t.coeff)),
        }
    }

    pub fn mul_poly(&self, f: &Vector, g: &crate::poly::Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for t in &g.terms {
            acc = self.add_scaled(&acc, f, &t.exp, t.coeff);
        }
        acc
    }
}

/// Leading-term lookup table, bucketed by position.
struct LeadIndex {
    by_pos: HashMap<u32, Vec<usize>>,
}

impl LeadIndex {
    fn new() -> Self {
        LeadIndex { by_pos: HashMap::new() }
    }

    fn insert(&mut self, basis: &[Vector], idx: usize) {
        let lt = basis[idx].leading().expect("zero vector in basis");
        self.by_pos.entry(lt.pos).or_default().push(idx);
    }

    fn find_divisor(&self, basis: &[Vector], skip: Option<usize>, t: &VTerm) -> Option<usize> {
        let cands = self.by_pos.get(&t.pos)?;
        for &i in cands {
            if Some(i) == skip {
                continue;
            }
            let lt = basis[i].leading().unwrap();
            if monomial::divides(&lt.exp, &t.exp) {
                return Some(i);
            }
        }
        None
    }
}

/// Full normal form of `v` against `basis`: every term of the result is
/// reducible by no basis leading term. Basis elements must be nonzero.
pub fn normal_form(ctx: &GbCtx, v: &Vector, basis: &[Vector]) -> Vector {
    let index = {
        let mut ix = LeadIndex::new();
        for i in 0..basis.len() {
            if !basis[i].is_zero() {
                ix.insert(basis, i);
            }
        }
        ix
    };
    normal_form_indexed(ctx, v, basis, &index)
}

fn normal_form_indexed(ctx: &GbCtx, v: &Vector, basis: &[Vector], index: &LeadIndex) -> Vector {
    let mut done: Vec<VTerm> = Vec::new();
    let mut work = v.clone();
    while let Some(lead) = work.leading().cloned() {
        match index.find_divisor(basis, None, &lead) {
            Some(i) => {
                let g = &basis[i];
                let glt = g.leading().unwrap();
                let m = monomial::div(&lead.exp, &glt.exp);
                let c = ctx.field.neg(ctx.field.div(lead.coeff, glt.coeff));
                work = ctx.add_scaled(&work, g, &m, c);
            }
            None => {
                done.push(lead);
                work.terms.remove(0);
            }
        }
    }
    Vector { terms: done }
}

fn s_pair(ctx: &GbCtx, f: &Vector, g: &Vector) -> Vector {
    let ft = f.leading().unwrap();
    let gt = g.leading().unwrap();
    debug_assert_eq!(ft.pos, gt.pos);
    let l = monomial::lcm(&ft.exp, &gt.exp);
    let mf = monomial::div(&l, &ft.exp);
    let mg = monomial::div(&l, &gt.exp);
    let a = ctx.add_scaled(&Vector::zero(), f, &mf, ctx.field.inv(ft.coeff));
    ctx.add_scaled(&a, g, &mg, ctx.field.neg(ctx.field.inv(gt.coeff)))
}

/// Buchberger with normal (minimal lcm degree first) pair selection. Returns
/// the unique reduced Groebner basis, monic, sorted by leading term descending.
pub fn buchberger(ctx: &GbCtx, gens: &[Vector]) -> Result<Vec<Vector>> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut index = LeadIndex::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(ctx.make_monic(g));
            index.insert(&basis, basis.len() - 1);
        }
    }

    // min-heap on (lcm weighted degree, i, j)
    #[derive(PartialEq, Eq)]
    struct Pair(u64, usize, usize);
    impl Ord for Pair {
        fn cmp(&self, o: &Self) -> Ordering {
            (o.0, o.1, o.2).cmp(&(self.0, self.1, self.2))
        }
    }
    impl PartialOrd for Pair {
        fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
            Some(self.cmp(o))
        }
    }

    let mut heap: BinaryHeap<Pair> = BinaryHeap::new();
    let push_pairs = |heap: &mut BinaryHeap<Pair>, basis: &[Vector], j: usize| {
        let ltj = basis[j].leading().unwrap();
        for i in 0..j {
            let lti = basis[i].leading().unwrap();
            if lti.pos != ltj.pos {
                continue;
            }
            // product criterion is only valid for rank-one vectors
            let pure_poly = basis[i].positions().len() == 1 && basis[j].positions().len() == 1;
            if pure_poly && monomial::coprime(&lti.exp, &ltj.exp) {
                continue;
            }
            let l = monomial::lcm(&lti.exp, &ltj.exp);
            heap.push(Pair(monomial::wdeg(ctx.weights, &l), i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut heap, &basis, j);
    }

    let mut reductions: u64 = 0;
    while let Some(Pair(_, i, j)) = heap.pop() {
        reductions += 1;
        if reductions > ctx.budget {
            return Err(Error::ResourceLimit(format!(
                "S-pair budget {} exhausted ({} basis elements)",
                ctx.budget,
                basis.len()
            )));
        }
        let s = s_pair(ctx, &basis[i], &basis[j]);
        let r = normal_form_indexed(ctx, &s, &basis, &index);
        if !r.is_zero() {
            basis.push(ctx.make_monic(&r));
            index.insert(&basis, basis.len() - 1);
            push_pairs(&mut heap, &basis, basis.len() - 1);
        }
    }

    Ok(interreduce(ctx, basis))
}

/// Reduce a Groebner basis to the canonical reduced form.
fn interreduce(ctx: &GbCtx, mut basis: Vec<Vector>) -> Vec<Vector> {
    // drop elements whose lead is divisible by another surviving lead
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lti = basis[i].leading().unwrap().clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let ltj = basis[j].leading().unwrap();
            if ltj.pos == lti.pos && monomial::divides(&ltj.exp, &lti.exp) {
                // ties (equal leads) keep the earlier element
                if monomial::divides(&lti.exp, &ltj.exp) && i < j {
                    continue;
                }
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Vector> =
        basis.drain(..).zip(keep).filter_map(|(g, k)| k.then_some(g)).collect();

    // tail-reduce each element against the others
    let mut reduced: Vec<Vector> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Vector> =
            minimal.iter().enumerate().filter_map(|(j, g)| (j != i).then(|| g.clone())).collect();
        let r = normal_form(ctx, &minimal[i], &others);
        reduced.push(ctx.make_monic(&r));
    }
    reduced.retain(|g| !g.is_zero());
    reduced.sort_by(|a, b| {
        let (x, y) = (a.leading().unwrap(), b.leading().unwrap());
        ctx.cmp_term(y, x)
    });
    reduced
}

/// Tag-tracked Buchberger: generators are extended with unit tag columns at
/// positions npos + i, pairs are formed only among main-lead elements, and any
/// S-pair whose main part reduces to zero yields a syzygy (its tag part).
/// The invariant main = sum_j tag_j * gens_j is preserved by all reductions.
struct Tracked {
    basis: Vec<Vector>,
    syzygies: Vec<Vector>,
}

fn tracked_buchberger(ctx: &GbCtx, gens: &[Vector], npos: u32) -> Result<Tracked> {
    let ectx = ctx.with_main(npos);
    let zero_exp = vec![0u32; ctx.weights.len()];

    let mut basis: Vec<Vector> = Vec::new();
    let mut index = LeadIndex::new();
    let mut syz: Vec<Vector> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut v = g.clone();
        v.terms.push(VTerm { pos: npos + i as u32, exp: zero_exp.clone(), coeff: 1 });
        ectx.sort_vector(&mut v);
        if v.leading().map(|t| t.pos >= npos).unwrap_or(true) {
            // zero generator: its tag alone is a syzygy
            syz.push(v);
        } else {
            basis.push(ectx.make_monic(&v));
            index.insert(&basis, basis.len() - 1);
        }
    }

    #[derive(PartialEq, Eq)]
    struct Pair(u64, usize, usize);
    impl Ord for Pair {
        fn cmp(&self, o: &Self) -> Ordering {
            (o.0, o.1, o.2).cmp(&(self.0, self.1, self.2))
        }
    }
    impl PartialOrd for Pair {
        fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
            Some(self.cmp(o))
        }
    }
    let mut heap: BinaryHeap<Pair> = BinaryHeap::new();
    let push_pairs = |heap: &mut BinaryHeap<Pair>, basis: &[Vector], j: usize| {
        let ltj = basis[j].leading().unwrap();
        for i in 0..j {
            let lti = basis[i].leading().unwrap();
            if lti.pos != ltj.pos {
                continue;
            }
            let l = monomial::lcm(&lti.exp, &ltj.exp);
            heap.push(Pair(monomial::wdeg(ctx.weights, &l), i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut heap, &basis, j);
    }

    let mut reductions: u64 = 0;
    while let Some(Pair(_, i, j)) = heap.pop() {
        reductions += 1;
        if reductions > ctx.budget {
            return Err(Error::ResourceLimit(format!(
                "S-pair budget {} exhausted during syzygy computation ({} basis elements)",
                ctx.budget,
                basis.len()
            )));
        }
        let s = s_pair(&ectx, &basis[i], &basis[j]);
        let r = normal_form_indexed(&ectx, &s, &basis, &index);
        match r.leading() {
            None => {}
            Some(lt) if lt.pos >= npos => syz.push(r),
            Some(_) => {
                basis.push(ectx.make_monic(&r));
                index.insert(&basis, basis.len() - 1);
                push_pairs(&mut heap, &basis, basis.len() - 1);
            }
        }
    }
    Ok(Tracked { basis, syzygies: syz })
}

fn project_tags(v: &Vector, npos: u32) -> Vector {
    Vector {
        terms: v
            .terms
            .iter()
            .filter(|t| t.pos >= npos)
            .map(|t| VTerm { pos: t.pos - npos, exp: t.exp.clone(), coeff: t.coeff })
            .collect(),
    }
}

/// Generators of the syzygy module of `gens` inside S^npos: all coefficient
/// vectors (c_1..c_r) with sum c_i gens_i = 0, as vectors in S^r.
pub fn syzygies(ctx: &GbCtx, gens: &[Vector], npos: u32) -> Result<Vec<Vector>> {
    let tracked = tracked_buchberger(ctx, gens, npos)?;
    Ok(tracked.syzygies.iter().map(|v| project_tags(v, npos)).collect())
}

/// Solve sum c_i gens_i = v if possible: returns the coefficient vector in S^r,
/// or None when v is not in the submodule.
pub fn lift(ctx: &GbCtx, gens: &[Vector], v: &Vector, npos: u32) -> Result<Option<Vector>> {
    let tracked = tracked_buchberger(ctx, gens, npos)?;
    let ectx = ctx.with_main(npos);
    let nf = normal_form(&ectx, v, &tracked.basis);
    if nf.terms.iter().any(|t| t.pos < npos) {
        return Ok(None);
    }
    // v - sum (tag part) * gens = 0, so the negated tag part is the lift
    let c = Vector {
        terms: nf
            .terms
            .iter()
            .map(|t| VTerm { pos: t.pos - npos, exp: t.exp.clone(), coeff: ctx.field.neg(t.coeff) })
            .collect(),
    };
    Ok(Some(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn vectors_from(polys: &[&str], p: u64, vars: &[&str], weights: &[u64]) -> (PrimeField, Vec<u64>, Vec<String>, Vec<Vector>) {
        let field = PrimeField::new(p).unwrap();
        let w = weights.to_vec();
        let vs: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let vecs = polys
            .iter()
            .map(|s| Vector::from_poly(&parse_polynomial(s, &field, &w, &vs).unwrap(), 0))
            .collect();
        (field, w, vs, vecs)
    }

    #[test]
    fn hand_buchberger_oracle() {
        // {x^2 - y^2, x*y} over F_3 grevlex: one S-pair gives y^3
        let (field, w, vs, gens) = vectors_from(&["x^2-y^2", "x*y"], 3, &["x", "y"], &[1, 1]);
        let ctx = GbCtx::new(&field, &w, 100_000);
        let gb = buchberger(&ctx, &gens).unwrap();
        let printed: Vec<String> =
            gb.iter().map(|g| crate::poly::display(&g.component(0), &vs)).collect();
        assert!(printed.contains(&"y^3".to_string()), "got {printed:?}");
        assert_eq!(gb.len(), 3);
    }

    #[test]
    fn already_reduced_and_duplicates() {
        let (field, w, _vs, gens) = vectors_from(&["x"], 2, &["x", "y"], &[1, 1]);
        let ctx = GbCtx::new(&field, &w, 100_000);
        let gb = buchberger(&ctx, &gens).unwrap();
        assert_eq!(gb.len(), 1);

        let (field, w, _vs, gens) = vectors_from(&["x^2+y", "x^2+y"], 3, &["x", "y"], &[1, 1]);
        let ctx = GbCtx::new(&field, &w, 100_000);
        let gb = buchberger(&ctx, &gens).unwrap();
        assert_eq!(gb.len(), 1);
    }

    #[test]
    fn generator_order_independence() {
        let (field, w, _vs, mut gens) =
            vectors_from(&["x^2-y^2", "x*y", "y^5-x"], 3, &["x", "y"], &[1, 1]);
        let ctx = GbCtx::new(&field, &w, 100_000);
        let gb1 = buchberger(&ctx, &gens).unwrap();
        gens.reverse();
        let gb2 = buchberger(&ctx, &gens).unwrap();
        assert_eq!(gb1, gb2);
        // idempotent
        let gb3 = buchberger(&ctx, &gb1).unwrap();
        assert_eq!(gb1, gb3);
    }

    #[test]
    fn normal_form_division_oracle() {
        // NF(x^2, (x^2 - y^2)) = y^2 over F_3
        let (field, w, vs, gens) = vectors_from(&["x^2-y^2"], 3, &["x", "y"], &[1, 1]);
        let ctx = GbCtx::new(&field, &w, 100_000);
        let gb = buchberger(&ctx, &gens).unwrap();
        let f = Vector::from_poly(&parse_polynomial("x^2", &field, &w, &vs).unwrap(), 0);
        let nf = normal_form(&ctx, &f, &gb);
        assert_eq!(crate::poly::display(&nf.component(0), &vs), "y^2");
    }

    #[test]
    fn koszul_syzygy_of_regular_sequence() {
        let (field, w, _vs, gens) = vectors_from(&["x", "y"], 2, &["x", "y"], &[1, 1]);
        let ctx = GbCtx::new(&field, &w, 100_000);
        let syz = syzygies(&ctx, &gens, 1).unwrap();
        assert_eq!(syz.len(), 1);
        // the syzygy is (y, x) up to sign: y*x - x*y = 0
        let s = &syz[0];
        let c0 = s.component(0);
        let c1 = s.component(1);
        assert_eq!(c0.num_terms(), 1);
        assert_eq!(c1.num_terms(), 1);
        assert_eq!(c0.terms[0].exp, vec![0, 1]);
        assert_eq!(c1.terms[0].exp, vec![1, 0]);
    }

    #[test]
    fn budget_is_enforced() {
        let (field, w, _vs, gens) =
            vectors_from(&["x^3-y^2", "x*y^2-x", "y^4-x^2*y"], 5, &["x", "y"], &[1, 1]);
        let ctx = GbCtx::new(&field, &w, 1);
        match buchberger(&ctx, &gens) {
            Err(Error::ResourceLimit(_)) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    #[test]
    fn lift_membership_certificate() {
        let (field, w, vs, gens) = vectors_from(&["x^2", "y^2"], 3, &["x", "y"], &[1, 1]);
        let ctx = GbCtx::new(&field, &w, 100_000);
        let f = Vector::from_poly(&parse_polynomial("x^2*y + x*y^2", &field, &w, &vs).unwrap(), 0);
        let c = lift(&ctx, &gens, &f, 1).unwrap().expect("is a member");
        // verify the certificate: sum c_i g_i = f
        let mut acc = Vector::zero();
        for (i, g) in gens.iter().enumerate() {
            acc = ctx.add(&acc, &ctx.mul_poly(g, &c.component(i as u32)));
        }
        assert_eq!(acc, f);
        let g = Vector::from_poly(&parse_polynomial("x*y", &field, &w, &vs).unwrap(), 0);
        assert!(lift(&ctx, &gens, &g, 1).unwrap().is_none());
    }
}
