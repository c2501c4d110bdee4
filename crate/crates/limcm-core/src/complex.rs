//! Chain complexes of graded free modules: Koszul complexes, total tensor
//! complexes, homology with coefficients in a presented module, minimal free
//! resolutions, Tor, Ext over the ambient polynomial ring, and local
//! cohomology lengths via graded duality.

use crate::error::{Error, Result};
use crate::groebner::{self, VTerm, Vector};
use crate::module::{self, GradedModule, Length};
use crate::monomial;
use crate::poly::Polynomial;
use crate::ring::GradedRing;

/// A finite left complex ... -> C_1 -> C_0 -> 0 of graded free modules.
/// `diffs[i]` is the matrix of d_i: C_i -> C_{i-1} (columns in C_{i-1}
/// coordinates); `diffs[0]` is empty. Differentials compose to zero in the
/// quotient ring; this is checked on construction.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub ring: GradedRing,
    pub scale: u32,
    pub twists: Vec<Vec<i64>>,
    pub diffs: Vec<Vec<Vector>>,
}

impl ChainComplex {
    pub fn new(
        ring: GradedRing,
        scale: u32,
        twists: Vec<Vec<i64>>,
        diffs: Vec<Vec<Vector>>,
    ) -> Result<Self> {
        if twists.len() != diffs.len() {
            return Err(Error::Invalid("twists/diffs length mismatch".into()));
        }
        let c = ChainComplex { ring, scale, twists, diffs };
        c.check_complex()?;
        Ok(c)
    }

    pub fn top(&self) -> usize {
        self.twists.len().saturating_sub(1)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.twists.get(i).map(|t| t.len()).unwrap_or(0)
    }

    fn check_complex(&self) -> Result<()> {
        let ctx = self.ring.gb_ctx();
        for i in 2..self.diffs.len() {
            for col in &self.diffs[i] {
                // d_{i-1}(d_i(e)) must vanish in the quotient
                let mut img = Vector::zero();
                for t in &col.terms {
                    img = ctx.add_scaled(&img, &self.diffs[i - 1][t.pos as usize], &t.exp, t.coeff);
                }
                for p in img.positions() {
                    let comp = img.component(p);
                    if !self.ring.is_zero_in_ring(&comp)? {
                        return Err(Error::Invalid(format!(
                            "differentials do not compose to zero at homological degree {i}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exterior-algebra Koszul complex on homogeneous elements of positive degree,
/// with the derivation sign convention
/// d(e_{j1} ^ ... ^ e_{ji}) = sum_h (-1)^{h+1} x_{jh} e_{... omit jh ...}.
pub fn koszul_complex(ring: &GradedRing, elements: &[Polynomial]) -> Result<ChainComplex> {
    let w = ring.weights();
    let mut degs: Vec<i64> = Vec::with_capacity(elements.len());
    for f in elements {
        if f.is_zero() || !f.is_homogeneous(w) || f.degree(w) == Some(0) {
            return Err(Error::NotHomogeneous(
                "Koszul complex requires homogeneous elements of positive degree".into(),
            ));
        }
        degs.push(f.degree(w).unwrap() as i64);
    }
    let k = elements.len();
    // subsets of {0..k} of size i, in lexicographic order
    let mut subsets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k + 1];
    for mask in 0u32..(1 << k) {
        let mut s: Vec<usize> = (0..k).filter(|&j| mask & (1 << j) != 0).collect();
        s.sort_unstable();
        subsets[s.len()].push(s);
    }
    for level in subsets.iter_mut() {
        level.sort();
    }
    let index_of = |level: &Vec<Vec<usize>>, s: &Vec<usize>| -> u32 {
        level.binary_search(s).expect("subset present") as u32
    };

    let mut twists: Vec<Vec<i64>> = Vec::with_capacity(k + 1);
    for level in subsets.iter() {
        twists.push(level.iter().map(|s| s.iter().map(|&j| degs[j]).sum()).collect());
    }

    let ctx = ring.gb_ctx();
    let mut diffs: Vec<Vec<Vector>> = vec![Vec::new()];
    for i in 1..=k {
        let mut cols = Vec::with_capacity(subsets[i].len());
        for s in &subsets[i] {
            let mut col = Vector::zero();
            for (h, &j) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(h);
                let pos = index_of(&subsets[i - 1], &rest);
                let sign_pos = h % 2 == 0; // (-1)^{h+1} with h one-based: + for first
                let f = if sign_pos { elements[j].clone() } else { ring.neg(&elements[j]) };
                col = ctx.add(&col, &Vector::from_poly(&f, pos));
            }
            cols.push(col);
        }
        diffs.push(cols);
    }
    ChainComplex::new(ring.clone(), 1, twists, diffs)
}

/// Total tensor product of two complexes, (C tensor D)_n = sum_{i+j=n} C_i tensor D_j
/// with differential d_C tensor 1 + (-1)^i 1 tensor d_D.
pub fn tensor_complexes(c: &ChainComplex, d: &ChainComplex) -> Result<ChainComplex> {
    assert_eq!(c.scale, d.scale, "tensor of complexes at different scales");
    let ring = c.ring.clone();
    let ctx = ring.gb_ctx();
    let (tc, td) = (c.top(), d.top());
    let top = tc + td;

    // basis of level n: pairs (i, a, b) with i + j = n ordered by i then a then b
    let mut level_index: Vec<std::collections::BTreeMap<(usize, usize, usize), usize>> =
        vec![Default::default(); top + 1];
    let mut twists: Vec<Vec<i64>> = vec![Vec::new(); top + 1];
    for n in 0..=top {
        let mut cnt = 0usize;
        for i in 0..=n.min(tc) {
            let j = n - i;
            if j > td {
                continue;
            }
            for a in 0..c.rank(i) {
                for b in 0..d.rank(j) {
                    level_index[n].insert((i, a, b), cnt);
                    twists[n].push(c.twists[i][a] + d.twists[j][b]);
                    cnt += 1;
                }
            }
        }
    }

    let mut diffs: Vec<Vec<Vector>> = vec![Vec::new()];
    for n in 1..=top {
        let mut cols = Vec::with_capacity(twists[n].len());
        let entries: Vec<(usize, usize, usize)> = level_index[n].keys().cloned().collect();
        for (i, a, b) in entries {
            let j = n - i;
            let mut col = Vector::zero();
            if i >= 1 {
                for t in &c.diffs[i][a].terms {
                    let pos = level_index[n - 1][&(i - 1, t.pos as usize, b)] as u32;
                    col = ctx.add(
                        &col,
                        &Vector { terms: vec![VTerm { pos, exp: t.exp.clone(), coeff: t.coeff }] },
                    );
                }
            }
            if j >= 1 {
                let sign = i % 2 == 0;
                for t in &d.diffs[j][b].terms {
                    let pos = level_index[n - 1][&(i, a, t.pos as usize)] as u32;
                    let coeff = if sign { t.coeff } else { ring.field().neg(t.coeff) };
                    col = ctx.add(
                        &col,
                        &Vector { terms: vec![VTerm { pos, exp: t.exp.clone(), coeff }] },
                    );
                }
            }
            cols.push(col);
        }
        diffs.push(cols);
    }
    ChainComplex::new(ring, c.scale, twists, diffs)
}

/// Hom(C, R) as a chain complex: level k is Hom(C_{top-k}, R). The homology of
/// the result at top - j is the j-th cohomology of Hom(C, R).
pub fn dualize(c: &ChainComplex) -> Result<ChainComplex> {
    let top = c.top();
    let mut twists: Vec<Vec<i64>> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        twists.push(c.twists[top - k].iter().map(|t| -t).collect());
    }
    let ctx = c.ring.gb_ctx();
    let mut diffs: Vec<Vec<Vector>> = vec![Vec::new()];
    for k in 1..=top {
        // E_k -> E_{k-1} is the transpose of d_{top-k+1}: C_{top-k+1} -> C_{top-k}
        let d = &c.diffs[top - k + 1];
        let src_rank = c.rank(top - k); // rank of E_k = rank of C_{top-k}
        let mut cols: Vec<Vector> = vec![Vector::zero(); src_rank];
        for (b, col) in d.iter().enumerate() {
            for t in &col.terms {
                let v = Vector {
                    terms: vec![VTerm { pos: b as u32, exp: t.exp.clone(), coeff: t.coeff }],
                };
                cols[t.pos as usize] = ctx.add(&cols[t.pos as usize], &v);
            }
        }
        diffs.push(cols);
    }
    ChainComplex::new(c.ring.clone(), c.scale, twists, diffs)
}

/// Coefficient vectors expressing which combinations of `gens` land in the
/// submodule generated by `others` + ring relations: the kernel presentation
/// workhorse. Returns vectors over the `gens` block.
fn coefficients_into(
    ring: &GradedRing,
    npos: u32,
    gens: &[Vector],
    others: &[Vector],
) -> Result<Vec<Vector>> {
    let mut all = gens.to_vec();
    all.extend(others.iter().cloned());
    all.extend(ring.relation_columns(npos));
    let syz = groebner::syzygies(&ring.gb_ctx(), &all, npos)?;
    let ctx = ring.gb_ctx();
    let r = gens.len() as u32;
    let mut out = Vec::new();
    for s in syz {
        let head = s.restricted(0, r, &ctx);
        if !head.is_zero() {
            out.push(head);
        }
    }
    Ok(out)
}

/// Homology H_i(C tensor M) as a presented graded module.
pub fn homology(c: &ChainComplex, i: usize, m: &GradedModule) -> Result<GradedModule> {
    let ring = &c.ring;
    assert!(ring == m.ring(), "complex and module over different rings");
    let l = num::integer::lcm(c.scale, m.scale());
    let m = m.rescaled(l);
    let cf = (l / c.scale) as i64;
    let mrank = m.ngens() as u32;

    if i > c.top() {
        return Ok(GradedModule::from_parts(ring.clone(), Vec::new(), Vec::new(), l));
    }

    // twists of C_n tensor F0(M), position (a, b) -> a * mrank + b
    let level_twists = |n: usize| -> Vec<i64> {
        let mut tw = Vec::with_capacity(c.rank(n) * mrank as usize);
        for a in 0..c.rank(n) {
            for b in 0..mrank as usize {
                tw.push(c.twists[n][a] * cf + m.gen_twists()[b]);
            }
        }
        tw
    };
    // presentation submodule of C_n tensor M inside the free module
    let level_rels = |n: usize| -> Vec<Vector> {
        let mut rels = Vec::new();
        for a in 0..c.rank(n) as u32 {
            for col in m.rels() {
                rels.push(Vector {
                    terms: col
                        .terms
                        .iter()
                        .map(|t| VTerm { pos: a * mrank + t.pos, exp: t.exp.clone(), coeff: t.coeff })
                        .collect(),
                });
            }
        }
        rels
    };
    // differential columns of d_n tensor id_M
    let level_map = |n: usize| -> Vec<Vector> {
        let mut cols = Vec::new();
        for a in 0..c.rank(n) {
            for b in 0..mrank {
                let src = &c.diffs[n][a];
                cols.push(Vector {
                    terms: src
                        .terms
                        .iter()
                        .map(|t| VTerm { pos: t.pos * mrank + b, exp: t.exp.clone(), coeff: t.coeff })
                        .collect(),
                });
            }
        }
        cols
    };

    let n_i = c.rank(i) as u32 * mrank;

    // kernel of D_i into C_{i-1} tensor M
    let kernel: Vec<Vector> = if i == 0 {
        (0..n_i)
            .map(|p| Vector {
                terms: vec![VTerm { pos: p, exp: vec![0; ring.nvars()], coeff: 1 }],
            })
            .collect()
    } else {
        let tgt = c.rank(i - 1) as u32 * mrank;
        coefficients_into(ring, tgt, &level_map(i), &level_rels(i - 1))?
    };

    if kernel.is_empty() {
        return Ok(GradedModule::from_parts(ring.clone(), Vec::new(), Vec::new(), l));
    }

    // boundaries + presentation inside level i
    let mut denom = level_rels(i);
    if i + 1 <= c.top() {
        denom.extend(level_map(i + 1));
    }

    let tw_i = level_twists(i);
    let w = ring.weights();
    let ktwists: Vec<i64> = kernel
        .iter()
        .map(|v| {
            v.terms
                .iter()
                .map(|t| tw_i[t.pos as usize] + l as i64 * monomial::wdeg(w, &t.exp) as i64)
                .max()
                .unwrap()
        })
        .collect();
    let hrels = coefficients_into(ring, n_i, &kernel, &denom)?;
    Ok(GradedModule::from_parts(ring.clone(), ktwists, hrels, l))
}

pub fn homology_length(c: &ChainComplex, i: usize, m: &GradedModule) -> Result<Length> {
    homology(c, i, m)?.length()
}

/// All Koszul homology lengths, partial sums, and Euler characteristics.
#[derive(Debug, Clone)]
pub struct KoszulStats {
    pub h: Vec<Length>,
    pub sigma: Vec<Length>,
    pub chi: Option<i64>,
    pub chi1: Option<i64>,
}

pub fn koszul_homology(
    ring: &GradedRing,
    elements: &[Polynomial],
    m: &GradedModule,
    i: usize,
) -> Result<GradedModule> {
    let c = koszul_complex(ring, elements)?;
    homology(&c, i, m)
}

pub fn koszul_stats(
    ring: &GradedRing,
    elements: &[Polynomial],
    m: &GradedModule,
) -> Result<KoszulStats> {
    let c = koszul_complex(ring, elements)?;
    let k = elements.len();
    let mut h = Vec::with_capacity(k + 1);
    for i in 0..=k {
        h.push(homology_length(&c, i, m)?);
    }
    let sigma: Vec<Length> = (0..=k)
        .map(|i| {
            let mut acc = 0u64;
            for v in &h[i..] {
                match v {
                    Length::Finite(n) => acc += n,
                    Length::Infinite => return Length::Infinite,
                }
            }
            Length::Finite(acc)
        })
        .collect();
    let all_finite = h.iter().all(|v| v.is_finite());
    let chi = all_finite.then(|| {
        h.iter()
            .enumerate()
            .map(|(i, v)| {
                let s = if i % 2 == 0 { 1 } else { -1 };
                s * v.finite().unwrap() as i64
            })
            .sum()
    });
    let chi1 = all_finite.then(|| {
        h.iter()
            .enumerate()
            .skip(1)
            .map(|(i, v)| {
                let s = if (i - 1) % 2 == 0 { 1 } else { -1 };
                s * v.finite().unwrap() as i64
            })
            .sum()
    });
    Ok(KoszulStats { h, sigma, chi, chi1 })
}

/// A free resolution F_L -> ... -> F_0 (-> M). `maps[k]` is d_k: F_k -> F_{k-1}
/// for k >= 1; `maps[0]` is empty. `complete` means the kernel vanished before
/// the length cap.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub ring: GradedRing,
    pub scale: u32,
    pub twists: Vec<Vec<i64>>,
    pub maps: Vec<Vec<Vector>>,
    pub complete: bool,
}

impl Resolution {
    pub fn betti(&self) -> Vec<usize> {
        self.twists.iter().map(|t| t.len()).collect()
    }

    pub fn as_complex(&self) -> Result<ChainComplex> {
        ChainComplex::new(self.ring.clone(), self.scale, self.twists.clone(), self.maps.clone())
    }
}

/// Minimal graded free resolution of M over its own ring, up to homological
/// degree `len` (or until the kernel vanishes).
pub fn free_resolution(m: &GradedModule, len: usize) -> Result<Resolution> {
    let ring = m.ring().clone();
    resolve(&ring, m.gen_twists().to_vec(), m.rels().to_vec(), m.scale(), len)
}

/// Minimal free resolution of M over the ambient polynomial ring (the quotient
/// relations become module relations). Finite by the syzygy theorem.
pub fn free_resolution_over_ambient(m: &GradedModule, len: usize) -> Result<(Resolution, GradedRing)> {
    let ring = m.ring();
    let ambient = GradedRing::raw(
        *ring.field(),
        ring.vars().to_vec(),
        ring.weights().to_vec(),
        Vec::new(),
        true,
        ring.budget(),
    )?;
    let mut rels = m.rels().to_vec();
    rels.extend(ring.relation_columns(m.ngens() as u32));
    let res = resolve(&ambient, m.gen_twists().to_vec(), rels, m.scale(), len)?;
    Ok((res, ambient))
}

fn resolve(
    ring: &GradedRing,
    twists0: Vec<i64>,
    rels0: Vec<Vector>,
    scale: u32,
    len: usize,
) -> Result<Resolution> {
    // minimize the presentation first
    let m = GradedModule::from_parts(ring.clone(), twists0, rels0, scale);
    let min = m.minimized()?;
    let mut twists: Vec<Vec<i64>> = vec![min.gen_twists().to_vec()];
    let mut maps: Vec<Vec<Vector>> = vec![Vec::new()];
    let mut complete = false;

    let mut current: Vec<Vector> = min_trim(ring, &twists[0], scale, min.rels())?;
    for _k in 1..=len {
        if current.is_empty() {
            complete = true;
            break;
        }
        let w = ring.weights();
        let tw_prev = twists.last().unwrap().clone();
        let deg_of = |v: &Vector| -> i64 {
            v.terms
                .iter()
                .map(|t| tw_prev[t.pos as usize] + scale as i64 * monomial::wdeg(w, &t.exp) as i64)
                .max()
                .unwrap()
        };
        let tw_new: Vec<i64> = current.iter().map(deg_of).collect();
        maps.push(current.clone());
        twists.push(tw_new.clone());

        let ker = module::syzygies_over_ring(ring, tw_prev.len() as u32, &current)?;
        current = min_trim(ring, &tw_new, scale, &ker)?;
    }
    if current.is_empty() {
        complete = true;
    }
    Ok(Resolution { ring: ring.clone(), scale, twists, maps, complete })
}

fn min_trim(
    ring: &GradedRing,
    twists: &[i64],
    scale: u32,
    gens: &[Vector],
) -> Result<Vec<Vector>> {
    module::min_submodule_gens(ring, twists.len() as u32, scale, twists, gens)
}

/// Exact lengths of Tor_i(M, N) over the common ring, i = 0..=i_max, computed
/// by resolving M and taking homology of the resolution tensored with N.
pub fn tor_lengths(m: &GradedModule, n: &GradedModule, i_max: usize) -> Result<Vec<Length>> {
    let res = free_resolution(m, i_max + 1)?;
    let c = res.as_complex()?;
    (0..=i_max).map(|i| homology_length(&c, i, n)).collect()
}

pub fn tor_module(m: &GradedModule, n: &GradedModule, i: usize) -> Result<GradedModule> {
    let res = free_resolution(m, i + 1)?;
    let c = res.as_complex()?;
    homology(&c, i, n)
}

/// Ext^j_S(M, S) over the ambient polynomial ring S, as a module over S.
pub fn ext_over_ambient(m: &GradedModule, j: usize) -> Result<GradedModule> {
    let nv = m.ring().nvars();
    let (res, ambient) = free_resolution_over_ambient(m, nv + 1)?;
    debug_assert!(res.complete);
    let top = res.twists.len() - 1;
    if j > top {
        return Ok(GradedModule::from_parts(ambient, Vec::new(), Vec::new(), m.scale()));
    }
    let dual = dualize(&res.as_complex()?)?;
    let free_one = GradedModule::ring_module(&ambient);
    homology(&dual, top - j, &free_one)
}

/// Lengths of the local cohomology modules H^j_m(M) for j = 0..=j_max, via
/// graded duality over the ambient polynomial ring S of dimension D:
/// length(H^j_m(M)) = length(Ext_S^{D-j}(M, S)).
pub fn local_cohomology_lengths(m: &GradedModule, j_max: usize) -> Result<Vec<Length>> {
    let nv = m.ring().nvars();
    let (res, ambient) = free_resolution_over_ambient(m, nv + 1)?;
    debug_assert!(res.complete);
    let top = res.twists.len() - 1;
    let dual = dualize(&res.as_complex()?)?;
    let free_one = GradedModule::ring_module(&ambient);
    let mut out = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let e = nv - j.min(nv); // Ext exponent D - j
        if j > nv || e > top {
            out.push(Length::Finite(0));
            continue;
        }
        let ext = homology(&dual, top - e, &free_one)?;
        out.push(ext.length()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideal::Ideal;

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
    fn koszul_shape() {
        let r = poly_ring(2, &["x", "y"]);
        let els = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
        let c = koszul_complex(&r, &els).unwrap();
        assert_eq!(c.rank(0), 1);
        assert_eq!(c.rank(1), 2);
        assert_eq!(c.rank(2), 1);

        let els1 = vec![r.parse("x").unwrap()];
        let c1 = koszul_complex(&r, &els1).unwrap();
        assert_eq!(c1.rank(0), 1);
        assert_eq!(c1.rank(1), 1);
    }

    #[test]
    fn koszul_homology_regular_sequence() {
        let r = poly_ring(2, &["x", "y"]);
        let els = vec![r.parse("x").unwrap(), r.parse("y").unwrap()];
        let m = GradedModule::ring_module(&r);
        let c = koszul_complex(&r, &els).unwrap();
        assert_eq!(homology_length(&c, 0, &m).unwrap(), Length::Finite(1));
        assert_eq!(homology_length(&c, 1, &m).unwrap(), Length::Finite(0));
        assert_eq!(homology_length(&c, 2, &m).unwrap(), Length::Finite(0));
    }

    #[test]
    fn koszul_homology_annihilator() {
        // H_1(x; k[x]/(x^2)) = Ann(x) which has length 1
        let r = poly_ring(3, &["x"]);
        let m = GradedModule::cyclic(&r, &[r.parse("x^2").unwrap()]);
        let els = vec![r.parse("x").unwrap()];
        let c = koszul_complex(&r, &els).unwrap();
        assert_eq!(homology_length(&c, 1, &m).unwrap(), Length::Finite(1));
        assert_eq!(homology_length(&c, 0, &m).unwrap(), Length::Finite(1));
    }

    #[test]
    fn koszul_stats_hypersurface() {
        // (x+y; k[x,y]/(xy)): h = (2, 0), chi = 2 = e(m; R)
        let r = GradedRing::new(
            PrimeField::new(5).unwrap(),
            vec!["x".into(), "y".into()],
            vec![1, 1],
            &["x*y"],
        )
        .unwrap();
        let m = GradedModule::ring_module(&r);
        let els = vec![r.parse("x+y").unwrap()];
        let st = koszul_stats(&r, &els, &m).unwrap();
        assert_eq!(st.h, vec![Length::Finite(2), Length::Finite(0)]);
        assert_eq!(st.chi, Some(2));

        // (x; k[x]/(x^2)): h = (1, 1), chi = 0 (dimension drop)
        let r1 = poly_ring(5, &["x"]);
        let m1 = GradedModule::cyclic(&r1, &[r1.parse("x^2").unwrap()]);
        let st1 = koszul_stats(&r1, &[r1.parse("x").unwrap()], &m1).unwrap();
        assert_eq!(st1.h, vec![Length::Finite(1), Length::Finite(1)]);
        assert_eq!(st1.chi, Some(0));

        // (x, y; k[x,y]): chi = 1
        let r2 = poly_ring(5, &["x", "y"]);
        let m2 = GradedModule::ring_module(&r2);
        let st2 =
            koszul_stats(&r2, &[r2.parse("x").unwrap(), r2.parse("y").unwrap()], &m2).unwrap();
        assert_eq!(st2.chi, Some(1));
        assert_eq!(st2.chi1, Some(0));
    }

    #[test]
    fn resolution_of_residue_field() {
        let r = poly_ring(2, &["x", "y"]);
        let k = GradedModule::cyclic(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]);
        let res = free_resolution(&k, 4).unwrap();
        assert!(res.complete);
        assert_eq!(res.betti(), vec![1, 2, 1]);

        // R over R: length-0 resolution
        let free = GradedModule::ring_module(&r);
        let res0 = free_resolution(&free, 3).unwrap();
        assert!(res0.complete);
        assert_eq!(res0.betti(), vec![1]);

        // k[x,y]/(x^2, xy): Betti numbers 1, 2, 1
        let m = GradedModule::cyclic(&r, &[r.parse("x^2").unwrap(), r.parse("x*y").unwrap()]);
        let res2 = free_resolution(&m, 2).unwrap();
        assert_eq!(&res2.betti()[..3.min(res2.betti().len())], &[1, 2, 1]);
    }

    #[test]
    fn tor_examples() {
        // Tor(T/(a,b), T/(c,d)) over k[a,b,c,d]: (1, 0, 0, 0, 0)
        let t = poly_ring(3, &["a", "b", "c", "d"]);
        let m = GradedModule::cyclic(&t, &[t.parse("a").unwrap(), t.parse("b").unwrap()]);
        let n = GradedModule::cyclic(&t, &[t.parse("c").unwrap(), t.parse("d").unwrap()]);
        let tor = tor_lengths(&m, &n, 4).unwrap();
        let expect: Vec<Length> = [1u64, 0, 0, 0, 0].iter().map(|&v| Length::Finite(v)).collect();
        assert_eq!(tor, expect);

        // Tor(k, k) over k[x,y]: (1, 2, 1)
        let r = poly_ring(3, &["x", "y"]);
        let k = GradedModule::cyclic(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]);
        let tor = tor_lengths(&k, &k, 2).unwrap();
        assert_eq!(tor, vec![Length::Finite(1), Length::Finite(2), Length::Finite(1)]);

        // Tor(T/(a,b), T/(a,c)) over k[a,b,c]: (1, 1, 0), chi = 0
        let t3 = poly_ring(3, &["a", "b", "c"]);
        let m = GradedModule::cyclic(&t3, &[t3.parse("a").unwrap(), t3.parse("b").unwrap()]);
        let n = GradedModule::cyclic(&t3, &[t3.parse("a").unwrap(), t3.parse("c").unwrap()]);
        let tor = tor_lengths(&m, &n, 2).unwrap();
        assert_eq!(tor, vec![Length::Finite(1), Length::Finite(1), Length::Finite(0)]);
    }

    #[test]
    fn local_cohomology_basics() {
        // M = k[x,y]: depth 2, so H^0 = H^1 = 0
        let r = poly_ring(2, &["x", "y"]);
        let m = GradedModule::ring_module(&r);
        let lc = local_cohomology_lengths(&m, 1).unwrap();
        assert_eq!(lc, vec![Length::Finite(0), Length::Finite(0)]);

        // M = k + k[x] over k[x]: H^0 has length 1
        let r1 = poly_ring(2, &["x"]);
        let k = GradedModule::cyclic(&r1, &[r1.parse("x").unwrap()]);
        let m1 = k.direct_sum(&GradedModule::ring_module(&r1));
        let lc1 = local_cohomology_lengths(&m1, 0).unwrap();
        assert_eq!(lc1, vec![Length::Finite(1)]);
    }

    #[test]
    fn koszul_h0_is_quotient_length() {
        let r = GradedRing::new(
            PrimeField::new(2).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 2, 1],
            &["x*y", "x*z"],
        )
        .unwrap();
        let m = GradedModule::ring_module(&r);
        let sop = vec![r.parse("x^2-y").unwrap(), r.parse("z").unwrap()];
        let c = koszul_complex(&r, &sop).unwrap();
        let h0 = homology_length(&c, 0, &m).unwrap();
        let q = Ideal::new(&r, sop.clone()).quotient_length().unwrap();
        assert_eq!(h0, q);
        assert!(h0.is_finite());
    }
}
