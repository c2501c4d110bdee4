//! Hilbert-series combinatorics on monomial (initial) data: Krull dimension,
//! standard-monomial counting, series numerators, and leading coefficients.

use crate::error::{Error, Result};
use crate::monomial::{self, Exps};
use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;

/// Sparse integer Laurent polynomial in one variable u (exponent -> coefficient).
pub type SeriesPoly = BTreeMap<i64, i64>;

pub fn series_add(a: &mut SeriesPoly, b: &SeriesPoly) {
    for (&e, &c) in b {
        let v = a.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            a.remove(&e);
        }
    }
}

pub fn series_shift(a: &SeriesPoly, k: i64) -> SeriesPoly {
    a.iter().map(|(&e, &c)| (e + k, c)).collect()
}

pub fn series_one() -> SeriesPoly {
    let mut s = SeriesPoly::new();
    s.insert(0, 1);
    s
}

/// Multiply by (1 - u^k).
pub fn series_mul_one_minus(a: &SeriesPoly, k: i64) -> SeriesPoly {
    let mut out = a.clone();
    let shifted = series_shift(a, k);
    for (&e, &c) in &shifted {
        let v = out.entry(e).or_insert(0);
        *v -= c;
        if *v == 0 {
            out.remove(&e);
        }
    }
    out
}

/// Exact division by (1 - u); errors if the division leaves a remainder.
pub fn series_div_one_minus(a: &SeriesPoly) -> Result<SeriesPoly> {
    // (sum a_e u^e) / (1-u): ascending prefix sums; remainder is the total sum.
    let mut out = SeriesPoly::new();
    let mut acc: i64 = 0;
    let keys: Vec<i64> = a.keys().copied().collect();
    if keys.is_empty() {
        return Ok(out);
    }
    let lo = keys[0];
    let hi = *keys.last().unwrap();
    for e in lo..hi {
        acc += a.get(&e).copied().unwrap_or(0);
        if acc != 0 {
            out.insert(e, acc);
        }
    }
    acc += a.get(&hi).copied().unwrap_or(0);
    if acc != 0 {
        return Err(Error::Invalid("series numerator not divisible by (1-u)".into()));
    }
    Ok(out)
}

pub fn series_eval_one(a: &SeriesPoly) -> BigInt {
    let mut s = BigInt::zero();
    for &c in a.values() {
        s += c;
    }
    s
}

/// Remove generators divisible by another generator; sorts for determinism.
fn minimalize(gens: &mut Vec<Exps>) {
    gens.sort();
    gens.dedup();
    let snapshot = gens.clone();
    gens.retain(|g| {
        !snapshot
            .iter()
            .any(|h| h != g && monomial::divides(h, g))
    });
}

/// Krull dimension of S/(monomial ideal). Returns -1 for the unit ideal, and
/// nvars when there are no generators.
pub fn dim_monomial(nvars: usize, gens: &[Exps]) -> i64 {
    if gens.iter().any(|g| monomial::is_one(g)) {
        return -1;
    }
    // largest variable subset V such that no generator has support inside V
    let mut best: i64 = 0;
    for mask in 0u32..(1 << nvars) {
        let card = mask.count_ones() as i64;
        if card <= best {
            continue;
        }
        let ok = gens.iter().all(|g| {
            g.iter().enumerate().any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
        });
        if ok {
            best = card;
        }
    }
    best
}

/// Number of monomials outside the monomial ideal; None when infinite.
pub fn count_standard_monomials(nvars: usize, gens: &[Exps]) -> Option<u64> {
    let mut gens = gens.to_vec();
    minimalize(&mut gens);
    if gens.iter().any(|g| monomial::is_one(g)) {
        return Some(0);
    }
    // finite iff a pure power of every variable appears
    let mut bound = vec![0u32; nvars];
    for i in 0..nvars {
        let b = gens
            .iter()
            .filter(|g| g.iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|g| g[i])
            .min()?;
        bound[i] = b;
    }
    let mut count = 0u64;
    let mut cur = vec![0u32; nvars];
    loop {
        if !gens.iter().any(|g| monomial::divides(g, &cur)) {
            count += 1;
        }
        // odometer over the box
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(count);
            }
            cur[i] += 1;
            if cur[i] < bound[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Numerator of the Hilbert series of S/(monomial ideal) over the denominator
/// prod_i (1 - u^{w_i}), computed by the pivot recursion
/// N(I) = N(I + (x_l)) + u^{w_l} N(I : x_l).
pub fn numerator_monomial(gens: &[Exps], weights: &[u64]) -> SeriesPoly {
    let mut gens = gens.to_vec();
    minimalize(&mut gens);
    numer_rec(&mut gens, weights)
}

fn numer_rec(gens: &mut Vec<Exps>, weights: &[u64]) -> SeriesPoly {
    if gens.is_empty() {
        return series_one();
    }
    if gens.iter().any(|g| monomial::is_one(g)) {
        return SeriesPoly::new();
    }
    // pure powers: product formula
    if gens.iter().all(|g| g.iter().filter(|&&e| e > 0).count() == 1) {
        let mut acc = series_one();
        for g in gens.iter() {
            let d = monomial::wdeg(weights, g) as i64;
            acc = series_mul_one_minus(&acc, d);
        }
        return acc;
    }
    // pivot on the variable occurring in the most generators with mixed support
    let nvars = weights.len();
    let mut counts = vec![0usize; nvars];
    for g in gens.iter() {
        if g.iter().filter(|&&e| e > 0).count() > 1 {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
    }
    let l = counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, &c)| (c, std::cmp::Reverse(i)))
        .map(|(i, _)| i)
        .unwrap();

    // I + (x_l)
    let mut plus: Vec<Exps> = gens
        .iter()
        .filter(|g| g[l] == 0)
        .cloned()
        .collect();
    let mut xl = vec![0u32; nvars];
    xl[l] = 1;
    plus.push(xl);
    minimalize(&mut plus);
    let a = numer_rec(&mut plus, weights);

    // I : x_l
    let mut colon: Vec<Exps> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            if h[l] > 0 {
                h[l] -= 1;
            }
            h
        })
        .collect();
    minimalize(&mut colon);
    let b = numer_rec(&mut colon, weights);

    let mut out = a;
    series_add(&mut out, &series_shift(&b, weights[l] as i64));
    out
}

/// lim_{u->1} (1-u)^d * N(u) / prod_i (1 - u^{scale * w_i}), the leading
/// coefficient data of a Hilbert series with numerator N and dimension d.
pub fn series_leading_value(
    numer: &SeriesPoly,
    weights: &[u64],
    scale: u32,
    d: usize,
) -> Result<BigRational> {
    let n = weights.len();
    if d > n {
        return Err(Error::Invalid("dimension exceeds variable count".into()));
    }
    let mut num = numer.clone();
    for _ in 0..(n - d) {
        num = series_div_one_minus(&num)?;
    }
    let mut denom = BigInt::one();
    for &w in weights {
        denom *= BigInt::from(w * scale as u64);
    }
    Ok(BigRational::new(series_eval_one(&num), denom))
}

/// Fit the degree-d Hilbert-Samuel coefficient from consecutive values
/// f(0), f(1), ... : returns e with f(t) ~ (e/d!) t^d once the d-th finite
/// difference stabilizes (three equal trailing values required).
pub fn multiplicity_fit(values: &[u64], d: usize) -> Option<i64> {
    if values.len() < d + 3 {
        return None;
    }
    let mut row: Vec<i64> = values.iter().map(|&v| v as i64).collect();
    for _ in 0..d {
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let k = row.len();
    if k >= 3 && row[k - 1] == row[k - 2] && row[k - 2] == row[k - 3] {
        Some(row[k - 1])
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        // (xy, xz) in k[x,y,z] has dimension 2
        assert_eq!(dim_monomial(3, &[vec![1, 1, 0], vec![1, 0, 1]]), 2);
        assert_eq!(dim_monomial(2, &[]), 2);
        assert_eq!(dim_monomial(2, &[vec![1, 0], vec![0, 1]]), 0);
        assert_eq!(dim_monomial(2, &[vec![0, 0]]), -1);
    }

    #[test]
    fn standard_monomials() {
        // k[x]/(x^3): 1, x, x^2
        assert_eq!(count_standard_monomials(1, &[vec![3]]), Some(3));
        // k[x,y]/(x^2, xy, y^3): 1, x, y, y^2
        assert_eq!(
            count_standard_monomials(2, &[vec![2, 0], vec![1, 1], vec![0, 3]]),
            Some(4)
        );
        // k[x,y]/(x): infinite
        assert_eq!(count_standard_monomials(2, &[vec![1, 0]]), None);
    }

    #[test]
    fn numerator_matches_counting() {
        // k[x,y]/(x^2, xy): numerator (1-u)(1-u^2)*HS = 1 - u^2 - u^2... check by
        // expanding: HS = 1 + 2u + u^2 + u^3 + ... (monomials 1; x,y; y^2; y^3...)
        let numer = numerator_monomial(&[vec![2, 0], vec![1, 1]], &[1, 1]);
        // HS * (1-u)^2 = numer => numer = (1 + 2u + u^2/(1-u)) * (1-u)^2
        // = (1-u)^2 + 2u(1-u)^2 + u^2(1-u) = 1 - 2u^3 + u^4 + ... compute directly:
        let mut expect = SeriesPoly::new();
        // (1 + 2u)(1 - 2u + u^2) + u^2 - u^3 = 1 + 0u - 3u^2 + 2u^3 + u^2 - u^3
        expect.insert(0, 1);
        expect.insert(2, -2);
        expect.insert(3, 1);
        assert_eq!(numer, expect);
    }

    #[test]
    fn leading_value_of_plane() {
        // k[x,y]: numerator 1, d = 2: c = 1
        let numer = series_one();
        let c = series_leading_value(&numer, &[1, 1], 1, 2).unwrap();
        assert_eq!(c, BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn fit_quadratic() {
        // f(t) = 3 t^2 + t + 1 has second difference 6, e = 6
        let vals: Vec<u64> = (0..8u64).map(|t| 3 * t * t + t + 1).collect();
        assert_eq!(multiplicity_fit(&vals, 2), Some(6));
        assert_eq!(multiplicity_fit(&vals[..4], 2), None);
    }
}
