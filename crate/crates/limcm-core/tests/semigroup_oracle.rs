//! Independent combinatorial oracles for the semigroup ring
//! A = k[s^4, s^3 t, s t^3, t^4], presented as k[a,b,c,d] modulo
//! (bc - ad, b^3 - a^2 c, a c^2 - b^2 d, c^3 - b d^2).
//!
//! The oracle side never touches Groebner machinery: the Hilbert function is
//! counted from semigroup membership DP, and the first local cohomology length
//! comes from the section-ring gap count sum_n (4n + 1 - #A_n).

use limcm_core::complex::local_cohomology_lengths;
use limcm_core::module::Length;
use limcm_core::{GradedModule, GradedRing, Ideal, PrimeField};

pub const SEMIGROUP_RELS: [&str; 4] = ["b*c-a*d", "b^3-a^2*c", "a*c^2-b^2*d", "c^3-b*d^2"];

fn semigroup_ring(p: u64) -> GradedRing {
    GradedRing::new(
        PrimeField::new(p).unwrap(),
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        vec![1, 1, 1, 1],
        &SEMIGROUP_RELS,
    )
    .unwrap()
    .declare_domain()
}

/// (i, j) pairs reachable as sums of the exponent vectors (4,0),(3,1),(1,3),(0,4),
/// up to coordinate cap.
fn semigroup_reachable(cap: usize) -> Vec<Vec<bool>> {
    let gens: [(usize, usize); 4] = [(4, 0), (3, 1), (1, 3), (0, 4)];
    let mut reach = vec![vec![false; cap + 1]; cap + 1];
    reach[0][0] = true;
    for i in 0..=cap {
        for j in 0..=cap {
            if !reach[i][j] {
                continue;
            }
            for (gi, gj) in gens {
                let (ni, nj) = (i + gi, j + gj);
                if ni <= cap && nj <= cap {
                    reach[ni][nj] = true;
                }
            }
        }
    }
    reach
}

fn semigroup_level_count(reach: &[Vec<bool>], n: usize) -> u64 {
    let mut cnt = 0;
    for i in 0..=4 * n {
        let j = 4 * n - i;
        if reach[i][j] {
            cnt += 1;
        }
    }
    cnt
}

#[test]
fn presentation_matches_semigroup_hilbert_function() {
    let ring = semigroup_ring(2);
    assert_eq!(ring.dim().unwrap(), 2);

    let nmax = 8usize;
    let reach = semigroup_reachable(4 * nmax);
    let zero = Ideal::zero(&ring);
    let gb = zero.groebner_basis().unwrap();
    let leads: Vec<Vec<u32>> = gb.iter().map(|g| g.leading().unwrap().exp.clone()).collect();

    for n in 0..=nmax {
        // standard monomials of total degree n
        let mut cnt = 0u64;
        for ea in 0..=n {
            for eb in 0..=(n - ea) {
                for ec in 0..=(n - ea - eb) {
                    let ed = n - ea - eb - ec;
                    let e = [ea as u32, eb as u32, ec as u32, ed as u32];
                    let divisible =
                        leads.iter().any(|l| l.iter().zip(e.iter()).all(|(&a, &b)| a <= b));
                    if !divisible {
                        cnt += 1;
                    }
                }
            }
        }
        assert_eq!(
            cnt,
            semigroup_level_count(&reach, n),
            "Hilbert function mismatch in degree {n}"
        );
    }
}

#[test]
fn relations_vanish_on_parametrization() {
    // each relation is a binomial x^u - x^v with equal (s, t)-exponent images
    let images: [(u64, u64); 4] = [(4, 0), (3, 1), (1, 3), (0, 4)];
    let pairs: [([u32; 4], [u32; 4]); 4] = [
        ([0, 1, 1, 0], [1, 0, 0, 1]), // bc = ad
        ([0, 3, 0, 0], [2, 0, 1, 0]), // b^3 = a^2 c
        ([1, 0, 2, 0], [0, 2, 0, 1]), // a c^2 = b^2 d
        ([0, 0, 3, 0], [0, 1, 0, 2]), // c^3 = b d^2
    ];
    for (u, v) in pairs {
        let img = |e: [u32; 4]| -> (u64, u64) {
            let mut s = 0;
            let mut t = 0;
            for (k, &ek) in e.iter().enumerate() {
                s += ek as u64 * images[k].0;
                t += ek as u64 * images[k].1;
            }
            (s, t)
        };
        assert_eq!(img(u), img(v));
    }
}

#[test]
fn first_local_cohomology_matches_gap_oracle() {
    // oracle: l(H^1_m(A)) = sum_{n >= 0} (dim H^0(O(4n)) - dim A_n)
    //       = sum_n (4n + 1 - #semigroup elements at level n)
    let nmax = 8usize;
    let reach = semigroup_reachable(4 * nmax);
    let mut gap_total = 0u64;
    for n in 0..=nmax {
        let full = 4 * n as u64 + 1;
        let have = semigroup_level_count(&reach, n);
        assert!(have <= full);
        gap_total += full - have;
    }
    assert_eq!(gap_total, 1, "the only gap is s^2 t^2 in degree 1");

    let ring = semigroup_ring(2);
    let a = GradedModule::ring_module(&ring);
    let lc = local_cohomology_lengths(&a, 1).unwrap();
    assert_eq!(lc[0], Length::Finite(0));
    assert_eq!(lc[1], Length::Finite(gap_total));
}
