use std::cmp::Ordering;

/// Exponent vector of a monomial; index i is the exponent of the i-th ring variable.
pub type Exps = Vec<u32>;

pub fn wdeg(weights: &[u64], e: &[u32]) -> u64 {
    e.iter().zip(weights).map(|(&a, &w)| a as u64 * w).sum()
}

/// Weight-graded reverse lexicographic order: higher weighted degree wins; on a
/// tie, the last nonzero entry of a - b decides (negative means a is larger).
pub fn cmp_grevlex(weights: &[u64], a: &[u32], b: &[u32]) -> Ordering {
    let da = wdeg(weights, a);
    let db = wdeg(weights, b);
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // last nonzero entry of a-b negative  =>  a > b
            return if a[i] < b[i] { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

/// b / a, assuming a | b.
pub fn div(b: &[u32], a: &[u32]) -> Exps {
    b.iter().zip(a).map(|(&x, &y)| x - y).collect()
}

pub fn mul(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub fn is_one(a: &[u32]) -> bool {
    a.iter().all(|&x| x == 0)
}

pub fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

pub fn scale(a: &[u32], k: u32) -> Exps {
    a.iter().map(|&x| x * k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_standard() {
        let w = [1u64, 1, 1];
        // degree first
        assert_eq!(cmp_grevlex(&w, &[2, 0, 0], &[1, 0, 0]), Ordering::Greater);
        // same degree: x^2 > xy > y^2 > xz > yz > z^2 for x>y>z
        assert_eq!(cmp_grevlex(&w, &[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&w, &[1, 1, 0], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&w, &[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&w, &[1, 0, 1], &[0, 1, 1]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&w, &[0, 1, 1], &[0, 0, 2]), Ordering::Greater);
    }

    #[test]
    fn grevlex_weighted() {
        // weights (1,2): y has degree 2, so x^2 and y tie on degree and y < x^2
        let w = [1u64, 2];
        assert_eq!(wdeg(&w, &[0, 1]), 2);
        assert_eq!(cmp_grevlex(&w, &[2, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&w, &[0, 1], &[1, 0]), Ordering::Greater);
    }
}
