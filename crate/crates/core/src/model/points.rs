//! Exact sample points on the determinantal quartic.
//!
//! Only points with coordinates in the model's field are returned. Candidates
//! are the coordinate vertices and the rational roots of `Q` restricted to
//! random lines with small integer endpoints.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::exactnum::linalg::{normalize_projective, projectively_equal};
use crate::exactnum::{Cyclotomic, CyclotomicField, Rational};
use crate::polyalg::MultiPoly;

use std::sync::Arc;

/// Largest constant or leading coefficient whose divisors are enumerated.
const DIVISOR_BOUND: u64 = 1_000_000;

/// A point with small integer coordinates, not all zero.
pub fn random_point<const K: usize>(
    field: &Arc<CyclotomicField>,
    rng: &mut impl Rng,
    bound: i64,
) -> [Cyclotomic; K] {
    loop {
        let v: [i64; K] = std::array::from_fn(|_| rng.gen_range(-bound..=bound));
        if v.iter().any(|&a| a != 0) {
            return v.map(|a| field.int(a));
        }
    }
}

/// Up to `want` distinct normalized points of `{q = 0} ⊂ ℙ²`, trying at most
/// `attempts` random lines.
pub fn sample_quartic_points(
    q: &MultiPoly,
    field: &Arc<CyclotomicField>,
    rng: &mut impl Rng,
    want: usize,
    attempts: usize,
) -> Vec<[Cyclotomic; 3]> {
    let mut found: Vec<[Cyclotomic; 3]> = Vec::new();
    let push = |p: [Cyclotomic; 3], found: &mut Vec<[Cyclotomic; 3]>| {
        if !found.iter().any(|f| projectively_equal(f, &p)) {
            found.push(normalize_projective(&p).try_into().expect("3 entries"));
        }
    };
    for i in 0..3 {
        let e: [Cyclotomic; 3] =
            std::array::from_fn(|j| if i == j { field.one() } else { field.zero() });
        if q.eval(&e).map(|v| v.is_zero()).unwrap_or(false) {
            push(e, &mut found);
        }
    }
    for _ in 0..attempts {
        if found.len() >= want {
            break;
        }
        let p: [Cyclotomic; 3] = random_point(field, rng, 3);
        let r: [Cyclotomic; 3] = random_point(field, rng, 3);
        if projectively_equal(&p, &r) {
            continue;
        }
        for s in line_roots(q, field, &p, &r) {
            let pt: [Cyclotomic; 3] = std::array::from_fn(|k| &p[k] + &(&r[k] * &s));
            if pt.iter().any(|c| !c.is_zero()) {
                push(pt, &mut found);
            }
        }
    }
    found.truncate(want);
    found
}

/// Roots in the field of `s ↦ q(p + s r)`, found when the restriction is a
/// scalar multiple of a rational polynomial.
fn line_roots(
    q: &MultiPoly,
    field: &Arc<CyclotomicField>,
    p: &[Cyclotomic; 3],
    r: &[Cyclotomic; 3],
) -> Vec<Cyclotomic> {
    let one = field.one();
    let s = MultiPoly::var(0, 1, &one);
    let images: Vec<MultiPoly> = (0..3)
        .map(|k| &MultiPoly::constant(p[k].clone(), 1) + &s.scale(&r[k]))
        .collect();
    let Ok(restricted) = q.substitute(&images) else {
        return Vec::new();
    };
    let Some(lead) = restricted.some_coeff().cloned() else {
        return Vec::new();
    };
    let Ok(inv) = lead.inv() else {
        return Vec::new();
    };
    let deg = restricted.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in restricted.terms() {
        let Some(v) = (c * &inv).as_rational().cloned() else {
            return Vec::new();
        };
        coeffs[m.exponents()[0] as usize] = v;
    }
    rational_roots(&coeffs)
        .into_iter()
        .map(|x| field.rational(x))
        .collect()
}

/// Rational roots of `Σ c_k s^k` by the rational root theorem.
fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let denom = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(denom.clone())).to_integer())
        .collect();
    let Some(top) = ints.iter().rposition(|c| !c.is_zero()) else {
        return Vec::new();
    };
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero");
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[low..=top];
    let (Some(a0), Some(an)) = (small_abs(&ints[0]), small_abs(&ints[ints.len() - 1])) else {
        return roots;
    };
    let eval = |x: &Rational| {
        ints.iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    };
    for num in divisors(a0) {
        for den in divisors(an) {
            if num.gcd(&den) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let x = Rational::new(BigInt::from(sign * num as i64), BigInt::from(den));
                if eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

fn small_abs(c: &BigInt) -> Option<u64> {
    c.abs().to_u64().filter(|&v| v <= DIVISOR_BOUND)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..)
        .take_while(|d| d * d <= n)
        .filter(|d| n.is_multiple_of(*d))
        .flat_map(|d| [d, n / d])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rational_roots_of_product() {
        // (2s - 1)(s + 3) s = 2s^3 + 5s^2 - 3s
        let roots = rational_roots(&[rat(0), rat(-3), rat(5), rat(2)]);
        let mut got: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["-3", "0", "1/2"]);
    }

    #[test]
    fn conic_points_lie_on_curve() {
        let f = CyclotomicField::new(1);
        let one = f.one();
        let v: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(i, 3, &one)).collect();
        // X^2 + Y^2 - Z^2 has plenty of rational points
        let q = &(&(&v[0] * &v[0]) + &(&v[1] * &v[1])) - &(&v[2] * &v[2]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pts = sample_quartic_points(&q, &f, &mut rng, 4, 200);
        assert_eq!(pts.len(), 4);
        for p in &pts {
            assert!(q.eval(p).unwrap().is_zero());
        }
    }
}
