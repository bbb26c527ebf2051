//! Hilbert polynomials of homogeneous ideals through their leading monomial
//! ideals.

use crate::error::Result;
use crate::exactnum::{rat, QPoly, Rational};

use super::groebner::{groebner, Ideal};
use super::Monomial;

/// Hilbert polynomial of `k[x_0..x_{n-1}] / I` for homogeneous `I`.
pub fn hilbert_polynomial(ideal: &Ideal) -> Result<QPoly> {
    ideal.require_homogeneous()?;
    let gb = groebner(ideal)?;
    let leading: Vec<Monomial> = gb
        .generators()
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    Ok(monomial_hilbert_polynomial(&leading, ideal.nvars()))
}

/// Hilbert polynomial of `k[x_0..x_{n-1}] / (gens)` for a monomial ideal.
pub fn monomial_hilbert_polynomial(gens: &[Monomial], nvars: usize) -> QPoly {
    let numerator = hilbert_numerator(gens.to_vec(), nvars);
    // HF(t) = Σ_k N_k · C(t - k + n - 1, n - 1) for t large.
    let mut out = QPoly::zero();
    for (k, &c) in numerator.iter().enumerate() {
        if c == 0 || nvars == 0 {
            continue;
        }
        let shifted = binomial_poly(nvars - 1).shift(&rat(-(k as i64)));
        out = &out + &shifted.scale(&rat(c));
    }
    out
}

/// `C(s + m, m)` as a polynomial in `s`.
fn binomial_poly(m: usize) -> QPoly {
    let mut p = QPoly::one();
    for j in 1..=m {
        let factor = QPoly::new(vec![rat(j as i64), rat(1)]);
        p = &p * &factor;
    }
    let fact: i64 = (1..=m as i64).product();
    p.scale(&Rational::new(1.into(), fact.into()))
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n`, by the pivot
/// recursion `N(I) = N(I + (x)) + t · N(I : x)`.
pub fn hilbert_numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.degree() == 0) {
        return vec![0];
    }
    let pivot = (0..nvars)
        .filter(|&v| {
            gens.iter()
                .any(|m| m.exponents()[v] > 0 && m.pure_power_var().is_none())
        })
        .max_by_key(|&v| gens.iter().filter(|m| m.exponents()[v] > 0).count());
    let Some(x) = pivot else {
        // distinct pure powers: Π (1 - t^{d})
        return gens.iter().fold(vec![1], |acc, m| {
            let mut factor = vec![0; m.degree() as usize + 1];
            factor[0] = 1;
            factor[m.degree() as usize] -= 1;
            poly_mul(&acc, &factor)
        });
    };
    let xm = Monomial::var(x, nvars);
    let mut with_x: Vec<Monomial> = gens.iter().filter(|m| m.exponents()[x] == 0).cloned().collect();
    with_x.push(xm);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut e = m.exponents().to_vec();
            e[x] = e[x].saturating_sub(1);
            Monomial::new(e)
        })
        .collect();
    let a = hilbert_numerator(with_x, nvars);
    let mut b = vec![0];
    b.extend(hilbert_numerator(colon, nvars));
    poly_add(&a, &b)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0))
        .collect()
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
