//! Unit-ideal tests over a prime field `F_p` with `p ≡ 1 (mod N)`.
//!
//! `ζ_N` maps to a primitive `N`-th root of unity `ω ∈ F_p`, which gives a
//! ring map from the `p`-integral elements of ℚ(ζ_N) onto `F_p`. If the
//! reductions of some generators already generate `(1)`, no common zero of the
//! originals has coordinates integral above `p`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exactnum::Cyclotomic;

use super::groebner::Ideal;
use super::{Monomial, MultiPoly};

/// A prime `p ≡ 1 (mod N)` together with the image `ω` of `ζ_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeReduction {
    pub prime: u64,
    pub omega: u64,
}

impl PrimeReduction {
    /// The reductions for conductor `n`, largest primes below 2³¹ first.
    pub fn for_conductor(n: u64) -> impl Iterator<Item = PrimeReduction> {
        let n = n.max(1);
        let top = ((1u64 << 31) - 1) / n;
        (1..=top)
            .rev()
            .map(move |k| k * n + 1)
            .filter(|&p| is_prime(p))
            .map(move |p| PrimeReduction {
                prime: p,
                omega: primitive_root_of_order(p, n),
            })
    }

    /// `None` if a denominator is divisible by `p`.
    pub fn reduce(&self, c: &Cyclotomic) -> Option<u64> {
        let p = self.prime;
        let mut acc = 0u64;
        let mut w = 1u64;
        for r in c.coeffs() {
            let num = modp(r.numer(), p);
            let den = modp(r.denom(), p);
            if den == 0 {
                return None;
            }
            let term = mul(mul(num, inv(den, p), p), w, p);
            acc = (acc + term) % p;
            w = mul(w, self.omega, p);
        }
        Some(acc)
    }

    fn reduce_poly(&self, f: &MultiPoly) -> Option<ModPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in f.terms() {
            let v = self.reduce(c)?;
            if v != 0 {
                terms.insert(m.clone(), v);
            }
        }
        Some(ModPoly { terms })
    }
}

/// Whether the reductions of the generators generate the unit ideal of
/// `F_p[x]`; `None` if some coefficient is not `p`-integral.
pub fn is_unit_ideal_mod_p(ideal: &Ideal, red: PrimeReduction) -> Option<bool> {
    let gens: Vec<ModPoly> = ideal
        .generators()
        .iter()
        .map(|g| red.reduce_poly(g))
        .collect::<Option<_>>()?;
    Some(ModBuchberger::new(red.prime).reaches_unit(gens))
}

fn modp(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = r.to_i64().expect("residue fits");
    r.rem_euclid(p as i64) as u64
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of exact multiplicative order `n` in `F_p`; requires `n | p - 1`.
fn primitive_root_of_order(p: u64, n: u64) -> u64 {
    let factors = prime_factors(n);
    (2..p)
        .map(|a| pow(a, (p - 1) / n, p))
        .find(|&w| factors.iter().all(|&q| pow(w, n / q, p) != 1))
        .expect("F_p^* is cyclic")
}

/// Sparse polynomial over `F_p`, terms in grevlex order (leading term last).
#[derive(Clone, Debug)]
struct ModPoly {
    terms: BTreeMap<Monomial, u64>,
}

impl ModPoly {
    fn lm(&self) -> &Monomial {
        self.terms.keys().next_back().expect("nonzero")
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.lm().degree() == 0
    }

    fn monic(mut self, p: u64) -> Self {
        let lc = *self.terms.values().next_back().expect("nonzero");
        let k = inv(lc, p);
        for v in self.terms.values_mut() {
            *v = mul(*v, k, p);
        }
        self
    }

    /// `self -= c * m * g`.
    fn sub_scaled(&mut self, c: u64, m: &Monomial, g: &ModPoly, p: u64) {
        for (gm, &gc) in &g.terms {
            let d = mul(c, gc, p);
            let key = m.mul(gm);
            let entry = self.terms.entry(key);
            match entry {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(p - d);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let v = (*e.get() + p - d) % p;
                    if v == 0 {
                        e.remove();
                    } else {
                        *e.get_mut() = v;
                    }
                }
            }
        }
    }
}

struct ModBuchberger {
    p: u64,
    polys: Vec<ModPoly>,
    basis: Vec<usize>,
    pairs: Vec<(usize, usize, Monomial)>,
}

impl ModBuchberger {
    fn new(p: u64) -> Self {
        ModBuchberger {
            p,
            polys: Vec::new(),
            basis: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].lm()
    }

    /// Full reduction against the current basis (all monic).
    fn normal_form(&self, f: &ModPoly) -> ModPoly {
        let mut rest = f.clone();
        let mut out = BTreeMap::new();
        while let Some((m, c)) = rest.terms.pop_last() {
            let div = self.basis.iter().find(|&&g| self.lm(g).divides(&m));
            match div {
                Some(&g) => {
                    let g = &self.polys[g];
                    let q = g.lm().quotient_of(&m);
                    let mut tail = g.clone();
                    tail.terms.pop_last();
                    rest.sub_scaled(c, &q, &tail, self.p);
                }
                None => {
                    out.insert(m, c);
                }
            }
        }
        ModPoly { terms: out }
    }

    fn update(&mut self, h: ModPoly) {
        let hi = self.polys.len();
        self.polys.push(h);
        let hl = self.lm(hi).clone();
        let mut candidates: Vec<(usize, Monomial)> =
            self.basis.iter().map(|&g| (g, self.lm(g).lcm(&hl))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, l)) = candidates.pop() {
            let coprime = self.lm(g).is_coprime(&hl);
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let fresh: Vec<_> = kept
            .into_iter()
            .filter(|(g, _)| !self.lm(*g).is_coprime(&hl))
            .map(|(g, l)| (g, hi, l))
            .collect();
        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|(i, j, l)| {
                !hl.divides(l) || &self.lm(*i).lcm(&hl) == l || &self.lm(*j).lcm(&hl) == l
            })
            .collect();
        self.pairs.extend(fresh);
        let keep: Vec<usize> = self.basis.iter().copied().filter(|&g| !hl.divides(self.lm(g))).collect();
        self.basis = keep;
        self.basis.push(hi);
    }

    fn reaches_unit(mut self, mut gens: Vec<ModPoly>) -> bool {
        gens.retain(|g| !g.terms.is_empty());
        gens.sort_by(|a, b| a.lm().cmp(b.lm()));
        for g in gens {
            let h = self.normal_form(&g);
            if h.terms.is_empty() {
                continue;
            }
            if h.is_constant() {
                return true;
            }
            self.update(h.monic(self.p));
        }
        while !self.pairs.is_empty() {
            let (pos, _) = self
                .pairs
                .iter()
                .enumerate()
                .min_by(|a, b| a.1 .2.cmp(&b.1 .2))
                .expect("nonempty");
            let (i, j, l) = self.pairs.swap_remove(pos);
            let mut s = ModPoly {
                terms: self.polys[i]
                    .terms
                    .iter()
                    .map(|(m, &c)| (m.mul(&self.lm(i).quotient_of(&l)), c))
                    .collect(),
            };
            s.sub_scaled(1, &self.lm(j).quotient_of(&l), &self.polys[j], self.p);
            let h = self.normal_form(&s);
            if h.terms.is_empty() {
                continue;
            }
            if h.is_constant() {
                return true;
            }
            self.update(h.monic(self.p));
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CyclotomicField;

    #[test]
    fn omega_has_exact_order() {
        for n in [1, 2, 3, 4, 6, 8, 12, 24] {
            let red = PrimeReduction::for_conductor(n).next().unwrap();
            assert_eq!((red.prime - 1) % n, 0);
            assert_eq!(pow(red.omega, n, red.prime), 1);
            for d in 1..n {
                assert_ne!(pow(red.omega, d, red.prime), 1, "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn reduction_is_a_ring_map() {
        let f = CyclotomicField::new(8);
        let red = PrimeReduction::for_conductor(8).next().unwrap();
        let a = &f.root_of_unity(3) + &f.rational(crate::exactnum::Rational::new(2.into(), 3.into()));
        let b = &f.root_of_unity(5) - &f.int(7);
        let p = red.prime;
        let lhs = red.reduce(&(&a * &b)).unwrap();
        let rhs = mul(red.reduce(&a).unwrap(), red.reduce(&b).unwrap(), p);
        assert_eq!(lhs, rhs);
        assert_eq!(red.reduce(&f.root_of_unity(4)).unwrap(), p - 1);
    }

    #[test]
    fn unit_and_proper_ideals() {
        let f = CyclotomicField::new(1);
        let one = f.one();
        let x = MultiPoly::var(0, 2, &one);
        let y = MultiPoly::var(1, 2, &one);
        let c = MultiPoly::constant(one.clone(), 2);
        let red = PrimeReduction::for_conductor(1).next().unwrap();
        // x y - 1 and x: unit
        let unit = Ideal::new(2, [&(&x * &y) - &c, x.clone()]).unwrap();
        assert_eq!(is_unit_ideal_mod_p(&unit, red), Some(true));
        // x^2 - y, y - 1: the point (1, 1)
        let proper = Ideal::new(2, [&(&x * &x) - &y, &y - &c]).unwrap();
        assert_eq!(is_unit_ideal_mod_p(&proper, red), Some(false));
    }

    #[test]
    fn bad_prime_detected() {
        let f = CyclotomicField::new(1);
        let red = PrimeReduction::for_conductor(1).next().unwrap();
        let c = f.rational(crate::exactnum::Rational::new(1.into(), (red.prime as i64).into()));
        let ideal = Ideal::new(1, [MultiPoly::constant(c, 1)]).unwrap();
        assert_eq!(is_unit_ideal_mod_p(&ideal, red), None);
    }
}
