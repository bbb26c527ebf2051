//! Buchberger's algorithm in grevlex with the Gebauer–Möller pair update
//! (product and chain criteria).

use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use crate::error::{Error, Result};

use super::{Monomial, MultiPoly};

/// S-pairs whose lcm exceeds this degree abort the computation.
pub const DEFAULT_DEGREE_CAP: u32 = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<MultiPoly>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = MultiPoly>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            nvars,
            generators: gens,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(MultiPoly::is_homogeneous)
    }

    pub(crate) fn require_homogeneous(&self) -> Result<()> {
        match self.generators.iter().position(|g| !g.is_homogeneous()) {
            Some(i) => Err(Error::NonHomogeneous(format!("generator {i} is not homogeneous"))),
            None => Ok(()),
        }
    }

    /// True if the ideal is generated by the constant 1, assuming `self` is a
    /// reduced Gröbner basis.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].degree() == Some(0)
    }
}

/// Full reduction of `f` modulo a list of monic polynomials.
pub fn normal_form(f: &MultiPoly, basis: &[&MultiPoly]) -> MultiPoly {
    let mut p = f.clone();
    let mut rem = MultiPoly::zero(f.nvars());
    while let Some((m, c)) = p.pop_leading() {
        match basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)))
        {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero");
                let q = lm.quotient_of(&m);
                let coeff = if lc.is_one() { c } else { &c / lc };
                // `p` already lost the leading term; subtract the rest of `g`.
                for (gm, gc) in g.terms().rev().skip(1) {
                    p.add_term(q.mul(gm), &-(&coeff * gc));
                }
            }
            None => rem.add_term(m, &c),
        }
    }
    rem
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, lcm: &Monomial) -> MultiPoly {
    // both monic
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let mut s = f.mul_monomial(&lf.quotient_of(lcm));
    let one = f.leading_term().expect("nonzero").1.one_like();
    s.sub_scaled(&one, &lg.quotient_of(lcm), g);
    s
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Buchberger {
    polys: Vec<MultiPoly>,
    basis: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Buchberger {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("basis elements are nonzero")
    }

    fn update(&mut self, h: MultiPoly) {
        let hi = self.polys.len();
        self.polys.push(h);
        let hl = self.lm(hi).clone();

        let mut candidates: Vec<(usize, Monomial)> = self
            .basis
            .iter()
            .map(|&g| (g, self.lm(g).lcm(&hl)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, l)) = candidates.pop() {
            let coprime = self.lm(g).is_coprime(&hl);
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !self.lm(*g).is_coprime(&hl))
            .map(|(g, lcm)| Pair { i: g, j: hi, lcm })
            .collect();

        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !hl.divides(&p.lcm)
                    || self.lm(p.i).lcm(&hl) == p.lcm
                    || self.lm(p.j).lcm(&hl) == p.lcm
            })
            .collect();
        self.pairs.extend(fresh);

        let keep: Vec<usize> = self
            .basis
            .iter()
            .copied()
            .filter(|&g| !hl.divides(self.lm(g)))
            .collect();
        self.basis = keep;
        self.basis.push(hi);
    }

    fn reduce_against_basis(&self, f: &MultiPoly) -> MultiPoly {
        let refs: Vec<&MultiPoly> = self.basis.iter().map(|&i| &self.polys[i]).collect();
        normal_form(f, &refs)
    }
}

/// Reduced Gröbner basis in grevlex with the default degree cap.
pub fn groebner(ideal: &Ideal) -> Result<Ideal> {
    groebner_with_cap(ideal, DEFAULT_DEGREE_CAP)
}

pub fn groebner_with_cap(ideal: &Ideal, cap: u32) -> Result<Ideal> {
    let never = AtomicBool::new(false);
    Ok(groebner_cancellable(ideal, cap, &never)?.expect("never cancelled"))
}

/// Like [`groebner_with_cap`], returning `Ok(None)` once `stop` is observed set.
pub fn groebner_cancellable(ideal: &Ideal, cap: u32, stop: &AtomicBool) -> Result<Option<Ideal>> {
    let nvars = ideal.nvars;
    let mut state = Buchberger {
        polys: Vec::new(),
        basis: Vec::new(),
        pairs: Vec::new(),
    };
    let mut inputs: Vec<&MultiPoly> = ideal.generators.iter().collect();
    inputs.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in inputs {
        let h = state.reduce_against_basis(g);
        if h.is_zero() {
            continue;
        }
        if h.degree() == Some(0) {
            return Ok(Some(unit_ideal(nvars, &h)));
        }
        state.update(h.monic());
    }

    while !state.pairs.is_empty() {
        if stop.load(AtomicOrdering::Relaxed) {
            return Ok(None);
        }
        // normal strategy: smallest lcm first
        let (pos, _) = state
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.lcm.cmp(&b.lcm))
            .expect("nonempty");
        let pair = state.pairs.swap_remove(pos);
        let degree = pair.lcm.degree();
        if degree > cap {
            return Err(Error::DegreeCapExceeded { cap, degree });
        }
        let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j], &pair.lcm);
        let h = state.reduce_against_basis(&s);
        if h.is_zero() {
            continue;
        }
        if h.degree() == Some(0) {
            return Ok(Some(unit_ideal(nvars, &h)));
        }
        state.update(h.monic());
    }

    let basis: Vec<MultiPoly> = state.basis.iter().map(|&i| state.polys[i].clone()).collect();
    let mut reduced = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<&MultiPoly> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p)
            .collect();
        reduced.push(normal_form(g, &others).monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    Ok(Some(Ideal {
        nvars,
        generators: reduced,
    }))
}

fn unit_ideal(nvars: usize, h: &MultiPoly) -> Ideal {
    let one = h.some_coeff().expect("nonzero").one_like();
    Ideal {
        nvars,
        generators: vec![MultiPoly::constant(one, nvars)],
    }
}

/// Decides whether the projective zero set of a homogeneous ideal is empty:
/// by the homogeneous Nullstellensatz this holds iff every variable has a
/// pure power among the leading monomials of a Gröbner basis.
pub fn projective_empty(ideal: &Ideal) -> Result<bool> {
    ideal.require_homogeneous()?;
    let gb = groebner(ideal)?;
    Ok(leading_terms_cover_all_variables(&gb))
}

/// Pure-power criterion on an already computed Gröbner basis.
pub fn leading_terms_cover_all_variables(gb: &Ideal) -> bool {
    if gb.is_unit() {
        return true;
    }
    let mut covered = vec![false; gb.nvars];
    for g in &gb.generators {
        if let Some(i) = g.leading_monomial().and_then(Monomial::pure_power_var) {
            covered[i] = true;
        }
    }
    covered.iter().all(|&c| c)
}

/// True iff the ideal contains 1.
pub fn is_unit_ideal(ideal: &Ideal) -> Result<bool> {
    Ok(groebner(ideal)?.is_unit())
}
