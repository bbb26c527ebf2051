//! Characters of `⟨σ⟩` on `Lie(J_C)` and `Lie(IJ_X)`, and the
//! linearisability verdict.
//!
//! A character is an exponent `k mod n` meaning `σ ↦ ϖ^k`, `ϖ = ζ_n`. The sign
//! character is the exponent `n/2`.
//!
//! For the weight arguments, `r` is the list of weights whose sum is the
//! eigenvalue exponent of `σ` on the determinantal quartic: the four swap
//! weights, or all eight weights of a diagonal action.

use std::fmt;

use crate::action::{is_gfano, InvariantPencil, SwapActionSpec};
use crate::coh::equivariant_top_eigenvalue;
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, CyclotomicField};
use crate::model::determinantal_quartic;
use crate::polyalg::MultiPoly;

/// Three characters of `ℤ/n`, exponents reduced to `[0, n)` and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterMultiset {
    order: u64,
    exponents: [u64; 3],
}

impl CharacterMultiset {
    pub fn new(order: u64, exponents: [i64; 3]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidAction("order must be positive".into()));
        }
        let mut exponents = exponents.map(|k| k.rem_euclid(order as i64) as u64);
        exponents.sort_unstable();
        Ok(CharacterMultiset { order, exponents })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> [u64; 3] {
        self.exponents
    }

    /// Tensor with `χ_k`.
    pub fn shift(&self, k: i64) -> Self {
        let e = self.exponents.map(|x| x as i64 + k);
        CharacterMultiset::new(self.order, e).expect("positive order")
    }
}

impl fmt::Display for CharacterMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.exponents;
        write!(f, "{{{a},{b},{c}}} mod {}", self.order)
    }
}

fn jac_exponents(s: [i64; 3], r: &[i64]) -> [i64; 3] {
    let ss: i64 = s.iter().sum();
    let sr: i64 = r.iter().sum();
    s.map(|sj| sj + ss - sr)
}

/// `{ s_j + Σs − Σr : j = 1..3 }`.
pub fn jac_curve_characters(s: [i64; 3], r: &[i64], n: u64) -> Result<CharacterMultiset> {
    CharacterMultiset::new(n, jac_exponents(s, r))
}

/// The curve characters tensored with the sign character.
pub fn ij_characters(s: [i64; 3], r: &[i64], n: u64) -> Result<CharacterMultiset> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    Ok(jac_curve_characters(s, r, n)?.shift(n as i64 / 2))
}

/// Whether the two multisets differ.
pub fn characters_differ(a: &CharacterMultiset, b: &CharacterMultiset) -> Result<bool> {
    if a.order != b.order {
        return Err(Error::CharacterOrderMismatch(a.order, b.order));
    }
    Ok(a.exponents != b.exponents)
}

fn exponent_of(value: &Cyclotomic, n: u64) -> Result<i64> {
    value.as_power_of_root(n).map(|k| k as i64).ok_or(Error::NotRootOfUnity(n))
}

/// `c` with `f(ϖ^{e_0} x_0, …) = c · f`, checked exactly.
fn substitution_eigenvalue(f: &MultiPoly, scales: &[Cyclotomic]) -> Result<Cyclotomic> {
    let nvars = f.nvars();
    let one = scales[0].one_like();
    let images: Vec<MultiPoly> = (0..nvars)
        .map(|i| MultiPoly::var(i, nvars, &one).scale(&scales[i]))
        .collect();
    let g = f.substitute(&images)?;
    let (m, c) = f.leading_term().ok_or(Error::DegenerateQuartic)?;
    let lambda = g.coeff(m).cloned().unwrap_or_else(|| one.zero_like()).checked_div(c)?;
    if g != f.scale(&lambda) {
        return Err(Error::NotEigenvector);
    }
    Ok(lambda)
}

/// Characters of `σ` on `H⁰(ℙ², K(C))`, computed on the basis
/// `g · du∧dv / q(u,v)`, `g ∈ {1, u, v}`, in the chart `u = y/x, v = z/x`.
///
/// The quartic `Q = det(xM'_1 + yM'_2 + zM'_3)` must satisfy
/// `Q(ϖ^{s_1}x, ϖ^{s_2}y, ϖ^{s_3}z) = ϖ^{Σr} Q`; the chart polynomial, the
/// Jacobian of the substitution, and each `g` contribute their own exact
/// eigenvalues.
pub fn curve_action_oracle(pencil: &InvariantPencil, r: &[i64], n: u64) -> Result<CharacterMultiset> {
    let q = determinantal_quartic(&pencil.model()?)?;
    let nat = q.some_coeff().ok_or(Error::DegenerateQuartic)?.field().clone();
    let field = CyclotomicField::new(num_integer::lcm(nat.conductor(), n));
    let step = (field.conductor() / n) as i64;
    let varpi = |k: i64| field.root_of_unity(k * step);
    let q = q.scale(&field.one());
    let s = pencil.exponents;

    if q.terms().all(|(m, _)| m.exponents()[0] > 0) {
        return Err(Error::NotAQuartic("quartic divisible by x: the chart u = y/x misses C".into()));
    }
    let lambda_q = substitution_eigenvalue(&q, &s.map(varpi))?;
    let expected: i64 = r.iter().sum::<i64>().rem_euclid(n as i64);
    let found = lambda_q.as_power_of_root(n);
    if found != Some(expected as u64) {
        return Err(Error::QuarticEigenvalueMismatch { expected, found });
    }

    // chart ring k[u, v]; x is set to 1 and dropped
    let chart = q.dehomogenize(&[0])?;
    let q_uv = chart_to_two_vars(&chart);
    let cu = varpi(s[1] - s[0]);
    let cv = varpi(s[2] - s[0]);
    let mu_q = substitution_eigenvalue(&q_uv, &[cu.clone(), cv.clone()])?;
    let quartic_twist = varpi(-4 * s[0]);
    if mu_q != &quartic_twist * &lambda_q {
        return Err(Error::NotEigenvector);
    }

    let one = field.one();
    let u = MultiPoly::var(0, 2, &one);
    let v = MultiPoly::var(1, 2, &one);
    let (su, sv) = (u.scale(&cu), v.scale(&cv));
    let jac = &(&su.partial(0) * &sv.partial(1)) - &(&su.partial(1) * &sv.partial(0));
    let jac = match jac.terms().next() {
        Some((m, c)) if jac.len() == 1 && m.degree() == 0 => c.clone(),
        _ => return Err(Error::NotEigenvector),
    };

    let mut exps = [0i64; 3];
    for (slot, g) in exps.iter_mut().zip([MultiPoly::constant(one.clone(), 2), u, v]) {
        let mg = substitution_eigenvalue(&g, &[cu.clone(), cv.clone()])?;
        let eigen = (&mg * &jac).checked_div(&mu_q)?;
        *slot = exponent_of(&eigen, n)?;
    }
    CharacterMultiset::new(n, exps)
}

/// Drops the first variable of a polynomial in which it no longer occurs.
fn chart_to_two_vars(f: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(2);
    for (m, c) in f.terms() {
        let e = m.exponents();
        out.add_term(crate::polyalg::Monomial::new(vec![e[1], e[2]]), c);
    }
    out
}

/// Characters of `σ` on `Lie(IJ_X) ≅ ⊕_j H³(X, L_j)`, each line identified
/// with `H⁶(O(-4,-4))`: the top-class eigenvalue from the cup-product model,
/// times `ϖ^{Σs}` from the Koszul generator `F_1∧F_2∧F_3`, times `ϖ^{s_j}`.
pub fn ij_oracle(pencil: &InvariantPencil, r: &[i64], n: u64, swap: bool) -> Result<CharacterMultiset> {
    let top = equivariant_top_eigenvalue(r, n, swap)?;
    let field = top.field().clone();
    let s = pencil.exponents;
    let koszul = field.root_of_unity(s.iter().sum());
    let mut exps = [0i64; 3];
    for (slot, &sj) in exps.iter_mut().zip(&s) {
        let eigen = &(&top * &koszul) * &field.root_of_unity(sj);
        *slot = exponent_of(&eigen, n)?;
    }
    CharacterMultiset::new(n, exps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Linearisable,
    NotLinearisable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Linearisable => "Linearisable",
            Verdict::NotLinearisable => "NotLinearisable",
        })
    }
}

/// Linearisable exactly when `X` is not `G`-Fano.
pub fn verdict(spec: &SwapActionSpec) -> Verdict {
    if is_gfano(spec) {
        Verdict::NotLinearisable
    } else {
        Verdict::Linearisable
    }
}

/// The verdict together with its justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictReport {
    pub verdict: Verdict,
    pub explanation: String,
    /// `(Lie(J_C), Lie(IJ_X), differ)` when the exponents are known and the
    /// action swaps.
    pub witness: Option<(CharacterMultiset, CharacterMultiset, bool)>,
}

pub fn verdict_report(spec: &SwapActionSpec, s: Option<[i64; 3]>) -> Result<VerdictReport> {
    let v = verdict(spec);
    let (explanation, witness) = match (v, s) {
        (Verdict::Linearisable, _) => (
            "sigma preserves both rulings, so the blow-down of E to P^3 is G-equivariant \
             and the action on X is birational to a linear action on P^3"
                .to_string(),
            None,
        ),
        (Verdict::NotLinearisable, s) => {
            let witness = match s {
                Some(s) => {
                    let r = spec.all_weights();
                    let jac = jac_curve_characters(s, &r, spec.order())?;
                    let ij = ij_characters(s, &r, spec.order())?;
                    let differ = characters_differ(&jac, &ij)?;
                    Some((jac, ij, differ))
                }
                None => None,
            };
            (
                "X is G-Fano; Lie(IJ_X) and Lie(J_C) differ by the sign character, \
                 which no G-birational map to a linear action can produce"
                    .to_string(),
                witness,
            )
        }
    };
    Ok(VerdictReport { verdict: v, explanation, witness })
}

#[cfg(test)]
mod tests;
