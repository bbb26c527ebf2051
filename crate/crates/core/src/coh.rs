//! Dimensions of line-bundle cohomology on ℙ³, ℙ³×ℙ³ and on `X`.
//!
//! Cohomology on `X` comes from the Koszul resolution
//! `0 → O(-3,-3) → O(-2,-2)³ → O(-1,-1)³ → O → O_X → 0` and the truncation
//! lemma: if every term of an exact complex `F^{-n} → … → F^0 → F^1` except
//! `F^{-s}` is acyclic, then `H^i(F^1) = H^{i+s}(F^{-s})`. Only this
//! single-column case is decided; anything else is reported as inconclusive.

use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, CyclotomicField};

/// `h^0, …, h^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohTable {
    dims: Vec<u64>,
}

impl CohTable {
    pub fn new(dims: Vec<u64>) -> Self {
        assert!(!dims.is_empty(), "a table covers degrees 0..=d");
        CohTable { dims }
    }

    pub fn zero(dim: usize) -> Self {
        CohTable { dims: vec![0; dim + 1] }
    }

    /// Ambient dimension `d`.
    pub fn dim(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// `h^i`, zero outside `0..=d`.
    pub fn h(&self, i: i64) -> u64 {
        usize::try_from(i).ok().and_then(|i| self.dims.get(i)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Degrees with nonzero cohomology.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&i| self.dims[i] != 0).collect()
    }
}

impl Add for &CohTable {
    type Output = CohTable;
    fn add(self, rhs: &CohTable) -> CohTable {
        assert_eq!(self.dims.len(), rhs.dims.len(), "tables over the same space");
        CohTable::new(self.dims.iter().zip(&rhs.dims).map(|(a, b)| a + b).collect())
    }
}

impl Mul<&CohTable> for u64 {
    type Output = CohTable;
    fn mul(self, rhs: &CohTable) -> CohTable {
        CohTable::new(rhs.dims.iter().map(|d| self * d).collect())
    }
}

impl fmt::Display for CohTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Cohomology tables of the known terms `F^{-n}, …, F^0` of an exact complex
/// `0 → F^{-n} → … → F^0 → F^1 → 0`, all on one ambient space. `F^1` is the
/// unknown; its table has length `target_dim + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexShape {
    terms: Vec<CohTable>,
    target_dim: usize,
}

impl ComplexShape {
    /// `terms[k]` is the table of `F^{k-n}` for `n = terms.len() - 1`.
    pub fn new(terms: Vec<CohTable>, target_dim: usize) -> Result<Self> {
        let Some(first) = terms.first() else {
            return Err(Error::Shape("a complex needs at least one known term".into()));
        };
        let d = first.dim();
        if terms.iter().any(|t| t.dim() != d) {
            return Err(Error::Shape("all terms must live on the same ambient space".into()));
        }
        if target_dim > d {
            return Err(Error::Shape(format!("target dimension {target_dim} exceeds ambient {d}")));
        }
        Ok(ComplexShape { terms, target_dim })
    }

    /// `n`: the terms are `F^{-n}..F^0`.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.terms[0].dim()
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Table of `F^{-r}`.
    pub fn term(&self, r: usize) -> &CohTable {
        &self.terms[self.length() - r]
    }

    /// The `r` with `F^{-r}` not acyclic.
    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..=self.length()).filter(|&r| !self.term(r).is_zero()).collect()
    }

    /// Restricts an ambient-length table for `F^1` to `0..=target_dim`.
    fn to_target(&self, dims: Vec<u64>) -> Result<CohTable> {
        if dims[self.target_dim + 1..].iter().any(|&d| d != 0) {
            return Err(Error::Inconclusive(format!(
                "shifted table has cohomology above degree {}: the complex cannot be exact",
                self.target_dim
            )));
        }
        Ok(CohTable::new(dims[..=self.target_dim].to_vec()))
    }
}

/// `C(m, k)` for `m ≥ 0`.
fn binomial(m: i64, k: i64) -> u64 {
    if m < k {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (m - i) as u64 / (i + 1) as u64)
}

/// `H^i(ℙ³, O(a))`.
pub fn bott_p3(a: i64) -> CohTable {
    let mut dims = vec![0; 4];
    if a >= 0 {
        dims[0] = binomial(a + 3, 3);
    }
    if a <= -4 {
        dims[3] = binomial(-a - 1, 3);
    }
    CohTable::new(dims)
}

/// `H^k(ℙ³×ℙ³, O(a, b)) = ⊕_{i+j=k} H^i(O(a)) ⊗ H^j(O(b))`.
pub fn kunneth(a: i64, b: i64) -> CohTable {
    let (ta, tb) = (bott_p3(a), bott_p3(b));
    let mut dims = vec![0; 7];
    for i in 0..4 {
        for j in 0..4 {
            dims[i + j] += ta.dims[i] * tb.dims[j];
        }
    }
    CohTable::new(dims)
}

/// `H^i(F^1) = H^{i+s}(F^{-s})`, provided every other known term is acyclic.
pub fn truncation_shift(shape: &ComplexShape, s: usize) -> Result<CohTable> {
    let n = shape.length();
    if s > n {
        return Err(Error::Shape(format!("shift {s} exceeds the complex length {n}")));
    }
    if let Some(r) = (0..=n).find(|&r| r != s && !shape.term(r).is_zero()) {
        return Err(Error::TruncationHypothesis { index: -(r as i64) });
    }
    let src = shape.term(s);
    if src.dims[..s.min(src.dims.len())].iter().any(|&d| d != 0) {
        return Err(Error::Inconclusive(format!(
            "F^-{s} has cohomology below degree {s}: the complex cannot be exact"
        )));
    }
    let d = shape.ambient_dim();
    let dims: Vec<u64> = (0..=d).map(|i| src.h((i + s) as i64)).collect();
    shape.to_target(dims)
}

/// Independent route to the same table: split the complex into short exact
/// sequences `0 → Z^j → F^j → Z^{j+1} → 0` with `Z^{-n+1} = F^{-n}` and
/// `Z^1 = F^1`, and chase dimensions degree by degree through each long exact
/// sequence using zero-sandwich steps only.
pub fn ses_chase(shape: &ComplexShape) -> Result<CohTable> {
    let n = shape.length();
    let d = shape.ambient_dim();
    // cohomology of Z^j as known dimensions; None when undetermined
    let mut z: Vec<Option<u64>> = shape.term(n).dims.iter().map(|&v| Some(v)).collect();
    for r in (0..n).rev() {
        let f = shape.term(r);
        let at = |t: &[Option<u64>], i: usize| if i <= d { t[i] } else { Some(0) };
        let next: Vec<Option<u64>> = (0..=d)
            .map(|i| {
                // H^{i}(Z) → H^{i}(F) → H^{i}(Z') → H^{i+1}(Z) → H^{i+1}(F)
                let (hz_i, hf_i, hz_up, hf_up) = (at(&z, i), f.h(i as i64), at(&z, i + 1), f.h(i as i64 + 1));
                if hf_i == 0 && hz_up == Some(0) {
                    Some(0)
                } else if hf_i == 0 && hf_up == 0 {
                    hz_up
                } else if hz_i == Some(0) && hz_up == Some(0) {
                    Some(hf_i)
                } else {
                    None
                }
            })
            .collect();
        z = next;
    }
    let dims: Option<Vec<u64>> = z.into_iter().collect();
    let dims = dims.ok_or_else(|| Error::Inconclusive("dimension chase needs ranks of connecting maps".into()))?;
    shape.to_target(dims)
}

/// Multiplicities of the Koszul terms `O(-k,-k)` for `k = 0..=3`.
pub const KOSZUL_MULTIPLICITIES: [u64; 4] = [1, 3, 3, 1];

/// The twisted Koszul resolution of `O_X(a, b)` as a complex shape:
/// `F^{-k} = O(a-k, b-k)^{⊕ C(3,k)}`.
pub fn koszul_shape(a: i64, b: i64) -> ComplexShape {
    let terms = (0..=3)
        .rev()
        .map(|k| KOSZUL_MULTIPLICITIES[k] * &kunneth(a - k as i64, b - k as i64))
        .collect();
    ComplexShape::new(terms, 3).expect("Koszul terms share the ambient space")
}

/// `H^i(X, O_X(a, b))` via the truncation lemma on the Koszul resolution.
pub fn koszul_cohomology_on_x(a: i64, b: i64) -> Result<CohTable> {
    let shape = koszul_shape(a, b);
    match shape.nonzero_columns()[..] {
        [] => Ok(CohTable::zero(3)),
        [s] => truncation_shift(&shape, s),
        ref cols => Err(Error::Inconclusive(format!(
            "twist ({a},{b}): Koszul terms F^-{cols:?} all carry cohomology"
        ))),
    }
}

/// `Σ_k (-1)^k C(3,k) χ(O(a-k, b-k))`, the Euler characteristic that
/// exactness of the Koszul complex forces on `O_X(a, b)`.
pub fn koszul_euler_characteristic(a: i64, b: i64) -> i64 {
    (0..=3)
        .map(|k| {
            let chi = KOSZUL_MULTIPLICITIES[k] as i64 * kunneth(a - k as i64, b - k as i64).euler_characteristic();
            if k % 2 == 0 { chi } else { -chi }
        })
        .sum()
}

/// The dimension chase on `0 → Ω¹|_X → O_X(-1,0)⁴ ⊕ O_X(0,-1)⁴ → O_X² → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerChase {
    pub middle: CohTable,
    pub right: CohTable,
    /// `H²(Ω¹|_X) = 0` is forced.
    pub h2_vanishes: bool,
    /// `H³(Ω¹|_X) = 0` is forced.
    pub h3_vanishes: bool,
}

/// `H^i(K)` sits between `H^{i-1}(R)` and `H^i(M)`; it vanishes when both do.
pub fn euler_chase() -> Result<EulerChase> {
    let middle = &(4 * &koszul_cohomology_on_x(-1, 0)?) + &(4 * &koszul_cohomology_on_x(0, -1)?);
    let right = 2 * &koszul_cohomology_on_x(0, 0)?;
    let forced = |i: i64| right.h(i - 1) == 0 && middle.h(i) == 0;
    Ok(EulerChase {
        h2_vanishes: forced(2),
        h3_vanishes: forced(3),
        middle,
        right,
    })
}

/// A homogeneous generator of a graded-commutative algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub label: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(label: impl Into<String>, degree: u32) -> Self {
        Generator { label: label.into(), degree }
    }
}

/// `c · g_1 ∪ … ∪ g_k` in a free graded-commutative algebra, kept with its
/// factors sorted by label. Sorting applies the Koszul sign
/// `α∪β = (-1)^{|α||β|} β∪α` to each adjacent transposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupClass {
    coeff: Cyclotomic,
    factors: Vec<Generator>,
}

impl CupClass {
    pub fn generator(g: Generator, field: &Arc<CyclotomicField>) -> Self {
        CupClass { coeff: field.one(), factors: vec![g] }
    }

    pub fn scalar(c: Cyclotomic) -> Self {
        CupClass { coeff: c, factors: Vec::new() }
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|g| g.degree).sum()
    }

    pub fn coeff(&self) -> &Cyclotomic {
        &self.coeff
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        CupClass { coeff: &self.coeff * c, factors: self.factors.clone() }
    }

    pub fn cup(&self, other: &CupClass) -> CupClass {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        CupClass { coeff: &self.coeff * &other.coeff, factors }.normalized()
    }

    fn normalized(mut self) -> Self {
        let mut odd_swaps = false;
        // insertion sort, tracking the sign of each adjacent swap
        for i in 1..self.factors.len() {
            let mut j = i;
            while j > 0 && self.factors[j - 1] > self.factors[j] {
                if self.factors[j - 1].degree % 2 == 1 && self.factors[j].degree % 2 == 1 {
                    odd_swaps = !odd_swaps;
                }
                self.factors.swap(j - 1, j);
                j -= 1;
            }
        }
        if odd_swaps {
            self.coeff = -&self.coeff;
        }
        let repeated_odd = self.factors.windows(2).any(|w| w[0] == w[1] && w[0].degree % 2 == 1);
        if repeated_odd {
            self.coeff = self.coeff.zero_like();
        }
        self
    }

    /// `c` with `self = c · basis`, if both have the same normalized factors.
    pub fn coefficient_in(&self, basis: &CupClass) -> Option<Cyclotomic> {
        (self.factors == basis.factors).then(|| self.coeff.checked_div(&basis.coeff).ok()).flatten()
    }

    /// Applies a ring map given on generators; factors are mapped in order.
    pub fn map(&self, on_generator: impl Fn(&Generator) -> CupClass) -> CupClass {
        self.factors
            .iter()
            .fold(CupClass::scalar(self.coeff.clone()), |acc, g| acc.cup(&on_generator(g)))
    }
}

/// Eigenvalue of `σ` on the line `H⁶(ℙ³×ℙ³, O(-4,-4))` spanned by
/// `η_x ∪ η_y`, `η = (x_0x_1x_2x_3)^{-1}`, with the trivial linearisation.
///
/// `weights` holds four swap weights, or the eight diagonal weights of both
/// factors. A swap maps `η_x ↦ η_y`, `η_y ↦ ϖ^{-Σr} η_x`; a diagonal action
/// scales `η_x` and `η_y` by `ϖ^{-Σr}` and `ϖ^{-Σr'}`.
pub fn equivariant_top_eigenvalue(weights: &[i64], n: u64, swap: bool) -> Result<Cyclotomic> {
    let expected = if swap { 4 } else { 8 };
    if weights.len() != expected {
        return Err(Error::Shape(format!("expected {expected} weights, found {}", weights.len())));
    }
    if n == 0 {
        return Err(Error::InvalidAction("order must be positive".into()));
    }
    let field = CyclotomicField::new(n);
    let eta_x = Generator::new("x", 3);
    let eta_y = Generator::new("y", 3);
    let top = CupClass::generator(eta_x.clone(), &field).cup(&CupClass::generator(eta_y.clone(), &field));
    let sum_first: i64 = weights[..4].iter().sum();
    let sum_second: i64 = weights[4..].iter().sum();
    let image = top.map(|g| {
        let is_x = *g == eta_x;
        let (target, exponent) = match (swap, is_x) {
            (true, true) => (&eta_y, 0),
            (true, false) => (&eta_x, -sum_first),
            (false, true) => (&eta_x, -sum_first),
            (false, false) => (&eta_y, -sum_second),
        };
        CupClass::generator(target.clone(), &field).scale(&field.root_of_unity(exponent))
    });
    Ok(image.coefficient_in(&top).expect("the top class is one-dimensional"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bott_examples() {
        assert_eq!(bott_p3(0).dims(), &[1, 0, 0, 0]);
        assert_eq!(bott_p3(1).dims(), &[4, 0, 0, 0]);
        assert_eq!(bott_p3(2).dims(), &[10, 0, 0, 0]);
        assert_eq!(bott_p3(-4).dims(), &[0, 0, 0, 1]);
        assert_eq!(bott_p3(-5).dims(), &[0, 0, 0, 4]);
        for a in [-1, -2, -3] {
            assert!(bott_p3(a).is_zero());
        }
    }

    /// Monomials of degree `a` in four variables, counted directly.
    fn count_monomials(a: i64) -> u64 {
        let mut c = 0;
        for i in 0..=a {
            for j in 0..=a - i {
                for _ in 0..=a - i - j {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn h0_counts_monomials() {
        for a in 0..12 {
            assert_eq!(bott_p3(a).h(0), count_monomials(a));
        }
    }

    #[test]
    fn kunneth_examples() {
        assert_eq!(kunneth(0, 0).dims(), &[1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(kunneth(-4, -4).dims(), &[0, 0, 0, 0, 0, 0, 1]);
        for r in 1..=3 {
            assert!(kunneth(-r, -r).is_zero());
        }
        assert_eq!(kunneth(1, -4).dims(), &[0, 0, 0, 4, 0, 0, 0]);
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_cohomology_on_x(0, 0).unwrap().dims(), &[1, 0, 0, 0]);
        assert!(koszul_cohomology_on_x(-1, 0).unwrap().is_zero());
        assert!(koszul_cohomology_on_x(0, -1).unwrap().is_zero());
        assert_eq!(koszul_cohomology_on_x(-1, -1).unwrap().dims(), &[0, 0, 0, 1]);
        // H⁰(O_X(1,0)) = H⁰(ℙ³, O(1))
        assert_eq!(koszul_cohomology_on_x(1, 0).unwrap().dims(), &[4, 0, 0, 0]);
        // (1,1): O(1,1) and O(0,0) both carry sections
        assert!(matches!(koszul_cohomology_on_x(1, 1), Err(Error::Inconclusive(_))));
    }

    #[test]
    fn truncation_examples() {
        let t = CohTable::new(vec![2, 0, 1]);
        let iso = ComplexShape::new(vec![t.clone()], 2).unwrap();
        assert_eq!(truncation_shift(&iso, 0).unwrap(), t);
        let shape = koszul_shape(0, 0);
        assert_eq!(truncation_shift(&shape, 0).unwrap().dims(), &[1, 0, 0, 0]);
        assert_eq!(ses_chase(&shape).unwrap().dims(), &[1, 0, 0, 0]);
        let err = truncation_shift(&shape, 3).unwrap_err();
        assert_eq!(err, Error::TruncationHypothesis { index: 0 });
        let shape = koszul_shape(-1, 0);
        assert!(truncation_shift(&shape, 2).unwrap().is_zero());
    }

    #[test]
    fn euler_chase_forces_vanishing() {
        let chase = euler_chase().unwrap();
        assert!(chase.middle.is_zero());
        assert_eq!(chase.right.dims(), &[2, 0, 0, 0]);
        assert!(chase.h2_vanishes && chase.h3_vanishes);
    }

    #[test]
    fn top_eigenvalue_examples() {
        let f2 = CyclotomicField::new(2);
        assert_eq!(equivariant_top_eigenvalue(&[0; 4], 2, true).unwrap(), f2.int(-1));
        let f4 = CyclotomicField::new(4);
        assert_eq!(equivariant_top_eigenvalue(&[1; 4], 4, true).unwrap(), f4.int(-1));
        assert_eq!(equivariant_top_eigenvalue(&[1, 0, 0, 0], 4, true).unwrap(), -&f4.root_of_unity(-1));
        assert_eq!(equivariant_top_eigenvalue(&[0; 8], 3, false).unwrap(), CyclotomicField::new(3).one());
        let w = [1, 0, 0, 0, 0, 2, 0, 0];
        assert_eq!(equivariant_top_eigenvalue(&w, 5, false).unwrap(), CyclotomicField::new(5).root_of_unity(-3));
        assert!(equivariant_top_eigenvalue(&[0; 4], 2, false).is_err());
    }

    #[test]
    fn odd_classes_anticommute() {
        let f = CyclotomicField::new(1);
        let a = CupClass::generator(Generator::new("a", 1), &f);
        assert!(a.cup(&a).coeff().is_zero());
        let b = CupClass::generator(Generator::new("b", 2), &f);
        assert_eq!(b.cup(&b).coeff(), &f.one());
    }

    fn shape_strategy() -> impl Strategy<Value = (ComplexShape, usize)> {
        (0usize..=4, 1usize..=6)
            .prop_flat_map(|(n, d)| (Just(n), Just(d), 0..=n, 0..=d))
            .prop_flat_map(|(n, d, s, t)| {
                // nonzero entries of F^{-s} only in degrees s..=s+t
                let lo = s.min(d + 1);
                let hi = (s + t).min(d);
                let width = if lo <= hi { hi - lo + 1 } else { 0 };
                (Just(n), Just(d), Just(s), Just(t), prop::collection::vec(0u64..5, width))
            })
            .prop_map(|(n, d, s, t, vals)| {
                let mut dims = vec![0; d + 1];
                for (k, v) in vals.into_iter().enumerate() {
                    dims[s + k] = v;
                }
                let terms = (0..=n)
                    .map(|k| {
                        let r = n - k;
                        if r == s { CohTable::new(dims.clone()) } else { CohTable::zero(d) }
                    })
                    .collect();
                (ComplexShape::new(terms, t).unwrap(), s)
            })
    }

    proptest! {
        #[test]
        fn serre_duality_p3(a in -60i64..60) {
            let t = bott_p3(a);
            let dual = bott_p3(-4 - a);
            for i in 0..4 {
                prop_assert_eq!(t.h(i), dual.h(3 - i));
            }
        }

        #[test]
        fn kunneth_symmetric(a in -20i64..20, b in -20i64..20) {
            prop_assert_eq!(kunneth(a, b), kunneth(b, a));
        }

        #[test]
        fn euler_characteristic_additive(a in -8i64..8, b in -8i64..8) {
            if let Ok(t) = koszul_cohomology_on_x(a, b) {
                prop_assert_eq!(t.euler_characteristic(), koszul_euler_characteristic(a, b));
            }
        }

        #[test]
        fn truncation_matches_chase((shape, s) in shape_strategy()) {
            prop_assert_eq!(truncation_shift(&shape, s).unwrap(), ses_chase(&shape).unwrap());
        }

        #[test]
        fn graded_commutativity(da in 0u32..7, db in 0u32..7) {
            let f = CyclotomicField::new(1);
            let a = CupClass::generator(Generator::new("a", da), &f);
            let b = CupClass::generator(Generator::new("b", db), &f);
            let ab = a.cup(&b);
            let ba = b.cup(&a);
            let sign = if (da * db) % 2 == 0 { f.one() } else { f.int(-1) };
            prop_assert_eq!(ba.coefficient_in(&ab).unwrap(), sign);
        }
    }
}
