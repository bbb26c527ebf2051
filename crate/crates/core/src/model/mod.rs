//! The threefold `X ⊂ ℙ³×ℙ³` cut out by three bilinear forms `xᵀ M_i y`.
//!
//! Polynomial rings used here:
//! * bilinear forms live in 8 variables `x0..x3, y0..y3` (indices 0..8);
//! * the coefficient matrix and minor cubics live in the 4 variables of the
//!   blown-down ℙ³;
//! * the determinantal quartic lives in the 3 pencil coordinates `X, Y, Z`.

mod points;

use std::borrow::Cow;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::linalg::normalize_projective;
use crate::exactnum::{Cyclotomic, CyclotomicField, Matrix};
use crate::polyalg::groebner::DEFAULT_DEGREE_CAP;
use crate::polyalg::{
    all_minors, groebner, groebner_cancellable, is_unit_ideal_mod_p, maximal_minors, poly_det, projective_empty, Ideal,
    MultiPoly, PrimeReduction,
};

pub use points::{random_point, sample_quartic_points};

/// Names for the pencil coordinates of the determinantal quartic.
pub const PLANE_VARS: [&str; 3] = ["X", "Y", "Z"];
/// Names for the bilinear-form ring.
pub const BIFORM_VARS: [&str; 8] = ["x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"];

/// Which projection of `X` to ℙ³ is considered. `Second` is the first
/// projection of the model with every matrix transposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelTriple {
    field: Arc<CyclotomicField>,
    matrices: [Matrix; 3],
}

impl ModelTriple {
    /// Builds a model, rejecting non-4×4 matrices and linearly dependent forms.
    pub fn new(matrices: [Matrix; 3]) -> Result<Self> {
        let m = Self::new_unchecked(matrices)?;
        let rank = m.form_rank();
        if rank < 3 {
            return Err(Error::DependentForms { rank });
        }
        Ok(m)
    }

    /// Builds a model checking only the matrix shapes. Degenerate triples are
    /// useful as counterexamples; most operations expect [`ModelTriple::new`].
    pub fn new_unchecked(matrices: [Matrix; 3]) -> Result<Self> {
        for (i, m) in matrices.iter().enumerate() {
            if m.nrows() != 4 || m.ncols() != 4 {
                return Err(Error::Shape(format!(
                    "matrix {} is {}x{}, expected 4x4",
                    i + 1,
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        let conductor = matrices
            .iter()
            .map(|m| m.field().conductor())
            .fold(1u64, num_integer::lcm);
        let field = CyclotomicField::new(conductor);
        let matrices = matrices.map(|m| {
            if m.field().conductor() == conductor {
                m
            } else {
                Matrix::from_fn(4, 4, |i, j| m[(i, j)].lift(&field))
            }
        });
        Ok(ModelTriple { field, matrices })
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    pub fn matrices(&self) -> &[Matrix; 3] {
        &self.matrices
    }

    /// Rank of the span of the three forms in the 16-dimensional space of
    /// bilinear forms.
    pub fn form_rank(&self) -> usize {
        Matrix::from_fn(3, 16, |i, k| self.matrices[i][(k / 4, k % 4)].clone()).rank()
    }

    pub fn transposed(&self) -> Self {
        ModelTriple {
            field: Arc::clone(&self.field),
            matrices: self.matrices.clone().map(|m| m.transpose()),
        }
    }

    /// The model whose first projection realises `side`.
    pub fn oriented(&self, side: Side) -> Cow<'_, Self> {
        match side {
            Side::First => Cow::Borrowed(self),
            Side::Second => Cow::Owned(self.transposed()),
        }
    }

    /// `t_1 M_1 + t_2 M_2 + t_3 M_3` at a point of the pencil.
    pub fn pencil_at(&self, t: &[Cyclotomic; 3]) -> Matrix {
        Matrix::from_fn(4, 4, |i, j| {
            let mut acc = self.field.zero();
            for (k, m) in self.matrices.iter().enumerate() {
                acc += &(&t[k] * &m[(i, j)]);
            }
            acc
        })
    }

    /// Rejects dependent forms and a vanishing quartic.
    pub fn validate(&self) -> Result<()> {
        let rank = self.form_rank();
        if rank < 3 {
            return Err(Error::DependentForms { rank });
        }
        determinantal_quartic(self).map(|_| ())
    }
}

/// `F_i = xᵀ M_i y` in the variables `x0..x3, y0..y3`.
pub fn bilinear_forms(m: &ModelTriple) -> [MultiPoly; 3] {
    let one = m.field.one();
    let vars: Vec<MultiPoly> = (0..8).map(|i| MultiPoly::var(i, 8, &one)).collect();
    m.matrices.clone().map(|mat| {
        let mut f = MultiPoly::zero(8);
        for a in 0..4 {
            for b in 0..4 {
                let c = &mat[(a, b)];
                if !c.is_zero() {
                    f = &f + &(&vars[a] * &vars[4 + b]).scale(c);
                }
            }
        }
        f
    })
}

/// The 3×4 matrix of linear forms `L_ij` in `x0..x3` with `F_i = Σ_j L_ij y_j`
/// (rows `xᵀ M_i`; transposed matrices for `Side::Second`).
pub fn coeff_matrix(m: &ModelTriple, side: Side) -> Vec<Vec<MultiPoly>> {
    let m = m.oriented(side);
    let one = m.field.one();
    let vars: Vec<MultiPoly> = (0..4).map(|i| MultiPoly::var(i, 4, &one)).collect();
    m.matrices
        .iter()
        .map(|mat| {
            (0..4)
                .map(|j| {
                    let mut l = MultiPoly::zero(4);
                    for (a, x) in vars.iter().enumerate() {
                        if !mat[(a, j)].is_zero() {
                            l = &l + &x.scale(&mat[(a, j)]);
                        }
                    }
                    l
                })
                .collect()
        })
        .collect()
}

/// The coefficient matrix evaluated at a point of ℙ³.
pub fn coeff_matrix_at(m: &ModelTriple, side: Side, point: &[Cyclotomic; 4]) -> Matrix {
    let m = m.oriented(side);
    Matrix::from_fn(3, 4, |i, j| {
        let mut acc = m.field.zero();
        for (a, x) in point.iter().enumerate() {
            acc += &(x * &m.matrices[i][(a, j)]);
        }
        acc
    })
}

/// The maximal minors `f_0..f_3` of the coefficient matrix (`f_i` deletes
/// column `i`).
pub fn minor_cubic_forms(m: &ModelTriple, side: Side) -> Result<[MultiPoly; 4]> {
    let minors = maximal_minors(&coeff_matrix(m, side))?;
    if minors.iter().all(MultiPoly::is_zero) {
        return Err(Error::DegenerateCentre);
    }
    Ok(minors)
}

/// The ideal of the blowdown centre on the chosen side, generated by all four
/// minor cubics.
pub fn minor_cubics(m: &ModelTriple, side: Side) -> Result<Ideal> {
    Ideal::new(4, minor_cubic_forms(m, side)?)
}

/// The point of `X` over a point of ℙ³ off the centre: `[f_0 : -f_1 : f_2 : -f_3]`.
pub fn fiber_section(m: &ModelTriple, side: Side, point: &[Cyclotomic; 4]) -> Result<[Cyclotomic; 4]> {
    let f = minor_cubic_forms(m, side)?;
    let mut out = Vec::with_capacity(4);
    for (i, fi) in f.iter().enumerate() {
        let v = fi.eval(point)?;
        out.push(if i % 2 == 1 { -v } else { v });
    }
    if out.iter().all(Cyclotomic::is_zero) {
        return Err(Error::OnCentre);
    }
    Ok(out.try_into().expect("four entries"))
}

/// `Q = det(X M_1 + Y M_2 + Z M_3)`.
pub fn determinantal_quartic(m: &ModelTriple) -> Result<MultiPoly> {
    let one = m.field.one();
    let t: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(i, 3, &one)).collect();
    let pencil: Vec<Vec<MultiPoly>> = (0..4)
        .map(|a| {
            (0..4)
                .map(|b| {
                    let mut e = MultiPoly::zero(3);
                    for (k, mat) in m.matrices.iter().enumerate() {
                        if !mat[(a, b)].is_zero() {
                            e = &e + &t[k].scale(&mat[(a, b)]);
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();
    let q = poly_det(&pencil)?;
    if q.is_zero() {
        return Err(Error::DegenerateQuartic);
    }
    Ok(q)
}

/// Jacobian criterion: the partials of `Q` have no common projective zero.
pub fn quartic_smooth(q: &MultiPoly) -> Result<bool> {
    if q.nvars() != 3 || q.degree() != Some(4) || !q.is_homogeneous() {
        return Err(Error::NotAQuartic(format!(
            "{} variables, degree {:?}",
            q.nvars(),
            q.degree()
        )));
    }
    let partials = Ideal::new(3, (0..3).map(|i| q.partial(i)))?;
    projective_empty(&partials)
}

/// True iff the coefficient matrix never drops to rank ≤ 1, i.e. its 18
/// quadratic 2×2 minors have no common zero in ℙ³.
pub fn rank_locus_check(m: &ModelTriple, side: Side) -> Result<bool> {
    let minors = all_minors(&coeff_matrix(m, side), 2)?;
    let ideal = Ideal::new(4, minors)?;
    if ideal.generators().is_empty() {
        return Ok(false);
    }
    projective_empty(&ideal)
}

/// The ideal of the singular locus of `X` on the affine chart `x_i = 1, y_j = 1`.
pub fn chart_singular_ideal(m: &ModelTriple, i: usize, j: usize) -> Result<Ideal> {
    let chart = [i, 4 + j];
    let forms: Vec<MultiPoly> = bilinear_forms(m)
        .iter()
        .map(|f| f.dehomogenize(&chart))
        .collect::<Result<_>>()?;
    let chart_vars: Vec<usize> = (0..8).filter(|v| !chart.contains(v)).collect();
    let jac: Vec<Vec<MultiPoly>> = forms
        .iter()
        .map(|f| chart_vars.iter().map(|&v| f.partial(v)).collect())
        .collect();
    let mut gens = forms;
    gens.extend(all_minors(&jac, 3)?);
    Ideal::new(8, gens)
}

/// How a chart was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartMethod {
    /// Unit ideal after reduction modulo this prime.
    Modular(u64),
    /// Buchberger over ℚ(ζ_N).
    Exact,
}

/// Per-chart outcome of [`full_smoothness_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartResult {
    pub x_chart: usize,
    pub y_chart: usize,
    pub smooth: Result<bool>,
    pub method: ChartMethod,
}

/// Primes tried per chart before falling back to exact arithmetic.
const MODULAR_ATTEMPTS: usize = 2;

/// Unit-ideal test of one chart modulo a few primes.
///
/// A singular point of `X` over a number field, scaled so that its coordinates
/// of minimal valuation at a prime above `p` equal 1, lies in one of the 16
/// charts with `p`-integral coordinates and reduces to a common zero modulo
/// `p`. So a unit ideal modulo `p` on every chart proves smoothness.
fn chart_smooth_modular(m: &ModelTriple, ideal: &Ideal) -> Option<u64> {
    PrimeReduction::for_conductor(m.conductor())
        .take(MODULAR_ATTEMPTS)
        .find(|&red| is_unit_ideal_mod_p(ideal, red) == Some(true))
        .map(|red| red.prime)
}

/// Decides one chart: modular first, exact Buchberger if that fails.
pub fn chart_smooth(m: &ModelTriple, i: usize, j: usize) -> ChartResult {
    let result = |smooth, method| ChartResult {
        x_chart: i,
        y_chart: j,
        smooth,
        method,
    };
    let ideal = match chart_singular_ideal(m, i, j) {
        Ok(ideal) => ideal,
        Err(e) => return result(Err(e), ChartMethod::Exact),
    };
    match chart_smooth_modular(m, &ideal) {
        Some(p) => result(Ok(true), ChartMethod::Modular(p)),
        None => result(groebner(&ideal).map(|gb| gb.is_unit()), ChartMethod::Exact),
    }
}

const CHARTS: [(usize, usize); 16] = {
    let mut out = [(0, 0); 16];
    let mut k = 0;
    while k < 16 {
        out[k] = (k / 4, k % 4);
        k += 1;
    }
    out
};

/// Runs the 16 chart checks concurrently and returns them in chart order.
pub fn full_smoothness_report(m: &ModelTriple) -> Vec<ChartResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CHARTS
            .iter()
            .map(|&(i, j)| s.spawn(move || chart_smooth(m, i, j)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("chart worker panicked"))
            .collect()
    })
}

/// Smoothness of `X`, certified chart by chart. Charts not settled modulo a
/// prime are decided exactly, stopping at the first one with a singular point.
/// Exceeding the Buchberger degree cap makes the answer inconclusive (an error
/// of kind [`crate::ErrorKind::Inconclusive`]).
pub fn full_smoothness(m: &ModelTriple) -> Result<bool> {
    m.validate()?;
    let ideals: Vec<Ideal> = CHARTS
        .iter()
        .map(|&(i, j)| chart_singular_ideal(m, i, j))
        .collect::<Result<_>>()?;
    let open: Vec<&Ideal> = std::thread::scope(|s| {
        let handles: Vec<_> = ideals
            .iter()
            .map(|ideal| s.spawn(move || chart_smooth_modular(m, ideal).is_none()))
            .collect();
        let flags: Vec<bool> = handles.into_iter().map(|h| h.join().expect("chart worker panicked")).collect();
        ideals.iter().zip(flags).filter(|(_, f)| *f).map(|(i, _)| i).collect()
    });
    let stop = AtomicBool::new(false);
    let exact: Vec<Result<Option<Ideal>>> = std::thread::scope(|s| {
        let stop = &stop;
        let handles: Vec<_> = open
            .iter()
            .map(|&ideal| {
                s.spawn(move || {
                    let out = groebner_cancellable(ideal, DEFAULT_DEGREE_CAP, stop);
                    if matches!(&out, Ok(Some(gb)) if !gb.is_unit()) {
                        stop.store(true, Ordering::Relaxed);
                    }
                    out
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("chart worker panicked")).collect()
    });
    if exact.iter().any(|r| matches!(r, Ok(Some(gb)) if !gb.is_unit())) {
        return Ok(false);
    }
    let pending = exact.into_iter().find_map(Result::err);
    pending.map_or(Ok(true), Err)
}

/// `[X:Y:Z] ↦` the point of the centre on `side` attached to a point of the
/// quartic: the (left, for `First`) kernel of `X M_1 + Y M_2 + Z M_3`.
pub fn quartic_point_to_curve_point(
    m: &ModelTriple,
    side: Side,
    p: &[Cyclotomic; 3],
) -> Result<[Cyclotomic; 4]> {
    let m = m.oriented(side);
    let a = m.pencil_at(p);
    if !a.det().is_zero() {
        return Err(Error::NotOnLocus("determinantal quartic"));
    }
    let kernel = a.left_nullspace();
    if kernel.len() != 1 {
        return Err(Error::KernelDimension(kernel.len()));
    }
    Ok(normalize_projective(&kernel[0]).try_into().expect("4 entries"))
}

/// A point `c` of the centre `↦` the unique `[t_1:t_2:t_3]` with
/// `Σ t_i cᵀ M_i = 0` (for `First`; transposed matrices for `Second`).
pub fn curve_point_to_quartic_point(
    m: &ModelTriple,
    side: Side,
    c: &[Cyclotomic; 4],
) -> Result<[Cyclotomic; 3]> {
    let r = coeff_matrix_at(m, side, c);
    match r.rank() {
        3 => return Err(Error::NotOnLocus("blowdown centre")),
        2 => {}
        k => return Err(Error::RankNotTwo(k)),
    }
    let kernel = r.left_nullspace();
    debug_assert_eq!(kernel.len(), 1);
    Ok(normalize_projective(&kernel[0]).try_into().expect("3 entries"))
}

/// Genus of a smooth plane curve of the given degree.
pub fn plane_curve_genus(degree: u32) -> u32 {
    (degree - 1) * (degree - 2) / 2
}
