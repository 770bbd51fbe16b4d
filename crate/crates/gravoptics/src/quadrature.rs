//! Globally adaptive Gauss-Kronrod quadrature.
//!
//! This is the workhorse behind every brute-force oracle in the crate: the
//! eikonal closed forms, the radar-delay log formula and the deflection
//! integrals are all cross-checked against direct integration of their
//! defining integrands. The integrator keeps a worst-first heap of panels
//! and bisects until the summed Kronrod error estimate meets the requested
//! absolute + relative tolerance.
//!
//! Turning points of the radial integrands behave like `sqrt(r - r0)` (or
//! its reciprocal); [`integrate_turning`] removes those endpoint
//! singularities with the substitution `r = r0 + t^2` before handing the
//! panel to the adaptive core.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

// 15-point Kronrod abscissae on [-1, 1] (positive half) with the embedded
// 7-point Gauss rule, from QUADPACK's dqk15.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Combined absolute/relative stopping rule. The integral is accepted once
/// the summed error estimate is below `absolute + relative * |value|`.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            absolute: 1e-12,
            relative: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(absolute: f64, relative: f64) -> Self {
        Tolerance { absolute, relative }
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
    }
}

fn kronrod_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = kronrod.abs();

    for (j, &x) in XGK.iter().enumerate().take(7) {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let sum = f1 + f2;
        kronrod += WGK[j] * sum;
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }

    let value = kronrod * half;
    let raw_err = ((kronrod - gauss) * half).abs();
    // QUADPACK-style error sharpening keeps the estimate conservative
    // without collapsing to zero on smooth panels.
    let scale = res_abs * half.abs();
    let error = if scale > 0.0 && raw_err > 0.0 {
        let ratio = (200.0 * raw_err / scale).powf(1.5);
        if ratio < 1.0 {
            scale * ratio
        } else {
            raw_err
        }
    } else {
        raw_err
    };

    Panel {
        a,
        b,
        value,
        error: error.max(scale * 50.0 * f64::EPSILON),
    }
}

pub const DEFAULT_MAX_PANELS: usize = 20_000;

/// Integrate `f` from `a` to `b` (either order) to the given tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<Quadrature> {
    integrate_with_limit(f, a, b, tol, DEFAULT_MAX_PANELS)
}

pub fn integrate_with_limit<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: Tolerance,
    max_panels: usize,
) -> Result<Quadrature> {
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::domain("quadrature limits must be finite"));
    }
    if a == b {
        return Ok(Quadrature {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };

    // Seed with several panels so an accidental Gauss/Kronrod agreement
    // on a symmetric or oscillatory integrand cannot end the refinement
    // before it starts.
    const SEED_PANELS: usize = 8;
    let mut heap = BinaryHeap::new();
    let mut total = 0.0;
    let mut total_err = 0.0;
    let mut evaluations = 0usize;
    for k in 0..SEED_PANELS {
        let pa = lo + (hi - lo) * k as f64 / SEED_PANELS as f64;
        let pb = lo + (hi - lo) * (k + 1) as f64 / SEED_PANELS as f64;
        let panel = kronrod_panel(&f, pa, pb);
        total += panel.value;
        total_err += panel.error;
        evaluations += 15;
        heap.push(panel);
    }

    while total_err > tol.absolute.max(tol.relative * total.abs()) {
        if heap.len() >= max_panels {
            return Err(Error::convergence(format!(
                "quadrature stalled at {} panels (error estimate {:.3e}, value {:.6e})",
                heap.len(),
                total_err,
                total
            )));
        }
        let worst = heap.pop().expect("heap cannot be empty while refining");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel narrower than f64 resolution; keep its estimate and
            // stop treating it as refinable.
            total_err -= worst.error;
            continue;
        }
        let left = kronrod_panel(&f, worst.a, mid);
        let right = kronrod_panel(&f, mid, worst.b);
        evaluations += 30;

        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    if !total.is_finite() {
        return Err(Error::domain(
            "quadrature produced a non-finite value (integrand invalid on the interval?)",
        ));
    }

    Ok(Quadrature {
        value: sign * total,
        error_estimate: total_err,
        evaluations,
    })
}

/// Which endpoints of the interval carry a square-root-type singularity
/// (either a `sqrt` zero with unbounded derivative or an integrable
/// `1/sqrt` divergence).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointSingularity {
    None,
    Lower,
    Upper,
    Both,
}

/// Integrate across turning points: `r = endpoint +/- t^2` maps a
/// square-root endpoint onto a smooth one before the adaptive pass.
pub fn integrate_turning<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    singularity: EndpointSingularity,
    tol: Tolerance,
) -> Result<Quadrature> {
    if a > b {
        return Err(Error::domain("integrate_turning requires a <= b"));
    }
    match singularity {
        EndpointSingularity::None => integrate(f, a, b, tol),
        EndpointSingularity::Lower => {
            let width = b - a;
            integrate(|t| 2.0 * t * f(a + t * t), 0.0, width.sqrt(), tol)
        }
        EndpointSingularity::Upper => {
            let width = b - a;
            integrate(|t| 2.0 * t * f(b - t * t), 0.0, width.sqrt(), tol)
        }
        EndpointSingularity::Both => {
            let mid = 0.5 * (a + b);
            let half_tol = Tolerance::new(0.5 * tol.absolute, 0.5 * tol.relative);
            let lo = integrate(|t| 2.0 * t * f(a + t * t), 0.0, (mid - a).sqrt(), half_tol)?;
            let hi = integrate(|t| 2.0 * t * f(b - t * t), 0.0, (b - mid).sqrt(), half_tol)?;
            Ok(Quadrature {
                value: lo.value + hi.value,
                error_estimate: lo.error_estimate + hi.error_estimate,
                evaluations: lo.evaluations + hi.evaluations,
            })
        }
    }
}
