//! Conic orbits, anomalies, radial velocity, and sampled ray paths.

use crate::error::{Error, Result};
use crate::medium::{MediumModel, OrbitElements};

/// How a path came to exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Analytic,
    Optimized,
}

/// Ordered (r, phi) samples of a planar ray.
///
/// Radii are strictly positive and the polar angle strictly monotone
/// (either direction) along the path.
#[derive(Debug, Clone, PartialEq)]
pub struct RayPath {
    samples: Vec<(f64, f64)>,
    kind: PathKind,
}

impl RayPath {
    pub fn new(samples: Vec<(f64, f64)>, kind: PathKind) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::domain("a ray path needs at least two samples"));
        }
        if samples.iter().any(|&(r, _)| !(r > 0.0) || !r.is_finite()) {
            return Err(Error::domain("ray path radii must be positive and finite"));
        }
        let increasing = samples[1].1 > samples[0].1;
        for pair in samples.windows(2) {
            let dphi = pair[1].1 - pair[0].1;
            if dphi == 0.0 || (dphi > 0.0) != increasing {
                return Err(Error::domain(
                    "ray path polar angle must be strictly monotone",
                ));
            }
        }
        Ok(RayPath { samples, kind })
    }

    pub fn analytic(samples: Vec<(f64, f64)>) -> Result<Self> {
        RayPath::new(samples, PathKind::Analytic)
    }

    pub fn optimized(samples: Vec<(f64, f64)>) -> Result<Self> {
        RayPath::new(samples, PathKind::Optimized)
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Cartesian image of the samples.
    pub fn to_cartesian(&self) -> Vec<(f64, f64)> {
        self.samples
            .iter()
            .map(|&(r, phi)| (r * phi.cos(), r * phi.sin()))
            .collect()
    }
}

/// r = q / (1 + e cos(phi)). Errors at or beyond the hyperbola asymptote.
pub fn conic_radius(phi: f64, el: &OrbitElements) -> Result<f64> {
    let denom = 1.0 + el.eccentricity * phi.cos();
    if denom <= 0.0 {
        return Err(Error::domain(format!(
            "angle {phi} lies at or beyond the conic asymptote (1 + e cos = {denom:e})"
        )));
    }
    Ok(el.semi_latus_rectum / denom)
}

/// Orbit angle for a constant-index medium: arccos(r_a / eta r) on the
/// periodic side, arccosh(r_a / eta r) in the shadow.
pub fn orbit_angle(r: f64, caustic_radius: f64, index: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("orbit_angle requires r > 0"));
    }
    if !(caustic_radius > 0.0) || !(index > 0.0) {
        return Err(Error::domain("orbit_angle requires r_a > 0 and eta > 0"));
    }
    let ratio = caustic_radius / (index * r);
    if ratio <= 1.0 {
        Ok(ratio.acos())
    } else {
        Ok(ratio.acosh())
    }
}

/// |dr/dt| = sqrt(-A r^2 + R_s r - r_a^2) / r. Zero at the turning points.
///
/// The sign of the radial motion is context the caller owns (see
/// [`RadialDirection`]); the magnitude is returned.
pub fn radial_velocity(r: f64, el: &OrbitElements) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("radial_velocity requires r > 0"));
    }
    let rad = el.radicand(r);
    if rad < 0.0 {
        // Forgive turning-point roundoff.
        if rad > -1e-12 * el.caustic_radius * el.caustic_radius {
            return Ok(0.0);
        }
        return Err(Error::domain(format!(
            "r = {r:e} outside the allowed radial region (radicand {rad:e})"
        )));
    }
    Ok(rad.sqrt() / r)
}

/// Sign of the radial motion, used to resolve inverse-anomaly branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialDirection {
    /// r decreasing toward perihelion.
    Inbound,
    /// r increasing away from perihelion.
    Outbound,
}

/// Radius from the eccentric anomaly: a(1 - e cos u) for bound orbits,
/// a(e cosh u - 1) for hyperbolic ones.
pub fn anomaly_radius(u: f64, el: &OrbitElements) -> Result<f64> {
    let a = el
        .semi_axis
        .ok_or_else(|| Error::domain("parabolic orbits have no eccentric anomaly"))?;
    if el.is_bound() {
        Ok(a * (1.0 - el.eccentricity * u.cos()))
    } else {
        Ok(a * (el.eccentricity * u.cosh() - 1.0))
    }
}

/// Eccentric anomaly from the radius; the branch is picked by the radial
/// direction (outbound gives u >= 0 for bound orbits).
pub fn anomaly_from_radius(r: f64, el: &OrbitElements, direction: RadialDirection) -> Result<f64> {
    let a = el
        .semi_axis
        .ok_or_else(|| Error::domain("parabolic orbits have no eccentric anomaly"))?;
    if el.eccentricity == 0.0 {
        return if (r - a).abs() <= 1e-12 * a {
            Ok(0.0)
        } else {
            Err(Error::domain("circular orbit only contains r = a"))
        };
    }
    let u = if el.is_bound() {
        let c = (1.0 - r / a) / el.eccentricity;
        if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&c) {
            return Err(Error::domain(format!(
                "r = {r:e} outside the bound-orbit radial range"
            )));
        }
        c.clamp(-1.0, 1.0).acos()
    } else {
        let c = (1.0 + r / a) / el.eccentricity;
        if c < 1.0 - 1e-12 {
            return Err(Error::domain(format!(
                "r = {r:e} below the hyperbolic perihelion"
            )));
        }
        c.max(1.0).acosh()
    };
    Ok(match direction {
        RadialDirection::Outbound => u,
        RadialDirection::Inbound => -u,
    })
}

/// Sample the conic r(phi) on a uniform angle grid.
pub fn sample_conic(el: &OrbitElements, phi_start: f64, phi_end: f64, n: usize) -> Result<RayPath> {
    if n < 2 {
        return Err(Error::domain("need at least two samples"));
    }
    if phi_start == phi_end {
        return Err(Error::domain("empty angle range"));
    }
    let step = (phi_end - phi_start) / (n - 1) as f64;
    let mut samples = Vec::with_capacity(n);
    for k in 0..n {
        let phi = phi_start + step * k as f64;
        samples.push((conic_radius(phi, el)?, phi));
    }
    RayPath::analytic(samples)
}

/// Worst-case relative drift of the first integral
/// eta r^2 phi' / sqrt(1 + r^2 phi'^2) over the interior samples.
///
/// phi' = dphi/dr comes from three-point finite differences on the
/// (generally non-uniform) radial grid, so each stencil needs pairwise
/// distinct radii. The reference value is the median of the pointwise
/// estimates, which makes the residual a pure constancy diagnostic: no
/// analytic r_a is needed.
pub fn angular_momentum_residual(path: &RayPath, medium: &MediumModel) -> Result<f64> {
    let s = path.samples();
    if s.len() < 3 {
        return Err(Error::domain(
            "angular momentum residual needs at least three samples",
        ));
    }

    let mut values = Vec::with_capacity(s.len() - 2);
    for k in 1..s.len() - 1 {
        let (p0, p1, p2) = (s[k - 1], s[k], s[k + 1]);
        if p0.0 == p1.0 || p1.0 == p2.0 || p0.0 == p2.0 {
            return Err(Error::domain(
                "angular momentum residual needs distinct radii within each stencil",
            ));
        }
        let phi_prime = three_point_derivative(p0, p1, p2);
        let r = p1.0;
        let eta = medium.refractive_index(r)?;
        let rp = r * phi_prime;
        values.push((eta * r * rp / (1.0 + rp * rp).sqrt()).abs());
    }

    let mut sorted = values.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let reference = sorted[sorted.len() / 2];
    if !(reference > 0.0) {
        return Err(Error::domain("degenerate path: zero angular momentum"));
    }
    Ok(values
        .iter()
        .map(|v| (v - reference).abs() / reference)
        .fold(0.0, f64::max))
}

/// Derivative of y(x) at the middle of three support points,
/// second-order accurate on non-uniform grids. Written in terms of the
/// neighbor differences so dense grids do not lose the signal to
/// cancellation of the absolute y values.
fn three_point_derivative(p0: (f64, f64), p1: (f64, f64), p2: (f64, f64)) -> f64 {
    let h0 = p1.0 - p0.0;
    let h1 = p2.0 - p1.0;
    (h0 * h0 * (p2.1 - p1.1) + h1 * h1 * (p1.1 - p0.1)) / (h0 * h1 * (h0 + h1))
}
