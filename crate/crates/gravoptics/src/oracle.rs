//! Brute-force reference routes.
//!
//! Everything here evaluates a defining integral directly (adaptive
//! quadrature with turning-point substitutions) without touching the
//! closed forms it is used to validate. Tests and the acceptance suite
//! compare implementations against these routes; keeping them in one
//! module makes the independence auditable.

use std::f64::consts::PI;

use crate::error::Result;
use crate::medium::OrbitElements;
use crate::quadrature::{self, EndpointSingularity, Tolerance};

fn tight() -> Tolerance {
    Tolerance::new(1e-13, 1e-13)
}

/// Integral of sqrt((eta rho)^2 - r_a^2) / rho from the turning point
/// r_a / eta up to r (constant index).
pub fn free_eikonal_by_quadrature(r: f64, caustic_radius: f64, index: f64) -> Result<f64> {
    let ra = caustic_radius;
    let lo = ra / index;
    let f = |rho: f64| ((index * rho).powi(2) - ra * ra).max(0.0).sqrt() / rho;
    Ok(quadrature::integrate_turning(f, lo, r, EndpointSingularity::Lower, tight())?.value)
}

/// Integral of sqrt(r_a^2 - rho^2) / rho from r up to the caustic; the
/// shadow-branch magnitude.
pub fn shadow_eikonal_by_quadrature(r: f64, caustic_radius: f64) -> Result<f64> {
    let ra = caustic_radius;
    let f = |rho: f64| (ra * ra - rho * rho).max(0.0).sqrt() / rho;
    Ok(quadrature::integrate_turning(f, r, ra, EndpointSingularity::Upper, tight())?.value)
}

/// Integral of sqrt(-A rho^2 + R_s rho - r_a^2) / rho from the inner
/// turning point up to r (both signs of A).
pub fn kepler_eikonal_by_quadrature(r: f64, el: &OrbitElements) -> Result<f64> {
    let f = |rho: f64| el.radicand(rho).max(0.0).sqrt() / rho;
    Ok(
        quadrature::integrate_turning(f, el.perihelion, r, EndpointSingularity::Lower, tight())?
            .value,
    )
}

/// Integral of sqrt(R_s rho - r_a^2) / rho from r_a^2 / R_s up to r.
pub fn parabolic_eikonal_by_quadrature(
    r: f64,
    caustic_radius: f64,
    schwarzschild_radius: f64,
) -> Result<f64> {
    let ra = caustic_radius;
    let lo = ra * ra / schwarzschild_radius;
    let f = |rho: f64| (schwarzschild_radius * rho - ra * ra).max(0.0).sqrt() / rho;
    Ok(quadrature::integrate_turning(f, lo, r, EndpointSingularity::Lower, tight())?.value)
}

/// Integral of sqrt(rho^2 - r_a^2 (1 - R_s/rho)) / rho from the quadrupole
/// caustic up to r: the exact integrand of the index law
/// eta^2 = 1 + R_s r_a^2 / rho^3.
pub fn quadrupole_eikonal_by_quadrature(
    r: f64,
    caustic_radius: f64,
    schwarzschild_radius: f64,
) -> Result<f64> {
    let ra = caustic_radius;
    let r0 = crate::eikonal::quadrupole_caustic_bisect(ra, schwarzschild_radius)?;
    let f = |rho: f64| {
        (rho * rho - ra * ra * (1.0 - schwarzschild_radius / rho))
            .max(0.0)
            .sqrt()
            / rho
    };
    Ok(quadrature::integrate_turning(f, r0, r, EndpointSingularity::Lower, tight())?.value)
}

/// Unperturbed Kepler action over one full libration:
/// 2 * integral of sqrt(radicand)/rho between the turning points.
pub fn kepler_libration_action(el: &OrbitElements) -> Result<f64> {
    let hi = el
        .aphelion
        .ok_or_else(|| crate::Error::domain("libration action requires a bound orbit"))?;
    let f = |rho: f64| el.radicand(rho).max(0.0).sqrt() / rho;
    let q = quadrature::integrate_turning(f, el.perihelion, hi, EndpointSingularity::Both, tight())?;
    Ok(2.0 * q.value)
}

/// Integral of h(rho) / sqrt((r+ - rho)(rho - r-)) over the libration of
/// a bound orbit. The radicand is factored through the turning points and
/// the inverse square roots removed analytically with rho = r-/+ -/+ t^2,
/// so the integrands handed to the adaptive core are smooth.
fn orbit_inverse_sqrt_integral<H: Fn(f64) -> f64>(el: &OrbitElements, h: H) -> Result<f64> {
    let lo = el.perihelion;
    let hi = el
        .aphelion
        .ok_or_else(|| crate::Error::domain("libration integral requires a bound orbit"))?;
    let mid = 0.5 * (lo + hi);
    let lower = quadrature::integrate(
        |t| 2.0 * h(lo + t * t) / (hi - lo - t * t).max(f64::MIN_POSITIVE).sqrt(),
        0.0,
        (mid - lo).sqrt(),
        tight(),
    )?;
    let upper = quadrature::integrate(
        |t| 2.0 * h(hi - t * t) / (hi - lo - t * t).max(f64::MIN_POSITIVE).sqrt(),
        0.0,
        (hi - mid).sqrt(),
        tight(),
    )?;
    Ok(lower.value + upper.value)
}

/// Angle swept over one full libration of the unperturbed Kepler orbit:
/// 2 * integral of r_a / (rho sqrt(radicand)). Equals 2 pi.
pub fn libration_angle_by_quadrature(el: &OrbitElements) -> Result<f64> {
    let ra = el.caustic_radius;
    let root_energy = el.energy_constant.sqrt();
    let value = orbit_inverse_sqrt_integral(el, |rho| ra / (rho * root_energy))?;
    Ok(2.0 * value)
}

/// First-order perihelion correction over one libration by quadrature:
/// 2 * (3/4) R_s^2 * integral of 1 / (rho sqrt(radicand)).
/// Closed form: (3/2) pi R_s^2 / r_a.
pub fn perihelion_first_order_by_quadrature(el: &OrbitElements) -> Result<f64> {
    let rs = el.schwarzschild_radius;
    let root_energy = el.energy_constant.sqrt();
    let value = orbit_inverse_sqrt_integral(el, |rho| 1.0 / (rho * root_energy))?;
    Ok(2.0 * 0.75 * rs * rs * value)
}

/// One-way radar excess time by direct quadrature of (R_s/c) / r along
/// the straight chord, in geometric length units (divide by c for
/// seconds).
pub fn radar_excess_length_by_quadrature(
    earth_distance: f64,
    target_distance: f64,
    impact_parameter: f64,
    schwarzschild_radius: f64,
) -> Result<f64> {
    let f = |x: f64| schwarzschild_radius / (impact_parameter * impact_parameter + x * x).sqrt();
    Ok(quadrature::integrate(f, -earth_distance, target_distance, tight())?.value)
}

/// The sigma-substitution deflection integral
/// 2 * int_0^1 (1 + R_s sigma / r_a) / sqrt(1 - sigma^2) d sigma,
/// which evaluates to pi + 2 R_s / r_a.
pub fn deflection_turn_by_quadrature(caustic_radius: f64, schwarzschild_radius: f64) -> Result<f64> {
    let k = schwarzschild_radius / caustic_radius;
    let f = |sigma: f64| (1.0 + k * sigma) / (1.0 - sigma * sigma).max(f64::MIN_POSITIVE).sqrt();
    let q = quadrature::integrate_turning(f, 0.0, 1.0, EndpointSingularity::Upper, tight())?;
    Ok(2.0 * q.value)
}

/// Sanity identity: the closure figure the expansion terms report.
pub fn expected_libration_angle() -> f64 {
    2.0 * PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::medium::orbit_elements;

    #[test]
    fn deflection_quadrature_closed_form() {
        let (ra, rs) = (1.0, 1e-4);
        let turn = deflection_turn_by_quadrature(ra, rs).unwrap();
        assert!((turn - (PI + 2.0 * rs / ra)).abs() < 1e-12);
    }

    #[test]
    fn libration_angle_is_two_pi() {
        let el = orbit_elements(0.12, 1.0, 1.0).unwrap();
        let angle = libration_angle_by_quadrature(&el).unwrap();
        assert!((angle - 2.0 * PI).abs() < 1e-9, "{angle}");
    }

    #[test]
    fn radar_quadrature_matches_arcsinh_form() {
        let (xe, xv, b, rs) = (3.0, 2.0, 0.5, 1e-3);
        let q = radar_excess_length_by_quadrature(xe, xv, b, rs).unwrap();
        let closed = rs * ((xv / b).asinh() + (xe / b).asinh());
        assert!((q - closed).abs() < 1e-13);
    }
}
