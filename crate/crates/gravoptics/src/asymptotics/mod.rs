//! WKB/Debye waves, shadow matching, and Hankel saddle points.

mod bessel;
mod hankel;

pub use bessel::{bessel_j_both_routes, ln_gamma, reference_bessel_j};
pub use hankel::{hankel_numeric, hankel_saddle_leading, HankelKind};

use std::f64::consts::{FRAC_PI_4, PI};

use crate::eikonal;
use crate::error::{Error, Result};
use crate::medium::OrbitElements;

/// Propagation sense relative to the caustic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveDirection {
    /// Moving away from the caustic; phase kappa S + theta.
    Outgoing,
    /// Moving toward the caustic; phase -(kappa S + theta).
    Incoming,
}

/// One asymptotic phase/amplitude pair of the short-wavelength solution.
///
/// The amplitude is normalized so that for a constant index the Bessel
/// function is reproduced directly:
/// J_nu(kappa eta r) ~ sqrt(2/pi) * amplitude * cos(phase),
/// i.e. amplitude = (kappa^2 (eta^2 r^2 - r_a^2))^(-1/4), the
/// (x^2 - nu^2)^(-1/4) Debye envelope written through S'.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WkbWave {
    pub wave_number: f64,
    pub phase: f64,
    pub amplitude: f64,
    pub direction: WaveDirection,
    /// Matching constant theta; -pi/4 (mod pi) kills the growing shadow
    /// solution.
    pub matching_phase: f64,
}

impl WkbWave {
    /// The companion wave running the other way: reversed eikonal sign,
    /// reversed matching phase.
    pub fn reversed(&self) -> WkbWave {
        WkbWave {
            wave_number: self.wave_number,
            phase: -self.phase,
            amplitude: self.amplitude,
            direction: match self.direction {
                WaveDirection::Outgoing => WaveDirection::Incoming,
                WaveDirection::Incoming => WaveDirection::Outgoing,
            },
            matching_phase: self.matching_phase,
        }
    }

    /// sqrt(2/pi) * amplitude: the local envelope of the standing wave.
    pub fn envelope(&self) -> f64 {
        (2.0 / PI).sqrt() * self.amplitude
    }
}

/// Outgoing Debye wave in the periodic region eta r > r_a:
/// phase = kappa S - pi/4, amplitude = (kappa^2(eta^2 r^2 - r_a^2))^(-1/4).
pub fn debye_phase(kappa: f64, r: f64, caustic_radius: f64, index: f64) -> Result<WkbWave> {
    if !(kappa > 0.0) {
        return Err(Error::domain("debye_phase requires kappa > 0"));
    }
    let s = eikonal::eikonal_free(r, caustic_radius, index)?;
    if s.branch == eikonal::Branch::Shadow {
        return Err(Error::domain(
            "eta r < r_a: the wave is evanescent there, use shadow_amplitude",
        ));
    }
    let momentum_sq = (index * r) * (index * r) - caustic_radius * caustic_radius;
    if momentum_sq <= 0.0 {
        return Err(Error::domain("debye_phase is singular at the caustic"));
    }
    Ok(WkbWave {
        wave_number: kappa,
        phase: kappa * s.value - FRAC_PI_4,
        amplitude: (kappa * kappa * momentum_sq).powf(-0.25),
        direction: WaveDirection::Outgoing,
        matching_phase: -FRAC_PI_4,
    })
}

/// The two exponential solutions in the shadow region r < r_a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShadowAmplitudes {
    /// exp(-kappa S_dagger(r)) per unit coefficient.
    pub decaying: f64,
    /// Coefficient of the growing solution implied by the matching
    /// condition, (1/2) cos(theta - pi/4) per unit oscillatory
    /// amplitude. Exactly zero at theta = -pi/4.
    pub growing_coefficient: f64,
}

/// Shadow-side amplitudes for a wave matched with constant `theta`.
pub fn shadow_amplitude(
    kappa: f64,
    r: f64,
    caustic_radius: f64,
    theta: f64,
) -> Result<ShadowAmplitudes> {
    if !(kappa > 0.0) {
        return Err(Error::domain("shadow_amplitude requires kappa > 0"));
    }
    if r >= caustic_radius {
        return Err(Error::domain(
            "shadow_amplitude lives at r < r_a; use debye_phase outside",
        ));
    }
    let s = eikonal::eikonal_shadow(r, caustic_radius)?;
    // cos(theta - pi/4) written as sin(theta + pi/4) so the matching
    // value theta = -pi/4 yields an exact zero in floating point.
    let growing_coefficient = 0.5 * (theta + FRAC_PI_4).sin();
    Ok(ShadowAmplitudes {
        decaying: (-kappa * s.imag).exp(),
        growing_coefficient,
    })
}

/// Branch of a stationary point of W(phi) = eps r sin(phi) - (q - r) phi.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SaddleBranch {
    Oscillatory,
    Shadow,
}

/// A simple saddle of the Hankel phase function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddleResult {
    /// phi_plus on the oscillatory branch; the imaginary part
    /// arccosh((q-r)/(eps r)) of the saddle in the shadow.
    pub angle: f64,
    /// W(phi_plus) on the oscillatory branch; in the shadow the bracket
    /// sqrt((q-r)^2 - eps^2 r^2) - (q-r) arccosh((q-r)/(eps r)) whose
    /// product with +/- i is the phase value (negative: the wave decays).
    pub phase_value: f64,
    pub branch: SaddleBranch,
    /// W''(phi_plus) = -eps r sin(phi_plus) on the oscillatory branch;
    /// its magnitude eps r sinh(psi) at the imaginary saddle.
    pub second_derivative: f64,
}

/// Locate the saddle of the Hankel phase for radius r on the given conic.
pub fn hankel_saddle(kappa: f64, r: f64, el: &OrbitElements) -> Result<SaddleResult> {
    if !(kappa > 0.0) {
        return Err(Error::domain("hankel_saddle requires kappa > 0"));
    }
    if !(r > 0.0) || !(el.eccentricity > 0.0) {
        return Err(Error::domain("hankel_saddle requires eps r > 0"));
    }
    let x = el.eccentricity * r;
    let n = el.semi_latus_rectum - r;

    if n < -x {
        return Err(Error::domain(
            "no saddle: r beyond the outer libration limit (q - r < -eps r)",
        ));
    }

    if n.abs() <= x {
        let mut phi = (n / x).clamp(-1.0, 1.0).acos();
        // One Newton polish pass keeps |W'| at rounding level even when
        // acos loses precision near the turning points.
        for _ in 0..3 {
            let w1 = x * phi.cos() - n;
            let w2 = -x * phi.sin();
            if w2 == 0.0 {
                break;
            }
            let step = w1 / w2;
            phi -= step;
            if step.abs() < 1e-15 * phi.abs().max(1.0) {
                break;
            }
        }
        let w_value = x * phi.sin() - n * phi;
        let second = -x * phi.sin();
        if second == 0.0 {
            return Err(Error::domain(
                "degenerate saddle at the libration boundary (W'' = 0)",
            ));
        }
        Ok(SaddleResult {
            angle: phi,
            phase_value: w_value,
            branch: SaddleBranch::Oscillatory,
            second_derivative: second,
        })
    } else {
        let psi = (n / x).acosh();
        Ok(SaddleResult {
            angle: psi,
            phase_value: x * psi.sinh() - n * psi,
            branch: SaddleBranch::Shadow,
            second_derivative: x * psi.sinh(),
        })
    }
}
