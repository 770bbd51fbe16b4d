//! Physical constants and the SI <-> gravitational-unit boundary.
//!
//! All internal math runs in gravitational units (c = G = 1), where times
//! and frequencies are carried as lengths and inverse lengths. Conversion
//! happens only at module boundaries (CLI inputs/outputs, the radar-delay
//! seconds, the Mercury report).
//!
//! Sources for the constants table:
//! - speed of light: SI definition (exact);
//! - G: CODATA 2018;
//! - AU: IAU 2012 definition (exact);
//! - solar radius: IAU nominal value 6.96e8 m;
//! - solar Schwarzschild radius: 2GM_sun/c^2 rounded to 2953 m;
//! - Mercury elements: JPL mean orbital elements (a = 5.790905e10 m,
//!   e = 0.20563).

/// Speed of light in vacuum [m/s] (exact).
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Newtonian constant of gravitation [m^3 kg^-1 s^-2].
pub const GRAVITATIONAL_CONSTANT: f64 = 6.674_30e-11;

/// Astronomical unit [m] (exact by definition).
pub const ASTRONOMICAL_UNIT: f64 = 1.495_978_707e11;

/// Nominal solar photospheric radius [m].
pub const SOLAR_RADIUS: f64 = 6.96e8;

/// Solar Schwarzschild radius 2GM/c^2 [m], rounded to the meter.
pub const SOLAR_SCHWARZSCHILD_RADIUS: f64 = 2953.0;

/// Mean Earth orbital radius used in the radar scenario [m].
pub const EARTH_ORBIT_RADIUS: f64 = 1.496e11;

/// Mean Venus orbital radius used in the radar scenario [m].
pub const VENUS_ORBIT_RADIUS: f64 = 1.082e11;

/// Arcseconds per radian (648000 / pi).
pub const ARCSEC_PER_RADIAN: f64 = 206_264.806_247_096_36;

pub const SECONDS_PER_DAY: f64 = 86_400.0;

/// Schwarzschild radius of a point mass [m] from its mass [kg].
pub fn schwarzschild_radius(mass_kg: f64) -> f64 {
    2.0 * GRAVITATIONAL_CONSTANT * mass_kg / (SPEED_OF_LIGHT * SPEED_OF_LIGHT)
}

/// Keplerian elements of Mercury's orbit (semi-major axis in meters).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MercuryElements {
    pub semi_major_axis: f64,
    pub eccentricity: f64,
}

impl MercuryElements {
    /// Modern JPL mean elements.
    pub fn modern() -> Self {
        MercuryElements {
            semi_major_axis: 5.790_905e10,
            eccentricity: 0.205_63,
        }
    }

    /// Elements consistent with an orbital period of 87.25 days around a
    /// body of Schwarzschild radius 2953 m (Kepler's third law). The
    /// modern period is 87.97 days; this variant exists to reproduce
    /// historical worked numbers that quote the shorter period, and its
    /// derivation is spelled out in the README constants table.
    pub fn period_87p25_days() -> Self {
        let period = 87.25 * SECONDS_PER_DAY;
        let omega = std::f64::consts::TAU / period;
        // omega^2 = G M / a^3 = c^2 R_s / (2 a^3)
        let a3 = SPEED_OF_LIGHT * SPEED_OF_LIGHT * SOLAR_SCHWARZSCHILD_RADIUS
            / (2.0 * omega * omega);
        MercuryElements {
            semi_major_axis: a3.cbrt(),
            eccentricity: 0.2056,
        }
    }
}

/// Unit systems understood at the library boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    /// c = G = 1; times and frequencies are lengths and inverse lengths.
    Gravitational,
    Si,
}

impl UnitSystem {
    /// Convert a time expressed in this system to the other one.
    /// Gravitational times are lengths (meters), SI times are seconds.
    pub fn time_to(&self, value: f64, target: UnitSystem) -> f64 {
        match (self, target) {
            (UnitSystem::Gravitational, UnitSystem::Si) => value / SPEED_OF_LIGHT,
            (UnitSystem::Si, UnitSystem::Gravitational) => value * SPEED_OF_LIGHT,
            _ => value,
        }
    }

    /// Convert a frequency (inverse time) to the other system.
    pub fn frequency_to(&self, value: f64, target: UnitSystem) -> f64 {
        match (self, target) {
            (UnitSystem::Gravitational, UnitSystem::Si) => value * SPEED_OF_LIGHT,
            (UnitSystem::Si, UnitSystem::Gravitational) => value / SPEED_OF_LIGHT,
            _ => value,
        }
    }

    /// Convert a velocity (dimensionless in gravitational units) to the
    /// other system.
    pub fn velocity_to(&self, value: f64, target: UnitSystem) -> f64 {
        match (self, target) {
            (UnitSystem::Gravitational, UnitSystem::Si) => value * SPEED_OF_LIGHT,
            (UnitSystem::Si, UnitSystem::Gravitational) => value / SPEED_OF_LIGHT,
            _ => value,
        }
    }
}
