//! Index-of-refraction models and conic orbit elements.
//!
//! The refractive index encodes the potential as `eta^2(r) = -A - 2U(r)`,
//! with `A` minus twice the total energy per unit mass (dimensionless in
//! gravitational units). Four laws are supported:
//!
//! - `Constant`: vacuum-like medium, `eta = eta0`;
//! - `Newtonian`: monopole potential, `eta^2 = -A + R_s/r`;
//! - `Quadrupole`: the pure quadrupole interaction felt by light,
//!   `eta^2 = -A + c2 R_s r_a^2 / r^3` (mass dipole excluded, so there is
//!   no `1/r^2` term and the monopole does not participate in bending);
//! - `Perihelion`: monopole plus quadrupole for bound orbits,
//!   `eta^2 = -A + (R_s/r)(1 + r_a^2/r^2)`, meaningful for `r > 1.5 R_s`.
//!
//! Every model computes its radial validity interval (where `eta^2 >= 0`)
//! eagerly at construction, by bracketing + bisection; evaluation outside
//! the interval is a `Domain` error.

use crate::error::{Error, Result};
use crate::roots;

/// Relative tolerance used when root-finding validity boundaries.
const BOUNDARY_REL_TOL: f64 = 1e-12;

/// The functional form of the refractive-index law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MediumLaw {
    Constant {
        index: f64,
    },
    Newtonian {
        energy_constant: f64,
        schwarzschild_radius: f64,
    },
    Quadrupole {
        energy_constant: f64,
        schwarzschild_radius: f64,
        caustic_radius: f64,
        coupling: f64,
    },
    Perihelion {
        energy_constant: f64,
        schwarzschild_radius: f64,
        caustic_radius: f64,
    },
}

/// Radial interval on which a medium is defined. `lower` is exclusive,
/// `upper` (when present) inclusive up to root-finding tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialInterval {
    pub lower: f64,
    pub upper: Option<f64>,
}

impl RadialInterval {
    pub fn contains(&self, r: f64) -> bool {
        if r <= self.lower {
            return false;
        }
        // Slack matches the root-finding tolerance of the boundary itself.
        match self.upper {
            Some(u) => r <= u * (1.0 + 4e-12),
            None => true,
        }
    }
}

/// An index-of-refraction model with its precomputed validity interval.
#[derive(Debug, Clone, PartialEq)]
pub struct MediumModel {
    law: MediumLaw,
    validity: RadialInterval,
}

impl MediumModel {
    pub fn constant(index: f64) -> Result<Self> {
        if !(index > 0.0) {
            return Err(Error::domain(format!(
                "constant medium requires eta0 > 0, got {index}"
            )));
        }
        Ok(MediumModel {
            law: MediumLaw::Constant { index },
            validity: RadialInterval {
                lower: 0.0,
                upper: None,
            },
        })
    }

    pub fn newtonian(energy_constant: f64, schwarzschild_radius: f64) -> Result<Self> {
        if !(schwarzschild_radius > 0.0) {
            return Err(Error::domain("Newtonian medium requires R_s > 0"));
        }
        let law = MediumLaw::Newtonian {
            energy_constant,
            schwarzschild_radius,
        };
        let upper = if energy_constant > 0.0 {
            // eta^2 = -A + R_s/r crosses zero once; bracket around R_s/A.
            let scale = schwarzschild_radius / energy_constant;
            Some(roots::bisect(
                |r| law_index_squared(&law, r),
                0.5 * scale,
                2.0 * scale,
                BOUNDARY_REL_TOL,
            )?)
        } else {
            None
        };
        Ok(MediumModel {
            law,
            validity: RadialInterval { lower: 0.0, upper },
        })
    }

    pub fn quadrupole(
        energy_constant: f64,
        schwarzschild_radius: f64,
        caustic_radius: f64,
        coupling: Option<f64>,
    ) -> Result<Self> {
        let coupling = coupling.unwrap_or(1.0);
        if !(schwarzschild_radius > 0.0) || !(caustic_radius > 0.0) {
            return Err(Error::domain("quadrupole medium requires R_s, r_a > 0"));
        }
        let law = MediumLaw::Quadrupole {
            energy_constant,
            schwarzschild_radius,
            caustic_radius,
            coupling,
        };
        let strength = coupling * schwarzschild_radius * caustic_radius * caustic_radius;
        let validity = match (
            strength.partial_cmp(&0.0),
            energy_constant.partial_cmp(&0.0),
        ) {
            (Some(std::cmp::Ordering::Greater), Some(std::cmp::Ordering::Greater)) => {
                let scale = (strength / energy_constant).cbrt();
                let upper = roots::bisect(
                    |r| law_index_squared(&law, r),
                    0.5 * scale,
                    2.0 * scale,
                    BOUNDARY_REL_TOL,
                )?;
                RadialInterval {
                    lower: 0.0,
                    upper: Some(upper),
                }
            }
            (Some(std::cmp::Ordering::Less), Some(std::cmp::Ordering::Less)) => {
                let scale = (-strength / -energy_constant).cbrt();
                let lower = roots::bisect(
                    |r| law_index_squared(&law, r),
                    0.5 * scale,
                    2.0 * scale,
                    BOUNDARY_REL_TOL,
                )?;
                RadialInterval { lower, upper: None }
            }
            (Some(std::cmp::Ordering::Less), _) => {
                return Err(Error::domain(
                    "quadrupole medium with negative coupling and A >= 0 is nowhere valid",
                ));
            }
            _ => {
                if energy_constant > 0.0 {
                    return Err(Error::domain(
                        "quadrupole medium with zero coupling and A > 0 is nowhere valid",
                    ));
                }
                RadialInterval {
                    lower: 0.0,
                    upper: None,
                }
            }
        };
        Ok(MediumModel { law, validity })
    }

    pub fn perihelion(
        energy_constant: f64,
        schwarzschild_radius: f64,
        caustic_radius: f64,
    ) -> Result<Self> {
        if !(schwarzschild_radius > 0.0) || !(caustic_radius > 0.0) {
            return Err(Error::domain("perihelion medium requires R_s, r_a > 0"));
        }
        let law = MediumLaw::Perihelion {
            energy_constant,
            schwarzschild_radius,
            caustic_radius,
        };
        let lower = 1.5 * schwarzschild_radius;
        let upper = if energy_constant > 0.0 {
            let probe = lower * (1.0 + 1e-9);
            if law_index_squared(&law, probe) <= 0.0 {
                return Err(Error::domain(
                    "perihelion medium is nowhere valid beyond r = 1.5 R_s",
                ));
            }
            let (lo, hi) = roots::bracket_geometric(
                |r| law_index_squared(&law, r),
                probe,
                2.0,
                400,
            )?;
            Some(roots::bisect(
                |r| law_index_squared(&law, r),
                lo,
                hi,
                BOUNDARY_REL_TOL,
            )?)
        } else {
            None
        };
        Ok(MediumModel {
            law,
            validity: RadialInterval { lower, upper },
        })
    }

    pub fn law(&self) -> &MediumLaw {
        &self.law
    }

    pub fn validity(&self) -> RadialInterval {
        self.validity
    }

    /// eta(r). Errors outside the validity interval or for r <= 0.
    pub fn refractive_index(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::domain(format!("radius must be positive, got {r}")));
        }
        if !self.validity.contains(r) {
            return Err(Error::domain(format!(
                "r = {r:e} outside medium validity interval ({:e}, {:?}]",
                self.validity.lower, self.validity.upper
            )));
        }
        let sq = self.index_squared(r);
        if sq < 0.0 {
            // Boundary roundoff only; anything sizable is a real domain hole.
            if sq > -1e-10 * self.index_squared_scale(r) {
                return Ok(0.0);
            }
            return Err(Error::domain(format!("eta^2 = {sq:e} < 0 at r = {r:e}")));
        }
        Ok(sq.sqrt())
    }

    /// eta^2(r) without the validity check (used by integrands that clamp).
    pub fn index_squared(&self, r: f64) -> f64 {
        law_index_squared(&self.law, r)
    }

    /// d(eta^2)/dr, analytic. Feeds the variational gradient.
    pub fn index_squared_gradient(&self, r: f64) -> f64 {
        match self.law {
            MediumLaw::Constant { .. } => 0.0,
            MediumLaw::Newtonian {
                schwarzschild_radius,
                ..
            } => -schwarzschild_radius / (r * r),
            MediumLaw::Quadrupole {
                schwarzschild_radius,
                caustic_radius,
                coupling,
                ..
            } => {
                -3.0 * coupling * schwarzschild_radius * caustic_radius * caustic_radius
                    / (r * r * r * r)
            }
            MediumLaw::Perihelion {
                schwarzschild_radius,
                caustic_radius,
                ..
            } => {
                -schwarzschild_radius / (r * r)
                    - 3.0 * schwarzschild_radius * caustic_radius * caustic_radius
                        / (r * r * r * r)
            }
        }
    }

    /// Potential 2U(r) such that eta^2 = -A - 2U.
    pub fn twice_potential(&self, r: f64) -> f64 {
        match self.law {
            MediumLaw::Constant { index } => {
                // By convention the constant law absorbs everything into A = -eta0^2.
                let _ = index;
                0.0
            }
            _ => -(self.index_squared(r) + self.energy_constant()),
        }
    }

    /// The energy constant A of the law (for Constant media, -eta0^2).
    pub fn energy_constant(&self) -> f64 {
        match self.law {
            MediumLaw::Constant { index } => -index * index,
            MediumLaw::Newtonian {
                energy_constant, ..
            }
            | MediumLaw::Quadrupole {
                energy_constant, ..
            }
            | MediumLaw::Perihelion {
                energy_constant, ..
            } => energy_constant,
        }
    }

    fn index_squared_scale(&self, r: f64) -> f64 {
        match self.law {
            MediumLaw::Constant { index } => index * index,
            MediumLaw::Newtonian {
                energy_constant,
                schwarzschild_radius,
            } => energy_constant.abs() + schwarzschild_radius / r,
            MediumLaw::Quadrupole {
                energy_constant,
                schwarzschild_radius,
                caustic_radius,
                coupling,
            } => {
                energy_constant.abs()
                    + (coupling * schwarzschild_radius * caustic_radius * caustic_radius).abs()
                        / (r * r * r)
            }
            MediumLaw::Perihelion {
                energy_constant,
                schwarzschild_radius,
                caustic_radius,
            } => {
                energy_constant.abs()
                    + schwarzschild_radius / r
                    + schwarzschild_radius * caustic_radius * caustic_radius / (r * r * r)
            }
        }
    }
}

fn law_index_squared(law: &MediumLaw, r: f64) -> f64 {
    match *law {
        MediumLaw::Constant { index } => index * index,
        MediumLaw::Newtonian {
            energy_constant,
            schwarzschild_radius,
        } => -energy_constant + schwarzschild_radius / r,
        MediumLaw::Quadrupole {
            energy_constant,
            schwarzschild_radius,
            caustic_radius,
            coupling,
        } => {
            -energy_constant
                + coupling * schwarzschild_radius * caustic_radius * caustic_radius / (r * r * r)
        }
        MediumLaw::Perihelion {
            energy_constant,
            schwarzschild_radius,
            caustic_radius,
        } => {
            -energy_constant
                + (schwarzschild_radius / r) * (1.0 + caustic_radius * caustic_radius / (r * r))
        }
    }
}

/// Conic elements derived from (A, r_a, R_s) for the Newtonian medium.
///
/// `semi_axis` is the positive semi-axis R_s / 2|A| (absent for the
/// parabolic case A = 0). `perihelion` always exists; `aphelion` only for
/// bound orbits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitElements {
    pub energy_constant: f64,
    pub caustic_radius: f64,
    pub schwarzschild_radius: f64,
    pub eccentricity: f64,
    pub semi_latus_rectum: f64,
    pub semi_axis: Option<f64>,
    pub perihelion: f64,
    pub aphelion: Option<f64>,
}

/// Derive conic elements from energy, angular momentum and Schwarzschild
/// radius. Errors when `4 A r_a^2 > R_s^2` (the orbit would be over-bound
/// and the eccentricity imaginary).
pub fn orbit_elements(
    energy_constant: f64,
    caustic_radius: f64,
    schwarzschild_radius: f64,
) -> Result<OrbitElements> {
    if !(caustic_radius > 0.0) || !(schwarzschild_radius > 0.0) {
        return Err(Error::domain("orbit elements require r_a > 0 and R_s > 0"));
    }
    let ecc_sq = 1.0
        - 4.0 * energy_constant * caustic_radius * caustic_radius
            / (schwarzschild_radius * schwarzschild_radius);
    if ecc_sq < 0.0 {
        return Err(Error::domain(format!(
            "over-bound orbit: eccentricity^2 = {ecc_sq:e} < 0"
        )));
    }
    let eccentricity = ecc_sq.sqrt();
    let semi_latus_rectum = 2.0 * caustic_radius * caustic_radius / schwarzschild_radius;

    let (semi_axis, perihelion, aphelion) = if energy_constant == 0.0 {
        (None, 0.5 * semi_latus_rectum, None)
    } else {
        let a = schwarzschild_radius / (2.0 * energy_constant.abs());
        if energy_constant > 0.0 {
            (
                Some(a),
                a * (1.0 - eccentricity),
                Some(a * (1.0 + eccentricity)),
            )
        } else {
            (Some(a), a * (eccentricity - 1.0), None)
        }
    };

    Ok(OrbitElements {
        energy_constant,
        caustic_radius,
        schwarzschild_radius,
        eccentricity,
        semi_latus_rectum,
        semi_axis,
        perihelion,
        aphelion,
    })
}

impl OrbitElements {
    /// The radicand -A r^2 + R_s r - r_a^2 = (eta r)^2 - r_a^2 of the
    /// Newtonian-medium orbit; nonnegative exactly on the allowed region.
    pub fn radicand(&self, r: f64) -> f64 {
        -self.energy_constant * r * r + self.schwarzschild_radius * r
            - self.caustic_radius * self.caustic_radius
    }

    pub fn is_bound(&self) -> bool {
        self.energy_constant > 0.0
    }

    /// Newtonian medium sharing this orbit's parameters.
    pub fn medium(&self) -> Result<MediumModel> {
        MediumModel::newtonian(self.energy_constant, self.schwarzschild_radius)
    }
}
