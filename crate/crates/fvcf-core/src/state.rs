//! Conserved/primitive state algebra and per-material equations of state.

use std::ops::{Add, Mul, Sub};

use crate::error::{Result, SolverError};

/// Vector of conserved densities `(rho, rho*u, rho*v, rho*E)` on a cell or
/// partial volume.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ConservedState {
    /// Density (kg/m3).
    pub rho: f64,
    /// x momentum density (kg/m2/s).
    pub mom_x: f64,
    /// y momentum density.
    pub mom_y: f64,
    /// Total energy density (J/m3), `rho * (e + |u|^2 / 2)`.
    pub rho_e: f64,
}

impl ConservedState {
    pub const ZERO: ConservedState = ConservedState {
        rho: 0.0,
        mom_x: 0.0,
        mom_y: 0.0,
        rho_e: 0.0,
    };

    pub fn new(rho: f64, mom_x: f64, mom_y: f64, rho_e: f64) -> ConservedState {
        ConservedState {
            rho,
            mom_x,
            mom_y,
            rho_e,
        }
    }

    /// Build a conserved state from primitive variables.
    pub fn from_primitive(rho: f64, u: f64, v: f64, p: f64, model: &MaterialModel) -> ConservedState {
        let e = model.energy_from_pressure(rho, p);
        ConservedState {
            rho,
            mom_x: rho * u,
            mom_y: rho * v,
            rho_e: rho * (e + 0.5 * (u * u + v * v)),
        }
    }

    /// Swap the two momentum components (used when a y lane is mapped onto
    /// the generic sweep frame).
    pub fn swap_axes(self) -> ConservedState {
        ConservedState {
            rho: self.rho,
            mom_x: self.mom_y,
            mom_y: self.mom_x,
            rho_e: self.rho_e,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.rho.is_finite()
            && self.mom_x.is_finite()
            && self.mom_y.is_finite()
            && self.rho_e.is_finite()
    }
}

impl Add for ConservedState {
    type Output = ConservedState;
    fn add(self, o: ConservedState) -> ConservedState {
        ConservedState {
            rho: self.rho + o.rho,
            mom_x: self.mom_x + o.mom_x,
            mom_y: self.mom_y + o.mom_y,
            rho_e: self.rho_e + o.rho_e,
        }
    }
}

impl Sub for ConservedState {
    type Output = ConservedState;
    fn sub(self, o: ConservedState) -> ConservedState {
        ConservedState {
            rho: self.rho - o.rho,
            mom_x: self.mom_x - o.mom_x,
            mom_y: self.mom_y - o.mom_y,
            rho_e: self.rho_e - o.rho_e,
        }
    }
}

impl Mul<f64> for ConservedState {
    type Output = ConservedState;
    fn mul(self, s: f64) -> ConservedState {
        ConservedState {
            rho: self.rho * s,
            mom_x: self.mom_x * s,
            mom_y: self.mom_y * s,
            rho_e: self.rho_e * s,
        }
    }
}

/// Primitive variables derived from a conserved state under an EOS.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Primitive {
    pub rho: f64,
    pub u: f64,
    pub v: f64,
    pub p: f64,
    /// Specific internal energy.
    pub e: f64,
}

/// Equation-of-state closure.
///
/// Ideal gas: `p = (gamma - 1) rho e`. Stiffened gas:
/// `p = (gamma - 1) rho e - gamma p_inf`, modelling weakly compressible
/// liquids. Both share the sound speed `c^2 = gamma (p + p_inf) / rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eos {
    IdealGas { gamma: f64 },
    StiffenedGas { gamma: f64, p_inf: f64 },
}

/// One material: an EOS plus its index in the material table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialModel {
    pub kind: Eos,
    pub label: usize,
}

impl MaterialModel {
    pub fn ideal_gas(label: usize, gamma: f64) -> MaterialModel {
        MaterialModel {
            kind: Eos::IdealGas { gamma },
            label,
        }
    }

    pub fn stiffened_gas(label: usize, gamma: f64, p_inf: f64) -> MaterialModel {
        MaterialModel {
            kind: Eos::StiffenedGas { gamma, p_inf },
            label,
        }
    }

    pub fn gamma(&self) -> f64 {
        match self.kind {
            Eos::IdealGas { gamma } => gamma,
            Eos::StiffenedGas { gamma, .. } => gamma,
        }
    }

    pub fn p_inf(&self) -> f64 {
        match self.kind {
            Eos::IdealGas { .. } => 0.0,
            Eos::StiffenedGas { p_inf, .. } => p_inf,
        }
    }

    /// EOS pressure from density and specific internal energy.
    pub fn pressure(&self, rho: f64, e: f64) -> Result<f64> {
        if !(rho > 0.0) {
            return Err(SolverError::InadmissibleState(format!(
                "material {}: non-positive density rho={rho}",
                self.label
            )));
        }
        Ok((self.gamma() - 1.0) * rho * e - self.gamma() * self.p_inf())
    }

    /// Specific internal energy at a given pressure (inverse of `pressure`).
    pub fn energy_from_pressure(&self, rho: f64, p: f64) -> f64 {
        (p + self.gamma() * self.p_inf()) / ((self.gamma() - 1.0) * rho)
    }

    /// Sound speed `sqrt(gamma (p + p_inf) / rho)`.
    pub fn sound_speed(&self, rho: f64, p: f64) -> Result<f64> {
        let radicand = self.gamma() * (p + self.p_inf()) / rho;
        if !(rho > 0.0) || !(radicand > 0.0) {
            return Err(SolverError::InadmissibleState(format!(
                "material {}: sound speed undefined at rho={rho}, p={p} (p+p_inf={})",
                self.label,
                p + self.p_inf()
            )));
        }
        Ok(radicand.sqrt())
    }

    /// Convert a conserved state to primitive variables.
    pub fn primitive(&self, s: &ConservedState) -> Result<Primitive> {
        if !(s.rho > 0.0) {
            return Err(SolverError::InadmissibleState(format!(
                "material {}: non-positive density rho={}",
                self.label, s.rho
            )));
        }
        let u = s.mom_x / s.rho;
        let v = s.mom_y / s.rho;
        let e = s.rho_e / s.rho - 0.5 * (u * u + v * v);
        let p = self.pressure(s.rho, e)?;
        Ok(Primitive {
            rho: s.rho,
            u,
            v,
            p,
            e,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ideal_gas_pressure() {
        let m = MaterialModel::ideal_gas(0, 1.4);
        assert_relative_eq!(m.pressure(1.0, 2.5).unwrap(), 1.0);
        assert_relative_eq!(m.pressure(1.0, 0.0).unwrap(), 0.0);
        assert!(m.pressure(0.0, 1.0).is_err());
    }

    #[test]
    fn stiffened_gas_pressure_inverts() {
        let m = MaterialModel::stiffened_gas(1, 4.4, 6e8);
        let e = (1e5 + 4.4 * 6e8) / (3.4 * 1000.0);
        assert_relative_eq!(m.pressure(1000.0, e).unwrap(), 1e5, max_relative = 1e-12);
        assert_relative_eq!(m.energy_from_pressure(1000.0, 1e5), e, max_relative = 1e-14);
    }

    #[test]
    fn sound_speeds() {
        let ideal = MaterialModel::ideal_gas(0, 1.4);
        assert_relative_eq!(
            ideal.sound_speed(1.0, 1.0).unwrap(),
            1.4f64.sqrt(),
            max_relative = 1e-14
        );
        assert_relative_eq!(ideal.sound_speed(1.4, 1.0).unwrap(), 1.0, max_relative = 1e-14);
        let stiff = MaterialModel::stiffened_gas(1, 4.4, 6e8);
        assert_relative_eq!(
            stiff.sound_speed(1000.0, 1e5).unwrap(),
            (4.4 * (6e8 + 1e5) / 1000.0).sqrt(),
            max_relative = 1e-14
        );
        // Negative radicand is an inadmissible state, not a NaN.
        assert!(stiff.sound_speed(1000.0, -7e8).is_err());
    }

    #[test]
    fn primitive_examples() {
        let m = MaterialModel::ideal_gas(0, 1.4);
        let p = m.primitive(&ConservedState::new(1.0, 0.0, 0.0, 2.5)).unwrap();
        assert_relative_eq!(p.p, 1.0);
        assert_relative_eq!(p.e, 2.5);
        let p = m.primitive(&ConservedState::new(2.0, 2.0, 0.0, 6.0)).unwrap();
        assert_relative_eq!(p.u, 1.0);
        assert_relative_eq!(p.e, 2.5);
        assert_relative_eq!(p.p, 2.0);
        assert!(m.primitive(&ConservedState::new(-1.0, 0.0, 0.0, 1.0)).is_err());
    }

    #[test]
    fn conserved_primitive_round_trip() {
        let m = MaterialModel::stiffened_gas(0, 4.4, 6e8);
        let s = ConservedState::from_primitive(998.2, 3.5, -1.25, 2.3e5, &m);
        let prim = m.primitive(&s).unwrap();
        let back = ConservedState::from_primitive(prim.rho, prim.u, prim.v, prim.p, &m);
        assert_relative_eq!(back.rho, s.rho, max_relative = 1e-14);
        assert_relative_eq!(back.mom_x, s.mom_x, max_relative = 1e-14);
        assert_relative_eq!(back.mom_y, s.mom_y, max_relative = 1e-14);
        assert_relative_eq!(back.rho_e, s.rho_e, max_relative = 1e-13);
    }

    #[test]
    fn pressure_monotone_in_energy() {
        let m = MaterialModel::ideal_gas(0, 1.4);
        let mut last = f64::NEG_INFINITY;
        for k in 0..50 {
            let e = 0.1 + 0.2 * k as f64;
            let p = m.pressure(0.7, e).unwrap();
            assert!(p > last);
            last = p;
        }
    }
}
