//! Single-material characteristic flux, the directional-split finite volume
//! update for pure cells, and the CFL time step.

use std::ops::{Add, Mul, Sub};

use crate::error::{Result, SolverError};
use crate::field::CellContent;
use crate::geom::Vec2;
use crate::mesh::Grid;
use crate::state::{ConservedState, MaterialModel};

/// Flux densities through a face of unit area, oriented by the outgoing
/// normal used to compute them.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DirectedFlux {
    pub mass: f64,
    pub mom_x: f64,
    pub mom_y: f64,
    pub energy: f64,
}

impl DirectedFlux {
    pub const ZERO: DirectedFlux = DirectedFlux {
        mass: 0.0,
        mom_x: 0.0,
        mom_y: 0.0,
        energy: 0.0,
    };

    /// Interpret the flux as a conserved-state increment.
    pub fn as_state(self) -> ConservedState {
        ConservedState::new(self.mass, self.mom_x, self.mom_y, self.energy)
    }

    pub fn swap_axes(self) -> DirectedFlux {
        DirectedFlux {
            mass: self.mass,
            mom_x: self.mom_y,
            mom_y: self.mom_x,
            energy: self.energy,
        }
    }
}

impl Add for DirectedFlux {
    type Output = DirectedFlux;
    fn add(self, o: DirectedFlux) -> DirectedFlux {
        DirectedFlux {
            mass: self.mass + o.mass,
            mom_x: self.mom_x + o.mom_x,
            mom_y: self.mom_y + o.mom_y,
            energy: self.energy + o.energy,
        }
    }
}

impl Sub for DirectedFlux {
    type Output = DirectedFlux;
    fn sub(self, o: DirectedFlux) -> DirectedFlux {
        DirectedFlux {
            mass: self.mass - o.mass,
            mom_x: self.mom_x - o.mom_x,
            mom_y: self.mom_y - o.mom_y,
            energy: self.energy - o.energy,
        }
    }
}

impl Mul<f64> for DirectedFlux {
    type Output = DirectedFlux;
    fn mul(self, s: f64) -> DirectedFlux {
        DirectedFlux {
            mass: self.mass * s,
            mom_x: self.mom_x * s,
            mom_y: self.mom_y * s,
            energy: self.energy * s,
        }
    }
}

/// Boundary condition applied at a lane end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// Zero-gradient ghost cell.
    Transmissive,
    /// Mirror ghost with negated normal velocity.
    Reflective,
    Periodic,
}

/// Mirror a state across a face normal to the sweep direction (lane frame).
pub fn mirror_state(s: &ConservedState) -> ConservedState {
    ConservedState::new(s.rho, -s.mom_x, s.mom_y, s.rho_e)
}

/// Physical Euler flux `F(V) . n`.
pub fn physical_flux(state: &ConservedState, model: &MaterialModel, n: Vec2) -> Result<DirectedFlux> {
    let prim = model.primitive(state)?;
    let un = prim.u * n.x + prim.v * n.y;
    Ok(DirectedFlux {
        mass: state.rho * un,
        mom_x: state.mom_x * un + prim.p * n.x,
        mom_y: state.mom_y * un + prim.p * n.y,
        energy: (state.rho_e + prim.p) * un,
    })
}

/// Characteristic numerical flux between two states of one material:
/// `phi = (F_L + F_R)/2 . n - sign(A(mu)) (F_R - F_L)/2 . n`, where `A` is
/// the Euler flux Jacobian in direction `n` at the arithmetic mean of the
/// primitive variables and the sign matrix acts through the eigenbasis
/// (wave speeds `u.n - c`, `u.n`, `u.n`, `u.n + c`).
pub fn numerical_flux(
    left: &ConservedState,
    right: &ConservedState,
    model: &MaterialModel,
    n: Vec2,
) -> Result<DirectedFlux> {
    let f_l = physical_flux(left, model, n)?;
    let f_r = physical_flux(right, model, n)?;
    let pl = model.primitive(left)?;
    let pr = model.primitive(right)?;

    // Mean state for the Jacobian: arithmetic average of primitives.
    let rho = 0.5 * (pl.rho + pr.rho);
    let u = 0.5 * (pl.u + pr.u);
    let v = 0.5 * (pl.v + pr.v);
    let p = 0.5 * (pl.p + pr.p);
    let c = model.sound_speed(rho, p)?;
    let gamma_m1 = model.gamma() - 1.0;

    let qn = u * n.x + v * n.y;
    let tx = -n.y;
    let ty = n.x;
    let qt = u * tx + v * ty;
    let q2 = u * u + v * v;
    let e = model.energy_from_pressure(rho, p);
    let h_tot = e + p / rho + 0.5 * q2;

    // Project w = F_R - F_L onto the right eigenvectors of A(mu).
    let w = f_r - f_l;
    let ax = w.mom_x - w.mass * u;
    let ay = w.mom_y - w.mass * v;
    let d_acoustic = (ax * n.x + ay * n.y) / c;
    let alpha_shear = ax * tx + ay * ty;
    let s_acoustic = gamma_m1 / (c * c)
        * (w.energy - w.mass * 0.5 * q2 - alpha_shear * qt - c * qn * d_acoustic);
    let alpha_minus = 0.5 * (s_acoustic - d_acoustic);
    let alpha_plus = 0.5 * (s_acoustic + d_acoustic);
    let alpha_entropy = w.mass - s_acoustic;

    let sgn = |x: f64| {
        if x > 0.0 {
            1.0
        } else if x < 0.0 {
            -1.0
        } else {
            0.0
        }
    };
    let s_minus = sgn(qn - c) * alpha_minus;
    let s_mid = sgn(qn);
    let s_plus = sgn(qn + c) * alpha_plus;

    // sign(A) w assembled from the eigenvector columns.
    let sw_mass = s_minus + s_mid * alpha_entropy + s_plus;
    let sw_momx = s_minus * (u - c * n.x)
        + s_mid * (alpha_entropy * u + alpha_shear * tx)
        + s_plus * (u + c * n.x);
    let sw_momy = s_minus * (v - c * n.y)
        + s_mid * (alpha_entropy * v + alpha_shear * ty)
        + s_plus * (v + c * n.y);
    let sw_energy = s_minus * (h_tot - c * qn)
        + s_mid * (alpha_entropy * 0.5 * q2 + alpha_shear * qt)
        + s_plus * (h_tot + c * qn);

    Ok(DirectedFlux {
        mass: 0.5 * (f_l.mass + f_r.mass) - 0.5 * sw_mass,
        mom_x: 0.5 * (f_l.mom_x + f_r.mom_x) - 0.5 * sw_momx,
        mom_y: 0.5 * (f_l.mom_y + f_r.mom_y) - 0.5 * sw_momy,
        energy: 0.5 * (f_l.energy + f_r.energy) - 0.5 * sw_energy,
    })
}

/// Numerical flux along the sweep direction in the lane frame.
pub fn lane_flux(
    left: &ConservedState,
    right: &ConservedState,
    model: &MaterialModel,
) -> Result<DirectedFlux> {
    numerical_flux(left, right, model, Vec2::new(1.0, 0.0))
}

/// Ghost state seen at a lane end.
pub fn ghost_state(bc: BoundaryKind, edge: &ConservedState, wrap: &ConservedState) -> ConservedState {
    match bc {
        BoundaryKind::Transmissive => *edge,
        BoundaryKind::Reflective => mirror_state(edge),
        BoundaryKind::Periodic => *wrap,
    }
}

/// One finite-volume update of a single-material row of pure cells (lane
/// frame): `V_i <- V_i - dt/delta (phi_{i+1/2} - phi_{i-1/2})`, fluxes from
/// the `t^n` states.
pub fn sweep_update(
    row: &[ConservedState],
    model: &MaterialModel,
    bc: (BoundaryKind, BoundaryKind),
    dt: f64,
    delta: f64,
) -> Result<Vec<ConservedState>> {
    let n = row.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut fluxes = Vec::with_capacity(n + 1);
    let ghost_l = ghost_state(bc.0, &row[0], &row[n - 1]);
    let ghost_r = ghost_state(bc.1, &row[n - 1], &row[0]);
    fluxes.push(lane_flux(&ghost_l, &row[0], model)?);
    for i in 0..n - 1 {
        fluxes.push(lane_flux(&row[i], &row[i + 1], model)?);
    }
    fluxes.push(lane_flux(&row[n - 1], &ghost_r, model)?);

    let scale = dt / delta;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let net = fluxes[i + 1] - fluxes[i];
        let updated = row[i] - net.as_state() * scale;
        if !(updated.rho > 0.0) || !updated.is_finite() {
            return Err(SolverError::StepRejected(format!(
                "negative or non-finite density {} emerged at lane cell {i}",
                updated.rho
            )));
        }
        model.primitive(&updated).map_err(|e| {
            SolverError::StepRejected(format!("cell {i} inadmissible after update: {e}"))
        })?;
        out.push(updated);
    }
    Ok(out)
}

/// CFL time step: `cfl * min(dx, dy) / max(|u| + |v| + c)` over all cells
/// and materials. Partial volumes use their own states but the full cell
/// size, so small partial volumes never shrink the time step.
pub fn compute_dt(
    grid: &Grid,
    contents: &[CellContent],
    models: &[MaterialModel],
    cfl: f64,
) -> Result<f64> {
    if !(cfl > 0.0 && cfl < 1.0) {
        return Err(SolverError::Config(format!("cfl must lie in (0, 1), got {cfl}")));
    }
    if contents.is_empty() {
        return Err(SolverError::Config("empty grid".into()));
    }
    let mut max_speed = 0.0f64;
    for (idx, content) in contents.iter().enumerate() {
        let mut speed_of = |state: &ConservedState, mat: usize| -> Result<()> {
            let prim = models[mat].primitive(state).map_err(|e| {
                e.in_context(&format!("cell {} ({}, {})", idx, idx % grid.nx, idx / grid.nx))
            })?;
            let c = models[mat].sound_speed(prim.rho, prim.p)?;
            max_speed = max_speed.max(prim.u.abs() + prim.v.abs() + c);
            Ok(())
        };
        match content {
            CellContent::Pure { material, state } => speed_of(state, *material)?,
            CellContent::Mixed { parts, .. } => {
                for (mat, part) in parts.iter().enumerate() {
                    speed_of(&part.state, mat)?;
                }
            }
        }
    }
    Ok(cfl * grid.dx.min(grid.dy) / max_speed)
}
