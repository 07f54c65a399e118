//! Uniform Cartesian grid.

use crate::error::{Result, SolverError};
use crate::geom::Rect;

/// Sweep direction of the directional splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Uniform Cartesian grid of `nx` by `ny` cells. Cell `(i, j)` occupies
/// `[origin.0 + i*dx, origin.0 + (i+1)*dx] x [origin.1 + j*dy, origin.1 + (j+1)*dy]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub nx: usize,
    pub ny: usize,
    pub dx: f64,
    pub dy: f64,
    pub origin: (f64, f64),
}

impl Grid {
    pub fn new(nx: usize, ny: usize, dx: f64, dy: f64, origin: (f64, f64)) -> Result<Grid> {
        if nx == 0 || ny == 0 {
            return Err(SolverError::Config(format!(
                "grid must have at least one cell per direction, got {nx}x{ny}"
            )));
        }
        if !(dx > 0.0) || !(dy > 0.0) {
            return Err(SolverError::Config(format!(
                "cell sizes must be positive, got dx={dx}, dy={dy}"
            )));
        }
        Ok(Grid {
            nx,
            ny,
            dx,
            dy,
            origin,
        })
    }

    /// Grid covering `[x0, x1] x [y0, y1]` with `nx` by `ny` cells.
    pub fn from_extent(nx: usize, ny: usize, x: (f64, f64), y: (f64, f64)) -> Result<Grid> {
        let dx = (x.1 - x.0) / nx as f64;
        let dy = (y.1 - y.0) / ny as f64;
        Grid::new(nx, ny, dx, dy, (x.0, y.0))
    }

    pub fn n_cells(&self) -> usize {
        self.nx * self.ny
    }

    /// Planar cell volume (area, unit depth).
    pub fn cell_volume(&self) -> f64 {
        self.dx * self.dy
    }

    /// Row-major linear index of cell `(i, j)`.
    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny);
        j * self.nx + i
    }

    pub fn cell_center(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.origin.0 + (i as f64 + 0.5) * self.dx,
            self.origin.1 + (j as f64 + 0.5) * self.dy,
        )
    }

    pub fn cell_rect(&self, i: usize, j: usize) -> Rect {
        let x0 = self.origin.0 + i as f64 * self.dx;
        let y0 = self.origin.1 + j as f64 * self.dy;
        Rect {
            x0,
            y0,
            x1: x0 + self.dx,
            y1: y0 + self.dy,
        }
    }

    /// Number of lanes transverse to `axis` (rows for an x sweep).
    pub fn n_lanes(&self, axis: Axis) -> usize {
        match axis {
            Axis::X => self.ny,
            Axis::Y => self.nx,
        }
    }

    /// Number of cells along a lane in direction `axis`.
    pub fn lane_len(&self, axis: Axis) -> usize {
        match axis {
            Axis::X => self.nx,
            Axis::Y => self.ny,
        }
    }

    /// Cell size along the sweep direction.
    pub fn step_along(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.dx,
            Axis::Y => self.dy,
        }
    }

    /// Cell size transverse to the sweep direction (the face area per unit depth).
    pub fn step_transverse(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.dy,
            Axis::Y => self.dx,
        }
    }

    /// Coordinate of the low edge of the first cell along `axis`.
    pub fn lane_start(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.origin.0,
            Axis::Y => self.origin.1,
        }
    }

    /// Transverse midpoint coordinate of lane `lane` (the row/column center).
    pub fn lane_mid(&self, axis: Axis, lane: usize) -> f64 {
        match axis {
            Axis::X => self.origin.1 + (lane as f64 + 0.5) * self.dy,
            Axis::Y => self.origin.0 + (lane as f64 + 0.5) * self.dx,
        }
    }

    /// Linear index of the `k`-th cell of lane `lane` along `axis`.
    #[inline]
    pub fn lane_idx(&self, axis: Axis, lane: usize, k: usize) -> usize {
        match axis {
            Axis::X => self.idx(k, lane),
            Axis::Y => self.idx(lane, k),
        }
    }
}
