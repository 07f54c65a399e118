//! Cell contents: pure cells, mixed cells with partial volumes, and global
//! conservation accounting.

use crate::error::{Result, SolverError};
use crate::geom::Vec2;
use crate::mesh::Grid;
use crate::state::ConservedState;

/// Which side of a cell (along the sweep direction) a partial volume is
/// anchored to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// One material's share of a mixed cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialPart {
    /// Partial volume (area, unit depth).
    pub volume: f64,
    /// Conserved state of the material inside its partial volume.
    pub state: ConservedState,
}

/// Contents of one Eulerian cell. `Mixed.parts[k]` belongs to material `k`;
/// the interface normal points out of material 0 (toward material 1).
#[derive(Debug, Clone, PartialEq)]
pub enum CellContent {
    Pure {
        material: usize,
        state: ConservedState,
    },
    Mixed {
        parts: [MaterialPart; 2],
        normal: Vec2,
        /// Side material 0 was placed on at the last condensate
        /// representation; tie-break memory for near-transverse normals.
        mat0_side: Option<Side>,
    },
}

impl CellContent {
    pub fn pure(material: usize, state: ConservedState) -> CellContent {
        CellContent::Pure { material, state }
    }

    pub fn is_mixed(&self) -> bool {
        matches!(self, CellContent::Mixed { .. })
    }

    /// Material index of a pure cell.
    pub fn pure_material(&self) -> Option<usize> {
        match self {
            CellContent::Pure { material, .. } => Some(*material),
            CellContent::Mixed { .. } => None,
        }
    }

    /// Volume fraction of material 0.
    pub fn alpha0(&self, cell_volume: f64) -> f64 {
        match self {
            CellContent::Pure { material, .. } => {
                if *material == 0 {
                    1.0
                } else {
                    0.0
                }
            }
            CellContent::Mixed { parts, .. } => parts[0].volume / cell_volume,
        }
    }

    /// Volume of material `k` in this cell.
    pub fn volume_of(&self, k: usize, cell_volume: f64) -> f64 {
        match self {
            CellContent::Pure { material, .. } => {
                if *material == k {
                    cell_volume
                } else {
                    0.0
                }
            }
            CellContent::Mixed { parts, .. } => parts[k].volume,
        }
    }

    /// Volume-averaged conserved state of the whole cell.
    pub fn mean_state(&self, cell_volume: f64) -> ConservedState {
        match self {
            CellContent::Pure { state, .. } => *state,
            CellContent::Mixed { parts, .. } => {
                (parts[0].state * parts[0].volume + parts[1].state * parts[1].volume)
                    * (1.0 / cell_volume)
            }
        }
    }

    /// Swap x and y roles (states and normal) when mapping between the grid
    /// frame and the sweep-local lane frame.
    pub fn swap_axes(&self) -> CellContent {
        match self {
            CellContent::Pure { material, state } => CellContent::Pure {
                material: *material,
                state: state.swap_axes(),
            },
            CellContent::Mixed {
                parts,
                normal,
                mat0_side,
            } => CellContent::Mixed {
                parts: [
                    MaterialPart {
                        volume: parts[0].volume,
                        state: parts[0].state.swap_axes(),
                    },
                    MaterialPart {
                        volume: parts[1].volume,
                        state: parts[1].state.swap_axes(),
                    },
                ],
                normal: normal.swap_axes(),
                mat0_side: *mat0_side,
            },
        }
    }

    /// Check the mixed-cell invariants against a cell volume.
    pub fn validate(&self, cell_volume: f64) -> Result<()> {
        if let CellContent::Mixed { parts, normal, .. } = self {
            for (k, part) in parts.iter().enumerate() {
                if !(part.volume > 0.0) {
                    return Err(SolverError::Geometry(format!(
                        "mixed cell has non-positive partial volume {} for material {k}",
                        part.volume
                    )));
                }
            }
            let sum = parts[0].volume + parts[1].volume;
            if (sum - cell_volume).abs() > 1e-12 * cell_volume {
                return Err(SolverError::ConservationFailure(format!(
                    "partial volumes sum to {sum}, cell volume is {cell_volume}"
                )));
            }
            if !normal.is_unit(1e-12) {
                return Err(SolverError::Geometry(format!(
                    "interface normal {normal:?} is not unit length"
                )));
            }
        }
        Ok(())
    }
}

/// Extensive totals (state integrated over volume), per material and global.
#[derive(Debug, Clone, PartialEq)]
pub struct Totals {
    pub per_material: Vec<ConservedState>,
    pub global: ConservedState,
}

/// Sum `Vol * state` over pure cells and `Vol_k * state_k` over partial
/// volumes.
pub fn total_conserved(grid: &Grid, contents: &[CellContent], n_materials: usize) -> Totals {
    let vol = grid.cell_volume();
    let mut per_material = vec![ConservedState::ZERO; n_materials];
    for content in contents {
        match content {
            CellContent::Pure { material, state } => {
                per_material[*material] = per_material[*material] + *state * vol;
            }
            CellContent::Mixed { parts, .. } => {
                for (k, part) in parts.iter().enumerate() {
                    per_material[k] = per_material[k] + part.state * part.volume;
                }
            }
        }
    }
    let global = per_material
        .iter()
        .fold(ConservedState::ZERO, |acc, s| acc + *s);
    Totals {
        per_material,
        global,
    }
}

/// Volume fraction of material 0 for every cell.
pub fn alpha0_field(grid: &Grid, contents: &[CellContent]) -> Vec<f64> {
    let vol = grid.cell_volume();
    contents.iter().map(|c| c.alpha0(vol)).collect()
}
