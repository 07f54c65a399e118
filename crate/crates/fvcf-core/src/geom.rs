//! Interface geometry kernels: Youngs normals, PLIC line placement,
//! half-plane clipping and cut volumes.

use crate::error::{Result, SolverError};

/// Gradient magnitudes below this are treated as degenerate (no usable
/// interface normal).
pub const DEGENERATE_GRADIENT: f64 = 1e-12;

/// Bisection tolerance on the PLIC line offset.
const PLIC_D_TOL: f64 = 1e-13;
const PLIC_MAX_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Vec2 {
        Vec2 { x, y }
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }

    pub fn swap_axes(self) -> Vec2 {
        Vec2::new(self.y, self.x)
    }

    pub fn is_unit(self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }
}

/// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Rect {
        Rect { x0, y0, x1, y1 }
    }

    pub fn area(&self) -> f64 {
        (self.x1 - self.x0) * (self.y1 - self.y0)
    }

    /// Corners in counterclockwise order.
    pub fn corners(&self) -> [Vec2; 4] {
        [
            Vec2::new(self.x0, self.y0),
            Vec2::new(self.x1, self.y0),
            Vec2::new(self.x1, self.y1),
            Vec2::new(self.x0, self.y1),
        ]
    }
}

/// Oriented interface line `n . x = d`; the reference material occupies
/// `n . x <= d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterfaceLine {
    pub normal: Vec2,
    pub d: f64,
}

/// Signed area of a polygon (positive for counterclockwise vertex order).
pub fn polygon_area(poly: &[Vec2]) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let mut twice = 0.0;
    for k in 0..poly.len() {
        let a = poly[k];
        let b = poly[(k + 1) % poly.len()];
        twice += a.x * b.y - b.x * a.y;
    }
    0.5 * twice
}

/// First moment of a polygon about x: the integral of x over its area
/// (centroid_x times area for counterclockwise order).
pub fn polygon_moment_x(poly: &[Vec2]) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let mut m = 0.0;
    for k in 0..poly.len() {
        let a = poly[k];
        let b = poly[(k + 1) % poly.len()];
        m += (a.x + b.x) * (a.x * b.y - b.x * a.y);
    }
    m / 6.0
}

/// Clip a convex counterclockwise polygon against the half-plane
/// `normal . x <= d` (Sutherland-Hodgman against a single edge). The result
/// is convex, counterclockwise, possibly empty.
pub fn clip_polygon(poly: &[Vec2], normal: Vec2, d: f64) -> Vec<Vec2> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    if poly.is_empty() {
        return out;
    }
    let inside = |p: Vec2| normal.dot(p) <= d;
    let mut prev = *poly.last().unwrap();
    let mut prev_in = inside(prev);
    for &cur in poly {
        let cur_in = inside(cur);
        if cur_in != prev_in {
            // Edge crosses the line: n.(prev + t (cur - prev)) = d.
            let denom = normal.dot(cur) - normal.dot(prev);
            let t = (d - normal.dot(prev)) / denom;
            out.push(Vec2::new(
                prev.x + t * (cur.x - prev.x),
                prev.y + t * (cur.y - prev.y),
            ));
        }
        if cur_in {
            out.push(cur);
        }
        prev = cur;
        prev_in = cur_in;
    }
    out
}

/// Area of `{x in rect : normal . x <= d}`.
pub fn volume_from_line(normal: Vec2, d: f64, rect: &Rect) -> f64 {
    let clipped = clip_polygon(&rect.corners(), normal, d);
    polygon_area(&clipped)
}

/// Find the line of direction `normal` cutting exactly `target_volume` off
/// `rect`, by monotone bisection on the offset `d`.
pub fn line_from_volume(normal: Vec2, target_volume: f64, rect: &Rect) -> Result<InterfaceLine> {
    let area = rect.area();
    if !(target_volume >= -1e-12 * area) || target_volume > area * (1.0 + 1e-12) {
        return Err(SolverError::Geometry(format!(
            "PLIC target volume {target_volume} outside [0, {area}]"
        )));
    }
    let target = target_volume.clamp(0.0, area);
    let offsets = rect.corners().map(|c| normal.dot(c));
    let mut lo = offsets.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut hi = offsets.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if target <= 0.0 {
        return Ok(InterfaceLine { normal, d: lo });
    }
    if target >= area {
        return Ok(InterfaceLine { normal, d: hi });
    }
    let mut d = 0.5 * (lo + hi);
    for _ in 0..PLIC_MAX_ITER {
        let vol = volume_from_line(normal, d, rect);
        if (vol - target).abs() <= 1e-13 * area {
            break;
        }
        if vol < target {
            lo = d;
        } else {
            hi = d;
        }
        let mid = 0.5 * (lo + hi);
        if (hi - lo) <= PLIC_D_TOL * (1.0 + d.abs()) && (mid - d).abs() <= PLIC_D_TOL {
            d = mid;
            break;
        }
        d = mid;
    }
    Ok(InterfaceLine { normal, d })
}

/// Youngs interface normal from a 3x3 volume-fraction stencil.
///
/// `alpha[ix][iy]` holds the fractions with `ix` running west to east and
/// `iy` south to north. Column/row averages are corner weighted (1, 2, 1)
/// and the normal is `-grad(alpha)` normalized; `None` is returned when the
/// gradient is degenerate.
pub fn youngs_normal(alpha: &[[f64; 3]; 3], dx: f64, dy: f64) -> Result<Option<Vec2>> {
    for col in alpha {
        for &a in col {
            if !(-1e-12..=1.0 + 1e-12).contains(&a) {
                return Err(SolverError::Geometry(format!(
                    "volume fraction {a} outside [0, 1]"
                )));
            }
        }
    }
    let weighted = |col: &[f64; 3]| (col[0] + 2.0 * col[1] + col[2]) / 4.0;
    let a_w = weighted(&alpha[0]);
    let a_e = weighted(&alpha[2]);
    let row = |iy: usize| (alpha[0][iy] + 2.0 * alpha[1][iy] + alpha[2][iy]) / 4.0;
    let a_s = row(0);
    let a_n = row(2);
    let gx = (a_e - a_w) / (2.0 * dx);
    let gy = (a_n - a_s) / (2.0 * dy);
    let norm = gx.hypot(gy);
    if norm < DEGENERATE_GRADIENT {
        return Ok(None);
    }
    Ok(Some(Vec2::new(-gx / norm, -gy / norm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn unit_rect() -> Rect {
        Rect::new(0.0, 0.0, 1.0, 1.0)
    }

    #[test]
    fn clip_square_by_midline() {
        let poly = unit_rect().corners();
        let out = clip_polygon(&poly, Vec2::new(1.0, 0.0), 0.5);
        assert_relative_eq!(polygon_area(&out), 0.5, max_relative = 1e-14);
    }

    #[test]
    fn clip_identity_and_empty() {
        let poly = unit_rect().corners();
        let all = clip_polygon(&poly, Vec2::new(1.0, 0.0), 2.0);
        assert_relative_eq!(polygon_area(&all), 1.0, max_relative = 1e-14);
        let none = clip_polygon(&poly, Vec2::new(1.0, 0.0), -1.0);
        assert_eq!(polygon_area(&none), 0.0);
    }

    #[test]
    fn cut_volume_examples() {
        let r = unit_rect();
        assert_relative_eq!(
            volume_from_line(Vec2::new(1.0, 0.0), 0.5, &r),
            0.5,
            max_relative = 1e-14
        );
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        let n = Vec2::new(inv_sqrt2, inv_sqrt2);
        assert_relative_eq!(
            volume_from_line(n, 0.5 * inv_sqrt2, &r),
            0.125,
            max_relative = 1e-12
        );
        assert_eq!(volume_from_line(n, -1.0, &r), 0.0);
        assert_relative_eq!(volume_from_line(n, 3.0, &r), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn line_from_volume_examples() {
        let r = unit_rect();
        let l = line_from_volume(Vec2::new(1.0, 0.0), 0.25, &r).unwrap();
        assert_relative_eq!(l.d, 0.25, epsilon = 1e-12);
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        let l = line_from_volume(Vec2::new(inv_sqrt2, inv_sqrt2), 0.125, &r).unwrap();
        assert_relative_eq!(l.d, 0.5 * inv_sqrt2, epsilon = 1e-11);
        assert!(line_from_volume(Vec2::new(1.0, 0.0), 2.0, &r).is_err());
        assert!(line_from_volume(Vec2::new(1.0, 0.0), -0.5, &r).is_err());
    }

    #[test]
    fn plic_round_trip_random() {
        let mut rng = StdRng::seed_from_u64(0x9e3779b9);
        let rect = Rect::new(-0.3, 0.2, 0.9, 1.7);
        for _ in 0..10_000 {
            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            let n = Vec2::new(theta.cos(), theta.sin());
            let target = rng.gen_range(0.0..=rect.area());
            let line = line_from_volume(n, target, &rect).unwrap();
            let vol = volume_from_line(n, line.d, &rect);
            assert!(
                (vol - target).abs() <= 1e-12 * rect.area(),
                "target {target}, got {vol}, n = {n:?}"
            );
        }
    }

    #[test]
    fn volume_monotone_and_complementary() {
        let mut rng = StdRng::seed_from_u64(42);
        let rect = Rect::new(0.0, 0.0, 2.0, 0.5);
        for _ in 0..200 {
            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            let n = Vec2::new(theta.cos(), theta.sin());
            let mut last = -1.0;
            for k in 0..=40 {
                let d = -2.5 + 5.0 * k as f64 / 40.0;
                let v = volume_from_line(n, d, &rect);
                assert!(v >= last - 1e-13);
                let v_comp = volume_from_line(n.neg(), -d, &rect);
                assert!((v + v_comp - rect.area()).abs() <= 1e-13 * rect.area());
                last = v;
            }
        }
    }

    #[test]
    fn clip_partitions_area() {
        let mut rng = StdRng::seed_from_u64(7);
        let poly = unit_rect().corners();
        for _ in 0..10_000 {
            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            let n = Vec2::new(theta.cos(), theta.sin());
            let d = rng.gen_range(-1.5..1.5);
            let a = polygon_area(&clip_polygon(&poly, n, d));
            let b = polygon_area(&clip_polygon(&poly, n.neg(), -d));
            assert!(a <= 1.0 + 1e-13 && b <= 1.0 + 1e-13);
            assert!((a + b - 1.0).abs() <= 1e-13);
        }
    }

    #[test]
    fn youngs_pure_x_gradient() {
        let alpha = [[0.0; 3], [0.5; 3], [1.0; 3]];
        let n = youngs_normal(&alpha, 0.1, 0.1).unwrap().unwrap();
        assert_relative_eq!(n.x, -1.0, epsilon = 1e-14);
        assert_relative_eq!(n.y, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn youngs_degenerate_and_range_check() {
        let alpha = [[0.5; 3]; 3];
        assert!(youngs_normal(&alpha, 0.1, 0.1).unwrap().is_none());
        let bad = [[0.0; 3], [1.5; 3], [1.0; 3]];
        assert!(youngs_normal(&bad, 0.1, 0.1).is_err());
    }

    /// Exact coverage fraction of the half-plane `x + y <= c` over the unit
    /// cell shifted to `(i, j)`: independent sampler for the diagonal case.
    fn diagonal_alpha(i: f64, j: f64, c: f64) -> f64 {
        let t = c - i - j; // line x' + y' = t in local cell coords
        if t <= 0.0 {
            0.0
        } else if t <= 1.0 {
            0.5 * t * t
        } else if t < 2.0 {
            1.0 - 0.5 * (2.0 - t) * (2.0 - t)
        } else {
            1.0
        }
    }

    #[test]
    fn youngs_diagonal_half_plane() {
        // alpha sampled exactly on a 45-degree half-plane; material lies in
        // x + y <= c so the normal must be (1, 1)/sqrt(2).
        let c = 1.45;
        let mut alpha = [[0.0; 3]; 3];
        for ix in 0..3 {
            for iy in 0..3 {
                alpha[ix][iy] = diagonal_alpha(ix as f64, iy as f64, c + 1.0);
            }
        }
        let n = youngs_normal(&alpha, 1.0, 1.0).unwrap().unwrap();
        let inv_sqrt2 = 1.0 / 2f64.sqrt();
        assert_relative_eq!(n.x, inv_sqrt2, epsilon = 1e-10);
        assert_relative_eq!(n.y, inv_sqrt2, epsilon = 1e-10);
    }
}
