use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Smallest number of stored points a grid may have.
pub const MIN_POINTS: usize = 16;

/// Uniform one-dimensional grid.
///
/// A non-periodic grid stores both endpoints, so `h = (x1 - x0) / (n - 1)`.
/// A periodic grid covers exactly one period `x1 - x0`; the endpoint `x1` is
/// the wrapped image of `x0` and is not stored, so `h = (x1 - x0) / n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub x0: f64,
    pub x1: f64,
    pub n: usize,
    #[serde(default)]
    pub periodic: bool,
}

impl Grid {
    pub fn new(x0: f64, x1: f64, n: usize) -> Result<Self> {
        Self::build(x0, x1, n, false)
    }

    pub fn periodic(x0: f64, x1: f64, n: usize) -> Result<Self> {
        Self::build(x0, x1, n, true)
    }

    fn build(x0: f64, x1: f64, n: usize, periodic: bool) -> Result<Self> {
        if !(x0.is_finite() && x1.is_finite()) || x1 <= x0 {
            return Err(Error::Grid(format!("need finite x0 < x1, got [{x0}, {x1}]")));
        }
        if n < MIN_POINTS {
            return Err(Error::Grid(format!("need at least {MIN_POINTS} points, got {n}")));
        }
        Ok(Self { x0, x1, n, periodic })
    }

    pub fn h(&self) -> f64 {
        if self.periodic {
            (self.x1 - self.x0) / self.n as f64
        } else {
            (self.x1 - self.x0) / (self.n - 1) as f64
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn x(&self, j: usize) -> f64 {
        if !self.periodic && j + 1 == self.n {
            return self.x1;
        }
        self.x0 + j as f64 * self.h()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.x(j)).collect()
    }

    /// Index of the stored point closest to `x` (clamped to the grid).
    pub fn nearest_index(&self, x: f64) -> usize {
        let j = ((x - self.x0) / self.h()).round();
        if j <= 0.0 {
            0
        } else {
            (j as usize).min(self.n - 1)
        }
    }

    pub fn sample<T, F: Fn(f64) -> T>(&self, f: F) -> Vec<T> {
        (0..self.n).map(|j| f(self.x(j))).collect()
    }

    pub fn try_sample<T, F: Fn(f64) -> Result<T>>(&self, f: F) -> Result<Vec<T>> {
        (0..self.n).map(|j| f(self.x(j))).collect()
    }

    /// Same interval with `n` replaced.
    pub fn with_points(&self, n: usize) -> Result<Self> {
        Self::build(self.x0, self.x1, n, self.periodic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_conventions() {
        let g = Grid::new(0.0, 1.0, 101).unwrap();
        assert!((g.h() - 0.01).abs() < 1e-15);
        assert_eq!(g.x(100), 1.0);

        let p = Grid::periodic(0.0, std::f64::consts::PI, 64).unwrap();
        assert!((p.h() - std::f64::consts::PI / 64.0).abs() < 1e-15);
        assert!(p.x(63) < std::f64::consts::PI);
    }

    #[test]
    fn rejects_small_or_inverted() {
        assert!(Grid::new(0.0, 1.0, 15).is_err());
        assert!(Grid::new(1.0, 0.0, 100).is_err());
        assert!(Grid::new(0.0, f64::INFINITY, 100).is_err());
    }

    #[test]
    fn nearest_index_clamps() {
        let g = Grid::new(-1.0, 1.0, 21).unwrap();
        assert_eq!(g.nearest_index(0.0), 10);
        assert_eq!(g.nearest_index(-5.0), 0);
        assert_eq!(g.nearest_index(5.0), 20);
    }
}
