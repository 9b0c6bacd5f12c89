//! Fourth-order finite differences on uniform grids.

use crate::{Grid, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derivative {
    First,
    Second,
}

impl Derivative {
    pub fn order(self) -> usize {
        match self {
            Derivative::First => 1,
            Derivative::Second => 2,
        }
    }
}

// One-sided fourth-order weights for the first two points of a non-periodic grid.
const D1_EDGE: [[f64; 6]; 2] = [
    [-25.0, 48.0, -36.0, 16.0, -3.0, 0.0],
    [-3.0, -10.0, 18.0, -6.0, 1.0, 0.0],
];
const D2_EDGE: [[f64; 6]; 2] = [
    [45.0, -154.0, 214.0, -156.0, 61.0, -10.0],
    [10.0, -15.0, -4.0, 14.0, -6.0, 1.0],
];
const D1_CENTRAL: [f64; 5] = [1.0, -8.0, 0.0, 8.0, -1.0];
const D2_CENTRAL: [f64; 5] = [-1.0, 16.0, -30.0, 16.0, -1.0];
// Sixth-order wraparound stencils for periodic grids.
const D1_PERIODIC: [f64; 7] = [-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0];
const D2_PERIODIC: [f64; 7] = [2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0];

/// Derivative of sampled data: central stencils in the interior, one-sided
/// stencils at the two outermost points on each side. Non-periodic stencils
/// are fourth order; periodic grids use sixth-order wraparound stencils.
pub fn differentiate(f: &[C64], grid: &Grid, which: Derivative) -> Vec<C64> {
    let n = f.len();
    debug_assert_eq!(n, grid.len());
    let h = grid.h();
    let (central, edge, scale) = match which {
        Derivative::First => (&D1_CENTRAL, &D1_EDGE, 1.0 / (12.0 * h)),
        Derivative::Second => (&D2_CENTRAL, &D2_EDGE, 1.0 / (12.0 * h * h)),
    };
    let mut out = vec![C64::new(0.0, 0.0); n];

    if grid.periodic {
        let (wrap, wscale) = match which {
            Derivative::First => (&D1_PERIODIC, 1.0 / (60.0 * h)),
            Derivative::Second => (&D2_PERIODIC, 1.0 / (180.0 * h * h)),
        };
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for (k, w) in wrap.iter().enumerate() {
                let j = (i + n + k - 3) % n;
                acc += f[j] * *w;
            }
            *o = acc * wscale;
        }
        return out;
    }

    for i in 2..n - 2 {
        let mut acc = C64::new(0.0, 0.0);
        for (k, w) in central.iter().enumerate() {
            acc += f[i + k - 2] * *w;
        }
        out[i] = acc * scale;
    }
    // Mirrored stencils pick up a sign for odd derivatives.
    let mirror = match which {
        Derivative::First => -1.0,
        Derivative::Second => 1.0,
    };
    for (i, weights) in edge.iter().enumerate() {
        let mut lo = C64::new(0.0, 0.0);
        let mut hi = C64::new(0.0, 0.0);
        for (k, w) in weights.iter().enumerate() {
            lo += f[k] * *w;
            hi += f[n - 1 - k] * *w;
        }
        out[i] = lo * scale;
        out[n - 1 - i] = hi * (scale * mirror);
    }
    out
}
