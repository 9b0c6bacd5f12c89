//! Chebyshev collocation for `-psi'' + V(x) psi = lambda psi` on a finite
//! interval, used as a dense-matrix spectral oracle.

use serde::{Deserialize, Serialize};

use crate::numerics::eigen::{dense_complex_eigenvalues, CMatrix};
use crate::{Error, Result, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndCondition {
    Dirichlet,
    Neumann,
}

/// Gauss–Lobatto points `cos(πj/n)` on `[-1, 1]` (descending) and the
/// matching first-derivative matrix, row-major `(n+1) x (n+1)`.
pub fn chebyshev_diff_matrix(n: usize) -> (Vec<f64>, Vec<f64>) {
    let m = n + 1;
    let t: Vec<f64> = (0..m).map(|j| (std::f64::consts::PI * j as f64 / n as f64).cos()).collect();
    let weight = |j: usize| {
        let c = if j == 0 || j == n { 2.0 } else { 1.0 };
        if j % 2 == 0 {
            c
        } else {
            -c
        }
    };
    let mut d = vec![0.0; m * m];
    for i in 0..m {
        let mut row_sum = 0.0;
        for j in 0..m {
            if i != j {
                let v = weight(i) / weight(j) / (t[i] - t[j]);
                d[i * m + j] = v;
                row_sum += v;
            }
        }
        d[i * m + i] = -row_sum;
    }
    (t, d)
}

/// Collocation eigenvalues of `-d²/dx² + V` on `[a, b]` with `n + 1` Chebyshev
/// points. The potential is only sampled at the `n - 1` interior points, so it
/// may be singular at either end. Boundary values are eliminated through the
/// end conditions before the dense solve.
pub fn schrodinger_spectrum<F>(
    potential: F,
    a: f64,
    b: f64,
    n: usize,
    left: EndCondition,
    right: EndCondition,
) -> Result<Vec<C64>>
where
    F: Fn(f64) -> Result<C64>,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter(format!("bad interval [{a}, {b}]")));
    }
    if n < 8 {
        return Err(Error::InvalidParameter(format!("need at least 8 Chebyshev intervals, got {n}")));
    }
    let m = n + 1;
    let (t, d_ref) = chebyshev_diff_matrix(n);
    let scale = 2.0 / (b - a);
    let d: Vec<f64> = d_ref.iter().map(|v| v * scale).collect();
    let mut d2 = vec![0.0; m * m];
    for i in 0..m {
        for k in 0..m {
            let dik = d[i * m + k];
            if dik == 0.0 {
                continue;
            }
            for j in 0..m {
                d2[i * m + j] += dik * d[k * m + j];
            }
        }
    }
    let x: Vec<f64> = t.iter().map(|ti| a + 0.5 * (b - a) * (ti + 1.0)).collect();

    // index 0 is x = b (right end), index n is x = a (left end)
    let constraint = |cond: EndCondition, idx: usize| -> Vec<f64> {
        match cond {
            EndCondition::Dirichlet => (0..m).map(|j| if j == idx { 1.0 } else { 0.0 }).collect(),
            EndCondition::Neumann => d[idx * m..(idx + 1) * m].to_vec(),
        }
    };
    let c_right = constraint(right, 0);
    let c_left = constraint(left, n);
    // [c_r0 c_rn; c_l0 c_ln] u_b = -(interior part)
    let (a00, a01, a10, a11) = (c_right[0], c_right[n], c_left[0], c_left[n]);
    let det = a00 * a11 - a01 * a10;
    if det.abs() < 1e-300 {
        return Err(Error::InvalidParameter("singular boundary constraint".into()));
    }
    let inner = n - 1;
    // u_b = P u_i with P = -[c_b]^{-1} [c_i]
    let mut p = vec![[0.0; 2]; inner];
    for (k, pk) in p.iter_mut().enumerate() {
        let j = k + 1;
        let (r, l) = (c_right[j], c_left[j]);
        let u0 = -(a11 * r - a01 * l) / det;
        let un = -(-a10 * r + a00 * l) / det;
        *pk = [u0, un];
    }

    let mut h = CMatrix::zeros(inner);
    for row in 0..inner {
        let i = row + 1;
        let v = potential(x[i])?;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Pole { x: x[i] });
        }
        let hb0 = -d2[i * m];
        let hbn = -d2[i * m + n];
        for col in 0..inner {
            let j = col + 1;
            let val = -d2[i * m + j] + hb0 * p[col][0] + hbn * p[col][1];
            h[(row, col)] = C64::new(val, 0.0);
        }
        h[(row, row)] += v;
    }
    dense_complex_eigenvalues(&h)
}
