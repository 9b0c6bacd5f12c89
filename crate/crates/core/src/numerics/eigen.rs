//! Dense complex eigenvalues: balancing, Householder reduction to upper
//! Hessenberg form, then single-shift implicit QR with Wilkinson shifts.

use std::ops::{Index, IndexMut};

use crate::{Error, Result, C64};

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![C64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> C64>(n: usize, mut f: F) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length as the row count.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: row.len() });
            }
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

/// Largest matrix handled at desk scale.
pub const MAX_DIM: usize = 512;

fn cabs1(z: C64) -> f64 {
    z.re.abs() + z.im.abs()
}

/// All eigenvalues of a dense complex matrix, in the order they deflate.
pub fn dense_complex_eigenvalues(a: &CMatrix) -> Result<Vec<C64>> {
    let n = a.dim();
    if n > MAX_DIM {
        return Err(Error::InvalidParameter(format!("matrix dimension {n} exceeds {MAX_DIM}")));
    }
    if a.data.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::InvalidParameter("matrix has non-finite entries".into()));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut h = a.clone();
    balance(&mut h);
    hessenberg(&mut h);
    hessenberg_qr(&mut h)
}

/// Diagonal similarity by powers of two so that row and column norms are comparable.
fn balance(a: &mut CMatrix) {
    const RADIX: f64 = 2.0;
    let n = a.dim();
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += cabs1(a[(j, i)]);
                    r += cabs1(a[(i, j)]);
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= sqrdx;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let g = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] *= g;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

/// In-place Householder reduction to upper Hessenberg form.
fn hessenberg(a: &mut CMatrix) {
    let n = a.dim();
    if n < 3 {
        return;
    }
    let mut v = vec![C64::new(0.0, 0.0); n];
    for k in 0..n - 2 {
        let alpha_norm: f64 = (k + 1..n).map(|i| a[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if alpha_norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0.norm() == 0.0 { C64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * alpha_norm;
        for i in k + 1..n {
            v[i] = a[(i, k)];
        }
        v[k + 1] -= alpha;
        let vnorm: f64 = (k + 1..n).map(|i| v[i].norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for item in v.iter_mut().take(n).skip(k + 1) {
            *item /= vnorm;
        }
        // A <- (I - 2 v v*) A
        for j in k..n {
            let dot: C64 = (k + 1..n).map(|i| v[i].conj() * a[(i, j)]).sum();
            let dot2 = dot * 2.0;
            for i in k + 1..n {
                let vi = v[i];
                a[(i, j)] -= vi * dot2;
            }
        }
        // A <- A (I - 2 v v*)
        for i in 0..n {
            let dot: C64 = (k + 1..n).map(|j| a[(i, j)] * v[j]).sum();
            let dot2 = dot * 2.0;
            for j in k + 1..n {
                let vj = v[j].conj();
                a[(i, j)] -= dot2 * vj;
            }
        }
        a[(k + 1, k)] = alpha;
        for i in k + 2..n {
            a[(i, k)] = C64::new(0.0, 0.0);
        }
    }
}

/// Rotation `[[c, s], [-conj(s), c]]` with real `c` that maps `(x, y)` to `(r, 0)`.
fn givens(x: C64, y: C64) -> (f64, C64) {
    if y == C64::new(0.0, 0.0) {
        return (1.0, C64::new(0.0, 0.0));
    }
    let ax = x.norm();
    let norm = ax.hypot(y.norm());
    if ax == 0.0 {
        return (0.0, y.conj() / y.norm());
    }
    let c = ax / norm;
    let s = (x / ax) * y.conj() / norm;
    (c, s)
}

fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let p = (a - d) * 0.5;
    let bc = b * c;
    let disc = (p * p + bc).sqrt();
    let den_plus = p + disc;
    let den_minus = p - disc;
    let den = if den_plus.norm() >= den_minus.norm() { den_plus } else { den_minus };
    if den.norm() == 0.0 {
        d
    } else {
        d - bc / den
    }
}

fn hessenberg_qr(h: &mut CMatrix) -> Result<Vec<C64>> {
    let n = h.dim();
    let ulp = f64::EPSILON;
    let safmin = f64::MIN_POSITIVE;
    let itmax = 30 * n.max(10);
    let mut eig = vec![C64::new(0.0, 0.0); n];
    let mut hi = n - 1;
    let mut its = 0usize;

    loop {
        // locate the start of the active unreduced block
        let mut l = hi;
        while l > 0 {
            let sub = cabs1(h[(l, l - 1)]);
            let mut tst = cabs1(h[(l - 1, l - 1)]) + cabs1(h[(l, l)]);
            if tst == 0.0 {
                if l >= 2 {
                    tst += h[(l - 1, l - 2)].re.abs();
                }
                if l < hi {
                    tst += h[(l + 1, l)].re.abs();
                }
            }
            if sub <= (ulp * tst).max(safmin) {
                h[(l, l - 1)] = C64::new(0.0, 0.0);
                break;
            }
            l -= 1;
        }

        if l == hi {
            eig[hi] = h[(hi, hi)];
            its = 0;
            if hi == 0 {
                break;
            }
            hi -= 1;
            continue;
        }

        its += 1;
        if its > itmax {
            return Err(Error::NoConvergence { lo: l, hi, iterations: its - 1 });
        }

        let shift = if its % 10 == 0 {
            // exceptional shift to break cycles
            h[(hi, hi)] + C64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };

        // implicit single-shift QR sweep on rows/cols l..=hi
        for k in l..hi {
            let (x, y) = if k == l {
                (h[(l, l)] - shift, h[(l + 1, l)])
            } else {
                (h[(k, k - 1)], h[(k + 1, k - 1)])
            };
            let (c, s) = givens(x, y);
            let col_start = if k == l { l } else { k - 1 };
            for j in col_start..=hi {
                let a = h[(k, j)];
                let b = h[(k + 1, j)];
                h[(k, j)] = a * c + s * b;
                h[(k + 1, j)] = -s.conj() * a + b * c;
            }
            let row_end = (k + 2).min(hi);
            for i in l..=row_end {
                let a = h[(i, k)];
                let b = h[(i, k + 1)];
                h[(i, k)] = a * c + b * s.conj();
                h[(i, k + 1)] = -a * s + b * c;
            }
            if k > l {
                h[(k + 1, k - 1)] = C64::new(0.0, 0.0);
            }
        }
    }
    Ok(eig)
}

/// Smallest residual `‖A v − λ v‖₂` over unit vectors `v`, estimated by
/// inverse iteration on `A − λ I`. Returns the residual and the vector.
pub fn eigenpair_residual(a: &CMatrix, lambda: C64) -> (f64, Vec<C64>) {
    let n = a.dim();
    let scale = a.frobenius_norm().max(1.0);
    let mut m = a.clone();
    for i in 0..n {
        m[(i, i)] -= lambda;
    }
    let lu = LuFactor::new(m.clone(), f64::EPSILON * scale);
    let mut v: Vec<C64> = (0..n).map(|i| C64::new(1.0, 0.37 * i as f64 / n as f64)).collect();
    normalize(&mut v);
    for _ in 0..4 {
        v = lu.solve(&v);
        normalize(&mut v);
    }
    let r = m.mul_vec(&v);
    (r.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt(), v)
}

fn normalize(v: &mut [C64]) {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 && norm.is_finite() {
        for z in v.iter_mut() {
            *z /= norm;
        }
    }
}

/// LU with partial pivoting; pivots smaller than `floor` are replaced by `floor`.
struct LuFactor {
    lu: CMatrix,
    perm: Vec<usize>,
}

impl LuFactor {
    fn new(mut a: CMatrix, floor: f64) -> Self {
        let n = a.dim();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let p = (k..n).max_by(|&i, &j| a[(i, k)].norm().total_cmp(&a[(j, k)].norm())).unwrap_or(k);
            if p != k {
                for j in 0..n {
                    let t = a[(k, j)];
                    a[(k, j)] = a[(p, j)];
                    a[(p, j)] = t;
                }
                perm.swap(k, p);
            }
            if a[(k, k)].norm() < floor {
                a[(k, k)] = C64::new(floor, 0.0);
            }
            let piv = a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / piv;
                a[(i, k)] = f;
                if f != C64::new(0.0, 0.0) {
                    for j in k + 1..n {
                        let akj = a[(k, j)];
                        a[(i, j)] -= f * akj;
                    }
                }
            }
        }
        Self { lu: a, perm }
    }

    fn solve(&self, b: &[C64]) -> Vec<C64> {
        let n = self.lu.dim();
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = self.lu[(i, j)];
                let xj = x[j];
                x[i] -= l * xj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = self.lu[(i, j)];
                let xj = x[j];
                x[i] -= u * xj;
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sorted(mut v: Vec<C64>) -> Vec<C64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn diagonal_matrix() {
        let d = [c(3.0, 1.0), c(-2.0, 0.0), c(0.5, -4.0)];
        let a = CMatrix::from_fn(3, |i, j| if i == j { d[i] } else { c(0.0, 0.0) });
        let ev = sorted(dense_complex_eigenvalues(&a).unwrap());
        let want = sorted(d.to_vec());
        for (x, y) in ev.iter().zip(&want) {
            assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn rotation_generator() {
        let a = CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(-1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        let ev = sorted(dense_complex_eigenvalues(&a).unwrap());
        assert!((ev[0] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((ev[1] - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn jordan_block_and_trivial_sizes() {
        assert!(dense_complex_eigenvalues(&CMatrix::zeros(0)).unwrap().is_empty());
        let one = CMatrix::from_fn(1, |_, _| c(2.0, -1.0));
        assert_eq!(dense_complex_eigenvalues(&one).unwrap(), vec![c(2.0, -1.0)]);
        let j = CMatrix::from_fn(4, |i, k| if k == i || k == i + 1 { c(1.0, 0.0) } else { c(0.0, 0.0) });
        for e in dense_complex_eigenvalues(&j).unwrap() {
            assert!((e - c(1.0, 0.0)).norm() < 1e-3);
        }
    }

    #[test]
    fn companion_matrix_roots() {
        // roots 1, 2, 3, 4 of x^4 - 10x^3 + 35x^2 - 50x + 24
        let coeffs = [24.0, -50.0, 35.0, -10.0];
        let a = CMatrix::from_fn(4, |i, j| {
            if j == 3 {
                c(-coeffs[i], 0.0)
            } else if i == j + 1 {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let ev = sorted(dense_complex_eigenvalues(&a).unwrap());
        for (k, e) in ev.iter().enumerate() {
            assert!((e - c((k + 1) as f64, 0.0)).norm() < 1e-10, "{e}");
        }
    }

    #[test]
    fn residual_of_exact_eigenpair_is_tiny() {
        let a = CMatrix::from_rows(&[vec![c(2.0, 0.0), c(1.0, 1.0)], vec![c(0.0, 0.0), c(-1.0, 0.5)]]).unwrap();
        let (r, v) = eigenpair_residual(&a, c(2.0, 0.0));
        assert!(r < 1e-13);
        assert!((v.iter().map(|z| z.norm_sqr()).sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn oversized_matrix_is_rejected() {
        assert!(dense_complex_eigenvalues(&CMatrix::zeros(MAX_DIM + 1)).is_err());
    }
}
