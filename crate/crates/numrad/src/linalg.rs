//! Dense complex-matrix arithmetic, a cyclic Jacobi eigensolver for Hermitian
//! matrices, the operator norm and a Gelfand-sequence spectral radius estimate.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Shared numerical knobs for every estimator in the crate.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Number of uniform angle samples over a full period.
    pub theta_grid: usize,
    /// Relative off-diagonal convergence threshold for the Jacobi sweeps.
    pub eig_tol: f64,
    /// Target bracket width (radians) for golden-section refinement.
    pub refine_tol: f64,
    /// Iteration cap for iterative estimators (Jacobi sweeps, root iteration).
    pub max_iter: usize,
    /// Relative stopping tolerance for the Gelfand squaring sequence.
    pub gelfand_rel_tol: f64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            theta_grid: 3600,
            eig_tol: 1e-12,
            refine_tol: 1e-10,
            max_iter: 10_000,
            gelfand_rel_tol: 1e-6,
        }
    }
}

impl EngineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.theta_grid < 8 {
            return Err(Error::BadConfig(format!(
                "theta_grid = {} is below the minimum of 8",
                self.theta_grid
            )));
        }
        for (name, v) in [
            ("eig_tol", self.eig_tol),
            ("refine_tol", self.refine_tol),
            ("gelfand_rel_tol", self.gelfand_rel_tol),
        ] {
            if !(v > 0.0) {
                return Err(Error::BadConfig(format!("{name} = {v} must be positive")));
            }
        }
        if self.max_iter == 0 {
            return Err(Error::BadConfig("max_iter must be positive".into()));
        }
        Ok(())
    }
}

/// Dense row-major n×m complex matrix. All entries are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                got: entries.len(),
            });
        }
        let m = ComplexMatrix {
            rows,
            cols,
            data: entries,
        };
        m.check_finite()?;
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build from nested rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::EntryCount {
                    rows: r,
                    cols: c,
                    expected: r * c,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(r, c, data)
    }

    /// Real matrix shortcut, mostly for tests.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let lifted: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&lifted)
    }

    fn check_finite(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let z = self.data[i * self.cols + j];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &ComplexMatrix,
        op: &'static str,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<ComplexMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                op,
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "mul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: other.rows,
                rhs_cols: other.cols,
            });
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row_b = &other.data[k * other.cols..(k + 1) * other.cols];
                let row_o = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for j in 0..other.cols {
                    row_o[j] += a * row_b[j];
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| c * z).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        let n = self.rows.min(self.cols);
        (0..n).map(|i| self.get(i, i)).sum()
    }

    /// Frobenius distance to the adjoint, relative to the matrix norm.
    pub fn hermitian_deviation(&self) -> f64 {
        let norm = self.frobenius_norm();
        if norm == 0.0 {
            return 0.0;
        }
        let mut dev = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols.min(self.rows) {
                let d = self.get(i, j) - self.get(j, i).conj();
                dev += d.norm_sqr();
            }
        }
        dev.sqrt() / norm
    }
}

/// Assemble a block matrix from a conformable grid of blocks.
/// Block (i, j) must have `rows(i)` rows and `cols(j)` columns, with
/// `rows(i) = cols(i)` taken from the diagonal blocks.
pub fn block_matrix(blocks: &[Vec<ComplexMatrix>]) -> Result<ComplexMatrix> {
    let n = blocks.len();
    if n == 0 || blocks.iter().any(|row| row.len() != n) {
        return Err(Error::BadRequest(
            "block grid must be a non-empty square grid".into(),
        ));
    }
    let sizes: Vec<usize> = (0..n).map(|i| blocks[i][i].rows()).collect();
    for i in 0..n {
        for j in 0..n {
            let b = &blocks[i][j];
            if b.rows() != sizes[i] || b.cols() != sizes[j] {
                return Err(Error::NonConformableBlocks {
                    row: i,
                    col: j,
                    got_rows: b.rows(),
                    got_cols: b.cols(),
                    want_rows: sizes[i],
                    want_cols: sizes[j],
                });
            }
        }
    }
    let total: usize = sizes.iter().sum();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let mut out = ComplexMatrix::zeros(total, total);
    for i in 0..n {
        for j in 0..n {
            let b = &blocks[i][j];
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    out.set(offsets[i] + r, offsets[j] + c, b.get(r, c));
                }
            }
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(a: &ComplexMatrix, cfg: &EngineConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    check_hermitian(a, cfg)?;
    let (vals, _) = jacobi(a, cfg, false)?;
    Ok(vals)
}

/// Eigenvalues (ascending) and a matching orthonormal eigenvector basis,
/// eigenvectors as the columns of the returned matrix.
pub fn hermitian_eigen(a: &ComplexMatrix, cfg: &EngineConfig) -> Result<(Vec<f64>, ComplexMatrix)> {
    cfg.validate()?;
    check_hermitian(a, cfg)?;
    let (vals, vecs) = jacobi(a, cfg, true)?;
    Ok((vals, vecs.expect("vectors requested")))
}

fn check_hermitian(a: &ComplexMatrix, cfg: &EngineConfig) -> Result<()> {
    a.require_square()?;
    let dev = a.hermitian_deviation();
    if dev > cfg.eig_tol {
        return Err(Error::NotHermitian { deviation: dev });
    }
    Ok(())
}

/// Cyclic complex Jacobi. Off-diagonal entries are annihilated by a phased
/// Givens rotation; sweeps stop when the off-diagonal Frobenius norm drops
/// below `eig_tol` times the matrix Frobenius norm.
fn jacobi(
    a: &ComplexMatrix,
    cfg: &EngineConfig,
    want_vectors: bool,
) -> Result<(Vec<f64>, Option<ComplexMatrix>)> {
    let n = a.rows();
    let scale = a.frobenius_norm();
    // symmetrize so roundoff in the input cannot accumulate
    let mut h = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            h[i * n + j] = (a.get(i, j) + a.get(j, i).conj()) * 0.5;
        }
    }
    let mut v = if want_vectors {
        Some(ComplexMatrix::identity(n))
    } else {
        None
    };

    if scale > 0.0 {
        let threshold = cfg.eig_tol * scale;
        let mut converged = false;
        let max_sweeps = cfg.max_iter;
        for sweep in 0..max_sweeps {
            let off = off_diagonal_norm(&h, n);
            if off <= threshold {
                converged = true;
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut h, v.as_mut(), n, p, q, threshold);
                }
            }
            if sweep + 1 == max_sweeps {
                let off = off_diagonal_norm(&h, n);
                if off > threshold {
                    return Err(Error::EigNonConvergence {
                        sweeps: max_sweeps,
                        off_norm: off,
                    });
                }
                converged = true;
            }
        }
        if !converged && off_diagonal_norm(&h, n) > threshold {
            return Err(Error::EigNonConvergence {
                sweeps: max_sweeps,
                off_norm: off_diagonal_norm(&h, n),
            });
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| h[i * n + i].re).collect();
    idx.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let vals: Vec<f64> = idx.iter().map(|&i| diag[i]).collect();
    let vecs = v.map(|v| {
        let mut out = ComplexMatrix::zeros(n, n);
        for (newcol, &oldcol) in idx.iter().enumerate() {
            for r in 0..n {
                out.set(r, newcol, v.get(r, oldcol));
            }
        }
        out
    });
    Ok((vals, vecs))
}

fn off_diagonal_norm(h: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += h[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One phased Jacobi rotation zeroing h[p][q]. The pivot's phase is folded
/// into the rotation so the 2×2 subproblem is real symmetric.
fn rotate(h: &mut [Complex64], v: Option<&mut ComplexMatrix>, n: usize, p: usize, q: usize, threshold: f64) {
    let beta = h[p * n + q];
    let b = beta.norm();
    if b <= threshold * 1e-3 {
        return;
    }
    let f = beta / b; // unit phase
    let alpha = h[p * n + p].re;
    let gamma = h[q * n + q].re;
    let tau = (gamma - alpha) / (2.0 * b);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let fc = f.conj();

    // column transform: M <- M J with J[p][p]=c, J[p][q]=s,
    // J[q][p]=-s*conj(f), J[q][q]=c*conj(f)
    for k in 0..n {
        let ap = h[k * n + p];
        let aq = h[k * n + q];
        h[k * n + p] = ap * c - aq * (s * fc);
        h[k * n + q] = ap * s + aq * (c * fc);
    }
    // row transform: M <- J* M
    for k in 0..n {
        let ap = h[p * n + k];
        let aq = h[q * n + k];
        h[p * n + k] = ap * c - aq * (s * f);
        h[q * n + k] = ap * s + aq * (c * f);
    }
    // pin the annihilated pair and keep the diagonal real
    h[p * n + q] = Complex64::new(0.0, 0.0);
    h[q * n + p] = Complex64::new(0.0, 0.0);
    h[p * n + p] = Complex64::new(h[p * n + p].re, 0.0);
    h[q * n + q] = Complex64::new(h[q * n + q].re, 0.0);

    if let Some(v) = v {
        let n_v = v.rows();
        for k in 0..n_v {
            let ap = v.get(k, p);
            let aq = v.get(k, q);
            v.set(k, p, ap * c - aq * (s * fc));
            v.set(k, q, ap * s + aq * (c * fc));
        }
    }
}

/// Operator norm (largest singular value) of a rectangular matrix,
/// via the top eigenvalue of A*A.
pub fn operator_norm(a: &ComplexMatrix, cfg: &EngineConfig) -> Result<f64> {
    let gram = a.adjoint().mul(a)?;
    let vals = hermitian_eigenvalues(&gram, cfg)?;
    let top = vals.last().copied().unwrap_or(0.0);
    Ok(top.max(0.0).sqrt())
}

/// Operator norm of a Hermitian matrix: max |eigenvalue|.
pub fn hermitian_operator_norm(a: &ComplexMatrix, cfg: &EngineConfig) -> Result<f64> {
    let vals = hermitian_eigenvalues(a, cfg)?;
    Ok(vals
        .iter()
        .fold(0.0_f64, |acc, &x| acc.max(x.abs())))
}

/// Gelfand-sequence estimate of the spectral radius via repeated squaring:
/// ‖A^(2^k)‖^(1/2^k). Iterates are rescaled by their norm each step with the
/// log scale carried separately; the returned value is always an upper
/// estimate of ρ(A), non-increasing in k.
pub fn spectral_radius_estimate(a: &ComplexMatrix, cfg: &EngineConfig) -> Result<f64> {
    cfg.validate()?;
    a.require_square()?;
    let norm = operator_norm(a, cfg)?;
    if norm == 0.0 {
        return Ok(0.0);
    }
    let mut b = a.scale(Complex64::new(1.0 / norm, 0.0));
    let mut log_scale = norm.ln();
    let mut estimate = norm;
    for k in 1..=20u32 {
        b = b.mul(&b)?;
        let m = operator_norm(&b, cfg)?;
        if !m.is_finite() {
            return Err(Error::Overflow);
        }
        if m == 0.0 {
            return Ok(0.0);
        }
        log_scale = 2.0 * log_scale + m.ln();
        let next = (log_scale / f64::powi(2.0, k as i32)).exp();
        if !next.is_finite() {
            return Err(Error::Overflow);
        }
        let rel = (estimate - next).abs() / next.max(f64::MIN_POSITIVE);
        estimate = next;
        if rel < cfg.gelfand_rel_tol {
            break;
        }
        // after the update log_scale = ln‖A^{2^k}‖, which is exactly the
        // accumulated scale of the renormalized b
        b = b.scale(Complex64::new(1.0 / m, 0.0));
    }
    Ok(estimate)
}
