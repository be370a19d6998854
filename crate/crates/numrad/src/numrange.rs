//! Numerical-range quantities: rotated Hermitian parts, the numerical radius,
//! the Crawford number, the C quantity and boundary samples of W(T).
//!
//! Angle optimization uses a uniform grid over one period followed by
//! golden-section refinement around every grid-local extremum. The refined
//! grid maximum is a certified lower approximation of the true supremum.

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{hermitian_eigen, hermitian_eigenvalues, ComplexMatrix, EngineConfig};

/// One boundary sample of the numerical range.
#[derive(Debug, Clone)]
pub struct RangeSample {
    /// Angle of the supporting half-plane, radians in [0, 2π).
    pub theta: f64,
    /// Largest eigenvalue of H_θ = Re(e^{iθ} T).
    pub lambda_max: f64,
    /// ⟨Tx, x⟩ for a unit eigenvector x of λ_max; a point of W(T).
    pub boundary_point: Complex64,
}

/// H_θ = Re(e^{iθ} T) = (e^{iθ} T + e^{-iθ} T*) / 2, symmetrized exactly.
pub fn herm_part_rotated(t: &ComplexMatrix, theta: f64) -> Result<ComplexMatrix> {
    let n = t.require_square()?;
    let phase = Complex64::from_polar(1.0, theta);
    let mut h = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = (phase * t.get(i, j) + (phase * t.get(j, i)).conj()) * 0.5;
            h.set(i, j, v);
            h.set(j, i, v.conj());
        }
        let d = h.get(i, i);
        h.set(i, i, Complex64::new(d.re, 0.0));
    }
    Ok(h)
}

/// Hermitian real part of the Cartesian decomposition, (T + T*)/2.
pub fn real_part(t: &ComplexMatrix) -> Result<ComplexMatrix> {
    herm_part_rotated(t, 0.0)
}

/// Hermitian imaginary part, (T − T*)/2i = Re(e^{−iπ/2} T).
pub fn imag_part(t: &ComplexMatrix) -> Result<ComplexMatrix> {
    herm_part_rotated(t, -std::f64::consts::FRAC_PI_2)
}

/// Precomputed Cartesian parts; H_θ = cos(θ)·Re(T) − sin(θ)·Im(T) is then a
/// real linear combination, Hermitian exactly in floating point.
pub(crate) struct RotatedFamily {
    re: ComplexMatrix,
    im: ComplexMatrix,
}

impl RotatedFamily {
    pub(crate) fn new(t: &ComplexMatrix) -> Result<Self> {
        Ok(RotatedFamily {
            re: real_part(t)?,
            im: imag_part(t)?,
        })
    }

    pub(crate) fn at(&self, theta: f64) -> ComplexMatrix {
        let (s, c) = theta.sin_cos();
        let n = self.re.rows();
        let mut h = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                h.set(i, j, self.re.get(i, j) * c - self.im.get(i, j) * s);
            }
        }
        h
    }

    fn eigenvalues(&self, theta: f64, cfg: &EngineConfig) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.at(theta), cfg)
    }

    pub(crate) fn lambda_max(&self, theta: f64, cfg: &EngineConfig) -> Result<f64> {
        Ok(*self.eigenvalues(theta, cfg)?.last().expect("non-empty"))
    }

    fn lambda_min(&self, theta: f64, cfg: &EngineConfig) -> Result<f64> {
        Ok(self.eigenvalues(theta, cfg)?[0])
    }

    fn min_abs_eigenvalue(&self, theta: f64, cfg: &EngineConfig) -> Result<f64> {
        Ok(self
            .eigenvalues(theta, cfg)?
            .iter()
            .fold(f64::INFINITY, |acc, &x| acc.min(x.abs())))
    }

    /// Operator norm of H_θ (max |eigenvalue|).
    pub(crate) fn norm(&self, theta: f64, cfg: &EngineConfig) -> Result<f64> {
        Ok(self
            .eigenvalues(theta, cfg)?
            .iter()
            .fold(0.0_f64, |acc, &x| acc.max(x.abs())))
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a maximum of `f` on `[a, b]`, assuming the
/// bracket contains a local maximum. Returns the best value seen, so the
/// result never falls below either endpoint sample.
fn golden_refine<F>(f: &F, mut a: f64, mut b: f64, tol: f64, mut best: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    best = best.max(f1).max(f2);
    while b - a > tol {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
            best = best.max(f2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
            best = best.max(f1);
        }
    }
    Ok(best)
}

/// Maximize a periodic function over `[0, period)` by grid scan plus
/// golden-section refinement around every grid-local maximum.
pub(crate) fn maximize_periodic<F>(
    f: F,
    period: f64,
    n_grid: usize,
    refine_tol: f64,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = period / n_grid as f64;
    let mut values = Vec::with_capacity(n_grid);
    for k in 0..n_grid {
        values.push(f(k as f64 * h)?);
    }
    let mut best = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let argmax = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .map(|(i, _)| i)
        .unwrap_or(0);
    for k in 0..n_grid {
        let prev = values[(k + n_grid - 1) % n_grid];
        let next = values[(k + 1) % n_grid];
        let local_max = values[k] >= prev && values[k] > next;
        if local_max || k == argmax {
            let center = k as f64 * h;
            best = golden_refine(&f, center - h, center + h, refine_tol, best)?;
        }
    }
    Ok(best)
}

fn minimize_periodic<F>(f: F, period: f64, n_grid: usize, refine_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let neg = maximize_periodic(|x| f(x).map(|v| -v), period, n_grid, refine_tol)?;
    Ok(-neg)
}

/// Numerical radius w(T) = sup_θ λ_max(H_θ). The grid covers [0, 2π), which
/// also captures −λ_min through λ_max(H_{θ+π}) = −λ_min(H_θ).
pub fn numerical_radius(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<f64> {
    cfg.validate()?;
    let fam = RotatedFamily::new(t)?;
    maximize_periodic(
        |theta| fam.lambda_max(theta, cfg),
        std::f64::consts::TAU,
        cfg.theta_grid,
        cfg.refine_tol,
    )
}

/// Crawford number m(T) = inf{|λ| : λ ∈ W(T)}, via support-function duality:
/// the distance from 0 to the convex compact W(T) is max(0, sup_θ λ_min(H_θ)).
pub fn crawford_number(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<f64> {
    cfg.validate()?;
    let fam = RotatedFamily::new(t)?;
    let sup = maximize_periodic(
        |theta| fam.lambda_min(theta, cfg),
        std::f64::consts::TAU,
        cfg.theta_grid,
        cfg.refine_tol,
    )?;
    Ok(sup.max(0.0))
}

/// C(T) = inf over unit x and angles φ of ‖Re(e^{iφ}T) x‖. The two infima
/// commute, and for fixed φ the inner infimum is the smallest singular value
/// of the Hermitian H_φ, i.e. min |eigenvalue|.
pub fn c_quantity(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<f64> {
    cfg.validate()?;
    let fam = RotatedFamily::new(t)?;
    let inf = minimize_periodic(
        |phi| fam.min_abs_eigenvalue(phi, cfg),
        std::f64::consts::PI,
        cfg.theta_grid,
        cfg.refine_tol,
    )?;
    Ok(inf.max(0.0))
}

/// Uniform boundary samples of W(T): for each θ the top eigenvector x of H_θ
/// yields the boundary point ⟨Tx, x⟩ of the supporting half-plane.
pub fn range_boundary(
    t: &ComplexMatrix,
    n_samples: usize,
    cfg: &EngineConfig,
) -> Result<Vec<RangeSample>> {
    cfg.validate()?;
    let n = t.require_square()?;
    if n_samples < 3 {
        return Err(crate::error::Error::BadConfig(format!(
            "n_samples = {n_samples} is below the minimum of 3"
        )));
    }
    let fam = RotatedFamily::new(t)?;
    let mut out = Vec::with_capacity(n_samples);
    for k in 0..n_samples {
        let theta = std::f64::consts::TAU * k as f64 / n_samples as f64;
        let (vals, vecs) = hermitian_eigen(&fam.at(theta), cfg)?;
        let lambda_max = *vals.last().expect("non-empty");
        // top eigenvector is the last column after the ascending sort
        let x: Vec<Complex64> = (0..n).map(|r| vecs.get(r, n - 1)).collect();
        let mut tx = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            for j in 0..n {
                tx[i] += t.get(i, j) * x[j];
            }
        }
        let boundary_point: Complex64 = x.iter().zip(&tx).map(|(xi, txi)| xi.conj() * txi).sum();
        out.push(RangeSample {
            theta,
            lambda_max,
            boundary_point,
        });
    }
    Ok(out)
}
