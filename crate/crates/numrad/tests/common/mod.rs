//! Shared helpers for the integration suites: seeded random matrix and
//! polynomial generators plus a coarser engine configuration for bulk runs.

use num_complex::Complex64;
use numrad::{ComplexMatrix, EngineConfig};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[allow(dead_code)]
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Coarser grid for bulk suites (hundreds of matrices); each bound is still
/// refined by golden section, so values stay well inside the 5e-6 tolerances.
pub fn bulk_cfg() -> EngineConfig {
    EngineConfig {
        theta_grid: 360,
        refine_tol: 1e-8,
        ..EngineConfig::default()
    }
}

pub fn random_unit_disk(rng: &mut ChaCha8Rng) -> Complex64 {
    loop {
        let re = rng.gen_range(-1.0..1.0);
        let im = rng.gen_range(-1.0..1.0);
        let z = Complex64::new(re, im);
        if z.norm() <= 1.0 {
            return z;
        }
    }
}

/// Random n×n matrix with entries in the unit disk.
#[allow(dead_code)]
pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::new(n, n, (0..n * n).map(|_| random_unit_disk(rng)).collect()).unwrap()
}

/// Random rank-one T = x·y* with y*x = 0, so T² = 0 exactly.
#[allow(dead_code)]
pub fn random_square_zero(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    assert!(n >= 2);
    let x: Vec<Complex64> = (0..n).map(|_| random_unit_disk(rng)).collect();
    let mut y: Vec<Complex64> = (0..n).map(|_| random_unit_disk(rng)).collect();
    // project y against x so that <y, x> = y*x = 0
    let xx: f64 = x.iter().map(|v| v.norm_sqr()).sum();
    let yx: Complex64 = y.iter().zip(&x).map(|(yi, xi)| yi.conj() * xi).sum();
    let coef = (yx / xx).conj();
    for (yi, xi) in y.iter_mut().zip(&x) {
        *yi -= coef * xi;
    }
    let entries: Vec<Complex64> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| x[i] * y[j].conj())
        .collect();
    ComplexMatrix::new(n, n, entries).unwrap()
}

/// Random strictly upper triangular 3×3, so T³ = 0 exactly.
#[allow(dead_code)]
pub fn random_strictly_upper_3x3(rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let z = Complex64::new(0.0, 0.0);
    ComplexMatrix::new(
        3,
        3,
        vec![
            z,
            random_unit_disk(rng),
            random_unit_disk(rng),
            z,
            z,
            random_unit_disk(rng),
            z,
            z,
            z,
        ],
    )
    .unwrap()
}

/// Random monic polynomial with the given degree, coefficients in the unit
/// disk scaled by `scale`, ascending order with leading 1.
#[allow(dead_code)]
pub fn random_monic(rng: &mut ChaCha8Rng, degree: usize, scale: f64) -> Vec<Complex64> {
    let mut coeffs: Vec<Complex64> = (0..degree)
        .map(|_| random_unit_disk(rng) * scale)
        .collect();
    coeffs.push(Complex64::new(1.0, 0.0));
    coeffs
}
