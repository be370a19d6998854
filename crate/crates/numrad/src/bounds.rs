//! Named upper and lower bounds on the numerical radius, the block-matrix
//! bound, the spectral-radius bound for sums of operator products, and the
//! competitor bounds used by the ordering tests.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigen, hermitian_eigenvalues, hermitian_operator_norm, operator_norm, ComplexMatrix,
    EngineConfig,
};
use crate::numrange::{c_quantity, crawford_number, numerical_radius, RotatedFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
}

/// One named bound value for a fixed input.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundValue {
    pub name: String,
    pub value: f64,
    pub kind: BoundKind,
    /// Short description of the operands the formula consumed.
    pub inputs_digest: String,
}

impl BoundValue {
    fn upper(name: &str, value: f64, digest: &str) -> Self {
        BoundValue {
            name: name.into(),
            value,
            kind: BoundKind::Upper,
            inputs_digest: digest.into(),
        }
    }

    fn lower(name: &str, value: f64, digest: &str) -> Self {
        BoundValue {
            name: name.into(),
            value,
            kind: BoundKind::Lower,
            inputs_digest: digest.into(),
        }
    }
}

/// P = T*T + TT*.
fn p_matrix(t: &ComplexMatrix) -> Result<ComplexMatrix> {
    let ta = t.adjoint();
    ta.mul(t)?.add(&t.mul(&ta)?)
}

/// w⁴ ≤ ¼·w²(T²) + ⅛·w(T²P + PT²) + 1/16·‖P‖².
pub fn upper_thm21(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<BoundValue> {
    t.require_square()?;
    let t2 = t.mul(t)?;
    let p = p_matrix(t)?;
    let w_t2 = numerical_radius(&t2, cfg)?;
    let mixed = t2.mul(&p)?.add(&p.mul(&t2)?)?;
    let w_mixed = numerical_radius(&mixed, cfg)?;
    let p_norm = hermitian_operator_norm(&p, cfg)?;
    let v = (0.25 * w_t2 * w_t2 + 0.125 * w_mixed + p_norm * p_norm / 16.0).powf(0.25);
    Ok(BoundValue::upper(
        "thm21_upper",
        v,
        "w(T^2), w(T^2 P + P T^2), ||P||",
    ))
}

/// w³ ≤ ¼·w(T³) + ¼·w(T²T* + T*T² + TT*T).
pub fn upper_thm22(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<BoundValue> {
    t.require_square()?;
    let ta = t.adjoint();
    let t2 = t.mul(t)?;
    let t3 = t2.mul(t)?;
    let mixed = t2
        .mul(&ta)?
        .add(&ta.mul(&t2)?)?
        .add(&t.mul(&ta)?.mul(t)?)?;
    let v = (0.25 * numerical_radius(&t3, cfg)? + 0.25 * numerical_radius(&mixed, cfg)?)
        .powf(1.0 / 3.0);
    Ok(BoundValue::upper(
        "thm22_upper",
        v,
        "w(T^3), w(T^2 T* + T* T^2 + T T* T)",
    ))
}

/// Spectral calculus power of a positive semidefinite Hermitian matrix.
/// Round-off eigenvalues below zero are clamped before powering.
fn psd_power(a: &ComplexMatrix, r: f64, cfg: &EngineConfig) -> Result<ComplexMatrix> {
    let n = a.require_square()?;
    let (vals, v) = hermitian_eigen(a, cfg)?;
    let mut lam = ComplexMatrix::zeros(n, n);
    for (i, &x) in vals.iter().enumerate() {
        lam.set(i, i, Complex64::new(x.max(0.0).powf(r), 0.0));
    }
    v.mul(&lam)?.mul(&v.adjoint())
}

/// w^{2r} ≤ ½·w^r(T²) + ¼·‖(T*T)^r + (TT*)^r‖, for r ≥ 1.
pub fn upper_thm23(t: &ComplexMatrix, r: f64, cfg: &EngineConfig) -> Result<BoundValue> {
    if !(r >= 1.0) {
        return Err(Error::ExponentBelowOne { r });
    }
    t.require_square()?;
    let ta = t.adjoint();
    let w_t2 = numerical_radius(&t.mul(t)?, cfg)?;
    let powered = psd_power(&ta.mul(t)?, r, cfg)?.add(&psd_power(&t.mul(&ta)?, r, cfg)?)?;
    let norm = hermitian_operator_norm(&powered, cfg)?;
    let v = (0.5 * w_t2.powf(r) + 0.25 * norm).powf(1.0 / (2.0 * r));
    Ok(BoundValue::upper(
        &format!("thm23_r{r}"),
        v,
        "w(T^2), ||(T*T)^r + (TT*)^r||",
    ))
}

/// w ≤ inf_φ sqrt(‖H_φ‖² + ‖H_{φ+π/2}‖²). The objective has period π/2 up to
/// the swap of the two terms; the grid covers [0, π).
pub fn upper_thm25(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<BoundValue> {
    cfg.validate()?;
    t.require_square()?;
    let fam = RotatedFamily::new(t)?;
    let objective = |phi: f64| -> Result<f64> {
        let a = fam.norm(phi, cfg)?;
        let b = fam.norm(phi + std::f64::consts::FRAC_PI_2, cfg)?;
        Ok((a * a + b * b).sqrt())
    };
    let neg = crate::numrange::maximize_periodic(
        |phi| objective(phi).map(|v| -v),
        std::f64::consts::PI,
        cfg.theta_grid,
        cfg.refine_tol,
    )?;
    Ok(BoundValue::upper(
        "thm25_upper",
        -neg,
        "||H_phi||, ||H_{phi+pi/2}||",
    ))
}

/// Block-matrix bound: w(A) ≤ max_i [ w(A_ii) + ½·Σ_{j≠i}(‖A_ij‖ + ‖A_ji‖) ].
pub fn upper_thm26_block(blocks: &[Vec<ComplexMatrix>], cfg: &EngineConfig) -> Result<BoundValue> {
    // validates conformability as a side effect
    crate::linalg::block_matrix(blocks)?;
    let n = blocks.len();
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let mut term = numerical_radius(&blocks[i][i], cfg)?;
        for j in 0..n {
            if j != i {
                term += 0.5
                    * (operator_norm(&blocks[i][j], cfg)? + operator_norm(&blocks[j][i], cfg)?);
            }
        }
        best = best.max(term);
    }
    Ok(BoundValue::upper(
        "thm26_block",
        best,
        "w(A_ii), ||A_ij|| off-diagonal",
    ))
}

/// ρ(Σ A_i B_i) ≤ max_i [ w(B_i A_i) + ½·Σ_{j≠i}(‖B_i A_j‖ + ‖B_j A_i‖) ].
pub fn upper_thm27_spectral(
    pairs: &[(ComplexMatrix, ComplexMatrix)],
    cfg: &EngineConfig,
) -> Result<BoundValue> {
    if pairs.is_empty() {
        return Err(Error::EmptyPairList);
    }
    let dim = pairs[0].0.require_square()?;
    for (a, b) in pairs {
        if a.require_square()? != dim || b.require_square()? != dim {
            return Err(Error::ShapeMismatch {
                op: "thm27_pairs",
                lhs_rows: dim,
                lhs_cols: dim,
                rhs_rows: a.rows().max(b.rows()),
                rhs_cols: a.cols().max(b.cols()),
            });
        }
    }
    let n = pairs.len();
    let mut best = f64::NEG_INFINITY;
    for i in 0..n {
        let mut term = numerical_radius(&pairs[i].1.mul(&pairs[i].0)?, cfg)?;
        for j in 0..n {
            if j != i {
                term += 0.5
                    * (operator_norm(&pairs[i].1.mul(&pairs[j].0)?, cfg)?
                        + operator_norm(&pairs[j].1.mul(&pairs[i].0)?, cfg)?);
            }
        }
        best = best.max(term);
    }
    Ok(BoundValue::upper(
        "thm27_spectral",
        best,
        "w(B_i A_i), ||B_i A_j|| cross terms",
    ))
}

/// Lower bound: w⁴ ≥ ¼·C²(T²) + ⅛·m(T²P + PT²) + 1/16·‖P‖².
pub fn lower_thm31(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<BoundValue> {
    t.require_square()?;
    let t2 = t.mul(t)?;
    let p = p_matrix(t)?;
    let mixed = t2.mul(&p)?.add(&p.mul(&t2)?)?;
    let c2 = c_quantity(&t2, cfg)?;
    let m = crawford_number(&mixed, cfg)?;
    let p_norm = hermitian_operator_norm(&p, cfg)?;
    let v = (0.25 * c2 * c2 + 0.125 * m + p_norm * p_norm / 16.0).powf(0.25);
    Ok(BoundValue::lower(
        "thm31_lower",
        v,
        "C(T^2), m(T^2 P + P T^2), ||P||",
    ))
}

/// Crawford number of a Hermitian matrix: distance from 0 to the real
/// segment [λ_min, λ_max].
fn hermitian_crawford(h: &ComplexMatrix, cfg: &EngineConfig) -> Result<f64> {
    let vals = hermitian_eigenvalues(h, cfg)?;
    let lo = vals[0];
    let hi = *vals.last().expect("non-empty");
    Ok(if lo > 0.0 {
        lo
    } else if hi < 0.0 {
        -hi
    } else {
        0.0
    })
}

/// Two lower bounds: sqrt(‖Re T‖² + m²(Im T)) and sqrt(‖Im T‖² + m²(Re T)).
pub fn lower_thm33(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<(BoundValue, BoundValue)> {
    t.require_square()?;
    let re = crate::numrange::real_part(t)?;
    let im = crate::numrange::imag_part(t)?;
    let re_norm = hermitian_operator_norm(&re, cfg)?;
    let im_norm = hermitian_operator_norm(&im, cfg)?;
    let m_re = hermitian_crawford(&re, cfg)?;
    let m_im = hermitian_crawford(&im, cfg)?;
    let first = BoundValue::lower(
        "thm33_re",
        (re_norm * re_norm + m_im * m_im).sqrt(),
        "||Re T||, m(Im T)",
    );
    let second = BoundValue::lower(
        "thm33_im",
        (im_norm * im_norm + m_re * m_re).sqrt(),
        "||Im T||, m(Re T)",
    );
    Ok((first, second))
}

/// Sattari et al. specialized at A = B*: w(T) ≤ (½‖(T*T)^r + (TT*)^r‖)^{1/2r}.
pub fn sattari_specialization(t: &ComplexMatrix, r: f64, cfg: &EngineConfig) -> Result<BoundValue> {
    if !(r >= 1.0) {
        return Err(Error::ExponentBelowOne { r });
    }
    t.require_square()?;
    let ta = t.adjoint();
    let powered = psd_power(&ta.mul(t)?, r, cfg)?.add(&psd_power(&t.mul(&ta)?, r, cfg)?)?;
    let norm = hermitian_operator_norm(&powered, cfg)?;
    let v = (0.5 * norm).powf(1.0 / (2.0 * r));
    Ok(BoundValue::upper(
        &format!("sattari_r{r}"),
        v,
        "||(T*T)^r + (TT*)^r||",
    ))
}

/// The competitor bounds from the remarks, evaluated literally.
pub fn competitor_bounds(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<Vec<BoundValue>> {
    t.require_square()?;
    let t2 = t.mul(t)?;
    let p = p_matrix(t)?;
    let w_t2 = numerical_radius(&t2, cfg)?;
    let p_norm = hermitian_operator_norm(&p, cfg)?;
    let t_norm = operator_norm(t, cfg)?;
    let t2_norm = operator_norm(&t2, cfg)?;
    let re = crate::numrange::real_part(t)?;
    let im = crate::numrange::imag_part(t)?;

    Ok(vec![
        BoundValue::upper(
            "aok_quartic",
            (0.25 * w_t2 * w_t2 + 0.25 * w_t2 * p_norm + p_norm * p_norm / 16.0).powf(0.25),
            "w(T^2), ||P||",
        ),
        BoundValue::upper(
            "kittaneh_norm_avg",
            0.5 * (t_norm + t2_norm.sqrt()),
            "||T||, ||T^2||",
        ),
        BoundValue::upper("kittaneh_half_p", (0.5 * p_norm).sqrt(), "||P||"),
        BoundValue::upper(
            "dragomir",
            (0.5 * (w_t2 + t_norm * t_norm)).sqrt(),
            "w(T^2), ||T||",
        ),
        BoundValue::upper(
            "aok_quadratic",
            (0.5 * w_t2 + 0.25 * p_norm).sqrt(),
            "w(T^2), ||P||",
        ),
        BoundValue::lower(
            "kittaneh_lower_quarter_p",
            (0.25 * p_norm).sqrt(),
            "||P||",
        ),
        BoundValue::lower(
            "kmy_lower_re",
            hermitian_operator_norm(&re, cfg)?,
            "||Re T||",
        ),
        BoundValue::lower(
            "kmy_lower_im",
            hermitian_operator_norm(&im, cfg)?,
            "||Im T||",
        ),
    ])
}

/// All §§2–3 bounds for one matrix, plus w(T) itself.
pub struct MatrixBoundReport {
    pub w: f64,
    pub bounds: Vec<BoundValue>,
}

pub fn matrix_bound_report(t: &ComplexMatrix, cfg: &EngineConfig) -> Result<MatrixBoundReport> {
    let w = numerical_radius(t, cfg)?;
    let mut bounds = vec![
        upper_thm21(t, cfg)?,
        upper_thm22(t, cfg)?,
        upper_thm23(t, 1.0, cfg)?,
        upper_thm23(t, 2.0, cfg)?,
        upper_thm23(t, 3.0, cfg)?,
        upper_thm25(t, cfg)?,
        lower_thm31(t, cfg)?,
    ];
    let (a, b) = lower_thm33(t, cfg)?;
    bounds.push(a);
    bounds.push(b);
    bounds.extend(competitor_bounds(t, cfg)?);
    Ok(MatrixBoundReport { w, bounds })
}
