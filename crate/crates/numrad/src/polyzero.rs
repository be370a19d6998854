//! Zero localization for monic complex polynomials: the Frobenius companion
//! matrix, the eight classical radius bounds, the two companion-matrix bounds
//! built on the numerical-radius inequalities, and a Durand–Kerner root
//! oracle that certifies every bound.

use num_complex::Complex64;

use crate::bounds::{upper_thm21, upper_thm23, BoundValue};
use crate::error::{Error, Result};
use crate::linalg::{operator_norm, ComplexMatrix, EngineConfig};
use crate::numrange::numerical_radius;

/// Monic polynomial with complex coefficients, ascending degree order
/// (a_0, a_1, …, a_{n-1}, 1), degree n ≥ 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Build from ascending coefficients (a_0 … a_n); the polynomial is
    /// normalized to monic by dividing through the leading coefficient.
    pub fn from_ascending(coeffs: Vec<Complex64>) -> Result<Self> {
        let degree = coeffs.len().saturating_sub(1);
        let lead = *coeffs.last().ok_or(Error::DegreeTooSmall { degree: 0 })?;
        if lead == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroLeadingCoefficient);
        }
        if degree < 2 {
            return Err(Error::DegreeTooSmall { degree });
        }
        let inv = Complex64::new(1.0, 0.0) / lead;
        let mut coeffs: Vec<Complex64> = coeffs.into_iter().map(|c| c * inv).collect();
        let n = coeffs.len();
        coeffs[n - 1] = Complex64::new(1.0, 0.0);
        Ok(Polynomial { coeffs })
    }

    /// Build from descending coefficients (a_n … a_0), as humans write p(z).
    pub fn from_descending(mut coeffs: Vec<Complex64>) -> Result<Self> {
        coeffs.reverse();
        Self::from_ascending(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ascending coefficients, a_0 first, leading 1 last.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    fn display_term(c: Complex64) -> String {
        if c.im == 0.0 {
            format!("{}", c.re)
        } else if c.re == 0.0 {
            format!("{}i", c.im)
        } else if c.im < 0.0 {
            format!("{}{}i", c.re, c.im)
        } else {
            format!("{}+{}i", c.re, c.im)
        }
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.degree();
        write!(f, "z^{n}")?;
        for k in (0..n).rev() {
            let c = self.coeffs[k];
            if c == Complex64::new(0.0, 0.0) {
                continue;
            }
            if k == 0 {
                write!(f, " + ({})", Self::display_term(c))?;
            } else if k == 1 {
                write!(f, " + ({})z", Self::display_term(c))?;
            } else {
                write!(f, " + ({})z^{k}", Self::display_term(c))?;
            }
        }
        Ok(())
    }
}

/// Frobenius companion matrix: first row (−a_{n−1}, …, −a_1, −a_0),
/// ones on the subdiagonal, zeros elsewhere.
pub fn companion_matrix(p: &Polynomial) -> ComplexMatrix {
    let n = p.degree();
    let mut m = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        m.set(0, j, -p.coefficients()[n - 1 - j]);
    }
    for i in 1..n {
        m.set(i, i - 1, Complex64::new(1.0, 0.0));
    }
    m
}

const ROOT_UPDATE_TOL: f64 = 1e-12;
const ROOT_RESIDUAL_FACTOR: f64 = 1e-8;

/// All zeros of the polynomial (with multiplicity), by Durand–Kerner
/// simultaneous iteration. Zero roots are factored out first since the
/// iteration converges slowly on exact zero clusters. Every returned root z
/// is residual-certified: |p(z)| ≤ 1e-8·(1+|z|)^n.
pub fn roots(p: &Polynomial, cfg: &EngineConfig) -> Result<Vec<Complex64>> {
    cfg.validate()?;
    let coeffs = p.coefficients();
    let zero = Complex64::new(0.0, 0.0);
    let k_zero = coeffs.iter().take_while(|&&c| c == zero).count();
    let reduced: Vec<Complex64> = coeffs[k_zero..].to_vec();
    let mut out = vec![zero; k_zero];
    out.extend(durand_kerner(&reduced, cfg)?);

    let n = p.degree() as i32;
    let mut worst = 0.0_f64;
    for &z in &out {
        let res = p.eval(z).norm() / (1.0 + z.norm()).powi(n);
        worst = worst.max(res);
    }
    if worst > ROOT_RESIDUAL_FACTOR {
        return Err(Error::RootsNonConvergence { max_residual: worst });
    }
    Ok(out)
}

/// Durand–Kerner on a monic polynomial with nonzero constant term,
/// coefficients ascending. Initial guesses sit on the Cauchy-bound circle
/// with a 0.4 rad offset to break symmetry.
fn durand_kerner(coeffs: &[Complex64], cfg: &EngineConfig) -> Result<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(vec![]);
    }
    if n == 1 {
        return Ok(vec![-coeffs[0]]);
    }
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .fold(0.0_f64, |acc, c| acc.max(c.norm()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..cfg.max_iter {
        let mut max_update = 0.0_f64;
        for k in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    den *= z[k] - z[j];
                }
            }
            if den == Complex64::new(0.0, 0.0) {
                // coincident iterates: nudge and continue
                z[k] += Complex64::new(1e-8, 1e-8);
                max_update = f64::INFINITY;
                continue;
            }
            let step = eval(z[k]) / den;
            z[k] -= step;
            max_update = max_update.max(step.norm());
        }
        if max_update < ROOT_UPDATE_TOL {
            break;
        }
    }
    Ok(z)
}

/// The eight classical zero bounds (Carmichael–Mason, Cauchy, Fujii–Kubo,
/// Kittaneh, Paul–Bag ×2, Abu-Omar–Kittaneh, Alpin et al.).
pub fn classical_bounds(p: &Polynomial, cfg: &EngineConfig) -> Result<Vec<BoundValue>> {
    let n = p.degree();
    let mods: Vec<f64> = p.coefficients()[..n].iter().map(|c| c.norm()).collect();
    let sum_sq: f64 = mods.iter().map(|m| m * m).sum();
    let a_top = mods[n - 1]; // |a_{n-1}|

    let carmichael = (1.0 + sum_sq).sqrt();
    let cauchy = 1.0 + mods.iter().fold(0.0_f64, |acc, &m| acc.max(m));
    let fujii_kubo = (std::f64::consts::PI / (n as f64 + 1.0)).cos()
        + 0.5 * ((sum_sq - a_top * a_top).sqrt() + a_top);

    let companion = companion_matrix(p);
    let c_norm = operator_norm(&companion, cfg)?;
    let c2_norm = operator_norm(&companion.mul(&companion)?, cfg)?;
    let kittaneh = 0.5 * (c_norm + c2_norm.sqrt());

    // Paul–Bag (5): tail sum over |a_{n-k}|^2 for k = 2..n
    let cos_n = (std::f64::consts::PI / n as f64).cos();
    let tail2: f64 = (2..=n).map(|k| mods[n - k] * mods[n - k]).sum();
    let paul_bag_1 = 0.5
        * (a_top
            + cos_n
            + ((a_top - cos_n).powi(2) + (1.0 + tail2.sqrt()).powi(2)).sqrt());

    // Paul–Bag (6): w of the leading 2x2 corner of the companion matrix
    let a2 = ComplexMatrix::from_rows(&[
        vec![-p.coefficients()[n - 1], -p.coefficients()[n - 2]],
        vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
    ])?;
    let w_a2 = numerical_radius(&a2, cfg)?;
    let cos_n1 = (std::f64::consts::PI / (n as f64 - 1.0)).cos();
    let tail3: f64 = (3..=n).map(|k| mods[n - k] * mods[n - k]).sum();
    let paul_bag_2 = 0.5
        * (w_a2
            + cos_n1
            + ((w_a2 - cos_n1).powi(2) + (1.0 + tail3.sqrt()).powi(2)).sqrt());

    let alpha = sum_sq.sqrt();
    let cos_np1 = (std::f64::consts::PI / (n as f64 + 1.0)).cos();
    let aok_poly =
        (0.25 * (a_top * a_top + alpha).powi(2) + alpha + cos_np1 * cos_np1).sqrt();

    let mut alpin = f64::NEG_INFINITY;
    let mut product = 1.0;
    for k in 1..=n {
        product *= 1.0 + mods[n - k];
        alpin = alpin.max(product.powf(1.0 / k as f64));
    }

    let mk = |name: &str, value: f64, digest: &str| BoundValue {
        name: name.into(),
        value,
        kind: crate::bounds::BoundKind::Upper,
        inputs_digest: digest.into(),
    };
    Ok(vec![
        mk("carmichael_mason", carmichael, "sum |a_j|^2"),
        mk("cauchy", cauchy, "max |a_j|"),
        mk("fujii_kubo", fujii_kubo, "sum_{j<n-1} |a_j|^2, |a_{n-1}|"),
        mk("kittaneh", kittaneh, "||C(p)||, ||C(p)^2||"),
        mk("paul_bag_1", paul_bag_1, "|a_{n-1}|, cos(pi/n), tail sum"),
        mk("paul_bag_2", paul_bag_2, "w(2x2 corner), cos(pi/(n-1)), tail sum"),
        mk("aok_poly", aok_poly, "alpha = sqrt(sum |a_j|^2)"),
        mk("alpin", alpin, "partial products of 1 + |a_j|"),
    ])
}

/// |μ| ≤ (½w²(C²) + ¼‖(C*C)² + (CC*)²‖)^{1/4} with C = C(p).
pub fn new_bound_thm41(p: &Polynomial, cfg: &EngineConfig) -> Result<BoundValue> {
    let mut b = upper_thm23(&companion_matrix(p), 2.0, cfg)?;
    b.name = "thm41".into();
    Ok(b)
}

/// |μ| ≤ (¼w²(C²) + ⅛w(C²P + PC²) + 1/16‖P‖²)^{1/4} with C = C(p).
pub fn new_bound_thm42(p: &Polynomial, cfg: &EngineConfig) -> Result<BoundValue> {
    let mut b = upper_thm21(&companion_matrix(p), cfg)?;
    b.name = "thm42".into();
    Ok(b)
}

/// Every radius bound for one polynomial plus the root oracle.
#[derive(Debug, Clone)]
pub struct ZeroBoundReport {
    pub polynomial: Polynomial,
    /// All upper radius bounds, sorted ascending by value.
    pub bounds: Vec<BoundValue>,
    pub roots: Vec<Complex64>,
    pub max_root_modulus: f64,
}

pub fn zero_bound_report(p: &Polynomial, cfg: &EngineConfig) -> Result<ZeroBoundReport> {
    let mut bounds = classical_bounds(p, cfg)?;
    bounds.push(new_bound_thm41(p, cfg)?);
    bounds.push(new_bound_thm42(p, cfg)?);
    let w = numerical_radius(&companion_matrix(p), cfg)?;
    bounds.push(BoundValue {
        name: "numerical_radius_exactish".into(),
        value: w,
        kind: crate::bounds::BoundKind::Upper,
        inputs_digest: "w(C(p))".into(),
    });
    bounds.sort_by(|a, b| a.value.partial_cmp(&b.value).unwrap());
    let roots = roots(p, cfg)?;
    let max_root_modulus = roots.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()));
    Ok(ZeroBoundReport {
        polynomial: p.clone(),
        bounds,
        roots,
        max_root_modulus,
    })
}
