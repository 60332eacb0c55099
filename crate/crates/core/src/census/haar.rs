use super::CensusError;

/// Hyperbolic areas `∫∫ dx dy / y²` of `F` and of its part below `y = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaarVolumes {
    pub vol_f: f64,
    pub vol_semistable: f64,
    /// `vol_semistable / vol_f`.
    pub fraction: f64,
    pub error_estimate: f64,
}

const TARGET_ERROR: f64 = 1e-13;

fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64) -> Result<(f64, f64), CensusError> {
    let out = quadrature::integrate(f, a, b, TARGET_ERROR);
    if !out.integral.is_finite() || out.error_estimate > TARGET_ERROR {
        return Err(CensusError::QuadratureNotConverged {
            error_estimate: out.error_estimate,
            target: TARGET_ERROR,
        });
    }
    Ok((out.integral, out.error_estimate))
}

/// With the inner integral `∫_{h(x)}^∞ y⁻² dy = 1/h(x)` taken in closed form,
/// `vol(F) = ∫₀^{1/2} dx/√(1−x²)` and the semi-stable part (`y ≤ 1`) is
/// `∫₀^{1/2} (1/√(1−x²) − 1) dx`.
pub fn haar_volumes() -> Result<HaarVolumes, CensusError> {
    let (vol_f, e1) = integrate(|x| 1.0 / (1.0 - x * x).sqrt(), 0.0, 0.5)?;
    let (vol_semistable, e2) = integrate(|x| 1.0 / (1.0 - x * x).sqrt() - 1.0, 0.0, 0.5)?;
    Ok(HaarVolumes {
        vol_f,
        vol_semistable,
        fraction: vol_semistable / vol_f,
        error_estimate: e1.max(e2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn volumes_match_closed_forms() {
        let h = haar_volumes().unwrap();
        assert!((h.vol_f - PI / 6.0).abs() < 1e-12, "{}", h.vol_f);
        assert!((h.vol_semistable - (PI / 6.0 - 0.5)).abs() < 1e-12);
        assert!((h.fraction - 0.04507034144).abs() < 1e-10);
        assert!((h.fraction - (1.0 - 3.0 / PI)).abs() < 1e-12);
    }
}
