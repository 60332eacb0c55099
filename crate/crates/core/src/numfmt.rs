//! Text formatting of reals for reports and CLI output.

/// Formats `x` with `digits` significant digits, in fixed notation when the
/// magnitude is moderate and in scientific notation otherwise.
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if exp < -5 || exp >= digits as i32 {
        format!("{:.*e}", digits - 1, x)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    }
}

/// Twelve significant digits, the precision used in all printed reals.
pub fn fmt12(x: f64) -> String {
    format_sig(x, 12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt12(1728.0), "1728.00000000");
        assert_eq!(fmt12(0.04507034144862795), "0.0450703414486");
        assert_eq!(fmt12(-2.5), "-2.50000000000");
        assert_eq!(fmt12(0.0), "0");
        assert_eq!(fmt12(1.5e13), "1.50000000000e13");
        assert_eq!(fmt12(1.5e-7), "1.50000000000e-7");
        assert_eq!(format_sig(1.23456, 3), "1.23");
    }
}
