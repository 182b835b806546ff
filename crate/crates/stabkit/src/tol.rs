//! Centralized numerical tolerances. Every bound comparison in the crate and
//! the verification harness goes through one of these named constants.

/// Detection threshold on |⟨ψ|P|ψ⟩| when scanning for stabilizers. Double
/// precision simulation of ≲ 10³-gate circuits keeps true stabilizer
/// expectations within ~1e-11 of ±1, so 1e-9 has two orders of headroom.
pub const TOL_STAB: f64 = 1e-9;

/// Slack on energy comparisons against analytic bounds.
pub const TOL_ENERGY: f64 = 1e-9;

/// Tolerance for exact matrix identities (rotation consistency, dense
/// expansions) and for norm checks.
pub const TOL_MATRIX: f64 = 1e-12;

/// Residual imaginary part allowed when an expectation value is clipped to a
/// real number.
pub const TOL_IMAG: f64 = 1e-12;

/// sin²(π/8) = (1 − 1/√2)/2, the per-term energy constant.
pub fn sin2_pi_8() -> f64 {
    (1.0 - std::f64::consts::FRAC_1_SQRT_2) / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin2_pi_8_agrees_with_direct_evaluation() {
        let direct = (std::f64::consts::PI / 8.0).sin().powi(2);
        assert!((sin2_pi_8() - direct).abs() < 1e-15);
        assert!((sin2_pi_8() - 0.146_446_609_406_726_24).abs() < 1e-15);
    }

    #[test]
    fn tolerance_ordering() {
        assert!(TOL_MATRIX < TOL_STAB);
        assert!(TOL_MATRIX < TOL_ENERGY);
    }
}
