//! Growth constants of the sequences η, γ for hyperbolic `H(a,b)`.
//!
//! With `ψ± = ((ab-2) ± √(ab(ab-4)))/2` one has `γ_j = (ψ+^j - ψ-^j)·μ` where
//! `μ = 1/√(ab(ab-4))`, and `η_j` is close to `λψ+^j` with `λ = ψ+/(ψ+ - 1)`.

use bigdecimal::{BigDecimal, Context};
use num_bigint::BigInt;

use crate::cartan::CartanData;
use crate::roots::{eta, gamma};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthEstimates {
    pub psi_plus: f64,
    pub psi_minus: f64,
    pub lambda: f64,
    pub mu: f64,
}

impl GrowthEstimates {
    /// `None` for affine `cd`, where `ψ+ = ψ- = 1`.
    pub fn new(cd: &CartanData) -> Option<Self> {
        if cd.is_affine() {
            return None;
        }
        let ab = cd.ab() as f64;
        let root = (ab * (ab - 4.0)).sqrt();
        let psi_plus = ((ab - 2.0) + root) / 2.0;
        let psi_minus = ((ab - 2.0) - root) / 2.0;
        Some(GrowthEstimates { psi_plus, psi_minus, lambda: psi_plus / (psi_plus - 1.0), mu: 1.0 / root })
    }
}

/// The same constants carried to a fixed number of significant digits.
#[derive(Debug, Clone)]
pub struct PreciseGrowth {
    ctx: Context,
    pub psi_plus: BigDecimal,
    pub lambda: BigDecimal,
    pub mu: BigDecimal,
}

/// Outcome of comparing η_j, γ_j against their growth envelopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthCheck {
    pub eta_within: bool,
    pub gamma_within: bool,
}

impl PreciseGrowth {
    pub fn new(cd: &CartanData, digits: u64) -> Option<Self> {
        if cd.is_affine() {
            return None;
        }
        let ctx = Context::default().with_prec(digits.max(30))?;
        let ab = BigDecimal::from(cd.ab());
        let disc = BigDecimal::from(cd.ab() * (cd.ab() - 4));
        let root = disc.sqrt_with_context(&ctx)?;
        let two = BigDecimal::from(2);
        let psi_plus = ctx.round_decimal((ab - &two + &root) / two);
        let lambda = ctx.round_decimal(&psi_plus * (&psi_plus - BigDecimal::from(1)).inverse_with_context(&ctx));
        let mu = root.inverse_with_context(&ctx);
        Some(PreciseGrowth { ctx, psi_plus, lambda, mu })
    }

    /// Precision that resolves the envelopes at index `j`.
    ///
    /// The upper bounds are missed only by about `ψ-^j = ψ+^{-j}` while the
    /// values themselves are about `ψ+^j`, so the digits needed grow like
    /// `2j·log₁₀ψ+`.
    pub fn digits_for(cd: &CartanData, j: u64) -> u64 {
        let psi = GrowthEstimates::new(cd).map_or(1.0, |g| g.psi_plus);
        (2.0 * j as f64 * psi.log10()).ceil() as u64 + 40
    }

    fn power(&self, j: u64) -> BigDecimal {
        let mut acc = BigDecimal::from(1);
        for _ in 0..j {
            acc = self.ctx.round_decimal(acc * &self.psi_plus);
        }
        acc
    }

    /// Checks `λψ+^j - 1.62 < η_j < λψ+^j` and `μψ+^j - 0.45 < γ_j < μψ+^j`.
    pub fn check(&self, cd: &CartanData, j: u64) -> GrowthCheck {
        let p = self.power(j);
        let e_hi = self.ctx.round_decimal(&self.lambda * &p);
        let g_hi = self.ctx.round_decimal(&self.mu * &p);
        let e_lo = &e_hi - BigDecimal::new(BigInt::from(162), 2);
        let g_lo = &g_hi - BigDecimal::new(BigInt::from(45), 2);
        let e = BigDecimal::from(eta(cd, j as i64));
        let g = BigDecimal::from(gamma(cd, j as i64));
        GrowthCheck { eta_within: e_lo < e && e < e_hi, gamma_within: g_lo < g && g < g_hi }
    }
}
