//! Lévy-flight step sampling and the mapping from flight magnitude to an
//! i-inversion move on a solution.
//!
//! Heavy-tailed step magnitudes come from Mantegna's two-normal
//! construction. A magnitude is squashed into `[0,1]`, binned into one of
//! `m` subintervals, and the subinterval selects the number of consecutive
//! bits to invert (at most `n / h`).

use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solution::{filter_of, repair_of, CandidateSolution};

/// Parameters of the Lévy move generator.
#[derive(Clone, Debug, PartialEq)]
pub struct LevyParams {
    /// Stable-distribution exponent β, `1 < β ≤ 3`.
    pub lambda: f64,
    /// Step scale α, `> 0`.
    pub alpha: f64,
    /// Number of subintervals of `[0,1]`.
    pub m_intervals: usize,
    /// Divisor defining the maximum inversion length `max_l = n / h`.
    pub h_divisor: usize,
}

impl LevyParams {
    pub fn new(lambda: f64, alpha: f64, m_intervals: usize, h_divisor: usize) -> Result<Self> {
        let p = Self { lambda, alpha, m_intervals, h_divisor };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda.is_nan() || self.lambda <= 1.0 || self.lambda > 3.0 {
            return Err(Error::Validation(format!(
                "lambda must satisfy 1 < lambda <= 3, got {}",
                self.lambda
            )));
        }
        if self.alpha.is_nan() || self.alpha <= 0.0 {
            return Err(Error::Validation(format!("alpha must be > 0, got {}", self.alpha)));
        }
        if self.m_intervals == 0 {
            return Err(Error::Validation("m_intervals must be >= 1".into()));
        }
        if self.h_divisor == 0 {
            return Err(Error::Validation("h_divisor must be >= 1".into()));
        }
        Ok(())
    }

    /// Mantegna's numerator standard deviation
    /// `σ_u(β) = [Γ(1+β)·sin(πβ/2) / (Γ((1+β)/2)·β·2^((β−1)/2))]^(1/β)`.
    pub fn mantegna_sigma(&self) -> f64 {
        let beta = self.lambda;
        let num = statrs::function::gamma::gamma(1.0 + beta) * (std::f64::consts::PI * beta / 2.0).sin();
        let den = statrs::function::gamma::gamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
        (num / den).powf(1.0 / beta)
    }
}

impl Default for LevyParams {
    /// β = 3/2 and α = 1 with ten subintervals and `max_l = n/2`.
    fn default() -> Self {
        Self { lambda: 1.5, alpha: 1.0, m_intervals: 10, h_divisor: 2 }
    }
}

/// Draws one step magnitude `α·|u / |v|^{1/β}|` with `u ~ N(0, σ_u²)` and
/// `v ~ N(0, 1)`. Consumes exactly two normal variates from `rng`, `u` first.
pub fn sample_levy_magnitude<R: Rng + ?Sized>(rng: &mut R, p: &LevyParams) -> f64 {
    let sigma = p.mantegna_sigma();
    let u = Normal::new(0.0, sigma).expect("valid sigma").sample(rng);
    let v: f64 = Normal::new(0.0, 1.0).expect("standard normal").sample(rng);
    let den = v.abs().powf(1.0 / p.lambda);
    if den == 0.0 {
        return f64::INFINITY;
    }
    p.alpha * (u / den).abs()
}

/// Squashes a non-negative magnitude into `[0,1]` via `1 − exp(−mag)`.
pub fn theta_from_magnitude(mag: f64) -> f64 {
    debug_assert!(mag >= 0.0);
    1.0 - (-mag).exp()
}

/// Picks the inversion length for a squashed flight value.
///
/// `[0,1]` is split into `m` subintervals; subinterval `k` maps to lengths
/// `[max(1, ⌈k·max_l/m⌉), max(1, ⌈(k+1)·max_l/m⌉)]` with `max_l = ⌊n/h⌋`
/// (clamped to at least 1), and the length is drawn uniformly from that
/// integer range. Always returns `1 ≤ i ≤ max(1, ⌊n/h⌋)`.
pub fn step_length<R: Rng + ?Sized>(theta: f64, n: usize, p: &LevyParams, rng: &mut R) -> usize {
    let m = p.m_intervals;
    let max_l = (n / p.h_divisor).max(1);
    let k = ((theta * m as f64) as usize).min(m - 1);
    let lo = (k * max_l).div_ceil(m).max(1);
    let hi = ((k + 1) * max_l).div_ceil(m).max(1).min(max_l);
    let lo = lo.min(hi);
    rng.gen_range(lo..=hi)
}

/// Flips the `len` consecutive bits starting at `start`.
pub fn i_inversion(s: &CandidateSolution, start: usize, len: usize) -> Result<CandidateSolution> {
    let n = s.len();
    if len == 0 || len > n {
        return Err(Error::Range(format!("inversion length {len} outside 1..={n}")));
    }
    if start + len > n {
        return Err(Error::Range(format!(
            "inversion start {start} with length {len} exceeds vector of length {n}"
        )));
    }
    let mut out = s.clone();
    for i in start..start + len {
        out.flip(i);
    }
    Ok(out)
}

/// One full Lévy move: magnitude → θ → inversion length → random start →
/// i-inversion, then reparation and filtering so the result is a dominating
/// solution. Consumes, in order: two normals, one length draw, one start draw.
pub fn levy_perturb<R: Rng + ?Sized>(
    g: &Graph,
    s: &CandidateSolution,
    p: &LevyParams,
    rng: &mut R,
) -> Result<CandidateSolution> {
    if s.len() != g.n() {
        return Err(Error::Validation(format!(
            "solution length {} does not match vertex count {}",
            s.len(),
            g.n()
        )));
    }
    let mag = sample_levy_magnitude(rng, p);
    let theta = theta_from_magnitude(mag);
    let len = step_length(theta, g.n(), p, rng);
    let start = rng.gen_range(0..=g.n() - len);
    let flipped = i_inversion(s, start, len)?;
    Ok(filter_of(g, &repair_of(g, &flipped)))
}
