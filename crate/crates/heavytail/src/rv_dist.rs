//! One-dimensional regularly varying distributions.
//!
//! The canonical family is Pareto: `P(|X| > x) = L(x) x^{-alpha}` for
//! `x >= support_min`, with `L` a slowly varying factor. A two-sided variable
//! is `S * |X|` where `S = +1` with probability `p` (the tail balance
//! parameter) and `-1` otherwise, so both tails carry the same index.

use crate::error::{Error, Result};
use rand::Rng;

/// Plain function handle for an explicitly supplied slowly varying factor.
pub type SvHandle = fn(f64) -> f64;

/// Symbolic specification of the slowly varying factor `L(x)`.
///
/// The three variants are the cases in which the ratio limit of two slowly
/// varying factors has a closed form: exact constants, functions with a known
/// finite limit, and `a log x + b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SlowlyVaryingSpec {
    /// `L(x) = c`, `c > 0`.
    Constant(f64),
    /// `L(x) -> c` as `x -> inf`, with the function itself available.
    ConvergentTo { limit: f64, eval: SvHandle },
    /// `L(x) = a log x + b`, `a >= 0`, `b >= 0`, `a + b > 0`.
    Log { a: f64, b: f64 },
}

impl SlowlyVaryingSpec {
    pub fn value(&self, x: f64) -> f64 {
        match *self {
            SlowlyVaryingSpec::Constant(c) => c,
            SlowlyVaryingSpec::ConvergentTo { eval, .. } => eval(x),
            SlowlyVaryingSpec::Log { a, b } => a * x.ln() + b,
        }
    }

    /// The limit of `L(x)` as `x -> inf`; `None` for genuinely growing specs.
    pub fn limit_constant(&self) -> Option<f64> {
        match *self {
            SlowlyVaryingSpec::Constant(c) => Some(c),
            SlowlyVaryingSpec::ConvergentTo { limit, .. } => Some(limit),
            SlowlyVaryingSpec::Log { a, b } => (a == 0.0).then_some(b),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            SlowlyVaryingSpec::Constant(c) => c > 0.0 && c.is_finite(),
            SlowlyVaryingSpec::ConvergentTo { limit, .. } => limit > 0.0 && limit.is_finite(),
            SlowlyVaryingSpec::Log { a, b } => a >= 0.0 && b >= 0.0 && a + b > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter {
                name: "sv",
                reason: format!("{self:?} is not strictly positive for x > 1"),
            })
        }
    }
}

/// A regularly varying distribution with tail index `alpha` and tail balance
/// `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegVarDist {
    alpha: f64,
    p: f64,
    sv: SlowlyVaryingSpec,
    support_min: f64,
}

impl RegVarDist {
    /// Canonical Pareto on `[1, inf)`: `P(X > x) = x^{-alpha}`.
    pub fn pareto(alpha: f64) -> Result<Self> {
        Self::new(alpha, 1.0, SlowlyVaryingSpec::Constant(1.0), 1.0)
    }

    /// One-sided Pareto with scale: `P(X > x) = (x/scale)^{-alpha}`.
    pub fn pareto_scaled(alpha: f64, scale: f64) -> Result<Self> {
        Self::new(
            alpha,
            1.0,
            SlowlyVaryingSpec::Constant(scale.powf(alpha)),
            scale,
        )
    }

    /// Two-sided reflected Pareto: `S * |X|` with `|X|` Pareto on `[1, inf)`
    /// and `P(S = +1) = p`.
    pub fn two_sided(alpha: f64, p: f64) -> Result<Self> {
        Self::new(alpha, p, SlowlyVaryingSpec::Constant(1.0), 1.0)
    }

    pub fn new(alpha: f64, p: f64, sv: SlowlyVaryingSpec, support_min: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                reason: format!("tail index must be a positive real, got {alpha}"),
            });
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter {
                name: "p",
                reason: format!("tail balance must lie in [0, 1], got {p}"),
            });
        }
        if !(support_min > 0.0 && support_min.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "support_min",
                reason: format!("scale must be a positive real, got {support_min}"),
            });
        }
        sv.validate()?;
        if let SlowlyVaryingSpec::Constant(c) = sv {
            // P(|X| > support_min) must be exactly 1.
            let implied = c.powf(1.0 / alpha);
            if (implied - support_min).abs() > 1e-9 * support_min {
                return Err(Error::InvalidParameter {
                    name: "sv",
                    reason: format!(
                        "constant {c} implies support {implied}, got support_min {support_min}"
                    ),
                });
            }
        }
        Ok(RegVarDist {
            alpha,
            p,
            sv,
            support_min,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn sv(&self) -> SlowlyVaryingSpec {
        self.sv
    }

    pub fn support_min(&self) -> f64 {
        self.support_min
    }

    /// Limiting constant of the slowly varying factor.
    pub fn sv_constant(&self) -> f64 {
        self.sv
            .limit_constant()
            .unwrap_or_else(|| self.sv.value(self.support_min))
    }

    /// Right tail `P(X > x)`, total over all real `x`.
    pub fn tail(&self, x: f64) -> f64 {
        let m = self.support_min;
        if x >= m {
            (self.p * self.sv.value(x) * x.powf(-self.alpha)).clamp(0.0, 1.0)
        } else if x >= -m {
            // no mass in (-m, m); everything above x on the right side
            if self.p == 1.0 {
                1.0
            } else {
                self.p
            }
        } else {
            (1.0 - (1.0 - self.p) * self.sv.value(-x) * (-x).powf(-self.alpha)).clamp(0.0, 1.0)
        }
    }

    /// Distribution function `P(X <= x)`.
    ///
    /// Computed directly on each branch so the left tail keeps full relative
    /// precision (it is the conditioning branch for negative scales).
    pub fn cdf(&self, x: f64) -> f64 {
        let m = self.support_min;
        if x >= m {
            (1.0 - self.p * self.sv.value(x) * x.powf(-self.alpha)).clamp(0.0, 1.0)
        } else if x >= -m {
            1.0 - self.p
        } else {
            ((1.0 - self.p) * self.sv.value(-x) * (-x).powf(-self.alpha)).clamp(0.0, 1.0)
        }
    }

    /// Inverse of the distribution function on `(0, 1)`.
    ///
    /// Exact closed form for constant slowly varying factors; monotone
    /// bisection otherwise.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::Domain(format!("quantile requires u in (0,1), got {u}")));
        }
        let m = self.support_min;
        if let SlowlyVaryingSpec::Constant(_) = self.sv {
            // tail(x) = p (x/m)^-a on the right, cdf(x) = (1-p)(|x|/m)^-a on the left
            return Ok(if u <= 1.0 - self.p {
                -m * ((1.0 - self.p) / u).powf(1.0 / self.alpha)
            } else {
                m * (self.p / (1.0 - u)).powf(1.0 / self.alpha)
            });
        }
        // bracket then bisect on the cdf
        let (mut lo, mut hi) = if u >= 1.0 - self.p { (m, 2.0 * m) } else { (-2.0 * m, -m) };
        if u >= 1.0 - self.p {
            while self.cdf(hi) < u {
                hi *= 2.0;
            }
        } else {
            while self.cdf(lo) > u {
                lo *= 2.0;
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if self.cdf(mid) < u {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// One exact inverse-transform draw.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u = rng.random::<f64>().max(f64::MIN_POSITIVE);
        self.quantile(u).expect("u in (0,1)")
    }
}

/// Limit of `L_eps(n^theta_F) / L_F(n^theta_eps)` as `n -> inf`, in the
/// extended nonnegative reals.
///
/// Evaluated symbolically per variant pair: constants (and convergent
/// functions) contribute their limits; `a log x + b` factors grow like
/// `a theta log n`, so two log specs yield the ratio of leading coefficients
/// scaled by the exponents, and a log spec against a constant spec diverges.
pub fn sv_ratio_limit(
    sv_eps: SlowlyVaryingSpec,
    sv_f: SlowlyVaryingSpec,
    theta_f: f64,
    theta_eps: f64,
) -> f64 {
    let grows = |sv: SlowlyVaryingSpec| matches!(sv, SlowlyVaryingSpec::Log { a, .. } if a > 0.0);
    match (grows(sv_eps), grows(sv_f)) {
        (true, true) => {
            let (a_eps, a_f) = match (sv_eps, sv_f) {
                (SlowlyVaryingSpec::Log { a: a2, .. }, SlowlyVaryingSpec::Log { a: a1, .. }) => {
                    (a2, a1)
                }
                _ => unreachable!(),
            };
            (a_eps * theta_f) / (a_f * theta_eps)
        }
        (true, false) => f64::INFINITY,
        (false, true) => 0.0,
        (false, false) => {
            let c_eps = sv_eps.limit_constant().expect("non-growing spec has a limit");
            let c_f = sv_f.limit_constant().expect("non-growing spec has a limit");
            c_eps / c_f
        }
    }
}

/// Hill estimator of the tail index from the `k` largest order statistics of
/// `|samples|`.
///
/// Diagnostic only: used to check that samplers produce the declared index.
pub fn hill_estimate(samples: &[f64], k: usize) -> Result<f64> {
    if k == 0 || k >= samples.len() {
        return Err(Error::Diagnostic(format!(
            "need 0 < k < len, got k = {k} with {} samples",
            samples.len()
        )));
    }
    let mut magnitudes: Vec<f64> = samples.iter().map(|x| x.abs()).collect();
    // k+1 largest: indices [0, k] after partitioning by descending order
    let cut = magnitudes.len() - 1 - k;
    magnitudes.select_nth_unstable_by(cut, |a, b| a.partial_cmp(b).unwrap());
    let upper = &magnitudes[cut..];
    let threshold = upper.iter().cloned().fold(f64::INFINITY, f64::min);
    if threshold <= 0.0 {
        return Err(Error::Diagnostic(
            "fewer than k+1 positive magnitudes".to_string(),
        ));
    }
    let mut log_excess = 0.0;
    for &v in upper {
        if v > threshold {
            log_excess += (v / threshold).ln();
        }
    }
    if log_excess <= 0.0 {
        return Err(Error::Diagnostic(
            "no tail variation among the k largest samples".to_string(),
        ));
    }
    Ok(k as f64 / log_excess)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pareto_tail_values() {
        let d = RegVarDist::pareto(3.0).unwrap();
        assert_eq!(d.tail(1.0), 1.0);
        assert!((d.tail(10.0) - 1e-3).abs() < 1e-18);
        let d5 = RegVarDist::pareto(5.0).unwrap();
        assert!((d5.tail(100.0) - 1e-10).abs() < 1e-24);
        // below support clamps to 1 in the one-sided case
        assert_eq!(d.tail(0.5), 1.0);
        assert_eq!(d.tail(-3.0), 1.0);
    }

    #[test]
    fn quantile_pareto() {
        let d = RegVarDist::pareto(3.0).unwrap();
        assert!((d.quantile(1e-12).unwrap() - 1.0).abs() < 1e-9);
        assert!((d.quantile(1.0 - 1e-3).unwrap() - 10.0).abs() < 1e-9);
        assert!(d.quantile(0.0).is_err());
        assert!(d.quantile(1.0).is_err());
    }

    #[test]
    fn quantile_two_sided_left_branch() {
        // 0.5 * t^-3 = 0.25 on the left tail => x = -2^(1/3)
        let d = RegVarDist::two_sided(3.0, 0.5).unwrap();
        let x = d.quantile(0.25).unwrap();
        assert!((x + 2f64.powf(1.0 / 3.0)).abs() < 1e-12);
        // cross-check by numeric root-finding on the cdf
        let (mut lo, mut hi) = (-100.0, -1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if d.cdf(mid) < 0.25 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        assert!((x - 0.5 * (lo + hi)).abs() < 1e-9);
    }

    #[test]
    fn sv_ratio_limit_cases() {
        use SlowlyVaryingSpec::*;
        assert_eq!(sv_ratio_limit(Constant(1.0), Constant(1.0), 2.0, 1.0), 1.0);
        assert_eq!(sv_ratio_limit(Constant(2.0), Constant(2.0), 1.7, 0.7), 1.0);
        let r = sv_ratio_limit(Log { a: 1.0, b: 0.0 }, Log { a: 1.0, b: 0.0 }, 2.0, 1.0);
        assert!((r - 2.0).abs() < 1e-15);
        assert_eq!(
            sv_ratio_limit(Log { a: 1.0, b: 0.0 }, Constant(1.0), 2.0, 1.0),
            f64::INFINITY
        );
        assert_eq!(
            sv_ratio_limit(Constant(1.0), Log { a: 1.0, b: 0.0 }, 2.0, 1.0),
            0.0
        );
        // degenerate a = 0 falls back to the constant b
        assert_eq!(
            sv_ratio_limit(Log { a: 0.0, b: 3.0 }, Constant(1.0), 2.0, 1.0),
            3.0
        );
    }

    #[test]
    fn log_ratio_limit_matches_numeric_evaluation() {
        // lim (theta_F log n)/(theta_eps log n) at n = 1e6 is already close
        let num = SlowlyVaryingSpec::Log { a: 1.0, b: 0.0 };
        let n: f64 = 1e6;
        let numeric = num.value(n.powf(2.0)) / num.value(n.powf(1.0));
        assert!((numeric - 2.0).abs() < 1e-12);
    }

    #[test]
    fn hill_rejects_degenerate_input() {
        let flat = vec![2.0; 100];
        assert!(hill_estimate(&flat, 10).is_err());
        assert!(hill_estimate(&flat, 100).is_err());
    }

    #[test]
    fn convergent_spec_uses_handle() {
        fn l(x: f64) -> f64 {
            2.0 * (1.0 + 1.0 / x)
        }
        let sv = SlowlyVaryingSpec::ConvergentTo { limit: 2.0, eval: l };
        assert_eq!(sv.limit_constant(), Some(2.0));
        assert!((sv.value(10.0) - 2.2).abs() < 1e-15);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(RegVarDist::pareto(0.0).is_err());
        assert!(RegVarDist::two_sided(3.0, 1.5).is_err());
        assert!(RegVarDist::new(3.0, 1.0, SlowlyVaryingSpec::Constant(-1.0), 1.0).is_err());
        // constant inconsistent with the declared support
        assert!(RegVarDist::new(3.0, 1.0, SlowlyVaryingSpec::Constant(2.0), 1.0).is_err());
    }

    proptest! {
        #[test]
        fn tail_monotone_and_in_range(
            alpha in 2.1f64..8.0,
            p in 0.0f64..=1.0,
            x1 in -50.0f64..50.0,
            dx in 0.0f64..50.0,
        ) {
            let d = RegVarDist::two_sided(alpha, p).unwrap();
            let (t1, t2) = (d.tail(x1), d.tail(x1 + dx));
            prop_assert!((0.0..=1.0).contains(&t1));
            prop_assert!((0.0..=1.0).contains(&t2));
            prop_assert!(t1 >= t2);
        }

        #[test]
        fn quantile_cdf_roundtrip(
            alpha in 2.1f64..8.0,
            p in 0.05f64..=1.0,
            u in 1e-6f64..0.999999,
        ) {
            let d = RegVarDist::two_sided(alpha, p).unwrap();
            let x = d.quantile(u).unwrap();
            let back = d.cdf(x);
            prop_assert!((back - u).abs() <= 1e-12 * u.max(1e-3));
        }

        #[test]
        fn exact_power_law(alpha in 2.1f64..8.0, p in 0.1f64..=1.0, x in 1.0f64..1e6) {
            let d = RegVarDist::two_sided(alpha, p).unwrap();
            let t = d.tail(x);
            if t < 1.0 {
                // tail(x) * x^alpha / p recovers the constant 1 exactly
                let c = t * x.powf(alpha) / p;
                prop_assert!((c - 1.0).abs() <= 1e-14 * c.max(1.0));
            }
        }
    }
}
