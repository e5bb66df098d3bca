//! Parameter conversions, curvature regimes, eigenvalue lower bounds and
//! volume normalisation.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, one, sqrt_exact, to_f64, Rational};
use crate::spectrum::{first_eigenvalue, MetricParams};

/// Parameters (r₀, r₁) of the bi-invariant form on su(3) ⊕ so(3).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalParams {
    r0: Rational,
    r1: Rational,
}

impl NormalParams {
    /// Requires r₀ > 0 and r₁ ∈ (−∞, −r₀) ∪ (0, ∞).
    pub fn new(r0: Rational, r1: Rational) -> Result<Self> {
        let ok = r0.is_positive() && (r1.is_positive() || r1 < -r0.clone());
        if !ok {
            return Err(Error::InvalidNormalParams { r0, r1 });
        }
        Ok(NormalParams { r0, r1 })
    }

    pub fn r0(&self) -> &Rational {
        &self.r0
    }

    pub fn r1(&self) -> &Rational {
        &self.r1
    }
}

/// Structure constants (α, δ) of a homogeneous 3-(α,δ)-Sasaki structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SasakiParams {
    alpha: Rational,
    delta: Rational,
}

impl SasakiParams {
    /// Positive case only: αδ > 0.
    pub fn new(alpha: Rational, delta: Rational) -> Result<Self> {
        let reason = if alpha.is_zero() {
            Some("alpha must be nonzero")
        } else if !(&alpha * &delta).is_positive() {
            Some("need alpha*delta > 0")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidSasakiParams {
                alpha,
                delta,
                reason,
            }),
            None => Ok(SasakiParams { alpha, delta }),
        }
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    /// 2αδ, the scale of the basic lower bounds.
    pub fn two_alpha_delta(&self) -> Rational {
        int(2) * &self.alpha * &self.delta
    }
}

/// t₀ = r₀, t₁ = r₀r₁/(r₀+r₁).
pub fn convert_r_to_t(r: &NormalParams) -> MetricParams {
    let t1 = r.r0() * r.r1() / (r.r0() + r.r1());
    MetricParams::new(r.r0().clone(), t1).expect("valid normal params give a positive metric")
}

/// r₀ = t₀, r₁ = t₁t₀/(t₀−t₁).
pub fn convert_t_to_r(t: &MetricParams) -> Result<NormalParams> {
    if t.t0() == t.t1() {
        return Err(Error::ParallelPoint(t.t0().clone()));
    }
    let r1 = t.t1() * t.t0() / (t.t0() - t.t1());
    NormalParams::new(t.t0().clone(), r1)
}

/// t₀ = 1/(2αδ), t₁ = 1/δ².
pub fn convert_sasaki_to_t(s: &SasakiParams) -> MetricParams {
    let t0 = one() / s.two_alpha_delta();
    let t1 = one() / (s.delta() * s.delta());
    MetricParams::new(t0, t1).expect("alpha*delta > 0 gives a positive metric")
}

/// Inverse of [`convert_sasaki_to_t`] with δ > 0. Exact only when t₁ is the
/// square of a rational.
pub fn convert_t_to_sasaki(t: &MetricParams) -> Result<SasakiParams> {
    let root = sqrt_exact(t.t1()).ok_or_else(|| Error::NotARationalSquare(t.t1().clone()))?;
    let delta = one() / root;
    let alpha = one() / (int(2) * t.t0() * &delta);
    SasakiParams::new(alpha, delta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurvatureRegime {
    /// t₁ < t₀: normal homogeneous.
    PositiveNormal,
    /// t₁ = t₀.
    Parallel,
    /// t₁ > t₀: naturally reductive with an indefinite form.
    NaturallyReductiveOnly,
}

impl CurvatureRegime {
    pub fn as_str(self) -> &'static str {
        match self {
            CurvatureRegime::PositiveNormal => "positive_normal",
            CurvatureRegime::Parallel => "parallel",
            CurvatureRegime::NaturallyReductiveOnly => "naturally_reductive_only",
        }
    }
}

impl fmt::Display for CurvatureRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn curvature_regime(t: &MetricParams) -> CurvatureRegime {
    match t.t1().cmp(t.t0()) {
        std::cmp::Ordering::Less => CurvatureRegime::PositiveNormal,
        std::cmp::Ordering::Equal => CurvatureRegime::Parallel,
        std::cmp::Ordering::Greater => CurvatureRegime::NaturallyReductiveOnly,
    }
}

/// Families of homogeneous positive 3-(α,δ)-Sasaki manifolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SasakiFamily {
    /// SU(n+2)/S(U(n)×U(1)) and SO(2m)-type spaces.
    SuSoEven,
    /// SO(2m+1)- and Sp(m)-type spaces.
    SoOddSp,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl SasakiFamily {
    pub const ALL: [SasakiFamily; 7] = [
        SasakiFamily::SuSoEven,
        SasakiFamily::SoOddSp,
        SasakiFamily::E6,
        SasakiFamily::E7,
        SasakiFamily::E8,
        SasakiFamily::F4,
        SasakiFamily::G2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SasakiFamily::SuSoEven => "su-so-even",
            SasakiFamily::SoOddSp => "so-odd-sp",
            SasakiFamily::E6 => "e6",
            SasakiFamily::E7 => "e7",
            SasakiFamily::E8 => "e8",
            SasakiFamily::F4 => "f4",
            SasakiFamily::G2 => "g2",
        }
    }

    /// Bound divided by 2αδ.
    fn coefficient(self, n: i64) -> i64 {
        match self {
            SasakiFamily::SuSoEven => 4 * (n + 2),
            SasakiFamily::SoOddSp => 4 * (n + 1),
            SasakiFamily::E6 => 48,
            SasakiFamily::E7 => 72,
            SasakiFamily::E8 => 120,
            SasakiFamily::F4 => 32,
            SasakiFamily::G2 => 12,
        }
    }
}

impl FromStr for SasakiFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['_', '/'], "-");
        let family = match key.as_str() {
            "su-so-even" | "susoeven" | "su-so" => SasakiFamily::SuSoEven,
            "so-odd-sp" | "sooddsp" | "so-sp" => SasakiFamily::SoOddSp,
            "e6" => SasakiFamily::E6,
            "e7" => SasakiFamily::E7,
            "e8" => SasakiFamily::E8,
            "f4" => SasakiFamily::F4,
            "g2" => SasakiFamily::G2,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        Ok(family)
    }
}

impl fmt::Display for SasakiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Lower bound for the first nonzero basic eigenvalue of a family member.
pub fn basic_lower_bound(family: SasakiFamily, n: i64, s: &SasakiParams) -> Result<Rational> {
    if n < 1 {
        return Err(Error::Domain(format!("n must be at least 1, got {n}")));
    }
    Ok(s.two_alpha_delta() * int(family.coefficient(n)))
}

fn check_t1(t1: &Rational) -> Result<()> {
    if !t1.is_positive() {
        return Err(Error::NonPositiveMetric {
            t0: one(),
            t1: t1.clone(),
        });
    }
    Ok(())
}

/// 8(n + 1/t₁) for t₁ ≥ 1 and 8(n+1) for t₁ ≤ 1.
pub fn f1(t1: &Rational, n: i64) -> Result<Rational> {
    check_t1(t1)?;
    let tail = if *t1 >= one() { one() / t1 } else { one() };
    Ok(int(8) * (int(n) + tail))
}

/// Value of the Ricci-curvature eigenvalue bound together with whether the
/// underlying Ricci bound is positive at this t₁.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Bound {
    pub value: Rational,
    pub valid: bool,
}

/// Two-case bound, valid for t₁ < (2n+4)/3.
pub fn f2(t1: &Rational, n: i64) -> Result<F2Bound> {
    check_t1(t1)?;
    if n < 1 {
        return Err(Error::Domain(format!("n must be at least 1, got {n}")));
    }
    let (a, b) = (int(4 * n + 3), int(2 * n + 1));
    let lower = one() / int(2 * n + 3);
    let value = if *t1 > lower && *t1 < one() {
        (int(2 * n) * t1 * t1 * &a + &a) / (t1 * &b)
    } else {
        &a * (int(2 * n + 4) - int(3) * t1) / &b
    };
    let valid = *t1 < int(2 * n + 4) / int(3);
    Ok(F2Bound { value, valid })
}

/// t₀⁴t₁³, the square of the volume up to a universal constant.
pub fn volume_factor(t: &MetricParams) -> Rational {
    let t0_2 = t.t0() * t.t0();
    t0_2.clone() * t0_2 * t.t1() * t.t1() * t.t1()
}

/// η₁·(t₀⁴t₁³)^{1/7}, scale invariant up to a universal constant.
pub fn volume_normalized_eigenvalue(t: &MetricParams) -> f64 {
    to_f64(&first_eigenvalue(t)) * to_f64(&volume_factor(t)).powf(1.0 / 7.0)
}

/// Metric on the constant-volume curve t₁ = s⁴, t₀ = s⁻³.
pub fn constant_volume_point(s: &Rational) -> Result<MetricParams> {
    if !s.is_positive() {
        return Err(Error::Domain(format!("s must be positive, got {s}")));
    }
    let s2 = s * s;
    let t1 = &s2 * &s2;
    let t0 = one() / (s2 * s);
    MetricParams::new(t0, t1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::spectrum::{basic_spectrum, first_eigenvalue};

    fn mp(t0: Rational, t1: Rational) -> MetricParams {
        MetricParams::new(t0, t1).unwrap()
    }

    #[test]
    fn r_to_t_examples() {
        let t = convert_r_to_t(&NormalParams::new(int(12), int(8)).unwrap());
        assert_eq!((t.t0(), t.t1()), (&int(12), &ratio(24, 5)));
        let t = convert_r_to_t(&NormalParams::new(int(1), int(-2)).unwrap());
        assert_eq!((t.t0(), t.t1()), (&int(1), &int(2)));
        assert!(NormalParams::new(int(1), int(-1)).is_err());
        assert!(NormalParams::new(int(1), ratio(-1, 2)).is_err());
        assert!(NormalParams::new(int(1), int(0)).is_err());
        assert!(NormalParams::new(int(0), int(1)).is_err());
    }

    #[test]
    fn t_to_r_round_trip() {
        for (a, b) in [(1, 2), (3, 1), (7, 5), (1, 9), (12, 8)] {
            let t = mp(ratio(a, 3), ratio(b, 4));
            if t.t0() == t.t1() {
                continue;
            }
            let r = convert_t_to_r(&t).unwrap();
            assert_eq!(convert_r_to_t(&r), t);
        }
        assert_eq!(
            convert_t_to_r(&mp(int(1), int(1))),
            Err(Error::ParallelPoint(int(1)))
        );
    }

    #[test]
    fn sasaki_examples() {
        let t = convert_sasaki_to_t(&SasakiParams::new(int(1), int(1)).unwrap());
        assert_eq!(t, mp(ratio(1, 2), int(1)));
        for a in 1..6 {
            let alpha = ratio(a, 7);
            let t =
                convert_sasaki_to_t(&SasakiParams::new(alpha.clone(), int(2) * &alpha).unwrap());
            assert_eq!(t.t0(), t.t1());
            // δ = 5α always gives t₁/t₀ = 2/5, e.g. t₀ = 12 ↦ t₁ = 24/5
            let t =
                convert_sasaki_to_t(&SasakiParams::new(alpha.clone(), int(5) * &alpha).unwrap());
            assert_eq!(t.t1() / t.t0(), ratio(2, 5));
        }
        assert!(SasakiParams::new(int(1), int(-1)).is_err());
        assert!(SasakiParams::new(int(0), int(1)).is_err());
        assert!(SasakiParams::new(int(-1), int(-2)).is_ok());
    }

    #[test]
    fn sasaki_inverse() {
        let s = convert_t_to_sasaki(&mp(ratio(1, 2), int(1))).unwrap();
        assert_eq!((s.alpha(), s.delta()), (&int(1), &int(1)));
        for (a, d) in [(1, 3), (2, 5), (7, 2)] {
            let s = SasakiParams::new(ratio(a, 3), ratio(d, 2)).unwrap();
            assert_eq!(convert_t_to_sasaki(&convert_sasaki_to_t(&s)).unwrap(), s);
        }
        // the negative representative maps back to the positive one
        let neg = SasakiParams::new(int(-1), int(-1)).unwrap();
        let back = convert_t_to_sasaki(&convert_sasaki_to_t(&neg)).unwrap();
        assert_eq!(back, SasakiParams::new(int(1), int(1)).unwrap());
        assert_eq!(
            convert_t_to_sasaki(&mp(int(12), ratio(24, 5))),
            Err(Error::NotARationalSquare(ratio(24, 5)))
        );
    }

    #[test]
    fn regimes() {
        let h = ratio(1, 2);
        assert_eq!(
            curvature_regime(&mp(h.clone(), ratio(1, 4))),
            CurvatureRegime::PositiveNormal
        );
        assert_eq!(
            curvature_regime(&mp(h.clone(), h.clone())),
            CurvatureRegime::Parallel
        );
        assert_eq!(
            curvature_regime(&mp(h, int(1))),
            CurvatureRegime::NaturallyReductiveOnly
        );
    }

    #[test]
    fn lower_bounds() {
        let s = SasakiParams::new(ratio(1, 3), ratio(3, 4)).unwrap();
        let tad = s.two_alpha_delta();
        assert_eq!(
            basic_lower_bound(SasakiFamily::SuSoEven, 1, &s).unwrap(),
            &tad * int(12)
        );
        assert_eq!(
            basic_lower_bound(SasakiFamily::SoOddSp, 2, &s).unwrap(),
            &tad * int(12)
        );
        assert_eq!(
            basic_lower_bound(SasakiFamily::G2, 5, &s).unwrap(),
            &tad * int(12)
        );
        assert_eq!(
            basic_lower_bound(SasakiFamily::E8, 1, &s).unwrap(),
            &tad * int(120)
        );
        assert!(basic_lower_bound(SasakiFamily::E6, 0, &s).is_err());
        assert_eq!("E7".parse::<SasakiFamily>().unwrap(), SasakiFamily::E7);
        assert_eq!(
            "SU/SO_even".parse::<SasakiFamily>().unwrap(),
            SasakiFamily::SuSoEven
        );
        assert!(matches!(
            "A5".parse::<SasakiFamily>(),
            Err(Error::UnknownFamily(_))
        ));
        for f in SasakiFamily::ALL {
            assert_eq!(f.as_str().parse::<SasakiFamily>().unwrap(), f);
        }
    }

    #[test]
    fn basic_bound_is_attained() {
        for (a, d) in [(1, 1), (1, 2), (1, 3), (2, 1), (3, 5), (1, 7)] {
            let s = SasakiParams::new(ratio(a, 2), ratio(d, 3)).unwrap();
            let t = convert_sasaki_to_t(&s);
            let bound = basic_lower_bound(SasakiFamily::SuSoEven, 1, &s).unwrap();
            let b = basic_spectrum(&t, &(&bound * int(2))).unwrap();
            assert_eq!(b.entries[1].eigenvalue, bound);
        }
    }

    #[test]
    fn f1_examples() {
        for n in 1..5 {
            assert_eq!(f1(&int(1), n).unwrap(), int(8 * (n + 1)));
        }
        assert_eq!(f1(&int(2), 1).unwrap(), int(12));
        assert_eq!(f1(&ratio(1, 2), 1).unwrap(), int(16));
        assert!(f1(&int(0), 1).is_err());
    }

    #[test]
    fn f2_examples_and_continuity() {
        assert_eq!(f2(&int(1), 1).unwrap().value, int(7));
        assert_eq!(f2(&ratio(1, 5), 1).unwrap().value, ratio(63, 5));
        assert_eq!(
            f2(&ratio(1, 1_000_000), 1).unwrap().value,
            int(14) - ratio(7, 1_000_000)
        );
        assert!(f2(&int(1), 1).unwrap().valid);
        assert!(!f2(&int(2), 1).unwrap().valid);
        for n in 1..6i64 {
            let eps = ratio(1, 1_000_000_007);
            for bp in [one(), ratio(1, 2 * n + 3)] {
                let at = f2(&bp, n).unwrap().value;
                // middle-branch formula evaluated at the breakpoint itself
                let mid = (int(2 * n) * &bp * &bp * int(4 * n + 3) + int(4 * n + 3))
                    / (&bp * int(2 * n + 1));
                assert_eq!(at, mid, "n={n}");
                let left = f2(&(&bp - &eps), n).unwrap().value;
                let right = f2(&(&bp + &eps), n).unwrap().value;
                assert!((to_f64(&left) - to_f64(&at)).abs() < 1e-6);
                assert!((to_f64(&right) - to_f64(&at)).abs() < 1e-6);
            }
            let at_one = f1(&one(), n).unwrap();
            assert_eq!(at_one, int(8) * (int(n) + one()));
        }
    }

    #[test]
    fn estimates_are_dominated() {
        let t0 = ratio(1, 2);
        for k in 1..=60 {
            let t1 = ratio(k, 20);
            let t = mp(t0.clone(), t1.clone());
            let eta = first_eigenvalue(&t);
            assert!(eta >= f1(&t1, 1).unwrap(), "t1={t1}");
            let b = f2(&t1, 1).unwrap();
            if b.valid {
                assert!(eta > b.value, "t1={t1}");
            }
        }
    }

    #[test]
    fn volume() {
        for (p, q) in [(1, 4), (1, 2), (1, 1), (2, 1), (4, 1), (3, 7)] {
            let t = constant_volume_point(&ratio(p, q)).unwrap();
            assert_eq!(volume_factor(&t), one());
        }
        let v = |p, q| volume_normalized_eigenvalue(&constant_volume_point(&ratio(p, q)).unwrap());
        assert!(v(2, 1) > v(1, 1));
        assert!(v(1, 16) < v(1, 1));
        assert!(constant_volume_point(&int(0)).is_err());
    }

    #[test]
    fn horizontal_bound_per_level() {
        let s = SasakiParams::new(ratio(1, 2), int(1)).unwrap();
        let t = convert_sasaki_to_t(&s);
        for z3 in 0..=6i64 {
            let eta_h = int(4 * z3) / t.t0();
            assert!(eta_h >= s.two_alpha_delta() * int(z3));
        }
        let _ = first_eigenvalue(&t);
    }
}
