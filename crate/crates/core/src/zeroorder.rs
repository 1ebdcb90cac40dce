//! Vanishing-order bounds and the certified-valuation pipeline.
//!
//! Three exact integer bounds cap nu(F - G): the rational-approximant
//! bound, the main algebraic bound, and its refined variant (valid when
//! log H >= n). Certification expands both series to the applicable
//! bound: a first differing coefficient at index <= B yields the exact
//! valuation, while agreement through z^B contradicts the asserted
//! hypotheses and is reported as a first-class violation, not an error.

use std::fmt;

use num_traits::Zero;

use crate::algebraic::{sum_annihilator, twist, AlgebraicError, AlgebraicFunction};
use crate::bipoly::BiPoly;
use crate::mahler::{MahlerError, MahlerFunction};
use crate::poly::Poly;
use crate::series::{Series, Valuation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroOrderError {
    /// The refined bound requires log_H >= n >= 1.
    PreconditionViolated { n: u64, log_h: u64 },
    /// certified_nu requires the irrationality assertion on F.
    IrrationalityNotAsserted,
    /// The rational path requires Q(0) != 0.
    DenominatorVanishesAtZero,
    /// Zero denominator is never a rational function.
    ZeroDenominator,
    /// mg_annihilator needs an approximant of degree at least 2; use the
    /// rational path below that.
    DegreeBelowTwo,
    /// Every coefficient of the Mahler equation vanished (cannot happen
    /// for a validated equation, kept for direct calls).
    NoNonzeroCoefficient,
    Mahler(MahlerError),
    Algebraic(AlgebraicError),
}

impl fmt::Display for ZeroOrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroOrderError::PreconditionViolated { n, log_h } => write!(
                f,
                "refined bound requires log_H >= n >= 1, got n = {}, log_H = {}",
                n, log_h
            ),
            ZeroOrderError::IrrationalityNotAsserted => {
                write!(f, "certification requires the irrationality assertion on F")
            }
            ZeroOrderError::DenominatorVanishesAtZero => {
                write!(f, "rational approximant must have Q(0) != 0")
            }
            ZeroOrderError::ZeroDenominator => write!(f, "rational approximant with Q = 0"),
            ZeroOrderError::DegreeBelowTwo => {
                write!(f, "annihilator construction needs degree >= 2 in y")
            }
            ZeroOrderError::NoNonzeroCoefficient => {
                write!(f, "all coefficients of the Mahler equation are zero")
            }
            ZeroOrderError::Mahler(e) => write!(f, "{}", e),
            ZeroOrderError::Algebraic(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for ZeroOrderError {}

impl From<MahlerError> for ZeroOrderError {
    fn from(e: MahlerError) -> Self {
        ZeroOrderError::Mahler(e)
    }
}

impl From<AlgebraicError> for ZeroOrderError {
    fn from(e: AlgebraicError) -> Self {
        ZeroOrderError::Algebraic(e)
    }
}

/// 1 + k + ... + k^d, the factor (k^{d+1} - 1)/(k - 1), summed exactly.
fn geom_sum(k: u64, d: u64) -> u64 {
    assert!(k >= 2, "radix must be at least 2");
    let mut acc: u64 = 0;
    let mut pow: u64 = 1;
    for _ in 0..=d {
        acc = acc.checked_add(pow).expect("bound overflows u64");
        pow = pow.checked_mul(k).expect("bound overflows u64");
    }
    acc
}

fn checked_pow(base: u64, exp: u64) -> u64 {
    let exp = u32::try_from(exp).expect("exponent overflows u32");
    base.checked_pow(exp).expect("bound overflows u64")
}

/// Bound for rational approximants P/Q with Q(0) != 0:
/// A_F + (k^{d_F+1} - 1)/(k - 1) * max(deg P, deg Q).
pub fn bound_rational(d_f: u64, a_f: u64, k: u64, deg_p: u64, deg_q: u64) -> u64 {
    a_f + geom_sum(k, d_f) * deg_p.max(deg_q)
}

/// Main bound for algebraic approximants of degree at most n and
/// log-height log_h:
/// (d_F + 1) * A_F * n^{d_F+1} + (k^{d_F+1} - 1)/(k - 1) * log_h * n^{d_F}.
pub fn bound_algebraic(d_f: u64, a_f: u64, k: u64, n: u64, log_h: u64) -> u64 {
    assert!(n >= 1, "degree bound must be at least 1");
    assert!(k >= 2, "radix must be at least 2");
    (d_f + 1) * a_f * checked_pow(n, d_f + 1) + geom_sum(k, d_f) * log_h * checked_pow(n, d_f)
}

/// Refined bound, valid when log_h >= n >= 1:
/// ((d_F + 1) * A_F + (k^{d_F+1} - 1)/(k - 1)) * log_h * n^{d_F}.
pub fn bound_refined(d_f: u64, a_f: u64, k: u64, n: u64, log_h: u64) -> Result<u64, ZeroOrderError> {
    if n < 1 || log_h < n {
        return Err(ZeroOrderError::PreconditionViolated { n, log_h });
    }
    assert!(k >= 2, "radix must be at least 2");
    Ok(((d_f + 1) * a_f + geom_sum(k, d_f)) * log_h * checked_pow(n, d_f))
}

/// Degrees of a constructed annihilator: delta_y in the eliminated
/// variable's partner (x), delta_z in z.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub delta_y: usize,
    pub delta_z: usize,
}

/// Annihilator of M_G(z) = sum_i a_i(z) G(z^{k^i}): twist each nonzero
/// term, then fold the twists with sum annihilators. Returns the
/// polynomial in (z, x) and its degree profile.
///
/// The profile is checked against the construction bounds on every
/// invocation: delta_y <= Delta_G^m (m = number of nonzero a_i) and
/// delta_z <= (d+1) A Delta_G^{d+1} + (k^{d+1}-1)/(k-1) delta_G Delta_G^d.
pub fn mg_annihilator(
    m: &MahlerFunction,
    g: &AlgebraicFunction,
) -> Result<(BiPoly, DegreeProfile), ZeroOrderError> {
    let delta_g = g.degree_bound();
    if delta_g < 2 {
        return Err(ZeroOrderError::DegreeBelowTwo);
    }
    let (annihilator, terms) = fold_twisted_terms(m.coefficients(), m.radix(), g.annihilator())?;

    let profile = DegreeProfile {
        delta_y: annihilator.deg_y().unwrap_or(0),
        delta_z: annihilator.deg_z().unwrap_or(0),
    };
    let d = m.degree() as u64;
    let a_max = m.height() as u64;
    let dg = delta_g as u64;
    let y_cap = checked_pow(dg, terms as u64);
    let z_cap = (d + 1) * a_max * checked_pow(dg, d + 1)
        + geom_sum(m.radix() as u64, d) * (g.log_height() as u64) * checked_pow(dg, d);
    assert!(
        (profile.delta_y as u64) <= y_cap,
        "constructed annihilator exceeds its y-degree bound"
    );
    assert!(
        (profile.delta_z as u64) <= z_cap,
        "constructed annihilator exceeds its z-degree bound"
    );
    Ok((annihilator, profile))
}

/// Twist each nonzero a_i and fold with sum annihilators. A single
/// nonzero term folds to its own twist (for a_0 = 1 that is P_G itself).
/// Returns the annihilator and the number of nonzero terms.
fn fold_twisted_terms(
    coeffs: &[Poly],
    k: u32,
    p_g: &BiPoly,
) -> Result<(BiPoly, usize), ZeroOrderError> {
    let mut acc: Option<BiPoly> = None;
    let mut terms = 0usize;
    for (i, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let twisted = twist(p_g, a, k, i as u32)?;
        terms += 1;
        acc = Some(match acc {
            None => twisted,
            Some(prev) => sum_annihilator(&prev, &twisted)?,
        });
    }
    let annihilator = acc.ok_or(ZeroOrderError::NoNonzeroCoefficient)?;
    Ok((annihilator, terms))
}

/// A rational approximant P/Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ZeroOrderError> {
        if den.is_zero() {
            return Err(ZeroOrderError::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(num: Poly) -> Self {
        RationalFunction {
            num,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Series of P/Q at the given truncation order; requires Q(0) != 0.
    pub fn expand(&self, order: usize) -> Result<Series, ZeroOrderError> {
        if self.den.coeff(0).is_zero() {
            return Err(ZeroOrderError::DenominatorVanishesAtZero);
        }
        let den_series = Series::from_poly(&self.den, order);
        Ok(den_series.invert().scale_by_poly(&self.num))
    }
}

/// What is being compared against the Mahler function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Approximant {
    Algebraic(AlgebraicFunction),
    Rational(RationalFunction),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Rational,
    Algebraic,
}

impl PathKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PathKind::Rational => "rational",
            PathKind::Algebraic => "algebraic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Lemma1,
    Theorem1,
    Refined,
}

impl BoundKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundKind::Lemma1 => "lemma1",
            BoundKind::Theorem1 => "theorem1",
            BoundKind::Refined => "refined",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertStatus {
    Certified,
    BoundViolated,
}

impl CertStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertStatus::Certified => "certified",
            CertStatus::BoundViolated => "bound_violated",
        }
    }
}

/// Facts the certificate relies on but cannot prove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypotheses {
    /// Irrationality of F, asserted by whoever supplied the equation.
    pub irrational_asserted: bool,
    /// Rational path only: the denominator does not vanish at 0.
    pub q_nonzero_at_zero: Option<bool>,
    /// Algebraic path only: the chosen branch is simple at z = 0.
    pub simple_branch: Option<bool>,
    /// Degree and log-height bounds taken from the supplied data.
    pub degree_bound: u64,
    pub log_height: u64,
    /// d_F and A_F are read from the supplied equation, not minimized.
    pub degrees_from_supplied_equation: bool,
}

/// The outcome of certified valuation.
///
/// `Certified` carries the exact nu with nu <= bound. `BoundViolated`
/// means F and G agree through z^bound, which contradicts the asserted
/// hypotheses (F rational after all, F = G, or mis-stated degrees).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuCertificate {
    pub nu: Valuation,
    pub bound: u64,
    pub expansion_order: u64,
    pub path: PathKind,
    pub bound_kind: BoundKind,
    pub hypotheses: Hypotheses,
    pub status: CertStatus,
}

/// Compute nu(F - G) with an a-priori ceiling: pick the applicable bound
/// B, expand both series to order B exactly, and compare.
pub fn certified_nu(
    m: &MahlerFunction,
    approximant: &Approximant,
) -> Result<NuCertificate, ZeroOrderError> {
    if !m.irrational_asserted() {
        return Err(ZeroOrderError::IrrationalityNotAsserted);
    }
    let d_f = m.degree() as u64;
    let a_f = m.height() as u64;
    let k = m.radix() as u64;

    // Degree-1 annihilators define rational functions; route them to the
    // rational bound, which is sharper.
    let rational_view: Option<RationalFunction> = match approximant {
        Approximant::Rational(r) => Some(r.clone()),
        Approximant::Algebraic(g) if g.degree_bound() == 1 => {
            let p1 = g.annihilator().coeff_y(1);
            let p0 = g.annihilator().coeff_y(0);
            Some(RationalFunction::new(p0.neg(), p1)?)
        }
        Approximant::Algebraic(_) => None,
    };

    match rational_view {
        Some(r) => {
            if r.den().coeff(0).is_zero() {
                return Err(ZeroOrderError::DenominatorVanishesAtZero);
            }
            let deg_p = r.num().degree().map_or(0, |d| d as u64);
            let deg_q = r.den().degree().map_or(0, |d| d as u64);
            let bound = bound_rational(d_f, a_f, k, deg_p, deg_q);
            let f_series = m.expand(bound as usize)?;
            let g_series = r.expand(bound as usize)?;
            let nu = f_series.sub(&g_series).valuation();
            Ok(certificate(
                nu,
                bound,
                PathKind::Rational,
                BoundKind::Lemma1,
                Hypotheses {
                    irrational_asserted: true,
                    q_nonzero_at_zero: Some(true),
                    simple_branch: None,
                    degree_bound: 1,
                    log_height: deg_p.max(deg_q),
                    degrees_from_supplied_equation: true,
                },
            ))
        }
        None => {
            let g = match approximant {
                Approximant::Algebraic(g) => g,
                Approximant::Rational(_) => unreachable!(),
            };
            let n = g.degree_bound() as u64;
            let log_h = g.log_height() as u64;
            let main = bound_algebraic(d_f, a_f, k, n, log_h);
            let mut bound = main;
            let mut kind = BoundKind::Theorem1;
            if log_h >= n {
                let refined = bound_refined(d_f, a_f, k, n, log_h)?;
                if refined < main {
                    bound = refined;
                    kind = BoundKind::Refined;
                }
            }
            let f_series = m.expand(bound as usize)?;
            let g_series = g.expand_branch(bound as usize);
            let nu = f_series.sub(&g_series).valuation();
            Ok(certificate(
                nu,
                bound,
                PathKind::Algebraic,
                kind,
                Hypotheses {
                    irrational_asserted: true,
                    q_nonzero_at_zero: None,
                    simple_branch: Some(true),
                    degree_bound: n,
                    log_height: log_h,
                    degrees_from_supplied_equation: true,
                },
            ))
        }
    }
}

fn certificate(
    nu: Valuation,
    bound: u64,
    path: PathKind,
    bound_kind: BoundKind,
    hypotheses: Hypotheses,
) -> NuCertificate {
    let status = match nu {
        Valuation::Finite(_) => CertStatus::Certified,
        Valuation::AboveTruncation(_) => CertStatus::BoundViolated,
    };
    NuCertificate {
        nu,
        bound,
        expansion_order: bound,
        path,
        bound_kind,
        hypotheses,
        status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_bipoly, parse_poly};
    use crate::rat::rat_int;

    fn mahler(k: u32, coeffs: &[&str], seeds: &[i64], irrational: bool) -> MahlerFunction {
        MahlerFunction::new(
            k,
            coeffs.iter().map(|t| parse_poly(t).unwrap()).collect(),
            seeds.iter().map(|&n| rat_int(n)).collect(),
            irrational,
        )
        .unwrap()
    }

    fn sigma2n() -> MahlerFunction {
        mahler(2, &["z", "-1-z", "1"], &[0, 1, 1, 0], true)
    }

    fn algebraic(poly: &str, branch0: i64) -> AlgebraicFunction {
        AlgebraicFunction::new(parse_bipoly(poly).unwrap(), rat_int(branch0)).unwrap()
    }

    #[test]
    fn bound_rational_examples() {
        assert_eq!(bound_rational(2, 1, 2, 4, 0), 29);
        assert_eq!(bound_rational(2, 1, 2, 0, 0), 1);
        assert_eq!(bound_rational(1, 3, 3, 2, 1), 11);
    }

    #[test]
    fn bound_algebraic_examples() {
        assert_eq!(bound_algebraic(2, 1, 2, 2, 1), 52);
        assert_eq!(bound_algebraic(2, 5, 2, 1, 0), 15); // (d+1) A with n = 1
        assert_eq!(bound_algebraic(1, 2, 2, 3, 2), 54);
    }

    #[test]
    fn bound_refined_examples() {
        assert_eq!(bound_refined(2, 1, 2, 2, 6).unwrap(), 240);
        assert_eq!(bound_algebraic(2, 1, 2, 2, 6), 192);
        assert_eq!(bound_refined(1, 0, 2, 1, 1).unwrap(), 3);
        assert!(matches!(
            bound_refined(1, 1, 2, 2, 1),
            Err(ZeroOrderError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn single_term_fold_returns_the_annihilator_itself() {
        let p_g = parse_bipoly("y^2 - (1+z)").unwrap();
        let (ann, terms) =
            fold_twisted_terms(&[Poly::one(), Poly::zero(), Poly::zero()], 2, &p_g).unwrap();
        assert_eq!(terms, 1);
        assert_eq!(ann, p_g);
        assert_eq!(ann.deg_y(), Some(2));
        assert_eq!(ann.deg_z(), Some(1));
    }

    #[test]
    fn mg_annihilator_kills_the_series() {
        let m = sigma2n();
        let g = algebraic("y^2 - (1+z)", 1);
        let (ann, profile) = mg_annihilator(&m, &g).unwrap();
        assert!(profile.delta_y <= 8, "Lemma 3 y bound");
        assert!(profile.delta_z <= 52, "Lemma 3 z bound");

        // Build M_G = sum a_i(z) G(z^{k^i}) to order 64 and check the
        // annihilator vanishes on it.
        let order = 64;
        let gs = g.expand_branch(order);
        let mut mg = Series::zero(order);
        for (i, a) in m.coefficients().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ki = (m.radix() as usize).pow(i as u32);
            mg = mg.add(&gs.substitute_power(ki).scale_by_poly(a));
        }
        let value = ann.eval_at_series(&mg);
        assert!(value.is_zero_to_truncation());
    }

    #[test]
    fn mg_annihilator_rejects_degree_one() {
        let m = sigma2n();
        let g = algebraic("y - z", 0);
        assert!(matches!(
            mg_annihilator(&m, &g),
            Err(ZeroOrderError::DegreeBelowTwo)
        ));
    }

    #[test]
    fn certified_nu_rational_truncation() {
        let m = sigma2n();
        let t2 = Approximant::Rational(RationalFunction::polynomial(parse_poly("z + z^2").unwrap()));
        let cert = certified_nu(&m, &t2).unwrap();
        assert_eq!(cert.nu, Valuation::Finite(4));
        assert_eq!(cert.bound, 15);
        assert_eq!(cert.status, CertStatus::Certified);
        assert_eq!(cert.path, PathKind::Rational);
        assert_eq!(cert.bound_kind, BoundKind::Lemma1);
        assert_eq!(cert.expansion_order, 15);
    }

    #[test]
    fn certified_nu_algebraic_worked_instance() {
        let m = sigma2n();
        let g = Approximant::Algebraic(algebraic("y^2 + 2*y - z", 0));
        let cert = certified_nu(&m, &g).unwrap();
        assert_eq!(cert.nu, Valuation::Finite(1));
        assert_eq!(cert.bound, 52);
        assert_eq!(cert.status, CertStatus::Certified);
        assert_eq!(cert.bound_kind, BoundKind::Theorem1);
    }

    #[test]
    fn certified_nu_detects_violation() {
        // 1/(1-z) presented with an erroneous irrationality assertion,
        // against itself: the difference is identically zero.
        let m = mahler(4, &["-1", "1 + z + z^2 + z^3"], &[1], true);
        let g = Approximant::Rational(
            RationalFunction::new(parse_poly("1").unwrap(), parse_poly("1 - z").unwrap()).unwrap(),
        );
        let cert = certified_nu(&m, &g).unwrap();
        assert_eq!(cert.bound, 8);
        assert_eq!(cert.nu, Valuation::AboveTruncation(8));
        assert_eq!(cert.status, CertStatus::BoundViolated);
    }

    #[test]
    fn certified_nu_requires_assertion() {
        let m = mahler(2, &["-1", "1+z"], &[1], false);
        let g = Approximant::Rational(RationalFunction::polynomial(parse_poly("1").unwrap()));
        assert!(matches!(
            certified_nu(&m, &g),
            Err(ZeroOrderError::IrrationalityNotAsserted)
        ));
    }

    #[test]
    fn certified_nu_rejects_vanishing_denominator() {
        let m = sigma2n();
        let g = Approximant::Rational(
            RationalFunction::new(parse_poly("1").unwrap(), parse_poly("z").unwrap()).unwrap(),
        );
        assert!(matches!(
            certified_nu(&m, &g),
            Err(ZeroOrderError::DenominatorVanishesAtZero)
        ));
    }

    #[test]
    fn degree_one_algebraic_routes_to_rational_path() {
        let m = sigma2n();
        // y - (z + z^2): same as the truncation polynomial.
        let g = Approximant::Algebraic(algebraic("y - (z + z^2)", 0));
        let cert = certified_nu(&m, &g).unwrap();
        assert_eq!(cert.path, PathKind::Rational);
        assert_eq!(cert.nu, Valuation::Finite(4));
        assert_eq!(cert.bound, 15);
    }
}
