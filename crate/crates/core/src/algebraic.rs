//! Algebraic functions as simple rational branches of bivariate
//! polynomials, with Newton expansion, the twist construction, sum
//! annihilators, and the constant-coefficient valuation bound.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::intpoly::{common_denominator, to_bipoly_scaled, to_int_scaled, IntBiPoly};
use crate::poly::Poly;
use crate::rat::Rat;
use crate::resultant::{resultant_from_coeffs, ResultantError};
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraicError {
    /// The supplied branch value does not satisfy P(0, y0) = 0.
    NoRationalRoot,
    /// dP/dy(0, y0) = 0: the branch is not simple, Newton cannot start.
    SingularBranch,
    /// The annihilator must actually involve y.
    ConstantAnnihilator,
    /// Twist coefficient a = 0; the caller must skip the term instead.
    ZeroTwistCoefficient,
    /// The resultant collapsed to zero, so it annihilates nothing.
    DegenerateResultant,
    /// valuation_bound requires a nonzero constant-in-y coefficient.
    ZeroConstantCoefficient,
    /// Structural problem reported by the resultant layer.
    Resultant(ResultantError),
}

impl fmt::Display for AlgebraicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicError::NoRationalRoot => {
                write!(f, "branch value is not a root of P(0, y)")
            }
            AlgebraicError::SingularBranch => {
                write!(f, "singular branch: dP/dy vanishes at (0, y0)")
            }
            AlgebraicError::ConstantAnnihilator => {
                write!(f, "annihilator has degree 0 in y")
            }
            AlgebraicError::ZeroTwistCoefficient => {
                write!(f, "twist coefficient is zero; skip the term instead")
            }
            AlgebraicError::DegenerateResultant => {
                write!(f, "resultant is identically zero")
            }
            AlgebraicError::ZeroConstantCoefficient => {
                write!(f, "constant-in-y coefficient a_0 is zero")
            }
            AlgebraicError::Resultant(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for AlgebraicError {}

impl From<ResultantError> for AlgebraicError {
    fn from(e: ResultantError) -> Self {
        AlgebraicError::Resultant(e)
    }
}

/// A power-series branch of P(z, y) = 0 picked by a rational value at
/// z = 0. The branch must be simple so Newton lifting stays rational.
///
/// The annihilator is not checked for minimality or irreducibility: its
/// degrees serve as upper bounds for the series' degree and log-height,
/// which is all the estimates need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicFunction {
    annihilator: BiPoly,
    branch0: Rat,
}

impl AlgebraicFunction {
    pub fn new(annihilator: BiPoly, branch0: Rat) -> Result<Self, AlgebraicError> {
        if annihilator.deg_y().unwrap_or(0) < 1 {
            return Err(AlgebraicError::ConstantAnnihilator);
        }
        let at_zero = annihilator.at_z_zero();
        if !at_zero.eval(&branch0).is_zero() {
            return Err(AlgebraicError::NoRationalRoot);
        }
        if at_zero.derivative().eval(&branch0).is_zero() {
            return Err(AlgebraicError::SingularBranch);
        }
        Ok(AlgebraicFunction {
            annihilator,
            branch0,
        })
    }

    pub fn annihilator(&self) -> &BiPoly {
        &self.annihilator
    }

    pub fn branch0(&self) -> &Rat {
        &self.branch0
    }

    /// n: the degree bound deg_y P.
    pub fn degree_bound(&self) -> usize {
        self.annihilator.deg_y().unwrap()
    }

    /// log-height: deg_z P (0 when P is z-free).
    pub fn log_height(&self) -> usize {
        self.annihilator.deg_z().unwrap_or(0)
    }

    /// Expand the branch to the requested truncation order by Newton
    /// lifting with precision doubling: a branch correct mod z^p refines
    /// to mod z^{2p} per step, entirely in rational arithmetic.
    pub fn expand_branch(&self, order: usize) -> Series {
        let dp = self.annihilator.derivative_y();
        let mut prec = 1usize;
        let mut coeffs = vec![self.branch0.clone()];
        while prec < order + 1 {
            let next = (2 * prec).min(order + 1);
            coeffs.resize(next, Rat::zero());
            let s = Series::new(coeffs);
            let value = self.annihilator.eval_at_series(&s);
            let slope = dp.eval_at_series(&s);
            let correction = value.mul(&slope.invert());
            let refined = s.sub(&correction);
            coeffs = refined.coeffs().to_vec();
            prec = next;
        }
        coeffs.truncate(order + 1);
        Series::new(coeffs)
    }
}

/// a(z)^{deg_y P} * P(z^{k^i}, y / a(z)), denominators cleared: the
/// annihilator of a(z) * G(z^{k^i}).
///
/// The y-degree is preserved exactly; the z-degree is bounded by
/// deg(a) * deg_y P + k^i * deg_z P.
pub fn twist(p_g: &BiPoly, a: &Poly, k: u32, i: u32) -> Result<BiPoly, AlgebraicError> {
    if a.is_zero() {
        return Err(AlgebraicError::ZeroTwistCoefficient);
    }
    let delta = p_g.deg_y().unwrap_or(0);
    let m = (k as usize)
        .checked_pow(i)
        .expect("radix power overflows usize");
    let coeffs = (0..=delta)
        .map(|j| {
            let g_j = p_g.coeff_y(j);
            if g_j.is_zero() {
                Poly::zero()
            } else {
                g_j.substitute_power(m).mul(&a.pow(delta - j))
            }
        })
        .collect();
    Ok(BiPoly::new(coeffs))
}

/// Annihilator of f + g: res_y(P_f(z, y), P_g(z, x - y)) as a polynomial
/// in (z, x). Fails loudly if the resultant collapses to zero (shared
/// y-factor) rather than attempting any squarefree repair.
///
/// The elimination itself runs over integer coefficients: both inputs
/// are scaled by their common denominators (scaling rows of the
/// Sylvester matrix scales the determinant by a known factor, divided
/// back out at the end), which avoids per-operation gcd normalization
/// in the bivariate convolutions.
pub fn sum_annihilator(p_f: &BiPoly, p_g: &BiPoly) -> Result<BiPoly, AlgebraicError> {
    if p_f.deg_y().unwrap_or(0) < 1 || p_g.deg_y().unwrap_or(0) < 1 {
        return Err(AlgebraicError::ConstantAnnihilator);
    }
    // Lift P_f's y-coefficients into (z, x) with x-degree 0.
    let p: Vec<BiPoly> = p_f
        .y_coeffs()
        .iter()
        .map(|c| BiPoly::from_poly(c.clone()))
        .collect();
    // y-coefficients of P_g(z, x - y): expanding (x - y)^j by binomials,
    // coefficient t collects sum_j g_j * C(j, t) * (-1)^t * x^{j - t}.
    let dg = p_g.deg_y().unwrap();
    let mut q = vec![BiPoly::zero(); dg + 1];
    for (j, g_j) in p_g.y_coeffs().iter().enumerate() {
        if g_j.is_zero() {
            continue;
        }
        for t in 0..=j {
            let b = binomial(BigInt::from(j), BigInt::from(t));
            let mut c = g_j.scale(&Rat::from_integer(b));
            if t % 2 == 1 {
                c = c.neg();
            }
            let mut x_coeffs = vec![Poly::zero(); j - t + 1];
            x_coeffs[j - t] = c;
            q[t] = q[t].add(&BiPoly::new(x_coeffs));
        }
    }

    let dp = p.len() - 1;
    let dq = q.len() - 1;
    let denom_p = common_denominator(&p);
    let denom_q = common_denominator(&q);
    let pi: Vec<IntBiPoly> = p.iter().map(|b| to_int_scaled(b, &denom_p)).collect();
    let qi: Vec<IntBiPoly> = q.iter().map(|b| to_int_scaled(b, &denom_q)).collect();
    let det = resultant_from_coeffs(&pi, &qi)?;
    // res(l*P, m*Q) = l^{deg Q} * m^{deg P} * res(P, Q).
    let scale = Rat::from_integer(num_traits::pow(denom_p, dq) * num_traits::pow(denom_q, dp));
    let d = to_bipoly_scaled(&det, &scale);
    if d.is_zero() {
        return Err(AlgebraicError::DegenerateResultant);
    }
    Ok(d)
}

/// nu(G) <= nu(a_0) for any series root of P with constant-in-y
/// coefficient a_0 != 0; callers may relax the bound to deg_z P.
pub fn valuation_bound(p: &BiPoly) -> Result<usize, AlgebraicError> {
    let a0 = p.coeff_y(0);
    if a0.is_zero() {
        return Err(AlgebraicError::ZeroConstantCoefficient);
    }
    Ok(a0.valuation().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_bipoly;
    use crate::rat::rat_int;
    use crate::series::Valuation;

    fn af(poly: &str, branch0: i64) -> AlgebraicFunction {
        AlgebraicFunction::new(parse_bipoly(poly).unwrap(), rat_int(branch0)).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn newton_sqrt_one_plus_z() {
        let g = af("y^2 - (1+z)", 1);
        let s = g.expand_branch(3);
        assert_eq!(s.coeffs(), &[rat_int(1), rat(1, 2), rat(-1, 8), rat(1, 16)]);
        // Substitute-back oracle at a larger order.
        let s64 = g.expand_branch(64);
        assert!(g.annihilator().eval_at_series(&s64).is_zero_to_truncation());
    }

    #[test]
    fn newton_linear_annihilator() {
        let g = af("y - (z^2 + 3)", 3);
        let s = g.expand_branch(6);
        assert_eq!(
            s.coeffs()[..4],
            [rat_int(3), rat_int(0), rat_int(1), rat_int(0)]
        );
    }

    #[test]
    fn newton_negative_branch_is_mirror() {
        let plus = af("y^2 - (1+z)", 1).expand_branch(3);
        let minus = af("y^2 - (1+z)", -1).expand_branch(3);
        assert_eq!(minus, plus.neg());
    }

    #[test]
    fn rejects_bad_branches() {
        let p = parse_bipoly("y^2 - z^2").unwrap();
        assert_eq!(
            AlgebraicFunction::new(p, rat_int(0)).unwrap_err(),
            AlgebraicError::SingularBranch
        );
        let p = parse_bipoly("y^2 - (1+z)").unwrap();
        assert_eq!(
            AlgebraicFunction::new(p, rat_int(2)).unwrap_err(),
            AlgebraicError::NoRationalRoot
        );
    }

    #[test]
    fn twist_examples() {
        let p_g = parse_bipoly("y^2 - (1+z)").unwrap();
        let twisted = twist(&p_g, &Poly::var(), 2, 1).unwrap();
        assert_eq!(twisted, parse_bipoly("y^2 - z^2*(1 + z^2)").unwrap());
        assert_eq!(twisted.deg_y(), p_g.deg_y());
        assert_eq!(twisted.deg_z(), Some(4)); // deg(a)*2 + 2*1, met with equality

        assert_eq!(twist(&p_g, &Poly::one(), 2, 0).unwrap(), p_g);
        assert_eq!(
            twist(&p_g, &Poly::zero(), 2, 0).unwrap_err(),
            AlgebraicError::ZeroTwistCoefficient
        );
    }

    #[test]
    fn sum_annihilator_double_sqrt() {
        // Product oracle over the four root sums: x^2 * (x^2 - 4(1+z)).
        let p = parse_bipoly("y^2 - (1+z)").unwrap();
        let d = sum_annihilator(&p, &p).unwrap();
        let expect = parse_bipoly("y^4 - (4 + 4*z)*y^2").unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn sum_annihilator_linear_shift() {
        // P_f = y - z: D = +- P_g(z, x - z).
        let p_f = parse_bipoly("y - z").unwrap();
        let p_g = parse_bipoly("y^2 + 2*y - z").unwrap();
        let d = sum_annihilator(&p_f, &p_g).unwrap();
        let shifted = parse_bipoly("(y - z)^2 + 2*(y - z) - z").unwrap();
        assert!(d == shifted || d == shifted.neg());
    }

    #[test]
    fn sum_annihilator_rejects_constant_inputs() {
        let c = BiPoly::from_poly(Poly::one());
        let p = parse_bipoly("y^2 - z").unwrap();
        assert_eq!(
            sum_annihilator(&c, &p).unwrap_err(),
            AlgebraicError::ConstantAnnihilator
        );
        assert_eq!(
            sum_annihilator(&p, &BiPoly::zero()).unwrap_err(),
            AlgebraicError::ConstantAnnihilator
        );
    }

    #[test]
    fn valuation_bound_examples() {
        let p = parse_bipoly("y^2 + 2*y - z").unwrap();
        assert_eq!(valuation_bound(&p).unwrap(), 1);
        let g = AlgebraicFunction::new(p, rat_int(0)).unwrap();
        assert_eq!(g.expand_branch(8).valuation(), Valuation::Finite(1));

        let q = parse_bipoly("y^2 - (1+z)").unwrap();
        assert_eq!(valuation_bound(&q).unwrap(), 0);

        let r = parse_bipoly("y^2 + y").unwrap();
        assert_eq!(
            valuation_bound(&r).unwrap_err(),
            AlgebraicError::ZeroConstantCoefficient
        );
    }

    #[test]
    fn parabola_branch_series() {
        let g = af("y^2 + 2*y - z", 0);
        let s = g.expand_branch(3);
        assert_eq!(
            s.coeffs(),
            &[rat_int(0), rat(1, 2), rat(-1, 8), rat(1, 16)]
        );
    }

    #[test]
    fn degree_and_height_bounds() {
        let g = af("y^3 - y - z", 0);
        assert_eq!(g.degree_bound(), 3);
        assert_eq!(g.log_height(), 1);
        let s = g.expand_branch(11);
        // Iteration oracle: y = y^3 - z gives -z - z^3 - 3z^5 - 12z^7 - ...
        assert_eq!(s.coeff(1), &rat_int(-1));
        assert_eq!(s.coeff(3), &rat_int(-1));
        assert_eq!(s.coeff(5), &rat_int(-3));
        assert_eq!(s.coeff(7), &rat_int(-12));
        assert_eq!(s.coeff(9), &rat_int(-55));
        assert_eq!(s.coeff(11), &rat_int(-273));
    }
}
