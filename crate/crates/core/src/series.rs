//! Truncated formal power series over exact rationals.
//!
//! A `Series` stores the coefficients of z^0 .. z^T for an explicit
//! truncation order T; every stored coefficient is exact. Binary
//! operations propagate truncation pessimistically (min rule), so a
//! result never claims knowledge beyond what its inputs support.

use std::fmt;

use num_traits::Zero;

use crate::poly::Poly;
use crate::rat::{rat_to_string, Rat};

/// Order of vanishing at z = 0, relative to a truncation order.
///
/// `Finite(v)` means coefficient v is nonzero and all earlier ones vanish.
/// `AboveTruncation(T)` means every known coefficient (0..=T) vanishes;
/// the zero series reports this at every finite truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(usize),
    AboveTruncation(usize),
}

impl Valuation {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::AboveTruncation(_) => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{}", v),
            Valuation::AboveTruncation(t) => write!(f, "above truncation {}", t),
        }
    }
}

/// Truncated power series: coefficients of z^0 ..= z^T, all exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Build from explicit coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series knows at least coefficient 0");
        Series { coeffs }
    }

    pub fn zero(trunc_order: usize) -> Self {
        Series {
            coeffs: vec![Rat::zero(); trunc_order + 1],
        }
    }

    pub fn constant(c: Rat, trunc_order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); trunc_order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// A polynomial viewed as an exact series, truncated at `trunc_order`.
    pub fn from_poly(p: &Poly, trunc_order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); trunc_order + 1];
        for (i, c) in p.coeffs().iter().enumerate() {
            if i > trunc_order {
                break;
            }
            coeffs[i] = c.clone();
        }
        Series { coeffs }
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^i; panics past the truncation order, where the
    /// coefficient is unknown rather than zero.
    pub fn coeff(&self, i: usize) -> &Rat {
        assert!(
            i <= self.trunc_order(),
            "coefficient {} is beyond truncation order {}",
            i,
            self.trunc_order()
        );
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Least index with a nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(v) => Valuation::Finite(v),
            None => Valuation::AboveTruncation(self.trunc_order()),
        }
    }

    pub fn is_zero_to_truncation(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let t = self.trunc_order().min(rhs.trunc_order());
        let coeffs = (0..=t)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        let t = self.trunc_order().min(rhs.trunc_order());
        let coeffs = (0..=t)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Truncated product at min(T_a, T_b). Coefficients up to that order
    /// only involve known inputs, so the result is exact.
    pub fn mul(&self, rhs: &Series) -> Series {
        let t = self.trunc_order().min(rhs.trunc_order());
        let mut coeffs = vec![Rat::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(t + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }

    /// Substitute z -> z^m. Coefficient i moves to m*i; the result is
    /// known exactly through order m*(T+1) - 1.
    pub fn substitute_power(&self, m: usize) -> Series {
        assert!(m >= 1, "substitution exponent must be at least 1");
        let t = m * (self.trunc_order() + 1) - 1;
        let mut coeffs = vec![Rat::zero(); t + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[m * i] = c.clone();
        }
        Series { coeffs }
    }

    /// Multiply by a polynomial, keeping this series' truncation order.
    pub fn scale_by_poly(&self, p: &Poly) -> Series {
        let t = self.trunc_order();
        let mut coeffs = vec![Rat::zero(); t + 1];
        for (j, pc) in p.coeffs().iter().enumerate() {
            if pc.is_zero() || j > t {
                continue;
            }
            for (i, c) in self.coeffs.iter().enumerate().take(t + 1 - j) {
                if c.is_zero() {
                    continue;
                }
                coeffs[i + j] += pc * c;
            }
        }
        Series { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Series {
        let a0 = &self.coeffs[0];
        assert!(!a0.is_zero(), "cannot invert a series with zero constant term");
        let t = self.trunc_order();
        let inv0 = a0.recip();
        let mut coeffs = vec![Rat::zero(); t + 1];
        coeffs[0] = inv0.clone();
        for n in 1..=t {
            let mut acc = Rat::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() || coeffs[n - j].is_zero() {
                    continue;
                }
                acc += &self.coeffs[j] * &coeffs[n - j];
            }
            coeffs[n] = -(&inv0 * acc);
        }
        Series { coeffs }
    }

    /// Restrict to a smaller truncation order.
    pub fn truncate(&self, trunc_order: usize) -> Series {
        assert!(trunc_order <= self.trunc_order());
        Series {
            coeffs: self.coeffs[..=trunc_order].to_vec(),
        }
    }

    /// Comma-separated coefficient list, canonical rational form.
    pub fn coeff_line(&self) -> String {
        self.coeffs
            .iter()
            .map(rat_to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl std::ops::Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl std::ops::Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl std::ops::Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn s(ints: &[i64]) -> Series {
        Series::new(ints.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn valuation_examples() {
        // z^2 + z^3 at T=5
        assert_eq!(s(&[0, 0, 1, 1, 0, 0]).valuation(), Valuation::Finite(2));
        assert_eq!(Series::zero(10).valuation(), Valuation::AboveTruncation(10));
        assert_eq!(s(&[3, 1]).valuation(), Valuation::Finite(0));
    }

    #[test]
    fn combine_examples() {
        let a = s(&[1, 1, 0, 0]);
        let b = s(&[0, 0, 1, 0]);
        assert_eq!(a.add(&b), s(&[1, 1, 1, 0]));

        let p = s(&[1, 1, 0, 0, 0, 0]);
        let m = s(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(p.mul(&m), s(&[1, 0, -1, 0, 0, 0]));

        let narrow = s(&[1, 1, 0]);
        let diff = p.sub(&narrow);
        assert_eq!(diff.trunc_order(), 2);
        assert!(diff.is_zero_to_truncation());
    }

    #[test]
    fn substitute_power_examples() {
        let a = s(&[1, 1]);
        let sub = a.substitute_power(2);
        assert_eq!(sub, s(&[1, 0, 1, 0]));
        assert_eq!(sub.trunc_order(), 3);

        let b = s(&[5, -2, 7]);
        assert_eq!(b.substitute_power(1), b);

        // z + z^2 + z^4 at T=4, m=4: brute-force coefficient map oracle
        let c = s(&[0, 1, 1, 0, 1]);
        let mapped = c.substitute_power(4);
        assert_eq!(mapped.trunc_order(), 19);
        for i in 0..=19 {
            let expected = if i % 4 == 0 && !c.coeff(i / 4).is_zero() {
                c.coeff(i / 4).clone()
            } else {
                Rat::zero()
            };
            assert_eq!(*mapped.coeff(i), expected, "index {}", i);
        }
    }

    #[test]
    fn scale_by_poly_examples() {
        let one = Series::constant(rat_int(1), 3);
        let zm1 = Poly::new(vec![rat_int(-1), rat_int(1)]);
        assert_eq!(one.scale_by_poly(&zm1), s(&[-1, 1, 0, 0]));

        let geo = s(&[1, 1, 1, 1]);
        let omz = Poly::new(vec![rat_int(1), rat_int(-1)]);
        assert_eq!(geo.scale_by_poly(&omz), s(&[1, 0, 0, 0]));

        let z = s(&[0, 1, 0, 0, 0]);
        let res = z.scale_by_poly(&Poly::zero());
        assert_eq!(res.trunc_order(), 4);
        assert!(res.is_zero_to_truncation());
    }

    #[test]
    fn invert_geometric() {
        let omz = s(&[1, -1, 0, 0, 0, 0]);
        let inv = omz.invert();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(inv.mul(&omz), s(&[1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn coeff_line_is_canonical() {
        let a = Series::new(vec![rat_int(1), Rat::new(1.into(), 2.into())]);
        assert_eq!(a.coeff_line(), "1, 1/2");
    }
}
