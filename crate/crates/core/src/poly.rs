//! Dense univariate polynomials in z over exact rationals.
//!
//! Coefficients are stored ascending by power and kept normalized: the
//! top coefficient is nonzero, and the zero polynomial is the empty
//! vector (its degree is `None`, standing in for minus infinity).

use std::fmt;

use num_traits::{One, Zero};

use crate::rat::{rat_to_string, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// c * z^power
    pub fn monomial(c: Rat, power: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }
    }

    /// The variable z itself.
    pub fn var() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Least power with a nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Substitute z -> z^m.
    pub fn substitute_power(&self, m: usize) -> Poly {
        assert!(m >= 1, "substitution exponent must be at least 1");
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); m * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[m * i] = c.clone();
            }
        }
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(i.into()))
            .collect();
        Poly::new(coeffs)
    }

    /// Exact quotient self / rhs. Panics if the division leaves a
    /// remainder: callers only divide where divisibility is a theorem,
    /// so a failure indicates a bug, never bad input.
    pub fn exact_div(&self, rhs: &Poly) -> Poly {
        assert!(!rhs.is_zero(), "exact division by the zero polynomial");
        if self.is_zero() {
            return Poly::zero();
        }
        let dr = rhs.coeffs.len() - 1;
        assert!(
            self.coeffs.len() > dr,
            "exact division failed: degree of dividend below divisor"
        );
        let mut rem = self.coeffs.clone();
        let lead = rhs.coeffs.last().unwrap();
        let mut quot = vec![Rat::zero(); rem.len() - dr];
        for qi in (0..quot.len()).rev() {
            let c = &rem[qi + dr] / lead;
            if !c.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    if !b.is_zero() {
                        rem[qi + j] -= &c * b;
                    }
                }
            }
            quot[qi] = c;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "exact division failed: nonzero remainder"
        );
        Poly::new(quot)
    }

    /// Canonical grammar form in descending powers, e.g. `3/2*z^2 - z + 1`.
    pub fn to_grammar_string(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (pos, (i, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let negative = c < &Rat::zero();
            let mag = if negative { -c } else { c.clone() };
            if pos == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&monomial_string(&mag, var, i));
        }
        out
    }
}

/// `mag * var^power` with `mag` positive; collapses unit coefficients.
pub(crate) fn monomial_string(mag: &Rat, var: char, power: usize) -> String {
    if power == 0 {
        return rat_to_string(mag);
    }
    let var_part = if power == 1 {
        var.to_string()
    } else {
        format!("{}^{}", var, power)
    };
    if mag.is_one() {
        var_part
    } else {
        format!("{}*{}", rat_to_string(mag), var_part)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grammar_string('z'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn p(ints: &[i64]) -> Poly {
        Poly::new(ints.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn normalization_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[0, 0, 5]).valuation(), Some(2));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.mul(&b), p(&[-1, 0, 1]));
        assert_eq!(a.add(&b), p(&[0, 2]));
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0, 1, 1]).substitute_power(3), p(&[0, 0, 0, 1, 0, 0, 1]));
        assert_eq!(a.derivative(), p(&[1]));
        assert_eq!(p(&[2, 0, 3]).eval(&rat_int(2)), rat_int(14));
    }

    #[test]
    fn exact_division() {
        let prod = p(&[-1, 0, 1]);
        assert_eq!(prod.exact_div(&p(&[1, 1])), p(&[-1, 1]));
        assert_eq!(Poly::zero().exact_div(&p(&[1, 1])), Poly::zero());
    }

    #[test]
    #[should_panic(expected = "exact division failed")]
    fn exact_division_rejects_remainder() {
        p(&[1, 0, 1]).exact_div(&p(&[1, 1]));
    }

    #[test]
    fn grammar_printing() {
        assert_eq!(p(&[1, -1]).to_grammar_string('z'), "-z + 1");
        assert_eq!(
            Poly::new(vec![rat_int(0), rat_int(-1), Rat::new(3.into(), 2.into())])
                .to_grammar_string('z'),
            "3/2*z^2 - z"
        );
        assert_eq!(Poly::zero().to_grammar_string('z'), "0");
        assert_eq!(p(&[-2]).to_grammar_string('z'), "-2");
    }
}
