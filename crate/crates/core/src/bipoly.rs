//! Bivariate polynomials: an outer variable over `Poly` coefficients.
//!
//! The outer variable is y for annihilators P(z, y) and x for resultant
//! outputs D(z, x); the representation is the same either way, ascending
//! outer powers with the top coefficient a nonzero `Poly`.

use std::fmt;

use num_traits::Zero;

use crate::poly::{monomial_string, Poly};
use crate::rat::Rat;
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    y_coeffs: Vec<Poly>,
}

impl BiPoly {
    /// Build from ascending outer-variable coefficients, trimming zero tops.
    pub fn new(mut y_coeffs: Vec<Poly>) -> Self {
        while y_coeffs.last().map_or(false, Poly::is_zero) {
            y_coeffs.pop();
        }
        BiPoly { y_coeffs }
    }

    pub fn zero() -> Self {
        BiPoly {
            y_coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        BiPoly::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        if p.is_zero() {
            BiPoly::zero()
        } else {
            BiPoly { y_coeffs: vec![p] }
        }
    }

    /// The outer variable itself.
    pub fn var_y() -> Self {
        BiPoly {
            y_coeffs: vec![Poly::zero(), Poly::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.y_coeffs.is_empty()
    }

    /// Degree in the outer variable; `None` for zero.
    pub fn deg_y(&self) -> Option<usize> {
        self.y_coeffs.len().checked_sub(1)
    }

    /// Degree in z, the max over all coefficients; `None` for zero.
    pub fn deg_z(&self) -> Option<usize> {
        self.y_coeffs.iter().filter_map(Poly::degree).max()
    }

    pub fn coeff_y(&self, j: usize) -> Poly {
        self.y_coeffs.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn y_coeffs(&self) -> &[Poly] {
        &self.y_coeffs
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.y_coeffs.len().max(rhs.y_coeffs.len());
        let coeffs = (0..n)
            .map(|j| self.coeff_y(j).add(&rhs.coeff_y(j)))
            .collect();
        BiPoly::new(coeffs)
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.y_coeffs.len().max(rhs.y_coeffs.len());
        let coeffs = (0..n)
            .map(|j| self.coeff_y(j).sub(&rhs.coeff_y(j)))
            .collect();
        BiPoly::new(coeffs)
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            y_coeffs: self.y_coeffs.iter().map(Poly::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); self.y_coeffs.len() + rhs.y_coeffs.len() - 1];
        for (i, a) in self.y_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.y_coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        BiPoly { y_coeffs: coeffs }
    }

    pub fn scale_poly(&self, p: &Poly) -> BiPoly {
        if p.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            y_coeffs: self.y_coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute z -> z^m in every coefficient.
    pub fn substitute_z_power(&self, m: usize) -> BiPoly {
        BiPoly {
            y_coeffs: self
                .y_coeffs
                .iter()
                .map(|c| c.substitute_power(m))
                .collect(),
        }
    }

    /// Partial derivative in the outer variable.
    pub fn derivative_y(&self) -> BiPoly {
        if self.y_coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        let coeffs = self
            .y_coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.scale(&Rat::from_integer(j.into())))
            .collect();
        BiPoly::new(coeffs)
    }

    /// P(0, y) as a univariate polynomial in the outer variable.
    pub fn at_z_zero(&self) -> Poly {
        Poly::new(self.y_coeffs.iter().map(|c| c.coeff(0)).collect())
    }

    /// Evaluate the outer variable at a truncated series: P(z, s(z)),
    /// exact through s's truncation order.
    pub fn eval_at_series(&self, s: &Series) -> Series {
        let t = s.trunc_order();
        let mut acc = Series::zero(t);
        for c in self.y_coeffs.iter().rev() {
            acc = acc.mul(s).add(&Series::from_poly(c, t));
        }
        acc
    }

    /// Evaluate every z-coefficient at a rational point, collapsing to a
    /// univariate polynomial in the outer variable.
    pub fn eval_z(&self, at: &Rat) -> Poly {
        Poly::new(self.y_coeffs.iter().map(|c| c.eval(at)).collect())
    }

    /// Canonical grammar form: descending outer powers, coefficients in
    /// descending powers of z, multi-term coefficients parenthesized.
    /// The output reparses to the same polynomial.
    pub fn to_grammar_string(&self, outer: char) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        // (is_negative, body) per printed term, descending outer powers.
        let mut groups: Vec<(bool, String)> = Vec::new();
        for (j, c) in self.y_coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if j == 0 {
                // Constant-in-outer part: splice its terms directly.
                for (i, r) in c.coeffs().iter().enumerate().rev() {
                    if r.is_zero() {
                        continue;
                    }
                    let negative = r < &Rat::zero();
                    let mag = if negative { -r } else { r.clone() };
                    groups.push((negative, monomial_string(&mag, 'z', i)));
                }
                continue;
            }
            let nonzero_terms = c.coeffs().iter().filter(|r| !r.is_zero()).count();
            let lead_negative = c.leading_coeff().map_or(false, |r| r < &Rat::zero());
            let body = if nonzero_terms == 1 {
                let power = c.degree().unwrap();
                let mag = if lead_negative {
                    -&c.coeff(power)
                } else {
                    c.coeff(power)
                };
                let prefix = monomial_prefix(&mag, power);
                format!("{}{}", prefix, outer_part(outer, j))
            } else {
                let inner = if lead_negative { c.neg() } else { c.clone() };
                format!("({})*{}", inner.to_grammar_string('z'), outer_part(outer, j))
            };
            groups.push((lead_negative, body));
        }
        let mut out = String::new();
        for (pos, (negative, body)) in groups.iter().enumerate() {
            if pos == 0 {
                if *negative {
                    out.push('-');
                }
            } else if *negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(body);
        }
        out
    }
}

fn outer_part(outer: char, power: usize) -> String {
    if power == 1 {
        outer.to_string()
    } else {
        format!("{}^{}", outer, power)
    }
}

/// `mag * z^power *` prefix for an outer-variable factor; drops unit
/// coefficients and the z part when absent.
fn monomial_prefix(mag: &Rat, power: usize) -> String {
    use num_traits::One;
    if power == 0 && mag.is_one() {
        return String::new();
    }
    format!("{}*", monomial_string(mag, 'z', power))
}


impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grammar_string('y'))
    }
}
