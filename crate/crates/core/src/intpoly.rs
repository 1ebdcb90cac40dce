//! Integer bivariate kernel for the resultant folds.
//!
//! Bareiss elimination on Sylvester matrices with bivariate entries is
//! the one hot spot in the crate. Rational coefficients pay a gcd
//! normalization on every add and multiply, which dominates the dense
//! convolutions. The fold therefore clears denominators once (an exact
//! row scaling of the determinant), runs the same elimination over
//! `BigInt` coefficients, and scales back at the end. All divisions stay
//! exact in Z[z, x], so the result is identical to the rational path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bipoly::BiPoly;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::resultant::Ring;

/// Dense z-polynomial over the integers, ascending, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::new(coeffs)
    }

    fn sub(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPoly::new(coeffs)
    }

    fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
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
        IntPoly { coeffs }
    }

    /// Exact quotient over Z; panics if any step is inexact.
    fn exact_div(&self, rhs: &IntPoly) -> IntPoly {
        assert!(!rhs.is_zero(), "exact division by the zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dr = rhs.coeffs.len() - 1;
        assert!(
            self.coeffs.len() > dr,
            "exact division failed: degree of dividend below divisor"
        );
        let lead = rhs.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dr];
        for qi in (0..quot.len()).rev() {
            if rem[qi + dr].is_zero() {
                continue;
            }
            let (c, r) = rem[qi + dr].div_rem(lead);
            assert!(r.is_zero(), "exact division failed: inexact coefficient");
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[qi + j] -= &c * b;
                }
            }
            quot[qi] = c;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "exact division failed: nonzero remainder"
        );
        IntPoly::new(quot)
    }
}

/// Bivariate integer polynomial: outer variable over `IntPoly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntBiPoly {
    coeffs: Vec<IntPoly>,
}

impl IntBiPoly {
    fn new(mut coeffs: Vec<IntPoly>) -> Self {
        while coeffs.last().map_or(false, IntPoly::is_zero) {
            coeffs.pop();
        }
        IntBiPoly { coeffs }
    }
}

impl Ring for IntBiPoly {
    fn zero() -> Self {
        IntBiPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        IntBiPoly {
            coeffs: vec![IntPoly::new(vec![BigInt::one()])],
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(IntPoly::zero);
                match rhs.coeffs.get(i) {
                    Some(b) => a.add(b),
                    None => a,
                }
            })
            .collect();
        IntBiPoly::new(coeffs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(IntPoly::zero);
                match rhs.coeffs.get(i) {
                    Some(b) => a.sub(b),
                    None => a,
                }
            })
            .collect();
        IntBiPoly::new(coeffs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Ring::zero();
        }
        let mut coeffs = vec![IntPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        IntBiPoly { coeffs }
    }

    fn neg(&self) -> Self {
        IntBiPoly {
            coeffs: self.coeffs.iter().map(IntPoly::neg).collect(),
        }
    }

    fn exact_div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "exact division by the zero polynomial");
        if self.is_zero() {
            return Ring::zero();
        }
        let dd = rhs.coeffs.len() - 1;
        let dn = self.coeffs.len() - 1;
        assert!(dn >= dd, "exact division failed: degree of dividend below divisor");
        let lead = rhs.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![IntPoly::zero(); dn - dd + 1];
        for qi in (0..quot.len()).rev() {
            if rem[qi + dd].is_zero() {
                continue;
            }
            let c = rem[qi + dd].exact_div(lead);
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    rem[qi + j] = rem[qi + j].sub(&c.mul(b));
                }
            }
            quot[qi] = c;
        }
        assert!(
            rem.iter().all(IntPoly::is_zero),
            "exact division failed: nonzero remainder"
        );
        IntBiPoly::new(quot)
    }
}

/// Least common multiple of every coefficient denominator in the slice
/// of y-coefficients.
pub(crate) fn common_denominator(polys: &[BiPoly]) -> BigInt {
    let mut acc = BigInt::one();
    for b in polys {
        for p in b.y_coeffs() {
            for c in p.coeffs() {
                let d = c.denom();
                if !d.is_one() {
                    acc = acc.lcm(d);
                }
            }
        }
    }
    acc
}

/// Scale by `denom` (which must clear every denominator) into the
/// integer representation.
pub(crate) fn to_int_scaled(b: &BiPoly, denom: &BigInt) -> IntBiPoly {
    let coeffs = b
        .y_coeffs()
        .iter()
        .map(|p| {
            IntPoly::new(
                p.coeffs()
                    .iter()
                    .map(|c| {
                        let scaled = c * Rat::from_integer(denom.clone());
                        assert!(
                            scaled.denom().is_one(),
                            "denominator scaling was not exact"
                        );
                        scaled.numer().clone()
                    })
                    .collect(),
            )
        })
        .collect();
    IntBiPoly::new(coeffs)
}

/// Back to rational coefficients, divided by `scale`.
pub(crate) fn to_bipoly_scaled(b: &IntBiPoly, scale: &Rat) -> BiPoly {
    BiPoly::new(
        b.coeffs
            .iter()
            .map(|p| {
                Poly::new(
                    p.coeffs
                        .iter()
                        .map(|c| Rat::from_integer(c.clone()) / scale)
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Magnitude of the integer content, for content-stripping intermediate
/// annihilators (a nonzero scalar factor never affects what a
/// polynomial annihilates).
pub(crate) fn integer_content(b: &IntBiPoly) -> BigInt {
    let mut acc = BigInt::zero();
    for p in &b.coeffs {
        for c in &p.coeffs {
            if !c.is_zero() {
                acc = acc.gcd(c);
            }
        }
    }
    if acc.is_zero() {
        BigInt::one()
    } else {
        acc.abs()
    }
}
