//! Mahler functions: a_0(z)f(z) + a_1(z)f(z^k) + ... + a_d(z)f(z^{k^d}) = 0.
//!
//! The representation is the homogeneous equation itself plus enough seed
//! coefficients to start the recurrence. Expansion solves the coefficient
//! equations in increasing order and re-checks every equation it did not
//! solve, so inconsistent seeds are always detected.

use std::fmt;

use num_traits::Zero;

use crate::poly::Poly;
use crate::rat::Rat;
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MahlerError {
    /// Structural problem with the equation itself (radix, degree, or
    /// vanishing end coefficients).
    InvalidEquation(String),
    /// Fewer seeds than the recurrence needs to get started.
    InsufficientSeeds { required: usize, got: usize },
    /// A coefficient equation fails on the seeded values; `index` is the
    /// power of z whose equation is violated.
    InconsistentSeeds { index: usize },
}

impl fmt::Display for MahlerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MahlerError::InvalidEquation(msg) => write!(f, "invalid Mahler equation: {}", msg),
            MahlerError::InsufficientSeeds { required, got } => write!(
                f,
                "insufficient seeds: the recurrence needs {} but got {}",
                required, got
            ),
            MahlerError::InconsistentSeeds { index } => {
                write!(f, "inconsistent seeds: the z^{} equation fails", index)
            }
        }
    }
}

impl std::error::Error for MahlerError {}

/// A k-Mahler function given by its (homogeneous) functional equation,
/// seed coefficients f_0..f_S, and a user-asserted irrationality flag.
///
/// Degree and height are read off the supplied equation, not minimized;
/// the bounds they feed are monotone in both, so over-stating is safe.
/// Irrationality cannot be decided here and is carried as an assertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MahlerFunction {
    k: u32,
    coeffs: Vec<Poly>,
    seeds: Vec<Rat>,
    irrational_asserted: bool,
}

impl MahlerFunction {
    pub fn new(
        k: u32,
        coeffs: Vec<Poly>,
        seeds: Vec<Rat>,
        irrational_asserted: bool,
    ) -> Result<Self, MahlerError> {
        if k < 2 {
            return Err(MahlerError::InvalidEquation(format!(
                "radix k must be at least 2, got {}",
                k
            )));
        }
        if coeffs.len() < 2 {
            return Err(MahlerError::InvalidEquation(
                "the equation needs coefficients a_0 .. a_d with d >= 1".to_owned(),
            ));
        }
        if coeffs[0].is_zero() {
            return Err(MahlerError::InvalidEquation("a_0 must be nonzero".to_owned()));
        }
        if coeffs.last().unwrap().is_zero() {
            return Err(MahlerError::InvalidEquation("a_d must be nonzero".to_owned()));
        }
        let m = MahlerFunction {
            k,
            coeffs,
            seeds,
            irrational_asserted,
        };
        let required = m.min_seed_count();
        if m.seeds.len() < required {
            return Err(MahlerError::InsufficientSeeds {
                required,
                got: m.seeds.len(),
            });
        }
        Ok(m)
    }

    pub fn radix(&self) -> u32 {
        self.k
    }

    /// d_F, from the supplied equation.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// A_F = max deg a_i over the nonzero coefficients.
    pub fn height(&self) -> usize {
        self.coeffs.iter().filter_map(Poly::degree).max().unwrap()
    }

    pub fn coefficients(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn seeds(&self) -> &[Rat] {
        &self.seeds
    }

    pub fn irrational_asserted(&self) -> bool {
        self.irrational_asserted
    }

    /// Seeds needed before the recurrence takes over: f_0 .. f_S with
    /// S >= ceil(v0 * k / (k - 1)), v0 = nu(a_0). From index S + 1 on,
    /// the z^{m + v0} equation has f_m as its unique highest unknown.
    pub fn min_seed_count(&self) -> usize {
        let v0 = self.coeffs[0].valuation().unwrap();
        let k = self.k as usize;
        let threshold = (v0 * k).div_ceil(k - 1);
        threshold + 1
    }

    /// Expand to the requested truncation order by the coefficient
    /// recurrence, verifying every equation that was not solved.
    pub fn expand(&self, order: usize) -> Result<Series, MahlerError> {
        let v0 = self.coeffs[0].valuation().unwrap();
        let lead = self.coeffs[0].coeff(v0);
        let s_top = self.seeds.len() - 1;
        // Extend internally so all seed-consistency equations are checked
        // even when the caller asks for a very short prefix.
        let target = order.max(s_top + v0);

        // Nonzero coefficient support per a_i, with k^i attached.
        let support: Vec<(usize, Vec<(usize, Rat)>)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let ki = (self.k as usize)
                    .checked_pow(i as u32)
                    .expect("radix power overflows usize");
                let entries = a
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j, c.clone()))
                    .collect();
                (ki, entries)
            })
            .collect();

        let mut f: Vec<Rat> = self.seeds.clone();
        f.resize(target + 1, Rat::zero());
        for m in (s_top + 1)..=target {
            let n = m + v0;
            let mut acc = Rat::zero();
            for (i, (ki, entries)) in support.iter().enumerate() {
                for (j, c) in entries {
                    if i == 0 && *j == v0 {
                        continue;
                    }
                    if *j > n {
                        continue;
                    }
                    let r = n - j;
                    if r % ki != 0 {
                        continue;
                    }
                    let idx = r / ki;
                    if f[idx].is_zero() {
                        continue;
                    }
                    acc += c * &f[idx];
                }
            }
            f[m] = -(acc / &lead);
        }

        let expanded = Series::new(f);
        if let Err(index) = self.verify_equation(&expanded) {
            return Err(MahlerError::InconsistentSeeds { index });
        }
        Ok(expanded.truncate(order))
    }

    /// Check sum_i a_i(z) * s(z^{k^i}) = 0 to the checkable truncation;
    /// on failure reports the first violated power of z.
    pub fn verify_equation(&self, s: &Series) -> Result<(), usize> {
        let mut total = Series::zero(s.trunc_order());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ki = (self.k as usize)
                .checked_pow(i as u32)
                .expect("radix power overflows usize");
            let term = s.substitute_power(ki).scale_by_poly(a);
            total = total.add(&term);
        }
        match total.valuation().finite() {
            Some(idx) => Err(idx),
            None => Ok(()),
        }
    }
}
