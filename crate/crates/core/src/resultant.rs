//! Sylvester matrices and resultants over exact coefficient rings.
//!
//! The matrix layout is the ascending-coefficient one: for P and Q of
//! outer degrees dp and dq, the (dp+dq)-square matrix carries dq shifted
//! rows of p_0 .. p_dp followed by dp shifted rows of q_0 .. q_dq. With
//! this layout res(y - a, y - b) = b - a; classical descending layouts
//! differ by a fixed sign, which affects neither degrees nor vanishing.
//!
//! Determinants are computed by fraction-free (Bareiss) elimination; the
//! divisions are by earlier pivots and are exact in any integral domain.
//! A naive cofactor expansion is provided as an independent oracle.

use std::fmt;

use crate::bipoly::BiPoly;
use crate::poly::Poly;
use crate::rat::Rat;

/// Exact commutative coefficient arithmetic for matrix entries.
///
/// `exact_div` panics when the division is not exact: all call sites
/// divide by earlier Bareiss pivots where divisibility is a theorem, so
/// failure indicates a bug and must not be swallowed.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl Ring for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        assert!(!num_traits::Zero::is_zero(rhs), "division by zero");
        self / rhs
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        Poly::exact_div(self, rhs)
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        BiPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        BiPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        BiPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        BiPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        bipoly_exact_div(self, rhs)
    }
}

/// Exact quotient in the outer variable, with `Poly::exact_div` on the
/// leading coefficients. Panics on a nonzero remainder.
fn bipoly_exact_div(num: &BiPoly, den: &BiPoly) -> BiPoly {
    assert!(!den.is_zero(), "exact division by the zero polynomial");
    if num.is_zero() {
        return BiPoly::zero();
    }
    let dd = den.deg_y().unwrap();
    let dn = num.deg_y().unwrap();
    assert!(dn >= dd, "exact division failed: degree of dividend below divisor");
    let lead = den.coeff_y(dd);
    let mut rem: Vec<Poly> = num.y_coeffs().to_vec();
    let mut quot = vec![Poly::zero(); dn - dd + 1];
    for qi in (0..quot.len()).rev() {
        let top = rem[qi + dd].clone();
        if !top.is_zero() {
            let c = top.exact_div(&lead);
            for (j, b) in den.y_coeffs().iter().enumerate() {
                if !b.is_zero() {
                    rem[qi + j] = rem[qi + j].sub(&c.mul(b));
                }
            }
            quot[qi] = c;
        }
    }
    assert!(
        rem.iter().all(Poly::is_zero),
        "exact division failed: nonzero remainder"
    );
    BiPoly::new(quot)
}

/// Square matrix over an exact ring, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.n + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.n + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }
}

/// Fraction-free determinant (one-step Bareiss with row pivoting).
pub fn det_bareiss<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.size();
    if n == 0 {
        return R::one();
    }
    let mut w = m.clone();
    let mut negate = false;
    let mut prev = R::one();
    for t in 0..n - 1 {
        if w.at(t, t).is_zero() {
            match (t + 1..n).find(|&r| !w.at(r, t).is_zero()) {
                Some(r) => {
                    w.swap_rows(t, r);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        let pivot = w.at(t, t).clone();
        for i in t + 1..n {
            for j in t + 1..n {
                let num = pivot.mul(w.at(i, j)).sub(&w.at(i, t).mul(w.at(t, j)));
                *w.at_mut(i, j) = num.exact_div(&prev);
            }
            *w.at_mut(i, t) = R::zero();
        }
        prev = pivot;
    }
    let det = w.at(n - 1, n - 1).clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Determinant by first-row cofactor expansion. Exponentially slow; kept
/// as an independent oracle for the fraction-free path.
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.size();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut acc = R::zero();
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let minor_rows: Vec<Vec<R>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m.at(i, c).clone())
                    .collect()
            })
            .collect();
        let minor = det_cofactor(&Matrix::from_rows(minor_rows));
        let term = m.at(0, j).mul(&minor);
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Ways a resultant request can be malformed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResultantError {
    /// One of the inputs is the zero polynomial.
    ZeroPolynomial,
    /// Both inputs are constant in the eliminated variable: the Sylvester
    /// matrix would be 0 x 0.
    BothConstant,
}

impl fmt::Display for ResultantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultantError::ZeroPolynomial => {
                write!(f, "resultant of the zero polynomial is undefined")
            }
            ResultantError::BothConstant => {
                write!(f, "both inputs are constant in the eliminated variable")
            }
        }
    }
}

impl std::error::Error for ResultantError {}

/// Sylvester matrix from ascending coefficient slices, in the printed
/// ascending layout. `p` and `q` must be normalized (nonzero top).
pub fn sylvester_from_coeffs<R: Ring>(p: &[R], q: &[R]) -> Result<Matrix<R>, ResultantError> {
    if p.is_empty() || q.is_empty() {
        return Err(ResultantError::ZeroPolynomial);
    }
    let dp = p.len() - 1;
    let dq = q.len() - 1;
    let n = dp + dq;
    if n == 0 {
        return Err(ResultantError::BothConstant);
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..dq {
        let mut row = vec![R::zero(); n];
        for (j, c) in p.iter().enumerate() {
            row[r + j] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..dp {
        let mut row = vec![R::zero(); n];
        for (j, c) in q.iter().enumerate() {
            row[r + j] = c.clone();
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows))
}

/// Resultant in the outer variable from coefficient slices.
pub fn resultant_from_coeffs<R: Ring>(p: &[R], q: &[R]) -> Result<R, ResultantError> {
    Ok(det_bareiss(&sylvester_from_coeffs(p, q)?))
}

/// The Sylvester matrix of two annihilators in y, entries in `Poly`.
pub fn sylvester_matrix(p: &BiPoly, q: &BiPoly) -> Result<Matrix<Poly>, ResultantError> {
    Ok(sylvester_from_coeffs(p.y_coeffs(), q.y_coeffs())?)
}

/// res_y(P, Q) for annihilators over z.
pub fn resultant_y(p: &BiPoly, q: &BiPoly) -> Result<Poly, ResultantError> {
    Ok(det_bareiss(&sylvester_matrix(p, q)?))
}
