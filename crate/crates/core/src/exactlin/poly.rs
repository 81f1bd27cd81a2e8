//! Univariate rational polynomials and the characteristic/minimal polynomial
//! of a matrix.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::{solve_membership, Matrix, Rational};
use crate::error::{invalid, Result};

/// Coefficients indexed by degree, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        UniPoly { coeffs: vec![Rational::zero(), Rational::one()] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// `x - r`.
    pub fn linear(r: &Rational) -> Self {
        UniPoly { coeffs: vec![-r, Rational::one()] }.normalized()
    }

    /// `Π (x - r)^e`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a Rational, usize)>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, (r, e)| &acc * &Self::linear(r).pow(e))
    }

    fn normalized(self) -> Self {
        Self::from_coeffs(self.coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Rational::is_one)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix> {
        if !m.is_square() {
            return Err(invalid("polynomial evaluated at a non-square matrix"));
        }
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::scalar(n, c);
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * &Rational::from(d))
                .collect(),
        )
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(invalid("polynomial division by zero"));
        };
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_mul(&c, d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    /// No repeated roots over an algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|d| &self.coeff(d) + &rhs.coeff(d)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|d| &self.coeff(d) - &rhs.coeff(d)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Renders like `x^2 - 2x + 1`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff = if mag.is_one() && d > 0 {
                String::new()
            } else if mag.is_integer() || d == 0 {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match d {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Reduces a square matrix to upper Hessenberg form by similarity.
fn hessenberg(m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let target = col + 1;
        let best = (target..n)
            .filter(|&r| !h.get(r, col).is_zero())
            .min_by_key(|&r| h.get(r, col).pivot_weight());
        let Some(p) = best else { continue };
        if p != target {
            for k in 0..n {
                let (a, b) = (h.get(p, k).clone(), h.get(target, k).clone());
                h.set(p, k, b);
                h.set(target, k, a);
            }
            for k in 0..n {
                let (a, b) = (h.get(k, p).clone(), h.get(k, target).clone());
                h.set(k, p, b);
                h.set(k, target, a);
            }
        }
        let pivot_inv = h.get(target, col).recip();
        for r in target + 1..n {
            let u = h.get(r, col) * &pivot_inv;
            if u.is_zero() {
                continue;
            }
            // row_r -= u row_target, then col_target += u col_r
            for k in 0..n {
                let v = h.get(r, k).sub_mul(&u, h.get(target, k));
                h.set(r, k, v);
            }
            for k in 0..n {
                let v = h.get(k, target) + &(&u * h.get(k, r));
                h.set(k, target, v);
            }
        }
    }
    h
}

/// `det(x·I − m)`.
pub fn char_poly(m: &Matrix) -> Result<UniPoly> {
    if !m.is_square() {
        return Err(invalid(format!("char_poly of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let h = hessenberg(m);
    // p[k] is the char poly of the leading k×k block
    let mut p: Vec<UniPoly> = Vec::with_capacity(n + 1);
    p.push(UniPoly::one());
    for k in 0..n {
        let mut next = &(&UniPoly::x() - &UniPoly::constant(h.get(k, k).clone())) * &p[k];
        let mut t = Rational::one();
        for i in (0..k).rev() {
            t = &t * h.get(i + 1, i);
            if t.is_zero() {
                break;
            }
            let c = h.get(i, k) * &t;
            if !c.is_zero() {
                next = &next - &p[i].scale(&c);
            }
        }
        p.push(next);
    }
    Ok(p.pop().expect("nonempty"))
}

/// Monic annihilating polynomial of least degree, found as the first power
/// of `m` that is a combination of the lower ones.
pub fn min_poly(m: &Matrix) -> Result<UniPoly> {
    if !m.is_square() {
        return Err(invalid(format!("min_poly of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let flatten = |a: &Matrix| -> Vec<Rational> { (0..n).flat_map(|r| a.row(r).to_vec()).collect() };
    let mut power = Matrix::identity(n);
    let mut powers = vec![flatten(&power)];
    for d in 1..=n {
        power = &power * m;
        let target = flatten(&power);
        if let Some(c) = solve_membership(&powers, &target)? {
            let mut coeffs: Vec<Rational> = c.iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            return Ok(UniPoly::from_coeffs(coeffs));
        }
        powers.push(target);
        debug_assert!(d < n, "Cayley–Hamilton bounds the degree");
    }
    if n == 0 {
        return Ok(UniPoly::one());
    }
    Err(crate::error::Error::Invariant("no annihilating polynomial up to degree n".into()))
}
