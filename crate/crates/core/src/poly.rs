//! Dense univariate polynomials with arbitrary-precision integer coefficients,
//! and exact isolation of the largest real root.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficients in ascending degree; never carries trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - a`.
    pub fn linear_root(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| &acc * self)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(num/den)` for `den > 0`, computed exactly as the sign of
    /// `sum c_i num^i den^(d-i)`.
    fn sign_at(&self, num: &BigInt, den: &BigInt) -> Ordering {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if i + 1 == self.coeffs.len() {
                acc = c.clone();
            } else {
                den_pow *= den;
                acc = acc * num + c * &den_pow;
            }
        }
        acc.cmp(&BigInt::zero())
    }

    pub fn sign_at_rational(&self, x: &BigRational) -> Ordering {
        self.sign_at(x.numer(), x.denom())
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Remainder of `|lc(b)|^(deg a - deg b + 1) * a` on division by `b`.
    /// The multiplier is positive, so signs are preserved for Sturm chains.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lc = b.leading().abs();
        let lcb = b.leading();
        let mut r = self.coeffs.clone();
        let steps = da - db + 1;
        for c in r.iter_mut() {
            *c *= lc.pow(steps as u32);
        }
        for i in (db..=da).rev() {
            let top = std::mem::take(&mut r[i]);
            if top.is_zero() {
                continue;
            }
            let q = &top / &lcb;
            debug_assert!((&q * &lcb) == top);
            for (j, bc) in b.coeffs.iter().enumerate().take(db) {
                r[i - db + j] -= &q * bc;
            }
        }
        Self::new(r)
    }

    /// Exact quotient; fails unless `b` divides `self` over the integers.
    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let lc = b.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for i in (db..=da).rev() {
            let (qi, rem) = r[i].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[i - db + j] -= &qi * bc;
            }
            q[i - db] = qi;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        if a.leading().is_negative() {
            -a
        } else {
            a
        }
    }

    /// Primitive square-free part with the same real roots.
    pub fn square_free(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        self.primitive().exact_div(&g).expect("gcd divides its argument").primitive()
    }

    /// Sturm chain of the square-free part.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let p0 = self.square_free();
        let p1 = p0.derivative().primitive();
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            if chain[n - 1].degree().unwrap_or(0) == 0 || chain[n - 1].is_zero() {
                break;
            }
            let r = -chain[n - 2].pseudo_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.primitive());
        }
        chain
    }

    /// Upper bound on the absolute value of every complex root (Cauchy).
    pub fn root_bound(&self) -> BigInt {
        let lc = self.leading().abs();
        let max = self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default();
        BigInt::one() + max.div_ceil(&lc)
    }
}

fn sign_changes(chain: &[IntegerPolynomial], x: &BigRational) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at_rational(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn rational(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::InvalidParameter(format!("non-finite bound {x}")))
}

/// Largest real root of `p`, to absolute error below `1e-13`.
///
/// Roots are counted exactly with a Sturm chain and the bracket is bisected
/// over rationals. With `range = Some((lo, hi))` only roots in `(lo, hi]`
/// are considered.
pub fn largest_real_root(p: &IntegerPolynomial, range: Option<(f64, f64)>) -> Result<f64> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::NoRealRoot);
    }
    let chain = p.sturm_chain();
    let bound = BigRational::from_integer(p.root_bound());
    let (mut lo, mut hi) = match range {
        Some((a, b)) => (rational(a)?, rational(b)?),
        None => (-bound.clone(), bound.clone()),
    };
    if lo >= hi {
        return Err(Error::InvalidParameter("empty search range".into()));
    }
    let count = |a: &BigRational, b: &BigRational| sign_changes(&chain, a) as i64 - sign_changes(&chain, b) as i64;
    if count(&lo, &hi) <= 0 {
        return Err(Error::NoRealRoot);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let tol = rational(1e-14)?;
    // invariant: the largest root in range lies in (lo, hi]
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        if count(&mid, &hi) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if chain[0].sign_at_rational(&hi) == Ordering::Equal {
        return Ok(hi.to_f64().unwrap_or(f64::NAN));
    }
    Ok(((&lo + &hi) / two).to_f64().unwrap_or(f64::NAN))
}

impl Neg for IntegerPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, rhs: Self) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn sub(self, rhs: Self) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, rhs: Self) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntegerPolynomial {
            type Output = IntegerPolynomial;
            fn $m(self, rhs: Self) -> IntegerPolynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPolynomial({self})")
    }
}
