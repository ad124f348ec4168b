//! Integer-coefficient Laurent polynomials in `q`.
//!
//! [`LaurentQ`] stores a valuation (lowest exponent) and a dense coefficient
//! vector with nonzero first and last entries. Zero is the empty vector. All
//! arithmetic is exact over arbitrary-precision integers, and the bar
//! operation `q -> q^{-1}` is a ring involution.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer-coefficient Laurent polynomial in the single variable `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    /// Exponent of the first stored coefficient; meaningful only when
    /// `coeffs` is nonempty.
    min_exp: i64,
    /// Dense coefficients from `min_exp` upward; first and last are nonzero.
    coeffs: Vec<BigInt>,
}

impl LaurentQ {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// Constant polynomial from an integer.
    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, BigInt::from(n))
    }

    /// `c * q^k`.
    pub fn monomial(k: i64, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { min_exp: k, coeffs: vec![c] }
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(k, BigInt::one())
    }

    /// Build from an explicit (exponent, coefficient) list; repeated
    /// exponents are summed.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut acc = Self::zero();
        for &(k, c) in terms {
            acc += Self::monomial(k, BigInt::from(c));
        }
        acc
    }

    fn trim(mut self) -> Self {
        let first_nz = self.coeffs.iter().position(|c| !c.is_zero());
        match first_nz {
            None => Self::zero(),
            Some(lo) => {
                let hi = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.drain(hi + 1..);
                self.coeffs.drain(..lo);
                self.min_exp += lo as i64;
                self
            }
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.min_exp == 0 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient; `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    /// Highest exponent with nonzero coefficient; `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let idx = k - self.min_exp;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Iterate over (exponent, coefficient) pairs in ascending exponent
    /// order, skipping zero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(j, c)| (self.min_exp + j as i64, c))
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        let min_exp = -(self.min_exp + self.coeffs.len() as i64 - 1);
        Self { min_exp, coeffs }.trim()
    }

    /// Multiply by `q^k` in place.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { min_exp: self.min_exp + k, coeffs: self.coeffs.clone() }
    }

    /// Substitute `q -> -q`: negates coefficients of odd exponents.
    pub fn subst_neg_q(&self) -> Self {
        let mut out = self.clone();
        for (j, c) in out.coeffs.iter_mut().enumerate() {
            if (out.min_exp + j as i64).rem_euclid(2) == 1 {
                *c = -std::mem::take(c);
            }
        }
        out
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Leading coefficient (highest exponent); zero for zero.
    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Trailing coefficient (lowest exponent); zero for zero.
    pub fn trail(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Divide every coefficient by `d`, which must divide exactly.
    pub fn div_int(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero(), "LaurentQ::div_int: division by zero");
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let (quo, rem) = c.div_rem(d);
                assert!(rem.is_zero(), "LaurentQ::div_int: nonzero remainder");
                quo
            })
            .collect();
        Self { min_exp: self.min_exp, coeffs }.trim()
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluate at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division; panics if `rhs` is zero or does not divide.
    pub fn exact_div(&self, rhs: &Self) -> Self {
        let (quo, rem) = self.div_rem(rhs);
        assert!(rem.is_zero(), "LaurentQ::exact_div: nonzero remainder");
        quo
    }

    /// Laurent division with remainder: divides the underlying ordinary
    /// polynomials after aligning valuations, so `self = quo*rhs + rem` with
    /// `rem` of smaller polynomial degree than `rhs` (up to a `q`-power unit).
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "LaurentQ::div_rem: division by zero");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        // Work with plain polynomials: strip q-powers, divide over Q-free
        // integer arithmetic by requiring the leading coefficient to divide
        // at every step; non-divisible steps leave a remainder.
        let a_val = self.min_exp;
        let b_val = rhs.min_exp;
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let div: &[BigInt] = &rhs.coeffs;
        let dn = div.len();
        if rem.len() < dn {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![BigInt::zero(); rem.len() - dn + 1];
        for j in (0..quo.len()).rev() {
            let top = rem[j + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&div[dn - 1]);
            if r.is_zero() {
                quo[j] = c.clone();
                for (k, d) in div.iter().enumerate() {
                    rem[j + k] -= &c * d;
                }
            }
        }
        let quo = Self { min_exp: a_val - b_val, coeffs: quo }.trim();
        let rem = Self { min_exp: a_val, coeffs: rem }.trim();
        (quo, rem)
    }

    /// Pseudo-remainder of the underlying polynomials: returns `r` with
    /// `lead(rhs)^k * self = q*rhs + r` for some `k`, valuations ignored.
    /// Used by the primitive-PRS gcd.
    fn pseudo_rem_poly(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut rem = a.to_vec();
        let lb = b.last().expect("pseudo_rem_poly: empty divisor").clone();
        let dn = b.len();
        while rem.len() >= dn && rem.iter().any(|c| !c.is_zero()) {
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() < dn {
                break;
            }
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - dn;
            for c in rem.iter_mut() {
                *c *= &lb;
            }
            for (k, d) in b.iter().enumerate() {
                rem[shift + k] -= &top * d;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        rem
    }

    /// Gcd up to a `q`-power unit: the result is a primitive ordinary
    /// polynomial with nonzero constant term and positive leading
    /// coefficient, scaled by gcd of the contents.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.positive_unit_normal();
        }
        if other.is_zero() {
            return self.positive_unit_normal();
        }
        let cont = self.content().gcd(&other.content());
        let mut a: Vec<BigInt> = self.coeffs.iter().map(|c| c / self.content()).collect();
        let mut b: Vec<BigInt> = other.coeffs.iter().map(|c| c / other.content()).collect();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        // Primitive PRS: pseudo-remainder, then strip content each round.
        loop {
            let r = Self::pseudo_rem_poly(&a, &b);
            if r.is_empty() {
                break;
            }
            let rp = Self { min_exp: 0, coeffs: r }.trim();
            let rc = rp.content();
            a = b;
            b = rp.coeffs.iter().map(|c| c / &rc).collect();
        }
        let g = Self { min_exp: 0, coeffs: b }.trim();
        let g = g.positive_unit_normal();
        Self { min_exp: 0, coeffs: g.coeffs.iter().map(|c| c * &cont).collect() }.trim()
    }

    /// Strip the `q`-power unit and fix the leading sign: the result has
    /// lowest exponent 0 and positive leading coefficient.
    pub fn positive_unit_normal(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Self { min_exp: 0, coeffs: self.coeffs.clone() };
        if out.lead().is_negative() {
            for c in out.coeffs.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        out
    }
}

// ---- Gauss integers ----

/// The Gauss integer `[n] = (q^n - q^{-n})/(q - q^{-1})`, a bar-invariant
/// Laurent polynomial; `[-n] = -[n]`.
pub fn gauss_int(n: i64) -> LaurentQ {
    if n == 0 {
        return LaurentQ::zero();
    }
    let m = n.unsigned_abs() as i64;
    // [m] = q^{1-m} + q^{3-m} + ... + q^{m-1}: m terms at stride 2.
    let mut full = vec![BigInt::zero(); (2 * m - 1) as usize];
    for j in 0..m as usize {
        full[2 * j] = BigInt::one();
    }
    let p = LaurentQ { min_exp: 1 - m, coeffs: full }.trim();
    if n < 0 {
        -p
    } else {
        p
    }
}

/// `[n]! = [n][n-1]...[1]`; panics for negative `n`.
pub fn gauss_factorial(n: i64) -> LaurentQ {
    assert!(n >= 0, "gauss_factorial: negative argument {n}");
    let mut acc = LaurentQ::one();
    for k in 1..=n {
        acc = &acc * &gauss_int(k);
    }
    acc
}

/// Gauss binomial `[n choose k] = [n]!/([k]![n-k]!)` for `0 <= k <= n`,
/// computed by exact division.
pub fn gauss_binomial(n: i64, k: i64) -> LaurentQ {
    if k < 0 || k > n {
        return LaurentQ::zero();
    }
    let num = gauss_factorial(n);
    let den = &gauss_factorial(k) * &gauss_factorial(n - k);
    num.exact_div(&den)
}

// ---- Add ----

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(rhs.min_exp + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
        for (k, c) in self.terms() {
            coeffs[(k - lo) as usize] += c;
        }
        for (k, c) in rhs.terms() {
            coeffs[(k - lo) as usize] += c;
        }
        LaurentQ { min_exp: lo, coeffs }.trim()
    }
}

impl Add for LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: LaurentQ) -> LaurentQ {
        &self + &rhs
    }
}

impl AddAssign for LaurentQ {
    fn add_assign(&mut self, rhs: LaurentQ) {
        *self = &*self + &rhs;
    }
}

// ---- Sub ----

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        self + &(-rhs)
    }
}

impl Sub for LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: LaurentQ) -> LaurentQ {
        &self - &rhs
    }
}

impl SubAssign for LaurentQ {
    fn sub_assign(&mut self, rhs: LaurentQ) {
        *self = &*self - &rhs;
    }
}

// ---- Neg ----

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -&self
    }
}

// ---- Mul ----

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQ::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentQ { min_exp: self.min_exp + rhs.min_exp, coeffs }.trim()
    }
}

impl Mul for LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: LaurentQ) -> LaurentQ {
        &self * &rhs
    }
}

impl MulAssign for LaurentQ {
    fn mul_assign(&mut self, rhs: LaurentQ) {
        *self = &*self * &rhs;
    }
}

// ---- Display ----

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one() && k != 0;
            if !unit_coeff {
                write!(f, "{abs}")?;
            }
            if k != 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentQ {
        LaurentQ::q_pow(1)
    }

    #[test]
    fn basic_arithmetic() {
        // (q + q^{-1})^2 = q^2 + 2 + q^{-2}
        let two = LaurentQ::from_terms(&[(1, 1), (-1, 1)]);
        let sq = &two * &two;
        assert_eq!(sq, LaurentQ::from_terms(&[(2, 1), (0, 2), (-2, 1)]));
        // q - q = 0
        assert!((&q() - &q()).is_zero());
    }

    #[test]
    fn bar_is_involution() {
        let p = LaurentQ::from_terms(&[(-3, 2), (0, -1), (2, 5)]);
        assert_eq!(p.bar().bar(), p);
        // bar(q^2) = q^{-2}
        assert_eq!(LaurentQ::q_pow(2).bar(), LaurentQ::q_pow(-2));
    }

    #[test]
    fn gauss_values() {
        // [2] = q + q^{-1}
        assert_eq!(gauss_int(2), LaurentQ::from_terms(&[(1, 1), (-1, 1)]));
        // [3] = q^2 + 1 + q^{-2}
        assert_eq!(gauss_int(3), LaurentQ::from_terms(&[(2, 1), (0, 1), (-2, 1)]));
        // [0]! = 1
        assert!(gauss_factorial(0).is_one());
        // [0] = 0, [-n] = -[n]
        assert!(gauss_int(0).is_zero());
        assert_eq!(gauss_int(-3), -gauss_int(3));
        // [n] is bar-invariant
        for n in 1..8 {
            assert_eq!(gauss_int(n).bar(), gauss_int(n));
        }
    }

    #[test]
    fn gauss_binomial_pascal() {
        // [n choose k] = q^{-k}[n-1 choose k-1] + q^{n-k}[n-1 choose k]... use
        // the symmetric recurrence instead: check against the product identity
        // [n choose k][k]! [n-k]! = [n]!.
        for n in 0..7 {
            for k in 0..=n {
                let lhs = &(&gauss_binomial(n, k) * &gauss_factorial(k)) * &gauss_factorial(n - k);
                assert_eq!(lhs, gauss_factorial(n), "n={n} k={k}");
                // bar-invariant and q=1 value = ordinary binomial
                assert_eq!(gauss_binomial(n, k).bar(), gauss_binomial(n, k));
            }
        }
        // [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4... check eval at q=1 is 6
        assert_eq!(gauss_binomial(4, 2).eval_one(), BigInt::from(6));
    }

    #[test]
    fn division_and_gcd() {
        // (q^2 - q^{-2}) / (q - q^{-1}) = q + q^{-1}
        let num = LaurentQ::from_terms(&[(2, 1), (-2, -1)]);
        let den = LaurentQ::from_terms(&[(1, 1), (-1, -1)]);
        assert_eq!(num.exact_div(&den), gauss_int(2));
        // gcd((q-1)(q+1), (q-1)q^3) = q - 1 up to unit
        let a = LaurentQ::from_terms(&[(2, 1), (0, -1)]);
        let b = LaurentQ::from_terms(&[(4, 1), (3, -1)]);
        let g = a.gcd(&b);
        assert_eq!(g, LaurentQ::from_terms(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn display_format() {
        let p = LaurentQ::from_terms(&[(-2, -1), (0, 3), (1, 1), (3, -4)]);
        assert_eq!(p.to_string(), "-q^-2 + 3 + q - 4*q^3");
        assert_eq!(LaurentQ::zero().to_string(), "0");
    }

    #[test]
    fn neg_q_substitution() {
        let p = LaurentQ::from_terms(&[(-1, 1), (0, 2), (2, 3)]);
        assert_eq!(p.subst_neg_q(), LaurentQ::from_terms(&[(-1, -1), (0, 2), (2, 3)]));
    }
}
