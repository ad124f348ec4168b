//! Rational functions in `q` as reduced fractions of Laurent polynomials.
//!
//! [`RatQ`] keeps a canonical form: the denominator is an ordinary polynomial
//! (lowest exponent 0) with nonzero constant term and positive leading
//! coefficient, the fraction is reduced by the polynomial gcd, and the integer
//! contents of numerator and denominator are coprime. Canonical form makes
//! structural equality coincide with mathematical equality.
//!
//! Order-of-vanishing evaluation at `q = 0` and `q = infinity` supports the
//! crystal-lattice membership tests: a scalar lies in the local ring at 0
//! exactly when its reduced numerator has nonnegative valuation.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[cfg(test)]
use num_bigint::BigInt;

use super::laurent::LaurentQ;

/// Reduced fraction of integer Laurent polynomials in `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatQ {
    num: LaurentQ,
    den: LaurentQ,
}

impl Default for RatQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatQ {
    /// The zero function.
    pub fn zero() -> Self {
        Self { num: LaurentQ::zero(), den: LaurentQ::one() }
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self { num: LaurentQ::one(), den: LaurentQ::one() }
    }

    /// Constant from an integer.
    pub fn from_int(n: i64) -> Self {
        Self { num: LaurentQ::from_int(n), den: LaurentQ::one() }
    }

    /// Embed a Laurent polynomial.
    pub fn from_laurent(p: LaurentQ) -> Self {
        Self { num: p, den: LaurentQ::one() }
    }

    /// Embed an exact rational constant.
    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(
            LaurentQ::monomial(0, r.numer().clone()),
            LaurentQ::monomial(0, r.denom().clone()),
        )
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(LaurentQ::q_pow(k))
    }

    /// Build and normalize `num/den`; panics on zero denominator.
    pub fn new(num: LaurentQ, den: LaurentQ) -> Self {
        assert!(!den.is_zero(), "RatQ::new: zero denominator");
        Self { num, den }.normalize()
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        // Shift the q-power unit of the denominator into the numerator.
        let dv = self.den.min_exp().unwrap();
        self.den = self.den.shift(-dv);
        self.num = self.num.shift(-dv);
        // Reduce by the polynomial gcd (a plain polynomial by construction).
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g);
            self.den = self.den.exact_div(&g);
            let dv = self.den.min_exp().unwrap();
            self.den = self.den.shift(-dv);
            self.num = self.num.shift(-dv);
        }
        // Coprime integer contents, positive denominator lead.
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            self.num = self.num.div_int(&c);
            self.den = self.den.div_int(&c);
        }
        if self.den.lead().is_negative() {
            self.num = -self.num;
            self.den = -self.den;
        }
        self
    }

    /// Numerator of the reduced form.
    pub fn numer(&self) -> &LaurentQ {
        &self.num
    }

    /// Denominator of the reduced form.
    pub fn denom(&self) -> &LaurentQ {
        &self.den
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for the constant 1.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent
    /// polynomial; returns it.
    pub fn as_laurent(&self) -> Option<&LaurentQ> {
        self.den.is_one().then_some(&self.num)
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    /// Substitute `q -> -q`.
    pub fn subst_neg_q(&self) -> Self {
        Self::new(self.num.subst_neg_q(), self.den.subst_neg_q())
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "RatQ::inv: zero has no inverse");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power (negative allowed for nonzero values).
    pub fn powi(&self, n: i64) -> Self {
        if n >= 0 {
            let mut acc = Self::one();
            let mut base = self.clone();
            let mut e = n as u64;
            while e > 0 {
                if e & 1 == 1 {
                    acc = &acc * &base;
                }
                e >>= 1;
                if e > 0 {
                    base = &base * &base;
                }
            }
            acc
        } else {
            self.inv().powi(-n)
        }
    }

    /// Order of vanishing at `q = 0` (negative for a pole); `None` for zero.
    pub fn ord_at_zero(&self) -> Option<i64> {
        // den has nonzero constant term, so the order is the numerator's
        // valuation.
        self.num.min_exp()
    }

    /// Order of vanishing at `q = infinity`; `None` for zero.
    pub fn ord_at_infinity(&self) -> Option<i64> {
        Some(self.den.max_exp().unwrap() - self.num.max_exp()?)
    }

    /// True when the value is regular at `q = 0` (lies in the local ring
    /// `A_0`).
    pub fn regular_at_zero(&self) -> bool {
        self.ord_at_zero().is_none_or(|v| v >= 0)
    }

    /// True when the value is regular at `q = infinity`.
    pub fn regular_at_infinity(&self) -> bool {
        self.ord_at_infinity().is_none_or(|v| v >= 0)
    }

    /// Value at `q = 0`; `None` when singular there.
    pub fn value_at_zero(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.ord_at_zero().unwrap() {
            v if v > 0 => Some(BigRational::zero()),
            0 => Some(BigRational::new(self.num.coeff(0), self.den.coeff(0))),
            _ => None,
        }
    }

    /// Value at `q = infinity`; `None` when singular there.
    pub fn value_at_infinity(&self) -> Option<BigRational> {
        self.bar().value_at_zero()
    }

    /// Exact rational value if the function is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let num_const = self.num.min_exp() == Some(0) && self.num.max_exp() == Some(0);
        let den_const = self.den.max_exp() == Some(0);
        (num_const && den_const)
            .then(|| BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }
}

// ---- Add ----

impl Add for &RatQ {
    type Output = RatQ;
    fn add(self, rhs: &RatQ) -> RatQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        RatQ::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Add for RatQ {
    type Output = RatQ;
    fn add(self, rhs: RatQ) -> RatQ {
        &self + &rhs
    }
}

impl AddAssign for RatQ {
    fn add_assign(&mut self, rhs: RatQ) {
        *self = &*self + &rhs;
    }
}

// ---- Sub ----

impl Sub for &RatQ {
    type Output = RatQ;
    fn sub(self, rhs: &RatQ) -> RatQ {
        self + &(-rhs)
    }
}

impl Sub for RatQ {
    type Output = RatQ;
    fn sub(self, rhs: RatQ) -> RatQ {
        &self - &rhs
    }
}

impl SubAssign for RatQ {
    fn sub_assign(&mut self, rhs: RatQ) {
        *self = &*self - &rhs;
    }
}

// ---- Neg ----

impl Neg for &RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        RatQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        -&self
    }
}

// ---- Mul ----

impl Mul for &RatQ {
    type Output = RatQ;
    fn mul(self, rhs: &RatQ) -> RatQ {
        if self.is_zero() || rhs.is_zero() {
            return RatQ::zero();
        }
        RatQ::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RatQ {
    type Output = RatQ;
    fn mul(self, rhs: RatQ) -> RatQ {
        &self * &rhs
    }
}

impl MulAssign for RatQ {
    fn mul_assign(&mut self, rhs: RatQ) {
        *self = &*self * &rhs;
    }
}

// ---- Div ----

impl Div for &RatQ {
    type Output = RatQ;
    fn div(self, rhs: &RatQ) -> RatQ {
        assert!(!rhs.is_zero(), "RatQ::div: division by zero");
        self * &rhs.inv()
    }
}

impl Div for RatQ {
    type Output = RatQ;
    fn div(self, rhs: RatQ) -> RatQ {
        &self / &rhs
    }
}

// ---- Display ----

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<LaurentQ> for RatQ {
    fn from(p: LaurentQ) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RatQ {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// Gauss integer `[n]` as a rational function, for divisions.
pub fn gauss_int_rat(n: i64) -> RatQ {
    RatQ::from_laurent(super::laurent::gauss_int(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsymbolic::laurent::{gauss_factorial, gauss_int};

    #[test]
    fn reduction_is_canonical() {
        // (q^2 - 1)/(q - 1) = q + 1
        let f = RatQ::new(
            LaurentQ::from_terms(&[(2, 1), (0, -1)]),
            LaurentQ::from_terms(&[(1, 1), (0, -1)]),
        );
        assert_eq!(f, RatQ::from_laurent(LaurentQ::from_terms(&[(1, 1), (0, 1)])));
        assert!(f.as_laurent().is_some());
        // 2/4 = 1/2 canonical
        let half = RatQ::new(LaurentQ::from_int(2), LaurentQ::from_int(4));
        assert_eq!(half, RatQ::new(LaurentQ::from_int(1), LaurentQ::from_int(2)));
    }

    #[test]
    fn field_identities() {
        let a = RatQ::new(gauss_int(3), gauss_int(2));
        let b = RatQ::new(LaurentQ::from_terms(&[(1, 1), (0, 7)]), gauss_factorial(3));
        // a + b - b = a, (a*b)/b = a
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a * &a.inv()).is_one());
    }

    #[test]
    fn orders_at_zero_and_infinity() {
        // q^{-2}*(1+q)/(1+q^3): ord_0 = -2, regular at infinity (ord_inf = 2... )
        let f = RatQ::new(
            LaurentQ::from_terms(&[(-2, 1), (-1, 1)]),
            LaurentQ::from_terms(&[(0, 1), (3, 1)]),
        );
        assert_eq!(f.ord_at_zero(), Some(-2));
        assert!(!f.regular_at_zero());
        assert!(f.value_at_zero().is_none());
        assert_eq!(f.ord_at_infinity(), Some(4));
        assert_eq!(f.value_at_infinity(), Some(BigRational::zero()));
        // 1/(q - q^{-1}) has a pole at both 0 and infinity? No: normalize
        // 1/(q - q^{-1}) = q/(q^2 - 1): ord_0 = 1, value 0; at infinity
        // ord = 1, value 0.
        let g = RatQ::one() / RatQ::from_laurent(LaurentQ::from_terms(&[(1, 1), (-1, -1)]));
        assert_eq!(g.ord_at_zero(), Some(1));
        assert_eq!(g.value_at_zero(), Some(BigRational::zero()));
        assert_eq!(g.ord_at_infinity(), Some(1));
    }

    #[test]
    fn bar_on_fractions() {
        // bar([3]/[2]) = [3]/[2] (Gauss integers are bar-invariant)
        let f = RatQ::new(gauss_int(3), gauss_int(2));
        assert_eq!(f.bar(), f);
        // bar(q/(1+q)) = q^{-1}/(1+q^{-1}) = 1/(q+1)
        let g = RatQ::new(LaurentQ::q_pow(1), LaurentQ::from_terms(&[(0, 1), (1, 1)]));
        assert_eq!(
            g.bar(),
            RatQ::new(LaurentQ::one(), LaurentQ::from_terms(&[(0, 1), (1, 1)]))
        );
    }

    #[test]
    fn constants() {
        let c = RatQ::new(LaurentQ::from_int(10), LaurentQ::from_int(4));
        assert_eq!(c.as_constant(), Some(BigRational::new(BigInt::from(5), BigInt::from(2))));
        assert_eq!(RatQ::q_pow(2).as_constant(), None);
    }
}
