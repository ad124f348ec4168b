//! Multivariate Laurent polynomials in a fixed list of loop variables.
//!
//! A [`ZPoly`] has a fixed arity `n` and stores a finite map from integer
//! exponent vectors of length `n` to nonzero [`RatQ`] coefficients. The
//! variables commute with each other and with `q`, and are invertible, so
//! exponents may be negative. The type is used for loop-weight bookkeeping:
//! Schur polynomials in the `z_{i,nu}`, values of a `z`-valued bilinear
//! form, and constant-term inner products.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::RatQ;

/// A Laurent polynomial in `arity` commuting invertible variables over
/// [`RatQ`]. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ZPoly {
    arity: usize,
    terms: BTreeMap<Vec<i32>, RatQ>,
}

impl ZPoly {
    /// The zero polynomial in `arity` variables.
    pub fn zero(arity: usize) -> Self {
        ZPoly { arity, terms: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one(arity: usize) -> Self {
        Self::constant(arity, RatQ::one())
    }

    /// A constant polynomial.
    pub fn constant(arity: usize, c: RatQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; arity], c);
        }
        ZPoly { arity, terms }
    }

    /// The single variable `z_j`.
    pub fn var(arity: usize, j: usize) -> Self {
        Self::var_pow(arity, j, 1, RatQ::one())
    }

    /// The monomial `c * z_j^k`.
    pub fn var_pow(arity: usize, j: usize, k: i32, c: RatQ) -> Self {
        assert!(j < arity, "ZPoly::var_pow: variable index {j} out of range for arity {arity}");
        let mut exps = vec![0; arity];
        exps[j] = k;
        Self::monomial(exps, c)
    }

    /// The monomial with the given exponent vector and coefficient.
    pub fn monomial(exps: Vec<i32>, c: RatQ) -> Self {
        let arity = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        ZPoly { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// The coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[i32]) -> RatQ {
        assert_eq!(exps.len(), self.arity, "ZPoly::coeff: exponent vector has wrong length");
        self.terms.get(exps).cloned().unwrap_or_else(RatQ::zero)
    }

    /// The coefficient of the monomial `1`, i.e. the constant term.
    pub fn constant_term(&self) -> RatQ {
        self.coeff(&vec![0; self.arity])
    }

    /// Iterate over `(exponent vector, coefficient)` pairs in lexicographic
    /// order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &RatQ)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Substitute `z_j -> z_j^{-1}` for every variable.
    pub fn invert_vars(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|&x| -x).collect(), c.clone()))
            .collect();
        ZPoly { arity: self.arity, terms }
    }

    /// Apply the bar substitution `q -> q^{-1}` to every coefficient,
    /// leaving the loop variables alone.
    pub fn bar_q(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c.bar())).collect();
        ZPoly { arity: self.arity, terms }
    }

    /// Multiply by the monomial `z_j^k`.
    pub fn mul_var_pow(&self, j: usize, k: i32) -> Self {
        assert!(j < self.arity, "ZPoly::mul_var_pow: variable index out of range");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[j] += k;
                (e, c.clone())
            })
            .collect();
        ZPoly { arity: self.arity, terms }
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        ZPoly { arity: self.arity, terms }
    }

    /// Total degree of each term ranges over this iterator; `None` for zero.
    pub fn total_degrees(&self) -> Option<(i64, i64)> {
        if self.terms.is_empty() {
            return None;
        }
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for e in self.terms.keys() {
            let d: i64 = e.iter().map(|&x| x as i64).sum();
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Some((lo, hi))
    }

    /// `self^k` for `k >= 0` by repeated squaring.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    fn insert_term(&mut self, exps: Vec<i32>, c: RatQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

// ---- Add ----

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, other: &ZPoly) -> ZPoly {
        assert_eq!(self.arity, other.arity, "ZPoly::add: arity mismatch");
        let mut result = self.clone();
        for (e, c) in &other.terms {
            result.insert_term(e.clone(), c.clone());
        }
        result
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, other: ZPoly) -> ZPoly {
        &self + &other
    }
}

// ---- Sub ----

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, other: &ZPoly) -> ZPoly {
        assert_eq!(self.arity, other.arity, "ZPoly::sub: arity mismatch");
        let mut result = self.clone();
        for (e, c) in &other.terms {
            result.insert_term(e.clone(), -c.clone());
        }
        result
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, other: ZPoly) -> ZPoly {
        &self - &other
    }
}

// ---- Neg ----

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        ZPoly { arity: self.arity, terms }
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}

// ---- Mul ----

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, other: &ZPoly) -> ZPoly {
        assert_eq!(self.arity, other.arity, "ZPoly::mul: arity mismatch");
        let mut result = ZPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                result.insert_term(exps, c1 * c2);
            }
        }
        result
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, other: ZPoly) -> ZPoly {
        &self * &other
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(j, &x)| if x == 1 { format!("z{j}") } else { format!("z{j}^{x}") })
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly[{}]({})", self.arity, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> RatQ {
        RatQ::from_int(n)
    }

    #[test]
    fn ring_operations() {
        // (z0 + z1)(z0 - z1) = z0^2 - z1^2
        let a = ZPoly::var(2, 0) + ZPoly::var(2, 1);
        let b = ZPoly::var(2, 0) - ZPoly::var(2, 1);
        let p = &a * &b;
        assert_eq!(p.coeff(&[2, 0]), r(1));
        assert_eq!(p.coeff(&[0, 2]), r(-1));
        assert_eq!(p.coeff(&[1, 1]), r(0));
        assert_eq!(p.num_terms(), 2);

        let zero = &p - &p;
        assert!(zero.is_zero());
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn laurent_monomials_and_inversion() {
        // p = 2 z0 z1^{-1} + 3
        let p = ZPoly::monomial(vec![1, -1], r(2)) + ZPoly::constant(2, r(3));
        assert_eq!(p.constant_term(), r(3));
        let q = p.invert_vars();
        assert_eq!(q.coeff(&[-1, 1]), r(2));
        assert_eq!(q.constant_term(), r(3));
        assert_eq!(q.invert_vars(), p);
    }

    #[test]
    fn constant_term_of_products() {
        // [ (z0 + z0^{-1})^2 ]_1 = 2
        let p = ZPoly::var(1, 0) + ZPoly::var_pow(1, 0, -1, r(1));
        let sq = &p * &p;
        assert_eq!(sq.constant_term(), r(2));
    }

    #[test]
    fn var_pow_shift_and_pow() {
        let p = ZPoly::one(2) + ZPoly::var(2, 1);
        let shifted = p.mul_var_pow(0, -2);
        assert_eq!(shifted.coeff(&[-2, 0]), r(1));
        assert_eq!(shifted.coeff(&[-2, 1]), r(1));
        let cube = p.pow(3);
        assert_eq!(cube.coeff(&[0, 2]), r(3));
        assert_eq!(cube.coeff(&[0, 3]), r(1));
        assert_eq!(p.pow(0), ZPoly::one(2));
    }

    #[test]
    fn bar_q_touches_coefficients_only() {
        let c = RatQ::q_pow(3);
        let p = ZPoly::monomial(vec![2], c.clone());
        let barred = p.bar_q();
        assert_eq!(barred.coeff(&[2]), RatQ::q_pow(-3));
    }

    #[test]
    fn total_degree_window() {
        let p = ZPoly::monomial(vec![1, -3], r(1)) + ZPoly::monomial(vec![2, 2], r(5));
        assert_eq!(p.total_degrees(), Some((-2, 4)));
        assert_eq!(ZPoly::zero(2).total_degrees(), None);
    }
}
