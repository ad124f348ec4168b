//! Weight, root, and coweight vectors over an affine Cartan datum.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::cartan::datum::{AffineCartanDatum, TypeLabel};
use crate::error::{QError, QResult};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Serializes one named coefficient as `[label, numerator, denominator]`,
/// with the integer parts rendered as decimal strings so arbitrarily large
/// values survive the round trip.
fn coeff_entry(label: &str, value: &BigRational) -> (String, String, String) {
    (
        label.to_string(),
        value.numer().to_string(),
        value.denom().to_string(),
    )
}

struct CoeffList(Vec<(String, String, String)>);

impl Serialize for CoeffList {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (label, num, den) in &self.0 {
            seq.serialize_element(&(label, num, den))?;
        }
        seq.end()
    }
}

fn serialize_vector<S: Serializer>(
    serializer: S,
    name: &'static str,
    label: TypeLabel,
    coeffs: Vec<(String, String, String)>,
) -> Result<S::Ok, S::Error> {
    let mut s = serializer.serialize_struct(name, 3)?;
    s.serialize_field("type", &label.family.to_string())?;
    s.serialize_field("rank", &label.rank)?;
    s.serialize_field("coeffs", &CoeffList(coeffs))?;
    s.end()
}

fn write_linear_combination(
    f: &mut fmt::Formatter<'_>,
    terms: &[(String, BigRational)],
) -> fmt::Result {
    let mut first = true;
    for (label, c) in terms {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = c.abs();
        if a.is_one() {
            write!(f, "{label}")?;
        } else if a.is_integer() {
            write!(f, "{}*{label}", a.numer())?;
        } else {
            write!(f, "({}/{})*{label}", a.numer(), a.denom())?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

macro_rules! additive_ops {
    ($ty:ident) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                self.checked_add(rhs)
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                (&self).checked_add(&rhs)
            }
        }
        impl Add<&$ty> for $ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                (&self).checked_add(rhs)
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self.checked_add(&rhs.clone().neg())
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                (&self).checked_add(&rhs.neg())
            }
        }
        impl Sub<&$ty> for $ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                (&self).checked_add(&rhs.clone().neg())
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(mut self) -> $ty {
                self.negate_in_place();
                self
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.clone().neg()
            }
        }
    };
}

// ---- weights ----

/// A rational vector in the affine weight space, written over the basis of
/// fundamental weights `Lambda_0..Lambda_n` together with the null root
/// `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    label: TypeLabel,
    /// Coefficients of `Lambda_0..Lambda_n`.
    lambda: Vec<BigRational>,
    /// Coefficient of `delta`.
    delta: BigRational,
}

impl WeightVector {
    /// The zero weight.
    pub fn zero(datum: &AffineCartanDatum) -> Self {
        WeightVector {
            label: datum.label(),
            lambda: vec![BigRational::zero(); datum.num_nodes()],
            delta: BigRational::zero(),
        }
    }

    /// The fundamental weight `Lambda_i`, `i` in `0..=n`.
    pub fn fundamental(datum: &AffineCartanDatum, i: usize) -> Self {
        let mut w = WeightVector::zero(datum);
        w.lambda[i] = BigRational::one();
        w
    }

    /// The null root `delta` viewed as a weight.
    pub fn null_root(datum: &AffineCartanDatum) -> Self {
        let mut w = WeightVector::zero(datum);
        w.delta = BigRational::one();
        w
    }

    /// The level-zero fundamental weight `Lambda_i - a_i^\vee Lambda_0`,
    /// `i` in `1..=n`.
    pub fn level_zero_fundamental(datum: &AffineCartanDatum, i: usize) -> Self {
        let mut w = WeightVector::fundamental(datum, i);
        w.lambda[0] = -rat(datum.comark(i));
        w
    }

    /// Builds a weight from explicit coefficients over
    /// `Lambda_0..Lambda_n` and `delta`.
    pub fn from_coeffs(
        datum: &AffineCartanDatum,
        lambda: Vec<BigRational>,
        delta: BigRational,
    ) -> QResult<Self> {
        if lambda.len() != datum.num_nodes() {
            return Err(QError::ShapeMismatch(format!(
                "WeightVector::from_coeffs: expected {} coefficients, got {}",
                datum.num_nodes(),
                lambda.len()
            )));
        }
        Ok(WeightVector {
            label: datum.label(),
            lambda,
            delta,
        })
    }

    pub fn type_label(&self) -> TypeLabel {
        self.label
    }

    /// Coefficient of `Lambda_i`; this equals the pairing with the simple
    /// coroot `h_i`.
    pub fn lambda_coeff(&self, i: usize) -> &BigRational {
        &self.lambda[i]
    }

    /// Coefficient of `delta`.
    pub fn delta_coeff(&self) -> &BigRational {
        &self.delta
    }

    /// The level, i.e. the pairing with the center.
    pub fn level(&self, datum: &AffineCartanDatum) -> BigRational {
        let mut sum = BigRational::zero();
        for i in datum.affine_indices() {
            sum += rat(datum.comark(i)) * &self.lambda[i];
        }
        sum
    }

    /// The classical projection: the same fundamental-weight coefficients
    /// with the `delta` component dropped.
    pub fn classical(&self) -> Self {
        WeightVector {
            label: self.label,
            lambda: self.lambda.clone(),
            delta: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.delta.is_zero() && self.lambda.iter().all(BigRational::is_zero)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        WeightVector {
            label: self.label,
            lambda: self.lambda.iter().map(|x| x * c).collect(),
            delta: &self.delta * c,
        }
    }

    /// Expresses this weight over the simple roots `alpha_0..alpha_n`,
    /// failing if it lies outside their rational span.
    pub fn to_root_coordinates(&self, datum: &AffineCartanDatum) -> QResult<Vec<BigRational>> {
        datum.check_same(self.label, "WeightVector::to_root_coordinates")?;
        let n = datum.finite_rank();
        // The alpha_0 coordinate is forced by the delta coefficient, after
        // which the finite block is an invertible linear system; the zeroth
        // fundamental-weight coefficient then serves as a consistency check.
        let c0 = self.delta.clone();
        let mut coords = vec![BigRational::zero(); n + 1];
        coords[0] = c0.clone();
        for i in 1..=n {
            let mut value = BigRational::zero();
            for j in 1..=n {
                let rhs = &self.lambda[j] - rat(datum.cartan(j, 0)) * &c0;
                value += datum.inverse_finite_cartan(i, j) * rhs;
            }
            coords[i] = value;
        }
        let mut check = BigRational::zero();
        for (j, c) in coords.iter().enumerate() {
            check += rat(datum.cartan(0, j)) * c;
        }
        if check != self.lambda[0] {
            return Err(QError::InvalidArgument(format!(
                "weight {self} lies outside the span of the simple roots"
            )));
        }
        Ok(coords)
    }

    fn checked_add(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.label, rhs.label,
            "WeightVector::add: mismatched data {} and {}",
            self.label, rhs.label
        );
        WeightVector {
            label: self.label,
            lambda: self
                .lambda
                .iter()
                .zip(&rhs.lambda)
                .map(|(a, b)| a + b)
                .collect(),
            delta: &self.delta + &rhs.delta,
        }
    }

    fn negate_in_place(&mut self) {
        for c in &mut self.lambda {
            *c = -c.clone();
        }
        self.delta = -self.delta.clone();
    }
}

additive_ops!(WeightVector);

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(String, BigRational)> = self
            .lambda
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("Lambda{i}"), c.clone()))
            .collect();
        terms.push(("delta".to_string(), self.delta.clone()));
        write_linear_combination(f, &terms)
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut coeffs = Vec::new();
        for (i, c) in self.lambda.iter().enumerate() {
            if !c.is_zero() {
                coeffs.push(coeff_entry(&format!("Lambda{i}"), c));
            }
        }
        if !self.delta.is_zero() {
            coeffs.push(coeff_entry("delta", &self.delta));
        }
        serialize_vector(serializer, "WeightVector", self.label, coeffs)
    }
}

// ---- roots ----

/// An integer vector in the affine root lattice, written over the simple
/// roots `alpha_0..alpha_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    label: TypeLabel,
    alpha: Vec<i64>,
}

impl RootVector {
    /// The zero vector.
    pub fn zero(datum: &AffineCartanDatum) -> Self {
        RootVector {
            label: datum.label(),
            alpha: vec![0; datum.num_nodes()],
        }
    }

    /// The simple root `alpha_i`, `i` in `0..=n`.
    pub fn simple(datum: &AffineCartanDatum, i: usize) -> Self {
        let mut r = RootVector::zero(datum);
        r.alpha[i] = 1;
        r
    }

    /// The null root `delta`, whose coordinates are the marks.
    pub fn null_root(datum: &AffineCartanDatum) -> Self {
        RootVector {
            label: datum.label(),
            alpha: datum.affine_indices().map(|i| datum.mark(i)).collect(),
        }
    }

    /// Builds a root-lattice vector from explicit coordinates over
    /// `alpha_0..alpha_n`.
    pub fn from_coords(datum: &AffineCartanDatum, alpha: Vec<i64>) -> QResult<Self> {
        if alpha.len() != datum.num_nodes() {
            return Err(QError::ShapeMismatch(format!(
                "RootVector::from_coords: expected {} coordinates, got {}",
                datum.num_nodes(),
                alpha.len()
            )));
        }
        Ok(RootVector {
            label: datum.label(),
            alpha,
        })
    }

    /// Builds `k delta + beta` from a finite root `beta` given over
    /// `alpha_1..alpha_n`.
    pub fn from_finite_and_delta(
        datum: &AffineCartanDatum,
        finite: &[i64],
        k: i64,
    ) -> QResult<Self> {
        if finite.len() != datum.finite_rank() {
            return Err(QError::ShapeMismatch(format!(
                "RootVector::from_finite_and_delta: expected {} finite coordinates, got {}",
                datum.finite_rank(),
                finite.len()
            )));
        }
        let mut alpha = Vec::with_capacity(datum.num_nodes());
        alpha.push(k);
        for (j, &b) in finite.iter().enumerate() {
            alpha.push(b + k * datum.mark(j + 1));
        }
        RootVector::from_coords(datum, alpha)
    }

    pub fn type_label(&self) -> TypeLabel {
        self.label
    }

    /// Coordinate over `alpha_i`.
    pub fn coord(&self, i: usize) -> i64 {
        self.alpha[i]
    }

    pub fn coords(&self) -> &[i64] {
        &self.alpha
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().all(|&c| c == 0)
    }

    /// Sum of the coordinates.
    pub fn height(&self) -> i64 {
        self.alpha.iter().sum()
    }

    /// The coefficient `k` in the unique decomposition `k delta + beta`
    /// with `beta` in the finite root lattice.
    pub fn delta_degree(&self) -> i64 {
        self.alpha[0]
    }

    /// The finite component `beta` of the decomposition `k delta + beta`,
    /// in coordinates over `alpha_1..alpha_n`.
    pub fn finite_part(&self, datum: &AffineCartanDatum) -> Vec<i64> {
        let k = self.delta_degree();
        (1..datum.num_nodes())
            .map(|i| self.alpha[i] - k * datum.mark(i))
            .collect()
    }

    /// Multiplies every coordinate by `k`.
    pub fn scale(&self, k: i64) -> Self {
        RootVector {
            label: self.label,
            alpha: self.alpha.iter().map(|&c| c * k).collect(),
        }
    }

    /// The same vector in the weight space: the `Lambda_i` coefficient of
    /// `alpha_j` is the Cartan entry `a_{ij}`, and the `delta` coefficient
    /// records the `alpha_0` coordinate.
    pub fn to_weight(&self, datum: &AffineCartanDatum) -> QResult<WeightVector> {
        datum.check_same(self.label, "RootVector::to_weight")?;
        let m = datum.num_nodes();
        let mut lambda = vec![BigRational::zero(); m];
        for (i, coeff) in lambda.iter_mut().enumerate() {
            let mut sum = 0i64;
            for (j, &c) in self.alpha.iter().enumerate() {
                sum += datum.cartan(i, j) * c;
            }
            *coeff = rat(sum);
        }
        WeightVector::from_coeffs(datum, lambda, rat(self.alpha[0]))
    }

    fn checked_add(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.label, rhs.label,
            "RootVector::add: mismatched data {} and {}",
            self.label, rhs.label
        );
        RootVector {
            label: self.label,
            alpha: self
                .alpha
                .iter()
                .zip(&rhs.alpha)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn negate_in_place(&mut self) {
        for c in &mut self.alpha {
            *c = -*c;
        }
    }
}

additive_ops!(RootVector);

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, BigRational)> = self
            .alpha
            .iter()
            .enumerate()
            .map(|(i, &c)| (format!("alpha{i}"), rat(c)))
            .collect();
        write_linear_combination(f, &terms)
    }
}

impl Serialize for RootVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut coeffs = Vec::new();
        for (i, &c) in self.alpha.iter().enumerate() {
            if c != 0 {
                coeffs.push(coeff_entry(&format!("alpha{i}"), &rat(c)));
            }
        }
        serialize_vector(serializer, "RootVector", self.label, coeffs)
    }
}

// ---- coweights ----

/// A rational vector in the dual space, written over the simple coroots
/// `h_0..h_n` together with the scaling element `d`.
///
/// Fundamental coweights embed with rational simple-coroot coordinates and
/// no `d` component, so they pair to zero with both `Lambda_0` and `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoweightVector {
    label: TypeLabel,
    /// Coefficients of `h_0..h_n`.
    h: Vec<BigRational>,
    /// Coefficient of `d`.
    d: BigRational,
}

impl CoweightVector {
    /// The zero coweight.
    pub fn zero(datum: &AffineCartanDatum) -> Self {
        CoweightVector {
            label: datum.label(),
            h: vec![BigRational::zero(); datum.num_nodes()],
            d: BigRational::zero(),
        }
    }

    /// The simple coroot `h_i`, `i` in `0..=n`.
    pub fn simple_coroot(datum: &AffineCartanDatum, i: usize) -> Self {
        let mut v = CoweightVector::zero(datum);
        v.h[i] = BigRational::one();
        v
    }

    /// The center `c`, whose simple-coroot coordinates are the comarks.
    pub fn center(datum: &AffineCartanDatum) -> Self {
        CoweightVector {
            label: datum.label(),
            h: datum.affine_indices().map(|i| rat(datum.comark(i))).collect(),
            d: BigRational::zero(),
        }
    }

    /// The scaling element `d`.
    pub fn scaling_element(datum: &AffineCartanDatum) -> Self {
        let mut v = CoweightVector::zero(datum);
        v.d = BigRational::one();
        v
    }

    /// The fundamental coweight `varpi_i^\vee`, `i` in `1..=n`: the unique
    /// vector in the span of the finite simple coroots pairing to
    /// `delta_{ij}` with `alpha_j`.
    pub fn fundamental(datum: &AffineCartanDatum, i: usize) -> Self {
        assert!(
            (1..=datum.finite_rank()).contains(&i),
            "CoweightVector::fundamental: node {i} is not a finite node"
        );
        let mut v = CoweightVector::zero(datum);
        for j in 1..=datum.finite_rank() {
            v.h[j] = datum.inverse_finite_cartan(i, j).clone();
        }
        v
    }

    /// An integer combination of fundamental coweights.
    pub fn from_fundamental_coords(datum: &AffineCartanDatum, coords: &[i64]) -> QResult<Self> {
        if coords.len() != datum.finite_rank() {
            return Err(QError::ShapeMismatch(format!(
                "CoweightVector::from_fundamental_coords: expected {} coordinates, got {}",
                datum.finite_rank(),
                coords.len()
            )));
        }
        let mut v = CoweightVector::zero(datum);
        for (idx, &c) in coords.iter().enumerate() {
            if c != 0 {
                v = &v + &CoweightVector::fundamental(datum, idx + 1).scale(&rat(c));
            }
        }
        Ok(v)
    }

    pub fn type_label(&self) -> TypeLabel {
        self.label
    }

    /// Coefficient of `h_i`.
    pub fn h_coeff(&self, i: usize) -> &BigRational {
        &self.h[i]
    }

    /// Coefficient of `d`.
    pub fn d_coeff(&self) -> &BigRational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero() && self.h.iter().all(BigRational::is_zero)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        CoweightVector {
            label: self.label,
            h: self.h.iter().map(|x| x * c).collect(),
            d: &self.d * c,
        }
    }

    /// Canonical pairing with a weight: `h_i` pairs to the `Lambda_i`
    /// coefficient and `d` to the `delta` coefficient.
    pub fn pair_weight(&self, w: &WeightVector) -> QResult<BigRational> {
        if self.label != w.label {
            return Err(QError::DatumMismatch(format!(
                "pairing: datum {} does not match {}",
                self.label, w.label
            )));
        }
        let mut sum = BigRational::zero();
        for (c, lam) in self.h.iter().zip(&w.lambda) {
            sum += c * lam;
        }
        sum += &self.d * &w.delta;
        Ok(sum)
    }

    /// Canonical pairing with a root-lattice vector.
    pub fn pair_root(&self, datum: &AffineCartanDatum, r: &RootVector) -> QResult<BigRational> {
        datum.check_same(self.label, "CoweightVector::pair_root")?;
        self.pair_weight(&r.to_weight(datum)?)
    }

    /// The linear isomorphism induced by the normalized invariant form:
    /// `h_i` maps to `alpha_i` and `d` to `Lambda_0`. The center maps to
    /// the null root.
    pub fn nu(&self, datum: &AffineCartanDatum) -> QResult<WeightVector> {
        datum.check_same(self.label, "CoweightVector::nu")?;
        let mut out = WeightVector::fundamental(datum, 0).scale(&self.d);
        for i in datum.affine_indices() {
            if !self.h[i].is_zero() {
                let alpha_i = RootVector::simple(datum, i).to_weight(datum)?;
                out = &out + &alpha_i.scale(&self.h[i]);
            }
        }
        Ok(out)
    }

    fn checked_add(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.label, rhs.label,
            "CoweightVector::add: mismatched data {} and {}",
            self.label, rhs.label
        );
        CoweightVector {
            label: self.label,
            h: self.h.iter().zip(&rhs.h).map(|(a, b)| a + b).collect(),
            d: &self.d + &rhs.d,
        }
    }

    fn negate_in_place(&mut self) {
        for c in &mut self.h {
            *c = -c.clone();
        }
        self.d = -self.d.clone();
    }
}

additive_ops!(CoweightVector);

impl fmt::Display for CoweightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(String, BigRational)> = self
            .h
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("h{i}"), c.clone()))
            .collect();
        terms.push(("d".to_string(), self.d.clone()));
        write_linear_combination(f, &terms)
    }
}

impl Serialize for CoweightVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut coeffs = Vec::new();
        for (i, c) in self.h.iter().enumerate() {
            if !c.is_zero() {
                coeffs.push(coeff_entry(&format!("h{i}"), c));
            }
        }
        if !self.d.is_zero() {
            coeffs.push(coeff_entry("d", &self.d));
        }
        serialize_vector(serializer, "CoweightVector", self.label, coeffs)
    }
}

// ---- the invariant bilinear form ----

/// The normalized invariant symmetric bilinear form on the weight space.
///
/// It is determined by `(alpha_i, lambda)` being the coroot pairing (all
/// root lengths squared are 2), `(delta, lambda)` being the level, and the
/// normalization `(Lambda_0, Lambda_0) = 0`.
pub fn bilinear_form(
    datum: &AffineCartanDatum,
    x: &WeightVector,
    y: &WeightVector,
) -> QResult<BigRational> {
    datum.check_same(x.label, "bilinear_form")?;
    datum.check_same(y.label, "bilinear_form")?;
    let n = datum.finite_rank();
    let mut sum = BigRational::zero();
    for i in 1..=n {
        if x.lambda[i].is_zero() {
            continue;
        }
        for j in 1..=n {
            if !y.lambda[j].is_zero() {
                sum += &x.lambda[i] * datum.inverse_finite_cartan(i, j) * &y.lambda[j];
            }
        }
    }
    sum += x.level(datum) * &y.delta;
    sum += y.level(datum) * &x.delta;
    Ok(sum)
}

/// The invariant form evaluated on two root-lattice vectors.
pub fn bilinear_form_roots(
    datum: &AffineCartanDatum,
    x: &RootVector,
    y: &RootVector,
) -> QResult<BigRational> {
    bilinear_form(datum, &x.to_weight(datum)?, &y.to_weight(datum)?)
}

// ---- tests ----
