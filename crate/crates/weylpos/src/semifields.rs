//! Semifields and subtraction-free rational expressions.
//!
//! A semifield is a commutative additive semigroup and an abelian
//! multiplicative group tied together by distributivity; there is no
//! subtraction and no zero. Three instances are provided: exact positive
//! rationals, min-plus integers, and the one-element semifield. Chart
//! coordinates, transition maps, and every map built from them are generic
//! over this interface, so a single code path serves all instances.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::{Error, Result};

/// The semifield interface.
///
/// `from_posint` is the inclusion of the positive integers delivered by
/// each instance (identity on values for both the rationals and min-plus
/// integers); `nat_mul` is the `m`-fold semifield sum of a value, which is
/// how positive integer coefficients of polynomials act.
pub trait Semifield: Clone + PartialEq + Eq + fmt::Debug {
    const NAME: &'static str;

    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
    fn one() -> Self;
    fn from_posint(n: u64) -> Self;

    /// m-fold sum `v + v + ... + v` (m >= 1).
    fn nat_mul(m: u64, v: &Self) -> Self {
        assert!(m >= 1, "nat_mul needs a positive multiplicity");
        let mut acc = v.clone();
        for _ in 1..m {
            acc = acc.add(v);
        }
        acc
    }

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

/// Exact positive rationals under ordinary addition and multiplication.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct PosRat(BigRational);

impl PosRat {
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_positive() {
            Ok(PosRat(value))
        } else {
            Err(Error::NotPositive(value.to_string()))
        }
    }

    pub fn from_ints(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::NotPositive("division by zero".into()));
        }
        Self::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_value(self) -> BigRational {
        self.0
    }
}

impl fmt::Display for PosRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for PosRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let r = BigRational::from_str(s).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        PosRat::new(r)
    }
}

impl Semifield for PosRat {
    const NAME: &'static str = "posrat";

    fn add(&self, rhs: &Self) -> Self {
        PosRat(&self.0 + &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        PosRat(&self.0 * &rhs.0)
    }

    fn inv(&self) -> Self {
        PosRat(self.0.recip())
    }

    fn one() -> Self {
        PosRat(BigRational::one())
    }

    fn from_posint(n: u64) -> Self {
        assert!(n >= 1);
        PosRat(BigRational::from_integer(BigInt::from(n)))
    }

    fn nat_mul(m: u64, v: &Self) -> Self {
        assert!(m >= 1);
        PosRat(&v.0 * BigRational::from_integer(BigInt::from(m)))
    }

    fn to_json(&self) -> Value {
        Value::String(self.0.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| Error::Parse(format!("not an exact integer: {n}")))?;
                PosRat::new(BigRational::from_integer(BigInt::from(i)))
            }
            other => Err(Error::Parse(format!("expected rational string, got {other}"))),
        }
    }
}

/// Min-plus integers: addition is `min`, multiplication is `+`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct TropInt(pub i64);

impl fmt::Display for TropInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Semifield for TropInt {
    const NAME: &'static str = "tropint";

    fn add(&self, rhs: &Self) -> Self {
        TropInt(self.0.min(rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Self {
        TropInt(self.0 + rhs.0)
    }

    fn inv(&self) -> Self {
        TropInt(-self.0)
    }

    fn one() -> Self {
        TropInt(0)
    }

    fn from_posint(n: u64) -> Self {
        assert!(n >= 1);
        TropInt(n as i64)
    }

    fn nat_mul(m: u64, v: &Self) -> Self {
        assert!(m >= 1);
        // min(v, ..., v) = v.
        *v
    }

    fn to_json(&self) -> Value {
        json!(self.0)
    }

    fn from_json(v: &Value) -> Result<Self> {
        v.as_i64()
            .map(TropInt)
            .ok_or_else(|| Error::Parse(format!("expected integer, got {v}")))
    }
}

/// The one-element semifield.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Hash)]
pub struct Trivial;

impl fmt::Display for Trivial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")
    }
}

impl Semifield for Trivial {
    const NAME: &'static str = "trivial";

    fn add(&self, _rhs: &Self) -> Self {
        Trivial
    }

    fn mul(&self, _rhs: &Self) -> Self {
        Trivial
    }

    fn inv(&self) -> Self {
        Trivial
    }

    fn one() -> Self {
        Trivial
    }

    fn from_posint(_n: u64) -> Self {
        Trivial
    }

    fn to_json(&self) -> Value {
        json!(1)
    }

    fn from_json(_v: &Value) -> Result<Self> {
        Ok(Trivial)
    }
}

/// A multivariate polynomial with positive integer coefficients and at
/// least one monomial. Negative or zero coefficients are unrepresentable,
/// which is the structural guarantee that everything evaluated through
/// this type is subtraction-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonnegPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl NonnegPoly {
    pub fn new(nvars: usize, terms: Vec<(Vec<u32>, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (expo, coef) in terms {
            if expo.len() != nvars {
                return Err(Error::Parse(format!(
                    "exponent vector of length {} in a {nvars}-variable polynomial",
                    expo.len()
                )));
            }
            if coef == 0 {
                continue;
            }
            *map.entry(expo).or_insert(0) += coef;
        }
        if map.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(NonnegPoly { nvars, terms: map })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, u64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// Evaluates over a semifield: monomials via `mul`/`pow`, coefficients
    /// as m-fold sums, monomials combined via `add`.
    pub fn eval<K: Semifield>(&self, xs: &[K]) -> Result<K> {
        if xs.len() != self.nvars {
            return Err(Error::Parse(format!(
                "expected {} arguments, got {}",
                self.nvars,
                xs.len()
            )));
        }
        let mut acc: Option<K> = None;
        for (expo, coef) in &self.terms {
            let mut m = K::one();
            for (x, &e) in xs.iter().zip(expo.iter()) {
                if e > 0 {
                    m = m.mul(&x.pow(e));
                }
            }
            let term = K::nat_mul(*coef, &m);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.ok_or(Error::ZeroPolynomial)
    }
}

/// A subtraction-free rational expression: a ratio of two nonempty
/// polynomials with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SFRational {
    num: NonnegPoly,
    den: NonnegPoly,
}

impl SFRational {
    pub fn new(num: NonnegPoly, den: NonnegPoly) -> Result<Self> {
        if num.nvars() != den.nvars() {
            return Err(Error::Parse(
                "numerator/denominator variable count mismatch".into(),
            ));
        }
        Ok(SFRational { num, den })
    }

    pub fn num(&self) -> &NonnegPoly {
        &self.num
    }

    pub fn den(&self) -> &NonnegPoly {
        &self.den
    }

    pub fn eval<K: Semifield>(&self, xs: &[K]) -> Result<K> {
        Ok(self.num.eval(xs)?.mul(&self.den.eval(xs)?.inv()))
    }

    pub fn to_json(&self) -> Value {
        let part = |p: &NonnegPoly| -> Value {
            Value::Array(p.terms().map(|(e, c)| json!([c, e])).collect())
        };
        json!({"num": part(&self.num), "den": part(&self.den)})
    }

    pub fn from_json(v: &Value, nvars: usize) -> Result<Self> {
        let part = |key: &str| -> Result<NonnegPoly> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("missing `{key}` array")))?;
            let mut terms = Vec::new();
            for t in arr {
                let pair = t
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| Error::Parse("term must be [coef, exponents]".into()))?;
                let coef = pair[0].as_u64().ok_or_else(|| {
                    Error::Parse("coefficient must be a nonnegative integer".into())
                })?;
                let expo: Vec<u32> = pair[1]
                    .as_array()
                    .ok_or_else(|| Error::Parse("exponents must be an array".into()))?
                    .iter()
                    .map(|e| {
                        e.as_u64().map(|x| x as u32).ok_or_else(|| {
                            Error::Parse("exponent must be a nonnegative integer".into())
                        })
                    })
                    .collect::<Result<_>>()?;
                terms.push((expo, coef));
            }
            NonnegPoly::new(nvars, terms)
        };
        SFRational::new(part("num")?, part("den")?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(n: i64, d: i64) -> PosRat {
        PosRat::from_ints(n, d).unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[u32], u64)]) -> NonnegPoly {
        NonnegPoly::new(nvars, terms.iter().map(|(e, c)| (e.to_vec(), *c)).collect()).unwrap()
    }

    #[test]
    fn eval_poly_examples() {
        // Z1*Z2 at (2, 3) over the rationals.
        let p = poly(2, &[(&[1, 1], 1)]);
        assert_eq!(p.eval(&[pr(2, 1), pr(3, 1)]).unwrap(), pr(6, 1));

        // Z1 + Z2 at (3, 7) tropically.
        let p = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(p.eval(&[TropInt(3), TropInt(7)]).unwrap(), TropInt(3));

        // 2*Z1 at 5 tropically: the double sum collapses.
        let p = poly(1, &[(&[1], 2)]);
        assert_eq!(p.eval(&[TropInt(5)]).unwrap(), TropInt(5));
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(matches!(NonnegPoly::new(2, vec![]), Err(Error::ZeroPolynomial)));
        assert!(matches!(
            NonnegPoly::new(2, vec![(vec![1, 0], 0)]),
            Err(Error::ZeroPolynomial)
        ));
    }

    fn example_sf() -> SFRational {
        // Z2*Z3 / (Z1 + Z3).
        SFRational::new(
            poly(3, &[(&[0, 1, 1], 1)]),
            poly(3, &[(&[1, 0, 0], 1), (&[0, 0, 1], 1)]),
        )
        .unwrap()
    }

    #[test]
    fn eval_sf_examples() {
        let f = example_sf();
        assert_eq!(f.eval(&[pr(1, 1), pr(1, 1), pr(1, 1)]).unwrap(), pr(1, 2));
        assert_eq!(
            f.eval(&[TropInt(1), TropInt(2), TropInt(3)]).unwrap(),
            TropInt(4)
        );
        assert_eq!(f.eval(&[Trivial, Trivial, Trivial]).unwrap(), Trivial);
    }

    #[test]
    fn sf_json_round_trip() {
        let f = example_sf();
        let j = f.to_json();
        assert_eq!(SFRational::from_json(&j, 3).unwrap(), f);
    }

    #[test]
    fn posint_embeddings() {
        assert_eq!(PosRat::from_posint(4), pr(4, 1));
        assert_eq!(TropInt::from_posint(4), TropInt(4));
        assert_eq!(Trivial::from_posint(4), Trivial);
    }

    #[test]
    fn posrat_rejects_nonpositive() {
        assert!(PosRat::from_ints(0, 1).is_err());
        assert!(PosRat::from_ints(-2, 3).is_err());
        assert!("0".parse::<PosRat>().is_err());
        assert!("-1/2".parse::<PosRat>().is_err());
    }
}
