//! Sparse multivariate polynomials over exact rationals, with gcd and a
//! field of fractions.
//!
//! Exponents are signed so the same type can carry Laurent polynomials;
//! the gcd and fraction machinery clears negative exponents first. The gcd
//! is the primitive polynomial-remainder sequence, with a cheap randomized
//! degree probe to skip work when the gcd is trivial (the probe can only
//! skip, never produce a wrong answer).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A sparse polynomial in `nvars` variables with rational coefficients.
/// Keys are exponent vectors, compared lexicographically; no zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigRational>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c}*x^{e:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MPoly { nvars, terms }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars);
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(nvars, e, BigRational::one())
    }

    pub fn monomial(nvars: usize, expo: Vec<i32>, coef: BigRational) -> Self {
        assert_eq!(expo.len(), nvars);
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(expo, coef);
        }
        MPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, list: Vec<(Vec<i32>, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in list {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, expo: Vec<i32>, coef: BigRational) {
        assert_eq!(expo.len(), self.nvars);
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coef;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, expo: &[i32], c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| {
                    (
                        e.iter().zip(expo).map(|(x, y)| x + y).collect(),
                        k * c,
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Largest exponent of variable `k` across all terms (0 for the zero
    /// polynomial). Negative exponents count toward `min_degree`.
    pub fn degree_in(&self, k: usize) -> i32 {
        self.terms.keys().map(|e| e[k]).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, k: usize) -> i32 {
        self.terms.keys().map(|e| e[k]).min().unwrap_or(0)
    }

    pub fn has_negative_exponent(&self) -> bool {
        (0..self.nvars).any(|k| self.min_degree_in(k) < 0)
    }

    /// Leading term in lexicographic order.
    pub fn lead(&self) -> Option<(&Vec<i32>, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// All coefficients nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn eval_rational(&self, args: &[BigRational]) -> BigRational {
        assert_eq!(args.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in args.iter().zip(e.iter()) {
                match k.cmp(&0) {
                    std::cmp::Ordering::Greater => {
                        for _ in 0..k {
                            m *= x;
                        }
                    }
                    std::cmp::Ordering::Less => {
                        for _ in 0..-k {
                            m /= x;
                        }
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
            acc += m;
        }
        acc
    }

    /// Substitutes a fraction for every variable.
    pub fn eval_frac(&self, args: &[MFrac]) -> MFrac {
        assert_eq!(args.len(), self.nvars);
        let n = args.first().map(|f| f.num.nvars).unwrap_or(0);
        let mut acc = MFrac::from_poly(MPoly::zero(n));
        for (e, c) in &self.terms {
            let mut m = MFrac::from_poly(MPoly::constant(n, c.clone()));
            for (x, &k) in args.iter().zip(e.iter()) {
                match k.cmp(&0) {
                    std::cmp::Ordering::Greater => m = m.mul(&x.pow(k as u32)),
                    std::cmp::Ordering::Less => m = m.mul(&x.inv().pow((-k) as u32)),
                    std::cmp::Ordering::Equal => {}
                }
            }
            acc = acc.add(&m);
        }
        acc
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.nvars, d.nvars);
        if d.is_zero() {
            return None;
        }
        let (dlead_e, dlead_c) = d.lead().expect("nonzero divisor");
        let dlead_e = dlead_e.clone();
        let dlead_c = dlead_c.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rlead_e, rlead_c)) = rem.lead() {
            let q_e: Vec<i32> = rlead_e.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if q_e.iter().any(|&x| x < 0) {
                return None;
            }
            let q_c = rlead_c / &dlead_c;
            quot.add_term(q_e.clone(), q_c.clone());
            rem = rem.sub(&d.mul_monomial(&q_e, &q_c));
        }
        Some(quot)
    }

    /// Greatest common divisor, normalized to have a positive lexicographic
    /// leading coefficient and integer-primitive content.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let g = gcd_inner(self, rhs);
        normalize_assoc(&g)
    }
}

/// Scales an integer-content-free representative: divide by the rational
/// content, keep the lex-leading coefficient positive.
fn normalize_assoc(p: &MPoly) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in p.terms.values() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut scale = BigRational::new(den_lcm, num_gcd);
    if p.lead().expect("nonzero").1.is_negative() {
        scale = -scale;
    }
    p.mul_scalar(&scale)
}

fn gcd_inner(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    debug_assert!(!a.has_negative_exponent() && !b.has_negative_exponent());
    // Variables that actually occur.
    let main = (0..a.nvars)
        .rev()
        .find(|&k| a.degree_in(k) > 0 || b.degree_in(k) > 0);
    let Some(main) = main else {
        // Both constants.
        return MPoly::one(a.nvars);
    };
    if probe_all_trivial(a, b) {
        return MPoly::one(a.nvars);
    }
    if a.degree_in(main) == 0 || b.degree_in(main) == 0 {
        // One side is free of the main variable: gcd divides its content.
        let (flat, other) = if a.degree_in(main) == 0 { (a, b) } else { (b, a) };
        let content = content_in(other, main);
        return gcd_inner(flat, &content);
    }
    let ca = content_in(a, main);
    let cb = content_in(b, main);
    let cg = gcd_inner(&ca, &cb);
    let mut pa = a.exact_div(&ca).expect("content divides");
    let mut pb = b.exact_div(&cb).expect("content divides");
    loop {
        let (da, db) = (pa.degree_in(main), pb.degree_in(main));
        if db == 0 {
            // A primitive polynomial of main-degree zero is a unit.
            return cg;
        }
        if da < db {
            std::mem::swap(&mut pa, &mut pb);
            continue;
        }
        let r = pseudo_rem(&pa, &pb, main);
        if r.is_zero() {
            return cg.mul(&primitive_in(&pb, main));
        }
        pa = pb;
        pb = primitive_in(&r, main);
    }
}

/// Randomized triviality certificate. For each variable occurring with
/// positive degree in both inputs, substitute fixed integers for the other
/// variables; when neither leading coefficient vanishes at the point and
/// the univariate gcd is constant, any common divisor has degree zero in
/// that variable (its leading coefficient divides the input's). If that is
/// established for every variable, the gcd is constant. Failure to certify
/// falls through to the exact algorithm, so this can skip, never err.
fn probe_all_trivial(a: &MPoly, b: &MPoly) -> bool {
    for k in 0..a.nvars {
        if a.degree_in(k) == 0 || b.degree_in(k) == 0 {
            continue;
        }
        let mut certified = false;
        for seed in [3i64, 11, 29] {
            let (ua, lead_a) = substitute_except(a, k, seed);
            let (ub, lead_b) = substitute_except(b, k, seed);
            if !lead_a || !lead_b {
                continue;
            }
            if univariate_gcd_degree(&ua, &ub) == 0 {
                certified = true;
                break;
            }
        }
        if !certified {
            return false;
        }
    }
    true
}

/// Substitutes fixed values for all variables except `main`, returning the
/// univariate coefficient vector and whether the leading coefficient
/// survived the substitution.
fn substitute_except(p: &MPoly, main: usize, seed: i64) -> (Vec<BigRational>, bool) {
    let deg = p.degree_in(main).max(0) as usize;
    let mut out = vec![BigRational::zero(); deg + 1];
    for (e, c) in &p.terms {
        let mut v = c.clone();
        let mut s = seed;
        for (k, &ek) in e.iter().enumerate() {
            if k == main {
                continue;
            }
            // Small deterministic values, distinct per variable.
            s = s
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let val = BigRational::from_integer(BigInt::from((s % 19).abs() + 2));
            for _ in 0..ek {
                v *= &val;
            }
        }
        out[e[main] as usize] += v;
    }
    let lead_ok = !out[deg].is_zero();
    while out.len() > 1 && out.last().map_or(false, Zero::is_zero) {
        out.pop();
    }
    (out, lead_ok)
}

fn univariate_gcd_degree(a: &[BigRational], b: &[BigRational]) -> usize {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    let trim = |v: &mut Vec<BigRational>| {
        while v.len() > 1 && v.last().map_or(false, Zero::is_zero) {
            v.pop();
        }
    };
    trim(&mut x);
    trim(&mut y);
    loop {
        if y.len() == 1 {
            return if y[0].is_zero() { x.len() - 1 } else { 0 };
        }
        // x mod y
        while x.len() >= y.len() && !(x.len() == 1 && x[0].is_zero()) {
            let f = x.last().unwrap() / y.last().unwrap();
            let off = x.len() - y.len();
            for k in 0..y.len() {
                let sub = &f * &y[k];
                x[off + k] -= sub;
            }
            trim(&mut x);
            if x.iter().all(Zero::is_zero) {
                x = vec![BigRational::zero()];
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
}

/// Content of `p` with respect to variable `main`: the gcd of its
/// coefficients, which are polynomials in the remaining variables.
fn content_in(p: &MPoly, main: usize) -> MPoly {
    let mut acc = MPoly::zero(p.nvars);
    for coeff in univariate_coeffs(p, main) {
        if !coeff.is_zero() {
            acc = gcd_inner(&acc, &coeff);
            if !acc.is_zero() && acc.degree_in_all_zero() {
                return MPoly::one(p.nvars);
            }
        }
    }
    normalize_assoc(&acc)
}

impl MPoly {
    fn degree_in_all_zero(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }
}

fn primitive_in(p: &MPoly, main: usize) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, main);
    normalize_assoc(&p.exact_div(&c).expect("content divides"))
}

fn univariate_coeffs(p: &MPoly, main: usize) -> Vec<MPoly> {
    let deg = p.degree_in(main).max(0) as usize;
    let mut out = vec![MPoly::zero(p.nvars); deg + 1];
    for (e, c) in &p.terms {
        let mut e2 = e.clone();
        let k = e2[main] as usize;
        e2[main] = 0;
        out[k].add_term(e2, c.clone());
    }
    out
}

fn from_univariate_coeffs(coeffs: &[MPoly], main: usize, nvars: usize) -> MPoly {
    let mut out = MPoly::zero(nvars);
    for (k, c) in coeffs.iter().enumerate() {
        for (e, v) in &c.terms {
            let mut e2 = e.clone();
            e2[main] += k as i32;
            out.add_term(e2, v.clone());
        }
    }
    out
}

/// Pseudo-remainder of `a` by `b` in variable `main`.
fn pseudo_rem(a: &MPoly, b: &MPoly, main: usize) -> MPoly {
    let db = b.degree_in(main);
    let b_coeffs = univariate_coeffs(b, main);
    let lcb = b_coeffs.last().expect("nonzero divisor").clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(main) >= db {
        let dr = r.degree_in(main);
        let r_coeffs = univariate_coeffs(&r, main);
        let lcr = r_coeffs.last().expect("nonzero").clone();
        // r := lcb * r - lcr * x^{dr-db} * b
        let mut shift = vec![0i32; a.nvars];
        shift[main] = dr - db;
        let shifted = b
            .mul(&lcr)
            .mul_monomial(&shift, &BigRational::one());
        r = r.mul(&lcb).sub(&shifted);
    }
    r
}

/// An element of the fraction field of the polynomial ring. Kept reduced;
/// the denominator's lexicographic leading coefficient is one.
#[derive(Clone, PartialEq, Eq)]
pub struct MFrac {
    num: MPoly,
    den: MPoly,
}

impl fmt::Debug for MFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl MFrac {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = clear_laurent(num, den);
        let mut out = MFrac { num, den };
        out.reduce();
        out
    }

    pub fn from_poly(p: MPoly) -> Self {
        let n = p.nvars();
        MFrac::new(p, MPoly::one(n))
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        Self::from_poly(MPoly::var(nvars, k))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MPoly::one(self.den.nvars());
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.degree_in_all_zero() {
            self.num = self.num.exact_div(&g).expect("gcd divides");
            self.den = self.den.exact_div(&g).expect("gcd divides");
        }
        // Normalize: monic leading denominator coefficient.
        let lc = self.den.lead().expect("nonzero denominator").1.clone();
        let inv = lc.recip();
        self.den = self.den.mul_scalar(&inv);
        self.num = self.num.mul_scalar(&inv);
    }

    pub fn add(&self, rhs: &Self) -> Self {
        MFrac::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        MFrac::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        MFrac::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero fraction");
        MFrac::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero fraction");
        MFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn neg(&self) -> Self {
        MFrac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let n = self.num.nvars();
        let mut out = MFrac::from_poly(MPoly::one(n));
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

/// Clears negative exponents by multiplying both sides with a monomial.
fn clear_laurent(num: MPoly, den: MPoly) -> (MPoly, MPoly) {
    let n = num.nvars();
    let mut shift = vec![0i32; n];
    let mut needed = false;
    for k in 0..n {
        let m = num.min_degree_in(k).min(den.min_degree_in(k)).min(0);
        if m < 0 {
            shift[k] = -m;
            needed = true;
        }
    }
    if !needed {
        return (num, den);
    }
    (
        num.mul_monomial(&shift, &BigRational::one()),
        den.mul_monomial(&shift, &BigRational::one()),
    )
}
