//! Exact arithmetic for univariate integer polynomials and rational
//! functions in the Hodge variable `q`.
//!
//! [`IntPoly`] stores sparse arbitrary-precision coefficients. [`RatFunc`] is
//! a fully reduced quotient of two [`IntPoly`] with positive-leading-coefficient
//! denominator, so equality is plain structural equality. Every formula in
//! this crate is evaluated in `RatFunc` and converted to `IntPoly` only at
//! the very end: the closed forms contain factors with negative exponents at
//! small `d` that cancel only in the total.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Sparse univariate polynomial in `q` with `BigInt` coefficients.
///
/// Invariant: no stored coefficient is zero. The zero polynomial stores
/// nothing and its degree is `None` (the "minus infinity" marker).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, deg: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        IntPoly { coeffs }
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, BigInt)>>(iter: I) -> Self {
        let mut p = IntPoly::zero();
        for (deg, c) in iter {
            p.add_term(deg, c);
        }
        p
    }

    fn add_term(&mut self, deg: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(deg) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: u32) -> BigInt {
        self.coeffs.get(&deg).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => BigInt::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1 && self.degree().unwrap_or(0) == 0
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|(d, a)| (*d, a * c)).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: u32) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|(d, a)| (d + k, a.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by `c` exactly. Panics if not exact.
    fn div_content(&self, c: &BigInt) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, a)| {
                    let (quo, rem) = a.div_rem(c);
                    assert!(rem.is_zero(), "content division must be exact");
                    (*d, quo)
                })
                .collect(),
        }
    }

    /// Exact polynomial division; `None` if `self` is not a multiple of `rhs`.
    pub fn exact_div(&self, rhs: &IntPoly) -> Option<IntPoly> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let drhs = rhs.degree().unwrap();
        let lc_rhs = rhs.leading_coeff();
        let mut rem = self.clone();
        let mut quo = IntPoly::zero();
        while let Some(drem) = rem.degree() {
            if drem < drhs {
                return None;
            }
            let lc_rem = rem.leading_coeff();
            let (c, r) = lc_rem.div_rem(&lc_rhs);
            if !r.is_zero() {
                return None;
            }
            let shift = drem - drhs;
            quo.add_term(shift, c.clone());
            rem = &rem - &rhs.shift(shift).scale(&c);
            if rem.is_zero() {
                return Some(quo);
            }
        }
        Some(quo)
    }

    /// Fraction-free pseudo-remainder of `self` by `rhs`.
    fn pseudo_rem(&self, rhs: &IntPoly) -> IntPoly {
        let drhs = rhs.degree().expect("pseudo_rem by zero");
        let lc_rhs = rhs.leading_coeff();
        let mut rem = self.clone();
        while let Some(drem) = rem.degree() {
            if drem < drhs {
                break;
            }
            let lc_rem = rem.leading_coeff();
            rem = &rem.scale(&lc_rhs) - &rhs.shift(drem - drhs).scale(&lc_rem);
        }
        rem
    }

    fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.div_content(&c)
    }

    /// Polynomial gcd over the integers (positive leading coefficient),
    /// including the gcd of integer contents. Primitive PRS.
    pub fn gcd(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return rhs.primitive_part().scale(&rhs.content().abs()).abs_lead();
        }
        if rhs.is_zero() {
            return self.primitive_part().scale(&self.content().abs()).abs_lead();
        }
        let cont = self.content().gcd(&rhs.content());
        let mut a = self.primitive_part();
        let mut b = rhs.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.scale(&cont).abs_lead()
    }

    fn abs_lead(&self) -> IntPoly {
        if self.leading_coeff().is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Exact value at `q = q0`.
    pub fn evaluate(&self, q0: &BigInt) -> BigInt {
        // Horner over the sparse terms, highest degree first.
        let mut acc = BigInt::zero();
        let mut last_deg: Option<u32> = None;
        for (deg, c) in self.coeffs.iter().rev() {
            if let Some(ld) = last_deg {
                acc *= q0.pow(ld - deg);
            }
            acc += c;
            last_deg = Some(*deg);
        }
        if let Some(ld) = last_deg {
            acc *= q0.pow(ld);
        }
        acc
    }

    /// Ascending coefficient list `["c0", "c1", ...]` as decimal strings.
    /// The zero polynomial serializes as `["0"]`.
    pub fn coeff_strings(&self) -> Vec<String> {
        match self.degree() {
            None => vec!["0".to_string()],
            Some(d) => (0..=d).map(|k| self.coeff(k).to_string()).collect(),
        }
    }

    pub fn from_coeff_strings(coeffs: &[String]) -> Result<IntPoly> {
        let mut p = IntPoly::zero();
        for (deg, s) in coeffs.iter().enumerate() {
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
            p.add_term(deg as u32, c);
        }
        Ok(p)
    }

    /// Render with `^` exponents, e.g. `q^3 - q` or `2q^2 + q - 1`.
    pub fn to_ascii(&self) -> String {
        self.render(false)
    }

    /// Render for LaTeX, e.g. `q^{3} - q`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (deg, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = mag.is_one();
            match (*deg, unit) {
                (0, _) => out.push_str(&mag.to_string()),
                (d, false) => {
                    out.push_str(&mag.to_string());
                    out.push_str(&var_pow(d, latex));
                }
                (d, true) => out.push_str(&var_pow(d, latex)),
            }
        }
        out
    }

    /// Parse the ASCII form produced by [`IntPoly::to_ascii`]. Accepts an
    /// optional `*` between coefficient and `q`, and arbitrary whitespace.
    pub fn parse(s: &str) -> Result<IntPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = compact.as_bytes();
        let mut p = IntPoly::zero();
        let mut i = 0usize;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            loop {
                match bytes.get(i) {
                    Some(b'+') => i += 1,
                    Some(b'-') => {
                        sign = -sign;
                        i += 1;
                    }
                    _ => break,
                }
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if i > start {
                compact[start..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad number in {s:?}")))?
            } else {
                BigInt::one()
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let deg: u32 = if i < bytes.len() && bytes[i] == b'q' {
                i += 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let ds = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ds == i {
                        return Err(Error::Parse(format!("missing exponent in {s:?}")));
                    }
                    compact[ds..i]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?
                } else {
                    1
                }
            } else {
                if i == start {
                    return Err(Error::Parse(format!("unexpected character in {s:?}")));
                }
                0
            };
            p.add_term(deg, sign * coeff);
        }
        Ok(p)
    }
}

fn var_pow(deg: u32, latex: bool) -> String {
    match (deg, latex) {
        (1, _) => "q".to_string(),
        (d, false) => format!("q^{d}"),
        (d, true) => format!("q^{{{d}}}"),
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascii())
    }
}

impl From<i64> for IntPoly {
    fn from(v: i64) -> Self {
        IntPoly::constant(BigInt::from(v))
    }
}

impl From<BigInt> for IntPoly {
    fn from(v: BigInt) -> Self {
        IntPoly::constant(v)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (d, c) in rhs.coeffs.iter() {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (d, c) in rhs.coeffs.iter() {
            out.add_term(*d, -c.clone());
        }
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (da, ca) in self.coeffs.iter() {
            for (db, cb) in rhs.coeffs.iter() {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

macro_rules! forward_poly_binop {
    ($op:ident, $method:ident) => {
        impl $op for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $op<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl $op<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        IntPoly::from_coeff_strings(&v).map_err(serde::de::Error::custom)
    }
}

/// Fully reduced rational function `num/den` in `q`.
///
/// Invariants: `den` is nonzero with positive leading coefficient, the
/// polynomial gcd of `num` and `den` is constant, and their integer contents
/// are coprime. Two values are equal iff their normalized fields are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: IntPoly, den: IntPoly) -> RatFunc {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        if den.leading_coeff().is_negative() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from(1)
    }

    /// The variable `q`.
    pub fn q() -> RatFunc {
        RatFunc {
            num: IntPoly::q(),
            den: IntPoly::one(),
        }
    }

    /// Exact rational constant `a/b`.
    pub fn frac(a: i64, b: i64) -> RatFunc {
        assert!(b != 0, "zero denominator constant");
        RatFunc::normalized(IntPoly::from(a), IntPoly::from(b))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    /// Exact `k`-th power; `k` may be negative for nonzero values.
    pub fn pow(&self, k: i64) -> Result<RatFunc> {
        if k == 0 {
            return Ok(RatFunc::one());
        }
        let (base, mut e) = if k < 0 {
            if self.is_zero() {
                return Err(Error::ZeroToNegativePower);
            }
            (self.inv()?, k.unsigned_abs())
        } else {
            (self.clone(), k as u64)
        };
        let mut acc = RatFunc::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// The polynomial value, if the reduced denominator is a constant `±1`
    /// ... which, by normalization, means `den == 1`.
    pub fn to_intpoly(&self) -> Result<IntPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotAPolynomial(self.to_string()))
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Exact value at `q = q0`, as a rational number.
    pub fn evaluate(&self, q0: &BigInt) -> Result<BigRational> {
        let dv = self.den.evaluate(q0);
        if dv.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(BigRational::new(self.num.evaluate(q0), dv))
    }

    pub fn to_ascii(&self) -> String {
        if self.den.is_one() {
            self.num.to_ascii()
        } else {
            format!("({}) / ({})", self.num.to_ascii(), self.den.to_ascii())
        }
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascii())
    }
}

impl From<i64> for RatFunc {
    fn from(v: i64) -> Self {
        RatFunc {
            num: IntPoly::from(v),
            den: IntPoly::one(),
        }
    }
}

impl From<BigInt> for RatFunc {
    fn from(v: BigInt) -> Self {
        RatFunc {
            num: IntPoly::constant(v),
            den: IntPoly::one(),
        }
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }
}

impl From<&IntPoly> for RatFunc {
    fn from(p: &IntPoly) -> Self {
        RatFunc::from(p.clone())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        RatFunc::normalized(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &self.num * &rhs.den - &rhs.num * &self.den;
        let den = &self.den * &rhs.den;
        RatFunc::normalized(num, den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -self.clone()
    }
}

macro_rules! forward_ratfunc_binop {
    ($op:ident, $method:ident) => {
        impl $op for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $op<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
        impl $op<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                self.$method(&rhs)
            }
        }
    };
}

forward_ratfunc_binop!(Add, add);
forward_ratfunc_binop!(Sub, sub);
forward_ratfunc_binop!(Mul, mul);
forward_ratfunc_binop!(Div, div);

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            num: IntPoly,
            den: IntPoly,
        }
        let raw = Raw::deserialize(d)?;
        RatFunc::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

/// E-polynomial of `GL_r(C)`: `(q^r - 1)(q^r - q) ... (q^r - q^{r-1})`.
pub fn e_general_linear(r: u32) -> IntPoly {
    assert!(r >= 1);
    let mut acc = IntPoly::one();
    let qr = IntPoly::monomial(BigInt::one(), r);
    for i in 0..r {
        acc = &acc * &(&qr - &IntPoly::monomial(BigInt::one(), i));
    }
    acc
}

/// E-polynomial of `SL_r(C)`: `(q^r - 1)(q^r - q) ... (q^r - q^{r-2}) q^{r-1}`.
pub fn e_special_linear(r: u32) -> IntPoly {
    assert!(r >= 1);
    let mut acc = IntPoly::monomial(BigInt::one(), r - 1);
    let qr = IntPoly::monomial(BigInt::one(), r);
    for i in 0..r.saturating_sub(1) {
        acc = &acc * &(&qr - &IntPoly::monomial(BigInt::one(), i));
    }
    acc
}
