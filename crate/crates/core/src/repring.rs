//! Equivariant E-polynomial calculus: elements of the representation rings
//! R(Z_2) and R(S_3) with [`RatFunc`] coefficients.
//!
//! A finite group acting on a variety makes its compactly-supported
//! cohomology a virtual representation, so the E-polynomial upgrades to an
//! element of R(F)[q]. The trivial-character coefficient is the
//! E-polynomial of the quotient.

use std::ops::{Add, Mul, Sub};

use crate::qpoly::RatFunc;
use crate::{Error, Result};

/// Element `t*T + n*N` of R(Z_2)[q]: `T` trivial, `N` sign character.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Z2Class {
    #[serde(rename = "T")]
    pub t: RatFunc,
    #[serde(rename = "N")]
    pub n: RatFunc,
}

impl Z2Class {
    pub fn new(t: RatFunc, n: RatFunc) -> Z2Class {
        Z2Class { t, n }
    }

    /// The unit `T`.
    pub fn trivial() -> Z2Class {
        Z2Class::new(RatFunc::one(), RatFunc::zero())
    }

    pub fn zero() -> Z2Class {
        Z2Class::new(RatFunc::zero(), RatFunc::zero())
    }

    /// E-polynomial of the quotient: the `T` coefficient.
    pub fn invariant_part(&self) -> RatFunc {
        self.t.clone()
    }

    /// `plus_part + minus_part`, the underlying non-equivariant E-polynomial.
    pub fn total(&self) -> RatFunc {
        &self.t + &self.n
    }

    pub fn scale(&self, c: &RatFunc) -> Z2Class {
        Z2Class::new(&self.t * c, &self.n * c)
    }

    pub fn pow(&self, k: u32) -> Z2Class {
        let mut acc = Z2Class::trivial();
        let mut base = self.clone();
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
}

impl Add for &Z2Class {
    type Output = Z2Class;
    fn add(self, rhs: &Z2Class) -> Z2Class {
        Z2Class::new(&self.t + &rhs.t, &self.n + &rhs.n)
    }
}

impl Sub for &Z2Class {
    type Output = Z2Class;
    fn sub(self, rhs: &Z2Class) -> Z2Class {
        Z2Class::new(&self.t - &rhs.t, &self.n - &rhs.n)
    }
}

/// Tensor product: `T⊗T = T`, `T⊗N = N`, `N⊗N = T`.
impl Mul for &Z2Class {
    type Output = Z2Class;
    fn mul(self, rhs: &Z2Class) -> Z2Class {
        Z2Class::new(
            &(&self.t * &rhs.t) + &(&self.n * &rhs.n),
            &(&self.t * &rhs.n) + &(&self.n * &rhs.t),
        )
    }
}

macro_rules! forward_class_binop {
    ($cls:ident, $op:ident, $method:ident) => {
        impl $op for $cls {
            type Output = $cls;
            fn $method(self, rhs: $cls) -> $cls {
                (&self).$method(&rhs)
            }
        }
        impl $op<&$cls> for $cls {
            type Output = $cls;
            fn $method(self, rhs: &$cls) -> $cls {
                (&self).$method(rhs)
            }
        }
        impl $op<$cls> for &$cls {
            type Output = $cls;
            fn $method(self, rhs: $cls) -> $cls {
                self.$method(&rhs)
            }
        }
    };
}

forward_class_binop!(Z2Class, Add, add);
forward_class_binop!(Z2Class, Sub, sub);
forward_class_binop!(Z2Class, Mul, mul);

pub fn z2_mul(a: &Z2Class, b: &Z2Class) -> Z2Class {
    a * b
}

pub fn z2_pow(a: &Z2Class, k: u32) -> Z2Class {
    a.pow(k)
}

/// E-polynomial of `(Z1 x Z2)/Z_2` for the diagonal action:
/// `e(Z1)^+ e(Z2)^+ + e(Z1)^- e(Z2)^-`.
pub fn z2_quotient_product(z1: &Z2Class, z2: &Z2Class) -> RatFunc {
    &(&z1.t * &z2.t) + &(&z1.n * &z2.n)
}

/// Equivariant class of the total space of a Z_2-equivariant fiber bundle
/// with base class `base` and fiber class `fiber`. Identical to the ring
/// product; exposed under this name where a bundle is being assembled.
pub fn z2_fiber_total(base: &Z2Class, fiber: &Z2Class) -> Z2Class {
    base * fiber
}

/// Inverse of [`z2_fiber_total`] in the base slot: recover the base class
/// from the total-space class and the fiber class.
///
/// Fails when `(F^+)^2 = (F^-)^2`, where the bilinear system is singular.
pub fn z2_base_from_total(total: &Z2Class, fiber: &Z2Class) -> Result<Z2Class> {
    let det = &(&fiber.t * &fiber.t) - &(&fiber.n * &fiber.n);
    if det.is_zero() {
        return Err(Error::DegenerateFiber);
    }
    let t = &(&(&total.t * &fiber.t) - &(&total.n * &fiber.n)) / &det;
    let n = &(&(&total.n * &fiber.t) - &(&total.t * &fiber.n)) / &det;
    Ok(Z2Class::new(t, n))
}

/// `e_{Z_2}(C^*)` for the inversion action `t -> t^{-1}`: the quotient is C
/// (via `t + t^{-1}`), so the class is `qT - N`.
pub fn z2_cstar_inversion() -> Z2Class {
    Z2Class::new(RatFunc::q(), -RatFunc::one())
}

/// `e_{Z_2}((C^*)^k)` for simultaneous inversion on every factor:
/// `(qT - N)^{⊗k}`.
pub fn z2_torus(k: u32) -> Z2Class {
    z2_cstar_inversion().pow(k)
}

/// `e_{Z_2}((C^*)^{2k})` where Z_2 permutes the factors of each of the `k`
/// pairs: `((q^2-q)T + (1-q)N)^{⊗k}`.
pub fn z2_torus_pairs(k: u32) -> Z2Class {
    let q = RatFunc::q();
    let pair = Z2Class::new(
        q.pow(2).unwrap() - &q,
        RatFunc::one() - &q,
    );
    pair.pow(k)
}

/// Element `t*T + s*S + d*D` of R(S_3)[q]: trivial, sign and standard
/// characters.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct S3Class {
    #[serde(rename = "T")]
    pub t: RatFunc,
    #[serde(rename = "S")]
    pub s: RatFunc,
    #[serde(rename = "D")]
    pub d: RatFunc,
}

impl S3Class {
    pub fn new(t: RatFunc, s: RatFunc, d: RatFunc) -> S3Class {
        S3Class { t, s, d }
    }

    pub fn trivial() -> S3Class {
        S3Class::new(RatFunc::one(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn invariant_part(&self) -> RatFunc {
        self.t.clone()
    }

    /// Virtual character evaluated at a conjugacy class: turns tensor
    /// products into pointwise products. Values of (T, S, D) are
    /// `(1, 1, 2)` at the identity, `(1, -1, 0)` at a transposition and
    /// `(1, 1, -1)` at a 3-cycle.
    pub fn character_identity(&self) -> RatFunc {
        &self.t + &self.s + &(&self.d * &RatFunc::from(2))
    }

    pub fn character_transposition(&self) -> RatFunc {
        &self.t - &self.s
    }

    pub fn character_three_cycle(&self) -> RatFunc {
        &(&self.t + &self.s) - &self.d
    }

    pub fn pow(&self, k: u32) -> S3Class {
        let mut acc = S3Class::trivial();
        let mut base = self.clone();
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
}

impl Add for &S3Class {
    type Output = S3Class;
    fn add(self, rhs: &S3Class) -> S3Class {
        S3Class::new(&self.t + &rhs.t, &self.s + &rhs.s, &self.d + &rhs.d)
    }
}

impl Sub for &S3Class {
    type Output = S3Class;
    fn sub(self, rhs: &S3Class) -> S3Class {
        S3Class::new(&self.t - &rhs.t, &self.s - &rhs.s, &self.d - &rhs.d)
    }
}

/// Tensor product per the R(S_3) table: `S⊗S = T`, `S⊗D = D`,
/// `D⊗D = T + S + D`.
impl Mul for &S3Class {
    type Output = S3Class;
    fn mul(self, rhs: &S3Class) -> S3Class {
        let (t1, s1, d1) = (&self.t, &self.s, &self.d);
        let (t2, s2, d2) = (&rhs.t, &rhs.s, &rhs.d);
        let dd = d1 * d2;
        S3Class::new(
            &(&(t1 * t2) + &(s1 * s2)) + &dd,
            &(&(t1 * s2) + &(s1 * t2)) + &dd,
            &(&(&(t1 * d2) + &(d1 * t2)) + &(&(s1 * d2) + &(d1 * s2))) + &dd,
        )
    }
}

forward_class_binop!(S3Class, Add, add);
forward_class_binop!(S3Class, Sub, sub);
forward_class_binop!(S3Class, Mul, mul);

pub fn s3_mul(a: &S3Class, b: &S3Class) -> S3Class {
    a * b
}

pub fn s3_pow(a: &S3Class, k: u32) -> S3Class {
    a.pow(k)
}

/// `e_{S_3}(H_3) = q^2 T + S - q D` for the full diagonal torus of SL_3
/// under the Weyl-group action, raised to the `k`-th tensor power.
pub fn s3_torus_h3(k: u32) -> S3Class {
    let q = RatFunc::q();
    S3Class::new(q.pow(2).unwrap(), RatFunc::one(), -q).pow(k)
}

/// Closed form of [`s3_torus_h3`], averaged over conjugacy classes:
/// `T`-part `(q^2-1)^k/2 + (q-1)^{2k}/6 + (q^2+q+1)^k/3`, and matching
/// `S`/`D` parts.
pub fn s3_torus_h3_closed(k: u32) -> S3Class {
    let q = RatFunc::q();
    let split = (q.pow(2).unwrap() - RatFunc::one()).pow(k as i64).unwrap();
    let unipotent = (q.clone() - RatFunc::one()).pow(2 * k as i64).unwrap();
    let coxeter = (q.pow(2).unwrap() + &q + RatFunc::one()).pow(k as i64).unwrap();
    let half = RatFunc::frac(1, 2);
    let sixth = RatFunc::frac(1, 6);
    let third = RatFunc::frac(1, 3);
    S3Class::new(
        &(&(&half * &split) + &(&sixth * &unipotent)) + &(&third * &coxeter),
        &(&(-(&half * &split)) + &(&sixth * &unipotent)) + &(&third * &coxeter),
        &third * &(&unipotent - &coxeter),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::IntPoly;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    fn rf(v: i64) -> RatFunc {
        RatFunc::from(v)
    }

    #[test]
    fn z2_identity_and_square() {
        let a = Z2Class::new(q() + rf(2), q() - rf(3));
        assert_eq!(&a * &Z2Class::trivial(), a);

        // (qT - N)^2 = (q^2+1)T - 2qN
        let sq = z2_torus(2);
        assert_eq!(sq.t, q().pow(2).unwrap() + rf(1));
        assert_eq!(sq.n, rf(-2) * q());
    }

    #[test]
    fn s3_table() {
        let d = S3Class::new(rf(0), rf(0), rf(1));
        let dd = &d * &d;
        assert_eq!(dd, S3Class::new(rf(1), rf(1), rf(1)));
        let s = S3Class::new(rf(0), rf(1), rf(0));
        assert_eq!(&s * &s, S3Class::trivial());
        assert_eq!(&s * &d, d);
    }

    #[test]
    fn invariant_parts() {
        assert_eq!(z2_cstar_inversion().invariant_part(), q());
        assert_eq!(S3Class::new(rf(1), rf(1), rf(1)).invariant_part(), rf(1));
        // (C^*)^2 with simultaneous inversion has quotient e-polynomial q^2+1;
        // the permutation action on the two factors gives q^2-q.
        assert_eq!(z2_torus(2).invariant_part(), q().pow(2).unwrap() + rf(1));
        assert_eq!(
            z2_torus_pairs(1).invariant_part(),
            q().pow(2).unwrap() - q()
        );
    }

    #[test]
    fn torus_totals() {
        for k in 0..6 {
            let cls = z2_torus(k);
            assert_eq!(cls.total(), (q() - rf(1)).pow(k as i64).unwrap());
            let pairs = z2_torus_pairs(k);
            assert_eq!(pairs.total(), (q() - rf(1)).pow(2 * k as i64).unwrap());
        }
    }

    #[test]
    fn quotient_product_examples() {
        let z = Z2Class::new(q() + rf(1), q() - rf(4));
        assert_eq!(
            z2_quotient_product(&Z2Class::trivial(), &z),
            z.invariant_part()
        );
        let c = z2_cstar_inversion();
        assert_eq!(z2_quotient_product(&c, &c), q().pow(2).unwrap() + rf(1));
    }

    #[test]
    fn base_from_total_round_trip() {
        let b = Z2Class::new(q().pow(2).unwrap() - rf(2), q() + rf(5));
        let f = z2_cstar_inversion();
        let total = z2_fiber_total(&b, &f);
        assert_eq!(z2_base_from_total(&total, &f).unwrap(), b);

        let degenerate = Z2Class::new(rf(1), rf(1));
        assert!(matches!(
            z2_base_from_total(&total, &degenerate),
            Err(Error::DegenerateFiber)
        ));
    }

    #[test]
    fn torus_small_cases() {
        assert_eq!(z2_torus(0), Z2Class::trivial());
        assert_eq!(z2_torus(1), z2_cstar_inversion());
    }

    #[test]
    fn s3_torus_direct_equals_closed() {
        for k in 0..=8 {
            assert_eq!(s3_torus_h3(k), s3_torus_h3_closed(k), "k = {k}");
        }
    }

    #[test]
    fn s3_torus_small() {
        assert_eq!(s3_torus_h3(0), S3Class::trivial());
        assert_eq!(s3_torus_h3(1), S3Class::new(q().pow(2).unwrap(), rf(1), -q()));
        // invariant part at k = 2 equals the closed expansion
        let byhand = &(&(&RatFunc::frac(1, 2)
            * &(q().pow(2).unwrap() - rf(1)).pow(2).unwrap())
            + &(&RatFunc::frac(1, 6) * &(q() - rf(1)).pow(4).unwrap()))
            + &(&RatFunc::frac(1, 3) * &(q().pow(2).unwrap() + q() + rf(1)).pow(2).unwrap());
        assert_eq!(s3_torus_h3(2).invariant_part(), byhand);
    }

    #[test]
    fn character_homomorphism() {
        // Evaluating virtual characters class-by-class turns tensor powers
        // into plain powers.
        for k in 0..=5 {
            let cls = s3_torus_h3(k);
            let e = k as i64;
            assert_eq!(
                cls.character_identity(),
                (q() - rf(1)).pow(2 * e).unwrap(),
                "identity class, k = {k}"
            );
            assert_eq!(
                cls.character_three_cycle(),
                (q().pow(2).unwrap() + q() + rf(1)).pow(e).unwrap(),
                "3-cycle class, k = {k}"
            );
            assert_eq!(
                cls.character_transposition(),
                (q().pow(2).unwrap() - rf(1)).pow(e).unwrap(),
                "transposition class, k = {k}"
            );
        }
    }

    #[test]
    fn json_shapes() {
        let z = z2_torus(1);
        let js = serde_json::to_value(&z).unwrap();
        assert_eq!(js["T"], serde_json::json!({"num": ["0", "1"], "den": ["1"]}));
        let back: Z2Class = serde_json::from_value(js).unwrap();
        assert_eq!(back, z);

        let s = s3_torus_h3(1);
        let js = serde_json::to_value(&s).unwrap();
        assert!(js.get("D").is_some());
        let back: S3Class = serde_json::from_value(js).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn ring_laws_spot() {
        let a = Z2Class::new(q() - rf(2), rf(3));
        let b = Z2Class::new(q() + rf(1), q());
        let c = Z2Class::new(rf(5), q().pow(2).unwrap());
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));

        let x = S3Class::new(q(), rf(1) - q(), rf(2));
        let y = S3Class::new(rf(1), q(), q() + rf(1));
        let z = S3Class::new(q().pow(2).unwrap(), rf(0), rf(1));
        assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        assert_eq!(&x * &y, &y * &x);
        assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn poly_parse_helper_sane() {
        assert_eq!(IntPoly::parse("q").unwrap(), IntPoly::q());
    }
}
