//! Crate-internal shorthand for transcribing closed formulas.

use num_bigint::BigInt;

use crate::qpoly::RatFunc;

pub(crate) fn q() -> RatFunc {
    RatFunc::q()
}

pub(crate) fn int(v: i64) -> RatFunc {
    RatFunc::from(v)
}

pub(crate) fn big(v: &BigInt) -> RatFunc {
    RatFunc::from(v.clone())
}

pub(crate) fn half() -> RatFunc {
    RatFunc::frac(1, 2)
}

pub(crate) fn third() -> RatFunc {
    RatFunc::frac(1, 3)
}

pub(crate) fn sixth() -> RatFunc {
    RatFunc::frac(1, 6)
}

/// `base^k` for a base known to be a nonzero rational function.
pub(crate) fn pw(base: &RatFunc, k: i64) -> RatFunc {
    base.pow(k).expect("nonzero base in formula power")
}

/// `q^k`, `k` possibly negative.
pub(crate) fn qp(k: i64) -> RatFunc {
    pw(&q(), k)
}

/// `q - 1`
pub(crate) fn qm1() -> RatFunc {
    q() - int(1)
}

/// `q + 1`
pub(crate) fn qp1() -> RatFunc {
    q() + int(1)
}

/// `q^2 + q`
pub(crate) fn q2q() -> RatFunc {
    qp(2) + q()
}

/// `q^2 - 1`
pub(crate) fn q2m1() -> RatFunc {
    qp(2) - int(1)
}

/// `q^2 + q + 1`
pub(crate) fn q2q1() -> RatFunc {
    qp(2) + q() + int(1)
}

/// `q^3 - q`, the E-polynomial of SL_2(C).
pub(crate) fn q3q() -> RatFunc {
    qp(3) - q()
}
