//! E-polynomials of free-group character varieties and of λ-character
//! varieties (quotients of `GL_n`-representation varieties by a block
//! subgroup), the building blocks of every stratum fiber.
//!
//! Throughout, `r` is the rank of the free group; strata of a `d`-strand
//! link use `r = d - 1`. All formulas are closed expressions in `q` that
//! happen to be rational for small `r` and collapse to the right value —
//! `r = 0` always yields the class of a point — by exact arithmetic alone,
//! with no special-casing.

use crate::fx::*;
use crate::qpoly::{IntPoly, RatFunc};
use crate::repring::{z2_base_from_total, z2_cstar_inversion, z2_torus_pairs, Z2Class};

/// Rank of a free group `F_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FreeRank(pub u32);

impl From<u32> for FreeRank {
    fn from(r: u32) -> Self {
        FreeRank(r)
    }
}

fn rank(r: impl Into<FreeRank>) -> i64 {
    r.into().0 as i64
}

/// `e(SL_2^r ⫽ SL_2)`, the SL_2 character variety of the free group `F_r`:
/// `(q^3-q)^{r-1} - (q^2-q)^{r-1} + q((q+1)^{r-1} + (q-1)^{r-1})/2`.
pub fn char_free_sl2(r: impl Into<FreeRank>) -> RatFunc {
    let e = rank(r) - 1;
    pw(&q3q(), e) - pw(&(qp(2) - q()), e)
        + half() * q() * (pw(&qp1(), e) + pw(&qm1(), e))
}

/// `e(GL_2^r ⫽ GL_2)`: the determinant line contributes `(q-1)^r` over the
/// SL_2 bracket.
pub fn char_free_gl2(r: impl Into<FreeRank>) -> RatFunc {
    let r = r.into();
    pw(&qm1(), rank(r)) * char_free_sl2(r)
}

/// `e(GL_2^r ⫽ GL_2)` assembled from its reducible locus
/// `((C^*)^{2r}/Z_2)` and its irreducible locus, the route used inside the
/// SL_3 ⫽ H_4 computation. Must agree with [`char_free_gl2`].
pub fn char_free_gl2_split(r: impl Into<FreeRank>) -> RatFunc {
    let r = rank(r);
    let reducible = half() * (pw(&qm1(), 2 * r) + pw(&q2m1(), r));
    let irreducible = pw(&qm1(), r)
        * (pw(&qm1(), r - 1) * qp(r - 1) * (pw(&qp1(), r - 1) - int(1))
            + half() * pw(&qm1(), r - 1)
            - half() * pw(&qp1(), r - 1));
    reducible + irreducible
}

/// `e(SL_3^r ⫽ SL_3)`, the SL_3 character variety of the free group `F_r`.
pub fn char_free_sl3(r: impl Into<FreeRank>) -> RatFunc {
    let e = rank(r);
    let big = qp(8) - qp(6) - qp(5) + qp(3);
    pw(&big, e - 1)
        + pw(&qm1(), 2 * e - 2) * (qp(3 * e - 3) - qp(e))
        + sixth() * pw(&qm1(), 2 * e - 2) * q() * qp1()
        + half() * pw(&q2m1(), e - 1) * q() * qm1()
        + third() * pw(&q2q1(), e - 1) * q() * qp1()
        - pw(&qm1(), e - 1) * qp(e - 1) * pw(&q2m1(), e - 1) * (int(2) * qp(2 * e - 2) - q())
}

/// `e(X_{(1,1)}(F_r))`: the `λ = (1,1)` character variety of `GL_2`-tuples,
/// `(q-1)^{2r} + (q-1)^{2r-1}((q^2+q)^r - 2q^r + 1)`.
pub fn lambda11(r: impl Into<FreeRank>) -> RatFunc {
    let r = rank(r);
    pw(&qm1(), 2 * r) + pw(&qm1(), 2 * r - 1) * mu2_bracket(r)
}

fn mu2_bracket(r: i64) -> RatFunc {
    pw(&q2q(), r) - int(2) * qp(r) + int(1)
}

/// Point count of the `μ^2` stratum of `GL_2^r` (both off-diagonal entry
/// vectors nonzero): `(q-1)^{2r}((q^2+q)^r - 2q^r + 1)`.
pub fn mu2_stratum_gl2(r: impl Into<FreeRank>) -> IntPoly {
    let r = rank(r);
    (pw(&qm1(), 2 * r) * mu2_bracket(r))
        .to_intpoly()
        .expect("mu2 stratum count is a polynomial")
}

/// `e_{Z_2}(X_{(1,1)}(F_r))` for the action swapping the two blocks, as a
/// closed pair of `T`/`N` parts.
pub fn lambda11_z2(r: impl Into<FreeRank>) -> Z2Class {
    let r = rank(r);
    let t = qp(r + 1) * pw(&qp1(), r - 1) * pw(&qm1(), 2 * r - 1) - qp(r) * pw(&qm1(), 2 * r - 1)
        + half() * (q() * pw(&qm1(), 2 * r - 1) + (qp(2) - q()) * pw(&q2m1(), r - 1));
    let n = qp(r) * pw(&qp1(), r - 1) * pw(&qm1(), 2 * r - 1) - qp(r) * pw(&qm1(), 2 * r - 1)
        + half() * (q() * pw(&qm1(), 2 * r - 1) - (qp(2) - q()) * pw(&q2m1(), r - 1));
    Z2Class::new(t, n)
}

/// [`lambda11_z2`] rebuilt along its derivation: split off the diagonal
/// stratum, count the `μ^2` stratum equivariantly, and divide out the free
/// `C^*` fiber with [`z2_base_from_total`]. Equal to the closed pair.
pub fn lambda11_z2_rebuilt(r: impl Into<FreeRank>) -> Z2Class {
    let r = rank(r);
    let diag = z2_torus_pairs(r as u32);
    let y1_part = pw(&qm1(), 2 * r) * (qp(r) - int(1));
    let y1 = Z2Class::new(y1_part.clone(), y1_part);
    let all = Z2Class::new(pw(&q2q(), r) * pw(&qm1(), 2 * r), RatFunc::zero());
    let mu2_total = &(&all - &y1) - &diag;
    let base = z2_base_from_total(&mu2_total, &z2_cstar_inversion())
        .expect("C^* inversion fiber is nondegenerate");
    &diag + &base
}

/// `e(X_{(1,1,1)}(F_r))`: the `λ = (1,1,1)` character variety of
/// `GL_3`-tuples.
pub fn lambda111(r: impl Into<FreeRank>) -> RatFunc {
    let r = rank(r);
    pw(&qm1(), 3 * r)
        + int(3) * pw(&qm1(), 3 * r - 1) * mu2_bracket(r)
        + pw(&qm1(), 3 * r - 2) * mu5_bracket(r)
}

fn mu5_bracket(r: i64) -> RatFunc {
    pw(&q2q1(), r) * pw(&qp1(), r) * qp(3 * r) - int(3) * pw(&qp1(), r) * (int(2) * qp(3 * r) - qp(r))
        + int(6) * qp(r) * (qp(2 * r) - int(1))
        + int(2)
}

/// Point count of the `μ^5` stratum of `GL_3^r` (no common invariant
/// coordinate line or plane): `(q-1)^{3r} ((q^2+q+1)^r (q+1)^r q^{3r} - ...)`.
pub fn mu5_stratum_gl3(r: impl Into<FreeRank>) -> IntPoly {
    let r = rank(r);
    (pw(&qm1(), 3 * r) * mu5_bracket(r))
        .to_intpoly()
        .expect("mu5 stratum count is a polynomial")
}

/// The six disjoint pieces of the complement of the `μ^5` stratum inside
/// `GL_3^r`, classified by which coordinate lines/planes the tuple leaves
/// invariant. Each piece has its own count so the finite-field oracle can
/// pin discrepancies to a single case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mu5ComplementCase {
    /// Exactly one invariant line or plane.
    OneVector,
    /// An invariant line with a complementary invariant plane (block split).
    LinePlaneSplit,
    /// An invariant full flag but no splitting (one line inside one plane).
    FullFlag,
    /// Two invariant lines (or dually two planes), not three.
    TwoFlagsSameSide,
    /// Two lines and two planes at once, not three (four flags).
    FourFlags,
    /// Simultaneously diagonal tuples.
    Diagonal,
}

impl Mu5ComplementCase {
    pub const ALL: [Mu5ComplementCase; 6] = [
        Mu5ComplementCase::OneVector,
        Mu5ComplementCase::LinePlaneSplit,
        Mu5ComplementCase::FullFlag,
        Mu5ComplementCase::TwoFlagsSameSide,
        Mu5ComplementCase::FourFlags,
        Mu5ComplementCase::Diagonal,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Mu5ComplementCase::OneVector => "one-vector",
            Mu5ComplementCase::LinePlaneSplit => "line-plane-split",
            Mu5ComplementCase::FullFlag => "full-flag",
            Mu5ComplementCase::TwoFlagsSameSide => "two-flags-same-side",
            Mu5ComplementCase::FourFlags => "four-flags",
            Mu5ComplementCase::Diagonal => "diagonal",
        }
    }
}

/// Point count of one complement piece of the `μ^5` stratum in `GL_3^r`.
pub fn mu5_complement_count(case: Mu5ComplementCase, r: impl Into<FreeRank>) -> IntPoly {
    let r = rank(r);
    let base = pw(&qm1(), 3 * r);
    let split = qp(r) * pw(&qp1(), r) - int(2) * qp(r) + int(1);
    let value = match case {
        Mu5ComplementCase::OneVector => int(6) * &base * (qp(2 * r) - int(1)) * &split,
        Mu5ComplementCase::LinePlaneSplit => int(3) * &base * &split,
        Mu5ComplementCase::FullFlag => {
            int(6) * &base * pw(&(qp(r) - int(1)), 2) * qp(r)
        }
        Mu5ComplementCase::TwoFlagsSameSide => int(6) * &base * pw(&(qp(r) - int(1)), 2),
        Mu5ComplementCase::FourFlags => int(6) * &base * (qp(r) - int(1)),
        Mu5ComplementCase::Diagonal => base,
    };
    value.to_intpoly().expect("complement counts are polynomials")
}
