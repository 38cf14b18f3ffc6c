//! Point counts of the λ-character-variety strata over F_p.
//!
//! Membership of a tuple in a `μ`-stratum depends only on which
//! off-diagonal positions vanish simultaneously across the tuple, so the
//! group is enumerated once, bucketed by zero pattern, and tuple counts are
//! exact sums over pattern combinations. No inclusion–exclusion is
//! involved: the buckets partition the group, and every pattern
//! combination is classified directly by the same membership test a naive
//! tuple loop would use.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{enum_group, GroupKind};
use super::{par_ranges, TUPLE_CAP};
use crate::freechar::Mu5ComplementCase;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaPartition {
    /// `λ = (1, 1)`: GL_2 modulo the diagonal torus.
    OneOne,
    /// `λ = (1, 1, 1)`: GL_3 modulo the diagonal torus.
    OneOneOne,
}

impl LambdaPartition {
    pub fn label(self) -> &'static str {
        match self {
            LambdaPartition::OneOne => "(1,1)",
            LambdaPartition::OneOneOne => "(1,1,1)",
        }
    }
}

/// Zero-pattern bucket counts for GL_2: bit 0 set iff `a_{01} = 0`, bit 1
/// set iff `a_{10} = 0`.
fn zero_profile_counts_gl2(p: u32) -> Result<[u64; 4]> {
    let group = enum_group(GroupKind::Gl2, p)?;
    let chunks = par_ranges(group.elems.len(), |range| {
        let mut counts = [0u64; 4];
        for i in range {
            let m = &group.elems[i];
            let mut bits = 0usize;
            if m.at(0, 1) == 0 {
                bits |= 1;
            }
            if m.at(1, 0) == 0 {
                bits |= 2;
            }
            counts[bits] += 1;
        }
        counts
    });
    let mut counts = [0u64; 4];
    for c in chunks {
        for (i, v) in c.iter().enumerate() {
            counts[i] += v;
        }
    }
    Ok(counts)
}

/// Off-diagonal positions of a 3x3 matrix, in bit order.
const GL3_POSITIONS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

fn zero_profile_counts_gl3(p: u32) -> Result<[u64; 64]> {
    let group = enum_group(GroupKind::Gl3, p)?;
    let chunks = par_ranges(group.elems.len(), |range| {
        let mut counts = [0u64; 64];
        for i in range {
            let m = &group.elems[i];
            let mut bits = 0usize;
            for (k, (r, c)) in GL3_POSITIONS.iter().enumerate() {
                if m.at(*r, *c) == 0 {
                    bits |= 1 << k;
                }
            }
            counts[bits] += 1;
        }
        counts
    });
    let mut counts = [0u64; 64];
    for c in chunks {
        for (i, v) in c.iter().enumerate() {
            counts[i] += v;
        }
    }
    Ok(counts)
}

/// Which coordinate lines (columns) and planes (rows) a common zero
/// pattern leaves invariant.
fn flags_of_pattern(bits: usize) -> ([bool; 3], [bool; 3]) {
    let has = |k: usize| bits & (1 << k) != 0;
    // column j invariant <=> both off-diagonal entries of column j vanish
    let cols = [has(2) && has(4), has(0) && has(5), has(1) && has(3)];
    // row i zero <=> the plane spanned by the other coordinates is invariant
    let rows = [has(0) && has(1), has(2) && has(3), has(4) && has(5)];
    (cols, rows)
}

/// Classify a common zero pattern into the μ^5 stratum (`None`) or one of
/// the six complement pieces.
fn classify_pattern(bits: usize) -> Option<Mu5ComplementCase> {
    let (cols, rows) = flags_of_pattern(bits);
    let nc = cols.iter().filter(|&&b| b).count();
    let nr = rows.iter().filter(|&&b| b).count();
    match (nc, nr) {
        (0, 0) => None,
        (1, 0) | (0, 1) => Some(Mu5ComplementCase::OneVector),
        (1, 1) => {
            let ci = cols.iter().position(|&b| b).unwrap();
            let ri = rows.iter().position(|&b| b).unwrap();
            if ci == ri {
                Some(Mu5ComplementCase::LinePlaneSplit)
            } else {
                Some(Mu5ComplementCase::FullFlag)
            }
        }
        (2, 1) | (1, 2) => Some(Mu5ComplementCase::TwoFlagsSameSide),
        (2, 2) => Some(Mu5ComplementCase::FourFlags),
        (3, 3) => Some(Mu5ComplementCase::Diagonal),
        other => panic!("inconsistent invariant-flag pattern {bits:#08b}: {other:?}"),
    }
}

/// Exact count of `r`-tuples in `GL_2(F_p)^r` lying in the `μ^2` stratum
/// (neither off-diagonal entry vector vanishes identically).
pub fn mu2_stratum_count(p: u32, r: u32) -> Result<BigInt> {
    let counts = zero_profile_counts_gl2(p)?;
    check_combo_budget(4, r)?;
    let mut total = BigInt::zero();
    // iterate all r-fold products of buckets; the running AND starts full
    fn rec(counts: &[u64; 4], depth: u32, and_bits: usize, weight: &BigInt, total: &mut BigInt) {
        if depth == 0 {
            if and_bits == 0 {
                *total += weight;
            }
            return;
        }
        for (bits, c) in counts.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            rec(counts, depth - 1, and_bits & bits, &(weight * c), total);
        }
    }
    rec(&counts, r, 3, &BigInt::one(), &mut total);
    Ok(total)
}

/// Census of `GL_3(F_p)^r` by μ-stratum: the `μ^5` count plus one count per
/// complement piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mu5StratumCensus {
    pub mu5: BigInt,
    pub complement: BTreeMap<Mu5ComplementCase, BigInt>,
}

pub fn mu5_stratum_census(p: u32, r: u32) -> Result<Mu5StratumCensus> {
    let counts = zero_profile_counts_gl3(p)?;
    check_combo_budget(64, r)?;
    let mut census = Mu5StratumCensus {
        mu5: BigInt::zero(),
        complement: BTreeMap::new(),
    };
    fn rec(
        counts: &[u64; 64],
        depth: u32,
        and_bits: usize,
        weight: &BigInt,
        census: &mut Mu5StratumCensus,
    ) {
        if depth == 0 {
            match classify_pattern(and_bits) {
                None => census.mu5 += weight,
                Some(case) => {
                    *census.complement.entry(case).or_default() += weight;
                }
            }
            return;
        }
        for (bits, c) in counts.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            rec(counts, depth - 1, and_bits & bits, &(weight * c), census);
        }
    }
    rec(&counts, r, 63, &BigInt::one(), &mut census);
    Ok(census)
}

fn check_combo_budget(buckets: u64, r: u32) -> Result<()> {
    let combos = buckets.checked_pow(r).unwrap_or(u64::MAX);
    if combos > TUPLE_CAP {
        return Err(Error::BudgetExceeded {
            needed: combos,
            cap: TUPLE_CAP,
        });
    }
    Ok(())
}

/// Point count of the λ-character variety of the free group `F_r` over
/// F_p: strata where the torus acts trivially contribute their raw counts,
/// and the free strata contribute their counts divided by the torus orbit
/// size.
pub fn lambda_orbit_count(partition: LambdaPartition, p: u32, r: u32) -> Result<BigInt> {
    assert!(r >= 1, "rank must be positive");
    let pm1 = BigInt::from(p - 1);
    match partition {
        LambdaPartition::OneOne => {
            let mu2 = mu2_stratum_count(p, r)?;
            let (free_part, rem) = num_integer::Integer::div_rem(&mu2, &pm1);
            assert!(rem.is_zero(), "torus acts freely on the mu^2 stratum");
            Ok(pm1.pow(2 * r) + free_part)
        }
        LambdaPartition::OneOneOne => {
            let mu2 = mu2_stratum_count(p, r)?;
            let census = mu5_stratum_census(p, r)?;
            let (mu2_free, rem) = num_integer::Integer::div_rem(&mu2, &pm1);
            assert!(rem.is_zero(), "torus acts freely on the mu^2 stratum");
            let (mu5_free, rem) =
                num_integer::Integer::div_rem(&census.mu5, &(&pm1 * &pm1));
            assert!(rem.is_zero(), "torus acts freely on the mu^5 stratum");
            Ok(pm1.pow(3 * r) + BigInt::from(3) * pm1.pow(r) * mu2_free + mu5_free)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fforacle::mat::FqMat;
    use crate::freechar::{lambda11, lambda111, mu2_stratum_gl2, mu5_stratum_gl3};
    use crate::qpoly::RatFunc;

    fn eval_int(v: &RatFunc, p: u32) -> BigInt {
        let r = v.evaluate(&BigInt::from(p)).unwrap();
        assert!(num_integer::Integer::is_multiple_of(r.numer(), r.denom()));
        r.to_integer()
    }

    /// Naive direct enumeration of tuples, for cross-validation of the
    /// bucketed counts at tiny sizes.
    fn mu5_census_direct(p: u32, r: u32) -> Mu5StratumCensus {
        let group = enum_group(GroupKind::Gl3, p).unwrap();
        let profile = |m: &FqMat| -> usize {
            let mut bits = 0usize;
            for (k, (i, j)) in GL3_POSITIONS.iter().enumerate() {
                if m.at(*i, *j) == 0 {
                    bits |= 1 << k;
                }
            }
            bits
        };
        let mut census = Mu5StratumCensus {
            mu5: BigInt::zero(),
            complement: BTreeMap::new(),
        };
        let n = group.elems.len();
        let mut idx = vec![0usize; r as usize];
        loop {
            let bits = idx
                .iter()
                .fold(63usize, |acc, &i| acc & profile(&group.elems[i]));
            match classify_pattern(bits) {
                None => census.mu5 += 1,
                Some(case) => *census.complement.entry(case).or_default() += 1,
            }
            let mut carry = true;
            for slot in idx.iter_mut() {
                *slot += 1;
                if *slot < n {
                    carry = false;
                    break;
                }
                *slot = 0;
            }
            if carry {
                break;
            }
        }
        census
    }

    #[test]
    fn bucketed_census_matches_direct_enumeration() {
        for (p, r) in [(2u32, 1u32), (2, 2), (3, 1)] {
            let fast = mu5_stratum_census(p, r).unwrap();
            let slow = mu5_census_direct(p, r);
            assert_eq!(fast, slow, "p = {p}, r = {r}");
        }
    }

    #[test]
    fn mu2_counts_match_polynomial() {
        for (p, r) in [(2u32, 1u32), (2, 2), (3, 1), (3, 2), (5, 1), (5, 2)] {
            let observed = mu2_stratum_count(p, r).unwrap();
            let expected = RatFunc::from(mu2_stratum_gl2(r)).evaluate(&BigInt::from(p)).unwrap();
            assert_eq!(observed, expected.to_integer(), "p = {p}, r = {r}");
        }
    }

    #[test]
    fn mu5_counts_match_polynomial() {
        for (p, r) in [(2u32, 1u32), (2, 2), (3, 1), (3, 2)] {
            let observed = mu5_stratum_census(p, r).unwrap();
            let expected = eval_int(&RatFunc::from(mu5_stratum_gl3(r)), p);
            assert_eq!(observed.mu5, expected, "p = {p}, r = {r}");
        }
    }

    #[test]
    fn lambda11_anchor_value() {
        // e(X_{(1,1)}(Z)) = q^3 - q^2: 18 points over F_3
        let got = lambda_orbit_count(LambdaPartition::OneOne, 3, 1).unwrap();
        assert_eq!(got, BigInt::from(18));
        assert_eq!(got, eval_int(&lambda11(1u32), 3));
    }

    #[test]
    fn lambda_counts_match_evaluations() {
        for (p, r) in [(2u32, 1u32), (2, 2), (3, 1), (3, 2), (5, 1), (5, 2)] {
            let got = lambda_orbit_count(LambdaPartition::OneOne, p, r).unwrap();
            assert_eq!(got, eval_int(&lambda11(r), p), "(1,1) p = {p}, r = {r}");
        }
        for (p, r) in [(2u32, 1u32), (2, 2), (3, 1), (3, 2)] {
            let got = lambda_orbit_count(LambdaPartition::OneOneOne, p, r).unwrap();
            assert_eq!(got, eval_int(&lambda111(r), p), "(1,1,1) p = {p}, r = {r}");
        }
    }

    #[test]
    fn budget_gates_apply() {
        // GL_3(F_5) exceeds the group element cap
        assert!(matches!(
            mu5_stratum_census(5, 2),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
