//! Finite-field brute-force verification.
//!
//! Everything here counts honestly: groups are enumerated element by
//! element, link relations are solved by lookup tables, orbits are walked
//! with generator BFS, and stabilizer types are read off the commutant
//! dimension (a Galois-invariant, so no field extensions are needed to
//! classify). The resulting censuses are compared against evaluations of
//! the exact polynomials at `q = p`.
//!
//! Counts of strata carved out by roots of unity equal polynomial values
//! only when those roots live in F_p; such checks are gated on the exact
//! congruence (`2mn | p-1`, resp. `3mn | p-1`) and recorded as skips or
//! informational rows otherwise.

mod census;
mod fixtures;
mod fq;
mod group;
mod lambda;
mod mat;
mod semisimple;
mod verify;

pub use census::{
    classify_stab_pair, link_solution_count, link_solutions, orbit_census,
    sl2_irreducible_pair_count, CensusEntry, CensusKey, OrbitCensus, StabType,
};
pub use fixtures::FixtureStore;
pub use fq::{is_prime, Field, Field2};
pub use group::{enum_group, Group, GroupKind};
pub use lambda::{
    lambda_orbit_count, mu2_stratum_count, mu5_stratum_census, LambdaPartition, Mu5StratumCensus,
};
pub use mat::{commutant_dim, FqMat};
pub use semisimple::{is_irreducible_pair_rank2, tuple_semisimple};
pub use verify::{run_checks, CheckKind, VerifyOptions};

/// Hard cap on the size of a single enumerated group.
pub const GROUP_ELEM_CAP: u64 = 1_000_000;

/// Hard cap on enumerated tuples per check.
pub const TUPLE_CAP: u64 = 10_000_000;

/// Worker count for the embarrassingly parallel loops, capped by the
/// `TLEPOLY_THREADS` environment variable.
pub fn worker_count() -> usize {
    std::env::var("TLEPOLY_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Split `0..n` into contiguous chunks, map each on its own thread, and
/// return the results in chunk order. Aggregates are therefore
/// deterministic regardless of the worker count.
pub(crate) fn par_ranges<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(std::ops::Range<usize>) -> R + Sync,
{
    let workers = worker_count().min(n.max(1));
    if workers <= 1 || n < 1024 {
        return vec![f(0..n)];
    }
    let chunk = n.div_ceil(workers);
    let ranges: Vec<_> = (0..workers)
        .map(|w| (w * chunk).min(n)..((w + 1) * chunk).min(n))
        .filter(|r| !r.is_empty())
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| scope.spawn(|| f(r)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_ranges_deterministic() {
        let sums: Vec<u64> = par_ranges(10_000, |r| r.map(|x| x as u64).sum());
        let total: u64 = sums.iter().sum();
        assert_eq!(total, 9999 * 10_000 / 2);
    }
}
