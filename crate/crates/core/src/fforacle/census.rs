//! Solutions of the torus-link relations over F_p, stabilizer-type
//! classification, and the orbit census under conjugation.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::fq::{Field, Field2};
use super::group::{enum_group, Group, GroupKind};
use super::mat::{commutant_dim, FqMat};
use super::semisimple::{eigen_lines_2, tuple_semisimple};
use super::TUPLE_CAP;
use crate::{Error, Result};

/// Stabilizer type, read off the commutant dimension.
///
/// Rank 2: dims 1, 2, 4 are the center, the torus and the full group.
/// Rank 3: dims 1, 2, 3, 5, 9 are the center, the one-parameter torus, the
/// diagonal torus, the GL_2-block subgroup and the full group. Any other
/// dimension belongs to a non-semisimple tuple and is binned as `Other`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StabType {
    H1,
    H2,
    H3,
    H4,
    Full,
    Other(u8),
}

impl StabType {
    pub fn from_commutant_dim(rank: u8, dim: usize) -> StabType {
        match (rank, dim) {
            (2, 1) => StabType::H1,
            (2, 2) => StabType::H2,
            (2, 4) => StabType::Full,
            (3, 1) => StabType::H1,
            (3, 2) => StabType::H2,
            (3, 3) => StabType::H3,
            (3, 5) => StabType::H4,
            (3, 9) => StabType::Full,
            (_, d) => StabType::Other(d as u8),
        }
    }

    pub fn label(self) -> String {
        match self {
            StabType::H1 => "H1".into(),
            StabType::H2 => "H2".into(),
            StabType::H3 => "H3".into(),
            StabType::H4 => "H4".into(),
            StabType::Full => "Full".into(),
            StabType::Other(d) => format!("dim{d}"),
        }
    }
}

/// Stabilizer types of `(A, B)` and of `A^n`, by commutant dimension.
///
/// Errors on a commutant dimension outside the semisimple list, which
/// signals a non-semisimple tuple being misfiled; the census bins such
/// tuples instead of erroring.
pub fn classify_stab_pair(
    a: &FqMat,
    b: &FqMat,
    n: u64,
    f: &Field,
) -> Result<(StabType, StabType)> {
    let rank = a.rank;
    let pair = StabType::from_commutant_dim(rank, commutant_dim(&[*a, *b], f));
    let power = StabType::from_commutant_dim(rank, commutant_dim(&[a.pow(n, f)], f));
    for t in [pair, power] {
        if let StabType::Other(dim) = t {
            return Err(Error::UnexpectedCommutant {
                dim: dim as usize,
                rank: rank as usize,
            });
        }
    }
    Ok((pair, power))
}

/// Census key: stabilizer types of the underlying knot pair and of `A^n`,
/// plus whether the full tuple has a closed conjugation orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CensusKey {
    pub pair_type: StabType,
    pub power_type: StabType,
    pub closed: bool,
}

impl CensusKey {
    pub fn label(&self) -> String {
        format!(
            "({}, {}){}",
            self.pair_type.label(),
            self.power_type.label(),
            if self.closed { "" } else { " non-closed" }
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CensusEntry {
    pub point_count: u64,
    pub orbit_count: u64,
    /// orbit size -> number of orbits of that size
    pub orbit_sizes: BTreeMap<u64, u64>,
}

/// Full orbit census of the solution tuples of the link relations.
#[derive(Debug, Clone)]
pub struct OrbitCensus {
    pub kind: GroupKind,
    pub p: u32,
    pub n: u64,
    pub m: u64,
    pub d: u32,
    pub group_order: u64,
    pub total_points: u64,
    pub entries: BTreeMap<CensusKey, CensusEntry>,
}

struct LinkSystem {
    group: Group,
    n: u64,
    d: u32,
    /// `C -> all B with B^m = C`
    m_power_index: HashMap<FqMat, Vec<u32>>,
}

impl LinkSystem {
    fn build(kind: GroupKind, p: u32, n: u64, m: u64, d: u32) -> Result<LinkSystem> {
        assert!(d >= 1 && n >= 1 && m >= 1);
        let group = enum_group(kind, p)?;
        let m_power_index = group.power_index(m);
        Ok(LinkSystem {
            group,
            n,
            d,
            m_power_index,
        })
    }

    fn field(&self) -> &Field {
        &self.group.field
    }

    /// Exact number of solution tuples, without materializing them.
    fn count(&self) -> u128 {
        let mut cent_cache: HashMap<FqMat, u128> = HashMap::new();
        let mut total: u128 = 0;
        for a in &self.group.elems {
            let an = a.pow(self.n, self.field());
            let Some(bs) = self.m_power_index.get(&an) else {
                continue;
            };
            let cent = *cent_cache
                .entry(an)
                .or_insert_with(|| self.group.centralizer(&an).len() as u128);
            total += bs.len() as u128 * cent.pow(self.d - 1);
        }
        total
    }

    fn materialize(&self) -> Result<Vec<Vec<FqMat>>> {
        let total = self.count();
        if total > TUPLE_CAP as u128 {
            return Err(Error::BudgetExceeded {
                needed: total.min(u64::MAX as u128) as u64,
                cap: TUPLE_CAP,
            });
        }
        let mut cent_cache: HashMap<FqMat, Vec<u32>> = HashMap::new();
        let mut out = Vec::with_capacity(total as usize);
        let fiber = (self.d - 1) as usize;
        for a in &self.group.elems {
            let an = a.pow(self.n, self.field());
            let Some(bs) = self.m_power_index.get(&an) else {
                continue;
            };
            let cent = cent_cache
                .entry(an)
                .or_insert_with(|| self.group.centralizer(&an));
            for &bi in bs {
                let b = self.group.elems[bi as usize];
                // odometer over the (d-1)-fold centralizer product
                let mut idx = vec![0usize; fiber];
                loop {
                    let mut tuple = Vec::with_capacity(2 + fiber);
                    tuple.push(*a);
                    tuple.push(b);
                    for &k in &idx {
                        tuple.push(self.group.elems[cent[k] as usize]);
                    }
                    out.push(tuple);
                    let mut carry = true;
                    for slot in idx.iter_mut() {
                        *slot += 1;
                        if *slot < cent.len() {
                            carry = false;
                            break;
                        }
                        *slot = 0;
                    }
                    if carry {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Exact number of tuples `(A, B, F_1, ..., F_{d-1})` in the group over F_p
/// with `A^n = B^m` and every `F_i` centralizing `A^n`.
pub fn link_solution_count(kind: GroupKind, p: u32, n: u64, m: u64, d: u32) -> Result<u128> {
    Ok(LinkSystem::build(kind, p, n, m, d)?.count())
}

/// All solution tuples, each exactly once. Budget-gated.
pub fn link_solutions(
    kind: GroupKind,
    p: u32,
    n: u64,
    m: u64,
    d: u32,
) -> Result<Vec<Vec<FqMat>>> {
    LinkSystem::build(kind, p, n, m, d)?.materialize()
}

fn encode(tuple: &[FqMat]) -> Vec<u8> {
    let cells = (tuple[0].rank * tuple[0].rank) as usize;
    let mut out = Vec::with_capacity(cells * tuple.len());
    for m in tuple {
        out.extend_from_slice(&m.e[..cells]);
    }
    out
}

/// Orbit census of the solution set under conjugation by the full group:
/// point and orbit counts per stabilizer-type key, orbits walked by BFS
/// over generator conjugations with a memoized visited set.
pub fn orbit_census(kind: GroupKind, p: u32, n: u64, m: u64, d: u32) -> Result<OrbitCensus> {
    let sys = LinkSystem::build(kind, p, n, m, d)?;
    let f = *sys.field();
    let tuples = sys.materialize()?;
    let rank = kind.rank();

    let mut entries: BTreeMap<CensusKey, CensusEntry> = BTreeMap::new();
    let mut keys = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let pair_type = StabType::from_commutant_dim(rank, commutant_dim(&t[..2], &f));
        let power_type =
            StabType::from_commutant_dim(rank, commutant_dim(&[t[0].pow(n, &f)], &f));
        let key = CensusKey {
            pair_type,
            power_type,
            closed: tuple_semisimple(t, &f),
        };
        entries.entry(key).or_default().point_count += 1;
        keys.push(key);
    }

    let gens: Vec<(FqMat, FqMat)> = kind
        .generators(&f)
        .into_iter()
        .map(|g| (g, g.inv(&f)))
        .collect();
    let mut visited: HashSet<Vec<u8>> = HashSet::with_capacity(tuples.len());
    for (i, t) in tuples.iter().enumerate() {
        let code = encode(t);
        if visited.contains(&code) {
            continue;
        }
        visited.insert(code);
        let mut frontier = vec![t.clone()];
        let mut size = 1u64;
        while let Some(cur) = frontier.pop() {
            for (g, gi) in &gens {
                let next: Vec<FqMat> = cur.iter().map(|m| m.conjugate_by(g, gi, &f)).collect();
                let code = encode(&next);
                if visited.insert(code) {
                    size += 1;
                    frontier.push(next);
                }
            }
        }
        let entry = entries.get_mut(&keys[i]).expect("key recorded");
        entry.orbit_count += 1;
        *entry.orbit_sizes.entry(size).or_default() += 1;
    }

    Ok(OrbitCensus {
        kind,
        p,
        n,
        m,
        d,
        group_order: sys.group.order(),
        total_points: tuples.len() as u64,
        entries,
    })
}

/// Number of pairs `(A, B)` in `SL_2(F_p)^2` with `A^n = B^m` that are
/// irreducible (no common eigenline over the quadratic extension).
pub fn sl2_irreducible_pair_count(p: u32, n: u64, m: u64) -> Result<u64> {
    let sys = LinkSystem::build(GroupKind::Sl2, p, n, m, 1)?;
    let f2 = Field2::new(*sys.field());
    let mut count = 0u64;
    for a in &sys.group.elems {
        if a.is_scalar() {
            continue;
        }
        let an = a.pow(n, sys.field());
        let Some(bs) = sys.m_power_index.get(&an) else {
            continue;
        };
        let a_lines = eigen_lines_2(a, &f2);
        for &bi in bs {
            let b = &sys.group.elems[bi as usize];
            if b.is_scalar() {
                continue;
            }
            let reducible = a_lines.iter().any(|v| {
                let w = b.apply2(v, &f2);
                // v, w parallel <=> v is a B-eigenline as well
                f2.sub(f2.mul(v[0], w[1]), f2.mul(v[1], w[0])).is_zero()
            });
            if !reducible {
                count += 1;
            }
        }
    }
    Ok(count)
}
