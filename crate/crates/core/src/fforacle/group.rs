//! Complete enumeration of the small matrix groups the oracle works in.

use std::collections::HashMap;

use super::fq::Field;
use super::mat::FqMat;
use super::{par_ranges, GROUP_ELEM_CAP};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Sl2,
    Gl2,
    Sl3,
    Gl3,
}

impl GroupKind {
    pub fn rank(self) -> u8 {
        match self {
            GroupKind::Sl2 | GroupKind::Gl2 => 2,
            GroupKind::Sl3 | GroupKind::Gl3 => 3,
        }
    }

    pub fn is_special(self) -> bool {
        matches!(self, GroupKind::Sl2 | GroupKind::Sl3)
    }

    pub fn label(self) -> &'static str {
        match self {
            GroupKind::Sl2 => "SL2",
            GroupKind::Gl2 => "GL2",
            GroupKind::Sl3 => "SL3",
            GroupKind::Gl3 => "GL3",
        }
    }

    /// Group order over F_p.
    pub fn order(self, p: u64) -> u64 {
        match self {
            GroupKind::Gl2 => (p * p - 1) * (p * p - p),
            GroupKind::Sl2 => p * p * p - p,
            GroupKind::Gl3 => {
                let p3 = p * p * p;
                (p3 - 1) * (p3 - p) * (p3 - p * p)
            }
            GroupKind::Sl3 => {
                let p3 = p * p * p;
                (p3 - 1) * (p3 - p) * p * p
            }
        }
    }

    fn det_ok(self, det: u32) -> bool {
        if self.is_special() {
            det == 1
        } else {
            det != 0
        }
    }

    /// A small generating set: the elementary transvections, plus a
    /// primitive-root torus generator for the general linear groups.
    pub fn generators(self, f: &Field) -> Vec<FqMat> {
        let r = self.rank() as usize;
        let mut gens = Vec::new();
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let mut m = FqMat::identity(self.rank());
                m.set(i, j, 1);
                gens.push(m);
            }
        }
        if !self.is_special() && f.p > 2 {
            let mut m = FqMat::identity(self.rank());
            m.set(0, 0, f.primitive_root());
            gens.push(m);
        }
        gens
    }
}

/// A fully enumerated matrix group over F_p with lookup indexes.
pub struct Group {
    pub kind: GroupKind,
    pub field: Field,
    pub elems: Vec<FqMat>,
}

/// Complete duplicate-free enumeration of the group elements.
///
/// Errors with [`Error::BudgetExceeded`] when the group order exceeds the
/// per-group element cap.
pub fn enum_group(kind: GroupKind, p: u32) -> Result<Group> {
    let field = Field::new(p)?;
    let order = kind.order(p as u64);
    if order > GROUP_ELEM_CAP {
        return Err(Error::BudgetExceeded {
            needed: order,
            cap: GROUP_ELEM_CAP,
        });
    }
    let rank = kind.rank();
    let cells = (rank as u32 * rank as u32) as usize;
    let total = (p as u64).pow(cells as u32);
    let chunks = par_ranges(total as usize, |range| {
        let mut out = Vec::new();
        let mut m = FqMat::zero(rank);
        for idx in range {
            let mut v = idx as u64;
            for c in 0..cells {
                m.e[c] = (v % p as u64) as u8;
                v /= p as u64;
            }
            if kind.det_ok(m.det(&field)) {
                out.push(m);
            }
        }
        out
    });
    let elems: Vec<FqMat> = chunks.into_iter().flatten().collect();
    debug_assert_eq!(elems.len() as u64, order);
    Ok(Group { kind, field, elems })
}

impl Group {
    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    /// Index from `X^e` to the list of `X` with that power.
    pub fn power_index(&self, e: u64) -> HashMap<FqMat, Vec<u32>> {
        let mut map: HashMap<FqMat, Vec<u32>> = HashMap::new();
        for (i, x) in self.elems.iter().enumerate() {
            map.entry(x.pow(e, &self.field)).or_default().push(i as u32);
        }
        map
    }

    /// Elements commuting with `c`.
    pub fn centralizer(&self, c: &FqMat) -> Vec<u32> {
        self.elems
            .iter()
            .enumerate()
            .filter(|(_, x)| x.mul(c, &self.field) == c.mul(x, &self.field))
            .map(|(i, _)| i as u32)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_enumeration() {
        assert_eq!(enum_group(GroupKind::Sl2, 3).unwrap().order(), 24);
        assert_eq!(enum_group(GroupKind::Sl3, 2).unwrap().order(), 168);
        assert_eq!(enum_group(GroupKind::Gl2, 3).unwrap().order(), 48);
        assert_eq!(enum_group(GroupKind::Gl3, 3).unwrap().order(), 11232);
    }

    #[test]
    fn budget_cap_applies() {
        assert!(matches!(
            enum_group(GroupKind::Sl3, 7),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn generators_generate() {
        // closure of the generating set reaches the whole group
        for (kind, p) in [(GroupKind::Sl2, 3), (GroupKind::Gl2, 3), (GroupKind::Sl3, 2)] {
            let g = enum_group(kind, p).unwrap();
            let gens = kind.generators(&g.field);
            let mut seen: std::collections::HashSet<FqMat> =
                [FqMat::identity(kind.rank())].into_iter().collect();
            let mut frontier = vec![FqMat::identity(kind.rank())];
            while let Some(x) = frontier.pop() {
                for gen in &gens {
                    let y = x.mul(gen, &g.field);
                    if seen.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(seen.len() as u64, g.order(), "{:?} p = {p}", kind);
        }
    }

    #[test]
    fn centralizer_of_identity_is_everything() {
        let g = enum_group(GroupKind::Sl2, 3).unwrap();
        assert_eq!(
            g.centralizer(&FqMat::identity(2)).len() as u64,
            g.order()
        );
    }

    #[test]
    fn power_index_covers_group() {
        let g = enum_group(GroupKind::Sl2, 5).unwrap();
        let idx = g.power_index(3);
        let total: usize = idx.values().map(|v| v.len()).sum();
        assert_eq!(total as u64, g.order());
    }
}
