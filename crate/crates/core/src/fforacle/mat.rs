//! Small matrices over F_p: the elements of SL_2, GL_2, SL_3, GL_3 that the
//! oracle enumerates.

use super::fq::{Field, Field2, Fq2};

/// A `rank x rank` matrix over F_p, entries row-major in `e[i * rank + j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqMat {
    pub rank: u8,
    pub e: [u8; 9],
}

impl FqMat {
    pub fn zero(rank: u8) -> FqMat {
        FqMat { rank, e: [0; 9] }
    }

    pub fn identity(rank: u8) -> FqMat {
        let mut m = FqMat::zero(rank);
        for i in 0..rank {
            m.set(i as usize, i as usize, 1);
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u32 {
        self.e[i * self.rank as usize + j] as u32
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.e[i * self.rank as usize + j] = v as u8;
    }

    pub fn mul(&self, rhs: &FqMat, f: &Field) -> FqMat {
        let r = self.rank as usize;
        let mut out = FqMat::zero(self.rank);
        for i in 0..r {
            for j in 0..r {
                let mut acc = 0u32;
                for k in 0..r {
                    acc = f.add(acc, f.mul(self.at(i, k), rhs.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn pow(&self, mut k: u64, f: &Field) -> FqMat {
        let mut acc = FqMat::identity(self.rank);
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            k >>= 1;
            base = base.mul(&base, f);
        }
        acc
    }

    pub fn det(&self, f: &Field) -> u32 {
        match self.rank {
            2 => f.sub(f.mul(self.at(0, 0), self.at(1, 1)), f.mul(self.at(0, 1), self.at(1, 0))),
            3 => {
                let m = |i: usize, j: usize| self.at(i, j);
                let c0 = f.sub(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1)));
                let c1 = f.sub(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0)));
                let c2 = f.sub(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0)));
                let t = f.sub(f.mul(m(0, 0), c0), f.mul(m(0, 1), c1));
                f.add(t, f.mul(m(0, 2), c2))
            }
            r => panic!("unsupported rank {r}"),
        }
    }

    /// Inverse via the adjugate; the determinant must be nonzero.
    pub fn inv(&self, f: &Field) -> FqMat {
        let det = self.det(f);
        let dinv = f.inv(det);
        let mut out = FqMat::zero(self.rank);
        match self.rank {
            2 => {
                out.set(0, 0, f.mul(self.at(1, 1), dinv));
                out.set(0, 1, f.mul(f.neg(self.at(0, 1)), dinv));
                out.set(1, 0, f.mul(f.neg(self.at(1, 0)), dinv));
                out.set(1, 1, f.mul(self.at(0, 0), dinv));
            }
            3 => {
                let m = |i: usize, j: usize| self.at(i, j);
                for i in 0..3 {
                    for j in 0..3 {
                        let (r0, r1) = match i {
                            0 => (1, 2),
                            1 => (0, 2),
                            _ => (0, 1),
                        };
                        let (c0, c1) = match j {
                            0 => (1, 2),
                            1 => (0, 2),
                            _ => (0, 1),
                        };
                        let minor =
                            f.sub(f.mul(m(r0, c0), m(r1, c1)), f.mul(m(r0, c1), m(r1, c0)));
                        let cof = if (i + j) % 2 == 0 { minor } else { f.neg(minor) };
                        // adjugate transposes the cofactor matrix
                        out.set(j, i, f.mul(cof, dinv));
                    }
                }
            }
            r => panic!("unsupported rank {r}"),
        }
        out
    }

    pub fn transpose(&self) -> FqMat {
        let r = self.rank as usize;
        let mut out = FqMat::zero(self.rank);
        for i in 0..r {
            for j in 0..r {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    pub fn is_scalar(&self) -> bool {
        let r = self.rank as usize;
        let d = self.at(0, 0);
        for i in 0..r {
            for j in 0..r {
                let want = if i == j { d } else { 0 };
                if self.at(i, j) != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn conjugate_by(&self, g: &FqMat, g_inv: &FqMat, f: &Field) -> FqMat {
        g.mul(self, f).mul(g_inv, f)
    }

    /// Apply to a vector over the quadratic extension.
    pub fn apply2(&self, v: &[Fq2], f2: &Field2) -> Vec<Fq2> {
        let r = self.rank as usize;
        (0..r)
            .map(|i| {
                let mut acc = Fq2::base(0);
                for (j, vj) in v.iter().enumerate() {
                    acc = f2.add(acc, f2.mul(Fq2::base(self.at(i, j)), *vj));
                }
                acc
            })
            .collect()
    }

    /// Apply to a vector over the base field.
    pub fn apply(&self, v: &[u32], f: &Field) -> Vec<u32> {
        let r = self.rank as usize;
        (0..r)
            .map(|i| {
                let mut acc = 0;
                for (j, vj) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(self.at(i, j), *vj));
                }
                acc
            })
            .collect()
    }
}

/// Dimension over F_p of the joint commutant algebra
/// `{X : X A = A X for all A in the tuple}`.
///
/// The commutant dimension is Galois-invariant, so it equals the geometric
/// commutant dimension and classifies stabilizer types without leaving F_p.
pub fn commutant_dim(tuple: &[FqMat], f: &Field) -> usize {
    assert!(!tuple.is_empty(), "commutant of an empty tuple");
    let r = tuple[0].rank as usize;
    let vars = r * r;
    // rows of the linear system (XA - AX) = 0, X indexed by (i, j)
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(tuple.len() * vars);
    for a in tuple {
        for i in 0..r {
            for j in 0..r {
                let mut row = vec![0u32; vars];
                // entry (i, j) of XA - AX: sum_k X[i,k] A[k,j] - A[i,k] X[k,j]
                for k in 0..r {
                    row[i * r + k] = f.add(row[i * r + k], a.at(k, j));
                    row[k * r + j] = f.sub(row[k * r + j], a.at(i, k));
                }
                rows.push(row);
            }
        }
    }
    vars - row_rank(&mut rows, f)
}

fn row_rank(rows: &mut [Vec<u32>], f: &Field) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col]);
        for cell in rows[rank][col..ncols].iter_mut() {
            *cell = f.mul(*cell, inv);
        }
        let pivot_row = rows[rank][col..ncols].to_vec();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (cell, pv) in row[col..ncols].iter_mut().zip(&pivot_row) {
                    *cell = f.sub(*cell, f.mul(factor, *pv));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
