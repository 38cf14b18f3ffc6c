//! Invariant-subspace search and semisimplicity detection for small
//! matrix tuples.
//!
//! A tuple is semisimple exactly when its conjugation orbit is closed, so
//! this is what separates honest GIT points from orbits that merely map to
//! them. Rank 2 works over the quadratic extension; rank 3 reduces to
//! rational invariant lines and planes (the socle of a non-semisimple
//! tuple is Galois-stable, hence F_p-rational) plus the rank-2 test on an
//! invariant plane.

use super::fq::{Field, Field2, Fq2};
use super::mat::FqMat;

fn fq2_inv(f2: &Field2, x: Fq2) -> Fq2 {
    assert!(!x.is_zero());
    let f = &f2.base;
    let conj = if f.p == 2 {
        // Frobenius: w -> w + 1
        Fq2 {
            a: f.add(x.a, x.b),
            b: x.b,
        }
    } else {
        Fq2 {
            a: x.a,
            b: f.neg(x.b),
        }
    };
    let norm = f2.mul(x, conj);
    debug_assert_eq!(norm.b, 0);
    let ninv = f.inv(norm.a);
    f2.mul(conj, Fq2 { a: ninv, b: 0 })
}

fn parallel2(f2: &Field2, v: &[Fq2], w: &[Fq2]) -> bool {
    // all 2x2 minors of [v; w] vanish
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let m = f2.sub(f2.mul(v[i], w[j]), f2.mul(v[j], w[i]));
            if !m.is_zero() {
                return false;
            }
        }
    }
    true
}

fn normalize_line(f2: &Field2, v: &[Fq2]) -> Vec<Fq2> {
    let lead = v.iter().find(|x| !x.is_zero()).expect("zero vector");
    let inv = fq2_inv(f2, *lead);
    v.iter().map(|x| f2.mul(*x, inv)).collect()
}

/// Eigenlines of a non-scalar 2x2 matrix over F_{p^2}, as normalized
/// vectors. There are one or two.
pub fn eigen_lines_2(m: &FqMat, f2: &Field2) -> Vec<Vec<Fq2>> {
    assert_eq!(m.rank, 2);
    assert!(!m.is_scalar());
    let f = &f2.base;
    let tr = Fq2::base(f.add(m.at(0, 0), m.at(1, 1)));
    let det = Fq2::base(m.det(f));
    let mut lines: Vec<Vec<Fq2>> = Vec::new();
    for lam in f2.elements() {
        // char(lam) = lam^2 - tr lam + det
        let val = f2.add(f2.sub(f2.mul(lam, lam), f2.mul(tr, lam)), det);
        if !val.is_zero() {
            continue;
        }
        // kernel of (M - lam): from a nonzero row (u, w), take (w, -u)
        let rows = [
            [f2.sub(Fq2::base(m.at(0, 0)), lam), Fq2::base(m.at(0, 1))],
            [Fq2::base(m.at(1, 0)), f2.sub(Fq2::base(m.at(1, 1)), lam)],
        ];
        let row = rows
            .iter()
            .find(|r| !r[0].is_zero() || !r[1].is_zero())
            .expect("M - lam is nonzero for non-scalar M");
        let v = normalize_line(f2, &[row[1], f2.sub(Fq2::base(0), row[0])]);
        if !lines.contains(&v) {
            lines.push(v);
        }
    }
    lines
}

fn line_invariant2(m: &FqMat, v: &[Fq2], f2: &Field2) -> bool {
    let w = m.apply2(v, f2);
    parallel2(f2, v, &w)
}

/// Common eigenlines of a rank-2 tuple over F_{p^2}. `None` means every
/// line is invariant (an all-scalar tuple).
pub fn common_eigenlines_rank2(tuple: &[FqMat], f2: &Field2) -> Option<Vec<Vec<Fq2>>> {
    let pivot = tuple.iter().find(|m| !m.is_scalar())?;
    let lines = eigen_lines_2(pivot, f2)
        .into_iter()
        .filter(|v| tuple.iter().all(|m| line_invariant2(m, v, f2)))
        .collect();
    Some(lines)
}

/// A pair is irreducible iff it has no common eigenline over the algebraic
/// closure; for rank 2 the quadratic extension suffices.
pub fn is_irreducible_pair_rank2(a: &FqMat, b: &FqMat, f2: &Field2) -> bool {
    match common_eigenlines_rank2(&[*a, *b], f2) {
        None => false,
        Some(lines) => lines.is_empty(),
    }
}

fn semisimple_rank2(tuple: &[FqMat], f2: &Field2) -> bool {
    match common_eigenlines_rank2(tuple, f2) {
        None => true,
        // irreducible, or a split direct sum of two common lines
        Some(lines) => lines.len() != 1,
    }
}

/// Representatives of the projective space P^{rank-1}(F_p): first nonzero
/// coordinate normalized to 1.
fn projective_points(rank: usize, f: &Field) -> Vec<Vec<u32>> {
    let p = f.p;
    let mut out = Vec::new();
    match rank {
        2 => {
            for t in 0..p {
                out.push(vec![1, t]);
            }
            out.push(vec![0, 1]);
        }
        3 => {
            for y in 0..p {
                for z in 0..p {
                    out.push(vec![1, y, z]);
                }
            }
            for z in 0..p {
                out.push(vec![0, 1, z]);
            }
            out.push(vec![0, 0, 1]);
        }
        r => panic!("unsupported rank {r}"),
    }
    out
}

fn parallel_base(f: &Field, v: &[u32], w: &[u32]) -> bool {
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if f.sub(f.mul(v[i], w[j]), f.mul(v[j], w[i])) != 0 {
                return false;
            }
        }
    }
    true
}

/// F_p-rational common invariant lines of a tuple, as projective points.
pub fn invariant_lines(tuple: &[FqMat], f: &Field) -> Vec<Vec<u32>> {
    let rank = tuple[0].rank as usize;
    projective_points(rank, f)
        .into_iter()
        .filter(|v| tuple.iter().all(|m| parallel_base(f, v, &m.apply(v, f))))
        .collect()
}

/// F_p-rational common invariant hyperplanes, as normal covectors
/// (invariant lines of the transposed tuple).
pub fn invariant_planes(tuple: &[FqMat], f: &Field) -> Vec<Vec<u32>> {
    let transposed: Vec<FqMat> = tuple.iter().map(|m| m.transpose()).collect();
    invariant_lines(&transposed, f)
}

fn dot(f: &Field, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (x, y)| f.add(acc, f.mul(*x, *y)))
}

/// Restrict a rank-3 tuple to the invariant plane with normal `n`:
/// with `k` the first coordinate where `n` is nonzero (normalized to 1),
/// the plane has basis `b_j = e_j - n_j e_k` for the other two `j`, and a
/// plane vector's coordinates are simply its `j`-entries.
fn restrict_to_plane(tuple: &[FqMat], normal: &[u32], f: &Field) -> Vec<FqMat> {
    let k = normal.iter().position(|&x| x != 0).expect("zero normal");
    debug_assert_eq!(normal[k], 1);
    let js: Vec<usize> = (0..3).filter(|&j| j != k).collect();
    tuple
        .iter()
        .map(|m| {
            let mut out = FqMat::zero(2);
            for (col, &j) in js.iter().enumerate() {
                let mut basis = vec![0u32; 3];
                basis[j] = 1;
                basis[k] = f.neg(normal[j]);
                let image = m.apply(&basis, f);
                debug_assert_eq!(dot(f, normal, &image), 0, "plane not invariant");
                for (row, &i) in js.iter().enumerate() {
                    out.set(row, col, image[i]);
                }
            }
            out
        })
        .collect()
}

fn semisimple_rank3(tuple: &[FqMat], f: &Field, f2: &Field2) -> bool {
    let lines = invariant_lines(tuple, f);
    let planes = invariant_planes(tuple, f);
    if lines.is_empty() && planes.is_empty() {
        // any remaining invariant subspaces come in full Galois orbits of
        // characters, which are semisimple configurations
        return true;
    }
    for plane in &planes {
        for line in &lines {
            if dot(f, plane, line) == 0 {
                continue; // line lies inside the plane
            }
            if semisimple_rank2(&restrict_to_plane(tuple, plane, f), f2) {
                return true;
            }
        }
    }
    false
}

/// Whether the conjugation orbit of the tuple is closed, i.e. the tuple is
/// semisimple as a representation.
pub fn tuple_semisimple(tuple: &[FqMat], f: &Field) -> bool {
    assert!(!tuple.is_empty());
    let f2 = Field2::new(*f);
    match tuple[0].rank {
        2 => semisimple_rank2(tuple, &f2),
        3 => semisimple_rank3(tuple, f, &f2),
        r => panic!("unsupported rank {r}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    fn m2(entries: [u32; 4], _p: u32) -> FqMat {
        let mut m = FqMat::zero(2);
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, entries[i * 2 + j]);
            }
        }
        m
    }

    fn m3(entries: [u32; 9]) -> FqMat {
        let mut m = FqMat::zero(3);
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, entries[i * 3 + j]);
            }
        }
        m
    }

    #[test]
    fn irreducibility_rank2() {
        let field = f(5);
        let f2 = Field2::new(field);
        // split diagonal + nonsplit rotation: no common line
        let a = m2([2, 0, 0, 3], 5);
        let b = m2([0, 1, 4, 1], 5); // char x^2 - x + 1, nonsplit mod 5
        assert!(is_irreducible_pair_rank2(&a, &b, &f2));
        // two upper triangulars share the first coordinate line
        let u = m2([1, 1, 0, 2], 5);
        let v = m2([3, 4, 0, 1], 5);
        assert!(!is_irreducible_pair_rank2(&u, &v, &f2));
        // scalar member makes the pair reducible
        let s = m2([2, 0, 0, 2], 5);
        assert!(!is_irreducible_pair_rank2(&s, &a, &f2));
    }

    #[test]
    fn eigenlines_nonsplit_live_in_extension() {
        let field = f(5);
        let f2 = Field2::new(field);
        let b = m2([0, 1, 4, 1], 5);
        let lines = eigen_lines_2(&b, &f2);
        assert_eq!(lines.len(), 2);
        assert!(lines.iter().all(|v| v.iter().any(|x| x.b != 0)));
    }

    #[test]
    fn semisimplicity_rank2() {
        let field = f(5);
        // diagonal pair: split, semisimple
        assert!(tuple_semisimple(&[m2([2, 0, 0, 3], 5), m2([1, 0, 0, 4], 5)], &field));
        // Jordan block: one line, not semisimple
        assert!(!tuple_semisimple(&[m2([2, 1, 0, 2], 5)], &field));
        // diag + unipotent sharing one line only
        assert!(!tuple_semisimple(&[m2([1, 0, 0, 2], 5), m2([1, 1, 0, 1], 5)], &field));
        // scalars
        assert!(tuple_semisimple(&[m2([3, 0, 0, 3], 5)], &field));
        // nonsplit semisimple single matrix
        assert!(tuple_semisimple(&[m2([0, 1, 4, 1], 5)], &field));
    }

    #[test]
    fn semisimplicity_rank3() {
        let field = f(3);
        // regular diagonal: semisimple
        assert!(tuple_semisimple(&[m3([1, 0, 0, 0, 2, 0, 0, 0, 1])], &field));
        // full Jordan block: not
        assert!(!tuple_semisimple(&[m3([1, 1, 0, 0, 1, 1, 0, 0, 1])], &field));
        // 2-block Jordan plus distinct line: not
        assert!(!tuple_semisimple(&[m3([1, 1, 0, 0, 1, 0, 0, 0, 2])], &field));
        // 2-block Jordan with the same character on the line: not
        assert!(!tuple_semisimple(&[m3([1, 1, 0, 0, 1, 0, 0, 0, 1])], &field));
        // block diagonal with irreducible 2x2 block (x^2 + 1 mod 3): yes
        assert!(tuple_semisimple(&[m3([0, 1, 0, 2, 0, 0, 0, 0, 1])], &field));
        // irreducible cubic companion matrix (x^3 - x - 1 irred mod 3): yes
        assert!(tuple_semisimple(&[m3([0, 0, 1, 1, 0, 1, 0, 1, 0])], &field));
        // pair with an irreducible invariant plane and a genuinely
        // non-split unipotent mixing from the quotient line: not
        let a = m3([0, 1, 0, 2, 0, 0, 0, 0, 1]);
        let b = m3([1, 0, 1, 0, 1, 0, 0, 0, 1]);
        assert!(!tuple_semisimple(&[a, b], &field));
        // the same pair without the mixing splits
        let b_split = m3([1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert!(tuple_semisimple(&[a, b_split], &field));
    }

    #[test]
    fn invariant_subspaces_count() {
        let field = f(3);
        // scalar: every line and plane invariant
        let lines = invariant_lines(&[FqMat::identity(3)], &field);
        assert_eq!(lines.len(), 13); // |P^2(F_3)|
        let planes = invariant_planes(&[FqMat::identity(3)], &field);
        assert_eq!(planes.len(), 13);
        // regular diagonal: coordinate lines and planes only
        let d = m3([1, 0, 0, 0, 2, 0, 0, 0, 1]);
        // eigenvalues 1, 2, 1: the (e1, e3)-eigenspace contributes a P^1
        assert_eq!(invariant_lines(&[d], &field).len(), 4 + 1);
    }
}
