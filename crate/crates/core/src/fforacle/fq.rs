//! Arithmetic in the prime field F_p and its quadratic extension.

use crate::{Error, Result};

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// The prime field F_p. Elements are `u32` values in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub p: u32,
}

impl Field {
    pub fn new(p: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        if p > 251 {
            return Err(Error::InvalidParams(format!(
                "prime {p} exceeds the supported element size"
            )));
        }
        Ok(Field { p })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            e >>= 1;
            a = self.mul(a, a);
        }
        acc
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }

    /// Some quadratic non-residue mod an odd prime.
    pub fn non_residue(&self) -> u32 {
        assert!(self.p != 2);
        let residues: std::collections::HashSet<u32> =
            (1..self.p).map(|x| self.mul(x, x)).collect();
        (2..self.p)
            .find(|x| !residues.contains(x))
            .expect("odd prime field has a non-residue")
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(&self) -> u32 {
        'outer: for g in 2..self.p {
            let mut x = g;
            for _ in 1..self.p - 2 {
                x = self.mul(x, g);
                if x == 1 {
                    continue 'outer;
                }
            }
            return g;
        }
        1 // p = 2 or p = 3 with g = 2 handled above; p = 2 lands here
    }
}

/// An element of `F_{p^2} = F_p[w]`, stored as `a + b w`.
///
/// For odd `p`, `w^2` is a fixed non-residue; for `p = 2`, `w^2 = w + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fq2 {
    pub a: u32,
    pub b: u32,
}

impl Fq2 {
    pub fn base(a: u32) -> Fq2 {
        Fq2 { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

/// The quadratic extension field F_{p^2}.
#[derive(Debug, Clone, Copy)]
pub struct Field2 {
    pub base: Field,
    /// `w^2 = nonres` for odd `p`; ignored when `artin` is set.
    nonres: u32,
    /// `p = 2`: `w^2 = w + 1`.
    artin: bool,
}

impl Field2 {
    pub fn new(base: Field) -> Field2 {
        if base.p == 2 {
            Field2 {
                base,
                nonres: 0,
                artin: true,
            }
        } else {
            Field2 {
                base,
                nonres: base.non_residue(),
                artin: false,
            }
        }
    }

    pub fn add(&self, x: Fq2, y: Fq2) -> Fq2 {
        Fq2 {
            a: self.base.add(x.a, y.a),
            b: self.base.add(x.b, y.b),
        }
    }

    pub fn sub(&self, x: Fq2, y: Fq2) -> Fq2 {
        Fq2 {
            a: self.base.sub(x.a, y.a),
            b: self.base.sub(x.b, y.b),
        }
    }

    pub fn mul(&self, x: Fq2, y: Fq2) -> Fq2 {
        let f = &self.base;
        let cross = f.add(f.mul(x.a, y.b), f.mul(x.b, y.a));
        let bb = f.mul(x.b, y.b);
        if self.artin {
            // (a1 + b1 w)(a2 + b2 w) with w^2 = w + 1
            Fq2 {
                a: f.add(f.mul(x.a, y.a), bb),
                b: f.add(cross, bb),
            }
        } else {
            Fq2 {
                a: f.add(f.mul(x.a, y.a), f.mul(bb, self.nonres)),
                b: cross,
            }
        }
    }

    /// All field elements, base-field ones first.
    pub fn elements(&self) -> Vec<Fq2> {
        let p = self.base.p;
        let mut out = Vec::with_capacity((p * p) as usize);
        for b in 0..p {
            for a in 0..p {
                out.push(Fq2 { a, b });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(13));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
    }

    #[test]
    fn base_field_ops() {
        let f = Field::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.pow(3, 6), 1);
        assert!(Field::new(6).is_err());
    }

    #[test]
    fn quadratic_extension_is_a_field() {
        for p in [2u32, 3, 5, 13] {
            let f2 = Field2::new(Field::new(p).unwrap());
            // multiplicative order of the nonzero elements divides p^2 - 1
            for x in f2.elements() {
                if x.is_zero() {
                    continue;
                }
                let mut acc = Fq2::base(1);
                for _ in 0..p * p - 1 {
                    acc = f2.mul(acc, x);
                }
                assert_eq!(acc, Fq2::base(1), "p = {p}, x = {x:?}");
            }
        }
    }

    #[test]
    fn nonresidue_has_no_square_root() {
        let f = Field::new(13).unwrap();
        let nr = f.non_residue();
        assert!((1..13).all(|x| f.mul(x, x) != nr));
    }
}
