use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::category::{Biproduct, CompCategory, HomSpace, Preadditive, Raw};

/// Finitely generated free `Z/n`-modules; objects are ranks, a morphism
/// `a → b` is a `b × a` matrix stored row-major. The translation is the
/// identity functor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeModules {
    pub n: u64,
}

impl FreeModules {
    pub fn new(n: u64) -> Self {
        assert!(n >= 2, "modulus must be at least 2");
        FreeModules { n }
    }

    pub fn reduce(&self, m: &[BigInt]) -> Raw {
        let n = BigInt::from(self.n);
        m.iter().map(|x| x.mod_floor(&n)).collect()
    }

    pub fn matrix(&self, rows: &[&[i64]]) -> Raw {
        let v: Raw = rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect();
        self.reduce(&v)
    }
}

impl Preadditive for FreeModules {
    type Obj = usize;

    fn hom(&self, a: &usize, b: &usize) -> HomSpace {
        HomSpace::cyclic_power(self.n, a * b)
    }

    fn compose(&self, a: &usize, b: &usize, c: &usize, g: &[BigInt], f: &[BigInt]) -> Raw {
        let (a, b, c) = (*a, *b, *c);
        let mut out = vec![BigInt::zero(); c * a];
        for i in 0..c {
            for k in 0..a {
                let mut acc = BigInt::zero();
                for j in 0..b {
                    acc += &g[i * b + j] * &f[j * a + k];
                }
                out[i * a + k] = acc;
            }
        }
        self.reduce(&out)
    }

    fn identity(&self, a: &usize) -> Raw {
        let mut out = vec![BigInt::zero(); a * a];
        for i in 0..*a {
            out[i * a + i] = BigInt::one();
        }
        out
    }

    fn describe_obj(&self, a: &usize) -> String {
        match a {
            0 => String::from("0"),
            1 => format!("Z/{}", self.n),
            r => format!("(Z/{})^{r}", self.n),
        }
    }
}

fn block(rows: usize, cols: usize, row_off: usize, col_off: usize) -> Raw {
    let mut out = vec![BigInt::zero(); rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            if row_off + i == col_off + j {
                out[i * cols + j] = BigInt::one();
            }
        }
    }
    out
}

impl CompCategory for FreeModules {
    fn zero_object(&self) -> usize {
        0
    }

    fn direct_sum(&self, a: &usize, b: &usize) -> Biproduct<usize> {
        let s = a + b;
        Biproduct {
            sum: s,
            i1: block(s, *a, 0, 0),
            i2: block(s, *b, 0, *a),
            r1: block(*a, s, 0, 0),
            r2: block(*b, s, *a, 0),
        }
    }

    fn window(&self, rank_bound: usize) -> Vec<usize> {
        (0..=rank_bound).collect()
    }

    fn translate_obj(&self, a: &usize) -> Option<usize> {
        Some(*a)
    }

    fn translate_mor(&self, _a: &usize, _b: &usize, f: &[BigInt]) -> Option<Raw> {
        Some(self.reduce(f))
    }
}
