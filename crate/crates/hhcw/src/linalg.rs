//! Small exact-rational vectors and matrices.
//!
//! Everything in this crate happens in ambient dimension at most 8, so the
//! representations are plain `Vec`s and the algorithms are textbook
//! Gaussian elimination over `Rational64`.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = Rational64;

/// Shorthand for an integer as a `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Shorthand for the fraction `n/d`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// Formats a rational as `p/q`, with `q = 1` printed as a plain integer.
pub fn rat_str(x: Rat) -> String {
    if x.denom() == &1 {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A vector in the ambient weight space, with exact rational coordinates.
///
/// Roots are represented by the same type; where the distinction matters
/// the surrounding API names it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

/// Alias used when a vector is known to be a root.
pub type Root = Weight;

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Weight { coords: vec![Rat::zero(); dim] }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| rat(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &Weight) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: Rat) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * c).collect())
    }

    /// Renders as `(a, b, ...)` with `p/q` coordinates.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(|c| rat_str(*c)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Sum of a set of vectors, `dim` giving the ambient dimension for the
/// empty case.
pub fn weight_sum<'a, I: IntoIterator<Item = &'a Weight>>(items: I, dim: usize) -> Weight {
    let mut acc = Weight::zero(dim);
    for w in items {
        acc = acc.add(w);
    }
    acc
}

/// A square matrix acting on the ambient space, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqMat {
    pub n: usize,
    pub a: Vec<Rat>,
}

impl SqMat {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![Rat::zero(); n * n];
        for i in 0..n {
            a[i * n + i] = Rat::one();
        }
        SqMat { n, a }
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, rhs: &SqMat) -> SqMat {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = SqMat { n, a: vec![Rat::zero(); n * n] };
        for i in 0..n {
            for k in 0..n {
                let v = self.get(i, k);
                if v.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + v * rhs.get(k, j));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> SqMat {
        let n = self.n;
        let mut out = SqMat { n, a: vec![Rat::zero(); n * n] };
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        debug_assert_eq!(self.n, v.dim());
        let mut out = vec![Rat::zero(); self.n];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for j in 0..self.n {
                acc += self.get(i, j) * v.coords[j];
            }
            *slot = acc;
        }
        Weight::new(out)
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<SqMat> {
        let n = self.n;
        let mut work = self.clone();
        let mut inv = SqMat::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work.get(r, col).is_zero())
                .ok_or_else(|| Error::InternalInconsistency("singular matrix".into()))?;
            if pivot != col {
                for j in 0..n {
                    let (a, b) = (work.get(col, j), work.get(pivot, j));
                    work.set(col, j, b);
                    work.set(pivot, j, a);
                    let (a, b) = (inv.get(col, j), inv.get(pivot, j));
                    inv.set(col, j, b);
                    inv.set(pivot, j, a);
                }
            }
            let p = work.get(col, col);
            for j in 0..n {
                work.set(col, j, work.get(col, j) / p);
                inv.set(col, j, inv.get(col, j) / p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = work.get(r, col);
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let wv = work.get(r, j) - f * work.get(col, j);
                    work.set(r, j, wv);
                    let iv = inv.get(r, j) - f * inv.get(col, j);
                    inv.set(r, j, iv);
                }
            }
        }
        Ok(inv)
    }
}

/// Solves `A x = b` exactly for a (possibly non-square) system given by
/// columns `cols`; returns `None` when inconsistent. When the solution is
/// underdetermined the free variables are set to zero.
pub fn solve_columns(cols: &[Weight], b: &Weight) -> Option<Vec<Rat>> {
    let m = b.dim();
    let k = cols.len();
    let mut rows: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c.coords[i]).collect();
            row.push(b.coords[i]);
            row
        })
        .collect();
    let mut pivot_of_col = vec![None; k];
    let mut rank = 0;
    for col in 0..k {
        let Some(p) = (rank..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pv = rows[rank][col];
        for v in rows[rank].iter_mut() {
            *v /= pv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            let f = row[col];
            if f.is_zero() {
                continue;
            }
            for (dst, src) in row.iter_mut().zip(&pivot_row) {
                *dst -= *src * f;
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    if rows.iter().skip(rank).any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); k];
    for (col, p) in pivot_of_col.iter().enumerate() {
        if let Some(r) = p {
            x[col] = rows[*r][k];
        }
    }
    Some(x)
}

/// True when `x` is a nonnegative rational.
pub fn is_nonneg(x: &Rat) -> bool {
    !x.is_negative()
}
