//! Smoothness and rational smoothness of the Schubert varieties attached
//! to coset representatives.
//!
//! Everything is computed on the quotient side: the interval below a
//! representative is the lattice of subideals of its inversion set, so
//! the Poincaré polynomial is the rank generating function of that
//! lattice and rational smoothness is its palindromicity. Smoothness is
//! the same saturated-subdiagram predicate that decides unitarity, here
//! exposed under its geometric name. Type A additionally gets the
//! classical 3412/4231 pattern test, and the two non-simply-laced
//! families get their simply laced cover.

use std::fmt;

use crate::hermitian::{HermitianPair, PIdeal, PairFamily};
use crate::linalg::{Rat, Root};
use crate::rootsys::CartanFamily;
use crate::weyl::WeylElement;
use crate::{Error, Result};

/// Rank generating function of the interval below a representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePolynomial {
    /// Coefficients indexed by degree.
    pub coefficients: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coefficients.len();
        (0..n / 2).all(|d| self.coefficients[d] == self.coefficients[n - 1 - d])
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Poincaré polynomial of the Schubert variety of `x`: coefficient `d`
/// counts the subideals of the inversion set with `d` elements.
pub fn poincare_polynomial(pair: &HermitianPair, x: &WeylElement) -> Result<PoincarePolynomial> {
    let ideal = pair.element_to_ideal(x)?;
    poincare_of_ideal(pair, &ideal)
}

pub fn poincare_of_ideal(pair: &HermitianPair, ideal: &PIdeal) -> Result<PoincarePolynomial> {
    let mut coefficients = vec![0u64; ideal.len() + 1];
    for sub in pair.enumerate_subideals(ideal)? {
        coefficients[sub.len()] += 1;
    }
    Ok(PoincarePolynomial { coefficients })
}

/// Rational smoothness: palindromicity of the Poincaré polynomial.
pub fn is_rationally_smooth(pair: &HermitianPair, x: &WeylElement) -> Result<bool> {
    Ok(poincare_polynomial(pair, x)?.is_palindromic())
}

/// Smoothness of the Schubert variety of `x` (equivalently of the full
/// flag variety's Schubert variety of `w_c x`). This is the same
/// saturated-subdiagram predicate that decides unitarity, exposed under
/// its geometric name.
pub fn is_smooth(pair: &HermitianPair, x: &WeylElement) -> Result<bool> {
    crate::unitarity::is_unitary(pair, x)
}

/// A permutation in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    /// `images[i]` is the image of `i+1`.
    pub images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse("not a permutation".into()));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// True when no four positions form the given length-4 pattern.
    pub fn avoids(&self, pattern: [usize; 4]) -> bool {
        let n = self.images.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let vals = [
                            self.images[a],
                            self.images[b],
                            self.images[c],
                            self.images[d],
                        ];
                        let mut order = [0usize; 4];
                        for (k, v) in vals.iter().enumerate() {
                            order[k] = 1 + vals.iter().filter(|u| *u < v).count();
                        }
                        if order == pattern {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// One-line notation of a type A Weyl element acting on coordinates.
pub fn permutation_of(pair: &HermitianPair, w: &WeylElement) -> Result<Permutation> {
    if pair.system.cartan_type.family != CartanFamily::A {
        return Err(Error::WrongType);
    }
    let n = pair.system.dim();
    let mut images = vec![0usize; n];
    for (i, slot) in images.iter_mut().enumerate() {
        let mut e = crate::linalg::Weight::zero(n);
        e.coords[i] = Rat::from_integer(1);
        let img = w.apply(&e);
        let j = (0..n)
            .find(|&j| img.coords[j] == Rat::from_integer(1))
            .ok_or(Error::WrongType)?;
        *slot = j + 1;
    }
    Permutation::new(images)
}

/// The smoothness criterion of the type A full flag variety.
pub fn avoids_3412_4231(perm: &Permutation) -> bool {
    perm.avoids([3, 4, 1, 2]) && perm.avoids([4, 2, 3, 1])
}

/// The simply laced cover of the non-simply-laced pairs: the odd
/// orthogonal pair of rank `n` is covered by `su(1,2n-1)` and the
/// symplectic pair of rank `n` by `so*(2n+2)`; the noncompact posets are
/// isomorphic.
pub fn simply_laced_cover(pair: &HermitianPair) -> Result<HermitianPair> {
    match pair.family {
        PairFamily::SoOdd { n } => HermitianPair::build(PairFamily::SuPQ { p: 1, q: 2 * n - 1 }),
        PairFamily::SpR { n } => HermitianPair::build(PairFamily::SoStar { n: n + 1 }),
        _ => Err(Error::NotCovered),
    }
}

/// The unique isomorphism between the noncompact poset of a covered pair
/// and that of its simply laced cover, as `(root, image)` pairs.
pub fn cover_poset_isomorphism(pair: &HermitianPair) -> Result<Vec<(Root, Root)>> {
    let cover = simply_laced_cover(pair)?;
    poset_isomorphism(pair, &cover)
}

/// Matches two graded noncompact posets level by level, backtracking over
/// the (at most two) choices per level.
fn poset_isomorphism(a: &HermitianPair, b: &HermitianPair) -> Result<Vec<(Root, Root)>> {
    let la = levels(a)?;
    let lb = levels(b)?;
    if la.len() != lb.len() || la.iter().zip(&lb).any(|(x, y)| x.len() != y.len()) {
        return Err(Error::InternalInconsistency(
            "posets are not isomorphic levelwise".into(),
        ));
    }
    let mut map: Vec<Option<usize>> = vec![None; a.pplus.len()];
    if !match_level(0, &la, &lb, a, b, &mut map) {
        return Err(Error::InternalInconsistency("poset matching failed".into()));
    }
    Ok(map
        .iter()
        .enumerate()
        .map(|(i, j)| (a.pplus[i].clone(), b.pplus[j.unwrap()].clone()))
        .collect())
}

fn levels(p: &HermitianPair) -> Result<Vec<Vec<usize>>> {
    let hmin = p
        .pplus
        .iter()
        .map(|g| p.system.root_height(g).unwrap())
        .min()
        .unwrap();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, g) in p.pplus.iter().enumerate() {
        let h = (p.system.root_height(g)? - hmin) as usize;
        if out.len() <= h {
            out.resize(h + 1, Vec::new());
        }
        out[h].push(i);
    }
    Ok(out)
}

fn match_level(
    level: usize,
    la: &[Vec<usize>],
    lb: &[Vec<usize>],
    a: &HermitianPair,
    b: &HermitianPair,
    map: &mut Vec<Option<usize>>,
) -> bool {
    if level == la.len() {
        return true;
    }
    let ea = &la[level];
    let eb = &lb[level];
    let mut perm: Vec<usize> = (0..ea.len()).collect();
    loop {
        let ok = ea.iter().enumerate().all(|(k, &i)| {
            let j = eb[perm[k]];
            let mut covers_a: Vec<usize> = a
                .lower_cover_indices(i)
                .iter()
                .map(|&l| map[l].unwrap())
                .collect();
            let mut covers_b = b.lower_cover_indices(j).to_vec();
            covers_a.sort_unstable();
            covers_b.sort_unstable();
            covers_a == covers_b
        });
        if ok {
            for (k, &i) in ea.iter().enumerate() {
                map[i] = Some(eb[perm[k]]);
            }
            if match_level(level + 1, la, lb, a, b, map) {
                return true;
            }
            for &i in ea {
                map[i] = None;
            }
        }
        if !next_perm(&mut perm) {
            return false;
        }
    }
}

fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
