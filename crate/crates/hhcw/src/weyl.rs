//! Weyl group elements as exact orthogonal matrices on the ambient space.
//!
//! Elements are compared by their matrices, which is canonical in every
//! realization used here; words are derived artifacts (the group order of
//! E7 is close to three million, so nothing tabulates the group).

use std::collections::BTreeSet;
use std::fmt;

use crate::linalg::{Root, SqMat, Weight};
use crate::rootsys::{reflection_matrix, RootSystem};
use crate::{Error, Result};

/// A Weyl group element, stored as its action on the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub(crate) mat: SqMat,
}

/// A word in the simple reflections, as 1-based Bourbaki indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<usize>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Word {
    /// Parses `"3,2,4"`; the empty string is the empty word.
    pub fn parse(s: &str) -> Result<Word> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Word(Vec::new()));
        }
        let mut letters = Vec::new();
        for part in t.split(',') {
            let i: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad word letter `{part}`")))?;
            letters.push(i);
        }
        Ok(Word(letters))
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement { mat: SqMat::identity(rs.dim()) }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<Self> {
        let a = rs.simple_root(i)?;
        Ok(WeylElement { mat: reflection_matrix(a) })
    }

    /// Reflection in an arbitrary root.
    pub fn reflection(rs: &RootSystem, g: &Root) -> Result<Self> {
        if !rs.is_root(g) {
            return Err(Error::SeedNotARoot);
        }
        Ok(WeylElement { mat: reflection_matrix(g) })
    }

    /// Group product `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement { mat: self.mat.mul(&other.mat) }
    }

    /// Inverse; the matrices are orthogonal, so this is the transpose.
    pub fn inverse(&self) -> WeylElement {
        WeylElement { mat: self.mat.transpose() }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        self.mat.apply(w)
    }

    pub fn is_identity(&self) -> bool {
        self.mat == SqMat::identity(self.mat.n)
    }

    /// Evaluates a word left to right.
    pub fn from_word(rs: &RootSystem, word: &Word) -> Result<Self> {
        let mut acc = WeylElement::identity(rs);
        for &i in &word.0 {
            acc = acc.compose(&WeylElement::simple_reflection(rs, i)?);
        }
        Ok(acc)
    }
}

/// Inversion set `Phi_w = Phi^+ intersect w Phi^-`, i.e. the positive
/// roots sent into the negatives by `w^{-1}`.
pub fn inversion_set(rs: &RootSystem, w: &WeylElement) -> Vec<Root> {
    let winv = w.inverse();
    rs.positive_roots
        .iter()
        .filter(|g| !rs.is_positive_root(&winv.apply(g)))
        .cloned()
        .collect()
}

pub fn length(rs: &RootSystem, w: &WeylElement) -> usize {
    inversion_set(rs, w).len()
}

/// Indices `i` with `w(alpha_i)` negative, i.e. `l(w s_i) = l(w) - 1`.
pub fn descents_right(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    (1..=rs.rank())
        .filter(|&i| !rs.is_positive_root(&w.apply(rs.simple_root(i).unwrap())))
        .collect()
}

/// Indices `i` with `l(s_i w) = l(w) - 1`.
pub fn descents_left(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let winv = w.inverse();
    (1..=rs.rank())
        .filter(|&i| !rs.is_positive_root(&winv.apply(rs.simple_root(i).unwrap())))
        .collect()
}

/// Deterministic reduced word: repeatedly peel the smallest right-descent
/// index.
pub fn reduced_word(rs: &RootSystem, w: &WeylElement) -> Word {
    peel_word(rs, w, PeelOrder::Min)
}

/// Which right descent to peel when several are available; used to sample
/// distinct reduced words of the same element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeelOrder {
    Min,
    Max,
    /// Middle element of the descent list.
    Mid,
}

pub fn peel_word(rs: &RootSystem, w: &WeylElement, order: PeelOrder) -> Word {
    let mut cur = w.clone();
    let mut letters = Vec::new();
    loop {
        let descents = descents_right(rs, &cur);
        let Some(&i) = (match order {
            PeelOrder::Min => descents.first(),
            PeelOrder::Max => descents.last(),
            PeelOrder::Mid => descents.get(descents.len() / 2),
        }) else {
            break;
        };
        cur = cur.compose(&WeylElement::simple_reflection(rs, i).unwrap());
        letters.push(i);
    }
    debug_assert!(cur.is_identity());
    letters.reverse();
    Word(letters)
}

/// Letters occurring in a reduced word of `w`; this set is independent of
/// the chosen reduced word.
pub fn support(rs: &RootSystem, w: &WeylElement) -> BTreeSet<usize> {
    reduced_word(rs, w).0.into_iter().collect()
}

/// The longest element `w_0`.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    longest_parabolic(rs, &(1..=rs.rank()).collect::<BTreeSet<_>>()).unwrap()
}

/// Tests membership in the minimal-length coset transversal of the
/// pair's compact Weyl group: the inversion set must consist of
/// noncompact roots, equivalently `w^{-1}` keeps the compact positives
/// positive.
pub fn is_minimal_coset_rep(pair: &crate::hermitian::HermitianPair, w: &WeylElement) -> bool {
    pair.is_coset_rep(w)
}

/// The longest element of the standard parabolic subgroup generated by
/// the simple reflections in `indices`.
pub fn longest_parabolic(rs: &RootSystem, indices: &BTreeSet<usize>) -> Result<WeylElement> {
    for &i in indices {
        if i == 0 || i > rs.rank() {
            return Err(Error::IndexOutOfRange(i, rs.rank()));
        }
    }
    let mut w = WeylElement::identity(rs);
    loop {
        let next = indices
            .iter()
            .find(|&&i| rs.is_positive_root(&w.apply(rs.simple_root(i).unwrap())));
        match next {
            Some(&i) => w = w.compose(&WeylElement::simple_reflection(rs, i)?),
            None => return Ok(w),
        }
    }
}
