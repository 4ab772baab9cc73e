//! Simple root systems of types A–E7 in Bourbaki coordinates.
//!
//! Realizations: `A_{n-1}` lives in `R^n` with roots `e_i - e_j`; the
//! `B_n`/`C_n`/`D_n` families live in `R^n`; `E6` and `E7` live inside
//! `R^8` (the `E6` roots span a 6-dimensional subspace, but all linear
//! algebra is done in the full ambient space). Roots and weights use the
//! standard inner product; pairings against coroots are normalization
//! independent, so nothing downstream depends on the length scale.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::linalg::{frac, rat, Rat, Root, SqMat, Weight};
use crate::{Error, Result};

/// The five supported families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanFamily {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for CartanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanFamily::A => "A",
            CartanFamily::B => "B",
            CartanFamily::C => "C",
            CartanFamily::D => "D",
            CartanFamily::E => "E",
        };
        write!(f, "{s}")
    }
}

/// A Cartan type `X_n` with the rank bounds of the classification:
/// `A_{>=1}`, `B_{>=2}`, `C_{>=2}`, `D_{>=3}`, `E_6`/`E_7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub family: CartanFamily,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: CartanFamily, rank: usize) -> Result<Self> {
        let ok = match family {
            CartanFamily::A => rank >= 1,
            CartanFamily::B | CartanFamily::C => rank >= 2,
            CartanFamily::D => rank >= 3,
            // The artifact never needs E8; the cap is asserted, not
            // silently extended.
            CartanFamily::E => rank == 6 || rank == 7,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family}{rank}")))
        }
    }

    /// Dimension of the ambient realization.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            CartanFamily::A => self.rank + 1,
            CartanFamily::B | CartanFamily::C | CartanFamily::D => self.rank,
            CartanFamily::E => 8,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A simple root system with its positive roots, half-sum `rho`, highest
/// root, simple-root expansions, and fundamental weights.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub simple_roots: Vec<Root>,
    pub positive_roots: Vec<Root>,
    pub rho: Weight,
    pub highest_root: Root,
    all_roots: BTreeSet<Root>,
    expansions: BTreeMap<Root, Vec<Rat>>,
    fundamental: Vec<Weight>,
}

fn simple_roots_for(t: CartanType) -> Vec<Root> {
    let dim = t.ambient_dim();
    let unit = |i: usize, c: i64| {
        let mut v = vec![Rat::zero(); dim];
        v[i] = rat(c);
        v
    };
    let e = |i: usize| {
        let mut v = vec![Rat::zero(); dim];
        v[i] = rat(1);
        Weight::new(v)
    };
    let diff = |i: usize, j: usize| {
        let mut v = vec![Rat::zero(); dim];
        v[i] = rat(1);
        v[j] = rat(-1);
        Weight::new(v)
    };
    match t.family {
        CartanFamily::A => (0..t.rank).map(|i| diff(i, i + 1)).collect(),
        CartanFamily::B => {
            let mut out: Vec<Root> = (0..t.rank - 1).map(|i| diff(i, i + 1)).collect();
            out.push(e(t.rank - 1));
            out
        }
        CartanFamily::C => {
            let mut out: Vec<Root> = (0..t.rank - 1).map(|i| diff(i, i + 1)).collect();
            out.push(Weight::new(unit(t.rank - 1, 2)));
            out
        }
        CartanFamily::D => {
            let mut out: Vec<Root> = (0..t.rank - 1).map(|i| diff(i, i + 1)).collect();
            let mut v = vec![Rat::zero(); dim];
            v[t.rank - 2] = rat(1);
            v[t.rank - 1] = rat(1);
            out.push(Weight::new(v));
            out
        }
        CartanFamily::E => {
            // Bourbaki plates V and VI, shared between E6 and E7.
            let half = frac(1, 2);
            let alpha1 = Weight::new(vec![
                half, -half, -half, -half, -half, -half, -half, half,
            ]);
            let mut out = vec![
                alpha1,
                Weight::new({
                    let mut v = vec![Rat::zero(); 8];
                    v[0] = rat(1);
                    v[1] = rat(1);
                    v
                }),
                diff(1, 0),
                diff(2, 1),
                diff(3, 2),
                diff(4, 3),
            ];
            if t.rank == 7 {
                out.push(diff(5, 4));
            }
            out
        }
    }
}

/// Builds the full root system for `t`: the roots are generated as the
/// closure of the simple roots under simple reflections, and positivity
/// is read off from the simple-root expansion.
pub fn build_root_system(t: CartanType) -> Result<RootSystem> {
    let simple_roots = simple_roots_for(t);
    let dim = t.ambient_dim();
    let reflections: Vec<SqMat> = simple_roots.iter().map(reflection_matrix).collect();

    let mut all: BTreeSet<Root> = simple_roots.iter().cloned().collect();
    for a in &simple_roots {
        all.insert(a.neg());
    }
    let mut frontier: Vec<Root> = all.iter().cloned().collect();
    while let Some(g) = frontier.pop() {
        for s in &reflections {
            let img = s.apply(&g);
            if all.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }

    let mut expansions = BTreeMap::new();
    let mut positive_roots = Vec::new();
    for g in &all {
        let coeffs = crate::linalg::solve_columns(&simple_roots, g)
            .ok_or_else(|| Error::InternalInconsistency("root outside simple span".into()))?;
        let positive = coeffs.iter().all(crate::linalg::is_nonneg);
        if positive {
            positive_roots.push(g.clone());
        }
        expansions.insert(g.clone(), coeffs);
    }
    positive_roots.sort();

    let rho = crate::linalg::weight_sum(&positive_roots, dim).scale(frac(1, 2));
    let highest_root = positive_roots
        .iter()
        .max_by_key(|g| height_of(&expansions[*g]))
        .cloned()
        .ok_or_else(|| Error::InternalInconsistency("empty root system".into()))?;

    let fundamental = fundamental_weights_for(&simple_roots)?;

    Ok(RootSystem {
        cartan_type: t,
        simple_roots,
        positive_roots,
        rho,
        highest_root,
        all_roots: all,
        expansions,
        fundamental,
    })
}

fn height_of(coeffs: &[Rat]) -> Rat {
    coeffs.iter().copied().sum()
}

/// Reflection `s_a` as a matrix: `s_a(v) = v - (v, a^vee) a`.
pub fn reflection_matrix(a: &Root) -> SqMat {
    let n = a.dim();
    let norm = a.dot(a);
    let mut m = SqMat::identity(n);
    for j in 0..n {
        let copair = rat(2) * a.coords[j] / norm;
        for i in 0..n {
            let v = m.get(i, j) - copair * a.coords[i];
            m.set(i, j, v);
        }
    }
    m
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn dim(&self) -> usize {
        self.cartan_type.ambient_dim()
    }

    /// Symmetric bilinear form (the standard inner product of the
    /// realization).
    pub fn pairing(&self, a: &Weight, b: &Weight) -> Result<Rat> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch(a.dim(), b.dim()));
        }
        Ok(a.dot(b))
    }

    /// `(lam, alpha^vee) = 2 (lam, alpha) / (alpha, alpha)`.
    pub fn copairing(&self, lam: &Weight, alpha: &Root) -> Result<Rat> {
        if lam.dim() != alpha.dim() {
            return Err(Error::DimensionMismatch(lam.dim(), alpha.dim()));
        }
        Ok(rat(2) * lam.dot(alpha) / alpha.dot(alpha))
    }

    pub fn is_root(&self, g: &Root) -> bool {
        self.all_roots.contains(g)
    }

    pub fn is_positive_root(&self, g: &Root) -> bool {
        self.expansions
            .get(g)
            .map(|c| c.iter().all(crate::linalg::is_nonneg))
            .unwrap_or(false)
    }

    /// Expansion of a root in the simple basis.
    pub fn expand_in_simples(&self, g: &Root) -> Result<Vec<Rat>> {
        self.expansions.get(g).cloned().ok_or(Error::SeedNotARoot)
    }

    /// 1-based indices of the simple roots appearing in `g`.
    pub fn root_support(&self, g: &Root) -> Result<BTreeSet<usize>> {
        let coeffs = self.expand_in_simples(g)?;
        Ok(coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i + 1)
            .collect())
    }

    /// Sum of the simple-root coefficients of `g` (the usual height).
    pub fn root_height(&self, g: &Root) -> Result<i64> {
        let h = height_of(&self.expand_in_simples(g)?);
        debug_assert_eq!(*h.denom(), 1);
        Ok(*h.numer())
    }

    pub fn simple_root(&self, i: usize) -> Result<&Root> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange(i, self.rank()));
        }
        Ok(&self.simple_roots[i - 1])
    }

    /// Fundamental weights in Bourbaki order; representatives lie in the
    /// span of the simple roots (for type A this is the traceless
    /// representative `omega_i = sum_{k<=i} e_k - (i/n) sum_k e_k`).
    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    /// `(rho, beta^vee) + 1` for the highest root `beta`.
    pub fn dual_coxeter_number(&self) -> i64 {
        let v = self.copairing(&self.rho, &self.highest_root).unwrap();
        debug_assert_eq!(*v.denom(), 1);
        v.numer() + 1
    }

    pub fn is_long_root(&self, g: &Root) -> bool {
        let max = self
            .positive_roots
            .iter()
            .map(|r| r.dot(r))
            .max()
            .unwrap();
        g.dot(g) == max
    }

    /// Weight equality modulo the realization's degenerate direction
    /// (the span of `(1,...,1)` in type A; exact equality elsewhere).
    pub fn weights_equal(&self, a: &Weight, b: &Weight) -> bool {
        self.canonical_weight(a) == self.canonical_weight(b)
    }

    /// Canonical representative for weight comparison.
    pub fn canonical_weight(&self, w: &Weight) -> Weight {
        match self.cartan_type.family {
            CartanFamily::A => {
                let n = rat(w.dim() as i64);
                let mean: Rat = w.coords.iter().copied().sum::<Rat>() / n;
                Weight::new(w.coords.iter().map(|c| c - mean).collect())
            }
            _ => w.clone(),
        }
    }

    /// Coordinates of `w` in the fundamental-weight basis:
    /// component `i` is `(w, alpha_i^vee)`.
    pub fn fundamental_coords(&self, w: &Weight) -> Vec<Rat> {
        self.simple_roots
            .iter()
            .map(|a| self.copairing(w, a).unwrap())
            .collect()
    }

    /// Smallest subset of the root system containing `seeds` and closed
    /// under its own reflections.
    pub fn subsystem_generated(&self, seeds: &[Root]) -> Result<RootSubsystem> {
        for s in seeds {
            if !self.is_root(s) {
                return Err(Error::SeedNotARoot);
            }
        }
        let mut set: BTreeSet<Root> = BTreeSet::new();
        for s in seeds {
            set.insert(s.clone());
            set.insert(s.neg());
        }
        loop {
            let mut added = Vec::new();
            let members: Vec<Root> = set.iter().cloned().collect();
            for g in &members {
                let refl = reflection_matrix(g);
                for d in &members {
                    let img = refl.apply(d);
                    if !set.contains(&img) {
                        added.push(img);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            set.extend(added);
        }
        RootSubsystem::from_closed_set(self, set)
    }
}

fn fundamental_weights_for(simple_roots: &[Root]) -> Result<Vec<Weight>> {
    let rank = simple_roots.len();
    let dim = simple_roots[0].dim();
    let mut cartan = SqMat::identity(rank);
    for (j, aj) in simple_roots.iter().enumerate() {
        for (k, ak) in simple_roots.iter().enumerate() {
            cartan.set(j, k, rat(2) * aj.dot(ak) / ak.dot(ak));
        }
    }
    let inv = cartan.inverse()?;
    let mut out = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut w = Weight::zero(dim);
        for (j, a) in simple_roots.iter().enumerate() {
            w = w.add(&a.scale(inv.get(i, j)));
        }
        out.push(w);
    }
    Ok(out)
}

/// A subsystem of a root system, closed under its own reflections, with
/// an induced simple system (the indecomposable positive elements).
#[derive(Debug, Clone)]
pub struct RootSubsystem {
    pub roots: BTreeSet<Root>,
    pub positives: Vec<Root>,
    pub simples: Vec<Root>,
}

impl RootSubsystem {
    /// Wraps a reflection-closed set of roots.
    pub fn from_closed_set(rs: &RootSystem, roots: BTreeSet<Root>) -> Result<Self> {
        let positives: Vec<Root> = roots
            .iter()
            .filter(|g| rs.is_positive_root(g))
            .cloned()
            .collect();
        let pset: BTreeSet<&Root> = positives.iter().collect();
        let mut simples = Vec::new();
        for g in &positives {
            let decomposable = positives.iter().any(|a| {
                let rest = g.sub(a);
                !rest.is_zero() && pset.contains(&rest)
            });
            if !decomposable {
                simples.push(g.clone());
            }
        }
        Ok(RootSubsystem { roots, positives, simples })
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn contains(&self, g: &Root) -> bool {
        self.roots.contains(g)
    }

    /// Half-sum of the subsystem's positive roots.
    pub fn rho(&self, dim: usize) -> Weight {
        crate::linalg::weight_sum(&self.positives, dim).scale(frac(1, 2))
    }

    /// The unique maximal positive root of a simple subsystem.
    pub fn highest_root(&self, rs: &RootSystem) -> Result<Root> {
        self.positives
            .iter()
            .max_by_key(|g| rs.root_height(g).unwrap_or(0))
            .cloned()
            .ok_or(Error::UnrecognizedType)
    }

    /// Dual Coxeter number computed intrinsically from the subsystem.
    /// Empty subsystems report 0.
    pub fn dual_coxeter_number(&self, rs: &RootSystem) -> Result<i64> {
        if self.positives.is_empty() {
            return Ok(0);
        }
        let dim = self.positives[0].dim();
        let rho = self.rho(dim);
        let beta = self.highest_root(rs)?;
        let v = rs.copairing(&rho, &beta)?;
        debug_assert_eq!(*v.denom(), 1);
        Ok(v.numer() + 1)
    }

    /// Splits into simple components along the orthogonality graph of the
    /// induced simple system.
    pub fn simple_components(&self, rs: &RootSystem) -> Result<Vec<RootSubsystem>> {
        let n = self.simples.len();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = next;
            while let Some(i) = stack.pop() {
                for (j, s) in self.simples.iter().enumerate() {
                    if comp[j] == usize::MAX && !self.simples[i].dot(s).is_zero() {
                        comp[j] = next;
                        stack.push(j);
                    }
                }
            }
            next += 1;
        }
        let mut out = Vec::new();
        for c in 0..next {
            let comp_simples: Vec<&Root> = (0..n)
                .filter(|&i| comp[i] == c)
                .map(|i| &self.simples[i])
                .collect();
            let roots: BTreeSet<Root> = self
                .roots
                .iter()
                .filter(|g| comp_simples.iter().any(|s| !g.dot(s).is_zero()))
                .cloned()
                .collect();
            out.push(RootSubsystem::from_closed_set(rs, roots)?);
        }
        Ok(out)
    }

    /// The simple component containing the given root.
    pub fn component_containing(&self, rs: &RootSystem, g: &Root) -> Result<RootSubsystem> {
        let comps = self.simple_components(rs)?;
        comps
            .into_iter()
            .find(|c| c.contains(g))
            .ok_or(Error::UnrecognizedType)
    }

    /// Recognizes the Cartan type of a connected subsystem.
    ///
    /// Rank-2 two-length systems are labeled by the absolute norms of the
    /// realization (`C2` when the long root has squared length 4, `B2`
    /// otherwise); abstract `A3`/`D3` coincidences resolve to `A3`.
    pub fn classify(&self, _rs: &RootSystem) -> Result<CartanType> {
        let rank = self.simples.len();
        if rank == 0 {
            return Err(Error::UnrecognizedType);
        }
        let norms: BTreeSet<Rat> = self.simples.iter().map(|s| s.dot(s)).collect();
        if norms.len() > 2 {
            return Err(Error::UnrecognizedType);
        }
        // adjacency degrees of the induced simple graph
        let deg: Vec<usize> = (0..rank)
            .map(|i| {
                (0..rank)
                    .filter(|&j| j != i && !self.simples[i].dot(&self.simples[j]).is_zero())
                    .count()
            })
            .collect();
        if deg.iter().any(|&d| d > 3) {
            return Err(Error::UnrecognizedType);
        }
        let trivalent: Vec<usize> = (0..rank).filter(|&i| deg[i] == 3).collect();
        if norms.len() == 2 {
            if trivalent.is_empty() {
                let long = *norms.iter().max().unwrap();
                let longs = self
                    .simples
                    .iter()
                    .filter(|s| s.dot(s) == long)
                    .count();
                let shorts = rank - longs;
                if rank == 2 {
                    let family = if long == rat(4) { CartanFamily::C } else { CartanFamily::B };
                    return CartanType::new(family, 2);
                }
                if longs == 1 {
                    return CartanType::new(CartanFamily::C, rank);
                }
                if shorts == 1 {
                    return CartanType::new(CartanFamily::B, rank);
                }
            }
            return Err(Error::UnrecognizedType);
        }
        match trivalent.len() {
            0 => CartanType::new(CartanFamily::A, rank),
            1 => {
                let center = trivalent[0];
                let mut arms: Vec<usize> = Vec::new();
                for j in 0..rank {
                    if j != center && !self.simples[center].dot(&self.simples[j]).is_zero() {
                        // walk away from the center
                        let mut len = 1;
                        let mut prev = center;
                        let mut cur = j;
                        loop {
                            let next = (0..rank).find(|&k| {
                                k != prev
                                    && k != cur
                                    && !self.simples[cur].dot(&self.simples[k]).is_zero()
                            });
                            match next {
                                Some(k) => {
                                    prev = cur;
                                    cur = k;
                                    len += 1;
                                }
                                None => break,
                            }
                        }
                        arms.push(len);
                    }
                }
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => CartanType::new(CartanFamily::D, rank),
                    [1, 2, 2] => CartanType::new(CartanFamily::E, 6),
                    [1, 2, 3] => CartanType::new(CartanFamily::E, 7),
                    _ => Err(Error::UnrecognizedType),
                }
            }
            _ => Err(Error::UnrecognizedType),
        }
    }
}
