//! The Hermitian-pair catalog and the combinatorics of the poset of
//! positive noncompact roots.
//!
//! For a pair `(g, k)` the positive roots split as the compact positives
//! and the noncompact positives. The latter form a planar poset with
//! unique minimum (the noncompact simple root) and unique maximum (the
//! highest root); its lower order ideals biject with the minimal length
//! representatives of the right cosets of the compact Weyl group, an
//! ideal being exactly the inversion set of its representative. Each
//! ideal is drawn as a generalized Young diagram: the Hasse diagram
//! rotated so the minimum becomes the upper-left box, boxes filled with
//! the labels `f(gamma)`, and reading the boxes row by row spells a
//! canonical reduced word.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::linalg::{frac, rat, rat_str, weight_sum, Rat, Root, Weight};
use crate::rootsys::{build_root_system, CartanFamily, CartanType, RootSystem};
use crate::weyl::{self, WeylElement, Word};
use crate::{Error, Result};

/// The seven families of irreducible Hermitian symmetric pairs of
/// noncompact type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairFamily {
    /// `su(p,q)`: type `A_{p+q-1}`, noncompact node `p`.
    SuPQ { p: usize, q: usize },
    /// `so(2,2n-1)`: type `B_n`, noncompact node 1.
    SoOdd { n: usize },
    /// `sp(n,R)`: type `C_n`, noncompact node `n`.
    SpR { n: usize },
    /// `so(2,2n-2)`: type `D_n`, noncompact node 1.
    SoEven { n: usize },
    /// `so*(2n)`: type `D_n`, noncompact node `n`.
    SoStar { n: usize },
    /// `e6(-14)`: type `E6`, noncompact node 1.
    E6,
    /// `e7(-25)`: type `E7`, noncompact node 7.
    E7,
}

impl PairFamily {
    pub fn cartan_type(&self) -> Result<CartanType> {
        match *self {
            PairFamily::SuPQ { p, q } => CartanType::new(CartanFamily::A, p + q - 1),
            PairFamily::SoOdd { n } => CartanType::new(CartanFamily::B, n),
            PairFamily::SpR { n } => CartanType::new(CartanFamily::C, n),
            PairFamily::SoEven { n } | PairFamily::SoStar { n } => {
                CartanType::new(CartanFamily::D, n)
            }
            PairFamily::E6 => CartanType::new(CartanFamily::E, 6),
            PairFamily::E7 => CartanType::new(CartanFamily::E, 7),
        }
    }

    /// 1-based index of the noncompact simple root.
    pub fn noncompact_node(&self) -> usize {
        match *self {
            PairFamily::SuPQ { p, .. } => p,
            PairFamily::SoOdd { .. } | PairFamily::SoEven { .. } | PairFamily::E6 => 1,
            PairFamily::SpR { n } | PairFamily::SoStar { n } => n,
            PairFamily::E7 => 7,
        }
    }

    /// The constants `(r, c, hvee)`: split rank, reduction-point spacing,
    /// dual Coxeter number.
    pub fn constants(&self) -> (usize, Rat, i64) {
        match *self {
            PairFamily::SuPQ { p, q } => (p.min(q), rat(1), (p + q) as i64),
            PairFamily::SoOdd { n } => (2, rat(n as i64) - frac(3, 2), 2 * n as i64 - 1),
            PairFamily::SpR { n } => (n, frac(1, 2), n as i64 + 1),
            PairFamily::SoEven { n } => (2, rat(n as i64 - 2), 2 * n as i64 - 2),
            PairFamily::SoStar { n } => (n / 2, rat(2), 2 * n as i64 - 2),
            PairFamily::E6 => (2, rat(3), 12),
            PairFamily::E7 => (3, rat(4), 18),
        }
    }

    pub fn display_name(&self) -> String {
        match *self {
            PairFamily::SuPQ { p, q } => format!("su({p},{q})"),
            PairFamily::SoOdd { n } => format!("so(2,{})", 2 * n - 1),
            PairFamily::SpR { n } => format!("sp({n},R)"),
            PairFamily::SoEven { n } => format!("so(2,{})", 2 * n - 2),
            PairFamily::SoStar { n } => format!("so*({})", 2 * n),
            PairFamily::E6 => "e6(-14)".to_string(),
            PairFamily::E7 => "e7(-25)".to_string(),
        }
    }
}

/// Parses a pair name. Accepted grammar (whitespace and case
/// insensitive): `su(p,q)`, `sp(n,R)`, `so*(2n)`, `so(2,m)` with
/// `m >= 3`, `e6(-14)`, `e7(-25)`.
///
/// The low-rank coincidences `so(2,3)` and `so(2,4)` are accepted and
/// mapped to their isomorphic pairs `sp(2,R)` and `su(2,2)`; the returned
/// warning records the substitution.
pub fn parse_pair_name(name: &str) -> Result<(PairFamily, Option<String>)> {
    let norm: String = name
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_lowercase();
    let unknown = || Error::UnknownPair(name.trim().to_string());
    let out_of_range = || Error::RankOutOfRange(name.trim().to_string());

    let args_of = |prefix: &str| -> Option<Vec<String>> {
        let rest = norm.strip_prefix(prefix)?;
        let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
        Some(inner.split(',').map(|s| s.to_string()).collect())
    };
    let as_int = |s: &str| -> Result<i64> {
        s.parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad integer `{s}` in pair name")))
    };

    if norm == "e6(-14)" {
        return Ok((PairFamily::E6, None));
    }
    if norm == "e7(-25)" {
        return Ok((PairFamily::E7, None));
    }
    if let Some(args) = args_of("su") {
        if args.len() != 2 {
            return Err(unknown());
        }
        let p = as_int(&args[0])?;
        let q = as_int(&args[1])?;
        if p < 1 || q < 1 || p + q < 2 {
            return Err(out_of_range());
        }
        return Ok((PairFamily::SuPQ { p: p as usize, q: q as usize }, None));
    }
    if let Some(args) = args_of("so*") {
        if args.len() != 1 {
            return Err(unknown());
        }
        let m = as_int(&args[0])?;
        if m < 6 || m % 2 != 0 {
            return Err(out_of_range());
        }
        return Ok((PairFamily::SoStar { n: (m / 2) as usize }, None));
    }
    if let Some(args) = args_of("sp") {
        if args.len() != 2 || args[1] != "r" {
            return Err(unknown());
        }
        let n = as_int(&args[0])?;
        if n < 2 {
            return Err(out_of_range());
        }
        return Ok((PairFamily::SpR { n: n as usize }, None));
    }
    if let Some(args) = args_of("so") {
        if args.len() != 2 || args[0] != "2" {
            return Err(unknown());
        }
        let m = as_int(&args[1])?;
        if m < 3 {
            return Err(out_of_range());
        }
        if m == 3 {
            let warning = "so(2,3) is isomorphic to sp(2,R); using sp(2,R)".to_string();
            return Ok((PairFamily::SpR { n: 2 }, Some(warning)));
        }
        if m == 4 {
            let warning = "so(2,4) is isomorphic to su(2,2); using su(2,2)".to_string();
            return Ok((PairFamily::SuPQ { p: 2, q: 2 }, Some(warning)));
        }
        if m % 2 == 1 {
            return Ok((PairFamily::SoOdd { n: ((m + 1) / 2) as usize }, None));
        }
        return Ok((PairFamily::SoEven { n: ((m + 2) / 2) as usize }, None));
    }
    Err(unknown())
}

/// A lower order ideal of the noncompact positive poset; simultaneously a
/// generalized Young diagram and a minimal length coset representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PIdeal {
    /// Canonically sorted member roots.
    pub roots: Vec<Root>,
}

impl PIdeal {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, g: &Root) -> bool {
        self.roots.binary_search(g).is_ok()
    }
}

/// A rendered generalized Young diagram: labeled boxes on a grid. The
/// cell order (row by row) is the canonical linear extension of the
/// ideal, so reading the labels off in order spells its reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    /// Cells as `(row, col, label)`, sorted by row then column.
    pub cells: Vec<(usize, usize, usize)>,
}

impl Diagram {
    /// One text row per diagram row, boxes as `[n]`; the empty diagram
    /// prints as a single `∅`.
    pub fn to_ascii(&self) -> String {
        if self.cells.is_empty() {
            return "∅".to_string();
        }
        let max_row = self.cells.iter().map(|c| c.0).max().unwrap();
        let mut lines = Vec::new();
        for r in 0..=max_row {
            let row_cells: Vec<&(usize, usize, usize)> =
                self.cells.iter().filter(|c| c.0 == r).collect();
            let width = row_cells.iter().map(|c| c.1).max().unwrap() + 1;
            let mut line = String::new();
            for c in 0..width {
                match row_cells.iter().find(|cell| cell.1 == c) {
                    Some(cell) => line.push_str(&format!("[{}]", cell.2)),
                    None => line.push_str("   "),
                }
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

/// A Hermitian symmetric pair: the ambient root system together with the
/// compact/noncompact split, the constants of the family, and the cached
/// combinatorial structure of the noncompact poset.
#[derive(Debug, Clone)]
pub struct HermitianPair {
    pub family: PairFamily,
    pub name: String,
    pub system: RootSystem,
    /// 1-based index of the noncompact simple root.
    pub noncompact: usize,
    pub compact_positive: Vec<Root>,
    /// The noncompact positive roots, canonically sorted.
    pub pplus: Vec<Root>,
    pub rho_c: Weight,
    pub rho_n: Weight,
    /// The weight orthogonal to the compact roots with
    /// `(zeta, beta^vee) = 1`; realized as the fundamental weight at the
    /// noncompact node.
    pub zeta: Weight,
    pub split_rank: usize,
    /// Spacing `c` between consecutive reduction points.
    pub spacing: Rat,
    pub hvee: i64,
    w_c: WeylElement,
    w_0: WeylElement,
    pplus_index: BTreeMap<Root, usize>,
    /// `lower_covers[i]` lists the indices covered by `pplus[i]`.
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    /// Full order relation: `leq[i][j]` iff `pplus[i] <= pplus[j]`.
    leq: Vec<Vec<bool>>,
    /// Diagram embedding `(row, col)` per poset element.
    positions: Vec<(usize, usize)>,
    /// `f` labels per poset element.
    f_labels: Vec<usize>,
}

/// Builds the pair named by `name` (see [`parse_pair_name`]).
pub fn pair_from_name(name: &str) -> Result<HermitianPair> {
    let (family, _) = parse_pair_name(name)?;
    HermitianPair::build(family)
}

impl HermitianPair {
    pub fn build(family: PairFamily) -> Result<HermitianPair> {
        let cartan = family.cartan_type()?;
        let system = build_root_system(cartan)?;
        let noncompact = family.noncompact_node();
        let dim = system.dim();

        let mut compact_positive = Vec::new();
        let mut pplus = Vec::new();
        for g in &system.positive_roots {
            if system.root_support(g)?.contains(&noncompact) {
                pplus.push(g.clone());
            } else {
                compact_positive.push(g.clone());
            }
        }
        let rho_c = weight_sum(&compact_positive, dim).scale(frac(1, 2));
        let rho_n = weight_sum(&pplus, dim).scale(frac(1, 2));
        let zeta = system.fundamental_weights()[noncompact - 1].clone();
        let (split_rank, spacing, hvee) = family.constants();

        let compact_idx: BTreeSet<usize> =
            (1..=system.rank()).filter(|&i| i != noncompact).collect();
        let w_c = weyl::longest_parabolic(&system, &compact_idx)?;
        let w_0 = weyl::longest_element(&system);

        // construction invariants
        assert!(pplus.contains(system.simple_root(noncompact)?));
        assert!(pplus.contains(&system.highest_root));
        assert_eq!(system.rho, rho_c.add(&rho_n));
        assert_eq!(system.copairing(&zeta, &system.highest_root)?, rat(1));
        for g in &compact_positive {
            assert!(zeta.dot(g).is_zero());
        }
        assert_eq!(rho_n.scale(rat(2)), zeta.scale(rat(hvee)));

        let pplus_index: BTreeMap<Root, usize> = pplus
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();

        let n = pplus.len();
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for (i, g) in pplus.iter().enumerate() {
            for a in &compact_idx {
                let up = g.add(system.simple_root(*a)?);
                if let Some(&j) = pplus_index.get(&up) {
                    upper_covers[i].push(j);
                    lower_covers[j].push(i);
                }
            }
        }

        // order relation as the reflexive-transitive closure of the covers;
        // covers raise the height by exactly one, so a single pass in
        // height order suffices
        let mut leq = vec![vec![false; n]; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| system.root_height(&pplus[i]).unwrap());
        for &i in &order {
            leq[i][i] = true;
            for &j in &upper_covers[i] {
                assert_eq!(
                    system.root_height(&pplus[j])?,
                    system.root_height(&pplus[i])? + 1
                );
                for row in leq.iter_mut() {
                    if row[i] {
                        row[j] = true;
                    }
                }
            }
        }

        let positions = compute_positions(family, &system, &pplus, &lower_covers)?;

        let mut pair = HermitianPair {
            family,
            name: family.display_name(),
            system,
            noncompact,
            compact_positive,
            pplus,
            rho_c,
            rho_n,
            zeta,
            split_rank,
            spacing,
            hvee,
            w_c,
            w_0,
            pplus_index,
            lower_covers,
            upper_covers,
            leq,
            positions,
            f_labels: Vec::new(),
        };
        pair.f_labels = (0..n)
            .map(|i| pair.compute_f_label(i))
            .collect::<Result<_>>()?;
        Ok(pair)
    }

    pub fn w_c(&self) -> &WeylElement {
        &self.w_c
    }

    pub fn w_0(&self) -> &WeylElement {
        &self.w_0
    }

    pub fn compact_indices(&self) -> BTreeSet<usize> {
        (1..=self.system.rank())
            .filter(|&i| i != self.noncompact)
            .collect()
    }

    /// Index of a noncompact positive root in the canonical order.
    pub fn pplus_index_of(&self, g: &Root) -> Result<usize> {
        self.pplus_index.get(g).copied().ok_or(Error::NotInPPlus)
    }

    /// Cover relations of the noncompact poset as `(lower, upper)` pairs.
    pub fn poset_covers(&self) -> Vec<(Root, Root)> {
        let mut out = Vec::new();
        for (i, ups) in self.upper_covers.iter().enumerate() {
            for &j in ups {
                out.push((self.pplus[i].clone(), self.pplus[j].clone()));
            }
        }
        out
    }

    pub fn poset_leq(&self, a: &Root, b: &Root) -> Result<bool> {
        Ok(self.leq[self.pplus_index_of(a)?][self.pplus_index_of(b)?])
    }

    /// Tests `w` for membership in the minimal-length transversal: the
    /// inversion set must consist of noncompact roots.
    pub fn is_coset_rep(&self, w: &WeylElement) -> bool {
        weyl::inversion_set(&self.system, w)
            .iter()
            .all(|g| self.pplus_index.contains_key(g))
    }

    fn indices_of(&self, ideal: &PIdeal) -> Result<Vec<usize>> {
        ideal.roots.iter().map(|g| self.pplus_index_of(g)).collect()
    }

    fn ideal_from_indices(&self, mut idx: Vec<usize>) -> PIdeal {
        idx.sort_unstable();
        PIdeal {
            roots: idx.into_iter().map(|i| self.pplus[i].clone()).collect(),
        }
    }

    /// Validates and canonicalizes a set of roots as a lower order ideal.
    pub fn ideal_from_roots(&self, roots: &[Root]) -> Result<PIdeal> {
        let idx = roots
            .iter()
            .map(|g| self.pplus_index_of(g))
            .collect::<Result<Vec<_>>>()?;
        let set: BTreeSet<usize> = idx.iter().copied().collect();
        for &i in &set {
            for &l in &self.lower_covers[i] {
                if !set.contains(&l) {
                    return Err(Error::NotAnIdeal);
                }
            }
        }
        Ok(self.ideal_from_indices(set.into_iter().collect()))
    }

    /// All lower order ideals, sorted by size and then by the canonical
    /// encoding (the sorted list of root coordinate vectors).
    pub fn enumerate_ideals(&self) -> Vec<PIdeal> {
        let n = self.pplus.len();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        seen.insert(Vec::new());
        queue.push_back(Vec::new());
        while let Some(cur) = queue.pop_front() {
            let set: BTreeSet<usize> = cur.iter().copied().collect();
            for cand in 0..n {
                if set.contains(&cand) {
                    continue;
                }
                if self.lower_covers[cand].iter().all(|l| set.contains(l)) {
                    let mut next: Vec<usize> = set.iter().copied().collect();
                    next.push(cand);
                    next.sort_unstable();
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut all: Vec<Vec<usize>> = seen.into_iter().collect();
        all.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        all.into_iter()
            .map(|v| self.ideal_from_indices(v))
            .collect()
    }

    /// All subideals of a given ideal (the interval below its
    /// representative in the transversal's order).
    pub fn enumerate_subideals(&self, ideal: &PIdeal) -> Result<Vec<PIdeal>> {
        let member: BTreeSet<usize> = self.indices_of(ideal)?.into_iter().collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        seen.insert(Vec::new());
        queue.push_back(Vec::new());
        while let Some(cur) = queue.pop_front() {
            let set: BTreeSet<usize> = cur.iter().copied().collect();
            for &cand in &member {
                if set.contains(&cand) {
                    continue;
                }
                if self.lower_covers[cand].iter().all(|l| set.contains(l)) {
                    let mut next: Vec<usize> = set.iter().copied().collect();
                    next.push(cand);
                    next.sort_unstable();
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(seen
            .into_iter()
            .map(|v| self.ideal_from_indices(v))
            .collect())
    }

    /// Indices covered by the `i`-th noncompact positive.
    pub fn lower_cover_indices(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    /// The canonical linear extension: diagram boxes read row by row.
    pub fn linear_extension(&self, ideal: &PIdeal) -> Result<Vec<Root>> {
        let mut idx = self.indices_of(ideal)?;
        idx.sort_by_key(|&i| self.positions[i]);
        Ok(idx.into_iter().map(|i| self.pplus[i].clone()).collect())
    }

    /// The coset representative whose inversion set is the ideal, as the
    /// product of the root reflections along a linear extension.
    pub fn ideal_to_element(&self, ideal: &PIdeal) -> Result<WeylElement> {
        let ideal = self.ideal_from_roots(&ideal.roots)?; // validates closure
        let ext = self.linear_extension(&ideal)?;
        let mut w = WeylElement::identity(&self.system);
        for g in &ext {
            w = WeylElement::reflection(&self.system, g)?.compose(&w);
        }
        Ok(w)
    }

    /// Inverse of [`Self::ideal_to_element`].
    pub fn element_to_ideal(&self, x: &WeylElement) -> Result<PIdeal> {
        if !self.is_coset_rep(x) {
            return Err(Error::NotMinimalCosetRep);
        }
        self.ideal_from_roots(&weyl::inversion_set(&self.system, x))
    }

    fn compute_f_label(&self, i: usize) -> Result<usize> {
        let down: Vec<usize> = (0..self.pplus.len())
            .filter(|&j| j != i && self.leq[j][i])
            .collect();
        let v = self.ideal_to_element(&self.ideal_from_indices(down))?;
        let f = v.inverse().apply(&self.pplus[i]);
        self.system
            .simple_roots
            .iter()
            .position(|a| *a == f)
            .map(|k| k + 1)
            .ok_or_else(|| Error::InternalInconsistency("f label is not a simple root".into()))
    }

    /// The label `f(gamma)`: with `v` the representative of the strict
    /// down-set of `gamma`, this is `v^{-1} gamma`, always a simple root.
    pub fn f_label(&self, g: &Root) -> Result<usize> {
        Ok(self.f_labels[self.pplus_index_of(g)?])
    }

    /// The reduced word spelled by the diagram of `ideal`, row by row.
    pub fn word_of_ideal(&self, ideal: &PIdeal) -> Result<Word> {
        let ext = self.linear_extension(ideal)?;
        Ok(Word(
            ext.iter()
                .map(|g| self.f_label(g))
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    /// The order-reversing, length-complementary involution
    /// `x -> w_c x w_0` on the coset transversal.
    pub fn involution(&self, x: &WeylElement) -> Result<WeylElement> {
        if !self.is_coset_rep(x) {
            return Err(Error::NotMinimalCosetRep);
        }
        Ok(self.w_c.compose(x).compose(&self.w_0))
    }

    /// Highest weight attached to a representative:
    /// `lambda = (w_c x w_0) rho - rho = -w_c x rho - rho`.
    pub fn weight_of(&self, x: &WeylElement) -> Result<Weight> {
        let tilde = self.involution(x)?;
        Ok(tilde.apply(&self.system.rho).sub(&self.system.rho))
    }

    pub fn weight_of_ideal(&self, ideal: &PIdeal) -> Result<Weight> {
        self.weight_of(&self.ideal_to_element(ideal)?)
    }

    /// Renders the generalized Young diagram of an ideal.
    pub fn render_diagram(&self, ideal: &PIdeal) -> Result<Diagram> {
        let idx = self.indices_of(ideal)?;
        let mut cells: Vec<(usize, usize, usize)> = idx
            .into_iter()
            .map(|i| {
                let (r, c) = self.positions[i];
                (r, c, self.f_labels[i])
            })
            .collect();
        cells.sort_unstable();
        Ok(Diagram { cells })
    }

    /// The saturation of a node set: all noncompact positives supported
    /// inside `nodes`.
    pub fn supported_ideal(&self, nodes: &BTreeSet<usize>) -> Result<PIdeal> {
        let roots: Vec<Root> = self
            .pplus
            .iter()
            .filter(|g| {
                self.system
                    .root_support(g)
                    .map(|s| s.iter().all(|i| nodes.contains(i)))
                    .unwrap_or(false)
            })
            .cloned()
            .collect();
        self.ideal_from_roots(&roots)
    }

    /// Connected subsets of the Dynkin diagram containing the noncompact
    /// node, sorted by size then lexicographically. The empty set is not
    /// included.
    pub fn connected_subdiagrams(&self) -> Vec<BTreeSet<usize>> {
        let rank = self.system.rank();
        let adjacent = |i: usize, j: usize| {
            !self.system.simple_roots[i - 1]
                .dot(&self.system.simple_roots[j - 1])
                .is_zero()
        };
        let mut out: Vec<BTreeSet<usize>> = Vec::new();
        for mask in 0u32..(1 << rank) {
            let set: BTreeSet<usize> =
                (1..=rank).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            if set.is_empty() || !set.contains(&self.noncompact) {
                continue;
            }
            let start = *set.iter().next().unwrap();
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for &j in &set {
                    if !seen.contains(&j) && i != j && adjacent(i, j) {
                        seen.insert(j);
                        stack.push(j);
                    }
                }
            }
            if seen == set {
                out.push(set);
            }
        }
        out.sort_by(|a, b| {
            (a.len(), a.iter().collect::<Vec<_>>())
                .cmp(&(b.len(), b.iter().collect::<Vec<_>>()))
        });
        out
    }
}

/// Diagram embedding of the noncompact poset, one convention per family;
/// the E-family shapes are matched to their published templates through
/// the cover structure.
fn compute_positions(
    family: PairFamily,
    system: &RootSystem,
    pplus: &[Root],
    lower_covers: &[Vec<usize>],
) -> Result<Vec<(usize, usize)>> {
    let nonzeros = |g: &Root| -> Vec<usize> {
        (0..g.dim())
            .filter(|&k| !g.coords[k].is_zero())
            .map(|k| k + 1)
            .collect()
    };
    match family {
        PairFamily::SuPQ { p, .. } => Ok(pplus
            .iter()
            .map(|g| {
                // e_i - e_j with i <= p < j
                let nz = nonzeros(g);
                let (i, j) = (nz[0], nz[1]);
                (j - p - 1, p - i)
            })
            .collect()),
        PairFamily::SoOdd { n } => Ok(pplus
            .iter()
            .map(|g| {
                // a chain; drawn as a hook bending after the n-th box
                let h = (system.root_height(g).unwrap() - 1) as usize;
                if h < n {
                    (0, h)
                } else {
                    (h - n + 1, n - 1)
                }
            })
            .collect()),
        PairFamily::SpR { n } => Ok(pplus
            .iter()
            .map(|g| {
                // e_i + e_j with i <= j (the diagonal holds 2e_i)
                let nz = nonzeros(g);
                let (i, j) = if nz.len() == 1 { (nz[0], nz[0]) } else { (nz[0], nz[1]) };
                (n - j, n - i)
            })
            .collect()),
        PairFamily::SoEven { n } => Ok(pplus
            .iter()
            .map(|g| {
                // chain e_1 - e_j, fork at e_1 -+ e_n, chain e_1 + e_j
                let nz = nonzeros(g);
                let j = nz[1];
                if g.coords[j - 1].is_negative() {
                    (0, j - 2)
                } else if j == n {
                    (1, n - 3)
                } else {
                    (n - j, n - 2)
                }
            })
            .collect()),
        PairFamily::SoStar { n } => Ok(pplus
            .iter()
            .map(|g| {
                let nz = nonzeros(g);
                let (i, j) = (nz[0], nz[1]);
                (n - j, n - 1 - i)
            })
            .collect()),
        PairFamily::E6 => match_template(system, pplus, lower_covers, &e6_template()),
        PairFamily::E7 => match_template(system, pplus, lower_covers, &e7_template()),
    }
}

fn e6_template() -> Vec<(usize, usize)> {
    let mut t: Vec<(usize, usize)> = Vec::new();
    t.extend((0..5).map(|c| (0, c)));
    t.extend((2..5).map(|c| (1, c)));
    t.extend((3..6).map(|c| (2, c)));
    t.extend((3..8).map(|c| (3, c)));
    t
}

fn e7_template() -> Vec<(usize, usize)> {
    let mut t: Vec<(usize, usize)> = Vec::new();
    t.extend((0..6).map(|c| (0, c)));
    t.extend((3..6).map(|c| (1, c)));
    t.extend((4..7).map(|c| (2, c)));
    t.extend((4..9).map(|c| (3, c)));
    t.extend((4..9).map(|c| (4, c)));
    t.extend((7..9).map(|c| (5, c)));
    t.push((6, 8));
    t.push((7, 8));
    t.push((8, 8));
    t
}

/// Assigns poset elements to template boxes so that box adjacency mirrors
/// the cover relation exactly; backtracks over the (at most two) choices
/// per antidiagonal.
fn match_template(
    system: &RootSystem,
    pplus: &[Root],
    lower_covers: &[Vec<usize>],
    template: &[(usize, usize)],
) -> Result<Vec<(usize, usize)>> {
    let n = pplus.len();
    if template.len() != n {
        return Err(Error::InternalInconsistency("template size mismatch".into()));
    }
    let min_height = pplus
        .iter()
        .map(|g| system.root_height(g).unwrap())
        .min()
        .unwrap();
    let heights: Vec<usize> = pplus
        .iter()
        .map(|g| (system.root_height(g).unwrap() - min_height) as usize)
        .collect();
    let max_h = *heights.iter().max().unwrap();
    let mut elems_at: Vec<Vec<usize>> = vec![Vec::new(); max_h + 1];
    for (i, &h) in heights.iter().enumerate() {
        elems_at[h].push(i);
    }
    let mut boxes_at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); max_h + 1];
    let box_set: BTreeSet<(usize, usize)> = template.iter().copied().collect();
    for &(r, c) in template {
        if r + c > max_h {
            return Err(Error::InternalInconsistency(
                "template diagonal overflow".into(),
            ));
        }
        boxes_at[r + c].push((r, c));
    }

    fn assign(
        level: usize,
        elems_at: &[Vec<usize>],
        boxes_at: &[Vec<(usize, usize)>],
        box_set: &BTreeSet<(usize, usize)>,
        lower_covers: &[Vec<usize>],
        pos: &mut BTreeMap<usize, (usize, usize)>,
    ) -> bool {
        if level == elems_at.len() {
            return true;
        }
        let elems = &elems_at[level];
        let boxes = &boxes_at[level];
        if elems.len() != boxes.len() {
            return false;
        }
        let mut perm: Vec<usize> = (0..elems.len()).collect();
        loop {
            let ok = elems.iter().enumerate().all(|(k, &e)| {
                let (r, c) = boxes[perm[k]];
                let mut below: Vec<(usize, usize)> = Vec::new();
                if r > 0 && box_set.contains(&(r - 1, c)) {
                    below.push((r - 1, c));
                }
                if c > 0 && box_set.contains(&(r, c - 1)) {
                    below.push((r, c - 1));
                }
                let mut covers: Vec<(usize, usize)> =
                    lower_covers[e].iter().map(|l| pos[l]).collect();
                below.sort_unstable();
                covers.sort_unstable();
                below == covers
            });
            if ok {
                for (k, &e) in elems.iter().enumerate() {
                    pos.insert(e, boxes[perm[k]]);
                }
                if assign(level + 1, elems_at, boxes_at, box_set, lower_covers, pos) {
                    return true;
                }
                for &e in elems {
                    pos.remove(&e);
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

    let mut pos = BTreeMap::new();
    if !assign(0, &elems_at, &boxes_at, &box_set, lower_covers, &mut pos) {
        return Err(Error::InternalInconsistency(
            "no cover-consistent embedding into the template".into(),
        ));
    }
    Ok((0..n).map(|i| pos[&i]).collect())
}

/// Sum of a set of roots.
pub fn root_sum(roots: &[Root], dim: usize) -> Weight {
    weight_sum(roots, dim)
}

/// Formats fundamental-weight coordinates, e.g. `-12*w1 + w2`.
pub fn fundamental_coords_string(coords: &[Rat]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = if c.abs() == rat(1) {
            String::new()
        } else {
            format!("{}*", rat_str(c.abs()))
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        parts.push(format!("{sign} {mag}w{}", i + 1));
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    let joined = parts.join(" ");
    if let Some(rest) = joined.strip_prefix("+ ") {
        rest.to_string()
    } else if let Some(rest) = joined.strip_prefix("- ") {
        format!("-{rest}")
    } else {
        joined
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(name: &str) -> HermitianPair {
        pair_from_name(name).unwrap()
    }

    #[test]
    fn catalog_constants() {
        let sp3 = pair("sp(3,R)");
        assert_eq!(sp3.system.cartan_type.to_string(), "C3");
        assert_eq!(sp3.noncompact, 3);
        assert_eq!((sp3.split_rank, sp3.spacing, sp3.hvee), (3, frac(1, 2), 4));

        let e7 = pair("e7(-25)");
        assert_eq!(e7.noncompact, 7);
        assert_eq!((e7.split_rank, e7.spacing, e7.hvee), (3, rat(4), 18));

        let so27 = pair("so(2,7)");
        assert_eq!(so27.system.cartan_type.to_string(), "B4");
        assert_eq!(so27.noncompact, 1);
        assert_eq!(
            (so27.split_rank, so27.spacing, so27.hvee),
            (2, frac(5, 2), 7)
        );

        let so28 = pair("so(2,8)");
        assert_eq!(so28.system.cartan_type.to_string(), "D5");
        assert_eq!((so28.split_rank, so28.spacing, so28.hvee), (2, rat(3), 8));

        let sostar = pair("so*(10)");
        assert_eq!(sostar.system.cartan_type.to_string(), "D5");
        assert_eq!(sostar.noncompact, 5);
        assert_eq!(
            (sostar.split_rank, sostar.spacing, sostar.hvee),
            (2, rat(2), 8)
        );
    }

    #[test]
    fn name_parsing() {
        assert!(matches!(
            parse_pair_name("SU( 3 , 2 )"),
            Ok((PairFamily::SuPQ { p: 3, q: 2 }, None))
        ));
        assert!(matches!(
            parse_pair_name("sp(4,r)"),
            Ok((PairFamily::SpR { n: 4 }, None))
        ));
        let (fam, warn) = parse_pair_name("so(2,3)").unwrap();
        assert!(matches!(fam, PairFamily::SpR { n: 2 }));
        assert!(warn.unwrap().contains("sp(2,R)"));
        let (fam, warn) = parse_pair_name("so(2,4)").unwrap();
        assert!(matches!(fam, PairFamily::SuPQ { p: 2, q: 2 }));
        assert!(warn.is_some());
        assert!(matches!(
            parse_pair_name("so(2,2)"),
            Err(Error::RankOutOfRange(_))
        ));
        assert!(matches!(parse_pair_name("g2"), Err(Error::UnknownPair(_))));
        assert!(matches!(
            parse_pair_name("sp(1,R)"),
            Err(Error::RankOutOfRange(_))
        ));
        assert!(matches!(
            parse_pair_name("so*(7)"),
            Err(Error::RankOutOfRange(_))
        ));
    }

    #[test]
    fn pplus_counts_and_extremes() {
        let su32 = pair("su(3,2)");
        assert_eq!(su32.pplus.len(), 6);
        let sp4 = pair("sp(4,R)");
        assert_eq!(sp4.pplus.len(), 10);
        let e7 = pair("e7(-25)");
        assert_eq!(e7.pplus.len(), 27);
        let e6 = pair("e6(-14)");
        assert_eq!(e6.pplus.len(), 16);

        for p in [&su32, &sp4, &e7, &e6] {
            let minima: Vec<usize> = (0..p.pplus.len())
                .filter(|&i| p.lower_covers[i].is_empty())
                .collect();
            assert_eq!(minima.len(), 1);
            assert_eq!(
                p.pplus[minima[0]],
                *p.system.simple_root(p.noncompact).unwrap()
            );
            let maxima: Vec<usize> = (0..p.pplus.len())
                .filter(|&i| p.upper_covers[i].is_empty())
                .collect();
            assert_eq!(maxima.len(), 1);
            assert_eq!(p.pplus[maxima[0]], p.system.highest_root);
        }
    }

    #[test]
    fn covers_are_at_most_two() {
        for name in [
            "su(3,4)",
            "sp(4,R)",
            "so(2,9)",
            "so(2,8)",
            "so*(10)",
            "e6(-14)",
            "e7(-25)",
        ] {
            let p = pair(name);
            for i in 0..p.pplus.len() {
                assert!(p.lower_covers[i].len() <= 2);
                assert!(p.upper_covers[i].len() <= 2);
            }
        }
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(pair("sp(3,R)").enumerate_ideals().len(), 8);
        assert_eq!(pair("su(3,2)").enumerate_ideals().len(), 10);
        assert_eq!(pair("e6(-14)").enumerate_ideals().len(), 27);
        assert_eq!(pair("e7(-25)").enumerate_ideals().len(), 56);
    }

    #[test]
    fn ideal_count_matches_group_order_quotient() {
        fn fact(n: u64) -> u64 {
            (1..=n).product()
        }
        let cases: Vec<(&str, u64)> = vec![
            ("su(3,2)", fact(5) / (fact(3) * fact(2))),
            ("su(2,4)", fact(6) / (fact(2) * fact(4))),
            ("sp(4,R)", ((1u64 << 4) * fact(4)) / fact(4)),
            ("so(2,7)", ((1u64 << 4) * fact(4)) / ((1 << 3) * fact(3))),
            ("so(2,8)", ((1u64 << 5) * fact(5)) / 2 / (((1u64 << 4) * fact(4)) / 2)),
            ("so*(8)", ((1u64 << 3) * fact(4)) / fact(4)),
            ("e6(-14)", 51840 / 1920),
            ("e7(-25)", 2903040 / 51840),
        ];
        for (name, want) in cases {
            assert_eq!(pair(name).enumerate_ideals().len() as u64, want, "{name}");
        }
    }

    #[test]
    fn enumeration_order_is_by_size_then_encoding() {
        let p = pair("su(3,2)");
        let ideals = p.enumerate_ideals();
        for w in ideals.windows(2) {
            let a = (w[0].roots.len(), &w[0].roots);
            let b = (w[1].roots.len(), &w[1].roots);
            assert!(a <= b);
        }
    }

    #[test]
    fn f_labels_su32() {
        let p = pair("su(3,2)");
        // first row from the minimum: 3, 2, 1; second row: 4, 3, 2
        let labels: BTreeMap<(usize, usize), usize> = (0..p.pplus.len())
            .map(|i| (p.positions[i], p.f_labels[i]))
            .collect();
        assert_eq!(labels[&(0, 0)], 3);
        assert_eq!(labels[&(0, 1)], 2);
        assert_eq!(labels[&(0, 2)], 1);
        assert_eq!(labels[&(1, 0)], 4);
        assert_eq!(labels[&(1, 1)], 3);
        assert_eq!(labels[&(1, 2)], 2);
    }

    #[test]
    fn f_label_of_minimum_is_noncompact_node() {
        for name in [
            "su(2,3)",
            "sp(3,R)",
            "so(2,7)",
            "so(2,8)",
            "so*(8)",
            "e6(-14)",
            "e7(-25)",
        ] {
            let p = pair(name);
            let alpha = p.system.simple_root(p.noncompact).unwrap().clone();
            assert_eq!(p.f_label(&alpha).unwrap(), p.noncompact, "{name}");
        }
    }

    #[test]
    fn f_label_rejects_compact_roots() {
        let p = pair("su(3,2)");
        let compact = p.compact_positive[0].clone();
        assert!(matches!(p.f_label(&compact), Err(Error::NotInPPlus)));
    }

    #[test]
    fn e6_full_ideal_label_multiset() {
        let p = pair("e6(-14)");
        let full = p.enumerate_ideals().into_iter().last().unwrap();
        let word = p.word_of_ideal(&full).unwrap();
        assert_eq!(word.0, vec![1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6]);
    }

    #[test]
    fn sp3_staircase_word() {
        let p = pair("sp(3,R)");
        let full = p.enumerate_ideals().into_iter().last().unwrap();
        assert_eq!(full.len(), 6);
        let word = p.word_of_ideal(&full).unwrap();
        assert_eq!(word.0, vec![3, 2, 1, 3, 2, 3]);
        let x = p.ideal_to_element(&full).unwrap();
        assert_eq!(weyl::length(&p.system, &x), 6);
    }

    #[test]
    fn ideal_element_round_trip() {
        for name in ["su(3,2)", "sp(3,R)", "so(2,7)", "so*(8)", "e6(-14)"] {
            let p = pair(name);
            for ideal in p.enumerate_ideals() {
                let x = p.ideal_to_element(&ideal).unwrap();
                assert!(p.is_coset_rep(&x), "{name}");
                let back = p.element_to_ideal(&x).unwrap();
                assert_eq!(back, ideal, "{name}");
                let word = p.word_of_ideal(&ideal).unwrap();
                assert_eq!(word.0.len(), ideal.len());
                assert_eq!(WeylElement::from_word(&p.system, &word).unwrap(), x);
            }
        }
    }

    #[test]
    fn non_ideal_rejected() {
        let p = pair("su(3,2)");
        let beta = p.system.highest_root.clone();
        assert!(matches!(p.ideal_from_roots(&[beta]), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn involution_properties_small_pairs() {
        for name in ["su(3,2)", "sp(3,R)", "so(2,7)", "so*(8)"] {
            let p = pair(name);
            let ideals = p.enumerate_ideals();
            let total = p.pplus.len();
            for ideal in &ideals {
                let x = p.ideal_to_element(ideal).unwrap();
                let t = p.involution(&x).unwrap();
                assert!(p.is_coset_rep(&t));
                assert_eq!(weyl::length(&p.system, &t), total - ideal.len(), "{name}");
                assert_eq!(p.involution(&t).unwrap(), x);
                // complement identity: p+ minus Phi_x = w_c Phi_tilde
                let tinv: BTreeSet<Root> = weyl::inversion_set(&p.system, &t)
                    .into_iter()
                    .map(|g| p.w_c.apply(&g))
                    .collect();
                let complement: BTreeSet<Root> = p
                    .pplus
                    .iter()
                    .filter(|g| !ideal.contains(g))
                    .cloned()
                    .collect();
                assert_eq!(tinv, complement, "{name}");
            }
            // order reversal, exhaustively
            let mapped: Vec<PIdeal> = ideals
                .iter()
                .map(|i| {
                    p.element_to_ideal(&p.involution(&p.ideal_to_element(i).unwrap()).unwrap())
                        .unwrap()
                })
                .collect();
            for (a, ta) in ideals.iter().zip(&mapped) {
                for (b, tb) in ideals.iter().zip(&mapped) {
                    let asub = a.roots.iter().all(|g| b.contains(g));
                    if asub {
                        assert!(tb.roots.iter().all(|g| ta.contains(g)), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn parabolic_length_additivity_and_left_descents() {
        // l(w_c x) = l(w_c) + l(x), and no compact index is a left
        // descent of a transversal representative
        for name in ["su(2,3)", "sp(3,R)", "so(2,7)", "so*(8)"] {
            let p = pair(name);
            let lc = weyl::length(&p.system, p.w_c());
            assert_eq!(lc, p.compact_positive.len());
            for ideal in p.enumerate_ideals() {
                let x = p.ideal_to_element(&ideal).unwrap();
                let w = p.w_c().compose(&x);
                assert_eq!(weyl::length(&p.system, &w), lc + ideal.len(), "{name}");
                let ldesc = weyl::descents_left(&p.system, &x);
                assert!(
                    ldesc.iter().all(|i| *i == p.noncompact),
                    "{name}: compact left descent on {:?}",
                    ldesc
                );
            }
        }
    }

    #[test]
    fn involution_of_identity_is_longest_rep() {
        let p = pair("su(3,2)");
        let id = WeylElement::identity(&p.system);
        let t = p.involution(&id).unwrap();
        assert_eq!(weyl::length(&p.system, &t), p.pplus.len());
    }

    #[test]
    fn weight_of_extremes() {
        for name in [
            "su(3,2)",
            "sp(3,R)",
            "so(2,7)",
            "so*(8)",
            "e6(-14)",
            "e7(-25)",
        ] {
            let p = pair(name);
            let ideals = p.enumerate_ideals();
            let full = ideals.last().unwrap();
            let longest = p.ideal_to_element(full).unwrap();
            let lam = p.weight_of(&longest).unwrap();
            assert!(lam.is_zero(), "{name}: lambda(w^c) = 0");
            let id = WeylElement::identity(&p.system);
            let lam0 = p.weight_of(&id).unwrap();
            assert_eq!(lam0, p.rho_n.scale(rat(-2)), "{name}: lambda(e) = -2 rho_n");
        }
    }

    #[test]
    fn weight_equals_minus_inversion_sum_of_involution() {
        let p = pair("so(2,8)");
        for ideal in p.enumerate_ideals() {
            let x = p.ideal_to_element(&ideal).unwrap();
            let t = p.involution(&x).unwrap();
            let lam = p.weight_of(&x).unwrap();
            let s = weight_sum(&weyl::inversion_set(&p.system, &t), p.system.dim());
            assert_eq!(lam, s.neg());
            let alt = p
                .w_c
                .compose(&x)
                .apply(&p.system.rho)
                .neg()
                .sub(&p.system.rho);
            assert_eq!(lam, alt);
        }
    }

    #[test]
    fn weight_plus_rho_is_compact_dominant_regular() {
        let p = pair("sp(4,R)");
        for ideal in p.enumerate_ideals() {
            let lam = p.weight_of_ideal(&ideal).unwrap();
            let shifted = lam.add(&p.system.rho);
            for g in &p.compact_positive {
                let v = p.system.copairing(&shifted, g).unwrap();
                assert!(v > Rat::zero());
            }
        }
    }

    #[test]
    fn render_su32_grid() {
        let p = pair("su(3,2)");
        let ideals = p.enumerate_ideals();
        let full = ideals.last().unwrap();
        let d = p.render_diagram(full).unwrap();
        assert_eq!(d.to_ascii(), "[3][2][1]\n[4][3][2]");
        let empty = p.render_diagram(&ideals[0]).unwrap();
        assert_eq!(empty.to_ascii(), "∅");
    }

    #[test]
    fn render_sp3_staircase() {
        let p = pair("sp(3,R)");
        let full = p.enumerate_ideals().into_iter().last().unwrap();
        let d = p.render_diagram(&full).unwrap();
        assert_eq!(d.to_ascii(), "[3][2][1]\n   [3][2]\n      [3]");
    }

    #[test]
    fn render_so_odd_hook() {
        // so(2,7) = B4: the size-6 ideal is the hook with row 1..4 and
        // labels 3, 2 hanging below the end of the row
        let p = pair("so(2,7)");
        let ideals = p.enumerate_ideals();
        let hook = ideals.iter().find(|i| i.len() == 6).unwrap();
        let d = p.render_diagram(hook).unwrap();
        assert_eq!(d.to_ascii(), "[1][2][3][4]\n         [3]\n         [2]");
    }

    #[test]
    fn render_e6_full_shape() {
        let p = pair("e6(-14)");
        let full = p.enumerate_ideals().into_iter().last().unwrap();
        let d = p.render_diagram(&full).unwrap();
        let expected = "\
[1][3][4][5][6]
      [2][4][5]
         [3][4][2]
         [1][3][4][5][6]";
        assert_eq!(d.to_ascii(), expected);
    }

    #[test]
    fn render_e7_full_shape() {
        let p = pair("e7(-25)");
        let full = p.enumerate_ideals().into_iter().last().unwrap();
        let d = p.render_diagram(&full).unwrap();
        let expected = "\
[7][6][5][4][3][1]
         [2][4][3]
            [5][4][2]
            [6][5][4][3][1]
            [7][6][5][4][3]
                     [2][4]
                        [5]
                        [6]
                        [7]";
        assert_eq!(d.to_ascii(), expected);
    }

    #[test]
    fn supported_ideal_examples() {
        let p = pair("sp(3,R)");
        let s: BTreeSet<usize> = [2, 3].into_iter().collect();
        let ideal = p.supported_ideal(&s).unwrap();
        assert_eq!(ideal.len(), 3); // 2e3, e2+e3, 2e2
        let empty = p.supported_ideal(&BTreeSet::new()).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn connected_subdiagram_counts() {
        // path with marked node p: intervals containing p, so p*q of them
        assert_eq!(pair("su(3,2)").connected_subdiagrams().len(), 6);
        assert_eq!(pair("sp(3,R)").connected_subdiagrams().len(), 3);
        assert_eq!(pair("e6(-14)").connected_subdiagrams().len(), 8);
        assert_eq!(pair("e7(-25)").connected_subdiagrams().len(), 9);
        // D5 from node 1: chains {1..m} for m <= 3, then 3 ways to finish
        assert_eq!(pair("so(2,8)").connected_subdiagrams().len(), 6);
    }

    #[test]
    fn coset_rep_tests() {
        let p = pair("su(3,2)");
        assert!(p.is_coset_rep(&WeylElement::identity(&p.system)));
        let s1 = WeylElement::simple_reflection(&p.system, 1).unwrap();
        assert!(!p.is_coset_rep(&s1));
        let s3 = WeylElement::simple_reflection(&p.system, 3).unwrap();
        assert!(p.is_coset_rep(&s3));
        assert!(matches!(
            p.element_to_ideal(&s1),
            Err(Error::NotMinimalCosetRep)
        ));
    }

    #[test]
    fn fundamental_coords_formatting() {
        assert_eq!(fundamental_coords_string(&[rat(0), rat(0)]), "0");
        assert_eq!(fundamental_coords_string(&[rat(1), rat(-18)]), "w1 - 18*w2");
        assert_eq!(
            fundamental_coords_string(&[rat(-12), frac(1, 2)]),
            "-12*w1 + 1/2*w2"
        );
    }
}
