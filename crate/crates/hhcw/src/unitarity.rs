//! Unitarity of the highest weight modules attached to coset
//! representatives, and the invariants that come with it.
//!
//! The decision procedure is purely combinatorial: a representative `x`
//! is unitary exactly when its support is a connected subdiagram through
//! the noncompact node and its inversion set is the full saturation of
//! that support inside the noncompact positives (the empty diagram,
//! `x = e`, is included). An independent cross-check goes through the
//! last-reduction-point machinery: the root systems `Q` and `R` attached
//! to the highest weight, split ranks via the strongly-orthogonal
//! cascade, and the comparison of `z = (lambda + rho, beta^vee)` with the
//! last reduction point. Gelfand–Kirillov dimensions and the
//! associated-variety index `k` (which also labels the cell of the
//! representative) come from the same pairing.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::hermitian::{HermitianPair, PIdeal};
use crate::linalg::{rat, rat_str, Rat, Root, Weight};
use crate::rootsys::RootSubsystem;
use crate::weyl::{self, WeylElement};
use crate::{Error, Result};

/// A Weyl element written as `w = w_c x` with `x` in the coset
/// transversal, together with the attached highest weight
/// `lambda = -w rho - rho`.
#[derive(Debug, Clone)]
pub struct HwhcDecomposition {
    pub x: WeylElement,
    pub w: WeylElement,
    pub lambda: Weight,
}

/// Splits `w = w_c x` when possible. `None` is the classified negative:
/// the module `L(-w rho - rho)` is not a Harish-Chandra module.
pub fn decompose_hwhc(pair: &HermitianPair, w: &WeylElement) -> Option<HwhcDecomposition> {
    let x = pair.w_c().compose(w);
    if !pair.is_coset_rep(&x) {
        return None;
    }
    let rho = &pair.system.rho;
    let lambda = w.apply(rho).neg().sub(rho);
    Some(HwhcDecomposition { x, w: w.clone(), lambda })
}

/// The unitarity test. Returns the witness subdiagram (the support of
/// `x`, empty for the identity) when `x` is unitary, `None` otherwise.
pub fn unitary_subdiagram(
    pair: &HermitianPair,
    x: &WeylElement,
) -> Result<Option<BTreeSet<usize>>> {
    if !pair.is_coset_rep(x) {
        return Err(Error::NotMinimalCosetRep);
    }
    if x.is_identity() {
        return Ok(Some(BTreeSet::new()));
    }
    let support = weyl::support(&pair.system, x);
    if !support.contains(&pair.noncompact) {
        return Ok(None);
    }
    // connectivity is checked explicitly rather than assumed
    let adjacent = |i: usize, j: usize| {
        !pair.system.simple_roots[i - 1]
            .dot(&pair.system.simple_roots[j - 1])
            .is_zero()
    };
    let start = *support.iter().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for &j in &support {
            if !seen.contains(&j) && i != j && adjacent(i, j) {
                seen.insert(j);
                stack.push(j);
            }
        }
    }
    if seen != support {
        return Ok(None);
    }
    let ideal = pair.element_to_ideal(x)?;
    let saturated = pair.supported_ideal(&support)?;
    Ok(if ideal == saturated { Some(support) } else { None })
}

pub fn is_unitary(pair: &HermitianPair, x: &WeylElement) -> Result<bool> {
    Ok(unitary_subdiagram(pair, x)?.is_some())
}

/// `z = (lambda + rho, beta^vee)`.
pub fn z_value(pair: &HermitianPair, lambda: &Weight) -> Rat {
    pair.system
        .copairing(&lambda.add(&pair.system.rho), &pair.system.highest_root)
        .unwrap()
}

/// `z_k = (rho, beta^vee) - k c`.
pub fn z_k(pair: &HermitianPair, k: usize) -> Rat {
    rat(pair.hvee - 1) - rat(k as i64) * pair.spacing
}

/// The root systems `Q(lambda)` and `R(lambda)`: `Q` is the simple
/// component through the highest root of the subsystem generated by
/// `{±beta}` and the compact roots vanishing on `lambda`; `R` enlarges
/// the generators by the short compact roots not orthogonal to `Q` with
/// `(lambda, alpha^vee) = 1`, and coincides with `Q` in the simply laced
/// types or when no such root exists. `lambda` must be dominant for the
/// compact positives.
pub fn qr_systems(
    pair: &HermitianPair,
    lambda: &Weight,
) -> Result<(RootSubsystem, RootSubsystem)> {
    let beta = pair.system.highest_root.clone();
    let mut seeds: Vec<Root> = vec![beta.clone()];
    for g in &pair.compact_positive {
        if lambda.dot(g).is_zero() {
            seeds.push(g.clone());
        }
    }
    let psi1 = pair.system.subsystem_generated(&seeds)?;
    let q = psi1.component_containing(&pair.system, &beta)?;

    let two_lengths = pair
        .system
        .positive_roots
        .iter()
        .map(|g| g.dot(g))
        .collect::<BTreeSet<_>>()
        .len()
        > 1;
    if !two_lengths {
        return Ok((q.clone(), q));
    }
    // compact dominance of lambda leaves only positive candidates
    let extras: Vec<Root> = pair
        .compact_positive
        .iter()
        .filter(|g| !pair.system.is_long_root(g))
        .filter(|g| q.positives.iter().any(|h| !g.dot(h).is_zero()))
        .filter(|g| pair.system.copairing(lambda, g).unwrap() == rat(1))
        .cloned()
        .collect();
    if extras.is_empty() {
        return Ok((q.clone(), q));
    }
    let mut seeds2 = seeds;
    seeds2.extend(extras);
    let psi2 = pair.system.subsystem_generated(&seeds2)?;
    let r = psi2.component_containing(&pair.system, &beta)?;
    Ok((q, r))
}

/// A maximal sequence of strongly orthogonal positive noncompact roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeResult {
    pub roots: Vec<Root>,
}

impl CascadeResult {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Greedy cascade inside a subsystem: repeatedly take the highest
/// noncompact positive root strongly orthogonal to everything chosen so
/// far. The length is the split rank of the subsystem.
pub fn split_rank_cascade(pair: &HermitianPair, sub: &RootSubsystem) -> CascadeResult {
    let mut chosen: Vec<Root> = Vec::new();
    loop {
        let next = sub
            .positives
            .iter()
            .filter(|g| pair.pplus_index_of(g).is_ok())
            .filter(|g| {
                chosen.iter().all(|c| {
                    g.dot(c).is_zero()
                        && !pair.system.is_root(&g.add(c))
                        && !pair.system.is_root(&g.sub(c))
                })
            })
            .max_by_key(|g| (pair.system.root_height(g).unwrap(), (*g).clone()));
        match next {
            Some(g) => chosen.push(g.clone()),
            None => break,
        }
    }
    CascadeResult { roots: chosen }
}

/// Cascade of the full root system of the pair; its length is the split
/// rank from the constants table.
pub fn full_cascade(pair: &HermitianPair) -> Result<CascadeResult> {
    let all: Vec<Root> = pair.system.positive_roots.clone();
    let sub = pair.system.subsystem_generated(&all)?;
    Ok(split_rank_cascade(pair, &sub))
}

/// The last reduction point `b = hvee_Q - 1 + (r_R - r_Q)/2`.
pub fn last_reduction_point(pair: &HermitianPair, lambda: &Weight) -> Result<Rat> {
    let (q, r) = qr_systems(pair, lambda)?;
    let hq = q.dual_coxeter_number(&pair.system)?;
    let rq = split_rank_cascade(pair, &q).len() as i64;
    let rr = split_rank_cascade(pair, &r).len() as i64;
    Ok(rat(hq - 1) + Rat::new(rr - rq, 2))
}

/// Gelfand–Kirillov dimension and associated-variety index of the
/// unitary module with highest weight `lambda`. With
/// `k = -(lambda, beta^vee)/c`: above `r - 1` the module has maximal GK
/// dimension and index `r`; otherwise `k` is a nonnegative integer, the
/// index, with dimension `k z_{k-1}`.
pub fn gk_and_av(pair: &HermitianPair, lambda: &Weight) -> Result<(Rat, usize)> {
    let r = pair.split_rank;
    let k = -pair
        .system
        .copairing(lambda, &pair.system.highest_root)?
        / pair.spacing;
    if k > rat(r as i64 - 1) {
        let gk = rat(r as i64) * z_k(pair, r - 1);
        return Ok((gk, r));
    }
    if *k.denom() != 1 || k.is_negative() {
        return Err(Error::NotUnitary);
    }
    let ki = *k.numer() as usize;
    let gk = if ki == 0 {
        Rat::zero()
    } else {
        rat(ki as i64) * z_k(pair, ki - 1)
    };
    Ok((gk, ki))
}

/// Dual Coxeter number of the subsystem supported on a subdiagram; 0 for
/// the empty one.
pub fn subdiagram_hvee(pair: &HermitianPair, nodes: &BTreeSet<usize>) -> Result<i64> {
    if nodes.is_empty() {
        return Ok(0);
    }
    let seeds: Vec<Root> = nodes
        .iter()
        .map(|&i| pair.system.simple_root(i).cloned())
        .collect::<Result<_>>()?;
    let sub = pair.system.subsystem_generated(&seeds)?;
    sub.dual_coxeter_number(&pair.system)
}

/// Number of unitary modules in the cell with associated-variety index
/// `k`, by the subdiagram census: for `k < r` the connected subdiagrams
/// through the noncompact node with `hvee' = hvee - k c`, and for `k = r`
/// those (including the empty one) with `hvee' < hvee - (r-1) c`. The
/// result is checked against the direct census over the transversal.
pub fn count_nk(pair: &HermitianPair, k: usize) -> Result<u64> {
    let r = pair.split_rank;
    if k > r {
        return Err(Error::KOutOfRange(k, r));
    }
    let mut hvees: Vec<i64> = vec![0]; // the empty subdiagram
    for s in pair.connected_subdiagrams() {
        hvees.push(subdiagram_hvee(pair, &s)?);
    }
    let target = rat(pair.hvee) - rat(k as i64) * pair.spacing;
    let floor = rat(pair.hvee) - rat(r as i64 - 1) * pair.spacing;
    let count = if k < r {
        hvees[1..].iter().filter(|&&h| rat(h) == target).count() as u64
    } else {
        hvees.iter().filter(|&&h| rat(h) < floor).count() as u64
    };
    let direct = nk_direct_census(pair, k)?;
    if count != direct {
        return Err(Error::InternalInconsistency(format!(
            "cell count mismatch for k={k}: census {count} vs direct {direct}"
        )));
    }
    Ok(count)
}

/// Counts unitary representatives whose associated-variety index is `k`,
/// directly over the transversal.
pub fn nk_direct_census(pair: &HermitianPair, k: usize) -> Result<u64> {
    let mut count = 0;
    for ideal in pair.enumerate_ideals() {
        let x = pair.ideal_to_element(&ideal)?;
        if !is_unitary(pair, &x)? {
            continue;
        }
        let lambda = pair.weight_of(&x)?;
        let (_, ki) = gk_and_av(pair, &lambda)?;
        if ki == k {
            count += 1;
        }
    }
    Ok(count)
}

/// The closed-form cell counts of the constants table, for cross-checking
/// the census.
pub fn nk_closed_form(pair: &HermitianPair, k: usize) -> Result<u64> {
    use crate::hermitian::PairFamily::*;
    let r = pair.split_rank;
    if k > r {
        return Err(Error::KOutOfRange(k, r));
    }
    if k == 0 {
        return Ok(1);
    }
    Ok(match pair.family {
        SuPQ { p, q } => {
            let m = p.min(q) as u64;
            let big = p.max(q) as u64;
            if (k as u64) < m {
                k as u64 + 1
            } else {
                m * (2 * big - m - 1) / 2 + 1
            }
        }
        SpR { n } => {
            if k < n {
                if k.is_multiple_of(2) { 1 } else { 0 }
            } else {
                (n / 2) as u64 + 1
            }
        }
        SoStar { n } => {
            if k + 2 <= r {
                1
            } else if k + 1 == r {
                if n % 2 == 0 {
                    2
                } else {
                    1
                }
            } else {
                (3 * n - 3 * r - 3) as u64
            }
        }
        SoOdd { n } => match k {
            1 => 0,
            _ => n as u64,
        },
        SoEven { n } => match k {
            1 => 2,
            _ => n as u64 - 1,
        },
        E6 => match k {
            1 => 0,
            _ => 8,
        },
        E7 => match k {
            1 => 0,
            2 => 1,
            _ => 8,
        },
    })
}

/// One row of the unitary catalog: a connected subdiagram (or the empty
/// one), its representative, highest weight, and invariants.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub subdiagram: BTreeSet<usize>,
    pub ideal: PIdeal,
    pub x: WeylElement,
    pub lambda: Weight,
    pub lambda_fundamental: Vec<Rat>,
    pub hvee_prime: i64,
    pub k_index: usize,
    pub gk_dim: Rat,
}

/// All unitary modules of the pair: the empty diagram first, then one
/// entry per connected subdiagram through the noncompact node, by size.
pub fn unitary_catalog(pair: &HermitianPair) -> Result<Vec<CatalogEntry>> {
    let mut subdiagrams: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    subdiagrams.extend(pair.connected_subdiagrams());
    let mut out = Vec::with_capacity(subdiagrams.len());
    for s in subdiagrams {
        let ideal = pair.supported_ideal(&s)?;
        let x = pair.ideal_to_element(&ideal)?;
        let lambda = pair.weight_of(&x)?;
        let (gk_dim, k_index) = gk_and_av(pair, &lambda)?;
        out.push(CatalogEntry {
            hvee_prime: subdiagram_hvee(pair, &s)?,
            lambda_fundamental: pair.system.fundamental_coords(&lambda),
            subdiagram: s,
            ideal,
            x,
            lambda,
            k_index,
            gk_dim,
        });
    }
    Ok(out)
}

/// Full per-element report, serialized by the command line front end with
/// rationals rendered as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitarityReport {
    pub is_hwhc: bool,
    pub is_unitary: bool,
    /// Witness subdiagram when unitary; empty otherwise.
    pub subdiagram: Vec<usize>,
    pub x_word: String,
    pub w_word: String,
    pub length: usize,
    pub lambda: Vec<String>,
    pub lambda_fundamental: Vec<String>,
    pub z: String,
    pub b_last: String,
    pub q_type: String,
    pub r_type: String,
    /// Associated-variety index; absent when the defining ratio is not a
    /// usable integer (possible only for non-unitary weights).
    pub k_index: Option<usize>,
    pub gk_dim: Option<String>,
    pub rationally_smooth: bool,
    pub smooth: bool,
}

/// Builds the report for a transversal representative.
pub fn report_for(pair: &HermitianPair, x: &WeylElement) -> Result<UnitarityReport> {
    if !pair.is_coset_rep(x) {
        return Err(Error::NotMinimalCosetRep);
    }
    let w = pair.w_c().compose(x);
    let lambda = pair.weight_of(x)?;
    let witness = unitary_subdiagram(pair, x)?;
    let (q, r) = qr_systems(pair, &lambda)?;
    let b = last_reduction_point(pair, &lambda)?;
    // the index formula presupposes unitarity; report nothing otherwise
    let (k_index, gk_dim) = if witness.is_some() {
        let (gk, ki) = gk_and_av(pair, &lambda)?;
        (Some(ki), Some(rat_str(gk)))
    } else {
        (None, None)
    };
    let smooth = crate::schubert::is_smooth(pair, x)?;
    let rationally_smooth = crate::schubert::is_rationally_smooth(pair, x)?;
    Ok(UnitarityReport {
        is_hwhc: true,
        is_unitary: witness.is_some(),
        subdiagram: witness.map(|s| s.into_iter().collect()).unwrap_or_default(),
        x_word: pair.word_of_ideal(&pair.element_to_ideal(x)?)?.to_string(),
        w_word: weyl::reduced_word(&pair.system, &w).to_string(),
        length: weyl::length(&pair.system, x),
        lambda: lambda.coords.iter().map(|c| rat_str(*c)).collect(),
        lambda_fundamental: pair
            .system
            .fundamental_coords(&lambda)
            .iter()
            .map(|c| rat_str(*c))
            .collect(),
        z: rat_str(z_value(pair, &lambda)),
        b_last: rat_str(b),
        q_type: q.classify(&pair.system)?.to_string(),
        r_type: r.classify(&pair.system)?.to_string(),
        k_index,
        gk_dim,
        rationally_smooth,
        smooth,
    })
}
