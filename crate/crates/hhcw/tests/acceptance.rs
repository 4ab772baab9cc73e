//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Every expected value asserted here is pinned exactly (all arithmetic
//! in the library is rational, so there are no tolerances anywhere).

use std::collections::{BTreeMap, BTreeSet};

use hhcw::cli;
use hhcw::hermitian::{pair_from_name, HermitianPair, PairFamily};
use hhcw::linalg::{frac, rat, Rat, Weight};
use hhcw::rootsys::{build_root_system, CartanFamily, CartanType, RootSystem};
use hhcw::unitarity::{self, unitary_catalog};
use hhcw::weyl::{self, WeylElement};
use hhcw::schubert;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn pair(name: &str) -> HermitianPair {
    pair_from_name(name).unwrap()
}

/// The pairs of the cell-count criterion; most other exhaustive criteria
/// run over the same list.
const CENSUS_PAIRS: [&str; 9] = [
    "su(3,2)",
    "su(2,4)",
    "sp(4,R)",
    "so*(8)",
    "so*(10)",
    "so(2,7)",
    "so(2,8)",
    "e6(-14)",
    "e7(-25)",
];

fn elements_of(p: &HermitianPair) -> Vec<WeylElement> {
    p.enumerate_ideals()
        .iter()
        .map(|i| p.ideal_to_element(i).unwrap())
        .collect()
}

#[test]
fn criterion_01_constants_table() {
    let expected = [
        ("su(p,q)", "min{p,q}", "1", "p+q"),
        ("sp(n,R)", "n", "1/2", "n+1"),
        ("so*(2n)", "[n/2]", "2", "2n-2"),
        ("so(2,2n-1)", "2", "n-3/2", "2n-1"),
        ("so(2,2n-2)", "2", "n-2", "2n-2"),
        ("e6(-14)", "2", "3", "12"),
        ("e7(-25)", "3", "4", "18"),
    ];
    let rows = cli::catalog_rows();
    assert_eq!(rows.len(), 7);
    for (row, want) in rows.iter().zip(expected.iter()) {
        assert_eq!(
            (row.0.as_str(), row.1.as_str(), row.2.as_str(), row.3.as_str()),
            *want
        );
    }
    let (code, out) = cli::run_capture(&["catalog"]);
    assert_eq!(code, 0);
    for want in expected {
        assert!(out.contains(want.0));
    }
    // concrete instances of every family
    let concrete: [(&str, usize, Rat, i64); 10] = [
        ("su(3,2)", 2, rat(1), 5),
        ("su(2,4)", 2, rat(1), 6),
        ("sp(3,R)", 3, frac(1, 2), 4),
        ("sp(4,R)", 4, frac(1, 2), 5),
        ("so*(8)", 2, rat(2), 6),
        ("so*(10)", 2, rat(2), 8),
        ("so(2,7)", 2, frac(5, 2), 7),
        ("so(2,8)", 2, rat(3), 8),
        ("e6(-14)", 2, rat(3), 12),
        ("e7(-25)", 3, rat(4), 18),
    ];
    for (name, r, c, hvee) in concrete {
        let p = pair(name);
        assert_eq!((p.split_rank, p.spacing, p.hvee), (r, c, hvee), "{name}");
    }
    println!("criterion 01 (constants of the seven families): PASS");
}

#[test]
fn criterion_02_sp3_counts() {
    let p = pair("sp(3,R)");
    let xs = elements_of(&p);
    assert_eq!(xs.len(), 8);
    let rs = xs
        .iter()
        .filter(|x| schubert::is_rationally_smooth(&p, x).unwrap())
        .count();
    let sm = xs
        .iter()
        .filter(|x| schubert::is_smooth(&p, x).unwrap())
        .count();
    let un = xs
        .iter()
        .filter(|x| unitarity::is_unitary(&p, x).unwrap())
        .count();
    assert_eq!((rs, sm, un), (6, 4, 4));
    let (code, out) = cli::run_capture(&["enumerate", "--pair", "sp(3,R)"]);
    assert_eq!(code, 0);
    assert!(out.contains("8 total, 6 rationally smooth, 4 smooth, 4 unitary"));
    println!("criterion 02 (sp(3,R) enumeration counts 8/6/4/4): PASS");
}

#[test]
fn criterion_03_cell_count_tables() {
    let expected: [(&str, &[u64]); 9] = [
        ("su(3,2)", &[1, 2, 4]),
        ("su(2,4)", &[1, 2, 6]),
        ("sp(4,R)", &[1, 0, 1, 0, 3]),
        ("so*(8)", &[1, 2, 3]),
        ("so*(10)", &[1, 1, 6]),
        ("so(2,7)", &[1, 0, 4]),
        ("so(2,8)", &[1, 2, 4]),
        ("e6(-14)", &[1, 0, 8]),
        ("e7(-25)", &[1, 0, 1, 8]),
    ];
    for (name, table) in expected {
        let p = pair(name);
        assert_eq!(p.split_rank + 1, table.len(), "{name}");
        let mut total = 0;
        for (k, want) in table.iter().enumerate() {
            // count_nk itself insists the subdiagram census equals the
            // direct census over the transversal
            let census = unitarity::count_nk(&p, k).unwrap();
            let closed = unitarity::nk_closed_form(&p, k).unwrap();
            assert_eq!(census, *want, "{name} k={k}");
            assert_eq!(closed, *want, "{name} k={k}");
            total += census;
        }
        assert_eq!(
            total,
            p.connected_subdiagrams().len() as u64 + 1,
            "{name}: sum of N_k"
        );
    }
    println!("criterion 03 (cell count tables, census = closed form): PASS");
}

fn fw_expect(rank: usize, terms: &[(usize, i64)]) -> Vec<Rat> {
    let mut v = vec![Rat::from_integer(0); rank];
    for &(i, c) in terms {
        v[i - 1] += rat(c);
    }
    v
}

type WeightTableRow = (Vec<usize>, Vec<(usize, i64)>);

#[test]
fn criterion_04_e6_e7_weight_tables() {
    let e6_rows: Vec<WeightTableRow> = vec![
        (vec![], vec![(1, -12)]),
        (vec![1], vec![(1, -12), (2, 1)]),
        (vec![1, 3], vec![(1, -12), (4, 1)]),
        (vec![1, 3, 4], vec![(1, -12), (3, 1), (5, 1)]),
        (vec![1, 3, 4, 5], vec![(1, -12), (3, 2), (6, 1)]),
        (vec![1, 3, 4, 2], vec![(1, -11), (5, 2)]),
        (vec![1, 3, 4, 5, 2], vec![(1, -8), (6, 4)]),
        (vec![1, 3, 4, 5, 6], vec![(1, -12), (3, 3)]),
        (vec![1, 2, 3, 4, 5, 6], vec![]),
    ];
    let e7_rows: Vec<WeightTableRow> = vec![
        (vec![], vec![(7, -18)]),
        (vec![7], vec![(1, 1), (7, -18)]),
        (vec![7, 6], vec![(3, 1), (7, -18)]),
        (vec![7, 6, 5], vec![(4, 1), (7, -18)]),
        (vec![7, 6, 5, 4], vec![(2, 1), (5, 1), (7, -18)]),
        (vec![7, 6, 5, 4, 3], vec![(2, 2), (6, 1), (7, -18)]),
        (vec![7, 6, 5, 4, 3, 1], vec![(2, 3), (7, -17)]),
        (vec![7, 6, 5, 4, 2], vec![(5, 2), (7, -18)]),
        (vec![7, 6, 5, 4, 3, 2], vec![(6, 5), (7, -18)]),
        (vec![7, 6, 5, 4, 3, 2, 1], vec![]),
    ];
    for (name, rows) in [("e6(-14)", e6_rows), ("e7(-25)", e7_rows)] {
        let p = pair(name);
        let rank = p.system.rank();
        let catalog = unitary_catalog(&p).unwrap();
        assert_eq!(catalog.len(), rows.len(), "{name}: row count");
        let by_subdiagram: BTreeMap<BTreeSet<usize>, Vec<Rat>> = catalog
            .into_iter()
            .map(|e| (e.subdiagram, e.lambda_fundamental))
            .collect();
        for (set, terms) in rows {
            let key: BTreeSet<usize> = set.iter().copied().collect();
            let got = by_subdiagram
                .get(&key)
                .unwrap_or_else(|| panic!("{name}: missing subdiagram {key:?}"));
            assert_eq!(*got, fw_expect(rank, &terms), "{name}: {key:?}");
        }
    }
    println!("criterion 04 (exceptional weight tables, 9 + 10 rows): PASS");
}

/// The closed-form highest weight of a subdiagram, per family.
fn closed_form_weight(p: &HermitianPair, s: &BTreeSet<usize>) -> Vec<Rat> {
    let rank = p.system.rank();
    let terms: Vec<(usize, i64)> = match p.family {
        PairFamily::SuPQ { p: pp, q } => {
            let n = (pp + q) as i64;
            if s.is_empty() {
                vec![(pp, -n)]
            } else {
                let a = *s.iter().next().unwrap();
                let b = *s.iter().last().unwrap();
                let p1 = (pp - a + 1) as i64;
                let q1 = (b - pp + 1) as i64;
                vec![
                    (p1 as usize, q1),
                    (pp, -n),
                    ((n - q1) as usize, p1),
                ]
            }
        }
        PairFamily::SpR { n } => {
            if s.is_empty() {
                vec![(n, -(n as i64 + 1))]
            } else {
                let sz = s.len();
                vec![(sz, sz as i64 + 1), (n, -(n as i64 + 1))]
            }
        }
        PairFamily::SoOdd { n } => {
            // at p = n-1 the middle term lands on the short node, where
            // the coefficient doubles (forced by z = hvee' - 1)
            if s.is_empty() {
                vec![(1, -(2 * n as i64 - 1))]
            } else if s.len() == n {
                vec![]
            } else if s.len() == n - 1 {
                vec![(1, -(n as i64 + 1)), (n, 2)]
            } else {
                let sz = s.len() as i64;
                vec![(1, -(2 * n as i64 - sz)), (s.len() + 1, 1)]
            }
        }
        PairFamily::SoEven { n } => {
            let ni = n as i64;
            if s.is_empty() {
                vec![(1, -(2 * ni - 2))]
            } else if s.len() == n {
                vec![]
            } else if !s.contains(&n) && !s.contains(&(n - 1)) {
                // su(1,p) on {1..p}, p <= n-2
                let sz = s.len() as i64;
                if s.len() == n - 2 {
                    vec![(1, -(ni + 1)), (n - 1, 1), (n, 1)]
                } else {
                    vec![(1, -(2 * ni - sz - 1)), (s.len() + 1, 1)]
                }
            } else if s.contains(&(n - 1)) {
                // {1..n-1}
                if n % 2 == 0 {
                    vec![(1, -ni), (n - 1, 2)]
                } else {
                    vec![(1, -ni), (n, 2)]
                }
            } else {
                // {1..n-2, n}
                if n % 2 == 0 {
                    vec![(1, -ni), (n, 2)]
                } else {
                    vec![(1, -ni), (n - 1, 2)]
                }
            }
        }
        PairFamily::SoStar { n } => {
            let ni = n as i64;
            if s.is_empty() {
                vec![(n, -(2 * ni - 2))]
            } else if s.contains(&(n - 1)) {
                // interval {n-q+1..n}: even orthogonal of rank q >= 3;
                // q = n is the full diagram, and at q = n-1 the interval
                // touches the fork so the tail coefficient is -n
                // (forced by z = hvee' - 1)
                let q = s.len() as i64;
                if s.len() == n {
                    vec![]
                } else if s.len() == n - 1 {
                    vec![(s.len(), q - 1), (n, -ni)]
                } else {
                    vec![(s.len(), q - 1), (n, -(2 * ni - 2))]
                }
            } else {
                // su(1,p) on {n-p..n-2} + {n}; at p = n-2 the middle term
                // lands on the fork node and the tail coefficient drops
                // to 2n-3 (forced by z = hvee' - 1)
                let p1 = s.len() as i64;
                if s.len() == n - 1 {
                    vec![(1, ni - 2), (n, -(2 * ni - 4))]
                } else if s.len() == n - 2 {
                    vec![(1, p1 - 1), (n - 1, 1), (n, -(2 * ni - 3))]
                } else {
                    vec![(1, p1 - 1), (s.len() + 1, 1), (n, -(2 * ni - 2))]
                }
            }
        }
        PairFamily::E6 | PairFamily::E7 => unreachable!("covered by criterion 4"),
    };
    let mut v = vec![Rat::from_integer(0); rank];
    for (i, c) in terms {
        v[i - 1] += rat(c);
    }
    v
}

#[test]
fn criterion_05_classical_closed_forms() {
    let mut names: Vec<String> = Vec::new();
    for total in 2..=7usize {
        for pp in 1..total {
            names.push(format!("su({},{})", pp, total - pp));
        }
    }
    for n in 2..=5 {
        names.push(format!("sp({n},R)"));
    }
    for n in 3..=6 {
        names.push(format!("so*({})", 2 * n));
    }
    for m in 3..=11 {
        names.push(format!("so(2,{m})"));
    }
    for name in names {
        let p = pair(&name);
        for entry in unitary_catalog(&p).unwrap() {
            let want = closed_form_weight(&p, &entry.subdiagram);
            assert_eq!(
                entry.lambda_fundamental, want,
                "{name}: subdiagram {:?}",
                entry.subdiagram
            );
        }
    }
    println!("criterion 05 (classical closed-form weights): PASS");
}

#[test]
fn criterion_06_rho_shift_identity() {
    fn check(rs: &RootSystem, w: &WeylElement) {
        let lhs = w.apply(&rs.rho);
        let inv = weyl::inversion_set(rs, w);
        let rhs = rs.rho.sub(&hhcw::linalg::weight_sum(&inv, rs.dim()));
        assert_eq!(lhs, rhs);
    }
    let mut rng = StdRng::seed_from_u64(20250809);
    for (f, r) in [
        (CartanFamily::A, 4),
        (CartanFamily::B, 4),
        (CartanFamily::C, 4),
        (CartanFamily::D, 5),
        (CartanFamily::E, 6),
        (CartanFamily::E, 7),
    ] {
        let rs = build_root_system(CartanType::new(f, r).unwrap()).unwrap();
        for _ in 0..100 {
            let mut w = WeylElement::identity(&rs);
            for _ in 0..rng.gen_range(0..25) {
                let i = rng.gen_range(1..=rs.rank());
                w = w.compose(&WeylElement::simple_reflection(&rs, i).unwrap());
            }
            check(&rs, &w);
        }
    }
    for name in CENSUS_PAIRS {
        let p = pair(name);
        for x in elements_of(&p) {
            check(&p.system, &x);
        }
    }
    println!("criterion 06 (rho shift = inversion sum, 100 random per type + all reps): PASS");
}

#[test]
fn criterion_07_involution_suite() {
    for name in CENSUS_PAIRS {
        let p = pair(name);
        let ideals = p.enumerate_ideals();
        let total = p.pplus.len();
        let mapped: Vec<BTreeSet<Weight>> = ideals
            .iter()
            .map(|i| {
                let x = p.ideal_to_element(i).unwrap();
                let t = p.involution(&x).unwrap();
                assert_eq!(p.involution(&t).unwrap(), x, "{name}: involution");
                assert_eq!(
                    weyl::length(&p.system, &t),
                    total - i.len(),
                    "{name}: length complement"
                );
                let img = p.element_to_ideal(&t).unwrap();
                img.roots.into_iter().collect()
            })
            .collect();
        for (a, ta) in ideals.iter().zip(&mapped) {
            for (b, tb) in ideals.iter().zip(&mapped) {
                let ab = a.roots.iter().all(|g| b.contains(g));
                if ab {
                    assert!(tb.is_subset(ta), "{name}: order reversal");
                }
            }
        }
    }
    println!("criterion 07 (involution: involutive, length-complementary, order-reversing): PASS");
}

#[test]
fn criterion_08_unitary_equals_smooth() {
    for name in CENSUS_PAIRS {
        let p = pair(name);
        let simply_laced = matches!(
            p.family,
            PairFamily::SuPQ { .. }
                | PairFamily::SoEven { .. }
                | PairFamily::SoStar { .. }
                | PairFamily::E6
                | PairFamily::E7
        );
        for x in elements_of(&p) {
            let u = unitarity::is_unitary(&p, &x).unwrap();
            let s = schubert::is_smooth(&p, &x).unwrap();
            let r = schubert::is_rationally_smooth(&p, &x).unwrap();
            assert_eq!(u, s, "{name}");
            assert!(!s || r, "{name}: smooth implies rationally smooth");
            if simply_laced {
                assert_eq!(u, r, "{name}: simply laced");
            }
        }
    }
    println!("criterion 08 (unitary = smooth; = rationally smooth when simply laced): PASS");
}

#[test]
fn criterion_09_reduction_point_cross_check() {
    for name in CENSUS_PAIRS {
        let p = pair(name);
        for entry in unitary_catalog(&p).unwrap() {
            let z = unitarity::z_value(&p, &entry.lambda);
            assert_eq!(z, rat(entry.hvee_prime - 1), "{name}: z = hvee' - 1");
            if entry.subdiagram.is_empty() {
                // the generalized Verma point: z sits at -1, below every
                // reduction point, so the b-comparison does not apply
                continue;
            }
            let b = unitarity::last_reduction_point(&p, &entry.lambda).unwrap();
            assert_eq!(z, b, "{name}: z = b on {:?}", entry.subdiagram);
            let (q, r) = unitarity::qr_systems(&p, &entry.lambda).unwrap();
            assert_eq!(q.roots, r.roots, "{name}: Q = R");
            // Q matches the type of the subdiagram's own system
            let seeds: Vec<Weight> = entry
                .subdiagram
                .iter()
                .map(|&i| p.system.simple_root(i).unwrap().clone())
                .collect();
            let gamma_sub = p.system.subsystem_generated(&seeds).unwrap();
            assert_eq!(
                q.classify(&p.system).unwrap(),
                gamma_sub.classify(&p.system).unwrap(),
                "{name}: type of Q"
            );
        }
    }
    // non-unitary Harish-Chandra modules in the two-length families sit
    // strictly above the last reduction point
    for name in ["so(2,7)", "sp(4,R)"] {
        let p = pair(name);
        for x in elements_of(&p) {
            if unitarity::is_unitary(&p, &x).unwrap() {
                continue;
            }
            let lambda = p.weight_of(&x).unwrap();
            let z = unitarity::z_value(&p, &lambda);
            let b = unitarity::last_reduction_point(&p, &lambda).unwrap();
            assert!(z > b, "{name}: z = {z} should exceed b = {b}");
        }
    }
    println!("criterion 09 (reduction-point cross-check): PASS");
}

#[test]
fn criterion_10_pattern_avoidance() {
    for total in 2..=7usize {
        for pp in 1..total {
            let p = pair(&format!("su({},{})", pp, total - pp));
            for x in elements_of(&p) {
                let w = p.w_c().compose(&x);
                let perm = schubert::permutation_of(&p, &w).unwrap();
                assert_eq!(
                    schubert::avoids_3412_4231(&perm),
                    schubert::is_smooth(&p, &x).unwrap(),
                    "su({},{})",
                    pp,
                    total - pp
                );
            }
        }
    }
    println!("criterion 10 (3412/4231 pattern oracle matches smoothness): PASS");
}

#[test]
fn criterion_11_gk_dimension_suite() {
    for name in CENSUS_PAIRS {
        let p = pair(name);
        let dim = p.system.dim();
        let (gk0, k0) = unitarity::gk_and_av(&p, &Weight::zero(dim)).unwrap();
        assert_eq!((gk0, k0), (rat(0), 0), "{name}: trivial module");
        let verma = p.rho_n.scale(rat(-2));
        let (gkv, kv) = unitarity::gk_and_av(&p, &verma).unwrap();
        assert_eq!(kv, p.split_rank, "{name}: Verma point index");
        assert_eq!(gkv, rat(p.pplus.len() as i64), "{name}: Verma point dimension");
        for entry in unitary_catalog(&p).unwrap() {
            let k_formula = (rat(p.hvee) - rat(entry.hvee_prime)) / p.spacing;
            let expect = if k_formula > rat(p.split_rank as i64 - 1) {
                p.split_rank
            } else {
                assert_eq!(*k_formula.denom(), 1, "{name}");
                *k_formula.numer() as usize
            };
            assert_eq!(entry.k_index, expect, "{name}: {:?}", entry.subdiagram);
            // dimension of the orbit closure at index k
            let want_gk = if entry.k_index == 0 {
                rat(0)
            } else {
                rat(entry.k_index as i64) * unitarity::z_k(&p, entry.k_index - 1)
            };
            assert_eq!(entry.gk_dim, want_gk, "{name}: GK dim");
        }
    }
    println!("criterion 11 (GK dimensions and associated-variety indices): PASS");
}

#[test]
fn criterion_12_bc_discrepancy_census() {
    for n in 2..=6usize {
        for name in [format!("sp({n},R)"), format!("so(2,{})", 2 * n - 1)] {
            let p = pair(&name);
            // so(2,3) maps to sp(2,R); both spell the same census
            let discrepant: Vec<_> = p
                .enumerate_ideals()
                .into_iter()
                .filter(|i| {
                    let x = p.ideal_to_element(i).unwrap();
                    schubert::is_rationally_smooth(&p, &x).unwrap()
                        && !schubert::is_smooth(&p, &x).unwrap()
                })
                .collect();
            let rank = p.system.rank();
            assert_eq!(discrepant.len(), rank - 1, "{name}");
            for ideal in &discrepant {
                let d = p.render_diagram(ideal).unwrap();
                let rows = 1 + d.cells.iter().map(|c| c.0).max().unwrap();
                match p.family {
                    PairFamily::SpR { .. } => {
                        assert_eq!(rows, 1, "{name}: row shape");
                        assert!(ideal.len() >= 2, "{name}: row length");
                    }
                    PairFamily::SoOdd { n } => {
                        let first_row = d.cells.iter().filter(|c| c.0 == 0).count();
                        assert_eq!(first_row, n, "{name}: hook row");
                        assert_eq!(rows, ideal.len() - n + 1, "{name}: hook column");
                        assert!(d.cells.iter().filter(|c| c.0 > 0).all(|c| c.1 == n - 1));
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
    println!("criterion 12 (two-length discrepancy census and shapes): PASS");
}
