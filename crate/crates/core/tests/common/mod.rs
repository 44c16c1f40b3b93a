#![allow(dead_code)]

use std::path::PathBuf;

use genus_core::{generalized_petersen, named_graph, parse_graph6, Graph, IntPoly, NamedGraph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

pub fn catalog(n: usize) -> PathBuf {
    data_path(&format!("cubic{n:02}.g6"))
}

pub fn catalog_graphs(n: usize) -> Vec<(String, Graph)> {
    std::fs::read_to_string(catalog(n))
        .unwrap()
        .lines()
        .map(|l| (l.to_string(), parse_graph6(l).unwrap()))
        .collect()
}

/// Catalog sizes and SHA-256 digests of the shipped fixtures.
pub const CATALOGS: [(usize, usize, &str); 5] = [
    (
        8,
        5,
        "2df60250e688a43e898857b18ea19b6e2065eea4f596e40fe44b5d5071a0901a",
    ),
    (
        10,
        19,
        "d00445bfd511406ecb1a58dc1f4f23d0db8eb64576e9d044ea32918f3fb5664e",
    ),
    (
        12,
        85,
        "514b4d4ea95cd4eb2e6912ebda5fda52749cc55ef821332ed5f1ead64d02128c",
    ),
    (
        14,
        509,
        "5474484daffb6ade310ebdd88b1d495ec8f76abbde36083e9f06be6909fabc32",
    ),
    (
        16,
        4060,
        "7928ad717f533c3e36104a4a872eb87f4ecb8c00b7f5cbc958db41d916fd2582",
    ),
];

pub struct ReferenceRow {
    pub name: &'static str,
    pub order: usize,
    pub coeffs: &'static [i64],
    /// Expected non-real root `re ± im i`.
    pub root: (f64, f64),
    /// Expected `|Im z| / √3` as text, so its precision is known.
    pub radius: &'static str,
    /// Expected monic quadratic factor `(b, c)`.
    pub quadratic: (f64, f64),
}

pub const REFERENCE: [ReferenceRow; 6] = [
    ReferenceRow {
        name: "G(8,2)",
        order: 16,
        coeffs: &[2, 84, 2074, 23536, 39840],
        root: (-0.01999390944, 0.03710524561),
        radius: "0.02142272354",
        quadratic: (0.03998781888, 0.001776555666),
    },
    ReferenceRow {
        name: "G18",
        order: 18,
        coeffs: &[2, 94, 2480, 39472, 165824, 54272],
        root: (-0.01496753672, 0.038599441),
        radius: "0.022285398",
        quadratic: (0.02993507344, 0.001713944001),
    },
    ReferenceRow {
        name: "G(10,2)",
        order: 20,
        coeffs: &[2, 100, 2494, 47540, 411400, 587040],
        root: (-0.00896278346, 0.04522812336),
        radius: "0.0261124692",
        quadratic: (0.01792556692, 0.00212591463),
    },
    ReferenceRow {
        name: "G20",
        order: 20,
        coeffs: &[2, 104, 2964, 56602, 431656, 557248],
        root: (-0.011539073495, 0.0389911954),
        radius: "0.0225115771616",
        quadratic: (0.023078147, 0.001653463536),
    },
    ReferenceRow {
        name: "G22",
        order: 22,
        coeffs: &[2, 114, 3550, 76726, 851384, 2570304, 692224],
        root: (-0.0085736029, 0.03859372887),
        radius: "0.02228209975",
        quadratic: (0.0171472058, 0.001562982575),
    },
    ReferenceRow {
        name: "G(12,2)",
        order: 24,
        coeffs: &[2, 120, 3508, 75088, 1144338, 7244496, 8309664],
        root: (-0.002315938876, 0.04585954927),
        radius: "0.02647702312",
        quadratic: (0.004631877752, 0.002108461832),
    },
];

pub fn reference_graph(row: &ReferenceRow) -> Graph {
    match row.name {
        "G(8,2)" => generalized_petersen(8, 2).unwrap(),
        "G(10,2)" => generalized_petersen(10, 2).unwrap(),
        "G(12,2)" => generalized_petersen(12, 2).unwrap(),
        name => named_graph(name).unwrap(),
    }
}

/// Half a unit in the last given decimal place of `text`.
pub fn half_ulp(text: &str) -> f64 {
    let decimals = text.split_once('.').map_or(0, |(_, f)| f.len());
    0.5 * 10f64.powi(-(decimals as i32))
}

/// Small graphs (including multigraphs) whose rotation spaces have at most
/// 2^12 elements.
pub fn small_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = vec![
        ("K1".into(), Graph::from_edges(1, &[]).unwrap()),
        ("K2".into(), Graph::from_edges(2, &[(0, 1)]).unwrap()),
        (
            "C3".into(),
            Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
        ),
        (
            "theta".into(),
            Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap(),
        ),
        (
            "bouquet".into(),
            Graph::from_edges(1, &[(0, 0), (0, 0)]).unwrap(),
        ),
        (
            "dumbbell".into(),
            Graph::from_edges(2, &[(0, 0), (0, 1), (1, 1)]).unwrap(),
        ),
        (
            "W4".into(),
            Graph::from_edges(
                5,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 1),
                ],
            )
            .unwrap(),
        ),
        (
            "K4-e+loop".into(),
            Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 3), (0, 0)])
                .unwrap(),
        ),
        ("K4".into(), parse_graph6("C~").unwrap()),
        ("K33".into(), parse_graph6("EFz_").unwrap()),
        ("prism".into(), generalized_petersen(3, 1).unwrap()),
        ("cube".into(), generalized_petersen(4, 1).unwrap()),
        ("petersen".into(), generalized_petersen(5, 2).unwrap()),
        ("G(6,1)".into(), generalized_petersen(6, 1).unwrap()),
        ("NR10".into(), NamedGraph::NonReal10.build()),
    ];
    for n in [8, 10, 12] {
        out.extend(catalog_graphs(n));
    }
    out
}

/// Random log-concave sequence of positive integers (no internal zeros).
pub fn random_log_concave(rng: &mut ChaCha8Rng) -> IntPoly {
    let len = rng.gen_range(1..=8);
    let mut c: Vec<i64> = vec![rng.gen_range(1..=1000)];
    while c.len() < len {
        let mut next = rng.gen_range(1..=1000);
        if c.len() >= 2 {
            let (a, b) = (c[c.len() - 2], c[c.len() - 1]);
            next = next.min(b * b / a);
        }
        if next == 0 {
            break;
        }
        c.push(next);
    }
    IntPoly::from_i64s(&c)
}

/// Random product of linear factors `p x + q` (p ≥ 1, q ≥ 0) and irreducible
/// quadratics `a x^2 + b x + c` with `b^2 ≥ a c` (roots inside the cone).
pub fn random_cone_product(rng: &mut ChaCha8Rng) -> IntPoly {
    let mut p = IntPoly::from_i64s(&[rng.gen_range(1..=5)]);
    for _ in 0..rng.gen_range(0..=3) {
        p = &p * &IntPoly::from_i64s(&[rng.gen_range(0..=20), rng.gen_range(1..=5)]);
    }
    let target = rng.gen_range(1..=3);
    let mut quadratics = 0;
    while quadratics < target {
        let a: i64 = rng.gen_range(1..=20);
        let b: i64 = rng.gen_range(1..=40);
        let c: i64 = rng.gen_range(1..=400);
        if b * b >= a * c && b * b < 4 * a * c {
            p = &p * &IntPoly::from_i64s(&[c, b, a]);
            quadratics += 1;
        }
    }
    p
}

/// Product of distinct integer linear factors `x - r`.
pub fn random_real_rooted(rng: &mut ChaCha8Rng) -> (IntPoly, Vec<i64>) {
    let degree = rng.gen_range(1..=8);
    let mut roots: Vec<i64> = Vec::new();
    while roots.len() < degree {
        let r = rng.gen_range(-30..=30);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    let p = roots.iter().fold(IntPoly::from_i64s(&[1]), |acc, &r| {
        &acc * &IntPoly::from_i64s(&[-r, 1])
    });
    (p, roots)
}
