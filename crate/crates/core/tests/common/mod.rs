#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use proptest::prelude::*;

use curveforge::arrangement::{algebraic_intersection, crossing_count};
use curveforge::form::cup_product;
use curveforge::format::{parse_curves, parse_surface};
use curveforge::reduce::reduce_to_minimal;
use curveforge::search::{enumerate_simple_curves, SearchBudget};
use curveforge::systems::{canonical_code, CurveSystem};
use curveforge::torus::{primitive_slopes, slope_pair, square_torus, torus_oracle, wiggle};
use curveforge::{union_map, ChordCurve, EdgeToken, Face, Param, Passage, PolygonComplex};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/v1")
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(data_dir().join(name)).unwrap()
}

pub fn golden_system(surface: &str, curves: &str) -> CurveSystem {
    let c = parse_surface(&golden(surface)).unwrap();
    let f = parse_curves(&golden(curves), &c).unwrap();
    CurveSystem::new(c, f.curves).unwrap()
}

/// A curve pair in general position, possibly far from minimal.
#[derive(Clone, Debug)]
pub struct Pair {
    pub c: PolygonComplex,
    pub a: ChordCurve,
    pub b: ChordCurve,
    /// Slopes when the pair lives on the square torus.
    pub slopes: Option<(i64, i64, i64, i64)>,
}

fn add_fingers(
    c: &PolygonComplex,
    mut a: ChordCurve,
    b: &ChordCurve,
    moves: &[(usize, bool)],
) -> ChordCurve {
    for &(k, above) in moves {
        if let Some(w) = wiggle(&a, b, k % a.len(), above, c) {
            a = w;
        }
    }
    a
}

pub fn torus_pair() -> impl Strategy<Value = Pair> {
    let n = primitive_slopes(4).len();
    (
        0..n,
        0..n,
        any::<bool>(),
        prop::collection::vec((0usize..16, any::<bool>()), 0..4),
    )
        .prop_map(|(i, j, flip, moves)| {
            let slopes = primitive_slopes(4);
            let (p, q) = slopes[i];
            let (r, s) = if flip {
                (-slopes[j].0, -slopes[j].1)
            } else {
                slopes[j]
            };
            let c = square_torus();
            let (a, b) = slope_pair(p, q, r, s).unwrap();
            let a = add_fingers(&c, a, &b, &moves);
            Pair {
                c,
                a,
                b,
                slopes: Some((p, q, r, s)),
            }
        })
}

pub fn octagon() -> PolygonComplex {
    parse_surface("surface oct\nface P: a b a' b' c d c' d'\n").unwrap()
}

/// Simple curves of up to four passages on the genus-2 octagon.
pub fn octagon_curves() -> &'static [ChordCurve] {
    static CURVES: OnceLock<Vec<ChordCurve>> = OnceLock::new();
    CURVES.get_or_init(|| {
        enumerate_simple_curves(&octagon(), SearchBudget::new(4, 10_000_000))
            .unwrap()
            .candidates
            .into_iter()
            .map(|k| k.curve)
            .collect()
    })
}

/// Moves every point of a curve along its edge by `u -> (1 - eps) u`,
/// measured from the start of the edge. The curve keeps its combinatorics.
pub fn squeeze(cv: &ChordCurve, c: &PolygonComplex, eps: Param) -> ChordCurve {
    let one = Param::from_integer(1);
    let f = |u: Param| (one - eps) * u;
    ChordCurve::new(
        cv.passages
            .iter()
            .map(|p| {
                let t = if c.token(p.side).inverted {
                    one - f(one - p.param)
                } else {
                    f(p.param)
                };
                Passage::new(p.side, t)
            })
            .collect(),
    )
}

pub fn octagon_pair() -> impl Strategy<Value = Pair> {
    let n = octagon_curves().len();
    (
        0..n,
        0..n,
        prop::sample::select(vec![(1i64, 7i64), (1, 11), (2, 9), (1, 13), (3, 17)]),
        prop::collection::vec((0usize..16, any::<bool>()), 0..3),
    )
        .prop_filter_map("curves share a point", |(i, j, (num, den), moves)| {
            let c = octagon();
            let a = octagon_curves()[i].clone();
            let b = squeeze(&octagon_curves()[j], &c, Param::new(num, den));
            union_map(&[a.clone(), b.clone()], &c).ok()?;
            let a = add_fingers(&c, a, &b, &moves);
            Some(Pair {
                c,
                a,
                b,
                slopes: None,
            })
        })
}

pub fn any_pair() -> impl Strategy<Value = Pair> {
    prop_oneof![torus_pair(), octagon_pair()]
}

pub fn check_reduced_is_bigon_free(p: &Pair) -> Result<(), TestCaseError> {
    let (r, n) = reduce_to_minimal(&p.a, &p.b, &p.c).unwrap();
    prop_assert!(r.validate(&p.c).unwrap().simple);
    let m = union_map(&[r.clone(), p.b.clone()], &p.c).unwrap();
    prop_assert!(m.bigon_faces().is_empty());
    prop_assert_eq!(n, crossing_count(&r, &p.b, &p.c));
    prop_assert!(n <= crossing_count(&p.a, &p.b, &p.c));
    if let Some((a, b, c, d)) = p.slopes {
        prop_assert_eq!(n as u64, torus_oracle(a, b, c, d).unwrap());
    }
    Ok(())
}

pub fn check_antisymmetry(p: &Pair) -> Result<(), TestCaseError> {
    prop_assert_eq!(
        algebraic_intersection(&p.a, &p.b, &p.c),
        -algebraic_intersection(&p.b, &p.a, &p.c)
    );
    Ok(())
}

pub fn check_algebraic_bound(p: &Pair) -> Result<(), TestCaseError> {
    let alg = algebraic_intersection(&p.a, &p.b, &p.c).unsigned_abs() as usize;
    prop_assert!(alg <= crossing_count(&p.a, &p.b, &p.c));
    let (_, n) = reduce_to_minimal(&p.a, &p.b, &p.c).unwrap();
    prop_assert!(alg <= n);
    prop_assert_eq!(alg % 2, n % 2);
    Ok(())
}

pub fn check_cup_matches_algebraic(p: &Pair) -> Result<(), TestCaseError> {
    let (x, y) = (p.a.crossing_vector(&p.c), p.b.crossing_vector(&p.c));
    let cup = cup_product(&p.c, &x, &y);
    prop_assert_eq!(cup, -cup_product(&p.c, &y, &x));
    prop_assert_eq!(cup.abs(), algebraic_intersection(&p.a, &p.b, &p.c).abs());
    Ok(())
}

pub fn check_normalize(p: &Pair) -> Result<(), TestCaseError> {
    let n = p.a.normalize(&p.c);
    prop_assert_eq!(n.normalize(&p.c), n.clone());
    prop_assert!(n.validate(&p.c).unwrap().simple);
    prop_assert_eq!(
        n.homology_class(&p.c).unwrap(),
        p.a.homology_class(&p.c).unwrap()
    );
    Ok(())
}

pub fn check_homology_under_rerouting(p: &Pair) -> Result<(), TestCaseError> {
    let (r, _) = reduce_to_minimal(&p.a, &p.b, &p.c).unwrap();
    prop_assert_eq!(
        r.homology_class(&p.c).unwrap(),
        p.a.homology_class(&p.c).unwrap()
    );
    Ok(())
}

pub fn check_euler_sum(p: &Pair) -> Result<(), TestCaseError> {
    let m = union_map(&[p.a.clone(), p.b.clone()], &p.c).unwrap();
    let total: i64 = m.regions.iter().map(|r| r.euler).sum::<i64>()
        + m.crossing_vertex_count() as i64
        - m.crossing_edge_count() as i64;
    prop_assert_eq!(total, p.c.surface_info().euler);
    Ok(())
}

/// The one-face complex with its word rotated by `rot`, the labels in
/// `flip` reversed, and every label renamed; curves are carried along.
/// Parameters run along the face boundary, so reversing a label leaves
/// them alone.
pub fn relabel(
    c: &PolygonComplex,
    curves: &[ChordCurve],
    rot: usize,
    flip: u32,
) -> (PolygonComplex, Vec<ChordCurve>) {
    let n = c.face_len(0);
    let rot = rot % n;
    let flipped = |s: usize| flip >> (c.label_of(s) % 32) & 1 == 1;
    let tokens: Vec<EdgeToken> = (0..n)
        .map(|i| {
            let s = c.side_at(0, (i + rot) % n);
            let t = c.token(s);
            EdgeToken::new(
                format!("z{}", c.label_count() - c.label_of(s)),
                t.inverted != flipped(s),
            )
        })
        .collect();
    let d = PolygonComplex::new(
        "relabelled",
        vec![Face {
            name: "Q".into(),
            tokens,
        }],
    )
    .unwrap();
    let moved = curves
        .iter()
        .map(|cv| {
            ChordCurve::new(
                cv.passages
                    .iter()
                    .map(|p| {
                        let pos = (c.side(p.side).pos + n - rot) % n;
                        Passage::new(d.side_at(0, pos), p.param)
                    })
                    .collect(),
            )
        })
        .collect();
    (d, moved)
}

pub fn check_code_invariance(
    p: &Pair,
    rot: usize,
    flip: u32,
    swap: bool,
) -> Result<(), TestCaseError> {
    let curves = vec![p.a.clone(), p.b.clone()];
    let before = canonical_code(&union_map(&curves, &p.c).unwrap());
    let (d, mut moved) = relabel(&p.c, &curves, rot, flip);
    if swap {
        moved.reverse();
    }
    let after = canonical_code(&union_map(&moved, &d).unwrap());
    prop_assert_eq!(before, after);
    Ok(())
}

pub const CASES: u32 = 128;
