//! The union of a family of chord curves as a 4-valent combinatorial map.
//!
//! Each face is drawn as a strictly convex polygon: the boundary point at
//! side position `pos` and parameter `t` sits at `(x, x²)` with `x = pos + t`.
//! Crossings are decided from the cyclic order of chord endpoints; only the
//! order of crossings along a chord that meets two mutually crossing chords
//! needs coordinates, which are then compared exactly.
//!
//! Cutting every face along the chords gives pieces; gluing pieces across side
//! segments gives the complement regions.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::complex::{PolygonComplex, UnionFind};
use crate::curve::{ccw_between, interleaved, BoundaryKey, Chord, ChordArc, ChordCurve};
use crate::error::{Error, Result};
use crate::Param;

/// A transverse intersection between chords of two different curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub face: usize,
    /// +1 when the tangents of the first and second owner form a
    /// counterclockwise frame.
    pub sign: i32,
    /// `(curve, chord)` of each owner; the first owner has the smaller curve id.
    pub owners: [(usize, usize); 2],
}

/// A crossing together with its exact location in the face's reference polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocatedCrossing {
    pub crossing: Crossing,
    pub point: (BigRational, BigRational),
}

/// Complement region of a curve family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    pub id: usize,
    pub pieces: usize,
    pub euler: i64,
    pub boundary_components: usize,
    pub disk: bool,
}

/// An edge of the union map: the stretch of one curve between consecutive
/// crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEdge {
    pub curve: usize,
    pub from: usize,
    pub to: usize,
    /// Indices into the curve's passages crossed along the way, in order.
    pub passages: Vec<usize>,
    pub loop_only: bool,
}

/// A bigon: a disk region bounded by one edge of each curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigon {
    pub region: usize,
    pub face: usize,
    pub edges: [usize; 2],
}

#[derive(Clone, Debug)]
struct ChordInfo {
    curve: usize,
    index: usize,
    chord: Chord,
    /// crossing ids sorted from the chord's start to its end
    crossings: Vec<usize>,
}

/// The union map of a curve family together with its complement.
#[derive(Clone, Debug)]
pub struct CurveMap {
    pub crossings: Vec<Crossing>,
    pub curve_count: usize,
    /// Vertices `0..crossings.len()` are crossings; later ones stand on
    /// curves without crossings.
    pub vertex_count: usize,
    pub edges: Vec<MapEdge>,
    /// Outgoing darts at each vertex in counterclockwise order. Dart `2e`
    /// follows edge `e` forward, `2e + 1` backward.
    pub rotation: Vec<Vec<usize>>,
    pub faces: Vec<Vec<usize>>,
    pub dart_face: Vec<usize>,
    /// Region to the left of each dart.
    pub dart_region: Vec<usize>,
    pub face_region: Vec<usize>,
    pub regions: Vec<Region>,
    /// Region containing each side segment, keyed by side and segment index.
    segment_region: BTreeMap<(usize, usize), usize>,
    /// Sorted curve parameters on each side.
    side_points: Vec<Vec<Param>>,
}

pub fn boundary_coordinate(key: &BoundaryKey) -> BigRational {
    BigRational::from_integer(BigInt::from(key.pos as i64))
        + BigRational::new(
            BigInt::from(*key.param.numer()),
            BigInt::from(*key.param.denom()),
        )
}

fn point_of(key: &BoundaryKey) -> (BigRational, BigRational) {
    let x = boundary_coordinate(key);
    let y = &x * &x;
    (x, y)
}

fn cross(ax: &BigRational, ay: &BigRational, bx: &BigRational, by: &BigRational) -> BigRational {
    ax * by - ay * bx
}

/// Position of the intersection with `other` along `chord`, in `(0, 1)`.
fn param_along(chord: &Chord, other: &Chord) -> BigRational {
    let (px, py) = point_of(&chord.from_key);
    let (qx, qy) = point_of(&chord.to_key);
    let (rx, ry) = point_of(&other.from_key);
    let (sx, sy) = point_of(&other.to_key);
    let (dx, dy) = (&qx - &px, &qy - &py);
    let (ex, ey) = (&sx - &rx, &sy - &ry);
    let num = cross(&(&rx - &px), &(&ry - &py), &ex, &ey);
    let den = cross(&dx, &dy, &ex, &ey);
    num / den
}

pub fn crossing_point(a: &Chord, b: &Chord) -> (BigRational, BigRational) {
    let s = param_along(a, b);
    let (px, py) = point_of(&a.from_key);
    let (qx, qy) = point_of(&a.to_key);
    (&px + (&qx - &px) * &s, &py + (&qy - &py) * &s)
}

/// Order along `base` of its crossings with `y` and `z`.
fn order_along(base: &Chord, y: &Chord, z: &Chord) -> Ordering {
    if !interleaved(&y.from_key, &y.to_key, &z.from_key, &z.to_key) {
        let ya = if ccw_between(&base.from_key, &base.to_key, &y.from_key) {
            &y.from_key
        } else {
            &y.to_key
        };
        let za = if ccw_between(&base.from_key, &base.to_key, &z.from_key) {
            &z.from_key
        } else {
            &z.to_key
        };
        if ya == za {
            return Ordering::Equal;
        }
        if ccw_between(&base.from_key, za, ya) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else {
        param_along(base, y).cmp(&param_along(base, z))
    }
}

/// Number of crossings between two curves in their current configuration.
pub fn crossing_count(a: &ChordCurve, b: &ChordCurve, c: &PolygonComplex) -> usize {
    let ca = a.chords(c);
    let cb = b.chords(c);
    ca.iter()
        .map(|x| cb.iter().filter(|y| x.crosses(y)).count())
        .sum()
}

/// Number of crossings of an arc with a curve.
pub fn arc_crossing_count(arc: &ChordArc, b: &ChordCurve, c: &PolygonComplex) -> usize {
    let cb = b.chords(c);
    arc.chords(c)
        .iter()
        .map(|x| cb.iter().filter(|y| x.crosses(y)).count())
        .sum()
}

/// Signed count of crossings.
pub fn algebraic_intersection(a: &ChordCurve, b: &ChordCurve, c: &PolygonComplex) -> i64 {
    let ca = a.chords(c);
    let cb = b.chords(c);
    let mut total = 0i64;
    for x in &ca {
        for y in &cb {
            if x.crosses(y) {
                total += x.crossing_sign(y) as i64;
            }
        }
    }
    total
}

fn check_general_position(curves: &[&ChordCurve], c: &PolygonComplex) -> Result<()> {
    let mut seen = std::collections::HashMap::new();
    for (i, cv) in curves.iter().enumerate() {
        for p in &cv.passages {
            if let Some(j) = seen.insert(p.surface_point(c), i) {
                return Err(Error::NotInGeneralPosition(format!(
                    "curves {j} and {i} share the point {}",
                    crate::curve::passage_to_string(p, c)
                )));
            }
        }
    }
    Ok(())
}

/// Every transverse crossing of `a` (first owner) with `b`, with exact points.
pub fn signed_crossings(
    a: &ChordCurve,
    b: &ChordCurve,
    c: &PolygonComplex,
) -> Result<Vec<LocatedCrossing>> {
    check_general_position(&[a, b], c)?;
    let ca = a.chords(c);
    let cb = b.chords(c);
    let mut out = Vec::new();
    for (i, x) in ca.iter().enumerate() {
        for (j, y) in cb.iter().enumerate() {
            if x.crosses(y) {
                out.push(LocatedCrossing {
                    crossing: Crossing {
                        face: x.face,
                        sign: x.crossing_sign(y),
                        owners: [(0, i), (1, j)],
                    },
                    point: crossing_point(x, y),
                });
            }
        }
    }
    Ok(out)
}

/// Builds the union map and complement of `curves`.
pub fn union_map(curves: &[ChordCurve], c: &PolygonComplex) -> Result<CurveMap> {
    let refs: Vec<&ChordCurve> = curves.iter().collect();
    check_general_position(&refs, c)?;
    for (i, cv) in curves.iter().enumerate() {
        let d = cv.validate(c)?;
        if !d.simple {
            return Err(Error::InvalidCurve(format!(
                "curve {i} is not a simple closed curve: {}",
                d.defects.join("; ")
            )));
        }
    }

    let mut chords: Vec<ChordInfo> = Vec::new();
    let mut first_chord = Vec::with_capacity(curves.len());
    for (i, cv) in curves.iter().enumerate() {
        first_chord.push(chords.len());
        for (k, ch) in cv.chords(c).into_iter().enumerate() {
            chords.push(ChordInfo {
                curve: i,
                index: k,
                chord: ch,
                crossings: Vec::new(),
            });
        }
    }
    let mut by_face: Vec<Vec<usize>> = vec![Vec::new(); c.face_count()];
    for (g, ch) in chords.iter().enumerate() {
        by_face[ch.chord.face].push(g);
    }

    // crossings, numbered by face then chord pair
    let mut crossings = Vec::new();
    let mut crossing_chords: Vec<[usize; 2]> = Vec::new();
    for f in 0..c.face_count() {
        let list = &by_face[f];
        for (ii, &g) in list.iter().enumerate() {
            for &h in &list[ii + 1..] {
                if chords[g].curve == chords[h].curve {
                    continue;
                }
                if chords[g].chord.crosses(&chords[h].chord) {
                    let id = crossings.len();
                    crossings.push(Crossing {
                        face: f,
                        sign: chords[g].chord.crossing_sign(&chords[h].chord),
                        owners: [
                            (chords[g].curve, chords[g].index),
                            (chords[h].curve, chords[h].index),
                        ],
                    });
                    crossing_chords.push([g, h]);
                    chords[g].crossings.push(id);
                    chords[h].crossings.push(id);
                }
            }
        }
    }
    // order crossings along each chord
    let mut concurrent = false;
    for g in 0..chords.len() {
        let other = |x: usize| {
            let [a, b] = crossing_chords[x];
            if a == g {
                b
            } else {
                a
            }
        };
        let mut list = std::mem::take(&mut chords[g].crossings);
        let base = chords[g].chord.clone();
        list.sort_by(|&x, &y| {
            let o = order_along(&base, &chords[other(x)].chord, &chords[other(y)].chord);
            if o == Ordering::Equal && x != y {
                concurrent = true;
            }
            o.then(x.cmp(&y))
        });
        chords[g].crossings = list;
    }
    if concurrent {
        return Err(Error::NotInGeneralPosition(
            "three chords pass through one point".into(),
        ));
    }

    // position of each crossing along each of its chords
    let mut slot: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (g, ch) in chords.iter().enumerate() {
        for (q, &x) in ch.crossings.iter().enumerate() {
            slot.insert((x, g), q);
        }
    }

    // ---- pieces: cut each face along its chords ----
    let mut side_points: Vec<Vec<Param>> = vec![Vec::new(); c.side_count()];
    for ch in &chords {
        side_points[ch.chord.to.side].push(ch.chord.to.param);
        side_points[ch.chord.from.side].push(ch.chord.from.param);
    }
    for pts in side_points.iter_mut() {
        pts.sort();
    }

    let mut piece_count = 0usize;
    let mut seg_piece: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    // left and right piece of chord subsegment (g, j)
    let mut sub_left: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut sub_right: BTreeMap<(usize, usize), usize> = BTreeMap::new();

    for f in 0..c.face_count() {
        let mut planar = Planar::default();
        // boundary nodes in ccw order
        let mut boundary: Vec<usize> = Vec::new();
        let mut boundary_seg: Vec<(usize, usize)> = Vec::new(); // segment starting at node
        let mut endpoint_node: BTreeMap<(usize, bool), usize> = BTreeMap::new();
        let mut key_to_chord: BTreeMap<BoundaryKey, (usize, bool)> = BTreeMap::new();
        for &g in &by_face[f] {
            key_to_chord.insert(chords[g].chord.from_key.clone(), (g, true));
            key_to_chord.insert(chords[g].chord.to_key.clone(), (g, false));
        }
        for pos in 0..c.face_len(f) {
            let s = c.side_at(f, pos);
            let corner = planar.node();
            boundary.push(corner);
            boundary_seg.push((s, 0));
            for (j, t) in side_points[s].iter().enumerate() {
                let node = planar.node();
                boundary.push(node);
                boundary_seg.push((s, j + 1));
                let key = BoundaryKey { pos, param: *t };
                let end = key_to_chord[&key];
                endpoint_node.insert(end, node);
            }
        }
        let nb = boundary.len();
        let mut seg_edge = Vec::with_capacity(nb);
        for i in 0..nb {
            seg_edge.push(planar.edge(boundary[i], boundary[(i + 1) % nb]));
        }
        let mut crossing_node: BTreeMap<usize, usize> = BTreeMap::new();
        for &g in &by_face[f] {
            for &x in &chords[g].crossings {
                crossing_node.entry(x).or_insert_with(|| planar.node());
            }
        }
        let mut sub_edge: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &g in &by_face[f] {
            let mut nodes = vec![endpoint_node[&(g, true)]];
            nodes.extend(chords[g].crossings.iter().map(|x| crossing_node[x]));
            nodes.push(endpoint_node[&(g, false)]);
            for j in 0..nodes.len() - 1 {
                sub_edge.insert((g, j), planar.edge(nodes[j], nodes[j + 1]));
            }
        }
        // rotations
        let node_end: BTreeMap<usize, (usize, bool)> =
            endpoint_node.iter().map(|(&k, &n)| (n, k)).collect();
        for i in 0..nb {
            let node = boundary[i];
            let fwd = 2 * seg_edge[i];
            let back = 2 * seg_edge[(i + nb - 1) % nb] + 1;
            let chord_dart = node_end.get(&node).map(|&(g, is_from)| {
                if is_from {
                    2 * sub_edge[&(g, 0)]
                } else {
                    2 * sub_edge[&(g, chords[g].crossings.len())] + 1
                }
            });
            planar.rotation[node] = match chord_dart {
                Some(d) => vec![fwd, d, back],
                None => vec![fwd, back],
            };
        }
        for (&x, &node) in &crossing_node {
            let [ga, gb] = crossing_chords[x];
            let (qa, qb) = (slot[&(x, ga)], slot[&(x, gb)]);
            let a_out = 2 * sub_edge[&(ga, qa + 1)];
            let a_in = 2 * sub_edge[&(ga, qa)] + 1;
            let b_out = 2 * sub_edge[&(gb, qb + 1)];
            let b_in = 2 * sub_edge[&(gb, qb)] + 1;
            planar.rotation[node] = if crossings[x].sign > 0 {
                vec![a_out, b_out, a_in, b_in]
            } else {
                vec![a_out, b_in, a_in, b_out]
            };
        }
        let dart_face = planar.trace();
        let outer = dart_face[2 * seg_edge[0] + 1];
        let mut local: BTreeMap<usize, usize> = BTreeMap::new();
        let mut piece_of = |face: usize| -> usize {
            let next = piece_count + local.len();
            *local.entry(face).or_insert(next)
        };
        for i in 0..nb {
            let pf = dart_face[2 * seg_edge[i]];
            debug_assert_ne!(pf, outer);
            let p = piece_of(pf);
            seg_piece.insert(boundary_seg[i], p);
        }
        for (&(g, j), &e) in &sub_edge {
            let l = piece_of(dart_face[2 * e]);
            let r = piece_of(dart_face[2 * e + 1]);
            sub_left.insert((g, j), l);
            sub_right.insert((g, j), r);
        }
        piece_count += local.len();
    }

    // ---- regions: glue pieces across side segments ----
    let mut uf = UnionFind::new(piece_count);
    let mut glued: Vec<(usize, usize)> = Vec::new();
    for s in 0..c.side_count() {
        let r = c.partner(s);
        if r < s {
            continue;
        }
        let m = side_points[s].len();
        for j in 0..=m {
            let jr = if c.is_mirrored(s) { m - j } else { j };
            let (a, b) = (seg_piece[&(s, j)], seg_piece[&(r, jr)]);
            uf.union(a, b);
            glued.push((s, j));
        }
    }
    let mut region_of_root = BTreeMap::new();
    let mut piece_region = Vec::with_capacity(piece_count);
    for p in 0..piece_count {
        let root = uf.find(p);
        let next = region_of_root.len();
        piece_region.push(*region_of_root.entry(root).or_insert(next));
    }
    let nreg = region_of_root.len();
    let mut euler = vec![0i64; nreg];
    let mut pieces = vec![0usize; nreg];
    for p in 0..piece_count {
        euler[piece_region[p]] += 1;
        pieces[piece_region[p]] += 1;
    }
    for &(s, j) in &glued {
        euler[piece_region[seg_piece[&(s, j)]]] -= 1;
    }
    let mut class_region = vec![usize::MAX; c.vertex_count()];
    for s in 0..c.side_count() {
        let v = c.corner_class(s);
        let reg = piece_region[seg_piece[&(s, 0)]];
        if class_region[v] == usize::MAX {
            class_region[v] = reg;
            euler[reg] += 1;
        } else if class_region[v] != reg {
            return Err(Error::Internal("vertex split between regions".into()));
        }
    }
    let mut segment_region = BTreeMap::new();
    for (&k, &p) in &seg_piece {
        segment_region.insert(k, piece_region[p]);
    }

    // ---- union map ----
    let ncross = crossings.len();
    let mut edges: Vec<MapEdge> = Vec::new();
    let mut edge_first_sub: Vec<(usize, usize)> = Vec::new();
    let mut edge_last_sub: Vec<(usize, usize)> = Vec::new();
    let mut vertex_count = ncross;
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); ncross];
    // out dart along each curve at each crossing, and in dart (reverse)
    let mut out_dart: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut in_dart: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (i, cv) in curves.iter().enumerate() {
        let n = cv.len();
        // (crossing, chord index in curve, global chord, position on chord)
        let mut along: Vec<(usize, usize, usize, usize)> = Vec::new();
        for k in 0..n {
            let g = first_chord[i] + k;
            for (q, &x) in chords[g].crossings.iter().enumerate() {
                along.push((x, k, g, q));
            }
        }
        if along.is_empty() {
            let v = vertex_count;
            vertex_count += 1;
            let e = edges.len();
            edges.push(MapEdge {
                curve: i,
                from: v,
                to: v,
                passages: (0..n).collect(),
                loop_only: true,
            });
            let g = first_chord[i];
            edge_first_sub.push((g, 0));
            edge_last_sub.push((g, 0));
            rotation.push(vec![2 * e, 2 * e + 1]);
            continue;
        }
        let m = along.len();
        for idx in 0..m {
            let (x, k, g, q) = along[idx];
            let (y, k2, g2, q2) = along[(idx + 1) % m];
            let count = if idx + 1 < m && k2 == k {
                0
            } else {
                let d = (k2 + n - k) % n;
                if d == 0 {
                    n
                } else {
                    d
                }
            };
            let e = edges.len();
            edges.push(MapEdge {
                curve: i,
                from: x,
                to: y,
                passages: (0..count).map(|t| (k + t) % n).collect(),
                loop_only: false,
            });
            edge_first_sub.push((g, q + 1));
            edge_last_sub.push((g2, q2));
            out_dart.insert((x, i), 2 * e);
            in_dart.insert((y, i), 2 * e + 1);
        }
    }
    for (x, cr) in crossings.iter().enumerate() {
        let (a, b) = (cr.owners[0].0, cr.owners[1].0);
        let (ao, ai) = (out_dart[&(x, a)], in_dart[&(x, a)]);
        let (bo, bi) = (out_dart[&(x, b)], in_dart[&(x, b)]);
        rotation[x] = if cr.sign > 0 {
            vec![ao, bo, ai, bi]
        } else {
            vec![ao, bi, ai, bo]
        };
    }
    let ndarts = 2 * edges.len();
    let mut dart_vertex = vec![0usize; ndarts];
    let mut rot_index = vec![0usize; ndarts];
    for (v, rot) in rotation.iter().enumerate() {
        for (i, &d) in rot.iter().enumerate() {
            dart_vertex[d] = v;
            rot_index[d] = i;
        }
    }
    let mut dart_face = vec![usize::MAX; ndarts];
    let mut faces = Vec::new();
    for start in 0..ndarts {
        if dart_face[start] != usize::MAX {
            continue;
        }
        let fid = faces.len();
        let mut cycle = Vec::new();
        let mut d = start;
        while dart_face[d] == usize::MAX {
            dart_face[d] = fid;
            cycle.push(d);
            let r = d ^ 1;
            let v = dart_vertex[r];
            let deg = rotation[v].len();
            d = rotation[v][(rot_index[r] + deg - 1) % deg];
        }
        faces.push(cycle);
    }
    let mut dart_region = vec![0usize; ndarts];
    for e in 0..edges.len() {
        dart_region[2 * e] = piece_region[sub_left[&edge_first_sub[e]]];
        dart_region[2 * e + 1] = piece_region[sub_right[&edge_last_sub[e]]];
    }
    let mut face_region = Vec::with_capacity(faces.len());
    let mut boundary_components = vec![0usize; nreg];
    for cycle in &faces {
        let reg = dart_region[cycle[0]];
        if cycle.iter().any(|&d| dart_region[d] != reg) {
            return Err(Error::Internal("map face spans two regions".into()));
        }
        boundary_components[reg] += 1;
        face_region.push(reg);
    }
    let orientable = c.is_orientable();
    let regions = (0..nreg)
        .map(|r| Region {
            id: r,
            pieces: pieces[r],
            euler: euler[r],
            boundary_components: boundary_components[r],
            disk: orientable && euler[r] == 1 && boundary_components[r] == 1,
        })
        .collect();

    Ok(CurveMap {
        crossings,
        curve_count: curves.len(),
        vertex_count,
        edges,
        rotation,
        faces,
        dart_face,
        dart_region,
        face_region,
        regions,
        segment_region,
        side_points,
    })
}

impl CurveMap {
    /// Number of genuine crossings.
    pub fn crossing_vertex_count(&self) -> usize {
        self.crossings.len()
    }

    /// Edges between genuine crossings.
    pub fn crossing_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| !e.loop_only).count()
    }

    pub fn dart_vertex(&self, d: usize) -> usize {
        self.rotation
            .iter()
            .position(|r| r.contains(&d))
            .expect("dart belongs to a vertex")
    }

    /// Region containing a side point that no curve passes through.
    pub fn region_at(&self, side: usize, param: Param) -> usize {
        let j = self.side_points[side]
            .iter()
            .filter(|&&t| t < param)
            .count();
        self.segment_region[&(side, j)]
    }

    /// Parameters of curve points on a side, sorted.
    pub fn side_points(&self, side: usize) -> &[Param] {
        &self.side_points[side]
    }

    /// Bigons between curves `a` and `b` of this map.
    pub fn bigons_between(&self, a: usize, b: usize) -> Vec<Bigon> {
        let mut out = Vec::new();
        for (f, cycle) in self.faces.iter().enumerate() {
            if cycle.len() != 2 {
                continue;
            }
            let (e0, e1) = (cycle[0] / 2, cycle[1] / 2);
            let (c0, c1) = (self.edges[e0].curve, self.edges[e1].curve);
            let pair = if c0 == a && c1 == b {
                [e0, e1]
            } else if c0 == b && c1 == a {
                [e1, e0]
            } else {
                continue;
            };
            let reg = self.face_region[f];
            if self.regions[reg].disk {
                out.push(Bigon {
                    region: reg,
                    face: f,
                    edges: pair,
                });
            }
        }
        out.sort_by_key(|b| (b.region, b.face));
        out
    }

    /// Bigons of a two-curve map.
    pub fn bigon_faces(&self) -> Vec<Bigon> {
        if self.curve_count != 2 {
            return Vec::new();
        }
        self.bigons_between(0, 1)
    }
}

/// Planar graph inside one face, traced with interior on the left.
#[derive(Default)]
struct Planar {
    rotation: Vec<Vec<usize>>,
    ends: Vec<(usize, usize)>,
}

impl Planar {
    fn node(&mut self) -> usize {
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    fn edge(&mut self, a: usize, b: usize) -> usize {
        self.ends.push((a, b));
        self.ends.len() - 1
    }

    fn head(&self, d: usize) -> usize {
        let (a, b) = self.ends[d / 2];
        if d.is_multiple_of(2) {
            b
        } else {
            a
        }
    }

    fn trace(&self) -> Vec<usize> {
        let n = 2 * self.ends.len();
        let mut index = vec![0usize; n];
        for rot in &self.rotation {
            for (i, &d) in rot.iter().enumerate() {
                index[d] = i;
            }
        }
        let mut face = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if face[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            while face[d] == usize::MAX {
                face[d] = count;
                let r = d ^ 1;
                let v = self.head(d);
                let rot = &self.rotation[v];
                d = rot[(index[r] + rot.len() - 1) % rot.len()];
            }
            count += 1;
        }
        face
    }
}
