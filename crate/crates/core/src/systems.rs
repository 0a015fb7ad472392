//! Curve systems: intersection matrices, complements, filling pairs, the
//! neighbourhood rank obstruction and canonical codes of union maps.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::arrangement::{union_map, CurveMap, Region};
use crate::complex::PolygonComplex;
use crate::curve::{crossing_vector_of, ChordCurve};
use crate::error::{Error, Result};
use crate::reduce::reduce_to_minimal;

/// Named simple curves on a shared complex, pairwise in general position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSystem {
    pub complex: PolygonComplex,
    pub names: Vec<String>,
    pub curves: Vec<ChordCurve>,
}

impl CurveSystem {
    pub fn new(complex: PolygonComplex, named: Vec<(String, ChordCurve)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (name, cv) in &named {
            let d = cv.validate(&complex)?;
            if !d.simple {
                return Err(Error::InvalidCurve(format!(
                    "{name}: {}",
                    d.defects.join("; ")
                )));
            }
            for p in &cv.passages {
                if !seen.insert(p.surface_point(&complex)) {
                    return Err(Error::NotInGeneralPosition(format!(
                        "{name} reuses {}",
                        crate::curve::passage_to_string(p, &complex)
                    )));
                }
            }
        }
        let (names, curves) = named.into_iter().unzip();
        Ok(CurveSystem {
            complex,
            names,
            curves,
        })
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// The curves at `indices`, in that order.
    pub fn subsystem(&self, indices: &[usize]) -> Result<CurveSystem> {
        let mut named = Vec::new();
        for &i in indices {
            let cv = self
                .curves
                .get(i)
                .ok_or_else(|| Error::InvalidCurve(format!("no curve with index {i}")))?;
            named.push((self.names[i].clone(), cv.clone()));
        }
        CurveSystem::new(self.complex.clone(), named)
    }

    pub fn named(&self) -> Vec<(String, ChordCurve)> {
        self.names
            .iter()
            .cloned()
            .zip(self.curves.iter().cloned())
            .collect()
    }

    pub fn union_map(&self) -> Result<CurveMap> {
        union_map(&self.curves, &self.complex)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemReport {
    pub genus: usize,
    pub matrix: Vec<Vec<usize>>,
    pub k: usize,
    pub complete1: bool,
    pub size: usize,
    pub bound: usize,
    pub maximal: bool,
}

fn genus_of(c: &PolygonComplex) -> Result<usize> {
    c.genus().ok_or(Error::NonOrientable)
}

/// Pairwise minimal intersection numbers and the resulting classification.
pub fn intersection_matrix(sys: &CurveSystem) -> Result<SystemReport> {
    let g = genus_of(&sys.complex)?;
    let n = sys.len();
    let mut matrix = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (_, x) = reduce_to_minimal(&sys.curves[i], &sys.curves[j], &sys.complex)?;
            matrix[i][j] = x;
            matrix[j][i] = x;
        }
    }
    let k = matrix.iter().flatten().copied().max().unwrap_or(0);
    let complete1 = n >= 2 && (0..n).all(|i| (0..n).all(|j| i == j || matrix[i][j] == 1));
    let bound = 2 * g + 1;
    if complete1 && n > bound {
        return Err(Error::Internal(format!(
            "complete 1-system of size {n} exceeds the bound {bound}"
        )));
    }
    Ok(SystemReport {
        genus: g,
        matrix,
        k,
        complete1,
        size: n,
        bound,
        maximal: complete1 && n == bound,
    })
}

/// Complement regions and whether all of them are disks.
pub fn complement(sys: &CurveSystem) -> Result<(Vec<Region>, bool)> {
    let m = sys.union_map()?;
    let filling = m.regions.iter().all(|r| r.disk);
    Ok((m.regions, filling))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FillingCheck {
    pub i: usize,
    #[serde(rename = "D")]
    pub d: usize,
    pub identity: bool,
    pub bound: bool,
}

/// Checks a complex whose 1-skeleton is the union of two transverse curves
/// made of the labels in `alpha` and `beta`.
pub fn filling_pair_check(
    c: &PolygonComplex,
    alpha: &[&str],
    beta: &[&str],
) -> Result<FillingCheck> {
    let g = genus_of(c)? as i64;
    let mut owner = vec![None; c.label_count()];
    for (which, set) in [alpha, beta].iter().enumerate() {
        let mut idx = Vec::new();
        for l in set.iter() {
            let li = c
                .label_index(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            if owner[li].is_some() {
                return Err(Error::NotTwoCurves(format!("label {l} is listed twice")));
            }
            owner[li] = Some(which);
            idx.push(li);
        }
        if idx.is_empty() {
            return Err(Error::NotTwoCurves("empty label set".into()));
        }
        for (k, &li) in idx.iter().enumerate() {
            let next = idx[(k + 1) % idx.len()];
            if c.edge_endpoints(li).1 != c.edge_endpoints(next).0 {
                return Err(Error::NotTwoCurves(format!(
                    "{} does not continue into {}",
                    c.labels()[li],
                    c.labels()[next]
                )));
            }
        }
    }
    if let Some(li) = owner.iter().position(Option::is_none) {
        return Err(Error::NotTwoCurves(format!(
            "label {} belongs to neither curve",
            c.labels()[li]
        )));
    }
    // walk the corners around each vertex and check the edge pattern
    let mut visited = vec![false; c.side_count()];
    for start in 0..c.side_count() {
        if visited[start] {
            continue;
        }
        let mut ring = Vec::new();
        let mut s = start;
        while !visited[s] {
            visited[s] = true;
            ring.push(owner[c.label_of(s)].unwrap());
            s = c.next_side(c.partner(s));
        }
        let alternating = ring.len() == 4 && (0..4).all(|k| ring[k] != ring[(k + 1) % 4]);
        if !alternating {
            return Err(Error::NotTransverse(c.corner_class(start)));
        }
    }
    let i = c.vertex_count();
    let d = c.face_count();
    Ok(FillingCheck {
        i,
        d,
        identity: i as i64 == 2 * g - 2 + d as i64,
        bound: i as i64 >= 2 * g - 1,
    })
}

/// Cycle vectors of a spanning-tree cycle basis of the union graph.
fn union_cycle_vectors(sys: &CurveSystem, m: &CurveMap) -> Result<Vec<Vec<i64>>> {
    let c = &sys.complex;
    let e = c.label_count();
    let nv = m.vertex_count;
    let weight: Vec<Vec<i64>> = m
        .edges
        .iter()
        .map(|ed| {
            let ps: Vec<_> = ed
                .passages
                .iter()
                .map(|&k| sys.curves[ed.curve].passages[k].clone())
                .collect();
            crossing_vector_of(&ps, c)
        })
        .collect();
    let mut potential: Vec<Option<Vec<i64>>> = vec![None; nv];
    let mut tree = vec![false; m.edges.len()];
    if nv == 0 {
        return Ok(Vec::new());
    }
    potential[0] = Some(vec![0; e]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (k, ed) in m.edges.iter().enumerate() {
            let (other, sign) = if ed.from == x && potential[ed.to].is_none() {
                (ed.to, 1)
            } else if ed.to == x && potential[ed.from].is_none() {
                (ed.from, -1)
            } else {
                continue;
            };
            let base = potential[x].clone().unwrap();
            potential[other] = Some(
                base.iter()
                    .zip(&weight[k])
                    .map(|(a, w)| a + sign * w)
                    .collect(),
            );
            tree[k] = true;
            queue.push_back(other);
        }
    }
    if potential.iter().any(Option::is_none) {
        return Err(Error::DisconnectedUnion);
    }
    let mut out = Vec::new();
    for (k, ed) in m.edges.iter().enumerate() {
        if tree[k] {
            continue;
        }
        let pu = potential[ed.from].as_ref().unwrap();
        let pv = potential[ed.to].as_ref().unwrap();
        out.push((0..e).map(|i| weight[k][i] + pu[i] - pv[i]).collect());
    }
    Ok(out)
}

/// Rank of the image of the first homology of a regular neighbourhood of
/// the union in the homology of the surface.
pub fn neighborhood_rank(sys: &CurveSystem) -> Result<usize> {
    if sys.is_empty() {
        return Ok(0);
    }
    let m = sys.union_map()?;
    let cycles = union_cycle_vectors(sys, &m)?;
    sys.complex.class_rank(&cycles)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub rank: usize,
    pub verdict: Verdict,
}

/// One-sided test: a triple whose neighbourhood carries rank 4 cannot have
/// its three intersection points made to coincide.
pub fn coincidence_test(triple: &CurveSystem) -> Result<Obstruction> {
    if triple.len() != 3 {
        return Err(Error::NotPairwiseOnce(format!(
            "expected 3 curves, got {}",
            triple.len()
        )));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (_, x) = reduce_to_minimal(&triple.curves[i], &triple.curves[j], &triple.complex)?;
        if x != 1 {
            return Err(Error::NotPairwiseOnce(format!(
                "{} and {} meet {x} times",
                triple.names[i], triple.names[j]
            )));
        }
    }
    let rank = neighborhood_rank(triple)?;
    Ok(Obstruction {
        rank,
        verdict: if rank >= 4 {
            Verdict::Obstructed
        } else {
            Verdict::Inconclusive
        },
    })
}

/// Canonical string of the oriented union map with curve labels up to renaming.
pub fn canonical_code(m: &CurveMap) -> Result<String> {
    let nd = 2 * m.edges.len();
    if nd == 0 {
        return Ok(format!("V{}E0", m.vertex_count));
    }
    let mut sigma = vec![0usize; nd];
    for rot in &m.rotation {
        for (i, &d) in rot.iter().enumerate() {
            sigma[d] = rot[(i + 1) % rot.len()];
        }
    }
    let mut best: Option<Vec<usize>> = None;
    for start in 0..nd {
        let code = encode_from(m, &sigma, start);
        if code.is_none() {
            return Err(Error::DisconnectedUnion);
        }
        let code = code.unwrap();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    let body: Vec<String> = best
        .unwrap()
        .chunks(4)
        .map(|w| {
            format!(
                "{}{}:{}.{}",
                w[0],
                if w[1] == 0 { '+' } else { '-' },
                w[2],
                w[3]
            )
        })
        .collect();
    Ok(format!(
        "V{}E{}|{}",
        m.vertex_count,
        m.edges.len(),
        body.join(",")
    ))
}

/// Breadth-first numbering from `start`; `None` if some dart is unreachable.
fn encode_from(m: &CurveMap, sigma: &[usize], start: usize) -> Option<Vec<usize>> {
    let nd = sigma.len();
    let mut number = vec![usize::MAX; nd];
    let mut order = Vec::with_capacity(nd);
    let mut curve_name = vec![usize::MAX; m.curve_count];
    let mut named = 0;
    number[start] = 0;
    order.push(start);
    let mut head = 0;
    let mut out = Vec::with_capacity(4 * nd);
    while head < order.len() {
        let d = order[head];
        head += 1;
        let cv = m.edges[d / 2].curve;
        if curve_name[cv] == usize::MAX {
            curve_name[cv] = named;
            named += 1;
        }
        out.push(curve_name[cv]);
        out.push(d % 2);
        for next in [sigma[d], d ^ 1] {
            if number[next] == usize::MAX {
                number[next] = order.len();
                order.push(next);
            }
            out.push(number[next]);
        }
    }
    (order.len() == nd).then_some(out)
}
