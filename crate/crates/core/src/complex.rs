//! Polygon complexes described by gluing words.
//!
//! A complex is a list of faces, each a cyclic word of signed edge labels.
//! Every label occurs exactly twice; the two occurrences are glued. Positions
//! along a side are parameterized by `t` in `[0, 1]` following the face's
//! counterclockwise direction of appearance. Opposite-sign occurrences are
//! glued by `t ↦ 1 − t`, same-sign occurrences by `t ↦ t`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::Param;

/// A signed edge label inside a face word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeToken {
    pub label: String,
    pub inverted: bool,
}

impl EdgeToken {
    pub fn new(label: impl Into<String>, inverted: bool) -> Self {
        Self {
            label: label.into(),
            inverted,
        }
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.label.clone(), !self.inverted)
    }
}

impl fmt::Display for EdgeToken {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.inverted {
            write!(f, "{}'", self.label)
        } else {
            write!(f, "{}", self.label)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub name: String,
    pub tokens: Vec<EdgeToken>,
}

/// One side occurrence: position `pos` of face `face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Side {
    pub face: usize,
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInfo {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub euler: i64,
    pub orientable: bool,
    pub genus: Option<usize>,
}

/// A closed surface as a cell complex built from polygons.
#[derive(Clone, Debug)]
pub struct PolygonComplex {
    name: String,
    faces: Vec<Face>,
    sides: Vec<Side>,
    face_offset: Vec<usize>,
    partner: Vec<usize>,
    labels: Vec<String>,
    label_of_side: Vec<usize>,
    occurrences: Vec<[usize; 2]>,
    corner_class: Vec<usize>,
    vertex_count: usize,
    homology_basis: Option<Vec<Vec<i64>>>,
}

impl PartialEq for PolygonComplex {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.faces == other.faces
    }
}

impl Eq for PolygonComplex {}

impl PolygonComplex {
    /// Builds and validates a complex from named faces.
    pub fn new(name: impl Into<String>, faces: Vec<Face>) -> Result<Self> {
        let mut sides = Vec::new();
        let mut face_offset = Vec::with_capacity(faces.len());
        for (fi, face) in faces.iter().enumerate() {
            if face.tokens.is_empty() {
                return Err(Error::EmptyFace(face.name.clone()));
            }
            face_offset.push(sides.len());
            sides.extend((0..face.tokens.len()).map(|pos| Side { face: fi, pos }));
        }

        let mut labels: Vec<String> = Vec::new();
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        let mut seen: Vec<Vec<usize>> = Vec::new();
        let mut label_of_side = Vec::with_capacity(sides.len());
        for (s, side) in sides.iter().enumerate() {
            let label = faces[side.face].tokens[side.pos].label.as_str();
            let li = *index.entry(label).or_insert_with(|| {
                labels.push(label.to_string());
                seen.push(Vec::new());
                labels.len() - 1
            });
            seen[li].push(s);
            label_of_side.push(li);
        }
        let mut partner = vec![0; sides.len()];
        let mut occurrences = Vec::with_capacity(labels.len());
        for (li, occ) in seen.iter().enumerate() {
            if occ.len() != 2 {
                return Err(Error::MissingPartner(labels[li].clone()));
            }
            partner[occ[0]] = occ[1];
            partner[occ[1]] = occ[0];
            occurrences.push([occ[0], occ[1]]);
        }

        let mut complex = Self {
            name: name.into(),
            faces,
            sides,
            face_offset,
            partner,
            labels,
            label_of_side,
            occurrences,
            corner_class: Vec::new(),
            vertex_count: 0,
            homology_basis: None,
        };
        complex.compute_vertex_classes();
        if complex.is_orientable() {
            complex.homology_basis = Some(complex.tree_cotree_basis());
        }
        Ok(complex)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_len(&self, face: usize) -> usize {
        self.faces[face].tokens.len()
    }

    pub fn side_count(&self) -> usize {
        self.sides.len()
    }

    pub fn side(&self, s: usize) -> Side {
        self.sides[s]
    }

    pub fn face_of(&self, s: usize) -> usize {
        self.sides[s].face
    }

    /// Global index of the side at `pos` in `face` (taken cyclically).
    pub fn side_at(&self, face: usize, pos: usize) -> usize {
        self.face_offset[face] + pos % self.face_len(face)
    }

    pub fn token(&self, s: usize) -> &EdgeToken {
        let side = self.sides[s];
        &self.faces[side.face].tokens[side.pos]
    }

    pub fn partner(&self, s: usize) -> usize {
        self.partner[s]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label_of(&self, s: usize) -> usize {
        self.label_of_side[s]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Both side occurrences of a label, in file order.
    pub fn occurrences(&self, label: usize) -> [usize; 2] {
        self.occurrences[label]
    }

    /// Looks up the side occurrence written as `label` or `label'`.
    pub fn find_side(&self, token: &EdgeToken) -> Option<usize> {
        let li = self.label_index(&token.label)?;
        self.occurrences[li]
            .iter()
            .copied()
            .find(|&s| self.token(s).inverted == token.inverted)
    }

    /// Whether the gluing of `s` with its partner reverses the parameter.
    pub fn is_mirrored(&self, s: usize) -> bool {
        self.token(s).inverted != self.token(self.partner[s]).inverted
    }

    /// Parameter on the partner side matching `t` on side `s`.
    pub fn partner_param(&self, s: usize, t: Param) -> Param {
        if self.is_mirrored(s) {
            Param::from_integer(1) - t
        } else {
            t
        }
    }

    pub fn is_orientable(&self) -> bool {
        (0..self.sides.len()).all(|s| self.is_mirrored(s))
    }

    /// Vertex class of the corner at the start of side `s`.
    pub fn corner_class(&self, s: usize) -> usize {
        self.corner_class[s]
    }

    /// Vertex class at the end of side `s`.
    pub fn end_class(&self, s: usize) -> usize {
        let side = self.sides[s];
        self.corner_class[self.side_at(side.face, side.pos + 1)]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn compute_vertex_classes(&mut self) {
        let n = self.sides.len();
        let mut uf = UnionFind::new(n);
        for s in 0..n {
            let r = self.partner[s];
            if s > r {
                continue;
            }
            let (ss, se) = (s, self.next_side(s));
            let (rs, re) = (r, self.next_side(r));
            if self.is_mirrored(s) {
                uf.union(ss, re);
                uf.union(se, rs);
            } else {
                uf.union(ss, rs);
                uf.union(se, re);
            }
        }
        let mut class_of_root = BTreeMap::new();
        let mut classes = Vec::with_capacity(n);
        for c in 0..n {
            let root = uf.find(c);
            let next = class_of_root.len();
            classes.push(*class_of_root.entry(root).or_insert(next));
        }
        self.vertex_count = class_of_root.len();
        self.corner_class = classes;
    }

    /// The side following `s` in its face.
    pub fn next_side(&self, s: usize) -> usize {
        let side = self.sides[s];
        self.side_at(side.face, side.pos + 1)
    }

    /// The occurrence that fixes the orientation of a label: the
    /// non-inverted one when it exists, else the first.
    pub fn positive_side(&self, label: usize) -> usize {
        let [a, b] = self.occurrences[label];
        if self.token(a).inverted && !self.token(b).inverted {
            b
        } else {
            a
        }
    }

    /// Tail and head vertex classes of a label under its positive orientation.
    pub fn edge_endpoints(&self, label: usize) -> (usize, usize) {
        let s = self.positive_side(label);
        (self.corner_class(s), self.end_class(s))
    }

    pub fn surface_info(&self) -> SurfaceInfo {
        let v = self.vertex_count;
        let e = self.labels.len();
        let f = self.faces.len();
        let euler = v as i64 - e as i64 + f as i64;
        let orientable = self.is_orientable();
        let genus = if orientable && euler <= 2 && euler % 2 == 0 {
            Some(((2 - euler) / 2) as usize)
        } else {
            None
        };
        SurfaceInfo {
            vertex_count: v,
            edge_count: e,
            face_count: f,
            euler,
            orientable,
            genus,
        }
    }

    pub fn genus(&self) -> Option<usize> {
        self.surface_info().genus
    }

    /// Vertex-by-edge signed incidence matrix (head minus tail) together with
    /// the rank of first homology.
    pub fn coboundary_matrix(&self) -> Result<(Vec<Vec<i64>>, usize)> {
        if !self.is_orientable() {
            return Err(Error::NonOrientable);
        }
        let rows = self.vertex_rows();
        let faces = self.face_rows();
        let e = self.labels.len();
        let h1 = e - linalg::rank(&faces) - linalg::rank(&rows);
        Ok((rows, h1))
    }

    fn vertex_rows(&self) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0i64; self.labels.len()]; self.vertex_count];
        for li in 0..self.labels.len() {
            let (tail, head) = self.edge_endpoints(li);
            rows[head][li] += 1;
            rows[tail][li] -= 1;
        }
        rows
    }

    /// Face-by-edge boundary incidences.
    fn face_rows(&self) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![0i64; self.labels.len()]; self.faces.len()];
        for s in 0..self.sides.len() {
            let sign = if s == self.positive_side(self.label_of(s)) {
                1
            } else {
                -1
            };
            rows[self.face_of(s)][self.label_of(s)] += sign;
        }
        rows
    }

    /// Rank of the classes of `vs` modulo coboundaries.
    pub fn class_rank(&self, vs: &[Vec<i64>]) -> Result<usize> {
        if !self.is_orientable() {
            return Err(Error::NonOrientable);
        }
        let e = self.labels.len();
        if let Some(v) = vs.iter().find(|v| v.len() != e) {
            return Err(Error::DimensionMismatch {
                expected: e,
                found: v.len(),
            });
        }
        let rows = self.vertex_rows();
        let mut all = vs.to_vec();
        all.extend(rows.iter().cloned());
        Ok(linalg::rank(&all) - linalg::rank(&rows))
    }

    /// Integral cycles (edge vectors) forming a basis of first homology,
    /// from a tree–cotree decomposition. `None` when not orientable.
    pub fn homology_basis(&self) -> Option<&[Vec<i64>]> {
        self.homology_basis.as_deref()
    }

    fn tree_cotree_basis(&self) -> Vec<Vec<i64>> {
        let e = self.labels.len();
        let v = self.vertex_count;
        let mut in_tree = vec![false; e];
        // potential[x] = edge vector of the tree path from class 0 to x
        let mut potential: Vec<Option<Vec<i64>>> = vec![None; v];
        potential[0] = Some(vec![0; e]);
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for li in 0..e {
                let (tail, head) = self.edge_endpoints(li);
                let (other, sign) = if tail == x && potential[head].is_none() {
                    (head, 1)
                } else if head == x && potential[tail].is_none() {
                    (tail, -1)
                } else {
                    continue;
                };
                let mut p = potential[x].clone().unwrap();
                p[li] += sign;
                potential[other] = Some(p);
                in_tree[li] = true;
                queue.push_back(other);
            }
        }
        let f = self.faces.len();
        let mut in_cotree = vec![false; e];
        let mut reached = vec![false; f];
        reached[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for li in 0..e {
                if in_tree[li] {
                    continue;
                }
                let [a, b] = self.occurrences[li];
                let (fa, fb) = (self.face_of(a), self.face_of(b));
                let other = if fa == x && !reached[fb] {
                    fb
                } else if fb == x && !reached[fa] {
                    fa
                } else {
                    continue;
                };
                reached[other] = true;
                in_cotree[li] = true;
                queue.push_back(other);
            }
        }
        let mut basis = Vec::new();
        for li in 0..e {
            if in_tree[li] || in_cotree[li] {
                continue;
            }
            let (tail, head) = self.edge_endpoints(li);
            let pt = potential[tail].as_ref().unwrap();
            let ph = potential[head].as_ref().unwrap();
            let mut cycle: Vec<i64> = pt.iter().zip(ph).map(|(a, b)| a - b).collect();
            cycle[li] += 1;
            basis.push(cycle);
        }
        basis
    }

    /// One-relator presentation obtained by contracting a spanning tree.
    pub fn contract_tree_presentation(&self, tree: &[&str]) -> Result<OneRelatorPresentation> {
        if self.faces.len() != 1 {
            return Err(Error::MultiFace(self.faces.len()));
        }
        let mut tree_idx = Vec::new();
        for name in tree {
            let li = self
                .label_index(name)
                .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
            if !tree_idx.contains(&li) {
                tree_idx.push(li);
            }
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for &li in &tree_idx {
            let (t, h) = self.edge_endpoints(li);
            if !uf.union(t, h) {
                return Err(Error::NotASpanningTree(format!(
                    "`{}` closes a cycle",
                    self.labels[li]
                )));
            }
        }
        if tree_idx.len() + 1 != self.vertex_count {
            return Err(Error::NotASpanningTree(format!(
                "{} edges cannot span {} vertices",
                tree_idx.len(),
                self.vertex_count
            )));
        }
        let word: Vec<EdgeToken> = self.faces[0]
            .tokens
            .iter()
            .filter(|t| !tree.contains(&t.label.as_str()))
            .cloned()
            .collect();
        let relator = cyclically_reduce(&word);
        let generators = self
            .labels
            .iter()
            .filter(|l| !tree.contains(&l.as_str()))
            .cloned()
            .collect();
        Ok(OneRelatorPresentation {
            generators,
            relator,
        })
    }
}

/// Freely and cyclically reduces a word.
pub fn cyclically_reduce(word: &[EdgeToken]) -> Vec<EdgeToken> {
    let mut stack: Vec<EdgeToken> = Vec::new();
    for t in word {
        if stack.last().is_some_and(|l| *l == t.inverse()) {
            stack.pop();
        } else {
            stack.push(t.clone());
        }
    }
    let mut lo = 0;
    let mut hi = stack.len();
    while hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    stack[lo..hi].to_vec()
}

/// Inverse of a word: reversed, every letter inverted.
pub fn invert_word(word: &[EdgeToken]) -> Vec<EdgeToken> {
    word.iter().rev().map(EdgeToken::inverse).collect()
}

/// Whether two cyclic words agree up to rotation and inversion.
pub fn cyclic_equivalent(a: &[EdgeToken], b: &[EdgeToken]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let inv = invert_word(b);
    [b.to_vec(), inv]
        .iter()
        .any(|w| (0..w.len()).any(|r| (0..w.len()).all(|i| a[i] == w[(i + r) % w.len()])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneRelatorPresentation {
    pub generators: Vec<String>,
    pub relator: Vec<EdgeToken>,
}

impl fmt::Display for OneRelatorPresentation {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(","))?;
        let word: Vec<String> = self.relator.iter().map(ToString::to_string).collect();
        write!(f, "{}>", word.join(" "))
    }
}

/// Disjoint-set forest over `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Returns false when already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
