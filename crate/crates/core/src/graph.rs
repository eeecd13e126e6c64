//! Embedded planar triangulation carrier and structural validators.
//!
//! Graphs are stored as rotation systems: every vertex keeps a cyclic list of
//! its neighbours. Face traversal of the rotation system is the only planarity
//! certificate used in this crate; no general planarity test is implemented.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

pub type VertexId = usize;

/// Role colours used by the block constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "white")]
    White,
    #[serde(rename = "grey")]
    Grey,
    #[serde(rename = "black")]
    Black,
    #[serde(rename = "blue")]
    Blue,
    #[serde(rename = "hub_c")]
    HubC,
    #[serde(rename = "hub_cprime")]
    HubCPrime,
    #[serde(rename = "outer_o")]
    OuterO,
    #[serde(rename = "apex_x")]
    ApexX,
    #[serde(rename = "plain")]
    Plain,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("embedding inconsistent: {0}")]
    EmbeddingInconsistent(String),
    #[error("cut removes the whole vertex set")]
    CutIsWholeGraph,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("no simplicial vertex present")]
    NoSimplicialVertex,
}

/// Ordered adjacency-list graph. When the lists are cyclic rotations of a
/// planar embedding the face structure is well defined; otherwise the graph is
/// just a simple undirected graph and only the adjacency is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    rotation: Vec<Vec<VertexId>>,
    labels: Vec<String>,
    colors: Vec<Color>,
    outer_face: Option<[VertexId; 3]>,
}

impl SimpleGraph {
    pub fn new(rotation: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        let labels = (0..n).map(|v| format!("v{v}")).collect();
        let colors = vec![Color::Plain; n];
        let g = SimpleGraph {
            rotation,
            labels,
            colors,
            outer_face: None,
        };
        g.check_simple()?;
        Ok(g)
    }

    pub fn with_metadata(
        rotation: Vec<Vec<VertexId>>,
        labels: Vec<String>,
        colors: Vec<Color>,
        outer_face: Option<[VertexId; 3]>,
    ) -> Result<Self, GraphError> {
        let n = rotation.len();
        if labels.len() != n || colors.len() != n {
            return Err(GraphError::EmbeddingInconsistent(
                "labels/colors length mismatch".into(),
            ));
        }
        let g = SimpleGraph {
            rotation,
            labels,
            colors,
            outer_face,
        };
        g.check_simple()?;
        if let Some(f) = g.outer_face {
            for v in f {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange(v));
                }
            }
        }
        Ok(g)
    }

    /// From an edge list; rotation order is ascending neighbour id.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u.max(v)));
            }
            if u == v {
                return Err(GraphError::EmbeddingInconsistent(format!("loop at {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        SimpleGraph::new(adj.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    fn check_simple(&self) -> Result<(), GraphError> {
        let n = self.n();
        for (v, nbrs) in self.rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &u in nbrs {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange(u));
                }
                if u == v {
                    return Err(GraphError::EmbeddingInconsistent(format!("loop at {v}")));
                }
                if !seen.insert(u) {
                    return Err(GraphError::EmbeddingInconsistent(format!(
                        "duplicate edge {v}-{u}"
                    )));
                }
                if !self.rotation[u].contains(&v) {
                    return Err(GraphError::EmbeddingInconsistent(format!(
                        "asymmetric edge {v}-{u}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn m(&self) -> usize {
        self.rotation.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rotation[u].contains(&v)
    }

    pub fn rotation(&self) -> &[Vec<VertexId>] {
        &self.rotation
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn outer_face(&self) -> Option<[VertexId; 3]> {
        self.outer_face
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sorted edge list, u < v, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m());
        for (v, nbrs) in self.rotation.iter().enumerate() {
            for &u in nbrs {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn set_outer_face(&mut self, f: [VertexId; 3]) {
        self.outer_face = Some(f);
    }

    pub fn set_color(&mut self, v: VertexId, c: Color) {
        self.colors[v] = c;
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) {
        self.labels[v] = label.into();
    }

    /// New graph with vertex `v` removed; remaining ids are compacted,
    /// preserving relative order. Rotation order of survivors is preserved.
    pub fn remove_vertex(&self, v: VertexId) -> SimpleGraph {
        let n = self.n();
        let map = |u: VertexId| if u > v { u - 1 } else { u };
        let mut rotation = Vec::with_capacity(n - 1);
        let mut labels = Vec::with_capacity(n - 1);
        let mut colors = Vec::with_capacity(n - 1);
        for u in 0..n {
            if u == v {
                continue;
            }
            rotation.push(
                self.rotation[u]
                    .iter()
                    .filter(|&&w| w != v)
                    .map(|&w| map(w))
                    .collect(),
            );
            labels.push(self.labels[u].clone());
            colors.push(self.colors[u]);
        }
        let outer_face = self.outer_face.and_then(|f| {
            if f.contains(&v) {
                None
            } else {
                Some([map(f[0]), map(f[1]), map(f[2])])
            }
        });
        SimpleGraph {
            rotation,
            labels,
            colors,
            outer_face,
        }
    }

    /// New graph with vertices renamed by the permutation `perm`
    /// (vertex v becomes perm[v]). Rotation order follows the old order.
    pub fn permute(&self, perm: &[VertexId]) -> SimpleGraph {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut rotation = vec![Vec::new(); n];
        let mut labels = vec![String::new(); n];
        let mut colors = vec![Color::Plain; n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation[v].iter().map(|&u| perm[u]).collect();
            labels[perm[v]] = self.labels[v].clone();
            colors[perm[v]] = self.colors[v];
        }
        let outer_face = self
            .outer_face
            .map(|f| [perm[f[0]], perm[f[1]], perm[f[2]]]);
        SimpleGraph {
            rotation,
            labels,
            colors,
            outer_face,
        }
    }

    /// Union of `self` and `other` on a fresh vertex range
    /// (other's vertex v becomes self.n() + v). No edges between the parts.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let off = self.n();
        let mut rotation = self.rotation.clone();
        rotation.extend(
            other
                .rotation
                .iter()
                .map(|r| r.iter().map(|&u| u + off).collect()),
        );
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut colors = self.colors.clone();
        colors.extend(other.colors.iter().cloned());
        SimpleGraph {
            rotation,
            labels,
            colors,
            outer_face: None,
        }
    }

    /// Insert an undirected edge at the end of both rotation lists.
    /// Only meaningful for graphs used without an embedding.
    pub fn add_edge_unembedded(&mut self, u: VertexId, v: VertexId) {
        assert!(u != v && !self.has_edge(u, v));
        self.rotation[u].push(v);
        self.rotation[v].push(u);
        self.outer_face = None;
    }

    pub(crate) fn rotation_mut(&mut self) -> &mut Vec<Vec<VertexId>> {
        &mut self.rotation
    }

    pub(crate) fn push_vertex(&mut self, label: String, color: Color) -> VertexId {
        self.rotation.push(Vec::new());
        self.labels.push(label);
        self.colors.push(color);
        self.n() - 1
    }

    /// Connected components of the whole graph.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        components_of(self, &BTreeSet::new())
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.rotation.iter().all(|r| r.len() == n - 1)
    }

    /// Vertices whose neighbourhood induces a complete graph.
    pub fn simplicial_vertices(&self) -> Vec<VertexId> {
        (0..self.n()).filter(|&v| self.is_simplicial(v)).collect()
    }

    pub fn is_simplicial(&self, v: VertexId) -> bool {
        let nbrs = &self.rotation[v];
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !self.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Every vertex outside `dom` has a neighbour inside `dom`.
    pub fn is_dominating(&self, dom: &BTreeSet<VertexId>) -> bool {
        (0..self.n()).all(|v| {
            dom.contains(&v) || self.rotation[v].iter().any(|u| dom.contains(u))
        })
    }
}

/// A set of vertices considered for removal. "Separating" is a computed
/// predicate (`components_after_cut`), not an invariant of the type.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexCut {
    pub members: BTreeSet<VertexId>,
}

impl VertexCut {
    pub fn from_iter(it: impl IntoIterator<Item = VertexId>) -> Self {
        VertexCut {
            members: it.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn components_of(g: &SimpleGraph, removed: &BTreeSet<VertexId>) -> Vec<Vec<VertexId>> {
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in removed {
        seen[v] = true;
    }
    let mut comps = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort();
    comps
}

/// Component count and partition of `G - S`.
pub fn components_after_cut(
    g: &SimpleGraph,
    cut: &VertexCut,
) -> Result<(usize, Vec<Vec<VertexId>>), GraphError> {
    for &v in &cut.members {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange(v));
        }
    }
    if cut.members.len() == g.n() {
        return Err(GraphError::CutIsWholeGraph);
    }
    let comps = components_of(g, &cut.members);
    Ok((comps.len(), comps))
}

/// An oriented triangular face of an embedding.
pub type Face = [VertexId; 3];

/// Traverse all faces of the rotation system.
///
/// Face successor of the directed edge (u, v) is (v, w) where w follows u in
/// the rotation of v. Every directed edge must lie on exactly one face orbit
/// and all orbits must be triangles.
pub fn traverse_faces(g: &SimpleGraph) -> Result<Vec<Face>, GraphError> {
    let n = g.n();
    if n < 4 {
        return Err(GraphError::EmbeddingInconsistent(format!(
            "need at least 4 vertices, got {n}"
        )));
    }
    // position of u in rotation[v] for O(1) successor lookup
    let mut pos = vec![std::collections::HashMap::new(); n];
    for v in 0..n {
        for (i, &u) in g.rotation[v].iter().enumerate() {
            pos[v].insert(u, i);
        }
    }
    let succ = |u: VertexId, v: VertexId| -> VertexId {
        let r = &g.rotation[v];
        let i = pos[v][&u];
        r[(i + 1) % r.len()]
    };
    let mut visited: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut faces = Vec::new();
    for v in 0..n {
        for &u in g.neighbors(v) {
            if visited.contains(&(v, u)) {
                continue;
            }
            // walk the orbit of (v, u)
            let mut orbit = Vec::new();
            let (mut a, mut b) = (v, u);
            loop {
                if !visited.insert((a, b)) {
                    return Err(GraphError::EmbeddingInconsistent(format!(
                        "face walk revisits directed edge {a}->{b}"
                    )));
                }
                orbit.push(a);
                let c = succ(a, b);
                a = b;
                b = c;
                if (a, b) == (v, u) {
                    break;
                }
                if orbit.len() > 3 {
                    return Err(GraphError::EmbeddingInconsistent(format!(
                        "face walk of length > 3 at {v}->{u}"
                    )));
                }
            }
            if orbit.len() != 3 {
                return Err(GraphError::EmbeddingInconsistent(format!(
                    "non-triangular face of size {} at {v}->{u}",
                    orbit.len()
                )));
            }
            faces.push([orbit[0], orbit[1], orbit[2]]);
        }
    }
    let expected = 2 * n - 4;
    if faces.len() != expected {
        return Err(GraphError::EmbeddingInconsistent(format!(
            "face count {} != 2n-4 = {expected}",
            faces.len()
        )));
    }
    Ok(faces)
}

/// True iff the rotation system is a maximal planar triangulation on >= 4
/// vertices: connected, 3n-6 edges, all faces triangles, outer_face a face.
pub fn is_maximal_planar(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n < 4 || !g.is_connected() || g.m() != 3 * n - 6 {
        return false;
    }
    let faces = match traverse_faces(g) {
        Ok(f) => f,
        Err(_) => return false,
    };
    match g.outer_face() {
        None => true,
        Some(of) => {
            let want: BTreeSet<_> = of.iter().collect();
            faces
                .iter()
                .any(|f| f.iter().collect::<BTreeSet<_>>() == want)
        }
    }
}

/// Validated maximal planar triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    g: SimpleGraph,
}

impl Triangulation {
    pub fn new(g: SimpleGraph) -> Result<Self, GraphError> {
        if g.outer_face().is_none() {
            return Err(GraphError::EmbeddingInconsistent(
                "triangulation requires a distinguished outer face".into(),
            ));
        }
        if !is_maximal_planar(&g) {
            // re-run traversal to surface the specific failure
            traverse_faces(&g)?;
            return Err(GraphError::EmbeddingInconsistent(
                "not a maximal planar triangulation".into(),
            ));
        }
        Ok(Triangulation { g })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.g
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.g
    }

    pub fn faces(&self) -> Vec<Face> {
        traverse_faces(&self.g).expect("validated triangulation")
    }

    pub fn outer_face(&self) -> [VertexId; 3] {
        self.g.outer_face().expect("validated triangulation")
    }
}

impl std::ops::Deref for Triangulation {
    type Target = SimpleGraph;

    fn deref(&self) -> &SimpleGraph {
        &self.g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn k4() -> Triangulation {
        // tetrahedron: 0-1-2 outer, 3 inside
        let rotation = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let mut g = SimpleGraph::new(rotation).unwrap();
        g.set_outer_face([0, 1, 2]);
        Triangulation::new(g).unwrap()
    }

    #[test]
    fn k4_has_four_faces() {
        let t = k4();
        assert_eq!(t.faces().len(), 4);
        assert_eq!(t.m(), 6);
    }

    #[test]
    fn k4_minus_edge_is_not_maximal_planar() {
        // remove edge 0-1 from the tetrahedron; keep a consistent embedding
        let rotation = vec![vec![3, 2], vec![2, 3], vec![0, 3, 1], vec![0, 1, 2]];
        let g = SimpleGraph::new(rotation).unwrap();
        assert!(!is_maximal_planar(&g));
    }

    #[test]
    fn k4_components_after_any_proper_cut() {
        let t = k4();
        for v in 0..4 {
            let (c, _) = components_after_cut(t.graph(), &VertexCut::from_iter([v])).unwrap();
            assert_eq!(c, 1);
        }
        let (c, _) =
            components_after_cut(t.graph(), &VertexCut::from_iter([0, 1, 2])).unwrap();
        assert_eq!(c, 1);
        assert_eq!(
            components_after_cut(t.graph(), &VertexCut::from_iter([0, 1, 2, 3])),
            Err(GraphError::CutIsWholeGraph)
        );
    }

    #[test]
    fn empty_cut_is_one_component() {
        let t = k4();
        let (c, comps) = components_after_cut(t.graph(), &VertexCut::default()).unwrap();
        assert_eq!(c, 1);
        assert_eq!(comps[0].len(), 4);
    }

    #[test]
    fn whole_vertex_set_dominates() {
        let t = k4();
        let all: BTreeSet<_> = (0..4).collect();
        assert!(t.is_dominating(&all));
    }

    #[test]
    fn permute_preserves_structure() {
        let t = k4();
        let p = t.graph().permute(&[2, 0, 3, 1]);
        assert!(is_maximal_planar(&p));
        assert_eq!(p.m(), 6);
    }
}
