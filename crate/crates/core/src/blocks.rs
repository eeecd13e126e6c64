//! The building blocks: the 9-vertex block T, the drum block with ten
//! T-regions sharing a hub, the 15-vertex double-T block, apex extensions,
//! fan drums for white-bound experiments, and region discovery.

use crate::embed::{insert_t_interior, stack_vertex, CrossEdges};
use crate::graph::{
    Color, GraphError, SimpleGraph, Triangulation, VertexId,
};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("reconstruction invalid: {0}")]
    ReconstructionInvalid(String),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
}

/// A T-region: three outer vertices in role order (o1, o2, o3), grey inner
/// triangle with g_i opposite o_i, and one white per grey.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TRegionDescriptor {
    pub outer: [VertexId; 3],
    pub greys: [VertexId; 3],
    pub whites: [VertexId; 3],
}

impl TRegionDescriptor {
    pub fn inner(&self) -> [VertexId; 6] {
        [
            self.greys[0],
            self.greys[1],
            self.greys[2],
            self.whites[0],
            self.whites[1],
            self.whites[2],
        ]
    }

    /// The grey common neighbour of the outer pair {outer[i], outer[j]}.
    pub fn common_grey(&self, i: usize, j: usize) -> VertexId {
        debug_assert!(i < 3 && j < 3 && i != j);
        self.greys[3 - i - j]
    }
}

/// A degree-3 white vertex together with its triangle neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4RegionDescriptor {
    pub white: VertexId,
    pub outer: [VertexId; 3],
}

/// Family-3 provenance: one T-interior insertion, label space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TInsertion {
    pub region_prefix: String,
    pub outer_roles: [String; 3],
}

/// Family-1/2 provenance: one white replaced by a block copy, label space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiteExpansion {
    pub white_label: String,
    pub cross: CrossEdges,
}

/// A triangulation with role colouring and construction provenance.
#[derive(Clone, Debug)]
pub struct LabeledBlock {
    tri: Triangulation,
    regions: Vec<TRegionDescriptor>,
    t_insertions: Vec<TInsertion>,
    expansions: Vec<Vec<WhiteExpansion>>,
}

impl LabeledBlock {
    pub fn new(tri: Triangulation, regions: Vec<TRegionDescriptor>) -> Self {
        LabeledBlock {
            tri,
            regions,
            t_insertions: Vec::new(),
            expansions: Vec::new(),
        }
    }

    pub fn tri(&self) -> &Triangulation {
        &self.tri
    }

    pub fn graph(&self) -> &SimpleGraph {
        self.tri.graph()
    }

    pub fn regions(&self) -> &[TRegionDescriptor] {
        &self.regions
    }

    pub fn t_insertions(&self) -> &[TInsertion] {
        &self.t_insertions
    }

    pub fn expansions(&self) -> &[Vec<WhiteExpansion>] {
        &self.expansions
    }

    pub(crate) fn set_t_insertions(&mut self, ins: Vec<TInsertion>) {
        self.t_insertions = ins;
    }

    pub(crate) fn push_expansion_level(&mut self, level: Vec<WhiteExpansion>) {
        self.expansions.push(level);
    }

    pub(crate) fn set_expansions(&mut self, ex: Vec<Vec<WhiteExpansion>>) {
        self.expansions = ex;
    }

    pub fn whites(&self) -> Vec<VertexId> {
        (0..self.graph().n())
            .filter(|&v| self.graph().color(v) == Color::White)
            .collect()
    }
}

fn assert_block(cond: bool, what: &str) -> Result<(), BuildError> {
    if cond {
        Ok(())
    } else {
        Err(BuildError::ReconstructionInvalid(what.to_string()))
    }
}

fn check_white_invariants(b: &LabeledBlock) -> Result<(), BuildError> {
    let g = b.graph();
    let whites: BTreeSet<_> = b.whites().into_iter().collect();
    let simp: BTreeSet<_> = g.simplicial_vertices().into_iter().collect();
    assert_block(whites == simp, "white vertices must equal simplicial set")?;
    for &w in &whites {
        for &u in g.neighbors(w) {
            assert_block(!whites.contains(&u), "whites must be independent")?;
        }
    }
    Ok(())
}

/// The 9-vertex block: octahedron on o1..o3 (degree 6) and g1..g3 (degree 5),
/// with a white simplicial vertex in each face (o_j, o_k, g_i).
pub fn build_t() -> LabeledBlock {
    // octahedron rotation table, outer face orbit (o1, o2, o3)
    let (o1, o2, o3, g1, g2, g3) = (0, 1, 2, 3, 4, 5);
    let rotation = vec![
        vec![o2, g3, g2, o3], // o1
        vec![o1, o3, g1, g3], // o2
        vec![o2, o1, g2, g1], // o3
        vec![g3, o2, o3, g2], // g1
        vec![g1, o3, o1, g3], // g2
        vec![g2, o1, o2, g1], // g3
    ];
    let labels = ["o1", "o2", "o3", "g1", "g2", "g3"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let colors = vec![
        Color::OuterO,
        Color::OuterO,
        Color::OuterO,
        Color::Grey,
        Color::Grey,
        Color::Grey,
    ];
    let mut g =
        SimpleGraph::with_metadata(rotation, labels, colors, Some([o1, o2, o3])).unwrap();
    // annulus faces, oriented: (o3,o2,g1), (o1,o3,g2), (o2,o1,g3)
    let w1 = stack_vertex(&mut g, [o3, o2, g1], "w1", Color::White);
    let w2 = stack_vertex(&mut g, [o1, o3, g2], "w2", Color::White);
    let w3 = stack_vertex(&mut g, [o2, o1, g3], "w3", Color::White);
    let tri = Triangulation::new(g).expect("T is maximal planar");
    let region = TRegionDescriptor {
        outer: [o1, o2, o3],
        greys: [g1, g2, g3],
        whites: [w1, w2, w3],
    };
    let block = LabeledBlock::new(tri, vec![region]);

    // structural fingerprints
    let g = block.graph();
    assert_eq!(g.n(), 9);
    assert_eq!(g.m(), 21);
    let mut degs: Vec<_> = (0..9).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    assert_eq!(degs, [3, 3, 3, 5, 5, 5, 6, 6, 6]);
    check_white_invariants(&block).expect("T white invariants");
    for w in [w1, w2, w3] {
        let non_outer: Vec<_> = g
            .neighbors(w)
            .iter()
            .filter(|&&u| g.color(u) != Color::OuterO)
            .collect();
        assert_eq!(non_outer.len(), 1, "white has one non-outer neighbour");
    }
    // every pair of degree-6 vertices dominates
    for i in [o1, o2, o3] {
        for j in [o1, o2, o3] {
            if i < j {
                assert!(g.is_dominating(&BTreeSet::from([i, j])));
            }
        }
    }
    block
}

/// Two copies of T glued on their shared outer triangle; 15 vertices. The
/// shared vertices are coloured black; the outer face is the grey triangle of
/// the outside copy (labels r2.g*).
pub fn build_f20() -> LabeledBlock {
    let t = build_t();
    let mut g = t.graph().clone();
    for v in 0..g.n() {
        match g.color(v) {
            Color::OuterO => g.set_color(v, Color::Black),
            Color::Grey | Color::White => {
                let lbl = format!("r1.{}", g.label(v));
                g.set_label(v, lbl);
            }
            _ => {}
        }
    }
    // second copy occupies the outer face; the embedding stays triangular
    let outer = g.outer_face().unwrap();
    let ids = insert_t_interior(&mut g, outer, "r2.");
    g.set_outer_face(ids.greys);
    let tri = Triangulation::new(g).expect("F20 is maximal planar");

    let r1 = t.regions()[0].clone();
    let r2 = TRegionDescriptor {
        outer,
        greys: ids.greys,
        whites: ids.whites,
    };
    let block = LabeledBlock::new(tri, vec![r1, r2]);

    let g = block.graph();
    assert_eq!(g.n(), 15);
    assert_eq!(g.m(), 39);
    assert_eq!(block.whites().len(), 6);
    check_white_invariants(&block).expect("F20 white invariants");
    let blacks: Vec<_> = (0..g.n())
        .filter(|&v| g.color(v) == Color::Black)
        .collect();
    assert_eq!(blacks, vec![0, 1, 2]);
    for (i, &a) in blacks.iter().enumerate() {
        for &b in &blacks[i + 1..] {
            assert!(g.is_dominating(&BTreeSet::from([a, b])));
        }
    }
    block
}

/// Drum skeleton shared by the ten-region block and the r-fans: hub c, black
/// ring b1..b_{2r}, and an outer closure. `blue_ring` selects the antiprism
/// blue ring with second hub (the ten-region block shape) versus a single
/// apex vertex (fan shape).
fn drum_base(r: usize, blue_ring: bool) -> SimpleGraph {
    let bn = 2 * r;
    let c = 0usize;
    let b = |i: usize| 1 + (i - 1) % bn; // 1-indexed, wraps
    let mut rotation = Vec::new();
    let mut labels = Vec::new();
    let mut colors = Vec::new();

    rotation.push((1..=bn).rev().map(b).collect::<Vec<_>>()); // c
    labels.push("c".to_string());
    colors.push(Color::HubC);

    if blue_ring {
        let u = |i: usize| 1 + bn + (i - 1) % bn;
        let cp = 1 + 2 * bn;
        for i in 1..=bn {
            rotation.push(vec![c, b(i + 1), u(i), u(i + bn - 1), b(i + bn - 1)]);
            labels.push(format!("b{i}"));
            colors.push(Color::Black);
        }
        for i in 1..=bn {
            rotation.push(vec![b(i), b(i + 1), u(i + 1), cp, u(i + bn - 1)]);
            labels.push(format!("u{i}"));
            colors.push(Color::Blue);
        }
        rotation.push((1..=bn).map(u).collect());
        labels.push("cp".to_string());
        colors.push(Color::HubCPrime);
        let mut g = SimpleGraph::with_metadata(rotation, labels, colors, None).unwrap();
        g.set_outer_face([u(2), u(1), cp]);
        g
    } else {
        let z = 1 + bn;
        for i in 1..=bn {
            rotation.push(vec![c, b(i + 1), z, b(i + bn - 1)]);
            labels.push(format!("b{i}"));
            colors.push(Color::Black);
        }
        rotation.push((1..=bn).map(b).collect());
        labels.push("z".to_string());
        colors.push(Color::Plain);
        let mut g = SimpleGraph::with_metadata(rotation, labels, colors, None).unwrap();
        g.set_outer_face([b(2), b(1), z]);
        g
    }
}

fn insert_drum_regions(mut g: SimpleGraph, r: usize) -> (SimpleGraph, Vec<TRegionDescriptor>) {
    let mut regions = Vec::new();
    for i in 1..=r {
        let (bo, be) = (2 * i - 1, 2 * i);
        let face = [0, bo, be]; // oriented orbit (c, b_odd, b_even)
        let ids = insert_t_interior(&mut g, face, &format!("r{i}."));
        regions.push(TRegionDescriptor {
            outer: face,
            greys: ids.greys,
            whites: ids.whites,
        });
    }
    (g, regions)
}

/// The 102-vertex block: hub c on a black 20-cycle, blue 20-cycle joined as an
/// antiprism, second hub cp adjacent to all blues, and the ten triangles
/// (c, b_{2i-1}, b_{2i}) replaced by T-regions. Outer face (u2, u1, cp).
pub fn build_f10() -> Result<LabeledBlock, BuildError> {
    let base = drum_base(10, true);
    let (g, regions) = insert_drum_regions(base, 10);
    let tri = Triangulation::new(g)?;
    let block = LabeledBlock::new(tri, regions);
    let g = block.graph();

    assert_block(g.n() == 102, "F10 must have 102 vertices")?;
    assert_block(g.m() == 300, "F10 must have 300 edges")?;
    assert_block(block.whites().len() == 30, "F10 must have 30 whites")?;
    check_white_invariants(&block)?;

    // the ten regions pairwise intersect exactly in {c}
    for (i, ra) in block.regions().iter().enumerate() {
        let sa: BTreeSet<_> = ra.outer.iter().chain(ra.inner().iter()).copied().collect();
        for rb in &block.regions()[i + 1..] {
            let sb: BTreeSet<_> =
                rb.outer.iter().chain(rb.inner().iter()).copied().collect();
            let inter: Vec<_> = sa.intersection(&sb).copied().collect();
            assert_block(inter == vec![0], "regions must meet exactly in c")?;
        }
    }
    // every blue vertex has a black neighbour and no region-inner neighbour
    let inner: BTreeSet<_> = block
        .regions()
        .iter()
        .flat_map(|r| r.inner())
        .collect();
    for v in 0..g.n() {
        if g.color(v) == Color::Blue {
            assert_block(
                g.neighbors(v).iter().any(|&u| g.color(u) == Color::Black),
                "blue must touch a black",
            )?;
            assert_block(
                g.neighbors(v).iter().all(|u| !inner.contains(u)),
                "blue must not touch region inner vertices",
            )?;
        }
    }
    // cp adjacent to all blues
    let cp = g.vertex_by_label("cp").unwrap();
    let blues: Vec<_> = (0..g.n()).filter(|&v| g.color(v) == Color::Blue).collect();
    assert_block(blues.len() == 20, "20 blues")?;
    assert_block(
        blues.iter().all(|&u| g.has_edge(cp, u)),
        "cp adjacent to all blues",
    )?;
    // maximum independent set of the black/blue antiprism is 13
    let ring: Vec<_> = (0..g.n())
        .filter(|&v| matches!(g.color(v), Color::Black | Color::Blue))
        .collect();
    let sub = induced_subgraph(g, &ring);
    let alpha = crate::oracle::mis_exact(&sub);
    assert_block(alpha == 13, "independence number of black/blue ring must be 13")?;
    Ok(block)
}

/// Fan drum for white-bound experiments: r T-regions sharing the hub c, with
/// a single closing apex z adjacent to the whole black ring. 8r + 2 vertices.
pub fn fan_drum(r: usize) -> Result<LabeledBlock, BuildError> {
    assert_block(r >= 2, "fan needs r >= 2")?;
    let base = drum_base(r, false);
    let (g, regions) = insert_drum_regions(base, r);
    let tri = Triangulation::new(g)?;
    let block = LabeledBlock::new(tri, regions);
    assert_block(block.graph().n() == 8 * r + 2, "fan drum size")?;
    assert_block(block.whites().len() == 3 * r, "fan drum whites")?;
    Ok(block)
}

/// Add one vertex adjacent to all vertices of the outer face. The new outer
/// face contains the apex.
pub fn add_apex(block: &LabeledBlock) -> LabeledBlock {
    let mut g = block.graph().clone();
    let of = g.outer_face().expect("block has outer face");
    let mut label = "x".to_string();
    let mut k = 1;
    while g.vertex_by_label(&label).is_some() {
        k += 1;
        label = format!("x{k}");
    }
    let x = stack_vertex(&mut g, of, label, Color::ApexX);
    g.set_outer_face([of[0], of[1], x]);
    let tri = Triangulation::new(g).expect("apex extension is maximal planar");
    let regions = find_t_regions_graph(tri.graph());
    let mut out = LabeledBlock::new(tri, regions);
    out.set_t_insertions(block.t_insertions().to_vec());
    out.set_expansions(block.expansions().to_vec());
    out
}

/// Induced subgraph on `verts` (adjacency only; ids renumbered by position).
pub fn induced_subgraph(g: &SimpleGraph, verts: &[VertexId]) -> SimpleGraph {
    let mut index = std::collections::HashMap::new();
    for (i, &v) in verts.iter().enumerate() {
        index.insert(v, i);
    }
    let rotation = verts
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|u| index.get(u).copied())
                .collect()
        })
        .collect();
    SimpleGraph::new(rotation).expect("induced subgraph is simple")
}

/// All role-consistent T-regions: an induced copy of the 9-vertex block whose
/// six inner vertices have no neighbours outside the copy. Exhaustive over
/// grey triangles; roles are assigned with outer vertices in ascending order.
pub fn find_t_regions(block: &LabeledBlock) -> Vec<TRegionDescriptor> {
    find_t_regions_graph(block.graph())
}

pub fn find_t_regions_graph(g: &SimpleGraph) -> Vec<TRegionDescriptor> {
    let greys: Vec<_> = (0..g.n()).filter(|&v| g.color(v) == Color::Grey).collect();
    let mut out = Vec::new();
    for (ai, &a) in greys.iter().enumerate() {
        for (bi, &b) in greys.iter().enumerate().skip(ai + 1) {
            if !g.has_edge(a, b) {
                continue;
            }
            for &c in greys.iter().skip(bi + 1) {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    if let Some(desc) = check_t_region(g, [a, b, c]) {
                        out.push(desc);
                    }
                }
            }
        }
    }
    out.sort_by_key(|d| d.outer);
    out
}

fn check_t_region(g: &SimpleGraph, grey_triple: [VertexId; 3]) -> Option<TRegionDescriptor> {
    let grey_set: BTreeSet<_> = grey_triple.iter().copied().collect();
    // each grey has exactly one white neighbour
    let mut whites = Vec::new();
    for &gr in &grey_triple {
        let ws: Vec<_> = g
            .neighbors(gr)
            .iter()
            .copied()
            .filter(|&u| g.color(u) == Color::White)
            .collect();
        if ws.len() != 1 {
            return None;
        }
        whites.push(ws[0]);
    }
    let white_set: BTreeSet<_> = whites.iter().copied().collect();
    if white_set.len() != 3 {
        return None;
    }
    // outer = grey neighbours beyond the inner six
    let mut outer_set = BTreeSet::new();
    for &gr in &grey_triple {
        for &u in g.neighbors(gr) {
            if !grey_set.contains(&u) && !white_set.contains(&u) {
                outer_set.insert(u);
            }
        }
    }
    if outer_set.len() != 3 {
        return None;
    }
    let outer: Vec<_> = outer_set.iter().copied().collect();
    // role assignment: g_i is the grey not adjacent to outer[i]
    let mut greys = [usize::MAX; 3];
    for (i, &o) in outer.iter().enumerate() {
        let non_adj: Vec<_> = grey_triple
            .iter()
            .copied()
            .filter(|&gr| !g.has_edge(gr, o))
            .collect();
        if non_adj.len() != 1 {
            return None;
        }
        greys[i] = non_adj[0];
    }
    if greys.iter().collect::<BTreeSet<_>>().len() != 3 {
        return None;
    }
    let mut ws = [usize::MAX; 3];
    for i in 0..3 {
        let cand: Vec<_> = g
            .neighbors(greys[i])
            .iter()
            .copied()
            .filter(|u| white_set.contains(u))
            .collect();
        if cand.len() != 1 {
            return None;
        }
        ws[i] = cand[0];
    }
    let desc = TRegionDescriptor {
        outer: [outer[0], outer[1], outer[2]],
        greys,
        whites: ws,
    };
    // exact wiring of the 9-vertex block
    let members: BTreeSet<_> = desc.outer.iter().chain(desc.inner().iter()).copied().collect();
    if members.len() != 9 {
        return None;
    }
    let mut expected: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut add = |u: VertexId, v: VertexId| {
        expected.insert((u.min(v), u.max(v)));
    };
    for i in 0..3 {
        for j in (i + 1)..3 {
            add(desc.outer[i], desc.outer[j]);
            add(desc.greys[i], desc.greys[j]);
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                add(desc.greys[i], desc.outer[j]);
                add(desc.whites[i], desc.outer[j]);
            }
        }
        add(desc.whites[i], desc.greys[i]);
    }
    // induced edges among the nine must match exactly
    let mut actual = BTreeSet::new();
    for &v in &members {
        for &u in g.neighbors(v) {
            if members.contains(&u) && v < u {
                actual.insert((v, u));
            }
        }
    }
    if actual != expected {
        return None;
    }
    // no inner vertex may touch the rest of the graph
    for v in desc.inner() {
        if g.neighbors(v).iter().any(|u| !members.contains(u)) {
            return None;
        }
    }
    Some(desc)
}

/// One descriptor per white vertex of degree 3; outer triple in the oriented
/// hole order used by region replacement.
pub fn find_k4_regions(block: &LabeledBlock) -> Vec<K4RegionDescriptor> {
    let g = block.graph();
    let mut out = Vec::new();
    for v in 0..g.n() {
        if g.color(v) == Color::White && g.degree(v) == 3 && g.is_simplicial(v) {
            out.push(K4RegionDescriptor {
                white: v,
                outer: crate::embed::hole_of_degree3(g, v),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_maximal_planar;

    #[test]
    fn t_fingerprints() {
        let t = build_t();
        assert!(is_maximal_planar(t.graph()));
        assert_eq!(t.tri().faces().len(), 14);
        assert_eq!(t.graph().simplicial_vertices().len(), 3);
        assert_eq!(find_t_regions(&t).len(), 1);
        assert_eq!(find_k4_regions(&t).len(), 3);
    }

    #[test]
    fn t_dominating_pairs() {
        let t = build_t();
        let g = t.graph();
        assert!(g.is_dominating(&BTreeSet::from([0, 1])));
        assert!(!g.is_dominating(&BTreeSet::from([6]))); // w1 alone
    }

    #[test]
    fn f20_fingerprints() {
        let b = build_f20();
        assert!(is_maximal_planar(b.graph()));
        assert_eq!(b.graph().n(), 15);
        assert_eq!(b.tri().faces().len(), 26);
        assert_eq!(b.whites().len(), 6);
        assert_eq!(find_t_regions(&b).len(), 2);
    }

    #[test]
    fn f20_apex_has_one_region() {
        let b = build_f20();
        let plus = add_apex(&b);
        assert!(is_maximal_planar(plus.graph()));
        assert_eq!(plus.graph().n(), 16);
        let x = plus.graph().vertex_by_label("x").unwrap();
        assert_eq!(plus.graph().degree(x), 3);
        assert_eq!(find_t_regions(&plus).len(), 1);
    }

    #[test]
    fn f10_fingerprints() {
        let b = build_f10().unwrap();
        assert!(is_maximal_planar(b.graph()));
        assert_eq!(b.graph().n(), 102);
        assert_eq!(b.whites().len(), 30);
        assert_eq!(find_t_regions(&b).len(), 10);
        let plus = add_apex(&b);
        assert_eq!(plus.graph().n(), 103);
        assert_eq!(find_t_regions(&plus).len(), 10);
    }

    #[test]
    fn fan_drums() {
        for r in [2, 3] {
            let f = fan_drum(r).unwrap();
            assert!(is_maximal_planar(f.graph()));
            assert_eq!(f.graph().n(), 8 * r + 2);
            assert_eq!(find_t_regions(&f).len(), r);
        }
    }

    #[test]
    fn k4_without_white_coloring_has_no_k4_regions() {
        let rotation = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let mut g = SimpleGraph::new(rotation).unwrap();
        g.set_outer_face([0, 1, 2]);
        let tri = Triangulation::new(g).unwrap();
        let b = LabeledBlock::new(tri, vec![]);
        assert_eq!(find_k4_regions(&b).len(), 0);
    }
}
