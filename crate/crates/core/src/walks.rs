//! Even closed walks and the binomial algebra built on them: chord
//! classification, effective crossings and F4s, primitivity, strong
//! primitivity, circuits, minimal binomials, and enumeration of the Graver
//! basis through the combinatorial characterization of primitive walks.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::blocks::{self, BlockDecomposition};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Component, EdgeIdx, EdgeMonomial, GDegree, Graph, Vertex};

pub use crate::cycles::{enumerate_chordless_cycles, Cycle};

// ----------------------------------------------------------------------
// Closed walks
// ----------------------------------------------------------------------

/// An even closed walk. `vertices[k]` is the start of `edges[k]`; the last
/// edge returns to `vertices[0]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClosedWalk {
    edges: Vec<EdgeIdx>,
    vertices: Vec<Vertex>,
}

impl std::fmt::Debug for ClosedWalk {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Walk[{}]",
            self.edges
                .iter()
                .map(|e| format!("e{}", e + 1))
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl ClosedWalk {
    /// Builds a walk from an edge sequence, inferring the vertex sequence.
    pub fn from_edges(g: &Graph, edges: &[EdgeIdx]) -> Result<ClosedWalk> {
        if edges.is_empty() || edges.len() % 2 != 0 {
            return Err(Error::precondition(
                "a closed walk needs a non-empty even edge sequence",
            ));
        }
        for &e in edges {
            if e >= g.edge_count() {
                return Err(Error::precondition(format!("edge e{} out of range", e + 1)));
            }
        }
        let (a, b) = g.edge_ends(edges[0]);
        for start in [a, b] {
            if let Some(w) = Self::trace(g, edges, start) {
                return Ok(w);
            }
        }
        Err(Error::precondition(
            "edge sequence is not a closed walk (consecutive edges must chain)",
        ))
    }

    fn trace(g: &Graph, edges: &[EdgeIdx], start: Vertex) -> Option<ClosedWalk> {
        let mut vertices = Vec::with_capacity(edges.len());
        let mut cur = start;
        for &e in edges {
            let (u, v) = g.edge_ends(e);
            let next = if cur == u {
                v
            } else if cur == v {
                u
            } else {
                return None;
            };
            vertices.push(cur);
            cur = next;
        }
        if cur != start {
            return None;
        }
        Some(ClosedWalk {
            edges: edges.to_vec(),
            vertices,
        })
    }

    /// Builds a walk from a closed vertex sequence (endpoint not repeated).
    pub fn from_vertices(g: &Graph, vs: &[Vertex]) -> Result<ClosedWalk> {
        if vs.is_empty() || vs.len() % 2 != 0 {
            return Err(Error::precondition(
                "a closed walk needs an even number of vertices",
            ));
        }
        let k = vs.len();
        let mut edges = Vec::with_capacity(k);
        for i in 0..k {
            let e = g.edge_index(vs[i], vs[(i + 1) % k]).ok_or_else(|| {
                Error::precondition(format!(
                    "no edge {{{}, {}}}",
                    vs[i] + 1,
                    vs[(i + 1) % k] + 1
                ))
            })?;
            edges.push(e);
        }
        Ok(ClosedWalk {
            edges,
            vertices: vs.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_sequence(&self) -> &[EdgeIdx] {
        &self.edges
    }

    pub fn vertex_sequence(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edges at odd walk positions (1-based), the set w+.
    pub fn plus_edges(&self) -> BTreeSet<EdgeIdx> {
        self.edges.iter().step_by(2).copied().collect()
    }

    /// Edges at even walk positions (1-based), the set w-.
    pub fn minus_edges(&self) -> BTreeSet<EdgeIdx> {
        self.edges.iter().skip(1).step_by(2).copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeIdx> {
        self.edges.iter().copied().collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_multiplicities(&self) -> BTreeMap<EdgeIdx, usize> {
        let mut m = BTreeMap::new();
        for &e in &self.edges {
            *m.entry(e).or_insert(0) += 1;
        }
        m
    }

    fn rotated(&self, r: usize) -> ClosedWalk {
        let l = self.len();
        ClosedWalk {
            edges: (0..l).map(|i| self.edges[(i + r) % l]).collect(),
            vertices: (0..l).map(|i| self.vertices[(i + r) % l]).collect(),
        }
    }

    pub fn reversed(&self) -> ClosedWalk {
        let l = self.len();
        ClosedWalk {
            edges: (0..l).map(|i| self.edges[l - 1 - i]).collect(),
            vertices: (0..l).map(|i| self.vertices[(l - i) % l]).collect(),
        }
    }

    /// Canonical form: lexicographically minimal (edge, start-vertex) stream
    /// over all rotations and both directions. Starts at the smallest edge,
    /// from its smaller endpoint, in the smaller direction.
    pub fn canonical(&self) -> ClosedWalk {
        let mut best: Option<ClosedWalk> = None;
        for dir in [self.clone(), self.reversed()] {
            for r in 0..dir.len() {
                let cand = dir.rotated(r);
                let better = match &best {
                    None => true,
                    Some(b) => cand.sort_key() < b.sort_key(),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    fn sort_key(&self) -> Vec<(EdgeIdx, Vertex)> {
        self.edges
            .iter()
            .zip(&self.vertices)
            .map(|(&e, &v)| (e, v))
            .collect()
    }

    /// 1-based positions (into the vertex sequence) where `v` occurs.
    pub fn vertex_positions(&self, v: Vertex) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == v)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

// ----------------------------------------------------------------------
// Binomials
// ----------------------------------------------------------------------

/// A binomial of the toric ideal: two edge monomials of equal G-degree,
/// stored with disjoint supports (common factors divided out) and with the
/// smallest supported edge index on the plus side.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    pub plus: EdgeMonomial,
    pub minus: EdgeMonomial,
    pub degree: GDegree,
}

impl std::fmt::Debug for Binomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Binomial {
    /// Normalizes a raw exponent pair. Returns an error when the two sides
    /// have different G-degrees (then the pair is not a toric relation).
    pub fn new(g: &Graph, plus: EdgeMonomial, minus: EdgeMonomial) -> Result<Binomial> {
        if plus.g_degree(g) != minus.g_degree(g) {
            return Err(Error::precondition(
                "binomial sides must have equal G-degrees",
            ));
        }
        let common: Vec<u32> = plus
            .0
            .iter()
            .zip(&minus.0)
            .map(|(&a, &b)| a.min(b))
            .collect();
        let p = EdgeMonomial(plus.0.iter().zip(&common).map(|(&a, &c)| a - c).collect());
        let q = EdgeMonomial(minus.0.iter().zip(&common).map(|(&a, &c)| a - c).collect());
        let (p, q) = match (p.support().first(), q.support().first()) {
            (Some(&a), Some(&b)) if b < a => (q, p),
            (None, Some(_)) => (q, p),
            _ => (p, q),
        };
        let degree = p.g_degree(g);
        Ok(Binomial {
            plus: p,
            minus: q,
            degree,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_one() && self.minus.is_one()
    }

    pub fn total_degree(&self) -> u32 {
        self.plus.total_degree()
    }

    /// Text form, e.g. `e1*e3 - e2*e4`.
    pub fn render(&self) -> String {
        format!("{} - {}", self.plus.render(), self.minus.render())
    }
}

/// The binomial B_w of an even closed walk: odd positions multiply into the
/// plus monomial, even positions into the minus monomial.
pub fn binomial_of_walk(g: &Graph, w: &ClosedWalk) -> Binomial {
    let m = g.edge_count();
    let mut plus = vec![0u32; m];
    let mut minus = vec![0u32; m];
    for (i, &e) in w.edge_sequence().iter().enumerate() {
        if i % 2 == 0 {
            plus[e] += 1;
        } else {
            minus[e] += 1;
        }
    }
    Binomial::new(g, EdgeMonomial(plus), EdgeMonomial(minus))
        .expect("walk sides always share a G-degree")
}

// ----------------------------------------------------------------------
// Subgraph view of a walk
// ----------------------------------------------------------------------

/// Block structure of the subgraph spanned by a walk, with maps between the
/// parent graph and the subgraph.
struct WalkSubgraph {
    sub: Component,
    dec: BlockDecomposition,
    to_sub_vertex: HashMap<Vertex, Vertex>,
}

impl WalkSubgraph {
    fn of(g: &Graph, w: &ClosedWalk) -> WalkSubgraph {
        let edge_list: Vec<EdgeIdx> = w.edge_set().into_iter().collect();
        let sub = g.edge_subgraph(&edge_list);
        let dec = blocks::decompose(&sub.graph).expect("walk subgraph is connected");
        let to_sub_vertex = sub
            .vertex_map
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as Vertex))
            .collect();
        WalkSubgraph {
            sub,
            dec,
            to_sub_vertex,
        }
    }

    fn sub_vertex(&self, v: Vertex) -> Vertex {
        self.to_sub_vertex[&v]
    }

    /// Blocks (by id in the subgraph decomposition) containing vertex v of
    /// the parent graph.
    fn blocks_of(&self, v: Vertex) -> &[usize] {
        self.dec.blocks_of_vertex(self.sub_vertex(v))
    }

    /// Parent-graph edge indices of one block.
    fn block_edges(&self, b: usize) -> Vec<EdgeIdx> {
        self.dec.blocks[b]
            .edges
            .iter()
            .map(|&e| self.sub.edge_map[e])
            .collect()
    }
}

// ----------------------------------------------------------------------
// Chords, crossings and F4s
// ----------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChordClass {
    Bridge,
    Even,
    Odd,
}

#[derive(Clone, Debug)]
pub struct ChordRecord {
    pub edge: EdgeIdx,
    pub class: ChordClass,
    /// 1-based positions of the chord endpoints in the walk's vertex
    /// sequence, `s < j` (first occurrences for bridges).
    pub s: usize,
    pub j: usize,
}

/// Edges of the graph that are chords of the walk: both endpoints on the
/// walk but the edge itself not part of it.
pub fn chords_of_walk(g: &Graph, w: &ClosedWalk) -> Vec<EdgeIdx> {
    let vs = w.vertex_set();
    let es = w.edge_set();
    (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edge_ends(e);
            vs.contains(&u) && vs.contains(&v) && !es.contains(&e)
        })
        .collect()
}

/// Classifies a chord as bridge, even or odd.
pub fn classify_chord(g: &Graph, w: &ClosedWalk, f: EdgeIdx) -> Result<ChordRecord> {
    let (a, b) = g.edge_ends(f);
    let vs = w.vertex_set();
    if !vs.contains(&a) || !vs.contains(&b) || w.edge_set().contains(&f) {
        return Err(Error::precondition(format!(
            "edge e{} is not a chord of the walk",
            f + 1
        )));
    }
    let ws = WalkSubgraph::of(g, w);
    let ba = ws.blocks_of(a);
    let bb = ws.blocks_of(b);
    // Not a bridge exactly when both endpoints lie in a single common block.
    let bridge = !(ba.len() == 1 && bb.len() == 1 && ba[0] == bb[0]);
    let pa = w.vertex_positions(a);
    let pb = w.vertex_positions(b);
    let (mut s, mut j) = (pa[0], pb[0]);
    if s > j {
        std::mem::swap(&mut s, &mut j);
    }
    let class = if bridge {
        ChordClass::Bridge
    } else if (j - s) % 2 == 0 {
        // breaks the walk into two odd closed walks
        ChordClass::Odd
    } else {
        ChordClass::Even
    };
    Ok(ChordRecord {
        edge: f,
        class,
        s,
        j,
    })
}

/// Whether two odd chords cross effectively: their endpoint positions
/// interleave and differ by an odd shift.
pub fn cross_effectively(g: &Graph, w: &ClosedWalk, f: EdgeIdx, f2: EdgeIdx) -> Result<bool> {
    let c1 = classify_chord(g, w, f)?;
    let c2 = classify_chord(g, w, f2)?;
    if c1.class != ChordClass::Odd || c2.class != ChordClass::Odd {
        return Err(Error::precondition(
            "effective crossing is defined for odd chords",
        ));
    }
    Ok(records_cross(&c1, &c2))
}

fn records_cross(c1: &ChordRecord, c2: &ChordRecord) -> bool {
    if c1.edge == c2.edge {
        return false;
    }
    let (s, j) = (c1.s, c1.j);
    let (s2, j2) = (c2.s, c2.j);
    let shift_odd = (s2 as i64 - s as i64).rem_euclid(2) == 1;
    shift_odd && ((s < s2 && s2 < j && j < j2) || (s2 < s && s < j2 && j2 < j))
}

/// An F4 of a walk: a 4-cycle made of two walk edges (both odd or both
/// even positions) and two odd chords that cross effectively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F4Record {
    pub walk_edge_a: EdgeIdx,
    pub walk_edge_b: EdgeIdx,
    pub chord_a: EdgeIdx,
    pub chord_b: EdgeIdx,
    /// 0-based positions of the two walk edges in the edge sequence.
    pub pos_a: usize,
    pub pos_b: usize,
}

/// All F4s of the walk, in deterministic order.
pub fn find_f4s(g: &Graph, w: &ClosedWalk) -> Vec<F4Record> {
    let odd: Vec<ChordRecord> = chords_of_walk(g, w)
        .into_iter()
        .filter_map(|f| classify_chord(g, w, f).ok())
        .filter(|c| c.class == ChordClass::Odd)
        .collect();
    let l = w.len();
    // Walk edge joining vertex positions p and q (1-based, cyclically
    // adjacent): the edge at position min(p, q), or l for the wrap-around.
    let edge_pos_between = |p: usize, q: usize| -> Option<usize> {
        let (a, b) = if p < q { (p, q) } else { (q, p) };
        if b - a == 1 {
            Some(a)
        } else if a == 1 && b == l {
            Some(l)
        } else {
            None
        }
    };
    let mut out = Vec::new();
    for i in 0..odd.len() {
        for k in (i + 1)..odd.len() {
            let (c1, c2) = (&odd[i], &odd[k]);
            if !records_cross(c1, c2) {
                continue;
            }
            // The F4's walk edges pair endpoint positions of the two chords;
            // both pairings are candidates.
            let pairings = [
                ((c1.s, c2.s), (c1.j, c2.j)),
                ((c1.s, c2.j), (c1.j, c2.s)),
            ];
            for ((p1, q1), (p2, q2)) in pairings {
                let (Some(e1), Some(e2)) = (edge_pos_between(p1, q1), edge_pos_between(p2, q2))
                else {
                    continue;
                };
                if e1 % 2 != e2 % 2 {
                    continue; // must both be odd or both be even positions
                }
                out.push(F4Record {
                    walk_edge_a: w.edges[e1 - 1],
                    walk_edge_b: w.edges[e2 - 1],
                    chord_a: c1.edge,
                    chord_b: c2.edge,
                    pos_a: e1 - 1,
                    pos_b: e2 - 1,
                });
            }
        }
    }
    out
}

// ----------------------------------------------------------------------
// Primitivity and friends
// ----------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct PrimitivityReport {
    pub primitive: bool,
    pub violations: Vec<String>,
}

/// Sinks of each block of the walk subgraph: vertices meeting two odd- or
/// two even-position edge occurrences of that block. Returned as
/// block id -> sorted sink vertices (parent graph labels).
fn block_sinks(w: &ClosedWalk, ws: &WalkSubgraph) -> BTreeMap<usize, BTreeSet<Vertex>> {
    let l = w.len();
    // (vertex, block) -> position parities of incident edge occurrences
    let mut hits: BTreeMap<(Vertex, usize), Vec<usize>> = BTreeMap::new();
    for (idx, &e) in w.edges.iter().enumerate() {
        let sub_e = ws
            .sub
            .edge_map
            .binary_search(&e)
            .expect("walk edge in subgraph");
        let b = ws.dec.block_of_edge(sub_e);
        for v in [w.vertices[idx], w.vertices[(idx + 1) % l]] {
            hits.entry((v, b)).or_default().push(idx % 2);
        }
    }
    let mut out: BTreeMap<usize, BTreeSet<Vertex>> = BTreeMap::new();
    for ((v, b), parities) in hits {
        let evens = parities.iter().filter(|&&p| p == 0).count();
        let odds = parities.len() - evens;
        if evens >= 2 || odds >= 2 {
            out.entry(b).or_default().insert(v);
        }
    }
    out
}

/// Tests the combinatorial characterization of primitive walks: blocks are
/// cycles or cut edges, repeated edges are doubled cut edges, and every cut
/// vertex lies in exactly two blocks and is a sink of both.
pub fn is_primitive(g: &Graph, w: &ClosedWalk) -> PrimitivityReport {
    let mut violations = Vec::new();

    // The walk must split its positions into disjoint odd/even edge sets.
    let plus = w.plus_edges();
    let minus = w.minus_edges();
    let overlap: Vec<EdgeIdx> = plus.intersection(&minus).copied().collect();
    if !overlap.is_empty() {
        violations.push(format!(
            "edge e{} appears at both odd and even positions",
            overlap[0] + 1
        ));
    }

    let ws = WalkSubgraph::of(g, w);

    for b in &ws.dec.blocks {
        if !(b.is_edge() || b.is_cycle()) {
            violations.push(format!(
                "block on edges {:?} is neither a cycle nor a cut edge",
                b.edges.iter().map(|&e| ws.sub.edge_map[e] + 1).collect::<Vec<_>>()
            ));
        }
    }

    for (&e, &mult) in &w.edge_multiplicities() {
        if mult == 1 {
            continue;
        }
        let sub_e = ws.sub.edge_map.binary_search(&e).unwrap();
        let is_cut_edge = ws.dec.blocks[ws.dec.block_of_edge(sub_e)].is_edge();
        if mult > 2 || !is_cut_edge {
            violations.push(format!(
                "edge e{} repeats {} times but is not a double cut edge",
                e + 1,
                mult
            ));
        }
    }

    let sinks = block_sinks(w, &ws);
    for &sv in &ws.dec.cut_vertices {
        let v = ws.sub.vertex_map[sv as usize];
        let bs = ws.dec.blocks_of_vertex(sv);
        if bs.len() != 2 {
            violations.push(format!(
                "cut vertex {} lies in {} blocks",
                v + 1,
                bs.len()
            ));
            continue;
        }
        for &b in bs {
            if !sinks.get(&b).is_some_and(|s| s.contains(&v)) {
                violations.push(format!(
                    "cut vertex {} is not a sink of one of its blocks",
                    v + 1
                ));
            }
        }
    }

    PrimitivityReport {
        primitive: violations.is_empty(),
        violations,
    }
}

/// A primitive walk is strongly primitive when no cyclic block contains two
/// sinks at distance one (two adjacent cut vertices).
pub fn is_strongly_primitive(g: &Graph, w: &ClosedWalk) -> Result<bool> {
    let report = is_primitive(g, w);
    if !report.primitive {
        return Err(Error::precondition(format!(
            "walk is not primitive: {}",
            report.violations.join("; ")
        )));
    }
    let ws = WalkSubgraph::of(g, w);
    let sinks = block_sinks(w, &ws);
    for b in &ws.dec.blocks {
        if !b.is_cycle() {
            continue;
        }
        let Some(bs) = sinks.get(&b.id) else { continue };
        let list: Vec<Vertex> = bs.iter().copied().collect();
        for i in 0..list.len() {
            for k in (i + 1)..list.len() {
                if let Some(e) = g.edge_index(list[i], list[k]) {
                    // adjacency inside this block
                    if let Ok(sub_e) = ws.sub.edge_map.binary_search(&e) {
                        if ws.dec.block_of_edge(sub_e) == b.id {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircuitCase {
    EvenCycle,
    TwoOddCyclesAtVertex,
    TwoOddCyclesJoinedByPath,
}

impl CircuitCase {
    pub fn label(&self) -> &'static str {
        match self {
            CircuitCase::EvenCycle => "even-cycle",
            CircuitCase::TwoOddCyclesAtVertex => "two-odd-cycles-at-vertex",
            CircuitCase::TwoOddCyclesJoinedByPath => "two-odd-cycles-joined-by-path",
        }
    }
}

/// Classifies a primitive walk as a circuit (or not): an even cycle, two odd
/// cycles meeting in one vertex, or two disjoint odd cycles joined by a path.
pub fn is_circuit(g: &Graph, w: &ClosedWalk) -> Option<CircuitCase> {
    let ws = WalkSubgraph::of(g, w);
    let cyclic = ws.dec.blocks.iter().filter(|b| b.is_cycle()).count();
    let cut_edges = ws.dec.blocks.iter().filter(|b| b.is_edge()).count();
    match (cyclic, cut_edges) {
        (1, 0) => {
            let b = ws.dec.blocks.iter().find(|b| b.is_cycle()).unwrap();
            if b.edges.len() % 2 == 0 && b.edges.len() == w.len() {
                Some(CircuitCase::EvenCycle)
            } else {
                None
            }
        }
        (2, 0) => Some(CircuitCase::TwoOddCyclesAtVertex),
        (2, _) => Some(CircuitCase::TwoOddCyclesJoinedByPath),
        _ => None,
    }
}

/// Whether the walk is an even cycle (the generic generator shape).
pub fn is_even_cycle_walk(g: &Graph, w: &ClosedWalk) -> bool {
    is_circuit(g, w) == Some(CircuitCase::EvenCycle)
}

/// Edge sets (parent-graph indices) of the cyclic blocks of the walk's
/// subgraph, in block order.
pub fn walk_cyclic_blocks(g: &Graph, w: &ClosedWalk) -> Vec<Vec<EdgeIdx>> {
    let ws = WalkSubgraph::of(g, w);
    ws.dec
        .blocks
        .iter()
        .filter(|b| b.is_cycle())
        .map(|b| ws.block_edges(b.id))
        .collect()
}

#[derive(Clone, Debug)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub violations: Vec<String>,
}

/// Tests whether B_w is a minimal binomial: w strongly primitive, all chords
/// odd, no two chords crossing strongly effectively (effectively without
/// forming an F4), and no further odd chord crossing a chord of an F4.
pub fn is_minimal_binomial(g: &Graph, w: &ClosedWalk) -> MinimalityReport {
    let mut violations = Vec::new();

    let prim = is_primitive(g, w);
    if !prim.primitive {
        return MinimalityReport {
            minimal: false,
            violations: prim.violations,
        };
    }
    if !is_strongly_primitive(g, w).unwrap_or(false) {
        violations.push("walk is not strongly primitive".into());
    }

    let records: Vec<ChordRecord> = chords_of_walk(g, w)
        .into_iter()
        .map(|f| classify_chord(g, w, f).expect("enumerated chords are chords"))
        .collect();
    let mut odd = Vec::new();
    for c in &records {
        match c.class {
            ChordClass::Bridge => {
                violations.push(format!("chord e{} is a bridge", c.edge + 1))
            }
            ChordClass::Even => {
                violations.push(format!("chord e{} is an even chord", c.edge + 1))
            }
            ChordClass::Odd => odd.push(c.clone()),
        }
    }

    let f4s = find_f4s(g, w);
    for i in 0..odd.len() {
        for k in (i + 1)..odd.len() {
            if !records_cross(&odd[i], &odd[k]) {
                continue;
            }
            let in_f4 = f4s.iter().any(|f4| {
                (f4.chord_a == odd[i].edge && f4.chord_b == odd[k].edge)
                    || (f4.chord_a == odd[k].edge && f4.chord_b == odd[i].edge)
            });
            if !in_f4 {
                violations.push(format!(
                    "odd chords e{} and e{} cross strongly effectively",
                    odd[i].edge + 1,
                    odd[k].edge + 1
                ));
            }
        }
    }
    for f4 in &f4s {
        for c in &odd {
            if c.edge == f4.chord_a || c.edge == f4.chord_b {
                continue;
            }
            let fa = odd.iter().find(|x| x.edge == f4.chord_a).unwrap();
            let fb = odd.iter().find(|x| x.edge == f4.chord_b).unwrap();
            if records_cross(c, fa) || records_cross(c, fb) {
                violations.push(format!(
                    "odd chord e{} crosses the F4 on chords e{}, e{}",
                    c.edge + 1,
                    f4.chord_a + 1,
                    f4.chord_b + 1
                ));
            }
        }
    }

    MinimalityReport {
        minimal: violations.is_empty(),
        violations,
    }
}

// ----------------------------------------------------------------------
// F4 replacement and equivalence
// ----------------------------------------------------------------------

/// Rewrites `w = (w1, e, w2, e')` into `(w1, f, -w2, f')` along an F4.
pub fn f4_replace(g: &Graph, w: &ClosedWalk, f4: &F4Record) -> ClosedWalk {
    let l = w.len();
    let (a, b) = if f4.pos_a < f4.pos_b {
        (f4.pos_a, f4.pos_b)
    } else {
        (f4.pos_b, f4.pos_a)
    };
    // The chords pair start-with-start and end-with-end vertices of the two
    // walk edges.
    let va = w.vertices[a];
    let va1 = w.vertices[(a + 1) % l];
    let vb = w.vertices[b];
    let vb1 = w.vertices[(b + 1) % l];
    let ends = |e: EdgeIdx| g.edge_ends(e);
    let matches = |e: EdgeIdx, x: Vertex, y: Vertex| {
        let (u, v) = ends(e);
        (u == x && v == y) || (u == y && v == x)
    };
    let (cf, cf2) = if matches(f4.chord_a, va, vb) && matches(f4.chord_b, va1, vb1) {
        (f4.chord_a, f4.chord_b)
    } else {
        debug_assert!(matches(f4.chord_b, va, vb) && matches(f4.chord_a, va1, vb1));
        (f4.chord_b, f4.chord_a)
    };

    let mut edges = Vec::with_capacity(l);
    let mut vertices = Vec::with_capacity(l);
    // w1: from just after e' around to just before e
    let mut idx = (b + 1) % l;
    while idx != a {
        edges.push(w.edges[idx]);
        vertices.push(w.vertices[idx]);
        idx = (idx + 1) % l;
    }
    // chord f: v_a -> v_b
    edges.push(cf);
    vertices.push(va);
    // -w2: edges b-1 .. a+1 in reverse
    let mut j = b;
    while j != a + 1 {
        edges.push(w.edges[j - 1]);
        vertices.push(w.vertices[j]);
        j -= 1;
    }
    // chord f': v_{a+1} -> start of w1
    edges.push(cf2);
    vertices.push(va1);

    debug_assert_eq!(edges.len(), l);
    ClosedWalk { edges, vertices }
}

/// Whether two walks are connected by a chain of single-F4 replacements.
pub fn f4_equivalent(g: &Graph, w1: &ClosedWalk, w2: &ClosedWalk) -> bool {
    let start = w1.canonical();
    let goal = w2.canonical();
    if start == goal {
        return true;
    }
    if binomial_of_walk(g, w1).degree != binomial_of_walk(g, w2).degree {
        return false;
    }
    let mut seen: BTreeSet<ClosedWalk> = BTreeSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start);
    while let Some(w) = queue.pop_front() {
        for f4 in find_f4s(g, &w) {
            let next = f4_replace(g, &w, &f4).canonical();
            if next == goal {
                return true;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

// ----------------------------------------------------------------------
// Walks from subgraphs and Graver enumeration
// ----------------------------------------------------------------------

/// If the connected subgraph spanned by `edge_set` underlies a primitive
/// walk (an even cycle, or all blocks cycles/cut edges with the odd parity
/// split at every cut vertex), returns that walk in canonical form.
pub fn walk_from_subgraph(g: &Graph, edge_set: &[EdgeIdx]) -> Result<Option<ClosedWalk>> {
    if edge_set.is_empty() {
        return Err(Error::precondition("empty edge set"));
    }
    let sub = g.edge_subgraph(edge_set);
    if !sub.graph.is_connected() {
        return Err(Error::precondition("edge set spans a disconnected subgraph"));
    }
    let dec = blocks::decompose(&sub.graph).expect("connected");

    if !dec.blocks.iter().all(|b| b.is_edge() || b.is_cycle()) {
        return Ok(None);
    }

    if dec.blocks.len() == 1 {
        let b = &dec.blocks[0];
        if !(b.is_cycle() && b.edges.len() % 2 == 0) {
            return Ok(None);
        }
    } else {
        // Every cut vertex must lie in exactly two blocks and split the
        // cyclic edges into two odd parts.
        let total_cyclic: usize = dec
            .blocks
            .iter()
            .filter(|b| b.is_cycle())
            .map(|b| b.edges.len())
            .sum();
        for &v in &dec.cut_vertices {
            let bs = dec.blocks_of_vertex(v);
            if bs.len() != 2 {
                return Ok(None);
            }
            let side = cyclic_edges_on_side(&dec, v, bs[0]);
            if side % 2 == 0 || (total_cyclic - side) % 2 == 0 {
                return Ok(None);
            }
        }
    }

    let walk = traverse_primitive(&sub.graph, &dec);
    // Map back to parent ids.
    let edges: Vec<EdgeIdx> = walk.edges.iter().map(|&e| sub.edge_map[e]).collect();
    let vertices: Vec<Vertex> = walk
        .vertices
        .iter()
        .map(|&v| sub.vertex_map[v as usize])
        .collect();
    Ok(Some(ClosedWalk { edges, vertices }.canonical()))
}

/// Cyclic edge count of the block-tree component containing `b` once cut
/// vertex `v` is removed.
fn cyclic_edges_on_side(dec: &BlockDecomposition, v: Vertex, b: usize) -> usize {
    let mut seen = vec![false; dec.blocks.len()];
    let mut stack = vec![b];
    seen[b] = true;
    let mut count = 0;
    while let Some(x) = stack.pop() {
        let blk = &dec.blocks[x];
        if blk.is_cycle() {
            count += blk.edges.len();
        }
        for &u in &blk.vertices {
            if u == v || !dec.is_cut_vertex(u) {
                continue;
            }
            for &y in dec.blocks_of_vertex(u) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Builds the primitive walk over a validated subgraph: cyclic block edges
/// once, cut edges twice, descending into the neighbor block at every cut
/// vertex.
fn traverse_primitive(sub: &Graph, dec: &BlockDecomposition) -> ClosedWalk {
    let mut edges = Vec::new();
    let mut vertices = Vec::new();
    let root = 0usize;
    let entry = dec.blocks[root].vertices[0];
    visit_block(sub, dec, root, entry, &mut edges, &mut vertices);
    // The entry itself may be a cut vertex; its other block is traversed
    // after the root closes.
    if dec.is_cut_vertex(entry) {
        let other = dec
            .blocks_of_vertex(entry)
            .iter()
            .copied()
            .find(|&b| b != root)
            .expect("cut vertex has a second block");
        visit_block(sub, dec, other, entry, &mut edges, &mut vertices);
    }
    ClosedWalk { edges, vertices }
}

fn visit_block(
    sub: &Graph,
    dec: &BlockDecomposition,
    b: usize,
    entry: Vertex,
    edges: &mut Vec<EdgeIdx>,
    vertices: &mut Vec<Vertex>,
) {
    let block = &dec.blocks[b];
    let in_block = |e: EdgeIdx| dec.block_of_edge(e) == b;
    let arrive = |v: Vertex, edges: &mut Vec<EdgeIdx>, vertices: &mut Vec<Vertex>| {
        // Recurse into the neighbor block at an interior cut vertex.
        if v != entry && dec.is_cut_vertex(v) {
            let other = dec
                .blocks_of_vertex(v)
                .iter()
                .copied()
                .find(|&x| x != b)
                .expect("cut vertex has a second block");
            visit_block(sub, dec, other, v, edges, vertices);
        }
    };
    if block.is_edge() {
        let e = block.edges[0];
        let (u, v) = sub.edge_ends(e);
        let far = if u == entry { v } else { u };
        edges.push(e);
        vertices.push(entry);
        arrive(far, edges, vertices);
        edges.push(e);
        vertices.push(far);
    } else {
        // Walk the cycle from the entry, smaller neighbor first.
        let mut prev = entry;
        let mut cur = entry;
        loop {
            let (next, e) = sub
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&(w, e)| in_block(e) && w != prev)
                .expect("cycle block traversal");
            edges.push(e);
            vertices.push(cur);
            prev = cur;
            cur = next;
            if cur == entry {
                break;
            }
            arrive(cur, edges, vertices);
        }
    }
}

/// Enumerates the Graver basis as primitive walks with their binomials,
/// by scanning connected edge subsets that satisfy the primitive-subgraph
/// characterization. Deterministic: sorted by binomial.
pub fn enumerate_graver(g: &Graph, budget: &Budget) -> Result<Vec<(ClosedWalk, Binomial)>> {
    let m = g.edge_count();
    if m > budget.max_subset_edges || m > 62 {
        return Err(Error::BudgetExceeded {
            what: "edge-subset enumeration",
            needed: m,
            limit: budget.max_subset_edges.min(62),
        });
    }
    let mut out: BTreeMap<Binomial, ClosedWalk> = BTreeMap::new();
    for mask in 1u64..(1u64 << m) {
        if (mask.count_ones() as usize) < 4 {
            continue;
        }
        let edge_set: Vec<EdgeIdx> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        let sub = g.edge_subgraph(&edge_set);
        if !sub.graph.is_connected() {
            continue;
        }
        if let Some(w) = walk_from_subgraph(g, &edge_set)? {
            let b = binomial_of_walk(g, &w);
            debug_assert!(!b.is_zero());
            out.entry(b).or_insert(w);
        }
    }
    Ok(out.into_iter().map(|(b, w)| (w, b)).collect())
}

/// The subset of the Graver basis passing the minimal-binomial test.
pub fn enumerate_minimal_binomials(
    g: &Graph,
    budget: &Budget,
) -> Result<Vec<(ClosedWalk, Binomial)>> {
    Ok(enumerate_graver(g, budget)?
        .into_iter()
        .filter(|(w, _)| is_minimal_binomial(g, w).minimal)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn c4_walk_and_binomial() {
        let g = families::cycle(4);
        // canonical edge order: e1={1,2}, e2={1,4}, e3={2,3}, e4={3,4}
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        let b = binomial_of_walk(&g, &w);
        assert_eq!(b.render(), "e1*e4 - e2*e3");
        assert_eq!(b.degree.0, vec![1, 1, 1, 1]);
    }

    #[test]
    fn bowtie_walk_from_subgraph() {
        let g = families::bowtie();
        let w = walk_from_subgraph(&g, &[0, 1, 2, 3, 4, 5]).unwrap().unwrap();
        assert_eq!(w.len(), 6);
        let b = binomial_of_walk(&g, &w);
        assert_eq!(b.total_degree(), 3);
        let sup_p = b.plus.support();
        let sup_m = b.minus.support();
        assert!(sup_p.iter().all(|e| !sup_m.contains(e)));
        assert!(is_primitive(&g, &w).primitive);
    }

    #[test]
    fn triangle_with_pendant_is_not_primitive_subgraph() {
        // triangle 1-2-3 plus pendant edge 1-4
        let g = Graph::parse_edge_list("1 2\n2 3\n1 3\n1 4").unwrap();
        let w = walk_from_subgraph(&g, &[0, 1, 2, 3]).unwrap();
        assert!(w.is_none());
    }

    #[test]
    fn walk_from_disconnected_subgraph_errors() {
        let g = Graph::parse_edge_list("1 2\n2 3\n1 3\n4 5\n5 6\n4 6").unwrap();
        assert!(walk_from_subgraph(&g, &[0, 3]).is_err());
    }

    #[test]
    fn dumbbell_binomial_doubles_the_cut_edge() {
        let g = families::dumbbell();
        let all: Vec<EdgeIdx> = (0..7).collect();
        let w = walk_from_subgraph(&g, &all).unwrap().unwrap();
        assert_eq!(w.len(), 8);
        let b = binomial_of_walk(&g, &w);
        // The cut edge is traversed twice at positions of equal parity, so it
        // appears squared on one side and the supports stay disjoint.
        let cut = g.edge_index(0, 3).unwrap();
        let doubled = b.plus.0[cut].max(b.minus.0[cut]);
        assert_eq!(doubled, 2);
        assert_eq!(b.plus.0[cut].min(b.minus.0[cut]), 0);
        assert!(is_primitive(&g, &w).primitive);
    }

    #[test]
    fn c4_twice_is_not_primitive() {
        let g = families::cycle(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3, 0, 1, 2, 3]).unwrap();
        let rep = is_primitive(&g, &w);
        assert!(!rep.primitive);
    }

    #[test]
    fn chord_classification_on_k4() {
        let g = families::complete(4);
        // 4-cycle 1-2-4-3: edges {1,2},{2,4},{3,4},{1,3}
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 3, 2]).unwrap();
        let c = classify_chord(&g, &w, g.edge_index(0, 3).unwrap()).unwrap();
        assert_eq!(c.class, ChordClass::Odd);
        let c = classify_chord(&g, &w, g.edge_index(1, 2).unwrap()).unwrap();
        assert_eq!(c.class, ChordClass::Odd);
        // A walk edge is not a chord.
        assert!(classify_chord(&g, &w, g.edge_index(0, 1).unwrap()).is_err());
    }

    #[test]
    fn even_chord_on_c6() {
        // C6 plus the long chord 1-4: breaks into two even closed walks.
        let g = Graph::parse_edge_list("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n1 4").unwrap();
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let chord = g.edge_index(0, 3).unwrap();
        let c = classify_chord(&g, &w, chord).unwrap();
        assert_eq!(c.class, ChordClass::Even);
    }

    #[test]
    fn bridge_chord_on_joined_triangles() {
        // Two triangles joined by an edge between non-cut vertices; the walk
        // is the two triangles plus the connecting structure... use the
        // bowtie circuit and add an edge joining the triangles.
        let mut pairs = vec![(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)];
        pairs.push((1, 3));
        let g = Graph::new(5, &pairs).unwrap();
        let bowtie_edges: Vec<EdgeIdx> = (0..g.edge_count())
            .filter(|&e| g.edge_ends(e) != (1, 3))
            .collect();
        let w = walk_from_subgraph(&g, &bowtie_edges).unwrap().unwrap();
        let chord = g.edge_index(1, 3).unwrap();
        let c = classify_chord(&g, &w, chord).unwrap();
        assert_eq!(c.class, ChordClass::Bridge);
    }

    #[test]
    fn crossing_chords_on_k4() {
        let g = families::complete(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 3, 2]).unwrap();
        let f = g.edge_index(0, 3).unwrap();
        let f2 = g.edge_index(1, 2).unwrap();
        assert!(cross_effectively(&g, &w, f, f2).unwrap());
        assert!(!cross_effectively(&g, &w, f, f).unwrap());
    }

    #[test]
    fn disjoint_arcs_do_not_cross() {
        // C8 with chords 1-3 and 5-7: both odd, arcs disjoint.
        let g = Graph::parse_edge_list(
            "1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 1\n1 3\n5 7",
        )
        .unwrap();
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        let f = g.edge_index(0, 2).unwrap();
        let f2 = g.edge_index(4, 6).unwrap();
        assert!(!cross_effectively(&g, &w, f, f2).unwrap());
    }

    #[test]
    fn f4s_of_k4_four_cycle() {
        let g = families::complete(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 3, 2]).unwrap();
        let f4s = find_f4s(&g, &w);
        // Both pairings of the two crossing chords close 4-cycles with walk
        // edges of equal position parity.
        assert_eq!(f4s.len(), 2);
        for f4 in &f4s {
            assert_ne!(f4.walk_edge_a, f4.walk_edge_b);
        }
    }

    #[test]
    fn no_f4_without_chords() {
        let g = families::cycle(6);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(find_f4s(&g, &w).is_empty());
        let g = families::cycle(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        assert!(find_f4s(&g, &w).is_empty());
    }

    #[test]
    fn strong_primitivity_cases() {
        let g = families::bowtie();
        let w = walk_from_subgraph(&g, &(0..6).collect::<Vec<_>>()).unwrap().unwrap();
        assert!(is_strongly_primitive(&g, &w).unwrap());

        let g = families::cycle(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        assert!(is_strongly_primitive(&g, &w).unwrap());

        // Triangles at adjacent corners of a square: primitive, but with
        // adjacent sinks in the square block.
        let g = families::triangle_square_triangle(true);
        let all: Vec<EdgeIdx> = (0..g.edge_count()).collect();
        let w = walk_from_subgraph(&g, &all).unwrap().unwrap();
        assert!(is_primitive(&g, &w).primitive);
        assert!(!is_strongly_primitive(&g, &w).unwrap());

        // Opposite corners: strongly primitive.
        let g = families::triangle_square_triangle(false);
        let all: Vec<EdgeIdx> = (0..g.edge_count()).collect();
        let w = walk_from_subgraph(&g, &all).unwrap().unwrap();
        assert!(is_strongly_primitive(&g, &w).unwrap());

        let g4 = families::cycle(4);
        let w2 = ClosedWalk::from_vertices(&g4, &[0, 1, 2, 3, 0, 1, 2, 3]).unwrap();
        assert!(is_strongly_primitive(&g4, &w2).is_err());
    }

    #[test]
    fn circuit_cases() {
        let g = families::cycle(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(is_circuit(&g, &w), Some(CircuitCase::EvenCycle));

        let g = families::bowtie();
        let w = walk_from_subgraph(&g, &(0..6).collect::<Vec<_>>()).unwrap().unwrap();
        assert_eq!(is_circuit(&g, &w), Some(CircuitCase::TwoOddCyclesAtVertex));

        let g = families::dumbbell();
        let w = walk_from_subgraph(&g, &(0..7).collect::<Vec<_>>()).unwrap().unwrap();
        assert_eq!(
            is_circuit(&g, &w),
            Some(CircuitCase::TwoOddCyclesJoinedByPath)
        );

        // Triangle, even cycle, triangle: three cyclic blocks, not a circuit.
        let g = families::triangle_square_triangle(false);
        let all: Vec<EdgeIdx> = (0..g.edge_count()).collect();
        let w = walk_from_subgraph(&g, &all).unwrap().unwrap();
        assert_eq!(is_circuit(&g, &w), None);
    }

    #[test]
    fn minimality_cases() {
        let g = families::cycle(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        assert!(is_minimal_binomial(&g, &w).minimal);

        // Any 4-cycle of K4: two crossing odd chords which form an F4.
        let g = families::complete(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 3, 2]).unwrap();
        assert!(is_minimal_binomial(&g, &w).minimal);

        // C6 with an even chord: not minimal.
        let g = Graph::parse_edge_list("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n1 4").unwrap();
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let rep = is_minimal_binomial(&g, &w);
        assert!(!rep.minimal);
        assert!(rep.violations.iter().any(|v| v.contains("even chord")));
    }

    #[test]
    fn f4_equivalence_on_k4() {
        let g = families::complete(4);
        let w1 = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        let w2 = ClosedWalk::from_vertices(&g, &[0, 1, 3, 2]).unwrap();
        let w3 = ClosedWalk::from_vertices(&g, &[0, 2, 1, 3]).unwrap();
        assert!(f4_equivalent(&g, &w1, &w1));
        assert!(f4_equivalent(&g, &w1, &w2));
        assert!(f4_equivalent(&g, &w1, &w3));
        assert!(f4_equivalent(&g, &w2, &w3));
    }

    #[test]
    fn disjoint_squares_are_not_equivalent() {
        let g = Graph::parse_edge_list("1 2\n2 3\n3 4\n4 1\n5 6\n6 7\n7 8\n8 5").unwrap();
        let w1 = ClosedWalk::from_vertices(&g, &[0, 1, 2, 3]).unwrap();
        let w2 = ClosedWalk::from_vertices(&g, &[4, 5, 6, 7]).unwrap();
        assert!(!f4_equivalent(&g, &w1, &w2));
    }

    #[test]
    fn graver_counts() {
        let budget = Budget::default();
        assert_eq!(enumerate_graver(&families::cycle(4), &budget).unwrap().len(), 1);
        assert_eq!(enumerate_graver(&families::complete(4), &budget).unwrap().len(), 3);
        assert_eq!(enumerate_graver(&families::bowtie(), &budget).unwrap().len(), 1);
    }

    #[test]
    fn minimal_binomial_counts() {
        let budget = Budget::default();
        assert_eq!(
            enumerate_minimal_binomials(&families::cycle(4), &budget).unwrap().len(),
            1
        );
        assert_eq!(
            enumerate_minimal_binomials(&families::complete(4), &budget).unwrap().len(),
            3
        );
        let k23 = families::complete_bipartite(2, 3);
        let mins = enumerate_minimal_binomials(&k23, &budget).unwrap();
        assert_eq!(mins.len(), 3);
        let degrees: BTreeSet<Vec<u32>> =
            mins.iter().map(|(_, b)| b.degree.0.clone()).collect();
        assert_eq!(degrees.len(), 3);
    }

    #[test]
    fn graver_budget_guard() {
        let g = families::cycle(4);
        let tight = Budget {
            max_subset_edges: 3,
            ..Budget::default()
        };
        assert!(matches!(
            enumerate_graver(&g, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn predicates_are_orientation_invariant() {
        let g = families::complete(4);
        let w = ClosedWalk::from_vertices(&g, &[0, 1, 3, 2]).unwrap();
        let flipped = w.reversed();
        let rotated = w.rotated(1);
        for v in [&flipped, &rotated] {
            assert_eq!(is_primitive(&g, v).primitive, is_primitive(&g, &w).primitive);
            assert_eq!(
                is_minimal_binomial(&g, v).minimal,
                is_minimal_binomial(&g, &w).minimal
            );
            assert_eq!(is_circuit(&g, v), is_circuit(&g, &w));
            assert_eq!(binomial_of_walk(&g, v), {
                // sign normalization makes the binomial orientation-free
                binomial_of_walk(&g, &w)
            });
        }
    }

    #[test]
    fn walk_sides_share_degree() {
        let g = families::bowtie();
        let w = walk_from_subgraph(&g, &(0..6).collect::<Vec<_>>()).unwrap().unwrap();
        let m = g.edge_count();
        let mut plus = vec![0u32; m];
        let mut minus = vec![0u32; m];
        for (i, &e) in w.edge_sequence().iter().enumerate() {
            if i % 2 == 0 {
                plus[e] += 1
            } else {
                minus[e] += 1
            }
        }
        assert_eq!(
            EdgeMonomial(plus).g_degree(&g),
            EdgeMonomial(minus).g_degree(&g)
        );
    }
}
