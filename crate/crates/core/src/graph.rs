//! Core graph model: a finite simple undirected graph with canonical
//! vertex/edge indexing, plus the degree machinery shared by the walk and
//! fiber layers.
//!
//! Vertices are `0..n` internally and `1..=n` in every external format.
//! Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically;
//! the resulting edge index is stable and fixes the enumeration order of
//! everything downstream.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Internal 0-based vertex id. External formats use 1-based labels.
pub type Vertex = u32;
/// Internal 0-based edge index. External formats use 1-based `e1..em`.
pub type EdgeIdx = usize;

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeIdx)>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs. Pairs are normalized to
    /// `u < v` and sorted; loops and duplicates are rejected.
    pub fn new(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::input(0, format!("loop edge at vertex {}", a + 1)));
            }
            if a as usize >= n || b as usize >= n {
                return Err(Error::input(
                    0,
                    format!("vertex out of range: {}", a.max(b) + 1),
                ));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(
                0,
                format!("duplicate edge {{{}, {}}}", w[0].0 + 1, w[0].1 + 1),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u as usize].push((v, i));
            adj[v as usize].push((u, i));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_ends(&self, e: EdgeIdx) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Neighbors of `v` as `(neighbor, edge index)`, sorted by neighbor.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeIdx)] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    /// Edge index of `{u, v}` if present.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<EdgeIdx> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// `a_e = v_i + v_j` for the edge `e = {v_i, v_j}`.
    pub fn edge_degree(&self, e: EdgeIdx) -> GDegree {
        let mut d = vec![0u32; self.n];
        let (u, v) = self.edges[e];
        d[u as usize] += 1;
        d[v as usize] += 1;
        GDegree(d)
    }

    // ------------------------------------------------------------------
    // Parsing / serialization
    // ------------------------------------------------------------------

    /// Parses the edge-list text format: one `u v` pair per line, with an
    /// optional leading header `n <count>`. Blank lines and lines starting
    /// with `#` are ignored. Vertices are relabeled to `1..n` preserving the
    /// order of first appearance; with a header, labels must already lie in
    /// `1..=count`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared_n: Option<usize> = None;
        let mut relabel: BTreeMap<u64, Vertex> = BTreeMap::new();
        let mut order: Vec<u64> = Vec::new();
        let mut raw: Vec<(u64, u64, usize)> = Vec::new();
        let mut saw_content = false;

        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if !saw_content && toks.len() == 2 && toks[0] == "n" {
                let c: usize = toks[1]
                    .parse()
                    .map_err(|_| Error::input(lineno, format!("bad vertex count `{}`", toks[1])))?;
                declared_n = Some(c);
                saw_content = true;
                continue;
            }
            saw_content = true;
            if toks.len() != 2 {
                return Err(Error::input(
                    lineno,
                    format!("expected `u v`, got `{line}`"),
                ));
            }
            let mut ends = [0u64; 2];
            for (k, t) in toks.iter().enumerate() {
                ends[k] = t
                    .parse::<u64>()
                    .map_err(|_| Error::input(lineno, format!("non-integer token `{t}`")))?;
                if ends[k] == 0 {
                    return Err(Error::input(lineno, "vertex labels start at 1"));
                }
            }
            if ends[0] == ends[1] {
                return Err(Error::input(lineno, format!("loop edge at vertex {}", ends[0])));
            }
            raw.push((ends[0], ends[1], lineno));
        }

        let n = match declared_n {
            Some(c) => {
                for &(a, b, lineno) in &raw {
                    if a as usize > c || b as usize > c {
                        return Err(Error::input(
                            lineno,
                            format!("vertex label {} exceeds declared n={}", a.max(b), c),
                        ));
                    }
                }
                for v in 1..=c as u64 {
                    relabel.insert(v, (v - 1) as Vertex);
                }
                c
            }
            None => {
                for &(a, b, _) in &raw {
                    for v in [a, b] {
                        if !relabel.contains_key(&v) {
                            relabel.insert(v, order.len() as Vertex);
                            order.push(v);
                        }
                    }
                }
                order.len()
            }
        };

        let mut pairs = Vec::with_capacity(raw.len());
        let mut seen: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
        for &(a, b, lineno) in &raw {
            let (u, v) = (relabel[&a], relabel[&b]);
            let key = (u.min(v), u.max(v));
            if let Some(first) = seen.get(&key) {
                return Err(Error::input(
                    lineno,
                    format!("duplicate edge {{{a}, {b}}} (first seen on line {first})"),
                ));
            }
            seen.insert(key, lineno);
            pairs.push(key);
        }
        Graph::new(n, &pairs)
    }

    /// Serializes back to the edge-list format (with header, canonical order).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// Parses the JSON graph format `{"n": int, "edges": [[u, v], ...]}`.
    pub fn parse_json(text: &str) -> Result<Graph> {
        let j: GraphJson = serde_json::from_str(text)
            .map_err(|e| Error::input(0, format!("bad graph JSON: {e}")))?;
        j.try_into()
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| [u as u64 + 1, v as u64 + 1])
                .collect(),
        }
    }

    // ------------------------------------------------------------------
    // Connectivity / bipartiteness / height
    // ------------------------------------------------------------------

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0 as Vertex];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Splits into connected components, ordered by smallest original vertex.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut comp = vec![usize::MAX; self.n];
        let mut reps: Vec<Vertex> = Vec::new();
        for s in 0..self.n as Vertex {
            if comp[s as usize] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(s);
            comp[s as usize] = id;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &(w, _) in self.neighbors(v) {
                    if comp[w as usize] == usize::MAX {
                        comp[w as usize] = id;
                        stack.push(w);
                    }
                }
            }
        }
        (0..reps.len())
            .map(|id| {
                let vs: Vec<Vertex> = (0..self.n as Vertex)
                    .filter(|&v| comp[v as usize] == id)
                    .collect();
                self.induced_component(&vs)
            })
            .collect()
    }

    fn induced_component(&self, vs: &[Vertex]) -> Component {
        let mut back = vec![u32::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            back[v as usize] = i as u32;
        }
        let mut pairs = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if back[u as usize] != u32::MAX && back[v as usize] != u32::MAX {
                pairs.push((back[u as usize], back[v as usize]));
                edge_map.push(e);
            }
        }
        let graph = Graph::new(vs.len(), &pairs).expect("induced subgraph of a valid graph");
        Component {
            graph,
            vertex_map: vs.to_vec(),
            edge_map,
        }
    }

    /// Subgraph spanned by a set of edge indices (not induced: only the
    /// listed edges are kept). Vertices are the covered endpoints.
    pub fn edge_subgraph(&self, edge_set: &[EdgeIdx]) -> Component {
        let mut es: Vec<EdgeIdx> = edge_set.to_vec();
        es.sort_unstable();
        es.dedup();
        let mut vs: Vec<Vertex> = es
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.edges[e];
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        let mut back = vec![u32::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            back[v as usize] = i as u32;
        }
        let pairs: Vec<(Vertex, Vertex)> = es
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e];
                (back[u as usize], back[v as usize])
            })
            .collect();
        let graph = Graph::new(vs.len(), &pairs).expect("edge subgraph of a valid graph");
        Component {
            graph,
            vertex_map: vs,
            edge_map: es,
        }
    }

    /// Induced subgraph on a vertex set (0-based ids, deduplicated, sorted).
    pub fn induced_subgraph(&self, h_set: &[Vertex]) -> Result<Component> {
        let mut vs: Vec<Vertex> = h_set.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&v) = vs.iter().find(|&&v| v as usize >= self.n) {
            return Err(Error::precondition(format!(
                "vertex {} out of range (n={})",
                v + 1,
                self.n
            )));
        }
        Ok(self.induced_component(&vs))
    }

    /// 2-coloring or an odd-cycle witness.
    pub fn bipartiteness(&self) -> Bipartiteness {
        let mut color = vec![u8::MAX; self.n];
        let mut parent: Vec<Option<Vertex>> = vec![None; self.n];
        for s in 0..self.n as Vertex {
            if color[s as usize] != u8::MAX {
                continue;
            }
            color[s as usize] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in self.neighbors(v) {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - color[v as usize];
                        parent[w as usize] = Some(v);
                        queue.push_back(w);
                    } else if color[w as usize] == color[v as usize] {
                        return Bipartiteness::OddCycle {
                            cycle: odd_cycle_from_conflict(&parent, v, w),
                        };
                    }
                }
            }
        }
        Bipartiteness::Bipartite { coloring: color }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartiteness(), Bipartiteness::Bipartite { .. })
    }

    /// Height of the toric ideal of a connected graph:
    /// `m - n + 1` when bipartite, `m - n` otherwise.
    pub fn ideal_height(&self) -> Result<i64> {
        if !self.is_connected() {
            return Err(Error::Disconnected(format!(
                "n={}, m={}",
                self.n,
                self.edges.len()
            )));
        }
        let m = self.edges.len() as i64;
        let n = self.n as i64;
        Ok(if self.is_bipartite() { m - n + 1 } else { m - n })
    }
}

/// An induced subgraph together with the maps back to the parent graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    /// Component vertex `i` is parent vertex `vertex_map[i]`.
    pub vertex_map: Vec<Vertex>,
    /// Component edge `i` is parent edge `edge_map[i]`.
    pub edge_map: Vec<EdgeIdx>,
}

#[derive(Clone, Debug)]
pub enum Bipartiteness {
    Bipartite { coloring: Vec<u8> },
    /// A closed odd cycle, as a vertex list without the repeated endpoint.
    OddCycle { cycle: Vec<Vertex> },
}

fn odd_cycle_from_conflict(parent: &[Option<Vertex>], v: Vertex, w: Vertex) -> Vec<Vertex> {
    // Walk both BFS-tree paths up to the lowest common ancestor.
    let path_to_root = |mut x: Vertex| {
        let mut p = vec![x];
        while let Some(y) = parent[x as usize] {
            p.push(y);
            x = y;
        }
        p
    };
    let pv = path_to_root(v);
    let pw = path_to_root(w);
    // Trim the common suffix; pv[i] == pw[j] is then the lowest common
    // ancestor. The cycle is v..lca, lca's other branch back down to w,
    // closed by the conflict edge {w, v}.
    let mut i = pv.len() - 1;
    let mut j = pw.len() - 1;
    while i > 0 && j > 0 && pv[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<Vertex> = pv[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    cycle
}

/// JSON form of a graph: `{"n": 4, "edges": [[1,2],[2,3]]}` (1-based).
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u64; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Graph> {
        let mut pairs = Vec::with_capacity(j.edges.len());
        for &[a, b] in &j.edges {
            if a == 0 || b == 0 || a as usize > j.n || b as usize > j.n {
                return Err(Error::input(
                    0,
                    format!("edge [{a}, {b}] out of range for n={}", j.n),
                ));
            }
            if a == b {
                return Err(Error::input(0, format!("loop edge at vertex {a}")));
            }
            pairs.push(((a - 1) as Vertex, (b - 1) as Vertex));
        }
        Graph::new(j.n, &pairs)
    }
}

// ----------------------------------------------------------------------
// Degree machinery
// ----------------------------------------------------------------------

/// The G-degree of an edge monomial: the multiplicity of each vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GDegree(pub Vec<u32>);

impl GDegree {
    pub fn zero(n: usize) -> GDegree {
        GDegree(vec![0; n])
    }

    /// Sum of all vertex multiplicities (twice the monomial total degree).
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Graded comparison key: total first, then lexicographic.
    pub fn graded_key(&self) -> (u32, Vec<u32>) {
        (self.total(), self.0.clone())
    }
}

impl std::fmt::Debug for GDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "deg{:?}", self.0)
    }
}

/// An exponent vector over the edge variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMonomial(pub Vec<u32>);

impl EdgeMonomial {
    pub fn one(m: usize) -> EdgeMonomial {
        EdgeMonomial(vec![0; m])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> Vec<EdgeIdx> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn g_degree(&self, g: &Graph) -> GDegree {
        let mut d = vec![0u32; g.vertex_count()];
        for (e, &x) in self.0.iter().enumerate() {
            if x > 0 {
                let (u, v) = g.edge_ends(e);
                d[u as usize] += x;
                d[v as usize] += x;
            }
        }
        GDegree(d)
    }

    pub fn divides(&self, other: &EdgeMonomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self - p + q`, defined when `p` divides `self`.
    pub fn exchange(&self, p: &EdgeMonomial, q: &EdgeMonomial) -> Option<EdgeMonomial> {
        if !p.divides(self) {
            return None;
        }
        Some(EdgeMonomial(
            self.0
                .iter()
                .zip(&p.0)
                .zip(&q.0)
                .map(|((&a, &b), &c)| a - b + c)
                .collect(),
        ))
    }

    /// Renders as `e1*e5^2` (1-based indices); `1` for the empty monomial.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (e, &x) in self.0.iter().enumerate() {
            match x {
                0 => {}
                1 => parts.push(format!("e{}", e + 1)),
                _ => parts.push(format!("e{}^{}", e + 1, x)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl std::fmt::Debug for EdgeMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle_graph(k: usize) -> Graph {
        let pairs: Vec<(Vertex, Vertex)> = (0..k)
            .map(|i| (i as Vertex, ((i + 1) % k) as Vertex))
            .collect();
        Graph::new(k, &pairs).unwrap()
    }

    #[test]
    fn parse_c4() {
        let g = Graph::parse_edge_list("1 2\n2 3\n3 4\n4 1").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.is_connected());
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        let err = Graph::parse_edge_list("1 2\n1 2").unwrap_err();
        match err {
            Error::InputFormat { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn parse_rejects_loop() {
        let err = Graph::parse_edge_list("1 1").unwrap_err();
        match err {
            Error::InputFormat { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn parse_rejects_garbage_token() {
        let err = Graph::parse_edge_list("1 x").unwrap_err();
        match err {
            Error::InputFormat { line, msg } => {
                assert_eq!(line, 1);
                assert!(msg.contains('x'));
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn relabeling_preserves_first_appearance() {
        let g = Graph::parse_edge_list("10 20\n20 30").unwrap();
        assert_eq!(g.vertex_count(), 3);
        // 10 -> 1, 20 -> 2, 30 -> 3
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn header_allows_isolated_vertices() {
        let g = Graph::parse_edge_list("n 3\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.connected_components().len(), 2);
    }

    #[test]
    fn components_of_disjoint_cycles() {
        // C3 on 1..3, C4 on 4..7
        let g =
            Graph::parse_edge_list("1 2\n2 3\n3 1\n4 5\n5 6\n6 7\n7 4").unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].graph.vertex_count(), 3);
        assert_eq!(comps[1].graph.vertex_count(), 4);
    }

    #[test]
    fn empty_edge_set_gives_singletons() {
        let g = Graph::parse_edge_list("n 3\n").unwrap();
        assert_eq!(g.connected_components().len(), 3);
    }

    #[test]
    fn heights_of_small_graphs() {
        assert_eq!(cycle_graph(4).ideal_height().unwrap(), 1);
        assert_eq!(cycle_graph(3).ideal_height().unwrap(), 0);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.ideal_height().unwrap(), 2);
    }

    #[test]
    fn height_requires_connected() {
        let g = Graph::parse_edge_list("1 2\n3 4").unwrap();
        assert!(matches!(g.ideal_height(), Err(Error::Disconnected(_))));
    }

    #[test]
    fn bipartite_detection() {
        assert!(cycle_graph(4).is_bipartite());
        assert!(!cycle_graph(3).is_bipartite());
        // bowtie: triangles 0-1-2 and 0-3-4
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert!(!bowtie.is_bipartite());
        match cycle_graph(3).bipartiteness() {
            Bipartiteness::OddCycle { cycle } => assert_eq!(cycle.len() % 2, 1),
            _ => panic!("C3 must report an odd cycle"),
        }
    }

    #[test]
    fn induced_subgraphs_of_k4_and_c4() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let tri = k4.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(tri.graph.edge_count(), 3);
        let c4 = cycle_graph(4);
        let adjacent = c4.induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(adjacent.graph.edge_count(), 1);
        let opposite = c4.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(opposite.graph.edge_count(), 0);
        assert!(c4.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::parse_edge_list("3 7\n7 5\n5 3\n1 2\n2 3").unwrap();
        let g2 = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g.edges(), g2.edges());
        assert_eq!(g.vertex_count(), g2.vertex_count());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::parse_edge_list("1 2\n2 3\n3 1").unwrap();
        let text = serde_json::to_string(&g.to_json_value()).unwrap();
        let g2 = Graph::parse_json(&text).unwrap();
        assert_eq!(g.edges(), g2.edges());
    }

    #[test]
    fn g_degree_counts_both_endpoints() {
        let g = cycle_graph(4);
        // e1={1,2} and e4={3,4} form a perfect matching
        let mono = EdgeMonomial(vec![1, 0, 0, 1]);
        let d = mono.g_degree(&g);
        assert_eq!(d.total(), 2 * mono.total_degree());
        assert_eq!(d.0, vec![1, 1, 1, 1]);
    }
}
