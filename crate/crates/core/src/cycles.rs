//! Enumeration of chordless (induced) cycles.
//!
//! A cycle C is chordless when the induced graph on V(C) is C itself. The
//! search grows induced paths from the smallest cycle vertex and closes them
//! on an edge back to the start, so every chordless cycle is reported exactly
//! once, in a deterministic order.

use crate::graph::{EdgeIdx, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    /// Cycle vertices in traversal order, without the repeated endpoint.
    pub vertices: Vec<Vertex>,
    /// Edge indices in traversal order (last edge closes back to the start).
    pub edges: Vec<EdgeIdx>,
    pub odd: bool,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }
}

/// All chordless cycles of `g`, each tagged odd/even.
pub fn enumerate_chordless_cycles(g: &Graph) -> Vec<Cycle> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path: Vec<Vertex> = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n as Vertex {
        path.push(s);
        on_path[s as usize] = true;
        for &(u, _) in g.neighbors(s) {
            if u > s {
                path.push(u);
                on_path[u as usize] = true;
                extend(g, s, &mut path, &mut on_path, &mut out);
                path.pop();
                on_path[u as usize] = false;
            }
        }
        path.pop();
        on_path[s as usize] = false;
    }
    out
}

/// Grows the induced path `path` (which starts at `s`). Closing is allowed
/// only through an edge to `s`; the path invariant guarantees the closed
/// cycle has no chord.
fn extend(g: &Graph, s: Vertex, path: &mut Vec<Vertex>, on_path: &mut [bool], out: &mut Vec<Cycle>) {
    let last = *path.last().unwrap();
    let closes = path.len() >= 3 && g.has_edge(last, s);
    if closes {
        // Direction canonicalization: second vertex smaller than last.
        if path[1] < last {
            let vertices = path.clone();
            let k = vertices.len();
            let edges: Vec<EdgeIdx> = (0..k)
                .map(|i| g.edge_index(vertices[i], vertices[(i + 1) % k]).unwrap())
                .collect();
            out.push(Cycle {
                odd: k % 2 == 1,
                vertices,
                edges,
            });
        }
        // Any extension would keep the chord {last, s}.
        return;
    }
    'next: for &(w, _) in g.neighbors(last) {
        if w <= s || on_path[w as usize] {
            continue;
        }
        // w must not be adjacent to any path vertex other than `last`
        // (adjacency to s is the potential closing edge, checked above).
        for &p in path[1..path.len() - 1].iter() {
            if g.has_edge(w, p) {
                continue 'next;
            }
        }
        path.push(w);
        on_path[w as usize] = true;
        extend(g, s, path, on_path, out);
        path.pop();
        on_path[w as usize] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn k4_has_four_chordless_triangles() {
        let cycles = enumerate_chordless_cycles(&families::complete(4));
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 3 && c.odd));
    }

    #[test]
    fn k33_has_nine_chordless_squares() {
        let cycles = enumerate_chordless_cycles(&families::complete_bipartite(3, 3));
        assert_eq!(cycles.len(), 9);
        assert!(cycles.iter().all(|c| c.len() == 4 && !c.odd));
    }

    #[test]
    fn domino_has_two_squares() {
        let cycles = enumerate_chordless_cycles(&families::domino());
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn plain_cycle_is_its_own_chordless_cycle() {
        for k in 3..=7 {
            let cycles = enumerate_chordless_cycles(&families::cycle(k));
            assert_eq!(cycles.len(), 1);
            assert_eq!(cycles[0].len(), k);
            assert_eq!(cycles[0].odd, k % 2 == 1);
        }
    }

    #[test]
    fn bowtie_has_two_triangles() {
        let cycles = enumerate_chordless_cycles(&families::bowtie());
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.odd));
    }

    #[test]
    fn forest_has_no_cycles() {
        let g = crate::graph::Graph::parse_edge_list("1 2\n2 3\n2 4").unwrap();
        assert!(enumerate_chordless_cycles(&g).is_empty());
    }

    #[test]
    fn deterministic_order() {
        let g = families::complete_bipartite(3, 3);
        let a = enumerate_chordless_cycles(&g);
        let b = enumerate_chordless_cycles(&g);
        assert_eq!(a, b);
    }
}
