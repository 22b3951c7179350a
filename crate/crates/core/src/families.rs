//! Named small graphs used throughout the tests and documentation.

use crate::graph::{Graph, Vertex};

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3);
    let pairs: Vec<(Vertex, Vertex)> = (0..k)
        .map(|i| (i as Vertex, ((i + 1) % k) as Vertex))
        .collect();
    Graph::new(k, &pairs).unwrap()
}

/// Complete graph on `k` vertices.
pub fn complete(k: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..k as Vertex {
        for j in (i + 1)..k as Vertex {
            pairs.push((i, j));
        }
    }
    Graph::new(k, &pairs).unwrap()
}

/// Complete bipartite graph with parts of size `a` and `b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..a as Vertex {
        for j in 0..b as Vertex {
            pairs.push((i, a as Vertex + j));
        }
    }
    Graph::new(a + b, &pairs).unwrap()
}

/// Two triangles sharing a single vertex (vertex 0).
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
}

/// Two squares sharing one edge.
pub fn domino() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)],
    )
    .unwrap()
}

/// Two vertex-disjoint triangles joined by a path with `path_edges >= 1`
/// edges between vertex 0 of the first and vertex 3 of the second.
pub fn triangles_joined_by_path(path_edges: usize) -> Graph {
    assert!(path_edges >= 1);
    let mut pairs = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
    let mut prev: Vertex = 0;
    let mut next: Vertex = 6;
    for i in 0..path_edges {
        let target = if i + 1 == path_edges { 3 } else { next };
        pairs.push((prev, target));
        prev = target;
        next += 1;
    }
    Graph::new(6 + path_edges - 1, &pairs).unwrap()
}

/// Three triangles all sharing vertex 0.
pub fn three_triangles_at_a_vertex() -> Graph {
    Graph::new(
        7,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (0, 3),
            (3, 4),
            (0, 4),
            (0, 5),
            (5, 6),
            (0, 6),
        ],
    )
    .unwrap()
}

/// Two triangles attached to corners of a central square. With
/// `adjacent = true` the corners share an edge of the square, otherwise
/// they are opposite.
pub fn triangle_square_triangle(adjacent: bool) -> Graph {
    // square 0-1-2-3, triangles at 0 and at (1 or 2)
    let other: Vertex = if adjacent { 1 } else { 2 };
    Graph::new(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (0, 4),
            (4, 5),
            (0, 5),
            (other, 6),
            (6, 7),
            (other, 7),
        ],
    )
    .unwrap()
}

/// Dumbbell: two triangles joined by a single cut edge.
pub fn dumbbell() -> Graph {
    triangles_joined_by_path(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        assert_eq!(cycle(4).edge_count(), 4);
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(bowtie().edge_count(), 6);
        assert_eq!(domino().edge_count(), 7);
        assert_eq!(dumbbell().edge_count(), 7);
        assert_eq!(dumbbell().vertex_count(), 6);
        let t2 = triangles_joined_by_path(2);
        assert_eq!(t2.edge_count(), 8);
        assert_eq!(t2.vertex_count(), 7);
        assert_eq!(three_triangles_at_a_vertex().edge_count(), 9);
        assert_eq!(triangle_square_triangle(true).edge_count(), 10);
        for g in [
            cycle(4),
            complete(4),
            bowtie(),
            domino(),
            dumbbell(),
            triangles_joined_by_path(2),
            triangle_square_triangle(false),
        ] {
            assert!(g.is_connected());
        }
    }
}
