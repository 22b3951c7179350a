//! Biconnected decomposition, the block tree, contiguity and block typing.
//!
//! Blocks are maximal biconnected subgraphs; their edge sets partition E(G).
//! The block tree is the bipartite tree on blocks and cut vertices with an
//! edge {B, v} whenever v lies in B. Block ids are assigned by smallest
//! contained edge index, so all downstream reports are deterministic.

use crate::cycles::{enumerate_chordless_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{EdgeIdx, Graph, Vertex};

pub type BlockId = usize;

#[derive(Clone, Debug)]
pub struct Block {
    pub id: BlockId,
    /// Edge indices of the block, sorted.
    pub edges: Vec<EdgeIdx>,
    /// Vertices of the block, sorted.
    pub vertices: Vec<Vertex>,
}

impl Block {
    pub fn is_edge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A biconnected block is a cycle exactly when |E| == |V|.
    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Cut vertices, sorted. A vertex is a cut vertex iff it lies in >= 2 blocks.
    pub cut_vertices: Vec<Vertex>,
    block_of_edge: Vec<BlockId>,
    blocks_of_vertex: Vec<Vec<BlockId>>,
    edge_ends: Vec<(Vertex, Vertex)>,
}

/// Per-block profile: bipartiteness and the number of chordless odd cycles
/// (the block's type T_i).
#[derive(Clone, Debug)]
pub struct BlockProfile {
    pub block: BlockId,
    pub is_edge: bool,
    pub bipartite: bool,
    pub t_type: usize,
    /// Chordless odd cycles of the block, as vertex lists of the parent graph.
    pub chordless_odd_cycles: Vec<Vec<Vertex>>,
}

/// Computes all blocks and cut vertices of a connected graph.
pub fn decompose(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "block decomposition requires a connected graph".into(),
        ));
    }
    let n = g.vertex_count();
    let m = g.edge_count();

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut edge_stack: Vec<EdgeIdx> = Vec::new();
    let mut raw_blocks: Vec<Vec<EdgeIdx>> = Vec::new();

    if m > 0 {
        // Iterative DFS from vertex 0; frames carry the neighbor cursor.
        let mut timer = 0usize;
        let mut stack: Vec<(Vertex, Option<EdgeIdx>, usize)> = Vec::new();
        disc[0] = timer;
        low[0] = timer;
        timer += 1;
        stack.push((0, None, 0));
        while let Some(&mut (u, pe, ref mut cursor)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *cursor < nbrs.len() {
                let (w, e) = nbrs[*cursor];
                *cursor += 1;
                if Some(e) == pe {
                    continue;
                }
                if disc[w as usize] == usize::MAX {
                    edge_stack.push(e);
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w as usize] < disc[u as usize] {
                    edge_stack.push(e);
                    low[u as usize] = low[u as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if low[u as usize] >= disc[p as usize] {
                        // p closes a biconnected component; pop up to and
                        // including the tree edge p-u.
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            let (a, b) = g.edge_ends(e);
                            if (a == p && b == u) || (a == u && b == p) {
                                break;
                            }
                        }
                        raw_blocks.push(comp);
                    }
                }
            }
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<Vertex> = edges
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.edge_ends(e);
                    [u, v]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block {
                id: 0,
                edges,
                vertices,
            }
        })
        .collect();
    blocks.sort_by_key(|b| b.edges[0]);
    for (i, b) in blocks.iter_mut().enumerate() {
        b.id = i;
    }

    let mut block_of_edge = vec![usize::MAX; m];
    let mut blocks_of_vertex: Vec<Vec<BlockId>> = vec![Vec::new(); n];
    for b in &blocks {
        for &e in &b.edges {
            block_of_edge[e] = b.id;
        }
        for &v in &b.vertices {
            blocks_of_vertex[v as usize].push(b.id);
        }
    }
    let cut_vertices: Vec<Vertex> = (0..n as Vertex)
        .filter(|&v| blocks_of_vertex[v as usize].len() >= 2)
        .collect();

    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_of_edge,
        blocks_of_vertex,
        edge_ends: g.edges().to_vec(),
    })
}

impl BlockDecomposition {
    pub fn block_of_edge(&self, e: EdgeIdx) -> BlockId {
        self.block_of_edge[e]
    }

    pub fn blocks_of_vertex(&self, v: Vertex) -> &[BlockId] {
        &self.blocks_of_vertex[v as usize]
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.blocks_of_vertex[v as usize].len() >= 2
    }

    /// Block-tree edges as (block id, cut vertex) pairs, sorted.
    pub fn tree_edges(&self) -> Vec<(BlockId, Vertex)> {
        let mut out = Vec::new();
        for &v in &self.cut_vertices {
            for &b in &self.blocks_of_vertex[v as usize] {
                out.push((b, v));
            }
        }
        out.sort_unstable();
        out
    }

    fn check_block_id(&self, b: BlockId) -> Result<()> {
        if b >= self.blocks.len() {
            return Err(Error::precondition(format!(
                "unknown block id {b} (have {})",
                self.blocks.len()
            )));
        }
        Ok(())
    }

    /// The unique block-tree path from `b1` to `b2`, alternating
    /// blocks and cut vertices: `[Block(b1), Cut(v), Block(..), .., Block(b2)]`.
    fn tree_path(&self, b1: BlockId, b2: BlockId) -> Vec<TreeNode> {
        let nb = self.blocks.len();
        let node_count = nb + self.cut_vertices.len();
        let cut_pos = |v: Vertex| {
            nb + self
                .cut_vertices
                .binary_search(&v)
                .expect("cut vertex present")
        };
        let mut prev = vec![usize::MAX; node_count];
        let mut queue = std::collections::VecDeque::from([b1]);
        prev[b1] = b1;
        'bfs: while let Some(node) = queue.pop_front() {
            let nexts: Vec<usize> = if node < nb {
                self.blocks[node]
                    .vertices
                    .iter()
                    .filter(|&&v| self.is_cut_vertex(v))
                    .map(|&v| cut_pos(v))
                    .collect()
            } else {
                let v = self.cut_vertices[node - nb];
                self.blocks_of_vertex[v as usize].clone()
            };
            for nx in nexts {
                if prev[nx] == usize::MAX {
                    prev[nx] = node;
                    if nx == b2 {
                        break 'bfs;
                    }
                    queue.push_back(nx);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = b2;
        loop {
            path.push(if cur < nb {
                TreeNode::Block(cur)
            } else {
                TreeNode::Cut(self.cut_vertices[cur - nb])
            });
            if cur == b1 {
                break;
            }
            cur = prev[cur];
        }
        path.reverse();
        path
    }

    /// The cut vertex of `b1` that starts the unique block-tree path towards
    /// `b2` (the vertex named y_{1,2} in the two-block analysis).
    pub fn connecting_cut_vertex(&self, b1: BlockId, b2: BlockId) -> Result<Vertex> {
        self.check_block_id(b1)?;
        self.check_block_id(b2)?;
        if b1 == b2 {
            return Err(Error::precondition("need two distinct blocks"));
        }
        let path = self.tree_path(b1, b2);
        match path.get(1) {
            Some(&TreeNode::Cut(v)) => Ok(v),
            _ => Err(Error::precondition("blocks are not joined in the tree")),
        }
    }

    /// Whether an edge with the given endpoints exists inside block `b`.
    fn block_has_edge(&self, b: BlockId, x: Vertex, y: Vertex) -> bool {
        self.blocks[b].edges.iter().any(|&e| {
            let (u, v) = self.edge_ends[e];
            (u == x && v == y) || (u == y && v == x)
        })
    }

    /// Whether `b1` and `b2` are contiguous: joined by a path whose edges lie
    /// in pairwise distinct blocks. Via the block tree: every internal block
    /// on the unique tree path must contain its entry and exit cut vertices
    /// as an edge; blocks sharing a cut vertex are contiguous.
    pub fn contiguous(&self, b1: BlockId, b2: BlockId) -> Result<bool> {
        self.check_block_id(b1)?;
        self.check_block_id(b2)?;
        if b1 == b2 {
            return Err(Error::precondition("contiguity needs two distinct blocks"));
        }
        let path = self.tree_path(b1, b2);
        // path = [Block(b1), Cut, (Block, Cut)*, Block(b2)]
        let mut i = 2;
        while i + 2 < path.len() {
            let (TreeNode::Cut(x), TreeNode::Block(b), TreeNode::Cut(y)) =
                (path[i - 1], path[i], path[i + 1])
            else {
                unreachable!("block tree path alternates");
            };
            if !self.block_has_edge(b, x, y) {
                return Ok(false);
            }
            i += 2;
        }
        Ok(true)
    }

    /// Minimum graph distance between the vertex sets of two blocks.
    pub fn block_distance(&self, g: &Graph, b1: BlockId, b2: BlockId) -> Result<usize> {
        self.check_block_id(b1)?;
        self.check_block_id(b2)?;
        if b1 == b2 {
            return Err(Error::precondition("distance needs two distinct blocks"));
        }
        let mut dist = vec![usize::MAX; g.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        for &v in &self.blocks[b1].vertices {
            dist[v as usize] = 0;
            queue.push_back(v);
        }
        let target: std::collections::BTreeSet<Vertex> =
            self.blocks[b2].vertices.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            if target.contains(&v) {
                return Ok(dist[v as usize]);
            }
            for &(w, _) in g.neighbors(v) {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        Err(Error::precondition("blocks in different components"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TreeNode {
    Block(BlockId),
    Cut(Vertex),
}

/// Bipartite flag and type T_i (number of chordless odd cycles) of one block.
pub fn block_profile(g: &Graph, d: &BlockDecomposition, b: BlockId) -> Result<BlockProfile> {
    d.check_block_id(b)?;
    let block = &d.blocks[b];
    let sub = g.edge_subgraph(&block.edges);
    let odd: Vec<Cycle> = enumerate_chordless_cycles(&sub.graph)
        .into_iter()
        .filter(|c| c.odd)
        .collect();
    Ok(BlockProfile {
        block: b,
        is_edge: block.is_edge(),
        bipartite: odd.is_empty(),
        t_type: odd.len(),
        chordless_odd_cycles: odd
            .iter()
            .map(|c| c.vertices.iter().map(|&v| sub.vertex_map[v as usize]).collect())
            .collect(),
    })
}

/// Strong contiguity of two non-bipartite blocks: both of type T1 at
/// distance at most one, or a T1/T2 pair sharing a cut vertex. A T2/T2
/// pair is never strongly contiguous.
pub fn strongly_contiguous(
    g: &Graph,
    d: &BlockDecomposition,
    b1: BlockId,
    b2: BlockId,
) -> Result<bool> {
    let p1 = block_profile(g, d, b1)?;
    let p2 = block_profile(g, d, b2)?;
    if p1.bipartite || p2.bipartite {
        return Err(Error::precondition(
            "strong contiguity is defined for non-bipartite blocks",
        ));
    }
    let dist = d.block_distance(g, b1, b2)?;
    let (lo, hi) = if p1.t_type <= p2.t_type {
        (p1.t_type, p2.t_type)
    } else {
        (p2.t_type, p1.t_type)
    };
    Ok(match (lo, hi) {
        (1, 1) => dist <= 1,
        (1, 2) => dist == 0,
        _ => false,
    })
}
