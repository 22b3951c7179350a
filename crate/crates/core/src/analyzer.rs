//! Structural screening and the final complete-intersection and normality
//! decisions.
//!
//! The decision runs two routes. The oracle route computes mu by graded
//! fiber connectivity and compares it with the ideal height. The structural
//! route applies the block decomposition criterion: at most one minimal
//! generator is not an even cycle, and every block is complete intersection
//! on its own (Katzman's chordless-cycle test for bipartite blocks, the mu
//! count for non-bipartite ones). The two verdicts must agree; disagreement
//! is reported as a hard internal error, never silently resolved.

use std::collections::BTreeSet;

use crate::blocks::{self, BlockDecomposition, BlockProfile};
use crate::budget::Budget;
use crate::cycles::{enumerate_chordless_cycles, Cycle};
use crate::error::{Error, Result};
use crate::fiber;
use crate::graph::{EdgeIdx, Graph, Vertex};
use crate::walks::{self, Binomial, CircuitCase, ClosedWalk};

// ----------------------------------------------------------------------
// Ring graphs and the bipartite test
// ----------------------------------------------------------------------

/// Ring graph recognition: every block is an edge, a vertex, a cycle, or
/// reducible by repeatedly removing an ear (an induced path of inner
/// degree-2 vertices, length at least two, whose endpoints are adjacent)
/// down to a single cycle. Backtracks over all removable ears.
pub fn is_ring_graph(g: &Graph) -> bool {
    g.connected_components().into_iter().all(|c| {
        if c.graph.edge_count() == 0 {
            return true;
        }
        let dec = blocks::decompose(&c.graph).expect("component is connected");
        dec.blocks.iter().all(|b| {
            let sub = c.graph.edge_subgraph(&b.edges);
            is_ring_block(&sub.graph)
        })
    })
}

fn is_ring_block(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m <= 1 {
        return true;
    }
    if m == n && (0..n as Vertex).all(|v| g.degree(v) == 2) {
        return true; // a single cycle
    }
    for ear in candidate_ears(g) {
        let keep: Vec<Vertex> = (0..n as Vertex).filter(|v| !ear.contains(v)).collect();
        let reduced = g
            .induced_subgraph(&keep)
            .expect("vertices in range")
            .graph;
        if is_ring_block(&reduced) {
            return true;
        }
    }
    false
}

/// Inner-vertex sets of removable ears: maximal chains of degree-2 vertices
/// whose two attachment points are distinct, of degree >= 3, and adjacent.
fn candidate_ears(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n as Vertex {
        if g.degree(v) != 2 || seen[v as usize] {
            continue;
        }
        // Grow the chain through degree-2 vertices in both directions.
        let mut chain = vec![v];
        seen[v as usize] = true;
        let mut ends = Vec::new();
        for &(mut prev, mut cur) in &[(v, g.neighbors(v)[0].0), (v, g.neighbors(v)[1].0)] {
            while g.degree(cur) == 2 {
                seen[cur as usize] = true;
                chain.push(cur);
                let (a, _) = g.neighbors(cur)[0];
                let (b, _) = g.neighbors(cur)[1];
                let next = if a == prev { b } else { a };
                prev = cur;
                cur = next;
            }
            ends.push(cur);
        }
        if ends[0] != ends[1] && g.has_edge(ends[0], ends[1]) {
            out.push(chain.iter().copied().collect());
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct BipartiteCiReport {
    pub ci: bool,
    /// A pair of chordless cycles sharing two or more edges, when not CI.
    pub witness: Option<(Cycle, Cycle)>,
}

/// Katzman's criterion for a connected bipartite graph: complete
/// intersection iff every two chordless cycles share at most one edge.
/// Cross-checks the ring-graph recognizer and, on success, the chordless
/// cycle count m - n + 1.
pub fn bipartite_ci(g: &Graph) -> Result<BipartiteCiReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected("bipartite CI test".into()));
    }
    if !g.is_bipartite() {
        return Err(Error::precondition("bipartite_ci needs a bipartite graph"));
    }
    let cycles = enumerate_chordless_cycles(g);
    let mut witness = None;
    'outer: for i in 0..cycles.len() {
        for j in (i + 1)..cycles.len() {
            let ei: BTreeSet<EdgeIdx> = cycles[i].edges.iter().copied().collect();
            let shared = cycles[j].edges.iter().filter(|e| ei.contains(e)).count();
            if shared >= 2 {
                witness = Some((cycles[i].clone(), cycles[j].clone()));
                break 'outer;
            }
        }
    }
    let ci = witness.is_none();
    if is_ring_graph(g) != ci {
        return Err(Error::Inconsistency(
            "ring-graph recognizer disagrees with the chordless-cycle test".into(),
        ));
    }
    if ci {
        let expected = g.edge_count() as i64 - g.vertex_count() as i64 + 1;
        if cycles.len() as i64 != expected {
            return Err(Error::Inconsistency(format!(
                "chordless cycle count {} differs from m-n+1 = {}",
                cycles.len(),
                expected
            )));
        }
    }
    Ok(BipartiteCiReport { ci, witness })
}

// ----------------------------------------------------------------------
// Structural screening
// ----------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub id: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ScreenReport {
    pub checks: Vec<CheckRecord>,
    /// False when an enumeration budget cut the walk-based checks short.
    pub complete: bool,
}

impl ScreenReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn fmt_cycle(c: &Cycle) -> String {
    format!(
        "({})",
        c.vertices
            .iter()
            .map(|v| (v + 1).to_string())
            .collect::<Vec<_>>()
            .join("-")
    )
}

/// Runs every necessary-condition check. A failure proves the graph is not
/// a complete intersection and carries a witness; all-pass is not
/// sufficient (the final decision belongs to `decide_ci`).
pub fn screen_structural(g: &Graph, budget: &Budget) -> Result<ScreenReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected("structural screen".into()));
    }
    let dec = blocks::decompose(g)?;
    let profiles: Vec<BlockProfile> = (0..dec.blocks.len())
        .map(|b| blocks::block_profile(g, &dec, b))
        .collect::<Result<_>>()?;
    let non_bip: Vec<usize> = profiles
        .iter()
        .filter(|p| !p.bipartite)
        .map(|p| p.block)
        .collect();

    let mut checks = Vec::new();

    checks.push(CheckRecord {
        id: "nonbipartite_block_count",
        passed: non_bip.len() <= 2,
        witness: (non_bip.len() > 2).then(|| format!("non-bipartite blocks {:?}", non_bip)),
    });

    let contiguity_ok = if non_bip.len() == 2 {
        dec.contiguous(non_bip[0], non_bip[1])?
    } else {
        true
    };
    checks.push(CheckRecord {
        id: "contiguity",
        passed: contiguity_ok,
        witness: (!contiguity_ok).then(|| {
            format!(
                "non-bipartite blocks {} and {} are not contiguous",
                non_bip[0], non_bip[1]
            )
        }),
    });

    // Walk-based generator checks; a budget overrun leaves them out and
    // marks the report incomplete.
    let mut complete = true;
    match walks::enumerate_minimal_binomials(g, budget) {
        Ok(minimal) => {
            let mut non_circuit = None;
            let mut non_cycles = Vec::new();
            for (w, _) in &minimal {
                match walks::is_circuit(g, w) {
                    Some(CircuitCase::EvenCycle) => {}
                    Some(_) => non_cycles.push(w.clone()),
                    None => {
                        if non_circuit.is_none() {
                            non_circuit = Some(w.clone());
                        }
                        non_cycles.push(w.clone());
                    }
                }
            }
            checks.push(CheckRecord {
                id: "generators_are_circuits",
                passed: non_circuit.is_none(),
                witness: non_circuit.map(|w| format!("non-circuit minimal walk {:?}", w)),
            });
            checks.push(CheckRecord {
                id: "at_most_one_noncycle_generator",
                passed: non_cycles.len() <= 1,
                witness: (non_cycles.len() > 1).then(|| {
                    format!(
                        "{} minimal generators are not even cycles, e.g. {:?} and {:?}",
                        non_cycles.len(),
                        non_cycles[0],
                        non_cycles[1]
                    )
                }),
            });
            checks.push(exceptional_placement_check(g, &dec, &non_cycles));
        }
        Err(Error::BudgetExceeded { .. }) => complete = false,
        Err(e) => return Err(e),
    }

    // Every bipartite block passes the chordless-cycle test.
    let mut bip_witness = None;
    for p in profiles.iter().filter(|p| p.bipartite && !p.is_edge) {
        let sub = g.edge_subgraph(&dec.blocks[p.block].edges);
        let rep = bipartite_ci(&sub.graph)?;
        if let Some((c1, c2)) = rep.witness {
            bip_witness = Some(format!(
                "block {} has chordless cycles sharing two edges: {} and {}",
                p.block,
                fmt_cycle(&c1),
                fmt_cycle(&c2)
            ));
            break;
        }
    }
    checks.push(CheckRecord {
        id: "bipartite_blocks_ci",
        passed: bip_witness.is_none(),
        witness: bip_witness,
    });

    // Every block satisfies the odd cycle condition internally.
    let mut occ_witness = None;
    for p in &profiles {
        if let Some((c1, c2)) = odd_cycle_condition_violation_cycles(g, &p.chordless_odd_cycles) {
            occ_witness = Some(format!(
                "block {} violates the odd cycle condition: ({}) and ({})",
                p.block,
                c1.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join("-"),
                c2.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join("-"),
            ));
            break;
        }
    }
    checks.push(CheckRecord {
        id: "biconnected_odd_cycle_condition",
        passed: occ_witness.is_none(),
        witness: occ_witness,
    });

    checks.push(t_type_check(g, &dec, &profiles, &non_bip)?);

    Ok(ScreenReport { checks, complete })
}

/// The exceptional (non-even-cycle) generator, when present, must be
/// chordless and its two odd cycles must lie in two different contiguous
/// blocks of the graph.
fn exceptional_placement_check(
    g: &Graph,
    dec: &BlockDecomposition,
    non_cycles: &[ClosedWalk],
) -> CheckRecord {
    let mut witness = None;
    if non_cycles.len() == 1 {
        let w = &non_cycles[0];
        if !walks::chords_of_walk(g, w).is_empty() {
            witness = Some(format!("exceptional generator {:?} has a chord", w));
        } else {
            let cyclic = walks::walk_cyclic_blocks(g, w);
            let homes: BTreeSet<usize> = cyclic
                .iter()
                .map(|edges| dec.block_of_edge(edges[0]))
                .collect();
            if homes.len() != 2 {
                witness = Some(format!(
                    "exceptional generator's odd cycles lie in blocks {:?}",
                    homes
                ));
            } else {
                let ids: Vec<usize> = homes.into_iter().collect();
                if !dec.contiguous(ids[0], ids[1]).unwrap_or(false) {
                    witness = Some(format!(
                        "odd cycles of the exceptional generator lie in non-contiguous blocks {} and {}",
                        ids[0], ids[1]
                    ));
                }
            }
        }
    }
    CheckRecord {
        id: "exceptional_generator_placement",
        passed: witness.is_none(),
        witness,
    }
}

/// With exactly two non-bipartite blocks: each of type T1 or T2, each with
/// exactly one chordless odd cycle through its connecting cut vertex, and a
/// second odd cycle (when present) at distance one from that vertex.
fn t_type_check(
    g: &Graph,
    dec: &BlockDecomposition,
    profiles: &[BlockProfile],
    non_bip: &[usize],
) -> Result<CheckRecord> {
    let mut witness = None;
    if non_bip.len() == 2 {
        'blocks: for (this, other) in [(non_bip[0], non_bip[1]), (non_bip[1], non_bip[0])] {
            let p = &profiles[this];
            if !(1..=2).contains(&p.t_type) {
                witness = Some(format!("block {} has type T{}", this, p.t_type));
                break;
            }
            let y = dec.connecting_cut_vertex(this, other)?;
            let through: Vec<&Vec<Vertex>> = p
                .chordless_odd_cycles
                .iter()
                .filter(|c| c.contains(&y))
                .collect();
            if through.len() != 1 {
                witness = Some(format!(
                    "block {} has {} chordless odd cycles through vertex {}",
                    this,
                    through.len(),
                    y + 1
                ));
                break;
            }
            for c in &p.chordless_odd_cycles {
                if c.contains(&y) {
                    continue;
                }
                if distance_to_vertex(g, c, y) != Some(1) {
                    witness = Some(format!(
                        "second odd cycle of block {} is not at distance one from vertex {}",
                        this,
                        y + 1
                    ));
                    break 'blocks;
                }
            }
        }
    }
    Ok(CheckRecord {
        id: "t_type_constraints",
        passed: witness.is_none(),
        witness,
    })
}

fn distance_to_vertex(g: &Graph, cycle_vertices: &[Vertex], target: Vertex) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    for &v in cycle_vertices {
        dist[v as usize] = 0;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        if v == target {
            return Some(dist[v as usize]);
        }
        for &(w, _) in g.neighbors(v) {
            if dist[w as usize] == usize::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

// ----------------------------------------------------------------------
// Normality
// ----------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct NormalityReport {
    pub normal: bool,
    /// A violating pair of odd chordless cycles (vertex lists).
    pub witness: Option<(Vec<Vertex>, Vec<Vertex>)>,
}

/// The odd cycle condition: every two odd chordless cycles share a vertex
/// or are joined by an edge. Equivalent to normality of the edge ring.
pub fn is_normal(g: &Graph) -> Result<NormalityReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected("normality test".into()));
    }
    let odd: Vec<Vec<Vertex>> = enumerate_chordless_cycles(g)
        .into_iter()
        .filter(|c| c.odd)
        .map(|c| c.vertices)
        .collect();
    let witness = odd_cycle_condition_violation_cycles(g, &odd);
    Ok(NormalityReport {
        normal: witness.is_none(),
        witness,
    })
}

fn odd_cycle_condition_violation_cycles(
    g: &Graph,
    odd_cycles: &[Vec<Vertex>],
) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    for i in 0..odd_cycles.len() {
        for j in (i + 1)..odd_cycles.len() {
            let (a, b) = (&odd_cycles[i], &odd_cycles[j]);
            let share = a.iter().any(|v| b.contains(v));
            if share {
                continue;
            }
            let joined = a
                .iter()
                .any(|&u| b.iter().any(|&v| g.has_edge(u, v)));
            if !joined {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

// ----------------------------------------------------------------------
// The decision
// ----------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    StructuralAndOracle,
    OracleOnly,
    StructuralOnly,
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::StructuralAndOracle => "structural+oracle",
            Method::OracleOnly => "oracle-only",
            Method::StructuralOnly => "structural-only",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CIVerdict {
    pub ci: bool,
    /// Minimal generator count; absent when only the structural route ran.
    pub mu: Option<usize>,
    pub height: i64,
    pub method: Method,
    /// A minimal generating set, when the oracle ran and the ideal is CI.
    pub generators: Option<Vec<Binomial>>,
}

/// The structural verdict by the block decomposition criterion: at most one
/// minimal generator is not an even cycle, and every block is CI.
fn structural_ci(g: &Graph, budget: &Budget) -> Result<bool> {
    let minimal = walks::enumerate_minimal_binomials(g, budget)?;
    let non_cycles = minimal
        .iter()
        .filter(|(w, _)| !walks::is_even_cycle_walk(g, w))
        .count();
    if non_cycles > 1 {
        return Ok(false);
    }
    let dec = blocks::decompose(g)?;
    for block in &dec.blocks {
        if block.is_edge() {
            continue;
        }
        let sub = g.edge_subgraph(&block.edges);
        if sub.graph.is_bipartite() {
            if !bipartite_ci(&sub.graph)?.ci {
                return Ok(false);
            }
        } else {
            // A non-bipartite biconnected block is CI exactly when its own
            // generator count equals its height m - n. All its generators
            // are then even cycles.
            let mu = fiber::markov_mu(&sub.graph, budget)?.mu;
            let h = sub.graph.edge_count() as i64 - sub.graph.vertex_count() as i64;
            if mu as i64 != h {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Decides the complete intersection property of a connected graph. Both
/// routes are computed when the budgets allow; they must agree.
pub fn decide_ci(g: &Graph, budget: &Budget) -> Result<CIVerdict> {
    let height = g.ideal_height()?;

    let oracle = match fiber::markov_mu(g, budget) {
        Ok(r) => Some(r),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let structural = match structural_ci(g, budget) {
        Ok(v) => Some(v),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };

    match (oracle, structural) {
        (Some(markov), Some(structural)) => {
            let ci = markov.mu as i64 == height;
            if ci != structural {
                return Err(Error::Inconsistency(format!(
                    "structural verdict {} disagrees with oracle mu={} h={}",
                    structural, markov.mu, height
                )));
            }
            Ok(CIVerdict {
                ci,
                mu: Some(markov.mu),
                height,
                method: Method::StructuralAndOracle,
                generators: ci.then_some(markov.chosen_generators),
            })
        }
        (Some(markov), None) => {
            let ci = markov.mu as i64 == height;
            Ok(CIVerdict {
                ci,
                mu: Some(markov.mu),
                height,
                method: Method::OracleOnly,
                generators: ci.then_some(markov.chosen_generators),
            })
        }
        (None, Some(structural)) => Ok(CIVerdict {
            ci: structural,
            mu: None,
            height,
            method: Method::StructuralOnly,
            generators: None,
        }),
        (None, None) => Err(Error::BudgetExceeded {
            what: "complete intersection decision",
            needed: g.edge_count(),
            limit: budget.max_subset_edges.max(budget.max_fiber_edges),
        }),
    }
}

#[derive(Clone, Debug)]
pub struct CiNormalityRecord {
    pub normal: bool,
    /// The block-structure side: at most one non-bipartite block, or two
    /// strongly contiguous ones.
    pub criterion: bool,
}

/// For a CI graph, normality must coincide with the strong-contiguity
/// criterion on the non-bipartite blocks.
pub fn ci_normality_check(g: &Graph, budget: &Budget) -> Result<CiNormalityRecord> {
    let verdict = decide_ci(g, budget)?;
    if !verdict.ci {
        return Err(Error::precondition(
            "ci_normality_check applies to complete intersection graphs",
        ));
    }
    let normal = is_normal(g)?.normal;
    let criterion = normality_criterion(g)?;
    if normal != criterion {
        return Err(Error::Inconsistency(format!(
            "odd cycle condition ({normal}) disagrees with the strong-contiguity criterion ({criterion})"
        )));
    }
    Ok(CiNormalityRecord { normal, criterion })
}

/// The block side of the normality criterion: at most one non-bipartite
/// block, or exactly two which are strongly contiguous.
pub fn normality_criterion(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Ok(true);
    }
    let dec = blocks::decompose(g)?;
    let non_bip: Vec<usize> = (0..dec.blocks.len())
        .map(|b| blocks::block_profile(g, &dec, b))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| !p.bipartite)
        .map(|p| p.block)
        .collect();
    Ok(match non_bip.len() {
        0 | 1 => true,
        2 => blocks::strongly_contiguous(g, &dec, non_bip[0], non_bip[1])?,
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn ring_graph_cases() {
        assert!(is_ring_graph(&families::domino()));
        assert!(!is_ring_graph(&families::complete(4)));
        let single_edge = Graph::parse_edge_list("1 2").unwrap();
        assert!(is_ring_graph(&single_edge));
        assert!(is_ring_graph(&families::cycle(5)));
        assert!(!is_ring_graph(&families::complete_bipartite(2, 3)));
        assert!(!is_ring_graph(&families::complete_bipartite(3, 3)));
        assert!(is_ring_graph(&families::bowtie()));
    }

    #[test]
    fn bipartite_ci_cases() {
        assert!(bipartite_ci(&families::domino()).unwrap().ci);
        let k23 = families::complete_bipartite(2, 3);
        let rep = bipartite_ci(&k23).unwrap();
        assert!(!rep.ci);
        let (c1, c2) = rep.witness.unwrap();
        let e1: BTreeSet<EdgeIdx> = c1.edges.iter().copied().collect();
        let shared = c2.edges.iter().filter(|e| e1.contains(e)).count();
        assert!(shared >= 2);
        assert!(!bipartite_ci(&families::complete_bipartite(3, 3)).unwrap().ci);
        assert!(bipartite_ci(&families::bowtie()).is_err());
    }

    #[test]
    fn screen_three_triangles_fails_block_count() {
        let g = families::three_triangles_at_a_vertex();
        let rep = screen_structural(&g, &Budget::default()).unwrap();
        let check = rep
            .checks
            .iter()
            .find(|c| c.id == "nonbipartite_block_count")
            .unwrap();
        assert!(!check.passed);
        assert!(check.witness.is_some());
    }

    #[test]
    fn screen_opposite_triangles_fail_contiguity() {
        let g = families::triangle_square_triangle(false);
        let rep = screen_structural(&g, &Budget::default()).unwrap();
        let check = rep.checks.iter().find(|c| c.id == "contiguity").unwrap();
        assert!(!check.passed);
    }

    #[test]
    fn screen_bowtie_all_pass() {
        let g = families::bowtie();
        let rep = screen_structural(&g, &Budget::default()).unwrap();
        assert!(rep.all_passed(), "failing checks: {:?}", rep.checks);
        assert!(rep.complete);
    }

    #[test]
    fn decide_ci_worked_examples() {
        let budget = Budget::default();
        let v = decide_ci(&families::cycle(4), &budget).unwrap();
        assert!(v.ci && v.mu == Some(1) && v.height == 1);

        let v = decide_ci(&families::complete(4), &budget).unwrap();
        assert!(v.ci && v.mu == Some(2) && v.height == 2);

        let v = decide_ci(&families::complete_bipartite(2, 3), &budget).unwrap();
        assert!(!v.ci && v.mu == Some(3) && v.height == 2);
        assert!(v.generators.is_none());

        let v = decide_ci(&families::bowtie(), &budget).unwrap();
        assert!(v.ci && v.mu == Some(1) && v.height == 1);
    }

    #[test]
    fn normality_cases() {
        assert!(is_normal(&families::bowtie()).unwrap().normal);
        assert!(is_normal(&families::cycle(4)).unwrap().normal);
        assert!(is_normal(&families::complete_bipartite(3, 3)).unwrap().normal);
        let rep = is_normal(&families::triangles_joined_by_path(2)).unwrap();
        assert!(!rep.normal);
        assert!(rep.witness.is_some());
        assert!(is_normal(&families::dumbbell()).unwrap().normal);
    }

    #[test]
    fn ci_normality_on_both_sides() {
        let budget = Budget::default();
        let rec = ci_normality_check(&families::bowtie(), &budget).unwrap();
        assert!(rec.normal && rec.criterion);

        let rec = ci_normality_check(&families::dumbbell(), &budget).unwrap();
        assert!(rec.normal && rec.criterion);

        let rec = ci_normality_check(&families::triangles_joined_by_path(2), &budget).unwrap();
        assert!(!rec.normal && !rec.criterion);

        // Not CI: precondition error.
        assert!(ci_normality_check(&families::complete_bipartite(2, 3), &budget).is_err());
    }

    #[test]
    fn zero_ideal_graphs_are_ci_and_normal() {
        let budget = Budget::default();
        for text in ["n 1\n", "1 2", "1 2\n2 3", "1 2\n2 3\n3 1"] {
            let g = Graph::parse_edge_list(text).unwrap();
            let v = decide_ci(&g, &budget).unwrap();
            assert!(v.ci, "graph {text:?} must be CI");
            assert_eq!(v.height, 0);
            assert!(is_normal(&g).unwrap().normal);
        }
    }
}
