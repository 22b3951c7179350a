//! Brute-force algebraic oracle, independent of the walk characterizations:
//! fibers of a G-degree, the Graver basis by conformal minimality, the exact
//! minimal generator count mu by graded fiber connectivity, and the
//! minimality membership test.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{EdgeMonomial, GDegree, Graph};
use crate::walks::Binomial;

/// One fiber: all edge monomials of a fixed G-degree, with the component
/// partition under the moves available when the fiber was processed
/// (generators chosen in strictly lower degrees).
#[derive(Clone, Debug)]
pub struct FiberGraph {
    pub degree: GDegree,
    pub elements: Vec<EdgeMonomial>,
    /// Component id per element (0-based, in order of first occurrence).
    pub components: Vec<usize>,
}

impl FiberGraph {
    pub fn component_count(&self) -> usize {
        self.components.iter().copied().max().map_or(0, |c| c + 1)
    }
}

#[derive(Clone, Debug)]
pub struct MarkovResult {
    /// Minimal number of generators of the toric ideal.
    pub mu: usize,
    /// Per processed degree: component count minus one.
    pub per_degree: Vec<(GDegree, usize)>,
    /// One concrete minimal generating set (spanning binomials).
    pub chosen_generators: Vec<Binomial>,
}

#[derive(Clone, Debug)]
pub struct MarkovAnalysis {
    pub result: MarkovResult,
    /// Fibers in processing order, with their pre-spanning components.
    pub fibers: Vec<FiberGraph>,
}

/// All edge monomials of G-degree `b`, sorted lexicographically.
pub fn enumerate_fiber(g: &Graph, b: &GDegree, budget: &Budget) -> Result<Vec<EdgeMonomial>> {
    let m = g.edge_count();
    if m > budget.max_fiber_edges {
        return Err(Error::BudgetExceeded {
            what: "fiber enumeration",
            needed: m,
            limit: budget.max_fiber_edges,
        });
    }
    let total = b.total() as usize;
    if total / 2 > budget.degree_limit(m) {
        return Err(Error::BudgetExceeded {
            what: "fiber degree",
            needed: total / 2,
            limit: budget.degree_limit(m),
        });
    }
    let mut out = Vec::new();
    if total % 2 != 0 {
        return Ok(out); // every edge contributes 2 to the degree sum
    }
    // Last incident edge per vertex, for the reachability prune.
    let mut last_edge = vec![usize::MAX; g.vertex_count()];
    for e in 0..m {
        let (u, v) = g.edge_ends(e);
        last_edge[u as usize] = e;
        last_edge[v as usize] = e;
    }
    let mut rem = b.0.clone();
    let mut exps = vec![0u32; m];
    fn dfs(
        g: &Graph,
        e: usize,
        rem: &mut [u32],
        exps: &mut [u32],
        last_edge: &[usize],
        out: &mut Vec<EdgeMonomial>,
    ) {
        if rem.iter().all(|&x| x == 0) {
            out.push(EdgeMonomial(exps.to_vec()));
            // still explore siblings of the last edge? no: all remaining
            // exponents must be zero, so deeper assignments add nothing.
            return;
        }
        if e == g.edge_count() {
            return;
        }
        // Every vertex with remaining degree needs a future incident edge.
        if rem
            .iter()
            .enumerate()
            .any(|(v, &x)| x > 0 && (last_edge[v] == usize::MAX || last_edge[v] < e))
        {
            return;
        }
        let (u, v) = g.edge_ends(e);
        let cap = rem[u as usize].min(rem[v as usize]);
        for x in 0..=cap {
            exps[e] = x;
            rem[u as usize] -= x;
            rem[v as usize] -= x;
            dfs(g, e + 1, rem, exps, last_edge, out);
            rem[u as usize] += x;
            rem[v as usize] += x;
        }
        exps[e] = 0;
    }
    dfs(g, 0, &mut rem, &mut exps, &last_edge, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// Conformal minimality: no proper sub-pair of (u, v) is itself a relation.
fn is_primitive_pair(g: &Graph, u: &EdgeMonomial, v: &EdgeMonomial) -> bool {
    // Degrees of all divisors of u.
    let mut u_degrees: HashSet<GDegree> = HashSet::new();
    for du in divisors(u) {
        u_degrees.insert(du.g_degree(g));
    }
    for dv in divisors(v) {
        if dv.is_one() || dv == *v {
            continue; // (0, 0) and (u, v) are the excluded trivial pairs
        }
        if u_degrees.contains(&dv.g_degree(g)) {
            return false;
        }
    }
    true
}

fn divisors(mono: &EdgeMonomial) -> Vec<EdgeMonomial> {
    let mut out = vec![EdgeMonomial::one(mono.0.len())];
    for (e, &cap) in mono.0.iter().enumerate() {
        if cap == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (cap as usize + 1));
        for base in &out {
            for x in 0..=cap {
                let mut d = base.clone();
                d.0[e] = x;
                next.push(d);
            }
        }
        out = next;
    }
    out
}

/// The Graver basis by brute force: all conformal-minimal binomials of total
/// degree at most `degree_bound`, sorted canonically.
pub fn graver_bruteforce(g: &Graph, degree_bound: usize, budget: &Budget) -> Result<Vec<Binomial>> {
    let m = g.edge_count();
    if m > budget.max_fiber_edges {
        return Err(Error::BudgetExceeded {
            what: "brute-force Graver",
            needed: m,
            limit: budget.max_fiber_edges,
        });
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    if degree_bound == 0 {
        return Err(Error::precondition("degree bound must be at least 1"));
    }
    // Group all monomials of total degree <= bound by their G-degree.
    let mut classes: HashMap<GDegree, Vec<EdgeMonomial>> = HashMap::new();
    let mut exps = vec![0u32; m];
    fn walk_monomials(
        g: &Graph,
        e: usize,
        left: u32,
        exps: &mut [u32],
        classes: &mut HashMap<GDegree, Vec<EdgeMonomial>>,
    ) {
        if e == exps.len() {
            let mono = EdgeMonomial(exps.to_vec());
            if !mono.is_one() {
                classes.entry(mono.g_degree(g)).or_default().push(mono);
            }
            return;
        }
        for x in 0..=left {
            exps[e] = x;
            walk_monomials(g, e + 1, left - x, exps, classes);
        }
        exps[e] = 0;
    }
    walk_monomials(g, 0, degree_bound as u32, &mut exps, &mut classes);

    let mut out: BTreeSet<Binomial> = BTreeSet::new();
    for (_, monos) in classes {
        if monos.len() < 2 {
            continue;
        }
        for i in 0..monos.len() {
            for j in (i + 1)..monos.len() {
                let (u, v) = (&monos[i], &monos[j]);
                let disjoint = u.0.iter().zip(&v.0).all(|(&a, &b)| a == 0 || b == 0);
                if !disjoint {
                    continue;
                }
                if is_primitive_pair(g, u, v) {
                    out.insert(Binomial::new(g, u.clone(), v.clone()).expect("same degree"));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Union-find over fiber element indices.
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
            r
        } else {
            x
        }
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
        true
    }
}

fn graded_degrees(graver: &[Binomial], reverse_ties: bool) -> Vec<GDegree> {
    let set: BTreeSet<GDegree> = graver.iter().map(|b| b.degree.clone()).collect();
    let mut degrees: Vec<GDegree> = set.into_iter().collect();
    degrees.sort_by(|a, b| {
        let key = a.total().cmp(&b.total());
        if key != std::cmp::Ordering::Equal {
            return key;
        }
        if reverse_ties {
            b.0.cmp(&a.0)
        } else {
            a.0.cmp(&b.0)
        }
    });
    degrees
}

/// Computes mu by graded fiber connectivity. Degrees realized by Graver
/// elements are processed in increasing total degree; each fiber contributes
/// (components - 1) spanning generators, connected with same-degree Graver
/// binomials.
pub fn markov_analysis(g: &Graph, budget: &Budget) -> Result<MarkovAnalysis> {
    markov_analysis_with(g, budget, false)
}

/// Same as [`markov_analysis`] with the tie-break order on same-total
/// degrees reversed; mu and the per-degree counts must not change.
pub fn markov_analysis_reversed_ties(g: &Graph, budget: &Budget) -> Result<MarkovAnalysis> {
    markov_analysis_with(g, budget, true)
}

fn markov_analysis_with(g: &Graph, budget: &Budget, reverse_ties: bool) -> Result<MarkovAnalysis> {
    let m = g.edge_count();
    let graver = graver_bruteforce(g, budget.degree_limit(m), budget)?;
    let mut by_degree: BTreeMap<GDegree, Vec<&Binomial>> = BTreeMap::new();
    for b in &graver {
        by_degree.entry(b.degree.clone()).or_default().push(b);
    }
    let degrees = graded_degrees(&graver, reverse_ties);

    let mut chosen: Vec<Binomial> = Vec::new();
    let mut per_degree: Vec<(GDegree, usize)> = Vec::new();
    let mut fibers: Vec<FiberGraph> = Vec::new();
    let mut mu = 0usize;

    for b in degrees {
        let elements = enumerate_fiber(g, &b, budget)?;
        let index: HashMap<&EdgeMonomial, usize> =
            elements.iter().enumerate().map(|(i, u)| (u, i)).collect();
        let mut uf = UnionFind::new(elements.len());
        for gen in &chosen {
            for (i, u) in elements.iter().enumerate() {
                for (p, q) in [(&gen.plus, &gen.minus), (&gen.minus, &gen.plus)] {
                    if let Some(v) = u.exchange(p, q) {
                        let j = *index
                            .get(&v)
                            .expect("move stays inside the fiber of its degree");
                        uf.union(i, j);
                    }
                }
            }
        }
        // Pre-spanning component ids, normalized by first occurrence.
        let mut comp_id: HashMap<usize, usize> = HashMap::new();
        let mut components = Vec::with_capacity(elements.len());
        for i in 0..elements.len() {
            let r = uf.find(i);
            let next = comp_id.len();
            components.push(*comp_id.entry(r).or_insert(next));
        }
        let k = comp_id.len();
        fibers.push(FiberGraph {
            degree: b.clone(),
            elements: elements.clone(),
            components,
        });
        per_degree.push((b.clone(), k.saturating_sub(1)));
        if k <= 1 {
            continue;
        }
        // Span the remaining components with same-degree Graver binomials.
        let mut added = 0usize;
        for cand in by_degree.get(&b).into_iter().flatten() {
            let i = *index.get(&cand.plus).expect("Graver side lies in its fiber");
            let j = *index.get(&cand.minus).expect("Graver side lies in its fiber");
            if uf.union(i, j) {
                chosen.push((*cand).clone());
                added += 1;
                if added == k - 1 {
                    break;
                }
            }
        }
        if added != k - 1 {
            return Err(Error::Inconsistency(format!(
                "fiber of degree {:?} cannot be spanned by Graver moves",
                b
            )));
        }
        mu += added;
    }

    Ok(MarkovAnalysis {
        result: MarkovResult {
            mu,
            per_degree,
            chosen_generators: chosen,
        },
        fibers,
    })
}

/// Minimal generator count of the toric ideal.
pub fn markov_mu(g: &Graph, budget: &Budget) -> Result<MarkovResult> {
    Ok(markov_analysis(g, budget)?.result)
}

/// Whether the binomial belongs to at least one minimal generating set:
/// its two monomials lie in different components of its fiber under the
/// moves selected in strictly lower degrees.
pub fn minimality_oracle(g: &Graph, b: &Binomial, budget: &Budget) -> Result<bool> {
    if b.is_zero() || b.plus.g_degree(g) != b.minus.g_degree(g) {
        return Err(Error::precondition("binomial is not a toric relation"));
    }
    if !is_primitive_pair(g, &b.plus, &b.minus) {
        return Err(Error::precondition("binomial is not in the Graver basis"));
    }
    let analysis = markov_analysis(g, budget)?;
    let fiber = analysis
        .fibers
        .iter()
        .find(|f| f.degree == b.degree)
        .ok_or_else(|| Error::precondition("degree not realized by any Graver element"))?;
    let pos = |mono: &EdgeMonomial| fiber.elements.iter().position(|u| u == mono);
    let (Some(i), Some(j)) = (pos(&b.plus), pos(&b.minus)) else {
        return Err(Error::precondition("binomial sides not in their fiber"));
    };
    Ok(fiber.components[i] != fiber.components[j])
}

/// First pair of generators violating the pairwise mixed-dominating support
/// condition: shared plus-support and shared minus-support, in either
/// orientation.
pub fn mixed_dominating_violation(gens: &[Binomial]) -> Option<(usize, usize)> {
    let supports: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = gens
        .iter()
        .map(|b| {
            (
                b.plus.support().into_iter().collect(),
                b.minus.support().into_iter().collect(),
            )
        })
        .collect();
    let meets = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| a.intersection(b).next().is_some();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let (pi, mi) = &supports[i];
            let (pj, mj) = &supports[j];
            if (meets(pi, pj) && meets(mi, mj)) || (meets(pi, mj) && meets(mi, pj)) {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Vertex;
    use crate::walks;

    fn b(v: &[u32]) -> GDegree {
        GDegree(v.to_vec())
    }

    #[test]
    fn fiber_of_c4_matching_degree() {
        let g = families::cycle(4);
        // canonical edges: e1={1,2}, e2={1,4}, e3={2,3}, e4={3,4};
        // the two perfect matchings are {e1,e4} and {e2,e3}.
        let f = enumerate_fiber(&g, &b(&[1, 1, 1, 1]), &Budget::default()).unwrap();
        assert_eq!(
            f,
            vec![
                EdgeMonomial(vec![0, 1, 1, 0]),
                EdgeMonomial(vec![1, 0, 0, 1])
            ]
        );
    }

    #[test]
    fn fiber_of_k4_matching_degree_has_three_elements() {
        let g = families::complete(4);
        let f = enumerate_fiber(&g, &b(&[1, 1, 1, 1]), &Budget::default()).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|u| u.total_degree() == 2));
    }

    #[test]
    fn odd_degree_sum_gives_empty_fiber() {
        let g = families::cycle(4);
        let f = enumerate_fiber(&g, &b(&[1, 0, 0, 0]), &Budget::default()).unwrap();
        assert!(f.is_empty());
    }

    #[test]
    fn graver_bruteforce_counts() {
        let budget = Budget::default();
        let g = families::cycle(4);
        let gr = graver_bruteforce(&g, 4, &budget).unwrap();
        assert_eq!(gr.len(), 1);
        assert_eq!(gr[0].render(), "e1*e4 - e2*e3");

        let gr = graver_bruteforce(&families::complete(4), 6, &budget).unwrap();
        assert_eq!(gr.len(), 3);

        let gr = graver_bruteforce(&families::bowtie(), 6, &budget).unwrap();
        assert_eq!(gr.len(), 1);
        assert_eq!(gr[0].total_degree(), 3);
    }

    #[test]
    fn markov_mu_of_worked_families() {
        let budget = Budget::default();
        assert_eq!(markov_mu(&families::cycle(4), &budget).unwrap().mu, 1);
        assert_eq!(markov_mu(&families::complete(4), &budget).unwrap().mu, 2);
        let k23 = families::complete_bipartite(2, 3);
        let r = markov_mu(&k23, &budget).unwrap();
        assert_eq!(r.mu, 3);
        let split: Vec<usize> = r
            .per_degree
            .iter()
            .filter(|(_, c)| *c > 0)
            .map(|(_, c)| *c)
            .collect();
        assert_eq!(split, vec![1, 1, 1]);
    }

    #[test]
    fn markov_tie_reversal_is_invariant() {
        let budget = Budget::default();
        for g in [
            families::cycle(4),
            families::complete(4),
            families::complete_bipartite(2, 3),
            families::bowtie(),
            families::domino(),
        ] {
            let a = markov_analysis(&g, &budget).unwrap().result;
            let r = markov_analysis_reversed_ties(&g, &budget).unwrap().result;
            assert_eq!(a.mu, r.mu);
            let mut pa = a.per_degree.clone();
            let mut pr = r.per_degree.clone();
            pa.sort();
            pr.sort();
            assert_eq!(pa, pr);
        }
    }

    #[test]
    fn markov_invariant_under_relabeling() {
        // bowtie with vertices renamed
        let g1 = families::bowtie();
        let g2 = crate::graph::Graph::parse_edge_list("5 4\n4 3\n5 3\n5 2\n2 1\n5 1").unwrap();
        let budget = Budget::default();
        assert_eq!(
            markov_mu(&g1, &budget).unwrap().mu,
            markov_mu(&g2, &budget).unwrap().mu
        );
    }

    #[test]
    fn incremental_components_match_recomputation() {
        // Recomputing each fiber from scratch with the final generator set
        // must reproduce component counts.
        let budget = Budget::default();
        for g in [families::complete(4), families::domino(), families::complete_bipartite(2, 3)] {
            let analysis = markov_analysis(&g, &budget).unwrap();
            let total: usize = analysis
                .result
                .per_degree
                .iter()
                .map(|(_, c)| *c)
                .sum();
            assert_eq!(total, analysis.result.mu);
        }
    }

    #[test]
    fn minimality_oracle_cases() {
        let budget = Budget::default();
        let g = families::cycle(4);
        let gen = &graver_bruteforce(&g, 4, &budget).unwrap()[0];
        assert!(minimality_oracle(&g, gen, &budget).unwrap());

        let k4 = families::complete(4);
        for gen in graver_bruteforce(&k4, 6, &budget).unwrap() {
            assert!(minimality_oracle(&k4, &gen, &budget).unwrap());
        }

        // C6 with an even chord: the hexagon binomial is not minimal.
        let g = crate::graph::Graph::parse_edge_list("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n1 4").unwrap();
        let w = walks::ClosedWalk::from_vertices(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let hexagon = walks::binomial_of_walk(&g, &w);
        assert!(!minimality_oracle(&g, &hexagon, &budget).unwrap());
    }

    #[test]
    fn minimality_oracle_rejects_non_relations() {
        let g = families::cycle(4);
        let budget = Budget::default();
        let bad = Binomial {
            plus: EdgeMonomial(vec![1, 0, 0, 0]),
            minus: EdgeMonomial(vec![0, 1, 0, 0]),
            degree: GDegree(vec![1, 1, 0, 0]),
        };
        assert!(minimality_oracle(&g, &bad, &budget).is_err());
    }

    #[test]
    fn mixed_dominating_detection() {
        let g = families::cycle(4);
        let gr = graver_bruteforce(&g, 4, &Budget::default()).unwrap();
        assert!(mixed_dominating_violation(&gr).is_none());

        // Artificial clash: e1*e5 - e2*e4 and e1*e3 - e2*e6 share e1 on the
        // plus side and e2 on the minus side.
        let mk = |plus: &[usize], minus: &[usize]| Binomial {
            plus: {
                let mut v = vec![0u32; 6];
                for &e in plus {
                    v[e] = 1;
                }
                EdgeMonomial(v)
            },
            minus: {
                let mut v = vec![0u32; 6];
                for &e in minus {
                    v[e] = 1;
                }
                EdgeMonomial(v)
            },
            degree: GDegree(vec![0; 6]),
        };
        let pair = [mk(&[0, 4], &[1, 3]), mk(&[0, 2], &[1, 5])];
        assert_eq!(mixed_dominating_violation(&pair), Some((0, 1)));
    }

    #[test]
    fn k4_matching_fiber_pairwise_separated() {
        let budget = Budget::default();
        let k4 = families::complete(4);
        let analysis = markov_analysis(&k4, &budget).unwrap();
        let fiber = analysis
            .fibers
            .iter()
            .find(|f| f.degree.0 == vec![1, 1, 1, 1])
            .unwrap();
        assert_eq!(fiber.elements.len(), 3);
        assert_eq!(fiber.component_count(), 3);
    }

    #[test]
    fn fiber_budget_guards() {
        let g = families::cycle(4);
        let tight = Budget {
            max_fiber_edges: 2,
            ..Budget::default()
        };
        assert!(matches!(
            enumerate_fiber(&g, &b(&[1, 1, 1, 1]), &tight),
            Err(Error::BudgetExceeded { .. })
        ));
        let low_degree = Budget {
            max_total_degree: Some(1),
            ..Budget::default()
        };
        assert!(enumerate_fiber(&g, &b(&[1, 1, 1, 1]), &low_degree).is_err());
    }

    #[test]
    fn trees_have_empty_graver() {
        let path = crate::graph::Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let gr = graver_bruteforce(&path, 3, &Budget::default()).unwrap();
        assert!(gr.is_empty());
        assert_eq!(markov_mu(&path, &Budget::default()).unwrap().mu, 0);
        let tri: Vec<(Vertex, Vertex)> = vec![(0, 1), (1, 2), (0, 2)];
        let odd_unicyclic = crate::graph::Graph::new(3, &tri).unwrap();
        assert_eq!(markov_mu(&odd_unicyclic, &Budget::default()).unwrap().mu, 0);
    }
}
