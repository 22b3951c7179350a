//! Report assembly: deterministic JSON structures for the CLI and FFI.
//! Struct field order fixes the JSON key order; identical input yields
//! byte-identical output once timings are disabled.

use serde::Serialize;

use crate::analyzer;
use crate::blocks;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson};
use crate::walks::{self, Binomial};

pub const TOOL_NAME: &str = "toric-ci";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Clone, Debug)]
pub struct BudgetJson {
    pub subset_edges: usize,
    pub fiber_edges: usize,
    pub degree_bound: Option<usize>,
}

impl BudgetJson {
    pub fn of(b: &Budget) -> BudgetJson {
        BudgetJson {
            subset_edges: b.max_subset_edges,
            fiber_edges: b.max_fiber_edges,
            degree_bound: b.max_total_degree,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct BinomialJson {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
    pub degree: Vec<u32>,
}

impl BinomialJson {
    pub fn of(b: &Binomial) -> BinomialJson {
        BinomialJson {
            plus: b.plus.0.clone(),
            minus: b.minus.0.clone(),
            degree: b.degree.0.clone(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct BlockJson {
    pub edges: Vec<usize>,
    pub bipartite: bool,
    pub t_type: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct BlockReportJson {
    pub blocks: Vec<BlockJson>,
    pub cut_vertices: Vec<u64>,
    pub tree: Vec<[u64; 2]>,
}

/// Block report of one connected graph, in the documented JSON shape.
pub fn block_report(g: &Graph) -> Result<BlockReportJson> {
    let dec = blocks::decompose(g)?;
    let mut blocks_json = Vec::new();
    for b in &dec.blocks {
        let profile = blocks::block_profile(g, &dec, b.id)?;
        blocks_json.push(BlockJson {
            edges: b.edges.iter().map(|e| e + 1).collect(),
            bipartite: profile.bipartite,
            t_type: profile.t_type,
        });
    }
    Ok(BlockReportJson {
        blocks: blocks_json,
        cut_vertices: dec.cut_vertices.iter().map(|&v| v as u64 + 1).collect(),
        tree: dec
            .tree_edges()
            .into_iter()
            .map(|(b, v)| [b as u64, v as u64 + 1])
            .collect(),
    })
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckJson {
    pub id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct ComponentReport {
    pub graph: GraphJson,
    /// Labels of the component's vertices in the input graph (1-based).
    pub vertices: Vec<u64>,
    pub height: i64,
    pub mu: Option<u64>,
    pub ci: Option<bool>,
    pub normal: Option<bool>,
    pub method: Option<String>,
    pub blocks: BlockReportJson,
    pub screen: Vec<CheckJson>,
    pub screen_complete: bool,
    pub generators: Vec<BinomialJson>,
    pub graver: Option<Vec<BinomialJson>>,
    /// The strong-contiguity side of the normality criterion, for CI graphs.
    pub normality_criterion: Option<bool>,
    pub incomplete: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct Summary {
    pub components: usize,
    pub ci: Option<bool>,
    pub normal: Option<bool>,
    pub incomplete: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct AnalysisReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub budgets: BudgetJson,
    pub summary: Summary,
    pub components: Vec<ComponentReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<TimingsJson>,
}

#[derive(Serialize, Clone, Debug)]
pub struct TimingsJson {
    pub total_ms: f64,
    pub per_component_ms: Vec<f64>,
}

/// Runs the full pipeline on every connected component and aggregates:
/// the graph is CI (normal) iff every component is.
pub fn analyze(g: &Graph, budget: &Budget, with_timings: bool) -> Result<AnalysisReport> {
    let start = std::time::Instant::now();
    let mut components = Vec::new();
    let mut per_ms = Vec::new();
    for comp in g.connected_components() {
        let t0 = std::time::Instant::now();
        components.push(analyze_component(&comp.graph, &comp.vertex_map, budget)?);
        per_ms.push(t0.elapsed().as_secs_f64() * 1e3);
    }
    let incomplete = components.iter().any(|c| c.incomplete);
    let agg = |f: fn(&ComponentReport) -> Option<bool>| -> Option<bool> {
        let mut all = true;
        for c in &components {
            match f(c) {
                Some(v) => all &= v,
                None => return None,
            }
        }
        Some(all)
    };
    Ok(AnalysisReport {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        budgets: BudgetJson::of(budget),
        summary: Summary {
            components: components.len(),
            ci: agg(|c| c.ci),
            normal: agg(|c| c.normal),
            incomplete,
        },
        components,
        timings: with_timings.then(|| TimingsJson {
            total_ms: start.elapsed().as_secs_f64() * 1e3,
            per_component_ms: per_ms,
        }),
    })
}

fn analyze_component(
    g: &Graph,
    vertex_map: &[u32],
    budget: &Budget,
) -> Result<ComponentReport> {
    let height = g.ideal_height()?;
    let blocks_json = block_report(g)?;

    let mut incomplete = false;

    let (screen, screen_complete) = match analyzer::screen_structural(g, budget) {
        Ok(rep) => {
            let complete = rep.complete;
            incomplete |= !complete;
            (
                rep.checks
                    .into_iter()
                    .map(|c| CheckJson {
                        id: c.id.to_string(),
                        passed: c.passed,
                        witness: c.witness,
                    })
                    .collect(),
                complete,
            )
        }
        Err(Error::BudgetExceeded { .. }) => {
            incomplete = true;
            (Vec::new(), false)
        }
        Err(e) => return Err(e),
    };

    let verdict = match analyzer::decide_ci(g, budget) {
        Ok(v) => Some(v),
        Err(Error::BudgetExceeded { .. }) => {
            incomplete = true;
            None
        }
        Err(e) => return Err(e),
    };

    let generators = match walks::enumerate_minimal_binomials(g, budget) {
        Ok(list) => list.iter().map(|(_, b)| BinomialJson::of(b)).collect(),
        Err(Error::BudgetExceeded { .. }) => {
            incomplete = true;
            Vec::new()
        }
        Err(e) => return Err(e),
    };
    let graver = match walks::enumerate_graver(g, budget) {
        Ok(list) => Some(list.iter().map(|(_, b)| BinomialJson::of(b)).collect()),
        Err(Error::BudgetExceeded { .. }) => {
            incomplete = true;
            None
        }
        Err(e) => return Err(e),
    };

    let normal = analyzer::is_normal(g)?.normal;
    let is_ci = verdict.as_ref().map(|v| v.ci);
    let normality_criterion = if is_ci == Some(true) {
        Some(analyzer::normality_criterion(g)?)
    } else {
        None
    };

    Ok(ComponentReport {
        graph: g.to_json_value(),
        vertices: vertex_map.iter().map(|&v| v as u64 + 1).collect(),
        height,
        mu: verdict.as_ref().and_then(|v| v.mu).map(|m| m as u64),
        ci: is_ci,
        normal: Some(normal),
        method: verdict.as_ref().map(|v| v.method.label().to_string()),
        blocks: blocks_json,
        screen,
        screen_complete,
        generators,
        graver,
        normality_criterion,
        incomplete,
    })
}

/// Renders a report as pretty JSON with a trailing newline.
pub fn to_json_string(report: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Plain-text mirror of the analysis report.
pub fn to_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let fmt_opt = |o: Option<bool>| match o {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    };
    out.push_str(&format!(
        "{} {} | components: {} | CI: {} | normal: {}{}\n",
        report.tool,
        report.version,
        report.summary.components,
        fmt_opt(report.summary.ci),
        fmt_opt(report.summary.normal),
        if report.summary.incomplete {
            " | INCOMPLETE"
        } else {
            ""
        },
    ));
    for (i, c) in report.components.iter().enumerate() {
        out.push_str(&format!(
            "component {}: n={} m={} h={} mu={} ci={} normal={} method={}\n",
            i,
            c.graph.n,
            c.graph.edges.len(),
            c.height,
            c.mu.map(|m| m.to_string()).unwrap_or_else(|| "?".into()),
            fmt_opt(c.ci),
            fmt_opt(c.normal),
            c.method.clone().unwrap_or_else(|| "-".into()),
        ));
        for b in &c.blocks.blocks {
            out.push_str(&format!(
                "  block edges={:?} bipartite={} type=T{}\n",
                b.edges, b.bipartite, b.t_type
            ));
        }
        for chk in &c.screen {
            out.push_str(&format!(
                "  screen {}: {}{}\n",
                chk.id,
                if chk.passed { "pass" } else { "FAIL" },
                chk.witness
                    .as_ref()
                    .map(|w| format!(" ({w})"))
                    .unwrap_or_default()
            ));
        }
        if !c.generators.is_empty() {
            out.push_str(&format!("  minimal generators: {}\n", c.generators.len()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    #[test]
    fn bowtie_report_round_trip() {
        let g = families::bowtie();
        let rep = analyze(&g, &Budget::default(), false).unwrap();
        assert_eq!(rep.summary.ci, Some(true));
        assert_eq!(rep.summary.normal, Some(true));
        assert_eq!(rep.components.len(), 1);
        let c = &rep.components[0];
        assert_eq!(c.mu, Some(1));
        assert_eq!(c.height, 1);
        let types: Vec<usize> = c.blocks.blocks.iter().map(|b| b.t_type).collect();
        assert_eq!(types, vec![1, 1]);
        let json = to_json_string(&rep);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["summary"]["ci"], serde_json::Value::Bool(true));
    }

    #[test]
    fn reports_are_deterministic() {
        let g = families::domino();
        let a = to_json_string(&analyze(&g, &Budget::default(), false).unwrap());
        let b = to_json_string(&analyze(&g, &Budget::default(), false).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn disconnected_graph_aggregates() {
        // C4 plus a disjoint triangle: both components CI, so the union is.
        let g = Graph::parse_edge_list("1 2\n2 3\n3 4\n4 1\n5 6\n6 7\n7 5").unwrap();
        let rep = analyze(&g, &Budget::default(), false).unwrap();
        assert_eq!(rep.components.len(), 2);
        assert_eq!(rep.summary.ci, Some(true));
        assert_eq!(rep.summary.normal, Some(true));
    }

    #[test]
    fn budget_exhaustion_marks_incomplete() {
        let g = families::complete(4);
        let tight = Budget {
            max_subset_edges: 2,
            max_fiber_edges: 2,
            max_total_degree: None,
        };
        let rep = analyze(&g, &tight, false).unwrap();
        assert!(rep.summary.incomplete);
        assert_eq!(rep.summary.ci, None);
    }
}
