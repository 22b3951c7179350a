//! Enumeration budgets. The analysis is exhaustive, so every enumeration is
//! guarded by an explicit limit instead of silently running away.

/// Limits for the walk and fiber enumerations.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Maximum edge count for edge-subset (Graver walk) enumeration.
    pub max_subset_edges: usize,
    /// Maximum edge count for fiber and Markov computations.
    pub max_fiber_edges: usize,
    /// Maximum total monomial degree scanned; defaults to the edge count.
    pub max_total_degree: Option<usize>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_subset_edges: 16,
            max_fiber_edges: 12,
            max_total_degree: None,
        }
    }
}

impl Budget {
    /// Single-knob override used by the CLI: caps both edge budgets.
    pub fn with_edge_limit(limit: usize) -> Budget {
        Budget {
            max_subset_edges: limit,
            max_fiber_edges: limit,
            max_total_degree: None,
        }
    }

    pub fn degree_limit(&self, m: usize) -> usize {
        self.max_total_degree.unwrap_or(m)
    }
}
