//! Exhaustive generation of small connected graphs up to isomorphism, used
//! as the verification corpus. Canonical form: the edge bitmask minimized
//! over all vertex permutations.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};

fn slot(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

fn mask_is_connected(mask: u64, n: usize) -> bool {
    if n == 1 {
        return true;
    }
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if mask >> slot(i, j, n) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let mut seen: u64 = 1;
    let mut frontier: u64 = 1;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen.count_ones() as usize == n
}

fn canonical_mask(mask: u64, perm_tables: &[Vec<usize>]) -> u64 {
    let mut best = u64::MAX;
    for table in perm_tables {
        let mut p = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            p |= 1 << table[s];
        }
        if p < best {
            best = p;
        }
    }
    best
}

/// Slot-permutation tables for all vertex permutations of an n-vertex graph.
fn slot_tables(n: usize) -> Vec<Vec<usize>> {
    let slots = n * (n - 1) / 2;
    permutations(n)
        .into_iter()
        .map(|perm| {
            let mut table = vec![0usize; slots];
            for i in 0..n {
                for j in (i + 1)..n {
                    let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    table[slot(i, j, n)] = slot(a, b, n);
                }
            }
            table
        })
        .collect()
}

fn graph_from_mask(mask: u64, n: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if mask >> slot(i, j, n) & 1 == 1 {
                pairs.push((i as Vertex, j as Vertex));
            }
        }
    }
    Graph::new(n, &pairs).unwrap()
}

/// All connected graphs with at most `max_n` vertices and at most `max_m`
/// edges, one representative per isomorphism class, in deterministic order.
pub fn connected_graphs_up_to_iso(max_n: usize, max_m: usize) -> Vec<Graph> {
    assert!(max_n <= 8, "corpus generator is for small graphs");
    let mut canon: BTreeSet<(usize, u64)> = BTreeSet::new();
    for n in 1..=max_n {
        let slots = n * (n - 1) / 2;
        let tables = slot_tables(n);
        for mask in 0..(1u64 << slots) {
            let m = mask.count_ones() as usize;
            if m > max_m || (n >= 2 && m < n - 1) {
                continue;
            }
            if !mask_is_connected(mask, n) {
                continue;
            }
            canon.insert((n, canonical_mask(mask, &tables)));
        }
    }
    canon
        .into_iter()
        .map(|(n, mask)| graph_from_mask(mask, n))
        .collect()
}
