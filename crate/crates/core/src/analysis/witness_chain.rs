//! Constructs a short chain of distinct elements from a turbo codeword.
//!
//! Vertices are the error events of `s^π` (side A, interleaved positions) and
//! of `s` (side B, natural positions). Every support position `x` of `s^π`
//! gives an edge between the A event containing `x` and the B event containing
//! `π(x)`. An elementary cycle of this multigraph alternates B and A events,
//! and the edges along it form a chain whose steps stay inside one event
//! each, so its π-weight is at most the summed event lengths.

use std::collections::VecDeque;

use super::chain::{build_chain, Chain};
use crate::rsc::{error_events, ErrorEvent};
use crate::turbo::TurboCode;
use crate::{Bit, Result};

struct Edge {
    a: usize,
    b: usize,
    x: usize,
}

fn signed_residue(d: i64, n: usize) -> i64 {
    let m = d.rem_euclid(n as i64);
    if 2 * m > n as i64 {
        m - n as i64
    } else {
        m
    }
}

fn owner(events: &[ErrorEvent], x: usize, n: usize) -> usize {
    events
        .iter()
        .position(|e| e.contains(x, n))
        .expect("every support position lies in an event")
}

/// Shortest elementary cycle as a list of edge ids, starting on an A vertex.
fn shortest_cycle(edges: &[Edge], na: usize, nb: usize) -> Option<Vec<usize>> {
    // vertices: A events are 0..na, B events na..na+nb
    let nv = na + nb;
    let mut adj = vec![Vec::new(); nv];
    for (id, e) in edges.iter().enumerate() {
        adj[e.a].push((na + e.b, id));
        adj[na + e.b].push((e.a, id));
    }
    let mut best: Option<Vec<usize>> = None;
    for root in 0..na {
        let mut dist = vec![usize::MAX; nv];
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; nv];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, id) in &adj[u] {
                if parent[u].is_some_and(|(_, pid)| pid == id) {
                    continue;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = Some((u, id));
                    queue.push_back(v);
                    continue;
                }
                let len = dist[u] + dist[v] + 1;
                if best.as_ref().is_some_and(|b| b.len() <= len) {
                    continue;
                }
                let path = |mut w: usize| {
                    let mut verts = vec![w];
                    let mut ids = Vec::new();
                    while let Some((p, pid)) = parent[w] {
                        ids.push(pid);
                        verts.push(p);
                        w = p;
                    }
                    (verts, ids)
                };
                let (vu, iu) = path(u);
                let (vv, iv) = path(v);
                // the two tree paths may only share the root
                let mut seen = vec![false; nv];
                let simple = vu.iter().chain(&vv[..vv.len() - 1]).all(|&w| !std::mem::replace(&mut seen[w], true))
                    && vu.last() == Some(&root)
                    && vv.last() == Some(&root);
                if !simple || iu.contains(&id) || iv.contains(&id) {
                    continue;
                }
                // root → … → u, u–v, v → … → root
                let mut cycle: Vec<usize> = iu.into_iter().rev().collect();
                cycle.push(id);
                cycle.extend(iv);
                best = Some(cycle);
            }
        }
    }
    best
}

/// Builds a chain of pairwise distinct elements with π-weight at most
/// `W_T(s) + W_T(s^π)` from the events of `s`.
///
/// Returns `None` when `s` has fewer than two ones, in which case the event
/// graph has no cycle.
pub fn chain_from_input(tc: &TurboCode, s: &[Bit]) -> Result<Option<Chain>> {
    let n = tc.len();
    let perm = tc.perm();
    let code = tc.code();
    let sp = perm.interleave(s);
    let ev_b = error_events(code, s)?;
    let ev_a = error_events(code, &sp)?;
    let edges: Vec<Edge> = (0..n)
        .filter(|&x| sp[x] == 1)
        .map(|x| Edge {
            a: owner(&ev_a, x, n),
            b: owner(&ev_b, perm.apply(x), n),
            x,
        })
        .collect();
    let Some(cycle) = shortest_cycle(&edges, ev_a.len(), ev_b.len()) else {
        return Ok(None);
    };
    // consecutive edges from the root share B, then A, …; the last shares the root (A) with the first
    let xs: Vec<usize> = cycle.iter().map(|&id| edges[id].x).collect();
    let r: Vec<i64> = xs
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let d = if i % 2 == 0 {
                perm.apply(w[1]) as i64 - perm.apply(w[0]) as i64
            } else {
                w[1] as i64 - w[0] as i64
            };
            signed_residue(d, n)
        })
        .collect();
    let chain = build_chain(perm, &r, xs[0])?;
    debug_assert_eq!(chain.x, xs);
    Ok(Some(chain))
}
