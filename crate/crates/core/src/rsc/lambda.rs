//! The constituent code's λ: the infimum, over simple error events, of
//! output Hamming weight (systematic plus parity) divided by trellis length.
//!
//! An event leaves the zero state at time `a`, stays in nonzero states and
//! re-enters zero at time `b`; its length is `b − a`, i.e. the number of
//! nonzero states it visits. The infimum over all codewords equals the
//! infimum over simple events because weight and length are additive across
//! events. It is either the ratio of some event or the mean weight of a cycle
//! through nonzero states, approached by events that loop on that cycle.
//!
//! The value is found by parametric search: for a candidate `q = num/den`,
//! arc costs `den·w − num` are checked for a negative cycle among nonzero
//! states, and the cheapest event is found by Bellman–Ford. Either
//! certificate strictly lowers `q`; when neither exists `q` is optimal.

use std::fmt;

use super::{RscCode, Trellis};
use crate::{Error, Result};

/// Nonnegative fraction in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Copy)]
struct Arc {
    from: usize,
    to: usize,
    weight: u64,
}

fn arcs(t: &Trellis) -> Vec<Arc> {
    let mut out = Vec::with_capacity(2 * t.num_states());
    for s in 0..t.num_states() {
        for u in 0..2u8 {
            let to = t.next_state(s, u);
            if s == 0 && to == 0 {
                continue;
            }
            out.push(Arc {
                from: s,
                to,
                weight: u64::from(u) + u64::from(t.parity(s, u)),
            });
        }
    }
    out
}

/// Walk statistics: total output weight and number of nonzero states visited.
fn walk_ratio(path: &[Arc]) -> Ratio {
    let weight: u64 = path.iter().map(|a| a.weight).sum();
    let length = path.iter().filter(|a| a.to != 0).count() as u64;
    Ratio::new(weight, length)
}

/// Cost of an arc for candidate `q`; entering a nonzero state adds one unit of length.
fn cost(a: &Arc, q: Ratio) -> i64 {
    let len = i64::from(a.to != 0);
    q.den as i64 * a.weight as i64 - q.num as i64 * len
}

/// Finds a cycle of negative cost among nonzero states, if any.
fn negative_cycle(all: &[Arc], states: usize, q: Ratio) -> Option<Vec<Arc>> {
    let inner: Vec<&Arc> = all.iter().filter(|a| a.from != 0 && a.to != 0).collect();
    let mut dist = vec![0i64; states];
    let mut pred: Vec<Option<Arc>> = vec![None; states];
    let mut last = None;
    for _ in 0..states {
        last = None;
        for a in &inner {
            let d = dist[a.from] + cost(a, q);
            if d < dist[a.to] {
                dist[a.to] = d;
                pred[a.to] = Some(**a);
                last = Some(a.to);
            }
        }
        last?;
    }
    // still relaxing after |V| rounds: walk back |V| steps to land on the cycle
    let mut v = last?;
    for _ in 0..states {
        v = pred[v].expect("relaxed vertex has a predecessor").from;
    }
    let start = v;
    let mut cycle = Vec::new();
    loop {
        let a = pred[v].expect("cycle vertex has a predecessor");
        cycle.push(a);
        v = a.from;
        if v == start {
            break;
        }
    }
    cycle.reverse();
    Some(cycle)
}

/// Cheapest event `0 → … → 0` under costs for `q`, assuming no negative cycles.
fn cheapest_event(all: &[Arc], states: usize, q: Ratio, rounds: usize) -> Result<(i64, Vec<Arc>)> {
    const INF: i64 = i64::MAX / 4;
    let mut dist = vec![INF; states];
    let mut pred: Vec<Option<Arc>> = vec![None; states];
    for a in all.iter().filter(|a| a.from == 0) {
        dist[a.to] = cost(a, q);
        pred[a.to] = Some(*a);
    }
    let inner: Vec<&Arc> = all.iter().filter(|a| a.from != 0 && a.to != 0).collect();
    let mut converged = false;
    for _ in 0..rounds {
        let mut changed = false;
        for a in &inner {
            if dist[a.from] == INF {
                continue;
            }
            let d = dist[a.from] + cost(a, q);
            if d < dist[a.to] {
                dist[a.to] = d;
                pred[a.to] = Some(**a);
                changed = true;
            }
        }
        if !changed {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Inconclusive(format!(
            "shortest events did not settle within {rounds} steps; increase the horizon"
        )));
    }
    let (best, ret) = all
        .iter()
        .filter(|a| a.to == 0 && a.from != 0 && dist[a.from] < INF)
        .map(|a| (dist[a.from] + cost(a, q), *a))
        .min_by_key(|(c, _)| *c)
        .expect("every nonzero state reachable from zero can return");
    let mut path = vec![ret];
    let mut v = ret.from;
    while v != 0 {
        let a = pred[v].expect("reached state has a predecessor");
        path.push(a);
        v = a.from;
    }
    path.reverse();
    Ok((best, path))
}

impl RscCode {
    /// Exact λ of the code.
    ///
    /// `search_horizon` bounds the number of Bellman–Ford rounds and must be at
    /// least four times the number of states.
    pub fn lambda(&self, search_horizon: usize) -> Result<Ratio> {
        let states = self.num_states();
        if search_horizon < 4 * states {
            return Err(Error::Inconclusive(format!(
                "horizon {search_horizon} is below 4 × {states} states; use a larger horizon"
            )));
        }
        let all = arcs(self.trellis());
        // every transition carries weight at most 2 and an event of length k has k+1 transitions
        let mut q = Ratio::new(4, 1);
        loop {
            if let Some(cycle) = negative_cycle(&all, states, q) {
                q = walk_ratio(&cycle);
                continue;
            }
            let (best, path) = cheapest_event(&all, states, q, search_horizon)?;
            if best >= 0 {
                return Ok(q);
            }
            q = walk_ratio(&path);
        }
    }
}
