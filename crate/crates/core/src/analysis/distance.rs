//! Minimum-distance estimation: exhaustive enumeration for tiny blocks and a
//! bounded-input-weight search that exploits quasi-cyclic symmetry.

use std::fmt;

use rayon::prelude::*;

use crate::rsc::RscCode;
use crate::turbo::{Puncture, Termination, TurboCode};
use crate::{Bit, Error, Result};

/// Largest block length accepted by [`min_distance_exhaustive`].
pub const MAX_EXHAUSTIVE_LEN: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    LowWeightSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundType {
    Exact,
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub method: Method,
    pub bound_type: BoundType,
    /// Weight of the transmitted codeword.
    pub value: usize,
    /// Support of the information word achieving `value`.
    pub witness: Vec<usize>,
    /// Largest information weight examined.
    pub max_input_weight: usize,
}

impl DistanceReport {
    pub fn witness_bits(&self, n: usize) -> Vec<Bit> {
        let mut v = vec![0; n];
        for &i in &self.witness {
            v[i] = 1;
        }
        v
    }
}

impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let method = match self.method {
            Method::Exhaustive => "exhaustive",
            Method::LowWeightSearch => "low_weight_search",
        };
        let bound = match self.bound_type {
            BoundType::Exact => "exact",
            BoundType::UpperBound => "upper_bound",
        };
        let witness: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
        writeln!(f, "method {method}")?;
        writeln!(f, "bound_type {bound}")?;
        writeln!(f, "value {}", self.value)?;
        writeln!(f, "witness {}", witness.join(" "))?;
        write!(f, "max_input_weight {}", self.max_input_weight)
    }
}

fn transmitted_weight(tc: &TurboCode, bits: &[Bit]) -> Result<usize> {
    let cw = tc.encode(bits)?;
    Ok(tc.puncture_codeword(&cw).iter().filter(|&&b| b == 1).count())
}

/// Exact minimum distance by encoding all `2^N − 1` nonzero words.
pub fn min_distance_exhaustive(tc: &TurboCode) -> Result<DistanceReport> {
    let n = tc.len();
    if n > MAX_EXHAUSTIVE_LEN {
        return Err(Error::Resource(format!(
            "exhaustive search needs 2^{n} encodings; limit is N ≤ {MAX_EXHAUSTIVE_LEN}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("empty code".into()));
    }
    let best = (1u32..1 << n)
        .into_par_iter()
        .map(|word| {
            let bits: Vec<Bit> = (0..n).map(|k| (word >> k & 1) as Bit).collect();
            transmitted_weight(tc, &bits).map(|w| (w, word))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("at least one word");
    Ok(DistanceReport {
        method: Method::Exhaustive,
        bound_type: BoundType::Exact,
        value: best.0,
        witness: (0..n).filter(|k| best.1 >> k & 1 == 1).collect(),
        max_input_weight: n,
    })
}

/// Parity weight of a constituent for a sparse input, in O(weight) steps.
///
/// Zero-input runs follow the autonomous state cycles; their parity weight is
/// read from prefix sums.
struct SparseEncoder {
    code: RscCode,
    n: usize,
    tail_biting: bool,
    /// Tail-biting start state contributed by a single one at position x.
    impulse_start: Vec<usize>,
    cycle_of: Vec<usize>,
    pos_in_cycle: Vec<usize>,
    cycles: Vec<Vec<usize>>,
    /// `prefix[c][k]` = parity ones over the first k zero-input steps around cycle c (doubled).
    prefix: Vec<Vec<usize>>,
}

impl SparseEncoder {
    fn new(code: &RscCode, n: usize, tail_biting: bool) -> Result<Self> {
        let t = code.trellis();
        let states = code.num_states();
        let mut cycle_of = vec![usize::MAX; states];
        let mut pos_in_cycle = vec![0; states];
        let mut cycles = Vec::new();
        let mut prefix = Vec::new();
        for s in 0..states {
            if cycle_of[s] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut cyc = Vec::new();
            let mut v = s;
            loop {
                cycle_of[v] = id;
                pos_in_cycle[v] = cyc.len();
                cyc.push(v);
                v = t.next_state(v, 0);
                if v == s {
                    break;
                }
            }
            let mut pre = vec![0];
            for k in 0..2 * cyc.len() {
                let st = cyc[k % cyc.len()];
                pre.push(pre[k] + usize::from(t.parity(st, 0)));
            }
            cycles.push(cyc);
            prefix.push(pre);
        }
        let impulse_start = if tail_biting {
            let mut e = vec![0; n];
            (0..n)
                .map(|x| {
                    e[x] = 1;
                    let s = code.tail_biting_initial_state(&e);
                    e[x] = 0;
                    s
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            vec![0; n]
        };
        Ok(Self {
            code: code.clone(),
            n,
            tail_biting,
            impulse_start,
            cycle_of,
            pos_in_cycle,
            cycles,
            prefix,
        })
    }

    /// Runs `len` zero inputs from `state`; returns (parity ones, end state).
    fn zero_run(&self, state: usize, len: usize) -> (usize, usize) {
        let c = self.cycle_of[state];
        let period = self.cycles[c].len();
        let p = self.pos_in_cycle[state];
        let pre = &self.prefix[c];
        let (full, rem) = (len / period, len % period);
        let ones = full * pre[period] + pre[p + rem] - pre[p];
        (ones, self.cycles[c][(p + rem) % period])
    }

    /// Parity weight for the input whose support is `sorted` (ascending, distinct).
    fn parity_weight(&self, sorted: &[usize]) -> usize {
        let t = self.code.trellis();
        let mut state = if self.tail_biting {
            sorted.iter().fold(0, |acc, &x| acc ^ self.impulse_start[x])
        } else {
            0
        };
        let start = state;
        let mut weight = 0;
        let mut time = 0;
        for &x in sorted {
            let (w, s) = self.zero_run(state, x - time);
            weight += w + usize::from(t.parity(s, 1));
            state = t.next_state(s, 1);
            time = x + 1;
        }
        let (w, end) = self.zero_run(state, self.n - time);
        debug_assert!(!self.tail_biting || end == start);
        weight + w
    }
}

/// Visits every `k`-subset of `{0..n}` with first element `first`, in lexicographic order.
fn for_each_subset(first: usize, k: usize, n: usize, f: &mut dyn FnMut(&[usize])) {
    let mut idx = vec![first];
    fn rec(idx: &mut Vec<usize>, k: usize, n: usize, f: &mut dyn FnMut(&[usize])) {
        if idx.len() == k {
            f(idx);
            return;
        }
        let start = idx.last().map_or(0, |&v| v + 1);
        for v in start..n {
            idx.push(v);
            rec(idx, k, n, f);
            idx.pop();
        }
    }
    rec(&mut idx, k, n, f);
}

/// Minimum transmitted weight over all nonzero information words of weight
/// at most `max_input_weight`; an upper bound on the minimum distance.
///
/// For tail-biting codes whose interleaver is quasi-cyclic with period `p`,
/// cyclic shifts by `p` preserve codeword weight, so the smallest support
/// position only ranges over `0..p`.
pub fn min_distance_low_weight(tc: &TurboCode, max_input_weight: usize) -> Result<DistanceReport> {
    let n = tc.len();
    if max_input_weight < 1 {
        return Err(Error::Domain("max_input_weight must be at least 1".into()));
    }
    let max_w = max_input_weight.min(n);
    let tail_biting = tc.termination() == Termination::TailBiting;
    let period = match tc.perm().quasi_cyclic_period() {
        Some(p) if tail_biting && (tc.puncture() == Puncture::None || p % 2 == 0) => p,
        _ => n,
    };
    let sparse = if tc.puncture() == Puncture::None {
        Some(SparseEncoder::new(tc.code(), n, tail_biting)?)
    } else {
        None
    };
    let perm = tc.perm();

    let evaluate = |support: &[usize], scratch: &mut Vec<usize>| -> Result<usize> {
        match &sparse {
            Some(enc) => {
                scratch.clear();
                scratch.extend(support.iter().map(|&y| perm.inverse_apply(y)));
                scratch.sort_unstable();
                Ok(support.len() + enc.parity_weight(support) + enc.parity_weight(scratch))
            }
            None => {
                let mut bits = vec![0; n];
                support.iter().for_each(|&i| bits[i] = 1);
                transmitted_weight(tc, &bits)
            }
        }
    };

    // (weight, input weight, first, rank within first) keeps ties deterministic
    let best = (1..=max_w)
        .flat_map(|k| (0..period.min(n)).map(move |first| (k, first)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, first)| -> Result<Option<(usize, Vec<usize>)>> {
            let mut best: Option<(usize, Vec<usize>)> = None;
            let mut scratch = Vec::with_capacity(k);
            let mut err = None;
            for_each_subset(first, k, n, &mut |s| {
                if err.is_some() {
                    return;
                }
                match evaluate(s, &mut scratch) {
                    Ok(w) => {
                        if best.as_ref().is_none_or(|(b, _)| w < *b) {
                            best = Some((w, s.to_vec()));
                        }
                    }
                    Err(e) => err = Some(e),
                }
            });
            match err {
                Some(e) => Err(e),
                None => Ok(best),
            }
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .min_by_key(|(w, _)| *w)
        .expect("at least one candidate");
    Ok(DistanceReport {
        method: Method::LowWeightSearch,
        bound_type: if max_w == n { BoundType::Exact } else { BoundType::UpperBound },
        value: best.0,
        witness: best.1,
        max_input_weight: max_w,
    })
}
