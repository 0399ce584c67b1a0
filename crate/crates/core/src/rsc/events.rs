use super::RscCode;
use crate::{Bit, Result};

/// A simple error event on the circular tail-biting trellis.
///
/// The path leaves the zero state on transition `start` and re-enters it on
/// transition `start + length (mod N)`; both transitions consume a one.
/// A path that never touches the zero state is reported as a single event
/// with `closed == false` and `length == N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorEvent {
    pub start: usize,
    pub length: usize,
    pub input_weight: usize,
    /// Systematic plus parity weight over the event's transitions.
    pub output_weight: usize,
    pub closed: bool,
}

impl ErrorEvent {
    /// Last transition of the event (mod N).
    pub fn end(&self, n: usize) -> usize {
        (self.start + self.length) % n
    }

    /// Whether position `x` lies in the event's interval `[start, end]`.
    pub fn contains(&self, x: usize, n: usize) -> bool {
        !self.closed || (x + n - self.start) % n <= self.length
    }
}

/// Decomposes the tail-biting path of `bits` into simple error events.
///
/// Events are listed in circular order starting after the first zero state.
pub fn error_events(code: &RscCode, bits: &[Bit]) -> Result<Vec<ErrorEvent>> {
    let n = bits.len();
    let s0 = code.tail_biting_initial_state(bits)?;
    let path = code.state_path(s0, bits);
    let t = code.trellis();
    let out_weight = |k: usize| {
        let u = bits[k];
        usize::from(u) + usize::from(t.parity(path[k], u))
    };

    let Some(anchor) = path[..n].iter().position(|&s| s == 0) else {
        return Ok(vec![ErrorEvent {
            start: 0,
            length: n,
            input_weight: bits.iter().filter(|&&b| b == 1).count(),
            output_weight: (0..n).map(out_weight).sum(),
            closed: false,
        }]);
    };

    let mut events = Vec::new();
    let mut open: Option<(usize, usize, usize)> = None;
    for step in 0..n {
        let k = (anchor + step) % n;
        let (from, to) = (path[k], path[k + 1]);
        if from == 0 && to == 0 {
            continue;
        }
        if from == 0 {
            open = Some((k, 0, 0));
        }
        let (start, iw, ow) = open.as_mut().expect("an event is open while off zero");
        *iw += usize::from(bits[k]);
        *ow += out_weight(k);
        if to == 0 {
            events.push(ErrorEvent {
                start: *start,
                length: (k + n - *start) % n,
                input_weight: *iw,
                output_weight: *ow,
                closed: true,
            });
            open = None;
        }
    }
    debug_assert!(open.is_none());
    Ok(events)
}

/// Trellis weight `W_T(s)`: the summed lengths of the error events of `s`.
pub fn trellis_weight(code: &RscCode, bits: &[Bit]) -> Result<usize> {
    Ok(error_events(code, bits)?.iter().map(|e| e.length).sum())
}
