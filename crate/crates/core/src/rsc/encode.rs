use super::RscCode;
use crate::gf2::BitMatrix;
use crate::{Bit, Error, Result};

impl RscCode {
    /// Runs the encoder from `state`; returns the parity bits and the final state.
    pub fn encode_from(&self, state: usize, bits: &[Bit]) -> (Vec<Bit>, usize) {
        let t = self.trellis();
        let mut s = state;
        let parity = bits
            .iter()
            .map(|&u| {
                let p = t.parity(s, u);
                s = t.next_state(s, u);
                p
            })
            .collect();
        (parity, s)
    }

    /// Visited states `s_0, …, s_N` when encoding from `state`.
    pub fn state_path(&self, state: usize, bits: &[Bit]) -> Vec<usize> {
        let t = self.trellis();
        let mut path = Vec::with_capacity(bits.len() + 1);
        path.push(state);
        let mut s = state;
        for &u in bits {
            s = t.next_state(s, u);
            path.push(s);
        }
        path
    }

    /// Encodes from the zero state and flushes it with ν tail bits.
    ///
    /// The parity sequence has length `N + ν` and covers the tail.
    pub fn encode_zero_terminated(&self, bits: &[Bit]) -> (Vec<Bit>, Vec<Bit>) {
        let t = self.trellis();
        let (mut parity, mut s) = self.encode_from(0, bits);
        let mut tail = Vec::with_capacity(self.memory());
        for _ in 0..self.memory() {
            // the input that cancels the feedback keeps a zero entering the register
            let u = if t.next_state(s, 0) & 1 == 0 { 0 } else { 1 };
            parity.push(t.parity(s, u));
            tail.push(u);
            s = t.next_state(s, u);
        }
        debug_assert_eq!(s, 0);
        (parity, tail)
    }

    /// The circular state `s_0` such that encoding `bits` from `s_0` ends in `s_0`.
    ///
    /// Solves `(I ⊕ A^N) s_0 = z` over GF(2), where `z` is the final state of the
    /// zero-state response.
    pub fn tail_biting_initial_state(&self, bits: &[Bit]) -> Result<usize> {
        let n = bits.len();
        let (_, z) = self.encode_from(0, bits);
        let system = self
            .state_matrix()
            .pow(n as u64)
            .add(&BitMatrix::identity(self.memory()));
        system
            .solve(z as u32)
            .map(|s| s as usize)
            .ok_or_else(|| Error::UnsupportedLength {
                n,
                period: self.feedback_period(),
            })
    }

    /// Circular encoding: N parity bits, no tail, final state equals initial state.
    pub fn encode_tail_biting(&self, bits: &[Bit]) -> Result<Vec<Bit>> {
        let s0 = self.tail_biting_initial_state(bits)?;
        let (parity, end) = self.encode_from(s0, bits);
        debug_assert_eq!(end, s0);
        Ok(parity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code(g: &str) -> RscCode {
        g.parse().unwrap()
    }

    #[test]
    fn zero_input() {
        let c = code("13,15");
        let (p, tail) = c.encode_zero_terminated(&[0; 20]);
        assert!(p.iter().all(|&b| b == 0));
        assert_eq!(tail, vec![0, 0, 0]);
        assert_eq!(c.tail_biting_initial_state(&[0; 20]).unwrap(), 0);
        assert!(c.encode_tail_biting(&[0; 20]).unwrap().iter().all(|&b| b == 0));
    }

    #[test]
    fn impulse_response_7_5() {
        let c = code("7,5");
        let mut bits = vec![0; 6];
        bits[0] = 1;
        let (p, tail) = c.encode_zero_terminated(&bits);
        assert_eq!(&p[..6], &[1, 1, 1, 0, 1, 1]);
        assert_eq!(p.len(), 8);
        assert_eq!(c.encode_from(0, &[bits.clone(), tail].concat()).1, 0);
    }

    #[test]
    fn tail_biting_solvability() {
        let c = code("13,15");
        assert!(c.supports_tail_biting(400));
        assert!(!c.supports_tail_biting(14));
        assert!(code("7,5").supports_tail_biting(16));
        assert!(!code("7,5").supports_tail_biting(12));
        // period 5 divides 1600
        assert!(!code("37,21").supports_tail_biting(1600));
        assert!(code("37,21").supports_tail_biting(1601));
        let err = code("7,5").encode_tail_biting(&[1; 9]).unwrap_err();
        assert_eq!(err, Error::UnsupportedLength { n: 9, period: 3 });
    }

    #[test]
    fn tail_biting_matches_state_search() {
        let c = code("7,5");
        let bits = [1, 0, 0, 1, 0, 0, 0, 0];
        let closing: Vec<usize> = (0..4).filter(|&s| c.encode_from(s, &bits).1 == s).collect();
        assert_eq!(closing.len(), 1);
        assert_eq!(c.tail_biting_initial_state(&bits).unwrap(), closing[0]);
        assert_eq!(c.encode_tail_biting(&bits).unwrap(), c.encode_from(closing[0], &bits).0);
    }

    proptest! {
        #[test]
        fn tail_biting_closes(bits in proptest::collection::vec(0u8..2, 16..80)) {
            for g in ["7,5", "13,15", "23,35"] {
                let c = code(g);
                if !c.supports_tail_biting(bits.len()) {
                    continue;
                }
                let s0 = c.tail_biting_initial_state(&bits).unwrap();
                prop_assert_eq!(c.encode_from(s0, &bits).1, s0);
                let brute: Vec<usize> = (0..c.num_states())
                    .filter(|&s| c.encode_from(s, &bits).1 == s)
                    .collect();
                prop_assert_eq!(brute, vec![s0]);
            }
        }

        #[test]
        fn tail_biting_is_shift_covariant(bits in proptest::collection::vec(0u8..2, 25), k in 0usize..25) {
            let c = code("7,5");
            let mut shifted = bits.clone();
            shifted.rotate_right(k);
            let mut p = c.encode_tail_biting(&bits).unwrap();
            p.rotate_right(k);
            prop_assert_eq!(c.encode_tail_biting(&shifted).unwrap(), p);
        }

        #[test]
        fn tail_biting_is_linear(
            a in proptest::collection::vec(0u8..2, 32),
            b in proptest::collection::vec(0u8..2, 32),
        ) {
            let c = code("13,15");
            let sum: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
            let pa = c.encode_tail_biting(&a).unwrap();
            let pb = c.encode_tail_biting(&b).unwrap();
            let ps: Vec<u8> = pa.iter().zip(&pb).map(|(x, y)| x ^ y).collect();
            prop_assert_eq!(c.encode_tail_biting(&sum).unwrap(), ps);
        }
    }
}
