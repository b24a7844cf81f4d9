use super::PartitionSig;

/// Streams the partitions of `k` (optionally only those with odd parts)
/// in reverse lexicographic order of their non-increasing part lists:
/// `k`, `k-1 + 1`, ..., `1 + ... + 1`. Yields nothing for `k = 0`, whose
/// only partition is empty and has no signature.
pub fn enumerate_partitions(k: u64, odd_only: bool) -> Partitions {
    Partitions {
        state: if k == 0 { Vec::new() } else { vec![(k, 1)] },
        started: false,
        odd_only,
    }
}

/// Iterator state: the current partition in `(part, multiplicity)` form
/// with parts strictly decreasing.
pub struct Partitions {
    state: Vec<(u64, u32)>,
    started: bool,
    odd_only: bool,
}

impl Partitions {
    fn advance(&mut self) -> bool {
        let mut rest = 0u64;
        if let Some(&(1, m)) = self.state.last() {
            rest += m as u64;
            self.state.pop();
        }
        let Some(last) = self.state.last_mut() else {
            return false;
        };
        let v = last.0;
        last.1 -= 1;
        if last.1 == 0 {
            self.state.pop();
        }
        rest += v;
        let w = v - 1;
        let (q, r) = (rest / w, rest % w);
        self.state.push((w, q as u32));
        if r > 0 {
            self.state.push((r, 1));
        }
        true
    }

    fn current(&self) -> PartitionSig {
        let mut parts = self.state.clone();
        parts.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        PartitionSig::from_sorted(parts)
    }
}

impl Iterator for Partitions {
    type Item = PartitionSig;

    fn next(&mut self) -> Option<PartitionSig> {
        loop {
            if self.state.is_empty() {
                return None;
            }
            if self.started && !self.advance() {
                self.state.clear();
                return None;
            }
            self.started = true;
            if !self.odd_only || self.state.iter().all(|&(v, _)| v % 2 == 1) {
                return Some(self.current());
            }
        }
    }
}
