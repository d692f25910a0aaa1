//! Brute-force oracles: linear-scan maximum and sliding-window containment.

use std::collections::HashSet;

/// Maximum of the little-endian 4-byte integers in `bytes`; a trailing
/// partial lane is ignored. None when no full lane exists.
pub fn brute_max_i32(bytes: &[u8]) -> Option<i32> {
    let mut best: Option<i32> = None;
    for lane in bytes.chunks_exact(4) {
        let v = i32::from_le_bytes(lane.try_into().unwrap());
        best = Some(match best {
            Some(b) if b >= v => b,
            _ => v,
        });
    }
    best
}

/// Every 16-byte window of a payload, indexed for containment checks against
/// arbitrary haystacks.
pub struct WindowIndex {
    windows: HashSet<u128>,
}

impl WindowIndex {
    pub fn new(payload: &[u8]) -> Self {
        let mut windows = HashSet::new();
        if payload.len() >= 16 {
            for w in payload.windows(16) {
                windows.insert(u128::from_le_bytes(w.try_into().unwrap()));
            }
        }
        WindowIndex { windows }
    }

    pub fn first_hit(&self, haystack: &[u8]) -> Option<usize> {
        if haystack.len() < 16 || self.windows.is_empty() {
            return None;
        }
        for (i, w) in haystack.windows(16).enumerate() {
            let v = u128::from_le_bytes(w.try_into().unwrap());
            if self.windows.contains(&v) {
                return Some(i);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_basics() {
        let mut bytes = Vec::new();
        for v in [3i32, 1, 4, 1, 5] {
            bytes.extend_from_slice(&v.to_le_bytes());
        }
        assert_eq!(brute_max_i32(&bytes), Some(5));
        bytes.extend_from_slice(&[0xff, 0xff]); // partial lane ignored
        assert_eq!(brute_max_i32(&bytes), Some(5));
        assert_eq!(brute_max_i32(&[1, 2, 3]), None);
        assert_eq!(brute_max_i32(&[]), None);
        let neg: Vec<u8> = (-7i32).to_le_bytes().into_iter().chain((-2i32).to_le_bytes()).collect();
        assert_eq!(brute_max_i32(&neg), Some(-2));
    }

    #[test]
    fn window_hits_and_misses() {
        let payload: Vec<u8> = (0u8..64).collect();
        let idx = WindowIndex::new(&payload);
        let mut hay = vec![0xaa; 100];
        assert_eq!(idx.first_hit(&hay), None);
        hay[40..56].copy_from_slice(&payload[10..26]);
        assert_eq!(idx.first_hit(&hay), Some(40));
        assert_eq!(WindowIndex::new(&payload[..8]).first_hit(&hay), None);
    }
}
