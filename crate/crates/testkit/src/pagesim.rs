//! Reference page-replacement simulator.
//!
//! Consumes a logical trace of page touches and reports the fault and
//! eviction behaviour a budgeted arena must exhibit. Second-chance is the
//! textbook formulation: a FIFO of resident pages, a reference bit set on
//! every touch, victims taken from the head after one forgiveness pass.
//! LRU picks the resident page with the oldest touch tick.

use std::collections::{HashMap, VecDeque};

pub type PageId = (u64, u64);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SimPolicy {
    Clock,
    Lru,
}

pub struct PageSim {
    budget_pages: usize,
    policy: SimPolicy,
    resident: HashMap<PageId, PageMeta>,
    fifo: VecDeque<PageId>,
    tick: u64,
    pub loads: u64,
    pub evictions: u64,
    pub victims: Vec<PageId>,
}

struct PageMeta {
    referenced: bool,
    stamp: u64,
}

impl PageSim {
    pub fn new(budget_pages: usize, policy: SimPolicy) -> Self {
        assert!(budget_pages > 0);
        PageSim {
            budget_pages,
            policy,
            resident: HashMap::new(),
            fifo: VecDeque::new(),
            tick: 0,
            loads: 0,
            evictions: 0,
            victims: Vec::new(),
        }
    }

    pub fn touch(&mut self, region: u64, page: u64) {
        let id = (region, page);
        self.tick += 1;
        if let Some(meta) = self.resident.get_mut(&id) {
            meta.referenced = true;
            meta.stamp = self.tick;
            return;
        }
        self.loads += 1;
        while self.resident.len() >= self.budget_pages {
            let victim = match self.policy {
                SimPolicy::Clock => self.pick_clock(),
                SimPolicy::Lru => self.pick_lru(),
            };
            self.resident.remove(&victim);
            self.evictions += 1;
            self.victims.push(victim);
        }
        self.resident.insert(
            id,
            PageMeta {
                referenced: true,
                stamp: self.tick,
            },
        );
        self.fifo.push_back(id);
    }

    fn pick_clock(&mut self) -> PageId {
        loop {
            let id = self.fifo.pop_front().expect("resident set nonempty");
            if !self.resident.contains_key(&id) {
                continue;
            }
            let meta = self.resident.get_mut(&id).unwrap();
            if meta.referenced {
                meta.referenced = false;
                self.fifo.push_back(id);
            } else {
                return id;
            }
        }
    }

    fn pick_lru(&mut self) -> PageId {
        *self
            .resident
            .iter()
            .min_by_key(|(_, meta)| meta.stamp)
            .map(|(id, _)| id)
            .expect("resident set nonempty")
    }

    pub fn resident_pages(&self) -> usize {
        self.resident.len()
    }
}

/// Expands a byte-ranged access into the ascending page touches an arena
/// performs for it.
pub fn pages_of(offset: u64, len: u64, page_size: u64) -> impl Iterator<Item = u64> {
    let first = offset / page_size;
    let last = if len == 0 {
        first
    } else {
        (offset + len - 1) / page_size + 1
    };
    first..last
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fits_in_budget_no_evictions() {
        let mut sim = PageSim::new(4, SimPolicy::Clock);
        for p in 0..4 {
            sim.touch(0, p);
        }
        for p in 0..4 {
            sim.touch(0, p);
        }
        assert_eq!(sim.loads, 4);
        assert_eq!(sim.evictions, 0);
    }

    #[test]
    fn clock_second_chance_order() {
        // Three frames, pages 0,1,2 resident with ref bits set. Touching 3
        // sweeps the fifo (clearing 0,1,2) and evicts 0; touching 0 again
        // then evicts 1.
        let mut sim = PageSim::new(3, SimPolicy::Clock);
        for p in 0..3 {
            sim.touch(0, p);
        }
        sim.touch(0, 3);
        assert_eq!(sim.victims, vec![(0, 0)]);
        sim.touch(0, 0);
        assert_eq!(sim.victims, vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn lru_evicts_oldest() {
        let mut sim = PageSim::new(3, SimPolicy::Lru);
        sim.touch(0, 0);
        sim.touch(0, 1);
        sim.touch(0, 2);
        sim.touch(0, 0); // page 1 is now oldest
        sim.touch(0, 3);
        assert_eq!(sim.victims, vec![(0, 1)]);
    }

    #[test]
    fn sequential_thrash_is_full() {
        // 4 frames, 6 pages, two sequential passes: LRU faults every touch
        // on the second pass.
        let mut sim = PageSim::new(4, SimPolicy::Lru);
        for _ in 0..2 {
            for p in 0..6 {
                sim.touch(0, p);
            }
        }
        assert_eq!(sim.loads, 12);
    }

    #[test]
    fn page_expansion() {
        let pages: Vec<u64> = pages_of(4000, 200, 4096).collect();
        assert_eq!(pages, vec![0, 1]);
        let pages: Vec<u64> = pages_of(4096, 4096, 4096).collect();
        assert_eq!(pages, vec![1]);
        let pages: Vec<u64> = pages_of(0, 0, 4096).collect();
        assert!(pages.is_empty());
    }
}
