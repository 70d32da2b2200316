//! Parallel scans over enumerated universes and explicit graph lists.

use std::collections::BTreeMap;

use longcycle_core::enumeration::{shard, UniverseSpec};
use longcycle_core::invariants::Budget;
use longcycle_core::{canonical, graph6, Error, Graph, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::GraphRecord;

/// How many failing graphs a tally keeps; the rest are only counted.
pub const MAX_RECORDS: usize = 25;

/// Execution settings. Results never depend on `threads` or `shards`.
#[derive(Clone, Debug)]
pub struct Runner {
    pub threads: usize,
    pub shards: usize,
    /// Node-expansion cap per graph and invariant computation.
    pub budget: Option<u64>,
}

impl Default for Runner {
    fn default() -> Self {
        Runner::new(1, 1)
    }
}

impl Runner {
    pub fn new(threads: usize, shards: usize) -> Runner {
        Runner {
            threads: threads.max(1),
            shards: shards.max(1),
            budget: None,
        }
    }

    /// Worker count from `LONGCYCLE_THREADS` (default 1), one shard per
    /// worker.
    pub fn from_env() -> Runner {
        let threads = std::env::var("LONGCYCLE_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(1);
        Runner::new(threads, threads)
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Runner {
        self.budget = budget;
        self
    }

    pub fn fresh_budget(&self) -> Budget {
        self.budget.map_or_else(Budget::unlimited, Budget::nodes)
    }

    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("thread pool")
    }

    /// Visits every graph of `spec`. `visit` returning `Err(Timeout)` is
    /// counted under `timeouts`; any other error is reported as a failure.
    pub fn scan<F>(&self, spec: &UniverseSpec, visit: F) -> Result<Tally>
    where
        F: Fn(&Graph, &mut Tally, &mut Budget) -> Result<()> + Sync,
    {
        spec.validate()?;
        let parts: Vec<usize> = (0..self.shards).collect();
        self.pool().install(|| {
            parts
                .par_iter()
                .map(|&i| {
                    let mut t = Tally::default();
                    for g in shard(spec, i, self.shards)? {
                        self.visit_one(&g, &mut t, &visit);
                    }
                    Ok(t)
                })
                .try_reduce(Tally::default, |mut a, b| {
                    a.merge(b);
                    Ok(a)
                })
        })
    }

    /// Visits an explicit list of graphs.
    pub fn scan_graphs<F>(&self, graphs: &[Graph], visit: F) -> Tally
    where
        F: Fn(&Graph, &mut Tally, &mut Budget) -> Result<()> + Sync,
    {
        self.pool().install(|| {
            graphs
                .par_chunks(16)
                .map(|chunk| {
                    let mut t = Tally::default();
                    for g in chunk {
                        self.visit_one(g, &mut t, &visit);
                    }
                    t
                })
                .reduce(Tally::default, |mut a, b| {
                    a.merge(b);
                    a
                })
        })
    }

    pub(crate) fn visit_one<F>(&self, g: &Graph, t: &mut Tally, visit: &F)
    where
        F: Fn(&Graph, &mut Tally, &mut Budget) -> Result<()>,
    {
        t.examined += 1;
        let mut budget = self.fresh_budget();
        match visit(g, t, &mut budget) {
            Ok(()) => {}
            Err(Error::Timeout(_)) => t.bump("timeouts"),
            Err(e) => t.fail(g, format!("error: {e}")),
        }
    }
}

/// Smallest value seen under a key, with the least-certificate graph
/// attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub value: usize,
    pub cert: Vec<u8>,
    pub graph6: String,
}

/// Order-insensitive accumulator: merging tallies in any grouping gives the
/// same result.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub examined: u64,
    pub counters: BTreeMap<String, u64>,
    pub minima: BTreeMap<String, Extremum>,
    /// Certificate-keyed graph sets, stored as graph6.
    pub classes: BTreeMap<String, BTreeMap<Vec<u8>, String>>,
    pub failures: BTreeMap<Vec<u8>, GraphRecord>,
    pub failure_count: u64,
}

impl Tally {
    pub fn bump(&mut self, key: &str) {
        self.add(key, 1);
    }

    pub fn add(&mut self, key: &str, by: u64) {
        *self.counters.entry(key.to_string()).or_default() += by;
    }

    pub fn counter(&self, key: &str) -> u64 {
        self.counters.get(key).copied().unwrap_or(0)
    }

    pub fn observe_min(&mut self, key: &str, value: usize, g: &Graph) {
        if self.minima.get(key).is_some_and(|e| e.value < value) {
            return;
        }
        let c = canonical(g);
        let candidate = Extremum {
            value,
            graph6: graph6::encode(&c.graph()),
            cert: c.canon,
        };
        self.offer_min(key.to_string(), candidate);
    }

    fn offer_min(&mut self, key: String, e: Extremum) {
        match self.minima.get(&key) {
            Some(cur) if (cur.value, &cur.cert) <= (e.value, &e.cert) => {}
            _ => {
                self.minima.insert(key, e);
            }
        }
    }

    pub fn minimum(&self, key: &str) -> Option<usize> {
        self.minima.get(key).map(|e| e.value)
    }

    pub fn add_to_class(&mut self, key: &str, g: &Graph) {
        let c = canonical(g);
        self.classes
            .entry(key.to_string())
            .or_default()
            .insert(c.canon.clone(), graph6::encode(&c.graph()));
    }

    pub fn class(&self, key: &str) -> Vec<Vec<u8>> {
        self.classes
            .get(key)
            .map(|m| m.keys().cloned().collect())
            .unwrap_or_default()
    }

    pub fn fail(&mut self, g: &Graph, reason: impl Into<String>) {
        self.failure_count += 1;
        let c = canonical(g);
        let worst = self.failures.keys().next_back().cloned();
        if self.failures.len() < MAX_RECORDS || worst.as_ref().is_some_and(|w| &c.canon < w) {
            let h = c.graph();
            self.failures
                .entry(c.canon)
                .or_insert_with(|| GraphRecord::new(&h, reason));
            if self.failures.len() > MAX_RECORDS {
                self.failures.pop_last();
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.examined += other.examined;
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
        for (k, e) in other.minima {
            self.offer_min(k, e);
        }
        for (k, set) in other.classes {
            self.classes.entry(k).or_default().extend(set);
        }
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        while self.failures.len() > MAX_RECORDS {
            self.failures.pop_last();
        }
    }

    /// Counters and minima as JSON, keyed by name.
    pub fn summary(&self) -> Value {
        let minima: BTreeMap<&String, Value> = self
            .minima
            .iter()
            .map(|(k, e)| (k, json!({ "value": e.value, "attained_by": e.graph6 })))
            .collect();
        json!({ "counters": self.counters, "minima": minima })
    }
}
