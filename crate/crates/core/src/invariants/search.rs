//! Branch-and-bound searches for longest and fixed-length paths and cycles.
//!
//! All searches extend a simple path one vertex at a time in ascending label
//! order. A branch is cut when the vertices still reachable from the growing
//! end (through unvisited vertices) cannot lift it past the bound, or, for
//! cycles, when the root is no longer reachable. Cycle searches root every
//! cycle at its smallest vertex.

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};

use super::connectivity::closure;

/// Node-expansion cap shared by the searches of one computation.
#[derive(Debug, Clone, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline(always)]
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(Error::Timeout(l)),
            _ => Ok(()),
        }
    }
}

#[inline(always)]
fn pop(x: u64) -> usize {
    x.count_ones() as usize
}

/// Longest cycle inside `block`, if it beats `floor` vertices.
pub(crate) fn longest_cycle_in(
    adj: &[u64],
    block: u64,
    floor: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    let cap = pop(block);
    let mut s = MaxCycle {
        adj,
        allowed: 0,
        root: 0,
        path: Vec::with_capacity(cap),
        best: Vec::new(),
        floor,
        cap,
        budget,
    };
    for r in Bits(block) {
        if s.best_len() == cap {
            break;
        }
        s.allowed = block & !low_mask(r);
        if pop(closure(adj, bit(r), s.allowed)) <= s.best_len() {
            continue;
        }
        s.root = r;
        s.path.clear();
        s.path.push(r);
        if s.grow(r, bit(r))? {
            break;
        }
    }
    Ok(if s.best.is_empty() { None } else { Some(s.best) })
}

struct MaxCycle<'a> {
    adj: &'a [u64],
    allowed: u64,
    root: usize,
    path: Vec<usize>,
    best: Vec<usize>,
    floor: usize,
    cap: usize,
    budget: &'a mut Budget,
}

impl MaxCycle<'_> {
    fn best_len(&self) -> usize {
        self.best.len().max(self.floor)
    }

    fn grow(&mut self, cur: usize, visited: u64) -> Result<bool> {
        self.budget.tick()?;
        let len = self.path.len();
        if len >= 3 && self.adj[cur] & bit(self.root) != 0 && len > self.best_len() {
            self.best.clone_from(&self.path);
            if len == self.cap {
                return Ok(true);
            }
        }
        let free = self.allowed & !visited;
        let start = self.adj[cur] & free;
        if start == 0 {
            return Ok(false);
        }
        let reach = closure(self.adj, start, free);
        if self.adj[self.root] & reach == 0 || len + pop(reach) <= self.best_len() {
            return Ok(false);
        }
        for w in Bits(start) {
            self.path.push(w);
            if self.grow(w, visited | bit(w))? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }
}

/// A cycle with exactly `len` vertices through `v` using only `allowed`.
pub(crate) fn cycle_through(
    adj: &[u64],
    v: usize,
    len: usize,
    allowed: u64,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    if len < 3 || allowed & bit(v) == 0 {
        return Ok(None);
    }
    let mut s = ExactCycle {
        adj,
        allowed,
        root: v,
        target: len,
        path: Vec::with_capacity(len),
        budget,
    };
    s.path.push(v);
    Ok(if s.grow(v, bit(v))? { Some(s.path) } else { None })
}

struct ExactCycle<'a> {
    adj: &'a [u64],
    allowed: u64,
    root: usize,
    target: usize,
    path: Vec<usize>,
    budget: &'a mut Budget,
}

impl ExactCycle<'_> {
    fn grow(&mut self, cur: usize, visited: u64) -> Result<bool> {
        self.budget.tick()?;
        let len = self.path.len();
        if len == self.target {
            return Ok(self.adj[cur] & bit(self.root) != 0);
        }
        let free = self.allowed & !visited;
        let mut start = self.adj[cur] & free;
        if len + 1 == self.target {
            start &= self.adj[self.root];
        }
        if start == 0 {
            return Ok(false);
        }
        let reach = closure(self.adj, start, free);
        if self.adj[self.root] & reach == 0 || len + pop(reach) < self.target {
            return Ok(false);
        }
        for w in Bits(start) {
            self.path.push(w);
            if self.grow(w, visited | bit(w))? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }
}

/// Calls `f` once per cycle with exactly `len` vertices inside `block`; each
/// cycle is reported starting at its smallest vertex, with its second vertex
/// smaller than its last.
pub(crate) fn for_each_cycle_in(
    adj: &[u64],
    block: u64,
    len: usize,
    budget: &mut Budget,
    f: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    if len < 3 {
        return Ok(());
    }
    for r in Bits(block) {
        let allowed = block & !low_mask(r);
        if pop(closure(adj, bit(r), allowed)) < len {
            continue;
        }
        let mut s = AllCycles {
            adj,
            allowed,
            root: r,
            target: len,
            path: vec![r],
            budget,
            f,
        };
        s.grow(r, bit(r))?;
    }
    Ok(())
}

struct AllCycles<'a, 'f> {
    adj: &'a [u64],
    allowed: u64,
    root: usize,
    target: usize,
    path: Vec<usize>,
    budget: &'a mut Budget,
    f: &'f mut dyn FnMut(&[usize]),
}

impl AllCycles<'_, '_> {
    fn grow(&mut self, cur: usize, visited: u64) -> Result<()> {
        self.budget.tick()?;
        let len = self.path.len();
        if len == self.target {
            if self.adj[cur] & bit(self.root) != 0 && self.path[1] < cur {
                (self.f)(&self.path);
            }
            return Ok(());
        }
        let free = self.allowed & !visited;
        let mut start = self.adj[cur] & free;
        if len + 1 == self.target {
            start &= self.adj[self.root];
        }
        if start == 0 {
            return Ok(());
        }
        let reach = closure(self.adj, start, free);
        if self.adj[self.root] & reach == 0 || len + pop(reach) < self.target {
            return Ok(());
        }
        for w in Bits(start) {
            self.path.push(w);
            self.grow(w, visited | bit(w))?;
            self.path.pop();
        }
        Ok(())
    }
}

/// Longest path inside the connected vertex set `comp`, if it beats `floor`
/// vertices.
pub(crate) fn longest_path_in(
    adj: &[u64],
    comp: u64,
    floor: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    let cap = pop(comp);
    let mut s = MaxPath {
        adj,
        comp,
        path: Vec::with_capacity(cap),
        best: Vec::new(),
        floor,
        cap,
        budget,
    };
    for start in Bits(comp) {
        s.path.clear();
        s.path.push(start);
        if s.grow(start, bit(start))? {
            break;
        }
    }
    Ok(if s.best.is_empty() { None } else { Some(s.best) })
}

struct MaxPath<'a> {
    adj: &'a [u64],
    comp: u64,
    path: Vec<usize>,
    best: Vec<usize>,
    floor: usize,
    cap: usize,
    budget: &'a mut Budget,
}

impl MaxPath<'_> {
    fn best_len(&self) -> usize {
        self.best.len().max(self.floor)
    }

    fn grow(&mut self, cur: usize, visited: u64) -> Result<bool> {
        self.budget.tick()?;
        let len = self.path.len();
        if len > self.best_len() {
            self.best.clone_from(&self.path);
            if len == self.cap {
                return Ok(true);
            }
        }
        let free = self.comp & !visited;
        let start = self.adj[cur] & free;
        if start == 0 {
            return Ok(false);
        }
        let reach = closure(self.adj, start, free);
        if len + pop(reach) <= self.best_len() {
            return Ok(false);
        }
        for w in Bits(start) {
            self.path.push(w);
            if self.grow(w, visited | bit(w))? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }
}

/// A path with exactly `len` vertices containing `v`, inside `comp`.
///
/// The path is grown as two arms out of `v`. The second arm may only start
/// once the first is non-empty and must leave `v` through a larger neighbour
/// than the first, so each path is met in one orientation only.
pub(crate) fn path_through(
    adj: &[u64],
    v: usize,
    len: usize,
    comp: u64,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    if len == 0 || comp & bit(v) == 0 {
        return Ok(None);
    }
    let mut s = TwoArm {
        adj,
        comp,
        v,
        target: len,
        arm_a: vec![v],
        arm_b: Vec::new(),
        budget,
    };
    if s.grow_a(bit(v))? {
        let mut path: Vec<usize> = s.arm_b.iter().rev().copied().collect();
        path.extend_from_slice(&s.arm_a);
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

struct TwoArm<'a> {
    adj: &'a [u64],
    comp: u64,
    v: usize,
    target: usize,
    arm_a: Vec<usize>,
    arm_b: Vec<usize>,
    budget: &'a mut Budget,
}

impl TwoArm<'_> {
    fn grow_a(&mut self, visited: u64) -> Result<bool> {
        self.budget.tick()?;
        if self.arm_a.len() == self.target {
            return Ok(true);
        }
        if self.arm_a.len() > 1 && self.grow_b(self.v, visited)? {
            return Ok(true);
        }
        let free = self.comp & !visited;
        let end = *self.arm_a.last().expect("arm A holds v");
        let start = self.adj[end] & free;
        if start == 0 {
            return Ok(false);
        }
        let reach = closure(self.adj, start, free) | closure(self.adj, self.adj[self.v] & free, free);
        if pop(visited) + pop(reach) < self.target {
            return Ok(false);
        }
        for w in Bits(start) {
            self.arm_a.push(w);
            if self.grow_a(visited | bit(w))? {
                return Ok(true);
            }
            self.arm_a.pop();
        }
        Ok(false)
    }

    fn grow_b(&mut self, end: usize, visited: u64) -> Result<bool> {
        self.budget.tick()?;
        let count = self.arm_a.len() + self.arm_b.len();
        if count == self.target {
            return Ok(true);
        }
        let free = self.comp & !visited;
        let mut start = self.adj[end] & free;
        if self.arm_b.is_empty() {
            start &= !low_mask(self.arm_a[1] + 1);
        }
        if start == 0 {
            return Ok(false);
        }
        let reach = closure(self.adj, start, free);
        if count + pop(reach) < self.target {
            return Ok(false);
        }
        for w in Bits(start) {
            self.arm_b.push(w);
            if self.grow_b(w, visited | bit(w))? {
                return Ok(true);
            }
            self.arm_b.pop();
        }
        Ok(false)
    }
}

/// Calls `f` once per path with exactly `len` vertices, reported from its
/// smaller endpoint.
pub(crate) fn for_each_path(
    adj: &[u64],
    n: usize,
    len: usize,
    budget: &mut Budget,
    f: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    if len == 0 {
        return Ok(());
    }
    if len == 1 {
        for v in 0..n {
            f(&[v]);
        }
        return Ok(());
    }
    let all = low_mask(n);
    for s in 0..n {
        let mut e = AllPaths {
            adj,
            all,
            target: len,
            path: vec![s],
            budget,
            f,
        };
        e.grow(s, bit(s))?;
    }
    Ok(())
}

struct AllPaths<'a, 'f> {
    adj: &'a [u64],
    all: u64,
    target: usize,
    path: Vec<usize>,
    budget: &'a mut Budget,
    f: &'f mut dyn FnMut(&[usize]),
}

impl AllPaths<'_, '_> {
    fn grow(&mut self, cur: usize, visited: u64) -> Result<()> {
        self.budget.tick()?;
        let len = self.path.len();
        if len == self.target {
            if self.path[0] < cur {
                (self.f)(&self.path);
            }
            return Ok(());
        }
        let free = self.all & !visited;
        let start = self.adj[cur] & free;
        if start == 0 {
            return Ok(());
        }
        let reach = closure(self.adj, start, free);
        if len + pop(reach) < self.target {
            return Ok(());
        }
        for w in Bits(start) {
            self.path.push(w);
            self.grow(w, visited | bit(w))?;
            self.path.pop();
        }
        Ok(())
    }
}
