//! Small-order gyrogroup search, isomorphism, automorphisms and canonical
//! forms.
//!
//! The search fills the table one left translation (row) at a time. Two
//! facts about gyrogroups shape it: `⊖a ⊕ (a ⊕ b) = b`, so the row of `⊖a`
//! is the inverse permutation of the row of `a`; and right translations are
//! bijective as well, so every partial table is a partial Latin square. The
//! inverse map is an involution fixing `0`; relabeling conjugates it, so with
//! symmetry breaking on only one involution per cycle type is tried.
//! Whenever a set of rows closed under `⊖` is complete, every gyration that
//! can be evaluated from those rows is checked for the automorphism
//! property, the left loop property and `gyr[b,a] = gyr[a,b]⁻¹`. Leaves are
//! re-verified with the full axiom check.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{GyroError, Result};
use crate::perm::Perm;
use crate::substructure::generate;
use crate::table::{Elem, GyroTable};

/// Largest order the search accepts (masks are `u64`, cost is exponential).
pub const MAX_SEARCH_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every gyrogroup of the order, deduplicated up to isomorphism.
    Exhaustive,
    /// Stop at the first table with a nonidentity gyration.
    FirstNonassociative,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub order: usize,
    /// Stop after this many isomorphism classes.
    pub max_results: Option<usize>,
    pub time_budget: Duration,
    pub mode: SearchMode,
    pub symmetry_breaking: bool,
}

impl SearchConfig {
    pub fn exhaustive(order: usize) -> Self {
        SearchConfig {
            order,
            max_results: None,
            time_budget: Duration::from_secs(3600),
            mode: SearchMode::Exhaustive,
            symmetry_breaking: true,
        }
    }

    pub fn first_nonassociative(order: usize) -> Self {
        SearchConfig {
            mode: SearchMode::FirstNonassociative,
            ..Self::exhaustive(order)
        }
    }

    fn validate(&self) -> Result<()> {
        if self.order == 0 || self.order > MAX_SEARCH_ORDER {
            return Err(GyroError::Precondition(format!(
                "search order must be in 1..={MAX_SEARCH_ORDER}"
            )));
        }
        if self.time_budget.is_zero() || self.max_results == Some(0) {
            return Err(GyroError::Precondition(
                "search budgets must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Canonical forms, sorted, one per isomorphism class found.
    pub tables: Vec<GyroTable>,
    /// Tables that passed the axioms before deduplication.
    pub leaves: u64,
    /// Whether the search space was exhausted (no budget or result cap hit).
    pub complete: bool,
    pub timed_out: bool,
}

const UNSET: u8 = u8::MAX;

#[derive(Clone)]
struct State {
    n: usize,
    inv: Vec<usize>,
    cells: Vec<u8>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    /// Row representatives in fill order (one per `{a, ⊖a}` pair).
    order: Vec<usize>,
    trail: Vec<usize>,
}

impl State {
    fn new(n: usize, inv: Vec<usize>) -> Option<State> {
        let mut reps: Vec<usize> = (1..n).filter(|&a| inv[a] >= a).collect();
        reps.sort_unstable();
        let mut s = State {
            n,
            inv,
            cells: vec![UNSET; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            order: reps,
            trail: Vec::new(),
        };
        for b in 0..n {
            if !s.set(0, b, b) {
                return None;
            }
        }
        for a in 1..n {
            if !s.set(a, 0, a) {
                return None;
            }
        }
        for a in 1..n {
            let ia = s.inv[a];
            if !s.set(a, ia, 0) {
                return None;
            }
        }
        s.trail.clear();
        Some(s)
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.cells[a * self.n + b];
        (v != UNSET).then_some(v as usize)
    }

    /// Set one cell, respecting the Latin constraints. Records the cell on
    /// the trail. Returns false on conflict (nothing recorded).
    fn set(&mut self, a: usize, b: usize, c: usize) -> bool {
        match self.get(a, b) {
            Some(v) => v == c,
            None => {
                let bit = 1u64 << c;
                if self.row_used[a] & bit != 0 || self.col_used[b] & bit != 0 {
                    return false;
                }
                self.cells[a * self.n + b] = c as u8;
                self.row_used[a] |= bit;
                self.col_used[b] |= bit;
                self.trail.push(a * self.n + b);
                true
            }
        }
    }

    /// Set `a ⊕ b = c` together with its mirror `⊖a ⊕ c = b`.
    fn assign(&mut self, a: usize, b: usize, c: usize) -> bool {
        let mark = self.trail.len();
        if self.set(a, b, c) && self.set(self.inv[a], c, b) {
            true
        } else {
            self.undo(mark);
            false
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let k = self.trail.pop().unwrap();
            let c = self.cells[k] as usize;
            let (a, b) = (k / self.n, k % self.n);
            self.cells[k] = UNSET;
            self.row_used[a] &= !(1u64 << c);
            self.col_used[b] &= !(1u64 << c);
        }
    }

    fn row_complete(&self, a: usize) -> bool {
        self.row_used[a].count_ones() as usize == self.n
    }

    /// Check every gyration computable from the complete rows.
    fn gyrations_consistent(&self) -> bool {
        let n = self.n;
        let done: Vec<bool> = (0..n).map(|a| self.row_complete(a)).collect();
        let at = |a: usize, b: usize| self.cells[a * n + b] as usize;
        let gyr = |x: usize, y: usize| -> Option<Vec<usize>> {
            if !(done[x] && done[y]) {
                return None;
            }
            let xy = at(x, y);
            if !done[xy] {
                return None;
            }
            let w = self.inv[xy];
            Some((0..n).map(|c| at(w, at(x, at(y, c)))).collect())
        };
        for x in 1..n {
            for y in 1..n {
                let Some(g) = gyr(x, y) else { continue };
                if (0..n).any(|c| g[self.inv[c]] != self.inv[g[c]]) {
                    return false;
                }
                for u in 0..n {
                    if !done[u] || !done[g[u]] {
                        continue;
                    }
                    if (0..n).any(|v| g[at(u, v)] != at(g[u], g[v])) {
                        return false;
                    }
                }
                if let Some(g4) = gyr(at(x, y), y) {
                    if g4 != g {
                        return false;
                    }
                }
                if let Some(h) = gyr(y, x) {
                    if (0..n).any(|c| h[g[c]] != c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn first_open_row(&self) -> Option<usize> {
        self.order.iter().copied().find(|&r| !self.row_complete(r))
    }
}

/// Involutions of `1..n` (as full maps on `0..n` fixing 0) to try.
fn involutions(n: usize, symmetry_breaking: bool) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let m = n - 1;
    if symmetry_breaking {
        // One per cycle type: pairs (1,2), (3,4), … then fixed points.
        (0..=m / 2)
            .map(|pairs| {
                let mut inv: Vec<usize> = (0..n).collect();
                for k in 0..pairs {
                    let (a, b) = (2 * k + 1, 2 * k + 2);
                    inv[a] = b;
                    inv[b] = a;
                }
                inv
            })
            .collect()
    } else {
        let mut out = Vec::new();
        let mut inv: Vec<usize> = (0..n).collect();
        fn rec(
            i: usize,
            n: usize,
            inv: &mut Vec<usize>,
            done: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if i == n {
                out.push(inv.clone());
                return;
            }
            if done[i] {
                return rec(i + 1, n, inv, done, out);
            }
            done[i] = true;
            inv[i] = i;
            rec(i + 1, n, inv, done, out);
            for j in i + 1..n {
                if !done[j] {
                    done[j] = true;
                    inv[i] = j;
                    inv[j] = i;
                    rec(i + 1, n, inv, done, out);
                    inv[j] = j;
                    done[j] = false;
                }
            }
            inv[i] = i;
            done[i] = false;
        }
        let mut done = vec![false; n];
        done[0] = true;
        rec(1, n, &mut inv, &mut done, &mut out);
        out
    }
}

struct Ctx<'a> {
    deadline: Instant,
    stop: &'a AtomicBool,
    timed_out: &'a AtomicBool,
    first_nonassoc: bool,
    nodes: u64,
}

impl Ctx<'_> {
    fn should_stop(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && Instant::now() >= self.deadline {
            self.timed_out.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
        }
        self.stop.load(Ordering::Relaxed)
    }
}

/// Depth-first completion of `s`; calls `emit` on every verified leaf.
/// `emit` returns false to stop the search.
fn dfs(s: &mut State, ctx: &mut Ctx<'_>, emit: &mut dyn FnMut(GyroTable) -> bool) {
    if ctx.should_stop() {
        return;
    }
    let Some(r) = s.first_open_row() else {
        let cells = s.cells.iter().map(|&x| x as u32).collect();
        if let Ok(t) = GyroTable::from_cells(s.n, cells) {
            if ctx.first_nonassoc && t.gyrations_trivial() {
                return;
            }
            if !emit(t) {
                ctx.stop.store(true, Ordering::Relaxed);
            }
        }
        return;
    };
    let b = (0..s.n)
        .find(|&b| s.get(r, b).is_none())
        .expect("open row has a hole");
    let free = !s.row_used[r] & !s.col_used[b] & ((1u64 << s.n) - 1);
    for c in 0..s.n {
        if free >> c & 1 == 0 {
            continue;
        }
        let mark = s.trail.len();
        if !s.assign(r, b, c) {
            continue;
        }
        if !s.row_complete(r) || s.gyrations_consistent() {
            dfs(s, ctx, emit);
        }
        s.undo(mark);
        if ctx.stop.load(Ordering::Relaxed) {
            return;
        }
    }
}

/// Partial states with the first open row completed, as parallel work units.
fn seeds(n: usize, symmetry_breaking: bool) -> Vec<State> {
    let mut out = Vec::new();
    for inv in involutions(n, symmetry_breaking) {
        let Some(s) = State::new(n, inv) else {
            continue;
        };
        let Some(r) = s.first_open_row() else {
            out.push(s);
            continue;
        };
        fn fill(s: &mut State, r: usize, out: &mut Vec<State>) {
            let Some(b) = (0..s.n).find(|&b| s.get(r, b).is_none()) else {
                if s.gyrations_consistent() {
                    let mut done = s.clone();
                    done.trail.clear();
                    out.push(done);
                }
                return;
            };
            let free = !s.row_used[r] & !s.col_used[b] & ((1u64 << s.n) - 1);
            for c in 0..s.n {
                if free >> c & 1 == 0 {
                    continue;
                }
                let mark = s.trail.len();
                if !s.assign(r, b, c) {
                    continue;
                }
                fill(s, r, out);
                s.undo(mark);
            }
        }
        let mut s = s;
        fill(&mut s, r, &mut out);
    }
    out
}

/// Enumerate gyrogroups of `config.order`, calling `on_table` for each
/// verified table in search order (before deduplication). Returns whether
/// the search ran to completion and whether it timed out.
pub fn enumerate_with(
    config: &SearchConfig,
    mut on_table: impl FnMut(GyroTable) -> bool,
) -> Result<(bool, bool)> {
    config.validate()?;
    let stop = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let mut ctx = Ctx {
        deadline: Instant::now() + config.time_budget,
        stop: &stop,
        timed_out: &timed_out,
        first_nonassoc: config.mode == SearchMode::FirstNonassociative,
        nodes: 0,
    };
    for mut seed in seeds(config.order, config.symmetry_breaking) {
        dfs(&mut seed, &mut ctx, &mut on_table);
        if stop.load(Ordering::Relaxed) {
            break;
        }
    }
    let t = timed_out.load(Ordering::Relaxed);
    Ok((!stop.load(Ordering::Relaxed), t))
}

/// Run a search and deduplicate by canonical form.
///
/// Exhaustive searches without a result cap run their subtrees in parallel;
/// the output is sorted canonical tables either way.
// Table ordering reads only the cells, never the gyration cache.
#[allow(clippy::mutable_key_type)]
pub fn enumerate(config: &SearchConfig, canonical_cap: usize) -> Result<SearchOutcome> {
    config.validate()?;
    if config.order > canonical_cap {
        return Err(GyroError::CapExceeded {
            what: "canonical form order",
            cap: canonical_cap,
            reached: config.order,
        });
    }
    let parallel = config.mode == SearchMode::Exhaustive && config.max_results.is_none();
    if parallel {
        let stop = AtomicBool::new(false);
        let timed_out = AtomicBool::new(false);
        let deadline = Instant::now() + config.time_budget;
        let per_seed: Vec<(u64, BTreeSet<GyroTable>)> =
            seeds(config.order, config.symmetry_breaking)
                .into_par_iter()
                .map(|mut seed| {
                    let mut ctx = Ctx {
                        deadline,
                        stop: &stop,
                        timed_out: &timed_out,
                        first_nonassoc: false,
                        nodes: 0,
                    };
                    let mut leaves = 0u64;
                    let mut found = BTreeSet::new();
                    dfs(&mut seed, &mut ctx, &mut |t| {
                        leaves += 1;
                        found.insert(canonical_form_unchecked(&t));
                        true
                    });
                    (leaves, found)
                })
                .collect();
        let mut all = BTreeSet::new();
        let mut leaves = 0;
        for (l, f) in per_seed {
            leaves += l;
            all.extend(f);
        }
        let t = timed_out.load(Ordering::Relaxed);
        return Ok(SearchOutcome {
            tables: all.into_iter().collect(),
            leaves,
            complete: !t,
            timed_out: t,
        });
    }

    let mut found = BTreeSet::new();
    let mut leaves = 0u64;
    let cap = match config.mode {
        SearchMode::FirstNonassociative => Some(config.max_results.unwrap_or(1)),
        SearchMode::Exhaustive => config.max_results,
    };
    let (complete, timed_out) = enumerate_with(config, |t| {
        leaves += 1;
        found.insert(canonical_form_unchecked(&t));
        cap.is_none_or(|c| found.len() < c)
    })?;
    Ok(SearchOutcome {
        tables: found.into_iter().collect(),
        leaves,
        complete,
        timed_out,
    })
}

/// Order of `a` as the length of the cycle of `0` under `L_a`.
pub fn element_order(g: &GyroTable, a: Elem) -> usize {
    let mut k = 1;
    let mut x = a;
    while x != 0 {
        x = g.add(a, x);
        k += 1;
    }
    k
}

fn order_profile(g: &GyroTable) -> Vec<usize> {
    let mut v: Vec<usize> = g.elements().map(|a| element_order(g, a)).collect();
    v.sort_unstable();
    v
}

/// A small generating set, chosen greedily in element order.
fn generators(g: &GyroTable) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = generate(g, &[]).expect("empty seed");
    for a in g.elements() {
        if !span.contains(a) {
            gens.push(a);
            span = generate(g, &gens).expect("in range");
        }
    }
    gens
}

/// Extend a partial map defined on generators to a homomorphism by closing
/// under `⊕`; `None` on any conflict or if the result is not a bijection.
fn extend_to_iso(g: &GyroTable, h: &GyroTable, partial: &[Option<Elem>]) -> Option<Vec<Elem>> {
    let n = g.order();
    let mut map: Vec<Option<Elem>> = partial.to_vec();
    let mut used = vec![false; n];
    for v in map.iter().flatten() {
        if std::mem::replace(&mut used[*v], true) {
            return None;
        }
    }
    let mut known: Vec<Elem> = (0..n).filter(|&x| map[x].is_some()).collect();
    let mut i = 0;
    while i < known.len() {
        let a = known[i];
        for j in 0..=i {
            let b = known[j];
            for (x, y) in [(a, b), (b, a)] {
                let z = g.add(x, y);
                let target = h.add(map[x].unwrap(), map[y].unwrap());
                match map[z] {
                    Some(v) if v != target => return None,
                    Some(_) => {}
                    None => {
                        if std::mem::replace(&mut used[target], true) {
                            return None;
                        }
                        map[z] = Some(target);
                        known.push(z);
                    }
                }
            }
        }
        i += 1;
    }
    let map: Vec<Elem> = map.into_iter().collect::<Option<_>>()?;
    let ok = g.elements().all(|a| {
        g.elements()
            .all(|b| map[g.add(a, b)] == h.add(map[a], map[b]))
    });
    ok.then_some(map)
}

/// Enumerate isomorphisms `g → h` by assigning generator images; calls
/// `visit` for each and stops when it returns false.
fn isomorphisms(g: &GyroTable, h: &GyroTable, mut visit: impl FnMut(Vec<Elem>) -> bool) {
    if g.order() != h.order() {
        return;
    }
    let gens = generators(g);
    let g_orders: Vec<usize> = gens.iter().map(|&a| element_order(g, a)).collect();
    let h_orders: Vec<usize> = h.elements().map(|x| element_order(h, x)).collect();
    let mut partial: Vec<Option<Elem>> = vec![None; g.order()];
    partial[0] = Some(0);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        gens: &[Elem],
        g_orders: &[usize],
        h_orders: &[usize],
        g: &GyroTable,
        h: &GyroTable,
        partial: &mut Vec<Option<Elem>>,
        visit: &mut dyn FnMut(Vec<Elem>) -> bool,
    ) -> bool {
        if k == gens.len() {
            return match extend_to_iso(g, h, partial) {
                Some(m) => visit(m),
                None => true,
            };
        }
        for x in 1..h.order() {
            if h_orders[x] != g_orders[k] || partial.contains(&Some(x)) {
                continue;
            }
            partial[gens[k]] = Some(x);
            let go_on = rec(k + 1, gens, g_orders, h_orders, g, h, partial, visit);
            partial[gens[k]] = None;
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(
        0,
        &gens,
        &g_orders,
        &h_orders,
        g,
        h,
        &mut partial,
        &mut visit,
    );
}

/// An isomorphism `g → h` (bijection fixing 0 and preserving `⊕`), if any.
pub fn are_isomorphic(g: &GyroTable, h: &GyroTable) -> Option<Perm> {
    if g.order() != h.order() || order_profile(g) != order_profile(h) {
        return None;
    }
    let mut found = None;
    isomorphisms(g, h, |m| {
        found = Some(m);
        false
    });
    let map = found?;
    // Full re-verification of the witness.
    debug_assert!(crate::normality::check_hom(&map, g, h));
    Some(Perm::from_images(map).expect("isomorphism is a bijection"))
}

/// `Aut(G)`, sorted. Verified to be a group containing every `gyr[a,b]`.
pub fn automorphisms(g: &GyroTable, cap: usize) -> Result<Vec<Perm>> {
    let mut out = Vec::new();
    let mut over = false;
    isomorphisms(g, g, |m| {
        if out.len() >= cap {
            over = true;
            return false;
        }
        out.push(Perm::from_images(m).expect("bijection"));
        true
    });
    if over {
        return Err(GyroError::CapExceeded {
            what: "automorphism count",
            cap,
            reached: out.len(),
        });
    }
    out.sort_unstable();
    let has = |p: &Perm| out.binary_search(p).is_ok();
    let closed = out
        .iter()
        .all(|x| has(&x.inverse()) && out.iter().all(|y| has(&x.compose(y))));
    if !closed {
        return Err(GyroError::Inconsistent("automorphisms not closed".into()));
    }
    for a in g.elements() {
        for b in g.elements() {
            if !has(g.gyr(a, b)) {
                return Err(GyroError::Inconsistent(format!(
                    "gyr[{a},{b}] is not among the automorphisms"
                )));
            }
        }
    }
    Ok(out)
}

/// Lexicographically least table over all relabelings fixing 0.
pub fn canonical_form(g: &GyroTable, cap: usize) -> Result<GyroTable> {
    if g.order() > cap {
        return Err(GyroError::CapExceeded {
            what: "canonical form order",
            cap,
            reached: g.order(),
        });
    }
    Ok(canonical_form_unchecked(g))
}

fn canonical_form_unchecked(g: &GyroTable) -> GyroTable {
    let n = g.order();
    if n <= 2 {
        return g.clone();
    }
    // sigma maps old labels to new; relabeled cell (i, j) is
    // sigma(g[inv_sigma(i)][inv_sigma(j)]).
    let mut best: Vec<u32> = g.cells().to_vec();
    let mut inv_sigma: Vec<usize> = (0..n).collect();
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut cand = vec![0u32; n * n];

    // Heap's algorithm over positions 1..n.
    let m = n - 1;
    let mut c = vec![0usize; m];
    let mut consider = |inv_sigma: &[usize], sigma: &mut [usize], best: &mut Vec<u32>| {
        for (new, &old) in inv_sigma.iter().enumerate() {
            sigma[old] = new;
        }
        let mut less = false;
        for k in 0..n * n {
            let v = sigma[g.add(inv_sigma[k / n], inv_sigma[k % n])] as u32;
            if !less {
                match v.cmp(&best[k]) {
                    std::cmp::Ordering::Greater => return,
                    std::cmp::Ordering::Less => less = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            cand[k] = v;
        }
        if less {
            best.copy_from_slice(&cand);
        }
    };
    consider(&inv_sigma, &mut sigma, &mut best);
    let mut i = 0;
    while i < m {
        if c[i] < i {
            let swap_with = if i % 2 == 0 { 0 } else { c[i] };
            inv_sigma.swap(1 + swap_with, 1 + i);
            consider(&inv_sigma, &mut sigma, &mut best);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    GyroTable::from_cells(n, best).expect("relabeling preserves the axioms")
}
