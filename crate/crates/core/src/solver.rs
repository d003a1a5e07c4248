//! Exact packing chromatic number.
//!
//! A packing coloring assigns every vertex a color `i >= 1` such that two
//! vertices sharing color `i` are at distance greater than `i`. The decision
//! search colors one vertex at a time and keeps, for every uncolored vertex,
//! a bit set of colors still available to it:
//!
//! * giving `v` color `c` removes `c` from every vertex within distance `c`
//!   of `v` (so any color `>= diam` is used at most once);
//! * the next vertex is the one with the fewest available colors, ties to the
//!   higher degree and then the lower id;
//! * colors are tried smallest first;
//! * twins (vertices `u`, `v` with `N(u) - v = N(v) - u`) are
//!   interchangeable, so colors along each twin class are forced to be
//!   non-decreasing in vertex id.
//!
//! Disconnected graphs are solved per component.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;
use crate::graph::Graph;
use crate::independence::{independence_number, independence_number_within};
use crate::metric::{all_pairs_distances, DistanceMatrix, INFINITE};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} entries for a graph on {expected} vertices")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {0} is uncolored")]
    Unassigned(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("solve exceeded its deadline")]
    TimedOut,
    #[error("brute force is limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
}

/// Vertex → color map; color 0 marks an unassigned vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PackingColoring {
    colors: Vec<Color>,
}

impl PackingColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        PackingColoring { colors }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.colors[v] = c;
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color used.
    pub fn palette_size(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0) as usize
    }

    /// Number of distinct colors used.
    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn class(&self, color: Color) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == color).collect()
    }

    fn check_total(&self, n: usize) -> Result<(), ColoringError> {
        if self.colors.len() != n {
            return Err(ColoringError::WrongLength {
                expected: n,
                found: self.colors.len(),
            });
        }
        match self.colors.iter().position(|&c| c == 0) {
            Some(v) => Err(ColoringError::Unassigned(v)),
            None => Ok(()),
        }
    }
}

/// Pairs `(u, v)`, `u < v`, that share a color `i` while `d(u, v) <= i`.
pub fn conflicts(dm: &DistanceMatrix, c: &PackingColoring) -> Vec<(usize, usize)> {
    let n = dm.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let cu = c.color(u);
            if cu == c.color(v) && dm.get(u, v) <= cu {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn is_valid_with(dm: &DistanceMatrix, c: &PackingColoring) -> Result<bool, ColoringError> {
    c.check_total(dm.n())?;
    let n = dm.n();
    for u in 0..n {
        let cu = c.color(u);
        for v in u + 1..n {
            if c.color(v) == cu && dm.get(u, v) <= cu {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_valid_packing_coloring(g: &Graph, c: &PackingColoring) -> Result<bool, ColoringError> {
    is_valid_with(&all_pairs_distances(g), c)
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Absolute cutoff shared by every solve using these options.
    pub deadline: Option<Instant>,
    /// Budget for each top-level solve, counted from its start.
    pub time_limit: Option<Duration>,
}

impl SolveOptions {
    pub fn with_time_limit(limit: Duration) -> Self {
        SolveOptions {
            deadline: None,
            time_limit: Some(limit),
        }
    }

    /// Options with the per-solve budget folded into the deadline.
    fn started(&self) -> SolveOptions {
        let from_limit = self.time_limit.map(|l| Instant::now() + l);
        let deadline = match (self.deadline, from_limit) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        SolveOptions {
            deadline,
            time_limit: None,
        }
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiRhoResult {
    pub value: usize,
    pub witness: PackingColoring,
    /// Search nodes over all decision calls.
    pub node_count: u64,
}

/// Precomputed data for searching one connected graph.
struct Instance {
    n: usize,
    stride: usize,
    /// Radius cap: balls of radius >= `rmax` contain every vertex.
    rmax: usize,
    /// `balls[((r - 1) * n + v) * stride ..]`: vertices w != v with d(v, w) <= r.
    balls: Vec<u64>,
    degree: Vec<usize>,
    /// (class id, position) for vertices in a nontrivial twin class.
    twin: Vec<Option<(usize, usize)>>,
    classes: Vec<Vec<usize>>,
}

impl Instance {
    fn new(g: &Graph, dm: &DistanceMatrix, max_color: usize, pinned: &[usize]) -> Self {
        let n = g.n();
        let stride = g.stride();
        let diam = dm.diameter();
        debug_assert!(diam != INFINITE, "instances are connected");
        let rmax = (diam as usize).min(max_color).max(1);
        let mut balls = vec![0u64; rmax * n * stride];
        for v in 0..n {
            for w in 0..n {
                let d = dm.get(v, w) as usize;
                if w == v || d > rmax {
                    continue;
                }
                for r in d..=rmax {
                    let base = ((r - 1) * n + v) * stride;
                    bits::set(&mut balls[base..base + stride], w);
                }
            }
        }

        let mut keyed: Vec<(bool, Vec<u64>, usize)> = Vec::new();
        for v in 0..n {
            if pinned.contains(&v) {
                continue;
            }
            let open = g.row(v).to_vec();
            let mut closed = open.clone();
            bits::set(&mut closed, v);
            keyed.push((false, open, v));
            keyed.push((true, closed, v));
        }
        keyed.sort();
        let mut twin = vec![None; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < keyed.len() {
            let mut j = i + 1;
            while j < keyed.len() && keyed[j].0 == keyed[i].0 && keyed[j].1 == keyed[i].1 {
                j += 1;
            }
            if j - i >= 2 {
                let members: Vec<usize> = keyed[i..j].iter().map(|k| k.2).collect();
                let id = classes.len();
                for (pos, &m) in members.iter().enumerate() {
                    twin[m] = Some((id, pos));
                }
                classes.push(members);
            }
            i = j;
        }

        Instance {
            n,
            stride,
            rmax,
            balls,
            degree: g.degrees(),
            twin,
            classes,
        }
    }

    #[inline]
    fn ball(&self, v: usize, color: usize) -> &[u64] {
        let r = color.min(self.rmax);
        let base = ((r - 1) * self.n + v) * self.stride;
        &self.balls[base..base + self.stride]
    }
}

struct Search<'a> {
    inst: &'a Instance,
    opts: &'a SolveOptions,
    /// Color words per vertex.
    dw: usize,
    colors: Vec<Color>,
    domains: Vec<u64>,
    trail: Vec<(usize, u64)>,
    nodes: u64,
    timed_out: bool,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance, k: usize, opts: &'a SolveOptions) -> Self {
        let dw = bits::words_for(k);
        let mut full = vec![0u64; dw];
        for c in 0..k {
            bits::set(&mut full, c);
        }
        let mut domains = Vec::with_capacity(inst.n * dw);
        for _ in 0..inst.n {
            domains.extend_from_slice(&full);
        }
        Search {
            inst,
            opts,
            dw,
            colors: vec![0; inst.n],
            domains,
            trail: Vec::new(),
            nodes: 0,
            timed_out: false,
        }
    }

    #[inline]
    fn domain(&self, v: usize) -> &[u64] {
        &self.domains[v * self.dw..(v + 1) * self.dw]
    }

    /// Removes `color` (1-based) from `w`; false if `w` has nothing left.
    #[inline]
    fn remove_color(&mut self, w: usize, color: usize) -> bool {
        let idx = w * self.dw + ((color - 1) >> 6);
        let mask = 1u64 << ((color - 1) & 63);
        let word = self.domains[idx];
        if word & mask != 0 {
            self.trail.push((idx, word));
            self.domains[idx] = word & !mask;
            return !bits::is_empty(self.domain(w));
        }
        true
    }

    /// Keeps only colors in `lo..=hi` for `w`.
    fn restrict(&mut self, w: usize, lo: usize, hi: usize) -> bool {
        for i in 0..self.dw {
            let idx = w * self.dw + i;
            let word = self.domains[idx];
            let mut keep = 0u64;
            for b in 0..64 {
                let c = i * 64 + b + 1;
                if c >= lo && c <= hi {
                    keep |= 1 << b;
                }
            }
            if word & !keep != 0 {
                self.trail.push((idx, word));
                self.domains[idx] = word & keep;
            }
        }
        !bits::is_empty(self.domain(w))
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (idx, word) = self.trail.pop().unwrap();
            self.domains[idx] = word;
        }
    }

    /// Colors `v` and propagates; false on a wipe-out. The caller undoes.
    fn assign(&mut self, v: usize, color: usize) -> bool {
        self.colors[v] = color as Color;
        let inst = self.inst;
        for w in bits::iter(inst.ball(v, color)) {
            if self.colors[w] == 0 && !self.remove_color(w, color) {
                return false;
            }
        }
        if let Some((class, pos)) = inst.twin[v] {
            for (p, &w) in inst.classes[class].iter().enumerate() {
                if self.colors[w] != 0 || p == pos {
                    continue;
                }
                let ok = if p > pos {
                    self.restrict(w, color, usize::MAX)
                } else {
                    self.restrict(w, 1, color)
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn select(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.inst.n {
            if self.colors[v] != 0 {
                continue;
            }
            let size = bits::count(self.domain(v));
            let key = (size, usize::MAX - self.inst.degree[v], v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }

    fn run(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 0xfff == 0 && self.opts.expired() {
            self.timed_out = true;
            return false;
        }
        let Some(v) = self.select() else {
            return true;
        };
        let choices: Vec<usize> = bits::iter(self.domain(v)).map(|b| b + 1).collect();
        for c in choices {
            let mark = self.trail.len();
            if self.assign(v, c) && self.run() {
                return true;
            }
            self.undo(mark);
            self.colors[v] = 0;
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

/// Decision search on a connected graph with pinned colors.
fn decide_connected(
    g: &Graph,
    dm: &DistanceMatrix,
    k: usize,
    pins: &[(usize, Color)],
    opts: &SolveOptions,
    nodes: &mut u64,
) -> Result<Option<PackingColoring>, SolveError> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(PackingColoring::new(Vec::new())));
    }
    if k == 0 || pins.iter().any(|&(_, c)| c == 0 || c as usize > k) {
        return Ok(None);
    }
    let pinned: Vec<usize> = pins.iter().map(|p| p.0).collect();
    let inst = Instance::new(g, dm, k, &pinned);
    let mut s = Search::new(&inst, k, opts);
    for &(v, c) in pins {
        if s.colors[v] != 0 {
            if s.colors[v] != c {
                return Ok(None);
            }
            continue;
        }
        if !bits::test(s.domain(v), c as usize - 1) || !s.assign(v, c as usize) {
            return Ok(None);
        }
    }
    let found = s.run();
    *nodes += s.nodes;
    if s.timed_out {
        return Err(SolveError::TimedOut);
    }
    Ok(found.then(|| PackingColoring::new(s.colors)))
}

/// Splits into components and runs `f` on each, stitching colorings.
fn per_component<F>(g: &Graph, pins: &[(usize, Color)], mut f: F) -> Result<Option<PackingColoring>, SolveError>
where
    F: FnMut(&Graph, &DistanceMatrix, &[(usize, Color)]) -> Result<Option<PackingColoring>, SolveError>,
{
    let mut colors = vec![0; g.n()];
    for comp in g.components() {
        let sub = g.induced(&comp);
        let dm = all_pairs_distances(&sub);
        let local_pins: Vec<(usize, Color)> = pins
            .iter()
            .filter_map(|&(v, c)| comp.binary_search(&v).ok().map(|i| (i, c)))
            .collect();
        match f(&sub, &dm, &local_pins)? {
            Some(c) => {
                for (i, &v) in comp.iter().enumerate() {
                    colors[v] = c.color(i);
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(PackingColoring::new(colors)))
}

/// A packing coloring with colors in `1..=k` that honours `pins`
/// (`(vertex, color)` pairs), if one exists.
pub fn decide_with_pins(
    g: &Graph,
    k: usize,
    pins: &[(usize, Color)],
    opts: &SolveOptions,
) -> Result<Option<PackingColoring>, SolveError> {
    let opts = &opts.started();
    let mut nodes = 0;
    per_component(g, pins, |sub, dm, p| decide_connected(sub, dm, k, p, opts, &mut nodes))
}

/// A packing coloring with colors in `1..=k`, if one exists.
pub fn decide_packing_k_colorable(g: &Graph, k: usize) -> Option<PackingColoring> {
    decide_with_pins(g, k, &[], &SolveOptions::default()).expect("no deadline set")
}

/// Lower bound from closed neighbourhoods: vertices of N[v] are pairwise at
/// distance at most 2, so apart from color 1 (an independent subset) each
/// color appears there at most once.
pub fn neighbourhood_lower_bound(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| {
            let nb = g.neighbor_set(v);
            let alpha = independence_number_within(g, &nb).alpha.max(1);
            nb.len() + 1 - alpha + 1
        })
        .max()
        .unwrap_or(0)
}

/// Largest order for which α is computed to seed the upper bound.
const ALPHA_SEED_LIMIT: usize = 24;

fn optimize_connected(
    g: &Graph,
    dm: &DistanceMatrix,
    opts: &SolveOptions,
    nodes: &mut u64,
) -> Result<PackingColoring, SolveError> {
    let n = g.n();
    if n <= 1 {
        return Ok(PackingColoring::new(vec![1; n]));
    }
    let lb = neighbourhood_lower_bound(g);
    let mut best = decide_connected(g, dm, n, &[], opts, nodes)?.expect("n colors always suffice");
    let mut k = best.palette_size() - 1;
    if n <= ALPHA_SEED_LIMIT {
        let seed = n - independence_number(g).alpha + 1;
        k = k.min(seed);
    }
    while k >= lb {
        match decide_connected(g, dm, k, &[], opts, nodes)? {
            Some(c) => {
                k = c.palette_size() - 1;
                best = c;
            }
            None => break,
        }
    }
    // a failed decision at k proves the optimum is above k
    let mut next = k + 1;
    while next < best.palette_size() {
        if let Some(c) = decide_connected(g, dm, next, &[], opts, nodes)? {
            best = c;
            break;
        }
        next += 1;
    }
    Ok(best)
}

pub fn packing_chromatic_number_with(g: &Graph, opts: &SolveOptions) -> Result<ChiRhoResult, SolveError> {
    let opts = &opts.started();
    let mut nodes = 0;
    let witness = per_component(g, &[], |sub, dm, _| {
        optimize_connected(sub, dm, opts, &mut nodes).map(Some)
    })?
    .expect("optimization always yields a coloring");
    Ok(ChiRhoResult {
        value: witness.palette_size(),
        witness,
        node_count: nodes,
    })
}

/// χρ(G) with an optimal witness. The empty graph has value 0.
pub fn packing_chromatic_number(g: &Graph) -> ChiRhoResult {
    packing_chromatic_number_with(g, &SolveOptions::default()).expect("no deadline set")
}

/// Vertex limit for [`brute_force_chi_rho`].
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// χρ by enumerating every assignment in `{1..k}^n` for k = 1, 2, ...
/// Distances come from Floyd–Warshall on the adjacency matrix.
pub fn brute_force_chi_rho(g: &Graph) -> Result<usize, SolveError> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    const FAR: u32 = 1 << 20;
    let mut d = vec![vec![FAR; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        for v in g.neighbors(u) {
            row[v] = 1;
        }
        row[u] = 0;
    }
    for m in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][m] + d[m][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    for k in 0..=n as u32 {
        if n == 0 {
            return Ok(0);
        }
        if k == 0 {
            continue;
        }
        let mut assignment = vec![1u32; n];
        loop {
            let valid = (0..n).all(|u| (u + 1..n).all(|v| assignment[u] != assignment[v] || d[u][v] > assignment[u]));
            if valid {
                return Ok(k as usize);
            }
            // odometer
            let mut i = 0;
            while i < n && assignment[i] == k {
                assignment[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            assignment[i] += 1;
        }
    }
    unreachable!("n colors always suffice")
}
