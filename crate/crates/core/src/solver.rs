//! Exact branch-and-bound search for the largest subgraph of the even mesh
//! with maximum degree at most `delta` and diameter at most `diameter`.
//!
//! Any feasible subgraph can be translated so its lexicographically smallest
//! vertex is the origin. Graph distance dominates l1 distance, and a graph
//! with `n` vertices has diameter below `n`, so every vertex then lies in the
//! half ball `{v >= 0 lexicographically, |v| <= r}` with
//! `r = min(diameter, moore - 1)`, where `moore` is the Moore bound
//! `1 + delta * sum_{i < diameter} (delta - 1)^i`.
//!
//! Connected vertex sets containing the origin are enumerated once each
//! (Redelmeier's scheme). A set is only examined when it could tie or beat the
//! best size so far. Its induced edges are tried first, since adding edges
//! never lengthens a path; when the induced graph breaks the degree cap, the
//! maximal edge subsets are searched in lexicographic order.
//!
//! Among optimal witnesses the one with the smallest sorted vertex list wins,
//! then the smallest edge list among maximal edge sets, so results do not
//! depend on scheduling.

use std::cmp::Ordering as CmpOrdering;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::formulas::{ball_count, ball_enumerate, BallSpec};
use crate::graph_io::GraphJson;
use crate::lattice::{LatticeParity, MeshGraph, Point};

pub const DEFAULT_REGION_CAP: usize = 45;
/// Candidate sets are `u128` masks.
pub const MAX_REGION_CAP: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SolveMode {
    #[default]
    Exact,
    /// Induced subgraphs only; a lower bound unless `delta >= 2k`.
    Induced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveRequest {
    pub k: usize,
    pub delta: u32,
    pub diameter: u32,
    #[serde(default)]
    pub mode: SolveMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_nodes: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_limit_ms: Option<u64>,
    #[serde(default = "default_region_cap")]
    pub region_cap: usize,
}

fn default_region_cap() -> usize {
    DEFAULT_REGION_CAP
}

impl SolveRequest {
    pub fn new(k: usize, delta: u32, diameter: u32) -> Self {
        SolveRequest {
            k,
            delta,
            diameter,
            mode: SolveMode::Exact,
            max_nodes: None,
            time_limit_ms: None,
            region_cap: DEFAULT_REGION_CAP,
        }
    }

    pub fn with_mode(mut self, mode: SolveMode) -> Self {
        self.mode = mode;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: MeshGraph,
    /// True iff the search space was exhausted within budget (and, in
    /// induced mode, induced optima are provably optimal).
    pub optimal: bool,
    pub nodes: u64,
    /// Degree bound actually used after clamping to `2k`.
    pub delta_used: u32,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct SolveResultJson<'a> {
    request: &'a SolveRequest,
    optimum: usize,
    optimal: bool,
    nodes: u64,
    delta_used: u32,
    notes: &'a [String],
    witness: GraphJson,
}

impl SolveResult {
    pub fn to_json(&self, req: &SolveRequest) -> String {
        let out = SolveResultJson {
            request: req,
            optimum: self.optimum,
            optimal: self.optimal,
            nodes: self.nodes,
            delta_used: self.delta_used,
            notes: &self.notes,
            witness: GraphJson::from_mesh(&self.witness),
        };
        let mut s = serde_json::to_string(&out).expect("solve result is serializable");
        s.push('\n');
        s
    }
}

/// `1 + delta * sum_{i < d} (delta - 1)^i`, saturating.
pub fn moore_bound(delta: u32, d: u32) -> u64 {
    let delta = u64::from(delta);
    let mut sum: u64 = 0;
    let mut term: u64 = 1;
    for _ in 0..d {
        sum = sum.saturating_add(term);
        term = term.saturating_mul(delta.saturating_sub(1));
    }
    delta.saturating_mul(sum).saturating_add(1)
}

pub fn solve_exact(req: &SolveRequest) -> Result<SolveResult> {
    solve_with(req, Parallelism::default())
}

pub fn solve_with(req: &SolveRequest, par: Parallelism) -> Result<SolveResult> {
    if req.k == 0 {
        return Err(Error::InvalidParameter("dimension k must be >= 1".into()));
    }
    if req.delta == 0 {
        return Err(Error::InvalidParameter("delta must be >= 1".into()));
    }
    if req.region_cap > MAX_REGION_CAP {
        return Err(Error::InvalidParameter(format!(
            "region cap {} exceeds the supported maximum {MAX_REGION_CAP}",
            req.region_cap
        )));
    }
    let mut notes = Vec::new();
    let host = 2 * req.k as u32;
    let delta = if req.delta > host {
        notes.push(format!(
            "delta {} clamped to the host degree 2k = {host}",
            req.delta
        ));
        host
    } else {
        req.delta
    };
    let moore = moore_bound(delta, req.diameter);
    let radius = u64::from(req.diameter).min(moore - 1) as u32;
    let region = Region::new(req.k, radius, req.diameter, req.region_cap)?;

    let search = Search {
        region: &region,
        delta: delta as usize,
        diameter: req.diameter,
        mode: req.mode,
        moore: moore.min(region.len() as u64) as usize,
        best: AtomicUsize::new(1),
        nodes: AtomicU64::new(0),
        max_nodes: req.max_nodes.unwrap_or(u64::MAX),
        deadline: req
            .time_limit_ms
            .map(|ms| Instant::now() + Duration::from_millis(ms)),
        stopped: AtomicBool::new(false),
    };
    let origin = Frame::root(&region);
    // the lone origin is always feasible
    let mut best = Found {
        set: 1,
        edges: Vec::new(),
    };

    if par.is_parallel() {
        let mut tasks = Vec::new();
        let mut top = None;
        search.explore(origin, 0, Some(SPLIT_DEPTH), &mut tasks, &mut top, true);
        let finds = par.map(&tasks, |f| {
            let mut local = None;
            search.explore(
                f.clone(),
                SPLIT_DEPTH,
                None,
                &mut Vec::new(),
                &mut local,
                false,
            );
            local
        });
        for f in top.into_iter().chain(finds.into_iter().flatten()) {
            best = better(best, f);
        }
    } else {
        let mut local = None;
        search.explore(origin, 0, None, &mut Vec::new(), &mut local, true);
        if let Some(f) = local {
            best = better(best, f);
        }
    }

    let exhausted = !search.stopped.load(Ordering::Relaxed);
    if !exhausted {
        notes.push("search budget exhausted; result is a lower bound".into());
    }
    let optimal = match req.mode {
        SolveMode::Exact => exhausted,
        SolveMode::Induced => {
            let exact = delta >= host;
            if !exact {
                notes.push("induced mode with delta < 2k gives a lower bound only".into());
            }
            exhausted && exact
        }
    };
    let witness = region.witness(best.set, &best.edges)?;
    Ok(SolveResult {
        optimum: witness.vertex_count(),
        witness,
        optimal,
        nodes: search.nodes.load(Ordering::Relaxed),
        delta_used: delta,
        notes,
    })
}

/// Recomputes every claim of `res` from the witness alone.
pub fn verify_witness(res: &SolveResult, req: &SolveRequest) -> bool {
    let w = &res.witness;
    w.dim() == req.k
        && w.parity() == LatticeParity::Even
        && res.optimum == w.vertex_count()
        && w.vertex_count() >= 1
        && w.max_degree() <= req.delta as usize
        && w.is_connected()
        && w.diameter().within(u64::from(req.diameter))
        && w.edge_points()
            .all(|(a, b)| crate::lattice::l1_distance(a, b).ok() == Some(2))
}

const SPLIT_DEPTH: usize = 2;

struct Region {
    k: usize,
    points: Vec<Point>,
    /// Host mesh neighbours inside the region.
    nbr: Vec<u128>,
    /// Region points within l1 distance `diameter`.
    near: Vec<u128>,
    full: u128,
}

impl Region {
    fn new(k: usize, radius: u32, diameter: u32, cap: usize) -> Result<Region> {
        let ball = ball_count(BallSpec::even(k, radius)?);
        // the ball is symmetric about the origin, so the half holds (n + 1) / 2
        let half: num_bigint::BigUint = (ball + 1u32) / 2u32;
        let size = usize::try_from(&half).unwrap_or(usize::MAX);
        if size > cap {
            return Err(Error::RegionTooLarge { size, cap });
        }
        let origin = Point::origin(k);
        let points: Vec<Point> = ball_enumerate(BallSpec::even(k, radius)?)?
            .into_iter()
            .filter(|p| *p >= origin)
            .collect();
        debug_assert_eq!(points[0], origin);
        let n = points.len();
        let dist = |a: &Point, b: &Point| crate::lattice::l1_distance(a, b).expect("same lattice");
        let mut nbr = vec![0u128; n];
        let mut near = vec![0u128; n];
        for i in 0..n {
            for j in 0..n {
                let d = dist(&points[i], &points[j]);
                if d == 2 {
                    nbr[i] |= 1 << j;
                }
                if d <= 2 * u64::from(diameter) {
                    near[i] |= 1 << j;
                }
            }
        }
        let full = if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        };
        Ok(Region {
            k,
            points,
            nbr,
            near,
            full,
        })
    }

    fn len(&self) -> usize {
        self.points.len()
    }

    fn witness(&self, set: u128, edges: &[(usize, usize)]) -> Result<MeshGraph> {
        let vertices = bits(set).map(|i| self.points[i].clone());
        let edges = edges
            .iter()
            .map(|&(a, b)| (self.points[a].clone(), self.points[b].clone()));
        MeshGraph::new(LatticeParity::Even, self.k, vertices, edges)
    }
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

#[derive(Clone)]
struct Frame {
    set: u128,
    untried: u128,
    seen: u128,
    compat: u128,
}

impl Frame {
    fn root(r: &Region) -> Frame {
        Frame {
            set: 1,
            untried: r.nbr[0],
            seen: r.nbr[0] | 1,
            compat: r.near[0],
        }
    }
}

#[derive(Debug, Clone)]
struct Found {
    set: u128,
    /// Sorted region-index pairs `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
}

/// Compares sets by size (larger first), then sorted index list.
fn set_order(a: u128, b: u128) -> CmpOrdering {
    b.count_ones()
        .cmp(&a.count_ones())
        .then_with(|| bits(a).cmp(bits(b)))
}

fn better(a: Found, b: Found) -> Found {
    match set_order(a.set, b.set).then_with(|| a.edges.cmp(&b.edges)) {
        CmpOrdering::Greater => b,
        _ => a,
    }
}

struct Search<'a> {
    region: &'a Region,
    delta: usize,
    diameter: u32,
    mode: SolveMode,
    moore: usize,
    best: AtomicUsize,
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    stopped: AtomicBool,
}

impl Search<'_> {
    fn tick(&self) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return true;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let out_of_time =
            n.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        if n > self.max_nodes || out_of_time {
            self.stopped.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    /// Depth-first over connected supersets of `f.set`. At `split` depth the
    /// frame is handed out as a task instead of being expanded.
    fn explore(
        &self,
        f: Frame,
        depth: usize,
        split: Option<usize>,
        tasks: &mut Vec<Frame>,
        local: &mut Option<Found>,
        evaluate_here: bool,
    ) {
        if self.tick() {
            return;
        }
        let size = f.set.count_ones() as usize;
        if evaluate_here && size >= self.best.load(Ordering::Relaxed) {
            self.evaluate(f.set, local);
        }
        if size >= self.moore {
            return;
        }
        if split == Some(depth) {
            tasks.push(f);
            return;
        }
        let full = self.region.full;
        let mut untried = f.untried & f.compat;
        while untried != 0 {
            let reachable = f.compat & !f.set & (untried | (full & !f.seen));
            let bound = (size + reachable.count_ones() as usize).min(self.moore);
            if bound < self.best.load(Ordering::Relaxed) {
                break;
            }
            let v = untried.trailing_zeros() as usize;
            untried &= untried - 1;
            let fresh = self.region.nbr[v] & !f.seen;
            let child = Frame {
                set: f.set | 1 << v,
                untried: untried | fresh,
                seen: f.seen | fresh,
                compat: f.compat & self.region.near[v],
            };
            self.explore(child, depth + 1, split, tasks, local, true);
        }
    }

    fn evaluate(&self, set: u128, local: &mut Option<Found>) {
        let adj: Vec<u128> = (0..self.region.len())
            .map(|i| {
                if set >> i & 1 == 1 {
                    self.region.nbr[i] & set
                } else {
                    0
                }
            })
            .collect();
        if !self.diameter_ok(set, &adj) {
            return;
        }
        let degree_ok = bits(set).all(|i| adj[i].count_ones() as usize <= self.delta);
        let edges = if degree_ok {
            Some(edge_list(set, &adj))
        } else if self.mode == SolveMode::Exact {
            self.best_edge_subset(set, &adj)
        } else {
            None
        };
        if let Some(edges) = edges {
            self.best
                .fetch_max(set.count_ones() as usize, Ordering::Relaxed);
            let found = Found { set, edges };
            *local = Some(match local.take() {
                Some(prev) => better(prev, found),
                None => found,
            });
        }
    }

    /// Every vertex reaches the whole set within `diameter` hops.
    fn diameter_ok(&self, set: u128, adj: &[u128]) -> bool {
        bits(set).all(|s| {
            let mut reach: u128 = 1 << s;
            let mut frontier = reach;
            for _ in 0..self.diameter {
                if reach == set {
                    break;
                }
                let mut next = 0;
                for i in bits(frontier) {
                    next |= adj[i];
                }
                frontier = next & !reach;
                reach |= next;
            }
            reach == set
        })
    }

    /// Lexicographically first maximal edge subset meeting the degree and
    /// diameter bounds, searched include-first over the induced edges.
    fn best_edge_subset(&self, set: u128, induced: &[u128]) -> Option<Vec<(usize, usize)>> {
        let all = edge_list(set, induced);
        let n = self.region.len();
        let mut st = EdgeSearch {
            all: &all,
            chosen: Vec::new(),
            adj: vec![0; n],
            optimistic: induced.to_vec(),
            deg: vec![0; n],
        };
        if self.edge_dfs(set, 0, &mut st) {
            Some(st.chosen.iter().map(|&e| all[e]).collect())
        } else {
            None
        }
    }

    fn edge_dfs(&self, set: u128, idx: usize, st: &mut EdgeSearch<'_>) -> bool {
        if self.tick() {
            return false;
        }
        if idx == st.all.len() {
            let maximal = st.all.iter().enumerate().all(|(e, &(a, b))| {
                st.chosen.contains(&e) || st.deg[a] >= self.delta || st.deg[b] >= self.delta
            });
            return maximal && self.diameter_ok(set, &st.adj);
        }
        let (a, b) = st.all[idx];
        if st.deg[a] < self.delta && st.deg[b] < self.delta {
            st.chosen.push(idx);
            st.adj[a] |= 1 << b;
            st.adj[b] |= 1 << a;
            st.deg[a] += 1;
            st.deg[b] += 1;
            if self.edge_dfs(set, idx + 1, st) {
                return true;
            }
            st.chosen.pop();
            st.adj[a] &= !(1 << b);
            st.adj[b] &= !(1 << a);
            st.deg[a] -= 1;
            st.deg[b] -= 1;
        }
        // excluding the edge: the remaining optimistic graph must still fit
        st.optimistic[a] &= !(1 << b);
        st.optimistic[b] &= !(1 << a);
        let ok = self.diameter_ok(set, &st.optimistic) && self.edge_dfs(set, idx + 1, st);
        st.optimistic[a] |= 1 << b;
        st.optimistic[b] |= 1 << a;
        ok
    }
}

struct EdgeSearch<'a> {
    all: &'a [(usize, usize)],
    chosen: Vec<usize>,
    adj: Vec<u128>,
    /// Chosen edges plus every edge not yet decided.
    optimistic: Vec<u128>,
    deg: Vec<usize>,
}

fn edge_list(set: u128, adj: &[u128]) -> Vec<(usize, usize)> {
    bits(set)
        .flat_map(|i| bits(adj[i] & !((1u128 << i) | ((1u128 << i) - 1))).map(move |j| (i, j)))
        .collect()
}
