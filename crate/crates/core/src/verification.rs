//! Independent checks of the construction conditions and the ball sandwich
//! comparison tables.
//!
//! Checks read only the graph, its centers, `p` and the family tag; they never
//! consult how the graph was built.

use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::constructions::{self, find_free_pair};
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::formulas::{self, format_optional, format_rational, BallSpec};
use crate::lattice::{l1_distance, CenteredGraph, Family, Hops, LatticeParity, MeshGraph, Point};

pub const TABLE_CSV_HEADER: &str =
    "parity,k,delta,p,construction,ball_lower,ball_upper,two_term_value,residual_norm,status";

/// Concrete evidence for a failed condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Vertex(Point),
    Pair(Point, Point),
    Value(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Pair(a, b) => write!(f, "pair {a} {b}"),
            Witness::Value(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub name: &'static str,
    pub description: String,
    /// `None` when the condition holds.
    pub witness: Option<Witness>,
}

impl ConditionOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub family: Family,
    pub k: usize,
    pub p: u32,
    pub conditions: Vec<ConditionOutcome>,
    pub max_degree: usize,
    pub eccentricities: Vec<(Point, Hops)>,
    pub diameter: Hops,
    pub vertex_count: usize,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(ConditionOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionOutcome> {
        self.conditions.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family {} k={} p={}", self.family, self.k, self.p)?;
        writeln!(f, "vertices {}", self.vertex_count)?;
        writeln!(f, "max_degree {}", self.max_degree)?;
        writeln!(f, "diameter {}", self.diameter)?;
        for (c, e) in &self.eccentricities {
            writeln!(f, "eccentricity {c} {e}")?;
        }
        for c in &self.conditions {
            match &c.witness {
                None => writeln!(f, "PASS {}: {}", c.name, c.description)?,
                Some(w) => writeln!(f, "FAIL {}: {} (witness: {w})", c.name, c.description)?,
            }
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all conditions hold"
            } else {
                "conditions violated"
            }
        )
    }
}

/// Evaluates the conditions that the graph's family is meant to satisfy.
pub fn check_conditions(g: &CenteredGraph) -> Result<ConditionReport> {
    let graph = g.graph();
    let k = g.dim();
    let p = g.p();
    let pu = u64::from(p);
    let dia = graph.diameter();
    let mut conds = vec![mesh_edges(graph), connected(graph)];

    match g.family() {
        Family::E => {
            conds.push(degree_cap(graph, 4));
            conds.push(check(
                "zero_free_degree",
                "vertices with every coordinate nonzero have degree <= 2".into(),
                graph
                    .vertices()
                    .iter()
                    .enumerate()
                    .find(|(i, v)| v.coords().iter().all(|&c| c != 0) && graph.degree(*i) > 2)
                    .map(|(_, v)| Witness::Vertex(v.clone())),
            ));
            conds.push(center_degree(g, 2, false));
            conds.push(center_eccentricity(g, pu));
        }
        Family::EPrime => {
            conds.push(degree_cap(graph, 4));
            conds.push(center_degree(g, 2, p >= 1));
            conds.push(center_eccentricity(g, pu));
            conds.push(diameter_bound(graph, dia, 2 * pu));
        }
        Family::O | Family::OPrime => {
            conds.push(degree_cap(graph, 4));
            conds.push(center_degree(g, 2, p >= 1));
            conds.push(two_center_distances(g, pu));
            conds.push(diameter_bound(graph, dia, 2 * pu + 1));
        }
        Family::G3 => {
            conds.push(degree_cap(graph, 3));
            conds.push(diameter_bound(graph, dia, 2 * pu));
            conds.push(check(
                "free_pair",
                "some adjacent pair has both degrees below 3".into(),
                find_free_pair(graph, &Default::default())
                    .err()
                    .map(|_| Witness::Value("no adjacent pair with both degrees < 3".into())),
            ));
        }
        Family::Edge => {
            conds.push(degree_cap(graph, 1));
            conds.push(diameter_bound(graph, dia, 1));
            conds.push(vertex_count(graph, 2));
        }
        Family::Cycle => {
            conds.push(degree_cap(graph, 2));
            let (bound, count) = match g.parity() {
                LatticeParity::Even => (2 * pu, 4 * pu),
                LatticeParity::Odd => (2 * pu + 1, 4 * pu + 2),
            };
            conds.push(diameter_bound(graph, dia, bound));
            conds.push(vertex_count(graph, count));
        }
        Family::Path => {
            conds.push(degree_cap(graph, 2));
            let bound = match g.parity() {
                LatticeParity::Even => 2 * pu,
                LatticeParity::Odd => 2 * pu + 1,
            };
            conds.push(diameter_bound(graph, dia, bound));
        }
    }

    let eccentricities = g
        .centers()
        .iter()
        .map(|c| {
            (
                c.clone(),
                graph.eccentricity(c).expect("centers are vertices"),
            )
        })
        .collect();
    Ok(ConditionReport {
        family: g.family(),
        k,
        p,
        conditions: conds,
        max_degree: graph.max_degree(),
        eccentricities,
        diameter: dia,
        vertex_count: graph.vertex_count(),
    })
}

fn check(name: &'static str, description: String, witness: Option<Witness>) -> ConditionOutcome {
    ConditionOutcome {
        name,
        description,
        witness,
    }
}

fn mesh_edges(g: &MeshGraph) -> ConditionOutcome {
    let bad = g
        .edge_points()
        .find(|(a, b)| l1_distance(a, b).ok() != Some(2))
        .map(|(a, b)| Witness::Pair(a.clone(), b.clone()));
    check(
        "mesh_edges",
        "every edge joins points at l1 distance 1".into(),
        bad,
    )
}

fn connected(g: &MeshGraph) -> ConditionOutcome {
    let bad = if g.vertex_count() == 0 {
        None
    } else {
        let d = g.bfs_from_index(0);
        d.iter()
            .position(|&x| x == u32::MAX)
            .map(|i| Witness::Pair(g.vertices()[0].clone(), g.vertices()[i].clone()))
    };
    check("connected", "graph is connected".into(), bad)
}

fn degree_cap(g: &MeshGraph, cap: usize) -> ConditionOutcome {
    let bad = (0..g.vertex_count())
        .find(|&i| g.degree(i) > cap)
        .map(|i| Witness::Vertex(g.vertices()[i].clone()));
    check(
        "max_degree",
        format!("every vertex has degree <= {cap}"),
        bad,
    )
}

fn center_degree(g: &CenteredGraph, cap: usize, exact: bool) -> ConditionOutcome {
    let bad = g.centers().iter().find(|c| {
        let d = g.graph().degree_of(c).unwrap_or(usize::MAX);
        if exact {
            d != cap
        } else {
            d > cap
        }
    });
    let rel = if exact { "==" } else { "<=" };
    check(
        "center_degree",
        format!("each center has degree {rel} {cap}"),
        bad.map(|c| Witness::Vertex(c.clone())),
    )
}

fn center_eccentricity(g: &CenteredGraph, bound: u64) -> ConditionOutcome {
    let graph = g.graph();
    let center = &g.centers()[0];
    let dist = graph.bfs_distances(center).expect("center is a vertex");
    let bad = dist
        .iter()
        .find(|(_, d)| !matches!(d, Some(x) if u64::from(*x) <= bound))
        .map(|(v, _)| Witness::Pair(center.clone(), v.clone()));
    check(
        "center_eccentricity",
        format!("every vertex is within {bound} of the center"),
        bad,
    )
}

fn two_center_distances(g: &CenteredGraph, p: u64) -> ConditionOutcome {
    let graph = g.graph();
    let [a, b] = g.centers() else {
        return check(
            "two_centers",
            "graph has two centers".into(),
            Some(Witness::Value(format!("{} centers", g.centers().len()))),
        );
    };
    let da = graph.bfs_distances(a).expect("center is a vertex");
    let db = graph.bfs_distances(b).expect("center is a vertex");
    let bad = da.iter().find_map(|(v, x)| match (x, db[v]) {
        (Some(x), Some(y)) if u64::from((*x).min(y)) <= p && u64::from((*x).max(y)) <= p + 1 => {
            None
        }
        _ => Some(Witness::Vertex(v.clone())),
    });
    check(
        "two_center_distances",
        format!(
            "every vertex is within {p} of one center and {} of the other",
            p + 1
        ),
        bad,
    )
}

fn diameter_bound(g: &MeshGraph, dia: Hops, bound: u64) -> ConditionOutcome {
    let bad = (!dia.within(bound)).then(|| far_pair(g, bound));
    check("diameter", format!("diameter <= {bound}"), bad)
}

fn far_pair(g: &MeshGraph, bound: u64) -> Witness {
    for s in 0..g.vertex_count() {
        let d = g.bfs_from_index(s);
        if let Some(t) = d
            .iter()
            .position(|&x| x == u32::MAX || u64::from(x) > bound)
        {
            return Witness::Pair(g.vertices()[s].clone(), g.vertices()[t].clone());
        }
    }
    Witness::Value("diameter exceeds bound".into())
}

fn vertex_count(g: &MeshGraph, expected: u64) -> ConditionOutcome {
    let n = g.vertex_count() as u64;
    check(
        "vertex_count",
        format!("graph has {expected} vertices"),
        (n != expected).then(|| Witness::Value(format!("found {n} vertices"))),
    )
}

/// One line of a bound comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub parity: LatticeParity,
    pub k: usize,
    pub delta: u32,
    pub p: u32,
    pub family: Option<Family>,
    /// Size of the construction, or `None` when it could not be built.
    pub construction: Option<u64>,
    pub ball_lower: BigUint,
    pub ball_upper: BigUint,
    pub two_term_value: BigRational,
    pub residual_norm: Option<BigRational>,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowStatus {
    /// `ball_lower <= construction <= ball_upper`.
    Ok,
    BelowLower,
    AboveUpper,
    Error(String),
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowStatus::Ok => f.write_str("ok"),
            RowStatus::BelowLower => f.write_str("below_lower"),
            RowStatus::AboveUpper => f.write_str("above_upper"),
            RowStatus::Error(e) => write!(f, "error: {}", e.replace(',', ";")),
        }
    }
}

impl ComparisonRow {
    pub fn within_upper(&self) -> Option<bool> {
        self.construction
            .map(|c| BigUint::from(c) <= self.ball_upper)
    }

    pub fn meets_lower(&self) -> Option<bool> {
        self.construction
            .map(|c| BigUint::from(c) >= self.ball_lower)
    }
}

/// Construction used for a degree bound: edge, cycle (path when no cycle
/// fits), `G_k`, then the primed families for `delta >= 4`.
pub fn construction_for(
    parity: LatticeParity,
    k: usize,
    delta: u32,
    p: u32,
) -> Result<CenteredGraph> {
    match delta {
        0 => Err(Error::InvalidParameter("delta must be >= 1".into())),
        1 => constructions::build_edge(k),
        2 if k == 1 || p == 0 => constructions::build_path(k, p, parity),
        2 => constructions::build_cycle(k, p, parity),
        3 => match parity {
            LatticeParity::Even => constructions::build_g3(k, p),
            LatticeParity::Odd => Err(Error::InvalidParameter(
                "no odd-lattice construction for delta = 3".into(),
            )),
        },
        _ => match parity {
            LatticeParity::Even => constructions::build_e_prime(k, p),
            LatticeParity::Odd => constructions::build_o_prime(k, p),
        },
    }
}

fn check_delta(k: usize, delta: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("dimension k must be >= 1".into()));
    }
    if delta == 0 {
        return Err(Error::InvalidParameter("delta must be >= 1".into()));
    }
    let host = 2 * k as u32;
    if delta > host {
        return Err(Error::DegreeExceedsHost { delta, host });
    }
    Ok(())
}

/// Builds the matching construction and sets its size against the balls
/// `B_{floor(delta/2)}(p)` and `B_k(p)`.
pub fn compare_bounds(
    parity: LatticeParity,
    k: usize,
    delta: u32,
    p: u32,
) -> Result<ComparisonRow> {
    check_delta(k, delta)?;
    let g = construction_for(parity, k, delta, p)?;
    row_from(parity, k, delta, p, Ok(g))
}

fn row_from(
    parity: LatticeParity,
    k: usize,
    delta: u32,
    p: u32,
    built: Result<CenteredGraph>,
) -> Result<ComparisonRow> {
    let ball_lower = formulas::ball_count(BallSpec::new(parity, (delta / 2) as usize, p)?);
    let ball_upper = formulas::ball_count(BallSpec::new(parity, k, p)?);
    let two_term_value = formulas::two_term_value(parity, k, p)?;
    let (family, construction, residual_norm, status) = match built {
        Ok(g) => {
            let size = g.vertex_count() as u64;
            let big = BigUint::from(size);
            let status = if big < ball_lower {
                RowStatus::BelowLower
            } else if big > ball_upper {
                RowStatus::AboveUpper
            } else {
                RowStatus::Ok
            };
            let residual = formulas::residual_norm(&big, parity, k, p)?;
            (Some(g.family()), Some(size), residual, status)
        }
        Err(e) => (None, None, None, RowStatus::Error(e.to_string())),
    };
    Ok(ComparisonRow {
        parity,
        k,
        delta,
        p,
        family,
        construction,
        ball_lower,
        ball_upper,
        two_term_value,
        residual_norm,
        status,
    })
}

/// Rows for every `(k, p)` in the grid, in `k`-major order. Construction
/// failures become inline `error` rows; invalid `delta` aborts the sweep.
pub fn sweep_table(
    parity: LatticeParity,
    ks: RangeInclusive<usize>,
    delta: u32,
    ps: RangeInclusive<u32>,
    par: Parallelism,
) -> Result<Vec<ComparisonRow>> {
    if ks.is_empty() {
        return Err(Error::EmptyRange(format!(
            "k range {}..{}",
            ks.start(),
            ks.end()
        )));
    }
    if ps.is_empty() {
        return Err(Error::EmptyRange(format!(
            "p range {}..{}",
            ps.start(),
            ps.end()
        )));
    }
    for k in ks.clone() {
        check_delta(k, delta)?;
    }
    let grid: Vec<(usize, u32)> = ks.flat_map(|k| ps.clone().map(move |p| (k, p))).collect();
    par.map(&grid, |&(k, p)| {
        row_from(parity, k, delta, p, construction_for(parity, k, delta, p))
    })
    .into_iter()
    .collect()
}

fn row_cells(r: &ComparisonRow) -> [String; 10] {
    [
        r.parity.to_string(),
        r.k.to_string(),
        r.delta.to_string(),
        r.p.to_string(),
        r.construction.map(|c| c.to_string()).unwrap_or_default(),
        r.ball_lower.to_string(),
        r.ball_upper.to_string(),
        format_rational(&r.two_term_value),
        format_optional(&r.residual_norm),
        r.status.to_string(),
    ]
}

pub fn table_csv(rows: &[ComparisonRow]) -> String {
    let mut out = String::from(TABLE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&row_cells(r).join(","));
        out.push('\n');
    }
    out
}

/// Right-aligned columns under the CSV header names.
pub fn table_pretty(rows: &[ComparisonRow]) -> String {
    let header: Vec<String> = TABLE_CSV_HEADER.split(',').map(String::from).collect();
    let body: Vec<[String; 10]> = rows.iter().map(row_cells).collect();
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for cells in &body {
        for (w, c) in widths.iter_mut().zip(cells) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&header);
    for cells in &body {
        line(cells);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn e_and_g3_pass() {
        assert!(check_conditions(&build_e(2, 4).unwrap()).unwrap().passed());
        let r = check_conditions(&build_g3(2, 16).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.diameter.within(32));
    }

    #[test]
    fn every_family_passes_small() {
        for p in 0..7 {
            for k in 1..4 {
                let mut graphs = vec![
                    build_e(k, p),
                    build_e_prime(k, p),
                    build_o(k, p),
                    build_o_prime(k, p),
                    build_path(k, p, LatticeParity::Even),
                    build_path(k, p, LatticeParity::Odd),
                    build_edge(k),
                ];
                if k >= 2 && p >= 1 {
                    graphs.push(build_cycle(k, p, LatticeParity::Even));
                    graphs.push(build_cycle(k, p, LatticeParity::Odd));
                }
                for g in graphs {
                    let g = g.unwrap();
                    let r = check_conditions(&g).unwrap();
                    assert!(r.passed(), "{r}");
                }
            }
        }
    }

    #[test]
    fn degree_five_vertex_is_witnessed() {
        let c = Point::from_integers(&[0, 0, 0]);
        let mut vs = vec![c.clone()];
        let mut es = Vec::new();
        for d in [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1]] {
            let v = Point::from_integers(&d);
            vs.push(v.clone());
            es.push((c.clone(), v));
        }
        let graph = MeshGraph::new(LatticeParity::Even, 3, vs, es).unwrap();
        let g = CenteredGraph::new(graph, vec![c.clone()], 1, Family::EPrime).unwrap();
        let r = check_conditions(&g).unwrap();
        let bad: Vec<_> = r.failures().map(|f| f.name).collect();
        assert!(bad.contains(&"max_degree"));
        let w = &r
            .conditions
            .iter()
            .find(|f| f.name == "max_degree")
            .unwrap()
            .witness;
        assert_eq!(w, &Some(Witness::Vertex(c)));
    }

    #[test]
    fn disconnected_graph_fails_with_pair() {
        let a = Point::origin(2);
        let b = Point::from_integers(&[3, 0]);
        let graph =
            MeshGraph::new(LatticeParity::Even, 2, vec![a.clone(), b.clone()], vec![]).unwrap();
        let g = CenteredGraph::new(graph, vec![a.clone()], 3, Family::Path).unwrap();
        let r = check_conditions(&g).unwrap();
        assert!(!r.passed());
        assert_eq!(r.diameter, Hops::Infinite);
    }

    #[test]
    fn comparison_examples() {
        let r = compare_bounds(LatticeParity::Even, 2, 4, 4).unwrap();
        assert_eq!(r.construction, Some(29));
        assert_eq!(r.ball_lower, BigUint::from(41u32));
        assert_eq!(r.ball_upper, BigUint::from(41u32));
        assert_eq!(r.status, RowStatus::BelowLower);

        let r = compare_bounds(LatticeParity::Even, 2, 2, 3).unwrap();
        assert_eq!(r.construction, Some(12));
        assert_eq!(r.ball_lower, BigUint::from(7u32));
        assert_eq!(r.status, RowStatus::Ok);

        let r = compare_bounds(LatticeParity::Odd, 2, 4, 3).unwrap();
        assert_eq!(r.construction, Some(14));
        assert_eq!(
            r.ball_upper,
            formulas::ball_count(BallSpec::odd(2, 3).unwrap())
        );

        assert!(matches!(
            compare_bounds(LatticeParity::Even, 2, 5, 3),
            Err(Error::DegreeExceedsHost { .. })
        ));
    }

    #[test]
    fn sweeps() {
        let rows = sweep_table(
            LatticeParity::Even,
            2..=2,
            4,
            3..=5,
            Parallelism::Sequential,
        )
        .unwrap();
        let sizes: Vec<_> = rows.iter().map(|r| r.construction.unwrap()).collect();
        assert_eq!(sizes, vec![13, 29, 49]);

        let rows = sweep_table(
            LatticeParity::Even,
            2..=3,
            3,
            4..=4,
            Parallelism::Sequential,
        )
        .unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].construction, Some(3));
        assert!(matches!(rows[1].status, RowStatus::Error(_)));

        #[allow(clippy::reversed_empty_ranges)]
        let empty = sweep_table(
            LatticeParity::Even,
            2..=2,
            4,
            5..=3,
            Parallelism::Sequential,
        );
        assert!(matches!(empty, Err(Error::EmptyRange(_))));
    }

    #[test]
    fn csv_and_pretty_agree_on_shape() {
        let rows = sweep_table(LatticeParity::Odd, 2..=3, 4, 3..=4, Parallelism::Parallel).unwrap();
        let csv = table_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], TABLE_CSV_HEADER);
        assert_eq!(lines.len(), 5);
        assert!(lines[1..].iter().all(|l| l.split(',').count() == 10));
        assert_eq!(table_pretty(&rows).lines().count(), 5);
    }
}
