//! Mesh lattices `Z^k` and `(Z+1/2) x Z^(k-1)`, explicit subgraphs over them,
//! and hop-distance queries.
//!
//! Coordinates are stored doubled so both lattices are exact integer sets:
//! the even lattice has all entries even, the odd lattice has an odd first
//! entry and even remaining entries. Mesh neighbours sit at doubled
//! `l1` distance 2.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Parallelism;

const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeParity {
    /// Vertices in `Z^k`.
    Even,
    /// Vertices in `(Z+1/2) x Z^(k-1)`; axis 1 carries the half-integer.
    Odd,
}

impl LatticeParity {
    pub fn as_str(self) -> &'static str {
        match self {
            LatticeParity::Even => "even",
            LatticeParity::Odd => "odd",
        }
    }

    /// Classifies a doubled-coordinate tuple, or `None` when it lies on
    /// neither lattice.
    pub fn of_coords(coords: &[i32]) -> Option<Self> {
        let (first, rest) = coords.split_first()?;
        if rest.iter().any(|c| c % 2 != 0) {
            return None;
        }
        Some(if first % 2 == 0 {
            LatticeParity::Even
        } else {
            LatticeParity::Odd
        })
    }
}

impl fmt::Display for LatticeParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LatticeParity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(LatticeParity::Even),
            "odd" => Ok(LatticeParity::Odd),
            other => Err(Error::InvalidParameter(format!(
                "parity must be `even` or `odd`, got `{other}`"
            ))),
        }
    }
}

/// A lattice vertex in doubled coordinates (true coordinate x 2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<i32>);

impl Point {
    pub fn new(doubled: Vec<i32>) -> Self {
        Point(doubled)
    }

    /// Builds a point from true integer coordinates.
    pub fn from_integers(coords: &[i32]) -> Self {
        Point(coords.iter().map(|c| 2 * c).collect())
    }

    pub fn origin(k: usize) -> Self {
        Point(vec![0; k])
    }

    /// The center `(sign * 1/2, 0, ..., 0)` of the odd lattice.
    pub fn odd_center(k: usize, sign: i32) -> Self {
        let mut c = vec![0; k];
        c[0] = sign.signum();
        Point(c)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i32> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn parity(&self) -> Option<LatticeParity> {
        LatticeParity::of_coords(&self.0)
    }

    /// Doubled `l1` norm.
    pub fn doubled_norm(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs() as u64).sum()
    }

    /// Appends one more axis at true coordinate `plane`.
    pub fn lifted(&self, plane: i32) -> Point {
        let mut c = Vec::with_capacity(self.0.len() + 1);
        c.extend_from_slice(&self.0);
        c.push(2 * plane);
        Point(c)
    }

    /// Pads with zero coordinates up to dimension `k`.
    pub fn padded(&self, k: usize) -> Point {
        let mut c = self.0.clone();
        c.resize(k.max(c.len()), 0);
        Point(c)
    }

    fn doubled_distance_unchecked(&self, other: &Point) -> u64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (*a as i64 - *b as i64).unsigned_abs())
            .sum()
    }
}

impl fmt::Display for Point {
    /// Renders true coordinates, e.g. `(1/2,0,-1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c % 2 == 0 {
                write!(f, "{}", c / 2)?;
            } else {
                write!(f, "{c}/2")?;
            }
        }
        f.write_str(")")
    }
}

/// Doubled `l1` distance between two points of the same lattice.
pub fn l1_distance(a: &Point, b: &Point) -> Result<u64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let pa = a
        .parity()
        .ok_or_else(|| Error::OffLattice(a.0.clone(), LatticeParity::Even))?;
    let pb = b
        .parity()
        .ok_or_else(|| Error::OffLattice(b.0.clone(), LatticeParity::Even))?;
    if pa != pb {
        return Err(Error::ParityMismatch {
            left: pa,
            right: pb,
        });
    }
    Ok(a.doubled_distance_unchecked(b))
}

/// Hop count that may be infinite (disconnected graphs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hops {
    Finite(u32),
    Infinite,
}

impl Hops {
    pub fn finite(self) -> Option<u32> {
        match self {
            Hops::Finite(h) => Some(h),
            Hops::Infinite => None,
        }
    }

    pub fn within(self, bound: u64) -> bool {
        matches!(self, Hops::Finite(h) if h as u64 <= bound)
    }
}

impl fmt::Display for Hops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hops::Finite(h) => write!(f, "{h}"),
            Hops::Infinite => f.write_str("inf"),
        }
    }
}

/// Immutable finite subgraph of a mesh lattice.
///
/// Vertices are kept sorted lexicographically and edges as sorted index
/// pairs `(i, j)` with `i < j`, so iteration order is canonical.
#[derive(Debug, Clone)]
pub struct MeshGraph {
    parity: LatticeParity,
    k: usize,
    vertices: Vec<Point>,
    index: HashMap<Point, usize>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for MeshGraph {
    fn eq(&self, other: &Self) -> bool {
        self.parity == other.parity
            && self.k == other.k
            && self.vertices == other.vertices
            && self.edges == other.edges
    }
}

impl Eq for MeshGraph {}

impl MeshGraph {
    /// Validates and canonicalises an explicit vertex and edge set.
    pub fn new(
        parity: LatticeParity,
        k: usize,
        vertices: impl IntoIterator<Item = Point>,
        edges: impl IntoIterator<Item = (Point, Point)>,
    ) -> Result<Self> {
        let mut vertices: Vec<Point> = vertices.into_iter().collect();
        vertices.sort();
        let index = Self::index_vertices(parity, k, &vertices)?;
        let mut indexed = Vec::new();
        for (a, b) in edges {
            let ia = *index
                .get(&a)
                .ok_or_else(|| Error::NotAVertex(a.0.clone()))?;
            let ib = *index
                .get(&b)
                .ok_or_else(|| Error::NotAVertex(b.0.clone()))?;
            indexed.push((ia, ib));
        }
        Self::assemble(parity, k, vertices, index, indexed)
    }

    /// Builds from a vertex list and index pairs into it (any order).
    pub fn from_indexed(
        parity: LatticeParity,
        k: usize,
        vertices: Vec<Point>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        let len = vertices.len();
        for &(a, b) in edges {
            for index in [a, b] {
                if index >= len {
                    return Err(Error::IndexOutOfRange { index, len });
                }
            }
        }
        let pairs: Vec<(Point, Point)> = edges
            .iter()
            .map(|&(a, b)| (vertices[a].clone(), vertices[b].clone()))
            .collect();
        Self::new(parity, k, vertices, pairs)
    }

    fn index_vertices(
        parity: LatticeParity,
        k: usize,
        vertices: &[Point],
    ) -> Result<HashMap<Point, usize>> {
        if k == 0 {
            return Err(Error::InvalidParameter("dimension k must be >= 1".into()));
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if v.dim() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: v.dim(),
                });
            }
            if v.parity() != Some(parity) {
                return Err(Error::OffLattice(v.0.clone(), parity));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.0.clone()));
            }
        }
        Ok(index)
    }

    fn assemble(
        parity: LatticeParity,
        k: usize,
        vertices: Vec<Point>,
        index: HashMap<Point, usize>,
        indexed: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let mut seen = HashSet::with_capacity(indexed.len());
        let mut edges = Vec::with_capacity(indexed.len());
        for (a, b) in indexed {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            if vertices[lo].doubled_distance_unchecked(&vertices[hi]) != 2 {
                return Err(Error::InvalidEdge(
                    vertices[lo].0.clone(),
                    vertices[hi].0.clone(),
                ));
            }
            if !seen.insert((lo, hi)) {
                return Err(Error::DuplicateEdge(
                    vertices[lo].0.clone(),
                    vertices[hi].0.clone(),
                ));
            }
            edges.push((lo, hi));
        }
        edges.sort_unstable();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        Ok(MeshGraph {
            parity,
            k,
            vertices,
            index,
            edges,
            adjacency,
        })
    }

    pub fn parity(&self) -> LatticeParity {
        self.parity
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Sorted index pairs into [`MeshGraph::vertices`].
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_points(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| (&self.vertices[a], &self.vertices[b]))
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.index.contains_key(p)
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn degree_of(&self, p: &Point) -> Option<usize> {
        self.index_of(p).map(|i| self.degree(i))
    }

    pub fn has_edge(&self, a: &Point, b: &Point) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adjacency[i].contains(&j),
            _ => false,
        }
    }

    /// Maximum vertex degree; 0 for an empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn require(&self, p: &Point) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::NotAVertex(p.0.clone()))
    }

    /// Raw BFS over graph edges; unreachable vertices hold `u32::MAX`.
    pub(crate) fn bfs_from_index(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.vertices.len()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHED {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Hop counts from `src` to every vertex (`None` when unreachable).
    pub fn bfs_distances(&self, src: &Point) -> Result<BTreeMap<Point, Option<u32>>> {
        let s = self.require(src)?;
        let dist = self.bfs_from_index(s);
        Ok(self
            .vertices
            .iter()
            .cloned()
            .zip(dist.into_iter().map(|d| (d != UNREACHED).then_some(d)))
            .collect())
    }

    pub fn eccentricity(&self, v: &Point) -> Result<Hops> {
        let s = self.require(v)?;
        Ok(Self::ecc_of(&self.bfs_from_index(s)))
    }

    fn ecc_of(dist: &[u32]) -> Hops {
        match dist.iter().copied().max() {
            Some(UNREACHED) => Hops::Infinite,
            Some(d) => Hops::Finite(d),
            None => Hops::Finite(0),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || self.bfs_from_index(0).iter().all(|&d| d != UNREACHED)
    }

    /// Exact diameter via eccentricity bounding: each BFS tightens lower and
    /// upper eccentricity bounds on every vertex, and vertices whose upper
    /// bound cannot beat the best eccentricity seen so far are dropped.
    /// Usually needs a handful of BFS runs instead of one per vertex.
    pub fn diameter(&self) -> Hops {
        let n = self.vertices.len();
        if n == 0 {
            return Hops::Finite(0);
        }
        let first = self.bfs_from_index(0);
        if first.contains(&UNREACHED) {
            return Hops::Infinite;
        }
        let mut lower = vec![0u32; n];
        let mut upper = vec![u32::MAX; n];
        let mut active = vec![true; n];
        let mut best = 0u32;
        let mut take_high = true;
        let mut current = (0usize, first);
        loop {
            let (v, dist) = current;
            let ecc = dist.iter().copied().max().unwrap_or(0);
            best = best.max(ecc);
            active[v] = false;
            for w in 0..n {
                if !active[w] {
                    continue;
                }
                let d = dist[w];
                lower[w] = lower[w].max(d.max(ecc - d));
                upper[w] = upper[w].min(ecc + d);
                if lower[w] == upper[w] {
                    best = best.max(lower[w]);
                    active[w] = false;
                }
            }
            for w in 0..n {
                if active[w] && upper[w] <= best {
                    active[w] = false;
                }
            }
            let candidates = (0..n).filter(|&w| active[w]);
            let next = if take_high {
                candidates.max_by_key(|&w| (upper[w], std::cmp::Reverse(w)))
            } else {
                candidates.min_by_key(|&w| (lower[w], w))
            };
            take_high = !take_high;
            match next {
                Some(w) => current = (w, self.bfs_from_index(w)),
                None => return Hops::Finite(best),
            }
        }
    }

    /// Diameter by BFS from every vertex. Quadratic; serves as the reference
    /// for [`MeshGraph::diameter`].
    pub fn diameter_all_pairs(&self, par: Parallelism) -> Hops {
        let eccs = par.map_range(self.vertices.len(), |s| {
            Self::ecc_of(&self.bfs_from_index(s))
        });
        eccs.into_iter().max().unwrap_or(Hops::Finite(0))
    }
}

/// Construction family tag carried by a [`CenteredGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E,
    EPrime,
    O,
    OPrime,
    G3,
    Edge,
    Cycle,
    Path,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::E,
        Family::EPrime,
        Family::O,
        Family::OPrime,
        Family::G3,
        Family::Edge,
        Family::Cycle,
        Family::Path,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::E => "E",
            Family::EPrime => "EPrime",
            Family::O => "O",
            Family::OPrime => "OPrime",
            Family::G3 => "G3",
            Family::Edge => "Edge",
            Family::Cycle => "Cycle",
            Family::Path => "Path",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A mesh subgraph together with its designated center(s), radius parameter
/// and construction family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenteredGraph {
    graph: MeshGraph,
    centers: Vec<Point>,
    p: u32,
    family: Family,
}

impl CenteredGraph {
    /// Even-lattice graphs take the origin as sole center; odd-lattice graphs
    /// take both points `(+-1/2, 0, ..., 0)`.
    pub fn new(graph: MeshGraph, mut centers: Vec<Point>, p: u32, family: Family) -> Result<Self> {
        centers.sort();
        let k = graph.dim();
        let expected = match graph.parity() {
            LatticeParity::Even => vec![Point::origin(k)],
            LatticeParity::Odd => vec![Point::odd_center(k, -1), Point::odd_center(k, 1)],
        };
        if centers != expected {
            return Err(Error::InvalidCenters(format!(
                "{} lattice expects centers {}, got {}",
                graph.parity(),
                join_points(&expected),
                join_points(&centers)
            )));
        }
        if let Some(missing) = centers.iter().find(|c| !graph.contains(c)) {
            return Err(Error::InvalidCenters(format!(
                "center {missing} is not a vertex"
            )));
        }
        Ok(CenteredGraph {
            graph,
            centers,
            p,
            family,
        })
    }

    pub fn graph(&self) -> &MeshGraph {
        &self.graph
    }

    pub fn into_graph(self) -> MeshGraph {
        self.graph
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parity(&self) -> LatticeParity {
        self.graph.parity()
    }

    pub fn dim(&self) -> usize {
        self.graph.dim()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }
}

fn join_points(points: &[Point]) -> String {
    points
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i32]) -> Point {
        Point::new(c.to_vec())
    }

    fn path(xs: &[i32]) -> MeshGraph {
        let vs: Vec<Point> = xs.iter().map(|&x| Point::from_integers(&[x])).collect();
        let es = vs.windows(2).map(|w| (w[0].clone(), w[1].clone()));
        MeshGraph::new(LatticeParity::Even, 1, vs.clone(), es).unwrap()
    }

    #[test]
    fn l1_distance_cases() {
        let a = Point::from_integers(&[0, 0]);
        assert_eq!(l1_distance(&a, &a).unwrap(), 0);
        assert_eq!(l1_distance(&a, &Point::from_integers(&[1, 2])).unwrap(), 6);
        assert_eq!(l1_distance(&pt(&[1]), &pt(&[-3])).unwrap(), 4);
    }

    #[test]
    fn l1_distance_rejects_mismatch() {
        assert!(matches!(
            l1_distance(&pt(&[0, 0]), &pt(&[0])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            l1_distance(&pt(&[0, 0]), &pt(&[1, 0])),
            Err(Error::ParityMismatch { .. })
        ));
    }

    #[test]
    fn bfs_on_short_path() {
        let g = path(&[-1, 0, 1]);
        let d = g.bfs_distances(&Point::from_integers(&[0])).unwrap();
        assert_eq!(d[&Point::from_integers(&[-1])], Some(1));
        assert_eq!(d[&Point::from_integers(&[0])], Some(0));
        assert_eq!(d[&Point::from_integers(&[1])], Some(1));
    }

    #[test]
    fn isolated_vertex_is_unreachable() {
        let vs = [pt(&[0, 0]), pt(&[2, 0]), pt(&[6, 6])];
        let g = MeshGraph::new(
            LatticeParity::Even,
            2,
            vs.clone(),
            [(vs[0].clone(), vs[1].clone())],
        )
        .unwrap();
        let d = g.bfs_distances(&vs[0]).unwrap();
        assert_eq!(d[&vs[2]], None);
        assert_eq!(g.diameter(), Hops::Infinite);
        assert_eq!(g.eccentricity(&vs[0]).unwrap(), Hops::Infinite);
        assert!(!g.is_connected());
    }

    #[test]
    fn bfs_rejects_foreign_source() {
        let g = path(&[0, 1]);
        assert!(matches!(
            g.bfs_distances(&Point::from_integers(&[5])),
            Err(Error::NotAVertex(_))
        ));
    }

    #[test]
    fn single_vertex_graph() {
        let g = path(&[0]);
        assert_eq!(g.diameter(), Hops::Finite(0));
        assert_eq!(g.max_degree(), 0);
    }

    #[test]
    fn eight_cycle_has_diameter_four() {
        let cyc = [
            (0, 0),
            (1, 0),
            (1, 1),
            (1, 2),
            (1, 3),
            (0, 3),
            (0, 2),
            (0, 1),
        ];
        let vs: Vec<Point> = cyc
            .iter()
            .map(|&(x, y)| Point::from_integers(&[x, y]))
            .collect();
        let es: Vec<_> = (0..vs.len())
            .map(|i| (vs[i].clone(), vs[(i + 1) % vs.len()].clone()))
            .collect();
        let g = MeshGraph::new(LatticeParity::Even, 2, vs, es).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.diameter(), Hops::Finite(4));
        assert_eq!(
            g.diameter_all_pairs(Parallelism::Sequential),
            Hops::Finite(4)
        );
    }

    #[test]
    fn star_center_eccentricity() {
        let c = Point::from_integers(&[0, 0]);
        let leaves = [[1, 0], [-1, 0], [0, 1], [0, -1]].map(|l| Point::from_integers(&l));
        let mut vs = vec![c.clone()];
        vs.extend(leaves.iter().cloned());
        let g = MeshGraph::new(
            LatticeParity::Even,
            2,
            vs,
            leaves.iter().map(|l| (c.clone(), l.clone())),
        )
        .unwrap();
        assert_eq!(g.eccentricity(&c).unwrap(), Hops::Finite(1));
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.diameter(), Hops::Finite(2));
    }

    #[test]
    fn rejects_invalid_structure() {
        let a = Point::from_integers(&[0, 0]);
        let far = Point::from_integers(&[1, 1]);
        assert!(matches!(
            MeshGraph::new(
                LatticeParity::Even,
                2,
                [a.clone(), far.clone()],
                [(a.clone(), far)]
            ),
            Err(Error::InvalidEdge(..))
        ));
        assert!(matches!(
            MeshGraph::new(
                LatticeParity::Even,
                2,
                [a.clone()],
                [(a.clone(), a.clone())]
            ),
            Err(Error::InvalidEdge(..))
        ));
        let b = Point::from_integers(&[1, 0]);
        assert!(matches!(
            MeshGraph::new(
                LatticeParity::Even,
                2,
                [a.clone(), b.clone()],
                [(a.clone(), b.clone()), (b.clone(), a.clone())]
            ),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            MeshGraph::new(LatticeParity::Odd, 2, [a], []),
            Err(Error::OffLattice(..))
        ));
    }

    #[test]
    fn centered_graph_requires_canonical_centers() {
        let g = path(&[-1, 0, 1]);
        assert!(CenteredGraph::new(g.clone(), vec![Point::origin(1)], 1, Family::Path).is_ok());
        assert!(matches!(
            CenteredGraph::new(g, vec![Point::from_integers(&[1])], 1, Family::Path),
            Err(Error::InvalidCenters(_))
        ));
    }

    #[test]
    fn display_uses_true_coordinates() {
        assert_eq!(pt(&[1, 0]).to_string(), "(1/2,0)");
        assert_eq!(pt(&[-3, 4]).to_string(), "(-3/2,2)");
    }
}
