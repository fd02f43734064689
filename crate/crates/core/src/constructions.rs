//! Builders for the lattice constructions.
//!
//! The recursive families stack translated lower-dimensional copies on the
//! planes `x_k = i` and join the copy centers with an axis-parallel spine:
//!
//! * `E_k(p)`: copies of `E_{k-1}(p-i)` for `1 <= |i| <= p-2`, single spine
//!   through the origin.
//! * `E'_k(p)`: copies of `E'_{k-1}(p-i)` for `2 <= |i| <= p-2`, `E'_{k-1}(p-1)`
//!   at `x_k = -1`, `E_{k-1}(p-1)` at `x_k = +1`, plus pendant vertices in the
//!   plane `x_k = 0` hung off the `x_k = 1` copy.
//! * `O_k(p)`, `O'_k(p)`: the same shapes on the odd lattice with a double
//!   spine through `(+-1/2, 0, ..., 0)`.
//! * `G_k(p)`: `2m+1` planes of `G_{k-1}(floor(p/4))`, wired through one
//!   free pair per plane in a zigzag.
//!
//! For `k >= 2` and `p < 3` the copy ranges are empty and the recursive
//! families fall back to the one-dimensional base path along axis 1.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::lattice::{CenteredGraph, Family, LatticeParity, MeshGraph, Point};

/// Two adjacent vertices, each of degree below 3, used to wire the planes of
/// the degree-3 construction. `v1 < v2` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreePair {
    pub v1: Point,
    pub v2: Point,
}

impl FreePair {
    pub fn new(a: Point, b: Point) -> Self {
        if a <= b {
            FreePair { v1: a, v2: b }
        } else {
            FreePair { v1: b, v2: a }
        }
    }

    fn lifted(&self, plane: i32) -> FreePair {
        FreePair {
            v1: self.v1.lifted(plane),
            v2: self.v2.lifted(plane),
        }
    }
}

/// Parameters shared by the builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildParams {
    pub k: usize,
    pub p: u32,
    pub parity: LatticeParity,
}

impl Family {
    /// Lattice a family lives on, or `None` when it is built on both.
    pub fn native_parity(self) -> Option<LatticeParity> {
        match self {
            Family::E | Family::EPrime | Family::G3 | Family::Edge => Some(LatticeParity::Even),
            Family::O | Family::OPrime => Some(LatticeParity::Odd),
            Family::Cycle | Family::Path => None,
        }
    }
}

/// Builds any family from shared parameters.
pub fn build(family: Family, params: BuildParams) -> Result<CenteredGraph> {
    if let Some(native) = family.native_parity() {
        if native != params.parity {
            return Err(Error::InvalidParameter(format!(
                "family {family} is only defined on the {native} lattice"
            )));
        }
    }
    let BuildParams { k, p, parity } = params;
    match family {
        Family::E => build_e(k, p),
        Family::EPrime => build_e_prime(k, p),
        Family::O => build_o(k, p),
        Family::OPrime => build_o_prime(k, p),
        Family::G3 => build_g3(k, p),
        Family::Edge => build_edge(k),
        Family::Cycle => build_cycle(k, p, parity),
        Family::Path => build_path(k, p, parity),
    }
}

/// Two vertices joined along axis 1.
pub fn build_edge(k: usize) -> Result<CenteredGraph> {
    check_dim(k)?;
    let origin = Point::origin(k);
    let mut other = origin.clone().into_coords();
    other[0] = 2;
    let mut patch = Patch::default();
    patch.insert_edge(origin, Point::new(other));
    finish(patch, LatticeParity::Even, k, 0, Family::Edge)
}

/// The one-dimensional base path on `[-p, p]` (even) or `[-p-1/2, p+1/2]`
/// (odd), embedded along axis 1.
pub fn build_path(k: usize, p: u32, parity: LatticeParity) -> Result<CenteredGraph> {
    check_dim(k)?;
    finish(base_path(parity, p).padded(k), parity, k, p, Family::Path)
}

/// Rectangle perimeter in the `(x_1, x_2)` plane: `4p` vertices (even) or
/// `4p + 2` vertices (odd).
pub fn build_cycle(k: usize, p: u32, parity: LatticeParity) -> Result<CenteredGraph> {
    check_dim(k)?;
    if k < 2 {
        return Err(Error::InvalidParameter(
            "a cycle needs k >= 2; the line has none".into(),
        ));
    }
    if p < 1 {
        return Err(Error::InvalidParameter("a cycle needs p >= 1".into()));
    }
    let p = p as i32;
    // Doubled first coordinates of the two long sides, and the span of x_2.
    let (sides, lo, hi) = match parity {
        LatticeParity::Even => ([0, 2], -(p - 1), p),
        LatticeParity::Odd => ([-1, 1], -p, p),
    };
    let at = |x1: i32, x2: i32| {
        let mut c = vec![0; k];
        c[0] = x1;
        c[1] = 2 * x2;
        Point::new(c)
    };
    let mut patch = Patch::default();
    for x1 in sides {
        for x2 in lo..hi {
            patch.insert_edge(at(x1, x2), at(x1, x2 + 1));
        }
    }
    patch.insert_edge(at(sides[0], lo), at(sides[1], lo));
    patch.insert_edge(at(sides[0], hi), at(sides[1], hi));
    finish(patch, parity, k, p as u32, Family::Cycle)
}

pub fn build_e(k: usize, p: u32) -> Result<CenteredGraph> {
    check_dim(k)?;
    let patch = Recursive::default().e(k, p);
    finish(unwrap_rc(patch), LatticeParity::Even, k, p, Family::E)
}

pub fn build_e_prime(k: usize, p: u32) -> Result<CenteredGraph> {
    check_dim(k)?;
    let patch = Recursive::default().e_prime(k, p);
    finish(unwrap_rc(patch), LatticeParity::Even, k, p, Family::EPrime)
}

pub fn build_o(k: usize, p: u32) -> Result<CenteredGraph> {
    check_dim(k)?;
    let patch = Recursive::default().o(k, p);
    finish(unwrap_rc(patch), LatticeParity::Odd, k, p, Family::O)
}

pub fn build_o_prime(k: usize, p: u32) -> Result<CenteredGraph> {
    check_dim(k)?;
    let patch = Recursive::default().o_prime(k, p);
    finish(unwrap_rc(patch), LatticeParity::Odd, k, p, Family::OPrime)
}

/// Smallest `p` accepted by [`build_g3`] in dimension `k`, i.e. `4^(k-1)`.
pub fn g3_min_p(k: usize) -> Option<u32> {
    4u32.checked_pow(k.checked_sub(1)? as u32)
}

/// The maximum-degree-3 construction `G_k(p)`.
pub fn build_g3(k: usize, p: u32) -> Result<CenteredGraph> {
    check_dim(k)?;
    match g3_min_p(k) {
        Some(min) if p >= min => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "G3 in dimension {k} requires p >= 4^{} = {}",
                k - 1,
                g3_min_p(k).map_or_else(|| "overflow".to_string(), |m| m.to_string())
            )))
        }
    }
    let (patch, _used) = g3_patch(k, p)?;
    finish(patch, LatticeParity::Even, k, p, Family::G3)
}

/// Lexicographically smallest edge whose endpoints both have degree at most 2
/// and which is not already in `used`.
pub fn find_free_pair(g: &MeshGraph, used: &BTreeSet<FreePair>) -> Result<FreePair> {
    g.edges()
        .iter()
        .filter(|&&(a, b)| g.degree(a) <= 2 && g.degree(b) <= 2)
        .map(|&(a, b)| FreePair::new(g.vertices()[a].clone(), g.vertices()[b].clone()))
        .find(|pair| !used.contains(pair))
        .ok_or(Error::NoFreePair)
}

fn g3_patch(k: usize, p: u32) -> Result<(Patch, BTreeSet<FreePair>)> {
    if k == 1 {
        return Ok((base_path(LatticeParity::Even, p), BTreeSet::new()));
    }
    let inner = p / 4;
    let m = (p.div_ceil(4) as i32) - 1;
    let (template, template_used) = g3_patch(k - 1, inner)?;
    let template_graph = template.clone().into_graph(LatticeParity::Even, k - 1)?;
    let pair = find_free_pair(&template_graph, &template_used)?;

    let mut patch = Patch::default();
    let mut used = BTreeSet::new();
    for i in -m..=m {
        patch.place(&template, i);
        used.extend(template_used.iter().map(|fp| fp.lifted(i)));
        used.insert(pair.lifted(i));
    }
    for i in (-m..=m).filter(|i| i.rem_euclid(2) == 0) {
        if i < m {
            patch.insert_edge(pair.v1.lifted(i), pair.v1.lifted(i + 1));
        }
        if i > -m {
            patch.insert_edge(pair.v2.lifted(i), pair.v2.lifted(i - 1));
        }
    }
    Ok((patch, used))
}

#[derive(Debug, Clone, Default)]
struct Patch {
    vertices: BTreeSet<Point>,
    edges: BTreeSet<(Point, Point)>,
}

impl Patch {
    fn insert_vertex(&mut self, p: Point) {
        self.vertices.insert(p);
    }

    fn insert_edge(&mut self, a: Point, b: Point) {
        self.vertices.insert(a.clone());
        self.vertices.insert(b.clone());
        self.edges.insert(if a <= b { (a, b) } else { (b, a) });
    }

    /// Copies a one-dimension-lower patch onto the plane `x_k = plane`.
    fn place(&mut self, layer: &Patch, plane: i32) {
        self.vertices
            .extend(layer.vertices.iter().map(|v| v.lifted(plane)));
        self.edges.extend(
            layer
                .edges
                .iter()
                .map(|(a, b)| (a.lifted(plane), b.lifted(plane))),
        );
    }

    fn padded(&self, k: usize) -> Patch {
        Patch {
            vertices: self.vertices.iter().map(|v| v.padded(k)).collect(),
            edges: self
                .edges
                .iter()
                .map(|(a, b)| (a.padded(k), b.padded(k)))
                .collect(),
        }
    }

    /// Chain `(x1, 0, ..., 0, j) -- (x1, 0, ..., 0, j+1)` for `-span <= j < span`
    /// (`x1` doubled).
    fn spine(&mut self, k: usize, x1: i32, span: i32) {
        let at = |j: i32| {
            let mut c = vec![0; k];
            c[0] = x1;
            c[k - 1] = 2 * j;
            Point::new(c)
        };
        self.insert_vertex(at(0));
        for j in -span..span {
            self.insert_edge(at(j), at(j + 1));
        }
    }

    fn into_graph(self, parity: LatticeParity, k: usize) -> Result<MeshGraph> {
        MeshGraph::new(parity, k, self.vertices, self.edges)
    }
}

fn base_path(parity: LatticeParity, p: u32) -> Patch {
    let p = p as i32;
    let coords: Vec<i32> = match parity {
        LatticeParity::Even => (-p..=p).map(|x| 2 * x).collect(),
        LatticeParity::Odd => (-p - 1..=p).map(|x| 2 * x + 1).collect(),
    };
    let mut patch = Patch::default();
    for c in &coords {
        patch.insert_vertex(Point::new(vec![*c]));
    }
    for w in coords.windows(2) {
        patch.insert_edge(Point::new(vec![w[0]]), Point::new(vec![w[1]]));
    }
    patch
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    E,
    EPrime,
    O,
    OPrime,
}

/// Memoised builder for the four stacked families; sub-patches recur many
/// times across planes and levels.
#[derive(Default)]
struct Recursive {
    cache: HashMap<(Kind, usize, u32), Rc<Patch>>,
}

impl Recursive {
    fn get(&mut self, kind: Kind, k: usize, p: u32) -> Rc<Patch> {
        if let Some(hit) = self.cache.get(&(kind, k, p)) {
            return Rc::clone(hit);
        }
        let built = Rc::new(self.make(kind, k, p));
        self.cache.insert((kind, k, p), Rc::clone(&built));
        built
    }

    fn e(&mut self, k: usize, p: u32) -> Rc<Patch> {
        self.get(Kind::E, k, p)
    }

    fn e_prime(&mut self, k: usize, p: u32) -> Rc<Patch> {
        self.get(Kind::EPrime, k, p)
    }

    fn o(&mut self, k: usize, p: u32) -> Rc<Patch> {
        self.get(Kind::O, k, p)
    }

    fn o_prime(&mut self, k: usize, p: u32) -> Rc<Patch> {
        self.get(Kind::OPrime, k, p)
    }

    fn make(&mut self, kind: Kind, k: usize, p: u32) -> Patch {
        let parity = match kind {
            Kind::E | Kind::EPrime => LatticeParity::Even,
            Kind::O | Kind::OPrime => LatticeParity::Odd,
        };
        if k == 1 || p < 3 {
            return base_path(parity, p).padded(k);
        }
        let span = p as i32 - 2;
        let mut patch = Patch::default();
        match kind {
            Kind::E | Kind::O => {
                for i in 1..=span {
                    let layer = self.get(kind, k - 1, p - i as u32);
                    patch.place(&layer, i);
                    patch.place(&layer, -i);
                }
            }
            Kind::EPrime | Kind::OPrime => {
                let plain = if kind == Kind::EPrime {
                    Kind::E
                } else {
                    Kind::O
                };
                for i in 2..=span {
                    let layer = self.get(kind, k - 1, p - i as u32);
                    patch.place(&layer, i);
                    patch.place(&layer, -i);
                }
                patch.place(&self.get(kind, k - 1, p - 1), -1);
                let upper = self.get(plain, k - 1, p - 1);
                patch.place(&upper, 1);
                self.hang_pendants(&mut patch, &upper, kind, p);
            }
        }
        match parity {
            LatticeParity::Even => patch.spine(k, 0, span),
            LatticeParity::Odd => {
                patch.spine(k, 1, span);
                patch.spine(k, -1, span);
            }
        }
        patch
    }

    /// Plane `x_k = 0` vertices of the primed families, each joined only to its
    /// neighbour in the `x_k = 1` copy.
    fn hang_pendants(&self, patch: &mut Patch, upper: &Patch, kind: Kind, p: u32) {
        let budget = 2 * (p as u64 - 2);
        for u in &upper.vertices {
            let c = u.coords();
            let last = c[c.len() - 1].unsigned_abs() as u64;
            let keep = match kind {
                // all coordinates nonzero, |u| <= p-2, |u_(k-1)| <= p-2
                Kind::EPrime => {
                    c.iter().all(|&x| x != 0) && u.doubled_norm() <= budget && last <= budget
                }
                // |u| <= p-2, |u_(k-1)| <= p-3/2, u_1 != +-1/2
                Kind::OPrime => c[0].abs() != 1 && u.doubled_norm() <= budget && last < budget + 2,
                Kind::E | Kind::O => false,
            };
            if keep {
                patch.insert_edge(u.lifted(0), u.lifted(1));
            }
        }
    }
}

fn unwrap_rc(patch: Rc<Patch>) -> Patch {
    Rc::try_unwrap(patch).unwrap_or_else(|shared| (*shared).clone())
}

fn check_dim(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("dimension k must be >= 1".into()));
    }
    Ok(())
}

fn finish(
    patch: Patch,
    parity: LatticeParity,
    k: usize,
    p: u32,
    family: Family,
) -> Result<CenteredGraph> {
    let centers = match parity {
        LatticeParity::Even => vec![Point::origin(k)],
        LatticeParity::Odd => vec![Point::odd_center(k, -1), Point::odd_center(k, 1)],
    };
    CenteredGraph::new(patch.into_graph(parity, k)?, centers, p, family)
}
