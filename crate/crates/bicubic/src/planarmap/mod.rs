//! Rooted bicubic planar maps as rotation systems on darts.
//!
//! Darts are dense indices `0..2m`. The edge involution is fixed to
//! `alpha(d) = d ^ 1`, so edge `e` owns darts `2e` and `2e + 1`. `sigma`
//! lists the darts around each vertex in counterclockwise order and faces
//! are the orbits of `phi = sigma ∘ alpha`; the orbit of `d` is the face on
//! the right of `d`. The black/white coloring is never stored: it is derived
//! so that the root vertex is dark.

mod connectivity;
mod drawing;
mod text;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use drawing::PlaneDrawing;
pub use text::{parse_map, write_map, ParseError};

/// Dart (half-edge) index.
pub type Dart = usize;
/// Edge index; edge `e` consists of darts `2e` and `2e + 1`.
pub type Edge = usize;

/// Structural errors when assembling a rotation system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("a map needs a positive even number of darts, got {0}")]
    DartCount(usize),
    #[error("dart {dart} is out of range for {darts} darts")]
    DartOutOfRange { dart: Dart, darts: usize },
    #[error("rotation is not a permutation: dart {0} is hit twice")]
    NotPermutation(Dart),
    #[error("edge pairing is not a fixed-point-free involution at dart {0}")]
    BadInvolution(Dart),
}

/// Orbits of a permutation: the cycles plus the cycle index of every dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    /// Each cycle starts at its smallest dart; cycles are ordered by that dart.
    pub cycles: Vec<Vec<Dart>>,
    /// `index[d]` is the cycle containing `d`.
    pub index: Vec<usize>,
}

impl Orbits {
    fn of(n: usize, step: impl Fn(Dart) -> Dart) -> Self {
        let mut index = vec![usize::MAX; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if index[start] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut cycle = Vec::new();
            let mut d = start;
            while index[d] == usize::MAX {
                index[d] = id;
                cycle.push(d);
                d = step(d);
            }
            cycles.push(cycle);
        }
        Orbits { cycles, index }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Per-invariant outcome of [`RootedMap::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub involution: bool,
    pub connected: bool,
    pub genus_zero: bool,
    pub cubic: bool,
    pub bipartite: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures().is_empty()
    }

    /// Names of the failed checks, in a fixed order.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("involution", self.involution),
            ("connected", self.connected),
            ("genus", self.genus_zero),
            ("degree", self.cubic),
            ("bipartite", self.bipartite),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
        writeln!(f, "vertices {} edges {} faces {}", self.vertices, self.edges, self.faces)?;
        writeln!(f, "involution {}", mark(self.involution))?;
        writeln!(f, "connected {}", mark(self.connected))?;
        writeln!(
            f,
            "genus {} (V-E+F = {})",
            mark(self.genus_zero),
            self.vertices as i64 - self.edges as i64 + self.faces as i64
        )?;
        writeln!(f, "degree {}", mark(self.cubic))?;
        write!(f, "bipartite {}", mark(self.bipartite))
    }
}

/// A rooted map given by its vertex rotation and a root dart.
///
/// Construction only checks that the data forms a rotation system; use
/// [`RootedMap::validate`] for the bicubic planar invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedMap {
    sigma: Vec<Dart>,
    root: Dart,
}

impl RootedMap {
    /// Builds a map from its rotation (`alpha(d) = d ^ 1` implied).
    pub fn new(sigma: Vec<Dart>, root: Dart) -> Result<Self, MapError> {
        let n = sigma.len();
        if n == 0 || n % 2 == 1 {
            return Err(MapError::DartCount(n));
        }
        check_permutation(&sigma)?;
        if root >= n {
            return Err(MapError::DartOutOfRange { dart: root, darts: n });
        }
        Ok(RootedMap { sigma, root })
    }

    /// Builds a map from an arbitrary rotation system `(sigma, alpha)`,
    /// renumbering darts so that `alpha` becomes `d ^ 1`.
    ///
    /// Returns the map and the old-to-new dart renumbering.
    pub fn from_rotation_system(
        sigma: &[Dart],
        alpha: &[Dart],
        root: Dart,
    ) -> Result<(Self, Vec<Dart>), MapError> {
        let n = sigma.len();
        if n == 0 || n % 2 == 1 {
            return Err(MapError::DartCount(n));
        }
        if alpha.len() != n {
            return Err(MapError::BadInvolution(n.min(alpha.len())));
        }
        check_permutation(sigma)?;
        for (d, &a) in alpha.iter().enumerate() {
            if a >= n {
                return Err(MapError::DartOutOfRange { dart: a, darts: n });
            }
            if a == d || alpha[a] != d {
                return Err(MapError::BadInvolution(d));
            }
        }
        if root >= n {
            return Err(MapError::DartOutOfRange { dart: root, darts: n });
        }
        let mut renumber = vec![usize::MAX; n];
        let mut next = 0;
        for d in 0..n {
            if renumber[d] == usize::MAX {
                renumber[d] = next;
                renumber[alpha[d]] = next + 1;
                next += 2;
            }
        }
        let mut new_sigma = vec![0; n];
        for d in 0..n {
            new_sigma[renumber[d]] = renumber[sigma[d]];
        }
        let map = RootedMap { sigma: new_sigma, root: renumber[root] };
        Ok((map, renumber))
    }

    pub fn num_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn num_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn root(&self) -> Dart {
        self.root
    }

    pub fn root_edge(&self) -> Edge {
        self.root / 2
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    #[inline]
    pub fn alpha(&self, d: Dart) -> Dart {
        d ^ 1
    }

    /// Next dart along the face on the right of `d`.
    #[inline]
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[d ^ 1]
    }

    pub fn rotation(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn sigma_inverse(&self) -> Vec<Dart> {
        let mut inv = vec![0; self.sigma.len()];
        for (d, &s) in self.sigma.iter().enumerate() {
            inv[s] = d;
        }
        inv
    }

    pub fn vertices(&self) -> Orbits {
        Orbits::of(self.num_darts(), |d| self.sigma[d])
    }

    /// Faces as orbits of `phi`.
    pub fn faces(&self) -> Orbits {
        Orbits::of(self.num_darts(), |d| self.phi(d))
    }

    /// Index (into [`RootedMap::faces`]) of the face right of the root dart.
    pub fn root_face(&self) -> usize {
        self.faces().index[self.root]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces().len()
    }

    /// True if the group generated by `sigma` and `alpha` is transitive.
    pub fn is_connected(&self) -> bool {
        let n = self.num_darts();
        let mut seen = vec![false; n];
        let mut stack = vec![self.root];
        seen[self.root] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [self.sigma[d], d ^ 1] {
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == n
    }

    /// Per-dart coloring with the root vertex dark, or `None` if the
    /// underlying graph is not bipartite (or not connected).
    pub fn dark_darts(&self) -> Option<Vec<bool>> {
        let n = self.num_darts();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut stack = vec![(self.root, true)];
        while let Some((d, c)) = stack.pop() {
            match color[d] {
                Some(x) if x == c => continue,
                Some(_) => return None,
                None => {}
            }
            let mut x = d;
            loop {
                match color[x] {
                    Some(y) if y != c => return None,
                    _ => color[x] = Some(c),
                }
                stack.push((x ^ 1, !c));
                x = self.sigma[x];
                if x == d {
                    break;
                }
            }
        }
        color.into_iter().collect()
    }

    /// Dart of edge `e` that leaves the dark endpoint.
    ///
    /// Panics if the map is not bipartite; callers work with valid maps.
    pub fn dark_dart(&self, e: Edge) -> Dart {
        let dark = self.dark_darts().expect("map is not bipartite");
        if dark[2 * e] {
            2 * e
        } else {
            2 * e + 1
        }
    }

    /// Checks every structural invariant of a bicubic planar map.
    pub fn validate(&self) -> ValidationReport {
        let v = self.num_vertices();
        let e = self.num_edges();
        let f = self.num_faces();
        ValidationReport {
            vertices: v,
            edges: e,
            faces: f,
            involution: true,
            connected: self.is_connected(),
            genus_zero: v as i64 - e as i64 + f as i64 == 2,
            cubic: self.vertices().cycles.iter().all(|c| c.len() == 3),
            bipartite: self.dark_darts().is_some(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// The dual map on the same darts: vertices become faces and vice versa.
    pub fn dual(&self) -> RootedMap {
        let sigma = (0..self.num_darts()).map(|d| self.phi(d)).collect();
        RootedMap { sigma, root: self.root }
    }

    /// Same map with a different root dart.
    pub fn reroot(&self, dart: Dart) -> Result<RootedMap, MapError> {
        if dart >= self.num_darts() {
            return Err(MapError::DartOutOfRange { dart, darts: self.num_darts() });
        }
        Ok(RootedMap { sigma: self.sigma.clone(), root: dart })
    }

    /// Code invariant under renumbering of darts; equal codes means the
    /// maps are isomorphic by a root- and orientation-preserving map.
    pub fn canonical_code(&self) -> CanonicalCode {
        CanonicalCode(self.code_rooted_at(self.root))
    }

    /// Canonical code of the map rerooted at `root`.
    pub fn code_rooted_at(&self, root: Dart) -> Vec<u32> {
        let n = self.num_darts();
        let mut rank = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        rank[root] = 0;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for e in [self.sigma[d], d ^ 1] {
                if rank[e] == u32::MAX {
                    rank[e] = order.len() as u32;
                    order.push(e);
                }
            }
            i += 1;
        }
        let mut code = Vec::with_capacity(2 * order.len());
        code.extend(order.iter().map(|&d| rank[self.sigma[d]]));
        code.extend(order.iter().map(|&d| rank[d ^ 1]));
        code
    }

    /// Number of distinct rooted maps obtained by choosing each dart as root.
    pub fn count_rootings(&self) -> usize {
        let codes: HashSet<Vec<u32>> =
            (0..self.num_darts()).map(|d| self.code_rooted_at(d)).collect();
        codes.len()
    }

    /// Code of the underlying unrooted map: the least code over all rootings.
    pub fn unrooted_code(&self) -> CanonicalCode {
        let best = (0..self.num_darts())
            .map(|d| self.code_rooted_at(d))
            .min()
            .expect("map has darts");
        CanonicalCode(best)
    }

    /// One representative dart per distinct rooting, ordered by code.
    pub fn distinct_rootings(&self) -> Vec<(CanonicalCode, Dart)> {
        let mut all: Vec<(Vec<u32>, Dart)> =
            (0..self.num_darts()).map(|d| (self.code_rooted_at(d), d)).collect();
        all.sort();
        all.dedup_by(|a, b| a.0 == b.0);
        all.into_iter().map(|(c, d)| (CanonicalCode(c), d)).collect()
    }

    /// Rooted-isomorphism test.
    pub fn is_isomorphic(&self, other: &RootedMap) -> bool {
        self.num_darts() == other.num_darts() && self.canonical_code() == other.canonical_code()
    }
}

fn check_permutation(p: &[Dart]) -> Result<(), MapError> {
    let n = p.len();
    let mut hit = vec![false; n];
    for &x in p {
        if x >= n {
            return Err(MapError::DartOutOfRange { dart: x, darts: n });
        }
        if hit[x] {
            return Err(MapError::NotPermutation(x));
        }
        hit[x] = true;
    }
    Ok(())
}

/// Breadth-first relabeling of a rooted map: the rotation table followed by
/// the edge-pairing table, both in first-visit rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of darts of the encoded map.
    pub fn num_darts(&self) -> usize {
        self.0.len() / 2
    }

    /// Rebuilds the map (rooted at the code's dart 0).
    pub fn to_map(&self) -> Result<RootedMap, MapError> {
        let n = self.num_darts();
        if self.0.len() != 2 * n {
            return Err(MapError::DartCount(self.0.len()));
        }
        let sigma: Vec<Dart> = self.0[..n].iter().map(|&x| x as Dart).collect();
        let alpha: Vec<Dart> = self.0[n..].iter().map(|&x| x as Dart).collect();
        RootedMap::from_rotation_system(&sigma, &alpha, 0).map(|(m, _)| m)
    }
}

/// Serialized 1-based, space separated.
impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed canonical code: {0}")]
pub struct CodeParseError(pub String);

impl FromStr for CanonicalCode {
    type Err = CodeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            let x: u32 = tok.parse().map_err(|_| CodeParseError(format!("bad integer {tok:?}")))?;
            if x == 0 {
                return Err(CodeParseError("dart ids start at 1".into()));
            }
            out.push(x - 1);
        }
        if out.is_empty() || out.len() % 4 != 0 {
            return Err(CodeParseError(format!("length {} is not a multiple of 4", out.len())));
        }
        let code = CanonicalCode(out);
        code.to_map().map_err(|e| CodeParseError(e.to_string()))?;
        Ok(code)
    }
}

/// The theta map: two vertices joined by three parallel edges.
///
/// Root is the lower arc from the left vertex; seen from the left vertex the
/// counterclockwise order is lower arc, middle edge, upper arc.
pub fn theta() -> RootedMap {
    // edges: 0 lower arc, 1 middle, 2 upper arc; dart 2e leaves the left vertex
    let mut sigma = vec![0; 6];
    // left vertex: 0 -> 2 -> 4 -> 0
    sigma[0] = 2;
    sigma[2] = 4;
    sigma[4] = 0;
    // right vertex: lower, upper, middle: 1 -> 5 -> 3 -> 1
    sigma[1] = 5;
    sigma[5] = 3;
    sigma[3] = 1;
    RootedMap::new(sigma, 0).expect("theta is a rotation system")
}
