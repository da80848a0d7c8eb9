//! Primitive (3-edge-connected) bicubic maps: the two insertion moves,
//! exhaustive generation by size, rooting statistics and a few named
//! families.
//!
//! Every primitive on `2n ≥ 8` vertices comes from a smaller one by either
//!
//! * a 4-vertex insertion: subdivide two edges of a face twice each and add
//!   the two nested chords across the face, or
//! * a 6-vertex insertion: blow a vertex up into a hexagon around it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::exec::Execution;
use crate::planarmap::{parse_map, theta, write_map, CanonicalCode, Dart, Edge, PlaneDrawing, RootedMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertError {
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("edge {0} is not on the boundary of the face")]
    NotOnFace(Edge),
    #[error("the two edges coincide")]
    SameEdge,
    #[error("boundary arcs between the edges have {0} and {1} edges; both must be odd")]
    Parity(usize, usize),
}

/// Mutable rotation system used while performing insertions.
struct Surgeon {
    sigma: Vec<Dart>,
    alpha: Vec<Dart>,
    root: Dart,
}

impl Surgeon {
    fn new(m: &RootedMap) -> Self {
        let n = m.num_darts();
        Surgeon { sigma: m.rotation().to_vec(), alpha: (0..n).map(|d| d ^ 1).collect(), root: m.root() }
    }

    fn dart(&mut self) -> Dart {
        let d = self.sigma.len();
        self.sigma.push(d);
        self.alpha.push(d);
        d
    }

    fn pair(&mut self, a: Dart, b: Dart) {
        self.alpha[a] = b;
        self.alpha[b] = a;
    }

    /// Puts the lone dart `x` right after `g` in `g`'s rotation.
    fn insert_after(&mut self, g: Dart, x: Dart) {
        let next = self.sigma[g];
        self.sigma[g] = x;
        self.sigma[x] = next;
    }

    /// Splits the edge of `d` with a new vertex; returns its darts
    /// `(back towards d's vertex, onwards)`.
    fn subdivide(&mut self, d: Dart) -> (Dart, Dart) {
        let far = self.alpha[d];
        let p = self.dart();
        let q = self.dart();
        self.sigma[p] = q;
        self.sigma[q] = p;
        self.pair(d, p);
        self.pair(q, far);
        (p, q)
    }

    fn chord(&mut self, after_a: Dart, after_b: Dart) {
        let x = self.dart();
        let y = self.dart();
        self.insert_after(after_a, x);
        self.insert_after(after_b, y);
        self.pair(x, y);
    }

    fn finish(self) -> RootedMap {
        RootedMap::from_rotation_system(&self.sigma, &self.alpha, self.root)
            .expect("insertion keeps a rotation system")
            .0
    }
}

/// Position of a dart of edge `e` in the face cycle.
fn position_on(cycle: &[Dart], e: Edge) -> Result<usize, InsertError> {
    cycle.iter().position(|&d| d / 2 == e).ok_or(InsertError::NotOnFace(e))
}

/// 4-vertex insertion across `face` (an index into [`RootedMap::faces`])
/// between edges `e` and `e2`.
pub fn insert4(m: &RootedMap, face: usize, e: Edge, e2: Edge) -> Result<RootedMap, InsertError> {
    let faces = m.faces();
    let cycle = faces.cycles.get(face).ok_or(InsertError::NoSuchFace(face))?;
    if e == e2 {
        return Err(InsertError::SameEdge);
    }
    let i = position_on(cycle, e)?;
    let j = position_on(cycle, e2)?;
    let (i, j) = (i.min(j), i.max(j));
    let l1 = j - i - 1;
    let l2 = cycle.len() - (j - i) - 1;
    if l1 % 2 == 0 || l2 % 2 == 0 {
        return Err(InsertError::Parity(l1, l2));
    }
    Ok(insert4_at(m, cycle[i], cycle[j]))
}

/// 4-vertex insertion on the face right of darts `d` and `g`.
fn insert4_at(m: &RootedMap, d: Dart, g: Dart) -> RootedMap {
    let mut s = Surgeon::new(m);
    // d: u -> s1 -> s2 -> v, g: w -> t1 -> t2 -> z, all along the face
    let (p1, q1) = s.subdivide(d);
    let (p2, _) = s.subdivide(q1);
    let (r1, w1) = s.subdivide(g);
    let (r2, _) = s.subdivide(w1);
    // the face corner at each new vertex follows its backward dart
    s.chord(p1, r2);
    s.chord(p2, r1);
    s.finish()
}

/// 6-vertex insertion: replaces the neighbourhood of `vertex` (an index into
/// [`RootedMap::vertices`]) by a hexagon around it.
pub fn insert6(m: &RootedMap, vertex: usize) -> Result<RootedMap, InsertError> {
    let verts = m.vertices();
    let darts = verts.cycles.get(vertex).ok_or(InsertError::NoSuchVertex(vertex))?;
    let mut s = Surgeon::new(m);
    let mut near = Vec::new();
    let mut far = Vec::new();
    for &d in darts {
        // v -> a -> b -> neighbour
        let (pa, qa) = s.subdivide(d);
        let (_, qb) = s.subdivide(qa);
        near.push(pa);
        far.push(qb);
    }
    let k = darts.len();
    for i in 0..k {
        s.chord(far[i], near[(i + 1) % k]);
    }
    Ok(s.finish())
}

/// Every legal 4-vertex insertion site as `(face, dart, dart)` on the face.
fn insert4_sites(m: &RootedMap) -> Vec<(Dart, Dart)> {
    let mut sites = Vec::new();
    for cycle in m.faces().cycles {
        let len = cycle.len();
        for i in 0..len {
            for j in i + 1..len {
                let l1 = j - i - 1;
                let l2 = len - (j - i) - 1;
                if l1 % 2 == 1 && l2 % 2 == 1 && cycle[i] / 2 != cycle[j] / 2 {
                    sites.push((cycle[i], cycle[j]));
                }
            }
        }
    }
    sites
}

/// All maps reachable from `m` by one insertion of either kind.
pub fn all_insertions(m: &RootedMap) -> (Vec<RootedMap>, Vec<RootedMap>) {
    let fours = insert4_sites(m).into_iter().map(|(d, g)| insert4_at(m, d, g)).collect();
    let sixes = (0..m.num_vertices()).map(|v| insert6(m, v).expect("vertex exists")).collect();
    (fours, sixes)
}

/// `k`-prism: two `k`-gons joined by a belt of quadrilaterals.
///
/// Rooted on an outer-cycle edge.
pub fn prism(k: usize) -> Result<RootedMap, String> {
    if k < 4 || k % 2 == 1 {
        return Err(format!("a bicubic prism needs an even k >= 4, got {k}"));
    }
    let mut d = PlaneDrawing::new();
    let step = std::f64::consts::TAU / k as f64;
    for ring in [1.0, 2.0] {
        for i in 0..k {
            let a = step * i as f64;
            d.vertex(ring * a.cos(), ring * a.sin());
        }
    }
    for i in 0..k {
        d.edge(i, (i + 1) % k);
        d.edge(k + i, k + (i + 1) % k);
        d.edge(i, k + i);
    }
    Ok(d.rooted(k, k + 1).expect("prism drawing"))
}

/// The truncated octahedron: 6 squares and 8 hexagons on 24 vertices.
pub fn truncated_octahedron() -> RootedMap {
    // vertices: all permutations of (0, ±1, ±2)
    let mut pts: Vec<[f64; 3]> = Vec::new();
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for p in perms {
        for s1 in [-1.0, 1.0] {
            for s2 in [-1.0, 1.0] {
                let base = [0.0, s1, 2.0 * s2];
                pts.push([base[p[0]], base[p[1]], base[p[2]]]);
            }
        }
    }
    let dist2 = |a: &[f64; 3], b: &[f64; 3]| (0..3).map(|i| (a[i] - b[i]).powi(2)).sum::<f64>();
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if (dist2(&pts[i], &pts[j]) - 2.0).abs() < 1e-9 {
                edges.push((i, j));
            }
        }
    }
    let mut around: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); pts.len()];
    for (e, &(i, j)) in edges.iter().enumerate() {
        for (from, to, dart) in [(i, j, 2 * e), (j, i, 2 * e + 1)] {
            let p = pts[from];
            let n = normalize(p);
            let w = sub(pts[to], p);
            // tangent frame at p: x towards a fixed reference, y = n × x
            let reference = if n[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
            let x = normalize(sub(reference, scale(n, dot(reference, n))));
            let y = cross(n, x);
            around[from].push((dot(w, y).atan2(dot(w, x)), dart));
        }
    }
    let mut sigma = vec![0; 2 * edges.len()];
    for darts in &mut around {
        darts.sort_by(|a, b| a.0.total_cmp(&b.0));
        for k in 0..darts.len() {
            sigma[darts[k].1] = darts[(k + 1) % darts.len()].1;
        }
    }
    RootedMap::new(sigma, 0).expect("truncated octahedron")
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn scale(a: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    scale(a, 1.0 / dot(a, a).sqrt())
}

/// A primitive on `2n` vertices without non-trivial orientation-preserving
/// automorphisms, hence with `6n` rootings.
///
/// Odd `n`: a hexagon blown up at a vertex of the `(n-3)`-prism. Even `n`:
/// a 4-vertex insertion across an end face of the `(n-2)`-prism that cuts
/// it into faces of sizes 6, 4 and `n-4`.
pub fn construct_asymmetric(n: usize) -> Result<RootedMap, String> {
    if n < 9 || n == 10 {
        return Err(format!("no construction for n = {n}; need n = 9 or n >= 11"));
    }
    if n % 2 == 1 {
        let p = prism(n - 3)?;
        Ok(insert6(&p, 0).expect("vertex 0 exists"))
    } else {
        let k = n - 2;
        let p = prism(k)?;
        let faces = p.faces();
        let inner = faces
            .cycles
            .iter()
            .position(|c| c.len() == k && c.iter().all(|&d| d / 2 % 3 == 0))
            .expect("inner k-gon");
        let cycle = &faces.cycles[inner];
        // arcs of 3 and k-5 edges between the chosen edges
        Ok(insert4(&p, inner, cycle[0] / 2, cycle[4] / 2).map_err(|e| e.to_string())?)
    }
}

/// An unrooted primitive with its distinct rootings.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Representative rooted at the dart giving the least code.
    pub map: RootedMap,
    /// Least rooted code over all darts.
    pub code: CanonicalCode,
    /// Number of distinct rootings.
    pub rootings: usize,
}

/// All primitives up to a vertex ceiling, grouped by size.
#[derive(Clone, Debug, Default)]
pub struct PrimitiveCatalog {
    max_vertices: usize,
    entries: BTreeMap<usize, Vec<CatalogEntry>>,
    rooted: BTreeMap<usize, Vec<RootedMap>>,
    handles: HashMap<CanonicalCode, (usize, usize)>,
}

/// Catalog handle `P<vertices>.<index>` of a rooted primitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Handle {
    pub vertices: usize,
    pub index: usize,
}

impl fmt::Display for Handle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}.{}", self.vertices, self.index)
    }
}

impl PrimitiveCatalog {
    fn from_entries(max_vertices: usize, entries: BTreeMap<usize, Vec<CatalogEntry>>) -> Self {
        let mut rooted = BTreeMap::new();
        let mut handles = HashMap::new();
        for (&v, list) in &entries {
            let mut all: Vec<(CanonicalCode, RootedMap)> = Vec::new();
            for entry in list {
                for (code, d) in entry.map.distinct_rootings() {
                    all.push((code, entry.map.reroot(d).expect("dart exists")));
                }
            }
            all.sort_by(|a, b| a.0.cmp(&b.0));
            for (i, (code, _)) in all.iter().enumerate() {
                handles.insert(code.clone(), (v, i));
            }
            rooted.insert(v, all.into_iter().map(|(_, m)| m).collect());
        }
        PrimitiveCatalog { max_vertices, entries, rooted, handles }
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }

    /// Unrooted entries on `vertices` vertices (empty if none or uncovered).
    pub fn entries(&self, vertices: usize) -> &[CatalogEntry] {
        self.entries.get(&vertices).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Sizes covered, in increasing order, including empty ones.
    pub fn sizes(&self) -> Vec<usize> {
        (2..=self.max_vertices).step_by(2).collect()
    }

    /// All rooted primitives on `vertices` vertices, sorted by code.
    pub fn rooted(&self, vertices: usize) -> &[RootedMap] {
        self.rooted.get(&vertices).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Total number of rooted primitives on `vertices` vertices.
    pub fn rooting_sum(&self, vertices: usize) -> usize {
        self.entries(vertices).iter().map(|e| e.rootings).sum()
    }

    pub fn handle_of(&self, code: &CanonicalCode) -> Option<Handle> {
        self.handles.get(code).map(|&(vertices, index)| Handle { vertices, index })
    }

    pub fn contains_rooted(&self, m: &RootedMap) -> bool {
        self.handles.contains_key(&m.canonical_code())
    }

    /// Looks up `P<vertices>.<index>`.
    pub fn resolve_handle(&self, handle: &str) -> Result<&RootedMap, String> {
        let rest = handle.strip_prefix('P').ok_or_else(|| format!("bad handle {handle:?}"))?;
        let (v, i) = rest.split_once('.').ok_or_else(|| format!("bad handle {handle:?}"))?;
        let v: usize = v.parse().map_err(|_| format!("bad handle {handle:?}"))?;
        let i: usize = i.parse().map_err(|_| format!("bad handle {handle:?}"))?;
        if v > self.max_vertices {
            return Err(format!("handle {handle} beyond catalog ceiling {}", self.max_vertices));
        }
        self.rooted(v).get(i).ok_or_else(|| format!("no primitive {handle}"))
    }

    /// Index text: `size <2n>` headers followed by `<code> <rootings>` lines.
    pub fn index_text(&self) -> String {
        let mut out = String::new();
        for v in self.sizes() {
            let _ = writeln!(out, "size {v}");
            for e in self.entries(v) {
                let _ = writeln!(out, "{} {}", e.code, e.rootings);
            }
        }
        out
    }

    /// Rebuilds a catalog from [`PrimitiveCatalog::index_text`] output.
    pub fn from_index_text(text: &str) -> Result<Self, String> {
        let mut entries: BTreeMap<usize, Vec<CatalogEntry>> = BTreeMap::new();
        let mut size = None;
        let mut max = 0;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: &str| format!("line {}: {m}", i + 1);
            if let Some(v) = line.strip_prefix("size ") {
                let v: usize = v.trim().parse().map_err(|_| bad("bad size"))?;
                size = Some(v);
                max = max.max(v);
                entries.entry(v).or_default();
                continue;
            }
            let v = size.ok_or_else(|| bad("entry before any size line"))?;
            let (code, rootings) = line.rsplit_once(' ').ok_or_else(|| bad("expected `<code> <rootings>`"))?;
            let code: CanonicalCode = code.parse().map_err(|e| bad(&format!("{e}")))?;
            let rootings: usize = rootings.parse().map_err(|_| bad("bad rooting count"))?;
            let map = code.to_map().map_err(|e| bad(&e.to_string()))?;
            if map.num_vertices() != v || map.count_rootings() != rootings {
                return Err(bad("entry does not match its size or rooting count"));
            }
            entries.entry(v).or_default().push(CatalogEntry { map, code, rootings });
        }
        Ok(PrimitiveCatalog::from_entries(max, entries))
    }

    /// Writes `index.txt` and one `p<2n>.maps` file per size into `dir`.
    pub fn write_dir(&self, dir: &std::path::Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("index.txt"), self.index_text())?;
        for v in self.sizes() {
            let mut out = String::new();
            for e in self.entries(v) {
                out.push_str(&write_map(&e.map));
                out.push('\n');
            }
            std::fs::write(dir.join(format!("p{v:02}.maps")), out)?;
        }
        Ok(())
    }
}

/// Splits a file of concatenated maps (each starting with `bicubicmap`).
pub fn parse_maps(text: &str) -> Result<Vec<RootedMap>, crate::planarmap::ParseError> {
    let mut chunks: Vec<String> = Vec::new();
    for line in text.lines() {
        if line.trim_start().starts_with("bicubicmap") {
            chunks.push(String::new());
        }
        if let Some(c) = chunks.last_mut() {
            c.push_str(line);
            c.push('\n');
        }
    }
    chunks.iter().map(|c| parse_map(c)).collect()
}

fn entry_of(map: RootedMap) -> CatalogEntry {
    let rootings = map.distinct_rootings();
    let (code, best) = rootings[0].clone();
    CatalogEntry { map: map.reroot(best).expect("dart exists"), code, rootings: rootings.len() }
}

/// Generates every primitive with at most `max_vertices` vertices, starting
/// from the theta map and applying all insertions.
pub fn generate_catalog(max_vertices: usize, exec: Execution) -> PrimitiveCatalog {
    let mut entries: BTreeMap<usize, Vec<CatalogEntry>> = BTreeMap::new();
    if max_vertices >= 2 {
        entries.insert(2, vec![entry_of(theta())]);
    }
    for v in (4..=max_vertices).step_by(2) {
        // (source map, 4-site or 6-vertex)
        enum Job<'a> {
            Four(&'a RootedMap, Dart, Dart),
            Six(&'a RootedMap, usize),
        }
        let mut jobs = Vec::new();
        if v >= 6 {
            for e in entries.get(&(v - 4)).into_iter().flatten() {
                for (d, g) in insert4_sites(&e.map) {
                    jobs.push(Job::Four(&e.map, d, g));
                }
            }
        }
        if v >= 8 {
            for e in entries.get(&(v - 6)).into_iter().flatten() {
                for x in 0..e.map.num_vertices() {
                    jobs.push(Job::Six(&e.map, x));
                }
            }
        }
        let candidates: Vec<Option<(CanonicalCode, RootedMap)>> = exec.map(&jobs, |job| {
            let m = match *job {
                Job::Four(m, d, g) => insert4_at(m, d, g),
                Job::Six(m, x) => insert6(m, x).expect("vertex exists"),
            };
            if !m.is_primitive() {
                return None;
            }
            Some((m.unrooted_code(), m))
        });
        let mut unique: BTreeMap<CanonicalCode, RootedMap> = BTreeMap::new();
        for (code, m) in candidates.into_iter().flatten() {
            unique.entry(code).or_insert(m);
        }
        let maps: Vec<RootedMap> = unique.into_values().collect();
        let list = exec.map(&maps, |m| entry_of(m.clone()));
        entries.insert(v, list);
    }
    PrimitiveCatalog::from_entries(max_vertices, entries)
}

/// Catalog entries with exactly three rootings.
pub fn three_rooting_census(catalog: &PrimitiveCatalog) -> Vec<&CatalogEntry> {
    catalog
        .sizes()
        .into_iter()
        .flat_map(|v| catalog.entries(v).iter())
        .filter(|e| e.rootings == 3)
        .collect()
}
