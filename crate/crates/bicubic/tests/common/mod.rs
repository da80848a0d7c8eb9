#![allow(dead_code)]

use bicubic::dyck::{DecoratedDyckPath, DyckPath};
use bicubic::labeling::label_edges;
use bicubic::planarmap::{theta, PlaneDrawing, RootedMap};
use bicubic::surgery::glue_at_dart;

/// Corner `k` (1-based) of a regular `n`-gon of the given radius, with the
/// same placement as TikZ `regular polygon` nodes.
pub fn corner(n: usize, k: usize, radius: f64) -> (f64, f64) {
    let step = 360.0 / n as f64;
    let start = if n % 2 == 1 { 90.0 } else { 90.0 - step / 2.0 };
    let a = (start + step * (k as f64 - 1.0)).to_radians();
    (radius * a.cos(), radius * a.sin())
}

/// Prism with inner ring `A1..An` and outer ring `Bk`, drawn concentrically.
pub struct Ring {
    pub drawing: PlaneDrawing,
    pub n: usize,
}

impl Ring {
    pub fn new(n: usize) -> Ring {
        let mut d = PlaneDrawing::new();
        for k in 1..=n {
            let (x, y) = corner(n, k, 20.0);
            d.vertex(x, y);
        }
        for k in 1..=n {
            let (x, y) = corner(n, k, 45.0);
            d.vertex(x, y);
        }
        for k in 0..n {
            d.edge(k, (k + 1) % n);
            d.edge(n + k, n + (k + 1) % n);
            d.edge(k, n + k);
        }
        Ring { drawing: d, n }
    }

    /// Vertex index of a name such as `A3` or `B12`.
    pub fn v(&self, name: &str) -> usize {
        let k: usize = name[1..].parse().unwrap();
        match &name[..1] {
            "A" => k - 1,
            "B" => self.n + k - 1,
            _ => panic!("bad vertex name {name}"),
        }
    }

    pub fn rooted(&self, from: &str, to: &str) -> RootedMap {
        self.drawing.rooted(self.v(from), self.v(to)).unwrap()
    }

    /// Edge index of `"A3-B3"`.
    pub fn edge(&self, spec: &str) -> usize {
        let (a, b) = spec.split_once('-').unwrap();
        self.drawing.find_edge(self.v(a), self.v(b)).unwrap()
    }
}

/// The 14-vertex primitive used to illustrate back travel: an outer hexagon
/// around two squares joined side by side. Rooted on the edge from the
/// lower right hexagon vertex into the right square.
pub fn back_travel_map() -> RootedMap {
    let mut d = PlaneDrawing::new();
    let e = d.vertex(6.2, 0.0);
    let ne = d.vertex(5.3, 1.5);
    let nw = d.vertex(0.7, 1.5);
    let w = d.vertex(-0.2, 0.0);
    let sw = d.vertex(0.7, -1.5);
    let se = d.vertex(5.3, -1.5);
    let a: Vec<usize> = [(1.8, 0.7), (1.1, 0.0), (1.8, -0.7), (2.5, 0.0)]
        .iter()
        .map(|&(x, y)| d.vertex(x, y))
        .collect();
    let b: Vec<usize> = [(4.2, 0.7), (3.5, 0.0), (4.2, -0.7), (4.9, 0.0)]
        .iter()
        .map(|&(x, y)| d.vertex(x, y))
        .collect();
    for (u, v) in [(e, ne), (ne, nw), (nw, w), (w, sw), (sw, se), (se, e)] {
        d.edge(u, v);
    }
    for k in 0..4 {
        d.edge(a[k], a[(k + 1) % 4]);
        d.edge(b[k], b[(k + 1) % 4]);
    }
    d.edge(a[0], nw);
    d.edge(a[1], w);
    d.edge(a[2], sw);
    d.edge(a[3], b[1]);
    d.edge(b[0], ne);
    d.edge(b[3], e);
    d.edge(se, b[2]);
    d.rooted(se, b[2]).unwrap()
}

/// Theta drawn with the root on the lower arc from the left vertex.
pub fn drawn_theta() -> (PlaneDrawing, RootedMap) {
    let mut d = PlaneDrawing::new();
    let l = d.vertex(-1.0, 0.0);
    let r = d.vertex(1.0, 0.0);
    let lower = d.bent_edge(l, r, (0.0, -1.0));
    d.bent_edge(l, r, (0.0, 1.0));
    d.edge(l, r);
    let m = d.rooted_at_edge(lower, l).unwrap();
    (d, m)
}

/// The three rooted maps on 4 vertices, left to right: two double edges on
/// a square, rooted on the left side, the lower arc and the upper arc.
pub fn four_vertex_maps() -> Vec<RootedMap> {
    let mut d = PlaneDrawing::new();
    let c: Vec<usize> = (1..=4)
        .map(|k| {
            let (x, y) = corner(4, k, 30.0);
            d.vertex(x, y)
        })
        .collect();
    let top_upper = d.bent_edge(c[1], c[0], (0.0, 28.0));
    let top_lower = d.bent_edge(c[1], c[0], (0.0, 14.0));
    d.bent_edge(c[2], c[3], (0.0, -14.0));
    d.bent_edge(c[2], c[3], (0.0, -28.0));
    d.edge(c[0], c[3]);
    let left = d.edge(c[1], c[2]);
    vec![
        d.rooted_at_edge(left, c[1]).unwrap(),
        d.rooted_at_edge(top_lower, c[1]).unwrap(),
        d.rooted_at_edge(top_upper, c[1]).unwrap(),
    ]
}

/// The 18-vertex primitive drawn as a hexagon and a square inside an outer
/// 8-cycle. The drawing has no root; the root is put on the edge from the
/// left outer vertex into the hexagon.
pub fn eighteen_vertex_map() -> RootedMap {
    let mut d = PlaneDrawing::new();
    let hex_center = 34.1;
    let a: Vec<usize> = (1..=6)
        .map(|k| {
            let (x, y) = corner(6, k, 17.5);
            d.vertex(hex_center + x, y)
        })
        .collect();
    let sq_center = 85.4;
    // square rotated by 45 degrees: corners at top, left, bottom, right
    let b: Vec<usize> = [(0.0, 14.0), (-14.0, 0.0), (0.0, -14.0), (14.0, 0.0)]
        .iter()
        .map(|&(x, y)| d.vertex(sq_center + x, y))
        .collect();
    let a1x = hex_center + corner(6, 1, 17.5).0;
    let a2x = hex_center + corner(6, 2, 17.5).0;
    let east = d.vertex(118.0, 0.0);
    let t3 = d.vertex(sq_center, 32.0);
    let t1 = d.vertex(a1x, 32.0);
    let t2 = d.vertex(a2x, 32.0);
    let west = d.vertex(-4.0, 0.0);
    let d4 = d.vertex(a2x, -32.0);
    let d5 = d.vertex(a1x, -32.0);
    let d3 = d.vertex(sq_center, -32.0);
    let outer = [east, t3, t1, t2, west, d4, d5, d3];
    for k in 0..8 {
        d.edge(outer[k], outer[(k + 1) % 8]);
    }
    for k in 0..6 {
        d.edge(a[k], a[(k + 1) % 6]);
    }
    for k in 0..4 {
        d.edge(b[k], b[(k + 1) % 4]);
    }
    for (u, v) in [(a[0], t1), (a[1], t2), (a[3], d4), (a[4], d5), (a[5], b[1]), (b[0], t3), (b[2], d3), (b[3], east)] {
        d.edge(u, v);
    }
    d.edge(west, a[2]);
    d.rooted(west, a[2]).unwrap()
}

/// `k` tilted squares in a row inside an outer cycle, each square tied to
/// the outer cycle above and below and to its neighbours left and right.
/// One square is the cube, two give the 14-vertex primitive.
pub fn square_chain(k: usize) -> RootedMap {
    let mut d = PlaneDrawing::new();
    let squares: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let cx = 3.0 * i as f64;
            [(0.0, 1.0), (-1.0, 0.0), (0.0, -1.0), (1.0, 0.0)]
                .iter()
                .map(|&(x, y)| d.vertex(cx + x, y))
                .collect()
        })
        .collect();
    let west = d.vertex(-2.0, 0.0);
    let east = d.vertex(3.0 * k as f64 - 1.0, 0.0);
    let tops: Vec<usize> = (0..k).map(|i| d.vertex(3.0 * i as f64, 2.0)).collect();
    let bottoms: Vec<usize> = (0..k).map(|i| d.vertex(3.0 * i as f64, -2.0)).collect();
    let mut outer = vec![west];
    outer.extend(&bottoms);
    outer.push(east);
    outer.extend(tops.iter().rev());
    for i in 0..outer.len() {
        d.edge(outer[i], outer[(i + 1) % outer.len()]);
    }
    for (i, s) in squares.iter().enumerate() {
        for j in 0..4 {
            d.edge(s[j], s[(j + 1) % 4]);
        }
        d.edge(s[0], tops[i]);
        d.edge(s[2], bottoms[i]);
        if i + 1 < k {
            d.edge(s[3], squares[i + 1][1]);
        }
    }
    d.edge(west, squares[0][1]);
    d.edge(squares[k - 1][3], east);
    d.rooted(west, squares[0][1]).unwrap()
}

/// Labelings 1, 2, ... of the cube and three rootings of the 6-prism, as
/// drawn: the edge named at position `i` carries label `i + 1`.
pub const CUBE: [&str; 12] = [
    "B3-B4", "B1-B4", "B1-B2", "B2-B3", "A2-B2", "A2-A3", "A3-B3", "A3-A4", "A4-B4", "A1-A4",
    "A1-B1", "A1-A2",
];

pub const PRISM_A: [&str; 18] = [
    "B4-B5", "B5-B6", "B1-B6", "B1-B2", "B2-B3", "B3-B4", "A3-B3", "A3-A4", "A4-B4", "A4-A5",
    "A5-B5", "A5-A6", "A6-B6", "A1-A6", "A1-B1", "A1-A2", "A2-B2", "A2-A3",
];

pub const PRISM_B: [&str; 18] = [
    "A4-B4", "A4-A5", "A5-B5", "B4-B5", "B5-B6", "B1-B6", "B1-B2", "B2-B3", "B3-B4", "A3-B3",
    "A3-A4", "A2-A3", "A1-A2", "A1-A6", "A5-A6", "A6-B6", "A1-B1", "A2-B2",
];

pub const PRISM_C: [&str; 18] = [
    "B3-B4", "A3-B3", "A3-A4", "A4-B4", "A4-A5", "A5-B5", "B4-B5", "B5-B6", "B1-B6", "B1-B2",
    "B2-B3", "A2-B2", "A2-A3", "A1-A2", "A1-A6", "A5-A6", "A6-B6", "A1-B1",
];

/// Folds blocks by hand: block `i`'s local label `k` is addressed as
/// `offset_i + k`, and each block is glued by the dark dart of that edge.
pub fn fold(blocks: &[RootedMap], targets: &[usize]) -> RootedMap {
    let local_darts = |b: &RootedMap| -> Vec<usize> {
        label_edges(b).edges_in_order().iter().map(|&e| b.dark_dart(e)).collect()
    };
    let mut acc = blocks[0].clone();
    let mut owned: Vec<Vec<usize>> = vec![local_darts(&blocks[0])];
    for (j, &t) in targets.iter().enumerate() {
        let mut rest = t;
        let mut i = 0;
        while rest > blocks[i].num_edges() {
            rest -= blocks[i].num_edges();
            i += 1;
        }
        let g = glue_at_dart(&acc, owned[i][rest - 1], &blocks[j + 1]);
        for ds in owned.iter_mut() {
            for d in ds.iter_mut() {
                *d = g.m_darts[*d];
            }
        }
        owned.push(local_darts(&blocks[j + 1]).iter().map(|&d| g.n_darts[d]).collect());
        acc = g.map;
    }
    acc
}

pub fn thetas(path: &str) -> DecoratedDyckPath {
    let path: DyckPath = path.parse().unwrap();
    let k = path.ascents().len();
    DecoratedDyckPath::new(path, vec![theta(); k]).unwrap()
}

/// Rows of the six-vertex library: path and the two merge labels.
pub const TABLE_ONE: [(&str, usize, usize); 12] = [
    ("U3 D U3 D U3 D7", 1, 4),
    ("U3 D U3 D2 U3 D6", 1, 5),
    ("U3 D U3 D3 U3 D5", 1, 6),
    ("U3 D U3 D4 U3 D4", 1, 2),
    ("U3 D U3 D5 U3 D3", 1, 3),
    ("U3 D2 U3 D U3 D6", 2, 4),
    ("U3 D2 U3 D2 U3 D5", 2, 5),
    ("U3 D2 U3 D3 U3 D4", 2, 6),
    ("U3 D2 U3 D4 U3 D3", 2, 3),
    ("U3 D3 U3 D U3 D5", 3, 4),
    ("U3 D3 U3 D2 U3 D4", 3, 5),
    ("U3 D3 U3 D3 U3 D3", 3, 6),
];

/// The semilength-42 path decorated by two rootings of the 6-prism.
pub fn big_example() -> DecoratedDyckPath {
    let ring = Ring::new(6);
    let first = ring.rooted("B4", "B3");
    let third = ring.rooted("B4", "A4");
    let path: DyckPath = "U18 D6 U3 D8 U18 D4 U3 D24".parse().unwrap();
    DecoratedDyckPath::new(path, vec![first, theta(), third, theta()]).unwrap()
}
