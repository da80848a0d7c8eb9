//! Building rotation systems from plane drawings.
//!
//! Handy for transcribing pictures: give coordinates for the vertices, list
//! the edges, and the counterclockwise rotation at each vertex is read off
//! from the directions in which the edges leave it.

use super::{Dart, MapError, RootedMap};

/// `(u, v, optional bend point that fixes both departure directions)`.
type DrawnEdge = (usize, usize, Option<(f64, f64)>);

/// A plane drawing with straight or once-bent edges.
#[derive(Clone, Debug, Default)]
pub struct PlaneDrawing {
    points: Vec<(f64, f64)>,
    edges: Vec<DrawnEdge>,
}

impl PlaneDrawing {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex and returns its index.
    pub fn vertex(&mut self, x: f64, y: f64) -> usize {
        self.points.push((x, y));
        self.points.len() - 1
    }

    /// Adds a straight edge and returns its index.
    pub fn edge(&mut self, u: usize, v: usize) -> usize {
        self.edges.push((u, v, None));
        self.edges.len() - 1
    }

    /// Adds an edge that leaves both endpoints towards `via`.
    pub fn bent_edge(&mut self, u: usize, v: usize, via: (f64, f64)) -> usize {
        self.edges.push((u, v, Some(via)));
        self.edges.len() - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.points.len()
    }

    /// Dart of edge `e` leaving vertex `from`.
    pub fn dart(&self, e: usize, from: usize) -> Dart {
        if self.edges[e].0 == from {
            2 * e
        } else {
            2 * e + 1
        }
    }

    /// Some dart leaving vertex `v`, if it has an edge.
    pub fn dart_at(&self, v: usize) -> Option<Dart> {
        self.edges.iter().enumerate().find_map(|(i, &(a, b, _))| {
            if a == v {
                Some(2 * i)
            } else if b == v {
                Some(2 * i + 1)
            } else {
                None
            }
        })
    }

    /// Index of the edge joining `u` and `v` (the first one if parallel).
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(a, b, _)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// The rotation system, rooted at edge `e` leaving `from`.
    ///
    /// Dart `2e` leaves the first endpoint of edge `e`.
    pub fn rooted_at_edge(&self, e: usize, from: usize) -> Result<RootedMap, MapError> {
        let mut around: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); self.points.len()];
        for (i, &(u, v, via)) in self.edges.iter().enumerate() {
            let pu = self.points[u];
            let pv = self.points[v];
            let tu = via.unwrap_or(pv);
            let tv = via.unwrap_or(pu);
            around[u].push(((tu.1 - pu.1).atan2(tu.0 - pu.0), 2 * i));
            around[v].push(((tv.1 - pv.1).atan2(tv.0 - pv.0), 2 * i + 1));
        }
        let mut sigma = vec![0; 2 * self.edges.len()];
        for darts in &mut around {
            darts.sort_by(|a, b| a.0.total_cmp(&b.0));
            for k in 0..darts.len() {
                sigma[darts[k].1] = darts[(k + 1) % darts.len()].1;
            }
        }
        RootedMap::new(sigma, self.dart(e, from))
    }

    /// The rotation system rooted at the dart from `u` to `v`.
    pub fn rooted(&self, u: usize, v: usize) -> Result<RootedMap, MapError> {
        let e = self.find_edge(u, v).ok_or(MapError::DartOutOfRange {
            dart: usize::MAX,
            darts: 2 * self.edges.len(),
        })?;
        self.rooted_at_edge(e, u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_has_two_square_faces() {
        // a 4-cycle has two faces of size 4
        let mut d = PlaneDrawing::new();
        let a = d.vertex(0.0, 0.0);
        let b = d.vertex(1.0, 0.0);
        let c = d.vertex(1.0, 1.0);
        let e = d.vertex(0.0, 1.0);
        d.edge(a, b);
        d.edge(b, c);
        d.edge(c, e);
        d.edge(e, a);
        let m = d.rooted(a, b).unwrap();
        let faces = m.faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.cycles.iter().all(|c| c.len() == 4));
        assert_eq!(m.num_vertices(), 4);
    }
}
