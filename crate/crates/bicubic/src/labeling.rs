//! The road and the counterclockwise edge labeling.
//!
//! The road is a depth-first spanning tree grown from the root vertex along
//! the root edge. At each vertex the walk turns to the right-most edge whose
//! far end is still unvisited (the first such dart counterclockwise after
//! the arrival dart); at a dead end it backs up along the road. Labels are
//! then handed out by walking around the road with the road on the left:
//! road edges get labelled as they are followed, other edges as they are
//! crossed, each on first encounter. The root edge always gets label 1.

use crate::planarmap::{Dart, Edge, RootedMap};

/// One move of the road construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoadStep {
    /// Extends the road along this dart.
    Forward(Dart),
    /// Travels back along an existing road dart (construction paused).
    Back(Dart),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Road {
    pub steps: Vec<RoadStep>,
    /// Road edges in the order they were added; the root edge comes first.
    pub edges: Vec<Edge>,
    /// Vertex indices (as in [`RootedMap::vertices`]) in visiting order.
    pub visit_order: Vec<usize>,
    on_road: Vec<bool>,
}

impl Road {
    pub fn contains(&self, e: Edge) -> bool {
        self.on_road[e]
    }

    /// Number of maximal runs of back-travel steps.
    pub fn back_travel_segments(&self) -> usize {
        let mut runs = 0;
        let mut in_run = false;
        for s in &self.steps {
            let back = matches!(s, RoadStep::Back(_));
            if back && !in_run {
                runs += 1;
            }
            in_run = back;
        }
        runs
    }
}

pub fn build_road(m: &RootedMap) -> Road {
    let verts = m.vertices();
    let vertex = |d: Dart| verts.index[d];
    let mut visited = vec![false; verts.len()];
    let mut on_road = vec![false; m.num_edges()];
    let mut steps = Vec::new();
    let mut edges = Vec::new();
    let mut visit_order = Vec::new();

    let r = m.root();
    visited[vertex(r)] = true;
    visit_order.push(vertex(r));
    // Each stack entry is the dart at a road vertex from which the next scan
    // starts: the root dart at the root vertex, the way back elsewhere.
    let mut stack = vec![r];
    let mut forward = Some(r);
    loop {
        if let Some(d) = forward.take() {
            let w = vertex(d ^ 1);
            visited[w] = true;
            visit_order.push(w);
            on_road[d / 2] = true;
            edges.push(d / 2);
            steps.push(RoadStep::Forward(d));
            stack.push(d ^ 1);
        }
        if visit_order.len() == verts.len() {
            break;
        }
        let a = *stack.last().expect("connected map");
        let mut d = m.sigma(a);
        while d != a {
            if !visited[vertex(d ^ 1)] {
                forward = Some(d);
                break;
            }
            d = m.sigma(d);
        }
        if forward.is_none() {
            stack.pop();
            steps.push(RoadStep::Back(a));
        }
    }
    Road { steps, edges, visit_order, on_road }
}

/// Bijection between edges and labels `1..=E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling {
    label_of: Vec<usize>,
    edge_of: Vec<Edge>,
}

impl EdgeLabeling {
    /// Label of edge `e` (1-based).
    pub fn label(&self, e: Edge) -> usize {
        self.label_of[e]
    }

    /// Edge carrying `label`, if in range.
    pub fn edge(&self, label: usize) -> Option<Edge> {
        label.checked_sub(1).and_then(|i| self.edge_of.get(i).copied())
    }

    pub fn len(&self) -> usize {
        self.edge_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_of.is_empty()
    }

    /// Edges in label order.
    pub fn edges_in_order(&self) -> &[Edge] {
        &self.edge_of
    }
}

pub fn label_edges(m: &RootedMap) -> EdgeLabeling {
    let road = build_road(m);
    let mut label_of = vec![0; m.num_edges()];
    let mut edge_of = Vec::with_capacity(m.num_edges());
    let mut mark = |e: Edge| {
        if label_of[e] == 0 {
            edge_of.push(e);
            label_of[e] = edge_of.len();
        }
    };
    let r = m.root();
    let mut d = r;
    mark(d / 2);
    loop {
        let mut x = m.phi(d);
        while !road.contains(x / 2) {
            mark(x / 2);
            x = m.sigma(x);
        }
        d = x;
        if d == r {
            break;
        }
        mark(d / 2);
    }
    debug_assert_eq!(edge_of.len(), m.num_edges());
    EdgeLabeling { label_of, edge_of }
}
