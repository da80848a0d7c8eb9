//! Two-edge cuts and primitivity (3-edge-connectivity).

use super::{Edge, RootedMap};

/// Multigraph view: for each vertex, its incident `(neighbor, edge)` pairs.
pub(crate) fn adjacency(m: &RootedMap) -> (Vec<Vec<(usize, Edge)>>, Vec<usize>) {
    let verts = m.vertices();
    let mut adj = vec![Vec::new(); verts.len()];
    for d in 0..m.num_darts() {
        adj[verts.index[d]].push((verts.index[d ^ 1], d / 2));
    }
    (adj, verts.index)
}

/// Bridges of the graph with edge `skip` deleted, plus whether that graph
/// is connected.
fn bridges_without(adj: &[Vec<(usize, Edge)>], skip: Option<Edge>, edges: usize) -> (Vec<Edge>, bool) {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    // (vertex, edge used to enter, next adjacency slot)
    let mut stack: Vec<(usize, Edge, usize)> = vec![(0, edges, 0)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    while let Some(top) = stack.len().checked_sub(1) {
        let (v, in_edge, slot) = stack[top];
        if slot < adj[v].len() {
            let (w, e) = adj[v][slot];
            stack[top].2 += 1;
            if Some(e) == skip || e == in_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                stack.push((w, e, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] > disc[p] {
                    bridges.push(in_edge);
                }
            }
        }
    }
    let connected = disc.iter().all(|&t| t != usize::MAX);
    (bridges, connected)
}

impl RootedMap {
    /// All 2-edge cuts `{e, f}` with `e < f`, sorted.
    ///
    /// A bridge forms a cut together with every other edge.
    pub fn two_edge_cuts(&self) -> Vec<(Edge, Edge)> {
        let (adj, _) = adjacency(self);
        let m = self.num_edges();
        let (bridges, _) = bridges_without(&adj, None, m);
        let mut cuts = Vec::new();
        for e in 0..m {
            let (bs, _) = bridges_without(&adj, Some(e), m);
            for f in bs {
                if e < f {
                    cuts.push((e, f));
                }
            }
        }
        for &b in &bridges {
            for f in 0..m {
                if f != b {
                    cuts.push((b.min(f), b.max(f)));
                }
            }
        }
        cuts.sort_unstable();
        cuts.dedup();
        cuts
    }

    /// Per edge: does it belong to some 2-edge cut?
    pub fn cut_edges(&self) -> Vec<bool> {
        let mut mark = vec![false; self.num_edges()];
        for (e, f) in self.two_edge_cuts() {
            mark[e] = true;
            mark[f] = true;
        }
        mark
    }

    /// Primitive = 3-edge-connected: no two edges disconnect the map.
    pub fn is_primitive(&self) -> bool {
        let (adj, _) = adjacency(self);
        let m = self.num_edges();
        let (bridges, connected) = bridges_without(&adj, None, m);
        if !connected || !bridges.is_empty() {
            return false;
        }
        (0..m).all(|e| bridges_without(&adj, Some(e), m).0.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use crate::planarmap::theta;

    #[test]
    fn theta_has_no_cuts() {
        assert!(theta().two_edge_cuts().is_empty());
        assert!(theta().is_primitive());
    }
}
