//! The bijection between decorated Dyck paths and rooted bicubic maps.
//!
//! `phi` folds the blocks of a decorated path together, gluing block `j+1`
//! into the edge named by the `j`-th merge target. Edge labels are inherited
//! from the blocks: block `i`'s edge with local label `k` is named
//! `offset_i + k`, where `offset_i` counts the edges of earlier blocks.
//!
//! The inverse cuts the map at its first two-edge cut, decodes both halves
//! and grafts the second half's block tree into the slot of the cut edge.
//! Before grafting, the second tree is rotated so that its root block moves
//! to the far end of its chain of root-edge attachments; this is what makes
//! the grafted tree fold back to the original map.

use std::collections::HashSet;

use thiserror::Error;

use crate::dyck::{enumerate_decorated, DecoratedDyckPath, DyckError, DyckPath, Step};
use crate::exec::Execution;
use crate::labeling::label_edges;
use crate::planarmap::{CanonicalCode, Dart, RootedMap};
use crate::primitives::PrimitiveCatalog;
use crate::surgery::{glue_at_dart, split};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("not a valid bicubic planar map ({0})")]
    InvalidMap(String),
    #[error("primitive block on {vertices} vertices is missing from the catalog: {code}")]
    UnknownPrimitive { vertices: usize, code: CanonicalCode },
    #[error("decomposition went wrong: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Dyck(#[from] DyckError),
}

/// Dark dart of each local label of a block (index `k - 1` for label `k`).
fn dark_darts_by_label(b: &RootedMap) -> Vec<Dart> {
    let labels = label_edges(b);
    let dark = b.dark_darts().expect("bipartite block");
    labels
        .edges_in_order()
        .iter()
        .map(|&e| if dark[2 * e] { 2 * e } else { 2 * e + 1 })
        .collect()
}

/// `phi` together with, for every block and local label, the dark dart of
/// that edge in the result.
pub fn phi_tracked(p: &DecoratedDyckPath) -> (RootedMap, Vec<Vec<Dart>>) {
    let blocks = p.decorations();
    let targets = p.path().merge_targets();
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut total = 0;
    for b in blocks {
        offsets.push(total);
        total += b.num_edges();
    }
    let mut acc = blocks[0].clone();
    let mut darts = vec![dark_darts_by_label(&blocks[0])];
    for (j, &target) in targets.iter().enumerate() {
        let i = offsets.partition_point(|&o| o < target) - 1;
        let a = darts[i][target - offsets[i] - 1];
        let next = &blocks[j + 1];
        let glued = glue_at_dart(&acc, a, next);
        for ds in &mut darts {
            for d in ds.iter_mut() {
                *d = glued.m_darts[*d];
            }
        }
        darts.push(dark_darts_by_label(next).into_iter().map(|d| glued.n_darts[d]).collect());
        acc = glued.map;
    }
    (acc, darts)
}

/// The rooted map encoded by a decorated path.
pub fn phi(p: &DecoratedDyckPath) -> RootedMap {
    phi_tracked(p).0
}

/// Block tree: each block has one slot per edge, holding the subtree glued
/// into that edge.
struct Tree {
    nodes: Vec<Node>,
}

struct Node {
    block: RootedMap,
    slots: Vec<Option<usize>>,
}

/// Decoding result for one (sub)map: the root node of its tree and, for each
/// dark dart, the block and local label it belongs to.
struct Decoded {
    root: usize,
    owner: Vec<Option<(usize, usize)>>,
}

impl Tree {
    fn leaf(&mut self, block: RootedMap) -> Decoded {
        let id = self.nodes.len();
        let owner_darts = dark_darts_by_label(&block);
        let mut owner = vec![None; block.num_darts()];
        for (k, &d) in owner_darts.iter().enumerate() {
            owner[d] = Some((id, k + 1));
        }
        let slots = vec![None; block.num_edges()];
        self.nodes.push(Node { block, slots });
        Decoded { root: id, owner }
    }

    /// Moves the root to the end of its chain of label-1 attachments.
    fn rotate(&mut self, root: usize) -> usize {
        let Some(first) = self.nodes[root].slots[0] else {
            return root;
        };
        let mut z = first;
        while let Some(next) = self.nodes[z].slots[0] {
            z = next;
        }
        self.nodes[z].slots[0] = Some(root);
        self.nodes[root].slots[0] = None;
        first
    }

    /// Blocks in pre-order (slots in label order) starting at `root`.
    fn preorder(&self, root: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            out.push(x);
            for s in self.nodes[x].slots.iter().rev().flatten() {
                stack.push(*s);
            }
        }
        out
    }

    /// `U^{3j} D enc(slot 1) D enc(slot 2) ... D enc(slot 3j)`.
    fn encode(&self, root: usize) -> DecoratedDyckPath {
        let mut steps = Vec::new();
        let mut decorations = Vec::new();
        // explicit stack of (node, next slot to emit)
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (x, slot) = *top;
            let node = &self.nodes[x];
            if slot == 0 {
                steps.extend(std::iter::repeat_n(Step::U, node.slots.len()));
                decorations.push(node.block.clone());
            }
            if slot == node.slots.len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            steps.push(Step::D);
            if let Some(child) = node.slots[slot] {
                stack.push((child, 0));
            }
        }
        let path = DyckPath::new(steps).expect("encoding is balanced");
        DecoratedDyckPath::from_parts_unchecked(path, decorations)
    }
}

/// Decodes `m` into a block tree with an explicit work stack.
fn decode(m: &RootedMap, tree: &mut Tree) -> Result<Decoded, BijectionError> {
    enum Task {
        Visit(usize),
        Join(usize),
    }
    let mut maps = vec![m.clone()];
    let mut splits = vec![None];
    let mut done: Vec<Option<Decoded>> = vec![None];
    let mut tasks = vec![Task::Visit(0)];
    while let Some(task) = tasks.pop() {
        match task {
            Task::Visit(i) => match split(&maps[i]) {
                None => done[i] = Some(tree.leaf(maps[i].clone())),
                Some(s) => {
                    let (i1, i2) = (maps.len(), maps.len() + 1);
                    maps.push(s.m1.clone());
                    maps.push(s.m2.clone());
                    splits.extend([None, None]);
                    done.extend([None, None]);
                    splits[i] = Some((s, i1, i2));
                    tasks.push(Task::Join(i));
                    tasks.push(Task::Visit(i2));
                    tasks.push(Task::Visit(i1));
                }
            },
            Task::Join(i) => {
                let (s, i1, i2) = splits[i].take().expect("split recorded");
                let d1 = done[i1].take().expect("first part decoded");
                let d2 = done[i2].take().expect("second part decoded");
                let (node, label) = d1.owner[s.delta]
                    .ok_or_else(|| BijectionError::Inconsistent("cut edge has no owner".into()))?;
                if tree.nodes[node].slots[label - 1].is_some() {
                    return Err(BijectionError::Inconsistent(format!("slot {label} of a block is used twice")));
                }
                let sub = tree.rotate(d2.root);
                tree.nodes[node].slots[label - 1] = Some(sub);
                let owner = (0..maps[i].num_darts())
                    .map(|d| match (s.m1_darts[d], s.m2_darts[d]) {
                        (Some(x), _) => d1.owner[x],
                        (None, Some(y)) => d2.owner[y],
                        (None, None) => None,
                    })
                    .collect();
                done[i] = Some(Decoded { root: d1.root, owner });
            }
        }
    }
    Ok(done[0].take().expect("root decoded"))
}

fn check_valid(m: &RootedMap) -> Result<(), BijectionError> {
    let report = m.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(BijectionError::InvalidMap(report.failures().join(", ")))
    }
}

/// The decorated path of a rooted bicubic map.
///
/// With a catalog, every block within the catalog's ceiling must appear in
/// it; otherwise blocks are taken as they are.
pub fn phi_inverse(m: &RootedMap, catalog: Option<&PrimitiveCatalog>) -> Result<DecoratedDyckPath, BijectionError> {
    check_valid(m)?;
    let mut tree = Tree { nodes: Vec::new() };
    let decoded = decode(m, &mut tree)?;
    if let Some(cat) = catalog {
        for node in &tree.nodes {
            let v = node.block.num_vertices();
            if v <= cat.max_vertices() && !cat.contains_rooted(&node.block) {
                return Err(BijectionError::UnknownPrimitive { vertices: v, code: node.block.canonical_code() });
            }
        }
    }
    Ok(tree.encode(decoded.root))
}

/// Label that the edge with dark dart `dart` carries when `m` is rebuilt
/// from its blocks by [`phi`].
pub fn inherited_label(m: &RootedMap, dart: Dart) -> usize {
    let mut tree = Tree { nodes: Vec::new() };
    let decoded = decode(m, &mut tree).expect("valid map decodes");
    let (node, local) = decoded.owner[dart].expect("dark dart of some block");
    let mut offset = 0;
    for x in tree.preorder(decoded.root) {
        if x == node {
            break;
        }
        offset += tree.nodes[x].block.num_edges();
    }
    offset + local
}

/// All rooted bicubic maps on `2n` vertices, in decorated-path order.
pub fn enumerate_maps(n: usize, catalog: &PrimitiveCatalog, exec: Execution) -> Result<Vec<RootedMap>, DyckError> {
    let paths = enumerate_decorated(n, catalog)?;
    Ok(exec.map(&paths, phi))
}

/// Outcome of [`verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub paths: usize,
    pub distinct_maps: usize,
    pub expected: usize,
    /// Paths `P` with `phi_inverse(phi(P)) != P`.
    pub path_round_trip_failures: usize,
    /// Maps `M` with `phi(phi_inverse(M))` not isomorphic to `M`.
    pub map_round_trip_failures: usize,
    /// Outputs of `phi` failing validation or of the wrong size.
    pub invalid_maps: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.paths == self.expected
            && self.distinct_maps == self.expected
            && self.path_round_trip_failures == 0
            && self.map_round_trip_failures == 0
            && self.invalid_maps == 0
    }
}

/// Runs both round trips and the counting identity at size `2n`.
pub fn verify(n: usize, catalog: &PrimitiveCatalog, exec: Execution) -> Result<VerifyReport, DyckError> {
    let paths = enumerate_decorated(n, catalog)?;
    let results = exec.map(&paths, |p| {
        let m = phi(p);
        let valid = m.is_valid() && m.num_vertices() == 2 * n;
        let back = phi_inverse(&m, Some(catalog));
        let path_ok = back.as_ref().map(|q| q == p).unwrap_or(false);
        let map_ok = back.map(|q| phi(&q).is_isomorphic(&m)).unwrap_or(false);
        (m.canonical_code(), valid, path_ok, map_ok)
    });
    let codes: HashSet<&CanonicalCode> = results.iter().map(|r| &r.0).collect();
    let expected = crate::series::f_closed(n as u32)
        .ok()
        .and_then(|f| crate::series::to_u64(&f))
        .map_or(usize::MAX, |f| f as usize);
    Ok(VerifyReport {
        n,
        paths: paths.len(),
        distinct_maps: codes.len(),
        expected,
        path_round_trip_failures: results.iter().filter(|r| !r.2).count(),
        map_round_trip_failures: results.iter().filter(|r| !r.3).count(),
        invalid_maps: results.iter().filter(|r| !r.1).count(),
    })
}
