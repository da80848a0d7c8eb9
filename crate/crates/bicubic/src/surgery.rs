//! Gluing two rooted maps along an edge, and the inverse cut along a
//! two-edge cut.
//!
//! Gluing `n` into edge `ℓ` of `m` cuts `ℓ` and the root edge `ϱ` of `n`
//! and cross-connects the halves: the dark half of `ℓ` meets the white half
//! of `ϱ` and the dark half of `ϱ` meets the white half of `ℓ`. Rotations are
//! untouched, so the result is again planar and bicubic, with `m`'s root.

use thiserror::Error;

use crate::labeling::label_edges;
use crate::planarmap::{Dart, Edge, RootedMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("label {label} out of range 1..={edges}")]
    LabelOutOfRange { label: usize, edges: usize },
    #[error("input map is not a valid bicubic planar map ({0})")]
    InvalidMap(String),
    #[error("map is primitive and has no two-edge cut")]
    Primitive,
}

/// Result of [`glue_at_dart`], with dart renumberings of both inputs.
#[derive(Clone, Debug)]
pub struct Glued {
    pub map: RootedMap,
    /// Old dart of `m` → dart of the glued map.
    pub m_darts: Vec<Dart>,
    /// Old dart of `n` → dart of the glued map.
    pub n_darts: Vec<Dart>,
}

/// Glues `n` into the edge of `m` whose dark dart is `a`.
pub fn glue_at_dart(m: &RootedMap, a: Dart, n: &RootedMap) -> Glued {
    let off = m.num_darts();
    let total = off + n.num_darts();
    let mut sigma = Vec::with_capacity(total);
    sigma.extend(m.rotation().iter().copied());
    sigma.extend(n.rotation().iter().map(|&d| d + off));
    let mut alpha: Vec<Dart> = (0..total).map(|d| if d < off { d ^ 1 } else { ((d - off) ^ 1) + off }).collect();
    let r = n.root() + off;
    let r_white = (n.root() ^ 1) + off;
    alpha[a] = r_white;
    alpha[r_white] = a;
    alpha[r] = a ^ 1;
    alpha[a ^ 1] = r;
    let (map, renumber) =
        RootedMap::from_rotation_system(&sigma, &alpha, m.root()).expect("gluing keeps a rotation system");
    Glued { map, m_darts: renumber[..off].to_vec(), n_darts: renumber[off..].to_vec() }
}

fn check_valid(m: &RootedMap) -> Result<(), SurgeryError> {
    let report = m.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(SurgeryError::InvalidMap(report.failures().join(", ")))
    }
}

/// `m ⧺_label n`, with `label` taken from [`label_edges`] of `m`.
pub fn glue(m: &RootedMap, label: usize, n: &RootedMap) -> Result<RootedMap, SurgeryError> {
    check_valid(m)?;
    check_valid(n)?;
    let labels = label_edges(m);
    let e = labels
        .edge(label)
        .ok_or(SurgeryError::LabelOutOfRange { label, edges: m.num_edges() })?;
    Ok(glue_at_dart(m, m.dark_dart(e), n).map)
}

/// The lowest-labelled edge lying in some two-edge cut.
pub fn find_first_cut_edge(m: &RootedMap) -> Option<Edge> {
    let cut = m.cut_edges();
    label_edges(m).edges_in_order().iter().copied().find(|&e| cut[e])
}

/// A two-edge-cut split of a map, with dart bookkeeping.
#[derive(Clone, Debug)]
pub struct Split {
    /// The part containing the original root.
    pub m1: RootedMap,
    /// Dark dart of the rejoined edge of `m1`.
    pub delta: Dart,
    /// The other part, rooted at the dark dart of its rejoined edge.
    pub m2: RootedMap,
    /// Dart of the original map → dart of `m1` (if it lies there).
    pub m1_darts: Vec<Option<Dart>>,
    /// Dart of the original map → dart of `m2` (if it lies there).
    pub m2_darts: Vec<Option<Dart>>,
    /// The two cut edges, starting with the first cut edge when it joins
    /// the two parts.
    pub cut: (Edge, Edge),
    /// Whether more than two edges joined the root part to the rest.
    pub ambiguous: bool,
}

/// Cuts `m` at its first two-edge cut; `None` for primitive maps.
pub fn split(m: &RootedMap) -> Option<Split> {
    let e = find_first_cut_edge(m)?;
    let faces = m.faces();
    let (f1, f2) = (faces.index[2 * e], faces.index[2 * e + 1]);
    let in_c: Vec<bool> = (0..m.num_edges())
        .map(|g| {
            let (a, b) = (faces.index[2 * g], faces.index[2 * g + 1]);
            (a == f1 && b == f2) || (a == f2 && b == f1)
        })
        .collect();

    // root component of m - C
    let verts = m.vertices();
    let mut inside = vec![false; verts.len()];
    let start = verts.index[m.root()];
    inside[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &d in &verts.cycles[v] {
            if in_c[d / 2] {
                continue;
            }
            let w = verts.index[d ^ 1];
            if !inside[w] {
                inside[w] = true;
                stack.push(w);
            }
        }
    }

    // crossing edges of C, listed along the boundary of F starting after e
    let f_cycle = &faces.cycles[f1];
    let pos = f_cycle.iter().position(|&d| d / 2 == e).expect("e borders F");
    let mut crossing: Vec<Edge> = Vec::new();
    for k in 0..f_cycle.len() {
        let g = f_cycle[(pos + k) % f_cycle.len()] / 2;
        if in_c[g] && inside[verts.index[2 * g]] != inside[verts.index[2 * g + 1]] && !crossing.contains(&g) {
            crossing.push(g);
        }
    }
    let ambiguous = crossing.len() != 2;
    if ambiguous {
        log::warn!(
            "two-edge cut at edge {e}: {} edges join the root part to the rest, using the first two along the face boundary",
            crossing.len()
        );
    }
    let (c1, c2) = (crossing[0], crossing[1]);
    let side = |g: Edge| {
        if inside[verts.index[2 * g]] {
            (2 * g, 2 * g + 1)
        } else {
            (2 * g + 1, 2 * g)
        }
    };
    let (in1, out1) = side(c1);
    let (in2, out2) = side(c2);

    let dark = m.dark_darts().expect("bipartite");
    let part = |keep: bool, j1: Dart, j2: Dart, root: Dart| {
        let darts: Vec<Dart> = (0..m.num_darts()).filter(|&d| inside[verts.index[d]] == keep).collect();
        let mut local = vec![None; m.num_darts()];
        for (i, &d) in darts.iter().enumerate() {
            local[d] = Some(i);
        }
        let sigma: Vec<Dart> = darts.iter().map(|&d| local[m.sigma(d)].unwrap()).collect();
        let alpha: Vec<Dart> = darts
            .iter()
            .map(|&d| {
                let partner = if d == j1 {
                    j2
                } else if d == j2 {
                    j1
                } else {
                    d ^ 1
                };
                local[partner].unwrap()
            })
            .collect();
        let (map, renumber) = RootedMap::from_rotation_system(&sigma, &alpha, local[root].unwrap())
            .expect("cut parts are rotation systems");
        let to_part: Vec<Option<Dart>> = local.iter().map(|l| l.map(|i| renumber[i])).collect();
        (map, to_part)
    };
    let delta_old = if dark[in1] { in1 } else { in2 };
    let root2_old = if dark[out1] { out1 } else { out2 };
    let (m1, m1_darts) = part(true, in1, in2, m.root());
    let (m2, m2_darts) = part(false, out1, out2, root2_old);
    let delta = m1_darts[delta_old].unwrap();
    let cut = (c1, c2);
    Some(Split { m1, delta, m2, m1_darts, m2_darts, cut, ambiguous })
}

/// Output of [`decompose`].
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub m1: RootedMap,
    /// Dark dart of the distinguished edge in `m1`.
    pub distinguished_dart: Dart,
    /// Label of the distinguished edge as inherited from the blocks of `m1`.
    pub distinguished_label: usize,
    pub m2: RootedMap,
}

/// Splits a non-primitive map into `(m1, a, m2)` with `m1 ⧺_a m2 = m`.
///
/// The label `a` is the one the distinguished edge carries when `m1` is
/// rebuilt from its blocks; it agrees with [`label_edges`] whenever `m1` is
/// primitive.
pub fn decompose(m: &RootedMap) -> Result<Decomposition, SurgeryError> {
    check_valid(m)?;
    let s = split(m).ok_or(SurgeryError::Primitive)?;
    let distinguished_label = crate::bijection::inherited_label(&s.m1, s.delta);
    Ok(Decomposition { m1: s.m1, distinguished_dart: s.delta, distinguished_label, m2: s.m2 })
}
