//! Dyck paths, their ascent labeling, merge targets and composition, and
//! paths whose ascents are decorated by rooted primitives.
//!
//! Up-steps are labelled ascent by ascent with consecutive blocks; inside an
//! ascent the labels decrease upwards, so the topmost step of the first
//! ascent has label 1.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::planarmap::{CanonicalCode, RootedMap};
use crate::primitives::PrimitiveCatalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("not a Dyck word: {0}")]
    NotDyck(String),
    #[error("label {label} out of range 1..={ups}")]
    LabelOutOfRange { label: usize, ups: usize },
    #[error("ascent {index} has length {len}, not a positive multiple of 3")]
    AscentLength { index: usize, len: usize },
    #[error("path has {ascents} ascents but {decorations} decorations")]
    DecorationCount { ascents: usize, decorations: usize },
    #[error("decoration of ascent {index} should be a primitive with {edges} edges")]
    BadDecoration { index: usize, edges: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("catalog stops at {have} vertices, {need} needed")]
    CatalogTooSmall { have: usize, need: usize },
}

/// A balanced word over `{U, D}` that never dips below zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Lexicographic with `U < D`.
impl Ord for DyckPath {
    fn cmp(&self, other: &Self) -> Ordering {
        self.steps.cmp(&other.steps)
    }
}

impl PartialOrd for DyckPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, DyckError> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h < 0 {
                return Err(DyckError::NotDyck(format!("goes below zero at step {}", i + 1)));
            }
        }
        if h != 0 {
            return Err(DyckError::NotDyck(format!("ends at height {h}")));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath::default()
    }

    /// `U^a D^b U^c ...` from alternating run lengths, starting with `U`.
    pub fn from_runs(runs: &[usize]) -> Result<Self, DyckError> {
        let mut steps = Vec::new();
        for (i, &r) in runs.iter().enumerate() {
            let s = if i % 2 == 0 { Step::U } else { Step::D };
            steps.extend(std::iter::repeat_n(s, r));
        }
        DyckPath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Maximal ascents as `(start, length)`.
    pub fn ascents(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.steps.len() {
            if self.steps[i] == Step::U {
                let start = i;
                while i < self.steps.len() && self.steps[i] == Step::U {
                    i += 1;
                }
                out.push((start, i - start));
            } else {
                i += 1;
            }
        }
        out
    }

    /// Partner of every step under parenthesis matching.
    pub fn matching(&self) -> Vec<usize> {
        let mut partner = vec![0; self.steps.len()];
        let mut open = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::U => open.push(i),
                Step::D => {
                    let j = open.pop().expect("balanced");
                    partner[i] = j;
                    partner[j] = i;
                }
            }
        }
        partner
    }

    /// Label of each up-step (`None` at down-steps).
    pub fn label_up_steps(&self) -> Vec<Option<usize>> {
        let mut labels = vec![None; self.steps.len()];
        let mut offset = 0;
        for (start, len) in self.ascents() {
            for k in 0..len {
                // bottom step gets the largest label of the block
                labels[start + k] = Some(offset + len - k);
            }
            offset += len;
        }
        labels
    }

    /// Position of the up-step carrying `label`.
    pub fn up_step_with_label(&self, label: usize) -> Result<usize, DyckError> {
        self.label_up_steps()
            .iter()
            .position(|&l| l == Some(label))
            .ok_or(DyckError::LabelOutOfRange { label, ups: self.semilength() })
    }

    /// For each ascent but the last: the label of the up-step matched by the
    /// final down-step of the descent that follows it.
    pub fn merge_targets(&self) -> Vec<usize> {
        let labels = self.label_up_steps();
        let partner = self.matching();
        let asc = self.ascents();
        asc.windows(2)
            .map(|w| {
                let last_down = w[1].0 - 1;
                labels[partner[last_down]].expect("matched to an up-step")
            })
            .collect()
    }

    /// `self ∘_a other`: splice `other` right after the down-step matching
    /// the up-step labelled `a`.
    pub fn compose(&self, a: usize, other: &DyckPath) -> Result<DyckPath, DyckError> {
        let u = self.up_step_with_label(a)?;
        let d = self.matching()[u];
        let mut steps = self.steps[..=d].to_vec();
        steps.extend_from_slice(&other.steps);
        steps.extend_from_slice(&self.steps[d + 1..]);
        Ok(DyckPath { steps })
    }

    /// Run-length form such as `U3D2U3D4`.
    pub fn compact(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.steps.len() {
            let s = self.steps[i];
            let mut j = i;
            while j < self.steps.len() && self.steps[j] == s {
                j += 1;
            }
            out.push(if s == Step::U { 'U' } else { 'D' });
            if j - i > 1 {
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }
}

/// Runs separated by spaces, e.g. `UUU DD UUU DDDD`.
impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 && self.steps[i - 1] != *s {
                f.write_str(" ")?;
            }
            f.write_str(if *s == Step::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

/// Accepts letters with optional repeat counts; whitespace is ignored, so
/// `UUU DDD`, `U3D3` and `U3 D 2 D` all parse.
impl FromStr for DyckPath {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut steps = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let step = match chars[i] {
                'U' | 'u' => Step::U,
                'D' | 'd' => Step::D,
                c => return Err(DyckError::NotDyck(format!("unexpected character {c:?}"))),
            };
            i += 1;
            let mut count = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                count.push(chars[i]);
                i += 1;
            }
            let k = if count.is_empty() {
                1
            } else {
                count.parse().map_err(|_| DyckError::NotDyck(format!("bad count {count}")))?
            };
            steps.extend(std::iter::repeat_n(step, k));
        }
        DyckPath::new(steps)
    }
}

/// A Dyck path whose ascents all have length `3j` and carry a rooted
/// primitive with `3j` edges.
#[derive(Clone, Debug)]
pub struct DecoratedDyckPath {
    path: DyckPath,
    decorations: Vec<RootedMap>,
}

/// Equal paths and rooted-isomorphic decorations.
impl PartialEq for DecoratedDyckPath {
    fn eq(&self, other: &Self) -> bool {
        self.path == other.path
            && self.decorations.len() == other.decorations.len()
            && self
                .decorations
                .iter()
                .zip(&other.decorations)
                .all(|(a, b)| a.is_isomorphic(b))
    }
}

impl Eq for DecoratedDyckPath {}

impl DecoratedDyckPath {
    pub fn new(path: DyckPath, decorations: Vec<RootedMap>) -> Result<Self, DyckError> {
        let asc = path.ascents();
        if asc.len() != decorations.len() {
            return Err(DyckError::DecorationCount { ascents: asc.len(), decorations: decorations.len() });
        }
        for (index, (&(_, len), b)) in asc.iter().zip(&decorations).enumerate() {
            if len % 3 != 0 {
                return Err(DyckError::AscentLength { index, len });
            }
            if b.num_edges() != len || !b.is_valid() || !b.is_primitive() {
                return Err(DyckError::BadDecoration { index, edges: len });
            }
        }
        Ok(DecoratedDyckPath { path, decorations })
    }

    /// Single ascent decorated by a primitive `b`.
    pub fn primitive(b: RootedMap) -> Result<Self, DyckError> {
        let k = b.num_edges();
        let path = DyckPath::from_runs(&[k, k])?;
        DecoratedDyckPath::new(path, vec![b])
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn decorations(&self) -> &[RootedMap] {
        &self.decorations
    }

    /// Number of vertices of the encoded map (`2n` for semilength `3n`).
    pub fn vertices(&self) -> usize {
        2 * self.path.semilength() / 3
    }

    pub(crate) fn from_parts_unchecked(path: DyckPath, decorations: Vec<RootedMap>) -> Self {
        DecoratedDyckPath { path, decorations }
    }
}

/// Dyck paths of semilength `3n` whose ascents are `3j` with `allowed(j)`,
/// sorted lexicographically (`U < D`).
pub fn ascent_shapes(n: usize, allowed: impl Fn(usize) -> bool) -> Vec<DyckPath> {
    fn go(
        steps: &mut Vec<Step>,
        height: usize,
        ups_left: usize,
        allowed: &dyn Fn(usize) -> bool,
        out: &mut Vec<DyckPath>,
    ) {
        for j in 1..=ups_left / 3 {
            if !allowed(j) {
                continue;
            }
            let a = 3 * j;
            let top = height + a;
            let rest = ups_left - a;
            let descents: Vec<usize> = if rest == 0 { vec![top] } else { (1..=top).collect() };
            for d in descents {
                let mark = steps.len();
                steps.extend(std::iter::repeat_n(Step::U, a));
                steps.extend(std::iter::repeat_n(Step::D, d));
                if rest == 0 {
                    out.push(DyckPath { steps: steps.clone() });
                } else {
                    go(steps, top - d, rest, allowed, out);
                }
                steps.truncate(mark);
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut Vec::new(), 0, 3 * n, &allowed, &mut out);
    }
    out.sort();
    out
}

/// All decorated paths of semilength `3n`: shapes in lexicographic order,
/// decorations in catalog order with the first ascent most significant.
pub fn enumerate_decorated(n: usize, catalog: &PrimitiveCatalog) -> Result<Vec<DecoratedDyckPath>, DyckError> {
    if catalog.max_vertices() < 2 * n {
        return Err(DyckError::CatalogTooSmall { have: catalog.max_vertices(), need: 2 * n });
    }
    let shapes = ascent_shapes(n, |j| !catalog.rooted(2 * j).is_empty());
    let mut out = Vec::new();
    for path in shapes {
        let choices: Vec<&[RootedMap]> =
            path.ascents().iter().map(|&(_, len)| catalog.rooted(2 * len / 3)).collect();
        let mut idx = vec![0; choices.len()];
        'odometer: loop {
            let decorations = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            out.push(DecoratedDyckPath { path: path.clone(), decorations });
            // last ascent turns fastest
            let mut k = idx.len();
            loop {
                if k == 0 {
                    break 'odometer;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    Ok(out)
}

/// Writes the `path` / `decor` text form. Decorations found in the catalog
/// are written as handles `P<vertices>.<index>`, others as inline codes.
pub fn write_decorated(p: &DecoratedDyckPath, catalog: Option<&PrimitiveCatalog>) -> String {
    let mut out = format!("path {}\n", p.path);
    for (i, b) in p.decorations.iter().enumerate() {
        let code = b.canonical_code();
        match catalog.and_then(|c| c.handle_of(&code)) {
            Some(h) => out.push_str(&format!("decor {i} {h}\n")),
            None => out.push_str(&format!("decor {i} code {code}\n")),
        }
    }
    out
}

/// Parses the `path` / `decor` text form; handles are resolved against the
/// catalog.
pub fn parse_decorated(src: &str, catalog: &PrimitiveCatalog) -> Result<DecoratedDyckPath, DyckError> {
    let perr = |line: usize, message: String| DyckError::Parse { line, message };
    let mut path: Option<DyckPath> = None;
    let mut decor: Vec<(usize, usize, RootedMap)> = Vec::new();
    let mut last = 0;
    for (i, raw) in src.lines().enumerate() {
        let no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        last = no;
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "path" => {
                if path.is_some() {
                    return Err(perr(no, "second `path` line".into()));
                }
                path = Some(rest.parse().map_err(|e: DyckError| perr(no, e.to_string()))?);
            }
            "decor" => {
                let mut it = rest.split_whitespace();
                let idx: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| perr(no, "missing ascent index".into()))?;
                let id = it.next().ok_or_else(|| perr(no, "missing primitive id".into()))?;
                let map = if id == "code" {
                    let text: Vec<&str> = it.collect();
                    let code: CanonicalCode = text.join(" ").parse().map_err(|e| perr(no, format!("{e}")))?;
                    code.to_map().map_err(|e| perr(no, e.to_string()))?
                } else {
                    if it.next().is_some() {
                        return Err(perr(no, "trailing tokens".into()));
                    }
                    catalog.resolve_handle(id).map_err(|m| perr(no, m))?.clone()
                };
                if decor.iter().any(|(k, _, _)| *k == idx) {
                    return Err(perr(no, format!("ascent {idx} decorated twice")));
                }
                decor.push((idx, no, map));
            }
            other => return Err(perr(no, format!("unknown keyword {other:?}"))),
        }
    }
    let path = path.ok_or_else(|| perr(last.max(1), "missing `path` line".into()))?;
    let k = path.ascents().len();
    decor.sort_by_key(|(i, _, _)| *i);
    if let Some((idx, no, _)) = decor.iter().find(|(i, _, _)| *i >= k) {
        return Err(perr(*no, format!("ascent index {idx} out of range (path has {k} ascents)")));
    }
    if decor.len() != k {
        return Err(perr(last, format!("path has {k} ascents but {} decorations", decor.len())));
    }
    DecoratedDyckPath::new(path, decor.into_iter().map(|(_, _, m)| m).collect())
}
