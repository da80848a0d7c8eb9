//! Rooted bicubic planar maps and their decomposition into 3-connected
//! pieces.
//!
//! A rooted bicubic map is glued together from *primitive* (3-edge-connected)
//! blocks. This crate implements the canonical edge labeling, gluing and
//! two-edge-cut decomposition, the bijection with Dyck paths whose ascents
//! are decorated by rooted primitives, exhaustive generation of primitives by
//! 4- and 6-vertex insertions, and the exact counting series behind it all.

pub mod bijection;
pub mod dyck;
pub mod exec;
pub mod labeling;
pub mod planarmap;
pub mod primitives;
pub mod series;
pub mod surgery;

pub use exec::Execution;
pub use planarmap::{CanonicalCode, Dart, Edge, RootedMap};
