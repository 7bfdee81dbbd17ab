//! Independent validation of convex decompositions and the exact face bound.
//!
//! The verifier deliberately shares only the `orient` predicate with the
//! construction code: the hull is recomputed by gift wrapping, convexity is
//! re-derived with a local walk, and disjointness/coverage are checked
//! combinatorially (edge pairing) plus by exact area accounting in 128-bit
//! integers. With vertices in general position these checks together imply
//! that the faces tile the hull with pairwise disjoint interiors.

use crate::decomp::Decomposition;
use crate::geom::{orient, Point, PointSet};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

/// The five validity axioms plus the face-count bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    /// Every face is a strictly convex counterclockwise cycle.
    V1,
    /// Every face vertex is an index of the point set.
    V2,
    /// Interiors are pairwise disjoint (edge pairing is consistent).
    V3,
    /// The union of the faces is exactly the hull (area identity).
    V4,
    /// Every point appears as a vertex of at least one face.
    V5,
    /// 3 * faces <= 4i + b + 3.
    Bound,
}

/// One failed check with the indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub axiom: Axiom,
    pub witness: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub v1_faces_convex: bool,
    pub v2_vertices_in_p: bool,
    pub v3_interiors_disjoint: bool,
    pub v4_union_is_hull: bool,
    pub v5_all_points_used: bool,
    pub bound_ok: bool,
    pub i: usize,
    pub b: usize,
    pub face_count: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.v1_faces_convex
            && self.v2_vertices_in_p
            && self.v3_interiors_disjoint
            && self.v4_union_is_hull
            && self.v5_all_points_used
            && self.bound_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("hull size must be at least 3, got {0}")]
    HullTooSmall(u64),
}

/// Largest face count the bound admits: floor((4i + b + 3) / 3).
pub fn bound_max_faces(i: u64, b: u64) -> Result<u64, BoundError> {
    if b < 3 {
        return Err(BoundError::HullTooSmall(b));
    }
    Ok((4 * i + b + 3) / 3)
}

/// Check a decomposition against the five axioms and the bound.
/// Failures are reported, never thrown.
pub fn verify_decomposition(ps: &PointSet, d: &Decomposition) -> VerifyReport {
    let pts = ps.points();
    let n = pts.len();
    let hull = wrap_hull(pts);
    let b = hull.len();
    let i = n - b;
    let face_count = d.faces.len();
    let mut failures: Vec<Failure> = Vec::new();

    // V2 first: faces with out-of-range vertices are excluded from the
    // geometric checks instead of panicking them.
    let mut v2 = true;
    let mut usable: Vec<bool> = Vec::with_capacity(face_count);
    for (fi, f) in d.faces.iter().enumerate() {
        let mut ok = true;
        for &v in f.vertices() {
            if v as usize >= n {
                v2 = false;
                ok = false;
                failures.push(Failure { axiom: Axiom::V2, witness: vec![fi as i64, v as i64] });
            }
        }
        usable.push(ok);
    }

    // V1: strictly convex counterclockwise simple cycles.
    let mut v1 = true;
    for (fi, f) in d.faces.iter().enumerate() {
        if !usable[fi] {
            continue;
        }
        if !face_is_strictly_convex(pts, f.vertices()) {
            v1 = false;
            failures.push(Failure { axiom: Axiom::V1, witness: vec![fi as i64] });
        }
    }

    // V3: every undirected edge is either interior (walked once in each
    // direction by two different faces) or a hull edge (walked exactly once,
    // in hull direction); and every hull edge is walked.
    let mut v3 = true;
    let mut dir_edges: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
    for (fi, f) in d.faces.iter().enumerate() {
        if !usable[fi] {
            continue;
        }
        let vs = f.vertices();
        for k in 0..vs.len() {
            let e = (vs[k], vs[(k + 1) % vs.len()]);
            dir_edges.entry(e).or_default().push(fi);
        }
    }
    let hull_dir: HashMap<(u32, u32), ()> = (0..b)
        .map(|k| ((hull[k], hull[(k + 1) % b]), ()))
        .collect();
    let mut seen: Vec<(u32, u32)> = dir_edges.keys().copied().collect();
    seen.sort_unstable();
    for &(u, v) in &seen {
        if u > v {
            continue; // handled from the (min,max) side
        }
        let fwd = dir_edges.get(&(u, v)).map_or(0, |f| f.len());
        let rev = dir_edges.get(&(v, u)).map_or(0, |f| f.len());
        let ok = match (fwd, rev) {
            (1, 1) => {
                // Interior edge: its two sides must be different faces.
                dir_edges[&(u, v)][0] != dir_edges[&(v, u)][0]
            }
            (1, 0) => hull_dir.contains_key(&(u, v)),
            (0, 1) => hull_dir.contains_key(&(v, u)),
            _ => false,
        };
        if !ok {
            v3 = false;
            failures.push(Failure {
                axiom: Axiom::V3,
                witness: vec![u as i64, v as i64, fwd as i64, rev as i64],
            });
        }
    }
    for k in 0..b {
        let e = (hull[k], hull[(k + 1) % b]);
        if dir_edges.get(&e).map_or(0, |f| f.len()) != 1 {
            v3 = false;
            failures.push(Failure { axiom: Axiom::V3, witness: vec![e.0 as i64, e.1 as i64] });
        }
    }

    // V4: twice-signed areas of the faces sum exactly to the hull's.
    let hull_area = twice_area_of(pts, &hull);
    let mut faces_area: i128 = 0;
    for (fi, f) in d.faces.iter().enumerate() {
        if usable[fi] {
            faces_area += twice_area_of(pts, f.vertices());
        }
    }
    let v4 = faces_area == hull_area;
    if !v4 {
        let deficit = (hull_area - faces_area).clamp(i64::MIN as i128, i64::MAX as i128);
        failures.push(Failure { axiom: Axiom::V4, witness: vec![deficit as i64] });
    }

    // V5: every point is a vertex of at least one face.
    let mut used = vec![false; n];
    for (fi, f) in d.faces.iter().enumerate() {
        if !usable[fi] {
            continue;
        }
        for &v in f.vertices() {
            used[v as usize] = true;
        }
    }
    let mut v5 = true;
    for (idx, &u) in used.iter().enumerate() {
        if !u {
            v5 = false;
            failures.push(Failure { axiom: Axiom::V5, witness: vec![idx as i64] });
        }
    }

    let bound_ok = 3 * face_count <= 4 * i + b + 3;
    if !bound_ok {
        failures.push(Failure {
            axiom: Axiom::Bound,
            witness: vec![face_count as i64, i as i64, b as i64],
        });
    }

    VerifyReport {
        v1_faces_convex: v1,
        v2_vertices_in_p: v2,
        v3_interiors_disjoint: v3,
        v4_union_is_hull: v4,
        v5_all_points_used: v5,
        bound_ok,
        i,
        b,
        face_count,
        failures,
    }
}

/// Gift-wrapping hull, counterclockwise from the lexicographic minimum.
/// Deliberately a different algorithm from the construction side.
fn wrap_hull(pts: &[Point]) -> Vec<u32> {
    let n = pts.len();
    debug_assert!(n >= 3);
    let start = (0..n as u32).min_by_key(|&k| pts[k as usize]).unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut next = if cur == 0 { 1 } else { 0 } as u32;
        for cand in 0..n as u32 {
            if cand == cur || cand == next {
                continue;
            }
            if orient(pts[cur as usize], pts[next as usize], pts[cand as usize]) < 0 {
                next = cand;
            }
        }
        if next == start {
            break;
        }
        hull.push(next);
        cur = next;
        assert!(hull.len() <= n, "gift wrapping failed to close");
    }
    hull
}

fn face_is_strictly_convex(pts: &[Point], vs: &[u32]) -> bool {
    let n = vs.len();
    if n < 3 {
        return false;
    }
    // Distinct vertices.
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    // Strict left turns everywhere.
    for k in 0..n {
        let a = pts[vs[k] as usize];
        let b = pts[vs[(k + 1) % n] as usize];
        let c = pts[vs[(k + 2) % n] as usize];
        if orient(a, b, c) <= 0 {
            return false;
        }
    }
    // Exactly one sweep right and one sweep back rules out multiple windings.
    let mut flips = 0;
    for k in 0..n {
        let a = pts[vs[k] as usize];
        let b = pts[vs[(k + 1) % n] as usize];
        let c = pts[vs[(k + 2) % n] as usize];
        if (a < b) != (b < c) {
            flips += 1;
        }
    }
    flips == 2
}

fn twice_area_of(pts: &[Point], vs: &[u32]) -> i128 {
    let mut acc: i128 = 0;
    for k in 0..vs.len() {
        let p = pts[vs[k] as usize];
        let q = pts[vs[(k + 1) % vs.len()] as usize];
        acc += p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128;
    }
    acc
}
