//! Exhaustive minimum convex decomposition for small point sets.
//!
//! Every convex decomposition refines to a triangulation of the point set, so
//! the true minimum is found by enumerating all triangulations and, for each,
//! searching the subsets of internal edges whose removal keeps every merged
//! face strictly convex. The search visits each edge subset once (edges are
//! taken in canonical order) and prunes aggressively: a removal whose merged
//! face is not convex can never become part of a valid coarsening.
//!
//! This is a test fixture, not a feature; the size cap keeps it honest.

use crate::decomp::{CaseTrace, Decomposition, Face};
use crate::geom::{orient, strictly_inside_triangle, Point, PointSet};
use std::collections::BTreeSet;
use thiserror::Error;

/// Default size cap for the exhaustive search.
pub const DEFAULT_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("{n} points exceed the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// One triangulation of the point set: every point is a vertex, every
/// triangle is counterclockwise and empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub triangles: Vec<[u32; 3]>,
}

/// Exact minimum face count with one witness decomposition.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub min_faces: usize,
    pub witness: Decomposition,
}

/// All triangulations of the point set, each exactly once.
pub fn enumerate_triangulations(
    ps: &PointSet,
    limit: usize,
) -> Result<Vec<Triangulation>, OracleError> {
    let n = ps.len();
    if n < 3 {
        return Err(OracleError::TooFewPoints(n));
    }
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    let subset: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::new();
    for_each_triangulation(ps.points(), &subset, &mut |t| {
        out.push(Triangulation { triangles: t.to_vec() })
    });
    Ok(out)
}

/// Exact minimum number of faces over all convex decompositions.
pub fn min_decomposition(ps: &PointSet, limit: usize) -> Result<OracleResult, OracleError> {
    let n = ps.len();
    if n < 3 {
        return Err(OracleError::TooFewPoints(n));
    }
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    let subset: Vec<u32> = (0..n as u32).collect();
    let (min_faces, faces) = min_decomposition_subset(ps.points(), &subset);
    Ok(OracleResult {
        min_faces,
        witness: Decomposition { faces, trace: CaseTrace::default() },
    })
}

/// Core search over a subset carrying global indices. Used directly by the
/// decomposition's six-point terminal case.
pub(crate) fn min_decomposition_subset(pts: &[Point], subset: &[u32]) -> (usize, Vec<Face>) {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable_by_key(|&i| pts[i as usize]);
    let mut best: Option<(usize, Vec<Face>, Vec<Vec<u32>>)> = None;
    for_each_triangulation(pts, &sorted, &mut |tris| {
        let faces: Vec<Face> = tris.iter().map(|t| Face::new(t.to_vec())).collect();
        let internal = internal_edges(tris);
        coarsen(pts, &faces, &internal, 0, &mut best);
    });
    let (min_faces, faces, _) = best.expect("point set admits at least one triangulation");
    (min_faces, faces)
}

// ---------------------------------------------------------------------------
// Triangulation enumeration
// ---------------------------------------------------------------------------

/// Advancing-front enumeration. The frontier holds directed edges that still
/// need a triangle on their left; the smallest one is resolved by every
/// admissible apex in turn. Each final triangulation determines the whole
/// choice sequence, so every one is produced exactly once.
pub(crate) fn for_each_triangulation(
    pts: &[Point],
    sorted_subset: &[u32],
    emit: &mut dyn FnMut(&[[u32; 3]]),
) {
    let hull = crate::geom::hull_of_sorted(pts, sorted_subset);
    let b = hull.len();
    let expected = 2 * (sorted_subset.len() - b) + b - 2;
    let mut st = FrontState {
        pts,
        subset: sorted_subset,
        frontier: BTreeSet::new(),
        segments: Vec::new(),
        triangles: Vec::new(),
        expected,
    };
    for k in 0..b {
        let (u, v) = (hull[k], hull[(k + 1) % b]);
        st.frontier.insert((u, v));
        st.segments.push(undirected(u, v));
    }
    st.fill(emit);
}

struct FrontState<'a> {
    pts: &'a [Point],
    subset: &'a [u32],
    frontier: BTreeSet<(u32, u32)>,
    segments: Vec<(u32, u32)>,
    triangles: Vec<[u32; 3]>,
    expected: usize,
}

fn undirected(u: u32, v: u32) -> (u32, u32) {
    (u.min(v), u.max(v))
}

/// Proper crossing of two segments; shared endpoints do not count and
/// general position rules out collinear overlap.
fn segments_cross(pts: &[Point], s1: (u32, u32), s2: (u32, u32)) -> bool {
    let (p, q) = (pts[s1.0 as usize], pts[s1.1 as usize]);
    let (r, s) = (pts[s2.0 as usize], pts[s2.1 as usize]);
    orient(p, q, r) as i32 * orient(p, q, s) as i32 == -1
        && orient(r, s, p) as i32 * orient(r, s, q) as i32 == -1
}

impl FrontState<'_> {
    fn fill(&mut self, emit: &mut dyn FnMut(&[[u32; 3]])) {
        let Some(&(a, b)) = self.frontier.iter().next() else {
            debug_assert_eq!(self.triangles.len(), self.expected);
            emit(&self.triangles);
            return;
        };
        let (pa, pb) = (self.pts[a as usize], self.pts[b as usize]);
        for ci in 0..self.subset.len() {
            let c = self.subset[ci];
            if c == a || c == b || orient(pa, pb, self.pts[c as usize]) <= 0 {
                continue;
            }
            let pc = self.pts[c as usize];
            if self
                .subset
                .iter()
                .any(|&x| strictly_inside_triangle(self.pts[x as usize], pa, pb, pc))
            {
                continue;
            }
            if !self.admissible((b, c)) || !self.admissible((c, a)) {
                continue;
            }
            // Apply. Each directed edge is either consumed from the frontier
            // or opens a new boundary with the uncovered side on its right.
            let mut consumed: Vec<(u32, u32)> = Vec::new();
            let mut opened: Vec<(u32, u32)> = Vec::new();
            let mut added_segments = 0;
            for e in [(a, b), (b, c), (c, a)] {
                if self.frontier.remove(&e) {
                    consumed.push(e);
                } else {
                    let rev = (e.1, e.0);
                    self.frontier.insert(rev);
                    opened.push(rev);
                    self.segments.push(undirected(e.0, e.1));
                    added_segments += 1;
                }
            }
            self.triangles.push([a, b, c]);
            self.fill(emit);
            self.triangles.pop();
            for _ in 0..added_segments {
                self.segments.pop();
            }
            for e in opened {
                self.frontier.remove(&e);
            }
            for e in consumed {
                self.frontier.insert(e);
            }
        }
    }

    /// A new triangle edge is admissible if it closes against the frontier,
    /// or lies in fresh territory without crossing anything placed so far.
    fn admissible(&self, e: (u32, u32)) -> bool {
        if self.frontier.contains(&e) {
            return true;
        }
        let rev = (e.1, e.0);
        if self.frontier.contains(&rev) {
            // The covered region already touches this segment from our side.
            return false;
        }
        let seg = undirected(e.0, e.1);
        if self.segments.contains(&seg) {
            // Segment buried inside the covered region.
            return false;
        }
        !self.segments.iter().any(|&s| segments_cross(self.pts, s, seg))
    }
}

// ---------------------------------------------------------------------------
// Coarsening: remove internal edges while every face stays convex
// ---------------------------------------------------------------------------

fn internal_edges(tris: &[[u32; 3]]) -> Vec<(u32, u32)> {
    let mut count: Vec<((u32, u32), usize)> = Vec::new();
    for t in tris {
        for k in 0..3 {
            let e = undirected(t[k], t[(k + 1) % 3]);
            match count.iter_mut().find(|(s, _)| *s == e) {
                Some((_, c)) => *c += 1,
                None => count.push((e, 1)),
            }
        }
    }
    let mut edges: Vec<(u32, u32)> = count
        .into_iter()
        .filter(|&(_, c)| c == 2)
        .map(|(e, _)| e)
        .collect();
    edges.sort_unstable();
    edges
}

type Best = Option<(usize, Vec<Face>, Vec<Vec<u32>>)>;

fn canonical_key(faces: &[Face]) -> Vec<Vec<u32>> {
    let mut key: Vec<Vec<u32>> = faces.iter().map(|f| f.vertices().to_vec()).collect();
    key.sort();
    key
}

fn coarsen(pts: &[Point], faces: &[Face], edges: &[(u32, u32)], from: usize, best: &mut Best) {
    let key = canonical_key(faces);
    let better = match best {
        None => true,
        Some((c, _, k)) => faces.len() < *c || (faces.len() == *c && key < *k),
    };
    if better {
        *best = Some((faces.len(), faces.to_vec(), key));
    }
    for k in from..edges.len() {
        let (u, v) = edges[k];
        let f1 = faces
            .iter()
            .position(|f| f.directed_edge_pos(u, v).is_some())
            .expect("unmerged internal edge lost its left face");
        let f2 = faces
            .iter()
            .position(|f| f.directed_edge_pos(v, u).is_some())
            .expect("unmerged internal edge lost its right face");
        debug_assert_ne!(f1, f2);
        if let Some(m) = crate::decomp::merge_across(pts, &faces[f1], &faces[f2], u, v) {
            let mut next: Vec<Face> = Vec::with_capacity(faces.len() - 1);
            for (fi, f) in faces.iter().enumerate() {
                if fi != f1 && fi != f2 {
                    next.push(f.clone());
                }
            }
            next.push(m);
            coarsen(pts, &next, edges, k + 1, best);
        }
    }
}
