//! Recursive construction of convex decompositions.
//!
//! [`decompose`] produces, for any point set in general position, a convex
//! decomposition with `3 * faces <= 4*i + b + 3` where `b` counts hull
//! vertices and `i` interior points. The recursion mirrors an inductive case
//! analysis: empty hull ears are cut and re-merged, otherwise one of four
//! structural situations holds, each of which removes a constant number of
//! points, recurses, and patches the removed pocket with convex pieces. Every
//! structural fact the construction relies on is asserted at runtime; a
//! violation panics with the offending case and indices rather than emitting
//! a bad decomposition.

mod case2;
mod case3;
mod case4;
mod chain;
mod merge;
mod small;

pub(crate) use chain::promoted_chain;
pub(crate) use merge::merge_across;

use crate::geom::{self, cross, orient, Point, PointSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One convex face: a counterclockwise cycle of indices into the root point
/// set, rotated so the smallest index comes first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    verts: Vec<u32>,
}

impl Face {
    pub fn new(mut verts: Vec<u32>) -> Self {
        assert!(verts.len() >= 3, "face needs at least 3 vertices");
        let min_pos = verts
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(k, _)| k)
            .unwrap();
        verts.rotate_left(min_pos);
        Face { verts }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    /// Position `k` such that the directed edge `a -> b` is
    /// `(verts[k], verts[k+1])`, if present.
    pub(crate) fn directed_edge_pos(&self, a: u32, b: u32) -> Option<usize> {
        let n = self.verts.len();
        (0..n).find(|&k| self.verts[k] == a && self.verts[(k + 1) % n] == b)
    }

    pub(crate) fn mapped(&self, pts: &[Point]) -> Vec<Point> {
        self.verts.iter().map(|&v| pts[v as usize]).collect()
    }
}

/// Which structural situation fired, recorded in dispatch order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Base3,
    Convex,
    I1,
    I2,
    C1,
    C2A,
    C2B,
    C3_1,
    C3_2,
    C3_3,
    C4_1A,
    C4_1B,
    C4_1BB3,
    C4_2,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 14] = [
        CaseLabel::Base3,
        CaseLabel::Convex,
        CaseLabel::I1,
        CaseLabel::I2,
        CaseLabel::C1,
        CaseLabel::C2A,
        CaseLabel::C2B,
        CaseLabel::C3_1,
        CaseLabel::C3_2,
        CaseLabel::C3_3,
        CaseLabel::C4_1A,
        CaseLabel::C4_1B,
        CaseLabel::C4_1BB3,
        CaseLabel::C4_2,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::Base3 => "BASE3",
            CaseLabel::Convex => "CONVEX",
            CaseLabel::I1 => "I1",
            CaseLabel::I2 => "I2",
            CaseLabel::C1 => "C1",
            CaseLabel::C2A => "C2A",
            CaseLabel::C2B => "C2B",
            CaseLabel::C3_1 => "C3_1",
            CaseLabel::C3_2 => "C3_2",
            CaseLabel::C3_3 => "C3_3",
            CaseLabel::C4_1A => "C4_1A",
            CaseLabel::C4_1B => "C4_1B",
            CaseLabel::C4_1BB3 => "C4_1B_B3",
            CaseLabel::C4_2 => "C4_2",
        }
    }

    pub fn from_str(s: &str) -> Option<CaseLabel> {
        CaseLabel::ALL.iter().copied().find(|l| l.as_str() == s)
    }
}

/// One dispatch event: the case, the size of the subproblem it fired on, and
/// the pivot indices/counts it chose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub case: CaseLabel,
    pub size: usize,
    pub pivots: Vec<(&'static str, i64)>,
}

/// Ordered record of every case that fired, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CaseTrace {
    pub events: Vec<TraceEvent>,
}

impl CaseTrace {
    pub fn contains(&self, label: CaseLabel) -> bool {
        self.events.iter().any(|e| e.case == label)
    }
}

/// A convex decomposition of the input point set together with its trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub faces: Vec<Face>,
    pub trace: CaseTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("decomposition needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("subset is not in convex position (index {0} lies inside)")]
    NotConvexPosition(u32),
}

/// Decompose the whole point set.
///
/// Deterministic for a fixed input order; every recursive subproblem
/// re-asserts the face-count ledger `3*faces <= 4i + b + 3`.
pub fn decompose(ps: &PointSet) -> Result<Decomposition, DecompError> {
    let n = ps.len();
    if n < 3 {
        return Err(DecompError::TooFewPoints(n));
    }
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_unstable_by_key(|&i| ps.point(i));
    if n <= 512 {
        let mut ctx = Ctx::new(ps.points());
        let faces = ctx.rec(order);
        return Ok(Decomposition {
            faces,
            trace: CaseTrace { events: ctx.trace },
        });
    }
    // Depth can reach Theta(n); run deep inputs on a thread with headroom.
    let stack = (32 << 20) + n.saturating_mul(4096).min(1 << 30);
    let d = std::thread::scope(|scope| {
        let handle = std::thread::Builder::new()
            .name("decompose".into())
            .stack_size(stack)
            .spawn_scoped(scope, move || {
                let mut ctx = Ctx::new(ps.points());
                let faces = ctx.rec(order);
                Decomposition {
                    faces,
                    trace: CaseTrace { events: ctx.trace },
                }
            })
            .expect("spawn decompose worker");
        match handle.join() {
            Ok(d) => d,
            Err(e) => std::panic::resume_unwind(e),
        }
    });
    Ok(d)
}

/// Decomposition of a subset already in convex position: its hull, as one face.
pub fn decompose_convex_position(
    ps: &PointSet,
    subset: &[u32],
) -> Result<Decomposition, DecompError> {
    if subset.len() < 3 {
        return Err(DecompError::TooFewPoints(subset.len()));
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable_by_key(|&i| ps.point(i));
    let hull = geom::hull_of_sorted(ps.points(), &sorted);
    if hull.len() != subset.len() {
        let inside = sorted.iter().copied().find(|v| !hull.contains(v)).unwrap();
        return Err(DecompError::NotConvexPosition(inside));
    }
    Ok(Decomposition {
        faces: vec![Face::new(hull)],
        trace: CaseTrace {
            events: vec![TraceEvent {
                case: CaseLabel::Convex,
                size: subset.len(),
                pivots: vec![],
            }],
        },
    })
}

// ---------------------------------------------------------------------------
// Recursion context and dispatch
// ---------------------------------------------------------------------------

pub(crate) struct Ctx<'a> {
    pub pts: &'a [Point],
    pub trace: Vec<TraceEvent>,
}

/// Hull points beyond one edge of the interior hull: `q`, its successor
/// `q_plus` on the interior hull, and the hull *positions* of the 1 or 2
/// vertices strictly beyond the line through them.
#[derive(Debug, Clone)]
pub(crate) struct HalfPlaneWitness {
    pub q: u32,
    pub q_plus: u32,
    pub crossing: Vec<usize>,
}

/// Everything the dispatcher decided for one subproblem.
pub(crate) struct Classified {
    pub hull: Vec<u32>,
    pub interior: Vec<u32>,
    pub dispatch: Dispatch,
}

pub(crate) enum Dispatch {
    Base3,
    ConvexPosition,
    OneInterior,
    TwoInterior,
    /// Hull ear at position `j` has an empty interior.
    EmptyEar { j: usize },
    /// Two hull vertices beyond one interior-hull edge.
    Case2 {
        wit: HalfPlaneWitness,
        chain: Vec<u32>,
        l: usize,
        ear_empty: bool,
    },
    /// Removing hull vertex `j` promotes >= 3 interior points.
    Case3 {
        j: usize,
        chain: Vec<u32>,
        first_empty: bool,
        last_empty: bool,
    },
    /// Every removal promotes exactly 2; `qs[j]` is the first promoted point
    /// after `p_{j-1}`. `ear_j` is the smallest position whose interior-hull
    /// ear is empty, if any.
    Case4 {
        qs: Vec<u32>,
        ear_j: Option<usize>,
        /// For `ear_j = Some(j)`: whether the triangle `(p_{j-1}, q_j, q_{j+2})`
        /// contains a point (selects the first sub-construction).
        flank_nonempty: bool,
    },
}

impl<'a> Ctx<'a> {
    pub fn new(pts: &'a [Point]) -> Self {
        Ctx { pts, trace: Vec::new() }
    }

    pub fn push_event(&mut self, case: CaseLabel, size: usize, pivots: Vec<(&'static str, i64)>) {
        self.trace.push(TraceEvent { case, size, pivots });
    }

    /// Decompose a subset (indices sorted by coordinate). Returns the faces;
    /// trace events accumulate in dispatch order.
    pub fn rec(&mut self, subset: Vec<u32>) -> Vec<Face> {
        let n_s = subset.len();
        let c = classify(self.pts, &subset);
        let b = c.hull.len();
        let i = n_s - b;
        let faces = match c.dispatch {
            Dispatch::Base3 => {
                self.push_event(CaseLabel::Base3, n_s, vec![]);
                vec![Face::new(c.hull.clone())]
            }
            Dispatch::ConvexPosition => {
                self.push_event(CaseLabel::Convex, n_s, vec![]);
                vec![Face::new(c.hull.clone())]
            }
            Dispatch::OneInterior => small::one_interior(self, &c.hull, c.interior[0]),
            Dispatch::TwoInterior => small::two_interior(self, &c.hull, &c.interior),
            Dispatch::EmptyEar { j } => self.case1(subset, &c.hull, j),
            Dispatch::Case2 { wit, chain, l, ear_empty } => {
                case2::run(self, subset, &c.hull, &wit, chain, l, ear_empty)
            }
            Dispatch::Case3 { j, chain, first_empty, last_empty } => {
                case3::run(self, subset, &c.hull, j, chain, first_empty, last_empty)
            }
            Dispatch::Case4 { qs, ear_j, flank_nonempty } => {
                case4::run(self, subset, &c.hull, &c.interior, &qs, ear_j, flank_nonempty)
            }
        };
        assert!(
            3 * faces.len() <= 4 * i + b + 3,
            "face-count ledger violated: {} faces with i={i}, b={b}",
            faces.len()
        );
        faces
    }

    /// Empty hull ear: recurse without `p_j`, then grow the ear back onto the
    /// face that carries the chord.
    fn case1(&mut self, subset: Vec<u32>, hull: &[u32], j: usize) -> Vec<Face> {
        let b = hull.len();
        let prev = hull[(j + b - 1) % b];
        let pj = hull[j];
        let next = hull[(j + 1) % b];
        self.push_event(CaseLabel::C1, subset.len(), vec![("j", pj as i64)]);
        let sub: Vec<u32> = subset.iter().copied().filter(|&v| v != pj).collect();
        let mut faces = self.rec(sub);
        let fi = find_face_with_edge(&faces, prev, next);
        let ear = Face::new(vec![prev, pj, next]);
        faces[fi] = merge_across(self.pts, &faces[fi], &ear, prev, next)
            .unwrap_or_else(|| panic!("C1: ear merge at j={pj} is not convex"));
        faces
    }
}

/// Decide which case fires for this subset, computing and asserting the
/// structural facts the case relies on.
pub(crate) fn classify(pts: &[Point], subset: &[u32]) -> Classified {
    let n_s = subset.len();
    assert!(n_s >= 3);
    let hull = geom::hull_of_sorted(pts, subset);
    let b = hull.len();
    let i = n_s - b;
    let interior = interior_sorted(subset, &hull);

    if n_s == 3 {
        return Classified { hull, interior, dispatch: Dispatch::Base3 };
    }
    if i == 0 {
        return Classified { hull, interior, dispatch: Dispatch::ConvexPosition };
    }
    if i == 1 {
        return Classified { hull, interior, dispatch: Dispatch::OneInterior };
    }
    if i == 2 {
        return Classified { hull, interior, dispatch: Dispatch::TwoInterior };
    }

    if let Some(j) = find_empty_ear(pts, subset, &hull) {
        return Classified { hull, interior, dispatch: Dispatch::EmptyEar { j } };
    }

    // Every ear is blocked, so each interior-hull edge has at most two hull
    // vertices beyond it.
    let ihull = geom::hull_of_sorted(pts, &interior);
    let wits = half_plane_witnesses(pts, &hull, &ihull);
    if let Some(wit) = wits.iter().find(|w| w.crossing.len() == 2) {
        let j = wit.crossing[0];
        let pj = hull[j];
        let pj1 = hull[(j + 1) % b];
        let left = hull[(j + b - 1) % b];
        let right = hull[(j + 2) % b];
        let chain = promoted_chain(pts, subset, &[pj, pj1], left, right);
        let m = chain.len() - 2;
        let l = chain[1..=m]
            .iter()
            .position(|&x| x == wit.q)
            .map(|k| k + 1)
            .unwrap_or_else(|| panic!("C2: q={} not on the promoted chain", wit.q));
        assert_eq!(
            chain[l + 1],
            wit.q_plus,
            "C2: successor of q on the reduced hull is not q+"
        );
        let ear_empty = triangle_empty(pts, subset, chain[l - 1], chain[l], chain[l + 1]);
        let wit = wit.clone();
        return Classified {
            hull,
            interior,
            dispatch: Dispatch::Case2 { wit, chain, l, ear_empty },
        };
    }

    // Promoted chains for every single hull-vertex removal.
    let chains: Vec<Vec<u32>> = (0..b)
        .map(|j| {
            let prev = hull[(j + b - 1) % b];
            let next = hull[(j + 1) % b];
            promoted_chain(pts, subset, &[hull[j]], prev, next)
        })
        .collect();

    if let Some(j) = (0..b).find(|&j| chains[j].len() - 2 >= 3) {
        let chain = chains[j].clone();
        let m = chain.len() - 2;
        let first_empty = triangle_empty(pts, subset, chain[0], chain[1], chain[2]);
        let last_empty = triangle_empty(pts, subset, chain[m - 1], chain[m], chain[m + 1]);
        return Classified {
            hull,
            interior,
            dispatch: Dispatch::Case3 { j, chain, first_empty, last_empty },
        };
    }

    // Structural facts behind the final case; all are consequences of the
    // emptiness of the angular pockets asserted below.
    for (j, ch) in chains.iter().enumerate() {
        assert_eq!(
            ch.len() - 2,
            2,
            "C4: removal of hull vertex {} must promote exactly 2 points",
            hull[j]
        );
    }
    let qs: Vec<u32> = chains.iter().map(|ch| ch[1]).collect();
    for j in 0..b {
        assert_eq!(
            chains[j][2],
            qs[(j + 1) % b],
            "C4: second promoted point of {} is not the next q",
            hull[j]
        );
    }
    // The q_j are exactly the interior hull, in matching counterclockwise order.
    assert_eq!(ihull.len(), b, "C4: interior hull size must equal b");
    for j in 0..b {
        let pos = ihull.iter().position(|&x| x == qs[j]);
        let pos = pos.unwrap_or_else(|| panic!("C4: q_{j} not on the interior hull"));
        assert_eq!(
            ihull[(pos + 1) % b],
            qs[(j + 1) % b],
            "C4: interior-hull order disagrees with the q labelling"
        );
    }
    // Exactly one hull vertex beyond each interior-hull edge, and it is p_j.
    for w in &wits {
        let j = qs.iter().position(|&x| x == w.q).unwrap();
        assert_eq!(
            w.crossing,
            vec![j],
            "C4: hull vertex beyond edge q_{j} q_{} is not p_{j}",
            (j + 1) % b
        );
    }
    // Angular pockets at every hull vertex contain no point.
    for j in 0..b {
        let pj = pts[hull[j] as usize];
        let prev = pts[hull[(j + b - 1) % b] as usize];
        let next = pts[hull[(j + 1) % b] as usize];
        let qj = pts[qs[j] as usize];
        let qj1 = pts[qs[(j + 1) % b] as usize];
        for &x in subset {
            let xp = pts[x as usize];
            assert!(
                !geom::in_open_wedge(pj, qj, prev, xp),
                "C4: pocket toward p_{} at p_{} contains point {}",
                hull[(j + b - 1) % b],
                hull[j],
                x
            );
            assert!(
                !geom::in_open_wedge(pj, next, qj1, xp),
                "C4: pocket toward p_{} at p_{} contains point {}",
                hull[(j + 1) % b],
                hull[j],
                x
            );
        }
    }

    let ear_j =
        (0..b).find(|&j| triangle_empty(pts, subset, qs[j], qs[(j + 1) % b], qs[(j + 2) % b]));
    let flank_nonempty = ear_j.map_or(false, |j| {
        !triangle_empty(pts, subset, hull[(j + b - 1) % b], qs[j], qs[(j + 2) % b])
    });
    Classified {
        hull,
        interior,
        dispatch: Dispatch::Case4 { qs, ear_j, flank_nonempty },
    }
}

// ---------------------------------------------------------------------------
// Shared predicates
// ---------------------------------------------------------------------------

/// Subset indices not on the hull, preserving the subset's sort order.
pub(crate) fn interior_sorted(subset: &[u32], hull: &[u32]) -> Vec<u32> {
    let mut on_hull = hull.to_vec();
    on_hull.sort_unstable();
    subset
        .iter()
        .copied()
        .filter(|v| on_hull.binary_search(v).is_err())
        .collect()
}

/// True iff no subset point lies strictly inside triangle `abc`.
pub(crate) fn triangle_empty(pts: &[Point], subset: &[u32], a: u32, b: u32, c: u32) -> bool {
    let (pa, pb, pc) = (pts[a as usize], pts[b as usize], pts[c as usize]);
    subset
        .iter()
        .all(|&x| !geom::strictly_inside_triangle(pts[x as usize], pa, pb, pc))
}

/// Smallest hull position whose ear triangle contains no subset point.
pub(crate) fn find_empty_ear(pts: &[Point], subset: &[u32], hull: &[u32]) -> Option<usize> {
    let b = hull.len();
    (0..b).find(|&j| {
        triangle_empty(pts, subset, hull[(j + b - 1) % b], hull[j], hull[(j + 1) % b])
    })
}

/// For every interior-hull vertex `q`, the hull vertices strictly beyond the
/// line through `q` and its successor. Asserts the counts the construction
/// depends on: at least one (else q would be on the hull) and at most two
/// (a third would leave an empty ear).
pub(crate) fn half_plane_witnesses(
    pts: &[Point],
    hull: &[u32],
    ihull: &[u32],
) -> Vec<HalfPlaneWitness> {
    let b = hull.len();
    let bi = ihull.len();
    let mut out = Vec::with_capacity(bi);
    for k in 0..bi {
        let q = ihull[k];
        let q_plus = ihull[(k + 1) % bi];
        let (pq, pq1) = (pts[q as usize], pts[q_plus as usize]);
        let mut crossing: Vec<usize> =
            (0..b).filter(|&j| orient(pq, pq1, pts[hull[j] as usize]) < 0).collect();
        assert!(
            !crossing.is_empty(),
            "no hull vertex beyond interior-hull edge {q}-{q_plus}"
        );
        assert!(
            crossing.len() <= 2,
            "{} hull vertices beyond interior-hull edge {q}-{q_plus}",
            crossing.len()
        );
        if crossing.len() == 2 {
            // The two must be consecutive along the hull; order them so the
            // second follows the first counterclockwise.
            let (x, y) = (crossing[0], crossing[1]);
            if (x + 1) % b == y {
                // already ordered
            } else if (y + 1) % b == x {
                crossing.swap(0, 1);
            } else {
                panic!("hull vertices beyond edge {q}-{q_plus} are not consecutive");
            }
        }
        out.push(HalfPlaneWitness { q, q_plus, crossing });
    }
    out
}

/// Grow the empty ear `(a, mid, c)` back onto the face that carries the
/// chord `a -> c`; the union must be convex.
pub(crate) fn ear_merge(pts: &[Point], faces: &mut [Face], a: u32, mid: u32, c: u32, what: &str) {
    let fi = find_face_with_edge(faces, a, c);
    let ear = assert_face(pts, &[a, mid, c], what);
    faces[fi] = merge_across(pts, &faces[fi], &ear, a, c)
        .unwrap_or_else(|| panic!("{what}: ear merge at {mid} is not convex"));
}

/// Index of the unique face whose boundary walks the directed edge `a -> b`.
pub(crate) fn find_face_with_edge(faces: &[Face], a: u32, b: u32) -> usize {
    let mut found: Option<usize> = None;
    for (fi, f) in faces.iter().enumerate() {
        if f.directed_edge_pos(a, b).is_some() {
            assert!(
                found.is_none(),
                "edge {a}->{b} lies on two faces ({} and {fi})",
                found.unwrap()
            );
            found = Some(fi);
        }
    }
    found.unwrap_or_else(|| panic!("no face carries edge {a}->{b}"))
}

/// Debug helper: a face cycle must be counterclockwise and strictly convex.
pub(crate) fn assert_face(pts: &[Point], verts: &[u32], what: &str) -> Face {
    let mapped: Vec<Point> = verts.iter().map(|&v| pts[v as usize]).collect();
    assert!(
        geom::is_strictly_convex(&mapped),
        "{what}: cycle {verts:?} is not a strictly convex ccw polygon"
    );
    Face::new(verts.to_vec())
}

/// True iff `x` is strictly inside the convex counterclockwise cycle.
pub(crate) fn strictly_inside_convex(pts: &[Point], cycle: &[u32], x: Point) -> bool {
    let n = cycle.len();
    (0..n).all(|k| {
        let a = pts[cycle[k] as usize];
        let b = pts[cycle[(k + 1) % n] as usize];
        cross(a, b, x) > 0
    })
}

// ---------------------------------------------------------------------------
// Root-level probe (used by the generators to hit targeted cases)
// ---------------------------------------------------------------------------

/// What `decompose` would do first on this point set, without recursing.
#[derive(Debug, Clone)]
pub(crate) struct Probe {
    pub label: CaseLabel,
    /// Hull position for the C1/C3/C4 pivot.
    pub j: Option<usize>,
    pub q: Option<u32>,
    pub l: Option<usize>,
    pub chain: Option<Vec<u32>>,
    pub hull: Vec<u32>,
}

pub(crate) fn dispatch_probe(pts: &[Point], subset: &[u32]) -> Probe {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable_by_key(|&i| pts[i as usize]);
    let c = classify(pts, &sorted);
    let (label, j, q, l, chain) = match c.dispatch {
        Dispatch::Base3 => (CaseLabel::Base3, None, None, None, None),
        Dispatch::ConvexPosition => (CaseLabel::Convex, None, None, None, None),
        Dispatch::OneInterior => (CaseLabel::I1, None, Some(c.interior[0]), None, None),
        Dispatch::TwoInterior => (CaseLabel::I2, None, None, None, None),
        Dispatch::EmptyEar { j } => (CaseLabel::C1, Some(j), None, None, None),
        Dispatch::Case2 { wit, chain, l, ear_empty } => (
            if ear_empty { CaseLabel::C2A } else { CaseLabel::C2B },
            Some(wit.crossing[0]),
            Some(wit.q),
            Some(l),
            Some(chain),
        ),
        Dispatch::Case3 { j, chain, first_empty, last_empty } => {
            let label = match (first_empty, last_empty) {
                (true, true) => CaseLabel::C3_1,
                (false, false) => CaseLabel::C3_2,
                _ => CaseLabel::C3_3,
            };
            (label, Some(j), None, None, Some(chain))
        }
        Dispatch::Case4 { qs, ear_j, flank_nonempty } => {
            let label = match ear_j {
                None => CaseLabel::C4_2,
                Some(_) if flank_nonempty => CaseLabel::C4_1A,
                Some(_) if c.hull.len() >= 4 => CaseLabel::C4_1B,
                Some(_) => CaseLabel::C4_1BB3,
            };
            (label, ear_j, None, None, Some(qs))
        }
    };
    Probe { label, j, q, l, chain, hull: c.hull }
}

#[cfg(test)]
mod tests;
