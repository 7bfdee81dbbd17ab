//! Every single hull-vertex removal promotes exactly two interior points.
//!
//! The classifier has already established the rigid structure of this case:
//! the promoted points `q_0 .. q_{b-1}` are exactly the interior hull, in
//! matching counterclockwise order, with `p_j` the unique hull vertex beyond
//! edge `q_j q_{j+1}` and the angular pockets at every `p_j` empty. What
//! remains is keyed on the interior-hull ear `q_j q_{j+1} q_{j+2}`:
//! if some ear is empty we cut three points around it (two variants, plus a
//! six-point terminal solved exactly); otherwise the whole outer ring is
//! peeled onto a decomposition of the interior.

use super::{
    assert_face, find_face_with_edge, merge_across, promoted_chain, strictly_inside_convex,
    CaseLabel, Ctx, Face,
};
use crate::geom::orient;

pub(super) fn run(
    ctx: &mut Ctx,
    subset: Vec<u32>,
    hull: &[u32],
    interior: &[u32],
    qs: &[u32],
    ear_j: Option<usize>,
    flank_nonempty: bool,
) -> Vec<Face> {
    match ear_j {
        Some(j) if flank_nonempty => flank_blocked(ctx, subset, hull, qs, j),
        Some(j) if hull.len() >= 4 => flank_clear(ctx, subset, hull, qs, j),
        Some(j) => terminal_six(ctx, subset, hull, j),
        None => peel_ring(ctx, subset, hull, interior, qs),
    }
}

/// Empty interior ear at `j`, but the triangle `p_{j-1} q_j q_{j+2}` is
/// blocked. Remove `p_j`, `p_{j+1}`, `q_{j+1}`; the reduced hull runs
/// `p_{j-1}, q_j, q_{j+2}, p_{j+2}` across the gap. The face on the chord
/// `q_j q_{j+2}` absorbs the quadrilateral around the removed `q_{j+1}`, and
/// four triangles tile the rest of the pocket.
fn flank_blocked(ctx: &mut Ctx, subset: Vec<u32>, hull: &[u32], qs: &[u32], j: usize) -> Vec<Face> {
    let pts = ctx.pts;
    let b = hull.len();
    assert!(b >= 4, "C4_1A: blocked flank forces b >= 4");
    let pm1 = hull[(j + b - 1) % b];
    let pj = hull[j];
    let pj1 = hull[(j + 1) % b];
    let pj2 = hull[(j + 2) % b];
    let (qj, qj1, qj2) = (qs[j], qs[(j + 1) % b], qs[(j + 2) % b]);
    ctx.push_event(CaseLabel::C4_1A, subset.len(), vec![("j", pj as i64)]);

    let gap = promoted_chain(pts, &subset, &[pj, pj1, qj1], pm1, pj2);
    assert_eq!(
        gap,
        vec![pm1, qj, qj2, pj2],
        "C4_1A: pocket chain is not p_(j-1), q_j, q_(j+2), p_(j+2)"
    );
    let sub: Vec<u32> = subset
        .iter()
        .copied()
        .filter(|&v| v != pj && v != pj1 && v != qj1)
        .collect();
    let mut faces = ctx.rec(sub);
    let fi = find_face_with_edge(&faces, qj, qj2);
    // Every vertex of the chord face except q_j lies on q_{j+2}'s side of
    // the line p_j q_j, which is what makes the quadrilateral merge convex.
    let side = orient(pts[pj as usize], pts[qj as usize], pts[qj2 as usize]);
    assert!(side != 0);
    for &v in faces[fi].vertices() {
        if v != qj {
            assert_eq!(
                orient(pts[pj as usize], pts[qj as usize], pts[v as usize]),
                side,
                "C4_1A: chord-face vertex {v} on the wrong side of p_j q_j"
            );
        }
    }
    let quad = assert_face(pts, &[qj, pj, qj1, qj2], "C4_1A quadrilateral");
    faces[fi] = merge_across(pts, &faces[fi], &quad, qj, qj2)
        .unwrap_or_else(|| panic!("C4_1A: chord merge at q={qj} is not convex"));
    faces.push(assert_face(pts, &[pm1, pj, qj], "C4_1A pocket"));
    faces.push(assert_face(pts, &[pj, pj1, qj1], "C4_1A pocket"));
    faces.push(assert_face(pts, &[pj1, qj2, qj1], "C4_1A pocket"));
    faces.push(assert_face(pts, &[pj1, pj2, qj2], "C4_1A pocket"));
    faces
}

/// Empty interior ear at `j` and an empty flank triangle, with b >= 4. The
/// quadrilateral `p_{j-1} q_j q_{j+1} p_{j+1}` is then empty; remove `p_j`,
/// `q_j`, `q_{j+1}`, merge that quadrilateral onto the chord face, and cover
/// the rest of the ear pocket with three triangles.
fn flank_clear(ctx: &mut Ctx, subset: Vec<u32>, hull: &[u32], qs: &[u32], j: usize) -> Vec<Face> {
    let pts = ctx.pts;
    let b = hull.len();
    let pm1 = hull[(j + b - 1) % b];
    let pj = hull[j];
    let pj1 = hull[(j + 1) % b];
    let (qj, qj1) = (qs[j], qs[(j + 1) % b]);
    let quad = assert_face(pts, &[pm1, qj, qj1, pj1], "C4_1B quadrilateral");
    for &x in &subset {
        assert!(
            !strictly_inside_convex(pts, quad.vertices(), pts[x as usize]),
            "C4_1B: quadrilateral at p={pj} contains point {x}"
        );
    }
    ctx.push_event(CaseLabel::C4_1B, subset.len(), vec![("j", pj as i64)]);
    let gap = promoted_chain(pts, &subset, &[pj, qj, qj1], pm1, pj1);
    assert_eq!(gap, vec![pm1, pj1], "C4_1B: gap chord is not empty");
    let sub: Vec<u32> = subset
        .iter()
        .copied()
        .filter(|&v| v != pj && v != qj && v != qj1)
        .collect();
    let mut faces = ctx.rec(sub);
    let fi = find_face_with_edge(&faces, pm1, pj1);
    faces[fi] = merge_across(pts, &faces[fi], &quad, pm1, pj1)
        .unwrap_or_else(|| panic!("C4_1B: chord merge at p={pj} is not convex"));
    faces.push(assert_face(pts, &[pm1, pj, qj], "C4_1B pocket"));
    faces.push(assert_face(pts, &[pj, qj1, qj], "C4_1B pocket"));
    faces.push(assert_face(pts, &[pj, pj1, qj1], "C4_1B pocket"));
    faces
}

/// b = 3 with an empty interior ear: the set is exactly six points (outer
/// triangle plus interior triangle) and needs exactly six faces. Solved by
/// exhaustive search rather than a transcribed figure.
fn terminal_six(ctx: &mut Ctx, subset: Vec<u32>, hull: &[u32], j: usize) -> Vec<Face> {
    assert_eq!(
        subset.len(),
        6,
        "terminal case must be exactly 6 points (3 hull, 3 interior)"
    );
    assert_eq!(hull.len(), 3);
    ctx.push_event(CaseLabel::C4_1BB3, 6, vec![("j", hull[j] as i64)]);
    let (min_faces, faces) = crate::oracle::min_decomposition_subset(ctx.pts, &subset);
    assert_eq!(min_faces, 6, "six-point terminal must need exactly 6 faces");
    faces
}

/// No interior ear is empty. Decompose the interior set; each interior face
/// on edge `q_j q_{j+1}` absorbs the collar triangle `p_j q_{j+1} q_j`
/// (several collars at once when one face serves non-consecutive edges), and
/// the ring closes with the triangles `p_j p_{j+1} q_{j+1}`.
fn peel_ring(
    ctx: &mut Ctx,
    subset: Vec<u32>,
    hull: &[u32],
    interior: &[u32],
    qs: &[u32],
) -> Vec<Face> {
    let b = hull.len();
    ctx.push_event(CaseLabel::C4_2, subset.len(), vec![]);
    let mut faces = ctx.rec(interior.to_vec());
    let pts = ctx.pts;
    let hosts: Vec<usize> = (0..b)
        .map(|k| find_face_with_edge(&faces, qs[k], qs[(k + 1) % b]))
        .collect();
    for k in 0..b {
        assert_ne!(
            hosts[k],
            hosts[(k + 1) % b],
            "C4_2: consecutive collars {k} and {} share an interior face",
            (k + 1) % b
        );
    }
    for k in 0..b {
        let collar = assert_face(pts, &[hull[k], qs[(k + 1) % b], qs[k]], "C4_2 collar");
        let f = hosts[k];
        faces[f] = merge_across(pts, &faces[f], &collar, qs[k], qs[(k + 1) % b])
            .unwrap_or_else(|| panic!("C4_2: collar merge at p={} is not convex", hull[k]));
    }
    for k in 0..b {
        faces.push(assert_face(
            pts,
            &[hull[k], hull[(k + 1) % b], qs[(k + 1) % b]],
            "C4_2 gap",
        ));
    }
    faces
}
