//! Direct constructions for one and two interior points. These produce the
//! exact face counts (3 and 4) without recursion.

use super::{assert_face, CaseLabel, Ctx, Face};
use crate::geom::{orient, strictly_inside_triangle};

/// One interior point `q`: pick the first hull triple whose triangle strictly
/// contains `q` and join `q` to its three corners. The three pieces are the
/// hull chains between consecutive corners, closed through `q`.
pub(super) fn one_interior(ctx: &mut Ctx, hull: &[u32], q: u32) -> Vec<Face> {
    let pts = ctx.pts;
    let b = hull.len();
    let qp = pts[q as usize];
    let mut triple: Option<(usize, usize, usize)> = None;
    'outer: for a in 0..b {
        for c in a + 1..b {
            for d in c + 1..b {
                if strictly_inside_triangle(
                    qp,
                    pts[hull[a] as usize],
                    pts[hull[c] as usize],
                    pts[hull[d] as usize],
                ) {
                    triple = Some((a, c, d));
                    break 'outer;
                }
            }
        }
    }
    // A fan triangulation from any hull vertex covers the hull, so some
    // triple contains q.
    let (a, c, d) = triple.expect("i=1: no hull triple contains the interior point");
    ctx.push_event(
        CaseLabel::I1,
        b + 1,
        vec![
            ("q", q as i64),
            ("a", hull[a] as i64),
            ("b", hull[c] as i64),
            ("c", hull[d] as i64),
        ],
    );
    let mut faces = Vec::with_capacity(3);
    for &(s, t) in &[(a, c), (c, d), (d, a)] {
        let mut cycle = vec![q];
        let mut k = s;
        loop {
            cycle.push(hull[k]);
            if k == t {
                break;
            }
            k = (k + 1) % b;
        }
        faces.push(assert_face(pts, &cycle, "I1 face"));
    }
    faces
}

/// Two interior points `q`, `r`: the directed line q -> r leaves the hull
/// through one edge beyond `r` and one behind `q`. Those two edges get apex
/// triangles; the two hull arcs on either side close through the segment qr.
pub(super) fn two_interior(ctx: &mut Ctx, hull: &[u32], interior: &[u32]) -> Vec<Face> {
    let pts = ctx.pts;
    let b = hull.len();
    let (q, r) = (interior[0], interior[1]);
    let (qp, rp) = (pts[q as usize], pts[r as usize]);
    let side: Vec<i8> = hull
        .iter()
        .map(|&h| orient(qp, rp, pts[h as usize]))
        .collect();
    debug_assert!(side.iter().all(|&s| s != 0));
    // Walking counterclockwise, the crossing beyond r moves from the right
    // arc to the left arc; the crossing behind q moves back.
    let north = (0..b)
        .find(|&k| side[k] < 0 && side[(k + 1) % b] > 0)
        .expect("i=2: no forward crossing edge");
    let south = (0..b)
        .find(|&k| side[k] > 0 && side[(k + 1) % b] < 0)
        .expect("i=2: no backward crossing edge");
    ctx.push_event(CaseLabel::I2, b + 2, vec![("q", q as i64), ("r", r as i64)]);

    let mut left_arc: Vec<u32> = Vec::new();
    let mut k = (north + 1) % b;
    loop {
        left_arc.push(hull[k]);
        if k == south {
            break;
        }
        k = (k + 1) % b;
    }
    let mut right_arc: Vec<u32> = Vec::new();
    let mut k = (south + 1) % b;
    loop {
        right_arc.push(hull[k]);
        if k == north {
            break;
        }
        k = (k + 1) % b;
    }

    let mut faces = Vec::with_capacity(4);
    faces.push(assert_face(
        pts,
        &[hull[north], hull[(north + 1) % b], r],
        "I2 forward triangle",
    ));
    faces.push(assert_face(
        pts,
        &[hull[south], hull[(south + 1) % b], q],
        "I2 backward triangle",
    ));
    let mut west = vec![q, r];
    west.extend(&left_arc);
    faces.push(assert_face(pts, &west, "I2 left side"));
    let mut east = vec![r, q];
    east.extend(&right_arc);
    faces.push(assert_face(pts, &east, "I2 right side"));
    faces
}
