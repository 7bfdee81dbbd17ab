//! Removing one hull vertex promotes three or more interior points.
//!
//! The vertex `p_j` is removed and its pocket fanned over the promoted chain
//! `q_0 .. q_{m+1}`. The recursion also drops the chain's first and last
//! promoted points; each is either grown back as an empty ear or fanned over
//! its own promotion chain with one convex pair-merge, depending on whether
//! its end triangle contains points.

use super::{
    assert_face, ear_merge, merge_across, promoted_chain, CaseLabel, Ctx, Face,
};
use crate::geom::Point;

pub(super) fn run(
    ctx: &mut Ctx,
    subset: Vec<u32>,
    hull: &[u32],
    j: usize,
    chain: Vec<u32>,
    first_empty: bool,
    last_empty: bool,
) -> Vec<Face> {
    let pts = ctx.pts;
    let pj = hull[j];
    let m = chain.len() - 2;
    assert!(m >= 3);
    let q1 = chain[1];
    let qm = chain[m];

    let mut pi0: Vec<Face> = (0..=m)
        .map(|k| assert_face(pts, &[chain[k], pj, chain[k + 1]], "C3 fan"))
        .collect();

    let p_minus_j: Vec<u32> = subset.iter().copied().filter(|&v| v != pj).collect();
    let sub: Vec<u32> = p_minus_j
        .iter()
        .copied()
        .filter(|&v| v != q1 && v != qm)
        .collect();

    match (first_empty, last_empty) {
        (true, true) => {
            ctx.push_event(
                CaseLabel::C3_1,
                subset.len(),
                vec![("j", pj as i64), ("m", m as i64)],
            );
            let mut faces = ctx.rec(sub);
            ear_merge(pts, &mut faces, chain[0], chain[1], chain[2], "C3_1");
            ear_merge(pts, &mut faces, chain[m - 1], chain[m], chain[m + 1], "C3_1");
            faces.extend(pi0);
            faces
        }
        (false, false) => {
            let rchain = promoted_chain(pts, &p_minus_j, &[q1], chain[0], chain[2]);
            let schain = promoted_chain(pts, &p_minus_j, &[qm], chain[m - 1], chain[m + 1]);
            let mp = rchain.len() - 2;
            let mpp = schain.len() - 2;
            assert!(mp >= 1 && mpp >= 1, "C3_2: blocked end promoted nothing");
            for v in &rchain[1..=mp] {
                assert!(
                    !schain[1..=mpp].contains(v),
                    "C3_2: the two end chains share point {v}"
                );
            }
            ctx.push_event(
                CaseLabel::C3_2,
                subset.len(),
                vec![
                    ("j", pj as i64),
                    ("m", m as i64),
                    ("mp", mp as i64),
                    ("mpp", mpp as i64),
                ],
            );
            let mut faces = ctx.rec(sub);
            let rfan = fan_and_merge(pts, &mut pi0, q1, &rchain, 0, 1, "C3_2");
            let sfan = fan_and_merge(pts, &mut pi0, qm, &schain, m - 1, m, "C3_2");
            faces.extend(rfan);
            faces.extend(sfan);
            faces.extend(pi0);
            faces
        }
        (first, _) => {
            // Exactly one end triangle is empty; grow it back as an ear and
            // fan the other end. Both chiralities are handled directly.
            if first {
                let schain = promoted_chain(pts, &p_minus_j, &[qm], chain[m - 1], chain[m + 1]);
                let mpp = schain.len() - 2;
                assert!(mpp >= 1, "C3_3: blocked end promoted nothing");
                ctx.push_event(
                    CaseLabel::C3_3,
                    subset.len(),
                    vec![("j", pj as i64), ("m", m as i64), ("mpp", mpp as i64)],
                );
                let mut faces = ctx.rec(sub);
                ear_merge(pts, &mut faces, chain[0], chain[1], chain[2], "C3_3");
                let sfan = fan_and_merge(pts, &mut pi0, qm, &schain, m - 1, m, "C3_3");
                faces.extend(sfan);
                faces.extend(pi0);
                faces
            } else {
                let rchain = promoted_chain(pts, &p_minus_j, &[q1], chain[0], chain[2]);
                let mp = rchain.len() - 2;
                assert!(mp >= 1, "C3_3: blocked end promoted nothing");
                ctx.push_event(
                    CaseLabel::C3_3,
                    subset.len(),
                    vec![("j", pj as i64), ("m", m as i64), ("mp", mp as i64)],
                );
                let mut faces = ctx.rec(sub);
                ear_merge(pts, &mut faces, chain[m - 1], chain[m], chain[m + 1], "C3_3");
                let rfan = fan_and_merge(pts, &mut pi0, q1, &rchain, 0, 1, "C3_3");
                faces.extend(rfan);
                faces.extend(pi0);
                faces
            }
        }
    }
}

/// Fan `fchain` around the removed end point `apex`, then merge one of the
/// two candidate pairs back into the pocket fan: the first fan triangle with
/// `pi0[first_idx]`, or the last fan triangle with `pi0[second_idx]`.
fn fan_and_merge(
    pts: &[Point],
    pi0: &mut [Face],
    apex: u32,
    fchain: &[u32],
    first_idx: usize,
    second_idx: usize,
    what: &str,
) -> Vec<Face> {
    let fm = fchain.len() - 2;
    let mut fan: Vec<Face> = (0..=fm)
        .map(|k| assert_face(pts, &[fchain[k], apex, fchain[k + 1]], "C3 end fan"))
        .collect();
    if let Some(mf) = merge_across(pts, &fan[0], &pi0[first_idx], fchain[0], apex) {
        pi0[first_idx] = mf;
        fan.remove(0);
    } else {
        let mf = merge_across(pts, &fan[fm], &pi0[second_idx], apex, fchain[fm + 1])
            .unwrap_or_else(|| panic!("{what}: neither merge pair is convex at {apex}"));
        pi0[second_idx] = mf;
        fan.pop();
    }
    fan
}
