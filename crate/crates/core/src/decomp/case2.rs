//! Two hull vertices beyond one interior-hull edge.
//!
//! Both are removed. The opened pocket is tiled with a fan from each removed
//! vertex toward the promoted chain plus one quadrilateral spanning the
//! removed hull edge. If the promoted ear at `q` is empty the recursion also
//! drops `q` and grows the ear back; otherwise `q` is dropped, its own
//! promotion chain is fanned around it, and exactly one adjacent pair of the
//! two fans merges back into a single convex face.

use super::{
    assert_face, ear_merge, find_face_with_edge, merge_across, promoted_chain, CaseLabel, Ctx,
    Face, HalfPlaneWitness,
};

#[allow(clippy::too_many_arguments)]
pub(super) fn run(
    ctx: &mut Ctx,
    subset: Vec<u32>,
    hull: &[u32],
    wit: &HalfPlaneWitness,
    chain: Vec<u32>,
    l: usize,
    ear_empty: bool,
) -> Vec<Face> {
    let pts = ctx.pts;
    let b = hull.len();
    let j = wit.crossing[0];
    debug_assert_eq!(wit.crossing[1], (j + 1) % b);
    let pj = hull[j];
    let pj1 = hull[(j + 1) % b];
    let m = chain.len() - 2;
    let q = wit.q;
    assert!(
        (1..=m).contains(&l),
        "C2: q={q} must be a promoted point strictly inside the chain"
    );

    // Pocket faces: fan from p_j up to q, the spanning quadrilateral, fan
    // from p_{j+1} beyond q. Layout: pi0[k] for k < l fans p_j, pi0[l] is the
    // quadrilateral, pi0[k] for k > l fans p_{j+1}.
    let mut pi0: Vec<Face> = Vec::with_capacity(m + 1);
    for k in 0..l {
        pi0.push(assert_face(pts, &[chain[k], pj, chain[k + 1]], "C2 fan"));
    }
    pi0.push(assert_face(pts, &[q, pj, pj1, chain[l + 1]], "C2 quadrilateral"));
    for k in l + 1..=m {
        pi0.push(assert_face(pts, &[chain[k], pj1, chain[k + 1]], "C2 fan"));
    }

    let pivots = vec![
        ("j", pj as i64),
        ("q", q as i64),
        ("l", l as i64),
        ("m", m as i64),
    ];

    if ear_empty {
        ctx.push_event(CaseLabel::C2A, subset.len(), pivots);
        let sub: Vec<u32> = subset
            .iter()
            .copied()
            .filter(|&v| v != pj && v != pj1 && v != q)
            .collect();
        let mut faces = ctx.rec(sub);
        ear_merge(pts, &mut faces, chain[l - 1], q, chain[l + 1], "C2A");
        faces.extend(pi0);
        faces
    } else {
        let p_prime: Vec<u32> = subset
            .iter()
            .copied()
            .filter(|&v| v != pj && v != pj1)
            .collect();
        let rchain = promoted_chain(pts, &p_prime, &[q], chain[l - 1], chain[l + 1]);
        let mp = rchain.len() - 2;
        assert!(mp >= 1, "C2B: blocked ear at q={q} promoted nothing");
        let mut pivots = pivots;
        pivots.push(("mp", mp as i64));
        ctx.push_event(CaseLabel::C2B, subset.len(), pivots);
        let sub: Vec<u32> = p_prime.iter().copied().filter(|&v| v != q).collect();
        let mut faces = ctx.rec(sub);
        let mut rfan: Vec<Face> = (0..=mp)
            .map(|k| assert_face(pts, &[rchain[k], q, rchain[k + 1]], "C2B fan"))
            .collect();
        // At least one of the two adjacent pairs joins into a convex face.
        if let Some(mf) = merge_across(pts, &rfan[0], &pi0[l - 1], rchain[0], q) {
            pi0[l - 1] = mf;
            rfan.remove(0);
        } else {
            let last = rfan.len() - 1;
            let mf = merge_across(pts, &rfan[last], &pi0[l], q, rchain[mp + 1])
                .unwrap_or_else(|| panic!("C2B: neither merge pair is convex at q={q}"));
            pi0[l] = mf;
            rfan.pop();
        }
        faces.extend(rfan);
        faces.extend(pi0);
        faces
    }
}
