//! Promoted chains: the stretch of hull that appears when one or more
//! consecutive hull vertices are removed.

use crate::geom::{cross, hull_of_sorted, Point};

/// Hull chain across the gap left by removing `removed` (one or more
/// consecutive hull vertices), running counterclockwise from the surviving
/// neighbour `left` to the surviving neighbour `right`, both included.
///
/// Only points strictly beyond the chord `left -> right` can surface, so the
/// chain is the pocket-side boundary of the hull of those points plus the two
/// chord endpoints. `left == right` signals the wrap-around gap of a
/// triangular hull losing two of its vertices; the chain is then the whole
/// reduced hull, closed back on `left`.
pub(crate) fn promoted_chain(
    pts: &[Point],
    subset: &[u32],
    removed: &[u32],
    left: u32,
    right: u32,
) -> Vec<u32> {
    debug_assert!(subset.windows(2).all(|w| pts[w[0] as usize] < pts[w[1] as usize]));
    if left == right {
        let keep: Vec<u32> = subset
            .iter()
            .copied()
            .filter(|v| !removed.contains(v))
            .collect();
        let mut cycle = hull_of_sorted(pts, &keep);
        let pos = cycle
            .iter()
            .position(|&v| v == left)
            .expect("wrap-around chain: surviving hull vertex fell off the hull");
        cycle.rotate_left(pos);
        cycle.push(left);
        return cycle;
    }
    let pl = pts[left as usize];
    let pr = pts[right as usize];
    let cands: Vec<u32> = subset
        .iter()
        .copied()
        .filter(|&v| {
            if removed.contains(&v) {
                return false;
            }
            v == left || v == right || cross(pl, pr, pts[v as usize]) < 0
        })
        .collect();
    if cands.len() == 2 {
        return vec![left, right];
    }
    let mut cycle = hull_of_sorted(pts, &cands);
    let pos = cycle
        .iter()
        .position(|&v| v == left)
        .expect("chain: left endpoint fell off the pocket hull");
    cycle.rotate_left(pos);
    assert_eq!(
        *cycle.last().unwrap(),
        right,
        "chain: pocket hull does not close on the right endpoint"
    );
    cycle
}
