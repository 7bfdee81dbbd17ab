//! Merging adjacent convex faces into a single convex face.

use super::Face;
use crate::geom::{is_strictly_convex, Point};

/// Merge `f1` and `f2` across their shared edge `{a, b}`, where `f1` walks
/// `a -> b` and `f2` walks `b -> a`. Returns the union if it is a simple,
/// strictly convex polygon; `None` lets the caller try the other candidate
/// pair.
pub(crate) fn merge_across(pts: &[Point], f1: &Face, f2: &Face, a: u32, b: u32) -> Option<Face> {
    let i1 = f1
        .directed_edge_pos(a, b)
        .unwrap_or_else(|| panic!("merge: first face lacks edge {a}->{b}"));
    let i2 = f2
        .directed_edge_pos(b, a)
        .unwrap_or_else(|| panic!("merge: second face lacks edge {b}->{a}"));
    let v1 = f1.vertices();
    let v2 = f2.vertices();
    let (n1, n2) = (v1.len(), v2.len());
    let mut merged: Vec<u32> = Vec::with_capacity(n1 + n2 - 2);
    // f1 rotated to start at b, ending at a ...
    for k in 0..n1 {
        merged.push(v1[(i1 + 1 + k) % n1]);
    }
    // ... then f2's path strictly between a and b.
    for k in 2..n2 {
        merged.push(v2[(i2 + k) % n2]);
    }
    let mut sorted = merged.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mapped: Vec<Point> = merged.iter().map(|&v| pts[v as usize]).collect();
    if is_strictly_convex(&mapped) {
        Some(Face::new(merged))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    #[test]
    fn two_right_triangles_make_a_square() {
        let pts = vec![
            Point::new(0, 0),
            Point::new(1, 0),
            Point::new(1, 1),
            Point::new(0, 1),
        ];
        let f1 = Face::new(vec![0, 1, 2]); // walks 2 -> 0
        let f2 = Face::new(vec![0, 2, 3]); // walks 0 -> 2
        let merged = merge_across(&pts, &f2, &f1, 0, 2).expect("square merge");
        assert_eq!(merged.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn reflex_union_is_rejected() {
        // The union of these two triangles is reflex at vertex 3.
        let pts = vec![
            Point::new(0, 0),
            Point::new(4, 0),
            Point::new(4, 4),
            Point::new(3, 1),
        ];
        let f1 = Face::new(vec![0, 1, 3]); // walks 1 -> 3
        let f2 = Face::new(vec![1, 2, 3]); // walks 3 -> 1
        assert!(merge_across(&pts, &f2, &f1, 3, 1).is_none());
    }
}
