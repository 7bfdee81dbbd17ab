//! Exact planar predicates and convex hulls on integer coordinates.
//!
//! Everything downstream (the case machine, the verifier, the oracle) decides
//! strict sidedness through [`orient`], which is computed exactly in 64-bit
//! integers. Coordinates are capped at [`MAX_COORD`] so the 2x2 determinant
//! (bounded by 2^62) can never overflow.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest allowed coordinate magnitude (2^30).
pub const MAX_COORD: i64 = 1 << 30;

/// A point with exact integer coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_range(&self) -> bool {
        self.x.abs() <= MAX_COORD && self.y.abs() <= MAX_COORD
    }
}

/// Signed cross product (b - a) x (c - a). Positive iff `c` lies strictly to
/// the left of the directed line a -> b.
#[inline]
pub fn cross(a: Point, b: Point, c: Point) -> i64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Orientation sign: +1 left turn, 0 collinear, -1 right turn. Exact.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> i8 {
    cross(a, b, c).signum() as i8
}

/// Rejected inputs. Construction of a [`PointSet`] enforces the coordinate
/// range and general position once, so the algorithms never re-check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("point set is empty")]
    Empty,
    #[error("point {index} has a coordinate outside +/-2^30")]
    CoordinateOutOfRange { index: usize },
    #[error("points {first} and {second} are identical")]
    DuplicatePoint { first: usize, second: usize },
    #[error("points {a}, {b}, {c} are collinear")]
    CollinearTriple { a: usize, b: usize, c: usize },
}

/// Result of the general-position scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneralPosition {
    Ok,
    /// Lexicographically first violating index triple (duplicates count as
    /// collinear with any third point).
    Violation { a: usize, b: usize, c: usize },
}

/// An immutable point set in general position.
///
/// Invariants established at construction: every coordinate within range,
/// all points pairwise distinct, and (for n >= 3) no three points collinear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, InputError> {
        if points.is_empty() {
            return Err(InputError::Empty);
        }
        for (i, p) in points.iter().enumerate() {
            if !p.in_range() {
                return Err(InputError::CoordinateOutOfRange { index: i });
            }
        }
        // Duplicates are caught separately so pairs are reported even for n = 2.
        let mut by_coord: Vec<usize> = (0..points.len()).collect();
        by_coord.sort_unstable_by_key(|&i| points[i]);
        for w in by_coord.windows(2) {
            if points[w[0]] == points[w[1]] {
                let (first, second) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(InputError::DuplicatePoint { first, second });
            }
        }
        if let GeneralPosition::Violation { a, b, c } = general_position_points(&points) {
            return Err(InputError::CollinearTriple { a, b, c });
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, index: u32) -> Point {
        self.points[index as usize]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

/// Checks that no two points coincide and no three are collinear.
///
/// Reports the lexicographically first violating triple `(a, b, c)` with
/// `a < b < c`. A duplicate pair forms a degenerate triple with the smallest
/// remaining index.
pub fn general_position(ps: &PointSet) -> GeneralPosition {
    general_position_points(ps.points())
}

pub(crate) fn general_position_points(points: &[Point]) -> GeneralPosition {
    if points.len() < 3 {
        return GeneralPosition::Ok;
    }
    if points.len() <= 64 {
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                for c in b + 1..points.len() {
                    if cross(points[a], points[b], points[c]) == 0 {
                        return GeneralPosition::Violation { a, b, c };
                    }
                }
            }
        }
        return GeneralPosition::Ok;
    }
    general_position_anchored(points)
}

/// O(n^2 log n) scan: anchor each point, sort the directions to all later
/// points, and look for equal (or zero) directions. Anchoring at the smallest
/// index of a triple means the first anchor with any violation carries the
/// lexicographically first triple.
fn general_position_anchored(points: &[Point]) -> GeneralPosition {
    let n = points.len();
    let mut dirs: Vec<(i64, i64, usize)> = Vec::with_capacity(n);
    for a in 0..n {
        dirs.clear();
        let pa = points[a];
        let mut dup: Option<usize> = None;
        for (k, pk) in points.iter().enumerate().skip(a + 1) {
            let (mut dx, mut dy) = (pk.x - pa.x, pk.y - pa.y);
            if dx == 0 && dy == 0 {
                dup = Some(dup.map_or(k, |d| d.min(k)));
                continue;
            }
            // Collinearity through the anchor ignores direction sign, so fold
            // every direction into the half-plane dx > 0 || (dx == 0 && dy > 0).
            if dx < 0 || (dx == 0 && dy < 0) {
                dx = -dx;
                dy = -dy;
            }
            dirs.push((dx, dy, k));
        }
        let mut best: Option<(usize, usize)> = None;
        if let Some(k) = dup {
            // (a, k) coincide; any third index completes a degenerate triple.
            let third = (0..n).find(|&m| m != a && m != k).unwrap();
            let (b, c) = (k.min(third), k.max(third));
            best = Some((b, c));
        }
        dirs.sort_unstable_by(|&(x1, y1, _), &(x2, y2, _)| (x1 * y2 - y1 * x2).cmp(&0).reverse());
        let mut g = 0;
        while g < dirs.len() {
            let mut h = g + 1;
            while h < dirs.len()
                && dirs[g].0 * dirs[h].1 - dirs[g].1 * dirs[h].0 == 0
            {
                h += 1;
            }
            if h - g >= 2 {
                let mut members: Vec<usize> = dirs[g..h].iter().map(|d| d.2).collect();
                members.sort_unstable();
                let cand = (members[0], members[1]);
                if best.map_or(true, |b| cand < b) {
                    best = Some(cand);
                }
            }
            g = h;
        }
        if let Some((b, c)) = best {
            return GeneralPosition::Violation { a, b, c };
        }
    }
    GeneralPosition::Ok
}

/// Indices of hull vertices, counterclockwise, starting at the
/// lexicographically smallest point of the subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullIndex {
    pub indices: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HullError {
    #[error("convex hull needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("subset index {0} out of range")]
    IndexOutOfRange(u32),
}

/// Convex hull of a subset of the point set (monotone chain).
pub fn convex_hull(ps: &PointSet, subset: &[u32]) -> Result<HullIndex, HullError> {
    if subset.len() < 3 {
        return Err(HullError::TooFewPoints(subset.len()));
    }
    for &i in subset {
        if i as usize >= ps.len() {
            return Err(HullError::IndexOutOfRange(i));
        }
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable_by_key(|&i| ps.point(i));
    Ok(HullIndex {
        indices: hull_of_sorted(ps.points(), &sorted),
    })
}

/// Monotone chain over indices already sorted by coordinate (lexicographic).
/// Output is counterclockwise and starts at the lexicographic minimum.
pub(crate) fn hull_of_sorted(pts: &[Point], sorted: &[u32]) -> Vec<u32> {
    debug_assert!(sorted.windows(2).all(|w| pts[w[0] as usize] < pts[w[1] as usize]));
    let n = sorted.len();
    if n < 3 {
        return sorted.to_vec();
    }
    let mut hull: Vec<u32> = Vec::with_capacity(n + 1);
    // Lower chain.
    for &i in sorted {
        while hull.len() >= 2
            && cross(
                pts[hull[hull.len() - 2] as usize],
                pts[hull[hull.len() - 1] as usize],
                pts[i as usize],
            ) <= 0
        {
            hull.pop();
        }
        hull.push(i);
    }
    // Upper chain.
    let lower_len = hull.len();
    for &i in sorted.iter().rev().skip(1) {
        while hull.len() > lower_len
            && cross(
                pts[hull[hull.len() - 2] as usize],
                pts[hull[hull.len() - 1] as usize],
                pts[i as usize],
            ) <= 0
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull
}

/// True iff `p` lies strictly inside the open triangle `abc`.
/// The triangle must be non-degenerate.
pub fn strictly_inside_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    let s = orient(a, b, c);
    assert!(s != 0, "degenerate triangle in interior test");
    orient(a, b, p) == s && orient(b, c, p) == s && orient(c, a, p) == s
}

/// True iff `x` lies strictly inside the open angular wedge at `apex` spanned
/// by the directions to `u` and `v` (the wedge containing segment uv).
pub fn in_open_wedge(apex: Point, u: Point, v: Point, x: Point) -> bool {
    let s = orient(apex, u, v);
    debug_assert!(s != 0);
    orient(apex, u, x) == s && orient(apex, v, x) == -s
}

/// True iff the cycle is a strictly convex simple polygon in counterclockwise
/// order: every consecutive triple turns strictly left and the cycle splits
/// into exactly two lexicographically monotone runs (which rules out
/// multiply-wound cycles that turn left everywhere).
pub fn is_strictly_convex(cycle: &[Point]) -> bool {
    let n = cycle.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        let (a, b, c) = (cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]);
        if a == b || orient(a, b, c) <= 0 {
            return false;
        }
    }
    let mut flips = 0;
    for i in 0..n {
        let (a, b, c) = (cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]);
        if (a < b) != (b < c) {
            flips += 1;
        }
    }
    flips == 2
}

/// Twice the signed area of a polygon (shoelace), exact in 128-bit.
pub fn twice_area(cycle: &[Point]) -> i128 {
    let mut acc: i128 = 0;
    for i in 0..cycle.len() {
        let p = cycle[i];
        let q = cycle[(i + 1) % cycle.len()];
        acc += p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orient_unit_cases() {
        assert_eq!(orient(p(0, 0), p(1, 0), p(0, 1)), 1);
        assert_eq!(orient(p(0, 0), p(1, 1), p(2, 2)), 0);
        assert_eq!(orient(p(0, 0), p(0, 1), p(1, 0)), -1);
    }

    #[test]
    fn orient_is_exact_at_extremes() {
        let a = p(-MAX_COORD, -MAX_COORD);
        let b = p(MAX_COORD, MAX_COORD);
        assert_eq!(orient(a, b, p(MAX_COORD, MAX_COORD - 1)), -1);
        assert_eq!(orient(a, b, p(MAX_COORD - 1, MAX_COORD)), 1);
    }

    #[test]
    fn general_position_cases() {
        let ok = PointSet::new(vec![p(0, 0), p(4, 0), p(0, 4)]).unwrap();
        assert_eq!(general_position(&ok), GeneralPosition::Ok);

        let err = PointSet::new(vec![p(0, 0), p(1, 1), p(2, 2), p(5, 0)]);
        assert_eq!(
            err,
            Err(InputError::CollinearTriple { a: 0, b: 1, c: 2 })
        );

        let ok2 = PointSet::new(vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(2, 1)]).unwrap();
        // Exhaustive check over all 10 triples agrees.
        for a in 0..5u32 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    assert_ne!(
                        orient(ok2.point(a), ok2.point(b), ok2.point(c)),
                        0,
                        "triple ({a},{b},{c})"
                    );
                }
            }
        }
        assert_eq!(general_position(&ok2), GeneralPosition::Ok);
    }

    #[test]
    fn anchored_scan_matches_brute_force() {
        // Drive the anchored path (n > 64) against the brute-force
        // path on the same data with a planted collinear triple.
        // Points on a parabola are never collinear.
        let mut pts: Vec<Point> = (0..70i64).map(|k| p(k, k * k)).collect();
        assert_eq!(general_position_anchored(&pts), GeneralPosition::Ok);
        // Plant a violation: make 65 collinear with 10 and 40.
        let a = pts[10];
        let b = pts[40];
        pts[65] = p(a.x + 2 * (b.x - a.x), a.y + 2 * (b.y - a.y));
        let got = general_position_anchored(&pts);
        let mut brute = GeneralPosition::Ok;
        'outer: for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                for k in j + 1..pts.len() {
                    if cross(pts[i], pts[j], pts[k]) == 0 {
                        brute = GeneralPosition::Violation { a: i, b: j, c: k };
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(got, brute);
    }

    #[test]
    fn duplicate_points_rejected() {
        let err = PointSet::new(vec![p(0, 0), p(1, 2), p(1, 2), p(9, 9)]);
        assert_eq!(err, Err(InputError::DuplicatePoint { first: 1, second: 2 }));
    }

    #[test]
    fn coordinate_range_enforced() {
        let err = PointSet::new(vec![p(0, 0), p(MAX_COORD + 1, 0), p(0, 4)]);
        assert_eq!(err, Err(InputError::CoordinateOutOfRange { index: 1 }));
    }

    #[test]
    fn hull_triangle_and_square() {
        let tri = PointSet::new(vec![p(0, 0), p(4, 0), p(0, 4)]).unwrap();
        let h = convex_hull(&tri, &[0, 1, 2]).unwrap();
        assert_eq!(h.indices, vec![0, 1, 2]);

        let ps = PointSet::new(vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(2, 1)]).unwrap();
        let h = convex_hull(&ps, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(h.indices, vec![0, 1, 2, 3]);
    }

    /// Naive hull oracle: an ordered pair (i, j) is a hull edge iff every
    /// other point lies strictly left of i -> j.
    fn naive_hull(pts: &[Point], subset: &[u32]) -> Vec<u32> {
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for &i in subset {
            for &j in subset {
                if i == j {
                    continue;
                }
                let all_left = subset
                    .iter()
                    .filter(|&&k| k != i && k != j)
                    .all(|&k| orient(pts[i as usize], pts[j as usize], pts[k as usize]) > 0);
                if all_left {
                    edges.push((i, j));
                }
            }
        }
        // Chain the edges into a cycle starting at the lexicographic minimum.
        let start = *subset
            .iter()
            .filter(|&&i| edges.iter().any(|&(a, _)| a == i))
            .min_by_key(|&&i| pts[i as usize])
            .unwrap();
        let mut cycle = vec![start];
        let mut cur = start;
        loop {
            let &(_, next) = edges.iter().find(|&&(a, _)| a == cur).unwrap();
            if next == start {
                break;
            }
            cycle.push(next);
            cur = next;
        }
        cycle
    }

    #[test]
    fn hull_matches_naive_oracle_on_random_points() {
        // Fixed 7-point instance drawn once from a seeded generator.
        let pts = vec![
            p(39, -61),
            p(-12, 84),
            p(7, 3),
            p(-90, -33),
            p(55, 71),
            p(-42, -5),
            p(83, 12),
        ];
        let ps = PointSet::new(pts).unwrap();
        let subset: Vec<u32> = (0..7).collect();
        let fast = convex_hull(&ps, &subset).unwrap().indices;
        let naive = naive_hull(ps.points(), &subset);
        assert_eq!(fast, naive);
    }

    #[test]
    fn triangle_interior_cases() {
        let (a, b, c) = (p(0, 0), p(4, 0), p(0, 4));
        assert!(strictly_inside_triangle(p(1, 1), a, b, c));
        assert!(!strictly_inside_triangle(p(0, 0), a, b, c));
        assert!(!strictly_inside_triangle(p(2, 2), a, b, c)); // on the hypotenuse
    }

    #[test]
    fn strict_convexity_cases() {
        let square = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert!(is_strictly_convex(&square));
        let swapped = [p(0, 0), p(1, 1), p(1, 0), p(0, 1)];
        assert!(!is_strictly_convex(&swapped));
        // Reflex quadrilateral: interior corner pulled inward.
        let reflex = [p(0, 0), p(4, 0), p(1, 1), p(0, 4)];
        assert!(!is_strictly_convex(&reflex));
        // Pentagram winds twice while turning left at every corner.
        let star = [p(0, 10), p(-6, -8), p(10, 3), p(-10, 3), p(6, -8)];
        assert!(!is_strictly_convex(&star));
    }
}
