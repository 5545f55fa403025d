//! Exact rational planar points and halfplane cuts.
//!
//! Vertex order is the x-order of the points, which is why x-coordinates must
//! be pairwise distinct. All boundary-incidence decisions (point on the
//! cutting line, collinear triples) are exact.

use std::collections::BTreeSet;
use std::fmt;

use crate::hypergraph::Hyperedge;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("points {i} and {j} share the x-coordinate {x}")]
    DuplicateX { i: usize, j: usize, x: String },
    #[error("point {index} has malformed coordinate `{text}`")]
    BadCoordinate { index: usize, text: String },
}

/// Points sorted by strictly increasing x; index in the set is the vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(mut points: Vec<Point>) -> Result<Self, GeometryError> {
        points.sort_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));
        for (i, pair) in points.windows(2).enumerate() {
            if pair[0].x == pair[1].x {
                return Err(GeometryError::DuplicateX {
                    i,
                    j: i + 1,
                    x: pair[0].x.to_string(),
                });
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self, GeometryError> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| Point::from_ints(x, y))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    /// Slopes of all lines through two points, ascending and deduplicated.
    fn critical_slopes(&self) -> Vec<BigRational> {
        let mut slopes = BTreeSet::new();
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let (a, b) = (&self.points[i], &self.points[j]);
                slopes.insert((&b.y - &a.y) / (&b.x - &a.x));
            }
        }
        slopes.into_iter().collect()
    }

    /// Slopes that witness every combinatorially distinct direction: the
    /// critical slopes themselves, a midpoint inside every gap between
    /// consecutive ones, and one representative beyond each end.
    fn sweep_slopes(&self) -> Vec<BigRational> {
        let critical = self.critical_slopes();
        if critical.is_empty() {
            return vec![BigRational::from_integer(BigInt::from(0))];
        }
        let one = BigRational::one();
        let two = BigRational::from_integer(BigInt::from(2));
        let mut slopes = Vec::with_capacity(2 * critical.len() + 1);
        slopes.push(critical.first().unwrap() - &one);
        for (k, slope) in critical.iter().enumerate() {
            slopes.push(slope.clone());
            match critical.get(k + 1) {
                Some(next) => slopes.push((slope + next) / &two),
                None => slopes.push(slope + &one),
            }
        }
        slopes
    }

    /// All distinct subsets cut off by upward-closed halfplanes, including
    /// the empty set and the full set. For boundary slope `a` the point `i`
    /// lies in the halfplane `y ≥ a·x + b` iff `y_i − a·x_i ≥ b`, so the cuts
    /// at slope `a` are exactly the upper groups of the key `y − a·x`; the
    /// key order only changes at critical slopes, hence the sweep is exact.
    pub fn upward_cuts(&self) -> Vec<Hyperedge> {
        let n = self.points.len();
        let mut cuts: BTreeSet<Hyperedge> = BTreeSet::new();
        cuts.insert(Hyperedge::empty());
        for a in self.sweep_slopes() {
            let keys: Vec<BigRational> = self.points.iter().map(|p| &p.y - &a * &p.x).collect();
            let mut thresholds: Vec<&BigRational> = keys.iter().collect();
            thresholds.sort();
            thresholds.dedup();
            for t in thresholds {
                cuts.insert((0..n).filter(|&i| keys[i] >= *t).collect());
            }
        }
        cuts.into_iter().collect()
    }

    /// Complements of the upward cuts: the downward-closed halfplane cuts.
    pub fn downward_cuts(&self) -> Vec<Hyperedge> {
        let n = self.points.len();
        let set: BTreeSet<Hyperedge> = self.upward_cuts().iter().map(|e| e.complement(n)).collect();
        set.into_iter().collect()
    }

    /// Vertices on the upper hull, collinear boundary points included:
    /// exactly the points admitting a line through them with every other
    /// point on or below. Supporting lines can be rotated onto a second
    /// point, so testing the slopes through point pairs is exhaustive.
    pub fn upper_hull_vertices(&self) -> Vec<usize> {
        self.hull_vertices(true)
    }

    /// Vertices on the lower hull: some line through them keeps every other
    /// point on or above.
    pub fn lower_hull_vertices(&self) -> Vec<usize> {
        self.hull_vertices(false)
    }

    fn hull_vertices(&self, upper: bool) -> Vec<usize> {
        let n = self.points.len();
        if n <= 1 {
            return (0..n).collect();
        }
        (0..n)
            .filter(|&i| {
                (0..n).filter(|&j| j != i).any(|j| {
                    let p = &self.points[i];
                    let q = &self.points[j];
                    let a = (&q.y - &p.y) / (&q.x - &p.x);
                    let key_i = &p.y - &a * &p.x;
                    self.points.iter().all(|r| {
                        let key_r = &r.y - &a * &r.x;
                        if upper {
                            key_r <= key_i
                        } else {
                            key_r >= key_i
                        }
                    })
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_points() -> PointSet {
        PointSet::from_ints(&[(0, 0), (1, 3), (2, 1), (4, 0)]).unwrap()
    }

    #[test]
    fn rejects_duplicate_x() {
        let err = PointSet::from_ints(&[(1, 0), (1, 5)]).unwrap_err();
        assert!(matches!(err, GeometryError::DuplicateX { .. }));
    }

    #[test]
    fn sorts_points_by_x() {
        let ps = PointSet::from_ints(&[(4, 0), (0, 0), (2, 1), (1, 3)]).unwrap();
        assert_eq!(ps.point(0), &Point::from_ints(0, 0));
        assert_eq!(ps.point(3), &Point::from_ints(4, 0));
    }

    #[test]
    fn two_point_cuts_are_all_subsets() {
        let ps = PointSet::from_ints(&[(0, 0), (1, 1)]).unwrap();
        let ups = ps.upward_cuts();
        assert_eq!(ups.len(), 4);
        let downs = ps.downward_cuts();
        assert_eq!(downs.len(), 4);
    }

    #[test]
    fn hulls_of_triangle_with_interior_point() {
        let ps = k4_points();
        assert_eq!(ps.upper_hull_vertices(), vec![0, 1, 3]);
        assert_eq!(ps.lower_hull_vertices(), vec![0, 3]);
    }

    #[test]
    fn hulls_of_collinear_points_contain_everything() {
        let ps = PointSet::from_ints(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(ps.upper_hull_vertices(), vec![0, 1, 2]);
        assert_eq!(ps.lower_hull_vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn collinear_upward_cuts_are_order_intervals_of_the_key() {
        // Points on a common line admit only prefix and suffix cuts of the
        // x-order (plus the trivial cuts); skipping the middle point is
        // impossible.
        let ps = PointSet::from_ints(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        let ups = ps.upward_cuts();
        assert!(!ups.contains(&Hyperedge::new(vec![0, 2])));
        assert!(ups.contains(&Hyperedge::new(vec![0, 1, 2])));
        assert!(ups.contains(&Hyperedge::new(vec![2])));
        assert!(ups.contains(&Hyperedge::new(vec![0])));
    }

    #[test]
    fn k4_pair_cuts_match_hand_analysis() {
        // Upward halfplanes can cut off {0,1} (above y = x - 1/2), {1,2},
        // {1,3} and {2,3} but no other pair; downward ones give {0,1}
        // (below y = -3x + 13/2), {0,2}, {0,3} and {2,3}.
        let ps = k4_points();
        let ups: Vec<Hyperedge> = ps
            .upward_cuts()
            .into_iter()
            .filter(|e| e.len() == 2)
            .collect();
        assert_eq!(
            ups,
            vec![
                Hyperedge::new(vec![0, 1]),
                Hyperedge::new(vec![1, 2]),
                Hyperedge::new(vec![1, 3]),
                Hyperedge::new(vec![2, 3]),
            ]
        );
        let downs: Vec<Hyperedge> = ps
            .downward_cuts()
            .into_iter()
            .filter(|e| e.len() == 2)
            .collect();
        assert_eq!(
            downs,
            vec![
                Hyperedge::new(vec![0, 1]),
                Hyperedge::new(vec![0, 2]),
                Hyperedge::new(vec![0, 3]),
                Hyperedge::new(vec![2, 3]),
            ]
        );
    }

    #[test]
    fn cuts_always_include_trivial_sets() {
        let ps = PointSet::from_ints(&[(0, 5)]).unwrap();
        assert_eq!(
            ps.upward_cuts(),
            vec![Hyperedge::empty(), Hyperedge::new(vec![0])]
        );
    }
}
