//! Determinant identities for D-vectors and the explicit polynomial map `b`
//! on a degree-five vertex and its neighbours, evaluated at exact points.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cofactor::{cross3, d_vector, d_vector_general, det3, dot3, DVec, Point};
use crate::error::{Error, Result};
use crate::linalg::{rat, RatMatrix, Rational};

/// Twice the signed area of the triangle `(pi, pj, pk)`: the determinant
/// with rows `(x, y, 1)`.
pub fn triangle_area2(pi: &Point, pj: &Point, pk: &Point) -> Rational {
    (&pj.x - &pi.x) * (&pk.y - &pi.y) - (&pk.x - &pi.x) * (&pj.y - &pi.y)
}

/// `(det[D(p0,p1); D(p0,p2); D(p0,p3)], −Δ(p0,p1,p2)Δ(p0,p2,p3)Δ(p0,p3,p1))`.
/// The two values agree for every input.
pub fn vandermonde_identity_check(p: [&Point; 4]) -> (Rational, Rational) {
    let lhs = det3(
        &d_vector(p[0], p[1]),
        &d_vector(p[0], p[2]),
        &d_vector(p[0], p[3]),
    );
    let rhs = -(triangle_area2(p[0], p[1], p[2])
        * triangle_area2(p[0], p[2], p[3])
        * triangle_area2(p[0], p[3], p[1]));
    (lhs, rhs)
}

/// General form with `d + 1` points: the determinant of the rows
/// `D_{d-1}(p0, pi)` for `i = 1..d`, against `∏_{i<j} Δ(p0, pi, pj)`.
/// The x-coordinates must be pairwise distinct.
pub fn vandermonde_general_check(d: usize, points: &[Point]) -> Result<(Rational, Rational)> {
    if d < 2 {
        return Err(Error::Precondition("dimension must be at least 2".into()));
    }
    if points.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            actual: points.len(),
        });
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].iter().any(|q| q.x == p.x) {
            return Err(Error::Precondition(
                "x-coordinates must be pairwise distinct".into(),
            ));
        }
    }
    let rows = points[1..]
        .iter()
        .map(|pi| d_vector_general(d - 1, &points[0], pi))
        .collect::<Result<Vec<_>>>()?;
    let lhs = RatMatrix::from_rows(d, rows)?.det()?;
    let mut rhs = rat(1);
    for i in 1..=d {
        for j in i + 1..=d {
            rhs *= triangle_area2(&points[0], &points[i], &points[j]);
        }
    }
    Ok((lhs, rhs))
}

/// The map `b` on `v0..v5` evaluated at concrete coordinates, with the
/// scalar factors `alpha`, `beta` and every pair value
/// `delta[(i,j)] = D_{ij} · (b_i − b_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadMapEval {
    pub b: [[Rational; 3]; 6],
    pub alpha: Rational,
    pub beta: Rational,
    pub deltas: BTreeMap<(usize, usize), Rational>,
}

impl BadMapEval {
    pub fn delta(&self, i: usize, j: usize) -> &Rational {
        &self.deltas[&(i.min(j), i.max(j))]
    }

    /// Pairs among the neighbours `1..=5` whose value vanishes.
    pub fn vanishing_neighbour_pairs(&self) -> Vec<(usize, usize)> {
        self.deltas
            .iter()
            .filter(|(&(i, _), v)| i >= 1 && v.is_zero())
            .map(|(&k, _)| k)
            .collect()
    }
}

/// Evaluates `b(v0), ..., b(v5)` with `v0` the centre and `v1..v5` its
/// neighbours. Degenerate placements simply produce zeros.
pub fn build_bad_map(p: &[Point; 6]) -> BadMapEval {
    let d = |i: usize, j: usize| -> DVec { d_vector(&p[i], &p[j]) };
    let tri = |i: usize, j: usize, k: usize| triangle_area2(&p[i], &p[j], &p[k]);
    let scale = |s: &Rational, v: [Rational; 3]| -> [Rational; 3] { v.map(|x| s * x) };
    let add = |a: [Rational; 3], b: [Rational; 3]| -> [Rational; 3] {
        let [a0, a1, a2] = a;
        let [b0, b1, b2] = b;
        [a0 + b0, a1 + b1, a2 + b2]
    };

    let m3 = det3(&d(0, 3), &d(3, 4), &d(3, 5));
    let m2 = det3(&d(0, 2), &d(2, 4), &d(2, 5));
    let alpha = &m2 * det3(&d(0, 3), &d(0, 1), &d(0, 5));
    let beta = -(&m3 * det3(&d(0, 2), &d(0, 1), &d(0, 5)));

    let zero = || [Rational::zero(), Rational::zero(), Rational::zero()];
    let b0 = scale(&(tri(1, 2, 3) * &m3 * &m2), cross3(&d(0, 1), &d(0, 5)));
    let b2 = scale(&(&beta * tri(1, 3, 2)), cross3(&d(2, 4), &d(2, 5)));
    let b3 = scale(&(&alpha * tri(1, 2, 3)), cross3(&d(3, 4), &d(3, 5)));
    let b4 = add(
        scale(&(&alpha * tri(1, 2, 4)), cross3(&d(3, 4), &d(4, 5))),
        scale(&(&beta * tri(1, 3, 4)), cross3(&d(2, 4), &d(4, 5))),
    );
    let b = [b0, zero(), b2, b3, b4, zero()];

    let mut deltas = BTreeMap::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let diff: [Rational; 3] = std::array::from_fn(|k| &b[i][k] - &b[j][k]);
            deltas.insert((i, j), dot3(&d(i, j), &diff));
        }
    }
    BadMapEval {
        b,
        alpha,
        beta,
        deltas,
    }
}

/// True iff the vanishing pairs among the neighbours are exactly the star
/// `{15, 25, 35, 45}`.
pub fn star_condition_check(e: &BadMapEval) -> bool {
    e.vanishing_neighbour_pairs() == vec![(1, 5), (2, 5), (3, 5), (4, 5)]
}

/// Normalised placement `u1..u4 = (1,0), (0,0), (0,1), (1,1)`.
pub fn quasi_generic_placement() -> [Point; 4] {
    [
        Point::int(1, 0),
        Point::int(0, 0),
        Point::int(0, 1),
        Point::int(1, 1),
    ]
}

/// With `u1..u4` at the normalised placement and `u5` free, returns
/// `(det[D34; D32; D35] / det[D43; D41; D45], Δ523 / Δ514)`.
pub fn t1_ratio_check(u5: &Point) -> Result<(Rational, Rational)> {
    let [u1, u2, u3, u4] = quasi_generic_placement();
    let d = d_vector;
    let num = det3(&d(&u3, &u4), &d(&u3, &u2), &d(&u3, u5));
    let den = det3(&d(&u4, &u3), &d(&u4, &u1), &d(&u4, u5));
    let a523 = triangle_area2(u5, &u2, &u3);
    let a514 = triangle_area2(u5, &u1, &u4);
    if den.is_zero() || a514.is_zero() {
        return Err(Error::Degenerate("u5 is in special position".into()));
    }
    Ok((num / den, a523 / a514))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_area_examples() {
        let (a, b, c) = (Point::int(0, 0), Point::int(1, 0), Point::int(0, 1));
        assert_eq!(triangle_area2(&a, &b, &c), rat(1));
        assert_eq!(triangle_area2(&b, &a, &c), rat(-1));
        assert_eq!(
            triangle_area2(&a, &Point::int(2, 2), &Point::int(5, 5)),
            rat(0)
        );
    }

    #[test]
    fn triangle_area_matches_determinant() {
        let pts = [Point::int(3, -1), Point::int(-4, 2), Point::int(7, 9)];
        let rows = pts
            .iter()
            .map(|p| vec![p.x.clone(), p.y.clone(), rat(1)])
            .collect();
        let det = RatMatrix::from_rows(3, rows).unwrap().det().unwrap();
        assert_eq!(triangle_area2(&pts[0], &pts[1], &pts[2]), det);
    }

    #[test]
    fn vandermonde_unit_square() {
        let p = [
            Point::int(0, 0),
            Point::int(1, 0),
            Point::int(0, 1),
            Point::int(1, 1),
        ];
        let (lhs, rhs) = vandermonde_identity_check([&p[0], &p[1], &p[2], &p[3]]);
        assert_eq!(lhs, rat(-1));
        assert_eq!(rhs, rat(-1));
    }

    #[test]
    fn vandermonde_collinear_is_zero() {
        let p = [
            Point::int(0, 0),
            Point::int(1, 1),
            Point::int(2, 2),
            Point::int(4, -3),
        ];
        let (lhs, rhs) = vandermonde_identity_check([&p[0], &p[1], &p[2], &p[3]]);
        assert!(lhs.is_zero() && rhs.is_zero());
    }

    #[test]
    fn vandermonde_general_d2_and_d3() {
        let p = [
            Point::int(0, 0),
            Point::int(2, 1),
            Point::int(-1, 3),
            Point::int(5, 4),
        ];
        let (lhs, rhs) = vandermonde_general_check(2, &p[..3]).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, triangle_area2(&p[0], &p[1], &p[2]));
        let (lhs3, rhs3) = vandermonde_general_check(3, &p).unwrap();
        let (lhs_eq, rhs_eq) = vandermonde_identity_check([&p[0], &p[1], &p[2], &p[3]]);
        assert_eq!(lhs3, lhs_eq);
        assert_eq!(rhs3, rhs_eq);
    }

    #[test]
    fn vandermonde_general_rejects_repeated_x() {
        let p = [Point::int(0, 0), Point::int(0, 1), Point::int(2, 3)];
        assert!(vandermonde_general_check(2, &p).is_err());
        assert!(vandermonde_general_check(3, &p).is_err());
    }

    fn sample_points() -> [Point; 6] {
        [
            Point::int(3, 7),
            Point::int(-5, 2),
            Point::int(11, -4),
            Point::int(1, 13),
            Point::int(-8, -9),
            Point::int(6, 17),
        ]
    }

    #[test]
    fn bad_map_fixed_points() {
        let e = build_bad_map(&sample_points());
        assert!(e.b[1].iter().all(Zero::is_zero));
        assert!(e.b[5].iter().all(Zero::is_zero));
        for i in 1..=4 {
            assert!(e.delta(i, 5).is_zero(), "delta {i}5");
        }
        assert!(e.delta(0, 1).is_zero());
        assert!(e.delta(0, 5).is_zero());
        assert!(star_condition_check(&e));
    }

    #[test]
    fn bad_map_special_position_reported() {
        // p3 on the line through p0 and p1: one of the two triangle products
        // in the factor of δ14 vanishes, the other does not.
        let mut p = sample_points();
        p[3] = Point::int(3 + 2 * (-8), 7 + 2 * (-5));
        assert!(triangle_area2(&p[0], &p[3], &p[1]).is_zero());
        let e = build_bad_map(&p);
        assert!(!triangle_area2(&p[3], &p[0], &p[4]).is_zero());
        let _ = star_condition_check(&e);

        let collinear: [Point; 6] = std::array::from_fn(|i| Point::int(i as i64, 2 * i as i64 + 1));
        let e = build_bad_map(&collinear);
        assert!(e.deltas.values().all(Zero::is_zero));
        assert!(!star_condition_check(&e));
    }

    #[test]
    fn t1_ratio_example() {
        let (lhs, rhs) = t1_ratio_check(&Point::int(3, -2)).unwrap();
        assert_eq!(lhs, rhs);
    }
}
