//! Frameworks in the plane, their C¹₂-cofactor matrices and motion spaces.
//!
//! Column layout: three consecutive columns per vertex in ascending label
//! order. Row layout: one row per edge in lexicographic edge order.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::linalg::{rat, RatMatrix, RatVector, Rational};

/// Half-width of the sampling box used for generic coordinates.
pub const GENERIC_COORD_BOUND: i64 = 1 << 62;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Self::new(rat(x), rat(y))
    }
}

pub type DVec = [Rational; 3];

/// `((xi-xj)^2, (xi-xj)(yi-yj), (yi-yj)^2)`.
pub fn d_vector(p: &Point, q: &Point) -> DVec {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    [&dx * &dx, &dx * &dy, &dy * &dy]
}

/// Degree-`s` analogue: `((xi-xj)^s, (xi-xj)^(s-1)(yi-yj), ..., (yi-yj)^s)`.
pub fn d_vector_general(s: usize, p: &Point, q: &Point) -> Result<RatVector> {
    if s == 0 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    Ok((0..=s)
        .map(|k| num_traits::pow(dx.clone(), s - k) * num_traits::pow(dy.clone(), k))
        .collect())
}

pub fn cross3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot3(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// `det[a; b; c]`, i.e. `a · (b × c)`.
pub fn det3(a: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]) -> Rational {
    dot3(a, &cross3(b, c))
}

/// A graph with exact plane coordinates for each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framework {
    graph: Graph,
    coords: Vec<Point>,
}

impl Framework {
    pub fn new(graph: Graph, coords: Vec<Point>) -> Result<Self> {
        if coords.len() != graph.n() {
            return Err(Error::DimensionMismatch {
                expected: graph.n(),
                actual: coords.len(),
            });
        }
        Ok(Self { graph, coords })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    pub fn point(&self, v: usize) -> &Point {
        &self.coords[v]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn with_graph(&self, graph: Graph) -> Result<Self> {
        Self::new(graph, self.coords.clone())
    }

    pub fn d(&self, e: Edge) -> DVec {
        d_vector(self.point(e.u()), self.point(e.v()))
    }

    /// True when the points are not all collinear (needs n ≥ 3).
    pub fn affinely_spans(&self) -> bool {
        let Some(p0) = self.coords.first() else {
            return false;
        };
        let Some(p1) = self.coords.iter().find(|p| *p != p0) else {
            return false;
        };
        self.coords
            .iter()
            .any(|p| !crate::motion::triangle_area2(p0, p1, p).is_zero())
    }
}

/// The row of the cofactor matrix for edge `e`: `D` in the block of the
/// smaller endpoint and `-D` in the block of the larger one.
pub fn cofactor_row(n: usize, e: Edge, d: &DVec) -> RatVector {
    let mut row = vec![Rational::zero(); 3 * n];
    for k in 0..3 {
        row[3 * e.u() + k] = d[k].clone();
        row[3 * e.v() + k] = -d[k].clone();
    }
    row
}

/// `|E| x 3n` cofactor matrix.
pub fn cofactor_matrix(f: &Framework) -> RatMatrix {
    let rows = f
        .graph
        .edges()
        .iter()
        .map(|&e| cofactor_row(f.n(), e, &f.d(e)))
        .collect();
    RatMatrix::from_rows(3 * f.n(), rows).expect("rows have width 3n")
}

/// Three distinct vertices used to pin a motion: all of `a`, the first two
/// coordinates of `b`, the first coordinate of `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PinTriple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl PinTriple {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        Self { a, b, c }
    }

    /// Pinned `(vertex, coordinate)` slots in row order.
    pub fn slots(&self) -> [(usize, usize); 6] {
        [
            (self.a, 0),
            (self.a, 1),
            (self.a, 2),
            (self.b, 0),
            (self.b, 1),
            (self.c, 0),
        ]
    }

    fn check_vertices(&self, n: usize) -> Result<()> {
        for v in [self.a, self.b, self.c] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if self.a == self.b || self.a == self.c || self.b == self.c {
            return Err(Error::InvalidPins(
                "pinned vertices must be distinct".into(),
            ));
        }
        Ok(())
    }

    /// Distinct vertices with pairwise distinct y-coordinates in `f`.
    pub fn validate(&self, f: &Framework) -> Result<()> {
        self.check_vertices(f.n())?;
        let (ya, yb, yc) = (&f.point(self.a).y, &f.point(self.b).y, &f.point(self.c).y);
        if ya == yb || ya == yc || yb == yc {
            return Err(Error::InvalidPins(format!(
                "y-coordinates of {}, {}, {} are not pairwise distinct",
                self.a, self.b, self.c
            )));
        }
        Ok(())
    }
}

/// Cofactor matrix with the six unit pin rows placed first.
///
/// Only distinctness of the pinned vertices is checked here; the
/// y-coordinate condition needed for the pinning to remove exactly the
/// trivial motions is enforced by [`nontrivial_motion_basis`].
pub fn extended_cofactor_matrix(f: &Framework, pins: PinTriple) -> Result<RatMatrix> {
    pins.check_vertices(f.n())?;
    let width = 3 * f.n();
    let mut pin_rows = RatMatrix::zeros(6, width);
    for (i, (v, k)) in pins.slots().into_iter().enumerate() {
        pin_rows.set(i, 3 * v + k, Rational::one());
    }
    pin_rows.stack(&cofactor_matrix(f))
}

/// Per-vertex 3-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Motion(pub Vec<[Rational; 3]>);

impl Motion {
    pub fn zero(n: usize) -> Self {
        Self(vec![
            [Rational::zero(), Rational::zero(), Rational::zero()];
            n
        ])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Stacked `3n` vector in column order.
    pub fn to_vector(&self) -> RatVector {
        self.0.iter().flat_map(|q| q.iter().cloned()).collect()
    }

    pub fn from_vector(v: &[Rational]) -> Result<Self> {
        if !v.len().is_multiple_of(3) {
            return Err(Error::DimensionMismatch {
                expected: v.len() / 3 * 3 + 3,
                actual: v.len(),
            });
        }
        Ok(Self(
            v.chunks(3)
                .map(|c| [c[0].clone(), c[1].clone(), c[2].clone()])
                .collect(),
        ))
    }
}

/// The six trivial motions evaluated at the coordinates of `f`.
pub fn trivial_motion_basis(f: &Framework) -> Vec<Motion> {
    use Rational as R;
    let per_vertex: [fn(&Point) -> [Rational; 3]; 6] = [
        |_| [R::one(), R::zero(), R::zero()],
        |_| [R::zero(), R::one(), R::zero()],
        |_| [R::zero(), R::zero(), R::one()],
        |p| [p.y.clone(), -p.x.clone(), R::zero()],
        |p| [R::zero(), -p.y.clone(), p.x.clone()],
        |p| [&p.y * &p.y, rat(-2) * &p.x * &p.y, &p.x * &p.x],
    ];
    per_vertex
        .iter()
        .map(|q| Motion(f.coords.iter().map(q).collect()))
        .collect()
}

/// Value of `D(vi,vj)·(q(vi) − q(vj))` for one pair.
pub fn pair_residual(f: &Framework, q: &Motion, e: Edge) -> Rational {
    let diff: [Rational; 3] = std::array::from_fn(|k| &q.0[e.u()][k] - &q.0[e.v()][k]);
    dot3(&f.d(e), &diff)
}

pub fn is_motion(f: &Framework, q: &Motion) -> Result<bool> {
    if q.len() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            actual: q.len(),
        });
    }
    Ok(f.graph
        .edges()
        .iter()
        .all(|&e| pair_residual(f, q, e).is_zero()))
}

/// `dim Z(G,p) − 6`. Graphs on fewer than three vertices are reported as
/// rigid; collinear placements are rejected.
pub fn dof(f: &Framework) -> Result<usize> {
    if f.n() < 3 {
        return Ok(0);
    }
    if !f.affinely_spans() {
        return Err(Error::Degenerate("all points are collinear".into()));
    }
    let kernel_dim = 3 * f.n() - cofactor_matrix(f).rank();
    Ok(kernel_dim - 6)
}

/// Basis of the motions vanishing on the pinned slots; for a k-dof framework
/// this has exactly k elements and complements the trivial motions.
pub fn nontrivial_motion_basis(f: &Framework, pins: PinTriple) -> Result<Vec<Motion>> {
    pins.validate(f)?;
    if !f.affinely_spans() {
        return Err(Error::Degenerate("all points are collinear".into()));
    }
    extended_cofactor_matrix(f, pins)?
        .kernel_basis()
        .iter()
        .map(|v| Motion::from_vector(v))
        .collect()
}

/// The 6x6 coefficient matrix obtained by evaluating the trivial motions on
/// the pinned slots of `(a, b, c)`; nonsingular iff the three y-coordinates
/// are pairwise distinct.
pub fn pin_coefficient_matrix(a: &Point, b: &Point, c: &Point) -> RatMatrix {
    let rows = [(a, 0), (a, 1), (a, 2), (b, 0), (b, 1), (c, 0)]
        .into_iter()
        .map(|(p, k)| {
            let (x, y) = (&p.x, &p.y);
            match k {
                0 => vec![rat(1), rat(0), rat(0), y.clone(), rat(0), y * y],
                1 => vec![
                    rat(0),
                    rat(1),
                    rat(0),
                    -x.clone(),
                    -y.clone(),
                    rat(-2) * x * y,
                ],
                _ => vec![rat(0), rat(0), rat(1), rat(0), x.clone(), x * x],
            }
        })
        .collect();
    RatMatrix::from_rows(6, rows).expect("six columns")
}

/// Independent uniform integer coordinates in `[-2^62, 2^62]`, determined by
/// `seed`.
pub fn random_generic_framework(g: &Graph, seed: u64) -> Framework {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords = (0..g.n())
        .map(|_| {
            let x = rng.gen_range(-GENERIC_COORD_BOUND..=GENERIC_COORD_BOUND);
            let y = rng.gen_range(-GENERIC_COORD_BOUND..=GENERIC_COORD_BOUND);
            Point::int(x, y)
        })
        .collect();
    Framework::new(g.clone(), coords).expect("one point per vertex")
}

/// For a nonsingular square `m` and row subset `rows`, the family
/// `{z_d}` where `z_d` spans the kernel of `m` with row `d` deleted.
pub fn row_removal_kernel_family(m: &RatMatrix, rows: &[usize]) -> Result<Vec<RatVector>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    rows.iter()
        .map(|&d| {
            let mut k = m.without_row(d).kernel_basis();
            if k.len() != 1 {
                return Err(Error::Singular);
            }
            Ok(k.remove(0))
        })
        .collect()
}
