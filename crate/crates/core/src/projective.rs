//! Projective C¹₂-motions: per-vertex symmetric 3x3 matrices on frameworks
//! lifted to homogeneous coordinates, their trivial motions, invariance
//! under pointwise scaling and linear maps, and the transfer of ordinary
//! motions along a projective transformation.

use num_traits::{One, Zero};

use crate::cofactor::{cross3, Framework, Motion, Point};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::linalg::{rat, RatMatrix, Rational};

type SymField<'a> = Box<dyn Fn(&Vec3) -> Sym3 + 'a>;

pub type Vec3 = [Rational; 3];

/// Framework with homogeneous coordinates; every z-component is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedFramework {
    graph: Graph,
    coords: Vec<Vec3>,
}

impl LiftedFramework {
    pub fn new(graph: Graph, coords: Vec<Vec3>) -> Result<Self> {
        if coords.len() != graph.n() {
            return Err(Error::DimensionMismatch {
                expected: graph.n(),
                actual: coords.len(),
            });
        }
        if let Some(v) = coords.iter().position(|p| p[2].is_zero()) {
            return Err(Error::PointAtInfinity(v));
        }
        Ok(Self { graph, coords })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coords(&self) -> &[Vec3] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Divides through by z.
    pub fn unlift(&self) -> Framework {
        let coords = self
            .coords
            .iter()
            .map(|p| Point::new(&p[0] / &p[2], &p[1] / &p[2]))
            .collect();
        Framework::new(self.graph.clone(), coords).expect("same vertex count")
    }

    /// `λ_i p_i` for each vertex; every scalar must be nonzero.
    pub fn scaled(&self, scalars: &[Rational]) -> Result<Self> {
        if scalars.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                actual: scalars.len(),
            });
        }
        if scalars.iter().any(Zero::is_zero) {
            return Err(Error::Precondition(
                "scaling factors must be nonzero".into(),
            ));
        }
        let coords = self
            .coords
            .iter()
            .zip(scalars)
            .map(|(p, l)| p.clone().map(|x| x * l))
            .collect();
        Self::new(self.graph.clone(), coords)
    }

    /// `A p_i` for each vertex; fails if an image has zero z-component.
    pub fn transformed(&self, a: &Mat3) -> Result<Self> {
        let coords = self.coords.iter().map(|p| a.apply(p)).collect();
        Self::new(self.graph.clone(), coords)
    }
}

/// `(x, y) -> (x, y, 1)`.
pub fn lift(f: &Framework) -> LiftedFramework {
    let coords = f
        .coords()
        .iter()
        .map(|p| [p.x.clone(), p.y.clone(), Rational::one()])
        .collect();
    LiftedFramework::new(f.graph().clone(), coords).expect("z = 1 everywhere")
}

/// Symmetric 3x3 matrix stored as its upper triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sym3 {
    pub m11: Rational,
    pub m12: Rational,
    pub m13: Rational,
    pub m22: Rational,
    pub m23: Rational,
    pub m33: Rational,
}

impl Sym3 {
    pub fn zero() -> Self {
        Self::from_upper([0, 0, 0, 0, 0, 0].map(rat))
    }

    /// From `[m11, m12, m13, m22, m23, m33]`.
    pub fn from_upper(u: [Rational; 6]) -> Self {
        let [m11, m12, m13, m22, m23, m33] = u;
        Self {
            m11,
            m12,
            m13,
            m22,
            m23,
            m33,
        }
    }

    pub fn upper(&self) -> [Rational; 6] {
        [
            self.m11.clone(),
            self.m12.clone(),
            self.m13.clone(),
            self.m22.clone(),
            self.m23.clone(),
            self.m33.clone(),
        ]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        match (i.min(j), i.max(j)) {
            (0, 0) => &self.m11,
            (0, 1) => &self.m12,
            (0, 2) => &self.m13,
            (1, 1) => &self.m22,
            (1, 2) => &self.m23,
            (2, 2) => &self.m33,
            _ => panic!("index out of range"),
        }
    }

    pub fn to_mat3(&self) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.get(i, j).clone())
        }))
    }

    /// Symmetric part of `m`; exact when `m` is already symmetric.
    pub fn from_mat3(m: &Mat3) -> Self {
        let half = |i: usize, j: usize| (&m.0[i][j] + &m.0[j][i]) / rat(2);
        Self::from_upper([
            half(0, 0),
            half(0, 1),
            half(0, 2),
            half(1, 1),
            half(1, 2),
            half(2, 2),
        ])
    }

    pub fn sub(&self, other: &Sym3) -> Sym3 {
        let (a, b) = (self.upper(), other.upper());
        Self::from_upper(std::array::from_fn(|k| &a[k] - &b[k]))
    }

    pub fn add_scaled(&self, s: &Rational, other: &Sym3) -> Sym3 {
        let (a, b) = (self.upper(), other.upper());
        Self::from_upper(std::array::from_fn(|k| &a[k] + s * &b[k]))
    }

    /// `Trace(w wᵀ S) = Σ_ij w_i w_j s_ij`.
    pub fn quadratic_form(&self, w: &Vec3) -> Rational {
        &w[0] * &w[0] * &self.m11
            + &w[1] * &w[1] * &self.m22
            + &w[2] * &w[2] * &self.m33
            + rat(2)
                * (&w[0] * &w[1] * &self.m12
                    + &w[0] * &w[2] * &self.m13
                    + &w[1] * &w[2] * &self.m23)
    }
}

/// Dense 3x3 matrix, rows first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3(pub [[Rational; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
        }))
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Self(rows.map(|r| r.map(rat)))
    }

    pub fn from_columns(cols: [Vec3; 3]) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| cols[j][i].clone())
        }))
    }

    pub fn to_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(3, self.0.iter().map(|r| r.to_vec()).collect()).expect("3 columns")
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        std::array::from_fn(|i| (0..3).map(|k| &self.0[i][k] * &v[k]).sum())
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &other.0[k][j]).sum())
        }))
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[j][i].clone())
        }))
    }

    pub fn det(&self) -> Rational {
        let c = cofactor3(self);
        (0..3).map(|j| &self.0[0][j] * &c.0[0][j]).sum()
    }

    pub fn inverse(&self) -> Result<Mat3> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        // adj(A) = C_Aᵀ
        let adj = cofactor3(self).transpose();
        Ok(Mat3(adj.0.map(|r| r.map(|x| x / &det))))
    }

    pub fn scale(&self, s: &Rational) -> Mat3 {
        Mat3(self.0.clone().map(|r| r.map(|x| x * s)))
    }

    /// Scaled so that entry (3,3) is 1, or the first nonzero entry in
    /// row-major order when (3,3) vanishes.
    pub fn normalized(&self) -> Mat3 {
        let pivot = if !self.0[2][2].is_zero() {
            self.0[2][2].clone()
        } else {
            match self.0.iter().flatten().find(|x| !x.is_zero()) {
                Some(x) => x.clone(),
                None => return self.clone(),
            }
        };
        self.scale(&pivot.recip())
    }

    /// True when `self = λ other` for some nonzero λ.
    pub fn proportional_to(&self, other: &Mat3) -> bool {
        let a: Vec<&Rational> = self.0.iter().flatten().collect();
        let b: Vec<&Rational> = other.0.iter().flatten().collect();
        let Some(k) = a.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if b[k].is_zero() {
            return false;
        }
        let l = b[k] / a[k];
        a.iter().zip(&b).all(|(x, y)| *x * &l == **y)
    }
}

/// Matrix of signed 2x2 minors, so that `(Ax) × (Ay) = C_A (x × y)`.
pub fn cofactor3(a: &Mat3) -> Mat3 {
    let m = &a.0;
    let minor = |r: usize, c: usize| {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        &m[rs[0]][cs[0]] * &m[rs[1]][cs[1]] - &m[rs[0]][cs[1]] * &m[rs[1]][cs[0]]
    };
    Mat3(std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let v = minor(r, c);
            if (r + c) % 2 == 0 {
                v
            } else {
                -v
            }
        })
    }))
}

/// One symmetric matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveMotion(pub Vec<Sym3>);

impl ProjectiveMotion {
    pub fn zero(n: usize) -> Self {
        Self(vec![Sym3::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Stacked `6n` vector of upper triangles.
    pub fn to_vector(&self) -> Vec<Rational> {
        self.0.iter().flat_map(Sym3::upper).collect()
    }
}

/// `Trace((p_i × p_j)(p_i × p_j)ᵀ (Q(v_i) − Q(v_j)))` for one pair.
pub fn projective_residual(
    lf: &LiftedFramework,
    q: &ProjectiveMotion,
    i: usize,
    j: usize,
) -> Rational {
    let w = cross3(&lf.coords[i], &lf.coords[j]);
    q.0[i].sub(&q.0[j]).quadratic_form(&w)
}

pub fn is_projective_motion(
    lf: &LiftedFramework,
    q: &ProjectiveMotion,
    pairs: &[Edge],
) -> Result<bool> {
    if q.len() != lf.n() {
        return Err(Error::DimensionMismatch {
            expected: lf.n(),
            actual: q.len(),
        });
    }
    for e in pairs {
        lf.graph.check_vertex(e.v())?;
    }
    Ok(pairs
        .iter()
        .all(|e| projective_residual(lf, q, e.u(), e.v()).is_zero()))
}

/// Every vertex pair of an n-vertex graph.
pub fn all_pairs(n: usize) -> Vec<Edge> {
    let vs: Vec<usize> = (0..n).collect();
    crate::graph::complete_edges(&vs).into_iter().collect()
}

/// `q ↦ [[2q3, −q2, 0], [−q2, 2q1, 0], [0, 0, 0]]` per vertex.
pub fn lift_motion(q: &Motion) -> ProjectiveMotion {
    ProjectiveMotion(
        q.0.iter()
            .map(|[q1, q2, q3]| {
                Sym3::from_upper([
                    rat(2) * q3,
                    -q2.clone(),
                    rat(0),
                    rat(2) * q1,
                    rat(0),
                    rat(0),
                ])
            })
            .collect(),
    )
}

/// Inverse of [`lift_motion`]; the right column and bottom row must vanish.
pub fn unlift_motion(q: &ProjectiveMotion) -> Result<Motion> {
    q.0.iter()
        .enumerate()
        .map(|(v, s)| {
            if !(s.m13.is_zero() && s.m23.is_zero() && s.m33.is_zero()) {
                return Err(Error::Precondition(format!(
                    "projective motion has a nonzero border entry at vertex {v}"
                )));
            }
            Ok([&s.m22 / rat(2), -s.m12.clone(), &s.m11 / rat(2)])
        })
        .collect::<Result<Vec<_>>>()
        .map(Motion)
}

/// The six global trivial motions followed by the three per-vertex ones
/// for each vertex in label order: `3n + 6` motions in all.
pub fn trivial_projective_basis(lf: &LiftedFramework) -> Vec<ProjectiveMotion> {
    let n = lf.n();
    let two = || rat(2);
    let z = || rat(0);
    let global: [SymField<'_>; 6] = [
        Box::new(|_| Sym3::from_upper([z(), z(), z(), two(), z(), z()])),
        Box::new(|_| Sym3::from_upper([z(), rat(-1), z(), z(), z(), z()])),
        Box::new(|_| Sym3::from_upper([two(), z(), z(), z(), z(), z()])),
        Box::new(|p| {
            let (x, y) = (&p[0] / &p[2], &p[1] / &p[2]);
            Sym3::from_upper([z(), x, z(), two() * y, z(), z()])
        }),
        Box::new(|p| {
            let (x, y) = (&p[0] / &p[2], &p[1] / &p[2]);
            Sym3::from_upper([two() * x, y, z(), z(), z(), z()])
        }),
        Box::new(|p| {
            let (x, y) = (&p[0] / &p[2], &p[1] / &p[2]);
            Sym3::from_upper([
                two() * &x * &x,
                two() * &x * &y,
                z(),
                two() * &y * &y,
                z(),
                z(),
            ])
        }),
    ];
    let mut out: Vec<ProjectiveMotion> = global
        .iter()
        .map(|g| ProjectiveMotion(lf.coords.iter().map(g).collect()))
        .collect();
    for i in 0..n {
        for k in 0..3 {
            let mut q = ProjectiveMotion::zero(n);
            q.0[i] = vertex_trivial(&lf.coords[i], k);
            out.push(q);
        }
    }
    out
}

/// The `k`-th per-vertex trivial matrix at homogeneous point `p`.
pub fn vertex_trivial(p: &Vec3, k: usize) -> Sym3 {
    let [x, y, z] = p;
    match k {
        0 => Sym3::from_upper([rat(0), x.clone(), rat(0), rat(2) * y, z.clone(), rat(0)]),
        1 => Sym3::from_upper([rat(2) * x, y.clone(), z.clone(), rat(0), rat(0), rat(0)]),
        2 => Sym3::from_upper([-(x * x), -(x * y), rat(0), -(y * y), rat(0), z * z]),
        _ => panic!("vertex trivial index must be 0, 1 or 2"),
    }
}

/// Dimension of the space of projective motions of `lf` (restricted to its
/// edges): `6n` minus the rank of the linear trace system.
pub fn projective_motion_space_dim(lf: &LiftedFramework) -> usize {
    let n = lf.n();
    let rows = lf
        .graph
        .edges()
        .iter()
        .map(|e| {
            let w = cross3(&lf.coords[e.u()], &lf.coords[e.v()]);
            let coeff = [
                &w[0] * &w[0],
                rat(2) * &w[0] * &w[1],
                rat(2) * &w[0] * &w[2],
                &w[1] * &w[1],
                rat(2) * &w[1] * &w[2],
                &w[2] * &w[2],
            ];
            let mut row = vec![Rational::zero(); 6 * n];
            for k in 0..6 {
                row[6 * e.u() + k] = coeff[k].clone();
                row[6 * e.v() + k] = -coeff[k].clone();
            }
            row
        })
        .collect();
    6 * n - RatMatrix::from_rows(6 * n, rows).expect("width 6n").rank()
}

/// `Q_A(v) = C_A^{-T} Q(v) C_A^{-1}`, a projective motion of `A p`
/// whenever `Q` is one of `p`.
pub fn transform_motion(q: &ProjectiveMotion, a: &Mat3) -> Result<ProjectiveMotion> {
    let c_inv = cofactor3(a).inverse()?;
    let c_inv_t = c_inv.transpose();
    Ok(ProjectiveMotion(
        q.0.iter()
            .map(|s| Sym3::from_mat3(&c_inv_t.mul(&s.to_mat3()).mul(&c_inv)))
            .collect(),
    ))
}

/// Whether the projective-motion predicate on the edges of `lf` gives the
/// same answer, pair by pair, before and after pointwise scaling.
pub fn scale_invariance_check(
    lf: &LiftedFramework,
    q: &ProjectiveMotion,
    scalars: &[Rational],
) -> Result<bool> {
    let scaled = lf.scaled(scalars)?;
    let edges: Vec<Edge> = lf.graph.edges().iter().copied().collect();
    let pattern = |f: &LiftedFramework| -> Vec<bool> {
        edges
            .iter()
            .map(|e| projective_residual(f, q, e.u(), e.v()).is_zero())
            .collect()
    };
    Ok(pattern(lf) == pattern(&scaled)
        && is_projective_motion(lf, q, &edges)? == is_projective_motion(&scaled, q, &edges)?)
}

/// Images of the four-point map: `(1,0), (0,0), (0,1), (1,1)`.
pub fn four_point_targets() -> [Point; 4] {
    crate::motion::quasi_generic_placement()
}

fn homogeneous(p: &Point) -> Vec3 {
    [p.x.clone(), p.y.clone(), Rational::one()]
}

/// Matrix sending `e1, e2, e3, (1,1,1)` to the four points (projectively).
fn basis_to_quad(quad: &[Point; 4]) -> Result<Mat3> {
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if crate::motion::triangle_area2(&quad[i], &quad[j], &quad[k]).is_zero() {
            return Err(Error::Degenerate(format!(
                "points {i}, {j}, {k} are collinear"
            )));
        }
    }
    let h: Vec<Vec3> = quad.iter().map(homogeneous).collect();
    let base = Mat3::from_columns([h[0].clone(), h[1].clone(), h[2].clone()]);
    let lambda = base.inverse()?.apply(&h[3]);
    Ok(Mat3::from_columns(std::array::from_fn(|j| {
        h[j].clone().map(|x| x * &lambda[j])
    })))
}

/// The projective map sending `src` onto [`four_point_targets`], normalised
/// with [`Mat3::normalized`]. No three source points may be collinear.
pub fn four_point_projective_map(src: &[Point; 4]) -> Result<Mat3> {
    let from_src = basis_to_quad(src)?;
    let to_dst = basis_to_quad(&four_point_targets())?;
    Ok(to_dst.mul(&from_src.inverse()?).normalized())
}

/// Dehomogenised image of each vertex under `m`.
pub fn apply_projective(m: &Mat3, f: &Framework) -> Result<Framework> {
    if m.det().is_zero() {
        return Err(Error::Singular);
    }
    let coords = f
        .coords()
        .iter()
        .enumerate()
        .map(|(v, p)| {
            let [x, y, z] = m.apply(&homogeneous(p));
            if z.is_zero() {
                return Err(Error::PointAtInfinity(v));
            }
            Ok(Point::new(x / &z, y / &z))
        })
        .collect::<Result<Vec<_>>>()?;
    Framework::new(f.graph().clone(), coords)
}

/// Transfers a motion of `p_src` to a motion of `p_dst`, where `a` maps
/// `p_src` onto `p_dst` projectively:
/// lift the motion, conjugate by the cofactor of `a`, rescale the image
/// points to `z = 1`, clear the right column and bottom row with the
/// per-vertex trivial motions, and unlift.
pub fn convert_motion_pipeline(
    p_src: &Framework,
    p_dst: &Framework,
    a: &Mat3,
    q_src: &Motion,
) -> Result<Motion> {
    if p_src.graph() != p_dst.graph() {
        return Err(Error::Precondition(
            "source and target graphs differ".into(),
        ));
    }
    if q_src.len() != p_src.n() {
        return Err(Error::DimensionMismatch {
            expected: p_src.n(),
            actual: q_src.len(),
        });
    }
    if a.det().is_zero() {
        return Err(Error::Singular);
    }
    for (v, (s, d)) in p_src.coords().iter().zip(p_dst.coords()).enumerate() {
        let image = a.apply(&homogeneous(s));
        if !cross3(&image, &homogeneous(d)).iter().all(Zero::is_zero) {
            return Err(Error::Precondition(format!(
                "matrix does not map vertex {v} of the source onto the target"
            )));
        }
    }
    let lifted = lift_motion(q_src);
    let transformed = transform_motion(&lifted, a)?;
    // Rescaling A p_src to p_dst^↑ leaves the matrices unchanged; only the
    // border entries need clearing, against unit border slots at z = 1.
    let dst = lift(p_dst);
    let cleared = transformed
        .0
        .iter()
        .zip(dst.coords())
        .map(|(s, p)| {
            let c23 = -s.m23.clone();
            let c13 = -s.m13.clone();
            let c33 = -s.m33.clone();
            s.add_scaled(&c23, &vertex_trivial(p, 0))
                .add_scaled(&c13, &vertex_trivial(p, 1))
                .add_scaled(&c33, &vertex_trivial(p, 2))
        })
        .collect();
    unlift_motion(&ProjectiveMotion(cleared))
}
