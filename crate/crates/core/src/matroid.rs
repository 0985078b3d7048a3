//! The generic C¹₂-cofactor matroid on the edges of `K_n`.
//!
//! Generic rank is certified by evaluation: coordinates are sampled three
//! times (seeds derived from one master seed) and the rank of an edge set is
//! the maximum row rank over the three samples. Rank at any particular
//! placement never exceeds the generic rank, so the maximum is a lower bound
//! that is exact unless all three samples hit the zero set of some minor.
//!
//! The rank cache sits behind a mutex: a `GenericMatroid` can be shared
//! between threads, and identical queries always return identical answers.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cofactor::{random_generic_framework, Framework};
use crate::error::{Error, Result};
use crate::graph::{complete_edges, edge, Edge, EdgeSet, Graph};
use crate::linalg::{format_rational, RowSpace};

pub const SAMPLE_COUNT: usize = 3;

pub struct GenericMatroid {
    n: usize,
    master_seed: u64,
    seeds: [u64; SAMPLE_COUNT],
    samples: [Vec<(BigInt, BigInt)>; SAMPLE_COUNT],
    cache: Mutex<HashMap<Vec<Edge>, usize>>,
}

/// Everything needed to replay a rank computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub master_seed: u64,
    pub seeds: Vec<u64>,
    /// Per seed, per vertex, `[x, y]` as canonical rational strings.
    pub coordinates: Vec<Vec<[String; 2]>>,
}

impl fmt::Debug for GenericMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GenericMatroid")
            .field("n", &self.n)
            .field("master_seed", &self.master_seed)
            .field("seeds", &self.seeds)
            .finish_non_exhaustive()
    }
}

impl GenericMatroid {
    pub fn new(n: usize, master_seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
        let seeds: [u64; SAMPLE_COUNT] = std::array::from_fn(|_| rng.gen());
        let samples = seeds.map(|s| {
            random_generic_framework(&Graph::empty(n), s)
                .coords()
                .iter()
                .map(|p| (p.x.to_integer(), p.y.to_integer()))
                .collect()
        });
        Self {
            n,
            master_seed,
            seeds,
            samples,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seeds(&self) -> [u64; SAMPLE_COUNT] {
        self.seeds
    }

    /// The sampled placement for seed `s` as a framework carrying `g`.
    pub fn sample_framework(&self, s: usize, g: &Graph) -> Framework {
        random_generic_framework(&Graph::empty(self.n), self.seeds[s])
            .with_graph(g.clone())
            .expect("graph on the matroid's vertex set")
    }

    pub fn certificate(&self) -> Certificate {
        let coordinates = self
            .seeds
            .iter()
            .map(|&s| {
                random_generic_framework(&Graph::empty(self.n), s)
                    .coords()
                    .iter()
                    .map(|p| [format_rational(&p.x), format_rational(&p.y)])
                    .collect()
            })
            .collect();
        Certificate {
            master_seed: self.master_seed,
            seeds: self.seeds.to_vec(),
            coordinates,
        }
    }

    pub fn ground_set(&self) -> EdgeSet {
        let vs: Vec<usize> = (0..self.n).collect();
        complete_edges(&vs)
    }

    fn row(&self, s: usize, e: Edge) -> Vec<BigInt> {
        assert!(
            e.v() < self.n,
            "edge {e} outside the ground set K_{}",
            self.n
        );
        let (xi, yi) = &self.samples[s][e.u()];
        let (xj, yj) = &self.samples[s][e.v()];
        let dx = xi - xj;
        let dy = yi - yj;
        let d = [&dx * &dx, &dx * &dy, &dy * &dy];
        let mut row = vec![BigInt::default(); 3 * self.n];
        for k in 0..3 {
            row[3 * e.u() + k] = d[k].clone();
            row[3 * e.v() + k] = -d[k].clone();
        }
        row
    }

    fn row_space<'a>(&self, s: usize, f: impl IntoIterator<Item = &'a Edge>) -> RowSpace {
        let mut space = RowSpace::new(3 * self.n);
        for &e in f {
            space.insert_integer(self.row(s, e));
        }
        space
    }

    /// Row rank at each of the three sampled placements.
    pub fn rank_per_seed(&self, f: &EdgeSet) -> [usize; SAMPLE_COUNT] {
        std::array::from_fn(|s| self.row_space(s, f).rank())
    }

    /// Generic rank of `f`. Panics if an edge leaves the ground set.
    pub fn rank(&self, f: &EdgeSet) -> usize {
        let key: Vec<Edge> = f.iter().copied().collect();
        if let Some(&r) = self.cache.lock().expect("rank cache poisoned").get(&key) {
            return r;
        }
        let mut best = 0;
        for s in 0..SAMPLE_COUNT {
            best = best.max(self.row_space(s, f).rank());
            if best == f.len() {
                break;
            }
        }
        self.cache
            .lock()
            .expect("rank cache poisoned")
            .insert(key, best);
        best
    }

    pub fn independent(&self, f: &EdgeSet) -> bool {
        self.rank(f) == f.len()
    }

    /// For each candidate, whether adding it to `f` leaves the rank
    /// unchanged. Consistent with [`rank`](Self::rank): a candidate is
    /// spanned iff `max_s r_s(f + e) = max_s r_s(f)`.
    pub fn spans(&self, f: &EdgeSet, candidates: &[Edge]) -> Vec<bool> {
        let spaces: Vec<RowSpace> = (0..SAMPLE_COUNT).map(|s| self.row_space(s, f)).collect();
        let base = spaces.iter().map(RowSpace::rank).max().unwrap_or(0);
        candidates
            .iter()
            .map(|&e| {
                let extended = (0..SAMPLE_COUNT)
                    .map(|s| {
                        spaces[s].rank() + usize::from(!spaces[s].contains_integer(self.row(s, e)))
                    })
                    .max()
                    .unwrap_or(0);
                extended == base
            })
            .collect()
    }

    fn spanned_subset(&self, f: &EdgeSet, candidates: &EdgeSet) -> EdgeSet {
        let list: Vec<Edge> = candidates.iter().copied().collect();
        list.iter()
            .zip(self.spans(f, &list))
            .filter_map(|(&e, inside)| inside.then_some(e))
            .collect()
    }

    /// `{ e ∈ K(V) : rank(f + e) = rank(f) }`.
    pub fn closure(&self, f: &EdgeSet) -> EdgeSet {
        self.spanned_subset(f, &self.ground_set())
    }

    /// Closure restricted to the candidate set `within`.
    pub fn closure_within(&self, f: &EdgeSet, within: &EdgeSet) -> EdgeSet {
        self.spanned_subset(f, within)
    }

    /// Dependent, with every single-element deletion independent.
    pub fn is_circuit(&self, f: &EdgeSet) -> bool {
        if f.is_empty() || self.rank(f) + 1 != f.len() {
            return false;
        }
        f.iter().all(|e| {
            let mut smaller = f.clone();
            smaller.remove(e);
            self.independent(&smaller)
        })
    }

    /// `rank(E(g) ∪ K(x)) − rank(E(g))`: how many edges must be added to
    /// bring all of `K(x)` into the closure.
    pub fn local_dof(&self, g: &Graph, x: &[usize]) -> Result<usize> {
        for &v in x {
            g.check_vertex(v)?;
        }
        let base = g.edges().clone();
        let mut with = base.clone();
        with.extend(complete_edges(x));
        Ok(self.rank(&with) - self.rank(&base))
    }

    /// Closure of `f` in the contraction by `cl(e0)`, as a subset of
    /// `K(V) \ cl(e0)`. `f` must avoid `cl(e0)`.
    pub fn contracted_closure(&self, e0: &EdgeSet, f: &EdgeSet) -> Result<EdgeSet> {
        let contracted = self.closure(e0);
        if let Some(e) = f.iter().find(|e| contracted.contains(e)) {
            return Err(Error::Precondition(format!("edge {e} lies in cl(E0)")));
        }
        let base: EdgeSet = e0.union(f).copied().collect();
        let candidates: EdgeSet = self.ground_set().difference(&contracted).copied().collect();
        Ok(self.spanned_subset(&base, &candidates))
    }

    /// First of the cases i to v that holds
    /// for the independent graph `h` and vertex set `u`.
    pub fn classify_five_set(&self, h: &Graph, u: [usize; 5]) -> Result<FiveSetClassification> {
        for (i, &v) in u.iter().enumerate() {
            h.check_vertex(v)?;
            if u[..i].contains(&v) {
                return Err(Error::Precondition(format!("vertex {v} repeated")));
            }
        }
        let e = h.edges();
        if !self.independent(e) {
            return Err(Error::Dependent);
        }
        let k = complete_edges(&u);
        let k_list: Vec<Edge> = k.iter().copied().collect();
        let cl_k = self.closure_within(e, &k);

        if let Some(quad) = k4_inside(&cl_k, &u) {
            return Ok(FiveSetClassification {
                case: FiveSetCase::K4InClosure,
                edges: complete_edges(&quad).into_iter().collect(),
                vertices: quad.to_vec(),
            });
        }

        let plus = |extra: &[Edge]| -> EdgeSet {
            let mut s = e.clone();
            s.extend(extra.iter().copied());
            s
        };
        let closures_plus_one: Vec<EdgeSet> = k_list
            .iter()
            .map(|&f| self.closure_within(&plus(&[f]), &k))
            .collect();
        if let Some(i) = closures_plus_one.iter().position(|c| c.len() == k.len()) {
            return Ok(FiveSetClassification {
                case: FiveSetCase::SpannedPlusOne,
                edges: vec![k_list[i]],
                vertices: vec![],
            });
        }

        let pairs: Vec<(Edge, Edge)> = k_list
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| k_list[i + 1..].iter().map(move |&b| (a, b)))
            .collect();
        let independent_pair = |a: Edge, b: Edge| {
            !e.contains(&a) && !e.contains(&b) && self.independent(&plus(&[a, b]))
        };

        if let Some(&(a, b)) = pairs
            .iter()
            .find(|(a, b)| a.common_vertex(*b).is_none() && independent_pair(*a, *b))
        {
            return Ok(FiveSetClassification {
                case: FiveSetCase::TwoNonadjacent,
                edges: vec![a, b],
                vertices: vec![],
            });
        }

        let closure_degree = |c: usize| cl_k.iter().filter(|x| x.contains(c)).count();
        for &(a, b) in &pairs {
            let Some(c) = a.common_vertex(b) else {
                continue;
            };
            if closure_degree(c) >= 2 && independent_pair(a, b) {
                return Ok(FiveSetClassification {
                    case: FiveSetCase::TwoAdjacentStarCenter,
                    edges: vec![a, b],
                    vertices: vec![c],
                });
            }
        }

        if let Some(center) = star_center(&cl_k, &u) {
            if closures_plus_one.iter().all(|c| k4_inside(c, &u).is_none()) {
                return Ok(FiveSetClassification {
                    case: FiveSetCase::StarCase,
                    edges: cl_k.iter().copied().collect(),
                    vertices: vec![center],
                });
            }
        }
        Err(Error::Unclassified)
    }

    /// Whether `v0` is a degree-5 vertex of type (⋆): for some labelling
    /// `v1..v5` of its neighbours, `G − v0 + v1v2 + v1v3` and
    /// `G − v0 + v1v3 + v3v4` are rigid and `cl(E(G − v0)) ∩ K(N(v0))` is
    /// the star centred on `v5`.
    pub fn is_type_star(&self, g: &Graph, v0: usize) -> bool {
        self.type_star_labelling(g, v0).is_some()
    }

    /// The first labelling `[v1, .., v5]` (in lexicographic permutation
    /// order) witnessing type (⋆).
    pub fn type_star_labelling(&self, g: &Graph, v0: usize) -> Option<[usize; 5]> {
        if v0 >= g.n() || g.degree(v0) != 5 || g.n() < 5 {
            return None;
        }
        let nbrs: [usize; 5] = g.neighbors(v0).try_into().ok()?;
        let rest = g.isolate(v0);
        let cl_k = self.closure_within(rest.edges(), &complete_edges(&nbrs));
        let center = star_center(&cl_k, &nbrs)?;
        let rigid_rank = 3 * (g.n() - 1) - 6;
        let others: Vec<usize> = nbrs.iter().copied().filter(|&v| v != center).collect();
        for perm in permutations(&others) {
            let [v1, v2, v3, v4] = [perm[0], perm[1], perm[2], perm[3]];
            let rigid_with = |extra: [Edge; 2]| {
                let mut f = rest.edges().clone();
                f.extend(extra);
                self.rank(&f) == rigid_rank
            };
            if rigid_with([edge(v1, v2), edge(v1, v3)]) && rigid_with([edge(v1, v3), edge(v3, v4)])
            {
                return Some([v1, v2, v3, v4, center]);
            }
        }
        None
    }

    /// Independence of `after`, given that `before` is independent.
    pub fn check_op_preserves_independence(&self, before: &Graph, after: &Graph) -> Result<bool> {
        if !self.independent(before.edges()) {
            return Err(Error::Dependent);
        }
        Ok(self.independent(after.edges()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiveSetCase {
    /// (i) the closure restricted to `K(U)` contains a `K4`.
    K4InClosure,
    /// (ii) one extra edge spans all of `K(U)`.
    SpannedPlusOne,
    /// (iii) two non-adjacent edges of `K(U)` can be added independently.
    TwoNonadjacent,
    /// (iv) two adjacent edges can be added independently and their shared
    /// end meets two closure edges.
    TwoAdjacentStarCenter,
    /// (v) the closure restricted to `K(U)` is a spanning star and no single
    /// added edge creates a `K4` there.
    StarCase,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiveSetClassification {
    pub case: FiveSetCase,
    pub edges: Vec<Edge>,
    pub vertices: Vec<usize>,
}

/// Lexicographically first 4-subset of `u` whose six edges all lie in `set`.
fn k4_inside(set: &EdgeSet, u: &[usize; 5]) -> Option<[usize; 4]> {
    (0..5).rev().find_map(|skip| {
        let quad: Vec<usize> = u
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect();
        complete_edges(&quad)
            .iter()
            .all(|e| set.contains(e))
            .then(|| [quad[0], quad[1], quad[2], quad[3]])
    })
}

/// Centre of `set` when it is exactly a star joining one vertex of `u` to
/// the other four.
fn star_center(set: &EdgeSet, u: &[usize; 5]) -> Option<usize> {
    if set.len() != 4 {
        return None;
    }
    u.iter().copied().find(|&c| {
        u.iter()
            .filter(|&&w| w != c)
            .all(|&w| set.contains(&edge(c, w)))
    })
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(edges: &[(usize, usize)]) -> EdgeSet {
        edges.iter().map(|&(u, v)| edge(u, v)).collect()
    }

    #[test]
    fn small_ranks() {
        let m = GenericMatroid::new(5, 1);
        assert_eq!(m.rank(&EdgeSet::new()), 0);
        assert_eq!(m.rank(Graph::complete(3).edges()), 3);
        assert_eq!(m.rank(Graph::complete(4).edges()), 6);
        assert_eq!(m.rank(Graph::complete(5).edges()), 9);
        assert_eq!(m.rank_per_seed(Graph::complete(5).edges()), [9, 9, 9]);
    }

    #[test]
    fn independence_examples() {
        let m = GenericMatroid::new(5, 2);
        assert!(m.independent(Graph::complete(4).edges()));
        assert!(!m.independent(Graph::complete(5).edges()));
        for e in m.ground_set() {
            assert!(m.independent(&set(&[(e.u(), e.v())])));
        }
    }

    #[test]
    fn closure_examples() {
        let m = GenericMatroid::new(5, 3);
        assert!(m.closure(&EdgeSet::new()).is_empty());
        let mut k5_minus = Graph::complete(5).edges().clone();
        k5_minus.remove(&edge(2, 4));
        assert_eq!(m.closure(&k5_minus), *Graph::complete(5).edges());
        let m4 = GenericMatroid::new(4, 3);
        let tri = set(&[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(m4.closure(&tri), tri);
    }

    #[test]
    fn closure_matches_rank_oracle() {
        let m = GenericMatroid::new(6, 4);
        let f = set(&[
            (0, 1),
            (1, 2),
            (0, 2),
            (2, 3),
            (1, 3),
            (0, 3),
            (3, 4),
            (4, 5),
        ]);
        let r = m.rank(&f);
        let brute: EdgeSet = m
            .ground_set()
            .into_iter()
            .filter(|&e| {
                let mut g = f.clone();
                g.insert(e);
                m.rank(&g) == r
            })
            .collect();
        assert_eq!(m.closure(&f), brute);
        let cl = m.closure(&f);
        assert_eq!(m.closure(&cl), cl);
        assert!(f.is_subset(&cl));
    }

    #[test]
    fn circuit_examples() {
        let m = GenericMatroid::new(5, 5);
        assert!(m.is_circuit(Graph::complete(5).edges()));
        assert!(!m.is_circuit(Graph::complete(4).edges()));
        assert!(!m.is_circuit(&EdgeSet::new()));
    }

    #[test]
    fn local_dof_examples() {
        let m = GenericMatroid::new(5, 6);
        let all: Vec<usize> = (0..5).collect();
        let k5_minus = Graph::complete(5).without_edges([&edge(0, 1)]);
        assert_eq!(m.local_dof(&k5_minus, &all).unwrap(), 0);
        assert_eq!(m.local_dof(&Graph::empty(5), &all).unwrap(), 9);
        let star = Graph::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(m.local_dof(&star, &all).unwrap(), 5);
        assert!(m.local_dof(&star, &[0, 7]).is_err());
    }

    #[test]
    fn contracted_closure_examples() {
        let m = GenericMatroid::new(6, 7);
        let e0 = set(&[(0, 1), (0, 2), (1, 2)]);
        assert!(m
            .contracted_closure(&e0, &EdgeSet::new())
            .unwrap()
            .is_empty());
        assert!(m.contracted_closure(&e0, &set(&[(0, 1)])).is_err());
        let f = set(&[(0, 3), (1, 3), (2, 3)]);
        let got = m.contracted_closure(&e0, &f).unwrap();
        let cl0 = m.closure(&e0);
        let base: EdgeSet = e0.union(&f).copied().collect();
        let r = m.rank(&base);
        let brute: EdgeSet = m
            .ground_set()
            .into_iter()
            .filter(|e| !cl0.contains(e))
            .filter(|&e| {
                let mut g = base.clone();
                g.insert(e);
                m.rank(&g) == r
            })
            .collect();
        assert_eq!(got, brute);
        assert_eq!(got, set(&[(0, 3), (1, 3), (2, 3)]));
        // With E0 empty this is the ordinary closure.
        assert_eq!(
            m.contracted_closure(&EdgeSet::new(), &f).unwrap(),
            m.closure(&f)
        );
    }

    #[test]
    fn five_set_case_one() {
        let m = GenericMatroid::new(6, 8);
        let h = Graph::new(6, Graph::complete(4).edges().iter().copied()).unwrap();
        let c = m.classify_five_set(&h, [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.case, FiveSetCase::K4InClosure);
        assert_eq!(c.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn five_set_rejects_dependent() {
        let m = GenericMatroid::new(5, 9);
        assert_eq!(
            m.classify_five_set(&Graph::complete(5), [0, 1, 2, 3, 4]),
            Err(Error::Dependent)
        );
    }

    #[test]
    fn five_set_case_four() {
        let h = Graph::from_pairs(
            6,
            &[
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap();
        for seed in [5, 11] {
            let m = GenericMatroid::new(6, seed);
            let c = m.classify_five_set(&h, [0, 3, 5, 2, 4]).unwrap();
            assert_eq!(c.case, FiveSetCase::TwoAdjacentStarCenter);
            assert_eq!(c.edges, vec![edge(0, 2), edge(0, 3)]);
            assert_eq!(c.vertices, vec![0]);
        }
    }

    #[test]
    fn five_set_case_three() {
        let m = GenericMatroid::new(6, 12);
        let star = Graph::from_pairs(6, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c = m.classify_five_set(&star, [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.case, FiveSetCase::TwoNonadjacent);
        assert_eq!(c.edges, vec![edge(1, 2), edge(3, 4)]);
    }

    #[test]
    fn five_set_case_two() {
        let m = GenericMatroid::new(5, 13);
        let mut k5_minus = Graph::complete(5).edges().clone();
        k5_minus.remove(&edge(0, 1));
        k5_minus.remove(&edge(2, 3));
        let h = Graph::new(5, k5_minus).unwrap();
        let c = m.classify_five_set(&h, [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.case, FiveSetCase::SpannedPlusOne);
    }

    fn type_star_example() -> Graph {
        Graph::from_pairs(
            8,
            &[
                (0, 1),
                (0, 4),
                (0, 5),
                (0, 7),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 6),
                (1, 7),
                (2, 4),
                (2, 5),
                (2, 7),
                (3, 4),
                (3, 7),
                (4, 5),
                (4, 6),
                (5, 6),
                (6, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn type_star_found() {
        let g = type_star_example();
        for seed in [1, 5, 99] {
            let m = GenericMatroid::new(8, seed);
            assert_eq!(m.type_star_labelling(&g, 7), Some([0, 2, 3, 6, 1]));
        }
        let m = GenericMatroid::new(8, 1);
        assert!(!m.is_type_star(&g, 1));
        let rest = g.isolate(7);
        let cl = m.closure_within(rest.edges(), &complete_edges(&[0, 1, 2, 3, 6]));
        assert_eq!(star_center(&cl, &[0, 1, 2, 3, 6]), Some(1));
    }

    #[test]
    fn star_and_k4_detection() {
        let u = [0, 1, 2, 3, 4];
        let star: EdgeSet = [1, 2, 3, 4].iter().map(|&w| edge(0, w)).collect();
        assert_eq!(star_center(&star, &u), Some(0));
        let mut not_star = star.clone();
        not_star.remove(&edge(0, 4));
        not_star.insert(edge(1, 2));
        assert_eq!(star_center(&not_star, &u), None);
        assert_eq!(k4_inside(&star, &u), None);
        let k4 = complete_edges(&[1, 2, 3, 4]);
        assert_eq!(k4_inside(&k4, &u), Some([1, 2, 3, 4]));
        assert_eq!(k4_inside(&complete_edges(&u), &u), Some([0, 1, 2, 3]));
    }

    #[test]
    fn type_star_degree_check() {
        let m = GenericMatroid::new(6, 10);
        assert!(!m.is_type_star(&Graph::complete(5), 0));
        // K6: the rest of the graph is K5, whose closure on N(v0) is complete.
        assert!(!m.is_type_star(&Graph::complete(6), 0));
    }

    #[test]
    fn permutations_count() {
        assert_eq!(permutations(&[1, 2, 3, 4]).len(), 24);
    }

    #[test]
    fn concurrent_queries_agree() {
        let m = GenericMatroid::new(6, 11);
        let f = Graph::complete(5).edges().clone();
        let results: Vec<usize> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..4).map(|_| s.spawn(|| m.rank(&f))).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(results.iter().all(|&r| r == 9));
    }
}
