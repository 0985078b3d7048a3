use cofactor_core::cofactor::{d_vector, is_motion, trivial_motion_basis, Framework, Point};
use cofactor_core::graph::{complete_edges, edge, Edge, EdgeSet, Graph};
use cofactor_core::io::{graph_to_json, graph_to_text, parse_graph};
use cofactor_core::linalg::{format_rational, parse_rational, ratio};
use cofactor_core::matroid::GenericMatroid;
use cofactor_core::motion::vandermonde_identity_check;
use cofactor_core::projective::{lift_motion, unlift_motion};
use cofactor_core::Motion;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point> {
    (-40i64..=40, 1i64..=9, -40i64..=40, 1i64..=9)
        .prop_map(|(a, b, c, d)| Point::new(ratio(a, b), ratio(c, d)))
}

fn k6_subset() -> impl Strategy<Value = EdgeSet> {
    let all: Vec<Edge> = complete_edges(&[0, 1, 2, 3, 4, 5]).into_iter().collect();
    proptest::bits::u16::between(0, 15).prop_map(move |mask| {
        all.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}

fn graph(n: usize) -> impl Strategy<Value = Graph> {
    let all: Vec<Edge> = complete_edges(&(0..n).collect::<Vec<_>>())
        .into_iter()
        .collect();
    let len = all.len();
    proptest::sample::subsequence(all, 0..=len).prop_map(move |es| Graph::new(n, es).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_strings_round_trip(a in -10_000i64..10_000, b in 1i64..500) {
        let q = ratio(a, b);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn d_vector_is_symmetric(p in point(), q in point()) {
        prop_assert_eq!(d_vector(&p, &q), d_vector(&q, &p));
    }

    #[test]
    fn vandermonde_identity(p0 in point(), p1 in point(), p2 in point(), p3 in point()) {
        let (lhs, rhs) = vandermonde_identity_check([&p0, &p1, &p2, &p3]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trivial_motions_always_in_kernel(pts in proptest::collection::vec(point(), 5), g in graph(5)) {
        let f = Framework::new(g, pts).unwrap();
        for q in trivial_motion_basis(&f) {
            prop_assert!(is_motion(&f, &q).unwrap());
        }
    }

    #[test]
    fn lift_unlift_round_trip(raw in proptest::collection::vec((-50i64..50, -50i64..50, -50i64..50), 1..6)) {
        let q = Motion(raw.iter().map(|&(a, b, c)| [ratio(a, 1), ratio(b, 3), ratio(c, 7)]).collect());
        prop_assert_eq!(unlift_motion(&lift_motion(&q)).unwrap(), q);
    }

    #[test]
    fn graph_formats_round_trip(g in graph(6)) {
        prop_assert_eq!(&parse_graph(&graph_to_text(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_graph(&graph_to_json(&g).to_string()).unwrap(), &g);
    }

    #[test]
    fn operations_add_one_vertex_and_three_edges(g in graph(6), a in 0usize..6, b in 0usize..6, c in 0usize..6) {
        prop_assume!(a != b && b != c && a != c);
        let h = g.zero_extension([a, b, c]).unwrap();
        prop_assert_eq!(h.n(), 7);
        prop_assert_eq!(h.edge_count(), g.edge_count() + 3);
        if let Some(&e) = g.edges().iter().find(|e| !e.contains(c) && !e.contains(a)) {
            let h = g.one_extension(e, [e.u(), e.v(), a, c]).unwrap();
            prop_assert_eq!(h.edge_count(), g.edge_count() + 3);
            prop_assert!(!h.has_edge(e));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_bounds_and_closure(f in k6_subset()) {
        let m = GenericMatroid::new(6, 3);
        let r = m.rank(&f);
        prop_assert!(r <= f.len());
        prop_assert!(r <= 3 * 6 - 6);
        let cl = m.closure(&f);
        prop_assert!(f.is_subset(&cl));
        prop_assert_eq!(m.rank(&cl), r);
        prop_assert_eq!(m.closure(&cl), cl);
    }

    #[test]
    fn rank_is_seed_independent_on_small_sets(f in k6_subset(), seed in any::<u64>()) {
        prop_assert_eq!(GenericMatroid::new(6, seed).rank(&f), GenericMatroid::new(6, 7).rank(&f));
    }

    #[test]
    fn adding_an_edge_raises_rank_by_at_most_one(f in k6_subset(), u in 0usize..6, v in 0usize..6) {
        prop_assume!(u != v);
        let m = GenericMatroid::new(6, 4);
        let mut g = f.clone();
        g.insert(edge(u, v));
        let (a, b) = (m.rank(&f), m.rank(&g));
        prop_assert!(a <= b && b <= a + 1);
    }
}
