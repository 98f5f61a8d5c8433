mod common;

use num_bigint::BigInt;
use perspectra::graph::{
    canonical_form, contains_even_subdivision_k23, graph6_decode, graph6_encode, make_named,
    Family, Graph,
};
use perspectra::permpoly::{per_poly, per_poly_rooted_tree, permanent, EngineKind};
use perspectra::poly::{
    all_roots_real_nonneg, cubic_discriminant, descartes_sign_changes, roots_numeric,
    squarefree_decompose, sturm_count, Bound, IntPoly,
};
use perspectra::spectra::{classify_perspec, odd_index_coeffs_vanish, real_root_signs};
use perspectra::RootedGraph;
use proptest::prelude::*;

use common::{graph_from_bits, prufer_tree};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn tree_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| prufer_tree(n, &seq))
    })
}

/// Products of linear factors `x − a` and quadratics `x² + bx + c`, so the
/// real-root count with multiplicity is known by construction.
fn factored_poly() -> impl Strategy<Value = (IntPoly, usize)> {
    (
        proptest::collection::vec(-4i64..=4, 0..4),
        proptest::collection::vec((-4i64..=4, 1i64..=9), 0..3),
    )
        .prop_map(|(lin, quad)| {
            let mut p = IntPoly::one();
            let mut real = 0;
            for a in lin {
                p = p * IntPoly::from_i64s(&[-a, 1]);
                real += 1;
            }
            for (b, c) in quad {
                p = p * IntPoly::from_i64s(&[c, b, 1]);
                if b * b - 4 * c >= 0 {
                    real += 2;
                }
            }
            (p, real)
        })
}

fn permute(g: &Graph, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    g.permuted(&order)
}

fn matching_count(g: &Graph, m: usize) -> u64 {
    let edges = g.edges();
    (0u32..1 << edges.len())
        .filter(|s| s.count_ones() as usize == m)
        .filter(|s| {
            let mut used = 0u64;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if s >> i & 1 == 1 {
                    if used >> u & 1 == 1 || used >> v & 1 == 1 {
                        return false;
                    }
                    used |= 1 << u | 1 << v;
                }
            }
            true
        })
        .count() as u64
}

/// Edge-subset oracle: some subgraph is connected, has exactly two vertices
/// of degree 3 and all others of degree 2, and every walk out of one branch
/// vertex reaches the other after an even number of steps.
fn has_even_theta_by_subsets(g: &Graph) -> bool {
    let edges = g.edges();
    let n = g.vertex_count();
    'subsets: for s in 1u32..1 << edges.len() {
        let chosen: Vec<(usize, usize)> = (0..edges.len())
            .filter(|i| s >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        let h = Graph::from_edges(n, &chosen).unwrap();
        let touched: Vec<usize> = (0..n).filter(|&v| h.degree(v) > 0).collect();
        let branch: Vec<usize> = touched
            .iter()
            .copied()
            .filter(|&v| h.degree(v) == 3)
            .collect();
        if branch.len() != 2
            || touched
                .iter()
                .any(|&v| h.degree(v) != 2 && h.degree(v) != 3)
        {
            continue;
        }
        let (u, v) = (branch[0], branch[1]);
        for start in h.neighbors(u).collect::<Vec<_>>() {
            let (mut prev, mut cur, mut len) = (u, start, 1);
            while h.degree(cur) == 2 {
                let next = h.neighbors(cur).find(|&w| w != prev).unwrap();
                prev = cur;
                cur = next;
                len += 1;
            }
            if cur != v || len % 2 == 1 {
                continue 'subsets;
            }
        }
        return true;
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn real_root_counts_match_construction((p, real) in factored_poly()) {
        let (_, cert) = all_roots_real_nonneg(&p).unwrap();
        prop_assert_eq!(cert.real_root_count_with_multiplicity, real);
        prop_assert_eq!(cert.total_degree, p.degree().unwrap());
        let roots = roots_numeric(&p).unwrap();
        let numeric_real = roots.iter().filter(|z| z.im.abs() < 1e-6).count();
        prop_assert_eq!(numeric_real, real);
    }

    #[test]
    fn sturm_counts_agree_with_numeric_roots((p, _) in factored_poly(), lo in -5i64..5, width in 1i64..6) {
        let hi = lo + width;
        let roots = roots_numeric(&p).unwrap();
        let mut expected = 0;
        for (f, _) in squarefree_decompose(&p).unwrap() {
            expected += sturm_count(&f, &Bound::int(lo), &Bound::int(hi)).unwrap();
        }
        // distinct real roots inside (lo, hi]; roots near the ends are
        // integers and therefore exact
        let mut inside: Vec<f64> = roots
            .iter()
            .filter(|z| z.im.abs() < 1e-6)
            .map(|z| z.re)
            .filter(|&x| x > lo as f64 + 1e-9 && x <= hi as f64 + 1e-9)
            .collect();
        inside.sort_by(f64::total_cmp);
        inside.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
        prop_assert_eq!(expected, inside.len());
    }

    #[test]
    fn cubic_discriminant_sign(a in prop_oneof![-3i64..=-1, 1i64..=3], b in -9i64..=9, c in -9i64..=9, d in -9i64..=9) {
        let disc = cubic_discriminant(a, b, c, d).unwrap();
        let p = IntPoly::from_i64s(&[d, c, b, a]);
        let distinct_real: usize = squarefree_decompose(&p)
            .unwrap()
            .iter()
            .map(|(f, _)| sturm_count(f, &Bound::NegInfinity, &Bound::PosInfinity).unwrap())
            .sum();
        let zero = BigInt::from(0);
        if disc > zero {
            prop_assert_eq!(distinct_real, 3);
        } else if disc < zero {
            prop_assert_eq!(distinct_real, 1);
        } else {
            prop_assert!(distinct_real <= 2);
        }
        let numeric_real = roots_numeric(&p).unwrap().iter().filter(|z| z.im.abs() < 1e-5).count();
        prop_assert_eq!(disc >= zero, numeric_real == 3);
    }

    #[test]
    fn descartes_bounds_positive_roots((p, _) in factored_poly()) {
        prop_assume!(p.coeff(0) != BigInt::from(0));
        let changes = descartes_sign_changes(&p).unwrap();
        let mut positive = 0;
        for (f, m) in squarefree_decompose(&p).unwrap() {
            positive += m as usize * sturm_count(&f, &Bound::int(0), &Bound::PosInfinity).unwrap();
        }
        prop_assert!(changes >= positive);
        prop_assert_eq!((changes - positive) % 2, 0);
    }

    #[test]
    fn squarefree_reconstruction((p, _) in factored_poly()) {
        let mut rebuilt = IntPoly::one();
        for (f, m) in squarefree_decompose(&p).unwrap() {
            prop_assert!(perspectra::poly::is_squarefree(&f));
            rebuilt = rebuilt * f.pow(m);
        }
        prop_assert_eq!(rebuilt.primitive_part(), p.primitive_part());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(9), seed in any::<u64>()) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&permute(&g, seed)).unwrap());
        prop_assert_eq!(
            per_poly(&g, EngineKind::Sachs).unwrap(),
            per_poly(&permute(&g, seed), EngineKind::Sachs).unwrap()
        );
    }

    #[test]
    fn engines_agree(g in graph_strategy(9)) {
        let p = per_poly(&g, EngineKind::Sachs).unwrap();
        prop_assert_eq!(&per_poly(&g, EngineKind::Expansion).unwrap(), &p);
        prop_assert_eq!(&per_poly(&g, EngineKind::Recursive).unwrap(), &p);
    }

    #[test]
    fn constant_term_is_signed_permanent(g in graph_strategy(10)) {
        let p = per_poly(&g, EngineKind::Sachs).unwrap();
        let per = permanent(&g.adjacency_matrix()).unwrap();
        let signed = if g.vertex_count() % 2 == 0 { per } else { -per };
        prop_assert_eq!(p.coeff(0), signed);
    }

    #[test]
    fn bipartite_iff_odd_coefficients_vanish(g in graph_strategy(9)) {
        let p = per_poly(&g, EngineKind::Sachs).unwrap();
        prop_assert_eq!(g.is_bipartite().is_some(), odd_index_coeffs_vanish(&p));
        // and the polynomial never has a negative real root
        prop_assert_eq!(real_root_signs(&p).unwrap().0, 0);
    }

    #[test]
    fn purely_imaginary_implies_bipartite_and_numeric_agreement(g in graph_strategy(8)) {
        let r = classify_perspec(&per_poly(&g, EngineKind::Sachs).unwrap()).unwrap();
        if r.is_purely_imaginary {
            prop_assert!(g.is_bipartite().is_some());
        }
        let roots = roots_numeric(&r.poly).unwrap();
        prop_assert_eq!(r.is_purely_imaginary, roots.iter().all(|z| z.re.abs() < 1e-8));
    }

    #[test]
    fn tree_coefficients_count_matchings(t in tree_strategy(10), root in 0usize..10) {
        let n = t.vertex_count();
        let p = per_poly(&t, EngineKind::Sachs).unwrap();
        for m in 0..=n / 2 {
            prop_assert_eq!(p.coeff(n - 2 * m), BigInt::from(matching_count(&t, m)));
        }
        let rooted = RootedGraph::new(t.clone(), root % n).unwrap();
        prop_assert_eq!(per_poly_rooted_tree(&rooted).unwrap(), p);
    }

    #[test]
    fn theta_bipartite_iff_same_parity(a in 1usize..6, b in 1usize..6, c in 1usize..6) {
        let g = make_named(Family::Theta(a, b, c)).unwrap();
        prop_assert_eq!(g.is_bipartite().is_some(), a % 2 == b % 2 && b % 2 == c % 2);
        // an even subdivision of K_{2,3} is exactly the all-odd case
        let even = contains_even_subdivision_k23(&g).unwrap().is_some();
        prop_assert_eq!(even, a % 2 == 1 && b % 2 == 1 && c % 2 == 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn even_subdivision_detector_matches_subset_oracle(
        (n, bits) in (4usize..=7).prop_flat_map(|n| (Just(n), proptest::collection::vec(prop::bool::weighted(0.45), n * (n - 1) / 2)))
    ) {
        let g = graph_from_bits(n, &bits);
        prop_assume!(g.edge_count() <= 12);
        let found = contains_even_subdivision_k23(&g).unwrap();
        prop_assert_eq!(found.is_some(), has_even_theta_by_subsets(&g));
    }
}
