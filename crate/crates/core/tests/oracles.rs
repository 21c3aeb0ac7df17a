mod common;

use pierce_core::graph::turan_edges;
use pierce_core::pipeline::{cloud_fractions, greedy_bound, replicate};
use pierce_core::witness::{expected_pierced_ceil, not_spread_fraction_bound, pierced_count, quadruple_pierces};
use pierce_core::{
    body_contains, brute_min_transversal, build_meet_graph, build_witness_list, candidate_points, cloud_expand,
    containment_signature, find_heavy_point, fractional_packing, fractional_transversal, gallery7, gen_clustered,
    gen_pairwise, greedy_transversal, is_spread_out, run_pipeline, turan_pair_check, verify_p2, CandidateSet, ColorGraph,
    ConvexBody, CurveModel, P2Status, Point2, RunConfig, SearchStrategy, SeparatorQuadruple, GALLERY_DELTA, TOL_GEOM,
};

#[test]
fn pairwise_generator_gives_complete_graph() {
    let inst = gen_pairwise(50, 1).unwrap();
    let g = build_meet_graph(&inst.bodies, &inst.curve);
    assert_eq!(g.edge_count(), 50 * 49 / 2);
}

#[test]
fn clustered_generator_is_tight() {
    let inst = gen_clustered(4, 60, 7).unwrap();
    let g = build_meet_graph(&inst.bodies, &inst.curve);
    assert!(verify_p2(&g, 4).unwrap().holds());
    // three pairwise non-meeting bodies, one per cluster
    match verify_p2(&g, 3).unwrap() {
        P2Status::Violated(set) => {
            assert_eq!(set.len(), 3);
            for (i, &a) in set.iter().enumerate() {
                for &b in &set[i + 1..] {
                    assert!(!g.has_edge(a, b));
                }
            }
        }
        other => panic!("expected an independent triple, got {other:?}"),
    }
    let t = turan_pair_check(&g, 4).unwrap();
    assert!(t.ok && t.exact_ok);
}

#[test]
fn replication_keeps_the_condition() {
    let inst = gen_clustered(3, 12, 2).unwrap();
    let m: Vec<u64> = (0..12).map(|i| i % 3).collect();
    let rep = replicate(&inst.bodies, &m).unwrap();
    assert_eq!(rep.bodies.len(), m.iter().sum::<u64>() as usize);
    let g = build_meet_graph(&rep.bodies, &inst.curve);
    assert!(verify_p2(&g, 3).unwrap().holds());
}

#[test]
fn gallery_structure() {
    let inst = gallery7(GALLERY_DELTA).unwrap();
    let g = build_meet_graph(&inst.bodies, &inst.curve);
    assert_eq!(g.edge_count(), 21);
    let q = build_witness_list(&inst.bodies, &inst.curve).unwrap();
    assert_eq!(q.len(), 21);

    let cands = candidate_points(&inst.bodies);
    assert_eq!(brute_min_transversal(&inst.bodies, &cands, 2).unwrap(), None);
    assert_eq!(brute_min_transversal(&inst.bodies, &cands, 3).unwrap().unwrap().len(), 3);

    let mut deep: Vec<Vec<usize>> = cands
        .iter()
        .map(|&x| containment_signature(&inst.bodies, x, TOL_GEOM))
        .filter(|s| s.count() == 4)
        .map(|s| s.iter().collect())
        .collect();
    deep.sort();
    deep.dedup();
    assert_eq!(deep, vec![vec![2, 3, 5, 6], vec![2, 4, 5, 6], vec![3, 4, 5, 6]]);
    let max_depth = cands.iter().map(|&x| containment_signature(&inst.bodies, x, TOL_GEOM).count()).max();
    assert_eq!(max_depth, Some(4));
}

#[test]
fn gallery_lps_and_cloud() {
    let inst = gallery7(GALLERY_DELTA).unwrap();
    let cands = CandidateSet::build(&inst.bodies, TOL_GEOM).unwrap();
    let ft = fractional_transversal(&inst.bodies, &cands).unwrap();
    let fp = fractional_packing(&inst.bodies, &cands).unwrap();
    assert!((ft.size - fp.size).abs() <= 1e-6);
    assert!((ft.size - 15.0 / 7.0).abs() <= 1e-6, "tau* = {}", ft.size);
    let cloud = cloud_expand(&ft, 1000).unwrap();
    for f in cloud_fractions(&inst.bodies, &ft, &cloud, TOL_GEOM) {
        assert!(f >= 1.0 / ft.size - 1e-3, "fraction {f}");
    }
}

#[test]
fn gallery_greedy_and_pipeline() {
    let inst = gallery7(GALLERY_DELTA).unwrap();
    let cands = CandidateSet::build(&inst.bodies, TOL_GEOM).unwrap();
    let greedy = greedy_transversal(&inst.bodies, &cands).unwrap();
    assert_eq!(greedy.len(), 3);
    let report = run_pipeline(&inst.bodies, &inst.curve, 2, &RunConfig::default()).unwrap();
    assert_eq!(report.transversal.len(), 3);
    assert_eq!((report.multiset_size, report.d, report.coverage), (15, 7, 7));
    for b in &inst.bodies {
        assert!(report.transversal.iter().any(|&x| body_contains(b, x, TOL_GEOM)));
    }
}

#[test]
fn gallery_exhaustive_heavy_point() {
    let inst = gallery7(GALLERY_DELTA).unwrap();
    let q = build_witness_list(&inst.bodies, &inst.curve).unwrap();
    let hp = find_heavy_point(&q, &inst.bodies, &inst.curve, SearchStrategy::Exhaustive, 0.027).unwrap();
    assert_eq!(hp.evaluated, 5985);
    assert!(hp.covered >= 4);
    // independent maximum over all C(21,4) quadruples
    let n = q.len();
    let mut best = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = SeparatorQuadruple::new([a, b, c, d], n).unwrap();
                    best = best.max((0..7).filter(|&i| quadruple_pierces(&q, &quad, i)).count());
                }
            }
        }
    }
    assert_eq!(hp.pierced, best);
}

#[test]
fn clustered_pipeline_within_greedy_bound() {
    let inst = gen_clustered(4, 60, 7).unwrap();
    let report = run_pipeline(&inst.bodies, &inst.curve, 4, &RunConfig::default()).unwrap();
    assert!(report.flags.all_hit);
    assert!((report.tau_star - 3.0).abs() <= 1e-6);
    assert!(report.transversal.len() as f64 <= report.tau_star * (1.0 + (60f64).ln()));
    assert!(report.transversal.len() as f64 <= greedy_bound(report.tau_star, 60));
}

#[test]
fn single_triangle() {
    let t = ConvexBody::new(0, vec![Point2::new(0.0, 0.0), Point2::new(2.0, 0.0), Point2::new(0.0, 2.0)]).unwrap();
    let bodies = [t];
    let cands = CandidateSet::build(&bodies, TOL_GEOM).unwrap();
    assert!((fractional_transversal(&bodies, &cands).unwrap().size - 1.0).abs() <= 1e-9);
    let report = run_pipeline(&bodies, &CurveModel::unit_circle(), 2, &RunConfig::default()).unwrap();
    assert_eq!(report.transversal.len(), 1);
    assert!((report.tau_star - 1.0).abs() <= 1e-9);
}

#[test]
fn disjoint_bodies_need_one_point_each() {
    let bodies: Vec<ConvexBody> = (0..4)
        .map(|i| {
            let x = 3.0 * i as f64;
            ConvexBody::new(i, vec![Point2::new(x, 0.0), Point2::new(x + 1.0, 0.0), Point2::new(x + 1.0, 1.0), Point2::new(x, 1.0)])
                .unwrap()
        })
        .collect();
    let cands = CandidateSet::build(&bodies, TOL_GEOM).unwrap();
    assert!((fractional_transversal(&bodies, &cands).unwrap().size - 4.0).abs() <= 1e-9);
    assert!((fractional_packing(&bodies, &cands).unwrap().size - 4.0).abs() <= 1e-9);
    assert_eq!(greedy_transversal(&bodies, &cands).unwrap().len(), 4);
}

#[test]
fn pipeline_is_deterministic() {
    let inst = gen_clustered(3, 20, 5).unwrap();
    let config = RunConfig::default();
    let mut a = run_pipeline(&inst.bodies, &inst.curve, 3, &config).unwrap();
    let mut b = run_pipeline(&inst.bodies, &inst.curve, 3, &config).unwrap();
    a.stages.clear();
    b.stages.clear();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn turan_examples() {
    let k7 = ColorGraph::complete(7);
    let t = turan_pair_check(&k7, 2).unwrap();
    assert_eq!(t.meets, 21);
    assert!(t.ok && (t.bound - 12.25).abs() < 1e-12);

    let two_cliques = ColorGraph::from_edges(
        10,
        (0..10).flat_map(|a| (a + 1..10).map(move |b| (a, b))).filter(|&(a, b)| (a < 5) == (b < 5)),
    )
    .unwrap();
    let t = turan_pair_check(&two_cliques, 3).unwrap();
    assert_eq!(t.meets, 20);
    assert!(t.ok && t.exact_ok);
}

#[test]
fn turan_square_form_fails_for_small_n() {
    // two disjoint edges satisfy the condition for p = 3 with 2 < 16/6 meets
    let g = ColorGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    let t = turan_pair_check(&g, 3).unwrap();
    assert_eq!(t.meets, 2);
    assert!(!t.ok);
    assert_eq!(t.exact_bound, 2);
    assert!(t.exact_ok);
    assert_eq!(turan_edges(4, 2), 4);
}

#[test]
fn exhaustive_piercing_count_on_eight() {
    let q = common::list_with_color(8, &[0, 2, 4, 6]);
    let mut hits = 0;
    for a in 0..8 {
        for b in a + 1..8 {
            for c in b + 1..8 {
                for d in c + 1..8 {
                    let quad = SeparatorQuadruple::new([a, b, c, d], 8).unwrap();
                    hits += usize::from(quadruple_pierces(&q, &quad, 0));
                }
            }
        }
    }
    assert_eq!(hits, 16);
}

#[test]
fn heavy_point_meets_mean_on_pairwise() {
    let inst = gen_pairwise(40, 3).unwrap();
    let q = build_witness_list(&inst.bodies, &inst.curve).unwrap();
    let hp = find_heavy_point(&q, &inst.bodies, &inst.curve, SearchStrategy::Derandomized, 0.027).unwrap();
    assert!(hp.pierced as u64 >= expected_pierced_ceil(&q));
    assert_eq!(pierced_count(&q, &hp.quadruple), hp.pierced);
    assert!(hp.covered >= hp.pierced);
}

#[test]
fn not_spread_count_case_a() {
    let alpha: f64 = 0.027;
    let n = 100;
    let bound = 3.0 * (3.0 * alpha).sqrt() * n as f64 + 10.0 * (n as f64).sqrt();
    for seed in 0..5 {
        let inst = gen_pairwise(n, seed).unwrap();
        let q = build_witness_list(&inst.bodies, &inst.curve).unwrap();
        let not_spread = (0..n).filter(|&c| !is_spread_out(&q, c, alpha)).count();
        assert!(not_spread as f64 <= bound, "seed {seed}: {not_spread} > {bound}");
    }
}

#[test]
fn case_b_fraction() {
    let v = not_spread_fraction_bound(0.5).unwrap();
    assert!((v - 0.75 / 0.925).abs() < 1e-12);
    let v = not_spread_fraction_bound(1.0 - 1e-9).unwrap();
    assert!((v - 0.5 / 0.85).abs() < 1e-6);
    for i in 1..1000 {
        let g = i as f64 / 1000.0;
        assert!(not_spread_fraction_bound(g).unwrap() <= 1.0 - g / 4.0);
    }
}
