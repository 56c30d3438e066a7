mod common;

use linerig::connectivity::is_k_connected;
use linerig::elekes_sharir::{from_line, phi, phi_inverse, recover_motion, to_line, PointPair};
use linerig::geometry::{intersection_graph, meet_residual};
use linerig::graph::{generate, parse_graph, Edge, GraphFormat};
use linerig::henneberg::{apply_henneberg, apply_jj, extract_henneberg, extract_jj, HennebergStep};
use linerig::numeric::{edge_function, numeric_rank, rank_exact, rigidity_matrix, Embedding, IntMatrix};
use linerig::sampler::sample_congruent_pair;
use linerig::sparsity::{is_hendrickson, is_laman, sparsity_rank};
use linerig::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random valid Henneberg sequence growing `K2` to `n` vertices.
fn random_steps(n: usize, seed: u64) -> Vec<HennebergStep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Edge> = vec![(0, 1)];
    let mut steps = Vec::new();
    for k in 2..n {
        let ext1 = rng.gen_bool(0.5) && k >= 3;
        if ext1 {
            let (u, v) = edges[rng.gen_range(0..edges.len())];
            let w = loop {
                let w = rng.gen_range(0..k);
                if w != u && w != v {
                    break w;
                }
            };
            edges.retain(|&e| e != (u, v));
            edges.extend([(u, k), (v, k), (w, k)]);
            steps.push(HennebergStep::Ext1 { u, v, w });
        } else {
            let u = rng.gen_range(0..k);
            let v = loop {
                let v = rng.gen_range(0..k);
                if v != u {
                    break v;
                }
            };
            edges.extend([(u, k), (v, k)]);
            steps.push(HennebergStep::Ext0 { u, v });
        }
    }
    steps
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}

fn int_point() -> impl Strategy<Value = [i64; 2]> {
    [-1000i64..=1000, -1000i64..=1000]
}

fn as_f64(p: [i64; 2]) -> [f64; 2] {
    [p[0] as f64, p[1] as f64]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_and_edge_list_round_trip(n in 0usize..9, p in 0.0f64..1.0, seed: u64) {
        let g = common::random_graph(n, p, seed);
        prop_assert_eq!(parse_graph(&g.to_json(), GraphFormat::Json).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&g.to_edge_list(), GraphFormat::EdgeList).unwrap(), g);
    }

    #[test]
    fn sparsity_rank_matches_definition(n in 2usize..8, p in 0.1f64..1.0, seed: u64) {
        let g = common::random_graph(n, p, seed);
        let r = sparsity_rank(&g).unwrap();
        prop_assert_eq!(r.rank, common::brute_sparsity_rank(&g));
        prop_assert!(common::sparse_by_definition(n, &r.witness));
        prop_assert_eq!(is_laman(&g).unwrap(), common::brute_is_laman(&g));
    }

    #[test]
    fn sparsity_rank_is_label_free(n in 2usize..10, p in 0.1f64..1.0, seed: u64) {
        let g = common::random_graph(n, p, seed);
        let h = g.relabel(&permutation(n, seed ^ 1)).unwrap();
        prop_assert_eq!(sparsity_rank(&g).unwrap().rank, sparsity_rank(&h).unwrap().rank);
    }

    #[test]
    fn henneberg_moves_preserve_laman(n in 2usize..14, seed: u64) {
        let g = apply_henneberg(&random_steps(n, seed)).unwrap();
        prop_assert_eq!(g.n(), n);
        prop_assert!(is_laman(&g).unwrap());
    }

    #[test]
    fn henneberg_round_trip_after_relabeling(n in 2usize..13, seed: u64) {
        let g = apply_henneberg(&random_steps(n, seed)).unwrap();
        let h = g.relabel(&permutation(n, seed.wrapping_add(7))).unwrap();
        let ex = extract_henneberg(&h).unwrap();
        prop_assert_eq!(apply_henneberg(&ex.steps).unwrap(), h.relabel(&ex.relabel).unwrap());
    }

    #[test]
    fn jj_graphs_are_hendrickson_and_round_trip(n in 4usize..9, seed in 0u64..1000) {
        let g = generate("hendrickson_random", &[n as u64, seed]).unwrap();
        prop_assert!(is_hendrickson(&g).unwrap());
        let ex = extract_jj(&g).unwrap();
        prop_assert_eq!(apply_jj(&ex.steps).unwrap(), g.relabel(&ex.relabel).unwrap());
    }

    #[test]
    fn connectivity_matches_brute_force_and_is_monotone(n in 1usize..8, p in 0.2f64..1.0, seed: u64) {
        let g = common::random_graph(n, p, seed);
        for k in 1..=4 {
            if n <= k {
                prop_assert!(is_k_connected(&g, k).is_err());
                continue;
            }
            let fast = is_k_connected(&g, k).unwrap();
            prop_assert_eq!(fast, common::brute_k_connected(&g, k), "k = {}", k);
            if fast && k > 1 {
                prop_assert!(is_k_connected(&g, k - 1).unwrap());
            }
        }
    }

    #[test]
    fn adding_an_edge_keeps_connectivity(n in 4usize..8, p in 0.2f64..0.9, seed: u64) {
        let g = common::random_graph(n, p, seed);
        let missing: Vec<Edge> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !g.has_edge(i, j))
            .collect();
        if let Some(&(u, v)) = missing.first() {
            let h = g.with_edge(u, v).unwrap();
            for k in 1..=3 {
                if is_k_connected(&g, k).unwrap() {
                    prop_assert!(is_k_connected(&h, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn meet_residual_is_symmetric(a in int_point(), b in int_point(), c in int_point(), d in int_point()) {
        let l1 = to_line(&PointPair::new(as_f64(a), as_f64(b)));
        let l2 = to_line(&PointPair::new(as_f64(c), as_f64(d)));
        prop_assert_eq!(meet_residual(&l1, &l2), meet_residual(&l2, &l1));
        prop_assert_eq!(meet_residual(&l1, &l1), 0.0);
    }

    #[test]
    fn transform_inverts(a in int_point(), b in int_point()) {
        let pair = PointPair::new(as_f64(a), as_f64(b));
        prop_assert_eq!(from_line(&to_line(&pair)), pair);
    }

    #[test]
    fn phi_inverse_round_trip(n in 1usize..8, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Embedding::random_integer(n, &mut rng);
        let q = Embedding::random_integer(n, &mut rng);
        let (p2, q2) = phi_inverse(&phi(&p, &q).unwrap());
        prop_assert_eq!(p2, p);
        prop_assert_eq!(q2, q);
    }

    #[test]
    fn congruent_pairs_map_to_pairwise_meeting_lines(n in 2usize..8, orientation in prop::sample::select(vec![1i8, -1]), seed: u64) {
        let (p, q) = sample_congruent_pair(n, orientation, seed);
        prop_assert!(intersection_graph(&phi(&p, &q).unwrap(), 1e-12).is_complete());
        let motion = recover_motion(&p.points, &q.points, orientation, 1e-9).unwrap();
        prop_assert_eq!(motion.orientation(), orientation);
    }

    #[test]
    fn edge_lengths_and_rank_survive_isometries(n in 3usize..9, angle in 0.0f64..6.28, seed: u64) {
        let g = generate("laman_random", &[n as u64, seed % 1000]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Embedding::random_integer(n, &mut rng);
        let (s, c) = angle.sin_cos();
        let t = [rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0)];
        let q = Embedding::new(p.points.iter().map(|&[x, y]| [c * x - s * y + t[0], s * x + c * y + t[1]]).collect());
        let (fp, fq) = (edge_function(&g, &p).unwrap(), edge_function(&g, &q).unwrap());
        for (a, b) in fp.iter().zip(&fq) {
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
        }
        let rp = numeric_rank(&rigidity_matrix(&g, &p).unwrap(), 1e-8);
        let rq = numeric_rank(&rigidity_matrix(&g, &q).unwrap(), 1e-8);
        prop_assert_eq!(rp, rq);
        prop_assert_eq!(rp, 2 * n - 3);
    }

    #[test]
    fn exact_rank_bounded_by_factorization(rows in 1usize..8, cols in 1usize..8, inner in 1usize..5, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rand_rows = |r: usize, c: usize| -> Vec<Vec<i64>> {
            (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect()
        };
        let b = rand_rows(rows, inner);
        let c = rand_rows(inner, cols);
        let prod: Vec<Vec<i64>> = (0..rows)
            .map(|i| (0..cols).map(|j| (0..inner).map(|k| b[i][k] * c[k][j]).sum()).collect())
            .collect();
        let m = IntMatrix::from_rows(&prod);
        let t: Vec<Vec<i64>> = (0..cols).map(|j| (0..rows).map(|i| prod[i][j]).collect()).collect();
        let r = rank_exact(&m);
        prop_assert!(r <= inner.min(rows).min(cols));
        prop_assert_eq!(r, rank_exact(&IntMatrix::from_rows(&t)));
    }
}

#[test]
fn laman_graphs_have_full_sparsity_rank() {
    for n in 2..12u64 {
        let g: Graph = generate("laman_random", &[n, n * 31]).unwrap();
        assert_eq!(sparsity_rank(&g).unwrap().rank, 2 * n as usize - 3);
    }
}
