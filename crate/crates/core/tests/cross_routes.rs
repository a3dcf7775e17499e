mod common;

use common::*;
use fractal_tutte_core::invariants::{potts_direct, potts_partition, PottsParams};
use fractal_tutte_core::oracle::tutte_deletion_contraction;
use fractal_tutte_core::recursion::tutte_pair;
use fractal_tutte_core::{build_lattice, tutte_eval, tutte_symbolic, BiPoly, ExactRational, LatticeFamily};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = LatticeFamily> {
    prop::sample::select(LatticeFamily::ALL.to_vec())
}

fn rational() -> impl Strategy<Value = ExactRational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| ExactRational::new(p.into(), q.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn pointwise_matches_symbolic(f in family(), n in 0u32..=3, x in rational(), y in rational()) {
        let t = tutte_symbolic(f, n).unwrap();
        prop_assert_eq!(tutte_eval(f, n, &x, &y).unwrap(), t.eval(&x, &y));
    }

    #[test]
    fn potts_mapping_on_random_multigraphs(seed in any::<u64>(), q in 1i64..=3, v in rational()) {
        prop_assume!(v != int(0));
        let g = random_connected_multigraph(&mut rng(seed), 6, 5);
        let params = PottsParams::new(int(q), v);
        let (x, y) = params.tutte_point().unwrap();
        let t = tutte_deletion_contraction(&g).unwrap().eval(&x, &y);
        let mapped = potts_partition(g.vertex_count(), 1, &t, &params).unwrap();
        prop_assert_eq!(mapped, potts_direct(&g, &params).unwrap());
    }
}

#[test]
fn separated_part_is_divisible_and_nonnegative() {
    let x_minus_1 = BiPoly::x() - BiPoly::one();
    for f in LatticeFamily::ALL {
        for n in 0..=4 {
            let pair = tutte_pair(f, n).unwrap();
            let t2 = &x_minus_1 * &pair.n_part;
            assert_eq!(t2.div_exact_x_minus_1().unwrap(), pair.n_part, "{f} n={n}");
            let t = pair.tutte();
            assert!(t.has_nonnegative_coefficients(), "{f} n={n}");
            // T(2,2) = 2^|E| for any graph.
            let edges = expected_counts(f, n).1;
            assert_eq!(
                t.eval(&int(2), &int(2)),
                ExactRational::from_integer(big_pow(2, edges)),
                "{f} n={n}"
            );
        }
    }
}

#[test]
fn tutte_degrees_match_rank_and_nullity() {
    // deg_x T = |V| - 1 and deg_y T = |E| - |V| + 1 for a connected graph.
    for f in LatticeFamily::ALL {
        for n in 0..=3 {
            let g = build_lattice(f, n).unwrap();
            let t = tutte_symbolic(f, n).unwrap();
            let (v, e) = (g.vertex_count() as u32, g.edge_count() as u32);
            assert_eq!(t.degree_x(), Some(v - 1), "{f} n={n}");
            assert_eq!(t.degree_y(), Some(e + 1 - v), "{f} n={n}");
        }
    }
}

#[test]
fn lattice_spanning_trees_match_matrix_tree() {
    for f in LatticeFamily::ALL {
        for n in 0..=3 {
            let g = build_lattice(f, n).unwrap();
            let tau = tutte_eval(f, n, &int(1), &int(1)).unwrap();
            assert_eq!(tau, ExactRational::from_integer(kirchhoff_trees(&g)), "{f} n={n}");
        }
    }
}
