mod common;

use proptest::prelude::*;
use torpair::enumerate::engine::default_pipeline;
use torpair::enumerate::{run_case, run_case_with, CaseSpec};
use torpair::homology::{rank, smith_normal_form, IntegerMatrix};

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-5i64..=5, n), n)
}

/// Exact determinant by fraction-free elimination.
fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let (mut prev, mut sign) = (1i128, 1i128);
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn snf_divisibility_and_det(rows in square(4)) {
        let g = smith_normal_form(&IntegerMatrix::new(4, rows.clone()).unwrap()).unwrap();
        let d = &g.invariant_factors;
        prop_assert!(d.iter().all(|&x| x > 1));
        prop_assert!(d.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert_eq!(g.free_rank, 4 - rank(&rows).unwrap());
        let det = bareiss(rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()).abs();
        if det != 0 {
            prop_assert_eq!(d.iter().map(|&x| x as i128).product::<i128>(), det);
        } else {
            prop_assert!(g.free_rank > 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_formula_on_generated_maps(n in 1usize..=2, m in 2usize..=5, pick in any::<prop::sample::Index>()) {
        let maps = common::all_maps(n, m, 2);
        let g = &maps[pick.index(maps.len())];
        let f = common::brute_faces(g).len() as i64;
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + f;
        prop_assert_eq!(chi, g.euler_characteristic());
        if g.is_connected() {
            prop_assert_eq!(chi, 2 - 2 * g.map_genus() as i64);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn survivors_ignore_pipeline_order(perm in Just(default_pipeline()).prop_shuffle(), klein in any::<bool>(), distance in prop::option::of(Just(5i64))) {
        let mut spec = CaseSpec::new(2, 2, 5);
        spec.klein_free_beta = klein;
        spec.distance = distance;
        prop_assert_eq!(run_case_with(&spec, &perm, 1).survivor_ids(), run_case(&spec).survivor_ids());
    }
}
