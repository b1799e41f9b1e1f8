use num_traits::ToPrimitive;
use proptest::prelude::*;

use specmm::classic::{classic_solution_exact, embed_diagonal, ratio};
use specmm::domains::{SimplexPoint, SpectraplexPoint};
use specmm::saddle::{lower_value, upper_value};
use specmm::{SymMatrix, VectorGame};

fn game(rows: &[Vec<i32>]) -> VectorGame {
    VectorGame::new(rows.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect()).unwrap()
}

fn integer_game() -> impl Strategy<Value = Vec<Vec<i32>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(m, n)| prop::collection::vec(prop::collection::vec(-5i32..=5, n), m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn row_permutation_invariance(rows in integer_game(), rot in 0usize..4) {
        let mut permuted = rows.clone();
        let k = rot % rows.len();
        permuted.rotate_left(k);
        prop_assert_eq!(
            classic_solution_exact(&game(&rows)).unwrap().value,
            classic_solution_exact(&game(&permuted)).unwrap().value
        );
    }

    #[test]
    fn transposition_duality(rows in integer_game()) {
        let n = rows[0].len();
        let flipped: Vec<Vec<i32>> = (0..n).map(|j| rows.iter().map(|r| -r[j]).collect()).collect();
        prop_assert_eq!(
            classic_solution_exact(&game(&rows)).unwrap().value,
            -classic_solution_exact(&game(&flipped)).unwrap().value
        );
    }

    #[test]
    fn constant_shift(rows in integer_game(), c in -7i32..=7) {
        let shifted: Vec<Vec<i32>> = rows.iter().map(|r| r.iter().map(|v| v + c).collect()).collect();
        prop_assert_eq!(
            classic_solution_exact(&game(&shifted)).unwrap().value,
            classic_solution_exact(&game(&rows)).unwrap().value + ratio(c as i64, 1)
        );
    }

    #[test]
    fn diagonal_lower_value_is_min_column(rows in integer_game(), w in prop::collection::vec(1u32..100, 4)) {
        let g = game(&rows);
        let m = g.count();
        let total: f64 = w[..m].iter().map(|&v| v as f64).sum();
        let y = SimplexPoint::new(w[..m].iter().map(|&v| v as f64 / total).collect()).unwrap();
        let columns = (0..g.len()).map(|j| (0..m).map(|i| y.weights()[i] * g.rows()[i][j]).sum::<f64>());
        let min_col = columns.fold(f64::INFINITY, f64::min);
        prop_assert!((lower_value(&y, &embed_diagonal(&g)).unwrap() - min_col).abs() <= 1e-12);
    }

    #[test]
    fn classic_optimum_is_a_diagonal_spectral_optimum(rows in integer_game()) {
        let g = game(&rows);
        let sol = classic_solution_exact(&g).unwrap();
        let x: Vec<f64> = sol.column_strategy.iter().map(|v| v.to_f64().unwrap()).collect();
        let x = SpectraplexPoint::new(SymMatrix::from_diagonal(&x)).unwrap();
        let up = upper_value(&x, &embed_diagonal(&g)).unwrap();
        prop_assert!((up - sol.value.to_f64().unwrap()).abs() <= 1e-9);
    }
}
