//! Diagonal reduction to the classic matrix game, and an exact game oracle.
//!
//! A vector game `a₁…a_m ∈ ℝⁿ` has payoff `Σ yᵢ aᵢᵀx` with `x` minimizing over
//! `S_n` and `y` maximizing over `S_m`. Embedding every `aᵢ` as `diag(aᵢ)` turns
//! it into a spectral instance with the same value.
//!
//! The oracle enumerates square supports. For row set `I` and column set `J`
//! with `|I| = |J| = k`, it solves both bordered equalizer systems. A candidate
//! is accepted when both strategies are nonnegative and no pure deviation
//! improves on the common value. Run over [`BigRational`], it yields the exact
//! value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};

use crate::domains::InstanceSet;
use crate::error::{Error, Result};
use crate::saddle::{solve_minimax, SaddleCertificate, SaddleConfig};
use crate::scalar::Scalar;
use crate::symmat::SymMatrix;

/// Largest `min(m, n)` the support enumeration accepts.
pub const MAX_ORACLE_SUPPORT: usize = 5;

/// Rows `a₁…a_m` of a vector game, each of length `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorGame<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> VectorGame<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.first().ok_or(Error::EmptyInstance)?.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: r.len(),
                });
            }
            if let Some(j) = r.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite { row: i, col: j });
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn count(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `Aᵢ = diag(aᵢ)`.
pub fn embed_diagonal<T: Scalar>(g: &VectorGame<T>) -> InstanceSet<T> {
    InstanceSet::new(g.rows.iter().map(|r| SymMatrix::from_diagonal(r)).collect()).expect("rows share a common length")
}

/// Ordered field for the support-enumeration oracle.
pub trait GameField: Clone + PartialOrd + Num + Signed + std::fmt::Debug {
    /// Allowed violation in sign and optimality checks; zero for exact types.
    fn slack() -> Self;
    /// Pivots of magnitude at or below this are treated as singular.
    fn pivot_floor() -> Self;
}

impl GameField for f64 {
    fn slack() -> Self {
        1e-9
    }
    fn pivot_floor() -> Self {
        1e-12
    }
}

impl GameField for f32 {
    fn slack() -> Self {
        1e-4
    }
    fn pivot_floor() -> Self {
        1e-6
    }
}

impl GameField for BigRational {
    fn slack() -> Self {
        Self::zero()
    }
    fn pivot_floor() -> Self {
        Self::zero()
    }
}

/// Value and optimal strategies found on one square support.
#[derive(Clone, Debug, PartialEq)]
pub struct GameSolution<F> {
    pub value: F,
    /// Row (maximizer) strategy over all `m` rows.
    pub row_strategy: Vec<F>,
    /// Column (minimizer) strategy over all `n` columns.
    pub column_strategy: Vec<F>,
    pub row_support: Vec<usize>,
    pub column_support: Vec<usize>,
}

/// Solves `A z = rhs` in place by Gaussian elimination with partial pivoting.
fn solve_linear<F: GameField>(mut a: Vec<Vec<F>>, mut rhs: Vec<F>) -> Option<Vec<F>> {
    let size = rhs.len();
    for col in 0..size {
        let pivot = (col..size).max_by(|&r, &s| {
            a[r][col]
                .abs()
                .partial_cmp(&a[s][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].abs() <= F::pivot_floor() {
            return None;
        }
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in (col + 1)..size {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            let (top, bottom) = a.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst = dst.clone() - factor.clone() * src.clone();
            }
            let delta = factor * rhs[col].clone();
            rhs[r] = rhs[r].clone() - delta;
        }
    }
    let mut z = vec![F::zero(); size];
    for r in (0..size).rev() {
        let mut acc = rhs[r].clone();
        for c in (r + 1)..size {
            acc = acc - a[r][c].clone() * z[c].clone();
        }
        z[r] = acc / a[r][r].clone();
    }
    Some(z)
}

/// Equalizer on a support: weights `w` over `support` and value `v` with
/// `Σ_s w_s M[s][t] = v` for every `t` in `targets` and `Σ w = 1`.
fn equalizer<F: GameField>(
    entry: impl Fn(usize, usize) -> F,
    support: &[usize],
    targets: &[usize],
) -> Option<(Vec<F>, F)> {
    let k = support.len();
    let mut a = Vec::with_capacity(k + 1);
    for &t in targets {
        let mut row: Vec<F> = support.iter().map(|&s| entry(s, t)).collect();
        row.push(-F::one());
        a.push(row);
    }
    let mut last = vec![F::one(); k];
    last.push(F::zero());
    a.push(last);
    let mut rhs = vec![F::zero(); k];
    rhs.push(F::one());
    let mut z = solve_linear(a, rhs)?;
    let v = z.pop()?;
    Some((z, v))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
            return out;
        };
        idx[pos] += 1;
        for q in (pos + 1)..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Exact value of the game with payoff `p[i][j]` (row `i` maximizes, column `j`
/// minimizes), by enumerating square supports in lexicographic order.
///
/// In degenerate games the first valid support wins. The value is the same for
/// every valid support, but the returned strategies may differ between them.
pub fn solve_by_support_enumeration<F: GameField>(p: &[Vec<F>]) -> Result<GameSolution<F>> {
    let m = p.len();
    let n = p.first().ok_or(Error::EmptyInstance)?.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if let Some(bad) = p.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let size = m.min(n);
    if size > MAX_ORACLE_SUPPORT {
        return Err(Error::OracleScale {
            size,
            limit: MAX_ORACLE_SUPPORT,
        });
    }
    let slack = F::slack();
    let nonneg = |w: &[F]| w.iter().all(|v| *v >= -slack.clone());
    for k in 1..=size {
        for rows in combinations(m, k) {
            for cols in combinations(n, k) {
                let Some((y, v)) = equalizer(|s, t| p[s][t].clone(), &rows, &cols) else {
                    continue;
                };
                if !nonneg(&y) {
                    continue;
                }
                let Some((x, v_cols)) = equalizer(|s, t| p[t][s].clone(), &cols, &rows) else {
                    continue;
                };
                if !nonneg(&x) || (v.clone() - v_cols).abs() > slack {
                    continue;
                }
                // y guarantees at least v against every column
                let row_ok = (0..n).all(|j| {
                    let payoff = rows
                        .iter()
                        .zip(&y)
                        .fold(F::zero(), |acc, (&i, w)| acc + w.clone() * p[i][j].clone());
                    payoff >= v.clone() - slack.clone()
                });
                // x concedes at most v to every row
                let col_ok = row_ok
                    && (0..m).all(|i| {
                        let payoff = cols
                            .iter()
                            .zip(&x)
                            .fold(F::zero(), |acc, (&j, w)| acc + w.clone() * p[i][j].clone());
                        payoff <= v.clone() + slack.clone()
                    });
                if !col_ok {
                    continue;
                }
                let mut row_strategy = vec![F::zero(); m];
                for (&i, w) in rows.iter().zip(y) {
                    row_strategy[i] = w;
                }
                let mut column_strategy = vec![F::zero(); n];
                for (&j, w) in cols.iter().zip(x) {
                    column_strategy[j] = w;
                }
                return Ok(GameSolution {
                    value: v,
                    row_strategy,
                    column_strategy,
                    row_support: rows,
                    column_support: cols,
                });
            }
        }
    }
    Err(Error::NoSupport)
}

fn to_rational(v: f64) -> BigRational {
    BigRational::from_f64(v).expect("finite entries")
}

/// Exact value of the classic game `min_x max_y Σ yᵢ aᵢᵀx`, computed in rational arithmetic.
pub fn classic_value_exact<T: Scalar>(g: &VectorGame<T>) -> Result<T> {
    let exact = classic_solution_exact(g)?;
    Ok(T::lit(exact.value.to_f64().unwrap_or(f64::NAN)))
}

/// Full rational solution of the classic game.
pub fn classic_solution_exact<T: Scalar>(g: &VectorGame<T>) -> Result<GameSolution<BigRational>> {
    let p: Vec<Vec<BigRational>> = g
        .rows
        .iter()
        .map(|r| r.iter().map(|v| to_rational(v.as_f64())).collect())
        .collect();
    solve_by_support_enumeration(&p)
}

/// Both routes to the value of a vector game, side by side.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalReductionReport<T> {
    pub classic_value: T,
    pub spectral_value: T,
    pub difference: T,
    /// `difference ≤ gap_tol + 1e-8`.
    pub within_tolerance: bool,
    pub certificate: SaddleCertificate<T>,
}

pub fn verify_diagonal_reduction<T: Scalar>(
    g: &VectorGame<T>,
    cfg: &SaddleConfig<T>,
) -> Result<DiagonalReductionReport<T>> {
    let classic_value = classic_value_exact(g)?;
    let certificate = solve_minimax(&embed_diagonal(g), cfg)?;
    let spectral_value = certificate.value();
    let difference = (spectral_value - classic_value).abs();
    Ok(DiagonalReductionReport {
        classic_value,
        spectral_value,
        difference,
        within_tolerance: difference <= cfg.gap_tol + T::lit(1e-8),
        certificate,
    })
}

/// Exact rational from integer numerator and denominator; handy in tests.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn game(rows: &[&[f64]]) -> VectorGame<f64> {
        VectorGame::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn embed_examples() {
        let inst = embed_diagonal(&game(&[&[1.0, 0.0], &[0.0, 1.0]]));
        assert_eq!(inst.matrix(0), &SymMatrix::from_diagonal(&[1.0, 0.0]));
        assert_eq!(inst.matrix(1), &SymMatrix::from_diagonal(&[0.0, 1.0]));
        let inst = embed_diagonal(&game(&[&[1.0, -1.0], &[-1.0, 1.0]]));
        assert_eq!(inst.matrix(1), &SymMatrix::from_diagonal(&[-1.0, 1.0]));
        assert_eq!((inst.order(), inst.count()), (2, 2));
    }

    #[test]
    fn exact_values() {
        assert_eq!(classic_value_exact(&game(&[&[1.0, -1.0], &[-1.0, 1.0]])).unwrap(), 0.0);
        // 2×2 closed form (ad − bc)/(a − b − c + d) = 1/2
        let sol = classic_solution_exact(&game(&[&[1.0, 0.0], &[0.0, 1.0]])).unwrap();
        assert_eq!(sol.value, ratio(1, 2));
        assert_eq!(sol.row_strategy, vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(classic_value_exact(&game(&[&[3.0, 3.0], &[3.0, 3.0]])).unwrap(), 3.0);
        assert_eq!(classic_value_exact(&game(&[&[4.0, -2.0, 7.0]])).unwrap(), -2.0);
    }

    #[test]
    fn rock_paper_scissors_variant() {
        // yᵀP = (1/12, 1/12, 1/12) at y = (1/4, 1/3, 5/12)
        let p: Vec<Vec<BigRational>> = [[0, 2, -1], [-1, 0, 1], [1, -1, 0]]
            .iter()
            .map(|r| r.iter().map(|&v| ratio(v, 1)).collect())
            .collect();
        let sol = solve_by_support_enumeration(&p).unwrap();
        assert_eq!(sol.value, ratio(1, 12));
        assert_eq!(sol.row_strategy, vec![ratio(1, 4), ratio(1, 3), ratio(5, 12)]);
    }

    #[test]
    fn float_field_agrees_with_rational() {
        let p = vec![vec![3.0, -1.0, 2.0], vec![-2.0, 4.0, 0.5]];
        let f = solve_by_support_enumeration(&p).unwrap();
        let q: Vec<Vec<BigRational>> = p.iter().map(|r| r.iter().map(|&v| to_rational(v)).collect()).collect();
        let r = solve_by_support_enumeration(&q).unwrap();
        assert!((f.value - r.value.to_f64().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn oracle_scale_is_enforced() {
        let rows = vec![vec![1.0; 6]; 6];
        assert_eq!(
            classic_value_exact(&VectorGame::new(rows).unwrap()),
            Err(Error::OracleScale { size: 6, limit: 5 })
        );
    }

    #[test]
    fn game_validation() {
        assert!(VectorGame::<f64>::new(vec![]).is_err());
        assert!(VectorGame::new(vec![vec![1.0], vec![1.0, 2.0]]).is_err());
        assert!(VectorGame::new(vec![vec![f64::INFINITY]]).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn diagonal_reduction_examples() {
        let cfg = SaddleConfig::default();
        let r = verify_diagonal_reduction(&game(&[&[1.0, -1.0], &[-1.0, 1.0]]), &cfg).unwrap();
        assert!(r.within_tolerance && r.spectral_value.abs() <= 1e-4);
        let r = verify_diagonal_reduction(&game(&[&[1.0, 0.0], &[0.0, 1.0]]), &cfg).unwrap();
        assert!(r.within_tolerance && (r.spectral_value - 0.5).abs() <= 1e-4);
    }
}
