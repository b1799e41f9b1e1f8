//! Explicit primal–dual semidefinite embedding of the minimax problem.
//!
//! The upper-bound program `min { δ : Aᵢ • X ≤ δ, X ∈ spectraplex }` becomes the
//! standard-form SDP
//!
//! ```text
//! min C' • X'   s.t.  A'ᵢ • X' = 0 (i = 1..m),  E' • X' = 1,  X' ⪰ 0
//! A'ᵢ = diag(Aᵢ + σI, E^m_i, −1),  E' = diag(I_n, 0),  C' = E^{n'}_{n'}
//! ```
//!
//! of order `n' = n + m + 1`, with `X' = diag(X, s, δ)`. Its dual,
//! `max { t : Σ yᵢ A'ᵢ + t E' + S = C', S ⪰ 0 }`, is the lower-bound program after
//! the substitution `y → −y`. The shift `σ` moves every instance into the regime
//! `δ* ≥ 1`, where `X'` is PSD. Values are shifted back by `σ` when reported.

use crate::domains::{InstanceSet, SimplexPoint, SpectraplexPoint};
use crate::error::{DualBlock, Error, Result};
use crate::saddle::{SaddleCertificate, Sense};
use crate::scalar::Scalar;
use crate::symmat::{eigh, frobenius_inner, lambda_min, SymMatrix};
use crate::tolerance::Tolerances;

/// How the embedding chooses `σ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ShiftPolicy {
    /// `σ = max(0, −min_i λ_min(Aᵢ)) + 1`, so every shifted `Aᵢ ⪰ I`.
    #[default]
    Auto,
    /// `σ = 0`.
    None,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SdpEmbedding<T> {
    aprime: Vec<SymMatrix<T>>,
    eprime: SymMatrix<T>,
    cprime: SymMatrix<T>,
    n: usize,
    m: usize,
    shift: T,
}

impl<T: Scalar> SdpEmbedding<T> {
    pub fn aprime(&self) -> &[SymMatrix<T>] {
        &self.aprime
    }

    pub fn eprime(&self) -> &SymMatrix<T> {
        &self.eprime
    }

    pub fn cprime(&self) -> &SymMatrix<T> {
        &self.cprime
    }

    /// Original order `n`.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of original matrices `m`.
    pub fn count(&self) -> usize {
        self.m
    }

    /// `n' = n + m + 1`.
    pub fn embedded_order(&self) -> usize {
        self.n + self.m + 1
    }

    pub fn shift(&self) -> T {
        self.shift
    }

    /// Top-left block of `A'ᵢ`, i.e. `Aᵢ + σI`.
    pub fn shifted_matrix(&self, i: usize) -> SymMatrix<T> {
        self.aprime[i].principal_block(0, self.n)
    }

    fn shifted_instance(&self) -> InstanceSet<T> {
        InstanceSet::new((0..self.m).map(|i| self.shifted_matrix(i)).collect())
            .expect("embedding holds m >= 1 matrices of equal order")
    }

    fn check(&self, inst: &InstanceSet<T>) -> Result<()> {
        for (expected, found) in [(self.n, inst.order()), (self.m, inst.count())] {
            if expected != found {
                return Err(Error::DimensionMismatch { expected, found });
            }
        }
        Ok(())
    }
}

pub fn build_embedding<T: Scalar>(inst: &InstanceSet<T>, policy: ShiftPolicy) -> Result<SdpEmbedding<T>> {
    let n = inst.order();
    let m = inst.count();
    let shift = match policy {
        ShiftPolicy::None => T::zero(),
        ShiftPolicy::Auto => {
            let mut lowest = T::infinity();
            for a in inst.matrices() {
                lowest = lowest.min(lambda_min(a)?);
            }
            T::zero().max(-lowest) + T::one()
        }
    };
    let tail = SymMatrix::from_diagonal(&[-T::one()]);
    let aprime = inst
        .matrices()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let shifted = if shift == T::zero() {
                a.clone()
            } else {
                a.shifted(shift)
            };
            let mut unit = vec![T::zero(); m];
            unit[i] = T::one();
            SymMatrix::block_diagonal(&[&shifted, &SymMatrix::from_diagonal(&unit), &tail])
        })
        .collect();
    let mut e = vec![T::zero(); n + m + 1];
    e[..n].fill(T::one());
    let mut c = vec![T::zero(); n + m + 1];
    c[n + m] = T::one();
    Ok(SdpEmbedding {
        aprime,
        eprime: SymMatrix::from_diagonal(&e),
        cprime: SymMatrix::from_diagonal(&c),
        n,
        m,
        shift,
    })
}

/// A point `X' = diag(X, s₁…s_m, δ)` of the embedded primal.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimalLift<T> {
    pub xprime: SymMatrix<T>,
    pub slacks: Vec<T>,
    /// Embedded objective `C' • X' = δ` (shifted units).
    pub delta: T,
    /// `|A'ᵢ • X'|` for each `i`.
    pub constraint_residuals: Vec<T>,
    /// `|E' • X' − 1|`.
    pub normalization_residual: T,
}

impl<T: Scalar> PrimalLift<T> {
    pub fn max_residual(&self) -> T {
        self.constraint_residuals
            .iter()
            .copied()
            .fold(self.normalization_residual, T::max)
    }
}

fn lift_primal_at<T: Scalar>(x: &SpectraplexPoint<T>, emb: &SdpEmbedding<T>, margin: T) -> Result<PrimalLift<T>> {
    if x.order() != emb.n {
        return Err(Error::DimensionMismatch {
            expected: emb.n,
            found: x.order(),
        });
    }
    let values = (0..emb.m)
        .map(|i| frobenius_inner(&emb.shifted_matrix(i), x.matrix()))
        .collect::<Result<Vec<_>>>()?;
    let delta = values.iter().copied().fold(T::neg_infinity(), T::max) + margin;
    if delta < T::zero() {
        return Err(Error::NegativeObjective { delta: delta.as_f64() });
    }
    let slacks: Vec<T> = values.iter().map(|&v| delta - v).collect();
    let xprime = SymMatrix::block_diagonal(&[
        x.matrix(),
        &SymMatrix::from_diagonal(&slacks),
        &SymMatrix::from_diagonal(&[delta]),
    ]);
    let constraint_residuals = emb
        .aprime
        .iter()
        .map(|a| frobenius_inner(a, &xprime).map(|v| v.abs()))
        .collect::<Result<Vec<_>>>()?;
    let normalization_residual = (frobenius_inner(&emb.eprime, &xprime)? - T::one()).abs();
    Ok(PrimalLift {
        xprime,
        slacks,
        delta,
        constraint_residuals,
        normalization_residual,
    })
}

/// Tight lift: `δ = max_i (Aᵢ + σI) • X`, `sᵢ = δ − (Aᵢ + σI) • X`.
///
/// Fails with [`Error::NegativeObjective`] if `δ < 0`, which can only happen
/// under [`ShiftPolicy::None`].
pub fn lift_primal<T: Scalar>(
    x: &SpectraplexPoint<T>,
    inst: &InstanceSet<T>,
    emb: &SdpEmbedding<T>,
) -> Result<PrimalLift<T>> {
    emb.check(inst)?;
    lift_primal_at(x, emb, T::zero())
}

/// Strictly feasible primal point: `X = I/n`, `δ = max_i (Aᵢ + σI) • X + 1`.
///
/// Every slack is at least 1, so `X'` is positive definite whenever `δ > 0`.
pub fn interior_primal_point<T: Scalar>(inst: &InstanceSet<T>, emb: &SdpEmbedding<T>) -> Result<PrimalLift<T>> {
    emb.check(inst)?;
    lift_primal_at(&SpectraplexPoint::uniform(emb.n), emb, T::one())
}

/// A dual point `(y_raw, t, S)` of the embedded program.
#[derive(Clone, Debug, PartialEq)]
pub struct DualLift<T> {
    /// Embedded multipliers, `−y` for a simplex-side `y`.
    pub y_raw: Vec<T>,
    /// Dual objective, in shifted units.
    pub t: T,
    pub s: SymMatrix<T>,
    /// `max |Σ y_raw,i A'ᵢ + t E' + S − C'|`.
    pub residual: T,
}

impl<T: Scalar> DualLift<T> {
    pub fn min_eigenvalue(&self) -> Result<T> {
        lambda_min(&self.s)
    }
}

fn dual_from_multipliers<T: Scalar>(y_raw: Vec<T>, t: T, emb: &SdpEmbedding<T>) -> Result<DualLift<T>> {
    let mut s = emb.cprime.clone();
    for (&y, a) in y_raw.iter().zip(&emb.aprime) {
        s.add_scaled(-y, a)?;
    }
    s.add_scaled(-t, &emb.eprime)?;

    let mut check = s.clone();
    for (&y, a) in y_raw.iter().zip(&emb.aprime) {
        check.add_scaled(y, a)?;
    }
    check.add_scaled(t, &emb.eprime)?;
    let residual = check.max_abs_diff(&emb.cprime)?;
    Ok(DualLift { y_raw, t, s, residual })
}

/// Maps a lower-bound pair `(y, t)` with `λ_min(Σ yᵢ(Aᵢ + σI)) ≥ t` into the
/// embedded dual as `y_raw = −y` and `S = C' − Σ y_raw,i A'ᵢ − t E'`.
///
/// `t` is in shifted units. An infeasible pair is reported with the block of `S` that fails.
pub fn lift_dual<T: Scalar>(
    y: &SimplexPoint<T>,
    t: T,
    inst: &InstanceSet<T>,
    emb: &SdpEmbedding<T>,
) -> Result<DualLift<T>> {
    emb.check(inst)?;
    if y.len() != emb.m {
        return Err(Error::DimensionMismatch {
            expected: emb.m,
            found: y.len(),
        });
    }
    let tol = Tolerances::<T>::default();
    let lift = dual_from_multipliers(y.weights().iter().map(|&v| -v).collect(), t, emb)?;

    let n = emb.n;
    let spectral = lambda_min(&lift.s.principal_block(0, n))?;
    if spectral < -tol.lift_psd {
        return Err(Error::DualInfeasible {
            block: DualBlock::Spectral,
            min_eigenvalue: spectral.as_f64(),
        });
    }
    let multipliers = (0..emb.m).map(|i| lift.s.get(n + i, n + i)).fold(T::infinity(), T::min);
    if multipliers < -tol.lift_psd {
        return Err(Error::DualInfeasible {
            block: DualBlock::Multipliers,
            min_eigenvalue: multipliers.as_f64(),
        });
    }
    let last = lift.s.get(n + emb.m, n + emb.m);
    if last < -tol.lift_psd {
        return Err(Error::DualInfeasible {
            block: DualBlock::Normalization,
            min_eigenvalue: last.as_f64(),
        });
    }
    Ok(lift)
}

/// Result of reading a simplex point back out of an embedded dual.
#[derive(Clone, Debug, PartialEq)]
pub enum DualExtraction<T> {
    /// `y` rescaled onto the simplex and the lower bound `t / Σyᵢ − σ` on the original instance.
    Certified { y: SimplexPoint<T>, lower: T },
    /// `Σ yᵢ ≈ 0` with `t ≤ 0`: no simplex point can be recovered. `t` is the unscaled shifted value.
    Degenerate { t: T },
}

/// Undoes the sign flip, clamps rounding-level negatives, and rescales onto the simplex.
pub fn extract_dual<T: Scalar>(lift: &DualLift<T>, emb: &SdpEmbedding<T>) -> Result<DualExtraction<T>> {
    if lift.y_raw.len() != emb.m {
        return Err(Error::DimensionMismatch {
            expected: emb.m,
            found: lift.y_raw.len(),
        });
    }
    let tol = Tolerances::<T>::default();
    let mut y: Vec<T> = Vec::with_capacity(emb.m);
    for (i, &raw) in lift.y_raw.iter().enumerate() {
        let v = -raw;
        if v < -tol.clamp {
            return Err(Error::InvalidLift(format!("multiplier {i} is {v}, expected >= 0")));
        }
        y.push(v.max(T::zero()));
    }
    let sum: T = y.iter().copied().sum();
    if sum > T::one() + tol.clamp {
        return Err(Error::InvalidLift(format!("multipliers sum to {sum} > 1")));
    }
    if sum <= tol.degenerate_sum {
        if lift.t > T::zero() {
            return Err(Error::DegenerateMultiplier {
                sum: sum.as_f64(),
                t: lift.t.as_f64(),
            });
        }
        return Ok(DualExtraction::Degenerate { t: lift.t });
    }
    let y = SimplexPoint::new_with(y.iter().map(|&v| v / sum).collect(), &tol)?;
    Ok(DualExtraction::Certified {
        y,
        lower: lift.t / sum - emb.shift,
    })
}

/// Strictly feasible dual point: `y_raw,i = −1/(2m)`, `t = λ_min(Σ (Aᵢ + σI)/(2m)) − 1`.
///
/// Then `S = diag(Σ (Aᵢ+σI)/(2m) − tI, I/(2m), 1/2)` has every eigenvalue at least
/// `min(1, 1/(2m))` in exact arithmetic.
pub fn interior_dual_point<T: Scalar>(inst: &InstanceSet<T>, emb: &SdpEmbedding<T>) -> Result<DualLift<T>> {
    emb.check(inst)?;
    let w = T::one() / T::lit((2 * emb.m) as f64);
    let shifted = emb.shifted_instance();
    let combo = SymMatrix::linear_combination(&vec![w; emb.m], shifted.matrices())?;
    let t = lambda_min(&combo)? - T::one();
    dual_from_multipliers(vec![-w; emb.m], t, emb)
}

/// `C' • X' − t`, the embedded duality gap. Nonnegative up to rounding for feasible lifts.
pub fn weak_duality_check<T: Scalar>(p: &PrimalLift<T>, d: &DualLift<T>, emb: &SdpEmbedding<T>) -> Result<T> {
    Ok(frobenius_inner(&emb.cprime, &p.xprime)? - d.t)
}

/// A saddle certificate carried through the embedding and read back out.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddedCertificate<T> {
    pub embedding: SdpEmbedding<T>,
    pub primal: PrimalLift<T>,
    pub dual: DualLift<T>,
    /// Lower bound recovered by [`extract_dual`] on the original instance.
    pub extracted_lower: T,
    /// `δ̂ − σ`, the upper bound in original units.
    pub upper: T,
    /// `weak_duality_check(primal, dual)`.
    pub duality_gap: T,
}

/// Lifts `X̄` and `(ȳ, lower + σ)` of a minimax certificate into the embedding,
/// checks feasibility, and extracts the lower bound again.
pub fn transport_certificate<T: Scalar>(
    cert: &SaddleCertificate<T>,
    inst: &InstanceSet<T>,
    policy: ShiftPolicy,
) -> Result<EmbeddedCertificate<T>> {
    if cert.sense != Sense::Minimax {
        return Err(Error::InvalidArgument(
            "only minimax certificates embed directly; negate the instance for maximin".into(),
        ));
    }
    let embedding = build_embedding(inst, policy)?;
    let primal = lift_primal(&cert.x_bar, inst, &embedding)?;
    // t is evaluated on the shifted matrices themselves so S's top block is PSD to rounding.
    let combo = SymMatrix::linear_combination(cert.y_bar.weights(), embedding.shifted_instance().matrices())?;
    let eig = eigh(&combo)?;
    let t = eig.eigenvalues()[0];
    let dual = lift_dual(&cert.y_bar, t, inst, &embedding)?;
    let extracted_lower = match extract_dual(&dual, &embedding)? {
        DualExtraction::Certified { lower, .. } => lower,
        DualExtraction::Degenerate { .. } => unreachable!("simplex multipliers sum to one"),
    };
    let duality_gap = weak_duality_check(&primal, &dual, &embedding)?;
    Ok(EmbeddedCertificate {
        upper: primal.delta - embedding.shift,
        embedding,
        primal,
        dual,
        extracted_lower,
        duality_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pauli() -> InstanceSet<f64> {
        InstanceSet::new(vec![
            SymMatrix::from_rows(&[[1.0, 0.0], [0.0, -1.0]]).unwrap(),
            SymMatrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap(),
        ])
        .unwrap()
    }

    fn diag_pair() -> InstanceSet<f64> {
        InstanceSet::new(vec![
            SymMatrix::from_diagonal(&[1.0, 0.0]),
            SymMatrix::from_diagonal(&[0.0, 1.0]),
        ])
        .unwrap()
    }

    #[test]
    fn block_layout_for_two_by_two() {
        let emb = build_embedding(&pauli(), ShiftPolicy::None).unwrap();
        assert_eq!(emb.embedded_order(), 5);
        let a1 = &emb.aprime()[0];
        assert_eq!(a1.row(0), &[1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(a1.row(1), &[0.0, -1.0, 0.0, 0.0, 0.0]);
        assert_eq!(a1.row(2), &[0.0, 0.0, 1.0, 0.0, 0.0]);
        assert_eq!(a1.row(3), &[0.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(a1.row(4), &[0.0, 0.0, 0.0, 0.0, -1.0]);
        let a2 = &emb.aprime()[1];
        assert_eq!(a2.row(0), &[0.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(a2.get(3, 3), 1.0);
        assert_eq!(a2.get(2, 2), 0.0);
        assert_eq!(emb.eprime(), &SymMatrix::from_diagonal(&[1.0, 1.0, 0.0, 0.0, 0.0]));
        assert_eq!(emb.cprime(), &SymMatrix::from_diagonal(&[0.0, 0.0, 0.0, 0.0, 1.0]));
        assert_eq!(emb.shift(), 0.0);
    }

    #[test]
    fn auto_shift_makes_matrices_dominate_identity() {
        let emb = build_embedding(&pauli(), ShiftPolicy::Auto).unwrap();
        assert!((emb.shift() - 2.0).abs() < 1e-14);
        let emb = build_embedding(&diag_pair(), ShiftPolicy::Auto).unwrap();
        assert_eq!(emb.shift(), 1.0);
        assert_eq!(emb.shifted_matrix(0), SymMatrix::from_diagonal(&[2.0, 1.0]));
    }

    #[test]
    fn tight_lift_of_vertex_state() {
        let inst = diag_pair();
        let emb = build_embedding(&inst, ShiftPolicy::None).unwrap();
        let x = SpectraplexPoint::rank_one(&[1.0, 0.0]).unwrap();
        let lift = lift_primal(&x, &inst, &emb).unwrap();
        assert_eq!(lift.delta, 1.0);
        assert_eq!(lift.slacks, vec![0.0, 1.0]);
        assert_eq!(lift.xprime, SymMatrix::from_diagonal(&[1.0, 0.0, 0.0, 1.0, 1.0]));
        assert_eq!(lift.max_residual(), 0.0);
        assert_eq!(frobenius_inner(emb.cprime(), &lift.xprime).unwrap(), lift.delta);
    }

    #[test]
    fn negative_objective_is_rejected_without_shift() {
        let inst = InstanceSet::new(vec![SymMatrix::from_diagonal(&[-1.0, -2.0])]).unwrap();
        let emb = build_embedding(&inst, ShiftPolicy::None).unwrap();
        let err = lift_primal(&SpectraplexPoint::uniform(2), &inst, &emb);
        assert!(matches!(err, Err(Error::NegativeObjective { .. })));
    }

    #[test]
    fn interior_primal_is_strict() {
        for inst in [pauli(), diag_pair()] {
            let emb = build_embedding(&inst, ShiftPolicy::Auto).unwrap();
            let p = interior_primal_point(&inst, &emb).unwrap();
            assert!(p.slacks.iter().all(|&s| s > 0.0));
            assert!(p.delta > 0.0);
            assert!(lambda_min(&p.xprime).unwrap() > 0.0);
            assert!(p.max_residual() <= 1e-12);
        }
    }

    #[test]
    fn dual_lift_examples_on_pauli() {
        let inst = pauli();
        let emb = build_embedding(&inst, ShiftPolicy::None).unwrap();
        let y = SimplexPoint::uniform(2);
        // top block ½Z + ½X + 0.8 I has λ_min = 0.8 − 1/√2 > 0
        let lift = lift_dual(&y, -0.8, &inst, &emb).unwrap();
        let top = lambda_min(&lift.s.principal_block(0, 2)).unwrap();
        assert!((top - (0.8 - 0.5f64.sqrt())).abs() < 1e-14);
        assert!(lift.residual <= 1e-12);
        match lift_dual(&y, -0.5, &inst, &emb) {
            Err(Error::DualInfeasible { block, .. }) => assert_eq!(block, DualBlock::Spectral),
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }

    #[test]
    fn dual_lift_at_vertex_boundary() {
        let inst = pauli();
        let emb = build_embedding(&inst, ShiftPolicy::Auto).unwrap();
        for i in 0..2 {
            let t = lambda_min(&emb.shifted_matrix(i)).unwrap();
            let lift = lift_dual(&SimplexPoint::vertex(2, i), t, &inst, &emb).unwrap();
            assert!(lambda_min(&lift.s.principal_block(0, 2)).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn extraction_round_trip_and_scaling() {
        let inst = pauli();
        let emb = build_embedding(&inst, ShiftPolicy::Auto).unwrap();
        let y = SimplexPoint::new(vec![0.3, 0.7]).unwrap();
        let lift = lift_dual(&y, 0.5, &inst, &emb).unwrap();
        match extract_dual(&lift, &emb).unwrap() {
            DualExtraction::Certified { y: got, lower } => {
                assert_eq!(got.weights(), y.weights());
                assert!((lower - (0.5 - emb.shift())).abs() < 1e-15);
            }
            other => panic!("unexpected {other:?}"),
        }

        let scaled = DualLift {
            y_raw: vec![-0.25, -0.25],
            t: 0.3,
            s: SymMatrix::zeros(5),
            residual: 0.0,
        };
        match extract_dual(&scaled, &emb).unwrap() {
            DualExtraction::Certified { y, lower } => {
                assert_eq!(y.weights(), &[0.5, 0.5]);
                assert!((lower - (0.6 - emb.shift())).abs() < 1e-15);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn extraction_errors_and_degeneracy() {
        let emb = build_embedding(&pauli(), ShiftPolicy::Auto).unwrap();
        let make = |y_raw: Vec<f64>, t: f64| DualLift {
            y_raw,
            t,
            s: SymMatrix::zeros(5),
            residual: 0.0,
        };
        assert!(matches!(
            extract_dual(&make(vec![0.1, -0.5], 0.0), &emb),
            Err(Error::InvalidLift(_))
        ));
        assert!(matches!(
            extract_dual(&make(vec![-0.7, -0.7], 0.0), &emb),
            Err(Error::InvalidLift(_))
        ));
        assert!(matches!(
            extract_dual(&make(vec![0.0, 0.0], 0.5), &emb),
            Err(Error::DegenerateMultiplier { .. })
        ));
        assert_eq!(
            extract_dual(&make(vec![0.0, 1e-13], -0.5), &emb).unwrap(),
            DualExtraction::Degenerate { t: -0.5 }
        );
        // rounding-level positive raw multipliers are clamped
        match extract_dual(&make(vec![1e-12, -1.0], 0.2), &emb).unwrap() {
            DualExtraction::Certified { y, .. } => assert_eq!(y.weights(), &[0.0, 1.0]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn interior_dual_examples() {
        let zero = InstanceSet::new(vec![SymMatrix::<f64>::zeros(3)]).unwrap();
        let emb = build_embedding(&zero, ShiftPolicy::None).unwrap();
        let d = interior_dual_point(&zero, &emb).unwrap();
        assert_eq!(d.y_raw, vec![-0.5]);
        assert!(d.t < 0.0);
        assert!(d.min_eigenvalue().unwrap() > 0.0);
        for inst in [pauli(), diag_pair()] {
            let emb = build_embedding(&inst, ShiftPolicy::Auto).unwrap();
            let d = interior_dual_point(&inst, &emb).unwrap();
            assert!(d.min_eigenvalue().unwrap() > 0.0);
            assert!(d.residual <= 1e-12);
        }
    }

    #[test]
    fn weak_duality_examples() {
        let inst = diag_pair();
        let emb = build_embedding(&inst, ShiftPolicy::Auto).unwrap();
        let p = interior_primal_point(&inst, &emb).unwrap();
        let d = interior_dual_point(&inst, &emb).unwrap();
        assert!(weak_duality_check(&p, &d, &emb).unwrap() > 0.0);

        let tight = lift_primal(&SpectraplexPoint::uniform(2), &inst, &emb).unwrap();
        for i in 0..2 {
            let t = lambda_min(&emb.shifted_matrix(i)).unwrap();
            let d = lift_dual(&SimplexPoint::vertex(2, i), t, &inst, &emb).unwrap();
            let gap = weak_duality_check(&tight, &d, &emb).unwrap();
            // upper_value(I/2) = ½ and λ_min(Aᵢ) = 0
            assert!((gap - 0.5).abs() < 1e-15);
        }
    }
}
