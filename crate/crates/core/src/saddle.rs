//! Certified saddle values for `min_X max_y Σ yᵢ Aᵢ • X` and its maximin twin.
//!
//! Any spectraplex point `X` gives the upper bound `max_i Aᵢ • X`, and any simplex
//! point `y` gives the lower bound `λ_min(Σ yᵢ Aᵢ)`. The solver runs optimistic
//! multiplicative weights for `y` against optimistic matrix multiplicative
//! weights for `X`, and keeps the best pair of bounds it has seen.
//!
//! The dynamics run on the centered, normalized matrices `(Aᵢ − c̄I) / R`, with
//! `c̄ = mean_i Tr(Aᵢ)/n` and `R = max_i ‖Aᵢ − c̄I‖_F`. Neither player can see a
//! common shift or a positive rescaling of the instance, so the reported bounds
//! move exactly with those transformations. Bounds are always evaluated on the
//! original matrices.

use crate::domains::{
    best_response_index, weighted_combination, worst_response_index, InstanceSet, SimplexPoint, SpectraplexPoint,
};
use crate::embed::ShiftPolicy;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symmat::{eigh, frobenius_inner, lambda_max, lambda_min, SymMatrix};

/// Step size in normalized payoff units at `step_scale = 1`.
const BASE_STEP: f64 = 1.25;

#[derive(Clone, Debug, PartialEq)]
pub struct SaddleConfig<T> {
    pub max_iters: usize,
    pub gap_tol: T,
    pub step_scale: T,
    pub shift_policy: ShiftPolicy,
}

impl<T: Scalar> Default for SaddleConfig<T> {
    fn default() -> Self {
        Self {
            max_iters: 5000,
            gap_tol: T::lit(1e-4),
            step_scale: T::one(),
            shift_policy: ShiftPolicy::Auto,
        }
    }
}

impl<T: Scalar> SaddleConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::InvalidArgument("max_iters must be at least 1".into()));
        }
        if !(self.gap_tol > T::zero()) {
            return Err(Error::InvalidArgument(format!(
                "gap_tol must be positive, got {}",
                self.gap_tol
            )));
        }
        if !(self.step_scale > T::zero()) || !self.step_scale.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "step_scale must be positive, got {}",
                self.step_scale
            )));
        }
        Ok(())
    }
}

/// Which side of the identity a certificate brackets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Sense {
    /// `min_X max_y`: upper from `max_i Aᵢ • X`, lower from `λ_min(Σ yᵢAᵢ)`.
    #[default]
    Minimax,
    /// `max_X min_y`: lower from `min_i Aᵢ • X`, upper from `λ_max(Σ yᵢAᵢ)`.
    Maximin,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SaddleCertificate<T> {
    pub sense: Sense,
    pub upper: T,
    pub lower: T,
    /// `upper − lower`.
    pub gap: T,
    pub x_bar: SpectraplexPoint<T>,
    pub y_bar: SimplexPoint<T>,
    pub iterations: usize,
    pub converged: bool,
}

impl<T: Scalar> SaddleCertificate<T> {
    /// Midpoint of the bracket.
    pub fn value(&self) -> T {
        (self.upper + self.lower) * T::lit(0.5)
    }

    /// Recomputes `(upper, lower)` from the stored strategies.
    pub fn recompute(&self, inst: &InstanceSet<T>) -> Result<(T, T)> {
        match self.sense {
            Sense::Minimax => Ok((upper_value(&self.x_bar, inst)?, lower_value(&self.y_bar, inst)?)),
            Sense::Maximin => Ok((
                lambda_max(&weighted_combination(&self.y_bar, inst)?)?,
                worst_response_index(&self.x_bar, inst)?.1,
            )),
        }
    }
}

/// `max_i Aᵢ • X`, an upper bound on the minimax value for every feasible `X`.
pub fn upper_value<T: Scalar>(x: &SpectraplexPoint<T>, inst: &InstanceSet<T>) -> Result<T> {
    Ok(best_response_index(x, inst)?.1)
}

/// `λ_min(Σ yᵢ Aᵢ)`, a lower bound on the minimax value for every feasible `y`.
pub fn lower_value<T: Scalar>(y: &SimplexPoint<T>, inst: &InstanceSet<T>) -> Result<T> {
    lambda_min(&weighted_combination(y, inst)?)
}

/// Bounds observed after one step of [`MinimaxDynamics`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IterateBounds<T> {
    pub iteration: usize,
    /// Bounds at the weighted averages `X̄ₖ`, `ȳₖ`.
    pub averaged_upper: T,
    pub averaged_lower: T,
    /// Bounds at the current iterates `Xₖ`, `yₖ`.
    pub current_upper: T,
    pub current_lower: T,
    /// Best bounds seen so far across all candidates.
    pub best_upper: T,
    pub best_lower: T,
}

impl<T: Scalar> IterateBounds<T> {
    pub fn gap(&self) -> T {
        self.best_upper - self.best_lower
    }
}

/// Stepwise optimistic MW / MMW dynamics for the minimax side.
pub struct MinimaxDynamics<'a, T> {
    inst: &'a InstanceSet<T>,
    normalized: Vec<SymMatrix<T>>,
    step: T,
    gain_sum: Vec<T>,
    last_gain: Vec<T>,
    loss_sum: SymMatrix<T>,
    last_loss: SymMatrix<T>,
    x_acc: SymMatrix<T>,
    y_acc: Vec<T>,
    weight_acc: T,
    vertex_lower: Vec<T>,
    iteration: usize,
    best_upper: T,
    best_x: SpectraplexPoint<T>,
    best_lower: T,
    best_y: SimplexPoint<T>,
}

impl<'a, T: Scalar> MinimaxDynamics<'a, T> {
    pub fn new(inst: &'a InstanceSet<T>, cfg: &SaddleConfig<T>) -> Result<Self> {
        cfg.validate()?;
        let n = inst.order();
        let m = inst.count();
        let center = inst.matrices().iter().map(|a| a.trace()).sum::<T>() / T::lit((n * m) as f64);
        let radius = inst
            .matrices()
            .iter()
            .map(|a| a.shifted(-center).frobenius_norm())
            .fold(T::zero(), T::max);
        let radius = if radius > T::zero() { radius } else { T::one() };
        let normalized = inst
            .matrices()
            .iter()
            .map(|a| a.shifted(-center).scaled(T::one() / radius))
            .collect();
        let vertex_lower = (0..m)
            .map(|i| lower_value(&SimplexPoint::vertex(m, i), inst))
            .collect::<Result<Vec<_>>>()?;

        let x0 = SpectraplexPoint::uniform(n);
        let y0 = SimplexPoint::uniform(m);
        let best_upper = upper_value(&x0, inst)?;
        let best_lower = lower_value(&y0, inst)?;
        Ok(Self {
            inst,
            normalized,
            step: T::lit(BASE_STEP) * cfg.step_scale,
            gain_sum: vec![T::zero(); m],
            last_gain: vec![T::zero(); m],
            loss_sum: SymMatrix::zeros(n),
            last_loss: SymMatrix::zeros(n),
            x_acc: SymMatrix::zeros(n),
            y_acc: vec![T::zero(); m],
            weight_acc: T::zero(),
            vertex_lower,
            iteration: 0,
            best_upper,
            best_x: x0,
            best_lower,
            best_y: y0,
        })
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn gap(&self) -> T {
        self.best_upper - self.best_lower
    }

    pub fn step(&mut self) -> Result<IterateBounds<T>> {
        self.iteration += 1;
        let eta = self.step;

        // y ∝ exp(η (Σ gains + last gain))
        let logits: Vec<T> = self
            .gain_sum
            .iter()
            .zip(&self.last_gain)
            .map(|(&s, &g)| eta * (s + g))
            .collect();
        let top = logits.iter().copied().fold(T::neg_infinity(), T::max);
        let w: Vec<T> = logits.iter().map(|&l| (l - top).exp()).collect();
        let total: T = w.iter().copied().sum();
        let y: Vec<T> = w.iter().map(|&v| v / total).collect();

        // X ∝ exp(−η (Σ losses + last loss))
        let mut predicted = self.loss_sum.clone();
        predicted.add_scaled(T::one(), &self.last_loss)?;
        let eig = eigh(&predicted.scaled(-eta))?;
        let top = *eig.eigenvalues().last().expect("order >= 1");
        let e = eig.map(|l| (l - top).exp());
        let x = e.scaled(T::one() / e.trace());

        let gains = self
            .normalized
            .iter()
            .map(|a| frobenius_inner(a, &x))
            .collect::<Result<Vec<_>>>()?;
        let loss = SymMatrix::linear_combination(&y, &self.normalized)?;
        for (s, &g) in self.gain_sum.iter_mut().zip(&gains) {
            *s += g;
        }
        self.loss_sum.add_scaled(T::one(), &loss)?;
        self.last_gain = gains;
        self.last_loss = loss;

        let k = T::lit(self.iteration as f64);
        let weight = k * k;
        self.x_acc.add_scaled(weight, &x)?;
        for (acc, &v) in self.y_acc.iter_mut().zip(&y) {
            *acc += weight * v;
        }
        self.weight_acc += weight;

        let x_avg = self.x_acc.scaled(T::one() / self.weight_acc);
        let x_avg = SpectraplexPoint::from_trusted(x_avg.scaled(T::one() / x_avg.trace()));
        let y_sum: T = self.y_acc.iter().copied().sum();
        let y_avg = SimplexPoint::from_trusted(self.y_acc.iter().map(|&v| v / y_sum).collect());
        let x_cur = SpectraplexPoint::from_trusted(x);
        let y_cur = SimplexPoint::from_trusted(y);

        let (responder, averaged_upper) = best_response_index(&x_avg, self.inst)?;
        let current_upper = upper_value(&x_cur, self.inst)?;
        let avg_eig = eigh(&weighted_combination(&y_avg, self.inst)?)?;
        let averaged_lower = avg_eig.eigenvalues()[0];
        let current_lower = lower_value(&y_cur, self.inst)?;

        // best responses to the opposing averages
        let x_br = SpectraplexPoint::rank_one(&avg_eig.eigenvector(0))?;
        let br_upper = upper_value(&x_br, self.inst)?;
        let br_lower = self.vertex_lower[responder];

        for (value, point) in [(averaged_upper, x_avg), (current_upper, x_cur), (br_upper, x_br)] {
            if value < self.best_upper {
                self.best_upper = value;
                self.best_x = point;
            }
        }
        let m = self.inst.count();
        for (value, point) in [
            (averaged_lower, Some(y_avg)),
            (current_lower, Some(y_cur)),
            (br_lower, None),
        ] {
            if value > self.best_lower {
                self.best_lower = value;
                self.best_y = point.unwrap_or_else(|| SimplexPoint::vertex(m, responder));
            }
        }

        Ok(IterateBounds {
            iteration: self.iteration,
            averaged_upper,
            averaged_lower,
            current_upper,
            current_lower,
            best_upper: self.best_upper,
            best_lower: self.best_lower,
        })
    }

    pub fn certificate(&self, gap_tol: T) -> SaddleCertificate<T> {
        let gap = self.best_upper - self.best_lower;
        SaddleCertificate {
            sense: Sense::Minimax,
            upper: self.best_upper,
            lower: self.best_lower,
            gap,
            x_bar: self.best_x.clone(),
            y_bar: self.best_y.clone(),
            iterations: self.iteration,
            converged: gap <= gap_tol,
        }
    }
}

/// Brackets `min_X max_y Σ yᵢAᵢ • X` to within `cfg.gap_tol`, or returns the best
/// bracket found in `cfg.max_iters` steps with `converged = false`.
pub fn solve_minimax<T: Scalar>(inst: &InstanceSet<T>, cfg: &SaddleConfig<T>) -> Result<SaddleCertificate<T>> {
    let mut dynamics = MinimaxDynamics::new(inst, cfg)?;
    while dynamics.iteration() < cfg.max_iters {
        if dynamics.step()?.gap() <= cfg.gap_tol {
            break;
        }
    }
    Ok(dynamics.certificate(cfg.gap_tol))
}

/// Brackets `max_X min_y Σ yᵢAᵢ • X`, solved as the negated minimax problem.
pub fn solve_maximin<T: Scalar>(inst: &InstanceSet<T>, cfg: &SaddleConfig<T>) -> Result<SaddleCertificate<T>> {
    let neg = solve_minimax(&inst.negated(), cfg)?;
    let upper = -neg.lower;
    let lower = -neg.upper;
    Ok(SaddleCertificate {
        sense: Sense::Maximin,
        upper,
        lower,
        gap: upper - lower,
        x_bar: neg.x_bar,
        y_bar: neg.y_bar,
        iterations: neg.iterations,
        converged: neg.converged,
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

    /// Minimax value of the Pauli pair by a dense grid over the Bloch disc:
    /// X = ½[[1+a, b],[b, 1−a]] with a² + b² ≤ 1 gives Z•X = a and X•X = b.
    fn pauli_grid_value() -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..=200 {
            let r = i as f64 / 200.0;
            for k in 0..4000 {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / 4000.0;
                best = best.min((r * theta.cos()).max(r * theta.sin()));
            }
        }
        best
    }

    #[test]
    fn config_validation() {
        assert!(SaddleConfig::<f64>::default().validate().is_ok());
        let bad = SaddleConfig {
            max_iters: 0,
            ..SaddleConfig::<f64>::default()
        };
        assert!(bad.validate().is_err());
        let bad = SaddleConfig {
            gap_tol: 0.0,
            ..SaddleConfig::<f64>::default()
        };
        assert!(bad.validate().is_err());
        let bad = SaddleConfig {
            step_scale: -1.0,
            ..SaddleConfig::<f64>::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn upper_value_examples() {
        assert_eq!(upper_value(&SpectraplexPoint::uniform(2), &diag_pair()).unwrap(), 0.5);
        let e1 = SpectraplexPoint::rank_one(&[1.0, 0.0]).unwrap();
        assert_eq!(upper_value(&e1, &diag_pair()).unwrap(), 1.0);
        // Bloch-optimal point: a = b = −1/√2.
        let h = 0.5f64.sqrt();
        let x = SymMatrix::from_rows(&[[0.5 * (1.0 - h), -0.5 * h], [-0.5 * h, 0.5 * (1.0 + h)]]).unwrap();
        let x = SpectraplexPoint::new(x).unwrap();
        let grid = pauli_grid_value();
        assert!((grid + h).abs() < 1e-6);
        assert!((upper_value(&x, &pauli()).unwrap() - grid).abs() < 1e-6);
    }

    #[test]
    fn lower_value_examples() {
        let half = SimplexPoint::uniform(2);
        assert_eq!(lower_value(&half, &diag_pair()).unwrap(), 0.5);
        assert_eq!(lower_value(&SimplexPoint::vertex(2, 0), &pauli()).unwrap(), -1.0);
        assert!((lower_value(&half, &pauli()).unwrap() + 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn pauli_pair_minimax() {
        let cert = solve_minimax(&pauli(), &SaddleConfig::default()).unwrap();
        assert!(cert.converged);
        assert!(cert.gap <= 1e-4);
        assert!((cert.value() - pauli_grid_value()).abs() <= 1e-4);
        assert!(cert.upper >= cert.lower - 1e-9);
    }

    #[test]
    fn diag_pair_minimax() {
        let cert = solve_minimax(&diag_pair(), &SaddleConfig::default()).unwrap();
        assert!(cert.converged);
        assert!((cert.value() - 0.5).abs() <= 1e-4);
    }

    #[test]
    fn single_matrix_collapses_to_lambda_min() {
        let a = SymMatrix::<f64>::from_rows(&[[2.0, 1.0, 0.0], [1.0, -1.0, 0.5], [0.0, 0.5, 0.3]]).unwrap();
        let lmin = lambda_min(&a).unwrap();
        let inst = InstanceSet::new(vec![a]).unwrap();
        let cert = solve_minimax(&inst, &SaddleConfig::default()).unwrap();
        assert!((cert.value() - lmin).abs() <= 1e-6);
        assert_eq!(cert.y_bar.weights(), &[1.0]);
        let cert = solve_maximin(&inst, &SaddleConfig::default()).unwrap();
        assert!((cert.value() - lambda_max(inst.matrix(0)).unwrap()).abs() <= 1e-6);
    }

    #[test]
    fn maximin_examples() {
        let cert = solve_maximin(&pauli(), &SaddleConfig::default()).unwrap();
        assert!((cert.value() - 0.5f64.sqrt()).abs() <= 1e-4);
        assert_eq!(cert.sense, Sense::Maximin);
        let cert = solve_maximin(&diag_pair(), &SaddleConfig::default()).unwrap();
        assert!((cert.value() - 0.5).abs() <= 1e-4);
        assert_eq!(cert.recompute(&diag_pair()).unwrap(), (cert.upper, cert.lower));
    }

    #[test]
    fn running_bounds_are_monotone_and_ordered() {
        let inst = pauli();
        let mut dynamics = MinimaxDynamics::new(&inst, &SaddleConfig::default()).unwrap();
        let mut prev: Option<IterateBounds<f64>> = None;
        for _ in 0..200 {
            let b = dynamics.step().unwrap();
            assert!(b.averaged_upper >= b.averaged_lower - 1e-9);
            assert!(b.current_upper >= b.current_lower - 1e-9);
            if let Some(p) = prev {
                assert!(b.best_upper <= p.best_upper);
                assert!(b.best_lower >= p.best_lower);
            }
            prev = Some(b);
        }
    }

    #[test]
    fn iteration_cap_reports_non_convergence() {
        let cfg = SaddleConfig {
            max_iters: 1,
            ..SaddleConfig::default()
        };
        let inst = InstanceSet::new(vec![
            SymMatrix::from_rows(&[[0.3, -0.7, 0.2], [-0.7, 0.1, 0.9], [0.2, 0.9, -0.4]]).unwrap(),
            SymMatrix::from_rows(&[[-0.5, 0.4, 0.8], [0.4, 0.6, -0.1], [0.8, -0.1, 0.2]]).unwrap(),
            SymMatrix::from_diagonal(&[0.4, -0.9, 0.7]),
        ])
        .unwrap();
        let cert = solve_minimax(&inst, &cfg).unwrap();
        assert_eq!(cert.iterations, 1);
        assert!(!cert.converged);
        assert_eq!(cert.gap, cert.upper - cert.lower);
    }

    #[test]
    fn runs_in_single_precision() {
        let inst = InstanceSet::new(vec![
            SymMatrix::<f32>::from_diagonal(&[1.0, 0.0]),
            SymMatrix::from_diagonal(&[0.0, 1.0]),
        ])
        .unwrap();
        let cfg = SaddleConfig {
            gap_tol: 1e-3,
            ..SaddleConfig::default()
        };
        let cert = solve_minimax(&inst, &cfg).unwrap();
        assert!((cert.value() - 0.5).abs() <= 1e-3);
    }
}
