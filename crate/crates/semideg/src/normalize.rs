//! Normal forms of plane polynomial parametrizations.
//!
//! After reparametrizing so Y becomes the pure power T^m, the weighted
//! Wronskian W = nY′X − mX′Y reads off the next candidate exponent λ of X.
//! While m+λ stays inside Γ one of two moves applies: when m+λ = n a
//! constant is absorbed into Y (which is then re-reparametrized), and when
//! m+λ = θm the monomial c_λ·Y^{θ−1} is subtracted from X. The iteration
//! ends either with W ≡ 0 — the curve is equivalent to (τⁿ, τᵐ) — or with
//! m+λ ∉ Γ, exhibiting the non-exact degree m+λ−1 of the differential
//! module.
//!
//! Precision: series are truncated at a floor that starts at −(2nm+n) and
//! deepens geometrically whenever a λ cannot be certified; absence of λ is
//! only ever concluded from a floor below −(nm+n), the depth past which the
//! termination argument leaves no room for further exponents.

use num_traits::Zero;
use thiserror::Error;

use crate::kahler::{CurveError, CurveParametrization};
use crate::numsgp::NumericalSemigroup;
use crate::poly::Poly;
use crate::rat::{rat, Rat};
use crate::series::{invert_parameter, LaurentSeries, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("truncation floor {floor} cannot certify the next exponent")]
    PrecisionExhausted { floor: i64 },
    #[error("the subleading coefficient of y must be shifted to zero first")]
    SubleadingNotZero,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("move selection failed: m+λ = {value} is in Γ but is neither n nor a multiple of m")]
    UnexpectedStructure { value: i64 },
}

/// A parametrization with Y normalized to the exact monomial T^m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedParametrization {
    x1: LaurentSeries,
    m: u64,
    n: u64,
    /// True while x1 is exact (no truncation happened yet); λ-absence is
    /// then certain regardless of the floor.
    exact: bool,
}

impl NormalizedParametrization {
    pub fn x1(&self) -> &LaurentSeries {
        &self.x1
    }

    /// y₁ = T^m exactly.
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn precision(&self) -> i64 {
        self.x1.floor()
    }

    /// Depth below which a missing λ is a certificate rather than a guess.
    fn certainty_floor(&self) -> i64 {
        -((self.n * self.m + self.n) as i64)
    }

    /// The largest exponent λ < n with a nonzero coefficient, or None when
    /// there is provably none. Errs when the floor is too shallow to decide.
    pub fn lambda(&self) -> Result<Option<(i64, Rat)>, NormalizeError> {
        let n = self.n as i64;
        for (e, c) in self.x1.terms().rev() {
            if e < n {
                return Ok(Some((e, c.clone())));
            }
        }
        if self.exact || self.x1.floor() <= self.certainty_floor() {
            Ok(None)
        } else {
            Err(NormalizeError::PrecisionExhausted {
                floor: self.x1.floor(),
            })
        }
    }
}

/// W = nY′X − mX′Y for arbitrary series coordinates.
pub fn wronskian_pair(x: &LaurentSeries, y: &LaurentSeries, m: u64, n: u64) -> LaurentSeries {
    let left = y.derivative().mul(x).scale(&rat(n as i64));
    let right = x.derivative().mul(y).scale(&rat(m as i64));
    left.sub(&right)
}

/// W of a normalized parametrization: Σ (nm − mp)·c_p·T^{p+m−1} over the
/// visible exponents of X₁; the T^n term always cancels.
pub fn wronskian(np: &NormalizedParametrization) -> LaurentSeries {
    let m = np.m as i64;
    let n = np.n as i64;
    let mut out = LaurentSeries::zero(np.x1.floor() + m - 1);
    for (p, c) in np.x1.terms() {
        let factor = rat(n * m - m * p);
        if !factor.is_zero() {
            out = out.add(&LaurentSeries::monomial(p + m - 1, c * &factor, out.floor()));
        }
    }
    out
}

/// Normalizes Y to a pure power: T = t·(y/t^m)^{1/m} and X₁ = X(t(T)).
/// Degrees in t and in T agree for every polynomial in the coordinates.
/// `precision` is the requested truncation floor of X₁ (≤ 0).
pub fn reparametrize(
    p: &CurveParametrization,
    precision: i64,
) -> Result<NormalizedParametrization, NormalizeError> {
    if !p.beta1().is_zero() {
        return Err(NormalizeError::SubleadingNotZero);
    }
    let precision = precision.min(0);
    let m = p.m();
    let n = p.n();
    if p.y() == &Poly::t_pow(m) {
        return Ok(NormalizedParametrization {
            x1: LaurentSeries::from_poly(p.x(), precision),
            m,
            n,
            exact: true,
        });
    }
    // unit u = y/t^m = 1 + β₂t^{-2} + …, exact
    let unit: Vec<(i64, Rat)> = p
        .y()
        .terms()
        .map(|(e, c)| (e as i64 - m as i64, c.clone()))
        .collect();
    let x_series = LaurentSeries::from_poly(p.x(), precision);
    let x1 = compose_root_parameter(&x_series, &unit, m, precision)?;
    Ok(NormalizedParametrization {
        x1,
        m,
        n,
        exact: false,
    })
}

/// Shared move engine: given x as a series and the exact unit u = y/T^m,
/// builds q = T·u^{1/m}, inverts it and composes x with the inverse
/// parameter. Composing amplifies the inverse's truncation error by up to
/// the top power of x, so everything upstream is computed that much deeper.
fn compose_root_parameter(
    x: &LaurentSeries,
    unit_terms: &[(i64, Rat)],
    m: u64,
    precision: i64,
) -> Result<LaurentSeries, NormalizeError> {
    let top = x.degree().unwrap_or(1).max(1);
    let inversion_floor = precision - top - 2;
    let mut unit = LaurentSeries::zero(inversion_floor - 4);
    for (e, c) in unit_terms {
        unit = unit.add(&LaurentSeries::monomial(*e, c.clone(), inversion_floor - 4));
    }
    let q = unit.root_of_unit(m)?.shift(1);
    let inverse = invert_parameter(&q, inversion_floor)?;
    let composed = x.compose(&inverse)?;
    if composed.floor() > precision {
        return Err(NormalizeError::PrecisionExhausted {
            floor: composed.floor(),
        });
    }
    Ok(composed.truncated(precision))
}

/// The two reduction moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalMove {
    /// Y ← Y + α (then Y is re-normalized to a pure power).
    AddConstantToY { alpha: Rat },
    /// X ← X − c·Y^{θ−1}.
    SubtractYPower { theta: u64, coeff: Rat },
}

/// One iteration of the normal-form loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalStep {
    pub lambda: i64,
    pub c_lambda: Rat,
    /// Leading (exponent, coefficient) of W before the move.
    pub wronskian_before: (i64, Rat),
    /// Leading term of W right after the move, in the same parameter;
    /// None when the move already cleared every visible term.
    pub wronskian_after: Option<(i64, Rat)>,
    pub action: NormalMove,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalFormOutcome {
    /// W ≡ 0: the curve is equivalent to (τⁿ, τᵐ).
    QuasiHomogeneous { steps: Vec<NormalStep> },
    /// m+λ ∉ Γ: the degree m+λ−1 of W is a non-exact degree of the
    /// differential module.
    NonExactWitness {
        witness_degree: i64,
        steps: Vec<NormalStep>,
    },
}

impl NormalFormOutcome {
    pub fn steps(&self) -> &[NormalStep] {
        match self {
            NormalFormOutcome::QuasiHomogeneous { steps } => steps,
            NormalFormOutcome::NonExactWitness { steps, .. } => steps,
        }
    }

    pub fn is_quasi_homogeneous(&self) -> bool {
        matches!(self, NormalFormOutcome::QuasiHomogeneous { .. })
    }
}

/// Default starting truncation floor.
pub fn default_precision(p: &CurveParametrization) -> i64 {
    -((2 * p.n() * p.m() + p.n()) as i64)
}

/// Runs the normal-form iteration, deepening the truncation floor
/// geometrically on demand down to `max_precision`. Fails with
/// `PrecisionExhausted` when `max_precision` is shallower than the −(nm+n)
/// certification depth or when deepening runs out of room.
pub fn normal_form(
    p: &CurveParametrization,
    max_precision: i64,
) -> Result<NormalFormOutcome, NormalizeError> {
    let shifted = p.shift_subleading();
    let gamma = shifted.algebra()?.semigroup().expect("checked").clone();
    let certainty = -((shifted.n() * shifted.m() + shifted.n()) as i64);
    if max_precision > certainty {
        return Err(NormalizeError::PrecisionExhausted {
            floor: max_precision,
        });
    }
    // most witnesses surface at shallow depth; probe there first, fall back
    // to the default floor, then deepen geometrically
    let shallow = -(2 * (shifted.n() + shifted.m()) as i64);
    let mut precision = shallow.max(max_precision);
    loop {
        match run_at_precision(&shifted, &gamma, precision) {
            Err(NormalizeError::PrecisionExhausted { floor }) => {
                if precision <= max_precision {
                    return Err(NormalizeError::PrecisionExhausted { floor });
                }
                let deflt = default_precision(&shifted);
                let next = if precision > deflt { deflt } else { precision * 2 };
                precision = next.max(max_precision);
            }
            other => return other,
        }
    }
}

fn run_at_precision(
    p: &CurveParametrization,
    gamma: &NumericalSemigroup,
    precision: i64,
) -> Result<NormalFormOutcome, NormalizeError> {
    let mut np = reparametrize(p, precision)?;
    let mut steps = Vec::new();
    loop {
        let (lambda, c_lambda) = match np.lambda()? {
            None => return Ok(NormalFormOutcome::QuasiHomogeneous { steps }),
            Some(found) => found,
        };
        let m = np.m as i64;
        let n = np.n as i64;
        let w = wronskian(&np);
        let w_before = w
            .leading()
            .map(|(e, c)| (e, c.clone()))
            .expect("λ exists, so W has a visible leading term");
        debug_assert_eq!(w_before.0, m + lambda - 1);

        let value = m + lambda;
        if !gamma.contains(value) {
            return Ok(NormalFormOutcome::NonExactWitness {
                witness_degree: value - 1,
                steps,
            });
        }

        if value == n {
            // move (1): absorb α into Y to kill the T^{n-1} term of W
            let alpha = &c_lambda * &crate::rat::ratio(m, n);
            let w_after = w.sub(&np.x1.derivative().scale(&(&alpha * &rat(m))));
            let step = NormalStep {
                lambda,
                c_lambda: c_lambda.clone(),
                wronskian_before: w_before.clone(),
                wronskian_after: w_after.leading().map(|(e, c)| (e, c.clone())),
                action: NormalMove::AddConstantToY {
                    alpha: alpha.clone(),
                },
            };
            debug_assert!(step
                .wronskian_after
                .as_ref()
                .map_or(true, |(e, _)| *e < w_before.0));
            steps.push(step);
            // restore Y = T^m: unit 1 + α·T^{-m}, exact
            let unit = [(0, rat(1)), (-m, alpha)];
            let x1 = compose_root_parameter(&np.x1, &unit, np.m, np.x1.floor() + n + 4)?;
            np = NormalizedParametrization {
                x1,
                m: np.m,
                n: np.n,
                exact: false,
            };
        } else if value % m == 0 {
            // move (2): subtract c_λ·Y^{θ-1} from X
            let theta = (value / m) as u64;
            let x1 = np
                .x1
                .sub(&LaurentSeries::monomial(lambda, c_lambda.clone(), np.x1.floor()));
            np = NormalizedParametrization {
                x1,
                m: np.m,
                n: np.n,
                exact: np.exact,
            };
            let w_after = wronskian(&np);
            let step = NormalStep {
                lambda,
                c_lambda: c_lambda.clone(),
                wronskian_before: w_before,
                wronskian_after: w_after.leading().map(|(e, c)| (e, c.clone())),
                action: NormalMove::SubtractYPower {
                    theta,
                    coeff: c_lambda,
                },
            };
            if let Ok(Some((next, _))) = np.lambda() {
                debug_assert!(next < lambda);
            }
            steps.push(step);
        } else {
            return Err(NormalizeError::UnexpectedStructure { value });
        }
    }
}
