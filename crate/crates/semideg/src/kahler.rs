//! The module of differentials of a plane polynomial curve.
//!
//! For a parametrization (X(t), Y(t)) the module M = X′A + Y′A over
//! A = K[X, Y] carries the curve's analytic invariants: d(M) is a relative
//! ideal of Γ = d(A), every s ∈ Γ contributes the exact degree s−1, the
//! leftover degrees of d(M) are the non-exact ones, μ equals the conductor
//! of Γ and ν = μ − ne.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{compute_algebra_basis, AlgebraBasis, AlgebraError};
use crate::classify::delta_sequence;
use crate::ideals::RelativeIdeal;
use crate::modbasis::{compute_module_basis, ModuleBasis, ModuleError};
use crate::numsgp::NumericalSemigroup;
use crate::poly::Poly;
use crate::rat::{rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("curve coordinates must be nonconstant polynomials")]
    ConstantCoordinate,
    #[error("coordinate degrees coincide ({0}); the parametrization is degenerate")]
    EqualDegrees(u64),
    #[error("degree monoid has content {content} > 1; K[t] is not finite over the curve algebra")]
    NonNumerical { content: u64 },
}

/// A plane polynomial curve, stored monic with deg x = n > deg y = m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveParametrization {
    x: Poly,
    y: Poly,
}

impl CurveParametrization {
    /// Accepts the coordinates in either order and normalizes them monic.
    pub fn new(a: &Poly, b: &Poly) -> Result<Self, CurveError> {
        let da = a.degree().filter(|&d| d > 0).ok_or(CurveError::ConstantCoordinate)?;
        let db = b.degree().filter(|&d| d > 0).ok_or(CurveError::ConstantCoordinate)?;
        if da == db {
            return Err(CurveError::EqualDegrees(da));
        }
        let (x, y) = if da > db { (a, b) } else { (b, a) };
        Ok(CurveParametrization {
            x: x.monic(),
            y: y.monic(),
        })
    }

    /// The coordinate of larger degree n.
    pub fn x(&self) -> &Poly {
        &self.x
    }

    /// The coordinate of smaller degree m.
    pub fn y(&self) -> &Poly {
        &self.y
    }

    pub fn n(&self) -> u64 {
        self.x.degree().unwrap()
    }

    pub fn m(&self) -> u64 {
        self.y.degree().unwrap()
    }

    /// Subleading coefficient β₁ of y; zero after `shift_subleading`.
    pub fn beta1(&self) -> Rat {
        self.y.coeff(self.m() - 1)
    }

    /// Reparametrizes t ↦ t − β₁/m so y loses its t^{m−1} term. Degrees and
    /// all degree-level invariants are unchanged.
    pub fn shift_subleading(&self) -> CurveParametrization {
        let beta1 = self.beta1();
        if beta1.is_zero() {
            return self.clone();
        }
        let c = -(beta1 / rat(self.m() as i64));
        CurveParametrization {
            x: self.x.compose_shift(&c),
            y: self.y.compose_shift(&c),
        }
    }

    /// Basis of the coordinate algebra A = K[x, y].
    pub fn algebra(&self) -> Result<AlgebraBasis, CurveError> {
        let basis = compute_algebra_basis(&[self.x.clone(), self.y.clone()])
            .map_err(|e| match e {
                AlgebraError::NoGenerators => CurveError::ConstantCoordinate,
                AlgebraError::NotABasis { .. } => unreachable!("completion always finishes"),
            })?;
        if !basis.is_numerical() {
            return Err(CurveError::NonNumerical {
                content: basis.monoid().content(),
            });
        }
        Ok(basis)
    }
}

/// Basis of M = X′A + Y′A over the curve's coordinate algebra.
pub fn kahler_module(p: &CurveParametrization) -> Result<ModuleBasis, CurveError> {
    let algebra = p.algebra()?;
    kahler_module_over(p, &algebra)
}

fn kahler_module_over(
    p: &CurveParametrization,
    algebra: &AlgebraBasis,
) -> Result<ModuleBasis, CurveError> {
    compute_module_basis(&[p.x().derivative(), p.y().derivative()], algebra).map_err(
        |e| match e {
            ModuleError::NonNumericalAlgebra { content } => CurveError::NonNumerical { content },
            ModuleError::EmptyGenerators => CurveError::ConstantCoordinate,
        },
    )
}

/// The non-exact degrees of an ideal: elements i ∈ I with i + 1 ∉ S. Only
/// degrees below the conductor qualify, so the scan window is finite.
pub fn non_exact_set(ideal: &RelativeIdeal, s: &NumericalSemigroup) -> Vec<i64> {
    let hi = s.conductor() as i64 + s.multiplicity() as i64;
    (ideal.min_value()..=hi)
        .filter(|&i| ideal.contains(i) && !s.contains(i + 1))
        .collect()
}

/// Full differential report of a parametrized curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialReport {
    module: ModuleBasis,
    ne_set: Vec<i64>,
    mu: u64,
    nu: u64,
    quasi_homogeneous: bool,
    delta_free_verified: bool,
}

impl DifferentialReport {
    /// Γ(f) = d(A).
    pub fn gamma(&self) -> &NumericalSemigroup {
        self.module
            .algebra()
            .semigroup()
            .expect("reports are built over numerical curves")
    }

    /// d(M) as a relative ideal of Γ.
    pub fn ideal(&self) -> &RelativeIdeal {
        self.module.degree_ideal()
    }

    pub fn module(&self) -> &ModuleBasis {
        &self.module
    }

    pub fn ne_set(&self) -> &[i64] {
        &self.ne_set
    }

    pub fn ne(&self) -> u64 {
        self.ne_set.len() as u64
    }

    /// Milnor number: the conductor of Γ.
    pub fn mu(&self) -> u64 {
        self.mu
    }

    /// Tjurina number: μ − ne.
    pub fn nu(&self) -> u64 {
        self.nu
    }

    pub fn quasi_homogeneous(&self) -> bool {
        self.quasi_homogeneous
    }

    /// Whether Γ verified free for the δ-sequence arrangement (m, n, …).
    pub fn delta_free_verified(&self) -> bool {
        self.delta_free_verified
    }
}

/// Computes Γ, the differential ideal, the non-exact set and the
/// μ/ν invariants of a parametrized curve. Freeness of Γ for the curve's
/// δ-arrangement is verified and reported; the numeric invariants do not
/// depend on it.
pub fn curve_invariants(p: &CurveParametrization) -> Result<DifferentialReport, CurveError> {
    let algebra = p.algebra()?;
    let module = kahler_module_over(p, &algebra)?;
    let gamma = algebra.semigroup().expect("checked numerical").clone();
    let ne_set = non_exact_set(module.degree_ideal(), &gamma);
    let mu = gamma.conductor();
    let ne = ne_set.len() as u64;
    debug_assert!(ne <= gamma.genus());
    let delta_free_verified = delta_sequence(&gamma, p.m(), p.n()).is_ok();
    Ok(DifferentialReport {
        module,
        quasi_homogeneous: ne_set.is_empty(),
        nu: mu - ne,
        mu,
        ne_set,
        delta_free_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::over_ideals;
    use crate::poly::parse_poly;
    use proptest::prelude::*;

    fn p(text: &str) -> Poly {
        parse_poly(text).unwrap()
    }

    fn curve(x: &str, y: &str) -> CurveParametrization {
        CurveParametrization::new(&p(x), &p(y)).unwrap()
    }

    fn basis_strings(module: &ModuleBasis) -> Vec<String> {
        module.gens().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn construction_orders_and_normalizes() {
        let c = curve("t^3", "t^4+t");
        assert_eq!(c.n(), 4);
        assert_eq!(c.m(), 3);
        assert_eq!(c.x(), &p("t^4+t"));
        assert!(CurveParametrization::new(&p("t^3"), &p("2*t^3")).is_err());
        assert!(CurveParametrization::new(&p("5"), &p("t^2")).is_err());
        let c = CurveParametrization::new(&p("3*t^4"), &p("t^3")).unwrap();
        assert_eq!(c.x(), &p("t^4"));
    }

    #[test]
    fn subleading_shift() {
        let c = curve("t^4", "t^3+t^2");
        assert_eq!(c.beta1(), rat(1));
        let shifted = c.shift_subleading();
        assert!(shifted.beta1().is_zero());
        assert_eq!(shifted.n(), 4);
        assert_eq!(shifted.m(), 3);
    }

    #[test]
    fn differential_bases_of_the_five_curves() {
        // the five ideals of the <3,4> lattice, realized by parametrizations
        let cases: [(&str, &str, &[&str], &[i64]); 5] = [
            ("t^3", "t^4", &["t^2", "t^3"], &[2, 3]),
            ("t^3+t^2", "t^4", &["t^2+2/3*t", "t^3", "t^4"], &[2, 3, 4]),
            ("t^3", "t^4+t", &["1", "t^2"], &[0, 2]),
            ("t^3", "t^4+t^2", &["t", "t^2", "t^3"], &[1, 2, 3]),
            ("t^3+t", "t^4", &["1", "t", "t^2"], &[0, 1, 2]),
        ];
        for (x, y, expected, ideal_gens) in cases {
            let module = kahler_module(&curve(x, y)).unwrap();
            assert_eq!(basis_strings(&module), expected, "curve ({x}, {y})");
            assert_eq!(module.degree_ideal().min_gens(), ideal_gens);
        }
    }

    #[test]
    fn non_exact_sets_of_the_ideal_lattice() {
        let s = NumericalSemigroup::from_generators(&[3, 4]).unwrap();
        let j = RelativeIdeal::from_generators(&s, &[2, 3]).unwrap();
        let mut found: Vec<(Vec<i64>, Vec<i64>)> = over_ideals(&j)
            .unwrap()
            .iter()
            .map(|i| (i.min_gens().to_vec(), non_exact_set(i, &s)))
            .collect();
        found.sort();
        assert_eq!(
            found,
            vec![
                (vec![0, 1, 2], vec![0, 1, 4]),
                (vec![0, 2], vec![0, 4]),
                (vec![1, 2, 3], vec![1, 4]),
                (vec![2, 3], vec![]),
                (vec![2, 3, 4], vec![4]),
            ]
        );
    }

    #[test]
    fn invariants_of_quasi_homogeneous_curve() {
        let report = curve_invariants(&curve("t^3", "t^4")).unwrap();
        assert_eq!(report.gamma().min_gens(), &[3, 4]);
        assert_eq!(report.ideal().min_gens(), &[2, 3]);
        assert!(report.ne_set().is_empty());
        assert_eq!(report.mu(), 6);
        assert_eq!(report.nu(), 6);
        assert!(report.quasi_homogeneous());
        assert!(report.delta_free_verified());
    }

    #[test]
    fn invariants_with_two_non_exact_degrees() {
        let report = curve_invariants(&curve("t^3", "t^4+t")).unwrap();
        assert_eq!(report.ne_set(), &[0, 4]);
        assert_eq!(report.ne(), 2);
        assert_eq!(report.mu(), 6);
        assert_eq!(report.nu(), 4);
        assert!(!report.quasi_homogeneous());
    }

    #[test]
    fn invariants_at_the_genus_boundary() {
        // ne = g forces ν = μ/2
        let report = curve_invariants(&curve("t^3+t", "t^4")).unwrap();
        assert_eq!(report.ne_set(), &[0, 1, 4]);
        assert_eq!(report.ne(), report.gamma().genus());
        assert_eq!(report.nu(), report.mu() / 2);
    }

    #[test]
    fn non_numerical_curve_is_rejected() {
        let c = curve("t^4", "t^6");
        assert!(matches!(
            curve_invariants(&c),
            Err(CurveError::NonNumerical { content: 2 })
        ));
    }

    fn arb_curve() -> impl Strategy<Value = CurveParametrization> {
        let tail = proptest::collection::vec((0u64..=8, -3i64..=3), 0..3);
        (3u64..=9, 2u64..=6, tail.clone(), tail)
            .prop_filter_map("need m < n", |(n, m, xt, yt)| {
                if m >= n {
                    return None;
                }
                let mut x = Poly::t_pow(n);
                for (e, c) in xt {
                    if e < n && e > 0 {
                        x = &x + &Poly::monomial(e, rat(c));
                    }
                }
                let mut y = Poly::t_pow(m);
                for (e, c) in yt {
                    if e < m && e > 0 {
                        y = &y + &Poly::monomial(e, rat(c));
                    }
                }
                CurveParametrization::new(&x, &y).ok()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn exactness_and_bounds(c in arb_curve()) {
            let report = match curve_invariants(&c) {
                Ok(r) => r,
                Err(CurveError::NonNumerical { .. }) => return Ok(()),
                Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
            };
            let gamma = report.gamma();
            // every exact degree s-1 shows up in the ideal
            let hi = gamma.conductor() as i64 + c.m() as i64;
            for s_val in 0..=hi {
                if gamma.contains(s_val) && s_val > 0 {
                    prop_assert!(report.ideal().contains(s_val - 1), "missing exact degree {}", s_val - 1);
                }
            }
            // ne <= g; for symmetric Γ the candidate count is (F+1)/2 = g
            prop_assert!(report.ne() <= gamma.genus());
            if gamma.is_symmetric() && gamma.frobenius() >= 0 {
                prop_assert!(2 * report.ne() as i64 <= gamma.frobenius() + 1);
            }
            prop_assert_eq!(report.nu(), report.mu() - report.ne());
            prop_assert_eq!(report.quasi_homogeneous(), report.ne() == 0);
        }

        #[test]
        fn derivatives_of_algebra_elements_land_in_the_ideal(c in arb_curve()) {
            let report = match curve_invariants(&c) {
                Ok(r) => r,
                Err(_) => return Ok(()),
            };
            let x = c.x().clone();
            let y = c.y().clone();
            for g in [&(&x * &y), &(&x + &y.pow(2)), &(&x.pow(2) - &y)] {
                let der = g.derivative();
                if let Some(d) = der.degree() {
                    prop_assert!(report.ideal().contains(d as i64));
                }
            }
        }
    }
}
