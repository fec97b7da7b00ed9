//! Relative ideals of numerical semigroups.
//!
//! An ideal is kept as its minimal generators over the ambient semigroup:
//! the ≤_S-minimal elements, pairwise incongruent modulo the multiplicity.
//! Intersections are found by scanning a window that provably contains all
//! minimal elements: past max(generators) + C(S) both cosets are cofinite,
//! and nothing above that shifted by m(S) can be minimal.

use thiserror::Error;

use crate::numsgp::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("ideals live over different ambient semigroups")]
    AmbientMismatch,
    #[error("operation needs nonnegative ideal generators")]
    NegativeGenerators,
}

/// Relative ideal I = ⋃(aᵢ + S) of a numerical semigroup S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    min_gens: Vec<i64>,
}

/// One generator of the syzygy kernel between two ideal generators:
/// t^α·e_i − t^β·e_j with aᵢ + α = aⱼ + β and (α, β) ∈ R(aᵢ, aⱼ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelRelator {
    pub i: usize,
    pub j: usize,
    pub alpha: u64,
    pub beta: u64,
}

impl RelativeIdeal {
    pub fn from_generators(
        ambient: &NumericalSemigroup,
        gens: &[i64],
    ) -> Result<Self, IdealError> {
        if gens.is_empty() {
            return Err(IdealError::EmptyGenerators);
        }
        let min_gens = minimalize(ambient, gens);
        Ok(RelativeIdeal {
            ambient: ambient.clone(),
            min_gens,
        })
    }

    /// The coset a + S.
    pub fn principal(ambient: &NumericalSemigroup, a: i64) -> Self {
        RelativeIdeal {
            ambient: ambient.clone(),
            min_gens: vec![a],
        }
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub fn min_gens(&self) -> &[i64] {
        &self.min_gens
    }

    pub fn min_value(&self) -> i64 {
        self.min_gens[0]
    }

    pub fn contains(&self, n: i64) -> bool {
        self.min_gens.iter().any(|&a| self.ambient.contains(n - a))
    }

    /// Everything at or past this value belongs to the ideal.
    pub fn cofinite_from(&self) -> i64 {
        self.min_gens.last().unwrap() + self.ambient.conductor() as i64
    }

    pub fn intersect(&self, other: &RelativeIdeal) -> Result<RelativeIdeal, IdealError> {
        if self.ambient != other.ambient {
            return Err(IdealError::AmbientMismatch);
        }
        let s = &self.ambient;
        let lo = self.min_value().max(other.min_value());
        let hi = self.cofinite_from().max(other.cofinite_from()) + s.multiplicity() as i64;
        let members: Vec<i64> = (lo..=hi)
            .filter(|&n| self.contains(n) && other.contains(n))
            .collect();
        let min_gens: Vec<i64> = members
            .iter()
            .copied()
            .filter(|&n| !members.iter().any(|&x| x != n && s.contains(n - x)))
            .collect();
        debug_assert!(!min_gens.is_empty());
        Ok(RelativeIdeal {
            ambient: s.clone(),
            min_gens,
        })
    }
}

fn minimalize(ambient: &NumericalSemigroup, gens: &[i64]) -> Vec<i64> {
    let mut sorted: Vec<i64> = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted
        .iter()
        .copied()
        .filter(|&a| {
            !sorted
                .iter()
                .any(|&b| b != a && ambient.contains(a - b))
        })
        .collect()
}

/// R(a, b): the pairs (g − a, g − b) over the minimal generators g of
/// (a + S) ∩ (b + S). Both entries always land in S.
pub fn pair_relators(a: i64, b: i64, s: &NumericalSemigroup) -> Vec<(u64, u64)> {
    let ia = RelativeIdeal::principal(s, a);
    let ib = RelativeIdeal::principal(s, b);
    let meet = ia.intersect(&ib).expect("same ambient");
    meet.min_gens()
        .iter()
        .map(|&g| {
            debug_assert!(s.contains(g - a) && s.contains(g - b));
            ((g - a) as u64, (g - b) as u64)
        })
        .collect()
}

/// Kernel generators for the presentation of I as a module: one relator per
/// pair of ideal generators per element of R(aᵢ, aⱼ).
pub fn kernel_generators(ideal: &RelativeIdeal) -> Vec<KernelRelator> {
    let gens = ideal.min_gens();
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            for (alpha, beta) in pair_relators(gens[i], gens[j], ideal.ambient()) {
                debug_assert_eq!(gens[i] + alpha as i64, gens[j] + beta as i64);
                out.push(KernelRelator { i, j, alpha, beta });
            }
        }
    }
    out
}

/// All ideals J with I ⊆ J ⊆ ℕ, found by adjoining subsets of the finite
/// complement ℕ∖I that keep J + S ⊆ J. Exponential in the number of gaps of
/// the ideal; fine at the scale this is meant for. Results are sorted by
/// their minimal generator lists.
pub fn over_ideals(ideal: &RelativeIdeal) -> Result<Vec<RelativeIdeal>, IdealError> {
    if ideal.min_value() < 0 {
        return Err(IdealError::NegativeGenerators);
    }
    let s = ideal.ambient();
    let bound = ideal.cofinite_from();
    // complement sorted descending so closure checks only consult decided values
    let complement: Vec<i64> = (0..bound).rev().filter(|&n| !ideal.contains(n)).collect();
    let mut chosen: Vec<i64> = Vec::new();
    let mut results: Vec<Vec<i64>> = Vec::new();
    search_over_ideals(ideal, s, &complement, 0, &mut chosen, &mut results);
    let mut out: Vec<RelativeIdeal> = results
        .into_iter()
        .map(|extra| {
            let mut gens = ideal.min_gens().to_vec();
            gens.extend(extra);
            RelativeIdeal::from_generators(s, &gens).expect("nonempty")
        })
        .collect();
    out.sort_by(|a, b| a.min_gens().cmp(b.min_gens()));
    Ok(out)
}

fn search_over_ideals(
    ideal: &RelativeIdeal,
    s: &NumericalSemigroup,
    complement: &[i64],
    idx: usize,
    chosen: &mut Vec<i64>,
    results: &mut Vec<Vec<i64>>,
) {
    if idx == complement.len() {
        results.push(chosen.clone());
        return;
    }
    let x = complement[idx];
    // exclude x
    search_over_ideals(ideal, s, complement, idx + 1, chosen, results);
    // include x when x + S stays inside I ∪ chosen
    let closed = s
        .min_gens()
        .iter()
        .all(|&g| {
            let y = x + g as i64;
            ideal.contains(y) || chosen.contains(&y)
        });
    if closed {
        chosen.push(x);
        search_over_ideals(ideal, s, complement, idx + 1, chosen, results);
        chosen.pop();
    }
}
