//! Numerical semigroups and general submonoids of ℕ.
//!
//! Membership is answered through the Apéry set with respect to the
//! multiplicity, computed once at construction by a shortest-path search on
//! residue classes: n ∈ S iff n ≥ w(n mod m). Every higher layer of the
//! crate leans on that O(1) query.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list must be nonempty with positive entries")]
    BadGenerators,
    #[error("generators have gcd {content} > 1, not a numerical semigroup")]
    NotNumerical { content: u64 },
}

/// Numerical semigroup: a submonoid of ℕ with finite complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    min_gens: Vec<u64>,
    multiplicity: u64,
    /// `apery[i]` is the least element congruent to `i` mod the multiplicity.
    apery: Vec<u64>,
    frobenius: i64,
    conductor: u64,
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(SemigroupError::BadGenerators);
        }
        let content = gens.iter().fold(0u64, |g, &a| g.gcd(&a));
        if content != 1 {
            return Err(SemigroupError::NotNumerical { content });
        }
        let multiplicity = *gens.iter().min().expect("nonempty");
        let apery = apery_by_dijkstra(gens, multiplicity);
        let frobenius = *apery.iter().max().expect("nonempty") as i64 - multiplicity as i64;
        let conductor = (frobenius + 1) as u64;
        let contains = |n: u64| n >= apery[(n % multiplicity) as usize];
        let gaps: Vec<u64> = (1..conductor).filter(|&n| !contains(n)).collect();

        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let min_gens: Vec<u64> = sorted
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|a| contains(a) && contains(g - a)))
            .collect();

        Ok(NumericalSemigroup {
            min_gens,
            multiplicity,
            apery,
            frobenius,
            conductor,
            gaps,
        })
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && (n as u64) >= self.apery[(n as u64 % self.multiplicity) as usize]
    }

    pub fn min_gens(&self) -> &[u64] {
        &self.min_gens
    }

    /// m(S), the least positive element.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Ap(S, m(S)) sorted ascending, m(S) entries including 0.
    pub fn apery_set(&self) -> Vec<u64> {
        let mut ap = self.apery.clone();
        ap.sort_unstable();
        ap
    }

    /// F(S), the largest gap; -1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// C(S) = F(S) + 1.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// g(S), the number of gaps.
    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// a ∈ S ⟺ F(S) − a ∉ S for every integer a.
    pub fn is_symmetric(&self) -> bool {
        (0..=self.frobenius.max(-1))
            .all(|a| self.contains(a) != self.contains(self.frobenius - a))
    }

    /// All factorizations of `n` over the minimal generators.
    pub fn factorizations(&self, n: u64) -> Vec<Vec<u64>> {
        factorizations(n, &self.min_gens)
    }
}

fn apery_by_dijkstra(gens: &[u64], multiplicity: u64) -> Vec<u64> {
    let m = multiplicity as usize;
    let mut dist: Vec<Option<u64>> = vec![None; m];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((value, residue))) = heap.pop() {
        if dist[residue] != Some(value) {
            continue;
        }
        for &g in gens {
            let next = value + g;
            let r = (next % multiplicity) as usize;
            if dist[r].map_or(true, |cur| cur > next) {
                dist[r] = Some(next);
                heap.push(Reverse((next, r)));
            }
        }
    }
    dist.into_iter()
        .map(|d| d.expect("gcd 1 makes every residue reachable"))
        .collect()
}

/// All nonnegative solutions of `n = Σ cᵢ·gens[i]`, in lexicographic order
/// of the exponent vector. Depth-first with residual pruning; the generator
/// order is the caller's so indices line up with their list.
pub fn factorizations(n: u64, gens: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; gens.len()];
    fact_rec(n, gens, 0, &mut current, &mut out, usize::MAX);
    out
}

/// First factorization in lexicographic order, if any.
pub fn lex_min_factorization(n: u64, gens: &[u64]) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![0u64; gens.len()];
    fact_rec(n, gens, 0, &mut current, &mut out, 1);
    out.into_iter().next()
}

fn fact_rec(
    remaining: u64,
    gens: &[u64],
    idx: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if idx == gens.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    if idx + 1 == gens.len() {
        if remaining % gens[idx] == 0 {
            current[idx] = remaining / gens[idx];
            out.push(current.clone());
            current[idx] = 0;
        }
        return;
    }
    for c in 0..=remaining / gens[idx] {
        current[idx] = c;
        fact_rec(remaining - c * gens[idx], gens, idx + 1, current, out, limit);
        if out.len() >= limit {
            break;
        }
    }
    current[idx] = 0;
}

/// Submonoid of ℕ given by generators: content times a numerical semigroup.
/// This is what the basis algorithm works over before d(A) becomes
/// numerical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMonoid {
    generators: Vec<u64>,
    content: u64,
    reduced: NumericalSemigroup,
}

impl DegreeMonoid {
    pub fn from_generators(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(SemigroupError::BadGenerators);
        }
        let content = gens.iter().fold(0u64, |g, &a| g.gcd(&a));
        let scaled: Vec<u64> = gens.iter().map(|&g| g / content).collect();
        let reduced = NumericalSemigroup::from_generators(&scaled)?;
        let generators = reduced.min_gens().iter().map(|&g| g * content).collect();
        Ok(DegreeMonoid {
            generators,
            content,
            reduced,
        })
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && n % self.content as i64 == 0 && self.reduced.contains(n / self.content as i64)
    }

    /// Minimal generators of the monoid (already scaled by the content).
    pub fn min_gens(&self) -> &[u64] {
        &self.generators
    }

    pub fn content(&self) -> u64 {
        self.content
    }

    pub fn is_numerical(&self) -> bool {
        self.content == 1
    }

    /// The numerical semigroup on generators/content.
    pub fn reduced(&self) -> &NumericalSemigroup {
        &self.reduced
    }

    pub fn as_numerical(&self) -> Option<&NumericalSemigroup> {
        self.is_numerical().then_some(&self.reduced)
    }

    /// Past this value every multiple of the content belongs to the monoid.
    pub fn conductor_bound(&self) -> u64 {
        self.content * self.reduced.conductor()
    }
}

/// Free-semigroup data for a fixed arrangement of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeStructure {
    arrangement: Vec<u64>,
    /// d₁,…,d_{h+1} with d_{i+1} = gcd(r₀,…,rᵢ).
    divisors: Vec<u64>,
    /// e₁,…,e_h with eᵢ = dᵢ/d_{i+1}.
    quotients: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not free for this arrangement: {0}")]
pub struct NotFree(pub String);

impl FreeStructure {
    pub fn arrangement(&self) -> &[u64] {
        &self.arrangement
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// Number of stages h (arrangement has h+1 entries).
    pub fn stages(&self) -> usize {
        self.quotients.len()
    }

    /// F(S) by the closed formula Σ(eᵢ−1)rᵢ − r₀.
    pub fn frobenius_by_formula(&self) -> i64 {
        let sum: i64 = self
            .quotients
            .iter()
            .zip(self.arrangement.iter().skip(1))
            .map(|(&e, &r)| (e as i64 - 1) * r as i64)
            .sum();
        sum - self.arrangement[0] as i64
    }

    /// The unique (λ₀,…,λ_h) with s = Σλᵢrᵢ and 0 ≤ λᵢ < eᵢ for i ≥ 1.
    /// s belongs to the semigroup iff λ₀ ≥ 0.
    pub fn standard_representation(&self, s: i64) -> Vec<i64> {
        let h = self.stages();
        let mut lambdas = vec![0i64; h + 1];
        let mut rem = s;
        for i in (1..=h).rev() {
            let d_i = self.divisors[i - 1] as i64;
            let e_i = self.quotients[i - 1] as i64;
            let r_i = self.arrangement[i] as i64;
            let lambda = (0..e_i)
                .find(|&l| (rem - l * r_i).rem_euclid(d_i) == 0)
                .expect("the residues λ·rᵢ mod dᵢ cover every class of d_{i+1}");
            lambdas[i] = lambda;
            rem -= lambda * r_i;
        }
        let r0 = self.arrangement[0] as i64;
        debug_assert_eq!(rem.rem_euclid(r0), 0);
        lambdas[0] = rem.div_euclid(r0);
        lambdas
    }
}

/// Tests freeness of `s` for the given arrangement: the gcd chain must
/// strictly decrease to 1 and each eᵢrᵢ must lie in the monoid generated by
/// the earlier generators.
pub fn free_structure(
    s: &NumericalSemigroup,
    arrangement: &[u64],
) -> Result<FreeStructure, NotFree> {
    if arrangement.is_empty() || arrangement.contains(&0) {
        return Err(NotFree("empty or zero generator".into()));
    }
    match NumericalSemigroup::from_generators(arrangement) {
        Ok(gen) if gen.min_gens() == s.min_gens() => {}
        _ => return Err(NotFree("arrangement does not generate the semigroup".into())),
    }
    let mut divisors = vec![arrangement[0]];
    for &r in &arrangement[1..] {
        divisors.push(divisors.last().unwrap().gcd(&r));
    }
    if *divisors.last().unwrap() != 1 {
        return Err(NotFree("gcd chain does not reach 1".into()));
    }
    for w in divisors.windows(2) {
        if w[0] <= w[1] {
            return Err(NotFree(format!(
                "gcd chain is not strictly decreasing ({} to {})",
                w[0], w[1]
            )));
        }
    }
    let quotients: Vec<u64> = divisors.windows(2).map(|w| w[0] / w[1]).collect();
    for (i, (&e, &r)) in quotients.iter().zip(&arrangement[1..]).enumerate() {
        let prefix = DegreeMonoid::from_generators(&arrangement[..=i])
            .expect("prefix of a valid arrangement");
        if !prefix.contains((e * r) as i64) {
            return Err(NotFree(format!(
                "{e}·{r} is not generated by the first {} generators",
                i + 1
            )));
        }
    }
    let fs = FreeStructure {
        arrangement: arrangement.to_vec(),
        divisors,
        quotients,
    };
    debug_assert_eq!(fs.frobenius_by_formula(), s.frobenius());
    Ok(fs)
}
