//! Bases of the subalgebra A = K[f₁,…,fₛ] ⊆ K[t] and its degree monoid d(A).
//!
//! The completion loop mirrors the classical subalgebra-basis procedure:
//! relations among the leading monomials give S-polynomials, any nonzero
//! remainder is adjoined as a fresh generator, and the degree monoid grows
//! strictly until every S-polynomial reduces to zero. Generators are kept
//! monic throughout, so the leading-monomial relations are pure binomials
//! determined by the degree vector alone.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::numsgp::{factorizations, lex_min_factorization, DegreeMonoid, NumericalSemigroup};
use crate::poly::Poly;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("no nonconstant generators supplied")]
    NoGenerators,
    #[error("the supplied set is not a basis; a certificate of degree {degree} does not reduce")]
    NotABasis { degree: u64 },
}

/// Result of dividing f by generators of A: f = quotient_part + remainder
/// with the quotient in A and every remainder exponent outside the degree
/// monoid of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient_part: Poly,
    pub remainder: Poly,
    /// Quotient monomials as (coefficient, exponent vector over the
    /// generator list), in peel order.
    pub steps: Vec<(Rat, Vec<u64>)>,
}

/// A binomial relation X^lhs − X^rhs among leading monomials; both sides
/// have the same weighted degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialRelation {
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
}

impl BinomialRelation {
    pub fn weighted_degree(&self, degrees: &[u64]) -> u64 {
        self.lhs.iter().zip(degrees).map(|(&a, &d)| a * d).sum()
    }
}

/// Division with remainder against monic generators.
///
/// Repeatedly peels the leading term: when its degree factors over the
/// generator degrees, the lexicographically smallest exponent vector is
/// used (deterministic tie-breaking); otherwise the term moves to the
/// remainder.
pub fn algebra_remainder(f: &Poly, gens: &[Poly]) -> DivisionResult {
    assert!(!gens.is_empty(), "division needs at least one generator");
    debug_assert!(gens.iter().all(|g| g.is_monic() && g.degree().unwrap_or(0) > 0));
    let degrees: Vec<u64> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let monoid = DegreeMonoid::from_generators(&degrees).expect("positive degrees");

    let mut work = f.clone();
    let mut quotient = Poly::zero();
    let mut remainder = Poly::zero();
    let mut steps = Vec::new();
    // the same peel degree recurs constantly; remember its product
    let mut cache: BTreeMap<u64, (Poly, Vec<u64>)> = BTreeMap::new();
    while !work.is_zero() {
        let d = work.degree().unwrap();
        let c = work.leading_coeff().unwrap().clone();
        if monoid.contains(d as i64) {
            let (prod, exps) = cache.entry(d).or_insert_with(|| {
                let exps = lex_min_factorization(d, &degrees).expect("degree is in the monoid");
                (generator_product(gens, &exps), exps)
            });
            let piece = prod.scale(&c);
            quotient = &quotient + &piece;
            work = &work - &piece;
            steps.push((c, exps.clone()));
        } else {
            remainder = &remainder + &Poly::monomial(d, c.clone());
            work = &work - &Poly::monomial(d, c);
        }
    }
    debug_assert_eq!(&(&quotient + &remainder), f);
    DivisionResult {
        quotient_part: quotient,
        remainder,
        steps,
    }
}

fn generator_product(gens: &[Poly], exps: &[u64]) -> Poly {
    let mut prod = Poly::one();
    for (g, &e) in gens.iter().zip(exps) {
        if e > 0 {
            prod = &prod * &g.pow(e);
        }
    }
    prod
}

/// Generators of the kernel of X_i ↦ t^{dᵢ} as binomial exponent pairs.
///
/// Scans the fiber of every monoid element up to a connectivity bound: the
/// factorization graph of n (edges between factorizations sharing a
/// generator) is connected for n ≥ C + min + max, so all relation degrees
/// live below that; at each disconnected fiber one relation per extra
/// component is emitted, tying it to the lexicographically least
/// factorization.
pub fn toric_relations(degrees: &[u64]) -> Vec<BinomialRelation> {
    if degrees.len() <= 1 {
        return Vec::new();
    }
    let monoid = DegreeMonoid::from_generators(degrees).expect("positive degrees");
    let min = *degrees.iter().min().unwrap();
    let max = *degrees.iter().max().unwrap();
    let bound = monoid.conductor_bound() + min + max;
    let mut out = Vec::new();
    for n in 1..=bound {
        if !monoid.contains(n as i64) {
            continue;
        }
        let fibers = factorizations(n, degrees);
        if fibers.len() <= 1 {
            continue;
        }
        for rep in fiber_component_reps(&fibers, degrees.len()).into_iter().skip(1) {
            let relation = BinomialRelation {
                lhs: fibers[rep].clone(),
                rhs: fibers[0].clone(),
            };
            debug_assert_eq!(relation.weighted_degree(degrees), n);
            debug_assert_eq!(
                relation.rhs.iter().zip(degrees).map(|(&a, &d)| a * d).sum::<u64>(),
                n
            );
            out.push(relation);
        }
    }
    out
}

/// Lex-least member of each connected component of the fiber graph,
/// components ordered by that member. Factorizations sharing a generator
/// index are linked through a union-find over generator slots.
fn fiber_component_reps(fibers: &[Vec<u64>], num_gens: usize) -> Vec<usize> {
    let mut uf = UnionFind::new(fibers.len() + num_gens);
    for (fi, f) in fibers.iter().enumerate() {
        for (gi, &e) in f.iter().enumerate() {
            if e > 0 {
                uf.union(fi, fibers.len() + gi);
            }
        }
    }
    let mut reps: BTreeMap<usize, usize> = BTreeMap::new();
    for fi in 0..fibers.len() {
        let root = uf.find(fi);
        reps.entry(root).or_insert(fi);
    }
    let mut list: Vec<usize> = reps.into_values().collect();
    list.sort_unstable();
    list
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// S-polynomials of the relations: Πfᵢ^lhs − Πfᵢ^rhs. Leading monomials
/// cancel exactly since the generators are monic, so each result drops
/// strictly below the relation's weighted degree.
pub fn algebra_s_polynomials(gens: &[Poly], relations: &[BinomialRelation]) -> Vec<Poly> {
    let degrees: Vec<u64> = gens.iter().map(|g| g.degree().unwrap()).collect();
    relations
        .iter()
        .map(|rel| {
            let s = &generator_product(gens, &rel.lhs) - &generator_product(gens, &rel.rhs);
            debug_assert!(s
                .degree()
                .map_or(true, |d| d < rel.weighted_degree(&degrees)));
            s
        })
        .collect()
}

/// Outcome of the basis test: either a basis, or a nonzero remainder as a
/// certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCheck {
    pub is_basis: bool,
    pub certificate: Option<Poly>,
}

/// The set is a basis iff every S-polynomial of its leading-monomial
/// relations reduces to zero.
pub fn is_algebra_basis(gens: &[Poly]) -> BasisCheck {
    let degrees: Vec<u64> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let relations = toric_relations(&degrees);
    for s in algebra_s_polynomials(gens, &relations) {
        let r = algebra_remainder(&s, gens).remainder;
        if !r.is_zero() {
            return BasisCheck {
                is_basis: false,
                certificate: Some(r),
            };
        }
    }
    BasisCheck {
        is_basis: true,
        certificate: None,
    }
}

/// One adjunction during basis completion, kept for verbose traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraStep {
    pub s_polynomial: Poly,
    pub adjoined: Poly,
}

/// Reduced minimal basis of A together with its degree monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraBasis {
    gens: Vec<Poly>,
    degrees: Vec<u64>,
    monoid: DegreeMonoid,
    trace: Vec<AlgebraStep>,
}

impl AlgebraBasis {
    /// Monic generators sorted by degree; tails supported on the gaps of d(A).
    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Degrees of the generators = minimal generators of d(A).
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn monoid(&self) -> &DegreeMonoid {
        &self.monoid
    }

    /// False when the generators never reach gcd 1, i.e. K[t] is not a
    /// finite extension of A.
    pub fn is_numerical(&self) -> bool {
        self.monoid.is_numerical()
    }

    pub fn semigroup(&self) -> Option<&NumericalSemigroup> {
        self.monoid.as_numerical()
    }

    pub fn trace(&self) -> &[AlgebraStep] {
        &self.trace
    }

    pub fn remainder(&self, f: &Poly) -> DivisionResult {
        algebra_remainder(f, &self.gens)
    }

    /// A monic element of A with the given degree, built from the lex-least
    /// factorization over the basis degrees.
    pub fn monic_element_of_degree(&self, d: u64) -> Option<Poly> {
        let exps = lex_min_factorization(d, &self.degrees)?;
        Some(generator_product(&self.gens, &exps))
    }
}

/// Completes a generating set to the unique reduced minimal basis of
/// A = K[gens]. Constants are discarded; the remaining generators are made
/// monic. Termination: every adjoined remainder strictly enlarges the
/// degree monoid, and ascending chains of submonoids of ℕ stabilize.
pub fn compute_algebra_basis(gens: &[Poly]) -> Result<AlgebraBasis, AlgebraError> {
    let mut working: Vec<Poly> = gens
        .iter()
        .filter(|g| g.degree().unwrap_or(0) > 0)
        .map(Poly::monic)
        .collect();
    if working.is_empty() {
        return Err(AlgebraError::NoGenerators);
    }
    let mut trace = Vec::new();
    'completion: loop {
        let degrees: Vec<u64> = working.iter().map(|g| g.degree().unwrap()).collect();
        let relations = toric_relations(&degrees);
        for rel in &relations {
            let s = &generator_product(&working, &rel.lhs) - &generator_product(&working, &rel.rhs);
            let r = algebra_remainder(&s, &working).remainder;
            if !r.is_zero() {
                let adjoined = r.monic();
                trace.push(AlgebraStep {
                    s_polynomial: s,
                    adjoined: adjoined.clone(),
                });
                working.push(adjoined);
                continue 'completion;
            }
        }
        break;
    }
    let (gens, degrees, monoid) = reduce_to_minimal(working);
    Ok(AlgebraBasis {
        gens,
        degrees,
        monoid,
        trace,
    })
}

/// Reduces a verified basis to the unique minimal reduced basis: drops
/// generators whose degree the others already generate and divides every
/// tail down to gap support.
pub fn reduce_basis(basis: &[Poly]) -> Result<AlgebraBasis, AlgebraError> {
    let monic: Vec<Poly> = basis.iter().map(Poly::monic).collect();
    let check = is_algebra_basis(&monic);
    if !check.is_basis {
        let degree = check.certificate.unwrap().degree().unwrap_or(0);
        return Err(AlgebraError::NotABasis { degree });
    }
    let (gens, degrees, monoid) = reduce_to_minimal(monic);
    Ok(AlgebraBasis {
        gens,
        degrees,
        monoid,
        trace: Vec::new(),
    })
}

fn reduce_to_minimal(basis: Vec<Poly>) -> (Vec<Poly>, Vec<u64>, DegreeMonoid) {
    let all_degrees: Vec<u64> = basis.iter().map(|g| g.degree().unwrap()).collect();
    let monoid = DegreeMonoid::from_generators(&all_degrees).expect("positive degrees");
    let minimal_degrees: Vec<u64> = monoid.min_gens().to_vec();
    let mut reduced = Vec::new();
    for &d in &minimal_degrees {
        let f = basis
            .iter()
            .find(|g| g.degree() == Some(d))
            .expect("a basis realizes every minimal degree");
        // remainder of the tail is unique over any basis of A
        let tail_remainder = algebra_remainder(&f.tail(), &basis).remainder;
        let g = &Poly::t_pow(d) + &tail_remainder;
        debug_assert!(g
            .tail()
            .support()
            .all(|e| !monoid.contains(e as i64)));
        reduced.push(g);
    }
    (reduced, minimal_degrees, monoid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::rat::ratio;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn p(text: &str) -> Poly {
        parse_poly(text).unwrap()
    }

    fn polys(texts: &[&str]) -> Vec<Poly> {
        texts.iter().map(|t| p(t)).collect()
    }

    #[test]
    fn remainder_of_generator_is_zero() {
        let gens = polys(&["t^6+t", "t^4"]);
        let r = algebra_remainder(&gens[0], &gens);
        assert!(r.remainder.is_zero());
        assert_eq!(r.quotient_part, gens[0]);
    }

    #[test]
    fn remainder_keeps_gap_degrees() {
        let gens = polys(&["t^6+t", "t^4"]);
        let r = algebra_remainder(&p("t^5"), &gens);
        assert_eq!(r.remainder, p("t^5"));
        assert!(r.quotient_part.is_zero());

        // 7 and 2 both fall outside <4,6>
        let r = algebra_remainder(&p("2*t^7+t^2"), &gens);
        assert_eq!(r.remainder, p("2*t^7+t^2"));
    }

    #[test]
    fn division_identity_holds() {
        let gens = polys(&["t^4", "t^6+t", "t^7+1/2*t^2"]);
        let f = p("t^11+3*t^5+t^3+1/7");
        let r = algebra_remainder(&f, &gens);
        assert_eq!(&(&r.quotient_part + &r.remainder), &f);
        let m = DegreeMonoid::from_generators(&[4, 6, 7]).unwrap();
        for e in r.remainder.support() {
            assert!(!m.contains(e as i64));
        }
        assert!(!r.steps.is_empty());
    }

    #[test]
    fn toric_relations_of_two_generators() {
        let rels = toric_relations(&[6, 4]);
        assert_eq!(
            rels,
            vec![BinomialRelation {
                lhs: vec![2, 0],
                rhs: vec![0, 3],
            }]
        );
        assert!(toric_relations(&[5]).is_empty());
    }

    /// Independent check: every binomial relation of weighted degree up to
    /// 2·C reduces to zero under the congruence generated by the returned
    /// set (closure computed by rewriting moves over the fibers).
    fn congruence_generates(degrees: &[u64], rels: &[BinomialRelation], bound: u64) -> bool {
        for n in 1..=bound {
            let fibers = factorizations(n, degrees);
            if fibers.len() <= 1 {
                continue;
            }
            let index: BTreeMap<Vec<u64>, usize> = fibers
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, f)| (f, i))
                .collect();
            let mut uf = UnionFind::new(fibers.len());
            for (i, f) in fibers.iter().enumerate() {
                for rel in rels {
                    for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                        if f.iter().zip(from.iter()).all(|(&a, &b)| a >= b) {
                            let moved: Vec<u64> = f
                                .iter()
                                .zip(from.iter().zip(to.iter()))
                                .map(|(&a, (&b, &c))| a - b + c)
                                .collect();
                            uf.union(i, index[&moved]);
                        }
                    }
                }
            }
            let root = uf.find(0);
            if (1..fibers.len()).any(|i| uf.find(i) != root) {
                return false;
            }
        }
        true
    }

    #[test]
    fn toric_relations_generate_the_congruence() {
        for degrees in [
            vec![4, 6, 7],
            vec![6, 4],
            vec![3, 5, 7],
            vec![4, 5],
            vec![8, 10, 11, 13],
        ] {
            let rels = toric_relations(&degrees);
            let m = DegreeMonoid::from_generators(&degrees).unwrap();
            let bound = 2 * m.conductor_bound().max(*degrees.iter().max().unwrap());
            assert!(
                congruence_generates(&degrees, &rels, bound),
                "relations for {degrees:?} do not generate"
            );
            // every relation balances its weighted degrees
            for rel in &rels {
                let lhs: u64 = rel.lhs.iter().zip(&degrees).map(|(&a, &d)| a * d).sum();
                let rhs: u64 = rel.rhs.iter().zip(&degrees).map(|(&a, &d)| a * d).sum();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn s_polynomial_of_first_relation() {
        let gens = polys(&["t^6+t", "t^4"]);
        let rels = toric_relations(&[6, 4]);
        let sp = algebra_s_polynomials(&gens, &rels);
        assert_eq!(sp, vec![p("2*t^7+t^2")]);

        let trivial = BinomialRelation {
            lhs: vec![1, 0],
            rhs: vec![1, 0],
        };
        assert!(algebra_s_polynomials(&gens, &[trivial])[0].is_zero());
    }

    #[test]
    fn basis_detection() {
        let check = is_algebra_basis(&polys(&["t^6+t", "t^4"]));
        assert!(!check.is_basis);
        assert_eq!(check.certificate.unwrap().degree(), Some(7));

        let check = is_algebra_basis(&polys(&["t^4", "t^6+t", "t^7+1/2*t^2"]));
        assert!(check.is_basis);

        let check = is_algebra_basis(&polys(&["t"]));
        assert!(check.is_basis);
    }

    #[test]
    fn completion_reproduces_known_basis() {
        let basis = compute_algebra_basis(&polys(&["t^6+t", "t^4"])).unwrap();
        assert_eq!(basis.gens(), &polys(&["t^4", "t^6+t", "t^7+1/2*t^2"])[..]);
        assert_eq!(basis.degrees(), &[4, 6, 7]);
        assert!(basis.is_numerical());
        assert_eq!(basis.semigroup().unwrap().min_gens(), &[4, 6, 7]);
        assert_eq!(basis.trace().len(), 1);
        assert_eq!(basis.trace()[0].adjoined, p("t^7+1/2*t^2"));
    }

    #[test]
    fn completion_of_single_variable() {
        let basis = compute_algebra_basis(&polys(&["t"])).unwrap();
        assert_eq!(basis.gens(), &polys(&["t"])[..]);
        assert_eq!(basis.degrees(), &[1]);
    }

    #[test]
    fn completion_with_gap_tail() {
        let basis = compute_algebra_basis(&polys(&["t^3", "t^4+t"])).unwrap();
        assert_eq!(basis.degrees(), &[3, 4]);
        // the tail exponent 1 is a gap of <3,4>, so the generator stays put
        assert_eq!(basis.gens(), &polys(&["t^3", "t^4+t"])[..]);
    }

    #[test]
    fn non_numerical_is_flagged() {
        let basis = compute_algebra_basis(&polys(&["t^4", "t^6"])).unwrap();
        assert!(!basis.is_numerical());
        assert_eq!(basis.monoid().content(), 2);
        assert_eq!(basis.degrees(), &[4, 6]);
        assert!(basis.semigroup().is_none());
    }

    #[test]
    fn constants_are_discarded() {
        let basis = compute_algebra_basis(&polys(&["5", "t^2", "t^3"])).unwrap();
        assert_eq!(basis.degrees(), &[2, 3]);
        assert!(matches!(
            compute_algebra_basis(&polys(&["5"])),
            Err(AlgebraError::NoGenerators)
        ));
    }

    #[test]
    fn reduce_drops_redundant_degree() {
        let input = polys(&["t^4", "t^6+t", "t^7+1/2*t^2", "t^8"]);
        let reduced = reduce_basis(&input).unwrap();
        assert_eq!(reduced.degrees(), &[4, 6, 7]);
        assert_eq!(reduced.gens(), &polys(&["t^4", "t^6+t", "t^7+1/2*t^2"])[..]);
        // idempotence
        let again = reduce_basis(reduced.gens()).unwrap();
        assert_eq!(again.gens(), reduced.gens());
    }

    #[test]
    fn reduce_rejects_non_basis() {
        assert!(matches!(
            reduce_basis(&polys(&["t^6+t", "t^4"])),
            Err(AlgebraError::NotABasis { degree: 7 })
        ));
    }

    #[test]
    fn completion_is_order_independent() {
        let a = compute_algebra_basis(&polys(&["t^6+t", "t^4"])).unwrap();
        let b = compute_algebra_basis(&polys(&["t^4", "t^6+t"])).unwrap();
        assert_eq!(a.gens(), b.gens());
    }

    /// Staircase oracle: checks the claimed degree set below `bound` against
    /// row reduction over products of the input generators. Shares no code
    /// with the basis machinery.
    ///
    /// A fixed product budget can miss cancellations (for K[t^6+t, t^4] the
    /// degree-15 element first appears at weighted degree 20), so the budget
    /// grows until every claimed degree is witnessed in the span — claimed
    /// degrees are honest A-degrees, so this terminates when the claim is
    /// correct — and only then is equality required. Pivot sets only grow
    /// with the budget, so a spurious extra degree can never disappear and
    /// still fails the final comparison.
    fn staircase_oracle_matches(gens: &[Poly], claimed: &BTreeSet<u64>, bound: u64) -> bool {
        let monic: Vec<Poly> = gens.iter().map(Poly::monic).collect();
        let step = bound.max(monic.iter().map(|g| g.degree().unwrap()).max().unwrap());
        let mut budget = step;
        for _ in 0..32 {
            let visible = staircase_at_budget(&monic, budget, bound);
            if claimed.is_subset(&visible) {
                return &visible == claimed;
            }
            budget += step;
        }
        panic!("oracle never witnessed every claimed degree below {bound}");
    }

    fn staircase_at_budget(gens: &[Poly], budget: u64, bound: u64) -> BTreeSet<u64> {
        let mut products = Vec::new();
        collect_products(gens, 0, Poly::one(), budget, &mut products);
        let mut pivots: BTreeMap<u64, Poly> = BTreeMap::new();
        for mut row in products {
            while let Some(d) = row.degree() {
                match pivots.get(&d) {
                    Some(pivot) => {
                        let lc = row.leading_coeff().unwrap().clone();
                        row = &row - &pivot.scale(&lc);
                    }
                    None => {
                        pivots.insert(d, row.monic());
                        break;
                    }
                }
            }
        }
        pivots.into_keys().filter(|&d| d <= bound).collect()
    }

    fn collect_products(gens: &[Poly], idx: usize, acc: Poly, budget: u64, out: &mut Vec<Poly>) {
        if idx == gens.len() {
            out.push(acc);
            return;
        }
        let d = gens[idx].degree().unwrap();
        let mut power = Poly::one();
        let mut used = 0;
        loop {
            collect_products(gens, idx + 1, &acc * &power, budget - used, out);
            if used + d > budget {
                break;
            }
            power = &power * &gens[idx];
            used += d;
        }
    }

    fn basis_degrees_up_to(basis: &AlgebraBasis, bound: u64) -> BTreeSet<u64> {
        (0..=bound)
            .filter(|&d| basis.monoid().contains(d as i64))
            .collect()
    }

    #[test]
    fn staircase_matches_on_known_example() {
        let gens = polys(&["t^6+t", "t^4"]);
        let basis = compute_algebra_basis(&gens).unwrap();
        let s = basis.semigroup().unwrap();
        let bound = s.conductor() + 2 * s.multiplicity();
        assert!(staircase_oracle_matches(
            &gens,
            &basis_degrees_up_to(&basis, bound),
            bound
        ));
        // a wrong claim is rejected
        let mut wrong = basis_degrees_up_to(&basis, bound);
        wrong.remove(&15);
        assert!(!staircase_oracle_matches(&gens, &wrong, bound));
    }

    fn arb_gens() -> impl Strategy<Value = Vec<Poly>> {
        let coeff = (-4i64..=4, 1i64..=4).prop_map(|(n, d)| ratio(n, d));
        let poly = (2u64..=12, proptest::collection::vec((0u64..=11, coeff), 0..3))
            .prop_map(|(deg, tail)| {
                let mut q = Poly::t_pow(deg);
                for (e, c) in tail {
                    if e < deg {
                        q = &q + &Poly::monomial(e, c);
                    }
                }
                q
            });
        proptest::collection::vec(poly, 1..=3)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn staircase_oracle_agrees(gens in arb_gens()) {
            let basis = compute_algebra_basis(&gens).unwrap();
            let bound = match basis.semigroup() {
                Some(s) => s.conductor() + 2 * s.multiplicity(),
                None => basis.monoid().conductor_bound() + 2 * basis.degrees()[0],
            };
            let claimed = basis_degrees_up_to(&basis, bound);
            prop_assert!(staircase_oracle_matches(&gens, &claimed, bound));
        }

        #[test]
        fn reduced_tails_live_in_gaps(gens in arb_gens()) {
            let basis = compute_algebra_basis(&gens).unwrap();
            for g in basis.gens() {
                prop_assert!(g.is_monic());
                for e in g.tail().support() {
                    prop_assert!(!basis.monoid().contains(e as i64));
                }
            }
        }

        #[test]
        fn completion_order_invariance(gens in arb_gens()) {
            let a = compute_algebra_basis(&gens).unwrap();
            let mut rev = gens.clone();
            rev.reverse();
            let b = compute_algebra_basis(&rev).unwrap();
            prop_assert_eq!(a.gens(), b.gens());
        }
    }
}
