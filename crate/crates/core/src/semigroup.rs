//! Numerical semigroups and their first-order invariants.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest membership table we are willing to allocate.
const MAX_WINDOW: u128 = 1 << 28;

/// A numerical semigroup `S ⊆ ℕ`, stored as its membership table on
/// `[0, F(S)]`. All invariants are computed once at construction.
///
/// Cloning is cheap; the data is shared.
#[derive(Clone)]
pub struct NumericalSemigroup(Arc<Inner>);

struct Inner {
    generators: Vec<i64>,
    frobenius: i64,
    /// `window[x]` is membership of `x` for `0 <= x <= frobenius`.
    window: Vec<bool>,
    multiplicity: i64,
    genus: usize,
    small_members: usize,
    apery: Vec<i64>,
    /// `{ω - e : ω maximal in Ap(S) under ≤_S}`; equals `[-1]` for `ℕ`.
    pf: Vec<i64>,
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Parses a semigroup literal such as `"9,24,39,43,77"`.
pub fn parse_generators(literal: &str) -> Result<Vec<i64>> {
    let literal = literal.trim().trim_start_matches('<').trim_end_matches('>');
    if literal.trim().is_empty() {
        return Err(Error::EmptyGenerators);
    }
    literal
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
        })
        .collect()
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`. Generators need not be minimal or
    /// sorted; the stored system is the unique minimal one.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let smallest = *gens.iter().min().unwrap();
        let largest = *gens.iter().max().unwrap();
        if smallest == 1 {
            return Ok(Self::natural());
        }
        // F(S) < min·max for any generating set with gcd 1.
        let bound = smallest as u128 * largest as u128;
        if bound > MAX_WINDOW {
            return Err(Error::TooLarge(bound));
        }
        let bound = bound as usize;
        let mut sorted: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
        sorted.sort_unstable();
        sorted.dedup();
        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for x in 1..=bound {
            reach[x] = sorted
                .iter()
                .take_while(|&&g| g <= x)
                .any(|&g| reach[x - g]);
        }
        let frobenius = reach.iter().rposition(|&b| !b).expect("1 is not reachable") as i64;
        reach.truncate(frobenius as usize + 1);
        Ok(Self::from_window(frobenius, reach))
    }

    /// `ℕ` itself.
    pub fn natural() -> Self {
        Self::from_window(-1, Vec::new())
    }

    /// Builds a semigroup from a membership table on `[0, frobenius]` that is
    /// already known to be additively closed.
    pub(crate) fn from_window(frobenius: i64, window: Vec<bool>) -> Self {
        debug_assert_eq!(window.len() as i64, frobenius + 1);
        debug_assert!(frobenius < 0 || (window[0] && !window[frobenius as usize]));
        let contains = |x: i64| x > frobenius || (x >= 0 && window[x as usize]);
        let multiplicity = (1..=frobenius + 1).find(|&x| contains(x)).unwrap_or(1);
        let genus = window.iter().filter(|&&b| !b).count();
        let small_members = window.len() - genus;

        let mut generators = Vec::new();
        for x in multiplicity..=(frobenius + multiplicity).max(multiplicity) {
            if contains(x)
                && !(multiplicity..=x - multiplicity).any(|s| contains(s) && contains(x - s))
            {
                generators.push(x);
            }
        }

        let apery: Vec<i64> = (0..multiplicity)
            .map(|i| {
                (0..)
                    .map(|k| i + k * multiplicity)
                    .find(|&x| contains(x))
                    .unwrap()
            })
            .collect();
        let mut pf: Vec<i64> = apery
            .iter()
            .filter(|&&w| !apery.iter().any(|&v| v != w && v > w && contains(v - w)))
            .map(|&w| w - multiplicity)
            .collect();
        pf.sort_unstable();

        NumericalSemigroup(Arc::new(Inner {
            generators,
            frobenius,
            window,
            multiplicity,
            genus,
            small_members,
            apery,
            pf,
        }))
    }

    /// Builds a semigroup from an arbitrary membership table on `[0, frobenius]`
    /// (members above `frobenius` implied), checking that it is one.
    pub(crate) fn from_window_checked(frobenius: i64, window: Vec<bool>) -> Result<Self> {
        if frobenius >= 0 {
            if !window[0] {
                return Err(Error::NotASemigroup("0 is not a member".into()));
            }
            if window[frobenius as usize] {
                return Err(Error::NotASemigroup("window does not end at a gap".into()));
            }
            let f = frobenius as usize;
            for a in 1..=f {
                if !window[a] {
                    continue;
                }
                for b in a..=f - a {
                    if window[b] && !window[a + b] {
                        return Err(Error::NotASemigroup(format!(
                            "{a} + {b} = {} is missing",
                            a + b
                        )));
                    }
                }
            }
        }
        Ok(Self::from_window(frobenius, window))
    }

    /// Minimal generating system, ascending.
    pub fn generators(&self) -> &[i64] {
        &self.0.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.0.generators.len()
    }

    /// `F(S)`; `-1` exactly for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.0.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.0.frobenius + 1
    }

    /// Smallest nonzero member `e`.
    pub fn multiplicity(&self) -> i64 {
        self.0.multiplicity
    }

    /// Number of gaps `g(S)`.
    pub fn genus(&self) -> usize {
        self.0.genus
    }

    /// `n(S)`: members below `F(S)`.
    pub fn small_members(&self) -> usize {
        self.0.small_members
    }

    /// `t(S) = |PF(S)|`.
    pub fn semigroup_type(&self) -> usize {
        self.0.pf.len()
    }

    pub fn is_natural(&self) -> bool {
        self.0.frobenius < 0
    }

    pub fn has_max_embedding_dimension(&self) -> bool {
        self.embedding_dimension() as i64 == self.multiplicity()
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        if x > self.0.frobenius {
            true
        } else if x < 0 {
            false
        } else {
            self.0.window[x as usize]
        }
    }

    pub fn is_minimal_generator(&self, x: i64) -> bool {
        self.0.generators.binary_search(&x).is_ok()
    }

    /// Gaps of `S`, ascending.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.0.frobenius)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Members of `S` in `[0, bound]`, ascending.
    pub fn members_up_to(&self, bound: i64) -> Vec<i64> {
        (0..=bound).filter(|&x| self.contains(x)).collect()
    }

    /// Apéry set with respect to the multiplicity.
    pub fn apery_set(&self) -> &[i64] {
        &self.0.apery
    }

    /// Apéry set `[ω_0, …, ω_{n-1}]` with respect to a positive member `n`.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        if n == self.0.multiplicity {
            return Ok(self.0.apery.clone());
        }
        Ok((0..n)
            .map(|i| {
                (0..)
                    .map(|k| i + k * n)
                    .find(|&x| self.contains(x))
                    .unwrap()
            })
            .collect())
    }

    /// `PF(S)`, ascending. Its maximum is `F(S)`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        self.require_proper()?;
        Ok(self.0.pf.clone())
    }

    /// PF including the degenerate value `[-1]` for `ℕ`.
    pub(crate) fn pf_raw(&self) -> &[i64] {
        &self.0.pf
    }

    /// `L(S) = K(S) ∖ S`: gaps `x` with `F(S) - x` also a gap.
    pub fn second_type_gaps(&self) -> Result<Vec<i64>> {
        self.require_proper()?;
        let f = self.frobenius();
        Ok(self
            .gaps()
            .into_iter()
            .filter(|&x| !self.contains(f - x))
            .collect())
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_natural() {
            Err(Error::FullSemigroup)
        } else {
            Ok(())
        }
    }

    /// `S ∖ {x}` for a minimal generator `x > F(S)`; the child in the genus tree.
    pub fn remove_generator(&self, x: i64) -> Result<Self> {
        if x <= self.frobenius() || !self.is_minimal_generator(x) {
            return Err(Error::PreconditionFailed(format!(
                "{x} is not a minimal generator above the Frobenius number"
            )));
        }
        let window = (0..=x).map(|y| y != x && self.contains(y)).collect();
        Ok(Self::from_window(x, window))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.generators == other.0.generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.generators.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(i64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}
