//! Relative ideals of a numerical semigroup and the calculus on them: sums,
//! differences, duals against the canonical ideal, normalization, powers of
//! `K` and the semigroup `⟨K⟩`.
//!
//! Every ideal carries its ambient semigroup. Binary operations refuse to mix
//! ambients; moving an ideal to another semigroup goes through
//! [`RelativeIdeal::rebase`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intset::CofiniteSet;
use crate::semigroup::NumericalSemigroup;

/// A relative ideal `I` of a numerical semigroup `S`: `I + S ⊆ I`, bounded
/// below, cofinite. Equality is extensional (plus equal ambients).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    set: CofiniteSet,
}

/// `PF(I)`, `t(I)`, `g(I)` and `Ap(I)` of a relative ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealInvariants {
    pub pf: Vec<i64>,
    #[serde(rename = "type")]
    pub ideal_type: usize,
    pub genus: usize,
    pub apery: Vec<i64>,
}

/// One step of the chain `K ⊆ 2K ⊆ 3K ⊆ …`: the elements of `nK ∖ (n-1)K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerGap {
    pub n: usize,
    pub elements: Vec<i64>,
}

fn closed_under(s: &NumericalSemigroup, set: &CofiniteSet) -> bool {
    set.finite_members()
        .iter()
        .all(|&x| s.generators().iter().all(|&g| set.contains(x + g)))
}

impl RelativeIdeal {
    pub(crate) fn from_set_unchecked(ambient: &NumericalSemigroup, set: CofiniteSet) -> Self {
        RelativeIdeal {
            ambient: ambient.clone(),
            set,
        }
    }

    /// Wraps a set as an ideal of `ambient`, checking `I + S ⊆ I`.
    pub fn from_set(ambient: &NumericalSemigroup, set: CofiniteSet) -> Result<Self> {
        if !closed_under(ambient, &set) {
            return Err(Error::NotAnIdeal);
        }
        Ok(Self::from_set_unchecked(ambient, set))
    }

    /// `⋃_g (g + S)`. The generators need not be minimal.
    pub fn from_generators(ambient: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        let lo = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = gens.iter().max().unwrap() + ambient.frobenius();
        let set =
            CofiniteSet::from_predicate(lo, hi, |x| gens.iter().any(|&g| ambient.contains(x - g)));
        Ok(Self::from_set_unchecked(ambient, set))
    }

    /// `S` as an ideal of itself.
    pub fn whole(s: &NumericalSemigroup) -> Self {
        let set = CofiniteSet::from_predicate(0, s.frobenius(), |x| s.contains(x));
        Self::from_set_unchecked(s, set)
    }

    /// The maximal ideal `M = S ∖ {0}`.
    pub fn maximal(s: &NumericalSemigroup) -> Self {
        let set = CofiniteSet::from_predicate(1, s.frobenius().max(0), |x| s.contains(x));
        Self::from_set_unchecked(s, set)
    }

    /// `K(S) = {x ∈ ℕ : F(S) - x ∉ S}`; for `ℕ` this is `ℕ`.
    pub(crate) fn canonical_unchecked(s: &NumericalSemigroup) -> Self {
        let f = s.frobenius();
        let set = CofiniteSet::from_predicate(0, f, |x| !s.contains(f - x));
        Self::from_set_unchecked(s, set)
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub fn as_set(&self) -> &CofiniteSet {
        &self.set
    }

    pub fn min_element(&self) -> i64 {
        self.set.min()
    }

    /// `F(I) = max(ℤ ∖ I)`.
    pub fn frobenius(&self) -> i64 {
        self.set.frobenius()
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        self.set.contains(x)
    }

    pub fn translate(&self, d: i64) -> Self {
        Self::from_set_unchecked(&self.ambient, self.set.translate(d))
    }

    pub fn is_subset(&self, other: &RelativeIdeal) -> bool {
        self.set.is_subset(&other.set)
    }

    /// `self ∖ other` (finite), ascending.
    pub fn minus(&self, other: &RelativeIdeal) -> Vec<i64> {
        self.set.minus(&other.set)
    }

    fn same_ambient(&self, other: &RelativeIdeal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// `I - J = {x ∈ ℤ : x + J ⊆ I}`.
    pub fn difference(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_ambient(other)?;
        let (i, j) = (&self.set, &other.set);
        let lo = i.min() - j.min();
        let hi = i.frobenius() - j.min();
        // Beyond F(I) - x every element of x + J lands above F(I).
        let set = CofiniteSet::from_predicate(lo, hi, |x| {
            (j.min()..=i.frobenius() - x).all(|y| !j.contains(y) || i.contains(x + y))
        });
        Ok(Self::from_set_unchecked(&self.ambient, set))
    }

    /// `I + J = {i + j}`.
    pub fn sum(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_ambient(other)?;
        let (i, j) = (&self.set, &other.set);
        let lo = i.min() + j.min();
        let hi = (i.frobenius() + j.min()).min(j.frobenius() + i.min());
        let set = CofiniteSet::from_predicate(lo, hi, |x| {
            (i.min()..=x - j.min()).any(|y| i.contains(y) && j.contains(x - y))
        });
        Ok(Self::from_set_unchecked(&self.ambient, set))
    }

    /// `Ĩ = I + (F(S) - F(I))`, the translate with Frobenius number `F(S)`.
    pub fn normalize_tilde(&self) -> Self {
        self.translate(self.ambient.frobenius() - self.frobenius())
    }

    /// `Ap(I) = {i ∈ I : i - e ∉ I}` for the ambient multiplicity `e`.
    pub fn apery(&self) -> Vec<i64> {
        let e = self.ambient.multiplicity();
        (self.set.min()..=self.set.frobenius() + e)
            .filter(|&x| self.contains(x) && !self.contains(x - e))
            .collect()
    }

    /// Minimal generators of `I` as an `S`-ideal: the elements not in `I + M`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let s = &self.ambient;
        let e = s.multiplicity();
        (self.set.min()..=self.set.frobenius() + e)
            .filter(|&x| {
                self.contains(x)
                    && !(e..=x - self.set.min()).any(|m| s.contains(m) && self.contains(x - m))
            })
            .collect()
    }

    /// `PF(I)`, `t(I)`, `g(I)`, `Ap(I)`. PF is computed both as
    /// `(I - M) ∖ I` and from the `≤_S`-maximal elements of `Ap(I)`.
    pub fn invariants(&self) -> Result<IdealInvariants> {
        let s = &self.ambient;
        let m = RelativeIdeal::maximal(s);
        let pf = self.difference(&m)?.minus(self);

        let e = s.multiplicity();
        let apery = self.apery();
        if apery.len() as i64 != e {
            return Err(Error::inconsistent(format!(
                "|Ap(I)| = {} but e = {e}",
                apery.len()
            )));
        }
        let pf_from_apery: Vec<i64> = apery
            .iter()
            .filter(|&&w| !apery.iter().any(|&v| v > w && s.contains(v - w)))
            .map(|&w| w - e)
            .collect();
        let mut sorted = pf_from_apery;
        sorted.sort_unstable();
        if sorted != pf {
            return Err(Error::inconsistent(format!(
                "PF(I) routes disagree: {pf:?} vs {sorted:?}"
            )));
        }

        let tilde = self.normalize_tilde();
        if tilde.min_element() < 0 {
            return Err(Error::inconsistent("normalized ideal leaves ℕ"));
        }
        let genus = (0..=s.frobenius()).filter(|&x| !tilde.contains(x)).count();
        Ok(IdealInvariants {
            ideal_type: pf.len(),
            pf,
            genus,
            apery,
        })
    }

    /// Reinterprets an ideal containing `0` and closed under addition as a
    /// numerical semigroup.
    pub fn as_semigroup(&self) -> Result<NumericalSemigroup> {
        if !self.contains(0) || self.min_element() < 0 {
            return Err(Error::NotASemigroup("0 must be the least element".into()));
        }
        let f = self.frobenius();
        let window = (0..=f).map(|x| self.contains(x)).collect();
        NumericalSemigroup::from_window_checked(f, window)
    }

    /// The same set viewed as an ideal of another semigroup.
    pub fn rebase(&self, ambient: &NumericalSemigroup) -> Result<Self> {
        RelativeIdeal::from_set(ambient, self.set.clone())
    }
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.set.fmt(f)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal({} of {})", self.set, self.ambient)
    }
}

/// `K(S)`, the standard canonical ideal.
pub fn canonical_ideal(s: &NumericalSemigroup) -> Result<RelativeIdeal> {
    s.require_proper()?;
    Ok(RelativeIdeal::canonical_unchecked(s))
}

/// `[K, 2K, …, nK]` where `nK = (n+1)K`; the last entry is `⟨K⟩`.
pub(crate) fn canonical_powers(s: &NumericalSemigroup) -> Vec<RelativeIdeal> {
    let k = RelativeIdeal::canonical_unchecked(s);
    let mut powers = vec![k.clone()];
    loop {
        let next = powers.last().unwrap().sum(&k).expect("same ambient");
        if &next == powers.last().unwrap() {
            return powers;
        }
        powers.push(next);
    }
}

pub(crate) fn gaps_of_powers(powers: &[RelativeIdeal]) -> Vec<PowerGap> {
    powers
        .windows(2)
        .enumerate()
        .map(|(i, w)| PowerGap {
            n: i + 2,
            elements: w[1].minus(&w[0]),
        })
        .collect()
}

/// The successive differences `nK ∖ (n-1)K` for `n = 2, 3, …` until the
/// chain stabilizes. Empty exactly when `S` is symmetric.
pub fn power_gaps(s: &NumericalSemigroup) -> Result<Vec<PowerGap>> {
    s.require_proper()?;
    Ok(gaps_of_powers(&canonical_powers(s)))
}

/// The numerical semigroup `⟨K⟩` generated by the canonical ideal.
pub fn semigroup_generated_by_k(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    s.require_proper()?;
    canonical_powers(s).last().unwrap().as_semigroup()
}

/// `M - M` as a semigroup together with `M - e` as an ideal of it.
pub fn mme_pair(s: &NumericalSemigroup) -> Result<(NumericalSemigroup, RelativeIdeal)> {
    let m = RelativeIdeal::maximal(s);
    let mm = m.difference(&m)?.as_semigroup()?;
    let m_minus_e = m.translate(-s.multiplicity()).rebase(&mm)?;
    Ok((mm, m_minus_e))
}
