//! Enumeration: the almost canonical ideals of a semigroup, the genus tree of
//! all numerical semigroups, and a brute-force oracle for ideal operations.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classify::almost_canonical_unchecked;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::intset::CofiniteSet;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone)]
pub struct FamilyMember {
    /// The elements of `K ∖ base` added to the base.
    pub subset: Vec<i64>,
    pub ideal: RelativeIdeal,
    pub ideal_type: usize,
}

/// All almost canonical ideals of `S` with Frobenius number `F(S)`: the
/// ideals between `K - (M - M)` and `K`.
#[derive(Debug, Clone)]
pub struct IdealFamily {
    pub ambient: NumericalSemigroup,
    pub base: RelativeIdeal,
    pub top: RelativeIdeal,
    pub free_elements: Vec<i64>,
    pub members: Vec<FamilyMember>,
}

impl IdealFamily {
    /// `histogram[i - 1]` counts members of type `i`, for `i = 1..=t+1`.
    pub fn type_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.free_elements.len() + 1];
        for m in &self.members {
            h[m.ideal_type - 1] += 1;
        }
        h
    }

    pub fn contains_ideal(&self, ideal: &RelativeIdeal) -> bool {
        self.members.iter().any(|m| &m.ideal == ideal)
    }
}

/// Enumerates the `2^t` almost canonical ideals with Frobenius number `F(S)`,
/// in order of the bitmask over `free_elements`.
pub fn almost_canonical_ideals(s: &NumericalSemigroup) -> Result<IdealFamily> {
    s.require_proper()?;
    let k = RelativeIdeal::canonical_unchecked(s);
    let m = RelativeIdeal::maximal(s);
    let base = k.difference(&m.difference(&m)?)?;
    if !base.is_subset(&k) {
        return Err(Error::inconsistent("K - (M - M) is not contained in K"));
    }
    let free = k.minus(&base);
    let t = s.semigroup_type();
    if free.len() != t {
        return Err(Error::inconsistent(format!(
            "|K ∖ (K - (M - M))| = {}, t(S) = {t}",
            free.len()
        )));
    }
    let mut members = Vec::with_capacity(1 << t);
    for mask in 0u64..(1 << t) {
        let subset: Vec<i64> = free
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let set = base.as_set().with_points(&subset);
        let ideal = RelativeIdeal::from_set(s, set).map_err(|_| {
            Error::inconsistent(format!("K - (M - M) ∪ {subset:?} is not an ideal"))
        })?;
        let ideal_type = t + 1 - subset.len();
        let inv = ideal.invariants()?;
        if inv.ideal_type != ideal_type {
            return Err(Error::inconsistent(format!(
                "ideal {ideal} has type {}, expected {ideal_type}",
                inv.ideal_type
            )));
        }
        if !almost_canonical_unchecked(&ideal)? {
            return Err(Error::inconsistent(format!(
                "family member {ideal} is not almost canonical"
            )));
        }
        members.push(FamilyMember {
            subset,
            ideal,
            ideal_type,
        });
    }
    Ok(IdealFamily {
        ambient: s.clone(),
        base,
        top: k,
        free_elements: free,
        members,
    })
}

/// Every ideal `I` with `F(I) = F(S)` that is almost canonical, found by
/// scanning all subsets of `K ∩ [0, F(S))`. Exponential in the genus.
pub fn scan_almost_canonical(s: &NumericalSemigroup) -> Result<Vec<RelativeIdeal>> {
    s.require_proper()?;
    let f = s.frobenius();
    let k = RelativeIdeal::canonical_unchecked(s);
    let m = RelativeIdeal::maximal(s);
    let target = k.as_set().with_points(&[f]);
    let candidates: Vec<i64> = (0..f).filter(|&x| k.contains(x)).collect();
    if candidates.len() > 20 {
        return Err(Error::PreconditionFailed(
            "genus too large for an exhaustive scan".into(),
        ));
    }
    let mut found = Vec::new();
    for mask in 0u32..(1 << candidates.len()) {
        let chosen: Vec<i64> = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let set = CofiniteSet::from_predicate(0, f, |x| x != f && chosen.contains(&x));
        let Ok(ideal) = RelativeIdeal::from_set(s, set) else {
            continue;
        };
        if ideal.difference(&m)?.as_set() == &target {
            found.push(ideal);
        }
    }
    Ok(found)
}

/// Numerical semigroups of genus at most `max_genus`, in depth-first order
/// of the genus tree (children by removed generator, ascending).
#[derive(Debug, Clone)]
pub struct Corpus {
    pub max_genus: usize,
    pub semigroups: Vec<NumericalSemigroup>,
}

impl Corpus {
    pub fn per_genus_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_genus + 1];
        for s in &self.semigroups {
            counts[s.genus()] += 1;
        }
        counts
    }

    pub fn iter(&self) -> impl Iterator<Item = &NumericalSemigroup> {
        self.semigroups.iter()
    }

    pub fn len(&self) -> usize {
        self.semigroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.semigroups.is_empty()
    }
}

/// Walks the genus tree from `ℕ`, removing minimal generators larger than the
/// Frobenius number.
pub fn genus_tree(max_genus: usize) -> Corpus {
    fn visit(s: NumericalSemigroup, max_genus: usize, out: &mut Vec<NumericalSemigroup>) {
        let children: Vec<i64> = if s.genus() < max_genus {
            s.generators()
                .iter()
                .copied()
                .filter(|&x| x > s.frobenius())
                .collect()
        } else {
            Vec::new()
        };
        let parent = s.clone();
        out.push(s);
        for x in children {
            let child = parent.remove_generator(x).expect("generator above F(S)");
            visit(child, max_genus, out);
        }
    }
    let mut semigroups = Vec::new();
    visit(NumericalSemigroup::natural(), max_genus, &mut semigroups);
    Corpus {
        max_genus,
        semigroups,
    }
}

/// Ideal operation evaluated by definition over an explicit integer range.
#[derive(Debug, Clone, Copy)]
pub enum OracleOp<'a> {
    Sum(&'a RelativeIdeal, &'a RelativeIdeal),
    Difference(&'a RelativeIdeal, &'a RelativeIdeal),
    /// `K - I`, with `K` built from the definition.
    Dual(&'a RelativeIdeal),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSet {
    pub bound: i64,
    /// Members in `[-bound, bound]`; everything above `bound` is a member.
    pub members: BTreeSet<i64>,
}

impl OracleSet {
    pub fn contains(&self, x: i64) -> bool {
        x > self.bound || self.members.contains(&x)
    }

    /// Whether `ideal` has exactly these members on `[-bound, bound]`.
    pub fn matches(&self, ideal: &RelativeIdeal) -> bool {
        (-self.bound..=self.bound).all(|x| ideal.contains(x) == self.members.contains(&x))
            && ideal.frobenius() <= self.bound
            && ideal.min_element() >= -self.bound
    }
}

fn extent(i: &RelativeIdeal) -> i64 {
    i.min_element().abs() + i.frobenius().abs()
}

/// Smallest bound for which [`oracle_ideal_op`] is exact.
pub fn required_oracle_bound(op: OracleOp<'_>) -> i64 {
    match op {
        OracleOp::Sum(i, j) | OracleOp::Difference(i, j) => extent(i) + extent(j) + 2,
        OracleOp::Dual(i) => extent(i) + 2 * i.ambient().frobenius().abs() + 2,
    }
}

/// Default bound `3F(S) + 3`.
pub fn default_oracle_bound(s: &NumericalSemigroup) -> i64 {
    3 * s.frobenius() + 3
}

/// Brute-force evaluation of an ideal operation. Only membership queries on
/// the operands are used.
pub fn oracle_ideal_op(op: OracleOp<'_>, bound: i64) -> Result<OracleSet> {
    let needed = required_oracle_bound(op);
    if bound < needed {
        return Err(Error::BoundTooSmall { needed, got: bound });
    }
    let b = bound;
    let difference = |i: &dyn Fn(i64) -> bool, j: &dyn Fn(i64) -> bool| -> BTreeSet<i64> {
        (-b..=b)
            .filter(|&x| (-b..=2 * b).all(|y| !j(y) || i(x + y)))
            .collect()
    };
    let members = match op {
        OracleOp::Sum(i, j) => (-b..=b)
            .filter(|&x| (-b..=2 * b).any(|y| i.contains(y) && j.contains(x - y)))
            .collect(),
        OracleOp::Difference(i, j) => difference(&|x| i.contains(x), &|x| j.contains(x)),
        OracleOp::Dual(i) => {
            let s = i.ambient();
            let f = s.frobenius();
            difference(&|x| x >= 0 && !s.contains(f - x), &|x| i.contains(x))
        }
    };
    Ok(OracleSet { bound, members })
}
