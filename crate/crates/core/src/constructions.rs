//! Gluing, numerical duplication and dilatation. Each construction re-derives
//! the result's invariants independently and checks the known formulas for
//! them; a mismatch is reported as [`Error::InternalInconsistency`].

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classify::{almost_canonical_unchecked, is_almost_symmetric};
use crate::error::{Error, Result};
use crate::ideal::{canonical_powers, RelativeIdeal};
use crate::intset::CofiniteSet;
use crate::semigroup::{gcd, NumericalSemigroup};

/// `⟨a·S₁, b·S₂⟩`.
#[derive(Debug, Clone)]
pub struct GluingSpec {
    pub s1: NumericalSemigroup,
    pub s2: NumericalSemigroup,
    /// A member of `s2` that is not a minimal generator.
    pub a: i64,
    /// A member of `s1` that is not a minimal generator.
    pub b: i64,
}

/// `S ⋈ᵇ I = 2·S ∪ (2·I + b)`.
#[derive(Debug, Clone)]
pub struct DuplicationSpec {
    pub s: NumericalSemigroup,
    /// An integral ideal of `s`.
    pub ideal: RelativeIdeal,
    /// An odd member of `s`.
    pub b: i64,
}

/// `S + a = {0} ∪ (M + a)`.
#[derive(Debug, Clone)]
pub struct DilatationSpec {
    pub s: NumericalSemigroup,
    /// A positive element of `M - 2M`.
    pub a: i64,
}

/// The ideals of `S` the CLI and the property suites duplicate with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealChoice {
    /// `S - ⟨K⟩`.
    SMinusGenK,
    M,
    S,
    K,
}

impl IdealChoice {
    pub fn resolve(self, s: &NumericalSemigroup) -> Result<RelativeIdeal> {
        Ok(match self {
            IdealChoice::SMinusGenK => {
                let gen_k = canonical_powers(s).pop().unwrap();
                RelativeIdeal::whole(s).difference(&gen_k)?
            }
            IdealChoice::M => RelativeIdeal::maximal(s),
            IdealChoice::S => RelativeIdeal::whole(s),
            IdealChoice::K => RelativeIdeal::canonical_unchecked(s),
        })
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::inconsistent(what()))
    }
}

/// Rebuilds a semigroup from its own generators and checks the two agree.
fn recanonicalize(t: NumericalSemigroup) -> Result<NumericalSemigroup> {
    let again = NumericalSemigroup::from_generators(t.generators())?;
    check(
        again.frobenius() == t.frobenius()
            && again.members_up_to(t.frobenius()) == t.members_up_to(t.frobenius()),
        || format!("{t} does not survive re-canonicalization"),
    )?;
    Ok(again)
}

/// `K` as a membership test, valid for `ℕ` too.
fn in_k(s: &NumericalSemigroup, x: i64) -> bool {
    x >= 0 && !s.contains(s.frobenius() - x)
}

fn validate_gluing(spec: &GluingSpec) -> Result<()> {
    let GluingSpec { s1, s2, a, b } = spec;
    for (x, host) in [(*a, s2), (*b, s1)] {
        if x <= 0 || !host.contains(x) {
            return Err(Error::NotMember(x));
        }
        if host.is_minimal_generator(x) {
            return Err(Error::MinimalGenerator(x));
        }
    }
    if gcd(*a, *b) != 1 {
        return Err(Error::NotCoprime { a: *a, b: *b });
    }
    Ok(())
}

/// `⟨a·gens(S₁), b·gens(S₂)⟩`, with `PF`, `F`, `t` and `K` checked against
/// their closed forms.
pub fn gluing(spec: &GluingSpec) -> Result<NumericalSemigroup> {
    validate_gluing(spec)?;
    let GluingSpec { s1, s2, a, b } = spec;
    let (a, b) = (*a, *b);
    let mut gens: Vec<i64> = s1
        .generators()
        .iter()
        .map(|g| a * g)
        .chain(s2.generators().iter().map(|g| b * g))
        .collect();
    gens.sort_unstable();
    let t = NumericalSemigroup::from_generators(&gens)?;

    check(t.generators() == gens.as_slice(), || {
        format!("glued generators {gens:?} are not minimal")
    })?;
    let f_formula = a * s1.frobenius() + b * s2.frobenius() + a * b;
    check(t.frobenius() == f_formula, || {
        format!("F(T) = {} but aF1 + bF2 + ab = {f_formula}", t.frobenius())
    })?;
    let pf: BTreeSet<i64> = s1
        .pf_raw()
        .iter()
        .flat_map(|&f1| s2.pf_raw().iter().map(move |&f2| a * f1 + b * f2 + a * b))
        .collect();
    let pf: Vec<i64> = pf.into_iter().collect();
    check(t.pf_raw() == pf.as_slice(), || {
        format!("PF(T) = {:?} but the formula gives {pf:?}", t.pf_raw())
    })?;
    check(
        t.semigroup_type() == s1.semigroup_type() * s2.semigroup_type(),
        || "t(T) != t(S1) t(S2)".into(),
    )?;
    for x in 0..=t.frobenius() + a * b {
        let by_formula = (0..=x / a)
            .any(|k1| in_k(s1, k1) && (x - a * k1) % b == 0 && in_k(s2, (x - a * k1) / b));
        check(in_k(&t, x) == by_formula, || {
            format!("K(T) and aK1 + bK2 differ at {x}")
        })?;
    }
    Ok(t)
}

/// Membership table of `2·S ∪ (2·I + b)` on `[0, hi]`.
fn duplicate_window(
    s: &NumericalSemigroup,
    i: &RelativeIdeal,
    b: i64,
) -> Result<NumericalSemigroup> {
    if 2 * i.min_element() + b < 0 {
        return Err(Error::NotASemigroup("2·I + b reaches below 0".into()));
    }
    let hi = (2 * s.frobenius()).max(2 * i.frobenius() + b).max(0) + 1;
    let member = |x: i64| {
        if x % 2 == 0 {
            s.contains(x / 2)
        } else {
            i.contains((x - b) / 2)
        }
    };
    let f = (0..=hi).rev().find(|&x| !member(x)).unwrap_or(-1);
    let window = (0..=f).map(member).collect();
    NumericalSemigroup::from_window_checked(f, window)
}

fn validate_duplication(spec: &DuplicationSpec) -> Result<()> {
    let DuplicationSpec { s, ideal, b } = spec;
    if ideal.ambient() != s {
        return Err(Error::AmbientMismatch);
    }
    if b % 2 == 0 {
        return Err(Error::EvenB(*b));
    }
    if *b <= 0 || !s.contains(*b) {
        return Err(Error::BNotMember(*b));
    }
    if !ideal.is_subset(&RelativeIdeal::whole(s)) {
        return Err(Error::IdealNotIntegral);
    }
    Ok(())
}

/// `S ⋈ᵇ I`, with `F`, the odd and even parts of `PF` and the minimal
/// generators checked against their closed forms.
pub fn duplication(spec: &DuplicationSpec) -> Result<NumericalSemigroup> {
    validate_duplication(spec)?;
    let DuplicationSpec { s, ideal: i, b } = spec;
    let b = *b;
    let t = recanonicalize(duplicate_window(s, i, b)?)?;

    let mut gens: Vec<i64> = s
        .generators()
        .iter()
        .map(|g| 2 * g)
        .chain(i.minimal_generators().iter().map(|x| 2 * x + b))
        .collect();
    gens.sort_unstable();
    // With 0 ∈ I and b a minimal generator of S, 2b = b + b is redundant.
    let minimal = !(i.contains(0) && s.is_minimal_generator(b));
    let same = if minimal {
        t.generators() == gens.as_slice()
    } else {
        NumericalSemigroup::from_generators(&gens)? == t
    };
    check(same, || {
        format!("generators {:?}, expected {gens:?}", t.generators())
    })?;

    let f_formula = 2 * i.frobenius() + b;
    check(t.frobenius() == f_formula, || {
        format!("F(T) = {} but 2F(I) + b = {f_formula}", t.frobenius())
    })?;

    let inv = i.invariants()?;
    let odd: Vec<i64> = inv.pf.iter().map(|l| 2 * l + b).collect();
    let got_odd: Vec<i64> = t.pf_raw().iter().copied().filter(|x| x % 2 != 0).collect();
    check(got_odd == odd, || {
        format!("odd PF(T) = {got_odd:?}, expected {odd:?}")
    })?;

    let m = RelativeIdeal::maximal(s);
    let mm = m.difference(&m)?;
    let ii = i.difference(i)?;
    let even: Vec<i64> = mm
        .as_set()
        .intersection(ii.as_set())
        .minus(RelativeIdeal::whole(s).as_set())
        .iter()
        .map(|x| 2 * x)
        .collect();
    let got_even: Vec<i64> = t.pf_raw().iter().copied().filter(|x| x % 2 == 0).collect();
    check(got_even == even, || {
        format!("even PF(T) = {got_even:?}, expected {even:?}")
    })?;
    Ok(t)
}

/// Splits `T` as `S ⋈ᵇ I` with `S = {y : 2y ∈ T}` and `I = {x : 2x + b ∈ T}`,
/// checking that duplicating back gives `T`. When `F(T)` is odd and `T` is
/// almost symmetric, `I` is also checked to be almost canonical in `S`.
pub fn duplication_decompose(
    t: &NumericalSemigroup,
    b: i64,
) -> Result<(NumericalSemigroup, RelativeIdeal)> {
    if b % 2 == 0 {
        return Err(Error::EvenB(b));
    }
    if !t.contains(2 * b) {
        return Err(Error::TwoBNotMember(2 * b));
    }
    let ft = t.frobenius();
    let s = RelativeIdeal::from_set_unchecked(
        &NumericalSemigroup::natural(),
        CofiniteSet::from_predicate(0, ft.max(0) / 2 + 1, |y| t.contains(2 * y)),
    )
    .as_semigroup()?;
    let set = CofiniteSet::from_predicate((-b).div_euclid(2), (ft - b).div_euclid(2) + 1, |x| {
        t.contains(2 * x + b)
    });
    let i = RelativeIdeal::from_set(&s, set)?;

    let back = duplicate_window(&s, &i, b)?;
    check(&back == t, || {
        format!("{t} does not round-trip through b = {b}: got {back}")
    })?;

    if ft % 2 != 0 && !t.is_natural() && is_almost_symmetric(t)? {
        check(almost_canonical_unchecked(&i)?, || {
            format!("{t} is almost symmetric but I = {i} is not almost canonical")
        })?;
    }
    Ok((s, i))
}

fn validate_dilatation(spec: &DilatationSpec) -> Result<RelativeIdeal> {
    let DilatationSpec { s, a } = spec;
    s.require_proper()?;
    let m = RelativeIdeal::maximal(s);
    let m2m = m.difference(&m.sum(&m)?)?;
    if *a < 1 || !m2m.contains(*a) {
        return Err(Error::NotInM2M(*a));
    }
    Ok(m)
}

/// `S + a`, with `F(S + a) = F(S) + a` and `2K(S + a) = 2K(S)` checked.
pub fn dilatation(spec: &DilatationSpec) -> Result<NumericalSemigroup> {
    let m = validate_dilatation(spec)?;
    let DilatationSpec { s, a } = spec;
    let a = *a;
    let f = s.frobenius() + a;
    let window = (0..=f).map(|x| x == 0 || m.contains(x - a)).collect();
    let t = recanonicalize(NumericalSemigroup::from_window_checked(f, window)?)?;

    check(t.frobenius() == s.frobenius() + a, || {
        format!("F(S + a) = {} but F(S) + a = {f}", t.frobenius())
    })?;
    let two_k = |x: &NumericalSemigroup| {
        let k = RelativeIdeal::canonical_unchecked(x);
        k.sum(&k).map(|k2| k2.as_set().clone())
    };
    check(two_k(&t)? == two_k(s)?, || "2K(S + a) != 2K(S)".into())?;
    Ok(t)
}

/// The first `count` admissible `(a, b)` for gluing `S₁` and `S₂`, in
/// lexicographic order.
pub fn gluing_parameters(
    s1: &NumericalSemigroup,
    s2: &NumericalSemigroup,
    count: usize,
) -> Vec<(i64, i64)> {
    let non_generators = |s: &NumericalSemigroup| -> Vec<i64> {
        let limit = s.conductor() + 2 * s.multiplicity() + 2 * count as i64 + 4;
        (2..=limit)
            .filter(|&x| s.contains(x) && !s.is_minimal_generator(x))
            .collect()
    };
    let (avals, bvals) = (non_generators(s2), non_generators(s1));
    avals
        .iter()
        .flat_map(|&a| {
            bvals
                .iter()
                .filter(move |&&b| gcd(a, b) == 1)
                .map(move |&b| (a, b))
        })
        .take(count)
        .collect()
}

/// The `count` smallest odd members of `S`.
pub fn duplication_b_values(s: &NumericalSemigroup, count: usize) -> Vec<i64> {
    (1..)
        .step_by(2)
        .filter(|&x| s.contains(x))
        .take(count)
        .collect()
}

/// The `count` smallest positive elements of `M - 2M`.
pub fn dilatation_a_values(s: &NumericalSemigroup, count: usize) -> Result<Vec<i64>> {
    s.require_proper()?;
    let m = RelativeIdeal::maximal(s);
    let m2m = m.difference(&m.sum(&m)?)?;
    Ok((1..).filter(|&x| m2m.contains(x)).take(count).collect())
}
