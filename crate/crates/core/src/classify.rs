//! Classification predicates. Each predicate evaluates every available
//! characterization and fails with [`Error::InternalInconsistency`] if they
//! disagree.

use serde::Serialize;

use crate::enumerate::almost_canonical_ideals;
use crate::error::{Error, Result};
use crate::ideal::{canonical_powers, gaps_of_powers, mme_pair, PowerGap, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// Ideals of `S` shared by most predicates, computed once.
pub(crate) struct Analysis {
    pub s: NumericalSemigroup,
    pub f: i64,
    pub pf: Vec<i64>,
    pub whole: RelativeIdeal,
    pub m: RelativeIdeal,
    pub k: RelativeIdeal,
    pub m_minus_m: RelativeIdeal,
    pub s_minus_k: RelativeIdeal,
    /// `[K, 2K, …]` up to the first repetition; the last entry is `⟨K⟩`.
    pub powers: Vec<RelativeIdeal>,
}

impl Analysis {
    pub fn new(s: &NumericalSemigroup) -> Result<Self> {
        s.require_proper()?;
        let whole = RelativeIdeal::whole(s);
        let m = RelativeIdeal::maximal(s);
        let powers = canonical_powers(s);
        let k = powers[0].clone();
        let m_minus_m = m.difference(&m)?;
        let s_minus_k = whole.difference(&k)?;
        Ok(Analysis {
            s: s.clone(),
            f: s.frobenius(),
            pf: s.pf_raw().to_vec(),
            whole,
            m,
            k,
            m_minus_m,
            s_minus_k,
            powers,
        })
    }

    pub fn two_k(&self) -> &RelativeIdeal {
        self.powers.get(1).unwrap_or(&self.powers[0])
    }

    pub fn generated_k(&self) -> &RelativeIdeal {
        self.powers.last().unwrap()
    }

    /// `2K ∖ K`.
    pub fn two_k_gap(&self) -> Vec<i64> {
        self.two_k().minus(&self.k)
    }

    pub fn second_type_gaps(&self) -> Vec<i64> {
        self.k.minus(&self.whole)
    }

    /// The `x` with `F - x ∈ 2K ∖ K`, `x ≠ 0`, ascending.
    pub fn two_k_xs(&self) -> Vec<i64> {
        let mut xs: Vec<i64> = self
            .two_k_gap()
            .into_iter()
            .filter(|&y| y != self.f)
            .map(|y| self.f - y)
            .collect();
        xs.sort_unstable();
        xs
    }

    pub fn symmetric(&self) -> Result<bool> {
        let by_k = self.whole == self.k;
        let by_type = self.pf.len() == 1;
        let by_genus = 2 * self.s.genus() as i64 == self.f + 1;
        agree(
            "symmetric",
            &[
                ("S = K", by_k),
                ("t(S) = 1", by_type),
                ("2g = F + 1", by_genus),
            ],
        )
    }

    pub fn almost_symmetric(&self) -> Result<bool> {
        let s_minus_m = self.whole.difference(&self.m)?;
        let by_def = s_minus_m.as_set() == &self.k.as_set().with_points(&[self.f]);
        let by_genus = 2 * self.s.genus() as i64 == self.f + self.pf.len() as i64;
        let by_l = self.second_type_gaps().iter().all(|x| self.pf.contains(x));
        agree(
            "almost symmetric",
            &[
                ("S - M = K ∪ {F}", by_def),
                ("2g = F + t", by_genus),
                ("L(S) ⊆ PF(S)", by_l),
            ],
        )
    }

    pub fn pseudo_symmetric(&self) -> Result<bool> {
        let even = self.f % 2 == 0;
        let by_l = even && self.second_type_gaps() == vec![self.f / 2];
        let by_type = even && self.pf.len() == 2 && self.almost_symmetric()?;
        agree(
            "pseudo-symmetric",
            &[
                ("L(S) = {F/2}", by_l),
                ("almost symmetric, t = 2, F even", by_type),
            ],
        )
    }

    pub fn agl_level(&self) -> Result<usize> {
        let level = self.generated_k().minus(&self.k).len();
        let symmetric = self.symmetric()?;
        let almost = self.almost_symmetric()?;
        if (level == 0) != symmetric || (level <= 1) != almost {
            return Err(Error::inconsistent(format!(
                "AGL level {level} vs symmetric={symmetric}, almost={almost}"
            )));
        }
        let two_agl = self.powers.len() <= 2 && self.two_k_gap().len() == 2;
        if (level == 2) != two_agl {
            return Err(Error::inconsistent(format!(
                "AGL level {level} vs 2K = 3K and |2K ∖ K| = 2: {two_agl}"
            )));
        }
        Ok(level)
    }

    /// GAS from the definition, with the first failing witness.
    fn gas_by_definition(&self) -> Result<GasWitness> {
        let gap = self.two_k_gap();
        let xs = self.two_k_xs();
        if !gap.is_empty() && !gap.contains(&self.f) {
            return Err(Error::inconsistent("2K ∖ K is nonempty but misses F(S)"));
        }
        if let Some(&x) = xs.iter().find(|&&x| !self.s.is_minimal_generator(x)) {
            return Ok(GasWitness {
                generators_x: xs,
                failure_reason: Some(GasFailure::NotMinimalGenerator(x)),
            });
        }
        for &xi in xs.iter().rev() {
            for &xj in &xs {
                if xj < xi && self.pf.contains(&(xi - xj)) {
                    return Ok(GasWitness {
                        generators_x: xs,
                        failure_reason: Some(GasFailure::PairDifferenceInPF(xi, xj)),
                    });
                }
            }
        }
        Ok(GasWitness {
            generators_x: xs,
            failure_reason: None,
        })
    }

    /// `x - y ∉ M - M` for all distinct `x, y ∈ M ∖ (S - K)`.
    fn gas_by_differences(&self) -> bool {
        let outside = self.m.minus(&self.s_minus_k);
        outside.iter().all(|&x| {
            outside
                .iter()
                .all(|&y| x == y || !self.m_minus_m.contains(x - y))
        })
    }

    /// Symmetric, or `2M ⊆ S - K ⊆ M` and `M - M = ((S - K) - M) ∪ {0}`.
    fn gas_by_s_minus_k(&self) -> Result<bool> {
        if self.symmetric()? {
            return Ok(true);
        }
        let two_m = self.m.sum(&self.m)?;
        let chain = two_m.is_subset(&self.s_minus_k) && self.s_minus_k.is_subset(&self.m);
        let rhs = self
            .s_minus_k
            .difference(&self.m)?
            .as_set()
            .with_points(&[0]);
        Ok(chain && self.m_minus_m.as_set() == &rhs)
    }

    pub fn gas(&self) -> Result<(bool, GasWitness)> {
        let witness = self.gas_by_definition()?;
        let by_def = witness.failure_reason.is_none();
        let by_diff = self.gas_by_differences();
        let by_sk = self.gas_by_s_minus_k()?;
        let by_theorem = mme_almost_canonical(&self.s)?;
        agree(
            "GAS",
            &[
                ("definition", by_def),
                ("differences avoid M - M", by_diff),
                ("S - K characterization", by_sk),
                ("M - e almost canonical in M - M", by_theorem),
            ],
        )?;
        Ok((by_def, witness))
    }

    pub fn nearly_gorenstein(&self) -> Result<bool> {
        let trace = self.k.sum(&self.s_minus_k)?;
        let by_trace = self.m.is_subset(&trace);
        let by_generators = self.s.generators().iter().all(|&y| {
            self.pf.iter().any(|&g| {
                self.pf
                    .iter()
                    .all(|&h| h == g || self.s.contains(g + y - h))
            })
        });
        let mut routes = vec![
            ("M ⊆ K + (S - K)", by_trace),
            ("minimal generator criterion", by_generators),
        ];
        if self.pf.len() == 2 && !self.almost_symmetric()? && self.gas()?.0 {
            let f = self.pf[0];
            routes.push(("3f - 2F ∈ S", self.s.contains(3 * f - 2 * self.f)));
        }
        agree("nearly Gorenstein", &routes)
    }

    pub fn canonical_reduction(&self) -> Result<bool> {
        let e = self.s.multiplicity();
        let by_gaps = self
            .s
            .gaps()
            .iter()
            .all(|&g| self.s.contains(e + self.f - g));
        let by_ideal = self.k.translate(e).is_subset(&self.m);
        agree(
            "canonical reduction",
            &[("e + F - g ∈ S", by_gaps), ("e + K ⊆ M", by_ideal)],
        )
    }

    pub fn ggl(&self) -> Result<(bool, Option<i64>)> {
        if self.symmetric()? {
            return Ok((true, None));
        }
        let c = self.whole.difference(self.generated_k())?;
        let candidates = c
            .difference(&self.m)?
            .as_set()
            .intersection(self.whole.as_set())
            .minus(c.as_set());
        let [x] = candidates[..] else {
            return Ok((false, None));
        };
        let t = self.pf.len();
        let pairing =
            (1..=t.div_ceil(2)).all(|i| self.pf[i - 1] + self.pf[t - i - 1] == self.f + x);
        if pairing && self.s.contains(x) {
            Ok((true, Some(x)))
        } else {
            Ok((false, None))
        }
    }
}

fn agree(what: &str, routes: &[(&str, bool)]) -> Result<bool> {
    let first = routes[0].1;
    if routes.iter().all(|&(_, v)| v == first) {
        Ok(first)
    } else {
        let detail: Vec<String> = routes
            .iter()
            .map(|(name, v)| format!("{name}: {v}"))
            .collect();
        Err(Error::inconsistent(format!(
            "{what} characterizations disagree ({})",
            detail.join(", ")
        )))
    }
}

/// Why a semigroup fails the GAS definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GasFailure {
    /// `F - x ∈ 2K ∖ K` with `x` not a minimal generator.
    NotMinimalGenerator(i64),
    /// `F - x_i, F - x_j ∈ 2K ∖ K` with `x_i - x_j ∈ PF(S)`.
    #[serde(rename = "PairDifferenceInPF")]
    PairDifferenceInPF(i64, i64),
}

/// The `x_i` with `F(S) - x_i ∈ 2K ∖ K`, `x_i ≠ 0`, and the first failure of
/// the GAS definition if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GasWitness {
    pub generators_x: Vec<i64>,
    pub failure_reason: Option<GasFailure>,
}

/// Every outcome of the classification for one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub multiplicity: i64,
    pub genus: usize,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub pf: Vec<i64>,
    pub apery: Vec<i64>,
    pub two_k_gap: Vec<i64>,
    pub agl_level: usize,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub almost_symmetric: bool,
    pub gas: bool,
    pub gas_witness: GasWitness,
    pub nearly_gorenstein: bool,
    pub ggl: bool,
    pub ggl_x: Option<i64>,
    pub canonical_reduction: bool,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Runs every predicate on `S`.
pub fn classify(s: &NumericalSemigroup) -> Result<ClassificationReport> {
    let a = Analysis::new(s)?;
    let (gas, gas_witness) = a.gas()?;
    let (ggl, ggl_x) = a.ggl()?;
    Ok(ClassificationReport {
        generators: s.generators().to_vec(),
        frobenius: a.f,
        multiplicity: s.multiplicity(),
        genus: s.genus(),
        semigroup_type: a.pf.len(),
        pf: a.pf.clone(),
        apery: {
            let mut ap = s.apery_set().to_vec();
            ap.sort_unstable();
            ap
        },
        two_k_gap: a.two_k_gap(),
        agl_level: a.agl_level()?,
        symmetric: a.symmetric()?,
        pseudo_symmetric: a.pseudo_symmetric()?,
        almost_symmetric: a.almost_symmetric()?,
        gas,
        gas_witness,
        nearly_gorenstein: a.nearly_gorenstein()?,
        ggl,
        ggl_x,
        canonical_reduction: a.canonical_reduction()?,
    })
}

pub fn is_symmetric(s: &NumericalSemigroup) -> Result<bool> {
    Analysis::new(s)?.symmetric()
}

pub fn is_almost_symmetric(s: &NumericalSemigroup) -> Result<bool> {
    Analysis::new(s)?.almost_symmetric()
}

pub fn is_pseudo_symmetric(s: &NumericalSemigroup) -> Result<bool> {
    Analysis::new(s)?.pseudo_symmetric()
}

/// `|⟨K⟩ ∖ K|`.
pub fn agl_level(s: &NumericalSemigroup) -> Result<usize> {
    Analysis::new(s)?.agl_level()
}

pub fn is_gas(s: &NumericalSemigroup) -> Result<(bool, GasWitness)> {
    Analysis::new(s)?.gas()
}

pub fn is_nearly_gorenstein(s: &NumericalSemigroup) -> Result<bool> {
    Analysis::new(s)?.nearly_gorenstein()
}

pub fn has_canonical_reduction(s: &NumericalSemigroup) -> Result<bool> {
    Analysis::new(s)?.canonical_reduction()
}

/// GGL test; returns the element `x` for non-symmetric GGL semigroups.
pub fn is_ggl(s: &NumericalSemigroup) -> Result<(bool, Option<i64>)> {
    Analysis::new(s)?.ggl()
}

/// An element of `⟨K⟩ ∖ K` written as `F(S) - x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GasElement {
    pub element: i64,
    pub x: i64,
}

/// `⟨K⟩ ∖ K` for a GAS semigroup, each element as `F(S) - x` with `x = 0` or a
/// minimal generator. Empty for symmetric semigroups.
pub fn gas_structure(s: &NumericalSemigroup) -> Result<Vec<GasElement>> {
    let a = Analysis::new(s)?;
    if !a.gas()?.0 {
        return Err(Error::NotGas);
    }
    let elements: Vec<GasElement> = a
        .generated_k()
        .minus(&a.k)
        .into_iter()
        .map(|y| GasElement {
            element: y,
            x: a.f - y,
        })
        .collect();
    for el in &elements {
        if el.x != 0 && !s.is_minimal_generator(el.x) {
            return Err(Error::inconsistent(format!(
                "{} = F - {} with {} not a minimal generator",
                el.element, el.x, el.x
            )));
        }
    }
    for p in &elements {
        for q in &elements {
            if p.x != 0 && q.x != 0 && a.pf.contains(&(p.x - q.x)) {
                return Err(Error::inconsistent(format!(
                    "{} - {} ∈ PF(S) inside ⟨K⟩ ∖ K",
                    p.x, q.x
                )));
            }
        }
    }
    Ok(elements)
}

/// `(x, pairs)` as returned by [`pf_pairings`].
pub type PfPairing = (i64, Vec<(i64, i64)>);

/// For every `x` with `F - x ∈ 2K ∖ K`, `x ≠ 0`: the unordered pairs
/// `f_j ≤ f_k` in `PF(S)` with `f_j + f_k = F(S) + x`.
pub fn pf_pairings(s: &NumericalSemigroup) -> Result<Vec<PfPairing>> {
    let a = Analysis::new(s)?;
    Ok(a.two_k_xs()
        .into_iter()
        .map(|x| {
            let pairs =
                a.pf.iter()
                    .flat_map(|&fj| a.pf.iter().map(move |&fk| (fj, fk)))
                    .filter(|&(fj, fk)| fj <= fk && fj + fk == a.f + x)
                    .collect();
            (x, pairs)
        })
        .collect())
}

/// The two necessary conditions on `PF(S)` satisfied by semigroups whose
/// `2K ∖ K` is `{F - x_1, …, F - x_r, F}`:
/// every `F + x_i` is a sum of two pseudo-Frobenius numbers, and every
/// `f ∈ PF(S) ∖ {F}` has `F - f ∈ PF(S)` or `F - f + x_i ∈ PF(S)` for some `i`.
pub fn pf_pairing_check(s: &NumericalSemigroup) -> Result<bool> {
    let a = Analysis::new(s)?;
    let xs = a.two_k_xs();
    let sums = pf_pairings(s)?.iter().all(|(_, pairs)| !pairs.is_empty());
    let complements =
        a.pf.iter().filter(|&&f| f != a.f).all(|&f| {
            a.pf.contains(&(a.f - f)) || xs.iter().any(|&x| a.pf.contains(&(a.f - f + x)))
        });
    Ok(sums && complements)
}

/// The five conditions equivalent to `I` being almost canonical, in order:
/// `Ĩ - M = K ∪ {F}`, `g(I) + g(S) = F + t(I)`, `Ĩ - M = K - M`,
/// `K - (M - M) ⊆ Ĩ`, and the PF complement condition. Works for any ambient,
/// including `ℕ`.
pub fn almost_canonical_conditions(i: &RelativeIdeal) -> Result<[bool; 5]> {
    let s = i.ambient();
    let f = s.frobenius();
    let k = RelativeIdeal::canonical_unchecked(s);
    let m = RelativeIdeal::maximal(s);
    let tilde = i.normalize_tilde();
    let tilde_minus_m = tilde.difference(&m)?;
    let inv = i.invariants()?;

    let c1 = tilde_minus_m.as_set() == &k.as_set().with_points(&[f]);
    let c2 = inv.genus as i64 + s.genus() as i64 == f + inv.ideal_type as i64;
    let c3 = tilde_minus_m == k.difference(&m)?;
    let c4 = k.difference(&m.difference(&m)?)?.is_subset(&tilde);
    let fi = i.frobenius();
    let c5 = inv
        .pf
        .iter()
        .filter(|&&x| x != fi)
        .all(|&x| s.pf_raw().contains(&(fi - x)));
    Ok([c1, c2, c3, c4, c5])
}

pub(crate) fn almost_canonical_unchecked(i: &RelativeIdeal) -> Result<bool> {
    let c = almost_canonical_conditions(i)?;
    agree(
        "almost canonical",
        &[
            ("Ĩ - M = K ∪ {F}", c[0]),
            ("g(I) + g(S) = F + t(I)", c[1]),
            ("Ĩ - M = K - M", c[2]),
            ("K - (M - M) ⊆ Ĩ", c[3]),
            ("PF complement condition", c[4]),
        ],
    )
}

/// Whether `I` is an almost canonical ideal of its ambient semigroup.
pub fn is_almost_canonical(i: &RelativeIdeal) -> Result<bool> {
    i.ambient().require_proper()?;
    almost_canonical_unchecked(i)
}

/// Whether `M - e` is an almost canonical ideal of the semigroup `M - M`.
pub fn mme_almost_canonical(s: &NumericalSemigroup) -> Result<bool> {
    let (_, me) = mme_pair(s)?;
    almost_canonical_unchecked(&me)
}

/// Whether `M - e` is a canonical ideal of `M - M`, i.e. `K(M - M) = M - e`.
pub fn mme_canonical(s: &NumericalSemigroup) -> Result<bool> {
    let (mm, me) = mme_pair(s)?;
    Ok(RelativeIdeal::canonical_unchecked(&mm) == me)
}

/// Every almost canonical ideal with Frobenius number `F(S)` has type in
/// `1..=t(S) + 1`.
pub fn ideal_type_bound_check(s: &NumericalSemigroup) -> Result<bool> {
    let family = almost_canonical_ideals(s)?;
    let t = s.semigroup_type();
    Ok(family
        .members
        .iter()
        .all(|m| (1..=t + 1).contains(&m.ideal_type)))
}

/// Outcome of the type-2 GAS test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Type2Profile {
    pub gas: bool,
    /// Least `n` with `n(F(S) - f) ∈ S`, when GAS.
    pub n: Option<usize>,
    /// `|iK ∖ (i-1)K|` for `i = 2, …, n-1`, when GAS.
    pub power_gap_sizes: Option<Vec<usize>>,
}

/// For `PF(S) = {f, F(S)}` and `S` not almost symmetric: GAS iff
/// `F(S) = 2f - x` for a minimal generator `x`; in that case the powers of
/// `K` grow by 2, then by 1 up to `(n-1)K = nK`.
pub fn gas_type2_profile(s: &NumericalSemigroup) -> Result<Type2Profile> {
    let a = Analysis::new(s)?;
    if a.pf.len() != 2 || a.almost_symmetric()? {
        return Err(Error::PreconditionFailed(
            "type 2 and not almost symmetric required".into(),
        ));
    }
    let f = a.pf[0];
    let gas = s.is_minimal_generator(2 * f - a.f);
    if gas != a.gas()?.0 {
        return Err(Error::inconsistent(
            "type-2 GAS criterion disagrees with the definition",
        ));
    }
    if !gas {
        return Ok(Type2Profile {
            gas,
            n: None,
            power_gap_sizes: None,
        });
    }
    let step = a.f - f;
    let n = (1..).find(|&n| s.contains(n * step)).unwrap() as usize;
    let sizes: Vec<usize> = gaps_of_powers(&a.powers)
        .iter()
        .map(|p: &PowerGap| p.elements.len())
        .collect();
    let expected: Vec<usize> = (2..n).map(|i| if i == 2 { 2 } else { 1 }).collect();
    if sizes != expected {
        return Err(Error::inconsistent(format!(
            "type-2 power gaps {sizes:?}, expected {expected:?}"
        )));
    }
    Ok(Type2Profile {
        gas,
        n: Some(n),
        power_gap_sizes: Some(sizes),
    })
}

/// `t(M - e)` as an ideal of `M - M`, checked against `2g(S) + 1 - t(S) - F(S)`.
pub fn mme_type_formula(s: &NumericalSemigroup) -> Result<usize> {
    if !is_gas(s)?.0 {
        return Err(Error::NotGas);
    }
    let (_, me) = mme_pair(s)?;
    let direct = me.invariants()?.ideal_type as i64;
    let formula = 2 * s.genus() as i64 + 1 - s.semigroup_type() as i64 - s.frobenius();
    if direct != formula {
        return Err(Error::inconsistent(format!(
            "t(M - e) = {direct}, formula gives {formula}"
        )));
    }
    Ok(direct as usize)
}
