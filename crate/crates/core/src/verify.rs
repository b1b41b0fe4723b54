//! Property suites over the genus-tree corpus. Every semigroup other than `ℕ`
//! gets one report line; any failed property becomes a [`Violation`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    almost_canonical_conditions, classify, gas_structure, gas_type2_profile,
    ideal_type_bound_check, is_almost_canonical, mme_almost_canonical, mme_canonical,
    mme_type_formula, pf_pairing_check, ClassificationReport,
};
use crate::constructions::{
    dilatation, dilatation_a_values, duplication, duplication_b_values, duplication_decompose,
    gluing, gluing_parameters, DilatationSpec, DuplicationSpec, GluingSpec, IdealChoice,
};
use crate::enumerate::{almost_canonical_ideals, genus_tree, scan_almost_canonical, IdealFamily};
use crate::error::{Error, Result};
use crate::ideal::{canonical_powers, mme_pair, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// Largest genus for the exhaustive almost-canonical scan.
pub const EXHAUSTIVE_GENUS: usize = 8;
/// Largest genus for the construction suite.
pub const CONSTRUCTION_GENUS: usize = 10;
/// Random ideals added to each standard family.
pub const RANDOM_IDEALS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Core,
    Ideals,
    Equivalences,
    GasMme,
    Counting,
    Constructions,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Core,
        Suite::Ideals,
        Suite::Equivalences,
        Suite::GasMme,
        Suite::Counting,
        Suite::Constructions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Ideals => "ideals",
            Suite::Equivalences => "equivalences",
            Suite::GasMme => "gas-mme",
            Suite::Counting => "counting",
            Suite::Constructions => "constructions",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_selection(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        name.parse().map(|s| vec![s])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub generators: Vec<i64>,
    pub suite: Suite,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub max_genus: usize,
    pub suites: Vec<Suite>,
    pub semigroups_checked: usize,
    /// Corpus size per genus, `ℕ` included.
    pub per_genus: Vec<usize>,
    pub counts: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub records: Vec<ClassificationReport>,
    pub summary: Summary,
}

impl VerifyReport {
    /// One JSON object per semigroup, then `{"summary": …}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_json());
            out.push('\n');
        }
        let summary = serde_json::json!({ "summary": &self.summary });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }

    pub fn is_clean(&self) -> bool {
        self.summary.violations.is_empty()
    }
}

/// Per-semigroup outcome before aggregation.
struct Outcome {
    report: Option<ClassificationReport>,
    tags: Vec<String>,
    violations: Vec<Violation>,
}

struct Ctx<'a> {
    s: &'a NumericalSemigroup,
    suite: Suite,
    violations: Vec<Violation>,
    tags: Vec<String>,
}

impl Ctx<'_> {
    fn fail(&mut self, detail: impl Into<String>) {
        self.violations.push(Violation {
            generators: self.s.generators().to_vec(),
            suite: self.suite,
            detail: detail.into(),
        });
    }

    /// Records a violation when `ok` is false; never fails itself.
    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
        if !ok {
            self.fail(detail());
        }
        Ok(())
    }

    fn run(&mut self, suite: Suite, body: impl FnOnce(&mut Self) -> Result<()>) {
        self.suite = suite;
        if let Err(e) = body(self) {
            self.fail(e.to_string());
        }
    }

    fn tag(&mut self, tag: impl Into<String>) {
        self.tags.push(tag.into());
    }
}

/// Runs the selected suites on every semigroup of genus `1..=max_genus`.
/// With `threads = Some(n)` the work runs on a dedicated pool of `n`
/// threads; the report does not depend on `n`.
pub fn verify_corpus(
    max_genus: usize,
    suites: &[Suite],
    threads: Option<usize>,
) -> Result<VerifyReport> {
    if max_genus < 1 {
        return Err(Error::PreconditionFailed(
            "max genus must be at least 1".into(),
        ));
    }
    let mut suites = suites.to_vec();
    suites.sort_unstable();
    suites.dedup();
    let corpus = genus_tree(max_genus);
    let targets: Vec<&NumericalSemigroup> = corpus.iter().filter(|s| !s.is_natural()).collect();
    let work = || {
        targets
            .par_iter()
            .map(|s| check_semigroup(s, &suites))
            .collect::<Vec<Outcome>>()
    };
    let outcomes = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::PreconditionFailed(e.to_string()))?
            .install(work),
        None => work(),
    };

    let mut counts = BTreeMap::new();
    let mut records = Vec::with_capacity(outcomes.len());
    let mut violations = Vec::new();
    for o in outcomes {
        for t in o.tags {
            *counts.entry(t).or_insert(0) += 1;
        }
        records.extend(o.report);
        violations.extend(o.violations);
    }
    let summary = Summary {
        max_genus,
        suites,
        semigroups_checked: targets.len(),
        per_genus: corpus.per_genus_counts(),
        counts,
        violations,
    };
    Ok(VerifyReport { records, summary })
}

fn check_semigroup(s: &NumericalSemigroup, suites: &[Suite]) -> Outcome {
    let mut ctx = Ctx {
        s,
        suite: Suite::Core,
        violations: Vec::new(),
        tags: Vec::new(),
    };
    let report = match classify(s) {
        Ok(r) => Some(r),
        Err(e) => {
            ctx.fail(format!("classification failed: {e}"));
            None
        }
    };
    if let Some(r) = &report {
        classification_tags(&mut ctx, r);
        let family = if suites
            .iter()
            .any(|s| matches!(s, Suite::Ideals | Suite::Equivalences | Suite::Counting))
        {
            match almost_canonical_ideals(s) {
                Ok(f) => Some(f),
                Err(e) => {
                    ctx.fail(format!("almost canonical enumeration failed: {e}"));
                    None
                }
            }
        } else {
            None
        };
        for &suite in suites {
            match suite {
                Suite::Core => ctx.run(suite, |c| core_suite(c, r)),
                Suite::Ideals => {
                    if let Some(f) = &family {
                        ctx.run(suite, |c| ideals_suite(c, f))
                    }
                }
                Suite::Equivalences => {
                    if let Some(f) = &family {
                        ctx.run(suite, |c| equivalences_suite(c, r, f))
                    }
                }
                Suite::GasMme => ctx.run(suite, |c| gas_mme_suite(c, r)),
                Suite::Counting => {
                    if let Some(f) = &family {
                        ctx.run(suite, |c| counting_suite(c, r, f))
                    }
                }
                Suite::Constructions => {
                    if s.genus() <= CONSTRUCTION_GENUS && !r.symmetric {
                        ctx.run(suite, |c| constructions_suite(c, r))
                    }
                }
            }
        }
    }
    Outcome {
        report,
        tags: ctx.tags,
        violations: ctx.violations,
    }
}

fn classification_tags(c: &mut Ctx<'_>, r: &ClassificationReport) {
    let flags = [
        ("symmetric", r.symmetric),
        ("pseudo_symmetric", r.pseudo_symmetric),
        ("almost_symmetric", r.almost_symmetric),
        ("gas", r.gas),
        ("nearly_gorenstein", r.nearly_gorenstein),
        ("ggl", r.ggl),
        ("canonical_reduction", r.canonical_reduction),
    ];
    for (name, on) in flags {
        if on {
            c.tag(name);
        }
    }
    c.tag(format!("agl_{}", r.agl_level));
    if r.agl_level == 3 {
        c.tag(if r.gas { "agl_3_gas" } else { "agl_3_not_gas" });
    }
}

fn core_suite(c: &mut Ctx<'_>, r: &ClassificationReport) -> Result<()> {
    let s = c.s;
    let (f, t, g) = (s.frobenius(), s.semigroup_type() as i64, s.genus() as i64);
    let whole = RelativeIdeal::whole(s);
    let m = RelativeIdeal::maximal(s);
    let pf = s.pseudo_frobenius()?;

    let by_difference = whole.difference(&m)?.minus(&whole);
    c.expect(by_difference == pf, || {
        format!("PF by Apéry {pf:?}, by (S - M) ∖ S {by_difference:?}")
    })?;
    let mm = m.difference(&m)?;
    c.expect(mm.as_set() == &whole.as_set().with_points(&pf), || {
        "M - M != S ∪ PF(S)".into()
    })?;
    c.expect(2 * g >= f + t, || "2g < F + t".into())?;
    c.expect((2 * g == f + t) == r.almost_symmetric, || {
        "2g = F + t disagrees with almost symmetry".into()
    })?;
    c.expect(g + s.small_members() as i64 == f + 1, || {
        "g + n != F + 1".into()
    })?;
    c.expect(r.symmetric == (t == 1), || {
        "symmetric disagrees with t = 1".into()
    })?;

    let again = NumericalSemigroup::from_generators(s.generators())?;
    c.expect(
        again == *s && again.members_up_to(f + 1) == s.members_up_to(f + 1),
        || "from_generators is not idempotent".into(),
    )?;
    let apery = s.apery(s.multiplicity())?;
    c.expect(
        apery.as_slice() == s.apery_set() && apery.len() as i64 == s.multiplicity(),
        || "Apéry set mismatch".into(),
    )?;
    let l = s.second_type_gaps()?;
    c.expect(
        l.iter().all(|x| pf.contains(x)) == r.almost_symmetric,
        || "L(S) ⊆ PF(S) disagrees".into(),
    )?;

    c.expect(!r.symmetric || r.almost_symmetric, || {
        "symmetric but not almost symmetric".into()
    })?;
    c.expect(!r.almost_symmetric || r.gas, || {
        "almost symmetric but not GAS".into()
    })?;
    c.expect((r.agl_level <= 1) == r.almost_symmetric, || {
        "AGL level ≤ 1 disagrees with almost symmetry".into()
    })?;
    c.expect((r.agl_level == 0) == r.symmetric, || {
        "AGL level 0 disagrees with symmetry".into()
    })?;
    if r.gas && s.has_max_embedding_dimension() {
        let e = s.multiplicity();
        let ok = r.almost_symmetric || (r.agl_level == 2 && r.two_k_gap == vec![f - e, f]);
        c.expect(ok, || "GAS with maximal embedding dimension but neither almost symmetric nor 2-AGL with {F - e, F}".into())?;
    }
    Ok(())
}

/// Deterministic seed derived from the generators.
fn seed_for(s: &NumericalSemigroup) -> u64 {
    s.generators()
        .iter()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, &g| {
            (h ^ g as u64).wrapping_mul(0x0100_0000_01b3)
        })
}

/// An ideal generated by one to three random integers in `[-F - 2, 2F + 2]`.
pub fn random_ideal(s: &NumericalSemigroup, rng: &mut impl Rng) -> RelativeIdeal {
    let f = s.frobenius().max(1);
    let n = rng.gen_range(1..=3);
    let gens: Vec<i64> = (0..n).map(|_| rng.gen_range(-f - 2..=2 * f + 2)).collect();
    RelativeIdeal::from_generators(s, &gens).expect("nonempty generators")
}

/// `S`, `M`, `K`, `M - M`, `S - ⟨K⟩`, the almost canonical ideals and
/// [`RANDOM_IDEALS`] seeded random ideals, all as ideals of `S`.
pub fn standard_family(
    s: &NumericalSemigroup,
    family: &IdealFamily,
) -> Result<Vec<(String, RelativeIdeal)>> {
    let m = RelativeIdeal::maximal(s);
    let mut out = vec![
        ("S".to_string(), RelativeIdeal::whole(s)),
        ("M".to_string(), m.clone()),
        ("K".to_string(), RelativeIdeal::canonical_unchecked(s)),
        ("M - M".to_string(), m.difference(&m)?),
        ("S - <K>".to_string(), IdealChoice::SMinusGenK.resolve(s)?),
    ];
    for member in &family.members {
        out.push((format!("base ∪ {:?}", member.subset), member.ideal.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(s));
    for k in 0..RANDOM_IDEALS {
        out.push((format!("random #{k}"), random_ideal(s, &mut rng)));
    }
    Ok(out)
}

/// Duality and gap-count properties for one ideal against its ambient.
fn check_ideal(c: &mut Ctx<'_>, name: &str, i: &RelativeIdeal) -> Result<()> {
    let s = i.ambient();
    let f = s.frobenius();
    let k = RelativeIdeal::canonical_unchecked(s);
    let dual = k.difference(i)?;
    c.expect(k.difference(&dual)? == *i, || {
        format!("{name}: K - (K - I) != I")
    })?;
    let hi = f.max(i.frobenius()) + 1;
    for x in i.min_element() - 1..=hi {
        c.expect(i.contains(x) != dual.contains(f - x), || {
            format!("{name}: duality fails at {x}")
        })?;
    }
    let inv = i.invariants()?;
    c.expect(inv.ideal_type == inv.pf.len(), || {
        format!("{name}: type != |PF|")
    })?;
    let tilde = i.normalize_tilde();
    c.expect(tilde.frobenius() == f && tilde.is_subset(&k), || {
        format!("{name}: Ĩ is not inside K with F(Ĩ) = F(S)")
    })?;
    c.expect(tilde.invariants()?.pf.contains(&f), || {
        format!("{name}: F(S) ∉ PF(Ĩ)")
    })?;
    let dual_tilde = k.difference(&tilde)?;
    let dual_count = (0..=f).filter(|&x| dual_tilde.contains(x)).count();
    c.expect(inv.genus == dual_count, || {
        format!(
            "{name}: g(I) = {} but |(K - Ĩ) ∩ [0, F]| = {dual_count}",
            inv.genus
        )
    })?;
    c.expect(
        inv.genus as i64 + s.genus() as i64 >= f + inv.ideal_type as i64,
        || format!("{name}: g(I) + g(S) < F + t(I)"),
    )?;
    c.expect((tilde == k) == (inv.ideal_type == 1), || {
        format!("{name}: canonical disagrees with type 1")
    })?;
    Ok(())
}

/// `|J ∖ I| = |(K - I) ∖ (K - J)|` for `I ⊆ J`.
fn check_pair(
    c: &mut Ctx<'_>,
    (ni, i): (&str, &RelativeIdeal),
    (nj, j): (&str, &RelativeIdeal),
) -> Result<()> {
    if !i.is_subset(j) {
        return Ok(());
    }
    let k = RelativeIdeal::canonical_unchecked(i.ambient());
    let lhs = j.minus(i).len();
    let rhs = k.difference(i)?.minus(&k.difference(j)?).len();
    c.expect(lhs == rhs, || {
        format!("|{nj} ∖ {ni}| = {lhs} but |(K - {ni}) ∖ (K - {nj})| = {rhs}")
    })
}

fn ideals_suite(c: &mut Ctx<'_>, family: &IdealFamily) -> Result<()> {
    let s = c.s;
    let f = s.frobenius();
    let ideals = standard_family(s, family)?;
    for (name, i) in &ideals {
        check_ideal(c, name, i)?;
    }
    let (mm, me) = mme_pair(s)?;
    check_ideal(c, "M - e in M - M", &me)?;

    let head = &ideals[..5];
    for (ni, i) in &ideals {
        for (nj, j) in head {
            check_pair(c, (ni, i), (nj, j))?;
            check_pair(c, (nj, j), (ni, i))?;
        }
    }
    for (a, b) in ideals.iter().zip(ideals.iter().skip(1)) {
        check_pair(c, (&a.0, &a.1), (&b.0, &b.1))?;
        check_pair(c, (&b.0, &b.1), (&a.0, &a.1))?;
    }

    let k = RelativeIdeal::canonical_unchecked(s);
    let m = RelativeIdeal::maximal(s);
    c.expect(
        k.difference(&m)?.as_set() == &k.as_set().with_points(&[f]),
        || "K - M != K ∪ {F}".into(),
    )?;
    let t = s.semigroup_type();
    c.expect(m.invariants()?.ideal_type == t + 1, || {
        "t(M) != t(S) + 1".into()
    })?;
    c.expect(k.invariants()?.ideal_type == 1, || "t(K) != 1".into())?;

    let e = s.multiplicity();
    c.expect(mm.frobenius() == f - e && me.frobenius() == f - e, || {
        "F(M - M) or F(M - e) != F - e".into()
    })?;
    c.expect(me.normalize_tilde() == me, || {
        "M - e is not normalized in M - M".into()
    })?;
    let kmm = RelativeIdeal::canonical_unchecked(&mm);
    let lhs = kmm.minus(&me);
    let pf = s.pseudo_frobenius()?;
    let rhs: Vec<i64> = s
        .second_type_gaps()?
        .into_iter()
        .filter(|x| !pf.contains(&(f - x)))
        .map(|x| x - e)
        .collect();
    c.expect(lhs == rhs, || {
        format!("K(M - M) ∖ (M - e) = {lhs:?}, expected {rhs:?}")
    })?;

    let powers = canonical_powers(s);
    c.expect(powers.len() as i64 <= f + 2, || {
        format!("nK stabilizes only at n = {}", powers.len())
    })?;
    Ok(())
}

fn equivalences_suite(
    c: &mut Ctx<'_>,
    r: &ClassificationReport,
    family: &IdealFamily,
) -> Result<()> {
    let s = c.s;
    let ideals = standard_family(s, family)?;
    let mut ac_count = 0;
    for (name, i) in &ideals {
        let conds = almost_canonical_conditions(i)?;
        c.expect(conds.iter().all(|&b| b == conds[0]), || {
            format!("{name}: almost canonical conditions {conds:?}")
        })?;
        if conds[0] {
            ac_count += 1;
        }
    }
    let (_, me) = mme_pair(s)?;
    let conds = almost_canonical_conditions(&me)?;
    c.expect(conds.iter().all(|&b| b == conds[0]), || {
        format!("M - e: almost canonical conditions {conds:?}")
    })?;
    c.expect(
        is_almost_canonical(&RelativeIdeal::whole(s))? == r.almost_symmetric,
        || "S almost canonical in itself disagrees with almost symmetry".into(),
    )?;
    c.expect(ac_count >= family.members.len(), || {
        "standard family lost almost canonical members".into()
    })?;

    if r.gas {
        c.expect(pf_pairing_check(s)?, || {
            "GAS but the PF pairing check fails".into()
        })?;
        gas_structure(s)?;
        mme_type_formula(s)?;
    }
    if r.agl_level <= 2 {
        c.expect(r.gas, || format!("{}-AGL but not GAS", r.agl_level))?;
    }
    let f = s.frobenius();
    let pf = s.pseudo_frobenius()?;
    let xs = &r.gas_witness.generators_x;
    let generator_form = xs.iter().all(|&x| s.is_minimal_generator(x));
    if generator_form {
        for x in s.second_type_gaps()? {
            if pf.contains(&(f - x)) {
                continue;
            }
            let ok = pf.contains(&x) && xs.iter().any(|&xi| pf.contains(&(f - x + xi)));
            c.expect(ok, || format!("L(S) lemma fails for x = {x}"))?;
        }
    }
    if pf.len() == 2 && !r.almost_symmetric {
        let profile = gas_type2_profile(s)?;
        c.expect(profile.gas == r.gas, || {
            "type-2 profile disagrees on GAS".into()
        })?;
    }
    c.expect(ideal_type_bound_check(s)?, || {
        "almost canonical ideal with type above t + 1".into()
    })?;
    Ok(())
}

fn gas_mme_suite(c: &mut Ctx<'_>, r: &ClassificationReport) -> Result<()> {
    let s = c.s;
    let ac = mme_almost_canonical(s)?;
    c.expect(ac == r.gas, || {
        format!("GAS = {} but M - e almost canonical in M - M = {ac}", r.gas)
    })?;
    let canonical = mme_canonical(s)?;
    c.expect(canonical == r.almost_symmetric, || {
        format!(
            "almost symmetric = {} but M - e canonical in M - M = {canonical}",
            r.almost_symmetric
        )
    })?;
    let (mm, me) = mme_pair(s)?;
    let m_mm = RelativeIdeal::maximal(&mm);
    let lhs = RelativeIdeal::canonical_unchecked(&mm).minus(&me);
    let quotient = me.difference(&m_mm)?;
    let inclusion = lhs.iter().all(|&x| quotient.contains(x));
    c.expect(inclusion == ac, || {
        format!("K(M - M) ∖ (M - e) ⊆ (M - e) - ((M - M) ∖ {{0}}) is {inclusion}")
    })?;
    Ok(())
}

fn counting_suite(c: &mut Ctx<'_>, r: &ClassificationReport, family: &IdealFamily) -> Result<()> {
    let s = c.s;
    let t = s.semigroup_type();
    c.expect(family.members.len() == 1 << t, || {
        format!(
            "{} almost canonical ideals, expected 2^{t}",
            family.members.len()
        )
    })?;
    let binomial: Vec<usize> = (0..=t).map(|i| binom(t, i)).collect();
    let hist = family.type_histogram();
    c.expect(hist == binomial, || {
        format!("type histogram {hist:?}, expected {binomial:?}")
    })?;
    if r.symmetric {
        let expected = [RelativeIdeal::maximal(s), RelativeIdeal::whole(s)];
        c.expect(expected.iter().all(|i| family.contains_ideal(i)), || {
            "symmetric family is not {M, S}".into()
        })?;
    }
    if s.genus() <= EXHAUSTIVE_GENUS {
        let found = scan_almost_canonical(s)?;
        c.expect(
            found.len() == family.members.len() && found.iter().all(|i| family.contains_ideal(i)),
            || {
                format!(
                    "exhaustive scan found {} almost canonical ideals, family has {}",
                    found.len(),
                    family.members.len()
                )
            },
        )?;
        c.tag("exhaustive_scan");
    }
    Ok(())
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn constructions_suite(c: &mut Ctx<'_>, r: &ClassificationReport) -> Result<()> {
    let s = c.s;
    let natural = NumericalSemigroup::natural();
    let two_three = NumericalSemigroup::from_generators(&[2, 3])?;
    for partner in [&natural, &two_three] {
        for (a, b) in gluing_parameters(s, partner, 2) {
            let spec = GluingSpec {
                s1: s.clone(),
                s2: partner.clone(),
                a,
                b,
            };
            let t = gluing(&spec)?;
            let rt = classify(&t)?;
            let third = a == 2 && partner.is_natural() && r.almost_symmetric && !r.symmetric;
            let ok = !rt.symmetric && rt.gas == (rt.agl_level == 2) && rt.gas == third;
            c.expect(ok, || {
                format!(
                    "gluing a = {a}, b = {b} into {t}: GAS {}, level {}, ⟨2S, bℕ⟩ form {third}",
                    rt.gas, rt.agl_level
                )
            })?;
            c.tag("gluings");
        }
    }

    for b in duplication_b_values(s, 2) {
        let i = IdealChoice::SMinusGenK.resolve(s)?;
        let t = duplication(&DuplicationSpec {
            s: s.clone(),
            ideal: i.clone(),
            b,
        })?;
        let rt = classify(&t)?;
        c.expect(rt.agl_level == r.agl_level && rt.gas == r.gas, || {
            format!(
                "S - <K> duplication with b = {b}: level {} vs {}, GAS {} vs {}",
                rt.agl_level, r.agl_level, rt.gas, r.gas
            )
        })?;
        duplication_lemma(c, &i, b, &t)?;
        let (s2, i2) = duplication_decompose(&t, b)?;
        c.expect(s2 == *s && i2.as_set() == i.as_set(), || {
            format!("S - <K> duplication with b = {b} does not decompose back")
        })?;

        let m = RelativeIdeal::maximal(s);
        let t = duplication(&DuplicationSpec {
            s: s.clone(),
            ideal: m.clone(),
            b,
        })?;
        let rt = classify(&t)?;
        if r.almost_symmetric {
            let k = RelativeIdeal::canonical_unchecked(s);
            let dual_is_semigroup = k.difference(&m.normalize_tilde())?.as_semigroup().is_ok();
            let ok = rt.almost_symmetric
                && rt.semigroup_type == 2 * r.semigroup_type + 1
                && dual_is_semigroup;
            c.expect(ok, || format!("M duplication with b = {b} of an almost symmetric S is not almost symmetric of type 2t + 1"))?;
        } else {
            c.expect(!rt.gas, || {
                format!("M duplication with b = {b} of a non almost symmetric S is GAS")
            })?;
        }
        duplication_lemma(c, &m, b, &t)?;
        duplication_decompose(&t, b)?;
        c.tag("duplications");
    }

    for a in dilatation_a_values(s, 2)? {
        let t = dilatation(&DilatationSpec { s: s.clone(), a })?;
        let rt = classify(&t)?;
        c.expect(rt.gas == r.gas, || {
            format!("dilatation by {a}: GAS {} vs {}", rt.gas, r.gas)
        })?;
        c.tag("dilatations");
    }
    Ok(())
}

/// For `F(I) = F(S)`: `k ∈ K ⇒ 2k, 2k + b ∈ K(T)`, and `F - x ∈ nK ∖ K` implies
/// `F(T) - 2x ∈ nK(T) ∖ K(T)`.
fn duplication_lemma(
    c: &mut Ctx<'_>,
    i: &RelativeIdeal,
    b: i64,
    t: &NumericalSemigroup,
) -> Result<()> {
    let s = c.s;
    if i.frobenius() != s.frobenius() {
        return Ok(());
    }
    let k = RelativeIdeal::canonical_unchecked(s);
    let kt = RelativeIdeal::canonical_unchecked(t);
    for y in 0..=s.frobenius() + 1 {
        if k.contains(y) {
            c.expect(kt.contains(2 * y) && kt.contains(2 * y + b), || {
                format!("duplication lemma: {y} ∈ K but 2k or 2k + b ∉ K(T)")
            })?;
        }
    }
    let ps = canonical_powers(s);
    let pt = canonical_powers(t);
    for (n, power) in ps.iter().enumerate().skip(1) {
        let nkt = &pt[n.min(pt.len() - 1)];
        for y in power.minus(&k) {
            let z = 2 * y + b;
            c.expect(nkt.contains(z) && !kt.contains(z), || {
                format!("duplication lemma: {z} ∉ {}K(T) ∖ K(T)", n + 1)
            })?;
        }
    }
    Ok(())
}
