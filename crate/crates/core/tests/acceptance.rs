//! End-to-end acceptance: one PASS/FAIL line per criterion, exact matches only.

use std::process::ExitCode;
use std::time::Instant;

use numsg::classify::{
    agl_level, has_canonical_reduction, is_almost_canonical, is_gas, is_ggl, is_nearly_gorenstein,
    mme_almost_canonical, pf_pairing_check, pf_pairings,
};
use numsg::enumerate::{oracle_ideal_op, required_oracle_bound, scan_almost_canonical, OracleOp};
use numsg::ideal::mme_pair;
use numsg::{
    almost_canonical_ideals, canonical_ideal, classify, dilatation, duplication, genus_tree,
    power_gaps, verify_corpus, DilatationSpec, DuplicationSpec, GasFailure, IdealChoice,
    NumericalSemigroup, RelativeIdeal, Suite,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Default)]
struct Check {
    failures: Vec<String>,
    count: usize,
}

impl Check {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        self.count += 1;
        if got != want {
            self.failures
                .push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn holds(&mut self, what: &str, cond: bool) {
        self.eq(what, cond, true);
    }
}

fn sg(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

fn gaps_of_powers(s: &NumericalSemigroup) -> Vec<(usize, Vec<i64>)> {
    power_gaps(s)
        .unwrap()
        .into_iter()
        .map(|p| (p.n, p.elements))
        .collect()
}

fn literature_fixtures(c: &mut Check) -> numsg::Result<()> {
    let s = sg(&[9, 24, 39, 43, 77]);
    c.eq(
        "PF <9,24,39,43,77>",
        s.pseudo_frobenius()?,
        vec![58, 73, 92, 107],
    );
    c.holds("<9,24,39,43,77> GAS", is_gas(&s)?.0);

    let s = sg(&[7, 9, 15]);
    let r = classify(&s)?;
    c.eq("<7,9,15> level", r.agl_level, 3);
    c.holds("<7,9,15> not GAS", !r.gas);
    c.eq("<7,9,15> 2K\\K", r.two_k_gap, vec![12, 19, 26]);

    let s = sg(&[8, 11, 14, 15, 17, 18, 20, 21]);
    let (gas, w) = is_gas(&s)?;
    c.holds("<8,11,...> not GAS", !gas);
    c.eq(
        "<8,11,...> witness",
        w.failure_reason,
        Some(GasFailure::PairDifferenceInPF(11, 8)),
    );
    c.holds("11-8 in PF", s.pseudo_frobenius()?.contains(&3));

    let s = sg(&[9, 10, 12, 13]);
    c.holds("<9,10,12,13> GAS", is_gas(&s)?.0);
    c.eq(
        "PF <9,10,12,13>",
        s.pseudo_frobenius()?,
        vec![11, 14, 15, 16, 17],
    );

    let s = sg(&[5, 6, 7]);
    c.eq(
        "<5,6,7> power gaps",
        gaps_of_powers(&s),
        vec![(2, vec![2, 9]), (3, vec![3]), (4, vec![4])],
    );
    c.holds("<5,6,7> GAS", is_gas(&s)?.0);
    c.holds("<5,6,7> nearly Gorenstein", is_nearly_gorenstein(&s)?);

    let s = sg(&[28, 40, 63, 79, 88]);
    c.eq("<28,40,63,79,88> level", agl_level(&s)?, 2);
    c.eq(
        "<28,40,63,79,88> PF",
        s.pseudo_frobenius()?,
        vec![100, 132, 177, 209, 281],
    );
    c.eq(
        "<28,40,63,79,88> pairings",
        pf_pairings(&s)?,
        vec![(28, vec![(100, 209), (132, 177)])],
    );

    let s = sg(&[67, 69, 76, 78, 86]);
    let pf = s.pseudo_frobenius()?;
    c.eq("<67,69,76,78,86> level", agl_level(&s)?, 2);
    c.eq(
        "<67,69,76,78,86> PF",
        pf.clone(),
        vec![218, 226, 249, 259, 267, 322, 485],
    );
    c.eq(
        "<67,69,76,78,86> pairings",
        pf_pairings(&s)?,
        vec![(86, vec![(249, 322)])],
    );
    let to_f: Vec<(i64, i64)> = pf
        .iter()
        .flat_map(|&a| pf.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| a < b && a + b == 485)
        .collect();
    c.eq(
        "<67,69,76,78,86> PF pairs summing to F",
        to_f,
        vec![(218, 267), (226, 259)],
    );

    let s = sg(&[15, 16, 19, 20, 24]);
    c.holds("<15,16,19,20,24> pf_pairing_check", pf_pairing_check(&s)?);
    c.holds("<15,16,19,20,24> not GAS", !is_gas(&s)?.0);

    let s = sg(&[9, 17, 67]);
    c.eq(
        "<9,17,67> (GAS, NG)",
        (is_gas(&s)?.0, is_nearly_gorenstein(&s)?),
        (true, false),
    );
    let s = sg(&[10, 11, 12, 25]);
    c.eq(
        "<10,11,12,25> (GAS, NG)",
        (is_gas(&s)?.0, is_nearly_gorenstein(&s)?),
        (false, true),
    );
    let s = sg(&[4, 7, 9, 10]);
    c.eq(
        "<4,7,9,10> (GAS, CR)",
        (is_gas(&s)?.0, has_canonical_reduction(&s)?),
        (true, false),
    );
    let s = sg(&[8, 9, 10, 22]);
    c.eq(
        "<8,9,10,22> (GAS, CR)",
        (is_gas(&s)?.0, has_canonical_reduction(&s)?),
        (false, true),
    );
    let s = sg(&[5, 9, 12]);
    c.eq("<5,9,12> GGL", is_ggl(&s)?, (true, Some(10)));
    c.holds("<5,9,12> not GAS", !is_gas(&s)?.0);

    let s = sg(&[9, 13, 14, 15, 19]);
    c.eq(
        "<9,13,14,15,19> 2K\\K",
        classify(&s)?.two_k_gap,
        vec![10, 12, 16, 25],
    );
    let (mm, m_minus_e) = mme_pair(&s)?;
    let k_mm = canonical_ideal(&mm)?;
    let quotient = m_minus_e.difference(&RelativeIdeal::maximal(&mm))?;
    c.eq(
        "M-M",
        RelativeIdeal::whole(&mm).to_string(),
        "{0,9,13,14,15} 17+".into(),
    );
    c.eq(
        "K(M-M)",
        k_mm.to_string(),
        "{0,4,5,6,8,9,10,11,12,13,14,15} 17+".into(),
    );
    c.eq(
        "M-9",
        m_minus_e.to_string(),
        "{0,4,5,6,9,10,13,14,15} 17+".into(),
    );
    c.eq("(M-9)-M(M-M)", quotient.to_string(), "{0,4,5,6} 8+".into());
    c.eq(
        "(M-9)-M(M-M) = K(M-M) u {16}",
        quotient.as_set().clone(),
        k_mm.as_set().with_points(&[16]),
    );
    c.holds(
        "M-9 almost canonical in M-M",
        is_almost_canonical(&m_minus_e)?,
    );

    let t = dilatation(&DilatationSpec {
        s: sg(&[7, 9, 11]),
        a: 7,
    })?;
    c.eq(
        "<7,9,11>+7",
        t.generators().to_vec(),
        vec![14, 16, 18, 21, 23, 25, 27, 29, 38, 40],
    );

    let s = sg(&[6, 28, 47, 97]);
    let i = IdealChoice::SMinusGenK.resolve(&s)?;
    let t = duplication(&DuplicationSpec {
        s: s.clone(),
        ideal: i,
        b: 47,
    })?;
    c.eq(
        "<6,28,47,97> dup 47",
        t.generators().to_vec(),
        vec![12, 56, 71, 94, 115, 153, 159, 194, 197, 241],
    );
    c.eq(
        "<6,28,47,97> power gaps",
        gaps_of_powers(&s),
        vec![(2, vec![44, 63, 91]), (3, vec![85])],
    );
    let kt = canonical_ideal(&t)?;
    c.holds(
        "88,126,170,182 in K(T)",
        [88, 126, 170, 182].iter().all(|&x| kt.contains(x)),
    );

    let s = sg(&[3, 10, 11]);
    let i = RelativeIdeal::from_generators(&s, &[3, 10])?;
    c.eq(
        "F(<3,10>), F(<3,10,11>)",
        (i.frobenius(), s.frobenius()),
        (11, 8),
    );
    let t = duplication(&DuplicationSpec {
        s: s.clone(),
        ideal: i,
        b: 3,
    })?;
    let generated = numsg::semigroup_generated_by_k(&t)?;
    c.holds(
        "F(T)-12 not in <K(T)>",
        !generated.contains(t.frobenius() - 12),
    );
    c.holds(
        "F(S)-6 in 2K\\K",
        gaps_of_powers(&s)
            .first()
            .is_some_and(|(n, g)| *n == 2 && g.contains(&2)),
    );
    Ok(())
}

fn main_theorem(c: &mut Check) -> numsg::Result<()> {
    for s in genus_tree(12).iter().filter(|s| !s.is_natural()) {
        c.eq(
            &format!("{s}: GAS vs M-e"),
            is_gas(s)?.0,
            mme_almost_canonical(s)?,
        );
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn counting(c: &mut Check) -> numsg::Result<()> {
    for s in genus_tree(12).iter().filter(|s| !s.is_natural()) {
        let t = s.semigroup_type();
        let family = almost_canonical_ideals(s)?;
        c.eq(&format!("{s}: family size"), family.members.len(), 1 << t);
        let want: Vec<usize> = (1..=t + 1).map(|i| binomial(t, i - 1)).collect();
        c.eq(
            &format!("{s}: type histogram"),
            family.type_histogram(),
            want,
        );
        if s.genus() <= 8 {
            let scanned = scan_almost_canonical(s)?;
            c.eq(
                &format!("{s}: scan size"),
                scanned.len(),
                family.members.len(),
            );
            c.holds(
                &format!("{s}: scan inside family"),
                scanned.iter().all(|i| family.contains_ideal(i)),
            );
        }
    }
    Ok(())
}

fn suites(c: &mut Check, max_genus: usize, suites: &[Suite]) -> numsg::Result<()> {
    let report = verify_corpus(max_genus, suites, None)?;
    c.holds("semigroups checked", report.summary.semigroups_checked > 0);
    for v in &report.summary.violations {
        c.holds(
            &format!("{:?} {:?}: {}", v.suite, v.generators, v.detail),
            false,
        );
    }
    c.count += report.summary.semigroups_checked;
    Ok(())
}

fn equivalences(c: &mut Check) -> numsg::Result<()> {
    suites(
        c,
        12,
        &[
            Suite::Core,
            Suite::Ideals,
            Suite::Equivalences,
            Suite::GasMme,
        ],
    )
}

fn constructions(c: &mut Check) -> numsg::Result<()> {
    suites(c, 10, &[Suite::Constructions])
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn oracle(c: &mut Check) -> numsg::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_9701);
    let mut triples = 0;
    while triples < 500 {
        let gens: Vec<i64> = (0..rng.gen_range(2..=4))
            .map(|_| rng.gen_range(2..=17))
            .collect();
        if gens.iter().fold(0, |a, &g| gcd(a, g)) != 1 {
            continue;
        }
        let s = sg(&gens);
        let f = s.frobenius();
        let ideal = |rng: &mut ChaCha8Rng| {
            let g: Vec<i64> = (0..rng.gen_range(1..=3))
                .map(|_| rng.gen_range(-3..=f + 3))
                .collect();
            RelativeIdeal::from_generators(&s, &g)
        };
        let (i, j) = (ideal(&mut rng)?, ideal(&mut rng)?);
        let k = canonical_ideal(&s)?;
        for (op, fast) in [
            (OracleOp::Sum(&i, &j), i.sum(&j)?),
            (OracleOp::Difference(&i, &j), i.difference(&j)?),
            (OracleOp::Dual(&i), k.difference(&i)?),
        ] {
            let bound = required_oracle_bound(op).max(3 * f + 3);
            c.holds(
                &format!("{s} {op:?}"),
                oracle_ideal_op(op, bound)?.matches(&fast),
            );
        }
        triples += 1;
    }
    Ok(())
}

type Criterion = (&'static str, fn(&mut Check) -> numsg::Result<()>);

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 literature fixtures", literature_fixtures),
        ("2 GAS iff M-e almost canonical, genus <= 12", main_theorem),
        (
            "3 2^t almost canonical ideals, binomial types, genus <= 12",
            counting,
        ),
        ("4 equivalence suites, genus <= 12", equivalences),
        ("5 construction theorems, genus <= 10", constructions),
        ("6 ideal operations vs oracle, 500 triples", oracle),
    ];
    let start = Instant::now();
    let mut all_ok = true;
    for (name, run) in criteria {
        let t0 = Instant::now();
        let mut c = Check::default();
        if let Err(e) = run(&mut c) {
            c.failures.push(format!("error: {e}"));
        }
        let ok = c.failures.is_empty();
        all_ok &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {name}: {verdict} ({} checks, {:.2}s)",
            c.count,
            t0.elapsed().as_secs_f64()
        );
        for f in c.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    println!("acceptance total {:.2}s", start.elapsed().as_secs_f64());
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
