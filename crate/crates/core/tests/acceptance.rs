//! Acceptance criteria 1 to 9. Each test prints one `criterion N: PASS|FAIL` line.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use qcalc::cli::corpus::{sample_left_adjoints, CorpusSpec, MAX_LATTICE};
use qcalc::cli::laws::{render_run, run_suite, Fixtures, Suite};
use qcalc::cli::paper::{paper_report, EXPECTED};
use qcalc::cli::run_args;
use qcalc::error::Error;
use qcalc::fixtures;
use qcalc::mcomplete::{free_extension, is_m_cocomplete, is_pdag_algebra_hom, is_phat_algebra_hom};
use qcalc::morita::{cauchy_completion, is_cauchy_complete, morita_equivalent};
use qcalc::presheaf::{kz_check, monad_components, monad_laws, PresheafCategory, Side};
use qcalc::qcat::QCategory;
use qcalc::qdist::QDistributor;
use qcalc::realline::{default_samples, example2_verify, r_compose, ExtendedRational};

use common::frame;

fn report(n: u32, pass: bool, detail: impl AsRef<str>) {
    println!("criterion {n}: {} ({})", if pass { "PASS" } else { "FAIL" }, detail.as_ref());
}

fn within(start: Instant, budget: Duration) -> bool {
    start.elapsed() < budget
}

#[test]
fn criterion_1_frame_tables() {
    let start = Instant::now();
    let out = run_args(["qcalc", "paper"]);
    let r = paper_report();
    let fast = within(start, Duration::from_secs(1));
    // the oracle reproduces the published presheaf list and labels
    let oracle = frame::presheaves();
    let labels_ok = oracle.len() == 9
        && r.rows.iter().zip(&oracle).all(|(row, mu)| row.values == [frame::name(mu[0]), frame::name(mu[1])]);
    let oracle_ok = r.rows.iter().zip(&oracle).all(|(row, &mu)| {
        row.yoneda == frame::yoneda_row(mu).map(frame::name) && row.star == frame::star_row(mu).map(frame::name)
    });
    let mut published = 0;
    let mut agree = 0;
    for (row, (_, yo, st)) in r.rows.iter().zip(EXPECTED.iter()) {
        for c in 0..2 {
            published += 2;
            agree += usize::from(row.yoneda[c] == yo[c]) + usize::from(row.star[c] == st[c]);
        }
    }
    let pass = out.code == 0 && r.diffs.is_empty() && labels_ok && oracle_ok && fast;
    let diffs: Vec<String> = r
        .diffs
        .iter()
        .map(|d| format!("{} {} {}: published {}, computed {}", d.row, d.table, d.column, d.expected, d.computed))
        .collect();
    report(
        1,
        pass,
        format!(
            "{agree}/{published} published cells reproduced; oracle agreement {oracle_ok}; exit {}; {:?}; {}",
            out.code,
            start.elapsed(),
            diffs.join("; ")
        ),
    );
    assert!(labels_ok && oracle_ok, "computed tables disagree with the independent oracle");
    assert!(pass, "published tables not reproduced: {}", diffs.join("; "));
}

#[test]
fn criterion_2_frame_verdicts() {
    let start = Instant::now();
    let f = common::fixture_path();
    let mc = run_args(["qcalc", "check", &f, "X", "--property", "m-cocomplete"]);
    let co = run_args(["qcalc", "check", &f, "X", "--property", "cocomplete"]);
    let pass = mc.code == 0 && co.code == 1 && within(start, Duration::from_secs(1));
    report(2, pass, format!("m-cocomplete exit {}, cocomplete exit {}, {:?}", mc.code, co.code, start.elapsed()));
    assert!(pass);
}

#[test]
fn criterion_3_real_line() {
    let start = Instant::now();
    let samples = default_samples();
    let finite = samples.iter().filter(|t| t.is_finite()).count();
    assert!(finite >= 5 && samples.contains(&ExtendedRational::PosInf));
    let r = example2_verify(&samples);
    let one = ExtendedRational::int(1);
    let minus_one = ExtendedRational::int(-1);
    let mut closed_forms = true;
    let mut unit_failures = Vec::new();
    for s in &r.samples {
        // closed forms computed here: (−t, −1−t) and (t, 1+t)
        let t = &s.t;
        let yo = [t.neg(), r_compose(&minus_one, &t.neg())];
        let st = [t.clone(), r_compose(&one, t)];
        closed_forms &= s.presheaf_valid && s.yoneda_row == yo && s.star_row == st;
        if !s.unit_holds {
            unit_failures.push(format!("t={t}: PX(μ,μ)={} vs composite {}", s.unit_lhs, s.unit_rhs));
        }
    }
    let pass = closed_forms && unit_failures.is_empty() && within(start, Duration::from_secs(1));
    report(
        3,
        pass,
        format!(
            "{} samples, closed forms {}, unit inequality failures: [{}]",
            r.samples.len(),
            if closed_forms { "match" } else { "differ" },
            unit_failures.join("; ")
        ),
    );
    assert!(closed_forms);
    assert!(pass, "unit inequality fails: {}", unit_failures.join("; "));
}

#[test]
fn criterion_4_theorem_corpus() {
    let start = Instant::now();
    let spec = CorpusSpec::new(42, 200);
    for (i, a) in spec.instances() {
        let q = a.base();
        let n = q.len();
        assert!(a.len() <= 3, "instance {i}");
        assert!((0..n * n).all(|k| q.hom(k / n, k % n).len() <= MAX_LATTICE), "instance {i}");
    }
    let run = run_suite(Suite::Theorem4, &Fixtures::builtin(), Some(spec));
    let pass = run.passes() && run.corpus_checked == 200 && within(start, Duration::from_secs(120));
    report(
        4,
        pass,
        format!("{} instances, {} counterexamples, {:?}", run.corpus_checked, run.counterexamples.len(), start.elapsed()),
    );
    assert!(pass, "{}", render_run(&run));
}

#[test]
fn criterion_5_law_suites() {
    let start = Instant::now();
    let fx = Fixtures::builtin();
    let res = run_suite(Suite::Residuation, &fx, None);
    let yon = run_suite(Suite::Yoneda, &fx, None);
    let x = Arc::new(fixtures::x_f());
    let pa = PresheafCategory::presheaves(x.clone()).unwrap();
    let pda = PresheafCategory::copresheaves(x.clone()).unwrap();
    let instances = pa.len() * x.len() + pda.len() * x.len();
    let covered = pa.len() == 9 && pda.len() == 9;
    let pass = res.passes()
        && yon.passes()
        && res.skipped.is_empty()
        && yon.skipped.is_empty()
        && covered
        && within(start, Duration::from_secs(10));
    report(
        5,
        pass,
        format!(
            "{} residuation checks, {} Yoneda checks ({instances} on X), {:?}",
            res.check_count(),
            yon.check_count(),
            start.elapsed()
        ),
    );
    assert!(pass, "{}\n{}", render_run(&res), render_run(&yon));
}

#[test]
fn criterion_6_monads() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checks = 0;
    for a in [Arc::new(fixtures::x_f()), Arc::new(fixtures::star_f())] {
        for side in [Side::Presheaf, Side::Copresheaf] {
            let c = monad_components(a.clone(), side).expect("within the cap");
            for r in [monad_laws(&c).unwrap(), kz_check(&c).unwrap()] {
                checks += r.checks.len();
                failures.extend(r.failures().map(|f| format!("{}: {}", r.subject, f.law)));
            }
        }
    }
    let pass = failures.is_empty() && within(start, Duration::from_secs(60));
    report(6, pass, format!("{checks} checks, {:?}", start.elapsed()));
    assert!(pass, "{failures:?}");
}

fn m_cocomplete_fixtures() -> Vec<Arc<QCategory>> {
    Fixtures::builtin()
        .categories
        .into_iter()
        .filter(|a| a.len() <= 4 && is_m_cocomplete(a.clone()).map(|r| r.verdict).unwrap_or(false))
        .collect()
}

fn same_base_pairs(cats: &[Arc<QCategory>]) -> Vec<(Arc<QCategory>, Arc<QCategory>)> {
    let mut out = Vec::new();
    for a in cats {
        for b in cats {
            if qcalc::qcat::same_base(a.base(), b.base()) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[test]
fn criterion_7_homomorphism_routes() {
    let start = Instant::now();
    let cats = m_cocomplete_fixtures();
    let pairs = same_base_pairs(&cats);
    let mut zetas = Vec::new();
    for (a, b) in &pairs {
        for f in qcalc::cli::laws::all_functors(a, b).unwrap() {
            let g = QDistributor::graph(&f);
            if g.is_left_adjoint() {
                zetas.push(g);
            }
        }
    }
    let graphs = zetas.len();
    let mut rng = CorpusSpec::new(7, 1).rng(0);
    zetas.extend(sample_left_adjoints(&mut rng, &pairs, 50));
    let sampled = zetas.len() - graphs;
    let mut discrepancies = Vec::new();
    for z in &zetas {
        for r in [is_phat_algebra_hom(z).unwrap(), is_pdag_algebra_hom(z).unwrap()] {
            if !r.routes_agree() {
                discrepancies.push(format!("{} {}: {:?}", z.name, r.property, r.routes));
            }
        }
    }
    let pass = discrepancies.is_empty() && sampled == 50 && within(start, Duration::from_secs(60));
    report(7, pass, format!("{graphs} graphs + {sampled} sampled, {} discrepancies, {:?}", discrepancies.len(), start.elapsed()));
    assert!(pass, "{discrepancies:?}");
}

#[test]
fn criterion_8_morita() {
    let start = Instant::now();
    let x = Arc::new(fixtures::x_f());
    let oracle = common::copresheaf_witness_members(&x, 0);
    let oracle_labels: Vec<String> =
        oracle.iter().map(|m| format!("({},{})", frame::name(m[0] as u8), frame::name(m[1] as u8))).collect();
    let cc = cauchy_completion(x.clone()).unwrap();
    let labels: Vec<String> = cc.members.iter().map(|&i| cc.presheaves.label(i).to_string()).collect();
    let expected = ["(p,q)", "(p,k)", "(k,q)", "(k,k)"];
    let members_ok = labels == expected && oracle_labels == expected;
    let equivalent = morita_equivalent(x.clone(), cc.category.clone()).unwrap().is_some();
    let x_cc = is_cauchy_complete(x.clone()).unwrap();
    let cc_cc = is_cauchy_complete(cc.category.clone()).unwrap();
    let pass = members_ok && equivalent && !x_cc && cc_cc && within(start, Duration::from_secs(5));
    report(
        8,
        pass,
        format!(
            "members {labels:?}, oracle {oracle_labels:?}, equivalent {equivalent}, X cauchy {x_cc}, X_cc cauchy {cc_cc}"
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_9_free_extension() {
    let start = Instant::now();
    let cats = m_cocomplete_fixtures();
    let pairs = same_base_pairs(&cats);
    let mut rng = CorpusSpec::new(9, 1).rng(0);
    let zetas = sample_left_adjoints(&mut rng, &pairs, 20);
    let mut failures = Vec::new();
    let (mut unique, mut over_cap) = (0, 0);
    for z in &zetas {
        let fe = match free_extension(z, true) {
            Ok(fe) => fe,
            Err(Error::SearchSpaceExceeded { .. }) => {
                over_cap += 1;
                free_extension(z, false).unwrap()
            }
            Err(e) => panic!("{e}"),
        };
        if fe.factoring == Some(1) {
            unique += 1;
        }
        failures.extend(fe.report.failures().map(|c| format!("{} {} {}", z.name, c.law, c.detail)));
    }
    let pass = zetas.len() == 20 && failures.is_empty() && within(start, Duration::from_secs(120));
    report(
        9,
        pass,
        format!("{} extensions, {unique} unique by brute force, {over_cap} over the cap, {:?}", zetas.len(), start.elapsed()),
    );
    assert!(pass, "{failures:?}");
}
