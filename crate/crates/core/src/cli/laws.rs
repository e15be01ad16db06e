//! Law suites over fixtures and generated corpora.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::corpus::{diagonal_on, lukasiewicz, CorpusSpec, Family};
use super::workspace::{serialize_workspace, Workspace};
use crate::error::{guard, product, Result};
use crate::fixtures;
use crate::mcomplete::{
    is_m_conically_cocomplete, is_m_cotensored, is_m_tensored, m_complete_in, m_complete_witness, m_cocomplete_in,
};
use crate::morita::{cauchy_completion, converges, left_adjoint_presheaves, morita_equivalent, non_representable};
use crate::presheaf::{
    is_cocomplete, is_complete, is_cotensored, is_tensored, kz_check, monad_components, monad_laws, PresheafCategory,
    Side,
};
use crate::qcat::{functors_adjoint, QCategory, QFunctor};
use crate::qdist::{adjoint_pair, compose, left_imp, right_imp, QDistributor};
use crate::quantaloid::{Arrow, Quantaloid};
use crate::report::LawReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    All,
    Residuation,
    Yoneda,
    Monad,
    Kz,
    Theorem4,
    Morita,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Residuation, Suite::Yoneda, Suite::Monad, Suite::Kz, Suite::Theorem4, Suite::Morita];

    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Residuation => "residuation",
            Suite::Yoneda => "yoneda",
            Suite::Monad => "monad",
            Suite::Kz => "kz",
            Suite::Theorem4 => "theorem4",
            Suite::Morita => "morita",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "residuation" => Ok(Suite::Residuation),
            "yoneda" => Ok(Suite::Yoneda),
            "monad" => Ok(Suite::Monad),
            "kz" => Ok(Suite::Kz),
            "theorem4" => Ok(Suite::Theorem4),
            "morita" => Ok(Suite::Morita),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

/// The instances a suite runs on when no corpus is involved.
#[derive(Debug, Clone)]
pub struct Fixtures {
    pub quantaloids: Vec<Arc<Quantaloid>>,
    pub categories: Vec<Arc<QCategory>>,
    /// Categories small enough for exhaustive distributor enumeration.
    pub small: Vec<Arc<QCategory>>,
}

impl Fixtures {
    pub fn builtin() -> Self {
        let qf = fixtures::q_f();
        let f = fixtures::frame_f();
        let (p, q, k) = (f.element("p").expect("p"), f.element("q").expect("q"), f.element("k").expect("k"));
        let dh = Arc::new(diagonal_on(&f, &[p, q, k], "D(F)"));
        let x = Arc::new(fixtures::x_f());
        let star = Arc::new(fixtures::star_f());
        let d2 = Arc::new(fixtures::discrete_two(qf.clone()));
        let cc = cauchy_completion(x.clone()).expect("X_F is small").category;
        let luk = Arc::new(lukasiewicz(4));
        let luk_cat = Arc::new(
            QCategory::new("L", luk.clone(), vec!["a".into(), "b".into()], vec![0, 0], vec![3, 1, 2, 3]).expect("L"),
        );
        let dh_cat = Arc::new(with_units(
            QCategory::new("E", dh.clone(), vec!["u".into(), "v".into()], vec![0, 1], vec![0, 0, 0, 0]).expect("E"),
        ));
        Fixtures {
            quantaloids: vec![qf, fixtures::chain_frame(3), luk, dh],
            categories: vec![x.clone(), star.clone(), d2, cc, luk_cat, dh_cat],
            small: vec![star, x],
        }
    }

    pub fn from_workspace(ws: &Workspace) -> Self {
        let categories: Vec<_> = ws.categories.values().cloned().collect();
        let small = categories.iter().filter(|c| c.len() <= 2).cloned().collect();
        Fixtures { quantaloids: ws.quantaloids.values().cloned().collect(), categories, small }
    }
}

/// Raises every diagonal hom to the unit; used for hand-built fixtures.
fn with_units(a: QCategory) -> QCategory {
    let q = a.base().clone();
    let n = a.len();
    let mut hom = a.homs().to_vec();
    for x in 0..n {
        hom[x * n + x] = q.hom(a.ty(x), a.ty(x)).join2(hom[x * n + x], q.unit(a.ty(x)));
    }
    QCategory::new(a.name(), q, a.objects().to_vec(), a.types().to_vec(), hom).expect("same shape")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub family: Family,
    pub replay: String,
    pub failures: Vec<String>,
    /// The minimized instance in workspace syntax.
    pub instance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRun {
    pub suite: Suite,
    pub reports: Vec<LawReport>,
    pub skipped: Vec<String>,
    pub corpus: Option<CorpusSpec>,
    pub corpus_checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteRun {
    pub fn passes(&self) -> bool {
        self.counterexamples.is_empty() && self.reports.iter().all(LawReport::all_hold)
    }

    pub fn check_count(&self) -> usize {
        self.reports.iter().map(|r| r.checks.len()).sum()
    }
}

fn arrows(q: &Quantaloid, x: usize, y: usize) -> impl Iterator<Item = Arrow> + '_ {
    (0..q.hom(x, y).len()).map(move |v| Arrow::new(x, y, v))
}

/// The Galois law, adjoint uniqueness and the map identities on every arrow of `q`.
pub fn quantaloid_laws(q: &Quantaloid) -> LawReport {
    let n = q.len();
    let name = |a: Arrow| q.arrow_name(a).to_string();
    let mut r = LawReport::new(format!("residuation in {}", q.name()));
    let (mut galois, mut unique, mut dv1, mut dv2) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lz = q.hom(x, z);
                for g in arrows(q, y, z) {
                    for f in arrows(q, x, y) {
                        for h in arrows(q, x, z) {
                            let a = lz.leq(q.comp(x, y, z, g.value, f.value), h.value);
                            let b = q.hom(y, z).leq(g.value, q.limp(x, y, z, h.value, f.value));
                            let c = q.hom(x, y).leq(f.value, q.rimp(x, y, z, g.value, h.value));
                            if a != b || b != c {
                                galois.push(format!("g={} f={} h={}", name(g), name(f), name(h)));
                            }
                        }
                    }
                }
            }
            for f in arrows(q, x, y) {
                let fs = q.star(f);
                for g in arrows(q, y, x) {
                    if q.arrows_adjoint(f, g) && g != fs {
                        unique.push(format!("{} ⊣ {} but f* = {}", name(f), name(g), name(fs)));
                    }
                }
                if !q.is_map(f) {
                    continue;
                }
                // h∘f = h↙f* and f*∘k = f↘k
                for z in 0..n {
                    for h in arrows(q, y, z) {
                        let lhs = q.comp(x, y, z, h.value, f.value);
                        let rhs = q.limp(y, x, z, h.value, fs.value);
                        if lhs != rhs {
                            dv1.push(format!("h∘f vs h↙f* at f={} h={}", name(f), name(h)));
                        }
                    }
                    for k in arrows(q, z, y) {
                        let lhs = q.comp(z, y, x, fs.value, k.value);
                        let rhs = q.rimp(z, x, y, f.value, k.value);
                        if lhs != rhs {
                            dv1.push(format!("f*∘k vs f↘k at f={} k={}", name(f), name(k)));
                        }
                    }
                }
                // (h↘h')∘f = h↘(h'∘f) and f*∘(h'↙h) = (f*∘h')↙h
                for v in 0..n {
                    for w in 0..n {
                        for h in arrows(q, v, w) {
                            for h2 in arrows(q, y, w) {
                                // f: x→y, h2: y→w, h: v→w
                                let lhs = q.comp(x, y, v, q.rimp(y, v, w, h.value, h2.value), f.value);
                                let rhs = q.rimp(x, v, w, h.value, q.comp(x, y, w, h2.value, f.value));
                                if lhs != rhs {
                                    dv2.push(format!("(h↘h')∘f at f={} h={} h'={}", name(f), name(h), name(h2)));
                                }
                            }
                        }
                        for h in arrows(q, v, w) {
                            for h2 in arrows(q, v, y) {
                                // h2: v→y, h: v→w, h2↙h: w→y, f*: y→x
                                let lhs = q.comp(w, y, x, fs.value, q.limp(v, w, y, h2.value, h.value));
                                let rhs = q.limp(v, w, x, q.comp(v, y, x, fs.value, h2.value), h.value);
                                if lhs != rhs {
                                    dv2.push(format!("f*∘(h'↙h) at f={} h={} h'={}", name(f), name(h), name(h2)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut push = |law: &str, bad: Vec<String>| {
        r.push(law, bad.is_empty(), bad.into_iter().take(3).collect::<Vec<_>>().join("; "));
    };
    push("g∘f ≤ h ⟺ g ≤ h↙f ⟺ f ≤ g↘h", galois);
    push("f ⊣ g implies g = f*", unique);
    push("for a map f: h∘f = h↙f* and f*∘k = f↘k", dv1);
    push("for a map f: (h↘h')∘f = h↘(h'∘f) and f*∘(h'↙h) = (f*∘h')↙h", dv2);
    r
}

/// Every distributor `A ⇸ B`, by filtering all matrices.
pub fn all_distributors(a: &Arc<QCategory>, b: &Arc<QCategory>) -> Result<Vec<QDistributor>> {
    let q = a.base();
    let sizes: Vec<usize> =
        (0..a.len() * b.len()).map(|i| q.hom(a.ty(i / b.len()), b.ty(i % b.len())).len()).collect();
    guard(format!("distributors {} ⇸ {}", a.name(), b.name()), product(sizes.iter().copied()))?;
    let mut out = Vec::new();
    let mut cells = vec![0usize; sizes.len()];
    loop {
        let d = QDistributor::from_fn("φ", a.clone(), b.clone(), |x, y| cells[x * b.len() + y]);
        if d.is_valid() {
            out.push(d);
        }
        let mut k = 0;
        loop {
            if k == sizes.len() {
                return Ok(out);
            }
            cells[k] += 1;
            if cells[k] < sizes[k] {
                break;
            }
            cells[k] = 0;
            k += 1;
        }
    }
}

/// Every functor `A → B`.
pub fn all_functors(a: &Arc<QCategory>, b: &Arc<QCategory>) -> Result<Vec<QFunctor>> {
    let options: Vec<Vec<usize>> = (0..a.len()).map(|x| (0..b.len()).filter(|&y| b.ty(y) == a.ty(x)).collect()).collect();
    guard(format!("functors {} → {}", a.name(), b.name()), product(options.iter().map(|o| o.len())))?;
    if options.iter().any(|o| o.is_empty()) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; a.len()];
    loop {
        let map = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
        let f = QFunctor::new("F", a.clone(), b.clone(), map)?;
        if f.validate().is_valid() {
            out.push(f);
        }
        let mut k = 0;
        loop {
            if k == a.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// `ψ∘φ ≤ η ⟺ ψ ≤ η↙φ ⟺ φ ≤ ψ↘η` for all distributors among `cats`.
pub fn distributor_galois(cats: &[Arc<QCategory>]) -> Result<LawReport> {
    let mut r = LawReport::new("distributor residuation");
    let mut bad = Vec::new();
    let mut count = 0usize;
    for a in cats {
        for b in cats {
            let ab = all_distributors(a, b)?;
            for c in cats {
                let bc = all_distributors(b, c)?;
                let ac = all_distributors(a, c)?;
                for phi in &ab {
                    for psi in &bc {
                        let comp = compose(psi, phi)?;
                        for eta in &ac {
                            count += 1;
                            let x = comp.leq(eta)?;
                            let y = psi.leq(&left_imp(eta, phi)?)?;
                            let z = phi.leq(&right_imp(psi, eta)?)?;
                            if x != y || y != z {
                                bad.push(format!("{} ⇸ {} ⇸ {}: {:?} {:?} {:?}", a.name(), b.name(), c.name(), phi.cells(), psi.cells(), eta.cells()));
                            }
                        }
                    }
                }
            }
        }
    }
    r.push(
        "ψ∘φ ≤ η ⟺ ψ ≤ η↙φ ⟺ φ ≤ ψ↘η",
        bad.is_empty(),
        if bad.is_empty() { format!("{count} triples") } else { bad.into_iter().take(3).collect::<Vec<_>>().join("; ") },
    );
    Ok(r)
}

/// `F ⊣ G ⟺ F_♮ = G^♮ ⟺ G^♮ ⊣ F^♮ ⟺ G_♮ ⊣ F_♮` for all functor pairs between `a` and `b`.
pub fn functor_adjunction_law(a: &Arc<QCategory>, b: &Arc<QCategory>) -> Result<LawReport> {
    let mut r = LawReport::new(format!("functor adjunctions {} ⇄ {}", a.name(), b.name()));
    let mut bad = Vec::new();
    let mut count = 0usize;
    for f in all_functors(a, b)? {
        for g in all_functors(b, a)? {
            count += 1;
            let v = [
                functors_adjoint(&f, &g)?,
                QDistributor::graph(&f).cells() == QDistributor::cograph(&g).cells(),
                adjoint_pair(&QDistributor::cograph(&g), &QDistributor::cograph(&f))?,
                adjoint_pair(&QDistributor::graph(&g), &QDistributor::graph(&f))?,
            ];
            if v.iter().any(|&t| t != v[0]) {
                bad.push(format!("F={:?} G={:?}: {:?}", f.map, g.map, v));
            }
        }
    }
    r.push(
        "four adjunction readings agree",
        bad.is_empty(),
        if bad.is_empty() { format!("{count} pairs") } else { bad.into_iter().take(3).collect::<Vec<_>>().join("; ") },
    );
    Ok(r)
}

pub fn yoneda_laws(a: &Arc<QCategory>) -> Result<Vec<LawReport>> {
    Ok(vec![
        PresheafCategory::presheaves(a.clone())?.check_yoneda_lemma(),
        PresheafCategory::copresheaves(a.clone())?.check_yoneda_lemma(),
    ])
}

pub fn monad_suite(a: &Arc<QCategory>, kz: bool) -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for side in [Side::Presheaf, Side::Copresheaf] {
        let c = monad_components(a.clone(), side)?;
        out.push(if kz { kz_check(&c)? } else { monad_laws(&c)? });
    }
    Ok(out)
}

/// M-cocompleteness against M-completeness, tensors with conical cocompleteness,
/// the Cauchy-complete coincidences and the opposite duality.
pub fn theorem4_laws(a: &Arc<QCategory>) -> Result<LawReport> {
    let mut r = LawReport::new(format!("completeness up to Morita equivalence on {}", a.name()));
    let pa = PresheafCategory::presheaves(a.clone())?;
    let pda = PresheafCategory::copresheaves(a.clone())?;
    let mc = m_cocomplete_in(&pa).verdict;
    let ml = m_complete_in(&pda).verdict;
    r.push("M-cocomplete ⟺ M-complete", mc == ml, format!("{mc} vs {ml}"));
    if mc {
        r.push("(Y_A)^♮∘(lb)_♮ has star (Y†_A)_♮", m_complete_witness(&pa, &pda)?, "");
    }
    let mt = is_m_tensored(a.clone())?.verdict;
    for empty in [true, false] {
        let conical = is_m_conically_cocomplete(a.clone(), empty)?.verdict;
        r.push(
            format!("M-cocomplete ⟺ M-tensored ∧ M-conical (empty {})", if empty { "on" } else { "off" }),
            mc == (mt && conical),
            format!("{mc} vs {mt} ∧ {conical}"),
        );
    }
    if non_representable(&pa).is_none() {
        let co = is_cocomplete(a.clone())?;
        let cl = is_complete(a.clone())?;
        r.push("Cauchy complete: M-cocomplete = cocomplete", mc == co, format!("{mc} vs {co}"));
        r.push("Cauchy complete: M-complete = complete", ml == cl, format!("{ml} vs {cl}"));
        let t = is_tensored(a);
        r.push("Cauchy complete: M-tensored = tensored", mt == t, format!("{mt} vs {t}"));
        let mct = is_m_cotensored(a.clone())?.verdict;
        let ct = is_cotensored(a);
        r.push("Cauchy complete: M-cotensored = cotensored", mct == ct, format!("{mct} vs {ct}"));
    }
    let op = Arc::new(a.opposite());
    let mc_op = m_cocomplete_in(&PresheafCategory::presheaves(op)?).verdict;
    r.push("M-complete(A) ⟺ M-cocomplete(A^op)", ml == mc_op, format!("{ml} vs {mc_op}"));
    Ok(r)
}

/// Completion members, equivalence with the completion and convergence of left adjoints.
pub fn morita_laws(a: &Arc<QCategory>) -> Result<LawReport> {
    let mut r = LawReport::new(format!("Cauchy completion of {}", a.name()));
    let cc = cauchy_completion(a.clone())?;
    let pa = &cc.presheaves;
    // a member is a presheaf with some copresheaf left adjoint to it
    let pda = PresheafCategory::copresheaves(a.clone())?;
    let mut by_definition = Vec::new();
    for i in 0..pa.len() {
        let mu = pa.distributor(i);
        let ty = pa.member(i).ty;
        let mut found = false;
        for j in (0..pda.len()).filter(|&j| pda.member(j).ty == ty) {
            if adjoint_pair(&pda.distributor(j), &mu)? {
                found = true;
                break;
            }
        }
        if found {
            by_definition.push(i);
        }
    }
    r.push(
        "members are the presheaves with a left adjoint",
        by_definition == cc.members,
        format!("{:?} vs {:?}", by_definition, cc.members),
    );
    let y = pa.embedding();
    r.push(
        "representables are members",
        (0..a.len()).all(|x| cc.members.contains(&y.apply(x))),
        "",
    );
    match morita_equivalent(a.clone(), cc.category.clone())? {
        Some(w) => {
            r.push("A is Morita equivalent to A_cc", true, "");
            r.push("transported distributors are inverse", w.distributors_inverse()?, "");
        }
        None => r.push("A is Morita equivalent to A_cc", false, "no isomorphism of skeleta"),
    }
    let cc_ok = non_representable(&PresheafCategory::presheaves(cc.category.clone())?).is_none();
    r.push("A_cc is Cauchy complete", cc_ok, "");
    // Cauchy completeness read through convergence of the left adjoints of members
    let mut all_converge = true;
    let mut graphs_ok = true;
    for &i in &left_adjoint_presheaves(pa) {
        let phi = pa.distributor(i).left_adjoint_candidate();
        match converges(&phi)? {
            Some(f) => graphs_ok &= QDistributor::graph(&f).cells() == phi.cells(),
            None => all_converge = false,
        }
    }
    let representable = non_representable(pa).is_none();
    r.push(
        "Cauchy complete ⟺ every left adjoint into A converges",
        representable == all_converge,
        format!("{representable} vs {all_converge}"),
    );
    r.push("limits have the given graph", graphs_ok, "");
    Ok(r)
}

/// Reflexivity, symmetry and transitivity of Morita equivalence on `cats`.
pub fn morita_relation(cats: &[Arc<QCategory>]) -> Result<LawReport> {
    let mut r = LawReport::new("Morita equivalence is an equivalence relation");
    let n = cats.len();
    let mut eq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            eq[i * n + j] = crate::qcat::same_base(cats[i].base(), cats[j].base())
                && morita_equivalent(cats[i].clone(), cats[j].clone())?.is_some();
        }
    }
    let refl = (0..n).all(|i| eq[i * n + i]);
    let sym = (0..n).all(|i| (0..n).all(|j| eq[i * n + j] == eq[j * n + i]));
    let trans = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(eq[i * n + j] && eq[j * n + k]) || eq[i * n + k])));
    r.push("reflexive", refl, "");
    r.push("symmetric", sym, "");
    r.push("transitive", trans, "");
    Ok(r)
}

/// Suite checks for one category; errors become failed checks.
pub fn category_checks(suite: Suite, a: &Arc<QCategory>) -> Vec<LawReport> {
    let res: Result<Vec<LawReport>> = match suite {
        Suite::Residuation => {
            (|| Ok(vec![quantaloid_laws(a.base()), functor_adjunction_law(a, a)?]))()
        }
        Suite::Yoneda => yoneda_laws(a),
        Suite::Monad => monad_suite(a, false),
        Suite::Kz => monad_suite(a, true),
        Suite::Theorem4 => theorem4_laws(a).map(|r| vec![r]),
        Suite::Morita => morita_laws(a).map(|r| vec![r]),
        Suite::All => Ok(Suite::EACH.iter().flat_map(|&s| category_checks(s, a)).collect()),
    };
    res.unwrap_or_else(|e| {
        let mut r = LawReport::new(format!("{suite} on {}", a.name()));
        r.push("computation", false, e.to_string());
        vec![r]
    })
}

fn failing(reports: &[LawReport]) -> Vec<String> {
    reports.iter().flat_map(|r| r.failures().map(move |c| format!("{}: {} {}", r.subject, c.law, c.detail))).collect()
}

/// Drops objects one at a time while the instance keeps failing.
pub fn minimize(suite: Suite, a: &Arc<QCategory>) -> Arc<QCategory> {
    let mut cur = a.clone();
    'outer: loop {
        for drop in 0..cur.len() {
            let keep: Vec<usize> = (0..cur.len()).filter(|&x| x != drop).collect();
            let smaller = Arc::new(cur.full_subcategory(cur.name(), &keep));
            if !failing(&category_checks(suite, &smaller)).is_empty() {
                cur = smaller;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Whether a corpus instance is small enough for the monad suites.
fn monad_sized(a: &Arc<QCategory>) -> bool {
    PresheafCategory::presheaves(a.clone()).map(|p| p.len() <= 12).unwrap_or(false)
        && PresheafCategory::copresheaves(a.clone()).map(|p| p.len() <= 12).unwrap_or(false)
}

pub fn run_suite(suite: Suite, fx: &Fixtures, corpus: Option<CorpusSpec>) -> SuiteRun {
    let mut run = SuiteRun {
        suite,
        reports: Vec::new(),
        skipped: Vec::new(),
        corpus,
        corpus_checked: 0,
        counterexamples: Vec::new(),
    };
    for s in suite.members() {
        run_fixtures(s, fx, &mut run);
    }
    if let Some(spec) = corpus {
        for (i, a) in spec.instances() {
            let mut failures = Vec::new();
            let mut checked = false;
            for s in suite.members() {
                if matches!(s, Suite::Monad | Suite::Kz) && !monad_sized(&a) {
                    run.skipped.push(format!("{s} on corpus instance {i}: presheaf category above 12 objects"));
                    continue;
                }
                checked = true;
                let f = failing(&category_checks(s, &a));
                if !f.is_empty() {
                    let small = minimize(s, &a);
                    failures.push((s, f, small));
                }
            }
            run.corpus_checked += usize::from(checked);
            if let Some((s, _, small)) = failures.first() {
                let mut ws = Workspace::of_category(small);
                ws.lines.clear();
                run.counterexamples.push(Counterexample {
                    index: i,
                    family: spec.family_of(i),
                    replay: format!(
                        "qcalc laws --builtin --suite {s} --random {} --seed {} --family {} (instance {i})",
                        spec.count, spec.seed, spec.family
                    ),
                    failures: failures.iter().flat_map(|f| f.1.clone()).collect(),
                    instance: serialize_workspace(&ws),
                });
            }
        }
    }
    run
}

fn run_fixtures(suite: Suite, fx: &Fixtures, run: &mut SuiteRun) {
    let push_result = |run: &mut SuiteRun, what: String, res: Result<Vec<LawReport>>| match res {
        Ok(rs) => run.reports.extend(rs),
        Err(e) => run.skipped.push(format!("{what}: {e}")),
    };
    match suite {
        Suite::Residuation => {
            for q in &fx.quantaloids {
                run.reports.push(quantaloid_laws(q));
            }
            push_result(run, "distributor residuation".into(), distributor_galois(&fx.small).map(|r| vec![r]));
            for a in &fx.categories {
                for b in &fx.categories {
                    if crate::qcat::same_base(a.base(), b.base()) {
                        push_result(run, format!("adjunctions {} ⇄ {}", a.name(), b.name()), functor_adjunction_law(a, b).map(|r| vec![r]));
                    }
                }
            }
        }
        Suite::Yoneda | Suite::Monad | Suite::Kz | Suite::Theorem4 => {
            for a in &fx.categories {
                let res = match suite {
                    Suite::Yoneda => yoneda_laws(a),
                    Suite::Monad => monad_suite(a, false),
                    Suite::Kz => monad_suite(a, true),
                    _ => theorem4_laws(a).map(|r| vec![r]),
                };
                push_result(run, format!("{suite} on {}", a.name()), res);
            }
        }
        Suite::Morita => {
            for a in &fx.categories {
                push_result(run, format!("morita on {}", a.name()), morita_laws(a).map(|r| vec![r]));
            }
            push_result(run, "morita relation".into(), morita_relation(&fx.categories).map(|r| vec![r]));
        }
        Suite::All => unreachable!("expanded by members"),
    }
}

/// Compact summary of a run for the table format.
pub fn render_run(run: &SuiteRun) -> String {
    let mut out = String::new();
    for r in &run.reports {
        let ok = r.all_hold();
        out.push_str(&format!("{} {} ({} checks)\n", if ok { "ok  " } else { "FAIL" }, r.subject, r.checks.len()));
        for c in r.failures() {
            out.push_str(&format!("       {}: {}\n", c.law, c.detail));
        }
    }
    for s in &run.skipped {
        out.push_str(&format!("skip {s}\n"));
    }
    if let Some(spec) = run.corpus {
        out.push_str(&format!(
            "corpus seed {} count {} family {}: {} instances checked, {} counterexamples\n",
            spec.seed,
            spec.count,
            spec.family,
            run.corpus_checked,
            run.counterexamples.len()
        ));
    }
    for c in &run.counterexamples {
        out.push_str(&format!("counterexample at instance {} ({})\n  replay: {}\n", c.index, c.family, c.replay));
        for f in &c.failures {
            out.push_str(&format!("  {f}\n"));
        }
        out.push_str("  minimized instance:\n");
        for line in c.instance.lines() {
            out.push_str(&format!("    {line}\n"));
        }
    }
    out.push_str(&format!("suite {}: {}\n", run.suite, if run.passes() { "pass" } else { "FAIL" }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_suites_pass() {
        let fx = Fixtures::builtin();
        for s in [Suite::Residuation, Suite::Yoneda, Suite::Theorem4, Suite::Morita] {
            let run = run_suite(s, &fx, None);
            assert!(run.passes(), "{}", render_run(&run));
            assert!(run.skipped.is_empty(), "{:?}", run.skipped);
        }
    }

    #[test]
    fn enumerations() {
        let x = Arc::new(fixtures::x_f());
        // identity and the two constants; the swap does not preserve homs
        assert_eq!(all_functors(&x, &x).unwrap().len(), 3);
        let s = Arc::new(fixtures::star_f());
        // presheaves on X are exactly the distributors X ⇸ *
        assert_eq!(all_distributors(&x, &s).unwrap().len(), 9);
    }
}
