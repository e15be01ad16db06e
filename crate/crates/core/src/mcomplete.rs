//! Completeness up to Morita equivalence: M-(co)completeness, M-(co)tensors,
//! M-conical (co)completeness, M-(co)continuity, algebra homomorphisms for the
//! presheaf monads, and the free M-cocontinuous extension.
//!
//! Wherever two formulations are known to agree, both are computed and
//! reported as separate routes.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{guard, product, Error, Result};
use crate::presheaf::{dist_images, enumerate, PresheafCategory, Side};
use crate::qcat::{functors_adjoint, QCategory, QFunctor};
use crate::qdist::{compose, left_imp, right_imp, QDistributor};
use crate::report::LawReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoritaReport {
    pub subject: String,
    pub property: String,
    pub verdict: bool,
    pub witness: Option<String>,
    pub notes: Vec<String>,
    /// Independent evaluations; the verdict is their common value.
    pub routes: Vec<(String, bool)>,
}

impl MoritaReport {
    pub fn new(subject: &str, property: &str, verdict: bool, witness: Option<String>) -> Self {
        MoritaReport {
            subject: subject.to_string(),
            property: property.to_string(),
            verdict,
            witness,
            notes: Vec::new(),
            routes: Vec::new(),
        }
    }

    /// Builds the verdict from agreeing routes; disagreement is a false verdict with a note.
    fn from_routes(subject: &str, property: &str, routes: Vec<(String, bool)>) -> Self {
        let first = routes.first().map(|r| r.1).unwrap_or(true);
        let agree = routes.iter().all(|r| r.1 == first);
        let mut r = MoritaReport::new(subject, property, first && agree, None);
        if !agree {
            r.notes.push("routes disagree".into());
            r.witness = Some(routes.iter().map(|(n, v)| format!("{n}: {v}")).collect::<Vec<_>>().join(", "));
        }
        r.routes = routes;
        r
    }

    pub fn routes_agree(&self) -> bool {
        self.routes.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

fn first_difference(lhs: &QDistributor, rhs: &QDistributor) -> Option<String> {
    let (d, c) = (lhs.dom(), lhs.cod());
    for x in 0..d.len() {
        for y in 0..c.len() {
            if lhs.get(x, y) != rhs.get(x, y) {
                return Some(format!(
                    "at ({}, {}): {} ≠ {}",
                    d.objects()[x],
                    c.objects()[y],
                    lhs.cell_name(x, y),
                    rhs.cell_name(x, y)
                ));
            }
        }
    }
    None
}

fn first_not_leq(lhs: &QDistributor, rhs: &QDistributor) -> Option<String> {
    let (d, c) = (lhs.dom(), lhs.cod());
    let q = lhs.base();
    for x in 0..d.len() {
        for y in 0..c.len() {
            if !q.hom(d.ty(x), c.ty(y)).leq(lhs.get(x, y), rhs.get(x, y)) {
                return Some(format!(
                    "at ({}, {}): {} ≰ {}",
                    d.objects()[x],
                    c.objects()[y],
                    lhs.cell_name(x, y),
                    rhs.cell_name(x, y)
                ));
            }
        }
    }
    None
}

/// Cellwise equality of two distributors with the same boundary shape.
pub fn same_cells(lhs: &QDistributor, rhs: &QDistributor) -> bool {
    lhs.cells() == rhs.cells()
}

/// `(Y_A)^♮: PA ⇸ A` is a left adjoint.
pub fn m_cocomplete_in(pa: &PresheafCategory) -> MoritaReport {
    let c = QDistributor::cograph(&pa.embedding());
    let s = c.star();
    let unit = compose(&s, &c).expect("composable");
    let id = QDistributor::identity(pa.category().clone());
    let w = first_not_leq(&id, &unit);
    MoritaReport::new(pa.base().name(), "m-cocomplete", w.is_none(), w.map(|w| format!("unit fails {w}")))
}

pub fn is_m_cocomplete(a: Arc<QCategory>) -> Result<MoritaReport> {
    Ok(m_cocomplete_in(&PresheafCategory::presheaves(a)?))
}

/// `(Y†_A)_♮: A ⇸ P†A` is a right adjoint.
pub fn m_complete_in(pda: &PresheafCategory) -> MoritaReport {
    let g = QDistributor::graph(&pda.embedding());
    let l = g.left_adjoint_candidate();
    let counit = compose(&g, &l).expect("composable");
    let id = QDistributor::identity(pda.category().clone());
    let w = first_not_leq(&id, &counit);
    MoritaReport::new(pda.base().name(), "m-complete", w.is_none(), w.map(|w| format!("counit fails {w}")))
}

pub fn is_m_complete(a: Arc<QCategory>) -> Result<MoritaReport> {
    Ok(m_complete_in(&PresheafCategory::copresheaves(a)?))
}

/// `ub: PA → P†A`, `lb: P†A → PA` and the checks around them.
#[derive(Debug, Clone)]
pub struct UbLb {
    pub ub: QFunctor,
    pub lb: QFunctor,
    pub report: LawReport,
}

pub fn ub_lb(pa: &PresheafCategory, pda: &PresheafCategory) -> Result<UbLb> {
    let a = pa.base().clone();
    if pa.side() != Side::Presheaf || pda.side() != Side::Copresheaf || !pda.base().same_as(&a) {
        return Err(Error::Mismatch("ub/lb need PA and P†A over the same A".into()));
    }
    let id = QDistributor::identity(a.clone());
    let ub_map = (0..pa.len())
        .map(|i| pda.lookup(&left_imp(&id, &pa.distributor(i))?))
        .collect::<Result<Vec<_>>>()?;
    let lb_map = (0..pda.len())
        .map(|j| pa.lookup(&right_imp(&pda.distributor(j), &id)?))
        .collect::<Result<Vec<_>>>()?;
    let ub = QFunctor::new("ub", pa.category().clone(), pda.category().clone(), ub_map)?;
    let lb = QFunctor::new("lb", pda.category().clone(), pa.category().clone(), lb_map)?;
    let mut report = LawReport::new(format!("ub ⊣ lb on {}", a.name()));
    report.push("ub ⊣ lb", functors_adjoint(&ub, &lb)?, "");
    // ub(μ)(a) = (Y_A)^♮(μ, a) and lb(λ)(a) = (Y†_A)_♮(a, λ)
    let y = pa.embedding();
    let yd = pda.embedding();
    let ub_y = (0..pa.len()).find(|&i| (0..a.len()).any(|x| pda.member(ub.apply(i)).values[x] != pa.hom(i, y.apply(x))));
    report.push("ub(μ)(a) = (Y_A)^♮(μ,a)", ub_y.is_none(), ub_y.map(|i| pa.label(i).to_string()).unwrap_or_default());
    let lb_y = (0..pda.len()).find(|&j| (0..a.len()).any(|x| pa.member(lb.apply(j)).values[x] != pda.hom(yd.apply(x), j)));
    report.push("lb(λ)(a) = (Y†_A)_♮(a,λ)", lb_y.is_none(), lb_y.map(|j| pda.label(j).to_string()).unwrap_or_default());
    Ok(UbLb { ub, lb, report })
}

/// `(A(a,−))^♮: P|a| ⇸ A`, `(f, b) ↦ A(a,b)↙f`.
pub fn tensor_distributor(a: &Arc<QCategory>, x: usize, p: &PresheafCategory) -> QDistributor {
    let q = a.base().clone();
    let tx = a.ty(x);
    QDistributor::from_fn(&format!("A({},−)^♮", a.objects()[x]), p.category().clone(), a.clone(), |i, b| {
        let m = p.member(i);
        q.limp(tx, m.ty, a.ty(b), a.hom(x, b), m.values[0])
    })
}

/// `(A(−,a))_♮: A ⇸ P†|a|`, `(b, g) ↦ g↘A(b,a)`.
pub fn cotensor_distributor(a: &Arc<QCategory>, x: usize, p: &PresheafCategory) -> QDistributor {
    let q = a.base().clone();
    let tx = a.ty(x);
    QDistributor::from_fn(&format!("A(−,{})_♮", a.objects()[x]), a.clone(), p.category().clone(), |b, j| {
        let m = p.member(j);
        q.rimp(a.ty(b), m.ty, tx, m.values[0], a.hom(b, x))
    })
}

pub fn is_m_tensored(a: Arc<QCategory>) -> Result<MoritaReport> {
    let q = a.base().clone();
    let mut bad = None;
    for x in 0..a.len() {
        let p = PresheafCategory::presheaves(Arc::new(QCategory::star(q.clone(), a.ty(x))))?;
        if !tensor_distributor(&a, x, &p).is_left_adjoint() {
            bad = Some(format!("object {}", a.objects()[x]));
            break;
        }
    }
    Ok(MoritaReport::new(a.name(), "m-tensored", bad.is_none(), bad))
}

pub fn is_m_cotensored(a: Arc<QCategory>) -> Result<MoritaReport> {
    let q = a.base().clone();
    let mut bad = None;
    for x in 0..a.len() {
        let p = PresheafCategory::copresheaves(Arc::new(QCategory::star(q.clone(), a.ty(x))))?;
        if !cotensor_distributor(&a, x, &p).is_right_adjoint() {
            bad = Some(format!("object {}", a.objects()[x]));
            break;
        }
    }
    Ok(MoritaReport::new(a.name(), "m-cotensored", bad.is_none(), bad))
}

/// Closes `rows` under pairwise meets; `meet` combines two rows of the same type.
fn meet_closure(mut rows: BTreeSet<Vec<usize>>, meet: impl Fn(&[usize], &[usize]) -> Vec<usize>) -> BTreeSet<Vec<usize>> {
    let mut frontier: Vec<Vec<usize>> = rows.iter().cloned().collect();
    while let Some(r) = frontier.pop() {
        let current: Vec<Vec<usize>> = rows.iter().cloned().collect();
        for s in current {
            let m = meet(&r, &s);
            if rows.insert(m.clone()) {
                frontier.push(m);
            }
        }
    }
    rows
}

fn conical(a: Arc<QCategory>, side: Side, include_empty: bool) -> Result<MoritaReport> {
    let q = a.base().clone();
    let n = a.len();
    let (property, kind) = match side {
        Side::Copresheaf => ("m-conically-cocomplete", "left"),
        Side::Presheaf => ("m-conically-complete", "right"),
    };
    let mut bad = None;
    'types: for t in 0..q.len() {
        let star = Arc::new(QCategory::star(q.clone(), t));
        let lat = |b: usize| match side {
            Side::Copresheaf => q.hom(t, a.ty(b)),
            Side::Presheaf => q.hom(a.ty(b), t),
        };
        guard(format!("conical families of type {} on {}", q.objects()[t], a.name()), product((0..n).map(|b| lat(b).len())))?;
        let to_dist = |row: &[usize]| match side {
            Side::Copresheaf => QDistributor::new("λ", star.clone(), a.clone(), row.to_vec()),
            Side::Presheaf => QDistributor::new("μ", a.clone(), star.clone(), row.to_vec()),
        }
        .expect("row fits");
        let adjoint = |row: &[usize]| match side {
            Side::Copresheaf => to_dist(row).is_left_adjoint(),
            Side::Presheaf => to_dist(row).is_right_adjoint(),
        };
        let mut rows = BTreeSet::new();
        for x in 0..n {
            let tx = a.ty(x);
            let arrows = match side {
                Side::Copresheaf => q.hom(tx, t).len(),
                Side::Presheaf => q.hom(t, tx).len(),
            };
            for f in 0..arrows {
                // A(x,b)↙f, or g↘A(b,x)
                let row: Vec<usize> = (0..n)
                    .map(|b| match side {
                        Side::Copresheaf => q.limp(tx, t, a.ty(b), a.hom(x, b), f),
                        Side::Presheaf => q.rimp(a.ty(b), t, tx, f, a.hom(b, x)),
                    })
                    .collect();
                if adjoint(&row) {
                    rows.insert(row);
                }
            }
        }
        if include_empty {
            rows.insert((0..n).map(|b| lat(b).top()).collect());
        }
        let closure = meet_closure(rows, |r, s| (0..n).map(|b| lat(b).meet2(r[b], s[b])).collect());
        for row in &closure {
            if !adjoint(row) {
                let names: Vec<&str> = (0..n).map(|b| lat(b).element_name(row[b])).collect();
                bad = Some(format!(
                    "meet ({}) of type {} is not a {kind} adjoint",
                    names.join(","),
                    q.objects()[t]
                ));
                break 'types;
            }
        }
    }
    let mut r = MoritaReport::new(a.name(), property, bad.is_none(), bad);
    r.notes.push(format!("empty family {}", if include_empty { "included" } else { "excluded" }));
    Ok(r)
}

pub fn is_m_conically_cocomplete(a: Arc<QCategory>, include_empty: bool) -> Result<MoritaReport> {
    conical(a, Side::Copresheaf, include_empty)
}

pub fn is_m_conically_complete(a: Arc<QCategory>, include_empty: bool) -> Result<MoritaReport> {
    conical(a, Side::Presheaf, include_empty)
}

/// Left adjointness of `ζ` and M-cocompleteness of both ends.
fn hom_preconditions(zeta: &QDistributor) -> Result<(PresheafCategory, PresheafCategory)> {
    if !zeta.is_left_adjoint() {
        return Err(Error::NotLeftAdjoint(zeta.name.clone()));
    }
    let pa = PresheafCategory::presheaves(zeta.dom().clone())?;
    if !m_cocomplete_in(&pa).verdict {
        return Err(Error::NotMCocomplete(zeta.dom().name().to_string()));
    }
    let pb = PresheafCategory::presheaves(zeta.cod().clone())?;
    if !m_cocomplete_in(&pb).verdict {
        return Err(Error::NotMCocomplete(zeta.cod().name().to_string()));
    }
    Ok((pa, pb))
}

/// `ζ` is a right adjoint.
pub fn is_m_cocontinuous(zeta: &QDistributor) -> Result<MoritaReport> {
    hom_preconditions(zeta)?;
    let v = zeta.is_right_adjoint();
    let w = (!v).then(|| format!("{} has no left adjoint", zeta.name));
    Ok(MoritaReport::new(&zeta.name, "m-cocontinuous", v, w))
}

/// `ζ*` is a left adjoint.
pub fn is_m_continuous(zeta: &QDistributor) -> Result<MoritaReport> {
    hom_preconditions(zeta)?;
    let v = zeta.star().is_left_adjoint();
    let w = (!v).then(|| format!("{}* is not a left adjoint", zeta.name));
    Ok(MoritaReport::new(&zeta.name, "m-continuous", v, w))
}

/// `ζ` as a morphism of P̂-algebras: the square `(Y_B)^♮∘(ζ→)_♮ = ζ∘(Y_A)^♮` and right adjointness.
pub fn is_phat_algebra_hom(zeta: &QDistributor) -> Result<MoritaReport> {
    let (pa, pb) = hom_preconditions(zeta)?;
    let im = dist_images(zeta, Some((&pa, &pb)), None)?;
    let (fwd, _) = im.forward.expect("requested");
    let lhs = compose(&QDistributor::cograph(&pb.embedding()), &QDistributor::graph(&fwd))?;
    let rhs = compose(zeta, &QDistributor::cograph(&pa.embedding()))?;
    let square = same_cells(&lhs, &rhs);
    let mut r = MoritaReport::from_routes(
        &zeta.name,
        "phat-hom",
        vec![("square".into(), square), ("right adjoint".into(), zeta.is_right_adjoint())],
    );
    if !square && r.witness.is_none() {
        r.witness = first_difference(&lhs, &rhs).map(|d| format!("square {d}"));
    }
    Ok(r)
}

/// `Θ(y, λ) = P†A(ζ*(y,−), λ)`, `B ⇸ P†A`.
fn theta(zs: &QDistributor, pda: &PresheafCategory) -> QDistributor {
    let q = zs.base().clone();
    let (b, a) = (zs.dom().clone(), zs.cod().clone());
    QDistributor::from_fn("Θ", b.clone(), pda.category().clone(), |y, j| {
        let m = pda.member(j);
        q.hom(b.ty(y), m.ty)
            .meet((0..a.len()).map(|x| q.rimp(b.ty(y), m.ty, a.ty(x), m.values[x], zs.get(y, x))))
    })
}

/// `ζ` as a morphism of P̂†-algebras: the square, the lemma equation `ζ∘φ = B↙Θ`, and `ζ*` left adjoint.
pub fn is_pdag_algebra_hom(zeta: &QDistributor) -> Result<MoritaReport> {
    hom_preconditions(zeta)?;
    let (a, b) = (zeta.dom().clone(), zeta.cod().clone());
    let pda = PresheafCategory::copresheaves(a.clone())?;
    let pdb = PresheafCategory::copresheaves(b.clone())?;
    let im = dist_images(zeta, None, Some((&pda, &pdb)))?;
    let (_, cof) = im.co.expect("requested");
    let ida = QDistributor::identity(a);
    let idb = QDistributor::identity(b.clone());
    // φ = A↙(Y†_A)_♮ and ψ = B↙(Y†_B)_♮
    let phi = left_imp(&ida, &QDistributor::graph(&pda.embedding()))?;
    let psi = left_imp(&idb, &QDistributor::graph(&pdb.embedding()))?;
    let lhs = compose(&psi, &QDistributor::graph(&cof))?;
    let rhs = compose(zeta, &phi)?;
    let square = same_cells(&lhs, &rhs);
    let lemma_rhs = left_imp(&idb, &theta(&im.zeta_star, &pda))?;
    let lemma = same_cells(&rhs, &lemma_rhs);
    let mut r = MoritaReport::from_routes(
        &zeta.name,
        "pdag-hom",
        vec![
            ("square".into(), square),
            ("ζ∘φ = B↙Θ".into(), lemma),
            ("ζ* left adjoint".into(), im.zeta_star.is_left_adjoint()),
        ],
    );
    if !lemma {
        r.notes.push(format!("ζ∘φ vs B↙Θ {}", first_difference(&rhs, &lemma_rhs).unwrap_or_default()));
    }
    Ok(r)
}

/// For a left adjoint `ζ`: the equation `(ζ∘(Y_A)^♮)(μ,y) = PA(μ, ζ(−,y))` holds iff `ζ` is a right
/// adjoint, and `((Y†_A)_♮∘ζ*)(y,λ) = P†A(ζ*(y,−), λ)` holds iff `ζ*` is a left adjoint.
pub fn check_lemma_th(zeta: &QDistributor) -> Result<LawReport> {
    if !zeta.is_left_adjoint() {
        return Err(Error::NotLeftAdjoint(zeta.name.clone()));
    }
    let q = zeta.base().clone();
    let (a, b) = (zeta.dom().clone(), zeta.cod().clone());
    let pa = PresheafCategory::presheaves(a.clone())?;
    let pda = PresheafCategory::copresheaves(a.clone())?;
    let lhs = compose(zeta, &QDistributor::cograph(&pa.embedding()))?;
    let rhs = QDistributor::from_fn("PA(−, ζ(−,y))", pa.category().clone(), b.clone(), |i, y| {
        let m = pa.member(i);
        q.hom(m.ty, b.ty(y))
            .meet((0..a.len()).map(|x| q.limp(a.ty(x), m.ty, b.ty(y), zeta.get(x, y), m.values[x])))
    });
    let zs = zeta.star();
    let lhs2 = compose(&QDistributor::graph(&pda.embedding()), &zs)?;
    let rhs2 = theta(&zs, &pda);
    let ra = same_cells(&lhs, &rhs);
    let la = same_cells(&lhs2, &rhs2);
    let mut r = LawReport::new(format!("adjointness equations for {}", zeta.name));
    r.push(
        "ra-eq ⟺ ζ right adjoint",
        ra == zeta.is_right_adjoint(),
        first_difference(&lhs, &rhs).unwrap_or_default(),
    );
    r.push(
        "la-eq ⟺ ζ* left adjoint",
        la == zs.is_left_adjoint(),
        first_difference(&lhs2, &rhs2).unwrap_or_default(),
    );
    Ok(r)
}

#[derive(Debug, Clone)]
pub struct FreeExtension {
    pub eta: QDistributor,
    pub report: LawReport,
    /// Number of M-cocontinuous left adjoints factoring `ζ`, when uniqueness was checked.
    pub factoring: Option<usize>,
}

/// `η = (Y_B)^♮∘(ζ→)_♮: PA ⇸ B`, the extension of a left adjoint `ζ: A ⇸ B` along `(Y_A)_♮`.
pub fn free_extension(zeta: &QDistributor, uniqueness: bool) -> Result<FreeExtension> {
    if !zeta.is_left_adjoint() {
        return Err(Error::NotLeftAdjoint(zeta.name.clone()));
    }
    let (a, b) = (zeta.dom().clone(), zeta.cod().clone());
    let pb = PresheafCategory::presheaves(b.clone())?;
    if !m_cocomplete_in(&pb).verdict {
        return Err(Error::NotMCocomplete(b.name().to_string()));
    }
    let pa = PresheafCategory::presheaves(a.clone())?;
    let im = dist_images(zeta, Some((&pa, &pb)), None)?;
    let (fwd, _) = im.forward.expect("requested");
    let eta = compose(&QDistributor::cograph(&pb.embedding()), &QDistributor::graph(&fwd))?.with_name("η");
    let ya = QDistributor::graph(&pa.embedding());
    let fact = compose(&eta, &ya)?;
    let mut report = LawReport::new(format!("free extension of {}", zeta.name));
    report.push("η∘(Y_A)_♮ = ζ", same_cells(&fact, zeta), first_difference(&fact, zeta).unwrap_or_default());
    report.push("η left adjoint", eta.is_left_adjoint(), "");
    // PA is cocomplete, hence M-cocomplete
    report.push("η M-cocontinuous", eta.is_right_adjoint(), "");
    let factoring = if uniqueness { Some(count_factoring(zeta, &pa)?) } else { None };
    if let Some(k) = factoring {
        report.push("unique factoring extension", k == 1, format!("{k} found"));
    }
    Ok(FreeExtension { eta, report, factoring })
}

/// Counts M-cocontinuous left adjoints `PA ⇸ B` whose restriction along `(Y_A)_♮` is `ζ`.
///
/// Each column `η(−,y)` is a presheaf on `PA` whose value at `Y(a)` is `ζ(a,y)`.
fn count_factoring(zeta: &QDistributor, pa: &PresheafCategory) -> Result<usize> {
    let (a, b) = (zeta.dom().clone(), zeta.cod().clone());
    let pac = pa.category().clone();
    let y = pa.embedding();
    let mut columns: Vec<Vec<Vec<usize>>> = Vec::with_capacity(b.len());
    for yb in 0..b.len() {
        let all = enumerate(&pac, Side::Presheaf, b.ty(yb))?;
        columns.push(
            all.into_iter()
                .filter(|c| (0..a.len()).all(|x| c[y.apply(x)] == zeta.get(x, yb)))
                .collect(),
        );
    }
    guard(format!("extensions of {}", zeta.name), product(columns.iter().map(|c| c.len())))?;
    let mut count = 0;
    let mut choice = vec![0usize; b.len()];
    loop {
        if columns.iter().all(|c| !c.is_empty()) {
            let cand = QDistributor::from_fn("η'", pac.clone(), b.clone(), |i, yb| columns[yb][choice[yb]][i]);
            if cand.is_valid() && cand.is_left_adjoint() && cand.is_right_adjoint() {
                count += 1;
            }
        } else {
            return Ok(0);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == b.len() {
                return Ok(count);
            }
            choice[k] += 1;
            if choice[k] < columns[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// The witness from the proof that M-cocomplete implies M-complete:
/// `ψ = (Y_A)^♮∘(lb)_♮` satisfies `ψ* = (Y†_A)_♮`.
pub fn m_complete_witness(pa: &PresheafCategory, pda: &PresheafCategory) -> Result<bool> {
    let ul = ub_lb(pa, pda)?;
    let psi = compose(&QDistributor::cograph(&pa.embedding()), &QDistributor::graph(&ul.lb))?;
    Ok(same_cells(&psi.star(), &QDistributor::graph(&pda.embedding())))
}

/// `⋀_a (A(a,−))^♮(μ(a),−) = (Y_A)^♮(μ,−)` for every presheaf `μ`.
pub fn conical_identity(pa: &PresheafCategory) -> LawReport {
    let a = pa.base();
    let q = a.base();
    let y = pa.embedding();
    let mut r = LawReport::new(format!("conical decomposition on {}", a.name()));
    let bad = (0..pa.len()).find(|&i| {
        let m = pa.member(i);
        (0..a.len()).any(|b| {
            let lhs = q
                .hom(m.ty, a.ty(b))
                .meet((0..a.len()).map(|x| q.limp(a.ty(x), m.ty, a.ty(b), a.hom(x, b), m.values[x])));
            lhs != pa.hom(i, y.apply(b))
        })
    });
    r.push("⋀_a A(a,−)↙μ(a) = PA(μ,Y−)", bad.is_none(), bad.map(|i| pa.label(i).to_string()).unwrap_or_default());
    r
}

/// `A(a,b)↙f = (Y_A)^♮(f∘Y_A(a), b)` for every object `a` and arrow `f` out of `|a|`.
pub fn cp_tensor_identity(pa: &PresheafCategory) -> LawReport {
    let a = pa.base();
    let q = a.base();
    let y = pa.embedding();
    let mut r = LawReport::new(format!("tensor decomposition on {}", a.name()));
    let mut bad = None;
    'outer: for x in 0..a.len() {
        let tx = a.ty(x);
        for t in 0..q.len() {
            for f in 0..q.hom(tx, t).len() {
                let vals: Vec<usize> = (0..a.len()).map(|c| q.comp(a.ty(c), tx, t, f, a.hom(c, x))).collect();
                let Some(i) = pa.find(t, &vals) else {
                    bad = Some(format!("f∘Y({}) is not a presheaf", a.objects()[x]));
                    break 'outer;
                };
                if (0..a.len()).any(|b| q.limp(tx, t, a.ty(b), a.hom(x, b), f) != pa.hom(i, y.apply(b))) {
                    bad = Some(format!("a = {}, f = {}", a.objects()[x], q.hom(tx, t).element_name(f)));
                    break 'outer;
                }
            }
        }
    }
    r.push("A(a,−)↙f = PA(f∘Y(a), Y−)", bad.is_none(), bad.unwrap_or_default());
    r
}
