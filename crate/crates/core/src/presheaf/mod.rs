//! Enumerated presheaf and copresheaf categories, Yoneda embeddings,
//! suprema and infima, tensors and cotensors.
//!
//! A presheaf `μ: A ⇸ *_X` is stored as its column `μ(a) ∈ Q(|a|, X)`; a
//! copresheaf `λ: *_X ⇸ A` as its row `λ(a) ∈ Q(X, |a|)`. Members are listed
//! type by type, each block in lexicographic order with the first object most
//! significant and lattice elements in declaration order.

mod images;
mod monad;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub use images::{dist_images, functor_images, pdag_hat, phat, DistImages, FunctorImages};
pub use monad::{kz_check, monad_components, monad_laws, MonadComponents};

use crate::error::{guard, product, Error, Result};
use crate::qcat::{QCategory, QFunctor};
use crate::qdist::{self, QDistributor};
use crate::quantaloid::Arrow;
use crate::report::LawReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Presheaf,
    Copresheaf,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Presheaf => "presheaves",
            Side::Copresheaf => "copresheaves",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Member {
    pub ty: usize,
    pub values: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PresheafCategory {
    base: Arc<QCategory>,
    side: Side,
    members: Vec<Member>,
    category: Arc<QCategory>,
    index: HashMap<Member, usize>,
    stars: Vec<Arc<QCategory>>,
}

/// Sizes of the value lattices of a (co)presheaf of type `x` on `base`.
fn value_sizes(base: &QCategory, side: Side, x: usize) -> Vec<usize> {
    let q = base.base();
    (0..base.len())
        .map(|a| match side {
            Side::Presheaf => q.hom(base.ty(a), x).len(),
            Side::Copresheaf => q.hom(x, base.ty(a)).len(),
        })
        .collect()
}

/// Checks the action axioms between positions `a` and `b` (either order, and `a = b`).
fn compatible(base: &QCategory, side: Side, x: usize, v: &[usize], a: usize, b: usize) -> bool {
    let q = base.base();
    let (ta, tb) = (base.ty(a), base.ty(b));
    match side {
        // μ(a)∘A(b,a) ≤ μ(b) and μ(b)∘A(a,b) ≤ μ(a)
        Side::Presheaf => {
            q.hom(tb, x).leq(q.comp(tb, ta, x, v[a], base.hom(b, a)), v[b])
                && q.hom(ta, x).leq(q.comp(ta, tb, x, v[b], base.hom(a, b)), v[a])
        }
        // A(b,a)∘λ(b) ≤ λ(a) and A(a,b)∘λ(a) ≤ λ(b)
        Side::Copresheaf => {
            q.hom(x, ta).leq(q.comp(x, tb, ta, base.hom(b, a), v[b]), v[a])
                && q.hom(x, tb).leq(q.comp(x, ta, tb, base.hom(a, b), v[a]), v[b])
        }
    }
}

/// All valid (co)presheaves of type `x`, in canonical order.
pub fn enumerate(base: &QCategory, side: Side, x: usize) -> Result<Vec<Vec<usize>>> {
    let sizes = value_sizes(base, side, x);
    guard(format!("{side} of type {} on {}", base.base().objects()[x], base.name()), product(sizes.iter().copied()))?;
    let mut out = Vec::new();
    let mut cur = vec![0; base.len()];
    fn rec(base: &QCategory, side: Side, x: usize, sizes: &[usize], pos: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == sizes.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..sizes[pos] {
            cur[pos] = v;
            if (0..=pos).all(|b| compatible(base, side, x, cur, pos, b)) {
                rec(base, side, x, sizes, pos + 1, cur, out);
            }
        }
    }
    rec(base, side, x, &sizes, 0, &mut cur, &mut out);
    Ok(out)
}

pub fn enumerate_presheaves(base: &QCategory, x: usize) -> Result<Vec<Vec<usize>>> {
    enumerate(base, Side::Presheaf, x)
}

pub fn enumerate_copresheaves(base: &QCategory, x: usize) -> Result<Vec<Vec<usize>>> {
    enumerate(base, Side::Copresheaf, x)
}

impl PresheafCategory {
    /// `PA`, with `PA(μ,μ') = μ'↙μ`.
    pub fn presheaves(base: Arc<QCategory>) -> Result<Self> {
        Self::build(base, Side::Presheaf)
    }

    /// `P†A`, with `P†A(λ,λ') = λ'↘λ`.
    pub fn copresheaves(base: Arc<QCategory>) -> Result<Self> {
        Self::build(base, Side::Copresheaf)
    }

    pub fn build(base: Arc<QCategory>, side: Side) -> Result<Self> {
        let q = base.base().clone();
        let total: u128 = (0..q.len())
            .map(|x| product(value_sizes(&base, side, x)))
            .fold(0u128, |a, b| a.saturating_add(b));
        guard(format!("{side} on {}", base.name()), total)?;
        let mut members = Vec::new();
        for x in 0..q.len() {
            for values in enumerate(&base, side, x)? {
                members.push(Member { ty: x, values });
            }
        }
        let n = base.len();
        let m = members.len();
        let mut hom = vec![0; m * m];
        for (i, mi) in members.iter().enumerate() {
            for (j, mj) in members.iter().enumerate() {
                let l = q.hom(mi.ty, mj.ty);
                hom[i * m + j] = match side {
                    Side::Presheaf => l.meet((0..n).map(|a| q.limp(base.ty(a), mi.ty, mj.ty, mj.values[a], mi.values[a]))),
                    Side::Copresheaf => {
                        l.meet((0..n).map(|a| q.rimp(mi.ty, mj.ty, base.ty(a), mj.values[a], mi.values[a])))
                    }
                };
            }
        }
        let names = members.iter().map(|mb| member_label(&base, side, mb)).collect();
        let types = members.iter().map(|mb| mb.ty).collect();
        let cname = match side {
            Side::Presheaf => format!("P({})", base.name()),
            Side::Copresheaf => format!("P†({})", base.name()),
        };
        let category = Arc::new(QCategory::new(&cname, q.clone(), names, types, hom)?);
        let index = members.iter().cloned().enumerate().map(|(i, mb)| (mb, i)).collect();
        let stars = (0..q.len()).map(|x| Arc::new(QCategory::star(q.clone(), x))).collect();
        Ok(PresheafCategory { base, side, members, category, index, stars })
    }

    pub fn base(&self) -> &Arc<QCategory> {
        &self.base
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Member {
        &self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The enumerated category itself.
    pub fn category(&self) -> &Arc<QCategory> {
        &self.category
    }

    pub fn star(&self, x: usize) -> &Arc<QCategory> {
        &self.stars[x]
    }

    pub fn find(&self, ty: usize, values: &[usize]) -> Option<usize> {
        self.index.get(&Member { ty, values: values.to_vec() }).copied()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.category.objects()[i]
    }

    /// Member `i` as a distributor `A ⇸ *_X` or `*_X ⇸ A`.
    pub fn distributor(&self, i: usize) -> QDistributor {
        let mb = &self.members[i];
        let star = self.stars[mb.ty].clone();
        let name = self.label(i).to_string();
        match self.side {
            Side::Presheaf => QDistributor::new(&name, self.base.clone(), star, mb.values.clone()),
            Side::Copresheaf => QDistributor::new(&name, star, self.base.clone(), mb.values.clone()),
        }
        .expect("members fit their boundary")
    }

    /// Index of the member represented by `d`, if `d` has the right boundary and is listed.
    pub fn lookup(&self, d: &QDistributor) -> Result<usize> {
        let (other, star) = match self.side {
            Side::Presheaf => (d.dom(), d.cod()),
            Side::Copresheaf => (d.cod(), d.dom()),
        };
        if !other.same_as(&self.base) || star.len() != 1 {
            return Err(Error::Mismatch(format!("`{}` is not a {} on {}", d.name, self.side, self.base.name())));
        }
        let values = match self.side {
            Side::Presheaf => d.column(0),
            Side::Copresheaf => d.row(0).to_vec(),
        };
        let ty = star.ty(0);
        self.find(ty, &values).ok_or_else(|| Error::InvalidDistributor {
            name: d.name.clone(),
            reason: format!("not a valid member of {}", self.category.name()),
        })
    }

    /// `PA(i,j)` (or `P†A(i,j)`).
    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.category.hom(i, j)
    }

    /// `Y_A(a) = A(-,a)` or `Y†_A(a) = A(a,-)`, depending on the side.
    pub fn embedding(&self) -> QFunctor {
        let a = &self.base;
        let map = (0..a.len())
            .map(|x| {
                let values: Vec<usize> = match self.side {
                    Side::Presheaf => (0..a.len()).map(|b| a.hom(b, x)).collect(),
                    Side::Copresheaf => (0..a.len()).map(|b| a.hom(x, b)).collect(),
                };
                self.find(a.ty(x), &values).expect("representables are valid")
            })
            .collect();
        let name = match self.side {
            Side::Presheaf => format!("Y_{}", a.name()),
            Side::Copresheaf => format!("Y†_{}", a.name()),
        };
        QFunctor::new(&name, a.clone(), self.category.clone(), map).expect("well typed")
    }

    /// `sup_PA(Φ) = Φ∘(Y_A)_♮` for a presheaf `Φ` on `PA`.
    pub fn sup_of(&self, phi: &QDistributor) -> Result<usize> {
        self.expect_side(Side::Presheaf)?;
        let g = QDistributor::graph(&self.embedding());
        self.lookup(&qdist::compose(phi, &g)?)
    }

    /// `inf_P†A(Ψ) = (Y†_A)^♮∘Ψ` for a copresheaf `Ψ` on `P†A`.
    pub fn inf_of(&self, psi: &QDistributor) -> Result<usize> {
        self.expect_side(Side::Copresheaf)?;
        let c = QDistributor::cograph(&self.embedding());
        self.lookup(&qdist::compose(&c, psi)?)
    }

    fn expect_side(&self, side: Side) -> Result<()> {
        if self.side != side {
            return Err(Error::Mismatch(format!("{} expects {side}", self.category.name())));
        }
        Ok(())
    }

    /// `sup_PA: PPA → PA`; `outer` must be the presheaf category of `self.category()`.
    pub fn sup_functor(&self, outer: &PresheafCategory) -> Result<QFunctor> {
        self.expect_side(Side::Presheaf)?;
        if outer.side != Side::Presheaf || !outer.base.same_as(&self.category) {
            return Err(Error::Mismatch("sup needs the presheaf category of PA".into()));
        }
        let g = QDistributor::graph(&self.embedding());
        let map = (0..outer.len())
            .map(|i| self.lookup(&qdist::compose(&outer.distributor(i), &g)?))
            .collect::<Result<Vec<_>>>()?;
        QFunctor::new(&format!("sup_{}", self.category.name()), outer.category.clone(), self.category.clone(), map)
    }

    /// `inf_P†A: P†P†A → P†A`; `outer` must be the copresheaf category of `self.category()`.
    pub fn inf_functor(&self, outer: &PresheafCategory) -> Result<QFunctor> {
        self.expect_side(Side::Copresheaf)?;
        if outer.side != Side::Copresheaf || !outer.base.same_as(&self.category) {
            return Err(Error::Mismatch("inf needs the copresheaf category of P†A".into()));
        }
        let c = QDistributor::cograph(&self.embedding());
        let map = (0..outer.len())
            .map(|i| self.lookup(&qdist::compose(&c, &outer.distributor(i))?))
            .collect::<Result<Vec<_>>>()?;
        QFunctor::new(&format!("inf_{}", self.category.name()), outer.category.clone(), self.category.clone(), map)
    }

    /// Both Yoneda equalities for every object and member of this side.
    pub fn check_yoneda_lemma(&self) -> LawReport {
        let a = &self.base;
        let y = self.embedding();
        let mut r = LawReport::new(format!("Yoneda lemma on {}", a.name()));
        for x in 0..a.len() {
            for i in 0..self.len() {
                let mb = &self.members[i];
                let (lhs, law) = match self.side {
                    Side::Presheaf => (self.hom(y.apply(x), i), "PA(Y(a), μ) = μ(a)"),
                    Side::Copresheaf => (self.hom(i, y.apply(x)), "P†A(λ, Y†(a)) = λ(a)"),
                };
                let holds = lhs == mb.values[x];
                r.push(
                    law,
                    holds,
                    if holds {
                        String::new()
                    } else {
                        format!("a = {}, member {}", a.objects()[x], self.label(i))
                    },
                );
            }
        }
        r
    }
}

/// Label of a member: its values in object order, with the type appended when the
/// base quantaloid has more than one object.
pub fn member_label(base: &QCategory, side: Side, mb: &Member) -> String {
    let q = base.base();
    let vals: Vec<&str> = (0..base.len())
        .map(|a| match side {
            Side::Presheaf => q.hom(base.ty(a), mb.ty).element_name(mb.values[a]),
            Side::Copresheaf => q.hom(mb.ty, base.ty(a)).element_name(mb.values[a]),
        })
        .collect();
    if q.len() > 1 {
        format!("({}):{}", vals.join(","), q.objects()[mb.ty])
    } else {
        format!("({})", vals.join(","))
    }
}

/// `sup_A: PA → A` when every presheaf has a supremum; least-index ties.
pub fn find_sup_functor(pa: &PresheafCategory) -> Option<QFunctor> {
    let a = pa.base();
    let y = pa.embedding();
    let mut map = Vec::with_capacity(pa.len());
    for i in 0..pa.len() {
        let ty = pa.member(i).ty;
        // A(s,-) = PA(μ, Y(-))
        let s = (0..a.len()).find(|&s| a.ty(s) == ty && (0..a.len()).all(|b| a.hom(s, b) == pa.hom(i, y.apply(b))))?;
        map.push(s);
    }
    QFunctor::new(&format!("sup_{}", a.name()), pa.category().clone(), a.clone(), map).ok()
}

/// `inf_A: P†A → A` when every copresheaf has an infimum; least-index ties.
pub fn find_inf_functor(pda: &PresheafCategory) -> Option<QFunctor> {
    let a = pda.base();
    let y = pda.embedding();
    let mut map = Vec::with_capacity(pda.len());
    for i in 0..pda.len() {
        let ty = pda.member(i).ty;
        // A(-,s) = P†A(Y†(-), λ)
        let s = (0..a.len()).find(|&s| a.ty(s) == ty && (0..a.len()).all(|b| a.hom(b, s) == pda.hom(y.apply(b), i)))?;
        map.push(s);
    }
    QFunctor::new(&format!("inf_{}", a.name()), pda.category().clone(), a.clone(), map).ok()
}

pub fn is_cocomplete(a: Arc<QCategory>) -> Result<bool> {
    Ok(find_sup_functor(&PresheafCategory::presheaves(a)?).is_some())
}

pub fn is_complete(a: Arc<QCategory>) -> Result<bool> {
    Ok(find_inf_functor(&PresheafCategory::copresheaves(a)?).is_some())
}

/// `f⊗a` for `f: |a| → Y`: an object `c` of type `Y` with `A(c,-) = A(a,-)↙f`.
pub fn tensor(a: &QCategory, f: Arrow, x: usize) -> Option<usize> {
    let q = a.base();
    if f.src != a.ty(x) {
        return None;
    }
    let row: Vec<usize> = (0..a.len()).map(|b| q.limp(a.ty(x), f.tgt, a.ty(b), a.hom(x, b), f.value)).collect();
    (0..a.len()).find(|&c| a.ty(c) == f.tgt && (0..a.len()).all(|b| a.hom(c, b) == row[b]))
}

/// `g↣a` for `g: Y → |a|`: an object `c` of type `Y` with `A(-,c) = g↘A(-,a)`.
pub fn cotensor(a: &QCategory, g: Arrow, x: usize) -> Option<usize> {
    let q = a.base();
    if g.tgt != a.ty(x) {
        return None;
    }
    let col: Vec<usize> = (0..a.len()).map(|b| q.rimp(a.ty(b), g.src, a.ty(x), g.value, a.hom(b, x))).collect();
    (0..a.len()).find(|&c| a.ty(c) == g.src && (0..a.len()).all(|b| a.hom(b, c) == col[b]))
}

/// First `(a, f)` without a tensor, if any.
pub fn tensor_witness(a: &QCategory) -> Option<(usize, Arrow)> {
    let q = a.base();
    for x in 0..a.len() {
        for t in 0..q.len() {
            for v in 0..q.hom(a.ty(x), t).len() {
                let f = Arrow::new(a.ty(x), t, v);
                if tensor(a, f, x).is_none() {
                    return Some((x, f));
                }
            }
        }
    }
    None
}

/// First `(a, g)` without a cotensor, if any.
pub fn cotensor_witness(a: &QCategory) -> Option<(usize, Arrow)> {
    let q = a.base();
    for x in 0..a.len() {
        for t in 0..q.len() {
            for v in 0..q.hom(t, a.ty(x)).len() {
                let g = Arrow::new(t, a.ty(x), v);
                if cotensor(a, g, x).is_none() {
                    return Some((x, g));
                }
            }
        }
    }
    None
}

pub fn is_tensored(a: &QCategory) -> bool {
    tensor_witness(a).is_none()
}

pub fn is_cotensored(a: &QCategory) -> bool {
    cotensor_witness(a).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::qcat::functors_adjoint;

    fn px() -> PresheafCategory {
        PresheafCategory::presheaves(Arc::new(fixtures::x_f())).unwrap()
    }

    #[test]
    fn nine_presheaves_in_table_order() {
        let p = px();
        let labels: Vec<_> = (0..p.len()).map(|i| p.label(i).to_string()).collect();
        assert_eq!(
            labels,
            ["(⊥,⊥)", "(⊥,q)", "(p,⊥)", "(p,p)", "(p,q)", "(p,k)", "(q,q)", "(k,q)", "(k,k)"]
        );
        assert!(p.category().validate().is_valid());
        assert!(p.category().is_skeletal());
    }

    #[test]
    fn degenerate_bases() {
        let q = fixtures::q_f();
        let empty = Arc::new(QCategory::empty("E", q.clone()));
        assert_eq!(PresheafCategory::presheaves(empty.clone()).unwrap().len(), 1);
        assert_eq!(PresheafCategory::copresheaves(empty).unwrap().len(), 1);
        let star = Arc::new(fixtures::star_f());
        assert_eq!(PresheafCategory::presheaves(star).unwrap().len(), 4);
    }

    #[test]
    fn yoneda_values() {
        let p = px();
        let y = p.embedding();
        assert_eq!(p.label(y.apply(0)), "(k,q)");
        assert_eq!(p.label(y.apply(1)), "(p,k)");
        assert!(y.validate().is_valid());
        assert!(p.check_yoneda_lemma().all_hold());
        let pd = PresheafCategory::copresheaves(Arc::new(fixtures::x_f())).unwrap();
        assert!(pd.check_yoneda_lemma().all_hold());
        assert!(pd.embedding().validate().is_valid());
    }

    #[test]
    fn cocompleteness_verdicts() {
        let x = Arc::new(fixtures::x_f());
        assert!(!is_cocomplete(x.clone()).unwrap());
        assert!(!is_complete(x).unwrap());
        let p = px();
        let pp = PresheafCategory::presheaves(p.category().clone()).unwrap();
        let sup = find_sup_functor(&pp).expect("PA is cocomplete");
        assert!(functors_adjoint(&sup, &pp.embedding()).unwrap());
        // agrees with Φ ↦ Φ∘(Y_A)_♮
        let s = p.sup_functor(&pp).unwrap();
        let _ = s;
        let star = Arc::new(fixtures::star_f());
        assert!(is_complete(star.clone()).unwrap());
        assert!(is_cocomplete(star).unwrap());
    }

    #[test]
    fn tensors_on_x_f() {
        let x = fixtures::x_f();
        let q = x.base().clone();
        let l = q.hom(0, 0);
        for x0 in 0..2 {
            assert_eq!(tensor(&x, q.unit_arrow(0), x0), Some(x0));
            assert_eq!(cotensor(&x, q.unit_arrow(0), x0), Some(x0));
        }
        assert_eq!(tensor(&x, Arrow::new(0, 0, l.element("p").unwrap()), 0), None);
        assert!(!is_tensored(&x));
        let p = px();
        assert!(is_tensored(p.category()));
        assert!(is_cotensored(p.category()));
    }
}
