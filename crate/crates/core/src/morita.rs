//! Left adjoint presheaves, Cauchy completion, convergence and Morita equivalence.
//!
//! A presheaf `μ: A ⇸ *_X` counts as a left adjoint presheaf when, as a
//! distributor, it has the left adjoint `A↙μ`, i.e. `*_X ≤ μ∘(A↙μ)`.

use std::sync::Arc;

use crate::error::{guard, Error, Result};
use crate::mcomplete::MoritaReport;
use crate::presheaf::PresheafCategory;
use crate::qcat::{QCategory, QFunctor};
use crate::qdist::{compose, QDistributor};

/// Indices (into `pa`) of the left adjoint presheaves, in enumeration order.
pub fn left_adjoint_presheaves(pa: &PresheafCategory) -> Vec<usize> {
    (0..pa.len()).filter(|&i| pa.distributor(i).is_right_adjoint()).collect()
}

#[derive(Debug, Clone)]
pub struct CauchyCompletion {
    pub presheaves: PresheafCategory,
    /// Indices into `presheaves` of the objects of the completion.
    pub members: Vec<usize>,
    pub category: Arc<QCategory>,
}

impl CauchyCompletion {
    /// `ι(a, μ) = μ(a)`, `A ⇸ A_cc`.
    pub fn inclusion(&self) -> QDistributor {
        let a = self.presheaves.base().clone();
        let pa = &self.presheaves;
        let ms = self.members.clone();
        QDistributor::from_fn("ι", a, self.category.clone(), move |x, j| pa.member(ms[j]).values[x])
    }

    /// `κ(μ, a) = PA(μ, Y(a))`, `A_cc ⇸ A`.
    pub fn retraction(&self) -> QDistributor {
        let a = self.presheaves.base().clone();
        let y = self.presheaves.embedding();
        let pa = &self.presheaves;
        let ms = self.members.clone();
        QDistributor::from_fn("κ", self.category.clone(), a, move |j, x| pa.hom(ms[j], y.apply(x)))
    }
}

/// `A_cc`: the full subcategory of `PA` on the left adjoint presheaves.
pub fn cauchy_completion(a: Arc<QCategory>) -> Result<CauchyCompletion> {
    let presheaves = PresheafCategory::presheaves(a.clone())?;
    let members = left_adjoint_presheaves(&presheaves);
    let category = Arc::new(
        presheaves
            .category()
            .full_subcategory(&format!("{}_cc", a.name()), &members),
    );
    Ok(CauchyCompletion { presheaves, members, category })
}

/// A functor `F` with `F_♮ = φ`, least object indices first.
pub fn converges(phi: &QDistributor) -> Result<Option<QFunctor>> {
    if !phi.is_left_adjoint() {
        return Err(Error::NotLeftAdjoint(phi.name.clone()));
    }
    let (c, a) = (phi.dom(), phi.cod());
    let mut map = Vec::with_capacity(c.len());
    for x in 0..c.len() {
        let row = phi.row(x);
        match (0..a.len()).find(|&y| a.ty(y) == c.ty(x) && (0..a.len()).all(|z| a.hom(y, z) == row[z])) {
            Some(y) => map.push(y),
            None => return Ok(None),
        }
    }
    Ok(Some(QFunctor::new(&format!("lim {}", phi.name), c.clone(), a.clone(), map)?))
}

/// First left adjoint presheaf not isomorphic to a representable, as an index into `pa`.
pub fn non_representable(pa: &PresheafCategory) -> Option<usize> {
    let y = pa.embedding();
    let a = pa.base();
    let pc = pa.category();
    left_adjoint_presheaves(pa)
        .into_iter()
        .find(|&i| !(0..a.len()).any(|x| pc.is_iso(i, y.apply(x))))
}

pub fn is_cauchy_complete(a: Arc<QCategory>) -> Result<bool> {
    Ok(non_representable(&PresheafCategory::presheaves(a)?).is_none())
}

pub fn cauchy_complete_report(a: Arc<QCategory>) -> Result<MoritaReport> {
    let pa = PresheafCategory::presheaves(a.clone())?;
    let bad = non_representable(&pa);
    Ok(MoritaReport {
        subject: a.name().to_string(),
        property: "cauchy-complete".into(),
        verdict: bad.is_none(),
        witness: bad.map(|i| format!("left adjoint presheaf {} is not representable", pa.label(i))),
        notes: vec!["criterion: representability".into()],
        routes: Vec::new(),
    })
}

/// Per-object invariant used to prune the isomorphism search.
fn signature(a: &QCategory, x: usize) -> (usize, usize, Vec<(usize, usize, usize)>) {
    let mut around: Vec<_> = (0..a.len()).filter(|&y| y != x).map(|y| (a.ty(y), a.hom(x, y), a.hom(y, x))).collect();
    around.sort_unstable();
    (a.ty(x), a.hom(x, x), around)
}

/// The lexicographically least type- and hom-preserving bijection `A → B`.
pub fn find_isomorphism(a: &QCategory, b: &QCategory) -> Result<Option<Vec<usize>>> {
    if a.len() != b.len() || !crate::qcat::same_base(a.base(), b.base()) {
        return Ok(None);
    }
    let n = a.len();
    let sa: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sb: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    let options: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| sa[x] == sb[y]).collect()).collect();
    guard(
        format!("isomorphisms {} → {}", a.name(), b.name()),
        crate::error::product(options.iter().map(|o| o.len().max(1))),
    )?;
    fn rec(a: &QCategory, b: &QCategory, opts: &[Vec<usize>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let x = map.len();
        if x == opts.len() {
            return true;
        }
        for &y in &opts[x] {
            if used[y] || !(0..x).all(|w| a.hom(w, x) == b.hom(map[w], y) && a.hom(x, w) == b.hom(y, map[w])) {
                continue;
            }
            used[y] = true;
            map.push(y);
            if rec(a, b, opts, map, used) {
                return true;
            }
            map.pop();
            used[y] = false;
        }
        false
    }
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(rec(a, b, &options, &mut map, &mut used).then_some(map))
}

#[derive(Debug, Clone)]
pub struct MoritaWitness {
    pub left: CauchyCompletion,
    pub right: CauchyCompletion,
    /// Skeleta of the completions with their quotient maps.
    pub left_skeleton: (Arc<QCategory>, Vec<usize>),
    pub right_skeleton: (Arc<QCategory>, Vec<usize>),
    /// Iso between the skeleta.
    pub iso: Vec<usize>,
}

/// `A_cc ≅ B_cc`, decided on skeleta.
pub fn morita_equivalent(a: Arc<QCategory>, b: Arc<QCategory>) -> Result<Option<MoritaWitness>> {
    let left = cauchy_completion(a)?;
    let right = cauchy_completion(b)?;
    let (sl, ql) = left.category.skeleton();
    let (sr, qr) = right.category.skeleton();
    Ok(find_isomorphism(&sl, &sr)?.map(|iso| MoritaWitness {
        left,
        right,
        left_skeleton: (Arc::new(sl), ql),
        right_skeleton: (Arc::new(sr), qr),
        iso,
    }))
}

/// First object of `cc` in each skeleton class.
fn representatives(quot: &[usize], classes: usize) -> Vec<usize> {
    (0..classes).map(|c| quot.iter().position(|&q| q == c).expect("class is inhabited")).collect()
}

impl MoritaWitness {
    /// The distributors `Φ: A ⇸ B` and `Ψ: B ⇸ A` obtained by transport through the skeleta.
    pub fn distributors(&self) -> Result<(QDistributor, QDistributor)> {
        let (ls, lq) = &self.left_skeleton;
        let (rs, rq) = &self.right_skeleton;
        let lrep = representatives(lq, ls.len());
        let rrep = representatives(rq, rs.len());
        // restrict ι and κ to representatives, re-indexed over the skeleta
        let restrict = |cc: &CauchyCompletion, sk: &Arc<QCategory>, rep: &[usize]| -> (QDistributor, QDistributor) {
            let i = cc.inclusion();
            let k = cc.retraction();
            let a = cc.presheaves.base().clone();
            let inc = QDistributor::from_fn("ι", a.clone(), sk.clone(), |x, s| i.get(x, rep[s]));
            let ret = QDistributor::from_fn("κ", sk.clone(), a, |s, x| k.get(rep[s], x));
            (inc, ret)
        };
        let (il, kl) = restrict(&self.left, ls, &lrep);
        let (ir, kr) = restrict(&self.right, rs, &rrep);
        let g = QFunctor::new("G", ls.clone(), rs.clone(), self.iso.clone())?;
        let mut inv = vec![0; self.iso.len()];
        for (s, &t) in self.iso.iter().enumerate() {
            inv[t] = s;
        }
        let h = QFunctor::new("G⁻¹", rs.clone(), ls.clone(), inv)?;
        let phi = compose(&kr, &compose(&QDistributor::graph(&g), &il)?)?.with_name("Φ");
        let psi = compose(&kl, &compose(&QDistributor::graph(&h), &ir)?)?.with_name("Ψ");
        Ok((phi, psi))
    }

    /// `Ψ∘Φ = A` and `Φ∘Ψ = B`.
    pub fn distributors_inverse(&self) -> Result<bool> {
        let (phi, psi) = self.distributors()?;
        let a = QDistributor::identity(phi.dom().clone());
        let b = QDistributor::identity(phi.cod().clone());
        Ok(compose(&psi, &phi)?.cells() == a.cells() && compose(&phi, &psi)?.cells() == b.cells())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn completion_of_x_f() {
        let x = Arc::new(fixtures::x_f());
        let cc = cauchy_completion(x.clone()).unwrap();
        let labels: Vec<_> = cc.members.iter().map(|&i| cc.presheaves.label(i)).collect();
        assert_eq!(labels, ["(p,q)", "(p,k)", "(k,q)", "(k,k)"]);
        assert!(cc.category.validate().is_valid());
        assert!(!is_cauchy_complete(x.clone()).unwrap());
        assert!(is_cauchy_complete(cc.category.clone()).unwrap());
        let w = morita_equivalent(x.clone(), cc.category.clone()).unwrap().expect("equivalent");
        assert!(w.distributors_inverse().unwrap());
        assert!(morita_equivalent(x, Arc::new(fixtures::star_f())).unwrap().is_none());
    }

    #[test]
    fn convergence() {
        let x = Arc::new(fixtures::x_f());
        let id = QFunctor::identity(x.clone());
        let f = converges(&QDistributor::graph(&id)).unwrap().unwrap();
        assert_eq!(f.map, vec![0, 1]);
        let pa = PresheafCategory::presheaves(x).unwrap();
        let kk = pa.find(0, &[3, 3]).unwrap();
        let mu = pa.distributor(kk);
        // its left adjoint, as a copresheaf, is not a graph
        let la = mu.left_adjoint_candidate();
        assert!(converges(&la).unwrap().is_none());
        // as X ⇸ *_*, (k,k) is the graph of the constant functor
        assert_eq!(converges(&mu).unwrap().unwrap().map, vec![0, 0]);
        let bot = pa.distributor(pa.find(0, &[0, 0]).unwrap());
        assert!(matches!(converges(&bot), Err(Error::NotLeftAdjoint(_))));
    }

    #[test]
    fn star_is_cauchy_complete() {
        let s = Arc::new(fixtures::star_f());
        assert!(is_cauchy_complete(s.clone()).unwrap());
        assert_eq!(cauchy_completion(s).unwrap().members.len(), 1);
    }
}
