//! Distributors between Q-categories: the quantaloid Q-Dist.
//!
//! A distributor `φ: A ⇸ B` is stored densely as `cells[x * |B| + y] = φ(x,y)`
//! with `φ(x,y) ∈ Q(|x|,|y|)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qcat::{same_base, CategoryReport, QCategory, QFunctor};
use crate::quantaloid::{Quantaloid, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDistributor {
    pub name: String,
    dom: Arc<QCategory>,
    cod: Arc<QCategory>,
    cells: Vec<usize>,
}

impl QDistributor {
    pub fn new(name: &str, dom: Arc<QCategory>, cod: Arc<QCategory>, cells: Vec<usize>) -> Result<Self> {
        if !same_base(dom.base(), cod.base()) {
            return Err(Error::Mismatch(format!("`{name}` joins categories over different quantaloids")));
        }
        if cells.len() != dom.len() * cod.len() {
            return Err(Error::Mismatch(format!(
                "`{name}` needs {} cells, got {}",
                dom.len() * cod.len(),
                cells.len()
            )));
        }
        let q = dom.base();
        for x in 0..dom.len() {
            for y in 0..cod.len() {
                if cells[x * cod.len() + y] >= q.hom(dom.ty(x), cod.ty(y)).len() {
                    return Err(Error::Mismatch(format!(
                        "`{name}` cell ({}, {}) out of range",
                        dom.objects()[x],
                        cod.objects()[y]
                    )));
                }
            }
        }
        Ok(QDistributor { name: name.to_string(), dom, cod, cells })
    }

    pub fn from_fn(name: &str, dom: Arc<QCategory>, cod: Arc<QCategory>, f: impl Fn(usize, usize) -> usize) -> Self {
        let (n, m) = (dom.len(), cod.len());
        let mut cells = Vec::with_capacity(n * m);
        for x in 0..n {
            for y in 0..m {
                cells.push(f(x, y));
            }
        }
        QDistributor { name: name.to_string(), dom, cod, cells }
    }

    pub fn bottom(dom: Arc<QCategory>, cod: Arc<QCategory>) -> Self {
        let q = dom.base().clone();
        let (d, c) = (dom.clone(), cod.clone());
        Self::from_fn("⊥", dom, cod, |x, y| q.hom(d.ty(x), c.ty(y)).bottom())
    }

    pub fn top(dom: Arc<QCategory>, cod: Arc<QCategory>) -> Self {
        let q = dom.base().clone();
        let (d, c) = (dom.clone(), cod.clone());
        Self::from_fn("⊤", dom, cod, |x, y| q.hom(d.ty(x), c.ty(y)).top())
    }

    /// The identity distributor `A: A ⇸ A`.
    pub fn identity(a: Arc<QCategory>) -> Self {
        let name = a.name().to_string();
        let b = a.clone();
        Self::from_fn(&name, a.clone(), a, |x, y| b.hom(x, y))
    }

    /// `F_♮(x,y) = B(Fx, y)`.
    pub fn graph(f: &QFunctor) -> Self {
        let b = f.cod.clone();
        Self::from_fn(&format!("{}_♮", f.name), f.dom.clone(), f.cod.clone(), |x, y| b.hom(f.apply(x), y))
    }

    /// `F^♮(y,x) = B(y, Fx)`.
    pub fn cograph(f: &QFunctor) -> Self {
        let b = f.cod.clone();
        Self::from_fn(&format!("{}^♮", f.name), f.cod.clone(), f.dom.clone(), |y, x| b.hom(y, f.apply(x)))
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn dom(&self) -> &Arc<QCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<QCategory> {
        &self.cod
    }

    pub fn base(&self) -> &Arc<Quantaloid> {
        self.dom.base()
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.cod.len() + y]
    }

    pub fn cell_name(&self, x: usize, y: usize) -> &str {
        self.base().hom(self.dom.ty(x), self.cod.ty(y)).element_name(self.get(x, y))
    }

    pub fn row(&self, x: usize) -> &[usize] {
        let m = self.cod.len();
        &self.cells[x * m..(x + 1) * m]
    }

    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.dom.len()).map(|x| self.get(x, y)).collect()
    }

    /// Same boundaries (structurally) and same cells.
    pub fn same_as(&self, other: &QDistributor) -> bool {
        self.cells == other.cells && self.dom.same_as(&other.dom) && self.cod.same_as(&other.cod)
    }

    fn check_parallel(&self, other: &QDistributor, what: &str) -> Result<()> {
        if !self.dom.same_as(&other.dom) || !self.cod.same_as(&other.cod) {
            return Err(Error::Mismatch(format!("{what}: `{}` and `{}` are not parallel", self.name, other.name)));
        }
        Ok(())
    }

    pub fn validate(&self) -> CategoryReport {
        let (a, b) = (&*self.dom, &*self.cod);
        let q = self.base();
        let mut violations = Vec::new();
        for x in 0..a.len() {
            for y in 0..b.len() {
                let (tx, ty) = (a.ty(x), b.ty(y));
                let l = q.hom(tx, ty);
                for y2 in 0..b.len() {
                    let c = q.comp(tx, b.ty(y2), ty, b.hom(y2, y), self.get(x, y2));
                    if !l.leq(c, self.get(x, y)) {
                        violations.push(Violation {
                            law: "codomain action",
                            witness: format!(
                                "B({y2}, {y})∘φ({x}, {y2}) = {} ≰ {} = φ({x}, {y})",
                                l.element_name(c),
                                self.cell_name(x, y),
                                x = a.objects()[x],
                                y = b.objects()[y],
                                y2 = b.objects()[y2]
                            ),
                        });
                    }
                }
                for x2 in 0..a.len() {
                    let c = q.comp(tx, a.ty(x2), ty, self.get(x2, y), a.hom(x, x2));
                    if !l.leq(c, self.get(x, y)) {
                        violations.push(Violation {
                            law: "domain action",
                            witness: format!(
                                "φ({x2}, {y})∘A({x}, {x2}) = {} ≰ {} = φ({x}, {y})",
                                l.element_name(c),
                                self.cell_name(x, y),
                                x = a.objects()[x],
                                y = b.objects()[y],
                                x2 = a.objects()[x2]
                            ),
                        });
                    }
                }
            }
        }
        CategoryReport { subject: self.name.clone(), violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// Pointwise order.
    pub fn leq(&self, other: &QDistributor) -> Result<bool> {
        self.check_parallel(other, "local order")?;
        let q = self.base();
        let (a, b) = (&*self.dom, &*self.cod);
        Ok((0..a.len())
            .all(|x| (0..b.len()).all(|y| q.hom(a.ty(x), b.ty(y)).leq(self.get(x, y), other.get(x, y)))))
    }

    /// Pointwise meet of two parallel distributors.
    pub fn meet(&self, other: &QDistributor) -> Result<QDistributor> {
        self.check_parallel(other, "meet")?;
        let q = self.base().clone();
        let (a, b) = (self.dom.clone(), self.cod.clone());
        Ok(Self::from_fn(&format!("{}∧{}", self.name, other.name), self.dom.clone(), self.cod.clone(), |x, y| {
            q.hom(a.ty(x), b.ty(y)).meet2(self.get(x, y), other.get(x, y))
        }))
    }

    /// Pointwise join of two parallel distributors.
    pub fn join(&self, other: &QDistributor) -> Result<QDistributor> {
        self.check_parallel(other, "join")?;
        let q = self.base().clone();
        let (a, b) = (self.dom.clone(), self.cod.clone());
        Ok(Self::from_fn(&format!("{}∨{}", self.name, other.name), self.dom.clone(), self.cod.clone(), |x, y| {
            q.hom(a.ty(x), b.ty(y)).join2(self.get(x, y), other.get(x, y))
        }))
    }

    /// `ψ∘φ`, i.e. `(ψ∘φ)(x,z) = ⋁_y ψ(y,z)∘φ(x,y)`; `self` is `ψ`.
    pub fn after(&self, phi: &QDistributor) -> Result<QDistributor> {
        compose(self, phi)
    }

    /// `φ* = φ↘B`.
    pub fn star(&self) -> QDistributor {
        let id = QDistributor::identity(self.cod.clone());
        right_imp(self, &id).expect("boundaries agree by construction").with_name(&format!("{}*", self.name))
    }

    /// `A↙φ`, the only possible left adjoint of `φ`.
    pub fn left_adjoint_candidate(&self) -> QDistributor {
        let id = QDistributor::identity(self.dom.clone());
        left_imp(&id, self).expect("boundaries agree by construction").with_name(&format!("{}↙{}", self.dom.name(), self.name))
    }

    /// `A ≤ φ*∘φ`; the counit holds by residuation.
    pub fn is_left_adjoint(&self) -> bool {
        let s = self.star();
        let unit = compose(&s, self).expect("boundaries agree");
        QDistributor::identity(self.dom.clone()).leq(&unit).expect("parallel")
    }

    /// `B ≤ φ∘(A↙φ)`.
    pub fn is_right_adjoint(&self) -> bool {
        let l = self.left_adjoint_candidate();
        let counit = compose(self, &l).expect("boundaries agree");
        QDistributor::identity(self.cod.clone()).leq(&counit).expect("parallel")
    }

    /// `φ^op: B^op ⇸ A^op`, `φ^op(y,x) = φ(x,y)`, over the given opposite categories.
    pub fn op_over(&self, dom_op: Arc<QCategory>, cod_op: Arc<QCategory>) -> Result<QDistributor> {
        let name = match self.name.strip_suffix("^op") {
            Some(s) => s.to_string(),
            None => format!("{}^op", self.name),
        };
        let mut cells = vec![0; self.cells.len()];
        let (n, m) = (self.dom.len(), self.cod.len());
        for x in 0..n {
            for y in 0..m {
                cells[y * n + x] = self.get(x, y);
            }
        }
        QDistributor::new(&name, cod_op, dom_op, cells)
    }

    pub fn op(&self) -> QDistributor {
        let qop = Arc::new(self.base().opposite());
        let a = Arc::new(self.dom.opposite_over(qop.clone()));
        let b = Arc::new(self.cod.opposite_over(qop));
        self.op_over(a, b).expect("opposites share a base")
    }
}

/// `(ψ∘φ)(x,z) = ⋁_y ψ(y,z)∘φ(x,y)`.
pub fn compose(psi: &QDistributor, phi: &QDistributor) -> Result<QDistributor> {
    if !phi.cod.same_as(&psi.dom) {
        return Err(Error::Mismatch(format!(
            "cannot compose `{}` after `{}`: {} vs {}",
            psi.name,
            phi.name,
            phi.cod.name(),
            psi.dom.name()
        )));
    }
    let q = phi.base().clone();
    let (a, b, c) = (phi.dom.clone(), phi.cod.clone(), psi.cod.clone());
    Ok(QDistributor::from_fn(&format!("{}∘{}", psi.name, phi.name), a.clone(), c.clone(), |x, z| {
        let (tx, tz) = (a.ty(x), c.ty(z));
        q.hom(tx, tz)
            .join((0..b.len()).map(|y| q.comp(tx, b.ty(y), tz, psi.get(y, z), phi.get(x, y))))
    }))
}

/// `(η↙φ)(y,z) = ⋀_x η(x,z)↙φ(x,y)` for `η: A ⇸ C`, `φ: A ⇸ B`; result `B ⇸ C`.
pub fn left_imp(eta: &QDistributor, phi: &QDistributor) -> Result<QDistributor> {
    if !eta.dom.same_as(&phi.dom) {
        return Err(Error::Mismatch(format!("`{}`↙`{}` needs a common domain", eta.name, phi.name)));
    }
    let q = phi.base().clone();
    let (a, b, c) = (phi.dom.clone(), phi.cod.clone(), eta.cod.clone());
    Ok(QDistributor::from_fn(&format!("{}↙{}", eta.name, phi.name), b.clone(), c.clone(), |y, z| {
        let (ty, tz) = (b.ty(y), c.ty(z));
        q.hom(ty, tz)
            .meet((0..a.len()).map(|x| q.limp(a.ty(x), ty, tz, eta.get(x, z), phi.get(x, y))))
    }))
}

/// `(ψ↘η)(x,y) = ⋀_z ψ(y,z)↘η(x,z)` for `ψ: B ⇸ C`, `η: A ⇸ C`; result `A ⇸ B`.
pub fn right_imp(psi: &QDistributor, eta: &QDistributor) -> Result<QDistributor> {
    if !eta.cod.same_as(&psi.cod) {
        return Err(Error::Mismatch(format!("`{}`↘`{}` needs a common codomain", psi.name, eta.name)));
    }
    let q = psi.base().clone();
    let (a, b, c) = (eta.dom.clone(), psi.dom.clone(), psi.cod.clone());
    Ok(QDistributor::from_fn(&format!("{}↘{}", psi.name, eta.name), a.clone(), b.clone(), |x, y| {
        let (tx, ty) = (a.ty(x), b.ty(y));
        q.hom(tx, ty)
            .meet((0..c.len()).map(|z| q.rimp(tx, ty, c.ty(z), psi.get(y, z), eta.get(x, z))))
    }))
}

/// `φ ⊣ ψ`: `A ≤ ψ∘φ` and `φ∘ψ ≤ B`.
pub fn adjoint_pair(phi: &QDistributor, psi: &QDistributor) -> Result<bool> {
    let unit = compose(psi, phi)?;
    let counit = compose(phi, psi)?;
    Ok(QDistributor::identity(phi.dom.clone()).leq(&unit)?
        && counit.leq(&QDistributor::identity(phi.cod.clone()))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn presheaf(x: &Arc<QCategory>, vals: [&str; 2]) -> QDistributor {
        let q = x.base().clone();
        let star = Arc::new(QCategory::star(q.clone(), 0));
        let cells = vals.iter().map(|v| q.hom(0, 0).element(v).unwrap()).collect();
        QDistributor::new("μ", x.clone(), star, cells).unwrap()
    }

    #[test]
    fn identity_is_valid_and_neutral() {
        let x = Arc::new(fixtures::x_f());
        let id = QDistributor::identity(x.clone());
        assert!(id.is_valid());
        let mu = presheaf(&x, ["p", "q"]);
        assert!(mu.is_valid());
        let star = mu.cod().clone();
        assert!(compose(&mu, &id).unwrap().same_as(&mu));
        assert!(compose(&QDistributor::identity(star), &mu).unwrap().same_as(&mu));
    }

    #[test]
    fn invalid_presheaf_witness() {
        let x = Arc::new(fixtures::x_f());
        let mu = presheaf(&x, ["⊥", "p"]);
        let r = mu.validate();
        assert!(r.violations.iter().any(|v| v.witness.contains("φ(y, *)∘A(x, y) = p ≰ ⊥ = φ(x, *)")));
    }

    #[test]
    fn composite_and_implication_examples() {
        let x = Arc::new(fixtures::x_f());
        let q = x.base().clone();
        let l = q.hom(0, 0);
        let mu = presheaf(&x, ["k", "k"]);
        let lam = left_imp(&QDistributor::identity(x.clone()), &mu).unwrap();
        let names: Vec<_> = (0..2).map(|b| lam.cell_name(0, b).to_string()).collect();
        assert_eq!(names, ["q", "p"]);
        let mu_lam = compose(&mu, &lam).unwrap();
        assert_eq!(mu_lam.get(0, 0), l.element("k").unwrap());
        let lam_mu = compose(&lam, &mu).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(lam_mu.get(a, b), l.meet2(lam.get(0, b), mu.get(a, 0)));
                assert!(l.leq(lam_mu.get(a, b), x.hom(a, b)));
            }
        }
    }

    #[test]
    fn identity_implications() {
        let x = Arc::new(fixtures::x_f());
        let id = QDistributor::identity(x.clone());
        let mu = presheaf(&x, ["p", "q"]);
        let star = QDistributor::identity(mu.cod().clone());
        assert!(left_imp(&mu, &id).unwrap().same_as(&mu));
        assert!(right_imp(&star, &mu).unwrap().same_as(&mu));
        assert!(id.star().same_as(&id));
    }

    #[test]
    fn local_order() {
        let x = Arc::new(fixtures::x_f());
        let bot = presheaf(&x, ["⊥", "⊥"]);
        let top = presheaf(&x, ["k", "k"]);
        assert!(bot.leq(&bot).unwrap());
        assert!(bot.leq(&top).unwrap());
        assert!(!presheaf(&x, ["p", "q"]).leq(&presheaf(&x, ["p", "⊥"])).unwrap());
    }

    #[test]
    fn adjointness_examples() {
        let x = Arc::new(fixtures::x_f());
        let id = QDistributor::identity(x.clone());
        assert!(id.is_left_adjoint());
        assert!(id.is_right_adjoint());
        assert!(adjoint_pair(&id, &id).unwrap());
        assert!(!presheaf(&x, ["⊥", "⊥"]).is_left_adjoint());
        assert!(!presheaf(&x, ["p", "p"]).is_right_adjoint());
        let mu = presheaf(&x, ["p", "q"]);
        assert!(adjoint_pair(&mu.left_adjoint_candidate(), &mu).unwrap());
        assert!(!adjoint_pair(&mu, &mu.star()).unwrap());
    }

    #[test]
    fn op_involution_and_reversal() {
        let x = Arc::new(fixtures::x_f());
        let id = QDistributor::identity(x.clone());
        let idop = id.op();
        assert!(idop.same_as(&QDistributor::identity(idop.dom().clone())));
        let mu = presheaf(&x, ["p", "k"]);
        assert!(mu.op().op().same_as(&mu));
        let lam = mu.left_adjoint_candidate();
        // (μ∘λ)^op = λ^op ∘op μ^op
        let lhs = compose(&mu, &lam).unwrap().op();
        let rhs = compose(&lam.op(), &mu.op()).unwrap();
        assert_eq!(lhs.cells(), rhs.cells());
    }

    #[test]
    fn mismatch_errors() {
        let x = Arc::new(fixtures::x_f());
        let mu = presheaf(&x, ["p", "q"]);
        assert!(matches!(compose(&mu, &mu), Err(Error::Mismatch(_))));
    }
}
