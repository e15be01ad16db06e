//! Q-categories and Q-functors.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quantaloid::{Quantaloid, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCategory {
    name: String,
    base: Arc<Quantaloid>,
    objects: Vec<String>,
    types: Vec<usize>,
    hom: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryReport {
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl CategoryReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Both quantaloids are the same value, by pointer or by structure.
pub fn same_base(a: &Arc<Quantaloid>, b: &Arc<Quantaloid>) -> bool {
    Arc::ptr_eq(a, b) || a.same_structure(b)
}

impl QCategory {
    /// `hom[x*n+y]` is `A(x,y)`, an element of `Q(types[x], types[y])`.
    pub fn new(
        name: &str,
        base: Arc<Quantaloid>,
        objects: Vec<String>,
        types: Vec<usize>,
        hom: Vec<usize>,
    ) -> Result<Self> {
        let n = objects.len();
        let malformed = |reason: String| Error::MalformedCategory { name: name.to_string(), reason };
        if types.len() != n || hom.len() != n * n {
            return Err(malformed(format!(
                "{} objects need {} types and {} homs, got {} and {}",
                n,
                n,
                n * n,
                types.len(),
                hom.len()
            )));
        }
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(Error::DuplicateObject(o.clone()));
            }
        }
        if let Some(&t) = types.iter().find(|&&t| t >= base.len()) {
            return Err(malformed(format!("type index {t} is not an object of `{}`", base.name())));
        }
        for x in 0..n {
            for y in 0..n {
                if hom[x * n + y] >= base.hom(types[x], types[y]).len() {
                    return Err(malformed(format!("hom({}, {}) out of range", objects[x], objects[y])));
                }
            }
        }
        Ok(QCategory { name: name.to_string(), base, objects, types, hom })
    }

    /// `*_X`: one object of type `x` with hom the unit.
    pub fn star(base: Arc<Quantaloid>, x: usize) -> Self {
        let u = base.unit(x);
        QCategory {
            name: format!("*_{}", base.objects()[x]),
            base,
            objects: vec!["*".to_string()],
            types: vec![x],
            hom: vec![u],
        }
    }

    pub fn empty(name: &str, base: Arc<Quantaloid>) -> Self {
        QCategory { name: name.to_string(), base, objects: Vec::new(), types: Vec::new(), hom: Vec::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn base(&self) -> &Arc<Quantaloid> {
        &self.base
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn homs(&self) -> &[usize] {
        &self.hom
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object(&self, id: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == id)
            .ok_or_else(|| Error::UnknownObject(id.to_string()))
    }

    #[inline]
    pub fn ty(&self, x: usize) -> usize {
        self.types[x]
    }

    #[inline]
    pub fn hom(&self, x: usize, y: usize) -> usize {
        self.hom[x * self.objects.len() + y]
    }

    pub fn hom_name(&self, x: usize, y: usize) -> &str {
        self.base.hom(self.ty(x), self.ty(y)).element_name(self.hom(x, y))
    }

    /// Same base, types and homs; names are ignored.
    pub fn same_as(&self, other: &QCategory) -> bool {
        same_base(&self.base, &other.base) && self.types == other.types && self.hom == other.hom
    }

    pub fn validate(&self) -> CategoryReport {
        let q = &*self.base;
        let n = self.len();
        let mut violations = Vec::new();
        for x in 0..n {
            let tx = self.ty(x);
            if !q.hom(tx, tx).leq(q.unit(tx), self.hom(x, x)) {
                violations.push(Violation {
                    law: "unit",
                    witness: format!(
                        "1_{} = {} ≰ {} = A({}, {})",
                        q.objects()[tx],
                        q.hom(tx, tx).element_name(q.unit(tx)),
                        self.hom_name(x, x),
                        self.objects[x],
                        self.objects[x]
                    ),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (tx, ty, tz) = (self.ty(x), self.ty(y), self.ty(z));
                    let c = q.comp(tx, ty, tz, self.hom(y, z), self.hom(x, y));
                    if !q.hom(tx, tz).leq(c, self.hom(x, z)) {
                        violations.push(Violation {
                            law: "composition",
                            witness: format!(
                                "A({y}, {z})∘A({x}, {y}) = {} ≰ {} = A({x}, {z})",
                                q.hom(tx, tz).element_name(c),
                                self.hom_name(x, z),
                                x = self.objects[x],
                                y = self.objects[y],
                                z = self.objects[z]
                            ),
                        });
                    }
                }
            }
        }
        CategoryReport { subject: self.name.clone(), violations }
    }

    /// `x ≤ y` iff `|x| = |y|` and `1 ≤ A(x,y)`.
    pub fn underlying_leq(&self, x: usize, y: usize) -> bool {
        let t = self.ty(x);
        t == self.ty(y) && self.base.hom(t, t).leq(self.base.unit(t), self.hom(x, y))
    }

    pub fn is_iso(&self, x: usize, y: usize) -> bool {
        self.underlying_leq(x, y) && self.underlying_leq(y, x)
    }

    pub fn underlying_preorder(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.underlying_leq(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_skeletal(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| !self.is_iso(x, y)))
    }

    /// One least-index representative per isomorphism class; `quotient[x]` is the
    /// position of the representative of `x` in the skeleton.
    pub fn skeleton(&self) -> (QCategory, Vec<usize>) {
        let n = self.len();
        let mut reps: Vec<usize> = Vec::new();
        let mut quotient = vec![0; n];
        for x in 0..n {
            match reps.iter().position(|&r| self.is_iso(r, x)) {
                Some(i) => quotient[x] = i,
                None => {
                    quotient[x] = reps.len();
                    reps.push(x);
                }
            }
        }
        (self.full_subcategory(&format!("{}_sk", self.name), &reps), quotient)
    }

    /// Full subcategory on the listed objects, in the listed order.
    pub fn full_subcategory(&self, name: &str, keep: &[usize]) -> QCategory {
        let objects = keep.iter().map(|&x| self.objects[x].clone()).collect();
        let types = keep.iter().map(|&x| self.ty(x)).collect();
        let mut hom = Vec::with_capacity(keep.len() * keep.len());
        for &x in keep {
            for &y in keep {
                hom.push(self.hom(x, y));
            }
        }
        QCategory { name: name.to_string(), base: self.base.clone(), objects, types, hom }
    }

    /// `A^op(x,y) = A(y,x)` over `Q^op`.
    pub fn opposite(&self) -> QCategory {
        self.opposite_over(Arc::new(self.base.opposite()))
    }

    /// As [`QCategory::opposite`], reusing an already built `Q^op`.
    pub fn opposite_over(&self, base_op: Arc<Quantaloid>) -> QCategory {
        let n = self.len();
        let mut hom = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                hom[x * n + y] = self.hom(y, x);
            }
        }
        let name = match self.name.strip_suffix("^op") {
            Some(s) => s.to_string(),
            None => format!("{}^op", self.name),
        };
        QCategory { name, base: base_op, objects: self.objects.clone(), types: self.types.clone(), hom }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFunctor {
    pub name: String,
    pub dom: Arc<QCategory>,
    pub cod: Arc<QCategory>,
    pub map: Vec<usize>,
}

impl QFunctor {
    pub fn new(name: &str, dom: Arc<QCategory>, cod: Arc<QCategory>, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() || map.iter().any(|&y| y >= cod.len()) {
            return Err(Error::Mismatch(format!("object map of `{name}` does not fit its boundary")));
        }
        if !same_base(dom.base(), cod.base()) {
            return Err(Error::Mismatch(format!("`{name}` joins categories over different quantaloids")));
        }
        Ok(QFunctor { name: name.to_string(), dom, cod, map })
    }

    pub fn identity(a: Arc<QCategory>) -> Self {
        let map = (0..a.len()).collect();
        QFunctor { name: format!("id_{}", a.name()), dom: a.clone(), cod: a, map }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Type preservation and `A(x,y) ≤ B(Fx,Fy)`.
    pub fn validate(&self) -> CategoryReport {
        let (a, b) = (&*self.dom, &*self.cod);
        let q = a.base();
        let mut violations = Vec::new();
        for x in 0..a.len() {
            if a.ty(x) != b.ty(self.map[x]) {
                violations.push(Violation {
                    law: "type preservation",
                    witness: format!(
                        "|{}| = {} but |F{}| = {}",
                        a.objects()[x],
                        q.objects()[a.ty(x)],
                        a.objects()[x],
                        q.objects()[b.ty(self.map[x])]
                    ),
                });
            }
        }
        if !violations.is_empty() {
            return CategoryReport { subject: self.name.clone(), violations };
        }
        for x in 0..a.len() {
            for y in 0..a.len() {
                let (fx, fy) = (self.map[x], self.map[y]);
                if !q.hom(a.ty(x), a.ty(y)).leq(a.hom(x, y), b.hom(fx, fy)) {
                    violations.push(Violation {
                        law: "hom inequality",
                        witness: format!(
                            "A({x}, {y}) = {} ≰ {} = B({fx}, {fy})",
                            a.hom_name(x, y),
                            b.hom_name(fx, fy),
                            x = a.objects()[x],
                            y = a.objects()[y],
                            fx = b.objects()[fx],
                            fy = b.objects()[fy]
                        ),
                    });
                }
            }
        }
        CategoryReport { subject: self.name.clone(), violations }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &QFunctor) -> Result<QFunctor> {
        if !first.cod.same_as(&self.dom) {
            return Err(Error::DomainMismatch(format!("{} after {}", self.name, first.name)));
        }
        let map = first.map.iter().map(|&x| self.map[x]).collect();
        Ok(QFunctor {
            name: format!("{}∘{}", self.name, first.name),
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            map,
        })
    }

    /// Pointwise order `F ≤ G`: `Fx ≤ Gx` in the underlying preorder for all `x`.
    pub fn leq(&self, other: &QFunctor) -> Result<bool> {
        if !self.dom.same_as(&other.dom) || !self.cod.same_as(&other.cod) {
            return Err(Error::DomainMismatch(format!("{} vs {}", self.name, other.name)));
        }
        Ok((0..self.dom.len()).all(|x| self.cod.underlying_leq(self.map[x], other.map[x])))
    }
}

/// `F ⊣ G`: `1_A ≤ G∘F` and `F∘G ≤ 1_B` pointwise.
pub fn functors_adjoint(f: &QFunctor, g: &QFunctor) -> Result<bool> {
    if !f.dom.same_as(&g.cod) || !f.cod.same_as(&g.dom) {
        return Err(Error::DomainMismatch(format!("{} and {} are not opposed", f.name, g.name)));
    }
    let (a, b) = (&*f.dom, &*f.cod);
    let unit = (0..a.len()).all(|x| a.underlying_leq(x, g.map[f.map[x]]));
    let counit = (0..b.len()).all(|y| b.underlying_leq(f.map[g.map[y]], y));
    Ok(unit && counit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FiniteLattice;
    use crate::quantaloid::Builtin;

    fn q_f() -> Arc<Quantaloid> {
        let f = FiniteLattice::build("F", &["⊥", "p", "q", "k"], &[("⊥", "p"), ("⊥", "q"), ("p", "k"), ("q", "k")])
            .unwrap();
        let k = f.element("k").unwrap();
        Arc::new(Quantaloid::one_object("Q_F", "*", f, k, Builtin::Meet).unwrap())
    }

    fn cat(q: &Arc<Quantaloid>, name: &str, homs: [&str; 4]) -> QCategory {
        let l = q.hom(0, 0);
        let hom = homs.iter().map(|h| l.element(h).unwrap()).collect();
        QCategory::new(name, q.clone(), vec!["x".into(), "y".into()], vec![0, 0], hom).unwrap()
    }

    fn x_f(q: &Arc<Quantaloid>) -> QCategory {
        cat(q, "X", ["k", "p", "q", "k"])
    }

    #[test]
    fn x_f_valid_and_discrete() {
        let q = q_f();
        let x = x_f(&q);
        assert!(x.validate().is_valid());
        assert_eq!(x.underlying_preorder(), vec![(0, 0), (1, 1)]);
        assert!(x.is_skeletal());
        let (sk, quot) = x.skeleton();
        assert!(sk.same_as(&x));
        assert_eq!(quot, vec![0, 1]);
    }

    #[test]
    fn star_is_valid() {
        let q = q_f();
        let s = QCategory::star(q, 0);
        assert!(s.validate().is_valid());
        assert_eq!(s.underlying_preorder(), vec![(0, 0)]);
        assert!(s.is_skeletal());
        assert!(s.opposite().same_as(&s));
    }

    #[test]
    fn unit_violation() {
        let q = q_f();
        let bad = cat(&q, "bad", ["p", "p", "q", "k"]);
        let r = bad.validate();
        assert!(r.violations.iter().any(|v| v.law == "unit"));
    }

    #[test]
    fn isomorphic_pair_skeleton() {
        let q = q_f();
        let c = cat(&q, "iso", ["k", "k", "k", "k"]);
        assert!(c.validate().is_valid());
        assert!(c.is_iso(0, 1));
        assert!(!c.is_skeletal());
        let (sk, quot) = c.skeleton();
        assert_eq!(sk.len(), 1);
        assert_eq!(quot, vec![0, 0]);
        assert!(sk.skeleton().0.same_as(&sk));
    }

    #[test]
    fn swap_functor_violates() {
        let q = q_f();
        let x = Arc::new(x_f(&q));
        let id = QFunctor::identity(x.clone());
        assert!(id.validate().is_valid());
        let swap = QFunctor::new("swap", x.clone(), x.clone(), vec![1, 0]).unwrap();
        let r = swap.validate();
        assert!(r.violations.iter().any(|v| v.witness.contains("A(x, y) = p ≰ q = B(y, x)")));
        let konst = QFunctor::new("const", x.clone(), x, vec![0, 0]).unwrap();
        assert!(konst.validate().is_valid());
    }

    #[test]
    fn opposite_swaps_entries() {
        let q = q_f();
        let x = x_f(&q);
        let op = x.opposite();
        assert_eq!(op.hom_name(0, 1), "q");
        assert_eq!(op.hom_name(1, 0), "p");
        assert!(op.validate().is_valid());
        assert!(op.opposite().same_as(&x));
    }

    #[test]
    fn identity_adjoint_and_nonadjoint_pair() {
        let two = FiniteLattice::chain("2", 2).unwrap();
        let q = Arc::new(Quantaloid::one_object("two", "*", two, 1, Builtin::Meet).unwrap());
        // A 2-chain-valued preorder a ≤ b.
        let a = Arc::new(
            QCategory::new("C", q, vec!["a".into(), "b".into()], vec![0, 0], vec![1, 1, 0, 1]).unwrap(),
        );
        let id = QFunctor::identity(a.clone());
        assert!(functors_adjoint(&id, &id).unwrap());
        let top = QFunctor::new("top", a.clone(), a.clone(), vec![1, 1]).unwrap();
        let bot = QFunctor::new("bot", a.clone(), a, vec![0, 0]).unwrap();
        assert!(!functors_adjoint(&top, &bot).unwrap());
        assert!(functors_adjoint(&bot, &top).unwrap());
    }
}
