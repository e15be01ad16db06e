//! Small quantaloids given by finite hom-lattices and explicit composition tables.
//!
//! Composition of `f: X -> Y` then `g: Y -> Z` lives in the table of the triple
//! `(X, Y, Z)`, indexed by `g * |Q(X,Y)| + f`. Both implications are derived by
//! brute-force joins at construction time and stored alongside.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Built-in composition rules for triples whose three hom-lattices coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Meet,
    Join,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    pub value: usize,
}

impl Arrow {
    pub fn new(src: usize, tgt: usize, value: usize) -> Self {
        Arrow { src, tgt, value }
    }
}

/// How `validate` checks join preservation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum JoinCheck {
    /// Every subset of every hom-lattice.
    AllSubsets,
    /// Binary joins and the empty join; equivalent for finite lattices since every
    /// finite join is an iterated binary join of a possibly empty family.
    PairsAndEmpty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: &'static str,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantaloidReport {
    pub quantaloid: String,
    pub join_check: JoinCheck,
    pub violations: Vec<Violation>,
}

impl QuantaloidReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantaloid {
    name: String,
    objects: Vec<String>,
    homs: Vec<FiniteLattice>,
    units: Vec<usize>,
    comp: Vec<Vec<usize>>,
    left_imp: Vec<Vec<usize>>,
    right_imp: Vec<Vec<usize>>,
}

impl Quantaloid {
    /// `homs[x*n+y]` is `Q(x,y)`; `comp[(x*n+y)*n+z][g*|Q(x,y)|+f]` is `g∘f`.
    pub fn new(
        name: &str,
        objects: Vec<String>,
        homs: Vec<FiniteLattice>,
        units: Vec<usize>,
        comp: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = objects.len();
        let malformed = |reason: String| Error::MalformedQuantaloid { name: name.to_string(), reason };
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(Error::DuplicateObject(o.clone()));
            }
        }
        if homs.len() != n * n {
            return Err(malformed(format!("expected {} hom-lattices, got {}", n * n, homs.len())));
        }
        if units.len() != n {
            return Err(malformed(format!("expected {} units, got {}", n, units.len())));
        }
        for x in 0..n {
            if units[x] >= homs[x * n + x].len() {
                return Err(malformed(format!("unit of `{}` out of range", objects[x])));
            }
        }
        if comp.len() != n * n * n {
            return Err(malformed(format!("expected {} composition tables, got {}", n * n * n, comp.len())));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = (x * n + y) * n + z;
                    let (fxy, fyz, fxz) = (&homs[x * n + y], &homs[y * n + z], &homs[x * n + z]);
                    if comp[t].len() != fxy.len() * fyz.len() {
                        return Err(malformed(format!(
                            "composition table for ({}, {}, {}) has {} entries, expected {}",
                            objects[x],
                            objects[y],
                            objects[z],
                            comp[t].len(),
                            fxy.len() * fyz.len()
                        )));
                    }
                    if comp[t].iter().any(|&v| v >= fxz.len()) {
                        return Err(malformed(format!(
                            "composition table for ({}, {}, {}) leaves Q({}, {})",
                            objects[x], objects[y], objects[z], objects[x], objects[z]
                        )));
                    }
                }
            }
        }
        let mut q = Quantaloid {
            name: name.to_string(),
            objects,
            homs,
            units,
            comp,
            left_imp: Vec::new(),
            right_imp: Vec::new(),
        };
        q.derive_implications();
        Ok(q)
    }

    /// One-object quantaloid on `lattice` with a built-in composition.
    pub fn one_object(name: &str, object: &str, lattice: FiniteLattice, unit: usize, rule: Builtin) -> Result<Self> {
        let table = builtin_table(&lattice, rule);
        Self::new(name, vec![object.to_string()], vec![lattice], vec![unit], vec![table])
    }

    /// One-object quantaloid with an explicit table `g∘f = table[g][f]`.
    pub fn one_object_table(
        name: &str,
        object: &str,
        lattice: FiniteLattice,
        unit: usize,
        table: &[Vec<usize>],
    ) -> Result<Self> {
        let flat = table.iter().flat_map(|row| row.iter().copied()).collect();
        Self::new(name, vec![object.to_string()], vec![lattice], vec![unit], vec![flat])
    }

    fn derive_implications(&mut self) {
        let n = self.objects.len();
        self.left_imp = vec![Vec::new(); n * n * n];
        self.right_imp = vec![Vec::new(); n * n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = (x * n + y) * n + z;
                    let (fxy, fyz, fxz) = (self.hom(x, y), self.hom(y, z), self.hom(x, z));
                    let comp = &self.comp[t];
                    let (a, b, c) = (fxy.len(), fyz.len(), fxz.len());
                    let mut li = vec![0; c * a];
                    for h in 0..c {
                        for f in 0..a {
                            li[h * a + f] = fyz.join((0..b).filter(|&g| fxz.leq(comp[g * a + f], h)));
                        }
                    }
                    let mut ri = vec![0; b * c];
                    for g in 0..b {
                        for h in 0..c {
                            ri[g * c + h] = fxy.join((0..a).filter(|&f| fxz.leq(comp[g * a + f], h)));
                        }
                    }
                    self.left_imp[t] = li;
                    self.right_imp[t] = ri;
                }
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
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
    pub fn hom(&self, x: usize, y: usize) -> &FiniteLattice {
        &self.homs[x * self.objects.len() + y]
    }

    #[inline]
    pub fn unit(&self, x: usize) -> usize {
        self.units[x]
    }

    #[inline]
    fn triple(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.objects.len();
        (x * n + y) * n + z
    }

    /// `g∘f` for `f ∈ Q(x,y)`, `g ∈ Q(y,z)`.
    #[inline]
    pub fn comp(&self, x: usize, y: usize, z: usize, g: usize, f: usize) -> usize {
        self.comp[self.triple(x, y, z)][g * self.hom(x, y).len() + f]
    }

    /// `h↙f ∈ Q(y,z)` for `h ∈ Q(x,z)`, `f ∈ Q(x,y)`.
    #[inline]
    pub fn limp(&self, x: usize, y: usize, z: usize, h: usize, f: usize) -> usize {
        self.left_imp[self.triple(x, y, z)][h * self.hom(x, y).len() + f]
    }

    /// `g↘h ∈ Q(x,y)` for `g ∈ Q(y,z)`, `h ∈ Q(x,z)`.
    #[inline]
    pub fn rimp(&self, x: usize, y: usize, z: usize, g: usize, h: usize) -> usize {
        self.right_imp[self.triple(x, y, z)][g * self.hom(x, z).len() + h]
    }

    pub fn arrow(&self, src: &str, tgt: &str, value: &str) -> Result<Arrow> {
        let (s, t) = (self.object(src)?, self.object(tgt)?);
        Ok(Arrow::new(s, t, self.hom(s, t).element(value)?))
    }

    pub fn unit_arrow(&self, x: usize) -> Arrow {
        Arrow::new(x, x, self.unit(x))
    }

    pub fn arrow_name(&self, a: Arrow) -> &str {
        self.hom(a.src, a.tgt).element_name(a.value)
    }

    pub fn compose(&self, g: Arrow, f: Arrow) -> Result<Arrow> {
        if f.tgt != g.src {
            return Err(Error::NotComposable(format!(
                "{}: {} -> {} after {}: {} -> {}",
                self.arrow_name(g),
                self.objects[g.src],
                self.objects[g.tgt],
                self.arrow_name(f),
                self.objects[f.src],
                self.objects[f.tgt]
            )));
        }
        Ok(Arrow::new(f.src, g.tgt, self.comp(f.src, f.tgt, g.tgt, g.value, f.value)))
    }

    /// `h↙f`: the largest `g` with `g∘f ≤ h`.
    pub fn left_imp(&self, h: Arrow, f: Arrow) -> Result<Arrow> {
        if h.src != f.src {
            return Err(Error::TypeMismatch(format!(
                "left implication needs a common source, got {} and {}",
                self.objects[h.src], self.objects[f.src]
            )));
        }
        Ok(Arrow::new(f.tgt, h.tgt, self.limp(f.src, f.tgt, h.tgt, h.value, f.value)))
    }

    /// `g↘h`: the largest `f` with `g∘f ≤ h`.
    pub fn right_imp(&self, g: Arrow, h: Arrow) -> Result<Arrow> {
        if h.tgt != g.tgt {
            return Err(Error::TypeMismatch(format!(
                "right implication needs a common target, got {} and {}",
                self.objects[g.tgt], self.objects[h.tgt]
            )));
        }
        Ok(Arrow::new(h.src, g.src, self.rimp(h.src, g.src, g.tgt, g.value, h.value)))
    }

    /// `f* = f↘1`.
    pub fn star(&self, f: Arrow) -> Arrow {
        let (x, y) = (f.src, f.tgt);
        Arrow::new(y, x, self.rimp(y, x, y, f.value, self.unit(y)))
    }

    /// `1 ≤ f*∘f`.
    pub fn is_map(&self, f: Arrow) -> bool {
        let s = self.star(f);
        let (x, y) = (f.src, f.tgt);
        self.hom(x, x).leq(self.unit(x), self.comp(x, y, x, s.value, f.value))
    }

    /// `1 ≤ f∘(1↙f)`.
    pub fn is_right_adjoint_arrow(&self, f: Arrow) -> bool {
        let (x, y) = (f.src, f.tgt);
        let w = self.limp(x, y, x, self.unit(x), f.value);
        self.hom(y, y).leq(self.unit(y), self.comp(y, x, y, f.value, w))
    }

    /// `1 ≤ g∘f` and `f∘g ≤ 1`.
    pub fn arrows_adjoint(&self, f: Arrow, g: Arrow) -> bool {
        let (x, y) = (f.src, f.tgt);
        g.src == y
            && g.tgt == x
            && self.hom(x, x).leq(self.unit(x), self.comp(x, y, x, g.value, f.value))
            && self.hom(y, y).leq(self.comp(y, x, y, f.value, g.value), self.unit(y))
    }

    /// `Q^op`: `Q^op(x,y) = Q(y,x)`, composition reversed, same units.
    pub fn opposite(&self) -> Quantaloid {
        let n = self.objects.len();
        let mut homs = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                homs.push(self.hom(y, x).clone());
            }
        }
        let mut comp = vec![Vec::new(); n * n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // f ∈ Q^op(x,y) = Q(y,x), g ∈ Q^op(y,z) = Q(z,y); g∘op f = f∘g in Q.
                    let (a, b) = (self.hom(y, x).len(), self.hom(z, y).len());
                    let mut table = vec![0; a * b];
                    for g in 0..b {
                        for f in 0..a {
                            table[g * a + f] = self.comp(z, y, x, f, g);
                        }
                    }
                    comp[(x * n + y) * n + z] = table;
                }
            }
        }
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        let mut q = Quantaloid {
            name,
            objects: self.objects.clone(),
            homs,
            units: self.units.clone(),
            comp,
            left_imp: Vec::new(),
            right_imp: Vec::new(),
        };
        q.derive_implications();
        q
    }

    /// Structural equality ignoring the name.
    pub fn same_structure(&self, other: &Quantaloid) -> bool {
        self.objects == other.objects
            && self.homs == other.homs
            && self.units == other.units
            && self.comp == other.comp
    }

    pub fn validate(&self) -> QuantaloidReport {
        self.validate_with(JoinCheck::AllSubsets)
    }

    pub fn validate_with(&self, mode: JoinCheck) -> QuantaloidReport {
        let n = self.objects.len();
        let mut violations = Vec::new();
        let obj = |i: usize| self.objects[i].as_str();
        // Unit laws.
        for x in 0..n {
            for y in 0..n {
                let l = self.hom(x, y);
                for f in 0..l.len() {
                    let left = self.comp(x, y, y, self.unit(y), f);
                    if left != f {
                        violations.push(Violation {
                            law: "unit",
                            witness: format!(
                                "1_{}∘{} = {} ≠ {} in Q({}, {})",
                                obj(y),
                                l.element_name(f),
                                l.element_name(left),
                                l.element_name(f),
                                obj(x),
                                obj(y)
                            ),
                        });
                    }
                    let right = self.comp(x, x, y, f, self.unit(x));
                    if right != f {
                        violations.push(Violation {
                            law: "unit",
                            witness: format!(
                                "{}∘1_{} = {} ≠ {} in Q({}, {})",
                                l.element_name(f),
                                obj(x),
                                l.element_name(right),
                                l.element_name(f),
                                obj(x),
                                obj(y)
                            ),
                        });
                    }
                }
            }
        }
        // Associativity.
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for f in 0..self.hom(w, x).len() {
                            for g in 0..self.hom(x, y).len() {
                                let gf = self.comp(w, x, y, g, f);
                                for h in 0..self.hom(y, z).len() {
                                    let a = self.comp(w, y, z, h, gf);
                                    let b = self.comp(w, x, z, self.comp(x, y, z, h, g), f);
                                    if a != b {
                                        let nm = |s: usize, t: usize, v: usize| self.hom(s, t).element_name(v);
                                        violations.push(Violation {
                                            law: "associativity",
                                            witness: format!(
                                                "h∘(g∘f) = {} ≠ {} = (h∘g)∘f for f = {}: {}→{}, g = {}: {}→{}, h = {}: {}→{}",
                                                nm(w, z, a),
                                                nm(w, z, b),
                                                nm(w, x, f),
                                                obj(w),
                                                obj(x),
                                                nm(x, y, g),
                                                obj(x),
                                                obj(y),
                                                nm(y, z, h),
                                                obj(y),
                                                obj(z)
                                            ),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // Join preservation in each variable.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (fxy, fyz, fxz) = (self.hom(x, y), self.hom(y, z), self.hom(x, z));
                    for fam in families(fxy.len(), mode) {
                        let j = fxy.join(fam.iter().copied());
                        for g in 0..fyz.len() {
                            let lhs = self.comp(x, y, z, g, j);
                            let rhs = fxz.join(fam.iter().map(|&f| self.comp(x, y, z, g, f)));
                            if lhs != rhs {
                                violations.push(Violation {
                                    law: "join preservation (right variable)",
                                    witness: format!(
                                        "{}∘⋁{{{}}} = {} ≠ {} at ({}, {}, {})",
                                        fyz.element_name(g),
                                        names(fxy, &fam),
                                        fxz.element_name(lhs),
                                        fxz.element_name(rhs),
                                        obj(x),
                                        obj(y),
                                        obj(z)
                                    ),
                                });
                            }
                        }
                    }
                    for fam in families(fyz.len(), mode) {
                        let j = fyz.join(fam.iter().copied());
                        for f in 0..fxy.len() {
                            let lhs = self.comp(x, y, z, j, f);
                            let rhs = fxz.join(fam.iter().map(|&g| self.comp(x, y, z, g, f)));
                            if lhs != rhs {
                                violations.push(Violation {
                                    law: "join preservation (left variable)",
                                    witness: format!(
                                        "(⋁{{{}}})∘{} = {} ≠ {} at ({}, {}, {})",
                                        names(fyz, &fam),
                                        fxy.element_name(f),
                                        fxz.element_name(lhs),
                                        fxz.element_name(rhs),
                                        obj(x),
                                        obj(y),
                                        obj(z)
                                    ),
                                });
                            }
                        }
                    }
                }
            }
        }
        QuantaloidReport { quantaloid: self.name.clone(), join_check: mode, violations }
    }
}

impl fmt::Display for Quantaloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.name, self.objects.join(", "))
    }
}

/// Composition table of a built-in rule, indexed `g * |L| + f`.
pub fn builtin_table(lattice: &FiniteLattice, rule: Builtin) -> Vec<usize> {
    let m = lattice.len();
    let mut t = vec![0; m * m];
    for g in 0..m {
        for f in 0..m {
            t[g * m + f] = match rule {
                Builtin::Meet => lattice.meet2(g, f),
                Builtin::Join => lattice.join2(g, f),
            };
        }
    }
    t
}

fn families(m: usize, mode: JoinCheck) -> Vec<Vec<usize>> {
    match mode {
        JoinCheck::AllSubsets => (0u64..(1u64 << m))
            .map(|bits| (0..m).filter(|&i| bits >> i & 1 == 1).collect())
            .collect(),
        JoinCheck::PairsAndEmpty => {
            let mut out = vec![Vec::new()];
            for a in 0..m {
                for b in a..m {
                    out.push(vec![a, b]);
                }
            }
            out
        }
    }
}

fn names(l: &FiniteLattice, fam: &[usize]) -> String {
    fam.iter().map(|&e| l.element_name(e)).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame_f() -> FiniteLattice {
        FiniteLattice::build("F", &["⊥", "p", "q", "k"], &[("⊥", "p"), ("⊥", "q"), ("p", "k"), ("q", "k")]).unwrap()
    }

    fn q_f() -> Quantaloid {
        let f = frame_f();
        let k = f.element("k").unwrap();
        Quantaloid::one_object("Q_F", "*", f, k, Builtin::Meet).unwrap()
    }

    fn a(q: &Quantaloid, v: &str) -> Arrow {
        q.arrow("*", "*", v).unwrap()
    }

    #[test]
    fn q_f_is_valid() {
        assert!(q_f().validate().is_valid());
    }

    #[test]
    fn two_chain_meet_is_valid() {
        let l = FiniteLattice::chain("2", 2).unwrap();
        let q = Quantaloid::one_object("two", "*", l, 1, Builtin::Meet).unwrap();
        assert!(q.validate().is_valid());
    }

    #[test]
    fn wrong_unit_is_reported() {
        let f = frame_f();
        let p = f.element("p").unwrap();
        let q = Quantaloid::one_object("bad", "*", f, p, Builtin::Meet).unwrap();
        let report = q.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == "unit" && v.witness.contains("1_*∘q = ⊥")));
    }

    #[test]
    fn compose_examples() {
        let q = q_f();
        let name = |x: Arrow| q.arrow_name(x).to_string();
        assert_eq!(name(q.compose(a(&q, "p"), a(&q, "q")).unwrap()), "⊥");
        assert_eq!(name(q.compose(a(&q, "k"), a(&q, "p")).unwrap()), "p");
        assert_eq!(name(q.compose(a(&q, "⊥"), a(&q, "k")).unwrap()), "⊥");
    }

    #[test]
    fn implication_examples() {
        let q = q_f();
        let name = |x: Arrow| q.arrow_name(x).to_string();
        assert_eq!(name(q.left_imp(a(&q, "q"), a(&q, "p")).unwrap()), "q");
        assert_eq!(name(q.left_imp(a(&q, "⊥"), a(&q, "k")).unwrap()), "⊥");
        for h in ["⊥", "p", "q", "k"] {
            assert_eq!(name(q.left_imp(a(&q, h), q.unit_arrow(0)).unwrap()), h);
            assert_eq!(name(q.right_imp(q.unit_arrow(0), a(&q, h)).unwrap()), h);
        }
        assert_eq!(name(q.right_imp(a(&q, "p"), a(&q, "q")).unwrap()), "q");
        assert_eq!(name(q.right_imp(a(&q, "k"), a(&q, "⊥")).unwrap()), "⊥");
    }

    #[test]
    fn star_and_maps() {
        let q = q_f();
        for (f, s) in [("k", "k"), ("p", "k"), ("⊥", "k")] {
            assert_eq!(q.arrow_name(q.star(a(&q, f))), s);
        }
        assert!(q.is_map(a(&q, "k")));
        assert!(!q.is_map(a(&q, "p")));
        assert!(!q.is_map(a(&q, "⊥")));
        assert!(q.is_right_adjoint_arrow(a(&q, "k")));
        assert!(!q.is_right_adjoint_arrow(a(&q, "p")));
        assert!(!q.is_right_adjoint_arrow(a(&q, "q")));
    }

    #[test]
    fn not_composable() {
        let l = FiniteLattice::chain("2", 2).unwrap();
        let homs = vec![l.clone(), l.clone(), l.clone(), l.clone()];
        let mut comp = Vec::new();
        for _ in 0..8 {
            comp.push(builtin_table(&l, Builtin::Meet));
        }
        let q = Quantaloid::new("two", vec!["a".into(), "b".into()], homs, vec![1, 1], comp).unwrap();
        let err = q.compose(Arrow::new(0, 0, 1), Arrow::new(0, 1, 1)).unwrap_err();
        assert!(matches!(err, Error::NotComposable(_)));
    }

    #[test]
    fn opposite_involution_and_commutative_case() {
        let q = q_f();
        assert!(q.opposite().same_structure(&q));
        assert!(q.opposite().opposite().same_structure(&q));
    }

    #[test]
    fn opposite_swaps_off_diagonal_homs() {
        let two = FiniteLattice::chain("2", 2).unwrap();
        let one = FiniteLattice::chain("1", 1).unwrap();
        // Q(a,b) = 2, Q(b,a) = 1: arrows a -> b exist, b -> a is trivial.
        let homs = vec![two.clone(), two.clone(), one.clone(), two.clone()];
        let n = 2;
        let mut comp = vec![Vec::new(); 8];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (hxy, hyz, hxz) = (&homs[x * n + y], &homs[y * n + z], &homs[x * n + z]);
                    let mut t = vec![0; hxy.len() * hyz.len()];
                    for g in 0..hyz.len() {
                        for f in 0..hxy.len() {
                            t[g * hxy.len() + f] = if hxz.len() == 1 { 0 } else { g.min(f) };
                        }
                    }
                    comp[(x * n + y) * n + z] = t;
                }
            }
        }
        let q = Quantaloid::new("Q2", vec!["a".into(), "b".into()], homs, vec![1, 1], comp).unwrap();
        assert!(q.validate().is_valid());
        let op = q.opposite();
        assert!(op.validate().is_valid());
        assert_eq!(op.hom(0, 1).len(), 1);
        assert_eq!(op.hom(1, 0).len(), 2);
        assert!(op.opposite().same_structure(&q));
    }

    #[test]
    fn pairs_mode_agrees_on_valid_and_invalid() {
        let f = frame_f();
        let bad = Quantaloid::one_object("j", "*", f.clone(), f.bottom(), Builtin::Join).unwrap();
        assert_eq!(
            bad.validate().is_valid(),
            bad.validate_with(JoinCheck::PairsAndEmpty).is_valid()
        );
        assert!(!bad.validate().is_valid());
        assert!(q_f().validate_with(JoinCheck::PairsAndEmpty).is_valid());
    }
}
