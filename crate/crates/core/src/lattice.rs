//! Finite complete lattices used as hom-objects.
//!
//! A lattice is built from a list of element identifiers and any generating
//! relation; the reflexive-transitive closure is taken before validation, so a
//! Hasse diagram is enough. Binary joins and meets are tabulated at build time
//! and every other operation reduces to table lookups.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice `{0}` has no elements")]
    Empty(String),
    #[error("unknown element `{element}` in lattice `{lattice}`")]
    UnknownElement { lattice: String, element: String },
    #[error("element `{element}` declared twice in lattice `{lattice}`")]
    DuplicateElement { lattice: String, element: String },
    #[error("order of lattice `{lattice}` is not antisymmetric: cycle {}", cycle.join(" <= "))]
    AntisymmetryViolation { lattice: String, cycle: Vec<String> },
    #[error("`{lattice}` is not a lattice: {a} and {b} have no {bound} (candidates: {})", candidates.join(", "))]
    NotALattice {
        lattice: String,
        a: String,
        b: String,
        bound: &'static str,
        candidates: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    name: String,
    elements: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    top: usize,
    bottom: usize,
}

impl FiniteLattice {
    /// Builds and validates a lattice. `order_pairs` is any generating relation
    /// `(a, b)` meaning `a <= b`.
    pub fn build<S: AsRef<str>>(
        name: &str,
        elements: &[S],
        order_pairs: &[(S, S)],
    ) -> Result<Self, LatticeError> {
        if elements.is_empty() {
            return Err(LatticeError::Empty(name.to_string()));
        }
        let mut index = HashMap::new();
        let elements: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement {
                    lattice: name.to_string(),
                    element: e.clone(),
                });
            }
        }
        let lookup = |e: &str| {
            index.get(e).copied().ok_or_else(|| LatticeError::UnknownElement {
                lattice: name.to_string(),
                element: e.to_string(),
            })
        };
        let mut pairs = Vec::with_capacity(order_pairs.len());
        for (a, b) in order_pairs {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_indexed(name, elements, &pairs)
    }

    /// Same as [`FiniteLattice::build`] with the relation given by indices.
    pub fn from_indexed(
        name: &str,
        elements: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Self, LatticeError> {
        let n = elements.len();
        if n == 0 {
            return Err(LatticeError::Empty(name.to_string()));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(LatticeError::DuplicateElement {
                    lattice: name.to_string(),
                    element: e.clone(),
                });
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            leq[a * n + b] = true;
        }
        // Warshall closure; `next` records a successor on a witnessing path.
        let mut next: Vec<Option<usize>> = (0..n * n)
            .map(|k| if leq[k] { Some(k % n) } else { None })
            .collect();
        for k in 0..n {
            for i in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] && !leq[i * n + j] {
                        leq[i * n + j] = true;
                        next[i * n + j] = next[i * n + k];
                    }
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if leq[a * n + b] && leq[b * n + a] {
                    let mut cycle = vec![elements[a].clone()];
                    let mut cur = a;
                    for target in [b, a] {
                        while cur != target {
                            cur = next[cur * n + target].expect("path recorded by closure");
                            cycle.push(elements[cur].clone());
                        }
                    }
                    return Err(LatticeError::AntisymmetryViolation {
                        lattice: name.to_string(),
                        cycle,
                    });
                }
            }
        }

        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let j = least_bound(&leq, n, a, b, true).map_err(|candidates| {
                    LatticeError::NotALattice {
                        lattice: name.to_string(),
                        a: elements[a].clone(),
                        b: elements[b].clone(),
                        bound: "least upper bound",
                        candidates: candidates.iter().map(|&c| elements[c].clone()).collect(),
                    }
                })?;
                let m = least_bound(&leq, n, a, b, false).map_err(|candidates| {
                    LatticeError::NotALattice {
                        lattice: name.to_string(),
                        a: elements[a].clone(),
                        b: elements[b].clone(),
                        bound: "greatest lower bound",
                        candidates: candidates.iter().map(|&c| elements[c].clone()).collect(),
                    }
                })?;
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        let top = (1..n).fold(0, |acc, e| join[acc * n + e]);
        let bottom = (1..n).fold(0, |acc, e| meet[acc * n + e]);
        Ok(FiniteLattice {
            name: name.to_string(),
            elements,
            index,
            leq,
            join,
            meet,
            top,
            bottom,
        })
    }

    /// The chain `0 < 1 < ... < n-1` with elements named by their rank.
    pub fn chain(name: &str, n: usize) -> Result<Self, LatticeError> {
        let elements = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_indexed(name, elements, &pairs)
    }

    /// The lattice with the order reversed; joins and meets swap.
    pub fn dual(&self) -> Self {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq[b * n + a];
            }
        }
        FiniteLattice {
            name: format!("{}^op", self.name),
            elements: self.elements.clone(),
            index: self.index.clone(),
            leq,
            join: self.meet.clone(),
            meet: self.join.clone(),
            top: self.bottom,
            bottom: self.top,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, e: usize) -> &str {
        &self.elements[e]
    }

    pub fn element(&self, id: &str) -> Result<usize, LatticeError> {
        self.index.get(id).copied().ok_or_else(|| LatticeError::UnknownElement {
            lattice: self.name.clone(),
            element: id.to_string(),
        })
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.elements.len() + b]
    }

    #[inline]
    pub fn join2(&self, a: usize, b: usize) -> usize {
        self.join[a * self.elements.len() + b]
    }

    #[inline]
    pub fn meet2(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.elements.len() + b]
    }

    /// Join of an arbitrary finite family; the empty join is bottom.
    pub fn join<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom, |acc, e| self.join2(acc, e))
    }

    /// Meet of an arbitrary finite family; the empty meet is top.
    pub fn meet<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, e| self.meet2(acc, e))
    }

    /// Join of named elements.
    pub fn join_named<S: AsRef<str>>(&self, items: &[S]) -> Result<usize, LatticeError> {
        let ids = items
            .iter()
            .map(|s| self.element(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.join(ids))
    }

    /// Meet of named elements.
    pub fn meet_named<S: AsRef<str>>(&self, items: &[S]) -> Result<usize, LatticeError> {
        let ids = items
            .iter()
            .map(|s| self.element(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.meet(ids))
    }

    pub fn leq_named(&self, a: &str, b: &str) -> Result<bool, LatticeError> {
        Ok(self.leq(self.element(a)?, self.element(b)?))
    }

    /// Covering pairs of the order, in element order. Enough to rebuild the lattice.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl fmt::Display for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{{}}}", self.name, self.elements.join(", "))
    }
}

/// Unique least upper (or greatest lower) bound of `a, b`; otherwise the list of
/// minimal (maximal) bounds.
fn least_bound(leq: &[bool], n: usize, a: usize, b: usize, upper: bool) -> Result<usize, Vec<usize>> {
    let le = |x: usize, y: usize| if upper { leq[x * n + y] } else { leq[y * n + x] };
    let bounds: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
    let minimal: Vec<usize> = bounds
        .iter()
        .copied()
        .filter(|&c| !bounds.iter().any(|&d| d != c && le(d, c)))
        .collect();
    if minimal.len() == 1 {
        Ok(minimal[0])
    } else {
        Err(minimal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame_f() -> FiniteLattice {
        FiniteLattice::build(
            "F",
            &["⊥", "p", "q", "k"],
            &[("⊥", "p"), ("⊥", "q"), ("p", "k"), ("q", "k")],
        )
        .unwrap()
    }

    #[test]
    fn frame_f_bounds() {
        let f = frame_f();
        assert_eq!(f.element_name(f.top()), "k");
        assert_eq!(f.element_name(f.bottom()), "⊥");
        assert_eq!(f.join_named(&["p", "q"]).unwrap(), f.element("k").unwrap());
        assert_eq!(f.join_named::<&str>(&[]).unwrap(), f.bottom());
        assert_eq!(f.join_named(&["p"]).unwrap(), f.element("p").unwrap());
        assert_eq!(f.meet_named(&["p", "q"]).unwrap(), f.bottom());
        assert_eq!(f.meet_named::<&str>(&[]).unwrap(), f.top());
        assert_eq!(f.meet_named(&["k", "q"]).unwrap(), f.element("q").unwrap());
        assert!(f.leq_named("⊥", "p").unwrap());
        assert!(f.leq_named("p", "p").unwrap());
        assert!(!f.leq_named("p", "q").unwrap());
    }

    #[test]
    fn single_point() {
        let l = FiniteLattice::build::<&str>("one", &["e"], &[]).unwrap();
        assert_eq!(l.top(), l.bottom());
    }

    #[test]
    fn two_minimal_upper_bounds() {
        let err = FiniteLattice::build(
            "bad",
            &["a", "b", "c", "d"],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap_err();
        match err {
            LatticeError::NotALattice { a, b, bound, mut candidates, .. } => {
                assert_eq!((a.as_str(), b.as_str()), ("a", "b"));
                assert_eq!(bound, "least upper bound");
                candidates.sort();
                assert_eq!(candidates, vec!["c", "d"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cycle_is_reported() {
        let err = FiniteLattice::build("cyc", &["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
            .unwrap_err();
        match err {
            LatticeError::AntisymmetryViolation { cycle, .. } => {
                assert_eq!(cycle.first(), cycle.last());
                assert!(cycle.len() >= 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_and_empty() {
        assert!(matches!(
            FiniteLattice::build("x", &["a"], &[("a", "z")]),
            Err(LatticeError::UnknownElement { .. })
        ));
        assert!(matches!(
            FiniteLattice::build::<&str>("x", &[], &[]),
            Err(LatticeError::Empty(_))
        ));
        let f = frame_f();
        assert!(f.join_named(&["nope"]).is_err());
    }

    #[test]
    fn covers_rebuild_same_order() {
        let f = frame_f();
        let again = FiniteLattice::from_indexed("F", f.elements().to_vec(), &f.covers()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn laws_on_frame_f() {
        let f = frame_f();
        let n = f.len();
        for a in 0..n {
            for b in 0..n {
                let j = f.join2(a, b);
                // brute-force: j is the unique minimal common upper bound
                let ubs: Vec<usize> = (0..n).filter(|&c| f.leq(a, c) && f.leq(b, c)).collect();
                let mins: Vec<usize> = ubs
                    .iter()
                    .copied()
                    .filter(|&c| ubs.iter().all(|&d| d == c || !f.leq(d, c)))
                    .collect();
                assert_eq!(mins, vec![j]);
                assert_eq!(f.meet2(a, f.join2(a, b)), a);
                assert_eq!(f.dual().meet2(a, b), j);
            }
        }
    }
}
