//! Deterministic random instances: small quantaloids and categories over them.
//!
//! Every instance is drawn from its own ChaCha stream keyed by `(seed, index)`,
//! so instance `i` does not depend on how many instances precede it.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::lattice::FiniteLattice;
use crate::qcat::{QCategory, QFunctor};
use crate::qdist::QDistributor;
use crate::quantaloid::{Builtin, JoinCheck, Quantaloid};

/// Largest hom-lattice the generator produces.
pub const MAX_LATTICE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    Frames,
    Chains,
    RandomTables,
    /// Cycles through the other three by instance index.
    Mixed,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Frames => "frames",
            Family::Chains => "chains",
            Family::RandomTables => "random-tables",
            Family::Mixed => "mixed",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "frames" => Ok(Family::Frames),
            "chains" => Ok(Family::Chains),
            "random-tables" => Ok(Family::RandomTables),
            "mixed" => Ok(Family::Mixed),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub max_objects: usize,
    pub family: Family,
}

impl CorpusSpec {
    pub fn new(seed: u64, count: usize) -> Self {
        CorpusSpec { seed, count, max_objects: 3, family: Family::Mixed }
    }

    pub fn rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }

    pub fn family_of(&self, index: usize) -> Family {
        match self.family {
            Family::Mixed => [Family::Frames, Family::Chains, Family::RandomTables][index % 3],
            f => f,
        }
    }

    pub fn instance(&self, index: usize) -> Arc<QCategory> {
        let mut rng = self.rng(index);
        let q = Arc::new(random_quantaloid(&mut rng, self.family_of(index), index));
        Arc::new(random_category(&mut rng, q, self.max_objects, &format!("C{index}")))
    }

    pub fn instances(&self) -> impl Iterator<Item = (usize, Arc<QCategory>)> + '_ {
        (0..self.count).map(move |i| (i, self.instance(i)))
    }
}

/// Downsets of a random poset on at most three points, as bitmasks.
fn random_downset_lattice(rng: &mut ChaCha8Rng, name: &str) -> FiniteLattice {
    loop {
        let m = rng.gen_range(1..=3usize);
        // below[i] has bit j when j < i in the poset; only j < i is allowed, which keeps it acyclic
        let mut below = vec![0u32; m];
        for i in 0..m {
            for j in 0..i {
                if rng.gen_bool(0.4) {
                    below[i] |= 1 << j | below[j];
                }
            }
        }
        let downsets: Vec<u32> =
            (0..1u32 << m).filter(|&s| (0..m).all(|i| s & (1 << i) == 0 || below[i] & !s == 0)).collect();
        if downsets.len() > MAX_LATTICE {
            continue;
        }
        return downset_lattice(name, &downsets);
    }
}

fn downset_lattice(name: &str, sets: &[u32]) -> FiniteLattice {
    let label = |s: u32| {
        if s == 0 {
            "∅".to_string()
        } else {
            (0..32).filter(|i| s & (1 << i) != 0).map(|i| i.to_string()).collect()
        }
    };
    let elements = sets.iter().map(|&s| label(s)).collect();
    let mut pairs = Vec::new();
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            if i != j && a & !b == 0 {
                pairs.push((i, j));
            }
        }
    }
    FiniteLattice::from_indexed(name, elements, &pairs).expect("downsets form a lattice")
}

pub fn random_quantaloid(rng: &mut ChaCha8Rng, family: Family, index: usize) -> Quantaloid {
    match family {
        Family::Frames => {
            let h = random_downset_lattice(rng, &format!("H{index}"));
            if rng.gen_bool(0.5) {
                let top = h.top();
                Quantaloid::one_object(&format!("Fr{index}"), "*", h, top, Builtin::Meet).expect("frame")
            } else {
                diagonal(rng, &h, &format!("DH{index}"))
            }
        }
        Family::Chains => {
            let n = rng.gen_range(2..=MAX_LATTICE);
            if rng.gen_bool(0.5) {
                let l = FiniteLattice::chain(&format!("G{n}"), n).expect("chain");
                let top = l.top();
                Quantaloid::one_object(&format!("Godel{n}"), "*", l, top, Builtin::Meet).expect("chain")
            } else {
                lukasiewicz(n)
            }
        }
        Family::RandomTables => random_table(rng, index),
        Family::Mixed => unreachable!("resolved by CorpusSpec::family_of"),
    }
}

/// The chain `0..n-1` with `a∘b = max(0, a+b-(n-1))` and unit `n-1`.
pub fn lukasiewicz(n: usize) -> Quantaloid {
    let l = FiniteLattice::chain(&format!("L{n}"), n).expect("chain");
    let table: Vec<Vec<usize>> = (0..n).map(|g| (0..n).map(|f| (g + f).saturating_sub(n - 1)).collect()).collect();
    Quantaloid::one_object_table(&format!("Luk{n}"), "*", l, n - 1, &table).expect("Łukasiewicz chain")
}

/// `D(H)` on two or three chosen elements: `hom(a,b) = ↓(a∧b)`, composition meet, unit `a`.
pub fn diagonal(rng: &mut ChaCha8Rng, h: &FiniteLattice, name: &str) -> Quantaloid {
    let k = rng.gen_range(1..=h.len().min(3));
    let mut chosen: Vec<usize> = (0..h.len()).collect();
    chosen.shuffle(rng);
    chosen.truncate(k);
    chosen.sort_unstable();
    diagonal_on(h, &chosen, name)
}

/// `D(H)` on the listed elements of `h`.
pub fn diagonal_on(h: &FiniteLattice, chosen: &[usize], name: &str) -> Quantaloid {
    let down = |e: usize| -> Vec<usize> { (0..h.len()).filter(|&x| h.leq(x, e)).collect() };
    let sub = |e: usize| -> FiniteLattice {
        let els = down(e);
        let names = els.iter().map(|&x| h.element_name(x).to_string()).collect();
        let mut pairs = Vec::new();
        for (i, &a) in els.iter().enumerate() {
            for (j, &b) in els.iter().enumerate() {
                if i != j && h.leq(a, b) {
                    pairs.push((i, j));
                }
            }
        }
        FiniteLattice::from_indexed(&format!("{}↓{}", h.name(), h.element_name(e)), names, &pairs).expect("principal downset")
    };
    let objects: Vec<String> = chosen.iter().map(|&e| format!("d{}", h.element_name(e))).collect();
    let n = chosen.len();
    let meet_of = |x: usize, y: usize| h.meet2(chosen[x], chosen[y]);
    let homs: Vec<FiniteLattice> = (0..n * n).map(|i| sub(meet_of(i / n, i % n))).collect();
    let units: Vec<usize> = (0..n).map(|x| homs[x * n + x].top()).collect();
    let mut comp = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (dxy, dyz, dxz) = (down(meet_of(x, y)), down(meet_of(y, z)), down(meet_of(x, z)));
                let mut t = Vec::with_capacity(dxy.len() * dyz.len());
                for &g in &dyz {
                    for &f in &dxy {
                        let m = h.meet2(g, f);
                        t.push(dxz.iter().position(|&e| e == m).expect("meet lies below a∧c"));
                    }
                }
                comp.push(t);
            }
        }
    }
    Quantaloid::new(name, objects, homs, units, comp).expect("diagonal quantaloid")
}

/// A one-object quantaloid whose table is spread from random values on pairs of
/// join-irreducibles; rejected until it validates, with the meet table as fallback.
pub fn random_table(rng: &mut ChaCha8Rng, index: usize) -> Quantaloid {
    let name = format!("RT{index}");
    let l = if rng.gen_bool(0.5) {
        random_downset_lattice(rng, &format!("R{index}"))
    } else {
        FiniteLattice::chain(&format!("R{index}"), rng.gen_range(2..=4)).expect("chain")
    };
    let n = l.len();
    let irreducibles: Vec<usize> = (0..n)
        .filter(|&e| {
            let below: Vec<usize> = (0..n).filter(|&x| x != e && l.leq(x, e)).collect();
            e != l.bottom() && l.join(below.iter().copied()) != e
        })
        .collect();
    for attempt in 0..256 {
        // half of the attempts stay below the meet, where units are more likely
        let integral = attempt % 2 == 0;
        let mut seed = vec![0usize; n * n];
        for &i in &irreducibles {
            for &j in &irreducibles {
                let m = l.meet2(i, j);
                let options: Vec<usize> = (0..n).filter(|&v| !integral || l.leq(v, m)).collect();
                seed[i * n + j] = *options.choose(rng).expect("bottom is always an option");
            }
        }
        // join-irreducibles below g and f determine g∘f on a distributive lattice
        let below: Vec<Vec<usize>> =
            (0..n).map(|e| irreducibles.iter().copied().filter(|&i| l.leq(i, e)).collect()).collect();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|g| {
                (0..n)
                    .map(|f| l.join(below[g].iter().flat_map(|&i| below[f].iter().map(|&j| seed[i * n + j]).collect::<Vec<_>>())))
                    .collect()
            })
            .collect();
        let Some(unit) = (0..n).find(|&e| (0..n).all(|f| table[e][f] == f && table[f][e] == f)) else {
            continue;
        };
        if let Ok(q) = Quantaloid::one_object_table(&name, "*", l.clone(), unit, &table) {
            if q.validate_with(JoinCheck::AllSubsets).is_valid() {
                return q;
            }
        }
    }
    let top = l.top();
    Quantaloid::one_object(&name, "*", l, top, Builtin::Meet).expect("meet fallback")
}

/// Random homs over `q` repaired by closing under composition.
pub fn random_category(rng: &mut ChaCha8Rng, q: Arc<Quantaloid>, max_objects: usize, name: &str) -> QCategory {
    let n = rng.gen_range(1..=max_objects.max(1));
    let types: Vec<usize> = (0..n).map(|_| rng.gen_range(0..q.len())).collect();
    let mut hom = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            let l = q.hom(types[x], types[y]);
            // bias towards the bottom so that repair does not saturate every hom
            let v = if rng.gen_bool(0.35) { l.bottom() } else { rng.gen_range(0..l.len()) };
            hom[x * n + y] = if x == y { l.join2(v, q.unit(types[x])) } else { v };
        }
    }
    close(&q, &types, &mut hom);
    let objects = (0..n).map(|i| format!("o{i}")).collect();
    QCategory::new(name, q, objects, types, hom).expect("well-typed by construction")
}

/// Least fixpoint of `A(x,z) ∨= A(y,z)∘A(x,y)`.
fn close(q: &Quantaloid, types: &[usize], hom: &mut [usize]) {
    let n = types.len();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (tx, ty, tz) = (types[x], types[y], types[z]);
                    let c = q.comp(tx, ty, tz, hom[y * n + z], hom[x * n + y]);
                    let j = q.hom(tx, tz).join2(hom[x * n + z], c);
                    if j != hom[x * n + z] {
                        hom[x * n + z] = j;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// A random distributor `A ⇸ B`, repaired by closing under both actions.
pub fn random_distributor(rng: &mut ChaCha8Rng, a: &Arc<QCategory>, b: &Arc<QCategory>, name: &str) -> QDistributor {
    let q = a.base().clone();
    let (n, m) = (a.len(), b.len());
    let mut cells: Vec<usize> = (0..n * m)
        .map(|i| {
            let l = q.hom(a.ty(i / m), b.ty(i % m));
            if rng.gen_bool(0.4) { l.bottom() } else { rng.gen_range(0..l.len()) }
        })
        .collect();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..m {
                let v = cells[x * m + y];
                for y2 in 0..m {
                    let c = q.comp(a.ty(x), b.ty(y), b.ty(y2), b.hom(y, y2), v);
                    let t = &mut cells[x * m + y2];
                    let j = q.hom(a.ty(x), b.ty(y2)).join2(*t, c);
                    changed |= j != *t;
                    *t = j;
                }
                for x2 in 0..n {
                    let c = q.comp(a.ty(x2), a.ty(x), b.ty(y), v, a.hom(x2, x));
                    let t = &mut cells[x2 * m + y];
                    let j = q.hom(a.ty(x2), b.ty(y)).join2(*t, c);
                    changed |= j != *t;
                    *t = j;
                }
            }
        }
        if !changed {
            break;
        }
    }
    QDistributor::new(name, a.clone(), b.clone(), cells).expect("well-typed by construction")
}

/// A random functor `A → B`, if a type-preserving map that validates is found.
pub fn random_functor(rng: &mut ChaCha8Rng, a: &Arc<QCategory>, b: &Arc<QCategory>, name: &str) -> Option<QFunctor> {
    for _ in 0..16 {
        let mut map = Vec::with_capacity(a.len());
        for x in 0..a.len() {
            let options: Vec<usize> = (0..b.len()).filter(|&y| b.ty(y) == a.ty(x)).collect();
            map.push(*options.choose(rng)?);
        }
        let f = QFunctor::new(name, a.clone(), b.clone(), map).ok()?;
        if f.validate().is_valid() {
            return Some(f);
        }
    }
    None
}

/// Left adjoint distributors between the given pairs: functor graphs and repaired random matrices.
pub fn sample_left_adjoints(
    rng: &mut ChaCha8Rng,
    pairs: &[(Arc<QCategory>, Arc<QCategory>)],
    count: usize,
) -> Vec<QDistributor> {
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 200 * count.max(1) && !pairs.is_empty() {
        attempts += 1;
        let (a, b) = &pairs[rng.gen_range(0..pairs.len())];
        let name = format!("ζ{}", out.len());
        let d = if rng.gen_bool(0.3) {
            match random_functor(rng, a, b, "F") {
                Some(f) => QDistributor::graph(&f).with_name(&name),
                None => continue,
            }
        } else {
            random_distributor(rng, a, b, &name)
        };
        if d.is_valid() && d.is_left_adjoint() {
            out.push(d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic_and_valid() {
        let spec = CorpusSpec::new(42, 24);
        for (i, c) in spec.instances() {
            let again = spec.instance(i);
            assert!(c.same_as(&again) && c.base().same_structure(again.base()));
            assert!(c.base().validate().is_valid(), "instance {i}");
            assert!(c.validate().is_valid(), "instance {i}");
            assert!(c.len() <= 3);
            let n = c.base().len();
            assert!((0..n * n).all(|k| c.base().hom(k / n, k % n).len() <= MAX_LATTICE));
        }
    }

    #[test]
    fn lukasiewicz_validates() {
        for n in 2..=6 {
            assert!(lukasiewicz(n).validate().is_valid());
        }
    }

    #[test]
    fn sampled_distributors_are_left_adjoint() {
        let x = Arc::new(crate::fixtures::x_f());
        let mut rng = CorpusSpec::new(7, 1).rng(0);
        let ds = sample_left_adjoints(&mut rng, &[(x.clone(), x)], 10);
        assert_eq!(ds.len(), 10);
        assert!(ds.iter().all(|d| d.is_valid() && d.is_left_adjoint()));
    }
}
