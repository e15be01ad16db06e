//! Independent oracles: direct enumeration and hand-rolled lattice arithmetic,
//! sharing nothing with the library beyond its table accessors.

#![allow(dead_code)]

use std::sync::Arc;

use qcalc::qcat::QCategory;

pub fn fixture_path() -> String {
    format!("{}/fixtures/frame_f.qws", env!("CARGO_MANIFEST_DIR"))
}

/// Every vector in the full product of hom-lattices, filtered by the presheaf condition
/// `μ(b)∘A(a,b) ≤ μ(a)`, in lexicographic order.
pub fn brute_presheaves(a: &QCategory, x: usize) -> Vec<Vec<usize>> {
    let q = a.base();
    let n = a.len();
    let sizes: Vec<usize> = (0..n).map(|i| q.hom(a.ty(i), x).len()).collect();
    let ok = |mu: &[usize]| {
        (0..n).all(|i| {
            (0..n).all(|j| q.hom(a.ty(i), x).leq(q.comp(a.ty(i), a.ty(j), x, mu[j], a.hom(i, j)), mu[i]))
        })
    };
    product(&sizes).into_iter().filter(|v| ok(v)).collect()
}

/// Copresheaves: `A(a,b)∘λ(a) ≤ λ(b)`.
pub fn brute_copresheaves(a: &QCategory, x: usize) -> Vec<Vec<usize>> {
    let q = a.base();
    let n = a.len();
    let sizes: Vec<usize> = (0..n).map(|i| q.hom(x, a.ty(i)).len()).collect();
    let ok = |la: &[usize]| {
        (0..n).all(|i| {
            (0..n).all(|j| q.hom(x, a.ty(j)).leq(q.comp(x, a.ty(i), a.ty(j), a.hom(i, j), la[i]), la[j]))
        })
    };
    product(&sizes).into_iter().filter(|v| ok(v)).collect()
}

/// Lexicographic product with the first coordinate most significant.
pub fn product(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        out = out.into_iter().flat_map(|v| (0..s).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out
}

/// Presheaves `μ` of type `x` that admit a copresheaf `λ` with `λ ⊣ μ`, found by trying every `λ`.
pub fn copresheaf_witness_members(a: &Arc<QCategory>, x: usize) -> Vec<Vec<usize>> {
    let q = a.base();
    let n = a.len();
    let lambdas = brute_copresheaves(a, x);
    brute_presheaves(a, x)
        .into_iter()
        .filter(|mu| {
            lambdas.iter().any(|la| {
                // 1_X ≤ ⋁_a μ(a)∘λ(a)
                let unit = q.hom(x, x).join((0..n).map(|i| q.comp(x, a.ty(i), x, mu[i], la[i])));
                // λ(b)∘μ(a) ≤ A(a,b)
                q.hom(x, x).leq(q.unit(x), unit)
                    && (0..n).all(|i| {
                        (0..n).all(|j| q.hom(a.ty(i), a.ty(j)).leq(q.comp(a.ty(i), x, a.ty(j), la[j], mu[i]), a.hom(i, j)))
                    })
            })
        })
        .collect()
}

/// The frame `{⊥, p, q, k}` as subsets of `{p, q}`: `⊥ = 0`, `p = 1`, `q = 2`, `k = 3`.
pub mod frame {
    pub const NAMES: [&str; 4] = ["⊥", "p", "q", "k"];

    pub fn meet(a: u8, b: u8) -> u8 {
        a & b
    }

    pub fn join(a: u8, b: u8) -> u8 {
        a | b
    }

    /// Heyting implication `a → b`: the largest `c` with `c ∧ a ≤ b`.
    pub fn imp(a: u8, b: u8) -> u8 {
        (!a | b) & 3
    }

    pub fn leq(a: u8, b: u8) -> bool {
        a & !b == 0
    }

    pub fn name(a: u8) -> &'static str {
        NAMES[a as usize]
    }

    /// `X(x,y) = p`, `X(y,x) = q`, top on the diagonal.
    pub const X: [[u8; 2]; 2] = [[3, 1], [2, 3]];

    /// Presheaves `μ` with `μ(b) ∧ X(a,b) ≤ μ(a)`, lexicographic in element order `⊥ p q k`.
    pub fn presheaves() -> Vec<[u8; 2]> {
        let mut out = Vec::new();
        for m0 in 0..4u8 {
            for m1 in 0..4u8 {
                let mu = [m0, m1];
                if (0..2).all(|a| (0..2).all(|b| leq(meet(mu[b], X[a][b]), mu[a]))) {
                    out.push(mu);
                }
            }
        }
        out
    }

    /// `(Y_X)^♮(μ, z) = ⋀_a μ(a) → X(a, z)`.
    pub fn yoneda_row(mu: [u8; 2]) -> [u8; 2] {
        [0, 1].map(|z| (0..2).fold(3, |acc, a| meet(acc, imp(mu[a], X[a][z]))))
    }

    /// `((Y_X)^♮ ↘ X)(w, μ) = ⋀_z (Y_X)^♮(μ, z) → X(w, z)`.
    pub fn star_row(mu: [u8; 2]) -> [u8; 2] {
        let y = yoneda_row(mu);
        [0, 1].map(|w| (0..2).fold(3, |acc, z| meet(acc, imp(y[z], X[w][z]))))
    }

    /// `PX(μ, ν) = ⋀_a μ(a) → ν(a)`.
    pub fn hom(mu: [u8; 2], nu: [u8; 2]) -> u8 {
        (0..2).fold(3, |acc, a| meet(acc, imp(mu[a], nu[a])))
    }
}
