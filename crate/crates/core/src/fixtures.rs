//! Small built-in instances used by the CLI, the paper reproduction and the tests.

use std::sync::Arc;

use crate::lattice::FiniteLattice;
use crate::qcat::QCategory;
use crate::quantaloid::{Builtin, Quantaloid};

/// The frame `F = {⊥, p, q, k}` with `p`, `q` incomparable.
pub fn frame_f() -> FiniteLattice {
    FiniteLattice::build("F", &["⊥", "p", "q", "k"], &[("⊥", "p"), ("⊥", "q"), ("p", "k"), ("q", "k")])
        .expect("F is a lattice")
}

/// `F` as a one-object quantaloid with composition `∧` and unit `k`.
pub fn q_f() -> Arc<Quantaloid> {
    let f = frame_f();
    let k = f.top();
    Arc::new(Quantaloid::one_object("Q_F", "*", f, k, Builtin::Meet).expect("frame"))
}

/// `X = {x, y}` over `Q_F` with `X(x,y) = p`, `X(y,x) = q` and `k` on the diagonal.
pub fn x_f() -> QCategory {
    x_f_over(q_f())
}

pub fn x_f_over(q: Arc<Quantaloid>) -> QCategory {
    let l = q.hom(0, 0);
    let e = |s: &str| l.element(s).expect("element of F");
    let hom = vec![e("k"), e("p"), e("q"), e("k")];
    QCategory::new("X", q, vec!["x".into(), "y".into()], vec![0, 0], hom).expect("X_F is well formed")
}

/// `*_*` over `Q_F`.
pub fn star_f() -> QCategory {
    QCategory::star(q_f(), 0)
}

/// A chain `0 < 1 < ... < n-1` with meet composition and unit the top.
pub fn chain_frame(n: usize) -> Arc<Quantaloid> {
    let l = FiniteLattice::chain(&format!("C{n}"), n).expect("chain");
    let top = l.top();
    Arc::new(Quantaloid::one_object(&format!("C{n}"), "*", l, top, Builtin::Meet).expect("chain frame"))
}

/// Two objects, unit diagonal, bottom off the diagonal.
pub fn discrete_two(q: Arc<Quantaloid>) -> QCategory {
    let l = q.hom(0, 0);
    let (u, b) = (q.unit(0), l.bottom());
    QCategory::new("D2", q, vec!["a".into(), "b".into()], vec![0, 0], vec![u, b, b, u]).expect("discrete")
}

/// The workspace text shipped as `fixtures/frame_f.qws`.
pub const FRAME_F_QWS: &str = include_str!("../fixtures/frame_f.qws");
