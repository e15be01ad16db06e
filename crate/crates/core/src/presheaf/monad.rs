//! The presheaf monad on Q-Dist and its copresheaf dual.
//!
//! Associativity is checked on representables of the triply iterated
//! construction, so the third level never has to be enumerated.

use std::sync::Arc;

use super::images::{pdag_hat, phat};
use super::{PresheafCategory, Side};
use crate::error::Result;
use crate::qcat::{functors_adjoint, QCategory, QFunctor};
use crate::qdist::{adjoint_pair, compose, QDistributor};
use crate::report::LawReport;

/// Everything needed to state the monad laws at `A`.
#[derive(Debug, Clone)]
pub struct MonadComponents {
    pub side: Side,
    /// `PA` or `P†A`.
    pub inner: PresheafCategory,
    /// `PPA` or `P†P†A`.
    pub outer: PresheafCategory,
    /// `ι_A: A ⇸ PA`.
    pub unit: QDistributor,
    /// `ι_{PA}: PA ⇸ PPA`.
    pub unit_outer: QDistributor,
    /// `m_A: PPA ⇸ PA`.
    pub mult: QDistributor,
    /// `P̂ι_A: PA ⇸ PPA`.
    pub hat_unit: QDistributor,
    /// `sup_{PA}` or `inf_{P†A}`, `PPA → PA`.
    pub collapse: QFunctor,
    /// `Y_{PA}` or `Y†_{P†A}`, `PA → PPA`.
    pub embed_outer: QFunctor,
}

pub fn monad_components(a: Arc<QCategory>, side: Side) -> Result<MonadComponents> {
    let inner = PresheafCategory::build(a, side)?;
    let outer = PresheafCategory::build(inner.category().clone(), side)?;
    let y = inner.embedding();
    let yo = outer.embedding();
    let unit = QDistributor::graph(&y);
    let unit_outer = QDistributor::graph(&yo);
    let (collapse, hat_unit) = match side {
        Side::Presheaf => (inner.sup_functor(&outer)?, phat(&unit, &inner, &outer)?),
        Side::Copresheaf => (inner.inf_functor(&outer)?, pdag_hat(&unit, &inner, &outer)?),
    };
    let mult = QDistributor::graph(&collapse);
    Ok(MonadComponents { side, inner, outer, unit, unit_outer, mult, hat_unit, collapse, embed_outer: yo })
}

fn identity_check(r: &mut LawReport, law: &str, d: &QDistributor) -> Result<()> {
    let id = QDistributor::identity(d.dom().clone());
    let holds = d.same_as(&id);
    let detail = if holds {
        String::new()
    } else {
        let cod = d.cod();
        let bad = (0..cod.len())
            .flat_map(|x| (0..cod.len()).map(move |y| (x, y)))
            .find(|&(x, y)| d.get(x, y) != id.get(x, y))
            .expect("differs somewhere");
        format!(
            "at ({}, {}): {} ≠ {}",
            cod.objects()[bad.0],
            cod.objects()[bad.1],
            d.cell_name(bad.0, bad.1),
            id.cell_name(bad.0, bad.1)
        )
    };
    r.push(law, holds, detail);
    Ok(())
}

/// Unit laws and associativity.
pub fn monad_laws(c: &MonadComponents) -> Result<LawReport> {
    let a = c.inner.base();
    let mut r = LawReport::new(match c.side {
        Side::Presheaf => format!("presheaf monad at {}", a.name()),
        Side::Copresheaf => format!("copresheaf monad at {}", a.name()),
    });
    identity_check(&mut r, "m∘ι_P = 1", &compose(&c.mult, &c.unit_outer)?)?;
    identity_check(&mut r, "m∘P̂ι = 1", &compose(&c.mult, &c.hat_unit)?)?;

    let outer = c.outer.category();
    let inner = c.inner.category();
    let yo = &c.embed_outer;
    let mut bad = None;
    for phi in 0..outer.len() {
        let ty = outer.ty(phi);
        let star = c.outer.star(ty).clone();
        // the representable at Φ, one level up
        let (via_mult, via_hat) = match c.side {
            Side::Presheaf => {
                let xi = QDistributor::from_fn("Y(Φ)", outer.clone(), star, |psi, _| outer.hom(psi, phi));
                // Ξ∘(Y_{PA})_♮ and Ξ∘s^♮
                let a1 = compose(&xi, &QDistributor::graph(yo))?;
                let a2 = compose(&xi, &QDistributor::cograph(&c.collapse))?;
                (a1, a2)
            }
            Side::Copresheaf => {
                let xi = QDistributor::from_fn("Y†(Ψ)", star, outer.clone(), |_, psi| outer.hom(phi, psi));
                // (Y†_{P†A})^♮∘Ξ and inf_♮∘Ξ
                let a1 = compose(&QDistributor::cograph(yo), &xi)?;
                let a2 = compose(&QDistributor::graph(&c.collapse), &xi)?;
                (a1, a2)
            }
        };
        let (i1, i2) = (c.outer.lookup(&via_mult)?, c.outer.lookup(&via_hat)?);
        let (s1, s2) = (c.collapse.apply(i1), c.collapse.apply(i2));
        if s1 != s2 {
            bad = Some(format!("at {}: {} ≠ {}", outer.objects()[phi], inner.objects()[s1], inner.objects()[s2]));
            break;
        }
    }
    r.push("m∘m_P = m∘P̂m on representables", bad.is_none(), bad.unwrap_or_default());
    Ok(r)
}

/// `ι_{PA} ⊣ m_A ⊣ P̂ι_A` for presheaves, `P̂†ι† ⊣ m† ⊣ ι†_{P†A}` for copresheaves.
pub fn kz_check(c: &MonadComponents) -> Result<LawReport> {
    let a = c.inner.base();
    let mut r = LawReport::new(format!("KZ adjunctions at {}", a.name()));
    match c.side {
        Side::Presheaf => {
            r.push("ι_P ⊣ m", adjoint_pair(&c.unit_outer, &c.mult)?, "");
            r.push("m ⊣ P̂ι", adjoint_pair(&c.mult, &c.hat_unit)?, "");
            r.push("sup ⊣ Y", functors_adjoint(&c.collapse, &c.embed_outer)?, "");
            let g = QDistributor::graph(&c.collapse);
            let co = QDistributor::cograph(&c.embed_outer);
            r.push("sup_♮ = Y^♮", g.cells() == co.cells(), "");
        }
        Side::Copresheaf => {
            r.push("P̂†ι ⊣ m", adjoint_pair(&c.hat_unit, &c.mult)?, "");
            r.push("m ⊣ ι_P†", adjoint_pair(&c.mult, &c.unit_outer)?, "");
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn presheaf_monad_on_star() {
        let c = monad_components(Arc::new(fixtures::star_f()), Side::Presheaf).unwrap();
        assert_eq!(c.inner.len(), 4);
        assert!(monad_laws(&c).unwrap().all_hold());
        assert!(kz_check(&c).unwrap().all_hold());
    }

    #[test]
    fn copresheaf_monad_on_star() {
        let c = monad_components(Arc::new(fixtures::star_f()), Side::Copresheaf).unwrap();
        assert!(monad_laws(&c).unwrap().all_hold());
        assert!(kz_check(&c).unwrap().all_hold());
    }

    #[test]
    fn both_monads_on_x_f() {
        for side in [Side::Presheaf, Side::Copresheaf] {
            let c = monad_components(Arc::new(fixtures::x_f()), side).unwrap();
            assert_eq!(c.inner.len(), 9);
            let laws = monad_laws(&c).unwrap();
            assert!(laws.all_hold(), "{:?}", laws.failures().collect::<Vec<_>>());
            let kz = kz_check(&c).unwrap();
            assert!(kz.all_hold(), "{:?}", kz.failures().collect::<Vec<_>>());
        }
    }
}
