//! Direct and inverse images of (co)presheaves along functors and left adjoint
//! distributors.

use super::{PresheafCategory, Side};
use crate::error::{Error, Result};
use crate::qcat::QFunctor;
use crate::qdist::{compose, QDistributor};

fn expect(pc: &PresheafCategory, side: Side, base: &QDistributor, at_dom: bool) -> Result<()> {
    let want = if at_dom { base.dom() } else { base.cod() };
    if pc.side() != side || !pc.base().same_as(want) {
        return Err(Error::Mismatch(format!(
            "{} is not the category of {side} on {}",
            pc.category().name(),
            want.name()
        )));
    }
    Ok(())
}

/// Transports each member of `src` through `f` and locates the result in `tgt`.
fn image(
    name: &str,
    src: &PresheafCategory,
    tgt: &PresheafCategory,
    f: impl Fn(&QDistributor) -> Result<QDistributor>,
) -> Result<QFunctor> {
    let map = (0..src.len())
        .map(|i| tgt.lookup(&f(&src.distributor(i))?))
        .collect::<Result<Vec<_>>>()?;
    QFunctor::new(name, src.category().clone(), tgt.category().clone(), map)
}

/// `ζ→(μ) = μ∘ζ*`, `PA → PB`.
fn forward(zeta: &QDistributor, zs: &QDistributor, pa: &PresheafCategory, pb: &PresheafCategory) -> Result<QFunctor> {
    expect(pa, Side::Presheaf, zeta, true)?;
    expect(pb, Side::Presheaf, zeta, false)?;
    image(&format!("{}→", zeta.name), pa, pb, |mu| compose(mu, zs))
}

/// `ζ←(ν) = ν∘ζ`, `PB → PA`.
fn backward(zeta: &QDistributor, pa: &PresheafCategory, pb: &PresheafCategory) -> Result<QFunctor> {
    expect(pa, Side::Presheaf, zeta, true)?;
    expect(pb, Side::Presheaf, zeta, false)?;
    image(&format!("{}←", zeta.name), pb, pa, |nu| compose(nu, zeta))
}

/// `ζ↤(λ) = ζ*∘λ`, `P†B → P†A`.
fn co_backward(
    zeta: &QDistributor,
    zs: &QDistributor,
    pda: &PresheafCategory,
    pdb: &PresheafCategory,
) -> Result<QFunctor> {
    expect(pda, Side::Copresheaf, zeta, true)?;
    expect(pdb, Side::Copresheaf, zeta, false)?;
    image(&format!("{}↤", zeta.name), pdb, pda, |l| compose(zs, l))
}

/// `ζ↦(λ) = ζ∘λ`, `P†A → P†B`.
fn co_forward(zeta: &QDistributor, pda: &PresheafCategory, pdb: &PresheafCategory) -> Result<QFunctor> {
    expect(pda, Side::Copresheaf, zeta, true)?;
    expect(pdb, Side::Copresheaf, zeta, false)?;
    image(&format!("{}↦", zeta.name), pda, pdb, |l| compose(zeta, l))
}

/// The four images of a functor `F: A → B`, through `F_♮ ⊣ F^♮`.
#[derive(Debug, Clone)]
pub struct FunctorImages {
    /// `F→: PA → PB`
    pub forward: QFunctor,
    /// `F←: PB → PA`
    pub backward: QFunctor,
    /// `F↤: P†B → P†A`
    pub co_backward: QFunctor,
    /// `F↦: P†A → P†B`
    pub co_forward: QFunctor,
}

pub fn functor_images(
    f: &QFunctor,
    pa: &PresheafCategory,
    pb: &PresheafCategory,
    pda: &PresheafCategory,
    pdb: &PresheafCategory,
) -> Result<FunctorImages> {
    let g = QDistributor::graph(f).with_name(&f.name);
    let c = QDistributor::cograph(f);
    Ok(FunctorImages {
        forward: forward(&g, &c, pa, pb)?,
        backward: backward(&g, pa, pb)?,
        co_backward: co_backward(&g, &c, pda, pdb)?,
        co_forward: co_forward(&g, pda, pdb)?,
    })
}

/// Images along a left adjoint `ζ: A ⇸ B`; each side is present when its
/// categories were supplied.
#[derive(Debug, Clone)]
pub struct DistImages {
    pub zeta: QDistributor,
    pub zeta_star: QDistributor,
    /// `ζ→ ⊣ ζ←`
    pub forward: Option<(QFunctor, QFunctor)>,
    /// `ζ↤ ⊣ ζ↦`
    pub co: Option<(QFunctor, QFunctor)>,
}

pub fn dist_images(
    zeta: &QDistributor,
    presheaves: Option<(&PresheafCategory, &PresheafCategory)>,
    copresheaves: Option<(&PresheafCategory, &PresheafCategory)>,
) -> Result<DistImages> {
    if !zeta.is_left_adjoint() {
        return Err(Error::NotLeftAdjoint(zeta.name.clone()));
    }
    let zs = zeta.star();
    let forward = match presheaves {
        Some((pa, pb)) => Some((forward(zeta, &zs, pa, pb)?, backward(zeta, pa, pb)?)),
        None => None,
    };
    let co = match copresheaves {
        Some((pda, pdb)) => Some((co_backward(zeta, &zs, pda, pdb)?, co_forward(zeta, pda, pdb)?)),
        None => None,
    };
    Ok(DistImages { zeta: zeta.clone(), zeta_star: zs, forward, co })
}

/// `P̂ζ = (ζ→)_♮: PA ⇸ PB`.
pub fn phat(zeta: &QDistributor, pa: &PresheafCategory, pb: &PresheafCategory) -> Result<QDistributor> {
    let im = dist_images(zeta, Some((pa, pb)), None)?;
    let (f, _) = im.forward.expect("requested");
    Ok(QDistributor::graph(&f).with_name(&format!("P̂{}", zeta.name)))
}

/// `P̂†ζ = (ζ↦)_♮: P†A ⇸ P†B`.
pub fn pdag_hat(zeta: &QDistributor, pda: &PresheafCategory, pdb: &PresheafCategory) -> Result<QDistributor> {
    let im = dist_images(zeta, None, Some((pda, pdb)))?;
    let (_, f) = im.co.expect("requested");
    Ok(QDistributor::graph(&f).with_name(&format!("P̂†{}", zeta.name)))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fixtures;
    use crate::qcat::{functors_adjoint, QCategory};

    fn setup() -> (Arc<QCategory>, PresheafCategory, PresheafCategory) {
        let x = Arc::new(fixtures::x_f());
        let pa = PresheafCategory::presheaves(x.clone()).unwrap();
        let pda = PresheafCategory::copresheaves(x.clone()).unwrap();
        (x, pa, pda)
    }

    #[test]
    fn identity_images_are_identities() {
        let (x, pa, pda) = setup();
        let id = QFunctor::identity(x);
        let im = functor_images(&id, &pa, &pa, &pda, &pda).unwrap();
        for f in [&im.forward, &im.backward, &im.co_backward, &im.co_forward] {
            assert_eq!(f.map, (0..f.dom.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn images_along_left_adjoints_are_adjoint() {
        let (x, pa, pda) = setup();
        let y = pa.embedding();
        let zeta = QDistributor::graph(&y);
        let ppa = PresheafCategory::presheaves(pa.category().clone()).unwrap();
        let pdpa = PresheafCategory::copresheaves(pa.category().clone()).unwrap();
        let im = dist_images(&zeta, Some((&pa, &ppa)), Some((&pda, &pdpa))).unwrap();
        let (f, b) = im.forward.unwrap();
        assert!(functors_adjoint(&f, &b).unwrap());
        let (cb, cf) = im.co.unwrap();
        assert!(functors_adjoint(&cb, &cf).unwrap());
        let not_la = QDistributor::bottom(x.clone(), x);
        assert!(matches!(dist_images(&not_la, Some((&pa, &pa)), None), Err(Error::NotLeftAdjoint(_))));
    }
}
