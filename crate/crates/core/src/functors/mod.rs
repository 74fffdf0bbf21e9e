//! The functors between faithful quandles and groups with a distinguished
//! generating set, and the natural isomorphisms relating their composites
//! to the identity.
//!
//! `F` sends `Q` to `(Inn Q, s(Q))`; `G` sends `(G, Ω)` to `Conj(Ω)`. Each
//! comes in a surjective flavor and a star flavor depending on which
//! category of morphisms is in play. `θ_Q : GF(Q) → Q` sends `s_x ↦ x`, and
//! `η` is built from the conjugation action `φ : G → Inn(Conj Ω)`.

pub mod verify;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grpgen::{describe, GenPair, StarMorphism, SurjMorphism};
use crate::homs::{induced_injective_between, induced_surjective_between, QuandleHom};
use crate::perm::Permutation;
use crate::quandle::Quandle;

pub use verify::{
    check_associativity, check_chain, check_pair, prepare_instance, quadruples, verify_equivalence,
    CheckKind, CheckRecord, EquivalenceReport, GroupMorphism, Instance, Mode, PairData,
};

/// `F(Q) = (Inn Q, s(Q))`.
pub fn inn_object(q: &Quandle) -> Result<GenPair> {
    if !q.is_faithful() {
        return Err(Error::NotFaithful("quandle has two equal symmetries".into()));
    }
    q.inn()
}

/// `F(f)` in the surjective category.
pub fn inn_surj(f: &QuandleHom, src: &Arc<GenPair>, tgt: &Arc<GenPair>) -> Result<SurjMorphism> {
    induced_surjective_between(f, src, tgt)
}

/// `F(f)` in the star category.
pub fn inn_star(f: &QuandleHom, src: &Arc<GenPair>, tgt: &Arc<GenPair>) -> Result<StarMorphism> {
    induced_injective_between(f, src, tgt)
}

/// `G(G, Ω) = Conj(Ω)`.
pub fn conj_object(p: &GenPair) -> Result<Quandle> {
    p.require_object()?;
    Quandle::conjugation(p.group(), p.omega())
}

/// Point index of every conjugation-quandle point, keyed by the
/// permutation its label names.
fn point_lookup(q: &Quandle) -> Result<BTreeMap<Permutation, usize>> {
    (0..q.order())
        .map(|x| {
            q.conjugation_point(x)
                .map(|p| (p, x))
                .ok_or_else(|| Error::InvalidMorphism("quandle points are not labeled by permutations".into()))
        })
        .collect()
}

fn point_of(q: &Quandle, x: usize) -> Result<Permutation> {
    q.conjugation_point(x)
        .ok_or_else(|| Error::InvalidMorphism("quandle points are not labeled by permutations".into()))
}

fn finish_hom(src: &Arc<Quandle>, tgt: &Arc<Quandle>, map: Vec<usize>) -> Result<QuandleHom> {
    let f = QuandleHom::from_map(src.clone(), tgt.clone(), map)?;
    let report = f.check();
    if !report.is_empty() {
        return Err(Error::Verification(alloc::format!(
            "functor image is not a homomorphism, first violation at {:?}",
            report.violations[0]
        )));
    }
    Ok(f)
}

/// `G(φ) : ω ↦ φ(ω)` between `src = Conj(Ω₁)` and `tgt = Conj(Ω₂)`.
pub fn conj_surj(m: &SurjMorphism, src: &Arc<Quandle>, tgt: &Arc<Quandle>) -> Result<QuandleHom> {
    let lookup = point_lookup(tgt)?;
    let map = (0..src.order())
        .map(|x| {
            let omega = point_of(src, x)?;
            let image = m.apply(&omega).ok_or(Error::NotInGroup)?;
            lookup
                .get(image)
                .copied()
                .ok_or_else(|| Error::InvalidMorphism("image lies outside the target set".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    finish_hom(src, tgt, map)
}

/// `G(Φ) : ω₁ ↦ (π|_Γ)⁻¹(ω₁)` between `src = Conj(Ω₁)` and
/// `tgt = Conj(Ω₂)`.
pub fn conj_star(m: &StarMorphism, src: &Arc<Quandle>, tgt: &Arc<Quandle>) -> Result<QuandleHom> {
    let lookup = point_lookup(tgt)?;
    let map = (0..src.order())
        .map(|x| {
            let omega = point_of(src, x)?;
            let gamma = m
                .gamma_preimage(&omega)
                .ok_or_else(|| Error::InvalidMorphism("π|Γ does not reach this point".into()))?;
            lookup
                .get(gamma)
                .copied()
                .ok_or_else(|| Error::InvalidMorphism("Γ lies outside the target set".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = finish_hom(src, tgt, map)?;
    if !f.is_injective() {
        return Err(Error::Verification("star functor image is not injective".into()));
    }
    Ok(f)
}

/// `θ_Q : GF(Q) → Q`, `s_x ↦ x`, where `gf = Conj(s(Q))`.
///
/// The point of `gf` is identified by the permutation in its label, never
/// by its index.
pub fn theta(q: &Arc<Quandle>, gf: &Arc<Quandle>) -> Result<QuandleHom> {
    if !q.is_faithful() {
        return Err(Error::NotFaithful("s_x ↦ x needs distinct symmetries".into()));
    }
    let symmetries: BTreeMap<Permutation, usize> =
        q.symmetries().into_iter().enumerate().map(|(x, s)| (s, x)).collect();
    let map = (0..gf.order())
        .map(|p| {
            let s = point_of(gf, p)?;
            symmetries
                .get(&s)
                .copied()
                .ok_or_else(|| Error::InvalidMorphism("point is not a symmetry of Q".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = finish_hom(gf, q, map)?;
    if !(f.is_injective() && f.is_surjective()) {
        return Err(Error::Verification("θ is not a bijection".into()));
    }
    Ok(f)
}

/// `φ_P : G → Inn(Conj Ω)`, `g ↦ (ω ↦ g ω g⁻¹)`, as a morphism from `p` to
/// `fgp = F(G(P))`, where `gp = Conj(Ω)`. Verified to be an isomorphism.
pub fn conjugation_action(p: &Arc<GenPair>, gp: &Quandle, fgp: &Arc<GenPair>) -> Result<SurjMorphism> {
    p.require_object()?;
    let lookup = point_lookup(gp)?;
    let points = (0..gp.order())
        .map(|x| point_of(gp, x))
        .collect::<Result<Vec<_>>>()?;
    let map = p
        .group()
        .elements()
        .iter()
        .map(|g| {
            let images = points
                .iter()
                .map(|w| {
                    lookup
                        .get(&g.conjugate(w))
                        .copied()
                        .ok_or(Error::NotConjugationStable)
                })
                .collect::<Result<Vec<_>>>()?;
            let action = Permutation::from_images(images)?;
            fgp.group()
                .index_of(&action)
                .ok_or_else(|| Error::Verification("conjugation action outside Inn(Conj Ω)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let phi = SurjMorphism::from_map(p.clone(), fgp.clone(), map)?;
    let report = phi.check();
    if !report.is_empty() || !phi.is_bijective() {
        return Err(Error::Verification(alloc::format!(
            "conjugation action is not an isomorphism: {:?}",
            report.failures
        )));
    }
    Ok(phi)
}

/// `η_P : FG(P) → P`, `s_ω ↦ ω`, in the surjective category.
pub fn eta_surj(p: &Arc<GenPair>, gp: &Quandle, fgp: &Arc<GenPair>) -> Result<SurjMorphism> {
    conjugation_action(p, gp, fgp)?
        .inverse()
        .ok_or_else(|| Error::Verification("conjugation action is not invertible".into()))
}

/// `η_P = ((G, Ω), φ_P) : FG(P) → P` in the star category.
pub fn eta_star(p: &Arc<GenPair>, gp: &Quandle, fgp: &Arc<GenPair>) -> Result<StarMorphism> {
    let phi = conjugation_action(p, gp, fgp)?;
    let m = StarMorphism::from_parts(
        fgp.clone(),
        p.clone(),
        p.group().clone(),
        p.omega().to_vec(),
        phi.map().to_vec(),
    )?;
    let report = m.check();
    if !report.is_empty() {
        return Err(Error::Verification(alloc::format!("η fails: {}", describe(&report))));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpgen::is_star_isomorphism;
    use crate::perm::{reflections, PermGroup, DEFAULT_CAP};

    fn r(n: usize) -> Arc<Quandle> {
        Arc::new(Quandle::dihedral(n).unwrap())
    }

    fn conj_s3() -> Arc<Quandle> {
        let s3 = PermGroup::symmetric(3, DEFAULT_CAP).unwrap();
        Arc::new(Quandle::conjugation(&s3, s3.elements()).unwrap())
    }

    #[test]
    fn f_of_r9() {
        let p = inn_object(&r(9)).unwrap();
        assert_eq!(p.group().order(), 18);
        assert_eq!(p.omega().len(), 9);
        assert!(matches!(inn_object(&r(4)), Err(Error::NotFaithful(_))));
    }

    #[test]
    fn g_of_d18() {
        let p = GenPair::new(PermGroup::dihedral(9).unwrap(), reflections(9)).unwrap();
        let q = conj_object(&p).unwrap();
        assert_eq!(q.order(), 9);
        assert!(q.is_faithful());
    }

    #[test]
    fn theta_is_an_isomorphism() {
        for q in [r(3), r(9), conj_s3()] {
            let fq = inn_object(&q).unwrap();
            let gf = Arc::new(conj_object(&fq).unwrap());
            let t = theta(&q, &gf).unwrap();
            assert_eq!(t.source().order(), q.order());
            assert!(t.is_injective() && t.is_surjective() && t.is_valid());
        }
    }

    #[test]
    fn eta_is_an_isomorphism_in_both_categories() {
        let p = Arc::new(GenPair::new(PermGroup::dihedral(9).unwrap(), reflections(9)).unwrap());
        let gp = conj_object(&p).unwrap();
        let fgp = Arc::new(inn_object(&gp).unwrap());
        let e = eta_surj(&p, &gp, &fgp).unwrap();
        assert!(e.check().is_empty() && e.is_bijective());
        assert_eq!(e.source().group().order(), 18);
        let s = eta_star(&p, &gp, &fgp).unwrap();
        assert!(s.is_valid() && is_star_isomorphism(&s));
    }

    #[test]
    fn functors_preserve_identities() {
        let q = r(5);
        let fq = Arc::new(inn_object(&q).unwrap());
        let id = QuandleHom::identity(&q);
        assert_eq!(inn_surj(&id, &fq, &fq).unwrap(), SurjMorphism::identity(&fq));
        assert_eq!(inn_star(&id, &fq, &fq).unwrap(), StarMorphism::identity(&fq));
        let gp = Arc::new(conj_object(&fq).unwrap());
        assert_eq!(conj_surj(&SurjMorphism::identity(&fq), &gp, &gp).unwrap(), QuandleHom::identity(&gp));
        assert_eq!(conj_star(&StarMorphism::identity(&fq), &gp, &gp).unwrap(), QuandleHom::identity(&gp));
    }
}
