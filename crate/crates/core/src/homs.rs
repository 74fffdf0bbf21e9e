//! Quandle homomorphisms, their exhaustive enumeration, and the group maps
//! they induce on inner automorphism groups.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::grpgen::{describe, GenPair, StarMorphism, SurjMorphism};
use crate::perm::{evaluate_over, Permutation};
use crate::quandle::Quandle;

/// A map of points `source → target`, stored as `map[x] = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleHom {
    source: Arc<Quandle>,
    target: Arc<Quandle>,
    map: Vec<usize>,
}

/// The `(x, y)` pairs with `f(s_x(y)) ≠ s_{f(x)}(f(y))`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomReport {
    pub violations: Vec<(usize, usize)>,
}

impl HomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl QuandleHom {
    /// Checks only the shape of `map`.
    pub fn from_map(source: Arc<Quandle>, target: Arc<Quandle>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidMorphism(alloc::format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&point) = map.iter().find(|&&v| v >= target.order()) {
            return Err(Error::PointOutOfRange {
                point,
                n: target.order(),
            });
        }
        Ok(Self { source, target, map })
    }

    /// Like [`QuandleHom::from_map`] but also rejects non-homomorphisms.
    pub fn new(source: Arc<Quandle>, target: Arc<Quandle>, map: Vec<usize>) -> Result<Self> {
        let f = Self::from_map(source, target, map)?;
        let report = f.check();
        if !report.is_empty() {
            return Err(Error::InvalidMorphism(alloc::format!(
                "{} equivariance violations, first at {:?}",
                report.violations.len(),
                report.violations[0]
            )));
        }
        Ok(f)
    }

    pub fn identity(q: &Arc<Quandle>) -> Self {
        Self {
            source: q.clone(),
            target: q.clone(),
            map: (0..q.order()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<Quandle> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Quandle> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn check(&self) -> HomReport {
        let n = self.source.order();
        let mut violations = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let lhs = self.map[self.source.act(x, y)];
                let rhs = self.target.act(self.map[x], self.map[y]);
                if lhs != rhs {
                    violations.push((x, y));
                }
            }
        }
        HomReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_empty()
    }

    /// `self ∘ earlier`.
    pub fn compose(&self, earlier: &QuandleHom) -> Result<QuandleHom> {
        if earlier.target != self.source {
            return Err(Error::NotComposable);
        }
        Ok(Self {
            source: earlier.source.clone(),
            target: self.target.clone(),
            map: earlier.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.map.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }

    /// Distinct image points, sorted.
    pub fn image(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.map.iter().copied().collect();
        set.into_iter().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomMode {
    All,
    Injective,
    Surjective,
}

impl fmt::Display for HomMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::All => "all",
            Self::Injective => "inj",
            Self::Surjective => "surj",
        })
    }
}

struct Search<'a> {
    q1: &'a Quandle,
    q2: &'a Quandle,
    mode: HomMode,
    /// `constraints[p]` holds the triples `(x, y, s_x(y))` whose largest
    /// point is `p`, so they can be checked as soon as `p` is assigned.
    constraints: Vec<Vec<(usize, usize, usize)>>,
    map: Vec<usize>,
    hits: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, p: usize) {
        let n1 = self.q1.order();
        let n2 = self.q2.order();
        if p == n1 {
            self.out.push(self.map.clone());
            return;
        }
        let uncovered = self.hits.iter().filter(|&&h| h == 0).count();
        let remaining_after = n1 - p - 1;
        for v in 0..n2 {
            if self.mode == HomMode::Injective && self.hits[v] > 0 {
                continue;
            }
            if self.mode == HomMode::Surjective {
                let left = if self.hits[v] == 0 { uncovered - 1 } else { uncovered };
                if left > remaining_after {
                    continue;
                }
            }
            self.map[p] = v;
            let ok = self.constraints[p]
                .iter()
                .all(|&(x, y, z)| self.map[z] == self.q2.act(self.map[x], self.map[y]));
            if ok {
                self.hits[v] += 1;
                self.run(p + 1);
                self.hits[v] -= 1;
            }
        }
    }
}

/// Every homomorphism `q1 → q2` satisfying `mode`, in lexicographic order of
/// the map arrays.
///
/// Points are assigned in index order. Each equivariance condition is
/// checked as soon as the three points involved have images, and partial
/// maps that can no longer be injective or surjective are cut.
pub fn enumerate_homs(q1: &Arc<Quandle>, q2: &Arc<Quandle>, mode: HomMode) -> Vec<QuandleHom> {
    let n1 = q1.order();
    let n2 = q2.order();
    if (mode == HomMode::Injective && n1 > n2) || (mode == HomMode::Surjective && n1 < n2) {
        return Vec::new();
    }
    let mut constraints = alloc::vec![Vec::new(); n1];
    for x in 0..n1 {
        for y in 0..n1 {
            let z = q1.act(x, y);
            constraints[x.max(y).max(z)].push((x, y, z));
        }
    }
    let mut search = Search {
        q1,
        q2,
        mode,
        constraints,
        map: alloc::vec![0; n1],
        hits: alloc::vec![0; n2],
        out: Vec::new(),
    };
    search.run(0);
    search
        .out
        .into_iter()
        .map(|map| QuandleHom {
            source: q1.clone(),
            target: q2.clone(),
            map,
        })
        .collect()
}

fn require_faithful(q: &Quandle, side: &str) -> Result<()> {
    if q.is_faithful() {
        Ok(())
    } else {
        Err(Error::NotFaithful(alloc::format!("{side} quandle")))
    }
}

/// Checks that `pair` is `(Inn Q, s(Q))` with generators `s_0, …, s_{n−1}`
/// in point order, which is what word rewriting relies on.
fn require_inn_of(pair: &GenPair, q: &Quandle) -> Result<()> {
    if pair.group().generators() != q.symmetries().as_slice() {
        return Err(Error::InvalidMorphism(
            "group is not generated by the quandle's symmetries in point order".into(),
        ));
    }
    Ok(())
}

/// `Inn(f)` for a surjective homomorphism of faithful quandles, computing
/// both inner automorphism groups.
pub fn induced_surjective(f: &QuandleHom) -> Result<SurjMorphism> {
    let src = Arc::new(f.source.inn()?);
    let tgt = Arc::new(f.target.inn()?);
    induced_surjective_between(f, &src, &tgt)
}

/// `Inn(f) : s_x ↦ s_{f(x)}` with prebuilt endpoints `src = F(Q₁)` and
/// `tgt = F(Q₂)`.
///
/// Each element's witness word over `s_0, …, s_{n−1}` is re-read over
/// `s_{f(0)}, …, s_{f(n−1)}` and evaluated. The result is then checked to be
/// multiplicative and onto `s(Q₂)`; a failure there means a bug, not bad
/// input.
pub fn induced_surjective_between(
    f: &QuandleHom,
    src: &Arc<GenPair>,
    tgt: &Arc<GenPair>,
) -> Result<SurjMorphism> {
    require_faithful(&f.source, "source")?;
    require_faithful(&f.target, "target")?;
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    require_inn_of(src, &f.source)?;
    require_inn_of(tgt, &f.target)?;
    let images: Vec<Permutation> = f.map.iter().map(|&y| f.target.symmetry(y)).collect();
    let g1 = src.group();
    let map = (0..g1.order())
        .map(|i| {
            let p = evaluate_over(g1.witness(i), &images, f.target.order())?;
            tgt.group()
                .index_of(&p)
                .ok_or_else(|| Error::Verification("rewritten word leaves Inn(Q₂)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let m = SurjMorphism::from_map(src.clone(), tgt.clone(), map)?;
    let report = m.check();
    if !report.is_empty() {
        return Err(Error::Verification(alloc::format!(
            "induced surjective map fails: {:?}",
            report.failures
        )));
    }
    Ok(m)
}

/// The star-morphism `F(f)` for an injective homomorphism of faithful
/// quandles, computing both inner automorphism groups.
pub fn induced_injective(f: &QuandleHom) -> Result<StarMorphism> {
    let src = Arc::new(f.source.inn()?);
    let tgt = Arc::new(f.target.inn()?);
    induced_injective_between(f, &src, &tgt)
}

/// `((Inn(Q₂, f(Q₁)), s(f(Q₁))), π)` with `π : s_{f(x)} ↦ s_x`, between
/// prebuilt `src = F(Q₁)` and `tgt = F(Q₂)`.
///
/// `π` is computed by re-reading witness words over `s_{f(x)}` as words over
/// `s_x`, then checked against every star-morphism condition.
pub fn induced_injective_between(
    f: &QuandleHom,
    src: &Arc<GenPair>,
    tgt: &Arc<GenPair>,
) -> Result<StarMorphism> {
    require_faithful(&f.source, "source")?;
    require_faithful(&f.target, "target")?;
    if !f.is_injective() {
        return Err(Error::NotInjective);
    }
    require_inn_of(src, &f.source)?;
    require_inn_of(tgt, &f.target)?;
    let image = f.image();
    let sub = f.target.subquandle_closure(&image)?;
    if sub.points() != image.as_slice() {
        return Err(Error::Verification("image of a homomorphism is not closed".into()));
    }
    let h = f.target.inn_relative(&sub)?;
    // generator j of H is s_{image[j]}; it should go to s_{f⁻¹(image[j])}
    let preimages: Vec<Permutation> = image
        .iter()
        .map(|&y| {
            let x = f.map.iter().position(|&v| v == y).expect("point is in the image");
            f.source.symmetry(x)
        })
        .collect();
    let g1 = src.group();
    let pi = (0..h.group().order())
        .map(|i| {
            let p = evaluate_over(h.group().witness(i), &preimages, f.source.order())?;
            g1.index_of(&p)
                .ok_or_else(|| Error::Verification("rewritten word leaves Inn(Q₁)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let m = StarMorphism::from_parts(
        src.clone(),
        tgt.clone(),
        h.group().clone(),
        h.omega().to_vec(),
        pi,
    )?;
    let report = m.check();
    if !report.is_empty() {
        return Err(Error::Verification(alloc::format!(
            "induced star-morphism fails: {}",
            describe(&report)
        )));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(n: usize) -> Arc<Quandle> {
        Arc::new(Quandle::dihedral(n).unwrap())
    }

    #[test]
    fn check_examples() {
        let r9 = r(9);
        assert!(QuandleHom::identity(&r9).is_valid());

        let f = QuandleHom::from_map(r(3), r9.clone(), vec![0, 3, 6]).unwrap();
        assert!(f.is_valid());

        let r3 = r(3);
        let constant = QuandleHom::from_map(r3.clone(), r3.clone(), vec![0, 0, 0]).unwrap();
        assert!(constant.is_valid());
        let corrupted = QuandleHom::from_map(r3.clone(), r3.clone(), vec![0, 0, 1]).unwrap();
        assert!(!corrupted.is_valid());
    }

    #[test]
    fn shape_errors() {
        let r3 = r(3);
        assert!(QuandleHom::from_map(r3.clone(), r3.clone(), vec![0, 1]).is_err());
        assert_eq!(
            QuandleHom::from_map(r3.clone(), r3.clone(), vec![0, 1, 3]),
            Err(Error::PointOutOfRange { point: 3, n: 3 })
        );
    }

    #[test]
    fn r3_into_r9_injective() {
        let homs = enumerate_homs(&r(3), &r(9), HomMode::Injective);
        assert_eq!(homs.len(), 18);
        for f in &homs {
            assert!(f.is_valid() && f.is_injective());
        }
        assert!(enumerate_homs(&r(3), &r(5), HomMode::Injective).is_empty());
    }

    #[test]
    fn identity_always_enumerated() {
        for n in [1, 3, 4, 5] {
            let q = r(n);
            let all = enumerate_homs(&q, &q, HomMode::All);
            assert!(all.contains(&QuandleHom::identity(&q)));
        }
    }

    #[test]
    fn output_is_lexicographic() {
        let all = enumerate_homs(&r(3), &r(3), HomMode::All);
        assert!(all.windows(2).all(|w| w[0].map() < w[1].map()));
    }

    #[test]
    fn induced_surjective_identity_and_negation() {
        let r3 = r(3);
        let m = induced_surjective(&QuandleHom::identity(&r3)).unwrap();
        assert_eq!(m.map(), (0..6).collect::<Vec<_>>().as_slice());

        let r9 = r(9);
        let neg = QuandleHom::new(r9.clone(), r9.clone(), (0..9).map(|x| (9 - x) % 9).collect())
            .unwrap();
        let m = induced_surjective(&neg).unwrap();
        assert!(m.is_bijective());
        for x in 0..9 {
            let sx = r9.symmetry(x);
            assert_eq!(m.apply(&sx).unwrap(), &r9.symmetry((9 - x) % 9));
        }
    }

    #[test]
    fn induced_surjective_rejects_non_surjective() {
        let f = QuandleHom::from_map(r(3), r(9), vec![0, 3, 6]).unwrap();
        assert_eq!(induced_surjective(&f).unwrap_err(), Error::NotSurjective);
    }

    #[test]
    fn induced_injective_of_r3_into_r9() {
        let f = QuandleHom::new(r(3), r(9), vec![0, 3, 6]).unwrap();
        let m = induced_injective(&f).unwrap();
        assert_eq!(m.sub().order(), 6);
        assert_eq!(m.sub().degree(), 9);
        assert_eq!(m.gamma().len(), 3);
        assert_eq!(m.source().group().order(), 6);
        assert!(m.is_pi_injective());
    }

    #[test]
    fn induced_injective_of_identity_is_identity() {
        let r5 = r(5);
        let m = induced_injective(&QuandleHom::identity(&r5)).unwrap();
        assert_eq!(m, StarMorphism::identity(m.source()));
    }

    #[test]
    fn non_faithful_quandles_are_rejected() {
        let r4 = r(4);
        let id = QuandleHom::identity(&r4);
        assert!(matches!(induced_injective(&id), Err(Error::NotFaithful(_))));
        assert!(matches!(induced_surjective(&id), Err(Error::NotFaithful(_))));
    }
}
