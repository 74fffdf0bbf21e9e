//! Groups with a distinguished generating set, and the two kinds of
//! morphisms between them.
//!
//! A [`GenPair`] `(G, Ω)` is an object when `Ω` is stable under conjugation
//! by `G` and `G` acts faithfully on `Ω` by conjugation. A [`SurjMorphism`]
//! is a homomorphism mapping `Ω₁` onto `Ω₂`. A [`StarMorphism`]
//! `((H, Γ), π)` from `(G₁, Ω₁)` to `(G₂, Ω₂)` runs backwards: `H ≤ G₂` is
//! generated by a conjugation-stable `Γ ⊆ Ω₂`, and `π : H → G₁` restricts
//! to a bijection `Γ → Ω₁`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct GenPair {
    group: PermGroup,
    omega: Vec<Permutation>,
    conj_stable: bool,
    faithful: bool,
}

impl PartialEq for GenPair {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.omega == other.omega
    }
}

impl Eq for GenPair {}

impl GenPair {
    /// Validates `omega ⊆ group` and `⟨omega⟩ = group`, then computes the
    /// conjugation-stability and faithfulness flags.
    pub fn new(group: PermGroup, mut omega: Vec<Permutation>) -> Result<Self> {
        if omega.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !omega.iter().all(|w| group.contains(w)) {
            return Err(Error::NotInGroup);
        }
        omega.sort();
        omega.dedup();
        let generated = PermGroup::generate(omega.clone(), group.order())?;
        if generated.order() != group.order() {
            return Err(Error::NotGenerating);
        }
        Ok(Self::with_flags(group, omega))
    }

    /// Pairs a group with its own (deduplicated) generator list.
    pub(crate) fn from_generating_set(group: PermGroup) -> Self {
        let mut omega = group.generators().to_vec();
        omega.sort();
        omega.dedup();
        Self::with_flags(group, omega)
    }

    fn with_flags(group: PermGroup, omega: Vec<Permutation>) -> Self {
        let conj_stable = group
            .is_conjugation_stable(&omega)
            .expect("omega lies in the group");
        let faithful = group
            .centralizer_of_subset_is_trivial(&omega)
            .expect("omega lies in the group");
        Self {
            group,
            omega,
            conj_stable,
            faithful,
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// The distinguished set, sorted.
    pub fn omega(&self) -> &[Permutation] {
        &self.omega
    }

    pub fn omega_index(&self, p: &Permutation) -> Option<usize> {
        self.omega.binary_search(p).ok()
    }

    pub fn is_conjugation_stable(&self) -> bool {
        self.conj_stable
    }

    pub fn is_faithful(&self) -> bool {
        self.faithful
    }

    /// Conjugation-stable with a faithful conjugation action.
    pub fn is_object(&self) -> bool {
        self.conj_stable && self.faithful
    }

    pub fn require_object(&self) -> Result<()> {
        if !self.conj_stable {
            Err(Error::NotConjugationStable)
        } else if !self.faithful {
            Err(Error::NotFaithful(
                "conjugation action on the distinguished set has a kernel".into(),
            ))
        } else {
            Ok(())
        }
    }

    /// `conj[a][b]` is the index of `ω_a ω_b ω_a⁻¹` in `omega`, `None` where
    /// the conjugate falls outside.
    pub(crate) fn conjugation_table(&self) -> Vec<Vec<Option<usize>>> {
        self.omega
            .iter()
            .map(|a| self.omega.iter().map(|b| self.omega_index(&a.conjugate(b))).collect())
            .collect()
    }
}

/// Extends the assignment `domain.generators()[k] ↦ images[k]` to a group
/// homomorphism `domain → codomain` by walking the Cayley graph breadth
/// first. Every edge is checked, so a consistent walk is a homomorphism.
/// Returns `None` on the first conflict or if an image leaves `codomain`.
pub fn extend_homomorphism(
    domain: &PermGroup,
    images: &[Permutation],
    codomain: &PermGroup,
) -> Option<Vec<usize>> {
    assert_eq!(images.len(), domain.generators().len());
    let steps: Vec<(Permutation, Permutation)> = domain
        .generators()
        .iter()
        .zip(images)
        .flat_map(|(g, i)| [(g.clone(), i.clone()), (g.inverse(), i.inverse())])
        .collect();
    let unset = usize::MAX;
    let mut map = alloc::vec![unset; domain.order()];
    map[0] = 0;
    let mut queue = alloc::vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head];
        head += 1;
        for (ds, cs) in &steps {
            let h = domain.index_of(&(domain.element(g) * ds))?;
            let img = codomain.index_of(&(codomain.element(map[g]) * cs))?;
            if map[h] == unset {
                map[h] = img;
                queue.push(h);
            } else if map[h] != img {
                return None;
            }
        }
    }
    Some(map)
}

fn first_non_multiplicative(
    domain: &PermGroup,
    map: &[usize],
    codomain: &PermGroup,
) -> Option<(usize, usize)> {
    for a in 0..domain.order() {
        for b in 0..domain.order() {
            let ab = domain.product_index(a, b);
            let expected = codomain.index_of(&(codomain.element(map[a]) * codomain.element(map[b])));
            if expected != Some(map[ab]) {
                return Some((a, b));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurjFailure {
    /// `map(a·b) ≠ map(a)·map(b)` for these source indices.
    NotHomomorphism { a: usize, b: usize },
    /// A member of `Ω₁` lands outside `Ω₂`.
    OmegaNotPreserved { omega_index: usize },
    /// These members of `Ω₂` are not hit by `Ω₁`.
    OmegaNotCovered { missing: Vec<usize> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurjReport {
    pub failures: Vec<SurjFailure>,
}

impl SurjReport {
    pub fn is_empty(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A homomorphism `φ : G₁ → G₂` with `φ(Ω₁) = Ω₂`, stored as source element
/// index ↦ target element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjMorphism {
    source: Arc<GenPair>,
    target: Arc<GenPair>,
    map: Vec<usize>,
}

impl SurjMorphism {
    /// Checks only that `map` has the right length and range; see
    /// [`SurjMorphism::check`] for the morphism conditions.
    pub fn from_map(source: Arc<GenPair>, target: Arc<GenPair>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.group().order() || map.iter().any(|&i| i >= target.group().order()) {
            return Err(Error::InvalidMorphism("map shape does not match the groups".into()));
        }
        Ok(Self { source, target, map })
    }

    pub fn from_fn(
        source: Arc<GenPair>,
        target: Arc<GenPair>,
        f: impl Fn(&Permutation) -> Permutation,
    ) -> Result<Self> {
        let map = source
            .group()
            .elements()
            .iter()
            .map(|g| target.group().index_of(&f(g)).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Self::from_map(source, target, map)
    }

    pub fn identity(pair: &Arc<GenPair>) -> Self {
        Self {
            source: pair.clone(),
            target: pair.clone(),
            map: (0..pair.group().order()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<GenPair> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GenPair> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, g: &Permutation) -> Option<&Permutation> {
        let i = self.source.group().index_of(g)?;
        Some(self.target.group().element(self.map[i]))
    }

    pub fn check(&self) -> SurjReport {
        let mut failures = Vec::new();
        let (g1, g2) = (self.source.group(), self.target.group());
        if let Some((a, b)) = first_non_multiplicative(g1, &self.map, g2) {
            failures.push(SurjFailure::NotHomomorphism { a, b });
        }
        let mut covered = alloc::vec![false; self.target.omega().len()];
        for (k, w) in self.source.omega().iter().enumerate() {
            let image = self.apply(w).expect("omega lies in the group");
            match self.target.omega_index(image) {
                Some(j) => covered[j] = true,
                None => failures.push(SurjFailure::OmegaNotPreserved { omega_index: k }),
            }
        }
        let missing: Vec<usize> = (0..covered.len()).filter(|&j| !covered[j]).collect();
        if !missing.is_empty() {
            failures.push(SurjFailure::OmegaNotCovered { missing });
        }
        SurjReport { failures }
    }

    /// `self ∘ earlier`.
    pub fn compose(&self, earlier: &SurjMorphism) -> Result<SurjMorphism> {
        if earlier.target != self.source {
            return Err(Error::NotComposable);
        }
        Ok(Self {
            source: earlier.source.clone(),
            target: self.target.clone(),
            map: earlier.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        let distinct: BTreeSet<usize> = self.map.iter().copied().collect();
        distinct.len() == self.map.len() && self.map.len() == self.target.group().order()
    }

    /// Whether `Ω₁ → Ω₂` is a bijection.
    pub fn is_bijective_on_omega(&self) -> bool {
        let images: BTreeSet<&Permutation> = self
            .source
            .omega()
            .iter()
            .filter_map(|w| self.apply(w))
            .collect();
        images.len() == self.source.omega().len()
            && images.into_iter().eq(self.target.omega().iter())
    }

    /// The inverse map when the underlying group map is a bijection.
    pub fn inverse(&self) -> Option<SurjMorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = alloc::vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Some(Self {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarFailure {
    /// `H` is not contained in the target group.
    NotSubgroup,
    /// `Γ` is not contained in the target's distinguished set.
    GammaOutsideOmega,
    /// `Γ` does not generate `H`.
    NotGenerating,
    /// `Γ` is not stable under conjugation by `H`.
    NotStable,
    /// `π(a·b) ≠ π(a)·π(b)` for these indices of `H`.
    NotHomomorphism { a: usize, b: usize },
    /// Some `π(γ)` lies outside the source's distinguished set.
    GammaNotIntoOmega,
    /// `π|Γ` is not a bijection onto the source's distinguished set.
    NotBijectiveOnGamma,
}

impl fmt::Display for StarFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotSubgroup => f.write_str("subgroup"),
            Self::GammaOutsideOmega => f.write_str("gamma-in-omega"),
            Self::NotGenerating => f.write_str("generation"),
            Self::NotStable => f.write_str("stability"),
            Self::NotHomomorphism { a, b } => write!(f, "homomorphism at ({a}, {b})"),
            Self::GammaNotIntoOmega => f.write_str("gamma-into-omega"),
            Self::NotBijectiveOnGamma => f.write_str("bijectivity"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StarReport {
    pub failures: Vec<StarFailure>,
}

impl StarReport {
    pub fn is_empty(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A morphism `((H, Γ), π)` from `source` to `target`.
///
/// `pi[i]` is the index in `source.group()` of the image of `sub.element(i)`.
/// Equality is structural: same endpoints, same `H` as a set, same `Γ`, same
/// `π` as a function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarMorphism {
    source: Arc<GenPair>,
    target: Arc<GenPair>,
    sub: PermGroup,
    gamma: Vec<Permutation>,
    pi: Vec<usize>,
}

impl StarMorphism {
    /// Checks shapes only; see [`StarMorphism::check`].
    pub fn from_parts(
        source: Arc<GenPair>,
        target: Arc<GenPair>,
        sub: PermGroup,
        mut gamma: Vec<Permutation>,
        pi: Vec<usize>,
    ) -> Result<Self> {
        if sub.degree() != target.group().degree() {
            return Err(Error::DegreeMismatch {
                expected: target.group().degree(),
                found: sub.degree(),
            });
        }
        if pi.len() != sub.order() || pi.iter().any(|&i| i >= source.group().order()) {
            return Err(Error::InvalidMorphism("pi shape does not match the groups".into()));
        }
        gamma.sort();
        gamma.dedup();
        Ok(Self {
            source,
            target,
            sub,
            gamma,
            pi,
        })
    }

    pub fn from_fn(
        source: Arc<GenPair>,
        target: Arc<GenPair>,
        sub: PermGroup,
        gamma: Vec<Permutation>,
        pi: impl Fn(&Permutation) -> Permutation,
    ) -> Result<Self> {
        let map = sub
            .elements()
            .iter()
            .map(|h| source.group().index_of(&pi(h)).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(source, target, sub, gamma, map)
    }

    /// `((G, Ω), id_G)`.
    pub fn identity(pair: &Arc<GenPair>) -> Self {
        Self {
            source: pair.clone(),
            target: pair.clone(),
            sub: pair.group().clone(),
            gamma: pair.omega().to_vec(),
            pi: (0..pair.group().order()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<GenPair> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GenPair> {
        &self.target
    }

    /// `H`.
    pub fn sub(&self) -> &PermGroup {
        &self.sub
    }

    /// `Γ`, sorted.
    pub fn gamma(&self) -> &[Permutation] {
        &self.gamma
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn apply(&self, h: &Permutation) -> Option<&Permutation> {
        let i = self.sub.index_of(h)?;
        Some(self.source.group().element(self.pi[i]))
    }

    pub fn is_pi_injective(&self) -> bool {
        let distinct: BTreeSet<usize> = self.pi.iter().copied().collect();
        distinct.len() == self.pi.len()
    }

    /// `γ ∈ Γ` with `π(γ) = ω`, if any.
    pub fn gamma_preimage(&self, omega: &Permutation) -> Option<&Permutation> {
        self.gamma.iter().find(|g| self.apply(g) == Some(omega))
    }

    pub fn check(&self) -> StarReport {
        let mut failures = Vec::new();
        if !self.sub.elements().iter().all(|h| self.target.group().contains(h)) {
            failures.push(StarFailure::NotSubgroup);
        }
        if !self.gamma.iter().all(|g| self.target.omega_index(g).is_some()) {
            failures.push(StarFailure::GammaOutsideOmega);
        }
        let gamma_in_sub = !self.gamma.is_empty() && self.gamma.iter().all(|g| self.sub.contains(g));
        let generates = gamma_in_sub
            && PermGroup::generate(self.gamma.clone(), self.sub.order())
                .map(|g| g.order() == self.sub.order())
                .unwrap_or(false);
        if !generates {
            failures.push(StarFailure::NotGenerating);
        }
        if !gamma_in_sub || !self.sub.is_conjugation_stable(&self.gamma).unwrap_or(false) {
            failures.push(StarFailure::NotStable);
        }
        if let Some((a, b)) = first_non_multiplicative(&self.sub, &self.pi, self.source.group()) {
            failures.push(StarFailure::NotHomomorphism { a, b });
        }
        let images: Vec<Option<usize>> = self
            .gamma
            .iter()
            .map(|g| self.apply(g).and_then(|w| self.source.omega_index(w)))
            .collect();
        if images.iter().any(Option::is_none) {
            failures.push(StarFailure::GammaNotIntoOmega);
        }
        let hit: BTreeSet<usize> = images.iter().flatten().copied().collect();
        if hit.len() != self.gamma.len() || hit.len() != self.source.omega().len() {
            failures.push(StarFailure::NotBijectiveOnGamma);
        }
        StarReport { failures }
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_empty()
    }
}

/// `later ∘ earlier`, the pullback-style composite.
///
/// With `earlier = ((H₂, Γ₂), π₂) : P₁ → P₂` and
/// `later = ((H₃, Γ₃), π₃) : P₂ → P₃`, the composite has
/// `Γ' = {γ ∈ Γ₃ : π₃(γ) ∈ Γ₂}`, `H' = ⟨Γ'⟩` and `π' = π₂ ∘ π₃|H'`.
pub fn compose_star(later: &StarMorphism, earlier: &StarMorphism) -> Result<StarMorphism> {
    if !(Arc::ptr_eq(&earlier.target, &later.source) || earlier.target == later.source) {
        return Err(Error::NotComposable);
    }
    let mid = &later.source;
    let gamma: Vec<Permutation> = later
        .gamma
        .iter()
        .filter(|g| {
            later
                .apply(g)
                .is_some_and(|w| earlier.gamma.binary_search(w).is_ok())
        })
        .cloned()
        .collect();
    if gamma.is_empty() {
        return Err(Error::Verification("composite has an empty generating set".into()));
    }
    let sub = PermGroup::generate(gamma.clone(), later.sub.order())?;
    let pi = sub
        .elements()
        .iter()
        .map(|h| {
            let in_mid = later
                .apply(h)
                .ok_or_else(|| Error::Verification("composite subgroup escapes H".into()))?;
            debug_assert!(mid.group().contains(in_mid));
            let k = earlier
                .sub
                .index_of(in_mid)
                .ok_or_else(|| Error::Verification("π₃(H') is not inside H₂".into()))?;
            Ok(earlier.pi[k])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StarMorphism {
        source: earlier.source.clone(),
        target: later.target.clone(),
        sub,
        gamma,
        pi,
    })
}

/// Whether `H = G₂`, `Γ = Ω₂`, and `π` is a group isomorphism with
/// `π(Ω₂) = Ω₁`.
pub fn is_star_isomorphism(m: &StarMorphism) -> bool {
    if m.sub != *m.target.group() || m.gamma != m.target.omega() {
        return false;
    }
    if m.sub.order() != m.source.group().order() || !m.is_pi_injective() {
        return false;
    }
    let images: BTreeSet<&Permutation> = m.gamma.iter().filter_map(|g| m.apply(g)).collect();
    images.into_iter().eq(m.source.omega().iter())
}

/// Default bound on the number of candidate subsets visited by
/// [`enumerate_star_morphisms`].
pub const DEFAULT_SUBSET_CAP: usize = 1_000_000;

/// Enumerates every morphism `src → tgt` of the star category.
///
/// Candidate sets `Γ ⊆ Ω_tgt` of size `|Ω_src|` are grown in index order and
/// pruned as soon as the conjugation closure of the chosen members needs an
/// element that was already skipped or outgrows the size. For each surviving
/// `Γ`, every bijection `Γ → Ω_src` respecting conjugation is tried for
/// extension to a homomorphism `⟨Γ⟩ → G_src`. Output is ordered by `Γ`
/// (as index sets into `Ω_tgt`) then by the bijection.
pub fn enumerate_star_morphisms(
    src: &Arc<GenPair>,
    tgt: &Arc<GenPair>,
    subset_cap: usize,
) -> Result<Vec<StarMorphism>> {
    src.require_object()?;
    tgt.require_object()?;
    let k = src.omega().len();
    let m = tgt.omega().len();
    if k > m {
        return Ok(Vec::new());
    }
    let tconj = tgt.conjugation_table();
    let sconj = src.conjugation_table();

    let mut subsets = Vec::new();
    let mut visited = 0usize;
    let mut chosen = Vec::with_capacity(k);
    grow_subsets(&tconj, k, 0, &mut chosen, &mut subsets, &mut visited, subset_cap)?;

    let mut out = Vec::new();
    for subset in subsets {
        let gamma: Vec<Permutation> = subset.iter().map(|&i| tgt.omega()[i].clone()).collect();
        let sub = PermGroup::generate(gamma.clone(), tgt.group().order())?;
        let local: Vec<Vec<usize>> = subset
            .iter()
            .map(|&a| {
                subset
                    .iter()
                    .map(|&b| {
                        let c = tconj[a][b].expect("target omega is stable");
                        subset.binary_search(&c).expect("gamma is closed")
                    })
                    .collect()
            })
            .collect();
        let mut assignment = Vec::with_capacity(k);
        let mut used = alloc::vec![0; k];
        let mut bijections = Vec::new();
        assign_conjugation_preserving(&local, &sconj, k, true, &mut assignment, &mut used, &mut bijections);
        for sigma in bijections {
            let images: Vec<Permutation> = sigma.iter().map(|&j| src.omega()[j].clone()).collect();
            if let Some(pi) = extend_homomorphism(&sub, &images, src.group()) {
                out.push(StarMorphism {
                    source: src.clone(),
                    target: tgt.clone(),
                    sub: sub.clone(),
                    gamma: gamma.clone(),
                    pi,
                });
            }
        }
    }
    Ok(out)
}

fn conj_closure(conj: &[Vec<Option<usize>>], chosen: &[usize]) -> Option<BTreeSet<usize>> {
    let mut set: BTreeSet<usize> = chosen.iter().copied().collect();
    loop {
        let mut added = Vec::new();
        for &a in &set {
            for &b in &set {
                let c = conj[a][b]?;
                if !set.contains(&c) {
                    added.push(c);
                }
            }
        }
        if added.is_empty() {
            return Some(set);
        }
        set.extend(added);
    }
}

fn grow_subsets(
    conj: &[Vec<Option<usize>>],
    k: usize,
    next: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    visited: &mut usize,
    cap: usize,
) -> Result<()> {
    *visited += 1;
    if *visited > cap {
        return Err(Error::SubsetCapExceeded { cap });
    }
    let Some(closure) = conj_closure(conj, chosen) else {
        return Ok(());
    };
    if closure.len() > k {
        return Ok(());
    }
    // an element below `next` that was skipped can never be added back
    if closure.iter().any(|&c| c < next && chosen.binary_search(&c).is_err()) {
        return Ok(());
    }
    if chosen.len() == k {
        if closure.len() == k {
            out.push(chosen.clone());
        }
        return Ok(());
    }
    let m = conj.len();
    for i in next..m {
        if m - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        grow_subsets(conj, k, i + 1, chosen, out, visited, cap)?;
        chosen.pop();
    }
    Ok(())
}

/// Enumerates maps `σ` from `0..dom.len()` into `0..codomain_conj.len()`
/// with `σ(dom[a][b]) = codomain_conj[σ(a)][σ(b)]`, either bijective
/// (`bijective = true`) or surjective.
fn assign_conjugation_preserving(
    dom: &[Vec<usize>],
    cod: &[Vec<Option<usize>>],
    target_size: usize,
    bijective: bool,
    assignment: &mut Vec<usize>,
    used: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let p = assignment.len();
    if p == dom.len() {
        if used.iter().all(|&u| u > 0) {
            out.push(assignment.clone());
        }
        return;
    }
    let uncovered = used.iter().filter(|&&u| u == 0).count();
    for v in 0..target_size {
        if bijective && used[v] > 0 {
            continue;
        }
        let still_uncovered = if used[v] > 0 { uncovered } else { uncovered - 1 };
        if still_uncovered > dom.len() - p - 1 {
            continue;
        }
        assignment.push(v);
        used[v] += 1;
        let consistent = (0..=p).all(|a| {
            (0..=p).all(|b| {
                let c = dom[a][b];
                c > p || cod[assignment[a]][assignment[b]] == Some(assignment[c])
            })
        });
        if consistent {
            assign_conjugation_preserving(dom, cod, target_size, bijective, assignment, used, out);
        }
        used[v] -= 1;
        assignment.pop();
    }
}

/// Enumerates every morphism `src → tgt` of the surjective category: group
/// homomorphisms determined by a surjection `Ω_src → Ω_tgt`, extended over
/// words with conflict detection.
pub fn enumerate_surj_morphisms(src: &Arc<GenPair>, tgt: &Arc<GenPair>) -> Result<Vec<SurjMorphism>> {
    src.require_object()?;
    tgt.require_object()?;
    let k1 = src.omega().len();
    let k2 = tgt.omega().len();
    if k1 < k2 {
        return Ok(Vec::new());
    }
    // Generated by omega itself so witness words are words over omega. The
    // element set, hence the canonical indexing, is the same as src's.
    let over_omega = PermGroup::generate(src.omega().to_vec(), src.group().order())?;
    debug_assert!(over_omega == *src.group());
    let sconj: Vec<Vec<usize>> = src
        .conjugation_table()
        .into_iter()
        .map(|row| row.into_iter().map(|c| c.expect("source omega is stable")).collect())
        .collect();
    let tconj = tgt.conjugation_table();
    let mut assignment = Vec::with_capacity(k1);
    let mut used = alloc::vec![0; k2];
    let mut maps = Vec::new();
    assign_conjugation_preserving(&sconj, &tconj, k2, false, &mut assignment, &mut used, &mut maps);
    let mut out = Vec::new();
    for sigma in maps {
        let images: Vec<Permutation> = sigma.iter().map(|&j| tgt.omega()[j].clone()).collect();
        if let Some(map) = extend_homomorphism(&over_omega, &images, tgt.group()) {
            out.push(SurjMorphism {
                source: src.clone(),
                target: tgt.clone(),
                map,
            });
        }
    }
    Ok(out)
}

/// Describes a failed clause in human-readable form.
pub fn describe(report: &StarReport) -> String {
    let parts: Vec<String> = report.failures.iter().map(|f| alloc::format!("{f}")).collect();
    parts.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{reflections, transpositions, DEFAULT_CAP};
    use alloc::vec;

    fn d18() -> Arc<GenPair> {
        Arc::new(GenPair::new(PermGroup::dihedral(9).unwrap(), reflections(9)).unwrap())
    }

    fn d6() -> Arc<GenPair> {
        Arc::new(GenPair::new(PermGroup::dihedral(3).unwrap(), reflections(3)).unwrap())
    }

    #[test]
    fn genpair_flags() {
        let p = d18();
        assert!(p.is_conjugation_stable() && p.is_faithful());

        let s3 = PermGroup::symmetric(3, DEFAULT_CAP).unwrap();
        let p = GenPair::new(s3, transpositions(3)).unwrap();
        assert!(p.is_object());

        let c3 = PermGroup::cyclic(3).unwrap();
        let gen = c3.generators()[0].clone();
        let p = GenPair::new(c3, vec![gen]).unwrap();
        assert!(p.is_conjugation_stable());
        assert!(!p.is_faithful());
    }

    #[test]
    fn genpair_rejects_non_generating_sets() {
        let c3 = PermGroup::cyclic(3).unwrap();
        assert_eq!(
            GenPair::new(c3.clone(), vec![Permutation::identity(3)]),
            Err(Error::NotGenerating)
        );
        assert_eq!(GenPair::new(c3, vec![]), Err(Error::EmptySubset));
    }

    #[test]
    fn identity_morphisms_are_valid() {
        let p = d18();
        assert!(SurjMorphism::identity(&p).check().is_empty());
        let id = StarMorphism::identity(&p);
        assert!(id.is_valid());
        assert!(is_star_isomorphism(&id));
    }

    #[test]
    fn collapsing_surj_map_is_rejected() {
        let p = d18();
        // the trivial map sends every reflection to the identity
        let m = SurjMorphism::from_map(p.clone(), p.clone(), vec![0; 18]).unwrap();
        let report = m.check();
        assert!(report
            .failures
            .iter()
            .any(|f| matches!(f, SurjFailure::OmegaNotCovered { .. })));
    }

    #[test]
    fn removing_a_gamma_element_breaks_generation() {
        let p = d18();
        let id = StarMorphism::identity(&p);
        let gamma: Vec<Permutation> = id.gamma()[1..].to_vec();
        let broken = StarMorphism::from_parts(
            p.clone(),
            p.clone(),
            id.sub().clone(),
            gamma,
            id.pi().to_vec(),
        )
        .unwrap();
        let report = broken.check();
        assert!(!report.is_empty());
        assert!(report.failures.contains(&StarFailure::NotBijectiveOnGamma));
    }

    #[test]
    fn d6_into_d18_has_eighteen_morphisms() {
        let all = enumerate_star_morphisms(&d6(), &d18(), DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(all.len(), 18);
        let subgroups: BTreeSet<Vec<Permutation>> =
            all.iter().map(|m| m.sub().elements().to_vec()).collect();
        assert_eq!(subgroups.len(), 3);
        assert!(all.iter().all(|m| m.is_valid() && m.gamma().len() == 3));
    }

    #[test]
    fn larger_source_gives_nothing() {
        assert!(enumerate_star_morphisms(&d18(), &d6(), DEFAULT_SUBSET_CAP)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn subset_cap_is_enforced() {
        assert_eq!(
            enumerate_star_morphisms(&d6(), &d18(), 3),
            Err(Error::SubsetCapExceeded { cap: 3 })
        );
    }

    #[test]
    fn composition_with_identity() {
        let all = enumerate_star_morphisms(&d6(), &d18(), DEFAULT_SUBSET_CAP).unwrap();
        let m = &all[5];
        let left = compose_star(&StarMorphism::identity(&d18()), m).unwrap();
        let right = compose_star(m, &StarMorphism::identity(&d6())).unwrap();
        assert_eq!(&left, m);
        assert_eq!(&right, m);
        assert_eq!(compose_star(m, m), Err(Error::NotComposable));
    }

    #[test]
    fn surj_enumeration_of_d18_onto_d6() {
        let maps = enumerate_surj_morphisms(&d18(), &d6()).unwrap();
        assert!(!maps.is_empty());
        assert!(maps.iter().all(|m| m.check().is_empty()));
        assert!(enumerate_surj_morphisms(&d6(), &d18()).unwrap().is_empty());
    }

    #[test]
    fn surj_inverse_round_trip() {
        let p = d18();
        let autos = enumerate_surj_morphisms(&p, &p).unwrap();
        for a in &autos {
            let inv = a.inverse().expect("automorphism");
            assert!(inv.check().is_empty());
            assert_eq!(inv.compose(a).unwrap(), SurjMorphism::identity(&p));
            assert_eq!(a.compose(&inv).unwrap(), SurjMorphism::identity(&p));
        }
    }
}
