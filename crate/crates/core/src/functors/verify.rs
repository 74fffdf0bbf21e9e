//! Finite certification of the two equivalences on a corpus of faithful
//! quandles.
//!
//! The work is split into phases so that callers can run them in parallel:
//! [`prepare_instance`] per quandle, [`check_pair`] per ordered pair, then
//! [`check_chain`] per composable triple and [`check_associativity`] per
//! composable quadruple. [`verify_equivalence`] runs them in order on one
//! thread.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::{
    conj_object, conj_star, conj_surj, eta_star, eta_surj, inn_object, inn_star, inn_surj, theta,
};
use crate::error::{Error, Result};
use crate::grpgen::{
    compose_star, enumerate_star_morphisms, enumerate_surj_morphisms, is_star_isomorphism,
    GenPair, StarMorphism, SurjMorphism,
};
use crate::homs::{enumerate_homs, HomMode, QuandleHom};
use crate::quandle::Quandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Surjective homomorphisms on both sides.
    Surjective,
    /// Injective homomorphisms against star-morphisms.
    Injective,
}

impl Mode {
    pub fn hom_mode(self) -> HomMode {
        match self {
            Self::Surjective => HomMode::Surjective,
            Self::Injective => HomMode::Injective,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Surjective => "surj",
            Self::Injective => "inj",
        })
    }
}

/// A group-side morphism of whichever category the mode selects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupMorphism {
    Surj(SurjMorphism),
    Star(StarMorphism),
}

impl GroupMorphism {
    pub fn identity(mode: Mode, p: &Arc<GenPair>) -> Self {
        match mode {
            Mode::Surjective => Self::Surj(SurjMorphism::identity(p)),
            Mode::Injective => Self::Star(StarMorphism::identity(p)),
        }
    }

    /// `self ∘ earlier`.
    pub fn compose(&self, earlier: &GroupMorphism) -> Result<GroupMorphism> {
        match (self, earlier) {
            (Self::Surj(a), Self::Surj(b)) => a.compose(b).map(Self::Surj),
            (Self::Star(a), Self::Star(b)) => compose_star(a, b).map(Self::Star),
            _ => Err(Error::NotComposable),
        }
    }

    pub fn is_valid(&self) -> bool {
        match self {
            Self::Surj(m) => m.check().is_empty(),
            Self::Star(m) => m.is_valid(),
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        match self {
            Self::Surj(m) => m.check().is_empty() && m.is_bijective(),
            Self::Star(m) => m.is_valid() && is_star_isomorphism(m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    /// `θ_Q` is a quandle isomorphism.
    ThetaIso,
    /// `η_{F(Q)}` is an isomorphism of its category.
    EtaIso,
    /// `F` and `G` send identities to identities.
    FunctorIdentity,
    /// Hom-set sizes agree on both sides.
    Count,
    /// `f ↦ F(f)` is a bijection onto the enumerated group-side Hom-set.
    Bijection,
    /// `θ_{Q₂} ∘ GF(f) = f ∘ θ_{Q₁}`.
    ThetaNaturality,
    /// `Φ ∘ η_{P₁} = η_{P₂} ∘ FG(Φ)`.
    EtaNaturality,
    /// Identities are two-sided units for group-side composition.
    Unit,
    /// `F(g ∘ f) = F(g) ∘ F(f)`.
    FComposition,
    /// `G(Φ₂ ∘ Φ₁) = G(Φ₂) ∘ G(Φ₁)`.
    GComposition,
    /// Group-side composition is associative.
    Associativity,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::ThetaIso => "theta-iso",
            Self::EtaIso => "eta-iso",
            Self::FunctorIdentity => "functor-identity",
            Self::Count => "count",
            Self::Bijection => "bijection",
            Self::ThetaNaturality => "theta-naturality",
            Self::EtaNaturality => "eta-naturality",
            Self::Unit => "unit",
            Self::FComposition => "f-composition",
            Self::GComposition => "g-composition",
            Self::Associativity => "associativity",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub kind: CheckKind,
    /// The instance, pair, or chain the check covers, e.g. `R3 -> R9`.
    pub subject: String,
    pub passed: bool,
    /// Sizes on success, the first witness on failure.
    pub detail: String,
}

impl CheckRecord {
    fn new(kind: CheckKind, subject: &str, passed: bool, detail: String) -> Self {
        Self {
            kind,
            subject: subject.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub mode: Mode,
    pub instances: Vec<String>,
    pub checks: Vec<CheckRecord>,
}

impl EquivalenceReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn is_passing(&self) -> bool {
        self.failures().next().is_none()
    }

    /// `(kind, passed, total)` for every kind that occurs, in kind order.
    pub fn summary(&self) -> Vec<(CheckKind, usize, usize)> {
        let mut rows: Vec<(CheckKind, usize, usize)> = Vec::new();
        let mut kinds: Vec<CheckKind> = self.checks.iter().map(|c| c.kind).collect();
        kinds.sort();
        kinds.dedup();
        for kind in kinds {
            let of_kind = self.checks.iter().filter(|c| c.kind == kind);
            let total = of_kind.clone().count();
            let passed = of_kind.filter(|c| c.passed).count();
            rows.push((kind, passed, total));
        }
        rows
    }
}

/// Everything computed once per corpus member.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub quandle: Arc<Quandle>,
    /// `F(Q)`.
    pub inn: Arc<GenPair>,
    /// `GF(Q) = Conj(s(Q))`, which is also `G(P)` for `P = F(Q)`.
    pub conj: Arc<Quandle>,
    /// `θ_Q : GF(Q) → Q`.
    pub theta: QuandleHom,
    /// `FG(P)` for `P = F(Q)`.
    pub inn_conj: Arc<GenPair>,
    /// `η_P : FG(P) → P`.
    pub eta: GroupMorphism,
}

impl Instance {
    fn f_of(&self, f: &QuandleHom, target: &Instance, mode: Mode) -> Result<GroupMorphism> {
        apply_f(f, &self.inn, &target.inn, mode)
    }
}

fn apply_f(f: &QuandleHom, src: &Arc<GenPair>, tgt: &Arc<GenPair>, mode: Mode) -> Result<GroupMorphism> {
    Ok(match mode {
        Mode::Surjective => GroupMorphism::Surj(inn_surj(f, src, tgt)?),
        Mode::Injective => GroupMorphism::Star(inn_star(f, src, tgt)?),
    })
}

fn apply_g(m: &GroupMorphism, src: &Arc<Quandle>, tgt: &Arc<Quandle>) -> Result<QuandleHom> {
    match m {
        GroupMorphism::Surj(m) => conj_surj(m, src, tgt),
        GroupMorphism::Star(m) => conj_star(m, src, tgt),
    }
}

fn outcome(kind: CheckKind, subject: &str, failure: Option<String>, ok_detail: String) -> CheckRecord {
    match failure {
        None => CheckRecord::new(kind, subject, true, ok_detail),
        Some(why) => CheckRecord::new(kind, subject, false, why),
    }
}

/// Builds `F(Q)`, `GF(Q)`, `θ_Q`, `FG(F(Q))` and `η`, and checks that `θ`
/// and `η` are isomorphisms and that both functors preserve identities.
///
/// Fails with [`Error::NotFaithful`] naming the member if `q` is not
/// faithful.
pub fn prepare_instance(name: &str, q: Quandle, mode: Mode) -> Result<(Instance, Vec<CheckRecord>)> {
    if !q.is_faithful() {
        return Err(Error::NotFaithful(alloc::format!("corpus member {name}")));
    }
    let quandle = Arc::new(q);
    let inn = Arc::new(inn_object(&quandle)?);
    let conj = Arc::new(conj_object(&inn)?);
    let theta_q = theta(&quandle, &conj)?;
    let inn_conj = Arc::new(inn_object(&conj)?);
    let eta = match mode {
        Mode::Surjective => GroupMorphism::Surj(eta_surj(&inn, &conj, &inn_conj)?),
        Mode::Injective => GroupMorphism::Star(eta_star(&inn, &conj, &inn_conj)?),
    };

    let mut checks = Vec::new();
    let theta_inverse_valid = {
        let mut inv = alloc::vec![0; theta_q.map().len()];
        for (p, &x) in theta_q.map().iter().enumerate() {
            inv[x] = p;
        }
        QuandleHom::from_map(quandle.clone(), conj.clone(), inv).map(|h| h.is_valid()).unwrap_or(false)
    };
    let theta_ok = theta_q.is_valid() && theta_q.is_injective() && theta_q.is_surjective() && theta_inverse_valid;
    checks.push(CheckRecord::new(
        CheckKind::ThetaIso,
        name,
        theta_ok,
        alloc::format!("{} points", quandle.order()),
    ));
    checks.push(CheckRecord::new(
        CheckKind::EtaIso,
        name,
        eta.is_isomorphism(),
        alloc::format!("group order {}", inn.group().order()),
    ));

    let id_q = QuandleHom::identity(&quandle);
    let f_id = apply_f(&id_q, &inn, &inn, mode)?;
    let id_p = GroupMorphism::identity(mode, &inn);
    let g_id = apply_g(&id_p, &conj, &conj)?;
    let failure = if f_id != id_p {
        Some("F(id) differs from id".to_string())
    } else if g_id != QuandleHom::identity(&conj) {
        Some("G(id) differs from id".to_string())
    } else {
        None
    };
    checks.push(outcome(CheckKind::FunctorIdentity, name, failure, String::new()));

    Ok((
        Instance {
            name: name.to_string(),
            quandle,
            inn,
            conj,
            theta: theta_q,
            inn_conj,
            eta,
        },
        checks,
    ))
}

/// Hom-sets and functor images for one ordered pair of instances.
#[derive(Clone, Debug)]
pub struct PairData {
    pub source: usize,
    pub target: usize,
    /// Quandle-side homs from the enumerator.
    pub homs: Vec<QuandleHom>,
    /// `F(f)` for each of `homs`, in the same order.
    pub images: Vec<GroupMorphism>,
    /// Group-side morphisms from the independent enumerator.
    pub group_side: Vec<GroupMorphism>,
    /// `G(Φ)` for each of `group_side`, in the same order.
    pub conj_images: Vec<QuandleHom>,
}

fn pair_subject(instances: &[Instance], i: usize, j: usize) -> String {
    alloc::format!("{} -> {}", instances[i].name, instances[j].name)
}

/// Enumerates both Hom-sets for `(i, j)`, checks that their sizes agree and
/// that `F` maps one bijectively onto the other, and checks the `θ` and `η`
/// naturality squares and unit laws for every morphism.
pub fn check_pair(
    instances: &[Instance],
    i: usize,
    j: usize,
    mode: Mode,
    subset_cap: usize,
) -> Result<(PairData, Vec<CheckRecord>)> {
    let (a, b) = (&instances[i], &instances[j]);
    let subject = pair_subject(instances, i, j);
    let mut checks = Vec::new();

    let homs = enumerate_homs(&a.quandle, &b.quandle, mode.hom_mode());
    let group_side: Vec<GroupMorphism> = match mode {
        Mode::Surjective => enumerate_surj_morphisms(&a.inn, &b.inn)?
            .into_iter()
            .map(GroupMorphism::Surj)
            .collect(),
        Mode::Injective => enumerate_star_morphisms(&a.inn, &b.inn, subset_cap)?
            .into_iter()
            .map(GroupMorphism::Star)
            .collect(),
    };
    checks.push(CheckRecord::new(
        CheckKind::Count,
        &subject,
        homs.len() == group_side.len(),
        alloc::format!("quandle side {}, group side {}", homs.len(), group_side.len()),
    ));

    let mut images = Vec::with_capacity(homs.len());
    let mut failure = None;
    for (k, f) in homs.iter().enumerate() {
        match a.f_of(f, b, mode) {
            Ok(m) => images.push(m),
            Err(e) => {
                failure.get_or_insert(alloc::format!("F fails on hom {:?}: {e}", f.map()));
                break;
            }
        }
        let m = &images[k];
        if images[..k].contains(m) {
            failure.get_or_insert(alloc::format!("F is not injective at hom {:?}", f.map()));
        }
        if !group_side.contains(m) {
            failure.get_or_insert(alloc::format!("F({:?}) is not an enumerated morphism", f.map()));
        }
    }
    if failure.is_none() && images.len() != group_side.len() {
        failure = Some(alloc::format!(
            "F hits {} of {} group-side morphisms",
            images.len(),
            group_side.len()
        ));
    }
    checks.push(outcome(
        CheckKind::Bijection,
        &subject,
        failure,
        alloc::format!("{} morphisms", images.len()),
    ));

    // θ naturality for every hom
    let mut failure = None;
    for (f, ff) in homs.iter().zip(&images) {
        let gff = apply_g(ff, &a.conj, &b.conj)?;
        let lhs = b.theta.compose(&gff)?;
        let rhs = f.compose(&a.theta)?;
        if lhs != rhs {
            failure = Some(alloc::format!("square fails for hom {:?}", f.map()));
            break;
        }
    }
    checks.push(outcome(
        CheckKind::ThetaNaturality,
        &subject,
        failure,
        alloc::format!("{} squares", homs.len()),
    ));

    // η naturality and units for every group-side morphism
    let mut conj_images = Vec::with_capacity(group_side.len());
    let mut eta_failure = None;
    let mut unit_failure = None;
    let id_a = GroupMorphism::identity(mode, &a.inn);
    let id_b = GroupMorphism::identity(mode, &b.inn);
    for (k, phi) in group_side.iter().enumerate() {
        let g_phi = apply_g(phi, &a.conj, &b.conj)?;
        let fg_phi = apply_f(&g_phi, &a.inn_conj, &b.inn_conj, mode)?;
        conj_images.push(g_phi);
        let lhs = phi.compose(&a.eta)?;
        let rhs = b.eta.compose(&fg_phi)?;
        if lhs != rhs && eta_failure.is_none() {
            eta_failure = Some(alloc::format!("square fails for group-side morphism #{k}"));
        }
        if (id_b.compose(phi)? != *phi || phi.compose(&id_a)? != *phi) && unit_failure.is_none() {
            unit_failure = Some(alloc::format!("unit law fails for group-side morphism #{k}"));
        }
    }
    checks.push(outcome(
        CheckKind::EtaNaturality,
        &subject,
        eta_failure,
        alloc::format!("{} squares", group_side.len()),
    ));
    checks.push(outcome(
        CheckKind::Unit,
        &subject,
        unit_failure,
        alloc::format!("{} morphisms", group_side.len()),
    ));

    Ok((
        PairData {
            source: i,
            target: j,
            homs,
            images,
            group_side,
            conj_images,
        },
        checks,
    ))
}

/// Looks up the pair `(i, j)` in a table laid out row-major, `n × n`.
fn pair(pairs: &[PairData], n: usize, i: usize, j: usize) -> &PairData {
    let p = &pairs[i * n + j];
    debug_assert!(p.source == i && p.target == j);
    p
}

/// Functor composition laws on every composable pair `i → j → k`.
/// `pairs` must hold every ordered pair, row-major.
pub fn check_chain(
    instances: &[Instance],
    pairs: &[PairData],
    i: usize,
    j: usize,
    k: usize,
    mode: Mode,
) -> Result<Vec<CheckRecord>> {
    let n = instances.len();
    let (first, second) = (pair(pairs, n, i, j), pair(pairs, n, j, k));
    let subject = alloc::format!(
        "{} -> {} -> {}",
        instances[i].name,
        instances[j].name,
        instances[k].name
    );
    let mut checks = Vec::new();

    let mut failure = None;
    'f: for (f, ff) in first.homs.iter().zip(&first.images) {
        for (g, fg) in second.homs.iter().zip(&second.images) {
            let direct = instances[i].f_of(&g.compose(f)?, &instances[k], mode)?;
            if direct != fg.compose(ff)? {
                failure = Some(alloc::format!("fails for {:?} then {:?}", f.map(), g.map()));
                break 'f;
            }
        }
    }
    checks.push(outcome(
        CheckKind::FComposition,
        &subject,
        failure,
        alloc::format!("{} pairs", first.homs.len() * second.homs.len()),
    ));

    let mut failure = None;
    'g: for (p1, (phi1, g1)) in first.group_side.iter().zip(&first.conj_images).enumerate() {
        for (p2, (phi2, g2)) in second.group_side.iter().zip(&second.conj_images).enumerate() {
            let direct = apply_g(&phi2.compose(phi1)?, &instances[i].conj, &instances[k].conj)?;
            if direct != g2.compose(g1)? {
                failure = Some(alloc::format!("fails for group-side morphisms #{p1} then #{p2}"));
                break 'g;
            }
        }
    }
    checks.push(outcome(
        CheckKind::GComposition,
        &subject,
        failure,
        alloc::format!("{} pairs", first.group_side.len() * second.group_side.len()),
    ));
    Ok(checks)
}

/// Up to three morphisms per Hom-set: first, middle, last.
fn sample(ms: &[GroupMorphism]) -> Vec<&GroupMorphism> {
    let mut idx = alloc::vec![0, ms.len() / 2, ms.len().saturating_sub(1)];
    idx.dedup();
    idx.into_iter().filter_map(|k| ms.get(k)).collect()
}

/// `Φ₃ ∘ (Φ₂ ∘ Φ₁) = (Φ₃ ∘ Φ₂) ∘ Φ₁` on sampled group-side morphisms along
/// `i → j → k → l`.
pub fn check_associativity(
    instances: &[Instance],
    pairs: &[PairData],
    chain: [usize; 4],
) -> Result<CheckRecord> {
    let n = instances.len();
    let [i, j, k, l] = chain;
    let subject = alloc::format!(
        "{} -> {} -> {} -> {}",
        instances[i].name,
        instances[j].name,
        instances[k].name,
        instances[l].name
    );
    let mut triples = 0;
    for phi1 in sample(&pair(pairs, n, i, j).group_side) {
        for phi2 in sample(&pair(pairs, n, j, k).group_side) {
            for phi3 in sample(&pair(pairs, n, k, l).group_side) {
                triples += 1;
                let left = phi3.compose(&phi2.compose(phi1)?)?;
                let right = phi3.compose(phi2)?.compose(phi1)?;
                if left != right {
                    return Ok(CheckRecord::new(
                        CheckKind::Associativity,
                        &subject,
                        false,
                        alloc::format!("differs on sampled triple #{triples}"),
                    ));
                }
            }
        }
    }
    Ok(CheckRecord::new(
        CheckKind::Associativity,
        &subject,
        true,
        alloc::format!("{triples} triples"),
    ))
}

/// Runs every phase serially. Check failures are recorded in the report;
/// errors are reserved for unmet preconditions (a non-faithful member, a
/// cap exceeded) and internal inconsistencies.
pub fn verify_equivalence(
    corpus: &[(String, Quandle)],
    mode: Mode,
    subset_cap: usize,
) -> Result<EquivalenceReport> {
    let mut instances = Vec::new();
    let mut checks = Vec::new();
    for (name, q) in corpus {
        let (inst, c) = prepare_instance(name, q.clone(), mode)?;
        instances.push(inst);
        checks.extend(c);
    }
    let n = instances.len();
    let mut pairs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (p, c) = check_pair(&instances, i, j, mode, subset_cap)?;
            pairs.push(p);
            checks.extend(c);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checks.extend(check_chain(&instances, &pairs, i, j, k, mode)?);
            }
        }
    }
    for chain in quadruples(n) {
        checks.push(check_associativity(&instances, &pairs, chain)?);
    }
    Ok(EquivalenceReport {
        mode,
        instances: instances.into_iter().map(|i| i.name).collect(),
        checks,
    })
}

/// All `[i, j, k, l]` over `0..n`, lexicographically.
pub fn quadruples(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n.pow(4)).map(move |c| [c / (n * n * n), (c / (n * n)) % n, (c / n) % n, c % n])
}
