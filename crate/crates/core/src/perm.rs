//! Permutations of `0..n` and small permutation groups.
//!
//! A [`PermGroup`] is always held fully enumerated. Its elements are sorted
//! lexicographically by image array, so an element's index is canonical: it
//! depends only on the element set, never on the generators used to build it.
//! The identity is the lexicographically smallest permutation and therefore
//! always sits at index 0.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Default upper bound on the number of elements [`PermGroup::generate`]
/// will enumerate.
pub const DEFAULT_CAP: usize = 100_000;

/// A bijection on `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = alloc::vec![false; degree];
        for &i in &images {
            if i >= degree || seen[i] {
                return Err(Error::NotAPermutation { degree });
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation from cycles; the cycles are applied right to left.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Self::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..degree).collect();
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if p >= degree || next >= degree {
                    return Err(Error::NotAPermutation { degree });
                }
                images[p] = next;
            }
            let c = Self::from_images(images)?;
            acc = c.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = alloc::vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    /// `self · s · self⁻¹`.
    pub fn conjugate(&self, s: &Permutation) -> Self {
        &(self * s) * &self.inverse()
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self * other == other * self
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = &p * self;
            k += 1;
        }
        k
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::identity(self.degree());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

/// Composition; panics on a degree mismatch. Use [`Permutation::compose`]
/// for the checked version.
impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        match self.compose(rhs) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::MalformedTable("permutation must be written [i0 i1 ...]".to_string()))?;
        let images = inner
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::MalformedTable(alloc::format!("bad image `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }
}

/// One signed generator in a word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Self {
            generator,
            inverse: false,
        }
    }

    pub fn neg(generator: usize) -> Self {
        Self {
            generator,
            inverse: true,
        }
    }
}

pub type Word = Vec<Letter>;

/// A finite permutation group with every element enumerated and a witness
/// word over the generators recorded for each element.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    words: Vec<Word>,
}

/// Two groups are equal when they have the same element set; generators and
/// witness words are presentation details.
impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closes `generators` under composition.
    ///
    /// Elements are discovered breadth-first from the identity by right
    /// multiplication with each generator and then its inverse, in generator
    /// order. The first word reaching an element is kept as its witness, so
    /// witnesses are shortest words with ties broken by generator index.
    pub fn generate(generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let degree = generators.first().ok_or(Error::NoGenerators)?.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let steps: Vec<(Letter, Permutation)> = generators
            .iter()
            .enumerate()
            .flat_map(|(k, g)| [(Letter::pos(k), g.clone()), (Letter::neg(k), g.inverse())])
            .collect();

        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        let mut order: Vec<(Permutation, Word)> = Vec::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        order.push((id, Word::new()));
        let mut head = 0;
        while head < order.len() {
            let (g, w) = order[head].clone();
            head += 1;
            for (letter, step) in &steps {
                let h = &g * step;
                if seen.insert(h.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let mut hw = w.clone();
                    hw.push(*letter);
                    order.push((h, hw));
                }
            }
        }
        order.sort_by(|a, b| a.0.cmp(&b.0));
        let (elements, words) = order.into_iter().unzip();
        Ok(Self {
            degree,
            generators,
            elements,
            words,
        })
    }

    /// The trivial group on `degree` points, generated by the identity.
    pub fn trivial(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        Self {
            degree,
            generators: alloc::vec![id.clone()],
            elements: alloc::vec![id],
            words: alloc::vec![Word::new()],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    pub fn witness(&self, index: usize) -> &Word {
        &self.words[index]
    }

    pub fn witness_of(&self, p: &Permutation) -> Option<&Word> {
        self.index_of(p).map(|i| &self.words[i])
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        let p = &self.elements[a] * &self.elements[b];
        self.index_of(&p).expect("group is closed under composition")
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        self.index_of(&self.elements[a].inverse())
            .expect("group is closed under inverses")
    }

    /// Product of the word's letters in order; the empty word is the identity.
    pub fn evaluate_word(&self, word: &[Letter]) -> Result<Permutation> {
        evaluate_over(word, &self.generators, self.degree)
    }

    fn require_subset(&self, subset: &[Permutation]) -> Result<()> {
        if subset.iter().all(|s| self.contains(s)) {
            Ok(())
        } else {
            Err(Error::NotInGroup)
        }
    }

    /// Whether the identity is the only element commuting with every member
    /// of `subset`.
    pub fn centralizer_of_subset_is_trivial(&self, subset: &[Permutation]) -> Result<bool> {
        self.require_subset(subset)?;
        Ok(self
            .elements
            .iter()
            .skip(1)
            .all(|g| subset.iter().any(|s| !g.commutes_with(s))))
    }

    /// Whether `g s g⁻¹ ∈ subset` for every `g` in the group and `s` in
    /// `subset`. Stability under the generators and their inverses is
    /// enough in a finite group, so only those are tried.
    pub fn is_conjugation_stable(&self, subset: &[Permutation]) -> Result<bool> {
        self.require_subset(subset)?;
        let set: BTreeSet<&Permutation> = subset.iter().collect();
        Ok(self.generators.iter().all(|g| {
            let gi = g.inverse();
            subset
                .iter()
                .all(|s| set.contains(&g.conjugate(s)) && set.contains(&gi.conjugate(s)))
        }))
    }

    /// The subgroup generated by `generators`, which must lie in `self`.
    pub fn subgroup(&self, generators: Vec<Permutation>) -> Result<PermGroup> {
        self.require_subset(&generators)?;
        PermGroup::generate(generators, self.order())
    }

    /// Elements of the group keyed by value, for callers that need repeated
    /// lookups of products they have not yet reduced to indices.
    pub fn index_map(&self) -> BTreeMap<&Permutation, usize> {
        self.elements.iter().enumerate().map(|(i, p)| (p, i)).collect()
    }

    /// Cyclic group of order `n` acting on `n` points.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAPermutation { degree: 0 });
        }
        let rot = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
        Self::generate(alloc::vec![rot], DEFAULT_CAP)
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon;
    /// `n ≥ 3` so that the action is faithful.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::MalformedTable(alloc::format!(
                "dihedral family needs n >= 3, got {n}"
            )));
        }
        let rot = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
        let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
        Self::generate(alloc::vec![rot, refl], DEFAULT_CAP)
    }

    /// Symmetric group on `n` points, generated by `(0 1)` and `(0 1 … n−1)`.
    pub fn symmetric(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAPermutation { degree: 0 });
        }
        let swap = if n >= 2 {
            Permutation::from_cycles(n, &[&[0, 1]])?
        } else {
            Permutation::identity(n)
        };
        let rot = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
        Self::generate(alloc::vec![swap, rot], cap)
    }
}

/// Evaluates `word` with letter `k` read as `images[k]`, multiplying left to
/// right as [`PermGroup::evaluate_word`] does. This is how a word over one
/// generating set is transported to another.
pub fn evaluate_over(word: &[Letter], images: &[Permutation], degree: usize) -> Result<Permutation> {
    let mut acc = Permutation::identity(degree);
    for letter in word {
        let g = images.get(letter.generator).ok_or(Error::LetterOutOfRange {
            index: letter.generator,
            count: images.len(),
        })?;
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        acc = if letter.inverse {
            &acc * &g.inverse()
        } else {
            &acc * g
        };
    }
    Ok(acc)
}

/// Elements `a`, `x` witnessing `aⁿ = x² = 1`, `xax = a⁻¹` in a group of
/// order `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralPresentation {
    pub n: usize,
    pub rotation: Permutation,
    pub reflection: Permutation,
}

/// Searches for `a` of order `n = |G|/2` and an involution `x ∉ ⟨a⟩` with
/// `xax = a⁻¹`. Such a pair generates a subgroup of order `2n`, which is
/// then all of `G`, so success proves `G ≅ D_{2n}`.
///
/// `seed` only rotates the order in which candidates for `a` are tried, so
/// different seeds may report different witnesses but never a different
/// verdict.
pub fn recognize_dihedral(group: &PermGroup, seed: u64) -> Option<DihedralPresentation> {
    let order = group.order();
    if !order.is_multiple_of(2) {
        return None;
    }
    let n = order / 2;
    let start = (seed % order as u64) as usize;
    for k in 0..order {
        let a = group.element((start + k) % order);
        if a.order() != n {
            continue;
        }
        let cyclic: BTreeSet<Permutation> = (0..n).map(|e| a.pow(e)).collect();
        let a_inv = a.inverse();
        for x in group.elements() {
            if x.is_identity() || !(x * x).is_identity() || cyclic.contains(x) {
                continue;
            }
            if &(x * a) * x == a_inv {
                return Some(DihedralPresentation {
                    n,
                    rotation: a.clone(),
                    reflection: x.clone(),
                });
            }
        }
    }
    None
}

/// The reflections `i ↦ k − i (mod n)` of the `n`-gon, in canonical order.
pub fn reflections(n: usize) -> Vec<Permutation> {
    let mut v: Vec<Permutation> = (0..n)
        .map(|k| Permutation {
            images: (0..n).map(|i| (k + n - i) % n).collect(),
        })
        .collect();
    v.sort();
    v
}

/// All transpositions on `n` points, in canonical order.
pub fn transpositions(n: usize) -> Vec<Permutation> {
    let mut v = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut images: Vec<usize> = (0..n).collect();
            images.swap(a, b);
            v.push(Permutation { images });
        }
    }
    v.sort();
    v
}
