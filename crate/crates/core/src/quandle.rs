//! Finite quandles given by the table of their symmetries.
//!
//! Points are always `0..n`. `table[x][y]` is `s_x(y)`. Whatever the points
//! stand for (elements of an abelian group, permutations in a conjugation
//! quandle) is recorded in the optional labels, never in the indices.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grpgen::GenPair;
use crate::perm::{PermGroup, Permutation, DEFAULT_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `s_x(x) ≠ x`.
    Idempotence { x: usize },
    /// Row `x` repeats a value.
    NotBijective { x: usize },
    /// `s_x(s_y(z)) ≠ s_{s_x(y)}(s_x(z))`.
    SelfDistributivity { x: usize, y: usize, z: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

fn validate_shape(rows: &[Vec<usize>]) -> Result<usize> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyQuandle);
    }
    for (x, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(alloc::format!(
                "row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedTable(alloc::format!(
                "row {x} contains {v}, out of range for order {n}"
            )));
        }
    }
    Ok(n)
}

/// Lists every violated axiom instance of a square table.
pub fn check_axioms(rows: &[Vec<usize>]) -> Result<AxiomReport> {
    let n = validate_shape(rows)?;
    let mut violations = Vec::new();
    for (x, row) in rows.iter().enumerate() {
        if row[x] != x {
            violations.push(AxiomViolation::Idempotence { x });
        }
    }
    for (x, row) in rows.iter().enumerate() {
        let distinct: BTreeSet<usize> = row.iter().copied().collect();
        if distinct.len() != n {
            violations.push(AxiomViolation::NotBijective { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            let sxy = rows[x][y];
            for z in 0..n {
                if rows[x][rows[y][z]] != rows[sxy][rows[x][z]] {
                    violations.push(AxiomViolation::SelfDistributivity { x, y, z });
                }
            }
        }
    }
    Ok(AxiomReport { violations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quandle {
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Quandle {
    /// Validates shape and all three axioms.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let report = check_axioms(&rows)?;
        if !report.is_empty() {
            return Err(Error::AxiomsViolated(report));
        }
        let n = rows.len();
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        let mut inverse = alloc::vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                inverse[x * n + table[x * n + y]] = y;
            }
        }
        Ok(Self {
            n,
            table,
            inverse,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::MalformedTable(alloc::format!(
                "{} labels for {} points",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `s_x(y)`.
    #[inline]
    pub fn act(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// `s_x⁻¹(y)`.
    #[inline]
    pub fn act_inv(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[x].as_str())
    }

    /// The symmetry `s_x` as a permutation of the points.
    pub fn symmetry(&self, x: usize) -> Permutation {
        Permutation::from_images(self.row(x).to_vec()).expect("rows are bijections")
    }

    pub fn symmetries(&self) -> Vec<Permutation> {
        (0..self.n).map(|x| self.symmetry(x)).collect()
    }

    /// Always empty for a constructed quandle; kept for symmetry with
    /// [`check_axioms`] on raw tables.
    pub fn check_axioms(&self) -> AxiomReport {
        check_axioms(&self.rows()).expect("shape validated at construction")
    }

    /// Whether `x ↦ s_x` is injective.
    pub fn is_faithful(&self) -> bool {
        let rows: BTreeSet<&[usize]> = (0..self.n).map(|x| self.row(x)).collect();
        rows.len() == self.n
    }

    /// `s_x = id` for every `x`.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyQuandle);
        }
        Self::from_rows((0..n).map(|_| (0..n).collect()).collect())
    }

    /// `s_x(y) = 2x − y (mod n)`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyQuandle);
        }
        Self::from_rows(
            (0..n)
                .map(|x| (0..n).map(|y| (2 * x + n - y) % n).collect())
                .collect(),
        )
    }

    /// `s_a(b) = φ(b) + a − φ(a)` on a finite abelian group.
    pub fn alexander(phi: &AbelianAutomorphism) -> Result<Self> {
        let a = phi.group();
        let n = a.order();
        let rows = (0..n)
            .map(|x| {
                let shift = a.sub(x, phi.apply(x));
                (0..n).map(|y| a.add(phi.apply(y), shift)).collect()
            })
            .collect();
        let labels = (0..n).map(|x| a.format(x)).collect();
        Self::from_rows(rows)?.with_labels(labels)
    }

    /// The conjugation quandle on `omega`, `s_g(h) = g h g⁻¹`.
    ///
    /// `omega` must lie in `group` and be stable under conjugation by the
    /// subgroup it generates, which is what the quandle structure needs.
    /// The stronger requirement that `omega` be a union of conjugacy classes
    /// of the whole group is [`PermGroup::is_conjugation_stable`].
    ///
    /// Points follow the lexicographic order of the permutations; each
    /// point's label is the permutation's text form.
    pub fn conjugation(group: &PermGroup, omega: &[Permutation]) -> Result<Self> {
        if omega.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !omega.iter().all(|w| group.contains(w)) {
            return Err(Error::NotInGroup);
        }
        let mut points = omega.to_vec();
        points.sort();
        points.dedup();
        let n = points.len();
        let index = |p: &Permutation| points.binary_search(p).ok();
        let mut rows = Vec::with_capacity(n);
        for g in &points {
            let gi = g.inverse();
            let mut row = Vec::with_capacity(n);
            for h in &points {
                let c = index(&g.conjugate(h)).ok_or(Error::NotConjugationStable)?;
                index(&gi.conjugate(h)).ok_or(Error::NotConjugationStable)?;
                row.push(c);
            }
            rows.push(row);
        }
        let labels = points.iter().map(|p| p.to_string()).collect();
        Self::from_rows(rows)?.with_labels(labels)
    }

    /// The permutation a conjugation-quandle point stands for, read back from
    /// its label.
    pub fn conjugation_point(&self, x: usize) -> Option<Permutation> {
        self.label(x)?.parse().ok()
    }

    /// Smallest subquandle containing `seed`.
    pub fn subquandle_closure(&self, seed: &[usize]) -> Result<Subquandle<'_>> {
        if seed.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&point) = seed.iter().find(|&&p| p >= self.n) {
            return Err(Error::PointOutOfRange { point, n: self.n });
        }
        let mut inside = alloc::vec![false; self.n];
        let mut points: Vec<usize> = Vec::new();
        for &p in seed {
            if !inside[p] {
                inside[p] = true;
                points.push(p);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = points.clone();
            for &x in &snapshot {
                for &y in &snapshot {
                    for z in [self.act(x, y), self.act_inv(x, y)] {
                        if !inside[z] {
                            inside[z] = true;
                            points.push(z);
                            changed = true;
                        }
                    }
                }
            }
        }
        points.sort_unstable();
        Ok(Subquandle {
            parent: self,
            points,
        })
    }

    /// `(Inn Q, s(Q))`. The group's generators are `s_0, …, s_{n−1}` in
    /// point order; repeated symmetries of a non-faithful quandle collapse to
    /// one member of the distinguished set.
    pub fn inn(&self) -> Result<GenPair> {
        self.inn_with_cap(DEFAULT_CAP)
    }

    pub fn inn_with_cap(&self, cap: usize) -> Result<GenPair> {
        let group = PermGroup::generate(self.symmetries(), cap)?;
        Ok(GenPair::from_generating_set(group))
    }

    /// `(Inn(Q, Q'), s(Q'))`, acting on all of `Q`, with generators `s_x`
    /// for `x` in the subquandle's sorted points.
    pub fn inn_relative(&self, sub: &Subquandle<'_>) -> Result<GenPair> {
        let gens = sub.points.iter().map(|&x| self.symmetry(x)).collect();
        let group = PermGroup::generate(gens, DEFAULT_CAP)?;
        Ok(GenPair::from_generating_set(group))
    }
}

/// A subset of a quandle closed under `s_x` and `s_x⁻¹` for its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquandle<'a> {
    parent: &'a Quandle,
    points: Vec<usize>,
}

impl<'a> Subquandle<'a> {
    /// Accepts `points` only if they are already closed.
    pub fn new(parent: &'a Quandle, points: &[usize]) -> Result<Self> {
        let closure = parent.subquandle_closure(points)?;
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if closure.points != sorted {
            return Err(Error::InvalidMorphism(alloc::format!(
                "points {sorted:?} are not closed; closure is {:?}",
                closure.points
            )));
        }
        Ok(closure)
    }

    pub fn parent(&self) -> &'a Quandle {
        self.parent
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// The subquandle as a quandle in its own right, points renumbered in
    /// sorted order. Parent labels carry over when present.
    pub fn to_quandle(&self) -> Quandle {
        let local = |p: usize| self.points.binary_search(&p).expect("closed");
        let rows = self
            .points
            .iter()
            .map(|&x| self.points.iter().map(|&y| local(self.parent.act(x, y))).collect())
            .collect();
        let q = Quandle::from_rows(rows).expect("restriction of a quandle is a quandle");
        match self.parent.labels() {
            Some(labels) => q
                .with_labels(self.points.iter().map(|&p| labels[p].clone()).collect())
                .expect("label count matches"),
            None => q,
        }
    }
}

/// A finite abelian group `Z/n₁ ⊕ … ⊕ Z/n_k`. Elements are indexed in
/// mixed radix with the first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    orders: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::InvalidAutomorphism(alloc::format!(
                "cyclic factor orders must be positive, got {orders:?}"
            )));
        }
        Ok(Self { orders })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(alloc::vec![n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut coords = alloc::vec![0; self.orders.len()];
        for (c, &m) in coords.iter_mut().zip(&self.orders).rev() {
            *c = index % m;
            index /= m;
        }
        coords
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .fold(0, |acc, (&c, &m)| acc * m + c % m)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (a, b) = (self.decode(a), self.decode(b));
        let sum: Vec<usize> = a
            .iter()
            .zip(&b)
            .zip(&self.orders)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let a = self.decode(a);
        let neg: Vec<usize> = a.iter().zip(&self.orders).map(|(x, m)| (m - x) % m).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    fn format(&self, a: usize) -> String {
        let coords = self.decode(a);
        if coords.len() == 1 {
            return coords[0].to_string();
        }
        let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
        alloc::format!("({})", parts.join(","))
    }
}

/// A group automorphism of an [`AbelianGroup`], given by an integer matrix
/// acting on coordinates: `φ(a)_i = Σ_j m[i][j]·a_j mod n_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianAutomorphism {
    group: AbelianGroup,
    images: Vec<usize>,
}

impl AbelianAutomorphism {
    /// Tabulates the matrix on every element and checks additivity and
    /// bijectivity exhaustively.
    pub fn new(group: AbelianGroup, matrix: &[Vec<i64>]) -> Result<Self> {
        let k = group.factors().len();
        if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidAutomorphism(alloc::format!(
                "matrix must be {k}x{k}"
            )));
        }
        let n = group.order();
        let images: Vec<usize> = (0..n)
            .map(|a| {
                let coords = group.decode(a);
                let image: Vec<usize> = (0..k)
                    .map(|i| {
                        let m = group.factors()[i] as i64;
                        let v: i64 = (0..k).map(|j| matrix[i][j] * coords[j] as i64).sum();
                        v.rem_euclid(m) as usize
                    })
                    .collect();
                group.encode(&image)
            })
            .collect();
        for a in 0..n {
            for b in 0..n {
                if images[group.add(a, b)] != group.add(images[a], images[b]) {
                    return Err(Error::InvalidAutomorphism(alloc::format!(
                        "not additive at ({}, {})",
                        group.format(a),
                        group.format(b)
                    )));
                }
            }
        }
        let distinct: BTreeSet<usize> = images.iter().copied().collect();
        if distinct.len() != n {
            return Err(Error::InvalidAutomorphism("not bijective".to_string()));
        }
        Ok(Self { group, images })
    }

    /// Multiplication by `k` on every coordinate.
    pub fn scalar(group: AbelianGroup, k: i64) -> Result<Self> {
        let dim = group.factors().len();
        let matrix: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { k } else { 0 }).collect())
            .collect();
        Self::new(group, &matrix)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// Order of φ in `Aut(A)`.
    pub fn order(&self) -> usize {
        let n = self.images.len();
        let mut power: Vec<usize> = self.images.clone();
        let mut k = 1;
        while power.iter().enumerate().any(|(i, &v)| i != v) {
            power = (0..n).map(|a| self.images[power[a]]).collect();
            k += 1;
        }
        k
    }

    /// `φ(a) = a` only for `a = 0`.
    pub fn is_fixed_point_free(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(a, &v)| a == 0 || a != v)
    }
}
