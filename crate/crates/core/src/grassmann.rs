//! Points of `Grass_q(k,n)` in canonical form, exhaustive enumeration,
//! subspace metrics, the Pluecker embedding and its quadratic relations,
//! and brute-force decoding balls.
//!
//! Subspaces are represented by their unique reduced-row-echelon generator
//! matrix, so equality of subspaces is entry equality of matrices. The
//! enumeration streams every subspace exactly once ordered by (pivot set lex,
//! then free-entry codes lex) and is the brute-force oracle that the
//! Schubert-variety machinery is validated against.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::gf::{Field, FieldElement};
use crate::matrix::{stack_dims, MatrixError, MatrixGF};

/// Default cap on the number of subspaces any enumeration may visit.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrassmannError {
    RankDeficient { rank: usize, rows: usize },
    InvalidDimensions { k: usize, n: usize },
    AmbientMismatch { left: usize, right: usize },
    FieldMismatch,
    DimensionMismatch { left: usize, right: usize },
    BudgetExceeded { needed: BigUint, budget: u64 },
    BadTuple { reason: String },
    ZeroVector,
    Matrix(MatrixError),
}

impl fmt::Display for GrassmannError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrassmannError::RankDeficient { rank, rows } => {
                write!(f, "generator has rank {rank} but {rows} rows")
            }
            GrassmannError::InvalidDimensions { k, n } => {
                write!(f, "invalid Grassmannian dimensions k={k}, n={n}")
            }
            GrassmannError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions differ: {left} vs {right}")
            }
            GrassmannError::FieldMismatch => write!(f, "subspaces live over different fields"),
            GrassmannError::DimensionMismatch { left, right } => {
                write!(f, "subspace dimensions differ: {left} vs {right}")
            }
            GrassmannError::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration of {needed} subspaces exceeds budget {budget}")
            }
            GrassmannError::BadTuple { reason } => write!(f, "bad index tuple: {reason}"),
            GrassmannError::ZeroVector => write!(f, "Pluecker coordinates are all zero"),
            GrassmannError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GrassmannError {}

impl From<MatrixError> for GrassmannError {
    fn from(e: MatrixError) -> Self {
        GrassmannError::Matrix(e)
    }
}

/// Strictly increasing tuple of 1-based column indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<IndexTuple, GrassmannError> {
        let mut prev = 0usize;
        for &i in &indices {
            if i == 0 || i > n {
                return Err(GrassmannError::BadTuple {
                    reason: format!("index {i} out of range 1..={n}"),
                });
            }
            if i <= prev {
                return Err(GrassmannError::BadTuple {
                    reason: "indices not strictly increasing".into(),
                });
            }
            prev = i;
        }
        Ok(IndexTuple(indices))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Position of this tuple in the lexicographic listing of all
    /// `len`-tuples over `1..=n` (0-based).
    pub fn lex_position(&self, n: usize) -> usize {
        let k = self.0.len();
        let mut rank = 0usize;
        let mut prev = 0usize;
        for (t, &i) in self.0.iter().enumerate() {
            for v in prev + 1..i {
                rank += binomial(n - v, k - t - 1);
            }
            prev = i;
        }
        rank
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All strictly increasing k-tuples over `1..=n` in lexicographic order.
pub fn all_index_tuples(n: usize, k: usize) -> Vec<IndexTuple> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexTuple(current.clone()));
        // Advance to the next combination.
        let mut i = k;
        while i > 0 {
            if current[i - 1] < n - (k - i) {
                current[i - 1] += 1;
                for j in i..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
            i -= 1;
        }
        if i == 0 {
            break;
        }
    }
    out
}

/// Ordinary binomial coefficient (desk scale; panics on overflow).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflow")
}

/// Number of k-dimensional subspaces of GF(q)^n, as an exact integer.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - BigUint::one();
        den *= q.pow((k - i) as u32) - BigUint::one();
    }
    let (quot, rem) = num_integer_div_rem(&num, &den);
    debug_assert!(rem.is_zero());
    quot
}

fn num_integer_div_rem(a: &BigUint, b: &BigUint) -> (BigUint, BigUint) {
    (a / b, a % b)
}

/// A point of `Grass_q(k,n)`: the canonical RREF generator plus its pivot
/// columns (1-based).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    gen: MatrixGF,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of GF^{}) {:?}", self.dim(), self.ambient(), self.gen)
    }
}

impl Subspace {
    /// Canonicalizes a full-row-rank generator matrix.
    pub fn canonicalize(m: &MatrixGF) -> Result<Subspace, GrassmannError> {
        let rr = m.rref();
        if rr.pivots.len() != m.rows() {
            return Err(GrassmannError::RankDeficient { rank: rr.pivots.len(), rows: m.rows() });
        }
        Ok(Subspace { gen: rr.r, pivots: rr.pivots })
    }

    /// Row space of an arbitrary matrix (zero rows are dropped).
    pub fn span(m: &MatrixGF) -> Subspace {
        let rr = m.rref();
        let k = rr.pivots.len();
        let mut gen = MatrixGF::zeros(m.field().clone(), k, m.cols());
        for r in 0..k {
            for c in 0..m.cols() {
                gen.set(r, c, rr.r.get(r, c));
            }
        }
        Subspace { gen, pivots: rr.pivots }
    }

    /// Convenience constructor from rows of integer codes.
    pub fn from_rows(field: Field, rows: &[Vec<u64>]) -> Result<Subspace, GrassmannError> {
        let m = MatrixGF::from_rows(field, rows)?;
        Subspace::canonicalize(&m)
    }

    /// The zero subspace of GF(q)^n.
    pub fn zero_space(field: Field, n: usize) -> Subspace {
        Subspace { gen: MatrixGF::zeros(field, 0, n), pivots: Vec::new() }
    }

    /// `rs [I_k 0]`, the standard coordinate subspace.
    pub fn standard(field: Field, k: usize, n: usize) -> Subspace {
        assert!(k <= n);
        let mut gen = MatrixGF::zeros(field, k, n);
        for i in 0..k {
            gen.set(i, i, FieldElement::ONE);
        }
        Subspace { gen, pivots: (1..=k).collect() }
    }

    fn from_rref_parts(gen: MatrixGF, pivots: Vec<usize>) -> Subspace {
        Subspace { gen, pivots }
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    pub fn ambient(&self) -> usize {
        self.gen.cols()
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.gen
    }

    /// 1-based pivot columns of the canonical generator.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// True iff `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        if self.field() != other.field() || self.ambient() != other.ambient() {
            return false;
        }
        let (sum, _) = stack_dims(&self.gen, &other.gen).expect("checked compatibility");
        sum == self.dim()
    }
}

fn check_compatible(u: &Subspace, v: &Subspace) -> Result<(), GrassmannError> {
    if u.field() != v.field() {
        return Err(GrassmannError::FieldMismatch);
    }
    if u.ambient() != v.ambient() {
        return Err(GrassmannError::AmbientMismatch { left: u.ambient(), right: v.ambient() });
    }
    Ok(())
}

/// dim(U ∩ V) for subspaces of the same ambient space.
pub fn intersection_dim(u: &Subspace, v: &Subspace) -> Result<usize, GrassmannError> {
    check_compatible(u, v)?;
    let (_, meet) = stack_dims(u.generator(), v.generator())?;
    Ok(meet)
}

/// Subspace distance `dim(U+V) - dim(U∩V) = dim U + dim V - 2 dim(U∩V)`.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize, GrassmannError> {
    check_compatible(u, v)?;
    let (_, meet) = stack_dims(u.generator(), v.generator())?;
    Ok(u.dim() + v.dim() - 2 * meet)
}

/// Injection distance `max(dim U, dim V) - dim(U∩V)`.
pub fn injection_distance(u: &Subspace, v: &Subspace) -> Result<usize, GrassmannError> {
    check_compatible(u, v)?;
    let (_, meet) = stack_dims(u.generator(), v.generator())?;
    Ok(u.dim().max(v.dim()) - meet)
}

/// Which of the two metrics on `P(q,n)` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Subspace,
    Injection,
}

impl Metric {
    pub fn distance(self, u: &Subspace, v: &Subspace) -> Result<usize, GrassmannError> {
        match self {
            Metric::Subspace => subspace_distance(u, v),
            Metric::Injection => injection_distance(u, v),
        }
    }
}

/// Deterministic stream over all of `Grass_q(k,n)`, ordered by (pivot set
/// lex, then free-entry codes lex).
pub struct GrassmannianIter {
    field: Field,
    n: usize,
    k: usize,
    pivot_sets: Vec<IndexTuple>,
    ps_idx: usize,
    free_positions: Vec<(usize, usize)>,
    digits: Vec<u64>,
    exhausted: bool,
}

impl GrassmannianIter {
    fn new(field: Field, k: usize, n: usize) -> GrassmannianIter {
        let pivot_sets = all_index_tuples(n, k);
        let mut it = GrassmannianIter {
            field,
            n,
            k,
            pivot_sets,
            ps_idx: 0,
            free_positions: Vec::new(),
            digits: Vec::new(),
            exhausted: false,
        };
        if it.pivot_sets.is_empty() {
            it.exhausted = true;
        } else {
            it.load_pivot_set();
        }
        it
    }

    fn load_pivot_set(&mut self) {
        let pivots = self.pivot_sets[self.ps_idx].indices();
        self.free_positions.clear();
        for (i, &p) in pivots.iter().enumerate() {
            for col in p + 1..=self.n {
                if !pivots.contains(&col) {
                    self.free_positions.push((i, col - 1));
                }
            }
        }
        self.digits = vec![0; self.free_positions.len()];
    }

    fn current_subspace(&self) -> Subspace {
        let pivots = self.pivot_sets[self.ps_idx].indices().to_vec();
        let mut gen = MatrixGF::zeros(self.field.clone(), self.k, self.n);
        for (i, &p) in pivots.iter().enumerate() {
            gen.set(i, p - 1, FieldElement::ONE);
        }
        for (pos, &(r, c)) in self.free_positions.iter().enumerate() {
            gen.set(r, c, self.field.element(self.digits[pos]).expect("digit < q"));
        }
        Subspace::from_rref_parts(gen, pivots)
    }

    /// Advance the free-entry odometer; on overflow move to the next pivot set.
    fn advance(&mut self) {
        let q = self.field.order();
        let mut pos = self.free_positions.len();
        while pos > 0 {
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < q {
                return;
            }
            self.digits[pos] = 0;
        }
        self.ps_idx += 1;
        if self.ps_idx == self.pivot_sets.len() {
            self.exhausted = true;
        } else {
            self.load_pivot_set();
        }
    }
}

impl Iterator for GrassmannianIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.exhausted {
            return None;
        }
        let out = self.current_subspace();
        self.advance();
        Some(out)
    }
}

/// Streams every k-dimensional subspace of GF(q)^n exactly once, in a
/// deterministic order. Fails up front when the Grassmannian has more points
/// than `budget` allows.
pub fn enumerate_grassmannian(
    field: &Field,
    k: usize,
    n: usize,
    budget: u64,
) -> Result<GrassmannianIter, GrassmannError> {
    if k > n {
        return Err(GrassmannError::InvalidDimensions { k, n });
    }
    let count = gaussian_binomial(n, k, field.order());
    if count > BigUint::from(budget) {
        return Err(GrassmannError::BudgetExceeded { needed: count, budget });
    }
    Ok(GrassmannianIter::new(field.clone(), k, n))
}

/// Projective Pluecker coordinate vector of a subspace: the `C(n,k)` maximal
/// minors of a generator matrix, indexed by column tuples in lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlueckerVector {
    field: Field,
    n: usize,
    k: usize,
    coords: Vec<FieldElement>,
    normalized: bool,
}

impl PlueckerVector {
    pub fn new(
        field: Field,
        n: usize,
        k: usize,
        coords: Vec<FieldElement>,
    ) -> Result<PlueckerVector, GrassmannError> {
        if k > n || coords.len() != binomial(n, k) {
            return Err(GrassmannError::InvalidDimensions { k, n });
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(GrassmannError::ZeroVector);
        }
        Ok(PlueckerVector { field, n, k, coords, normalized: false })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Coordinate at a specific index tuple.
    pub fn coord(&self, tuple: &IndexTuple) -> FieldElement {
        self.coords[tuple.lex_position(self.n)]
    }

    /// Scales so that the first nonzero coordinate (in lexicographic index
    /// order) becomes 1; the canonical projective representative.
    pub fn normalized(&self) -> PlueckerVector {
        let f = &self.field;
        let first = self.coords.iter().find(|c| !c.is_zero()).expect("nonzero by invariant");
        let inv = f.inv(*first).expect("nonzero");
        let coords = self.coords.iter().map(|&c| f.mul(c, inv)).collect();
        PlueckerVector { field: self.field.clone(), n: self.n, k: self.k, coords, normalized: true }
    }

    /// True iff the two vectors agree up to a nonzero scalar.
    pub fn projectively_equal(&self, other: &PlueckerVector) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.field == other.field
            && self.normalized().coords == other.normalized().coords
    }
}

/// Pluecker embedding of a subspace: all k x k maximal minors of the
/// canonical generator, normalized so the first nonzero coordinate is 1.
pub fn pluecker_embed(u: &Subspace) -> Result<PlueckerVector, GrassmannError> {
    let k = u.dim();
    let n = u.ambient();
    if k < 1 || k > n {
        return Err(GrassmannError::InvalidDimensions { k, n });
    }
    let all_rows: Vec<usize> = (1..=k).collect();
    let mut coords = Vec::with_capacity(binomial(n, k));
    for tuple in all_index_tuples(n, k) {
        coords.push(u.generator().minor(&all_rows, tuple.indices())?);
    }
    Ok(PlueckerVector::new(u.field().clone(), n, k, coords)?.normalized())
}

/// One quadratic Pluecker (shuffle) relation: `sum coeff * v[a] * v[b] = 0`,
/// with integer coefficients reduced into the field at evaluation time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleRelation {
    pub terms: Vec<(i64, usize, usize)>,
}

impl ShuffleRelation {
    pub fn evaluate(&self, field: &Field, coords: &[FieldElement]) -> FieldElement {
        let p = field.characteristic();
        let mut acc = FieldElement::ZERO;
        for &(coeff, a, b) in &self.terms {
            let c = coeff.rem_euclid(p as i64) as u64;
            if c == 0 {
                continue;
            }
            let ce = field.element(c).expect("reduced mod p");
            let prod = field.mul(coords[a], coords[b]);
            acc = field.add(acc, field.mul(ce, prod));
        }
        acc
    }
}

/// All nontrivial quadratic shuffle relations for `Grass(k, n)`, with like
/// terms combined and identically-zero relations dropped. Positions refer to
/// the lexicographic coordinate order.
pub fn shuffle_relations(n: usize, k: usize) -> Vec<ShuffleRelation> {
    let mut out = Vec::new();
    if k == 0 || k >= n {
        return out;
    }
    let smalls = all_index_tuples(n, k.saturating_sub(1));
    let bigs = all_index_tuples(n, k + 1);
    for small in &smalls {
        for big in &bigs {
            let mut combined: std::collections::BTreeMap<(usize, usize), i64> =
                std::collections::BTreeMap::new();
            for (l, &j) in big.indices().iter().enumerate() {
                if small.indices().contains(&j) {
                    continue;
                }
                // Insert j into the small tuple; moving it into sorted
                // position past the larger entries contributes the sign.
                let greater = small.indices().iter().filter(|&&i| i > j).count();
                let mut merged: Vec<usize> = small.indices().to_vec();
                merged.push(j);
                merged.sort_unstable();
                let merged = IndexTuple(merged);
                let removed: Vec<usize> = big
                    .indices()
                    .iter()
                    .copied()
                    .filter(|&i| i != j)
                    .collect();
                let removed = IndexTuple(removed);
                let sign = if (l + 1 + greater) % 2 == 0 { 1i64 } else { -1i64 };
                let a = merged.lex_position(n);
                let b = removed.lex_position(n);
                let key = (a.min(b), a.max(b));
                *combined.entry(key).or_insert(0) += sign;
            }
            let terms: Vec<(i64, usize, usize)> = combined
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|((a, b), c)| (c, a, b))
                .collect();
            if !terms.is_empty() {
                out.push(ShuffleRelation { terms });
            }
        }
    }
    out
}

/// True iff every quadratic Pluecker relation vanishes on the vector.
pub fn pluecker_relations_check(v: &PlueckerVector) -> bool {
    shuffle_relations(v.ambient(), v.k())
        .iter()
        .all(|rel| rel.evaluate(v.field(), v.coords()).is_zero())
}

/// Enumeration scope of a decoding ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallScope {
    /// Only subspaces of the center's dimension (`B_e^k`).
    ConstantDimension,
    /// Every dimension `0..=n` of the projective geometry (`B_e`).
    All,
}

/// Brute-force decoding ball: all subspaces at distance at most `e` from the
/// center, in enumeration order. This is the ground-truth oracle the
/// Pluecker-coordinate ball equations are checked against.
pub fn ball_members_by_distance(
    center: &Subspace,
    e: usize,
    metric: Metric,
    scope: BallScope,
    budget: u64,
) -> Result<Vec<Subspace>, GrassmannError> {
    let n = center.ambient();
    let q = center.field().order();
    let dims: Vec<usize> = match scope {
        BallScope::ConstantDimension => vec![center.dim()],
        BallScope::All => (0..=n).collect(),
    };
    let total: BigUint = dims.iter().map(|&k| gaussian_binomial(n, k, q)).sum();
    if total > BigUint::from(budget) {
        return Err(GrassmannError::BudgetExceeded { needed: total, budget });
    }
    let mut members = Vec::new();
    for &k in &dims {
        for candidate in enumerate_grassmannian(center.field(), k, n, budget)? {
            if metric.distance(center, &candidate)? <= e {
                members.push(candidate);
            }
        }
    }
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn u0(field: &Field) -> Subspace {
        Subspace::standard(field.clone(), 2, 4)
    }

    fn mixed(field: &Field) -> Subspace {
        Subspace::from_rows(field.clone(), &[vec![1, 0, 0, 0], vec![0, 0, 1, 1]]).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let f = gf(2);
        let id_block =
            MatrixGF::from_rows(f.clone(), &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let s = Subspace::canonicalize(&id_block).unwrap();
        assert_eq!(s.generator(), &id_block);
        assert_eq!(s.pivots(), &[1, 2]);

        let swapped =
            MatrixGF::from_rows(f.clone(), &[vec![0, 0, 1, 1], vec![1, 0, 0, 0]]).unwrap();
        let s2 = Subspace::canonicalize(&swapped).unwrap();
        assert_eq!(s2, mixed(&f));

        let deficient = MatrixGF::from_rows(f, &[vec![1, 1, 0, 0], vec![1, 1, 0, 0]]).unwrap();
        assert!(matches!(
            Subspace::canonicalize(&deficient),
            Err(GrassmannError::RankDeficient { rank: 1, rows: 2 })
        ));
    }

    #[test]
    fn canonical_form_is_gl_invariant() {
        let f = gf(2);
        let u = mixed(&f);
        // All invertible 2x2 over GF(2).
        for codes in 0..16u64 {
            let t = MatrixGF::from_codes(
                f.clone(),
                2,
                2,
                &[codes & 1, (codes >> 1) & 1, (codes >> 2) & 1, (codes >> 3) & 1],
            )
            .unwrap();
            if t.rank() < 2 {
                continue;
            }
            let tu = t.mul(u.generator()).unwrap();
            assert_eq!(Subspace::canonicalize(&tu).unwrap(), u);
        }
    }

    #[test]
    fn enumerate_counts() {
        let f2 = gf(2);
        assert_eq!(enumerate_grassmannian(&f2, 1, 2, 1000).unwrap().count(), 3);
        assert_eq!(enumerate_grassmannian(&f2, 2, 4, 1000).unwrap().count(), 35);
        // k = 0: exactly the zero space.
        let zeros: Vec<_> = enumerate_grassmannian(&f2, 0, 3, 1000).unwrap().collect();
        assert_eq!(zeros, vec![Subspace::zero_space(f2.clone(), 3)]);
    }

    #[test]
    fn enumerate_matches_gaussian_binomial_and_is_duplicate_free() {
        for q in [2u64, 3] {
            let f = if q == 2 { gf(2) } else { gf(3) };
            for n in 0..=4usize {
                for k in 0..=n {
                    let expect = gaussian_binomial(n, k, q);
                    let all: Vec<_> =
                        enumerate_grassmannian(&f, k, n, DEFAULT_ENUM_BUDGET).unwrap().collect();
                    assert_eq!(BigUint::from(all.len() as u64), expect, "q={q} k={k} n={n}");
                    let set: std::collections::HashSet<_> = all.iter().cloned().collect();
                    assert_eq!(set.len(), all.len());
                    for s in &all {
                        assert_eq!(s.dim(), k);
                        assert_eq!(s.ambient(), n);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_order_starts_at_standard_subspace() {
        let f = gf(2);
        let first = enumerate_grassmannian(&f, 2, 4, 1000).unwrap().next().unwrap();
        assert_eq!(first, u0(&f));
    }

    #[test]
    fn budget_is_enforced() {
        let f = gf(2);
        assert!(matches!(
            enumerate_grassmannian(&f, 2, 4, 10),
            Err(GrassmannError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(5, 0, 2), BigUint::from(1u32));
        assert_eq!(gaussian_binomial(2, 1, 2), BigUint::from(3u32));
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(4, 2, 4), BigUint::from(357u32));
    }

    #[test]
    fn distance_examples() {
        let f = gf(2);
        let a = u0(&f);
        let b = mixed(&f);
        let c = Subspace::from_rows(f.clone(), &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        assert_eq!(subspace_distance(&a, &a).unwrap(), 0);
        assert_eq!(subspace_distance(&a, &b).unwrap(), 2);
        assert_eq!(subspace_distance(&a, &c).unwrap(), 4);
        assert_eq!(injection_distance(&a, &a).unwrap(), 0);
        assert_eq!(injection_distance(&a, &b).unwrap(), 1);
        assert_eq!(injection_distance(&a, &c).unwrap(), 2);

        let other_ambient = Subspace::standard(f, 2, 5);
        assert!(matches!(
            subspace_distance(&a, &other_ambient),
            Err(GrassmannError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn metric_axioms_on_small_grassmannian() {
        // Exhaustive on Grass_2(1,3): 7 points.
        let f = gf(2);
        let all: Vec<_> = enumerate_grassmannian(&f, 1, 3, 1000).unwrap().collect();
        assert_eq!(all.len(), 7);
        for metric in [Metric::Subspace, Metric::Injection] {
            for a in &all {
                for b in &all {
                    let d_ab = metric.distance(a, b).unwrap();
                    assert_eq!(d_ab, metric.distance(b, a).unwrap());
                    assert_eq!(d_ab == 0, a == b);
                    for c in &all {
                        let d_ac = metric.distance(a, c).unwrap();
                        let d_cb = metric.distance(c, b).unwrap();
                        assert!(d_ab <= d_ac + d_cb);
                    }
                }
            }
        }
    }

    #[test]
    fn pluecker_embed_examples() {
        let f = gf(2);
        let codes =
            |v: &PlueckerVector| v.coords().iter().map(|c| c.code()).collect::<Vec<_>>();
        assert_eq!(codes(&pluecker_embed(&u0(&f)).unwrap()), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(codes(&pluecker_embed(&mixed(&f)).unwrap()), vec![0, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn pluecker_embed_is_basis_independent() {
        let f = gf(3);
        let u = Subspace::from_rows(f.clone(), &[vec![1, 0, 2, 1], vec![0, 1, 1, 2]]).unwrap();
        let base = pluecker_embed(&u).unwrap();
        // Scale a non-canonical generator by invertible T and embed directly:
        // minors scale by det T, the normalized vectors agree.
        let t = MatrixGF::from_rows(f.clone(), &[vec![2, 1], vec![1, 1]]).unwrap();
        assert_eq!(t.rank(), 2);
        let tu = t.mul(u.generator()).unwrap();
        let all_rows = [1usize, 2];
        let mut coords = Vec::new();
        for tuple in all_index_tuples(4, 2) {
            coords.push(tu.minor(&all_rows, tuple.indices()).unwrap());
        }
        let raw = PlueckerVector::new(f, 4, 2, coords).unwrap();
        assert!(raw.projectively_equal(&base));
    }

    #[test]
    fn pluecker_embed_injective_on_grass_2_4() {
        for q in [2u64, 3] {
            let f = if q == 2 { gf(2) } else { gf(3) };
            let mut seen = std::collections::HashSet::new();
            for s in enumerate_grassmannian(&f, 2, 4, 1000).unwrap() {
                let v = pluecker_embed(&s).unwrap();
                let key: Vec<u16> = v.coords().iter().map(|c| c.code()).collect();
                assert!(seen.insert(key), "duplicate Pluecker vector");
            }
        }
    }

    #[test]
    fn shuffle_relation_for_grass_2_4_is_the_three_term_relation() {
        // Every nontrivial (2,4) relation is a scalar multiple of
        // p12*p34 - p13*p24 + p14*p23 = 0.
        let rels = shuffle_relations(4, 2);
        assert!(!rels.is_empty());
        // Positions in lex order: 12=0, 13=1, 14=2, 23=3, 24=4, 34=5.
        for rel in &rels {
            let mut pairs: Vec<(usize, usize)> = rel.terms.iter().map(|&(_, a, b)| (a, b)).collect();
            pairs.sort_unstable();
            assert_eq!(pairs, vec![(0, 5), (1, 4), (2, 3)]);
            let coeff: std::collections::HashMap<(usize, usize), i64> =
                rel.terms.iter().map(|&(c, a, b)| ((a, b), c)).collect();
            // Sign pattern +,-,+ up to overall sign.
            let s = coeff[&(0, 5)];
            assert_eq!(s.abs(), 1);
            assert_eq!(coeff[&(1, 4)], -s);
            assert_eq!(coeff[&(2, 3)], s);
        }
    }

    #[test]
    fn relations_check_examples() {
        let f = gf(2);
        for s in enumerate_grassmannian(&f, 2, 4, 1000).unwrap() {
            assert!(pluecker_relations_check(&pluecker_embed(&s).unwrap()));
        }
        // [1:0:0:0:0:1] violates the quadratic relation: 1*1 + 0 + 0 = 1.
        let bad = PlueckerVector::new(
            f.clone(),
            4,
            2,
            vec![
                FieldElement::ONE,
                FieldElement::ZERO,
                FieldElement::ZERO,
                FieldElement::ZERO,
                FieldElement::ZERO,
                FieldElement::ONE,
            ],
        )
        .unwrap();
        assert!(!pluecker_relations_check(&bad));
    }

    #[test]
    fn ball_examples() {
        let f = gf(2);
        let center = u0(&f);
        let b0 = ball_members_by_distance(
            &center,
            0,
            Metric::Injection,
            BallScope::ConstantDimension,
            DEFAULT_ENUM_BUDGET,
        )
        .unwrap();
        assert_eq!(b0, vec![center.clone()]);

        // 35 planes total, 16 of them complementary to the center.
        let b1 = ball_members_by_distance(
            &center,
            1,
            Metric::Injection,
            BallScope::ConstantDimension,
            DEFAULT_ENUM_BUDGET,
        )
        .unwrap();
        assert_eq!(b1.len(), 19);

        let b2 = ball_members_by_distance(
            &center,
            2,
            Metric::Injection,
            BallScope::ConstantDimension,
            DEFAULT_ENUM_BUDGET,
        )
        .unwrap();
        assert_eq!(b2.len(), 35);
    }

    #[test]
    fn ball_scope_all_spans_every_dimension() {
        let f = gf(2);
        let center = Subspace::standard(f.clone(), 1, 3);
        // Radius 1 in the subspace metric reaches the zero space, the center,
        // and every plane through the center.
        let members = ball_members_by_distance(
            &center,
            1,
            Metric::Subspace,
            BallScope::All,
            DEFAULT_ENUM_BUDGET,
        )
        .unwrap();
        for m in &members {
            assert!(subspace_distance(&center, m).unwrap() <= 1);
        }
        assert!(members.iter().any(|m| m.dim() == 0));
        assert!(members.iter().any(|m| m.dim() == 2));
        // Independent count: zero space (1) + center itself (1) + planes
        // containing the line (3 = lines of the 2-dim quotient).
        assert_eq!(members.len(), 5);
    }

    #[test]
    fn ball_budget_enforced() {
        let f = gf(2);
        let center = u0(&f);
        assert!(matches!(
            ball_members_by_distance(&center, 1, Metric::Injection, BallScope::All, 30),
            Err(GrassmannError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn subspace_and_injection_distance_are_coupled_on_equal_dims() {
        let f = gf(2);
        let all: Vec<_> = enumerate_grassmannian(&f, 2, 4, 1000).unwrap().collect();
        for a in &all {
            for b in &all {
                assert_eq!(
                    subspace_distance(a, b).unwrap(),
                    2 * injection_distance(a, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn index_tuple_lex_position_is_consistent() {
        for (n, k) in [(4usize, 2usize), (5, 2), (5, 3), (6, 3)] {
            for (pos, t) in all_index_tuples(n, k).iter().enumerate() {
                assert_eq!(t.lex_position(n), pos);
            }
        }
    }

    #[test]
    fn index_tuple_validation() {
        assert!(IndexTuple::new(vec![1, 3], 4).is_ok());
        assert!(IndexTuple::new(vec![3, 1], 4).is_err());
        assert!(IndexTuple::new(vec![1, 1], 4).is_err());
        assert!(IndexTuple::new(vec![0, 2], 4).is_err());
        assert!(IndexTuple::new(vec![1, 5], 4).is_err());
    }

    #[test]
    fn contains_and_span() {
        let f = gf(2);
        let full = Subspace::standard(f.clone(), 4, 4);
        let line = Subspace::from_rows(f.clone(), &[vec![1, 1, 0, 0]]).unwrap();
        assert!(full.contains(&line));
        assert!(!line.contains(&full));
        let with_zero_row =
            MatrixGF::from_rows(f, &[vec![1, 1, 0, 0], vec![1, 1, 0, 0], vec![0; 4]]).unwrap();
        assert_eq!(Subspace::span(&with_zero_row), line);
    }
}
