//! Schubert machinery for decoding balls in Pluecker coordinates.
//!
//! The injection-metric ball of radius `t` around a subspace is a Schubert
//! variety; inside the Pluecker embedding it is cut out by linear equations.
//! For the standard subspace `rs [I_k 0]` the equations say that every
//! coordinate whose index tuple is not componentwise below
//! `(t+1,...,k, n-t+1,...,n)` vanishes; an arbitrary center is reduced to the
//! standard one through a transition matrix `A` and the compound matrix of
//! `A^{-1}` acting on coordinates from the right. This module also carries
//! Schubert variety/cell membership for arbitrary flags, the classical
//! intersection-count formula, and an exhaustive solver for the common
//! transversal problem.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::gf::{Field, FieldElement};
use crate::grassmann::{
    all_index_tuples, binomial, enumerate_grassmannian, intersection_dim, pluecker_embed,
    GrassmannError, IndexTuple, Subspace,
};
use crate::matrix::{MatrixError, MatrixGF};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchubertError {
    TupleLengthMismatch { left: usize, right: usize },
    InvalidDimensions { k: usize, n: usize },
    NotSquare { rows: usize, cols: usize },
    BadPivots,
    PostconditionFailed(&'static str),
    FieldMismatch,
    AmbientMismatch { left: usize, right: usize },
    DimensionMismatch { left: usize, right: usize },
    NotAFlag,
    EmptyInput,
    Grassmann(GrassmannError),
    Matrix(MatrixError),
}

impl fmt::Display for SchubertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchubertError::TupleLengthMismatch { left, right } => {
                write!(f, "tuples have different lengths: {left} vs {right}")
            }
            SchubertError::InvalidDimensions { k, n } => {
                write!(f, "invalid dimensions k={k}, n={n}")
            }
            SchubertError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            SchubertError::BadPivots => write!(f, "pivot list is not valid for this matrix"),
            SchubertError::PostconditionFailed(what) => {
                write!(f, "postcondition failed: {what}")
            }
            SchubertError::FieldMismatch => write!(f, "operands live over different fields"),
            SchubertError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions differ: {left} vs {right}")
            }
            SchubertError::DimensionMismatch { left, right } => {
                write!(f, "subspace dimensions differ: {left} vs {right}")
            }
            SchubertError::NotAFlag => write!(f, "flag matrix is not invertible"),
            SchubertError::EmptyInput => write!(f, "input list is empty"),
            SchubertError::Grassmann(e) => write!(f, "{e}"),
            SchubertError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SchubertError {}

impl From<GrassmannError> for SchubertError {
    fn from(e: GrassmannError) -> Self {
        SchubertError::Grassmann(e)
    }
}

impl From<MatrixError> for SchubertError {
    fn from(e: MatrixError) -> Self {
        SchubertError::Matrix(e)
    }
}

/// Total lexicographic order on equal-length index tuples: the first
/// differing position decides.
pub fn tuple_lex_leq(a: &IndexTuple, b: &IndexTuple) -> Result<bool, SchubertError> {
    if a.len() != b.len() {
        return Err(SchubertError::TupleLengthMismatch { left: a.len(), right: b.len() });
    }
    for (x, y) in a.indices().iter().zip(b.indices()) {
        if x != y {
            return Ok(x < y);
        }
    }
    Ok(true)
}

/// Componentwise (dominance) order on equal-length index tuples:
/// `a <= b` iff `a_i <= b_i` for every position. This partial order is the
/// one under which the ball equations select vanishing coordinates; on
/// 2-tuples with the bound tuples used here it coincides with the
/// lexicographic order.
pub fn tuple_dominance_leq(a: &IndexTuple, b: &IndexTuple) -> Result<bool, SchubertError> {
    if a.len() != b.len() {
        return Err(SchubertError::TupleLengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.indices().iter().zip(b.indices()).all(|(x, y)| x <= y))
}

/// The bound tuple `(t'+1,...,k, n-t'+1,...,n)` of the radius-`t` ball in
/// `Grass(k,n)`, with `t' = min(t, k, n-k)`: a coordinate of the ball may be
/// nonzero exactly when its index tuple is dominated by this bound. The clamp
/// at `min(k, n-k)` is the largest injection distance possible in
/// `Grass(k,n)`, so larger radii yield the lexicographically maximal tuple and
/// an empty equation system.
pub fn ball_bound_tuple(k: usize, n: usize, t: usize) -> IndexTuple {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    let t = t.min(k).min(n - k);
    let mut indices: Vec<usize> = (t + 1..=k).collect();
    indices.extend(n - t + 1..=n);
    IndexTuple::new(indices, n).expect("bound tuple is strictly increasing")
}

/// Transition matrix `A in GL_n` with `rs([I_k 0] A)` equal to the given
/// subspace: the top `k` rows are the canonical generator, the lower block
/// has zeros in the pivot columns and an identity spread over the remaining
/// columns.
pub fn transition_matrix(u: &Subspace) -> MatrixGF {
    let k = u.dim();
    let n = u.ambient();
    let mut a = MatrixGF::zeros(u.field().clone(), n, n);
    for r in 0..k {
        for c in 0..n {
            a.set(r, c, u.generator().get(r, c));
        }
    }
    let mut s = 0usize;
    for col in 1..=n {
        if !u.pivots().contains(&col) {
            a.set(k + s, col - 1, FieldElement::ONE);
            s += 1;
        }
    }
    debug_assert_eq!(a.rank(), n, "transition matrix is invertible by construction");
    a
}

/// Inverts a transition matrix through the pivot permutation: permuting the
/// pivot columns to the front turns `A` into `[[I_k, U''], [0, I_{n-k}]]`,
/// whose inverse negates the top-right block; applying the permutation to the
/// rows of that inverse gives `A^{-1}`. The result is verified against
/// `A * A^{-1} = I`; failure signals input not built by
/// [`transition_matrix`].
pub fn pivot_permutation_inverse(
    a: &MatrixGF,
    pivots: &[usize],
) -> Result<MatrixGF, SchubertError> {
    let n = a.rows();
    if a.cols() != n {
        return Err(SchubertError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let k = pivots.len();
    let mut seen = vec![false; n + 1];
    let mut prev = 0usize;
    for &p in pivots {
        if p == 0 || p > n || p <= prev {
            return Err(SchubertError::BadPivots);
        }
        seen[p] = true;
        prev = p;
    }
    // Column order of the permutation: pivots first, the rest in place.
    let mut new_cols: Vec<usize> = pivots.to_vec();
    new_cols.extend((1..=n).filter(|c| !seen[*c]));

    let f = a.field().clone();
    let mut sigma_a = MatrixGF::zeros(f.clone(), n, n);
    for r in 0..n {
        for (j, &c) in new_cols.iter().enumerate() {
            sigma_a.set(r, j, a.get(r, c - 1));
        }
    }
    // sigma(A) = [[I_k, U''], [0, I_{n-k}]]; its inverse negates U''.
    let mut block_inv = sigma_a.clone();
    for r in 0..k {
        for c in k..n {
            block_inv.set(r, c, f.neg(sigma_a.get(r, c)));
        }
    }
    // Apply the permutation to the rows: row j goes to row new_cols[j].
    let mut inv = MatrixGF::zeros(f, n, n);
    for (j, &target) in new_cols.iter().enumerate() {
        for c in 0..n {
            inv.set(target - 1, c, block_inv.get(j, c));
        }
    }
    if !a.mul(&inv)?.is_identity() {
        return Err(SchubertError::PostconditionFailed("A * A^{-1} != I"));
    }
    Ok(inv)
}

/// The k-th compound of a square matrix: rows and columns indexed by
/// k-tuples in lexicographic order, entry = the corresponding minor.
/// Multiplicative by the Cauchy-Binet identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompoundMatrix {
    field: Field,
    n: usize,
    k: usize,
    tuples: Vec<IndexTuple>,
    mat: MatrixGF,
}

impl CompoundMatrix {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        self.mat.rows()
    }

    pub fn tuples(&self) -> &[IndexTuple] {
        &self.tuples
    }

    pub fn matrix(&self) -> &MatrixGF {
        &self.mat
    }

    pub fn mul(&self, other: &CompoundMatrix) -> Result<CompoundMatrix, SchubertError> {
        if self.n != other.n || self.k != other.k {
            return Err(SchubertError::InvalidDimensions { k: other.k, n: other.n });
        }
        Ok(CompoundMatrix {
            field: self.field.clone(),
            n: self.n,
            k: self.k,
            tuples: self.tuples.clone(),
            mat: self.mat.mul(&other.mat)?,
        })
    }
}

/// Computes the k-th compound matrix of an n x n matrix.
pub fn compound_matrix(a: &MatrixGF, k: usize) -> Result<CompoundMatrix, SchubertError> {
    let n = a.rows();
    if a.cols() != n {
        return Err(SchubertError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if k < 1 || k > n {
        return Err(SchubertError::InvalidDimensions { k, n });
    }
    let tuples = all_index_tuples(n, k);
    let size = tuples.len();
    let mut mat = MatrixGF::zeros(a.field().clone(), size, size);
    for (ri, row_tuple) in tuples.iter().enumerate() {
        for (ci, col_tuple) in tuples.iter().enumerate() {
            mat.set(ri, ci, a.minor(row_tuple.indices(), col_tuple.indices())?);
        }
    }
    Ok(CompoundMatrix { field: a.field().clone(), n, k, tuples, mat })
}

/// Row of all maximal minors of a full-width k x n matrix, in lexicographic
/// column-tuple order (the unnormalized Pluecker row used by the
/// multiplicativity law `phi(UA) = phi(U) phi(A)`).
pub fn maximal_minor_row(m: &MatrixGF) -> Result<Vec<FieldElement>, SchubertError> {
    let k = m.rows();
    let n = m.cols();
    if k < 1 || k > n {
        return Err(SchubertError::InvalidDimensions { k, n });
    }
    let all_rows: Vec<usize> = (1..=k).collect();
    let mut out = Vec::with_capacity(binomial(n, k));
    for tuple in all_index_tuples(n, k) {
        out.push(m.minor(&all_rows, tuple.indices())?);
    }
    Ok(out)
}

/// One linear constraint on Pluecker coordinates: `sum coeffs[i] * nu_i = 0`
/// with `i` running over index-tuple positions in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<FieldElement>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<FieldElement>) -> LinearForm {
        LinearForm { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn evaluate(&self, field: &Field, coords: &[FieldElement]) -> FieldElement {
        debug_assert_eq!(self.coeffs.len(), coords.len());
        let mut acc = FieldElement::ZERO;
        for (&c, &x) in self.coeffs.iter().zip(coords) {
            if !c.is_zero() && !x.is_zero() {
                acc = field.add(acc, field.mul(c, x));
            }
        }
        acc
    }
}

/// Linear equations cutting the radius-`t` injection ball around `center`
/// out of the embedded Grassmannian: one form per forbidden index tuple `J`
/// (those not dominated by the bound tuple), with coefficients taken from
/// column `J` of the compound matrix of `A^{-1}`. A subspace `V` lies in the
/// ball iff its Pluecker vector annihilates every form. Only the forbidden
/// columns are computed, not the whole compound matrix.
pub fn ball_linear_system(
    center: &Subspace,
    t: usize,
) -> Result<Vec<LinearForm>, SchubertError> {
    let k = center.dim();
    let n = center.ambient();
    if k == 0 {
        return Ok(Vec::new());
    }
    let bound = ball_bound_tuple(k, n, t);
    let tuples = all_index_tuples(n, k);
    let forbidden: Vec<&IndexTuple> = tuples
        .iter()
        .filter(|j| !tuple_dominance_leq(j, &bound).expect("equal lengths"))
        .collect();
    if forbidden.is_empty() {
        return Ok(Vec::new());
    }
    let a = transition_matrix(center);
    let a_inv = pivot_permutation_inverse(&a, center.pivots())?;
    let mut forms = Vec::with_capacity(forbidden.len());
    for j in forbidden {
        let mut coeffs = Vec::with_capacity(tuples.len());
        for r in &tuples {
            coeffs.push(a_inv.minor(r.indices(), j.indices())?);
        }
        let form = LinearForm::new(coeffs);
        if !form.is_zero() {
            forms.push(form);
        }
    }
    Ok(forms)
}

/// Membership of `v` in the radius-`t` injection ball around `center`,
/// decided purely through the Pluecker linear system (no distance
/// computation).
pub fn ball_contains_pluecker(
    center: &Subspace,
    t: usize,
    v: &Subspace,
) -> Result<bool, SchubertError> {
    if center.field() != v.field() {
        return Err(SchubertError::FieldMismatch);
    }
    if center.ambient() != v.ambient() {
        return Err(SchubertError::AmbientMismatch { left: center.ambient(), right: v.ambient() });
    }
    if center.dim() != v.dim() {
        return Err(SchubertError::DimensionMismatch { left: center.dim(), right: v.dim() });
    }
    let system = ball_linear_system(center, t)?;
    let coords = pluecker_embed(v)?;
    Ok(system.iter().all(|form| form.evaluate(center.field(), coords.coords()).is_zero()))
}

/// A complete flag, carried by an invertible n x n matrix: the j-th flag
/// subspace is the row space of the first j rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    matrix: MatrixGF,
}

impl Flag {
    pub fn new(matrix: MatrixGF) -> Result<Flag, SchubertError> {
        let n = matrix.rows();
        if matrix.cols() != n {
            return Err(SchubertError::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        if matrix.rank() != n {
            return Err(SchubertError::NotAFlag);
        }
        Ok(Flag { matrix })
    }

    /// The standard flag spanned by unit vectors.
    pub fn standard(field: Field, n: usize) -> Flag {
        Flag { matrix: MatrixGF::identity(field, n) }
    }

    pub fn ambient(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &MatrixGF {
        &self.matrix
    }

    /// The flag subspace `V_j` (row space of the first j rows); `V_0` is the
    /// zero space.
    pub fn prefix(&self, j: usize) -> Subspace {
        assert!(j <= self.ambient());
        let mut m = MatrixGF::zeros(self.matrix.field().clone(), j, self.ambient());
        for r in 0..j {
            for c in 0..self.ambient() {
                m.set(r, c, self.matrix.get(r, c));
            }
        }
        Subspace::canonicalize(&m).expect("prefix rows of an invertible matrix are independent")
    }
}

/// A Schubert condition: the index tuple `nu` together with the flag it
/// refers to.
#[derive(Debug, Clone)]
pub struct SchubertCondition {
    nu: IndexTuple,
    flag: Flag,
}

impl SchubertCondition {
    pub fn new(nu: IndexTuple, flag: Flag) -> Result<SchubertCondition, SchubertError> {
        if nu.indices().last().is_some_and(|&last| last > flag.ambient()) {
            return Err(SchubertError::InvalidDimensions {
                k: nu.len(),
                n: flag.ambient(),
            });
        }
        Ok(SchubertCondition { nu, flag })
    }

    pub fn nu(&self) -> &IndexTuple {
        &self.nu
    }

    pub fn flag(&self) -> &Flag {
        &self.flag
    }
}

fn check_condition_operand(
    cond: &SchubertCondition,
    w: &Subspace,
) -> Result<(), SchubertError> {
    if w.field() != cond.flag.field() {
        return Err(SchubertError::FieldMismatch);
    }
    if w.ambient() != cond.flag.ambient() {
        return Err(SchubertError::AmbientMismatch {
            left: w.ambient(),
            right: cond.flag.ambient(),
        });
    }
    if w.dim() != cond.nu.len() {
        return Err(SchubertError::DimensionMismatch { left: w.dim(), right: cond.nu.len() });
    }
    Ok(())
}

/// Membership in the Schubert variety: `dim(W ∩ V_{nu_i}) >= i` for every i.
pub fn schubert_variety_contains(
    cond: &SchubertCondition,
    w: &Subspace,
) -> Result<bool, SchubertError> {
    check_condition_operand(cond, w)?;
    for (i, &nu_i) in cond.nu.indices().iter().enumerate() {
        let v = cond.flag.prefix(nu_i);
        if intersection_dim(w, &v)? < i + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in the Schubert cell: in the variety, with the intersection
/// dimensions exactly at their minimum one step down the flag.
pub fn schubert_cell_contains(
    cond: &SchubertCondition,
    w: &Subspace,
) -> Result<bool, SchubertError> {
    if !schubert_variety_contains(cond, w)? {
        return Ok(false);
    }
    for (i, &nu_i) in cond.nu.indices().iter().enumerate() {
        let v = cond.flag.prefix(nu_i - 1);
        if intersection_dim(w, &v)? != i {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of m-dimensional subspaces meeting `km` generic k-dimensional
/// subspaces of a (k+m)-dimensional space nontrivially:
/// `d(k,m) = 1! 2! ... (k-1)! (km)! / (m! (m+1)! ... (m+k-1)!)`.
pub fn intersection_number(k: usize, m: usize) -> BigUint {
    assert!(k >= 1 && m >= 1, "need k, m >= 1");
    let factorial = |x: usize| -> BigUint {
        let mut acc = BigUint::one();
        for i in 2..=x {
            acc *= BigUint::from(i as u64);
        }
        acc
    };
    let mut num = factorial(k * m);
    for i in 1..k {
        num *= factorial(i);
    }
    let mut den = BigUint::one();
    for i in 0..k {
        den *= factorial(m + i);
    }
    debug_assert!((&num % &den) == BigUint::from(0u32));
    num / den
}

/// All m-dimensional subspaces meeting every input subspace nontrivially,
/// found by exhaustive enumeration of `Grass(m, n)`, in enumeration order.
pub fn transversal_solve(
    inputs: &[Subspace],
    m: usize,
    budget: u64,
) -> Result<Vec<Subspace>, SchubertError> {
    let Some(first) = inputs.first() else {
        return Err(SchubertError::EmptyInput);
    };
    let field = first.field().clone();
    let n = first.ambient();
    for u in inputs {
        if u.field() != &field {
            return Err(SchubertError::FieldMismatch);
        }
        if u.ambient() != n {
            return Err(SchubertError::AmbientMismatch { left: n, right: u.ambient() });
        }
    }
    if m > n {
        return Err(SchubertError::InvalidDimensions { k: m, n });
    }
    let mut solutions = Vec::new();
    for candidate in enumerate_grassmannian(&field, m, n, budget)? {
        let mut hits_all = true;
        for u in inputs {
            if intersection_dim(&candidate, u)? == 0 {
                hits_all = false;
                break;
            }
        }
        if hits_all {
            solutions.push(candidate);
        }
    }
    Ok(solutions)
}
