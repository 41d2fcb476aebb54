//! Subspace codes and their decoders.
//!
//! A subspace code is a duplicate-free set of subspaces of one ambient
//! space. Minimum-distance decoding reports every closest codeword (ties are
//! the caller's policy, signalled by the `unique` flag); list decoding
//! returns `B_e(R) ∩ C` either by direct distance computation or through the
//! Pluecker ball equations, and the two routes are required to agree.

use std::fmt;

use crate::gf::Field;
use crate::grassmann::{
    enumerate_grassmannian, injection_distance, pluecker_embed, GrassmannError, Metric, Subspace,
};
use crate::rng::SplitMix64;
use crate::schubert::{ball_linear_system, SchubertError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    EmptyCode,
    DuplicateCodeword,
    FieldMismatch,
    AmbientMismatch { left: usize, right: usize },
    SingletonCode,
    MixedDimensionCode,
    ReceivedDimensionMismatch { code: usize, received: usize },
    PlueckerNeedsInjectionMetric,
    CannotReachSize { requested: usize, achieved: usize },
    Grassmann(GrassmannError),
    Schubert(SchubertError),
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::EmptyCode => write!(f, "a code needs at least one codeword"),
            CodeError::DuplicateCodeword => write!(f, "duplicate codeword"),
            CodeError::FieldMismatch => write!(f, "codewords live over different fields"),
            CodeError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions differ: {left} vs {right}")
            }
            CodeError::SingletonCode => {
                write!(f, "minimum distance needs at least two codewords")
            }
            CodeError::MixedDimensionCode => {
                write!(f, "the pluecker method needs a constant-dimension code")
            }
            CodeError::ReceivedDimensionMismatch { code, received } => write!(
                f,
                "the pluecker method needs dim(received) = {code}, got {received}"
            ),
            CodeError::PlueckerNeedsInjectionMetric => {
                write!(f, "the pluecker method decodes in the injection metric")
            }
            CodeError::CannotReachSize { requested, achieved } => write!(
                f,
                "could not reach code size {requested} (got {achieved}) under the distance floor"
            ),
            CodeError::Grassmann(e) => write!(f, "{e}"),
            CodeError::Schubert(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CodeError {}

impl From<GrassmannError> for CodeError {
    fn from(e: GrassmannError) -> Self {
        CodeError::Grassmann(e)
    }
}

impl From<SchubertError> for CodeError {
    fn from(e: SchubertError) -> Self {
        CodeError::Schubert(e)
    }
}

/// A duplicate-free collection of subspaces of a common ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceCode {
    field: Field,
    ambient: usize,
    words: Vec<Subspace>,
}

impl SubspaceCode {
    pub fn new(words: Vec<Subspace>) -> Result<SubspaceCode, CodeError> {
        let Some(first) = words.first() else {
            return Err(CodeError::EmptyCode);
        };
        let field = first.field().clone();
        let ambient = first.ambient();
        let mut seen = std::collections::HashSet::new();
        for w in &words {
            if w.field() != &field {
                return Err(CodeError::FieldMismatch);
            }
            if w.ambient() != ambient {
                return Err(CodeError::AmbientMismatch { left: ambient, right: w.ambient() });
            }
            if !seen.insert(w.clone()) {
                return Err(CodeError::DuplicateCodeword);
            }
        }
        Ok(SubspaceCode { field, ambient, words })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[Subspace] {
        &self.words
    }

    /// `Some(k)` when every codeword has dimension k.
    pub fn constant_dimension(&self) -> Option<usize> {
        let k = self.words[0].dim();
        self.words.iter().all(|w| w.dim() == k).then_some(k)
    }
}

/// Decoder output: codewords with their distances from the received word,
/// sorted by (distance, position in the code), plus a flag telling whether a
/// strictly closest codeword exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    entries: Vec<(Subspace, usize)>,
    unique: bool,
}

impl DecodeResult {
    fn from_entries(mut indexed: Vec<(usize, Subspace, usize)>) -> DecodeResult {
        indexed.sort_by_key(|&(idx, _, d)| (d, idx));
        let unique = match indexed.as_slice() {
            [] => false,
            [_] => true,
            [(_, _, d0), (_, _, d1), ..] => d0 < d1,
        };
        DecodeResult {
            entries: indexed.into_iter().map(|(_, w, d)| (w, d)).collect(),
            unique,
        }
    }

    pub fn entries(&self) -> &[(Subspace, usize)] {
        &self.entries
    }

    pub fn is_unique(&self) -> bool {
        self.unique
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn check_received(code: &SubspaceCode, received: &Subspace) -> Result<(), CodeError> {
    if received.field() != code.field() {
        return Err(CodeError::FieldMismatch);
    }
    if received.ambient() != code.ambient() {
        return Err(CodeError::AmbientMismatch { left: code.ambient(), right: received.ambient() });
    }
    Ok(())
}

/// Minimum pairwise distance of a code with at least two codewords.
pub fn code_min_distance(code: &SubspaceCode, metric: Metric) -> Result<usize, CodeError> {
    if code.len() < 2 {
        return Err(CodeError::SingletonCode);
    }
    let mut best = usize::MAX;
    for (i, a) in code.words().iter().enumerate() {
        for b in &code.words()[i + 1..] {
            best = best.min(metric.distance(a, b)?);
        }
    }
    Ok(best)
}

/// All codewords at minimal distance from the received word; `unique` is set
/// iff exactly one codeword achieves the minimum.
pub fn min_distance_decode(
    code: &SubspaceCode,
    received: &Subspace,
    metric: Metric,
) -> Result<DecodeResult, CodeError> {
    check_received(code, received)?;
    let mut dists = Vec::with_capacity(code.len());
    let mut best = usize::MAX;
    for w in code.words() {
        let d = metric.distance(w, received)?;
        best = best.min(d);
        dists.push(d);
    }
    let indexed: Vec<(usize, Subspace, usize)> = code
        .words()
        .iter()
        .zip(&dists)
        .enumerate()
        .filter(|&(_, (_, &d))| d == best)
        .map(|(i, (w, &d))| (i, w.clone(), d))
        .collect();
    Ok(DecodeResult::from_entries(indexed))
}

/// How `list_decode` decides ball membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeMethod {
    /// Distance computation per codeword; works for any code and metric.
    Oracle,
    /// The Pluecker linear system of the ball around the received word;
    /// needs a constant-dimension code of the received word's dimension and
    /// the injection metric.
    Pluecker,
}

/// List decoding: every codeword within distance `e` of the received word,
/// as `B_e(R) ∩ C`. Both methods return identical lists.
pub fn list_decode(
    code: &SubspaceCode,
    received: &Subspace,
    e: usize,
    metric: Metric,
    method: DecodeMethod,
) -> Result<DecodeResult, CodeError> {
    check_received(code, received)?;
    let indexed = match method {
        DecodeMethod::Oracle => {
            let mut hits = Vec::new();
            for (i, w) in code.words().iter().enumerate() {
                let d = metric.distance(w, received)?;
                if d <= e {
                    hits.push((i, w.clone(), d));
                }
            }
            hits
        }
        DecodeMethod::Pluecker => {
            if metric != Metric::Injection {
                return Err(CodeError::PlueckerNeedsInjectionMetric);
            }
            let Some(k) = code.constant_dimension() else {
                return Err(CodeError::MixedDimensionCode);
            };
            if received.dim() != k {
                return Err(CodeError::ReceivedDimensionMismatch {
                    code: k,
                    received: received.dim(),
                });
            }
            // One system per received word; codeword embeddings are computed
            // once each inside this call.
            let system = ball_linear_system(received, e)?;
            let field = code.field();
            let mut hits = Vec::new();
            for (i, w) in code.words().iter().enumerate() {
                let coords = pluecker_embed(w)?;
                let member =
                    system.iter().all(|form| form.evaluate(field, coords.coords()).is_zero());
                if member {
                    let d = injection_distance(w, received)?;
                    hits.push((i, w.clone(), d));
                }
            }
            hits
        }
    };
    Ok(DecodeResult::from_entries(indexed))
}

/// Greedy seeded construction of a constant-dimension code: shuffle the full
/// enumeration of `Grass_q(k,n)` with the seeded generator and accept
/// codewords keeping the pairwise injection distance at or above the floor,
/// until `size` codewords are found. Deterministic per seed.
pub fn random_constant_dim_code(
    field: &Field,
    k: usize,
    n: usize,
    size: usize,
    min_injection_distance: usize,
    seed: u64,
    budget: u64,
) -> Result<SubspaceCode, CodeError> {
    let mut candidates: Vec<Subspace> =
        enumerate_grassmannian(field, k, n, budget)?.collect();
    let mut rng = SplitMix64::new(seed);
    rng.shuffle(&mut candidates);
    let mut chosen: Vec<Subspace> = Vec::with_capacity(size);
    for cand in candidates {
        if chosen.len() == size {
            break;
        }
        let mut ok = true;
        for w in &chosen {
            if injection_distance(w, &cand)? < min_injection_distance {
                ok = false;
                break;
            }
        }
        if ok {
            chosen.push(cand);
        }
    }
    if chosen.len() < size {
        return Err(CodeError::CannotReachSize { requested: size, achieved: chosen.len() });
    }
    SubspaceCode::new(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{subspace_distance, DEFAULT_ENUM_BUDGET};

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn u0(f: &Field) -> Subspace {
        Subspace::standard(f.clone(), 2, 4)
    }

    fn complement(f: &Field) -> Subspace {
        Subspace::from_rows(f.clone(), &[vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap()
    }

    #[test]
    fn code_construction_checks() {
        let f = gf(2);
        assert!(matches!(SubspaceCode::new(vec![]), Err(CodeError::EmptyCode)));
        assert!(matches!(
            SubspaceCode::new(vec![u0(&f), u0(&f)]),
            Err(CodeError::DuplicateCodeword)
        ));
        let mixed_ambient = Subspace::standard(f.clone(), 2, 5);
        assert!(matches!(
            SubspaceCode::new(vec![u0(&f), mixed_ambient]),
            Err(CodeError::AmbientMismatch { .. })
        ));
        let code = SubspaceCode::new(vec![u0(&f), complement(&f)]).unwrap();
        assert_eq!(code.constant_dimension(), Some(2));
        let line = Subspace::from_rows(f.clone(), &[vec![1, 1, 1, 1]]).unwrap();
        let mixed = SubspaceCode::new(vec![u0(&f), line]).unwrap();
        assert_eq!(mixed.constant_dimension(), None);
    }

    #[test]
    fn min_distance_examples() {
        let f = gf(2);
        let code = SubspaceCode::new(vec![u0(&f), complement(&f)]).unwrap();
        assert_eq!(code_min_distance(&code, Metric::Injection).unwrap(), 2);
        assert_eq!(code_min_distance(&code, Metric::Subspace).unwrap(), 4);

        let singleton = SubspaceCode::new(vec![u0(&f)]).unwrap();
        assert!(matches!(
            code_min_distance(&singleton, Metric::Injection),
            Err(CodeError::SingletonCode)
        ));

        // A pair at injection distance 1 exists in Grass_2(2,4).
        let near = Subspace::from_rows(f.clone(), &[vec![1, 0, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        let close_code = SubspaceCode::new(vec![u0(&f), near]).unwrap();
        assert_eq!(code_min_distance(&close_code, Metric::Injection).unwrap(), 1);
    }

    #[test]
    fn constant_dimension_couples_the_two_min_distances() {
        let f = gf(2);
        let code = random_constant_dim_code(&f, 2, 4, 5, 1, 3, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(
            code_min_distance(&code, Metric::Subspace).unwrap(),
            2 * code_min_distance(&code, Metric::Injection).unwrap()
        );
    }

    #[test]
    fn min_distance_decode_examples() {
        let f = gf(2);
        let code = SubspaceCode::new(vec![u0(&f), complement(&f)]).unwrap();

        // Received word in the code decodes to itself at distance 0.
        let r = min_distance_decode(&code, &u0(&f), Metric::Injection).unwrap();
        assert!(r.is_unique());
        assert_eq!(r.entries(), &[(u0(&f), 0)]);

        // Word within the unique-decoding radius.
        let near = Subspace::from_rows(f.clone(), &[vec![1, 0, 0, 0], vec![0, 0, 1, 1]]).unwrap();
        // d_I(near, u0) = 1, d_I(near, complement) = ?
        let r = min_distance_decode(&code, &near, Metric::Injection).unwrap();
        assert!(!r.is_empty());

        // An equidistant received word is reported as a tie.
        let equidistant =
            Subspace::from_rows(f.clone(), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]]).unwrap();
        assert_eq!(
            injection_distance(&equidistant, &u0(&f)).unwrap(),
            injection_distance(&equidistant, &complement(&f)).unwrap()
        );
        let r = min_distance_decode(&code, &equidistant, Metric::Injection).unwrap();
        assert!(!r.is_unique());
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn list_decode_examples() {
        let f = gf(2);
        let code = SubspaceCode::new(vec![u0(&f), complement(&f)]).unwrap();

        // e = 0: exact matches only.
        let r = list_decode(&code, &u0(&f), 0, Metric::Injection, DecodeMethod::Oracle).unwrap();
        assert_eq!(r.entries(), &[(u0(&f), 0)]);

        // e >= k: the whole code.
        for method in [DecodeMethod::Oracle, DecodeMethod::Pluecker] {
            let r = list_decode(&code, &u0(&f), 2, Metric::Injection, method).unwrap();
            assert_eq!(r.len(), 2);
        }
    }

    #[test]
    fn list_decode_methods_agree_on_random_instances() {
        let f = gf(2);
        let mut rng = SplitMix64::new(2024);
        let all: Vec<Subspace> =
            enumerate_grassmannian(&f, 2, 4, DEFAULT_ENUM_BUDGET).unwrap().collect();
        for trial in 0..50u64 {
            let code =
                random_constant_dim_code(&f, 2, 4, 6, 1, trial, DEFAULT_ENUM_BUDGET).unwrap();
            let received = all[rng.next_below(all.len() as u64) as usize].clone();
            for e in 0..=2usize {
                let oracle =
                    list_decode(&code, &received, e, Metric::Injection, DecodeMethod::Oracle)
                        .unwrap();
                let pluecker =
                    list_decode(&code, &received, e, Metric::Injection, DecodeMethod::Pluecker)
                        .unwrap();
                assert_eq!(oracle, pluecker);
            }
        }
    }

    #[test]
    fn pluecker_method_preconditions() {
        let f = gf(2);
        let line = Subspace::from_rows(f.clone(), &[vec![1, 1, 1, 1]]).unwrap();
        let mixed = SubspaceCode::new(vec![u0(&f), line.clone()]).unwrap();
        assert!(matches!(
            list_decode(&mixed, &u0(&f), 1, Metric::Injection, DecodeMethod::Pluecker),
            Err(CodeError::MixedDimensionCode)
        ));
        let constant = SubspaceCode::new(vec![u0(&f), complement(&f)]).unwrap();
        assert!(matches!(
            list_decode(&constant, &line, 1, Metric::Injection, DecodeMethod::Pluecker),
            Err(CodeError::ReceivedDimensionMismatch { code: 2, received: 1 })
        ));
        assert!(matches!(
            list_decode(&constant, &u0(&f), 1, Metric::Subspace, DecodeMethod::Pluecker),
            Err(CodeError::PlueckerNeedsInjectionMetric)
        ));
        // The oracle method accepts mixed codes and either metric.
        assert!(list_decode(&mixed, &line, 1, Metric::Subspace, DecodeMethod::Oracle).is_ok());
    }

    #[test]
    fn unique_decoding_radius_guarantee() {
        let f = gf(2);
        for seed in 0..20u64 {
            let code =
                random_constant_dim_code(&f, 2, 4, 4, 2, seed, DEFAULT_ENUM_BUDGET).unwrap();
            let d = code_min_distance(&code, Metric::Injection).unwrap();
            assert!(d >= 2);
            let half = (d - 1) / 2;
            let r = list_decode(
                &code,
                &code.words()[0],
                half,
                Metric::Injection,
                DecodeMethod::Oracle,
            )
            .unwrap();
            assert!(r.len() <= 1);
            let md = min_distance_decode(&code, &code.words()[0], Metric::Injection).unwrap();
            assert!(md.is_unique());
            assert_eq!(md.entries()[0].0, code.words()[0]);
        }
    }

    #[test]
    fn random_code_is_deterministic_per_seed() {
        let f = gf(2);
        let a = random_constant_dim_code(&f, 2, 4, 3, 2, 7, DEFAULT_ENUM_BUDGET).unwrap();
        let b = random_constant_dim_code(&f, 2, 4, 3, 2, 7, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(a, b);
        let c = random_constant_dim_code(&f, 2, 4, 3, 2, 8, DEFAULT_ENUM_BUDGET).unwrap();
        assert!(a != c || a.words() == c.words());
        // Post-hoc distance floor.
        assert!(code_min_distance(&a, Metric::Injection).unwrap() >= 2);
        // Complementary pair example: size 2 with floor 2 forces trivial
        // intersection.
        let two = random_constant_dim_code(&f, 2, 4, 2, 2, 7, DEFAULT_ENUM_BUDGET).unwrap();
        let words = two.words();
        assert_eq!(subspace_distance(&words[0], &words[1]).unwrap(), 4);
    }

    #[test]
    fn random_code_size_one_and_infeasible() {
        let f = gf(2);
        let one = random_constant_dim_code(&f, 2, 4, 1, 2, 0, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(one.len(), 1);
        // 36 codewords at pairwise distance >= 1 cannot exist among 35.
        assert!(matches!(
            random_constant_dim_code(&f, 2, 4, 36, 1, 0, DEFAULT_ENUM_BUDGET),
            Err(CodeError::CannotReachSize { .. })
        ));
    }
}
