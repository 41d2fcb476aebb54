//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`) and enforcing
//! its runtime budget.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use schubert_codes::format::write_matrices;
use schubert_codes::grassmann::{intersection_dim, pluecker_relations_check, shuffle_relations};
use schubert_codes::{
    ball_contains_pluecker, ball_linear_system, ball_members_by_distance, code_min_distance,
    compound_matrix, enumerate_grassmannian, gaussian_binomial, injection_distance,
    intersection_number, list_decode, min_distance_decode, pivot_permutation_inverse,
    pluecker_embed, random_constant_dim_code, subspace_distance, transition_matrix,
    transmit_detailed, transversal_solve, BallScope, ChannelConfig, DecodeMethod, Field,
    FieldElement, MatrixGF, Metric, PlueckerVector, Subspace, DEFAULT_ENUM_BUDGET,
};

fn criterion(
    num: u32,
    name: &str,
    limit: Duration,
    body: impl FnOnce() + std::panic::UnwindSafe,
) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(body);
    let elapsed = start.elapsed();
    let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("[acceptance] criterion {num} ({name}): {verdict} ({elapsed:.2?})");
    if let Err(payload) = outcome {
        std::panic::resume_unwind(payload);
    }
    assert!(
        elapsed <= limit,
        "criterion {num} exceeded its runtime budget: {elapsed:?} > {limit:?}"
    );
}

fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn gf4() -> Field {
    Field::new(2, 2, Some(&[1, 1, 1])).unwrap()
}

/// The four lines of the introductory example, as generator rows.
fn four_lines() -> [Vec<Vec<u64>>; 4] {
    [
        vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
        vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        vec![vec![1, 1, 0, 1], vec![0, 1, 1, 1]],
        vec![vec![1, 1, 1, 0], vec![1, 0, 1, 1]],
    ]
}

fn lift(field: &Field, rows: &[Vec<Vec<u64>>]) -> Vec<Subspace> {
    rows.iter().map(|r| Subspace::from_rows(field.clone(), r).unwrap()).collect()
}

#[test]
fn criterion_1_four_lines_transversal() {
    criterion(1, "four-lines transversal instance", Duration::from_secs(1), || {
        let inputs = lift(&gf(2), &four_lines());
        let over_gf2 = transversal_solve(&inputs, 2, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(over_gf2.len(), 0, "no common transversal exists over GF(2)");

        let inputs4 = lift(&gf4(), &four_lines());
        let over_gf4 = transversal_solve(&inputs4, 2, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(over_gf4.len(), 2, "the quadratic splits over GF(4)");
        assert_eq!(BigUint::from(over_gf4.len() as u64), intersection_number(2, 2));
        for v in &over_gf4 {
            for u in &inputs4 {
                assert!(intersection_dim(v, u).unwrap() >= 1);
            }
        }
    });
}

#[test]
fn criterion_2_worked_example_bit_exact() {
    criterion(2, "transition/inverse/compound worked example", Duration::from_secs(1), || {
        let f = gf(2);
        let center =
            Subspace::from_rows(f.clone(), &[vec![1, 0, 0, 0], vec![0, 0, 1, 1]]).unwrap();

        let a = transition_matrix(&center);
        let a_expected = MatrixGF::from_rows(
            f.clone(),
            &[vec![1, 0, 0, 0], vec![0, 0, 1, 1], vec![0, 1, 0, 0], vec![0, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(a, a_expected);

        let a_inv = pivot_permutation_inverse(&a, center.pivots()).unwrap();
        let a_inv_expected = MatrixGF::from_rows(
            f.clone(),
            &[vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 1, 0, 1], vec![0, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(a_inv, a_inv_expected);

        let phi = compound_matrix(&a_inv, 2).unwrap();
        let phi_expected = MatrixGF::from_rows(
            f.clone(),
            &[
                vec![0, 1, 0, 0, 0, 0],
                vec![1, 0, 1, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 1],
                vec![0, 0, 0, 0, 0, 1],
                vec![0, 0, 0, 0, 1, 0],
            ],
        )
        .unwrap();
        assert_eq!(phi.matrix(), &phi_expected);

        // Radius 1 yields exactly one constraint: nu_{2,3} + nu_{2,4} = 0
        // (coefficient 1 at lex positions (2,3) and (2,4)).
        let forms = ball_linear_system(&center, 1).unwrap();
        assert_eq!(forms.len(), 1);
        let codes: Vec<u16> = forms[0].coeffs().iter().map(|c| c.code()).collect();
        assert_eq!(codes, vec![0, 0, 0, 1, 1, 0]);
    });
}

#[test]
fn criterion_3_ball_equals_schubert_membership() {
    criterion(3, "ball/Schubert oracle equivalence", Duration::from_secs(300), || {
        for field in [gf(2), gf(3)] {
            for (k, n) in [(2usize, 4usize), (2, 5), (3, 5)] {
                let all: Vec<Subspace> =
                    enumerate_grassmannian(&field, k, n, DEFAULT_ENUM_BUDGET).unwrap().collect();
                let embeds: Vec<Vec<FieldElement>> = all
                    .iter()
                    .map(|s| pluecker_embed(s).unwrap().coords().to_vec())
                    .collect();
                let small = (k, n) == (2, 4);
                for center in &all {
                    let dists: Vec<usize> =
                        all.iter().map(|v| injection_distance(center, v).unwrap()).collect();
                    for t in 0..=k {
                        let system = ball_linear_system(center, t).unwrap();
                        for (idx, coords) in embeds.iter().enumerate() {
                            let member = system
                                .iter()
                                .all(|form| form.evaluate(&field, coords).is_zero());
                            assert_eq!(
                                member,
                                dists[idx] <= t,
                                "mismatch: q={} k={k} n={n} t={t}",
                                field.order()
                            );
                            // On the small cell also exercise the public
                            // membership operation directly.
                            if small {
                                assert_eq!(
                                    ball_contains_pluecker(center, t, &all[idx]).unwrap(),
                                    dists[idx] <= t
                                );
                            }
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_4_cauchy_binet_suite() {
    criterion(4, "compound-matrix multiplicativity", Duration::from_secs(30), || {
        let mut instances = 0usize;
        for field in [gf(2), gf(3)] {
            for n in [4usize, 5] {
                let mut rng = schubert_codes::rng::SplitMix64::new(1000 + n as u64);
                let q = field.order();
                let mut random_full_rank = |rows: usize, cols: usize| loop {
                    let codes: Vec<u64> =
                        (0..rows * cols).map(|_| rng.next_below(q)).collect();
                    let m = MatrixGF::from_codes(field.clone(), rows, cols, &codes).unwrap();
                    if m.rank() == rows.min(cols) {
                        return m;
                    }
                };
                for trial in 0..50 {
                    let a = random_full_rank(n, n);
                    let b = random_full_rank(n, n);
                    // phi(AB) = phi(A) phi(B), exactly, for every compound order.
                    for k in 1..=n {
                        let lhs = compound_matrix(&a.mul(&b).unwrap(), k).unwrap();
                        let rhs = compound_matrix(&a, k)
                            .unwrap()
                            .mul(&compound_matrix(&b, k).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs, "q={q} n={n} k={k} trial={trial}");
                    }
                    // phi(UA) = phi(U) phi(A), projectively.
                    let k = 2 + (trial as usize % (n - 2));
                    let u = random_full_rank(k, n);
                    let ua = Subspace::canonicalize(&u.mul(&a).unwrap()).unwrap();
                    let lhs = pluecker_embed(&ua).unwrap();
                    let phi_u = schubert_codes::schubert::maximal_minor_row(&u).unwrap();
                    let phi_a = compound_matrix(&a, k).unwrap();
                    let size = phi_a.size();
                    let mut rhs = vec![FieldElement::ZERO; size];
                    for (i, &x) in phi_u.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        for (j, r) in rhs.iter_mut().enumerate() {
                            *r = field.add(*r, field.mul(x, phi_a.matrix().get(i, j)));
                        }
                    }
                    let rhs = PlueckerVector::new(field.clone(), n, k, rhs).unwrap();
                    assert!(rhs.projectively_equal(&lhs), "q={q} n={n} k={k} trial={trial}");
                    instances += 1;
                }
            }
        }
        assert!(instances >= 200, "need at least 200 instances, ran {instances}");
    });
}

#[test]
fn criterion_5_shuffle_relation_soundness() {
    criterion(5, "shuffle-relation soundness", Duration::from_secs(60), || {
        for field in [gf(2), gf(3)] {
            for (k, n) in [(2usize, 4usize), (2, 5), (3, 5)] {
                for s in enumerate_grassmannian(&field, k, n, DEFAULT_ENUM_BUDGET).unwrap() {
                    let v = pluecker_embed(&s).unwrap();
                    assert!(
                        pluecker_relations_check(&v),
                        "embedded subspace fails relations: q={} k={k} n={n}",
                        field.order()
                    );
                }
            }
        }

        // The (2,4) system is a single quadratic; over GF(2) it reads
        // u12*u34 + u13*u24 + u14*u23 = 0.
        let rels = shuffle_relations(4, 2);
        assert!(!rels.is_empty());
        for rel in &rels {
            let mut pairs: Vec<(usize, usize)> =
                rel.terms.iter().map(|&(_, a, b)| (a, b)).collect();
            pairs.sort_unstable();
            assert_eq!(pairs, vec![(0, 5), (1, 4), (2, 3)]);
            for &(c, _, _) in &rel.terms {
                assert_eq!(c.abs(), 1);
            }
        }
        let f = gf(2);
        let violating = PlueckerVector::new(
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
        assert!(!pluecker_relations_check(&violating));
    });
}

#[test]
fn criterion_6_counting() {
    criterion(6, "enumeration cardinalities", Duration::from_secs(60), || {
        for field in [gf(2), gf(3)] {
            let q = field.order();
            for n in 0..=5usize {
                for k in 0..=n {
                    let count =
                        enumerate_grassmannian(&field, k, n, DEFAULT_ENUM_BUDGET).unwrap().count();
                    assert_eq!(
                        BigUint::from(count as u64),
                        gaussian_binomial(n, k, q),
                        "q={q} k={k} n={n}"
                    );
                }
            }
        }
        assert_eq!(
            enumerate_grassmannian(&gf(2), 2, 4, DEFAULT_ENUM_BUDGET).unwrap().count(),
            35
        );
        let u0 = Subspace::standard(gf(2), 2, 4);
        let ball = ball_members_by_distance(
            &u0,
            1,
            Metric::Injection,
            BallScope::ConstantDimension,
            DEFAULT_ENUM_BUDGET,
        )
        .unwrap();
        assert_eq!(ball.len(), 19);
    });
}

#[test]
fn criterion_7_decoder_contracts() {
    criterion(7, "decoder contracts on random codes", Duration::from_secs(120), || {
        // (field, k, n, size, distance floor) x 25 seeds = 100 codes.
        let setups: [(Field, usize, usize, usize, usize); 4] = [
            (gf(2), 2, 4, 5, 1),
            (gf(2), 2, 5, 6, 2),
            (gf(3), 2, 4, 4, 2),
            (gf(2), 3, 6, 4, 3),
        ];
        let mut codes_tested = 0usize;
        for (field, k, n, size, floor) in &setups {
            let all: Vec<Subspace> =
                enumerate_grassmannian(field, *k, *n, DEFAULT_ENUM_BUDGET).unwrap().collect();
            for seed in 0..25u64 {
                let code = random_constant_dim_code(
                    field,
                    *k,
                    *n,
                    *size,
                    *floor,
                    seed,
                    DEFAULT_ENUM_BUDGET,
                )
                .unwrap();
                codes_tested += 1;
                let d = code_min_distance(&code, Metric::Injection).unwrap();
                assert!(d >= *floor);
                let half = (d - 1) / 2;

                let mut rng = schubert_codes::rng::SplitMix64::stream(seed, 77);
                let mut received_words: Vec<Subspace> = (0..4)
                    .map(|_| all[rng.next_below(all.len() as u64) as usize].clone())
                    .collect();
                // Add codeword perturbations that stay within the
                // unique-decoding radius.
                for (i, w) in code.words().iter().enumerate() {
                    let cfg = ChannelConfig {
                        erasures: half.min(1),
                        insertions: half.min(1),
                        seed: seed * 101 + i as u64,
                    };
                    received_words.push(transmit_detailed(w, &cfg).unwrap().received);
                    received_words.push(w.clone());
                }

                for received in &received_words {
                    for e in 0..=*k {
                        let oracle = list_decode(
                            &code,
                            received,
                            e,
                            Metric::Injection,
                            DecodeMethod::Oracle,
                        )
                        .unwrap();
                        let pluecker = list_decode(
                            &code,
                            received,
                            e,
                            Metric::Injection,
                            DecodeMethod::Pluecker,
                        )
                        .unwrap();
                        assert_eq!(oracle, pluecker, "method disagreement at e={e}");
                    }

                    // Unique decoding inside the half-distance radius.
                    let dists: Vec<usize> = code
                        .words()
                        .iter()
                        .map(|w| injection_distance(w, received).unwrap())
                        .collect();
                    let best = *dists.iter().min().unwrap();
                    if best <= half {
                        let expected_idx = dists.iter().position(|&d| d == best).unwrap();
                        let md =
                            min_distance_decode(&code, received, Metric::Injection).unwrap();
                        assert!(md.is_unique(), "half-radius word must decode uniquely");
                        assert_eq!(md.entries().len(), 1);
                        assert_eq!(md.entries()[0].0, code.words()[expected_idx]);
                        assert_eq!(md.entries()[0].1, best);
                        let listed = list_decode(
                            &code,
                            received,
                            half,
                            Metric::Injection,
                            DecodeMethod::Oracle,
                        )
                        .unwrap();
                        assert_eq!(listed.len(), 1);
                    }
                }
            }
        }
        assert_eq!(codes_tested, 100);
    });
}

#[test]
fn criterion_8_channel_contract() {
    criterion(8, "operator-channel contract", Duration::from_secs(30), || {
        let f2 = gf(2);
        let f3 = gf(3);
        let senders = [
            Subspace::standard(f2.clone(), 2, 4),
            Subspace::from_rows(f2.clone(), &[vec![1, 0, 0, 1], vec![0, 1, 1, 0]]).unwrap(),
            Subspace::from_rows(
                f2.clone(),
                &[vec![1, 0, 0, 0, 1, 1], vec![0, 1, 0, 1, 0, 1], vec![0, 0, 1, 1, 1, 0]],
            )
            .unwrap(),
            Subspace::from_rows(f3.clone(), &[vec![1, 0, 2, 1], vec![0, 1, 1, 2]]).unwrap(),
        ];
        let noise = [(0usize, 0usize), (1, 0), (0, 1), (1, 1), (2, 1)];
        let mut calls = 0usize;
        for sent in &senders {
            let k = sent.dim();
            let n = sent.ambient();
            for &(erasures, insertions) in &noise {
                if erasures > k || k - erasures + insertions > n {
                    continue;
                }
                for seed in 0..60u64 {
                    let cfg = ChannelConfig { erasures, insertions, seed };
                    let trace = transmit_detailed(sent, &cfg).unwrap();
                    calls += 1;
                    assert_eq!(trace.received.dim(), k - erasures + insertions);
                    assert_eq!(trace.retained.dim(), k - erasures);
                    assert!(sent.contains(&trace.retained));
                    assert!(trace.received.contains(&trace.retained));

                    // Identical seed: byte-identical output.
                    let again = transmit_detailed(sent, &cfg).unwrap();
                    assert_eq!(trace, again);
                    assert_eq!(
                        write_matrices(sent.field(), [trace.received.generator()]),
                        write_matrices(sent.field(), [again.received.generator()])
                    );
                }
            }
        }
        assert!(calls >= 1000, "need at least 1000 transmit calls, made {calls}");
    });
}

#[test]
fn criterion_9_metric_axioms() {
    criterion(9, "metric axioms on Grass_2(2,4)", Duration::from_secs(60), || {
        let f = gf(2);
        let all: Vec<Subspace> =
            enumerate_grassmannian(&f, 2, 4, DEFAULT_ENUM_BUDGET).unwrap().collect();
        assert_eq!(all.len(), 35);
        for metric in [Metric::Subspace, Metric::Injection] {
            let table: Vec<Vec<usize>> = all
                .iter()
                .map(|a| all.iter().map(|b| metric.distance(a, b).unwrap()).collect())
                .collect();
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    assert_eq!(table[i][j], table[j][i], "symmetry");
                    assert_eq!(table[i][j] == 0, a == b, "identity of indiscernibles");
                    for c in 0..all.len() {
                        assert!(
                            table[i][j] <= table[i][c] + table[c][j],
                            "triangle inequality"
                        );
                    }
                }
            }
        }
        for a in &all {
            for b in &all {
                assert_eq!(
                    subspace_distance(a, b).unwrap(),
                    2 * injection_distance(a, b).unwrap()
                );
            }
        }
    });
}
