//! Literal mode against compiled-C transcripts and the separate oracle.

#[path = "support/c_golden.rs"]
mod c_golden;
#[path = "support/c_oracle.rs"]
mod c_oracle;

use eqstream::keystream::{coefficients, generate, literal, GeneratorParams, KeystreamError, Mode};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params(r: i32, u: i32, u1: i32, t1: i32, modulus: i32) -> GeneratorParams {
    GeneratorParams::literal(r as u32, u, u1)
        .with_seed(t1 as u32)
        .with_modulus(modulus as u32)
}

#[test]
fn matches_compiled_c_transcripts() {
    for g in c_golden::GOLDEN {
        let tr = literal::transcript(&params(g.r, g.u, g.u1, g.t1, g.modulus)).unwrap();
        assert_eq!(tr.values, g.values, "r={} u={} u1={}", g.r, g.u, g.u1);
        assert_eq!(
            !tr.is_complete(),
            g.faulted,
            "r={} u={} u1={}",
            g.r,
            g.u,
            g.u1
        );
        if !g.faulted {
            assert_eq!(tr.values.len(), 115);
        }
    }
}

#[test]
fn oracle_agrees_with_compiled_c() {
    for g in c_golden::GOLDEN {
        let run = c_oracle::run(g.r, g.u, g.u1, g.t1, g.modulus);
        assert_eq!(run.printed, g.values);
        assert_eq!(run.stopped_early, g.faulted);
    }
}

#[test]
fn randomized_triples_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1e7e);
    let mut complete = 0;
    for _ in 0..500 {
        let r = rng.gen_range(1..=40);
        let u = rng.gen_range(-30..=30);
        let mut u1 = rng.gen_range(-12..=12);
        if u1 == 0 {
            u1 = 1;
        }
        let tr = literal::transcript(&params(r, u, u1, 4, 35)).unwrap();
        let oracle = c_oracle::run(r, u, u1, 4, 35);
        assert_eq!(tr.values, oracle.printed, "r={r} u={u} u1={u1}");
        assert_eq!(
            !tr.is_complete(),
            oracle.stopped_early,
            "r={r} u={u} u1={u1}"
        );
        if tr.is_complete() {
            complete += 1;
        }
    }
    assert!(complete >= 10, "only {complete} complete runs");
}

#[test]
fn faults_surface_as_errors() {
    let err = generate(&params(6, 1, 2, 4, 35)).unwrap_err();
    assert!(
        matches!(err, KeystreamError::NumericFault { position: 3, .. }),
        "{err}"
    );
}

#[test]
fn literal_coefficient_trace() {
    // x = 0.5, y = 1, z = -0.4: a = 1 + 4·0.5·(−0.4) = 0.2, b = 1.2, c = −2.
    let c = coefficients(4, 2, 1, 0.6, Mode::Literal { u: 1, u1: 1 });
    assert!((c.a - 0.2).abs() < 1e-6);
    assert!((c.b - 1.2).abs() < 1e-6);
    assert_eq!(c.c, -2.0);
}

#[test]
fn zero_u1_is_invalid() {
    assert!(matches!(
        generate(&GeneratorParams::literal(4, 1, 0)),
        Err(KeystreamError::InvalidParams(_))
    ));
}

proptest! {
    #[test]
    fn library_equals_oracle(
        r in 1i32..200,
        u in -100i32..100,
        u1 in prop_oneof![-20i32..=-1, 1i32..=20],
        t1 in 1i32..50,
        modulus in 2i32..64,
    ) {
        let tr = literal::transcript(&params(r, u, u1, t1, modulus)).unwrap();
        let oracle = c_oracle::run(r, u, u1, t1, modulus);
        prop_assert_eq!(tr.values, oracle.printed);
        prop_assert_eq!(tr.fault.is_some(), oracle.stopped_early);
    }
}
