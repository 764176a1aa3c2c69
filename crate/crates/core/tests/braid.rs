mod common;

use common::*;
use freebraid::braid::{
    apply_artin_relation, artin_rewrites, closed_invariant, invariant_c, invariant_c4, invariant_with,
    parse_artin, permutation_of, pure_power, realize, trisecant_certificate, ArtinRelation, BraidWord,
    DetourShape, InvariantOptions,
};
use freebraid::dynamics::Detector;
use freebraid::group::{are_equal, parity_vector, reduce, Verdict};
use freebraid::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn permutation_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..200 {
        let u = random_braid(&mut rng, 5, 0, 6);
        let v = random_braid(&mut rng, 5, 0, 6);
        let uv = permutation_of(&u.concat(&v).unwrap());
        assert_eq!(uv, permutation_of(&u).compose(&permutation_of(&v)));
        assert!(permutation_of(&u.concat(&u.inverse()).unwrap()).is_identity());
    }
}

#[test]
fn pure_power_is_pure() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..50 {
        let b = random_braid(&mut rng, 4, 1, 5);
        let (p, e) = pure_power(&b);
        assert!(permutation_of(&p).is_identity());
        assert_eq!(e, permutation_of(&b).order());
        assert_eq!(p.len(), e * b.len());
    }
}

#[test]
fn rewrites_keep_the_parity_vector() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let b = random_braid(&mut rng, 4, 1, 6);
        let p = parity_vector(&invariant_c(&b).unwrap());
        for (rel, pos, b2) in artin_rewrites(&b) {
            assert_eq!(p, parity_vector(&invariant_c(&b2).unwrap()), "{b} {} at {pos}", rel.name());
        }
    }
}

#[test]
fn yang_baxter_gives_equal_invariants() {
    let b = parse_artin("s1 s2 s1", 3).unwrap();
    let yb = apply_artin_relation(&b, ArtinRelation::YangBaxter, 0).unwrap();
    assert_eq!(yb.to_string(), "s2 s1 s2");
    assert_eq!(are_equal(&invariant_c(&b).unwrap(), &invariant_c(&yb).unwrap()).unwrap(), Verdict::Equal);
    let mixed = parse_artin("s1 s2^-1 s1", 3).unwrap();
    assert!(apply_artin_relation(&mixed, ArtinRelation::YangBaxter, 0).is_err());
}

#[test]
fn cancelling_pairs_are_trivial() {
    for n in 3..=5 {
        for i in 1..n {
            let b = parse_artin(&format!("s{i} s{i}^-1"), n).unwrap();
            assert!(reduce(&invariant_c(&b).unwrap()).unwrap().is_identity());
            if n >= 4 {
                assert!(reduce(&invariant_c4(&b).unwrap()).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn detour_shapes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let wedge = InvariantOptions {
        shape: DetourShape::Wedge,
        ..InvariantOptions::default()
    };
    for _ in 0..20 {
        let b = random_braid(&mut rng, 4, 1, 5);
        let boxed = invariant_c(&b).unwrap();
        let w = invariant_with(&b, Detector::Collinearity, &wedge).unwrap();
        assert_eq!(are_equal(&boxed, &w).unwrap(), Verdict::Equal, "{b}");
    }
}

#[test]
fn realization_is_deterministic() {
    let b = parse_artin("s1 s2^-1 s3 s1", 4).unwrap();
    assert_eq!(realize(&b).unwrap().to_text(), realize(&b).unwrap().to_text());
    assert_eq!(invariant_c(&b).unwrap(), invariant_c(&b).unwrap());
}

#[test]
fn seeds_do_not_change_the_class() {
    let b = parse_artin("s1 s1", 3).unwrap();
    let base = invariant_c(&b).unwrap();
    for seed in 0..5 {
        let opts = InvariantOptions {
            seed,
            perturbation: Some((seed, q(1, 512))),
            ..InvariantOptions::default()
        };
        let w = invariant_with(&b, Detector::Collinearity, &opts).unwrap();
        assert_eq!(parity_vector(&w), parity_vector(&base));
        assert_eq!(are_equal(&w, &base).unwrap(), Verdict::Equal);
    }
}

#[test]
fn certificates_bound_the_event_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..20 {
        let b = random_braid(&mut rng, 4, 1, 6);
        let c = trisecant_certificate(&b).unwrap();
        assert!(c.ok && c.events >= c.lower_bound && c.lower_bound >= c.parity_bound, "{b}: {c:?}");
    }
    let e = trisecant_certificate(&BraidWord::identity(3).unwrap()).unwrap();
    assert_eq!(e.to_json(), r#"{"events":0,"lower_bound":0,"exact":true,"parity_bound":0,"ok":true}"#);
}

#[test]
fn closures_need_pure_braids() {
    assert!(matches!(closed_invariant(&parse_artin("s1", 3).unwrap()), Err(Error::NotPure)));
    assert!(closed_invariant(&parse_artin("s1 s1", 3).unwrap()).is_ok());
    assert!(matches!(
        invariant_c(&parse_artin("s1", 2).unwrap()),
        Err(Error::TooFewStrands { .. })
    ));
}

#[test]
fn artin_parsing() {
    let b = parse_artin("s1 S2^-1 s3^+1 s1^1", 4).unwrap();
    assert_eq!(b.to_string(), "s1 s2^-1 s3 s1");
    assert!(matches!(parse_artin("s4", 4), Err(Error::Parse(_))));
    assert!(matches!(parse_artin("t1", 4), Err(Error::Parse(_))));
}
