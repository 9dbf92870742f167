mod common;

use capacity_core::axioms::*;
use capacity_core::integrals::{choquet, Domain, Extension};
use capacity_core::{Aggregation, Capacity, Error, PseudoProduct};
use common::random_capacity;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg() -> AxiomCheckConfig {
    AxiomCheckConfig {
        samples: 300,
        ..Default::default()
    }
}

fn random_mu(seed: u64, n: usize) -> Capacity<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Capacity::new(n, random_capacity(n, &mut rng)).unwrap()
}

fn verdicts(ext: Extension, mu: &Capacity<f64>) -> Vec<(AxiomId, bool)> {
    let f = Aggregation::new(ext, mu.clone()).unwrap();
    check_axioms(&AxiomId::ALL, &f, mu, &cfg())
        .unwrap()
        .into_iter()
        .map(|r| (r.axiom, r.passed))
        .collect()
}

#[test]
fn sipos_property_row() {
    for seed in 0..5 {
        let mu = random_mu(seed, 3);
        for (axiom, passed) in verdicts(Extension::Sipos, &mu) {
            let expected = !matches!(axiom, AxiomId::C1);
            assert_eq!(passed, expected, "sipos {axiom} (seed {seed})");
        }
    }
}

#[test]
fn choquet_property_row() {
    for seed in 0..5 {
        let mu = random_mu(seed, 3);
        for (axiom, passed) in verdicts(Extension::Choquet, &mu) {
            let expected = !matches!(axiom, AxiomId::A | AxiomId::A1 | AxiomId::S1);
            assert_eq!(passed, expected, "choquet {axiom} (seed {seed})");
        }
    }
}

#[test]
fn choquet_a1_witness_uses_a_negative_singleton() {
    let mu = Capacity::new(2, vec![0.0, 0.3, 0.6, 1.0]).unwrap();
    let f = Aggregation::new(Extension::Choquet, mu.clone()).unwrap();
    let report = check_axiom(AxiomId::A1, &f, &mu, &cfg()).unwrap();
    let cx = report.counterexample.expect("A1 must fail");
    let Witness::Ratio { points, .. } = &cx.witness else {
        panic!("wrong witness {cx:?}")
    };
    assert!(points.iter().any(|p| p.iter().any(|&x| x < 0.0)));
    assert!(points
        .iter()
        .all(|p| p.iter().filter(|&&x| x != 0.0).count() <= 1));
    let (expected, got) = cx.reevaluate(&f);
    assert_eq!((expected, got), (cx.expected, cx.got));
}

#[test]
fn self_conjugate_capacity_passes_a1_under_choquet() {
    let mu = Capacity::additive(&[0.2, 0.3, 0.5]).unwrap();
    let f = Aggregation::new(Extension::Choquet, mu.clone()).unwrap();
    assert!(check_axiom(AxiomId::A1, &f, &mu, &cfg()).unwrap().passed);
}

#[test]
fn mle_fails_he_and_a2_when_not_additive() {
    for seed in 0..5 {
        let mu = random_mu(seed, 3);
        let f = Aggregation::new(Extension::Mle, mu.clone()).unwrap();
        for axiom in [AxiomId::HE, AxiomId::A2] {
            let r = check_axiom(axiom, &f, &mu, &cfg()).unwrap();
            assert!(!r.passed, "{axiom} (seed {seed})");
            let cx = r.counterexample.unwrap();
            let (e, g) = cx.reevaluate(&f);
            assert!((e - g).abs() > 1e-9);
        }
    }
}

#[test]
fn mle_with_additive_capacity_is_linear() {
    let mu = Capacity::additive(&[0.2, 0.3, 0.5]).unwrap();
    let f = Aggregation::new(Extension::Mle, mu.clone()).unwrap();
    let r = check_axioms(
        &[AxiomId::HE, AxiomId::A2, AxiomId::M, AxiomId::S1],
        &f,
        &mu,
        &cfg(),
    )
    .unwrap();
    assert!(r.iter().all(|r| r.passed), "{r:#?}");
}

#[test]
fn mle_monotone_only_on_unit_cube() {
    let mu = Capacity::new(2, vec![0.0, 0.9, 0.9, 1.0]).unwrap();
    let f = Aggregation::new(Extension::Mle, mu.clone()).unwrap();
    let r = check_axiom(AxiomId::M, &f, &mu, &cfg()).unwrap();
    let cx = r.counterexample.unwrap();
    assert_eq!(
        cx.witness,
        Witness::Dominance {
            lower: vec![1.0, 1.0],
            upper: vec![3.0, 3.0]
        }
    );
    assert!((cx.got + 1.8).abs() < 1e-12);

    let cube = f.restricted_to_unit_cube();
    for seed in 0..5 {
        let mu = random_mu(seed, 4);
        let f = Aggregation::new(Extension::Mle, mu.clone())
            .unwrap()
            .restricted_to_unit_cube();
        assert!(
            check_axiom(AxiomId::M, &f, &mu, &cfg()).unwrap().passed,
            "seed {seed}"
        );
    }
    assert!(check_axiom(AxiomId::M, &cube, &mu, &cfg()).unwrap().passed);
}

#[test]
fn sugeno_product_keeps_binary_acts() {
    let mu = random_mu(3, 4);
    let f = Aggregation::new(Extension::SugenoProduct, mu.clone()).unwrap();
    let r = check_axioms(
        &[AxiomId::HE, AxiomId::A, AxiomId::I, AxiomId::M],
        &f,
        &mu,
        &cfg(),
    )
    .unwrap();
    assert!(r.iter().all(|r| r.passed), "{r:?}");
}

#[test]
fn equivalence_is_consistent_across_extensions() {
    let mu = random_mu(9, 3);
    for ext in Extension::SINGLE_CAPACITY {
        let f = Aggregation::new(ext, mu.clone()).unwrap();
        let eq = check_equivalence(&f, &mu, &cfg()).unwrap();
        assert!(eq.consistent, "{ext}: {eq:?}");
    }
    let sipos = Aggregation::new(Extension::Sipos, mu.clone()).unwrap();
    let eq = check_equivalence(&sipos, &mu, &cfg()).unwrap();
    assert!(eq.scale_axioms_hold && eq.extension_axioms_hold && eq.monotonicity.passed);
}

#[test]
fn closures_can_be_checked() {
    let mu = Capacity::new(2, vec![0.0, 0.3, 0.6, 1.0]).unwrap();
    let mean = FnAggregator {
        n: 2,
        domain: Domain::Real,
        name: "mean".into(),
        f: |t: &[f64]| (t[0] + t[1]) / 2.0,
    };
    let r = check_axioms(
        &[AxiomId::I, AxiomId::S1, AxiomId::C1, AxiomId::HE],
        &mean,
        &mu,
        &cfg(),
    )
    .unwrap();
    assert_eq!(
        r.iter().map(|r| r.passed).collect::<Vec<_>>(),
        [true, true, true, false]
    );
    let choq = FnAggregator {
        n: 2,
        domain: Domain::Real,
        name: "choquet".into(),
        f: |t: &[f64]| choquet(&mu, t).unwrap(),
    };
    assert!(check_axiom(AxiomId::C1, &choq, &mu, &cfg()).unwrap().passed);
}

#[test]
fn reports_are_deterministic() {
    let mu = random_mu(1, 3);
    let f = Aggregation::new(Extension::Choquet, mu.clone()).unwrap();
    let a = check_axioms(&AxiomId::ALL, &f, &mu, &cfg()).unwrap();
    let b = check_axioms(&AxiomId::ALL, &f, &mu, &cfg()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn dimension_and_domain_errors() {
    let mu2 = Capacity::new(2, vec![0.0, 0.3, 0.6, 1.0]).unwrap();
    let mu3 = random_mu(0, 3);
    let f = Aggregation::new(Extension::Sipos, mu3).unwrap();
    assert_eq!(
        check_axiom(AxiomId::I, &f, &mu2, &cfg()),
        Err(Error::DimensionMismatch {
            expected: 2,
            got: 3
        })
    );
    let cube = Aggregation::new(Extension::Sipos, mu2.clone())
        .unwrap()
        .restricted_to_unit_cube();
    for axiom in [AxiomId::A, AxiomId::A1, AxiomId::C1, AxiomId::S1] {
        assert!(matches!(
            check_axiom(axiom, &cube, &mu2, &cfg()),
            Err(Error::DomainMismatch { .. })
        ));
    }
}

#[test]
fn pseudo_products() {
    let min = check_pseudo_product(&PseudoProduct::<f64>::minimum(), &cfg()).unwrap();
    assert!(min.all_hold && min.min_equivalent);
    for op in [
        PseudoProduct::<f64>::product(),
        PseudoProduct::lukasiewicz(),
    ] {
        let r = check_pseudo_product(&op, &cfg()).unwrap();
        let idem = r.condition(condition::IDEMPOTENT).unwrap();
        assert!(!idem.holds, "{}", op.name());
        let w = idem.witness.as_ref().unwrap();
        assert!((op.apply(w.args[0], w.args[1]) - w.got).abs() == 0.0);
        assert!(r.condition(condition::COMMUTATIVE).unwrap().holds);
        assert!(r.condition(condition::ASSOCIATIVE).unwrap().holds);
        assert!(!r.min_equivalent);
    }
    let skewed = PseudoProduct::<f64>::new("skewed", |a, b| a * b * b);
    let r = check_pseudo_product(&skewed, &cfg()).unwrap();
    assert!(!r.condition(condition::COMMUTATIVE).unwrap().holds);
}

#[test]
fn comparison_table() {
    let mu = Capacity::new(2, vec![0.0, 0.9, 0.9, 1.0]).unwrap();
    let grid = vec![vec![1.0, 1.0], vec![3.0, 3.0], vec![-1.0, 0.0]];
    let table = compare_extensions(&mu, &grid, &cfg()).unwrap();
    assert!((table.rows[1].mle + 1.8).abs() < 1e-12);
    assert!((table.rows[2].choquet + 0.1).abs() < 1e-12);
    assert!((table.rows[2].sipos + 0.9).abs() < 1e-12);
    let by_name = |n: &str| {
        table
            .verdicts
            .iter()
            .find(|v| v.extension == n)
            .unwrap()
            .clone()
    };
    let s = by_name("sipos");
    assert!(s.intra_criterion && s.inter_criteria && s.absolute_information && s.monotonicity);
    let c = by_name("choquet");
    assert!(!c.intra_criterion && c.inter_criteria && c.absolute_information && c.monotonicity);
    let m = by_name("mle");
    assert!(!m.inter_criteria && !m.monotonicity);
}
