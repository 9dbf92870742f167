mod common;

use capacity_core::integrals::*;
use capacity_core::{Capacity, PseudoProduct, Subset};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn case(seed: u64, n: usize) -> (Capacity<f64>, Vec<f64>, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = random_capacity(n, &mut rng);
    let t = random_scores(n, 10.0, &mut rng);
    (Capacity::new(n, v.clone()).unwrap(), v, t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn choquet_forms_agree(seed in any::<u64>(), n in 1usize..=8) {
        let (mu, v, t) = case(seed, n);
        let perm = choquet(&mu, &t).unwrap();
        prop_assert!((perm - choquet_mobius(&mu.mobius(), &t).unwrap()).abs() <= 1e-9);
        prop_assert!((perm - layer_cake_choquet(&v, &t)).abs() <= 1e-9);
    }

    #[test]
    fn sipos_forms_agree(seed in any::<u64>(), n in 1usize..=8) {
        let (mu, v, t) = case(seed, n);
        let s = sipos(&mu, &t).unwrap();
        prop_assert!((s - sipos_split(&mu, &t).unwrap()).abs() <= 1e-9);
        prop_assert!((s - sipos_mobius(&mu.mobius(), &t).unwrap()).abs() <= 1e-9);
        prop_assert!((s - layer_cake_sipos(&v, &t)).abs() <= 1e-9);
        prop_assert!((s - sipos_closed_form(&v, &t)).abs() <= 1e-9);
    }

    #[test]
    fn asymmetric_and_symmetric_negation(seed in any::<u64>(), n in 1usize..=8) {
        let (mu, _, t) = case(seed, n);
        let neg: Vec<f64> = t.iter().map(|x| -x).collect();
        let bar = mu.conjugate();
        prop_assert!((choquet(&mu, &neg).unwrap() + choquet(&bar, &t).unwrap()).abs() <= 1e-9);
        prop_assert!((sipos(&mu, &neg).unwrap() + sipos(&mu, &t).unwrap()).abs() <= 1e-9);
        let m = mu.mobius();
        prop_assert!((smle(&m, &neg).unwrap() + smle(&m, &t).unwrap()).abs() <= 1e-6);
    }

    #[test]
    fn choquet_and_sipos_are_monotone(seed in any::<u64>(), n in 1usize..=6) {
        let (mu, _, t) = case(seed, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let up: Vec<f64> = t.iter().map(|x| x + rng.gen_range(0.0..3.0)).collect();
        prop_assert!(choquet(&mu, &t).unwrap() <= choquet(&mu, &up).unwrap() + 1e-9);
        prop_assert!(sipos(&mu, &t).unwrap() <= sipos(&mu, &up).unwrap() + 1e-9);
    }

    #[test]
    fn choquet_affine_and_sipos_homogeneous(seed in any::<u64>(), n in 1usize..=6, alpha in 0.0..50.0f64, beta in -10.0..10.0f64, s in -50.0..50.0f64) {
        let (mu, _, t) = case(seed, n);
        let shifted: Vec<f64> = t.iter().map(|x| alpha * x + beta).collect();
        let c = choquet(&mu, &t).unwrap();
        prop_assert!((choquet(&mu, &shifted).unwrap() - (alpha * c + beta)).abs() <= 1e-9);
        let scaled: Vec<f64> = t.iter().map(|x| s * x).collect();
        prop_assert!((sipos(&mu, &scaled).unwrap() - s * sipos(&mu, &t).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn comonotone_additivity(seed in any::<u64>(), n in 1usize..=6) {
        let (mu, _, t) = case(seed, n);
        // Any nondecreasing transform of t shares its ordering.
        let u: Vec<f64> = t.iter().map(|x| x.powi(3) / 10.0 + 2.0 * x).collect();
        let sum: Vec<f64> = t.iter().zip(&u).map(|(a, b)| a + b).collect();
        let lhs = choquet(&mu, &sum).unwrap();
        let rhs = choquet(&mu, &t).unwrap() + choquet(&mu, &u).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + rhs.abs()));
    }

    #[test]
    fn ties_do_not_matter(seed in any::<u64>(), n in 2usize..=6) {
        let (mu, _, mut t) = case(seed, n);
        t[1] = t[0];
        let mut swapped = t.clone();
        swapped.swap(0, 1);
        prop_assert_eq!(choquet(&mu, &t).unwrap(), choquet(&mu, &swapped).unwrap());
        prop_assert_eq!(sipos(&mu, &t).unwrap(), sipos(&mu, &swapped).unwrap());
        let k = ascending_order(&t);
        prop_assert!(k.iter().position(|&i| i == 0) < k.iter().position(|&i| i == 1));
    }

    #[test]
    fn mle_matches_owen_form_on_unit_cube(seed in any::<u64>(), n in 1usize..=8) {
        let (mu, _, _) = case(seed, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
        let t: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..=1.0)).collect();
        let m = mu.mobius();
        let a = mle(&m, &t).unwrap();
        prop_assert!((a - mle_owen(mu.as_set_function(), &t).unwrap()).abs() <= 1e-9);
        prop_assert!((a - smle(&m, &t).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn comobius_form_on_nonnegative_scores(seed in any::<u64>(), n in 1usize..=8) {
        let (mu, _, t) = case(seed, n);
        let pos: Vec<f64> = t.iter().map(|x| x.abs()).collect();
        let got = choquet_comobius(&mu.co_mobius(), &pos).unwrap();
        prop_assert!((got - choquet(&mu, &pos).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn cpt_collapses_to_sipos(seed in any::<u64>(), n in 1usize..=8) {
        let (mu, _, t) = case(seed, n);
        let m = mu.mobius();
        prop_assert!((cpt(&m, &m, &t).unwrap() - sipos(&mu, &t).unwrap()).abs() <= 1e-9);
        let bar = mu.conjugate().mobius();
        prop_assert!((cpt(&m, &bar, &t).unwrap() - choquet(&mu, &t).unwrap()).abs() <= 1e-9);
        let pos: Vec<f64> = t.iter().map(|x| x.abs()).collect();
        prop_assert!((cpt(&m, &bar, &pos).unwrap() - choquet_mobius(&m, &pos).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn min_extension_is_choquet_on_unit_cube(seed in any::<u64>(), n in 1usize..=6) {
        let (mu, _, _) = case(seed, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
        let t: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..=1.0)).collect();
        let m = mu.mobius();
        let min = pseudo_product_extension(&m, &PseudoProduct::minimum(), &t).unwrap();
        prop_assert!((min - choquet(&mu, &t).unwrap()).abs() <= 1e-9);
        let prod = pseudo_product_extension(&m, &PseudoProduct::product(), &t).unwrap();
        prop_assert!((prod - mle(&m, &t).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn sugeno_product_on_binary_acts(seed in any::<u64>(), n in 1usize..=6, alpha in 0.0..20.0f64) {
        let (mu, _, _) = case(seed, n);
        let mv = mu.ordinal_mobius();
        for a in Subset::all(n) {
            let t: Vec<f64> = (0..n).map(|i| if a.contains(i) { alpha } else { 0.0 }).collect();
            prop_assert!((sugeno_product(&mv, &t).unwrap() - alpha * mu.get(a)).abs() <= 1e-9);
        }
    }

    #[test]
    fn single_criterion_values(seed in any::<u64>(), n in 1usize..=6, a in -20.0..20.0f64) {
        let (mu, _, _) = case(seed, n);
        let bar = mu.conjugate();
        let m = mu.mobius();
        let mv = mu.ordinal_mobius();
        for i in 0..n {
            let mut t = vec![0.0; n];
            t[i] = a;
            let s = Subset::singleton(i);
            let c_weight = if a < 0.0 { bar.get(s) } else { mu.get(s) };
            prop_assert!((choquet(&mu, &t).unwrap() - a * c_weight).abs() <= 1e-9);
            prop_assert!((sipos(&mu, &t).unwrap() - a * mu.get(s)).abs() <= 1e-9);
            prop_assert!((smle(&m, &t).unwrap() - a * m.get(s)).abs() <= 1e-9);
            prop_assert!((sugeno_product(&mv, &t).unwrap() - a * mu.get(s)).abs() <= 1e-9);
        }
    }
}

#[test]
fn mle_diagonal_counterexample() {
    let m = Capacity::new(2, vec![0.0, 0.9, 0.9, 1.0]).unwrap().mobius();
    assert_close(mle(&m, &[1.0, 1.0]).unwrap(), 1.0, 1e-12, "MLE(1,1)");
    assert_close(mle(&m, &[3.0, 3.0]).unwrap(), -1.8, 1e-12, "MLE(3,3)");
}

#[test]
fn mle_reproduces_binary_acts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let v = random_capacity(5, &mut rng);
    let m = Capacity::new(5, v.clone()).unwrap().mobius();
    for (a, &va) in v.iter().enumerate() {
        let t: Vec<f64> = (0..5).map(|i| (a >> i & 1) as f64).collect();
        assert_close(mle(&m, &t).unwrap(), va, 1e-12, "MLE on vertex");
    }
}

#[test]
fn symmetric_max_grid() {
    for i in 0..41 {
        let a = -2.0 + 0.1 * i as f64;
        assert_eq!(symmetric_max(a, 0.0), a);
        assert_eq!(symmetric_max(a, -a), 0.0);
        for j in 0..41 {
            let b = -2.0 + 0.1 * j as f64;
            let got = symmetric_max(a, b);
            if a.abs() > b.abs() {
                assert_eq!(got, a);
            } else if b.abs() > a.abs() {
                assert_eq!(got, b);
            }
            assert_eq!(got, symmetric_max(b, a));
        }
    }
}

#[test]
fn cpt_compatibility_from_perturbed_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let v = random_capacity(3, &mut rng);
    let mut w = v.clone();
    // Raise only the pair values; singletons are untouched.
    for a in [3usize, 5, 6] {
        w[a] = (w[a] + 0.5 * (1.0 - w[a])).min(1.0);
    }
    let mu1 = Capacity::new(3, v).unwrap();
    let mu2 = Capacity::new(3, w).unwrap();
    let report = cpt_compatible(&mu1, &mu2).unwrap();
    assert!(report.compatible);
    assert!(report.violations.is_empty());
    let mu3 = Capacity::new(2, vec![0.0, 0.3, 0.6, 1.0]).unwrap();
    let mu4 = Capacity::new(2, vec![0.0, 0.4, 0.6, 1.0]).unwrap();
    let report = cpt_compatible(&mu3, &mu4).unwrap();
    assert!(!report.compatible);
    assert_eq!(report.violations, vec![0]);
}

#[test]
fn cpt_against_split_sums() {
    let mu1 = Capacity::new(2, vec![0.0, 0.3, 0.6, 1.0]).unwrap();
    let mu2 = mu1.conjugate();
    let t = [0.5, -0.2];
    // Σ m1(A) min t⁺ − Σ m2(A) min t⁻ with t⁺ = (0.5, 0), t⁻ = (0, 0.2).
    let m1 = mu1.mobius();
    let m2 = mu2.mobius();
    let want = m1.get(Subset::singleton(0)) * 0.5 - m2.get(Subset::singleton(1)) * 0.2;
    assert_close(cpt(&m1, &m2, &t).unwrap(), want, 1e-12, "cpt");
}
