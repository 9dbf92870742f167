//! Reference implementations used as oracles. They work on plain `f64`
//! tables and `Vec<usize>` sets and share no code with the library.
#![allow(dead_code)]

use rand::Rng;

pub fn members(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(set: &[usize]) -> usize {
    set.iter().fold(0, |m, &i| m | 1 << i)
}

fn is_subset(b: usize, a: usize) -> bool {
    b & !a == 0
}

fn parity(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `m(A) = Σ_{B ⊆ A} (−1)^{|A∖B|} v(B)` by scanning every pair of masks.
pub fn naive_mobius(v: &[f64]) -> Vec<f64> {
    let size = v.len();
    (0..size)
        .map(|a| {
            (0..size)
                .filter(|&b| is_subset(b, a))
                .map(|b| parity((a & !b).count_ones() as usize) * v[b])
                .sum()
        })
        .collect()
}

pub fn naive_zeta(m: &[f64]) -> Vec<f64> {
    let size = m.len();
    (0..size)
        .map(|a| (0..size).filter(|&b| is_subset(b, a)).map(|b| m[b]).sum())
        .collect()
}

/// `m̌(A) = Σ_{B ⊆ A} (−1)^{|B|} v(N∖B)`.
pub fn naive_co_mobius(v: &[f64]) -> Vec<f64> {
    let size = v.len();
    let full = size - 1;
    (0..size)
        .map(|a| {
            (0..size)
                .filter(|&b| is_subset(b, a))
                .map(|b| parity(b.count_ones() as usize) * v[full & !b])
                .sum()
        })
        .collect()
}

pub fn naive_conjugate(v: &[f64]) -> Vec<f64> {
    let full = v.len() - 1;
    (0..v.len()).map(|a| v[full] - v[full & !a]).collect()
}

/// Monotone, normalized, strictly positive on singletons.
pub fn random_capacity<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    let size = 1usize << n;
    let raw: Vec<f64> = (0..size).map(|_| rng.gen_range(0.05..1.0)).collect();
    let mut v: Vec<f64> = (0..size)
        .map(|a| {
            (1..size)
                .filter(|&b| is_subset(b, a))
                .map(|b| raw[b])
                .fold(0.0, f64::max)
        })
        .collect();
    let top = v[size - 1];
    for x in &mut v {
        *x /= top;
    }
    v[0] = 0.0;
    v[size - 1] = 1.0;
    v
}

pub fn random_scores<R: Rng>(n: usize, bound: f64, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// Layer-cake form on the reals:
/// `∫_0^∞ μ({t ≥ x}) dx − ∫_{−∞}^0 (μ(N) − μ({t ≥ x})) dx`,
/// integrated exactly between consecutive breakpoints.
pub fn layer_cake_choquet(v: &[f64], t: &[f64]) -> f64 {
    let n = t.len();
    let full = v.len() - 1;
    let level = |x: f64| v[mask_of(&(0..n).filter(|&i| t[i] >= x).collect::<Vec<_>>())];
    let mut cuts: Vec<f64> = t.to_vec();
    cuts.push(0.0);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let mid = 0.5 * (lo + hi);
        if lo >= 0.0 {
            total += (hi - lo) * level(mid);
        } else {
            total -= (hi - lo) * (v[full] - level(mid));
        }
    }
    total
}

/// `C_μ(t⁺) − C_μ(t⁻)`.
pub fn layer_cake_sipos(v: &[f64], t: &[f64]) -> f64 {
    let pos: Vec<f64> = t.iter().map(|x| x.max(0.0)).collect();
    let neg: Vec<f64> = t.iter().map(|x| (-x).max(0.0)).collect();
    layer_cake_choquet(v, &pos) - layer_cake_choquet(v, &neg)
}

/// The closed form of the symmetric integral split at the sign change,
/// `t_(1) ≤ … ≤ t_(p) < 0 ≤ t_(p+1) ≤ … ≤ t_(n)`.
pub fn sipos_closed_form(v: &[f64], t: &[f64]) -> f64 {
    let n = t.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| t[a].total_cmp(&t[b]));
    let s: Vec<f64> = order.iter().map(|&i| t[i]).collect();
    let p = s.iter().filter(|&&x| x < 0.0).count();
    let low = |i: usize| v[mask_of(&order[..i])];
    let high = |i: usize| v[mask_of(&order[i..])];
    let mut total = 0.0;
    for i in 1..p {
        total += (s[i - 1] - s[i]) * low(i);
    }
    if p > 0 {
        total += s[p - 1] * low(p);
    }
    if p < n {
        total += s[p] * high(p);
    }
    for i in p + 1..n {
        total += (s[i] - s[i - 1]) * high(i);
    }
    total
}

pub fn factorial(k: usize) -> f64 {
    (1..=k).map(|x| x as f64).product()
}

/// Interaction index by explicit enumeration of `B ⊆ N∖A` and `K ⊆ A`.
pub fn naive_interaction(v: &[f64], n: usize, a: &[usize]) -> f64 {
    let rest: Vec<usize> = (0..n).filter(|i| !a.contains(i)).collect();
    let k = a.len();
    let mut total = 0.0;
    for bm in 0..1usize << rest.len() {
        let b: Vec<usize> = members(bm, rest.len())
            .into_iter()
            .map(|j| rest[j])
            .collect();
        let weight = factorial(n - b.len() - k) * factorial(b.len()) / factorial(n - k + 1);
        let mut inner = 0.0;
        for km in 0..1usize << k {
            let kset: Vec<usize> = members(km, k).into_iter().map(|j| a[j]).collect();
            let mut union = kset.clone();
            union.extend(&b);
            inner += parity(k - kset.len()) * v[mask_of(&union)];
        }
        total += weight * inner;
    }
    total
}

/// Average marginal contribution over all orderings.
pub fn shapley_by_permutations(v: &[f64], n: usize) -> Vec<f64> {
    let mut phi = vec![0.0; n];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0.0;
    permute(&mut perm, 0, &mut |p| {
        count += 1.0;
        let mut mask = 0usize;
        for &i in p {
            phi[i] += v[mask | 1 << i] - v[mask];
            mask |= 1 << i;
        }
    });
    phi.iter().map(|x| x / count).collect()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got}, want {want} (|diff| = {:e})",
        (got - want).abs()
    );
}
