//! Small exact-integer helpers shared across the crate.

use num::bigint::BigUint;
use num::traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k) with small arguments.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// C(top + k - 1, k), the number of k-multisets from `top` kinds.
/// `top` may be a big integer (it is a tree count in the series expansion).
pub fn multiset_binomial(top: &BigUint, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 1..=k {
        // exact at every step: C(e+i-1, i) = C(e+i-2, i-1) * (e+i-1) / i
        acc = acc * (top + BigUint::from(i - 1)) / BigUint::from(i);
    }
    acc
}

/// All involutions of {0, .., k-1}, as permutation vectors.
pub fn involutions(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut used = vec![false; k];
    fn rec(i: usize, k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = (i..k).find(|&j| !used[j]) else {
            out.push(perm.clone());
            return;
        };
        used[i] = true;
        perm[i] = i;
        rec(i + 1, k, perm, used, out);
        for j in i + 1..k {
            if !used[j] {
                used[j] = true;
                perm[i] = j;
                perm[j] = i;
                rec(i + 1, k, perm, used, out);
                used[j] = false;
            }
        }
        used[i] = false;
    }
    rec(0, k, &mut perm, &mut used, &mut out);
    out
}
