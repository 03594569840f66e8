//! Exact closed-form counts.
//!
//! Everything here returns [`BigCount`]. Quotients are taken last so every
//! intermediate value stays integral.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// An exact nonnegative count.
pub type BigCount = BigUint;

pub fn factorial(n: usize) -> BigCount {
    (2..=n).fold(BigCount::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    // running product stays integral: acc = C(n - k + i, i) after step i
    (1..=k).fold(BigCount::one(), |acc, i| acc * (n - k + i) / i)
}

/// `(Σ parts)! / Π parts_i!`.
pub fn multinomial(parts: &[usize]) -> BigCount {
    let mut total = 0;
    let mut acc = BigCount::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Lah number `L(n, k) = n!/k! · C(n-1, k-1)`: sets of `k` lists on `[n]`.
///
/// Returns zero outside `1 ≤ k ≤ n` so that sums over `k` need no guards.
pub fn lah(n: usize, k: usize) -> BigCount {
    if k == 0 || k > n {
        return BigCount::zero();
    }
    factorial(n) * binomial(n - 1, k - 1) / factorial(k)
}

/// Narayana number `N(n, k) = C(n,k)·C(n,k-1)/n`: Dyck `n`-paths with `k`
/// peaks. Zero outside `1 ≤ k ≤ n`.
pub fn narayana(n: usize, k: usize) -> BigCount {
    if k == 0 || k > n {
        return BigCount::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / n
}

pub fn catalan(n: usize) -> BigCount {
    binomial(2 * n, n) / (n + 1)
}

/// Bell numbers `B_0..=B_n` via `B_{m+1} = Σ_i C(m,i) B_i`.
pub fn bell_numbers(n: usize) -> Vec<BigCount> {
    let mut bell = vec![BigCount::one()];
    for m in 0..n {
        let next = (0..=m).map(|i| binomial(m, i) * &bell[i]).sum();
        bell.push(next);
    }
    bell
}

pub fn bell(n: usize) -> BigCount {
    bell_numbers(n).pop().unwrap()
}

/// Fubini (ordered Bell) numbers `F_0..=F_n` via `F_m = Σ_{i=1..m} C(m,i) F_{m-i}`.
pub fn fubini_numbers(n: usize) -> Vec<BigCount> {
    let mut fubini = vec![BigCount::one()];
    for m in 1..=n {
        let next = (1..=m).map(|i| binomial(m, i) * &fubini[m - i]).sum();
        fubini.push(next);
    }
    fubini
}

pub fn fubini(n: usize) -> BigCount {
    fubini_numbers(n).pop().unwrap()
}

/// `2^e`.
pub fn pow2(e: usize) -> BigCount {
    BigCount::one() << e
}
