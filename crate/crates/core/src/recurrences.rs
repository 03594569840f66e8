//! Fast exact counts.
//!
//! Sets of noncrossing lists (`sl-nc`) are counted either by the
//! weak-composition recurrence
//!
//! ```text
//! u(n, k) = k! Σ_{b_1+…+b_k = n-k} u(b_1)…u(b_k)
//! ```
//!
//! which has `2^{n-1}` terms, or by collapsing compositions with equal
//! multisets into one term per integer partition `1^{p_1} … n^{p_n}` of `n`:
//!
//! ```text
//! u(n) = Σ_π k! · (k; p_1, …, p_n) · u(0)^{p_1} u(1)^{p_2} … u(n-1)^{p_n},  k = Σ p_i
//! ```
//!
//! Note the shift: the multiplicity of part `i` is the exponent of
//! `u(i - 1)`, because each part of `π` is one more than the size of the
//! interval it leaves for the other blocks.
//!
//! Lists of noncrossing lists (`ll-nc`) need the block count as well; see
//! [`Configuration`] and [`CountTable::lnl_refined`]. That sum has `t(n)`
//! terms, which grows exponentially. [`CountTable::lnl_composed`] takes the
//! same decomposition but sums over compositions `|I_1|, …, |I_k|` and
//! carries each gap as a polynomial in its block count, weighted by
//! `u(b, c) / c!` (sets of `c` noncrossing lists on `b` points). Its cost
//! is polynomial in `n`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::count::{
    bell, binomial, catalan, factorial, fubini, lah, multinomial, narayana, pow2, BigCount,
};
use crate::enumerate::{Family, Order};
use crate::partitions::{partitions_of, weak_compositions, IntegerPartitionFreq};
use crate::series::PowerSeries;

/// Default largest `n` for the exponential-term recurrence.
pub const DEFAULT_SLOW_BOUND: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("the weak-composition recurrence has 2^(n-1) terms; n = {n} exceeds the bound {bound}, use snl_count instead")]
    SlowBoundExceeded { n: usize, bound: usize },
}

/// One summand index of the `ll-nc` recurrence.
///
/// For a partition `π` of `n`, `b` holds the nonzero entries of `π - 1` in
/// nonincreasing order, `trailing_zeros` counts the parts equal to 1, and
/// `c` chooses how many blocks fill each nonempty gap (`1 ≤ c_i ≤ b_i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub trailing_zeros: usize,
    pub source: IntegerPartitionFreq,
}

impl Configuration {
    /// Total number of blocks, `1 + Σ c_i`.
    pub fn blocks(&self) -> usize {
        1 + self.c.iter().sum::<usize>()
    }
}

/// All configurations for `n`, partition by partition (reverse-lex), with
/// the `c` vectors in odometer order.
pub fn configurations(n: usize) -> impl Iterator<Item = Configuration> {
    partitions_of(n).flat_map(|source| {
        let parts = source.parts();
        let b: Vec<usize> = parts.iter().filter(|&&a| a > 1).map(|a| a - 1).collect();
        let trailing_zeros = parts.len() - b.len();
        let mut c = vec![1; b.len()];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let item = Configuration {
                b: b.clone(),
                c: c.clone(),
                trailing_zeros,
                source: source.clone(),
            };
            // odometer, last digit fastest
            done = true;
            for i in (0..c.len()).rev() {
                if c[i] < b[i] {
                    c[i] += 1;
                    done = false;
                    break;
                }
                c[i] = 1;
            }
            Some(item)
        })
    })
}

/// Memoized `u(n)` for sets of noncrossing lists and `u(n, j)` for lists of
/// `j` noncrossing lists.
///
/// Values are filled bottom-up and never change once computed.
#[derive(Debug, Clone)]
pub struct CountTable {
    snl: Vec<BigCount>,
    // lnl[n][j]; row 0 is the empty row
    lnl: Vec<Vec<BigCount>>,
    factorials: Vec<BigCount>,
    // gaps[b][c] = u(b, c) / c!, with gaps[0] = [1]
    gaps: Vec<Vec<BigCount>>,
    // compositions[k][m]: Σ over compositions of m into k parts of Π gaps[a_i - 1]
    compositions: Vec<Vec<Vec<BigCount>>>,
}

impl Default for CountTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CountTable {
    pub fn new() -> Self {
        CountTable {
            snl: vec![BigCount::one()],
            lnl: vec![vec![BigCount::zero()]],
            factorials: vec![BigCount::one()],
            gaps: vec![vec![BigCount::one()]],
            compositions: vec![vec![vec![BigCount::one()]]],
        }
    }

    fn factorial(&mut self, n: usize) -> &BigCount {
        while self.factorials.len() <= n {
            let next = &self.factorials[self.factorials.len() - 1] * self.factorials.len();
            self.factorials.push(next);
        }
        &self.factorials[n]
    }

    /// `u(n)` for sets of noncrossing lists via the partition-indexed sum.
    pub fn snl(&mut self, n: usize) -> BigCount {
        while self.snl.len() <= n {
            let m = self.snl.len();
            let mut total = BigCount::zero();
            for pi in partitions_of(m) {
                let k = pi.part_count();
                let mut term = self.factorial(k).clone() * multinomial(pi.freq());
                for (i, &p) in pi.freq().iter().enumerate() {
                    // part i+1 carries u(i)
                    if p > 0 {
                        term *= num_traits::pow(self.snl[i].clone(), p);
                    }
                }
                total += term;
            }
            self.snl.push(total);
        }
        self.snl[n].clone()
    }

    /// `u(n, j)`: partitions of `[n]` into a list of `j` noncrossing lists.
    pub fn lnl_refined(&mut self, n: usize, j: usize) -> BigCount {
        self.fill_lnl(n);
        self.lnl[n].get(j).cloned().unwrap_or_default()
    }

    /// `u(n) = Σ_j u(n, j)` for lists of noncrossing lists; `u(0) = 1`.
    pub fn lnl(&mut self, n: usize) -> BigCount {
        if n == 0 {
            return BigCount::one();
        }
        self.fill_lnl(n);
        self.lnl[n].iter().sum()
    }

    fn fill_lnl(&mut self, n: usize) {
        while self.lnl.len() <= n {
            let m = self.lnl.len();
            let mut row = vec![BigCount::zero(); m + 1];
            for config in configurations(m) {
                row[config.blocks()] += self.lnl_term(&config);
            }
            self.lnl.push(row);
        }
    }

    /// `k! · (k; p_1..p_n) · (j; 1, c_1..c_r) · Π u(b_i, c_i)`.
    fn lnl_term(&mut self, config: &Configuration) -> BigCount {
        let k = config.source.part_count();
        let mut term = self.factorial(k).clone() * multinomial(config.source.freq());
        let mut block_counts = Vec::with_capacity(config.c.len() + 1);
        block_counts.push(1);
        block_counts.extend_from_slice(&config.c);
        term *= multinomial(&block_counts);
        for (&b, &c) in config.b.iter().zip(&config.c) {
            term *= &self.lnl[b][c];
        }
        term
    }

    /// `u(n, j)` by the composition-polynomial route; agrees with
    /// [`lnl_refined`](Self::lnl_refined).
    pub fn lnl_composed_refined(&mut self, n: usize, j: usize) -> BigCount {
        if n == 0 || j == 0 {
            return BigCount::zero();
        }
        self.fill_gaps(n);
        match self.gaps[n].get(j).cloned() {
            Some(s) => s * self.factorial(j),
            None => BigCount::zero(),
        }
    }

    /// `u(n)` for lists of noncrossing lists in polynomial time; `u(0) = 1`.
    pub fn lnl_composed(&mut self, n: usize) -> BigCount {
        if n == 0 {
            return BigCount::one();
        }
        (1..=n).map(|j| self.lnl_composed_refined(n, j)).sum()
    }

    fn fill_gaps(&mut self, n: usize) {
        while self.gaps.len() <= n {
            let m = self.gaps.len();
            // compositions[k][m] for k = 1..=m; row k = 0 is zero beyond m = 0
            self.compositions[0].push(Vec::new());
            while self.compositions.len() <= m {
                let len = self.compositions.len();
                self.compositions.push(vec![Vec::new(); len]);
            }
            let mut weighted = Vec::new();
            for k in 1..=m {
                let mut acc = Vec::new();
                for a in 1..=m + 1 - k {
                    poly_mul_add(&mut acc, &self.compositions[k - 1][m - a], &self.gaps[a - 1]);
                }
                let scale = self.factorial(k).clone();
                poly_mul_add(&mut weighted, &acc, &[scale]);
                self.compositions[k].push(acc);
            }
            // [y^{j-1}] of the weighted sum is u(m, j) / j!
            let mut row = vec![BigCount::zero()];
            row.extend(weighted);
            self.gaps.push(row);
        }
    }

    /// Cardinality of `family` on `[n]`, by the fastest exact route.
    pub fn closed_count(&mut self, family: Family, n: usize) -> BigCount {
        match (family.outer, family.inner, family.noncrossing) {
            (Order::Set, Order::Set, false) => bell(n),
            (Order::Set, Order::List, false) => (1..=n).map(|k| lah(n, k)).sum(),
            (Order::List, Order::Set, false) => fubini(n),
            (Order::List, Order::List, false) => {
                if n == 0 {
                    BigCount::one()
                } else {
                    (1..=n).map(|k| factorial(n) * binomial(n - 1, k - 1)).sum()
                }
            }
            (Order::Set, Order::Set, true) => catalan(n),
            (Order::Set, Order::List, true) => self.snl(n),
            (Order::List, Order::Set, true) => {
                if n == 0 {
                    BigCount::one()
                } else {
                    // peak-labeled Dyck paths, grouped by the count n+1-k
                    (1..=n).map(|k| factorial(n + 1 - k) * narayana(n, k)).sum()
                }
            }
            (Order::List, Order::List, true) => self.lnl_composed(n),
        }
    }

    /// Cardinality of `family` on `[n]`, taking the `ll-nc` count from the
    /// configuration-indexed recurrence instead of the composition route.
    pub fn recurrence_count(&mut self, family: Family, n: usize) -> BigCount {
        if family.is_list_of_lists() && family.noncrossing {
            self.lnl(n)
        } else {
            self.closed_count(family, n)
        }
    }
}

/// `acc += f · g` on coefficient vectors, growing `acc` as needed.
fn poly_mul_add(acc: &mut Vec<BigCount>, f: &[BigCount], g: &[BigCount]) {
    if f.is_empty() || g.is_empty() {
        return;
    }
    if acc.len() < f.len() + g.len() - 1 {
        acc.resize(f.len() + g.len() - 1, BigCount::zero());
    }
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            acc[i + j] += a * b;
        }
    }
}

/// `u(n)` for sets of noncrossing lists, partition-indexed recurrence.
pub fn snl_count(n: usize) -> BigCount {
    CountTable::new().snl(n)
}

/// `u(n)` for sets of noncrossing lists by the weak-composition recurrence,
/// memoized bottom-up. Refuses `n > bound`.
pub fn snl_count_slow(n: usize, bound: usize) -> Result<BigCount, RecurrenceError> {
    if n > bound {
        return Err(RecurrenceError::SlowBoundExceeded { n, bound });
    }
    let mut u = vec![BigCount::one()];
    for m in 1..=n {
        let mut total = BigCount::zero();
        for k in 1..=m {
            let mut inner = BigCount::zero();
            for comp in weak_compositions(m - k, k) {
                inner += comp.parts.iter().fold(BigCount::one(), |acc, &b| acc * &u[b]);
            }
            total += factorial(k) * inner;
        }
        u.push(total);
    }
    Ok(u.swap_remove(n))
}

/// `u(n)` for lists of noncrossing lists.
pub fn lnl_count(n: usize) -> BigCount {
    CountTable::new().lnl(n)
}

/// `u(n, j)` for lists of `j` noncrossing lists.
pub fn lnl_count_refined(n: usize, j: usize) -> BigCount {
    CountTable::new().lnl_refined(n, j)
}

pub fn closed_count(family: Family, n: usize) -> BigCount {
    CountTable::new().closed_count(family, n)
}

/// The `sl-nc` counts `u(0..=order)` as a power series.
pub fn snl_series(order: usize) -> PowerSeries {
    let mut table = CountTable::new();
    table.snl(order);
    PowerSeries::new(table.snl[..=order].iter().map(|c| num_bigint::BigInt::from(c.clone())), order)
}

/// `Σ_n t(n) x^n = 1/(1-x) · Π_{k≥2} 1/(1 - (k-1)x^k)` through `x^order`.
pub fn term_count_gf(order: usize) -> PowerSeries {
    let mut acc = geometric(1, 1, order);
    for k in 2..=order {
        acc = acc.mul(&geometric(k, k - 1, order)).expect("same order");
    }
    acc
}

/// `1/(1-x) · Π_{k≥2} (1 - x^k)^{-(k-1)}` through `x^order`.
pub fn term_count_refined_gf(order: usize) -> PowerSeries {
    let mut acc = geometric(1, 1, order);
    for k in 2..=order {
        acc = acc.mul(&geometric(k, 1, order).pow(k - 1)).expect("same order");
    }
    acc
}

/// `1/(1 - ratio · x^step)` truncated.
fn geometric(step: usize, ratio: usize, order: usize) -> PowerSeries {
    let mut coeffs = vec![num_bigint::BigInt::zero(); order + 1];
    let mut power = num_bigint::BigInt::one();
    for e in (0..=order).step_by(step) {
        coeffs[e] = power.clone();
        power *= ratio;
    }
    PowerSeries::new(coeffs, order)
}

/// `t(n)` as the sum over partitions `π` of `n` of the product of the
/// nonzero entries of `π - 1`.
pub fn term_count_from_partitions(n: usize) -> BigCount {
    partitions_of(n)
        .map(|pi| {
            pi.parts()
                .iter()
                .filter(|&&a| a > 1)
                .fold(BigCount::one(), |acc, &a| acc * (a - 1))
        })
        .sum()
}

/// Number of summands in the `ll-nc` recurrence for `u(n)`.
///
/// Computed from the generating function and from the partition sum; the
/// two must agree.
pub fn term_count(n: usize) -> BigCount {
    let from_gf = term_count_gf(n).coeff(n);
    let from_gf = from_gf.to_biguint().expect("nonnegative coefficient");
    let direct = term_count_from_partitions(n);
    assert_eq!(from_gf, direct, "term count routes disagree at n = {n}");
    direct
}

/// Number of summands after merging equal `u(b, c)` factors.
pub fn term_count_refined(n: usize) -> BigCount {
    term_count_refined_gf(n)
        .coeff(n)
        .to_biguint()
        .expect("nonnegative coefficient")
}

/// `n! · 2^{n-1}`, the unrestricted lists-of-lists count.
pub fn lists_of_lists(n: usize) -> BigCount {
    if n == 0 {
        BigUint::one()
    } else {
        factorial(n) * pow2(n - 1)
    }
}
