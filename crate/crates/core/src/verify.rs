//! Cross-validation checks: every fast path against its brute-force or
//! independent counterpart, plus the published reference values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bijection;
use crate::count::{binomial, BigCount};
use crate::enumerate::{count_family_bruteforce, enumerate_family, enumerate_peak_labeled, Bounds, Family};
use crate::recurrences::{
    configurations, snl_count_slow, term_count, term_count_from_partitions, term_count_gf,
    term_count_refined, CountTable, DEFAULT_SLOW_BOUND,
};
use crate::transform::{ncp_inverse, ncp_oracle, ncp_transform, table_row, Sequence, TABLE_ROWS};

/// A vendored reference sequence: `(n, value)` pairs, starting at `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reference {
    pub offset: usize,
    pub values: Vec<BigCount>,
}

fn load_reference(text: &str) -> Reference {
    let mut pairs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (n, v) = l.split_once(char::is_whitespace).expect("fixture line is `n value`");
            (n.parse::<usize>().unwrap(), v.trim().parse::<BigCount>().unwrap())
        });
    let (offset, first) = pairs.next().expect("fixture is nonempty");
    let mut values = vec![first];
    for (n, v) in pairs {
        assert_eq!(n, offset + values.len(), "fixture indices are consecutive");
        values.push(v);
    }
    Reference { offset, values }
}

/// Published `ll-nc` counts for `n = 1..=8`.
pub fn lnl_published() -> Reference {
    load_reference(include_str!("../fixtures/lnl.txt"))
}

/// Published `sl-nc` counts for `n = 0..=4`.
pub fn snl_published() -> Reference {
    load_reference(include_str!("../fixtures/snl.txt"))
}

/// Published term counts `t(0..=8)`.
pub fn term_counts_published() -> Reference {
    load_reference(include_str!("../fixtures/term_counts.txt"))
}

/// Published merged term counts for `n = 0..=8`.
pub fn term_counts_merged_published() -> Reference {
    load_reference(include_str!("../fixtures/term_counts_merged.txt"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Counts,
    Bijection,
    Transform,
    TermCounts,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "counts" => Ok(Suite::Counts),
            "bijection" => Ok(Suite::Bijection),
            "transform" => Ok(Suite::Transform),
            "termcounts" => Ok(Suite::TermCounts),
            other => Err(format!(
                "unknown suite {other:?}; expected all, counts, bijection, transform or termcounts"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{}] {}: {}", self.suite, self.name, self.detail)
    }
}

fn check(suite: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        suite,
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Runs one suite (or all of them, in a fixed order).
pub fn run_suite(suite: Suite, max_n: usize, bounds: &Bounds) -> Vec<CheckResult> {
    match suite {
        Suite::All => {
            let mut out = counts(max_n, bounds);
            out.extend(bijections(max_n));
            out.extend(transforms(max_n));
            out.extend(term_counts(max_n));
            out
        }
        Suite::Counts => counts(max_n, bounds),
        Suite::Bijection => bijections(max_n),
        Suite::Transform => transforms(max_n),
        Suite::TermCounts => term_counts(max_n),
    }
}

/// Brute force against closed forms and recurrences for every family.
pub fn counts(max_n: usize, bounds: &Bounds) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut table = CountTable::new();
    for family in Family::all() {
        let top = max_n.min(bounds.limit_for(family));
        let mut brute = Vec::new();
        let mut fast = Vec::new();
        for n in 1..=top {
            brute.push(count_family_bruteforce(family, n, bounds).expect("within bounds"));
            fast.push(table.closed_count(family, n));
        }
        out.push(check(
            "counts",
            format!("{family} brute force = closed form, n <= {top}"),
            brute == fast,
            format!("brute {} / closed {}", join(&brute), join(&fast)),
        ));
    }

    let top = max_n.min(DEFAULT_SLOW_BOUND);
    let slow: Vec<BigCount> = (0..=top).map(|n| snl_count_slow(n, DEFAULT_SLOW_BOUND).unwrap()).collect();
    let fast: Vec<BigCount> = (0..=top).map(|n| table.snl(n)).collect();
    out.push(check(
        "counts",
        format!("sl-nc composition recurrence = partition recurrence, n <= {top}"),
        slow == fast,
        join(&fast),
    ));

    let published = snl_published();
    let range = published.offset..published.offset + published.values.len();
    let snl: Vec<BigCount> = range.clone().map(|n| table.snl(n)).collect();
    out.push(check(
        "counts",
        format!("sl-nc published values n = {}..{}", range.start, range.end - 1),
        snl == published.values,
        join(&snl),
    ));

    let published = lnl_published();
    let range = published.offset..published.offset + published.values.len();
    let lnl: Vec<BigCount> = range.clone().map(|n| table.lnl(n)).collect();
    out.push(check(
        "counts",
        format!("ll-nc published values n = {}..{}", range.start, range.end - 1),
        lnl == published.values,
        join(&lnl),
    ));

    let top = max_n.clamp(12, 20);
    let recurrence: Vec<BigCount> = (1..=top).map(|n| table.lnl(n)).collect();
    let composed: Vec<BigCount> = (1..=top).map(|n| table.lnl_composed(n)).collect();
    out.push(check(
        "counts",
        format!("ll-nc configuration recurrence = composition route, n <= {top}"),
        recurrence == composed,
        join(&composed),
    ));

    let sl: Family = "sl".parse().unwrap();
    let ls_nc: Family = "ls-nc".parse().unwrap();
    let equal = (1..=30).all(|n| table.closed_count(ls_nc, n) == table.closed_count(sl, n));
    out.push(check(
        "counts",
        "sum (n+1-k)! N(n,k) = sum L(n,k), n <= 30",
        equal,
        "formula-level equinumerosity",
    ));
    out
}

/// Exhaustive roundtrips of the peak-labeled Dyck path bijection.
pub fn bijections(max_n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let example = crate::structures::PeakLabeledDyckPath::new(
        "UUUDUUDDDUUDDDUUDD".parse().unwrap(),
        vec![3, 1, 4, 2],
    )
    .unwrap();
    let image = bijection::forward(&example);
    let back = bijection::inverse(&image);
    out.push(check(
        "bijection",
        "worked example",
        image.to_string() == "1|3,6,8|4|5,2|7|9" && back.as_ref() == Ok(&example),
        format!("{example} -> {image}"),
    ));

    let mut counts = Vec::new();
    let mut all_ok = true;
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let mut objects = 0usize;
        for p in enumerate_peak_labeled(n) {
            objects += 1;
            let q = bijection::forward(&p);
            let ok = q.num_blocks() == n + 1 - p.path().peaks() && bijection::inverse(&q).as_ref() == Ok(&p);
            if !ok {
                all_ok = false;
                failures.push(p.to_string());
            }
        }
        let sl: Family = "sl".parse().unwrap();
        let mut images = 0usize;
        for q in enumerate_family(sl, n) {
            images += 1;
            match bijection::inverse(&q) {
                Ok(p) if bijection::forward(&p) == q => {}
                _ => {
                    all_ok = false;
                    failures.push(q.to_string());
                }
            }
        }
        all_ok &= images == objects;
        counts.push(objects);
    }
    failures.truncate(5);
    out.push(check(
        "bijection",
        format!("inverse(forward(p)) = p and forward(inverse(q)) = q, n <= {max_n}"),
        all_ok,
        if failures.is_empty() {
            format!("object counts {}", join(&counts))
        } else {
            format!("first failures: {}", failures.join("; "))
        },
    ));
    out
}

fn random_sequence(rng: &mut ChaCha8Rng, order: usize) -> Sequence {
    let mut terms = vec![BigInt::from(1)];
    terms.extend((1..=order).map(|_| BigInt::from(rng.gen_range(-5i64..=9))));
    Sequence(terms)
}

/// Transform against formulas, the enumeration oracle, and its inverse.
pub fn transforms(max_n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let oracle_top = max_n.min(9);
    for name in TABLE_ROWS {
        let row = table_row(name).unwrap();
        let a = row.input_sequence(max_n);
        let b = ncp_transform(&a).unwrap();
        if let Some(expected) = row.expected_sequence(max_n) {
            out.push(check(
                "transform",
                format!("{name}: {} -> {} through k = {max_n}", row.input_name, row.output_name),
                b == expected,
                b.to_string(),
            ));
        } else {
            out.push(check(
                "transform",
                format!("{name}: {} -> {} (NON-INDEPENDENT, oracle only)", row.input_name, row.output_name),
                true,
                b.to_string(),
            ));
        }
        let oracle: Vec<BigInt> = (0..=oracle_top).map(|k| ncp_oracle(&a, k, oracle_top).unwrap()).collect();
        out.push(check(
            "transform",
            format!("{name}: transform = oracle through k = {oracle_top}"),
            oracle == b.terms()[..=oracle_top],
            join(&oracle),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x6e63_7072);
    let mut oracle_ok = true;
    let mut roundtrip_ok = true;
    for _ in 0..100 {
        let a = random_sequence(&mut rng, oracle_top);
        let b = ncp_transform(&a).unwrap();
        oracle_ok &= (0..=oracle_top).all(|k| ncp_oracle(&a, k, oracle_top).unwrap() == b.terms()[k]);
        let long = random_sequence(&mut rng, 20);
        roundtrip_ok &= ncp_inverse(&ncp_transform(&long).unwrap()).unwrap() == long;
    }
    out.push(check(
        "transform",
        format!("100 random sequences: transform = oracle through k = {oracle_top}"),
        oracle_ok,
        "seeded",
    ));
    out.push(check(
        "transform",
        "100 random sequences: inverse(transform(a)) = a through T = 20",
        roundtrip_ok,
        "seeded",
    ));

    // partitions of [k] into noncrossing lists, each list 321-avoiding
    let top = max_n.min(6);
    let sl_nc: Family = "sl-nc".parse().unwrap();
    let brute: Vec<BigCount> = (1..=top)
        .map(|k| {
            BigCount::from(
                enumerate_family(sl_nc, k)
                    .filter(|p| p.blocks().iter().all(|b| crate::structures::avoids_321(b)))
                    .count(),
            )
        })
        .collect();
    let formula: Vec<BigCount> = (1..=top).map(|k| binomial(3 * k, k) / (2 * k + 1)).collect();
    out.push(check(
        "transform",
        format!("noncrossing 321-avoiding lists = C(3k,k)/(2k+1), k <= {top}"),
        brute == formula,
        join(&brute),
    ));
    out
}

/// Term counts three ways: product formula, partition sum, and the number
/// of configurations actually generated.
pub fn term_counts(max_n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let gf = term_count_gf(max_n);
    let via_gf: Vec<BigInt> = gf.coeffs().to_vec();
    let via_partitions: Vec<BigInt> = (0..=max_n).map(|n| BigInt::from(term_count_from_partitions(n))).collect();
    let generated: Vec<BigInt> = (0..=max_n).map(|n| BigInt::from(configurations(n).count())).collect();
    out.push(check(
        "termcounts",
        format!("product formula = partition sum = configurations generated, n <= {max_n}"),
        via_gf == via_partitions && via_partitions == generated,
        join(&generated),
    ));
    let top = max_n.min(8);
    let t: Vec<BigCount> = (0..=top).map(term_count).collect();
    out.push(check(
        "termcounts",
        format!("published term counts through x^{top}"),
        t[..] == term_counts_published().values[..=top],
        join(&t),
    ));
    let r: Vec<BigCount> = (0..=top).map(term_count_refined).collect();
    out.push(check(
        "termcounts",
        format!("published merged term counts through x^{top}"),
        r[..] == term_counts_merged_published().values[..=top],
        join(&r),
    ));
    out
}
