//! Acceptance suite: one line per criterion, exits nonzero on any failure.
//!
//! Run with `cargo test -p ncpart-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ncpart::bijection;
use ncpart::count::{bell, binomial, catalan, factorial, fubini, lah, narayana, pow2};
use ncpart::enumerate::{count_family_bruteforce, enumerate_family, enumerate_peak_labeled, Bounds, Family};
use ncpart::recurrences::{
    configurations, snl_count, snl_count_slow, snl_series, term_count, term_count_refined, CountTable,
};
use ncpart::series::PowerSeries;
use ncpart::structures::{avoids_321, parse_partition, PeakLabeledDyckPath};
use ncpart::transform::{ncp_inverse, ncp_oracle, ncp_transform, table_row, Sequence, TABLE_ROWS};

type Outcome = Result<String, String>;

fn fam(code: &str) -> Family {
    code.parse().unwrap()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn brute(code: &str, n: usize) -> BigUint {
    count_family_bruteforce(fam(code), n, &Bounds::default()).unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn sets_of_noncrossing_lists() -> Outcome {
    let published = [1u64, 1, 3, 13, 69];
    for (n, &v) in published.iter().enumerate() {
        ensure(snl_count(n) == big(v), format!("u({n}) = {} != {v}", snl_count(n)))?;
    }
    for n in 1..=9 {
        let b = brute("sl-nc", n);
        ensure(b == snl_count(n), format!("brute force {b} != {} at n = {n}", snl_count(n)))?;
    }
    for n in 0..=12 {
        let slow = snl_count_slow(n, 14).unwrap();
        ensure(slow == snl_count(n), format!("slow {slow} != fast {} at n = {n}", snl_count(n)))?;
    }
    Ok("1,1,3,13,69; brute n<=9; slow=fast n<=12".into())
}

fn lists_of_noncrossing_lists() -> Outcome {
    let published = [1u64, 4, 24, 184, 1680, 17592, 206472, 2674752];
    let mut table = CountTable::new();
    for (i, &v) in published.iter().enumerate() {
        let n = i + 1;
        ensure(table.lnl(n) == big(v), format!("u({n}) = {} != {v}", table.lnl(n)))?;
    }
    for n in 1..=8 {
        let b = brute("ll-nc", n);
        ensure(b == table.lnl(n), format!("brute force {b} != {} at n = {n}", table.lnl(n)))?;
    }
    Ok("1,4,24,184,1680,17592,206472,2674752; brute n<=8".into())
}

fn equinumerosity() -> Outcome {
    for n in 1..=8 {
        let (a, b) = (brute("ls-nc", n), brute("sl", n));
        ensure(a == b, format!("ls-nc {a} != sl {b} at n = {n}"))?;
    }
    for n in 1..=30 {
        let peaks: BigUint = (1..=n).map(|k| factorial(n + 1 - k) * narayana(n, k)).sum();
        let lah_sum: BigUint = (1..=n).map(|k| lah(n, k)).sum();
        ensure(peaks == lah_sum, format!("formula sums differ at n = {n}"))?;
    }
    Ok("brute n<=8; formula n<=30".into())
}

fn bijection_roundtrips() -> Outcome {
    let example = PeakLabeledDyckPath::new("UUUDUUDDDUUDDDUUDD".parse().unwrap(), vec![3, 1, 4, 2]).unwrap();
    let image = bijection::forward(&example);
    ensure(image.to_string() == "1|3,6,8|4|5,2|7|9", format!("example maps to {image}"))?;
    let back = bijection::inverse(&parse_partition("1|3,6,8|4|5,2|7|9", true, false).unwrap()).unwrap();
    ensure(back == example, format!("example inverts to {back}"))?;

    let mut at_seven = 0;
    for n in 1..=7 {
        let mut objects = 0usize;
        for p in enumerate_peak_labeled(n) {
            objects += 1;
            let q = bijection::forward(&p);
            let again = bijection::inverse(&q).map_err(|e| format!("{p}: {e}"))?;
            ensure(again == p, format!("inverse(forward({p})) = {again}"))?;
        }
        let mut lists = 0usize;
        for q in enumerate_family(fam("sl"), n) {
            lists += 1;
            let p = bijection::inverse(&q).map_err(|e| format!("{q}: {e}"))?;
            let again = bijection::forward(&p);
            ensure(again == q, format!("forward(inverse({q})) = {again}"))?;
        }
        ensure(objects == lists, format!("{objects} paths vs {lists} sets of lists at n = {n}"))?;
        at_seven = objects;
    }
    ensure(at_seven == 37633, format!("{at_seven} objects at n = 7"))?;
    Ok("both directions n<=7, 37633 objects at n=7; worked example exact".into())
}

fn cycle_lemma_uniqueness() -> Outcome {
    let mut calls = 0usize;
    for n in 1..=7 {
        for q in enumerate_family(fam("sl"), n) {
            let valid = bijection::valid_rotations(&q).map_err(|e| e.to_string())?;
            calls += 1;
            ensure(valid.len() == 1, format!("{q}: {} valid rotations", valid.len()))?;
        }
    }
    Ok(format!("{calls} inverse reconstructions, each with exactly one valid rotation"))
}

fn random_sequence(rng: &mut ChaCha8Rng, order: usize) -> Sequence {
    let mut terms = vec![BigInt::from(1)];
    terms.extend((1..=order).map(|_| BigInt::from(rng.gen_range(-10i64..=10))));
    Sequence(terms)
}

fn transform() -> Outcome {
    for name in ["ones", "powers2", "catalan", "half_central_binomial"] {
        let row = table_row(name).unwrap();
        let b = ncp_transform(&row.input_sequence(8)).unwrap();
        // formulas evaluated here independently of the row generators
        let expected: Vec<BigInt> = (0..=8usize)
            .map(|k| {
                let v = match (name, k) {
                    (_, 0) => BigUint::from(1u32),
                    ("ones", k) => binomial(2 * k, k) / (k + 1),
                    ("powers2", k) => pow2(k) * binomial(2 * k, k) / (k + 1),
                    ("catalan", k) => binomial(3 * k, k) / (2 * k + 1),
                    (_, k) => pow2(k - 1) * catalan(k),
                };
                BigInt::from(v)
            })
            .collect();
        ensure(b.terms() == expected.as_slice(), format!("{name}: {b}"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(20_501);
    let mut inputs: Vec<Sequence> = TABLE_ROWS.iter().map(|r| table_row(r).unwrap().input_sequence(9)).collect();
    inputs.extend((0..100).map(|_| random_sequence(&mut rng, 9)));
    for a in &inputs {
        let b = ncp_transform(a).unwrap();
        for k in 0..=9 {
            let o = ncp_oracle(a, k, 9).unwrap();
            ensure(o == b.terms()[k], format!("oracle {o} != transform {} at k = {k} for {a}", b.terms()[k]))?;
        }
    }

    for _ in 0..100 {
        let a = random_sequence(&mut rng, 20);
        let back = ncp_inverse(&ncp_transform(&a).unwrap()).unwrap();
        ensure(back == a, format!("roundtrip {a} -> {back}"))?;
    }

    for k in 1..=6 {
        let count = enumerate_family(fam("sl-nc"), k)
            .filter(|p| p.blocks().iter().all(|b| avoids_321(b)))
            .count();
        let formula = binomial(3 * k, k) / (2 * k + 1);
        ensure(BigUint::from(count) == formula, format!("321-avoiding count {count} != {formula} at k = {k}"))?;
    }
    Ok(format!("4 formula rows k<=8; oracle on {} inputs k<=9; roundtrip T=20; 321 k<=6", inputs.len()))
}

fn fixed_points() -> Outcome {
    let order = 10;
    let u = snl_series(order);
    let xu = PowerSeries::new(u.mul_x().into_coeffs(), order);
    let mut sum = PowerSeries::zero(order);
    let mut power = PowerSeries::one(order);
    for k in 0..=order {
        sum = sum.add(&power.scale(&BigInt::from(factorial(k)))).unwrap();
        power = power.mul(&xu).unwrap();
    }
    ensure(sum == u, format!("sum k!(xU)^k = {sum}, U = {u}"))?;

    for n in 0..=12 {
        let generated = configurations(n).count();
        ensure(BigUint::from(generated) == term_count(n), format!("{generated} configurations vs t({n}) = {}", term_count(n)))?;
    }
    let t: Vec<BigUint> = (0..=8).map(term_count).collect();
    ensure(t == [1u64, 1, 2, 4, 8, 14, 27, 45, 82].map(big).to_vec(), format!("t = {t:?}"))?;
    let r: Vec<BigUint> = (0..=8).map(term_count_refined).collect();
    ensure(r == [1u64, 1, 2, 4, 8, 14, 26, 44, 77].map(big).to_vec(), format!("refined = {r:?}"))?;
    Ok("fixed point through x^10; configurations = t(n) n<=12; both term-count series through x^8".into())
}

fn family_sanity() -> Outcome {
    for n in 1..=8 {
        let expected = [
            ("ss", bell(n)),
            ("ss-nc", catalan(n)),
            ("sl", (1..=n).map(|k| lah(n, k)).sum()),
            ("ls", fubini(n)),
            ("ll", factorial(n) * pow2(n - 1)),
        ];
        for (code, want) in expected {
            let got = brute(code, n);
            ensure(got == want, format!("{code} at n = {n}: {got} != {want}"))?;
        }
    }
    for f in Family::all().into_iter().filter(|f| f.noncrossing) {
        for n in 1..=3 {
            let (a, b) = (
                count_family_bruteforce(f, n, &Bounds::default()).unwrap(),
                count_family_bruteforce(f.unrestricted(), n, &Bounds::default()).unwrap(),
            );
            ensure(a == b, format!("{f} at n = {n}: {a} != {b}"))?;
        }
    }
    let gap = brute("ll", 4) - brute("ll-nc", 4);
    ensure(gap == big(8), format!("ll gap at n = 4 is {gap}"))?;
    Ok("Bell, Catalan, sum L, Fubini, n!2^(n-1) n<=8; restricted=unrestricted n<=3; gap 192-184=8".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("sets of noncrossing lists", sets_of_noncrossing_lists),
        ("lists of noncrossing lists", lists_of_noncrossing_lists),
        ("equinumerosity", equinumerosity),
        ("bijection roundtrips", bijection_roundtrips),
        ("cycle-lemma uniqueness", cycle_lemma_uniqueness),
        ("transform", transform),
        ("fixed points and term counts", fixed_points),
        ("family sanity", family_sanity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name} ({secs:.2}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name} ({secs:.2}s): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
