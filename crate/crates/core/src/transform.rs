//! The noncrossing partition transform.
//!
//! For `a_0 = 1` the transform `b` is the unique series with
//! `Σ_k a_k (xB)^k = B`; `b_k` counts noncrossing partitions of `[k]` with
//! an `a`-structure on every block. The inverse goes the other way through
//! series reversion: `x/A(x)` is the compositional inverse of `xB(x)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::count::{binomial, catalan, narayana, pow2};
use crate::enumerate::{enumerate_family, Family, Order};
use crate::series::PowerSeries;

/// Largest `k` for which [`ncp_oracle`] enumerates by default.
pub const DEFAULT_ORACLE_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("the leading term must be a_0 = 1, found {0}")]
    LeadingTerm(BigInt),
    #[error("the sequence is empty")]
    Empty,
    #[error("oracle at k = {k} exceeds the bound {bound}")]
    BoundExceeded { k: usize, bound: usize },
    #[error("weights cover indices 0..={have}, the oracle at k = {k} needs 0..={k}")]
    TooShort { have: usize, k: usize },
    #[error("unknown table row {0:?}")]
    UnknownRow(String),
}

/// A finite integer sequence `(a_0, …, a_T)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Sequence(pub Vec<BigInt>);

impl Sequence {
    pub fn from_i64s(terms: &[i64]) -> Self {
        Sequence(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Keeps `a_0..=a_order`.
    pub fn truncated(&self, order: usize) -> Sequence {
        Sequence(self.0.iter().take(order + 1).cloned().collect())
    }

    fn check_leading(&self) -> Result<(), TransformError> {
        match self.0.first() {
            None => Err(TransformError::Empty),
            Some(a0) if a0.is_one() => Ok(()),
            Some(a0) => Err(TransformError::LeadingTerm(a0.clone())),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Forward transform through the same index as the input.
///
/// `b_n = Σ_{k=1..n} a_k [x^{n-k}] B^k`. The entry `[x^m] B^k` is filled at
/// step `n = k + m` from entries of the previous diagonal, so `b_n` only
/// ever reads `b_0..b_{n-1}`.
pub fn ncp_transform(a: &Sequence) -> Result<Sequence, TransformError> {
    a.check_leading()?;
    let order = a.len() - 1;
    let a = a.terms();
    let mut b = vec![BigInt::one()];
    // powers[k][m] = [x^m] B^k
    let mut powers: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=order {
        powers.push(Vec::new());
        let mut bn = BigInt::zero();
        for k in 1..=n {
            let m = n - k;
            let prev = &powers[k - 1];
            let mut entry = BigInt::zero();
            for i in 0..=m {
                if let Some(p) = prev.get(m - i) {
                    entry += &b[i] * p;
                }
            }
            debug_assert_eq!(powers[k].len(), m);
            if !a[k].is_zero() {
                bn += &a[k] * &entry;
            }
            powers[k].push(entry);
        }
        b.push(bn);
    }
    Ok(Sequence(b))
}

/// Inverse transform: `A(x) = x / rev(xB(x))`.
pub fn ncp_inverse(b: &Sequence) -> Result<Sequence, TransformError> {
    b.check_leading()?;
    let order = b.len() - 1;
    let xb = PowerSeries::new(b.terms().iter().cloned(), order).mul_x();
    let rev = xb.reversion().expect("xB has the form x + …");
    let rev_over_x = rev.div_x().expect("reversion has zero constant term and order ≥ 1");
    let a = rev_over_x.recip().expect("constant term is 1");
    Ok(Sequence(a.into_coeffs()))
}

/// `Σ_Π Π_{B ∈ Π} w_{|B|}` over noncrossing set partitions `Π` of `[k]`,
/// enumerated one by one.
pub fn ncp_oracle(weights: &Sequence, k: usize, bound: usize) -> Result<BigInt, TransformError> {
    if k > bound {
        return Err(TransformError::BoundExceeded { k, bound });
    }
    if k == 0 {
        return Ok(BigInt::one());
    }
    if weights.len() <= k {
        return Err(TransformError::TooShort {
            have: weights.len().saturating_sub(1),
            k,
        });
    }
    let w = weights.terms();
    let noncrossing = Family::new(Order::Set, Order::Set, true);
    Ok(enumerate_family(noncrossing, k)
        .map(|p| p.blocks().iter().fold(BigInt::one(), |acc, b| acc * &w[b.len()]))
        .sum())
}

/// Names accepted by [`table_row`], in table order.
pub const TABLE_ROWS: [&str; 8] = [
    "ones",
    "powers2",
    "catalan",
    "half_central_binomial",
    "fibonacci_shift",
    "powers2_shift",
    "little_schroeder",
    "catalan_shift",
];

/// One row of the example table: the input `a_k` for `k ≥ 1` and, where a
/// closed formula for the output is known, `b_k` for `k ≥ 1`.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub name: &'static str,
    pub input_name: &'static str,
    pub output_name: &'static str,
    pub input: fn(usize) -> BigInt,
    pub expected: Option<fn(usize) -> BigInt>,
}

impl TableRow {
    /// `(1, a_1, …, a_order)`.
    pub fn input_sequence(&self, order: usize) -> Sequence {
        Sequence(std::iter::once(BigInt::one()).chain((1..=order).map(self.input)).collect())
    }

    /// `(1, b_1, …, b_order)` from the closed formula, if there is one.
    pub fn expected_sequence(&self, order: usize) -> Option<Sequence> {
        self.expected
            .map(|f| Sequence(std::iter::once(BigInt::one()).chain((1..=order).map(f)).collect()))
    }
}

fn big(c: crate::count::BigCount) -> BigInt {
    BigInt::from(c)
}

fn ones(_: usize) -> BigInt {
    BigInt::one()
}

fn catalan_k(k: usize) -> BigInt {
    big(catalan(k))
}

fn powers2(k: usize) -> BigInt {
    big(pow2(k))
}

fn powers2_catalan(k: usize) -> BigInt {
    big(pow2(k) * binomial(2 * k, k) / (k + 1))
}

fn ternary(k: usize) -> BigInt {
    big(binomial(3 * k, k) / (2 * k + 1))
}

fn half_central_binomial(k: usize) -> BigInt {
    big(binomial(2 * k, k) / 2u32)
}

fn half_powers2_catalan(k: usize) -> BigInt {
    big(pow2(k - 1) * catalan(k))
}

/// `F_{k-1}` with `F_0 = 0`, `F_1 = F_2 = 1`.
fn fibonacci_shift(k: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::zero());
    for _ in 0..k - 1 {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn powers2_shift(k: usize) -> BigInt {
    big(pow2(k - 1))
}

/// Little Schröder numbers `1, 1, 3, 11, 45, …` (index 0 first), from
/// Dyck paths weighted by `2^{peaks-1}`.
fn little_schroeder(k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    big((1..=k).map(|j| narayana(k, j) * pow2(j - 1)).sum())
}

fn catalan_shift(k: usize) -> BigInt {
    big(catalan(k - 1))
}

pub fn table_row(name: &str) -> Result<TableRow, TransformError> {
    let row = |name, input_name, output_name, input, expected| TableRow {
        name,
        input_name,
        output_name,
        input,
        expected,
    };
    Ok(match name {
        "ones" => row("ones", "1", "C_k", ones as fn(usize) -> BigInt, Some(catalan_k as fn(usize) -> BigInt)),
        "powers2" => row("powers2", "2^k", "2^k C(2k,k)/(k+1)", powers2, Some(powers2_catalan)),
        "catalan" => row("catalan", "C_k", "C(3k,k)/(2k+1)", catalan_k, Some(ternary)),
        "half_central_binomial" => row(
            "half_central_binomial",
            "C(2k,k)/2",
            "2^(k-1) C_k",
            half_central_binomial,
            Some(half_powers2_catalan),
        ),
        "fibonacci_shift" => row("fibonacci_shift", "F_(k-1)", "triangle-free dissections", fibonacci_shift, None),
        "powers2_shift" => row("powers2_shift", "2^(k-1)", "little Schroeder", powers2_shift, None),
        "little_schroeder" => row("little_schroeder", "little Schroeder", "blobs", little_schroeder, None),
        "catalan_shift" => row("catalan_shift", "C_(k-1)", "big Schroeder", catalan_shift, None),
        other => return Err(TransformError::UnknownRow(other.to_string())),
    })
}

/// How a sequence was laid out in its source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceStyle {
    /// One term per line.
    Lines,
    /// A single line separated by commas.
    Commas,
    /// A single line separated by whitespace.
    Spaces,
    /// `index value` per line, indices consecutive from 0.
    BFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct SequenceParseError {
    pub line: usize,
    pub message: String,
}

fn parse_int(token: &str, line: usize) -> Result<BigInt, SequenceParseError> {
    token.parse().map_err(|_| SequenceParseError {
        line,
        message: format!("expected an integer, found {token:?}"),
    })
}

/// Parses a sequence in any supported layout. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_sequence(text: &str) -> Result<(Sequence, SequenceStyle), SequenceParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    match lines.as_slice() {
        [] => Err(SequenceParseError {
            line: 1,
            message: "no terms".into(),
        }),
        [(line, only)] => {
            let (tokens, style): (Vec<&str>, _) = if only.contains(',') {
                (only.split(',').map(str::trim).collect(), SequenceStyle::Commas)
            } else {
                (only.split_whitespace().collect(), SequenceStyle::Spaces)
            };
            let terms = tokens
                .iter()
                .map(|t| parse_int(t, *line))
                .collect::<Result<_, _>>()?;
            Ok((Sequence(terms), style))
        }
        many => {
            let widths: Vec<usize> = many.iter().map(|(_, l)| l.split_whitespace().count()).collect();
            if widths.iter().all(|&w| w == 1) {
                let terms = many
                    .iter()
                    .map(|(line, l)| parse_int(l, *line))
                    .collect::<Result<_, _>>()?;
                Ok((Sequence(terms), SequenceStyle::Lines))
            } else if widths.iter().all(|&w| w == 2) {
                let mut terms = Vec::with_capacity(many.len());
                for (expected_index, (line, l)) in many.iter().enumerate() {
                    let mut it = l.split_whitespace();
                    let index = parse_int(it.next().unwrap(), *line)?;
                    if index != BigInt::from(expected_index) {
                        return Err(SequenceParseError {
                            line: *line,
                            message: format!("b-file index {index} should be {expected_index}"),
                        });
                    }
                    terms.push(parse_int(it.next().unwrap(), *line)?);
                }
                Ok((Sequence(terms), SequenceStyle::BFile))
            } else {
                let line = many[widths.iter().position(|&w| w != widths[0]).unwrap_or(0)].0;
                Err(SequenceParseError {
                    line,
                    message: "expected one term per line or `index value` pairs".into(),
                })
            }
        }
    }
}

/// Renders a sequence in the given layout, newline-terminated.
pub fn format_sequence(seq: &Sequence, style: SequenceStyle) -> String {
    let terms = seq.terms().iter().map(|t| t.to_string());
    let mut out = match style {
        SequenceStyle::Lines => terms.collect::<Vec<_>>().join("\n"),
        SequenceStyle::Commas => terms.collect::<Vec<_>>().join(","),
        SequenceStyle::Spaces => terms.collect::<Vec<_>>().join(" "),
        SequenceStyle::BFile => terms
            .enumerate()
            .map(|(i, t)| format!("{i} {t}"))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(t: &[i64]) -> Sequence {
        Sequence::from_i64s(t)
    }

    #[test]
    fn forward_examples() {
        assert_eq!(ncp_transform(&seq(&[1; 7])).unwrap(), seq(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(ncp_transform(&seq(&[1, 1, 2, 6, 24, 120])).unwrap(), seq(&[1, 1, 3, 13, 69, 421]));
        assert_eq!(
            ncp_transform(&seq(&[1, 2, 4, 8, 16, 32])).unwrap(),
            seq(&[1, 2, 8, 40, 224, 1344])
        );
    }

    #[test]
    fn forward_rejects_bad_leading_term() {
        assert_eq!(
            ncp_transform(&seq(&[2, 1])).unwrap_err(),
            TransformError::LeadingTerm(BigInt::from(2))
        );
        assert_eq!(ncp_transform(&seq(&[])).unwrap_err(), TransformError::Empty);
        assert!(ncp_inverse(&seq(&[0, 1])).is_err());
    }

    #[test]
    fn single_term() {
        assert_eq!(ncp_transform(&seq(&[1])).unwrap(), seq(&[1]));
        assert_eq!(ncp_inverse(&seq(&[1])).unwrap(), seq(&[1]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ncp_inverse(&seq(&[1, 1, 2, 5, 14, 42])).unwrap(), seq(&[1; 6]));
        assert_eq!(ncp_inverse(&seq(&[1, 1, 3, 13, 69, 421])).unwrap(), seq(&[1, 1, 2, 6, 24, 120]));
        let odd = seq(&[1, 0, 0, 0, 0]);
        let a = ncp_inverse(&odd).unwrap();
        assert_eq!(ncp_transform(&a).unwrap(), odd);
    }

    #[test]
    fn oracle_examples() {
        let fact = seq(&[1, 1, 2, 6, 24]);
        assert_eq!(ncp_oracle(&fact, 2, DEFAULT_ORACLE_BOUND).unwrap(), BigInt::from(3));
        assert_eq!(ncp_oracle(&seq(&[1; 5]), 4, DEFAULT_ORACLE_BOUND).unwrap(), BigInt::from(14));
        let cat = seq(&[1, 1, 2, 5]);
        assert_eq!(ncp_oracle(&cat, 2, DEFAULT_ORACLE_BOUND).unwrap(), BigInt::from(3));
        assert_eq!(ncp_oracle(&cat, 0, DEFAULT_ORACLE_BOUND).unwrap(), BigInt::one());
    }

    #[test]
    fn oracle_errors() {
        assert_eq!(
            ncp_oracle(&seq(&[1; 20]), 13, DEFAULT_ORACLE_BOUND).unwrap_err(),
            TransformError::BoundExceeded { k: 13, bound: 12 }
        );
        assert_eq!(
            ncp_oracle(&seq(&[1, 1]), 3, DEFAULT_ORACLE_BOUND).unwrap_err(),
            TransformError::TooShort { have: 1, k: 3 }
        );
    }

    #[test]
    fn table_row_examples() {
        let cat = table_row("catalan").unwrap();
        assert_eq!(cat.expected.unwrap()(2), BigInt::from(3));
        let half = table_row("half_central_binomial").unwrap();
        assert_eq!((half.input)(3), BigInt::from(10));
        assert_eq!(half.expected.unwrap()(3), BigInt::from(20));
        let shift = table_row("powers2_shift").unwrap();
        assert!(shift.expected.is_none());
        assert_eq!(ncp_transform(&shift.input_sequence(5)).unwrap(), seq(&[1, 1, 3, 11, 45, 197]));
        assert!(matches!(table_row("nope"), Err(TransformError::UnknownRow(_))));
        for name in TABLE_ROWS {
            assert_eq!(table_row(name).unwrap().name, name);
        }
    }

    #[test]
    fn row_generators() {
        let fib = table_row("fibonacci_shift").unwrap().input_sequence(7);
        assert_eq!(fib, seq(&[1, 0, 1, 1, 2, 3, 5, 8]));
        let ls = table_row("little_schroeder").unwrap().input_sequence(6);
        assert_eq!(ls, seq(&[1, 1, 3, 11, 45, 197, 903]));
        let cs = table_row("catalan_shift").unwrap().input_sequence(5);
        assert_eq!(cs, seq(&[1, 1, 1, 2, 5, 14]));
    }

    #[test]
    fn parse_layouts() {
        let (s, style) = parse_sequence("1,1,2,5,14\n").unwrap();
        assert_eq!(s, seq(&[1, 1, 2, 5, 14]));
        assert_eq!(style, SequenceStyle::Commas);
        let (s, style) = parse_sequence("1 1 2 5").unwrap();
        assert_eq!((s, style), (seq(&[1, 1, 2, 5]), SequenceStyle::Spaces));
        let (s, style) = parse_sequence("# comment\n1\n1\n\n2\n").unwrap();
        assert_eq!((s, style), (seq(&[1, 1, 2]), SequenceStyle::Lines));
        let (s, style) = parse_sequence("0 1\n1 1\n2 3\n3 13\n").unwrap();
        assert_eq!((s, style), (seq(&[1, 1, 3, 13]), SequenceStyle::BFile));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_sequence("1,x").unwrap_err().line, 1);
        assert_eq!(parse_sequence("1 1\n2 3\n").unwrap_err().line, 1);
        assert_eq!(parse_sequence("1\n2 3\n").unwrap_err().line, 2);
        assert!(parse_sequence("\n# only comments\n").is_err());
    }

    #[test]
    fn format_mirrors_style() {
        let s = seq(&[1, 1, 2]);
        assert_eq!(format_sequence(&s, SequenceStyle::Commas), "1,1,2\n");
        assert_eq!(format_sequence(&s, SequenceStyle::Spaces), "1 1 2\n");
        assert_eq!(format_sequence(&s, SequenceStyle::Lines), "1\n1\n2\n");
        assert_eq!(format_sequence(&s, SequenceStyle::BFile), "0 1\n1 1\n2 2\n");
        for style in [SequenceStyle::Commas, SequenceStyle::Spaces, SequenceStyle::Lines, SequenceStyle::BFile] {
            assert_eq!(parse_sequence(&format_sequence(&s, style)).unwrap(), (s.clone(), style));
        }
    }
}
