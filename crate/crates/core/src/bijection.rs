//! Peak-labeled Dyck `n`-paths with `k` peaks ⟷ partitions of `[n]` into a
//! set of `n + 1 - k` lists.
//!
//! Forward: prepend an upstep, write the peaks as columns (label, ascent,
//! descent), rotate cyclically so the column labeled `k` is last, drop it,
//! and take partial sums of the ascent and descent rows. The complement of
//! the ascent sums gives the first entries of the lists; the complement of
//! the descent sums, differenced, gives their lengths; the ascent sums
//! themselves, permuted by the column labels, fill the remaining slots.
//!
//! Inverse: every step above is reversible except the rotation. Of the `k`
//! cyclic rotations of the rebuilt columns exactly one reads as an upstep
//! followed by a Dyck path (cycle lemma); [`inverse`] checks all of them
//! and fails loudly if that count is ever not one.

use std::fmt;

use thiserror::Error;

use crate::structures::{BlockPartition, DyckPath, PeakLabeledDyckPath};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("expected a set of lists")]
    NotSetOfLists,
    #[error("{valid} cyclic rotations give a valid path, expected exactly one")]
    CycleLemma { valid: usize },
}

/// One stage of the label / ascent / descent table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub labels: Vec<usize>,
    pub ascents: Vec<usize>,
    pub descents: Vec<usize>,
}

impl Table {
    fn rotate_left(&self, by: usize) -> Table {
        let rot = |v: &Vec<usize>| {
            let mut v = v.clone();
            v.rotate_left(by);
            v
        };
        Table {
            labels: rot(&self.labels),
            ascents: rot(&self.ascents),
            descents: rot(&self.descents),
        }
    }

    fn without_last(&self) -> Table {
        let cut = |v: &Vec<usize>| v[..v.len() - 1].to_vec();
        Table {
            labels: cut(&self.labels),
            ascents: cut(&self.ascents),
            descents: cut(&self.descents),
        }
    }

    fn partial_sums(&self) -> Table {
        Table {
            labels: self.labels.clone(),
            ascents: partial_sums(&self.ascents),
            descents: partial_sums(&self.descents),
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |name: &str, v: &[usize]| {
            let cells: Vec<String> = v.iter().map(|x| format!("{x:>3}")).collect();
            format!("{name:<9}{}", cells.join(""))
        };
        writeln!(f, "{}", row("labels", &self.labels))?;
        writeln!(f, "{}", row("ascents", &self.ascents))?;
        write!(f, "{}", row("descents", &self.descents))
    }
}

/// Every intermediate value of [`forward`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    pub initial: Table,
    pub rotated: Table,
    pub truncated: Table,
    pub summed: Table,
    pub first_entries: Vec<usize>,
    pub descent_complement: Vec<usize>,
    pub list_lengths: Vec<usize>,
    pub fill_order: Vec<usize>,
}

impl fmt::Display for BijectionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        writeln!(f, "after prepending an upstep:\n{}", self.initial)?;
        writeln!(f, "rotated (largest label last):\n{}", self.rotated)?;
        writeln!(f, "last column dropped:\n{}", self.truncated)?;
        writeln!(f, "partial sums:\n{}", self.summed)?;
        writeln!(f, "first entries: {}", join(&self.first_entries))?;
        writeln!(f, "descent complement: {}", join(&self.descent_complement))?;
        writeln!(f, "list lengths: {}", join(&self.list_lengths))?;
        write!(f, "fill order: {}", join(&self.fill_order))
    }
}

fn partial_sums(v: &[usize]) -> Vec<usize> {
    v.iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

fn differences(v: &[usize]) -> Vec<usize> {
    let mut prev = 0;
    v.iter()
        .map(|&x| {
            let d = x - prev;
            prev = x;
            d
        })
        .collect()
}

/// `[n] ∖ taken`, ascending. `taken` must be ascending.
fn complement(n: usize, taken: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(n - taken.len());
    let mut it = taken.iter().peekable();
    for v in 1..=n {
        if it.peek() == Some(&&v) {
            it.next();
        } else {
            out.push(v);
        }
    }
    out
}

pub fn forward(p: &PeakLabeledDyckPath) -> BlockPartition {
    forward_traced(p).0
}

pub fn forward_traced(p: &PeakLabeledDyckPath) -> (BlockPartition, BijectionTrace) {
    let path = p.path();
    let n = path.n();
    let k = path.peaks();
    let mut ascents = path.ascents();
    ascents[0] += 1;
    let initial = Table {
        labels: p.labels().to_vec(),
        ascents,
        descents: path.descents(),
    };
    let top = initial.labels.iter().position(|&l| l == k).expect("labels are 1..=k");
    let rotated = initial.rotate_left(top + 1);
    let truncated = rotated.without_last();
    let summed = truncated.partial_sums();

    let first_entries = complement(n, &summed.ascents);
    let descent_complement = complement(n, &summed.descents);
    let list_lengths = differences(&descent_complement);
    let fill_order: Vec<usize> = summed.labels.iter().map(|&l| summed.ascents[l - 1]).collect();

    let mut fill = fill_order.iter().copied();
    let lists: Vec<Vec<usize>> = first_entries
        .iter()
        .zip(&list_lengths)
        .map(|(&first, &len)| {
            let mut list = Vec::with_capacity(len);
            list.push(first);
            list.extend(fill.by_ref().take(len - 1));
            list
        })
        .collect();
    debug_assert!(fill.next().is_none());

    let image = BlockPartition::set_of_lists(n, lists).expect("forward image partitions [n]");
    let trace = BijectionTrace {
        initial,
        rotated,
        truncated,
        summed,
        first_entries,
        descent_complement,
        list_lengths,
        fill_order,
    };
    (image, trace)
}

/// The column table (largest label last) that `q` came from.
fn rebuild_rotated(q: &BlockPartition) -> Result<Table, BijectionError> {
    if !q.inner_ordered() || q.outer_ordered() {
        return Err(BijectionError::NotSetOfLists);
    }
    let n = q.n();
    let lists = q.blocks();
    let k = n + 1 - lists.len();

    // canonical storage already orders the lists by first entry
    let firsts: Vec<usize> = lists.iter().map(|l| l[0]).collect();
    let ascent_sums = complement(n, &firsts);
    let lengths: Vec<usize> = lists.iter().map(Vec::len).collect();
    let descent_sums = complement(n, &partial_sums(&lengths));

    let fill: Vec<usize> = lists.iter().flat_map(|l| l[1..].iter().copied()).collect();
    let mut labels: Vec<usize> = fill
        .iter()
        .map(|v| ascent_sums.binary_search(v).expect("fill values are the ascent sums") + 1)
        .collect();
    let mut ascents = differences(&ascent_sums);
    let mut descents = differences(&descent_sums);

    labels.push(k);
    ascents.push(n + 1 - ascent_sums.last().copied().unwrap_or(0));
    descents.push(n - descent_sums.last().copied().unwrap_or(0));
    Ok(Table {
        labels,
        ascents,
        descents,
    })
}

/// Reads a column table as "one upstep, then a Dyck path".
fn as_prepended_path(table: &Table) -> Option<PeakLabeledDyckPath> {
    if table.ascents[0] < 2 {
        return None;
    }
    let mut runs: Vec<(usize, usize)> = table.ascents.iter().copied().zip(table.descents.iter().copied()).collect();
    runs[0].0 -= 1;
    let path = DyckPath::new(runs).ok()?;
    PeakLabeledDyckPath::new(path, table.labels.clone()).ok()
}

/// Rotation offsets (left shifts of the rebuilt table) that give a valid
/// preimage. The cycle lemma says there is exactly one.
pub fn valid_rotations(q: &BlockPartition) -> Result<Vec<usize>, BijectionError> {
    let rotated = rebuild_rotated(q)?;
    let k = rotated.labels.len();
    Ok((0..k)
        .filter(|&s| as_prepended_path(&rotated.rotate_left(s)).is_some())
        .collect())
}

pub fn inverse(q: &BlockPartition) -> Result<PeakLabeledDyckPath, BijectionError> {
    let rotated = rebuild_rotated(q)?;
    let k = rotated.labels.len();
    let mut found = None;
    let mut valid = 0;
    for s in 0..k {
        if let Some(p) = as_prepended_path(&rotated.rotate_left(s)) {
            valid += 1;
            found = Some(p);
        }
    }
    match (valid, found) {
        (1, Some(p)) => Ok(p),
        _ => Err(BijectionError::CycleLemma { valid }),
    }
}
