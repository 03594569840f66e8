//! Block partitions of `[n]`, Dyck paths and the correspondence between
//! Dyck `n`-paths and noncrossing set partitions of `[n]`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("entry {value} is outside [1, {n}]")]
    OutOfRange { value: usize, n: usize },
    #[error("entry {value} appears more than once")]
    Duplicate { value: usize },
    #[error("entry {value} is missing")]
    Missing { value: usize },
    #[error("partition is crossing")]
    Crossing,
    #[error("expected a {expected}")]
    WrongShape { expected: &'static str },
    #[error("run {run} has a zero-length ascent or descent")]
    EmptyRun { run: usize },
    #[error("path dips below the axis in run {run}")]
    BelowAxis { run: usize },
    #[error("path has {ups} upsteps but {downs} downsteps")]
    Unbalanced { ups: usize, downs: usize },
    #[error("path is empty")]
    EmptyPath,
    #[error("labels must be a permutation of 1..={peaks}")]
    BadLabels { peaks: usize },
}

/// A parse failure at a byte offset of the input text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected a positive integer, found {0:?}")]
    BadNumber(String),
    #[error("empty block")]
    EmptyBlock,
    #[error("duplicate entry {0}")]
    Duplicate(usize),
    #[error("entry {value} is outside [1, {n}]")]
    OutOfRange { value: usize, n: usize },
    #[error("unexpected character {0:?}")]
    BadChar(char),
    #[error("{0}")]
    Invalid(StructureError),
}

/// Blocks over `[n]`, each a set or a list, collected as a set or a list.
///
/// Unordered aspects are stored canonically: an unordered block is sorted
/// ascending, and when the blocks are unordered they are sorted by their
/// first entry (for set blocks, the smallest element). Structural equality
/// is therefore family equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    inner_ordered: bool,
    outer_ordered: bool,
}

impl BlockPartition {
    pub fn new(
        n: usize,
        blocks: Vec<Vec<usize>>,
        inner_ordered: bool,
        outer_ordered: bool,
    ) -> Result<Self, StructureError> {
        let mut seen = vec![false; n + 1];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(StructureError::EmptyBlock { block: b });
            }
            for &value in block {
                if value == 0 || value > n {
                    return Err(StructureError::OutOfRange { value, n });
                }
                if std::mem::replace(&mut seen[value], true) {
                    return Err(StructureError::Duplicate { value });
                }
            }
        }
        if let Some(value) = (1..=n).find(|&v| !seen[v]) {
            return Err(StructureError::Missing { value });
        }
        Ok(Self::from_valid(n, blocks, inner_ordered, outer_ordered))
    }

    /// Canonicalizes blocks already known to partition `[n]`.
    pub(crate) fn from_valid(
        n: usize,
        mut blocks: Vec<Vec<usize>>,
        inner_ordered: bool,
        outer_ordered: bool,
    ) -> Self {
        if !inner_ordered {
            for block in &mut blocks {
                block.sort_unstable();
            }
        }
        if !outer_ordered {
            blocks.sort_unstable_by_key(|b| b[0]);
        }
        BlockPartition {
            n,
            blocks,
            inner_ordered,
            outer_ordered,
        }
    }

    /// A set of sets from its blocks.
    pub fn set_of_sets(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, StructureError> {
        Self::new(n, blocks, false, false)
    }

    /// A set of lists from its blocks.
    pub fn set_of_lists(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, StructureError> {
        Self::new(n, blocks, true, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn inner_ordered(&self) -> bool {
        self.inner_ordered
    }

    pub fn outer_ordered(&self) -> bool {
        self.outer_ordered
    }

    /// True iff no `a < b < c < d` have `a, c` in one block and `b, d` in
    /// another. Order flags are ignored.
    pub fn is_noncrossing(&self) -> bool {
        blocks_noncrossing(self.n, &self.blocks)
    }

    /// Forgets both orders.
    pub fn underlying_set_partition(&self) -> BlockPartition {
        Self::from_valid(self.n, self.blocks.clone(), false, false)
    }

    /// Renders blocks with entries descending, blocks ordered by their
    /// largest entry, joined by `-`. For `{3}{2,4,5}{1,6,7}{8,9}` this is
    /// `3-542-761-98`. Multi-digit entries are concatenated, so the form is
    /// only unambiguous for `n ≤ 9`.
    pub fn standard_form(&self) -> String {
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable_by(|x, y| y.cmp(x));
                b
            })
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        blocks
            .iter()
            .map(|b| b.iter().map(|e| e.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join("-")
    }
}

impl fmt::Display for BlockPartition {
    /// The `1|3,6,8|4` text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Renders a partition in the `|`/`,` text format.
pub fn format_partition(p: &BlockPartition) -> String {
    p.to_string()
}

/// Parses the `|`/`,` text format. `n` is the total number of entries; the
/// entries must be exactly `1..=n`.
pub fn parse_partition(
    text: &str,
    inner_ordered: bool,
    outer_ordered: bool,
) -> Result<BlockPartition, ParseError> {
    let text_trimmed = text.trim_end();
    let lead = text_trimmed.len() - text_trimmed.trim_start().len();
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut offset = 0;
    for block_text in text_trimmed.split('|') {
        let mut block = Vec::new();
        if block_text.trim().is_empty() {
            return Err(ParseError {
                position: offset.max(lead),
                kind: ParseErrorKind::EmptyBlock,
            });
        }
        let mut inner = offset;
        for entry in block_text.split(',') {
            let token = entry.trim();
            let pos = inner + (entry.len() - entry.trim_start().len());
            let value: usize = token.parse().ok().filter(|&v| v > 0).ok_or_else(|| ParseError {
                position: pos,
                kind: ParseErrorKind::BadNumber(token.to_string()),
            })?;
            block.push((value, pos));
            inner += entry.len() + 1;
        }
        blocks.push(block);
        offset += block_text.len() + 1;
    }
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut seen = vec![false; n + 1];
    for &(value, position) in blocks.iter().flatten() {
        if value > n {
            return Err(ParseError {
                position,
                kind: ParseErrorKind::OutOfRange { value, n },
            });
        }
        if std::mem::replace(&mut seen[value], true) {
            return Err(ParseError {
                position,
                kind: ParseErrorKind::Duplicate(value),
            });
        }
    }
    let blocks = blocks
        .into_iter()
        .map(|b| b.into_iter().map(|(v, _)| v).collect())
        .collect();
    // n entries, all distinct and in range, so they cover [n]
    Ok(BlockPartition::from_valid(n, blocks, inner_ordered, outer_ordered))
}

/// Stack scan for crossings in `O(n + Σ|B|)`.
///
/// Walking `1..=n`, a block is pushed at its smallest element and popped at
/// its largest; any other element must belong to the block on top.
pub fn blocks_noncrossing(n: usize, blocks: &[Vec<usize>]) -> bool {
    let mut owner = vec![usize::MAX; n + 1];
    let mut largest = vec![0; blocks.len()];
    for (b, block) in blocks.iter().enumerate() {
        for &e in block {
            owner[e] = b;
            largest[b] = largest[b].max(e);
        }
    }
    let mut opened = vec![false; blocks.len()];
    let mut stack = Vec::with_capacity(blocks.len());
    for e in 1..=n {
        let b = owner[e];
        if !opened[b] {
            opened[b] = true;
            stack.push(b);
        } else if stack.last() != Some(&b) {
            return false;
        }
        if largest[b] == e {
            stack.pop();
        }
    }
    true
}

/// True iff `seq` has no `i < j < l` with `seq[i] > seq[j] > seq[l]`.
pub fn avoids_321(seq: &[usize]) -> bool {
    // for each middle j: something larger before and something smaller after
    let len = seq.len();
    let mut max_before = 0;
    let mut min_after = vec![usize::MAX; len + 1];
    for i in (0..len).rev() {
        min_after[i] = min_after[i + 1].min(seq[i]);
    }
    for j in 0..len {
        if max_before > seq[j] && min_after[j + 1] < seq[j] {
            return false;
        }
        max_before = max_before.max(seq[j]);
    }
    true
}

/// A Dyck path stored as its (ascent, descent) run lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    runs: Vec<(usize, usize)>,
}

impl DyckPath {
    pub fn new(runs: Vec<(usize, usize)>) -> Result<Self, StructureError> {
        if runs.is_empty() {
            return Err(StructureError::EmptyPath);
        }
        let mut height: isize = 0;
        let (mut ups, mut downs) = (0, 0);
        for (run, &(a, d)) in runs.iter().enumerate() {
            if a == 0 || d == 0 {
                return Err(StructureError::EmptyRun { run });
            }
            height += a as isize - d as isize;
            ups += a;
            downs += d;
            if height < 0 {
                return Err(StructureError::BelowAxis { run });
            }
        }
        if ups != downs {
            return Err(StructureError::Unbalanced { ups, downs });
        }
        Ok(DyckPath { runs })
    }

    /// Builds a path from a step sequence (`true` = up).
    pub fn from_steps(steps: &[bool]) -> Result<Self, StructureError> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for (i, &up) in steps.iter().enumerate() {
            let prev_up = i > 0 && steps[i - 1];
            match (up, runs.last_mut()) {
                (true, Some((a, _))) if prev_up => *a += 1,
                (true, _) => runs.push((1, 0)),
                (false, Some((_, d))) => *d += 1,
                (false, None) => return Err(StructureError::BelowAxis { run: 0 }),
            }
        }
        Self::new(runs)
    }

    pub fn runs(&self) -> &[(usize, usize)] {
        &self.runs
    }

    pub fn ascents(&self) -> Vec<usize> {
        self.runs.iter().map(|r| r.0).collect()
    }

    pub fn descents(&self) -> Vec<usize> {
        self.runs.iter().map(|r| r.1).collect()
    }

    /// Semilength.
    pub fn n(&self) -> usize {
        self.runs.iter().map(|r| r.0).sum()
    }

    pub fn peaks(&self) -> usize {
        self.runs.len()
    }

    pub fn steps(&self) -> Vec<bool> {
        let mut steps = Vec::with_capacity(2 * self.n());
        for &(a, d) in &self.runs {
            steps.extend(std::iter::repeat_n(true, a));
            steps.extend(std::iter::repeat_n(false, d));
        }
        steps
    }
}

impl fmt::Display for DyckPath {
    /// `U`/`D` string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, d) in &self.runs {
            write!(f, "{}{}", "U".repeat(a), "D".repeat(d))?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let text = s.trim();
        let lead = s.len() - s.trim_start().len();
        let mut steps = Vec::with_capacity(text.len());
        let mut height: isize = 0;
        for (i, ch) in text.char_indices() {
            let up = match ch {
                'U' | 'u' => true,
                'D' | 'd' => false,
                other => {
                    return Err(ParseError {
                        position: lead + i,
                        kind: ParseErrorKind::BadChar(other),
                    })
                }
            };
            height += if up { 1 } else { -1 };
            if height < 0 {
                return Err(ParseError {
                    position: lead + i,
                    kind: ParseErrorKind::Invalid(StructureError::BelowAxis { run: 0 }),
                });
            }
            steps.push(up);
        }
        DyckPath::from_steps(&steps).map_err(|e| ParseError {
            position: lead + text.len(),
            kind: ParseErrorKind::Invalid(e),
        })
    }
}

/// A Dyck path whose `m` peaks carry the labels `1..=m` in some order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeakLabeledDyckPath {
    path: DyckPath,
    labels: Vec<usize>,
}

impl PeakLabeledDyckPath {
    pub fn new(path: DyckPath, labels: Vec<usize>) -> Result<Self, StructureError> {
        let peaks = path.peaks();
        let mut seen = vec![false; peaks + 1];
        let ok = labels.len() == peaks
            && labels
                .iter()
                .all(|&l| l >= 1 && l <= peaks && !std::mem::replace(&mut seen[l], true));
        if !ok {
            return Err(StructureError::BadLabels { peaks });
        }
        Ok(PeakLabeledDyckPath { path, labels })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

impl fmt::Display for PeakLabeledDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{} [{}]", self.path, labels.join(","))
    }
}

/// Number the upsteps left to right, give each downstep the number of its
/// matching upstep, and take the labels on each descent run as a block.
pub fn prodinger_to_partition(path: &DyckPath) -> BlockPartition {
    let mut open = Vec::with_capacity(path.n());
    let mut next_up = 1;
    let mut blocks = Vec::with_capacity(path.peaks());
    for &(a, d) in path.runs() {
        open.extend(next_up..next_up + a);
        next_up += a;
        let block: Vec<usize> = (0..d).map(|_| open.pop().expect("valid Dyck path")).collect();
        blocks.push(block);
    }
    BlockPartition::from_valid(path.n(), blocks, false, false)
}

/// Inverse of [`prodinger_to_partition`].
///
/// Each block becomes one descent run; runs are ordered by the blocks'
/// largest elements, and the ascent before a run climbs to that element.
pub fn prodinger_from_partition(p: &BlockPartition) -> Result<DyckPath, StructureError> {
    if p.inner_ordered() || p.outer_ordered() {
        return Err(StructureError::WrongShape {
            expected: "set of sets",
        });
    }
    if !p.is_noncrossing() {
        return Err(StructureError::Crossing);
    }
    let mut by_max: Vec<(usize, usize)> = p
        .blocks()
        .iter()
        .map(|b| (*b.iter().max().unwrap(), b.len()))
        .collect();
    by_max.sort_unstable();
    let mut climbed = 0;
    let runs = by_max
        .into_iter()
        .map(|(top, size)| {
            let ascent = top - climbed;
            climbed = top;
            (ascent, size)
        })
        .collect();
    DyckPath::new(runs)
}
