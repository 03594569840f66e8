//! Brute-force generators for the eight partition families.
//!
//! Members are produced in layers: set partitions by restricted growth
//! string, then every ordering of each block (inner lists), then every
//! ordering of the blocks (outer lists). Crossing depends only on the
//! underlying set partition, so the noncrossing filter is applied at the
//! first layer; the resulting stream is the same as filtering at the end.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::count::BigCount;
use crate::structures::{blocks_noncrossing, BlockPartition, DyckPath, PeakLabeledDyckPath};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Set,
    List,
}

/// One of the eight families: outer collection, block kind, restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Family {
    pub outer: Order,
    pub inner: Order,
    pub noncrossing: bool,
}

impl Family {
    pub const fn new(outer: Order, inner: Order, noncrossing: bool) -> Self {
        Family {
            outer,
            inner,
            noncrossing,
        }
    }

    pub fn all() -> [Family; 8] {
        let mut out = [Family::new(Order::Set, Order::Set, false); 8];
        let mut i = 0;
        for noncrossing in [false, true] {
            for outer in [Order::Set, Order::List] {
                for inner in [Order::Set, Order::List] {
                    out[i] = Family::new(outer, inner, noncrossing);
                    i += 1;
                }
            }
        }
        out
    }

    pub fn unrestricted(self) -> Family {
        Family {
            noncrossing: false,
            ..self
        }
    }

    pub fn is_list_of_lists(self) -> bool {
        self.outer == Order::List && self.inner == Order::List
    }

    /// `"ss"`, `"sl-nc"`, …: outer letter first.
    pub fn code(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = |o: Order| if o == Order::Set { 's' } else { 'l' };
        write!(f, "{}{}", letter(self.outer), letter(self.inner))?;
        if self.noncrossing {
            f.write_str("-nc")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown family {0:?}; expected ss, sl, ls or ll with optional -nc")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, UnknownFamily> {
        let (base, noncrossing) = match s.strip_suffix("-nc") {
            Some(base) => (base, true),
            None => (s, false),
        };
        let order = |c: u8| match c {
            b's' => Some(Order::Set),
            b'l' => Some(Order::List),
            _ => None,
        };
        match base.as_bytes() {
            &[o, i] => match (order(o), order(i)) {
                (Some(outer), Some(inner)) => Ok(Family::new(outer, inner, noncrossing)),
                _ => Err(UnknownFamily(s.to_string())),
            },
            _ => Err(UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("brute force for {family} at n = {n} exceeds the bound {bound}; use the recurrence or closed-form count instead")]
    Infeasible { family: String, n: usize, bound: usize },
}

/// Largest `n` at which brute-force counting is attempted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub list_of_lists: usize,
    pub other: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            list_of_lists: 8,
            other: 10,
        }
    }
}

impl Bounds {
    /// The same bound for every family.
    pub fn uniform(bound: usize) -> Self {
        Bounds {
            list_of_lists: bound,
            other: bound,
        }
    }

    pub fn limit_for(&self, family: Family) -> usize {
        if family.is_list_of_lists() {
            self.list_of_lists
        } else {
            self.other
        }
    }
}

/// Rearranges `v` into the next lexicographic permutation; `false` (and
/// `v` left sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        v.reverse();
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Permutations of `1..=m` in lexicographic order.
pub fn permutations(m: usize) -> Permutations {
    Permutations {
        current: (1..=m).collect(),
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct Permutations {
    current: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self.current.clone();
        self.done = !next_permutation(&mut self.current);
        Some(item)
    }
}

/// Set partitions of `[n]` as blocks ordered by smallest element, each
/// sorted, in lexicographic order of restricted growth strings.
pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions {
        rgs: vec![0; n],
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Vec<Vec<usize>>> {
        if self.done {
            return None;
        }
        let num_blocks = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); num_blocks];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        // a[i] may grow while a[i] <= max(a[..i])
        let mut prefix_max = Vec::with_capacity(self.rgs.len());
        let mut m = 0;
        for &a in &self.rgs {
            prefix_max.push(m);
            m = m.max(a);
        }
        match (1..self.rgs.len()).rev().find(|&i| self.rgs[i] <= prefix_max[i]) {
            Some(i) => {
                self.rgs[i] += 1;
                for a in &mut self.rgs[i + 1..] {
                    *a = 0;
                }
            }
            None => self.done = true,
        }
        Some(blocks)
    }
}

/// Every way of ordering the entries of each block, odometer style with the
/// last block fastest.
struct InnerOrders {
    blocks: Vec<Vec<usize>>,
    done: bool,
}

impl Iterator for InnerOrders {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Vec<Vec<usize>>> {
        if self.done {
            return None;
        }
        let item = self.blocks.clone();
        self.done = !self.blocks.iter_mut().rev().any(|b| next_permutation(b));
        Some(item)
    }
}

/// Every ordering of the blocks themselves.
struct OuterOrders {
    blocks: Vec<Vec<usize>>,
    order: Vec<usize>,
    done: bool,
}

impl Iterator for OuterOrders {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Vec<Vec<usize>>> {
        if self.done {
            return None;
        }
        let item = self.order.iter().map(|&i| self.blocks[i].clone()).collect();
        self.done = !next_permutation(&mut self.order);
        Some(item)
    }
}

/// Every member of `family` on `[n]`, each exactly once, in a fixed order.
pub fn enumerate_family(family: Family, n: usize) -> impl Iterator<Item = BlockPartition> {
    let inner_ordered = family.inner == Order::List;
    let outer_ordered = family.outer == Order::List;
    set_partitions(n)
        .filter(move |blocks| !family.noncrossing || blocks_noncrossing(n, blocks))
        .flat_map(move |blocks| -> Box<dyn Iterator<Item = Vec<Vec<usize>>>> {
            if inner_ordered {
                Box::new(InnerOrders { blocks, done: false })
            } else {
                Box::new(std::iter::once(blocks))
            }
        })
        .flat_map(move |blocks| -> Box<dyn Iterator<Item = Vec<Vec<usize>>>> {
            if outer_ordered {
                let order = (0..blocks.len()).collect();
                Box::new(OuterOrders {
                    blocks,
                    order,
                    done: false,
                })
            } else {
                Box::new(std::iter::once(blocks))
            }
        })
        .map(move |blocks| BlockPartition::from_valid(n, blocks, inner_ordered, outer_ordered))
}

/// Number of members of `family` on `[n]`, by walking [`enumerate_family`].
pub fn count_family_bruteforce(
    family: Family,
    n: usize,
    bounds: &Bounds,
) -> Result<BigCount, EnumerateError> {
    let bound = bounds.limit_for(family);
    if n > bound {
        return Err(EnumerateError::Infeasible {
            family: family.code(),
            n,
            bound,
        });
    }
    Ok(BigUint::from(enumerate_family(family, n).count()))
}

/// All Dyck `n`-paths, lexicographic with `U < D`.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn extend(steps: &mut Vec<bool>, ups: usize, downs: usize, n: usize, out: &mut Vec<DyckPath>) {
        if downs == n {
            out.push(DyckPath::from_steps(steps).expect("balanced by construction"));
            return;
        }
        if ups < n {
            steps.push(true);
            extend(steps, ups + 1, downs, n, out);
            steps.pop();
        }
        if downs < ups {
            steps.push(false);
            extend(steps, ups, downs + 1, n, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(&mut Vec::with_capacity(2 * n), 0, 0, n, &mut out);
    }
    out
}

/// Every Dyck `n`-path with every labeling of its peaks.
pub fn enumerate_peak_labeled(n: usize) -> impl Iterator<Item = PeakLabeledDyckPath> {
    dyck_paths(n).into_iter().flat_map(|path| {
        permutations(path.peaks())
            .map(move |labels| PeakLabeledDyckPath::new(path.clone(), labels).expect("permutation"))
    })
}
