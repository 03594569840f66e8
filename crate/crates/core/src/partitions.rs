//! Integer partitions in frequency-of-parts form and weak compositions.

use std::fmt;

/// An integer partition `1^{p_1} 2^{p_2} … n^{p_n}` of `n`.
///
/// `freq[i - 1]` is the multiplicity of part `i`, so `freq.len() == n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerPartitionFreq {
    n: usize,
    freq: Vec<usize>,
}

impl IntegerPartitionFreq {
    /// Builds a partition from its parts in any order. `n` is their sum.
    pub fn from_parts(parts: &[usize]) -> Option<Self> {
        let n: usize = parts.iter().sum();
        let mut freq = vec![0; n];
        for &part in parts {
            if part == 0 {
                return None;
            }
            freq[part - 1] += 1;
        }
        Some(IntegerPartitionFreq { n, freq })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Multiplicities `(p_1, …, p_n)`.
    pub fn freq(&self) -> &[usize] {
        &self.freq
    }

    /// Multiplicity of part size `part` (1-based).
    pub fn multiplicity(&self, part: usize) -> usize {
        if part == 0 || part > self.n {
            0
        } else {
            self.freq[part - 1]
        }
    }

    /// Number of parts `k = Σ p_i`.
    pub fn part_count(&self) -> usize {
        self.freq.iter().sum()
    }

    /// Parts in nonincreasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.part_count());
        for (i, &p) in self.freq.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, p));
        }
        parts
    }
}

impl fmt::Display for IntegerPartitionFreq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order of their
/// nonincreasing part lists: `(n), (n-1,1), (n-2,2), (n-2,1,1), …, (1,…,1)`.
///
/// `n = 0` yields the single empty partition.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        parts: if n == 0 { Vec::new() } else { vec![n] },
        done: false,
    }
}

/// Iterator returned by [`partitions_of`].
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<usize>,
    done: bool,
}

impl Partitions {
    fn advance(&mut self) {
        let Some(i) = self.parts.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return;
        };
        let mut remainder: usize = self.parts[i..].iter().sum();
        let part = self.parts[i] - 1;
        self.parts.truncate(i);
        while remainder > 0 {
            let next = part.min(remainder);
            self.parts.push(next);
            remainder -= next;
        }
        debug_assert!(self.parts.windows(2).all(|w| w[0] >= w[1]));
    }
}

impl Iterator for Partitions {
    type Item = IntegerPartitionFreq;

    fn next(&mut self) -> Option<IntegerPartitionFreq> {
        if self.done {
            return None;
        }
        let item = IntegerPartitionFreq::from_parts(&self.parts).unwrap();
        self.advance();
        Some(item)
    }
}

/// A weak composition: `k` nonnegative parts summing to `total`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakComposition {
    pub total: usize,
    pub parts: Vec<usize>,
}

/// All weak compositions of `total` into `k ≥ 1` parts, lexicographic.
///
/// `k = 0` yields nothing unless `total = 0`, in which case it yields the
/// empty composition.
pub fn weak_compositions(total: usize, k: usize) -> WeakCompositions {
    let mut parts = vec![0; k];
    if let Some(last) = parts.last_mut() {
        *last = total;
    }
    WeakCompositions {
        total,
        parts,
        done: k == 0 && total > 0,
    }
}

/// Iterator returned by [`weak_compositions`].
#[derive(Debug, Clone)]
pub struct WeakCompositions {
    total: usize,
    parts: Vec<usize>,
    done: bool,
}

impl Iterator for WeakCompositions {
    type Item = WeakComposition;

    fn next(&mut self) -> Option<WeakComposition> {
        if self.done {
            return None;
        }
        let item = WeakComposition {
            total: self.total,
            parts: self.parts.clone(),
        };
        let k = self.parts.len();
        // bump the rightmost slot whose prefix sum leaves room, reset the
        // slots after it and put the remainder in the last slot
        let mut prefix: Vec<usize> = self.parts.iter().scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        }).collect();
        prefix.pop();
        match prefix.iter().rposition(|&s| s < self.total) {
            Some(i) => {
                self.parts[i] += 1;
                for p in &mut self.parts[i + 1..] {
                    *p = 0;
                }
                let used: usize = self.parts[..=i].iter().sum();
                self.parts[k - 1] = self.total - used;
            }
            None => self.done = true,
        }
        Some(item)
    }
}
