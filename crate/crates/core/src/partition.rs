//! Set partitions of `{1, .., n}`: parsing and canonical formatting, the
//! noncrossing predicate, exhaustive generators, and per-partition
//! statistics.
//!
//! The canonical form orders elements ascending within a block and blocks by
//! their minimum element. Blocks are stored as bit masks over the ground
//! set, which caps the supported ground set at 64 elements; everything the
//! brute-force layers enumerate is far below that.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND_SET: usize = 64;

/// A partition of `{1, .., n}` into disjoint non-empty blocks, held in
/// canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    /// One mask per block, bit `i - 1` for element `i`, sorted by minimum
    /// element (i.e. by trailing zero count).
    blocks: Vec<u64>,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!((1..=64).contains(&n));
    u64::MAX >> (64 - n)
}

/// Mirror image of a block mask under `i -> n + 1 - i`.
pub(crate) fn reflect_mask(mask: u64, n: usize) -> u64 {
    mask.reverse_bits() >> (64 - n)
}

fn mask_min(mask: u64) -> usize {
    mask.trailing_zeros() as usize + 1
}

fn mask_max(mask: u64) -> usize {
    64 - mask.leading_zeros() as usize
}

impl SetPartition {
    /// Builds a partition from explicit blocks, validating that they are
    /// non-empty, disjoint, within range, and cover `{1, .., n}`.
    pub fn from_blocks<I, B>(n: usize, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut masks = Vec::new();
        let mut seen = 0u64;
        for block in blocks {
            let mut mask = 0u64;
            let mut any = false;
            for element in block {
                any = true;
                if element == 0 || element > n {
                    return Err(Error::ElementOutOfRange { element, n });
                }
                let bit = 1u64 << (element - 1);
                if seen & bit != 0 {
                    return Err(Error::DuplicateElement(element));
                }
                seen |= bit;
                mask |= bit;
            }
            if !any {
                return Err(Error::EmptyBlock);
            }
            masks.push(mask);
        }
        if seen != full_mask(n) {
            let missing = (!seen).trailing_zeros() as usize + 1;
            return Err(Error::MissingElement(missing));
        }
        Ok(Self::from_masks_unchecked(n, masks))
    }

    /// Wraps pre-validated block masks, restoring canonical block order.
    pub(crate) fn from_masks_unchecked(n: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable_by_key(|m| m.trailing_zeros());
        debug_assert_eq!(masks.iter().fold(0, |a, m| a | m), full_mask(n));
        debug_assert_eq!(
            masks.iter().map(|m| m.count_ones() as usize).sum::<usize>(),
            n
        );
        SetPartition { n, blocks: masks }
    }

    /// Builds a partition from a restricted growth string (letter per
    /// element, blocks numbered by first occurrence).
    pub(crate) fn from_rgs(n: usize, rgs: &[u8]) -> Self {
        debug_assert_eq!(rgs.len(), n);
        let block_count = rgs.iter().copied().max().unwrap_or(0) as usize + 1;
        let mut masks = vec![0u64; block_count];
        for (i, &letter) in rgs.iter().enumerate() {
            masks[letter as usize] |= 1 << i;
        }
        // First-occurrence numbering already orders blocks by minimum.
        SetPartition { n, blocks: masks }
    }

    /// Parses the block syntax `"1,3,4/2/5,6"`. With `expected_n` the ground
    /// set is `{1, .., expected_n}`; otherwise it is inferred from the
    /// largest element. Whitespace around tokens is ignored.
    pub fn parse(text: &str, expected_n: Option<usize>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut max_element = 0;
        for block_text in text.split('/') {
            if block_text.trim().is_empty() {
                return Err(Error::EmptyBlock);
            }
            let mut block = Vec::new();
            for token in block_text.split(',') {
                let token = token.trim();
                if token.is_empty() {
                    return Err(Error::MalformedPartition(
                        "empty element".to_string(),
                    ));
                }
                let element: usize = token
                    .parse()
                    .map_err(|_| Error::MalformedPartition(format!("bad element {token:?}")))?;
                max_element = max_element.max(element);
                block.push(element);
            }
            blocks.push(block);
        }
        let n = match expected_n {
            Some(n) => n,
            None => max_element,
        };
        if n > MAX_GROUND_SET && max_element > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(max_element.max(n)));
        }
        Self::from_blocks(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in canonical order, each as an ascending element list.
    pub fn blocks(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.blocks.iter().map(|&mask| {
            let mut elements = Vec::with_capacity(mask.count_ones() as usize);
            let mut m = mask;
            while m != 0 {
                elements.push(m.trailing_zeros() as usize + 1);
                m &= m - 1;
            }
            elements
        })
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.blocks
    }

    /// Block index (in canonical order) for each element, 0-based by element.
    pub(crate) fn owner_table(&self) -> Vec<u8> {
        let mut owner = vec![0u8; self.n];
        for (index, &mask) in self.blocks.iter().enumerate() {
            let mut m = mask;
            while m != 0 {
                owner[m.trailing_zeros() as usize] = index as u8;
                m &= m - 1;
            }
        }
        owner
    }

    /// Index of the block containing `element` (1-based element).
    pub fn block_of(&self, element: usize) -> Option<usize> {
        if element == 0 || element > self.n {
            return None;
        }
        let bit = 1u64 << (element - 1);
        self.blocks.iter().position(|&m| m & bit != 0)
    }

    /// True iff no elements `a < b < c < d` have `a, c` in one block and
    /// `b, d` in another. Linear scan: walking left to right, the arc that
    /// closes at each element must be the most recently opened one.
    pub fn is_noncrossing(&self) -> bool {
        let owner = self.owner_table();
        let mins: Vec<usize> = self.blocks.iter().map(|&m| mask_min(m)).collect();
        let maxs: Vec<usize> = self.blocks.iter().map(|&m| mask_max(m)).collect();
        let mut stack: Vec<u8> = Vec::new();
        for i in 1..=self.n {
            let b = owner[i - 1];
            if i > mins[b as usize] {
                if stack.pop() != Some(b) {
                    return false;
                }
            }
            if i < maxs[b as usize] {
                stack.push(b);
            }
        }
        debug_assert!(stack.is_empty());
        true
    }

    pub fn stats(&self) -> PartitionStats {
        let owner = self.owner_table();
        let singletons = self.blocks.iter().filter(|m| m.count_ones() == 1).count();
        let adjacencies = (0..self.n)
            .filter(|&i| owner[i] == owner[(i + 1) % self.n])
            .count();
        let mut maximal_block_count = 0;
        for &b in &self.blocks {
            let covered = self.blocks.iter().any(|&other| {
                other != b && mask_min(other) < mask_min(b) && mask_max(other) > mask_max(b)
            });
            if !covered {
                maximal_block_count += 1;
            }
        }
        PartitionStats {
            singletons,
            adjacencies,
            block_count: self.blocks.len(),
            maximal_block_count,
        }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bi, block) in self.blocks().enumerate() {
            if bi > 0 {
                f.write_str("/")?;
            }
            for (ei, element) in block.iter().enumerate() {
                if ei > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{element}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self}; n={})", self.n)
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

/// Counts attached to a single partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionStats {
    /// Blocks of size one.
    pub singletons: usize,
    /// Elements `i` sharing a block with their cyclic successor
    /// (`n` is followed by `1`; for `n = 1` this counts 1).
    pub adjacencies: usize,
    pub block_count: usize,
    /// Blocks not nested strictly inside another block's span.
    pub maximal_block_count: usize,
}

/// Streams every partition of `{1, .., n}` exactly once, in lexicographic
/// order of the restricted growth string.
pub fn enumerate_all(n: usize) -> Result<AllPartitions> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(AllPartitions {
        n,
        rgs: vec![0; n],
        maxes: vec![0; n],
        state: IterState::Fresh,
    })
}

/// Streams every noncrossing partition of `{1, .., n}` exactly once, in the
/// same order as `enumerate_all` filtered by `is_noncrossing`.
pub fn enumerate_nc(n: usize) -> Result<NcPartitions> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(NcPartitions {
        n,
        rgs: vec![0; n],
        open: Vec::new(),
        block_max: Vec::new(),
        frames: Vec::with_capacity(n),
        state: IterState::Fresh,
    })
}

#[derive(PartialEq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

pub struct AllPartitions {
    n: usize,
    rgs: Vec<u8>,
    maxes: Vec<u8>,
    state: IterState,
}

impl Iterator for AllPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                return Some(SetPartition::from_rgs(self.n, &self.rgs));
            }
            IterState::Running => {}
        }
        // Successor in lexicographic order: bump the rightmost letter that
        // can still grow (a letter may exceed the prefix maximum by one).
        let mut i = self.n;
        loop {
            if i <= 1 {
                self.state = IterState::Done;
                return None;
            }
            i -= 1;
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                for j in i + 1..self.n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[i];
                }
                return Some(SetPartition::from_rgs(self.n, &self.rgs));
            }
        }
    }
}

pub struct NcPartitions {
    n: usize,
    rgs: Vec<u8>,
    /// Blocks that may still be extended without a crossing, ascending.
    open: Vec<u8>,
    /// Current maximum element per block id; length doubles as the number
    /// of blocks created so far.
    block_max: Vec<usize>,
    frames: Vec<Frame>,
    state: IterState,
}

struct Frame {
    choice: usize,
    action: Action,
}

enum Action {
    Fresh,
    Extend { prev_max: usize, popped: Vec<u8> },
}

impl NcPartitions {
    /// Assigns the next element to candidate `choice`: indices below
    /// `open.len()` extend that open block (closing everything nested above
    /// it), the index `open.len()` starts a new block. Every candidate keeps
    /// the prefix noncrossing, so the search tree has no dead ends.
    fn apply(&mut self, choice: usize) -> bool {
        if choice > self.open.len() {
            return false;
        }
        let position = self.frames.len() + 1;
        if choice == self.open.len() {
            let id = self.block_max.len() as u8;
            self.rgs[position - 1] = id;
            self.block_max.push(position);
            self.open.push(id);
            self.frames.push(Frame {
                choice,
                action: Action::Fresh,
            });
        } else {
            let id = self.open[choice];
            let popped = self.open.split_off(choice + 1);
            let prev_max = self.block_max[id as usize];
            self.block_max[id as usize] = position;
            self.rgs[position - 1] = id;
            self.frames.push(Frame {
                choice,
                action: Action::Extend { prev_max, popped },
            });
        }
        true
    }

    fn undo(&mut self) -> usize {
        let frame = self.frames.pop().expect("undo on empty frame stack");
        match frame.action {
            Action::Fresh => {
                self.open.pop();
                self.block_max.pop();
            }
            Action::Extend { prev_max, popped } => {
                let id = *self.open.last().expect("extend frame with empty stack");
                self.block_max[id as usize] = prev_max;
                self.open.extend(popped);
            }
        }
        frame.choice
    }

    fn descend(&mut self) {
        while self.frames.len() < self.n {
            self.apply(0);
        }
    }
}

impl Iterator for NcPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                self.descend();
                return Some(SetPartition::from_rgs(self.n, &self.rgs));
            }
            IterState::Running => {}
        }
        loop {
            if self.frames.is_empty() {
                self.state = IterState::Done;
                return None;
            }
            let choice = self.undo();
            if self.apply(choice + 1) {
                self.descend();
                return Some(SetPartition::from_rgs(self.n, &self.rgs));
            }
        }
    }
}
