//! Lattice paths of up and down steps; the bijection between noncrossing
//! partitions and Dyck paths, and the bijection between self-complementary
//! noncrossing partitions of `{1, .., 2m}` and balanced `m`-paths.

use std::fmt;
use std::str::FromStr;

use crate::partition::{reflect_mask, SetPartition};
use crate::symmetry::is_self_complementary;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A path of `Up`/`Down` steps, written `U`/`D`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn up_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Up).count()
    }

    pub fn down_count(&self) -> usize {
        self.len() - self.up_count()
    }

    /// Equal numbers of up and down steps.
    pub fn is_balanced(&self) -> bool {
        self.up_count() * 2 == self.len()
    }

    /// Balanced and never below the axis.
    pub fn is_dyck(&self) -> bool {
        let mut level = 0i64;
        for step in &self.steps {
            level += match step {
                Step::Up => 1,
                Step::Down => -1,
            };
            if level < 0 {
                return false;
            }
        }
        level == 0
    }

    /// Number of `UD` factors.
    pub fn peaks(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w == &[Step::Up, Step::Down])
            .count()
    }

    /// Number of down steps landing on the axis.
    pub fn returns(&self) -> usize {
        let mut level = 0i64;
        let mut count = 0;
        for step in &self.steps {
            match step {
                Step::Up => level += 1,
                Step::Down => {
                    level -= 1;
                    if level == 0 {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    /// Pairs `(down index, matching up index)` in down-step order. Errors
    /// unless the path is Dyck.
    pub fn match_steps(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_dyck() {
            return Err(Error::NotDyck);
        }
        let mut open = Vec::new();
        let mut pairs = Vec::with_capacity(self.len() / 2);
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                Step::Up => open.push(i),
                Step::Down => {
                    let up = open.pop().expect("Dyck path cannot underflow");
                    pairs.push((i, up));
                }
            }
        }
        Ok(pairs)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(match step {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self})")
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for c in s.chars() {
            steps.push(match c {
                'U' => Step::Up,
                'D' => Step::Down,
                other => return Err(Error::IllegalPathChar(other)),
            });
        }
        Ok(LatticePath { steps })
    }
}

/// Sends a Dyck path with `n` up steps to a noncrossing partition of
/// `{1, .., n}`: up steps are numbered left to right, each down step takes
/// the number of its matching up step, and every maximal run of down steps
/// becomes a block.
pub fn dyck_to_nc(path: &LatticePath) -> Result<SetPartition> {
    if path.is_empty() {
        return Err(Error::EmptyPath);
    }
    if !path.is_dyck() {
        return Err(Error::NotDyck);
    }
    let n = path.up_count();
    if n > crate::MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    let mut open: Vec<usize> = Vec::new();
    let mut up_number = 0usize;
    let mut masks: Vec<u64> = Vec::new();
    let mut in_descent = false;
    for step in path.steps() {
        match step {
            Step::Up => {
                up_number += 1;
                open.push(up_number);
                in_descent = false;
            }
            Step::Down => {
                let label = open.pop().expect("Dyck path cannot underflow");
                let bit = 1u64 << (label - 1);
                if in_descent {
                    *masks.last_mut().expect("descent continues a block") |= bit;
                } else {
                    masks.push(bit);
                }
                in_descent = true;
            }
        }
    }
    let result = SetPartition::from_masks_unchecked(n, masks);
    debug_assert!(result.is_noncrossing());
    Ok(result)
}

/// Inverse of `dyck_to_nc`: element `i` contributes its up step in order,
/// and the block of `i` contributes its run of down steps right after the
/// up step of its largest element. Errors if `p` is crossing.
pub fn nc_to_dyck(p: &SetPartition) -> Result<LatticePath> {
    if !p.is_noncrossing() {
        return Err(Error::NotNoncrossing);
    }
    let n = p.n();
    let owner = p.owner_table();
    let masks = p.masks();
    let mut steps = Vec::with_capacity(2 * n);
    for i in 1..=n {
        steps.push(Step::Up);
        let mask = masks[owner[i - 1] as usize];
        let is_block_max = (64 - mask.leading_zeros() as usize) == i;
        if is_block_max {
            for _ in 0..mask.count_ones() {
                steps.push(Step::Down);
            }
        }
    }
    Ok(LatticePath::new(steps))
}

/// Splits a balanced path at every point where the running level is zero.
/// Each piece stays strictly on one side of the axis in its interior.
fn components(path: &LatticePath) -> Vec<&[Step]> {
    let mut out = Vec::new();
    let mut level = 0i64;
    let mut start = 0;
    for (i, step) in path.steps().iter().enumerate() {
        level += match step {
            Step::Up => 1,
            Step::Down => -1,
        };
        if level == 0 {
            out.push(&path.steps()[start..=i]);
            start = i + 1;
        }
    }
    debug_assert_eq!(start, path.len());
    out
}

fn flipped(steps: &[Step]) -> impl Iterator<Item = Step> + '_ {
    steps.iter().map(|s| match s {
        Step::Up => Step::Down,
        Step::Down => Step::Up,
    })
}

/// Flags, in canonical block order, the blocks of `tau` that are maximal
/// (not nested strictly inside another block's span).
fn maximal_flags(tau: &SetPartition) -> Vec<bool> {
    let spans: Vec<(usize, usize)> = tau
        .masks()
        .iter()
        .map(|&m| {
            (
                m.trailing_zeros() as usize + 1,
                64 - m.leading_zeros() as usize,
            )
        })
        .collect();
    spans
        .iter()
        .map(|&(lo, hi)| !spans.iter().any(|&(lo2, hi2)| lo2 < lo && hi2 > hi))
        .collect()
}

/// Sends a self-complementary noncrossing partition of `{1, .., 2m}` to a
/// balanced path with `m` up steps:
///
/// 1. restrict the blocks to `{1, .., m}` to get a noncrossing partition
///    `tau`, marking the blocks `t` for which `t` together with its mirror
///    image is a single block of `p` (only maximal blocks of `tau` can be
///    marked);
/// 2. take the Dyck path of `tau`; its returns match the maximal blocks of
///    `tau` left to right;
/// 3. invert every component that ends at a marked return.
pub fn sc_to_balanced(p: &SetPartition) -> Result<LatticePath> {
    let n = p.n();
    if n % 2 != 0 {
        return Err(Error::OddGroundSet(n));
    }
    if !p.is_noncrossing() {
        return Err(Error::NotNoncrossing);
    }
    if !is_self_complementary(p) {
        return Err(Error::NotSelfComplementary);
    }
    let m = n / 2;
    let low = crate::partition::full_mask(m);
    let mut tau_masks = Vec::new();
    for &mask in p.masks() {
        let t = mask & low;
        if t != 0 {
            tau_masks.push(t);
        }
    }
    let tau = SetPartition::from_masks_unchecked(m, tau_masks);
    debug_assert!(tau.is_noncrossing());

    let maximal = maximal_flags(&tau);
    let marked: Vec<bool> = tau
        .masks()
        .iter()
        .map(|&t| {
            let joined = t | reflect_mask(t, n);
            p.masks().contains(&joined)
        })
        .collect();
    debug_assert!(marked
        .iter()
        .zip(maximal.iter())
        .all(|(&mk, &mx)| mx || !mk));

    let dyck = nc_to_dyck(&tau)?;
    let marked_maximal: Vec<bool> = marked
        .iter()
        .zip(maximal.iter())
        .filter(|&(_, &mx)| mx)
        .map(|(&mk, _)| mk)
        .collect();
    let pieces = components(&dyck);
    debug_assert_eq!(pieces.len(), marked_maximal.len());

    let mut steps = Vec::with_capacity(2 * m);
    for (piece, &flip) in pieces.iter().zip(marked_maximal.iter()) {
        if flip {
            steps.extend(flipped(piece));
        } else {
            steps.extend_from_slice(piece);
        }
    }
    Ok(LatticePath::new(steps))
}

/// Inverse of `sc_to_balanced`: components of the balanced path below the
/// axis mark the corresponding maximal blocks; a marked maximal block `t`
/// expands to the single block `t` joined with its mirror image, every
/// other block to the pair of `t` and its mirror image.
pub fn balanced_to_sc(q: &LatticePath, m: usize) -> Result<SetPartition> {
    if m == 0 || q.is_empty() {
        return Err(Error::EmptyPath);
    }
    if !q.is_balanced() || q.up_count() != m {
        return Err(Error::NotBalanced);
    }
    let n = 2 * m;
    if n > crate::MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }

    let mut marks = Vec::new();
    let mut dyck_steps = Vec::with_capacity(n);
    for piece in components(q) {
        let below = piece[0] == Step::Down;
        marks.push(below);
        if below {
            dyck_steps.extend(flipped(piece));
        } else {
            dyck_steps.extend_from_slice(piece);
        }
    }
    let dyck = LatticePath::new(dyck_steps);
    let tau = dyck_to_nc(&dyck)?;
    let maximal = maximal_flags(&tau);
    debug_assert_eq!(
        maximal.iter().filter(|&&mx| mx).count(),
        marks.len(),
        "one balanced component per maximal block"
    );

    let mut masks = Vec::new();
    let mut next_mark = marks.iter();
    for (&t, &mx) in tau.masks().iter().zip(maximal.iter()) {
        let mirrored = reflect_mask(t, n);
        if mx && *next_mark.next().expect("mark per maximal block") {
            masks.push(t | mirrored);
        } else {
            masks.push(t);
            masks.push(mirrored);
        }
    }
    let result = SetPartition::from_masks_unchecked(n, masks);
    debug_assert!(result.is_noncrossing());
    debug_assert!(is_self_complementary(&result));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{enumerate_nc, SetPartition};

    fn p(text: &str) -> SetPartition {
        text.parse().unwrap()
    }

    fn path(text: &str) -> LatticePath {
        text.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(path("UUDD").to_string(), "UUDD");
        assert_eq!(path("").to_string(), "");
        assert_eq!("UXD".parse::<LatticePath>(), Err(Error::IllegalPathChar('X')));
    }

    #[test]
    fn predicates() {
        assert!(path("UDUD").is_dyck());
        assert!(!path("DU").is_dyck());
        assert!(path("DU").is_balanced());
        assert!(!path("UUD").is_balanced());
        assert!(path("").is_dyck());
    }

    #[test]
    fn peaks_and_returns() {
        let w = path("UDUUUDUDDUUUDDUDDDUUDUDD");
        assert_eq!(w.peaks(), 7);
        assert_eq!(w.returns(), 3);
        assert_eq!(path("UUDD").peaks(), 1);
        assert_eq!(path("UUDD").returns(), 1);
    }

    #[test]
    fn match_steps_pairs_each_down_with_its_up() {
        let pairs = path("UUDD").match_steps().unwrap();
        assert_eq!(pairs, vec![(2, 1), (3, 0)]);
        assert_eq!(path("UDD").match_steps(), Err(Error::NotDyck));
    }

    #[test]
    fn dyck_to_nc_worked_example() {
        let part = dyck_to_nc(&path("UDUUUDUDDUUUDDUDDDUUDUDD")).unwrap();
        assert_eq!(part, p("1/4/3,5/7,8/2,6,9/11/10,12"));
        assert_eq!(part.stats().maximal_block_count, 3);
    }

    #[test]
    fn nc_to_dyck_inverts_worked_example() {
        let part = p("1/4/3,5/7,8/2,6,9/11/10,12");
        assert_eq!(nc_to_dyck(&part).unwrap().to_string(), "UDUUUDUDDUUUDDUDDDUUDUDD");
    }

    #[test]
    fn dyck_bijection_edge_cases() {
        assert_eq!(dyck_to_nc(&path("UD")).unwrap(), p("1"));
        assert_eq!(dyck_to_nc(&path("UUDD")).unwrap(), p("1,2"));
        assert_eq!(dyck_to_nc(&path("UDUD")).unwrap(), p("1/2"));
        assert_eq!(dyck_to_nc(&path("")), Err(Error::EmptyPath));
        assert_eq!(dyck_to_nc(&path("UDD")), Err(Error::NotDyck));
        assert_eq!(nc_to_dyck(&p("1,3/2,4")), Err(Error::NotNoncrossing));
    }

    #[test]
    fn dyck_round_trip_small_n() {
        for n in 1..=8 {
            for part in enumerate_nc(n).unwrap() {
                let w = nc_to_dyck(&part).unwrap();
                assert_eq!(dyck_to_nc(&w).unwrap(), part);
                assert_eq!(w.peaks(), part.block_count());
                assert_eq!(w.returns(), part.stats().maximal_block_count);
            }
        }
    }

    #[test]
    fn sc_to_balanced_examples() {
        assert_eq!(sc_to_balanced(&p("1/2/3/4")).unwrap().to_string(), "UDUD");
        assert_eq!(sc_to_balanced(&p("1,2,3,4")).unwrap().to_string(), "DDUU");
        assert_eq!(sc_to_balanced(&p("1,4/2,3")).unwrap().to_string(), "DUDU");
    }

    #[test]
    fn balanced_to_sc_examples() {
        assert_eq!(balanced_to_sc(&path("DUDU"), 2).unwrap(), p("1,4/2,3"));
        assert_eq!(balanced_to_sc(&path("UDUD"), 2).unwrap(), p("1/2/3/4"));
        assert_eq!(balanced_to_sc(&path("DDUU"), 2).unwrap(), p("1,2,3,4"));
    }

    #[test]
    fn sc_bijection_rejects_bad_input() {
        assert_eq!(sc_to_balanced(&p("1,2,3")), Err(Error::OddGroundSet(3)));
        assert!(sc_to_balanced(&p("1,2/3,4/5,6")).is_ok());
        assert_eq!(
            sc_to_balanced(&p("1,2/3/4")),
            Err(Error::NotSelfComplementary)
        );
        assert_eq!(balanced_to_sc(&path("UUDD"), 3), Err(Error::NotBalanced));
        assert_eq!(balanced_to_sc(&path("UDU"), 1), Err(Error::NotBalanced));
        assert_eq!(balanced_to_sc(&path(""), 0), Err(Error::EmptyPath));
    }

    #[test]
    fn sc_bijection_round_trip_small_m() {
        for m in 1..=4 {
            let n = 2 * m;
            for part in enumerate_nc(n).unwrap() {
                if !crate::is_self_complementary(&part) {
                    continue;
                }
                let q = sc_to_balanced(&part).unwrap();
                assert!(q.is_balanced());
                assert_eq!(balanced_to_sc(&q, m).unwrap(), part, "round trip via {q}");
            }
        }
    }
}
