//! The rotation, complement, Kreweras-complement, and transpose operators,
//! rotation orbits, and the classification of achiral classes.
//!
//! Conventions, pinned by exhaustive identity checks:
//!
//! - `rotate` sends `i` to `i + k (mod n)`;
//! - `complement` sends `i` to `n + 1 - i`;
//! - `kreweras` is oriented so that applying it twice rotates by `-1`;
//! - `transpose` is `complement` after `kreweras`, an involution.

use std::fmt;

use crate::partition::{full_mask, reflect_mask, SetPartition};
use crate::{enumerate_nc, Error, Result};

/// Relabels `i -> i + k (mod n)`; `k` may be negative.
pub fn rotate(p: &SetPartition, k: i64) -> SetPartition {
    let n = p.n();
    let k = k.rem_euclid(n as i64) as usize;
    if k == 0 {
        return p.clone();
    }
    let full = full_mask(n);
    let masks = p
        .masks()
        .iter()
        .map(|&m| ((m << k) | (m >> (n - k))) & full)
        .collect();
    SetPartition::from_masks_unchecked(n, masks)
}

/// Relabels `i -> n + 1 - i`.
pub fn complement(p: &SetPartition) -> SetPartition {
    let n = p.n();
    let masks = p.masks().iter().map(|&m| reflect_mask(m, n)).collect();
    SetPartition::from_masks_unchecked(n, masks)
}

pub fn is_self_complementary(p: &SetPartition) -> bool {
    complement(p) == *p
}

/// Kreweras complement: the coarsest partition of the gaps (gap `i` sits
/// between `i` and `i + 1`, gap `n` between `n` and `1`) whose union with
/// `p` is noncrossing when the two are interleaved around a circle.
///
/// Computed through the cycle form: with `s(i)` the next element of `i`'s
/// block in increasing cyclic order, the result's blocks are the cycles of
/// `i -> s^{-1}(i mod n + 1)`. Errors if `p` is crossing.
pub fn kreweras(p: &SetPartition) -> Result<SetPartition> {
    if !p.is_noncrossing() {
        return Err(Error::NotNoncrossing);
    }
    let n = p.n();
    // prev = s^{-1}: the previous element of the block, cyclically.
    let mut prev = vec![0usize; n + 1];
    for block in p.blocks() {
        for w in block.windows(2) {
            prev[w[1]] = w[0];
        }
        prev[block[0]] = *block.last().expect("blocks are non-empty");
    }
    let mut seen = 0u64;
    let mut masks = Vec::with_capacity(n + 1 - p.block_count());
    for start in 1..=n {
        if seen & (1 << (start - 1)) != 0 {
            continue;
        }
        let mut mask = 0u64;
        let mut i = start;
        loop {
            mask |= 1 << (i - 1);
            i = prev[i % n + 1];
            if i == start {
                break;
            }
        }
        seen |= mask;
        masks.push(mask);
    }
    let result = SetPartition::from_masks_unchecked(n, masks);
    debug_assert!(result.is_noncrossing());
    Ok(result)
}

/// Transpose: complement of the Kreweras complement; an involution on
/// noncrossing partitions. Errors if `p` is crossing.
pub fn transpose(p: &SetPartition) -> Result<SetPartition> {
    Ok(complement(&kreweras(p)?))
}

/// Least `i >= 1` with `complement(p) = rotate(p, i)`. Errors if there is
/// none, i.e. if the rotation class of `p` is not achiral.
pub fn complement_order(p: &SetPartition) -> Result<usize> {
    let target = complement(p);
    let mut q = p.clone();
    for i in 1..=p.n() {
        q = rotate(&q, 1);
        if q == target {
            return Ok(i);
        }
    }
    Err(Error::NotAchiral)
}

/// Parity of a complement order or orbit size; `NotApplicable` marks
/// classes that are not achiral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    NotApplicable,
}

impl Parity {
    fn of(value: usize) -> Parity {
        if value % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::NotApplicable => "not-applicable",
        })
    }
}

/// A rotation class: the orbit of a partition under `rotate(., 1)`.
///
/// The representative is the member whose formatted string is
/// lexicographically least, and `members[i] = rotate(representative, i)`.
/// For achiral classes of even size the complement-order parity is shared
/// by every member; for odd sizes the representative's parity is recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationClass {
    representative: SetPartition,
    members: Vec<SetPartition>,
    achiral: bool,
    sc_members: Vec<usize>,
    complement_order_parity: Parity,
}

impl RotationClass {
    pub fn representative(&self) -> &SetPartition {
        &self.representative
    }

    pub fn orbit_size(&self) -> usize {
        self.members.len()
    }

    /// Orbit members: `members()[i] = rotate(representative, i)`.
    pub fn members(&self) -> &[SetPartition] {
        &self.members
    }

    /// True iff the orbit contains the complement of its members.
    pub fn achiral(&self) -> bool {
        self.achiral
    }

    /// Indices `i` with `members()[i]` self-complementary.
    pub fn sc_members(&self) -> &[usize] {
        &self.sc_members
    }

    pub fn sc_count(&self) -> usize {
        self.sc_members.len()
    }

    pub fn complement_order_parity(&self) -> Parity {
        self.complement_order_parity
    }
}

/// Builds the rotation class of `p`.
pub fn rotation_orbit(p: &SetPartition) -> RotationClass {
    let mut orbit = vec![p.clone()];
    let mut q = rotate(p, 1);
    while q != *p {
        orbit.push(q.clone());
        q = rotate(&q, 1);
    }
    let size = orbit.len();
    debug_assert_eq!(p.n() % size, 0);

    let rep_index = (0..size)
        .min_by_key(|&i| orbit[i].to_string())
        .expect("orbit is non-empty");
    // Reorder so members[i] = rotate(representative, i).
    let members: Vec<SetPartition> = (0..size)
        .map(|i| orbit[(rep_index + i) % size].clone())
        .collect();
    let representative = members[0].clone();

    let complement_of_rep = complement(&representative);
    let achiral = members.contains(&complement_of_rep);
    let sc_members: Vec<usize> = (0..size)
        .filter(|&i| is_self_complementary(&members[i]))
        .collect();
    let complement_order_parity = if achiral {
        Parity::of(complement_order(&representative).expect("achiral class has a complement order"))
    } else {
        Parity::NotApplicable
    };
    debug_assert!(achiral || sc_members.is_empty());
    RotationClass {
        representative,
        members,
        achiral,
        sc_members,
        complement_order_parity,
    }
}

/// The trichotomy data of an achiral rotation class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AchiralClassification {
    pub orbit_size_parity: Parity,
    pub complement_order_parity: Parity,
    pub sc_count: usize,
}

/// Classifies an achiral class: odd orbits carry exactly one
/// self-complementary member, even orbits carry two when the shared
/// complement-order parity is even and none when it is odd. Errors on
/// classes that are not achiral.
pub fn classify_achiral(class: &RotationClass) -> Result<AchiralClassification> {
    if !class.achiral() {
        return Err(Error::NotAchiral);
    }
    Ok(AchiralClassification {
        orbit_size_parity: Parity::of(class.orbit_size()),
        complement_order_parity: class.complement_order_parity(),
        sc_count: class.sc_count(),
    })
}

/// One verified operator identity: how many noncrossing partitions were
/// checked and how many violated it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

/// Checks the operator algebra on every noncrossing partition of
/// `{1, .., n}`: with `R` rotation by one, `C` the complement, `H` the
/// Kreweras complement, and `T` the transpose, verifies
/// `H^2 = R^-1`, `T^2 = I`, `T = C H`, `T R = R^-1 T`, `C T = T R C`,
/// `C R = R^-1 C`, `H^{2n} = I`, and `C H C = H^-1`.
pub fn verify_operator_identities(n: usize) -> Result<IdentityReport> {
    const NAMES: [&str; 8] = [
        "H^2 = R^-1",
        "T^2 = I",
        "T = C H",
        "T R = R^-1 T",
        "C T = T R C",
        "C R = R^-1 C",
        "H^(2n) = I",
        "C H C = H^-1",
    ];
    let mut failures = [0u64; 8];
    let mut cases = 0u64;
    for p in enumerate_nc(n)? {
        cases += 1;
        let h = kreweras(&p)?;
        let t = complement(&h);

        let mut fail = [false; 8];
        fail[0] = kreweras(&h)? != rotate(&p, -1);
        fail[1] = complement(&kreweras(&t)?) != p;
        fail[2] = transpose(&p)? != t;
        fail[3] = transpose(&rotate(&p, 1))? != rotate(&t, -1);
        fail[4] = complement(&t) != transpose(&rotate(&complement(&p), 1))?;
        fail[5] = complement(&rotate(&p, 1)) != rotate(&complement(&p), -1);
        fail[6] = {
            let mut q = p.clone();
            for _ in 0..2 * n {
                q = kreweras(&q)?;
            }
            q != p
        };
        // H^-1 = R o H, since R = H^-2 commutes with H.
        fail[7] = complement(&kreweras(&complement(&p))?) != rotate(&h, 1);

        for (slot, &failed) in failures.iter_mut().zip(fail.iter()) {
            if failed {
                *slot += 1;
            }
        }
    }
    let checks = NAMES
        .iter()
        .zip(failures.iter())
        .map(|(&name, &failures)| IdentityCheck {
            name,
            cases,
            failures,
        })
        .collect();
    Ok(IdentityReport { n, checks })
}
