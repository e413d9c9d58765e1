//! Exact counting: closed formulas for the pattern sequences, brute-force
//! oracles that recount them by explicit orbit construction, rotation
//! fixed-point counts, the self-complementarity census over arbitrary
//! partitions, and the verified counting table.
//!
//! All arithmetic is checked `u128`; overflow is reported as an error, and
//! every division in a formula is asserted exact.

use crate::partition::SetPartition;
use crate::symmetry::{complement, is_self_complementary, rotate};
use crate::{enumerate_all, enumerate_nc, Error, Result};

/// Largest `n` for which a full scan of the Catalan(n) noncrossing
/// partitions is considered cheap (Catalan(14) = 2674440).
pub const NC_SCAN_BUDGET: usize = 14;

/// Largest `n` for explicit orbit construction over noncrossing partitions.
pub const ORBIT_BUDGET: usize = 12;

/// Largest `n` for which all Bell(n) partitions are enumerated
/// (Bell(10) = 115975).
pub const ALL_PARTITIONS_BUDGET: usize = 10;

fn add(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

fn mul(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// Divisions in the counting formulas always come out even; a remainder is
/// a bug, not an input error.
fn exact_div(a: u128, b: u128) -> u128 {
    assert_eq!(a % b, 0, "{a} is not divisible by {b}");
    a / b
}

pub fn binom(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut r = 1u128;
    for i in 1..=k {
        // r is binom(n-k+i-1, i-1); the product of i consecutive integers
        // is divisible by i, so the running division is exact.
        r = mul(r, (n - k + i) as u128, "binomial coefficient")?;
        r /= i as u128;
    }
    Ok(r)
}

pub fn catalan(n: usize) -> Result<u128> {
    Ok(exact_div(binom(2 * n, n)?, n as u128 + 1))
}

/// `C(k/2)` under the convention that a Catalan number with a non-integer
/// index is 0.
pub fn catalan_half(k: usize) -> Result<u128> {
    if k % 2 != 0 {
        return Ok(0);
    }
    catalan(k / 2)
}

pub fn central_binomial(n: usize) -> Result<u128> {
    binom(n, n / 2)
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> Result<u128> {
    let mut row = vec![1u128];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("rows are non-empty"));
        for &x in &row {
            let sum = add(*next.last().expect("seeded above"), x, "Bell number")?;
            next.push(sum);
        }
        row = next;
    }
    Ok(*row.last().expect("rows are non-empty"))
}

/// Euler's totient; `euler_phi(0)` is 0.
pub fn euler_phi(m: usize) -> u128 {
    let mut m = m as u128;
    let mut result = m;
    let mut p = 2u128;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Number of noncrossing partitions of `[n]` up to rotation, by the
/// Cauchy–Frobenius (Burnside) count: the identity contributes Catalan(n),
/// and the rotations of order n/i contribute φ(n/i)·binom(2i, i) through
/// their fixed points.
pub fn ncpp_formula(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let mut total = catalan(n)?;
    for i in 1..n {
        if n % i == 0 {
            let fixed = mul(euler_phi(n / i), binom(2 * i, i)?, "pattern count")?;
            total = add(total, fixed, "pattern count")?;
        }
    }
    Ok(exact_div(total, n as u128))
}

/// Number of free plane trees on `n` edges:
/// `(1/2n)·Σ_{d|n} φ(n/d)·binom(2d,d) − (C(n) − C((n−1)/2))/2`.
pub fn fpt_formula(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let mut necklaces = 0u128;
    for d in 1..=n {
        if n % d == 0 {
            let fixed = mul(euler_phi(n / d), binom(2 * d, d)?, "free plane tree count")?;
            necklaces = add(necklaces, fixed, "free plane tree count")?;
        }
    }
    let rooted_classes = exact_div(necklaces, 2 * n as u128);
    let chiral_half = exact_div(catalan(n)? - catalan_half(n - 1)?, 2);
    Ok(rooted_classes
        .checked_sub(chiral_half)
        .expect("the free-tree formula never goes negative"))
}

/// Number of bicolored plane trees on `n` edges:
/// `2·FPT(n) − C((n−1)/2)`; always equal to [`ncpp_formula`].
pub fn bicolored_tree_formula(n: usize) -> Result<u128> {
    let doubled = mul(2, fpt_formula(n)?, "bicolored tree count")?;
    Ok(doubled
        .checked_sub(catalan_half(n - 1)?)
        .expect("the bicolored-tree formula never goes negative"))
}

/// Patterns up to rotation and reflection: `(ncpp + binom(n,⌊n/2⌋))/2`.
pub fn dihedral_formula(n: usize) -> Result<u128> {
    let sum = add(ncpp_formula(n)?, central_binomial(n)?, "dihedral class count")?;
    Ok(exact_div(sum, 2))
}

/// Mirror-image pattern pairs: `(ncpp − binom(n,⌊n/2⌋))/2`.
pub fn chiral_pairs_formula(n: usize) -> Result<u128> {
    let diff = ncpp_formula(n)?
        .checked_sub(central_binomial(n)?)
        .expect("at least binom(n,n/2) patterns are reflection-fixed");
    Ok(exact_div(diff, 2))
}

fn validate_click_divisor(n: usize, d: usize) -> Result<()> {
    if d == 0 || n % d != 0 || n / d < 2 {
        return Err(Error::InvalidClickDivisor { d, n });
    }
    Ok(())
}

/// Whether `p` is fixed by rotation through `d` positions, for `d` a proper
/// divisor of `n`.
pub fn is_clickable(p: &SetPartition, d: usize) -> Result<bool> {
    validate_click_divisor(p.n(), d)?;
    Ok(rotate(p, d as i64) == *p)
}

fn check_budget(what: &'static str, n: usize, budget: usize, force: bool) -> Result<()> {
    if !force && n > budget {
        return Err(Error::BudgetExceeded { what, n, budget });
    }
    Ok(())
}

/// Counts the d-clickable noncrossing partitions of `[n]` by scanning all
/// of them; the count equals binom(2d, d).
pub fn clickable_count_brute(n: usize, d: usize, force: bool) -> Result<u128> {
    validate_click_divisor(n, d)?;
    check_budget("clickable scan", n, NC_SCAN_BUDGET, force)?;
    let mut count = 0u128;
    for p in enumerate_nc(n)? {
        if rotate(&p, d as i64) == p {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts the noncrossing partitions of `[n]` fixed by rotation through `k`
/// positions (`k` may be any integer; it is reduced mod `n`).
pub fn fixed_by_rotation_brute(n: usize, k: i64, force: bool) -> Result<u128> {
    check_budget("rotation fixed-point scan", n, NC_SCAN_BUDGET, force)?;
    let mut count = 0u128;
    for p in enumerate_nc(n)? {
        if rotate(&p, k) == p {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts self-complementary noncrossing partitions of `[n]` by scanning
/// all of them; the count equals binom(n, ⌊n/2⌋).
pub fn sc_nc_brute(n: usize, force: bool) -> Result<u128> {
    check_budget("self-complementarity scan", n, NC_SCAN_BUDGET, force)?;
    let mut count = 0u128;
    for p in enumerate_nc(n)? {
        if is_self_complementary(&p) {
            count += 1;
        }
    }
    Ok(count)
}

/// `p` is its rotation orbit's leader when no rotation compares smaller;
/// counting leaders counts orbits without materializing them.
fn is_rotation_leader(p: &SetPartition) -> bool {
    (1..p.n()).all(|k| rotate(p, k as i64).masks() >= p.masks())
}

/// Counts rotation classes of noncrossing partitions of `[n]` by explicit
/// orbit construction; the count equals [`ncpp_formula`].
pub fn ncpp_brute(n: usize, force: bool) -> Result<u128> {
    check_budget("rotation-orbit count", n, ORBIT_BUDGET, force)?;
    let mut count = 0u128;
    for p in enumerate_nc(n)? {
        if is_rotation_leader(&p) {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts dihedral classes (orbits under rotation and reflection together)
/// of noncrossing partitions of `[n]`; the count equals
/// [`dihedral_formula`].
pub fn dihedral_brute(n: usize, force: bool) -> Result<u128> {
    check_budget("dihedral-orbit count", n, ORBIT_BUDGET, force)?;
    let mut count = 0u128;
    for p in enumerate_nc(n)? {
        if !is_rotation_leader(&p) {
            continue;
        }
        let cp = complement(&p);
        if (0..p.n()).all(|k| rotate(&cp, k as i64).masks() >= p.masks()) {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts achiral rotation classes (classes mapped to themselves by the
/// complement) of noncrossing partitions of `[n]`; the count equals
/// binom(n, ⌊n/2⌋).
pub fn achiral_classes_brute(n: usize, force: bool) -> Result<u128> {
    check_budget("achiral-class count", n, ORBIT_BUDGET, force)?;
    let mut count = 0u128;
    for p in enumerate_nc(n)? {
        if !is_rotation_leader(&p) {
            continue;
        }
        let cp = complement(&p);
        if (0..p.n()).any(|k| rotate(&p, k as i64) == cp) {
            count += 1;
        }
    }
    Ok(count)
}

/// Census of self-complementarity over ALL partitions of `[n]`, crossing
/// ones included: the two counts are conjectured to always agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: usize,
    pub sc_partitions: u128,
    pub sc_rotation_classes: u128,
}

impl ConjectureReport {
    pub fn equal(&self) -> bool {
        self.sc_partitions == self.sc_rotation_classes
    }
}

/// Counts, over all Bell(n) partitions of `[n]`, the self-complementary
/// partitions and the self-complementary rotation classes.
pub fn conjecture_check(n: usize, force: bool) -> Result<ConjectureReport> {
    check_budget("full-partition census", n, ALL_PARTITIONS_BUDGET, force)?;
    let mut sc_partitions = 0u128;
    let mut sc_rotation_classes = 0u128;
    for p in enumerate_all(n)? {
        let cp = complement(&p);
        if cp == p {
            sc_partitions += 1;
        }
        if is_rotation_leader(&p) && (0..p.n()).any(|k| rotate(&p, k as i64) == cp) {
            sc_rotation_classes += 1;
        }
    }
    Ok(ConjectureReport {
        n,
        sc_partitions,
        sc_rotation_classes,
    })
}

/// One row of the counting table; all values from the closed formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    pub ncpp: u128,
    pub dihedral: u128,
    pub chiral_pairs: u128,
    pub sc_nc: u128,
    pub achiral_classes: u128,
    pub catalan: u128,
    pub bell: u128,
    pub fpt: u128,
    pub bicolored_trees: u128,
}

impl CountRow {
    /// Whether this row's orbit counts are within the range the test suite
    /// recounts by explicit orbit construction.
    pub fn brute_verified(&self) -> bool {
        self.n <= ORBIT_BUDGET
    }
}

/// Rows for n = 1..=n_max. Cross-formula agreement (`bicolored_trees =
/// ncpp`, `dihedral + chiral_pairs = ncpp`) is asserted while building.
pub fn table(n_max: usize) -> Result<Vec<CountRow>> {
    (1..=n_max)
        .map(|n| {
            let ncpp = ncpp_formula(n)?;
            let sc = central_binomial(n)?;
            let dihedral = dihedral_formula(n)?;
            let chiral_pairs = chiral_pairs_formula(n)?;
            let bicolored_trees = bicolored_tree_formula(n)?;
            assert_eq!(add(dihedral, chiral_pairs, "table row")?, ncpp);
            assert_eq!(bicolored_trees, ncpp, "tree and pattern formulas must agree");
            Ok(CountRow {
                n,
                ncpp,
                dihedral,
                chiral_pairs,
                sc_nc: sc,
                achiral_classes: sc,
                catalan: catalan(n)?,
                bell: bell(n)?,
                fpt: fpt_formula(n)?,
                bicolored_trees,
            })
        })
        .collect()
}

pub const CSV_HEADER: &str = "n,ncpp,dihedral,chiral_pairs,sc_nc,catalan,fpt";

/// The table in CSV form, one row per line under [`CSV_HEADER`].
pub fn table_csv(n_max: usize) -> Result<String> {
    use std::fmt::Write;
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in table(n_max)? {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.n, row.ncpp, row.dihedral, row.chiral_pairs, row.sc_nc, row.catalan, row.fpt
        )
        .expect("writing to a String cannot fail");
    }
    Ok(out)
}

/// Frozen output of `table_csv(22)`; consumers compare against it
/// byte-for-byte.
pub const GOLDEN_TABLE_CSV: &str = "\
n,ncpp,dihedral,chiral_pairs,sc_nc,catalan,fpt
1,1,1,0,1,1,1
2,2,2,0,2,2,1
3,3,3,0,3,5,2
4,6,6,0,6,14,3
5,10,10,0,10,42,6
6,28,24,4,20,132,14
7,63,49,14,35,429,34
8,190,130,60,70,1430,95
9,546,336,210,126,4862,280
10,1708,980,728,252,16796,854
11,5346,2904,2442,462,58786,2694
12,17428,9176,8252,924,208012,8714
13,57148,29432,27716,1716,742900,28640
14,191280,97356,93924,3432,2674440,95640
15,646363,326399,319964,6435,9694845,323396
16,2210670,1111770,1098900,12870,35357670,1105335
17,7626166,3825238,3800928,24310,129644790,3813798
18,26538292,13293456,13244836,48620,477638700,13269146
19,93013854,46553116,46460738,92378,1767263190,46509358
20,328215300,164200028,164015272,184756,6564120420,164107650
21,1165060668,582706692,582353976,352716,24466267020,582538732
22,4158330416,2079517924,2078812492,705432,91482563640,2079165208
";

/// Reference pattern counts for n = 1..=22, as `(n, rotation classes,
/// dihedral classes, chiral pairs)`: OEIS A054357, (A054357 + A001405)/2,
/// and (A054357 − A001405)/2.
pub const KNOWN_PATTERN_COUNTS: [(usize, u128, u128, u128); 22] = [
    (1, 1, 1, 0),
    (2, 2, 2, 0),
    (3, 3, 3, 0),
    (4, 6, 6, 0),
    (5, 10, 10, 0),
    (6, 28, 24, 4),
    (7, 63, 49, 14),
    (8, 190, 130, 60),
    (9, 546, 336, 210),
    (10, 1708, 980, 728),
    (11, 5346, 2904, 2442),
    (12, 17428, 9176, 8252),
    (13, 57148, 29432, 27716),
    (14, 191280, 97356, 93924),
    (15, 646363, 326399, 319964),
    (16, 2210670, 1111770, 1098900),
    (17, 7626166, 3825238, 3800928),
    (18, 26538292, 13293456, 13244836),
    (19, 93013854, 46553116, 46460738),
    (20, 328215300, 164200028, 164015272),
    (21, 1165060668, 582706692, 582353976),
    (22, 4158330416, 2079517924, 2078812492),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> SetPartition {
        text.parse().unwrap()
    }

    #[test]
    fn small_binomials_and_catalans() {
        assert_eq!(binom(0, 0).unwrap(), 1);
        assert_eq!(binom(4, 2).unwrap(), 6);
        assert_eq!(binom(5, 7).unwrap(), 0);
        assert_eq!(binom(44, 22).unwrap(), 2104098963720);
        let catalans = [1u128, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (n, &c) in catalans.iter().enumerate() {
            assert_eq!(catalan(n).unwrap(), c);
        }
        assert_eq!(central_binomial(7).unwrap(), 35);
        assert_eq!(central_binomial(6).unwrap(), 20);
        assert_eq!(catalan_half(5).unwrap(), 0);
        assert_eq!(catalan_half(4).unwrap(), 2);
        assert_eq!(catalan_half(0).unwrap(), 1);
    }

    #[test]
    fn bell_numbers() {
        let bells = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, &b) in bells.iter().enumerate() {
            assert_eq!(bell(n).unwrap(), b);
        }
    }

    #[test]
    fn totients() {
        let phis = [0u128, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (m, &phi) in phis.iter().enumerate() {
            assert_eq!(euler_phi(m), phi);
        }
    }

    #[test]
    fn catalan_parity_characterization() {
        // C(m) is odd exactly when m+1 is a power of two.
        for m in 0..=40 {
            let odd = catalan(m).unwrap() % 2 == 1;
            assert_eq!(odd, (m + 1).is_power_of_two(), "parity of C({m})");
        }
    }

    #[test]
    fn formulas_match_the_reference_counts() {
        for &(n, ncpp, dihedral, chiral) in &KNOWN_PATTERN_COUNTS {
            assert_eq!(ncpp_formula(n).unwrap(), ncpp, "ncpp({n})");
            assert_eq!(dihedral_formula(n).unwrap(), dihedral, "dihedral({n})");
            assert_eq!(chiral_pairs_formula(n).unwrap(), chiral, "chiral({n})");
        }
    }

    #[test]
    fn free_tree_counts() {
        let fpts = [1u128, 1, 2, 3, 6, 14, 34, 95, 280, 854];
        for (i, &v) in fpts.iter().enumerate() {
            assert_eq!(fpt_formula(i + 1).unwrap(), v, "fpt({})", i + 1);
        }
    }

    #[test]
    fn tree_formula_agrees_with_pattern_formula() {
        for n in 1..=40 {
            assert_eq!(
                bicolored_tree_formula(n).unwrap(),
                ncpp_formula(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn clickability() {
        assert!(is_clickable(&p("1,2,3,4"), 2).unwrap());
        assert!(is_clickable(&p("1,2/3,4"), 2).unwrap());
        assert!(!is_clickable(&p("1,2/3/4"), 2).unwrap());
        assert_eq!(
            is_clickable(&p("1,2/3/4"), 3),
            Err(Error::InvalidClickDivisor { d: 3, n: 4 })
        );
        assert_eq!(
            is_clickable(&p("1,2/3/4"), 4),
            Err(Error::InvalidClickDivisor { d: 4, n: 4 })
        );
        assert_eq!(
            is_clickable(&p("1,2/3/4"), 0),
            Err(Error::InvalidClickDivisor { d: 0, n: 4 })
        );
    }

    #[test]
    fn clickable_counts_match_binomials() {
        assert_eq!(clickable_count_brute(4, 2, false).unwrap(), 6);
        assert_eq!(clickable_count_brute(6, 3, false).unwrap(), 20);
        assert_eq!(clickable_count_brute(6, 2, false).unwrap(), 6);
        assert_eq!(clickable_count_brute(12, 1, false).unwrap(), 2);
    }

    #[test]
    fn rotation_fixed_points() {
        assert_eq!(fixed_by_rotation_brute(6, 2, false).unwrap(), 6);
        assert_eq!(fixed_by_rotation_brute(6, 4, false).unwrap(), 6);
        assert_eq!(fixed_by_rotation_brute(6, 0, false).unwrap(), 132);
        assert_eq!(fixed_by_rotation_brute(6, -1, false).unwrap(), 2);
    }

    #[test]
    fn orbit_oracles_match_formulas() {
        for n in 1..=8 {
            assert_eq!(ncpp_brute(n, false).unwrap(), ncpp_formula(n).unwrap());
            assert_eq!(
                dihedral_brute(n, false).unwrap(),
                dihedral_formula(n).unwrap()
            );
            assert_eq!(
                achiral_classes_brute(n, false).unwrap(),
                central_binomial(n).unwrap()
            );
        }
    }

    #[test]
    fn self_complementary_counts() {
        assert_eq!(sc_nc_brute(5, false).unwrap(), 10);
        assert_eq!(sc_nc_brute(6, false).unwrap(), 20);
        for n in 1..=9 {
            assert_eq!(
                sc_nc_brute(n, false).unwrap(),
                central_binomial(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn budgets_refuse_oversized_scans() {
        assert_eq!(
            ncpp_brute(13, false),
            Err(Error::BudgetExceeded {
                what: "rotation-orbit count",
                n: 13,
                budget: ORBIT_BUDGET,
            })
        );
        assert_eq!(
            sc_nc_brute(15, false),
            Err(Error::BudgetExceeded {
                what: "self-complementarity scan",
                n: 15,
                budget: NC_SCAN_BUDGET,
            })
        );
        assert_eq!(
            conjecture_check(11, false),
            Err(Error::BudgetExceeded {
                what: "full-partition census",
                n: 11,
                budget: ALL_PARTITIONS_BUDGET,
            })
        );
        assert_eq!(ncpp_brute(6, true).unwrap(), 28);
    }

    #[test]
    fn conjecture_holds_on_small_ground_sets() {
        let report = conjecture_check(2, false).unwrap();
        assert_eq!(
            (report.sc_partitions, report.sc_rotation_classes),
            (2, 2)
        );
        assert!(report.equal());
        let report = conjecture_check(3, false).unwrap();
        assert_eq!(
            (report.sc_partitions, report.sc_rotation_classes),
            (3, 3)
        );
        for n in 1..=6 {
            assert!(conjecture_check(n, false).unwrap().equal(), "n = {n}");
        }
    }

    #[test]
    fn table_reproduces_reference_rows() {
        let rows = table(22).unwrap();
        assert_eq!(rows.len(), 22);
        for (row, &(n, ncpp, dihedral, chiral)) in rows.iter().zip(&KNOWN_PATTERN_COUNTS) {
            assert_eq!(row.n, n);
            assert_eq!(row.ncpp, ncpp);
            assert_eq!(row.dihedral, dihedral);
            assert_eq!(row.chiral_pairs, chiral);
            assert_eq!(row.sc_nc, central_binomial(n).unwrap());
            assert_eq!(row.achiral_classes, row.sc_nc);
            assert_eq!(row.bicolored_trees, row.ncpp);
        }
        let nine = &rows[8];
        assert_eq!(
            (nine.ncpp, nine.dihedral, nine.chiral_pairs),
            (546, 336, 210)
        );
        assert!(nine.brute_verified());
        assert!(!rows[13].brute_verified());
        assert_eq!(rows[13].ncpp, 191280);
        assert_eq!(rows[19].ncpp, 328215300);
    }

    #[test]
    fn csv_layout() {
        let csv = table_csv(6).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(lines.nth(5), Some("6,28,24,4,20,132,14"));
        assert_eq!(csv.lines().count(), 7);
    }

    #[test]
    fn csv_matches_the_golden_table() {
        assert_eq!(table_csv(22).unwrap(), GOLDEN_TABLE_CSV);
    }

    #[test]
    fn overflow_is_detected() {
        assert_eq!(
            binom(200, 100),
            Err(Error::Overflow("binomial coefficient"))
        );
        assert!(matches!(catalan(100), Err(Error::Overflow(_))));
        assert!(matches!(bell(200), Err(Error::Overflow(_))));
    }
}
