//! Verification suites behind `noncross verify`: each prints one line per
//! check and a final `result:` line, and reports failure via [`Failure`].

use std::collections::BTreeSet;

use noncross::{
    achiral_classes_brute, balanced_to_sc, binom, canonical_code, catalan, central_binomial,
    classify_achiral, clickable_count_brute, enumerate_nc, enumerate_tree_classes,
    fixed_by_rotation_brute, is_self_complementary, leaf_stats, nc_to_tree, ncpp_formula,
    rotation_orbit, sc_nc_brute, sc_to_balanced, table_csv, verify_operator_identities, Chirality,
    LatticePath, Parity, Step, GOLDEN_TABLE_CSV, ORBIT_BUDGET,
};

use crate::{budget_gate, Failure, Suite, VerifyArgs};

pub fn run(args: VerifyArgs) -> Result<(), Failure> {
    if args.suite == Suite::Table {
        if args.n.is_some() {
            return Err(Failure::Usage("verify table takes --n-max, not --n".to_string()));
        }
        let n_max = args
            .n_max
            .ok_or_else(|| Failure::Usage("verify table requires --n-max".to_string()))?;
        return table(n_max);
    }
    if args.n_max.is_some() {
        return Err(Failure::Usage("this suite takes --n, not --n-max".to_string()));
    }
    let n = args
        .n
        .ok_or_else(|| Failure::Usage("this suite requires --n".to_string()))?;
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".to_string()));
    }
    match args.suite {
        Suite::Identities => identities(n),
        Suite::Theorem1 => theorem1(n),
        Suite::Theorem2 => theorem2(n),
        Suite::Trees => trees(n),
        Suite::Clickable => clickable(n),
        Suite::Lemma1 => lemma1(n),
        Suite::Table => unreachable!("handled above"),
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn summary(ok: bool) -> Result<(), Failure> {
    println!("result: {}", verdict(ok));
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn identities(n: usize) -> Result<(), Failure> {
    let report = verify_operator_identities(n)?;
    for check in &report.checks {
        if check.passed() {
            println!("{}: pass ({} cases)", check.name, check.cases);
        } else {
            println!("{}: FAIL ({} of {} cases)", check.name, check.failures, check.cases);
        }
    }
    summary(report.all_passed())
}

fn theorem1(n: usize) -> Result<(), Failure> {
    let brute = sc_nc_brute(n, false)?;
    let formula = central_binomial(n)?;
    let mut ok = brute == formula;
    println!("self-complementary noncrossing partitions at n={n}: {brute}");
    println!("binom({n},{}) = {formula}: {}", n / 2, verdict(ok));
    if n % 2 == 0 {
        let bijective = balanced_map_is_bijective(n / 2)?;
        println!("balanced-path bijection at m={}: {}", n / 2, verdict(bijective));
        ok &= bijective;
    }
    summary(ok)
}

/// Maps every self-complementary partition of `[2m]` to a balanced path and
/// checks the images are distinct, exhaust the balanced paths, and invert.
fn balanced_map_is_bijective(m: usize) -> Result<bool, Failure> {
    let n = 2 * m;
    let mut images = BTreeSet::new();
    for p in enumerate_nc(n)? {
        if !is_self_complementary(&p) {
            continue;
        }
        let path = sc_to_balanced(&p)?;
        if balanced_to_sc(&path, m)? != p || !images.insert(path.to_string()) {
            return Ok(false);
        }
    }
    let mut expected = BTreeSet::new();
    for bits in 0u32..1 << n {
        if bits.count_ones() as usize == m {
            let steps: Vec<Step> = (0..n)
                .map(|i| if bits >> i & 1 == 1 { Step::Up } else { Step::Down })
                .collect();
            expected.insert(LatticePath::new(steps).to_string());
        }
    }
    Ok(images == expected)
}

fn theorem2(n: usize) -> Result<(), Failure> {
    let brute = achiral_classes_brute(n, false)?;
    let formula = central_binomial(n)?;
    let ok = brute == formula;
    println!("achiral rotation classes at n={n}: {brute}");
    println!("binom({n},{}) = {formula}: {}", n / 2, verdict(ok));
    summary(ok)
}

fn trees(n: usize) -> Result<(), Failure> {
    let classes = enumerate_tree_classes(n)?;
    let expected_classes = ncpp_formula(n)?;

    let mut reflection_fixed = 0u128;
    let mut seen = BTreeSet::new();
    let mut orbit_total = 0u128;
    let mut leaves_ok = true;
    for p in enumerate_nc(n)? {
        let tree = nc_to_tree(&p)?;
        let stats = p.stats();
        leaves_ok &= leaf_stats(&tree) == (stats.singletons, stats.adjacencies);
        let code = canonical_code(&tree, Chirality::RotationOnly);
        if seen.insert(code.clone()) {
            if canonical_code(&tree.mirrored(), Chirality::RotationOnly) == code {
                reflection_fixed += 1;
            }
            orbit_total += rotation_orbit(&p).orbit_size() as u128;
        }
    }

    let count_ok = classes.len() as u128 == expected_classes && seen.len() == classes.len();
    let fixed_ok = reflection_fixed == central_binomial(n)?;
    let orbit_ok = orbit_total == catalan(n)?;
    println!("tree classes at n={n}: {} (formula {expected_classes}): {}", classes.len(), verdict(count_ok));
    println!(
        "reflection-fixed codes: {reflection_fixed} (binom({n},{}) = {}): {}",
        n / 2,
        central_binomial(n)?,
        verdict(fixed_ok)
    );
    println!("leaf statistics match singletons and adjacencies: {}", verdict(leaves_ok));
    println!("orbit sizes sum to catalan({n}) = {}: {}", catalan(n)?, verdict(orbit_ok));
    summary(count_ok && fixed_ok && leaves_ok && orbit_ok)
}

fn clickable(n: usize) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::Usage("the clickable suite needs n at least 2".to_string()));
    }
    let mut ok = true;
    for d in (1..n).filter(|d| n % d == 0) {
        let count = clickable_count_brute(n, d, false)?;
        let expected = binom(2 * d, d)?;
        let pass = count == expected;
        println!("clickable at d={d}: {count} (binom({},{d}) = {expected}): {}", 2 * d, verdict(pass));
        ok &= pass;
    }
    for k in 1..n {
        let g = gcd(n, k);
        let count = fixed_by_rotation_brute(n, k as i64, false)?;
        let expected = binom(2 * g, g)?;
        let pass = count == expected;
        println!(
            "fixed by rotation k={k}: {count} (binom({},{g}) = {expected}): {}",
            2 * g,
            verdict(pass)
        );
        ok &= pass;
    }
    summary(ok)
}

fn lemma1(n: usize) -> Result<(), Failure> {
    budget_gate("class enumeration", n, ORBIT_BUDGET)?;
    let mut ok = true;
    let mut achiral_total = 0u64;
    let mut by_sc_count = [0u64; 3];
    for p in enumerate_nc(n)? {
        let class = rotation_orbit(&p);
        if *class.representative() != p || !class.achiral() {
            continue;
        }
        achiral_total += 1;
        let classification = classify_achiral(&class)?;
        let expected = match (classification.orbit_size_parity, classification.complement_order_parity)
        {
            (Parity::Odd, _) => 1,
            (Parity::Even, Parity::Even) => 2,
            _ => 0,
        };
        if classification.sc_count != expected {
            println!(
                "trichotomy violated by {}: {} self-complementary members, expected {expected}",
                class.representative(),
                classification.sc_count
            );
            ok = false;
        }
        by_sc_count[classification.sc_count.min(2)] += 1;
    }
    println!("achiral classes at n={n}: {achiral_total}");
    println!("odd orbit, one self-complementary member: {}", by_sc_count[1]);
    println!("even orbit and complement order, two members: {}", by_sc_count[2]);
    println!("even orbit, odd complement order, none: {}", by_sc_count[0]);
    println!("trichotomy: {}", verdict(ok));
    summary(ok)
}

fn table(n_max: usize) -> Result<(), Failure> {
    if n_max == 0 {
        return Err(Failure::Usage("n-max must be at least 1".to_string()));
    }
    let golden_rows = GOLDEN_TABLE_CSV.lines().count() - 1;
    if n_max > golden_rows {
        return Err(Failure::Usage(format!("the golden table covers n up to {golden_rows}")));
    }
    let golden: String = GOLDEN_TABLE_CSV
        .lines()
        .take(n_max + 1)
        .map(|line| format!("{line}\n"))
        .collect();
    let ok = table_csv(n_max)? == golden;
    println!("table rows 1..={n_max} against the golden table: {}", verdict(ok));
    summary(ok)
}
