//! `noncross`: counting, mapping, and verification for noncrossing
//! partitions of `[n]` under rotation and reflection.
//!
//! Exit codes: 0 on success, 1 when a verification finds a violated
//! invariant, 2 on usage or input errors (including exceeded budgets).

mod suites;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use noncross::{
    balanced_to_sc, bell, bicolored_tree_formula, canonical_code, catalan, central_binomial,
    chiral_pairs_formula, complement, dihedral_brute, dihedral_formula, dyck_to_nc, enumerate_all,
    enumerate_nc, enumerate_tree_classes, fpt_formula, kreweras, nc_to_dyck, nc_to_tree,
    ncpp_brute, ncpp_formula, rotate, rotation_orbit, sc_nc_brute, sc_to_balanced, transpose,
    tree_to_nc, BicoloredPlaneTree, Chirality, LatticePath, RotationClass, SetPartition,
    ALL_PARTITIONS_BUDGET, NC_SCAN_BUDGET, ORBIT_BUDGET,
};

#[derive(Parser)]
#[command(name = "noncross", version, about = "Noncrossing partitions under rotation and reflection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a counting sequence at one size or at every size up to a bound.
    Count(CountArgs),
    /// Stream partitions or symmetry classes, one per line.
    Enumerate(EnumerateArgs),
    /// Apply an operator or bijection to one partition, path, or tree.
    Map(MapArgs),
    /// Print a partition's rotation class and classification.
    Orbit(OrbitArgs),
    /// Run a verification suite; exits 1 if a check fails.
    Verify(VerifyArgs),
    /// Print the pattern-count table.
    Table(TableArgs),
    /// Compare self-complementary partition and rotation-class counts.
    Conjecture(ConjectureArgs),
}

/// How a verification or bad invocation ends the process.
pub enum Failure {
    /// Bad invocation, unusable input, or exceeded budget: exit 2.
    Usage(String),
    /// A check found a violated invariant (detail already printed): exit 1.
    Check,
}

impl From<noncross::Error> for Failure {
    fn from(e: noncross::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count(args) => count(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Map(args) => map(args),
        Command::Orbit(args) => orbit(args),
        Command::Verify(args) => suites::run(args),
        Command::Table(args) => table(args),
        Command::Conjecture(args) => conjecture(args),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

/// Quotes a CSV field when it contains separators (partition strings do).
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_object(fields: &[(&str, serde_json::Value)]) -> String {
    let mut object = serde_json::Map::new();
    for (key, value) in fields {
        object.insert((*key).to_string(), value.clone());
    }
    serde_json::Value::Object(object).to_string()
}

// ---------------------------------------------------------------- count

#[derive(Args)]
#[command(group(ArgGroup::new("range").required(true).args(["n", "n_max"])))]
struct CountArgs {
    /// Sequence to evaluate.
    #[arg(long, value_enum)]
    sequence: Sequence,
    /// Ground-set size (or edge count for tree sequences).
    #[arg(long)]
    n: Option<usize>,
    /// Evaluate at every size from 1 to this bound, one line per size.
    #[arg(long)]
    n_max: Option<usize>,
    /// Count by exhaustive enumeration instead of the closed formula.
    #[arg(long)]
    brute_force: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    /// Noncrossing partitions up to rotation (A054357).
    Ncpp,
    /// Noncrossing partitions up to rotation and reflection.
    Dihedral,
    /// Mirror-image class pairs.
    Chiral,
    /// Self-complementary noncrossing partitions (A001405).
    Sc,
    /// Bicolored plane trees on n edges.
    Trees,
    /// Noncrossing partitions (A000108).
    Catalan,
    /// All set partitions (A000110).
    Bell,
    /// Free plane trees on n edges (A002995).
    Fpt,
}

impl Sequence {
    fn field(self) -> &'static str {
        match self {
            Sequence::Ncpp => "ncpp",
            Sequence::Dihedral => "dihedral",
            Sequence::Chiral => "chiral_pairs",
            Sequence::Sc => "sc_nc",
            Sequence::Trees => "bicolored_trees",
            Sequence::Catalan => "catalan",
            Sequence::Bell => "bell",
            Sequence::Fpt => "fpt",
        }
    }

    fn formula(self, n: usize) -> Result<u128, Failure> {
        Ok(match self {
            Sequence::Ncpp => ncpp_formula(n)?,
            Sequence::Dihedral => dihedral_formula(n)?,
            Sequence::Chiral => chiral_pairs_formula(n)?,
            Sequence::Sc => central_binomial(n)?,
            Sequence::Trees => bicolored_tree_formula(n)?,
            Sequence::Catalan => catalan(n)?,
            Sequence::Bell => bell(n)?,
            Sequence::Fpt => fpt_formula(n)?,
        })
    }

    fn brute(self, n: usize) -> Result<u128, Failure> {
        Ok(match self {
            Sequence::Ncpp => ncpp_brute(n, false)?,
            Sequence::Dihedral => dihedral_brute(n, false)?,
            Sequence::Chiral => {
                let classes = ncpp_brute(n, false)?;
                let achiral = noncross::achiral_classes_brute(n, false)?;
                (classes - achiral) / 2
            }
            Sequence::Sc => sc_nc_brute(n, false)?,
            Sequence::Trees => enumerate_tree_classes(n)?.len() as u128,
            Sequence::Catalan => {
                budget_gate("noncrossing enumeration", n, NC_SCAN_BUDGET)?;
                enumerate_nc(n)?.count() as u128
            }
            Sequence::Bell => {
                budget_gate("partition enumeration", n, ALL_PARTITIONS_BUDGET)?;
                enumerate_all(n)?.count() as u128
            }
            Sequence::Fpt => {
                return Err(Failure::Usage(
                    "the fpt sequence has no brute-force oracle; drop --brute-force".to_string(),
                ))
            }
        })
    }
}

fn budget_gate(what: &'static str, n: usize, budget: usize) -> Result<(), Failure> {
    if n > budget {
        return Err(noncross::Error::BudgetExceeded { what, n, budget }.into());
    }
    Ok(())
}

fn count(args: CountArgs) -> Result<(), Failure> {
    let (first, last, single) = match (args.n, args.n_max) {
        (Some(n), None) => (n, n, true),
        (None, Some(n_max)) => (1, n_max, false),
        _ => unreachable!("clap enforces the n/n-max group"),
    };
    if first == 0 || last == 0 {
        return Err(Failure::Usage("n must be at least 1".to_string()));
    }
    let field = args.sequence.field();
    if args.format == Format::Csv {
        println!("n,{field}");
    }
    for n in first..=last {
        let value = if args.brute_force {
            args.sequence.brute(n)?
        } else {
            args.sequence.formula(n)?
        };
        match args.format {
            Format::Text if single => println!("{value}"),
            Format::Text => println!("{n} {value}"),
            Format::Csv => println!("{n},{value}"),
            Format::Json => println!("{{\"n\":{n},\"{field}\":{value}}}"),
        }
    }
    Ok(())
}

// ------------------------------------------------------------ enumerate

#[derive(Args)]
struct EnumerateArgs {
    /// Ground-set size.
    #[arg(long)]
    n: usize,
    /// Restrict the stream to noncrossing partitions.
    #[arg(long)]
    nc_only: bool,
    /// Group the stream into symmetry classes, one line per class.
    #[arg(long, value_enum)]
    classes: Option<ClassKind>,
    /// Keep only self-complementary partitions, or classes containing one.
    #[arg(long)]
    self_complementary: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassKind {
    Rotation,
    Dihedral,
}

fn enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(Failure::Usage("n must be at least 1".to_string()));
    }
    match args.classes {
        None => {
            if args.format == Format::Csv {
                println!("partition");
            }
            let emit = |p: SetPartition| {
                if args.self_complementary && !noncross::is_self_complementary(&p) {
                    return;
                }
                match args.format {
                    Format::Text => println!("{p}"),
                    Format::Csv => println!("{}", csv_field(&p.to_string())),
                    Format::Json => println!(
                        "{}",
                        json_object(&[("partition", p.to_string().into())])
                    ),
                }
            };
            if args.nc_only {
                enumerate_nc(args.n)?.for_each(emit);
            } else {
                enumerate_all(args.n)?.for_each(emit);
            }
        }
        Some(kind) => {
            let budget = if args.nc_only { ORBIT_BUDGET } else { ALL_PARTITIONS_BUDGET };
            budget_gate("class enumeration", args.n, budget)?;
            if args.format == Format::Csv {
                println!("representative,orbit_size,achiral,sc_count,complement_order_parity");
            }
            let emit = |p: SetPartition| -> Result<(), Failure> {
                let class = rotation_orbit(&p);
                if *class.representative() != p {
                    return Ok(());
                }
                let size = match kind {
                    ClassKind::Rotation => class.orbit_size(),
                    ClassKind::Dihedral if class.achiral() => class.orbit_size(),
                    ClassKind::Dihedral => {
                        // The mirror orbit is a distinct class; print the
                        // union once, from its lexicographically least rep.
                        let mirror = rotation_orbit(&complement(&p));
                        if mirror.representative().to_string() < p.to_string() {
                            return Ok(());
                        }
                        2 * class.orbit_size()
                    }
                };
                if args.self_complementary && class.sc_count() == 0 {
                    return Ok(());
                }
                print_class_line(args.format, class.representative(), size, &class);
                Ok(())
            };
            if args.nc_only {
                for p in enumerate_nc(args.n)? {
                    emit(p)?;
                }
            } else {
                for p in enumerate_all(args.n)? {
                    emit(p)?;
                }
            }
        }
    }
    Ok(())
}

fn print_class_line(format: Format, rep: &SetPartition, size: usize, class: &RotationClass) {
    match format {
        Format::Text => println!(
            "{rep} orbit_size={size} achiral={} sc_count={} complement_order_parity={}",
            class.achiral(),
            class.sc_count(),
            class.complement_order_parity(),
        ),
        Format::Csv => println!(
            "{},{size},{},{},{}",
            csv_field(&rep.to_string()),
            class.achiral(),
            class.sc_count(),
            class.complement_order_parity(),
        ),
        Format::Json => println!(
            "{}",
            json_object(&[
                ("representative", rep.to_string().into()),
                ("orbit_size", size.into()),
                ("achiral", class.achiral().into()),
                ("sc_count", class.sc_count().into()),
                (
                    "complement_order_parity",
                    class.complement_order_parity().to_string().into(),
                ),
            ])
        ),
    }
}

// ------------------------------------------------------------------ map

#[derive(Args)]
struct MapArgs {
    #[arg(value_enum)]
    kind: MapKind,
    /// Partition in block syntax, e.g. "1,3,4/2/5,6".
    #[arg(long)]
    partition: Option<String>,
    /// Lattice path over U and D, e.g. "UUDUDD".
    #[arg(long)]
    path: Option<String>,
    /// Bicolored plane tree, e.g. "W(Y(W),Y)".
    #[arg(long)]
    tree: Option<String>,
    /// Rotation count for `rotate`; negative rotates backwards.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// For `nc-to-tree`: print the canonical class code instead of the tree.
    #[arg(long, value_enum)]
    chirality: Option<ChiralityArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    NcToDyck,
    DyckToNc,
    ScToBalanced,
    BalancedToSc,
    NcToTree,
    TreeToNc,
    Kreweras,
    Transpose,
    Complement,
    Rotate,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChiralityArg {
    Rotation,
    Dihedral,
}

impl From<ChiralityArg> for Chirality {
    fn from(value: ChiralityArg) -> Chirality {
        match value {
            ChiralityArg::Rotation => Chirality::RotationOnly,
            ChiralityArg::Dihedral => Chirality::RotationAndReflection,
        }
    }
}

impl MapArgs {
    fn partition(&self) -> Result<SetPartition, Failure> {
        match (&self.partition, &self.path, &self.tree) {
            (Some(text), None, None) => Ok(text.parse::<SetPartition>()?),
            _ => Err(Failure::Usage("this mapping takes exactly --partition".to_string())),
        }
    }

    fn path(&self) -> Result<LatticePath, Failure> {
        match (&self.partition, &self.path, &self.tree) {
            (None, Some(text), None) => Ok(text.parse::<LatticePath>()?),
            _ => Err(Failure::Usage("this mapping takes exactly --path".to_string())),
        }
    }

    fn tree(&self) -> Result<BicoloredPlaneTree, Failure> {
        match (&self.partition, &self.path, &self.tree) {
            (None, None, Some(text)) => Ok(text.parse::<BicoloredPlaneTree>()?),
            _ => Err(Failure::Usage("this mapping takes exactly --tree".to_string())),
        }
    }
}

fn map(args: MapArgs) -> Result<(), Failure> {
    if args.k.is_some() && args.kind != MapKind::Rotate {
        return Err(Failure::Usage("--k only applies to rotate".to_string()));
    }
    if args.chirality.is_some() && args.kind != MapKind::NcToTree {
        return Err(Failure::Usage("--chirality only applies to nc-to-tree".to_string()));
    }
    let (label, value) = match args.kind {
        MapKind::NcToDyck => ("path", nc_to_dyck(&args.partition()?)?.to_string()),
        MapKind::DyckToNc => ("partition", dyck_to_nc(&args.path()?)?.to_string()),
        MapKind::ScToBalanced => ("path", sc_to_balanced(&args.partition()?)?.to_string()),
        MapKind::BalancedToSc => {
            let path = args.path()?;
            ("partition", balanced_to_sc(&path, path.len() / 2)?.to_string())
        }
        MapKind::NcToTree => {
            let tree = nc_to_tree(&args.partition()?)?;
            match args.chirality {
                None => ("tree", tree.to_string()),
                Some(c) => ("code", canonical_code(&tree, c.into()).to_string()),
            }
        }
        MapKind::TreeToNc => ("partition", tree_to_nc(&args.tree()?)?.to_string()),
        MapKind::Kreweras => ("partition", kreweras(&args.partition()?)?.to_string()),
        MapKind::Transpose => ("partition", transpose(&args.partition()?)?.to_string()),
        MapKind::Complement => ("partition", complement(&args.partition()?).to_string()),
        MapKind::Rotate => {
            let p = args.partition()?;
            ("partition", rotate(&p, args.k.unwrap_or(1)).to_string())
        }
    };
    match args.format {
        Format::Text => println!("{value}"),
        Format::Csv => {
            println!("{label}");
            println!("{}", csv_field(&value));
        }
        Format::Json => println!("{}", json_object(&[(label, value.into())])),
    }
    Ok(())
}

// ---------------------------------------------------------------- orbit

#[derive(Args)]
struct OrbitArgs {
    /// Partition in block syntax.
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn orbit(args: OrbitArgs) -> Result<(), Failure> {
    let p: SetPartition = args.partition.parse()?;
    let class = rotation_orbit(&p);
    match args.format {
        Format::Text => {
            println!("representative: {}", class.representative());
            println!("orbit_size: {}", class.orbit_size());
            println!("achiral: {}", class.achiral());
            println!("sc_count: {}", class.sc_count());
            println!("complement_order_parity: {}", class.complement_order_parity());
            println!("members:");
            for member in class.members() {
                println!("{member}");
            }
        }
        Format::Csv => {
            println!("representative,orbit_size,achiral,sc_count,complement_order_parity");
            println!(
                "{},{},{},{},{}",
                csv_field(&class.representative().to_string()),
                class.orbit_size(),
                class.achiral(),
                class.sc_count(),
                class.complement_order_parity(),
            );
        }
        Format::Json => println!(
            "{}",
            json_object(&[
                ("representative", class.representative().to_string().into()),
                ("orbit_size", class.orbit_size().into()),
                ("achiral", class.achiral().into()),
                ("sc_count", class.sc_count().into()),
                (
                    "complement_order_parity",
                    class.complement_order_parity().to_string().into(),
                ),
                (
                    "members",
                    class
                        .members()
                        .iter()
                        .map(|m| serde_json::Value::String(m.to_string()))
                        .collect::<Vec<_>>()
                        .into(),
                ),
            ])
        ),
    }
    Ok(())
}

// ---------------------------------------------------------------- verify

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Ground-set size for the partition-level suites.
    #[arg(long)]
    n: Option<usize>,
    /// Row bound for the table suite.
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Theorem1,
    Theorem2,
    Trees,
    Clickable,
    Lemma1,
    Table,
}

// ---------------------------------------------------------------- table

#[derive(Args)]
struct TableArgs {
    /// Last row of the table.
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

const TABLE_COLUMNS: [&str; 7] =
    ["n", "ncpp", "dihedral", "chiral_pairs", "sc_nc", "catalan", "fpt"];

fn table(args: TableArgs) -> Result<(), Failure> {
    if args.n_max == 0 {
        return Err(Failure::Usage("n-max must be at least 1".to_string()));
    }
    match args.format {
        Format::Csv => print!("{}", noncross::table_csv(args.n_max)?),
        Format::Json => {
            for row in noncross::table(args.n_max)? {
                println!(
                    "{{\"n\":{},\"ncpp\":{},\"dihedral\":{},\"chiral_pairs\":{},\"sc_nc\":{},\"catalan\":{},\"fpt\":{}}}",
                    row.n, row.ncpp, row.dihedral, row.chiral_pairs, row.sc_nc, row.catalan, row.fpt,
                );
            }
        }
        Format::Text => {
            let rows = noncross::table(args.n_max)?;
            let cells: Vec<[String; 7]> = rows
                .iter()
                .map(|row| {
                    [
                        row.n.to_string(),
                        row.ncpp.to_string(),
                        row.dihedral.to_string(),
                        row.chiral_pairs.to_string(),
                        row.sc_nc.to_string(),
                        row.catalan.to_string(),
                        row.fpt.to_string(),
                    ]
                })
                .collect();
            let widths: Vec<usize> = TABLE_COLUMNS
                .iter()
                .enumerate()
                .map(|(i, header)| {
                    cells
                        .iter()
                        .map(|row| row[i].len())
                        .chain([header.len()])
                        .max()
                        .expect("at least the header")
                })
                .collect();
            let header: Vec<String> = TABLE_COLUMNS
                .iter()
                .zip(&widths)
                .map(|(header, width)| format!("{header:>width$}"))
                .collect();
            println!("{}", header.join("  "));
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, width)| format!("{cell:>width$}"))
                    .collect();
                println!("{}", line.join("  "));
            }
        }
    }
    Ok(())
}

// ------------------------------------------------------------ conjecture

#[derive(Args)]
struct ConjectureArgs {
    /// Ground-set size; scans all partitions of [n].
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn conjecture(args: ConjectureArgs) -> Result<(), Failure> {
    if args.n == 0 {
        return Err(Failure::Usage("n must be at least 1".to_string()));
    }
    let report = noncross::conjecture_check(args.n, false)?;
    match args.format {
        Format::Text => {
            println!("self-complementary partitions: {}", report.sc_partitions);
            println!("self-complementary rotation classes: {}", report.sc_rotation_classes);
            println!("agree: {}", report.equal());
        }
        Format::Csv => {
            println!("n,sc_partitions,sc_rotation_classes");
            println!("{},{},{}", report.n, report.sc_partitions, report.sc_rotation_classes);
        }
        Format::Json => println!(
            "{{\"n\":{},\"sc_partitions\":{},\"sc_rotation_classes\":{},\"agree\":{}}}",
            report.n,
            report.sc_partitions,
            report.sc_rotation_classes,
            report.equal(),
        ),
    }
    if report.equal() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
