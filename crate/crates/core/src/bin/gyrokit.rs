use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use gyrokit::analysis::analyze;
use gyrokit::commutator::derived_normality;
use gyrokit::format;
use gyrokit::library::{cyclic, groups_up_to_8};
use gyrokit::normality::{normal_closure, try_quotient};
use gyrokit::prime_index::{
    check_condition_n, equivalence_report, is_prime, least_prime_factor,
    normality_by_gyration_invariance,
};
use gyrokit::search::{are_isomorphic, enumerate, SearchConfig, SearchMode};
use gyrokit::substructure::{index, is_subgyrogroup};
use gyrokit::theorems::{sweep, SweepOptions};
use gyrokit::{direct_product, verify_axioms, Caps, Elem, GyroError, GyroTable, SubSet};

#[derive(Parser)]
#[command(name = "gyrokit", version, about = "Finite gyrogroup toolkit")]
struct Cli {
    /// Directory of .gyro files for sweep-theorems and hunt.
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
    /// Largest order for subgyrogroup lattice enumeration.
    #[arg(long, global = true, default_value_t = Caps::default().lattice)]
    lattice_cap: usize,
    /// Largest permutation group or pair set materialized.
    #[arg(long, global = true, default_value_t = Caps::default().perm_group)]
    perm_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    FirstNonassociative,
}

#[derive(Subcommand)]
enum Command {
    /// Check the gyrogroup axioms.
    Verify { path: PathBuf },
    /// Print the structure report.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print G/N for a normal subgyrogroup N.
    Quotient {
        path: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Print the normal closure of a subset.
    Closure {
        path: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Print [G:H] and, at prime index, the prime-index conditions.
    Index {
        path: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Enumerate gyrogroups of order N.
    Search {
        /// Order, 1 to 10.
        n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        /// Stop after this many isomorphism classes.
        #[arg(long)]
        max_results: Option<usize>,
        /// Seconds.
        #[arg(long, default_value_t = 3600)]
        time_budget: u64,
        /// Try every inverse involution instead of one per cycle type.
        #[arg(long)]
        no_symmetry_breaking: bool,
        /// Write `<order>-<index>.gyro` files here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether two tables are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Run the invariant suite over every .gyro file in a directory.
    SweepTheorems { dir: Option<PathBuf> },
    /// Look for a gyrogroup whose commutator subgyrogroup is not normal.
    Hunt {
        /// Also test direct products of corpus members with Z2 and Z3.
        #[arg(long)]
        products: bool,
    },
    /// Write the standard corpus: groups of order at most 8 and the
    /// nonassociative gyrogroups of order 8.
    GenCorpus { dir: PathBuf },
}

/// A failed command: exit code and message for stderr.
struct Failure(u8, String);

impl From<GyroError> for Failure {
    fn from(e: GyroError) -> Self {
        let code = match &e {
            GyroError::Malformed(_) | GyroError::OutOfRange { .. } => 1,
            GyroError::CapExceeded { .. } | GyroError::Timeout => 3,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(1, msg.into())
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

fn parse_set(g: &GyroTable, list: &str) -> Result<SubSet, Failure> {
    let elems = list
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Elem>()
                .map_err(|_| usage(format!("bad element '{t}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubSet::new(g.order(), elems)?)
}

fn fmt_list(xs: &[Elem]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn gyro_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| io_error(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gyro"))
        .collect();
    files.sort();
    Ok(files)
}

fn file_label(p: &Path) -> String {
    p.file_name().map_or_else(
        || p.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    )
}

fn cmd_verify(path: &Path) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let rows = format::parse_rows(&text)?;
    let rep = verify_axioms(&rows)?;
    if rep.passed {
        return Ok("PASS\n".into());
    }
    let mut out = String::from("FAIL\n");
    for v in &rep.violations {
        let _ = writeln!(out, "{} {} {}", v.axiom, fmt_list(&v.witness), v.detail);
    }
    Err(Failure(2, out))
}

fn cmd_analyze(path: &Path, json: bool, caps: &Caps) -> Outcome {
    let a = analyze(&format::read(path)?, caps)?;
    Ok(if json {
        format!("{}\n", a.to_json())
    } else {
        a.to_text()
    })
}

fn cmd_quotient(path: &Path, set: &str) -> Outcome {
    let g = format::read(path)?;
    let q = try_quotient(&g, &parse_set(&g, set)?)?;
    let mut out = String::new();
    for (i, c) in q.cosets.cosets.iter().enumerate() {
        let _ = writeln!(out, "# coset {i}: {}", fmt_list(c));
    }
    out.push_str(&format::write(&q.table, &[]));
    Ok(out)
}

fn cmd_closure(path: &Path, set: &str, caps: &Caps) -> Outcome {
    let g = format::read(path)?;
    let s = parse_set(&g, set)?;
    Ok(format!(
        "{}\n",
        fmt_list(normal_closure(&g, s.members(), caps)?.members())
    ))
}

fn cmd_index(path: &Path, set: &str) -> Outcome {
    let g = format::read(path)?;
    let h = parse_set(&g, set)?;
    if !is_subgyrogroup(&g, &h) {
        return Err(GyroError::NotSubgyrogroup {
            members: h.members().to_vec(),
        }
        .into());
    }
    let p = index(&g, &h)?;
    let mut out = format!("index: {p}\n");
    if is_prime(p as u64) {
        let rep = equivalence_report(&g, &h)?;
        let _ = writeln!(out, "condition pa in H: {}", rep.condition_p);
        let _ = writeln!(out, "condition na in H: {}", rep.condition_n);
        let _ = writeln!(
            out,
            "condition multiples outside H: {}",
            rep.condition_multiples
        );
        for (a, n) in check_condition_n(&g, &h)?.witnesses {
            let n = n.map_or_else(|| "-".to_string(), |n| n.to_string());
            let _ = writeln!(out, "witness {a}: n={n}");
        }
        if least_prime_factor(g.order() as u64) == Some(p as u64) {
            let c = normality_by_gyration_invariance(&g, &h)?;
            let _ = writeln!(out, "normal: {}", c.holds);
            let _ = writeln!(out, "admissible y: {}", fmt_list(&c.admissible));
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    n: usize,
    mode: Mode,
    max_results: Option<usize>,
    time_budget: u64,
    symmetry_breaking: bool,
    out_dir: Option<&Path>,
    caps: &Caps,
) -> Outcome {
    let config = SearchConfig {
        order: n,
        max_results,
        time_budget: Duration::from_secs(time_budget),
        mode: match mode {
            Mode::Exhaustive => SearchMode::Exhaustive,
            Mode::FirstNonassociative => SearchMode::FirstNonassociative,
        },
        symmetry_breaking,
    };
    let outcome = enumerate(&config, caps.canonical).map_err(|e| match e {
        GyroError::Precondition(m) => usage(m),
        e => e.into(),
    })?;
    let mut out = String::new();
    for (i, t) in outcome.tables.iter().enumerate() {
        let kind = if t.is_group() {
            "group"
        } else if t.is_gyrocommutative() {
            "gyrocommutative"
        } else {
            "nonassociative"
        };
        let name = format!("{n}-{i}.gyro");
        let _ = writeln!(out, "{name} {kind}");
        if let Some(dir) = out_dir {
            fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
            let path = dir.join(&name);
            fs::write(&path, format::write(t, &[])).map_err(|e| io_error(&path, e))?;
        }
    }
    let _ = writeln!(out, "classes: {}", outcome.tables.len());
    let _ = writeln!(out, "complete: {}", outcome.complete);
    if outcome.timed_out {
        return Err(Failure(3, format!("{out}time budget exhausted\n")));
    }
    if matches!(mode, Mode::FirstNonassociative) && outcome.tables.iter().all(|t| t.is_group()) {
        return Err(Failure(
            2,
            format!("{out}no nonassociative gyrogroup found\n"),
        ));
    }
    Ok(out)
}

fn cmd_iso(first: &Path, second: &Path) -> Outcome {
    let (g, h) = (format::read(first)?, format::read(second)?);
    match are_isomorphic(&g, &h) {
        Some(p) => Ok(format!("isomorphic: {}\n", fmt_list(&p.to_vec()))),
        None => Err(Failure(2, "not isomorphic\n".into())),
    }
}

fn cmd_sweep(dir: &Path, caps: &Caps) -> Outcome {
    let files = gyro_files(dir)?;
    let opts = SweepOptions {
        caps: *caps,
        ..SweepOptions::default()
    };
    let reports: Vec<(String, bool)> = files
        .par_iter()
        .map(|p| match format::read(p) {
            Ok(g) => {
                let rep = sweep(&g, &opts);
                (rep.render(&file_label(p)), rep.passed())
            }
            Err(e) => (format!("== {}\nFAIL read: {e}\n", file_label(p)), false),
        })
        .collect();
    let failed = reports.iter().filter(|(_, ok)| !ok).count();
    let mut out: String = reports.into_iter().map(|(r, _)| r).collect();
    let _ = writeln!(out, "files: {} failed: {failed}", files.len());
    if failed > 0 {
        return Err(Failure(2, out));
    }
    Ok(out)
}

fn cmd_hunt(corpus: Option<&Path>, products: bool, caps: &Caps) -> Outcome {
    let mut instances: Vec<(String, GyroTable)> = Vec::new();
    if let Some(dir) = corpus {
        for p in gyro_files(dir)? {
            instances.push((file_label(&p), format::read(&p)?));
        }
    }
    for n in 1..=8 {
        let found = enumerate(&SearchConfig::exhaustive(n), caps.canonical)?;
        for (i, t) in found.tables.into_iter().enumerate() {
            instances.push((format!("search {n}-{i}"), t));
        }
    }
    if products {
        let base: Vec<(String, GyroTable)> = instances
            .iter()
            .filter(|(_, t)| !t.is_group())
            .cloned()
            .collect();
        for (name, t) in &base {
            for k in [2, 3] {
                instances.push((
                    format!("{name} x Z{k}"),
                    direct_product(t, &cyclic(k), caps.order)?,
                ));
            }
        }
    }
    let results: Vec<Result<(String, bool), GyroError>> = instances
        .par_iter()
        .map(|(name, t)| Ok((name.clone(), derived_normality(t)?.normal)))
        .collect();
    let mut out = String::new();
    let mut non_normal = 0;
    for r in results {
        let (name, normal) = r?;
        non_normal += usize::from(!normal);
        let _ = writeln!(
            out,
            "{name}: commutator subgyrogroup {}",
            if normal { "normal" } else { "NOT normal" }
        );
    }
    let _ = writeln!(
        out,
        "instances: {} non-normal: {non_normal}",
        instances.len()
    );
    Ok(out)
}

fn cmd_gen_corpus(dir: &Path, caps: &Caps) -> Outcome {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    let mut out = String::new();
    let mut emit = |name: String, t: &GyroTable, comment: &str| -> Result<(), Failure> {
        let path = dir.join(&name);
        fs::write(&path, format::write(t, &[comment])).map_err(|e| io_error(&path, e))?;
        let _ = writeln!(out, "{name}");
        Ok(())
    };
    for (name, g) in groups_up_to_8() {
        emit(format!("{name}.gyro"), &g, name)?;
    }
    let found = enumerate(&SearchConfig::exhaustive(8), caps.canonical)?;
    for (i, t) in found
        .tables
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_group())
    {
        let kind = if t.is_gyrocommutative() {
            "gyrocommutative"
        } else {
            "not gyrocommutative"
        };
        emit(
            format!("8-{i}.gyro"),
            t,
            &format!("nonassociative order 8, {kind}"),
        )?;
    }
    Ok(out)
}

fn run(cli: Cli) -> Outcome {
    let caps = Caps {
        lattice: cli.lattice_cap,
        perm_group: cli.perm_cap,
        pair_closure: cli.perm_cap,
        ..Caps::default()
    };
    match cli.command {
        Command::Verify { path } => cmd_verify(&path),
        Command::Analyze { path, json } => cmd_analyze(&path, json, &caps),
        Command::Quotient { path, set } => cmd_quotient(&path, &set),
        Command::Closure { path, set } => cmd_closure(&path, &set, &caps),
        Command::Index { path, set } => cmd_index(&path, &set),
        Command::Search {
            n,
            mode,
            max_results,
            time_budget,
            no_symmetry_breaking,
            out,
        } => cmd_search(
            n,
            mode,
            max_results,
            time_budget,
            !no_symmetry_breaking,
            out.as_deref(),
            &caps,
        ),
        Command::Iso { first, second } => cmd_iso(&first, &second),
        Command::SweepTheorems { dir } => {
            let dir = dir
                .or(cli.corpus)
                .ok_or_else(|| usage("sweep-theorems needs DIR or --corpus"))?;
            cmd_sweep(&dir, &caps)
        }
        Command::Hunt { products } => cmd_hunt(cli.corpus.as_deref(), products, &caps),
        Command::GenCorpus { dir } => cmd_gen_corpus(&dir, &caps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure(code, msg)) => {
            // Negative answers go to stdout so reports stay complete.
            if code == 2 {
                print!("{msg}");
                if !msg.ends_with('\n') {
                    println!();
                }
            } else {
                eprintln!("error: {}", msg.trim_end());
            }
            ExitCode::from(code)
        }
    }
}
