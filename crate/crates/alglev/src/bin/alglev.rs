//! Command-line surface of the toolkit.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! parse errors. Output is deterministic for identical inputs.

use alglev::algebra::{catalog, catalog_entries, invariants, parse_structure, serialize_structure};
use alglev::classify::{filtered_level2, infty_level2_list, level1_list, level2_list, Predicate};
use alglev::degeneration::{parse_witness, verify_witness};
use alglev::exact::{parse_scalar, rational_eigenvalues, ExactMatrix, Scalar};
use alglev::extensions::{decompose_extension, g2_condition};
use alglev::gentype::gen_type;
use alglev::partitions::parse_partition;
use alglev::spectra::{fs_of_matrix, parse_full_specter};
use alglev::tn::{degenerates_t, emit_tn_tables, level_t, primary_set_t, TnPoint};
use alglev::verify::all_checks;
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "alglev",
    version,
    about = "Exact toolkit for degenerations and levels of nonassociative algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Partition dominance, covers, and levels.
    Partition {
        #[command(subcommand)]
        op: PartitionOp,
    },
    /// Full specter of a rational matrix read from a file (one row per
    /// line, whitespace-separated rationals).
    Spectrum { matrix_file: String },
    /// Points of the generation-type-1 variety: levels, the degeneration
    /// criterion, primary sets, and table emission.
    Tn {
        #[command(subcommand)]
        op: TnOp,
    },
    /// Verifies a .deg degeneration witness file.
    CheckDegeneration { file: String },
    /// Generation type of an .alg structure.
    GenType { file: String },
    /// Generation-type-2 criterion for a trivial singular extension given
    /// as an .alg structure (base on e1, e2; ideal on e3..en).
    G2Check { file: String },
    /// Classification lists.
    Classify {
        #[command(subcommand)]
        op: ClassifyOp,
    },
    /// Emits one of the three structure tables.
    EmitTable {
        /// 1 = nilpotent, 2 = solvable non-nilpotent, 3 = nonsolvable
        table: u8,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_level: u32,
        /// Instantiate family parameters at these rationals.
        #[arg(long, value_delimiter = ',')]
        sample: Option<Vec<String>>,
    },
    /// Runs the complete verification battery.
    VerifyPaper {
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Lists the named structures available in the catalog.
    Catalog,
    /// Prints a catalog structure as .alg text.
    EmitStructure {
        name: String,
        #[arg(long)]
        n: usize,
        /// Comma-separated rational parameters.
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<String>>,
    },
    /// Prints invariants and the generation type of an .alg structure.
    Invariants { file: String },
}

#[derive(Subcommand)]
enum PartitionOp {
    /// Level of a partition, e.g. `3,2`.
    Level { partition: String },
    /// The set of partitions directly below in dominance order.
    Preceding { partition: String },
    /// Whether the first partition dominates the second.
    Dominates { first: String, second: String },
}

#[derive(Subcommand)]
enum TnOp {
    /// Level of the point with the given r and specter, e.g. `0 0:2.1`.
    Level { r: u8, spec: String },
    /// Whether the first point degenerates to the second.
    Degenerates {
        r1: u8,
        spec1: String,
        r2: u8,
        spec2: String,
    },
    /// The primary-degeneration set of a point.
    Primary { r: u8, spec: String },
    /// Emits all three tables.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        max_level: u32,
    },
}

#[derive(Subcommand)]
enum ClassifyOp {
    Level1 {
        #[arg(long)]
        n: usize,
    },
    Level2 {
        #[arg(long)]
        n: usize,
    },
    Filter {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        predicate: String,
    },
    /// The stable families of infinity-level 2.
    InftyLevel2,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read_file(path: &str) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| usage_error(format!("{path}: {e}")))
}

fn parse_point(r: u8, spec: &str) -> Result<TnPoint, ExitCode> {
    if r > 1 {
        return Err(usage_error("r must be 0 or 1"));
    }
    let spec = parse_full_specter(spec).map_err(usage_error)?;
    Ok(TnPoint::new(r, spec))
}

fn run() -> Result<ExitCode, ExitCode> {
    let cli = Cli::parse();
    let machine = cli.format == Format::Machine;
    match cli.command {
        Command::Partition { op } => {
            match op {
                PartitionOp::Level { partition } => {
                    let a = parse_partition(&partition).map_err(usage_error)?;
                    if machine {
                        println!("partition={a} level={}", a.level());
                    } else {
                        println!("{}", a.level());
                    }
                }
                PartitionOp::Preceding { partition } => {
                    let a = parse_partition(&partition).map_err(usage_error)?;
                    let covers = a.preceding();
                    if machine {
                        let list: Vec<String> = covers.iter().map(|b| b.to_string()).collect();
                        println!("partition={a} preceding={}", list.join(";"));
                    } else if covers.is_empty() {
                        println!("(none)");
                    } else {
                        for b in covers {
                            println!("{b}");
                        }
                    }
                }
                PartitionOp::Dominates { first, second } => {
                    let a = parse_partition(&first).map_err(usage_error)?;
                    let b = parse_partition(&second).map_err(usage_error)?;
                    let v = a.dominates(&b).map_err(usage_error)?;
                    if machine {
                        println!("first={a} second={b} dominates={v}");
                    } else {
                        println!("{v}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { matrix_file } => {
            let text = read_file(&matrix_file)?;
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let row: Option<Vec<Scalar>> = line.split_whitespace().map(parse_scalar).collect();
                let row =
                    row.ok_or_else(|| usage_error(format!("line {}: bad rational", lineno + 1)))?;
                rows.push(row);
            }
            if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
                return Err(usage_error("matrix must be square and nonempty"));
            }
            let m = ExactMatrix::from_rows(rows);
            let eigs = rational_eigenvalues(&m).map_err(usage_error)?;
            let fs = fs_of_matrix(&m).map_err(usage_error)?;
            if machine {
                let parts: Vec<String> = fs
                    .pairs()
                    .iter()
                    .map(|(l, a)| {
                        let dotted: Vec<String> =
                            a.parts().iter().map(|p| p.to_string()).collect();
                        format!("{l}:{}", dotted.join("."))
                    })
                    .collect();
                println!("spec={}", parts.join(";"));
            } else {
                println!("eigenvalues:");
                for (l, mult) in eigs {
                    println!("  {l} (multiplicity {mult})");
                }
                println!("full specter: {fs}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tn { op } => {
            match op {
                TnOp::Level { r, spec } => {
                    let p = parse_point(r, &spec)?;
                    if machine {
                        println!("point={p} level={}", level_t(&p));
                    } else {
                        println!("{}", level_t(&p));
                    }
                }
                TnOp::Degenerates { r1, spec1, r2, spec2 } => {
                    let p = parse_point(r1, &spec1)?;
                    let q = parse_point(r2, &spec2)?;
                    let v = degenerates_t(&p, &q);
                    if machine {
                        println!("source={p} target={q} degenerates={v}");
                    } else {
                        println!("{v}");
                    }
                }
                TnOp::Primary { r, spec } => {
                    let p = parse_point(r, &spec)?;
                    for q in primary_set_t(&p) {
                        println!("{q}");
                    }
                }
                TnOp::Tables { n, max_level } => {
                    for table in 1..=3u8 {
                        print!("{}", emit_tn_tables(table, n, max_level, machine, None));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckDegeneration { file } => {
            let text = read_file(&file)?;
            let w = parse_witness(&text).map_err(usage_error)?;
            let verdict = verify_witness(&w);
            println!("{verdict}");
            if verdict.is_verified() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::GenType { file } => {
            let text = read_file(&file)?;
            let a = parse_structure(&text).map_err(usage_error)?;
            println!("{}", gen_type(&a));
            Ok(ExitCode::SUCCESS)
        }
        Command::G2Check { file } => {
            let text = read_file(&file)?;
            let a = parse_structure(&text).map_err(usage_error)?;
            let spec = decompose_extension(&a).map_err(usage_error)?;
            let holds = g2_condition(&spec).map_err(usage_error)?;
            println!("{holds}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { op } => {
            match op {
                ClassifyOp::Level1 { n } => {
                    for row in level1_list(n) {
                        println!("{row}");
                    }
                }
                ClassifyOp::Level2 { n } => {
                    for row in level2_list(n) {
                        println!("{row}");
                    }
                }
                ClassifyOp::Filter { n, predicate } => {
                    let pred = Predicate::parse(&predicate).ok_or_else(|| {
                        usage_error(
                            "predicate must be one of commutative, anticommutative, jordan, left_alternative",
                        )
                    })?;
                    for row in filtered_level2(n, pred) {
                        println!("{row}");
                    }
                }
                ClassifyOp::InftyLevel2 => {
                    for row in infty_level2_list() {
                        println!("{row}  (carrier dim {})", row.dim);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::EmitTable { table, n, max_level, sample } => {
            if !(1..=3).contains(&table) {
                return Err(usage_error("table must be 1, 2 or 3"));
            }
            if !(1..=5).contains(&max_level) {
                return Err(usage_error("max-level must be between 1 and 5"));
            }
            let pool: Option<Vec<Scalar>> = match sample {
                None => None,
                Some(items) => Some(
                    items
                        .iter()
                        .map(|s| {
                            parse_scalar(s)
                                .ok_or_else(|| usage_error(format!("bad sample value `{s}`")))
                        })
                        .collect::<Result<_, _>>()?,
                ),
            };
            print!("{}", emit_tn_tables(table, n, max_level, machine, pool.as_deref()));
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { jobs } => {
            let outcomes = all_checks(jobs);
            let mut failed = 0;
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                println!("{status} {}: {}", o.name, o.detail);
                if !o.passed {
                    failed += 1;
                }
            }
            if failed == 0 {
                println!("all {} checks passed", outcomes.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{failed} of {} checks failed", outcomes.len());
                Ok(ExitCode::from(1))
            }
        }
        Command::EmitStructure { name, n, params } => {
            let params: Vec<Scalar> = params
                .unwrap_or_default()
                .iter()
                .map(|s| parse_scalar(s).ok_or_else(|| usage_error(format!("bad parameter `{s}`"))))
                .collect::<Result<_, _>>()?;
            let a = catalog(&name, &params, n).map_err(usage_error)?;
            print!("{}", serialize_structure(&a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog => {
            for e in catalog_entries() {
                let dims = match e.max_dim {
                    Some(m) if m == e.min_dim => format!("n = {}", e.min_dim),
                    Some(m) => format!("{} <= n <= {m}", e.min_dim),
                    None => format!("n >= {}", e.min_dim),
                };
                println!("{:12} params: {}  {:13} {}", e.name, e.arity, dims, e.description);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { file } => {
            let text = read_file(&file)?;
            let a = parse_structure(&text).map_err(usage_error)?;
            let inv = invariants(&a);
            let g = gen_type(&a);
            if machine {
                println!(
                    "commutative={} anticommutative={} associative={} left_alternative={} jordan={} annihilator_dim={} square_dim={} gen_type={}",
                    inv.commutative,
                    inv.anticommutative,
                    inv.associative,
                    inv.left_alternative,
                    inv.jordan,
                    inv.annihilator_dim,
                    inv.square_dim,
                    g
                );
            } else {
                println!("commutative:      {}", inv.commutative);
                println!("anticommutative:  {}", inv.anticommutative);
                println!("associative:      {}", inv.associative);
                println!("left alternative: {}", inv.left_alternative);
                println!("jordan:           {}", inv.jordan);
                println!("annihilator dim:  {}", inv.annihilator_dim);
                println!("square dim:       {}", inv.square_dim);
                println!("generation type:  {g}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(code) => code,
    }
}
