//! `posemigroup`: decide, count, construct, and render admissible band
//! operations on finite posets given as cover-pair files.
//!
//! Exit codes: 0 = a decision was computed (including NO/FAIL answers),
//! 1 = input error, 2 = internal invariant breach.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use posemigroup::construct::{
    foliated_tree_op, forest_op, normal_from_map, ordered_sum, preimage_op,
    union_with_common_top_part,
};
use posemigroup::search::{find_admissible, initial_domains, propagate};
use posemigroup::{BandOp, Error, Poset, SearchConfig, SearchMode, Variety};

use posemigroup_cli::census::{census_text, run_census};
use posemigroup_cli::dot::hasse_dot;
use posemigroup_cli::format::{emit_band, emit_map, emit_poset, parse_band, parse_map, parse_poset};

#[derive(Parser)]
#[command(name = "posemigroup", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum VarietyArg {
    Rrb,
    Rnb,
    Comm,
}

impl From<VarietyArg> for Variety {
    fn from(v: VarietyArg) -> Variety {
        match v {
            VarietyArg::Rrb => Variety::Rrb,
            VarietyArg::Rnb => Variety::Rnb,
            VarietyArg::Comm => Variety::Commutative,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the poset admits an admissible operation.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "rrb")]
        variety: VarietyArg,
    },
    /// Enumerate every admissible operation of the chosen variety.
    EnumerateOps {
        file: PathBuf,
        #[arg(long, value_enum)]
        variety: VarietyArg,
        #[arg(long)]
        count_only: bool,
    },
    /// Verify that a table is an admissible operation for a poset.
    VerifyTable {
        poset_file: PathBuf,
        band_file: PathBuf,
        #[arg(long, value_enum)]
        variety: VarietyArg,
    },
    /// Build new admissible operations from verified parts.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Tabulate all unlabeled posets up to a size bound.
    Census {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a poset's Hasse diagram as DOT.
    Dot { file: PathBuf },
    /// List or emit the built-in fixtures.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Ordered sum of admissible parts, given as alternating
    /// poset/band file pairs from bottom to top.
    Sum {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Disjoint union of tails over a shared bottom part with a top
    /// element; tails are alternating poset/band file pairs.
    Union {
        #[arg(long)]
        top: PathBuf,
        #[arg(long)]
        top_band: PathBuf,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Chain-decomposition operation on a foliated tree or forest.
    Tree {
        file: PathBuf,
        /// Comma-separated enumeration of the minimal elements.
        #[arg(long)]
        order: Option<String>,
    },
    /// Lift fiber operations through an order homomorphism onto a forest.
    Preimage {
        dom_file: PathBuf,
        cod_file: PathBuf,
        map_file: PathBuf,
        /// One band file per codomain element, in element order.
        #[arg(long = "fiber-band", required = true)]
        fiber_bands: Vec<PathBuf>,
        #[arg(long)]
        order: Option<String>,
    },
    /// Transport the meet through an order homomorphism onto a
    /// meet-semilattice whose maximal restrictions are isomorphisms.
    NormalMap {
        dom_file: PathBuf,
        cod_file: PathBuf,
        map_file: PathBuf,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    List,
    Emit { name: String },
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_poset(path: &PathBuf) -> Result<Poset> {
    parse_poset(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_band(path: &PathBuf) -> Result<BandOp> {
    parse_band(&read(path)?).with_context(|| format!("{}", path.display()))
}

/// Alternating poset/band file pairs.
fn load_pairs(files: &[PathBuf]) -> Result<Vec<(Poset, BandOp)>> {
    if files.len() % 2 != 0 {
        anyhow::bail!("expected alternating poset/band file pairs, got an odd count");
    }
    files
        .chunks(2)
        .map(|pair| Ok((load_poset(&pair[0])?, load_band(&pair[1])?)))
        .collect()
}

fn parse_order(spec: &Option<String>, default: Vec<usize>) -> Result<Vec<usize>> {
    match spec {
        None => Ok(default),
        Some(s) => s
            .split(',')
            .map(|tok| tok.trim().parse().map_err(|_| anyhow!("bad --order entry `{tok}`")))
            .collect(),
    }
}

/// Errors from construction inputs are the caller's fault (exit 1), except
/// breaches of the library's own post-conditions (exit 2).
fn construct_err(e: Error) -> CliFailure {
    let code = match e {
        Error::PostValidationFailed { .. } => 2,
        _ => 1,
    };
    CliFailure { code, error: anyhow!("{e}") }
}

struct CliFailure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for CliFailure {
    fn from(error: anyhow::Error) -> CliFailure {
        CliFailure { code: 1, error }
    }
}

fn run(cli: Cli) -> std::result::Result<(), CliFailure> {
    match cli.command {
        Command::Check { file, variety } => {
            let p = load_poset(&file)?;
            let variety = Variety::from(variety);
            let result =
                find_admissible(&p, SearchConfig { variety, mode: SearchMode::First })
                    .map_err(construct_err)?;
            match result.found() {
                Some(op) => {
                    println!("YES");
                    print!("{}", emit_band(op));
                }
                None => {
                    println!("NO");
                    let fixpoint = propagate(&initial_domains(&p, variety), variety);
                    match fixpoint.contradiction() {
                        Some(c) => println!(
                            "contradiction cell=({},{}) rule={}",
                            c.cell.0, c.cell.1, c.constraint
                        ),
                        None => println!("search exhausted"),
                    }
                }
            }
        }
        Command::EnumerateOps { file, variety, count_only } => {
            let p = load_poset(&file)?;
            let result = find_admissible(
                &p,
                SearchConfig { variety: variety.into(), mode: SearchMode::All },
            )
            .map_err(construct_err)?;
            println!("{}", result.ops.len());
            if !count_only {
                for op in &result.ops {
                    print!("{}", emit_band(op));
                }
            }
        }
        Command::VerifyTable { poset_file, band_file, variety } => {
            let p = load_poset(&poset_file)?;
            let op = load_band(&band_file)?;
            if op.n() != p.n() {
                return Err(anyhow!(
                    "table has {} elements but the poset has {}",
                    op.n(),
                    p.n()
                )
                .into());
            }
            let verdict = op.check_admissible(&p).and_then(|()| match variety {
                VarietyArg::Rrb => op.check_rrb(),
                VarietyArg::Rnb => op.check_rnb(),
                VarietyArg::Comm => op.check_rnb().and_then(|()| {
                    if op.is_commutative() {
                        Ok(())
                    } else {
                        Err(Error::PostValidationFailed { reason: "not commutative" })
                    }
                }),
            });
            match verdict {
                Ok(()) => println!("OK"),
                Err(e) => println!("FAIL: {e}"),
            }
        }
        Command::Construct(cmd) => {
            let (poset, band) = match cmd {
                ConstructCommand::Sum { files } => {
                    let parts = load_pairs(&files)?;
                    let (p, op) = ordered_sum(&parts).map_err(construct_err)?;
                    (Some(p), op)
                }
                ConstructCommand::Union { top, top_band, files } => {
                    let p = load_poset(&top)?;
                    let op = load_band(&top_band)?;
                    let tails = load_pairs(&files)?;
                    let (u, union_op) =
                        union_with_common_top_part((&p, &op), &tails).map_err(construct_err)?;
                    (Some(u), union_op)
                }
                ConstructCommand::Tree { file, order } => {
                    let t = load_poset(&file)?;
                    let order = parse_order(&order, t.minimals())?;
                    let op = if t.is_tree() {
                        foliated_tree_op(&t, &order).map_err(construct_err)?.1
                    } else {
                        forest_op(&t, &order).map_err(construct_err)?
                    };
                    (None, op)
                }
                ConstructCommand::Preimage { dom_file, cod_file, map_file, fiber_bands, order } => {
                    let dom = load_poset(&dom_file)?;
                    let cod = load_poset(&cod_file)?;
                    let f = parse_map(&read(&map_file)?, &dom, &cod)
                        .with_context(|| format!("{}", map_file.display()))?;
                    let fiber_ops: Vec<BandOp> =
                        fiber_bands.iter().map(load_band).collect::<Result<_>>()?;
                    let order = parse_order(&order, cod.minimals())?;
                    let res = preimage_op(&f, &fiber_ops, &order).map_err(construct_err)?;
                    (None, res.op)
                }
                ConstructCommand::NormalMap { dom_file, cod_file, map_file } => {
                    let dom = load_poset(&dom_file)?;
                    let cod = load_poset(&cod_file)?;
                    let f = parse_map(&read(&map_file)?, &dom, &cod)
                        .with_context(|| format!("{}", map_file.display()))?;
                    (None, normal_from_map(&f).map_err(construct_err)?)
                }
            };
            if let Some(p) = poset {
                print!("{}", emit_poset(&p));
            }
            print!("{}", emit_band(&band));
        }
        Command::Census { max_n, out } => {
            let records = run_census(max_n).map_err(|e| {
                let code = if e.to_string().contains("internal invariant breach") { 2 } else { 1 };
                CliFailure { code, error: e }
            })?;
            fs::write(&out, census_text(&records))
                .with_context(|| format!("writing {}", out.display()))?;
            println!("wrote {} records to {}", records.len(), out.display());
        }
        Command::Dot { file } => {
            let p = load_poset(&file)?;
            print!("{}", hasse_dot(&p, None));
        }
        Command::Fixtures(FixturesCommand::List) => {
            for name in posemigroup::fixtures::POSET_NAMES {
                println!("poset {name}");
            }
            for name in posemigroup::fixtures::TABLE_NAMES {
                println!("band {name}");
            }
            println!("map homo-map");
        }
        Command::Fixtures(FixturesCommand::Emit { name }) => {
            let text = emit_fixture(&name)?;
            print!("{text}");
        }
    }
    Ok(())
}

fn emit_fixture(name: &str) -> Result<String> {
    if name == "homo-map" {
        let p = posemigroup::fixtures::named_poset("homo-p").unwrap();
        let t = posemigroup::fixtures::named_poset("homo-t").unwrap();
        let f = posemigroup::PosetMap::new(p, t, posemigroup::fixtures::HOMO_MAP.to_vec())
            .expect("fixture map is an order homomorphism");
        return Ok(emit_map(&f));
    }
    if let Ok(p) = posemigroup::fixtures::named_poset(name) {
        return Ok(emit_poset(&p));
    }
    if let Ok((pname, rows)) = posemigroup::fixtures::named_table(name) {
        let p = posemigroup::fixtures::named_poset(pname).unwrap();
        let op = BandOp::new(p.n(), rows).expect("fixture tables are closed");
        return Ok(emit_band(&op));
    }
    anyhow::bail!("unknown fixture `{name}`; see `posemigroup fixtures list`")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}
