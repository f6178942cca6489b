mod config;
mod input;
mod suites;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use affine_hecke::hecke::{dominant_decomposition, theta};
use affine_hecke::{CharacterSpec, HeckeElement, InducedModule};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use config::Config;

#[derive(Parser, Debug)]
#[command(name = "affine-hecke", version, about = "Exact computations in the C~n affine Hecke algebra")]
struct Cli {
    /// JSON file with default values for the flags below.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Compact JSON lines (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for verification suites.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Also write a picture of the rank-two alcoves to this path.
    #[arg(long, global = true, value_name = "PATH")]
    emit_alcove_svg: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical reduced word and lengths of an element.
    Reduce {
        #[arg(long)]
        rank: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Product T_a · T_b in the T-basis.
    Multiply {
        #[arg(long)]
        rank: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// The Bernstein element theta_lambda.
    Theta {
        #[arg(long)]
        rank: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Matrix of T_{s_i} on minimal coset representatives of bounded length.
    InduceMatrix {
        #[arg(long)]
        rank: Option<usize>,
        /// One of sgn', sgn, eps+, eps-.
        #[arg(long)]
        module: String,
        #[arg(long)]
        generator: usize,
        #[arg(long, default_value_t = 2)]
        max_length: usize,
    },
    /// Run verification suites and print one JSON result per suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(
            ["relations", "bernstein", "freeness", "homs", "folding", "finite-lemma", "gauss", "all"]
        ))]
        suite: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Coordinate range LO..HI of the lambda box.
        #[arg(long = "box", allow_hyphen_values = true)]
        box_: Option<String>,
        #[arg(long)]
        length_bound: Option<usize>,
        /// Comma-separated odd primes.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// Include wall-clock time in each result (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

const DEFAULT_RANK: usize = 2;
const DEFAULT_BOX: &str = "-2..2";
const DEFAULT_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", json!({ "error": msg }));
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(usage)?,
        None => Config::default(),
    };
    let pretty = cli.pretty || (!cli.json && config.pretty.unwrap_or(false));
    let emit = |v: &Value| {
        let text = if pretty {
            serde_json::to_string_pretty(v)
        } else {
            serde_json::to_string(v)
        };
        println!("{}", text.expect("JSON values serialize"));
    };
    if let Some(path) = cli
        .emit_alcove_svg
        .clone()
        .or_else(|| config.emit_alcove_svg.clone().map(PathBuf::from))
    {
        std::fs::write(&path, svg::alcove_svg())
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    let rank_or_default = |rank: Option<usize>| rank.or(config.rank).unwrap_or(DEFAULT_RANK);
    let check_rank = |rank: usize| {
        if rank == 0 {
            Err(usage("rank must be at least 1"))
        } else {
            Ok(rank)
        }
    };

    match cli.command {
        Command::Reduce { rank, element } => {
            let rank = check_rank(rank_or_default(rank))?;
            let g = input::parse_element(&element, rank).map_err(usage)?;
            emit(&json!({
                "element": g,
                "reduced_word": g.reduced_word(),
                "length": g.length(),
                "weighted_length": g.weighted_length(),
                "in_affine_subgroup": g.in_affine_subgroup(),
            }));
        }
        Command::Multiply { rank, left, right } => {
            let rank = check_rank(rank_or_default(rank))?;
            let a = input::parse_element(&left, rank).map_err(usage)?;
            let b = input::parse_element(&right, rank).map_err(usage)?;
            let product = HeckeElement::basis(&a)
                .multiply(&HeckeElement::basis(&b))
                .map_err(|e| usage(e.to_string()))?;
            emit(&product.to_json());
        }
        Command::Theta { rank, lambda } => {
            let lambda = input::parse_ints(&lambda).map_err(usage)?;
            let rank = check_rank(rank.unwrap_or(lambda.len()))?;
            if lambda.len() != rank {
                return Err(usage(format!("lambda has {} coordinates, rank is {rank}", lambda.len())));
            }
            let (mu, nu) = dominant_decomposition(&lambda);
            let th: HeckeElement = theta(&lambda);
            emit(&json!({"lambda": lambda, "mu": mu, "nu": nu, "theta": th.to_json()}));
        }
        Command::InduceMatrix {
            rank,
            module,
            generator,
            max_length,
        } => {
            let rank = check_rank(rank_or_default(rank))?;
            let chi = match module.as_str() {
                "sgn'" | "sgn-prime" => CharacterSpec::sgn_prime(rank),
                "sgn" => CharacterSpec::sgn(rank),
                "eps+" => CharacterSpec::epsilon(rank, true),
                "eps-" => CharacterSpec::epsilon(rank, false),
                other => return Err(usage(format!("unknown module {other:?}; use sgn', sgn, eps+ or eps-"))),
            };
            let m = InducedModule::new(chi).map_err(|e| usage(e.to_string()))?;
            let window = m.minimal_reps(max_length);
            let a = m.action_matrix(generator, &window).map_err(|e| usage(e.to_string()))?;
            emit(&json!({
                "module": {"J": m.parabolic().generators(), "character": m.character().name()},
                "generator": generator,
                "action": a.to_json(),
            }));
        }
        Command::Verify {
            suite,
            rank,
            box_,
            length_bound,
            primes,
            timing,
        } => {
            let rank = check_rank(rank_or_default(rank))?;
            let box_text = box_.or(config.box_.clone()).unwrap_or_else(|| DEFAULT_BOX.to_string());
            let (lo, hi) = input::parse_box(&box_text).map_err(usage)?;
            let primes = primes.or(config.primes.clone()).unwrap_or_else(|| DEFAULT_PRIMES.to_vec());
            if let Some(&bad) = primes.iter().find(|&&p| !affine_hecke::charsum::is_odd_prime(p)) {
                return Err(usage(format!("{bad} is not an odd prime")));
            }
            let jobs = cli.jobs.or(config.jobs).unwrap_or(1);
            if jobs == 0 {
                return Err(usage("--jobs must be at least 1"));
            }
            let params = suites::Params {
                rank,
                lo,
                hi,
                length_bound: length_bound.or(config.length_bound),
                primes,
                timing: timing || config.timing.unwrap_or(false),
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| usage(e.to_string()))?;
            let names: Vec<&str> = if suite == "all" {
                suites::ALL.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut all_pass = true;
            for name in names {
                let result = pool.install(|| suites::run(name, &params)).map_err(usage)?;
                all_pass &= result.pass;
                emit(&serde_json::to_value(&result).expect("serializable"));
            }
            if !all_pass {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
