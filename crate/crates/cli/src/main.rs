//! Command-line front end: fusion rules, braiding signs, free Lie pieces,
//! contragredient algebras, the gl(L_2) scan and the verification suite.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 for invalid
//! flags or parameters, 3 when the dimension budget is exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use verlie::contragredient::{
    datum_from_cartan_matrix, datum_gl_chain, datum_over_gl2, datum_over_one, datum_over_sl2, report, scan_gl2,
    ContragredientDatum, ReportOptions, DEFAULT_ENGINE_BUDGET, DEFAULT_MAX_DEGREE,
};
use verlie::free_lie::flie_piece;
use verlie::verify::{self, KNOWN_FAILURES};
use verlie::verp::{format_mult, format_signs, fusion_rule, self_braiding_signs, VerObject};
use verlie::{Error, Result};

#[derive(Parser)]
#[command(name = "verlie", version, about = "Exact computations in the Verlinde category Ver_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Torus {
    One,
    Sl2,
    Gl2,
    GlChain,
    Cartan,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
}

#[derive(Subcommand)]
enum Command {
    /// Decomposes L_i ⊗ L_j, or prints the whole table when i and j are omitted.
    Fusion {
        #[arg(long)]
        p: u32,
        #[arg(long, requires = "j")]
        i: Option<usize>,
        #[arg(long, requires = "i")]
        j: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Signs of the self-braiding of L_i on the summands L_1, L_3, ….
    Braid {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The degree-n piece of the free Lie algebra on L_k.
    Flie {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Computes g(ρ, d) for a catalog datum.
    Contragredient {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum)]
        torus: Torus,
        /// V = L_k for the tori one, sl2 and gl2.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        atilde: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        btilde: i64,
        /// Simple types of the chain for gl_chain, e.g. "1,2,1".
        #[arg(long, value_delimiter = ',')]
        simples: Vec<usize>,
        /// Use sl instead of gl for gl_chain.
        #[arg(long)]
        special: bool,
        /// Cartan matrix rows separated by ';', e.g. "2,-1;-1,2".
        #[arg(long, allow_hyphen_values = true)]
        cartan: Option<String>,
        /// Indices (from 0) of the odd simple roots.
        #[arg(long, value_delimiter = ',')]
        odd: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long, default_value_t = DEFAULT_ENGINE_BUDGET)]
        budget: usize,
        /// Skip the free Lie cross-checks.
        #[arg(long)]
        no_oracles: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Computes every normalized gl(L_2)-datum on L_k.
    Scan {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "gl2")]
        torus: Torus,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = DEFAULT_ENGINE_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Runs the verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: Suite,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<usize>,
        /// Exit with 0 when exactly the documented criteria fail.
        #[arg(long)]
        allow_known: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn print_value(format: Format, text: String, value: serde_json::Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{value}"),
    }
}

fn execute(command: Command) -> Result<ExitCode> {
    match command {
        Command::Fusion { p, i: Some(i), j: Some(j), format } => {
            let m = fusion_rule(p, i, j)?;
            print_value(format, format_mult(&m), json!({ "p": p, "i": i, "j": j, "mult": m }));
        }
        Command::Fusion { p, format, .. } => {
            verlie::ff_linalg::check_prime(p)?;
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for i in 1..p as usize {
                for j in i..p as usize {
                    let m = fusion_rule(p, i, j)?;
                    text.push(format!("L{i} ⊗ L{j} = {}", format_mult(&m)));
                    rows.push(json!({ "i": i, "j": j, "mult": m }));
                }
            }
            print_value(format, text.join("\n"), json!({ "p": p, "products": rows }));
        }
        Command::Braid { p, i, format } => {
            let s = self_braiding_signs(p, i)?;
            print_value(format, format_signs(&s), json!({ "p": p, "i": i, "signs": s }));
        }
        Command::Flie { p, k, degree, format } => {
            verlie::ff_linalg::check_prime(p)?;
            if k == 0 || k >= p as usize {
                return Err(Error::OutOfRange(format!("k = {k} must lie in 1..{p}")));
            }
            if degree == 0 {
                return Err(Error::OutOfRange("degree must be positive".into()));
            }
            let (_, obj) = flie_piece(&VerObject::simple(p, k), degree)?;
            let m = obj.mult().to_vec();
            print_value(format, format_mult(&m), json!({ "p": p, "k": k, "degree": degree, "mult": m }));
        }
        Command::Contragredient {
            p,
            torus,
            k,
            a,
            atilde,
            b,
            btilde,
            simples,
            special,
            cartan,
            odd,
            max_degree,
            budget,
            no_oracles,
            format,
        } => {
            let datum = build_datum(p, torus, k, (a, atilde, b, btilde), &simples, special, cartan.as_deref(), &odd)?;
            let opts = ReportOptions { max_degree, budget, oracles: !no_oracles, ..ReportOptions::default() };
            let r = report(&datum, &opts)?;
            match format {
                Format::Text => print!("{}", r.to_text()),
                Format::Json => println!("{}", r.to_json()),
            }
        }
        Command::Scan { p, torus, k, max_degree, budget, format } => {
            if !matches!(torus, Torus::Gl2) {
                return Err(Error::InvalidInput("only the gl2 scan is available".into()));
            }
            let s = scan_gl2(p, k, max_degree, budget)?;
            match format {
                Format::Text => print!("{}", s.to_text()),
                Format::Json => println!("{}", s.to_json()),
            }
        }
        Command::Verify { suite: Suite::Paper, criterion, allow_known } => {
            let outcomes = if criterion.is_empty() {
                verify::run_all()
            } else {
                criterion.iter().map(|&c| verify::run(c)).collect::<Result<Vec<_>>>()?
            };
            for o in &outcomes {
                println!("{}", o.line());
            }
            let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
            let tolerated = failed.iter().all(|id| allow_known && KNOWN_FAILURES.contains(id));
            let passed = outcomes.len() - failed.len();
            println!("{passed}/{} criteria pass", outcomes.len());
            if !tolerated {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn build_datum(
    p: u32,
    torus: Torus,
    k: Option<usize>,
    (a, atilde, b, btilde): (i64, i64, i64, i64),
    simples: &[usize],
    special: bool,
    cartan: Option<&str>,
    odd: &[usize],
) -> Result<ContragredientDatum> {
    let need_k = || k.ok_or_else(|| Error::InvalidInput("--k is required for this torus".into()));
    match torus {
        Torus::One => datum_over_one(p, need_k()?, a, b),
        Torus::Sl2 => datum_over_sl2(p, need_k()?, atilde, btilde),
        Torus::Gl2 => datum_over_gl2(p, need_k()?, a, atilde, b, btilde),
        Torus::GlChain => {
            if simples.is_empty() {
                return Err(Error::InvalidInput("--simples is required for gl_chain".into()));
            }
            Ok(datum_gl_chain(p, simples, special)?.datum)
        }
        Torus::Cartan => {
            let text = cartan.ok_or_else(|| Error::InvalidInput("--cartan is required for cartan".into()))?;
            let matrix = parse_cartan(text)?;
            let flags: Vec<bool> = (0..matrix.len()).map(|i| odd.contains(&i)).collect();
            Ok(datum_from_cartan_matrix(p, &matrix, &flags)?.datum)
        }
    }
}

/// Parses "2,-1;-1,2" into rows.
fn parse_cartan(text: &str) -> Result<Vec<Vec<i64>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|e| Error::InvalidInput(format!("Cartan entry {x:?}: {e}"))))
                .collect()
        })
        .collect()
}
