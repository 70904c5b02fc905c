//! `redwords`: sample reduced words with probability proportional to their
//! Macdonald weight, check the weighted-count identities, and export the
//! growth graph.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 for bad input or a
//! request beyond the configured bounds.

use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use redwords::lambda::{build_lambda_x_bounded, DEFAULT_MAX_CELLS};
use redwords::oracle::{verify_fk, verify_macdonald, MAX_RPP_X, MAX_VERIFY_CELLS};
use redwords::render::{
    crossing_histogram, crossings_csv, halfway_permutation, render_matrix_scatter,
    render_wiring_ascii, render_wiring_svg, ScatterFormat, WiringOptions,
};
use redwords::{Chain, Error, Partition, Sampler, StandardTableau, Validation};

/// Largest path the `--path` dump writes; the dump is quadratic in length.
const MAX_PATH_DUMP: usize = 2000;

#[derive(Parser)]
#[command(
    name = "redwords",
    version,
    about = "Reduced words, Little bumps and Macdonald-weighted sampling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one reduced word of a dominant permutation.
    #[command(group(ArgGroup::new("target").args(["shape", "reverse"])))]
    Sample {
        /// Shape as comma-separated parts, e.g. 2,2,1.
        #[arg(long)]
        shape: Option<String>,
        /// Sample a reduced word of the longest permutation of S_N.
        #[arg(long, value_name = "N")]
        reverse: Option<usize>,
        /// `row-major` or a JSON file holding the rows of a standard tableau.
        #[arg(long, default_value = "row-major")]
        tableau: String,
        /// Seed for the generator; a fresh one is chosen and reported if absent.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutFormat::Tuple)]
        out: OutFormat,
        #[arg(long, value_enum, default_value_t = ValidateArg::Final)]
        validate: ValidateArg,
        /// Write an SVG wiring diagram.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Wires to draw in the SVG, comma-separated; all wires if absent.
        #[arg(long, value_name = "LIST")]
        wires: Option<String>,
        /// Write an ASCII wiring diagram (at most 40 wires).
        #[arg(long, value_name = "FILE")]
        ascii: Option<PathBuf>,
        /// Write the permutation after half the crossings; CSV if the name
        /// ends in .csv, SVG otherwise.
        #[arg(long, value_name = "FILE")]
        scatter: Option<PathBuf>,
        /// Write binned crossing counts as CSV.
        #[arg(long, value_name = "FILE")]
        histogram: Option<PathBuf>,
        /// Histogram bins as POSITIONS,HEIGHTS.
        #[arg(long, default_value = "50,50")]
        bins: String,
        /// Write every crossing as a position,height CSV line.
        #[arg(long, value_name = "FILE")]
        crossings: Option<PathBuf>,
        /// Write the whole growth path as JSON.
        #[arg(long, value_name = "FILE")]
        path: Option<PathBuf>,
    },
    /// Check the weighted reduced-word identities on every shape up to a size.
    #[command(group(ArgGroup::new("identity").args(["macdonald", "fk"]).required(true)))]
    Verify {
        /// Σ μ(a) = k!.
        #[arg(long)]
        macdonald: bool,
        /// Σ Π (x + a_t) = k! · rpp(λ, x).
        #[arg(long, value_name = "X")]
        fk: Option<u64>,
        #[arg(long, value_name = "K", default_value_t = 6)]
        max_cells: usize,
    },
    /// Export the growth graph of a tableau.
    #[command(group(ArgGroup::new("target").args(["shape", "reverse"])))]
    Graph {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_name = "N")]
        reverse: Option<usize>,
        #[arg(long, default_value = "row-major")]
        tableau: String,
        /// Shift: edges at top gaps get multiplicity 1 + X.
        #[arg(long, default_value_t = 0)]
        x: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(long, value_name = "K", default_value_t = DEFAULT_MAX_CELLS)]
        max_cells: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    /// `(3,1,2,1)`
    Tuple,
    /// `3 1 2 1`
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValidateArg {
    None,
    Final,
    Every,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

/// An error with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::LambdaXMismatch { .. } => Failure::check(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sample {
            shape,
            reverse,
            tableau,
            seed,
            out,
            validate,
            svg,
            wires,
            ascii,
            scatter,
            histogram,
            bins,
            crossings,
            path,
        } => (|| {
            let tableau = resolve_tableau(shape.as_deref(), reverse, &tableau)?;
            let outputs = Outputs {
                svg,
                wires,
                ascii,
                scatter,
                histogram,
                bins,
                crossings,
                path,
            };
            sample(&tableau, seed, out, validate, &outputs)
        })(),
        Command::Verify {
            macdonald,
            fk,
            max_cells,
        } => verify(if macdonald { None } else { fk }, max_cells),
        Command::Graph {
            shape,
            reverse,
            tableau,
            x,
            format,
            max_cells,
        } => resolve_tableau(shape.as_deref(), reverse, &tableau)
            .and_then(|t| graph(&t, x, format, max_cells)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::usage(format!("bad {what} {text:?}")))
}

/// The tableau to grow along. `--shape`/`--reverse` give the shape; a
/// tableau file may stand alone or must match it.
fn resolve_tableau(
    shape: Option<&str>,
    reverse: Option<usize>,
    tableau: &str,
) -> Result<StandardTableau, Failure> {
    let shape = match (shape, reverse) {
        (Some(s), _) => Some(s.parse::<Partition>()?),
        (None, Some(0)) => return Err(Failure::usage("--reverse needs N >= 1")),
        (None, Some(n)) => Some(Partition::staircase(n)),
        (None, None) => None,
    };
    if tableau == "row-major" {
        let shape =
            shape.ok_or_else(|| Failure::usage("give --shape, --reverse or a tableau file"))?;
        return Ok(StandardTableau::row_major(&shape));
    }
    let text =
        fs::read_to_string(tableau).map_err(|e| Failure::usage(format!("{tableau}: {e}")))?;
    let t: StandardTableau =
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{tableau}: {e}")))?;
    if let Some(shape) = shape {
        if t.shape() != shape {
            return Err(Failure::usage(format!(
                "tableau has shape {}, not {shape}",
                t.shape()
            )));
        }
    }
    Ok(t)
}

struct Outputs {
    svg: Option<PathBuf>,
    wires: Option<String>,
    ascii: Option<PathBuf>,
    scatter: Option<PathBuf>,
    histogram: Option<PathBuf>,
    bins: String,
    crossings: Option<PathBuf>,
    path: Option<PathBuf>,
}

/// Writes to stdout; a reader that stops early is not an error.
fn emit(text: &str) -> Result<(), Failure> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            Err(Failure::usage(format!("stdout: {e}")))
        }
        _ => Ok(()),
    }
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn sample(
    tableau: &StandardTableau,
    seed: Option<u64>,
    out: OutFormat,
    validate: ValidateArg,
    outputs: &Outputs,
) -> Result<(), Failure> {
    let seed = seed.unwrap_or_else(|| {
        let s = rand::random::<u64>();
        eprintln!("seed: {s}");
        s
    });
    let chain = Chain::new(tableau)?;
    let validation = match validate {
        ValidateArg::None => Validation::None,
        ValidateArg::Final => Validation::Final,
        ValidateArg::Every => Validation::EveryStep,
    };
    let sampler = Sampler::new(&chain).with_validation(validation);
    let word = if let Some(file) = &outputs.path {
        if chain.len() > MAX_PATH_DUMP {
            return Err(Failure::usage(format!(
                "--path is limited to {MAX_PATH_DUMP} cells, the shape has {}",
                chain.len()
            )));
        }
        let path = sampler.sample_path(seed)?;
        let json =
            serde_json::to_string_pretty(&path).map_err(|e| Failure::usage(e.to_string()))?;
        write(file, &json)?;
        path.final_word().clone()
    } else {
        sampler.sample(seed)?
    };

    match out {
        OutFormat::Tuple => emit(&format!("{}\n", word.to_tuple_string()))?,
        OutFormat::Text => emit(&format!("{word}\n"))?,
        OutFormat::Json => {
            let value = serde_json::json!({
                "shape": tableau.shape(),
                "tableau": tableau,
                "seed": seed,
                "length": word.len(),
                "reduced": word.is_reduced(),
                "word": word,
            });
            emit(&format!("{value}\n"))?;
        }
    }

    let n = chain.ambient();
    if let Some(file) = &outputs.svg {
        let selected = outputs
            .wires
            .as_deref()
            .map(|w| parse_list(w, "wire list"))
            .transpose()?;
        let opts = WiringOptions {
            wires: Some(n),
            selected,
            ..Default::default()
        };
        write(file, &render_wiring_svg(&word, &opts)?)?;
    }
    if let Some(file) = &outputs.ascii {
        let opts = WiringOptions {
            wires: Some(n),
            ..Default::default()
        };
        write(file, &render_wiring_ascii(&word, &opts)?)?;
    }
    if let Some(file) = &outputs.scatter {
        let half = halfway_permutation(&word)?.extend_to(n)?;
        let format = if file.extension().is_some_and(|e| e == "csv") {
            ScatterFormat::Csv
        } else {
            ScatterFormat::Svg
        };
        write(file, &render_matrix_scatter(&half, format, 4))?;
    }
    if let Some(file) = &outputs.histogram {
        let bins = parse_list(&outputs.bins, "bins")?;
        let [p, h] = bins[..] else {
            return Err(Failure::usage("--bins takes POSITIONS,HEIGHTS"));
        };
        write(file, &crossing_histogram(&word, p, h)?.to_csv())?;
    }
    if let Some(file) = &outputs.crossings {
        write(file, &crossings_csv(&word))?;
    }
    Ok(())
}

fn verify(fk: Option<u64>, max_cells: usize) -> Result<(), Failure> {
    if max_cells > MAX_VERIFY_CELLS {
        return Err(Failure::usage(format!(
            "--max-cells {max_cells} exceeds the limit of {MAX_VERIFY_CELLS}"
        )));
    }
    if fk.is_some_and(|x| x > MAX_RPP_X) {
        return Err(Failure::usage(format!("--fk is limited to {MAX_RPP_X}")));
    }
    let mut failures = 0;
    let mut total = 0;
    for shape in Partition::all_up_to(max_cells)
        .into_iter()
        .filter(|s| !s.is_empty())
    {
        let report = match fk {
            Some(x) => verify_fk(&shape, x)?,
            None => verify_macdonald(&shape)?,
        };
        total += 1;
        if !report.pass {
            failures += 1;
        }
        let line = serde_json::to_string(&report).map_err(|e| Failure::usage(e.to_string()))?;
        emit(&format!("{line}\n"))?;
    }
    eprintln!("{} of {total} shapes pass", total - failures);
    if failures > 0 {
        return Err(Failure::check(format!("{failures} shapes fail")));
    }
    Ok(())
}

fn graph(
    tableau: &StandardTableau,
    x: u64,
    format: GraphFormat,
    max_cells: usize,
) -> Result<(), Failure> {
    let g = build_lambda_x_bounded(tableau, x, max_cells)?;
    match format {
        GraphFormat::Dot => emit(&g.to_dot()?),
        GraphFormat::Json => emit(&format!("{}\n", g.to_json()?)),
    }
}
