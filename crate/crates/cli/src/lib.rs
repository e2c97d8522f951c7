//! Command implementations behind the `gf2codes` binary.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use gf2codes::moments::{feasibility_check, moment_identities_check, Evidence, StarBounds};
use gf2codes::prover::{
    verify_main_bound, verify_three_weight_bound, verify_two_weight_bound, ProofReport,
};
use gf2codes::search::{max_dimension_exhaustive, DEFAULT_NODE_CAP};
use gf2codes::text::{format_matrix, parse_matrix};
use gf2codes::transforms::{project_with_kernel, shorten};
use gf2codes::{Gf2Matrix, Gf2Vector, LinearCode, WeightEnumerator, DEFAULT_ENUMERATION_CAP};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "gf2codes",
    version,
    about = "Exact analysis of binary linear codes"
)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest dimension whose codewords may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight distribution, dual distribution and predicates of a code.
    Analyze { file: PathBuf },
    /// Generator matrix of the dual code.
    Dual { file: PathBuf },
    /// Project away from the support of a codeword.
    Project {
        file: PathBuf,
        /// Generator row index, or an explicit codeword as a bit string.
        #[arg(long)]
        word: String,
    },
    /// Keep the words vanishing on the given coordinates, then delete them.
    Shorten {
        file: PathBuf,
        /// Comma-separated 0-based coordinates.
        #[arg(long, value_delimiter = ',', required = true)]
        coords: Vec<usize>,
    },
    /// Check the four power-moment identities.
    Moments { file: PathBuf },
    /// Decide whether the moment identities admit counts for a weight set.
    Feasibility(FeasibilityArgs),
    /// Replay a proof.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Largest code whose nonzero weights lie in a set, by exhaustive search.
    Search {
        #[arg(long)]
        n: usize,
        /// Comma-separated allowed weights; may be empty.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        weights: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: u64,
    },
}

#[derive(Debug, Args)]
pub struct FeasibilityArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub d: u64,
    /// Comma-separated weights; may be empty.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub weights: Vec<u64>,
    #[arg(long, default_value_t = 0)]
    pub a2_min: u64,
    #[arg(long)]
    pub a2_max: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub a3_min: u64,
    #[arg(long)]
    pub a3_max: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Weights {24, 32}: dimension at most 9.
    #[command(name = "lemma-2-6")]
    TwoWeight {
        #[arg(long, default_value_t = 10)]
        d: u64,
        /// Inclusive range `A..B`.
        #[arg(long, default_value = "1..128", value_parser = parse_range)]
        n_range: (u64, u64),
    },
    /// Weights {24, 32, 56}: dimension at most 10.
    #[command(name = "lemma-24-32-56")]
    ThreeWeight,
    /// Weights {24, 32, 40, 56} in F^66: dimension at most 12.
    #[command(name = "theorem-a")]
    Main,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// The JSON envelope of every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: Value,
    pub payload: Value,
    pub version: String,
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub document: ReportDocument,
    pub text: String,
    /// False when a verification ran and failed.
    pub passed: bool,
}

/// Bad input: exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<gf2codes::Error> for InputError {
    fn from(e: gf2codes::Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

pub fn execute(cli: &Cli) -> CmdResult {
    let cap = cli.cap;
    match &cli.command {
        Command::Analyze { file } => analyze(file, cap),
        Command::Dual { file } => dual(file, cap),
        Command::Project { file, word } => project(file, word, cap),
        Command::Shorten { file, coords } => shorten_cmd(file, coords, cap),
        Command::Moments { file } => moments(file, cap),
        Command::Feasibility(args) => feasibility(args),
        Command::Verify { target } => verify(target),
        Command::Search {
            n,
            weights,
            node_cap,
        } => search(*n, weights, *node_cap),
    }
}

fn doc(command: &str, inputs: Value, payload: Value) -> ReportDocument {
    ReportDocument {
        command: command.into(),
        inputs,
        payload,
        version: VERSION.into(),
    }
}

fn read_code(path: &Path) -> Result<LinearCode, InputError> {
    let text =
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let m = parse_matrix(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(LinearCode::from_rows(&m))
}

fn rows_json(m: &Gf2Matrix) -> Value {
    json!(m.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>())
}

fn counts_json(we: &WeightEnumerator) -> Value {
    json!(we
        .counts()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>())
}

fn support_line(we: &WeightEnumerator) -> String {
    we.support()
        .iter()
        .map(|(w, c)| format!("{w}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn file_inputs(file: &Path, cap: usize) -> Value {
    json!({ "file": file.display().to_string(), "cap": cap })
}

fn analyze(file: &Path, cap: usize) -> CmdResult {
    let code = read_code(file)?;
    let (n, d) = (code.ambient_length(), code.dimension());
    let we = code.weight_distribution_with_cap(cap)?;
    let dual = we.macwilliams_transform(d)?;
    let profile = code.predicate_profile();
    let all_ones = code.contains(&Gf2Vector::ones(n))?;
    let weights = we.nonzero_weights();

    let mut text = String::new();
    writeln!(text, "n={n} k={d} length={}", code.length()).unwrap();
    writeln!(
        text,
        "weights: {}",
        join(std::iter::once(0).chain(weights.iter().copied()))
    )
    .unwrap();
    writeln!(text, "distribution (weight:count): {}", support_line(&we)).unwrap();
    writeln!(
        text,
        "dual distribution (weight:count): {}",
        support_line(&dual)
    )
    .unwrap();
    writeln!(
        text,
        "even={} doubly_even={} isotropic={} self_dual={} spanning={}",
        profile.is_even,
        profile.is_doubly_even,
        profile.is_isotropic,
        profile.is_self_dual,
        profile.is_spanning
    )
    .unwrap();
    write!(text, "contains all-ones: {all_ones}").unwrap();

    let payload = json!({
        "n": n,
        "dimension": d,
        "length": code.length(),
        "distribution": counts_json(&we),
        "dual_distribution": counts_json(&dual),
        "nonzero_weights": weights,
        "profile": profile,
        "contains_all_ones": all_ones,
    });
    Ok(Outcome {
        document: doc("analyze", file_inputs(file, cap), payload),
        text,
        passed: true,
    })
}

fn join<T: ToString>(xs: impl Iterator<Item = T>) -> String {
    xs.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn dual(file: &Path, cap: usize) -> CmdResult {
    let code = read_code(file)?;
    let dual = code.dual();
    let text = format!(
        "# dual: n={} k={}\n{}",
        dual.ambient_length(),
        dual.dimension(),
        format_matrix(dual.generator())
    );
    let payload = json!({
        "n": dual.ambient_length(),
        "dimension": dual.dimension(),
        "rows": rows_json(dual.generator()),
    });
    Ok(Outcome {
        document: doc("dual", file_inputs(file, cap), payload),
        text: text.trim_end().to_string(),
        passed: true,
    })
}

fn parse_word(code: &LinearCode, word: &str) -> Result<Gf2Vector, InputError> {
    let bits = word.len() == code.ambient_length() && word.chars().all(|c| c == '0' || c == '1');
    if let (false, Ok(i)) = (bits, word.parse::<usize>()) {
        return code.generator().rows().get(i).cloned().ok_or_else(|| {
            InputError(format!(
                "row index {i} out of range: the generator has {} rows",
                code.dimension()
            ))
        });
    }
    let v = Gf2Vector::parse_bits(word)?;
    if v.len() != code.ambient_length() {
        return Err(InputError(format!(
            "word has length {}, the code has length {}",
            v.len(),
            code.ambient_length()
        )));
    }
    if !code.contains(&v)? {
        return Err(InputError(format!("{word} is not a codeword")));
    }
    Ok(v)
}

fn project(file: &Path, word: &str, cap: usize) -> CmdResult {
    let code = read_code(file)?;
    let w = parse_word(&code, word)?;
    let p = project_with_kernel(&code, &w)?;
    let d = code.dimension();
    let note = if p.kernel_dimension == 1 {
        format!(
            "dimension {} = d - 1: w is not a sum of two disjoint nonzero codewords",
            d - 1
        )
    } else {
        format!(
            "dimension {} = d - {}: codewords other than 0 and w lie inside Supp(w)",
            p.code.dimension(),
            p.kernel_dimension
        )
    };
    let text = format!(
        "# projection away from {w}: n={} k={}\n# {note}\n{}",
        p.code.ambient_length(),
        p.code.dimension(),
        format_matrix(p.code.generator())
    );
    let mut inputs = file_inputs(file, cap);
    inputs["word"] = json!(word);
    let payload = json!({
        "word": w.to_string(),
        "n": p.code.ambient_length(),
        "dimension": p.code.dimension(),
        "kernel_dimension": p.kernel_dimension,
        "note": note,
        "rows": rows_json(p.code.generator()),
    });
    Ok(Outcome {
        document: doc("project", inputs, payload),
        text: text.trim_end().to_string(),
        passed: true,
    })
}

fn shorten_cmd(file: &Path, coords: &[usize], cap: usize) -> CmdResult {
    let code = read_code(file)?;
    let s = shorten(&code, coords)?;
    let text = format!(
        "# shortened: n={} k={} (from k={})\n{}",
        s.ambient_length(),
        s.dimension(),
        code.dimension(),
        format_matrix(s.generator())
    );
    let mut inputs = file_inputs(file, cap);
    inputs["coords"] = json!(coords);
    let payload = json!({
        "n": s.ambient_length(),
        "dimension": s.dimension(),
        "codimension": code.dimension() - s.dimension(),
        "rows": rows_json(s.generator()),
    });
    Ok(Outcome {
        document: doc("shorten", inputs, payload),
        text: text.trim_end().to_string(),
        passed: true,
    })
}

fn moments(file: &Path, cap: usize) -> CmdResult {
    let code = read_code(file)?;
    let r = moment_identities_check(&code, cap)?;
    let mut text = format!("n={} k={} a2*={} a3*={}\n", r.n, r.d, r.a2_star, r.a3_star);
    for c in &r.identities {
        writeln!(
            text,
            "identity {}: sum i^{} a_i = {}, rhs = {} ({})",
            c.power,
            c.power,
            c.lhs,
            gf2codes::exact::fmt_rational(&c.rhs),
            if c.holds { "holds" } else { "FAILS" }
        )
        .unwrap();
    }
    Ok(Outcome {
        document: doc(
            "moments",
            file_inputs(file, cap),
            serde_json::to_value(&r).expect("serializable"),
        ),
        text: text.trim_end().to_string(),
        passed: r.all_hold(),
    })
}

fn feasibility(a: &FeasibilityArgs) -> CmdResult {
    let bounds = StarBounds {
        a2_min: a.a2_min,
        a2_max: a.a2_max,
        a3_min: a.a3_min,
        a3_max: a.a3_max,
    };
    let v = feasibility_check(a.n, a.d, &a.weights, bounds)?;
    let mut text = format!(
        "n={} d={} W={:?}: {:?}\n",
        a.n, a.d, v.solution.weights, v.status
    );
    for (w, e) in v.solution.weights.iter().zip(&v.solution.expressions) {
        writeln!(text, "a_{w} = {e}").unwrap();
    }
    match &v.evidence {
        Evidence::Witness(x) => {
            writeln!(text, "witness: a2*={} a3*={}", x.a2_star, x.a3_star).unwrap();
            for (w, c) in x.weights.iter().zip(&x.counts) {
                writeln!(text, "  a_{w} = {c}").unwrap();
            }
        }
        Evidence::Certificate(c) => {
            let reason = serde_json::to_value(v.reason).expect("serializable");
            writeln!(text, "reason: {}", reason.as_str().unwrap_or_default()).unwrap();
            writeln!(text, "certificate: {} = {}", c.constraint, c.expression).unwrap();
            if let Some(val) = &c.value {
                writeln!(text, "  value: {val}").unwrap();
            }
            writeln!(text, "  {}", c.detail).unwrap();
        }
    }
    let inputs = json!({ "n": a.n, "d": a.d, "weights": a.weights, "bounds": bounds });
    Ok(Outcome {
        document: doc(
            "feasibility",
            inputs,
            serde_json::to_value(&v).expect("serializable"),
        ),
        text: text.trim_end().to_string(),
        passed: true,
    })
}

fn verify(target: &VerifyTarget) -> CmdResult {
    let (name, inputs, report): (&str, Value, ProofReport) = match target {
        VerifyTarget::TwoWeight { d, n_range } => (
            "lemma-2-6",
            json!({ "d": d, "n_range": [n_range.0, n_range.1] }),
            verify_two_weight_bound(*d, n_range.0..=n_range.1),
        ),
        VerifyTarget::ThreeWeight => ("lemma-24-32-56", json!({}), verify_three_weight_bound()),
        VerifyTarget::Main => ("theorem-a", json!({}), verify_main_bound()),
    };
    let mut all = inputs;
    all["target"] = json!(name);
    Ok(Outcome {
        text: report.to_string(),
        passed: report.overall,
        document: doc(
            "verify",
            all,
            serde_json::to_value(&report).expect("serializable"),
        ),
    })
}

fn search(n: usize, weights: &[usize], node_cap: u64) -> CmdResult {
    let r = max_dimension_exhaustive(n, weights, node_cap)?;
    let mut text = format!(
        "n={n} W={:?}: max dimension {}{}\nnodes explored: {}",
        r.weights,
        r.max_dimension,
        if r.complete {
            ""
        } else {
            " (lower bound: node cap reached)"
        },
        r.nodes_explored
    );
    if let Some(g) = &r.witness {
        write!(text, "\n# witness\n{}", format_matrix(g).trim_end()).unwrap();
    }
    let payload = json!({
        "n": r.n,
        "weights": r.weights,
        "max_dimension": r.max_dimension,
        "witness": r.witness.as_ref().map(rows_json),
        "nodes_explored": r.nodes_explored,
        "complete": r.complete,
    });
    Ok(Outcome {
        document: doc(
            "search",
            json!({ "n": n, "weights": weights, "node_cap": node_cap }),
            payload,
        ),
        text,
        passed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..128"), Ok((1, 128)));
        assert_eq!(parse_range("5..=9"), Ok((5, 9)));
        assert!(parse_range("9..5").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn document_round_trip() {
        let cli = Cli::parse_from(["gf2codes", "verify", "lemma-24-32-56"]);
        let out = execute(&cli).unwrap();
        let text = serde_json::to_string_pretty(&out.document).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, out.document);
    }
}
