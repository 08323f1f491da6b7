//! Command-line driver: subcommands, validation, JSON reports and exit
//! codes (0 all verified, 1 a verification failed, 2 usage or I/O error).

pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::charp::{check_summand, MAX_TENSOR_DIM, SUPPORTED_PRIMES};
use crate::coeff::is_prime;
use crate::error::Error;
use crate::lie::{
    left_normed_product, lyndon_words, necklace_count, Alphabet, BracketCache, Letter, LieElement,
};
use crate::powers::{check_exactness, check_identity, division_audit, test_alphabet, Identity};
use crate::torsion::{
    a_alphabet, bp_freeness_check, metabelian_torsion_check, theorem_element, torsion_report,
    verify_theorem_degree, AGenerator, COMPOSITE_NOTE,
};

pub use parse::{parse_element, parse_expression, print_element, Expression};
pub use report::{emit_report, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "lie-torsion",
    version,
    about = "Exact computations in free Lie rings and their torsion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(tag = "name", rename_all = "camelCase")]
pub enum Command {
    /// Lyndon basis counts against the necklace formula; optionally reduce
    /// an expression to the basis.
    Lyndon(LyndonArgs),
    /// Seeded checks of the identities between power maps.
    Verify(VerifyArgs),
    /// Torsion of the augmentation quotients degree by degree.
    Torsion(TorsionArgs),
    /// The explicit torsion element for given p, s, t.
    Theorem(TheoremArgs),
    /// Direct-summand decomposition of the p-th tensor power over F_p.
    Summand(SummandArgs),
    /// Torsion, metabelian comparison and kernel freeness in one document.
    Report(ReportArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LyndonArgs {
    #[arg(long, default_value_t = 2)]
    pub rank: usize,
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
    /// Expression such as "[y,x,x] - 2*[x,[x,y]]" to reduce.
    #[arg(long)]
    pub expr: Option<String>,
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyArgs {
    /// One of wever, mu-lambda, eta-theta, antisymmetry, jacobi,
    /// embedding, equivariance, theta-well-defined, exactness, all.
    #[arg(long, default_value = "all")]
    pub identity: String,
    #[arg(long, default_value_t = 3)]
    pub c: usize,
    #[arg(long, default_value_t = 2)]
    pub rank: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Weight cut on the random elements.
    #[arg(long, default_value_t = 8)]
    pub max_degree: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorsionArgs {
    #[arg(long)]
    pub prime: usize,
    #[arg(long)]
    pub max_degree: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremArgs {
    #[arg(long)]
    pub prime: usize,
    #[arg(long, default_value_t = 0)]
    pub s: u32,
    #[arg(long, default_value_t = 0)]
    pub t: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SummandArgs {
    #[arg(long)]
    pub prime: u64,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
}

#[derive(Args, Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportArgs {
    #[arg(long)]
    pub prime: usize,
    #[arg(long)]
    pub max_degree: u32,
}

/// Largest degree accepted by the torsion-side subcommands.
pub const MAX_TORSION_DEGREE: u32 = 24;

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Usage> {
    Err(Usage(msg.into()))
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    run(&cli)
}

/// Runs one command, emits its report and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Lyndon(a) => lyndon(a),
        Command::Verify(a) => verify(a),
        Command::Torsion(a) => torsion(a),
        Command::Theorem(a) => theorem(a),
        Command::Summand(a) => summand(a),
        Command::Report(a) => full_report(a),
    };
    let (results, pass) = match outcome {
        Ok(r) => r,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let command = serde_json::to_value(&cli.command).expect("arguments serialize");
    let doc = ReportDocument::new(command, results, pass);
    if let Err(e) = emit_report(&doc, cli.out.as_deref()) {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if pass {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

type Outcome = Result<(Value, bool), Usage>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn lyndon(a: &LyndonArgs) -> Outcome {
    if a.rank == 0 {
        return usage("--rank must be positive");
    }
    let size = (a.rank as f64).powi(a.max_degree as i32);
    if size > 2e6 {
        return usage("--rank and --max-degree describe too many words");
    }
    let alphabet = Alphabet::standard(a.rank);
    let words = lyndon_words(&alphabet, a.max_degree, |_| 1);
    let counts: Vec<Value> = (1..=a.max_degree)
        .map(|n| {
            let count = words.iter().filter(|w| w.len() == n as usize).count();
            let expected = necklace_count(a.rank as u64, n);
            json!({
                "degree": n,
                "count": count,
                "necklace": expected.to_string(),
                "match": BigInt::from(count) == expected,
            })
        })
        .collect();
    let pass = counts.iter().all(|c| c["match"] == json!(true));
    let listed: Vec<Value> = words
        .iter()
        .take(500)
        .map(|w| json!({"word": alphabet.format_word(w.letters()), "bracketing": w.bracketing_string(&alphabet)}))
        .collect();
    let mut results = json!({
        "rank": a.rank,
        "maxDegree": a.max_degree,
        "counts": counts,
        "words": listed,
        "wordsTruncated": words.len() > 500,
    });
    if let Some(text) = &a.expr {
        let e = parse_element(text, &alphabet)?;
        results["expression"] = json!({
            "input": text,
            "normalForm": print_element(&e, &alphabet),
            "degree": e.degree()?,
        });
    }
    Ok((results, pass))
}

fn verify(a: &VerifyArgs) -> Outcome {
    if !(2..=8).contains(&a.c) {
        return usage("--c must lie in 2..=8");
    }
    if a.trials == 0 {
        return usage("--trials must be positive");
    }
    test_alphabet(a.rank)?;
    let (identities, exactness) = match a.identity.as_str() {
        "all" => (Identity::ALL.to_vec(), true),
        "exactness" => (Vec::new(), true),
        name => (vec![name.parse::<Identity>()?], false),
    };
    let reports = identities
        .into_iter()
        .map(|id| check_identity(id, a.c, a.rank, a.trials, a.seed, a.max_degree))
        .collect::<Result<Vec<_>, _>>()
        .map_err(Usage::from)?;
    let mut pass = reports.iter().all(|r| r.pass);
    let mut results = json!({ "identities": to_value(&reports) });
    if exactness {
        let r = check_exactness(a.c, &test_alphabet(a.rank)?, a.max_degree)?;
        pass &= r.pass;
        results["exactness"] = to_value(&r);
    }
    let audit = division_audit();
    pass &= audit.violations == 0;
    results["divisionAudit"] = to_value(&audit);
    Ok((results, pass))
}

fn check_degree_bound(d: u32) -> Result<(), Usage> {
    if d > MAX_TORSION_DEGREE {
        return usage(format!(
            "--max-degree above {MAX_TORSION_DEGREE} is not supported"
        ));
    }
    Ok(())
}

fn torsion(a: &TorsionArgs) -> Outcome {
    if a.prime < 2 {
        return usage("--prime must be at least 2");
    }
    check_degree_bound(a.max_degree)?;
    if !is_prime(a.prime as u64) {
        eprintln!("{COMPOSITE_NOTE}");
    }
    let table = torsion_report(a.prime, a.max_degree);
    Ok((to_value(&table), table.pass()))
}

/// A single left-normed monomial `±[a_1, ..., a_k]` equal to `e`, if any,
/// preferring coefficient `+1` and then the smallest word.
pub fn compact_left_normed(e: &LieElement<BigInt>, alphabet: &Alphabet) -> Option<String> {
    let mut contents = e.keys().map(|w| {
        w.letters()
            .iter()
            .copied()
            .sorted()
            .collect::<Vec<Letter>>()
    });
    let content = contents.next()?;
    if content.len() > 8 || contents.any(|c| c != content) {
        return None;
    }
    let mut cache = BracketCache::new();
    let mut negative = None;
    let k = content.len();
    for perm in content.iter().copied().permutations(k).unique().sorted() {
        let v = left_normed_product(&mut cache, &perm);
        let names = perm.iter().map(|&l| alphabet.name(l)).join(",");
        if &v == e {
            return Some(format!("[{names}]"));
        }
        if negative.is_none() && (v + e.clone()).is_zero() {
            negative = Some(format!("-[{names}]"));
        }
    }
    negative
}

fn theorem(a: &TheoremArgs) -> Outcome {
    if !is_prime(a.prime as u64) {
        return usage(format!("--prime {} is not prime", a.prime));
    }
    let degree = a.prime as u32 * (a.s + a.t + 2) + 2;
    check_degree_bound(degree)?;
    let alphabet = a_alphabet(a.s + a.t + 3);
    let u = AGenerator::new(a.s, a.t);
    let (element, integrality) = match theorem_element(a.prime, a.s, a.t) {
        Ok(e) => (Some(e), true),
        Err(Error::IntegralityViolated { .. }) => (None, false),
        Err(e) => return Err(e.into()),
    };
    let check = verify_theorem_degree(a.prime, degree);
    let flags = check.theorem.clone().expect("prime modulus");
    let pass = integrality && flags.pass();
    let results = json!({
        "prime": a.prime,
        "s": a.s,
        "t": a.t,
        "u": u.name(),
        "vx": u.times_x().name(),
        "vy": u.times_y().name(),
        "degree": degree,
        "leftNormed": element.as_ref().and_then(|e| compact_left_normed(e, &alphabet)),
        "lyndonForm": element.as_ref().map(|e| print_element(e, &alphabet)),
        "integralityPassed": integrality,
        "degreeCheck": to_value(&check),
    });
    Ok((results, pass))
}

fn summand(a: &SummandArgs) -> Outcome {
    if !SUPPORTED_PRIMES.contains(&a.prime) {
        return usage(format!("--prime must be one of {SUPPORTED_PRIMES:?}"));
    }
    if a.dim == 0
        || a.dim
            .checked_pow(a.prime as u32)
            .is_none_or(|n| n > MAX_TENSOR_DIM)
    {
        return usage(format!("--dim {} is too large for p = {}", a.dim, a.prime));
    }
    let r = check_summand(a.prime, a.dim)?;
    Ok((to_value(&r), r.pass))
}

fn full_report(a: &ReportArgs) -> Outcome {
    if a.prime < 2 {
        return usage("--prime must be at least 2");
    }
    check_degree_bound(a.max_degree)?;
    let table = torsion_report(a.prime, a.max_degree);
    let mut pass = table.pass();
    let mut results = json!({ "torsion": to_value(&table) });
    if is_prime(a.prime as u64) {
        let meta = table
            .degrees
            .iter()
            .filter(|r| r.theorem.as_ref().is_some_and(|t| t.count > 0))
            .map(|r| metabelian_torsion_check(a.prime, r.degree))
            .collect::<Result<Vec<_>, _>>()?;
        pass &= meta.iter().all(|m| m.pass);
        let bp = bp_freeness_check(a.prime, a.max_degree);
        pass &= bp.pass;
        results["metabelian"] = to_value(&meta);
        results["bpFreeness"] = to_value(&bp);
    } else {
        eprintln!("{COMPOSITE_NOTE}");
    }
    let audit = division_audit();
    pass &= audit.violations == 0;
    results["divisionAudit"] = to_value(&audit);
    Ok((results, pass))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_theorem_element() {
        let alphabet = a_alphabet(3);
        let e = theorem_element(3, 0, 0).unwrap();
        assert_eq!(
            compact_left_normed(&e, &alphabet).as_deref(),
            Some("[u(0,1),u(1,0),u(0,0)]")
        );
        let e = theorem_element(2, 0, 0).unwrap();
        assert_eq!(
            compact_left_normed(&e, &alphabet).as_deref(),
            Some("[u(0,1),u(1,0)]")
        );
    }

    #[test]
    fn flag_validation_gives_usage_code() {
        assert_eq!(
            main_with_args(["lie-torsion", "theorem", "--prime", "4"]),
            EXIT_USAGE
        );
        assert_eq!(
            main_with_args(["lie-torsion", "summand", "--prime", "17"]),
            EXIT_USAGE
        );
        assert_eq!(main_with_args(["lie-torsion", "torsion"]), EXIT_USAGE);
        assert_eq!(main_with_args(["lie-torsion", "bogus"]), EXIT_USAGE);
    }

    #[test]
    fn command_echo() {
        let cli = Cli::try_parse_from([
            "lie-torsion",
            "torsion",
            "--prime",
            "2",
            "--max-degree",
            "6",
        ])
        .unwrap();
        assert_eq!(
            serde_json::to_value(&cli.command).unwrap(),
            json!({"name": "torsion", "prime": 2, "maxDegree": 6})
        );
    }
}
