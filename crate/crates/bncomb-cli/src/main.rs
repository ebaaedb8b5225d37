//! `bncomb`: batch command-line interface for exact hyperoctahedral
//! diagonal-coinvariant combinatorics.
//!
//! Subcommands:
//!
//! - `stats`: per-element statistics table for `B_n` (window, descents,
//!   major index, negatives, flag-major index, local degree vectors).
//! - `compactify`: reduce a diagram (two-line text or JSON, from a file or
//!   stdin) to its compact representative with the margin partitions.
//! - `straighten`: expand a monomial diagonal invariant in the compact
//!   basis, with an exactness certificate; optionally fuzz random inputs.
//! - `verify`: run the identity suites coefficient-exactly and emit a
//!   machine-readable report. Exit code 0 on pass, 1 on failure.
//! - `enumerate`: list group elements, diagrams, or compact diagrams.
//!
//! All output is byte-deterministic for a fixed invocation and seed. The
//! report is assembled in memory and written atomically, so downstream
//! pipes may close early without breaking the process.

#![forbid(unsafe_code)]

use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use bncomb::ediagrams::{compact_of_perm, phi, phi_inverse, EDiagram};
use bncomb::frobenius::{
    mult_graded, verify_corollary, verify_flip_symmetry, verify_genfunction, verify_ogenfunction,
    verify_psi_suite, verify_regular, verify_table3, VerifyReport,
};
use bncomb::group_core::{enumerate_bn, SignedPerm};
use bncomb::odiagrams::{compact_o_of_perm, phi_o, phi_o_inverse, psi, ODiagram};
use bncomb::polyring::{expand_straightened, monomial_invariant, straighten};
use bncomb::symfunc::{Coeff, Partition, QTSeries};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "bncomb",
    version,
    about = "Exact combinatorics of the diagonal hyperoctahedral action: \
             statistics, diagram compactification, straightening, and \
             identity verification."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable plain text.
    Text,
    /// Machine-readable JSON.
    Json,
    /// Comma-separated rows with a header.
    Csv,
    /// LaTeX fragments (two-line matrices, tabulars).
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Even-weight multiset diagrams (invariants).
    E,
    /// Odd-weight set diagrams (alternants).
    O,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Every suite below, at this `n` (clamped to per-suite caps).
    All,
    /// Census of e-diagrams vs. the closed product series.
    Genfunction,
    /// Census of o-diagrams vs. the closed product series.
    Ogenfunction,
    /// Degree reversal of graded multiplicities under label flip.
    Flip,
    /// Local degree vectors vs. flag-major statistics.
    Corollary,
    /// The frozen graded multiplicity table at n = 3.
    Table3,
    /// Regular-character decomposition into dimensions.
    Regular,
    /// Positivity of the normalized multiplicity polynomials.
    Psi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    /// Signed permutations of B_n.
    Group,
    /// All e-diagrams with entries up to --bound.
    Ediagrams,
    /// All o-diagrams with entries up to --bound.
    Odiagrams,
    /// The compact e-diagram of each group element.
    CompactE,
    /// The compact o-diagram of each group element.
    CompactO,
}

#[derive(Subcommand)]
enum Command {
    /// Per-element statistics table for B_n.
    Stats {
        /// Group size.
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reduce a diagram to its compact representative.
    Compactify {
        /// Diagram kind: e (invariants) or o (alternants).
        #[arg(long, value_enum, default_value_t = Kind::E)]
        kind: Kind,
        /// Input file (two-line text or JSON); stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Re-verify the decomposition by inverting it internally.
        #[arg(long)]
        self_check: bool,
    },
    /// Expand a monomial invariant in the compact basis.
    Straighten {
        /// Input file (two-line text or JSON); stdin when omitted.
        #[arg(long, conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Fuzz this many random diagrams instead of reading input.
        #[arg(long)]
        random: Option<u32>,
        /// Cell count for --random diagrams.
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Entry bound for --random diagrams.
        #[arg(long, default_value_t = 9)]
        bound: u32,
        /// RNG seed for --random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify identity suites; exit 0 iff all hold coefficient-exactly.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Group size (table3 is fixed at 3).
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Series window for the census suites; default 2n², must be ≥ n².
        #[arg(long)]
        trunc: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List group elements or diagrams.
    Enumerate {
        #[arg(long, value_enum)]
        what: What,
        /// Group size / cell count.
        #[arg(long)]
        n: u32,
        /// Entry bound (required for ediagrams/odiagrams).
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    };
    // One atomic write; a closed downstream pipe is not an error.
    let _ = std::io::stdout().write_all(out.as_bytes());
    code
}

/// Dispatches a parsed command, accumulating output into `out`. `Err`
/// means a usage or input problem (exit 2); `Ok` carries the final exit
/// code (0, or 1 for identity failures).
fn run(command: Command, out: &mut String) -> Result<ExitCode, String> {
    match command {
        Command::Stats { n, format } => cmd_stats(n, format, out),
        Command::Compactify {
            kind,
            input,
            format,
            self_check,
        } => cmd_compactify(kind, input.as_deref(), format, self_check, out),
        Command::Straighten {
            input,
            random,
            n,
            bound,
            seed,
            format,
        } => match random {
            Some(count) => cmd_straighten_random(count, n, bound, seed, format, out),
            None => cmd_straighten(input.as_deref(), format, out),
        },
        Command::Verify {
            suite,
            n,
            trunc,
            format,
        } => cmd_verify(suite, n, trunc, format, out),
        Command::Enumerate {
            what,
            n,
            bound,
            format,
        } => cmd_enumerate(what, n, bound, format, out),
    }
}

/// Appends one line to the output buffer (String writes cannot fail).
macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

/// Reads the whole input from a file, or from stdin when no path is given.
fn read_input(path: Option<&std::path::Path>) -> Result<String, String> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display())),
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| format!("reading stdin: {e}"))?;
            Ok(buffer)
        }
    }
}

fn parse_ediagram(text: &str) -> Result<EDiagram, String> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| format!("JSON input: {e}"))?;
        EDiagram::from_json(&value).map_err(|e| e.to_string())
    } else {
        EDiagram::parse_two_line(text).map_err(|e| e.to_string())
    }
}

fn parse_odiagram(text: &str) -> Result<ODiagram, String> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| format!("JSON input: {e}"))?;
        ODiagram::from_json(&value).map_err(|e| e.to_string())
    } else {
        ODiagram::parse_two_line(text).map_err(|e| e.to_string())
    }
}

/// Window entry in LaTeX: negatives as barred positives.
fn latex_entry(e: i32) -> String {
    if e < 0 {
        format!("\\bar{{{}}}", -e)
    } else {
        e.to_string()
    }
}

fn latex_window(beta: &SignedPerm) -> String {
    beta.window()
        .iter()
        .map(|&e| latex_entry(e))
        .collect::<Vec<_>>()
        .join("\\,")
}

/// A single-variable polynomial in `q`, ascending powers, as LaTeX.
fn latex_poly_q(series: &QTSeries) -> String {
    let one = Coeff::new(1.into(), 1.into());
    let mut parts = Vec::new();
    for (&(a, b), c) in series.terms() {
        assert_eq!(b, 0, "one-variable polynomial expected");
        let coeff = if c == &one && a > 0 {
            String::new()
        } else {
            c.to_string()
        };
        let power = match a {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{{{a}}}"),
        };
        parts.push(format!("{coeff}{power}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

/// Two-line diagram matrix as LaTeX.
fn latex_matrix(a_row: &[u32], b_row: &[u32]) -> String {
    let top: Vec<String> = a_row.iter().map(u32::to_string).collect();
    let bottom: Vec<String> = b_row.iter().map(u32::to_string).collect();
    format!(
        "\\begin{{pmatrix}} {} \\\\ {} \\end{{pmatrix}}",
        top.join(" & "),
        bottom.join(" & ")
    )
}

fn rows_of_e(d: &EDiagram) -> (Vec<u32>, Vec<u32>) {
    (
        d.cells().iter().map(|c| c.a).collect(),
        d.cells().iter().map(|c| c.b).collect(),
    )
}

fn rows_of_o(d: &ODiagram) -> (Vec<u32>, Vec<u32>) {
    (
        d.cells().iter().map(|c| c.a).collect(),
        d.cells().iter().map(|c| c.b).collect(),
    )
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_stats(n: u32, format: Format, out: &mut String) -> Result<ExitCode, String> {
    let group = enumerate_bn(n as usize).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    for beta in &group {
        let stats = beta.stats();
        let local = beta.local_vectors();
        rows.push((
            beta.clone(),
            stats.des.clone(),
            stats.maj,
            stats.neg,
            stats.fmaj,
            beta.inverse().fmaj(),
            local.g.clone(),
            local.g_hat.clone(),
        ));
    }
    match format {
        Format::Text => {
            for (beta, des, maj, neg, fmaj, fmaj_inv, g, g_hat) in &rows {
                let des_str: Vec<String> = des.iter().map(usize::to_string).collect();
                say!(
                    out,
                    "{beta} | des={{{}}} | maj={maj} | neg={neg} | fmaj={fmaj} | fmaj_inv={fmaj_inv} | g={} | ghat={}",
                    des_str.join(","),
                    join(g),
                    join(g_hat),
                );
            }
        }
        Format::Csv => {
            say!(out, "window,des,maj,neg,fmaj,fmaj_inv,g,g_hat");
            for (beta, des, maj, neg, fmaj, fmaj_inv, g, g_hat) in &rows {
                let des_str: Vec<String> = des.iter().map(usize::to_string).collect();
                say!(
                    out,
                    "{beta},{},{maj},{neg},{fmaj},{fmaj_inv},{},{}",
                    des_str.join(" "),
                    join(g),
                    join(g_hat),
                );
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(beta, des, maj, neg, fmaj, fmaj_inv, g, g_hat)| {
                    serde_json::json!({
                        "window": beta.window(),
                        "des": des,
                        "maj": maj,
                        "neg": neg,
                        "fmaj": fmaj,
                        "fmaj_inv": fmaj_inv,
                        "g": g,
                        "g_hat": g_hat,
                    })
                })
                .collect();
            say!(out, "{}", serde_json::Value::Array(items));
        }
        Format::Latex => {
            say!(out, "\\begin{{tabular}}{{llllllll}}");
            say!(
                out,
                "$\\beta$ & $\\mathrm{{Des}}$ & $\\mathrm{{maj}}$ & $\\mathrm{{neg}}$ & $\\mathrm{{fmaj}}$ & $\\mathrm{{fmaj}}(\\beta^{{-1}})$ & $g$ & $\\hat g$ \\\\"
            );
            for (beta, des, maj, neg, fmaj, fmaj_inv, g, g_hat) in &rows {
                let des_str: Vec<String> = des.iter().map(usize::to_string).collect();
                say!(
                    out,
                    "${}$ & $\\{{{}\\}}$ & {maj} & {neg} & {fmaj} & {fmaj_inv} & $({})$ & $({})$ \\\\",
                    latex_window(beta),
                    des_str.join(","),
                    join(g).replace(' ', ","),
                    join(g_hat).replace(' ', ","),
                );
            }
            say!(out, "\\end{{tabular}}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_compactify(
    kind: Kind,
    input: Option<&std::path::Path>,
    format: Format,
    self_check: bool,
    out: &mut String,
) -> Result<ExitCode, String> {
    let text = read_input(input)?;
    let (beta, a_row, b_row, lambda, mu, weight_ok, check_ok) = match kind {
        Kind::E => {
            let d = parse_ediagram(&text)?;
            let parts = phi(&d).map_err(|e| e.to_string())?;
            let beta = d.classifying_perm();
            let (wa, wb) = d.weight();
            let (ca, cb) = parts.compact.weight();
            let weight_ok = wa == ca + 2 * parts.lambda.size() && wb == cb + 2 * parts.mu.size();
            let check_ok = !self_check || {
                let back = phi_inverse(&parts).map_err(|e| e.to_string())?;
                let image = psi(&parts.compact).map_err(|e| e.to_string())?;
                back == d && image.colabel_classifying_perm() == beta
            };
            let (a_row, b_row) = rows_of_e(&parts.compact);
            (
                beta,
                a_row,
                b_row,
                parts.lambda,
                parts.mu,
                weight_ok,
                check_ok,
            )
        }
        Kind::O => {
            let d = parse_odiagram(&text)?;
            let parts = phi_o(&d).map_err(|e| e.to_string())?;
            let beta = d.colabel_classifying_perm();
            let (wa, wb) = d.weight();
            let (ca, cb) = parts.compact.weight();
            let weight_ok = wa == ca + 2 * parts.lambda.size() && wb == cb + 2 * parts.mu.size();
            let check_ok = !self_check || {
                let back = phi_o_inverse(&parts).map_err(|e| e.to_string())?;
                back == d && parts.compact.colabel_classifying_perm() == beta
            };
            let (a_row, b_row) = rows_of_o(&parts.compact);
            (
                beta,
                a_row,
                b_row,
                parts.lambda,
                parts.mu,
                weight_ok,
                check_ok,
            )
        }
    };
    emit_compact_report(
        format,
        &beta,
        &a_row,
        &b_row,
        &lambda,
        &mu,
        weight_ok,
        self_check.then_some(check_ok),
        out,
    );
    Ok(if weight_ok && check_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[allow(clippy::too_many_arguments)]
fn emit_compact_report(
    format: Format,
    beta: &SignedPerm,
    a_row: &[u32],
    b_row: &[u32],
    lambda: &Partition,
    mu: &Partition,
    weight_ok: bool,
    self_check: Option<bool>,
    out: &mut String,
) {
    match format {
        Format::Text => {
            say!(out, "beta: {beta}");
            say!(out, "compact:");
            say!(out, "{}", join(a_row));
            say!(out, "{}", join(b_row));
            say!(out, "lambda: {lambda}");
            say!(out, "mu: {mu}");
            say!(
                out,
                "weight check: {}",
                if weight_ok { "ok" } else { "FAILED" }
            );
            if let Some(ok) = self_check {
                say!(out, "self-check: {}", if ok { "ok" } else { "FAILED" });
            }
        }
        Format::Json => {
            let mut object = serde_json::json!({
                "beta": beta.to_string(),
                "compact": {"cells": a_row.iter().zip(b_row).map(|(&a, &b)| vec![a, b]).collect::<Vec<_>>()},
                "lambda": lambda.parts(),
                "mu": mu.parts(),
                "weight_check": weight_ok,
            });
            if let Some(ok) = self_check {
                object["self_check"] = serde_json::Value::Bool(ok);
            }
            say!(out, "{object}");
        }
        Format::Csv => {
            say!(
                out,
                "beta,compact_a,compact_b,lambda,mu,weight_check,self_check"
            );
            let lam: Vec<String> = lambda.parts().iter().map(u32::to_string).collect();
            let mus: Vec<String> = mu.parts().iter().map(u32::to_string).collect();
            say!(
                out,
                "{beta},{},{},{},{},{},{}",
                join(a_row),
                join(b_row),
                lam.join(" "),
                mus.join(" "),
                weight_ok,
                self_check.map_or(String::new(), |ok| ok.to_string()),
            );
        }
        Format::Latex => {
            say!(out, "$\\beta = {}$", latex_window(beta));
            say!(out, "$\\overline{{D}} = {}$", latex_matrix(a_row, b_row));
            say!(out, "$\\lambda = {lambda},\\quad \\mu = {mu}$");
        }
    }
}

/// Splits an exact rational into a sign marker and its magnitude string.
fn signed_parts(coeff: &Coeff) -> (bool, String) {
    let rendered = coeff.to_string();
    match rendered.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, rendered),
    }
}

/// Renders one straightened term for text/LaTeX output.
fn term_strings(
    lam: &Partition,
    mu: &Partition,
    beta: &SignedPerm,
    coeff: &Coeff,
    latex: bool,
) -> String {
    let (negative, magnitude) = signed_parts(coeff);
    if latex {
        let factor = if magnitude == "1" {
            String::new()
        } else {
            format!("{magnitude}\\,")
        };
        format!(
            "{}{factor}m_{{{lam}}}(x^2)\\, m_{{{mu}}}(y^2)\\, M_{{{}}}",
            if negative { "-" } else { "" },
            latex_window(beta)
        )
    } else {
        format!(
            "{}{magnitude} * m{lam}(x^2) m{mu}(y^2) M[{beta}]",
            if negative { "-" } else { "+" }
        )
    }
}

fn cmd_straighten(
    input: Option<&std::path::Path>,
    format: Format,
    out: &mut String,
) -> Result<ExitCode, String> {
    let text = read_input(input)?;
    let d = parse_ediagram(&text)?;
    let form = straighten(&d).map_err(|e| e.to_string())?;
    let certificate = expand_straightened(&form) == monomial_invariant(&d);
    let (a_row, b_row) = rows_of_e(&d);
    match format {
        Format::Text => {
            say!(out, "input:");
            say!(out, "{}", join(&a_row));
            say!(out, "{}", join(&b_row));
            say!(out, "terms:");
            for (lam, mu, beta, coeff) in form.terms() {
                say!(out, "{}", term_strings(lam, mu, beta, coeff, false));
            }
            say!(
                out,
                "certificate: {}",
                if certificate { "exact" } else { "FAILED" }
            );
        }
        Format::Json => {
            let object = serde_json::json!({
                "input": d.to_json(),
                "terms": form.to_json(),
                "certificate": certificate,
            });
            say!(out, "{object}");
        }
        Format::Csv => {
            say!(out, "coeff,lam,mu,beta");
            for (lam, mu, beta, coeff) in form.terms() {
                let lam_s: Vec<String> = lam.parts().iter().map(u32::to_string).collect();
                let mu_s: Vec<String> = mu.parts().iter().map(u32::to_string).collect();
                say!(out, "{coeff},{},{},{beta}", lam_s.join(" "), mu_s.join(" "));
            }
        }
        Format::Latex => {
            let mut line = format!("$M{} = ", latex_matrix(&a_row, &b_row));
            for (index, (lam, mu, beta, coeff)) in form.terms().iter().enumerate() {
                let rendered = term_strings(lam, mu, beta, coeff, true);
                if index == 0 {
                    let _ = write!(line, "{rendered}");
                } else if let Some(rest) = rendered.strip_prefix('-') {
                    let _ = write!(line, " - {rest}");
                } else {
                    let _ = write!(line, " + {rendered}");
                }
            }
            let _ = write!(line, "$");
            say!(out, "{line}");
            say!(
                out,
                "% certificate: {}",
                if certificate { "exact" } else { "FAILED" }
            );
        }
    }
    Ok(if certificate {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_straighten_random(
    count: u32,
    n: u32,
    bound: u32,
    seed: u64,
    format: Format,
    out: &mut String,
) -> Result<ExitCode, String> {
    if n == 0 {
        return Err("--n must be positive".to_string());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exact = 0u32;
    let mut lines = Vec::new();
    for index in 0..count {
        let cells: Vec<(u32, u32)> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0..=bound);
                let b_max = bound.saturating_sub(a % 2) / 2;
                let b = 2 * rng.gen_range(0..=b_max) + (a % 2);
                (a, b)
            })
            .collect();
        let a_row: Vec<u32> = cells.iter().map(|c| c.0).collect();
        let b_row: Vec<u32> = cells.iter().map(|c| c.1).collect();
        let d = EDiagram::from_rows(&a_row, &b_row).map_err(|e| e.to_string())?;
        let form = straighten(&d).map_err(|e| e.to_string())?;
        let certificate = expand_straightened(&form) == monomial_invariant(&d);
        if certificate {
            exact += 1;
        }
        let (sa, sb) = rows_of_e(&d);
        lines.push((index, join(&sa), join(&sb), form.terms().len(), certificate));
    }
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = lines
                .iter()
                .map(|(index, a, b, terms, cert)| {
                    serde_json::json!({
                        "index": index,
                        "a": a,
                        "b": b,
                        "terms": terms,
                        "certificate": cert,
                    })
                })
                .collect();
            say!(
                out,
                "{}",
                serde_json::json!({"seed": seed, "items": items, "exact": exact, "total": count})
            );
        }
        _ => {
            for (index, a, b, terms, cert) in &lines {
                say!(
                    out,
                    "#{index}: {a} / {b} -> {terms} terms, certificate {}",
                    if *cert { "exact" } else { "FAILED" }
                );
            }
            say!(out, "certificates: {exact}/{count} exact (seed {seed})");
        }
    }
    Ok(if exact == count {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Per-suite documented caps on `n` for explicit selection.
fn suite_cap(suite: Suite) -> u32 {
    match suite {
        Suite::Genfunction | Suite::Ogenfunction => 5,
        Suite::Flip | Suite::Corollary => 5,
        Suite::Table3 => 3,
        Suite::Regular => 6,
        Suite::Psi => 3,
        Suite::All => u32::MAX,
    }
}

fn run_suite(suite: Suite, n: u32, trunc: u32) -> VerifyReport {
    match suite {
        Suite::Genfunction => verify_genfunction(n, trunc),
        Suite::Ogenfunction => verify_ogenfunction(n, trunc),
        Suite::Flip => verify_flip_symmetry(n),
        Suite::Corollary => verify_corollary(n),
        Suite::Table3 => verify_table3(),
        Suite::Regular => verify_regular(n),
        Suite::Psi => verify_psi_suite(n),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn cmd_verify(
    suite: Suite,
    n: u32,
    trunc: Option<u32>,
    format: Format,
    out: &mut String,
) -> Result<ExitCode, String> {
    if n == 0 {
        return Err("--n must be positive".to_string());
    }
    let trunc = trunc.unwrap_or(2 * n * n);
    if trunc < n * n {
        return Err(format!("--trunc must be at least n^2 = {}", n * n));
    }
    let reports: Vec<VerifyReport> = match suite {
        Suite::All => {
            // Sub-suites run at their documented caps when n exceeds them;
            // reports carry the n actually used. Order: identity name.
            let members = [
                Suite::Corollary,
                Suite::Flip,
                Suite::Genfunction,
                Suite::Ogenfunction,
                Suite::Psi,
                Suite::Regular,
                Suite::Table3,
            ];
            members
                .iter()
                .map(|&member| {
                    let m = n.min(suite_cap(member));
                    let t = trunc.min(2 * m * m).max(m * m);
                    run_suite(member, m, t)
                })
                .collect()
        }
        _ => {
            if n > suite_cap(suite) {
                return Err(format!(
                    "--n exceeds the documented cap {} for this suite",
                    suite_cap(suite)
                ));
            }
            vec![run_suite(suite, n, trunc)]
        }
    };
    let all_pass = reports.iter().all(VerifyReport::is_pass);
    match format {
        Format::Json => {
            if reports.len() == 1 {
                say!(out, "{}", reports[0].to_json());
            } else {
                let items: Vec<serde_json::Value> =
                    reports.iter().map(VerifyReport::to_json).collect();
                say!(out, "{}", serde_json::Value::Array(items));
            }
        }
        Format::Text => {
            for report in &reports {
                match &report.first_discrepancy {
                    None => say!(
                        out,
                        "{} (n={}): {}",
                        report.identity,
                        report.n,
                        if report.is_pass() { "PASS" } else { "FAIL" }
                    ),
                    Some(d) => say!(
                        out,
                        "{} (n={}): FAIL at q^{} t^{}: {} != {}",
                        report.identity,
                        report.n,
                        d.q_exp,
                        d.t_exp,
                        d.lhs,
                        d.rhs
                    ),
                }
            }
        }
        Format::Csv => {
            say!(out, "identity,n,status,q_exp,t_exp,lhs,rhs");
            for report in &reports {
                let status = if report.is_pass() { "pass" } else { "fail" };
                match &report.first_discrepancy {
                    None => say!(out, "{},{},{status},,,,", report.identity, report.n),
                    Some(d) => say!(
                        out,
                        "{},{},{status},{},{},{},{}",
                        report.identity,
                        report.n,
                        d.q_exp,
                        d.t_exp,
                        d.lhs,
                        d.rhs
                    ),
                }
            }
        }
        Format::Latex => {
            if suite == Suite::Table3 {
                emit_table3_latex(out);
            }
            say!(out, "\\begin{{tabular}}{{lll}}");
            say!(out, "identity & $n$ & status \\\\");
            for report in &reports {
                say!(
                    out,
                    "{} & {} & {} \\\\",
                    report.identity.replace('_', "\\_"),
                    report.n,
                    if report.is_pass() { "pass" } else { "fail" }
                );
            }
            say!(out, "\\end{{tabular}}");
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// The n = 3 graded multiplicity box as a LaTeX tabular, for visual
/// diffing.
fn emit_table3_latex(out: &mut String) {
    say!(out, "\\begin{{tabular}}{{ll}}");
    say!(out, "$(\\lambda,\\rho)$ & $m_{{\\lambda,\\rho}}(q)$ \\\\");
    for label in bncomb::frobenius::irr_labels(3) {
        let m = mult_graded(&label);
        say!(
            out,
            "$({},{})$ & ${}$ \\\\",
            label.lam,
            label.rho,
            latex_poly_q(&m)
        );
    }
    say!(out, "\\end{{tabular}}");
}

fn cmd_enumerate(
    what: What,
    n: u32,
    bound: Option<u32>,
    format: Format,
    out: &mut String,
) -> Result<ExitCode, String> {
    match what {
        What::Group => {
            let group = enumerate_bn(n as usize).map_err(|e| e.to_string())?;
            emit_list(
                format,
                group.iter().map(ToString::to_string).collect(),
                group
                    .iter()
                    .map(|b| serde_json::json!(b.window()))
                    .collect(),
                out,
            );
        }
        What::Ediagrams => {
            let bound = bound.ok_or("--bound is required for ediagrams")?;
            let items = bncomb::ediagrams::enumerate_ediagrams(n as usize, bound)
                .map_err(|e| e.to_string())?;
            emit_list(
                format,
                items
                    .iter()
                    .map(|d| {
                        let (a, b) = rows_of_e(d);
                        format!("{} / {}", join(&a), join(&b))
                    })
                    .collect(),
                items.iter().map(EDiagram::to_json).collect(),
                out,
            );
        }
        What::Odiagrams => {
            let bound = bound.ok_or("--bound is required for odiagrams")?;
            let items = bncomb::odiagrams::enumerate_odiagrams(n as usize, bound)
                .map_err(|e| e.to_string())?;
            emit_list(
                format,
                items
                    .iter()
                    .map(|d| {
                        let (a, b) = rows_of_o(d);
                        format!("{} / {}", join(&a), join(&b))
                    })
                    .collect(),
                items.iter().map(ODiagram::to_json).collect(),
                out,
            );
        }
        What::CompactE => {
            let group = enumerate_bn(n as usize).map_err(|e| e.to_string())?;
            let mut text = Vec::new();
            let mut json = Vec::new();
            for beta in &group {
                let d = compact_of_perm(beta);
                let (a, b) = rows_of_e(&d);
                text.push(format!("{beta} | {} / {}", join(&a), join(&b)));
                json.push(serde_json::json!({"beta": beta.to_string(), "diagram": d.to_json()}));
            }
            emit_list(format, text, json, out);
        }
        What::CompactO => {
            let group = enumerate_bn(n as usize).map_err(|e| e.to_string())?;
            let mut text = Vec::new();
            let mut json = Vec::new();
            for beta in &group {
                let d = compact_o_of_perm(beta);
                let (a, b) = rows_of_o(&d);
                text.push(format!("{beta} | {} / {}", join(&a), join(&b)));
                json.push(serde_json::json!({"beta": beta.to_string(), "diagram": d.to_json()}));
            }
            emit_list(format, text, json, out);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_list(format: Format, text: Vec<String>, json: Vec<serde_json::Value>, out: &mut String) {
    match format {
        Format::Json => {
            say!(
                out,
                "{}",
                serde_json::json!({"items": json, "count": json.len()})
            );
        }
        Format::Csv => {
            say!(out, "item");
            for line in &text {
                say!(out, "{}", line.replace(',', ";"));
            }
        }
        Format::Latex => {
            say!(out, "\\begin{{itemize}}");
            for line in &text {
                say!(out, "\\item \\texttt{{{line}}}");
            }
            say!(out, "\\end{{itemize}}");
        }
        Format::Text => {
            for line in &text {
                say!(out, "{line}");
            }
            say!(out, "count: {}", text.len());
        }
    }
}
