//! `aci`: build, verify, specialize and explore the Pfaffian resolutions.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad arguments.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use aci_core::resolution::{rank_vote, Ranks};
use aci_core::schubert::{mapping_cone, schubert_ideal, IdealKind, SubsetPoset};
use aci_core::verify::{self, rejected_sizes, Suite, VerifyOptions};
use aci_core::{build, generic_skew, Parity, PrimeField, ResolutionComplex, Variant};
use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "aci", version, about = "Pfaffian resolutions of grade-3 almost complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the three differentials of a resolution.
    Build {
        #[arg(long)]
        n: usize,
        /// Defaults to the parity of n.
        #[arg(long)]
        parity: Option<Parity>,
        #[arg(long, default_value = "generic")]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = BuildFormat::Text)]
        format: BuildFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite over a list of sizes.
    Verify {
        /// One of appendix-a, brill, complex, minor-product, ideal-equality,
        /// change-of-basis, dg-products, regseq, equivariant, schubert, all.
        #[arg(long)]
        suite: Suite,
        /// Sizes as a list and/or ranges: `5,6,7,8` or `5..8`.
        #[arg(long, value_parser = parse_sizes)]
        n: Sizes,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = verify::DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = verify::DEFAULT_VOTES)]
        votes: usize,
        /// Check the minor products at an integer point instead of symbolically.
        #[arg(long)]
        specialize: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Ranks of the differentials at random points mod a prime, by majority vote.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        parity: Option<Parity>,
        #[arg(long, default_value = "generic")]
        variant: Variant,
        #[arg(long, default_value_t = verify::DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = verify::DEFAULT_VOTES)]
        votes: usize,
    },
    /// Subset posets, Schubert ideal generators and linkage formats.
    Schubert {
        #[arg(long)]
        n: usize,
        /// Print the subset poset instead of generators.
        #[arg(long)]
        poset: bool,
        /// Cardinality parity of the poset; defaults to the parity of n.
        #[arg(long)]
        class: Option<Parity>,
        /// w1 (= w-prime, n generators) or w2 (= w-double-prime, four generators).
        #[arg(long, value_parser = parse_ideal)]
        ideal: Option<IdealKind>,
        /// Print the graded formats obtained by linkage.
        #[arg(long)]
        mapping_cone: bool,
        #[arg(long, value_enum, default_value_t = SchubertFormat::Text)]
        format: SchubertFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildFormat {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchubertFormat {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Debug)]
struct Sizes(Vec<usize>);

fn parse_sizes(s: &str) -> Result<Sizes, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad size {x:?}"));
        if let Some((a, b)) = part.split_once("..") {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {part}"));
            }
            out.extend(a..=b);
        } else {
            out.push(num(part)?);
        }
    }
    if out.is_empty() {
        return Err("no sizes given".into());
    }
    Ok(Sizes(out))
}

fn parse_ideal(s: &str) -> Result<IdealKind, String> {
    match s {
        "w1" => Ok(IdealKind::WPrime),
        "w2" => Ok(IdealKind::WDoublePrime),
        other => other.parse(),
    }
}

/// A failure attributed to the arguments (exit 2) rather than to a check.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

fn resolve_parity(n: usize, parity: Option<Parity>) -> anyhow::Result<Parity> {
    let p = parity.unwrap_or(Parity::of(n));
    if Parity::of(n) != p || n < p.min_size() {
        return usage(format!(
            "n = {n} does not fit parity {p}: need n of that parity and n >= {}",
            p.min_size()
        ));
    }
    Ok(p)
}

fn emit(text: &str, output: Option<&PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn matrix_text(name: &str, m: &aci_core::PolyMatrix) -> String {
    let mut out = format!("{name} ({}x{}):\n", m.rows(), m.cols());
    for row in m.to_strings() {
        out.push_str("  ");
        out.push_str(&row.join("  "));
        out.push('\n');
    }
    out
}

fn complex_text(c: &ResolutionComplex) -> String {
    format!(
        "n = {}, parity {}, variant {}\n{}{}{}",
        c.n,
        c.parity,
        c.variant,
        matrix_text("d1", &c.d1),
        matrix_text("d2", &c.d2),
        matrix_text("d3", &c.d3)
    )
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Build {
            n,
            parity,
            variant,
            format,
            output,
        } => {
            let parity = resolve_parity(n, parity)?;
            let c = build(n, parity, variant)?;
            let text = match format {
                BuildFormat::Json => serde_json::to_string_pretty(&c.to_json())? + "\n",
                BuildFormat::Latex => c.to_latex(),
                BuildFormat::Text => complex_text(&c),
            };
            emit(&text, output.as_ref())?;
            Ok(true)
        }
        Command::Verify {
            suite,
            n,
            seed,
            prime,
            votes,
            specialize,
            format,
        } => {
            if suite != Suite::All {
                let bad = rejected_sizes(suite, &n.0);
                if !bad.is_empty() {
                    let (lo, hi) = suite.size_range();
                    return usage(format!("suite {suite} accepts n in {lo}..={hi}, got {bad:?}"));
                }
            }
            if PrimeField::new(prime).is_err() {
                return usage(format!("{prime} is not a prime"));
            }
            if votes == 0 {
                return usage("--votes must be positive");
            }
            let slow = n.0.iter().any(|&k| k >= 9);
            if matches!(suite, Suite::MinorProduct | Suite::All) && slow && !specialize {
                eprintln!("warning: the symbolic minor-product check at n >= 9 takes minutes; --specialize runs it at an integer point");
            }
            let mut options = VerifyOptions::new(n.0);
            options.seed = seed;
            options.prime = prime;
            options.votes = votes;
            options.specialize = specialize;
            let report = verify::run(suite, &options);
            let text = match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => serde_json::to_string_pretty(&report.to_json())? + "\n",
            };
            emit(&text, None)?;
            eprintln!("{} finished in {:.2?}", suite, report.duration);
            Ok(report.passed())
        }
        Command::Rank {
            n,
            parity,
            variant,
            prime,
            seed,
            votes,
        } => {
            if PrimeField::new(prime).is_err() {
                return usage(format!("{prime} is not a prime"));
            }
            if prime <= (n * n) as u64 {
                return usage(format!("prime {prime} must exceed n^2 = {}", n * n));
            }
            if votes == 0 {
                return usage("--votes must be positive");
            }
            let parity = resolve_parity(n, parity)?;
            let c = build(n, parity, variant)?;
            let seeds: Vec<u64> = (0..votes as u64).map(|k| seed.wrapping_add(k)).collect();
            let (ranks, count) = rank_vote(&c, &seeds, prime)?;
            println!("{ranks}");
            eprintln!("{count}/{votes} votes at p = {prime}, seeds {seed}..");
            Ok(ranks == Ranks::expected(n))
        }
        Command::Schubert {
            n,
            poset,
            class,
            ideal,
            mapping_cone: cone,
            format,
        } => schubert(n, poset, class, ideal, cone, format),
    }
}

fn schubert(
    n: usize,
    poset: bool,
    class: Option<Parity>,
    ideal: Option<IdealKind>,
    cone: bool,
    format: SchubertFormat,
) -> anyhow::Result<bool> {
    let picked = usize::from(poset) + usize::from(ideal.is_some()) + usize::from(cone);
    if picked != 1 {
        return usage("choose exactly one of --poset, --ideal, --mapping-cone");
    }
    if poset {
        let p = match SubsetPoset::new(n, class.unwrap_or(Parity::of(n))) {
            Ok(p) => p,
            Err(e) => return usage(e.to_string()),
        };
        let text = match format {
            SchubertFormat::Dot => p.to_dot(),
            SchubertFormat::Json => {
                let covers: Vec<_> = p
                    .covers()
                    .iter()
                    .map(|c| serde_json::json!({"lower": c.lower.to_vec(), "upper": c.upper.to_vec(), "reflection": c.reflection}))
                    .collect();
                let elements: Vec<_> = p.elements().iter().map(|s| s.to_vec()).collect();
                let v = serde_json::json!({"n": n, "class": p.class(), "elements": elements, "covers": covers});
                serde_json::to_string_pretty(&v)? + "\n"
            }
            SchubertFormat::Text => {
                let mut out = format!("{} subsets of {{1..{n}}}: {} elements\n", p.class(), p.len());
                for c in p.covers() {
                    out.push_str(&format!("{} < {}  s{}\n", c.lower, c.upper, c.reflection));
                }
                out
            }
        };
        emit(&text, None)?;
        return Ok(true);
    }
    if format == SchubertFormat::Dot {
        return usage("--format dot applies to --poset only");
    }
    if n < 5 {
        return usage(format!("Schubert ideals and formats need n >= 5, got {n}"));
    }
    if let Some(kind) = ideal {
        let x = generic_skew(n);
        let s = schubert_ideal(n, kind, &x)?;
        let text = match format {
            SchubertFormat::Json => serde_json::to_string_pretty(&s.to_json())? + "\n",
            _ => {
                let mut out = String::new();
                for (k, g) in s.generators.iter().enumerate() {
                    let word = if g.word.is_empty() {
                        "id".to_string()
                    } else {
                        g.word.iter().map(|i| format!("s{i}")).collect()
                    };
                    let flag = if s.redundant.contains(&(k + 1)) { "  (redundant)" } else { "" };
                    out.push_str(&format!("q_{word}  I={}  pfbar{}  {}{flag}\n", g.subset, g.removed, g.pfaffian));
                }
                out
            }
        };
        emit(&text, None)?;
    } else {
        let c = mapping_cone(n)?;
        let text = match format {
            SchubertFormat::Json => serde_json::to_string_pretty(&c)? + "\n",
            _ => format!(
                "gorenstein: {}\nlinking degrees: {:?}\naci: {}\n",
                c.gorenstein, c.sequence_degrees, c.aci
            ),
        };
        emit(&text, None)?;
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_lists() {
        assert_eq!(parse_sizes("5,6,7,8").unwrap().0, vec![5, 6, 7, 8]);
        assert_eq!(parse_sizes("5..8").unwrap().0, vec![5, 6, 7, 8]);
        assert_eq!(parse_sizes("5..=6, 9").unwrap().0, vec![5, 6, 9]);
        assert!(parse_sizes("8..5").is_err());
        assert!(parse_sizes("x").is_err());
        assert!(parse_sizes("").is_err());
    }

    #[test]
    fn ideal_names() {
        assert_eq!(parse_ideal("w1"), Ok(IdealKind::WPrime));
        assert_eq!(parse_ideal("w-double-prime"), Ok(IdealKind::WDoublePrime));
        assert!(parse_ideal("w3").is_err());
    }
}
