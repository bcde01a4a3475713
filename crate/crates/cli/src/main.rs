use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use spechtkit::abacus::{
    normalized_beads, p_quotient, p_weight, residue_content, rouquier_decompose, AbacusDisplay,
    BlockId,
};
use spechtkit::gfalg::is_prime;
use spechtkit::ladders::regularize;
use spechtkit::specht::specht_rep;
use spechtkit::{classify_rouquier_block, verify_main_theorem, Error, Partition, Status};

#[derive(Parser)]
#[command(name = "spechtkit", version, about = "Specht modules over GF(p): invariants, block classification, signed Young module verification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the modular invariants of one partition.
    Info {
        /// Partition as comma-separated parts, or "-" for the empty one.
        partition: String,
        /// Prime modulus.
        #[arg(short, long)]
        p: u32,
        /// Bead count for the abacus display (multiple of p, at least the
        /// number of parts). Defaults to the smallest such count.
        #[arg(long)]
        beads: Option<usize>,
        /// Write the Specht representation matrices to a JSON file.
        #[arg(long, value_name = "FILE")]
        dump_rep: Option<PathBuf>,
    },
    /// List the irreducible Specht modules in a Rouquier block.
    ClassifyBlock {
        /// Core of the block.
        #[arg(long)]
        core: String,
        /// Block weight.
        #[arg(long)]
        weight: u32,
        /// Odd prime modulus.
        #[arg(short, long)]
        p: u32,
        /// Largest module dimension any matrix computation may touch.
        #[arg(long, default_value_t = 1500)]
        max_dim: u128,
    },
    /// Check that an irreducible Specht module is a summand of a signed
    /// permutation module, and report the certificate.
    Verify {
        /// Partition as comma-separated parts, or "-" for the empty one.
        partition: String,
        /// Odd prime modulus.
        #[arg(short, long)]
        p: u32,
        /// Largest module dimension any matrix computation may touch.
        #[arg(long, default_value_t = 1500)]
        max_dim: u128,
        /// Seed for the randomized irreducibility analysis.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded { .. } | Error::Inconclusive(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    Partition::from_str(s)
}

fn require_prime(p: u32, odd: bool) -> Result<(), Error> {
    if !is_prime(p) || (odd && p < 3) {
        return Err(Error::Shape(format!(
            "modulus must be a{} prime, got {}",
            if odd { "n odd" } else { "" },
            p
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Info { partition, p, beads, dump_rep } => {
            require_prime(p, false)?;
            let lambda = parse_partition(&partition)?;
            info(&lambda, p, beads, dump_rep, cli.format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyBlock { core, weight, p, max_dim } => {
            require_prime(p, true)?;
            let core = parse_partition(&core)?;
            let block = BlockId::new(p, core, weight)?;
            let members = classify_rouquier_block(&block, max_dim)?;
            print_block(&block, &members, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { partition, p, max_dim, seed } => {
            require_prime(p, true)?;
            let lambda = parse_partition(&partition)?;
            let report = verify_main_theorem(&lambda, p, max_dim, seed)?;
            print_report(&report, cli.format);
            Ok(match report.status {
                Status::Verified => ExitCode::SUCCESS,
                Status::Inconclusive => ExitCode::from(2),
                Status::Refuted => ExitCode::from(3),
            })
        }
    }
}

fn quotient_string(quotient: &[Partition]) -> String {
    let comps: Vec<String> = quotient
        .iter()
        .map(|q| if q.is_empty() { "-".into() } else { format!("({})", q) })
        .collect();
    format!("[{}]", comps.join(","))
}

fn info(
    lambda: &Partition,
    p: u32,
    beads: Option<usize>,
    dump_rep: Option<PathBuf>,
    format: Format,
) -> Result<(), Error> {
    let beads = beads.unwrap_or_else(|| normalized_beads(lambda, p));
    let display = AbacusDisplay::from_partition(lambda, p, beads)?;
    let core = display.core_display().to_partition();
    let weight = p_weight(lambda, p);
    let quotient = p_quotient(lambda, p);
    let content = residue_content(lambda, p);
    let reg = regularize(lambda, p);
    match format {
        Format::Text => {
            println!("partition: {}", lambda);
            println!("size: {}", lambda.size());
            println!("conjugate: {}", lambda.conjugate());
            println!("{}-regular: {}", p, if lambda.is_p_regular(p) { "yes" } else { "no" });
            println!("{}-restricted: {}", p, if lambda.is_p_restricted(p) { "yes" } else { "no" });
            println!("{}-core: {}", p, core);
            println!("{}-weight: {}", p, weight);
            println!("{}-quotient: {}", p, quotient_string(&quotient));
            println!("regularization: {}", reg);
            let content_str: Vec<String> = content.iter().map(u32::to_string).collect();
            println!("residue content: [{}]", content_str.join(","));
            println!("abacus ({} beads):", beads);
            println!("{}", display.render());
        }
        Format::Json => {
            let quotient_json: Vec<String> = quotient.iter().map(Partition::to_string).collect();
            let doc = serde_json::json!({
                "partition": lambda.to_string(),
                "size": lambda.size(),
                "conjugate": lambda.conjugate().to_string(),
                "p": p,
                "regular": lambda.is_p_regular(p),
                "restricted": lambda.is_p_restricted(p),
                "core": core.to_string(),
                "weight": weight,
                "quotient": quotient_json,
                "regularization": reg.to_string(),
                "residue_content": content,
                "abacus": display,
            });
            println!("{}", doc);
        }
    }
    if let Some(path) = dump_rep {
        let rep = specht_rep(lambda, p);
        let gens: Vec<Vec<u8>> = rep
            .gens
            .iter()
            .map(|g| (0..rep.dim).flat_map(|i| g.row(i).to_vec()).collect())
            .collect();
        let doc = serde_json::json!({
            "partition": lambda.to_string(),
            "p": p,
            "degree": rep.degree,
            "dim": rep.dim,
            "generators": gens,
        });
        std::fs::write(&path, format!("{}\n", doc))
            .map_err(|e| Error::Shape(format!("cannot write {}: {}", path.display(), e)))?;
    }
    Ok(())
}

fn print_block(block: &BlockId, members: &[Partition], format: Format) {
    match format {
        Format::Text => {
            println!(
                "Rouquier block: core {}, weight {}, p={}, degree {}",
                block.core(),
                block.weight(),
                block.p(),
                block.degree()
            );
            println!("irreducible Specht modules: {}", members.len());
            let width = members.iter().map(|m| m.to_string().len()).max().unwrap_or(0);
            println!("{:<width$}  {:<8}  {}", "partition", "mu", "tau", width = width.max(9));
            for lam in members {
                let dec = rouquier_decompose(lam, block.p()).expect("member of a Rouquier block");
                println!(
                    "{:<width$}  {:<8}  {}",
                    lam.to_string(),
                    dec.mu.to_string(),
                    dec.tau,
                    width = width.max(9)
                );
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = members
                .iter()
                .map(|lam| {
                    let dec = rouquier_decompose(lam, block.p()).expect("member of a Rouquier block");
                    serde_json::json!({
                        "partition": lam.to_string(),
                        "mu": dec.mu.to_string(),
                        "tau": dec.tau.to_string(),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "core": block.core().to_string(),
                "weight": block.weight(),
                "p": block.p(),
                "irreducible": rows,
            });
            println!("{}", doc);
        }
    }
}

fn print_report(report: &spechtkit::VerificationReport, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string(report).expect("report serializes"));
        }
        Format::Text => {
            println!("partition: {}", report.partition);
            println!("p: {}", report.p);
            println!("irreducible: yes ({})", report.method);
            match &report.filtration {
                Some(f) => {
                    let terms: Vec<String> = f
                        .entries()
                        .iter()
                        .map(|(lam, m)| {
                            if *m == 1 {
                                lam.to_string()
                            } else {
                                format!("{} x{}", lam, m)
                            }
                        })
                        .collect();
                    println!("filtration: {}", terms.join("; "));
                }
                None => println!("filtration: not available"),
            }
            match &report.certificate {
                Some(c) => println!("certificate: M({} | {})", c.alpha, c.p_beta),
                None => println!("certificate: none"),
            }
            println!(
                "status: {} ({} candidates checked, {} skipped)",
                match report.status {
                    Status::Verified => "verified",
                    Status::Inconclusive => "inconclusive",
                    Status::Refuted => "refuted",
                },
                report.summand_checks,
                report.skipped_candidates
            );
            println!("seed: {}", report.seed);
        }
    }
}
