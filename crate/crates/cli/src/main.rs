use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use itemsum_cli::args::{Cli, Command};
use itemsum_cli::commands::{baseline, evaluate, summarize, sweep};
use itemsum_cli::config::ResolvedConfig;
use itemsum_cli::error::AppError;
use itemsum_cli::report;

use itemsum_core::rouge::RougeMetric;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Summarize(args) => {
            let cfg = ResolvedConfig::resolve(&args.common, args.document.as_deref())?;
            let outcome = summarize::run(&cfg, args.dump_transactions)?;
            if outcome.stripped_blocks > 0 {
                println!(
                    "stripped {} figure/table block(s) before segmentation",
                    outcome.stripped_blocks
                );
            }
            println!(
                "summarized {} ({} sentences selected)",
                outcome.doc_id, outcome.n
            );
            for f in &outcome.files {
                println!("wrote {}", f.display());
            }
            Ok(())
        }
        Command::Baseline(args) => {
            let cfg = ResolvedConfig::resolve(&args.common, args.document.as_deref())?;
            let outcome = baseline::run(&cfg, args.kind)?;
            println!(
                "baseline summary for {} ({} sentences)",
                outcome.doc_id, outcome.n
            );
            for f in &outcome.files {
                println!("wrote {}", f.display());
            }
            Ok(())
        }
        Command::Evaluate(args) => {
            let metrics = match &args.metrics {
                Some(spec) => itemsum_cli::config::parse_metrics(spec)?,
                None => RougeMetric::ALL.to_vec(),
            };
            let report = evaluate::run(&args.system, &args.model, &metrics, args.out.as_deref())?;
            print!("{}", evaluate::report_text(&report));
            if let Some(dir) = &args.out {
                println!("wrote {}", dir.join("report.json").display());
                println!("wrote {}", dir.join("report.txt").display());
            }
            Ok(())
        }
        Command::Sweep(args) => {
            let cfg = ResolvedConfig::resolve(&args.common, None)?;
            let outcome = sweep::run(&cfg, &args.corpus, args.sweep_range.as_deref())?;
            print!("{}", report::aligned_table(&sweep::sweep_table(&outcome)));
            for f in &outcome.files {
                println!("wrote {}", f.display());
            }
            Ok(())
        }
    }
}
