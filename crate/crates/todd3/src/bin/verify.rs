use std::process::ExitCode;

use clap::Parser;
use todd3::cli::{self, Status};

/// Run the registered claims and report PASS/FAIL per claim.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Glob over claim ids, e.g. "golay.*"
    #[arg(long)]
    claim: Option<String>,
    /// Write the JSON report here
    #[arg(long)]
    report: Option<std::path::PathBuf>,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value_t = cli::DEFAULT_SEED)]
    seed: u64,
    /// List claim ids and exit
    #[arg(long)]
    list: bool,
    /// Print the 729 codewords, one per line
    #[arg(long)]
    dump_code: bool,
    /// Print canonical keys of a group: N0, N, 2M12, 2M11, 2M10, M0_10, M0_11
    #[arg(long, value_name = "NAME")]
    dump_group: Option<String>,
    /// Case for --dump-subgroup: m12, a6, m11, m11dual
    #[arg(long, value_parser = ["m12", "a6", "m11", "m11dual"], requires = "dump_subgroup")]
    case: Option<String>,
    /// Print sorted element indices of S, A, T, Z, A_star or Q for --case
    #[arg(long, value_name = "NAME", requires = "case")]
    dump_subgroup: Option<String>,
}

fn print_lines<T: std::fmt::Display>(r: Result<Vec<T>, todd3::Error>) -> ExitCode {
    match r {
        Ok(lines) => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            for l in lines {
                if writeln!(out, "{l}").is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("verify: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if args.list {
        for c in cli::list_claims() {
            println!("{:<22} {}", c.id, c.paper_ref);
        }
        return ExitCode::SUCCESS;
    }
    if args.dump_code {
        return print_lines(Ok(cli::dump_code()));
    }
    if let Some(name) = &args.dump_group {
        return print_lines(cli::dump_group(name));
    }
    if let (Some(case), Some(name)) = (&args.case, &args.dump_subgroup) {
        return print_lines(cli::dump_subgroup(case, name));
    }
    let report = match cli::run(args.claim.as_deref(), args.threads, args.seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(2);
        }
    };
    for r in &report.results {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        println!("{tag:<5} {:<22} {:>7} ms", r.id, r.runtime_ms);
        if r.status != Status::Pass {
            println!("      computed: {}", r.computed);
            println!("      expected: {}", r.expected);
        }
    }
    let s = &report.summary;
    println!("{} claims: {} passed, {} failed, {} errors", s.total, s.passed, s.failed, s.errors);
    if let Some(path) = &args.report {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("verify: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
