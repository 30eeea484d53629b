//! Run a slice of the claim registry and print the JSON report.
use todd3::cli;

fn main() -> Result<(), todd3::Error> {
    let pattern = std::env::args().nth(1).unwrap_or_else(|| "golay.*".to_string());
    let report = cli::run(Some(&pattern), 0, cli::DEFAULT_SEED)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(())
}
