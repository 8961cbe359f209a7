//! Command-line runner: executes claim suites and prints a verdict report.

use clap::{Parser, ValueEnum};
use std::io::Write;
use std::process::ExitCode;

use lie_kring::report::Report;
use lie_kring::suites::{self, ClaimOutcome, SuiteOptions, DEFAULT_SEED};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    /// Dimension table and exterior-power decompositions over E6.
    #[value(name = "dims")]
    Dims,
    /// The lambda1*lambda3 identity and the weight-type table over D5.
    #[value(name = "table2")]
    Table2,
    /// Restriction of half-spin and adjoint characters to Spin(10)·S1.
    #[value(name = "branch")]
    Branch,
    /// The six E6-to-Spin(10) restriction identities and graded refinements.
    #[value(name = "restrict")]
    Restrict,
    /// Derived polynomial images, Koszul homology, and the K-ring presentation.
    #[value(name = "tor")]
    Tor,
    /// The tangent-bundle class and its immersion-dimension corollaries.
    #[value(name = "tangent")]
    Tangent,
    /// Every suite above, in order.
    #[value(name = "all")]
    All,
}

#[derive(Parser)]
#[command(
    name = "lie-kring",
    version,
    about = "Exact-arithmetic verification of the K-ring of E6/Spin(10)"
)]
struct Cli {
    /// Claim suite to run.
    #[arg(value_enum)]
    suite: Suite,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Print the stored full witness for one claim id from the selected suite.
    #[arg(long, value_name = "ID")]
    dump: Option<String>,
    /// Seed for the randomized witnesses.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Run the guarded slow paths (the full E8 Weyl-orbit count).
    #[arg(long)]
    allow_slow: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = SuiteOptions {
        seed: cli.seed,
        allow_slow: cli.allow_slow,
    };
    let outcomes: Vec<ClaimOutcome> = match cli.suite {
        Suite::Dims => suites::suite_dims(&opts),
        Suite::Table2 => suites::suite_table2(&opts),
        Suite::Branch => suites::suite_branch(&opts),
        Suite::Restrict => suites::suite_restrict(&opts),
        Suite::Tor => suites::suite_tor(&opts),
        Suite::Tangent => suites::suite_tangent(&opts),
        Suite::All => suites::all_suites(&opts),
    };
    let report = Report::new(suites::records(&outcomes));
    let code = if report.all_executed_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };

    let text = if let Some(id) = &cli.dump {
        match outcomes.iter().find(|o| &o.record.id == id) {
            Some(o) if !o.full_witness.is_empty() => {
                format!("{}\n", o.full_witness.trim_end())
            }
            Some(o) => format!(
                "{}\n",
                o.record.witness.as_deref().unwrap_or("(no stored witness)")
            ),
            None => {
                let known: Vec<&str> = outcomes.iter().map(|o| o.record.id.as_str()).collect();
                eprintln!("error: no claim '{}' in this suite", id);
                eprintln!("known ids: {}", known.join(", "));
                return ExitCode::from(2);
            }
        }
    } else if cli.json {
        format!("{}\n", report.to_json())
    } else {
        report.render_text()
    };
    // the verdict is already fixed; a consumer closing the pipe early
    // (e.g. `| head`) must not turn it into a panic
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    code
}
