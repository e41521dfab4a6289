//! `twistclass`: twisted conjugacy classes and unit-class subgroup checks
//! from the command line.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twistclass::claims::ClaimOptions;
use twistclass::Error;

use commands::Twist;
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "twistclass",
    version,
    about = "Twisted conjugacy classes in finite and symbolic groups"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Seed for the randomized sweeps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Radius of the nilpotent search boxes.
    #[arg(long, global = true)]
    bound: Option<i64>,
    /// Append elapsed time to text output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct TwistArgs {
    /// Inner automorphism by an element: a label or cycle notation.
    #[arg(long, conflicts_with = "map")]
    inner: Option<String>,
    /// Map given by generator images, e.g. "x->y, y->x".
    #[arg(long)]
    map: Option<String>,
}

impl TwistArgs {
    fn twist(&self) -> Twist {
        Twist {
            inner: self.inner.clone(),
            map: self.map.clone(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, center, derived subgroup, class sizes and nilpotency class.
    Group { name: String },
    /// The twisted class of an element and its subgroup verdict.
    TwistedClass {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        twist: TwistArgs,
        /// Element whose class is computed; defaults to the identity.
        #[arg(long, default_value = "e")]
        element: String,
    },
    /// Partition into twisted classes and the Reidemeister number.
    Reidemeister {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        twist: TwistArgs,
    },
    /// Subgroup test of [G,h] for every conjugacy class representative h.
    Scan {
        #[arg(long)]
        group: String,
    },
    /// Descending chain of inner unit classes.
    Series {
        #[arg(long)]
        group: String,
        /// Twisting elements, one per step; the least nontrivial element otherwise.
        #[arg(long, conflicts_with = "chain")]
        choose: Option<String>,
        /// Elements g1, g2, ... for the chain [e]_{c1}, [e]_{[c1,g2]}, ...
        #[arg(long)]
        chain: Option<String>,
    },
    /// All endomorphisms with their unit classes and automorphism orbits.
    EndoTable {
        #[arg(long)]
        group: String,
    },
    /// Runs the claim catalog and reports each claim.
    VerifyPaper {
        /// Restrict to one topic.
        #[arg(long)]
        only: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Group { name } => commands::group(name),
        Command::TwistedClass {
            group,
            twist,
            element,
        } => commands::twisted_class(group, &twist.twist(), element),
        Command::Reidemeister { group, twist } => commands::reidemeister(group, &twist.twist()),
        Command::Scan { group } => commands::scan(group),
        Command::Series {
            group,
            choose,
            chain,
        } => commands::series(group, choose.as_deref(), chain.as_deref()),
        Command::EndoTable { group } => commands::endo_table(group),
        Command::VerifyPaper { only } => {
            let mut opts = ClaimOptions::default();
            if let Some(seed) = cli.seed {
                opts.seed = seed;
            }
            if let Some(b) = cli.bound {
                if b < 0 {
                    return Err(Error::Parse("--bound must be nonnegative".into()));
                }
                opts.n22_box = b;
                opts.n23_box = b;
            }
            if let Some(topic) = only {
                if twistclass::claims::resolve_topic(topic).is_none() {
                    return Err(Error::Parse(format!(
                        "unknown topic `{topic}`; topics are {}",
                        commands::topic_names()
                    )));
                }
            }
            commands::verify(only.as_deref(), &opts, cli.timing)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(cli.format).as_bytes());
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Internal(msg)) => {
            eprintln!("error: internal invariant violated: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
