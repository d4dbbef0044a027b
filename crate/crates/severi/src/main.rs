use clap::{Parser, Subcommand};
use severi::canonical::ModuliSignature;
use severi::commands::{cmd_canonical, cmd_counts, cmd_genus, cmd_verify};
use severi::document::Format;

/// Exact invariants of rational plane curves and canonical classes of
/// stable-map spaces.
#[derive(Parser)]
#[command(name = "severi", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts of degree-d rational plane curves through 3d - 1 points
    Counts {
        /// Highest degree to tabulate
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Genus invariants and singularity counts of the one-parameter families
    Genus {
        /// Highest degree to tabulate
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Canonical-class expansion for the space of n-pointed degree-d stable
    /// maps to r-dimensional projective space
    Canonical {
        /// Number of marked points
        #[arg(long)]
        n: u32,
        /// Dimension of the target projective space (at least 2)
        #[arg(long)]
        r: u32,
        /// Degree of the maps
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Replay every identity the tables rest on; exits nonzero on failure
    Verify {
        /// Highest degree for the table and integrality checks
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
        max: u32,
    },
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Counts { max, format } => {
            print!("{}", cmd_counts(max).render(format));
            0
        }
        Command::Genus { max, format } => match cmd_genus(max) {
            Ok(doc) => {
                print!("{}", doc.render(format));
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Command::Canonical { n, r, d, format } => match ModuliSignature::new(n, r, d) {
            Ok(sig) => {
                print!("{}", cmd_canonical(&sig).render(format));
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Verify { max } => {
            let doc = cmd_verify(max);
            print!("{}", doc.render(Format::Text));
            if doc.all_passed() {
                0
            } else {
                1
            }
        }
    }
}

fn main() {
    std::process::exit(run(Cli::parse()));
}
