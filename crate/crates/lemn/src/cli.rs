use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::commands::{self, parse_gauss};
use crate::error::CliError;
use crate::suites::{self, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "lemn", version, about = "Lemniscatic division and lemnatomic polynomials over Z[i]")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Working precision in decimal digits for numeric checks.
    #[arg(long, global = true, env = "LEMN_DIGITS", default_value_t = 40, value_parser = clap::value_parser!(u32).range(20..=2000))]
    pub digits: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaussian integer utilities.
    #[command(subcommand)]
    Gauss(GaussCommand),
    /// The division polynomial x P(x^4) of an odd Gaussian integer.
    Divpoly(BetaArg),
    /// The lemnatomic polynomial of an odd Gaussian integer.
    Lemnatomic(BetaArg),
    /// Whether the n-division of the lemniscate is constructible.
    Constructible { n: u64 },
    /// Chebyshev-side factors.
    #[command(subcommand)]
    Cheb(ChebCommand),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum GaussCommand {
    /// Factor into a unit and normalized primes.
    Factor(BetaArg),
}

#[derive(Debug, Subcommand)]
pub enum ChebCommand {
    /// The irreducible factor D_n of 2 T_n(x/2), for odd n.
    D { n: u64 },
}

#[derive(Debug, Args)]
pub struct BetaArg {
    /// A Gaussian integer such as 5, -1+2i or 3-2i.
    #[arg(allow_hyphen_values = true)]
    pub beta: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Structural,
    Frobenius,
    Numeric,
    Chebyshev,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    /// Largest norm of β covered by the structural suite.
    #[arg(long, default_value_t = suites::DEFAULT_MAX_NORM)]
    pub max_norm: u64,
}

/// Rendered output and whether the command reports success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

fn render<T: Serialize + std::fmt::Display>(value: &T, json: bool) -> Result<String, CliError> {
    if json {
        serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))
    } else {
        Ok(value.to_string())
    }
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let json = cli.json;
    let text = match &cli.command {
        Command::Gauss(GaussCommand::Factor(a)) => render(&commands::gauss_factor(&parse_gauss(&a.beta)?)?, json)?,
        Command::Divpoly(a) => render(&commands::divpoly(&parse_gauss(&a.beta)?)?, json)?,
        Command::Lemnatomic(a) => render(&commands::lemnatomic(&parse_gauss(&a.beta)?)?, json)?,
        Command::Constructible { n } => render(&commands::constructible(*n)?, json)?,
        Command::Cheb(ChebCommand::D { n }) => render(&commands::cheb_d(*n)?, json)?,
        Command::Verify(v) => {
            let chosen: Vec<Suite> = match v.suite {
                SuiteArg::Structural => vec![Suite::Structural],
                SuiteArg::Frobenius => vec![Suite::Frobenius],
                SuiteArg::Numeric => vec![Suite::Numeric],
                SuiteArg::Chebyshev => vec![Suite::Chebyshev],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let cfg = VerifyConfig {
                max_norm: v.max_norm,
                digits: cli.digits,
                ..VerifyConfig::default()
            };
            let report = suites::run(&chosen, &cfg)?;
            return Ok(Output {
                text: render(&report, json)?,
                passed: report.passed,
            });
        }
    };
    Ok(Output { text, passed: true })
}
