use clap::{Parser, ValueEnum};
use qtan_core::arith::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// q-brackets [n] and q-factorials [n]! for n = 1..=depth
    Brackets,
    /// Coefficients of sin_q(z)/z and cos_q(z) in w = z^2
    Series,
    /// Partial denominators and remainder series of z tan_q(z)
    Expand,
    /// Check the expansion against the closed forms
    Verify,
    /// Depth-k convergent as a truncated series in w
    Convergent,
    /// Exact values at rational (q, z)
    Eval,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Brackets => "brackets",
            Command::Series => "series",
            Command::Expand => "expand",
            Command::Verify => "verify",
            Command::Convergent => "convergent",
            Command::Eval => "eval",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "qtan", version, about = "Exact continued fraction expansion of z tan_q(z)")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Expansion depth (number of partial denominators)
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub depth: u32,
    /// Truncation order in w; defaults to depth + 4
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: Option<u32>,
    /// Value of q for eval, as p/q or an integer
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub q: Option<Rational>,
    /// Value of z for eval, as p/q or an integer
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub z: Option<Rational>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Replace C_i by C_i + 1 before verifying
    #[arg(long, hide = true, value_name = "I")]
    pub inject_fault: Option<usize>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

/// A validated run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub depth: usize,
    pub order: usize,
    pub q_value: Option<Rational>,
    pub z_value: Option<Rational>,
    pub format: Format,
    pub inject_fault: Option<usize>,
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<Self, String> {
        let depth = args.depth as usize;
        let order = args.order.map_or(depth + 4, |o| o as usize);
        if matches!(args.command, Command::Expand | Command::Verify) && order < depth + 1 {
            return Err(format!(
                "{} needs --order >= depth + 1 = {}, got {order}",
                args.command.name(),
                depth + 1
            ));
        }
        if args.command == Command::Eval {
            if args.q.is_none() {
                return Err("eval needs --q".into());
            }
            if args.z.is_none() {
                return Err("eval needs --z".into());
            }
        }
        if let Some(i) = args.inject_fault {
            if args.command != Command::Verify {
                return Err("--inject-fault only applies to verify".into());
            }
            if i == 0 || i > depth {
                return Err(format!("--inject-fault index {i} outside 1..={depth}"));
            }
        }
        Ok(RunConfig {
            command: args.command,
            depth,
            order,
            q_value: args.q,
            z_value: args.z,
            format: args.format,
            inject_fault: args.inject_fault,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig, String> {
        let args = Args::try_parse_from(std::iter::once("qtan").chain(args.iter().copied()))
            .map_err(|e| e.to_string())?;
        RunConfig::from_args(args)
    }

    #[test]
    fn order_defaults_to_depth_plus_four() {
        let c = config(&["expand", "--depth", "7"]).unwrap();
        assert_eq!((c.depth, c.order), (7, 11));
        assert_eq!(c.format, Format::Text);
    }

    #[test]
    fn order_must_exceed_depth_for_expansion() {
        assert!(config(&["verify", "--depth", "5", "--order", "5"]).is_err());
        assert!(config(&["verify", "--depth", "5", "--order", "6"]).is_ok());
        assert!(config(&["convergent", "--depth", "5", "--order", "2"]).is_ok());
    }

    #[test]
    fn eval_needs_both_points() {
        assert!(config(&["eval", "--q", "1/2"]).is_err());
        let c = config(&["eval", "--q", "-1/2", "--z", "3"]).unwrap();
        assert_eq!(c.q_value, Some(Rational::new(-1, 2).unwrap()));
        assert_eq!(c.z_value, Some(Rational::from(3)));
    }

    #[test]
    fn fault_index_is_checked() {
        assert!(config(&["verify", "--depth", "3", "--inject-fault", "0"]).is_err());
        assert!(config(&["verify", "--depth", "3", "--inject-fault", "3"]).is_ok());
        assert!(config(&["series", "--inject-fault", "1"]).is_err());
    }
}
