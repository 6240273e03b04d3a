//! Command-line arguments and their validation into a [`RunConfig`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::CliError;
use crate::combinatorics::ParabolicShape;
use crate::exact_linear::{parse_rational, FieldSpec, ParameterAssignment};

/// Largest `n!·rⁿ` accepted without `--force`.
pub const GUARDRAIL: u128 = 20_000;

#[derive(Debug, Parser)]
#[command(name = "cyclo-schur", version, about = "Exact checks for Ariki-Koike algebras and cyclotomic q-Schur algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ranks of H, S(Λ), S^p, S̄^p and H̄^p
    Dim(CommonArgs),
    /// Decomposition matrix of S(Λ)
    Decomp(CommonArgs),
    /// Run one verifier suite
    Verify {
        suite: Suite,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Manage the structure-constant cache
    Cache {
        action: CacheAction,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cellular,
    StandardlyBased,
    Structure,
    ProductFormula,
    Presentation,
    Duality,
    Separation,
    Transfer,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Cellular => "cellular",
            Suite::StandardlyBased => "standardly-based",
            Suite::Structure => "structure",
            Suite::ProductFormula => "product-formula",
            Suite::Presentation => "presentation",
            Suite::Duality => "duality",
            Suite::Separation => "separation",
            Suite::Transfer => "transfer",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CacheAction {
    Build,
    Inspect,
    Purge,
}

#[derive(Clone, Debug, Args)]
pub struct CommonArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// bounds m_1,…,m_r on the number of parts (default m_i = n)
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<usize>,
    /// parabolic shape, a composition of r such as 1,1 (default: r)
    #[arg(long)]
    pub p: Option<String>,
    /// `rational` or `fp:<prime>`
    #[arg(long, default_value = "fp:5")]
    pub field: String,
    #[arg(long, default_value = "2")]
    pub q: String,
    /// Q_1,…,Q_r (default 1,2,…,r)
    #[arg(long = "Q", id = "big_q", value_delimiter = ',')]
    pub big_q: Vec<String>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// write the JSON report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = ".cyclo-schur-cache")]
    pub cache_dir: PathBuf,
    /// lift the n!·rⁿ ≤ 20000 guardrail
    #[arg(long)]
    pub force: bool,
}

/// A validated configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub r: usize,
    pub m: Vec<usize>,
    pub p: ParabolicShape,
    pub params: ParameterAssignment,
    pub seed: u64,
    pub force: bool,
}

/// The configuration as echoed in reports; scalars are strings.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub r: usize,
    pub m: Vec<usize>,
    pub p: Vec<usize>,
    pub field: String,
    pub q: String,
    #[serde(rename = "Q")]
    pub big_q: Vec<String>,
    pub seed: u64,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::InvalidConfig(msg.into())
}

fn parse_shape(s: &str) -> Result<Vec<usize>, CliError> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    t.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| invalid(format!("cannot parse p = {s:?}"))))
        .collect()
}

fn factorial_power(n: usize, r: usize) -> Option<u128> {
    let f = (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k))?;
    f.checked_mul((r as u128).checked_pow(u32::try_from(n).ok()?)?)
}

impl RunConfig {
    pub fn from_args(a: &CommonArgs) -> Result<Self, CliError> {
        let n = a.n.ok_or_else(|| invalid("--n is required"))?;
        let r = a.r.ok_or_else(|| invalid("--r is required"))?;
        if n == 0 || r == 0 {
            return Err(invalid("n and r must be positive"));
        }
        let m = if a.m.is_empty() { vec![n; r] } else { a.m.clone() };
        if m.len() != r {
            return Err(invalid(format!("--m has {} entries, expected r = {r}", m.len())));
        }
        if m.iter().any(|&x| x < n) {
            return Err(invalid("every m_i must be at least n"));
        }
        let parts = match &a.p {
            Some(s) => parse_shape(s)?,
            None => vec![r],
        };
        if parts.iter().sum::<usize>() != r {
            return Err(invalid(format!("p = {parts:?} does not sum to r = {r}")));
        }
        let p = ParabolicShape::new(parts).map_err(|e| invalid(e.to_string()))?;
        let field = FieldSpec::parse(&a.field).map_err(|e| invalid(e.to_string()))?;
        let q = parse_rational(&a.q).map_err(|e| invalid(e.to_string()))?;
        let big_q: Vec<BigRational> = if a.big_q.is_empty() {
            (1..=r as i64).map(|k| BigRational::from_integer(k.into())).collect()
        } else {
            a.big_q.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>().map_err(|e| invalid(e.to_string()))?
        };
        if big_q.len() != r {
            return Err(invalid(format!("--Q has {} entries, expected r = {r}", big_q.len())));
        }
        if q.is_zero() {
            return Err(invalid("q must be invertible"));
        }
        let cfg = RunConfig { n, r, m, p, params: ParameterAssignment { field, q, big_q }, seed: a.seed, force: a.force };
        let size = factorial_power(n, r);
        if !cfg.force && size.is_none_or(|s| s > GUARDRAIL) {
            return Err(invalid(format!(
                "n!·rⁿ = {} exceeds {GUARDRAIL}; pass --force to run anyway",
                size.map_or("overflow".into(), |s| s.to_string())
            )));
        }
        Ok(cfg)
    }

    pub fn hecke_dim(&self) -> u128 {
        factorial_power(self.n, self.r).unwrap_or(u128::MAX)
    }

    pub fn echo(&self) -> ConfigEcho {
        let (field, q, big_q) = self.params.describe();
        ConfigEcho { n: self.n, r: self.r, m: self.m.clone(), p: self.p.parts().to_vec(), field, q, big_q, seed: self.seed }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(extra: &[&str]) -> CommonArgs {
        let mut v = vec!["cyclo-schur", "dim"];
        v.extend_from_slice(extra);
        match Cli::try_parse_from(v).unwrap().command {
            Command::Dim(a) => a,
            _ => unreachable!(),
        }
    }

    #[test]
    fn defaults() {
        let c = RunConfig::from_args(&args(&["--n", "2", "--r", "2"])).unwrap();
        assert_eq!(c.m, vec![2, 2]);
        assert_eq!(c.p.parts(), &[2]);
        assert_eq!(c.echo().big_q, vec!["1", "2"]);
        assert_eq!(c.echo().field, "fp:5");
    }

    #[test]
    fn rejects_bad_configs() {
        for bad in [
            vec!["--n", "2", "--r", "2", "--p", "1,2"],
            vec!["--n", "2", "--r", "2", "--Q", "1"],
            vec!["--n", "2", "--r", "2", "--field", "fp:6"],
            vec!["--n", "2", "--r", "2", "--m", "1,2"],
            vec!["--n", "2", "--r", "2", "--q", "5"],
            vec!["--n", "7", "--r", "3"],
            vec!["--r", "2"],
        ] {
            let c = RunConfig::from_args(&args(&bad));
            // q = 5 vanishes only once specialized to F_5, which happens later
            if bad.contains(&"5") {
                assert!(c.is_ok());
            } else {
                assert!(matches!(c, Err(CliError::InvalidConfig(_))), "{bad:?}");
            }
        }
        assert!(RunConfig::from_args(&args(&["--n", "7", "--r", "3", "--force"])).is_ok());
        let c = RunConfig::from_args(&args(&["--n", "2", "--r", "2", "--p", "(1,1)", "--Q", "1/2,-3"])).unwrap();
        assert_eq!(c.echo().big_q, vec!["1/2", "-3"]);
        assert_eq!(c.p.parts(), &[1, 1]);
    }
}
