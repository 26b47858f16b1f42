use std::fs;
use std::io::Read;

use csemigroup::semigroup::DEFAULT_DEGREE_CEILING;
use csemigroup::{CSemigroup, Error, ErrorClass, GeneratedSemigroup, LatticePoint, Membership, SemigroupSpec};
use serde::de::DeserializeOwned;

/// Failures reported by the front end, each mapped to one exit code.
#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Schema(String),
    /// An oracle disagreed with the fast path under `--verify`.
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Lib(e) => match e.class() {
                ErrorClass::Schema => 2,
                ErrorClass::Precondition => 3,
                ErrorClass::Overflow => 4,
                ErrorClass::Guard => 5,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            1 => "verify",
            2 => "schema",
            3 => "precondition",
            4 => "overflow",
            _ => "guard",
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Schema(m) | CliError::Verify(m) => m.clone(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Schema(format!("cannot read standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Schema(format!("cannot read {path}: {e}")))
    }
}

pub fn read_json<T: DeserializeOwned>(path: &str) -> CliResult<T> {
    let text = read_source(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{path}: {e}")))
}

pub fn read_spec(path: &str) -> CliResult<SemigroupSpec> {
    read_json(path)
}

pub fn read_semigroup(path: &str) -> CliResult<CSemigroup> {
    Ok(read_spec(path)?.into_csemigroup(DEFAULT_DEGREE_CEILING)?)
}

/// A semigroup used only through membership: gap form when given gaps,
/// generator form otherwise. Generated inputs need not be 𝒞-semigroups.
pub enum AnySemigroup {
    Gaps(CSemigroup),
    Generated(GeneratedSemigroup),
}

impl AnySemigroup {
    pub fn read(path: &str) -> CliResult<Self> {
        Ok(match read_spec(path)? {
            spec @ SemigroupSpec::Gaps { .. } => AnySemigroup::Gaps(spec.into_csemigroup(DEFAULT_DEGREE_CEILING)?),
            SemigroupSpec::Generators { generators, order } => {
                AnySemigroup::Generated(GeneratedSemigroup::new(generators, order)?)
            }
        })
    }

    pub fn cone(&self) -> CliResult<csemigroup::Cone> {
        match self {
            AnySemigroup::Gaps(s) => Ok(s.cone().clone()),
            AnySemigroup::Generated(g) => Ok(g.cone()?),
        }
    }
}

impl Membership for AnySemigroup {
    fn dim(&self) -> usize {
        match self {
            AnySemigroup::Gaps(s) => s.dim(),
            AnySemigroup::Generated(g) => g.dim(),
        }
    }

    fn contains(&self, x: &LatticePoint) -> bool {
        match self {
            AnySemigroup::Gaps(s) => s.contains(x),
            AnySemigroup::Generated(g) => g.contains(x),
        }
    }
}

/// `"9,3"` as a lattice point.
pub fn parse_point(text: &str) -> CliResult<LatticePoint> {
    let coords = text
        .split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| CliError::Schema(format!("bad point {text:?}"))))
        .collect::<CliResult<Vec<i64>>>()?;
    Ok(LatticePoint::new(coords)?)
}

/// `"4,1;9,5"` as a list of lattice points.
pub fn parse_points(text: &str) -> CliResult<Vec<LatticePoint>> {
    text.split(';').filter(|p| !p.trim().is_empty()).map(parse_point).collect()
}

pub fn check_dim(expected: usize, x: &LatticePoint) -> CliResult<()> {
    if x.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: x.dim(),
        }
        .into());
    }
    Ok(())
}
