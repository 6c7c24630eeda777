use std::fmt;

use thiserror::Error;

/// Upper bound on the number of witnesses collected for one failing axiom.
pub const MAX_WITNESSES: usize = 64;

/// A single axiom failure together with the tuple that exhibits it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(axiom: &'static str, witness: impl Into<Vec<usize>>) -> Self {
        Violation {
            axiom,
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AXIOM {} WITNESS (", self.axiom)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of an exhaustive axiom check. `valid` is true iff there are no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn ok() -> Self {
        Report {
            valid: true,
            violations: Vec::new(),
        }
    }

    pub fn failed(violations: Vec<Violation>) -> Self {
        debug_assert!(!violations.is_empty());
        Report {
            valid: false,
            violations,
        }
    }

    pub fn single(axiom: &'static str, witness: impl Into<Vec<usize>>) -> Self {
        Report::failed(vec![Violation::new(axiom, witness)])
    }

    /// Name of the first failing axiom, if any.
    pub fn first_axiom(&self) -> Option<&'static str> {
        self.violations.first().map(|v| v.axiom)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub type SchemeReport = Report;
pub type HypergroupReport = Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{what} exceeds the supported bound {bound} (got {actual})")]
    SizeGuard {
        what: &'static str,
        bound: usize,
        actual: usize,
    },
    #[error("association scheme axioms violated\n{0}")]
    Scheme(SchemeReport),
    #[error("hypergroup axioms violated\n{0}")]
    Hypergroup(HypergroupReport),
    #[error("structure axioms violated\n{0}")]
    Structure(Report),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(what: &'static str, bound: usize, actual: usize) -> Result<()> {
    if actual > bound {
        Err(Error::SizeGuard {
            what,
            bound,
            actual,
        })
    } else {
        Ok(())
    }
}
