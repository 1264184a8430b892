//! File formats, standard graph generators, and the verification harness
//! around `fiedler-core`.

pub mod edgelist;
pub mod generators;
pub mod report;

use std::fmt;

use fiedler_core::bisect::BisectError;
use fiedler_core::eigen::EigenError;
use fiedler_core::family::FamilyError;
use fiedler_core::graph::GraphError;
use fiedler_core::oracle::OracleError;

#[derive(Debug)]
pub enum HarnessError {
    Io(std::io::Error),
    Parse { line: usize, message: String },
    BadDescriptor { descriptor: String, reason: String },
    UnknownFormat { format: String },
    Graph(GraphError),
    Eigen(EigenError),
    Bisect(BisectError),
    Family(FamilyError),
    Oracle(OracleError),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::Io(e) => write!(f, "io error: {e}"),
            HarnessError::Parse { line, message } => write!(f, "line {line}: {message}"),
            HarnessError::BadDescriptor { descriptor, reason } => {
                write!(f, "bad base-graph descriptor '{descriptor}': {reason}")
            }
            HarnessError::UnknownFormat { format } => write!(f, "unknown format '{format}'"),
            HarnessError::Graph(e) => write!(f, "{e}"),
            HarnessError::Eigen(e) => write!(f, "{e}"),
            HarnessError::Bisect(e) => write!(f, "{e}"),
            HarnessError::Family(e) => write!(f, "{e}"),
            HarnessError::Oracle(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for HarnessError {}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        HarnessError::Io(e)
    }
}

impl From<GraphError> for HarnessError {
    fn from(e: GraphError) -> Self {
        HarnessError::Graph(e)
    }
}

impl From<EigenError> for HarnessError {
    fn from(e: EigenError) -> Self {
        HarnessError::Eigen(e)
    }
}

impl From<BisectError> for HarnessError {
    fn from(e: BisectError) -> Self {
        HarnessError::Bisect(e)
    }
}

impl From<FamilyError> for HarnessError {
    fn from(e: FamilyError) -> Self {
        HarnessError::Family(e)
    }
}

impl From<OracleError> for HarnessError {
    fn from(e: OracleError) -> Self {
        HarnessError::Oracle(e)
    }
}
