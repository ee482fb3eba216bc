//! JSON report shapes. Field order is fixed by declaration order, so a report
//! serializes identically for identical input.

use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Report {
    pub ring: RingInfo,
    pub order: String,
    pub modules: Vec<ModuleInfo>,
    pub results: Vec<QueryResult>,
}

#[derive(Debug, Serialize)]
pub struct RingInfo {
    pub variables: Vec<String>,
    pub characteristic: u64,
}

#[derive(Debug, Serialize)]
pub struct ModuleInfo {
    pub name: String,
    pub dimension: usize,
    /// Top-dimensional primes in the order used by subset indices.
    pub assh: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct QueryResult {
    pub query: usize,
    pub op: &'static str,
    pub module: String,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Ok(Payload),
    Error { kind: ErrorKind, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorKind {
    Input,
    Unsupported,
    Fault,
}

impl ErrorKind {
    pub fn exit_code(self) -> u8 {
        match self {
            ErrorKind::Input => 1,
            ErrorKind::Unsupported => 2,
            ErrorKind::Fault => 3,
        }
    }

    pub fn of(error: &lctop::Error) -> ErrorKind {
        if error.is_fault() {
            ErrorKind::Fault
        } else if error.is_unsupported() {
            ErrorKind::Unsupported
        } else {
            ErrorKind::Input
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Att {
        ideal: String,
        attached: Vec<String>,
    },
    Realization(Realization),
    Reduction {
        input: String,
        ideal: String,
        dimension: i32,
        attached: Vec<String>,
    },
    Combine {
        inputs: [String; 2],
        attached: Vec<String>,
        realization: Realization,
        direct_intersection: Option<String>,
    },
    Enumerate(Table),
    Lemma25 {
        subset: Vec<String>,
        holds: bool,
    },
}

#[derive(Debug, Serialize)]
pub struct Realization {
    pub target: Vec<String>,
    pub ideal: String,
    pub path: &'static str,
    pub attached: Vec<String>,
    pub certificates: Vec<ChoiceInfo>,
}

#[derive(Debug, Serialize)]
pub struct ChoiceInfo {
    pub excluded: String,
    pub prime: String,
    pub added_forms: Vec<String>,
    pub witness: String,
}

#[derive(Debug, Serialize)]
pub struct Table {
    pub count: usize,
    pub distinct: usize,
    pub rows: Vec<Row>,
}

#[derive(Debug, Serialize)]
pub struct Row {
    pub subset: Vec<String>,
    pub ideal: String,
    pub attached: Vec<String>,
}

/// Pretty JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize infallibly");
    out.push('\n');
    out
}
