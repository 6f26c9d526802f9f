use std::fmt;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::{json, Value};

/// One result line, in both renderings.
#[derive(Clone, Debug)]
pub struct Record {
    pub text: String,
    pub json: Value,
}

impl Record {
    /// A structured object: the JSON is its serde form.
    pub fn object<T: Serialize>(text: impl Into<String>, value: &T) -> Record {
        Record { text: text.into(), json: serde_json::to_value(value).expect("serializable") }
    }

    /// A scalar answer wrapped as `{"value": ...}` with the inputs alongside.
    pub fn value<T: Serialize + fmt::Display>(value: T, inputs: Value) -> Record {
        let mut json = inputs;
        if let Value::Object(m) = &mut json {
            m.insert("value".into(), serde_json::to_value(&value).expect("serializable"));
        } else {
            json = json!({ "value": value });
        }
        Record { text: value.to_string(), json }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            self.json.to_string()
        } else {
            self.text.clone()
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Failure {
        Failure::Usage(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Domain(_) => 2,
        }
    }

    pub fn exit(&self) -> ExitCode {
        ExitCode::from(self.exit_code())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Domain(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<orbit_goldie::Error> for Failure {
    fn from(e: orbit_goldie::Error) -> Failure {
        match e {
            orbit_goldie::Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

pub type Outcome = Result<Vec<Record>, Failure>;
