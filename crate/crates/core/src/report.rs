// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! JSON wire types shared by the command-line front end.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::choosability::ListAssignment;
use crate::error::{Error, Result};
use crate::guards::Guards;

/// Everything one command run produced. Apart from `wall_time_ms`, the
/// same command always yields the same report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Value,
    pub result: Value,
    pub certificates: Vec<Value>,
    pub guards: Guards,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(command: &str, parameters: Value, result: Value) -> Self {
        Self {
            command: command.to_string(),
            parameters,
            result,
            certificates: Vec::new(),
            guards: Guards::default(),
            wall_time_ms: 0.0,
        }
    }

    pub fn with_certificate<T: Serialize>(mut self, cert: &T) -> Self {
        self.certificates
            .push(serde_json::to_value(cert).expect("certificates serialize"));
        self
    }

    /// The report without its timing, for reproducibility comparisons.
    pub fn payload(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("wall_time_ms");
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A list assignment together with its colorability verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListWitness {
    pub lists: ListAssignment,
    pub colorable: bool,
}
