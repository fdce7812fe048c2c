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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },

    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },

    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },

    #[error("{what}: size {size} exceeds guard {limit}")]
    SizeGuard {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("value {value} at vertex {vertex} is not in its set")]
    NotInSet { vertex: usize, value: String },

    #[error("set size mismatch at vertex {vertex}: expected {expected}, got {got}")]
    SetSize {
        vertex: usize,
        expected: String,
        got: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}
