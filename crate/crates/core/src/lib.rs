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

//! Exact Alon–Tarsi numbers and graph-polynomial coefficients for small
//! graphs, with a transfer-matrix engine over the Eisenstein integers for
//! toroidal grids `C_m □ C_n`.
//!
//! Every answer can be cross-checked by an independent route: polynomial
//! expansion, coefficient-formula summation, circulation counting, and
//! traces of transfer-matrix powers.

pub mod choosability;
pub mod circulations;
pub mod cli;
pub mod eisenstein;
pub mod error;
pub mod graphs;
pub mod guards;
pub mod polycoeff;
pub mod report;
pub mod selftest;
pub mod transfer;

pub use eisenstein::{EisensteinInt, RealityClass};
pub use error::{Error, Result};
pub use graphs::{Graph, Orientation, TorusSpec};
pub use guards::Guards;
pub use polycoeff::{CoefficientTable, ColorSets, EvaluationPoint, ExponentVector};
