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

use serde::{Deserialize, Serialize};

/// Size limits for the exhaustive engines. All of them are plain
/// configuration; the defaults keep every run at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Edge limit for polynomial expansion (2^|E| endpoint choices).
    pub max_expand_edges: usize,
    /// Vertex limit for coefficient-formula summation.
    pub max_formula_vertices: usize,
    /// Arc limit for circulation enumeration (2^|E| arc subsets).
    pub max_circulation_edges: usize,
    /// Vertex limit for enumerating proper colorings of a layer graph.
    pub max_layer_vertices: usize,
    /// Dimension limit for dense transfer-matrix products.
    pub max_matrix_dim: usize,
    /// Limit on canonical list assignments visited by the choosability search.
    pub max_assignments: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            max_expand_edges: 26,
            max_formula_vertices: 16,
            max_circulation_edges: 22,
            max_layer_vertices: 14,
            max_matrix_dim: 1100,
            max_assignments: 50_000_000,
        }
    }
}
