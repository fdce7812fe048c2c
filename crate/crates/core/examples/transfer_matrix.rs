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

//! Transfer matrices over the cube roots of unity.

use alon_tarsi::graphs::Graph;
use alon_tarsi::transfer::{self, BuildMode, ProperColoring};

fn main() {
    for m in [3, 5, 7] {
        let mat = transfer::build_matrix(&Graph::cycle(m).unwrap(), BuildMode::General).unwrap();
        let traces = transfer::trace_powers(&mat, 8).unwrap();
        let shown: Vec<String> = traces.iter().map(|t| t.to_string()).collect();
        println!(
            "C_{m}: dim {}, antihermitian {}, tr M^1..8 = {}",
            mat.dim(),
            mat.is_antihermitian(),
            shown.join(", ")
        );
    }

    let fast = transfer::build_matrix(&Graph::cycle(5).unwrap(), BuildMode::CycleFast).unwrap();
    let general = transfer::build_matrix(&Graph::cycle(5).unwrap(), BuildMode::General).unwrap();
    println!("C_5 fast and general builds agree: {}", fast == general);

    let tc = transfer::torus_coefficient(3, 4).unwrap();
    println!("[∏x_i²] f_T3,4 = σ·tr M^4 = {}·{} = {}", tc.sigma, tc.trace.a, tc.coefficient.a);

    let u = ProperColoring::new(vec![0, 1, 2]);
    let v = ProperColoring::new(vec![1, 2, 0]);
    let d = transfer::antihermitian_parity_diagnostic(&u, &v).unwrap();
    println!(
        "parity check for {:?} → {:?}: classes {:?}, boundaries {}, ω-ratios {}, products agree {}",
        u.values(),
        v.values(),
        d.classes,
        d.boundaries,
        d.omega_ratios,
        d.products_agree
    );
}
