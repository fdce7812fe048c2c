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

//! List colorings and choosability by exhaustive search.

use alon_tarsi::choosability::{self, ListAssignment};
use alon_tarsi::graphs::Graph;

fn main() {
    let k24 = Graph::complete_bipartite(2, 4);
    let lists = ListAssignment::new(vec![
        vec![0, 1],
        vec![2, 3],
        vec![0, 2],
        vec![0, 3],
        vec![1, 2],
        vec![1, 3],
    ])
    .unwrap();
    println!("K_2,4 from the classic bad lists: {:?}", choosability::l_colorable(&k24, &lists));

    let v = choosability::k_choosable(&k24, 2, 4).unwrap();
    println!("K_2,4 2-choosable over 4 colors: {}", v.label());
    if let Some(w) = &v.witness {
        println!("  witness {:?}", w.lists());
    }

    for (name, g) in [
        ("C_4", Graph::cycle(4).unwrap()),
        ("C_5", Graph::cycle(5).unwrap()),
        ("K_2,3", Graph::complete_bipartite(2, 3)),
        ("K_2,4", k24),
    ] {
        let r = choosability::list_chromatic_number(&g, 4).unwrap();
        println!(
            "{name}: χ = {}, χ_l = {}, AT = {:?}, χ ≤ χ_l ≤ AT: {}",
            r.chromatic, r.chi_l, r.alon_tarsi, r.sandwich_holds
        );
    }
}
