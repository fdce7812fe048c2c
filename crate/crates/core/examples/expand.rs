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

//! Expanding the graph polynomial ∏ (x_i − x_j).

use alon_tarsi::graphs::Graph;
use alon_tarsi::polycoeff::{self, ExponentVector};

fn main() {
    let c5 = Graph::cycle(5).unwrap();
    let table = polycoeff::expand(&c5, None).unwrap();
    println!("f_C5 has {} monomials, L1 norm {}", table.len(), table.l1_norm());

    let capped = polycoeff::expand(&c5, Some(&ExponentVector::uniform(5, 1))).unwrap();
    println!("monomials with every exponent ≤ 1: {}", capped.len());

    let k4 = Graph::complete(4);
    let t = ExponentVector::new(vec![3, 2, 1, 0]);
    println!("[x^(3,2,1,0)] f_K4 = {}", polycoeff::coefficient_of(&k4, &t).unwrap());

    let at = polycoeff::alon_tarsi_number(&c5).unwrap();
    println!("AT(C_5) = {} via {:?} (coefficient {})", at.at, at.witness.as_slice(), at.coefficient);

    print!("{}", polycoeff::expand(&Graph::cycle(3).unwrap(), None).unwrap().to_json_lines());
}
