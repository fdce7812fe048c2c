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

//! Alon-Tarsi numbers of toroidal grids C_m □ C_n.

use alon_tarsi::transfer;

fn main() {
    println!("{:>3} {:>3}  AT  certificate", "m", "n");
    for m in 3..=7 {
        for n in 3..=7 {
            let v = transfer::at_torus(m, n).unwrap();
            println!("{m:>3} {n:>3}  {:>2}  {:?}", v.at, v.kind);
        }
    }
    let big = transfer::at_torus(41, 43).unwrap();
    println!("T_41,43: AT = {}, machine verified {}", big.at, big.machine_verified);
    for c in &big.citations {
        println!("  {c}");
    }
}
