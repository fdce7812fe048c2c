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

//! Coefficients as signed differences of even and odd circulations.

use alon_tarsi::circulations;
use alon_tarsi::graphs::{Graph, Orientation};

fn main() {
    let k4 = Graph::complete(4);
    let mut agree = 0;
    for d in Orientation::all(&k4) {
        let r = circulations::verify_at_correspondence(&k4, &d).unwrap();
        assert!(r.holds);
        if r.coefficient != 0 {
            agree += 1;
        }
    }
    println!("K_4: all 64 orientations agree, {agree} have nonzero coefficient");

    let d = Orientation::from_arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let c = circulations::circulation_diff(&d).unwrap();
    println!(
        "cyclic C_5: even {}, odd {}, sign {}",
        c.even,
        c.odd,
        circulations::sign_of_orientation(&d)
    );

    let g = Graph::complete_bipartite(2, 3);
    let cert = circulations::at_upper_bound_certificate(&g, 3).unwrap().unwrap();
    println!(
        "K_2,3: orientation {:?} with indegrees {:?} shows AT ≤ 3",
        cert.orientation.arcs(),
        cert.indegrees.as_slice()
    );
}
