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

//! Building graphs, Cartesian products, toroidal grids and orientations.

use alon_tarsi::graphs::{Graph, Orientation, TorusSpec};

fn main() {
    let c3 = Graph::cycle(3).unwrap();
    let p3 = Graph::path(3);
    let prism = Graph::cartesian_product(&c3, &p3);
    println!("C_3 □ P_3: {} vertices, {} edges", prism.n(), prism.edge_count());

    let t = Graph::torus(TorusSpec::new(3, 4).unwrap());
    println!("T_3,4: {} vertices, {}-regular", t.n(), t.regularity().unwrap());
    // vertex (u, v) of C_m □ C_k is numbered v·m + u
    println!("first edges: {:?}", &t.edges()[..6]);

    let text = Graph::complete_bipartite(2, 3).to_edge_list();
    println!("K_2,3 as an edge list:\n{text}");
    let back = Graph::parse_edge_list(&text).unwrap();
    println!("parsed back: {:?}", back.edges());

    match Graph::parse_edge_list("3 2\n0 1\n1 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    let d = Orientation::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    println!("cyclic C_4 orientation, indegrees {:?}", d.indegrees().as_slice());
    print!("{}", d.to_text());
}
