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

//! Reading a coefficient off values on a finite grid, and finding a
//! proper coloring from lists when that coefficient is nonzero.

use alon_tarsi::graphs::{Graph, TorusSpec};
use alon_tarsi::polycoeff::{self, ColorSets, ExponentVector};
use alon_tarsi::EisensteinInt;

fn main() {
    let c4 = Graph::cycle(4).unwrap();
    let t = ExponentVector::new(vec![2, 0, 2, 0]);
    let sets = ColorSets::from_ints(&[&[0, 1, 2], &[5], &[-1, 3, 4], &[7]]).unwrap();
    let f = polycoeff::coefficient_formula(&c4, &t, &sets).unwrap();
    println!("formula: {f}, expansion: {}", polycoeff::coefficient_of(&c4, &t).unwrap());

    // over the cube roots of unity the all-2s coefficient of a toroidal grid
    let t34 = Graph::torus(TorusSpec::new(3, 4).unwrap());
    let cube = ColorSets::cube_roots(t34.n());
    let all2 = ExponentVector::uniform(t34.n(), 2);
    println!(
        "[∏x_i²] f_T3,4: formula {} ({:?} sets), expansion {}",
        polycoeff::coefficient_formula(&t34, &all2, &cube).unwrap(),
        cube.mode(),
        polycoeff::coefficient_of(&t34, &all2).unwrap()
    );

    let k3 = Graph::complete(3);
    let lists = ColorSets::new(vec![
        vec![EisensteinInt::ONE, EisensteinInt::OMEGA, EisensteinInt::new(4, 4)],
        vec![EisensteinInt::ONE, EisensteinInt::OMEGA],
        vec![EisensteinInt::ONE, EisensteinInt::OMEGA2],
    ])
    .unwrap();
    let t = ExponentVector::new(vec![2, 1, 0]);
    let p = polycoeff::cn_point_search(&k3, &t, &lists).unwrap().unwrap();
    let values: Vec<String> = p.0.iter().map(|z| z.to_string()).collect();
    println!("coloring from the lists: {values:?}, f_K3 = {}", polycoeff::evaluate(&k3, &p.0).unwrap());
}
