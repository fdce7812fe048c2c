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

//! Exact arithmetic in Z[ω].

use alon_tarsi::EisensteinInt;

fn main() {
    let w = EisensteinInt::OMEGA;
    println!("ω² = {}", w * w);
    println!("ω³ = {}", w * w * w);

    let z: EisensteinInt = "3-2w".parse().unwrap();
    println!("z = {z}, conj(z) = {}, N(z) = {}", z.conj(), z.norm());
    println!("z · conj(z) = {}", z * z.conj());

    // 1 − ω is i√3·ω², so its square is −3ω
    let d = EisensteinInt::ONE - w;
    println!("(1 − ω)² = {}, class {:?}", d * d, (d * d).reality_class());
    println!("(1 − ω) embeds as {:?}", d.embed_complex());

    let q = (z * d).div_exact(d).unwrap();
    println!("(z(1 − ω)) / (1 − ω) = {q}");
    match EisensteinInt::new(i64::MAX, 0).checked_mul(EisensteinInt::new(2, 0)) {
        Ok(v) => println!("unexpected {v}"),
        Err(e) => println!("overflow is reported: {e}"),
    }
}
