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

//! Driving the command-line front end in-process and reading its JSON.

use alon_tarsi::cli;
use alon_tarsi::report::RunReport;

fn main() {
    for args in [
        vec!["atcert", "at-torus", "3", "4"],
        vec!["atcert", "at-torus", "3", "3"],
        vec!["atcert", "trace", "--m", "5", "--k", "6"],
        vec!["atcert", "at-torus", "2", "5"],
    ] {
        match cli::run_args(&args) {
            Ok(out) => {
                print!("{}", out.text);
                let back = RunReport::from_json(&out.report.to_json()).unwrap();
                println!("  {} certificate(s), round trip ok: {}", back.certificates.len(), back == out.report);
            }
            Err((code, msg)) => println!("exit {code}: {msg}"),
        }
    }
}
