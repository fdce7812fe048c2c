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

use std::path::PathBuf;
use std::process::{Command, Output};

use alon_tarsi::report::RunReport;

fn atcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atcert")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("atcert-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn at_torus_text() {
    let o = atcert(&["at-torus", "3", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("AT(T_{3,4}) = 3 (trace certificate, tr M^4 = 36·σ"));
    let o = atcert(&["at-torus", "3", "3"]);
    assert_eq!(stdout(&o).trim(), "AT(T_{3,3}) = 4 (trace = 0; capped-3 witness attached)");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(atcert(&["at-torus", "2", "5"]).status.code(), Some(2));
    assert_eq!(atcert(&["selftest", "medium"]).status.code(), Some(2));
    assert_eq!(atcert(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(atcert(&["coeff", "no-such-graph", "--exponents", "1"]).status.code(), Some(2));
    let o = atcert(&["choosable", "T3x3", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("toroidal grid"));
}

#[test]
fn malformed_file_names_line() {
    let p = scratch("bad.txt", "3 2\n0 1\n1 7\n");
    let o = atcert(&["at", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn json_payload_round_trips_and_repeats() {
    for args in [
        vec!["--json", "at-torus", "3", "3"],
        vec!["--json", "trace", "--m", "5", "--k", "4"],
        vec!["--json", "expand", "K4", "--cap", "2"],
        vec!["--json", "list-chromatic", "K2,4"],
        vec!["--json", "selftest", "fast"],
    ] {
        let a = RunReport::from_json(&stdout(&atcert(&args))).unwrap();
        let b = RunReport::from_json(&stdout(&atcert(&args))).unwrap();
        assert_eq!(RunReport::from_json(&a.to_json()).unwrap(), a);
        if args[1] != "selftest" {
            assert_eq!(a.payload(), b.payload(), "{args:?}");
        }
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let one = RunReport::from_json(&stdout(&atcert(&["--json", "--threads", "1", "expand", "T3x3", "--cap", "3"])));
    let four = RunReport::from_json(&stdout(&atcert(&["--json", "--threads", "4", "expand", "T3x3", "--cap", "3"])));
    assert_eq!(one.unwrap().result, four.unwrap().result);
}

#[test]
fn files_drive_every_command() {
    let g = scratch("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let g = g.to_str().unwrap();
    let o = atcert(&["coeff", g, "--exponents", "1,1,1,1", "--formula"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("= -2\n"), "{}", stdout(&o));
    assert!(stdout(&o).contains("agrees"));
    let o = atcert(&["expand", g, "--jsonl"]);
    let lines = stdout(&o);
    let table = alon_tarsi::polycoeff::CoefficientTable::from_json_lines(&lines).unwrap();
    assert_eq!(table.to_json_lines(), lines);
    let o = atcert(&["choosable", g, "--k", "2"]);
    assert!(stdout(&o).contains("choosable"));
    let d = scratch("c4.orient", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let o = atcert(&["circ", d.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds"));
    let o = atcert(&["at", g]);
    assert!(stdout(&o).starts_with("AT = 2"));
}

#[test]
fn selftest_full_passes() {
    let o = atcert(&["selftest", "full"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("T_3,4 expansion bridge"));
}
