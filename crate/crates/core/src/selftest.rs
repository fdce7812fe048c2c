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

//! Built-in oracle-equivalence checks, runnable from the command line.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::choosability;
use crate::circulations;
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::graphs::{Graph, Orientation, TorusSpec};
use crate::polycoeff::{self, ColorSets, ExponentVector};
use crate::transfer::{self, BuildMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Fast,
    Full,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            other => Err(Error::InvalidParameter(format!(
                "unknown selftest level {other:?} (expected fast or full)"
            ))),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Fast => "fast",
            Level::Full => "full",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub level: Level,
    pub checks: Vec<CheckOutcome>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

type Check = (&'static str, fn() -> Result<String>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(msg()))
    }
}

fn antihermitian() -> Result<String> {
    for n in [3, 5, 7] {
        let m = transfer::build_matrix(&Graph::cycle(n)?, BuildMode::CycleFast)?;
        ensure(m.is_antihermitian() && !m.is_zero(), || format!("C_{n} matrix is not a nonzero antihermitian matrix"))?;
    }
    Ok("C_3, C_5, C_7".into())
}

fn modes_agree() -> Result<String> {
    for n in [3, 5, 7] {
        let h = Graph::cycle(n)?;
        let fast = transfer::build_matrix(&h, BuildMode::CycleFast)?;
        let general = transfer::build_matrix(&h, BuildMode::General)?;
        ensure(fast == general, || format!("build modes differ on C_{n}"))?;
    }
    Ok("C_3, C_5, C_7".into())
}

fn c3_traces() -> Result<String> {
    let m = transfer::build_matrix(&Graph::cycle(3)?, BuildMode::CycleFast)?;
    let tr = transfer::trace_powers(&m, 6)?;
    let expected = [(2, -12), (3, 0), (4, 36), (5, 0), (6, -108)];
    for (k, v) in expected {
        ensure(tr[k - 1] == EisensteinInt::from_int(v), || format!("tr M^{k} = {}, expected {v}", tr[k - 1]))?;
    }
    Ok("tr M^2..6 = -12, 0, 36, 0, -108".into())
}

fn odd_odd_vanishing() -> Result<String> {
    for (m, k) in [(3, 3), (3, 5), (5, 3), (5, 5)] {
        let tc = transfer::torus_coefficient(m, k)?;
        ensure(tc.trace.is_zero(), || format!("tr M^{k} on C_{m} = {}", tc.trace))?;
    }
    Ok("(3,3) (3,5) (5,3) (5,5)".into())
}

fn bridge(m: usize, k: usize) -> Result<String> {
    let tc = transfer::torus_coefficient(m, k)?;
    let g = Graph::torus(TorusSpec::new(m, k)?);
    let direct = polycoeff::coefficient_of(&g, &ExponentVector::uniform(m * k, 2))?;
    ensure(tc.coefficient == EisensteinInt::from_int(direct), || {
        format!("expansion gives {direct}, σ·trace gives {}", tc.coefficient)
    })?;
    Ok(format!("T_{m},{k}: coefficient {direct} = {}·({})", tc.sigma, tc.trace.a))
}

fn correspondence() -> Result<String> {
    let graphs = [Graph::cycle(3)?, Graph::cycle(4)?, Graph::cycle(5)?, Graph::complete(4)];
    let mut total = 0;
    for g in &graphs {
        for d in Orientation::all(g) {
            let r = circulations::verify_at_correspondence(g, &d)?;
            ensure(r.holds, || format!("correspondence fails: {r:?}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} orientations"))
}

fn formula() -> Result<String> {
    let mut total = 0;
    for g in [Graph::cycle(3)?, Graph::cycle(4)?] {
        for (t, c) in polycoeff::expand(&g, None)?.iter() {
            let sets = ColorSets::new(
                t.iter()
                    .map(|&ti| (0..=ti as i64).map(EisensteinInt::from_int).collect())
                    .collect(),
            )?;
            let via_formula = polycoeff::coefficient_formula(&g, t, &sets)?;
            ensure(via_formula == EisensteinInt::from_int(c), || format!("{t:?}: {via_formula} vs {c}"))?;
            total += 1;
        }
    }
    for (m, k) in [(3, 3), (3, 4)] {
        let g = Graph::torus(TorusSpec::new(m, k)?);
        let t = ExponentVector::uniform(m * k, 2);
        let via_formula = polycoeff::coefficient_formula(&g, &t, &ColorSets::cube_roots(m * k))?;
        let tc = transfer::torus_coefficient(m, k)?;
        ensure(via_formula == tc.coefficient, || format!("T_{m},{k}: {via_formula} vs {}", tc.coefficient))?;
        total += 1;
    }
    Ok(format!("{total} monomials"))
}

fn choosability_small() -> Result<String> {
    let c4 = choosability::list_chromatic_number(&Graph::cycle(4)?, 3)?;
    let c5 = choosability::list_chromatic_number(&Graph::cycle(5)?, 3)?;
    ensure(c4.chi_l == 2 && c5.chi_l == 3, || format!("χ_l(C_4) = {}, χ_l(C_5) = {}", c4.chi_l, c5.chi_l))?;
    Ok("χ_l(C_4) = 2, χ_l(C_5) = 3".into())
}

fn choosability_bipartite() -> Result<String> {
    let a = choosability::list_chromatic_number(&Graph::complete_bipartite(2, 3), 3)?;
    let b = choosability::list_chromatic_number(&Graph::complete_bipartite(2, 4), 3)?;
    ensure(a.chi_l == 2 && b.chi_l == 3 && a.sandwich_holds && b.sandwich_holds, || {
        format!("χ_l(K_2,3) = {}, χ_l(K_2,4) = {}", a.chi_l, b.chi_l)
    })?;
    Ok("χ_l(K_2,3) = 2, χ_l(K_2,4) = 3".into())
}

fn at_table() -> Result<String> {
    for (m, n, at) in [(3, 4, 3), (3, 6, 3), (5, 4, 3), (3, 3, 4), (3, 5, 4), (4, 4, 3)] {
        let v = transfer::at_torus(m, n)?;
        ensure(v.at == at && v.trace.is_some(), || format!("AT(T_{m},{n}) = {}, expected {at}", v.at))?;
    }
    Ok("six desk instances".into())
}

const FAST: &[Check] = &[
    ("antihermitian transfer matrices", antihermitian),
    ("build modes agree", modes_agree),
    ("C_3 trace values", c3_traces),
    ("odd x odd traces vanish", odd_odd_vanishing),
    ("T_3,3 expansion bridge", || bridge(3, 3)),
    ("orientation correspondence", correspondence),
    ("coefficient formula", formula),
    ("small list chromatic numbers", choosability_small),
];

const FULL: &[Check] = &[
    ("T_3,4 expansion bridge", || bridge(3, 4)),
    ("T_4,3 expansion bridge", || bridge(4, 3)),
    ("AT table", at_table),
    ("bipartite list chromatic numbers", choosability_bipartite),
];

pub fn run(level: Level) -> SelftestReport {
    let checks = match level {
        Level::Fast => FAST.to_vec(),
        Level::Full => FAST.iter().chain(FULL).copied().collect(),
    };
    let checks = checks
        .into_iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let (passed, detail) = match check() {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            CheckOutcome {
                name: name.to_string(),
                passed,
                detail,
                millis: start.elapsed().as_secs_f64() * 1e3,
            }
        })
        .collect();
    SelftestReport { level, checks }
}
