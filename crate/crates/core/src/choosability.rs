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

//! Brute-force list coloring for tiny graphs.
//!
//! List assignments are enumerated up to renaming of colors: vertices are
//! visited in index order and colors seen for the first time get the next
//! free labels. The reduced search additionally uses two facts about a
//! non-colorable (bad) assignment `L` of `G`:
//!
//! * if some color of `L(v)` occurs in no neighbor's list, `L` restricted
//!   to `G − v` is still bad;
//! * if `deg(v) < k`, `L` restricted to `G − v` is still bad.
//!
//! So `G` is `k`-choosable iff no connected induced subgraph of minimum
//! degree `≥ k` carries a bad assignment in which every color of every
//! list also occurs at a neighbor.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards::Guards;
use crate::polycoeff;

/// Per-vertex color lists, each stored sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct ListAssignment(Vec<Vec<u32>>);

impl TryFrom<Vec<Vec<u32>>> for ListAssignment {
    type Error = Error;
    fn try_from(lists: Vec<Vec<u32>>) -> Result<Self> {
        ListAssignment::new(lists)
    }
}

impl From<ListAssignment> for Vec<Vec<u32>> {
    fn from(l: ListAssignment) -> Self {
        l.0
    }
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<u32>>) -> Result<Self> {
        for (v, list) in lists.iter_mut().enumerate() {
            let len = list.len();
            list.sort_unstable();
            list.dedup();
            if list.is_empty() || list.len() != len {
                return Err(Error::InvalidParameter(format!(
                    "list of vertex {v} must be nonempty with distinct colors"
                )));
            }
        }
        Ok(Self(lists))
    }

    /// The same list at every vertex.
    pub fn uniform(n: usize, list: &[u32]) -> Result<Self> {
        Self::new(vec![list.to_vec(); n])
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        let mut all: Vec<u32> = self.0.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }
}

/// Smallest-last vertex order, reversed: every vertex has at most
/// `degeneracy` neighbors before it.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = (0..g.n())
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertices remain");
        removed[v] = true;
        for &w in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
        order.push(v);
    }
    order.reverse();
    order
}

/// A proper coloring with `color[v] ∈ L(v)`, or `None` when none exists.
pub fn l_colorable(g: &Graph, lists: &ListAssignment) -> Option<Vec<u32>> {
    assert_eq!(lists.len(), g.n(), "one list per vertex");
    let adj = g.adjacency();
    let order = degeneracy_order(g);
    let mut color: Vec<Option<u32>> = vec![None; g.n()];
    fn go(pos: usize, order: &[usize], adj: &[Vec<usize>], lists: &[Vec<u32>], color: &mut [Option<u32>]) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        for &c in &lists[v] {
            if adj[v].iter().all(|&w| color[w] != Some(c)) {
                color[v] = Some(c);
                if go(pos + 1, order, adj, lists, color) {
                    return true;
                }
            }
        }
        color[v] = None;
        false
    }
    go(0, &order, &adj, lists.lists(), &mut color).then(|| color.into_iter().map(|c| c.expect("colored")).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Every canonical assignment of the whole graph.
    Plain,
    /// Core subgraphs and private-color-free assignments only.
    Reduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityVerdict {
    pub k: u32,
    pub choosable: bool,
    /// A bad assignment of the whole graph when not choosable.
    pub witness: Option<ListAssignment>,
    pub universe_size: u32,
    /// True when `universe_size ≥ k·n`, i.e. a positive verdict is a proof.
    pub complete: bool,
    pub mode: SearchMode,
    /// Leaf assignments tested for colorability.
    pub assignments_checked: u64,
}

impl ChoosabilityVerdict {
    pub fn label(&self) -> &'static str {
        match (self.choosable, self.complete) {
            (false, _) => "not choosable",
            (true, true) => "choosable",
            (true, false) => "choosable within universe",
        }
    }
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Exact number of canonical `k`-list assignments on `n` vertices with at
/// most `universe` colors (saturating).
pub fn canonical_assignment_count(n: usize, k: u32, universe: u32) -> u128 {
    let (k, universe) = (k as usize, universe as usize);
    // ways[used] for the remaining suffix, built from the last vertex back
    let mut ways = vec![1u128; universe + 1];
    for _ in 0..n {
        let next: Vec<u128> = (0..=universe)
            .map(|used| {
                (0..=k.min(universe - used))
                    .map(|new| binom(used as u128, (k - new) as u128).saturating_mul(ways[used + new]))
                    .fold(0u128, u128::saturating_add)
            })
            .collect();
        ways = next;
    }
    ways[0]
}

pub fn k_choosable(g: &Graph, k: u32, universe: u32) -> Result<ChoosabilityVerdict> {
    k_choosable_with(g, k, universe, SearchMode::Reduced, &Guards::default())
}

pub fn k_choosable_with(
    g: &Graph,
    k: u32,
    universe: u32,
    mode: SearchMode,
    guards: &Guards,
) -> Result<ChoosabilityVerdict> {
    if k == 0 || universe < k {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= universe, got k = {k}, universe = {universe}"
        )));
    }
    let n = g.n();
    if n > 24 {
        return Err(Error::SizeGuard {
            what: "choosability vertices",
            size: n as u128,
            limit: 24,
        });
    }
    let full = (k as u128).saturating_mul(n as u128);
    let effective = (universe as u128).min(full) as u32;
    let complete = universe as u128 >= full;

    let subgraphs: Vec<Vec<usize>> = match mode {
        SearchMode::Plain => vec![(0..n).collect()],
        SearchMode::Reduced => core_subgraphs(g, k as usize),
    };
    let bound = subgraphs
        .iter()
        .map(|s| canonical_assignment_count(s.len(), k, effective.min(k * s.len() as u32)))
        .fold(0u128, u128::saturating_add);
    if bound > guards.max_assignments {
        return Err(Error::SizeGuard {
            what: "canonical list assignments",
            size: bound,
            limit: guards.max_assignments,
        });
    }

    let results: Vec<(u64, Option<Vec<Vec<u32>>>)> = subgraphs
        .par_iter()
        .map(|s| {
            let sub = induced(g, s);
            let mut search = AssignmentSearch::new(&sub, k, effective.min(k * s.len() as u32), mode);
            let bad = search.run();
            (search.checked, bad)
        })
        .collect();

    let assignments_checked = results.iter().map(|r| r.0).sum();
    // first witness in subgraph order keeps the output deterministic
    let witness = subgraphs
        .iter()
        .zip(&results)
        .find_map(|(s, (_, bad))| bad.as_ref().map(|lists| extend_witness(n, k, s, lists)))
        .transpose()?;
    if let Some(w) = &witness {
        if l_colorable(g, w).is_some() {
            return Err(Error::Verification("reported witness is colorable".into()));
        }
    }
    Ok(ChoosabilityVerdict {
        k,
        choosable: witness.is_none(),
        witness,
        universe_size: universe,
        complete,
        mode,
        assignments_checked,
    })
}

/// Lifts a bad assignment of `G[S]` to `G`; vertices outside `S` get `{0, …, k−1}`.
fn extend_witness(n: usize, k: u32, s: &[usize], lists: &[Vec<u32>]) -> Result<ListAssignment> {
    let mut out = vec![(0..k).collect::<Vec<_>>(); n];
    for (i, &v) in s.iter().enumerate() {
        out[v] = lists[i].clone();
    }
    ListAssignment::new(out)
}

fn induced(g: &Graph, s: &[usize]) -> Graph {
    let pos = |v: usize| s.iter().position(|&x| x == v);
    let edges = g
        .edges()
        .iter()
        .filter_map(|&(i, j)| Some((pos(i)?, pos(j)?)));
    Graph::new(s.len(), edges).expect("induced subgraph is simple")
}

/// Connected induced subgraphs on at least two vertices with minimum
/// degree `≥ k`, as sorted vertex lists.
fn core_subgraphs(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let sub = induced(g, &s);
        if sub.is_connected() && sub.degrees().iter().all(|&d| d >= k) {
            out.push(s);
        }
    }
    out
}

struct AssignmentSearch<'a> {
    g: &'a Graph,
    adj: Vec<Vec<usize>>,
    k: usize,
    universe: usize,
    mode: SearchMode,
    // settle[p] = vertices whose closed neighborhood is fully listed at position p
    settle: Vec<Vec<usize>>,
    lists: Vec<Vec<u32>>,
    checked: u64,
}

impl<'a> AssignmentSearch<'a> {
    fn new(g: &'a Graph, k: u32, universe: u32, mode: SearchMode) -> Self {
        let adj = g.adjacency();
        let mut settle = vec![Vec::new(); g.n()];
        for v in 0..g.n() {
            let last = adj[v].iter().copied().chain([v]).max().expect("nonempty");
            settle[last].push(v);
        }
        Self {
            g,
            adj,
            k: k as usize,
            universe: universe as usize,
            mode,
            settle,
            lists: Vec::with_capacity(g.n()),
            checked: 0,
        }
    }

    fn run(&mut self) -> Option<Vec<Vec<u32>>> {
        self.go(0, 0)
    }

    fn no_private_colors(&self, v: usize) -> bool {
        self.lists[v]
            .iter()
            .all(|c| self.adj[v].iter().any(|&w| self.lists[w].binary_search(c).is_ok()))
    }

    fn go(&mut self, v: usize, used: usize) -> Option<Vec<Vec<u32>>> {
        if v == self.g.n() {
            self.checked += 1;
            let lists = ListAssignment(self.lists.clone());
            return l_colorable(self.g, &lists).is_none().then(|| self.lists.clone());
        }
        for new in 0..=self.k.min(self.universe - used) {
            let old = self.k - new;
            if old > used {
                continue;
            }
            let fresh: Vec<u32> = (used..used + new).map(|c| c as u32).collect();
            let mut subset: Vec<usize> = (0..old).collect();
            loop {
                let mut list: Vec<u32> = subset.iter().map(|&c| c as u32).collect();
                list.extend(&fresh);
                self.lists.push(list);
                let ok = self.mode == SearchMode::Plain || self.settle[v].iter().all(|&w| self.no_private_colors(w));
                if ok {
                    if let Some(bad) = self.go(v + 1, used + new) {
                        return Some(bad);
                    }
                }
                self.lists.pop();
                if !next_subset(&mut subset, used) {
                    break;
                }
            }
        }
        None
    }
}

/// Advances a sorted `r`-subset of `0..n` in lexicographic order.
fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let r = subset.len();
    for i in (0..r).rev() {
        if subset[i] < n - r + i {
            subset[i] += 1;
            for j in i + 1..r {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn chromatic_number(g: &Graph) -> u32 {
    (1..=g.n().max(1) as u32)
        .find(|&c| {
            let palette: Vec<u32> = (0..c).collect();
            l_colorable(g, &ListAssignment::uniform(g.n(), &palette).expect("nonempty")).is_some()
        })
        .unwrap_or(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListChromaticReport {
    pub chi_l: u32,
    pub chromatic: u32,
    /// `None` when the graph exceeds the expansion guard.
    pub alon_tarsi: Option<u32>,
    pub verdicts: Vec<ChoosabilityVerdict>,
    /// `χ ≤ χ_l ≤ AT` on everything computed.
    pub sandwich_holds: bool,
}

pub fn list_chromatic_number(g: &Graph, kmax: u32) -> Result<ListChromaticReport> {
    list_chromatic_number_with(g, kmax, &Guards::default())
}

/// Smallest `k ≤ kmax` for which `g` is `k`-choosable, searching with the
/// complete universe `k·n` at each `k`.
pub fn list_chromatic_number_with(g: &Graph, kmax: u32, guards: &Guards) -> Result<ListChromaticReport> {
    let mut verdicts = Vec::new();
    for k in 1..=kmax {
        let universe = (k * g.n() as u32).max(k);
        let verdict = k_choosable_with(g, k, universe, SearchMode::Reduced, guards)?;
        let done = verdict.choosable;
        verdicts.push(verdict);
        if done {
            let chromatic = chromatic_number(g);
            let alon_tarsi = match polycoeff::alon_tarsi_number_with(g, guards) {
                Ok(r) => Some(r.at),
                Err(Error::SizeGuard { .. }) => None,
                Err(e) => return Err(e),
            };
            return Ok(ListChromaticReport {
                chi_l: k,
                chromatic,
                alon_tarsi,
                verdicts,
                sandwich_holds: chromatic <= k && alon_tarsi.is_none_or(|at| k <= at),
            });
        }
    }
    Err(Error::InvalidParameter(format!("not {kmax}-choosable; raise kmax")))
}
