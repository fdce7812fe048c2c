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

//! The graph polynomial `f_G = ∏_{(i,j) ∈ E, i<j} (x_i − x_j)`.
//!
//! Two independent routes to a coefficient live here:
//!
//! * [`expand`] / [`coefficient_of`] walk the `2^|E|` endpoint choices of
//!   the product, keeping a running exponent vector and sign;
//! * [`coefficient_formula`] sums `f(a) / N(a)` over a grid of points
//!   `A_1 × ⋯ × A_n` with `|A_i| = t_i + 1`, where
//!   `N(a) = ∏_i ∏_{b ∈ A_i∖{a_i}} (a_i − b)`.
//!
//! Field values are Eisenstein integers throughout; rational-integer color
//! sets are the special case `b = 0`, and the formula's quotient lands in
//! `Z` exactly when the target coefficient is an integer.

use std::collections::{BTreeMap, HashMap};
use std::ops::Deref;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards::Guards;

/// Exponents `t_i` of a monomial `∏ x_i^{t_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn uniform(n: usize, t: u32) -> Self {
        Self(vec![t; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `Σ t_i`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&t| t as u64).sum()
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Deref for ExponentVector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

/// Sparse nonzero coefficients of `f_G`, ordered by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoefficientTable {
    terms: BTreeMap<ExponentVector, i64>,
}

#[derive(Serialize, Deserialize)]
struct TermLine {
    exponents: ExponentVector,
    coefficient: i64,
}

impl CoefficientTable {
    pub fn get(&self, t: &ExponentVector) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, i64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    /// `Σ |c|` over all terms.
    pub fn l1_norm(&self) -> u64 {
        self.terms.values().map(|c| c.unsigned_abs()).sum()
    }

    /// `Σ_t c_t ∏ a_i^{t_i}` at an integer point.
    pub fn evaluate(&self, point: &[i64]) -> Result<i128> {
        let of = || Error::Overflow("table evaluation");
        self.terms.iter().try_fold(0i128, |acc, (t, &c)| {
            let mono = t.iter().zip(point).try_fold(c as i128, |m, (&e, &a)| {
                (a as i128).checked_pow(e).and_then(|p| m.checked_mul(p))
            });
            mono.and_then(|m| acc.checked_add(m)).ok_or_else(of)
        })
    }

    /// One `{"exponents":[…],"coefficient":c}` object per line.
    pub fn to_json_lines(&self) -> String {
        self.terms
            .iter()
            .map(|(t, &c)| {
                let line = TermLine {
                    exponents: t.clone(),
                    coefficient: c,
                };
                serde_json::to_string(&line).expect("term serializes") + "\n"
            })
            .collect()
    }

    pub fn from_json_lines(text: &str) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let term: TermLine = serde_json::from_str(line).map_err(|e| Error::Malformed {
                line: i + 1,
                reason: e.to_string(),
            })?;
            if term.coefficient == 0 {
                return Err(Error::Malformed {
                    line: i + 1,
                    reason: "zero coefficient".into(),
                });
            }
            terms.insert(term.exponents, term.coefficient);
        }
        Ok(Self { terms })
    }
}

/// Endpoint-choice walk over the edges of a graph.
///
/// Choosing `x_i` from `(x_i − x_j)` contributes `+1`, choosing `x_j`
/// contributes `−1`. With `exact` set, a vertex whose last incident edge
/// has been decided must already sit at its cap.
struct Expander<'a> {
    edges: &'a [(usize, usize)],
    caps: Option<&'a [u32]>,
    exact: bool,
    // finished[e] = vertices whose last incident edge is e
    finished: Vec<Vec<usize>>,
}

impl<'a> Expander<'a> {
    fn new(g: &'a Graph, caps: Option<&'a [u32]>, exact: bool) -> Self {
        let mut last = vec![None; g.n()];
        for (e, &(i, j)) in g.edges().iter().enumerate() {
            last[i] = Some(e);
            last[j] = Some(e);
        }
        let mut finished = vec![Vec::new(); g.edge_count()];
        for (v, e) in last.into_iter().enumerate() {
            if let Some(e) = e {
                finished[e].push(v);
            }
        }
        Self {
            edges: g.edges(),
            caps,
            exact,
            finished,
        }
    }

    fn admissible(&self, v: usize, exps: &[u32]) -> bool {
        self.caps.is_none_or(|c| exps[v] <= c[v])
    }

    fn closed(&self, e: usize, exps: &[u32]) -> bool {
        match (self.exact, self.caps) {
            (true, Some(c)) => self.finished[e].iter().all(|&v| exps[v] == c[v]),
            _ => true,
        }
    }

    /// Visits every surviving state after `stop` edges.
    fn walk<F>(&self, e: usize, stop: usize, exps: &mut [u32], sign: i64, visit: &mut F)
    where
        F: FnMut(&[u32], i64),
    {
        if e == stop {
            visit(exps, sign);
            return;
        }
        let (i, j) = self.edges[e];
        for (v, s) in [(i, sign), (j, -sign)] {
            exps[v] += 1;
            if self.admissible(v, exps) && self.closed(e, exps) {
                self.walk(e + 1, stop, exps, s, visit);
            }
            exps[v] -= 1;
        }
    }

    /// Runs the walk with the first few edges fanned out across workers.
    fn run<T, F, R>(&self, n: usize, init: impl Fn() -> T + Sync + Send, leaf: F, reduce: R) -> T
    where
        T: Send,
        F: Fn(&mut T, &[u32], i64) + Sync,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let split = self.edges.len().min(8);
        let mut prefixes = Vec::new();
        self.walk(0, split, &mut vec![0; n], 1, &mut |exps, sign| {
            prefixes.push((exps.to_vec(), sign))
        });
        let total = self.edges.len();
        prefixes
            .into_par_iter()
            .map(|(mut exps, sign)| {
                let mut acc = init();
                self.walk(split, total, &mut exps, sign, &mut |ex, s| leaf(&mut acc, ex, s));
                acc
            })
            .reduce(&init, reduce)
    }
}

fn check_expand_guard(g: &Graph, guards: &Guards) -> Result<()> {
    if g.edge_count() > guards.max_expand_edges {
        return Err(Error::SizeGuard {
            what: "polynomial expansion edges",
            size: g.edge_count() as u128,
            limit: guards.max_expand_edges as u128,
        });
    }
    Ok(())
}

fn check_len(g: &Graph, len: usize, what: &str) -> Result<()> {
    if len != g.n() {
        return Err(Error::InvalidParameter(format!(
            "{what} has length {len}, graph has {} vertices",
            g.n()
        )));
    }
    Ok(())
}

pub fn expand(g: &Graph, cap: Option<&ExponentVector>) -> Result<CoefficientTable> {
    expand_with(g, cap, &Guards::default())
}

/// Full (or capped) expansion of `f_G`. With a cap, the table holds
/// exactly the monomials whose exponents are all within it.
pub fn expand_with(g: &Graph, cap: Option<&ExponentVector>, guards: &Guards) -> Result<CoefficientTable> {
    check_expand_guard(g, guards)?;
    if let Some(c) = cap {
        check_len(g, c.len(), "cap")?;
    }
    let walker = Expander::new(g, cap.map(|c| c.as_slice()), false);
    let merged = walker.run(
        g.n(),
        HashMap::<Vec<u32>, i64>::new,
        |acc, exps, sign| *acc.entry(exps.to_vec()).or_insert(0) += sign,
        |mut a, b| {
            if a.len() < b.len() {
                return merge_into(b, a);
            }
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    );
    let terms = merged
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(t, c)| (ExponentVector(t), c))
        .collect();
    Ok(CoefficientTable { terms })
}

fn merge_into(mut big: HashMap<Vec<u32>, i64>, small: HashMap<Vec<u32>, i64>) -> HashMap<Vec<u32>, i64> {
    for (k, v) in small {
        *big.entry(k).or_insert(0) += v;
    }
    big
}

pub fn coefficient_of(g: &Graph, t: &ExponentVector) -> Result<i64> {
    coefficient_of_with(g, t, &Guards::default())
}

/// Signed coefficient of `∏ x_i^{t_i}` in `f_G`. Non-homogeneous targets
/// return 0 without expanding.
pub fn coefficient_of_with(g: &Graph, t: &ExponentVector, guards: &Guards) -> Result<i64> {
    check_len(g, t.len(), "exponent vector")?;
    if t.degree() != g.edge_count() as u64 {
        return Ok(0);
    }
    check_expand_guard(g, guards)?;
    let walker = Expander::new(g, Some(t.as_slice()), true);
    Ok(walker.run(g.n(), || 0i64, |acc, _, sign| *acc += sign, |a, b| a + b))
}

/// `f_G` evaluated at a point, in the canonical `i < j` edge order.
pub fn evaluate(g: &Graph, point: &[EisensteinInt]) -> Result<EisensteinInt> {
    check_len(g, point.len(), "point")?;
    EisensteinInt::checked_product(g.edges().iter().map(|&(i, j)| point[i] - point[j]))
}

/// A point `(a_1, …, a_n)` of the field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EvaluationPoint(pub Vec<EisensteinInt>);

impl EvaluationPoint {
    pub fn from_ints(values: &[i64]) -> Self {
        Self(values.iter().map(|&a| EisensteinInt::from_int(a)).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldMode {
    /// Every set lies in `Z`.
    Rational,
    /// Some set has an element off the real axis.
    Eisenstein,
}

/// Finite sets `A_1, …, A_n` of distinct field values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<EisensteinInt>>", into = "Vec<Vec<EisensteinInt>>")]
pub struct ColorSets(Vec<Vec<EisensteinInt>>);

impl TryFrom<Vec<Vec<EisensteinInt>>> for ColorSets {
    type Error = Error;
    fn try_from(sets: Vec<Vec<EisensteinInt>>) -> Result<Self> {
        ColorSets::new(sets)
    }
}

impl From<ColorSets> for Vec<Vec<EisensteinInt>> {
    fn from(s: ColorSets) -> Self {
        s.0
    }
}

impl ColorSets {
    pub fn new(sets: Vec<Vec<EisensteinInt>>) -> Result<Self> {
        for (v, set) in sets.iter().enumerate() {
            for (x, a) in set.iter().enumerate() {
                if set[..x].contains(a) {
                    return Err(Error::InvalidParameter(format!(
                        "set {v} repeats the value {a}"
                    )));
                }
            }
        }
        Ok(Self(sets))
    }

    pub fn from_ints(sets: &[&[i64]]) -> Result<Self> {
        Self::new(
            sets.iter()
                .map(|s| s.iter().map(|&a| EisensteinInt::from_int(a)).collect())
                .collect(),
        )
    }

    /// `{1, ω, ω²}` at every vertex.
    pub fn cube_roots(n: usize) -> Self {
        let roots: Vec<_> = (0..3).map(EisensteinInt::unit_root).collect();
        Self(vec![roots; n])
    }

    pub fn sets(&self) -> &[Vec<EisensteinInt>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mode(&self) -> FieldMode {
        if self.0.iter().flatten().all(|a| a.is_real()) {
            FieldMode::Rational
        } else {
            FieldMode::Eisenstein
        }
    }
}

/// `∏_{b ∈ set∖{a}} (a − b)`.
fn vertex_weight(a: EisensteinInt, set: &[EisensteinInt]) -> Result<EisensteinInt> {
    EisensteinInt::checked_product(set.iter().filter(|&&b| b != a).map(|&b| a - b))
}

/// `N(a) = ∏_i ∏_{b ∈ A_i∖{a_i}} (a_i − b)`. Never zero.
pub fn weight_n(point: &EvaluationPoint, sets: &ColorSets) -> Result<EisensteinInt> {
    if point.0.len() != sets.len() {
        return Err(Error::InvalidParameter(format!(
            "point has {} coordinates, {} sets given",
            point.0.len(),
            sets.len()
        )));
    }
    let mut acc = EisensteinInt::ONE;
    for (v, (&a, set)) in point.0.iter().zip(sets.sets()).enumerate() {
        if !set.contains(&a) {
            return Err(Error::NotInSet {
                vertex: v,
                value: a.to_string(),
            });
        }
        acc = acc.checked_mul(vertex_weight(a, set)?)?;
    }
    Ok(acc)
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    (a, b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> Result<i64> {
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(Error::Overflow("lcm"))
}

/// `1 / N_i(a)` for every `a ∈ A_i`, written over one common integer
/// denominator as `(numerators, denominator)`.
fn reciprocal_weights(set: &[EisensteinInt]) -> Result<(Vec<EisensteinInt>, i64)> {
    // 1/z = conj(z)/norm(z), reduced by the content of conj(z)
    let reduced = set
        .iter()
        .map(|&a| {
            let z = vertex_weight(a, set)?;
            let (num, den) = (z.conj(), z.checked_norm()?);
            let g = gcd(gcd(num.a, num.b), den);
            Ok((num.div_int_exact(g)?, den / g))
        })
        .collect::<Result<Vec<_>>>()?;
    let common = reduced.iter().try_fold(1i64, |l, &(_, d)| lcm(l, d))?;
    let nums = reduced
        .into_iter()
        .map(|(num, den)| num.checked_scale(common / den))
        .collect::<Result<_>>()?;
    Ok((nums, common))
}

pub fn coefficient_formula(g: &Graph, t: &ExponentVector, sets: &ColorSets) -> Result<EisensteinInt> {
    coefficient_formula_with(g, t, sets, &Guards::default())
}

/// The coefficient of `∏ x_i^{t_i}` as `Σ_{a ∈ A_1×⋯×A_n} f_G(a) / N(a)`.
///
/// Only proper colorings contribute, so the sum is walked by
/// backtracking over points with `f_G(a) ≠ 0`. The division by the
/// common denominator is checked to be exact.
pub fn coefficient_formula_with(
    g: &Graph,
    t: &ExponentVector,
    sets: &ColorSets,
    guards: &Guards,
) -> Result<EisensteinInt> {
    check_len(g, t.len(), "exponent vector")?;
    check_len(g, sets.len(), "color sets")?;
    for (v, (&ti, set)) in t.iter().zip(sets.sets()).enumerate() {
        if set.len() != ti as usize + 1 {
            return Err(Error::SetSize {
                vertex: v,
                expected: format!("{}", ti + 1),
                got: set.len(),
            });
        }
    }
    if t.degree() < g.edge_count() as u64 {
        return Err(Error::InvalidParameter(format!(
            "Σ t_i = {} is below deg f_G = {}",
            t.degree(),
            g.edge_count()
        )));
    }
    if g.n() > guards.max_formula_vertices {
        return Err(Error::SizeGuard {
            what: "coefficient formula vertices",
            size: g.n() as u128,
            limit: guards.max_formula_vertices as u128,
        });
    }

    let mut weights = Vec::with_capacity(g.n());
    let mut denominator = 1i64;
    for set in sets.sets() {
        let (w, d) = reciprocal_weights(set)?;
        denominator = denominator.checked_mul(d).ok_or(Error::Overflow("formula denominator"))?;
        weights.push(w);
    }
    // earlier neighbors of each vertex, for the (x_i − x_v) factors with i < v
    let adj = g.adjacency();
    let back: Vec<Vec<usize>> = (0..g.n())
        .map(|v| adj[v].iter().copied().filter(|&u| u < v).collect())
        .collect();
    let walker = FormulaWalk {
        sets: sets.sets(),
        weights: &weights,
        back: &back,
    };

    let split = g.n().min(4);
    let mut prefixes = Vec::new();
    let mut idx = vec![0usize; g.n()];
    walker.walk(0, split, &mut idx, EisensteinInt::ONE, &mut |i, p| {
        prefixes.push((i.to_vec(), p));
        Ok(())
    })?;
    let sum = prefixes
        .into_par_iter()
        .map(|(mut idx, partial)| {
            let mut acc = EisensteinInt::ZERO;
            walker.walk(split, g.n(), &mut idx, partial, &mut |_, p| {
                acc = acc.checked_add(p)?;
                Ok(())
            })?;
            Ok(acc)
        })
        .try_reduce(|| EisensteinInt::ZERO, |a, b| a.checked_add(b))?;
    sum.div_int_exact(denominator).map_err(|_| {
        Error::InexactDivision(format!(
            "coefficient-formula sum {sum} is not divisible by {denominator}"
        ))
    })
}

struct FormulaWalk<'a> {
    sets: &'a [Vec<EisensteinInt>],
    weights: &'a [Vec<EisensteinInt>],
    back: &'a [Vec<usize>],
}

impl FormulaWalk<'_> {
    fn walk<F>(&self, v: usize, stop: usize, idx: &mut [usize], partial: EisensteinInt, visit: &mut F) -> Result<()>
    where
        F: FnMut(&[usize], EisensteinInt) -> Result<()>,
    {
        if v == stop {
            return visit(idx, partial);
        }
        'values: for (x, &a) in self.sets[v].iter().enumerate() {
            let mut p = partial.checked_mul(self.weights[v][x])?;
            for &u in &self.back[v] {
                let diff = self.sets[u][idx[u]].checked_sub(a)?;
                if diff.is_zero() {
                    continue 'values;
                }
                p = p.checked_mul(diff)?;
            }
            idx[v] = x;
            self.walk(v + 1, stop, idx, p, visit)?;
        }
        Ok(())
    }
}

/// Result of [`alon_tarsi_number`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlonTarsiWitness {
    pub at: u32,
    pub witness: ExponentVector,
    pub coefficient: i64,
}

pub fn alon_tarsi_number(g: &Graph) -> Result<AlonTarsiWitness> {
    alon_tarsi_number_with(g, &Guards::default())
}

/// Smallest `k` such that `f_G` has a nonzero monomial with every
/// exponent at most `k − 1`, with the least such monomial as witness.
pub fn alon_tarsi_number_with(g: &Graph, guards: &Guards) -> Result<AlonTarsiWitness> {
    check_expand_guard(g, guards)?;
    // f_G ≠ 0, so cap = max degree always succeeds
    for k in 1..=g.max_degree() as u32 + 1 {
        let cap = ExponentVector::uniform(g.n(), k - 1);
        let table = expand_with(g, Some(&cap), guards)?;
        let first = table.iter().next().map(|(t, c)| (t.clone(), c));
        if let Some((witness, coefficient)) = first {
            return Ok(AlonTarsiWitness {
                at: k,
                witness,
                coefficient,
            });
        }
    }
    unreachable!("cap = Δ(G) keeps every monomial of a nonzero polynomial")
}

/// Exhaustive search for a point of `S_1 × ⋯ × S_n` where `f_G ≠ 0`,
/// i.e. a proper coloring drawn from the sets. Requires `|S_i| > t_i`.
pub fn cn_point_search(g: &Graph, t: &ExponentVector, sets: &ColorSets) -> Result<Option<EvaluationPoint>> {
    check_len(g, t.len(), "exponent vector")?;
    check_len(g, sets.len(), "color sets")?;
    for (v, (&ti, set)) in t.iter().zip(sets.sets()).enumerate() {
        if set.len() <= ti as usize {
            return Err(Error::SetSize {
                vertex: v,
                expected: format!("> {ti}"),
                got: set.len(),
            });
        }
    }
    let adj = g.adjacency();
    let mut point = vec![EisensteinInt::ZERO; g.n()];
    fn go(v: usize, adj: &[Vec<usize>], sets: &[Vec<EisensteinInt>], point: &mut [EisensteinInt]) -> bool {
        if v == point.len() {
            return true;
        }
        for &a in &sets[v] {
            if adj[v].iter().all(|&u| u > v || point[u] != a) {
                point[v] = a;
                if go(v + 1, adj, sets, point) {
                    return true;
                }
            }
        }
        false
    }
    if !go(0, &adj, sets.sets(), &mut point) {
        return Ok(None);
    }
    debug_assert!(!evaluate(g, &point)?.is_zero());
    Ok(Some(EvaluationPoint(point)))
}
