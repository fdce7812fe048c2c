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

//! Circulations (Eulerian sub-digraphs) of an orientation and their link
//! to graph-polynomial coefficients:
//!
//! `[∏ x_v^{indeg_D(v)}] f_G = sign(D) · (EE(D) − EO(D))`
//!
//! where `EE`/`EO` count circulations with an even/odd number of arcs
//! (the empty arc set included) and `sign(D) = (−1)^{#arcs into the larger endpoint}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, Orientation};
use crate::guards::Guards;
use crate::polycoeff::{self, ExponentVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculationCount {
    pub even: u64,
    pub odd: u64,
}

impl CirculationCount {
    pub fn difference(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

pub fn circulation_diff(d: &Orientation) -> Result<CirculationCount> {
    circulation_diff_with(d, &Guards::default())
}

/// Counts arc subsets balanced at every vertex, split by parity.
///
/// Arcs are decided in canonical edge order; once a vertex has seen its
/// last incident arc its in/out balance must be zero.
pub fn circulation_diff_with(d: &Orientation, guards: &Guards) -> Result<CirculationCount> {
    let g = d.graph();
    if g.edge_count() > guards.max_circulation_edges {
        return Err(Error::SizeGuard {
            what: "circulation enumeration arcs",
            size: g.edge_count() as u128,
            limit: guards.max_circulation_edges as u128,
        });
    }
    let arcs = d.arcs();
    let mut last = vec![usize::MAX; g.n()];
    for (e, &(t, h)) in arcs.iter().enumerate() {
        last[t] = e;
        last[h] = e;
    }
    let mut count = CirculationCount { even: 0, odd: 0 };
    let mut balance = vec![0i32; g.n()];

    fn go(
        e: usize,
        size: usize,
        arcs: &[(usize, usize)],
        last: &[usize],
        balance: &mut [i32],
        count: &mut CirculationCount,
    ) {
        if e == arcs.len() {
            if size % 2 == 0 {
                count.even += 1;
            } else {
                count.odd += 1;
            }
            return;
        }
        let (t, h) = arcs[e];
        let settled = |b: &[i32]| (last[t] != e || b[t] == 0) && (last[h] != e || b[h] == 0);
        if settled(balance) {
            go(e + 1, size, arcs, last, balance, count);
        }
        balance[t] += 1;
        balance[h] -= 1;
        if settled(balance) {
            go(e + 1, size + 1, arcs, last, balance, count);
        }
        balance[t] -= 1;
        balance[h] += 1;
    }

    go(0, 0, &arcs, &last, &mut balance, &mut count);
    Ok(count)
}

/// `(−1)^k` where `k` is the number of arcs whose head is the larger endpoint.
pub fn sign_of_orientation(d: &Orientation) -> i64 {
    let ascending = d
        .graph()
        .edges()
        .iter()
        .zip(d.heads())
        .filter(|(&(_, j), &h)| h == j)
        .count();
    if ascending % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub indegrees: ExponentVector,
    pub coefficient: i64,
    pub sign: i64,
    pub even: u64,
    pub odd: u64,
    pub holds: bool,
}

pub fn verify_at_correspondence(g: &Graph, d: &Orientation) -> Result<CorrespondenceReport> {
    verify_at_correspondence_with(g, d, &Guards::default())
}

/// Compares the coefficient of `x^{indeg(D)}` against `sign(D)·(EE − EO)`.
pub fn verify_at_correspondence_with(g: &Graph, d: &Orientation, guards: &Guards) -> Result<CorrespondenceReport> {
    if d.graph() != g {
        return Err(Error::InvalidParameter("orientation is not of the given graph".into()));
    }
    let indegrees = d.indegrees();
    let coefficient = polycoeff::coefficient_of_with(g, &indegrees, guards)?;
    let count = circulation_diff_with(d, guards)?;
    let sign = sign_of_orientation(d);
    Ok(CorrespondenceReport {
        indegrees,
        coefficient,
        sign,
        even: count.even,
        odd: count.odd,
        holds: coefficient == sign * count.difference(),
    })
}

/// An orientation with max indegree `k − 1` whose even and odd
/// circulation counts differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBoundCertificate {
    pub orientation: Orientation,
    pub indegrees: ExponentVector,
    pub coefficient: i64,
    pub sign: i64,
    /// `None` when the circulation guard is exceeded; the nonzero
    /// coefficient still certifies the bound.
    pub circulations: Option<CirculationCount>,
}

pub fn at_upper_bound_certificate(g: &Graph, k: u32) -> Result<Option<UpperBoundCertificate>> {
    at_upper_bound_certificate_with(g, k, &Guards::default())
}

/// Picks the first nonzero monomial of the capped expansion with cap
/// `k − 1`, realizes its exponents as an indegree vector, and counts
/// circulations where the guard allows.
pub fn at_upper_bound_certificate_with(g: &Graph, k: u32, guards: &Guards) -> Result<Option<UpperBoundCertificate>> {
    if k == 0 {
        return Ok(None);
    }
    let cap = ExponentVector::uniform(g.n(), k - 1);
    let table = polycoeff::expand_with(g, Some(&cap), guards)?;
    for (t, coefficient) in table.iter() {
        let Some(orientation) = orientation_with_indegrees(g, t) else {
            continue;
        };
        let sign = sign_of_orientation(&orientation);
        let circulations = if g.edge_count() <= guards.max_circulation_edges {
            let count = circulation_diff_with(&orientation, guards)?;
            if sign * count.difference() != coefficient {
                return Err(Error::Verification(format!(
                    "coefficient {coefficient} disagrees with sign {sign} · ({} − {})",
                    count.even, count.odd
                )));
            }
            Some(count)
        } else {
            None
        };
        return Ok(Some(UpperBoundCertificate {
            orientation,
            indegrees: t.clone(),
            coefficient,
            sign,
            circulations,
        }));
    }
    Ok(None)
}

/// Orients every edge so that vertex `v` receives exactly `target[v]`
/// arcs, via augmenting paths over the edge-to-endpoint assignment.
pub fn orientation_with_indegrees(g: &Graph, target: &ExponentVector) -> Option<Orientation> {
    if target.len() != g.n() || target.degree() != g.edge_count() as u64 {
        return None;
    }
    let edges = g.edges();
    let mut head = vec![usize::MAX; edges.len()];
    let mut load = vec![0u32; g.n()];
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); g.n()];

    // Moves one arc away from `v` to make room there.
    fn free_slot(
        v: usize,
        edges: &[(usize, usize)],
        target: &[u32],
        head: &mut [usize],
        load: &mut [u32],
        incoming: &mut [Vec<usize>],
        visited: &mut [bool],
    ) -> bool {
        visited[v] = true;
        for idx in 0..incoming[v].len() {
            let e = incoming[v][idx];
            let (i, j) = edges[e];
            let w = if i == v { j } else { i };
            if visited[w] {
                continue;
            }
            if load[w] < target[w] || free_slot(w, edges, target, head, load, incoming, visited) {
                incoming[v].swap_remove(idx);
                load[v] -= 1;
                head[e] = w;
                load[w] += 1;
                incoming[w].push(e);
                return true;
            }
        }
        false
    }

    for (e, &(i, j)) in edges.iter().enumerate() {
        let mut placed = false;
        for v in [i, j] {
            if load[v] < target[v] {
                placed = true;
            } else {
                let mut visited = vec![false; g.n()];
                placed = target[v] > 0 && free_slot(v, edges, target, &mut head, &mut load, &mut incoming, &mut visited);
            }
            if placed {
                head[e] = v;
                load[v] += 1;
                incoming[v].push(e);
                break;
            }
        }
        if !placed {
            return None;
        }
    }
    Orientation::new(g.clone(), head).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::TorusSpec;

    fn cyc4() -> Orientation {
        Orientation::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn diff_examples() {
        assert_eq!(circulation_diff(&cyc4()).unwrap(), CirculationCount { even: 2, odd: 0 });
        let cyc3 = Orientation::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = circulation_diff(&cyc3).unwrap();
        assert_eq!((c.even, c.odd, c.difference()), (1, 1, 0));
        let acyc = Orientation::from_arcs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(circulation_diff(&acyc).unwrap(), CirculationCount { even: 1, odd: 0 });
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign_of_orientation(&cyc4()), -1);
        assert_eq!(sign_of_orientation(&cyc4().reversed()), -1);
        let g = Graph::complete(5);
        let descending = Orientation::from_mask(&g, 0);
        assert_eq!(sign_of_orientation(&descending), 1);
    }

    #[test]
    fn correspondence_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let r = verify_at_correspondence(&c4, &cyc4()).unwrap();
        assert_eq!((r.coefficient, r.sign, r.even, r.odd, r.holds), (-2, -1, 2, 0, true));

        let c3 = Graph::cycle(3).unwrap();
        let cyc3 = Orientation::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = verify_at_correspondence(&c3, &cyc3).unwrap();
        assert_eq!((r.coefficient, r.holds), (0, true));

        let acyc = Orientation::from_arcs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let r = verify_at_correspondence(&c3, &acyc).unwrap();
        assert_eq!((r.coefficient.abs(), r.even - r.odd, r.holds), (1, 1, true));

        assert!(verify_at_correspondence(&c4, &acyc).is_err());
    }

    #[test]
    fn cycle_orientations_exhaustive() {
        for n in 3..=6usize {
            let g = Graph::cycle(n).unwrap();
            for d in Orientation::all(&g) {
                let diff = circulation_diff(&d).unwrap().difference();
                let cyclic = d.indegrees().iter().all(|&x| x == 1);
                let expected = match (cyclic, n % 2 == 0) {
                    (true, true) => 2,
                    (true, false) => 0,
                    (false, _) => 1,
                };
                assert_eq!(diff, expected, "n = {n}, arcs {:?}", d.arcs());
            }
        }
    }

    #[test]
    fn reversal_invariance() {
        let g = Graph::complete(5);
        for mask in (0..1u64 << 10).step_by(7) {
            let d = Orientation::from_mask(&g, mask);
            assert_eq!(circulation_diff(&d).unwrap(), circulation_diff(&d.reversed()).unwrap());
        }
    }

    #[test]
    fn correspondence_exhaustive() {
        for g in [
            Graph::cycle(3).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(4),
            Graph::complete_bipartite(2, 3),
        ] {
            for d in Orientation::all(&g) {
                let r = verify_at_correspondence(&g, &d).unwrap();
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn guard_is_enforced() {
        let g = Graph::complete(8);
        let d = Orientation::from_mask(&g, 0);
        assert!(matches!(circulation_diff(&d), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn indegree_realization() {
        let k4 = Graph::complete(4);
        for t in [[0, 1, 2, 3], [3, 2, 1, 0], [1, 2, 1, 2], [2, 2, 1, 1]] {
            let t = ExponentVector::new(t.to_vec());
            let d = orientation_with_indegrees(&k4, &t).unwrap();
            assert_eq!(d.indegrees(), t);
        }
        // a vertex of degree 3 cannot take 4 arcs
        assert!(orientation_with_indegrees(&k4, &ExponentVector::new(vec![4, 2, 0, 0])).is_none());
        assert!(orientation_with_indegrees(&k4, &ExponentVector::new(vec![3, 3, 0, 0])).is_none());
    }

    #[test]
    fn certificate_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let cert = at_upper_bound_certificate(&c4, 2).unwrap().unwrap();
        assert!(cert.orientation.indegrees().iter().all(|&x| x == 1));
        assert_eq!(cert.circulations.unwrap().difference().abs(), 2);
        assert!(at_upper_bound_certificate(&c4, 1).unwrap().is_none());

        let c5 = Graph::cycle(5).unwrap();
        let cert = at_upper_bound_certificate(&c5, 3).unwrap().unwrap();
        assert!(cert.orientation.max_indegree() <= 2);
        assert_ne!(cert.circulations.unwrap().difference(), 0);
    }

    #[test]
    fn torus_3x3_certificate() {
        let t33 = Graph::torus(TorusSpec::new(3, 3).unwrap());
        assert!(at_upper_bound_certificate(&t33, 3).unwrap().is_none());
        let cert = at_upper_bound_certificate(&t33, 4).unwrap().unwrap();
        assert!(cert.orientation.max_indegree() <= 3);
        let count = cert.circulations.unwrap();
        assert_ne!(count.difference(), 0);
        assert_eq!(cert.sign * count.difference(), cert.coefficient);
    }
}
