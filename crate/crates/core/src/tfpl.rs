//! Triangular fully packed loop configurations.
//!
//! A TFPL of size `N` is a set of edges of `G^N` such that
//!
//! 1. exactly the stubs below `B_1, …, B_N` are occupied,
//! 2. every vertex of `L` and `R` has degree 0 or 1,
//! 3. every other vertex has degree 2,
//! 4. no path joins two vertices of `L` or two vertices of `R`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{TfplError, Violation};
use crate::grid::{edge_at, edge_count, edge_index, parity_of, Edge, Grid, Parity, Vertex};
use crate::words::{excess, Word};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tfpl {
    n: usize,
    bits: Vec<u64>,
}

/// `(u, v; w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryTriple {
    pub u: Word,
    pub v: Word,
    pub w: Word,
}

impl BoundaryTriple {
    pub fn new(u: Word, v: Word, w: Word) -> Self {
        BoundaryTriple { u, v, w }
    }

    pub fn excess(&self) -> i64 {
        excess(&self.u, &self.v, &self.w)
    }

    /// `|u|_0 = |v|_0 = |w|_0`, `u ≤ w`, `v ≤ w` and non-negative excess.
    pub fn satisfies_necessary_conditions(&self) -> bool {
        let z = self.w.count_zeros();
        self.u.count_zeros() == z
            && self.v.count_zeros() == z
            && crate::words::dominated_by(&self.u, &self.w).unwrap_or(false)
            && crate::words::dominated_by(&self.v, &self.w).unwrap_or(false)
            && self.excess() >= 0
    }
}

impl fmt::Display for BoundaryTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.u, self.v, self.w)
    }
}

impl FromStr for BoundaryTriple {
    type Err = crate::error::WordError;

    /// Accepts `u,v,w`, `u,v;w` and the parenthesised display form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = trimmed.split([',', ';']).map(str::trim).collect();
        if parts.len() != 3 {
            return Err(crate::error::WordError::InvalidLetter(
                parts.iter().flat_map(|p| p.chars()).find(|c| *c != '0' && *c != '1').unwrap_or(','),
            ));
        }
        Ok(BoundaryTriple::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?))
    }
}

/// One connected component of the occupied internal edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Vertices in walk order; for a closed loop the first vertex is not repeated.
    pub vertices: Vec<Vertex>,
    pub closed: bool,
}

impl Component {
    pub fn ends(&self) -> Option<(Vertex, Vertex)> {
        (!self.closed).then(|| (self.vertices[0], *self.vertices.last().unwrap()))
    }
}

fn internal_edge_between(a: Vertex, b: Vertex) -> Edge {
    if a.1 == b.1 {
        Edge::H(a.0.min(b.0), a.1)
    } else {
        Edge::V(a.0, a.1.min(b.1))
    }
}

impl Tfpl {
    /// Configuration with no occupied edge; generally not a valid TFPL.
    pub fn empty(n: usize) -> Self {
        Tfpl {
            n,
            bits: vec![0; edge_count(n).div_ceil(64)],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, TfplError> {
        let mut t = Tfpl::empty(n);
        for e in edges {
            t.insert(e)?;
        }
        Ok(t)
    }

    /// Parse and validate.
    pub fn from_edges_valid(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, TfplError> {
        let t = Tfpl::from_edges(n, edges)?;
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_bits(n: usize, bits: Vec<u64>) -> Self {
        Tfpl { n, bits }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn grid(&self) -> &'static Grid {
        Grid::shared(self.n)
    }

    pub fn has(&self, e: Edge) -> bool {
        match edge_index(self.n, e) {
            Some(i) => self.bits[i / 64] >> (i % 64) & 1 == 1,
            None => false,
        }
    }

    pub fn insert(&mut self, e: Edge) -> Result<(), TfplError> {
        let i = edge_index(self.n, e).ok_or(TfplError::EdgeOutOfGrid(e, self.n))?;
        self.bits[i / 64] |= 1 << (i % 64);
        Ok(())
    }

    pub fn remove(&mut self, e: Edge) -> Result<(), TfplError> {
        let i = edge_index(self.n, e).ok_or(TfplError::EdgeOutOfGrid(e, self.n))?;
        self.bits[i / 64] &= !(1 << (i % 64));
        Ok(())
    }

    pub fn set(&mut self, e: Edge, present: bool) -> Result<(), TfplError> {
        if present {
            self.insert(e)
        } else {
            self.remove(e)
        }
    }

    /// Occupied edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = (0..edge_count(self.n))
            .filter(|&i| self.bits[i / 64] >> (i % 64) & 1 == 1)
            .map(|i| edge_at(self.n, i))
            .collect();
        out.sort();
        out
    }

    pub fn edge_total(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Edges occupied in exactly one of the two configurations.
    pub fn symmetric_difference(&self, other: &Tfpl) -> Vec<Edge> {
        let diff = Tfpl::from_bits(
            self.n,
            self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        );
        diff.edges()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.grid()
            .incident_edges(v)
            .into_iter()
            .filter(|&e| self.has(e))
            .count()
    }

    /// Neighbours of `v` along occupied internal edges.
    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        self.grid()
            .incident_edges(v)
            .into_iter()
            .filter(|&e| !e.is_external() && self.has(e))
            .map(|e| {
                let (a, b) = e.endpoints();
                if a == v {
                    b.unwrap()
                } else {
                    a
                }
            })
            .collect()
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let g = self.grid();
        let n = self.n as i32;
        for x in 0..=2 * n {
            let want = x % 2 == 1;
            if self.has(Edge::X(x)) != want {
                return Err(Violation::ExternalEdge(x, if want { "missing" } else { "occupied" }));
            }
        }
        for v in g.vertices() {
            let d = self.degree(v);
            if g.is_l(v) || g.is_r(v) {
                if d > 1 {
                    return Err(Violation::BoundaryDegree(v, d));
                }
            } else if d != 2 {
                return Err(Violation::InnerDegree(v, d));
            }
        }
        for c in self.components() {
            if let Some((a, b)) = c.ends() {
                if (g.is_l(a) && g.is_l(b)) || (g.is_r(a) && g.is_r(b)) {
                    return Err(Violation::ForbiddenPath(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Paths and closed loops formed by the occupied internal edges, assuming
    /// the degree clauses hold. A path starts at whichever end comes first
    /// in row-major order, bottom row first.
    pub fn components(&self) -> Vec<Component> {
        let g = self.grid();
        let mut seen: BTreeMap<Edge, ()> = BTreeMap::new();
        let mut out = Vec::new();
        let walk = |start: Vertex, first: Vertex, seen: &mut BTreeMap<Edge, ()>| {
            let mut verts = vec![start];
            let (mut prev, mut cur) = (start, first);
            seen.insert(internal_edge_between(prev, cur), ());
            loop {
                verts.push(cur);
                let next = self
                    .neighbours(cur)
                    .into_iter()
                    .find(|&w| w != prev && !seen.contains_key(&internal_edge_between(cur, w)));
                match next {
                    Some(w) => {
                        seen.insert(internal_edge_between(cur, w), ());
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            verts
        };
        let vertices = g.vertices();
        for &v in &vertices {
            let nb = self.neighbours(v);
            if nb.len() == 1 && !seen.contains_key(&internal_edge_between(v, nb[0])) {
                let verts = walk(v, nb[0], &mut seen);
                out.push(Component {
                    vertices: verts,
                    closed: false,
                });
            }
        }
        for &v in &vertices {
            for w in self.neighbours(v) {
                if !seen.contains_key(&internal_edge_between(v, w)) {
                    let mut verts = walk(v, w, &mut seen);
                    if verts.last() == verts.first() {
                        verts.pop();
                    }
                    out.push(Component {
                        vertices: verts,
                        closed: true,
                    });
                }
            }
        }
        out
    }

    /// `u_i = 1` iff `deg L_i = 1`.
    pub fn u_word(&self) -> Word {
        let g = self.grid();
        Word::from_bits((1..=self.n).map(|i| (self.degree(g.l(i)) == 1) as u8).collect())
            .expect("binary")
    }

    /// `v_i = 0` iff `deg R_i = 1`.
    pub fn v_word(&self) -> Word {
        let g = self.grid();
        Word::from_bits((1..=self.n).map(|i| (self.degree(g.r(i)) != 1) as u8).collect())
            .expect("binary")
    }

    /// `w_i = 1` iff `B_i` is joined to `L` or to some `B_h` with `h < i`.
    pub fn w_word(&self) -> Word {
        let g = self.grid();
        let mut w = vec![0u8; self.n];
        for c in self.components() {
            let Some((a, b)) = c.ends() else { continue };
            for (p, q) in [(a, b), (b, a)] {
                if let Some(i) = g.b_index(p) {
                    let hit = g.is_l(q) || g.b_index(q).is_some_and(|h| h < i);
                    if hit {
                        w[i - 1] = 1;
                    }
                }
            }
        }
        Word::from_bits(w).expect("binary")
    }

    pub fn boundary(&self) -> Result<BoundaryTriple, TfplError> {
        self.validate()?;
        Ok(self.boundary_unchecked())
    }

    pub(crate) fn boundary_unchecked(&self) -> BoundaryTriple {
        BoundaryTriple::new(self.u_word(), self.v_word(), self.w_word())
    }

    /// Occupied vertical edges whose upper endpoint is odd.
    pub fn drifters(&self) -> Vec<Edge> {
        self.edges()
            .into_iter()
            .filter(|&e| is_drifter_position(e))
            .collect()
    }

    /// Mirror image under `x ↦ 2N − x`; boundary `(u, v; w)` becomes
    /// `(v*, u*; w*)`.
    pub fn reflect(&self) -> Tfpl {
        let g = self.grid();
        let mut out = Tfpl::empty(self.n);
        for e in self.edges() {
            out.insert(g.reflect_edge(e)).expect("reflection stays in grid");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("N={}\n", self.n);
        for e in self.edges() {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, TfplError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (first_no, first) = lines.next().ok_or(TfplError::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let n: usize = first
            .trim()
            .strip_prefix("N=")
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| TfplError::Parse {
                line: first_no + 1,
                msg: format!("expected N=<size>, got {first:?}"),
            })?;
        let mut t = Tfpl::empty(n);
        for (no, line) in lines {
            let err = |msg: String| TfplError::Parse { line: no + 1, msg };
            let parts: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<i32>().map_err(|_| err(format!("bad coordinate {s:?}")));
            let e = match parts.as_slice() {
                ["H", x, y] => Edge::H(num(x)?, num(y)?),
                ["V", x, y] => Edge::V(num(x)?, num(y)?),
                ["X", x] => Edge::X(num(x)?),
                _ => return Err(err(format!("unrecognised edge line {line:?}"))),
            };
            t.insert(e).map_err(|_| err(format!("edge {e} outside grid of size {n}")))?;
        }
        Ok(t)
    }

    pub fn canonical_orientation(&self) -> Result<OrientedTfpl, TfplError> {
        self.validate()?;
        let g = self.grid();
        let mut arcs = BTreeMap::new();
        for c in self.components() {
            let mut verts = c.vertices.clone();
            if let Some((a, b)) = c.ends() {
                let reverse = if g.is_l(a) {
                    false
                } else if g.is_l(b) {
                    true
                } else if g.is_r(b) {
                    false
                } else if g.is_r(a) {
                    true
                } else {
                    g.b_index(a) > g.b_index(b)
                };
                if reverse {
                    verts.reverse();
                }
                let (start, end) = (verts[0], *verts.last().unwrap());
                if g.b_index(start).is_some() {
                    arcs.insert(Edge::X(start.0), Arc { from: None, to: Some(start) });
                }
                if g.b_index(end).is_some() {
                    arcs.insert(Edge::X(end.0), Arc { from: Some(end), to: None });
                }
                for p in verts.windows(2) {
                    arcs.insert(internal_edge_between(p[0], p[1]), Arc { from: Some(p[0]), to: Some(p[1]) });
                }
            } else {
                if signed_area(&verts) > 0 {
                    verts.reverse();
                }
                let k = verts.len();
                for i in 0..k {
                    let (p, q) = (verts[i], verts[(i + 1) % k]);
                    arcs.insert(internal_edge_between(p, q), Arc { from: Some(p), to: Some(q) });
                }
            }
        }
        Ok(OrientedTfpl {
            base: self.clone(),
            arcs,
        })
    }
}

/// Twice the signed area; positive for counterclockwise traversal.
fn signed_area(verts: &[Vertex]) -> i64 {
    let k = verts.len();
    (0..k)
        .map(|i| {
            let (a, b) = (verts[i], verts[(i + 1) % k]);
            a.0 as i64 * b.1 as i64 - b.0 as i64 * a.1 as i64
        })
        .sum()
}

pub(crate) fn is_drifter_position(e: Edge) -> bool {
    matches!(e, Edge::V(x, y) if parity_of(x, y + 1) == Parity::Odd)
}

impl fmt::Display for Tfpl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Tfpl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tfpl(N={}, {:?})", self.n, self.edges())
    }
}

impl FromStr for Tfpl {
    type Err = TfplError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tfpl::from_text(s)
    }
}

impl Serialize for Tfpl {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Tfpl {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Tfpl::from_text(&s).map_err(serde::de::Error::custom)
    }
}

/// Direction of one occupied edge; `None` is the outside end of a stub.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: Option<Vertex>,
    pub to: Option<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedTfpl {
    base: Tfpl,
    arcs: BTreeMap<Edge, Arc>,
}

impl OrientedTfpl {
    pub fn new(base: Tfpl, arcs: BTreeMap<Edge, Arc>) -> Self {
        OrientedTfpl { base, arcs }
    }

    pub fn arcs(&self) -> &BTreeMap<Edge, Arc> {
        &self.arcs
    }

    /// Drop the directions.
    pub fn forget(&self) -> Tfpl {
        Tfpl::from_edges(self.base.n, self.arcs.keys().copied()).expect("edges from a grid")
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.arcs.values().filter(|a| a.from == Some(v)).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.arcs.values().filter(|a| a.to == Some(v)).count()
    }

    /// Edges at `L` are outgoing, edges at `R` are incoming, every other
    /// vertex has one incoming and one outgoing edge.
    pub fn is_consistent(&self) -> bool {
        let g = self.base.grid();
        g.vertices().into_iter().all(|v| {
            let (i, o) = (self.in_degree(v), self.out_degree(v));
            if g.is_l(v) {
                i == 0
            } else if g.is_r(v) {
                o == 0
            } else {
                i == 1 && o == 1
            }
        })
    }

    /// Read `(u, v; w)` from local directions only.
    pub fn oriented_boundary(&self) -> BoundaryTriple {
        let g = self.base.grid();
        let n = self.base.n;
        let u = (1..=n).map(|i| (self.out_degree(g.l(i)) == 1) as u8).collect();
        let v = (1..=n).map(|i| (self.in_degree(g.r(i)) != 1) as u8).collect();
        let w = (1..=n)
            .map(|i| {
                let b = g.b(i);
                self.arcs
                    .get(&Edge::X(b.0))
                    .is_some_and(|a| a.from == Some(b)) as u8
            })
            .collect();
        BoundaryTriple::new(
            Word::from_bits(u).expect("binary"),
            Word::from_bits(v).expect("binary"),
            Word::from_bits(w).expect("binary"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n1(left: bool) -> Tfpl {
        let mid = if left { Edge::H(0, 0) } else { Edge::H(1, 0) };
        Tfpl::from_edges(1, [Edge::X(1), mid]).unwrap()
    }

    #[test]
    fn size_one_examples() {
        let l = n1(true);
        assert!(l.validate().is_ok());
        assert_eq!(l.boundary().unwrap().to_string(), "(1,1;1)");
        let r = n1(false);
        assert_eq!(r.boundary().unwrap().to_string(), "(0,0;0)");
        let broken = Tfpl::from_edges(1, [Edge::X(1)]).unwrap();
        assert!(matches!(broken.validate(), Err(Violation::InnerDegree((1, 0), 1))));
    }

    #[test]
    fn stub_clause() {
        let t = Tfpl::from_edges(1, [Edge::X(1), Edge::X(0), Edge::H(0, 0)]).unwrap();
        assert!(matches!(t.validate(), Err(Violation::ExternalEdge(0, _))));
    }

    #[test]
    fn left_left_path_rejected() {
        // L_2 = (1,1) and L_3 = (2,2) joined through (2,1); all degrees fine
        let t = Tfpl::from_edges(
            3,
            [
                Edge::X(1),
                Edge::X(3),
                Edge::X(5),
                Edge::H(1, 1),
                Edge::V(2, 1),
                Edge::H(1, 0),
                Edge::H(2, 0),
                Edge::H(3, 2),
                Edge::V(3, 1),
                Edge::H(3, 1),
                Edge::V(4, 0),
                Edge::H(4, 0),
            ],
        )
        .unwrap();
        let err = t.validate().unwrap_err();
        assert!(
            matches!(err, Violation::ForbiddenPath(a, b) if [a, b] == [(1, 1), (2, 2)] || [a, b] == [(2, 2), (1, 1)]),
            "{err:?}"
        );
    }

    #[test]
    fn text_round_trip() {
        let t = n1(true);
        let s = t.to_text();
        assert_eq!(s, "N=1\nH 0 0\nX 1\n");
        assert_eq!(Tfpl::from_text(&s).unwrap(), t);
        let err = Tfpl::from_text("N=1\nH 0 0\nQ 1\n").unwrap_err();
        assert_eq!(err, TfplError::Parse { line: 3, msg: "unrecognised edge line \"Q 1\"".into() });
        assert!(matches!(Tfpl::from_text("N=1\nH 5 0\n"), Err(TfplError::Parse { line: 2, .. })));
        assert!(matches!(Tfpl::from_text("size 1"), Err(TfplError::Parse { line: 1, .. })));
    }

    #[test]
    fn triple_parsing() {
        let t: BoundaryTriple = "0011,0110,1100".parse().unwrap();
        assert_eq!(t.to_string(), "(0011,0110;1100)");
        assert_eq!("(0011,0110;1100)".parse::<BoundaryTriple>().unwrap(), t);
        assert_eq!(t.excess(), 2);
    }

    #[test]
    fn orientation_size_one() {
        for left in [true, false] {
            let t = n1(left);
            let o = t.canonical_orientation().unwrap();
            assert!(o.is_consistent());
            assert_eq!(o.forget(), t);
            assert_eq!(o.oriented_boundary(), t.boundary().unwrap());
        }
    }

    #[test]
    fn reflection_swaps_boundaries() {
        let t = n1(true);
        let r = t.reflect();
        assert_eq!(r, n1(false));
        let b = t.boundary().unwrap();
        let rb = r.boundary().unwrap();
        assert_eq!(rb, BoundaryTriple::new(b.v.star(), b.u.star(), b.w.star()));
    }
}
