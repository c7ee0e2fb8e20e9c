//! The triangular graph `G^N`.
//!
//! Vertices are `(x, y)` with `0 ≤ y ≤ N−1` and `y ≤ x ≤ 2N−y`; row `y = 0`
//! is the bottom row with `2N+1` vertices and the top row has three. A vertex
//! is odd when `x + y` is even, which makes the leftmost vertex of the top row
//! odd.
//!
//! Edges are `H(x, y)` between `(x, y)` and `(x+1, y)`, `V(x, y)` between
//! `(x, y)` and `(x, y+1)`, and the external stub `X(x)` hanging below
//! `(x, 0)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::TfplError;

pub type Vertex = (i32, i32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Edge {
    H(i32, i32),
    V(i32, i32),
    X(i32),
}

impl Edge {
    /// Endpoints inside the grid; a stub has only one.
    pub fn endpoints(self) -> (Vertex, Option<Vertex>) {
        match self {
            Edge::H(x, y) => ((x, y), Some((x + 1, y))),
            Edge::V(x, y) => ((x, y), Some((x, y + 1))),
            Edge::X(x) => ((x, 0), None),
        }
    }

    pub fn is_incident(self, v: Vertex) -> bool {
        let (a, b) = self.endpoints();
        a == v || b == Some(v)
    }

    pub fn is_external(self) -> bool {
        matches!(self, Edge::X(_))
    }

    /// Translate one unit to the right.
    pub fn shifted(self, dx: i32) -> Edge {
        match self {
            Edge::H(x, y) => Edge::H(x + dx, y),
            Edge::V(x, y) => Edge::V(x + dx, y),
            Edge::X(x) => Edge::X(x + dx),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Edge::H(x, y) => write!(f, "H {x} {y}"),
            Edge::V(x, y) => write!(f, "V {x} {y}"),
            Edge::X(x) => write!(f, "X {x}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Odd,
    Even,
}

/// A unit square of `G^N`. External cells hang below the bottom row and
/// have no bottom slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    /// Lower-left corner; `y = -1` for external cells.
    pub anchor: (i32, i32),
    pub parity: Parity,
    /// Top, right, bottom, left.
    pub slots: [Option<Edge>; 4],
}

impl Cell {
    pub fn is_external(&self) -> bool {
        self.anchor.1 < 0
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.slots.iter().flatten().copied()
    }
}

#[derive(Clone, Debug)]
pub struct Grid {
    n: usize,
    edges: Vec<Edge>,
    cells: Vec<Cell>,
}

pub fn vertex_parity(n: usize, x: i32, y: i32) -> Result<Parity, TfplError> {
    if !in_grid(n, (x, y)) {
        return Err(TfplError::VertexOutOfGrid((x, y), n));
    }
    Ok(parity_of(x, y))
}

pub(crate) fn parity_of(x: i32, y: i32) -> Parity {
    if (x + y).rem_euclid(2) == 0 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

fn in_grid(n: usize, (x, y): Vertex) -> bool {
    let n = n as i32;
    (0..n).contains(&y) && y <= x && x <= 2 * n - y
}

/// Number of internal and external edges of `G^N`.
pub fn edge_count(n: usize) -> usize {
    2 * n * n + 3 * n
}

/// Index of `e` in the canonical edge order: horizontal edges row by row,
/// then vertical edges row by row, then stubs.
pub fn edge_index(n: usize, e: Edge) -> Option<usize> {
    let n = n as i32;
    match e {
        Edge::H(x, y) => {
            if !(0..n).contains(&y) || x < y || x >= 2 * n - y {
                return None;
            }
            Some((2 * n * y - y * (y - 1) + (x - y)) as usize)
        }
        Edge::V(x, y) => {
            if !(0..n - 1).contains(&y) || x <= y || x >= 2 * n - y {
                return None;
            }
            Some((n * (n + 1) + y * (2 * n - y) + (x - y - 1)) as usize)
        }
        Edge::X(x) => {
            if !(0..=2 * n).contains(&x) {
                return None;
            }
            Some((n * (n + 1) + n * n - 1 + x) as usize)
        }
    }
}

/// Inverse of [`edge_index`].
pub fn edge_at(n: usize, index: usize) -> Edge {
    let ni = n as i32;
    let mut i = index as i32;
    for y in 0..ni {
        let row = 2 * (ni - y);
        if i < row {
            return Edge::H(y + i, y);
        }
        i -= row;
    }
    for y in 0..ni - 1 {
        let row = 2 * (ni - y) - 1;
        if i < row {
            return Edge::V(y + 1 + i, y);
        }
        i -= row;
    }
    assert!(i <= 2 * ni, "edge index {index} out of range for size {n}");
    Edge::X(i)
}

impl Grid {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "grid size must be positive");
        let ni = n as i32;
        let mut edges = Vec::with_capacity(2 * n * n + 3 * n);
        for y in 0..ni {
            for x in y..2 * ni - y {
                edges.push(Edge::H(x, y));
            }
        }
        for y in 0..ni - 1 {
            for x in y + 1..2 * ni - y {
                edges.push(Edge::V(x, y));
            }
        }
        for x in 0..=2 * ni {
            edges.push(Edge::X(x));
        }

        let mut cells = Vec::with_capacity(n * (n + 1));
        for x in 0..2 * ni {
            cells.push(Cell {
                anchor: (x, -1),
                parity: if x % 2 == 0 { Parity::Odd } else { Parity::Even },
                slots: [Some(Edge::H(x, 0)), Some(Edge::X(x + 1)), None, Some(Edge::X(x))],
            });
        }
        for y in 0..ni - 1 {
            for x in y + 1..2 * ni - y - 1 {
                cells.push(Cell {
                    anchor: (x, y),
                    parity: if (x + y) % 2 == 1 { Parity::Odd } else { Parity::Even },
                    slots: [
                        Some(Edge::H(x, y + 1)),
                        Some(Edge::V(x + 1, y)),
                        Some(Edge::H(x, y)),
                        Some(Edge::V(x, y)),
                    ],
                });
            }
        }
        Grid { n, edges, cells }
    }

    /// A process-wide copy of `Grid::new(n)`.
    pub fn shared(n: usize) -> &'static Grid {
        static GRIDS: OnceLock<RwLock<HashMap<usize, &'static Grid>>> = OnceLock::new();
        let map = GRIDS.get_or_init(Default::default);
        if let Some(g) = map.read().expect("grid cache poisoned").get(&n) {
            return g;
        }
        let mut w = map.write().expect("grid cache poisoned");
        w.entry(n).or_insert_with(|| Box::leak(Box::new(Grid::new(n))))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        in_grid(self.n, v)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let n = self.n as i32;
        (0..n)
            .flat_map(|y| (y..=2 * n - y).map(move |x| (x, y)))
            .collect()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Position of `e` in [`Grid::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        edge_index(self.n, e)
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    /// Internal and external edges of the grid at `v`.
    pub fn incident_edges(&self, v: Vertex) -> Vec<Edge> {
        let (x, y) = v;
        let mut out = Vec::with_capacity(5);
        for e in [Edge::H(x - 1, y), Edge::H(x, y), Edge::V(x, y - 1), Edge::V(x, y), Edge::X(x)] {
            if (e != Edge::X(x) || y == 0) && self.edge_index(e).is_some() {
                out.push(e);
            }
        }
        out
    }

    /// `L_i = (i−1, i−1)`, 1-based, bottom to top.
    pub fn l(&self, i: usize) -> Vertex {
        let i = i as i32;
        (i - 1, i - 1)
    }

    /// `R_i = (N+i, N−i)`, 1-based, top to bottom.
    pub fn r(&self, i: usize) -> Vertex {
        let (n, i) = (self.n as i32, i as i32);
        (n + i, n - i)
    }

    /// `B_i = (2i−1, 0)`, 1-based.
    pub fn b(&self, i: usize) -> Vertex {
        (2 * i as i32 - 1, 0)
    }

    /// `(L, R, B)`, each ordered by increasing `x`.
    pub fn boundary_vertices(&self) -> (Vec<Vertex>, Vec<Vertex>, Vec<Vertex>) {
        let range = 1..=self.n;
        (
            range.clone().map(|i| self.l(i)).collect(),
            range.clone().map(|i| self.r(i)).collect(),
            range.map(|i| self.b(i)).collect(),
        )
    }

    /// 1-based index `i` with `v = L_i`.
    pub fn l_index(&self, v: Vertex) -> Option<usize> {
        (v.0 == v.1 && self.contains_vertex(v)).then(|| v.0 as usize + 1)
    }

    pub fn r_index(&self, v: Vertex) -> Option<usize> {
        let n = self.n as i32;
        (v.0 + v.1 == 2 * n && self.contains_vertex(v)).then(|| (v.0 - n) as usize)
    }

    pub fn b_index(&self, v: Vertex) -> Option<usize> {
        (v.1 == 0 && v.0 % 2 == 1 && self.contains_vertex(v)).then(|| (v.0 as usize).div_ceil(2))
    }

    pub fn is_l(&self, v: Vertex) -> bool {
        self.l_index(v).is_some()
    }

    pub fn is_r(&self, v: Vertex) -> bool {
        self.r_index(v).is_some()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Mirror image under `x ↦ 2N − x`.
    pub fn reflect_edge(&self, e: Edge) -> Edge {
        let m = 2 * self.n as i32;
        match e {
            Edge::H(x, y) => Edge::H(m - x - 1, y),
            Edge::V(x, y) => Edge::V(m - x, y),
            Edge::X(x) => Edge::X(m - x),
        }
    }

    pub fn reflect_vertex(&self, (x, y): Vertex) -> Vertex {
        (2 * self.n as i32 - x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_lengths() {
        for n in 1..=8 {
            let g = Grid::new(n);
            let vs = g.vertices();
            for y in 0..n as i32 {
                let row = vs.iter().filter(|v| v.1 == y).count();
                assert_eq!(row, 2 * (n - y as usize) + 1);
            }
            let expected: usize = (0..n).map(|y| 2 * (n - y) + 1).sum();
            assert_eq!(vs.len(), expected);
        }
    }

    #[test]
    fn edge_index_is_a_bijection() {
        for n in 1..=9 {
            let g = Grid::new(n);
            assert_eq!(g.edge_count(), edge_count(n));
            for (i, &e) in g.edges().iter().enumerate() {
                assert_eq!(g.edge_index(e), Some(i), "{e:?}");
                assert_eq!(edge_at(n, i), e);
                let (a, b) = e.endpoints();
                assert!(g.contains_vertex(a));
                assert!(b.is_none_or(|b| g.contains_vertex(b)));
            }
            assert_eq!(g.edges().iter().filter(|e| e.is_external()).count(), 2 * n + 1);
        }
    }

    #[test]
    fn parity_examples() {
        for n in 1..=7usize {
            let top = n as i32 - 1;
            assert_eq!(vertex_parity(n, top, top).unwrap(), Parity::Odd);
            let g = Grid::new(n);
            let even_bottom: Vec<_> = g
                .vertices()
                .into_iter()
                .filter(|&(x, y)| y == 0 && parity_of(x, y) == Parity::Even)
                .collect();
            assert_eq!(even_bottom, g.boundary_vertices().2);
        }
        assert!(vertex_parity(3, 0, 1).is_err());
    }

    #[test]
    fn boundary_sets() {
        let g = Grid::new(1);
        assert_eq!(g.boundary_vertices(), (vec![(0, 0)], vec![(2, 0)], vec![(1, 0)]));
        for n in 1..=7 {
            let g = Grid::new(n);
            let (l, r, b) = g.boundary_vertices();
            assert_eq!((l.len(), r.len(), b.len()), (n, n, n));
            for s in [&l, &r, &b] {
                assert!(s.windows(2).all(|p| p[0].0 < p[1].0));
            }
            let n = n as i32;
            for y in 0..n {
                assert!(l.contains(&(y, y)));
                assert!(r.contains(&(2 * n - y, y)));
            }
            for (i, &v) in l.iter().enumerate() {
                assert_eq!(g.l_index(v), Some(i + 1));
                assert_eq!(parity_of(v.0, v.1), Parity::Odd);
            }
            for (i, &v) in r.iter().enumerate() {
                assert_eq!(g.r_index(v), Some(i + 1));
                assert_eq!(parity_of(v.0, v.1), Parity::Odd);
            }
            for (i, &v) in b.iter().enumerate() {
                assert_eq!(g.b_index(v), Some(i + 1));
            }
        }
    }

    #[test]
    fn cells_count_and_slots() {
        for n in 1..=10 {
            let g = Grid::new(n);
            assert_eq!(g.cell_count(), n * (n + 1));
            for c in g.cells() {
                let k = c.edges().count();
                assert_eq!(k, if c.is_external() { 3 } else { 4 });
                for e in c.edges() {
                    assert!(g.edge_index(e).is_some(), "{e:?}");
                }
            }
        }
        assert_eq!(Grid::new(1).cell_count(), 2);
        assert_eq!(Grid::new(7).cell_count(), 56);
    }

    #[test]
    fn top_left_cell_is_odd_and_parities_alternate() {
        for n in 2..=7 {
            let g = Grid::new(n);
            let top = n as i32 - 2;
            let tl = g.cells().iter().find(|c| c.anchor == (top + 1, top)).unwrap();
            assert_eq!(tl.parity, Parity::Odd);
            for a in g.cells() {
                for b in g.cells() {
                    let (dx, dy) = (b.anchor.0 - a.anchor.0, b.anchor.1 - a.anchor.1);
                    if dx.abs() + dy.abs() == 1 {
                        assert_ne!(a.parity, b.parity);
                    }
                }
            }
        }
    }

    #[test]
    fn every_non_right_edge_in_exactly_one_odd_cell() {
        for n in 1..=7 {
            let g = Grid::new(n);
            for &e in g.edges() {
                let (a, b) = e.endpoints();
                let touches_r = g.is_r(a) || b.is_some_and(|b| g.is_r(b));
                let odd = g
                    .cells()
                    .iter()
                    .filter(|c| c.parity == Parity::Odd && c.edges().any(|s| s == e))
                    .count();
                assert_eq!(odd, usize::from(!touches_r), "{e:?}");
            }
        }
    }

    #[test]
    fn reflection_is_an_involution_on_edges() {
        for n in 1..=6 {
            let g = Grid::new(n);
            for &e in g.edges() {
                let r = g.reflect_edge(e);
                assert!(g.edge_index(r).is_some());
                assert_eq!(g.reflect_edge(r), e);
            }
            for i in 1..=n {
                assert_eq!(g.reflect_vertex(g.l(i)), g.r(n + 1 - i));
            }
        }
    }
}
