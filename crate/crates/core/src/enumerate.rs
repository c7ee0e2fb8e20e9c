//! Exhaustive generation of TFPLs and the count tables `t_{u,v}^w`,
//! `s_{u,v}^w`.
//!
//! Vertices are visited row by row from the bottom, left to right. At each
//! vertex the search decides its right and upper edge, after which the
//! vertex's degree is final. A union-find over path components rejects any
//! edge that would join two `L` vertices or two `R` vertices.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::TableError;
use crate::grid::{edge_count, edge_index, Edge, Grid};
use crate::tfpl::{BoundaryTriple, Tfpl};
use crate::words::Word;

const FLAG_L: u8 = 1;
const FLAG_R: u8 = 2;

#[derive(Clone, Copy, Debug)]
enum Kind {
    L(usize),
    R(usize),
    Other,
}

#[derive(Clone, Debug)]
struct Slot {
    kind: Kind,
    cap: u8,
    start_degree: u8,
    /// (edge index, neighbour slot) for the right and the upper edge.
    forward: Vec<(usize, usize)>,
}

#[derive(Debug)]
struct Plan {
    n: usize,
    slots: Vec<Slot>,
    stub_bits: Vec<u64>,
}

impl Plan {
    fn new(n: usize) -> Self {
        let g = Grid::new(n);
        let verts = g.vertices();
        let slot_of = |v: (i32, i32)| verts.iter().position(|&w| w == v);
        let mut stub_bits = vec![0u64; edge_count(n).div_ceil(64)];
        let slots = verts
            .iter()
            .map(|&v| {
                let kind = match (g.l_index(v), g.r_index(v)) {
                    (Some(i), _) => Kind::L(i),
                    (_, Some(i)) => Kind::R(i),
                    _ => Kind::Other,
                };
                let stub = g.b_index(v).is_some();
                if stub {
                    let i = edge_index(n, Edge::X(v.0)).unwrap();
                    stub_bits[i / 64] |= 1 << (i % 64);
                }
                let mut forward = Vec::new();
                for (e, w) in [(Edge::H(v.0, v.1), (v.0 + 1, v.1)), (Edge::V(v.0, v.1), (v.0, v.1 + 1))] {
                    if let (Some(i), Some(s)) = (edge_index(n, e), slot_of(w)) {
                        forward.push((i, s));
                    }
                }
                Slot {
                    kind,
                    cap: if matches!(kind, Kind::Other) { 2 } else { 1 },
                    start_degree: u8::from(stub),
                    forward,
                }
            })
            .collect();
        Plan { n, slots, stub_bits }
    }
}

/// Restricts the enumeration to TFPLs with the given boundary words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundaryFilter {
    pub u: Option<Word>,
    pub v: Option<Word>,
    pub w: Option<Word>,
}

impl BoundaryFilter {
    pub fn triple(t: &BoundaryTriple) -> Self {
        BoundaryFilter {
            u: Some(t.u.clone()),
            v: Some(t.v.clone()),
            w: Some(t.w.clone()),
        }
    }
}

#[derive(Clone, Debug)]
struct State {
    pos: usize,
    deg: Vec<u8>,
    parent: Vec<u16>,
    flags: Vec<u8>,
    bits: Vec<u64>,
}

impl State {
    fn root(plan: &Plan) -> Self {
        let k = plan.slots.len();
        State {
            pos: 0,
            deg: plan.slots.iter().map(|s| s.start_degree).collect(),
            parent: (0..k as u16).collect(),
            flags: plan
                .slots
                .iter()
                .map(|s| match s.kind {
                    Kind::L(_) => FLAG_L,
                    Kind::R(_) => FLAG_R,
                    Kind::Other => 0,
                })
                .collect(),
            bits: plan.stub_bits.clone(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] as usize != a {
            let p = self.parent[a] as usize;
            self.parent[a] = self.parent[p];
            a = p;
        }
        a
    }

    /// Adds the edge `index` between slots `a` and `b`; false if it closes an
    /// `L–L` or `R–R` path or overloads `b`.
    fn add(&mut self, plan: &Plan, index: usize, a: usize, b: usize) -> bool {
        if self.deg[b] >= plan.slots[b].cap {
            return false;
        }
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            if self.flags[ra] & self.flags[rb] != 0 {
                return false;
            }
            self.parent[ra] = rb as u16;
            self.flags[rb] |= self.flags[ra];
        }
        self.deg[a] += 1;
        self.deg[b] += 1;
        self.bits[index / 64] |= 1 << (index % 64);
        true
    }
}

fn expand(plan: &Plan, filter: &BoundaryFilter, st: &State, out: &mut Vec<State>) {
    let slot = &plan.slots[st.pos];
    let p = st.pos;
    let have = st.deg[p];
    let k = slot.forward.len();
    for mask in 0..(1u8 << k) {
        let add = mask.count_ones() as u8;
        let total = have + add;
        let ok = match slot.kind {
            Kind::Other => total == 2,
            Kind::L(i) => total <= 1 && filter.u.as_ref().is_none_or(|u| u.at(i) == total),
            Kind::R(i) => total <= 1 && filter.v.as_ref().is_none_or(|v| v.at(i) == 1 - total),
        };
        if !ok {
            continue;
        }
        let mut next = st.clone();
        let mut fine = true;
        for (bit, &(index, q)) in slot.forward.iter().enumerate() {
            if mask >> bit & 1 == 1 && !next.add(plan, index, p, q) {
                fine = false;
                break;
            }
        }
        if fine {
            next.pos += 1;
            out.push(next);
        }
    }
}

/// Depth-first stream of all TFPLs of one size, in a fixed order.
pub struct TfplIter {
    plan: Arc<Plan>,
    filter: BoundaryFilter,
    stack: Vec<State>,
    scratch: Vec<State>,
}

impl TfplIter {
    fn from_states(plan: Arc<Plan>, filter: BoundaryFilter, mut states: Vec<State>) -> Self {
        states.reverse();
        TfplIter {
            plan,
            filter,
            stack: states,
            scratch: Vec::new(),
        }
    }
}

impl Iterator for TfplIter {
    type Item = Tfpl;

    fn next(&mut self) -> Option<Tfpl> {
        while let Some(st) = self.stack.pop() {
            if st.pos == self.plan.slots.len() {
                let f = Tfpl::from_bits(self.plan.n, st.bits);
                if let Some(w) = &self.filter.w {
                    if &f.w_word() != w {
                        continue;
                    }
                }
                return Some(f);
            }
            self.scratch.clear();
            expand(&self.plan, &self.filter, &st, &mut self.scratch);
            self.stack.extend(self.scratch.drain(..).rev());
        }
        None
    }
}

pub fn enumerate_tfpls(n: usize) -> TfplIter {
    enumerate_filtered(n, BoundaryFilter::default())
}

pub fn enumerate_filtered(n: usize, filter: BoundaryFilter) -> TfplIter {
    assert!(n >= 1, "size must be positive");
    let plan = Arc::new(Plan::new(n));
    let root = State::root(&plan);
    TfplIter::from_states(plan, filter, vec![root])
}

/// Splits the search tree after `depth` vertices and explores the subtrees in
/// parallel; the result is in the same order as [`enumerate_filtered`].
pub fn enumerate_parallel(n: usize, filter: BoundaryFilter, depth: usize) -> Vec<Tfpl> {
    let plan = Arc::new(Plan::new(n));
    let frontier = split(&plan, &filter, depth);
    frontier
        .into_par_iter()
        .map(|st| TfplIter::from_states(plan.clone(), filter.clone(), vec![st]).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn split(plan: &Plan, filter: &BoundaryFilter, depth: usize) -> Vec<State> {
    let mut frontier = vec![State::root(plan)];
    for _ in 0..depth.min(plan.slots.len()) {
        let mut next = Vec::new();
        for st in &frontier {
            if st.pos == plan.slots.len() {
                next.push(st.clone());
            } else {
                expand(plan, filter, st, &mut next);
            }
        }
        frontier = next;
    }
    frontier
}

/// Default split depth for parallel runs.
pub fn default_split_depth(n: usize) -> usize {
    (2 * n + 1).min(Grid::shared(n).vertices().len())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// All TFPLs with the boundary.
    pub t: u64,
    /// The stable ones among them.
    pub s: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub n: usize,
    pub entries: BTreeMap<BoundaryTriple, Counts>,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    #[serde(rename = "N")]
    n: usize,
    u: &'a Word,
    v: &'a Word,
    w: &'a Word,
    t: u64,
    s: u64,
}

impl CountTable {
    pub fn new(n: usize) -> Self {
        CountTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, b: BoundaryTriple, stable: bool) {
        let c = self.entries.entry(b).or_default();
        c.t += 1;
        c.s += u64::from(stable);
    }

    fn merge(mut self, other: CountTable) -> CountTable {
        for (k, c) in other.entries {
            let e = self.entries.entry(k).or_default();
            e.t += c.t;
            e.s += c.s;
        }
        self
    }

    /// Counts for a triple; zero if no TFPL has this boundary.
    pub fn get(&self, u: &Word, v: &Word, w: &Word) -> Counts {
        self.entries
            .get(&BoundaryTriple::new(u.clone(), v.clone(), w.clone()))
            .copied()
            .unwrap_or_default()
    }

    pub fn t(&self, u: &Word, v: &Word, w: &Word) -> u64 {
        self.get(u, v, w).t
    }

    pub fn s(&self, u: &Word, v: &Word, w: &Word) -> u64 {
        self.get(u, v, w).s
    }

    pub fn total(&self) -> u64 {
        self.entries.values().map(|c| c.t).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("N,u,v,w,t,s\n");
        for (k, c) in &self.entries {
            writeln!(out, "{},{},{},{},{},{}", self.n, k.u, k.v, k.w, c.t, c.s).unwrap();
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self, TableError> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, "N,u,v,w,t,s")) => {}
            other => {
                return Err(TableError::Parse {
                    line: 1,
                    msg: format!("expected header N,u,v,w,t,s, got {:?}", other.map(|o| o.1)),
                })
            }
        }
        let mut table: Option<CountTable> = None;
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let err = |msg: String| TableError::Parse { line: i + 1, msg };
            let f: Vec<&str> = line.split(',').collect();
            if f.len() != 6 {
                return Err(err(format!("expected 6 fields, got {}", f.len())));
            }
            let n: usize = f[0].parse().map_err(|_| err(format!("bad size {:?}", f[0])))?;
            let word = |s: &str| {
                let w: Word = s.parse().map_err(|e| err(format!("{e}")))?;
                if w.len() != n {
                    return Err(err(format!("word {s} does not have length {n}")));
                }
                Ok(w)
            };
            let (u, v, w) = (word(f[1])?, word(f[2])?, word(f[3])?);
            let t: u64 = f[4].parse().map_err(|_| err(format!("bad count {:?}", f[4])))?;
            let s: u64 = f[5].parse().map_err(|_| err(format!("bad count {:?}", f[5])))?;
            if s > t {
                return Err(err(format!("stable count {s} exceeds total {t}")));
            }
            let tab = table.get_or_insert_with(|| CountTable::new(n));
            if tab.n != n {
                return Err(err(format!("mixed sizes {} and {n}", tab.n)));
            }
            tab.entries.insert(BoundaryTriple::new(u, v, w), Counts { t, s });
        }
        table.ok_or(TableError::Parse {
            line: 2,
            msg: "table has no rows".into(),
        })
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<JsonRow> = self
            .entries
            .iter()
            .map(|(k, c)| JsonRow {
                n: self.n,
                u: &k.u,
                v: &k.v,
                w: &k.w,
                t: c.t,
                s: c.s,
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("plain data")
    }

    pub fn save(&self, path: &Path) -> Result<(), TableError> {
        std::fs::write(path, self.to_csv())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, TableError> {
        CountTable::from_csv(&std::fs::read_to_string(path)?)
    }
}

pub fn save_table(table: &CountTable, path: &Path) -> Result<(), TableError> {
    table.save(path)
}

pub fn load_table(path: &Path) -> Result<CountTable, TableError> {
    CountTable::load(path)
}

/// `t` and `s` for every boundary realised at size `n`.
pub fn count_tables(n: usize) -> CountTable {
    let plan = Arc::new(Plan::new(n));
    let filter = BoundaryFilter::default();
    split(&plan, &filter, default_split_depth(n))
        .into_par_iter()
        .map(|st| {
            let mut t = CountTable::new(n);
            for f in TfplIter::from_states(plan.clone(), filter.clone(), vec![st]) {
                let stable = f.drifters().is_empty();
                t.record(f.boundary_unchecked(), stable);
            }
            t
        })
        .reduce(|| CountTable::new(n), CountTable::merge)
}
