//! Wieland gyration and left/right Wieland drift.
//!
//! Left drift gyrates every odd cell, drops the edges at `R`, shifts the
//! result one unit to the right and fills in the new left boundary from a
//! word `u⁻ →h u`. Right drift is its mirror image: reflect, drift left with
//! respect to `(v⁻)*`, reflect back.

use serde::{Deserialize, Serialize};

use crate::error::DriftError;
use crate::grid::{Edge, Grid, Parity, Vertex};
use crate::tfpl::{is_drifter_position, Tfpl};
use crate::words::{h_step, ssyt_from_chain, v_step, SkewChain, Ssyt, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
}

/// One Wieland gyration step on a cell given as top, right, bottom, left
/// slot occupancy (`None` for a missing slot).
pub fn gyrate_cell(slots: [Option<bool>; 4]) -> [Option<bool>; 4] {
    let on = |i: usize| slots[i] == Some(true);
    let count = (0..4).filter(|&i| on(i)).count();
    if count == 2 && ((on(0) && on(2)) || (on(1) && on(3))) {
        return slots;
    }
    slots.map(|s| s.map(|b| !b))
}

/// `WL_{u⁻}(f)`; `None` means `u⁻ = u`.
pub fn wieland_left(f: &Tfpl, u_minus: Option<&Word>) -> Result<Tfpl, DriftError> {
    let n = f.size();
    let u = f.u_word();
    let um = u_minus.unwrap_or(&u);
    if um.len() != n || !h_step(um, &u) {
        return Err(DriftError::NotPredecessor {
            minus: um.clone(),
            word: u,
        });
    }
    let g = f.grid();
    let mut img = Tfpl::empty(n);
    for c in g.cells().iter().filter(|c| c.parity == Parity::Odd) {
        let after = gyrate_cell(c.slots.map(|s| s.map(|e| f.has(e))));
        for (slot, state) in c.slots.iter().zip(after) {
            if let (Some(e), Some(true)) = (slot, state) {
                img.insert(e.shifted(1))?;
            }
        }
    }
    let (ones_u, ones_um) = (u.one_positions(), um.one_positions());
    for (&i, &k) in ones_um.iter().zip(&ones_u) {
        let i = i as i32;
        if k as i32 == i {
            img.insert(Edge::H(i - 1, i - 1))?;
        } else {
            img.insert(Edge::V(i - 1, i - 2))?;
        }
    }
    Ok(img)
}

/// `WR_{v⁻}(f)`; `None` means `v⁻ = v`.
pub fn wieland_right(f: &Tfpl, v_minus: Option<&Word>) -> Result<Tfpl, DriftError> {
    let v = f.v_word();
    let vm = v_minus.unwrap_or(&v);
    if vm.len() != f.size() || !v_step(vm, &v) {
        return Err(DriftError::NotPredecessor {
            minus: vm.clone(),
            word: v,
        });
    }
    Ok(wieland_left(&f.reflect(), Some(&vm.star()))?.reflect())
}

pub fn drift(f: &Tfpl, dir: Direction) -> Result<Tfpl, DriftError> {
    match dir {
        Direction::Left => wieland_left(f, None),
        Direction::Right => wieland_right(f, None),
    }
}

/// Fixed point of left drift.
pub fn is_stable(f: &Tfpl) -> bool {
    wieland_left(f, None).is_ok_and(|g| &g == f)
}

/// Iterates of plain drift in one direction until a stable configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arm {
    pub direction: Direction,
    /// `f, D(f), …, D^{k}(f)`; the last one is stable.
    pub configs: Vec<Tfpl>,
    /// Right boundary words `v^ℓ` for a left arm, left boundary words `u^r`
    /// for a right arm.
    pub words: Vec<Word>,
}

impl Arm {
    /// `L(f)` (resp. `R(f)`) for an instable start; `None` if it is stable.
    pub fn steps_before_stable(&self) -> Option<usize> {
        (self.configs.len() > 1).then(|| self.configs.len() - 2)
    }

    pub fn last(&self) -> &Tfpl {
        self.configs.last().expect("arm is never empty")
    }

    /// The tableau recorded by the boundary words: `λ(u^{R+1})/λ(u)` for a
    /// right arm and `λ(v^{L+1})'/λ(v)'` for a left arm.
    pub fn tableau(&self) -> Result<Ssyt, DriftError> {
        chain_to_tableau(self)
    }
}

pub fn stabilize(f: &Tfpl, dir: Direction) -> Result<Arm, DriftError> {
    let cap = 2 * f.size();
    let word = |t: &Tfpl| match dir {
        Direction::Left => t.v_word(),
        Direction::Right => t.u_word(),
    };
    let mut configs = vec![f.clone()];
    let mut words = vec![word(f)];
    loop {
        let cur = configs.last().unwrap();
        let next = drift(cur, dir)?;
        if &next == cur {
            return Ok(Arm {
                direction: dir,
                configs,
                words,
            });
        }
        if configs.len() > cap {
            return Err(DriftError::Internal(format!(
                "no fixed point after {cap} drift steps"
            )));
        }
        words.push(word(&next));
        configs.push(next);
    }
}

pub fn chain_to_tableau(arm: &Arm) -> Result<Ssyt, DriftError> {
    let words: Vec<Word> = match arm.direction {
        Direction::Right => arm.words.clone(),
        Direction::Left => arm.words.iter().map(Word::star).collect(),
    };
    let chain = SkewChain::new(words).map_err(|e| DriftError::Internal(e.to_string()))?;
    Ok(ssyt_from_chain(&chain))
}

/// Both arms of `Path(f)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DriftOrbit {
    pub center: Tfpl,
    pub left: Arm,
    pub right: Arm,
}

pub fn orbit(f: &Tfpl) -> Result<DriftOrbit, DriftError> {
    Ok(DriftOrbit {
        center: f.clone(),
        left: stabilize(f, Direction::Left)?,
        right: stabilize(f, Direction::Right)?,
    })
}

/// How a drifter is followed through a step in which it splits in two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplitRule {
    /// Same row if possible, otherwise the lower one.
    SameRowElseLower,
    Upper,
    Lower,
}

pub const SPLIT_RULE: SplitRule = SplitRule::SameRowElseLower;

/// Relative edge `(kind, dx, dy)` with its occupancy before the move.
type Toggle = (char, i32, i32, bool);

/// The ways a left-drift step moves a lone drifter `V(x, y)` that does not
/// hang below `R`, as edge toggles relative to `(x, y)`, in order of
/// precedence. The last one splits the drifter in two.
pub const MOVES: [&[Toggle]; 4] = [
    &[('H', 0, 0, false), ('H', 0, 1, false), ('H', 1, 0, true), ('H', 1, 1, true), ('V', 0, 0, true), ('V', 2, 0, false)],
    &[('H', 0, -1, true), ('H', 0, 1, false), ('V', 0, -1, false), ('V', 0, 0, true), ('V', 1, -1, false), ('V', 1, 0, true)],
    &[('H', 0, 0, false), ('H', 0, 2, true), ('V', 0, 0, true), ('V', 0, 1, false), ('V', 1, 0, true), ('V', 1, 1, false)],
    &[
        ('H', 0, -1, true), ('H', 0, 2, true), ('V', 0, -1, false), ('V', 0, 0, true),
        ('V', 0, 1, false), ('V', 1, -1, false), ('V', 1, 0, true), ('V', 1, 1, false),
    ],
];

fn toggle_edge(t: &Toggle, x: i32, y: i32) -> Edge {
    match t.0 {
        'H' => Edge::H(x + t.1, y + t.2),
        _ => Edge::V(x + t.1, y + t.2),
    }
}

fn top(d: Edge) -> Vertex {
    d.endpoints().1.expect("drifters are internal")
}

fn displacement(a: Edge, b: Edge) -> i64 {
    let (p, q) = (top(a), top(b));
    let (dx, dy) = ((q.0 - p.0) as i64, (q.1 - p.1) as i64);
    dx * dx + dy * dy
}

/// Drifter of `next = WL(cur)` that continues the drifter `d` of `cur`.
///
/// Drifters hanging below `R` are deleted by the step. The remaining ones are
/// matched to the drifters of `next` by the bijection of least total squared
/// displacement; when one drifter becomes two, `rule` picks the one to
/// follow, and when two become one both continue as it.
fn successor(g: &Grid, cur: &Tfpl, d: Edge, next: &Tfpl, rule: SplitRule) -> Option<Edge> {
    let from: Vec<Edge> = cur
        .drifters()
        .into_iter()
        .filter(|&e| g.r_index(top(e)).is_none())
        .collect();
    let mut to = next.drifters();
    let at = from.iter().position(|&e| e == d)?;
    if to.is_empty() {
        return None;
    }
    if from.len() < to.len() && from.len() == 1 {
        let (_, y) = top(d);
        to.sort_by_key(|e| (top(*e).1, top(*e).0));
        return match rule {
            SplitRule::Upper => to.last().copied(),
            SplitRule::Lower => to.first().copied(),
            SplitRule::SameRowElseLower => to.iter().find(|e| top(**e).1 == y).or(to.first()).copied(),
        };
    }
    if from.len() > to.len() {
        return to.iter().copied().min_by_key(|&e| displacement(d, e));
    }
    let best = permutations(to.len())
        .into_iter()
        .min_by_key(|p| {
            from.iter()
                .zip(p)
                .map(|(&a, &j)| displacement(a, to[j]))
                .sum::<i64>()
        })?;
    best.get(at).map(|&j| to[j])
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Statistics of a drifter's path under iterated drift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrifterTrace {
    pub drifter: Edge,
    /// `L(𝔡)`: left-drift steps until the drifter hangs below some `R_i`.
    pub left_steps: usize,
    /// `R(𝔡)`: right-drift steps until it hangs below some `L_{h+1}`.
    pub right_steps: usize,
    /// `N − i` for that `R_i`.
    pub height_left: usize,
    /// `h` for that `L_{h+1}`.
    pub height_right: usize,
    /// Left boundary after `R(𝔡)` right-drift steps.
    pub u_right: Word,
    /// Right boundary after `L(𝔡)` left-drift steps.
    pub v_left: Word,
    /// Ones among the last `N − 1 − HeightR` letters of `u_right`.
    pub r1: usize,
    /// Zeros among the first `N − 1 − HeightL` letters of `v_left`.
    pub l0: usize,
}

impl DrifterTrace {
    /// `L + R = R_1 + L_0 + 1`.
    pub fn balanced(&self) -> bool {
        self.left_steps + self.right_steps == self.r1 + self.l0 + 1
    }

    /// `R(𝔡) ≤ R_1`: the drifter belongs to the left boundary.
    pub fn leaves_left(&self) -> bool {
        self.right_steps <= self.r1
    }

    /// `L(𝔡) ≤ L_0`: the drifter belongs to the right boundary.
    pub fn leaves_right(&self) -> bool {
        self.left_steps <= self.l0
    }
}

/// Follows `d` under left drift until it hangs below `R_i`; returns the
/// number of steps, `i` and the configuration reached.
fn follow_left(f: &Tfpl, d: Edge, rule: SplitRule) -> Result<(usize, usize, Tfpl), DriftError> {
    let g = f.grid();
    let cap = 2 * f.size() + 1;
    let (mut cur, mut d) = (f.clone(), d);
    for k in 0..=cap {
        if let Some(i) = g.r_index(top(d)) {
            return Ok((k, i, cur));
        }
        let next = wieland_left(&cur, None)?;
        d = successor(g, &cur, d, &next, rule).ok_or_else(|| {
            DriftError::Internal(format!("drifter lost after {} left steps", k + 1))
        })?;
        cur = next;
    }
    Err(DriftError::Internal("drifter never reached the right boundary".into()))
}

pub fn trace_drifter(f: &Tfpl, d: Edge) -> Result<DrifterTrace, DriftError> {
    trace_drifter_with(f, d, SPLIT_RULE)
}

pub fn trace_drifter_with(f: &Tfpl, d: Edge, rule: SplitRule) -> Result<DrifterTrace, DriftError> {
    let b = f.boundary()?;
    if b.excess() > 2 {
        return Err(DriftError::UnsupportedExcess(b.excess()));
    }
    if !f.has(d) || !is_drifter_position(d) {
        return Err(DriftError::NotADrifter(d));
    }
    let n = f.size();
    let g = f.grid();
    let (left_steps, i, left_cfg) = follow_left(f, d, rule)?;
    let (right_steps, j, right_refl) = follow_left(&f.reflect(), g.reflect_edge(d), rule)?;
    let height_left = n - i;
    // R_j in the mirror image is L_{N+1-j} = L_{h+1}
    let height_right = n - j;
    let v_left = left_cfg.v_word();
    let u_right = right_refl.reflect().u_word();
    let tail = n - 1 - height_right;
    let r1 = u_right.bits()[n - tail..].iter().filter(|&&b| b == 1).count();
    let head = n - 1 - height_left;
    let l0 = v_left.bits()[..head].iter().filter(|&&b| b == 0).count();
    Ok(DrifterTrace {
        drifter: d,
        left_steps,
        right_steps,
        height_left,
        height_right,
        u_right,
        v_left,
        r1,
        l0,
    })
}

/// One step of a single drifter under left (resp. right) drift, leaving the
/// rest of `f` as it is.
///
/// A drifter hanging below `R_i` is replaced by the horizontal edge at
/// `R_{i+1}`. Otherwise the first entry of [`MOVES`] that matches `f` around
/// `d` and gives a valid TFPL in which every other drifter survives is used.
pub fn localized_move(f: &Tfpl, d: Edge, dir: Direction) -> Result<Tfpl, DriftError> {
    if dir == Direction::Right {
        let g = f.grid();
        let moved = localized_move(&f.reflect(), g.reflect_edge(d), Direction::Left)?;
        return Ok(moved.reflect());
    }
    let Edge::V(x, y) = d else {
        return Err(DriftError::NotADrifter(d));
    };
    if !f.has(d) || !is_drifter_position(d) {
        return Err(DriftError::NotADrifter(d));
    }
    let g = f.grid();
    let others: Vec<Edge> = f.drifters().into_iter().filter(|&e| e != d).collect();
    if g.r_index(top(d)).is_some() {
        let mut out = f.clone();
        out.remove(d)?;
        out.insert(Edge::H(x, y))?;
        return if out.is_valid() { Ok(out) } else { Err(DriftError::Locality(d)) };
    }
    for mv in MOVES {
        let edges: Vec<Edge> = mv.iter().map(|t| toggle_edge(t, x, y)).collect();
        let applies = mv
            .iter()
            .zip(&edges)
            .all(|(t, &e)| g.edge_index(e).is_some() && f.has(e) == t.3);
        if !applies {
            continue;
        }
        let mut out = f.clone();
        for &e in &edges {
            out.set(e, !f.has(e))?;
        }
        let kept = others.iter().all(|&o| out.has(o));
        if kept && out.is_valid() && out.drifters().len() == others.len() + 1 {
            return Ok(out);
        }
    }
    Err(DriftError::Locality(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_tfpls;
    use crate::words::horizontal_predecessors;

    #[test]
    fn gyration_examples() {
        let tb = [Some(true), Some(false), Some(true), Some(false)];
        assert_eq!(gyrate_cell(tb), tb);
        let empty = [Some(false); 4];
        assert_eq!(gyrate_cell(empty), [Some(true); 4]);
        for m in 0..16u8 {
            let c = [0, 1, 2, 3].map(|i| Some(m >> i & 1 == 1));
            assert_eq!(gyrate_cell(gyrate_cell(c)), c);
        }
        // external cells of a TFPL carry exactly one stub
        for top in [false, true] {
            for right in [false, true] {
                let c = [Some(top), Some(right), None, Some(!right)];
                let once = gyrate_cell(c);
                assert_eq!(once, [Some(!top), Some(!right), None, Some(right)]);
                assert_eq!(gyrate_cell(once), c);
            }
        }
    }

    #[test]
    fn size_one_is_stable() {
        for f in enumerate_tfpls(1) {
            assert!(is_stable(&f));
            assert!(f.drifters().is_empty());
        }
    }

    fn candidates(f: &Tfpl, which: usize) -> usize {
        f.edges()
            .into_iter()
            .filter(|&e| match (which, e) {
                (0, Edge::V(x, y)) => (x + y + 1) % 2 == 0,
                (1, Edge::V(x, y)) => (x + y + 1) % 2 == 1,
                (2, Edge::H(x, y)) => (x + y) % 2 == 0,
                (3, Edge::H(x, y)) => (x + y) % 2 == 1,
                _ => false,
            })
            .count()
    }

    /// Only vertical edges with an odd upper endpoint characterise the
    /// fixed points of left drift.
    #[test]
    fn drifter_shape_calibration() {
        let mut ok = [true; 4];
        for n in 3..=4 {
            for f in enumerate_tfpls(n) {
                let stable = is_stable(&f);
                for (k, flag) in ok.iter_mut().enumerate() {
                    if stable != (candidates(&f, k) == 0) {
                        *flag = false;
                    }
                }
            }
        }
        assert_eq!(ok, [true, false, false, false]);
    }

    #[test]
    fn left_drift_changes_boundary_by_strips() {
        for n in 1..=4 {
            for f in enumerate_tfpls(n) {
                let b = f.boundary().unwrap();
                for um in horizontal_predecessors(&b.u) {
                    let img = wieland_left(&f, Some(&um)).unwrap();
                    let ib = img.boundary().unwrap();
                    assert_eq!(ib.u, um);
                    assert_eq!(ib.w, b.w);
                    assert!(v_step(&b.v, &ib.v), "{} -> {}", b, ib);
                    assert_eq!(wieland_right(&img, Some(&b.v)).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn bad_predecessor_rejected() {
        let f = enumerate_tfpls(2).next().unwrap();
        let u = f.u_word();
        let bad = if u.count_ones() == 0 { Word::from_bits(vec![1, 1]).unwrap() } else { u.complement() };
        if bad != u {
            assert!(matches!(
                wieland_left(&f, Some(&bad)),
                Err(DriftError::NotPredecessor { .. })
            ));
        }
    }

    #[test]
    fn single_moves_match_full_steps() {
        let mut seen = 0;
        for n in 2..=5 {
            for f in enumerate_tfpls(n) {
                let ds = f.drifters();
                if ds.len() != 1 {
                    continue;
                }
                for dir in [Direction::Left, Direction::Right] {
                    let full = drift(&f, dir).unwrap();
                    if full.drifters().len() > 1 {
                        continue;
                    }
                    assert_eq!(localized_move(&f, ds[0], dir).unwrap(), full, "{}", f.to_text());
                    seen += 1;
                }
            }
        }
        assert!(seen > 100);
    }

    #[test]
    fn move_requires_a_drifter() {
        let f = enumerate_tfpls(3).find(|f| !f.drifters().is_empty()).unwrap();
        let not_drifter = f.edges().into_iter().find(|e| !f.drifters().contains(e)).unwrap();
        assert!(localized_move(&f, not_drifter, Direction::Left).is_err());
    }
}
