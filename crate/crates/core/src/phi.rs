//! The correspondence between TFPLs of excess at most 2 and triples
//! `(S, g, T)` of a tableau, a stable TFPL and a tableau.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::drift::{
    is_stable, localized_move, stabilize, trace_drifter, wieland_left, wieland_right, Direction,
};
use crate::error::DriftError;
use crate::grid::Edge;
use crate::tfpl::Tfpl;
use crate::words::{chain_from_ssyt, to_shape, Ssyt, Word};

/// `S` lives on `λ(u⁺)/λ(u)`, `T` on `λ(v⁺)'/λ(v)'` (stored as the shapes of
/// the starred words), and `g` is stable with boundary `(u⁺, v⁺; w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiTriple {
    pub s: Ssyt,
    pub g: Tfpl,
    pub t: Ssyt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhiCase {
    Stable,
    /// Every drifter leaves through the left boundary under right drift.
    AllLeft,
    /// Every drifter leaves through the right boundary under left drift.
    AllRight,
    Mixed,
}

impl PhiTriple {
    pub fn u(&self) -> Word {
        self.s.inner.to_word()
    }

    pub fn v(&self) -> Word {
        self.t.inner.to_word().star()
    }

    pub fn case(&self) -> PhiCase {
        match (self.s.is_empty(), self.t.is_empty()) {
            (true, true) => PhiCase::Stable,
            (false, true) => PhiCase::AllLeft,
            (true, false) => PhiCase::AllRight,
            (false, false) => PhiCase::Mixed,
        }
    }

    /// Membership in `G × S × G`.
    pub fn is_admissible(&self) -> bool {
        let g_ok = self.g.is_valid() && is_stable(&self.g);
        let (up, vp) = (self.g.u_word(), self.g.v_word());
        g_ok && self.s.outer == to_shape(&up)
            && self.t.outer == to_shape(&vp.star())
            && self.s.is_semistandard()
            && self.t.is_semistandard()
            && self.s.is_column_restricted()
            && self.t.is_column_restricted()
    }
}

fn single_cell(inner: &Word, outer: &Word, entry: usize) -> Result<Ssyt, DriftError> {
    let (a, b) = (to_shape(inner), to_shape(outer));
    let cells = b.skew_cells(&a);
    if cells.len() != 1 {
        return Err(DriftError::Internal(format!(
            "{inner} -> {outer} adds {} cells, expected one",
            cells.len()
        )));
    }
    Ok(Ssyt {
        inner: a,
        outer: b,
        entries: BTreeMap::from([(cells[0], entry as u32)]),
    })
}

/// Moves `d` with single-drifter steps until it is deleted at the boundary;
/// returns the configuration reached and the number of steps.
fn transport(f: &Tfpl, d: Edge, dir: Direction) -> Result<(Tfpl, usize), DriftError> {
    let cap = 2 * f.size() + 2;
    let (mut cur, mut d) = (f.clone(), d);
    for k in 1..=cap {
        let before = cur.drifters();
        let next = localized_move(&cur, d, dir)?;
        let fresh: Vec<Edge> = next
            .drifters()
            .into_iter()
            .filter(|e| !before.contains(e))
            .collect();
        let stayed = before.iter().filter(|&&e| e != d).all(|&e| next.has(e));
        if !stayed {
            return Err(DriftError::Locality(d));
        }
        match fresh.as_slice() {
            [] if next.drifters().len() == before.len() - 1 => return Ok((next, k)),
            [e] => d = *e,
            _ => return Err(DriftError::Locality(d)),
        }
        cur = next;
    }
    Err(DriftError::Internal("drifter never reached the boundary".into()))
}

pub fn phi(f: &Tfpl) -> Result<PhiTriple, DriftError> {
    let b = f.boundary()?;
    if b.excess() > 2 {
        return Err(DriftError::UnsupportedExcess(b.excess()));
    }
    let (u, v) = (b.u.clone(), b.v.clone());
    let drifters = f.drifters();
    if drifters.is_empty() {
        return Ok(PhiTriple {
            s: Ssyt::empty(to_shape(&u)),
            g: f.clone(),
            t: Ssyt::empty(to_shape(&v.star())),
        });
    }
    let traces = drifters
        .iter()
        .map(|&d| trace_drifter(f, d))
        .collect::<Result<Vec<_>, _>>()?;
    if traces.iter().all(|t| t.leaves_left()) {
        let arm = stabilize(f, Direction::Right)?;
        return Ok(PhiTriple {
            s: arm.tableau()?,
            g: arm.last().clone(),
            t: Ssyt::empty(to_shape(&v.star())),
        });
    }
    if traces.iter().all(|t| t.leaves_right()) {
        let arm = stabilize(f, Direction::Left)?;
        return Ok(PhiTriple {
            s: Ssyt::empty(to_shape(&u)),
            g: arm.last().clone(),
            t: arm.tableau()?,
        });
    }
    let (Some(dr), Some(dl)) = (
        traces.iter().find(|t| t.leaves_left()),
        traces.iter().find(|t| t.leaves_right()),
    ) else {
        return Err(DriftError::Internal("mixed case without both drifters".into()));
    };
    let (mid, r_moves) = transport(f, dr.drifter, Direction::Right)?;
    let (g, l_moves) = transport(&mid, dl.drifter, Direction::Left)?;
    if r_moves != dr.right_steps + 1 || l_moves != dl.left_steps + 1 {
        return Err(DriftError::Internal(format!(
            "transport took {r_moves}/{l_moves} moves, traces give {}/{}",
            dr.right_steps + 1,
            dl.left_steps + 1
        )));
    }
    let (up, vp) = (g.u_word(), g.v_word());
    Ok(PhiTriple {
        s: single_cell(&u, &up, r_moves)?,
        g,
        t: single_cell(&v.star(), &vp.star(), l_moves)?,
    })
}

fn chain_words(t: &Ssyt) -> Result<Vec<Word>, DriftError> {
    let chain = chain_from_ssyt(t, t.max_entry() as usize)
        .map_err(|e| DriftError::InvalidTriple(e.to_string()))?;
    Ok(chain.words().to_vec())
}

/// Index `i` (1-based) with `a = …01…` and `b = …10…` at `(i, i + 1)`, the
/// words agreeing elsewhere.
fn adjacent_swap(a: &Word, b: &Word) -> Option<usize> {
    let diff: Vec<usize> = (0..a.len()).filter(|&k| a.bits()[k] != b.bits()[k]).collect();
    match diff.as_slice() {
        [k, l] if l - k == 1 && a.bits()[*k] == 0 && a.bits()[*l] == 1 => Some(k + 1),
        _ => None,
    }
}

pub fn psi(t: &PhiTriple) -> Result<Tfpl, DriftError> {
    if !t.is_admissible() {
        return Err(DriftError::InvalidTriple(
            "triple is not in the codomain".into(),
        ));
    }
    let g = &t.g;
    match t.case() {
        PhiCase::Stable => Ok(g.clone()),
        PhiCase::AllLeft => {
            let words = chain_words(&t.s)?;
            let mut f = g.clone();
            for um in words[..words.len() - 1].iter().rev() {
                f = wieland_left(&f, Some(um))?;
            }
            Ok(f)
        }
        PhiCase::AllRight => {
            let words = chain_words(&t.t)?;
            let mut f = g.clone();
            for vm in words[..words.len() - 1].iter().rev() {
                f = wieland_right(&f, Some(&vm.star()))?;
            }
            Ok(f)
        }
        PhiCase::Mixed => {
            let n = g.size() as i32;
            let bad = || DriftError::InvalidTriple("tableaux must be single cells".into());
            let i = adjacent_swap(&t.v(), &g.v_word()).ok_or_else(bad)? as i32;
            let p = adjacent_swap(&t.u(), &g.u_word()).ok_or_else(bad)? as i32;
            let (s_entry, t_entry) = (t.s.max_entry(), t.t.max_entry());

            let mut f = g.clone();
            f.remove(Edge::H(n + i, n - i - 1))?;
            let mut d = Edge::V(n + i, n - i - 1);
            f.insert(d)?;
            for _ in 1..t_entry {
                let before = f.drifters();
                f = localized_move(&f, d, Direction::Right)?;
                d = moved(&before, &f, d)?;
            }

            f.remove(Edge::H(p - 1, p - 1))?;
            let mut d = Edge::V(p, p - 1);
            f.insert(d)?;
            for _ in 1..s_entry {
                let before = f.drifters();
                f = localized_move(&f, d, Direction::Left)?;
                d = moved(&before, &f, d)?;
            }
            f.validate()
                .map_err(|e| DriftError::InvalidTriple(e.to_string()))?;
            Ok(f)
        }
    }
}

fn moved(before: &[Edge], after: &Tfpl, d: Edge) -> Result<Edge, DriftError> {
    let fresh: Vec<Edge> = after
        .drifters()
        .into_iter()
        .filter(|e| !before.contains(e))
        .collect();
    match fresh.as_slice() {
        [e] => Ok(*e),
        _ => Err(DriftError::Locality(d)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_tfpls;

    #[test]
    fn stable_maps_to_itself() {
        for f in enumerate_tfpls(3).filter(is_stable) {
            let t = phi(&f).unwrap();
            assert_eq!(t.case(), PhiCase::Stable);
            assert_eq!(t.g, f);
            assert!(t.is_admissible());
            assert_eq!(psi(&t).unwrap(), f);
        }
    }

    #[test]
    fn round_trip_size_four() {
        let mut cases = std::collections::HashSet::new();
        for f in enumerate_tfpls(4) {
            if f.boundary().unwrap().excess() > 2 {
                assert!(matches!(phi(&f), Err(DriftError::UnsupportedExcess(_))));
                continue;
            }
            let t = phi(&f).unwrap();
            assert!(t.is_admissible(), "{}", f.to_text());
            assert_eq!(psi(&t).unwrap(), f);
            cases.insert(t.case());
        }
        assert_eq!(cases.len(), 4);
    }

    #[test]
    fn adjacent_swaps() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(adjacent_swap(&w("0101"), &w("1001")), Some(1));
        assert_eq!(adjacent_swap(&w("0101"), &w("0110")), Some(3));
        assert_eq!(adjacent_swap(&w("0101"), &w("1010")), None);
        assert_eq!(adjacent_swap(&w("0110"), &w("0101")), None);
    }

    #[test]
    fn inadmissible_rejected() {
        let f = enumerate_tfpls(3).find(|f| !f.drifters().is_empty()).unwrap();
        let t = PhiTriple {
            s: Ssyt::empty(to_shape(&f.u_word())),
            g: f.clone(),
            t: Ssyt::empty(to_shape(&f.v_word().star())),
        };
        assert!(matches!(psi(&t), Err(DriftError::InvalidTriple(_))));
    }
}
