//! Mechanical checks of the counting identities and of the drift laws
//! against exhaustive enumeration.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::drift::{
    is_stable, stabilize, trace_drifter, trace_drifter_with, wieland_left, wieland_right,
    Direction, SplitRule, SPLIT_RULE,
};
use crate::enumerate::{enumerate_tfpls, CountTable};
use crate::error::TableError;
use crate::phi::{phi, psi, PhiTriple};
use crate::tfpl::{BoundaryTriple, Tfpl};
use crate::words::{
    dominated_by, g_coefficient, h_step, horizontal_predecessors, restricted_tableaux, to_shape,
    v_step, vertical_predecessors, Word,
};

/// At most this many counterexamples are kept in a report.
pub const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple: Option<BoundaryTriple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tfpl: Option<Tfpl>,
    pub detail: String,
}

impl Counterexample {
    pub fn triple(b: &BoundaryTriple, detail: impl Into<String>) -> Self {
        Counterexample {
            triple: Some(b.clone()),
            tfpl: None,
            detail: detail.into(),
        }
    }

    pub fn tfpl(f: &Tfpl, detail: impl Into<String>) -> Self {
        Counterexample {
            triple: f.boundary().ok(),
            tfpl: Some(f.clone()),
            detail: detail.into(),
        }
    }
}

/// Both sides of a counting identity for one boundary triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub triple: BoundaryTriple,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub checked: usize,
    pub failed: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub instances: Vec<Instance>,
}

impl VerificationReport {
    pub fn new(identity: &str, n: usize) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            n,
            checked: 0,
            failed: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
            instances: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Records one instance; the counterexample is only built on failure.
    pub fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(cx());
            }
        }
    }

    /// Records an identity instance `lhs = rhs`.
    pub fn compare(&mut self, b: &BoundaryTriple, lhs: u64, rhs: u64) {
        self.check(lhs == rhs, || Counterexample::triple(b, format!("lhs = {lhs}, rhs = {rhs}")));
        self.instances.push(Instance {
            triple: b.clone(),
            lhs,
            rhs,
        });
    }

    pub fn instance(&self, b: &BoundaryTriple) -> Option<&Instance> {
        self.instances.iter().find(|i| &i.triple == b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Reading of the second sum of the excess-one identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exc1Reading {
    /// `g_{v*, (v⁺)*}`, the same coefficient as in the excess-two identity.
    StarOfSuccessor,
    /// `g_{v, v⁺}` on the unstarred words.
    Plain,
}

pub const EXC1_READING: Exc1Reading = Exc1Reading::StarOfSuccessor;

/// Every triple `(u, v; w)` of words of length `n` with the same number of
/// ones and excess `exc`, in lexicographic order.
pub fn triples_with_excess(n: usize, exc: i64) -> Vec<BoundaryTriple> {
    let mut out = Vec::new();
    for ones in 0..=n {
        let words = Word::all_with_weight(n, ones);
        for w in &words {
            for u in &words {
                for v in &words {
                    let b = BoundaryTriple::new(u.clone(), v.clone(), w.clone());
                    if b.excess() == exc {
                        out.push(b);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn dominating(w: &Word) -> Vec<Word> {
    Word::all_with_weight(w.len(), w.count_ones())
        .into_iter()
        .filter(|x| dominated_by(w, x).unwrap_or(false))
        .collect()
}

fn v_coefficient(v: &Word, vp: &Word, reading: Exc1Reading) -> u64 {
    let r = match reading {
        Exc1Reading::StarOfSuccessor => g_coefficient(&v.star(), &vp.star()),
        Exc1Reading::Plain => g_coefficient(v, vp),
    };
    r.unwrap_or(0)
}

/// `Σ g_{u,u⁺} g_{v*,(v⁺)*} s_{u⁺,v⁺}^w` over `u⁺ ≥ u`, `v⁺ ≥ v` with
/// `exc(u⁺, v⁺; w) ≥ 0`.
pub fn stable_expansion(table: &CountTable, b: &BoundaryTriple) -> u64 {
    stable_expansion_with(table, b, Exc1Reading::StarOfSuccessor)
}

pub fn stable_expansion_with(table: &CountTable, b: &BoundaryTriple, reading: Exc1Reading) -> u64 {
    let (ups, vps) = (dominating(&b.u), dominating(&b.v));
    let mut sum = 0;
    for up in &ups {
        for vp in &vps {
            if crate::words::excess(up, vp, &b.w) < 0 {
                continue;
            }
            let s = table.s(up, vp, &b.w);
            if s == 0 {
                continue;
            }
            let gu = g_coefficient(&b.u, up).unwrap_or(0);
            sum += gu * v_coefficient(&b.v, vp, reading) * s;
        }
    }
    sum
}

fn check_table(table: &CountTable, n: usize) -> Result<(), TableError> {
    if table.n != n || table.total() == 0 {
        let z = Word::zeros(n);
        return Err(TableError::Incomplete(z.clone(), z.clone(), z));
    }
    Ok(())
}

/// `t = Σ g g s` for every triple of excess 2; missing keys count as zero.
pub fn verify_theorem1(table: &CountTable, n: usize) -> Result<VerificationReport, TableError> {
    check_table(table, n)?;
    let mut r = VerificationReport::new("thm1", n);
    for b in triples_with_excess(n, 2) {
        r.compare(&b, table.t(&b.u, &b.v, &b.w), stable_expansion(table, &b));
    }
    Ok(r)
}

/// `t = s` for every triple of excess 0.
pub fn verify_exc0(table: &CountTable) -> Result<VerificationReport, TableError> {
    let n = table.n;
    check_table(table, n)?;
    let mut r = VerificationReport::new("exc0", n);
    for b in triples_with_excess(n, 0) {
        let c = table.get(&b.u, &b.v, &b.w);
        r.compare(&b, c.t, c.s);
    }
    Ok(r)
}

/// The excess-one identity under [`EXC1_READING`]; the other reading is
/// evaluated too and its failure count is noted.
pub fn verify_exc1(table: &CountTable) -> Result<VerificationReport, TableError> {
    let n = table.n;
    check_table(table, n)?;
    let mut r = VerificationReport::new("exc1", n);
    let other = match EXC1_READING {
        Exc1Reading::StarOfSuccessor => Exc1Reading::Plain,
        Exc1Reading::Plain => Exc1Reading::StarOfSuccessor,
    };
    let mut other_failed = 0;
    for b in triples_with_excess(n, 1) {
        let t = table.t(&b.u, &b.v, &b.w);
        let rhs = stable_expansion_with(table, &b, EXC1_READING);
        if stable_expansion_with(table, &b, other) != t {
            other_failed += 1;
        }
        r.compare(&b, t, rhs);
    }
    r.notes.push(format!("frozen reading: {EXC1_READING:?}"));
    r.notes.push(format!("{other:?} reading fails on {other_failed} triples"));
    Ok(r)
}

/// Every realized boundary has equal weights, `u ≤ w`, `v ≤ w` and
/// non-negative excess.
pub fn verify_necessary_conditions(table: &CountTable) -> VerificationReport {
    let mut r = VerificationReport::new("necessary", table.n);
    for b in table.entries.keys() {
        r.check(b.satisfies_necessary_conditions(), || {
            Counterexample::triple(b, "realized boundary violates a necessary condition")
        });
    }
    r
}

fn low_excess(n: usize) -> impl Iterator<Item = Tfpl> {
    enumerate_tfpls(n).filter(|f| f.boundary().map(|b| b.excess() <= 2).unwrap_or(false))
}

/// Path lengths of every drifter of every TFPL of excess at most 2, and the
/// dichotomy between leaving left and leaving right.
pub fn verify_corollary2(n: usize) -> VerificationReport {
    let mut r = VerificationReport::new("cor2", n);
    let mut bad: Vec<(Tfpl, crate::grid::Edge)> = Vec::new();
    for f in low_excess(n) {
        for d in f.drifters() {
            let outcome = trace_drifter(&f, d);
            let ok = outcome
                .as_ref()
                .is_ok_and(|t| t.balanced() && t.leaves_left() != t.leaves_right());
            if !ok {
                bad.push((f.clone(), d));
            }
            r.check(ok, || {
                let detail = match &outcome {
                    Ok(t) => format!(
                        "{d}: L={} R={} R1={} L0={}",
                        t.left_steps, t.right_steps, t.r1, t.l0
                    ),
                    Err(e) => format!("{d}: {e}"),
                };
                Counterexample::tfpl(&f, detail)
            });
        }
    }
    r.notes.push(format!("split rule: {SPLIT_RULE:?}"));
    if !bad.is_empty() {
        for rule in [SplitRule::SameRowElseLower, SplitRule::Upper, SplitRule::Lower] {
            let fails = bad
                .iter()
                .filter(|(f, d)| !trace_drifter_with(f, *d, rule).is_ok_and(|t| t.balanced()))
                .count();
            r.notes.push(format!("{rule:?}: {fails} of the failing drifters still fail"));
        }
    }
    r
}

/// Termwise census of `Φ` on excess-2 TFPLs: injectivity, `Ψ∘Φ = id`,
/// image inside the admissible triples, and for each `(u⁺, v⁺)` exactly
/// `g_{u,u⁺} g_{v*,(v⁺)*} s_{u⁺,v⁺}^w` preimages. Also checks `Φ∘Ψ = id` on
/// every admissible triple.
pub fn verify_phi_census(n: usize) -> VerificationReport {
    let mut r = VerificationReport::new("phi", n);
    let mut observed: BTreeMap<(BoundaryTriple, Word, Word), u64> = BTreeMap::new();
    let mut images: HashSet<String> = HashSet::new();
    let mut table = CountTable::new(n);
    let mut stable = Vec::new();
    for f in enumerate_tfpls(n) {
        let b = f.boundary_unchecked();
        table.record(b.clone(), f.drifters().is_empty());
        if f.drifters().is_empty() {
            stable.push(f.clone());
        }
        if b.excess() != 2 {
            continue;
        }
        let t = match phi(&f) {
            Ok(t) => t,
            Err(e) => {
                r.check(false, || Counterexample::tfpl(&f, format!("phi failed: {e}")));
                continue;
            }
        };
        r.check(t.is_admissible(), || Counterexample::tfpl(&f, "image is not admissible"));
        let back = psi(&t);
        r.check(back.as_ref() == Ok(&f), || {
            Counterexample::tfpl(&f, format!("psi(phi(f)) = {back:?}"))
        });
        *observed
            .entry((b.clone(), t.g.u_word(), t.g.v_word()))
            .or_default() += 1;
        let fresh = images.insert(serde_json::to_string(&t).expect("triples serialize"));
        r.check(fresh, || Counterexample::tfpl(&f, "phi is not injective"));
    }
    let mut expected: BTreeMap<(BoundaryTriple, Word, Word), u64> = BTreeMap::new();
    for b in triples_with_excess(n, 2) {
        for up in dominating(&b.u) {
            for vp in dominating(&b.v) {
                let s = table.s(&up, &vp, &b.w);
                if s == 0 {
                    continue;
                }
                let g = g_coefficient(&b.u, &up).unwrap_or(0)
                    * g_coefficient(&b.v.star(), &vp.star()).unwrap_or(0);
                if g * s > 0 {
                    expected.insert((b.clone(), up.clone(), vp), g * s);
                }
            }
        }
    }
    let keys: HashSet<_> = observed.keys().chain(expected.keys()).cloned().collect();
    let mut keys: Vec<_> = keys.into_iter().collect();
    keys.sort();
    for k in keys {
        let (o, e) = (observed.get(&k).copied().unwrap_or(0), expected.get(&k).copied().unwrap_or(0));
        r.check(o == e, || {
            Counterexample::triple(&k.0, format!("term ({}, {}): {o} preimages, expected {e}", k.1, k.2))
        });
    }
    for t in admissible_triples(&stable, n) {
        let back = psi(&t).and_then(|f| phi(&f));
        r.check(back.as_ref() == Ok(&t), || Counterexample {
            triple: None,
            tfpl: Some(t.g.clone()),
            detail: format!("phi(psi(t)) differs for S = {:?}, T = {:?}", t.s.entries, t.t.entries),
        });
    }
    r
}

/// All triples `(S, g, T)` with `g` among `stable` and `exc(u, v; w) = 2`.
pub fn admissible_triples(stable: &[Tfpl], n: usize) -> Vec<PhiTriple> {
    let mut out = Vec::new();
    for g in stable {
        let (up, vp, w) = (g.u_word(), g.v_word(), g.w_word());
        let us: Vec<Word> = Word::all_with_weight(n, up.count_ones())
            .into_iter()
            .filter(|u| dominated_by(u, &up).unwrap_or(false))
            .collect();
        let vs: Vec<Word> = Word::all_with_weight(n, vp.count_ones())
            .into_iter()
            .filter(|v| dominated_by(v, &vp).unwrap_or(false))
            .collect();
        for u in &us {
            for v in &vs {
                if crate::words::excess(u, v, &w) != 2 {
                    continue;
                }
                let ss = restricted_tableaux(&to_shape(u), &to_shape(&up)).unwrap_or_default();
                let ts = restricted_tableaux(&to_shape(&v.star()), &to_shape(&vp.star()))
                    .unwrap_or_default();
                for s in &ss {
                    for t in &ts {
                        out.push(PhiTriple {
                            s: s.clone(),
                            g: g.clone(),
                            t: t.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Mutual inverseness of left and right drift for every admissible
/// predecessor word, fixed points equal drifter-free TFPLs, and stability
/// after `2N − 1` left-drift steps.
pub fn verify_drift_laws(n: usize) -> VerificationReport {
    let mut r = VerificationReport::new("drift", n);
    for f in enumerate_tfpls(n) {
        let (u, v) = (f.u_word(), f.v_word());
        for um in horizontal_predecessors(&u) {
            let back = wieland_left(&f, Some(&um)).and_then(|g| wieland_right(&g, Some(&v)));
            r.check(back.as_ref() == Ok(&f), || {
                Counterexample::tfpl(&f, format!("WR_v(WL_{um}(f)) != f"))
            });
        }
        for vm in vertical_predecessors(&v) {
            let back = wieland_right(&f, Some(&vm)).and_then(|g| wieland_left(&g, Some(&u)));
            r.check(back.as_ref() == Ok(&f), || {
                Counterexample::tfpl(&f, format!("WL_u(WR_{vm}(f)) != f"))
            });
        }
        let stable = is_stable(&f);
        r.check(stable == f.drifters().is_empty(), || {
            Counterexample::tfpl(&f, format!("stable = {stable} but {} drifters", f.drifters().len()))
        });
        let mut g = f.clone();
        for _ in 0..(2 * n).saturating_sub(1) {
            g = match wieland_left(&g, None) {
                Ok(next) => next,
                Err(_) => break,
            };
        }
        r.check(is_stable(&g), || Counterexample::tfpl(&f, "WL^(2N-1)(f) is not stable"));
    }
    r
}

/// Necessary conditions, at most `exc` drifters, and strip relations between
/// consecutive boundaries along both arms of every drift orbit.
pub fn verify_structure(n: usize) -> VerificationReport {
    let mut r = VerificationReport::new("structure", n);
    for f in enumerate_tfpls(n) {
        let b = f.boundary_unchecked();
        r.check(b.satisfies_necessary_conditions(), || {
            Counterexample::tfpl(&f, "boundary violates a necessary condition")
        });
        let k = f.drifters().len() as i64;
        r.check(k <= b.excess(), || {
            Counterexample::tfpl(&f, format!("{k} drifters but excess {}", b.excess()))
        });
        for dir in [Direction::Left, Direction::Right] {
            let arm = match stabilize(&f, dir) {
                Ok(arm) => arm,
                Err(e) => {
                    r.check(false, || Counterexample::tfpl(&f, format!("{dir:?} arm: {e}")));
                    continue;
                }
            };
            let ok = arm.configs.windows(2).all(|p| {
                let (a, c) = (p[0].boundary_unchecked(), p[1].boundary_unchecked());
                let same_w = a.w == c.w;
                match dir {
                    Direction::Left => same_w && a.u == c.u && v_step(&a.v, &c.v),
                    Direction::Right => same_w && a.v == c.v && h_step(&a.u, &c.u),
                }
            });
            r.check(ok, || Counterexample::tfpl(&f, format!("{dir:?} arm breaks a strip relation")));
        }
    }
    r
}
