//! Binary words, the Young diagrams they encode, strips, semistandard
//! tableaux built from chains of words, and the restricted tableau counts
//! that appear as coefficients in the stable-TFPL expansion.
//!
//! A word `ω` of length `N` is drawn as a lattice path: `0` is an up step,
//! `1` is a right step. The diagram `λ(ω)` is the region enclosed by the path,
//! the vertical line through its start and the horizontal line through its
//! end. It lives in a box with `|ω|_0` rows and `|ω|_1` columns; the `j`-th
//! column (from the left) has height equal to the number of zeros after the
//! `j`-th one.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::WordError;

/// A finite word over `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<u8>);

impl Word {
    pub fn from_bits(bits: Vec<u8>) -> Result<Self, WordError> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(WordError::InvalidLetter(char::from(b'0' + b.min(9))));
        }
        Ok(Word(bits))
    }

    pub fn zeros(n: usize) -> Self {
        Word(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    /// Number of pairs `i < j` with `ω_i = 1` and `ω_j = 0`.
    pub fn inversions(&self) -> usize {
        let mut ones = 0;
        let mut inv = 0;
        for &b in &self.0 {
            if b == 1 {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Word {
        Word(self.0.iter().map(|&b| 1 - b).collect())
    }

    /// Reversal of the complement, `ω* = rev(comp(ω))`.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|&b| 1 - b).collect())
    }

    /// 1-based positions of the ones, left to right.
    pub fn one_positions(&self) -> Vec<usize> {
        positions(&self.0, 1)
    }

    /// 1-based positions of the zeros, left to right.
    pub fn zero_positions(&self) -> Vec<usize> {
        positions(&self.0, 0)
    }

    /// All words of length `n` with exactly `ones` ones, in lexicographic order.
    pub fn all_with_weight(n: usize, ones: usize) -> Vec<Word> {
        all_words(n)
            .into_iter()
            .filter(|w| w.count_ones() == ones)
            .collect()
    }

    /// Diagram of this word inside its `|ω|_0 × |ω|_1` box.
    pub fn shape(&self) -> YoungShape {
        to_shape(self)
    }
}

fn positions(bits: &[u8], letter: u8) -> Vec<usize> {
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b == letter)
        .map(|(i, _)| i + 1)
        .collect()
}

/// All `2^n` words of length `n`, lexicographically.
pub fn all_words(n: usize) -> Vec<Word> {
    (0u64..(1u64 << n))
        .map(|m| Word((0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u8).collect()))
        .collect()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(WordError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = WordError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

pub fn inversions(w: &Word) -> usize {
    w.inversions()
}

fn check_comparable(a: &Word, b: &Word) -> Result<(), WordError> {
    if a.len() != b.len() {
        return Err(WordError::LengthMismatch(a.len(), b.len()));
    }
    if a.count_ones() != b.count_ones() {
        return Err(WordError::WeightMismatch(a.clone(), b.clone()));
    }
    Ok(())
}

/// `a ≤ b`: every prefix of `a` has at most as many ones as the prefix of `b`
/// of the same length.
pub fn dominated_by(a: &Word, b: &Word) -> Result<bool, WordError> {
    check_comparable(a, b)?;
    let (mut pa, mut pb) = (0usize, 0usize);
    for (&x, &y) in a.bits().iter().zip(b.bits()) {
        pa += x as usize;
        pb += y as usize;
        if pa > pb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Young diagram with rows listed top to bottom, drawn inside a bounding box
/// of `rows.len()` rows and `columns` columns. Empty rows and columns are
/// allowed; equality ignores them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct YoungShape {
    rows: Vec<usize>,
    columns: usize,
}

impl YoungShape {
    pub fn new(rows: Vec<usize>, columns: usize) -> Result<Self, WordError> {
        if rows.windows(2).any(|p| p[0] < p[1]) {
            return Err(WordError::NotAPartition(rows));
        }
        if rows.first().copied().unwrap_or(0) > columns {
            return Err(WordError::NotAPartition(rows));
        }
        Ok(YoungShape { rows, columns })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Width of the bounding box (counts empty columns).
    pub fn box_columns(&self) -> usize {
        self.columns
    }

    /// Height of the bounding box (counts empty rows).
    pub fn box_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.rows.get(r).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        c < self.row_len(r)
    }

    pub fn column_height(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&len| len > c).count()
    }

    pub fn contains(&self, other: &YoungShape) -> bool {
        let n = self.rows.len().max(other.rows.len());
        (0..n).all(|r| other.row_len(r) <= self.row_len(r))
    }

    /// Cells `(row, column)` of `self / inner`, row-major.
    pub fn skew_cells(&self, inner: &YoungShape) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &len) in self.rows.iter().enumerate() {
            for c in inner.row_len(r)..len {
                out.push((r, c));
            }
        }
        out
    }

    /// Transpose; the bounding box is transposed as well.
    pub fn conjugate(&self) -> YoungShape {
        let rows = (0..self.columns).map(|c| self.column_height(c)).collect();
        YoungShape {
            rows,
            columns: self.rows.len(),
        }
    }

    /// Inverse of [`to_shape`] for the word whose box this shape fills.
    pub fn to_word(&self) -> Word {
        let zeros = self.rows.len();
        let ones = self.columns;
        let mut bits = vec![0u8; zeros + ones];
        for j in 0..ones {
            let pos = zeros - self.column_height(j) + j;
            bits[pos] = 1;
        }
        Word(bits)
    }

    fn trimmed(&self) -> &[usize] {
        let end = self.rows.iter().rposition(|&r| r > 0).map_or(0, |p| p + 1);
        &self.rows[..end]
    }
}

impl PartialEq for YoungShape {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for YoungShape {}

/// `λ(ω)`: row `r` (from the top) has as many cells as there are ones with at
/// least `r + 1` zeros after them.
pub fn to_shape(w: &Word) -> YoungShape {
    let zeros = w.count_zeros();
    let ones = w.count_ones();
    let mut zeros_after = Vec::with_capacity(ones);
    let mut remaining = zeros;
    for &b in w.bits() {
        if b == 0 {
            remaining -= 1;
        } else {
            zeros_after.push(remaining);
        }
    }
    let rows = (0..zeros)
        .map(|r| zeros_after.iter().filter(|&&z| z > r).count())
        .collect();
    YoungShape {
        rows,
        columns: ones,
    }
}

pub fn conjugate(s: &YoungShape) -> YoungShape {
    s.conjugate()
}

/// `a →h b`: the `j`-th one of `a`, at position `i`, is matched by the `j`-th
/// one of `b` at position `i - 1` or `i`.
pub fn is_horizontal_strip(a: &Word, b: &Word) -> Result<bool, WordError> {
    if !dominated_by(a, b)? {
        return Err(WordError::NotDominated(a.clone(), b.clone()));
    }
    Ok(a.one_positions()
        .iter()
        .zip(b.one_positions())
        .all(|(&i, k)| k == i || k + 1 == i))
}

/// `a →v b`: the `j`-th zero of `a`, at position `i`, is matched by the `j`-th
/// zero of `b` at position `i` or `i + 1`.
pub fn is_vertical_strip(a: &Word, b: &Word) -> Result<bool, WordError> {
    if !dominated_by(a, b)? {
        return Err(WordError::NotDominated(a.clone(), b.clone()));
    }
    Ok(a.zero_positions()
        .iter()
        .zip(b.zero_positions())
        .all(|(&i, k)| k == i || k == i + 1))
}

/// Same as [`is_horizontal_strip`] but `false` instead of an error for
/// incomparable words.
pub fn h_step(a: &Word, b: &Word) -> bool {
    is_horizontal_strip(a, b).unwrap_or(false)
}

pub fn v_step(a: &Word, b: &Word) -> bool {
    is_vertical_strip(a, b).unwrap_or(false)
}

/// All words `x` with `x →h w`.
pub fn horizontal_predecessors(w: &Word) -> Vec<Word> {
    all_words(w.len())
        .into_iter()
        .filter(|x| x.count_ones() == w.count_ones() && h_step(x, w))
        .collect()
}

/// All words `x` with `x →v w`.
pub fn vertical_predecessors(w: &Word) -> Vec<Word> {
    all_words(w.len())
        .into_iter()
        .filter(|x| x.count_ones() == w.count_ones() && v_step(x, w))
        .collect()
}

/// A chain `τ⁰ →h τ¹ →h … →h τᵐ` of words of one length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewChain {
    words: Vec<Word>,
}

impl SkewChain {
    pub fn new(words: Vec<Word>) -> Result<Self, WordError> {
        if words.is_empty() {
            return Err(WordError::EmptyChain);
        }
        for (i, pair) in words.windows(2).enumerate() {
            if !h_step(&pair[0], &pair[1]) {
                return Err(WordError::NotAStrip {
                    step: i + 1,
                    from: pair[0].clone(),
                    to: pair[1].clone(),
                });
            }
        }
        Ok(SkewChain { words })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Number of strips, `m`.
    pub fn steps(&self) -> usize {
        self.words.len() - 1
    }
}

/// Semistandard tableau of skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ssyt {
    pub inner: YoungShape,
    pub outer: YoungShape,
    /// `(row, column) → entry`, rows from the top.
    #[serde(with = "entry_list")]
    pub entries: BTreeMap<(usize, usize), u32>,
}

mod entry_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, usize), u32>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().map(|(&(r, c), &e)| (r, c, e)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), u32>, D::Error> {
        let v: Vec<(usize, usize, u32)> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|(r, c, e)| ((r, c), e)).collect())
    }
}

impl Ssyt {
    pub fn empty(shape: YoungShape) -> Self {
        Ssyt {
            inner: shape.clone(),
            outer: shape,
            entries: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.values().copied().max().unwrap_or(0)
    }

    /// Rows weakly increase, columns strictly increase, every skew cell is
    /// filled with a positive entry.
    pub fn is_semistandard(&self) -> bool {
        let cells = self.outer.skew_cells(&self.inner);
        if cells.len() != self.entries.len() {
            return false;
        }
        cells.iter().all(|&(r, c)| {
            let Some(&e) = self.entries.get(&(r, c)) else {
                return false;
            };
            let left_ok = c == 0
                || self
                    .entries
                    .get(&(r, c - 1))
                    .is_none_or(|&l| l <= e);
            let up_ok = r == 0 || self.entries.get(&(r - 1, c)).is_none_or(|&u| u < e);
            e >= 1 && left_ok && up_ok
        })
    }

    /// Entry in the `i`-th column counted from the right of the box is at most `i`.
    pub fn is_column_restricted(&self) -> bool {
        let width = self.outer.box_columns();
        self.entries
            .iter()
            .all(|(&(_, c), &e)| (e as usize) <= width - c)
    }
}

impl fmt::Display for Ssyt {
    /// One line per row of the outer shape; cells of the inner shape are `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, &len) in self.outer.rows().iter().enumerate() {
            let line: Vec<String> = (0..len)
                .map(|c| match self.entries.get(&(r, c)) {
                    Some(e) => e.to_string(),
                    None => ".".to_string(),
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Cells of `λ(τ^i) / λ(τ^{i-1})` receive entry `i`.
pub fn ssyt_from_chain(chain: &SkewChain) -> Ssyt {
    let words = chain.words();
    let mut entries = BTreeMap::new();
    for (i, pair) in words.windows(2).enumerate() {
        let (prev, next) = (to_shape(&pair[0]), to_shape(&pair[1]));
        for cell in next.skew_cells(&prev) {
            entries.insert(cell, (i + 1) as u32);
        }
    }
    Ssyt {
        inner: to_shape(&words[0]),
        outer: to_shape(&words[words.len() - 1]),
        entries,
    }
}

/// Inverse of [`ssyt_from_chain`] for a chain with `steps` strips.
pub fn chain_from_ssyt(t: &Ssyt, steps: usize) -> Result<SkewChain, WordError> {
    if (t.max_entry() as usize) > steps {
        return Err(WordError::TooFewSteps(t.max_entry() as usize, steps));
    }
    let mut words = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let rows = t
            .outer
            .rows()
            .iter()
            .enumerate()
            .map(|(r, _)| {
                let base = t.inner.row_len(r);
                base + t
                    .entries
                    .iter()
                    .filter(|(&(er, _), &e)| er == r && (e as usize) <= i)
                    .count()
            })
            .collect();
        let shape = YoungShape::new(rows, t.outer.box_columns())?;
        words.push(shape.to_word());
    }
    SkewChain::new(words)
}

/// All tableaux of shape `outer / inner` whose entries in the `i`-th column
/// from the right of the box are at most `i`.
pub fn restricted_tableaux(inner: &YoungShape, outer: &YoungShape) -> Result<Vec<Ssyt>, WordError> {
    if !outer.contains(inner) {
        return Err(WordError::NotContained);
    }
    let cells = outer.skew_cells(inner);
    let width = outer.box_columns();
    let mut out = Vec::new();
    let mut current: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    fill_cells(&cells, 0, width, &mut current, &mut |entries| {
        out.push(Ssyt {
            inner: inner.clone(),
            outer: outer.clone(),
            entries: entries.clone(),
        })
    });
    Ok(out)
}

pub fn count_restricted_tableaux(inner: &YoungShape, outer: &YoungShape) -> Result<u64, WordError> {
    restricted_tableaux(inner, outer).map(|v| v.len() as u64)
}

type Filling = BTreeMap<(usize, usize), u32>;

fn fill_cells(
    cells: &[(usize, usize)],
    k: usize,
    width: usize,
    current: &mut Filling,
    emit: &mut dyn FnMut(&Filling),
) {
    let Some(&(r, c)) = cells.get(k) else {
        emit(current);
        return;
    };
    let lo_row = if c > 0 { current.get(&(r, c - 1)).copied().unwrap_or(1) } else { 1 };
    let lo_col = if r > 0 { current.get(&(r - 1, c)).map_or(1, |&u| u + 1) } else { 1 };
    let hi = (width - c) as u32;
    for e in lo_row.max(lo_col)..=hi {
        current.insert((r, c), e);
        fill_cells(cells, k + 1, width, current, emit);
    }
    current.remove(&(r, c));
}

/// `g_{σ,σ⁺}` for `σ ≤ σ⁺` with `d(σ⁺) − d(σ) ≤ 2`.
///
/// Dispatches on the skew shape `λ(σ⁺)/λ(σ)`, where `k` is the number of
/// columns of the box strictly to the right of a cell:
///
/// * no cell: `1`
/// * one cell: `k + 1`
/// * two cells in different rows and columns: `(k_r + 1)(k_l + 1)` with `k_r`
///   for the right cell and `k_l` for the left one
/// * vertical domino: `k (k + 1) / 2`
/// * horizontal domino: `(k_r + 2)(k_r + 1) / 2`, `k_r` for the right cell
pub fn g_coefficient(s: &Word, sp: &Word) -> Result<u64, WordError> {
    if !dominated_by(s, sp)? {
        return Err(WordError::NotDominated(s.clone(), sp.clone()));
    }
    let diff = sp.inversions() - s.inversions();
    if diff > 2 {
        return Err(WordError::OutOfDomain(s.clone(), sp.clone()));
    }
    let (inner, outer) = (to_shape(s), to_shape(sp));
    let width = outer.box_columns();
    let right_of = |c: usize| (width - 1 - c) as u64;
    let cells = outer.skew_cells(&inner);
    Ok(match cells.as_slice() {
        [] => 1,
        [(_, c)] => right_of(*c) + 1,
        [(r1, c1), (r2, c2)] => {
            if c1 == c2 {
                let k = right_of(*c1);
                k * (k + 1) / 2
            } else if r1 == r2 {
                let k = right_of(*c1.max(c2));
                (k + 2) * (k + 1) / 2
            } else {
                let (left, right) = (*c1.min(c2), *c1.max(c2));
                (right_of(right) + 1) * (right_of(left) + 1)
            }
        }
        _ => unreachable!("at most two cells when the inversion gap is at most 2"),
    })
}

/// The printed case split, matching substrings of the two words:
/// `σ_L 01 σ_R`, `σ_L 01 σ_M 01 σ_R`, `σ_L 001 σ_R`, `σ_L 011 σ_R`.
///
/// Kept for comparison against [`g_coefficient`]; the two-separate-cells case
/// uses `|σ_R|_1 + |σ_M|_1 + 1` for the left factor.
pub fn g_coefficient_printed(s: &Word, sp: &Word) -> Result<u64, WordError> {
    if !dominated_by(s, sp)? {
        return Err(WordError::NotDominated(s.clone(), sp.clone()));
    }
    if sp.inversions() - s.inversions() > 2 {
        return Err(WordError::OutOfDomain(s.clone(), sp.clone()));
    }
    let (a, b) = (s.bits(), sp.bits());
    let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    let ones = |range: std::ops::Range<usize>| a[range].iter().filter(|&&x| x == 1).count() as u64;
    let n = a.len();
    Ok(match diff.as_slice() {
        [] => 1,
        [i, j] if j - i == 1 => ones(j + 1..n) + 1,
        [i, j] if j - i == 2 && a[i + 1] == 0 => {
            let r = ones(j + 1..n);
            (r + 1) * r / 2
        }
        [i, j] if j - i == 2 => {
            let r = ones(j + 1..n);
            (r + 2) * (r + 1) / 2
        }
        [_, i2, j1, j2] => {
            let _ = i2;
            let r = ones(j2 + 1..n);
            let m = ones(i2 + 1..*j1);
            (r + 1) * (r + m + 1)
        }
        _ => return Err(WordError::OutOfDomain(s.clone(), sp.clone())),
    })
}

/// `exc(u, v; w) = d(w) − d(u) − d(v)`.
pub fn excess(u: &Word, v: &Word, w: &Word) -> i64 {
    w.inversions() as i64 - u.inversions() as i64 - v.inversions() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(w("0011").inversions(), 0);
        assert_eq!(w("10").inversions(), 1);
        assert_eq!(w("1100").inversions(), 4);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominated_by(&w("0011"), &w("1100")).unwrap());
        assert!(dominated_by(&w("0101"), &w("0101")).unwrap());
        assert!(!dominated_by(&w("1100"), &w("0011")).unwrap());
        assert!(dominated_by(&w("01"), &w("011")).is_err());
        assert!(dominated_by(&w("01"), &w("11")).is_err());
    }

    #[test]
    fn star_examples() {
        assert_eq!(w("0110").star(), w("1001"));
        assert_eq!(w("0011").star(), w("0011"));
        assert_eq!(w("01101").star().star(), w("01101"));
    }

    #[test]
    fn shape_examples() {
        assert_eq!(to_shape(&w("0101")).rows(), &[1, 0]);
        assert_eq!(to_shape(&w("0000")).cell_count(), 0);
        // box is |ω|_0 × |ω|_1
        let s = to_shape(&w("0100101011"));
        assert_eq!(s.box_rows(), 5);
        assert_eq!(s.box_columns(), 5);
        assert_eq!(s.cell_count(), w("0100101011").inversions());
    }

    #[test]
    fn shape_word_round_trip() {
        for x in all_words(7) {
            assert_eq!(to_shape(&x).to_word(), x);
        }
    }

    #[test]
    fn conjugate_is_star() {
        for x in all_words(7) {
            let c = to_shape(&x).conjugate();
            assert_eq!(c, to_shape(&x.star()));
            assert_eq!(c.box_columns(), x.count_zeros());
        }
    }

    #[test]
    fn strip_chain_from_figure() {
        let chain = ["001011011", "010101110", "011011010", "011011100"];
        for p in chain.windows(2) {
            assert!(is_horizontal_strip(&w(p[0]), &w(p[1])).unwrap());
        }
        assert!(is_horizontal_strip(&w("0101"), &w("0101")).unwrap());
        assert!(is_horizontal_strip(&w("1100"), &w("0011")).is_err());
    }

    #[test]
    fn figure_tableau() {
        let chain = SkewChain::new(
            ["001011011", "010101110", "011011010", "011011100"]
                .iter()
                .map(|s| w(s))
                .collect(),
        )
        .unwrap();
        let t = ssyt_from_chain(&chain);
        assert!(t.is_semistandard());
        assert_eq!(t.inner, to_shape(&w("001011011")));
        assert_eq!(t.outer, to_shape(&w("011011100")));
        assert_eq!(
            t.entries.len(),
            w("011011100").inversions() - w("001011011").inversions()
        );
        assert_eq!(t.max_entry(), 3);
        assert_eq!(chain_from_ssyt(&t, 3).unwrap(), chain);
    }

    #[test]
    fn single_word_chain_is_empty_tableau() {
        let c = SkewChain::new(vec![w("0110")]).unwrap();
        let t = ssyt_from_chain(&c);
        assert!(t.is_empty());
        assert_eq!(t.inner, t.outer);
    }

    #[test]
    fn broken_chain_rejected() {
        assert!(matches!(
            SkewChain::new(vec![w("0011"), w("1100")]),
            Err(WordError::NotAStrip { .. })
        ));
    }

    #[test]
    fn restricted_tableaux_examples() {
        let s = to_shape(&w("0110"));
        assert_eq!(restricted_tableaux(&s, &s).unwrap().len(), 1);
        // single cell with k columns to its right: k + 1 fillings
        for (a, b, k) in [("0101", "1001", 1), ("0011", "0101", 1), ("01011", "10011", 2)] {
            let n = restricted_tableaux(&to_shape(&w(a)), &to_shape(&w(b))).unwrap().len();
            assert_eq!(n, k + 1, "{a} -> {b}");
        }
        assert!(restricted_tableaux(&to_shape(&w("1100")), &to_shape(&w("0011"))).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_coefficient(&w("0110"), &w("0110")).unwrap(), 1);
        assert_eq!(g_coefficient(&w("01"), &w("10")).unwrap(), 1);
        assert_eq!(g_coefficient(&w("011"), &w("110")).unwrap(), 1);
        assert!(g_coefficient(&w("0011"), &w("1100")).is_err());
    }

    #[test]
    fn excess_examples() {
        assert_eq!(excess(&w("0011"), &w("0110"), &w("1100")), 2);
        assert_eq!(excess(&w("0101"), &w("0101"), &w("0101")), -1);
        assert_eq!(excess(&w("01101"), &w("00111"), &w("10110")), 2);
    }

    #[test]
    fn tableau_text_format() {
        let chain = SkewChain::new(vec![w("0101"), w("1001")]).unwrap();
        let t = ssyt_from_chain(&chain);
        assert_eq!(t.to_string(), ".\n1\n");
    }
}
