//! Hook tableaux T = T⁺ ⊎ T⁻, semistandardness, enumeration and concatenation.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hookshapes::{HookShape, Signature};
use crate::rational::{format_rational, parse_rational, Q};

/// A box position (row i, column j), both 1-based; rows m+1.. lie below the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Whether a cell belongs to the diagram with row lengths `rows` and below-line heights `below`.
pub(crate) fn in_diagram(m: usize, rows: &[usize], below: &[usize], c: Cell) -> bool {
    if c.i == 0 || c.j == 0 {
        return false;
    }
    if c.i <= m {
        c.j <= rows[c.i - 1]
    } else {
        below.get(c.j - 1).is_some_and(|&h| c.i - m <= h)
    }
}

/// Cells in reading order: rows 1..m left to right, then below-line columns top to bottom.
pub fn reading_cells(shape: &HookShape) -> Vec<Cell> {
    let m = shape.sig().m;
    let mut out = Vec::with_capacity(shape.boxes());
    for (r, &len) in shape.row_lengths().iter().enumerate() {
        out.extend((1..=len).map(|j| Cell::new(r + 1, j)));
    }
    for (c, &h) in shape.below_heights().iter().enumerate() {
        out.extend((1..=h).map(|d| Cell::new(m + d, c + 1)));
    }
    out
}

/// Cells column by column, each column top to bottom through the line.
pub fn column_cells(shape: &HookShape) -> Vec<Cell> {
    column_cells_grouped(shape).into_iter().flatten().collect()
}

pub(crate) fn column_cells_grouped(shape: &HookShape) -> Vec<Vec<Cell>> {
    shape
        .column_heights()
        .iter()
        .enumerate()
        .map(|(k, &h)| (1..=h).map(|i| Cell::new(i, k + 1)).collect())
        .collect()
}

/// Cells grouped by diagram row, rows 1, 2, ... including rows below the line.
pub(crate) fn row_cells_grouped(shape: &HookShape) -> Vec<Vec<Cell>> {
    let m = shape.sig().m;
    let mut out: Vec<Vec<Cell>> = shape
        .row_lengths()
        .iter()
        .enumerate()
        .map(|(r, &len)| (1..=len).map(|j| Cell::new(r + 1, j)).collect())
        .collect();
    let below = shape.below_heights();
    let depth = below.first().copied().unwrap_or(0);
    for d in 1..=depth {
        out.push(
            below
                .iter()
                .enumerate()
                .filter(|(_, &h)| h >= d)
                .map(|(c, _)| Cell::new(m + d, c + 1))
                .collect(),
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HookTableau {
    shape: HookShape,
    plus: Vec<Vec<u8>>,
    minus: Vec<Vec<u8>>,
}

impl HookTableau {
    /// `plus[i-1]` is row i, `minus[j-1]` is below-line column j read top to bottom.
    pub fn new(shape: HookShape, plus: Vec<Vec<u8>>, minus: Vec<Vec<u8>>) -> Result<Self> {
        let rows = shape.row_lengths();
        let below = shape.below_heights();
        let plus_lens: Vec<usize> = plus.iter().map(Vec::len).collect();
        let minus_lens: Vec<usize> = minus.iter().map(Vec::len).collect();
        if plus_lens != rows || minus_lens != below {
            return Err(Error::ShapeMismatch(format!(
                "rows {plus_lens:?} / columns {minus_lens:?} do not fit {shape}"
            )));
        }
        let max = shape.sig().letters();
        if let Some(&e) = plus
            .iter()
            .chain(&minus)
            .flatten()
            .find(|&&e| e == 0 || e as usize > max)
        {
            return Err(Error::EntryOutOfRange {
                entry: e as usize,
                max,
            });
        }
        Ok(HookTableau { shape, plus, minus })
    }

    /// Fills the shape with `values` given in reading order.
    pub fn from_reading_word(shape: HookShape, values: &[u8]) -> Result<Self> {
        if values.len() != shape.boxes() {
            return Err(Error::LengthMismatch(format!(
                "{} values for {} boxes",
                values.len(),
                shape.boxes()
            )));
        }
        let mut it = values.iter().copied();
        let plus = shape
            .row_lengths()
            .iter()
            .map(|&l| it.by_ref().take(l).collect())
            .collect();
        let minus = shape
            .below_heights()
            .iter()
            .map(|&h| it.by_ref().take(h).collect())
            .collect();
        HookTableau::new(shape, plus, minus)
    }

    pub fn empty(sig: Signature) -> Self {
        HookTableau {
            shape: HookShape::zero(sig),
            plus: vec![vec![]; sig.m],
            minus: vec![vec![]; sig.odd_columns()],
        }
    }

    pub fn shape(&self) -> &HookShape {
        &self.shape
    }

    pub fn sig(&self) -> Signature {
        self.shape.sig()
    }

    pub fn plus(&self) -> &[Vec<u8>] {
        &self.plus
    }

    pub fn minus(&self) -> &[Vec<u8>] {
        &self.minus
    }

    pub fn boxes(&self) -> usize {
        self.shape.boxes()
    }

    /// t(i,j), or `None` outside the diagram.
    pub fn get(&self, c: Cell) -> Option<u8> {
        let m = self.sig().m;
        if c.i == 0 || c.j == 0 {
            return None;
        }
        if c.i <= m {
            self.plus[c.i - 1].get(c.j - 1).copied()
        } else {
            self.minus.get(c.j - 1)?.get(c.i - m - 1).copied()
        }
    }

    pub(crate) fn set(&mut self, c: Cell, v: u8) {
        let m = self.sig().m;
        if c.i <= m {
            self.plus[c.i - 1][c.j - 1] = v;
        } else {
            self.minus[c.j - 1][c.i - m - 1] = v;
        }
    }

    /// Copy with the entries at two cells exchanged.
    pub fn swapped(&self, x: Cell, y: Cell) -> HookTableau {
        let mut t = self.clone();
        let (vx, vy) = (
            self.get(x).expect("cell in diagram"),
            self.get(y).expect("cell in diagram"),
        );
        t.set(x, vy);
        t.set(y, vx);
        t
    }

    pub fn reading_word(&self) -> Vec<u8> {
        self.plus
            .iter()
            .chain(&self.minus)
            .flatten()
            .copied()
            .collect()
    }

    /// Entries column by column through the line; the word of e^T.
    pub fn column_word(&self) -> Vec<u8> {
        column_cells(&self.shape)
            .into_iter()
            .map(|c| self.get(c).unwrap())
            .collect()
    }

    /// Letter multiplicities, index k-1 for letter k.
    pub fn content(&self) -> Vec<usize> {
        word_content(self.sig(), &self.reading_word())
    }

    pub fn is_semistandard(&self) -> bool {
        is_semistandard(self)
    }
}

pub(crate) fn word_content(sig: Signature, word: &[u8]) -> Vec<usize> {
    let mut c = vec![0; sig.letters()];
    for &x in word {
        c[x as usize - 1] += 1;
    }
    c
}

impl PartialOrd for HookTableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HookTableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.reading_word().cmp(&other.reading_word()))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: HookShape,
    plus: Vec<Vec<u8>>,
    minus: Vec<Vec<u8>>,
}

impl Serialize for HookTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr {
            shape: self.shape.clone(),
            plus: self.plus.clone(),
            minus: self.minus.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HookTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TableauRepr::deserialize(d)?;
        HookTableau::new(r.shape, r.plus, r.minus).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for HookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: Vec<u8>| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut lines: Vec<String> = self.plus.iter().map(|r| row(r.clone())).collect();
        let depth = self.minus.first().map_or(0, Vec::len);
        if depth > 0 {
            lines.push("-".repeat(lines[self.sig().m - 1].len().max(1)));
            for d in 0..depth {
                lines.push(row(self
                    .minus
                    .iter()
                    .filter_map(|c| c.get(d).copied())
                    .collect()));
            }
        }
        if lines.iter().all(String::is_empty) {
            return write!(f, "∅");
        }
        write!(f, "{}", lines.join("\n"))
    }
}

/// Rows weakly increase, strictly after an entry > m; columns weakly increase,
/// strictly after an entry ≤ m; comparisons with missing boxes hold.
pub fn is_semistandard(t: &HookTableau) -> bool {
    let m = t.sig().m as u8;
    reading_cells(&t.shape).into_iter().all(|c| {
        let v = t.get(c).unwrap();
        let right_ok = t
            .get(Cell::new(c.i, c.j + 1))
            .is_none_or(|r| v < r || (v == r && v <= m));
        let down_ok = t
            .get(Cell::new(c.i + 1, c.j))
            .is_none_or(|d| v < d || (v == d && v > m));
        right_ok && down_ok
    })
}

pub fn reading_word(t: &HookTableau) -> Vec<u8> {
    t.reading_word()
}

/// S⁰_λ: entry i in row i ≤ m, entry m+j in below-line column j.
pub fn trivial_tableau(lambda: &HookShape) -> HookTableau {
    let m = lambda.sig().m;
    let plus = lambda
        .row_lengths()
        .iter()
        .enumerate()
        .map(|(r, &l)| vec![(r + 1) as u8; l])
        .collect();
    let minus = lambda
        .below_heights()
        .iter()
        .enumerate()
        .map(|(c, &h)| vec![(m + c + 1) as u8; h])
        .collect();
    HookTableau {
        shape: lambda.clone(),
        plus,
        minus,
    }
}

/// Box numbers of the column-by-column standard filling, as (cell, number) in column order.
pub fn standard_filling(lambda: &HookShape) -> Vec<(Cell, usize)> {
    column_cells(lambda).into_iter().zip(1..).collect()
}

/// Rows of S followed by rows of T; below-line columns of S stacked over those of T.
pub fn concat(s: &HookTableau, t: &HookTableau) -> Result<HookTableau> {
    let shape = s.shape.try_add(&t.shape)?;
    let join = |x: &[Vec<u8>], y: &[Vec<u8>]| {
        x.iter()
            .zip(y)
            .map(|(p, q)| [p.as_slice(), q].concat())
            .collect()
    };
    Ok(HookTableau {
        shape,
        plus: join(&s.plus, &t.plus),
        minus: join(&s.minus, &t.minus),
    })
}

type Neighbours = Vec<(Option<usize>, Option<usize>)>;

/// Neighbour indices (left, up) in reading order, used by the enumerator.
fn reading_neighbours(shape: &HookShape) -> (Vec<Cell>, Neighbours) {
    let cells = reading_cells(shape);
    let index: std::collections::HashMap<Cell, usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let nb = cells
        .iter()
        .map(|c| {
            let left = (c.j > 1).then(|| index[&Cell::new(c.i, c.j - 1)]);
            let up = (c.i > 1)
                .then(|| index.get(&Cell::new(c.i - 1, c.j)).copied())
                .flatten();
            (left, up)
        })
        .collect();
    (cells, nb)
}

/// All semistandard tableaux of shape λ, sorted by reading word.
pub fn enumerate_semistandard(lambda: &HookShape) -> Vec<HookTableau> {
    let sig = lambda.sig();
    let (m, top) = (sig.m as u8, sig.letters() as u8);
    let (_, nb) = reading_neighbours(lambda);
    let mut word = vec![0u8; nb.len()];
    let mut out = Vec::new();
    fn rec(
        k: usize,
        word: &mut Vec<u8>,
        nb: &[(Option<usize>, Option<usize>)],
        m: u8,
        top: u8,
        lambda: &HookShape,
        out: &mut Vec<HookTableau>,
    ) {
        if k == word.len() {
            out.push(HookTableau::from_reading_word(lambda.clone(), word).unwrap());
            return;
        }
        let (left, up) = nb[k];
        let mut lo = 1u8;
        if let Some(l) = left {
            let v = word[l];
            lo = lo.max(if v > m { v + 1 } else { v });
        }
        if let Some(u) = up {
            let v = word[u];
            lo = lo.max(if v <= m { v + 1 } else { v });
        }
        for v in lo..=top {
            word[k] = v;
            rec(k + 1, word, nb, m, top, lambda, out);
        }
    }
    rec(0, &mut word, &nb, m, top, lambda, &mut out);
    out
}

pub fn count_semistandard(lambda: &HookShape) -> usize {
    enumerate_semistandard(lambda).len()
}

/// Every filling of λ with entries in 1..=m+n, in lexicographic reading-word order.
pub fn all_fillings(lambda: &HookShape) -> impl Iterator<Item = HookTableau> + '_ {
    let n = lambda.boxes();
    let top = lambda.sig().letters() as u8;
    let mut word = vec![1u8; n];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let t = HookTableau::from_reading_word(lambda.clone(), &word).unwrap();
        done = true;
        for k in (0..n).rev() {
            if word[k] < top {
                word[k] += 1;
                word[k + 1..].iter_mut().for_each(|x| *x = 1);
                done = false;
                break;
            }
        }
        Some(t)
    })
}

/// A finite combination Σ x_i U_i of semistandard tableaux of one shape.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalCombination {
    terms: BTreeMap<HookTableau, Q>,
}

impl FormalCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(t: HookTableau) -> Result<Self> {
        let mut c = Self::new();
        c.add(t, Q::one())?;
        Ok(c)
    }

    /// Adds `coeff · t`, dropping the term if it cancels.
    pub fn add(&mut self, t: HookTableau, coeff: Q) -> Result<()> {
        if let Some((k, _)) = self.terms.iter().next() {
            if k.shape() != t.shape() {
                return Err(Error::ShapeMismatch(format!(
                    "{} vs {}",
                    k.shape(),
                    t.shape()
                )));
            }
        }
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        let entry = self.terms.entry(t).or_insert_with(Q::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HookTableau, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &HookTableau) -> Q {
        self.terms.get(t).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    tableau: HookTableau,
}

impl Serialize for FormalCombination {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(t, c)| TermRepr {
                coeff: format_rational(c),
                tableau: t.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormalCombination {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermRepr>::deserialize(d)?;
        let mut c = FormalCombination::new();
        for term in v {
            let q = parse_rational(&term.coeff).map_err(serde::de::Error::custom)?;
            c.add(term.tableau, q).map_err(serde::de::Error::custom)?;
        }
        Ok(c)
    }
}

impl fmt::Display for FormalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            writeln!(f, "{} ×", format_rational(c))?;
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}
