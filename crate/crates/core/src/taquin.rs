//! Skew hook tableaux and the super jeu de taquin.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extraction::TrivialPair;
use crate::hookshapes::HookShape;
use crate::tableaux::{in_diagram, Cell, HookTableau};

pub type Corner = Cell;

/// A filling of λ minus an inner trivial-pair region; inner boxes hold `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    outer: HookShape,
    inner: TrivialPair,
    plus: Vec<Vec<Option<u8>>>,
    minus: Vec<Vec<Option<u8>>>,
}

/// One step of a slide: the tableau with the star's box left empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub tableau: SkewTableau,
    pub star: Cell,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideTrace {
    pub frames: Vec<Frame>,
    pub result: SkewTableau,
}

impl SkewTableau {
    pub fn new(
        outer: HookShape,
        inner: TrivialPair,
        plus: Vec<Vec<Option<u8>>>,
        minus: Vec<Vec<Option<u8>>>,
    ) -> Result<Self> {
        let s = SkewTableau {
            outer,
            inner,
            plus,
            minus,
        };
        s.validate(None)?;
        Ok(s)
    }

    /// T with the boxes of the trivial pair `p` emptied.
    pub fn from_pair(t: &HookTableau, p: &TrivialPair) -> Result<Self> {
        let wrap = |v: &[Vec<u8>], cut: Vec<usize>| -> Vec<Vec<Option<u8>>> {
            v.iter()
                .zip(cut)
                .map(|(r, b)| {
                    r.iter()
                        .enumerate()
                        .map(|(k, &x)| (k >= b).then_some(x))
                        .collect()
                })
                .collect()
        };
        let plus = wrap(t.plus(), p.row_lengths());
        let minus = wrap(t.minus(), p.below_heights());
        SkewTableau::new(t.shape().clone(), p.clone(), plus, minus)
    }

    /// A straight tableau viewed as a skew tableau with empty inner region.
    pub fn from_straight(t: &HookTableau) -> Self {
        SkewTableau::from_pair(t, &TrivialPair::empty(t.sig())).expect("empty pair always fits")
    }

    fn validate(&self, hole: Option<Cell>) -> Result<()> {
        let sig = self.outer.sig();
        let (rows, below) = (self.outer.row_lengths(), self.outer.below_heights());
        if self.inner.b.len() != sig.m || self.inner.b_prime.len() != sig.odd_columns() {
            return Err(Error::LengthMismatch(
                "inner pair does not match the signature".into(),
            ));
        }
        let (irows, ibelow) = (self.inner.row_lengths(), self.inner.below_heights());
        if irows.iter().zip(&rows).any(|(b, a)| b > a)
            || ibelow.iter().zip(&below).any(|(b, a)| b > a)
        {
            return Err(Error::ShapeMismatch(
                "inner region is not contained in the outer shape".into(),
            ));
        }
        let plus_lens: Vec<usize> = self.plus.iter().map(Vec::len).collect();
        let minus_lens: Vec<usize> = self.minus.iter().map(Vec::len).collect();
        if plus_lens != rows || minus_lens != below {
            return Err(Error::ShapeMismatch(format!(
                "entries do not fit {}",
                self.outer
            )));
        }
        let max = sig.letters();
        for c in self.cells() {
            let v = self.entry(c);
            let empty_expected = self.in_inner(c) || Some(c) == hole;
            match v {
                None if !empty_expected => {
                    return Err(Error::ShapeMismatch(format!(
                        "box {c} outside the inner region is empty"
                    )))
                }
                Some(_) if empty_expected => {
                    return Err(Error::ShapeMismatch(format!(
                        "box {c} of the inner region is filled"
                    )))
                }
                Some(x) if x == 0 || x as usize > max => {
                    return Err(Error::EntryOutOfRange {
                        entry: x as usize,
                        max,
                    })
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> &HookShape {
        &self.outer
    }

    pub fn inner(&self) -> &TrivialPair {
        &self.inner
    }

    pub fn plus(&self) -> &[Vec<Option<u8>>] {
        &self.plus
    }

    pub fn minus(&self) -> &[Vec<Option<u8>>] {
        &self.minus
    }

    fn m(&self) -> usize {
        self.outer.sig().m
    }

    /// All boxes of the outer diagram, in reading order.
    pub fn cells(&self) -> Vec<Cell> {
        crate::tableaux::reading_cells(&self.outer)
    }

    fn in_outer(&self, c: Cell) -> bool {
        in_diagram(
            self.m(),
            &self.outer.row_lengths(),
            &self.outer.below_heights(),
            c,
        )
    }

    fn in_inner(&self, c: Cell) -> bool {
        in_diagram(
            self.m(),
            &self.inner.row_lengths(),
            &self.inner.below_heights(),
            c,
        )
    }

    /// Entry at an outer box; `None` for empty boxes and outside the diagram.
    pub fn entry(&self, c: Cell) -> Option<u8> {
        let m = self.m();
        if c.i == 0 || c.j == 0 {
            return None;
        }
        if c.i <= m {
            self.plus.get(c.i - 1)?.get(c.j - 1).copied().flatten()
        } else {
            self.minus.get(c.j - 1)?.get(c.i - m - 1).copied().flatten()
        }
    }

    fn set(&mut self, c: Cell, v: Option<u8>) {
        let m = self.m();
        if c.i <= m {
            self.plus[c.i - 1][c.j - 1] = v;
        } else {
            self.minus[c.j - 1][c.i - m - 1] = v;
        }
    }

    pub fn boxes(&self) -> usize {
        self.outer.boxes() - self.inner.boxes()
    }

    /// Row/column conditions on all pairs of adjacent filled boxes.
    pub fn is_semistandard(&self) -> bool {
        let m = self.m() as u8;
        self.cells().into_iter().all(|c| {
            let Some(v) = self.entry(c) else { return true };
            let right = self
                .entry(Cell::new(c.i, c.j + 1))
                .is_none_or(|r| v < r || (v == r && v <= m));
            let down = self
                .entry(Cell::new(c.i + 1, c.j))
                .is_none_or(|d| v < d || (v == d && v > m));
            right && down
        })
    }

    /// Outer corners of the inner region, ordered: the upper part by increasing
    /// column, then the lower part by increasing row.
    pub fn outer_corners(&self) -> Vec<Corner> {
        outer_corners_of(self.m(), &self.inner)
    }

    pub fn greatest_outer_corner(&self) -> Option<Corner> {
        self.outer_corners().last().copied()
    }

    /// The straight tableau, when the inner region is empty.
    pub fn to_straight(&self) -> Option<HookTableau> {
        if !self.inner.is_empty() {
            return None;
        }
        let unwrap = |v: &[Vec<Option<u8>>]| {
            v.iter()
                .map(|r| r.iter().map(|x| x.unwrap()).collect())
                .collect()
        };
        HookTableau::new(self.outer.clone(), unwrap(&self.plus), unwrap(&self.minus)).ok()
    }

    /// One slide from the outer corner `c`, recording every position of the star.
    pub fn sjdt_trace(&self, c: Corner) -> Result<SlideTrace> {
        if !self.outer_corners().contains(&c) {
            return Err(Error::NotOuterCorner(c.i, c.j));
        }
        let m = self.m();
        let mut rows = self.inner.row_lengths();
        let mut below = self.inner.below_heights();
        if c.i <= m {
            rows[c.i - 1] -= 1;
        } else {
            below[c.j - 1] -= 1;
        }
        let mut cur = SkewTableau {
            inner: TrivialPair::from_lengths(&rows, &below),
            ..self.clone()
        };
        let mut star = c;
        let mut frames = Vec::new();
        loop {
            frames.push(Frame {
                tableau: cur.clone(),
                star,
            });
            let right = Cell::new(star.i, star.j + 1);
            let down = Cell::new(star.i + 1, star.j);
            let (r, d) = (cur.entry(right), cur.entry(down));
            let step = match (r, d) {
                (None, None) => None,
                (Some(_), None) => Some(right),
                (None, Some(_)) => Some(down),
                (Some(r), Some(d)) if star.i > m => Some(if d < r { down } else { right }),
                (Some(r), Some(d)) => Some(if r < d || (r == d && r as usize > m) {
                    right
                } else {
                    down
                }),
            };
            match step {
                Some(next) => {
                    let v = cur.entry(next);
                    cur.set(star, v);
                    cur.set(next, None);
                    star = next;
                }
                None => {
                    if cur.in_outer(right) || cur.in_outer(down) {
                        return Err(Error::SlideBlocked(format!(
                            "star at {star} is stopped by the inner region but is not removable"
                        )));
                    }
                    let mut orows = cur.outer.row_lengths();
                    let mut obelow = cur.outer.below_heights();
                    if star.i <= m {
                        orows[star.i - 1] -= 1;
                        cur.plus[star.i - 1].pop();
                    } else {
                        obelow[star.j - 1] -= 1;
                        cur.minus[star.j - 1].pop();
                    }
                    cur.outer = HookShape::from_lengths(cur.outer.sig(), &orows, &obelow)?;
                    return Ok(SlideTrace {
                        frames,
                        result: cur,
                    });
                }
            }
        }
    }

    pub fn sjdt_slide(&self, c: Corner) -> Result<SkewTableau> {
        Ok(self.sjdt_trace(c)?.result)
    }

    /// Slides from the greatest outer corner until the inner region is empty.
    pub fn maxjdt(&self) -> Result<HookTableau> {
        Ok(self.maxjdt_trace()?.1)
    }

    /// Every slide of [`SkewTableau::maxjdt`] together with the final tableau.
    pub fn maxjdt_trace(&self) -> Result<(Vec<SlideTrace>, HookTableau)> {
        let mut cur = self.clone();
        let mut traces = Vec::new();
        while let Some(c) = cur.greatest_outer_corner() {
            let tr = cur.sjdt_trace(c)?;
            cur = tr.result.clone();
            traces.push(tr);
        }
        let t = cur
            .to_straight()
            .ok_or_else(|| Error::SlideBlocked("unfilled boxes remain".into()))?;
        Ok((traces, t))
    }

    /// Predicted greatest outer corner after sliding from the greatest corner `c`.
    pub fn corner_successor_check(&self, c: Corner) -> Result<Option<Corner>> {
        if self.greatest_outer_corner() != Some(c) {
            return Err(Error::NotOuterCorner(c.i, c.j));
        }
        Ok(predict_successor(self.m(), &self.outer_corners()))
    }
}

fn outer_corners_of(m: usize, inner: &TrivialPair) -> Vec<Corner> {
    let rows = inner.row_lengths();
    let below = inner.below_heights();
    let mut upper: Vec<Corner> = (0..rows.len())
        .filter(|&r| rows[r] > 0 && rows.get(r + 1).is_none_or(|&next| next < rows[r]))
        .map(|r| Cell::new(r + 1, rows[r]))
        .collect();
    upper.sort_by_key(|c| c.j);
    let mut lower: Vec<Corner> = (0..below.len())
        .filter(|&k| below[k] > 0 && below.get(k + 1).is_none_or(|&next| next < below[k]))
        .map(|k| Cell::new(m + below[k], k + 1))
        .collect();
    lower.sort_by_key(|c| c.i);
    upper.extend(lower);
    upper
}

/// The case table for the next greatest corner, given Out = {c_1 < .. < c_p < c'_1 < .. < c'_q}.
fn predict_successor(m: usize, out: &[Corner]) -> Option<Corner> {
    let (upper, lower): (Vec<Corner>, Vec<Corner>) = out.iter().partition(|c| c.i <= m);
    if let Some(&c) = lower.last() {
        let q = lower.len();
        if c.j > 1 {
            return Some(Cell::new(c.i, c.j - 1));
        }
        let prev = if q >= 2 { Some(lower[q - 2]) } else { None };
        let prev_row = prev.map_or(0, |p| p.i);
        if prev_row.max(m) < c.i - 1 {
            return Some(Cell::new(c.i - 1, 1));
        }
        if m < prev_row && prev_row == c.i - 1 {
            return prev;
        }
        // c.i - 1 == m: the lower part is exhausted; the greatest upper corner follows.
        return upper.last().copied();
    }
    let &c = upper.last()?;
    if c == Cell::new(1, 1) {
        return None;
    }
    if c.i > 1 {
        return Some(Cell::new(c.i - 1, c.j));
    }
    let p = upper.len();
    let prev_col = if p >= 2 { upper[p - 2].j } else { 0 };
    if prev_col < c.j - 1 {
        Some(Cell::new(1, c.j - 1))
    } else {
        Some(upper[p - 2])
    }
}

pub fn outer_corners(s: &SkewTableau) -> Vec<Corner> {
    s.outer_corners()
}

pub fn greatest_outer_corner(s: &SkewTableau) -> Option<Corner> {
    s.greatest_outer_corner()
}

pub fn sjdt_slide(s: &SkewTableau, c: Corner) -> Result<SkewTableau> {
    s.sjdt_slide(c)
}

pub fn maxjdt(s: &SkewTableau) -> Result<HookTableau> {
    s.maxjdt()
}

pub fn corner_successor_check(s: &SkewTableau, c: Corner) -> Result<Option<Corner>> {
    s.corner_successor_check(c)
}

#[derive(Serialize, Deserialize)]
struct SkewRepr {
    outer: HookShape,
    inner: TrivialPair,
    plus: Vec<Vec<Option<u8>>>,
    minus: Vec<Vec<Option<u8>>>,
}

impl SkewRepr {
    fn from_skew(s: &SkewTableau) -> Self {
        SkewRepr {
            outer: s.outer.clone(),
            inner: s.inner.clone(),
            plus: s.plus.clone(),
            minus: s.minus.clone(),
        }
    }

    fn into_skew(self, hole: Option<Cell>) -> Result<SkewTableau> {
        let s = SkewTableau {
            outer: self.outer,
            inner: self.inner,
            plus: self.plus,
            minus: self.minus,
        };
        s.validate(hole)?;
        Ok(s)
    }
}

impl Serialize for SkewTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SkewRepr::from_skew(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SkewRepr::deserialize(d)?
            .into_skew(None)
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct FrameRepr {
    star: Cell,
    tableau: SkewRepr,
}

impl Serialize for Frame {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FrameRepr {
            star: self.star,
            tableau: SkewRepr::from_skew(&self.tableau),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Frame {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FrameRepr::deserialize(d)?;
        let tableau = r
            .tableau
            .into_skew(Some(r.star))
            .map_err(serde::de::Error::custom)?;
        Ok(Frame {
            tableau,
            star: r.star,
        })
    }
}

impl SkewTableau {
    /// Text rendering with `·` for inner boxes and `*` at `star`.
    pub fn render(&self, star: Option<Cell>) -> String {
        let cell = |c: Cell| match self.entry(c) {
            Some(v) => v.to_string(),
            None if Some(c) == star => "*".to_string(),
            None => "·".to_string(),
        };
        let m = self.m();
        let mut lines: Vec<String> = self
            .outer
            .row_lengths()
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                (1..=len)
                    .map(|j| cell(Cell::new(r + 1, j)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let below = self.outer.below_heights();
        let depth = below.first().copied().unwrap_or(0);
        if depth > 0 {
            lines.push("-".repeat(lines[m - 1].len().max(1)));
        }
        for d in 1..=depth {
            let cols = below.iter().take_while(|&&h| h >= d).count();
            lines.push(
                (1..=cols)
                    .map(|j| cell(Cell::new(m + d, j)))
                    .collect::<Vec<_>>()
                    .join(" "),
            );
        }
        lines.join("\n")
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hookshapes::Signature;

    fn sig23() -> Signature {
        Signature::new(2, 3).unwrap()
    }

    /// Builds a skew tableau from rows (0 marks an empty box) and below-line columns.
    fn skew(rows: &[&[u8]], cols: &[&[u8]], inner: TrivialPair) -> SkewTableau {
        let wrap = |v: &[&[u8]]| {
            v.iter()
                .map(|r| r.iter().map(|&x| (x > 0).then_some(x)).collect())
                .collect()
        };
        let outer = HookShape::from_lengths(
            sig23(),
            &rows.iter().map(|r| r.len()).collect::<Vec<_>>(),
            &cols.iter().map(|c| c.len()).collect::<Vec<_>>(),
        )
        .unwrap();
        SkewTableau::new(outer, inner, wrap(rows), wrap(cols)).unwrap()
    }

    #[test]
    fn out_ordering_example() {
        let inner = TrivialPair::from_lengths(&[2, 1], &[2, 1]);
        let s = skew(
            &[&[0, 0, 1, 1], &[0, 2, 2]],
            &[&[0, 0, 3, 3, 3], &[0, 4, 4]],
            inner,
        );
        let expected = vec![
            Cell::new(2, 1),
            Cell::new(1, 2),
            Cell::new(3, 2),
            Cell::new(4, 1),
        ];
        assert_eq!(s.outer_corners(), expected);
        assert_eq!(s.greatest_outer_corner(), Some(Cell::new(4, 1)));
    }

    #[test]
    fn first_trace() {
        let inner = TrivialPair::from_lengths(&[1, 1], &[0, 0]);
        let s = skew(&[&[0, 1, 2], &[0, 2]], &[&[3, 3, 4], &[4, 5]], inner);
        let tr = s.sjdt_trace(Cell::new(2, 1)).unwrap();
        let stars: Vec<Cell> = tr.frames.iter().map(|f| f.star).collect();
        assert_eq!(
            stars,
            vec![
                Cell::new(2, 1),
                Cell::new(2, 2),
                Cell::new(3, 2),
                Cell::new(4, 2)
            ]
        );
        let r = &tr.result;
        assert_eq!(
            r.plus(),
            &[vec![None, Some(1), Some(2)], vec![Some(2), Some(4)]]
        );
        assert_eq!(r.minus(), &[vec![Some(3), Some(3), Some(4)], vec![Some(5)]]);
        assert!(r.is_semistandard());
    }

    #[test]
    fn second_trace() {
        let inner = TrivialPair::from_lengths(&[1, 1], &[0, 0]);
        let s = skew(&[&[0, 1, 2], &[0, 4]], &[&[3, 4, 5], &[5, 5]], inner);
        let tr = s.sjdt_trace(Cell::new(2, 1)).unwrap();
        let stars: Vec<Cell> = tr.frames.iter().map(|f| f.star).collect();
        assert_eq!(
            stars,
            vec![
                Cell::new(2, 1),
                Cell::new(3, 1),
                Cell::new(4, 1),
                Cell::new(4, 2)
            ]
        );
        assert_eq!(
            tr.result.plus(),
            &[vec![None, Some(1), Some(2)], vec![Some(3), Some(4)]]
        );
        assert_eq!(
            tr.result.minus(),
            &[vec![Some(4), Some(5), Some(5)], vec![Some(5)]]
        );
    }

    #[test]
    fn not_a_corner() {
        let inner = TrivialPair::from_lengths(&[1, 1], &[0, 0]);
        let s = skew(&[&[0, 1, 2], &[0, 4]], &[&[3, 4, 5], &[5, 5]], inner);
        assert_eq!(
            s.sjdt_slide(Cell::new(1, 1)),
            Err(Error::NotOuterCorner(1, 1))
        );
    }

    #[test]
    fn single_box_is_deleted() {
        let sig = Signature::new(2, 1).unwrap();
        let outer = HookShape::new(sig, vec![1, 0], vec![]).unwrap();
        let s = SkewTableau::new(
            outer,
            TrivialPair {
                b: vec![1, 0],
                b_prime: vec![],
            },
            vec![vec![None], vec![]],
            vec![],
        )
        .unwrap();
        assert_eq!(s.outer_corners(), vec![Cell::new(1, 1)]);
        let r = s.sjdt_slide(Cell::new(1, 1)).unwrap();
        assert_eq!(r.boxes(), 0);
        assert!(r.to_straight().unwrap().shape().is_zero());
        assert_eq!(s.corner_successor_check(Cell::new(1, 1)).unwrap(), None);
    }

    #[test]
    fn frame_json_round_trip() {
        let inner = TrivialPair::from_lengths(&[1, 1], &[0, 0]);
        let s = skew(&[&[0, 1, 2], &[0, 2]], &[&[3, 3, 4], &[4, 5]], inner);
        for f in s.sjdt_trace(Cell::new(2, 1)).unwrap().frames {
            let j = serde_json::to_string(&f).unwrap();
            assert_eq!(serde_json::from_str::<Frame>(&j).unwrap(), f);
        }
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<SkewTableau>(&j).unwrap(), s);
    }
}
