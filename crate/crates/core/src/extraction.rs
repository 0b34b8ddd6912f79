//! Trivial pairs, extractability, push, pull and the bijection onto the diamond cone.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hookshapes::{
    differences, enumerate_shapes, suffix_sums, sup_nonzero, HookShape, Signature,
};
use crate::tableaux::{enumerate_semistandard, Cell, HookTableau};

/// Shape (b, b') of a pair of trivial subtableaux (S⁺, S⁻); need not be covariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TrivialPair {
    pub b: Vec<usize>,
    pub b_prime: Vec<usize>,
}

impl TrivialPair {
    pub fn empty(sig: Signature) -> Self {
        TrivialPair {
            b: vec![0; sig.m],
            b_prime: vec![0; sig.odd_columns()],
        }
    }

    /// The pair covering the whole of λ.
    pub fn full(lambda: &HookShape) -> Self {
        TrivialPair {
            b: lambda.a().to_vec(),
            b_prime: lambda.a_prime().to_vec(),
        }
    }

    /// Builds the pair with row lengths B and column heights B'.
    pub fn from_lengths(rows: &[usize], below: &[usize]) -> Self {
        TrivialPair {
            b: differences(rows),
            b_prime: differences(below),
        }
    }

    /// B_i, the row lengths of S⁺.
    pub fn row_lengths(&self) -> Vec<usize> {
        suffix_sums(&self.b)
    }

    /// B'_j, the column heights of S⁻.
    pub fn below_heights(&self) -> Vec<usize> {
        suffix_sums(&self.b_prime)
    }

    pub fn is_empty(&self) -> bool {
        self.b.iter().chain(&self.b_prime).all(|&x| x == 0)
    }

    pub fn boxes(&self) -> usize {
        self.row_lengths().iter().sum::<usize>() + self.below_heights().iter().sum::<usize>()
    }

    /// Union of the two subtableaux: rowwise max of B, columnwise max of B'.
    pub fn join(&self, other: &TrivialPair) -> TrivialPair {
        let mx = |x: Vec<usize>, y: Vec<usize>| {
            x.iter().zip(&y).map(|(p, q)| *p.max(q)).collect::<Vec<_>>()
        };
        TrivialPair::from_lengths(
            &mx(self.row_lengths(), other.row_lengths()),
            &mx(self.below_heights(), other.below_heights()),
        )
    }

    /// Componentwise max on (b, b').
    pub fn componentwise_max(&self, other: &TrivialPair) -> TrivialPair {
        let mx = |x: &[usize], y: &[usize]| x.iter().zip(y).map(|(p, q)| *p.max(q)).collect();
        TrivialPair {
            b: mx(&self.b, &other.b),
            b_prime: mx(&self.b_prime, &other.b_prime),
        }
    }

    /// Componentwise order on (b, b').
    pub fn leq(&self, other: &TrivialPair) -> bool {
        self.b.iter().zip(&other.b).all(|(x, y)| x <= y)
            && self.b_prime.iter().zip(&other.b_prime).all(|(x, y)| x <= y)
    }

    /// Whether (b, b') is itself a covariant shape.
    pub fn is_covariant(&self) -> bool {
        self.b.last().copied().unwrap_or(0) >= sup_nonzero(&self.b_prime)
    }

    pub fn to_shape(&self, sig: Signature) -> Result<HookShape> {
        HookShape::new(sig, self.b.clone(), self.b_prime.clone())
    }

    fn fits(&self, lambda: &HookShape) -> Result<()> {
        let sig = lambda.sig();
        if self.b.len() != sig.m || self.b_prime.len() != sig.odd_columns() {
            return Err(Error::LengthMismatch(
                "pair does not match the signature".into(),
            ));
        }
        let ok = self.b.iter().zip(lambda.a()).all(|(x, y)| x <= y)
            && self
                .b_prime
                .iter()
                .zip(lambda.a_prime())
                .all(|(x, y)| x <= y);
        if !ok {
            return Err(Error::ShapeMismatch(format!(
                "pair {self:?} is not below {lambda}"
            )));
        }
        Ok(())
    }
}

/// All pairs (b, b') with b ≤ a, b' ≤ a'.
pub fn pairs_below(lambda: &HookShape) -> Vec<TrivialPair> {
    let bounds: Vec<usize> = lambda.a().iter().chain(lambda.a_prime()).copied().collect();
    let m = lambda.sig().m;
    let mut out = Vec::new();
    let mut cur = vec![0; bounds.len()];
    loop {
        out.push(TrivialPair {
            b: cur[..m].to_vec(),
            b_prime: cur[m..].to_vec(),
        });
        let Some(k) = (0..cur.len()).rev().find(|&k| cur[k] < bounds[k]) else {
            break;
        };
        cur[k] += 1;
        cur[k + 1..].iter_mut().for_each(|x| *x = 0);
    }
    out
}

/// The four extraction conditions, each with the missing-member convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractionConditions {
    pub e1: bool,
    pub e2: bool,
    pub e3: bool,
    pub e4: bool,
}

impl ExtractionConditions {
    pub fn all(&self) -> bool {
        self.e1 && self.e2 && self.e3 && self.e4
    }
}

/// Evaluates E1–E4 for `p` inside `t`; prefix requirements count towards E1 and E2.
pub fn extraction_conditions(t: &HookTableau, p: &TrivialPair) -> Result<ExtractionConditions> {
    let lambda = t.shape();
    p.fits(lambda)?;
    let m = lambda.sig().m;
    let mm = m as u8;
    let (rows, below) = (p.row_lengths(), p.below_heights());
    let (lam_rows, lam_below) = (lambda.row_lengths(), lambda.below_heights());
    let prefix_rows = rows
        .iter()
        .enumerate()
        .all(|(r, &len)| t.plus()[r][..len].iter().all(|&x| x as usize == r + 1));
    let prefix_cols = below
        .iter()
        .enumerate()
        .all(|(c, &h)| t.minus()[c][..h].iter().all(|&x| x as usize == m + c + 1));

    let mut e1 = prefix_rows;
    for i in 1..m {
        let width = (lam_rows[i - 1] - rows[i - 1]).min(lam_rows[i] - rows[i]);
        for j in 1..=width {
            let u = t.get(Cell::new(i, j + rows[i - 1])).unwrap();
            let w = t.get(Cell::new(i + 1, j + rows[i])).unwrap();
            e1 &= u < w || (u == w && u > mm);
        }
    }

    let mut e2 = prefix_cols;
    for j in 1..below.len() {
        let depth = (lam_below[j - 1] - below[j - 1]).min(lam_below[j] - below[j]);
        for i in 1..=depth {
            let u = t.get(Cell::new(m + i + below[j - 1], j)).unwrap();
            let w = t.get(Cell::new(m + i + below[j], j + 1)).unwrap();
            e2 &= u < w;
        }
    }

    let excess: Vec<usize> = lambda
        .a_prime()
        .iter()
        .zip(&p.b_prime)
        .map(|(x, y)| x - y)
        .collect();
    let e3 = lambda.a()[m - 1] - p.b[m - 1] >= sup_nonzero(&excess);

    let mut e4 = true;
    for j in 1..=below.len() {
        let up = Cell::new(m, j + rows[m - 1]);
        let down = Cell::new(m + 1 + below[j - 1], j);
        if let (Some(u), Some(w)) = (t.get(up), t.get(down)) {
            e4 &= u <= w;
        }
    }
    Ok(ExtractionConditions { e1, e2, e3, e4 })
}

pub fn is_extractable(t: &HookTableau, p: &TrivialPair) -> Result<bool> {
    Ok(extraction_conditions(t, p)?.all())
}

/// The filling left after removing the pair and shifting left / up.
/// Fails when λ − (b, b') is not covariant or the pair does not fit.
pub fn shifted_remainder(t: &HookTableau, p: &TrivialPair) -> Result<HookTableau> {
    let lambda = t.shape();
    p.fits(lambda)?;
    let a: Vec<usize> = lambda.a().iter().zip(&p.b).map(|(x, y)| x - y).collect();
    let ap: Vec<usize> = lambda
        .a_prime()
        .iter()
        .zip(&p.b_prime)
        .map(|(x, y)| x - y)
        .collect();
    let shape = HookShape::new(lambda.sig(), a, ap)?;
    let plus = t
        .plus()
        .iter()
        .zip(p.row_lengths())
        .map(|(r, b)| r[b..].to_vec())
        .collect();
    let minus = t
        .minus()
        .iter()
        .zip(p.below_heights())
        .map(|(c, b)| c[b..].to_vec())
        .collect();
    HookTableau::new(shape, plus, minus)
}

/// Largest extractable pair by greedy growth on (b, b').
pub fn largest_extractable_pair(t: &HookTableau) -> TrivialPair {
    let lambda = t.shape();
    let mut p = TrivialPair::empty(lambda.sig());
    let m = lambda.sig().m;
    'grow: loop {
        for k in 0..p.b.len() + p.b_prime.len() {
            let mut q = p.clone();
            if k < m {
                q.b[k] += 1;
            } else {
                q.b_prime[k - m] += 1;
            }
            if is_extractable(t, &q).unwrap_or(false) {
                p = q;
                continue 'grow;
            }
        }
        return p;
    }
}

/// All extractable pairs of `t`.
pub fn extractable_pairs(t: &HookTableau) -> Vec<TrivialPair> {
    pairs_below(t.shape())
        .into_iter()
        .filter(|p| is_extractable(t, p).unwrap_or(false))
        .collect()
}

/// Largest extractable pair as the union of all extractable pairs.
pub fn largest_pair_by_join(t: &HookTableau) -> TrivialPair {
    extractable_pairs(t)
        .iter()
        .fold(TrivialPair::empty(t.sig()), |acc, p| acc.join(p))
}

pub fn is_quasistandard(t: &HookTableau) -> bool {
    largest_extractable_pair(t).is_empty()
}

/// Removes the largest extractable pair.
pub fn push(t: &HookTableau) -> HookTableau {
    let p = largest_extractable_pair(t);
    shifted_remainder(t, &p).expect("an extractable pair leaves a covariant remainder")
}

/// Prepends to U the trivial pair of shape λ − µ, without checking the result.
pub fn pull_filling(u: &HookTableau, lambda: &HookShape) -> Result<HookTableau> {
    if !u.shape().leq(lambda)? {
        return Err(Error::NotComparable(format!(
            "{} is not below {lambda}",
            u.shape()
        )));
    }
    let m = lambda.sig().m;
    let plus = u
        .plus()
        .iter()
        .zip(lambda.row_lengths())
        .enumerate()
        .map(|(r, (row, len))| {
            let mut v = vec![(r + 1) as u8; len - row.len()];
            v.extend_from_slice(row);
            v
        })
        .collect();
    let minus = u
        .minus()
        .iter()
        .zip(lambda.below_heights())
        .enumerate()
        .map(|(c, (col, h))| {
            let mut v = vec![(m + c + 1) as u8; h - col.len()];
            v.extend_from_slice(col);
            v
        })
        .collect();
    HookTableau::new(lambda.clone(), plus, minus)
}

/// Inverse of push: U quasistandard of shape µ ≤ λ.
/// Fails with `NotSemistandard` when the prepended filling is not semistandard.
pub fn pull(u: &HookTableau, lambda: &HookShape) -> Result<HookTableau> {
    if !u.is_semistandard() || !is_quasistandard(u) {
        return Err(Error::NotQuasistandard);
    }
    let t = pull_filling(u, lambda)?;
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    Ok(t)
}

/// Largest covariant ν with T = concat(S⁰_ν, U), returned as (ν, U).
pub fn strip_trivial(t: &HookTableau) -> (HookShape, HookTableau) {
    let best = extractable_pairs(t)
        .into_iter()
        .filter(TrivialPair::is_covariant)
        .fold(TrivialPair::empty(t.sig()), |acc, p| acc.join(&p));
    let nu = best
        .to_shape(t.sig())
        .expect("join of covariant pairs is covariant");
    let u = shifted_remainder(t, &best).expect("extractable pair");
    (nu, u)
}

/// Quasistandard tableaux of shape µ.
pub fn enumerate_quasistandard(mu: &HookShape) -> Vec<HookTableau> {
    enumerate_semistandard(mu)
        .into_iter()
        .filter(is_quasistandard)
        .collect()
}

/// Covariant shapes µ ≤ λ in canonical order.
pub fn shapes_below(lambda: &HookShape) -> Vec<HookShape> {
    enumerate_shapes(lambda.sig(), lambda.boxes())
        .into_iter()
        .filter(|mu| mu.leq(lambda).unwrap_or(false))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeCount {
    pub shape: HookShape,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub shape: HookShape,
    pub ss_count: usize,
    pub qs_counts: Vec<ShapeCount>,
    pub pass: bool,
    /// Quasistandard tableaux below λ that no T ∈ SS^λ pushes to.
    #[serde(default)]
    pub unreached: Vec<HookTableau>,
}

pub fn verify_bijection(lambda: &HookShape) -> BijectionReport {
    let ss = enumerate_semistandard(lambda);
    let images: Vec<HookTableau> = ss.par_iter().map(push).collect();
    let below = shapes_below(lambda);
    let qs: Vec<Vec<HookTableau>> = below.par_iter().map(enumerate_quasistandard).collect();

    let image_set: BTreeSet<&HookTableau> = images.iter().collect();
    let injective = image_set.len() == images.len();
    let lands = images.iter().all(|u| {
        u.shape().leq(lambda).unwrap_or(false) && u.is_semistandard() && is_quasistandard(u)
    });
    let qs_total: usize = qs.iter().map(Vec::len).sum();
    let unreached: Vec<HookTableau> = qs
        .iter()
        .flatten()
        .filter(|u| !image_set.contains(u))
        .cloned()
        .collect();
    let round_trip = ss
        .iter()
        .zip(&images)
        .all(|(t, u)| pull(u, lambda).as_ref() == Ok(t));

    let mut counts: BTreeMap<HookShape, usize> = BTreeMap::new();
    for (mu, v) in below.iter().zip(&qs) {
        counts.insert(mu.clone(), v.len());
    }
    BijectionReport {
        shape: lambda.clone(),
        ss_count: ss.len(),
        qs_counts: counts
            .into_iter()
            .map(|(shape, count)| ShapeCount { shape, count })
            .collect(),
        pass: injective && lands && round_trip && ss.len() == qs_total && unreached.is_empty(),
        unreached,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::trivial_tableau;

    fn sig(m: usize, n: usize) -> Signature {
        Signature::new(m, n).unwrap()
    }

    fn shape(m: usize, n: usize, a: &[usize], ap: &[usize]) -> HookShape {
        HookShape::new(sig(m, n), a.to_vec(), ap.to_vec()).unwrap()
    }

    fn sl23_example() -> HookTableau {
        HookTableau::new(
            shape(2, 3, &[1, 3], &[2, 3]),
            vec![vec![1, 1, 2, 2], vec![2, 3, 4]],
            vec![vec![3, 3, 4, 4, 5], vec![4, 5, 5]],
        )
        .unwrap()
    }

    #[test]
    fn sl23_pair_is_extractable() {
        let t = sl23_example();
        assert!(t.is_semistandard());
        let p = TrivialPair {
            b: vec![1, 1],
            b_prime: vec![1, 1],
        };
        assert!(is_extractable(&t, &p).unwrap());
        let big = largest_extractable_pair(&t);
        assert!(p.leq(&big));
        assert_eq!(big, largest_pair_by_join(&t));
    }

    #[test]
    fn e3_failure() {
        let t = HookTableau::new(shape(1, 2, &[1], &[1]), vec![vec![1]], vec![vec![3]]).unwrap();
        let p = TrivialPair {
            b: vec![1],
            b_prime: vec![0],
        };
        let c = extraction_conditions(&t, &p).unwrap();
        assert!(!c.e3);
        assert!(is_quasistandard(&t));
        let too_big = TrivialPair {
            b: vec![2],
            b_prime: vec![0],
        };
        assert!(matches!(
            is_extractable(&t, &too_big),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn classical_push_example() {
        let t = HookTableau::new(
            shape(4, 0, &[2, 2, 1, 0], &[]),
            vec![vec![1, 1, 2, 2, 3], vec![2, 3, 4], vec![4], vec![]],
            vec![],
        )
        .unwrap();
        let u = push(&t);
        assert_eq!(u.plus(), &[vec![2, 2, 3], vec![3, 4], vec![4], vec![]]);
        assert!(is_quasistandard(&u));
        assert_eq!(u.shape().a(), &[1, 1, 1, 0]);
        assert_eq!(pull(&u, t.shape()).unwrap(), t);
    }

    #[test]
    fn trivial_tableau_pushes_to_empty() {
        let l = shape(2, 3, &[1, 2], &[2, 1]);
        let s = trivial_tableau(&l);
        assert_eq!(largest_extractable_pair(&s), TrivialPair::full(&l));
        assert!(push(&s).shape().is_zero());
        assert_eq!(strip_trivial(&s), (l.clone(), HookTableau::empty(l.sig())));
        assert_eq!(pull(&HookTableau::empty(l.sig()), &l).unwrap(), s);
    }

    #[test]
    fn pull_small_example() {
        let u = HookTableau::new(shape(1, 2, &[1], &[0]), vec![vec![2]], vec![vec![]]).unwrap();
        let l = shape(1, 2, &[2], &[1]);
        let t = pull(&u, &l).unwrap();
        assert_eq!((t.plus(), t.minus()), (&[vec![1, 2]][..], &[vec![2]][..]));
        assert_eq!(push(&t), u);
    }

    #[test]
    fn strip_small_example() {
        let t = HookTableau::new(shape(1, 1, &[3], &[]), vec![vec![1, 1, 2]], vec![]).unwrap();
        let (nu, u) = strip_trivial(&t);
        assert_eq!(nu, shape(1, 1, &[2], &[]));
        assert_eq!(u.plus(), &[vec![2]]);
    }

    #[test]
    fn bijection_report_example() {
        let r = verify_bijection(&shape(1, 2, &[2], &[1]));
        assert_eq!(r.ss_count, 8);
        let counts: Vec<(Vec<usize>, Vec<usize>, usize)> = r
            .qs_counts
            .iter()
            .map(|c| (c.shape.a().to_vec(), c.shape.a_prime().to_vec(), c.count))
            .collect();
        assert_eq!(
            counts,
            vec![
                (vec![0], vec![0], 1),
                (vec![1], vec![0], 2),
                (vec![1], vec![1], 3),
                (vec![2], vec![0], 1),
                (vec![2], vec![1], 1)
            ]
        );
        assert!(r.pass);
        assert!(verify_bijection(&HookShape::zero(sig(2, 2))).pass);
    }

    #[test]
    fn pairs_below_counts() {
        let l = shape(2, 2, &[1, 2], &[1]);
        assert_eq!(pairs_below(&l).len(), 2 * 3 * 2);
    }
}
