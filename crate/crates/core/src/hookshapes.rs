//! Hook shapes for sl(m,n), their order, weights and typicality.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub m: usize,
    pub n: usize,
}

impl Signature {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSignature { m, n });
        }
        Ok(Signature { m, n })
    }

    /// Number of letters 1..=m+n.
    pub fn letters(&self) -> usize {
        self.m + self.n
    }

    /// Letters 1..=m are even, m+1..=m+n odd.
    pub fn is_odd(&self, letter: u8) -> bool {
        letter as usize > self.m
    }

    /// Length of the a' vector.
    pub fn odd_columns(&self) -> usize {
        self.n.saturating_sub(1)
    }

    fn check_same(&self, other: &Signature) -> Result<()> {
        if self != other {
            return Err(Error::SignatureMismatch(self.m, self.n, other.m, other.n));
        }
        Ok(())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sl({},{})", self.m, self.n)
    }
}

/// sup{j : v_j > 0} with 1-based j, and 0 for the empty set.
pub(crate) fn sup_nonzero(v: &[usize]) -> usize {
    v.iter().rposition(|&x| x > 0).map_or(0, |p| p + 1)
}

/// Suffix sums: out[i] = v[i] + ... + v[last].
pub(crate) fn suffix_sums(v: &[usize]) -> Vec<usize> {
    let mut out = vec![0; v.len()];
    let mut acc = 0;
    for i in (0..v.len()).rev() {
        acc += v[i];
        out[i] = acc;
    }
    out
}

/// Inverse of [`suffix_sums`] for weakly decreasing input.
pub(crate) fn differences(lengths: &[usize]) -> Vec<usize> {
    (0..lengths.len())
        .map(|i| lengths[i] - lengths.get(i + 1).copied().unwrap_or(0))
        .collect()
}

/// A covariant hook shape λ = (a, a').
///
/// `a[i-1]` counts the columns of height exactly i in the upper part,
/// `a_prime[j-1]` the below-line columns of height exactly j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ShapeRepr", into = "ShapeRepr")]
pub struct HookShape {
    sig: Signature,
    a: Vec<usize>,
    a_prime: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ShapeRepr {
    m: usize,
    n: usize,
    a: Vec<usize>,
    a_prime: Vec<usize>,
}

impl TryFrom<ShapeRepr> for HookShape {
    type Error = Error;
    fn try_from(r: ShapeRepr) -> Result<Self> {
        HookShape::new(Signature::new(r.m, r.n)?, r.a, r.a_prime)
    }
}

impl From<HookShape> for ShapeRepr {
    fn from(s: HookShape) -> Self {
        ShapeRepr {
            m: s.sig.m,
            n: s.sig.n,
            a: s.a,
            a_prime: s.a_prime,
        }
    }
}

impl HookShape {
    /// Validates lengths and the covariance condition a_m >= sup{j : a'_j != 0}.
    pub fn new(sig: Signature, a: Vec<usize>, a_prime: Vec<usize>) -> Result<Self> {
        if a.len() != sig.m {
            return Err(Error::LengthMismatch(format!(
                "a has {} entries, expected {}",
                a.len(),
                sig.m
            )));
        }
        if a_prime.len() != sig.odd_columns() {
            return Err(Error::LengthMismatch(format!(
                "a_prime has {} entries, expected {}",
                a_prime.len(),
                sig.odd_columns()
            )));
        }
        let j0 = sup_nonzero(&a_prime);
        if a[sig.m - 1] < j0 {
            return Err(Error::CovarianceViolation {
                a_m: a[sig.m - 1],
                j0,
            });
        }
        Ok(HookShape { sig, a, a_prime })
    }

    pub fn zero(sig: Signature) -> Self {
        HookShape {
            sig,
            a: vec![0; sig.m],
            a_prime: vec![0; sig.odd_columns()],
        }
    }

    /// Builds a shape from row lengths A (length m) and below-line column heights A' (length n-1).
    pub fn from_lengths(sig: Signature, rows: &[usize], below: &[usize]) -> Result<Self> {
        let decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        if rows.len() != sig.m || below.len() != sig.odd_columns() {
            return Err(Error::LengthMismatch("row or column length vector".into()));
        }
        if !decreasing(rows) || !decreasing(below) {
            return Err(Error::ShapeMismatch(
                "lengths are not weakly decreasing".into(),
            ));
        }
        HookShape::new(sig, differences(rows), differences(below))
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn a_prime(&self) -> &[usize] {
        &self.a_prime
    }

    /// A_i for i = 1..=m.
    pub fn row_lengths(&self) -> Vec<usize> {
        suffix_sums(&self.a)
    }

    /// A'_j for j = 1..=n-1.
    pub fn below_heights(&self) -> Vec<usize> {
        suffix_sums(&self.a_prime)
    }

    /// j0 = sup{j : a'_j > 0}.
    pub fn j0(&self) -> usize {
        sup_nonzero(&self.a_prime)
    }

    /// Total number of boxes N.
    pub fn boxes(&self) -> usize {
        self.row_lengths().iter().sum::<usize>() + self.below_heights().iter().sum::<usize>()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.a_prime).all(|&x| x == 0)
    }

    /// Full column heights c_k, k = 1..=A_1, counted through the line.
    pub fn column_heights(&self) -> Vec<usize> {
        let rows = self.row_lengths();
        let below = self.below_heights();
        let width = rows.first().copied().unwrap_or(0);
        (1..=width)
            .map(|k| {
                rows.iter().filter(|&&r| r >= k).count() + below.get(k - 1).copied().unwrap_or(0)
            })
            .collect()
    }

    /// Componentwise order on (a, a').
    pub fn leq(&self, other: &HookShape) -> Result<bool> {
        self.sig.check_same(&other.sig)?;
        Ok(self.a.iter().zip(&other.a).all(|(x, y)| x <= y)
            && self.a_prime.iter().zip(&other.a_prime).all(|(x, y)| x <= y))
    }

    /// Componentwise sum; always covariant.
    pub fn try_add(&self, other: &HookShape) -> Result<HookShape> {
        self.sig.check_same(&other.sig)?;
        let a = self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect();
        let ap = self
            .a_prime
            .iter()
            .zip(&other.a_prime)
            .map(|(x, y)| x + y)
            .collect();
        HookShape::new(self.sig, a, ap)
    }

    /// The shape η = ((0,..,0,1),(0,..,0)).
    pub fn eta(sig: Signature) -> HookShape {
        let mut s = HookShape::zero(sig);
        s.a[sig.m - 1] = 1;
        s
    }

    /// k·self.
    pub fn scale(&self, k: usize) -> HookShape {
        HookShape {
            sig: self.sig,
            a: self.a.iter().map(|x| x * k).collect(),
            a_prime: self.a_prime.iter().map(|x| x * k).collect(),
        }
    }

    pub fn to_weight(&self) -> SuperWeight {
        shape_to_weight(self)
    }

    pub fn is_typical(&self) -> bool {
        is_typical(self)
    }
}

impl Add for &HookShape {
    type Output = HookShape;
    fn add(self, rhs: &HookShape) -> HookShape {
        self.try_add(rhs)
            .expect("adding shapes of different signatures")
    }
}

impl fmt::Display for HookShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "(({}),({}))", join(&self.a), join(&self.a_prime))
    }
}

pub fn validate_shape(sig: Signature, a: Vec<usize>, a_prime: Vec<usize>) -> Result<HookShape> {
    HookShape::new(sig, a, a_prime)
}

pub fn shape_leq(mu: &HookShape, lambda: &HookShape) -> Result<bool> {
    mu.leq(lambda)
}

fn require_leq(lambda: &HookShape, b: &[usize], b_prime: &[usize]) -> Result<()> {
    if b.len() != lambda.a.len() || b_prime.len() != lambda.a_prime.len() {
        return Err(Error::LengthMismatch(
            "inner data does not match the signature".into(),
        ));
    }
    let below = b.iter().zip(&lambda.a).all(|(x, y)| x <= y)
        && b_prime.iter().zip(&lambda.a_prime).all(|(x, y)| x <= y);
    if !below {
        return Err(Error::NotComparable(format!(
            "({b:?},{b_prime:?}) is not below {lambda}"
        )));
    }
    Ok(())
}

/// sup{j : a'_j > b'_j}.
fn sup_excess(lambda: &HookShape, b_prime: &[usize]) -> usize {
    let excess: Vec<usize> = lambda
        .a_prime
        .iter()
        .zip(b_prime)
        .map(|(x, y)| x - y)
        .collect();
    sup_nonzero(&excess)
}

/// Whether λ − µ satisfies the covariance condition.
pub fn diff_is_shape(lambda: &HookShape, mu: &HookShape) -> Result<bool> {
    lambda.sig.check_same(&mu.sig)?;
    diff_is_shape_parts(lambda, &mu.a, &mu.a_prime)
}

/// [`diff_is_shape`] for inner data (b, b') that need not be covariant itself.
pub fn diff_is_shape_parts(lambda: &HookShape, b: &[usize], b_prime: &[usize]) -> Result<bool> {
    require_leq(lambda, b, b_prime)?;
    let m = lambda.sig.m;
    Ok(lambda.a[m - 1] - b[m - 1] >= sup_excess(lambda, b_prime))
}

/// Smallest k with λ − µ + kη covariant.
pub fn min_eta_padding(lambda: &HookShape, mu: &HookShape) -> Result<usize> {
    lambda.sig.check_same(&mu.sig)?;
    min_eta_padding_parts(lambda, &mu.a, &mu.a_prime)
}

pub fn min_eta_padding_parts(lambda: &HookShape, b: &[usize], b_prime: &[usize]) -> Result<usize> {
    require_leq(lambda, b, b_prime)?;
    let m = lambda.sig.m;
    Ok(sup_excess(lambda, b_prime).saturating_sub(lambda.a[m - 1] - b[m - 1]))
}

/// λ − µ as a shape, padded by the minimal multiple of η.
pub fn padded_difference(lambda: &HookShape, mu: &HookShape) -> Result<HookShape> {
    let k = min_eta_padding(lambda, mu)?;
    let m = lambda.sig.m;
    let mut a: Vec<usize> = lambda.a.iter().zip(&mu.a).map(|(x, y)| x - y).collect();
    a[m - 1] += k;
    let ap = lambda
        .a_prime
        .iter()
        .zip(&mu.a_prime)
        .map(|(x, y)| x - y)
        .collect();
    HookShape::new(lambda.sig, a, ap)
}

/// Dominant data for sl(n,m) produced by [`dual_shape`]; not necessarily covariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualShape {
    pub sig: Signature,
    pub a: Vec<usize>,
    pub a_prime: Vec<usize>,
}

impl DualShape {
    pub fn to_shape(&self) -> Result<HookShape> {
        HookShape::new(self.sig, self.a.clone(), self.a_prime.clone())
    }
}

pub fn dual_shape(lambda: &HookShape) -> Result<DualShape> {
    let Signature { m, n } = lambda.sig;
    if n == 0 {
        return Err(Error::DualUndefined);
    }
    let mut a = Vec::with_capacity(n);
    for j in 1..n {
        a.push(lambda.a_prime[n - j - 1]);
    }
    a.push(lambda.a[m - 1] - lambda.j0());
    let a_prime = (1..m).map(|i| lambda.a[m - i - 1]).collect();
    Ok(DualShape {
        sig: Signature { m: n, n: m },
        a,
        a_prime,
    })
}

/// A weight Σ eps_i ε_i + Σ delta_j δ_j.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperWeight {
    pub eps: Vec<i64>,
    pub delta: Vec<i64>,
}

impl SuperWeight {
    pub fn zero(sig: Signature) -> Self {
        SuperWeight {
            eps: vec![0; sig.m],
            delta: vec![0; sig.n],
        }
    }

    /// The supertrace direction Σ ε_i − Σ δ_j.
    pub fn supertrace(sig: Signature) -> Self {
        SuperWeight {
            eps: vec![1; sig.m],
            delta: vec![-1; sig.n],
        }
    }

    /// ε_i − δ_j, 1-based.
    pub fn odd_root(sig: Signature, i: usize, j: usize) -> Self {
        let mut w = SuperWeight::zero(sig);
        w.eps[i - 1] = 1;
        w.delta[j - 1] = -1;
        w
    }

    /// Twice ρ, so that all coefficients are integers.
    pub fn rho_doubled(sig: Signature) -> Self {
        let (m, n) = (sig.m as i64, sig.n as i64);
        SuperWeight {
            eps: (1..=m).map(|i| m - n - 2 * i + 1).collect(),
            delta: (1..=n).map(|j| m + n - 2 * j + 1).collect(),
        }
    }

    /// The form (ε_i,ε_j) = δ_ij, (δ_i,δ_j) = −δ_ij, (ε_i,δ_j) = 0.
    pub fn pairing(&self, other: &SuperWeight) -> i64 {
        let e: i64 = self.eps.iter().zip(&other.eps).map(|(x, y)| x * y).sum();
        let d: i64 = self
            .delta
            .iter()
            .zip(&other.delta)
            .map(|(x, y)| x * y)
            .sum();
        e - d
    }

    pub fn scaled(&self, k: i64) -> Self {
        SuperWeight {
            eps: self.eps.iter().map(|x| x * k).collect(),
            delta: self.delta.iter().map(|x| x * k).collect(),
        }
    }

    /// Representative of the class modulo the supertrace with delta_n = 0.
    pub fn canonical(&self) -> Self {
        let t = self.delta.last().copied().unwrap_or(0);
        SuperWeight {
            eps: self.eps.iter().map(|x| x + t).collect(),
            delta: self.delta.iter().map(|x| x - t).collect(),
        }
    }

    pub fn eq_mod_supertrace(&self, other: &SuperWeight) -> bool {
        if self.delta.is_empty() {
            return self == other;
        }
        self.canonical() == other.canonical()
    }
}

impl Add for &SuperWeight {
    type Output = SuperWeight;
    fn add(self, rhs: &SuperWeight) -> SuperWeight {
        SuperWeight {
            eps: self.eps.iter().zip(&rhs.eps).map(|(x, y)| x + y).collect(),
            delta: self
                .delta
                .iter()
                .zip(&rhs.delta)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

pub fn shape_to_weight(lambda: &HookShape) -> SuperWeight {
    let mut delta: Vec<i64> = lambda
        .below_heights()
        .into_iter()
        .map(|x| x as i64)
        .collect();
    if lambda.sig.n > 0 {
        delta.push(0);
    }
    SuperWeight {
        eps: lambda.row_lengths().into_iter().map(|x| x as i64).collect(),
        delta,
    }
}

/// Typicality of a weight: (w + ρ, ε_i − δ_j) ≠ 0 for all i, j.
pub fn weight_is_typical(sig: Signature, w: &SuperWeight) -> bool {
    let shifted = &w.scaled(2) + &SuperWeight::rho_doubled(sig);
    (1..=sig.m)
        .all(|i| (1..=sig.n).all(|j| shifted.pairing(&SuperWeight::odd_root(sig, i, j)) != 0))
}

pub fn is_typical(lambda: &HookShape) -> bool {
    weight_is_typical(lambda.sig, &shape_to_weight(lambda))
}

/// All covariant shapes with at most `max_boxes` boxes, lexicographic on a‖a'.
pub fn enumerate_shapes(sig: Signature, max_boxes: usize) -> Vec<HookShape> {
    // Position p of a‖a' contributes weight (p+1) boxes per unit for a, (j) for a'.
    let weights: Vec<usize> = (1..=sig.m).chain(1..=sig.odd_columns()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0; weights.len()];
    fn rec(
        pos: usize,
        budget: usize,
        weights: &[usize],
        cur: &mut Vec<usize>,
        sig: Signature,
        out: &mut Vec<HookShape>,
    ) {
        if pos == weights.len() {
            let (a, ap) = cur.split_at(sig.m);
            if let Ok(s) = HookShape::new(sig, a.to_vec(), ap.to_vec()) {
                out.push(s);
            }
            return;
        }
        let mut v = 0;
        while v * weights[pos] <= budget {
            cur[pos] = v;
            rec(pos + 1, budget - v * weights[pos], weights, cur, sig, out);
            v += 1;
        }
        cur[pos] = 0;
    }
    rec(0, max_boxes, &weights, &mut cur, sig, &mut out);
    out
}
