//! Exact tensor oracle: words over the graded basis e_1..e_{m+n}, the signed right
//! action of S_N, Young symmetrizers, the E_ij action, straightening and the ⋆ product.

mod product;
mod relations;
mod solve;
mod young;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hookshapes::Signature;
use crate::rational::{format_rational, Q};
use crate::tableaux::HookTableau;

pub use product::{
    eij_by_replacement, eij_on_tableau, reduced_identity_check, star_product, ReplacementSigns,
};
pub use relations::{
    garnir_apply, hplucker_check, hplucker_check_tensor, plucker_check, plucker_check_tableau,
    GarnirOutcome, GarnirSpec,
};
pub use solve::{basis_matrix, sparse_rank, straighten, BasisMatrix, Straightener};
pub use young::{row_symmetrized, young_vector};

pub type Word = Vec<u8>;

/// Upper bound on the number of boxes handled by tensor computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_boxes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_boxes: 8 }
    }
}

impl Budget {
    pub fn new(max_boxes: usize) -> Self {
        Budget { max_boxes }
    }

    pub fn check(&self, boxes: usize) -> Result<()> {
        if boxes > self.max_boxes {
            return Err(Error::BudgetExceeded {
                boxes,
                max: self.max_boxes,
            });
        }
        Ok(())
    }
}

/// A sparse rational combination of words of a fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperTensor {
    sig: Signature,
    len: usize,
    terms: BTreeMap<Word, Q>,
}

impl SuperTensor {
    pub fn zero(sig: Signature, len: usize) -> Self {
        SuperTensor {
            sig,
            len,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(sig: Signature, w: Word) -> Self {
        let mut t = SuperTensor::zero(sig, w.len());
        t.terms.insert(w, Q::one());
        t
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    /// Word length N.
    pub fn len(&self) -> usize {
        self.len
    }

    /// Whether the words have length zero.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[u8]) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        debug_assert_eq!(w.len(), self.len);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scaled(&self, k: &Q) -> Self {
        if k.is_zero() {
            return SuperTensor::zero(self.sig, self.len);
        }
        SuperTensor {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
            ..self.clone()
        }
    }

    fn check_len(&self, other: &SuperTensor) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(format!(
                "tensor lengths {} and {}",
                self.len, other.len
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SuperTensor) -> Result<SuperTensor> {
        self.check_len(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Terms grouped by letter content.
    pub(crate) fn by_content(&self) -> HashMap<Vec<usize>, Vec<(&Word, &Q)>> {
        let mut out: HashMap<Vec<usize>, Vec<(&Word, &Q)>> = HashMap::new();
        for (w, c) in &self.terms {
            out.entry(crate::tableaux::word_content(self.sig, w))
                .or_default()
                .push((w, c));
        }
        out
    }

    pub(crate) fn from_int(sig: Signature, len: usize, t: IntTensor) -> Self {
        let terms = t
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(w, c)| (w, Q::from_integer(c.into())))
            .collect();
        SuperTensor { sig, len, terms }
    }
}

impl Add for &SuperTensor {
    type Output = SuperTensor;
    fn add(self, rhs: &SuperTensor) -> SuperTensor {
        self.try_add(rhs).expect("tensor lengths differ")
    }
}

impl Neg for &SuperTensor {
    type Output = SuperTensor;
    fn neg(self) -> SuperTensor {
        self.scaled(&-Q::one())
    }
}

impl Sub for &SuperTensor {
    type Output = SuperTensor;
    fn sub(self, rhs: &SuperTensor) -> SuperTensor {
        self + &(-rhs)
    }
}

impl fmt::Display for SuperTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                format!("{}·e({})", format_rational(c), word.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Integer tensors used while expanding symmetrizers.
pub(crate) type IntTensor = HashMap<Word, i128>;

/// A permutation σ of 0..N, stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::PreconditionViolation(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// From 1-based images σ(1), .., σ(N).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        Permutation::new(images.iter().map(|&x| x.wrapping_sub(1)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn transposition(n: usize, p: usize, q: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(p, q);
        Permutation(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, k: usize) -> usize {
        self.0[k]
    }

    /// (στ)(k) = σ(τ(k)).
    pub fn compose(&self, tau: &Permutation) -> Permutation {
        Permutation(tau.0.iter().map(|&k| self.0[k]).collect())
    }
}

/// v·σ for a single word: the permuted word and the sign from odd inversions.
pub fn act_on_word(sig: Signature, w: &[u8], sigma: &Permutation) -> (Word, bool) {
    let moved: Word = sigma.0.iter().map(|&k| w[k]).collect();
    let odd: Vec<usize> = sigma
        .0
        .iter()
        .copied()
        .filter(|&k| sig.is_odd(w[k]))
        .collect();
    let mut inversions = 0usize;
    for a in 0..odd.len() {
        for b in a + 1..odd.len() {
            if odd[a] > odd[b] {
                inversions += 1;
            }
        }
    }
    (moved, inversions % 2 == 1)
}

/// Signed right action t·σ.
pub fn act_permutation(t: &SuperTensor, sigma: &Permutation) -> Result<SuperTensor> {
    if sigma.len() != t.len {
        return Err(Error::LengthMismatch(format!(
            "permutation of {} acting on length {}",
            sigma.len(),
            t.len
        )));
    }
    let mut out = SuperTensor::zero(t.sig, t.len);
    for (w, c) in &t.terms {
        let (v, neg) = act_on_word(t.sig, w, sigma);
        out.add_term(v, if neg { -c.clone() } else { c.clone() });
    }
    Ok(out)
}

/// Sign of swapping positions p < q of `w`: odd letters strictly between count when
/// exactly one of the swapped letters is odd; two odd letters always give −1.
pub(crate) fn transposition_sign_negative(sig: Signature, w: &[u8], p: usize, q: usize) -> bool {
    let (p, q) = (p.min(q), p.max(q));
    let (op, oq) = (sig.is_odd(w[p]), sig.is_odd(w[q]));
    match (op, oq) {
        (true, true) => true,
        (false, false) => false,
        _ => w[p + 1..q].iter().filter(|&&x| sig.is_odd(x)).count() % 2 == 1,
    }
}

/// e^T: the column-by-column word of T.
pub fn word_tensor(t: &HookTableau) -> SuperTensor {
    SuperTensor::word(t.sig(), t.column_word())
}

/// E_ij as a superderivation: each letter j becomes i, with the Koszul sign
/// (−1)^{|E_ij|·(number of odd letters to the left)}.
pub fn eij_action(i: u8, j: u8, t: &SuperTensor) -> Result<SuperTensor> {
    let sig = t.sig;
    let top = sig.letters() as u8;
    if i == 0 || j == 0 || i > top || j > top {
        return Err(Error::IndexOutOfRange(format!("E_{{{i},{j}}} in {sig}")));
    }
    let odd_op = sig.is_odd(i) != sig.is_odd(j);
    let mut out = SuperTensor::zero(sig, t.len);
    for (w, c) in &t.terms {
        let mut odd_left = 0;
        for (k, &x) in w.iter().enumerate() {
            if x == j {
                let mut v = w.clone();
                v[k] = i;
                let neg = odd_op && odd_left % 2 == 1;
                out.add_term(v, if neg { -c.clone() } else { c.clone() });
            }
            if sig.is_odd(x) {
                odd_left += 1;
            }
        }
    }
    Ok(out)
}
