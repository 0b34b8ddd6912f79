use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hookshapes::HookShape;
use crate::rational::Q;
use crate::tableaux::{enumerate_semistandard, FormalCombination, HookTableau};

use super::{young_vector, Budget, SuperTensor, Word};

type SparseRow = HashMap<Word, Q>;

/// Incremental Gaussian elimination that remembers how each echelon row
/// was built from the inserted vectors.
struct Echelon {
    /// (pivot word, row scaled to 1 at the pivot, combination of inserted vectors)
    rows: Vec<(Word, SparseRow, Vec<Q>)>,
    inserted: usize,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            inserted: 0,
        }
    }

    /// Reduces `v` against the stored rows; returns the remainder and the multipliers.
    fn reduce(&self, v: &mut SparseRow) -> Vec<Q> {
        let mut mult = Vec::with_capacity(self.rows.len());
        for (pivot, row, _) in &self.rows {
            let a = v.get(pivot).cloned().unwrap_or_else(Q::zero);
            if !a.is_zero() {
                for (w, x) in row {
                    let e = v.entry(w.clone()).or_insert_with(Q::zero);
                    *e -= &a * x;
                    if e.is_zero() {
                        v.remove(w);
                    }
                }
            }
            mult.push(a);
        }
        mult
    }

    /// Inserts a vector; returns false when it is dependent on earlier ones.
    fn insert(&mut self, mut v: SparseRow, capacity: usize) -> bool {
        let k = self.inserted;
        self.inserted += 1;
        let mult = self.reduce(&mut v);
        let Some(pivot) = v.keys().min().cloned() else {
            return false;
        };
        let mut comb = vec![Q::zero(); capacity];
        comb[k] = Q::one();
        for ((_, _, c), a) in self.rows.iter().zip(&mult) {
            if !a.is_zero() {
                for (x, y) in comb.iter_mut().zip(c) {
                    *x -= a * y;
                }
            }
        }
        let scale = Q::one() / &v[&pivot];
        for x in v.values_mut() {
            *x *= &scale;
        }
        for x in comb.iter_mut() {
            *x *= &scale;
        }
        self.rows.push((pivot, v, comb));
        true
    }
}

/// Exact rank of a set of sparse vectors.
pub fn sparse_rank(vectors: &[SuperTensor]) -> usize {
    let mut e = Echelon::new();
    let n = vectors.len();
    vectors
        .iter()
        .filter(|t| e.insert(t.terms().map(|(w, c)| (w.clone(), c.clone())).collect(), n))
        .count()
}

/// Solver for one weight space of S^λ: the semistandard tableaux of a fixed content.
struct Block {
    tableaux: Vec<HookTableau>,
    echelon: Echelon,
}

impl Block {
    fn build(tableaux: Vec<HookTableau>) -> Result<Self> {
        let vectors: Vec<SuperTensor> = tableaux.par_iter().map(young_vector).collect();
        let mut echelon = Echelon::new();
        let n = tableaux.len();
        for v in &vectors {
            if !echelon.insert(v.terms().map(|(w, c)| (w.clone(), c.clone())).collect(), n) {
                return Err(Error::InconsistentSystem(
                    "semistandard vectors are linearly dependent".into(),
                ));
            }
        }
        Ok(Block { tableaux, echelon })
    }

    fn solve(&self, terms: &[(&Word, &Q)]) -> Result<Vec<Q>> {
        let mut v: SparseRow = terms
            .iter()
            .map(|(w, c)| ((*w).clone(), (*c).clone()))
            .collect();
        let mult = self.echelon.reduce(&mut v);
        if !v.is_empty() {
            return Err(Error::InconsistentSystem(format!(
                "{} words left after reduction",
                v.len()
            )));
        }
        let mut x = vec![Q::zero(); self.tableaux.len()];
        for ((_, _, comb), a) in self.echelon.rows.iter().zip(&mult) {
            if !a.is_zero() {
                for (xi, ci) in x.iter_mut().zip(comb) {
                    *xi += a * ci;
                }
            }
        }
        Ok(x)
    }
}

/// Expresses tensors of S^λ in the basis {e_T : T ∈ SS^λ}; one solver per weight space,
/// built on first use and shared between threads.
pub struct Straightener {
    shape: HookShape,
    by_content: BTreeMap<Vec<usize>, Vec<HookTableau>>,
    blocks: Mutex<HashMap<Vec<usize>, Arc<Block>>>,
}

impl Straightener {
    pub fn new(shape: &HookShape, budget: Budget) -> Result<Self> {
        budget.check(shape.boxes())?;
        let mut by_content: BTreeMap<Vec<usize>, Vec<HookTableau>> = BTreeMap::new();
        for t in enumerate_semistandard(shape) {
            by_content.entry(t.content()).or_default().push(t);
        }
        Ok(Straightener {
            shape: shape.clone(),
            by_content,
            blocks: Mutex::new(HashMap::new()),
        })
    }

    pub fn shape(&self) -> &HookShape {
        &self.shape
    }

    fn block(&self, content: &[usize]) -> Result<Option<Arc<Block>>> {
        if let Some(b) = self.blocks.lock().unwrap().get(content) {
            return Ok(Some(b.clone()));
        }
        let Some(tabs) = self.by_content.get(content) else {
            return Ok(None);
        };
        let b = Arc::new(Block::build(tabs.clone())?);
        self.blocks
            .lock()
            .unwrap()
            .insert(content.to_vec(), b.clone());
        Ok(Some(b))
    }

    /// Coefficients of `t` in the semistandard basis.
    pub fn straighten_tensor(&self, t: &SuperTensor) -> Result<FormalCombination> {
        if t.len() != self.shape.boxes() {
            return Err(Error::LengthMismatch(format!(
                "tensor of length {} for {}",
                t.len(),
                self.shape
            )));
        }
        let mut out = FormalCombination::new();
        let groups = t.by_content();
        let contents: BTreeSet<&Vec<usize>> = groups.keys().collect();
        for content in contents {
            let terms = &groups[content];
            let Some(block) = self.block(content)? else {
                return Err(Error::InconsistentSystem(format!(
                    "no semistandard tableau has content {content:?}"
                )));
            };
            let x = block.solve(terms)?;
            for (tab, c) in block.tableaux.iter().zip(x) {
                if !c.is_zero() {
                    out.add(tab.clone(), c)?;
                }
            }
        }
        Ok(out)
    }

    /// Straightens the filling W of this shape.
    pub fn straighten(&self, w: &HookTableau) -> Result<FormalCombination> {
        if w.shape() != &self.shape {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                w.shape(),
                self.shape
            )));
        }
        self.straighten_tensor(&young_vector(w))
    }
}

pub fn straighten(w: &HookTableau, budget: Budget) -> Result<FormalCombination> {
    Straightener::new(w.shape(), budget)?.straighten(w)
}

/// Rows e_T for T ∈ SS^λ over the words that occur.
#[derive(Debug, Clone)]
pub struct BasisMatrix {
    pub tableaux: Vec<HookTableau>,
    pub words: Vec<Word>,
    /// Sparse rows as (word index, coefficient).
    pub rows: Vec<Vec<(usize, Q)>>,
}

impl BasisMatrix {
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        let n = self.rows.len();
        self.rows
            .iter()
            .filter(|r| {
                e.insert(
                    r.iter()
                        .map(|(k, c)| (self.words[*k].clone(), c.clone()))
                        .collect(),
                    n,
                )
            })
            .count()
    }
}

pub fn basis_matrix(lambda: &HookShape, budget: Budget) -> Result<BasisMatrix> {
    budget.check(lambda.boxes())?;
    let tableaux = enumerate_semistandard(lambda);
    let vectors: Vec<SuperTensor> = tableaux.par_iter().map(young_vector).collect();
    let words: Vec<Word> = vectors
        .iter()
        .flat_map(|v| v.terms().map(|(w, _)| w.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let rows = vectors
        .iter()
        .map(|v| v.terms().map(|(w, c)| (index[w], c.clone())).collect())
        .collect();
    Ok(BasisMatrix {
        tableaux,
        words,
        rows,
    })
}
