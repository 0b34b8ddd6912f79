use crate::error::{Error, Result};
use crate::tableaux::{Cell, FormalCombination, HookTableau};

use super::{act_permutation, young_vector, Budget, Permutation, Straightener, SuperTensor};

/// Word positions (0-based, column-major) of column `j` (1-based).
fn column_positions(t: &HookTableau, j: usize) -> Result<Vec<usize>> {
    let heights = t.shape().column_heights();
    if j == 0 || j > heights.len() {
        return Err(Error::IndexOutOfRange(format!(
            "column {j} of {} columns",
            heights.len()
        )));
    }
    let start: usize = heights[..j - 1].iter().sum();
    Ok((start..start + heights[j - 1]).collect())
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (idx, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[idx + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// The product of the disjoint transpositions (x_k ↔ y_k).
fn exchange(n: usize, xs: &[usize], ys: &[usize]) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    for (&x, &y) in xs.iter().zip(ys) {
        v.swap(x, y);
    }
    Permutation::new(v).expect("disjoint transpositions")
}

fn plucker_ranges(t: &HookTableau, j: usize, q: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let cj = column_positions(t, j)?;
    let cnext = column_positions(t, j + 1)?;
    if q == 0 || q > cnext.len() {
        return Err(Error::IndexOutOfRange(format!(
            "depth {q} in a column of height {}",
            cnext.len()
        )));
    }
    Ok((cj, cnext[..q].to_vec()))
}

/// Σ_{X ⊂ C_j, |X| = q} e_T·(X ↔ Y) = e_T with Y the top q boxes of C_{j+1},
/// the exchanges acting on tensor positions with their signs.
pub fn plucker_check(t: &HookTableau, j: usize, q: usize) -> Result<bool> {
    let (cj, y) = plucker_ranges(t, j, q)?;
    let e = young_vector(t);
    let mut sum = SuperTensor::zero(t.sig(), t.boxes());
    for x in subsets(&cj, q) {
        sum = &sum + &act_permutation(&e, &exchange(t.boxes(), &x, &y))?;
    }
    Ok(sum == e)
}

/// The same identity with the exchanges performed on tableau entries:
/// Σ_X e_{T(X ↔ Y)} = e_T.
pub fn plucker_check_tableau(t: &HookTableau, j: usize, q: usize) -> Result<bool> {
    let (cj, y) = plucker_ranges(t, j, q)?;
    let cells = crate::tableaux::column_cells(t.shape());
    let mut sum = SuperTensor::zero(t.sig(), t.boxes());
    for x in subsets(&cj, q) {
        let mut u = t.clone();
        for (&a, &b) in x.iter().zip(&y) {
            u = u.swapped(cells[a], cells[b]);
        }
        sum = &sum + &young_vector(&u);
    }
    Ok(sum == young_vector(t))
}

fn hplucker_rows(t: &HookTableau, i: usize) -> Result<(Vec<Cell>, Vec<Cell>)> {
    let rows = crate::tableaux::row_cells_grouped(t.shape());
    if i == 0 || i > rows.len() {
        return Err(Error::IndexOutOfRange(format!(
            "row {i} of {} rows",
            rows.len()
        )));
    }
    let upper = rows[i - 1].clone();
    let lower = rows.get(i).cloned().unwrap_or_default();
    let m = t.sig().m as u8;
    if upper.iter().chain(&lower).any(|&c| t.get(c).unwrap() <= m) {
        return Err(Error::PreconditionViolation(format!(
            "rows {i} and {} must hold only odd letters",
            i + 1
        )));
    }
    Ok((upper, lower))
}

/// Σ_{j=1}^{p} e_{T(s_j ↔ t_1)} = e_T for rows i, i+1 holding only letters > m,
/// with the exchange performed on tableau entries.
pub fn hplucker_check(t: &HookTableau, i: usize) -> Result<bool> {
    let (upper, lower) = hplucker_rows(t, i)?;
    let Some(&t1) = lower.first() else {
        return Ok(true);
    };
    let mut sum = SuperTensor::zero(t.sig(), t.boxes());
    for &s in &upper {
        sum = &sum + &young_vector(&t.swapped(s, t1));
    }
    Ok(sum == young_vector(t))
}

/// The horizontal relation with the exchange acting on tensor positions.
pub fn hplucker_check_tensor(t: &HookTableau, i: usize) -> Result<bool> {
    let (upper, lower) = hplucker_rows(t, i)?;
    let Some(&t1) = lower.first() else {
        return Ok(true);
    };
    let index: std::collections::HashMap<Cell, usize> = crate::tableaux::column_cells(t.shape())
        .into_iter()
        .enumerate()
        .map(|(k, c)| (c, k))
        .collect();
    let e = young_vector(t);
    let mut sum = SuperTensor::zero(t.sig(), t.boxes());
    for s in &upper {
        sum = &sum
            + &act_permutation(
                &e,
                &Permutation::transposition(t.boxes(), index[s], index[&t1]),
            )?;
    }
    Ok(sum == e)
}

/// X = top `p` boxes of column j, Y = top `q` boxes of column j+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GarnirSpec {
    pub column: usize,
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarnirOutcome {
    /// Whether Σ_r (−1)^r Σ e_T·(X'↔Y') already vanishes as a tensor.
    pub raw_zero: bool,
    pub straightened: FormalCombination,
}

/// G_{X,Y} applied to e_T, then straightened.
pub fn garnir_apply(t: &HookTableau, spec: GarnirSpec, budget: Budget) -> Result<GarnirOutcome> {
    let cj = column_positions(t, spec.column)?;
    let cnext = column_positions(t, spec.column + 1)?;
    if spec.p > cj.len() || spec.q > cnext.len() {
        return Err(Error::IndexOutOfRange(format!(
            "X or Y exceeds its column ({spec:?})"
        )));
    }
    if spec.p + spec.q <= cj.len() {
        return Err(Error::PreconditionViolation(format!(
            "#(X ∪ Y) = {} does not exceed the column height {}",
            spec.p + spec.q,
            cj.len()
        )));
    }
    let (x, y) = (&cj[..spec.p], &cnext[..spec.q]);
    let e = young_vector(t);
    let mut sum = SuperTensor::zero(t.sig(), t.boxes());
    for r in 0..=spec.p.min(spec.q) {
        for xs in subsets(x, r) {
            for ys in subsets(y, r) {
                let term = act_permutation(&e, &exchange(t.boxes(), &xs, &ys))?;
                sum = if r % 2 == 0 {
                    &sum + &term
                } else {
                    &sum - &term
                };
            }
        }
    }
    let raw_zero = sum.is_zero();
    let straightened = Straightener::new(t.shape(), budget)?.straighten_tensor(&sum)?;
    Ok(GarnirOutcome {
        raw_zero,
        straightened,
    })
}
