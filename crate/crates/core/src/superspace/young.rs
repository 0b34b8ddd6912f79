use std::collections::HashMap;

use crate::hookshapes::{HookShape, Signature};
use crate::tableaux::{column_cells, column_cells_grouped, row_cells_grouped, Cell, HookTableau};

use super::{transposition_sign_negative, IntTensor, SuperTensor};

/// Word positions (0-based, column-major) of each group of cells.
fn positions(shape: &HookShape, groups: Vec<Vec<Cell>>) -> Vec<Vec<usize>> {
    let index: HashMap<Cell, usize> = column_cells(shape)
        .into_iter()
        .enumerate()
        .map(|(k, c)| (c, k))
        .collect();
    groups
        .into_iter()
        .map(|g| g.iter().map(|c| index[c]).collect())
        .collect()
}

/// Applies Σ_{σ ∈ S_G} (±)σ for the positions G, using S_k = S_{k-1}·{e, (g_s g_k)}.
fn symmetrize(sig: Signature, t: IntTensor, group: &[usize], alternating: bool) -> IntTensor {
    let mut cur = t;
    for k in 1..group.len() {
        let mut next: IntTensor = HashMap::with_capacity(cur.len() * (k + 1));
        for (w, c) in &cur {
            *next.entry(w.clone()).or_insert(0) += c;
            for &p in &group[..k] {
                let q = group[k];
                let mut v = w.clone();
                v.swap(p, q);
                let mut coeff = if transposition_sign_negative(sig, w, p, q) {
                    -c
                } else {
                    *c
                };
                if alternating {
                    coeff = -coeff;
                }
                *next.entry(v).or_insert(0) += coeff;
            }
        }
        next.retain(|_, c| *c != 0);
        cur = next;
    }
    cur
}

fn initial(t: &HookTableau) -> IntTensor {
    let mut m = HashMap::new();
    m.insert(t.column_word(), 1i128);
    m
}

/// e^T·a_λ, the row-symmetrized word tensor.
pub fn row_symmetrized(t: &HookTableau) -> SuperTensor {
    let sig = t.sig();
    let mut cur = initial(t);
    for g in positions(t.shape(), row_cells_grouped(t.shape())) {
        cur = symmetrize(sig, cur, &g, false);
    }
    SuperTensor::from_int(sig, t.boxes(), cur)
}

/// e_T = (e^T·a_λ)·b_λ.
pub fn young_vector(t: &HookTableau) -> SuperTensor {
    let sig = t.sig();
    let mut cur = initial(t);
    for g in positions(t.shape(), row_cells_grouped(t.shape())) {
        cur = symmetrize(sig, cur, &g, false);
    }
    for g in positions(t.shape(), column_cells_grouped(t.shape())) {
        cur = symmetrize(sig, cur, &g, true);
    }
    SuperTensor::from_int(sig, t.boxes(), cur)
}
