//! Classical sl(m) reference implementation, written independently of the hook-tableau code:
//! row-list tableaux, trivial extraction by brute force over ν, classical jeu de taquin,
//! and Young symmetrizers expanded over explicit group elements.

use std::collections::BTreeMap;

/// A Young tableau as its list of rows.
pub type Rows = Vec<Vec<u8>>;

/// Rows weakly increasing, columns strictly increasing.
pub fn is_ssyt(t: &Rows) -> bool {
    for (i, row) in t.iter().enumerate() {
        if row.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        if let Some(next) = t.get(i + 1) {
            if next.len() > row.len() || next.iter().zip(row).any(|(d, u)| d <= u) {
                return false;
            }
        }
    }
    true
}

/// All semistandard tableaux with the given row lengths over letters 1..=m.
pub fn enumerate_ssyt(shape: &[usize], m: u8) -> Vec<Rows> {
    fn rec(r: usize, shape: &[usize], m: u8, cur: &mut Rows, out: &mut Vec<Rows>) {
        if r == shape.len() {
            out.push(cur.clone());
            return;
        }
        let mut rows_here = Vec::new();
        let mut row = Vec::with_capacity(shape[r]);
        fill(0, r, shape[r], m, cur, &mut row, &mut rows_here);
        for row in rows_here {
            cur.push(row);
            rec(r + 1, shape, m, cur, out);
            cur.pop();
        }
    }
    fn fill(
        j: usize,
        r: usize,
        len: usize,
        m: u8,
        cur: &Rows,
        row: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if j == len {
            out.push(row.clone());
            return;
        }
        let mut lo = row.last().copied().unwrap_or(1);
        if r > 0 {
            lo = lo.max(cur[r - 1][j] + 1);
        }
        for v in lo..=m {
            row.push(v);
            fill(j + 1, r, len, m, cur, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, shape, m, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux by the hook-content formula.
pub fn hook_content_count(shape: &[usize], m: usize) -> u128 {
    let (mut num, mut den) = (1u128, 1u128);
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&l| l > j).count();
            let content = m as i64 + j as i64 - i as i64;
            if content <= 0 {
                return 0;
            }
            num *= content as u128;
            den *= (arm + leg + 1) as u128;
        }
    }
    num / den
}

/// Row lengths ℓ_i of the trivial tableau with column counts c.
fn ell(c: &[usize]) -> Vec<usize> {
    (0..c.len()).map(|i| c[i..].iter().sum()).collect()
}

/// Column counts a_k of a tableau with the given row lengths (m rows).
pub fn column_counts(rows: &[usize]) -> Vec<usize> {
    (0..rows.len())
        .map(|i| rows[i] - rows.get(i + 1).copied().unwrap_or(0))
        .collect()
}

/// Conditions 1 and 2 for the trivial tableau with column counts `c` inside `t`.
pub fn trivial_extractable(t: &Rows, c: &[usize]) -> bool {
    let lam = column_counts(&t.iter().map(Vec::len).collect::<Vec<_>>());
    if c.iter().zip(&lam).any(|(x, y)| x > y) {
        return false;
    }
    let l = ell(c);
    for (i, row) in t.iter().enumerate() {
        if row[..l[i]].iter().any(|&x| x as usize != i + 1) {
            return false;
        }
    }
    for i in 0..t.len().saturating_sub(1) {
        let (up, down) = (&t[i][l[i]..], &t[i + 1][l[i + 1]..]);
        if up.iter().zip(down).any(|(u, d)| u >= d) {
            return false;
        }
    }
    true
}

/// The greatest extractable trivial tableau (as column counts), by brute force over ν ≤ λ.
pub fn greatest_trivial(t: &Rows) -> Vec<usize> {
    let lam = column_counts(&t.iter().map(Vec::len).collect::<Vec<_>>());
    let mut best: Vec<usize> = vec![0; lam.len()];
    let mut cur = vec![0; lam.len()];
    loop {
        if trivial_extractable(t, &cur) {
            let (lc, lb) = (ell(&cur), ell(&best));
            if lc.iter().zip(&lb).all(|(x, y)| x >= y) {
                best = cur.clone();
            } else {
                assert!(
                    lb.iter().zip(&lc).all(|(x, y)| x >= y),
                    "extractable trivial tableaux without a greatest element"
                );
            }
        }
        let Some(k) = (0..cur.len()).rev().find(|&k| cur[k] < lam[k]) else {
            break;
        };
        cur[k] += 1;
        cur[k + 1..].iter_mut().for_each(|x| *x = 0);
    }
    best
}

pub fn classical_push(t: &Rows) -> Rows {
    let l = ell(&greatest_trivial(t));
    t.iter().zip(l).map(|(row, k)| row[k..].to_vec()).collect()
}

/// Jeu de taquin on a skew tableau whose first `inner[i]` boxes in row i are empty,
/// sliding from the inner corner in the largest column each time.
pub fn classical_rectify(t: &Rows, inner: &[usize]) -> Rows {
    let mut grid: Vec<Vec<Option<u8>>> = t
        .iter()
        .zip(inner)
        .map(|(row, &b)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| (j >= b).then_some(x))
                .collect()
        })
        .collect();
    let mut inner = inner.to_vec();
    loop {
        let corners: Vec<usize> = (0..inner.len())
            .filter(|&i| inner[i] > 0 && inner.get(i + 1).is_none_or(|&n| n < inner[i]))
            .collect();
        let Some(&i0) = corners.iter().max_by_key(|&&i| inner[i]) else {
            break;
        };
        let (mut i, mut j) = (i0, inner[i0] - 1);
        inner[i0] -= 1;
        loop {
            let right = grid[i].get(j + 1).copied().flatten();
            let down = grid.get(i + 1).and_then(|r| r.get(j)).copied().flatten();
            match (right, down) {
                (None, None) => {
                    grid[i].pop();
                    break;
                }
                (Some(r), Some(d)) if r < d => {
                    grid[i][j] = Some(r);
                    j += 1;
                }
                (Some(_), None) => {
                    grid[i][j] = right;
                    j += 1;
                }
                (_, Some(d)) => {
                    grid[i][j] = Some(d);
                    i += 1;
                }
            }
            grid[i][j] = None;
        }
    }
    grid.into_iter()
        .map(|r| r.into_iter().map(|x| x.unwrap()).collect())
        .collect()
}

/// Word positions (column-major) of each row and each column.
fn groups(rows: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let width = rows.first().copied().unwrap_or(0);
    let mut pos = BTreeMap::new();
    let mut k = 0;
    let mut cols = Vec::new();
    for j in 0..width {
        let mut col = Vec::new();
        for (i, &len) in rows.iter().enumerate() {
            if j < len {
                pos.insert((i, j), k);
                col.push(k);
                k += 1;
            }
        }
        cols.push(col);
    }
    let row_groups = rows
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| pos[&(i, j)]).collect())
        .collect();
    (row_groups, cols)
}

fn column_word(t: &Rows) -> Vec<u8> {
    let width = t.first().map_or(0, Vec::len);
    (0..width)
        .flat_map(|j| t.iter().filter_map(move |r| r.get(j).copied()))
        .collect()
}

/// All permutations of `items` with their signs.
fn permutations(items: &[usize]) -> Vec<(Vec<usize>, bool)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), false)];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for (mut p, neg) in permutations(&rest) {
            p.insert(0, first);
            out.push((p, neg ^ (k % 2 == 1)));
        }
    }
    out
}

/// Elements of a product of symmetric groups on disjoint position sets, as image vectors.
fn group_elements(n: usize, groups: &[Vec<usize>]) -> Vec<(Vec<usize>, bool)> {
    let mut out = vec![((0..n).collect::<Vec<_>>(), false)];
    for g in groups {
        let mut next = Vec::new();
        for (base, sign) in &out {
            for (img, neg) in permutations(g) {
                let mut p = base.clone();
                for (&src, &dst) in g.iter().zip(&img) {
                    p[src] = dst;
                }
                next.push((p, sign ^ neg));
            }
        }
        out = next;
    }
    out
}

/// e_T = Σ_{r ∈ R} Σ_{c ∈ C} sgn(c) e^T·r·c with (v·σ)_k = v_{σ(k)}, as integer coefficients.
pub fn classical_young_vector(t: &Rows) -> BTreeMap<Vec<u8>, i64> {
    let (rg, cg) = groups(&t.iter().map(Vec::len).collect::<Vec<_>>());
    let word = column_word(t);
    let n = word.len();
    let rs = group_elements(n, &rg);
    let cs = group_elements(n, &cg);
    let mut out: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    for (r, _) in &rs {
        let wr: Vec<u8> = (0..n).map(|k| word[r[k]]).collect();
        for (c, neg) in &cs {
            let wc: Vec<u8> = (0..n).map(|k| wr[c[k]]).collect();
            *out.entry(wc).or_insert(0) += if *neg { -1 } else { 1 };
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Σ_{X ⊂ C_j, |X| = q} e_T·(X ↔ Y) = e_T, Y the top q boxes of column j+1 (1-based j).
pub fn classical_plucker(t: &Rows, j: usize, q: usize) -> bool {
    let (_, cols) = groups(&t.iter().map(Vec::len).collect::<Vec<_>>());
    let (cj, y) = (&cols[j - 1], &cols[j][..q]);
    let e = classical_young_vector(t);
    let mut sum: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    let mut choose = vec![0usize; q];
    fn subsets(
        items: &[usize],
        q: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for k in start..items.len() {
            cur.push(items[k]);
            subsets(items, q, k + 1, cur, out);
            cur.pop();
        }
    }
    let mut xs = Vec::new();
    choose.clear();
    subsets(cj, q, 0, &mut choose, &mut xs);
    for x in xs {
        for (w, c) in &e {
            let mut v = w.clone();
            for (&a, &b) in x.iter().zip(y) {
                v.swap(a, b);
            }
            *sum.entry(v).or_insert(0) += c;
        }
    }
    sum.retain(|_, v| *v != 0);
    sum == e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_agree_with_hook_content() {
        for shape in [
            vec![2, 1],
            vec![3, 2, 1],
            vec![2, 2],
            vec![4],
            vec![1, 1, 1],
        ] {
            for m in 1..5u8 {
                assert_eq!(
                    enumerate_ssyt(&shape, m).len() as u128,
                    hook_content_count(&shape, m as usize)
                );
            }
        }
    }

    #[test]
    fn worked_push() {
        let t: Rows = vec![vec![1, 1, 2, 2, 3], vec![2, 3, 4], vec![4], vec![]];
        assert!(is_ssyt(&t));
        assert_eq!(greatest_trivial(&t), vec![1, 1, 0, 0]);
        assert_eq!(
            classical_push(&t),
            vec![vec![2, 2, 3], vec![3, 4], vec![4], vec![]]
        );
        assert_eq!(classical_rectify(&t, &[2, 1, 0, 0]), classical_push(&t));
    }

    #[test]
    fn column_vector_is_alternating() {
        let e = classical_young_vector(&vec![vec![1], vec![2]]);
        let expected: BTreeMap<Vec<u8>, i64> =
            [(vec![1, 2], 1), (vec![2, 1], -1)].into_iter().collect();
        assert_eq!(e, expected);
        assert!(classical_young_vector(&vec![vec![1], vec![1]]).is_empty());
    }

    #[test]
    fn plucker_small() {
        let t: Rows = vec![vec![1, 2], vec![2, 3], vec![3]];
        assert!(classical_plucker(&t, 1, 1));
        assert!(classical_plucker(&t, 1, 2));
    }
}
