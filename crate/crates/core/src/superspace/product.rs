use crate::error::{Error, Result};
use crate::extraction::push;
use crate::hookshapes::{min_eta_padding, padded_difference, HookShape};
use crate::tableaux::{column_cells, concat, trivial_tableau, FormalCombination, HookTableau};

use super::{eij_action, young_vector, Budget, Straightener};

/// S ⋆ T = straighten(concat(S, T)).
pub fn star_product(s: &HookTableau, t: &HookTableau, budget: Budget) -> Result<FormalCombination> {
    budget.check(s.boxes() + t.boxes())?;
    if !s.is_semistandard() || !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let u = concat(s, t)?;
    Straightener::new(u.shape(), budget)?.straighten(&u)
}

/// E_ij·e_T computed on tensors and expressed in the semistandard basis.
pub fn eij_on_tableau(i: u8, j: u8, t: &HookTableau, budget: Budget) -> Result<FormalCombination> {
    budget.check(t.boxes())?;
    let v = eij_action(i, j, &young_vector(t))?;
    Straightener::new(t.shape(), budget)?.straighten_tensor(&v)
}

/// Sign conventions for the entry-replacement formula Σ_{t_{k,l} = j} e_{T(t_{k,l} → i)}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReplacementSigns {
    /// Every replaced tableau with coefficient +1.
    Plain,
    /// Coefficient (−1)^{|E_ij|·(odd letters before the box in column order)}.
    Koszul,
}

/// The entry-replacement formula for E_ij·e_T, straightened.
pub fn eij_by_replacement(
    i: u8,
    j: u8,
    t: &HookTableau,
    signs: ReplacementSigns,
    straightener: &Straightener,
) -> Result<FormalCombination> {
    let sig = t.sig();
    let odd_op = sig.is_odd(i) != sig.is_odd(j);
    let mut out = FormalCombination::new();
    let mut odd_before = 0;
    for c in column_cells(t.shape()) {
        let x = t.get(c).unwrap();
        if x == j {
            let mut u = t.clone();
            u.set(c, i);
            let neg = signs == ReplacementSigns::Koszul && odd_op && odd_before % 2 == 1;
            for (tab, coeff) in straightener.straighten(&u)?.iter() {
                out.add(
                    tab.clone(),
                    if neg { -coeff.clone() } else { coeff.clone() },
                )?;
            }
        }
        if sig.is_odd(x) {
            odd_before += 1;
        }
    }
    Ok(out)
}

/// S⁰_{kη} ⋆ T = S⁰_{kη+λ−µ} ⋆ push(T), with µ the shape of push(T).
pub fn reduced_identity_check(t: &HookTableau, budget: Budget) -> Result<bool> {
    let lambda = t.shape();
    let u = push(t);
    let mu = u.shape();
    let k = min_eta_padding(lambda, mu)?;
    let pad = HookShape::eta(lambda.sig()).scale(k);
    let lhs = star_product(&trivial_tableau(&pad), t, budget)?;
    let rhs = star_product(
        &trivial_tableau(&padded_difference(lambda, mu)?),
        &u,
        budget,
    )?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hookshapes::{enumerate_shapes, Signature};
    use crate::rational::Q;
    use crate::tableaux::enumerate_semistandard;

    fn single(u: HookTableau) -> FormalCombination {
        FormalCombination::single(u).unwrap()
    }

    #[test]
    fn trivial_products() {
        let sig = Signature::new(1, 2).unwrap();
        let shapes = enumerate_shapes(sig, 3);
        for l in &shapes {
            for m in &shapes {
                if l.boxes() + m.boxes() > 4 {
                    continue;
                }
                let p = star_product(&trivial_tableau(l), &trivial_tableau(m), Budget::default())
                    .unwrap();
                assert_eq!(p, single(trivial_tableau(&(l + m))));
            }
        }
    }

    #[test]
    fn empty_is_a_unit() {
        let sig = Signature::new(2, 1).unwrap();
        let l = HookShape::new(sig, vec![1, 1], vec![]).unwrap();
        for t in enumerate_semistandard(&l) {
            let p = star_product(&HookTableau::empty(sig), &t, Budget::default()).unwrap();
            assert_eq!(p, single(t));
        }
    }

    #[test]
    fn weight_operators() {
        let sig = Signature::new(1, 2).unwrap();
        let l = HookShape::new(sig, vec![2], vec![1]).unwrap();
        for t in enumerate_semistandard(&l) {
            for k in 1..=3u8 {
                let c = eij_on_tableau(k, k, &t, Budget::default()).unwrap();
                let mult = t.reading_word().iter().filter(|&&x| x == k).count();
                if mult == 0 {
                    assert!(c.is_empty());
                } else {
                    assert_eq!(c.len(), 1);
                    assert_eq!(c.coeff(&t), Q::from_integer(mult.into()));
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let sig = Signature::new(1, 1).unwrap();
        let l = HookShape::new(sig, vec![5], vec![]).unwrap();
        let s = trivial_tableau(&l);
        assert!(matches!(
            star_product(&s, &s, Budget::default()),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
