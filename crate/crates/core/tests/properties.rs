use diamond_cone::extraction::{is_quasistandard, largest_extractable_pair, pull, push};
use diamond_cone::hookshapes::{
    diff_is_shape, dual_shape, enumerate_shapes, min_eta_padding, padded_difference,
    shape_to_weight, weight_is_typical,
};
use diamond_cone::superspace::{
    act_permutation, eij_action, star_product, Budget, Permutation, SuperTensor,
};
use diamond_cone::tableaux::{concat, enumerate_semistandard, trivial_tableau, Cell};
use diamond_cone::taquin::SkewTableau;
use diamond_cone::{FormalCombination, HookShape, HookTableau, Signature, SuperWeight};
use proptest::prelude::*;
use proptest::sample::select;

fn sig(m: usize, n: usize) -> Signature {
    Signature::new(m, n).unwrap()
}

fn sigs() -> Vec<Signature> {
    vec![
        sig(1, 1),
        sig(1, 2),
        sig(2, 1),
        sig(2, 2),
        sig(1, 3),
        sig(3, 1),
        sig(2, 3),
    ]
}

/// A signature and two shapes of it, each with at most `max` boxes.
fn shape_pair(max: usize) -> impl Strategy<Value = (HookShape, HookShape)> {
    select(sigs()).prop_flat_map(move |s| {
        let shapes = enumerate_shapes(s, max);
        (select(shapes.clone()), select(shapes))
    })
}

fn shape_triple(max: usize) -> impl Strategy<Value = (HookShape, HookShape, HookShape)> {
    select(sigs()).prop_flat_map(move |s| {
        let shapes = enumerate_shapes(s, max);
        (
            select(shapes.clone()),
            select(shapes.clone()),
            select(shapes),
        )
    })
}

/// A semistandard tableau of some shape with at most `max` boxes.
fn semistandard(list: Vec<Signature>, max: usize) -> impl Strategy<Value = HookTableau> {
    let all: Vec<HookTableau> = list
        .into_iter()
        .flat_map(|s| enumerate_shapes(s, max))
        .flat_map(|l| enumerate_semistandard(&l))
        .collect();
    select(all)
}

/// A signature with a random word of length `len` and two permutations of that length.
fn word_and_perms(
    max_len: usize,
) -> impl Strategy<Value = (Signature, Vec<u8>, Vec<usize>, Vec<usize>)> {
    (select(sigs()), 1..=max_len).prop_flat_map(|(s, len)| {
        let letters = s.letters() as u8;
        (
            Just(s),
            proptest::collection::vec(1..=letters, len),
            Just((0..len).collect::<Vec<usize>>()).prop_shuffle(),
            Just((0..len).collect::<Vec<usize>>()).prop_shuffle(),
        )
    })
}

fn koszul(s: Signature, a: u8, b: u8) -> bool {
    s.is_odd(a) != s.is_odd(b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn order_is_partial((l, mu, nu) in shape_triple(6)) {
        prop_assert!(l.leq(&l).unwrap());
        if l.leq(&mu).unwrap() && mu.leq(&l).unwrap() {
            prop_assert_eq!(&l, &mu);
        }
        if l.leq(&mu).unwrap() && mu.leq(&nu).unwrap() {
            prop_assert!(l.leq(&nu).unwrap());
        }
    }

    #[test]
    fn padding_bounds((l, mu) in shape_pair(7)) {
        if mu.leq(&l).unwrap() {
            let k = min_eta_padding(&l, &mu).unwrap();
            prop_assert!(k < l.sig().n.max(1));
            if diff_is_shape(&l, &mu).unwrap() {
                prop_assert_eq!(k, 0);
            }
            let d = padded_difference(&l, &mu).unwrap();
            prop_assert_eq!(d.boxes() + mu.boxes(), l.boxes() + k * l.sig().m);
        }
    }

    #[test]
    fn weights_are_additive((l, mu) in shape_pair(6)) {
        let sum = &l + &mu;
        prop_assert_eq!(&shape_to_weight(&l) + &shape_to_weight(&mu), shape_to_weight(&sum));
    }

    #[test]
    fn typicality_ignores_supertrace((l, _) in shape_pair(6), k in -5i64..5) {
        let w = shape_to_weight(&l);
        let shifted = &w + &SuperWeight::supertrace(l.sig()).scaled(k);
        prop_assert_eq!(weight_is_typical(l.sig(), &w), weight_is_typical(l.sig(), &shifted));
    }

    #[test]
    fn double_dual((l, _) in shape_pair(7)) {
        let d = dual_shape(&l).unwrap();
        if let Ok(dl) = d.to_shape() {
            let dd = dual_shape(&dl).unwrap();
            prop_assert_eq!(dd.sig, l.sig());
            prop_assert_eq!(&dd.a_prime[..], l.a_prime());
            let m = l.sig().m;
            prop_assert_eq!(&dd.a[..m - 1], &l.a()[..m - 1]);
            prop_assert_eq!(dd.a[m - 1] + l.j0() + dl.j0(), l.a()[m - 1]);
            if l.j0() == 0 && dl.j0() == 0 {
                prop_assert_eq!(dd.to_shape().unwrap(), l);
            }
        }
    }

    #[test]
    fn right_action((s, w, sigma, tau) in word_and_perms(6)) {
        let v = SuperTensor::word(s, w);
        let (sigma, tau) = (Permutation::new(sigma).unwrap(), Permutation::new(tau).unwrap());
        let lhs = act_permutation(&v, &sigma.compose(&tau)).unwrap();
        let rhs = act_permutation(&act_permutation(&v, &sigma).unwrap(), &tau).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eij_commutes_with_permutations((s, w, sigma, _) in word_and_perms(4), i in 1u8..6, j in 1u8..6) {
        let top = s.letters() as u8;
        let (i, j) = ((i - 1) % top + 1, (j - 1) % top + 1);
        let v = SuperTensor::word(s, w);
        let sigma = Permutation::new(sigma).unwrap();
        let lhs = eij_action(i, j, &act_permutation(&v, &sigma).unwrap()).unwrap();
        let rhs = act_permutation(&eij_action(i, j, &v).unwrap(), &sigma).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn push_lands_in_quasistandard(t in semistandard(sigs(), 6)) {
        let u = push(&t);
        prop_assert!(u.is_semistandard());
        prop_assert!(is_quasistandard(&u));
        prop_assert!(u.shape().leq(t.shape()).unwrap());
        prop_assert_eq!(pull(&u, t.shape()).unwrap(), t);
    }

    #[test]
    fn pull_then_push(t in semistandard(sigs(), 5), extra in 0usize..3) {
        if is_quasistandard(&t) {
            let l = &(t.shape() + &HookShape::eta(t.sig()).scale(extra));
            if let Ok(p) = pull(&t, l) {
                prop_assert_eq!(push(&p), t);
            }
        }
    }

    #[test]
    fn slides_preserve_semistandardness(t in semistandard(sigs(), 7)) {
        let mut cur = SkewTableau::from_pair(&t, &largest_extractable_pair(&t)).unwrap();
        while let Some(c) = cur.greatest_outer_corner() {
            let tr = cur.sjdt_trace(c).unwrap();
            prop_assert_eq!(tr.frames[0].star, c);
            for f in &tr.frames {
                prop_assert_eq!(f.tableau.outer(), cur.outer());
            }
            prop_assert!(tr.result.is_semistandard());
            prop_assert_eq!(tr.result.outer().boxes(), cur.outer().boxes() - 1);
            cur = tr.result;
        }
        prop_assert_eq!(cur.to_straight().unwrap(), push(&t));
    }

    #[test]
    fn trivial_prefix_keeps_semistandard(t in semistandard(sigs(), 5), k in 0usize..3) {
        let pad = trivial_tableau(&HookShape::eta(t.sig()).scale(k + 1));
        prop_assert!(concat(&pad, &t).unwrap().is_semistandard());
        let own = trivial_tableau(t.shape());
        prop_assert!(concat(&own, &t).unwrap().is_semistandard());
    }

    #[test]
    fn below_line_entries_are_odd(t in semistandard(sigs(), 7)) {
        let m = t.sig().m as u8;
        prop_assert!(t.minus().iter().flatten().all(|&x| x > m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn star_commutes(s in semistandard(vec![sig(1, 1), sig(2, 0), sig(3, 0)], 3),
                     t in semistandard(vec![sig(1, 1), sig(2, 0), sig(3, 0)], 3)) {
        prop_assume!(s.sig() == t.sig());
        let b = Budget::default();
        prop_assert_eq!(star_product(&s, &t, b).unwrap(), star_product(&t, &s, b).unwrap());
    }

    #[test]
    fn star_associates(r in semistandard(vec![sig(1, 1), sig(2, 0), sig(3, 0)], 2),
                       s in semistandard(vec![sig(1, 1), sig(2, 0), sig(3, 0)], 2),
                       t in semistandard(vec![sig(1, 1), sig(2, 0), sig(3, 0)], 2)) {
        prop_assume!(r.sig() == s.sig() && s.sig() == t.sig());
        let b = Budget::default();
        let expand = |left: &HookTableau, right: &FormalCombination| {
            let mut out = FormalCombination::new();
            for (u, c) in right.iter() {
                for (v, d) in star_product(left, u, b).unwrap().iter() {
                    out.add(v.clone(), c * d).unwrap();
                }
            }
            out
        };
        let rs = star_product(&r, &s, b).unwrap();
        let mut lhs = FormalCombination::new();
        for (u, c) in rs.iter() {
            for (v, d) in star_product(u, &t, b).unwrap().iter() {
                lhs.add(v.clone(), c * d).unwrap();
            }
        }
        let rhs = expand(&r, &star_product(&s, &t, b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

fn negated(c: &FormalCombination) -> FormalCombination {
    let mut out = FormalCombination::new();
    for (t, x) in c.iter() {
        out.add(t.clone(), -x.clone()).unwrap();
    }
    out
}

/// With odd letters present, concatenation followed by straightening commutes and associates
/// only up to sign. Counts the sign flips over all small factors.
#[test]
fn star_holds_up_to_sign() {
    let b = Budget::default();
    for (s, comm_flips, assoc_flips) in [(sig(1, 2), 220, 180), (sig(2, 1), 42, 53)] {
        let tabs: Vec<HookTableau> = enumerate_shapes(s, 3)
            .iter()
            .flat_map(enumerate_semistandard)
            .collect();
        let mut flips = 0;
        for x in &tabs {
            for y in &tabs {
                let (p, q) = (
                    star_product(x, y, b).unwrap(),
                    star_product(y, x, b).unwrap(),
                );
                if p != q {
                    assert_eq!(p, negated(&q), "{x} ⋆ {y}");
                    flips += 1;
                }
            }
        }
        assert_eq!(flips, comm_flips, "{s} commutativity");
        let small: Vec<&HookTableau> = tabs.iter().filter(|t| t.boxes() <= 2).collect();
        let mut flips = 0;
        for r in &small {
            for x in &small {
                for y in &small {
                    let mut lhs = FormalCombination::new();
                    for (u, c) in star_product(r, x, b).unwrap().iter() {
                        for (v, d) in star_product(u, y, b).unwrap().iter() {
                            lhs.add(v.clone(), c * d).unwrap();
                        }
                    }
                    let mut rhs = FormalCombination::new();
                    for (u, c) in star_product(x, y, b).unwrap().iter() {
                        for (v, d) in star_product(r, u, b).unwrap().iter() {
                            rhs.add(v.clone(), c * d).unwrap();
                        }
                    }
                    if lhs != rhs {
                        assert_eq!(lhs, negated(&rhs));
                        flips += 1;
                    }
                }
            }
        }
        assert_eq!(flips, assoc_flips, "{s} associativity");
    }
}

/// [E_ab, E_cd] = δ_bc E_ad − (−1)^{(|a|+|b|)(|c|+|d|)} δ_da E_cb on every word of length ≤ 3.
#[test]
fn super_commutator() {
    for s in [sig(1, 1), sig(1, 2), sig(2, 1)] {
        let top = s.letters() as u8;
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        for _ in 0..3 {
            words = words
                .iter()
                .flat_map(|w| (1..=top).map(move |x| [w.clone(), vec![x]].concat()))
                .collect();
            for w in &words {
                let v = SuperTensor::word(s, w.clone());
                for a in 1..=top {
                    for b in 1..=top {
                        for c in 1..=top {
                            for d in 1..=top {
                                let ab_cd =
                                    eij_action(a, b, &eij_action(c, d, &v).unwrap()).unwrap();
                                let cd_ab =
                                    eij_action(c, d, &eij_action(a, b, &v).unwrap()).unwrap();
                                let both_odd = koszul(s, a, b) && koszul(s, c, d);
                                let bracket = if both_odd {
                                    &ab_cd + &cd_ab
                                } else {
                                    &ab_cd - &cd_ab
                                };
                                let mut expected = SuperTensor::zero(s, w.len());
                                if b == c {
                                    expected = &expected + &eij_action(a, d, &v).unwrap();
                                }
                                if d == a {
                                    let t = eij_action(c, b, &v).unwrap();
                                    expected = if both_odd {
                                        &expected + &t
                                    } else {
                                        &expected - &t
                                    };
                                }
                                assert_eq!(bracket, expected, "{s} word {w:?} E{a}{b} E{c}{d}");
                            }
                        }
                    }
                }
            }
        }
    }
}

/// The star moves right or down one box at a time and only leaves the diagram at the end.
#[test]
fn star_moves_right_or_down() {
    for s in [sig(1, 2), sig(2, 1), sig(2, 2)] {
        for l in enumerate_shapes(s, 6) {
            for t in enumerate_semistandard(&l) {
                let mut cur = SkewTableau::from_pair(&t, &largest_extractable_pair(&t)).unwrap();
                while let Some(c) = cur.greatest_outer_corner() {
                    let tr = cur.sjdt_trace(c).unwrap();
                    for w in tr.frames.windows(2) {
                        let (a, b): (Cell, Cell) = (w[0].star, w[1].star);
                        assert!(
                            (b.i == a.i && b.j == a.j + 1) || (b.j == a.j && b.i == a.i + 1),
                            "{t}"
                        );
                    }
                    if c.i > s.m {
                        assert!(
                            tr.frames.iter().all(|f| f.star.i > s.m),
                            "{t}: star crossed the line upward"
                        );
                    }
                    cur = tr.result;
                }
            }
        }
    }
}
