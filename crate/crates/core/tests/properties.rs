use std::collections::HashMap;

use proptest::prelude::*;
use specht_core::blocks::{core_and_weight, from_quotient, two_quotient};
use specht_core::fock::action_exponent;
use specht_core::homs::{
    enumerate_tableaux, kernel_check, psi_compose, specht_seed, CountTableau, QParam, RowMoveTarget,
};
use specht_core::lr::{lr_coefficient, lr_support};
use specht_core::{FockVector, LaurentPoly, LrQuery, Partition, Residue};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

/// `[a]! = Π_{k ≤ a} (v^{1−k} + v^{3−k} + … + v^{k−1})`.
fn quantum_factorial(a: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for k in 1..=a as i32 {
        let bracket = LaurentPoly::from_terms((0..k).map(|j| (2 * j - (k - 1), 1)));
        out = &out * &bracket;
    }
    out
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lambda in partition(7, 7)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn lr_coefficients_are_symmetric(a in partition(3, 3), b in partition(3, 3)) {
        let ab = lr_support(&a, &b);
        prop_assert_eq!(&ab, &lr_support(&b, &a));
        let total: u64 = ab.iter().map(|(_, c)| c).sum();
        prop_assert!(total >= 1);
        for (nu, c) in ab {
            prop_assert_eq!(nu.size(), a.size() + b.size());
            prop_assert_eq!(lr_coefficient(&LrQuery::new(nu.clone(), b.clone(), a.clone())), c);
            prop_assert_eq!(
                lr_coefficient(&LrQuery::new(nu.conjugate(), a.conjugate(), b.conjugate())),
                c
            );
        }
    }

    #[test]
    fn quotient_round_trips(h in partition(3, 3), v in partition(3, 3), l in 0usize..5) {
        let l = l.max(h.size() + v.size());
        let lambda = from_quotient(l, &h, &v).unwrap();
        let block = core_and_weight(&lambda);
        prop_assert_eq!(block.core_length, l);
        prop_assert_eq!(block.weight, h.size() + v.size());
        let q = two_quotient(&lambda).unwrap();
        prop_assert_eq!(q.horizontal, h);
        prop_assert_eq!(q.vertical, v);
    }

    #[test]
    fn regularisation_properties(lambda in partition(8, 6)) {
        let reg = lambda.regularise();
        prop_assert_eq!(reg.size(), lambda.size());
        prop_assert!(reg.is_regular(2));
        prop_assert!(reg.dominates(&lambda).unwrap());
        prop_assert_eq!(core_and_weight(&reg), core_and_weight(&lambda));
        if lambda.is_regular(2) {
            prop_assert_eq!(reg, lambda);
        }
    }

    #[test]
    fn divided_powers_match_repeated_single_steps(lambda in partition(5, 5), i in 0u8..2, a in 1usize..4) {
        let i = Residue::try_from(i).unwrap();
        let base = FockVector::basis(lambda.clone());
        let mut repeated = base.clone();
        for _ in 0..a {
            repeated = repeated.apply_divided_power(i, 1);
        }
        let divided = base.apply_divided_power(i, a);
        repeated.sub_scaled(&quantum_factorial(a), &divided);
        prop_assert!(repeated.is_zero());
        for (mu, c) in divided.iter() {
            prop_assert_eq!(c, &LaurentPoly::v_pow(action_exponent(&lambda, mu, i)));
        }
    }
}

/// Every way of assigning the positions of row `i` of `t^μ` to rows of the
/// target, with `counts[i][j]` positions going to row `j`.
fn assignments(counts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for row in counts {
        let mut multiset: Vec<usize> = Vec::new();
        for (j, &c) in row.iter().enumerate() {
            multiset.extend(std::iter::repeat_n(j, c));
        }
        let mut perms = Vec::new();
        permutations(&mut multiset, 0, &mut perms);
        out = out
            .iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend(p);
                    v
                })
            })
            .collect();
    }
    out
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    let mut seen = Vec::new();
    for j in k..items.len() {
        if seen.contains(&items[j]) {
            continue;
        }
        seen.push(items[j]);
        items.swap(k, j);
        permutations(items, k + 1, out);
        items.swap(k, j);
    }
}

/// Row counts of an assignment, shaped like `template`.
fn counts_of(assignment: &[usize], template: &CountTableau) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = template.counts().iter().map(|r| vec![0; r.len()]).collect();
    let mut pos = 0;
    for (i, row) in template.counts().iter().enumerate() {
        let len: usize = row.iter().sum();
        for &j in &assignment[pos..pos + len] {
            out[i][j] += 1;
        }
        pos += len;
    }
    out
}

/// At `q = 1`, `ψ^{d,t} ∘ Θ_T` computed from the coefficient formula agrees
/// with moving `t` entries from row `d+1` to row `d` in every tabloid of the
/// image of `Θ_T`, one tabloid at a time.
#[test]
fn psi_at_q_one_matches_tabloid_oracle() {
    let mut compared = 0;
    for n in 1..=5 {
        for shape in Partition::all(n) {
            for content in Partition::all(n) {
                for t in enumerate_tableaux(&shape, content.parts()) {
                    for mv in RowMoveTarget::all_for(content.parts()) {
                        let mut image: HashMap<Vec<usize>, i64> = HashMap::new();
                        for f in assignments(t.counts()) {
                            let movable: Vec<usize> =
                                (0..f.len()).filter(|&p| f[p] == mv.d).collect();
                            for_each_subset(movable.len(), mv.t, |s| {
                                let mut g = f.clone();
                                for &k in s {
                                    g[movable[k]] = mv.d - 1;
                                }
                                *image.entry(g).or_default() += 1;
                            });
                        }
                        let formula = psi_compose(&t, mv, QParam::One).unwrap();
                        for (g, c) in &image {
                            let v = CountTableau::new(counts_of(g, &t)).unwrap();
                            assert_eq!(
                                formula.coeff(&v),
                                (*c).into(),
                                "T = {t}, d = {}, t = {}, V = {v}",
                                mv.d,
                                mv.t
                            );
                        }
                        let tabloids: usize = formula
                            .iter()
                            .map(|(v, _)| assignments(v.counts()).len())
                            .sum();
                        assert_eq!(tabloids, image.len(), "T = {t}");
                        compared += 1;
                    }
                }
            }
        }
    }
    assert!(compared > 100);
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for x in start..n {
            acc.push(x);
            go(x + 1, n, k, acc, f);
            acc.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), &mut f);
}

#[test]
fn seeds_lie_in_the_specht_module() {
    for n in 1..=6 {
        for nu in Partition::all(n) {
            let seed = specht_seed(&nu).unwrap();
            assert!(!seed.is_zero(), "{nu}");
            assert!(kernel_check(&seed, &nu, QParam::One), "{nu}: {seed}");
        }
    }
}
