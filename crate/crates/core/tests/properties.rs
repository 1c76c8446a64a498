//! Randomized checks of the structural invariants, one module at a time.

use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use laxdesc::delta3::{all_normal_forms, normalize, typable_words, typecheck, Delta3};
use laxdesc::descent::{descent_factorization, is_effective_descent};
use laxdesc::fincat::catalog::{self, random_category};
use laxdesc::fincat::{
    all_functors, all_natural_transformations, check_equivalence, check_functor, check_natural,
    find_left_adjoint, find_natural_iso, functors_equal, nat_equal, random_functor, validate_category, Category,
    FinCategory, Functor, Limits, NatTrans,
};
use laxdesc::finset::{
    all_maps, basic_indexed_category, pullback, sigma_adjunction, BasicIndexed, FinSet, FinSetMap,
};
use laxdesc::fincat::check_adjunction;
use laxdesc::kan::{left_kan, right_kan, Direction};
use laxdesc::laxdesc::{factor_functor, universal_pair};
use laxdesc::monadics::beck_chevalley;
use laxdesc::pseudo::{
    compose_indexed_with_precategory, derived_cells, nerve, validate_indexed, validate_trunc_cosimp, FamIndexed,
    IndexedCategory,
};
use laxdesc::theorems::{full_lax_descent, main_theorem_suite, random_cosimp, random_equivalence};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(r: &mut ChaCha8Rng) -> Arc<FinCategory> {
    loop {
        let c = random_category(r, 3, 7);
        if c.object_count() > 0 {
            return Arc::new(c);
        }
    }
}

fn some_functor(r: &mut ChaCha8Rng, s: &Arc<FinCategory>, t: &Arc<FinCategory>) -> Functor<FinCategory, FinCategory> {
    random_functor(s, t, r, 10_000).unwrap_or_else(|| {
        let x = r.gen_range(0..t.object_count());
        Functor::constant(s.clone(), t.clone(), x)
    })
}

/// A transformation out of `f` into some functor, the identity if the
/// random target admits none.
fn some_nat(
    r: &mut ChaCha8Rng,
    f: &Functor<FinCategory, FinCategory>,
) -> (Functor<FinCategory, FinCategory>, NatTrans<FinCategory, FinCategory>) {
    let g = some_functor(r, f.source(), f.target());
    let all = all_natural_transformations(f, &g, Some(4));
    if all.is_empty() {
        (f.clone(), NatTrans::identity(f))
    } else {
        let k = r.gen_range(0..all.len());
        (g, all[k].clone())
    }
}

fn random_map(r: &mut ChaCha8Rng, max: usize) -> FinSetMap {
    let n = r.gen_range(0..=max);
    let k = r.gen_range(usize::from(n > 0)..=max);
    FinSetMap { cod: k, map: (0..n).map(|_| r.gen_range(0..k)).collect() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_categories_are_categories(seed in any::<u64>()) {
        let c = random_category(&mut rng(seed), 4, 10);
        prop_assert!(validate_category(&c).is_ok());
    }

    #[test]
    fn random_functors_and_transformations_obey_their_laws(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (c, d) = (small(&mut r), small(&mut r));
        let f = some_functor(&mut r, &c, &d);
        prop_assert!(check_functor(&f).is_ok());
        let (_, a) = some_nat(&mut r, &f);
        prop_assert!(check_natural(&a).is_ok());
    }

    #[test]
    fn interchange(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (c, d, e) = (small(&mut r), small(&mut r), small(&mut r));
        let f = some_functor(&mut r, &c, &d);
        let (f1, a) = some_nat(&mut r, &f);
        let (_, a1) = some_nat(&mut r, &f1);
        let g = some_functor(&mut r, &d, &e);
        let (g1, b) = some_nat(&mut r, &g);
        let (_, b1) = some_nat(&mut r, &g1);
        let lhs = a1.vertical(&a).horizontal(&b1.vertical(&b));
        let rhs = a1.horizontal(&b1).vertical(&a.horizontal(&b));
        prop_assert_eq!(nat_equal(&lhs, &rhs), None);
    }

    #[test]
    fn natural_iso_search_is_symmetric(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (c, d) = (small(&mut r), small(&mut r));
        let f = some_functor(&mut r, &c, &d);
        let g = some_functor(&mut r, &c, &d);
        let there = find_natural_iso(&f, &g);
        prop_assert_eq!(there.is_some(), find_natural_iso(&g, &f).is_some());
        if let Some(t) = there {
            prop_assert!(check_natural(&t).is_ok());
            prop_assert!(t.invertibility_witness().is_none());
        }
    }

    #[test]
    fn equivalences_have_left_adjoints(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = small(&mut r);
        // the projection c × (x ≅ y) → c is an equivalence
        let pair = catalog::iso_pair();
        let fat = Arc::new(catalog::product(&c, &pair));
        let (nb, mb) = (pair.object_count(), pair.morphism_count());
        let proj = laxdesc::fincat::FinFunctor {
            source: fat.clone(),
            target: c.clone(),
            object_map: (0..fat.object_count()).map(|x| x / nb).collect(),
            morphism_map: (0..fat.morphism_count()).map(|f| f / mb).collect(),
        }
        .to_functor();
        prop_assert!(check_equivalence(&proj).is_equivalence());
        prop_assert!(find_left_adjoint(&proj).is_some());
        let any = some_functor(&mut r, &c, &c);
        if check_equivalence(&any).is_equivalence() {
            prop_assert!(find_left_adjoint(&any).is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pullbacks_are_deterministic_and_universal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_map(&mut r, 3);
        let k = f.cod;
        let m = r.gen_range(0..=3);
        let g = FinSetMap { cod: k, map: (0..m).map(|_| r.gen_range(0..k.max(1))).collect() };
        prop_assume!(k > 0 || m == 0);
        let a = pullback(&f, &g).unwrap();
        prop_assert_eq!(&a, &pullback(&f, &g).unwrap());
        let set = FinSet::new(9);
        let d = laxdesc::fincat::Diagram {
            nodes: vec![f.dom(), g.dom(), k],
            edges: vec![(0, 2, f.clone()), (1, 2, g.clone())],
        };
        let lim = set.limit(&d).unwrap();
        for c in 0..=2 {
            for x in all_maps(c, f.dom()) {
                for y in all_maps(c, g.dom()) {
                    if x.then(&f) != y.then(&g) {
                        continue;
                    }
                    let cone = laxdesc::fincat::Cone { apex: c, legs: vec![x.clone(), y.clone(), x.then(&f)] };
                    let through: Vec<FinSetMap> = all_maps(c, lim.apex)
                        .into_iter()
                        .filter(|u| u.then(&lim.legs[0]) == x && u.then(&lim.legs[1]) == y)
                        .collect();
                    prop_assert_eq!(through.len(), 1);
                    prop_assert_eq!(set.mediate(&d, &lim, &cone), Some(through[0].clone()));
                }
            }
        }
    }

    #[test]
    fn slice_pseudofunctor_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_map(&mut r, 3);
        let g = FinSetMap { cod: r.gen_range(1..=3), map: vec![] };
        let g = FinSetMap { map: (0..f.cod).map(|_| r.gen_range(0..g.cod)).collect(), ..g };
        let h = FinSetMap { cod: r.gen_range(1..=2), map: vec![] };
        let h = FinSetMap { map: (0..g.cod).map(|_| r.gen_range(0..h.cod)).collect(), ..h };
        let ix = BasicIndexed { bound: 3, base_bound: 3 };
        prop_assert!(validate_indexed(&ix, &[f, g, h]).is_ok());
    }

    #[test]
    fn sigma_is_left_adjoint_to_pullback(seed in any::<u64>()) {
        let f = random_map(&mut rng(seed), 3);
        prop_assert!(check_adjunction(&sigma_adjunction(&f, 3)).is_ok());
    }

    #[test]
    fn beck_chevalley_is_invariant_under_isomorphisms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_map(&mut r, 3);
        let mut perm: Vec<usize> = (0..p.dom()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, r.gen_range(0..=i));
        }
        let sigma = FinSetMap { cod: p.dom(), map: perm };
        let f = BasicIndexed { bound: 3, base_bound: 27 };
        let a = beck_chevalley(&f, &p).unwrap();
        let b = beck_chevalley(&f, &sigma.then(&p)).unwrap();
        prop_assert_eq!(a.invertible, b.invertible);
    }

    #[test]
    fn descent_factorization_commutes(seed in any::<u64>()) {
        let p = random_map(&mut rng(seed), 2);
        let f = BasicIndexed { bound: 2, base_bound: 8 };
        let fac = descent_factorization(&f, &p).unwrap();
        prop_assert!(fac.composite_check);
        prop_assert!(validate_trunc_cosimp(&fac.cosimp).is_ok());
    }

    #[test]
    fn terminal_domain_effectiveness(b in 1usize..=3, point in 0usize..3) {
        prop_assume!(point < b);
        let p = FinSetMap { cod: b, map: vec![point] };
        let f = basic_indexed_category(3);
        let effective = is_effective_descent(&f, &p).unwrap().effective;
        prop_assert_eq!(effective, check_equivalence(&f.reindex(&p)).is_equivalence());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_are_unique_and_stable(k in any::<prop::sample::Index>()) {
        let words = typable_words(6);
        let w = &words[k.index(words.len())];
        let n = normalize(w, None).unwrap();
        prop_assert_eq!(typecheck(w, None).unwrap(), (n.dom, n.cod));
        prop_assert!(n.word.len() <= w.len());
        prop_assert_eq!(normalize(&n.word, Some(n.dom)).unwrap(), n.clone());
        prop_assert_eq!(all_normal_forms(w).len(), 1);
        prop_assert!(Delta3::get().id_of(&n).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn composites_with_nerves_are_valid(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random_category(&mut r, 3, 5);
        let x = random_category(&mut r, 2, 4);
        let fam = FamIndexed { x: Arc::new(x), base_bound: 64 };
        let a = compose_indexed_with_precategory(&fam, &nerve(&c)).unwrap();
        prop_assert!(validate_trunc_cosimp(&a).is_ok());
        let cells = derived_cells(&a);
        for o in a.cat(0).objects() {
            prop_assert!(laxdesc::fincat::Category::id(a.cat(0).as_ref(), &o) == cells.n0.at(&o));
        }
        let t = a.twist(seed);
        prop_assert!(validate_trunc_cosimp(&t).is_ok());
    }

    #[test]
    fn lax_descent_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, _) = random_cosimp(&mut r);
        prop_assert!(validate_trunc_cosimp(&a).is_ok());
        let ld = full_lax_descent(a);
        let up = universal_pair(&ld);
        prop_assert!(laxdesc::fincat::is_conservative(&up.d_a));
        prop_assert!(check_equivalence(&up.d_a).faithful);
        let k = factor_functor(&ld, &up.d_a, &up.psi).unwrap();
        prop_assert_eq!(functors_equal(&k.then(&up.d_a), &up.d_a), None);
        let e = random_equivalence(&mut r, &ld);
        prop_assert!(check_equivalence(&e).is_equivalence());
    }

    #[test]
    fn kan_extensions_are_universal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = small(&mut r);
        let b = small(&mut r);
        let c = small(&mut r);
        let h = some_functor(&mut r, &s, &b);
        let j = some_functor(&mut r, &s, &c);
        let ran = right_kan(&j, &h);
        if let Ok(v) = ran.value() {
            for rr in all_functors(&b, &c, Some(24)) {
                let down = all_natural_transformations(&rr, v, None).len();
                let across = all_natural_transformations(&h.then(&rr), &j, None).len();
                prop_assert_eq!(down, across);
            }
        }
        let lan = left_kan(&j, &h);
        let dual = right_kan(&j.op(), &h.op());
        prop_assert_eq!(lan.exists, dual.exists);
        if let (Ok(l), Ok(d)) = (lan.value(), dual.value()) {
            for x in b.objects() {
                prop_assert_eq!(l.ob(&x), d.ob(&x));
            }
            for f in 0..b.morphism_count() {
                prop_assert_eq!(l.mor(&f), d.mor(&f));
            }
        }
    }

    #[test]
    fn main_theorem_on_random_seeds(seed in any::<u64>()) {
        for d in [Direction::Right, Direction::Left] {
            let s = main_theorem_suite(seed, 2, d);
            prop_assert_eq!(s.counterexamples, 0, "{:?}", s.witnesses);
        }
    }
}
