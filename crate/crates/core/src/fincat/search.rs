use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::{check_adjunction, Adjunction, Category, FinCategory, Functor, NatTrans};

/// Outcome of [`check_equivalence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub faithful: bool,
    pub full: bool,
    pub essentially_surjective: bool,
    pub witness: Option<String>,
}

impl EquivalenceReport {
    pub fn is_equivalence(&self) -> bool {
        self.faithful && self.full && self.essentially_surjective
    }
}

/// The lexicographically first natural isomorphism `f ⇒ g`, if any.
///
/// Objects are assigned in enumeration order and each candidate component is
/// checked against every morphism between already assigned objects.
pub fn find_natural_iso<S: Category, T: Category>(f: &Functor<S, T>, g: &Functor<S, T>) -> Option<NatTrans<S, T>> {
    let s = f.source().clone();
    let t = f.target().clone();
    let obs = s.objects();
    let cands: Vec<Vec<T::Mor>> = obs.iter().map(|x| t.isos(&f.ob(x), &g.ob(x))).collect();
    if cands.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut chosen: Vec<T::Mor> = Vec::with_capacity(obs.len());
    fn ok<S: Category, T: Category>(
        s: &S,
        t: &T,
        f: &Functor<S, T>,
        g: &Functor<S, T>,
        obs: &[S::Obj],
        chosen: &[T::Mor],
    ) -> bool {
        let k = chosen.len() - 1;
        for j in 0..=k {
            let pairs: Vec<(usize, usize)> = if j == k { vec![(k, k)] } else { vec![(j, k), (k, j)] };
            for (a, b) in pairs {
                for m in s.hom(&obs[a], &obs[b]) {
                    if t.compose(&g.mor(&m), &chosen[a]) != t.compose(&chosen[b], &f.mor(&m)) {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go<S: Category, T: Category>(
        s: &S,
        t: &T,
        f: &Functor<S, T>,
        g: &Functor<S, T>,
        obs: &[S::Obj],
        cands: &[Vec<T::Mor>],
        chosen: &mut Vec<T::Mor>,
    ) -> bool {
        let k = chosen.len();
        if k == obs.len() {
            return true;
        }
        for c in &cands[k] {
            chosen.push(c.clone());
            if ok(s, t, f, g, obs, chosen) && go(s, t, f, g, obs, cands, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if !go(s.as_ref(), t.as_ref(), f, g, &obs, &cands, &mut chosen) {
        return None;
    }
    let table: HashMap<S::Obj, T::Mor> = obs.into_iter().zip(chosen).collect();
    Some(NatTrans::from_table(f.clone(), g.clone(), table))
}

/// Faithfulness and fullness on all enumerated hom-sets, and essential
/// surjectivity onto the enumerated target objects.
pub fn check_equivalence<S: Category, T: Category>(f: &Functor<S, T>) -> EquivalenceReport {
    let s = f.source();
    let t = f.target();
    let obs = s.objects();
    let mut rep = EquivalenceReport { faithful: true, full: true, essentially_surjective: true, witness: None };
    'outer: for x in &obs {
        for y in &obs {
            let imgs: Vec<T::Mor> = s.hom(x, y).iter().map(|m| f.mor(m)).collect();
            let mut sorted = imgs.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != imgs.len() {
                rep.faithful = false;
                rep.witness.get_or_insert(format!("not faithful on hom({x:?},{y:?})"));
            }
            for m in t.hom(&f.ob(x), &f.ob(y)) {
                if sorted.binary_search(&m).is_err() {
                    rep.full = false;
                    rep.witness.get_or_insert(format!("not full on hom({x:?},{y:?}): {m:?}"));
                    break;
                }
            }
            if !rep.faithful && !rep.full {
                break 'outer;
            }
        }
    }
    let mut images: Vec<T::Obj> = obs.iter().map(|x| f.ob(x)).collect();
    images.sort();
    images.dedup();
    for y in t.objects() {
        if !images.iter().any(|i| t.is_isomorphic(i, &y)) {
            rep.essentially_surjective = false;
            rep.witness.get_or_insert(format!("{y:?} is not in the essential image"));
            break;
        }
    }
    rep
}

/// Whether every morphism with invertible image is invertible.
pub fn is_conservative<S: Category, T: Category>(f: &Functor<S, T>) -> bool {
    let s = f.source();
    let t = f.target();
    let obs = s.objects();
    for x in &obs {
        for y in &obs {
            for m in s.hom(x, y) {
                if t.is_iso(&f.mor(&m)) && !s.is_iso(&m) {
                    return false;
                }
            }
        }
    }
    true
}

type Universal<S, T> = (<S as Category>::Obj, <T as Category>::Mor);

fn universal_arrow<S: Category, T: Category>(g: &Functor<S, T>, t: &T::Obj) -> Option<Universal<S, T>> {
    let s = g.source();
    let tc = g.target();
    let obs = s.objects();
    let targets: Vec<(S::Obj, T::Mor)> = obs
        .iter()
        .flat_map(|x| tc.hom(t, &g.ob(x)).into_iter().map(move |f| (x.clone(), f)))
        .collect();
    for (s0, eta) in &targets {
        let universal = targets.iter().all(|(x, f)| {
            let mut n = 0;
            for u in s.hom(s0, x) {
                if tc.compose(&g.mor(&u), eta) == *f {
                    n += 1;
                    if n > 1 {
                        break;
                    }
                }
            }
            n == 1
        });
        if universal {
            return Some((s0.clone(), eta.clone()));
        }
    }
    None
}

/// The left adjoint of `g`, assembled from initial objects of the comma
/// categories `(t ↓ g)`. Ties are broken by enumeration order.
pub fn find_left_adjoint<S: Category, T: Category>(g: &Functor<S, T>) -> Option<Adjunction<S, T>> {
    let mut table: HashMap<T::Obj, Universal<S, T>> = HashMap::new();
    for t in g.target().objects() {
        table.insert(t.clone(), universal_arrow(g, &t)?);
    }
    let table = Arc::new(Mutex::new(table));
    let lookup = {
        let table = table.clone();
        let g = g.clone();
        move |t: &T::Obj| -> Universal<S, T> {
            if let Some(u) = table.lock().unwrap().get(t) {
                return u.clone();
            }
            let u = universal_arrow(&g, t).unwrap_or_else(|| panic!("no universal arrow at {t:?}"));
            table.lock().unwrap().insert(t.clone(), u.clone());
            u
        }
    };
    let lookup = Arc::new(lookup);
    let (l1, l2, l3, l4) = (lookup.clone(), lookup.clone(), lookup.clone(), lookup.clone());
    let (g2, g3) = (g.clone(), g.clone());
    let left = Functor::new(
        g.target().clone(),
        g.source().clone(),
        move |t| l1(t).0,
        move |h| {
            let tc = g2.target();
            let (a, b) = (tc.dom(h), tc.cod(h));
            let (la, eta_a) = l2(&a);
            let (lb, eta_b) = l2(&b);
            let want = tc.compose(&eta_b, h);
            g2.source()
                .hom(&la, &lb)
                .into_iter()
                .find(|u| tc.compose(&g2.mor(u), &eta_a) == want)
                .expect("universal arrow factorization")
        },
    );
    let rl = left.then(g);
    let unit = NatTrans::new(Functor::identity(g.target().clone()), rl, move |t| l3(t).1);
    let lr = g.then(&left);
    let counit = NatTrans::new(lr, Functor::identity(g.source().clone()), move |x| {
        let tc = g3.target();
        let gx = g3.ob(x);
        let (lgx, eta) = l4(&gx);
        let idg = tc.id(&gx);
        g3.source()
            .hom(&lgx, x)
            .into_iter()
            .find(|u| tc.compose(&g3.mor(u), &eta) == idg)
            .expect("counit factorization")
    });
    let adj = Adjunction { left, right: g.clone(), unit, counit };
    check_adjunction(&adj).is_ok().then_some(adj)
}

/// A random functor out of a table category, found by randomized
/// backtracking. `None` if the budget of visited nodes runs out.
pub fn random_functor<T: Category, R: Rng>(
    s: &Arc<FinCategory>,
    t: &Arc<T>,
    rng: &mut R,
    budget: usize,
) -> Option<Functor<FinCategory, T>> {
    let tobs = t.objects();
    if tobs.is_empty() && s.object_count() > 0 {
        return None;
    }
    let m = s.morphism_count();
    let mors = s.morphisms();
    let mut steps = 0usize;
    for _attempt in 0..8 {
        let ob: Vec<T::Obj> = (0..s.object_count()).map(|_| tobs.choose(rng).unwrap().clone()).collect();
        let mut assigned: Vec<Option<T::Mor>> = vec![None; m];
        for x in 0..s.object_count() {
            assigned[s.identity_of(x)] = Some(t.id(&ob[x]));
        }
        let order: Vec<usize> = (0..m).filter(|f| !s.is_identity(*f)).collect();
        let mut cands: Vec<Vec<T::Mor>> = order
            .iter()
            .map(|&f| {
                let mut c = t.hom(&ob[mors[f].0], &ob[mors[f].1]);
                c.shuffle(rng);
                c
            })
            .collect();
        fn consistent<T: Category>(s: &FinCategory, t: &T, assigned: &[Option<T::Mor>], f: usize) -> bool {
            let mors = s.morphisms();
            for g in 0..assigned.len() {
                for (a, b) in [(g, f), (f, g)] {
                    if mors[b].1 != mors[a].0 {
                        continue;
                    }
                    let ab = s.compose(&a, &b);
                    if let (Some(fa), Some(fb), Some(fab)) = (&assigned[a], &assigned[b], &assigned[ab]) {
                        if t.compose(fa, fb) != *fab {
                            return false;
                        }
                    }
                }
            }
            true
        }
        fn go<T: Category>(
            s: &FinCategory,
            t: &T,
            order: &[usize],
            cands: &mut [Vec<T::Mor>],
            assigned: &mut Vec<Option<T::Mor>>,
            k: usize,
            steps: &mut usize,
            budget: usize,
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let f = order[k];
            let options = cands[k].clone();
            for c in options {
                *steps += 1;
                if *steps > budget {
                    return false;
                }
                assigned[f] = Some(c);
                if consistent(s, t, assigned, f) && go(s, t, order, cands, assigned, k + 1, steps, budget) {
                    return true;
                }
                assigned[f] = None;
            }
            false
        }
        let ok = (0..s.object_count()).all(|x| consistent(s.as_ref(), t.as_ref(), &assigned, s.identity_of(x)));
        if ok && go(s.as_ref(), t.as_ref(), &order, &mut cands, &mut assigned, 0, &mut steps, budget) {
            let mm: Vec<T::Mor> = assigned.into_iter().map(|a| a.unwrap()).collect();
            return Some(Functor::new(s.clone(), t.clone(), move |x| ob[*x].clone(), move |f| mm[*f].clone()));
        }
        if steps > budget {
            return None;
        }
    }
    None
}

/// Every natural transformation `f ⇒ g`, in lexicographic order of the
/// component lists. Stops after `limit` results when given.
pub fn all_natural_transformations<S: Category, T: Category>(
    f: &Functor<S, T>,
    g: &Functor<S, T>,
    limit: Option<usize>,
) -> Vec<NatTrans<S, T>> {
    let s = f.source().clone();
    let t = f.target().clone();
    let obs = s.objects();
    let cands: Vec<Vec<T::Mor>> = obs.iter().map(|x| t.hom(&f.ob(x), &g.ob(x))).collect();
    let homs: Vec<Vec<Vec<S::Mor>>> =
        obs.iter().map(|x| obs.iter().map(|y| s.hom(x, y)).collect()).collect();
    let mut out: Vec<Vec<T::Mor>> = Vec::new();
    let mut chosen: Vec<T::Mor> = Vec::with_capacity(obs.len());
    #[allow(clippy::too_many_arguments)]
    fn go<S: Category, T: Category>(
        t: &T,
        f: &Functor<S, T>,
        g: &Functor<S, T>,
        homs: &[Vec<Vec<S::Mor>>],
        cands: &[Vec<T::Mor>],
        chosen: &mut Vec<T::Mor>,
        out: &mut Vec<Vec<T::Mor>>,
        limit: Option<usize>,
    ) {
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        let k = chosen.len();
        if k == cands.len() {
            out.push(chosen.clone());
            return;
        }
        for c in &cands[k] {
            chosen.push(c.clone());
            let ok = (0..=k).all(|j| {
                let pairs: &[(usize, usize)] = if j == k { &[(k, k)] } else { &[(j, k), (k, j)] };
                pairs.iter().all(|&(a, b)| {
                    homs[a][b]
                        .iter()
                        .all(|m| t.compose(&g.mor(m), &chosen[a]) == t.compose(&chosen[b], &f.mor(m)))
                })
            });
            if ok {
                go(t, f, g, homs, cands, chosen, out, limit);
            }
            chosen.pop();
        }
    }
    go(t.as_ref(), f, g, &homs, &cands, &mut chosen, &mut out, limit);
    out.into_iter()
        .map(|comps| {
            let table: HashMap<S::Obj, T::Mor> = obs.iter().cloned().zip(comps).collect();
            NatTrans::from_table(f.clone(), g.clone(), table)
        })
        .collect()
}

/// Every functor out of a table category, objects assigned in lexicographic
/// order. Stops after `limit` results when given.
pub fn all_functors<T: Category>(
    s: &Arc<FinCategory>,
    t: &Arc<T>,
    limit: Option<usize>,
) -> Vec<Functor<FinCategory, T>> {
    let tobs = t.objects();
    let n = s.object_count();
    let mors = s.morphisms();
    let order: Vec<usize> = (0..mors.len()).filter(|f| !s.is_identity(*f)).collect();
    let mut out = Vec::new();
    let full = |out: &Vec<Functor<FinCategory, T>>| limit.is_some_and(|l| out.len() >= l);
    let mut obs = vec![0usize; n];
    loop {
        if full(&out) {
            break;
        }
        let ob: Vec<T::Obj> = obs.iter().map(|&i| tobs[i].clone()).collect();
        let mut assigned: Vec<Option<T::Mor>> = vec![None; mors.len()];
        for x in 0..n {
            assigned[s.identity_of(x)] = Some(t.id(&ob[x]));
        }
        let cands: Vec<Vec<T::Mor>> =
            order.iter().map(|&f| t.hom(&ob[mors[f].0], &ob[mors[f].1])).collect();
        let mut found: Vec<Vec<T::Mor>> = Vec::new();
        enumerate_assignments(s, t.as_ref(), &order, &cands, &mut assigned, 0, &mut found, |k| {
            limit.is_some_and(|l| out.len() + k >= l)
        });
        for mm in found {
            let ob = ob.clone();
            out.push(Functor::new(s.clone(), t.clone(), move |x| ob[*x].clone(), move |f| mm[*f].clone()));
        }
        if n == 0 || tobs.is_empty() {
            break;
        }
        // odometer over object assignments
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            obs[i] += 1;
            if obs[i] < tobs.len() {
                break;
            }
            obs[i] = 0;
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_assignments<T: Category>(
    s: &FinCategory,
    t: &T,
    order: &[usize],
    cands: &[Vec<T::Mor>],
    assigned: &mut Vec<Option<T::Mor>>,
    k: usize,
    found: &mut Vec<Vec<T::Mor>>,
    stop: impl Fn(usize) -> bool + Copy,
) {
    if stop(found.len()) {
        return;
    }
    if k == order.len() {
        if (0..assigned.len()).all(|f| composition_ok(s, t, assigned, f)) {
            found.push(assigned.iter().map(|a| a.clone().unwrap()).collect());
        }
        return;
    }
    let f = order[k];
    for c in &cands[k] {
        assigned[f] = Some(c.clone());
        if composition_ok(s, t, assigned, f) {
            enumerate_assignments(s, t, order, cands, assigned, k + 1, found, stop);
        }
        assigned[f] = None;
    }
}

fn composition_ok<T: Category>(s: &FinCategory, t: &T, assigned: &[Option<T::Mor>], f: usize) -> bool {
    let mors = s.morphisms();
    for g in 0..assigned.len() {
        for (a, b) in [(g, f), (f, g)] {
            if mors[b].1 != mors[a].0 {
                continue;
            }
            let ab = s.compose(&a, &b);
            if let (Some(fa), Some(fb), Some(fab)) = (&assigned[a], &assigned[b], &assigned[ab]) {
                if t.compose(fa, fb) != *fab {
                    return false;
                }
            }
        }
    }
    true
}
