use std::collections::HashMap;
use std::sync::Arc;

use super::{FinSet, FinSetMap, Slice, SliceMap, SliceObj};
use crate::fincat::{Adjunction, Functor, NatTrans};
use crate::pseudo::IndexedCategory;

/// Pairs `(i, u)` with `f(i) = leg(u)`, lexicographically: the chosen
/// pullback of `w` along `f`, with the position of every pair.
fn pullback_pairs(f: &FinSetMap, w: &SliceObj) -> (SliceObj, HashMap<(usize, usize), usize>) {
    let mut leg = Vec::new();
    let mut pos = HashMap::new();
    for i in 0..f.dom() {
        for (u, &b) in w.leg.iter().enumerate() {
            if f.map[i] == b {
                pos.insert((i, u), leg.len());
                leg.push(i);
            }
        }
    }
    (SliceObj { leg }, pos)
}

fn pairs_of(f: &FinSetMap, w: &SliceObj) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..f.dom() {
        for (u, &b) in w.leg.iter().enumerate() {
            if f.map[i] == b {
                out.push((i, u));
            }
        }
    }
    out
}

/// `f^*: Set/cod f → Set/dom f`, by the chosen pullbacks.
pub fn change_of_base(f: &FinSetMap, bound: usize) -> Functor<Slice, Slice> {
    let (f1, f2) = (f.clone(), f.clone());
    Functor::new(
        Arc::new(Slice::new(f.cod, bound)),
        Arc::new(Slice::new(f.dom(), bound)),
        move |w| pullback_pairs(&f1, w).0,
        move |m: &SliceMap| {
            let (src, _) = pullback_pairs(&f2, &m.src);
            let (dst, pos) = pullback_pairs(&f2, &m.dst);
            let map = pairs_of(&f2, &m.src).into_iter().map(|(i, u)| pos[&(i, m.map[u])]).collect();
            SliceMap { src, dst, map }
        },
    )
}

/// `f^*∘g^* ⇒ (g∘f)^*`: the pair `(i, (j, u))` goes to `(i, u)`.
pub fn coherence_iso(f: &FinSetMap, g: &FinSetMap, bound: usize) -> NatTrans<Slice, Slice> {
    let gf = f.then(g);
    let src = change_of_base(g, bound).then(&change_of_base(f, bound));
    let dst = change_of_base(&gf, bound);
    let (f, g) = (f.clone(), g.clone());
    NatTrans::new(src, dst, move |w| {
        let gw = pullback_pairs(&g, w).0;
        let outer = pairs_of(&f, &gw);
        let inner = pairs_of(&g, w);
        let (target, pos) = pullback_pairs(&gf, w);
        let map = outer.iter().map(|&(i, k)| pos[&(i, inner[k].1)]).collect();
        SliceMap { src: pullback_pairs(&f, &gw).0, dst: target, map }
    })
}

/// `id ⇒ id^*`: `u` goes to `(leg u, u)`.
pub fn coherence_id(n: usize, bound: usize) -> NatTrans<Slice, Slice> {
    let idn = FinSetMap::identity(n);
    let slice = Arc::new(Slice::new(n, bound));
    let dst = change_of_base(&idn, bound);
    NatTrans::new(Functor::identity(slice), dst, move |w: &SliceObj| {
        let (target, pos) = pullback_pairs(&idn, w);
        let map = w.leg.iter().enumerate().map(|(u, &b)| pos[&(b, u)]).collect();
        SliceMap { src: w.clone(), dst: target, map }
    })
}

/// `Σ_f: Set/dom f → Set/cod f`, composition with `f`.
pub fn postcompose(f: &FinSetMap, bound: usize) -> Functor<Slice, Slice> {
    let (f1, f2) = (f.clone(), f.clone());
    let push = move |f: &FinSetMap, w: &SliceObj| SliceObj { leg: w.leg.iter().map(|&a| f.map[a]).collect() };
    let push2 = push.clone();
    Functor::new(
        Arc::new(Slice::new(f.dom(), bound)),
        Arc::new(Slice::new(f.cod, bound)),
        move |w| push(&f1, w),
        move |m: &SliceMap| SliceMap { src: push2(&f2, &m.src), dst: push2(&f2, &m.dst), map: m.map.clone() },
    )
}

/// `Σ_f ⊣ f^*` with unit `u ↦ (leg u, u)` and counit `(i, u) ↦ u`.
pub fn sigma_adjunction(f: &FinSetMap, bound: usize) -> Adjunction<Slice, Slice> {
    let left = postcompose(f, bound);
    let right = change_of_base(f, bound);
    let unit = {
        let f = f.clone();
        NatTrans::new(Functor::identity(left.source().clone()), left.then(&right), move |w: &SliceObj| {
            let pushed = SliceObj { leg: w.leg.iter().map(|&a| f.map[a]).collect() };
            let (target, pos) = pullback_pairs(&f, &pushed);
            let map = w.leg.iter().enumerate().map(|(u, &a)| pos[&(a, u)]).collect();
            SliceMap { src: w.clone(), dst: target, map }
        })
    };
    let counit = {
        let f = f.clone();
        NatTrans::new(right.then(&left), Functor::identity(right.source().clone()), move |z: &SliceObj| {
            let pairs = pairs_of(&f, z);
            let src = SliceObj { leg: pairs.iter().map(|&(i, _)| f.map[i]).collect() };
            SliceMap { src, dst: z.clone(), map: pairs.into_iter().map(|(_, u)| u).collect() }
        })
    };
    Adjunction { left, right, unit, counit }
}

/// The basic indexed category `Set/−` over finite sets. Fibers are the
/// slices with enumeration bound `bound`; the base lists sets up to
/// `base_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicIndexed {
    pub bound: usize,
    pub base_bound: usize,
}

pub fn basic_indexed_category(bound: usize) -> BasicIndexed {
    BasicIndexed { bound, base_bound: 3 }
}

impl IndexedCategory for BasicIndexed {
    type Base = FinSet;
    type Fiber = Slice;

    fn base(&self) -> Arc<FinSet> {
        Arc::new(FinSet::new(self.base_bound))
    }
    fn fiber(&self, x: &usize) -> Arc<Slice> {
        Arc::new(Slice::new(*x, self.bound))
    }
    fn reindex(&self, f: &FinSetMap) -> Functor<Slice, Slice> {
        change_of_base(f, self.bound)
    }
    fn coh_comp(&self, f: &FinSetMap, g: &FinSetMap) -> NatTrans<Slice, Slice> {
        coherence_iso(f, g, self.bound)
    }
    fn coh_id(&self, x: &usize) -> NatTrans<Slice, Slice> {
        coherence_id(*x, self.bound)
    }
    fn left_adjoint(&self, f: &FinSetMap) -> Option<Adjunction<Slice, Slice>> {
        Some(sigma_adjunction(f, self.bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::Category;
    use crate::fincat::{check_adjunction, check_functor, check_natural, find_natural_iso};
    use crate::finset::all_maps;
    use crate::pseudo::validate_indexed;

    #[test]
    fn change_of_base_examples() {
        let f = FinSetMap::new(1, vec![0, 0]).unwrap();
        let fs = change_of_base(&f, 3);
        assert_eq!(fs.ob(&SliceObj::new(vec![0, 0, 0])).total(), 6);
        assert!(check_functor(&fs).is_ok());
        let id = FinSetMap::identity(2);
        let ids = change_of_base(&id, 2);
        assert!(find_natural_iso(&Functor::identity(ids.source().clone()), &ids).is_some());
        let inj = FinSetMap::new(3, vec![0, 2]).unwrap();
        let w = SliceObj::new(vec![2, 1, 0, 2]);
        assert_eq!(change_of_base(&inj, 4).ob(&w).leg, vec![0, 1, 1]);
    }

    #[test]
    fn coherence_components_bijective() {
        for f in all_maps(2, 2).into_iter().chain(all_maps(3, 2)) {
            for g in all_maps(2, 1).into_iter().chain(all_maps(2, 3)) {
                let c = coherence_iso(&f, &g, 3);
                assert!(check_natural(&c).is_ok());
                for w in c.source().source().objects() {
                    assert!(c.at(&w).underlying().is_bijective());
                }
            }
        }
    }

    #[test]
    fn pseudofunctor_axioms_small() {
        let ix = BasicIndexed { bound: 2, base_bound: 2 };
        let maps: Vec<FinSetMap> = (0..=2).flat_map(|n| (0..=2).flat_map(move |m| all_maps(n, m))).collect();
        assert!(validate_indexed(&ix, &maps).is_ok());
    }

    #[test]
    fn sigma_adjunction_triangles() {
        let f = FinSetMap::new(1, vec![0, 0]).unwrap();
        assert!(check_adjunction(&sigma_adjunction(&f, 3)).is_ok());
        let g = FinSetMap::new(3, vec![2, 0]).unwrap();
        assert!(check_adjunction(&sigma_adjunction(&g, 3)).is_ok());
    }
}
