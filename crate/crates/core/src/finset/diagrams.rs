use std::sync::Arc;

use super::{all_maps, FinSet, FinSetMap};
use crate::fincat::{all_functors, Adjunction, Category, Cats, FinCategory, FinFunctor, Functor, Limits, NatTrans};
use crate::kan::{factor_through_lan, left_kan};
use crate::pseudo::{identity_cell, IndexedCategory};

/// A functor `e → FinSet` as tables: a size per object, a map per morphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetDiagram {
    pub sizes: Vec<usize>,
    pub maps: Vec<FinSetMap>,
}

/// A natural transformation between set diagrams on the same shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetNat {
    pub src: SetDiagram,
    pub dst: SetDiagram,
    pub comps: Vec<FinSetMap>,
}

/// `Cat[e, FinSet]`, with `objects` listing the diagrams whose sets have at
/// most `bound` elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetDiagrams {
    pub shape: Arc<FinCategory>,
    pub bound: usize,
}

impl SetDiagrams {
    pub fn new(shape: Arc<FinCategory>, bound: usize) -> Self {
        SetDiagrams { shape, bound }
    }

    /// The diagram as a functor into finite sets.
    pub fn as_functor(&self, d: &SetDiagram) -> Functor<FinCategory, FinSet> {
        let (s, m) = (d.sizes.clone(), d.maps.clone());
        Functor::new(self.shape.clone(), Arc::new(FinSet::new(self.bound)), move |x| s[*x], move |f| m[*f].clone())
    }

    pub fn from_functor(&self, f: &Functor<FinCategory, FinSet>) -> SetDiagram {
        SetDiagram {
            sizes: (0..self.shape.object_count()).map(|x| f.ob(&x)).collect(),
            maps: (0..self.shape.morphism_count()).map(|u| f.mor(&u)).collect(),
        }
    }

    pub fn as_nat(&self, a: &SetNat) -> NatTrans<FinCategory, FinSet> {
        let comps = a.comps.clone();
        NatTrans::new(self.as_functor(&a.src), self.as_functor(&a.dst), move |x| comps[*x].clone())
    }

    pub fn from_nat(&self, a: &NatTrans<FinCategory, FinSet>) -> SetNat {
        SetNat {
            src: self.from_functor(a.source()),
            dst: self.from_functor(a.target()),
            comps: (0..self.shape.object_count()).map(|x| a.at(&x)).collect(),
        }
    }

    fn is_natural(&self, d: &SetDiagram, e: &SetDiagram, comps: &[FinSetMap], upto: usize) -> bool {
        self.shape.morphisms().iter().enumerate().all(|(u, &(x, y))| {
            x >= upto || y >= upto || d.maps[u].then(&comps[y]) == comps[x].then(&e.maps[u])
        })
    }
}

impl Category for SetDiagrams {
    type Obj = SetDiagram;
    type Mor = SetNat;

    fn dom(&self, f: &SetNat) -> SetDiagram {
        f.src.clone()
    }
    fn cod(&self, f: &SetNat) -> SetDiagram {
        f.dst.clone()
    }
    fn id(&self, x: &SetDiagram) -> SetNat {
        SetNat { src: x.clone(), dst: x.clone(), comps: x.sizes.iter().map(|&n| FinSetMap::identity(n)).collect() }
    }
    fn compose(&self, g: &SetNat, f: &SetNat) -> SetNat {
        SetNat {
            src: f.src.clone(),
            dst: g.dst.clone(),
            comps: f.comps.iter().zip(&g.comps).map(|(a, b)| a.then(b)).collect(),
        }
    }
    fn hom(&self, d: &SetDiagram, e: &SetDiagram) -> Vec<SetNat> {
        let n = self.shape.object_count();
        let cands: Vec<Vec<FinSetMap>> = (0..n).map(|x| all_maps(d.sizes[x], e.sizes[x])).collect();
        let mut out = Vec::new();
        let mut cur: Vec<FinSetMap> = Vec::with_capacity(n);
        fn go(
            c: &SetDiagrams,
            d: &SetDiagram,
            e: &SetDiagram,
            cands: &[Vec<FinSetMap>],
            cur: &mut Vec<FinSetMap>,
            out: &mut Vec<SetNat>,
        ) {
            let k = cur.len();
            if k == cands.len() {
                out.push(SetNat { src: d.clone(), dst: e.clone(), comps: cur.clone() });
                return;
            }
            for m in &cands[k] {
                cur.push(m.clone());
                if c.is_natural(d, e, cur, k + 1) {
                    go(c, d, e, cands, cur, out);
                }
                cur.pop();
            }
        }
        go(self, d, e, &cands, &mut cur, &mut out);
        out
    }
    fn objects(&self) -> Vec<SetDiagram> {
        all_functors(&self.shape, &Arc::new(FinSet::new(self.bound)), None)
            .iter()
            .map(|f| self.from_functor(f))
            .collect()
    }
    fn inverse(&self, f: &SetNat) -> Option<SetNat> {
        let comps = f.comps.iter().map(|m| m.inverse()).collect::<Option<Vec<_>>>()?;
        Some(SetNat { src: f.dst.clone(), dst: f.src.clone(), comps })
    }
    fn is_iso(&self, f: &SetNat) -> bool {
        f.comps.iter().all(|m| m.is_bijective())
    }
    fn isos(&self, x: &SetDiagram, y: &SetDiagram) -> Vec<SetNat> {
        if x.sizes != y.sizes {
            return Vec::new();
        }
        self.hom(x, y).into_iter().filter(|f| self.is_iso(f)).collect()
    }
}

impl Limits for SetDiagrams {}

/// Precomposition `Cat[p, Set]` along `p: e → e'`.
pub fn restrict(p: &FinFunctor, bound: usize) -> Functor<SetDiagrams, SetDiagrams> {
    let src = Arc::new(SetDiagrams::new(p.target.clone(), bound));
    let dst = Arc::new(SetDiagrams::new(p.source.clone(), bound));
    let (p1, p2) = (p.clone(), p.clone());
    let restrict_ob = move |d: &SetDiagram| SetDiagram {
        sizes: p1.object_map.iter().map(|&x| d.sizes[x]).collect(),
        maps: p1.morphism_map.iter().map(|&u| d.maps[u].clone()).collect(),
    };
    let ro = restrict_ob.clone();
    Functor::new(src, dst, restrict_ob, move |a: &SetNat| SetNat {
        src: ro(&a.src),
        dst: ro(&a.dst),
        comps: p2.object_map.iter().map(|&x| a.comps[x].clone()).collect(),
    })
}

/// `lan_p ⊣ p*`, with the left adjoint computed as a pointwise left Kan
/// extension into finite sets.
pub fn lan_along(p: &FinFunctor, bound: usize) -> Adjunction<SetDiagrams, SetDiagrams> {
    let right = restrict(p, bound);
    let big = Arc::new(SetDiagrams::new(p.target.clone(), bound));
    let small = Arc::new(SetDiagrams::new(p.source.clone(), bound));
    let h = p.to_functor();
    let kan_of = {
        let (small, h) = (small.clone(), h.clone());
        move |d: &SetDiagram| left_kan(&small.as_functor(d), &h)
    };
    let left = {
        let (k1, k2, k3) = (kan_of.clone(), kan_of.clone(), kan_of.clone());
        let (b1, b2, sm) = (big.clone(), big.clone(), small.clone());
        Functor::new(
            small.clone(),
            big.clone(),
            move |d| b1.from_functor(k1(d).value().expect("colimits of finite sets exist")),
            move |a: &SetNat| {
                let (kd, ke) = (k2(&a.src), k3(&a.dst));
                let eta = ke.universal().unwrap();
                let alpha = eta.vertical(&sm.as_nat(a));
                let beta = factor_through_lan(&kd, ke.value().unwrap(), &alpha).expect("induced map");
                b2.from_nat(&beta)
            },
        )
        .cached()
    };
    let unit = {
        let (k, sm) = (kan_of.clone(), small.clone());
        NatTrans::new(Functor::identity(small.clone()), left.then(&right), move |d: &SetDiagram| {
            sm.from_nat(k(d).universal().unwrap())
        })
    };
    let counit = {
        let (sm, bg, r, h) = (small.clone(), big.clone(), right.clone(), h.clone());
        NatTrans::new(right.then(&left), Functor::identity(big.clone()), move |e: &SetDiagram| {
            let pe = r.ob(e);
            let ke = left_kan(&sm.as_functor(&pe), &h);
            let ef = bg.as_functor(e);
            let id = NatTrans::new(sm.as_functor(&pe), h.then(&ef), {
                let pe = pe.clone();
                move |x| FinSetMap::identity(pe.sizes[*x])
            });
            bg.from_nat(&factor_through_lan(&ke, &ef, &id).expect("induced map"))
        })
    };
    Adjunction { left, right, unit, counit }
}

/// `e ↦ Cat[e, FinSet]` over a catalog of finite categories, reindexing by
/// precomposition, with identity coherence.
#[derive(Clone, Debug)]
pub struct DiagramIndexed {
    pub cats: Arc<Cats>,
    pub bound: usize,
}

/// The diagram-indexed category over the given catalog.
pub fn diagram_indexed_category(catalog: Vec<FinCategory>, bound: usize) -> DiagramIndexed {
    DiagramIndexed { cats: Arc::new(Cats::new(catalog)), bound }
}

impl IndexedCategory for DiagramIndexed {
    type Base = Cats;
    type Fiber = SetDiagrams;

    fn base(&self) -> Arc<Cats> {
        self.cats.clone()
    }
    fn fiber(&self, x: &Arc<FinCategory>) -> Arc<SetDiagrams> {
        Arc::new(SetDiagrams::new(x.clone(), self.bound))
    }
    fn reindex(&self, f: &FinFunctor) -> Functor<SetDiagrams, SetDiagrams> {
        restrict(f, self.bound)
    }
    fn coh_comp(&self, f: &FinFunctor, g: &FinFunctor) -> NatTrans<SetDiagrams, SetDiagrams> {
        identity_cell(self.reindex(g).then(&self.reindex(f)), self.reindex(&f.then(g)))
    }
    fn coh_id(&self, x: &Arc<FinCategory>) -> NatTrans<SetDiagrams, SetDiagrams> {
        identity_cell(Functor::identity(self.fiber(x)), self.reindex(&FinFunctor::identity(x.clone())))
    }
    fn left_adjoint(&self, f: &FinFunctor) -> Option<Adjunction<SetDiagrams, SetDiagrams>> {
        Some(lan_along(f, self.bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{catalog, check_adjunction, check_functor};
    use crate::pseudo::validate_indexed;

    fn collapse() -> FinFunctor {
        let two = Arc::new(FinCategory::discrete(2));
        FinFunctor::new(two, Arc::new(FinCategory::terminal()), vec![0, 0], vec![0, 0]).unwrap()
    }

    #[test]
    fn fibers_of_small_shapes() {
        let one = SetDiagrams::new(Arc::new(FinCategory::terminal()), 3);
        assert_eq!(one.objects().len(), 4);
        let pairs = SetDiagrams::new(Arc::new(FinCategory::discrete(2)), 2);
        assert_eq!(pairs.objects().len(), 9);
        // monotone-free count: diagrams on the arrow with sets of size ≤ 1
        let arrow = SetDiagrams::new(Arc::new(catalog::arrow()), 1);
        assert_eq!(arrow.objects().len(), 3);
    }

    #[test]
    fn restriction_to_endpoints() {
        let arrow = Arc::new(catalog::arrow());
        let two = Arc::new(FinCategory::discrete(2));
        let ends = FinFunctor::new(two, arrow.clone(), vec![0, 1], vec![arrow.identity_of(0), arrow.identity_of(1)])
            .unwrap();
        let r = restrict(&ends, 2);
        assert!(check_functor(&r).is_ok());
        for d in r.source().objects() {
            assert_eq!(r.ob(&d).sizes, d.sizes);
        }
    }

    #[test]
    fn lan_along_collapse() {
        let adj = lan_along(&collapse(), 2);
        assert!(check_adjunction(&adj).is_ok());
        let f = SetDiagram { sizes: vec![0, 1], maps: vec![FinSetMap::identity(0), FinSetMap::identity(1)] };
        let l = adj.left.ob(&f);
        assert_eq!(l.sizes, vec![1]);
        assert_eq!(adj.right.ob(&l).sizes, vec![1, 1]);
    }

    #[test]
    fn indexed_axioms() {
        let ix = diagram_indexed_category(vec![FinCategory::terminal(), FinCategory::discrete(2)], 1);
        let b = ix.base();
        let mut mors = Vec::new();
        for x in b.objects() {
            for y in b.objects() {
                mors.extend(b.hom(&x, &y));
            }
        }
        assert!(validate_indexed(&ix, &mors).is_ok());
        assert!(ix.left_adjoint(&collapse()).is_some());
    }
}
