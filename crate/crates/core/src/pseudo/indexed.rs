use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::fincat::{
    find_left_adjoint, Adjunction, Category, FinCategory, FinFunctor, Functor, LawReport, NatTrans, PowerCat,
};
use crate::finset::{FinSet, FinSetMap};

pub type BaseObj<F> = <<F as IndexedCategory>::Base as Category>::Obj;
pub type BaseMor<F> = <<F as IndexedCategory>::Base as Category>::Mor;
pub type FiberObj<F> = <<F as IndexedCategory>::Fiber as Category>::Obj;
pub type FiberMor<F> = <<F as IndexedCategory>::Fiber as Category>::Mor;

/// A pseudofunctor `F: C^op → Cat`.
///
/// For `f: u → v`, `reindex(f)` is `F(f): F(v) → F(u)`. For `f: u → v` and
/// `g: v → w`, `coh_comp(f, g)` is the invertible cell `F(f)∘F(g) ⇒ F(g∘f)`;
/// `coh_id(x)` is `id ⇒ F(id_x)`.
pub trait IndexedCategory: Send + Sync + 'static {
    type Base: Category;
    type Fiber: Category;

    fn base(&self) -> Arc<Self::Base>;
    fn fiber(&self, x: &BaseObj<Self>) -> Arc<Self::Fiber>;
    fn reindex(&self, f: &BaseMor<Self>) -> Functor<Self::Fiber, Self::Fiber>;
    fn coh_comp(&self, f: &BaseMor<Self>, g: &BaseMor<Self>) -> NatTrans<Self::Fiber, Self::Fiber>;
    fn coh_id(&self, x: &BaseObj<Self>) -> NatTrans<Self::Fiber, Self::Fiber>;

    /// A left adjoint `F(f)! ⊣ F(f)`. The default searches for one.
    fn left_adjoint(&self, f: &BaseMor<Self>) -> Option<Adjunction<Self::Fiber, Self::Fiber>> {
        find_left_adjoint(&self.reindex(f))
    }
}

/// Invertibility of the coherence cells and both pseudofunctor axioms, over
/// the composable pairs and triples of `morphisms` and the enumerated
/// objects of the fibers.
pub fn validate_indexed<F: IndexedCategory>(ix: &F, morphisms: &[BaseMor<F>]) -> LawReport {
    let mut r = LawReport::default();
    let b = ix.base();
    for f in morphisms {
        let (u, v) = (b.dom(f), b.cod(f));
        let fu = ix.fiber(&u);
        let ff = ix.reindex(f);
        let (iu, iv) = (ix.coh_id(&u), ix.coh_id(&v));
        let (lc, rc) = (ix.coh_comp(&b.id(&u), f), ix.coh_comp(f, &b.id(&v)));
        for o in ix.fiber(&v).objects() {
            let fo = ff.ob(&o);
            let lhs = fu.compose(&lc.at(&o), &iu.at(&fo));
            if lhs != fu.id(&fo) {
                r.push(format!("left identity axiom fails at {f:?}, {o:?}"));
            }
            let rhs = fu.compose(&rc.at(&o), &ff.mor(&iv.at(&o)));
            if rhs != fu.id(&fo) {
                r.push(format!("right identity axiom fails at {f:?}, {o:?}"));
            }
        }
    }
    for f in morphisms {
        for g in morphisms {
            if b.cod(f) != b.dom(g) {
                continue;
            }
            let c = ix.coh_comp(f, g);
            let fu = ix.fiber(&b.dom(f));
            for o in ix.fiber(&b.cod(g)).objects() {
                if !fu.is_iso(&c.at(&o)) {
                    r.push(format!("coherence cell ({f:?},{g:?}) not invertible at {o:?}"));
                }
            }
            for h in morphisms {
                if b.cod(g) != b.dom(h) {
                    continue;
                }
                let hg = b.compose(h, g);
                let gf = b.compose(g, f);
                let (c_f_hg, c_g_h, c_gf_h) = (ix.coh_comp(f, &hg), ix.coh_comp(g, h), ix.coh_comp(&gf, h));
                let ff = ix.reindex(f);
                let fh = ix.reindex(h);
                for o in ix.fiber(&b.cod(h)).objects() {
                    let lhs = fu.compose(&c_f_hg.at(&o), &ff.mor(&c_g_h.at(&o)));
                    let rhs = fu.compose(&c_gf_h.at(&o), &c.at(&fh.ob(&o)));
                    if lhs != rhs {
                        r.push(format!("associativity axiom fails at ({f:?},{g:?},{h:?}), {o:?}"));
                    }
                }
            }
        }
    }
    r
}

pub(crate) fn mix_key(seed: u64, parts: &impl Hash) -> u64 {
    let mut h = DefaultHasher::new();
    seed.hash(&mut h);
    parts.hash(&mut h);
    h.finish()
}

/// Identity cell `F∘G ⇒ H` for functors that agree strictly on objects.
pub(crate) fn identity_cell<C: Category>(src: Functor<C, C>, dst: Functor<C, C>) -> NatTrans<C, C> {
    let (t, d) = (dst.target().clone(), dst.clone());
    NatTrans::new(src, dst, move |o| t.id(&d.ob(o)))
}

/// An indexed category over a table category with table fibers, given by
/// strictly functorial reindexing data and identity coherence.
#[derive(Clone, Debug)]
pub struct TableIndexed {
    pub base: Arc<FinCategory>,
    pub fibers: Vec<Arc<FinCategory>>,
    /// `reindex[f]` goes from the fiber over `cod f` to the fiber over `dom f`.
    pub reindex: Vec<FinFunctor>,
}

impl IndexedCategory for TableIndexed {
    type Base = FinCategory;
    type Fiber = FinCategory;

    fn base(&self) -> Arc<FinCategory> {
        self.base.clone()
    }
    fn fiber(&self, x: &usize) -> Arc<FinCategory> {
        self.fibers[*x].clone()
    }
    fn reindex(&self, f: &usize) -> Functor<FinCategory, FinCategory> {
        self.reindex[*f].to_functor()
    }
    fn coh_comp(&self, f: &usize, g: &usize) -> NatTrans<FinCategory, FinCategory> {
        let gf = self.base.compose(g, f);
        identity_cell(self.reindex(g).then(&self.reindex(f)), self.reindex(&gf))
    }
    fn coh_id(&self, x: &usize) -> NatTrans<FinCategory, FinCategory> {
        let i = self.base.identity_of(*x);
        identity_cell(Functor::identity(self.fibers[*x].clone()), self.reindex(&i))
    }
}

/// `Fam_X`: the set `[n]` goes to `X^n`, a map acts by precomposition.
#[derive(Clone, Debug)]
pub struct FamIndexed {
    pub x: Arc<FinCategory>,
    pub base_bound: usize,
}

impl IndexedCategory for FamIndexed {
    type Base = FinSet;
    type Fiber = PowerCat;

    fn base(&self) -> Arc<FinSet> {
        Arc::new(FinSet::new(self.base_bound))
    }
    fn fiber(&self, n: &usize) -> Arc<PowerCat> {
        Arc::new(PowerCat::new(self.x.clone(), *n))
    }
    fn reindex(&self, f: &FinSetMap) -> Functor<PowerCat, PowerCat> {
        let (m1, m2) = (f.map.clone(), f.map.clone());
        Functor::new(
            self.fiber(&f.cod),
            self.fiber(&f.dom()),
            move |o: &Vec<usize>| m1.iter().map(|&j| o[j]).collect(),
            move |a: &Vec<usize>| m2.iter().map(|&j| a[j]).collect(),
        )
    }
    fn coh_comp(&self, f: &FinSetMap, g: &FinSetMap) -> NatTrans<PowerCat, PowerCat> {
        identity_cell(self.reindex(g).then(&self.reindex(f)), self.reindex(&f.then(g)))
    }
    fn coh_id(&self, n: &usize) -> NatTrans<PowerCat, PowerCat> {
        identity_cell(Functor::identity(self.fiber(n)), self.reindex(&FinSetMap::identity(*n)))
    }
}

/// An indexed category conjugated by chosen isomorphisms: `F'(f)` sends `o`
/// to the codomain of an iso `θ_f[o]` out of `F(f)(o)`, and the coherence
/// cells are transported along the `θ`s. The result is equivalent to the
/// input but no longer strict.
pub struct Twisted<I: IndexedCategory> {
    pub inner: Arc<I>,
    pub seed: u64,
}

impl<I: IndexedCategory> Twisted<I> {
    pub fn new(inner: Arc<I>, seed: u64) -> Self {
        Twisted { inner, seed }
    }

    /// `θ_f: F(f) ⇒ F'(f)`.
    pub fn theta(&self, f: &BaseMor<I>) -> NatTrans<I::Fiber, I::Fiber> {
        let ff = self.inner.reindex(f);
        let t = ff.target().clone();
        let (seed, f1) = (self.seed, f.clone());
        let ff2 = ff.clone();
        let comp = move |o: &FiberObj<I>| t.pick_iso(&ff2.ob(o), mix_key(seed, &(&f1, o)));
        let src = ff.clone();
        let probe = NatTrans::new(src.clone(), src.clone(), comp.clone());
        let (p1, p2) = (probe.clone(), probe.clone());
        let t2 = ff.target().clone();
        let f3 = ff.clone();
        let twisted = Functor::new(
            ff.source().clone(),
            ff.target().clone(),
            move |o| t2.cod(&p1.at(o)),
            move |m| {
                let s = f3.source();
                let t = f3.target();
                let (x, y) = (s.dom(m), s.cod(m));
                let tx = t.inverse(&p2.at(&x)).expect("picked iso");
                t.compose(&p2.at(&y), &t.compose(&f3.mor(m), &tx))
            },
        )
        .cached();
        NatTrans::new(ff, twisted, comp).cached()
    }
}

impl<I: IndexedCategory> IndexedCategory for Twisted<I> {
    type Base = I::Base;
    type Fiber = I::Fiber;

    fn base(&self) -> Arc<I::Base> {
        self.inner.base()
    }
    fn fiber(&self, x: &BaseObj<I>) -> Arc<I::Fiber> {
        self.inner.fiber(x)
    }
    fn reindex(&self, f: &BaseMor<I>) -> Functor<I::Fiber, I::Fiber> {
        self.theta(f).target().clone()
    }
    fn coh_comp(&self, f: &BaseMor<I>, g: &BaseMor<I>) -> NatTrans<I::Fiber, I::Fiber> {
        let b = self.inner.base();
        let gf = b.compose(g, f);
        let (tf, tg, tgf) = (self.theta(f), self.theta(g), self.theta(&gf));
        let c = self.inner.coh_comp(f, g);
        let ff = self.inner.reindex(f);
        let fu = self.inner.fiber(&b.dom(f));
        let src = tg.target().then(tf.target());
        let dst = tgf.target().clone();
        let tg2 = tg.clone();
        NatTrans::new(src, dst, move |o| {
            let og = tg2.target().ob(o);
            let back = fu.compose(&tf.at(&og), &ff.mor(&tg.at(o)));
            let back = fu.inverse(&back).expect("composite of isos");
            fu.compose(&tgf.at(o), &fu.compose(&c.at(o), &back))
        })
        .cached()
    }
    fn coh_id(&self, x: &BaseObj<I>) -> NatTrans<I::Fiber, I::Fiber> {
        let i = self.inner.base().id(x);
        self.theta(&i).vertical(&self.inner.coh_id(x)).cached()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{catalog, check_natural};

    #[test]
    fn fam_is_strict_and_valid() {
        let fam = FamIndexed { x: Arc::new(catalog::arrow()), base_bound: 2 };
        let maps: Vec<FinSetMap> = (0..=2)
            .flat_map(|n| (0..=2).flat_map(move |m| crate::finset::all_maps(n, m)))
            .collect();
        assert!(validate_indexed(&fam, &maps).is_ok());
    }

    #[test]
    fn twisting_preserves_validity() {
        let fam = Arc::new(FamIndexed { x: Arc::new(catalog::iso_pair()), base_bound: 2 });
        let tw = Twisted::new(fam, 7);
        let maps: Vec<FinSetMap> = (1..=2)
            .flat_map(|n| (1..=2).flat_map(move |m| crate::finset::all_maps(n, m)))
            .collect();
        assert!(validate_indexed(&tw, &maps).is_ok());
        for f in &maps {
            assert!(check_natural(&tw.theta(f)).is_ok());
        }
    }
}
