//! Monads, Eilenberg–Moore categories, monadicity, Beck–Chevalley and the
//! comparison of the two factorizations of a reindexing functor.

use std::sync::Arc;

use serde::Serialize;

use crate::descent::{descent_factorization, eq_groupoid, DescentFactorization};
use crate::error::{Error, Result};
use crate::fincat::catalog::Monoid;
use crate::fincat::{
    check_equivalence, find_natural_iso, is_conservative, is_limit_cone, Adjunction, Category, Diagram,
    EquivalenceReport, Functor, LawReport, Limits, NatTrans,
};
use crate::finset::{FinSet, FinSetMap};
use crate::kan::{pair_diagram, split_forks_of};
use crate::laxdesc::{DObj, LaxDesc};
use crate::pseudo::{BaseMor, IndexedCategory};

/// A monad `(T, η, μ)` on `base`.
pub struct Monad<C: Category> {
    pub base: Arc<C>,
    pub t: Functor<C, C>,
    pub eta: NatTrans<C, C>,
    pub mu: NatTrans<C, C>,
}

impl<C: Category> Clone for Monad<C> {
    fn clone(&self) -> Self {
        Monad { base: self.base.clone(), t: self.t.clone(), eta: self.eta.clone(), mu: self.mu.clone() }
    }
}

/// Unit and associativity laws at every enumerated object.
pub fn check_monad<C: Category>(m: &Monad<C>) -> LawReport {
    let c = &m.base;
    let mut r = LawReport::default();
    for x in c.objects() {
        let tx = m.t.ob(&x);
        let id = c.id(&tx);
        let mux = m.mu.at(&x);
        if c.compose(&mux, &m.eta.at(&tx)) != id {
            r.push(format!("μ∘ηT ≠ 1 at {x:?}"));
        }
        if c.compose(&mux, &m.t.mor(&m.eta.at(&x))) != id {
            r.push(format!("μ∘Tη ≠ 1 at {x:?}"));
        }
        if c.compose(&mux, &m.mu.at(&tx)) != c.compose(&mux, &m.t.mor(&mux)) {
            r.push(format!("μ∘μT ≠ μ∘Tμ at {x:?}"));
        }
    }
    r
}

/// `T = G∘F`, `η` the unit and `μ = GεF`.
pub fn monad_from_adjunction<C: Category, D: Category>(adj: &Adjunction<C, D>) -> Monad<D> {
    let t = adj.left.then(&adj.right).cached();
    let mu = adj.counit.whisker_right(&adj.left).whisker_left(&adj.right);
    Monad { base: adj.right.target().clone(), t, eta: adj.unit.clone(), mu: mu.cached() }
}

/// The monad `m × −` on finite sets, with `(a, x)` ranked as `a·n + x`.
pub fn product_monad(m: &Monoid, bound: usize) -> Monad<FinSet> {
    let k = m.size();
    let base = Arc::new(FinSet::new(bound));
    let t = Functor::new(base.clone(), base.clone(), move |n: &usize| k * n, move |f: &FinSetMap| {
        let n = f.dom();
        FinSetMap { cod: k * f.cod, map: (0..k * n).map(|i| (i / n.max(1)) * f.cod + f.map[i % n]).collect() }
    });
    let eta = NatTrans::new(Functor::identity(base.clone()), t.clone(), move |n: &usize| FinSetMap {
        cod: k * n,
        map: (0..*n).collect(),
    });
    let m2 = m.clone();
    let mu = NatTrans::new(t.then(&t), t.clone(), move |n: &usize| {
        // (a, (b, x)) ↦ (ab, x)
        let map = (0..k * k * n)
            .map(|i| {
                let (a, rest) = (i / (k * n), i % (k * n));
                let (b, x) = (rest / n, rest % n);
                m2.mul(a, b) * n + x
            })
            .collect();
        FinSetMap { cod: k * n, map }
    });
    Monad { base, t, eta, mu }
}

/// An algebra `action: T carrier → carrier`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Algebra<O, M> {
    pub carrier: O,
    pub action: M,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AlgMor<O, M> {
    pub src: Algebra<O, M>,
    pub dst: Algebra<O, M>,
    pub map: M,
}

pub type Alg<C> = Algebra<<C as Category>::Obj, <C as Category>::Mor>;
pub type AlgHom<C> = AlgMor<<C as Category>::Obj, <C as Category>::Mor>;

/// The Eilenberg–Moore category, listing the algebras on the given carriers.
pub struct Em<C: Category> {
    pub monad: Monad<C>,
    objects: Vec<Alg<C>>,
}

impl<C: Category> Em<C> {
    pub fn is_algebra(&self, x: &C::Obj, a: &C::Mor) -> bool {
        let (c, m) = (&self.monad.base, &self.monad);
        c.dom(a) == m.t.ob(x)
            && c.cod(a) == *x
            && c.compose(a, &m.eta.at(x)) == c.id(x)
            && c.compose(a, &m.t.mor(a)) == c.compose(a, &m.mu.at(x))
    }

    pub fn is_morphism(&self, x: &Alg<C>, y: &Alg<C>, f: &C::Mor) -> bool {
        let c = &self.monad.base;
        c.compose(f, &x.action) == c.compose(&y.action, &self.monad.t.mor(f))
    }
}

/// All algebras on the carriers, in carrier order then hom order.
pub fn em_category<C: Category>(monad: &Monad<C>, carriers: &[C::Obj]) -> Em<C> {
    let mut em = Em { monad: monad.clone(), objects: Vec::new() };
    let mut objects = Vec::new();
    for x in carriers {
        for a in monad.base.hom(&monad.t.ob(x), x) {
            if em.is_algebra(x, &a) {
                objects.push(Algebra { carrier: x.clone(), action: a });
            }
        }
    }
    em.objects = objects;
    em
}

impl<C: Category> Category for Em<C> {
    type Obj = Alg<C>;
    type Mor = AlgHom<C>;

    fn dom(&self, f: &AlgHom<C>) -> Alg<C> {
        f.src.clone()
    }
    fn cod(&self, f: &AlgHom<C>) -> Alg<C> {
        f.dst.clone()
    }
    fn id(&self, x: &Alg<C>) -> AlgHom<C> {
        AlgMor { src: x.clone(), dst: x.clone(), map: self.monad.base.id(&x.carrier) }
    }
    fn compose(&self, g: &AlgHom<C>, f: &AlgHom<C>) -> AlgHom<C> {
        AlgMor { src: f.src.clone(), dst: g.dst.clone(), map: self.monad.base.compose(&g.map, &f.map) }
    }
    fn hom(&self, x: &Alg<C>, y: &Alg<C>) -> Vec<AlgHom<C>> {
        self.monad
            .base
            .hom(&x.carrier, &y.carrier)
            .into_iter()
            .filter(|f| self.is_morphism(x, y, f))
            .map(|map| AlgMor { src: x.clone(), dst: y.clone(), map })
            .collect()
    }
    fn objects(&self) -> Vec<Alg<C>> {
        self.objects.clone()
    }
    fn inverse(&self, f: &AlgHom<C>) -> Option<AlgHom<C>> {
        let inv = self.monad.base.inverse(&f.map)?;
        Some(AlgMor { src: f.dst.clone(), dst: f.src.clone(), map: inv })
    }
    fn is_iso(&self, f: &AlgHom<C>) -> bool {
        self.monad.base.is_iso(&f.map)
    }
}

impl<C: Category> Limits for Em<C> {}

pub fn em_forgetful<C: Category>(em: &Arc<Em<C>>) -> Functor<Em<C>, C> {
    Functor::new(em.clone(), em.monad.base.clone(), |x: &Alg<C>| x.carrier.clone(), |f: &AlgHom<C>| f.map.clone())
}

/// `x ↦ (Tx, μ_x)`.
pub fn em_free<C: Category>(em: &Arc<Em<C>>) -> Functor<C, Em<C>> {
    let m = em.monad.clone();
    let m2 = m.clone();
    let free = move |x: &C::Obj| Algebra { carrier: m.t.ob(x), action: m.mu.at(x) };
    let free2 = free.clone();
    Functor::new(em.monad.base.clone(), em.clone(), free, move |f: &C::Mor| {
        let c = &m2.base;
        AlgMor { src: free2(&c.dom(f)), dst: free2(&c.cod(f)), map: m2.t.mor(f) }
    })
}

/// Free ⊣ forgetful, with counit the structure maps.
pub fn em_adjunction<C: Category>(em: &Arc<Em<C>>) -> Adjunction<Em<C>, C> {
    let (left, right) = (em_free(em), em_forgetful(em));
    let unit = NatTrans::new(Functor::identity(em.monad.base.clone()), left.then(&right), {
        let m = em.monad.clone();
        move |x: &C::Obj| m.eta.at(x)
    });
    let counit = NatTrans::new(right.then(&left), Functor::identity(em.clone()), {
        let m = em.monad.clone();
        move |x: &Alg<C>| AlgMor {
            src: Algebra { carrier: m.t.ob(&x.carrier), action: m.mu.at(&x.carrier) },
            dst: x.clone(),
            map: x.action.clone(),
        }
    });
    Adjunction { left, right, unit, counit }
}

/// `K(c) = (G c, G ε_c)` into the Eilenberg–Moore category of `G∘F`.
pub fn comparison_functor<C: Category, D: Category>(adj: &Adjunction<C, D>, em: &Arc<Em<D>>) -> Functor<C, Em<D>> {
    let (g, eps) = (adj.right.clone(), adj.counit.clone());
    let k = move |c: &C::Obj| Algebra { carrier: g.ob(c), action: g.mor(&eps.at(c)) };
    let k2 = k.clone();
    let (g2, src) = (adj.right.clone(), adj.right.source().clone());
    Functor::new(src.clone(), em.clone(), k, move |f: &C::Mor| AlgMor {
        src: k2(&src.dom(f)),
        dst: k2(&src.cod(f)),
        map: g2.mor(f),
    })
}

/// Outcome of [`is_monadic`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonadicityReport {
    pub monadic: bool,
    /// The comparison functor is an equivalence.
    pub comparison: EquivalenceReport,
    /// `G` reflects isomorphisms.
    pub conservative: bool,
    /// Every `G`-split pair has a coequalizer that `G` preserves.
    pub split_coequalizers: bool,
    pub split_pairs: usize,
    /// Both verdicts agree; disagreement means the bound is too small.
    pub agree: bool,
    pub witness: Option<String>,
}

/// Monadicity of the right adjoint `G` of `adj`, decided twice: by the
/// comparison functor and by Beck's condition on `G`-split pairs.
pub fn is_monadic<C: Limits, D: Category>(adj: &Adjunction<C, D>) -> MonadicityReport {
    let monad = monad_from_adjunction(adj);
    let em = Arc::new(em_category(&monad, &monad.base.objects()));
    let k = comparison_functor(adj, &em);
    let comparison = check_equivalence(&k);
    let g = &adj.right;
    let (c, d) = (g.source().clone(), g.target().clone());
    let conservative = is_conservative(g);
    let mut split_pairs = 0;
    let mut split_ok = true;
    let mut witness = None;
    let obs = c.objects();
    'outer: for x in &obs {
        for y in &obs {
            let hom = c.hom(x, y);
            for f in &hom {
                for h in &hom {
                    if split_forks_of(d.as_ref(), &g.mor(f), &g.mor(h)).is_empty() {
                        continue;
                    }
                    split_pairs += 1;
                    let diag = pair_diagram(c.as_ref(), f, h);
                    let preserved = c.colimit(&diag).is_some_and(|q| {
                        let gd = Diagram { nodes: diag.nodes.iter().map(|o| g.ob(o)).collect(), edges: diag.edges.iter().map(|(i, j, e)| (*i, *j, g.mor(e))).collect() };
                        let gq = crate::fincat::Cone { apex: g.ob(&q.apex), legs: q.legs.iter().map(|l| g.mor(l)).collect() };
                        is_limit_cone(d.as_ref(), &gd, &gq, true)
                    });
                    if !preserved {
                        split_ok = false;
                        witness = Some(format!("G-split pair {f:?}, {h:?} has no preserved coequalizer"));
                        break 'outer;
                    }
                }
            }
        }
    }
    let beck = conservative && split_ok;
    if !conservative && witness.is_none() {
        witness = Some("G does not reflect isomorphisms".into());
    }
    if !comparison.is_equivalence() && witness.is_none() {
        witness = comparison.witness.clone();
    }
    MonadicityReport {
        monadic: comparison.is_equivalence() && beck,
        agree: comparison.is_equivalence() == beck,
        comparison,
        conservative,
        split_coequalizers: split_ok,
        split_pairs,
        witness,
    }
}

/// Outcome of [`beck_chevalley`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BcReport {
    pub invertible: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

/// The Beck–Chevalley cell of the kernel-pair square of `p`,
/// `F(π^e)!F(π_e) ⇒ F(p)F(p)!`, at `w`:
/// `ε^{π^e}_{F(p)F(p)!w} ∘ F(π^e)!(β_{F(p)!w}) ∘ F(π^e)!F(π_e)(η^p_w)`
/// with `β = 𝔣⁻¹_{π^e p}·𝔣_{π_e p}`.
pub fn beck_chevalley_cell<I: IndexedCategory>(f: &I, p: &BaseMor<I>) -> Result<NatTrans<I::Fiber, I::Fiber>>
where
    I::Base: Limits,
{
    let g = eq_groupoid(&f.base(), p)?;
    let adj_p = f.left_adjoint(p).ok_or_else(|| Error::Invalid("F(p) has no left adjoint".into()))?;
    let adj_up = f
        .left_adjoint(&g.pi_upper)
        .ok_or_else(|| Error::Invalid("F(π^e) has no left adjoint".into()))?;
    let beta = crate::descent::canonical_datum(f, &g);
    let lower = f.reindex(&g.pi_lower);
    let src = lower.then(&adj_up.left);
    let dst = adj_p.left.then(&adj_p.right);
    let fe = adj_p.right.target().clone();
    let (eta, lp) = (adj_p.unit.clone(), adj_p.left.clone());
    let (shriek, eps) = (adj_up.left.clone(), adj_up.counit.clone());
    let (fpf, lw) = (adj_p.right.clone(), lower.clone());
    Ok(NatTrans::new(src, dst, move |w| {
        let x = lp.ob(w);
        let fpx = fpf.ob(&x);
        let a = shriek.mor(&lw.mor(&eta.at(w)));
        let b = shriek.mor(&beta.at(&x));
        let c = eps.at(&fpx);
        fe.compose(&c, &fe.compose(&b, &a))
    }))
}

/// Invertibility of the Beck–Chevalley cell at every enumerated object of
/// the fiber over the domain of `p`.
pub fn beck_chevalley<I: IndexedCategory>(f: &I, p: &BaseMor<I>) -> Result<BcReport>
where
    I::Base: Limits,
{
    let cell = beck_chevalley_cell(f, p)?;
    let fe = f.fiber(&f.base().dom(p));
    let obs = fe.objects();
    for w in &obs {
        if !fe.is_iso(&cell.at(w)) {
            return Ok(BcReport { invertible: false, checked: obs.len(), witness: Some(format!("{w:?}")) });
        }
    }
    Ok(BcReport { invertible: true, checked: obs.len(), witness: None })
}

/// Outcome of [`benabou_roubaud_compare`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrReport {
    pub beck_chevalley: bool,
    /// `E: lax-Desc(F^p) → EM(T^p)` is an equivalence.
    pub equivalence: EquivalenceReport,
    /// `U∘E = d^A` on the enumerated objects and morphisms.
    pub over_fiber: bool,
    /// `E∘K_p ≅ K^T`.
    pub factorizations_agree: bool,
    pub descent_objects: usize,
    pub algebras: usize,
    pub found: bool,
    pub witness: Option<String>,
}

/// Builds `E(w, φ) = (w, ε^{π^e}_w ∘ F(π^e)!(φ) ∘ bc_w⁻¹)` and checks it
/// is an equivalence commuting with both factorizations of `F(p)`.
pub fn benabou_roubaud_compare<I: IndexedCategory>(f: &I, p: &BaseMor<I>) -> Result<BrReport>
where
    I::Base: Limits,
{
    let bc = beck_chevalley(f, p)?;
    let fac: DescentFactorization<I> = descent_factorization(f, p)?;
    let adj_p = f.left_adjoint(p).ok_or_else(|| Error::Invalid("F(p) has no left adjoint".into()))?;
    let adj_up = f
        .left_adjoint(&fac.groupoid.pi_upper)
        .ok_or_else(|| Error::Invalid("F(π^e) has no left adjoint".into()))?;
    let monad = monad_from_adjunction(&adj_p);
    let ws = fac.cosimp.cat(0).objects();
    let em = Arc::new(em_category(&monad, &ws));
    let kt = comparison_functor(&adj_p, &em);
    let cell = beck_chevalley_cell(f, p)?;
    let fe = fac.cosimp.cat(0).clone();
    let (shriek, eps) = (adj_up.left.clone(), adj_up.counit.clone());
    let em2 = em.clone();
    let action = move |x: &DObj<I::Fiber>| -> Option<Alg<I::Fiber>> {
        let inv = fe.inverse(&cell.at(&x.w))?;
        let a = fe.compose(&eps.at(&x.w), &fe.compose(&shriek.mor(&x.phi), &inv));
        em2.is_algebra(&x.w, &a).then(|| Algebra { carrier: x.w.clone(), action: a })
    };
    let ld: Arc<LaxDesc<I::Fiber>> = fac.laxdesc.clone();
    let mut report = BrReport {
        beck_chevalley: bc.invertible,
        equivalence: EquivalenceReport { faithful: false, full: false, essentially_surjective: false, witness: None },
        over_fiber: false,
        factorizations_agree: false,
        descent_objects: ld.objects().len(),
        algebras: em.objects().len(),
        found: false,
        witness: None,
    };
    for x in ld.objects() {
        if action(&x).is_none() {
            report.witness = Some(format!("no algebra structure induced by {x:?}"));
            return Ok(report);
        }
    }
    let (a1, a2) = (action.clone(), action);
    let e = Functor::new(ld.clone(), em.clone(), move |x| a1(x).expect("algebra"), move |m: &crate::laxdesc::DMor<I::Fiber>| AlgMor {
        src: a2(&m.src).expect("algebra"),
        dst: a2(&m.dst).expect("algebra"),
        map: m.m.clone(),
    });
    let u = em_forgetful(&em);
    report.over_fiber = ld.objects().iter().all(|x| u.ob(&e.ob(x)) == x.w)
        && ld.objects().iter().all(|x| {
            ld.objects().iter().all(|y| ld.hom(x, y).iter().all(|m| em.is_morphism(&e.ob(x), &e.ob(y), &m.m)))
        });
    report.equivalence = check_equivalence(&e);
    let ek = fac.kp.then(&e);
    report.factorizations_agree = find_natural_iso(&ek, &kt).is_some();
    report.found = report.equivalence.is_equivalence() && report.over_fiber && report.factorizations_agree;
    if !report.found {
        report.witness = report.equivalence.witness.clone().or(Some("the factorizations differ".into()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{catalog, check_adjunction, check_functor, FinCategory, FinFunctor};
    use crate::finset::{basic_indexed_category, diagram_indexed_category, sigma_adjunction, SetDiagram};

    #[test]
    fn product_monad_algebras_are_actions() {
        let m = product_monad(&Monoid::m2(), 4);
        assert!(check_monad(&m).is_ok());
        let em = em_category(&m, &[2]);
        assert_eq!(em.objects().len(), 3);
        let z2 = product_monad(&Monoid::cyclic(2), 4);
        assert_eq!(em_category(&z2, &[2]).objects().len(), 2);
        assert_eq!(em_category(&z2, &[0]).objects().len(), 1);
    }

    #[test]
    fn em_adjunction_laws() {
        let m = product_monad(&Monoid::m2(), 2);
        let em = Arc::new(em_category(&m, &[0, 1, 2]));
        let adj = em_adjunction(&em);
        assert!(check_functor(&adj.left).is_ok());
        assert!(check_adjunction(&adj).is_ok());
    }

    #[test]
    fn monad_of_sigma() {
        let p = FinSetMap::new(1, vec![0, 0]).unwrap();
        let adj = sigma_adjunction(&p, 3);
        let m = monad_from_adjunction(&adj);
        assert!(check_monad(&m).is_ok());
        let w = crate::finset::SliceObj::new(vec![0, 1]);
        assert_eq!(m.t.ob(&w).total(), 4);
    }

    #[test]
    fn forgetful_functors_are_monadic() {
        let m = product_monad(&Monoid::m2(), 2);
        let em = Arc::new(em_category(&m, &[0, 1, 2]));
        let rep = is_monadic(&em_adjunction(&em));
        assert!(rep.monadic && rep.agree, "{rep:?}");
        // the collapse 2 → 1 between finite categories is not conservative
        let two = Arc::new(catalog::chain(2));
        let one = Arc::new(FinCategory::terminal());
        let g = FinFunctor::new(two.clone(), one.clone(), vec![0, 0], vec![0; 3]).unwrap().to_functor();
        let adj = crate::fincat::find_left_adjoint(&g).unwrap();
        let rep = is_monadic(&adj);
        assert!(!rep.monadic && !rep.conservative);
    }

    #[test]
    fn beck_chevalley_slices() {
        let f = basic_indexed_category(3);
        let p = FinSetMap::new(1, vec![0, 0]).unwrap();
        assert!(beck_chevalley(&f, &p).unwrap().invertible);
    }

    #[test]
    fn beck_chevalley_collapse_of_points() {
        let ix = diagram_indexed_category(vec![FinCategory::terminal(), FinCategory::discrete(2)], 1);
        let two = Arc::new(FinCategory::discrete(2));
        let h = FinFunctor::new(two, Arc::new(FinCategory::terminal()), vec![0, 0], vec![0, 0]).unwrap();
        let cell = beck_chevalley_cell(&ix, &h).unwrap();
        let f = SetDiagram { sizes: vec![0, 1], maps: vec![FinSetMap::identity(0), FinSetMap::identity(1)] };
        let comp = cell.at(&f);
        assert_eq!(comp.src.sizes, vec![1, 1]);
        assert_eq!(comp.dst.sizes, vec![1, 1]);
        assert!(beck_chevalley(&ix, &h).unwrap().invertible);
    }

    #[test]
    fn benabou_roubaud_small() {
        let f = basic_indexed_category(2);
        let p = FinSetMap::new(1, vec![0, 0]).unwrap();
        let rep = benabou_roubaud_compare(&f, &p).unwrap();
        assert!(rep.found, "{rep:?}");
        let id = FinSetMap::identity(1);
        assert!(benabou_roubaud_compare(&f, &id).unwrap().found);
    }
}
