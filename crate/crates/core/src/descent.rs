//! Kernel-pair groupoids, internal actions, the descent factorization and
//! effective descent.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::delta3::Gen;
use crate::error::{Error, Result};
use crate::fincat::{check_equivalence, Category, Cone, Diagram, EquivalenceReport, Functor, Limits, NatTrans};
use crate::laxdesc::{build_lax_descent, factor_functor, LaxDesc, UniversalPair};
use crate::pseudo::{
    compose_indexed_with_precategory, validate_precategory, BaseMor, IndexedCategory, Precategory, TruncCosimp,
};

/// `Eq(p)`: `e`, `e×_b e`, `e×_b e×_b e` with the projections and the
/// diagonal. `d¹ = π_e` is the first projection and `d⁰ = π^e` the second.
#[derive(Clone, Debug)]
pub struct KernelPairGroupoid<B: Category> {
    pub p: B::Mor,
    pub precategory: Precategory<B>,
    pub pi_lower: B::Mor,
    pub pi_upper: B::Mor,
    pub diagonal: B::Mor,
}

fn pair_cone<B: Category>(base: &B, p: &B::Mor, x: &B::Mor, y: &B::Mor) -> Cone<B::Obj, B::Mor> {
    Cone { apex: base.dom(x), legs: vec![x.clone(), y.clone(), base.compose(p, x)] }
}

pub fn eq_groupoid<B: Limits>(base: &Arc<B>, p: &B::Mor) -> Result<KernelPairGroupoid<B>> {
    let (e, b) = (base.dom(p), base.cod(p));
    let kd = Diagram { nodes: vec![e.clone(), e.clone(), b.clone()], edges: vec![(0, 2, p.clone()), (1, 2, p.clone())] };
    let kp = base.limit(&kd).ok_or_else(|| Error::Invalid("the kernel pair does not exist".into()))?;
    let td = Diagram {
        nodes: vec![e.clone(), e.clone(), e.clone(), b],
        edges: vec![(0, 3, p.clone()), (1, 3, p.clone()), (2, 3, p.clone())],
    };
    let tp = base.limit(&td).ok_or_else(|| Error::Invalid("the triple pullback does not exist".into()))?;
    let (x, y, z) = (&tp.legs[0], &tp.legs[1], &tp.legs[2]);
    let face = |u: &B::Mor, v: &B::Mor| {
        base.mediate(&kd, &kp, &pair_cone(base.as_ref(), p, u, v))
            .ok_or_else(|| Error::NoMediator("face of the triple pullback".into()))
    };
    let ide = base.id(&e);
    let diagonal = face(&ide, &ide)?;
    let mut gens = HashMap::new();
    gens.insert(Gen::d1, kp.legs[0].clone());
    gens.insert(Gen::d0, kp.legs[1].clone());
    gens.insert(Gen::s0, diagonal.clone());
    gens.insert(Gen::D0, face(y, z)?);
    gens.insert(Gen::D1, face(x, z)?);
    gens.insert(Gen::D2, face(x, y)?);
    let precategory = Precategory { base: base.clone(), objects: [e, kp.apex.clone(), tp.apex.clone()], gens };
    let rep = validate_precategory(&precategory);
    if !rep.is_ok() {
        return Err(Error::Invalid(rep.violations.join("; ")));
    }
    Ok(KernelPairGroupoid {
        p: p.clone(),
        pi_lower: kp.legs[0].clone(),
        pi_upper: kp.legs[1].clone(),
        diagonal,
        precategory,
    })
}

/// The precategory constantly equal to `a(1)`.
pub fn underlying_discrete<B: Category>(a: &Precategory<B>) -> Precategory<B> {
    Precategory::constant(a.base.clone(), a.objects[0].clone())
}

/// `F-IntAct(a)`: the lax descent category of `F∘op(a)` over the enumerated
/// objects of `F(a(1))`.
#[allow(clippy::type_complexity)]
pub fn internal_actions<I: IndexedCategory>(
    f: &I,
    a: &Precategory<I::Base>,
) -> Result<(Arc<TruncCosimp<I::Fiber>>, Arc<LaxDesc<I::Fiber>>, UniversalPair<I::Fiber>)> {
    let t = Arc::new(compose_indexed_with_precategory(f, a)?);
    let ws = t.cat(0).objects();
    let (ld, up) = build_lax_descent(t.clone(), &ws);
    Ok((t, ld, up))
}

/// `F(p) = d^A∘K_p` with `A = F∘op(Eq(p))`.
pub struct DescentFactorization<I: IndexedCategory> {
    pub groupoid: KernelPairGroupoid<I::Base>,
    pub cosimp: Arc<TruncCosimp<I::Fiber>>,
    pub laxdesc: Arc<LaxDesc<I::Fiber>>,
    pub universal: UniversalPair<I::Fiber>,
    /// `𝔣⁻¹_{π^e p}·𝔣_{π_e p}: F(π_e)F(p) ⇒ F(π^e)F(p)`.
    pub datum: NatTrans<I::Fiber, I::Fiber>,
    pub kp: Functor<I::Fiber, LaxDesc<I::Fiber>>,
    pub reindex: Functor<I::Fiber, I::Fiber>,
    pub composite_check: bool,
}

/// The canonical datum `𝔣⁻¹_{π^e p}·𝔣_{π_e p}` over the kernel pair of `p`.
pub fn canonical_datum<I: IndexedCategory>(
    f: &I,
    g: &KernelPairGroupoid<I::Base>,
) -> NatTrans<I::Fiber, I::Fiber> {
    let lower = f.coh_comp(&g.pi_lower, &g.p);
    let upper = f.coh_comp(&g.pi_upper, &g.p);
    upper.inverse().vertical(&lower).cached()
}

pub fn descent_factorization<I: IndexedCategory>(f: &I, p: &BaseMor<I>) -> Result<DescentFactorization<I>>
where
    I::Base: Limits,
{
    let groupoid = eq_groupoid(&f.base(), p)?;
    let (cosimp, laxdesc, universal) = internal_actions(f, &groupoid.precategory)?;
    let datum = canonical_datum(f, &groupoid);
    let reindex = f.reindex(p);
    let kp = factor_functor(&laxdesc, &reindex, &datum)?;
    let composite_check = f
        .fiber(&f.base().cod(p))
        .objects()
        .iter()
        .all(|x| universal.d_a.ob(&kp.ob(x)) == reindex.ob(x));
    Ok(DescentFactorization { groupoid, cosimp, laxdesc, universal, datum, kp, reindex, composite_check })
}

/// Outcome of [`is_effective_descent`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EffectivenessReport {
    pub effective: bool,
    pub comparison: EquivalenceReport,
    /// Descent objects in the enumerated lax descent category.
    pub descent_objects: usize,
    pub composite_check: bool,
}

/// Whether `K_p` is an equivalence over the enumerated fibers.
///
/// For slices of finite sets a datum on `w → e` can only descend to an
/// object of total size at most `|w|`, so equal bounds on both fibers make
/// the essential-surjectivity part exact.
pub fn is_effective_descent<I: IndexedCategory>(f: &I, p: &BaseMor<I>) -> Result<EffectivenessReport>
where
    I::Base: Limits,
{
    let fac = descent_factorization(f, p)?;
    let comparison = check_equivalence(&fac.kp);
    Ok(EffectivenessReport {
        effective: comparison.is_equivalence(),
        comparison,
        descent_objects: fac.laxdesc.objects().len(),
        composite_check: fac.composite_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{catalog::Monoid, check_functor, FinCategory, FinFunctor};
    use crate::finset::{basic_indexed_category, diagram_indexed_category, FinSet, FinSetMap};
    use crate::pseudo::{sigma_precategory, validate_trunc_cosimp};

    #[test]
    fn kernel_pairs_in_sets() {
        let base = Arc::new(FinSet::new(9));
        let p = FinSetMap::new(1, vec![0, 0]).unwrap();
        let g = eq_groupoid(&base, &p).unwrap();
        assert_eq!(g.precategory.objects, [2, 4, 8]);
        let id = FinSetMap::identity(3);
        let g = eq_groupoid(&base, &id).unwrap();
        assert_eq!(g.precategory.objects, [3, 3, 3]);
        let inj = FinSetMap::new(3, vec![0, 2]).unwrap();
        let g = eq_groupoid(&base, &inj).unwrap();
        assert_eq!(g.precategory.objects[1], 2);
        assert!(g.pi_lower.is_bijective() && g.pi_upper.is_bijective());
    }

    #[test]
    fn kernel_pairs_in_categories() {
        let ix = diagram_indexed_category(vec![FinCategory::terminal()], 1);
        let two = Arc::new(FinCategory::discrete(2));
        let h = FinFunctor::new(two, Arc::new(FinCategory::terminal()), vec![0, 0], vec![0, 0]).unwrap();
        let g = eq_groupoid(&ix.base(), &h).unwrap();
        assert_eq!(g.precategory.objects[1].object_count(), 4);
        assert_eq!(g.precategory.objects[2].object_count(), 8);
    }

    #[test]
    fn factorization_commutes() {
        let f = basic_indexed_category(3);
        let p = FinSetMap::new(1, vec![0, 0]).unwrap();
        let fac = descent_factorization(&f, &p).unwrap();
        assert!(fac.composite_check);
        assert!(validate_trunc_cosimp(&fac.cosimp).is_ok());
        assert!(check_functor(&fac.kp).is_ok());
    }

    #[test]
    fn effective_iff_surjective_small() {
        let f = basic_indexed_category(2);
        let surj = FinSetMap::new(1, vec![0, 0]).unwrap();
        assert!(is_effective_descent(&f, &surj).unwrap().effective);
        let not = FinSetMap::new(2, vec![0]).unwrap();
        let rep = is_effective_descent(&f, &not).unwrap();
        assert!(!rep.effective);
        assert!(!rep.comparison.faithful);
    }

    #[test]
    fn discrete_actions_recover_the_fiber() {
        let f = basic_indexed_category(2);
        let a = underlying_discrete(&sigma_precategory(&Monoid::m2()));
        assert_eq!(a.objects, [1, 1, 1]);
        let (_, ld, up) = internal_actions(&f, &a).unwrap();
        assert_eq!(ld.objects().len(), f.fiber(&1).objects().len());
        assert!(check_equivalence(&up.d_a).is_equivalence());
    }
}
