//! The lax descent category of a pseudofunctor `A: Δ₃ → Cat`.
//!
//! Objects are pairs `(w, φ)` with `φ: A(d¹)w → A(d⁰)w` a descent datum;
//! morphisms are morphisms `m` of `A(𝟣)` with `A(d⁰)(m)·φ = φ'·A(d¹)(m)`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::delta3::Gen;
use crate::error::{Error, Result};
use crate::fincat::{check_natural, materialize, Category, Functor, LawReport, Limits, Materialized, NatTrans};
use crate::pseudo::{derived_cells, DerivedCells, TruncCosimp};

/// A descent object `(w, φ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DescObj<O, M> {
    pub w: O,
    pub phi: M,
}

/// A morphism of descent objects, carried by `m: w → w'`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DescMor<O, M> {
    pub src: DescObj<O, M>,
    pub dst: DescObj<O, M>,
    pub m: M,
}

pub type DObj<C> = DescObj<<C as Category>::Obj, <C as Category>::Mor>;
pub type DMor<C> = DescMor<<C as Category>::Obj, <C as Category>::Mor>;

/// Which of the two descent equations hold for `φ` at `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescentEquations {
    pub associativity: bool,
    pub identity: bool,
}

impl DescentEquations {
    pub fn holds(&self) -> bool {
        self.associativity && self.identity
    }
}

/// Evaluates both descent equations:
///
/// * `A(D⁰)(φ) · σ₀₂ · A(D²)(φ) = σ₀₁ · A(D¹)(φ) · σ₁₂`
/// * `n₀ · A(s⁰)(φ) = n₁`
///
/// `false` for both if `φ` does not have the type `A(d¹)w → A(d⁰)w`.
pub fn descent_equations<C: Category>(
    a: &TruncCosimp<C>,
    cells: &DerivedCells<C>,
    w: &C::Obj,
    phi: &C::Mor,
) -> DescentEquations {
    let (a1, a2, a3) = (a.cat(0), a.cat(1), a.cat(2));
    if a2.dom(phi) != a.gen(Gen::d1).ob(w) || a2.cod(phi) != a.gen(Gen::d0).ob(w) {
        return DescentEquations { associativity: false, identity: false };
    }
    let lhs = a3.compose(
        &a.gen(Gen::D0).mor(phi),
        &a3.compose(&cells.sigma02.at(w), &a.gen(Gen::D2).mor(phi)),
    );
    let rhs = a3.compose(
        &cells.sigma01.at(w),
        &a3.compose(&a.gen(Gen::D1).mor(phi), &cells.sigma12.at(w)),
    );
    let ident = a1.compose(&cells.n0.at(w), &a.gen(Gen::s0).mor(phi)) == cells.n1.at(w);
    DescentEquations { associativity: lhs == rhs, identity: ident }
}

/// Whether `φ` is a descent datum for `w`.
pub fn is_descent_datum<C: Category>(a: &TruncCosimp<C>, w: &C::Obj, phi: &C::Mor) -> bool {
    descent_equations(a, &derived_cells(a), w, phi).holds()
}

/// Whether `m` is a morphism `(w, φ) → (w', φ')`.
pub fn is_descent_morphism<C: Category>(a: &TruncCosimp<C>, x: &DObj<C>, y: &DObj<C>, m: &C::Mor) -> bool {
    let (a1, a2) = (a.cat(0), a.cat(1));
    if a1.dom(m) != x.w || a1.cod(m) != y.w {
        return false;
    }
    a2.compose(&a.gen(Gen::d0).mor(m), &x.phi) == a2.compose(&y.phi, &a.gen(Gen::d1).mor(m))
}

/// The lax descent category over an explicit list of descent objects.
///
/// Operations accept every descent object; `objects` lists the chosen ones.
pub struct LaxDesc<C: Category> {
    a: Arc<TruncCosimp<C>>,
    cells: DerivedCells<C>,
    objects: Vec<DObj<C>>,
}

impl<C: Category> LaxDesc<C> {
    /// All `(w, φ)` with `w` from `ws`, in order of `ws` and then hom order of `φ`.
    pub fn new(a: Arc<TruncCosimp<C>>, ws: &[C::Obj]) -> Self {
        let cells = derived_cells(&a);
        let (d1, d0) = (a.gen(Gen::d1).clone(), a.gen(Gen::d0).clone());
        let a2 = a.cat(1).clone();
        let per_w: Vec<Vec<DObj<C>>> = ws
            .par_iter()
            .map(|w| {
                a2.hom(&d1.ob(w), &d0.ob(w))
                    .into_iter()
                    .filter(|phi| descent_equations(&a, &cells, w, phi).holds())
                    .map(|phi| DescObj { w: w.clone(), phi })
                    .collect()
            })
            .collect();
        LaxDesc { a, cells, objects: per_w.into_iter().flatten().collect() }
    }

    /// The given objects, which must be descent objects.
    pub fn with_objects(a: Arc<TruncCosimp<C>>, objects: Vec<DObj<C>>) -> Result<Self> {
        let cells = derived_cells(&a);
        for x in &objects {
            if !descent_equations(&a, &cells, &x.w, &x.phi).holds() {
                return Err(Error::NotDescentDatum(format!("{:?}", x.w)));
            }
        }
        Ok(LaxDesc { a, cells, objects })
    }

    pub fn pseudofunctor(&self) -> &Arc<TruncCosimp<C>> {
        &self.a
    }

    pub fn cells(&self) -> &DerivedCells<C> {
        &self.cells
    }

    pub fn is_datum(&self, w: &C::Obj, phi: &C::Mor) -> bool {
        descent_equations(&self.a, &self.cells, w, phi).holds()
    }

    pub fn arrow(&self, src: &DObj<C>, dst: &DObj<C>, m: C::Mor) -> Option<DMor<C>> {
        is_descent_morphism(&self.a, src, dst, &m).then(|| DescMor { src: src.clone(), dst: dst.clone(), m })
    }
}

impl<C: Category> Category for LaxDesc<C> {
    type Obj = DObj<C>;
    type Mor = DMor<C>;

    fn dom(&self, f: &DMor<C>) -> DObj<C> {
        f.src.clone()
    }
    fn cod(&self, f: &DMor<C>) -> DObj<C> {
        f.dst.clone()
    }
    fn id(&self, x: &DObj<C>) -> DMor<C> {
        DescMor { src: x.clone(), dst: x.clone(), m: self.a.cat(0).id(&x.w) }
    }
    fn compose(&self, g: &DMor<C>, f: &DMor<C>) -> DMor<C> {
        DescMor { src: f.src.clone(), dst: g.dst.clone(), m: self.a.cat(0).compose(&g.m, &f.m) }
    }
    fn hom(&self, x: &DObj<C>, y: &DObj<C>) -> Vec<DMor<C>> {
        self.a
            .cat(0)
            .hom(&x.w, &y.w)
            .into_iter()
            .filter_map(|m| self.arrow(x, y, m))
            .collect()
    }
    fn objects(&self) -> Vec<DObj<C>> {
        self.objects.clone()
    }
    fn inverse(&self, f: &DMor<C>) -> Option<DMor<C>> {
        let inv = self.a.cat(0).inverse(&f.m)?;
        Some(DescMor { src: f.dst.clone(), dst: f.src.clone(), m: inv })
    }
    fn is_iso(&self, f: &DMor<C>) -> bool {
        self.a.cat(0).is_iso(&f.m)
    }
}

impl<C: Category> Limits for LaxDesc<C> {}

/// The forgetful functor `d^A` and `ψ: A(d¹)∘d^A ⇒ A(d⁰)∘d^A`.
pub struct UniversalPair<C: Category> {
    pub d_a: Functor<LaxDesc<C>, C>,
    pub psi: NatTrans<LaxDesc<C>, C>,
}

impl<C: Category> Clone for UniversalPair<C> {
    fn clone(&self) -> Self {
        UniversalPair { d_a: self.d_a.clone(), psi: self.psi.clone() }
    }
}

/// `d^A` for a lax descent category.
pub fn forgetful<C: Category>(ld: &Arc<LaxDesc<C>>) -> Functor<LaxDesc<C>, C> {
    Functor::new(ld.clone(), ld.a.cat(0).clone(), |x: &DObj<C>| x.w.clone(), |f: &DMor<C>| f.m.clone())
}

/// The lax descent category on `ws` with its universal pair.
pub fn build_lax_descent<C: Category>(a: Arc<TruncCosimp<C>>, ws: &[C::Obj]) -> (Arc<LaxDesc<C>>, UniversalPair<C>) {
    let ld = Arc::new(LaxDesc::new(a.clone(), ws));
    let up = universal_pair(&ld);
    (ld, up)
}

pub fn universal_pair<C: Category>(ld: &Arc<LaxDesc<C>>) -> UniversalPair<C> {
    let a = ld.a.clone();
    let d_a = forgetful(ld);
    let src = d_a.then(a.gen(Gen::d1));
    let dst = d_a.then(a.gen(Gen::d0));
    let psi = NatTrans::new(src, dst, |x: &DObj<C>| x.phi.clone());
    UniversalPair { d_a, psi }
}

/// Naturality of `ψ` and both descent equations at every enumerated object.
pub fn check_universal_pair<C: Category>(a: &TruncCosimp<C>, up: &UniversalPair<C>) -> LawReport {
    let mut r = check_natural(&up.psi);
    let cells = derived_cells(a);
    for x in up.d_a.source().objects() {
        let w = up.d_a.ob(&x);
        let eqs = descent_equations(a, &cells, &w, &up.psi.at(&x));
        if !eqs.associativity {
            r.push(format!("descent associativity fails at {x:?}"));
        }
        if !eqs.identity {
            r.push(format!("descent identity fails at {x:?}"));
        }
    }
    r
}

/// The unique `F̌` with `d^A∘F̌ = F` and `ψ∗F̌ = β`.
pub fn factor_functor<S: Category, C: Category>(
    ld: &Arc<LaxDesc<C>>,
    f: &Functor<S, C>,
    beta: &NatTrans<S, C>,
) -> Result<Functor<S, LaxDesc<C>>> {
    let s = f.source().clone();
    for x in s.objects() {
        let w = f.ob(&x);
        if !ld.is_datum(&w, &beta.at(&x)) {
            return Err(Error::NotDescentDatum(format!("{x:?}")));
        }
    }
    let (f1, f2, b1) = (f.clone(), f.clone(), beta.clone());
    let lift = move |x: &S::Obj| DescObj { w: f1.ob(x), phi: b1.at(x) };
    let lift2 = lift.clone();
    let s2 = s.clone();
    Ok(Functor::new(s.clone(), ld.clone(), lift, move |m: &S::Mor| DescMor {
        src: lift2(&s2.dom(m)),
        dst: lift2(&s2.cod(m)),
        m: f2.mor(m),
    }))
}

/// The unique `ξ'` with `d^A∗ξ' = ξ`.
pub fn factor_2cell<S: Category, C: Category>(
    ld: &Arc<LaxDesc<C>>,
    f1c: &Functor<S, LaxDesc<C>>,
    f0c: &Functor<S, LaxDesc<C>>,
    xi: &NatTrans<S, C>,
) -> Result<NatTrans<S, LaxDesc<C>>> {
    for x in f1c.source().objects() {
        let (src, dst) = (f1c.ob(&x), f0c.ob(&x));
        if !is_descent_morphism(&ld.a, &src, &dst, &xi.at(&x)) {
            return Err(Error::NotDescentMorphism(format!("{x:?}")));
        }
    }
    let (g1, g0, xi) = (f1c.clone(), f0c.clone(), xi.clone());
    Ok(NatTrans::new(f1c.clone(), f0c.clone(), move |x| DescMor {
        src: g1.ob(x),
        dst: g0.ob(x),
        m: xi.at(x),
    }))
}

/// The chosen objects as a table category.
pub fn materialize_laxdesc<C: Category>(ld: &Arc<LaxDesc<C>>) -> Materialized<LaxDesc<C>> {
    materialize(ld)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog::{self, Monoid};
    use crate::fincat::{check_functor, functors_equal, is_conservative, FinCategory};
    use crate::finset::{basic_indexed_category, Slice, SliceObj};
    use crate::pseudo::{compose_indexed_with_precategory, sigma_precategory};

    fn constant_terminal() -> Arc<TruncCosimp<FinCategory>> {
        let t = Arc::new(FinCategory::terminal());
        let gens = Gen::ALL.iter().map(|&g| (g, Functor::identity(t.clone()))).collect();
        Arc::new(TruncCosimp::from_generators([t.clone(), t.clone(), t], &gens).unwrap())
    }

    fn sigma(m: &Monoid, bound: usize) -> Arc<TruncCosimp<Slice>> {
        Arc::new(compose_indexed_with_precategory(&basic_indexed_category(bound), &sigma_precategory(m)).unwrap())
    }

    #[test]
    fn constant_terminal_gives_terminal() {
        let a = constant_terminal();
        let (ld, up) = build_lax_descent(a.clone(), &[0]);
        assert_eq!(ld.objects().len(), 1);
        assert!(check_universal_pair(&a, &up).is_ok());
        assert!(is_descent_datum(&a, &0, &0));
    }

    #[test]
    fn m2_data_on_two_element_fiber() {
        let a = sigma(&Monoid::m2(), 4);
        // a two-element set; A(d¹)w = A(d⁰)w = m × w over m
        let one = SliceObj::new(vec![0, 0]);
        let ld = LaxDesc::new(a.clone(), &[one]);
        assert_eq!(ld.objects().len(), 3);
    }

    #[test]
    fn identity_equation_detects_mutation() {
        let a = sigma(&Monoid::cyclic(2), 2);
        let cells = derived_cells(&a);
        let w = SliceObj::new(vec![0, 0]);
        let a2 = a.cat(1);
        let cands = a2.hom(&a.gen(Gen::d1).ob(&w), &a.gen(Gen::d0).ob(&w));
        let bad: Vec<_> = cands
            .iter()
            .map(|p| descent_equations(&a, &cells, &w, p))
            .filter(|e| !e.identity)
            .collect();
        assert!(!bad.is_empty());
    }

    #[test]
    fn forgetful_is_faithful_and_conservative() {
        let a = sigma(&Monoid::m2(), 2);
        let ws = a.cat(0).objects();
        let (ld, up) = build_lax_descent(a.clone(), &ws);
        assert!(check_functor(&up.d_a).is_ok());
        assert!(is_conservative(&up.d_a));
        assert!(check_universal_pair(&a, &up).is_ok());
        // F = d^A with β = ψ factors as the identity
        let ident = factor_functor(&ld, &up.d_a, &up.psi).unwrap();
        assert!(functors_equal(&ident, &Functor::identity(ld.clone())).is_none());
    }

    #[test]
    fn nerve_instance_builds() {
        let fam = crate::pseudo::FamIndexed { x: Arc::new(catalog::arrow()), base_bound: 8 };
        let a = Arc::new(compose_indexed_with_precategory(&fam, &crate::pseudo::nerve(&catalog::arrow())).unwrap());
        let ws = a.cat(0).objects();
        let (ld, _) = build_lax_descent(a, &ws);
        // functors 𝟚 → 𝟚: three of them
        assert_eq!(ld.objects().len(), 3);
    }
}
