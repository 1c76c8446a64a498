use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{Category, FinCategory, Op};
use crate::error::{Error, Result};

type ObMap<S, T> = Arc<dyn Fn(&<S as Category>::Obj) -> <T as Category>::Obj + Send + Sync>;
type MorMap<S, T> = Arc<dyn Fn(&<S as Category>::Mor) -> <T as Category>::Mor + Send + Sync>;
type CompMap<S, T> = Arc<dyn Fn(&<S as Category>::Obj) -> <T as Category>::Mor + Send + Sync>;

/// A functor given by its action on objects and morphisms.
pub struct Functor<S: Category, T: Category> {
    source: Arc<S>,
    target: Arc<T>,
    ob: ObMap<S, T>,
    mor: MorMap<S, T>,
}

impl<S: Category, T: Category> Clone for Functor<S, T> {
    fn clone(&self) -> Self {
        Functor {
            source: self.source.clone(),
            target: self.target.clone(),
            ob: self.ob.clone(),
            mor: self.mor.clone(),
        }
    }
}

impl<S: Category, T: Category> std::fmt::Debug for Functor<S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Functor")
    }
}

impl<S: Category, T: Category> Functor<S, T> {
    pub fn new(
        source: Arc<S>,
        target: Arc<T>,
        ob: impl Fn(&S::Obj) -> T::Obj + Send + Sync + 'static,
        mor: impl Fn(&S::Mor) -> T::Mor + Send + Sync + 'static,
    ) -> Self {
        Functor { source, target, ob: Arc::new(ob), mor: Arc::new(mor) }
    }

    pub fn source(&self) -> &Arc<S> {
        &self.source
    }

    pub fn target(&self) -> &Arc<T> {
        &self.target
    }

    pub fn ob(&self, x: &S::Obj) -> T::Obj {
        (self.ob)(x)
    }

    pub fn mor(&self, f: &S::Mor) -> T::Mor {
        (self.mor)(f)
    }

    /// `g ∘ self`.
    pub fn then<U: Category>(&self, g: &Functor<T, U>) -> Functor<S, U> {
        let (f1, g1) = (self.clone(), g.clone());
        let (f2, g2) = (self.clone(), g.clone());
        Functor::new(
            self.source.clone(),
            g.target.clone(),
            move |x| g1.ob(&f1.ob(x)),
            move |m| g2.mor(&f2.mor(m)),
        )
    }

    /// The constant functor at `x`.
    pub fn constant(source: Arc<S>, target: Arc<T>, x: T::Obj) -> Self {
        let t = target.clone();
        let y = x.clone();
        Functor::new(source, target, move |_| x.clone(), move |_| t.id(&y))
    }

    /// Memoizes both actions. Worth it when evaluation computes pullbacks.
    pub fn cached(&self) -> Self {
        let obc: Arc<Mutex<HashMap<S::Obj, T::Obj>>> = Arc::default();
        let morc: Arc<Mutex<HashMap<S::Mor, T::Mor>>> = Arc::default();
        let (f1, f2) = (self.clone(), self.clone());
        Functor::new(
            self.source.clone(),
            self.target.clone(),
            move |x| {
                if let Some(y) = obc.lock().unwrap().get(x) {
                    return y.clone();
                }
                let y = f1.ob(x);
                obc.lock().unwrap().insert(x.clone(), y.clone());
                y
            },
            move |m| {
                if let Some(y) = morc.lock().unwrap().get(m) {
                    return y.clone();
                }
                let y = f2.mor(m);
                morc.lock().unwrap().insert(m.clone(), y.clone());
                y
            },
        )
    }

    /// The same functor between opposite categories.
    pub fn op(&self) -> Functor<Op<S>, Op<T>> {
        let (f1, f2) = (self.clone(), self.clone());
        Functor::new(
            Arc::new(Op::new(self.source.clone())),
            Arc::new(Op::new(self.target.clone())),
            move |x| f1.ob(x),
            move |m| f2.mor(m),
        )
    }
}

impl<S: Category> Functor<S, S> {
    pub fn identity(c: Arc<S>) -> Self {
        Functor::new(c.clone(), c, |x: &S::Obj| x.clone(), |m: &S::Mor| m.clone())
    }
}

impl<S: Category, T: Category> Functor<Op<S>, Op<T>> {
    pub fn unop(&self) -> Functor<S, T> {
        let (f1, f2) = (self.clone(), self.clone());
        Functor::new(
            self.source.inner().clone(),
            self.target.inner().clone(),
            move |x| f1.ob(x),
            move |m| f2.mor(m),
        )
    }
}

/// A functor between table categories, stored as tables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinFunctor {
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl FinFunctor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count()
            || morphism_map.len() != source.morphism_count()
            || object_map.iter().any(|&x| x >= target.object_count())
            || morphism_map.iter().any(|&f| f >= target.morphism_count())
        {
            return Err(Error::Structural("functor tables do not match source/target".into()));
        }
        Ok(FinFunctor { source, target, object_map, morphism_map })
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        FinFunctor {
            object_map: (0..c.object_count()).collect(),
            morphism_map: (0..c.morphism_count()).collect(),
            source: c.clone(),
            target: c,
        }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FinFunctor) -> FinFunctor {
        FinFunctor {
            source: self.source.clone(),
            target: g.target.clone(),
            object_map: self.object_map.iter().map(|&x| g.object_map[x]).collect(),
            morphism_map: self.morphism_map.iter().map(|&f| g.morphism_map[f]).collect(),
        }
    }

    pub fn to_functor(&self) -> Functor<FinCategory, FinCategory> {
        let (om, mm) = (self.object_map.clone(), self.morphism_map.clone());
        Functor::new(self.source.clone(), self.target.clone(), move |x| om[*x], move |f| mm[*f])
    }

    /// Tabulates a functor between table categories.
    pub fn materialize(f: &Functor<FinCategory, FinCategory>) -> FinFunctor {
        let s = f.source().clone();
        FinFunctor {
            object_map: (0..s.object_count()).map(|x| f.ob(&x)).collect(),
            morphism_map: (0..s.morphism_count()).map(|m| f.mor(&m)).collect(),
            target: f.target().clone(),
            source: s,
        }
    }
}

/// A natural transformation `source ⇒ target` given by its components.
pub struct NatTrans<S: Category, T: Category> {
    source: Functor<S, T>,
    target: Functor<S, T>,
    comp: CompMap<S, T>,
}

impl<S: Category, T: Category> Clone for NatTrans<S, T> {
    fn clone(&self) -> Self {
        NatTrans { source: self.source.clone(), target: self.target.clone(), comp: self.comp.clone() }
    }
}

impl<S: Category, T: Category> std::fmt::Debug for NatTrans<S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("NatTrans")
    }
}

impl<S: Category, T: Category> NatTrans<S, T> {
    pub fn new(
        source: Functor<S, T>,
        target: Functor<S, T>,
        comp: impl Fn(&S::Obj) -> T::Mor + Send + Sync + 'static,
    ) -> Self {
        NatTrans { source, target, comp: Arc::new(comp) }
    }

    /// Components looked up in a table; objects outside the table panic.
    pub fn from_table(source: Functor<S, T>, target: Functor<S, T>, table: HashMap<S::Obj, T::Mor>) -> Self {
        NatTrans::new(source, target, move |x| {
            table.get(x).cloned().unwrap_or_else(|| panic!("no component at {x:?}"))
        })
    }

    pub fn source(&self) -> &Functor<S, T> {
        &self.source
    }

    pub fn target(&self) -> &Functor<S, T> {
        &self.target
    }

    pub fn at(&self, x: &S::Obj) -> T::Mor {
        (self.comp)(x)
    }

    pub fn identity(f: &Functor<S, T>) -> Self {
        let g = f.clone();
        NatTrans::new(f.clone(), f.clone(), move |x| g.target().id(&g.ob(x)))
    }

    /// Vertical composite `self · alpha`.
    pub fn vertical(&self, alpha: &NatTrans<S, T>) -> NatTrans<S, T> {
        let (b, a) = (self.clone(), alpha.clone());
        NatTrans::new(alpha.source.clone(), self.target.clone(), move |x| {
            b.source.target().compose(&b.at(x), &a.at(x))
        })
    }

    /// Left whiskering `g ∗ self`.
    pub fn whisker_left<U: Category>(&self, g: &Functor<T, U>) -> NatTrans<S, U> {
        let (a, g1) = (self.clone(), g.clone());
        NatTrans::new(self.source.then(g), self.target.then(g), move |x| g1.mor(&a.at(x)))
    }

    /// Right whiskering `self ∗ f`.
    pub fn whisker_right<R: Category>(&self, f: &Functor<R, S>) -> NatTrans<R, T> {
        let (a, f1) = (self.clone(), f.clone());
        NatTrans::new(f.then(&self.source), f.then(&self.target), move |x| a.at(&f1.ob(x)))
    }

    /// Horizontal composite `beta ∗ self` for `self: F ⇒ G`, `beta: H ⇒ K`;
    /// component `β_{G x} ∘ H(α_x)`.
    pub fn horizontal<U: Category>(&self, beta: &NatTrans<T, U>) -> NatTrans<S, U> {
        let (a, b) = (self.clone(), beta.clone());
        NatTrans::new(self.source.then(&beta.source), self.target.then(&beta.target), move |x| {
            let g_x = a.target.ob(x);
            b.source.target().compose(&b.at(&g_x), &b.source.mor(&a.at(x)))
        })
    }

    /// The componentwise inverse. Components are inverted lazily and panic if
    /// one is not invertible; use [`NatTrans::is_invertible_at`] first.
    pub fn inverse(&self) -> NatTrans<S, T> {
        let a = self.clone();
        NatTrans::new(self.target.clone(), self.source.clone(), move |x| {
            let c = a.at(x);
            a.source.target().inverse(&c).unwrap_or_else(|| panic!("component at {x:?} is not invertible"))
        })
    }

    pub fn is_invertible_at(&self, x: &S::Obj) -> bool {
        self.source.target().is_iso(&self.at(x))
    }

    /// Invertibility at every enumerated object; the first failing object otherwise.
    pub fn invertibility_witness(&self) -> Option<S::Obj> {
        self.source.source().objects().into_iter().find(|x| !self.is_invertible_at(x))
    }

    /// Memoizes components.
    pub fn cached(&self) -> Self {
        let cache: Arc<Mutex<HashMap<S::Obj, T::Mor>>> = Arc::default();
        let a = self.clone();
        NatTrans::new(self.source.clone(), self.target.clone(), move |x| {
            if let Some(m) = cache.lock().unwrap().get(x) {
                return m.clone();
            }
            let m = a.at(x);
            cache.lock().unwrap().insert(x.clone(), m.clone());
            m
        })
    }

    /// The dual transformation `target^op ⇒ source^op`.
    pub fn op(&self) -> NatTrans<Op<S>, Op<T>> {
        let a = self.clone();
        NatTrans::new(self.target.op(), self.source.op(), move |x| a.at(x))
    }
}

impl<S: Category, T: Category> NatTrans<Op<S>, Op<T>> {
    pub fn unop(&self) -> NatTrans<S, T> {
        let a = self.clone();
        NatTrans::new(self.target.unop(), self.source.unop(), move |x| a.at(x))
    }
}

/// Which composite [`compose2`] forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compose2 {
    Vertical,
    Horizontal,
}

/// Composes two 2-cells between endofunctors of one category.
pub fn compose2<C: Category>(beta: &NatTrans<C, C>, alpha: &NatTrans<C, C>, mode: Compose2) -> NatTrans<C, C> {
    match mode {
        Compose2::Vertical => beta.vertical(alpha),
        Compose2::Horizontal => alpha.horizontal(beta),
    }
}

/// An adjunction `left ⊣ right` with `left: D → C`, `right: C → D`,
/// `unit: id ⇒ right∘left` and `counit: left∘right ⇒ id`.
pub struct Adjunction<C: Category, D: Category> {
    pub left: Functor<D, C>,
    pub right: Functor<C, D>,
    pub unit: NatTrans<D, D>,
    pub counit: NatTrans<C, C>,
}

impl<C: Category, D: Category> Clone for Adjunction<C, D> {
    fn clone(&self) -> Self {
        Adjunction {
            left: self.left.clone(),
            right: self.right.clone(),
            unit: self.unit.clone(),
            counit: self.counit.clone(),
        }
    }
}

impl<C: Category> Adjunction<C, C> {
    pub fn identity(c: Arc<C>) -> Self {
        let id = Functor::identity(c);
        Adjunction {
            left: id.clone(),
            right: id.clone(),
            unit: NatTrans::identity(&id),
            counit: NatTrans::identity(&id),
        }
    }
}
